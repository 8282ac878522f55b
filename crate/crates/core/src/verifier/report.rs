use crate::error::{Error, Result};
use crate::scalar::C64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

/// Group of identities that share an oracle and a default tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Orthogonality,
    Fourier,
    Parseval,
    Contiguous,
    Recurrences,
    Forms,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Orthogonality,
        Family::Fourier,
        Family::Parseval,
        Family::Contiguous,
        Family::Recurrences,
        Family::Forms,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Orthogonality => "orthogonality",
            Family::Fourier => "fourier",
            Family::Parseval => "parseval",
            Family::Contiguous => "contiguous",
            Family::Recurrences => "recurrences",
            Family::Forms => "forms",
        }
    }
}

macro_rules! identities {
    ($($v:ident = $s:literal, $fam:ident, $doc:literal;)*) => {
        /// Every identity the verifier knows how to check.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId {
            $(#[doc = $doc] $v,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$v,)*];

            pub fn as_str(self) -> &'static str {
                match self { $(IdentityId::$v => $s,)* }
            }

            pub fn family(self) -> Family {
                match self { $(IdentityId::$v => Family::$fam,)* }
            }

            pub fn description(self) -> &'static str {
                match self { $(IdentityId::$v => $doc,)* }
            }
        }

        impl FromStr for IdentityId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($s => Ok(IdentityId::$v),)*
                    _ => Err(Error::Parse(format!("unknown identity id {s:?}"))),
                }
            }
        }
    };
}

identities! {
    OrtGegen = "ORT_GEGEN", Orthogonality, "Gegenbauer Gram matrix against the closed norms";
    OrtJacobi = "ORT_JACOBI", Orthogonality, "Jacobi Gram matrix against the closed norms";
    OrtLaguerre = "ORT_LAGUERRE", Orthogonality, "Laguerre Gram matrix against the closed norms";
    OrtBall = "ORT_BALL", Orthogonality, "ball basis Gram matrix against the ball norm";
    OrtParaJ = "ORT_PARA_J", Orthogonality, "Jacobi paraboloid basis Gram matrix";
    OrtParaL = "ORT_PARA_L", Orthogonality, "Laguerre paraboloid basis Gram matrix";
    FourierJ = "FOURIER_J", Fourier, "closed-form transform of the Jacobi wrapped function vs quadrature";
    FourierL = "FOURIER_L", Fourier, "closed-form transform of the Laguerre wrapped function vs quadrature";
    ParsevalA = "PARSEVAL_A", Parseval, "A-family orthogonality integral vs its constant";
    ParsevalB = "PARSEVAL_B", Parseval, "B-family orthogonality integral vs its constant";
    ContigAI = "CONTIG_A_I", Contiguous, "A relation (i), eta2 shift";
    ContigAIi = "CONTIG_A_II", Contiguous, "A relation (ii), mixed zeta2/eta shifts";
    ContigAIii = "CONTIG_A_III", Contiguous, "A relation (iii), degree-lowering mixed shifts";
    ContigAIv = "CONTIG_A_IV", Contiguous, "A relation (iv) as printed, with the extra gamma-argument factor";
    ContigAIvAmended = "CONTIG_A_IV_AMENDED", Contiguous, "A relation (iv) without the extra factor";
    ContigAV = "CONTIG_A_V", Contiguous, "A relation (v), zeta2 shift";
    ContigAVi = "CONTIG_A_VI", Contiguous, "A relation (vi), zeta2/eta2 shifts";
    ContigAVii = "CONTIG_A_VII", Contiguous, "A relation (vii), t -> t-2";
    ContigBI = "CONTIG_B_I", Contiguous, "B relation (i), t and zeta1 shifts";
    ContigBIi = "CONTIG_B_II", Contiguous, "B relation (ii), zeta2 and t shifts";
    ContigBIii = "CONTIG_B_III", Contiguous, "B relation (iii), zeta1 up zeta2 down";
    ContigBIv = "CONTIG_B_IV", Contiguous, "B relation (iv), zeta2 down";
    ContigBV = "CONTIG_B_V", Contiguous, "B relation (v), zeta1 up zeta2 down";
    ContigBVi = "CONTIG_B_VI", Contiguous, "B relation (vi), three-term in m";
    ContigBVii = "CONTIG_B_VII", Contiguous, "B relation (vii), zeta2 up";
    Rec1I = "REC1_I", Recurrences, "2F1 relation (i)";
    Rec1Ii = "REC1_II", Recurrences, "2F1 relation (ii)";
    Rec1Iii = "REC1_III", Recurrences, "2F1 relation (iii)";
    Rec1Iv = "REC1_IV", Recurrences, "2F1 relation (iv)";
    Rec1V = "REC1_V", Recurrences, "2F1 relation (v)";
    Rec1Vi = "REC1_VI", Recurrences, "2F1 relation (vi)";
    Rec1Vii = "REC1_VII", Recurrences, "2F1 relation (vii)";
    Rec2I = "REC2_I", Recurrences, "3F2 relation (i)";
    Rec2Ii = "REC2_II", Recurrences, "3F2 relation (ii)";
    Rec2Iii = "REC2_III", Recurrences, "3F2 relation (iii)";
    Rec2Iv = "REC2_IV", Recurrences, "3F2 relation (iv) as printed, coefficient gamma(beta-alpha)z";
    Rec2IvAmended = "REC2_IV_AMENDED", Recurrences, "3F2 relation (iv) with coefficient gamma(alpha-beta)z";
    Rec2V = "REC2_V", Recurrences, "3F2 relation (v)";
    Rec2Vi = "REC2_VI", Recurrences, "3F2 relation (vi)";
    Rec2Vii = "REC2_VII", Recurrences, "3F2 relation (vii), at z = 1";
    FormEquivPhi = "FORM_EQUIV_PHI", Forms, "phi factor: 3F2 form vs continuous Hahn form";
    FormEquivD = "FORM_EQUIV_D", Forms, "D family: 3F2 form vs continuous Hahn form";
    FormEquivA = "FORM_EQUIV_A", Forms, "A family: 3F2 form vs continuous Hahn form";
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for IdentityId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Non-finite values go out as JSON null and come back as NaN.
mod lossy_f64 {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if x.is_finite() {
            s.serialize_f64(*x)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    #[serde(with = "lossy_f64")]
    pub re: f64,
    #[serde(with = "lossy_f64")]
    pub im: f64,
}

impl From<C64> for ComplexValue {
    fn from(z: C64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexValue> for C64 {
    fn from(z: ComplexValue) -> Self {
        C64::new(z.re, z.im)
    }
}

impl fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.re, self.im)
    }
}

/// One checked instance of an identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: IdentityId,
    pub d: usize,
    pub m: u32,
    pub m2: u32,
    pub k: Vec<u32>,
    pub k2: Vec<u32>,
    pub params: BTreeMap<String, f64>,
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    #[serde(with = "lossy_f64")]
    pub abs_residual: f64,
    #[serde(with = "lossy_f64")]
    pub rel_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped_reason: Option<String>,
    /// Set when an oracle failed outright (e.g. quadrature never converged).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub nodes: usize,
    pub seconds: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Failed,
    Skipped,
}

impl VerificationReport {
    pub fn outcome(&self) -> Outcome {
        if self.skipped_reason.is_some() {
            Outcome::Skipped
        } else if self.passed {
            Outcome::Passed
        } else {
            Outcome::Failed
        }
    }

    /// Residual used for the verdict.
    pub fn residual(&self) -> f64 {
        self.rel_residual
    }
}

/// How lhs and rhs are compared.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Residual {
    /// |lhs − rhs| / |rhs|.
    Relative,
    /// |lhs − rhs| / max(|lhs|, |rhs|).
    Symmetric,
    /// The rhs is an exact zero; |lhs − rhs| / scale.
    Scaled(f64),
}

/// Everything about a case except its outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseHeader {
    pub id: IdentityId,
    pub d: usize,
    pub m: u32,
    pub m2: u32,
    pub k: Vec<u32>,
    pub k2: Vec<u32>,
    pub params: BTreeMap<String, f64>,
    pub tolerance: f64,
}

impl CaseHeader {
    pub fn new(id: IdentityId, d: usize, tolerance: f64) -> Self {
        Self {
            id,
            d,
            m: 0,
            m2: 0,
            k: Vec::new(),
            k2: Vec::new(),
            params: BTreeMap::new(),
            tolerance,
        }
    }

    pub fn degrees(mut self, m: u32, m2: u32) -> Self {
        self.m = m;
        self.m2 = m2;
        self
    }

    pub fn indices(mut self, k: &[u32], k2: &[u32]) -> Self {
        self.k = k.to_vec();
        self.k2 = k2.to_vec();
        self
    }

    pub fn param(mut self, name: &str, v: f64) -> Self {
        self.params.insert(name.to_string(), v);
        self
    }

    pub fn complex_param(self, name: &str, z: C64) -> Self {
        self.param(&format!("{name}_re"), z.re)
            .param(&format!("{name}_im"), z.im)
    }

    fn blank(self) -> VerificationReport {
        let nan = ComplexValue {
            re: f64::NAN,
            im: f64::NAN,
        };
        VerificationReport {
            identity_id: self.id,
            d: self.d,
            m: self.m,
            m2: self.m2,
            k: self.k,
            k2: self.k2,
            params: self.params,
            lhs: nan,
            rhs: nan,
            abs_residual: f64::NAN,
            rel_residual: f64::NAN,
            tolerance: self.tolerance,
            passed: false,
            skipped_reason: None,
            error: None,
            nodes: 0,
            seconds: 0.0,
        }
    }

    pub fn finish(
        self,
        lhs: C64,
        rhs: C64,
        how: Residual,
        nodes: usize,
        seconds: f64,
    ) -> VerificationReport {
        let tol = self.tolerance;
        let diff = (lhs - rhs).norm();
        let (abs, rel) = match how {
            Residual::Relative => (diff, ratio(diff, rhs.norm())),
            Residual::Symmetric => (diff, ratio(diff, lhs.norm().max(rhs.norm()))),
            Residual::Scaled(scale) => {
                let s = ratio(diff, scale);
                (s, s)
            }
        };
        let mut r = self.blank();
        r.lhs = lhs.into();
        r.rhs = rhs.into();
        r.abs_residual = abs;
        r.rel_residual = rel;
        r.passed = rel <= tol;
        r.nodes = nodes;
        r.seconds = seconds;
        r
    }

    /// Poles become skips; anything else is a failed case carrying the error.
    pub fn failure(self, err: &Error, seconds: f64) -> VerificationReport {
        let mut r = self.blank();
        match err {
            Error::Pole { .. } | Error::DenominatorPole { .. } => {
                r.skipped_reason = Some(err.to_string())
            }
            _ => r.error = Some(err.to_string()),
        }
        r.seconds = seconds;
        r
    }

    pub fn skipped(self, reason: String) -> VerificationReport {
        let mut r = self.blank();
        r.skipped_reason = Some(reason);
        r
    }

    /// Runs `f` and turns its result into a report.
    pub fn run<F>(self, how: Residual, f: F) -> VerificationReport
    where
        F: FnOnce() -> Result<(C64, C64, usize)>,
    {
        let start = Instant::now();
        let out = f();
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok((lhs, rhs, nodes)) => self.finish(lhs, rhs, how, nodes, secs),
            Err(e) => self.failure(&e, secs),
        }
    }
}

fn ratio(num: f64, den: f64) -> f64 {
    if num == 0.0 {
        0.0
    } else {
        num / den
    }
}
