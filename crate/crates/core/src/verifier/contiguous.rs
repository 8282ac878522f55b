//! Contiguous relations of A and B, and the 2F1/3F2 relations they come from.
//!
//! Pure series arithmetic: each side is composed from the evaluators at the
//! shifted parameters exactly as the relation is written.

use super::report::{CaseHeader, IdentityId, Residual, VerificationReport};
use crate::bases::MultiIndex;
use crate::error::{Error, Result};
use crate::hypergeometric::{hyp2f1, hyp3f2};
use crate::scalar::{c64, nonpositive_integer_near, C64};
use crate::transform::{eval_a, eval_b, SplitParams};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Minimum distance of any gamma argument or denominator parameter from a pole.
pub const POLE_MARGIN: f64 = 0.05;

fn r(x: f64) -> C64 {
    c64(x, 0.0)
}

fn near_pole(z: C64) -> bool {
    nonpositive_integer_near(z, POLE_MARGIN).is_some()
}

pub const A_RELATIONS: [IdentityId; 8] = [
    IdentityId::ContigAI,
    IdentityId::ContigAIi,
    IdentityId::ContigAIii,
    IdentityId::ContigAIv,
    IdentityId::ContigAIvAmended,
    IdentityId::ContigAV,
    IdentityId::ContigAVi,
    IdentityId::ContigAVii,
];

pub const B_RELATIONS: [IdentityId; 7] = [
    IdentityId::ContigBI,
    IdentityId::ContigBIi,
    IdentityId::ContigBIii,
    IdentityId::ContigBIv,
    IdentityId::ContigBV,
    IdentityId::ContigBVi,
    IdentityId::ContigBVii,
];

pub const REC1_RELATIONS: [IdentityId; 7] = [
    IdentityId::Rec1I,
    IdentityId::Rec1Ii,
    IdentityId::Rec1Iii,
    IdentityId::Rec1Iv,
    IdentityId::Rec1V,
    IdentityId::Rec1Vi,
    IdentityId::Rec1Vii,
];

pub const REC2_RELATIONS: [IdentityId; 8] = [
    IdentityId::Rec2I,
    IdentityId::Rec2Ii,
    IdentityId::Rec2Iii,
    IdentityId::Rec2Iv,
    IdentityId::Rec2IvAmended,
    IdentityId::Rec2V,
    IdentityId::Rec2Vi,
    IdentityId::Rec2Vii,
];

/// A random point for the A/B relations.
#[derive(Debug, Clone, PartialEq)]
pub struct AbDraw {
    pub m: u32,
    pub k: MultiIndex,
    pub p: SplitParams,
    pub t: C64,
    pub x: Vec<C64>,
    /// A μ the caller wants instead of α₁ + α₂ − 1/2. Never honoured; flagged.
    pub mu_override: Option<f64>,
}

fn unit_square(rng: &mut ChaCha8Rng) -> C64 {
    c64(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

impl AbDraw {
    /// Parameters in (0.3, 2.5), t and x in the unit square, m − |k| ∈ {1, 2, 3};
    /// redrawn until every argument clears the pole margin.
    pub fn random(rng: &mut ChaCha8Rng, d: usize) -> Self {
        loop {
            let k =
                MultiIndex::new((0..d).map(|_| rng.random_range(0..=2)).collect()).expect("d >= 1");
            let m = k.total() + rng.random_range(1..=3);
            let mut v = [0.0; 6];
            for x in &mut v {
                *x = rng.random_range(0.3..2.5);
            }
            let p = SplitParams::new(v[0], v[1], v[2], v[3], v[4], v[5]).expect("positive draws");
            let t = unit_square(rng);
            let x = (0..d).map(|_| unit_square(rng)).collect();
            let draw = AbDraw {
                m,
                k,
                p,
                t,
                x,
                mu_override: None,
            };
            if draw.clear_of_poles() {
                return draw;
            }
        }
    }

    fn clear_of_poles(&self) -> bool {
        let n = self.k.total() as f64;
        let p = &self.p;
        // A: Γ(|k|/2 + ζ₁ − t/2) and B: Γ(ζ₁ + |k|/2 − t), each shifted by up to one
        let sa = r(n / 2.0 + p.zeta1) - self.t / 2.0;
        let sb = r(n / 2.0 + p.zeta1) - self.t;
        for s in [sa, sb] {
            for shift in [-1.0, 0.0, 1.0] {
                if near_pole(s + shift) {
                    return false;
                }
            }
        }
        // B(ζ₂ − 1) has denominator |k| + |ζ| − 1
        if near_pole(r(n + p.abs_zeta() - 1.0)) {
            return false;
        }
        let d = self.k.dim();
        for j in 1..=d {
            let a1 = p.alpha1 + self.k.tail(j + 1) as f64 / 2.0 + (d - j) as f64 / 4.0;
            let xj = self.x[j - 1];
            if near_pole(r(a1) + xj / 2.0) || near_pole(r(a1) - xj / 2.0) {
                return false;
            }
        }
        true
    }

    fn header(&self, id: IdentityId, tol: f64) -> CaseHeader {
        let mut h = CaseHeader::new(id, self.k.dim(), tol)
            .degrees(self.m, self.m)
            .indices(self.k.entries(), self.k.entries());
        let family_b = B_RELATIONS.contains(&id);
        for (name, v) in self.p.named() {
            if !family_b || !name.starts_with("eta") {
                h = h.param(name, v);
            }
        }
        h = h.param("mu", self.p.mu()).complex_param("t", self.t);
        for (j, &xj) in self.x.iter().enumerate() {
            h = h.complex_param(&format!("x{}", j + 1), xj);
        }
        if let Some(mu) = self.mu_override {
            h = h.param("mu_override", mu);
        }
        h
    }
}

/// Parameters with the given shifts, bypassing the positivity check.
fn shifted(p: &SplitParams, z1: f64, z2: f64, e1: f64, e2: f64) -> SplitParams {
    SplitParams {
        zeta1: p.zeta1 + z1,
        zeta2: p.zeta2 + z2,
        eta1: p.eta1 + e1,
        eta2: p.eta2 + e2,
        ..*p
    }
}

/// Degrees below |k| are taken as zero, so a term (m − |k|) A_{m−1} drops
/// out at m = |k|.
fn below_range(m: i64, k: &MultiIndex) -> Option<C64> {
    (m < k.total() as i64).then(|| c64(0.0, 0.0))
}

/// Both sides of an A relation.
pub fn a_relation(id: IdentityId, w: &AbDraw) -> Result<(C64, C64)> {
    let (m, k, p, t, x) = (w.m, &w.k, &w.p, w.t, &w.x);
    let a = |mm: i64, tt: C64, q: SplitParams| {
        below_range(mm, k).map_or_else(|| eval_a(mm as u32, k, &q, tt, x), Ok)
    };
    let kk = k.total() as f64;
    let h = kk / 2.0;
    let (mf, mi) = (m as f64, m as i64);
    let (z, e) = (p.abs_zeta(), p.abs_eta());
    let s = |dz1, dz2, de1, de2| shifted(p, dz1, dz2, de1, de2);
    let base = s(0.0, 0.0, 0.0, 0.0);
    Ok(match id {
        IdentityId::ContigAI => (
            (mf + z + e - 1.0) * a(mi, t, s(0.0, 0.0, 0.0, 1.0))?
                + (mf - kk) * a(mi - 1, t, s(0.0, 0.0, 0.0, 1.0))?,
            (2.0 * mf - kk + z + e - 1.0) * a(mi, t, base)?,
        ),
        IdentityId::ContigAIi => (
            (h + p.zeta2 - p.eta1) * a(mi, t, s(0.0, 1.0, 1.0, -2.0))?
                + (h + p.zeta1 + p.eta1) * a(mi, t, s(0.0, 1.0, 0.0, -1.0))?,
            (kk + z) * a(mi, t, s(0.0, 0.0, 1.0, -1.0))?,
        ),
        IdentityId::ContigAIii => (
            (mf - kk) * (h + p.zeta2 - p.eta1) * a(mi - 1, t, s(0.0, 1.0, 1.0, -1.0))?
                + (h + p.zeta1 + p.eta1) * (mf + z) * a(mi, t, s(0.0, 1.0, 0.0, -1.0))?,
            (kk + z) * (-h + p.zeta1 + p.eta1 + mf) * a(mi, t, s(0.0, 0.0, 1.0, -1.0))?,
        ),
        IdentityId::ContigAIv | IdentityId::ContigAIvAmended => {
            let extra = if id == IdentityId::ContigAIv {
                r(h + p.zeta1) - t / 2.0
            } else {
                r(1.0)
            };
            let e2 = s(0.0, 0.0, 0.0, 1.0);
            (
                (kk - 2.0 * mf - z - e + 1.0) * extra * a(mi - 1, t, s(1.0, 0.0, 0.0, 1.0))?,
                (kk + z) * (h + p.zeta1 + p.eta1) * (a(mi, t, e2)? - a(mi - 1, t, e2)?),
            )
        }
        IdentityId::ContigAV => (
            (mf + z + e - 1.0) * (mf + z) * a(mi, t, s(0.0, 1.0, 0.0, 0.0))?,
            (kk - mf) * (kk - mf - e + 1.0) * a(mi - 1, t, s(0.0, 1.0, 0.0, 0.0))?
                + (2.0 * mf - kk + z + e - 1.0) * (kk + z) * a(mi, t, base)?,
        ),
        IdentityId::ContigAVi => (
            (mf + z) * a(mi, t, s(0.0, 1.0, 0.0, -1.0))?
                + (kk - mf) * a(mi - 1, t, s(0.0, 1.0, 0.0, 0.0))?,
            (kk + z) * a(mi, t, base)?,
        ),
        IdentityId::ContigAVii => (
            a(mi, t - 2.0, base)?,
            (r(h + p.zeta1) - t / 2.0) * a(mi, t, base)?
                + (kk - mf) * (mf + z + e - 1.0) / ((kk + z) * (h + p.zeta1 + p.eta1))
                    * a(mi - 1, t, s(1.0, 0.0, 0.0, 1.0))?,
        ),
        _ => return Err(Error::Domain(format!("{id} is not an A relation"))),
    })
}

/// Both sides of a B relation.
pub fn b_relation(id: IdentityId, w: &AbDraw) -> Result<(C64, C64)> {
    let (m, k, p, t, x) = (w.m, &w.k, &w.p, w.t, &w.x);
    let b = |mm: i64, tt: C64, q: SplitParams| {
        below_range(mm, k).map_or_else(|| eval_b(mm as u32, k, &q, tt, x), Ok)
    };
    let kk = k.total() as f64;
    let h = kk / 2.0;
    let (mf, mi) = (m as f64, m as i64);
    let z = p.abs_zeta();
    let s = |dz1, dz2| shifted(p, dz1, dz2, 0.0, 0.0);
    let base = s(0.0, 0.0);
    Ok(match id {
        IdentityId::ContigBI => (
            (kk + 2.0 * p.zeta2 + 2.0 * t) * b(mi, t + 1.0, s(1.0, 0.0))?,
            (kk + z) * (b(mi, t, base)? + b(mi + 1, t, base)?),
        ),
        IdentityId::ContigBIi => (
            2.0 * (z + mf) * b(mi, t, s(0.0, 1.0))? - (kk + z) * b(mi, t, base)?,
            (kk + z) * (r(h + p.zeta1 - 1.0) - t) * b(mi, t + 1.0, base)?,
        ),
        IdentityId::ContigBIii => (
            (mf - kk) * b(mi - 1, t, base)? + b(mi, t, s(1.0, -1.0))?,
            (r(mf - h + p.zeta1) - t) * b(mi, t, base)?,
        ),
        IdentityId::ContigBIv => (
            (mf + z - 1.0) * b(mi, t, base)? + (kk - mf) * b(mi - 1, t, base)?,
            (kk + z - 1.0) * b(mi, t, s(0.0, -1.0))?,
        ),
        IdentityId::ContigBV => (
            b(mi, t, s(1.0, -1.0))? + (r(h + p.zeta2 - 1.0) + t) * b(mi, t, base)?,
            (kk + z - 1.0) * b(mi, t, s(0.0, -1.0))?,
        ),
        IdentityId::ContigBVi => (
            (r(p.zeta1 - p.zeta2) - 2.0 * t) * b(mi, t, base)? + (mf + z) * b(mi + 1, t, base)?,
            (mf - kk) * b(mi - 1, t, base)?,
        ),
        IdentityId::ContigBVii => (
            (r(2.0 * p.zeta2 + mf) + 2.0 * t) * b(mi - 1, t, s(0.0, 1.0))?
                - (mf + z) * b(mi, t, s(0.0, 1.0))?,
            (kk + z) * b(mi - 1, t, base)?,
        ),
        _ => return Err(Error::Domain(format!("{id} is not a B relation"))),
    })
}

/// The binding μ = α₁ + α₂ − 1/2 is fixed; an explicit different μ is flagged.
pub fn mu_binding_violation(p: &SplitParams, mu: Option<f64>) -> Option<String> {
    let mu = mu?;
    let bound = p.mu();
    if (mu - bound).abs() > 1e-12 * bound.abs().max(1.0) {
        Some(format!(
            "mu = {mu} overrides the binding alpha1 + alpha2 - 1/2 = {bound}"
        ))
    } else {
        None
    }
}

/// CONTIG_A_* / CONTIG_B_* at one draw.
pub fn check_contiguous(id: IdentityId, w: &AbDraw, tol: f64) -> VerificationReport {
    let h = w.header(id, tol);
    if let Some(reason) = mu_binding_violation(&w.p, w.mu_override) {
        return h.skipped(reason);
    }
    h.run(Residual::Symmetric, || {
        let (l, r) = if A_RELATIONS.contains(&id) {
            a_relation(id, w)?
        } else {
            b_relation(id, w)?
        };
        Ok((l, r, 0))
    })
}

/// A random point for the 2F1 / 3F2 relations.
#[derive(Debug, Clone, PartialEq)]
pub struct HypDraw {
    /// Numerator parameters (a, b) or (α, β, γ).
    pub num: Vec<C64>,
    /// Denominator parameters (c) or (δ, ε).
    pub den: Vec<C64>,
    pub z: C64,
}

impl HypDraw {
    /// 2F1 draw. Even draws terminate (a = −N) at z = 2; odd draws are
    /// non-terminating with |z| < 0.95.
    pub fn rec1(rng: &mut ChaCha8Rng, terminating: bool) -> Self {
        loop {
            let (a, z) = if terminating {
                (r(-(rng.random_range(1..=6) as f64)), r(2.0))
            } else {
                let rad = rng.random_range(0.0..0.95);
                let (s, c) = rng.random_range(0.0..std::f64::consts::TAU).sin_cos();
                (r(rng.random_range(0.3..2.5)), c64(rad * c, rad * s))
            };
            let b = unit_square(rng) + 1.0;
            let c = r(rng.random_range(0.3..2.5));
            if !near_pole(c - 1.0) {
                return HypDraw {
                    num: vec![a, b],
                    den: vec![c],
                    z,
                };
            }
        }
    }

    /// Terminating 3F2 draw at z = 1 with α = −N.
    pub fn rec2(rng: &mut ChaCha8Rng) -> Self {
        let al = r(-(rng.random_range(1..=6) as f64));
        let be = r(rng.random_range(0.3..2.5));
        let ga = unit_square(rng) + 1.0;
        let de = r(rng.random_range(0.3..2.5));
        let ep = r(rng.random_range(0.3..2.5));
        HypDraw {
            num: vec![al, be, ga],
            den: vec![de, ep],
            z: r(1.0),
        }
    }

    fn header(&self, id: IdentityId, tol: f64) -> CaseHeader {
        let names: &[&str] = if self.num.len() == 2 {
            &["a", "b", "c"]
        } else {
            &["alpha", "beta", "gamma", "delta", "epsilon"]
        };
        let mut h = CaseHeader::new(id, 1, tol);
        for (name, v) in names.iter().zip(self.num.iter().chain(&self.den)) {
            h = h.complex_param(name, *v);
        }
        h.complex_param("z", self.z)
    }
}

/// Both sides of a 2F1 relation.
pub fn rec1_relation(id: IdentityId, w: &HypDraw) -> Result<(C64, C64)> {
    let (a, b, c, z) = (w.num[0], w.num[1], w.den[0], w.z);
    let f = |a: C64, b: C64, c: C64| hyp2f1(a, b, c, z);
    let one = r(1.0);
    Ok(match id {
        IdentityId::Rec1I => (
            (one - z) * f(a, b, c)?,
            f(a - 1.0, b, c)? - (c - b) / c * z * f(a, b, c + 1.0)?,
        ),
        IdentityId::Rec1Ii => (
            (one - z) * f(a, b, c)?,
            f(a, b - 1.0, c)? - (c - a) / c * z * f(a, b, c + 1.0)?,
        ),
        IdentityId::Rec1Iii => (
            (a - b) * f(a, b, c)?,
            a * f(a + 1.0, b, c)? - b * f(a, b + 1.0, c)?,
        ),
        IdentityId::Rec1Iv => (
            (a - c + 1.0) * f(a, b, c)?,
            a * f(a + 1.0, b, c)? - (c - 1.0) * f(a, b, c - 1.0)?,
        ),
        IdentityId::Rec1V => (
            (b - c + 1.0) * f(a, b, c)?,
            b * f(a, b + 1.0, c)? - (c - 1.0) * f(a, b, c - 1.0)?,
        ),
        IdentityId::Rec1Vi => (
            (2.0 * a - c + z * (b - a)) * f(a, b, c)?,
            a * (one - z) * f(a + 1.0, b, c)? + (a - c) * f(a - 1.0, b, c)?,
        ),
        IdentityId::Rec1Vii => (
            ((c - b) * z - a) * f(a + 1.0, b, c + 1.0)?,
            c * (z - 1.0) * f(a + 1.0, b, c)? + (c - a) * f(a, b, c + 1.0)?,
        ),
        _ => return Err(Error::Domain(format!("{id} is not a 2F1 relation"))),
    })
}

/// Both sides of a 3F2 relation.
pub fn rec2_relation(id: IdentityId, w: &HypDraw) -> Result<(C64, C64)> {
    let (al, be, ga, de, ep, z) = (w.num[0], w.num[1], w.num[2], w.den[0], w.den[1], w.z);
    let f = |a: C64, b: C64, c: C64, d: C64, e: C64| hyp3f2([a, b, c], [d, e], z);
    Ok(match id {
        IdentityId::Rec2I => (
            be * f(al, be + 1.0, ga, de, ep)? - al * f(al + 1.0, be, ga, de, ep)?,
            (be - al) * f(al, be, ga, de, ep)?,
        ),
        IdentityId::Rec2Ii => (
            de * f(al, be, ga, de, ep + 1.0)? - ep * f(al, be, ga, de + 1.0, ep)?,
            (de - ep) * f(al, be, ga, de + 1.0, ep + 1.0)?,
        ),
        IdentityId::Rec2Iii => (
            ep * (de - al) * f(al, be, ga, de + 1.0, ep)?
                - de * (ep - al) * f(al, be, ga, de, ep + 1.0)?,
            al * (de - ep) * f(al + 1.0, be, ga, de + 1.0, ep + 1.0)?,
        ),
        IdentityId::Rec2Iv | IdentityId::Rec2IvAmended => {
            let coef = if id == IdentityId::Rec2Iv {
                be - al
            } else {
                al - be
            };
            (
                ga * coef * z * f(al + 1.0, be + 1.0, ga + 1.0, de + 1.0, ep + 1.0)?,
                de * ep * (f(al, be + 1.0, ga, de, ep)? - f(al + 1.0, be, ga, de, ep)?),
            )
        }
        IdentityId::Rec2V => (
            al * (de - be) * f(al + 1.0, be, ga, de + 1.0, ep)?
                - be * (de - al) * f(al, be + 1.0, ga, de + 1.0, ep)?,
            de * (al - be) * f(al, be, ga, de, ep)?,
        ),
        IdentityId::Rec2Vi => (
            de * f(al, be, ga, de, ep)? + (al - de) * f(al, be, ga, de + 1.0, ep)?,
            al * f(al + 1.0, be, ga, de + 1.0, ep)?,
        ),
        IdentityId::Rec2Vii => (
            al * be / (de * ep) * f(al + 1.0, be + 1.0, ga + 1.0, de + 1.0, ep + 1.0)?,
            f(al, be, ga + 1.0, de, ep)? - f(al, be, ga, de, ep)?,
        ),
        _ => return Err(Error::Domain(format!("{id} is not a 3F2 relation"))),
    })
}

/// REC1_* / REC2_* at one draw.
pub fn check_recurrence(id: IdentityId, w: &HypDraw, tol: f64) -> VerificationReport {
    w.header(id, tol).run(Residual::Symmetric, || {
        let (l, r) = if REC1_RELATIONS.contains(&id) {
            rec1_relation(id, w)?
        } else {
            rec2_relation(id, w)?
        };
        Ok((l, r, 0))
    })
}
