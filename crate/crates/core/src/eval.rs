//! Single-point evaluation of any of the library's functions, for the
//! `pfverify eval` subcommand.

use crate::bases::{
    eval_paraboloid_jacobi, eval_paraboloid_laguerre, MultiIndex, ParaboloidJacobiSpec,
    ParaboloidLaguerreSpec, ParaboloidPoint,
};
use crate::error::{Error, Result};
use crate::scalar::{c64, C64};
use crate::transform::{
    eval_a, eval_b, eval_d, eval_g, eval_h_jacobi, eval_h_laguerre, fourier_g_closed,
    fourier_h_jacobi_closed, fourier_h_laguerre_closed, lambda_factor, phi_factor, theta_factor,
    FrequencyPoint, SplitParams, WrapParamsJacobi, WrapParamsLaguerre,
};
use crate::verifier::contiguous::mu_binding_violation;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalFn {
    G,
    HJacobi,
    HLaguerre,
    Q,
    R,
    A,
    B,
    D,
    FourierJ,
    FourierL,
    FourierG,
    Phi,
    Theta,
    Lambda,
}

impl EvalFn {
    pub const ALL: [EvalFn; 14] = [
        EvalFn::G,
        EvalFn::HJacobi,
        EvalFn::HLaguerre,
        EvalFn::Q,
        EvalFn::R,
        EvalFn::A,
        EvalFn::B,
        EvalFn::D,
        EvalFn::FourierJ,
        EvalFn::FourierL,
        EvalFn::FourierG,
        EvalFn::Phi,
        EvalFn::Theta,
        EvalFn::Lambda,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EvalFn::G => "g",
            EvalFn::HJacobi => "hJ",
            EvalFn::HLaguerre => "hL",
            EvalFn::Q => "Q",
            EvalFn::R => "R",
            EvalFn::A => "A",
            EvalFn::B => "B",
            EvalFn::D => "D",
            EvalFn::FourierJ => "fourierJ",
            EvalFn::FourierL => "fourierL",
            EvalFn::FourierG => "fourierG",
            EvalFn::Phi => "phi",
            EvalFn::Theta => "theta",
            EvalFn::Lambda => "lambda",
        }
    }
}

impl fmt::Display for EvalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EvalFn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        EvalFn::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = EvalFn::ALL.iter().map(|f| f.as_str()).collect();
                Error::Parse(format!(
                    "unknown function {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

const PARAM_NAMES: [&str; 13] = [
    "alpha", "mu", "zeta", "eta", "beta", "gamma", "alpha1", "alpha2", "zeta1", "zeta2", "eta1",
    "eta2", "j",
];

fn default_param(name: &str) -> f64 {
    match name {
        "alpha" | "zeta" | "eta" | "zeta1" | "zeta2" | "eta1" | "eta2" | "j" => 1.0,
        "mu" | "alpha1" | "alpha2" => 0.5,
        _ => 0.0,
    }
}

/// Parses "alpha=0.7,zeta=1.2" into a map; unknown names are errors.
pub fn parse_params(s: &str) -> Result<BTreeMap<String, f64>> {
    let mut out = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected name=value, got {item:?}")))?;
        let k = k.trim();
        if !PARAM_NAMES.contains(&k) {
            return Err(Error::Parse(format!(
                "unknown parameter {k:?}; known: {}",
                PARAM_NAMES.join(", ")
            )));
        }
        let v: f64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad number in {item:?}")))?;
        out.insert(k.to_string(), v);
    }
    Ok(out)
}

/// Parses "0.3", "0.3-1.2i", "2i".
pub fn parse_complex(s: &str) -> Result<C64> {
    C64::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad complex number {s:?}")))
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalRequest {
    pub function: EvalFn,
    pub m: u32,
    pub k: MultiIndex,
    pub params: BTreeMap<String, f64>,
    pub t: C64,
    pub x: Vec<C64>,
    pub xi: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalOutput {
    pub value: C64,
    pub note: Option<String>,
}

impl EvalRequest {
    fn p(&self, name: &str) -> f64 {
        self.params
            .get(name)
            .copied()
            .unwrap_or_else(|| default_param(name))
    }

    fn real_x(&self) -> Vec<f64> {
        let mut x: Vec<f64> = self.x.iter().map(|z| z.re).collect();
        x.resize(self.k.dim(), 0.0);
        x
    }

    fn complex_x(&self) -> Vec<C64> {
        let mut x = self.x.clone();
        x.resize(self.k.dim(), c64(0.0, 0.0));
        x
    }

    fn split(&self) -> Result<SplitParams> {
        SplitParams::new(
            self.p("alpha1"),
            self.p("alpha2"),
            self.p("zeta1"),
            self.p("zeta2"),
            self.p("eta1"),
            self.p("eta2"),
        )
    }

    fn jacobi(&self) -> WrapParamsJacobi {
        WrapParamsJacobi {
            alpha: self.p("alpha"),
            zeta: self.p("zeta"),
            eta: self.p("eta"),
            beta: self.p("beta"),
            gamma: self.p("gamma"),
            mu: self.p("mu"),
        }
    }

    fn laguerre(&self) -> WrapParamsLaguerre {
        WrapParamsLaguerre {
            alpha: self.p("alpha"),
            zeta: self.p("zeta"),
            beta: self.p("beta"),
            mu: self.p("mu"),
        }
    }

    /// ξ split into the x-frequencies and the last (t) frequency.
    fn frequency(&self) -> Result<FrequencyPoint> {
        let d = self.k.dim();
        let mut xi = self.xi.clone();
        if xi.is_empty() {
            xi = vec![0.0; d + 1];
        }
        if xi.len() != d + 1 {
            return Err(Error::Parse(format!(
                "need {} frequencies (d + 1), got {}",
                d + 1,
                xi.len()
            )));
        }
        let last = xi.pop().expect("nonempty");
        Ok(FrequencyPoint { xi, xi_last: last })
    }

    fn xi0(&self) -> f64 {
        self.xi.first().copied().unwrap_or(0.0)
    }
}

/// Evaluates the requested function.
pub fn eval_point(req: &EvalRequest) -> Result<EvalOutput> {
    let r = |v: f64| c64(v, 0.0);
    let k = &req.k;
    let m = req.m;
    let mut note = None;
    let value = match req.function {
        EvalFn::G => r(eval_g(k, req.p("alpha"), req.p("mu"), &req.real_x())?),
        EvalFn::HJacobi => r(eval_h_jacobi(m, k, &req.jacobi(), req.t.re, &req.real_x())?),
        EvalFn::HLaguerre => r(eval_h_laguerre(
            m,
            k,
            &req.laguerre(),
            req.t.re,
            &req.real_x(),
        )?),
        EvalFn::Q => {
            let s = ParaboloidJacobiSpec::new(
                m,
                k.clone(),
                req.p("beta"),
                req.p("gamma"),
                req.p("mu"),
            )?;
            r(eval_paraboloid_jacobi(
                &s,
                &ParaboloidPoint::new(req.t.re, req.real_x(), 1.0)?,
            )?)
        }
        EvalFn::R => {
            let s = ParaboloidLaguerreSpec::new(m, k.clone(), req.p("beta"), req.p("mu"))?;
            r(eval_paraboloid_laguerre(
                &s,
                &ParaboloidPoint::new(req.t.re, req.real_x(), f64::INFINITY)?,
            )?)
        }
        EvalFn::A | EvalFn::B | EvalFn::D => {
            let p = req.split()?;
            note = mu_binding_violation(&p, req.params.get("mu").copied());
            match req.function {
                EvalFn::A => eval_a(m, k, &p, req.t, &req.complex_x())?,
                EvalFn::B => eval_b(m, k, &p, req.t, &req.complex_x())?,
                _ => eval_d(k, p.alpha1, p.alpha2, &req.complex_x())?,
            }
        }
        EvalFn::FourierJ => fourier_h_jacobi_closed(m, k, &req.jacobi(), &req.frequency()?)?,
        EvalFn::FourierL => fourier_h_laguerre_closed(m, k, &req.laguerre(), &req.frequency()?)?,
        EvalFn::FourierG => {
            let mut xi = req.xi.clone();
            xi.resize(k.dim(), 0.0);
            fourier_g_closed(k, req.p("alpha"), req.p("mu"), &xi)?
        }
        EvalFn::Phi => {
            let j = req.p("j");
            if j.fract() != 0.0 || j < 1.0 {
                return Err(Error::Parse(format!(
                    "j must be a positive integer, got {j}"
                )));
            }
            phi_factor(j as usize, req.p("alpha"), req.p("mu"), k, req.xi0())?
        }
        EvalFn::Theta => {
            let p = req.jacobi();
            theta_factor(m, k, p.zeta, p.eta, p.beta, p.gamma, p.mu, req.xi0())?
        }
        EvalFn::Lambda => {
            let p = req.laguerre();
            lambda_factor(m, k, p.zeta, p.mu, p.beta, req.xi0())?
        }
    };
    Ok(EvalOutput { value, note })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{beta, gamma};

    fn req(f: EvalFn) -> EvalRequest {
        EvalRequest {
            function: f,
            m: 0,
            k: MultiIndex::zeros(1),
            params: BTreeMap::new(),
            t: c64(0.2, 0.1),
            x: vec![c64(0.3, -0.2)],
            xi: vec![],
        }
    }

    #[test]
    fn every_function_evaluates() {
        for f in EvalFn::ALL {
            let mut q = req(f);
            if matches!(f, EvalFn::Q | EvalFn::R) {
                q.t = c64(0.5, 0.0);
            }
            assert!(eval_point(&q).is_ok(), "{f}");
        }
    }

    #[test]
    fn fourier_l_base_value() {
        let mut q = req(EvalFn::FourierL);
        q.params = parse_params("alpha=0.8,zeta=1.3").unwrap();
        q.xi = vec![0.0, 0.0];
        let v = eval_point(&q).unwrap().value;
        let expect = 2f64.powf(1.3)
            * gamma(c64(1.3, 0.0)).unwrap().re
            * 2f64.powf(0.6)
            * beta(c64(0.8, 0.0), c64(0.8, 0.0)).unwrap().re;
        assert!((v.re - expect).abs() < 1e-12 * expect && v.im.abs() < 1e-14);
    }

    #[test]
    fn a_collapses_at_m_equal_k() {
        // m = |k|: the 3F2 is 1, so A = Γ(|k|/2 + ζ₁ − t/2) D_k(x)
        let q = req(EvalFn::A);
        let a = eval_point(&q).unwrap().value;
        let p = q.split().unwrap();
        let d = eval_d(&q.k, p.alpha1, p.alpha2, &q.x).unwrap();
        let g = gamma(c64(p.zeta1, 0.0) - q.t / 2.0).unwrap();
        assert!((a - g * d).norm() < 1e-14 * a.norm());
    }

    #[test]
    fn parsing() {
        assert!(parse_params("alpha=1,foo=2").is_err());
        assert!(parse_params("alpha").is_err());
        assert_eq!(parse_params(" alpha = 2 ").unwrap()["alpha"], 2.0);
        assert_eq!(parse_complex("0.5-2i").unwrap(), c64(0.5, -2.0));
        assert!("nope".parse::<EvalFn>().is_err());
        let mut q = req(EvalFn::A);
        q.params = parse_params("mu=3").unwrap();
        assert!(eval_point(&q).unwrap().note.is_some());
    }
}
