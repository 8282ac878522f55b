//! Gegenbauer, Jacobi, Laguerre and continuous Hahn polynomials.
//!
//! Every family is evaluated through its terminating hypergeometric series,
//! never through a three-term recurrence.

use crate::error::{Error, Result};
use crate::hypergeometric::{hyp, hyp2f1};
use crate::scalar::{c64, pochhammer, LogProduct, C64};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GegenbauerSpec {
    pub degree: u32,
    pub mu: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiSpec {
    pub degree: u32,
    pub alpha: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreSpec {
    pub degree: u32,
    pub alpha: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HahnSpec {
    pub degree: u32,
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl GegenbauerSpec {
    pub fn new(degree: u32, mu: f64) -> Result<Self> {
        if !(mu > -0.5) {
            return Err(Error::Domain(format!(
                "Gegenbauer needs mu > -1/2, got {mu}"
            )));
        }
        Ok(Self { degree, mu })
    }
}

impl JacobiSpec {
    pub fn new(degree: u32, alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0 && beta > -1.0) {
            return Err(Error::Domain(format!(
                "Jacobi needs alpha, beta > -1, got ({alpha}, {beta})"
            )));
        }
        Ok(Self {
            degree,
            alpha,
            beta,
        })
    }
}

impl LaguerreSpec {
    pub fn new(degree: u32, alpha: f64) -> Result<Self> {
        if !(alpha > -1.0) {
            return Err(Error::Domain(format!(
                "Laguerre needs alpha > -1, got {alpha}"
            )));
        }
        Ok(Self { degree, alpha })
    }
}

fn r(x: f64) -> C64 {
    c64(x, 0.0)
}

fn inv_factorial(m: u32) -> f64 {
    1.0 / crate::scalar::factorial(m as u64)
}

/// C_m^(mu)(x) = (2mu)_m/m! 2F1(-m, m+2mu; mu+1/2; (1-x)/2).
pub fn gegenbauer(spec: GegenbauerSpec, x: C64) -> Result<C64> {
    let m = spec.degree as f64;
    let mu = spec.mu;
    let f = hyp2f1(r(-m), r(m + 2.0 * mu), r(mu + 0.5), (r(1.0) - x) * 0.5)?;
    Ok(f * pochhammer(r(2.0 * mu), spec.degree as u64) * inv_factorial(spec.degree))
}

/// Real-argument convenience wrapper.
pub fn gegenbauer_real(degree: u32, mu: f64, x: f64) -> Result<f64> {
    Ok(gegenbauer(GegenbauerSpec { degree, mu }, r(x))?.re)
}

/// h_m^mu = (2mu)_m G(mu+1/2) G(1/2) / (m! (m+mu) G(mu)).
pub fn gegenbauer_norm(spec: GegenbauerSpec) -> Result<f64> {
    let mu = spec.mu;
    if mu == 0.0 {
        return Err(Error::Domain(
            "Gegenbauer norm is singular at mu = 0".into(),
        ));
    }
    if !(mu > -0.5) {
        return Err(Error::Domain(format!(
            "Gegenbauer norm needs mu > -1/2, got {mu}"
        )));
    }
    let m = spec.degree as u64;
    let mut p = LogProduct::one();
    p.mul_pochhammer(r(2.0 * mu), m);
    p.mul_gamma(r(mu + 0.5))?;
    p.mul_real(PI.sqrt());
    p.div_factorial(m);
    p.div_real(m as f64 + mu)?;
    p.div_gamma(r(mu))?;
    Ok(p.value()?.re)
}

/// P_m^(a,b)(t) = (a+1)_m/m! 2F1(-m, m+a+b+1; a+1; (1-t)/2).
pub fn jacobi(spec: JacobiSpec, t: C64) -> Result<C64> {
    let m = spec.degree as f64;
    let (a, b) = (spec.alpha, spec.beta);
    let f = hyp2f1(r(-m), r(m + a + b + 1.0), r(a + 1.0), (r(1.0) - t) * 0.5)?;
    Ok(f * pochhammer(r(a + 1.0), spec.degree as u64) * inv_factorial(spec.degree))
}

pub fn jacobi_real(degree: u32, alpha: f64, beta: f64, t: f64) -> Result<f64> {
    Ok(jacobi(
        JacobiSpec {
            degree,
            alpha,
            beta,
        },
        r(t),
    )?
    .re)
}

/// h_m^(a,b) = 2^(a+b+1) G(m+a+1) G(m+b+1) / ((2m+a+b+1) G(m+a+b+1) m!).
pub fn jacobi_norm(spec: JacobiSpec) -> Result<f64> {
    let (a, b) = (spec.alpha, spec.beta);
    if !(a > -1.0 && b > -1.0) {
        return Err(Error::Domain(format!(
            "Jacobi norm needs a, b > -1, got ({a}, {b})"
        )));
    }
    let m = spec.degree as f64;
    let mut p = LogProduct::one();
    p.mul_pow2(r(a + b + 1.0));
    p.mul_gamma(r(m + a + 1.0))?;
    p.mul_gamma(r(m + b + 1.0))?;
    if spec.degree == 0 {
        // (a+b+1) G(a+b+1) = G(a+b+2), finite even at a+b = -1
        p.div_gamma(r(a + b + 2.0))?;
    } else {
        p.div_real(2.0 * m + a + b + 1.0)?;
        p.div_gamma(r(m + a + b + 1.0))?;
    }
    p.div_factorial(spec.degree as u64);
    Ok(p.value()?.re)
}

/// L_m^a(t) = (a+1)_m/m! 1F1(-m; a+1; t).
pub fn laguerre(spec: LaguerreSpec, t: C64) -> Result<C64> {
    let m = spec.degree as f64;
    let a = spec.alpha;
    let f = hyp(&[r(-m)], &[r(a + 1.0)], t)?;
    Ok(f * pochhammer(r(a + 1.0), spec.degree as u64) * inv_factorial(spec.degree))
}

pub fn laguerre_real(degree: u32, alpha: f64, t: f64) -> Result<f64> {
    Ok(laguerre(LaguerreSpec { degree, alpha }, r(t))?.re)
}

/// G(a+m+1)/m!.
pub fn laguerre_norm(spec: LaguerreSpec) -> Result<f64> {
    let a = spec.alpha;
    if !(a > -1.0) {
        return Err(Error::Domain(format!(
            "Laguerre norm needs a > -1, got {a}"
        )));
    }
    let mut p = LogProduct::one();
    p.mul_gamma(r(a + spec.degree as f64 + 1.0))?;
    p.div_factorial(spec.degree as u64);
    Ok(p.value()?.re)
}

/// p_m(x; a,b,c,d) = i^m (a+c)_m (a+d)_m / m! 3F2(-m, m+a+b+c+d-1, a+ix; a+c, a+d; 1).
pub fn continuous_hahn(spec: HahnSpec, x: C64) -> Result<C64> {
    let HahnSpec { degree, a, b, c, d } = spec;
    let m = degree as f64;
    let i = C64::i();
    let f = hyp(
        &[r(-m), a + b + c + d + (m - 1.0), a + i * x],
        &[a + c, a + d],
        r(1.0),
    )?;
    let pre = i.powu(degree)
        * pochhammer(a + c, degree as u64)
        * pochhammer(a + d, degree as u64)
        * inv_factorial(degree);
    Ok(pre * f)
}
