//! Complex gamma, log-gamma, beta and Pochhammer symbols.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

pub type C64 = Complex64;

/// Shorthand constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Absolute distance below which an argument counts as a gamma pole.
pub const POLE_TOL: f64 = 1e-12;

/// Largest argument of `exp` that stays finite.
const LN_MAX: f64 = 709.782712893384;

const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

/// If `z` lies within `tol` of a non-positive integer `-n`, returns `n`.
pub fn nonpositive_integer_near(z: C64, tol: f64) -> Option<u64> {
    let r = z.re.round();
    if r <= 0.0 && (z - c64(r, 0.0)).norm() < tol {
        Some((-r) as u64)
    } else {
        None
    }
}

/// ln sin(pi z), stable for large |Im z|.
fn ln_sin_pi(z: C64) -> C64 {
    if z.im.abs() < 20.0 {
        return (z * PI).sin().ln();
    }
    // sin w = (i/2) e^{-iw} (1 - e^{2iw}); for Im w > 0 the last factor is near 1.
    let flip = z.im < 0.0;
    let w = if flip { z.conj() } else { z } * PI;
    let i = C64::i();
    let v = -i * w + (i * 0.5).ln() + (C64::new(1.0, 0.0) - (i * w * 2.0).exp()).ln();
    if flip {
        v.conj()
    } else {
        v
    }
}

fn lanczos_ln_gamma(z: C64) -> C64 {
    let z = z - 1.0;
    let mut s = c64(LANCZOS[0], 0.0);
    for (k, &ck) in LANCZOS.iter().enumerate().skip(1) {
        s += ck / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + s.ln()
}

/// Principal log-gamma. Uses reflection left of Re z = 1/2.
pub fn log_gamma(z: C64) -> Result<C64> {
    if nonpositive_integer_near(z, POLE_TOL).is_some() {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    if z.re < 0.5 {
        let one = c64(1.0, 0.0);
        Ok(c64(PI.ln(), 0.0) - ln_sin_pi(z) - lanczos_ln_gamma(one - z))
    } else {
        Ok(lanczos_ln_gamma(z))
    }
}

/// Gamma function.
pub fn gamma(z: C64) -> Result<C64> {
    let lg = log_gamma(z)?;
    if lg.re > LN_MAX {
        return Err(Error::Overflow(lg.re));
    }
    // Real arguments get a real answer, without the rounding residue of exp(i pi).
    let v = lg.exp();
    if z.im == 0.0 {
        Ok(c64(v.re, 0.0))
    } else {
        Ok(v)
    }
}

/// Euler beta B(a, b) = G(a)G(b)/G(a+b), evaluated in log space.
pub fn beta(a: C64, b: C64) -> Result<C64> {
    if a.re <= 0.0 || b.re <= 0.0 {
        return Err(Error::Domain(format!(
            "beta needs positive real parts, got {a} and {b}"
        )));
    }
    let lb = log_gamma(a)? + log_gamma(b)? - log_gamma(a + b)?;
    if lb.re > LN_MAX {
        return Err(Error::Overflow(lb.re));
    }
    Ok(lb.exp())
}

/// Rising factorial (a)_m.
pub fn pochhammer(a: C64, m: u64) -> C64 {
    if m == 0 {
        return c64(1.0, 0.0);
    }
    let touches_pole = nonpositive_integer_near(a, POLE_TOL).is_some()
        || nonpositive_integer_near(a + m as f64, POLE_TOL).is_some();
    if m <= 64 || touches_pole {
        let mut p = c64(1.0, 0.0);
        for j in 0..m {
            p *= a + j as f64;
        }
        return p;
    }
    match (log_gamma(a + m as f64), log_gamma(a)) {
        (Ok(x), Ok(y)) => (x - y).exp(),
        _ => c64(f64::NAN, f64::NAN),
    }
}

/// A Pochhammer symbol as a value type.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PochhammerArg {
    pub base: C64,
    pub order: u64,
}

impl PochhammerArg {
    pub fn value(&self) -> C64 {
        pochhammer(self.base, self.order)
    }
}

/// Running product kept as a complex logarithm plus a zero flag.
///
/// Long chains of gamma and Pochhammer factors go through here and are
/// exponentiated once at the end.
#[derive(Debug, Clone, Copy)]
pub struct LogProduct {
    log: C64,
    zero: bool,
}

impl Default for LogProduct {
    fn default() -> Self {
        Self::one()
    }
}

impl LogProduct {
    pub fn one() -> Self {
        Self {
            log: c64(0.0, 0.0),
            zero: false,
        }
    }

    pub fn mul(&mut self, z: C64) {
        if z == C64::new(0.0, 0.0) {
            self.zero = true;
        } else {
            self.log += z.ln();
        }
    }

    pub fn mul_real(&mut self, x: f64) {
        self.mul(c64(x, 0.0));
    }

    pub fn div(&mut self, z: C64) -> Result<()> {
        if z == C64::new(0.0, 0.0) {
            return Err(Error::Domain("division by zero in product".into()));
        }
        self.log -= z.ln();
        Ok(())
    }

    pub fn div_real(&mut self, x: f64) -> Result<()> {
        self.div(c64(x, 0.0))
    }

    pub fn mul_gamma(&mut self, z: C64) -> Result<()> {
        self.log += log_gamma(z)?;
        Ok(())
    }

    /// Divides by G(z); at a pole the reciprocal is zero.
    pub fn div_gamma(&mut self, z: C64) -> Result<()> {
        match log_gamma(z) {
            Ok(l) => self.log -= l,
            Err(Error::Pole { .. }) => self.zero = true,
            Err(e) => return Err(e),
        }
        Ok(())
    }

    pub fn mul_pochhammer(&mut self, a: C64, m: u64) {
        self.mul(pochhammer(a, m));
    }

    pub fn div_pochhammer(&mut self, a: C64, m: u64) -> Result<()> {
        self.div(pochhammer(a, m))
    }

    pub fn mul_factorial(&mut self, n: u64) {
        self.log += log_factorial(n);
    }

    pub fn div_factorial(&mut self, n: u64) {
        self.log -= log_factorial(n);
    }

    /// Multiplies by 2^e for complex e.
    pub fn mul_pow2(&mut self, e: C64) {
        self.log += e * std::f64::consts::LN_2;
    }

    pub fn mul_pow(&mut self, base: f64, e: f64) {
        self.log += c64(e * base.ln(), 0.0);
    }

    pub fn log(&self) -> Option<C64> {
        (!self.zero).then_some(self.log)
    }

    pub fn value(&self) -> Result<C64> {
        if self.zero {
            return Ok(c64(0.0, 0.0));
        }
        if self.log.re > LN_MAX {
            return Err(Error::Overflow(self.log.re));
        }
        Ok(self.log.exp())
    }
}

fn log_factorial(n: u64) -> C64 {
    if n < 2 {
        return c64(0.0, 0.0);
    }
    if n <= 32 {
        let mut p = 1.0f64;
        for j in 2..=n {
            p *= j as f64;
        }
        return c64(p.ln(), 0.0);
    }
    c64(lanczos_ln_gamma(c64(n as f64 + 1.0, 0.0)).re, 0.0)
}

/// n! as f64 (infinite past 170).
pub fn factorial(n: u64) -> f64 {
    (2..=n).fold(1.0f64, |p, j| p * j as f64)
}

/// Real log-gamma ln|G(x)| for real x off the poles.
pub fn ln_gamma_real(x: f64) -> Result<f64> {
    Ok(log_gamma(c64(x, 0.0))?.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: C64, b: C64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn log_gamma_small_values() {
        assert!(log_gamma(c64(1.0, 0.0)).unwrap().norm() < 1e-15);
        assert!((log_gamma(c64(5.0, 0.0)).unwrap().re - 24f64.ln()).abs() < 1e-14);
        let half = log_gamma(c64(0.5, 0.0)).unwrap();
        assert!((half.re - 0.5 * PI.ln()).abs() < 1e-14);
        assert!((half.re - 0.5723649429247001).abs() < 1e-13);
    }

    #[test]
    fn gamma_integers_and_half() {
        assert!((gamma(c64(1.0, 0.0)).unwrap().re - 1.0).abs() < 1e-14);
        assert!((gamma(c64(4.0, 0.0)).unwrap().re - 6.0).abs() < 1e-13);
        assert!((gamma(c64(0.5, 0.0)).unwrap().re - PI.sqrt()).abs() < 1e-14);
        assert!((gamma(c64(-0.5, 0.0)).unwrap().re + 2.0 * PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn poles_are_reported() {
        for n in 0..5 {
            let z = c64(-(n as f64), 0.0);
            assert!(matches!(gamma(z), Err(Error::Pole { .. })));
        }
        assert!(matches!(
            log_gamma(c64(-2.0 + 1e-13, 0.0)),
            Err(Error::Pole { .. })
        ));
        assert!(gamma(c64(-2.0 + 1e-9, 0.0)).is_ok());
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(gamma(c64(200.0, 0.0)), Err(Error::Overflow(_))));
        assert!(log_gamma(c64(200.0, 0.0)).is_ok());
    }

    #[test]
    fn gamma_complex_reference_values() {
        // Values from a 30-digit reference evaluation.
        let g = gamma(c64(1.0, 1.0)).unwrap();
        assert!(rel(g, c64(0.498015668118356, -0.154949828301811)) < 1e-13);
        let g = gamma(c64(0.5, 10.0)).unwrap();
        let modulus = (PI / (PI * 10.0).cosh()).sqrt();
        assert!((g.norm() - modulus).abs() / modulus < 1e-12);
    }

    #[test]
    fn large_imaginary_reflection() {
        let z = c64(-0.3, 35.0);
        let lhs = gamma(z).unwrap() * gamma(c64(1.0, 0.0) - z).unwrap() * (z * PI).sin();
        assert!(rel(lhs, c64(PI, 0.0)) < 1e-10);
    }

    #[test]
    fn beta_values() {
        assert!((beta(c64(1.0, 0.0), c64(1.0, 0.0)).unwrap().re - 1.0).abs() < 1e-14);
        assert!((beta(c64(2.0, 0.0), c64(3.0, 0.0)).unwrap().re - 1.0 / 12.0).abs() < 1e-15);
        assert!(matches!(
            beta(c64(0.0, 0.0), c64(1.0, 0.0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(c64(0.3, 2.0), 0), c64(1.0, 0.0));
        assert_eq!(pochhammer(c64(3.0, 0.0), 2), c64(12.0, 0.0));
        assert_eq!(pochhammer(c64(-2.0, 0.0), 4), c64(0.0, 0.0));
        let a = c64(0.7, 0.2);
        let big = pochhammer(a, 80);
        let split = pochhammer(a, 30) * pochhammer(a + 30.0, 50);
        assert!(rel(big, split) < 1e-12);
    }

    #[test]
    fn log_product_matches_direct() {
        let mut p = LogProduct::one();
        p.mul_gamma(c64(3.5, 0.0)).unwrap();
        p.div_gamma(c64(1.5, 0.0)).unwrap();
        p.mul_real(-2.0);
        p.mul_pow2(c64(3.0, 0.0));
        let v = p.value().unwrap();
        assert!(rel(v, c64(-2.5 * 1.5 * 2.0 * 8.0, 0.0)) < 1e-14);
        let mut z = LogProduct::one();
        z.div_gamma(c64(-1.0, 0.0)).unwrap();
        assert_eq!(z.value().unwrap(), c64(0.0, 0.0));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), 1.0);
        assert_eq!(factorial(5), 120.0);
        assert!((factorial(25) - 1.5511210043330986e25).abs() / 1.55e25 < 1e-13);
    }
}
