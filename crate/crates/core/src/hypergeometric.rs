//! Generalized hypergeometric series pFq.
//!
//! Terminating series are summed exactly, with the running term and the sum
//! carried in double-double arithmetic so that cancellation between large
//! alternating terms does not eat the result. Convergent non-terminating
//! series (p <= q, or p = q + 1 with |z| < 1) are summed in plain double
//! until the tail drops below 1e-15 relative for two consecutive terms.

use crate::error::{Error, Result};
use crate::scalar::{c64, nonpositive_integer_near, C64, POLE_TOL};

/// Distance within which a numerator parameter is snapped to an integer.
pub const TERMINATION_TOL: f64 = 1e-9;

const TAIL_TOL: f64 = 1e-15;
const MAX_TERMS: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct HypSeries {
    pub numerator: Vec<C64>,
    pub denominator: Vec<C64>,
    pub argument: C64,
}

impl HypSeries {
    pub fn new(numerator: &[C64], denominator: &[C64], argument: C64) -> Self {
        Self {
            numerator: numerator.to_vec(),
            denominator: denominator.to_vec(),
            argument,
        }
    }

    /// Smallest N such that some numerator parameter is -N.
    pub fn termination_degree(&self) -> Option<usize> {
        self.numerator
            .iter()
            .filter_map(|&a| nonpositive_integer_near(a, TERMINATION_TOL))
            .min()
            .map(|n| n as usize)
    }

    fn converges(&self) -> bool {
        let (p, q) = (self.numerator.len(), self.denominator.len());
        p <= q || (p == q + 1 && self.argument.norm() < 1.0)
    }
}

fn snapped(a: C64) -> C64 {
    match nonpositive_integer_near(a, TERMINATION_TOL) {
        Some(n) => c64(-(n as f64), 0.0),
        None => a,
    }
}

/// Evaluates the series. Terminating series give the exact finite sum;
/// otherwise the series must converge.
pub fn eval_terminating(s: &HypSeries) -> Result<C64> {
    let num: Vec<C64> = s.numerator.iter().map(|&a| snapped(a)).collect();
    let z = s.argument;
    let limit = s.termination_degree();
    if limit.is_none() && !s.converges() {
        return Err(Error::NonTerminating(format!(
            "{}F{} at |z| = {}",
            s.numerator.len(),
            s.denominator.len(),
            z.norm()
        )));
    }
    let terms = limit.unwrap_or(MAX_TERMS);
    // with no termination every denominator index is reached
    for &b in &s.denominator {
        if let Some(j) = nonpositive_integer_near(b, POLE_TOL) {
            if (j as usize) < terms {
                return Err(Error::DenominatorPole { index: j as usize });
            }
        }
    }

    match limit {
        Some(n) => Ok(sum_terminating(&num, &s.denominator, z, n)),
        None => sum_convergent(&num, &s.denominator, z),
    }
}

fn sum_terminating(num: &[C64], den: &[C64], z: C64, terms: usize) -> C64 {
    let zz = Cdd::from(z);
    let mut term = Cdd::from(c64(1.0, 0.0));
    let mut sum = term;
    for m in 0..terms {
        let mf = m as f64;
        let mut top = zz;
        for &a in num {
            top = top.mul(Cdd::shifted(a, mf));
        }
        let mut bottom = Cdd::from(c64(mf + 1.0, 0.0));
        for &b in den {
            bottom = bottom.mul(Cdd::shifted(b, mf));
        }
        term = term.mul(top).div(bottom);
        sum = sum.add(term);
    }
    sum.to_c64()
}

fn sum_convergent(num: &[C64], den: &[C64], z: C64) -> Result<C64> {
    let mut term = c64(1.0, 0.0);
    let mut sum = term;
    let mut small = 0;
    for m in 0..MAX_TERMS {
        let mf = m as f64;
        let mut ratio = z / (mf + 1.0);
        for &a in num {
            ratio *= a + mf;
        }
        for &b in den {
            ratio /= b + mf;
        }
        term *= ratio;
        sum += term;
        if term.norm() <= TAIL_TOL * sum.norm() {
            small += 1;
            if small >= 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonTerminating(format!(
        "no convergence within {MAX_TERMS} terms"
    )))
}

/// Double-double real: value hi + lo with |lo| <= ulp(hi)/2.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    Dd { hi: s, lo: e }
}

fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd {
        hi: s,
        lo: b - (s - a),
    }
}

impl Dd {
    fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        let t = two_sum(self.lo, o.lo);
        let v = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(v.hi, v.lo + t.lo)
    }

    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    fn mul(self, o: Dd) -> Dd {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p);
        quick_two_sum(p, e + (self.hi * o.lo + self.lo * o.hi))
    }

    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul(Dd::new(q1)));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul(Dd::new(q2)));
        let q3 = r.hi / o.hi;
        quick_two_sum(q1, q2).add(Dd::new(q3))
    }
}

#[derive(Debug, Clone, Copy)]
struct Cdd {
    re: Dd,
    im: Dd,
}

impl Cdd {
    fn from(z: C64) -> Self {
        Cdd {
            re: Dd::new(z.re),
            im: Dd::new(z.im),
        }
    }

    /// a + m with the real shift done exactly.
    fn shifted(a: C64, m: f64) -> Self {
        Cdd {
            re: two_sum(a.re, m),
            im: Dd::new(a.im),
        }
    }

    fn add(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    fn mul(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    fn div(self, o: Cdd) -> Cdd {
        if o.im.hi == 0.0 && o.im.lo == 0.0 {
            return Cdd {
                re: self.re.div(o.re),
                im: self.im.div(o.re),
            };
        }
        let den = o.re.mul(o.re).add(o.im.mul(o.im));
        let re = self.re.mul(o.re).add(self.im.mul(o.im));
        let im = self.im.mul(o.re).sub(self.re.mul(o.im));
        Cdd {
            re: re.div(den),
            im: im.div(den),
        }
    }

    fn to_c64(self) -> C64 {
        c64(self.re.hi + self.re.lo, self.im.hi + self.im.lo)
    }
}

/// pFq(num; den; z).
pub fn hyp(num: &[C64], den: &[C64], z: C64) -> Result<C64> {
    eval_terminating(&HypSeries::new(num, den, z))
}

pub fn hyp2f1(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    hyp(&[a, b], &[c], z)
}

pub fn hyp3f2(a: [C64; 3], b: [C64; 2], z: C64) -> Result<C64> {
    hyp(&a, &b, z)
}

pub fn hyp1f1(a: C64, b: C64, z: C64) -> Result<C64> {
    hyp(&[a], &[b], z)
}

/// 2F1(a, b; c; 2). Only meaningful when `a` is a non-positive integer.
pub fn eval_2f1_at_2(a: C64, b: C64, c: C64) -> Result<C64> {
    if nonpositive_integer_near(a, TERMINATION_TOL).is_none() {
        return Err(Error::NonTerminating(format!(
            "2F1 at z = 2 needs a non-positive integer first parameter, got {a}"
        )));
    }
    hyp2f1(a, b, c, c64(2.0, 0.0))
}
