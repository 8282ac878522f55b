//! Self-consistency of the gamma and beta functions.

use crate::error::Result;
use crate::quadrature::integrate_tanh_sinh;
use crate::scalar::{beta, c64, gamma, C64};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;

/// Worst relative residuals over a batch of random points.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct KernelSummary {
    pub draws: usize,
    /// Γ(z + 1) = z Γ(z).
    pub recurrence: f64,
    /// Γ(z) Γ(1 − z) sin(πz) = π.
    pub reflection: f64,
    /// B(a, b) against ∫₀¹ t^{a−1} (1 − t)^{b−1} dt.
    pub beta_integral: f64,
}

impl KernelSummary {
    pub fn worst(&self) -> f64 {
        self.recurrence.max(self.reflection).max(self.beta_integral)
    }
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm())
}

/// Points with |Re z| ≤ 6, |Im z| ≤ 6 kept 0.05 away from the poles of Γ(z)
/// and Γ(1 − z); beta arguments with Re in (0.4, 4) and |Im| ≤ 1.5.
pub fn check_scalar_kernel(rng: &mut ChaCha8Rng, draws: usize) -> Result<KernelSummary> {
    let mut s = KernelSummary {
        draws,
        ..Default::default()
    };
    for _ in 0..draws {
        let z = loop {
            let z = c64(rng.random_range(-6.0..6.0), rng.random_range(-6.0..6.0));
            if z.im.abs() > 0.05 || (z.re - z.re.round()).abs() > 0.05 {
                break z;
            }
        };
        let g = gamma(z)?;
        s.recurrence = s.recurrence.max(rel(gamma(z + 1.0)?, z * g));
        let lhs = g * gamma(c64(1.0, 0.0) - z)? * (z * PI).sin();
        s.reflection = s.reflection.max(rel(lhs, c64(PI, 0.0)));

        let a = c64(rng.random_range(0.4..4.0), rng.random_range(-1.5..1.5));
        let b = c64(rng.random_range(0.4..4.0), rng.random_range(-1.5..1.5));
        let e = a.re.min(b.re) - 1.0;
        // t = (1 + u)/2, so t = one_plus/2 and 1 − t = one_minus/2
        let q = integrate_tanh_sinh(
            |_, om, op| {
                let lt = (0.5 * op).ln();
                let l1t = (0.5 * om).ln();
                ((a - 1.0) * lt + (b - 1.0) * l1t).exp() * 0.5
            },
            e,
            1e-13,
        )?;
        s.beta_integral = s.beta_integral.max(rel(q.value, beta(a, b)?));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn kernel_is_tight() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let s = check_scalar_kernel(&mut rng, 200).unwrap();
        assert!(s.worst() <= 1e-10, "{s:?}");
    }
}
