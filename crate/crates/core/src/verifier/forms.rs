//! 3F2 forms against continuous Hahn forms.

use super::contiguous::AbDraw;
use super::report::{CaseHeader, IdentityId, Residual, VerificationReport};
use crate::bases::MultiIndex;
use crate::scalar::{c64, C64};
use crate::transform::{eval_a, eval_a_hahn, eval_d, eval_d_hahn, phi_factor, phi_factor_hahn};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn random_index(rng: &mut ChaCha8Rng, d: usize) -> MultiIndex {
    MultiIndex::new((0..d).map(|_| rng.random_range(0..=3)).collect()).expect("d >= 1")
}

/// FORM_EQUIV_PHI at a random (k, j, α, μ, ξ).
pub fn check_phi(rng: &mut ChaCha8Rng, d: usize, tol: f64) -> VerificationReport {
    let k = random_index(rng, d);
    let j = rng.random_range(1..=d);
    let alpha = rng.random_range(0.3..2.5);
    let mu = rng.random_range(0.2..2.5);
    let xi = rng.random_range(-3.0..3.0);
    CaseHeader::new(IdentityId::FormEquivPhi, d, tol)
        .indices(k.entries(), k.entries())
        .param("j", j as f64)
        .param("alpha", alpha)
        .param("mu", mu)
        .param("xi", xi)
        .run(Residual::Symmetric, || {
            Ok((
                phi_factor(j, alpha, mu, &k, xi)?,
                phi_factor_hahn(j, alpha, mu, &k, xi)?,
                0,
            ))
        })
}

/// FORM_EQUIV_D at a random (k, α₁, α₂, x).
pub fn check_d(rng: &mut ChaCha8Rng, d: usize, tol: f64) -> VerificationReport {
    let k = random_index(rng, d);
    let a1 = rng.random_range(0.3..2.5);
    let a2 = rng.random_range(0.3..2.5);
    let x: Vec<C64> = (0..d)
        .map(|_| c64(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let mut h = CaseHeader::new(IdentityId::FormEquivD, d, tol)
        .indices(k.entries(), k.entries())
        .param("alpha1", a1)
        .param("alpha2", a2);
    for (j, &xj) in x.iter().enumerate() {
        h = h.complex_param(&format!("x{}", j + 1), xj);
    }
    h.run(Residual::Symmetric, || {
        Ok((eval_d(&k, a1, a2, &x)?, eval_d_hahn(&k, a1, a2, &x)?, 0))
    })
}

/// FORM_EQUIV_A at a contiguous-style draw.
pub fn check_a(rng: &mut ChaCha8Rng, d: usize, tol: f64) -> VerificationReport {
    let w = AbDraw::random(rng, d);
    let mut h = CaseHeader::new(IdentityId::FormEquivA, d, tol)
        .degrees(w.m, w.m)
        .indices(w.k.entries(), w.k.entries());
    for (name, v) in w.p.named() {
        h = h.param(name, v);
    }
    h = h.complex_param("t", w.t);
    for (j, &xj) in w.x.iter().enumerate() {
        h = h.complex_param(&format!("x{}", j + 1), xj);
    }
    h.run(Residual::Symmetric, || {
        Ok((
            eval_a(w.m, &w.k, &w.p, w.t, &w.x)?,
            eval_a_hahn(w.m, &w.k, &w.p, w.t, &w.x)?,
            0,
        ))
    })
}
