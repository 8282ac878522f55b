//! Orthogonality of the A and B families on imaginary lines.
//!
//! The integrand is built exactly as the identity states it, A(it, ix; p)
//! against A(−it, −ix; p with every pair swapped), without taking conjugates.
//! It factors into a t-integral and one x-integral per axis.

use super::report::{CaseHeader, IdentityId, Residual, VerificationReport};
use crate::bases::{ball_norm, BallBasisSpec, MultiIndex};
use crate::error::{Error, Result};
use crate::quadrature::{
    integrate_line_gamma_decay, tensor_integrate, Axis, IntegrationRequest, QuadResult,
};
use crate::scalar::{c64, factorial, LogProduct, C64};
use crate::transform::{a_t_part, b_t_part, d_axis, eval_a, eval_b, SplitParams};
use std::f64::consts::PI;
use std::time::Instant;

/// Which family is being integrated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    A,
    B,
}

impl Kind {
    fn id(self) -> IdentityId {
        match self {
            Kind::A => IdentityId::ParsevalA,
            Kind::B => IdentityId::ParsevalB,
        }
    }
}

fn r(x: f64) -> C64 {
    c64(x, 0.0)
}

/// Both pairs of gamma factors decay like e^{−π|s|/2} on each side.
const DECAY: f64 = PI;

/// ∫ D-axis-j(k; ix; α₁, α₂) D-axis-j(k′; −ix; α₂, α₁) dx.
pub fn x_integral(
    k: &MultiIndex,
    k2: &MultiIndex,
    p: &SplitParams,
    j: usize,
    tol: f64,
) -> Result<QuadResult> {
    let i = C64::i();
    let req = IntegrationRequest::gamma_line(tol, DECAY);
    integrate_line_gamma_decay(&req, |x| {
        let a = d_axis(k, p.alpha1, p.alpha2, j, i * x)
            .expect("gamma arguments have positive real part");
        let b = d_axis(k2, p.alpha2, p.alpha1, j, -i * x)
            .expect("gamma arguments have positive real part");
        a * b
    })
}

/// The t-integral; for A it carries Γ(η₁ + it/2) Γ(η₂ − it/2).
pub fn t_integral(
    kind: Kind,
    m: u32,
    k: &MultiIndex,
    m2: u32,
    k2: &MultiIndex,
    p: &SplitParams,
    tol: f64,
) -> Result<QuadResult> {
    let i = C64::i();
    let q = p.swapped();
    // fail early on degree errors rather than inside the integrand
    match kind {
        Kind::A => {
            a_t_part(m, k, p, r(0.0))?;
            a_t_part(m2, k2, &q, r(0.0))?;
        }
        Kind::B => {
            b_t_part(m, k, p, r(0.0))?;
            b_t_part(m2, k2, &q, r(0.0))?;
        }
    }
    let req = IntegrationRequest::gamma_line(tol, DECAY);
    integrate_line_gamma_decay(&req, |t| {
        let it = i * t;
        match kind {
            Kind::A => {
                let g = crate::scalar::gamma(c64(p.eta1, t / 2.0)).expect("positive real part")
                    * crate::scalar::gamma(c64(p.eta2, -t / 2.0)).expect("positive real part");
                g * a_t_part(m, k, p, it).expect("checked")
                    * a_t_part(m2, k2, &q, -it).expect("checked")
            }
            Kind::B => {
                b_t_part(m, k, p, it).expect("checked")
                    * b_t_part(m2, k2, &q, -it).expect("checked")
            }
        }
    })
}

/// Π_j (k_j!)² Γ(K+2α₁+(d−j)/2) Γ(K+2α₂+(d−j)/2) / (2^{2K} ((2K+2|α|+d−j−1)_{k_j})²), K = |k^{j+1}|.
fn axis_block(q: &mut LogProduct, k: &MultiIndex, p: &SplitParams) -> Result<()> {
    let d = k.dim();
    for j in 1..=d {
        let kk = k.tail(j + 1) as f64;
        let dj = (d - j) as f64;
        let kj = k.get(j) as u64;
        q.mul_factorial(kj);
        q.mul_factorial(kj);
        q.mul_gamma(r(kk + 2.0 * p.alpha1 + dj / 2.0))?;
        q.mul_gamma(r(kk + 2.0 * p.alpha2 + dj / 2.0))?;
        q.mul_pow2(r(-2.0 * kk));
        let base = r(2.0 * kk + 2.0 * p.abs_alpha() + dj - 1.0);
        q.div_pochhammer(base, kj)?;
        q.div_pochhammer(base, kj)?;
    }
    Ok(())
}

fn ball_h(k: &MultiIndex, p: &SplitParams) -> Result<f64> {
    ball_norm(&BallBasisSpec::new(k.clone(), p.mu())?, k.dim())
}

/// Diagonal constant of the A identity.
pub fn constant_a(m: u32, k: &MultiIndex, p: &SplitParams) -> Result<f64> {
    let n = k.total();
    if n > m {
        return Err(Error::Domain(format!("|k| = {n} exceeds m = {m}")));
    }
    let d = k.dim() as f64;
    let (nf, mf) = (n as f64, m as f64);
    let (z, e, aa) = (p.abs_zeta(), p.abs_eta(), p.abs_alpha());
    let gap = (m - n) as u64;
    let mut q = LogProduct::one();
    q.mul_pow(PI, d + 1.0);
    q.mul_pow2(r(-2.0 * d * aa + 2.0 * d + 3.0));
    q.mul_real(ball_h(k, p)?);
    q.mul_factorial(gap);
    q.mul_gamma(r(mf + z))?;
    q.mul_gamma(r(mf - nf + e))?;
    q.mul_gamma(r(nf / 2.0 + p.zeta1 + p.eta1))?;
    q.mul_gamma(r(nf / 2.0 + p.zeta2 + p.eta2))?;
    q.div_pochhammer(r(nf + z), gap)?;
    q.div_pochhammer(r(nf + z), gap)?;
    q.div_real(2.0 * mf - nf + z + e - 1.0)?;
    q.div_gamma(r(mf + z + e - 1.0))?;
    axis_block(&mut q, k, p)?;
    Ok(q.value()?.re)
}

/// Diagonal constant of the B identity.
pub fn constant_b(m: u32, k: &MultiIndex, p: &SplitParams) -> Result<f64> {
    let n = k.total();
    if n > m {
        return Err(Error::Domain(format!("|k| = {n} exceeds m = {m}")));
    }
    let d = k.dim() as f64;
    let (nf, mf) = (n as f64, m as f64);
    let (z, aa) = (p.abs_zeta(), p.abs_alpha());
    let gap = (m - n) as u64;
    let mut q = LogProduct::one();
    q.mul_pow(2.0 * PI, d + 1.0);
    q.mul_pow2(r(-2.0 * d * aa - nf - z + d + 1.0));
    q.mul_real(ball_h(k, p)?);
    q.mul_gamma(r(z + mf))?;
    q.mul_real(factorial(gap));
    q.div_pochhammer(r(nf + z), gap)?;
    q.div_pochhammer(r(nf + z), gap)?;
    axis_block(&mut q, k, p)?;
    Ok(q.value()?.re)
}

pub fn constant(kind: Kind, m: u32, k: &MultiIndex, p: &SplitParams) -> Result<f64> {
    match kind {
        Kind::A => constant_a(m, k, p),
        Kind::B => constant_b(m, k, p),
    }
}

/// Full left-hand side as a product of one-dimensional integrals.
pub fn lhs(
    kind: Kind,
    m: u32,
    k: &MultiIndex,
    m2: u32,
    k2: &MultiIndex,
    p: &SplitParams,
    tol: f64,
) -> Result<(C64, usize)> {
    if k.dim() != k2.dim() {
        return Err(Error::Domain("both indices need the same dimension".into()));
    }
    let t = t_integral(kind, m, k, m2, k2, p, tol)?;
    let mut v = t.value;
    let mut nodes = t.nodes;
    for j in 1..=k.dim() {
        let x = x_integral(k, k2, p, j, tol)?;
        v *= x.value;
        nodes += x.nodes;
    }
    Ok((v, nodes))
}

/// d = 1 left-hand side as one joint integral over (t, x), used to cross-check
/// the factored evaluation.
pub fn lhs_joint_d1(
    kind: Kind,
    m: u32,
    k: &MultiIndex,
    m2: u32,
    k2: &MultiIndex,
    p: &SplitParams,
    tol: f64,
) -> Result<QuadResult> {
    if k.dim() != 1 || k2.dim() != 1 {
        return Err(Error::Domain("the joint cross-check is for d = 1".into()));
    }
    let i = C64::i();
    let q = p.swapped();
    let axis = Axis::SinhLine { decay: DECAY };
    tensor_integrate(&[axis, axis], tol, 7, |s| {
        let (it, ix) = (i * s[0], [i * s[1]]);
        let mix = [-i * s[1]];
        match kind {
            Kind::A => {
                let g = crate::scalar::gamma(c64(p.eta1, s[0] / 2.0)).expect("positive real part")
                    * crate::scalar::gamma(c64(p.eta2, -s[0] / 2.0)).expect("positive real part");
                g * eval_a(m, k, p, it, &ix).expect("valid")
                    * eval_a(m2, k2, &q, -it, &mix).expect("valid")
            }
            Kind::B => {
                eval_b(m, k, p, it, &ix).expect("valid")
                    * eval_b(m2, k2, &q, -it, &mix).expect("valid")
            }
        }
    })
}

/// All (m, k) with |k| ≤ m ≤ max_degree in dimension d.
pub fn indices(d: usize, max_degree: u32) -> Vec<(u32, MultiIndex)> {
    super::orthogonality::paraboloid_indices(d, max_degree)
}

fn header(
    kind: Kind,
    m: u32,
    k: &MultiIndex,
    m2: u32,
    k2: &MultiIndex,
    p: &SplitParams,
    tol: f64,
) -> CaseHeader {
    let mut h = CaseHeader::new(kind.id(), k.dim(), tol)
        .degrees(m, m2)
        .indices(k.entries(), k2.entries());
    for (name, v) in p.named() {
        if kind == Kind::A || !name.starts_with("eta") {
            h = h.param(name, v);
        }
    }
    h.param("mu", p.mu())
}

/// One Parseval entry. Off-diagonal entries are judged against √(C C′).
pub fn check_parseval(
    kind: Kind,
    m: u32,
    k: &MultiIndex,
    m2: u32,
    k2: &MultiIndex,
    p: &SplitParams,
    tol: f64,
) -> VerificationReport {
    let h = header(kind, m, k, m2, k2, p, tol);
    let start = Instant::now();
    let out = (|| {
        let c1 = constant(kind, m, k, p)?;
        let c2 = constant(kind, m2, k2, p)?;
        let (v, nodes) = lhs(kind, m, k, m2, k2, p, tol * 1e-2)?;
        Ok::<_, Error>((v, c1, c2, nodes))
    })();
    let secs = start.elapsed().as_secs_f64();
    match out {
        Ok((v, c1, _, nodes)) if m == m2 && k == k2 => {
            h.finish(v, r(c1), Residual::Relative, nodes, secs)
        }
        Ok((v, c1, c2, nodes)) => h.finish(
            v,
            r(0.0),
            Residual::Scaled((c1 * c2).abs().sqrt()),
            nodes,
            secs,
        ),
        Err(e) => h.failure(&e, secs),
    }
}

/// Upper triangle of index pairs for a Parseval suite.
pub fn pairs(d: usize, max_degree: u32) -> Vec<((u32, MultiIndex), (u32, MultiIndex))> {
    let idx = indices(d, max_degree);
    let mut out = Vec::new();
    for a in 0..idx.len() {
        for b in a..idx.len() {
            out.push((idx[a].clone(), idx[b].clone()));
        }
    }
    out
}
