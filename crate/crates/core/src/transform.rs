//! Wrapped functions g_d and h_{m,k}, their closed-form Fourier transforms,
//! and the D, A, B families.
//!
//! The Fourier transform convention is F(f)(ξ) = ∫ e^{−i ξ·x} f(x) dx.
//!
//! Real powers of (1 ± tanh t) and sech² x are taken through stable
//! logarithms; the only complex powers are 2^{complex} with a positive
//! real base, so no branch choice is involved anywhere.

use crate::bases::MultiIndex;
use crate::classical::{continuous_hahn, jacobi, laguerre, HahnSpec, JacobiSpec, LaguerreSpec};
use crate::error::{Error, Result};
use crate::hypergeometric::{eval_2f1_at_2, hyp3f2};
use crate::scalar::{beta, c64, factorial, gamma, pochhammer, LogProduct, C64};
use serde::{Deserialize, Serialize};
use std::f64::consts::LN_2;

fn r(x: f64) -> C64 {
    c64(x, 0.0)
}

/// ln(1 + e^z) without overflow.
fn softplus(z: f64) -> f64 {
    if z > 0.0 {
        z + (-z).exp().ln_1p()
    } else {
        z.exp().ln_1p()
    }
}

/// ln sech² x = ln(1 − tanh² x).
pub fn ln_sech2(x: f64) -> f64 {
    let a = x.abs();
    -2.0 * (a + (-2.0 * a).exp().ln_1p() - LN_2)
}

/// ln(1 + tanh t).
pub fn ln_one_plus_tanh(t: f64) -> f64 {
    LN_2 - softplus(-2.0 * t)
}

/// ln(1 − tanh t).
pub fn ln_one_minus_tanh(t: f64) -> f64 {
    LN_2 - softplus(2.0 * t)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WrapParamsJacobi {
    pub alpha: f64,
    pub zeta: f64,
    pub eta: f64,
    pub beta: f64,
    pub gamma: f64,
    pub mu: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WrapParamsLaguerre {
    pub alpha: f64,
    pub zeta: f64,
    pub beta: f64,
    pub mu: f64,
}

/// Split parameters of the A and B families. B ignores the η pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitParams {
    pub alpha1: f64,
    pub alpha2: f64,
    pub zeta1: f64,
    pub zeta2: f64,
    pub eta1: f64,
    pub eta2: f64,
}

impl SplitParams {
    /// Checked constructor: every entry must be positive.
    pub fn new(
        alpha1: f64,
        alpha2: f64,
        zeta1: f64,
        zeta2: f64,
        eta1: f64,
        eta2: f64,
    ) -> Result<Self> {
        let p = Self {
            alpha1,
            alpha2,
            zeta1,
            zeta2,
            eta1,
            eta2,
        };
        for (name, v) in p.named() {
            if !(v > 0.0) {
                return Err(Error::Domain(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(p)
    }

    /// B-family parameters; the η pair is set to 1 and never read.
    pub fn without_eta(alpha1: f64, alpha2: f64, zeta1: f64, zeta2: f64) -> Result<Self> {
        Self::new(alpha1, alpha2, zeta1, zeta2, 1.0, 1.0)
    }

    pub fn named(&self) -> [(&'static str, f64); 6] {
        [
            ("alpha1", self.alpha1),
            ("alpha2", self.alpha2),
            ("zeta1", self.zeta1),
            ("zeta2", self.zeta2),
            ("eta1", self.eta1),
            ("eta2", self.eta2),
        ]
    }

    /// Exchanges the two members of every pair.
    pub fn swapped(&self) -> Self {
        Self {
            alpha1: self.alpha2,
            alpha2: self.alpha1,
            zeta1: self.zeta2,
            zeta2: self.zeta1,
            eta1: self.eta2,
            eta2: self.eta1,
        }
    }

    pub fn abs_alpha(&self) -> f64 {
        self.alpha1 + self.alpha2
    }

    pub fn abs_zeta(&self) -> f64 {
        self.zeta1 + self.zeta2
    }

    pub fn abs_eta(&self) -> f64 {
        self.eta1 + self.eta2
    }

    /// μ = α₁ + α₂ − 1/2.
    pub fn mu(&self) -> f64 {
        self.abs_alpha() - 0.5
    }

    /// β = |ζ| − |α| − d/2.
    pub fn beta(&self, d: usize) -> f64 {
        self.abs_zeta() - self.abs_alpha() - d as f64 / 2.0
    }

    /// γ = |η| − 1.
    pub fn gamma(&self) -> f64 {
        self.abs_eta() - 1.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrequencyPoint {
    pub xi: Vec<f64>,
    pub xi_last: f64,
}

fn lambda_j(k: &MultiIndex, mu: f64, j: usize) -> f64 {
    mu + k.tail(j + 1) as f64 + (k.dim() - j) as f64 / 2.0
}

/// One axis of g_d: sech²(x)^{α + (d−j)/4 + |k^{j+1}|/2} C_{k_j}^{λ_j}(tanh x).
pub fn g_axis(k: &MultiIndex, alpha: f64, mu: f64, j: usize, x: f64) -> f64 {
    let d = k.dim();
    let p = alpha + (d - j) as f64 / 4.0 + k.tail(j + 1) as f64 / 2.0;
    let c = crate::classical::gegenbauer_real(k.get(j), lambda_j(k, mu, j), x.tanh())
        .expect("terminating Gegenbauer series with λ > 0");
    (p * ln_sech2(x)).exp() * c
}

/// g_d(x; k, α, μ) = Π_j (1 − tanh² x_j)^{α+(d−j)/4} P_k^μ(ϑ(x)).
pub fn eval_g(k: &MultiIndex, alpha: f64, mu: f64, x: &[f64]) -> Result<f64> {
    if x.len() != k.dim() {
        return Err(Error::Domain(format!(
            "g_d needs {} coordinates, got {}",
            k.dim(),
            x.len()
        )));
    }
    Ok((1..=k.dim())
        .map(|j| g_axis(k, alpha, mu, j, x[j - 1]))
        .product())
}

/// ϑ_j = tanh x_j √(Π_{i<j} sech² x_i), the map of ℝ^d into the ball.
pub fn theta_map(x: &[f64]) -> Vec<f64> {
    let mut scale = 1.0f64;
    x.iter()
        .map(|&xi| {
            let v = xi.tanh() * scale.sqrt();
            scale *= (ln_sech2(xi)).exp();
            v
        })
        .collect()
}

/// 2^{−|k|/2}(1+tanh t)^{ζ+|k|/2}(1−tanh t)^η P_{m−|k|}^{(|k|+μ+β+(d−1)/2, γ)}(−tanh t) g_d(x).
pub fn eval_h_jacobi(
    m: u32,
    k: &MultiIndex,
    p: &WrapParamsJacobi,
    t: f64,
    x: &[f64],
) -> Result<f64> {
    let g = eval_g(k, p.alpha, p.mu, x)?;
    Ok(h_jacobi_t(m, k, p, t)? * g)
}

/// e^{−e^t/2 + ζt + |k|t/2} L_{m−|k|}^{|k|+μ+β+(d−1)/2}(e^t) g_d(x).
pub fn eval_h_laguerre(
    m: u32,
    k: &MultiIndex,
    p: &WrapParamsLaguerre,
    t: f64,
    x: &[f64],
) -> Result<f64> {
    let g = eval_g(k, p.alpha, p.mu, x)?;
    Ok(h_laguerre_t(m, k, p, t)? * g)
}

fn degree_gap(m: u32, k: &MultiIndex) -> Result<u32> {
    let n = k.total();
    if n > m {
        return Err(Error::Domain(format!("|k| = {n} exceeds m = {m}")));
    }
    Ok(n)
}

/// t-part of the Laguerre wrapped function.
pub fn h_laguerre_t(m: u32, k: &MultiIndex, p: &WrapParamsLaguerre, t: f64) -> Result<f64> {
    let n = degree_gap(m, k)?;
    let nf = n as f64;
    let et = t.exp();
    let ln = -et / 2.0 + (p.zeta + nf / 2.0) * t;
    if ln < -740.0 {
        return Ok(0.0);
    }
    let a = nf + p.mu + p.beta + (k.dim() as f64 - 1.0) / 2.0;
    let lp = laguerre(
        LaguerreSpec {
            degree: m - n,
            alpha: a,
        },
        r(et),
    )?
    .re;
    Ok(ln.exp() * lp)
}

/// t-part of the Jacobi wrapped function, including the 2^{−|k|/2} factor.
pub fn h_jacobi_t(m: u32, k: &MultiIndex, p: &WrapParamsJacobi, t: f64) -> Result<f64> {
    let n = degree_gap(m, k)?;
    let nf = n as f64;
    let a = nf + p.mu + p.beta + (k.dim() as f64 - 1.0) / 2.0;
    let jp = jacobi(
        JacobiSpec {
            degree: m - n,
            alpha: a,
            beta: p.gamma,
        },
        r(-t.tanh()),
    )?
    .re;
    let ln =
        -nf / 2.0 * LN_2 + (p.zeta + nf / 2.0) * ln_one_plus_tanh(t) + p.eta * ln_one_minus_tanh(t);
    Ok(ln.exp() * jp)
}

/// a = α + |k^{j+1}|/2 + (d−j)/4, the beta-integral parameter of axis j.
fn phi_a(k: &MultiIndex, alpha: f64, j: usize) -> f64 {
    alpha + k.tail(j + 1) as f64 / 2.0 + (k.dim() - j) as f64 / 4.0
}

fn check_axis(k: &MultiIndex, j: usize) -> Result<()> {
    if j == 0 || j > k.dim() {
        return Err(Error::Domain(format!(
            "axis {j} is outside 1..={}",
            k.dim()
        )));
    }
    Ok(())
}

/// φ_j^d(α, μ, k; ξ) = B(a + iξ/2, a − iξ/2)
/// ·3F2(−k_j, k_j + 2(K+μ+(d−j)/2), a + iξ/2; K+μ+(d−j+1)/2, 2a; 1), K = |k^{j+1}|.
pub fn phi_factor(j: usize, alpha: f64, mu: f64, k: &MultiIndex, xi: f64) -> Result<C64> {
    check_axis(k, j)?;
    let a = phi_a(k, alpha, j);
    if !(a > 0.0) {
        return Err(Error::Domain(format!(
            "phi needs α + |k^(j+1)|/2 + (d−j)/4 > 0, got {a}"
        )));
    }
    let kk = k.tail(j + 1) as f64;
    let dj = (k.dim() - j) as f64;
    let kj = k.get(j) as f64;
    let i = C64::i();
    let s = r(a) + i * (xi / 2.0);
    let b = beta(s, s.conj())?;
    let f = hyp3f2(
        [r(-kj), r(kj + 2.0 * (kk + mu + dj / 2.0)), s],
        [r(kk + mu + (dj + 1.0) / 2.0), r(2.0 * a)],
        r(1.0),
    )?;
    Ok(b * f)
}

/// φ_j in continuous Hahn form:
/// k_j! / (i^{k_j} (K+μ+(d−j+1)/2)_{k_j} (2a)_{k_j}) · B · p_{k_j}(ξ/2; a, b', b', a),
/// b' = μ − α + (K+1)/2 + (d−j)/4.
pub fn phi_factor_hahn(j: usize, alpha: f64, mu: f64, k: &MultiIndex, xi: f64) -> Result<C64> {
    check_axis(k, j)?;
    let a = phi_a(k, alpha, j);
    if !(a > 0.0) {
        return Err(Error::Domain(format!(
            "phi needs α + |k^(j+1)|/2 + (d−j)/4 > 0, got {a}"
        )));
    }
    let kk = k.tail(j + 1) as f64;
    let dj = (k.dim() - j) as f64;
    let kj = k.get(j);
    let i = C64::i();
    let s = r(a) + i * (xi / 2.0);
    let b = beta(s, s.conj())?;
    let bp = mu - alpha + (kk + 1.0) / 2.0 + dj / 4.0;
    let p = continuous_hahn(
        HahnSpec {
            degree: kj,
            a: r(a),
            b: r(bp),
            c: r(bp),
            d: r(a),
        },
        r(xi / 2.0),
    )?;
    let den = i.powu(kj)
        * pochhammer(r(kk + mu + (dj + 1.0) / 2.0), kj as u64)
        * pochhammer(r(2.0 * a), kj as u64);
    if den.norm() == 0.0 {
        return Err(Error::Domain(
            "vanishing Pochhammer denominator in the Hahn form".into(),
        ));
    }
    Ok(r(factorial(kj as u64)) / den * b * p)
}

/// Per-axis normalisation (2(K+μ+(d−j)/2))_{k_j}/k_j! of the transform of g_d.
fn g_axis_weight(k: &MultiIndex, mu: f64, j: usize) -> C64 {
    let kk = k.tail(j + 1) as f64;
    let dj = (k.dim() - j) as f64;
    let kj = k.get(j) as u64;
    pochhammer(r(2.0 * (kk + mu + dj / 2.0)), kj) / factorial(kj)
}

/// Exponent 2dα + d(d−5)/4 + Σ_{j<d} j k_{j+1} of the power of two in F(g_d).
fn g_pow2(k: &MultiIndex, alpha: f64) -> f64 {
    let d = k.dim();
    let df = d as f64;
    let lin: u32 = (1..d).map(|j| j as u32 * k.get(j + 1)).sum();
    2.0 * df * alpha + df * (df - 5.0) / 4.0 + lin as f64
}

/// Closed-form F(g_d)(ξ).
pub fn fourier_g_closed(k: &MultiIndex, alpha: f64, mu: f64, xi: &[f64]) -> Result<C64> {
    if xi.len() != k.dim() {
        return Err(Error::Domain(format!(
            "need {} frequencies, got {}",
            k.dim(),
            xi.len()
        )));
    }
    let mut out = r(g_pow2(k, alpha).exp2());
    for j in 1..=k.dim() {
        out *= g_axis_weight(k, mu, j) * phi_factor(j, alpha, mu, k, xi[j - 1])?;
    }
    Ok(out)
}

/// One axis of the closed-form F(g_d): the factor that multiplies φ_j, with
/// the power of two split evenly so the product over axes is F(g_d).
pub fn fourier_g_axis_closed(
    k: &MultiIndex,
    alpha: f64,
    mu: f64,
    j: usize,
    xi: f64,
) -> Result<C64> {
    let share = g_pow2(k, alpha) / k.dim() as f64;
    Ok(r(share.exp2()) * g_axis_weight(k, mu, j) * phi_factor(j, alpha, mu, k, xi)?)
}

/// Θ = 3F2(−m+|k|, m+μ+β+γ+(d+1)/2, |k|/2+ζ−iξ/2; |k|+μ+β+(d+1)/2, |k|/2+ζ+η; 1).
#[allow(clippy::too_many_arguments)]
pub fn theta_factor(
    m: u32,
    k: &MultiIndex,
    zeta: f64,
    eta: f64,
    beta: f64,
    gamma: f64,
    mu: f64,
    xi_last: f64,
) -> Result<C64> {
    let n = k.total() as f64;
    let d = k.dim() as f64;
    let mf = m as f64;
    hyp3f2(
        [
            r(n - mf),
            r(mf + mu + beta + gamma + (d + 1.0) / 2.0),
            c64(n / 2.0 + zeta, -xi_last / 2.0),
        ],
        [r(n + mu + beta + (d + 1.0) / 2.0), r(n / 2.0 + zeta + eta)],
        r(1.0),
    )
}

/// Λ = 2F1(−m+|k|, ζ+|k|/2−iξ; |k|+μ+β+(d+1)/2; 2).
pub fn lambda_factor(
    m: u32,
    k: &MultiIndex,
    zeta: f64,
    mu: f64,
    beta: f64,
    xi_last: f64,
) -> Result<C64> {
    let n = k.total() as f64;
    let d = k.dim() as f64;
    eval_2f1_at_2(
        r(n - m as f64),
        c64(zeta + n / 2.0, -xi_last),
        r(n + mu + beta + (d + 1.0) / 2.0),
    )
}

/// t-part of the closed-form transform of the Jacobi wrapped function:
/// everything in F(h) except F(g_d).
pub fn fourier_h_jacobi_t(
    m: u32,
    k: &MultiIndex,
    p: &WrapParamsJacobi,
    xi_last: f64,
) -> Result<C64> {
    let n = k.total();
    if n > m {
        return Err(Error::Domain(format!("|k| = {n} exceeds m = {m}")));
    }
    let nf = n as f64;
    if !(p.zeta + nf / 2.0 > 0.0 && p.eta > 0.0) {
        return Err(Error::Domain(format!(
            "the Jacobi transform needs ζ + |k|/2 > 0 and η > 0, got ({}, {})",
            p.zeta + nf / 2.0,
            p.eta
        )));
    }
    let d = k.dim() as f64;
    let mut q = LogProduct::one();
    q.mul_pow2(r(p.zeta + p.eta - 1.0));
    q.mul_pochhammer(r(nf + p.mu + p.beta + (d + 1.0) / 2.0), (m - n) as u64);
    q.mul_gamma(c64(p.zeta + nf / 2.0, -xi_last / 2.0))?;
    q.mul_gamma(c64(p.eta, xi_last / 2.0))?;
    q.div_factorial((m - n) as u64);
    q.div_gamma(r(nf / 2.0 + p.zeta + p.eta))?;
    let th = theta_factor(m, k, p.zeta, p.eta, p.beta, p.gamma, p.mu, xi_last)?;
    Ok(q.value()? * th)
}

/// Closed-form F(h_{m,k}) for the Jacobi wrapped function.
pub fn fourier_h_jacobi_closed(
    m: u32,
    k: &MultiIndex,
    p: &WrapParamsJacobi,
    freq: &FrequencyPoint,
) -> Result<C64> {
    Ok(fourier_h_jacobi_t(m, k, p, freq.xi_last)? * fourier_g_closed(k, p.alpha, p.mu, &freq.xi)?)
}

/// t-part of the closed-form Laguerre transform.
pub fn fourier_h_laguerre_t(
    m: u32,
    k: &MultiIndex,
    p: &WrapParamsLaguerre,
    xi_last: f64,
) -> Result<C64> {
    let n = k.total();
    if n > m {
        return Err(Error::Domain(format!("|k| = {n} exceeds m = {m}")));
    }
    let nf = n as f64;
    if !(p.zeta + nf / 2.0 > 0.0) {
        return Err(Error::Domain(format!(
            "the Laguerre transform needs ζ + |k|/2 > 0, got {}",
            p.zeta + nf / 2.0
        )));
    }
    let d = k.dim() as f64;
    let mut q = LogProduct::one();
    q.mul_pow2(c64(p.zeta + nf / 2.0, -xi_last));
    q.mul_pochhammer(r(nf + p.mu + p.beta + (d + 1.0) / 2.0), (m - n) as u64);
    q.mul_gamma(c64(p.zeta + nf / 2.0, -xi_last))?;
    q.div_factorial((m - n) as u64);
    let la = lambda_factor(m, k, p.zeta, p.mu, p.beta, xi_last)?;
    Ok(q.value()? * la)
}

/// Closed-form F(h_{m,k}) for the Laguerre wrapped function.
pub fn fourier_h_laguerre_closed(
    m: u32,
    k: &MultiIndex,
    p: &WrapParamsLaguerre,
    freq: &FrequencyPoint,
) -> Result<C64> {
    Ok(
        fourier_h_laguerre_t(m, k, p, freq.xi_last)?
            * fourier_g_closed(k, p.alpha, p.mu, &freq.xi)?,
    )
}

fn check_len(k: &MultiIndex, x: &[C64]) -> Result<()> {
    if x.len() != k.dim() {
        return Err(Error::Domain(format!(
            "need {} coordinates, got {}",
            k.dim(),
            x.len()
        )));
    }
    Ok(())
}

/// One factor of D_k: Γ(a₁−x/2)Γ(a₁+x/2)
/// ·3F2(−k_j, k_j+2(K+|α|+(d−j−1)/2), a₁+x/2; K+|α|+(d−j)/2, K+2α₁+(d−j)/2; 1).
pub fn d_axis(k: &MultiIndex, alpha1: f64, alpha2: f64, j: usize, x: C64) -> Result<C64> {
    let kk = k.tail(j + 1) as f64;
    let dj = (k.dim() - j) as f64;
    let kj = k.get(j) as f64;
    let aa = alpha1 + alpha2;
    let a1 = alpha1 + kk / 2.0 + dj / 4.0;
    let g = gamma(r(a1) - x / 2.0)? * gamma(r(a1) + x / 2.0)?;
    let f = hyp3f2(
        [
            r(-kj),
            r(kj + 2.0 * (kk + aa + (dj - 1.0) / 2.0)),
            r(a1) + x / 2.0,
        ],
        [r(kk + aa + dj / 2.0), r(kk + 2.0 * alpha1 + dj / 2.0)],
        r(1.0),
    )?;
    Ok(g * f)
}

/// Hahn form of one D factor.
pub fn d_axis_hahn(k: &MultiIndex, alpha1: f64, alpha2: f64, j: usize, x: C64) -> Result<C64> {
    let kk = k.tail(j + 1) as f64;
    let dj = (k.dim() - j) as f64;
    let kj = k.get(j);
    let aa = alpha1 + alpha2;
    let a1 = alpha1 + kk / 2.0 + dj / 4.0;
    let a2 = alpha2 + kk / 2.0 + dj / 4.0;
    let i = C64::i();
    let g = gamma(r(a1) - x / 2.0)? * gamma(r(a1) + x / 2.0)?;
    let p = continuous_hahn(
        HahnSpec {
            degree: kj,
            a: r(a1),
            b: r(a2),
            c: r(a2),
            d: r(a1),
        },
        -i * x / 2.0,
    )?;
    let den = i.powu(kj)
        * pochhammer(r(kk + 2.0 * alpha1 + dj / 2.0), kj as u64)
        * pochhammer(r(kk + aa + dj / 2.0), kj as u64);
    if den.norm() == 0.0 {
        return Err(Error::Domain(
            "vanishing Pochhammer denominator in the Hahn form".into(),
        ));
    }
    Ok(r(factorial(kj as u64)) / den * g * p)
}

/// D_k(x; α₁, α₂) in ₃F₂ form.
pub fn eval_d(k: &MultiIndex, alpha1: f64, alpha2: f64, x: &[C64]) -> Result<C64> {
    check_len(k, x)?;
    (1..=k.dim()).try_fold(r(1.0), |acc, j| {
        Ok(acc * d_axis(k, alpha1, alpha2, j, x[j - 1])?)
    })
}

/// D_k(x; α₁, α₂) in continuous Hahn form.
pub fn eval_d_hahn(k: &MultiIndex, alpha1: f64, alpha2: f64, x: &[C64]) -> Result<C64> {
    check_len(k, x)?;
    (1..=k.dim()).try_fold(r(1.0), |acc, j| {
        Ok(acc * d_axis_hahn(k, alpha1, alpha2, j, x[j - 1])?)
    })
}

/// t-part of A: Γ(|k|/2+ζ₁−t/2)·3F2(−m+|k|, m+|ζ|+|η|−1, |k|/2+ζ₁−t/2; |k|+|ζ|, |k|/2+ζ₁+η₁; 1).
pub fn a_t_part(m: u32, k: &MultiIndex, p: &SplitParams, t: C64) -> Result<C64> {
    let n = k.total();
    if n > m {
        return Err(Error::Domain(format!("|k| = {n} exceeds m = {m}")));
    }
    let nf = n as f64;
    let mf = m as f64;
    let s = r(nf / 2.0 + p.zeta1) - t / 2.0;
    let f = hyp3f2(
        [r(nf - mf), r(mf + p.abs_zeta() + p.abs_eta() - 1.0), s],
        [r(nf + p.abs_zeta()), r(nf / 2.0 + p.zeta1 + p.eta1)],
        r(1.0),
    )?;
    Ok(gamma(s)? * f)
}

/// Hahn form of the t-part of A.
pub fn a_t_part_hahn(m: u32, k: &MultiIndex, p: &SplitParams, t: C64) -> Result<C64> {
    let n = k.total();
    if n > m {
        return Err(Error::Domain(format!("|k| = {n} exceeds m = {m}")));
    }
    let nf = n as f64;
    let big_n = m - n;
    let i = C64::i();
    let s = r(nf / 2.0 + p.zeta1) - t / 2.0;
    let hp = continuous_hahn(
        HahnSpec {
            degree: big_n,
            a: r(nf / 2.0 + p.zeta1),
            b: r(p.eta2),
            c: r(nf / 2.0 + p.zeta2),
            d: r(p.eta1),
        },
        i * t / 2.0,
    )?;
    let den = i.powu(big_n)
        * pochhammer(r(nf + p.abs_zeta()), big_n as u64)
        * pochhammer(r(nf / 2.0 + p.zeta1 + p.eta1), big_n as u64);
    if den.norm() == 0.0 {
        return Err(Error::Domain(
            "vanishing Pochhammer denominator in the Hahn form".into(),
        ));
    }
    Ok(r(factorial(big_n as u64)) / den * gamma(s)? * hp)
}

/// A_{m,k}^{(d+1)}(t, x; α₁, α₂, ζ₁, ζ₂, η₁, η₂), ₃F₂ form.
pub fn eval_a(m: u32, k: &MultiIndex, p: &SplitParams, t: C64, x: &[C64]) -> Result<C64> {
    Ok(a_t_part(m, k, p, t)? * eval_d(k, p.alpha1, p.alpha2, x)?)
}

/// A in continuous Hahn form.
pub fn eval_a_hahn(m: u32, k: &MultiIndex, p: &SplitParams, t: C64, x: &[C64]) -> Result<C64> {
    Ok(a_t_part_hahn(m, k, p, t)? * eval_d_hahn(k, p.alpha1, p.alpha2, x)?)
}

/// t-part of B: Γ(ζ₁+|k|/2−t)·2F1(−m+|k|, ζ₁+|k|/2−t; |k|+|ζ|; 2).
pub fn b_t_part(m: u32, k: &MultiIndex, p: &SplitParams, t: C64) -> Result<C64> {
    let n = k.total();
    if n > m {
        return Err(Error::Domain(format!("|k| = {n} exceeds m = {m}")));
    }
    let nf = n as f64;
    let s = r(p.zeta1 + nf / 2.0) - t;
    let f = eval_2f1_at_2(r(nf - m as f64), s, r(nf + p.abs_zeta()))?;
    Ok(gamma(s)? * f)
}

/// B_{m,k}^{(d+1)}(t, x; α₁, α₂, ζ₁, ζ₂).
pub fn eval_b(m: u32, k: &MultiIndex, p: &SplitParams, t: C64, x: &[C64]) -> Result<C64> {
    Ok(b_t_part(m, k, p, t)? * eval_d(k, p.alpha1, p.alpha2, x)?)
}

/// B with the x-part in continuous Hahn form.
pub fn eval_b_hahn(m: u32, k: &MultiIndex, p: &SplitParams, t: C64, x: &[C64]) -> Result<C64> {
    Ok(b_t_part(m, k, p, t)? * eval_d_hahn(k, p.alpha1, p.alpha2, x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{eval_ball_poly, BallBasisSpec, BallPoint};

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec()).unwrap()
    }

    fn rel(a: C64, b: C64) -> f64 {
        (a - b).norm() / b.norm().max(a.norm())
    }

    #[test]
    fn stable_logs() {
        for &x in &[-30.0, -2.0, -0.1, 0.0, 0.7, 5.0, 400.0] {
            let x: f64 = x;
            if x.abs() < 10.0 {
                let lc = x.cosh().ln();
                assert!((ln_sech2(x) + 2.0 * lc).abs() < 1e-13);
                assert!((ln_one_plus_tanh(x) - (x - lc)).abs() < 1e-13);
                assert!((ln_one_minus_tanh(x) - (-x - lc)).abs() < 1e-13);
            }
            assert!(ln_sech2(x).is_finite());
        }
    }

    #[test]
    fn g_examples() {
        let (alpha, mu, x) = (0.9, 0.6, 0.45f64);
        let s2 = 1.0 - x.tanh().powi(2);
        assert!((eval_g(&mi(&[0]), alpha, mu, &[x]).unwrap() - s2.powf(alpha)).abs() < 1e-15);
        let v = eval_g(&mi(&[1]), alpha, mu, &[x]).unwrap();
        assert!((v - s2.powf(alpha) * 2.0 * mu * x.tanh()).abs() < 1e-15);
    }

    #[test]
    fn g_factorizes_through_ball_poly() {
        let (alpha, mu) = (0.7, 0.4);
        for k in [mi(&[1, 2]), mi(&[2, 0]), mi(&[0, 3]), mi(&[1, 1, 1])] {
            let d = k.dim();
            let x: Vec<f64> = (0..d).map(|i| 0.3 - 0.55 * i as f64).collect();
            let th = theta_map(&x);
            let ball = eval_ball_poly(
                &BallBasisSpec::new(k.clone(), mu).unwrap(),
                &BallPoint::new(th).unwrap(),
            )
            .unwrap();
            let pre: f64 = (1..=d)
                .map(|j| (1.0 - x[j - 1].tanh().powi(2)).powf(alpha + (d - j) as f64 / 4.0))
                .product();
            let g = eval_g(&k, alpha, mu, &x).unwrap();
            assert!((g - pre * ball).abs() < 1e-13 * g.abs().max(1e-3), "k={k}");
        }
    }

    #[test]
    fn h_examples() {
        let k = mi(&[0]);
        let p = WrapParamsJacobi {
            alpha: 0.8,
            zeta: 1.1,
            eta: 0.6,
            beta: 0.2,
            gamma: 0.3,
            mu: 0.5,
        };
        let (t, x) = (0.3f64, -0.7f64);
        let expect = (1.0 + t.tanh()).powf(1.1)
            * (1.0 - t.tanh()).powf(0.6)
            * (1.0 - x.tanh().powi(2)).powf(0.8);
        assert!((eval_h_jacobi(0, &k, &p, t, &[x]).unwrap() - expect).abs() < 1e-14);
        let q = WrapParamsLaguerre {
            alpha: 0.8,
            zeta: 1.1,
            beta: 0.2,
            mu: 0.5,
        };
        let expect = (-t.exp() / 2.0 + 1.1 * t).exp() * (1.0 - x.tanh().powi(2)).powf(0.8);
        assert!((eval_h_laguerre(0, &k, &q, t, &[x]).unwrap() - expect).abs() < 1e-14);
        assert_eq!(h_laguerre_t(2, &k, &q, 800.0).unwrap(), 0.0);
        assert!(eval_h_jacobi(0, &mi(&[1]), &p, t, &[x]).is_err());
    }

    #[test]
    fn h_jacobi_matches_unwrapped_basis() {
        // h = Π sech^{2α+(d−j)/2} (1+tanh t)^ζ (1−tanh t)^η Q(ς), ς_1 = (1+tanh t)/2, ς_{j+1} = √ς_1 ϑ_j
        use crate::bases::{eval_paraboloid_jacobi, ParaboloidJacobiSpec, ParaboloidPoint};
        let p = WrapParamsJacobi {
            alpha: 0.6,
            zeta: 0.9,
            eta: 0.7,
            beta: 0.3,
            gamma: 0.4,
            mu: 0.8,
        };
        let k = mi(&[1, 1]);
        let (t, x) = (0.35, [0.2, -0.6]);
        let s1 = (1.0 + f64::tanh(t)) / 2.0;
        let th = theta_map(&x);
        let pt = ParaboloidPoint::new(s1, th.iter().map(|v| s1.sqrt() * v).collect(), 1.0).unwrap();
        let spec = ParaboloidJacobiSpec::new(3, k.clone(), p.beta, p.gamma, p.mu).unwrap();
        let q = eval_paraboloid_jacobi(&spec, &pt).unwrap();
        let pre: f64 = (1..=2)
            .map(|j| (1.0 - x[j - 1].tanh().powi(2)).powf(p.alpha + (2 - j) as f64 / 4.0))
            .product::<f64>()
            * (1.0 + t.tanh()).powf(p.zeta)
            * (1.0 - t.tanh()).powf(p.eta);
        let h = eval_h_jacobi(3, &k, &p, t, &x).unwrap();
        assert!((h - pre * q).abs() < 1e-12 * h.abs());
    }

    #[test]
    fn phi_trivial_and_symmetric() {
        let k = mi(&[0]);
        let b = beta(r(0.8), r(0.8)).unwrap();
        assert!(rel(phi_factor(1, 0.8, 0.6, &k, 0.0).unwrap(), b) < 1e-15);
        let k = mi(&[2, 1]);
        for j in 1..=2 {
            let a = phi_factor(j, 0.8, 0.6, &k, 1.3).unwrap();
            let b = phi_factor(j, 0.8, 0.6, &k, -1.3).unwrap();
            assert!(rel(a, b.conj()) < 1e-13);
            let h = phi_factor_hahn(j, 0.8, 0.6, &k, 1.3).unwrap();
            assert!(rel(a, h) < 1e-12);
        }
        assert!(phi_factor(1, -0.5, 0.6, &mi(&[0]), 0.0).is_err());
    }

    #[test]
    fn fourier_g_base_values() {
        let alpha = 0.7;
        let v = fourier_g_closed(&mi(&[0]), alpha, 0.5, &[0.0]).unwrap();
        let e = (2.0 * alpha - 1.0).exp2() * beta(r(alpha), r(alpha)).unwrap().re;
        assert!((v.re - e).abs() < 1e-14 * e);
        let v = fourier_g_closed(&mi(&[0, 0]), alpha, 0.5, &[0.0, 0.0]).unwrap();
        let e = (4.0 * alpha - 1.5).exp2()
            * beta(r(alpha + 0.25), r(alpha + 0.25)).unwrap().re
            * beta(r(alpha), r(alpha)).unwrap().re;
        assert!((v.re - e).abs() < 1e-14 * e);
        let k = mi(&[1, 2]);
        let whole = fourier_g_closed(&k, alpha, 0.9, &[0.4, -1.2]).unwrap();
        let parts = fourier_g_axis_closed(&k, alpha, 0.9, 1, 0.4).unwrap()
            * fourier_g_axis_closed(&k, alpha, 0.9, 2, -1.2).unwrap();
        assert!(rel(whole, parts) < 1e-13);
    }

    #[test]
    fn theta_lambda_collapse() {
        let k = mi(&[1]);
        assert_eq!(
            theta_factor(1, &k, 0.7, 0.4, 0.2, 0.3, 0.5, 1.7).unwrap(),
            r(1.0)
        );
        assert_eq!(lambda_factor(1, &k, 0.7, 0.5, 0.2, 1.7).unwrap(), r(1.0));
        let k0 = mi(&[0]);
        let (zeta, mu, b, xi) = (0.7, 0.5, 0.2, 0.9);
        let l = lambda_factor(1, &k0, zeta, mu, b, xi).unwrap();
        let e = r(1.0) - 2.0 * c64(zeta, -xi) / (mu + b + 1.0);
        assert!(rel(l, e) < 1e-15);
        let t = theta_factor(2, &k0, 0.7, 0.4, 0.2, 0.3, 0.5, 1.1).unwrap();
        let t2 = theta_factor(2, &k0, 0.7, 0.4, 0.2, 0.3, 0.5, -1.1).unwrap();
        assert!(rel(t, t2.conj()) < 1e-13);
    }

    #[test]
    fn closed_form_base_cases() {
        let k = mi(&[0]);
        let freq = FrequencyPoint {
            xi: vec![0.0],
            xi_last: 0.0,
        };
        let q = WrapParamsLaguerre {
            alpha: 0.9,
            zeta: 1.3,
            beta: 0.2,
            mu: 0.5,
        };
        let v = fourier_h_laguerre_closed(0, &k, &q, &freq).unwrap();
        let e = 1.3f64.exp2()
            * gamma(r(1.3)).unwrap().re
            * (2.0 * 0.9 - 1.0f64).exp2()
            * beta(r(0.9), r(0.9)).unwrap().re;
        assert!((v.re - e).abs() < 1e-13 * e && v.im.abs() < 1e-13 * e);
        let p = WrapParamsJacobi {
            alpha: 0.9,
            zeta: 1.3,
            eta: 0.8,
            beta: 0.2,
            gamma: 0.3,
            mu: 0.5,
        };
        let v = fourier_h_jacobi_closed(0, &k, &p, &freq).unwrap();
        let e = (1.3f64 + 0.8 - 1.0).exp2()
            * beta(r(1.3), r(0.8)).unwrap().re
            * (2.0 * 0.9 - 1.0f64).exp2()
            * beta(r(0.9), r(0.9)).unwrap().re;
        assert!((v.re - e).abs() < 1e-13 * e);
        let f1 = FrequencyPoint {
            xi: vec![0.5],
            xi_last: -0.3,
        };
        let f2 = FrequencyPoint {
            xi: vec![-0.5],
            xi_last: 0.3,
        };
        let a = fourier_h_jacobi_closed(2, &mi(&[1]), &p, &f1).unwrap();
        let b = fourier_h_jacobi_closed(2, &mi(&[1]), &p, &f2).unwrap();
        assert!(rel(a, b.conj()) < 1e-12);
    }

    #[test]
    fn d_family() {
        let k = mi(&[0]);
        let x = [c64(0.3, -0.2)];
        let e = gamma(r(0.8) - x[0] / 2.0).unwrap() * gamma(r(0.8) + x[0] / 2.0).unwrap();
        assert!(rel(eval_d(&k, 0.8, 1.1, &x).unwrap(), e) < 1e-14);
        let k = mi(&[2, 1]);
        let x = [c64(0.3, -0.2), c64(-0.5, 0.9)];
        let a = eval_d(&k, 0.8, 1.1, &x).unwrap();
        let b = eval_d_hahn(&k, 0.8, 1.1, &x).unwrap();
        assert!(rel(a, b) < 1e-12);
    }

    #[test]
    fn a_b_collapse_and_forms() {
        let p = SplitParams::new(0.7, 1.2, 0.9, 1.4, 0.6, 1.1).unwrap();
        let k = mi(&[1]);
        let (t, x) = (c64(0.4, -0.3), [c64(-0.2, 0.5)]);
        let d = eval_d(&k, p.alpha1, p.alpha2, &x).unwrap();
        let a = eval_a(1, &k, &p, t, &x).unwrap();
        assert!(rel(a, gamma(r(0.5 + 0.9) - t / 2.0).unwrap() * d) < 1e-14);
        let b = eval_b(1, &k, &p, t, &x).unwrap();
        assert!(rel(b, gamma(r(0.9 + 0.5) - t).unwrap() * d) < 1e-14);
        for m in 1..=4 {
            let a = eval_a(m, &k, &p, t, &x).unwrap();
            let h = eval_a_hahn(m, &k, &p, t, &x).unwrap();
            assert!(rel(a, h) < 1e-11, "m={m}");
        }
        assert!(SplitParams::new(0.7, 0.0, 1.0, 1.0, 1.0, 1.0).is_err());
        let s = p.swapped();
        assert_eq!((s.alpha1, s.zeta1, s.eta1), (1.2, 1.4, 1.1));
        assert!((p.mu() - 1.4).abs() < 1e-15);
    }

    #[test]
    fn a_term_by_term() {
        // d = 1, m = 1, k = 0: 3F2 has two terms
        let p = SplitParams::new(0.7, 1.2, 0.9, 1.4, 0.6, 1.1).unwrap();
        let k = mi(&[0]);
        let (t, x) = (c64(0.2, 0.1), [c64(0.3, 0.0)]);
        let s = r(0.9) - t / 2.0;
        let series = r(1.0) - (p.abs_zeta() + p.abs_eta()) * s / (p.abs_zeta() * (0.9 + 0.6));
        let d = gamma(r(0.7) - x[0] / 2.0).unwrap() * gamma(r(0.7) + x[0] / 2.0).unwrap();
        let e = gamma(s).unwrap() * series * d;
        assert!(rel(eval_a(1, &k, &p, t, &x).unwrap(), e) < 1e-14);
    }
}
