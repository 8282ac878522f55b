//! Orthogonal polynomials on the unit ball B^d and on the solid paraboloid
//! {‖x‖² ≤ t, 0 ≤ t ≤ b}.
//!
//! The ball basis is the nested Gegenbauer product
//!
//! P_k^μ(x) = Π_j (1 − ‖x_{j−1}‖²)^{k_j/2} C_{k_j}^{λ_j}(x_j / √(1 − ‖x_{j−1}‖²)),
//! λ_j = μ + |k^{j+1}| + (d − j)/2,
//!
//! where ‖x_0‖ = 0 and |k^j| = k_j + ⋯ + k_d. Each factor is evaluated in
//! homogenized form s^{k/2} C_k^λ(u/√s), a polynomial in (u, s), so the
//! boundary s = 0 needs no special case. The same trick gives
//! t^{n/2} P_k(x/√t) on the paraboloid, including the apex t = 0.
//!
//! The basis is said to have "parity" in the literature without a formal
//! definition; here it is exactly this product basis, which satisfies
//! P_k(−x) = (−1)^{|k|} P_k(x).

use crate::classical::{jacobi, jacobi_norm, laguerre, laguerre_norm, JacobiSpec, LaguerreSpec};
use crate::error::{Error, Result};
use crate::quadrature::{gauss_laguerre, tanh_sinh_nodes, QuadResult};
use crate::scalar::{c64, pochhammer, LogProduct, C64};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// Multi-index k = (k_1, …, k_d).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex {
    entries: Vec<u32>,
}

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain(
                "a multi-index needs at least one entry".into(),
            ));
        }
        Ok(Self { entries })
    }

    pub fn zeros(d: usize) -> Self {
        Self {
            entries: vec![0; d.max(1)],
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// k_j for 1-based j.
    pub fn get(&self, j: usize) -> u32 {
        self.entries[j - 1]
    }

    /// |k^j| = k_j + ⋯ + k_d for 1-based j; tail(d+1) = 0.
    pub fn tail(&self, j: usize) -> u32 {
        self.entries[(j - 1).min(self.entries.len())..].iter().sum()
    }

    /// |k|.
    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// All multi-indices in dimension d with |k| = n, in lexicographically
    /// decreasing order of (k_1, k_2, …).
    pub fn with_total(d: usize, n: u32) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; d];
        fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if pos + 1 == cur.len() {
                cur[pos] = left;
                out.push(MultiIndex {
                    entries: cur.clone(),
                });
                return;
            }
            for v in (0..=left).rev() {
                cur[pos] = v;
                rec(pos + 1, left - v, cur, out);
            }
        }
        if d > 0 {
            rec(0, n, &mut cur, &mut out);
        }
        out
    }

    /// All multi-indices with |k| ≤ n, grouped by total degree.
    pub fn up_to(d: usize, n: u32) -> Vec<Self> {
        (0..=n).flat_map(|t| Self::with_total(d, t)).collect()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    /// Accepts "1,0,2", "(1,0,2)" or "1 0 2".
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries: std::result::Result<Vec<u32>, _> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(str::parse::<u32>)
            .collect();
        match entries {
            Ok(e) if !e.is_empty() => Ok(Self { entries: e }),
            _ => Err(Error::Parse(format!(
                "malformed multi-index {s:?}: expected non-negative integers like 1,0,2"
            ))),
        }
    }
}

/// Slack allowed on the closed-domain checks.
const DOMAIN_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct BallPoint {
    pub coords: Vec<f64>,
}

impl BallPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        let r2: f64 = coords.iter().map(|x| x * x).sum();
        if coords.is_empty() || !(r2 <= 1.0 + DOMAIN_SLACK) {
            return Err(Error::Domain(format!(
                "point with ‖x‖² = {r2} is outside the unit ball"
            )));
        }
        Ok(Self { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParaboloidPoint {
    pub t: f64,
    pub x: Vec<f64>,
    /// Height b; 1 for the Jacobi family, infinity for the Laguerre family.
    pub height_bound: f64,
}

impl ParaboloidPoint {
    pub fn new(t: f64, x: Vec<f64>, height_bound: f64) -> Result<Self> {
        let r2: f64 = x.iter().map(|v| v * v).sum();
        if x.is_empty() {
            return Err(Error::Domain(
                "paraboloid point needs d ≥ 1 coordinates".into(),
            ));
        }
        if !(t >= 0.0 && t <= height_bound && r2 <= t * (1.0 + DOMAIN_SLACK) + DOMAIN_SLACK) {
            return Err(Error::Domain(format!(
                "(t, ‖x‖²) = ({t}, {r2}) is outside the paraboloid with b = {height_bound}"
            )));
        }
        Ok(Self { t, x, height_bound })
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BallBasisSpec {
    pub index: MultiIndex,
    pub mu: f64,
}

impl BallBasisSpec {
    pub fn new(index: MultiIndex, mu: f64) -> Result<Self> {
        if !(mu > -0.5) {
            return Err(Error::Domain(format!(
                "ball basis needs mu > -1/2, got {mu}"
            )));
        }
        Ok(Self { index, mu })
    }

    /// λ_j = μ + |k^{j+1}| + (d − j)/2 for 1-based j.
    pub fn lambda(&self, j: usize) -> f64 {
        let d = self.index.dim();
        self.mu + self.index.tail(j + 1) as f64 + (d - j) as f64 / 2.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParaboloidJacobiSpec {
    pub total_degree: u32,
    pub ball_index: MultiIndex,
    pub beta: f64,
    pub gamma: f64,
    pub mu: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParaboloidLaguerreSpec {
    pub total_degree: u32,
    pub ball_index: MultiIndex,
    pub beta: f64,
    pub mu: f64,
}

fn check_paraboloid(m: u32, k: &MultiIndex, beta: f64, mu: f64) -> Result<()> {
    let d = k.dim() as f64;
    if k.total() > m {
        return Err(Error::Domain(format!(
            "|k| = {} exceeds m = {m}",
            k.total()
        )));
    }
    if !(beta > -(d + 1.0) / 2.0) {
        return Err(Error::Domain(format!(
            "beta must exceed -(d+1)/2, got {beta}"
        )));
    }
    if !(mu > -0.5) {
        return Err(Error::Domain(format!("mu must exceed -1/2, got {mu}")));
    }
    Ok(())
}

impl ParaboloidJacobiSpec {
    pub fn new(
        total_degree: u32,
        ball_index: MultiIndex,
        beta: f64,
        gamma: f64,
        mu: f64,
    ) -> Result<Self> {
        check_paraboloid(total_degree, &ball_index, beta, mu)?;
        if !(gamma > -1.0) {
            return Err(Error::Domain(format!("gamma must exceed -1, got {gamma}")));
        }
        Ok(Self {
            total_degree,
            ball_index,
            beta,
            gamma,
            mu,
        })
    }

    /// α_n = n + β + μ + (d − 1)/2 with n = |k|.
    pub fn alpha_n(&self) -> f64 {
        alpha_n(&self.ball_index, self.beta, self.mu)
    }
}

impl ParaboloidLaguerreSpec {
    pub fn new(total_degree: u32, ball_index: MultiIndex, beta: f64, mu: f64) -> Result<Self> {
        check_paraboloid(total_degree, &ball_index, beta, mu)?;
        Ok(Self {
            total_degree,
            ball_index,
            beta,
            mu,
        })
    }

    pub fn alpha_n(&self) -> f64 {
        alpha_n(&self.ball_index, self.beta, self.mu)
    }
}

fn alpha_n(k: &MultiIndex, beta: f64, mu: f64) -> f64 {
    k.total() as f64 + beta + mu + (k.dim() as f64 - 1.0) / 2.0
}

/// s^{k/2} C_k^λ(u/√s) = Σ_i (−1)^i (λ)_{k−i} / (i! (k−2i)!) (2u)^{k−2i} s^i.
pub fn homogeneous_gegenbauer(k: u32, lambda: f64, u: f64, s: f64) -> f64 {
    let mut sum = 0.0;
    let mut inv_fact_i = 1.0;
    for i in 0..=k / 2 {
        if i > 0 {
            inv_fact_i /= i as f64;
        }
        let rest = k - 2 * i;
        let coef = pochhammer(c64(lambda, 0.0), (k - i) as u64).re * inv_fact_i
            / crate::scalar::factorial(rest as u64);
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * coef * (2.0 * u).powi(rest as i32) * s.powi(i as i32);
    }
    sum
}

/// r^{|k|} P_k^μ(x/r) with r² = `r2`; r2 = 1 is the plain ball polynomial.
pub fn scaled_ball_poly(k: &MultiIndex, mu: f64, x: &[f64], r2: f64) -> f64 {
    let d = k.dim();
    let mut s = r2;
    let mut prod = 1.0;
    for j in 1..=d {
        let kj = k.get(j);
        let lambda = mu + k.tail(j + 1) as f64 + (d - j) as f64 / 2.0;
        if kj > 0 {
            prod *= homogeneous_gegenbauer(kj, lambda, x[j - 1], s.max(0.0));
        }
        s -= x[j - 1] * x[j - 1];
    }
    prod
}

/// P_k^μ(x).
pub fn eval_ball_poly(spec: &BallBasisSpec, p: &BallPoint) -> Result<f64> {
    if p.dim() != spec.index.dim() {
        return Err(Error::Domain(format!(
            "point has dimension {} but the index has {}",
            p.dim(),
            spec.index.dim()
        )));
    }
    Ok(scaled_ball_poly(&spec.index, spec.mu, &p.coords, 1.0))
}

/// h_k^μ = ∫_{B^d} P_k² (1 − ‖x‖²)^{μ−1/2} dx.
pub fn ball_norm(spec: &BallBasisSpec, d: usize) -> Result<f64> {
    let k = &spec.index;
    if k.dim() != d {
        return Err(Error::Domain(format!(
            "index dimension {} differs from d = {d}",
            k.dim()
        )));
    }
    let mu = spec.mu;
    let df = d as f64;
    let r = |x: f64| c64(x, 0.0);
    let n = k.total() as u64;
    let mut p = LogProduct::one();
    p.mul_pow(PI, df / 2.0);
    p.mul_gamma(r(mu + 0.5))?;
    p.mul_pochhammer(r(mu + df / 2.0), n);
    p.div_gamma(r(mu + (df + 1.0) / 2.0 + n as f64))?;
    for j in 1..=d {
        let kj = k.get(j) as u64;
        let tj = k.tail(j) as u64;
        let t1 = k.tail(j + 1) as f64;
        let dj = (d - j) as f64;
        p.mul_pochhammer(r(mu + dj / 2.0), tj);
        p.mul_pochhammer(r(2.0 * mu + 2.0 * t1 + dj), kj);
        p.div_factorial(kj);
        p.div_pochhammer(r(mu + (dj + 1.0) / 2.0), tj)?;
    }
    Ok(p.value()?.re)
}

/// Q^n_{k,m}(t, x) = P_{m−n}^{(α_n, γ)}(1 − 2t) t^{n/2} P_k(x/√t).
pub fn eval_paraboloid_jacobi(spec: &ParaboloidJacobiSpec, p: &ParaboloidPoint) -> Result<f64> {
    if p.height_bound != 1.0 {
        return Err(Error::Domain(format!(
            "the Jacobi family lives on b = 1, got b = {}",
            p.height_bound
        )));
    }
    if p.dim() != spec.ball_index.dim() {
        return Err(Error::Domain("point and index dimensions differ".into()));
    }
    let n = spec.ball_index.total();
    let js = JacobiSpec {
        degree: spec.total_degree - n,
        alpha: spec.alpha_n(),
        beta: spec.gamma,
    };
    let radial = jacobi(js, c64(1.0 - 2.0 * p.t, 0.0))?.re;
    Ok(radial * scaled_ball_poly(&spec.ball_index, spec.mu, &p.x, p.t))
}

/// R^n_{k,m}(t, x) = L_{m−n}^{α_n}(t) t^{n/2} P_k(x/√t).
pub fn eval_paraboloid_laguerre(spec: &ParaboloidLaguerreSpec, p: &ParaboloidPoint) -> Result<f64> {
    if p.height_bound != f64::INFINITY {
        return Err(Error::Domain(format!(
            "the Laguerre family lives on b = infinity, got b = {}",
            p.height_bound
        )));
    }
    if p.dim() != spec.ball_index.dim() {
        return Err(Error::Domain("point and index dimensions differ".into()));
    }
    let n = spec.ball_index.total();
    let ls = LaguerreSpec {
        degree: spec.total_degree - n,
        alpha: spec.alpha_n(),
    };
    let radial = laguerre(ls, c64(p.t, 0.0))?.re;
    Ok(radial * scaled_ball_poly(&spec.ball_index, spec.mu, &p.x, p.t))
}

/// 2^{−(α_n+γ+1)} h^{(α_n,γ)}_{m−n} h_k^μ.
pub fn paraboloid_jacobi_norm(spec: &ParaboloidJacobiSpec) -> Result<f64> {
    let n = spec.ball_index.total();
    let a = spec.alpha_n();
    let js = JacobiSpec {
        degree: spec.total_degree - n,
        alpha: a,
        beta: spec.gamma,
    };
    let ball = ball_norm(
        &BallBasisSpec {
            index: spec.ball_index.clone(),
            mu: spec.mu,
        },
        spec.ball_index.dim(),
    )?;
    Ok(2f64.powf(-(a + spec.gamma + 1.0)) * jacobi_norm(js)? * ball)
}

/// Γ(α_n + m − n + 1)/(m − n)! h_k^μ.
pub fn paraboloid_laguerre_norm(spec: &ParaboloidLaguerreSpec) -> Result<f64> {
    let n = spec.ball_index.total();
    let ls = LaguerreSpec {
        degree: spec.total_degree - n,
        alpha: spec.alpha_n(),
    };
    let ball = ball_norm(
        &BallBasisSpec {
            index: spec.ball_index.clone(),
            mu: spec.mu,
        },
        spec.ball_index.dim(),
    )?;
    Ok(laguerre_norm(ls)? * ball)
}

/// Weight on the paraboloid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParaboloidWeight {
    /// t^β (1 − t)^γ (t − ‖x‖²)^{μ−1/2} on b = 1.
    Jacobi { beta: f64, gamma: f64, mu: f64 },
    /// t^β e^{−t} (t − ‖x‖²)^{μ−1/2} on b = ∞.
    Laguerre { beta: f64, mu: f64 },
}

impl ParaboloidWeight {
    pub fn mu(&self) -> f64 {
        match *self {
            Self::Jacobi { mu, .. } | Self::Laguerre { mu, .. } => mu,
        }
    }

    pub fn height_bound(&self) -> f64 {
        match self {
            Self::Jacobi { .. } => 1.0,
            Self::Laguerre { .. } => f64::INFINITY,
        }
    }

    /// Exponent of t in the t-integrand after x = √t y: d/2 + β + μ − 1/2.
    fn t_exponent(&self, d: usize) -> f64 {
        let (beta, mu) = match *self {
            Self::Jacobi { beta, mu, .. } | Self::Laguerre { beta, mu } => (beta, mu),
        };
        d as f64 / 2.0 + beta + mu - 0.5
    }
}

/// Ball nodes in nested coordinates y_1 = v_1, y_j = √(1 − ‖y_{j−1}‖²) v_j.
/// The weight (1 − ‖y‖²)^{μ−1/2} and the Jacobian are folded into the
/// returned weights: axis i carries (1 − v_i²)^{μ − 1/2 + (d − i)/2}.
pub fn ball_nodes(d: usize, mu: f64, level: u32) -> Vec<(Vec<f64>, f64)> {
    let axes: Vec<Vec<(f64, f64, f64)>> = (1..=d)
        .map(|i| {
            let e = mu - 0.5 + (d - i) as f64 / 2.0;
            tanh_sinh_nodes(level, e)
                .into_iter()
                .map(|n| {
                    let one_minus_v2 = n.one_minus * n.one_plus;
                    (n.u, one_minus_v2, n.weight * one_minus_v2.powf(e))
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut y = vec![0.0; d];
    fn walk(
        axes: &[Vec<(f64, f64, f64)>],
        i: usize,
        rad: f64,
        w: f64,
        y: &mut Vec<f64>,
        out: &mut Vec<(Vec<f64>, f64)>,
    ) {
        if i == axes.len() {
            out.push((y.clone(), w));
            return;
        }
        for &(v, omv2, wv) in &axes[i] {
            y[i] = rad.sqrt() * v;
            walk(axes, i + 1, rad * omv2, w * wv, y, out);
        }
    }
    walk(&axes, 0, 1.0, 1.0, &mut y, &mut out);
    out
}

/// Nodes for ∫_{U^{d+1}} f W, folding W, the Jacobian t^{d/2} and the ball
/// weight into the node weights.
pub fn paraboloid_nodes(
    weight: ParaboloidWeight,
    d: usize,
    level: u32,
) -> Result<Vec<(ParaboloidPoint, f64)>> {
    let c = weight.t_exponent(d);
    if !(c > -1.0) {
        return Err(Error::Domain(format!(
            "t exponent {c} is not integrable at the apex"
        )));
    }
    let t_nodes: Vec<(f64, f64)> = match weight {
        ParaboloidWeight::Jacobi { gamma, .. } => {
            if !(gamma > -1.0) {
                return Err(Error::Domain(format!("gamma must exceed -1, got {gamma}")));
            }
            // t = (1 + u)/2 so t and 1 − t come from the exact complements
            tanh_sinh_nodes(level, c.min(gamma))
                .into_iter()
                .map(|n| {
                    let t = 0.5 * n.one_plus;
                    let omt = 0.5 * n.one_minus;
                    (t, 0.5 * n.weight * t.powf(c) * omt.powf(gamma))
                })
                .collect()
        }
        ParaboloidWeight::Laguerre { .. } => {
            let n = (8usize << level).min(1024);
            let r = gauss_laguerre(n, c)?;
            r.nodes.into_iter().zip(r.weights).collect()
        }
    };
    let ball = ball_nodes(d, weight.mu(), level);
    let b = weight.height_bound();
    let mut out = Vec::with_capacity(t_nodes.len() * ball.len());
    for &(t, wt) in &t_nodes {
        let st = t.sqrt();
        for (y, wy) in &ball {
            let x: Vec<f64> = y.iter().map(|v| st * v).collect();
            out.push((
                ParaboloidPoint {
                    t,
                    x,
                    height_bound: b,
                },
                wt * wy,
            ));
        }
    }
    Ok(out)
}

/// ⟨f, g⟩ over the paraboloid with weight W, refined until two levels agree.
pub fn paraboloid_inner_product<F, G>(
    f: F,
    g: G,
    weight: ParaboloidWeight,
    d: usize,
    tol: f64,
) -> Result<QuadResult>
where
    F: Fn(&ParaboloidPoint) -> f64,
    G: Fn(&ParaboloidPoint) -> f64,
{
    crate::quadrature::refine(1, 5, tol, |level| {
        let nodes = paraboloid_nodes(weight, d, level)?;
        let mut s = 0.0;
        let mut l1 = 0.0;
        for (p, w) in &nodes {
            let v = f(p) * g(p) * w;
            s += v;
            l1 += v.abs();
        }
        Ok((c64(s, 0.0), l1, nodes.len()))
    })
}

/// ⟨f, g⟩ over the ball with weight (1 − ‖x‖²)^{μ−1/2}.
pub fn ball_inner_product<F, G>(f: F, g: G, d: usize, mu: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(&[f64]) -> f64,
    G: Fn(&[f64]) -> f64,
{
    crate::quadrature::refine(2, 6, tol, |level| {
        let nodes = ball_nodes(d, mu, level);
        let mut s = C64::new(0.0, 0.0);
        let mut l1 = 0.0;
        for (x, w) in &nodes {
            let v = f(x) * g(x) * w;
            s += v;
            l1 += v.abs();
        }
        Ok((s, l1, nodes.len()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::gegenbauer_real;
    use crate::scalar::gamma;
    use nalgebra::{DMatrix, DVector};

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn multi_index_tails_and_parse() {
        let k = mi(&[2, 0, 1]);
        assert_eq!(k.tail(1), 3);
        assert_eq!(k.tail(2), 1);
        assert_eq!(k.tail(3), 1);
        assert_eq!(k.tail(4), 0);
        assert_eq!("(2,0,1)".parse::<MultiIndex>().unwrap(), k);
        assert_eq!("2 0 1".parse::<MultiIndex>().unwrap(), k);
        assert!("2,x".parse::<MultiIndex>().is_err());
        assert!("".parse::<MultiIndex>().is_err());
        assert!("-1,0".parse::<MultiIndex>().is_err());
        assert_eq!(MultiIndex::with_total(2, 2).len(), 3);
        assert_eq!(MultiIndex::up_to(2, 3).len(), 10);
        assert_eq!(k.to_string(), "(2,0,1)");
    }

    #[test]
    fn homogeneous_form_matches_gegenbauer() {
        for k in 0..7 {
            for &(lam, x) in &[(0.7, 0.3), (1.9, -0.8), (2.5, 0.99)] {
                let h = homogeneous_gegenbauer(k, lam, x, 1.0);
                let g = gegenbauer_real(k, lam, x).unwrap();
                assert!((h - g).abs() < 1e-12 * g.abs().max(1.0), "k={k}");
                // s^{k/2} C(u/√s) at s = 0.36
                let s: f64 = 0.36;
                let u = x * 0.6;
                let h = homogeneous_gegenbauer(k, lam, u, s);
                assert!((h - s.powf(k as f64 / 2.0) * g).abs() < 1e-12 * g.abs().max(1.0));
            }
        }
    }

    #[test]
    fn ball_poly_examples() {
        let p = BallPoint::new(vec![0.3, -0.5]).unwrap();
        let zero = BallBasisSpec::new(MultiIndex::zeros(2), 0.8).unwrap();
        assert_eq!(eval_ball_poly(&zero, &p).unwrap(), 1.0);
        let mu = 0.8;
        let s = BallBasisSpec::new(mi(&[1, 0]), mu).unwrap();
        assert!((eval_ball_poly(&s, &p).unwrap() - (2.0 * mu + 1.0) * 0.3).abs() < 1e-15);
        let s1 = BallBasisSpec::new(mi(&[3]), mu).unwrap();
        let q = BallPoint::new(vec![0.45]).unwrap();
        let g = gegenbauer_real(3, mu, 0.45).unwrap();
        assert!((eval_ball_poly(&s1, &q).unwrap() - g).abs() < 1e-14);
        assert!(BallPoint::new(vec![0.8, 0.7]).is_err());
        // boundary point with vanishing radicand
        let edge = BallPoint::new(vec![1.0, 0.0]).unwrap();
        let s = BallBasisSpec::new(mi(&[0, 2]), mu).unwrap();
        assert!(eval_ball_poly(&s, &edge).unwrap().is_finite());
    }

    #[test]
    fn ball_norm_examples() {
        let s = BallBasisSpec::new(MultiIndex::zeros(2), 0.5).unwrap();
        assert!((ball_norm(&s, 2).unwrap() - PI).abs() < 1e-13);
        for m in 0..5 {
            let s = BallBasisSpec::new(mi(&[m]), 1.3).unwrap();
            let g = crate::classical::gegenbauer_norm(crate::classical::GegenbauerSpec {
                degree: m,
                mu: 1.3,
            })
            .unwrap();
            assert!((ball_norm(&s, 1).unwrap() - g).abs() < 1e-12 * g);
        }
        // product of Gegenbauer norms with shifted λ_j
        let s = BallBasisSpec::new(mi(&[1, 2]), 0.7).unwrap();
        let g = |m, l| {
            crate::classical::gegenbauer_norm(crate::classical::GegenbauerSpec { degree: m, mu: l })
                .unwrap()
        };
        let expect = g(1, s.lambda(1)) * g(2, s.lambda(2));
        assert!((ball_norm(&s, 2).unwrap() - expect).abs() < 1e-12 * expect);
    }

    #[test]
    fn ball_norm_by_quadrature() {
        for &mu in &[0.5, 1.5] {
            for k in [mi(&[1, 1]), mi(&[0, 3]), mi(&[2, 1])] {
                let s = BallBasisSpec::new(k, mu).unwrap();
                let f = |x: &[f64]| scaled_ball_poly(&s.index, mu, x, 1.0);
                let q = ball_inner_product(f, f, 2, mu, 1e-12).unwrap();
                let h = ball_norm(&s, 2).unwrap();
                assert!((q.value.re - h).abs() < 1e-10 * h);
            }
        }
    }

    #[test]
    fn paraboloid_examples() {
        let p = ParaboloidPoint::new(0.4, vec![0.3], 1.0).unwrap();
        let s = ParaboloidJacobiSpec::new(1, MultiIndex::zeros(1), 0.0, 0.0, 0.5).unwrap();
        // α_0 = β + μ + (d − 1)/2 = 1/2
        let expect = crate::classical::jacobi_real(1, 0.5, 0.0, 1.0 - 0.8).unwrap();
        assert!((eval_paraboloid_jacobi(&s, &p).unwrap() - expect).abs() < 1e-15);
        let q = ParaboloidPoint::new(0.4, vec![0.3], f64::INFINITY).unwrap();
        let s = ParaboloidLaguerreSpec::new(1, MultiIndex::zeros(1), 0.0, 0.5).unwrap();
        // α_0 = μ + β = 1/2, so L_1^{1/2}(t) = 3/2 − t
        assert!((eval_paraboloid_laguerre(&s, &q).unwrap() - (1.5 - 0.4)).abs() < 1e-15);
        assert!(eval_paraboloid_laguerre(&s, &p).is_err());
        assert!(ParaboloidPoint::new(0.04, vec![0.3], 1.0).is_err());
        // apex
        let apex = ParaboloidPoint::new(0.0, vec![0.0, 0.0], 1.0).unwrap();
        let s = ParaboloidJacobiSpec::new(3, mi(&[1, 1]), 0.2, 0.1, 0.5).unwrap();
        assert_eq!(eval_paraboloid_jacobi(&s, &apex).unwrap(), 0.0);
        // m = n = |k| collapses to t^{n/2} P_k(x/√t)
        let p2 = ParaboloidPoint::new(0.5, vec![0.2, -0.3], 1.0).unwrap();
        let s = ParaboloidJacobiSpec::new(2, mi(&[1, 1]), 0.2, 0.1, 0.5).unwrap();
        let y: Vec<f64> = p2.x.iter().map(|v| v / 0.5f64.sqrt()).collect();
        let ball = BallBasisSpec::new(mi(&[1, 1]), 0.5).unwrap();
        let expect = 0.5 * eval_ball_poly(&ball, &BallPoint::new(y).unwrap()).unwrap();
        assert!((eval_paraboloid_jacobi(&s, &p2).unwrap() - expect).abs() < 1e-14);
    }

    #[test]
    fn paraboloid_inner_products() {
        // ⟨1, 1⟩, d = 1, β = γ = 0, μ = 1/2: ∫_0^1 t^{1/2} dt ∫_{-1}^{1} dy = 4/3
        let w = ParaboloidWeight::Jacobi {
            beta: 0.0,
            gamma: 0.0,
            mu: 0.5,
        };
        let one = |_: &ParaboloidPoint| 1.0;
        let r = paraboloid_inner_product(one, one, w, 1, 1e-12).unwrap();
        assert!((r.value.re - 4.0 / 3.0).abs() < 1e-11);

        let wl = ParaboloidWeight::Laguerre { beta: 0.3, mu: 0.5 };
        let r0 = ParaboloidLaguerreSpec::new(0, MultiIndex::zeros(1), 0.3, 0.5).unwrap();
        let r1 = ParaboloidLaguerreSpec::new(1, MultiIndex::zeros(1), 0.3, 0.5).unwrap();
        let f0 = |p: &ParaboloidPoint| eval_paraboloid_laguerre(&r0, p).unwrap();
        let f1 = |p: &ParaboloidPoint| eval_paraboloid_laguerre(&r1, p).unwrap();
        let off = paraboloid_inner_product(f0, f1, wl, 1, 1e-12).unwrap();
        let diag = paraboloid_inner_product(f1, f1, wl, 1, 1e-12).unwrap();
        assert!(off.value.norm() < 1e-10 * diag.value.norm());
        let a0 = r1.alpha_n();
        let ball = ball_norm(&BallBasisSpec::new(MultiIndex::zeros(1), 0.5).unwrap(), 1).unwrap();
        let expect = gamma(c64(a0 + 2.0, 0.0)).unwrap().re * ball;
        assert!((diag.value.re - expect).abs() < 1e-10 * expect);
        assert!((paraboloid_laguerre_norm(&r1).unwrap() - expect).abs() < 1e-12 * expect);
    }

    #[test]
    fn jacobi_paraboloid_d2_diagonal() {
        let s = ParaboloidJacobiSpec::new(3, mi(&[1, 0]), 0.4, 0.7, 1.5).unwrap();
        let w = ParaboloidWeight::Jacobi {
            beta: 0.4,
            gamma: 0.7,
            mu: 1.5,
        };
        let f = |p: &ParaboloidPoint| eval_paraboloid_jacobi(&s, p).unwrap();
        let r = paraboloid_inner_product(f, f, w, 2, 1e-11).unwrap();
        let h = paraboloid_jacobi_norm(&s).unwrap();
        assert!((r.value.re - h).abs() < 1e-9 * h);
    }

    fn monomials(d: usize, m: u32) -> Vec<Vec<u32>> {
        // exponents of (t, x_1, …, x_d) with total degree ≤ m
        MultiIndex::up_to(d + 1, m)
            .into_iter()
            .map(|k| k.entries().to_vec())
            .collect()
    }

    fn design(points: &[(f64, Vec<f64>)], mons: &[Vec<u32>]) -> DMatrix<f64> {
        DMatrix::from_fn(points.len(), mons.len(), |i, j| {
            let (t, x) = &points[i];
            let e = &mons[j];
            let mut v = t.powi(e[0] as i32);
            for (xi, &ei) in x.iter().zip(&e[1..]) {
                v *= xi.powi(ei as i32);
            }
            v
        })
    }

    #[test]
    fn paraboloid_degree_consistency() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let d = 2;
        for m in 0..=3u32 {
            for k in MultiIndex::up_to(d, m) {
                let sj = ParaboloidJacobiSpec::new(m, k.clone(), 0.3, 0.6, 0.9).unwrap();
                let sl = ParaboloidLaguerreSpec::new(m, k.clone(), 0.3, 0.9).unwrap();
                let mons = monomials(d, m);
                let mut sample = |n: usize| -> Vec<(f64, Vec<f64>)> {
                    (0..n)
                        .map(|_| {
                            let t: f64 = rng.random_range(0.05..1.0);
                            let r = t.sqrt() * rng.random_range(0.0..0.99f64);
                            let th: f64 = rng.random_range(0.0..2.0 * PI);
                            (t, vec![r * th.cos(), r * th.sin()])
                        })
                        .collect()
                };
                let fit = sample(3 * mons.len());
                let check = sample(10);
                for which in 0..2 {
                    let eval = |t: f64, x: &[f64]| {
                        if which == 0 {
                            eval_paraboloid_jacobi(
                                &sj,
                                &ParaboloidPoint {
                                    t,
                                    x: x.to_vec(),
                                    height_bound: 1.0,
                                },
                            )
                            .unwrap()
                        } else {
                            eval_paraboloid_laguerre(
                                &sl,
                                &ParaboloidPoint {
                                    t,
                                    x: x.to_vec(),
                                    height_bound: f64::INFINITY,
                                },
                            )
                            .unwrap()
                        }
                    };
                    let a = design(&fit, &mons);
                    let b = DVector::from_iterator(fit.len(), fit.iter().map(|(t, x)| eval(*t, x)));
                    let coef = a.clone().svd(true, true).solve(&b, 1e-14).unwrap();
                    let c = design(&check, &mons);
                    let pred = c * coef;
                    for (i, (t, x)) in check.iter().enumerate() {
                        let v = eval(*t, x);
                        assert!(
                            (pred[i] - v).abs() < 1e-10 * v.abs().max(1.0),
                            "m={m} k={k}"
                        );
                    }
                }
            }
        }
    }
}
