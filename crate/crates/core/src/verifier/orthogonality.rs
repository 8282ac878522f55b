//! Gram matrices of the classical and multivariate bases.
//!
//! Paraboloid Gram matrices are assembled separably: after x = √t y every
//! basis function is a t-factor times a ball polynomial in y, so each entry is
//! a one-dimensional t-integral times a ball Gram entry.

use super::report::{CaseHeader, IdentityId, Residual, VerificationReport};
use crate::bases::{
    ball_nodes, ball_norm, paraboloid_jacobi_norm, paraboloid_laguerre_norm, scaled_ball_poly,
    BallBasisSpec, MultiIndex, ParaboloidJacobiSpec, ParaboloidLaguerreSpec,
};
use crate::classical::{
    gegenbauer_norm, gegenbauer_real, jacobi_norm, jacobi_real, laguerre_norm, laguerre_real,
    GegenbauerSpec, JacobiSpec, LaguerreSpec,
};
use crate::error::{Error, Result};
use crate::quadrature::{exp_line_nodes, gauss_laguerre, tanh_sinh_nodes};
use crate::scalar::c64;
use std::time::Instant;

/// A Gram matrix that passed its two-level convergence test.
#[derive(Debug, Clone, PartialEq)]
pub struct Gram {
    pub size: usize,
    /// Row-major entries.
    pub entries: Vec<f64>,
    pub nodes: usize,
}

impl Gram {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.size + j]
    }
}

/// Sums f_i f_j w over node sets of increasing level until every entry moves
/// by at most tol·√(G_ii G_jj).
pub fn gram_refine<P, N, E>(
    levels: std::ops::RangeInclusive<u32>,
    size: usize,
    tol: f64,
    nodes: N,
    eval: E,
) -> Result<Gram>
where
    N: Fn(u32) -> Result<Vec<(P, f64)>>,
    E: Fn(&P) -> Result<Vec<f64>>,
{
    let mut prev: Option<Vec<f64>> = None;
    let mut worst = f64::INFINITY;
    for level in levels {
        let pts = nodes(level)?;
        let mut g = vec![0.0; size * size];
        for (p, w) in &pts {
            let v = eval(p)?;
            for i in 0..size {
                let wi = w * v[i];
                for j in i..size {
                    g[i * size + j] += wi * v[j];
                }
            }
        }
        for i in 0..size {
            for j in 0..i {
                g[i * size + j] = g[j * size + i];
            }
        }
        if let Some(p) = &prev {
            worst = 0.0;
            for i in 0..size {
                for j in 0..size {
                    let scale = (g[i * size + i] * g[j * size + j])
                        .abs()
                        .sqrt()
                        .max(f64::MIN_POSITIVE);
                    worst = worst.max((g[i * size + j] - p[i * size + j]).abs() / scale);
                }
            }
            if worst <= tol {
                return Ok(Gram {
                    size,
                    entries: g,
                    nodes: pts.len(),
                });
            }
        }
        prev = Some(g);
    }
    Err(Error::QuadratureNonConvergence { delta: worst, tol })
}

/// Reports for the upper triangle of a Gram matrix against diagonal norms.
fn gram_reports(
    header: impl Fn(usize, usize) -> CaseHeader,
    gram: &Gram,
    norms: &[f64],
    seconds: f64,
) -> Vec<VerificationReport> {
    let n = gram.size;
    let per = seconds / (n * (n + 1) / 2) as f64;
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            let h = header(i, j);
            let lhs = c64(gram.get(i, j), 0.0);
            let r = if i == j {
                h.finish(lhs, c64(norms[i], 0.0), Residual::Relative, gram.nodes, per)
            } else {
                h.finish(
                    lhs,
                    c64(0.0, 0.0),
                    Residual::Scaled((norms[i] * norms[j]).sqrt()),
                    gram.nodes,
                    per,
                )
            };
            out.push(r);
        }
    }
    out
}

fn failed(header: CaseHeader, e: &Error, seconds: f64) -> Vec<VerificationReport> {
    vec![header.failure(e, seconds)]
}

/// One-dimensional families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OneDim {
    Gegenbauer { mu: f64 },
    Jacobi { alpha: f64, beta: f64 },
    Laguerre { alpha: f64 },
}

impl OneDim {
    fn id(&self) -> IdentityId {
        match self {
            OneDim::Gegenbauer { .. } => IdentityId::OrtGegen,
            OneDim::Jacobi { .. } => IdentityId::OrtJacobi,
            OneDim::Laguerre { .. } => IdentityId::OrtLaguerre,
        }
    }

    fn header(&self, tol: f64) -> CaseHeader {
        let h = CaseHeader::new(self.id(), 1, tol);
        match *self {
            OneDim::Gegenbauer { mu } => h.param("mu", mu),
            OneDim::Jacobi { alpha, beta } => h.param("alpha", alpha).param("beta", beta),
            OneDim::Laguerre { alpha } => h.param("alpha", alpha),
        }
    }

    pub fn norm(&self, n: u32) -> Result<f64> {
        match *self {
            OneDim::Gegenbauer { mu } => gegenbauer_norm(GegenbauerSpec::new(n, mu)?),
            OneDim::Jacobi { alpha, beta } => jacobi_norm(JacobiSpec::new(n, alpha, beta)?),
            OneDim::Laguerre { alpha } => laguerre_norm(LaguerreSpec::new(n, alpha)?),
        }
    }

    fn values(&self, max_degree: u32, x: f64) -> Result<Vec<f64>> {
        (0..=max_degree)
            .map(|n| match *self {
                OneDim::Gegenbauer { mu } => gegenbauer_real(n, mu, x),
                OneDim::Jacobi { alpha, beta } => jacobi_real(n, alpha, beta, x),
                OneDim::Laguerre { alpha } => laguerre_real(n, alpha, x),
            })
            .collect()
    }

    /// Gram matrix of degrees 0..=max_degree under the family's weight.
    pub fn gram(&self, max_degree: u32, tol: f64) -> Result<Gram> {
        let size = max_degree as usize + 1;
        let eval = |x: &f64| self.values(max_degree, *x);
        match *self {
            OneDim::Gegenbauer { mu } => {
                let e = mu - 0.5;
                gram_refine(3..=9, size, tol, |l| Ok(interval_nodes(l, e, e)), eval)
            }
            OneDim::Jacobi { alpha, beta } => gram_refine(
                3..=9,
                size,
                tol,
                |l| Ok(interval_nodes(l, alpha, beta)),
                eval,
            ),
            OneDim::Laguerre { alpha } => gram_refine(
                0..=3,
                size,
                tol,
                |l| {
                    let r = gauss_laguerre((max_degree as usize + 2) << l, alpha)?;
                    Ok(r.nodes.into_iter().zip(r.weights).collect())
                },
                eval,
            ),
        }
    }
}

/// Tanh-sinh nodes on (−1, 1) carrying (1 − x)^a (1 + x)^b.
fn interval_nodes(level: u32, a: f64, b: f64) -> Vec<(f64, f64)> {
    tanh_sinh_nodes(level, a.min(b))
        .into_iter()
        .map(|n| (n.u, n.weight * n.one_minus.powf(a) * n.one_plus.powf(b)))
        .collect()
}

/// ORT_GEGEN / ORT_JACOBI / ORT_LAGUERRE: all entries of the degree ≤ max_degree Gram matrix.
pub fn check_orthogonality_1d(
    family: OneDim,
    max_degree: u32,
    tol: f64,
) -> Vec<VerificationReport> {
    let start = Instant::now();
    let gram = family.gram(max_degree, tol * 0.1);
    let norms: Result<Vec<f64>> = (0..=max_degree).map(|n| family.norm(n)).collect();
    let secs = start.elapsed().as_secs_f64();
    match (gram, norms) {
        (Ok(g), Ok(n)) => gram_reports(
            |i, j| family.header(tol).degrees(i as u32, j as u32),
            &g,
            &n,
            secs,
        ),
        (Err(e), _) | (_, Err(e)) => failed(family.header(tol), &e, secs),
    }
}

/// Ball Gram matrix of the given indices with weight (1 − ‖y‖²)^{μ−1/2}.
pub fn ball_gram(indices: &[MultiIndex], d: usize, mu: f64, tol: f64) -> Result<Gram> {
    gram_refine(
        2..=7,
        indices.len(),
        tol,
        |l| Ok(ball_nodes(d, mu, l)),
        |y: &Vec<f64>| {
            Ok(indices
                .iter()
                .map(|k| scaled_ball_poly(k, mu, y, 1.0))
                .collect())
        },
    )
}

/// ORT_BALL: every k with |k| ≤ max_degree in dimension d.
pub fn check_orthogonality_ball(
    d: usize,
    mu: f64,
    max_degree: u32,
    tol: f64,
) -> Vec<VerificationReport> {
    let start = Instant::now();
    let ks = MultiIndex::up_to(d, max_degree);
    let gram = ball_gram(&ks, d, mu, tol * 0.1);
    let norms: Result<Vec<f64>> = ks
        .iter()
        .map(|k| ball_norm(&BallBasisSpec::new(k.clone(), mu)?, d))
        .collect();
    let secs = start.elapsed().as_secs_f64();
    let header = |i: usize, j: usize| {
        CaseHeader::new(IdentityId::OrtBall, d, tol)
            .indices(ks[i].entries(), ks[j].entries())
            .degrees(ks[i].total(), ks[j].total())
            .param("mu", mu)
    };
    match (gram, norms) {
        (Ok(g), Ok(n)) => gram_reports(header, &g, &n, secs),
        (Err(e), _) | (_, Err(e)) => failed(
            CaseHeader::new(IdentityId::OrtBall, d, tol).param("mu", mu),
            &e,
            secs,
        ),
    }
}

/// Paraboloid family and its weight parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Paraboloid {
    /// t^β (1 − t)^γ (t − ‖x‖²)^{μ−1/2}, 0 ≤ t ≤ 1.
    Jacobi { beta: f64, gamma: f64, mu: f64 },
    /// t^β e^{−t} (t − ‖x‖²)^{μ−1/2}, t ≥ 0.
    Laguerre { beta: f64, mu: f64 },
}

impl Paraboloid {
    fn mu(&self) -> f64 {
        match *self {
            Paraboloid::Jacobi { mu, .. } | Paraboloid::Laguerre { mu, .. } => mu,
        }
    }

    fn header(&self, d: usize, tol: f64) -> CaseHeader {
        match *self {
            Paraboloid::Jacobi { beta, gamma, mu } => CaseHeader::new(IdentityId::OrtParaJ, d, tol)
                .param("beta", beta)
                .param("gamma", gamma)
                .param("mu", mu),
            Paraboloid::Laguerre { beta, mu } => CaseHeader::new(IdentityId::OrtParaL, d, tol)
                .param("beta", beta)
                .param("mu", mu),
        }
    }

    /// t-factor P_{m−n}(1 − 2t) t^{n/2} (or L_{m−n}(t) t^{n/2}).
    fn radial(&self, m: u32, k: &MultiIndex, t: f64) -> Result<f64> {
        let n = k.total();
        let d = k.dim() as f64;
        let a = |beta: f64, mu: f64| n as f64 + beta + mu + (d - 1.0) / 2.0;
        let p = match *self {
            Paraboloid::Jacobi { beta, gamma, mu } => {
                jacobi_real(m - n, a(beta, mu), gamma, 1.0 - 2.0 * t)?
            }
            Paraboloid::Laguerre { beta, mu } => laguerre_real(m - n, a(beta, mu), t)?,
        };
        Ok(p * t.powf(n as f64 / 2.0))
    }

    fn norm(&self, m: u32, k: &MultiIndex) -> Result<f64> {
        match *self {
            Paraboloid::Jacobi { beta, gamma, mu } => {
                paraboloid_jacobi_norm(&ParaboloidJacobiSpec::new(m, k.clone(), beta, gamma, mu)?)
            }
            Paraboloid::Laguerre { beta, mu } => {
                paraboloid_laguerre_norm(&ParaboloidLaguerreSpec::new(m, k.clone(), beta, mu)?)
            }
        }
    }

    /// t-nodes carrying t^c and the family's t-weight, c = d/2 + β + μ − 1/2.
    fn t_nodes(&self, d: usize, level: u32) -> Result<Vec<(f64, f64)>> {
        let (beta, mu) = match *self {
            Paraboloid::Jacobi { beta, mu, .. } | Paraboloid::Laguerre { beta, mu } => (beta, mu),
        };
        let c = d as f64 / 2.0 + beta + mu - 0.5;
        if !(c > -1.0) {
            return Err(Error::Domain(format!(
                "t exponent {c} is not integrable at the apex"
            )));
        }
        Ok(match *self {
            Paraboloid::Jacobi { gamma, .. } => tanh_sinh_nodes(level, c.min(gamma))
                .into_iter()
                .map(|n| {
                    let t = 0.5 * n.one_plus;
                    (
                        t,
                        0.5 * n.weight * t.powf(c) * (0.5 * n.one_minus).powf(gamma),
                    )
                })
                .collect(),
            // t = e^s; half-integer powers of t rule out Gauss-Laguerre here
            Paraboloid::Laguerre { .. } => exp_line_nodes(level, c + 1.0)
                .into_iter()
                .map(|(s, w)| {
                    let t = s.exp();
                    (t, w * ((c + 1.0) * s - t).exp())
                })
                .collect(),
        })
    }
}

/// Every (m, k) with |k| ≤ m ≤ max_degree, by m then k.
pub fn paraboloid_indices(d: usize, max_degree: u32) -> Vec<(u32, MultiIndex)> {
    let mut out = Vec::new();
    for m in 0..=max_degree {
        for k in MultiIndex::up_to(d, m) {
            out.push((m, k));
        }
    }
    out
}

/// ORT_PARA_J / ORT_PARA_L for all total degrees ≤ max_degree.
pub fn check_orthogonality_paraboloid(
    family: Paraboloid,
    d: usize,
    max_degree: u32,
    tol: f64,
) -> Vec<VerificationReport> {
    let start = Instant::now();
    let idx = paraboloid_indices(d, max_degree);
    let ks = MultiIndex::up_to(d, max_degree);
    let pos = |k: &MultiIndex| ks.iter().position(|q| q == k).expect("index listed");
    let qtol = tol * 0.1;
    let computed = (|| {
        let tg = gram_refine(
            2..=9,
            idx.len(),
            qtol,
            |l| family.t_nodes(d, l),
            |t: &f64| idx.iter().map(|(m, k)| family.radial(*m, k, *t)).collect(),
        )?;
        let bg = ball_gram(&ks, d, family.mu(), qtol)?;
        let norms = idx
            .iter()
            .map(|(m, k)| family.norm(*m, k))
            .collect::<Result<Vec<f64>>>()?;
        let n = idx.len();
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = tg.get(i, j) * bg.get(pos(&idx[i].1), pos(&idx[j].1));
            }
        }
        Ok((
            Gram {
                size: n,
                entries,
                nodes: tg.nodes * bg.nodes,
            },
            norms,
        ))
    })();
    let secs = start.elapsed().as_secs_f64();
    match computed {
        Ok((g, norms)) => gram_reports(
            |i, j| {
                family
                    .header(d, tol)
                    .degrees(idx[i].0, idx[j].0)
                    .indices(idx[i].1.entries(), idx[j].1.entries())
            },
            &g,
            &norms,
            secs,
        ),
        Err(e) => failed(family.header(d, tol), &e, secs),
    }
}
