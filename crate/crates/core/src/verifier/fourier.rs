//! Closed-form transforms of the wrapped functions against direct quadrature.
//!
//! Both wrapped functions factor into a t-part and one factor per x-axis, so
//! the (d+1)-dimensional transform is a product of one-dimensional ones.

use super::report::{CaseHeader, IdentityId, Residual, VerificationReport};
use crate::bases::MultiIndex;
use crate::error::Result;
use crate::quadrature::{tensor_integrate, Axis, QuadResult};
use crate::scalar::{c64, C64};
use crate::transform::{
    fourier_g_axis_closed, fourier_h_jacobi_t, fourier_h_laguerre_t, g_axis, h_jacobi_t,
    h_laguerre_t, FrequencyPoint, WrapParamsJacobi, WrapParamsLaguerre,
};

const MAX_LEVEL: u32 = 8;

fn twist(xi: f64, x: f64) -> C64 {
    let (s, c) = (xi * x).sin_cos();
    c64(c, -s)
}

/// ∫ e^{−iξx} g-axis-j(x) dx.
pub fn numeric_g_axis(
    k: &MultiIndex,
    alpha: f64,
    mu: f64,
    j: usize,
    xi: f64,
    tol: f64,
) -> Result<QuadResult> {
    let p = alpha + (k.dim() - j) as f64 / 4.0 + k.tail(j + 1) as f64 / 2.0;
    let axis = Axis::SinhLine { decay: 2.0 * p };
    tensor_integrate(&[axis], tol, MAX_LEVEL, |x| {
        twist(xi, x[0]) * g_axis(k, alpha, mu, j, x[0])
    })
}

/// ∫ e^{−iξt} (t-part of the Jacobi wrapped function) dt.
pub fn numeric_h_jacobi_t(
    m: u32,
    k: &MultiIndex,
    p: &WrapParamsJacobi,
    xi: f64,
    tol: f64,
) -> Result<QuadResult> {
    let n = k.total() as f64;
    let decay = (2.0 * (p.zeta + n / 2.0)).min(2.0 * p.eta);
    let axis = Axis::SinhLine { decay };
    tensor_integrate(&[axis], tol, MAX_LEVEL, |t| {
        twist(xi, t[0]) * h_jacobi_t(m, k, p, t[0]).expect("degree checked by caller")
    })
}

/// ∫ e^{−iξt} (t-part of the Laguerre wrapped function) dt.
pub fn numeric_h_laguerre_t(
    m: u32,
    k: &MultiIndex,
    p: &WrapParamsLaguerre,
    xi: f64,
    tol: f64,
) -> Result<QuadResult> {
    let n = k.total() as f64;
    let axis = Axis::ExpLine {
        left_decay: p.zeta + n / 2.0,
    };
    tensor_integrate(&[axis], tol, MAX_LEVEL, |t| {
        twist(xi, t[0]) * h_laguerre_t(m, k, p, t[0]).expect("degree checked by caller")
    })
}

/// Numeric and closed x-parts: Π_j over the axes.
fn x_parts(k: &MultiIndex, alpha: f64, mu: f64, xi: &[f64], tol: f64) -> Result<(C64, C64, usize)> {
    let mut num = c64(1.0, 0.0);
    let mut closed = c64(1.0, 0.0);
    let mut nodes = 0;
    for j in 1..=k.dim() {
        let q = numeric_g_axis(k, alpha, mu, j, xi[j - 1], tol)?;
        num *= q.value;
        closed *= fourier_g_axis_closed(k, alpha, mu, j, xi[j - 1])?;
        nodes += q.nodes;
    }
    Ok((num, closed, nodes))
}

fn header(id: IdentityId, m: u32, k: &MultiIndex, freq: &FrequencyPoint, tol: f64) -> CaseHeader {
    let mut h = CaseHeader::new(id, k.dim(), tol)
        .degrees(m, m)
        .indices(k.entries(), k.entries());
    for (j, &x) in freq.xi.iter().enumerate() {
        h = h.param(&format!("xi{}", j + 1), x);
    }
    h.param("xi_last", freq.xi_last)
}

fn check_freq(k: &MultiIndex, freq: &FrequencyPoint) -> Result<()> {
    if freq.xi.len() != k.dim() {
        return Err(crate::Error::Domain(format!(
            "need {} x-frequencies, got {}",
            k.dim(),
            freq.xi.len()
        )));
    }
    Ok(())
}

/// FOURIER_J at one frequency point.
pub fn check_fourier_jacobi(
    m: u32,
    k: &MultiIndex,
    p: &WrapParamsJacobi,
    freq: &FrequencyPoint,
    tol: f64,
) -> VerificationReport {
    let h = header(IdentityId::FourierJ, m, k, freq, tol)
        .param("alpha", p.alpha)
        .param("zeta", p.zeta)
        .param("eta", p.eta)
        .param("beta", p.beta)
        .param("gamma", p.gamma)
        .param("mu", p.mu);
    h.run(Residual::Relative, || {
        check_freq(k, freq)?;
        let closed_t = fourier_h_jacobi_t(m, k, p, freq.xi_last)?;
        let qt = numeric_h_jacobi_t(m, k, p, freq.xi_last, tol * 1e-2)?;
        let (nx, cx, nodes) = x_parts(k, p.alpha, p.mu, &freq.xi, tol * 1e-2)?;
        Ok((qt.value * nx, closed_t * cx, nodes + qt.nodes))
    })
}

/// FOURIER_L at one frequency point.
pub fn check_fourier_laguerre(
    m: u32,
    k: &MultiIndex,
    p: &WrapParamsLaguerre,
    freq: &FrequencyPoint,
    tol: f64,
) -> VerificationReport {
    let h = header(IdentityId::FourierL, m, k, freq, tol)
        .param("alpha", p.alpha)
        .param("zeta", p.zeta)
        .param("beta", p.beta)
        .param("mu", p.mu);
    h.run(Residual::Relative, || {
        check_freq(k, freq)?;
        let closed_t = fourier_h_laguerre_t(m, k, p, freq.xi_last)?;
        let qt = numeric_h_laguerre_t(m, k, p, freq.xi_last, tol * 1e-2)?;
        let (nx, cx, nodes) = x_parts(k, p.alpha, p.mu, &freq.xi, tol * 1e-2)?;
        Ok((qt.value * nx, closed_t * cx, nodes + qt.nodes))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{beta, gamma};

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn laguerre_base_case() {
        // m = k = 0, ξ = 0: 2^ζ Γ(ζ) 2^{2α−1} B(α, α)
        let p = WrapParamsLaguerre {
            alpha: 0.8,
            zeta: 1.3,
            beta: 0.2,
            mu: 0.7,
        };
        let freq = FrequencyPoint {
            xi: vec![0.0],
            xi_last: 0.0,
        };
        let r = check_fourier_laguerre(0, &mi(&[0]), &p, &freq, 1e-8);
        assert!(r.passed, "{r:?}");
        let expect = 2f64.powf(1.3)
            * gamma(c64(1.3, 0.0)).unwrap().re
            * 2f64.powf(0.6)
            * beta(c64(0.8, 0.0), c64(0.8, 0.0)).unwrap().re;
        assert!((r.rhs.re - expect).abs() < 1e-12 * expect);
    }

    #[test]
    fn jacobi_spot() {
        let p = WrapParamsJacobi {
            alpha: 0.6,
            zeta: 0.9,
            eta: 0.7,
            beta: 0.1,
            gamma: 0.4,
            mu: 0.8,
        };
        let freq = FrequencyPoint {
            xi: vec![0.5],
            xi_last: -0.3,
        };
        let r = check_fourier_jacobi(1, &mi(&[0]), &p, &freq, 1e-6);
        assert!(r.rel_residual < 1e-6, "{r:?}");
        let r = check_fourier_jacobi(
            2,
            &mi(&[1, 1]),
            &p,
            &FrequencyPoint {
                xi: vec![0.4, -1.1],
                xi_last: 0.7,
            },
            1e-6,
        );
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn conjugate_pair() {
        let p = WrapParamsLaguerre {
            alpha: 0.8,
            zeta: 1.3,
            beta: 0.2,
            mu: 0.7,
        };
        let k = mi(&[1]);
        let a = check_fourier_laguerre(
            2,
            &k,
            &p,
            &FrequencyPoint {
                xi: vec![0.7],
                xi_last: 0.4,
            },
            1e-7,
        );
        let b = check_fourier_laguerre(
            2,
            &k,
            &p,
            &FrequencyPoint {
                xi: vec![-0.7],
                xi_last: -0.4,
            },
            1e-7,
        );
        let (za, zb): (C64, C64) = (a.rhs.into(), b.rhs.into());
        assert!((za - zb.conj()).norm() < 1e-12 * za.norm());
    }
}
