// The rules behind every numeric oracle.

use parabolic_fourier::quadrature::*;
use parabolic_fourier::scalar::{c64, gamma};

pub fn run() -> parabolic_fourier::Result<()> {
    let gl = gauss_legendre(12)?;
    println!(
        "GL12 ∫cos on [-1,1] = {:.16} (2 sin 1 = {:.16})",
        gl.apply(f64::cos),
        2.0 * 1f64.sin()
    );

    let lag = gauss_laguerre(20, 0.5)?;
    println!(
        "GLag ∫ t^0.5 e^-t t^2 = {:.15} vs Γ(3.5) = {:.15}",
        lag.apply(|t| t * t),
        gamma(c64(3.5, 0.0))?.re
    );

    // endpoint singularity (1-u)^(-1/2) handled by tanh-sinh
    let q = integrate_tanh_sinh(|_, om, _| c64(om.powf(-0.5), 0.0), -0.5, 1e-13)?;
    println!(
        "∫ (1-u)^-1/2 du = {:.15} with {} nodes (2√2 = {:.15})",
        q.value.re,
        q.nodes,
        8f64.sqrt()
    );

    // |Γ(1/2 + is)|² = π sech(πs), whose line integral is π
    let req = IntegrationRequest::gamma_line(1e-12, std::f64::consts::PI);
    let q = integrate_line_gamma_decay(&req, |s| {
        let g = gamma(c64(0.5, s)).unwrap_or_default();
        g * g.conj()
    })?;
    println!(
        "∫ |Γ(1/2+is)|² ds = {:.14} (π = {:.14})",
        q.value.re,
        std::f64::consts::PI
    );

    let axes = [
        Axis::Legendre {
            lo: 0.0,
            hi: 1.0,
            base: 4,
        },
        Axis::SinhLine { decay: 1.0 },
    ];
    let q = tensor_integrate(&axes, 1e-10, 8, |p| c64(p[0] * p[0] / p[1].cosh(), 0.0))?;
    println!(
        "∫∫ x² sech y = {:.12} (π/3 = {:.12})",
        q.value.re,
        std::f64::consts::PI / 3.0
    );
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
