// Gegenbauer, Jacobi, Laguerre and continuous Hahn values, and the
// one-dimensional Gram matrices against the closed norms.

use parabolic_fourier::classical::*;
use parabolic_fourier::scalar::c64;
use parabolic_fourier::verifier::orthogonality::{check_orthogonality_1d, OneDim};

pub fn run() -> parabolic_fourier::Result<()> {
    println!("C_3^(1)(0.4) = {}", gegenbauer_real(3, 1.0, 0.4)?);
    println!("P_2^(0.5,-0.3)(0.1) = {}", jacobi_real(2, 0.5, -0.3, 0.1)?);
    println!("L_4^(1.5)(2.0) = {}", laguerre_real(4, 1.5, 2.0)?);
    println!(
        "h_5 Laguerre(1.5) = {}",
        laguerre_norm(LaguerreSpec::new(5, 1.5)?)?
    );

    let hahn = HahnSpec {
        degree: 2,
        a: c64(0.6, 0.0),
        b: c64(0.9, 0.0),
        c: c64(0.6, 0.0),
        d: c64(0.9, 0.0),
    };
    println!(
        "p_2(0.3; a,b,a,b) = {}",
        continuous_hahn(hahn, c64(0.3, 0.0))?
    );

    for family in [
        OneDim::Gegenbauer { mu: 1.0 },
        OneDim::Jacobi {
            alpha: -0.3,
            beta: 1.7,
        },
        OneDim::Laguerre { alpha: 0.5 },
    ] {
        let reports = check_orthogonality_1d(family, 6, 1e-10);
        let worst = reports.iter().map(|r| r.rel_residual).fold(0.0, f64::max);
        let ok = reports.iter().all(|r| r.passed);
        println!(
            "{family:?}: {} entries, worst {worst:.1e}, passed {ok}",
            reports.len()
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
