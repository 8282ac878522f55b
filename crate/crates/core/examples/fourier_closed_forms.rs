// Closed-form Fourier transforms of the Jacobi and Laguerre wrapped
// families against direct numeric transforms.

use parabolic_fourier::bases::MultiIndex;
use parabolic_fourier::transform::*;
use parabolic_fourier::verifier::fourier::{check_fourier_jacobi, check_fourier_laguerre};

pub fn run() -> parabolic_fourier::Result<()> {
    let k = MultiIndex::new(vec![1])?;
    let pj = WrapParamsJacobi {
        alpha: 0.8,
        zeta: 1.1,
        eta: 0.9,
        beta: 0.2,
        gamma: 0.1,
        mu: 0.6,
    };
    let pl = WrapParamsLaguerre {
        alpha: 0.8,
        zeta: 1.1,
        beta: 0.2,
        mu: 0.6,
    };

    println!(
        "h^J_(2,(1))(0.3; 0.5) = {}",
        eval_h_jacobi(2, &k, &pj, 0.3, &[0.5])?
    );
    println!(
        "h^L_(2,(1))(0.3; 0.5) = {}",
        eval_h_laguerre(2, &k, &pl, 0.3, &[0.5])?
    );

    for xi in [(0.5, -0.3), (-0.5, 0.3), (1.8, 0.0)] {
        let freq = FrequencyPoint {
            xi: vec![xi.0],
            xi_last: xi.1,
        };
        let closed = fourier_h_jacobi_closed(2, &k, &pj, &freq)?;
        let r = check_fourier_jacobi(2, &k, &pj, &freq, 1e-6);
        println!(
            "ξ = {xi:?}: closed {closed:.12}, numeric {}, rel {:.1e}",
            r.lhs, r.rel_residual
        );
        let r = check_fourier_laguerre(2, &k, &pl, &freq, 1e-6);
        println!(
            "          Laguerre rel {:.1e} passed {}",
            r.rel_residual, r.passed
        );
    }

    // base case: 2^ζ Γ(ζ) 2^(2α-1) B(α, α) at zero frequency
    let base = FrequencyPoint {
        xi: vec![0.0],
        xi_last: 0.0,
    };
    let v = fourier_h_laguerre_closed(0, &MultiIndex::zeros(1), &pl, &base)?;
    println!("Laguerre transform at 0: {v:.14}");
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
