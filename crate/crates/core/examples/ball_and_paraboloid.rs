use parabolic_fourier::bases::*;
use parabolic_fourier::verifier::orthogonality::{
    check_orthogonality_ball, check_orthogonality_paraboloid, Paraboloid,
};

pub fn run() -> parabolic_fourier::Result<()> {
    let k = MultiIndex::new(vec![1, 2])?;
    let spec = BallBasisSpec::new(k.clone(), 0.5)?;
    let p = BallPoint::new(vec![0.3, -0.4])?;
    println!("P_(1,2)(0.3,-0.4) = {}", eval_ball_poly(&spec, &p)?);
    println!("ball norm = {}", ball_norm(&spec, 2)?);

    let pj = ParaboloidJacobiSpec::new(4, k.clone(), 0.2, 0.4, 0.5)?;
    let pl = ParaboloidLaguerreSpec::new(4, k, 0.2, 0.5)?;
    // the height bound b is 1 for the Jacobi family, unbounded for Laguerre
    let q = ParaboloidPoint::new(0.5, vec![0.2, 0.3], 1.0)?;
    println!(
        "Jacobi paraboloid value {}, norm {}",
        eval_paraboloid_jacobi(&pj, &q)?,
        paraboloid_jacobi_norm(&pj)?
    );
    let q = ParaboloidPoint::new(0.5, vec![0.2, 0.3], f64::INFINITY)?;
    println!(
        "Laguerre paraboloid value {}, norm {}",
        eval_paraboloid_laguerre(&pl, &q)?,
        paraboloid_laguerre_norm(&pl)?
    );

    let ball = check_orthogonality_ball(2, 1.5, 3, 1e-8);
    println!(
        "ball d=2: {} Gram entries, all passed {}",
        ball.len(),
        ball.iter().all(|r| r.passed)
    );
    for fam in [
        Paraboloid::Jacobi {
            beta: 0.2,
            gamma: 0.4,
            mu: 0.5,
        },
        Paraboloid::Laguerre { beta: 0.2, mu: 0.5 },
    ] {
        let r = check_orthogonality_paraboloid(fam, 2, 2, 1e-8);
        let worst = r.iter().map(|c| c.rel_residual).fold(0.0, f64::max);
        println!("{fam:?}: {} entries, worst {worst:.1e}", r.len());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
