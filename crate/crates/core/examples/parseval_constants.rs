use parabolic_fourier::bases::MultiIndex;
use parabolic_fourier::transform::SplitParams;
use parabolic_fourier::verifier::parseval::{check_parseval, constant, lhs_joint_d1, pairs, Kind};

pub fn run() -> parabolic_fourier::Result<()> {
    let p = SplitParams::new(0.7, 0.9, 1.1, 0.8, 0.6, 1.2)?;
    let z = MultiIndex::zeros(1);
    for kind in [Kind::A, Kind::B] {
        println!(
            "{kind:?} constant at m = k = 0: {:.14e}",
            constant(kind, 0, &z, &p)?
        );
    }

    // the separable evaluation against a coarser joint (t, x) integral
    let k1 = MultiIndex::new(vec![1])?;
    let joint = lhs_joint_d1(Kind::A, 2, &k1, 2, &k1, &p, 1e-7)?;
    let r = check_parseval(Kind::A, 2, &k1, 2, &k1, &p, 1e-6);
    let sep: parabolic_fourier::C64 = r.lhs.into();
    println!(
        "A (2,(1)) diagonal: separable {:.12}, constant {}",
        sep.re, r.rhs
    );
    println!(
        "  joint integral differs by {:.1e} relative",
        (sep - joint.value).norm() / sep.norm()
    );

    let mut worst = 0.0f64;
    let list = pairs(1, 2);
    for ((m, k), (m2, k2)) in &list {
        let r = check_parseval(Kind::B, *m, k, *m2, k2, &p, 1e-6);
        worst = worst.max(r.rel_residual);
        if !r.passed {
            println!("B ({m},{k:?}) x ({m2},{k2:?}) failed: {}", r.rel_residual);
        }
    }
    println!(
        "B over {} index pairs: worst residual {worst:.1e}",
        list.len()
    );
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
