// Contiguous relations of the A and B families and the raw 2F1 / 3F2
// recurrences, evaluated exactly as printed and in amended form.

use parabolic_fourier::verifier::contiguous::*;
use parabolic_fourier::verifier::IdentityId;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run() -> parabolic_fourier::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let draws: Vec<AbDraw> = (0..20)
        .map(|i| AbDraw::random(&mut rng, 1 + i % 2))
        .collect();
    for id in A_RELATIONS.iter().chain(&B_RELATIONS) {
        let worst = draws
            .iter()
            .map(|w| check_contiguous(*id, w, 1e-10).rel_residual)
            .fold(0.0, f64::max);
        println!("{:<20} worst {worst:.1e}", id.as_str());
    }

    let rec1: Vec<HypDraw> = (0..20)
        .map(|i| HypDraw::rec1(&mut rng, i % 2 == 0))
        .collect();
    let rec2: Vec<HypDraw> = (0..20).map(|_| HypDraw::rec2(&mut rng)).collect();
    for id in REC1_RELATIONS {
        let worst = rec1
            .iter()
            .map(|w| check_recurrence(id, w, 1e-10).rel_residual)
            .fold(0.0, f64::max);
        println!("{:<20} worst {worst:.1e}", id.as_str());
    }
    for id in REC2_RELATIONS {
        let worst = rec2
            .iter()
            .map(|w| check_recurrence(id, w, 1e-10).rel_residual)
            .fold(0.0, f64::max);
        println!("{:<20} worst {worst:.1e}", id.as_str());
    }

    // a μ that disagrees with α₁ + α₂ − 1/2 is refused
    let mut w = draws[0].clone();
    w.mu_override = Some(0.1);
    let r = check_contiguous(IdentityId::ContigAI, &w, 1e-10);
    println!("μ override: {:?}", r.skipped_reason);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
