use parabolic_fourier::verifier::forms::{check_a, check_d, check_phi};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run() -> parabolic_fourier::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst = [0.0f64; 3];
    for i in 0..60 {
        let d = 1 + i % 2;
        worst[0] = worst[0].max(check_phi(&mut rng, d, 1e-10).rel_residual);
        worst[1] = worst[1].max(check_d(&mut rng, d, 1e-10).rel_residual);
        worst[2] = worst[2].max(check_a(&mut rng, d, 1e-10).rel_residual);
    }
    println!("3F2 vs continuous Hahn, 60 draws each");
    println!(
        "  phi {:.1e}\n  D   {:.1e}\n  A   {:.1e}",
        worst[0], worst[1], worst[2]
    );
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
