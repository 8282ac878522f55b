// Complex gamma and beta on a few points, with the recurrence and
// reflection checked on a random batch.

use parabolic_fourier::scalar::{beta, c64, gamma, log_gamma, pochhammer};
use parabolic_fourier::verifier::kernel::check_scalar_kernel;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run() -> parabolic_fourier::Result<()> {
    for z in [
        c64(0.5, 0.0),
        c64(1.0, 1.0),
        c64(-2.5, 0.3),
        c64(30.0, -4.0),
    ] {
        println!("Γ({z}) = {:.15e}   lnΓ = {:.15}", gamma(z)?, log_gamma(z)?);
    }
    let b = beta(c64(0.7, 0.2), c64(1.3, -0.2))?;
    println!("B(0.7+0.2i, 1.3-0.2i) = {b:.15}");
    println!("(1/2)_4 = {}", pochhammer(c64(0.5, 0.0), 4));

    // poles are errors, not infinities
    match gamma(c64(-3.0, 0.0)) {
        Err(e) => println!("Γ(-3): {e}"),
        Ok(v) => println!("Γ(-3) = {v} (unexpected)"),
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let s = check_scalar_kernel(&mut rng, 250)?;
    println!(
        "{} draws: recurrence {:.1e}, reflection {:.1e}, beta integral {:.1e}",
        s.draws, s.recurrence, s.reflection, s.beta_integral
    );
    assert!(s.worst() < 1e-10);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
