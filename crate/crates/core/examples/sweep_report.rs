// A small sweep rendered as JSON and CSV.

use parabolic_fourier::sweep::{render, run_sweep, OutputFormat, SweepConfig};
use parabolic_fourier::verifier::Family;

pub fn run() -> parabolic_fourier::Result<()> {
    let cfg = SweepConfig {
        families: vec![Family::Orthogonality, Family::Forms],
        d: vec![1],
        max_degree_1d: 4,
        one_dim_draws: 1,
        form_draws: 5,
        timestamp: false,
        ..SweepConfig::default()
    };
    let report = run_sweep(&cfg)?;
    let s = &report.summary;
    println!(
        "{} cases, {} passed, {} failed, exit code {}",
        s.total,
        s.passed,
        s.failed,
        s.exit_code()
    );

    let json = render(&report, OutputFormat::Json)?;
    println!("JSON: {} bytes", json.len());
    let again = render(&run_sweep(&cfg)?, OutputFormat::Json)?;
    println!("rerun identical: {}", json == again);

    let csv = render(&report, OutputFormat::Csv)?;
    for line in String::from_utf8_lossy(&csv).lines().take(3) {
        println!("{line}");
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
