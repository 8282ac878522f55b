//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use parabolic_fourier::sweep::{render, run_sweep, OutputFormat, SweepConfig};
use parabolic_fourier::verifier::kernel::check_scalar_kernel;
use parabolic_fourier::verifier::{Family, IdentityId, Outcome, VerificationReport};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

struct Verdict {
    ok: bool,
    detail: String,
}

fn only(families: &[Family], d: &[usize]) -> SweepConfig {
    SweepConfig {
        families: families.to_vec(),
        d: d.to_vec(),
        timestamp: false,
        ..SweepConfig::default()
    }
}

fn summarize(cases: &[VerificationReport], elapsed: Duration, budget: Duration) -> Verdict {
    let failed: Vec<_> = cases
        .iter()
        .filter(|c| c.outcome() == Outcome::Failed)
        .collect();
    let skipped = cases
        .iter()
        .filter(|c| c.outcome() == Outcome::Skipped)
        .count();
    let worst = cases
        .iter()
        .filter(|c| c.outcome() != Outcome::Skipped)
        .map(|c| c.residual())
        .fold(0.0, f64::max);
    let mut ids: Vec<&str> = failed.iter().map(|c| c.identity_id.as_str()).collect();
    ids.dedup();
    let mut detail = format!(
        "{} cases, {} failed, {} skipped, worst residual {worst:.2e}, {:.2}s (budget {}s)",
        cases.len(),
        failed.len(),
        skipped,
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    if !ids.is_empty() {
        detail.push_str(&format!("; failing: {}", ids.join(", ")));
    }
    Verdict {
        ok: failed.is_empty() && !cases.is_empty() && elapsed < budget,
        detail,
    }
}

fn sweep_cases(cfg: &SweepConfig, keep: impl Fn(IdentityId) -> bool, budget: Duration) -> Verdict {
    let start = Instant::now();
    match run_sweep(cfg) {
        Ok(r) => {
            let cases: Vec<_> = r
                .cases
                .into_iter()
                .filter(|c| keep(c.identity_id))
                .collect();
            summarize(&cases, start.elapsed(), budget)
        }
        Err(e) => Verdict {
            ok: false,
            detail: format!("sweep error: {e}"),
        },
    }
}

fn kernel() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    match check_scalar_kernel(&mut rng, 1000) {
        Ok(s) => {
            let t = start.elapsed();
            Verdict {
                ok: s.worst() <= 1e-10 && t < Duration::from_secs(1),
                detail: format!(
                    "1000 points: recurrence {:.1e}, reflection {:.1e}, beta {:.1e}, {:.3}s",
                    s.recurrence,
                    s.reflection,
                    s.beta_integral,
                    t.as_secs_f64()
                ),
            }
        }
        Err(e) => Verdict {
            ok: false,
            detail: e.to_string(),
        },
    }
}

fn one_dim() -> Verdict {
    let cfg = SweepConfig {
        d: vec![],
        ..only(&[Family::Orthogonality], &[])
    };
    let ids = [
        IdentityId::OrtGegen,
        IdentityId::OrtJacobi,
        IdentityId::OrtLaguerre,
    ];
    sweep_cases(&cfg, |id| ids.contains(&id), Duration::from_secs(5))
}

fn ball_paraboloid() -> Verdict {
    let cfg = SweepConfig {
        one_dim_draws: 0,
        ..only(&[Family::Orthogonality], &[2])
    };
    let ids = [
        IdentityId::OrtBall,
        IdentityId::OrtParaJ,
        IdentityId::OrtParaL,
    ];
    sweep_cases(&cfg, |id| ids.contains(&id), Duration::from_secs(120))
}

fn fourier() -> Verdict {
    sweep_cases(
        &only(&[Family::Fourier], &[1, 2]),
        |_| true,
        Duration::from_secs(300),
    )
}

fn forms() -> Verdict {
    sweep_cases(
        &only(&[Family::Forms], &[1, 2]),
        |_| true,
        Duration::from_secs(10),
    )
}

fn parseval() -> Verdict {
    sweep_cases(
        &only(&[Family::Parseval], &[1, 2]),
        |_| true,
        Duration::from_secs(900),
    )
}

fn contiguous() -> Verdict {
    let start = Instant::now();
    let cfg = only(&[Family::Contiguous, Family::Recurrences], &[1, 2]);
    match run_sweep(&cfg) {
        Ok(r) => {
            let mut v = summarize(&r.cases, start.elapsed(), Duration::from_secs(10));
            let quadrature = r.cases.iter().filter(|c| c.nodes > 0).count();
            if quadrature > 0 {
                v.ok = false;
                v.detail
                    .push_str(&format!("; {quadrature} cases used quadrature"));
            }
            v
        }
        Err(e) => Verdict {
            ok: false,
            detail: format!("sweep error: {e}"),
        },
    }
}

fn end_to_end() -> Verdict {
    let cfg = SweepConfig {
        timestamp: false,
        ..SweepConfig::default()
    };
    let first =
        run_sweep(&cfg).and_then(|r| Ok((r.summary.exit_code(), render(&r, OutputFormat::Json)?)));
    let second = run_sweep(&cfg).and_then(|r| render(&r, OutputFormat::Json));
    match (first, second) {
        (Ok((code, a)), Ok(b)) => Verdict {
            ok: code == 0 && a == b,
            detail: format!(
                "exit code {code}, reruns byte-identical: {} ({} bytes)",
                a == b,
                a.len()
            ),
        },
        (Err(e), _) | (_, Err(e)) => Verdict {
            ok: false,
            detail: format!("sweep error: {e}"),
        },
    }
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 8] = [
        ("scalar kernel", kernel),
        ("1-D orthogonality", one_dim),
        ("ball and paraboloid orthogonality", ball_paraboloid),
        ("Fourier closed forms", fourier),
        ("form equivalences", forms),
        ("Parseval constants", parseval),
        ("contiguous relations", contiguous),
        ("end-to-end sweep", end_to_end),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let v = f();
        if !v.ok {
            failed += 1;
        }
        println!(
            "criterion {} {name}: {} ({})",
            i + 1,
            if v.ok { "PASS" } else { "FAIL" },
            v.detail
        );
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
