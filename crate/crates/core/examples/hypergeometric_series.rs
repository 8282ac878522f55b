use parabolic_fourier::hypergeometric::{eval_2f1_at_2, hyp1f1, hyp2f1, hyp3f2, HypSeries};
use parabolic_fourier::scalar::c64;

pub fn run() -> parabolic_fourier::Result<()> {
    let r = |x: f64| c64(x, 0.0);

    // 2F1(1, 1; 2; z) = -ln(1 - z)/z
    let z = r(0.4);
    let v = hyp2f1(r(1.0), r(1.0), r(2.0), z)?;
    println!(
        "2F1(1,1;2;0.4) = {:.16}  closed {:.16}",
        v.re,
        -(0.6f64).ln() / 0.4
    );

    // terminating series are summed exactly, whatever |z| is
    let s = HypSeries::new(&[r(-6.0), r(2.5)], &[r(1.5)], r(2.0));
    println!("terminates at degree {:?}", s.termination_degree());
    println!(
        "2F1(-6, 2.5; 1.5; 2) = {:.16}",
        eval_2f1_at_2(r(-6.0), r(2.5), r(1.5))?.re
    );

    // Saalschütz: 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
    let (n, a, b, c) = (4.0, 0.3, 1.2, 2.1);
    let lhs = hyp3f2([r(-n), r(a), r(b)], [r(c), r(1.0 + a + b - c - n)], r(1.0))?;
    let poch = |x: f64| (0..4).map(|i| x + i as f64).product::<f64>();
    let rhs = poch(c - a) * poch(c - b) / (poch(c) * poch(c - a - b));
    println!("Saalschütz: {:.15} vs {:.15}", lhs.re, rhs);

    // Kummer: 1F1(a; a; z) = e^z
    println!(
        "1F1(0.7;0.7;1+i) = {:.15}",
        hyp1f1(r(0.7), r(0.7), c64(1.0, 1.0))?
    );

    match hyp2f1(r(1.0), r(1.0), r(-2.0), r(0.3)) {
        Err(e) => println!("c = -2: {e}"),
        Ok(v) => println!("c = -2 gave {v}"),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
