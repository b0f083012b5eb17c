//! Weak stability axioms on the numerical sequences of a tilted heart.

use stabcurve::{check_clsy, check_regular, check_strict_weak, enumerate_ses, Beta, Rational, StabilityPoint};

fn main() -> stabcurve::Result<()> {
    for (p, q) in [(0, 1), (1, 4), (1, 2), (3, 4), (1, 1)] {
        let sigma = StabilityPoint::sigma_beta_t(Beta::rational(0, 1), Rational::new(p, q), 1)?;
        let corpus = enumerate_ses(&sigma, 3, 6);
        let strict = check_strict_weak(&sigma, &corpus)?;
        let clsy = check_clsy(&sigma, &corpus)?;
        println!(
            "t = {p}/{q}: {} sequences, clsy {}, strict {}{}, regular {}",
            corpus.len(),
            clsy.passed,
            strict.passed,
            strict
                .witness
                .map(|w| format!(" (witness {} → {} → {})", w.sub, w.total, w.quot))
                .unwrap_or_default(),
            check_regular(&sigma).passed,
        );
    }
    Ok(())
}
