//! The `(c, w)` chart and the approach of `Z_{α,β}` to the boundary as α → 0.

use stabcurve::{chart_fwd, chart_inv, CentralChargeMatrix, StabilityPoint};

fn main() -> stabcurve::Result<()> {
    let m = [[2.0, 1.0], [-0.5, 3.0]];
    let ch = chart_fwd(&m)?;
    println!("chart of {m:?}: c = {}, w = {}", ch.c, ch.w);
    println!("inverse: {:?}", chart_inv(&ch)?);

    let beta = 0.75;
    for e in 0..=6 {
        let alpha = 10f64.powi(-e);
        let s = StabilityPoint::sigma_alpha_beta(alpha, beta, 1)?;
        let ch = chart_fwd(&CentralChargeMatrix::of(&s).0)?;
        println!("α = {alpha:e}: c = {}, w = {}", ch.c, ch.w);
    }
    println!("limit: c = i, w = {}", -beta);
    Ok(())
}
