//! Projective mass coordinates `[m(O_x) : m(O_C) : m(O_C(−y))]` and their boundary limit.

use stabcurve::{pm_boundary_limit, pm_embed, sample_disk_csv, ExactReal, SampleRange, StabilityPoint};

fn main() -> stabcurve::Result<()> {
    for (alpha, beta) in [(1.0, 0.0), (0.1, -0.5), (0.001, -0.5)] {
        let p = pm_embed(&StabilityPoint::sigma_alpha_beta(alpha, beta, 1)?)?;
        println!("α = {alpha}, β = {beta}: {:?}", p.coords());
    }
    println!("boundary at β = −1/2: {:?}", pm_boundary_limit(&ExactReal::ratio(-1, 2), 1)?.coords());

    let csv = sample_disk_csv(1, "-1:1:1".parse::<SampleRange>()?, "0.5:1:0.5".parse::<SampleRange>()?)?;
    print!("{csv}");
    Ok(())
}
