//! Global dimension: exact at genus one and on the boundary, bracketed in (1, 2] otherwise.

use num_complex::Complex64;
use stabcurve::{gldim, Beta, StabilityPoint, Variant};

fn main() -> stabcurve::Result<()> {
    println!("g=1 slope stability: {:?}", gldim(&StabilityPoint::slope_stability(1))?);
    println!(
        "g=2 boundary β=1/2: {:?}",
        gldim(&StabilityPoint::sigma_beta(Beta::rational(1, 2), Variant::Upper, 2)?)?
    );
    for alpha in [1.0, 0.1, 0.01, 0.001] {
        let s = StabilityPoint::geometric(Complex64::new(0.0, 0.0), Complex64::new(0.0, alpha), 2)?;
        println!("g=2 τ = {alpha}i: {:?}", gldim(&s)?);
    }
    Ok(())
}
