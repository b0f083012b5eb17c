//! Harder–Narasimhan factors of a formal object at geometric and boundary points.

use num_complex::Complex64;
use stabcurve::{Beta, Factor, FormalObject, NumClass, Rational, StabilityPoint};

fn show(label: &str, sigma: &StabilityPoint, obj: &FormalObject) -> stabcurve::Result<()> {
    let hn = sigma.hn(obj)?;
    println!("{label}: mass {:.6}", sigma.mass(obj)?);
    for f in &hn.factors {
        println!("  phase {:+.6}  shift {}  class {}", f.phase.value, f.shift, f.class);
    }
    Ok(())
}

fn main() -> stabcurve::Result<()> {
    let obj = FormalObject::canonicalize(
        &[
            Factor::new(0, NumClass::new(1, 0)),
            Factor::new(0, NumClass::new(0, 1)),
            Factor::new(1, NumClass::new(2, -1)),
            Factor::new(0, NumClass::new(1, 2)),
        ],
        1,
    )?;
    show("slope stability", &StabilityPoint::slope_stability(1), &obj)?;
    show(
        "λ = 0.3, τ = −1 + 2i",
        &StabilityPoint::geometric(Complex64::new(0.3, 0.0), Complex64::new(-1.0, 2.0), 1)?,
        &obj,
    )?;
    show(
        "β = 0, t = 1/2",
        &StabilityPoint::sigma_beta_t(Beta::rational(0, 1), Rational::new(1, 2), 1)?,
        &obj,
    )?;
    Ok(())
}
