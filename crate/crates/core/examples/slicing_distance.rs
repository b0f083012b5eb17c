//! The slicing distance: closed form between geometric points and the
//! separation of boundary points.

use num_complex::Complex64;
use stabcurve::{slicing_distance, Beta, ExactReal, StabilityPoint, Variant};

fn main() -> stabcurve::Result<()> {
    let a = StabilityPoint::sigma_alpha_beta(1.0, 0.0, 1)?;
    let b = StabilityPoint::sigma_alpha_beta(2.0, 0.0, 1)?;
    let c = StabilityPoint::geometric(Complex64::new(0.25, 0.0), Complex64::new(0.4, 0.3), 1)?;
    for (name, p, q) in [("a-b", &a, &b), ("a-c", &a, &c), ("b-c", &b, &c)] {
        let d = slicing_distance(p, q)?;
        println!("{name}: {:.12} attained at {}", d.d, d.witness);
    }

    let betas = [Beta::rational(0, 1), Beta::rational(1, 2), Beta::Finite(ExactReal::sqrt(2)?)];
    for (i, x) in betas.iter().enumerate() {
        for y in &betas[i + 1..] {
            let p = StabilityPoint::sigma_beta(*x, Variant::Lower, 1)?;
            let q = StabilityPoint::sigma_beta(*y, Variant::Lower, 1)?;
            let d = slicing_distance(&p, &q)?;
            println!("σ_{x} to σ_{y}: {} at {}", d.d, d.witness);
        }
        let p = StabilityPoint::sigma_beta(*x, Variant::Lower, 1)?;
        println!("a to σ_{x}: {}", slicing_distance(&a, &p)?.d);
    }
    Ok(())
}
