//! The universal-cover action: composing elements, solving for the element
//! between two points, and the ℂ-action.

use num_complex::Complex64;
use stabcurve::{act, act_c, solve_transitive, GroupElement, StabilityPoint};

fn main() -> stabcurve::Result<()> {
    let minus = GroupElement::new([[-1.0, 0.0], [0.0, -1.0]], 0)?;
    let twice = minus.compose(&minus)?;
    println!("(−1)·(−1) has winding {} and f(0) = {}", twice.winding(), twice.f0());
    println!("embedded λ = 1/2: {:?}", GroupElement::embed_c(Complex64::new(0.5, 0.0)));

    let s1 = StabilityPoint::geometric(Complex64::new(0.2, -0.4), Complex64::new(-1.0, 0.5), 1)?;
    let s2 = StabilityPoint::geometric(Complex64::new(1.7, 0.1), Complex64::new(2.0, 3.0), 1)?;
    let g = solve_transitive(&s1, &s2)?;
    println!("g = {:?}, winding {}", g.matrix(), g.winding());
    println!("σ1·g = {:?}", act(&s1, &g)?);
    println!("target {s2:?}");

    let shifted = act_c(&s1, Complex64::new(1.0, 0.0));
    println!(
        "O_C phase {:.6} → {:.6} after λ ↦ λ + 1",
        s1.phase(0, s1.ctx().structure_sheaf())?.value,
        shifted.phase(0, s1.ctx().structure_sheaf())?.value
    );
    Ok(())
}
