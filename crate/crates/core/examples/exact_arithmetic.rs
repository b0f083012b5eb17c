//! Exact numbers `a + b√n`, sign decisions and slopes.

use stabcurve::{CurveContext, ExactReal, NumClass};

fn main() -> stabcurve::Result<()> {
    let x: ExactReal = "1/2+3*sqrt:5".parse()?;
    let y = ExactReal::sqrt(5)?;
    println!("x = {x} ≈ {:.12}", x.to_f64());
    println!("x - 3y = {}", x.checked_sub(&y.checked_mul(&ExactReal::from_integer(3))?)?);
    println!("floor x = {}, ceil x = {}", x.floor(), x.ceil());

    // 577/408 overshoots √2 by less than 2e-6 but the sign is still decided exactly
    let gap = ExactReal::ratio(577, 408).checked_sub(&ExactReal::sqrt(2)?)?;
    println!("577/408 - √2 has sign {:?}", gap.signum());

    let ctx = CurveContext { genus: 2 };
    for c in [ctx.structure_sheaf(), ctx.canonical_bundle(), ctx.skyscraper(), NumClass::new(2, 3)] {
        println!("class {c}: slope {}, χ(O, ·) = {}", c.slope()?, ctx.euler_form(ctx.structure_sheaf(), c));
    }
    Ok(())
}
