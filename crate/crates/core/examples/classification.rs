//! Which boundary points are stability conditions, and whether their slicing is locally finite.

use stabcurve::{classify, Beta, ExactReal};

fn main() -> stabcurve::Result<()> {
    let betas = [
        Beta::rational(0, 1),
        Beta::rational(1, 2),
        Beta::rational(2, 1),
        Beta::Finite(ExactReal::sqrt(2)?),
        Beta::Finite("-1/3+2*sqrt:7".parse()?),
        Beta::Infinity,
    ];
    for genus in [0, 1, 2] {
        for beta in &betas {
            println!("g = {genus}, β = {beta}: {}", classify(genus, beta).as_str());
        }
    }
    Ok(())
}
