//! Brute-force references shared by the integration tests.
#![allow(dead_code)]

use std::cmp::Ordering;
use std::f64::consts::PI;

use stabcurve::{Beta, ExactReal, Factor, FormalObject, NumClass, Rational, StabilityPoint, Variant};

/// Sign of `d/r − β` for `r > 0`, by squaring.
fn slope_vs(beta: &ExactReal, c: NumClass) -> Ordering {
    let lhs = Rational::new(c.d as i128, c.r as i128) - beta.rational_part();
    let b = beta.surd_coefficient();
    let zero = Rational::from_integer(0);
    if b == zero {
        return lhs.cmp(&zero);
    }
    let rhs_sign = b.cmp(&zero);
    let lhs_sign = lhs.cmp(&zero);
    if lhs_sign != rhs_sign {
        return if lhs_sign == Ordering::Greater || (lhs_sign == Ordering::Equal && rhs_sign == Ordering::Less) {
            Ordering::Greater
        } else {
            Ordering::Less
        };
    }
    let l2 = lhs * lhs;
    let r2 = b * b * Rational::from_integer(beta.radicand());
    if lhs_sign == Ordering::Greater {
        l2.cmp(&r2)
    } else {
        r2.cmp(&l2)
    }
}

/// Phase of `c[k]` straight from the parameters; `None` when undefined.
pub fn direct_phase(sigma: &StabilityPoint, k: i64, c: NumClass) -> Option<f64> {
    match sigma {
        StabilityPoint::Geometric(p) => {
            let base = if c.r == 0 {
                1.0
            } else {
                (p.tau.im * c.r as f64).atan2(p.tau.re * c.r as f64 - c.d as f64) / PI
            };
            Some(k as f64 + base - p.lambda.re)
        }
        StabilityPoint::Boundary(p) => {
            let zero_label = |default: Option<f64>| p.t.map(|t| *t.numer() as f64 / *t.denom() as f64).or(default);
            let level = match (&p.beta, c.r) {
                (Beta::Infinity, 0) => zero_label(Some(if p.variant == Variant::Lower { 1.0 } else { 0.0 }))?,
                (Beta::Infinity, _) => 0.0,
                (Beta::Finite(_), 0) => 1.0,
                (Beta::Finite(b), _) => match slope_vs(b, c) {
                    Ordering::Greater => 1.0,
                    Ordering::Less => 0.0,
                    Ordering::Equal => zero_label(None)?,
                },
            };
            Some(k as f64 + level - p.lambda.re)
        }
    }
}

/// Assign phases factor by factor, merge equal phases, sort descending.
/// Returns `(phase, shift, class)` triples, or `None` if some phase is undefined.
pub fn hn_oracle(sigma: &StabilityPoint, obj: &FormalObject) -> Option<Vec<(f64, i64, NumClass)>> {
    let mut tagged: Vec<(f64, Factor)> = Vec::new();
    for f in obj.factors() {
        tagged.push((direct_phase(sigma, f.shift, f.class)?, *f));
    }
    tagged.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    let mut groups: Vec<(f64, Vec<Factor>)> = Vec::new();
    for (p, f) in tagged {
        match groups.last_mut() {
            Some((q, fs)) if (*q - p).abs() <= 1e-12 => fs.push(f),
            _ => groups.push((p, vec![f])),
        }
    }
    Some(
        groups
            .into_iter()
            .map(|(p, fs)| {
                let k = fs.iter().map(|f| f.shift).min().unwrap();
                let class = fs.iter().fold(NumClass::new(0, 0), |acc, f| {
                    if (f.shift - k) % 2 == 0 {
                        acc + f.class
                    } else {
                        acc - f.class
                    }
                });
                (p, k, class)
            })
            .collect(),
    )
}

/// The factor pool of the exhaustive HN comparison.
pub fn hn_pool() -> Vec<Factor> {
    let mut classes = vec![NumClass::new(0, 1)];
    for r in 1..=2 {
        for d in -3..=3 {
            classes.push(NumClass::new(r, d));
        }
    }
    let mut pool = Vec::new();
    for k in 0..=1 {
        for c in &classes {
            pool.push(Factor::new(k, *c));
        }
    }
    pool
}

/// Every canonical object built from at most `max` pool entries (genus 1), deduplicated.
pub fn canonical_objects(max: usize) -> Vec<FormalObject> {
    let pool = hn_pool();
    let mut out = std::collections::HashSet::new();
    fn rec(
        pool: &[Factor],
        start: usize,
        left: usize,
        cur: &mut Vec<Factor>,
        out: &mut std::collections::HashSet<FormalObject>,
    ) {
        out.insert(FormalObject::canonicalize(cur, 1).unwrap());
        if left == 0 {
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            rec(pool, i, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(&pool, 0, max, &mut Vec::new(), &mut out);
    let mut v: Vec<FormalObject> = out.into_iter().collect();
    v.sort_by_key(|o| format!("{:?}", o.factors()));
    v
}

/// Whether `hn` matches the oracle (or both refuse).
pub fn hn_agrees(sigma: &StabilityPoint, obj: &FormalObject) -> bool {
    let got = sigma.hn(obj);
    match (got, hn_oracle(sigma, obj)) {
        (Err(_), None) => true,
        (Ok(hn), Some(orc)) => {
            hn.factors.len() == orc.len()
                && hn.factors.iter().zip(orc.iter()).all(|(f, (p, k, c))| {
                    (f.phase.value - p).abs() <= 1e-12 && f.shift == *k && f.class == *c
                })
                && hn.factors.windows(2).all(|w| w[0].phase.value > w[1].phase.value)
                && FormalObject::canonicalize(
                    &hn.factors.iter().flat_map(|f| f.constituents.iter().copied()).collect::<Vec<_>>(),
                    obj.genus(),
                )
                .as_ref()
                    == Ok(obj)
        }
        _ => false,
    }
}

/// `sup_μ |φ1(μ) − φ2(μ)|` over a grid of `n` slopes plus the torsion direction.
pub fn grid_distance(s1: &StabilityPoint, s2: &StabilityPoint, n: usize) -> f64 {
    let (StabilityPoint::Geometric(p1), StabilityPoint::Geometric(p2)) = (s1, s2) else {
        panic!("geometric points only");
    };
    let phase = |tau: num_complex::Complex64, x: f64, mu: f64| (tau.im).atan2(tau.re - mu) / PI - x;
    let mid = 0.5 * (p1.tau.re + p2.tau.re);
    let scale = p1.tau.im.max(p2.tau.im).max((p1.tau.re - p2.tau.re).abs()).max(1.0);
    let mut best = (p2.lambda.re - p1.lambda.re).abs();
    for i in 0..n {
        let u = -PI / 2.0 + PI * (i as f64 + 0.5) / n as f64;
        let mu = mid + scale * u.tan();
        let gap = (phase(p1.tau, p1.lambda.re, mu) - phase(p2.tau, p2.lambda.re, mu)).abs();
        best = best.max(gap);
    }
    best
}
