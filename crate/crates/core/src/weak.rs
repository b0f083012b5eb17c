//! Checkers for the weak stability axioms over numerical short exact sequences.
//!
//! A [`NumericalSES`] is a triple of heart classes with `total = sub + quot`.
//! Admissibility is numerical only: no sheaf-level extension is constructed.
//! Witnesses found this way are genuine whenever a realizing sequence exists,
//! as for `O_C ↪ O_C(x) ↠ O_x`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{ratio_to_f64, NumClass, FLOAT_TOL};
use crate::stability::{fold_unit, StabilityPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NumericalSES {
    pub sub: NumClass,
    pub total: NumClass,
    pub quot: NumClass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Clsy,
    StrictTrichotomy,
    Regularity,
    NontrivialZ,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomVerdict {
    pub passed: bool,
    pub witness: Option<NumericalSES>,
    pub rule: Option<Rule>,
}

impl AxiomVerdict {
    fn pass() -> Self {
        Self {
            passed: true,
            witness: None,
            rule: None,
        }
    }

    fn fail(rule: Rule, witness: Option<NumericalSES>) -> Self {
        Self {
            passed: false,
            witness,
            rule: Some(rule),
        }
    }
}

/// The data the checkers need from a (weak) stability point.
pub trait WeakDatum {
    fn genus(&self) -> u32;
    /// Whether `c` is the class of some object of the heart `P((0,1])`.
    fn in_heart(&self, c: NumClass) -> bool;
    fn charge(&self, c: NumClass) -> Complex64;
    /// The phase in `(0,1]` attached to a heart class.
    fn heart_phase(&self, c: NumClass) -> Result<f64>;
    fn charge_is_trivial(&self) -> bool;
    fn heart_admits_zero_class(&self) -> bool;
}

impl WeakDatum for StabilityPoint {
    fn genus(&self) -> u32 {
        StabilityPoint::genus(self)
    }

    fn in_heart(&self, c: NumClass) -> bool {
        self.heart_cut().contains(self.genus(), c)
    }

    fn charge(&self, c: NumClass) -> Complex64 {
        self.central_charge(c)
    }

    fn heart_phase(&self, c: NumClass) -> Result<f64> {
        let x = self.lambda().re;
        match self {
            StabilityPoint::Geometric(_) => {
                let z = self.central_charge(c);
                let v = z.im.atan2(z.re) / PI;
                Ok(if v <= 0.0 { v + 2.0 } else { v })
            }
            StabilityPoint::Boundary(_) => {
                let zb = self.boundary_charge_exact(c).expect("boundary point");
                let level = match zb.signum() {
                    std::cmp::Ordering::Less => 1.0,
                    std::cmp::Ordering::Greater => 0.0,
                    std::cmp::Ordering::Equal => {
                        ratio_to_f64(self.zero_charge_label().ok_or(Error::MissingPhaseLabel)?)
                    }
                };
                Ok(fold_unit(level - x))
            }
        }
    }

    fn charge_is_trivial(&self) -> bool {
        false
    }

    fn heart_admits_zero_class(&self) -> bool {
        self.in_heart(NumClass::new(0, 0))
    }
}

/// A point whose central charge is replaced by the zero map.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrivialChargePoint(pub StabilityPoint);

impl WeakDatum for TrivialChargePoint {
    fn genus(&self) -> u32 {
        self.0.genus()
    }

    fn in_heart(&self, c: NumClass) -> bool {
        self.0.in_heart(c)
    }

    fn charge(&self, _c: NumClass) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }

    fn heart_phase(&self, _c: NumClass) -> Result<f64> {
        Ok(1.0)
    }

    fn charge_is_trivial(&self) -> bool {
        true
    }

    fn heart_admits_zero_class(&self) -> bool {
        self.0.heart_admits_zero_class()
    }
}

/// Canonical order: smaller `|r| + |d|` first, then larger `r`, then larger `d`.
fn canonical_key(c: &NumClass) -> (i64, i64, i64) {
    (c.r.abs() + c.d.abs(), -c.r, -c.d)
}

/// Heart classes with `|r| ≤ rank_bound` and `|d| ≤ deg_bound`, in canonical order.
pub fn heart_classes<W: WeakDatum + ?Sized>(sigma: &W, rank_bound: i64, deg_bound: i64) -> Vec<NumClass> {
    let mut out: Vec<NumClass> = (-rank_bound..=rank_bound)
        .flat_map(|r| (-deg_bound..=deg_bound).map(move |d| NumClass::new(r, d)))
        .filter(|c| !c.is_zero() && sigma.in_heart(*c))
        .collect();
    out.sort_by_key(canonical_key);
    out
}

/// All numerical sequences `sub → total → quot` of heart classes inside the bounds.
pub fn enumerate_ses<W: WeakDatum + ?Sized>(
    sigma: &W,
    rank_bound: i64,
    deg_bound: i64,
) -> Vec<NumericalSES> {
    let classes = heart_classes(sigma, rank_bound, deg_bound);
    let mut out = Vec::new();
    for &sub in &classes {
        for &quot in &classes {
            let total = sub + quot;
            if total.r.abs() <= rank_bound && total.d.abs() <= deg_bound && sigma.in_heart(total) {
                out.push(NumericalSES { sub, total, quot });
            }
        }
    }
    out
}

fn phases<W: WeakDatum + ?Sized>(sigma: &W, s: &NumericalSES) -> Result<(f64, f64, f64)> {
    Ok((
        sigma.heart_phase(s.sub)?,
        sigma.heart_phase(s.total)?,
        sigma.heart_phase(s.quot)?,
    ))
}

fn weakly_monotone(p1: f64, p: f64, p2: f64) -> bool {
    (p1 >= p - FLOAT_TOL && p >= p2 - FLOAT_TOL) || (p1 <= p + FLOAT_TOL && p <= p2 + FLOAT_TOL)
}

fn trichotomy(p1: f64, p: f64, p2: f64) -> bool {
    let eq = |a: f64, b: f64| (a - b).abs() <= FLOAT_TOL;
    (p1 > p + FLOAT_TOL && p > p2 + FLOAT_TOL)
        || (p1 < p - FLOAT_TOL && p < p2 - FLOAT_TOL)
        || (eq(p1, p) && eq(p, p2))
}

/// `φ(K1) ≥ φ(K) ≥ φ(K2)` or `φ(K1) ≤ φ(K) ≤ φ(K2)` on every sequence.
pub fn check_clsy<W: WeakDatum + ?Sized>(sigma: &W, corpus: &[NumericalSES]) -> Result<AxiomVerdict> {
    for s in corpus {
        let (p1, p, p2) = phases(sigma, s)?;
        if !weakly_monotone(p1, p, p2) {
            return Ok(AxiomVerdict::fail(Rule::Clsy, Some(*s)));
        }
    }
    Ok(AxiomVerdict::pass())
}

/// Non-trivial `Z` and one of `>,>`, `<,<`, `=,=` on every sequence.
pub fn check_strict_weak<W: WeakDatum + ?Sized>(
    sigma: &W,
    corpus: &[NumericalSES],
) -> Result<AxiomVerdict> {
    if sigma.charge_is_trivial() {
        return Ok(AxiomVerdict::fail(Rule::NontrivialZ, None));
    }
    for s in corpus {
        let (p1, p, p2) = phases(sigma, s)?;
        if !trichotomy(p1, p, p2) {
            return Ok(AxiomVerdict::fail(Rule::StrictTrichotomy, Some(*s)));
        }
    }
    Ok(AxiomVerdict::pass())
}

/// No heart object of trivial numerical class.
pub fn check_regular<W: WeakDatum + ?Sized>(sigma: &W) -> AxiomVerdict {
    AxiomVerdict {
        passed: !sigma.heart_admits_zero_class(),
        witness: None,
        rule: Some(Rule::Regularity),
    }
}
