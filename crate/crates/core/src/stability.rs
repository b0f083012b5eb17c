//! The catalog of stability points on a curve.
//!
//! Interior points are `σ_{α,β}.λ` with central charge
//! `Z(r,d) = e^{-iπλ}(−d + τ r)`, `τ = β + αi` in the upper half plane.
//! Boundary points carry the degenerate charge `Z_β(r,d) = −d + β r`
//! (or `Z_∞(r,d) = r`) together with the slicing cut out by a torsion pair
//! on `Coh(C)`:
//!
//! * `Lower` (`σ_β`): torsion and `μ ≥ β` in phase 1, `μ < β` in phase 0;
//! * `Upper` (`σ'_β`): torsion and `μ > β` in phase 1, `μ ≤ β` in phase 0.
//!
//! At `β = ∞`, `Lower` puts torsion in phase 1 and torsion-free sheaves in
//! phase 0, while `Upper` puts all of `Coh(C)` in phase 0. The optional
//! label `t ∈ [0,1]` places the classes with `Z_β = 0` at phase `t`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num::{ratio_to_f64, CurveContext, ExactReal, NumClass, Rational, Slope};
use crate::objects::{Factor, FormalObject};

/// A boundary parameter `β ∈ ℝ ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Beta {
    Finite(ExactReal),
    Infinity,
}

impl Beta {
    pub fn rational(p: i128, q: i128) -> Self {
        Beta::Finite(ExactReal::ratio(p, q))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Beta::Finite(_))
    }

    /// `β + e`; `∞` is fixed.
    pub fn shifted(&self, e: i64) -> Self {
        match self {
            Beta::Finite(b) => Beta::Finite(*b + Rational::from_integer(e as i128)),
            Beta::Infinity => Beta::Infinity,
        }
    }
}

impl std::str::FromStr for Beta {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Ok(Beta::Infinity),
            other => Ok(Beta::Finite(other.parse()?)),
        }
    }
}

impl std::fmt::Display for Beta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Beta::Finite(b) => write!(f, "{b}"),
            Beta::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `σ_β`, heart `A_β`.
    Lower,
    /// `σ'_β`, heart `A'_β`.
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeometricPoint {
    pub lambda: Complex64,
    pub tau: Complex64,
    pub ctx: CurveContext,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryPoint {
    pub beta: Beta,
    pub variant: Variant,
    pub t: Option<Rational>,
    pub lambda: Complex64,
    pub ctx: CurveContext,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum StabilityPoint {
    Geometric(GeometricPoint),
    Boundary(BoundaryPoint),
}

/// A phase, with an exact integer channel when the phase is structurally integral.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseValue {
    pub value: f64,
    pub exact_integer: Option<i64>,
}

impl PhaseValue {
    fn integer(k: i64) -> Self {
        Self {
            value: k as f64,
            exact_integer: Some(k),
        }
    }
}

/// One Harder–Narasimhan factor.
///
/// `shift` is the lowest shift among the merged constituents and `class`
/// is the signed class relative to it, so a factor mixing `T[k]` and
/// `F[k+1]` in a tilted heart reads as a heart object placed at shift `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct HnFactor {
    pub phase: PhaseValue,
    pub class: NumClass,
    pub shift: i64,
    pub constituents: Vec<Factor>,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct HnResult {
    pub factors: Vec<HnFactor>,
}

impl HnResult {
    /// Phases of the factors, top to bottom.
    pub fn phases(&self) -> Vec<f64> {
        self.factors.iter().map(|f| f.phase.value).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    StabilityLocallyFinite,
    StabilityNotLocallyFinite,
    WeakOnly,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::StabilityLocallyFinite => "stability_locally_finite",
            Classification::StabilityNotLocallyFinite => "stability_not_locally_finite",
            Classification::WeakOnly => "weak_only",
        }
    }
}

/// Which piece of the boundary slicing a slope direction falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    Torsion,
    Free,
    ZeroCharge,
}

/// Threshold of a slope cut.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Threshold {
    Exact(ExactReal),
    Float(f64),
}

impl Threshold {
    /// Sign of `d − θ·r`.
    fn sign_of_offset(&self, c: NumClass) -> Ordering {
        match self {
            Threshold::Exact(theta) => {
                let v = -(*theta * Rational::from_integer(c.r as i128))
                    + Rational::from_integer(c.d as i128);
                v.signum()
            }
            Threshold::Float(theta) => {
                let v = c.d as f64 - theta * c.r as f64;
                v.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
            }
        }
    }

    fn min_integer_above(&self, inclusive: bool) -> i64 {
        match self {
            Threshold::Exact(theta) => {
                (if inclusive { theta.ceil() } else { theta.floor() + 1 }) as i64
            }
            Threshold::Float(theta) => {
                let c = theta.ceil();
                if inclusive || c != *theta {
                    c as i64
                } else {
                    c as i64 + 1
                }
            }
        }
    }
}

/// Torsion part of the torsion pair whose tilt is the heart, by slope.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum SlopeCut {
    /// Every sheaf sits in the heart unshifted.
    All,
    /// Slopes above (or at, when inclusive) the threshold, plus torsion.
    Above { theta: Threshold, inclusive: bool },
    TorsionOnly,
    /// Every sheaf enters the heart shifted by one.
    Nothing,
}

/// The heart `P((0,1])` described as `(T ∗ F[1])[s0]` for a slope cut.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct HeartCut {
    pub base_shift: i64,
    pub cut: SlopeCut,
}

impl HeartCut {
    /// Whether `c` is the class of a nonzero heart object.
    pub fn contains(&self, genus: u32, c: NumClass) -> bool {
        if c.is_zero() {
            return false;
        }
        let c = if self.base_shift.rem_euclid(2) == 0 { c } else { -c };
        let (r, d) = (c.r, c.d);
        match self.cut {
            SlopeCut::All => r > 0 || (r == 0 && d > 0),
            SlopeCut::TorsionOnly => r < 0 || (r == 0 && d > 0),
            SlopeCut::Nothing => r < 0 || (r == 0 && d < 0),
            SlopeCut::Above { theta, inclusive } => {
                if genus >= 1 {
                    match theta.sign_of_offset(c) {
                        Ordering::Greater => true,
                        Ordering::Equal => {
                            if inclusive {
                                r > 0
                            } else {
                                r < 0
                            }
                        }
                        Ordering::Less => false,
                    }
                } else {
                    // on P^1 only integral slopes occur; T starts at m_t, F ends at m_t - 1
                    let m_t = theta.min_integer_above(inclusive);
                    match r.cmp(&0) {
                        Ordering::Greater => d >= r * m_t,
                        Ordering::Equal => d > 0,
                        Ordering::Less => d >= r * (m_t - 1),
                    }
                }
            }
        }
    }
}

/// `e^{iπz}`, exact on quarter turns of the real part.
pub(crate) fn exp_i_pi(z: Complex64) -> Complex64 {
    let scale = (-PI * z.im).exp();
    let twice = 2.0 * z.re;
    let unit = if twice.fract() == 0.0 && twice.abs() < 1e15 {
        match (twice as i64).rem_euclid(4) {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    } else {
        Complex64::new((PI * z.re).cos(), (PI * z.re).sin())
    };
    if scale == 1.0 {
        unit
    } else {
        unit * scale
    }
}

/// Maps `v` to the representative of `v + ℤ` in `(0, 1]`.
pub(crate) fn fold_unit(v: f64) -> f64 {
    let w = v - v.ceil() + 1.0;
    if w > 1.0 {
        w - 1.0
    } else {
        w
    }
}

/// Total order on phases of one point, decided exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum PhaseKey {
    Geometric(i64, Slope),
    Boundary(Rational),
}

impl StabilityPoint {
    pub fn geometric(lambda: Complex64, tau: Complex64, genus: u32) -> Result<Self> {
        if !(tau.im > 0.0) || !tau.re.is_finite() || !tau.im.is_finite() {
            return Err(Error::InvalidPoint(format!("Im tau must be positive, got {tau}")));
        }
        if !lambda.re.is_finite() || !lambda.im.is_finite() {
            return Err(Error::InvalidPoint(format!("lambda must be finite, got {lambda}")));
        }
        Ok(StabilityPoint::Geometric(GeometricPoint {
            lambda,
            tau,
            ctx: CurveContext::new(genus),
        }))
    }

    /// `σ_{α,β}` with `λ = 0`.
    pub fn sigma_alpha_beta(alpha: f64, beta: f64, genus: u32) -> Result<Self> {
        Self::geometric(Complex64::new(0.0, 0.0), Complex64::new(beta, alpha), genus)
    }

    /// Slope stability: `Z(r,d) = −d + i r`.
    pub fn slope_stability(genus: u32) -> Self {
        Self::sigma_alpha_beta(1.0, 0.0, genus).expect("valid point")
    }

    pub fn boundary(
        beta: Beta,
        variant: Variant,
        t: Option<Rational>,
        lambda: Complex64,
        genus: u32,
    ) -> Result<Self> {
        if let Some(t) = t {
            if t < Rational::zero() || t > Rational::one() {
                return Err(Error::InvalidPoint(format!("t must lie in [0,1], got {t}")));
            }
            if !has_zero_charge_classes(genus, &beta) {
                return Err(Error::InvalidPoint(format!(
                    "t is only meaningful when zero-charge classes exist (beta = {beta}, genus {genus})"
                )));
            }
        }
        if !lambda.re.is_finite() || !lambda.im.is_finite() {
            return Err(Error::InvalidPoint(format!("lambda must be finite, got {lambda}")));
        }
        Ok(StabilityPoint::Boundary(BoundaryPoint {
            beta,
            variant,
            t,
            lambda,
            ctx: CurveContext::new(genus),
        }))
    }

    /// `σ_β` (or `σ'_β`) with `λ = 0` and no label.
    pub fn sigma_beta(beta: Beta, variant: Variant, genus: u32) -> Result<Self> {
        Self::boundary(beta, variant, None, Complex64::new(0.0, 0.0), genus)
    }

    /// `σ_{β,t}`: `Z_β` with zero-charge classes at phase `t`.
    pub fn sigma_beta_t(beta: Beta, t: Rational, genus: u32) -> Result<Self> {
        Self::boundary(beta, Variant::Lower, Some(t), Complex64::new(0.0, 0.0), genus)
    }

    pub fn genus(&self) -> u32 {
        self.ctx().genus
    }

    pub fn ctx(&self) -> CurveContext {
        match self {
            StabilityPoint::Geometric(p) => p.ctx,
            StabilityPoint::Boundary(p) => p.ctx,
        }
    }

    pub fn lambda(&self) -> Complex64 {
        match self {
            StabilityPoint::Geometric(p) => p.lambda,
            StabilityPoint::Boundary(p) => p.lambda,
        }
    }

    pub fn is_boundary(&self) -> bool {
        matches!(self, StabilityPoint::Boundary(_))
    }

    /// The same slicing data with `λ` replaced.
    pub fn with_lambda(&self, lambda: Complex64) -> Self {
        let mut out = *self;
        match &mut out {
            StabilityPoint::Geometric(p) => p.lambda = lambda,
            StabilityPoint::Boundary(p) => p.lambda = lambda,
        }
        out
    }

    /// The exact real charge `Z_β(c)` of a boundary point, before the `λ` rotation.
    pub(crate) fn boundary_charge_exact(&self, c: NumClass) -> Option<ExactReal> {
        match self {
            StabilityPoint::Boundary(p) => Some(match p.beta {
                Beta::Finite(b) => {
                    b * Rational::from_integer(c.r as i128) - Rational::from_integer(c.d as i128)
                }
                Beta::Infinity => ExactReal::from_integer(c.r as i128),
            }),
            StabilityPoint::Geometric(_) => None,
        }
    }

    pub fn central_charge(&self, c: NumClass) -> Complex64 {
        let rot = exp_i_pi(-self.lambda());
        let raw = match self {
            StabilityPoint::Geometric(p) => p.tau * c.r as f64 - c.d as f64,
            StabilityPoint::Boundary(_) => {
                let exact = self.boundary_charge_exact(c).expect("boundary point");
                Complex64::new(exact.to_f64(), 0.0)
            }
        };
        rot * raw
    }

    /// Side of the boundary torsion pair that a slope direction lies on.
    pub(crate) fn side(&self, slope: Slope) -> Side {
        let StabilityPoint::Boundary(p) = self else {
            return Side::Torsion;
        };
        match (p.beta, slope) {
            (Beta::Infinity, Slope::Infinite) => Side::ZeroCharge,
            (Beta::Infinity, Slope::Finite(_)) => Side::Free,
            (Beta::Finite(_), Slope::Infinite) => Side::Torsion,
            (Beta::Finite(b), Slope::Finite(mu)) => match b.cmp_rational(mu) {
                Ordering::Less => Side::Torsion,
                Ordering::Greater => Side::Free,
                Ordering::Equal => Side::ZeroCharge,
            },
        }
    }

    /// Phase label of zero-charge classes, as used by `phase`: the explicit
    /// `t`, or the slicing value at `β = ∞`. `None` for an unlabelled finite `β`.
    pub(crate) fn zero_charge_label(&self) -> Option<Rational> {
        match self {
            StabilityPoint::Boundary(p) => p.t.or(match p.beta {
                Beta::Infinity => Some(variant_level(p.variant)),
                Beta::Finite(_) => None,
            }),
            StabilityPoint::Geometric(_) => None,
        }
    }

    /// Level of zero-charge classes in the underlying slicing. Always
    /// defined: without `t` the torsion pair decides.
    pub(crate) fn slicing_zero_level(&self) -> Rational {
        match self {
            StabilityPoint::Boundary(p) => p.t.unwrap_or(variant_level(p.variant)),
            StabilityPoint::Geometric(_) => Rational::one(),
        }
    }

    /// Phase of a slope direction at shift 0 for a geometric point, before `λ`.
    pub(crate) fn geometric_base_phase(tau: Complex64, slope: Slope) -> f64 {
        match slope {
            Slope::Infinite => 1.0,
            Slope::Finite(mu) => (tau.im).atan2(tau.re - ratio_to_f64(mu)) / PI,
        }
    }

    fn phase_with_key(&self, k: i64, c: NumClass) -> Result<(PhaseKey, PhaseValue)> {
        if !crate::num::is_semistable_class(self.genus(), c)? {
            return Err(Error::NotSemistable {
                index: 0,
                class: c,
                genus: self.genus(),
            });
        }
        let slope = c.slope()?;
        let x = self.lambda().re;
        let x_int = (x.fract() == 0.0 && x.abs() < 1e15).then_some(x as i64);
        match self {
            StabilityPoint::Geometric(p) => {
                let key = PhaseKey::Geometric(k, slope);
                if slope == Slope::Infinite {
                    if let Some(xi) = x_int {
                        return Ok((key, PhaseValue::integer(k + 1 - xi)));
                    }
                }
                let base = Self::geometric_base_phase(p.tau, slope);
                Ok((
                    key,
                    PhaseValue {
                        value: k as f64 + base - x,
                        exact_integer: None,
                    },
                ))
            }
            StabilityPoint::Boundary(_) => {
                let level = match self.side(slope) {
                    Side::Torsion => Rational::one(),
                    Side::Free => Rational::zero(),
                    Side::ZeroCharge => self
                        .zero_charge_label()
                        .ok_or(Error::DegenerateClass(c))?,
                };
                let exact = level + Rational::from_integer(k as i128);
                let key = PhaseKey::Boundary(exact);
                let value = match (exact.is_integer(), x_int) {
                    (true, Some(xi)) => PhaseValue::integer(exact.to_integer() as i64 - xi),
                    _ => PhaseValue {
                        value: ratio_to_f64(exact) - x,
                        exact_integer: None,
                    },
                };
                Ok((key, value))
            }
        }
    }

    /// Phase of the semistable class `c` placed at shift `k`.
    pub fn phase(&self, k: i64, c: NumClass) -> Result<PhaseValue> {
        self.phase_with_key(k, c).map(|(_, v)| v)
    }

    pub fn hn(&self, obj: &FormalObject) -> Result<HnResult> {
        if obj.genus() != self.genus() {
            return Err(Error::MixedGenus(obj.genus(), self.genus()));
        }
        let mut groups: BTreeMap<PhaseKey, (PhaseValue, Vec<Factor>)> = BTreeMap::new();
        for f in obj.factors() {
            let (key, value) = self.phase_with_key(f.shift, f.class)?;
            groups.entry(key).or_insert((value, Vec::new())).1.push(*f);
        }
        let factors = groups
            .into_values()
            .rev()
            .map(|(phase, constituents)| {
                let shift = constituents.iter().map(|f| f.shift).min().unwrap_or(0);
                let class = constituents
                    .iter()
                    .map(|f| {
                        if (f.shift - shift).rem_euclid(2) == 0 {
                            f.class
                        } else {
                            -f.class
                        }
                    })
                    .sum();
                HnFactor {
                    phase,
                    class,
                    shift,
                    constituents,
                }
            })
            .collect();
        Ok(HnResult { factors })
    }

    /// `m_σ(E) = Σ |Z(A_i)|` over HN factors.
    pub fn mass(&self, obj: &FormalObject) -> Result<f64> {
        Ok(self
            .hn(obj)?
            .factors
            .iter()
            .map(|f| self.central_charge(f.class).norm())
            .sum())
    }

    /// Mass of a single semistable class at shift 0.
    pub fn mass_of_class(&self, c: NumClass) -> Result<f64> {
        self.mass(&FormalObject::semistable(0, c, self.genus())?)
    }

    /// Tensor by a line bundle of classical degree `e`: `τ ↦ τ + e`, `β ↦ β + e`.
    pub fn twisted(&self, e: i64) -> Self {
        let mut out = *self;
        match &mut out {
            StabilityPoint::Geometric(p) => p.tau += e as f64,
            StabilityPoint::Boundary(p) => p.beta = p.beta.shifted(e),
        }
        out
    }

    /// The heart `P((0,1])` as a tilt of `Coh(C)` by a slope cut.
    pub(crate) fn heart_cut(&self) -> HeartCut {
        let x = self.lambda().re;
        let base_shift = x.floor() as i64;
        let frac = x - x.floor();
        match self {
            StabilityPoint::Geometric(p) => {
                let cut = if frac == 0.0 {
                    SlopeCut::All
                } else {
                    // base phase equals frac at mu = b - a cot(pi frac)
                    let theta = p.tau.re - p.tau.im / (PI * frac).tan();
                    SlopeCut::Above {
                        theta: Threshold::Float(theta),
                        inclusive: false,
                    }
                };
                HeartCut { base_shift, cut }
            }
            StabilityPoint::Boundary(p) => {
                let level = ratio_to_f64(self.slicing_zero_level());
                let zero_in_torsion = (x - level).floor() as i64 + 1 == base_shift;
                let cut = match p.beta {
                    Beta::Finite(b) => SlopeCut::Above {
                        theta: Threshold::Exact(b),
                        inclusive: zero_in_torsion,
                    },
                    Beta::Infinity => {
                        if zero_in_torsion {
                            SlopeCut::TorsionOnly
                        } else {
                            SlopeCut::Nothing
                        }
                    }
                };
                HeartCut { base_shift, cut }
            }
        }
    }
}

fn variant_level(v: Variant) -> Rational {
    match v {
        Variant::Lower => Rational::one(),
        Variant::Upper => Rational::zero(),
    }
}

/// Whether some semistable sheaf has `Z_β = 0`.
pub fn has_zero_charge_classes(genus: u32, beta: &Beta) -> bool {
    match beta {
        Beta::Infinity => true,
        Beta::Finite(b) => {
            if genus >= 1 {
                b.is_rational()
            } else {
                b.is_integer()
            }
        }
    }
}

/// Boundary classification of the pair `(P_β, Z_β)`.
pub fn classify(genus: u32, beta: &Beta) -> Classification {
    if has_zero_charge_classes(genus, beta) {
        Classification::WeakOnly
    } else if genus >= 1 {
        Classification::StabilityNotLocallyFinite
    } else {
        Classification::StabilityLocallyFinite
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(r: i64, d: i64) -> NumClass {
        NumClass::new(r, d)
    }

    fn zero() -> Complex64 {
        Complex64::new(0.0, 0.0)
    }

    fn half() -> Beta {
        Beta::rational(1, 2)
    }

    #[test]
    fn central_charge_examples() {
        let s = StabilityPoint::sigma_alpha_beta(2.0, 0.0, 1).unwrap();
        let z = s.central_charge(c(3, 1));
        assert!((z - Complex64::new(-1.0, 6.0)).norm() < 1e-15);
        let s = StabilityPoint::slope_stability(1);
        assert_eq!(s.central_charge(c(0, 1)), Complex64::new(-1.0, 0.0));
        let b = StabilityPoint::sigma_beta(half(), Variant::Lower, 1).unwrap();
        assert_eq!(b.central_charge(c(2, 1)), Complex64::new(0.0, 0.0));
        let inf = StabilityPoint::sigma_beta(Beta::Infinity, Variant::Lower, 1).unwrap();
        assert_eq!(inf.central_charge(c(3, -7)), Complex64::new(3.0, 0.0));
    }

    #[test]
    fn phase_examples() {
        let s = StabilityPoint::slope_stability(1);
        assert!((s.phase(0, c(1, 0)).unwrap().value - 0.5).abs() < 1e-15);
        let s = StabilityPoint::geometric(zero(), Complex64::new(-1.0, 1.0), 1).unwrap();
        let p = s.phase(0, c(1, 1)).unwrap();
        assert!((p.value - 0.852_416_382_349_566_7).abs() < 1e-12);
        assert_eq!(p.exact_integer, None);

        let b = StabilityPoint::sigma_beta(half(), Variant::Lower, 1).unwrap();
        assert_eq!(b.phase(0, c(1, 1)).unwrap(), PhaseValue::integer(1));
        assert_eq!(b.phase(0, c(1, 0)).unwrap(), PhaseValue::integer(0));
        assert_eq!(b.phase(2, c(0, 3)).unwrap(), PhaseValue::integer(3));
        assert_eq!(b.phase(0, c(2, 1)), Err(Error::DegenerateClass(c(2, 1))));
    }

    #[test]
    fn skyscraper_phase_is_exact() {
        let s = StabilityPoint::geometric(Complex64::new(2.0, 0.3), Complex64::new(0.5, 2.0), 2)
            .unwrap();
        assert_eq!(s.phase(1, c(0, 1)).unwrap(), PhaseValue::integer(0));
        let s = StabilityPoint::geometric(Complex64::new(0.25, 0.0), Complex64::i(), 1).unwrap();
        let p = s.phase(0, c(0, 1)).unwrap();
        assert_eq!(p.exact_integer, None);
        assert!((p.value - 0.75).abs() < 1e-15);
    }

    #[test]
    fn upper_and_lower_differ_only_at_beta() {
        let beta = Beta::rational(1, 1);
        let lo = StabilityPoint::boundary(beta, Variant::Lower, None, zero(), 1).unwrap();
        let up = StabilityPoint::boundary(beta, Variant::Upper, None, zero(), 1).unwrap();
        for cls in [c(1, 2), c(1, 0), c(3, 1), c(0, 1), c(2, 5)] {
            assert_eq!(lo.phase(0, cls), up.phase(0, cls));
        }
        // labelled points place the degenerate class at t
        let lo = StabilityPoint::boundary(beta, Variant::Lower, Some(Rational::one()), zero(), 1)
            .unwrap();
        let up = StabilityPoint::boundary(beta, Variant::Upper, Some(Rational::zero()), zero(), 1)
            .unwrap();
        assert_eq!(lo.phase(0, c(2, 2)).unwrap(), PhaseValue::integer(1));
        assert_eq!(up.phase(0, c(2, 2)).unwrap(), PhaseValue::integer(0));
    }

    #[test]
    fn infinite_beta_slicings() {
        let lo = StabilityPoint::sigma_beta(Beta::Infinity, Variant::Lower, 1).unwrap();
        let up = StabilityPoint::sigma_beta(Beta::Infinity, Variant::Upper, 1).unwrap();
        assert_eq!(lo.phase(0, c(0, 1)).unwrap(), PhaseValue::integer(1));
        assert_eq!(lo.phase(0, c(2, 9)).unwrap(), PhaseValue::integer(0));
        assert_eq!(up.phase(0, c(0, 1)).unwrap(), PhaseValue::integer(0));
        assert_eq!(up.phase(0, c(2, 9)).unwrap(), PhaseValue::integer(0));
    }

    #[test]
    fn invalid_points() {
        assert!(StabilityPoint::geometric(zero(), Complex64::new(1.0, 0.0), 1).is_err());
        assert!(StabilityPoint::geometric(zero(), Complex64::new(1.0, -1.0), 1).is_err());
        let s2 = Beta::Finite(ExactReal::sqrt(2).unwrap());
        assert!(StabilityPoint::boundary(s2, Variant::Lower, Some(Rational::one()), zero(), 1)
            .is_err());
        assert!(StabilityPoint::boundary(half(), Variant::Lower, Some(Rational::new(3, 2)), zero(), 1)
            .is_err());
        // on P^1 a non-integral rational beta has no zero-charge classes
        assert!(StabilityPoint::boundary(half(), Variant::Lower, Some(Rational::one()), zero(), 0)
            .is_err());
    }

    #[test]
    fn hn_examples() {
        let s = StabilityPoint::slope_stability(1);
        let obj = FormalObject::canonicalize(&[Factor::new(0, c(1, 2)), Factor::new(0, c(1, -1))], 1)
            .unwrap();
        let hn = s.hn(&obj).unwrap();
        assert_eq!(hn.factors.len(), 2);
        assert!((hn.factors[0].phase.value - 0.852_416_382_349_566_7).abs() < 1e-12);
        assert_eq!(hn.factors[0].class, c(1, 2));
        assert!((hn.factors[1].phase.value - 0.25).abs() < 1e-15);
        assert_eq!(hn.factors[1].class, c(1, -1));

        let b = StabilityPoint::sigma_beta(half(), Variant::Lower, 1).unwrap();
        let obj = FormalObject::canonicalize(&[Factor::new(0, c(1, 1)), Factor::new(0, c(0, 1))], 1)
            .unwrap();
        let hn = b.hn(&obj).unwrap();
        assert_eq!(hn.factors.len(), 1);
        assert_eq!(hn.factors[0].phase, PhaseValue::integer(1));
        assert_eq!(hn.factors[0].class, c(1, 2));
        assert_eq!(hn.factors[0].shift, 0);
    }

    #[test]
    fn hn_merges_tilted_heart_pieces() {
        // T at shift 0 and F at shift 1 both sit in phase 1
        let b = StabilityPoint::sigma_beta(half(), Variant::Lower, 1).unwrap();
        let obj = FormalObject::canonicalize(&[Factor::new(0, c(1, 1)), Factor::new(1, c(1, -2))], 1)
            .unwrap();
        let hn = b.hn(&obj).unwrap();
        assert_eq!(hn.factors.len(), 1);
        assert_eq!(hn.factors[0].shift, 0);
        assert_eq!(hn.factors[0].class, c(0, 3));
        assert_eq!(hn.factors[0].constituents.len(), 2);
        assert!((b.mass(&obj).unwrap() - 3.0).abs() < 1e-15);
    }

    #[test]
    fn hn_rejects_foreign_genus() {
        let s = StabilityPoint::slope_stability(1);
        let obj = FormalObject::semistable(0, c(1, 0), 2).unwrap();
        assert_eq!(s.hn(&obj), Err(Error::MixedGenus(2, 1)));
    }

    #[test]
    fn mass_examples() {
        let s = StabilityPoint::slope_stability(1);
        assert!((s.mass_of_class(c(0, 1)).unwrap() - 1.0).abs() < 1e-15);
        let (alpha, beta) = (0.7, -1.3);
        let s = StabilityPoint::sigma_alpha_beta(alpha, beta, 1).unwrap();
        let m = s.mass_of_class(c(1, 0)).unwrap();
        assert!((m - (alpha * alpha + beta * beta).sqrt()).abs() < 1e-14);
        let b = StabilityPoint::sigma_beta_t(half(), Rational::new(1, 2), 1).unwrap();
        assert_eq!(b.mass_of_class(c(2, 1)).unwrap(), 0.0);
    }

    #[test]
    fn classification_table() {
        let s2 = Beta::Finite(ExactReal::sqrt(2).unwrap());
        assert_eq!(classify(1, &s2), Classification::StabilityNotLocallyFinite);
        assert_eq!(classify(1, &half()), Classification::WeakOnly);
        assert_eq!(classify(0, &half()), Classification::StabilityLocallyFinite);
        assert_eq!(classify(0, &Beta::rational(2, 1)), Classification::WeakOnly);
        assert_eq!(classify(0, &Beta::Infinity), Classification::WeakOnly);
        assert_eq!(classify(3, &Beta::Infinity), Classification::WeakOnly);
        assert_eq!(classify(0, &s2), Classification::StabilityLocallyFinite);
    }

    #[test]
    fn twist_moves_parameters() {
        let s = StabilityPoint::slope_stability(1).twisted(-2);
        let StabilityPoint::Geometric(p) = s else { panic!() };
        assert_eq!(p.tau, Complex64::new(-2.0, 1.0));
        let b = StabilityPoint::sigma_beta(half(), Variant::Lower, 1).unwrap().twisted(1);
        let StabilityPoint::Boundary(p) = b else { panic!() };
        assert_eq!(p.beta, Beta::rational(3, 2));
    }

    /// Heart classes on P^1 against explicit sums of line bundles and torsion.
    #[test]
    fn genus_zero_heart_matches_enumeration() {
        use std::collections::HashSet;
        for (beta, variant) in [
            (Beta::rational(1, 2), Variant::Lower),
            (Beta::rational(0, 1), Variant::Lower),
            (Beta::rational(0, 1), Variant::Upper),
            (Beta::rational(-3, 2), Variant::Upper),
        ] {
            let p = StabilityPoint::sigma_beta(beta, variant, 0).unwrap();
            let cut = p.heart_cut();
            // heart pieces: line bundles (1,m) in T, shifted (−1,−m) for F, torsion (0,1)
            let mut gens = vec![c(0, 1)];
            for m in -12..=12 {
                let slope = Slope::Finite(Rational::from_integer(m));
                match p.side(slope) {
                    Side::Torsion => gens.push(c(1, m as i64)),
                    Side::Free => gens.push(c(-1, -(m as i64))),
                    Side::ZeroCharge => {
                        if variant == Variant::Lower {
                            gens.push(c(1, m as i64))
                        } else {
                            gens.push(c(-1, -(m as i64)))
                        }
                    }
                }
            }
            let mut reach: HashSet<NumClass> = gens.iter().copied().collect();
            for _ in 0..5 {
                let snapshot: Vec<_> = reach.iter().copied().collect();
                for a in &snapshot {
                    for g in &gens {
                        let s = *a + *g;
                        if s.r.abs() <= 6 && s.d.abs() <= 30 {
                            reach.insert(s);
                        }
                    }
                }
            }
            for r in -2..=2 {
                for d in -4..=4 {
                    let cls = c(r, d);
                    if cls.is_zero() {
                        continue;
                    }
                    assert_eq!(
                        cut.contains(0, cls),
                        reach.contains(&cls),
                        "{beta} {variant:?} {cls}"
                    );
                }
            }
        }
    }

    #[test]
    fn positive_genus_hearts() {
        let b = StabilityPoint::sigma_beta(Beta::rational(0, 1), Variant::Lower, 1).unwrap();
        let cut = b.heart_cut();
        assert!(cut.contains(1, c(1, 0)));
        assert!(cut.contains(1, c(0, 1)));
        assert!(cut.contains(1, c(-1, 1)));
        assert!(!cut.contains(1, c(-1, 0)));
        let up = StabilityPoint::sigma_beta(Beta::rational(0, 1), Variant::Upper, 1).unwrap();
        let cut = up.heart_cut();
        assert!(!cut.contains(1, c(1, 0)));
        assert!(cut.contains(1, c(-1, 0)));
        let s = StabilityPoint::slope_stability(1);
        assert!(s.heart_cut().contains(1, c(3, -10)));
        assert!(!s.heart_cut().contains(1, c(0, -1)));
        // rotating by 1/2 moves positive-slope sheaves out of the heart
        let s = s.with_lambda(Complex64::new(0.5, 0.0));
        assert!(s.heart_cut().contains(1, c(1, 1)));
        assert!(!s.heart_cut().contains(1, c(1, -1)));
        assert!(s.heart_cut().contains(1, c(-1, 1)));
    }
}
