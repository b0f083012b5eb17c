//! The universal cover `G̃L⁺(2,ℝ)` and its action on stability points.
//!
//! A group element is a pair `(A, f)` with `A ∈ GL⁺(2,ℝ)` acting on
//! `ℂ = ℝ²` by column vectors and `f: ℝ → ℝ` the increasing lift with
//! `A·e^{iπφ} ∈ ℝ_{>0}·e^{iπ f(φ)}`. The lift is stored as an integer
//! winding `n`, with `f(0) = θ(A) + 2n` and `θ(A) ∈ (−1, 1]` the principal
//! branch of `arg(A·1)/π`.
//!
//! Central charges are recorded as [`CentralChargeMatrix`] with rows
//! `Z(1,0)` and `Z(0,1)`. The action `(P, Z).(A, f) = (P∘f, A^{-1}∘Z)`
//! becomes `M ↦ M·(A^{-1})ᵀ` on that matrix.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::num::{ratio_to_f64, NumClass, Rational};
use crate::objects::FormalObject;
use crate::stability::{exp_i_pi, StabilityPoint};

pub type Matrix = [[f64; 2]; 2];
pub type ExactMatrix = [[Rational; 2]; 2];

const AMBIGUITY_TOL: f64 = 1e-9;

fn det(m: &Matrix) -> f64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = [[0.0; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn inverse(m: &Matrix) -> Matrix {
    let d = det(m);
    [[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]]
}

fn transpose(m: &Matrix) -> Matrix {
    [[m[0][0], m[1][0]], [m[0][1], m[1][1]]]
}

fn exact_mul(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let mut out = [[Rational::zero(); 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn exact_det(m: &ExactMatrix) -> Rational {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

fn exact_inverse(m: &ExactMatrix) -> ExactMatrix {
    let d = exact_det(m);
    [[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]]
}

fn exact_to_f64(m: &ExactMatrix) -> Matrix {
    [
        [ratio_to_f64(m[0][0]), ratio_to_f64(m[0][1])],
        [ratio_to_f64(m[1][0]), ratio_to_f64(m[1][1])],
    ]
}

fn apply(m: &Matrix, v: (f64, f64)) -> (f64, f64) {
    (m[0][0] * v.0 + m[0][1] * v.1, m[1][0] * v.0 + m[1][1] * v.1)
}

/// `arg/π` in `(−1, 1]`, treating a signed zero imaginary part as `+0`.
fn half_turns(v: (f64, f64)) -> f64 {
    (v.1 + 0.0).atan2(v.0) / PI
}

/// Counter-clockwise angle in half turns from `A·1` to `A·e^{iπr}`, `r ∈ [0,1)`.
fn swept(m: &Matrix, r: f64, compensated: bool) -> f64 {
    if r == 0.0 {
        return 0.0;
    }
    let (s, c) = (PI * r).sin_cos();
    let u = (m[0][0], m[1][0]);
    let v = if compensated {
        (m[0][0].mul_add(c, m[0][1] * s), m[1][0].mul_add(c, m[1][1] * s))
    } else {
        apply(m, (c, s))
    };
    let cross = if compensated {
        u.0.mul_add(v.1, -(u.1 * v.0))
    } else {
        u.0 * v.1 - u.1 * v.0
    };
    let dot = u.0 * v.0 + u.1 * v.1;
    let mut ang = cross.atan2(dot);
    if ang < -PI / 2.0 {
        ang += 2.0 * PI;
    } else if ang < 0.0 {
        ang = 0.0;
    }
    ang / PI
}

/// An element of the universal cover of `GL⁺(2,ℝ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroupElement {
    m: Matrix,
    exact: Option<ExactMatrix>,
    winding: i64,
}

impl GroupElement {
    pub fn identity() -> Self {
        let one = Rational::from_integer(1);
        let zero = Rational::zero();
        Self::from_exact([[one, zero], [zero, one]], 0).expect("identity")
    }

    /// `M` with lift `f(0) = θ(M) + 2·winding`.
    pub fn new(m: Matrix, winding: i64) -> Result<Self> {
        let d = det(&m);
        if !(d > 0.0) || !d.is_finite() {
            return Err(Error::DegenerateMatrix(d));
        }
        Ok(Self {
            m,
            exact: None,
            winding,
        })
    }

    pub fn from_exact(m: ExactMatrix, winding: i64) -> Result<Self> {
        let d = exact_det(&m);
        if !d.is_positive() {
            return Err(Error::DegenerateMatrix(ratio_to_f64(d)));
        }
        Ok(Self {
            m: exact_to_f64(&m),
            exact: Some(m),
            winding,
        })
    }

    pub fn diag(a: Rational, b: Rational) -> Result<Self> {
        Self::from_exact([[a, Rational::zero()], [Rational::zero(), b]], 0)
    }

    /// The lift of `m` whose function sends `phi` to `value`.
    pub fn from_matrix_through(m: Matrix, phi: f64, value: f64) -> Result<Self> {
        Self::lift_through(Self::new(m, 0)?, phi, value)
    }

    fn lift_through(base: Self, phi: f64, value: f64) -> Result<Self> {
        let mut offset = (value - base.eval_with(phi, false)) / 2.0;
        if (offset - offset.round()).abs() > 0.25 {
            // retry with fused products before declaring ambiguity
            offset = (value - base.eval_with(phi, true)) / 2.0;
        }
        let n = offset.round();
        if (offset - n).abs() > 0.5 - AMBIGUITY_TOL {
            return Err(Error::WindingAmbiguous(offset - n));
        }
        Ok(Self {
            winding: base.winding + n as i64,
            ..base
        })
    }

    /// The image of `ℂ ⊂ G̃`: `λ ↦ (e^{iπλ}, φ ↦ φ + Re λ)`.
    pub fn embed_c(lambda: Complex64) -> Self {
        let w = exp_i_pi(lambda);
        let twice = 2.0 * lambda.re;
        let exact = (lambda.im == 0.0 && twice.fract() == 0.0 && twice.abs() < 1e15).then(|| {
            let (u, v) = match (twice as i64).rem_euclid(4) {
                0 => (1, 0),
                1 => (0, 1),
                2 => (-1, 0),
                _ => (0, -1),
            };
            let q = |x: i128| Rational::from_integer(x);
            [[q(u), q(-v)], [q(v), q(u)]]
        });
        let base = match exact {
            Some(e) => Self::from_exact(e, 0),
            None => Self::new([[w.re, -w.im], [w.im, w.re]], 0),
        }
        .expect("rotation-scaling has positive determinant");
        let theta = base.theta();
        let n = ((lambda.re - theta) / 2.0).round() as i64;
        Self { winding: n, ..base }
    }

    pub fn matrix(&self) -> Matrix {
        self.m
    }

    pub fn exact_matrix(&self) -> Option<ExactMatrix> {
        self.exact
    }

    pub fn winding(&self) -> i64 {
        self.winding
    }

    /// `θ(M) ∈ (−1, 1]`.
    pub fn theta(&self) -> f64 {
        half_turns((self.m[0][0], self.m[1][0]))
    }

    pub fn f0(&self) -> f64 {
        self.theta() + 2.0 * self.winding as f64
    }

    fn eval_with(&self, phi: f64, compensated: bool) -> f64 {
        let k = phi.floor();
        let r = phi - k;
        k + self.f0() + swept(&self.m, r, compensated)
    }

    pub fn f_eval(&self, phi: f64) -> f64 {
        self.eval_with(phi, false)
    }

    pub fn f_inv_eval(&self, phi: f64) -> Result<f64> {
        Ok(self.invert()?.f_eval(phi))
    }

    /// `(M1 M2, f1 ∘ f2)`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let base = match (self.exact, other.exact) {
            (Some(a), Some(b)) => Self::from_exact(exact_mul(&a, &b), 0)?,
            _ => Self::new(mul(&self.m, &other.m), 0)?,
        };
        let target = self.f_eval(other.f_eval(0.0));
        Self::lift_through(base, 0.0, target)
    }

    pub fn invert(&self) -> Result<Self> {
        let base = match self.exact {
            Some(e) => Self::from_exact(exact_inverse(&e), 0)?,
            None => Self::new(inverse(&self.m), 0)?,
        };
        Self::lift_through(base, self.f0(), 0.0)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.winding == other.winding
            && (0..2).all(|i| (0..2).all(|j| (self.m[i][j] - other.m[i][j]).abs() <= tol))
    }
}

/// Rows `(Re Z(1,0), Im Z(1,0))` and `(Re Z(0,1), Im Z(0,1))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CentralChargeMatrix(pub Matrix);

impl CentralChargeMatrix {
    pub fn of(sigma: &StabilityPoint) -> Self {
        Self::from_charges(
            sigma.central_charge(NumClass::new(1, 0)),
            sigma.central_charge(NumClass::new(0, 1)),
        )
    }

    pub fn from_charges(z1: Complex64, z2: Complex64) -> Self {
        CentralChargeMatrix([[z1.re, z1.im], [z2.re, z2.im]])
    }

    pub fn charges(&self) -> (Complex64, Complex64) {
        let m = &self.0;
        (Complex64::new(m[0][0], m[0][1]), Complex64::new(m[1][0], m[1][1]))
    }

    pub fn det(&self) -> f64 {
        det(&self.0)
    }

    /// `A^{-1} ∘ Z` in row form: `M · (A^{-1})ᵀ`.
    pub fn acted(&self, g: &GroupElement) -> Self {
        CentralChargeMatrix(mul(&self.0, &transpose(&inverse(&g.m))))
    }
}

/// A point of `ℂ^× × ℍ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Chart {
    pub c: Complex64,
    pub w: Complex64,
}

/// `[[x1,x2],[x3,x4]] ↦ (1/(x4 + x3 i), (x1 − x2 i)/(x3 − x4 i))`.
pub fn chart_fwd(m: &Matrix) -> Result<Chart> {
    let d = det(m);
    if !(d > 0.0) {
        return Err(Error::ChartDomain(format!("determinant {d} is not positive")));
    }
    let [[x1, x2], [x3, x4]] = *m;
    let c = Complex64::new(x4, x3).inv();
    let w = Complex64::new(x1, -x2) / Complex64::new(x3, -x4);
    debug_assert!(w.im > 0.0);
    Ok(Chart { c, w })
}

pub fn chart_inv(chart: &Chart) -> Result<Matrix> {
    if chart.c.norm() == 0.0 || !chart.c.re.is_finite() || !chart.c.im.is_finite() {
        return Err(Error::ChartDomain("c must be a nonzero finite complex number".into()));
    }
    if !(chart.w.im > 0.0) {
        return Err(Error::ChartDomain(format!("Im w must be positive, got {}", chart.w.im)));
    }
    let p = chart.c.inv();
    let (x4, x3) = (p.re, p.im);
    let q = chart.w * Complex64::new(x3, -x4);
    let (x1, x2) = (q.re, -q.im);
    Ok([[x1, x2], [x3, x4]])
}

/// The geometric point with charges `Z(1,0) = z1`, `Z(0,1) = z2` whose
/// skyscraper sheaf sits at phase `sky_phase`.
pub fn from_central_charge(
    z1: Complex64,
    z2: Complex64,
    sky_phase: f64,
    genus: u32,
) -> Result<StabilityPoint> {
    let d = CentralChargeMatrix::from_charges(z1, z2).det();
    if !(d > 0.0) || !d.is_finite() {
        return Err(Error::DegenerateMatrix(d));
    }
    let w = -z2;
    let theta = half_turns((w.re, w.im));
    let im = w.norm().ln() / PI;
    // Re λ ≡ −θ (mod 2) and the skyscraper phase is 1 − Re λ
    let offset = (1.0 - sky_phase + theta) / 2.0;
    let k = offset.round();
    let residual = offset - k;
    if residual.abs() > 1e-6 {
        return Err(Error::HintInconsistent {
            hint: sky_phase,
            residual,
        });
    }
    let re = -theta + 2.0 * k;
    let tau = -z1 / z2;
    StabilityPoint::geometric(Complex64::new(re + 0.0, im + 0.0), tau, genus)
}

/// `σ.g`: new charge `A^{-1}∘Z` and slicing `P'(φ) = P(f(φ))`.
pub fn act(sigma: &StabilityPoint, g: &GroupElement) -> Result<StabilityPoint> {
    if sigma.is_boundary() {
        return Err(Error::BoundaryGroupAction);
    }
    let (z1, z2) = CentralChargeMatrix::of(sigma).acted(g).charges();
    let old_sky = 1.0 - sigma.lambda().re;
    let new_sky = g.f_inv_eval(old_sky)?;
    from_central_charge(z1, z2, new_sky, sigma.genus())
}

/// `σ.λ`: `Z ↦ e^{−iπλ}Z`, phases drop by `Re λ`.
pub fn act_c(sigma: &StabilityPoint, lambda: Complex64) -> StabilityPoint {
    sigma.with_lambda(sigma.lambda() + lambda)
}

/// The unique `g` with `act(σ1, g) = σ2`.
pub fn solve_transitive(s1: &StabilityPoint, s2: &StabilityPoint) -> Result<GroupElement> {
    if s1.genus() != s2.genus() {
        return Err(Error::MixedGenus(s1.genus(), s2.genus()));
    }
    if s1.is_boundary() || s2.is_boundary() {
        return Err(Error::BoundaryGroupAction);
    }
    if s1 == s2 {
        return Ok(GroupElement::identity());
    }
    let m1 = CentralChargeMatrix::of(s1).0;
    let m2 = CentralChargeMatrix::of(s2).0;
    let a = transpose(&mul(&inverse(&m2), &m1));
    // the skyscraper of σ2 at phase 1 − Re λ2 sits at 1 − Re λ1 in σ1
    GroupElement::from_matrix_through(a, 1.0 - s2.lambda().re, 1.0 - s1.lambda().re)
}

/// Tensoring by a line bundle of classical degree `e`.
pub trait TensorAction {
    fn tensor(&self, e: i64) -> Self;
}

impl TensorAction for NumClass {
    fn tensor(&self, e: i64) -> Self {
        self.twist(e)
    }
}

impl TensorAction for FormalObject {
    fn tensor(&self, e: i64) -> Self {
        self.twisted(e)
    }
}

impl TensorAction for StabilityPoint {
    fn tensor(&self, e: i64) -> Self {
        self.twisted(e)
    }
}

pub fn act_tensor<T: TensorAction>(x: &T, e: i64) -> T {
    x.tensor(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stability::{Beta, Variant};

    fn q(p: i128, r: i128) -> Rational {
        Rational::new(p, r)
    }

    fn geo(lre: f64, lim: f64, tre: f64, tim: f64) -> StabilityPoint {
        StabilityPoint::geometric(Complex64::new(lre, lim), Complex64::new(tre, tim), 1).unwrap()
    }

    fn minus_identity() -> GroupElement {
        GroupElement::embed_c(Complex64::new(1.0, 0.0))
    }

    #[test]
    fn f_eval_examples() {
        let id = GroupElement::identity();
        assert!((id.f_eval(0.37) - 0.37).abs() < 1e-15);
        let m = minus_identity();
        assert_eq!(m.exact_matrix().unwrap()[0][0], q(-1, 1));
        assert_eq!(m.f_eval(0.0), 1.0);
        let d = GroupElement::diag(q(1, 1), q(2, 1)).unwrap();
        assert!((d.f_eval(0.5) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn f_is_periodic_and_increasing() {
        let g = GroupElement::new([[1.3, -0.4], [2.1, 0.7]], -1).unwrap();
        let mut prev = f64::NEG_INFINITY;
        for i in -300..300 {
            let phi = i as f64 / 97.0;
            let v = g.f_eval(phi);
            assert!((g.f_eval(phi + 1.0) - v - 1.0).abs() < 1e-12);
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn compose_examples() {
        let m = minus_identity();
        let mm = m.compose(&m).unwrap();
        assert_eq!(mm.exact_matrix(), GroupElement::identity().exact_matrix());
        assert_eq!(mm.winding(), 1);
        assert_eq!(mm.f_eval(0.25), 2.25);
        let a = GroupElement::diag(q(1, 1), q(1, 2)).unwrap();
        let b = GroupElement::diag(q(1, 1), q(2, 1)).unwrap();
        assert_eq!(a.compose(&b).unwrap(), GroupElement::identity());
        let g = GroupElement::new([[0.3, 1.0], [-2.0, 0.4]], 3).unwrap();
        assert_eq!(GroupElement::identity().compose(&g).unwrap().winding(), 3);
    }

    #[test]
    fn inverse_cancels_winding() {
        for w in -3..=3 {
            let g = GroupElement::new([[0.3, 1.0], [-2.0, 0.4]], w).unwrap();
            let e = g.compose(&g.invert().unwrap()).unwrap();
            assert!(e.approx_eq(&GroupElement::identity(), 1e-12));
            let e = g.invert().unwrap().compose(&g).unwrap();
            assert!(e.approx_eq(&GroupElement::identity(), 1e-12));
        }
        let g = GroupElement::from_exact([[q(2, 1), q(1, 3)], [q(-1, 1), q(5, 7)]], 2).unwrap();
        let e = g.compose(&g.invert().unwrap()).unwrap();
        assert_eq!(e, GroupElement::identity());
    }

    #[test]
    fn embed_c_is_a_homomorphism() {
        let samples = [0.0, 0.5, 1.0, -1.0, 1.5, 0.3, -2.7, 3.9];
        for &a in &samples {
            for &b in &samples {
                let la = Complex64::new(a, 0.2);
                let lb = Complex64::new(b, -0.1);
                let lhs = GroupElement::embed_c(la + lb);
                let rhs = GroupElement::embed_c(la).compose(&GroupElement::embed_c(lb)).unwrap();
                assert!(lhs.approx_eq(&rhs, 1e-12), "{a} {b}");
                assert!((lhs.f0() - (a + b)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn degenerate_matrices_rejected() {
        assert!(GroupElement::new([[1.0, 0.0], [0.0, -1.0]], 0).is_err());
        assert!(GroupElement::new([[1.0, 2.0], [2.0, 4.0]], 0).is_err());
    }

    #[test]
    fn row_convention_matches_geometric_point() {
        let s = StabilityPoint::sigma_alpha_beta(1.5, -0.25, 1).unwrap();
        let m = CentralChargeMatrix::of(&s).0;
        assert_eq!(m, [[-0.25, 1.5], [-1.0, 0.0]]);
    }

    #[test]
    fn act_examples() {
        let s = geo(0.0, 0.0, 0.0, 1.0);
        assert_eq!(act(&s, &GroupElement::identity()).unwrap(), s);
        let d = GroupElement::diag(q(1, 1), q(1, 2)).unwrap();
        let t = act(&s, &d).unwrap();
        assert_eq!(t, geo(0.0, 0.0, 0.0, 2.0));
        let one = act(&s, &minus_identity()).unwrap();
        assert_eq!(one, geo(1.0, 0.0, 0.0, 1.0));
        let c = NumClass::new(1, 0);
        assert!((one.phase(0, c).unwrap().value - (s.phase(0, c).unwrap().value - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn act_on_boundary_is_refused() {
        let b = StabilityPoint::sigma_beta(Beta::rational(1, 2), Variant::Lower, 1).unwrap();
        assert_eq!(act(&b, &GroupElement::identity()), Err(Error::BoundaryGroupAction));
        let moved = act_c(&b, Complex64::new(0.3, 0.0));
        let p = moved.phase(0, NumClass::new(1, 1)).unwrap();
        assert!((p.value - 0.7).abs() < 1e-15);
    }

    #[test]
    fn act_c_negates_charge() {
        let s = geo(0.0, 0.0, 0.0, 1.0);
        let t = act_c(&s, Complex64::new(1.0, 0.0));
        let c = NumClass::new(2, 1);
        assert_eq!(t.central_charge(c), -s.central_charge(c));
        assert_eq!(act_c(&s, Complex64::new(0.0, 0.0)), s);
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(act_tensor(&NumClass::new(1, 0), 1), NumClass::new(1, 1));
        let s = act_tensor(&geo(0.0, 0.0, 0.0, 1.0), -2);
        assert_eq!(s, geo(0.0, 0.0, -2.0, 1.0));
    }

    #[test]
    fn chart_examples() {
        let id = chart_fwd(&[[1.0, 0.0], [0.0, 1.0]]).unwrap();
        assert!((id.c - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((id.w - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        let (alpha, beta) = (0.8, -1.25);
        let m = [[beta, alpha], [-1.0, 0.0]];
        let ch = chart_fwd(&m).unwrap();
        assert!((ch.c - Complex64::i()).norm() < 1e-15);
        assert!((ch.w - Complex64::new(-beta, alpha)).norm() < 1e-15);
        let back = chart_inv(&Chart {
            c: Complex64::i(),
            w: Complex64::i(),
        })
        .unwrap();
        assert_eq!(back, [[0.0, 1.0], [-1.0, 0.0]]);
        assert_eq!(
            chart_inv(&Chart {
                c: Complex64::new(1.0, 0.0),
                w: Complex64::i()
            })
            .unwrap(),
            [[1.0, 0.0], [0.0, 1.0]]
        );
        assert!(chart_fwd(&[[0.0, 1.0], [1.0, 0.0]]).is_err());
        assert!(chart_inv(&Chart {
            c: Complex64::new(0.0, 0.0),
            w: Complex64::i()
        })
        .is_err());
    }

    #[test]
    fn from_central_charge_examples() {
        let i = Complex64::i();
        let one = Complex64::new(1.0, 0.0);
        assert_eq!(from_central_charge(i, -one, 1.0, 1).unwrap(), geo(0.0, 0.0, 0.0, 1.0));
        assert_eq!(from_central_charge(-i, one, 0.0, 1).unwrap(), geo(1.0, 0.0, 0.0, 1.0));
        assert_eq!(from_central_charge(2.0 * i, -one, 1.0, 1).unwrap(), geo(0.0, 0.0, 0.0, 2.0));
        assert!(matches!(
            from_central_charge(i, -one, 0.0, 1),
            Err(Error::HintInconsistent { .. })
        ));
        assert!(from_central_charge(-i, -one, 1.0, 1).is_err());
    }

    #[test]
    fn solve_examples() {
        let s = geo(0.0, 0.0, 0.0, 1.0);
        assert_eq!(solve_transitive(&s, &s).unwrap(), GroupElement::identity());
        let g = solve_transitive(&s, &geo(0.0, 0.0, 0.0, 2.0)).unwrap();
        let d = GroupElement::diag(q(1, 1), q(1, 2)).unwrap();
        assert!(g.approx_eq(&d, 1e-15));
        let g = solve_transitive(&s, &geo(1.0, 0.0, 0.0, 1.0)).unwrap();
        assert!(g.approx_eq(&minus_identity(), 1e-15));
        assert!((g.f0() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn solve_then_act_round_trips() {
        let s1 = geo(0.4, -0.2, 1.5, 0.3);
        let s2 = geo(-3.7, 0.9, -2.0, 4.0);
        let g = solve_transitive(&s1, &s2).unwrap();
        let got = act(&s1, &g).unwrap();
        let (StabilityPoint::Geometric(a), StabilityPoint::Geometric(b)) = (got, s2) else {
            panic!()
        };
        assert!((a.lambda - b.lambda).norm() < 1e-10);
        assert!((a.tau - b.tau).norm() < 1e-10);
    }
}
