//! Metric and boundary geometry of the catalog: the slicing distance, the
//! projective mass embedding and global dimension.
//!
//! Every semistable object of a catalog slicing is a shift of a
//! slope-semistable sheaf, so a slicing is determined by the phase it gives
//! each slope direction `μ ∈ ℝ ∪ {∞}` at shift 0. The distance is then
//! `sup_μ |φ1(μ) − φ2(μ)|` over the directions that carry semistable classes:
//! rationals and `∞` in positive genus, integers and `∞` on `ℙ¹`.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::num::{ratio_to_f64, ExactReal, Rational, FLOAT_TOL};
use crate::stability::{Beta, StabilityPoint};

/// A slope direction at which a distance is attained (possibly as a limit).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Direction {
    Finite(f64),
    PosInfinity,
    NegInfinity,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Finite(x) => write!(f, "{x}"),
            Direction::PosInfinity => write!(f, "∞"),
            Direction::NegInfinity => write!(f, "-∞"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Distance {
    pub d: f64,
    pub witness: Direction,
}

/// Where the phase functions are sampled.
#[derive(Clone, Copy, Debug)]
enum Probe {
    At(Rational),
    Near(f64),
    Below(ExactReal),
    Above(ExactReal),
    NegInf,
    PosInf,
    Torsion,
}

impl Probe {
    fn direction(&self) -> Direction {
        match self {
            Probe::At(q) => Direction::Finite(ratio_to_f64(*q)),
            Probe::Near(x) => Direction::Finite(*x),
            Probe::Below(b) | Probe::Above(b) => Direction::Finite(b.to_f64()),
            Probe::NegInf => Direction::NegInfinity,
            Probe::PosInf | Probe::Torsion => Direction::PosInfinity,
        }
    }
}

/// Order of two reals; distinct quadratic fields never meet, so floats decide there.
fn cmp_reals(a: &ExactReal, b: &ExactReal) -> Ordering {
    a.cmp_exact(b)
        .unwrap_or_else(|_| a.to_f64().partial_cmp(&b.to_f64()).unwrap_or(Ordering::Equal))
}

fn probe_phase(sigma: &StabilityPoint, probe: Probe) -> f64 {
    let x = sigma.lambda().re;
    match sigma {
        StabilityPoint::Geometric(p) => {
            let mu = match probe {
                Probe::At(q) => ratio_to_f64(q),
                Probe::Near(v) => v,
                Probe::Below(b) | Probe::Above(b) => b.to_f64(),
                Probe::NegInf => return -x,
                Probe::PosInf | Probe::Torsion => return 1.0 - x,
            };
            p.tau.im.atan2(p.tau.re - mu) / PI - x
        }
        StabilityPoint::Boundary(p) => {
            let zero_level = ratio_to_f64(sigma.slicing_zero_level());
            let level = match p.beta {
                Beta::Infinity => match probe {
                    Probe::Torsion => zero_level,
                    _ => 0.0,
                },
                Beta::Finite(beta) => match probe {
                    Probe::At(q) => match beta.cmp_rational(q) {
                        Ordering::Less => 1.0,
                        Ordering::Greater => 0.0,
                        Ordering::Equal => zero_level,
                    },
                    Probe::Near(v) => {
                        if v > beta.to_f64() {
                            1.0
                        } else {
                            0.0
                        }
                    }
                    Probe::Below(b) => {
                        if cmp_reals(&b, &beta) == Ordering::Greater {
                            1.0
                        } else {
                            0.0
                        }
                    }
                    Probe::Above(b) => {
                        if cmp_reals(&b, &beta) == Ordering::Less {
                            0.0
                        } else {
                            1.0
                        }
                    }
                    Probe::NegInf => 0.0,
                    Probe::PosInf | Probe::Torsion => 1.0,
                },
            };
            level - x
        }
    }
}

/// Real roots of `α1((μ−β2)² + α2²) = α2((μ−β1)² + α1²)`, where the
/// derivatives of the two geometric phase functions agree.
fn critical_slopes(a1: f64, b1: f64, a2: f64, b2: f64) -> Vec<f64> {
    let qa = a1 - a2;
    let qb = -2.0 * (a1 * b2 - a2 * b1);
    let qc = a1 * (b2 * b2 + a2 * a2) - a2 * (b1 * b1 + a1 * a1);
    let scale = qa.abs().max(qb.abs()).max(qc.abs());
    if scale == 0.0 {
        return Vec::new();
    }
    if qa.abs() <= FLOAT_TOL * scale {
        if qb.abs() <= FLOAT_TOL * scale {
            return Vec::new();
        }
        return vec![-qc / qb];
    }
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 {
        return Vec::new();
    }
    let s = disc.sqrt();
    // numerically stable pair of roots
    let t = -0.5 * (qb + qb.signum() * s);
    if t == 0.0 {
        return vec![0.0];
    }
    vec![t / qa, qc / t]
}

fn breakpoint_probes(genus: u32, beta: &ExactReal, out: &mut Vec<Probe>) {
    if genus >= 1 {
        out.push(Probe::Below(*beta));
        out.push(Probe::Above(*beta));
        if let Some(q) = beta.as_rational() {
            out.push(Probe::At(q));
        }
    } else {
        out.push(Probe::At(Rational::from_integer(beta.ceil() - 1)));
        out.push(Probe::At(Rational::from_integer(beta.floor() + 1)));
        if beta.is_integer() {
            out.push(Probe::At(beta.rational_part()));
        }
    }
}

/// `d(P1, P2) = inf{ε ≥ 0 | P2(φ) ⊂ P1([φ−ε, φ+ε])}`, with the direction attaining it.
pub fn slicing_distance(s1: &StabilityPoint, s2: &StabilityPoint) -> Result<Distance> {
    if s1.genus() != s2.genus() {
        return Err(Error::MixedGenus(s1.genus(), s2.genus()));
    }
    let genus = s1.genus();
    let mut probes = vec![Probe::NegInf, Probe::PosInf, Probe::Torsion];
    for s in [s1, s2] {
        if let StabilityPoint::Boundary(p) = s {
            if let Beta::Finite(b) = p.beta {
                breakpoint_probes(genus, &b, &mut probes);
            }
        }
    }
    if let (StabilityPoint::Geometric(p1), StabilityPoint::Geometric(p2)) = (s1, s2) {
        for mu in critical_slopes(p1.tau.im, p1.tau.re, p2.tau.im, p2.tau.re) {
            if !mu.is_finite() {
                continue;
            }
            if genus >= 1 {
                probes.push(Probe::Near(mu));
            } else if mu.abs() < 1e15 {
                probes.push(Probe::At(Rational::from_integer(mu.floor() as i128)));
                probes.push(Probe::At(Rational::from_integer(mu.ceil() as i128)));
            }
        }
    }
    let mut best = Distance {
        d: 0.0,
        witness: Direction::PosInfinity,
    };
    let mut first = true;
    for probe in probes {
        let gap = (probe_phase(s1, probe) - probe_phase(s2, probe)).abs();
        if first || gap > best.d {
            best = Distance {
                d: gap,
                witness: probe.direction(),
            };
            first = false;
        }
    }
    Ok(best)
}

/// The phase of direction `μ` (finite) at shift 0, as used by the distance.
pub fn direction_phase(sigma: &StabilityPoint, mu: f64) -> f64 {
    probe_phase(sigma, Probe::Near(mu))
}

/// A point of `ℙ^S_{≥0}`, normalized with first nonzero coordinate 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjectiveMassPoint {
    coords: [f64; 3],
}

impl ProjectiveMassPoint {
    pub fn new(raw: [f64; 3]) -> Result<Self> {
        if raw.iter().any(|x| !(*x >= 0.0) || !x.is_finite()) {
            return Err(Error::InvalidPoint(format!("masses must be finite and nonnegative: {raw:?}")));
        }
        let lead = raw.iter().copied().find(|x| *x > 0.0).ok_or(Error::ZeroMasses)?;
        Ok(Self {
            coords: raw.map(|x| x / lead),
        })
    }

    pub fn coords(&self) -> [f64; 3] {
        self.coords
    }

    /// Projective equality, coordinatewise on the normalized form.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .all(|(a, b)| (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0))
    }
}

/// `σ ↦ [m_σ(O_x) : m_σ(O_C) : m_σ(O_C(−y))]`.
pub fn pm_embed(sigma: &StabilityPoint) -> Result<ProjectiveMassPoint> {
    let ctx = sigma.ctx();
    let classes = [
        ctx.skyscraper(),
        ctx.structure_sheaf(),
        ctx.structure_sheaf_minus_point(),
    ];
    let mut masses = [0.0; 3];
    for (m, c) in masses.iter_mut().zip(classes) {
        *m = sigma.mass_of_class(c)?;
    }
    ProjectiveMassPoint::new(masses)
}

/// `α → 0` limit of the genus-1 embedding along `σ_{α,β}`: `[1 : |β| : |β+1|]`.
pub fn pm_boundary_limit(beta: &ExactReal, genus: u32) -> Result<ProjectiveMassPoint> {
    pm_boundary_limit_f64(beta.to_f64(), genus)
}

pub fn pm_boundary_limit_f64(beta: f64, genus: u32) -> Result<ProjectiveMassPoint> {
    if genus != 1 {
        return Err(Error::GenusNotOne(genus));
    }
    ProjectiveMassPoint::new([1.0, beta.abs(), (beta + 1.0).abs()])
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GlobalDimension {
    Exact(f64),
    /// `lower ≤ gldim < upper`.
    Bracket { lower: f64, upper: f64 },
}

pub fn gldim(sigma: &StabilityPoint) -> Result<GlobalDimension> {
    let g = sigma.genus();
    if g == 0 {
        return Err(Error::GenusZero);
    }
    match sigma {
        StabilityPoint::Boundary(_) => Ok(GlobalDimension::Exact(if g == 1 { 1.0 } else { 2.0 })),
        StabilityPoint::Geometric(_) if g == 1 => Ok(GlobalDimension::Exact(1.0)),
        StabilityPoint::Geometric(_) => {
            let ctx = sigma.ctx();
            let omega = sigma.phase(0, ctx.canonical_bundle())?.value;
            let o = sigma.phase(0, ctx.structure_sheaf())?.value;
            Ok(GlobalDimension::Bracket {
                lower: (1.0 + omega - o).max(1.0),
                upper: 2.0,
            })
        }
    }
}

/// `start:end:step`, inclusive of `end` up to rounding.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleRange {
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl SampleRange {
    pub fn values(&self) -> Vec<f64> {
        let count = ((self.end - self.start) / self.step + 1e-9).floor() as i64;
        (0..=count.max(-1)).map(|i| self.start + i as f64 * self.step).collect()
    }
}

impl FromStr for SampleRange {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::Parse(format!("expected start:end:step, got '{s}'"));
        let [a, b, c] = parts.as_slice() else {
            return Err(bad());
        };
        let parse = |x: &str| x.trim().parse::<f64>().map_err(|_| bad());
        let r = SampleRange {
            start: parse(a)?,
            end: parse(b)?,
            step: parse(c)?,
        };
        if !(r.step > 0.0) || !r.start.is_finite() || !r.end.is_finite() {
            return Err(bad());
        }
        Ok(r)
    }
}

/// CSV rows `beta,alpha,m0,m1,m2` of the normalized mass embedding over a
/// `(β, α)` grid; `α = 0` rows use the boundary limit.
pub fn sample_disk_csv(genus: u32, beta: SampleRange, alpha: SampleRange) -> Result<String> {
    let mut out = String::from("beta,alpha,m0,m1,m2\n");
    for b in beta.values() {
        for a in alpha.values() {
            let p = if a == 0.0 {
                pm_boundary_limit_f64(b, genus)?
            } else {
                if a < 0.0 {
                    return Err(Error::InvalidPoint(format!("alpha must be nonnegative, got {a}")));
                }
                pm_embed(&StabilityPoint::sigma_alpha_beta(a, b, genus)?)?
            };
            let [m0, m1, m2] = p.coords();
            out.push_str(&format!("{b},{a},{m0},{m1},{m2}\n"));
        }
    }
    Ok(out)
}
