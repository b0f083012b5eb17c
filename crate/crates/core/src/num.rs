//! Exact scalars and numerical classes.
//!
//! [`ExactReal`] holds numbers of the form `a + b·√n` with rational `a`, `b`
//! and squarefree `n`. Every order decision in the crate (slope against a
//! torsion-pair threshold, rationality of a boundary parameter) is made on
//! these values; floats only enter when a transcendental function is needed.
//!
//! Degrees follow the Euler-characteristic convention: on a curve of genus
//! `g` the structure sheaf has class `(1, 1-g)` and a skyscraper `(0, 1)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

/// Global tolerance for comparisons of transcendental (binary64) quantities.
pub const FLOAT_TOL: f64 = 1e-12;

/// `a + b·√n`, kept normalized: `n` squarefree, `n == 0` exactly when `b == 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExactReal {
    a: Rational,
    b: Rational,
    n: i128,
}

fn squarefree_split(n: i128) -> (i128, i128) {
    // n = k^2 * m with m squarefree
    let mut k = 1i128;
    let mut m = n;
    let mut p = 2i128;
    while p * p <= m {
        while m % (p * p) == 0 {
            m /= p * p;
            k *= p;
        }
        p += 1;
    }
    (k, m)
}

impl ExactReal {
    pub fn new(a: Rational, b: Rational, n: i128) -> Result<Self> {
        if n < 0 {
            return Err(Error::NegativeRadicand(n));
        }
        if b.is_zero() || n == 0 {
            return Ok(Self::from_rational(a));
        }
        let (k, m) = squarefree_split(n);
        let b = b * Rational::from_integer(k);
        if m == 1 {
            return Ok(Self::from_rational(a + b));
        }
        Ok(Self { a, b, n: m })
    }

    pub fn from_rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            n: 0,
        }
    }

    pub fn from_integer(a: i128) -> Self {
        Self::from_rational(Rational::from_integer(a))
    }

    pub fn ratio(p: i128, q: i128) -> Self {
        Self::from_rational(Rational::new(p, q))
    }

    /// `√n`.
    pub fn sqrt(n: i128) -> Result<Self> {
        Self::new(Rational::zero(), Rational::from_integer(1), n)
    }

    pub fn rational_part(&self) -> Rational {
        self.a
    }

    pub fn surd_coefficient(&self) -> Rational {
        self.b
    }

    pub fn radicand(&self) -> i128 {
        self.n
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then_some(self.a)
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.a.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn common_radicand(&self, other: &Self) -> Result<i128> {
        match (self.n, other.n) {
            (0, m) | (m, 0) => Ok(m),
            (m, k) if m == k => Ok(m),
            (m, k) => Err(Error::MixedExtension(m, k)),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let n = self.common_radicand(other)?;
        Self::new(self.a + other.a, self.b + other.b, n)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-*other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let n = self.common_radicand(other)?;
        let a = self.a * other.a + self.b * other.b * Rational::from_integer(n);
        let b = self.a * other.b + self.b * other.a;
        Self::new(a, b, n)
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        let zero = Rational::zero();
        let sa = self.a.cmp(&zero);
        let sb = self.b.cmp(&zero);
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == sb || sa == Ordering::Equal {
            return sb;
        }
        // opposite signs: compare a^2 with b^2 n; never equal since n is not a square
        let lhs = self.a * self.a;
        let rhs = self.b * self.b * Rational::from_integer(self.n);
        if lhs > rhs {
            sa
        } else {
            sb
        }
    }

    pub fn cmp_exact(&self, other: &Self) -> Result<Ordering> {
        Ok(self.checked_sub(other)?.signum())
    }

    pub fn cmp_rational(&self, q: Rational) -> Ordering {
        (*self - q).signum()
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -*self
        } else {
            *self
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = ratio_to_f64(self.a);
        if self.b.is_zero() {
            return a;
        }
        a + ratio_to_f64(self.b) * (self.n as f64).sqrt()
    }

    /// Largest integer `k` with `k <= self`.
    pub fn floor(&self) -> i128 {
        if let Some(q) = self.as_rational() {
            return q.floor().to_integer();
        }
        let mut k = self.to_f64().floor() as i128;
        while self.cmp_rational(Rational::from_integer(k)) == Ordering::Less {
            k -= 1;
        }
        while self.cmp_rational(Rational::from_integer(k + 1)) != Ordering::Less {
            k += 1;
        }
        k
    }

    /// Smallest integer `k` with `k >= self`.
    pub fn ceil(&self) -> i128 {
        -(-*self).floor()
    }
}

pub(crate) fn ratio_to_f64(q: Rational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

impl Neg for ExactReal {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
            n: self.n,
        }
    }
}

impl Add<Rational> for ExactReal {
    type Output = Self;
    fn add(self, q: Rational) -> Self {
        Self { a: self.a + q, ..self }
    }
}

impl Sub<Rational> for ExactReal {
    type Output = Self;
    fn sub(self, q: Rational) -> Self {
        Self { a: self.a - q, ..self }
    }
}

impl Mul<Rational> for ExactReal {
    type Output = Self;
    fn mul(self, q: Rational) -> Self {
        if q.is_zero() {
            return Self::from_rational(q);
        }
        Self {
            a: self.a * q,
            b: self.b * q,
            n: self.n,
        }
    }
}

impl From<Rational> for ExactReal {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for ExactReal {
    fn from(k: i64) -> Self {
        Self::from_integer(k as i128)
    }
}

fn fmt_ratio(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for ExactReal {
    /// Same syntax the parser accepts: `p/q`, `p/q+r/s*sqrt:n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_ratio(&self.a));
        }
        let coef = |b: &Rational| -> String {
            if *b == Rational::from_integer(1) {
                String::new()
            } else {
                format!("{}*", fmt_ratio(b))
            }
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{}sqrt:{}", coef(&-self.b), self.n)
            } else {
                write!(f, "{}sqrt:{}", coef(&self.b), self.n)
            }
        } else if self.b.is_negative() {
            write!(f, "{}-{}sqrt:{}", fmt_ratio(&self.a), coef(&-self.b), self.n)
        } else {
            write!(f, "{}+{}sqrt:{}", fmt_ratio(&self.a), coef(&self.b), self.n)
        }
    }
}

/// Parses `p`, `p/q`, or a terminating decimal such as `-0.25`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational '{s}'"));
    if let Some((p, q)) = s.split_once('/') {
        let p: i128 = p.trim().parse().map_err(|_| bad())?;
        let q: i128 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) || frac.len() > 30 {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_val: i128 = match int.trim_start_matches(['-', '+']) {
            "" => 0,
            digits => digits.parse().map_err(|_| bad())?,
        };
        let denom = 10i128.pow(frac.len() as u32);
        let frac_val: i128 = frac.parse().map_err(|_| bad())?;
        let mag = Rational::new(int_val * denom + frac_val, denom);
        return Ok(if negative { -mag } else { mag });
    }
    s.parse::<i128>()
        .map(Rational::from_integer)
        .map_err(|_| bad())
}

impl FromStr for ExactReal {
    type Err = Error;

    /// Accepts sums of terms `p/q` and `[p/q*]sqrt:n`, e.g. `1/2-3*sqrt:5`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty number".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'*' | b'/' | b':') {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);

        let mut acc = ExactReal::from_integer(0);
        for term in terms {
            let (sign, body) = match term.as_bytes()[0] {
                b'-' => (-1, &term[1..]),
                b'+' => (1, &term[1..]),
                _ => (1, term),
            };
            let value = if let Some(pos) = body.find("sqrt:") {
                let coef = match &body[..pos] {
                    "" => Rational::from_integer(1),
                    c => parse_rational(c.strip_suffix('*').unwrap_or(c))?,
                };
                let n: i128 = body[pos + 5..]
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid radicand in '{term}'")))?;
                ExactReal::new(Rational::zero(), coef, n)?
            } else {
                ExactReal::from_rational(parse_rational(body)?)
            };
            let value = if sign < 0 { -value } else { value };
            acc = acc.checked_add(&value)?;
        }
        Ok(acc)
    }
}

/// Slope of a class: `d/r`, or `∞` for torsion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slope {
    Finite(Rational),
    Infinite,
}

impl Slope {
    pub fn to_f64(&self) -> f64 {
        match self {
            Slope::Finite(q) => ratio_to_f64(*q),
            Slope::Infinite => f64::INFINITY,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(q) => write!(f, "{}", fmt_ratio(q)),
            Slope::Infinite => write!(f, "∞"),
        }
    }
}

/// A class `(rank, degree)` in the numerical Grothendieck lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NumClass {
    pub r: i64,
    pub d: i64,
}

impl NumClass {
    pub const fn new(r: i64, d: i64) -> Self {
        Self { r, d }
    }

    pub fn is_zero(&self) -> bool {
        self.r == 0 && self.d == 0
    }

    pub fn slope(&self) -> Result<Slope> {
        slope(*self)
    }

    /// Tensoring by a line bundle of classical degree `e`.
    pub fn twist(&self, e: i64) -> Self {
        Self::new(self.r, self.d + e * self.r)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(k * self.r, k * self.d)
    }
}

impl Add for NumClass {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.r + o.r, self.d + o.d)
    }
}

impl Sub for NumClass {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.r - o.r, self.d - o.d)
    }
}

impl Neg for NumClass {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.r, -self.d)
    }
}

impl std::iter::Sum for NumClass {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(NumClass::new(0, 0), Add::add)
    }
}

impl fmt::Display for NumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.d)
    }
}

/// The ambient curve; only the genus matters numerically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveContext {
    pub genus: u32,
}

impl CurveContext {
    pub const fn new(genus: u32) -> Self {
        Self { genus }
    }

    pub fn structure_sheaf(&self) -> NumClass {
        NumClass::new(1, 1 - self.genus as i64)
    }

    /// `O_C(-y)` for a point `y`.
    pub fn structure_sheaf_minus_point(&self) -> NumClass {
        NumClass::new(1, -(self.genus as i64))
    }

    pub fn canonical_bundle(&self) -> NumClass {
        NumClass::new(1, self.genus as i64 - 1)
    }

    pub fn skyscraper(&self) -> NumClass {
        NumClass::new(0, 1)
    }

    pub fn is_semistable_class(&self, c: NumClass) -> Result<bool> {
        is_semistable_class(self.genus, c)
    }

    pub fn euler_form(&self, c1: NumClass, c2: NumClass) -> i64 {
        euler_form(self.genus, c1, c2)
    }
}

/// Whether some slope-semistable sheaf has class `c`.
///
/// In positive genus every positive rank and every positive-length torsion
/// class is realized. On `P^1` semistable bundles are `O(n)^k`, whose class is
/// `(k, k(n+1))`, so the rank must divide the degree.
pub fn is_semistable_class(genus: u32, c: NumClass) -> Result<bool> {
    if c.is_zero() {
        return Err(Error::ZeroClass);
    }
    let torsion = c.r == 0 && c.d > 0;
    Ok(if genus >= 1 {
        torsion || c.r > 0
    } else {
        torsion || (c.r > 0 && c.d.is_multiple_of(&c.r))
    })
}

pub fn slope(c: NumClass) -> Result<Slope> {
    if c.is_zero() {
        return Err(Error::ZeroClass);
    }
    if c.r < 0 {
        return Err(Error::NegativeRank(c));
    }
    Ok(if c.r == 0 {
        Slope::Infinite
    } else {
        Slope::Finite(Rational::new(c.d as i128, c.r as i128))
    })
}

/// `χ(c1, c2) = r1·d2 − r2·d1 + r1·r2·(1−g)` (Riemann–Roch in χ-degrees).
pub fn euler_form(genus: u32, c1: NumClass, c2: NumClass) -> i64 {
    c1.r * c2.d - c2.r * c1.d + c1.r * c2.r * (1 - genus as i64)
}
