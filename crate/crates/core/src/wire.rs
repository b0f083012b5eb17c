//! JSON shapes for points, objects, group elements and results.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::geometry::{Direction, Distance, GlobalDimension, ProjectiveMassPoint};
use crate::group::{Chart, GroupElement};
use crate::num::{parse_rational, ExactReal, NumClass, Rational};
use crate::objects::{Factor, FormalObject};
use crate::stability::{Beta, HnResult, PhaseValue, StabilityPoint, Variant};

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn complex(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

fn fmt_rational(q: &Rational) -> String {
    ExactReal::from_rational(*q).to_string()
}

/// `{"a": "p/q", "b": "r/s", "n": k}` for `a + b√n`, or `"inf"`. A bare
/// string in the CLI number syntax is accepted on input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BetaJson {
    Exact {
        a: String,
        #[serde(default = "zero_string")]
        b: String,
        #[serde(default)]
        n: i64,
    },
    Text(String),
}

fn zero_string() -> String {
    "0".to_string()
}

impl From<&Beta> for BetaJson {
    fn from(b: &Beta) -> Self {
        match b {
            Beta::Infinity => BetaJson::Text("inf".into()),
            Beta::Finite(x) => BetaJson::Exact {
                a: fmt_rational(&x.rational_part()),
                b: fmt_rational(&x.surd_coefficient()),
                n: x.radicand() as i64,
            },
        }
    }
}

impl TryFrom<&BetaJson> for Beta {
    type Error = Error;
    fn try_from(b: &BetaJson) -> Result<Self> {
        match b {
            BetaJson::Text(s) => s.parse(),
            BetaJson::Exact { a, b, n } => Ok(Beta::Finite(ExactReal::new(
                parse_rational(a)?,
                parse_rational(b)?,
                *n as i128,
            )?)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
#[derive(Default)]
pub enum VariantJson {
    #[default]
    Lower,
    Upper,
}


fn default_genus() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PointJson {
    Geometric {
        #[serde(default)]
        lambda: [f64; 2],
        tau: [f64; 2],
        #[serde(default = "default_genus")]
        genus: u32,
    },
    Boundary {
        beta: BetaJson,
        #[serde(default)]
        variant: VariantJson,
        #[serde(default)]
        t: Option<String>,
        #[serde(default)]
        lambda: [f64; 2],
        #[serde(default = "default_genus")]
        genus: u32,
    },
}

impl From<&StabilityPoint> for PointJson {
    fn from(s: &StabilityPoint) -> Self {
        match s {
            StabilityPoint::Geometric(p) => PointJson::Geometric {
                lambda: pair(p.lambda),
                tau: pair(p.tau),
                genus: p.ctx.genus,
            },
            StabilityPoint::Boundary(p) => PointJson::Boundary {
                beta: (&p.beta).into(),
                variant: match p.variant {
                    Variant::Lower => VariantJson::Lower,
                    Variant::Upper => VariantJson::Upper,
                },
                t: p.t.as_ref().map(fmt_rational),
                lambda: pair(p.lambda),
                genus: p.ctx.genus,
            },
        }
    }
}

impl TryFrom<&PointJson> for StabilityPoint {
    type Error = Error;
    fn try_from(p: &PointJson) -> Result<Self> {
        match p {
            PointJson::Geometric { lambda, tau, genus } => {
                StabilityPoint::geometric(complex(*lambda), complex(*tau), *genus)
            }
            PointJson::Boundary {
                beta,
                variant,
                t,
                lambda,
                genus,
            } => {
                let t = t.as_deref().map(parse_rational).transpose()?;
                let variant = match variant {
                    VariantJson::Lower => Variant::Lower,
                    VariantJson::Upper => Variant::Upper,
                };
                StabilityPoint::boundary(beta.try_into()?, variant, t, complex(*lambda), *genus)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    #[serde(default)]
    pub shift: i64,
    pub r: i64,
    pub d: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectJson {
    pub factors: Vec<FactorJson>,
}

impl ObjectJson {
    pub fn to_object(&self, genus: u32) -> Result<FormalObject> {
        let raw: Vec<Factor> = self
            .factors
            .iter()
            .map(|f| Factor::new(f.shift, NumClass::new(f.r, f.d)))
            .collect();
        FormalObject::canonicalize(&raw, genus)
    }
}

impl From<&FormalObject> for ObjectJson {
    fn from(o: &FormalObject) -> Self {
        ObjectJson {
            factors: o
                .factors()
                .iter()
                .map(|f| FactorJson {
                    shift: f.shift,
                    r: f.class.r,
                    d: f.class.d,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupJson {
    pub m: [[f64; 2]; 2],
    pub winding: i64,
    /// Exact rational entries, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<[[String; 2]; 2]>,
}

impl From<&GroupElement> for GroupJson {
    fn from(g: &GroupElement) -> Self {
        GroupJson {
            m: g.matrix(),
            winding: g.winding(),
            exact: g.exact_matrix().map(|e| e.map(|row| row.map(|q| fmt_rational(&q)))),
        }
    }
}

impl TryFrom<&GroupJson> for GroupElement {
    type Error = Error;
    fn try_from(g: &GroupJson) -> Result<Self> {
        match &g.exact {
            Some(e) => {
                let q = |s: &String| parse_rational(s);
                let m = [[q(&e[0][0])?, q(&e[0][1])?], [q(&e[1][0])?, q(&e[1][1])?]];
                GroupElement::from_exact(m, g.winding)
            }
            None => GroupElement::new(g.m, g.winding),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChartJson {
    pub c: [f64; 2],
    pub w: [f64; 2],
}

impl From<&Chart> for ChartJson {
    fn from(ch: &Chart) -> Self {
        ChartJson {
            c: pair(ch.c),
            w: pair(ch.w),
        }
    }
}

impl From<&ChartJson> for Chart {
    fn from(ch: &ChartJson) -> Self {
        Chart {
            c: complex(ch.c),
            w: complex(ch.w),
        }
    }
}

pub fn phase_json(p: &PhaseValue) -> Value {
    serde_json::json!({ "value": p.value, "exact_integer": p.exact_integer })
}

pub fn hn_json(hn: &HnResult) -> Value {
    let factors: Vec<Value> = hn
        .factors
        .iter()
        .map(|f| {
            serde_json::json!({
                "phase": f.phase.value,
                "exact_integer": f.phase.exact_integer,
                "shift": f.shift,
                "r": f.class.r,
                "d": f.class.d,
            })
        })
        .collect();
    serde_json::json!({ "factors": factors })
}

pub fn distance_json(d: &Distance) -> Value {
    let witness = match d.witness {
        Direction::Finite(x) => serde_json::json!(x),
        Direction::PosInfinity => serde_json::json!("∞"),
        Direction::NegInfinity => serde_json::json!("-∞"),
    };
    serde_json::json!({ "d": d.d, "witness_direction": witness })
}

pub fn pm_json(p: &ProjectiveMassPoint) -> Value {
    serde_json::json!({ "coords": p.coords() })
}

pub fn gldim_json(g: &GlobalDimension) -> Value {
    match g {
        GlobalDimension::Exact(v) => serde_json::json!({ "value": v, "exact": true }),
        GlobalDimension::Bracket { lower, upper } => {
            serde_json::json!({ "lower": lower, "upper": upper, "exact": false })
        }
    }
}

/// Rewrites `-0.0` as `0.0` throughout.
pub fn normalize_zeros(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if let Some(x) = n.as_f64() {
                if x == 0.0 && x.is_sign_negative() {
                    *v = serde_json::json!(0.0);
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(normalize_zeros),
        Value::Object(map) => map.values_mut().for_each(normalize_zeros),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_round_trip() {
        let pts = [
            StabilityPoint::geometric(Complex64::new(0.3, -1.0), Complex64::new(-1.0, 2.0), 2).unwrap(),
            StabilityPoint::boundary(
                Beta::Finite("1/2+3*sqrt:5".parse().unwrap()),
                Variant::Upper,
                None,
                Complex64::new(0.5, 0.0),
                1,
            )
            .unwrap(),
            StabilityPoint::sigma_beta_t(Beta::rational(-2, 3), Rational::new(1, 4), 1).unwrap(),
            StabilityPoint::sigma_beta(Beta::Infinity, Variant::Lower, 3).unwrap(),
        ];
        for p in pts {
            let j = serde_json::to_string(&PointJson::from(&p)).unwrap();
            let back: PointJson = serde_json::from_str(&j).unwrap();
            assert_eq!(StabilityPoint::try_from(&back).unwrap(), p, "{j}");
        }
    }

    #[test]
    fn beta_shapes() {
        let j: PointJson = serde_json::from_str(
            r#"{"kind":"boundary","beta":{"a":"0","b":"1","n":2},"variant":"lower","t":null,"lambda":[0,0],"genus":1}"#,
        )
        .unwrap();
        let p = StabilityPoint::try_from(&j).unwrap();
        let StabilityPoint::Boundary(b) = p else { panic!() };
        assert_eq!(b.beta, Beta::Finite(ExactReal::sqrt(2).unwrap()));
        let j: PointJson =
            serde_json::from_str(r#"{"kind":"boundary","beta":"inf","variant":"upper","genus":1}"#).unwrap();
        assert!(StabilityPoint::try_from(&j).is_ok());
    }

    #[test]
    fn group_round_trip() {
        let g = GroupElement::embed_c(Complex64::new(1.5, 0.0));
        let j = GroupJson::from(&g);
        assert_eq!(GroupElement::try_from(&j).unwrap(), g);
    }

    #[test]
    fn negative_zero_is_cleaned() {
        let mut v = serde_json::json!({"a": [-0.0, 1.0], "b": {"c": -0.0}});
        normalize_zeros(&mut v);
        assert_eq!(v.to_string(), r#"{"a":[0.0,1.0],"b":{"c":0.0}}"#);
    }
}
