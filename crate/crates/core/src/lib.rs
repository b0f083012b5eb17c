//! Stability conditions on the derived category of a smooth projective curve.
//!
//! Numerical classes are pairs `(r, d)` with `d = χ`, so `O_C = (1, 1−g)`
//! and a skyscraper is `(0, 1)`. Exact arithmetic in `ℚ(√n)` decides every
//! comparison against a boundary parameter `β`; binary64 is used only for
//! transcendental quantities such as phases and masses.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod num;
pub mod objects;
pub mod stability;
pub mod group;
pub mod geometry;
pub mod weak;
pub mod wire;
pub mod cli;

pub use error::{Error, Result};
pub use num::{CurveContext, ExactReal, NumClass, Rational, Slope, FLOAT_TOL};
pub use objects::{Factor, FormalObject};
pub use group::{
    act, act_c, act_tensor, chart_fwd, chart_inv, from_central_charge, solve_transitive,
    CentralChargeMatrix, Chart, GroupElement, TensorAction,
};
pub use stability::{
    classify, Beta, BoundaryPoint, Classification, GeometricPoint, HnFactor, HnResult, PhaseValue,
    StabilityPoint, Variant,
};
pub use geometry::{
    gldim, pm_boundary_limit, pm_embed, sample_disk_csv, slicing_distance, Direction, Distance,
    GlobalDimension, ProjectiveMassPoint, SampleRange,
};
pub use weak::{
    check_clsy, check_regular, check_strict_weak, enumerate_ses, AxiomVerdict, NumericalSES, Rule,
    TrivialChargePoint, WeakDatum,
};
