use thiserror::Error;

use crate::num::NumClass;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("the zero class (0,0) is not a valid input")]
    ZeroClass,
    #[error("class {0} has negative rank")]
    NegativeRank(NumClass),
    #[error("entry {index}: class {class} is not a semistable class in genus {genus}")]
    NotSemistable {
        index: usize,
        class: NumClass,
        genus: u32,
    },
    #[error("cannot mix quadratic extensions sqrt({0}) and sqrt({1})")]
    MixedExtension(i128, i128),
    #[error("radicand must be nonnegative, got {0}")]
    NegativeRadicand(i128),
    #[error("class {0} has zero central charge and the point carries no phase label t")]
    DegenerateClass(NumClass),
    #[error("invalid stability point: {0}")]
    InvalidPoint(String),
    #[error("boundary points only carry the C-action")]
    BoundaryGroupAction,
    #[error("matrix is degenerate or has nonpositive determinant ({0})")]
    DegenerateMatrix(f64),
    #[error("winding ambiguous at current precision (residual {0})")]
    WindingAmbiguous(f64),
    #[error("skyscraper phase hint {hint} is inconsistent with arg(-Z(0,1)) (residual {residual})")]
    HintInconsistent { hint: f64, residual: f64 },
    #[error("points live on curves of different genus ({0} and {1})")]
    MixedGenus(u32, u32),
    #[error("global dimension is not computed on genus 0")]
    GenusZero,
    #[error("closed form only available in genus 1, got genus {0}")]
    GenusNotOne(u32),
    #[error("zero-charge classes are present but no phase label t was supplied")]
    MissingPhaseLabel,
    #[error("chart domain violation: {0}")]
    ChartDomain(String),
    #[error("all masses vanish")]
    ZeroMasses,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
