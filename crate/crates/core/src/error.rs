//! Error type shared by the whole crate. Validation errors name the
//! violated invariant so CLI messages can surface them verbatim.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("q must lie strictly inside (0, 1), got {0}")]
    QOutOfRange(f64),
    #[error("alpha must lie in [0, 1), got {0}")]
    AlphaOutOfRange(f64),
    #[error("a series needs at least one coefficient past the constant term")]
    EmptySeries,
    #[error("the leading coefficient of h must be exactly 1, got {re}+{im}i")]
    UnnormalizedLeadingCoeff { re: f64, im: f64 },
    #[error("the co-analytic leading coefficient must satisfy |b1| <= 1, got |b1| = {0}")]
    CoAnalyticLeadingTooLarge(f64),
    #[error("hull-boundary series (|b1| = 1) are excluded from univalence checks")]
    HullBoundary,
    #[error("grid radius {0} must lie in (0, max_radius]")]
    GridRadiusOutOfRange(f64),
    #[error("grid max_radius must lie in (0, 1), got {0}")]
    GridMaxRadiusOutOfRange(f64),
    #[error("grid needs at least one radius and one angle")]
    EmptyGrid,
    #[error("weight index {index} is below the minimum {min} for this family")]
    WeightIndexTooSmall { index: u32, min: u32 },
    #[error("duplicate weight index {0}")]
    DuplicateWeightIndex(u32),
    #[error("weight at index {index} must be nonnegative, got {value}")]
    NegativeWeight { index: u32, value: f64 },
    #[error("weight moduli must sum to 1 within 1e-12, got {0}")]
    WeightSumNotOne(f64),
    #[error("index {index} exceeds the truncation capacity {capacity}")]
    IndexBeyondCapacity { index: u32, capacity: usize },
    #[error("not in the restricted sign family ({0}) -- use the sufficiency test")]
    NotRestrictedForm(String),
    #[error("coefficient margin {0} is negative; the series is not a certified member")]
    NotMember(f64),
    #[error("a necessity witness requires a negative coefficient margin, got {0}")]
    MarginNotNegative(f64),
    #[error("b1 must lie in [0, 1), got {0}")]
    B1OutOfRange(f64),
    #[error("radius must lie in (0, 1), got {0}")]
    RadiusOutOfRange(f64),
    #[error("the q sequence must be strictly increasing inside (0, 1)")]
    BadQSequence,
    #[error("series data is malformed: {0}")]
    MalformedSeries(String),
}

pub type Result<T> = std::result::Result<T, Error>;
