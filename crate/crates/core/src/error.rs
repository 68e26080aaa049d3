use crate::polar::NoPolarReason;

/// Errors raised by geometric operations.
///
/// Each variant names the precondition that was violated.
#[derive(Clone, Copy, Debug, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("vector lies on the light cone (or is zero) and cannot be normalized")]
    LightlikeNormalization,
    #[error("the two vectors are linearly dependent")]
    DegenerateSpan,
    #[error("point is not on the unit surface (self product {self_product})")]
    OffSurface { self_product: f64 },
    #[error("coordinate is not finite")]
    NonFinite,
    #[error("the two points coincide")]
    CoincidentPoints,
    #[error("the two points are antipodal")]
    AntipodalPoints,
    #[error("the two points are infinitely far apart")]
    InfiniteSeparation,
    #[error("segment parameter {t} outside [0, {max}]")]
    ParamOutOfRange { t: f64, max: f64 },
    #[error("the segment between the points is empty")]
    EmptySegment,
    #[error("the segment is lightlike")]
    LightlikeSegment,
    #[error("the legs of the angle are segments of different kinds")]
    MixedSegmentKinds,
    #[error("a leg of the angle is lightlike")]
    LightlikeLeg,
    #[error("a leg of the angle is empty or a single point")]
    DegenerateLeg,
    #[error("argument {value} of {function} lies outside its domain")]
    DomainViolation { function: &'static str, value: f64 },
    #[error("two vertices of the triangle coincide")]
    DuplicateVertices,
    #[error("the triangle is degenerate")]
    DegenerateTriangle,
    #[error("the triangle is not spatiolateral")]
    NotSpatiolateral,
    #[error("operation not supported for this triangle family")]
    UnsupportedFamily,
    #[error("the polar triangle does not exist: {0}")]
    PolarNonExistent(NoPolarReason),
    #[error("rejection budget exhausted after {attempts} attempts ({accepted} accepted)")]
    RejectionBudgetExhausted { attempts: u64, accepted: usize },
}
