//! Polar triangles: `A′ = ε (B×C)/‖B×C‖` and cyclically, with
//! `ε = sign det(A, B, C)` and `‖·‖` the Minkowski norm.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::GeometryError;
use crate::math;
use crate::mink::{self, MVec3, PlaneClass};
use crate::surface::{coincide, Component, SegmentKind};
use crate::tolerance::Tolerances;
use crate::triangle::{is_degenerate, Family, ProperKind, Side, Triangle, TriangleClassification};

/// Why a triangle has no polar triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NoPolarReason {
    /// Two vertices are antipodal, so their cross product vanishes.
    OppositeVertices,
    /// Two vertices span a lightlike plane, so their cross product is
    /// lightlike and cannot be normalized.
    LightlikeSidePlane,
}

impl fmt::Display for NoPolarReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NoPolarReason::OppositeVertices => "OppositeVertices",
            NoPolarReason::LightlikeSidePlane => "LightlikeSidePlane",
        })
    }
}

/// A computed polar triangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Polar {
    Triangle { vertices: [MVec3; 3], epsilon: i8 },
    /// The input was degenerate; every polar vertex is the zero vector.
    Zero,
}

impl Polar {
    pub fn epsilon(&self) -> i8 {
        match self {
            Polar::Triangle { epsilon, .. } => *epsilon,
            Polar::Zero => 0,
        }
    }

    pub fn vertices(&self) -> Option<[MVec3; 3]> {
        match self {
            Polar::Triangle { vertices, .. } => Some(*vertices),
            Polar::Zero => None,
        }
    }

    /// The polar vertices as a validated [`Triangle`].
    pub fn to_triangle(&self, tol: &Tolerances) -> Result<Triangle, GeometryError> {
        let v = self.vertices().ok_or(GeometryError::DegenerateTriangle)?;
        Triangle::from_coords(v, tol)
    }
}

/// The first obstruction found, checking all antipodal pairs before plane types.
pub fn polar_obstruction(t: &Triangle, tol: &Tolerances) -> Option<NoPolarReason> {
    let pairs = Side::ALL.map(|s| {
        let (p, q) = t.side_points(s);
        (p.coords(), q.coords())
    });
    if pairs.iter().any(|&(p, q)| coincide(p, -q, tol)) {
        return Some(NoPolarReason::OppositeVertices);
    }
    let lightlike = pairs
        .iter()
        .any(|&(p, q)| !matches!(mink::classify_plane(p, q, tol), Ok(PlaneClass::Spacelike | PlaneClass::Timelike)));
    lightlike.then_some(NoPolarReason::LightlikeSidePlane)
}

pub fn polar_exists(t: &Triangle, tol: &Tolerances) -> Result<(), NoPolarReason> {
    polar_obstruction(t, tol).map_or(Ok(()), Err)
}

/// Polar triangle of `t`. Degenerate triangles (relative determinant within
/// `tol.degen`) give [`Polar::Zero`].
pub fn polar_triangle(t: &Triangle, tol: &Tolerances) -> Result<Polar, GeometryError> {
    if let Some(reason) = polar_obstruction(t, tol) {
        return Err(GeometryError::PolarNonExistent(reason));
    }
    if is_degenerate(t, tol) {
        return Ok(Polar::Zero);
    }
    Ok(polar_of_coords(t.coords()))
}

fn polar_of_coords(v: [MVec3; 3]) -> Polar {
    let [a, b, c] = v;
    let epsilon = if mink::det3(a, b, c) > 0.0 { 1.0 } else { -1.0 };
    let unit = |x: MVec3| x * (epsilon / math::sqrt(math::abs(x.msq())));
    Polar::Triangle { vertices: [unit(b.cross(c)), unit(c.cross(a)), unit(a.cross(b))], epsilon: epsilon as i8 }
}

/// The polar triangle with `J` applied to each vertex.
///
/// Diagnostic only: it differs from the polar triangle by a Lorentz map, so
/// lengths, angles and type agree.
pub fn minkowski_polar(t: &Triangle, tol: &Tolerances) -> Result<Polar, GeometryError> {
    Ok(match polar_triangle(t, tol)? {
        Polar::Triangle { vertices, epsilon } => Polar::Triangle { vertices: vertices.map(MVec3::j), epsilon },
        Polar::Zero => Polar::Zero,
    })
}

/// A set of triangle types a polar triangle may belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolarPattern {
    /// Hyperbolic or antipodal hyperbolic.
    PlusMinusHyperbolic,
    /// Strange with every vertex on `H² ∪ (−H²)`.
    StrangeOnHyperbolicSheets,
    /// Strange with at least one vertex on `S¹,¹`.
    StrangeTouchingDeSitter,
    SpatiolateralContractible,
    SpatiolateralNonContractible,
    Chorosceles,
    Chronosceles,
    Tempolateral,
    /// Proper and impossible with `timelike` timelike sides and no spacelike
    /// or lightlike side.
    ImpossibleTimelike { timelike: u8 },
    /// Proper and impossible with at least one spacelike side.
    ImpossibleWithSpacelikeSide,
}

impl PolarPattern {
    pub fn matches(self, c: &TriangleClassification) -> bool {
        let class = &c.class;
        let proper_kind = |k| class.family == Family::Proper && class.proper_kind == Some(k);
        match self {
            PolarPattern::PlusMinusHyperbolic => {
                matches!(class.family, Family::Hyperbolic | Family::AntipodalHyperbolic)
            }
            PolarPattern::StrangeOnHyperbolicSheets => c.is_strange_on_hyperbolic_sheets(),
            PolarPattern::StrangeTouchingDeSitter => class.family == Family::Strange && c.touches_de_sitter(),
            PolarPattern::SpatiolateralContractible => proper_kind(ProperKind::SpatiolateralContractible),
            PolarPattern::SpatiolateralNonContractible => proper_kind(ProperKind::SpatiolateralNonContractible),
            PolarPattern::Chorosceles => proper_kind(ProperKind::Chorosceles),
            PolarPattern::Chronosceles => proper_kind(ProperKind::Chronosceles),
            PolarPattern::Tempolateral => proper_kind(ProperKind::Tempolateral),
            PolarPattern::ImpossibleTimelike { timelike } => {
                class.family == Family::Proper
                    && class.is_impossible()
                    && c.count_kind(SegmentKind::DeSitterTimelike) == timelike as usize
                    && c.count_kind(SegmentKind::DeSitterTimelike) + class.impossible_sides.len() == 3
            }
            PolarPattern::ImpossibleWithSpacelikeSide => {
                class.family == Family::Proper
                    && class.is_impossible()
                    && c.count_kind(SegmentKind::DeSitterSpacelike) > 0
            }
        }
    }
}

/// Predicted type of the polar triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolarPrediction {
    NonExistent(NoPolarReason),
    Zero,
    /// The polar triangle matches one of these patterns.
    OneOf(Vec<PolarPattern>),
}

impl PolarPrediction {
    /// Checks an actual polar outcome against the prediction.
    pub fn admits(&self, outcome: &Result<Polar, GeometryError>, tol: &Tolerances) -> bool {
        match (self, outcome) {
            (PolarPrediction::NonExistent(r), Err(GeometryError::PolarNonExistent(s))) => r == s,
            (PolarPrediction::Zero, Ok(Polar::Zero)) => true,
            (PolarPrediction::OneOf(patterns), Ok(p @ Polar::Triangle { .. })) => match p.to_triangle(tol) {
                Ok(t) => {
                    let c = crate::triangle::classify_triangle(&t, tol);
                    patterns.iter().any(|pat| pat.matches(&c))
                }
                Err(_) => false,
            },
            _ => false,
        }
    }
}

/// Type of the polar triangle implied by the classification alone.
pub fn predict_polar_type(c: &TriangleClassification) -> PolarPrediction {
    use PolarPattern as P;
    if c.has_opposite_vertices() {
        return PolarPrediction::NonExistent(NoPolarReason::OppositeVertices);
    }
    if c.sides.iter().any(|s| s.plane != Some(PlaneClass::Spacelike) && s.plane != Some(PlaneClass::Timelike)) {
        return PolarPrediction::NonExistent(NoPolarReason::LightlikeSidePlane);
    }
    let class = &c.class;
    if class.degenerate {
        return PolarPrediction::Zero;
    }
    let one = |p| PolarPrediction::OneOf(vec![p]);
    match class.family {
        Family::Hyperbolic | Family::AntipodalHyperbolic => one(P::SpatiolateralNonContractible),
        Family::Strange if c.components.iter().all(|k| *k != Component::DeSitter) => one(P::SpatiolateralContractible),
        Family::Strange => PolarPrediction::OneOf(vec![
            P::StrangeTouchingDeSitter,
            P::Chorosceles,
            P::Chronosceles,
            P::ImpossibleWithSpacelikeSide,
        ]),
        Family::Proper if class.is_impossible() => {
            if c.count_kind(SegmentKind::DeSitterSpacelike) > 0 {
                return one(P::StrangeTouchingDeSitter);
            }
            match c.count_kind(SegmentKind::DeSitterTimelike) {
                1 => PolarPrediction::OneOf(vec![P::ImpossibleTimelike { timelike: 1 }, P::Tempolateral]),
                n => one(P::ImpossibleTimelike { timelike: n as u8 }),
            }
        }
        Family::Proper => match class.proper_kind {
            Some(ProperKind::SpatiolateralNonContractible) => one(P::PlusMinusHyperbolic),
            Some(ProperKind::SpatiolateralContractible) => one(P::StrangeOnHyperbolicSheets),
            Some(ProperKind::Chorosceles | ProperKind::Chronosceles) => one(P::StrangeTouchingDeSitter),
            Some(ProperKind::Tempolateral) => one(P::ImpossibleTimelike { timelike: 1 }),
            // every remaining kind has a lightlike side and was handled above
            _ => PolarPrediction::NonExistent(NoPolarReason::LightlikeSidePlane),
        },
    }
}
