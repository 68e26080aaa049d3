//! Points of `𝕊² = H² ∪ (−H²) ∪ S¹,¹`, distances, segments and angles.

use core::fmt;
use core::ops::Add;

use crate::error::GeometryError;
use crate::math;
use crate::mink::{self, CausalClass, MVec3, PlaneClass};
use crate::tolerance::Tolerances;

/// Connected component of the Minkowski unit surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    /// Upper hyperboloid sheet, `⟨⟨x,x⟩⟩ = −1`, `x₁ > 0`.
    H2,
    /// Lower hyperboloid sheet, `⟨⟨x,x⟩⟩ = −1`, `x₁ < 0`.
    NegH2,
    /// One-sheeted hyperboloid, `⟨⟨x,x⟩⟩ = 1`.
    DeSitter,
}

impl Component {
    pub fn is_hyperbolic(self) -> bool {
        matches!(self, Component::H2 | Component::NegH2)
    }

    /// Component of `−x` for `x` on `self`.
    pub fn opposite(self) -> Component {
        match self {
            Component::H2 => Component::NegH2,
            Component::NegH2 => Component::H2,
            Component::DeSitter => Component::DeSitter,
        }
    }
}

/// A vector known to lie on one component of the unit surface.
///
/// Only [`classify_point`] (and the helpers built on it) construct these.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SurfacePoint {
    coords: MVec3,
    component: Component,
}

impl SurfacePoint {
    /// Validates `x` and tags it with its component.
    pub fn new(x: MVec3, tol: &Tolerances) -> Result<Self, GeometryError> {
        if !x.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        match classify_point(x, tol) {
            Membership::On(p) => Ok(p),
            Membership::OffSurface { self_product } => Err(GeometryError::OffSurface { self_product }),
        }
    }

    #[inline]
    pub fn coords(&self) -> MVec3 {
        self.coords
    }

    #[inline]
    pub fn component(&self) -> Component {
        self.component
    }

    /// The antipodal point `−x`.
    pub fn negate(&self) -> SurfacePoint {
        SurfacePoint { coords: -self.coords, component: self.component.opposite() }
    }
}

/// Result of [`classify_point`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Membership {
    On(SurfacePoint),
    OffSurface { self_product: f64 },
}

impl Membership {
    pub fn point(self) -> Option<SurfacePoint> {
        match self {
            Membership::On(p) => Some(p),
            Membership::OffSurface { .. } => None,
        }
    }
}

/// Tags `x` with its component of `𝕊²`, or reports it as off the surface.
pub fn classify_point(x: MVec3, tol: &Tolerances) -> Membership {
    let q = x.msq();
    let band = tol.surf * x.norm_sq().max(1.0);
    let component = if math::abs(q + 1.0) <= band {
        if x.x1 > 0.0 {
            Component::H2
        } else {
            Component::NegH2
        }
    } else if math::abs(q - 1.0) <= band {
        Component::DeSitter
    } else {
        return Membership::OffSurface { self_product: q };
    };
    Membership::On(SurfacePoint { coords: x, component })
}

/// Euclidean coincidence of two points, relative to their size.
pub(crate) fn coincide(a: MVec3, b: MVec3, tol: &Tolerances) -> bool {
    (a - b).norm() <= tol.surf * a.norm().max(b.norm()).max(1.0)
}

/// A distance that may be infinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtDistance {
    Finite(f64),
    Infinite,
}

impl ExtDistance {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtDistance::Finite(_))
    }

    /// The value as `f64`, `+∞` for [`ExtDistance::Infinite`].
    pub fn value(self) -> f64 {
        match self {
            ExtDistance::Finite(d) => d,
            ExtDistance::Infinite => f64::INFINITY,
        }
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            ExtDistance::Finite(d) => Some(d),
            ExtDistance::Infinite => None,
        }
    }
}

impl Add for ExtDistance {
    type Output = ExtDistance;

    fn add(self, o: ExtDistance) -> ExtDistance {
        match (self, o) {
            (ExtDistance::Finite(a), ExtDistance::Finite(b)) => ExtDistance::Finite(a + b),
            _ => ExtDistance::Infinite,
        }
    }
}

impl fmt::Display for ExtDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtDistance::Finite(d) => write!(f, "{d}"),
            ExtDistance::Infinite => f.write_str("inf"),
        }
    }
}

/// Which branch of the proper de Sitter distance applies to a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceCase {
    /// `x − y` timelike: `arcosh ⟨⟨x,y⟩⟩`.
    Timelike,
    /// `x − y` lightlike: zero.
    Lightlike,
    /// `⟨⟨x,y⟩⟩ ≤ −1`, `x ≠ −y`: infinite.
    Unreachable,
    /// Everything else: `arccos ⟨⟨x,y⟩⟩`.
    Elliptic,
}

/// Case dispatch of the proper de Sitter distance, in the defining order:
/// the difference vector decides first, then the product.
pub fn proper_distance_case(a: MVec3, b: MVec3, tol: &Tolerances) -> DistanceCase {
    match mink::classify_vector(a - b, tol) {
        CausalClass::Timelike => DistanceCase::Timelike,
        CausalClass::Lightlike => DistanceCase::Lightlike,
        CausalClass::Spacelike => {
            let p = a.mdot(b);
            let band = tol.light * (a.norm() * b.norm()).max(1.0);
            if coincide(a, -b, tol) || p > -1.0 + band {
                DistanceCase::Elliptic
            } else if p < -1.0 - band {
                DistanceCase::Unreachable
            } else {
                // ⟨⟨x,y⟩⟩ ≈ −1: nearly antipodal on a great ellipse, or on
                // opposite lines of a lightlike plane.
                match mink::classify_plane(a, b, tol) {
                    Ok(PlaneClass::Spacelike) => DistanceCase::Elliptic,
                    _ => DistanceCase::Unreachable,
                }
            }
        }
    }
}

/// True when a pair of de Sitter points falls in the `arccos` branch even
/// though it does not lie on a great ellipse (spacelike plane).
pub fn elliptic_gloss_mismatch(a: &SurfacePoint, b: &SurfacePoint, tol: &Tolerances) -> bool {
    if a.component != Component::DeSitter || b.component != Component::DeSitter {
        return false;
    }
    let (x, y) = (a.coords, b.coords);
    if coincide(x, y, tol) || coincide(x, -y, tol) {
        return false;
    }
    proper_distance_case(x, y, tol) == DistanceCase::Elliptic
        && mink::classify_plane(x, y, tol) != Ok(PlaneClass::Spacelike)
}

/// `arccos` with arguments clamped into `[−1, 1]` within `tol.clamp`.
pub(crate) fn acos_checked(x: f64, tol: &Tolerances) -> Result<f64, GeometryError> {
    if !(-1.0 - tol.clamp..=1.0 + tol.clamp).contains(&x) {
        return Err(GeometryError::DomainViolation { function: "arccos", value: x });
    }
    Ok(math::acos(x.clamp(-1.0, 1.0)))
}

/// `arcosh` with arguments in `[1 − clamp, 1)` clamped to 1.
pub(crate) fn acosh_checked(x: f64, tol: &Tolerances) -> Result<f64, GeometryError> {
    if x.is_nan() || x < 1.0 - tol.clamp {
        return Err(GeometryError::DomainViolation { function: "arcosh", value: x });
    }
    Ok(math::acosh(x.max(1.0)))
}

/// `|||x × y|||`, which equals `sqrt|⟨⟨x,y⟩⟩² − ⟨⟨x,x⟩⟩⟨⟨y,y⟩⟩|`: the
/// sine (or hyperbolic sine) of the separation of two unit vectors. It stays
/// accurate for nearby vectors, where the product itself is close to `±1`.
fn cross_norm(x: MVec3, y: MVec3) -> f64 {
    x.cross(y).mnorm()
}

/// Hyperbolic distance on `H²`: `arcosh(−⟨⟨x,y⟩⟩)`, evaluated as
/// `arsinh |||x × y|||`.
fn hyperbolic_distance(a: MVec3, b: MVec3) -> f64 {
    math::asinh(cross_norm(a, b))
}

/// Generalized de Sitter distance.
///
/// On `H²` the hyperbolic distance, on `−H²` the hyperbolic distance of the
/// antipodes, on `S¹,¹` the four-case proper de Sitter distance, and `+∞`
/// between different components.
pub fn distance(a: &SurfacePoint, b: &SurfacePoint, tol: &Tolerances) -> ExtDistance {
    use Component::*;
    match (a.component, b.component) {
        (H2, H2) => ExtDistance::Finite(hyperbolic_distance(a.coords, b.coords)),
        (NegH2, NegH2) => ExtDistance::Finite(hyperbolic_distance(-a.coords, -b.coords)),
        (DeSitter, DeSitter) => {
            let (x, y) = (a.coords, b.coords);
            let p = x.mdot(y);
            match proper_distance_case(x, y, tol) {
                DistanceCase::Timelike => ExtDistance::Finite(math::asinh(cross_norm(x, y))),
                DistanceCase::Lightlike => ExtDistance::Finite(0.0),
                DistanceCase::Unreachable => ExtDistance::Infinite,
                DistanceCase::Elliptic => ExtDistance::Finite(math::atan2(cross_norm(x, y), p)),
            }
        }
        _ => ExtDistance::Infinite,
    }
}

/// Kind of the generalized segment between two points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SegmentKind {
    Hyperbolic,
    AntipodalHyperbolic,
    /// Arc of a great ellipse (spacelike plane).
    DeSitterSpacelike,
    /// Arc of a great hyperbola branch (timelike plane).
    DeSitterTimelike,
    /// Straight line segment (lightlike plane).
    DeSitterLightlike,
    /// `A = B`.
    Point,
    /// `A = −B` or infinite distance.
    Empty,
}

impl SegmentKind {
    /// Proper de Sitter segments with a measurable length and angle.
    pub fn is_proper_measurable(self) -> bool {
        matches!(self, SegmentKind::DeSitterSpacelike | SegmentKind::DeSitterTimelike)
    }
}

pub fn segment_kind(a: &SurfacePoint, b: &SurfacePoint, tol: &Tolerances) -> SegmentKind {
    let (x, y) = (a.coords, b.coords);
    if coincide(x, y, tol) {
        return SegmentKind::Point;
    }
    if coincide(x, -y, tol) || !distance(a, b, tol).is_finite() {
        return SegmentKind::Empty;
    }
    match (a.component, b.component) {
        (Component::H2, Component::H2) => SegmentKind::Hyperbolic,
        (Component::NegH2, Component::NegH2) => SegmentKind::AntipodalHyperbolic,
        _ => match mink::classify_plane(x, y, tol) {
            Ok(PlaneClass::Spacelike) => SegmentKind::DeSitterSpacelike,
            Ok(PlaneClass::Timelike) => SegmentKind::DeSitterTimelike,
            Ok(PlaneClass::Lightlike) => SegmentKind::DeSitterLightlike,
            // unreachable after the coincidence checks above
            Err(_) => SegmentKind::Empty,
        },
    }
}

/// Tangent vector at `a` pointing toward `b`.
///
/// `b − a` on lightlike spans, `(b + ⟨⟨a,b⟩⟩a)/|||a×b|||` on `±H²`, and
/// `(b − ⟨⟨a,b⟩⟩a)/|||a×b|||` otherwise. Normalized except in the lightlike case.
pub fn tangent_vector(a: &SurfacePoint, b: &SurfacePoint, tol: &Tolerances) -> Result<MVec3, GeometryError> {
    let (x, y) = (a.coords, b.coords);
    if coincide(x, y, tol) {
        return Err(GeometryError::CoincidentPoints);
    }
    if coincide(x, -y, tol) {
        return Err(GeometryError::AntipodalPoints);
    }
    if !distance(a, b, tol).is_finite() {
        return Err(GeometryError::InfiniteSeparation);
    }
    if mink::classify_plane(x, y, tol)? == PlaneClass::Lightlike {
        return Ok(y - x);
    }
    let p = x.mdot(y);
    let n = x.cross(y).mnorm();
    Ok(if a.component.is_hyperbolic() { (y + x * p) / n } else { (y - x * p) / n })
}

/// Upper end `T` of the segment parameter: 1 for lightlike segments, the
/// distance otherwise.
pub fn segment_bound(a: &SurfacePoint, b: &SurfacePoint, tol: &Tolerances) -> Result<f64, GeometryError> {
    match segment_kind(a, b, tol) {
        SegmentKind::Empty => Err(GeometryError::EmptySegment),
        SegmentKind::Point => Ok(0.0),
        SegmentKind::DeSitterLightlike => Ok(1.0),
        _ => Ok(distance(a, b, tol).value()),
    }
}

/// A geodesic segment with its parametrization precomputed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    start: MVec3,
    tangent: MVec3,
    kind: SegmentKind,
    bound: f64,
}

impl Segment {
    pub fn new(a: &SurfacePoint, b: &SurfacePoint, tol: &Tolerances) -> Result<Segment, GeometryError> {
        let kind = segment_kind(a, b, tol);
        let (tangent, bound) = match kind {
            SegmentKind::Empty => return Err(GeometryError::EmptySegment),
            SegmentKind::Point => (MVec3::ZERO, 0.0),
            SegmentKind::DeSitterLightlike => (tangent_vector(a, b, tol)?, 1.0),
            _ => (tangent_vector(a, b, tol)?, distance(a, b, tol).value()),
        };
        Ok(Segment { start: a.coords, tangent, kind, bound })
    }

    pub fn kind(&self) -> SegmentKind {
        self.kind
    }

    /// Parameter range is `[0, bound]`.
    pub fn bound(&self) -> f64 {
        self.bound
    }

    pub fn tangent(&self) -> MVec3 {
        self.tangent
    }

    pub fn point(&self, t: f64) -> Result<MVec3, GeometryError> {
        let slack = 8.0 * f64::EPSILON * self.bound.max(1.0);
        if !(t >= 0.0 && t <= self.bound + slack) {
            return Err(GeometryError::ParamOutOfRange { t, max: self.bound });
        }
        Ok(self.point_unchecked(t))
    }

    pub(crate) fn point_unchecked(&self, t: f64) -> MVec3 {
        let (a, x) = (self.start, self.tangent);
        match self.kind {
            SegmentKind::Point | SegmentKind::Empty => a,
            SegmentKind::DeSitterLightlike => a + x * t,
            SegmentKind::DeSitterSpacelike => a * math::cos(t) + x * math::sin(t),
            _ => a * math::cosh(t) + x * math::sinh(t),
        }
    }
}

/// Point at parameter `t` of the segment from `a` to `b`.
///
/// `a + tX` on lightlike segments (`t ∈ [0,1]`), `cos(t)a + sin(t)X` on
/// great-ellipse arcs and `cosh(t)a + sinh(t)X` otherwise, `t` ranging up to
/// the distance.
pub fn segment_point(a: &SurfacePoint, b: &SurfacePoint, t: f64, tol: &Tolerances) -> Result<MVec3, GeometryError> {
    Segment::new(a, b, tol)?.point(t)
}

fn check_angle_legs(b: &SurfacePoint, a: &SurfacePoint, c: &SurfacePoint, tol: &Tolerances) -> Result<SegmentKind, GeometryError> {
    let kb = segment_kind(a, b, tol);
    let kc = segment_kind(a, c, tol);
    for k in [kb, kc] {
        if matches!(k, SegmentKind::Empty | SegmentKind::Point) {
            return Err(GeometryError::DegenerateLeg);
        }
    }
    if kb != kc {
        return Err(GeometryError::MixedSegmentKinds);
    }
    if kb == SegmentKind::DeSitterLightlike {
        return Err(GeometryError::LightlikeLeg);
    }
    Ok(kb)
}

/// `⟨⟨X_AB, X_AC⟩⟩` at vertex `a`, with the same admissibility checks as
/// [`angle`]. Its sign carries the orientation information that the
/// unsigned angle drops.
pub fn tangent_product(b: &SurfacePoint, a: &SurfacePoint, c: &SurfacePoint, tol: &Tolerances) -> Result<f64, GeometryError> {
    check_angle_legs(b, a, c, tol)?;
    Ok(tangent_vector(a, b, tol)?.mdot(tangent_vector(a, c, tol)?))
}

fn wrap_angle(kind: SegmentKind, p: f64, tol: &Tolerances) -> Result<f64, GeometryError> {
    if kind.is_proper_measurable() {
        acosh_checked(math::abs(p), tol)
    } else {
        acos_checked(p, tol)
    }
}

/// [`wrap_angle`] for the unit tangents `x`, `y`, evaluated through the
/// cross-product norm (better conditioned for small angles).
fn tangent_angle(kind: SegmentKind, x: MVec3, y: MVec3, tol: &Tolerances) -> Result<f64, GeometryError> {
    let p = x.mdot(y);
    wrap_angle(kind, p, tol)?;
    let s = cross_norm(x, y);
    Ok(if kind.is_proper_measurable() { math::asinh(s) } else { math::atan2(s, p) })
}

/// Angle `∠(b, a, c)` at vertex `a`.
///
/// `arcosh |⟨⟨X_AB, X_AC⟩⟩|` between proper de Sitter segments,
/// `arccos ⟨⟨X_AB, X_AC⟩⟩` between (antipodal) hyperbolic ones.
pub fn angle(b: &SurfacePoint, a: &SurfacePoint, c: &SurfacePoint, tol: &Tolerances) -> Result<f64, GeometryError> {
    let kind = check_angle_legs(b, a, c, tol)?;
    tangent_angle(kind, tangent_vector(a, b, tol)?, tangent_vector(a, c, tol)?, tol)
}

/// The same angle computed from normalized cross products,
/// `⟨⟨X_AB, X_AC⟩⟩ = ∓⟨⟨A×B/|||A×B|||, A×C/|||A×C|||⟩⟩` with the minus sign on `S¹,¹`.
pub fn angle_via_cross(b: &SurfacePoint, a: &SurfacePoint, c: &SurfacePoint, tol: &Tolerances) -> Result<f64, GeometryError> {
    let kind = check_angle_legs(b, a, c, tol)?;
    let ab = a.coords.cross(b.coords);
    let ac = a.coords.cross(c.coords);
    let p = ab.mdot(ac) / (ab.mnorm() * ac.mnorm());
    let p = if a.component == Component::DeSitter { -p } else { p };
    wrap_angle(kind, p, tol)
}
