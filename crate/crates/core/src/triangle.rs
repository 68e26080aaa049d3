//! Generalized de Sitter triangles and their classification.
//!
//! Vertices are labelled `A`, `B`, `C`; side `a` joins `B` and `C`, side
//! `b` joins `C` and `A`, side `c` joins `A` and `B`.

use core::f64::consts::{PI, TAU};
use core::fmt;

use crate::error::GeometryError;
use crate::lorentz::Mat3;
use crate::math;
use crate::mink::{self, MVec3, PlaneClass};
use crate::surface::{self, coincide, Component, ExtDistance, Segment, SegmentKind, SurfacePoint};
use crate::tolerance::Tolerances;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Vertex {
        Vertex::ALL[i % 3]
    }

    /// The side opposite this vertex.
    pub fn opposite(self) -> Side {
        Side::from_index(self.index())
    }

    /// The two other vertices in cyclic order.
    pub fn others(self) -> (Vertex, Vertex) {
        let i = self.index();
        (Vertex::from_index(i + 1), Vertex::from_index(i + 2))
    }
}

/// Side label; `Side::A` is the side `a` opposite vertex `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
    C,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::A, Side::B, Side::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Side {
        Side::ALL[i % 3]
    }

    pub fn opposite(self) -> Vertex {
        Vertex::from_index(self.index())
    }

    /// Endpoints `(from, to)`: `a = BC`, `b = CA`, `c = AB`.
    pub fn endpoints(self) -> (Vertex, Vertex) {
        self.opposite().others()
    }

    pub fn label(self) -> char {
        match self {
            Side::A => 'a',
            Side::B => 'b',
            Side::C => 'c',
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A small set of side labels.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SideSet(u8);

impl SideSet {
    pub const EMPTY: SideSet = SideSet(0);

    pub fn insert(&mut self, s: Side) {
        self.0 |= 1 << s.index();
    }

    pub fn contains(self, s: Side) -> bool {
        self.0 & (1 << s.index()) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Side> {
        Side::ALL.into_iter().filter(move |s| self.contains(*s))
    }
}

impl FromIterator<Side> for SideSet {
    fn from_iter<I: IntoIterator<Item = Side>>(iter: I) -> Self {
        let mut set = SideSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

/// Three pairwise distinct points of the unit surface.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triangle {
    vertices: [SurfacePoint; 3],
}

impl Triangle {
    pub fn new(a: SurfacePoint, b: SurfacePoint, c: SurfacePoint, tol: &Tolerances) -> Result<Self, GeometryError> {
        let vertices = [a, b, c];
        for i in 0..3 {
            let (p, q) = (vertices[i].coords(), vertices[(i + 1) % 3].coords());
            if coincide(p, q, tol) {
                return Err(GeometryError::DuplicateVertices);
            }
        }
        Ok(Triangle { vertices })
    }

    /// Validates raw coordinates (surface membership, distinctness).
    pub fn from_coords(coords: [MVec3; 3], tol: &Tolerances) -> Result<Self, GeometryError> {
        let [a, b, c] = coords;
        Triangle::new(
            SurfacePoint::new(a, tol)?,
            SurfacePoint::new(b, tol)?,
            SurfacePoint::new(c, tol)?,
            tol,
        )
    }

    pub fn vertex(&self, v: Vertex) -> &SurfacePoint {
        &self.vertices[v.index()]
    }

    pub fn vertices(&self) -> &[SurfacePoint; 3] {
        &self.vertices
    }

    pub fn coords(&self) -> [MVec3; 3] {
        self.vertices.map(|p| p.coords())
    }

    /// The endpoints of a side, in the order of [`Side::endpoints`].
    pub fn side_points(&self, s: Side) -> (&SurfacePoint, &SurfacePoint) {
        let (p, q) = s.endpoints();
        (self.vertex(p), self.vertex(q))
    }

    /// Reorders vertices: the new vertex `i` is the old vertex `perm[i]`.
    pub fn permuted(&self, perm: [usize; 3]) -> Triangle {
        Triangle { vertices: perm.map(|i| self.vertices[i]) }
    }

    /// Image under a linear map; the result is revalidated.
    pub fn transformed(&self, m: &Mat3, tol: &Tolerances) -> Result<Triangle, GeometryError> {
        Triangle::from_coords(self.coords().map(|x| m.apply(x)), tol)
    }

    /// `det(A, B, C)`.
    pub fn det(&self) -> f64 {
        let [a, b, c] = self.coords();
        mink::det3(a, b, c)
    }

    /// `|det(A, B, C)| / (|A||B||C|)`, a scale-free non-degeneracy measure.
    pub fn relative_det(&self) -> f64 {
        let [a, b, c] = self.coords();
        math::abs(mink::det3(a, b, c)) / (a.norm() * b.norm() * c.norm())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Hyperbolic,
    AntipodalHyperbolic,
    Proper,
    Strange,
}

/// Sub-kinds of proper (all vertices on `S¹,¹`) triangles without empty sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProperKind {
    SpatiolateralContractible,
    SpatiolateralNonContractible,
    /// Two spacelike sides, one timelike.
    Chorosceles,
    /// All sides timelike.
    Tempolateral,
    /// Two timelike sides, one spacelike.
    Chronosceles,
    /// All sides lightlike.
    Lucilateral,
    /// Two spacelike sides, one lightlike.
    BimetricalChorosceles,
    /// Two lightlike sides, one spacelike.
    PhotoscelesSpacelikeBase,
    /// Two timelike sides, one lightlike.
    BimetricalChronosceles,
    /// Two lightlike sides, one timelike.
    PhotoscelesTimelikeBase,
    /// One side of each kind.
    Multiple,
}

impl ProperKind {
    pub fn is_spatiolateral(self) -> bool {
        matches!(self, ProperKind::SpatiolateralContractible | ProperKind::SpatiolateralNonContractible)
    }

    /// Kinds with at least one lightlike side.
    pub fn has_lightlike_side(self) -> bool {
        matches!(
            self,
            ProperKind::Lucilateral
                | ProperKind::BimetricalChorosceles
                | ProperKind::PhotoscelesSpacelikeBase
                | ProperKind::BimetricalChronosceles
                | ProperKind::PhotoscelesTimelikeBase
                | ProperKind::Multiple
        )
    }
}

/// Classification label of a triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriangleClass {
    pub family: Family,
    /// Present iff the family is proper and no side is empty.
    pub proper_kind: Option<ProperKind>,
    /// Empty sides joining points of the same component.
    pub impossible_sides: SideSet,
    pub degenerate: bool,
}

impl TriangleClass {
    pub fn is_impossible(&self) -> bool {
        !self.impossible_sides.is_empty()
    }
}

/// Per-side data of a classified triangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SideReport {
    pub label: Side,
    pub kind: SegmentKind,
    pub length: ExtDistance,
    /// Causal type of the plane spanned by the endpoints; `None` for
    /// opposite endpoints.
    pub plane: Option<PlaneClass>,
    /// Endpoints on different components.
    pub strange: bool,
    /// Endpoints are antipodal (`X = −Y`).
    pub opposite_ends: bool,
}

/// Full classification: the label plus the data it was derived from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleClassification {
    pub class: TriangleClass,
    pub sides: [SideReport; 3],
    pub components: [Component; 3],
}

impl TriangleClassification {
    pub fn side(&self, s: Side) -> &SideReport {
        &self.sides[s.index()]
    }

    pub fn count_kind(&self, kind: SegmentKind) -> usize {
        self.sides.iter().filter(|s| s.kind == kind && !s.strange).count()
    }

    pub fn has_opposite_vertices(&self) -> bool {
        self.sides.iter().any(|s| s.opposite_ends)
    }

    /// Some side (empty or not) lies in a lightlike plane.
    pub fn has_lightlike_plane_side(&self) -> bool {
        self.sides.iter().any(|s| s.plane == Some(PlaneClass::Lightlike))
    }

    pub fn touches_de_sitter(&self) -> bool {
        self.components.contains(&Component::DeSitter)
    }

    /// Strange triangle with every vertex on `H² ∪ (−H²)`.
    pub fn is_strange_on_hyperbolic_sheets(&self) -> bool {
        self.class.family == Family::Strange && self.components.iter().all(|c| c.is_hyperbolic())
    }

    pub fn lengths(&self) -> [ExtDistance; 3] {
        self.sides.map(|s| s.length)
    }
}

fn side_report(t: &Triangle, s: Side, tol: &Tolerances) -> SideReport {
    let (p, q) = t.side_points(s);
    let opposite_ends = coincide(p.coords(), -q.coords(), tol);
    SideReport {
        label: s,
        kind: surface::segment_kind(p, q, tol),
        length: surface::distance(p, q, tol),
        plane: if opposite_ends { None } else { mink::classify_plane(p.coords(), q.coords(), tol).ok() },
        strange: p.component() != q.component(),
        opposite_ends,
    }
}

fn proper_kind_from_counts(spacelike: usize, timelike: usize, lightlike: usize) -> Option<ProperKind> {
    use ProperKind::*;
    Some(match (spacelike, timelike, lightlike) {
        (3, 0, 0) => SpatiolateralNonContractible, // refined by the caller
        (2, 1, 0) => Chorosceles,
        (0, 3, 0) => Tempolateral,
        (1, 2, 0) => Chronosceles,
        (0, 0, 3) => Lucilateral,
        (2, 0, 1) => BimetricalChorosceles,
        (1, 0, 2) => PhotoscelesSpacelikeBase,
        (0, 2, 1) => BimetricalChronosceles,
        (0, 1, 2) => PhotoscelesTimelikeBase,
        (1, 1, 1) => Multiple,
        _ => return None,
    })
}

/// Assigns the family from component membership and, for proper triangles
/// without empty sides, the sub-kind from the side types. Spatiolateral
/// triangles are split by [`is_contractible`].
pub fn classify_triangle(t: &Triangle, tol: &Tolerances) -> TriangleClassification {
    let sides = Side::ALL.map(|s| side_report(t, s, tol));
    let components = t.vertices().map(|p| p.component());
    let family = match components {
        [Component::H2, Component::H2, Component::H2] => Family::Hyperbolic,
        [Component::NegH2, Component::NegH2, Component::NegH2] => Family::AntipodalHyperbolic,
        [Component::DeSitter, Component::DeSitter, Component::DeSitter] => Family::Proper,
        _ => Family::Strange,
    };
    let impossible_sides: SideSet = sides
        .iter()
        .filter(|s| s.kind == SegmentKind::Empty && !s.strange)
        .map(|s| s.label)
        .collect();
    let degenerate = is_degenerate(t, tol);
    let mut proper_kind = None;
    if family == Family::Proper && impossible_sides.is_empty() {
        let count = |k| sides.iter().filter(|s| s.kind == k).count();
        proper_kind = proper_kind_from_counts(
            count(SegmentKind::DeSitterSpacelike),
            count(SegmentKind::DeSitterTimelike),
            count(SegmentKind::DeSitterLightlike),
        );
        if proper_kind == Some(ProperKind::SpatiolateralNonContractible) && winding_number_unchecked(t, tol) == 0 {
            proper_kind = Some(ProperKind::SpatiolateralContractible);
        }
    }
    TriangleClassification {
        class: TriangleClass { family, proper_kind, impossible_sides, degenerate },
        sides,
        components,
    }
}

/// `|det(A,B,C)| ≤ degen · |A||B||C|`: the vertices lie in a plane through
/// the origin.
pub fn is_degenerate(t: &Triangle, tol: &Tolerances) -> bool {
    t.relative_det() <= tol.degen
}

fn is_spatiolateral(t: &Triangle, tol: &Tolerances) -> bool {
    t.vertices().iter().all(|p| p.component() == Component::DeSitter)
        && Side::ALL.iter().all(|&s| {
            let (p, q) = t.side_points(s);
            surface::segment_kind(p, q, tol) == SegmentKind::DeSitterSpacelike
        })
}

const WINDING_SAMPLES: usize = 256;
const MAX_REFINE_DEPTH: u32 = 24;

#[inline]
fn projected(x: MVec3) -> (f64, f64) {
    (x.x2, x.x3)
}

/// Signed angle swept (about the origin of the `e2`-`e3` plane) between two
/// projected points.
#[inline]
fn sweep(p: (f64, f64), q: (f64, f64)) -> f64 {
    math::atan2(p.0 * q.1 - p.1 * q.0, p.0 * q.0 + p.1 * q.1)
}

fn refined_sweep(seg: &Segment, t0: f64, t1: f64, depth: u32) -> f64 {
    let p = projected(seg.point_unchecked(t0));
    let q = projected(seg.point_unchecked(t1));
    let d = sweep(p, q);
    if math::abs(d) <= PI / 2.0 || depth >= MAX_REFINE_DEPTH {
        return d;
    }
    let mid = 0.5 * (t0 + t1);
    refined_sweep(seg, t0, mid, depth + 1) + refined_sweep(seg, mid, t1, depth + 1)
}

/// Total signed angle swept by the projection of the segment `p → q`.
fn segment_sweep(p: &SurfacePoint, q: &SurfacePoint, tol: &Tolerances) -> f64 {
    let Ok(seg) = Segment::new(p, q, tol) else {
        return 0.0;
    };
    let n = WINDING_SAMPLES;
    let h = seg.bound() / n as f64;
    (0..n).map(|i| refined_sweep(&seg, h * i as f64, h * (i + 1) as f64, 0)).sum()
}

fn winding_number_unchecked(t: &Triangle, tol: &Tolerances) -> i32 {
    let total: f64 = Side::ALL
        .iter()
        .map(|&s| {
            // traverse c = A→B, a = B→C, b = C→A
            let (p, q) = t.side_points(s);
            segment_sweep(p, q, tol)
        })
        .sum();
    libm::round(total / TAU) as i32
}

/// Winding number about the `e1` axis of the closed curve formed by the
/// three spacelike sides, measured in the `e2`-`e3` projection.
///
/// Points of `S¹,¹` project to `x₂² + x₃² = 1 + x₁² ≥ 1`, so the curve never
/// passes through the origin and the number is always defined.
pub fn winding_number(t: &Triangle, tol: &Tolerances) -> Result<i32, GeometryError> {
    if !is_spatiolateral(t, tol) {
        return Err(GeometryError::NotSpatiolateral);
    }
    Ok(winding_number_unchecked(t, tol))
}

/// A spatiolateral triangle is contractible iff its boundary does not wind
/// around the `e1` axis.
pub fn is_contractible(t: &Triangle, tol: &Tolerances) -> Result<bool, GeometryError> {
    Ok(winding_number(t, tol)? == 0)
}

/// The projected vertices lie strictly on one side of some line through the
/// origin of the `e2`-`e3` plane.
pub fn projected_vertices_in_half_plane(t: &Triangle) -> bool {
    let mut angles = t.coords().map(|x| math::atan2(x.x3, x.x2));
    angles.sort_by(f64::total_cmp);
    let gaps = [angles[1] - angles[0], angles[2] - angles[1], angles[0] + TAU - angles[2]];
    gaps.iter().any(|&g| g > PI)
}

/// The unique vertex of a tempolateral triangle whose tangent vectors toward
/// the other two vertices have first components of opposite sign.
///
/// Fails with [`GeometryError::DegenerateTriangle`] if a sign is ambiguous or
/// the vertex is not unique.
pub fn tempolateral_apex(t: &Triangle, tol: &Tolerances) -> Result<Vertex, GeometryError> {
    let mut apex = None;
    for v in Vertex::ALL {
        let (p, q) = v.others();
        let x = surface::tangent_vector(t.vertex(v), t.vertex(p), tol)?;
        let y = surface::tangent_vector(t.vertex(v), t.vertex(q), tol)?;
        if math::abs(x.x1) <= tol.light * x.norm().max(1.0) || math::abs(y.x1) <= tol.light * y.norm().max(1.0) {
            return Err(GeometryError::DegenerateTriangle);
        }
        if (x.x1 > 0.0) != (y.x1 > 0.0) {
            if apex.is_some() {
                return Err(GeometryError::DegenerateTriangle);
            }
            apex = Some(v);
        }
    }
    apex.ok_or(GeometryError::DegenerateTriangle)
}

/// Outcome of checking `d(A,B) + d(B,C) ≥ d(A,C)` for all three orderings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InequalityReport {
    pub holds: bool,
    /// Side lengths `(a, b, c)`.
    pub lengths: [ExtDistance; 3],
    /// Verdict implied by the classification, where one is known.
    pub predicted: Option<bool>,
}

fn pair_dominates(x: ExtDistance, y: ExtDistance, z: ExtDistance, slack: f64) -> bool {
    match (x + y, z) {
        (ExtDistance::Infinite, _) => true,
        (ExtDistance::Finite(_), ExtDistance::Infinite) => false,
        (ExtDistance::Finite(s), ExtDistance::Finite(z)) => s >= z - slack * z.max(1.0),
    }
}

/// Whether the triangle inequality holds for the given side lengths, with
/// `+∞` absorbing and a relative slack for round-off.
pub fn inequality_holds(lengths: [ExtDistance; 3], slack: f64) -> bool {
    let [a, b, c] = lengths;
    pair_dominates(a, b, c, slack) && pair_dominates(b, c, a, slack) && pair_dominates(c, a, b, slack)
}

/// Number of sides strictly longer than the sum of the other two.
pub fn dominant_sides(lengths: [f64; 3]) -> usize {
    (0..3).filter(|&i| lengths[i] > lengths[(i + 1) % 3] + lengths[(i + 2) % 3]).count()
}

fn predicted_inequality(c: &TriangleClassification, tol: &Tolerances) -> Option<bool> {
    let class = &c.class;
    match class.family {
        Family::Hyperbolic | Family::AntipodalHyperbolic | Family::Strange => return Some(true),
        Family::Proper => {}
    }
    if class.is_impossible() {
        let infinite = c.sides.iter().filter(|s| !s.length.is_finite()).count();
        return Some(infinite != 1);
    }
    if class.degenerate {
        return Some(true);
    }
    use ProperKind::*;
    match class.proper_kind? {
        SpatiolateralNonContractible | Lucilateral => Some(true),
        SpatiolateralContractible | Tempolateral | PhotoscelesSpacelikeBase | PhotoscelesTimelikeBase => Some(false),
        BimetricalChorosceles | BimetricalChronosceles => {
            let legs: [f64; 2] = {
                let mut it = c.sides.iter().filter(|s| s.kind != SegmentKind::DeSitterLightlike).map(|s| s.length.value());
                [it.next()?, it.next()?]
            };
            Some(math::abs(legs[0] - legs[1]) <= tol.clamp * legs[0].max(legs[1]).max(1.0))
        }
        Chorosceles | Chronosceles | Multiple => None,
    }
}

pub fn triangle_inequality_report(t: &Triangle, tol: &Tolerances) -> InequalityReport {
    let c = classify_triangle(t, tol);
    inequality_report_for(&c, tol)
}

/// [`triangle_inequality_report`] for an existing classification.
pub fn inequality_report_for(c: &TriangleClassification, tol: &Tolerances) -> InequalityReport {
    let lengths = c.lengths();
    InequalityReport { holds: inequality_holds(lengths, tol.clamp), lengths, predicted: predicted_inequality(c, tol) }
}
