//! Seeded random points and triangles of each type, and a quadrature oracle
//! for segment lengths.
//!
//! Parameters are drawn uniformly (rapidities on `[0, max_rapidity]`,
//! angles on `[0, 2π)`); the distributions are not invariant measures.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GeometryError;
use crate::lorentz::{random_lorentz_with, Mat3, MAX_RAPIDITY};
use crate::math::{self, cos, cosh, sin, sinh, sqrt};
use crate::mink::MVec3;
use crate::surface::{self, Component, SegmentKind, SurfacePoint};
use crate::tolerance::Tolerances;
use crate::triangle::{classify_triangle, Family, ProperKind, Triangle, TriangleClassification};
use crate::trig;

/// Default number of candidates tried before giving up.
pub const DEFAULT_REJECTION_BUDGET: u64 = 1_000_000;

/// Smallest accepted `|det(A,B,C)| / (|A||B||C|)` for non-degenerate targets.
const MIN_RELATIVE_DET: f64 = 1e-6;
/// Smallest accepted relative gap between a side product and `±1`.
const MIN_SIDE_MARGIN: f64 = 1e-6;
/// Smallest accepted distance of a side or angle from `0` (and from `π`
/// where that is singular) for families with trigonometric laws.
const MIN_FEATURE: f64 = 1e-2;

/// Target type of a triangle sampler.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SampleFamily {
    Hyperbolic,
    AntipodalHyperbolic,
    SpatiolateralContractible,
    SpatiolateralNonContractible,
    Chorosceles,
    Chronosceles,
    Tempolateral,
    Lucilateral,
    BimetricalChorosceles,
    PhotoscelesSpacelikeBase,
    BimetricalChronosceles,
    PhotoscelesTimelikeBase,
    Multiple,
    /// Proper with at least one empty side.
    Impossible,
    /// Strange with every vertex on `H² ∪ (−H²)`.
    StrangeHyperbolic,
    /// Strange with a vertex on `S¹,¹` and no antipodal pair.
    StrangeDeSitter,
    /// Strange with an antipodal pair of vertices.
    StrangeOpposite,
    /// Any triangle whose vertices span only a plane.
    Degenerate,
}

impl SampleFamily {
    pub const ALL: [SampleFamily; 18] = [
        SampleFamily::Hyperbolic,
        SampleFamily::AntipodalHyperbolic,
        SampleFamily::SpatiolateralContractible,
        SampleFamily::SpatiolateralNonContractible,
        SampleFamily::Chorosceles,
        SampleFamily::Chronosceles,
        SampleFamily::Tempolateral,
        SampleFamily::Lucilateral,
        SampleFamily::BimetricalChorosceles,
        SampleFamily::PhotoscelesSpacelikeBase,
        SampleFamily::BimetricalChronosceles,
        SampleFamily::PhotoscelesTimelikeBase,
        SampleFamily::Multiple,
        SampleFamily::Impossible,
        SampleFamily::StrangeHyperbolic,
        SampleFamily::StrangeDeSitter,
        SampleFamily::StrangeOpposite,
        SampleFamily::Degenerate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SampleFamily::Hyperbolic => "hyperbolic",
            SampleFamily::AntipodalHyperbolic => "antipodal-hyperbolic",
            SampleFamily::SpatiolateralContractible => "spatiolateral-contractible",
            SampleFamily::SpatiolateralNonContractible => "spatiolateral-noncontractible",
            SampleFamily::Chorosceles => "chorosceles",
            SampleFamily::Chronosceles => "chronosceles",
            SampleFamily::Tempolateral => "tempolateral",
            SampleFamily::Lucilateral => "lucilateral",
            SampleFamily::BimetricalChorosceles => "bimetrical-chorosceles",
            SampleFamily::PhotoscelesSpacelikeBase => "photosceles-spacelike-base",
            SampleFamily::BimetricalChronosceles => "bimetrical-chronosceles",
            SampleFamily::PhotoscelesTimelikeBase => "photosceles-timelike-base",
            SampleFamily::Multiple => "multiple",
            SampleFamily::Impossible => "impossible",
            SampleFamily::StrangeHyperbolic => "strange-hyperbolic",
            SampleFamily::StrangeDeSitter => "strange-de-sitter",
            SampleFamily::StrangeOpposite => "strange-opposite",
            SampleFamily::Degenerate => "degenerate",
        }
    }

    pub fn from_name(name: &str) -> Option<SampleFamily> {
        SampleFamily::ALL.into_iter().find(|f| f.name() == name)
    }

    fn proper_kind(self) -> Option<ProperKind> {
        Some(match self {
            SampleFamily::SpatiolateralContractible => ProperKind::SpatiolateralContractible,
            SampleFamily::SpatiolateralNonContractible => ProperKind::SpatiolateralNonContractible,
            SampleFamily::Chorosceles => ProperKind::Chorosceles,
            SampleFamily::Chronosceles => ProperKind::Chronosceles,
            SampleFamily::Tempolateral => ProperKind::Tempolateral,
            SampleFamily::Lucilateral => ProperKind::Lucilateral,
            SampleFamily::BimetricalChorosceles => ProperKind::BimetricalChorosceles,
            SampleFamily::PhotoscelesSpacelikeBase => ProperKind::PhotoscelesSpacelikeBase,
            SampleFamily::BimetricalChronosceles => ProperKind::BimetricalChronosceles,
            SampleFamily::PhotoscelesTimelikeBase => ProperKind::PhotoscelesTimelikeBase,
            SampleFamily::Multiple => ProperKind::Multiple,
            _ => return None,
        })
    }

    /// Whether a classification belongs to this family.
    pub fn matches(self, c: &TriangleClassification) -> bool {
        let class = &c.class;
        if let Some(kind) = self.proper_kind() {
            return class.family == Family::Proper && class.proper_kind == Some(kind);
        }
        match self {
            SampleFamily::Hyperbolic => class.family == Family::Hyperbolic,
            SampleFamily::AntipodalHyperbolic => class.family == Family::AntipodalHyperbolic,
            SampleFamily::Impossible => class.family == Family::Proper && class.is_impossible(),
            SampleFamily::StrangeHyperbolic => c.is_strange_on_hyperbolic_sheets(),
            SampleFamily::StrangeDeSitter => {
                class.family == Family::Strange && c.touches_de_sitter() && !c.has_opposite_vertices()
            }
            SampleFamily::StrangeOpposite => class.family == Family::Strange && c.has_opposite_vertices(),
            SampleFamily::Degenerate => class.degenerate,
            _ => false,
        }
    }

    fn always_degenerate(self) -> bool {
        matches!(self, SampleFamily::Lucilateral | SampleFamily::StrangeOpposite | SampleFamily::Degenerate)
    }

    /// One of the four families covered by the laws of cosines and sines.
    pub fn has_trig_laws(self) -> bool {
        matches!(
            self,
            SampleFamily::Hyperbolic
                | SampleFamily::AntipodalHyperbolic
                | SampleFamily::SpatiolateralContractible
                | SampleFamily::SpatiolateralNonContractible
                | SampleFamily::Tempolateral
        )
    }
}

impl fmt::Display for SampleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleSpec {
    pub family: SampleFamily,
    pub count: usize,
    pub seed: u64,
    pub max_rapidity: f64,
    pub rejection_budget: u64,
}

impl SampleSpec {
    pub fn new(family: SampleFamily, count: usize, seed: u64) -> Self {
        SampleSpec { family, count, seed, max_rapidity: MAX_RAPIDITY, rejection_budget: DEFAULT_REJECTION_BUDGET }
    }
}

/// `(cosh u, sinh u cos θ, sinh u sin θ)` on `H²`, `(sinh v, cosh v cos θ,
/// cosh v sin θ)` on `S¹,¹`, and the negated hyperbolic form on `−H²`.
pub fn point_from_params(component: Component, r: f64, theta: f64) -> MVec3 {
    let (c, s) = (cos(theta), sin(theta));
    match component {
        Component::H2 => MVec3::new(cosh(r), sinh(r) * c, sinh(r) * s),
        Component::NegH2 => -MVec3::new(cosh(r), sinh(r) * c, sinh(r) * s),
        Component::DeSitter => MVec3::new(sinh(r), cosh(r) * c, cosh(r) * s),
    }
}

fn uniform<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.random::<f64>()
}

fn on_surface(x: MVec3) -> SurfacePoint {
    SurfacePoint::new(x, &Tolerances::DEFAULT).expect("parametrized point lies on the surface")
}

/// A point on `component` with rapidity parameter at most `max_rapidity` in
/// absolute value.
pub fn sample_point<R: Rng + ?Sized>(rng: &mut R, component: Component, max_rapidity: f64) -> SurfacePoint {
    let r = match component {
        Component::DeSitter => uniform(rng, -max_rapidity, max_rapidity),
        _ => uniform(rng, 0.0, max_rapidity),
    };
    on_surface(point_from_params(component, r, uniform(rng, 0.0, TAU)))
}

/// Rulings through `e2`: `e2 + t·L` for the two lightlike `L`.
const RULING_UP: MVec3 = MVec3::new(1.0, 0.0, 1.0);
const RULING_DOWN: MVec3 = MVec3::new(1.0, 0.0, -1.0);

fn nonzero<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    let x = uniform(rng, lo, hi);
    if rng.random::<bool>() {
        x
    } else {
        -x
    }
}

/// Raw vertex coordinates of a candidate, before the random Lorentz map.
fn candidate<R: Rng + ?Sized>(rng: &mut R, family: SampleFamily, max_rapidity: f64) -> [MVec3; 3] {
    use Component::{DeSitter, NegH2, H2};
    let point = |rng: &mut R, c, r| sample_point(rng, c, r).coords();
    let e2 = MVec3::E2;
    match family {
        SampleFamily::Hyperbolic | SampleFamily::AntipodalHyperbolic => {
            let c = if family == SampleFamily::Hyperbolic { H2 } else { NegH2 };
            [point(rng, c, max_rapidity), point(rng, c, max_rapidity), point(rng, c, max_rapidity)]
        }
        SampleFamily::StrangeHyperbolic => {
            let flip = rng.random_range(0..3);
            let two = rng.random::<bool>();
            core::array::from_fn(|i| {
                let p = point(rng, H2, max_rapidity);
                if i == flip || (two && i == (flip + 1) % 3) {
                    -p
                } else {
                    p
                }
            })
        }
        SampleFamily::StrangeDeSitter => {
            let comps = [H2, NegH2, DeSitter];
            let mut c: [Component; 3] = core::array::from_fn(|_| comps[rng.random_range(0..3)]);
            c[rng.random_range(0..3)] = DeSitter;
            core::array::from_fn(|i| point(rng, c[i], max_rapidity))
        }
        SampleFamily::StrangeOpposite => {
            let sheet = if rng.random::<bool>() { H2 } else { NegH2 };
            let p = point(rng, sheet, max_rapidity);
            let other = [H2, NegH2, DeSitter][rng.random_range(0..3)];
            let q = point(rng, other, max_rapidity);
            [p, -p, q]
        }
        SampleFamily::SpatiolateralContractible | SampleFamily::SpatiolateralNonContractible => {
            // near the waist circle: three directions all around it, or
            // within a half-turn
            let theta: [f64; 3] = if family == SampleFamily::SpatiolateralNonContractible {
                let base = uniform(rng, 0.0, TAU);
                core::array::from_fn(|i| base + TAU * i as f64 / 3.0 + uniform(rng, -0.6, 0.6))
            } else {
                let base = uniform(rng, 0.0, TAU);
                core::array::from_fn(|_| base + uniform(rng, 0.0, 0.95 * PI))
            };
            theta.map(|t| point_from_params(DeSitter, uniform(rng, -0.6, 0.6), t))
        }
        SampleFamily::Tempolateral => {
            let (s1, s2) = (uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
            let x1 = MVec3::new(cosh(s1), 0.0, sinh(s1));
            let x2 = MVec3::new(-cosh(s2), 0.0, sinh(s2));
            let (c, b) = (uniform(rng, 0.05, 1.5), uniform(rng, 0.05, 1.5));
            [e2, e2 * cosh(c) + x1 * sinh(c), e2 * cosh(b) + x2 * sinh(b)]
        }
        SampleFamily::Lucilateral => {
            let t = [uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)];
            t.map(|t| e2 + RULING_UP * t)
        }
        SampleFamily::PhotoscelesSpacelikeBase | SampleFamily::PhotoscelesTimelikeBase => {
            // <B, C> = 1 − 2ts: spacelike base for 0 < ts < 1, timelike for ts < 0
            let t = nonzero(rng, 0.1, 2.0);
            let s = if family == SampleFamily::PhotoscelesSpacelikeBase {
                uniform(rng, 0.05, 0.95) / t
            } else {
                -uniform(rng, 0.05, 2.0) * t.signum()
            };
            [e2, e2 + RULING_UP * t, e2 + RULING_DOWN * s]
        }
        SampleFamily::BimetricalChorosceles | SampleFamily::BimetricalChronosceles | SampleFamily::Multiple => {
            let t = nonzero(rng, 0.1, 2.0);
            [e2, e2 + RULING_UP * t, point(rng, DeSitter, 1.5)]
        }
        SampleFamily::Chorosceles | SampleFamily::Chronosceles | SampleFamily::Impossible => {
            [point(rng, DeSitter, 1.5), point(rng, DeSitter, 1.5), point(rng, DeSitter, 1.5)]
        }
        SampleFamily::Degenerate => {
            let s: [f64; 3] = core::array::from_fn(|_| uniform(rng, -2.0, 2.0));
            match rng.random_range(0..3) {
                // great circle of a spacelike plane
                0 => s.map(|s| MVec3::new(0.0, cos(s * PI), sin(s * PI))),
                // timelike plane: hyperbolic geodesic and de Sitter hyperbola
                1 => core::array::from_fn(|i| {
                    let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
                    if rng.random::<bool>() {
                        MVec3::new(cosh(s[i]), sinh(s[i]), 0.0) * sign
                    } else {
                        MVec3::new(sinh(s[i]), cosh(s[i]), 0.0) * sign
                    }
                }),
                // lightlike plane: both rulings of the pair
                _ => core::array::from_fn(|i| {
                    let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
                    (e2 + RULING_UP * s[i]) * sign
                }),
            }
        }
    }
}

fn side_margins_ok(t: &Triangle, c: &TriangleClassification) -> bool {
    c.sides.iter().all(|s| {
        let (p, q) = t.side_points(s.label);
        if p.component() != Component::DeSitter
            || q.component() != Component::DeSitter
            || s.kind == SegmentKind::DeSitterLightlike
        {
            return true;
        }
        let (p, q) = (p.coords(), q.coords());
        let scale = (p.norm() * q.norm()).max(1.0);
        let d = p.mdot(q);
        math::abs(d - 1.0) > MIN_SIDE_MARGIN * scale && math::abs(d + 1.0) > MIN_SIDE_MARGIN * scale
    })
}

fn accept(t: &Triangle, family: SampleFamily, tol: &Tolerances) -> bool {
    let c = classify_triangle(t, tol);
    if !family.matches(&c) {
        return false;
    }
    if family.always_degenerate() {
        return true;
    }
    if c.class.degenerate || t.relative_det() < MIN_RELATIVE_DET || !side_margins_ok(t, &c) {
        return false;
    }
    !family.has_trig_laws() || trig::measure(t, tol).is_ok_and(|m| well_conditioned(&m))
}

fn well_conditioned(m: &trig::TriangleMeasurements) -> bool {
    let away = |x: f64| x >= MIN_FEATURE;
    let below_pi = |x: f64| x <= PI - MIN_FEATURE;
    let sides = m.sides.iter().all(|&x| away(x));
    let angles = m.angles.iter().all(|&x| away(x));
    sides
        && angles
        && match m.family {
            trig::TrigFamily::Hyp => m.angles.iter().all(|&x| below_pi(x)),
            trig::TrigFamily::SpatioNC | trig::TrigFamily::SpatioC => m.sides.iter().all(|&x| below_pi(x)),
            trig::TrigFamily::Tempo => true,
        }
}

/// Draws one candidate and maps it by a random Lorentz transformation.
fn draw<R: Rng + ?Sized>(rng: &mut R, spec: &SampleSpec, tol: &Tolerances) -> Option<Triangle> {
    let raw = candidate(rng, spec.family, spec.max_rapidity);
    let m = match spec.family {
        // three independent points already cover the sheet
        SampleFamily::Hyperbolic | SampleFamily::AntipodalHyperbolic | SampleFamily::StrangeHyperbolic => {
            Mat3::IDENTITY
        }
        _ => random_lorentz_with(rng, false, spec.max_rapidity),
    };
    // renormalize to remove the rounding the map introduces
    let image = raw.map(|x| {
        let y = m.apply(x);
        y * (1.0 / sqrt(math::abs(y.msq())))
    });
    // stacking the map on the point rapidities would otherwise double the reach
    let reach = core::f64::consts::SQRT_2 * cosh(spec.max_rapidity);
    if image.iter().any(|x| x.norm() > reach) {
        return None;
    }
    let t = Triangle::from_coords(image, tol).ok()?;
    accept(&t, spec.family, tol).then_some(t)
}

/// Triangles of `spec.family`, each validated by [`classify_triangle`].
///
/// Identical specs give identical batches.
pub fn sample_triangles(spec: &SampleSpec, tol: &Tolerances) -> Result<Vec<Triangle>, GeometryError> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    let mut attempts = 0u64;
    while out.len() < spec.count {
        if attempts >= spec.rejection_budget {
            return Err(GeometryError::RejectionBudgetExhausted { attempts, accepted: out.len() });
        }
        attempts += 1;
        if let Some(t) = draw(&mut rng, spec, tol) {
            out.push(t);
        }
    }
    Ok(out)
}

/// Length of the segment from `a` to `b` by composite Simpson quadrature
/// with `steps` intervals.
///
/// The curve integrated is the central projection of the chord
/// `(1−s)a + s·b` onto the surface, which traces the same geodesic arc as
/// [`surface::segment_point`] but at non-constant speed.
pub fn arc_length_oracle(a: &SurfacePoint, b: &SurfacePoint, steps: usize, tol: &Tolerances) -> Result<f64, GeometryError> {
    match surface::segment_kind(a, b, tol) {
        SegmentKind::Empty => return Err(GeometryError::EmptySegment),
        SegmentKind::DeSitterLightlike => return Err(GeometryError::LightlikeSegment),
        SegmentKind::Point => return Ok(0.0),
        _ => {}
    }
    let (x, y) = (a.coords(), b.coords());
    let sigma = if a.component() == Component::DeSitter { 1.0 } else { -1.0 };
    let dq = y - x;
    let speed = |s: f64| {
        let q = x * (1.0 - s) + y * s;
        let n2 = sigma * q.msq();
        let n = sqrt(n2);
        let dp = dq * (1.0 / n) - q * (sigma * q.mdot(dq) / (n2 * n));
        sqrt(math::abs(dp.msq()))
    };
    let n = (steps.max(2) + 1) & !1;
    let h = 1.0 / n as f64;
    let inner: f64 = (1..n).map(|i| speed(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 }).sum();
    Ok(h / 3.0 * (speed(0.0) + inner + speed(1.0)))
}
