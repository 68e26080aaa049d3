//! Laws of cosines and sines and the sum theorems for hyperbolic,
//! spatiolateral and tempolateral triangles.
//!
//! Side `a` is opposite vertex `A` and `α` is the angle at `A`; indices
//! `0, 1, 2` below stand for `A, B, C` (and `a, b, c`).

use core::f64::consts::{PI, TAU};

use crate::error::GeometryError;
use crate::math::{cos, cosh, sin, sinh};
use crate::polar::{polar_triangle, Polar};
use crate::surface::{self, SurfacePoint};
use crate::tolerance::Tolerances;
use crate::triangle::{classify_triangle, tempolateral_apex, Family, ProperKind, Side, Triangle, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrigFamily {
    /// Hyperbolic or antipodal hyperbolic.
    Hyp,
    SpatioNC,
    SpatioC,
    Tempo,
}

impl TrigFamily {
    pub const ALL: [TrigFamily; 4] = [TrigFamily::Hyp, TrigFamily::SpatioNC, TrigFamily::SpatioC, TrigFamily::Tempo];

    pub fn name(self) -> &'static str {
        match self {
            TrigFamily::Hyp => "hyperbolic",
            TrigFamily::SpatioNC => "spatiolateral-noncontractible",
            TrigFamily::SpatioC => "spatiolateral-contractible",
            TrigFamily::Tempo => "tempolateral",
        }
    }
}

/// Sides and angles of a triangle in one of the four trigonometric families.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleMeasurements {
    pub family: TrigFamily,
    /// `(a, b, c)`.
    pub sides: [f64; 3],
    /// `(α, β, γ)`, non-negative.
    pub angles: [f64; 3],
    /// Minkowski product of the two unit tangents at each vertex.
    pub tangent_products: [f64; 3],
    /// Tempolateral only: the vertex whose tangents point into opposite
    /// halves of the light cone.
    pub apex: Option<Vertex>,
    /// Contractible spatiolateral only: the side whose polar side joins two
    /// points on the same hyperbolic sheet.
    pub polar_anchor: Option<Side>,
}

impl TriangleMeasurements {
    /// Index of the apex or anchor vertex, if any.
    pub fn special_vertex(&self) -> Option<usize> {
        self.apex.map(Vertex::index).or(self.polar_anchor.map(|s| s.opposite().index()))
    }

    /// Angles signed by the tangent products on `S¹,¹`: `−sign(p)·θ`.
    ///
    /// Hyperbolic angles are returned unchanged.
    pub fn signed_angles(&self) -> [f64; 3] {
        match self.family {
            TrigFamily::Hyp => self.angles,
            _ => core::array::from_fn(|i| {
                if self.tangent_products[i] < 0.0 {
                    self.angles[i]
                } else {
                    -self.angles[i]
                }
            }),
        }
    }
}

fn trig_family(t: &Triangle, tol: &Tolerances) -> Result<TrigFamily, GeometryError> {
    let c = classify_triangle(t, tol);
    if c.class.degenerate {
        return Err(GeometryError::DegenerateTriangle);
    }
    match (c.class.family, c.class.proper_kind) {
        (Family::Hyperbolic | Family::AntipodalHyperbolic, _) => Ok(TrigFamily::Hyp),
        (Family::Proper, Some(ProperKind::SpatiolateralNonContractible)) => Ok(TrigFamily::SpatioNC),
        (Family::Proper, Some(ProperKind::SpatiolateralContractible)) => Ok(TrigFamily::SpatioC),
        (Family::Proper, Some(ProperKind::Tempolateral)) => Ok(TrigFamily::Tempo),
        _ => Err(GeometryError::UnsupportedFamily),
    }
}

/// The vertex `A` whose polar vertex `A′` lies alone on its hyperbolic
/// sheet; reported as side `a`.
fn polar_anchor(t: &Triangle, tol: &Tolerances) -> Result<Side, GeometryError> {
    let v = match polar_triangle(t, tol)? {
        Polar::Triangle { vertices, .. } => vertices,
        Polar::Zero => return Err(GeometryError::DegenerateTriangle),
    };
    let up = v.map(|x| x.x1 > 0.0);
    (0..3)
        .find(|&i| up[i] != up[(i + 1) % 3] && up[(i + 1) % 3] == up[(i + 2) % 3])
        .map(Side::from_index)
        .ok_or(GeometryError::DegenerateTriangle)
}

fn vertex_triple(t: &Triangle, v: Vertex) -> (&SurfacePoint, &SurfacePoint, &SurfacePoint) {
    let (p, q) = v.others();
    (t.vertex(p), t.vertex(v), t.vertex(q))
}

/// Sides from [`surface::distance`], angles from [`surface::angle`].
pub fn measure(t: &Triangle, tol: &Tolerances) -> Result<TriangleMeasurements, GeometryError> {
    let family = trig_family(t, tol)?;
    let mut sides = [0.0; 3];
    for s in Side::ALL {
        let (p, q) = t.side_points(s);
        sides[s.index()] = surface::distance(p, q, tol).finite().ok_or(GeometryError::InfiniteSeparation)?;
    }
    let mut angles = [0.0; 3];
    let mut tangent_products = [0.0; 3];
    for v in Vertex::ALL {
        let (p, a, q) = vertex_triple(t, v);
        angles[v.index()] = surface::angle(p, a, q, tol)?;
        tangent_products[v.index()] = surface::tangent_product(p, a, q, tol)?;
    }
    let apex = if family == TrigFamily::Tempo { Some(tempolateral_apex(t, tol)?) } else { None };
    let polar_anchor = if family == TrigFamily::SpatioC { Some(polar_anchor(t, tol)?) } else { None };
    Ok(TriangleMeasurements { family, sides, angles, tangent_products, apex, polar_anchor })
}

/// Sign of the last term of equation `i`, for families whose sign depends on
/// the apex or anchor.
fn sign_at(m: &TriangleMeasurements, i: usize, special: f64, other: f64) -> f64 {
    if m.special_vertex() == Some(i) {
        special
    } else {
        other
    }
}

/// `|LHS − RHS|` of the three laws of cosines for sides.
///
/// * Hyp: `cosh a = cosh b cosh c − cos α sinh b sinh c`
/// * SpatioNC: `cos a = cos b cos c − cosh α sin b sin c`
/// * SpatioC: as SpatioNC at the anchor, `+` elsewhere
/// * Tempo: `cosh a = cosh b cosh c + cosh α sinh b sinh c` at the apex,
///   `−` elsewhere
pub fn lcs_residuals(m: &TriangleMeasurements) -> [f64; 3] {
    let [x, th] = [m.sides, m.angles];
    core::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let (lhs, rhs) = match m.family {
            TrigFamily::Hyp => (cosh(x[i]), cosh(x[j]) * cosh(x[k]) - cos(th[i]) * sinh(x[j]) * sinh(x[k])),
            TrigFamily::SpatioNC | TrigFamily::SpatioC => {
                let s = if m.family == TrigFamily::SpatioNC { -1.0 } else { sign_at(m, i, -1.0, 1.0) };
                (cos(x[i]), cos(x[j]) * cos(x[k]) + s * cosh(th[i]) * sin(x[j]) * sin(x[k]))
            }
            TrigFamily::Tempo => {
                let s = sign_at(m, i, 1.0, -1.0);
                (cosh(x[i]), cosh(x[j]) * cosh(x[k]) + s * cosh(th[i]) * sinh(x[j]) * sinh(x[k]))
            }
        };
        (lhs - rhs).abs()
    })
}

/// `|LHS − RHS|` of the three laws of cosines for angles.
///
/// * Hyp: `cos α = −cos β cos γ + cosh a sin β sin γ`
/// * SpatioNC: `cosh α = cosh β cosh γ + cos a sinh β sinh γ`
/// * SpatioC: as SpatioNC at the anchor, `−` elsewhere
/// * Tempo: `cosh α = cosh β cosh γ + cosh a sinh β sinh γ` at the apex,
///   `−` elsewhere
pub fn lca_residuals(m: &TriangleMeasurements) -> [f64; 3] {
    let [x, th] = [m.sides, m.angles];
    core::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let (lhs, rhs) = match m.family {
            TrigFamily::Hyp => (cos(th[i]), -cos(th[j]) * cos(th[k]) + cosh(x[i]) * sin(th[j]) * sin(th[k])),
            TrigFamily::SpatioNC | TrigFamily::SpatioC => {
                let s = if m.family == TrigFamily::SpatioNC { 1.0 } else { sign_at(m, i, 1.0, -1.0) };
                (cosh(th[i]), cosh(th[j]) * cosh(th[k]) + s * cos(x[i]) * sinh(th[j]) * sinh(th[k]))
            }
            TrigFamily::Tempo => {
                let s = sign_at(m, i, 1.0, -1.0);
                (cosh(th[i]), cosh(th[j]) * cosh(th[k]) + s * cosh(x[i]) * sinh(th[j]) * sinh(th[k]))
            }
        };
        (lhs - rhs).abs()
    })
}

/// The three law-of-sines ratios; they agree for a valid triangle.
///
/// On `S¹,¹` the angles are signed (see
/// [`TriangleMeasurements::signed_angles`]) and the ratio at the anchor or
/// apex is negated: `−sinh α̃ / sin a = sinh β̃ / sin b = …`.
pub fn sines_report(m: &TriangleMeasurements) -> Result<[f64; 3], GeometryError> {
    let th = m.signed_angles();
    let mut out = [0.0; 3];
    for i in 0..3 {
        let x = m.sides[i];
        let (num, den) = match m.family {
            TrigFamily::Hyp => (sin(th[i]), sinh(x)),
            TrigFamily::SpatioNC => (sinh(th[i]), sin(x)),
            TrigFamily::SpatioC => (sign_at(m, i, -1.0, 1.0) * sinh(th[i]), sin(x)),
            TrigFamily::Tempo => (sign_at(m, i, -1.0, 1.0) * sinh(th[i]), sinh(x)),
        };
        if den.abs() < f64::EPSILON {
            return Err(GeometryError::DegenerateTriangle);
        }
        out[i] = num / den;
    }
    Ok(out)
}

/// Largest pairwise difference of the sines ratios, relative to the largest
/// ratio when that exceeds 1 (the ratios are unbounded).
pub fn sines_residual(ratios: [f64; 3]) -> f64 {
    let [x, y, z] = ratios;
    let spread = (x - y).abs().max((y - z).abs()).max((z - x).abs());
    spread / x.abs().max(y.abs()).max(z.abs()).max(1.0)
}

/// `α + β + γ` of a hyperbolic triangle (less than `π`).
pub fn angle_sum_check(m: &TriangleMeasurements) -> Result<f64, GeometryError> {
    match m.family {
        TrigFamily::Hyp => Ok(m.angles.iter().sum()),
        _ => Err(GeometryError::UnsupportedFamily),
    }
}

/// `a + b + c` of a spatiolateral triangle (above `2π` iff non-contractible).
pub fn side_sum_check(m: &TriangleMeasurements) -> Result<f64, GeometryError> {
    match m.family {
        TrigFamily::SpatioNC | TrigFamily::SpatioC => Ok(m.sides.iter().sum()),
        _ => Err(GeometryError::UnsupportedFamily),
    }
}

/// Every law evaluated on one triangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrigReport {
    pub family: TrigFamily,
    pub measurements: TriangleMeasurements,
    pub lcs_residuals: [f64; 3],
    pub lca_residuals: [f64; 3],
    pub sines_ratios: [f64; 3],
    pub sines_residual: f64,
    pub angle_sum: Option<f64>,
    pub side_sum: Option<f64>,
}

impl TrigReport {
    pub fn max_residual(&self) -> f64 {
        self.lcs_residuals.iter().chain(&self.lca_residuals).fold(self.sines_residual, |m, &r| m.max(r))
    }

    /// The sum theorem of the family holds (vacuous for tempolateral).
    pub fn sum_theorem_holds(&self) -> bool {
        match self.family {
            TrigFamily::Hyp => self.angle_sum.is_some_and(|s| s < PI),
            TrigFamily::SpatioNC => self.side_sum.is_some_and(|s| s > TAU),
            TrigFamily::SpatioC => self.side_sum.is_some_and(|s| s < TAU),
            TrigFamily::Tempo => true,
        }
    }

    /// All residuals within `tolerance` and the sum theorem holds.
    pub fn passes(&self, tolerance: f64) -> bool {
        self.max_residual() < tolerance && self.sum_theorem_holds()
    }
}

pub fn trig_report(t: &Triangle, tol: &Tolerances) -> Result<TrigReport, GeometryError> {
    let m = measure(t, tol)?;
    let sines_ratios = sines_report(&m)?;
    Ok(TrigReport {
        family: m.family,
        measurements: m,
        lcs_residuals: lcs_residuals(&m),
        lca_residuals: lca_residuals(&m),
        sines_ratios,
        sines_residual: sines_residual(sines_ratios),
        angle_sum: angle_sum_check(&m).ok(),
        side_sum: side_sum_check(&m).ok(),
    })
}
