//! Minkowski product on ℝ³ and causal classification.
//!
//! The first coordinate is the time coordinate; the product is
//! `⟨⟨x, y⟩⟩ = −x₁y₁ + x₂y₂ + x₃y₃`.

use core::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};

use crate::error::GeometryError;
use crate::math;
use crate::tolerance::Tolerances;

/// A vector of ℝ³ with coordinates `(x1, x2, x3)`, `x1` being time.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct MVec3 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl MVec3 {
    pub const ZERO: MVec3 = MVec3::new(0.0, 0.0, 0.0);
    pub const E1: MVec3 = MVec3::new(1.0, 0.0, 0.0);
    pub const E2: MVec3 = MVec3::new(0.0, 1.0, 0.0);
    pub const E3: MVec3 = MVec3::new(0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3 }
    }

    /// Like [`MVec3::new`] but rejects NaN and infinite coordinates.
    pub fn try_new(x1: f64, x2: f64, x3: f64) -> Result<Self, GeometryError> {
        if x1.is_finite() && x2.is_finite() && x3.is_finite() {
            Ok(Self::new(x1, x2, x3))
        } else {
            Err(GeometryError::NonFinite)
        }
    }

    #[inline]
    pub const fn from_array(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    #[inline]
    pub const fn to_array(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn is_finite(self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    /// Minkowski product `−x₁y₁ + x₂y₂ + x₃y₃`.
    #[inline]
    pub fn mdot(self, other: MVec3) -> f64 {
        dot2([-self.x1, self.x2, self.x3], [other.x1, other.x2, other.x3])
    }

    /// Self product `⟨⟨x, x⟩⟩`.
    #[inline]
    pub fn msq(self) -> f64 {
        self.mdot(self)
    }

    /// Minkowski pseudo-norm `√|⟨⟨x, x⟩⟩|`.
    #[inline]
    pub fn mnorm(self) -> f64 {
        math::sqrt(math::abs(self.msq()))
    }

    /// Euclidean dot product.
    #[inline]
    pub fn dot(self, other: MVec3) -> f64 {
        self.x1 * other.x1 + self.x2 * other.x2 + self.x3 * other.x3
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    /// Euclidean length.
    #[inline]
    pub fn norm(self) -> f64 {
        math::sqrt(self.norm_sq())
    }

    /// Euclidean cross product.
    #[inline]
    pub fn cross(self, o: MVec3) -> MVec3 {
        MVec3::new(
            diff_of_products(self.x2, o.x3, self.x3, o.x2),
            diff_of_products(self.x3, o.x1, self.x1, o.x3),
            diff_of_products(self.x1, o.x2, self.x2, o.x1),
        )
    }

    /// The map `J = diag(−1, 1, 1)`; an involutive Lorentz transformation.
    #[inline]
    pub fn j(self) -> MVec3 {
        MVec3::new(-self.x1, self.x2, self.x3)
    }

    /// `self / |||self|||`, a positive multiple with `|⟨⟨x̂, x̂⟩⟩| = 1`.
    pub fn normalize(self, tol: &Tolerances) -> Result<MVec3, GeometryError> {
        if classify_vector(self, tol) == CausalClass::Lightlike || self == MVec3::ZERO {
            return Err(GeometryError::LightlikeNormalization);
        }
        Ok(self / self.mnorm())
    }

    /// Largest absolute coordinate difference.
    pub fn max_abs_diff(self, other: MVec3) -> f64 {
        let d = self - other;
        math::abs(d.x1).max(math::abs(d.x2)).max(math::abs(d.x3))
    }
}

impl From<[f64; 3]> for MVec3 {
    fn from(a: [f64; 3]) -> Self {
        Self::from_array(a)
    }
}

impl From<MVec3> for [f64; 3] {
    fn from(v: MVec3) -> Self {
        v.to_array()
    }
}

impl Index<usize> for MVec3 {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        match i {
            0 => &self.x1,
            1 => &self.x2,
            2 => &self.x3,
            _ => panic!("MVec3 index {i} out of range"),
        }
    }
}

impl Add for MVec3 {
    type Output = MVec3;
    #[inline]
    fn add(self, o: MVec3) -> MVec3 {
        MVec3::new(self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)
    }
}

impl AddAssign for MVec3 {
    fn add_assign(&mut self, o: MVec3) {
        *self = *self + o;
    }
}

impl Sub for MVec3 {
    type Output = MVec3;
    #[inline]
    fn sub(self, o: MVec3) -> MVec3 {
        MVec3::new(self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3)
    }
}

impl SubAssign for MVec3 {
    fn sub_assign(&mut self, o: MVec3) {
        *self = *self - o;
    }
}

impl Neg for MVec3 {
    type Output = MVec3;
    #[inline]
    fn neg(self) -> MVec3 {
        MVec3::new(-self.x1, -self.x2, -self.x3)
    }
}

impl Mul<f64> for MVec3 {
    type Output = MVec3;
    #[inline]
    fn mul(self, s: f64) -> MVec3 {
        MVec3::new(self.x1 * s, self.x2 * s, self.x3 * s)
    }
}

impl Mul<MVec3> for f64 {
    type Output = MVec3;
    #[inline]
    fn mul(self, v: MVec3) -> MVec3 {
        v * self
    }
}

impl Div<f64> for MVec3 {
    type Output = MVec3;
    #[inline]
    fn div(self, s: f64) -> MVec3 {
        MVec3::new(self.x1 / s, self.x2 / s, self.x3 / s)
    }
}

/// Minkowski product of two vectors.
#[inline]
pub fn minkowski_product(x: MVec3, y: MVec3) -> f64 {
    x.mdot(y)
}

/// Minkowski pseudo-norm `√|⟨⟨x, x⟩⟩|`.
#[inline]
pub fn minkowski_norm(x: MVec3) -> f64 {
    x.mnorm()
}

/// `ab − cd` with one rounding error (Kahan).
#[inline]
fn diff_of_products(a: f64, b: f64, c: f64, d: f64) -> f64 {
    let cd = c * d;
    let err = math::fma(-c, d, cd);
    math::fma(a, b, -cd) + err
}

/// Compensated dot product, as accurate as if computed in twice the
/// working precision.
#[inline]
fn dot2(x: [f64; 3], y: [f64; 3]) -> f64 {
    let mut s = 0.0;
    let mut c = 0.0;
    for i in 0..3 {
        let p = x[i] * y[i];
        let pe = math::fma(x[i], y[i], -p);
        let t = s + p;
        let z = t - s;
        c += (s - (t - z)) + (p - z) + pe;
        s = t;
    }
    s + c
}

/// Determinant of the matrix with columns `a`, `b`, `c`.
#[inline]
pub fn det3(a: MVec3, b: MVec3, c: MVec3) -> f64 {
    a.cross(b).dot(c)
}

/// Causal character of a vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CausalClass {
    Timelike,
    Lightlike,
    Spacelike,
}

/// Causal character of a two-dimensional subspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlaneClass {
    Spacelike,
    Lightlike,
    Timelike,
}

#[inline]
fn light_band(x: MVec3, tol: &Tolerances) -> f64 {
    tol.light * x.norm_sq().max(1.0)
}

/// Classifies `x` by the sign of `⟨⟨x, x⟩⟩`.
///
/// The exact zero vector is spacelike; anything else within the light band
/// is lightlike.
pub fn classify_vector(x: MVec3, tol: &Tolerances) -> CausalClass {
    if x == MVec3::ZERO {
        return CausalClass::Spacelike;
    }
    let q = x.msq();
    if math::abs(q) <= light_band(x, tol) {
        CausalClass::Lightlike
    } else if q < 0.0 {
        CausalClass::Timelike
    } else {
        CausalClass::Spacelike
    }
}

/// True when `|⟨⟨x, x⟩⟩|` is within [`Tolerances::NEAR_FACTOR`] times the
/// light band, i.e. the classification of `x` is numerically fragile.
pub fn near_light_cone(x: MVec3, tol: &Tolerances) -> bool {
    x != MVec3::ZERO && math::abs(x.msq()) <= Tolerances::NEAR_FACTOR * light_band(x, tol)
}

/// Linear dependence test used throughout: `|u × v| ≤ degen · |u||v|`.
pub fn linearly_dependent(u: MVec3, v: MVec3, tol: &Tolerances) -> bool {
    let scale = u.norm() * v.norm();
    scale == 0.0 || u.cross(v).norm() <= tol.degen * scale
}

/// Classifies `span(u, v)` through its Minkowski normal `J(u × v)`: a
/// timelike normal means a spacelike plane and vice versa, a lightlike
/// normal a lightlike plane.
pub fn classify_plane(u: MVec3, v: MVec3, tol: &Tolerances) -> Result<PlaneClass, GeometryError> {
    if linearly_dependent(u, v, tol) {
        return Err(GeometryError::DegenerateSpan);
    }
    let normal = u.cross(v).j();
    // Scale-free: classify the unit Euclidean normal.
    Ok(match classify_vector(normal / normal.norm(), tol) {
        CausalClass::Timelike => PlaneClass::Spacelike,
        CausalClass::Lightlike => PlaneClass::Lightlike,
        CausalClass::Spacelike => PlaneClass::Timelike,
    })
}

/// A Lorentz-orthogonal basis `(b1, b2)` of `span(u, v)` with `b1` spacelike.
///
/// `b1` is the more spacelike input when that one is spacelike. Otherwise a
/// spacelike vector is produced inside the plane: the component of one
/// input orthogonal to a timelike input, or `u ± v` for two lightlike
/// inputs. `b2` is the remaining input made orthogonal to `b1`.
pub fn lorentz_orthogonal_basis(
    u: MVec3,
    v: MVec3,
    tol: &Tolerances,
) -> Result<(MVec3, MVec3), GeometryError> {
    if linearly_dependent(u, v, tol) {
        return Err(GeometryError::DegenerateSpan);
    }
    let (hi, lo) = if u.msq() >= v.msq() { (u, v) } else { (v, u) };
    let b1 = if classify_vector(hi, tol) == CausalClass::Spacelike {
        hi
    } else if classify_vector(lo, tol) == CausalClass::Timelike {
        // Orthogonal complement of a timelike vector is spacelike.
        hi - lo * (hi.mdot(lo) / lo.msq())
    } else {
        // Both lightlike: ⟨⟨u + s v, u + s v⟩⟩ = 2 s ⟨⟨u, v⟩⟩.
        let s = if u.mdot(v) >= 0.0 { 1.0 } else { -1.0 };
        u + v * s
    };
    // Pick the input least parallel to b1 to complete the basis.
    let w = if b1.cross(u).norm() / u.norm() >= b1.cross(v).norm() / v.norm() {
        u
    } else {
        v
    };
    let b2 = w - b1 * (w.mdot(b1) / b1.msq());
    Ok((b1, b2))
}
