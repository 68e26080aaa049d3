//! Lorentz transformations of ℝ³ as 3×3 matrices.

use core::f64::consts::TAU;
use core::ops::Mul;

use rand::Rng;

use crate::math;
use crate::mink::MVec3;
use crate::tolerance::Tolerances;

/// Default cap on boost rapidity for random Lorentz maps.
pub const MAX_RAPIDITY: f64 = 3.0;

/// A 3×3 real matrix stored by rows.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat3 {
    pub rows: [[f64; 3]; 3],
}

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3::from_rows([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    /// The Minkowski form `J = diag(−1, 1, 1)`.
    pub const J: Mat3 = Mat3::from_rows([[-1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    pub const fn from_rows(rows: [[f64; 3]; 3]) -> Self {
        Self { rows }
    }

    pub fn from_columns(c0: MVec3, c1: MVec3, c2: MVec3) -> Self {
        Self::from_rows([[c0.x1, c1.x1, c2.x1], [c0.x2, c1.x2, c2.x2], [c0.x3, c1.x3, c2.x3]])
    }

    pub fn column(&self, j: usize) -> MVec3 {
        MVec3::new(self.rows[0][j], self.rows[1][j], self.rows[2][j])
    }

    pub fn transpose(&self) -> Mat3 {
        let r = &self.rows;
        Mat3::from_rows([[r[0][0], r[1][0], r[2][0]], [r[0][1], r[1][1], r[2][1]], [r[0][2], r[1][2], r[2][2]]])
    }

    pub fn apply(&self, v: MVec3) -> MVec3 {
        let r = &self.rows;
        MVec3::new(
            r[0][0] * v.x1 + r[0][1] * v.x2 + r[0][2] * v.x3,
            r[1][0] * v.x1 + r[1][1] * v.x2 + r[1][2] * v.x3,
            r[2][0] * v.x1 + r[2][1] * v.x2 + r[2][2] * v.x3,
        )
    }

    pub fn det(&self) -> f64 {
        crate::mink::det3(self.column(0), self.column(1), self.column(2))
    }

    /// Boost of rapidity `t` in the `x1`-`x2` plane; maps `e1` to
    /// `(cosh t, sinh t, 0)`.
    pub fn boost(t: f64) -> Mat3 {
        let (c, s) = (math::cosh(t), math::sinh(t));
        Mat3::from_rows([[c, s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
    }

    /// Rotation by `theta` about the `e1` (time) axis.
    pub fn rotation(theta: f64) -> Mat3 {
        let (c, s) = (math::cos(theta), math::sin(theta));
        Mat3::from_rows([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])
    }

    /// `R(theta1) · B(rapidity) · R(theta2)`.
    pub fn from_params(theta1: f64, rapidity: f64, theta2: f64) -> Mat3 {
        Mat3::rotation(theta1) * Mat3::boost(rapidity) * Mat3::rotation(theta2)
    }
}

impl Mul for Mat3 {
    type Output = Mat3;

    fn mul(self, o: Mat3) -> Mat3 {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.rows[i][k] * o.rows[k][j]).sum();
            }
        }
        Mat3::from_rows(out)
    }
}

impl Mul<MVec3> for Mat3 {
    type Output = MVec3;

    fn mul(self, v: MVec3) -> MVec3 {
        self.apply(v)
    }
}

/// True iff `MᵀJM = J` entry-wise within `tol.mat`.
pub fn is_lorentz(m: &Mat3, tol: &Tolerances) -> bool {
    let g = m.transpose() * Mat3::J * *m;
    g.rows
        .iter()
        .zip(Mat3::J.rows.iter())
        .all(|(a, b)| a.iter().zip(b).all(|(x, y)| math::abs(x - y) <= tol.mat))
}

/// A random Lorentz matrix with rapidity uniform on `[0, MAX_RAPIDITY]`.
///
/// See [`random_lorentz_with`].
pub fn random_lorentz<R: Rng + ?Sized>(rng: &mut R, orthochronous: bool) -> Mat3 {
    random_lorentz_with(rng, orthochronous, MAX_RAPIDITY)
}

/// A random Lorentz matrix `R(θ₁)·B(t)·R(θ₂)` with `θ` uniform on `[0, 2π)`
/// and `t` uniform on `[0, max_rapidity]`.
///
/// When `orthochronous` is false the result is additionally composed, each
/// with probability ½, with time reversal `diag(−1, 1, 1)` and the
/// reflection `diag(1, 1, −1)`.
pub fn random_lorentz_with<R: Rng + ?Sized>(rng: &mut R, orthochronous: bool, max_rapidity: f64) -> Mat3 {
    let theta1 = rng.random::<f64>() * TAU;
    let rapidity = rng.random::<f64>() * max_rapidity;
    let theta2 = rng.random::<f64>() * TAU;
    let mut m = Mat3::from_params(theta1, rapidity, theta2);
    if !orthochronous {
        if rng.random::<bool>() {
            m = Mat3::J * m;
        }
        if rng.random::<bool>() {
            m = Mat3::from_rows([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]]) * m;
        }
    }
    m
}
