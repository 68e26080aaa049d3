/// Numerical tolerances used by classification and domain checks.
///
/// All bands are relative to `max(1, |x|²)` (Euclidean) of the vector being
/// tested unless noted otherwise, so that they do not depend on the overall
/// scale of the input.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Band around the light cone: `|⟨⟨x,x⟩⟩| ≤ light · max(1, |x|²)` is lightlike.
    pub light: f64,
    /// Entry-wise bound on `MᵀJM − J` for Lorentz matrices (absolute).
    pub mat: f64,
    /// Surface membership: `|⟨⟨x,x⟩⟩ ∓ 1| ≤ surf · max(1, |x|²)`.
    pub surf: f64,
    /// Arguments of `arccos`/`arcosh` within this distance of the domain
    /// boundary are clamped; further out they are an error (absolute).
    pub clamp: f64,
    /// Degeneracy: `|det(A,B,C)| ≤ degen · |A||B||C|`, and linear dependence
    /// of two vectors: `|u × v| ≤ degen · |u||v|`.
    pub degen: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        light: 1e-9,
        mat: 1e-9,
        surf: 1e-9,
        clamp: 1e-9,
        degen: 1e-9,
    };

    /// Width multiplier of the "near the band" warning zone.
    pub const NEAR_FACTOR: f64 = 10.0;
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
