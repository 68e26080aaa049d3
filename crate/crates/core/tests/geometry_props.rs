use std::f64::consts::TAU;

use minktrig_core::lorentz::is_lorentz;
use minktrig_core::mink::{classify_plane, classify_vector, det3, linearly_dependent, lorentz_orthogonal_basis};
use minktrig_core::sampling::point_from_params;
use minktrig_core::surface::{angle, distance, segment_point};
use minktrig_core::{CausalClass, Component, ExtDistance, Mat3, MVec3, PlaneClass, SurfacePoint, Tolerances};
use proptest::prelude::*;

const TOL: Tolerances = Tolerances::DEFAULT;

fn vec3(bound: f64) -> impl Strategy<Value = MVec3> {
    (-bound..bound, -bound..bound, -bound..bound).prop_map(|(a, b, c)| MVec3::new(a, b, c))
}

fn lorentz() -> impl Strategy<Value = Mat3> {
    (0.0..TAU, 0.0..3.0, 0.0..TAU).prop_map(|(a, t, b)| Mat3::from_params(a, t, b))
}

fn component() -> impl Strategy<Value = Component> {
    prop_oneof![Just(Component::H2), Just(Component::NegH2), Just(Component::DeSitter)]
}

fn point_on(c: Component) -> impl Strategy<Value = SurfacePoint> {
    let r = if c == Component::DeSitter { -2.0..2.0 } else { 0.0..2.0 };
    (r, 0.0..TAU).prop_map(move |(r, th)| SurfacePoint::new(point_from_params(c, r, th), &TOL).unwrap())
}

fn point() -> impl Strategy<Value = SurfacePoint> {
    component().prop_flat_map(point_on)
}

fn image(m: &Mat3, p: &SurfacePoint) -> SurfacePoint {
    SurfacePoint::new(m.apply(p.coords()), &TOL).unwrap()
}

fn same(x: ExtDistance, y: ExtDistance, eps: f64) -> bool {
    match (x, y) {
        (ExtDistance::Finite(x), ExtDistance::Finite(y)) => (x - y).abs() <= eps,
        (ExtDistance::Infinite, ExtDistance::Infinite) => true,
        _ => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn product_symmetric_bilinear(x in vec3(10.0), y in vec3(10.0), z in vec3(10.0), a in -3.0..3.0f64, b in -3.0..3.0f64) {
        prop_assert!((x.mdot(y) - y.mdot(x)).abs() <= 1e-12);
        let lhs = (x * a + z * b).mdot(y);
        let rhs = a * x.mdot(y) + b * z.mdot(y);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs()));
    }

    #[test]
    fn det_is_cross_dot(a in vec3(10.0), b in vec3(10.0), c in vec3(10.0)) {
        let expanded = a.x1 * (b.x2 * c.x3 - b.x3 * c.x2) - b.x1 * (a.x2 * c.x3 - a.x3 * c.x2)
            + c.x1 * (a.x2 * b.x3 - a.x3 * b.x2);
        prop_assert!((det3(a, b, c) - expanded).abs() <= 1e-12 * (1.0 + expanded.abs()));
    }

    #[test]
    fn lightlike_orthogonal_iff_dependent(
        s in 0.1..5.0f64,
        r in -5.0..5.0f64,
        th in 0.0..TAU,
        gap in prop_oneof![Just(0.0), 1e-3..(TAU - 1e-3)],
    ) {
        prop_assume!(r.abs() > 0.1);
        let u = MVec3::new(1.0, th.cos(), th.sin()) * s;
        let v = MVec3::new(1.0, (th + gap).cos(), (th + gap).sin()) * r;
        let orthogonal = u.mdot(v).abs() <= 1e-9 * u.norm() * v.norm();
        prop_assert_eq!(orthogonal, linearly_dependent(u, v, &TOL));
    }

    #[test]
    fn basis_has_one_timelike_vector(u in vec3(5.0), v in vec3(5.0)) {
        prop_assume!(!linearly_dependent(u, v, &TOL));
        prop_assume!(classify_plane(u, v, &TOL).unwrap() != PlaneClass::Lightlike);
        let (b1, b2) = lorentz_orthogonal_basis(u, v, &TOL).unwrap();
        let n = u.cross(v).j();
        let basis = [b1, b2, n];
        let scale = |x: MVec3, y: MVec3| 1e-9 * x.norm() * y.norm();
        prop_assert!(b1.mdot(b2).abs() <= scale(b1, b2));
        prop_assert!(b1.mdot(n).abs() <= scale(b1, n));
        prop_assert!(b2.mdot(n).abs() <= scale(b2, n));
        let timelike = basis.iter().filter(|&&x| classify_vector(x, &TOL) == CausalClass::Timelike).count();
        prop_assert_eq!(timelike, 1);
    }

    #[test]
    fn plane_class_lorentz_invariant(u in vec3(5.0), v in vec3(5.0), m in lorentz()) {
        prop_assume!(is_lorentz(&m, &TOL));
        let before = classify_plane(u, v, &TOL);
        prop_assume!(before.is_ok() && before != Ok(PlaneClass::Lightlike));
        prop_assert_eq!(classify_plane(m.apply(u), m.apply(v), &TOL), before);
    }

    #[test]
    fn distance_symmetric(a in point(), b in point()) {
        prop_assert!(same(distance(&a, &b, &TOL), distance(&b, &a, &TOL), 1e-12));
    }

    #[test]
    fn hyperbolic_metric(a in point_on(Component::H2), b in point_on(Component::H2), c in point_on(Component::H2)) {
        let d = |x: &SurfacePoint, y: &SurfacePoint| distance(x, y, &TOL).value();
        prop_assert!(d(&a, &b) >= 0.0);
        prop_assert_eq!(d(&a, &a), 0.0);
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c) + 1e-12);
    }

    #[test]
    fn lightlike_difference_has_zero_distance(m in lorentz(), t in -3.0..3.0f64, up in any::<bool>()) {
        let ray = if up { MVec3::new(1.0, 0.0, 1.0) } else { MVec3::new(1.0, 0.0, -1.0) };
        let a = SurfacePoint::new(m.apply(MVec3::E2), &TOL).unwrap();
        let b = SurfacePoint::new(m.apply(MVec3::E2 + ray * t), &TOL).unwrap();
        prop_assert!(distance(&a, &b, &TOL).value().abs() <= 1e-9);
    }

    #[test]
    fn distance_and_angle_lorentz_invariant(a in point(), b in point(), c in point(), m in lorentz()) {
        let (ma, mb, mc) = (image(&m, &a), image(&m, &b), image(&m, &c));
        prop_assert!(same(distance(&a, &b, &TOL), distance(&ma, &mb, &TOL), 1e-9));
        if let (Ok(x), Ok(y)) = (angle(&b, &a, &c, &TOL), angle(&mb, &ma, &mc, &TOL)) {
            prop_assert!((x - y).abs() <= 1e-9, "{} vs {}", x, y);
        }
    }

    #[test]
    fn segment_commutes_with_lorentz(a in point(), b in point(), m in lorentz(), s in 0.0..1.0f64) {
        let d = distance(&a, &b, &TOL);
        prop_assume!(d.is_finite());
        let t = s * d.value().min(3.0);
        if let Ok(p) = segment_point(&a, &b, t, &TOL) {
            let q = segment_point(&image(&m, &a), &image(&m, &b), t, &TOL).unwrap();
            prop_assert!(m.apply(p).max_abs_diff(q) <= 1e-9 * (1.0 + q.norm()));
        }
    }
}
