//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::f64::consts::{PI, SQRT_2, TAU};
use std::process::ExitCode;
use std::time::Instant;

use minktrig_core::lorentz::random_lorentz;
use minktrig_core::polar::{polar_exists, polar_triangle, predict_polar_type, Polar, PolarPrediction};
use minktrig_core::sampling::{arc_length_oracle, sample_point, sample_triangles, SampleFamily, SampleSpec};
use minktrig_core::surface::{angle, angle_via_cross, distance, segment_kind};
use minktrig_core::triangle::{
    classify_triangle, dominant_sides, is_contractible, triangle_inequality_report, Side, Vertex,
};
use minktrig_core::trig::{measure, trig_report, TrigFamily};
use minktrig_core::{Component, ExtDistance, MVec3, ProperKind, SegmentKind, SurfacePoint, Tolerances, Triangle};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: Tolerances = Tolerances::DEFAULT;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn sample(family: SampleFamily, count: usize, seed: u64) -> Vec<Triangle> {
    sample_triangles(&SampleSpec::new(family, count, seed), &TOL)
        .unwrap_or_else(|e| panic!("sampling {family}: {e}"))
}

fn tri(v: [[f64; 3]; 3]) -> Triangle {
    Triangle::from_coords(v.map(MVec3::from), &TOL).expect("fixture triangle")
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn worked_examples() -> Outcome {
    let s3 = 3f64.sqrt();
    let r = 59.0 / 82.0 * SQRT_2;
    let item1 = tri([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [30.0 / 41.0 * SQRT_2, r, r]]);
    let item2 = tri([[0.0, 1.0, 0.0], [0.0, s3 / 2.0, -0.5], [41.0, 29.0, 29.0]]);
    let item3 = tri([[0.0, 1.0, 0.0], [0.0, SQRT_2 / 2.0, SQRT_2 / 2.0], [41.0, 29.0, 29.0]]);
    let item4 = tri([[1.0, 0.0, SQRT_2], [-1.0, 0.0, SQRT_2], [0.0, s3 / 2.0, 0.5]]);
    let th = 6.0 * PI / 25.0;
    let item5 = tri([[1.0, 0.0, SQRT_2], [20.0 / 21.0, 0.0, 29.0 / 21.0], [0.0, th.cos(), th.sin()]]);
    let item6 = tri([[1.0, 0.0, SQRT_2], [0.0, 0.0, 1.0], [0.0, s3 / 2.0, 0.5]]);

    let mut errors = Vec::new();
    let len = |t: &Triangle, s: Side| classify_triangle(t, &TOL).side(s).length.value();
    let mut close = |name: &str, got: f64, want: f64| {
        if (got - want).abs() >= 1e-6 {
            errors.push(format!("{name}: {got} vs {want}"));
        }
    };
    close("item1 a", len(&item1, Side::A), r.acosh());
    close("item1 b", len(&item1, Side::B), r.acosh());
    close("item1 c", len(&item1, Side::C), PI / 2.0);
    close("item4 a", len(&item4, Side::A), PI / 4.0);
    close("item4 b", len(&item4, Side::B), PI / 4.0);
    close("item4 c", len(&item4, Side::C), 3f64.acosh());
    if (r.acosh() - 0.187).abs() > 5e-4 || (3f64.acosh() - 1.763).abs() > 5e-4 {
        errors.push("rounded values".into());
    }

    let expected = [
        (&item1, Some(ProperKind::Chronosceles), false),
        (&item2, Some(ProperKind::Chronosceles), false),
        (&item3, Some(ProperKind::Chronosceles), true),
        (&item4, Some(ProperKind::Chorosceles), false),
        (&item5, Some(ProperKind::Chorosceles), false),
        (&item6, None, true),
    ];
    for (i, (t, kind, holds)) in expected.iter().enumerate() {
        let c = classify_triangle(t, &TOL);
        if kind.is_some() && c.class.proper_kind != *kind {
            errors.push(format!("item{} kind {:?}", i + 1, c.class.proper_kind));
        }
        if triangle_inequality_report(t, &TOL).holds != *holds {
            errors.push(format!("item{} verdict", i + 1));
        }
    }
    let lengths = |t: &Triangle| Side::ALL.map(|s| len(t, s));
    let [a2, b2, c2] = lengths(&item2);
    let [a5, b5, c5] = lengths(&item5);
    if b2 <= a2 + c2 || a5 <= b5 + c5 {
        errors.push("dominant side of item2/item5".into());
    }
    check(errors.is_empty(), if errors.is_empty() { "6 triangles, 6 lengths, 6 verdicts".into() } else { errors.join("; ") })
}

fn trig_suite() -> Outcome {
    let families = [
        (SampleFamily::Hyperbolic, TrigFamily::Hyp),
        (SampleFamily::SpatiolateralNonContractible, TrigFamily::SpatioNC),
        (SampleFamily::SpatiolateralContractible, TrigFamily::SpatioC),
        (SampleFamily::Tempolateral, TrigFamily::Tempo),
    ];
    let mut worst = Vec::new();
    let mut ok = true;
    for (sf, tf) in families {
        let mut max: f64 = 0.0;
        for t in sample(sf, 10_000, 2) {
            match trig_report(&t, &TOL) {
                Ok(r) if r.family == tf => max = max.max(r.max_residual()),
                _ => max = f64::INFINITY,
            }
        }
        ok &= max < 1e-9;
        worst.push(format!("{}={max:.1e}", tf.name()));
    }
    check(ok, format!("max residual per family: {}", worst.join(", ")))
}

fn polar_involution() -> Outcome {
    let families = [
        SampleFamily::Hyperbolic,
        SampleFamily::AntipodalHyperbolic,
        SampleFamily::SpatiolateralContractible,
        SampleFamily::SpatiolateralNonContractible,
        SampleFamily::Chorosceles,
        SampleFamily::Chronosceles,
        SampleFamily::Tempolateral,
        SampleFamily::Impossible,
        SampleFamily::StrangeHyperbolic,
        SampleFamily::StrangeDeSitter,
    ];
    let mut checked = 0;
    let mut max: f64 = 0.0;
    let mut eps_mismatch = 0;
    for (i, f) in families.iter().enumerate() {
        for t in sample(*f, 1_000, 3 + i as u64) {
            let Ok(Polar::Triangle { vertices, epsilon }) = polar_triangle(&t, &TOL) else { continue };
            let p = Triangle::from_coords(vertices, &TOL).expect("polar vertices lie on the surface");
            let pp = polar_triangle(&p, &TOL).expect("polar of a polar exists");
            if pp.epsilon() != epsilon {
                eps_mismatch += 1;
            }
            for (x, y) in pp.vertices().expect("non-degenerate").iter().zip(t.coords()) {
                max = max.max(x.max_abs_diff(y));
            }
            checked += 1;
        }
    }
    check(
        checked >= 10_000 && max < 1e-9 && eps_mismatch == 0,
        format!("{checked} triangles, max deviation {max:.1e}, epsilon mismatches {eps_mismatch}"),
    )
}

fn duality() -> Outcome {
    let mut max: f64 = 0.0;
    let ts = sample(SampleFamily::Hyperbolic, 1_000, 4);
    for t in &ts {
        let m = measure(t, &TOL).expect("hyperbolic measurements");
        let p = polar_triangle(t, &TOL).unwrap().to_triangle(&TOL).unwrap();
        let pm = measure(&p, &TOL).expect("polar is spatiolateral");
        for i in 0..3 {
            max = max.max((m.angles[i] - (PI - pm.sides[i])).abs());
            max = max.max((m.sides[i] - pm.angles[i]).abs());
        }
    }
    check(max < 1e-9, format!("{} triangles, max deviation {max:.1e}", ts.len()))
}

fn type_mapping() -> Outcome {
    let mut count = 0;
    let mut bad = 0;
    let mut nonexistent = 0;
    let mut examples = Vec::new();
    let per_family = 10_000 / SampleFamily::ALL.len() + 1;
    for (i, f) in SampleFamily::ALL.iter().enumerate() {
        for t in sample(*f, per_family, 50 + i as u64) {
            let c = classify_triangle(&t, &TOL);
            let pred = predict_polar_type(&c);
            if matches!(pred, PolarPrediction::NonExistent(_)) {
                nonexistent += 1;
            }
            let lightlike_kind = c.class.proper_kind.is_some_and(|k| k.has_lightlike_side());
            if !pred.admits(&polar_triangle(&t, &TOL), &TOL) || (lightlike_kind && polar_exists(&t, &TOL).is_ok()) {
                bad += 1;
                if examples.len() < 3 {
                    examples.push(format!("{f}: predicted {pred:?}"));
                }
            }
            count += 1;
        }
    }
    check(
        bad == 0 && count >= 10_000,
        format!("{count} triangles, {nonexistent} non-existent verdicts, {bad} violations {}", examples.join("; ")),
    )
}

fn sum_theorems() -> Outcome {
    let mut bad_angle = 0;
    let mut max_sum: f64 = 0.0;
    for t in sample(SampleFamily::Hyperbolic, 10_000, 5) {
        let s: f64 = measure(&t, &TOL).unwrap().angles.iter().sum();
        max_sum = max_sum.max(s);
        if s >= PI {
            bad_angle += 1;
        }
    }
    let mut bad_side = 0;
    let mut n = 0;
    for f in [SampleFamily::SpatiolateralContractible, SampleFamily::SpatiolateralNonContractible] {
        for t in sample(f, 5_000, 6) {
            let s: f64 = measure(&t, &TOL).unwrap().sides.iter().sum();
            if (s > TAU) != !is_contractible(&t, &TOL).unwrap() {
                bad_side += 1;
            }
            n += 1;
        }
    }
    check(
        bad_angle == 0 && bad_side == 0,
        format!("10000 angle sums (max {max_sum:.6}), {bad_angle} >= pi; {n} side sums, {bad_side} disagreements"),
    )
}

fn inequality_theorems() -> Outcome {
    let holds = |f, seed| {
        sample(f, 1_000, seed).iter().map(|t| triangle_inequality_report(t, &TOL)).collect::<Vec<_>>()
    };
    let tempo = holds(SampleFamily::Tempolateral, 7).iter().filter(|r| r.holds).count();
    let contractible = holds(SampleFamily::SpatiolateralContractible, 8);
    let c_holds = contractible.iter().filter(|r| r.holds).count();
    let c_single = contractible
        .iter()
        .filter(|r| dominant_sides(r.lengths.map(ExtDistance::value)) == 1)
        .count();
    let nc = holds(SampleFamily::SpatiolateralNonContractible, 9).iter().filter(|r| r.holds).count();
    check(
        tempo == 0 && c_holds == 0 && c_single == 1_000 && nc == 1_000,
        format!(
            "tempolateral {tempo}/1000 hold; contractible {c_holds}/1000 hold, {c_single}/1000 one dominant side; non-contractible {nc}/1000 hold"
        ),
    )
}

fn oracle_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let kinds = [
        (SegmentKind::Hyperbolic, Component::H2),
        (SegmentKind::AntipodalHyperbolic, Component::NegH2),
        (SegmentKind::DeSitterSpacelike, Component::DeSitter),
        (SegmentKind::DeSitterTimelike, Component::DeSitter),
    ];
    let mut report = Vec::new();
    let mut ok = true;
    for (kind, comp) in kinds {
        let mut n = 0;
        let mut max: f64 = 0.0;
        while n < 1_000 {
            let a = sample_point(&mut rng, comp, 2.0);
            let b = sample_point(&mut rng, comp, 2.0);
            if segment_kind(&a, &b, &TOL) != kind {
                continue;
            }
            let d = distance(&a, &b, &TOL).value();
            let o = arc_length_oracle(&a, &b, 10_000, &TOL).expect("finite segment");
            max = max.max((d - o).abs());
            n += 1;
        }
        ok &= max < 1e-6;
        report.push(format!("{kind:?}={max:.1e}"));
    }
    check(ok, format!("1000 segments per kind, max error {}", report.join(", ")))
}

fn lorentz_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let families = [
        SampleFamily::Hyperbolic,
        SampleFamily::SpatiolateralContractible,
        SampleFamily::SpatiolateralNonContractible,
        SampleFamily::Tempolateral,
        SampleFamily::Chorosceles,
        SampleFamily::Chronosceles,
        SampleFamily::Impossible,
        SampleFamily::StrangeDeSitter,
        SampleFamily::PhotoscelesSpacelikeBase,
        SampleFamily::Multiple,
    ];
    let mut max: f64 = 0.0;
    let mut class_changes = 0;
    let mut n = 0;
    for (i, f) in families.iter().enumerate() {
        for t in sample(*f, 100, 60 + i as u64) {
            let m = random_lorentz(&mut rng, true);
            let u = t.transformed(&m, &TOL).expect("image lies on the surface");
            let (c, cu) = (classify_triangle(&t, &TOL), classify_triangle(&u, &TOL));
            if c.class != cu.class {
                class_changes += 1;
            }
            for (x, y) in c.lengths().iter().zip(cu.lengths()) {
                max = max.max(match (x, y) {
                    (ExtDistance::Finite(x), ExtDistance::Finite(y)) => (x - y).abs(),
                    (ExtDistance::Infinite, ExtDistance::Infinite) => 0.0,
                    _ => f64::INFINITY,
                });
            }
            for v in Vertex::ALL {
                let (p, q) = v.others();
                let at = |t: &Triangle| angle(t.vertex(p), t.vertex(v), t.vertex(q), &TOL);
                if let (Ok(x), Ok(y)) = (at(&t), at(&u)) {
                    max = max.max((x - y).abs());
                }
            }
            if let Ok(r) = trig_report(&u, &TOL) {
                max = max.max(r.max_residual());
            }
            n += 1;
        }
    }
    check(
        max < 1e-9 && class_changes == 0,
        format!("{n} triangles, max deviation {max:.1e}, {class_changes} classification changes"),
    )
}

fn angle_identity() -> Outcome {
    let families = [
        SampleFamily::Hyperbolic,
        SampleFamily::AntipodalHyperbolic,
        SampleFamily::SpatiolateralContractible,
        SampleFamily::SpatiolateralNonContractible,
        SampleFamily::Tempolateral,
        SampleFamily::Chorosceles,
        SampleFamily::Chronosceles,
    ];
    let mut max: f64 = 0.0;
    let mut n = 0;
    for (i, f) in families.iter().enumerate() {
        for t in sample(*f, 1_000, 70 + i as u64) {
            for v in Vertex::ALL {
                let (p, q) = v.others();
                let (b, a, c): (&SurfacePoint, _, _) = (t.vertex(p), t.vertex(v), t.vertex(q));
                if let Ok(x) = angle(b, a, c, &TOL) {
                    let y = angle_via_cross(b, a, c, &TOL).expect("same legs as angle()");
                    max = max.max((x - y).abs());
                    n += 1;
                }
            }
        }
    }
    check(max < 1e-10, format!("{n} angles over {} families, max deviation {max:.1e}", families.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("worked examples", worked_examples),
        ("trig-law residuals", trig_suite),
        ("polar involution", polar_involution),
        ("polar duality", duality),
        ("polar type mapping", type_mapping),
        ("sum theorems", sum_theorems),
        ("inequality theorems", inequality_theorems),
        ("arc-length oracle", oracle_agreement),
        ("Lorentz invariance", lorentz_invariance),
        ("angle identity", angle_identity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.1}s)", i + 1)
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
