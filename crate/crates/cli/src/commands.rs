use std::io::Write;

use minktrig_core::polar::polar_triangle;
use minktrig_core::sampling::{sample_triangles, SampleFamily, SampleSpec};
use minktrig_core::surface::{Segment, SegmentKind};
use minktrig_core::triangle::{classify_triangle, inequality_report_for, is_contractible, is_degenerate};
use minktrig_core::trig::trig_report;
use minktrig_core::{GeometryError, Polar, Tolerances, Triangle, TrigReport};
use serde::Serialize;

use crate::error::CliError;
use crate::input::{point, JsonSegment, JsonTriangle};
use crate::num::{nums, Num, SCHEMA};

/// `FooBar` → `foo_bar`.
fn snake<T: std::fmt::Debug>(x: T) -> String {
    let mut out = String::new();
    for (i, c) in format!("{x:?}").chars().enumerate() {
        if c.is_ascii_uppercase() {
            if i > 0 {
                out.push('_');
            }
            out.push(c.to_ascii_lowercase());
        } else {
            out.push(c);
        }
    }
    out
}

fn coords(t: &Triangle) -> [[Num; 3]; 3] {
    t.coords().map(|x| nums([x.x1, x.x2, x.x3]))
}

#[derive(Serialize)]
struct SideJson {
    label: String,
    kind: String,
    length: Num,
    plane: Option<String>,
    strange: bool,
    opposite_ends: bool,
}

#[derive(Serialize)]
pub struct ClassifyOut {
    schema: &'static str,
    family: String,
    proper_kind: Option<String>,
    sides: Vec<SideJson>,
    components: Vec<String>,
    degenerate: bool,
    impossible_sides: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    contractible: Option<bool>,
}

pub fn classify(input: &JsonTriangle, tol: &Tolerances) -> Result<ClassifyOut, CliError> {
    let t = input.triangle(tol)?;
    let c = classify_triangle(&t, tol);
    let contractible = match c.class.proper_kind {
        Some(k) if k.is_spatiolateral() => Some(is_contractible(&t, tol).map_err(CliError::Domain)?),
        _ => None,
    };
    Ok(ClassifyOut {
        schema: SCHEMA,
        family: snake(c.class.family),
        proper_kind: c.class.proper_kind.map(snake),
        sides: c
            .sides
            .iter()
            .map(|s| SideJson {
                label: s.label.to_string(),
                kind: snake(s.kind),
                length: s.length.into(),
                plane: s.plane.map(snake),
                strange: s.strange,
                opposite_ends: s.opposite_ends,
            })
            .collect(),
        components: c.components.iter().map(|&x| snake(x)).collect(),
        degenerate: c.class.degenerate,
        impossible_sides: c.class.impossible_sides.iter().map(|s| s.to_string()).collect(),
        contractible,
    })
}

#[derive(Serialize)]
pub struct PolarOut {
    schema: &'static str,
    epsilon: i8,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<[[Num; 3]; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    components: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    zero_triangle: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nonexistent: Option<String>,
}

impl PolarOut {
    pub fn exists(&self) -> bool {
        self.nonexistent.is_none()
    }
}

pub fn polar(input: &JsonTriangle, tol: &Tolerances) -> Result<PolarOut, CliError> {
    let t = input.triangle(tol)?;
    let sign = if is_degenerate(&t, tol) { 0 } else { t.det().signum() as i8 };
    let mut out = PolarOut {
        schema: SCHEMA,
        epsilon: sign,
        vertices: None,
        components: None,
        zero_triangle: None,
        nonexistent: None,
    };
    match polar_triangle(&t, tol) {
        Ok(p @ Polar::Triangle { .. }) => {
            let pt = p.to_triangle(tol).map_err(CliError::Domain)?;
            out.epsilon = p.epsilon();
            out.vertices = Some(coords(&pt));
            out.components = Some(pt.vertices().iter().map(|v| snake(v.component())).collect());
        }
        Ok(Polar::Zero) => {
            out.epsilon = 0;
            out.zero_triangle = Some(true);
        }
        Err(GeometryError::PolarNonExistent(r)) => out.nonexistent = Some(r.to_string()),
        Err(e) => return Err(CliError::Domain(e)),
    }
    Ok(out)
}

#[derive(Serialize)]
struct InequalityJson {
    holds: bool,
    predicted: Option<bool>,
}

#[derive(Serialize)]
struct ReportJson {
    family: &'static str,
    vertices: [[Num; 3]; 3],
    sides: [Num; 3],
    angles: [Num; 3],
    apex: Option<String>,
    polar_anchor: Option<String>,
    lcs_residuals: [Num; 3],
    lca_residuals: [Num; 3],
    sines_ratios: [Num; 3],
    sines_residual: Num,
    angle_sum: Option<Num>,
    side_sum: Option<Num>,
    sum_theorem_holds: bool,
    triangle_inequality: InequalityJson,
    max_residual: Num,
    passes: bool,
}

#[derive(Serialize)]
struct Summary {
    count: usize,
    max_residual: Num,
    failures: usize,
    tolerance: Num,
}

#[derive(Serialize)]
pub struct VerifyOut {
    schema: &'static str,
    reports: Vec<ReportJson>,
    summary: Summary,
}

impl VerifyOut {
    pub fn failures(&self) -> usize {
        self.summary.failures
    }
}

fn report_json(t: &Triangle, r: &TrigReport, residual_bound: f64, tol: &Tolerances) -> ReportJson {
    let m = &r.measurements;
    let ineq = inequality_report_for(&classify_triangle(t, tol), tol);
    ReportJson {
        family: r.family.name(),
        vertices: coords(t),
        sides: nums(m.sides),
        angles: nums(m.angles),
        apex: m.apex.map(|v| format!("{v:?}")),
        polar_anchor: m.polar_anchor.map(|s| s.to_string()),
        lcs_residuals: nums(r.lcs_residuals),
        lca_residuals: nums(r.lca_residuals),
        sines_ratios: nums(r.sines_ratios),
        sines_residual: Num(r.sines_residual),
        angle_sum: r.angle_sum.map(Num),
        side_sum: r.side_sum.map(Num),
        sum_theorem_holds: r.sum_theorem_holds(),
        triangle_inequality: InequalityJson { holds: ineq.holds, predicted: ineq.predicted },
        max_residual: Num(r.max_residual()),
        passes: r.passes(residual_bound),
    }
}

fn verify_all(ts: &[Triangle], residual_bound: f64, tol: &Tolerances) -> Result<VerifyOut, CliError> {
    let mut reports = Vec::with_capacity(ts.len());
    let mut max: f64 = 0.0;
    let mut failures = 0;
    for t in ts {
        let r = trig_report(t, tol).map_err(CliError::Domain)?;
        let j = report_json(t, &r, residual_bound, tol);
        max = max.max(r.max_residual());
        failures += usize::from(!j.passes);
        reports.push(j);
    }
    let summary = Summary { count: reports.len(), max_residual: Num(max), failures, tolerance: Num(residual_bound) };
    Ok(VerifyOut { schema: SCHEMA, reports, summary })
}

pub fn verify(input: &JsonTriangle, residual_bound: f64, tol: &Tolerances) -> Result<VerifyOut, CliError> {
    verify_all(&[input.triangle(tol)?], residual_bound, tol)
}

pub fn parse_family(name: &str) -> Result<SampleFamily, CliError> {
    SampleFamily::from_name(name).ok_or_else(|| {
        let known: Vec<_> = SampleFamily::ALL.iter().map(|f| f.name()).collect();
        CliError::Input(format!("unknown family \"{name}\"; expected one of {}", known.join(", ")))
    })
}

fn draw(family: SampleFamily, count: usize, seed: u64, tol: &Tolerances) -> Result<Vec<Triangle>, CliError> {
    sample_triangles(&SampleSpec::new(family, count, seed), tol).map_err(CliError::Domain)
}

pub fn verify_sample(
    family: SampleFamily,
    count: usize,
    seed: u64,
    residual_bound: f64,
    tol: &Tolerances,
) -> Result<VerifyOut, CliError> {
    if !family.has_trig_laws() {
        return Err(CliError::Input(format!("family \"{family}\" has no trigonometric laws")));
    }
    verify_all(&draw(family, count, seed, tol)?, residual_bound, tol)
}

#[derive(Serialize)]
struct SampledTriangle {
    vertices: [[Num; 3]; 3],
}

#[derive(Serialize)]
pub struct SampleOut {
    schema: &'static str,
    family: &'static str,
    seed: u64,
    triangles: Vec<SampledTriangle>,
}

pub fn sample(family: SampleFamily, count: usize, seed: u64, tol: &Tolerances) -> Result<SampleOut, CliError> {
    let triangles = draw(family, count, seed, tol)?.iter().map(|t| SampledTriangle { vertices: coords(t) }).collect();
    Ok(SampleOut { schema: SCHEMA, family: family.name(), seed, triangles })
}

/// Writes `samples` points of the segment as CSV rows `x1,x2,x3,t`.
///
/// The first and last rows repeat the endpoints exactly.
pub fn export_geodesic<W: Write>(input: &JsonSegment, samples: usize, tol: &Tolerances, out: W) -> Result<(), CliError> {
    if samples < 2 {
        return Err(CliError::Input("--samples must be at least 2".into()));
    }
    let (a, b) = (point(input.a, tol)?, point(input.b, tol)?);
    let seg = Segment::new(&a, &b, tol).map_err(CliError::Domain)?;
    if matches!(seg.kind(), SegmentKind::Empty) {
        return Err(CliError::Domain(GeometryError::EmptySegment));
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x1", "x2", "x3", "t"]).map_err(csv_error)?;
    let last = samples - 1;
    for i in 0..samples {
        let t = seg.bound() * i as f64 / last as f64;
        let x = match i {
            0 => a.coords(),
            i if i == last => b.coords(),
            _ => seg.point(t).map_err(CliError::Domain)?,
        };
        let row = [x.x1, x.x2, x.x3, t].map(crate::num::fmt17);
        w.write_record(&row).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(e))
}
