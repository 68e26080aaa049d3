use std::io::Read;
use std::path::Path;

use minktrig_core::{MVec3, SurfacePoint, Tolerances, Triangle};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;

use crate::error::CliError;
use crate::num::SCHEMA;

#[derive(Debug, Deserialize)]
pub struct JsonTriangle {
    #[allow(dead_code)]
    pub schema: Option<String>,
    pub vertices: [[f64; 3]; 3],
}

#[derive(Debug, Deserialize)]
pub struct JsonSegment {
    #[allow(dead_code)]
    pub schema: Option<String>,
    pub a: [f64; 3],
    pub b: [f64; 3],
}

pub fn read_source(file: Option<&Path>) -> Result<String, CliError> {
    Ok(match file {
        Some(p) => std::fs::read_to_string(p)?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    })
}

/// Parses a top-level object. With `strict`, fields outside `allowed` are
/// rejected; otherwise they are ignored.
pub fn parse<T: DeserializeOwned>(text: &str, allowed: &[&str], strict: bool) -> Result<T, CliError> {
    let value: Value = serde_json::from_str(text)?;
    let obj = value.as_object().ok_or_else(|| CliError::Input("expected a JSON object".into()))?;
    if let Some(s) = obj.get("schema") {
        if s.as_str() != Some(SCHEMA) {
            return Err(CliError::Input(format!("unsupported schema {s}, expected \"{SCHEMA}\"")));
        }
    }
    if strict {
        if let Some(k) = obj.keys().find(|k| *k != "schema" && !allowed.contains(&k.as_str())) {
            return Err(CliError::Input(format!("unknown field \"{k}\"")));
        }
    }
    Ok(serde_json::from_value(value)?)
}

fn vec3([x1, x2, x3]: [f64; 3]) -> MVec3 {
    MVec3::new(x1, x2, x3)
}

pub fn point(x: [f64; 3], tol: &Tolerances) -> Result<SurfacePoint, CliError> {
    SurfacePoint::new(vec3(x), tol).map_err(CliError::InvalidGeometry)
}

impl JsonTriangle {
    pub const FIELDS: &'static [&'static str] = &["vertices"];

    pub fn triangle(&self, tol: &Tolerances) -> Result<Triangle, CliError> {
        Triangle::from_coords(self.vertices.map(vec3), tol).map_err(CliError::InvalidGeometry)
    }
}

impl JsonSegment {
    pub const FIELDS: &'static [&'static str] = &["a", "b"];
}
