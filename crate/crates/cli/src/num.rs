//! JSON numbers with 17 significant digits.

use minktrig_core::ExtDistance;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

pub const SCHEMA: &str = "minktrig/1";

/// A float serialized with 17 significant digits; infinities as `"inf"` / `"-inf"`.
#[derive(Clone, Copy, Debug)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let x = self.0;
        if x.is_nan() {
            s.serialize_str("nan")
        } else if x.is_infinite() {
            s.serialize_str(if x > 0.0 { "inf" } else { "-inf" })
        } else {
            RawValue::from_string(fmt17(x)).map_err(serde::ser::Error::custom)?.serialize(s)
        }
    }
}

impl From<ExtDistance> for Num {
    fn from(d: ExtDistance) -> Num {
        Num(d.value())
    }
}

pub fn nums<const N: usize>(x: [f64; N]) -> [Num; N] {
    x.map(Num)
}

/// `%.17g`: 17 significant digits, trailing zeros dropped.
pub fn fmt17(x: f64) -> String {
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = mantissa.strip_prefix('-').map_or(("", mantissa), |m| ("-", m));
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    if !(-5..17).contains(&exp) {
        return format!("{sign}{}e{exp}", trim(mantissa));
    }
    let body = if exp >= 0 {
        let (int, frac) = digits.split_at(exp as usize + 1);
        format!("{int}.{frac}")
    } else {
        format!("0.{}{digits}", "0".repeat((-exp - 1) as usize))
    };
    format!("{sign}{}", trim(&body))
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
