//! Value parsers for literals that clap cannot derive on its own. Their
//! failures surface as usage errors naming the offending token.

use monodromy_core::kernel_bundle::KernelBundleSpec;
use monodromy_core::monodromy::parse_rational;
use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::Value;

pub fn rational(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

pub fn big_uint(s: &str) -> Result<BigUint, String> {
    s.trim().parse().map_err(|_| format!("not a nonnegative integer: {s:?}"))
}

/// Rows of a matrix literal.
#[derive(Clone, Debug)]
pub struct Rows(pub Vec<Vec<BigRational>>);

/// A JSON array of rows; entries are rational strings such as `"3/7"` or
/// plain integers.
pub fn matrix(s: &str) -> Result<Rows, String> {
    let rows: Vec<Vec<Value>> = serde_json::from_str(s).map_err(|e| format!("malformed matrix {s:?}: {e}"))?;
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|v| match v {
                    Value::String(t) => rational(t),
                    Value::Number(n) if n.is_i64() => rational(&n.to_string()),
                    other => Err(format!("malformed matrix entry {other}")),
                })
                .collect()
        })
        .collect::<Result<_, _>>()
        .map(Rows)
}

/// `example-beispi`, an inline JSON object, or the path of a JSON file.
pub fn bundle_spec(s: &str) -> Result<KernelBundleSpec, String> {
    if s == "example-beispi" {
        return Ok(KernelBundleSpec::example_syzygy());
    }
    let text = if s.trim_start().starts_with('{') {
        s.to_string()
    } else {
        std::fs::read_to_string(s).map_err(|e| format!("cannot read bundle spec {s:?}: {e}"))?
    };
    serde_json::from_str(&text).map_err(|e| format!("malformed bundle spec {s:?}: {e}"))
}
