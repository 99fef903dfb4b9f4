//! Canonical JSON: sorted keys, floats with 17 significant digits, two-space indent, LF.

use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::hypergroup::FiniteHypergroup;

/// `x` with 17 significant digits, e.g. `5.0000000000000000e-1`; integral values that fit
/// exactly are written as integers.
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if x.fract() == 0.0 && x.abs() < 1e15 {
        return format!("{}", x as i64);
    }
    format!("{x:.16e}")
}

fn write_value(out: &mut String, v: &Value, indent: usize, pretty: bool) {
    let pad = |out: &mut String, n: usize| {
        if pretty {
            out.push('\n');
            out.extend(std::iter::repeat_n(' ', n));
        }
    };
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => match (n.as_i64(), n.as_u64(), n.as_f64()) {
            (Some(i), _, _) => out.push_str(&i.to_string()),
            (_, Some(u), _) => out.push_str(&u.to_string()),
            (_, _, Some(f)) => out.push_str(&format_float(f)),
            _ => out.push_str("null"),
        },
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            // Arrays of scalars stay on one line.
            let flat = !pretty || items.iter().all(|i| !i.is_array() && !i.is_object());
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                    if flat && pretty {
                        out.push(' ');
                    }
                }
                if !flat {
                    pad(out, indent + 2);
                }
                write_value(out, item, indent + 2, pretty);
            }
            if !flat {
                pad(out, indent);
            }
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push('{');
            for (i, key) in keys.into_iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                pad(out, indent + 2);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push(':');
                if pretty {
                    out.push(' ');
                }
                write_value(out, &map[key], indent + 2, pretty);
            }
            pad(out, indent);
            out.push('}');
        }
    }
}

/// Indented canonical form with a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0, true);
    out.push('\n');
    out
}

/// Single-line canonical form.
pub fn to_compact_string(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0, false);
    out
}

/// SHA-256 of the compact canonical form of `{order, involution, constants}`.
pub fn digest(k: &FiniteHypergroup) -> String {
    let n = k.order();
    let constants: Vec<Vec<Vec<f64>>> = (0..n)
        .map(|i| (0..n).map(|j| k.product(i, j).to_vec()).collect())
        .collect();
    let v = serde_json::json!({
        "order": n,
        "involution": k.involution(),
        "constants": constants,
    });
    hex::encode(Sha256::digest(to_compact_string(&v).as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn floats_round_trip() {
        for x in [0.1, 1.0 / 3.0, 2.0f64.sqrt(), 1e-300, -7.25, 123456.789] {
            let s = format_float(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
        assert_eq!(format_float(2.0), "2");
        assert_eq!(format_float(0.5), "5.0000000000000000e-1");
    }

    #[test]
    fn keys_are_sorted() {
        let v = json!({"b": 1, "a": [1.5, 2], "c": {"z": null, "y": true}});
        assert_eq!(
            to_compact_string(&v),
            r#"{"a":[1.5000000000000000e0,2],"b":1,"c":{"y":true,"z":null}}"#
        );
        let pretty = to_canonical_string(&v);
        assert!(pretty.ends_with("}\n"));
        assert!(!pretty.contains('\r'));
        let back: Value = serde_json::from_str(&pretty).unwrap();
        assert_eq!(back["c"]["y"], json!(true));
    }

    #[test]
    fn digest_is_stable() {
        let z = crate::constructions::z2_theta(0.5).unwrap();
        let same = crate::constructions::z2_theta(0.5).unwrap().with_name("other");
        assert_eq!(digest(&z), digest(&same));
        assert_ne!(digest(&z), digest(&crate::constructions::z2_theta(0.25).unwrap()));
        assert_eq!(digest(&z).len(), 64);
    }
}
