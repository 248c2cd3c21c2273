//! Serialization of triangle rows: JSON, CSV, identity-style text, and the
//! flattened "index value" listing used by sequence-database b-files.

use num::traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{rational_str, Rational};

/// `{"m": m, "coefficients": [{"r": r, "value": "num/den"}, ...]}` with `r` ascending.
pub fn row_json(m: u64, row: &[Rational]) -> Value {
    let coefficients: Vec<Value> = row
        .iter()
        .enumerate()
        .map(|(r, v)| json!({"r": r, "value": rational_str(v)}))
        .collect();
    json!({"m": m, "coefficients": coefficients})
}

pub fn rows_json(rows: &[(u64, Vec<Rational>)]) -> Value {
    Value::Array(rows.iter().map(|(m, row)| row_json(*m, row)).collect())
}

/// CSV lines `m,r,value`, header included.
pub fn rows_csv(rows: &[(u64, Vec<Rational>)]) -> String {
    let mut out = String::from("m,r,value\n");
    for (m, row) in rows {
        for (r, v) in row.iter().enumerate() {
            out.push_str(&format!("{m},{r},{}\n", rational_str(v)));
        }
    }
    out
}

/// Flattened listing `index value`, rows read `r = 0..=m`, indexed from 1.
pub fn bfile_listing(rows: &[(u64, Vec<Rational>)]) -> String {
    let mut out = String::new();
    let mut index = 1usize;
    for (_, row) in rows {
        for v in row {
            out.push_str(&format!("{index} {}\n", rational_str(v)));
            index += 1;
        }
    }
    out
}

/// Renders the identity line for one row in the presentation style of the
/// published list: descending `r`, zero terms omitted, constant term last,
/// negatives as subtraction, e.g.
/// `x^7 = Σ_{k=1}^{x} 140*k^3*(x-k)^3 - 14*k*(x-k) + 1`.
pub fn identity_text(m: u64, row: &[Rational]) -> String {
    let mut out = format!("x^{} = Σ_{{k=1}}^{{x}}", 2 * m + 1);
    let mut first = true;
    for r in (0..row.len()).rev() {
        let c = &row[r];
        if c.is_zero() {
            continue;
        }
        let sep = if first {
            " "
        } else if c.is_negative() {
            " - "
        } else {
            " + "
        };
        out.push_str(sep);
        if first && c.is_negative() {
            out.push('-');
        }
        first = false;
        let mag = c.abs();
        if r == 0 {
            out.push_str(&rational_str(&mag));
            continue;
        }
        if !mag.is_one() {
            out.push_str(&rational_str(&mag));
            out.push('*');
        }
        if r == 1 {
            out.push_str("k*(x-k)");
        } else {
            out.push_str(&format!("k^{r}*(x-k)^{r}"));
        }
    }
    if first {
        out.push_str(" 0");
    }
    out
}
