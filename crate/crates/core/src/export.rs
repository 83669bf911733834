//! JSON encodings shared by the character table, representations and forms.
//!
//! A scalar is `{"exact": "<poly in zeta>" | null, "float": [re, im]}`; the
//! conductor of `zeta` is stated once by the enclosing document.

use serde_json::{json, Value};

use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub fn scalar_json<S: Scalar>(x: &S) -> Value {
    let c = x.to_complex();
    json!({ "exact": x.exact_string(), "float": [c.re, c.im] })
}

/// Row-major nested arrays of scalar objects.
pub fn matrix_json<S: Scalar>(m: &Matrix<S>) -> Value {
    Value::Array((0..m.rows()).map(|r| Value::Array(m.row(r).iter().map(scalar_json).collect())).collect())
}

/// Right-aligned text grid of a matrix, with `|` separators after the given
/// column offsets and rule lines after the same row offsets.
pub fn matrix_text<S: Scalar>(m: &Matrix<S>, cuts: &[usize]) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|x| x.exact_string().unwrap_or_else(|| format_float(x)))
                .collect()
        })
        .collect();
    let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for (r, row) in cells.iter().enumerate() {
        if r > 0 && cuts.contains(&r) {
            let total = row.len() * (width + 1) + 2 * cuts.iter().filter(|&&c| c > 0 && c < row.len()).count();
            out.push_str(&"-".repeat(total));
            out.push('\n');
        }
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 && cuts.contains(&c) {
                line.push_str(" |");
            }
            line.push_str(&format!(" {cell:>width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn format_float<S: Scalar>(x: &S) -> String {
    let c = x.to_complex();
    if c.im.abs() < 1e-12 {
        format!("{:.6}", c.re)
    } else {
        format!("{:.6}{:+.6}i", c.re, c.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{CyclotomicField, FloatField, ScalarField};

    #[test]
    fn scalar_encodings() {
        let f = CyclotomicField::new(12);
        let v = scalar_json(&f.embed_cos(1, 3).unwrap());
        assert_eq!(v["exact"], "-1/2");
        assert_eq!(v["float"][0].as_f64().unwrap(), -0.5);
        let fl = scalar_json(&FloatField.from_int(2));
        assert!(fl["exact"].is_null());
    }

    #[test]
    fn text_grid() {
        let f = CyclotomicField::new(4);
        let m = Matrix::identity(3, &f.one());
        let text = matrix_text(&m, &[1]);
        assert_eq!(text.lines().count(), 4);
        assert!(text.lines().next().unwrap().contains('|'));
    }
}
