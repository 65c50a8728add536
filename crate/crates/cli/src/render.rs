use qcd_core::{GroupAlgebraElement, Matrix};
use serde_json::{json, Value};

/// Ascending coefficients, the same form the CLI reads.
pub fn poly(a: &GroupAlgebraElement) -> String {
    let f = a.field();
    a.coeffs()
        .iter()
        .map(|&c| f.format_value(c))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn matrix_json(m: &Matrix) -> Value {
    let f = m.field();
    let rows: Vec<Vec<String>> = m
        .row_iter()
        .map(|r| r.iter().map(|&v| f.format_value(v)).collect())
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "matrix": rows })
}

pub fn support(s: &[usize]) -> String {
    let items: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (k, (c, w)) in cells.iter().zip(&width).enumerate() {
            if k + 1 == cells.len() {
                s.push_str(c);
            } else {
                s.push_str(&format!("{c:<w$}  "));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

/// `key  value` lines with the keys padded to a common width.
pub fn pairs(items: &[(&str, String)]) -> String {
    let w = items.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    items.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect()
}

pub fn to_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values serialize");
    s.push('\n');
    s
}
