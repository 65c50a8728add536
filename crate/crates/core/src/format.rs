//! Text and JSON encodings.
//!
//! Field strings: `q`, `p^m`, or `p^m:c0,c1,...,cm` with an explicit
//! modulus. Element tokens follow
//!
//! ```text
//! token := ['-'] term ('+' term)*
//! term  := digits | [digits] 'w' ['^' digits]
//! ```
//!
//! where `w` is the class of t in `Z_p[t]/(modulus)` and integers are
//! reduced mod p. Polynomials of FH are comma-separated tokens in ascending
//! degree. Matrix files hold `rows cols` on the first line and one row of
//! whitespace-separated tokens per line after it.

use serde::{Deserialize, Serialize};

use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::goursat::GoursatData;
use crate::group_algebra::GroupAlgebraElement;
use crate::idem::IdempotentBasis;
use crate::matrix::Matrix;

/// Upper bound on `rows * cols` accepted by [`parse_matrix`].
pub const MAX_MATRIX_ENTRIES: usize = 1 << 20;

fn parse_uint<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(format!("expected {what}, found {s:?}")));
    }
    s.parse()
        .map_err(|_| Error::parse(format!("{what} out of range: {s}")))
}

pub fn parse_field(s: &str) -> Result<FieldSpec> {
    let s = s.trim();
    let (head, modulus) = match s.split_once(':') {
        Some((h, m)) => (h, Some(m)),
        None => (s, None),
    };
    let modulus = modulus
        .map(|m| {
            m.split(',')
                .map(|c| parse_uint::<u32>(c, "modulus coefficient"))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    match head.split_once('^') {
        Some((p, m)) => {
            let p = parse_uint::<u64>(p, "characteristic")?;
            let m = parse_uint::<u32>(m, "extension degree")?;
            FieldSpec::new(p, m, modulus.as_deref())
        }
        None => {
            let q = parse_uint::<u64>(head, "field order")?;
            if modulus.is_some() {
                return Err(Error::parse("an explicit modulus needs the p^m form"));
            }
            FieldSpec::of_order(q)
        }
    }
}

/// `p^m`, with the modulus appended when it is not the default one.
pub fn format_field(f: &FieldSpec) -> String {
    let base = format!("{}^{}", f.p(), f.m());
    let default = FieldSpec::new(f.p() as u64, f.m(), None).expect("valid parameters");
    if default.same(f) {
        base
    } else {
        let m: Vec<String> = f.modulus().iter().map(u32::to_string).collect();
        format!("{base}:{}", m.join(","))
    }
}

/// Parses one element token; returns its encoding.
pub fn parse_element(f: &FieldSpec, token: &str) -> Result<u32> {
    let t = token.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    if body.is_empty() {
        return Err(Error::parse(format!("empty element token {token:?}")));
    }
    let p = f.p() as u64;
    let w = if f.m() == 1 { None } else { Some(p as u32) };
    let mut acc = 0u32;
    for term in body.split('+') {
        let term = term.trim();
        let (coef, var) = match term.find('w') {
            Some(i) => (&term[..i], Some(&term[i + 1..])),
            None => (term, None),
        };
        let c = if coef.is_empty() {
            if var.is_none() {
                return Err(Error::parse(format!("empty term in {token:?}")));
            }
            1
        } else {
            (parse_uint::<u128>(coef, "integer coefficient")? % p as u128) as u32
        };
        let v = match var {
            None => c,
            Some(rest) => {
                let w = w.ok_or_else(|| Error::parse("'w' is only defined for extension fields"))?;
                let e = if rest.is_empty() {
                    1
                } else {
                    let exp = rest
                        .strip_prefix('^')
                        .ok_or_else(|| Error::parse(format!("bad power in {term:?}")))?;
                    parse_uint::<u64>(exp, "exponent")?
                };
                f.mul(c, f.pow(w, e))
            }
        };
        acc = f.add(acc, v);
    }
    Ok(if neg { f.neg(acc) } else { acc })
}

pub fn format_element(f: &FieldSpec, v: u32) -> String {
    f.format_value(v)
}

/// Comma-separated coefficients in ascending degree; the length must be `n`
/// when given.
pub fn parse_poly(f: &FieldSpec, n: Option<usize>, s: &str) -> Result<GroupAlgebraElement> {
    let coeffs = s
        .split(',')
        .map(|t| parse_element(f, t))
        .collect::<Result<Vec<_>>>()?;
    if let Some(n) = n {
        if coeffs.len() != n {
            return Err(Error::parse(format!(
                "expected {n} coefficients, found {}",
                coeffs.len()
            )));
        }
    }
    GroupAlgebraElement::new(f, coeffs)
}

/// Comma-separated indices; the empty string is the empty set.
pub fn parse_support(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| parse_uint(t, "index")).collect()
}

pub fn parse_matrix(f: &FieldSpec, text: &str) -> Result<Matrix> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::parse("missing \"rows cols\" header"))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [r, c] = dims.as_slice() else {
        return Err(Error::parse(format!("bad header {header:?}")));
    };
    let rows: usize = parse_uint(r, "row count")?;
    let cols: usize = parse_uint(c, "column count")?;
    if rows.saturating_mul(cols) > MAX_MATRIX_ENTRIES {
        return Err(Error::parse(format!("matrix {rows}x{cols} too large")));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| Error::parse(format!("expected {rows} rows, found {i}")))?;
        let row = line
            .split_whitespace()
            .map(|t| parse_element(f, t))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != cols {
            return Err(Error::parse(format!(
                "row {i} has {} entries, expected {cols}",
                row.len()
            )));
        }
        data.extend(row);
    }
    if lines.next().is_some() {
        return Err(Error::parse("trailing data after the last row"));
    }
    Matrix::new(f, rows, cols, data)
}

pub fn format_matrix(m: &Matrix) -> String {
    let f = m.field();
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in m.row_iter() {
        let cells: Vec<String> = r.iter().map(|&v| f.format_value(v)).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Splits each row of a `k x 2n` matrix into a pair of FH elements.
pub fn matrix_to_pairs(m: &Matrix) -> Result<Vec<(GroupAlgebraElement, GroupAlgebraElement)>> {
    if !m.cols().is_multiple_of(2) {
        return Err(Error::Invalid(format!(
            "a generator matrix needs 2n columns, found {}",
            m.cols()
        )));
    }
    let n = m.cols() / 2;
    m.row_iter()
        .map(|r| {
            Ok((
                GroupAlgebraElement::new(m.field(), r[..n].to_vec())?,
                GroupAlgebraElement::new(m.field(), r[n..].to_vec())?,
            ))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub p: u32,
    pub m: u32,
    pub coeffs: Vec<u32>,
}

impl ElementJson {
    pub fn new(f: &FieldSpec, v: u32) -> Self {
        ElementJson {
            p: f.p(),
            m: f.m(),
            coeffs: f.digits(v),
        }
    }

    pub fn decode(&self, f: &FieldSpec) -> Result<u32> {
        if self.p != f.p() || self.m != f.m() {
            return Err(Error::SpecMismatch);
        }
        Ok(f.from_coeffs(&self.coeffs)?.value())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub n: usize,
    pub coeffs: Vec<ElementJson>,
}

impl PolyJson {
    pub fn new(a: &GroupAlgebraElement) -> Self {
        PolyJson {
            n: a.n(),
            coeffs: a
                .coeffs()
                .iter()
                .map(|&v| ElementJson::new(a.field(), v))
                .collect(),
        }
    }

    pub fn decode(&self, f: &FieldSpec) -> Result<GroupAlgebraElement> {
        if self.coeffs.len() != self.n {
            return Err(Error::parse(format!(
                "polynomial declares n = {} but has {} coefficients",
                self.n,
                self.coeffs.len()
            )));
        }
        let c = self
            .coeffs
            .iter()
            .map(|e| e.decode(f))
            .collect::<Result<Vec<_>>>()?;
        GroupAlgebraElement::new(f, c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentsJson {
    pub idempotents: Vec<PolyJson>,
    pub dims: Vec<usize>,
    pub bar_perm: Vec<usize>,
    #[serde(rename = "E1")]
    pub e1: Vec<usize>,
    #[serde(rename = "E2")]
    pub e2: Vec<usize>,
}

impl IdempotentsJson {
    pub fn new(b: &IdempotentBasis) -> Self {
        let (e1, e2) = b.bar_partition();
        IdempotentsJson {
            idempotents: b.idempotents().iter().map(PolyJson::new).collect(),
            dims: b.dims().to_vec(),
            bar_perm: b.bar_perm().to_vec(),
            e1,
            e2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicJson {
    pub support: Vec<usize>,
    pub dim: usize,
}

impl CyclicJson {
    pub fn new(c: &CyclicCode) -> Self {
        CyclicJson {
            support: c.support(),
            dim: c.dim(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoursatJson {
    #[serde(rename = "C1")]
    pub c1: Vec<usize>,
    #[serde(rename = "C2")]
    pub c2: Vec<usize>,
    #[serde(rename = "C12")]
    pub c12: Vec<usize>,
    pub g: PolyJson,
}

impl GoursatJson {
    pub fn new(d: &GoursatData) -> Self {
        GoursatJson {
            c1: d.c1().support(),
            c2: d.c2().support(),
            c12: d.c12().support(),
            g: PolyJson::new(d.g()),
        }
    }

    /// Validates against `basis` exactly as [`GoursatData::new`] does.
    pub fn decode(&self, basis: &std::sync::Arc<IdempotentBasis>) -> Result<GoursatData> {
        let g = self.g.decode(basis.field())?;
        if g.n() != basis.n() {
            return Err(Error::SpecMismatch);
        }
        GoursatData::new(
            CyclicCode::new(basis, &self.c1)?,
            CyclicCode::new(basis, &self.c2)?,
            CyclicCode::new(basis, &self.c12)?,
            g,
        )
    }
}

pub fn parse_goursat_json(basis: &std::sync::Arc<IdempotentBasis>, s: &str) -> Result<GoursatData> {
    let j: GoursatJson = serde_json::from_str(s).map_err(|e| Error::parse(e.to_string()))?;
    j.decode(basis)
}

pub fn goursat_to_json(d: &GoursatData) -> String {
    serde_json::to_string(&GoursatJson::new(d)).expect("plain data serializes")
}

/// `{"error":{"kind":...,"detail":...}}`.
pub fn error_json(e: &Error) -> String {
    #[derive(Serialize)]
    struct Body<'a> {
        kind: &'a str,
        detail: String,
    }
    #[derive(Serialize)]
    struct Wrapper<'a> {
        error: Body<'a>,
    }
    let w = Wrapper {
        error: Body {
            kind: e.kind(),
            detail: e.to_string(),
        },
    };
    serde_json::to_string(&w).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idem::primitive_idempotents;

    #[test]
    fn fields() {
        assert_eq!(parse_field("2^2").unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(parse_field("4").unwrap(), parse_field("2^2").unwrap());
        assert_eq!(parse_field("5").unwrap().q(), 5);
        assert_eq!(parse_field("2^3:1,1,0,1").unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(format_field(&parse_field("2^3:1,1,0,1").unwrap()), "2^3:1,1,0,1");
        assert_eq!(format_field(&parse_field("8").unwrap()), "2^3");
        assert_eq!(parse_field("2^2:1,0,1").unwrap_err().kind(), "NotIrreducible");
        assert_eq!(parse_field("6").unwrap_err().kind(), "Invalid");
        for bad in ["", "^", "2^", "x", "2^2:", "3:1,1", "2^-1"] {
            assert!(parse_field(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn element_tokens() {
        let f4 = parse_field("4").unwrap();
        assert_eq!(parse_element(&f4, "w").unwrap(), 2);
        assert_eq!(parse_element(&f4, "w^2").unwrap(), 3);
        assert_eq!(parse_element(&f4, "w+1").unwrap(), 3);
        assert_eq!(parse_element(&f4, "1+w+w^2").unwrap(), 0);
        assert_eq!(parse_element(&f4, "w^3").unwrap(), 1);
        let f5 = parse_field("5").unwrap();
        assert_eq!(parse_element(&f5, "-1").unwrap(), 4);
        assert_eq!(parse_element(&f5, "7").unwrap(), 2);
        assert!(parse_element(&f5, "w").is_err());
        for bad in ["", "-", "+", "1+", "w^", "w2", "2x", "--1"] {
            assert!(parse_element(&f4, bad).is_err(), "{bad}");
        }
        let f9 = parse_field("9").unwrap();
        for v in 0..9 {
            assert_eq!(parse_element(&f9, &f9.format_value(v)).unwrap(), v);
        }
    }

    #[test]
    fn polys_and_matrices() {
        let f4 = parse_field("4").unwrap();
        let e1 = parse_poly(&f4, Some(3), "1,w,w^2").unwrap();
        assert_eq!(e1.coeffs(), &[1, 2, 3]);
        assert!(parse_poly(&f4, Some(4), "1,w,w^2").is_err());
        assert_eq!(parse_poly(&f4, None, "1,1").unwrap_err().kind(), "NotCoprime");
        let m = parse_matrix(&f4, "2 3\n1 w w^2\n0 0 1\n").unwrap();
        assert_eq!(parse_matrix(&f4, &format_matrix(&m)).unwrap(), m);
        for bad in ["", "2", "1 2\n1", "1 1\n1\n1", "1 1\nz", "99999 99999\n"] {
            assert!(parse_matrix(&f4, bad).is_err(), "{bad:?}");
        }
        assert_eq!(parse_support("").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_support("0, 2").unwrap(), vec![0, 2]);
    }

    #[test]
    fn json_round_trips() {
        let f4 = parse_field("4").unwrap();
        let b = primitive_idempotents(&f4, 3).unwrap();
        let d = GoursatData::new(
            CyclicCode::new(&b, &[1]).unwrap(),
            CyclicCode::new(&b, &[1]).unwrap(),
            CyclicCode::new(&b, &[0]).unwrap(),
            b.idempotent(0).clone(),
        )
        .unwrap();
        let s = goursat_to_json(&d);
        assert!(s.starts_with(r#"{"C1":[1],"C2":[1],"C12":[0],"g":{"n":3,"coeffs":[{"p":2,"m":2,"coeffs":[1,0]}"#));
        assert_eq!(parse_goursat_json(&b, &s).unwrap(), d);
        assert!(parse_goursat_json(&b, "{}").is_err());
        let j = serde_json::to_value(IdempotentsJson::new(&b)).unwrap();
        assert_eq!(j["E1"], serde_json::json!([0]));
        assert_eq!(j["E2"], serde_json::json!([1, 2]));
        assert_eq!(
            error_json(&Error::NotUnit(1)),
            r#"{"error":{"kind":"NotUnit","detail":"g is not a unit of C12: g*e_1 = 0"}}"#
        );
    }
}
