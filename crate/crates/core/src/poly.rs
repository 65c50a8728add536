//! Dense univariate polynomials over a [`FieldSpec`].

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

/// Ascending coefficients, trimmed so the leading coefficient is nonzero.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<u32>,
}

impl Polynomial {
    pub fn new(field: &FieldSpec, mut coeffs: Vec<u32>) -> Self {
        assert!(coeffs.iter().all(|&c| c < field.q()));
        trim(&mut coeffs);
        Polynomial {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field.element(self.coeffs.get(i).copied().unwrap_or(0))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.field.check_same(&other.field)?;
        Ok(Polynomial::new(&self.field, mul(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn rem(&self, other: &Polynomial) -> Result<Polynomial> {
        self.field.check_same(&other.field)?;
        if other.coeffs.is_empty() {
            return Err(Error::DivisionByZero);
        }
        Ok(Polynomial::new(
            &self.field,
            divrem(&self.field, &self.coeffs, &other.coeffs).1,
        ))
    }

    /// `x^n - 1`.
    pub fn xn_minus_one(field: &FieldSpec, n: usize) -> Polynomial {
        let mut c = vec![0; n + 1];
        c[0] = field.neg(1);
        c[n] = 1;
        Polynomial::new(field, c)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let coef = self.field.format_value(c);
            let coef = if coef.contains('+') { format!("({coef})") } else { coef };
            terms.push(match (c, k) {
                (_, 0) => coef,
                (1, _) => var,
                _ => format!("{coef}{var}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

// Slice-level helpers. Inputs need not be trimmed; outputs are.

pub(crate) fn trim(c: &mut Vec<u32>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

pub(crate) fn add(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = (0..a.len().max(b.len()))
        .map(|i| f.add(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn sub(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = (0..a.len().max(b.len()))
        .map(|i| f.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero after trimming.
pub(crate) fn divrem(f: &FieldSpec, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = f.inv(b[db]).unwrap();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quo = vec![0u32; r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = f.mul(r[dr], lead_inv);
        quo[dr - db] = c;
        for (i, &bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = f.sub(r[idx], f.mul(c, bc));
        }
        r.pop();
        trim(&mut r);
    }
    trim(&mut quo);
    (quo, r)
}

pub(crate) fn scale(f: &FieldSpec, a: &[u32], c: u32) -> Vec<u32> {
    let mut out: Vec<u32> = a.iter().map(|&x| f.mul(x, c)).collect();
    trim(&mut out);
    out
}

/// Returns `(g, s, t)` with `s a + t b = g`, `g` monic (or zero).
pub(crate) fn ext_gcd(f: &FieldSpec, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>, Vec<u32>) {
    let mut r0 = a.to_vec();
    trim(&mut r0);
    let mut r1 = b.to_vec();
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![1u32], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u32]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if let Some(&lead) = r0.last() {
        let li = f.inv(lead).unwrap();
        (scale(f, &r0, li), scale(f, &s0, li), scale(f, &t0, li))
    } else {
        (r0, s0, t0)
    }
}

/// `base^e mod modulus`.
pub(crate) fn powmod(f: &FieldSpec, base: &[u32], mut e: u128, modulus: &[u32]) -> Vec<u32> {
    let mut acc = divrem(f, &[1], modulus).1;
    let mut b = divrem(f, base, modulus).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = divrem(f, &mul(f, &acc, &b), modulus).1;
        }
        b = divrem(f, &mul(f, &b, &b), modulus).1;
        e >>= 1;
    }
    acc
}
