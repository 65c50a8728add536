//! The group algebra FH = F[x]/(x^n - 1) of a cyclic group of order n,
//! gcd(n, q) = 1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::matrix::Matrix;

/// `a_0 + a_1 x + ... + a_{n-1} x^{n-1}`, identified with the word
/// `(a_0, ..., a_{n-1})`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement {
    field: FieldSpec,
    coeffs: Vec<u32>,
}

/// Checks the standing hypothesis gcd(n, q) = 1.
pub fn check_length(field: &FieldSpec, n: usize) -> Result<()> {
    if n == 0 || arith::gcd(n as u64, field.p() as u64) != 1 {
        return Err(Error::NotCoprime {
            n,
            q: field.q() as u64,
        });
    }
    Ok(())
}

impl GroupAlgebraElement {
    pub fn new(field: &FieldSpec, coeffs: Vec<u32>) -> Result<Self> {
        check_length(field, coeffs.len())?;
        if coeffs.iter().any(|&c| c >= field.q()) {
            return Err(Error::Invalid("coefficient outside the field".into()));
        }
        Ok(Self::from_raw(field, coeffs))
    }

    pub fn from_elements(field: &FieldSpec, elems: &[FieldElement]) -> Result<Self> {
        for e in elems {
            field.check_same(e.spec())?;
        }
        Self::new(field, elems.iter().map(|e| e.value()).collect())
    }

    /// No validation; for internal callers that already hold a valid length.
    pub(crate) fn from_raw(field: &FieldSpec, coeffs: Vec<u32>) -> Self {
        GroupAlgebraElement {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &FieldSpec, n: usize) -> Result<Self> {
        Self::new(field, vec![0; n])
    }

    pub fn one(field: &FieldSpec, n: usize) -> Result<Self> {
        let mut c = vec![0; n];
        if n > 0 {
            c[0] = 1;
        }
        Self::new(field, c)
    }

    /// `c x^k`.
    pub fn monomial(field: &FieldSpec, n: usize, k: usize, c: u32) -> Result<Self> {
        let mut v = vec![0; n];
        if n > 0 {
            v[k % n] = c;
        }
        Self::new(field, v)
    }

    pub(crate) fn zero_like(&self) -> Self {
        Self::from_raw(&self.field, vec![0; self.n()])
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field.element(self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        self.field.check_same(&other.field)?;
        if self.n() != other.n() {
            return Err(Error::SpecMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = &self.field;
        Ok(Self::from_raw(
            f,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        ))
    }

    /// Cyclic convolution: `c_k = sum_{i+j = k mod n} a_i b_j`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        let f = &self.field;
        Self::from_raw(
            f,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        )
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.n();
        let mut out = vec![0u32; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let k = if i + j >= n { i + j - n } else { i + j };
                out[k] = f.add(out[k], f.mul(a, b));
            }
        }
        Self::from_raw(f, out)
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Self::from_raw(f, self.coeffs.iter().map(|&a| f.neg(a)).collect())
    }

    /// Multiplication by a scalar given as an encoding.
    pub fn scale(&self, c: u32) -> Self {
        let f = &self.field;
        Self::from_raw(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// `x^k * self`: the word shifted right cyclically by `k`.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.n();
        let mut out = vec![0u32; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            out[(i + k) % n] = a;
        }
        Self::from_raw(&self.field, out)
    }

    /// The involution `x -> x^{-1}`: index 0 fixed, index k to n - k.
    pub fn bar(&self) -> Self {
        Self::from_raw(&self.field, bar_word(&self.coeffs))
    }

    /// The linear form picking the coefficient of the identity.
    pub fn sigma(&self) -> FieldElement {
        self.field.element(self.coeffs[0])
    }

    /// `sum a_i b_i`.
    pub fn inner(&self, other: &Self) -> Result<FieldElement> {
        self.check(other)?;
        let f = &self.field;
        let v = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
        Ok(f.element(v))
    }

    /// `a(P) = a_0 I + a_1 P + ... + a_{n-1} P^{n-1}`: row k is the right
    /// cyclic shift of row k-1, row 0 is the coefficient word.
    pub fn circulant(&self) -> Matrix {
        let n = self.n();
        let mut data = Vec::with_capacity(n * n);
        for k in 0..n {
            data.extend_from_slice(self.shift(k).coeffs());
        }
        Matrix::new(&self.field, n, n, data).expect("square and in range")
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::from_raw(&self.field, {
            let mut c = vec![0; self.n()];
            c[0] = 1;
            c
        });
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&b);
            }
            b = b.mul_unchecked(&b);
            e >>= 1;
        }
        acc
    }
}

pub(crate) fn bar_word(a: &[u32]) -> Vec<u32> {
    let n = a.len();
    (0..n).map(|k| a[(n - k) % n]).collect()
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ascending comma-separated coefficients, the CLI polynomial syntax.
impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|&c| self.field.format_value(c)).collect();
        write!(f, "{}", parts.join(","))
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident) => {
        impl $tr for &GroupAlgebraElement {
            type Output = GroupAlgebraElement;
            fn $method(self, rhs: Self) -> GroupAlgebraElement {
                GroupAlgebraElement::$method(self, rhs)
                    .expect("operands must share the field and the length n")
            }
        }
    };
}

forward_op!(Add, add);
forward_op!(Sub, sub);
forward_op!(Mul, mul);

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn neg(self) -> GroupAlgebraElement {
        GroupAlgebraElement::neg(self)
    }
}
