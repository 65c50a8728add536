//! Exact arithmetic in F_q, q = p^m.
//!
//! An element is encoded as the integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
//! where `c_i` are its coordinates in the power basis `1, t, ..., t^{m-1}` of
//! `Z_p[t]/(modulus)`. Multiplication goes through discrete log tables.

use std::fmt;
use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};

/// Default bound on `q` for [`FieldSpec::new`].
pub const DEFAULT_FIELD_CAP: u64 = 1 << 16;

/// A finite field with a fixed irreducible modulus. Cheap to clone.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    // exp has length 2(q-1) so that log sums need no reduction
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl FieldSpec {
    /// Builds F_{p^m}. Without a modulus the lexicographically smallest
    /// monic irreducible of degree `m` (ascending coefficients) is used.
    pub fn new(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        Self::with_cap(p, m, modulus, DEFAULT_FIELD_CAP)
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// Parses `q` as a prime power and builds the default field of that size.
    pub fn of_order(q: u64) -> Result<Self> {
        if q > DEFAULT_FIELD_CAP {
            return Err(Error::CapExceeded {
                what: "field order",
                needed: q as u128,
                cap: DEFAULT_FIELD_CAP as u128,
            });
        }
        let (p, m) = arith::prime_power(q)
            .ok_or_else(|| Error::Invalid(format!("{q} is not a prime power")))?;
        Self::new(p, m, None)
    }

    pub fn with_cap(p: u64, m: u32, modulus: Option<&[u32]>, cap: u64) -> Result<Self> {
        // checked before primality so huge inputs fail fast
        if p > cap && p >= 2 {
            return Err(Error::CapExceeded {
                what: "field order",
                needed: p as u128,
                cap: cap as u128,
            });
        }
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::Invalid("extension degree must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
        if q > cap as u128 || q > u32::MAX as u128 {
            return Err(Error::CapExceeded {
                what: "field order",
                needed: q,
                cap: cap as u128,
            });
        }
        let p = p as u32;
        let modulus = match modulus {
            Some(f) => {
                if f.len() != m as usize + 1 || f[m as usize] != 1 || f.iter().any(|&c| c >= p)
                {
                    return Err(Error::Invalid(format!(
                        "modulus must be monic of degree {m} with coefficients in [0, {p})"
                    )));
                }
                if !zp_is_irreducible(f, p) {
                    return Err(Error::NotIrreducible(f.to_vec(), p));
                }
                f.to_vec()
            }
            None => smallest_irreducible(p, m as usize),
        };
        let q = q as u32;
        let (exp, log) = build_log_tables(p, q, &modulus);
        Ok(FieldSpec(Arc::new(Inner {
            p,
            m,
            q,
            modulus,
            exp,
            log,
        })))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Ascending coefficients, length `m + 1`.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn same(&self, other: &FieldSpec) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }

    pub fn check_same(&self, other: &FieldSpec) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// Element from its integer encoding. Panics if `value >= q`.
    pub fn element(&self, value: u32) -> FieldElement {
        assert!(value < self.q(), "encoding {value} out of range for F_{}", self.q());
        FieldElement {
            spec: self.clone(),
            value,
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.m() as usize || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(Error::Invalid(format!(
                "element needs {} coefficients in [0, {})",
                self.m(),
                self.p()
            )));
        }
        Ok(self.element(self.encode(coeffs)))
    }

    /// All q elements: 0, 1, then increasing encoding.
    pub fn elements(&self) -> Vec<FieldElement> {
        (0..self.q()).map(|v| self.element(v)).collect()
    }

    pub fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * self.p() + c)
    }

    pub fn digits(&self, mut v: u32) -> Vec<u32> {
        let p = self.p();
        (0..self.m())
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    /// The primitive element the log tables are built on.
    pub fn generator(&self) -> u32 {
        self.0.exp[1]
    }

    /// Image of an integer under Z -> F_p -> F_q.
    pub fn from_int(&self, i: i64) -> u32 {
        i.rem_euclid(self.p() as i64) as u32
    }

    // Raw arithmetic on encodings. Callers guarantee operands are < q.

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = &self.0;
        if s.m == 1 {
            let t = a + b;
            if t >= s.p {
                t - s.p
            } else {
                t
            }
        } else if s.p == 2 {
            a ^ b
        } else {
            let (mut a, mut b) = (a, b);
            let mut out = 0;
            let mut place = 1;
            while a > 0 || b > 0 {
                let d = (a % s.p + b % s.p) % s.p;
                out += d * place;
                place *= s.p;
                a /= s.p;
                b /= s.p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let s = &self.0;
        if s.p == 2 {
            a
        } else if s.m == 1 {
            if a == 0 {
                0
            } else {
                s.p - a
            }
        } else {
            let mut a = a;
            let mut out = 0;
            let mut place = 1;
            while a > 0 {
                let d = a % s.p;
                out += ((s.p - d) % s.p) * place;
                place *= s.p;
                a /= s.p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = &self.0;
        s.exp[(s.log[a as usize] + s.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let s = &self.0;
        let order = s.q - 1;
        Some(s.exp[((order - s.log[a as usize]) % order) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let s = &self.0;
        let order = (s.q - 1) as u64;
        s.exp[((s.log[a as usize] as u64 * (e % order)) % order) as usize]
    }

    /// Formats an encoding in the token grammar (`w` is the class of t).
    pub fn format_value(&self, v: u32) -> String {
        if self.m() == 1 {
            return v.to_string();
        }
        let digits = self.digits(v);
        let mut terms = Vec::new();
        for (k, &c) in digits.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{k}"),
            };
            terms.push(match (c, k) {
                (_, 0) => c.to_string(),
                (1, _) => var,
                _ => format!("{c}{var}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for FieldSpec {}

impl std::hash::Hash for FieldSpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.p().hash(state);
        self.modulus().hash(state);
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p())
            .field("m", &self.m())
            .field("modulus", &self.modulus())
            .finish()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m() == 1 {
            write!(f, "F_{}", self.p())
        } else {
            write!(f, "F_{}^{}", self.p(), self.m())
        }
    }
}

/// An element of a specific [`FieldSpec`]. Mixed-field arithmetic is an
/// error, never a coercion.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: FieldSpec,
    value: u32,
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.spec.digits(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn lift(&self, value: u32) -> FieldElement {
        FieldElement {
            spec: self.spec.clone(),
            value,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.spec.check_same(&other.spec)?;
        Ok(self.lift(self.spec.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.spec.check_same(&other.spec)?;
        Ok(self.lift(self.spec.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.spec.check_same(&other.spec)?;
        Ok(self.lift(self.spec.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.mul(&other.inv()?)
    }

    pub fn neg(&self) -> FieldElement {
        self.lift(self.spec.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        self.spec
            .inv(self.value)
            .map(|v| self.lift(v))
            .ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.lift(self.spec.pow(self.value, e))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec.format_value(self.value))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec.format_value(self.value))
    }
}

// Polynomials over Z_p as ascending coefficient vectors, only what the
// constructor needs.

fn zp_trim(f: &mut Vec<u32>) {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
}

fn zp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p);
    while r.len() > db && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        if c != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let idx = dr - db + i;
                r[idx] = (r[idx] + p - c * bc % p) % p;
            }
        }
        r.pop();
        if r.is_empty() {
            r.push(0);
        }
    }
    zp_trim(&mut r);
    r
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    arith::pow_mod(a as u64, p as u64 - 2, p as u64) as u32
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn zp_is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for k in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut k = k;
            for _ in 0..d {
                g.push((k % p as u64) as u32);
                k /= p as u64;
            }
            g.push(1);
            let r = zp_rem(f, &g, p);
            if r.len() == 1 && r[0] == 0 {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, m: usize) -> Vec<u32> {
    // c_0 is the most significant key, so it changes slowest.
    let mut c = vec![0u32; m];
    loop {
        let mut f = c.clone();
        f.push(1);
        if zp_is_irreducible(&f, p) {
            return f;
        }
        let mut i = m;
        loop {
            // an irreducible always exists, so the odometer never wraps fully
            i -= 1;
            c[i] += 1;
            if c[i] < p {
                break;
            }
            c[i] = 0;
        }
    }
}

fn mulmod_digits(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let m = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * m];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (m..2 * m).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for i in 0..m {
            let idx = k - m + i;
            prod[idx] = (prod[idx] + p - c * modulus[i] % p) % p;
        }
    }
    prod.truncate(m);
    prod
}

fn build_log_tables(p: u32, q: u32, modulus: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let m = modulus.len() - 1;
    let order = (q - 1) as usize;
    let to_digits = |mut v: u32| -> Vec<u32> {
        (0..m)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    };
    let encode = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);
    for cand in 1..q {
        let g = to_digits(cand);
        let mut exp = Vec::with_capacity(2 * order);
        let mut cur = to_digits(1);
        let mut ok = true;
        for k in 0..order {
            let v = encode(&cur);
            if k > 0 && v == 1 {
                ok = false;
                break;
            }
            exp.push(v);
            cur = mulmod_digits(&cur, &g, modulus, p);
        }
        if !ok {
            continue;
        }
        let mut log = vec![0u32; q as usize];
        for (k, &v) in exp.iter().enumerate() {
            log[v as usize] = k as u32;
        }
        exp.extend_from_within(..);
        return (exp, log);
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldSpec {
        FieldSpec::new(2, 2, None).unwrap()
    }

    #[test]
    fn default_moduli() {
        assert_eq!(f4().modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::prime(5).unwrap().modulus(), &[0, 1]);
        assert_eq!(FieldSpec::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldSpec::new(2, 3, None).unwrap().modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])).unwrap_err().kind(),
            "NotIrreducible"
        );
        assert_eq!(FieldSpec::new(6, 1, None).unwrap_err(), Error::NotPrime(6));
        assert_eq!(FieldSpec::new(2, 17, None).unwrap_err().kind(), "CapExceeded");
        assert!(FieldSpec::with_cap(2, 17, None, 1 << 17).is_ok());
        assert_eq!(FieldSpec::new(2, 2, Some(&[1, 1, 2])).unwrap_err().kind(), "Invalid");
    }

    #[test]
    fn omega_squared() {
        let f = f4();
        let w = f.from_coeffs(&[0, 1]).unwrap();
        let w2 = w.mul(&w).unwrap();
        assert_eq!(w2.coeffs(), vec![1, 1]);
        assert_eq!(w2, w.add(&f.one()).unwrap());
        assert!(f.one().add(&w).unwrap().add(&w2).unwrap().is_zero());
        assert_eq!(w2.to_string(), "w+1");
    }

    #[test]
    fn inverse_in_f5() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.element(2).inv().unwrap().value(), 3);
        assert_eq!(f.zero().inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn element_listing() {
        let vals = |f: &FieldSpec| f.elements().iter().map(|e| e.coeffs()).collect::<Vec<_>>();
        assert_eq!(vals(&FieldSpec::prime(2).unwrap()), vec![vec![0], vec![1]]);
        assert_eq!(
            vals(&f4()),
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]
        );
        let f5: Vec<u32> = FieldSpec::prime(5).unwrap().elements().iter().map(|e| e.value()).collect();
        assert_eq!(f5, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = f4().one();
        let b = FieldSpec::prime(2).unwrap().one();
        assert_eq!(a.add(&b).unwrap_err(), Error::SpecMismatch);
        assert_eq!(a.mul(&b).unwrap_err(), Error::SpecMismatch);
    }

    #[test]
    fn additive_inverse_everywhere() {
        for (p, m) in [(2, 3), (3, 2), (5, 1), (7, 1), (5, 2)] {
            let f = FieldSpec::new(p, m, None).unwrap();
            for a in f.elements() {
                assert!(a.add(&a.neg()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn deterministic_construction() {
        let a = FieldSpec::new(3, 3, None).unwrap();
        let b = FieldSpec::new(3, 3, None).unwrap();
        assert_eq!(a, b);
        for v in 0..a.q() {
            for w in 0..a.q() {
                assert_eq!(a.mul(v, w), b.mul(v, w));
            }
        }
    }

    /// Exhaustive field axioms for every q <= 64, checked against
    /// schoolbook digit-vector arithmetic rather than the log tables.
    #[test]
    fn field_axioms_small_q() {
        for q in 2..=64u64 {
            let Some((p, m)) = arith::prime_power(q) else { continue };
            let f = FieldSpec::new(p, m, None).unwrap();
            let pp = p as u32;
            for a in 0..f.q() {
                for b in 0..f.q() {
                    let slow = f.encode(&mulmod_digits(&f.digits(a), &f.digits(b), f.modulus(), pp));
                    assert_eq!(f.mul(a, b), slow, "q={q} a={a} b={b}");
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..f.q() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                    // Frobenius
                    assert_eq!(
                        f.pow(f.add(a, b), p),
                        f.add(f.pow(a, p), f.pow(b, p))
                    );
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
            // the nonzero elements form a cyclic group generated by `generator`
            let g = f.generator();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1;
            for _ in 0..f.q() - 1 {
                seen.insert(x);
                x = f.mul(x, g);
            }
            assert_eq!(seen.len() as u32, f.q() - 1);
        }
    }
}
