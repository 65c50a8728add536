//! Factorization of x^n - 1 over F_q, the primitive idempotents of FH and
//! the number-theoretic predicates attached to them.
//!
//! Each q-cyclotomic coset S of Z_n gives the irreducible factor
//! `prod_{j in S} (X - zeta^j)`, zeta a primitive n-th root of unity in the
//! splitting field F_{q^r}, r = ord_n(q). The idempotent of the factor f is
//! `u h mod (x^n - 1)` with `h = (x^n - 1)/f` and `u h = 1 mod f`.

use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::group_algebra::{check_length, GroupAlgebraElement};
use crate::poly::{self, Polynomial};

/// Bound on the splitting field order q^r.
pub const SPLITTING_FIELD_CAP: u128 = 1 << 24;

/// An orbit of multiplication by q on Z_n.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CyclotomicCoset {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl CyclotomicCoset {
    /// The coset `-S`.
    pub fn negated(&self, n: usize) -> Vec<usize> {
        let mut m: Vec<usize> = self.members.iter().map(|&j| (n - j) % n).collect();
        m.sort_unstable();
        m
    }
}

fn check_coprime(n: usize, q: u64) -> Result<()> {
    if n == 0 || arith::gcd(n as u64, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    Ok(())
}

/// The partition of Z_n into q-orbits, sorted by representative.
pub fn cyclotomic_cosets(n: usize, q: u64) -> Result<Vec<CyclotomicCoset>> {
    check_coprime(n, q)?;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for rep in 0..n {
        if seen[rep] {
            continue;
        }
        let mut members = Vec::new();
        let mut j = rep;
        while !seen[j] {
            seen[j] = true;
            members.push(j);
            j = ((j as u128 * q as u128) % n as u128) as usize;
        }
        members.sort_unstable();
        out.push(CyclotomicCoset {
            representative: rep,
            members,
        });
    }
    Ok(out)
}

/// F_{q^r} as F_q[y]/(h); only used while factoring.
struct Splitting {
    base: FieldSpec,
    h: Vec<u32>,
}

impl Splitting {
    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        poly::divrem(&self.base, &poly::mul(&self.base, a, b), &self.h).1
    }

    fn pow(&self, a: &[u32], e: u128) -> Vec<u32> {
        poly::powmod(&self.base, a, e, &self.h)
    }

    fn is_one(a: &[u32]) -> bool {
        a == [1]
    }
}

/// Rabin's test over F_q.
fn is_irreducible_over(f: &FieldSpec, h: &[u32]) -> bool {
    let r = h.len() - 1;
    let q = f.q() as u128;
    let x = [0u32, 1];
    // frob[k] = x^{q^k} mod h
    let mut frob = vec![poly::divrem(f, &x, h).1];
    for _ in 0..r {
        let next = poly::powmod(f, frob.last().unwrap(), q, h);
        frob.push(next);
    }
    if frob[r] != poly::divrem(f, &x, h).1 {
        return false;
    }
    for l in arith::prime_divisors(r as u64) {
        let k = r / l as usize;
        let diff = poly::sub(f, &frob[k], &x);
        let (g, _, _) = poly::ext_gcd(f, &diff, h);
        if g != [1] {
            return false;
        }
    }
    true
}

fn smallest_irreducible_over(f: &FieldSpec, r: usize) -> Vec<u32> {
    let q = f.q();
    let mut c = vec![0u32; r];
    loop {
        let mut h = c.clone();
        h.push(1);
        if is_irreducible_over(f, &h) {
            return h;
        }
        let mut i = r;
        loop {
            i -= 1;
            c[i] += 1;
            if c[i] < q {
                break;
            }
            c[i] = 0;
        }
    }
}

/// Monic irreducible factors of x^n - 1, one per coset, in the order of
/// `cosets`.
fn coset_factors(f: &FieldSpec, n: usize, cosets: &[CyclotomicCoset]) -> Result<Vec<Vec<u32>>> {
    let q = f.q() as u64;
    let r = arith::mult_order(q, n as u64).expect("coprime") as u32;
    let order = (q as u128).checked_pow(r).unwrap_or(u128::MAX);
    if order > SPLITTING_FIELD_CAP {
        return Err(Error::CapExceeded {
            what: "splitting field order",
            needed: order,
            cap: SPLITTING_FIELD_CAP,
        });
    }
    let ext = Splitting {
        base: f.clone(),
        h: smallest_irreducible_over(f, r as usize),
    };
    let cofactor = (order - 1) / n as u128;
    let primes = arith::prime_divisors(n as u64);
    let mut zeta = None;
    for idx in 1..order {
        let mut beta = Vec::with_capacity(r as usize);
        let mut k = idx;
        for _ in 0..r {
            beta.push((k % q as u128) as u32);
            k /= q as u128;
        }
        poly::trim(&mut beta);
        let z = ext.pow(&beta, cofactor);
        if primes
            .iter()
            .all(|&l| !Splitting::is_one(&ext.pow(&z, (n as u64 / l) as u128)))
        {
            zeta = Some(z);
            break;
        }
    }
    let zeta = zeta.expect("F_{q^r} contains a primitive n-th root of unity");

    let mut out = Vec::with_capacity(cosets.len());
    for coset in cosets {
        // coefficients live in F_{q^r}: prod (X - zeta^j)
        let mut acc: Vec<Vec<u32>> = vec![vec![1]];
        for &j in &coset.members {
            let root = ext.pow(&zeta, j as u128);
            let neg_root = poly::sub(f, &[], &root);
            let mut next = vec![Vec::new(); acc.len() + 1];
            for (i, c) in acc.iter().enumerate() {
                next[i + 1] = poly::add(f, &next[i + 1], c);
                next[i] = poly::add(f, &next[i], &ext.mul(c, &neg_root));
            }
            acc = next;
        }
        let mut factor = Vec::with_capacity(acc.len());
        for c in &acc {
            match c.len() {
                0 => factor.push(0),
                1 => factor.push(c[0]),
                _ => unreachable!("minimal polynomial of a cyclotomic coset has F_q coefficients"),
            }
        }
        out.push(factor);
    }
    Ok(out)
}

/// The ordered primitive idempotents `E = {e_0, ..., e_s}` of FH.
///
/// `e_0 = (1/n) sum x^i` comes first; the others follow in lexicographic
/// order of their coefficient words. Everything indexed by idempotent
/// (cosets, factors, dims, the bar permutation) uses this order.
#[derive(Clone, Debug)]
pub struct IdempotentBasis {
    field: FieldSpec,
    n: usize,
    idempotents: Vec<GroupAlgebraElement>,
    cosets: Vec<CyclotomicCoset>,
    factors: Vec<Polynomial>,
    dims: Vec<usize>,
    bar_perm: Vec<usize>,
    // x^k e_i for k < d_i: an F-basis of FH e_i
    component_bases: Vec<Vec<GroupAlgebraElement>>,
}

/// Builds and verifies the idempotent basis of F_q[x]/(x^n - 1).
pub fn primitive_idempotents(field: &FieldSpec, n: usize) -> Result<Arc<IdempotentBasis>> {
    IdempotentBasis::new(field, n).map(Arc::new)
}

/// The irreducible factors of x^n - 1, aligned with the idempotent order.
pub fn factor_xn1(field: &FieldSpec, n: usize) -> Result<Vec<Polynomial>> {
    Ok(IdempotentBasis::new(field, n)?.factors)
}

impl IdempotentBasis {
    pub fn new(field: &FieldSpec, n: usize) -> Result<Self> {
        check_length(field, n)?;
        let q = field.q() as u64;
        let cosets = cyclotomic_cosets(n, q)?;
        if cosets.len() > 64 {
            return Err(Error::TooManyIdempotents(cosets.len()));
        }
        let factors = coset_factors(field, n, &cosets)?;
        let xn1 = Polynomial::xn_minus_one(field, n);
        let mut entries = Vec::with_capacity(cosets.len());
        for (coset, fac) in cosets.into_iter().zip(factors) {
            let (cof, rem) = poly::divrem(field, xn1.coeffs(), &fac);
            debug_assert!(rem.is_empty());
            let (g, u, _) = poly::ext_gcd(field, &cof, &fac);
            assert_eq!(g, [1], "x^n - 1 is squarefree when gcd(n, q) = 1");
            let e = poly::divrem(field, &poly::mul(field, &u, &cof), xn1.coeffs()).1;
            let mut word = vec![0u32; n];
            word[..e.len()].copy_from_slice(&e);
            entries.push((GroupAlgebraElement::from_raw(field, word), coset, fac));
        }
        let zero_pos = entries
            .iter()
            .position(|(_, c, _)| c.representative == 0)
            .unwrap();
        let first = entries.remove(zero_pos);
        entries.sort_by(|a, b| a.0.coeffs().cmp(b.0.coeffs()));
        entries.insert(0, first);

        let mut idempotents = Vec::with_capacity(entries.len());
        let mut cosets = Vec::with_capacity(entries.len());
        let mut factors = Vec::with_capacity(entries.len());
        for (e, c, f) in entries {
            idempotents.push(e);
            cosets.push(c);
            factors.push(Polynomial::new(field, f));
        }
        let dims = cosets.iter().map(|c| c.members.len()).collect();
        let bar_perm = idempotents
            .iter()
            .map(|e| {
                let b = e.bar();
                idempotents.iter().position(|x| *x == b).expect("bar permutes E")
            })
            .collect();
        let component_bases = idempotents
            .iter()
            .zip(&cosets)
            .map(|(e, c)| (0..c.members.len()).map(|k| e.shift(k)).collect())
            .collect();
        let basis = IdempotentBasis {
            field: field.clone(),
            n,
            idempotents,
            cosets,
            factors,
            dims,
            bar_perm,
            component_bases,
        };
        basis.verify();
        Ok(basis)
    }

    /// Orthogonality, completeness, e_0 and the coset-level bar map.
    fn verify(&self) {
        let f = &self.field;
        let n = self.n;
        let one = GroupAlgebraElement::one(f, n).unwrap();
        let mut sum = one.zero_like();
        for (i, ei) in self.idempotents.iter().enumerate() {
            sum = sum.add_unchecked(ei);
            for (j, ej) in self.idempotents.iter().enumerate() {
                let prod = ei.mul_unchecked(ej);
                if i == j {
                    assert_eq!(&prod, ei, "e_{i} is not idempotent");
                } else {
                    assert!(prod.is_zero(), "e_{i} e_{j} != 0");
                }
            }
        }
        assert_eq!(sum, one, "idempotents do not sum to 1");
        let inv_n = f.inv(f.from_int(n as i64)).unwrap();
        assert!(self.idempotents[0].coeffs().iter().all(|&c| c == inv_n));
        for (i, &j) in self.bar_perm.iter().enumerate() {
            assert_eq!(self.cosets[i].negated(n), self.cosets[j].members);
            assert_eq!(self.dims[i], self.factors[i].degree().unwrap());
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of primitive idempotents, s + 1.
    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    pub fn idempotents(&self) -> &[GroupAlgebraElement] {
        &self.idempotents
    }

    pub fn idempotent(&self, i: usize) -> &GroupAlgebraElement {
        &self.idempotents[i]
    }

    pub fn cosets(&self) -> &[CyclotomicCoset] {
        &self.cosets
    }

    pub fn factors(&self) -> &[Polynomial] {
        &self.factors
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    /// `bar(e_i) = e_{bar_perm[i]}`.
    pub fn bar_perm(&self) -> &[usize] {
        &self.bar_perm
    }

    pub fn bar_index(&self, i: usize) -> usize {
        self.bar_perm[i]
    }

    /// Indices fixed by bar (E') and moved by bar (E'').
    pub fn bar_partition(&self) -> (Vec<usize>, Vec<usize>) {
        (0..self.len()).partition(|&i| self.bar_perm[i] == i)
    }

    /// `q^{d_i}`, the size of the component field FH e_i.
    pub fn component_order(&self, i: usize) -> u128 {
        (self.field.q() as u128).saturating_pow(self.dims[i] as u32)
    }

    /// `x^k e_i`, k < d_i.
    pub fn component_basis(&self, i: usize) -> &[GroupAlgebraElement] {
        &self.component_bases[i]
    }

    /// All nonzero elements of FH e_i (its unit group), ordered by their
    /// coordinates in [`Self::component_basis`] with the first coordinate
    /// most significant.
    pub fn component_units(&self, i: usize, cap: u128) -> Result<Vec<GroupAlgebraElement>> {
        let count = self.component_order(i) - 1;
        if count > cap {
            return Err(Error::CapExceeded {
                what: "component unit group",
                needed: count,
                cap,
            });
        }
        let f = &self.field;
        let q = f.q();
        let basis = &self.component_bases[i];
        let d = basis.len();
        let mut coords = vec![0u32; d];
        let mut out = Vec::with_capacity(count as usize);
        loop {
            // odometer with the last coordinate fastest
            let mut k = d;
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                coords[k] += 1;
                if coords[k] < q {
                    break;
                }
                coords[k] = 0;
            }
            let mut acc = basis[0].zero_like();
            for (c, b) in coords.iter().zip(basis) {
                if *c != 0 {
                    acc = acc.add_unchecked(&b.scale(*c));
                }
            }
            out.push(acc);
        }
    }

    /// Inverse of `u` inside the field FH e_i; `None` when `u e_i = 0`.
    pub fn component_inverse(&self, i: usize, u: &GroupAlgebraElement) -> Option<GroupAlgebraElement> {
        let f = &self.field;
        let fac = self.factors[i].coeffs();
        let reduced = poly::divrem(f, u.coeffs(), fac).1;
        if reduced.is_empty() {
            return None;
        }
        let (g, s, _) = poly::ext_gcd(f, &reduced, fac);
        debug_assert_eq!(g, [1]);
        let mut word = vec![0u32; self.n];
        word[..s.len()].copy_from_slice(&s);
        Some(GroupAlgebraElement::from_raw(f, word).mul_unchecked(&self.idempotents[i]))
    }

    /// Sum of the idempotents whose bit is set in `mask`.
    pub fn identity_of(&self, mask: u64) -> GroupAlgebraElement {
        let mut acc = self.idempotents[0].zero_like();
        for i in 0..self.len() {
            if mask >> i & 1 == 1 {
                acc = acc.add_unchecked(&self.idempotents[i]);
            }
        }
        acc
    }

    pub fn full_mask(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    /// Image of a support under bar.
    pub fn bar_mask(&self, mask: u64) -> u64 {
        let mut out = 0;
        for i in 0..self.len() {
            if mask >> i & 1 == 1 {
                out |= 1 << self.bar_perm[i];
            }
        }
        out
    }

    pub fn dim_of(&self, mask: u64) -> usize {
        (0..self.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.dims[i])
            .sum()
    }

    pub fn same_as(&self, other: &IdempotentBasis) -> bool {
        self.n == other.n && self.field.same(&other.field)
    }
}

/// ord_{Z_n^x}(q) is odd. For odd n this is equivalent to E' = {e_0}; for
/// even n the coset {n/2} is always bar-fixed.
pub fn ord_is_odd(n: usize, q: u64) -> Result<bool> {
    check_coprime(n, q)?;
    Ok(arith::mult_order(q, n as u64).unwrap() % 2 == 1)
}

/// -1 is a power of q modulo n, equivalently E'' is empty.
pub fn minus_one_in_q_powers(n: usize, q: u64) -> Result<bool> {
    check_coprime(n, q)?;
    let n = n as u64;
    let target = (n - 1) % n;
    let mut x = 1 % n;
    for _ in 0..arith::mult_order(q, n).unwrap() {
        if x == target {
            return Ok(true);
        }
        x = (x as u128 * q as u128 % n as u128) as u64;
    }
    Ok(false)
}

fn v_of(p: u64, q: u64) -> u32 {
    arith::v2(arith::mult_order(q, p).unwrap())
}

/// Criterion (6) of the characteristic-2 equivalence: all prime divisors p
/// of n share the same 2-adic valuation v(p) >= 1 of ord_p(q).
pub fn cond6_even(n: usize, q: u64) -> Result<bool> {
    if !q.is_power_of_two() || q < 2 {
        return Err(Error::BadCharacteristic(format!("q = {q} is not a power of 2")));
    }
    if n.is_multiple_of(2) {
        return Err(Error::BadCharacteristic(format!("n = {n} must be odd in characteristic 2")));
    }
    check_coprime(n, q)?;
    let vs: Vec<u32> = arith::prime_divisors(n as u64)
        .into_iter()
        .map(|p| v_of(p, q))
        .collect();
    Ok(vs.iter().all(|&v| v >= 1 && v == vs[0]))
}

/// Criterion (6) of the odd-characteristic equivalence. With 2^l || n:
/// if 4 does not divide n, all odd prime divisors share v(p) >= 1;
/// otherwise q = -1 mod 2^l and every odd prime divisor has v(p) = 1.
pub fn cond6_odd(n: usize, q: u64) -> Result<bool> {
    if q.is_multiple_of(2) {
        return Err(Error::BadCharacteristic(format!("q = {q} is even")));
    }
    check_coprime(n, q)?;
    let odd: Vec<u32> = arith::prime_divisors(n as u64)
        .into_iter()
        .filter(|&p| p != 2)
        .map(|p| v_of(p, q))
        .collect();
    if !n.is_multiple_of(4) {
        Ok(odd.iter().all(|&v| v >= 1 && v == odd[0]))
    } else {
        let two_l = 1u64 << arith::v2(n as u64);
        Ok((q + 1).is_multiple_of(two_l) && odd.iter().all(|&v| v == 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn members(cs: &[CyclotomicCoset]) -> Vec<Vec<usize>> {
        cs.iter().map(|c| c.members.clone()).collect()
    }

    #[test]
    fn cosets() {
        assert_eq!(members(&cyclotomic_cosets(3, 2).unwrap()), vec![vec![0], vec![1, 2]]);
        assert_eq!(
            members(&cyclotomic_cosets(3, 4).unwrap()),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(
            members(&cyclotomic_cosets(4, 5).unwrap()),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        assert_eq!(cyclotomic_cosets(4, 2).unwrap_err().kind(), "NotCoprime");
    }

    #[test]
    fn order_predicates() {
        assert!(ord_is_odd(3, 4).unwrap());
        assert!(!ord_is_odd(3, 2).unwrap());
        assert!(minus_one_in_q_powers(3, 2).unwrap());
        assert!(!minus_one_in_q_powers(3, 4).unwrap());
        assert!(!minus_one_in_q_powers(4, 5).unwrap());
        assert!(minus_one_in_q_powers(1, 7).unwrap());
        assert_eq!(ord_is_odd(6, 3).unwrap_err().kind(), "NotCoprime");
    }

    #[test]
    fn criterion_six() {
        assert!(cond6_even(3, 2).unwrap());
        assert!(!cond6_even(3, 4).unwrap());
        assert!(cond6_even(1, 2).unwrap());
        assert_eq!(cond6_even(3, 3).unwrap_err().kind(), "BadCharacteristic");
        assert!(!cond6_odd(4, 5).unwrap());
        assert!(cond6_odd(2, 5).unwrap());
        assert!(cond6_odd(4, 3).unwrap());
        assert_eq!(cond6_odd(3, 4).unwrap_err().kind(), "BadCharacteristic");
    }

    #[test]
    fn splitting_field_cap() {
        // ord_23(2) = 11 is fine, ord_47(13) = 46 is not
        assert!(IdempotentBasis::new(&FieldSpec::prime(2).unwrap(), 23).is_ok());
        let err = IdempotentBasis::new(&FieldSpec::prime(13).unwrap(), 47).unwrap_err();
        assert_eq!(err.kind(), "CapExceeded");
    }

    #[test]
    fn component_inverse_round_trip() {
        let f = FieldSpec::prime(3).unwrap();
        let b = IdempotentBasis::new(&f, 8).unwrap();
        for i in 0..b.len() {
            for u in b.component_units(i, 1 << 20).unwrap() {
                let v = b.component_inverse(i, &u).unwrap();
                assert_eq!(u.mul_unchecked(&v), *b.idempotent(i));
            }
            assert!(b.component_inverse(i, &b.idempotent(0).zero_like()).is_none());
        }
    }

    fn words(b: &IdempotentBasis) -> Vec<Vec<u32>> {
        b.idempotents().iter().map(|e| e.coeffs().to_vec()).collect()
    }

    #[test]
    fn f4_n3_matches_worked_example() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let b = IdempotentBasis::new(&f, 3).unwrap();
        // 1+x+x^2, 1+wx+w^2x^2, 1+w^2x+wx^2 with w = 2, w^2 = 3
        assert_eq!(words(&b), vec![vec![1, 1, 1], vec![1, 2, 3], vec![1, 3, 2]]);
        assert_eq!(b.bar_partition(), (vec![0], vec![1, 2]));
        assert_eq!(b.bar_perm(), &[0, 2, 1]);
        assert_eq!(b.dims(), &[1, 1, 1]);
    }

    #[test]
    fn f5_n4_matches_worked_example() {
        let f = FieldSpec::prime(5).unwrap();
        let b = IdempotentBasis::new(&f, 4).unwrap();
        let expect: Vec<Vec<u32>> = [
            [-1, -1, -1, -1],
            [-1, 1, -1, 1],
            [-1, 2, 1, -2],
            [-1, -2, 1, 2],
        ]
        .iter()
        .map(|r| r.iter().map(|&c| f.from_int(c)).collect())
        .collect();
        assert_eq!(words(&b), expect);
        assert_eq!(b.bar_partition(), (vec![0, 1], vec![2, 3]));
        let roots: Vec<Vec<u32>> = b.factors().iter().map(|p| p.coeffs().to_vec()).collect();
        assert_eq!(roots, vec![vec![4, 1], vec![1, 1], vec![3, 1], vec![2, 1]]);
    }

    #[test]
    fn f2_n3() {
        let f = FieldSpec::prime(2).unwrap();
        let b = IdempotentBasis::new(&f, 3).unwrap();
        assert_eq!(words(&b), vec![vec![1, 1, 1], vec![0, 1, 1]]);
        assert_eq!(b.bar_partition(), (vec![0, 1], vec![]));
        assert_eq!(b.dims(), &[1, 2]);
    }
}
