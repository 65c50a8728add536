//! Cyclic codes as ideals of FH, each given by its idempotent support
//! `E_C`: `C = sum_{i in E_C} FH e_i = FH e_C`.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group_algebra::GroupAlgebraElement;
use crate::idem::IdempotentBasis;
use crate::matrix::Matrix;

/// Default bound on enumerated unit groups.
pub const DEFAULT_UNIT_CAP: u128 = 1 << 20;

#[derive(Clone)]
pub struct CyclicCode {
    basis: Arc<IdempotentBasis>,
    support: u64,
}

impl CyclicCode {
    pub fn new(basis: &Arc<IdempotentBasis>, support: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &i in support {
            if i >= basis.len() {
                return Err(Error::Invalid(format!(
                    "support index {i} out of range (|E| = {})",
                    basis.len()
                )));
            }
            mask |= 1 << i;
        }
        Ok(Self::from_mask(basis, mask))
    }

    /// Bits at positions >= |E| are dropped.
    pub fn from_mask(basis: &Arc<IdempotentBasis>, mask: u64) -> Self {
        CyclicCode {
            basis: basis.clone(),
            support: mask & basis.full_mask(),
        }
    }

    pub fn zero(basis: &Arc<IdempotentBasis>) -> Self {
        Self::from_mask(basis, 0)
    }

    pub fn full(basis: &Arc<IdempotentBasis>) -> Self {
        Self::from_mask(basis, basis.full_mask())
    }

    /// The ideal FH g: its support is `{i : g e_i != 0}`.
    pub fn from_generator(basis: &Arc<IdempotentBasis>, g: &GroupAlgebraElement) -> Result<Self> {
        basis.field().check_same(g.field())?;
        if g.n() != basis.n() {
            return Err(Error::SpecMismatch);
        }
        let mask = (0..basis.len())
            .filter(|&i| !g.mul_unchecked(basis.idempotent(i)).is_zero())
            .fold(0u64, |m, i| m | 1 << i);
        Ok(Self::from_mask(basis, mask))
    }

    pub fn basis(&self) -> &Arc<IdempotentBasis> {
        &self.basis
    }

    pub fn mask(&self) -> u64 {
        self.support
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.support >> i & 1 == 1)
            .collect()
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.support >> i & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.support == 0
    }

    pub fn dim(&self) -> usize {
        self.basis.dim_of(self.support)
    }

    /// `e_C`, the identity of the ring C.
    pub fn identity(&self) -> GroupAlgebraElement {
        self.basis.identity_of(self.support)
    }

    /// Membership via `e_C c = c`.
    pub fn contains(&self, c: &GroupAlgebraElement) -> Result<bool> {
        Ok(self.identity().mul(c)? == *c)
    }

    fn check(&self, other: &CyclicCode) -> Result<()> {
        if Arc::ptr_eq(&self.basis, &other.basis) || self.basis.same_as(&other.basis) {
            Ok(())
        } else {
            Err(Error::BasisMismatch)
        }
    }

    pub fn sum(&self, other: &CyclicCode) -> Result<CyclicCode> {
        self.check(other)?;
        Ok(Self::from_mask(&self.basis, self.support | other.support))
    }

    pub fn intersect(&self, other: &CyclicCode) -> Result<CyclicCode> {
        self.check(other)?;
        Ok(Self::from_mask(&self.basis, self.support & other.support))
    }

    pub fn bar(&self) -> CyclicCode {
        Self::from_mask(&self.basis, self.basis.bar_mask(self.support))
    }

    /// `C^perp = sum_{e in E - bar(E_C)} FH e`.
    pub fn dual(&self) -> CyclicCode {
        Self::from_mask(
            &self.basis,
            !self.basis.bar_mask(self.support) & self.basis.full_mask(),
        )
    }

    /// `C ∩ C^perp = 0`, i.e. the support is bar-closed.
    pub fn is_lcd(&self) -> bool {
        self.support & self.dual().support == 0
    }

    /// `C ⊆ C^perp`, i.e. the support misses its bar image.
    pub fn is_self_orthogonal(&self) -> bool {
        self.support & self.basis.bar_mask(self.support) == 0
    }

    /// The unit group of the ring `(C, e_C)`: elements whose component at
    /// every `e_i` in the support is nonzero. Components vary independently,
    /// the lowest support index slowest.
    pub fn units(&self, cap: u128) -> Result<Vec<GroupAlgebraElement>> {
        let support = self.support();
        let needed = support
            .iter()
            .map(|&i| self.basis.component_order(i) - 1)
            .fold(1u128, |a, b| a.saturating_mul(b));
        if needed > cap {
            return Err(Error::CapExceeded {
                what: "unit group",
                needed,
                cap,
            });
        }
        let lists = support
            .iter()
            .map(|&i| self.basis.component_units(i, cap))
            .collect::<Result<Vec<_>>>()?;
        let zero = self.basis.idempotent(0).zero_like();
        let mut out = Vec::with_capacity(needed as usize);
        let mut seen = HashSet::with_capacity(needed as usize);
        for_each_choice(&lists.iter().map(Vec::len).collect::<Vec<_>>(), |pick| {
            let u = pick
                .iter()
                .enumerate()
                .fold(zero.clone(), |acc, (k, &j)| acc.add_unchecked(&lists[k][j]));
            if seen.insert(u.coeffs().to_vec()) {
                out.push(u);
            }
        });
        Ok(out)
    }

    /// Canonical (reduced row-echelon) generator matrix, `dim x n`.
    pub fn generator_matrix(&self) -> Matrix {
        let f = self.basis.field();
        let n = self.basis.n();
        let mut m = Matrix::zeros(f, 0, n);
        for i in self.support() {
            for b in self.basis.component_basis(i) {
                m.push_row(b.coeffs());
            }
        }
        m.row_basis()
    }
}

/// Calls `visit` with every index tuple `pick[k] < sizes[k]`, first
/// position slowest. An empty `sizes` yields one empty tuple.
pub(crate) fn for_each_choice(sizes: &[usize], mut visit: impl FnMut(&[usize])) {
    if sizes.contains(&0) {
        return;
    }
    let mut pick = vec![0usize; sizes.len()];
    loop {
        visit(&pick);
        let mut k = sizes.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < sizes[k] {
                break;
            }
            pick[k] = 0;
        }
    }
}

impl PartialEq for CyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.support == other.support && self.basis.same_as(&other.basis)
    }
}

impl Eq for CyclicCode {}

impl fmt::Debug for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicCode{:?}", self.support())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use crate::idem::primitive_idempotents;

    fn f4_basis() -> Arc<IdempotentBasis> {
        primitive_idempotents(&FieldSpec::new(2, 2, None).unwrap(), 3).unwrap()
    }

    #[test]
    fn generators() {
        let b = f4_basis();
        let zero = b.idempotent(0).zero_like();
        assert!(CyclicCode::from_generator(&b, &zero).unwrap().is_zero());
        let one = b.identity_of(b.full_mask());
        assert_eq!(CyclicCode::from_generator(&b, &one).unwrap(), CyclicCode::full(&b));
        let c = CyclicCode::from_generator(&b, b.idempotent(1)).unwrap();
        assert_eq!(c.support(), vec![1]);
    }

    #[test]
    fn identities() {
        let b = f4_basis();
        assert!(CyclicCode::zero(&b).identity().is_zero());
        assert_eq!(CyclicCode::full(&b).identity().coeffs(), &[1, 0, 0]);
        let f5 = FieldSpec::prime(5).unwrap();
        let b5 = primitive_idempotents(&f5, 4).unwrap();
        let c = CyclicCode::new(&b5, &[0, 1]).unwrap();
        assert_eq!(c.identity().coeffs(), &[3, 0, 3, 0]);
    }

    #[test]
    fn lattice() {
        let b = f4_basis();
        let c0 = CyclicCode::new(&b, &[0]).unwrap();
        let c1 = CyclicCode::new(&b, &[1]).unwrap();
        assert_eq!(c1.intersect(&c1).unwrap(), c1);
        assert!(c1.intersect(&c0).unwrap().is_zero());
        let s = c0.sum(&c1).unwrap();
        assert_eq!((s.support(), s.dim()), (vec![0, 1], 2));
        // identity laws
        let (e, e2) = (c0.identity(), s.identity());
        assert_eq!(c0.intersect(&s).unwrap().identity(), &e * &e2);
        assert_eq!(s.identity(), &(&e + &c1.identity()) - &(&e * &c1.identity()));
    }

    #[test]
    fn bar_and_dual() {
        let b = f4_basis();
        let c0 = CyclicCode::new(&b, &[0]).unwrap();
        let c1 = CyclicCode::new(&b, &[1]).unwrap();
        assert_eq!(c0.bar(), c0);
        assert_eq!(c1.bar().support(), vec![2]);
        assert_eq!(c1.bar().bar(), c1);
        assert_eq!(CyclicCode::zero(&b).dual(), CyclicCode::full(&b));
        assert_eq!(c1.dual().support(), vec![0, 1]);
        assert_eq!(c1.dual().dual(), c1);
    }

    #[test]
    fn lcd_and_self_orthogonal() {
        let b = f4_basis();
        assert!(CyclicCode::new(&b, &[0]).unwrap().is_lcd());
        assert!(CyclicCode::new(&b, &[1]).unwrap().is_self_orthogonal());
        let z = CyclicCode::zero(&b);
        assert!(z.is_lcd() && z.is_self_orthogonal());
        assert!(!CyclicCode::new(&b, &[1]).unwrap().is_lcd());
    }

    #[test]
    fn unit_groups() {
        let f2 = FieldSpec::prime(2).unwrap();
        let b2 = primitive_idempotents(&f2, 3).unwrap();
        let u = CyclicCode::new(&b2, &[0]).unwrap().units(DEFAULT_UNIT_CAP).unwrap();
        assert_eq!(u, vec![b2.idempotent(0).clone()]);

        let b = f4_basis();
        let u = CyclicCode::new(&b, &[0]).unwrap().units(DEFAULT_UNIT_CAP).unwrap();
        let e0 = b.idempotent(0);
        assert_eq!(u, vec![e0.clone(), e0.scale(2), e0.scale(3)]);

        let c = CyclicCode::full(&b2);
        assert_eq!(c.units(DEFAULT_UNIT_CAP).unwrap().len(), 3);
        assert_eq!(c.units(2).unwrap_err().kind(), "CapExceeded");
    }

    #[test]
    fn generator_matrices() {
        let b = f4_basis();
        assert_eq!(CyclicCode::zero(&b).generator_matrix().rows(), 0);
        let g = CyclicCode::new(&b, &[1]).unwrap().generator_matrix();
        assert_eq!(g.rows(), 1);
        assert_eq!(g.row(0), &[1, 2, 3]);
    }

    #[test]
    fn mismatched_bases() {
        let b = f4_basis();
        let other = primitive_idempotents(&FieldSpec::new(2, 2, None).unwrap(), 5).unwrap();
        let err = CyclicCode::zero(&b).sum(&CyclicCode::zero(&other)).unwrap_err();
        assert_eq!(err, Error::BasisMismatch);
    }
}
