//! 2-quasi-cyclic codes `C ≤ FH x FH` in Goursat normal form
//! `C = (C1 x C2) ⊕ {(c, c g) : c in C12}`.
//!
//! Over the semisimple algebra FH every FH-submodule of (FH)^2 splits along
//! the primitive idempotents: its e-component is a K_e-subspace of
//! (K_e)^2, K_e = FH e, and there are only five shapes (zero, the plane,
//! the two axes and the graph of multiplication by a unit). `C1` collects
//! the plane and first-axis components, `C2` the plane and second-axis
//! components, `C12` the graphs, and `g` is the sum of the graph slopes.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::cyclic::CyclicCode;
use crate::group_algebra::GroupAlgebraElement;
use crate::idem::IdempotentBasis;
use crate::matrix::Matrix;

/// A pair `(a, b)` in FH x FH.
pub type Pair = (GroupAlgebraElement, GroupAlgebraElement);

/// The triple `(C1, C2, C12)` and the unit `g` of C12, stored with
/// `g = g e_{C12}`.
#[derive(Clone, PartialEq, Eq)]
pub struct GoursatData {
    c1: CyclicCode,
    c2: CyclicCode,
    c12: CyclicCode,
    g: GroupAlgebraElement,
}

impl GoursatData {
    /// Validates `C1 ∩ C12 = 0 = C2 ∩ C12` and that `g e_i != 0` on the
    /// support of C12; `g` is replaced by `g e_{C12}`.
    pub fn new(
        c1: CyclicCode,
        c2: CyclicCode,
        c12: CyclicCode,
        g: GroupAlgebraElement,
    ) -> Result<Self> {
        let basis = c1.basis().clone();
        c1.sum(&c2)?;
        c1.sum(&c12)?;
        basis.field().check_same(g.field())?;
        if g.n() != basis.n() {
            return Err(Error::SpecMismatch);
        }
        for (tag, c) in [(1u8, &c1), (2, &c2)] {
            let overlap = c.intersect(&c12)?;
            if !overlap.is_zero() {
                return Err(Error::OverlapViolation(tag, overlap.support()));
            }
        }
        for i in c12.support() {
            if g.mul_unchecked(basis.idempotent(i)).is_zero() {
                return Err(Error::NotUnit(i));
            }
        }
        let g = g.mul_unchecked(&c12.identity());
        Ok(GoursatData { c1, c2, c12, g })
    }

    /// The zero code.
    pub fn zero(basis: &Arc<IdempotentBasis>) -> Self {
        let z = CyclicCode::zero(basis);
        GoursatData {
            c1: z.clone(),
            c2: z.clone(),
            c12: z,
            g: basis.idempotent(0).zero_like(),
        }
    }

    /// The double circulant code `FH (1, g)`; `g` must be a unit of FH.
    pub fn double_circulant(basis: &Arc<IdempotentBasis>, g: GroupAlgebraElement) -> Result<Self> {
        let z = CyclicCode::zero(basis);
        Self::new(z.clone(), z, CyclicCode::full(basis), g)
    }

    pub fn basis(&self) -> &Arc<IdempotentBasis> {
        self.c1.basis()
    }

    pub fn c1(&self) -> &CyclicCode {
        &self.c1
    }

    pub fn c2(&self) -> &CyclicCode {
        &self.c2
    }

    pub fn c12(&self) -> &CyclicCode {
        &self.c12
    }

    pub fn g(&self) -> &GroupAlgebraElement {
        &self.g
    }

    /// First projection of C, `C1 + C12`.
    pub fn c1_tilde(&self) -> CyclicCode {
        CyclicCode::from_mask(self.basis(), self.c1.mask() | self.c12.mask())
    }

    /// Second projection of C, `C2 + C12`.
    pub fn c2_tilde(&self) -> CyclicCode {
        CyclicCode::from_mask(self.basis(), self.c2.mask() | self.c12.mask())
    }

    /// `dim C1 + dim C2 + dim C12`.
    pub fn dim(&self) -> usize {
        self.c1.dim() + self.c2.dim() + self.c12.dim()
    }

    /// `((e_{C1} + e_{C12}, e_{C12} g), (0, e_{C2}))`; their FH-span is C.
    pub fn two_generators(&self) -> (Pair, Pair) {
        let e12 = self.c12.identity();
        let first = (
            self.c1.identity().add_unchecked(&e12),
            e12.mul_unchecked(&self.g),
        );
        let second = (e12.zero_like(), self.c2.identity());
        (first, second)
    }

    /// Principal iff C1, C2, C12 have pairwise disjoint supports.
    pub fn is_principal(&self) -> bool {
        let (a, b, c) = (self.c1.mask(), self.c2.mask(), self.c12.mask());
        a & b == 0 && a & c == 0 && b & c == 0
    }

    /// `C1 + C12 = FH` and `C2 = 0`.
    pub fn is_double_circulant(&self) -> bool {
        let full = self.basis().full_mask();
        (self.c1.mask() | self.c12.mask()) == full && self.c2.is_zero()
    }

    /// Evaluated on supports:
    /// dim C = n and dim C1 = dim C2;
    /// C1, C2 self-orthogonal and both orthogonal to C12;
    /// bar(C12) = C12 and `g bar(g) = -e_{C12}`.
    pub fn is_self_dual(&self) -> bool {
        let basis = self.basis();
        let (s1, s2, s12) = (self.c1.mask(), self.c2.mask(), self.c12.mask());
        let (b1, b2) = (basis.bar_mask(s1), basis.bar_mask(s2));
        self.dim() == basis.n()
            && self.c1.dim() == self.c2.dim()
            && s1 & b1 == 0
            && s2 & b2 == 0
            && s12 & b1 == 0
            && s12 & b2 == 0
            && basis.bar_mask(s12) == s12
            && self.g.mul_unchecked(&self.g.bar()) == self.c12.identity().neg()
    }

    fn bar_symmetric(&self, twist_negative: bool) -> bool {
        let basis = self.basis();
        let e12 = self.c12.identity();
        let target = if twist_negative { e12.neg() } else { e12 };
        basis.bar_mask(self.c1.mask()) == self.c2.mask()
            && basis.bar_mask(self.c12.mask()) == self.c12.mask()
            && self.g.bar().mul_unchecked(&self.g) == target
    }

    /// Closed under `(a, b) -> (bar b, bar a)`.
    pub fn is_dihedral(&self) -> bool {
        self.bar_symmetric(false)
    }

    /// Closed under `(a, b) -> (-bar b, bar a)`.
    pub fn is_consta_dihedral(&self) -> bool {
        self.bar_symmetric(true)
    }

    pub fn to_code(&self) -> QuasiCyclicCode {
        QuasiCyclicCode::from_goursat(self)
    }

    /// Canonical generator matrix of the code, `dim x 2n`.
    pub fn generator_matrix(&self) -> Matrix {
        let ((a1, b1), (a2, b2)) = self.two_generators();
        span_matrix(&[(a1, b1), (a2, b2)], self.basis().n())
    }
}

impl fmt::Debug for GoursatData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GoursatData")
            .field("C1", &self.c1.support())
            .field("C2", &self.c2.support())
            .field("C12", &self.c12.support())
            .field("g", &self.g)
            .finish()
    }
}

/// The RREF of all cyclic shifts `(x^k a, x^k b)` of the given pairs,
/// i.e. a basis of their FH-span.
pub fn span_matrix(gens: &[Pair], n: usize) -> Matrix {
    let field = match gens.first() {
        Some((a, _)) => a.field().clone(),
        None => panic!("span_matrix needs at least one generator to know the field"),
    };
    let mut m = Matrix::zeros(&field, 0, 2 * n);
    let mut row = vec![0u32; 2 * n];
    for (a, b) in gens {
        for k in 0..n {
            for i in 0..n {
                row[(i + k) % n] = a.coeffs()[i];
                row[n + (i + k) % n] = b.coeffs()[i];
            }
            m.push_row(&row);
        }
    }
    m.row_basis()
}

/// Shape of the e-component `{(a e, b e) : (a, b) in C}` inside (FH e)^2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentType {
    Zero,
    Plane,
    /// `FH e x 0`.
    Line10,
    /// `0 x FH e`.
    Line01,
    /// `{(c, c s) : c in FH e}` for a unit `s` of FH e.
    Graph(GroupAlgebraElement),
}

impl ComponentType {
    /// Dimension over the component field K_e.
    pub fn rank(&self) -> usize {
        match self {
            ComponentType::Zero => 0,
            ComponentType::Plane => 2,
            _ => 1,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            ComponentType::Zero => "Zero",
            ComponentType::Plane => "Plane",
            ComponentType::Line10 => "Line10",
            ComponentType::Line01 => "Line01",
            ComponentType::Graph(_) => "Graph",
        }
    }
}

/// A 2-quasi-cyclic code as its table of component shapes.
#[derive(Clone)]
pub struct QuasiCyclicCode {
    basis: Arc<IdempotentBasis>,
    components: Vec<ComponentType>,
}

/// Builds the code of validated Goursat data.
pub fn construct(
    c1: CyclicCode,
    c2: CyclicCode,
    c12: CyclicCode,
    g: GroupAlgebraElement,
) -> Result<QuasiCyclicCode> {
    Ok(GoursatData::new(c1, c2, c12, g)?.to_code())
}

/// Goursat data of the FH-submodule generated by `gens`.
pub fn decompose(basis: &Arc<IdempotentBasis>, gens: &[Pair]) -> Result<GoursatData> {
    Ok(QuasiCyclicCode::from_generators(basis, gens)?.to_goursat())
}

impl QuasiCyclicCode {
    pub fn from_goursat(data: &GoursatData) -> Self {
        let basis = data.basis().clone();
        let components = (0..basis.len())
            .map(|i| {
                match (
                    data.c1.contains_index(i),
                    data.c2.contains_index(i),
                    data.c12.contains_index(i),
                ) {
                    (true, true, _) => ComponentType::Plane,
                    (true, false, _) => ComponentType::Line10,
                    (false, true, _) => ComponentType::Line01,
                    (false, false, true) => {
                        ComponentType::Graph(data.g.mul_unchecked(basis.idempotent(i)))
                    }
                    (false, false, false) => ComponentType::Zero,
                }
            })
            .collect();
        QuasiCyclicCode { basis, components }
    }

    /// Classifies the K_e-span of `{(a e, b e)}` for every idempotent e.
    pub fn from_generators(basis: &Arc<IdempotentBasis>, gens: &[Pair]) -> Result<Self> {
        for (a, b) in gens {
            for x in [a, b] {
                basis.field().check_same(x.field())?;
                if x.n() != basis.n() {
                    return Err(Error::SpecMismatch);
                }
            }
        }
        let components = (0..basis.len())
            .map(|i| {
                let e = basis.idempotent(i);
                let parts: Vec<Pair> = gens
                    .iter()
                    .map(|(a, b)| (a.mul_unchecked(e), b.mul_unchecked(e)))
                    .filter(|(u, v)| !(u.is_zero() && v.is_zero()))
                    .collect();
                classify_component(basis, i, &parts)
            })
            .collect();
        Ok(QuasiCyclicCode {
            basis: basis.clone(),
            components,
        })
    }

    /// Table entries must be valid for their index: Graph slopes nonzero
    /// and inside FH e_i.
    pub(crate) fn from_components(
        basis: &Arc<IdempotentBasis>,
        components: Vec<ComponentType>,
    ) -> Self {
        debug_assert_eq!(components.len(), basis.len());
        QuasiCyclicCode {
            basis: basis.clone(),
            components,
        }
    }

    pub fn basis(&self) -> &Arc<IdempotentBasis> {
        &self.basis
    }

    pub fn components(&self) -> &[ComponentType] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components
            .iter()
            .enumerate()
            .map(|(i, c)| c.rank() * self.basis.dim(i))
            .sum()
    }

    pub fn to_goursat(&self) -> GoursatData {
        let (mut m1, mut m2, mut m12) = (0u64, 0u64, 0u64);
        let mut g = self.basis.idempotent(0).zero_like();
        for (i, c) in self.components.iter().enumerate() {
            match c {
                ComponentType::Zero => {}
                ComponentType::Plane => {
                    m1 |= 1 << i;
                    m2 |= 1 << i;
                }
                ComponentType::Line10 => m1 |= 1 << i,
                ComponentType::Line01 => m2 |= 1 << i,
                ComponentType::Graph(s) => {
                    m12 |= 1 << i;
                    g = g.add_unchecked(s);
                }
            }
        }
        GoursatData {
            c1: CyclicCode::from_mask(&self.basis, m1),
            c2: CyclicCode::from_mask(&self.basis, m2),
            c12: CyclicCode::from_mask(&self.basis, m12),
            g,
        }
    }

    pub fn generator_matrix(&self) -> Matrix {
        self.to_goursat().generator_matrix()
    }
}

impl PartialEq for QuasiCyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components && self.basis.same_as(&other.basis)
    }
}

impl Eq for QuasiCyclicCode {}

impl fmt::Debug for QuasiCyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.components.iter()).finish()
    }
}

fn classify_component(basis: &IdempotentBasis, i: usize, parts: &[Pair]) -> ComponentType {
    let Some((u0, v0)) = parts.first() else {
        return ComponentType::Zero;
    };
    if u0.is_zero() {
        // the line 0 x K unless some vector leaves it
        return if parts.iter().all(|(u, _)| u.is_zero()) {
            ComponentType::Line01
        } else {
            ComponentType::Plane
        };
    }
    let inv = basis
        .component_inverse(i, u0)
        .expect("nonzero component element is invertible");
    let slope = v0.mul_unchecked(&inv);
    if parts.iter().any(|(u, v)| u.mul_unchecked(&slope) != *v) {
        return ComponentType::Plane;
    }
    if slope.is_zero() {
        ComponentType::Line10
    } else {
        ComponentType::Graph(slope)
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

    fn code(b: &Arc<IdempotentBasis>, s: &[usize]) -> CyclicCode {
        CyclicCode::new(b, s).unwrap()
    }

    #[test]
    fn construction_errors() {
        let b = f4_basis();
        let e0 = b.idempotent(0).clone();
        let err = GoursatData::new(code(&b, &[0]), code(&b, &[]), code(&b, &[0]), e0.clone());
        assert_eq!(err.unwrap_err(), Error::OverlapViolation(1, vec![0]));
        let err = GoursatData::new(code(&b, &[]), code(&b, &[0]), code(&b, &[0]), e0.clone());
        assert_eq!(err.unwrap_err(), Error::OverlapViolation(2, vec![0]));
        let err = GoursatData::new(code(&b, &[]), code(&b, &[]), code(&b, &[0, 1]), e0);
        assert_eq!(err.unwrap_err(), Error::NotUnit(1));
    }

    #[test]
    fn g_is_normalized() {
        let b = f4_basis();
        let one = b.identity_of(b.full_mask());
        let d = GoursatData::new(code(&b, &[1]), code(&b, &[1]), code(&b, &[0]), one).unwrap();
        assert_eq!(d.g(), b.idempotent(0));
    }

    #[test]
    fn zero_code() {
        let b = f4_basis();
        let z = GoursatData::zero(&b);
        assert!(z.to_code().components().iter().all(|c| *c == ComponentType::Zero));
        assert_eq!(z.generator_matrix().rows(), 0);
        assert_eq!(z.generator_matrix().cols(), 6);
        assert!(z.is_principal());
        assert!(!z.is_double_circulant());
        assert!(!z.is_self_dual());
        let ((a, bb), (c, d)) = z.two_generators();
        assert!(a.is_zero() && bb.is_zero() && c.is_zero() && d.is_zero());
        assert_eq!(decompose(&b, &[(a, bb)]).unwrap(), z);
    }

    #[test]
    fn double_circulant_generators() {
        let b = f4_basis();
        let g = GroupAlgebraElement::new(b.field(), vec![0, 1, 0]).unwrap();
        let d = GoursatData::double_circulant(&b, g.clone()).unwrap();
        let ((a1, b1), (a2, b2)) = d.two_generators();
        assert_eq!(a1.coeffs(), &[1, 0, 0]);
        assert_eq!(b1, g);
        assert!(a2.is_zero() && b2.is_zero());
        assert!(d.is_double_circulant() && d.is_principal());
    }

    #[test]
    fn decompose_unit_pair() {
        let b = f4_basis();
        let one = b.identity_of(b.full_mask());
        let a = GroupAlgebraElement::new(b.field(), vec![0, 2, 0]).unwrap();
        assert_eq!(CyclicCode::from_generator(&b, &a).unwrap(), CyclicCode::full(&b));
        let d = decompose(&b, &[(one, a.clone())]).unwrap();
        assert!(d.c1().is_zero() && d.c2().is_zero());
        assert_eq!(d.c12(), &CyclicCode::full(&b));
        assert_eq!(d.g(), &a);
    }

    #[test]
    fn graph_slope_at_each_component() {
        let f5 = FieldSpec::prime(5).unwrap();
        let b = primitive_idempotents(&f5, 4).unwrap();
        let e = b.identity_of(0b11);
        let g = e.scale(2);
        let d = GoursatData::new(code(&b, &[2]), code(&b, &[3]), code(&b, &[0, 1]), g.clone())
            .unwrap();
        let q = d.to_code();
        assert_eq!(
            q.components(),
            &[
                ComponentType::Graph(b.idempotent(0).scale(2)),
                ComponentType::Graph(b.idempotent(1).scale(2)),
                ComponentType::Line10,
                ComponentType::Line01,
            ]
        );
        assert_eq!(q.dim(), 4);
        assert_eq!(q.to_goursat(), d);
    }
}
