use std::sync::Arc;

use proptest::prelude::*;
use qcd_core::classify::{enumerate_qc, grid};
use qcd_core::fixtures;
use qcd_core::goursat::{construct, decompose, span_matrix, Pair};
use qcd_core::oracle;
use qcd_core::{
    primitive_idempotents, ComponentType, CyclicCode, FieldSpec, GoursatData, GroupAlgebraElement,
    IdempotentBasis, Matrix, QuasiCyclicCode, RowSpace,
};

fn small_bases() -> Vec<Arc<IdempotentBasis>> {
    grid(&[2, 4, 3, 5], 7, 1_000_000).unwrap()
}

fn same_space(a: &Matrix, b: &Matrix) -> bool {
    RowSpace::new(a).equals(&RowSpace::new(b))
}

fn gram_is_zero(a: &Matrix, b: &Matrix) -> bool {
    a.rows() == 0 || b.rows() == 0 || a.mul(&b.transpose()).unwrap().is_zero()
}

#[test]
fn cyclic_duals_match_nullspaces() {
    for b in small_bases() {
        let n = b.n();
        let masks: Vec<u64> = (0..=b.full_mask()).collect();
        for &m in &masks {
            let c = CyclicCode::from_mask(&b, m);
            let g = c.generator_matrix();
            assert_eq!(g.rows(), c.dim());
            let rs = RowSpace::new(&g);
            assert!(g.row_iter().all(|r| {
                let mut s = r.to_vec();
                s.rotate_right(1);
                rs.contains(&s)
            }));
            let d = c.dual();
            assert_eq!(c.dim() + d.dim(), n);
            let h = d.generator_matrix();
            if c.dim() > 0 && d.dim() > 0 {
                assert!(same_space(&h, &g.nullspace()), "q={} n={n} mask={m:b}", b.field().q());
            }
            assert_eq!(c.is_self_orthogonal(), gram_is_zero(&g, &g));
            // C is LCD iff C + C^perp is everything
            let mut both = g.clone();
            h.row_iter().for_each(|r| both.push_row(r));
            assert_eq!(c.is_lcd(), both.rank() == n);
        }
        // <C, D> = 0 iff C * bar(D) = 0
        for &m1 in &masks {
            for &m2 in &masks {
                let c = CyclicCode::from_mask(&b, m1);
                let d = CyclicCode::from_mask(&b, m2);
                let ortho = gram_is_zero(&c.generator_matrix(), &d.generator_matrix());
                assert_eq!(ortho, m1 & b.bar_mask(m2) == 0);
            }
        }
    }
}

#[test]
fn cyclic_units_and_membership() {
    for b in small_bases() {
        let q = b.field().q() as u128;
        for m in 0..=b.full_mask() {
            let c = CyclicCode::from_mask(&b, m);
            let Ok(units) = c.units(5_000) else { continue };
            let expected: u128 = c.support().iter().map(|&i| q.pow(b.dim(i) as u32) - 1).product();
            assert_eq!(units.len() as u128, expected);
            let rs = RowSpace::new(&c.generator_matrix());
            let e = c.identity();
            for u in units.iter().take(50) {
                assert!(c.contains(u).unwrap());
                assert!(rs.contains(u.coeffs()) || c.dim() == 0);
                assert_eq!(CyclicCode::from_generator(&b, u).unwrap(), c);
                assert_eq!(&u.mul(&e).unwrap(), u);
            }
        }
    }
}

#[test]
fn f4_fixtures() {
    let [a, b] = fixtures::f4_self_dual_pair().unwrap();
    let basis = a.data.basis().clone();
    let e0 = basis.idempotent(0).clone();
    let e1 = basis.idempotent(1).clone();

    // components of the first code
    let comps = a.data.to_code();
    assert_eq!(comps.components()[0], ComponentType::Graph(e0.clone()));
    assert_eq!(comps.components()[1], ComponentType::Plane);
    assert_eq!(comps.components()[2], ComponentType::Zero);
    assert_eq!(a.data.dim(), 3);

    let zero = e0.scale(0);
    let ((u1, u2), (v1, v2)) = a.data.two_generators();
    assert_eq!((u1, u2), (e1.add(&e0).unwrap(), e0.clone()));
    assert_eq!((v1, v2), (zero, e1.clone()));

    for fx in [&a, &b] {
        let shown = fx.displayed.as_ref().unwrap();
        assert_eq!(shown.rank(), 3);
        assert!(same_space(shown, &fx.data.generator_matrix()), "{}", fx.label);
        assert!(fx.data.is_self_dual());
        assert!(oracle::self_dual(shown, 3));
        assert!(!fx.data.is_double_circulant());
        assert!(oracle::double_circulant(shown, 3).is_none());
    }
    assert!(!a.data.is_principal());
    assert!(!a.data.is_dihedral());
    assert!(!oracle::y_closed(a.displayed.as_ref().unwrap(), 3));
    assert!(b.data.is_principal());
    assert!(b.data.is_dihedral());
    assert!(oracle::y_closed(b.displayed.as_ref().unwrap(), 3));

    // decomposing the displayed rows recovers the data
    let pairs = rows_as_pairs(a.displayed.as_ref().unwrap(), 3);
    assert_eq!(decompose(&basis, &pairs).unwrap(), a.data);

    let dc = fixtures::f4_double_circulant().unwrap();
    assert!(dc.data.is_double_circulant());
    assert!(dc.data.is_self_dual());
    assert!(dc.data.is_dihedral());
    let shown = dc.displayed.as_ref().unwrap();
    assert!(same_space(shown, &dc.data.generator_matrix()));
    assert_eq!(oracle::double_circulant(shown, 3).as_ref(), Some(dc.data.g()));
}

#[test]
fn f5_fixtures() {
    let [a, b, c] = fixtures::f5_self_dual_triple().unwrap();
    for fx in [&a, &b, &c] {
        let g = fx.data.generator_matrix();
        assert_eq!(fx.data.dim(), 4, "{}", fx.label);
        assert!(fx.data.is_self_dual(), "{}", fx.label);
        assert!(oracle::self_dual(&g, 4));
        assert_eq!(fx.data.is_consta_dihedral(), oracle::ytilde_closed(&g, 4), "{}", fx.label);
    }
    let e = a.data.basis().identity_of(0b0011);
    let ge = a.data.g().mul(&a.data.g().bar()).unwrap();
    assert_eq!(ge, e.neg());
    assert!(!a.data.is_consta_dihedral());
    assert!(b.data.is_consta_dihedral());
    assert!(c.data.is_double_circulant());
    let shown = c.displayed.as_ref().unwrap();
    assert!(same_space(shown, &c.data.generator_matrix()));
    assert!(oracle::ytilde_closed(shown, 4));
}

#[test]
fn construction_rejects_bad_data() {
    let b = fixtures::f4_n3().unwrap();
    let c = |s: &[usize]| CyclicCode::new(&b, s).unwrap();
    let e0 = b.idempotent(0).clone();
    let err = GoursatData::new(c(&[0]), c(&[]), c(&[0]), e0.clone()).unwrap_err();
    assert_eq!(err.kind(), "OverlapViolation");
    let err = GoursatData::new(c(&[]), c(&[1]), c(&[1, 2]), b.identity_of(0b110)).unwrap_err();
    assert_eq!(err.kind(), "OverlapViolation");
    // g vanishes on e1 inside C12
    let err = GoursatData::new(c(&[]), c(&[]), c(&[0, 1]), e0.clone()).unwrap_err();
    assert_eq!(err.kind(), "NotUnit");
    let other = fixtures::f5_n4().unwrap();
    let err = GoursatData::new(CyclicCode::zero(&other), c(&[]), c(&[0]), e0).unwrap_err();
    assert_eq!(err.kind(), "BasisMismatch");
}

fn rows_as_pairs(m: &Matrix, n: usize) -> Vec<Pair> {
    let f = m.field();
    m.row_iter()
        .map(|r| {
            (
                GroupAlgebraElement::new(f, r[..n].to_vec()).unwrap(),
                GroupAlgebraElement::new(f, r[n..].to_vec()).unwrap(),
            )
        })
        .collect()
}

/// Every enumerated code: predicates against the word-level oracle.
#[test]
fn predicates_agree_with_oracle() {
    for b in grid(&[2, 4, 3, 5], 5, 100_000).unwrap() {
        let n = b.n();
        for data in enumerate_qc(&b, 100_000).unwrap() {
            let g = data.generator_matrix();
            assert_eq!(g.rows(), data.dim());
            assert!(oracle::shift_invariant(&g, n));
            assert_eq!(data.is_self_dual(), oracle::self_dual(&g, n), "{data:?}");
            assert_eq!(data.is_dihedral(), oracle::y_closed(&g, n), "{data:?}");
            assert_eq!(data.is_consta_dihedral(), oracle::ytilde_closed(&g, n), "{data:?}");
            assert_eq!(data.is_double_circulant(), oracle::double_circulant(&g, n).is_some(), "{data:?}");
            if data.is_double_circulant() {
                assert_eq!(oracle::double_circulant(&g, n).as_ref(), Some(data.g()));
            }
            let (a, c) = data.two_generators();
            assert!(same_space(&span_matrix(&[a.clone(), c.clone()], n), &g));
            // principal means a single generator suffices
            if data.is_principal() {
                let s = (a.0.add(&c.0).unwrap(), a.1.add(&c.1).unwrap());
                assert!(same_space(&span_matrix(&[s], n), &g), "{data:?}");
            }
            let rebuilt = construct(data.c1().clone(), data.c2().clone(), data.c12().clone(), data.g().clone()).unwrap();
            assert_eq!(rebuilt.to_goursat(), data);
            assert_eq!(QuasiCyclicCode::from_goursat(&data).to_goursat(), data);
        }
    }
}

/// A code is principal iff some single pair generates it (checked over
/// all pairs for tiny parameters).
#[test]
fn principal_matches_single_generator_search() {
    let f = FieldSpec::prime(2).unwrap();
    let b = primitive_idempotents(&f, 3).unwrap();
    let words: Vec<Vec<u32>> = (0u32..64).map(|w| (0..6).map(|i| (w >> i) & 1).collect()).collect();
    let mut singles: Vec<Matrix> = Vec::new();
    for w in &words {
        let pair = (
            GroupAlgebraElement::new(&f, w[..3].to_vec()).unwrap(),
            GroupAlgebraElement::new(&f, w[3..].to_vec()).unwrap(),
        );
        singles.push(span_matrix(&[pair], 3));
    }
    for data in enumerate_qc(&b, 1000).unwrap() {
        let g = data.generator_matrix();
        let found = singles.iter().any(|s| same_space(s, &g));
        assert_eq!(found, data.is_principal(), "{data:?}");
    }
}

fn arb_pairs() -> impl Strategy<Value = (Arc<IdempotentBasis>, Vec<Pair>)> {
    (prop::sample::select(vec![(2u64, 3usize), (2, 5), (2, 7), (4, 3), (3, 4), (5, 4), (3, 2), (5, 3)]), 1usize..4)
        .prop_flat_map(|((q, n), k)| {
            let f = FieldSpec::of_order(q).unwrap();
            let b = primitive_idempotents(&f, n).unwrap();
            prop::collection::vec(prop::collection::vec(0..f.q(), 2 * n), k).prop_map(move |ws| {
                let pairs = ws
                    .into_iter()
                    .map(|w| {
                        (
                            GroupAlgebraElement::new(&f, w[..n].to_vec()).unwrap(),
                            GroupAlgebraElement::new(&f, w[n..].to_vec()).unwrap(),
                        )
                    })
                    .collect();
                (b.clone(), pairs)
            })
        })
}

proptest! {
    #[test]
    fn decompose_then_construct_preserves_the_code((b, pairs) in arb_pairs()) {
        let n = b.n();
        let data = decompose(&b, &pairs).unwrap();
        let span = span_matrix(&pairs, n);
        prop_assert_eq!(span.rows(), data.dim());
        prop_assert!(same_space(&span, &data.generator_matrix()));
        prop_assert_eq!(data.c1_tilde().dim() + data.c2().dim(), data.dim());
        prop_assert_eq!(data.c2_tilde().dim() + data.c1().dim(), data.dim());
    }
}
