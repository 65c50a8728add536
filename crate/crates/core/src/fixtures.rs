//! Small hand-checkable codes used by the tests and by `qcd repro`.
//!
//! Over F_4 (w^2 = w + 1), n = 3: `E = {e0, e1, bar e1}` with
//! `e0 = 1 + x + x^2`, `e1 = 1 + w x + w^2 x^2`.
//! Over F_5, n = 4: `E = {e0, e1, e2, bar e2}` with
//! `e0 = -1 - x - x^2 - x^3`, `e1 = -1 + x - x^2 + x^3`,
//! `e2 = -1 + 2x + x^2 - 2x^3`, and `e = e0 + e1`.

use std::sync::Arc;

use crate::cyclic::CyclicCode;
use crate::error::Result;
use crate::gf::FieldSpec;
use crate::goursat::GoursatData;
use crate::idem::{primitive_idempotents, IdempotentBasis};
use crate::matrix::Matrix;

pub struct Fixture {
    pub label: &'static str,
    pub data: GoursatData,
    /// A generator matrix written out by hand, when there is one.
    pub displayed: Option<Matrix>,
}

pub fn f4_n3() -> Result<Arc<IdempotentBasis>> {
    primitive_idempotents(&FieldSpec::new(2, 2, None)?, 3)
}

pub fn f5_n4() -> Result<Arc<IdempotentBasis>> {
    primitive_idempotents(&FieldSpec::prime(5)?, 4)
}

fn code(b: &Arc<IdempotentBasis>, s: &[usize]) -> Result<CyclicCode> {
    CyclicCode::new(b, s)
}

/// `C = FH (e0, e0) + FH (e1, 0) + FH (0, e1)` and the same with `bar e1`
/// in the last generator. Both are self-dual of length 6.
pub fn f4_self_dual_pair() -> Result<[Fixture; 2]> {
    let b = f4_n3()?;
    let f = b.field().clone();
    let e0 = b.idempotent(0).clone();
    // w = 2, w^2 = 3
    let a1 = Matrix::from_rows(
        &f,
        6,
        &[
            vec![1, 1, 1, 1, 1, 1],
            vec![1, 2, 3, 0, 0, 0],
            vec![0, 0, 0, 1, 2, 3],
        ],
    )?;
    let a2 = Matrix::from_rows(
        &f,
        6,
        &[
            vec![1, 1, 1, 1, 1, 1],
            vec![1, 2, 3, 0, 0, 0],
            vec![0, 0, 0, 1, 3, 2],
        ],
    )?;
    Ok([
        Fixture {
            label: "C1 = C2 = FH e1, C12 = FH e0, g = e0",
            data: GoursatData::new(code(&b, &[1])?, code(&b, &[1])?, code(&b, &[0])?, e0.clone())?,
            displayed: Some(a1),
        },
        Fixture {
            label: "C1 = FH e1, C2 = FH bar(e1), C12 = FH e0, g = e0",
            data: GoursatData::new(code(&b, &[1])?, code(&b, &[2])?, code(&b, &[0])?, e0)?,
            displayed: Some(a2),
        },
    ])
}

/// `FH (1, g)` with `g = a e0 + b e1 + c bar(e1)`, `a^2 = bc = 1`; here
/// `a = 1, b = w, c = w^2`.
pub fn f4_double_circulant() -> Result<Fixture> {
    let b = f4_n3()?;
    let g = b
        .idempotent(0)
        .add_unchecked(&b.idempotent(1).scale(2))
        .add_unchecked(&b.idempotent(2).scale(3));
    let data = GoursatData::double_circulant(&b, g.clone())?;
    let mut m = Matrix::zeros(b.field(), 0, 6);
    let circ = g.circulant();
    for k in 0..3 {
        let mut row = vec![0u32; 6];
        row[k] = 1;
        row[3..].copy_from_slice(circ.row(k));
        m.push_row(&row);
    }
    Ok(Fixture {
        label: "C12 = FH, g = e0 + w e1 + w^2 bar(e1)",
        data,
        displayed: Some(m),
    })
}

/// The three length-8 codes over F_5 built on `e = e0 + e1`.
pub fn f5_self_dual_triple() -> Result<[Fixture; 3]> {
    let b = f5_n4()?;
    let e = b.identity_of(0b0011);
    let g = e.scale(2);
    // a^2 = b^2 = cd = -1 with a = b = 2, c = 1, d = 4
    let g3 = b
        .idempotent(0)
        .scale(2)
        .add_unchecked(&b.idempotent(1).scale(2))
        .add_unchecked(b.idempotent(2))
        .add_unchecked(&b.idempotent(3).scale(4));
    let third = GoursatData::double_circulant(&b, g3.clone())?;
    let mut m = Matrix::zeros(b.field(), 0, 8);
    let circ = g3.circulant();
    for k in 0..4 {
        let mut row = vec![0u32; 8];
        row[k] = 1;
        row[4..].copy_from_slice(circ.row(k));
        m.push_row(&row);
    }
    Ok([
        Fixture {
            label: "C1 = C2 = FH e2, C12 = FH e, g = 2e",
            data: GoursatData::new(code(&b, &[2])?, code(&b, &[2])?, code(&b, &[0, 1])?, g.clone())?,
            displayed: None,
        },
        Fixture {
            label: "C1 = FH e2, C2 = FH bar(e2), C12 = FH e, g = 2e",
            data: GoursatData::new(code(&b, &[2])?, code(&b, &[3])?, code(&b, &[0, 1])?, g)?,
            displayed: None,
        },
        Fixture {
            label: "C12 = FH, g = 2e0 + 2e1 + e2 + 4 bar(e2)",
            data: third,
            displayed: Some(m),
        },
    ])
}
