//! Brute-force checks on generator matrices of length-2n codes.
//!
//! Nothing here looks at idempotents or Goursat data: codes are row spaces,
//! group actions are coordinate maps on words.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::group_algebra::GroupAlgebraElement;
use crate::matrix::{Matrix, RowSpace};

/// Default bound on `q^k` for span walks.
pub const DEFAULT_WALK_CAP: u128 = 1 << 20;

/// Default bound on `q^{2n}` for the subspace search.
pub const DEFAULT_SUBSPACE_CAP: u128 = 1 << 16;

fn check_width(g: &Matrix, n: usize) {
    assert_eq!(g.cols(), 2 * n, "generator matrix must have 2n columns");
}

/// `(a, b) -> (x a, x b)` on a word of length 2n.
pub fn shift_word(w: &[u32], n: usize) -> Vec<u32> {
    let mut out = vec![0u32; 2 * n];
    for i in 0..n {
        out[(i + 1) % n] = w[i];
        out[n + (i + 1) % n] = w[n + i];
    }
    out
}

fn reverse_half(h: &[u32]) -> impl Iterator<Item = u32> + '_ {
    let n = h.len();
    (0..n).map(move |k| h[(n - k) % n])
}

/// `(a, b) -> (bar b, bar a)`.
pub fn y_word(w: &[u32], n: usize) -> Vec<u32> {
    let (a, b) = w.split_at(n);
    reverse_half(b).chain(reverse_half(a)).collect()
}

/// `(a, b) -> (-bar b, bar a)`.
pub fn ytilde_word(field: &FieldSpec, w: &[u32], n: usize) -> Vec<u32> {
    let (a, b) = w.split_at(n);
    reverse_half(b)
        .map(|v| field.neg(v))
        .chain(reverse_half(a))
        .collect()
}

fn closed_under(g: &Matrix, map: impl FnMut(&[u32]) -> Vec<u32>) -> bool {
    RowSpace::new(g).contains_all(&g.map_rows(map))
}

/// Rank n and `G G^T = 0`.
pub fn self_dual(g: &Matrix, n: usize) -> bool {
    check_width(g, n);
    g.rank() == n
        && g
            .mul(&g.transpose())
            .expect("same field, matching shape")
            .is_zero()
}

pub fn shift_invariant(g: &Matrix, n: usize) -> bool {
    check_width(g, n);
    closed_under(g, |w| shift_word(w, n))
}

pub fn y_closed(g: &Matrix, n: usize) -> bool {
    check_width(g, n);
    closed_under(g, |w| y_word(w, n))
}

pub fn ytilde_closed(g: &Matrix, n: usize) -> bool {
    check_width(g, n);
    let f = g.field().clone();
    closed_under(g, |w| ytilde_word(&f, w, n))
}

/// If the row space has a generator matrix `(I | A)` with A circulant,
/// returns the first row of A as an element of FH.
pub fn double_circulant(g: &Matrix, n: usize) -> Option<GroupAlgebraElement> {
    check_width(g, n);
    let r = g.row_basis();
    if r.rows() != n {
        return None;
    }
    for i in 0..n {
        for j in 0..n {
            if r.get(i, j) != u32::from(i == j) {
                return None;
            }
        }
    }
    let first = &r.row(0)[n..];
    for i in 1..n {
        let row = &r.row(i)[n..];
        if (0..n).any(|j| row[(j + i) % n] != first[j]) {
            return None;
        }
    }
    Some(GroupAlgebraElement::from_raw(g.field(), first.to_vec()))
}

/// Calls `visit` on every word of the row space of `basis` (rows assumed
/// independent). The zero word comes first.
pub fn for_each_word(basis: &Matrix, cap: u128, mut visit: impl FnMut(&[u32])) -> Result<()> {
    let q = basis.field().q() as u128;
    let k = basis.rows();
    let needed = q.checked_pow(k as u32).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::CapExceeded {
            what: "span walk",
            needed,
            cap,
        });
    }
    let f = basis.field();
    let cols = basis.cols();
    // partial[j] holds the combination of rows 0..j
    let mut partial = vec![vec![0u32; cols]; k + 1];
    let mut coef = vec![0u32; k];
    loop {
        for j in 0..k {
            let (head, tail) = partial.split_at_mut(j + 1);
            let (prev, next) = (&head[j], &mut tail[0]);
            for c in 0..cols {
                next[c] = f.add(prev[c], f.mul(coef[j], basis.get(j, c)));
            }
        }
        visit(&partial[k]);
        let mut j = k;
        loop {
            if j == 0 {
                return Ok(());
            }
            j -= 1;
            coef[j] += 1;
            if (coef[j] as u128) < q {
                break;
            }
            coef[j] = 0;
        }
    }
}

/// Minimum Hamming weight of a nonzero word; `None` for the zero code.
pub fn min_distance(g: &Matrix, cap: u128) -> Result<Option<usize>> {
    let basis = g.row_basis();
    let mut best: Option<usize> = None;
    for_each_word(&basis, cap, |w| {
        let wt = w.iter().filter(|&&v| v != 0).count();
        if wt > 0 && best.is_none_or(|b| wt < b) {
            best = Some(wt);
        }
    })?;
    Ok(best)
}

/// Every subspace of F^{2n} closed under [`shift_word`], each as its RREF
/// basis, found by growing from 0 one shift-orbit at a time.
pub fn shift_invariant_subspaces(field: &FieldSpec, n: usize, cap: u128) -> Result<Vec<Matrix>> {
    let q = field.q() as u128;
    let needed = q.checked_pow(2 * n as u32).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::CapExceeded {
            what: "ambient space",
            needed,
            cap,
        });
    }
    let cols = 2 * n;
    let zero = Matrix::zeros(field, 0, cols);
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(Vec::new());
    let mut found = vec![zero];
    let mut next = 0;
    while next < found.len() {
        let v = found[next].clone();
        next += 1;
        let pivots: Vec<usize> = v
            .row_iter()
            .map(|r| r.iter().position(|&x| x != 0).unwrap())
            .collect();
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        // one representative per line of the complement: zero on pivots,
        // leading entry 1
        let mut w = vec![0u32; cols];
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut j = free.len();
            loop {
                if j == 0 {
                    break;
                }
                j -= 1;
                digits[j] += 1;
                if digits[j] < field.q() {
                    break;
                }
                digits[j] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
            let lead = digits.iter().position(|&d| d != 0).unwrap();
            if digits[lead] != 1 {
                continue;
            }
            for (d, &c) in digits.iter().zip(&free) {
                w[c] = *d;
            }
            let mut m = v.clone();
            let mut s = w.clone();
            for _ in 0..n {
                m.push_row(&s);
                s = shift_word(&s, n);
            }
            let b = m.row_basis();
            let key = b.row_iter().flatten().copied().collect::<Vec<_>>();
            if seen.insert(key) {
                found.push(b);
            }
        }
    }
    found.sort_by_key(|m| (m.rows(), m.row_iter().flatten().copied().collect::<Vec<_>>()));
    Ok(found)
}
