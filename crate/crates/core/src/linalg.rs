//! Dense exact Gaussian elimination over the coefficient field.
//!
//! Matrices are `Vec<Vec<Scalar>>` in row-major order; everything is exact,
//! so ranks and kernels are true answers, not numerical estimates.  Sizes
//! stay small (graded pieces of desk-scale rings), so no sparsity tricks.

use alloc::vec::Vec;

use crate::field::{FieldSpec, Scalar};

/// Reduced row echelon form in place; returns the pivot columns in order.
pub fn rref(field: &FieldSpec, rows: &mut [Vec<Scalar>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        // Find a row at or below r with a nonzero entry in column c.
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).expect("pivot is nonzero");
        for x in rows[r][c..].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                let (pivot_row, target_row) = if i < r {
                    let (head, tail) = rows.split_at_mut(r);
                    (&tail[0], &mut head[i])
                } else {
                    let (head, tail) = rows.split_at_mut(i);
                    (&head[r], &mut tail[0])
                };
                for (x, p) in target_row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = field.sub(x, &field.mul(&factor, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivots
}

pub fn rank(field: &FieldSpec, rows: &[Vec<Scalar>]) -> usize {
    let mut copy: Vec<Vec<Scalar>> = rows.to_vec();
    rref(field, &mut copy).len()
}

/// Basis of the solution space of `rows * x = 0` (each row is one equation
/// over `ncols` unknowns).
pub fn kernel_basis(field: &FieldSpec, rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut copy: Vec<Vec<Scalar>> = rows.to_vec();
    let pivots = rref(field, &mut copy);
    let mut basis = Vec::new();
    let mut pivot_of_col: Vec<Option<usize>> = alloc::vec![None; ncols];
    for (i, &c) in pivots.iter().enumerate() {
        pivot_of_col[c] = Some(i);
    }
    for free in 0..ncols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = alloc::vec![field.zero(); ncols];
        v[free] = field.one();
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = field.neg(&copy[i][free]);
        }
        basis.push(v);
    }
    basis
}

/// Greedy selection of a row subset spanning the row space: returns the
/// indices of rows that are linearly independent of everything before them.
/// Deterministic — depends only on the input order.
pub fn independent_rows(field: &FieldSpec, rows: &[Vec<Scalar>]) -> Vec<usize> {
    // `echelon` holds (pivot column, normalized row); rows are forward-
    // reduced against it, which is all an independence test needs.
    let mut echelon: Vec<(usize, Vec<Scalar>)> = Vec::new();
    let mut kept = Vec::new();
    'next_row: for (idx, row) in rows.iter().enumerate() {
        let mut v = row.clone();
        loop {
            let Some(c) = v.iter().position(|x| !x.is_zero()) else {
                continue 'next_row; // reduced to zero: dependent
            };
            match echelon.iter().find(|(p, _)| *p == c) {
                Some((_, pivot_row)) => {
                    let factor = v[c].clone();
                    for (a, b) in v.iter_mut().zip(pivot_row) {
                        let delta = field.mul(&factor, b);
                        *a = field.sub(a, &delta);
                    }
                }
                None => {
                    let inv = field.inv(&v[c]).expect("pivot is nonzero");
                    for a in v.iter_mut() {
                        *a = field.mul(a, &inv);
                    }
                    echelon.push((c, v));
                    kept.push(idx);
                    continue 'next_row;
                }
            }
        }
    }
    kept
}
