//! Independent cross-checks computed by brute force.
//!
//! Everything here works over explicit ambient monomial bases with plain
//! linear algebra (Macaulay-style spans) or direct arithmetic; none of it
//! calls into the Gröbner machinery.  Agreement between these routes and
//! the engine's primary ones is therefore meaningful evidence, not a
//! tautology.  The cost is exponential in the degree, which is fine at the
//! scales the test suites use.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::EngineError;
use crate::field::Scalar;
use crate::ideal::Ideal;
use crate::linalg;
use crate::monomial::{Exponent, Monomial};
use crate::poly::Polynomial;
use crate::ring::PresentedRing;
use crate::Result;

/// Column index for every ambient monomial of degree `d`.
fn column_map(ring: &PresentedRing, d: u64) -> (Vec<Monomial>, BTreeMap<Vec<Exponent>, usize>) {
    let monos = ring.ambient().monomials_of_degree(d);
    let map = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.exponents().to_vec(), i))
        .collect();
    (monos, map)
}

fn coordinates(
    f: &Polynomial,
    map: &BTreeMap<Vec<Exponent>, usize>,
    width: usize,
    zero: &Scalar,
) -> Result<Vec<Scalar>> {
    let mut row = alloc::vec![zero.clone(); width];
    for t in f.terms() {
        let Some(&col) = map.get(t.mono.exponents()) else {
            return Err(EngineError::Internal(
                "oracle: term outside the expected degree piece".to_string(),
            ));
        };
        row[col] = t.coeff.clone();
    }
    Ok(row)
}

/// Rows spanning the degree-`d` part of the ambient ideal generated by
/// `gens`: one row per product `m·g` with `deg(m·g) = d`.
fn macaulay_rows(
    ring: &PresentedRing,
    gens: &[Polynomial],
    d: u64,
    map: &BTreeMap<Vec<Exponent>, usize>,
    width: usize,
) -> Result<Vec<Vec<Scalar>>> {
    let ambient = ring.ambient();
    let one = ambient.field().one();
    let zero = ambient.field().zero();
    let mut rows = Vec::new();
    for g in gens {
        let (homog, deg) = ambient.homogeneous_degree(g);
        if !homog {
            return Err(EngineError::NotHomogeneous(
                "oracle: Macaulay spans need homogeneous generators".to_string(),
            ));
        }
        let Some(gdeg) = deg else { continue };
        if gdeg > d {
            continue;
        }
        for m in ambient.monomials_of_degree(d - gdeg) {
            rows.push(coordinates(&ambient.mul_term(g, &one, &m), map, width, &zero)?);
        }
    }
    Ok(rows)
}

fn gens_with_relations(ideal: &Ideal) -> Vec<Polynomial> {
    let mut gens = ideal.gens().to_vec();
    gens.extend_from_slice(ideal.ring().relations());
    gens
}

/// Membership of a homogeneous `f` in the ideal, decided by comparing the
/// rank of the degree-`deg f` Macaulay span with and without `f`.
pub fn macaulay_contains(ideal: &Ideal, f: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let ring = ideal.ring();
    let ambient = ring.ambient();
    let (homog, deg) = ambient.homogeneous_degree(f);
    if !homog {
        return Err(EngineError::NotHomogeneous(
            "oracle: membership is decided degreewise, so the query must be homogeneous"
                .to_string(),
        ));
    }
    let d = deg.expect("nonzero polynomial has a degree");
    let (monos, map) = column_map(ring, d);
    let width = monos.len();
    let field = ambient.field();
    let mut rows = macaulay_rows(ring, &gens_with_relations(ideal), d, &map, width)?;
    let base = linalg::rank(field, &rows);
    rows.push(coordinates(f, &map, width, &field.zero())?);
    Ok(linalg::rank(field, &rows) == base)
}

/// `dim_k [I]_d` as a subspace of the quotient ring's piece, computed as
/// rank(generators + relations) − rank(relations) at degree `d`.
pub fn macaulay_piece_dim(ideal: &Ideal, d: u64) -> Result<usize> {
    let ring = ideal.ring();
    let (monos, map) = column_map(ring, d);
    let width = monos.len();
    let field = ring.ambient().field();
    let with = macaulay_rows(ring, &gens_with_relations(ideal), d, &map, width)?;
    let rels = macaulay_rows(ring, ring.relations(), d, &map, width)?;
    Ok(linalg::rank(field, &with) - linalg::rank(field, &rels))
}

/// `dim_k [R]_d` for the quotient ring itself: ambient monomial count minus
/// the rank of the relations' Macaulay span.
pub fn macaulay_ring_piece_dim(ring: &PresentedRing, d: u64) -> Result<usize> {
    let (monos, map) = column_map(ring, d);
    let width = monos.len();
    let rels = macaulay_rows(ring, ring.relations(), d, &map, width)?;
    Ok(width - linalg::rank(ring.ambient().field(), &rels))
}

/// `dim_k ([A]_d ∩ [B]_d)` in the quotient ring, via the rank identity
/// `dim(U ∩ V) = dim U + dim V − dim(U + V)` applied to the ambient spans
/// (both of which contain the relations' span).
pub fn macaulay_intersection_dim(a: &Ideal, b: &Ideal, d: u64) -> Result<usize> {
    if a.ring() != b.ring() {
        return Err(EngineError::RingMismatch(
            "oracle: intersection operands live in different rings".to_string(),
        ));
    }
    let ring = a.ring();
    let (monos, map) = column_map(ring, d);
    let width = monos.len();
    let field = ring.ambient().field();
    let rows_a = macaulay_rows(ring, &gens_with_relations(a), d, &map, width)?;
    let rows_b = macaulay_rows(ring, &gens_with_relations(b), d, &map, width)?;
    let rels = macaulay_rows(ring, ring.relations(), d, &map, width)?;
    let rank_a = linalg::rank(field, &rows_a);
    let rank_b = linalg::rank(field, &rows_b);
    let mut joint = rows_a;
    joint.extend(rows_b);
    let rank_sum = linalg::rank(field, &joint);
    let rank_q = linalg::rank(field, &rels);
    Ok(rank_a + rank_b - rank_sum - rank_q)
}

/// Membership in the numerical semigroup generated by `generators`,
/// by dynamic programming.
pub fn semigroup_contains(generators: &[u64], n: u64) -> bool {
    if n == 0 {
        return true;
    }
    let n = n as usize;
    let mut reachable = alloc::vec![false; n + 1];
    reachable[0] = true;
    for v in 1..=n {
        for &g in generators {
            let g = g as usize;
            if g != 0 && g <= v && reachable[v - g] {
                reachable[v] = true;
                break;
            }
        }
    }
    reachable[n]
}
