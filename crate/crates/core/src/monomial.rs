//! Exponent vectors with cached weighted degree, and monomial orders.
//!
//! The engine uses one graded order throughout: compare weighted degrees
//! first, then break ties by scanning exponents from the **last** variable
//! backwards, larger exponent winning.  In `k[a,b]` with weights `(2,3)` this
//! makes `b^2 > a^3` (equal degree 6, `b`-exponents 2 > 0), so
//! `lm(b^2 - a^3) = b^2`; in standard-graded `k[x,y]` it makes `y > x`.
//!
//! Block orders are used internally for elimination: the front block of
//! variables is compared first (by its own weighted degree, then the same
//! right-to-left tie-break within the block), so any Gröbner basis element
//! whose lead monomial is free of the front block is entirely free of it.

use alloc::vec::Vec;
use core::cmp::Ordering;

/// Exponents are `u16`; weighted degrees use `u64`.  Exceeding `u16::MAX` in
/// a single exponent is a hard panic — no realistic desk-scale computation
/// comes anywhere near it, and silent wraparound would corrupt ideals.
pub type Exponent = u16;

/// A monomial: exponent vector plus cached weighted degree.
///
/// The degree is derived data, cached because every comparison under a graded
/// order looks at it first.  All constructors take the weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<Exponent>,
    degree: u64,
}

impl Monomial {
    pub fn new(exps: Vec<Exponent>, weights: &[u64]) -> Self {
        assert_eq!(exps.len(), weights.len(), "exponent/weight arity mismatch");
        let degree = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: alloc::vec![0; nvars],
            degree: 0,
        }
    }

    /// The `i`-th variable as a monomial.
    pub fn variable(i: usize, weights: &[u64]) -> Self {
        let mut exps = alloc::vec![0; weights.len()];
        exps[i] = 1;
        Monomial {
            exps,
            degree: weights[i],
        }
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| {
                a.checked_add(b)
                    .expect("monomial exponent overflow (u16); input far beyond desk scale")
            })
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn divide_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other), "inexact monomial division");
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(&b, &a)| b - a)
            .collect();
        Monomial {
            exps,
            degree: other.degree - self.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u64]) -> Monomial {
        let exps: Vec<Exponent> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial::new(exps, weights)
    }

    pub fn gcd(&self, other: &Monomial, weights: &[u64]) -> Monomial {
        let exps: Vec<Exponent> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial::new(exps, weights)
    }

    /// True when the supports are disjoint.
    pub fn coprime_to(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Weighted degree of the sub-vector `range` under the matching weights.
    fn partial_degree(&self, weights: &[u64], lo: usize, hi: usize) -> u64 {
        self.exps[lo..hi]
            .iter()
            .zip(&weights[lo..hi])
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }
}

/// Monomial orders understood by the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Weighted degree, then exponents compared from the last variable
    /// backwards (larger exponent = larger monomial).
    Graded,
    /// Eliminate the first `front` variables: compare the front sub-vector
    /// (its weighted degree, then right-to-left exponents within the block),
    /// then fall back to [`MonomialOrder::Graded`] on the whole vector.
    Block { front: usize },
}

impl MonomialOrder {
    /// Total order on monomials of the same arity.
    pub fn cmp(&self, a: &Monomial, b: &Monomial, weights: &[u64]) -> Ordering {
        match *self {
            MonomialOrder::Graded => graded_cmp(a, b, 0, a.nvars(), weights),
            MonomialOrder::Block { front } => {
                let fa = a.partial_degree(weights, 0, front);
                let fb = b.partial_degree(weights, 0, front);
                fa.cmp(&fb)
                    .then_with(|| rev_exp_cmp(a, b, 0, front))
                    .then_with(|| graded_cmp(a, b, 0, a.nvars(), weights))
            }
        }
    }
}

fn graded_cmp(a: &Monomial, b: &Monomial, lo: usize, hi: usize, weights: &[u64]) -> Ordering {
    let da = a.partial_degree(weights, lo, hi);
    let db = b.partial_degree(weights, lo, hi);
    da.cmp(&db).then_with(|| rev_exp_cmp(a, b, lo, hi))
}

/// Tie-break: scan from the last variable towards the first; the first
/// position where the exponents differ decides, larger exponent wins.
fn rev_exp_cmp(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    for i in (lo..hi).rev() {
        match a.exponents()[i].cmp(&b.exponents()[i]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}
