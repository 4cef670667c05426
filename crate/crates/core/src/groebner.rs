//! Buchberger's algorithm with the coprime and chain criteria, full normal
//! forms, reduced bases, budgets, and degree truncation.
//!
//! Pair selection is deterministic: the pending pair with the smallest
//! (weighted lcm degree, i, j) triple is processed first.  For homogeneous
//! input an optional truncation degree discards pairs above the cap — the
//! result is then exactly the low-degree part of the full reduced basis and
//! is marked as truncated; it is never passed off as a complete basis.
//!
//! All bases returned are *reduced*: monic elements, no leading monomial
//! dividing another, every tail term irreducible.  Elements are sorted
//! ascending by leading monomial, making the output canonical for the ideal
//! (given ring and order) — two ideals are equal iff their reduced bases are
//! identical, which the rest of the engine leans on heavily.

use alloc::vec::Vec;
use core::cmp::Ordering;

use alloc::collections::BTreeSet;

use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::{EngineError, Result};

/// Work limits for one Buchberger run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbBudget {
    /// Hard cap on S-pairs actually reduced; exceeding it is an error.
    pub max_pairs: u64,
    /// Hard cap on the weighted degree of any pair or basis element.
    pub degree_cap: u64,
    /// Optional truncation degree: for homogeneous input, pairs above this
    /// degree are discarded (soundly) instead of processed, and the result
    /// is flagged.  Ignored for inhomogeneous input.
    pub truncate_at: Option<u64>,
}

impl Default for GbBudget {
    fn default() -> Self {
        GbBudget {
            max_pairs: 200_000,
            degree_cap: 64,
            truncate_at: None,
        }
    }
}

impl GbBudget {
    pub fn truncated(mut self, degree: u64) -> Self {
        self.truncate_at = Some(degree);
        self
    }
}

/// Counters from one Buchberger run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_considered: u64,
    pub pairs_reduced: u64,
    pub zero_reductions: u64,
    pub criterion_skips: u64,
    pub discarded_by_truncation: u64,
    pub max_pair_degree: u64,
    pub basis_size: u64,
}

/// A reduced Gröbner basis (possibly truncated).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    truncated_at: Option<u64>,
    stats: GbStats,
}

impl GroebnerBasis {
    /// Elements sorted ascending by leading monomial, monic, tail-reduced.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// `Some(d)` when pairs above degree `d` were discarded; such a basis is
    /// complete only up to degree `d` and must not be treated as full.
    pub fn truncated_at(&self) -> Option<u64> {
        self.truncated_at
    }

    pub fn stats(&self) -> &GbStats {
        &self.stats
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|f| f.leading_monomial().expect("basis elements are nonzero").clone())
            .collect()
    }

    /// Elements not involving any of the first `front` variables (for
    /// elimination under a block order).
    pub fn front_free_elements(&self, ring: &PolyRing, front: usize) -> Vec<Polynomial> {
        self.elements
            .iter()
            .filter(|f| ring.free_of_front(f, front))
            .cloned()
            .collect()
    }
}

/// Full normal form of `f` against `basis`: each step rewrites the current
/// leading term by the *first* element (in list order) whose leading monomial
/// divides it; irreducible leading terms move to the remainder.  Every term
/// of the output is irreducible, and the procedure is deterministic.
pub fn normal_form(ring: &PolyRing, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut work = f.clone();
    let mut remainder: Vec<crate::poly::Term> = Vec::new();
    'outer: while let Some(lt) = work.leading_term() {
        for g in basis {
            let glm = match g.leading_monomial() {
                Some(m) => m,
                None => continue,
            };
            if glm.divides(&lt.mono) {
                let mono = glm.divide_into(&lt.mono);
                let coeff = ring
                    .field()
                    .div(&lt.coeff, &g.leading_term().expect("nonzero").coeff)
                    .expect("leading coefficients are nonzero");
                work = ring.sub(&work, &ring.mul_term(g, &coeff, &mono));
                continue 'outer;
            }
        }
        // Irreducible leading term: it is strictly larger than everything
        // left in `work`, so the remainder stays sorted.
        let mut rest = work.terms().to_vec();
        remainder.push(rest.remove(0));
        work = ring.from_terms(rest);
    }
    ring.from_terms(remainder)
}

fn s_polynomial(
    ring: &PolyRing,
    f: &Polynomial,
    g: &Polynomial,
    lcm: &Monomial,
) -> Polynomial {
    // Both inputs are monic.
    let one = ring.field().one();
    let uf = f
        .leading_monomial()
        .expect("nonzero")
        .divide_into(lcm);
    let ug = g
        .leading_monomial()
        .expect("nonzero")
        .divide_into(lcm);
    ring.sub(&ring.mul_term(f, &one, &uf), &ring.mul_term(g, &one, &ug))
}

fn pair_key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Buchberger's algorithm; returns the reduced basis.
pub fn buchberger(
    ring: &PolyRing,
    input: &[Polynomial],
    budget: &GbBudget,
) -> Result<GroebnerBasis> {
    let weights = ring.weights();
    let mut basis: Vec<Polynomial> = Vec::new();
    for f in input {
        if !f.is_zero() {
            basis.push(ring.monic(f));
        }
    }

    let all_homogeneous = basis.iter().all(|f| ring.is_homogeneous(f));
    let truncate_at = if all_homogeneous { budget.truncate_at } else { None };

    let mut stats = GbStats::default();
    let mut truncated = false;

    // Pending pairs ordered by (lcm degree, i, j); the flat mirror set backs
    // the chain criterion's "still pending" lookups.
    let mut queue: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let lcm_of = |basis: &[Polynomial], i: usize, j: usize| -> Monomial {
        let li = basis[i].leading_monomial().expect("nonzero");
        let lj = basis[j].leading_monomial().expect("nonzero");
        li.lcm(lj, weights)
    };

    for j in 0..basis.len() {
        for i in 0..j {
            queue.insert((lcm_of(&basis, i, j).degree(), i, j));
            pending.insert((i, j));
        }
    }

    while let Some(&(deg, i, j)) = queue.iter().next() {
        queue.remove(&(deg, i, j));
        pending.remove(&(i, j));
        stats.pairs_considered += 1;

        if let Some(cap) = truncate_at {
            if deg > cap {
                truncated = true;
                stats.discarded_by_truncation += 1;
                continue;
            }
        }
        if deg > budget.degree_cap {
            return Err(EngineError::Budget {
                pairs_processed: stats.pairs_reduced,
                max_pair_degree: deg,
                pair_cap: budget.max_pairs,
                degree_cap: budget.degree_cap,
            });
        }
        stats.max_pair_degree = stats.max_pair_degree.max(deg);

        let li = basis[i].leading_monomial().expect("nonzero").clone();
        let lj = basis[j].leading_monomial().expect("nonzero").clone();
        if li.coprime_to(&lj) {
            stats.criterion_skips += 1;
            continue;
        }
        let lcm = li.lcm(&lj, weights);
        let chain_skip = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k]
                    .leading_monomial()
                    .expect("nonzero")
                    .divides(&lcm)
                && !pending.contains(&pair_key(i, k))
                && !pending.contains(&pair_key(j, k))
        });
        if chain_skip {
            stats.criterion_skips += 1;
            continue;
        }

        stats.pairs_reduced += 1;
        if stats.pairs_reduced > budget.max_pairs {
            return Err(EngineError::Budget {
                pairs_processed: stats.pairs_reduced,
                max_pair_degree: stats.max_pair_degree,
                pair_cap: budget.max_pairs,
                degree_cap: budget.degree_cap,
            });
        }

        let s = s_polynomial(ring, &basis[i], &basis[j], &lcm);
        let r = normal_form(ring, &s, &basis);
        if r.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        let rdeg = ring.degree(&r).expect("nonzero");
        if rdeg > budget.degree_cap {
            return Err(EngineError::Budget {
                pairs_processed: stats.pairs_reduced,
                max_pair_degree: rdeg,
                pair_cap: budget.max_pairs,
                degree_cap: budget.degree_cap,
            });
        }
        let r = ring.monic(&r);
        let t = basis.len();
        basis.push(r);
        for m in 0..t {
            queue.insert((lcm_of(&basis, m, t).degree(), m, t));
            pending.insert((m, t));
        }
    }

    let elements = reduce_basis(ring, basis);
    stats.basis_size = elements.len() as u64;
    Ok(GroebnerBasis {
        elements,
        truncated_at: if truncated { truncate_at } else { None },
        stats,
    })
}

/// Interreduces a basis into the unique reduced form: minimal leading
/// monomials, monic, tails fully reduced, sorted ascending by lead.
fn reduce_basis(ring: &PolyRing, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| {
        match (a.leading_monomial(), b.leading_monomial()) {
            (Some(x), Some(y)) => ring.cmp_mono(x, y),
            _ => Ordering::Equal, // zeros were already excluded
        }
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    'outer: for f in basis {
        let flm = f.leading_monomial().expect("nonzero").clone();
        for g in &minimal {
            if g.leading_monomial().expect("nonzero").divides(&flm) {
                continue 'outer;
            }
        }
        minimal.push(f);
    }
    // With minimal leading monomials fixed, one full normal form of each
    // element against the others yields the reduced basis: no term of the
    // result is divisible by another lead, and the element's own lead cannot
    // divide its tail (tail terms are strictly smaller).
    (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            ring.monic(&normal_form(ring, &minimal[i], &others))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use alloc::string::ToString;
    use alloc::sync::Arc;
    use alloc::vec;

    fn ring_xy() -> Arc<PolyRing> {
        PolyRing::new(
            FieldSpec::prime(32003).unwrap(),
            vec![("x".to_string(), 1), ("y".to_string(), 1)],
        )
        .unwrap()
    }

    fn gb(ring: &PolyRing, gens: &[&str]) -> GroebnerBasis {
        let polys: Vec<Polynomial> = gens.iter().map(|s| ring.parse(s).unwrap()).collect();
        buchberger(ring, &polys, &GbBudget::default()).unwrap()
    }

    #[test]
    fn normal_form_single_step() {
        let r = ring_xy();
        let basis = vec![r.parse("x^2 - y").unwrap()];
        let f = r.parse("x^2 + y").unwrap();
        let nf = normal_form(&r, &f, &basis);
        assert_eq!(r.render(&nf), "2*y");
    }

    #[test]
    fn normal_form_against_empty_basis() {
        let r = ring_xy();
        let f = r.parse("x^2 + y").unwrap();
        assert_eq!(normal_form(&r, &f, &[]), f);
    }

    #[test]
    fn linear_ideal_reduces_to_variables() {
        let r = ring_xy();
        let basis = gb(&r, &["x + y", "x - y"]);
        let rendered: Vec<_> = basis.elements().iter().map(|f| r.render(f)).collect();
        assert_eq!(rendered, vec!["x", "y"]);
        assert!(basis.truncated_at().is_none());
    }

    #[test]
    fn reduced_basis_is_input_order_independent() {
        let r = ring_xy();
        let a = gb(&r, &["x^2 - y^2", "x*y + y^2", "y^3"]);
        let b = gb(&r, &["y^3", "x*y + y^2", "x^2 - y^2"]);
        let c = gb(&r, &["x*y + y^2", "y^3", "x^2 - y^2"]);
        assert_eq!(a.elements(), b.elements());
        assert_eq!(a.elements(), c.elements());
    }

    #[test]
    fn zero_ideal() {
        let r = ring_xy();
        let basis = buchberger(&r, &[], &GbBudget::default()).unwrap();
        assert!(basis.elements().is_empty());
        let z = vec![Polynomial::zero()];
        let basis = buchberger(&r, &z, &GbBudget::default()).unwrap();
        assert!(basis.elements().is_empty());
    }

    #[test]
    fn unit_ideal() {
        let r = ring_xy();
        let basis = gb(&r, &["x", "x + 1"]);
        let rendered: Vec<_> = basis.elements().iter().map(|f| r.render(f)).collect();
        assert_eq!(rendered, vec!["1"]);
    }

    #[test]
    fn truncation_marks_and_discards() {
        let r = ring_xy();
        let gens: Vec<Polynomial> = ["x^2", "x*y", "y^2"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let budget = GbBudget::default().truncated(2);
        let basis = buchberger(&r, &gens, &budget).unwrap();
        assert_eq!(basis.truncated_at(), Some(2));
        assert_eq!(basis.elements().len(), 3);
        // Without truncation nothing is discarded and nothing is flagged.
        let full = buchberger(&r, &gens, &GbBudget::default()).unwrap();
        assert!(full.truncated_at().is_none());
        assert_eq!(full.elements(), basis.elements());
    }

    #[test]
    fn pair_budget_exhaustion_is_an_error() {
        let r = ring_xy();
        let gens: Vec<Polynomial> = ["x^3 - y", "x^2*y - x", "x*y^2 - y^2 + x"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let budget = GbBudget {
            max_pairs: 1,
            ..GbBudget::default()
        };
        match buchberger(&r, &gens, &budget) {
            Err(EngineError::Budget { pair_cap: 1, .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn degree_cap_is_an_error() {
        let r = ring_xy();
        let gens: Vec<Polynomial> = ["x^2 - y^2", "x*y + y^2"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let budget = GbBudget {
            degree_cap: 2,
            ..GbBudget::default()
        };
        assert!(matches!(
            buchberger(&r, &gens, &budget),
            Err(EngineError::Budget { degree_cap: 2, .. })
        ));
    }

    #[test]
    fn membership_via_normal_form() {
        let r = ring_xy();
        let basis = gb(&r, &["x^2 - y^2", "x*y + y^2", "y^3"]);
        let rendered: Vec<_> = basis.elements().iter().map(|f| r.render(f)).collect();
        assert_eq!(rendered, vec!["x*y + x^2", "y^2 - x^2", "x^3"]);
        // x^3 appears during completion, so membership must hold…
        let f = r.parse("x^3").unwrap();
        assert!(normal_form(&r, &f, basis.elements()).is_zero());
        // …while x^2 is not in the ideal (it is a standard monomial).
        let g = r.parse("x^2").unwrap();
        assert!(!normal_form(&r, &g, basis.elements()).is_zero());
    }

    #[test]
    fn weighted_homogeneous_gb() {
        // k[a:2, b:3] / cusp relation: basis of the principal ideal is itself.
        let r = PolyRing::new(
            FieldSpec::rationals(),
            vec![("a".to_string(), 2), ("b".to_string(), 3)],
        )
        .unwrap();
        let basis = gb(&r, &["b^2 - a^3"]);
        let rendered: Vec<_> = basis.elements().iter().map(|f| r.render(f)).collect();
        assert_eq!(rendered, vec!["b^2 - a^3"]);
    }
}
