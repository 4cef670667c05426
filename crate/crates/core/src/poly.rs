//! Polynomials with context-carrying arithmetic.
//!
//! A [`Polynomial`] is a plain list of terms held in strictly descending
//! monomial order; it knows nothing about its ring.  All arithmetic goes
//! through a [`PolyRing`], which owns the field, the variable names, the
//! weight vector and the monomial order.  This keeps the data types small and
//! makes the ring an explicit argument everywhere a convention matters.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::EngineError;
use crate::field::{FieldSpec, Scalar};
use crate::monomial::{Exponent, Monomial, MonomialOrder};
use crate::Result;

/// One coefficient-monomial pair.  The coefficient is never zero in a
/// normalized polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub mono: Monomial,
}

/// A polynomial: terms strictly descending under the owning ring's order.
/// The zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A weighted polynomial ring `k[x_1..x_n]` with a fixed monomial order.
///
/// Rings are cheap to clone and compared structurally; two rings are "the
/// same" exactly when field, variables, weights and order all agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    field: FieldSpec,
    vars: Vec<String>,
    weights: Vec<u64>,
    order: MonomialOrder,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    /// A ring under the default graded order.  Weights may be zero here —
    /// zero weights are reserved for internal elimination variables; the
    /// user-facing [`crate::ring::PresentedRing`] enforces positivity.
    pub fn new(field: FieldSpec, vars: Vec<(String, u64)>) -> Result<Arc<Self>> {
        Self::with_order(field, vars, MonomialOrder::Graded)
    }

    pub fn with_order(
        field: FieldSpec,
        vars: Vec<(String, u64)>,
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        if vars.is_empty() {
            return Err(EngineError::BadConstruction(
                "a polynomial ring needs at least one variable".into(),
            ));
        }
        for (name, _) in &vars {
            if !valid_identifier(name) {
                return Err(EngineError::BadConstruction(alloc::format!(
                    "invalid variable name {name:?}"
                )));
            }
        }
        for i in 0..vars.len() {
            for j in i + 1..vars.len() {
                if vars[i].0 == vars[j].0 {
                    return Err(EngineError::BadConstruction(alloc::format!(
                        "duplicate variable name {:?}",
                        vars[i].0
                    )));
                }
            }
        }
        let (names, weights) = vars.into_iter().unzip();
        Ok(Arc::new(PolyRing {
            field,
            vars: names,
            weights,
            order,
        }))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// A variable name not already used in this ring: `base`, `base_`, ...
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = String::from(base);
        while self.vars.contains(&name) {
            name.push('_');
        }
        name
    }

    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, &self.weights)
    }

    // ----- constructors for polynomials -----

    pub fn zero_poly(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one_poly(&self) -> Polynomial {
        Polynomial {
            terms: alloc::vec![Term {
                coeff: self.field.one(),
                mono: Monomial::one(self.nvars()),
            }],
        }
    }

    pub fn monomial_poly(&self, mono: Monomial) -> Polynomial {
        debug_assert_eq!(mono.nvars(), self.nvars());
        Polynomial {
            terms: alloc::vec![Term {
                coeff: self.field.one(),
                mono,
            }],
        }
    }

    pub fn var_poly(&self, i: usize) -> Polynomial {
        self.monomial_poly(Monomial::variable(i, &self.weights))
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: alloc::vec![Term {
                    coeff: c,
                    mono: Monomial::one(self.nvars()),
                }],
            }
        }
    }

    /// Normalizes an arbitrary bag of terms: sorts descending, merges equal
    /// monomials, drops zero coefficients.
    pub fn from_terms(&self, mut terms: Vec<Term>) -> Polynomial {
        terms.sort_by(|a, b| self.cmp_mono(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = self.field.add(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial { terms: out }
    }

    // ----- arithmetic -----

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        // Merge two sorted term lists.
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            match self.cmp_mono(&f.terms[i].mono, &g.terms[j].mono) {
                Ordering::Greater => {
                    out.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(g.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(&f.terms[i].coeff, &g.terms[j].coeff);
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mono: f.terms[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&f.terms[i..]);
        out.extend_from_slice(&g.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.neg(&t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add(f, &self.neg(g))
    }

    /// Multiplies by a single term (no re-sort needed: term order is
    /// multiplicative).
    pub fn mul_term(&self, f: &Polynomial, coeff: &Scalar, mono: &Monomial) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(&t.coeff, coeff),
                    mono: t.mono.mul(mono),
                })
                .collect(),
        }
    }

    pub fn scale(&self, f: &Polynomial, c: &Scalar) -> Polynomial {
        self.mul_term(f, c, &Monomial::one(self.nvars()))
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.is_zero() || g.is_zero() {
            return Polynomial::zero();
        }
        let mut terms = Vec::with_capacity(f.terms.len() * g.terms.len());
        for a in &f.terms {
            for b in &g.terms {
                terms.push(Term {
                    coeff: self.field.mul(&a.coeff, &b.coeff),
                    mono: a.mono.mul(&b.mono),
                });
            }
        }
        self.from_terms(terms)
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading_term() {
            None => Polynomial::zero(),
            Some(lt) if lt.coeff.is_one() => f.clone(),
            Some(lt) => {
                let inv = self
                    .field
                    .inv(&lt.coeff)
                    .expect("leading coefficient is nonzero");
                self.scale(f, &inv)
            }
        }
    }

    /// Exact division `f / g` in the polynomial ring; returns `None` when `g`
    /// does not divide `f` exactly.  Uses the division algorithm with `g`
    /// alone: the quotient exists iff the remainder vanishes, independent of
    /// the monomial order.
    pub fn exact_div(&self, f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
        if g.is_zero() {
            return None;
        }
        let glt = g.leading_term().expect("nonzero");
        let mut rem = f.clone();
        let mut quot: Vec<Term> = Vec::new();
        while let Some(lt) = rem.leading_term() {
            if !glt.mono.divides(&lt.mono) {
                return None;
            }
            let mono = glt.mono.divide_into(&lt.mono);
            let coeff = self
                .field
                .div(&lt.coeff, &glt.coeff)
                .expect("leading coefficient is nonzero");
            rem = self.sub(&rem, &self.mul_term(g, &coeff, &mono));
            quot.push(Term { coeff, mono });
        }
        Some(self.from_terms(quot))
    }

    // ----- grading -----

    /// Weighted degree of the highest term, `None` for zero.
    pub fn degree(&self, f: &Polynomial) -> Option<u64> {
        // Terms are sorted by a degree-first order, so the first term has
        // maximal weighted degree.
        f.terms.first().map(|t| t.mono.degree())
    }

    /// True when all terms share one weighted degree (zero counts as
    /// homogeneous); returns the degree alongside.
    pub fn homogeneous_degree(&self, f: &Polynomial) -> (bool, Option<u64>) {
        match f.terms.first() {
            None => (true, None),
            Some(first) => {
                let d = first.mono.degree();
                let homog = f.terms.iter().all(|t| t.mono.degree() == d);
                (homog, Some(d))
            }
        }
    }

    pub fn is_homogeneous(&self, f: &Polynomial) -> bool {
        self.homogeneous_degree(f).0
    }

    /// The degree-`d` part of `f`.
    pub fn graded_component(&self, f: &Polynomial, d: u64) -> Polynomial {
        Polynomial {
            terms: f
                .terms
                .iter()
                .filter(|t| t.mono.degree() == d)
                .cloned()
                .collect(),
        }
    }

    /// All monomials of weighted degree exactly `d`, sorted descending.
    /// This enumerates the graded piece of the ambient polynomial ring.
    pub fn monomials_of_degree(&self, d: u64) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = alloc::vec![0 as Exponent; self.nvars()];
        self.enumerate_rec(0, d, &mut exps, &mut out);
        out.sort_by(|a, b| self.cmp_mono(b, a));
        out
    }

    fn enumerate_rec(&self, var: usize, remaining: u64, exps: &mut Vec<Exponent>, out: &mut Vec<Monomial>) {
        if var == self.nvars() {
            if remaining == 0 {
                out.push(Monomial::new(exps.clone(), &self.weights));
            }
            return;
        }
        let w = self.weights[var];
        assert!(w > 0, "cannot enumerate graded pieces with zero weights");
        let max = remaining / w;
        assert!(max <= Exponent::MAX as u64, "degree too large for exponent type");
        for e in 0..=max {
            exps[var] = e as Exponent;
            self.enumerate_rec(var + 1, remaining - e * w, exps, out);
        }
        exps[var] = 0;
    }

    // ----- variable embeddings between rings -----

    /// Transports `f` into `target`, sending variable `i` of `self` to
    /// variable `index_map[i]` of `target`.  Degrees are recomputed with the
    /// target weights and terms re-sorted under the target order.
    pub fn map_vars(&self, f: &Polynomial, target: &PolyRing, index_map: &[usize]) -> Polynomial {
        assert_eq!(index_map.len(), self.nvars());
        let terms = f
            .terms
            .iter()
            .map(|t| {
                let mut exps = alloc::vec![0 as Exponent; target.nvars()];
                for (i, &e) in t.mono.exponents().iter().enumerate() {
                    exps[index_map[i]] = e;
                }
                Term {
                    coeff: t.coeff.clone(),
                    mono: Monomial::new(exps, &target.weights),
                }
            })
            .collect();
        target.from_terms(terms)
    }

    /// True when `f` does not involve any of the first `front` variables.
    pub fn free_of_front(&self, f: &Polynomial, front: usize) -> bool {
        f.terms
            .iter()
            .all(|t| t.mono.exponents()[..front].iter().all(|&e| e == 0))
    }

    /// Removes the first `front` variables from a polynomial that does not
    /// use them, transporting it into `target` (whose variables must match
    /// the remaining ones positionally).
    pub fn drop_front(&self, f: &Polynomial, front: usize, target: &PolyRing) -> Polynomial {
        assert!(self.free_of_front(f, front), "polynomial uses eliminated variables");
        assert_eq!(self.nvars() - front, target.nvars());
        let terms = f
            .terms
            .iter()
            .map(|t| {
                let exps: Vec<Exponent> = t.mono.exponents()[front..].to_vec();
                Term {
                    coeff: t.coeff.clone(),
                    mono: Monomial::new(exps, &target.weights),
                }
            })
            .collect();
        target.from_terms(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn ring2() -> Arc<PolyRing> {
        PolyRing::new(
            FieldSpec::rationals(),
            vec![("x".to_string(), 1), ("y".to_string(), 1)],
        )
        .unwrap()
    }

    fn weighted_ab() -> Arc<PolyRing> {
        PolyRing::new(
            FieldSpec::rationals(),
            vec![("a".to_string(), 2), ("b".to_string(), 3)],
        )
        .unwrap()
    }

    #[test]
    fn ring_validation() {
        assert!(PolyRing::new(FieldSpec::rationals(), vec![]).is_err());
        assert!(PolyRing::new(
            FieldSpec::rationals(),
            vec![("x".to_string(), 1), ("x".to_string(), 1)]
        )
        .is_err());
        assert!(PolyRing::new(FieldSpec::rationals(), vec![("2bad".to_string(), 1)]).is_err());
    }

    #[test]
    fn from_terms_normalizes() {
        let r = ring2();
        let x = Monomial::variable(0, r.weights());
        let f = r.from_terms(vec![
            Term {
                coeff: r.field().from_i64(2),
                mono: x.clone(),
            },
            Term {
                coeff: r.field().from_i64(-2),
                mono: x.clone(),
            },
        ]);
        assert!(f.is_zero());
    }

    #[test]
    fn leading_monomial_of_cusp_relation() {
        // b^2 - a^3 in k[a,b], weights (2,3): the leading monomial is b^2.
        let r = weighted_ab();
        let a3 = Monomial::new(vec![3, 0], r.weights());
        let b2 = Monomial::new(vec![0, 2], r.weights());
        let f = r.from_terms(vec![
            Term {
                coeff: r.field().from_i64(-1),
                mono: a3,
            },
            Term {
                coeff: r.field().from_i64(1),
                mono: b2.clone(),
            },
        ]);
        assert_eq!(f.leading_monomial().unwrap(), &b2);
        assert!(r.is_homogeneous(&f));
        assert_eq!(r.degree(&f), Some(6));
    }

    #[test]
    fn arithmetic_identities() {
        let r = ring2();
        let x = r.var_poly(0);
        let y = r.var_poly(1);
        let f = r.add(&x, &y);
        let f2 = r.mul(&f, &f);
        // (x+y)^2 = x^2 + 2xy + y^2
        let expected = r.from_terms(vec![
            Term {
                coeff: r.field().one(),
                mono: Monomial::new(vec![2, 0], r.weights()),
            },
            Term {
                coeff: r.field().from_i64(2),
                mono: Monomial::new(vec![1, 1], r.weights()),
            },
            Term {
                coeff: r.field().one(),
                mono: Monomial::new(vec![0, 2], r.weights()),
            },
        ]);
        assert_eq!(f2, expected);
        assert!(r.sub(&f2, &expected).is_zero());
    }

    #[test]
    fn exact_division() {
        let r = ring2();
        let x = r.var_poly(0);
        let y = r.var_poly(1);
        let f = r.add(&x, &y);
        let g = r.sub(&x, &y);
        let prod = r.mul(&f, &g);
        assert_eq!(r.exact_div(&prod, &f).unwrap(), g);
        assert_eq!(r.exact_div(&prod, &g).unwrap(), f);
        // x^2 - y^2 is not divisible by x + 2y.
        let h = r.add(&x, &r.scale(&y, &r.field().from_i64(2)));
        assert!(r.exact_div(&prod, &h).is_none());
        assert!(r.exact_div(&f, &r.zero_poly()).is_none());
    }

    #[test]
    fn graded_pieces() {
        let r = weighted_ab();
        // Degree-6 monomials in k[a:2, b:3]: b^2 > a^3.
        let ms = r.monomials_of_degree(6);
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[0], Monomial::new(vec![0, 2], r.weights()));
        assert_eq!(ms[1], Monomial::new(vec![3, 0], r.weights()));
        // Degree 1 is empty: weights are 2 and 3.
        assert!(r.monomials_of_degree(1).is_empty());
        assert_eq!(r.monomials_of_degree(0).len(), 1);
    }

    #[test]
    fn monic_and_scale() {
        let r = ring2();
        let x = r.var_poly(0);
        let f = r.scale(&x, &r.field().from_i64(5));
        assert_eq!(r.monic(&f), x);
        assert!(r.monic(&r.zero_poly()).is_zero());
    }
}
