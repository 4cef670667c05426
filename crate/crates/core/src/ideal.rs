//! Homogeneous ideals in a presented ring, with the full lattice of
//! operations: sum, product, power, intersection, colon, membership,
//! containment, and equality.
//!
//! Every ideal caches the reduced Gröbner basis of (its generators) + Q in
//! the ambient ring; since reduced bases are canonical, ideal equality is
//! literal equality of those bases.  Intersections are computed by the
//! classical one-auxiliary-variable trick `I ∩ J = (t·I + (1-t)·J) ∩ k[x]`
//! with `t` given weight 0, which keeps all generators homogeneous and so
//! preserves degree-truncation soundness.  Colons reduce to intersections:
//! `(I :_R g)` is computed in the ambient ring as `((I + Q) ∩ (g)) / g`,
//! where the division is exact because the ambient ring is a domain.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::groebner::{buchberger, normal_form, GroebnerBasis};
use crate::linalg;
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::PresentedRing;
use crate::{EngineError, Result};

/// A homogeneous ideal of a [`PresentedRing`], held as normalized generators
/// plus a lazily computed reduced Gröbner basis of `gens + Q`.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<PresentedRing>,
    gens: Vec<Polynomial>,
    gb: OnceBox<crate::Result<GroebnerBasis>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceBox::new();
        if let Some(v) = self.gb.get() {
            let _ = gb.set(Box::new(v.clone()));
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl Ideal {
    /// Normalizes generators (normal form mod `Q`, drop zeros, dedupe) and
    /// checks homogeneity.
    pub fn new(ring: Arc<PresentedRing>, gens: Vec<Polynomial>) -> Result<Self> {
        let ideal = Ideal::new_affine(ring, gens);
        for g in &ideal.gens {
            if !ideal.ring.ambient().is_homogeneous(g) {
                return Err(EngineError::NotHomogeneous(alloc::format!(
                    "ideal generator {} is not weighted-homogeneous",
                    ideal.ring.ambient().render(g)
                )));
            }
        }
        Ok(ideal)
    }

    /// Like [`Ideal::new`], but admits inhomogeneous generators such as the
    /// reduction witnesses `x + (higher-degree noise)`.  Everything backed by
    /// Gröbner bases — membership, products, colons, reduction numbers,
    /// `is_m_primary` — stays exact for these ideals because the monomial
    /// order is global.  The graded bookkeeping (degree pieces, truncated
    /// intersections, series dimensions) only makes sense for the
    /// homogeneous constructors and must not be used on affine ideals.
    pub fn new_affine(ring: Arc<PresentedRing>, gens: Vec<Polynomial>) -> Self {
        let mut clean: Vec<Polynomial> = Vec::new();
        for f in gens {
            let nf = ring.nf(&f);
            if nf.is_zero() {
                continue;
            }
            if !clean.contains(&nf) {
                clean.push(nf);
            }
        }
        Ideal {
            ring,
            gens: clean,
            gb: OnceBox::new(),
        }
    }

    pub fn zero(ring: Arc<PresentedRing>) -> Self {
        Ideal {
            ring,
            gens: Vec::new(),
            gb: OnceBox::new(),
        }
    }

    pub fn unit(ring: Arc<PresentedRing>) -> Result<Self> {
        let one = ring.ambient().one_poly();
        Ideal::new(ring, alloc::vec![one])
    }

    /// The irrelevant maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: Arc<PresentedRing>) -> Result<Self> {
        let vars: Vec<Polynomial> = (0..ring.nvars())
            .map(|i| ring.ambient().var_poly(i))
            .collect();
        Ideal::new(ring, vars)
    }

    /// Parses each generator in the ring's variables.
    pub fn parse(ring: Arc<PresentedRing>, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| ring.ambient().parse(s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    /// The ideal generated by the full graded piece `[R]_n` (all standard
    /// monomials of weighted degree `n`).  Errors if the piece is zero.
    pub fn equal_degree(ring: Arc<PresentedRing>, n: u64) -> Result<Self> {
        ring.ensure_nonzero()?;
        let basis = ring.piece_basis(n);
        if basis.is_empty() {
            return Err(EngineError::EmptyDegreePiece { degree: n });
        }
        Ideal::new(ring, basis)
    }

    /// The truncation ideal `R_{>=n}`: generated by the graded pieces in the
    /// degree window `[n, n + max(weights))`, pruned by divisibility.
    pub fn truncation(ring: Arc<PresentedRing>, n: u64) -> Result<Self> {
        ring.ensure_nonzero()?;
        let wmax = ring.weights().iter().copied().max().unwrap_or(1);
        let mut monos = Vec::new();
        for d in n..n + wmax {
            monos.extend(ring.piece_monomials(d));
        }
        // Drop generators divisible by an earlier one (window elements can
        // be multiples of lower-degree window elements).
        let mut kept: Vec<crate::monomial::Monomial> = Vec::new();
        for m in monos {
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        let gens: Vec<Polynomial> = kept
            .into_iter()
            .map(|m| ring.ambient().monomial_poly(m))
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<PresentedRing> {
        &self.ring
    }

    /// Normalized generators (reduced mod `Q`, nonzero, deduplicated).
    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(EngineError::RingMismatch(
                "ideal operands live in different rings".to_string(),
            ))
        }
    }

    /// Reduced Gröbner basis of `gens + Q` in the ambient ring (computed
    /// once, shared thereafter).
    pub fn gb(&self) -> Result<&GroebnerBasis> {
        if self.gb.get().is_none() {
            let mut input = self.gens.clone();
            input.extend_from_slice(self.ring.q_basis().elements());
            let computed = buchberger(self.ring.ambient(), &input, self.ring.budget());
            let _ = self.gb.set(Box::new(computed));
        }
        self.gb
            .get()
            .expect("just set")
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Membership test `f ∈ I` (as elements of `R`).
    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        let gb = self.gb()?;
        let nf = normal_form(self.ring.ambient(), f, gb.elements());
        Ok(nf.is_zero())
    }

    /// Containment `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        for g in &other.gens {
            if !self.contains_poly(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals of `R` (compares canonical reduced bases).
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gb()?.elements() == other.gb()?.elements())
    }

    /// True iff `I = (0)` in `R`.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True iff `I = R`.
    pub fn is_unit(&self) -> Result<bool> {
        Ok(self
            .gb()?
            .elements()
            .iter()
            .any(|f| f.leading_monomial().is_some_and(crate::monomial::Monomial::is_one)))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal::new_affine(self.ring.clone(), gens))
    }

    /// Product `I·J`, with same-degree linear pruning of the generator list.
    pub fn multiply(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let ambient = self.ring.ambient();
        let mut products = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                let p = self.ring.nf(&ambient.mul(f, g));
                if !p.is_zero() {
                    products.push(p);
                }
            }
        }
        let pruned = prune_same_degree(&self.ring, products)?;
        Ok(Ideal::new_affine(self.ring.clone(), pruned))
    }

    /// `I^n`; `I^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Result<Ideal> {
        if n == 0 {
            return Ideal::unit(self.ring.clone());
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Intersection `I ∩ J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.intersect_truncated(other, None)
    }

    /// Intersection with an optional degree truncation for the internal
    /// elimination.  Sound whenever the caller knows every minimal generator
    /// of the result has degree ≤ `truncate_at` (e.g. both operands contain
    /// `R_{>=k}` with `k + max(weights) ≤ truncate_at`); the returned ideal
    /// then equals the true intersection.
    pub fn intersect_truncated(&self, other: &Ideal, truncate_at: Option<u64>) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut a = self.gens.clone();
        a.extend_from_slice(self.ring.q_basis().elements());
        let mut b = other.gens.clone();
        b.extend_from_slice(self.ring.q_basis().elements());
        let section = ambient_intersection(&self.ring, &a, &b, truncate_at)?;
        Ok(Ideal::new_affine(self.ring.clone(), section))
    }

    /// Colon ideal `(I : J) = {f : f·J ⊆ I}`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if other.is_zero() {
            // Everything multiplies (0) into I.
            return Ideal::unit(self.ring.clone());
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let single = self.colon_single(g)?;
            acc = Some(match acc {
                None => single,
                Some(prev) => prev.intersect(&single)?,
            });
        }
        Ok(acc.expect("nonzero ideal has generators"))
    }

    /// `(I : g)` for one nonzero `g`, via the ambient ring:
    /// `((I+Q) ∩ (g)_ambient) / g`.
    fn colon_single(&self, g: &Polynomial) -> Result<Ideal> {
        let ambient = self.ring.ambient();
        let mut a = self.gens.clone();
        a.extend_from_slice(self.ring.q_basis().elements());
        let inter = ambient_intersection(&self.ring, &a, core::slice::from_ref(g), None)?;
        let mut out = Vec::new();
        for h in inter {
            match ambient.exact_div(&h, g) {
                Some(q) => out.push(q),
                // The ambient ring is a domain: every element of ((I+Q) ∩ (g))
                // is exactly divisible by g.  Reaching this branch means the
                // elimination returned something outside (g) — a bug.
                None => {
                    return Err(EngineError::Internal(
                        "ambient colon: elimination output not divisible by g".to_string(),
                    ))
                }
            }
        }
        Ok(Ideal::new_affine(self.ring.clone(), out))
    }

    /// m-primary test: the quotient `R/I` is finite-dimensional iff every
    /// variable has a pure power among the lead monomials of `gens + Q`.
    pub fn is_m_primary(&self) -> Result<bool> {
        let gb = self.gb()?;
        let leads = gb.leading_monomials();
        let n = self.ring.nvars();
        Ok((0..n).all(|i| {
            leads.iter().any(|m| {
                m.exponents()[i] > 0
                    && m.exponents()
                        .iter()
                        .enumerate()
                        .all(|(j, &e)| j == i || e == 0)
            })
        }))
    }

    /// All generators share one degree?  Returns it if so (zero ideal: None).
    pub fn common_gen_degree(&self) -> Option<u64> {
        let first = self.ring.ambient().degree(self.gens.first()?)?;
        self.gens
            .iter()
            .all(|g| self.ring.ambient().degree(g) == Some(first))
            .then_some(first)
    }

    /// Dimension of the graded piece `[I]_d` (exact, via the lead ideal).
    pub fn piece_dim(&self, d: u64) -> Result<usize> {
        let leads = self.gb()?.leading_monomials();
        let total = self.ring.ambient().monomials_of_degree(d);
        let q_leads = self.ring.q_basis().leading_monomials();
        // dim [I]_d = #(monomials reducible by gb) - #(reducible by Q alone)
        //           = dim [ambient ideal piece] - dim [Q piece], both counted
        //             inside the ambient degree-d piece.
        let in_ideal = total
            .iter()
            .filter(|m| leads.iter().any(|l| l.divides(m)))
            .count();
        let in_q = total
            .iter()
            .filter(|m| q_leads.iter().any(|l| l.divides(m)))
            .count();
        Ok(in_ideal - in_q)
    }

    /// A k-basis of `[I]_d`, as normal-form polynomials.
    pub fn piece_basis(&self, d: u64) -> Result<Vec<Polynomial>> {
        let ambient = self.ring.ambient();
        let piece = self.ring.piece_monomials(d);
        let mut candidates: Vec<Polynomial> = Vec::new();
        for g in self.gb()?.elements() {
            let Some(gdeg) = ambient.degree(g) else { continue };
            if gdeg > d {
                continue;
            }
            for m in ambient.monomials_of_degree(d - gdeg) {
                let p = self.ring.nf(&ambient.mul_term(g, &ambient.field().one(), &m));
                if !p.is_zero() {
                    candidates.push(p);
                }
            }
        }
        let rows: Vec<Vec<crate::field::Scalar>> = candidates
            .iter()
            .map(|p| {
                self.ring
                    .piece_coordinates(p, &piece)
                    .expect("normal form of a degree-d form lies in the piece")
            })
            .collect();
        let kept = linalg::independent_rows(self.ring.field(), &rows);
        Ok(kept.into_iter().map(|i| candidates[i].clone()).collect())
    }

    /// Per-degree dimension table of `I` over `lo..=hi`.
    pub fn dimension_table(&self, lo: u64, hi: u64) -> Result<Vec<(u64, usize)>> {
        (lo..=hi).map(|d| Ok((d, self.piece_dim(d)?))).collect()
    }
}

/// Same-degree linear pruning: groups homogeneous polynomials by degree and
/// keeps a spanning subset per degree.  The ideal generated is unchanged.
fn prune_same_degree(ring: &Arc<PresentedRing>, polys: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let ambient = ring.ambient();
    let mut by_degree: BTreeMap<u64, Vec<Polynomial>> = BTreeMap::new();
    let mut out = Vec::new();
    for p in polys {
        match ambient.homogeneous_degree(&p) {
            (true, Some(d)) => by_degree.entry(d).or_default().push(p),
            (true, None) => {
                return Err(EngineError::Internal("zero polynomial in prune".to_string()))
            }
            // Inhomogeneous products (affine ideals) skip the linear diet;
            // pruning is an optimization, never a requirement.
            (false, _) => out.push(p),
        }
    }
    for (d, group) in by_degree {
        if group.len() == 1 {
            out.extend(group);
            continue;
        }
        let piece = ring.piece_monomials(d);
        let rows: Vec<Vec<crate::field::Scalar>> = group
            .iter()
            .map(|p| {
                ring.piece_coordinates(p, &piece)
                    .expect("normal forms live in the standard basis")
            })
            .collect();
        for i in linalg::independent_rows(ring.field(), &rows) {
            out.push(group[i].clone());
        }
    }
    Ok(out)
}

/// Intersection of two ambient ideals (given by generator lists) via the
/// weight-0 auxiliary variable: returns generators of `(A) ∩ (B)` in the
/// ambient ring.  With `truncate_at` set, the internal Gröbner run discards
/// pairs above that degree; see [`Ideal::intersect_truncated`] for when this
/// is sound.
fn ambient_intersection(
    ring: &Arc<PresentedRing>,
    a: &[Polynomial],
    b: &[Polynomial],
    truncate_at: Option<u64>,
) -> Result<Vec<Polynomial>> {
    let ambient = ring.ambient();
    let tname = ambient.fresh_name("t");
    let mut vars: Vec<(alloc::string::String, u64)> = alloc::vec![(tname, 0)];
    vars.extend(
        ambient
            .var_names()
            .iter()
            .cloned()
            .zip(ambient.weights().iter().copied()),
    );
    let aux = PolyRing::with_order(
        ambient.field().clone(),
        vars,
        MonomialOrder::Block { front: 1 },
    )?;
    let shift: Vec<usize> = (1..=ambient.nvars()).collect();
    let t = aux.var_poly(0);
    let one_minus_t = aux.sub(&aux.one_poly(), &t);
    let mut gens = Vec::new();
    for f in a {
        gens.push(aux.mul(&t, &ambient.map_vars(f, &aux, &shift)));
    }
    for g in b {
        gens.push(aux.mul(&one_minus_t, &ambient.map_vars(g, &aux, &shift)));
    }
    let mut budget = ring.budget().clone();
    budget.truncate_at = truncate_at;
    let gb = buchberger(&aux, &gens, &budget)?;
    let kept = gb.front_free_elements(&aux, 1);
    Ok(kept
        .into_iter()
        .map(|f| aux.drop_front(&f, 1, ambient))
        .collect())
}
