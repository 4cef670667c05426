//! Presented rings `R = k[x_1..x_n]/Q` with positive weights and a
//! homogeneous defining ideal.
//!
//! The reduced Gröbner basis of `Q` is computed eagerly at construction;
//! every element of `R` then has a canonical representative (its normal form
//! mod `Q`), and the standard monomials give canonical bases of the graded
//! pieces.  A ring also carries the Gröbner budget used for everything
//! derived from it, and an optional provenance string ("veronese(...)",
//! "semigroup(...)") for reports.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::field::FieldSpec;
use crate::groebner::{buchberger, normal_form, GbBudget, GroebnerBasis};
use crate::hilbert::HilbertSeries;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::{EngineError, Result};

/// A weighted-graded quotient ring presented by generators of its defining
/// ideal.  Construction validates that weights are positive and relations
/// homogeneous, and precomputes the reduced basis of `Q`.
#[derive(Debug)]
pub struct PresentedRing {
    ambient: Arc<PolyRing>,
    relations: Vec<Polynomial>,
    q_basis: GroebnerBasis,
    budget: GbBudget,
    provenance: Option<String>,
    series: OnceBox<HilbertSeries>,
}

impl PartialEq for PresentedRing {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.q_basis.elements() == other.q_basis.elements()
    }
}
impl Eq for PresentedRing {}

impl Clone for PresentedRing {
    fn clone(&self) -> Self {
        let series = OnceBox::new();
        if let Some(s) = self.series.get() {
            let _ = series.set(alloc::boxed::Box::new(s.clone()));
        }
        PresentedRing {
            ambient: self.ambient.clone(),
            relations: self.relations.clone(),
            q_basis: self.q_basis.clone(),
            budget: self.budget.clone(),
            provenance: self.provenance.clone(),
            series,
        }
    }
}

impl PresentedRing {
    /// Quotient of `k[vars]` by the ideal generated by `relations`.
    pub fn new(
        field: FieldSpec,
        vars: Vec<(String, u64)>,
        relations: Vec<Polynomial>,
    ) -> Result<Arc<Self>> {
        Self::with_budget(field, vars, relations, GbBudget::default(), None)
    }

    pub fn with_budget(
        field: FieldSpec,
        vars: Vec<(String, u64)>,
        relations: Vec<Polynomial>,
        budget: GbBudget,
        provenance: Option<String>,
    ) -> Result<Arc<Self>> {
        for (name, w) in &vars {
            if *w == 0 {
                return Err(EngineError::BadWeights(alloc::format!(
                    "variable {name:?} has weight 0; weights must be positive"
                )));
            }
        }
        let ambient = PolyRing::new(field, vars)?;
        let mut clean: Vec<Polynomial> = Vec::new();
        for f in relations {
            if f.is_zero() {
                continue;
            }
            if !ambient.is_homogeneous(&f) {
                return Err(EngineError::NotHomogeneous(alloc::format!(
                    "relation {} is not weighted-homogeneous",
                    ambient.render(&f)
                )));
            }
            clean.push(f);
        }
        let q_basis = buchberger(&ambient, &clean, &budget)?;
        Ok(Arc::new(PresentedRing {
            ambient,
            relations: clean,
            q_basis,
            budget,
            provenance,
            series: OnceBox::new(),
        }))
    }

    /// Convenience: a plain polynomial ring (no relations).
    pub fn polynomial_ring(field: FieldSpec, vars: Vec<(String, u64)>) -> Result<Arc<Self>> {
        Self::new(field, vars, Vec::new())
    }

    /// Parses variable declarations and relation strings:
    /// `PresentedRing::parse(field, &[("a", 2), ("b", 3)], &["b^2 - a^3"])`.
    pub fn parse_ring(
        field: FieldSpec,
        vars: &[(&str, u64)],
        relations: &[&str],
    ) -> Result<Arc<Self>> {
        let var_vec: Vec<(String, u64)> = vars
            .iter()
            .map(|(n, w)| (n.to_string(), *w))
            .collect();
        let ambient = PolyRing::new(field.clone(), var_vec.clone())?;
        let rels = relations
            .iter()
            .map(|s| ambient.parse(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, var_vec, rels)
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        &self.ambient
    }

    pub fn field(&self) -> &FieldSpec {
        self.ambient.field()
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    pub fn weights(&self) -> &[u64] {
        self.ambient.weights()
    }

    pub fn var_names(&self) -> &[String] {
        self.ambient.var_names()
    }

    /// The relation generators as given (after dropping zeros).
    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    /// Reduced Gröbner basis of the defining ideal.
    pub fn q_basis(&self) -> &GroebnerBasis {
        &self.q_basis
    }

    pub fn budget(&self) -> &GbBudget {
        &self.budget
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub(crate) fn series_cache(&self) -> &OnceBox<HilbertSeries> {
        &self.series
    }

    /// Canonical representative: full normal form modulo `Q`.
    pub fn nf(&self, f: &Polynomial) -> Polynomial {
        normal_form(&self.ambient, f, self.q_basis.elements())
    }

    /// True iff `1 ∈ Q`.
    pub fn is_zero_ring(&self) -> bool {
        self.q_basis
            .elements()
            .iter()
            .any(|f| f.leading_monomial().is_some_and(Monomial::is_one))
    }

    /// Fails with [`EngineError::ZeroRing`] on the zero ring; invariant
    /// queries call this first.
    pub fn ensure_nonzero(&self) -> Result<()> {
        if self.is_zero_ring() {
            Err(EngineError::ZeroRing)
        } else {
            Ok(())
        }
    }

    /// True when all weights are 1.
    pub fn is_standard_graded(&self) -> bool {
        self.weights().iter().all(|&w| w == 1)
    }

    /// Standard monomials of weighted degree `d`: the canonical k-basis of
    /// the graded piece `[R]_d`, sorted descending.
    pub fn piece_monomials(&self, d: u64) -> Vec<Monomial> {
        let leads = self.q_basis.leading_monomials();
        self.ambient
            .monomials_of_degree(d)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect()
    }

    /// The graded piece as polynomials (monic standard monomials).
    pub fn piece_basis(&self, d: u64) -> Vec<Polynomial> {
        self.piece_monomials(d)
            .into_iter()
            .map(|m| self.ambient.monomial_poly(m))
            .collect()
    }

    /// Expresses a normal-form polynomial in the standard-monomial basis of
    /// one graded piece.  Returns `None` if some term falls outside the
    /// piece (i.e. `f` is not homogeneous of degree `d` after reduction).
    pub fn piece_coordinates(
        &self,
        f: &Polynomial,
        piece: &[Monomial],
    ) -> Option<Vec<crate::field::Scalar>> {
        let field = self.field();
        let mut coords = alloc::vec![field.zero(); piece.len()];
        for t in f.terms() {
            let idx = piece.iter().position(|m| m == &t.mono)?;
            coords[idx] = field.add(&coords[idx], &t.coeff);
        }
        Some(coords)
    }

    /// Human-readable description, e.g. `F_32003[a:2,b:3]/(b^2 - a^3)`.
    pub fn describe(&self) -> String {
        let field = match self.field() {
            FieldSpec::Prime(p) => alloc::format!("F_{p}"),
            FieldSpec::Rationals => "QQ".to_string(),
        };
        let vars: Vec<String> = self
            .var_names()
            .iter()
            .zip(self.weights())
            .map(|(n, &w)| {
                if w == 1 {
                    n.clone()
                } else {
                    alloc::format!("{n}:{w}")
                }
            })
            .collect();
        let mut out = alloc::format!("{field}[{}]", vars.join(","));
        if !self.relations.is_empty() {
            let rels: Vec<String> = self
                .relations
                .iter()
                .map(|f| self.ambient.render(f))
                .collect();
            out.push_str(&alloc::format!("/({})", rels.join(", ")));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cusp() -> Arc<PresentedRing> {
        PresentedRing::parse_ring(
            FieldSpec::rationals(),
            &[("a", 2), ("b", 3)],
            &["b^2 - a^3"],
        )
        .unwrap()
    }

    #[test]
    fn rejects_zero_weights_and_inhomogeneous_relations() {
        assert!(matches!(
            PresentedRing::parse_ring(FieldSpec::rationals(), &[("x", 0)], &[]),
            Err(EngineError::BadWeights(_))
        ));
        assert!(matches!(
            PresentedRing::parse_ring(FieldSpec::rationals(), &[("x", 1), ("y", 1)], &["x^2 - y"]),
            Err(EngineError::NotHomogeneous(_))
        ));
        // Weighted homogeneity: x^2 - y IS homogeneous when weight(y) = 2.
        assert!(PresentedRing::parse_ring(
            FieldSpec::rationals(),
            &[("x", 1), ("y", 2)],
            &["x^2 - y"]
        )
        .is_ok());
    }

    #[test]
    fn normal_form_mod_relations() {
        let r = cusp();
        let f = r.ambient().parse("b^2").unwrap();
        assert_eq!(r.ambient().render(&r.nf(&f)), "a^3");
        let g = r.ambient().parse("b^3 - a^3*b").unwrap();
        assert!(r.nf(&g).is_zero());
    }

    #[test]
    fn zero_ring_detection() {
        let z = PresentedRing::parse_ring(FieldSpec::rationals(), &[("x", 1)], &["x", "x^2"]);
        // (x, x^2) is proper, not the unit ideal — not a zero ring.
        assert!(!z.unwrap().is_zero_ring());
        let r = cusp();
        assert!(!r.is_zero_ring());
        assert!(r.ensure_nonzero().is_ok());
    }

    #[test]
    fn graded_pieces_of_cusp() {
        let r = cusp();
        // Numerical semigroup <2,3>: dims 1,0,1,1,1,1,2,... wait: degree 6
        // has a^3 and b^2 but b^2 = a^3 in R, so dimension 1 until the
        // monomials diverge... every piece of k[t^2,t^3] is 1-dimensional
        // except degree 1, which is empty.
        assert_eq!(r.piece_monomials(0).len(), 1);
        assert_eq!(r.piece_monomials(1).len(), 0);
        for d in 2..=12 {
            assert_eq!(r.piece_monomials(d).len(), 1, "degree {d}");
        }
        // Degree 6: the standard monomial is a^3 (b^2 is the lead of the relation).
        let m6 = r.piece_monomials(6);
        assert_eq!(r.ambient().render_monomial(&m6[0]), "a^3");
        // Degree 7: a^2 b.
        let m7 = r.piece_monomials(7);
        assert_eq!(r.ambient().render_monomial(&m7[0]), "a^2*b");
    }

    #[test]
    fn describe_round_trips_weights() {
        let r = cusp();
        assert_eq!(r.describe(), "QQ[a:2,b:3]/(b^2 - a^3)");
        let p = PresentedRing::parse_ring(
            FieldSpec::prime(32003).unwrap(),
            &[("x", 1), ("y", 1)],
            &[],
        )
        .unwrap();
        assert_eq!(p.describe(), "F_32003[x,y]");
    }

    #[test]
    fn piece_coordinates_in_standard_basis() {
        let r = cusp();
        let piece = r.piece_monomials(6);
        let f = r.nf(&r.ambient().parse("b^2 + a^3").unwrap());
        let coords = r.piece_coordinates(&f, &piece).unwrap();
        assert_eq!(coords.len(), 1);
        assert_eq!(coords[0], r.field().from_i64(2));
    }
}
