//! Corpus constructions: Veronese subrings, numerical semigroup rings,
//! Rees-algebra presentations, and random complete intersections.
//!
//! Everything here elaborates to a [`PresentedRing`]; the kernels of the
//! defining monomial/blowup maps are computed by elimination with a block
//! order (auxiliary variables in the front block, see
//! [`crate::monomial::MonomialOrder::Block`]).

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::derive_seed;
use crate::error::EngineError;
use crate::field::FieldSpec;
use crate::groebner::buchberger;
use crate::hilbert::{one_minus_t_pow, poly_mul, quotient_series};
use crate::ideal::Ideal;
use crate::monomial::{Exponent, Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use crate::ring::PresentedRing;
use crate::Result;

/// Retry budget for the generic-form searches in this module.
const CONSTRUCTION_ATTEMPTS: u32 = 20;

/// Prunes a homogeneous generating set down to a minimal one: processing by
/// ascending degree, a generator is dropped when it already lies in the
/// ideal of the kept ones (graded Nakayama makes the greedy choice minimal).
fn minimal_generators(ambient: &PolyRing, mut gens: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    gens.retain(|f| !f.is_zero());
    gens.sort_by(|f, g| {
        let df = ambient.degree(f).unwrap_or(0);
        let dg = ambient.degree(g).unwrap_or(0);
        df.cmp(&dg).then_with(|| {
            ambient.cmp_mono(
                f.leading_monomial().expect("nonzero"),
                g.leading_monomial().expect("nonzero"),
            )
        })
    });
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut kept_gb: Option<crate::groebner::GroebnerBasis> = None;
    for f in gens {
        let redundant = match &kept_gb {
            None => false,
            Some(gb) => crate::groebner::normal_form(ambient, &f, gb.elements()).is_zero(),
        };
        if !redundant {
            kept.push(f);
            kept_gb = Some(buchberger(ambient, &kept, &Default::default())?);
        }
    }
    Ok(kept)
}

// ----- Veronese subrings -----

/// The `n`-th Veronese subring of a standard-graded ring, re-graded so that
/// each new variable has weight 1.
///
/// One tag variable is introduced per standard monomial of degree `n`
/// (ascending order: `A` names the smallest), and the defining ideal is the
/// kernel of `tag ↦ monomial`, computed by eliminating the original
/// variables.
pub fn veronese(ring: &Arc<PresentedRing>, n: u64) -> Result<Arc<PresentedRing>> {
    ring.ensure_nonzero()?;
    if n == 0 {
        return Err(EngineError::BadConstruction(
            "veronese index must be at least 1".to_string(),
        ));
    }
    if !ring.is_standard_graded() {
        return Err(EngineError::Hypothesis(
            "veronese subrings are taken of standard-graded rings".to_string(),
        ));
    }
    if n == 1 {
        return Ok(ring.clone());
    }
    let ambient = ring.ambient();
    let mut basis = ring.piece_monomials(n);
    basis.sort_by(|a, b| ambient.cmp_mono(a, b));
    if basis.is_empty() {
        return Err(EngineError::EmptyDegreePiece { degree: n });
    }
    let tags = tag_names(ring, basis.len())?;

    // Elimination ring: originals (front block, to be eliminated) then tags
    // of weight n, so `tag - monomial` is homogeneous.
    let nx = ambient.nvars();
    let mut vars: Vec<(String, u64)> = ambient
        .var_names()
        .iter()
        .cloned()
        .zip(ambient.weights().iter().copied())
        .collect();
    vars.extend(tags.iter().map(|t| (t.clone(), n)));
    let aux = PolyRing::with_order(
        ambient.field().clone(),
        vars,
        MonomialOrder::Block { front: nx },
    )?;
    let identity: Vec<usize> = (0..nx).collect();
    let mut gens: Vec<Polynomial> = ring
        .relations()
        .iter()
        .map(|f| ambient.map_vars(f, &aux, &identity))
        .collect();
    for (i, m) in basis.iter().enumerate() {
        let mut exps = alloc::vec![0 as Exponent; aux.nvars()];
        exps[..nx].copy_from_slice(m.exponents());
        let mono = aux.monomial_poly(Monomial::new(exps, aux.weights()));
        gens.push(aux.sub(&aux.var_poly(nx + i), &mono));
    }
    let gb = buchberger(&aux, &gens, ring.budget())?;

    // Tag-only elements, re-graded: a relation whose terms have weighted
    // degree kn is a product of k tags in every term, hence homogeneous of
    // degree k once each tag has weight 1.
    let target_ambient = PolyRing::new(
        ambient.field().clone(),
        tags.iter().map(|t| (t.clone(), 1)).collect(),
    )?;
    let relations = minimal_generators(
        &target_ambient,
        gb.front_free_elements(&aux, nx)
            .into_iter()
            .map(|f| aux.drop_front(&f, nx, &target_ambient))
            .collect(),
    )?;
    PresentedRing::with_budget(
        ambient.field().clone(),
        tags.iter().map(|t| (t.clone(), 1)).collect(),
        relations,
        ring.budget().clone(),
        Some(format!("veronese(n={n}) of {}", ring.describe())),
    )
}

/// Tag names `A, B, C, ...`, suffixed with `_` on collision with base
/// variables.
fn tag_names(ring: &PresentedRing, count: usize) -> Result<Vec<String>> {
    if count > 26 {
        return Err(EngineError::BadConstruction(format!(
            "veronese piece has {count} monomials; at most 26 supported"
        )));
    }
    let taken = ring.ambient().var_names();
    Ok((0..count)
        .map(|i| {
            let mut name = String::new();
            name.push((b'A' + i as u8) as char);
            while taken.contains(&name) {
                name.push('_');
            }
            name
        })
        .collect())
}

// ----- numerical semigroup rings -----

/// The semigroup ring `k[t^{a_1}, ..., t^{a_k}]`, presented as
/// `k[x_1..x_k]/(toric kernel)` with weights `w_i = a_i`.
///
/// Generators must be positive, strictly increasing, and have gcd 1
/// (numerical semigroup); variables are named `a, b, c, ...`.
pub fn semigroup_ring(field: FieldSpec, generators: &[u64]) -> Result<Arc<PresentedRing>> {
    if generators.is_empty() || generators.len() > 26 {
        return Err(EngineError::BadConstruction(
            "semigroup needs between 1 and 26 generators".to_string(),
        ));
    }
    if generators[0] == 0 || generators.windows(2).any(|w| w[0] >= w[1]) {
        return Err(EngineError::BadConstruction(
            "semigroup generators must be positive and strictly increasing".to_string(),
        ));
    }
    let gcd = generators
        .iter()
        .fold(0u64, |g, &a| num_integer::gcd(g, a));
    if gcd != 1 {
        return Err(EngineError::BadConstruction(format!(
            "semigroup generators have gcd {gcd}; a numerical semigroup needs gcd 1"
        )));
    }

    // Eliminate t from (x_i - t^{a_i}); t sits in the front block with
    // weight 1 so every relation is homogeneous.
    let k = generators.len();
    let names: Vec<String> = (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let mut vars: Vec<(String, u64)> = alloc::vec![("t".to_string(), 1)];
    vars.extend(names.iter().cloned().zip(generators.iter().copied()));
    let aux = PolyRing::with_order(field.clone(), vars, MonomialOrder::Block { front: 1 })?;
    let gens: Vec<Polynomial> = (0..k)
        .map(|i| {
            let mut exps = alloc::vec![0 as Exponent; k + 1];
            exps[0] = generators[i] as Exponent;
            let tpow = aux.monomial_poly(Monomial::new(exps, aux.weights()));
            aux.sub(&aux.var_poly(1 + i), &tpow)
        })
        .collect();
    let gb = buchberger(&aux, &gens, &Default::default())?;

    let target_ambient = PolyRing::new(
        field.clone(),
        names.iter().cloned().zip(generators.iter().copied()).collect(),
    )?;
    let relations = minimal_generators(
        &target_ambient,
        gb.front_free_elements(&aux, 1)
            .into_iter()
            .map(|f| aux.drop_front(&f, 1, &target_ambient))
            .collect(),
    )?;
    let display: Vec<String> = generators.iter().map(|a| a.to_string()).collect();
    PresentedRing::with_budget(
        field,
        names.into_iter().zip(generators.iter().copied()).collect(),
        relations,
        Default::default(),
        Some(format!("semigroup ring <{}>", display.join(","))),
    )
}

// ----- Rees presentations -----

/// A Rees algebra `R[I·t]` presented on `R`'s variables plus one new
/// variable per generator of `I`.
#[derive(Debug, Clone)]
pub struct ReesPresentation {
    pub ring: Arc<PresentedRing>,
    /// Second (t-adic) grading of each variable: 0 on the base variables,
    /// 1 on the new ones.  Bookkeeping only; no verifier consumes it.
    pub t_degrees: Vec<u32>,
}

/// Presents `R[I·t]` by eliminating `t` from `(y_i - t·f_i) + Q`.
///
/// The new variable `y_i` receives (first-grading) weight `deg f_i`, making
/// the presentation ideal homogeneous with `t` of weight 0.
pub fn rees_presentation(ring: &Arc<PresentedRing>, ideal: &Ideal) -> Result<ReesPresentation> {
    ring.ensure_nonzero()?;
    if !Arc::ptr_eq(ideal.ring(), ring) {
        return Err(EngineError::RingMismatch(
            "Rees presentation: ideal lives in a different ring".to_string(),
        ));
    }
    if ideal.gens().is_empty() {
        return Err(EngineError::BadConstruction(
            "Rees presentation of the zero ideal".to_string(),
        ));
    }
    let ambient = ring.ambient();
    let nx = ambient.nvars();
    let m = ideal.gens().len();
    let new_names = rees_names(ring, m)?;

    let mut vars: Vec<(String, u64)> = alloc::vec![(ambient.fresh_name("t"), 0)];
    vars.extend(
        ambient
            .var_names()
            .iter()
            .cloned()
            .zip(ambient.weights().iter().copied()),
    );
    let mut target_vars: Vec<(String, u64)> = ambient
        .var_names()
        .iter()
        .cloned()
        .zip(ambient.weights().iter().copied())
        .collect();
    for (name, f) in new_names.iter().zip(ideal.gens()) {
        let d = ambient
            .degree(f)
            .ok_or_else(|| EngineError::Internal("zero generator survived Ideal::new".to_string()))?;
        vars.push((name.clone(), d));
        target_vars.push((name.clone(), d));
    }
    let aux = PolyRing::with_order(
        ambient.field().clone(),
        vars,
        MonomialOrder::Block { front: 1 },
    )?;
    let shift: Vec<usize> = (1..=nx).collect();
    let t = aux.var_poly(0);
    let mut gens: Vec<Polynomial> = ring
        .relations()
        .iter()
        .map(|f| ambient.map_vars(f, &aux, &shift))
        .collect();
    for (i, f) in ideal.gens().iter().enumerate() {
        let y = aux.var_poly(1 + nx + i);
        gens.push(aux.sub(&y, &aux.mul(&t, &ambient.map_vars(f, &aux, &shift))));
    }
    let gb = buchberger(&aux, &gens, ring.budget())?;

    let target_ambient = PolyRing::new(ambient.field().clone(), target_vars.clone())?;
    let relations = minimal_generators(
        &target_ambient,
        gb.front_free_elements(&aux, 1)
            .into_iter()
            .map(|f| aux.drop_front(&f, 1, &target_ambient))
            .collect(),
    )?;
    let gen_text: Vec<String> = ideal.gens().iter().map(|f| ambient.render(f)).collect();
    let presented = PresentedRing::with_budget(
        ambient.field().clone(),
        target_vars,
        relations,
        ring.budget().clone(),
        Some(format!(
            "rees algebra of ({}) over {}",
            gen_text.join(", "),
            ring.describe()
        )),
    )?;
    let mut t_degrees = alloc::vec![0u32; nx];
    t_degrees.extend(core::iter::repeat_n(1, m));
    Ok(ReesPresentation {
        ring: presented,
        t_degrees,
    })
}

/// Blowup variable names `u, v, w, ...`, suffixed on collision.
fn rees_names(ring: &PresentedRing, count: usize) -> Result<Vec<String>> {
    if count > 6 {
        return Err(EngineError::BadConstruction(format!(
            "Rees presentation with {count} ideal generators; at most 6 supported"
        )));
    }
    let letters = ["u", "v", "w", "p", "q", "r"];
    let taken = ring.ambient().var_names();
    Ok((0..count)
        .map(|i| {
            let mut name = letters[i].to_string();
            while taken.contains(&name) {
                name.push('_');
            }
            name
        })
        .collect())
}

// ----- complete intersections -----

/// A quotient by `degrees.len()` random forms of the given degrees, with the
/// regular-sequence property proved by the Hilbert-series factorization
/// `N_{R}(t) = Π (1 - t^{d_i})`.
pub fn complete_intersection(
    field: FieldSpec,
    nvars: usize,
    degrees: &[u64],
    seed: u64,
) -> Result<Arc<PresentedRing>> {
    if nvars == 0 || nvars > 12 {
        return Err(EngineError::BadConstruction(
            "complete intersection needs between 1 and 12 variables".to_string(),
        ));
    }
    if degrees.len() > nvars {
        return Err(EngineError::BadConstruction(format!(
            "{} forms in {} variables cannot be a regular sequence",
            degrees.len(),
            nvars
        )));
    }
    if degrees.contains(&0) {
        return Err(EngineError::BadConstruction(
            "form degrees must be positive".to_string(),
        ));
    }
    let vars = ci_var_names(nvars);
    let ambient = PolyRing::new(field.clone(), vars.clone())?;
    let mut expected = alloc::vec![1i64];
    for &d in degrees {
        expected = poly_mul(&expected, &one_minus_t_pow(d));
    }
    let label: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
    for attempt in 0..CONSTRUCTION_ATTEMPTS {
        let mut rng = ChaCha12Rng::seed_from_u64(derive_seed(seed, attempt as u64));
        let forms: Vec<Polynomial> = degrees
            .iter()
            .map(|&d| {
                let mut f = ambient.zero_poly();
                for m in ambient.monomials_of_degree(d) {
                    let c = field.random(&mut rng);
                    f = ambient.add(&f, &ambient.mul_term(&ambient.one_poly(), &c, &m));
                }
                f
            })
            .collect();
        if forms.iter().any(Polynomial::is_zero) {
            continue;
        }
        let ring = PresentedRing::with_budget(
            field.clone(),
            vars.clone(),
            forms,
            Default::default(),
            Some(format!(
                "complete intersection of degrees ({}) in {} variables",
                label.join(","),
                nvars
            )),
        )?;
        if quotient_series(&ring).numerator() == expected.as_slice() {
            return Ok(ring);
        }
    }
    Err(EngineError::SamplerExhausted {
        attempts: CONSTRUCTION_ATTEMPTS,
        what: format!(
            "regular sequence of degrees ({}) in {nvars} variables",
            label.join(",")
        ),
    })
}

fn ci_var_names(nvars: usize) -> Vec<(String, u64)> {
    if nvars <= 4 {
        ["x", "y", "z", "w"][..nvars]
            .iter()
            .map(|n| (n.to_string(), 1))
            .collect()
    } else {
        (1..=nvars).map(|i| (format!("x{i}"), 1)).collect()
    }
}

// ----- declarative recipes -----

/// A declarative ring description that can be elaborated over any field;
/// the corpus format and the characteristic scan both consume these.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingRecipe {
    /// Explicit presentation: variables with weights, relation text.
    Raw {
        vars: Vec<(String, u64)>,
        relations: Vec<String>,
    },
    /// Numerical semigroup ring `k[t^{a_1}, ..., t^{a_k}]`.
    Semigroup { generators: Vec<u64> },
    /// `n`-th Veronese of a standard-graded base.
    Veronese { base: Box<RingRecipe>, n: u64 },
    /// Rees algebra of the ideal generated by `ideal_gens` in the base.
    Rees {
        base: Box<RingRecipe>,
        ideal_gens: Vec<String>,
    },
    /// Random complete intersection of the given form degrees.
    CompleteIntersection { nvars: usize, degrees: Vec<u64> },
}

impl RingRecipe {
    /// Elaborates the recipe over a field.  `seed` only affects
    /// [`RingRecipe::CompleteIntersection`].
    pub fn build(&self, field: &FieldSpec, seed: u64) -> Result<Arc<PresentedRing>> {
        match self {
            RingRecipe::Raw { vars, relations } => {
                let ambient = PolyRing::new(field.clone(), vars.clone())?;
                let rels = relations
                    .iter()
                    .map(|s| ambient.parse(s))
                    .collect::<Result<Vec<_>>>()?;
                PresentedRing::new(field.clone(), vars.clone(), rels)
            }
            RingRecipe::Semigroup { generators } => semigroup_ring(field.clone(), generators),
            RingRecipe::Veronese { base, n } => veronese(&base.build(field, seed)?, *n),
            RingRecipe::Rees { base, ideal_gens } => {
                let ring = base.build(field, seed)?;
                let gens: Vec<&str> = ideal_gens.iter().map(String::as_str).collect();
                let ideal = Ideal::parse(ring.clone(), &gens)?;
                Ok(rees_presentation(&ring, &ideal)?.ring)
            }
            RingRecipe::CompleteIntersection { nvars, degrees } => {
                complete_intersection(field.clone(), *nvars, degrees, seed)
            }
        }
    }

    /// Field-independent description for reports.
    pub fn describe(&self) -> String {
        match self {
            RingRecipe::Raw { vars, relations } => {
                let vs: Vec<String> = vars.iter().map(|(n, w)| format!("{n}:{w}")).collect();
                if relations.is_empty() {
                    format!("k[{}]", vs.join(","))
                } else {
                    format!("k[{}]/({})", vs.join(","), relations.join(", "))
                }
            }
            RingRecipe::Semigroup { generators } => {
                let gs: Vec<String> = generators.iter().map(u64::to_string).collect();
                format!("semigroup<{}>", gs.join(","))
            }
            RingRecipe::Veronese { base, n } => format!("veronese({}, {n})", base.describe()),
            RingRecipe::Rees { base, ideal_gens } => {
                format!("rees({}; {})", base.describe(), ideal_gens.join(", "))
            }
            RingRecipe::CompleteIntersection { nvars, degrees } => {
                let ds: Vec<String> = degrees.iter().map(u64::to_string).collect();
                format!("ci(nvars={nvars}; degrees={})", ds.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn veronese_of_the_plane() {
        let base = PresentedRing::parse_ring(q(), &[("x", 1), ("y", 1)], &[]).unwrap();
        let v2 = veronese(&base, 2).unwrap();
        assert_eq!(v2.nvars(), 3);
        assert_eq!(v2.relations().len(), 1);
        assert_eq!(v2.ambient().render(&v2.relations()[0]), "A*C - B^2");
        assert_eq!(v2.dimension().unwrap(), 2);
        assert_eq!(v2.a_invariant().unwrap(), -1);
        assert_eq!(v2.multiplicity().unwrap(), (Ratio::new(2, 1), false));
        // dim [V]_m = dim [k[x,y]]_{2m} = 2m + 1.
        for m in 0..=4u64 {
            assert_eq!(v2.piece_dim(m), 2 * m + 1);
        }
    }

    #[test]
    fn veronese_identity_and_line() {
        let base = PresentedRing::parse_ring(q(), &[("x", 1), ("y", 1)], &[]).unwrap();
        assert!(Arc::ptr_eq(&veronese(&base, 1).unwrap(), &base));
        let line = PresentedRing::parse_ring(q(), &[("x", 1)], &[]).unwrap();
        let v3 = veronese(&line, 3).unwrap();
        assert_eq!(v3.nvars(), 1);
        assert!(v3.relations().is_empty());
    }

    #[test]
    fn veronese_multiplicity_scan() {
        let base = PresentedRing::parse_ring(q(), &[("x", 1), ("y", 1)], &[]).unwrap();
        for n in 2..=4u64 {
            let v = veronese(&base, n).unwrap();
            assert_eq!(v.multiplicity().unwrap(), (Ratio::new(n as i64, 1), false));
            assert_eq!(v.a_invariant().unwrap(), -1);
        }
    }

    #[test]
    fn veronese_rejects_weighted_base() {
        let cusp =
            PresentedRing::parse_ring(q(), &[("a", 2), ("b", 3)], &["b^2 - a^3"]).unwrap();
        assert!(matches!(
            veronese(&cusp, 2),
            Err(EngineError::Hypothesis(_))
        ));
    }

    #[test]
    fn semigroup_cusp() {
        let s = semigroup_ring(q(), &[2, 3]).unwrap();
        assert_eq!(s.weights(), &[2, 3]);
        assert_eq!(s.relations().len(), 1);
        assert_eq!(s.ambient().render(&s.relations()[0]), "b^2 - a^3");
        assert_eq!(s.dimension().unwrap(), 1);
        assert_eq!(s.a_invariant().unwrap(), 1);
    }

    #[test]
    fn semigroup_frobenius_is_a_invariant() {
        for (gens, frobenius) in [(&[2u64, 3][..], 1i64), (&[2, 5][..], 3), (&[3, 4][..], 5)] {
            let s = semigroup_ring(q(), gens).unwrap();
            assert_eq!(s.a_invariant().unwrap(), frobenius);
        }
    }

    #[test]
    fn semigroup_345_minors() {
        let s = semigroup_ring(q(), &[3, 4, 5]).unwrap();
        assert_eq!(s.relations().len(), 3);
        assert_eq!(s.dimension().unwrap(), 1);
        assert_eq!(s.a_invariant().unwrap(), 2);
        // Degrees 1 and 2 are the only holes of <3,4,5>.
        assert_eq!(s.piece_dim(1), 0);
        assert_eq!(s.piece_dim(2), 0);
        for d in 3..=10 {
            assert_eq!(s.piece_dim(d), 1, "degree {d}");
        }
    }

    #[test]
    fn semigroup_validation() {
        assert!(semigroup_ring(q(), &[]).is_err());
        assert!(semigroup_ring(q(), &[3, 3]).is_err());
        assert!(semigroup_ring(q(), &[2, 4]).is_err());
        assert!(semigroup_ring(q(), &[0, 1]).is_err());
        let line = semigroup_ring(q(), &[1]).unwrap();
        assert!(line.relations().is_empty());
        assert_eq!(line.weights(), &[1]);
    }

    #[test]
    fn rees_of_the_plane_blowup() {
        let base = PresentedRing::parse_ring(q(), &[("x", 1), ("y", 1)], &[]).unwrap();
        let m = Ideal::maximal(base.clone()).unwrap();
        let rees = rees_presentation(&base, &m).unwrap();
        assert_eq!(rees.t_degrees, alloc::vec![0, 0, 1, 1]);
        let r = &rees.ring;
        assert_eq!(r.nvars(), 4);
        assert_eq!(r.relations().len(), 1);
        assert_eq!(r.ambient().render(&r.relations()[0]), "x*v - y*u");
        // The blowup of the plane is a 3-fold.
        assert_eq!(r.dimension().unwrap(), 3);
    }

    #[test]
    fn rees_of_principal_ideal_is_polynomial() {
        let base = PresentedRing::parse_ring(q(), &[("x", 1), ("y", 1)], &[]).unwrap();
        let i = Ideal::parse(base.clone(), &["x"]).unwrap();
        let rees = rees_presentation(&base, &i).unwrap();
        assert!(rees.ring.relations().is_empty());
        assert_eq!(rees.ring.nvars(), 3);
    }

    #[test]
    fn rees_of_cusp_power_smoke() {
        let cusp = semigroup_ring(q(), &[2, 3]).unwrap();
        let i = Ideal::parse(cusp.clone(), &["a^2", "a*b", "b^2"]).unwrap();
        let rees = rees_presentation(&cusp, &i).unwrap();
        assert_eq!(rees.ring.nvars(), 5);
        assert!(!rees.ring.relations().is_empty());
        assert!(!rees.ring.is_zero_ring());
    }

    #[test]
    fn complete_intersection_series() {
        let fermat_like = complete_intersection(q(), 3, &[3], 11).unwrap();
        assert_eq!(fermat_like.dimension().unwrap(), 2);
        assert_eq!(fermat_like.a_invariant().unwrap(), 0);
        let two_forms = complete_intersection(FieldSpec::prime(32003).unwrap(), 3, &[2, 2], 5)
            .unwrap();
        assert_eq!(two_forms.dimension().unwrap(), 1);
        assert_eq!(two_forms.a_invariant().unwrap(), 1); // 2+2-3
        let poly = complete_intersection(q(), 3, &[], 0).unwrap();
        assert_eq!(poly.a_invariant().unwrap(), -3);
    }

    #[test]
    fn recipe_roundtrip_build() {
        let recipe = RingRecipe::Veronese {
            base: Box::new(RingRecipe::Raw {
                vars: alloc::vec![("x".to_string(), 1), ("y".to_string(), 1)],
                relations: Vec::new(),
            }),
            n: 2,
        };
        let ring = recipe.build(&q(), 0).unwrap();
        assert_eq!(ring.nvars(), 3);
        assert_eq!(recipe.describe(), "veronese(k[x:1,y:1], 2)");

        let semi = RingRecipe::Semigroup {
            generators: alloc::vec![2, 3],
        };
        let cusp = semi.build(&q(), 0).unwrap();
        assert_eq!(cusp.weights(), &[2, 3]);
    }
}
