//! Randomized properties: arithmetic laws in quotient rings, canonicality
//! of reduced bases, agreement of Gröbner membership with Macaulay spans,
//! and parser/renderer round trips.

use std::sync::Arc;

use proptest::prelude::*;

use corelab_core::oracle;
use corelab_core::{FieldSpec, Ideal, Monomial, PolyRing, Polynomial, PresentedRing, Term};

fn cusp() -> Arc<PresentedRing> {
    PresentedRing::parse_ring(
        FieldSpec::rationals(),
        &[("a", 2), ("b", 3)],
        &["b^2 - a^3"],
    )
    .unwrap()
}

fn plane_mod_p() -> Arc<PresentedRing> {
    PresentedRing::parse_ring(FieldSpec::prime(101).unwrap(), &[("x", 1), ("y", 1)], &[]).unwrap()
}

/// A random polynomial over the given ambient ring, built term by term.
fn poly_strategy(ring: Arc<PolyRing>, max_exp: u16, max_terms: usize) -> BoxedStrategy<Polynomial> {
    let nvars = ring.nvars();
    let term = (proptest::collection::vec(0..=max_exp, nvars), -9i64..=9);
    proptest::collection::vec(term, 0..=max_terms)
        .prop_map(move |raw| {
            let weights = ring.weights().to_vec();
            let terms: Vec<Term> = raw
                .into_iter()
                .map(|(exps, c)| Term {
                    coeff: ring.field().from_i64(c),
                    mono: Monomial::new(exps, &weights),
                })
                .collect();
            ring.from_terms(terms)
        })
        .boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quotient_arithmetic_laws(
        (f, g, h) in {
            let r = cusp();
            let a = r.ambient().clone();
            (poly_strategy(a.clone(), 5, 4), poly_strategy(a.clone(), 5, 4), poly_strategy(a, 5, 4))
        }
    ) {
        let ring = cusp();
        let ambient = ring.ambient();
        // nf is a ring homomorphism onto the standard-monomial representatives.
        let fg = ring.nf(&ambient.mul(&f, &g));
        let gf = ring.nf(&ambient.mul(&g, &f));
        prop_assert_eq!(ambient.render(&fg), ambient.render(&gf));

        let lhs = ring.nf(&ambient.mul(&f, &ambient.add(&g, &h)));
        let rhs = ring.nf(&ambient.add(&ambient.mul(&f, &g), &ambient.mul(&f, &h)));
        prop_assert_eq!(ambient.render(&lhs), ambient.render(&rhs));

        // Normal form is idempotent and stable under adding multiples of Q.
        let nf = ring.nf(&f);
        prop_assert_eq!(ambient.render(&ring.nf(&nf)), ambient.render(&nf));
        let rel = &ring.relations()[0];
        let shifted = ring.nf(&ambient.add(&f, &ambient.mul(rel, &g)));
        prop_assert_eq!(ambient.render(&shifted), ambient.render(&nf));
    }

    #[test]
    fn parse_render_round_trip(
        f in poly_strategy(cusp().ambient().clone(), 6, 5)
    ) {
        let ring = cusp();
        let ambient = ring.ambient();
        let rendered = ambient.render(&f);
        let back = ambient.parse(&rendered).unwrap();
        prop_assert_eq!(ambient.render(&back), rendered);
    }

    #[test]
    fn reduced_bases_are_canonical(
        perm in 0usize..6,
        scales in proptest::collection::vec(1i64..=50, 3)
    ) {
        // The reduced basis must not depend on generator order or scaling.
        let ring = plane_mod_p();
        let gens = ["x^3", "x*y + y^2", "y^4"];
        let ideal = Ideal::parse(ring.clone(), &gens).unwrap();
        let reference: Vec<String> = ideal
            .gb()
            .unwrap()
            .elements()
            .iter()
            .map(|e| ring.ambient().render(e))
            .collect();

        let order = permutations(gens.len())[perm].clone();
        let ambient = ring.ambient();
        let shuffled: Vec<_> = order
            .iter()
            .zip(&scales)
            .map(|(&i, &s)| {
                let f = ambient.parse(gens[i]).unwrap();
                ambient.scale(&f, &ambient.field().from_i64(s))
            })
            .collect();
        let other = Ideal::new(ring.clone(), shuffled).unwrap();
        let basis: Vec<String> = other
            .gb()
            .unwrap()
            .elements()
            .iter()
            .map(|e| ambient.render(e))
            .collect();
        prop_assert_eq!(basis, reference);
    }

    #[test]
    fn membership_matches_macaulay_on_random_queries(
        f in poly_strategy(plane_mod_p().ambient().clone(), 4, 3),
        d in 2u64..=6
    ) {
        let ring = plane_mod_p();
        let ideal = Ideal::parse(ring.clone(), &["x^2", "y^3"]).unwrap();
        // Make the query homogeneous: take the degree-d part of f.
        let ambient = ring.ambient();
        let part: Vec<Term> = f
            .terms()
            .iter()
            .filter(|t| t.mono.degree() == d)
            .cloned()
            .collect();
        let query = ambient.from_terms(part);
        prop_assert_eq!(
            ideal.contains_poly(&query).unwrap(),
            oracle::macaulay_contains(&ideal, &query).unwrap()
        );
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    assert_eq!(n, 3, "only the 3-element case is needed here");
    vec![
        vec![0, 1, 2],
        vec![0, 2, 1],
        vec![1, 0, 2],
        vec![1, 2, 0],
        vec![2, 0, 1],
        vec![2, 1, 0],
    ]
}
