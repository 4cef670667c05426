//! Gröbner-backed answers cross-checked against Macaulay-style linear
//! algebra (which never touches the Gröbner machinery) and a hand-verified
//! elimination kernel.

use std::sync::Arc;

use corelab_core::groebner::{buchberger, GbBudget};
use corelab_core::hilbert::ideal_quotient_series;
use corelab_core::oracle;
use corelab_core::{FieldSpec, Ideal, MonomialOrder, PolyRing, PresentedRing};

fn catalog() -> Vec<(Arc<PresentedRing>, Vec<&'static str>)> {
    let plane =
        PresentedRing::parse_ring(FieldSpec::rationals(), &[("x", 1), ("y", 1)], &[]).unwrap();
    let cusp = PresentedRing::parse_ring(
        FieldSpec::rationals(),
        &[("a", 2), ("b", 3)],
        &["b^2 - a^3"],
    )
    .unwrap();
    let gap = PresentedRing::parse_ring(
        FieldSpec::rationals(),
        &[("a", 2), ("b", 3), ("u", 2)],
        &["b^2 - a^3"],
    )
    .unwrap();
    vec![
        (plane.clone(), vec!["x^2", "y^3"]),
        (plane, vec!["x^2 + y^2", "x*y"]),
        (cusp.clone(), vec!["a^2"]),
        (cusp, vec!["a^2", "a*b"]),
        (gap.clone(), vec!["a^2", "u^2"]),
        (gap, vec!["a*u + a^2", "u^3"]),
    ]
}

#[test]
fn elimination_recovers_the_twisted_cubic_kernel() {
    let ring = PolyRing::with_order(
        FieldSpec::rationals(),
        vec![
            ("t".to_string(), 1),
            ("x".to_string(), 1),
            ("y".to_string(), 2),
            ("z".to_string(), 3),
        ],
        MonomialOrder::Block { front: 1 },
    )
    .unwrap();
    let gens = vec![
        ring.parse("x - t").unwrap(),
        ring.parse("y - t^2").unwrap(),
        ring.parse("z - t^3").unwrap(),
    ];
    let gb = buchberger(&ring, &gens, &GbBudget::default()).unwrap();
    let kernel: Vec<String> = gb
        .elements()
        .iter()
        .filter(|f| f.terms().iter().all(|t| t.mono.exponents()[0] == 0))
        .map(|f| ring.render(f))
        .collect();
    assert_eq!(kernel, vec!["y - x^2", "z - x^3"]);
}

#[test]
fn membership_agrees_with_macaulay_spans() {
    for (ring, gens) in catalog() {
        let ideal = Ideal::parse(ring.clone(), &gens).unwrap();
        let ambient = ring.ambient();
        for d in 1..=10u64 {
            // Standard monomials probe both sides of the membership
            // boundary; a two-term combination probes non-monomial inputs.
            let basis = ring.piece_basis(d);
            for f in &basis {
                assert_eq!(
                    ideal.contains_poly(f).unwrap(),
                    oracle::macaulay_contains(&ideal, f).unwrap(),
                    "{} in ({}) over {}",
                    ambient.render(f),
                    gens.join(", "),
                    ring.describe()
                );
            }
            if basis.len() >= 2 {
                let combo = ambient.add(&basis[0], &ambient.scale(&basis[1], &ambient.field().from_i64(7)));
                assert_eq!(
                    ideal.contains_poly(&combo).unwrap(),
                    oracle::macaulay_contains(&ideal, &combo).unwrap()
                );
            }
        }
    }
}

#[test]
fn piece_dimensions_agree_across_three_routes() {
    for (ring, gens) in catalog() {
        let ideal = Ideal::parse(ring.clone(), &gens).unwrap();
        let quotient_dims = ideal_quotient_series(&ideal).unwrap().dims_up_to(12);
        let ring_dims = ring.series().dims_up_to(12);
        for d in 0..=12u64 {
            let from_series = (ring_dims[d as usize] - quotient_dims[d as usize]) as usize;
            let from_linalg = ideal.piece_dim(d).unwrap();
            let from_macaulay = oracle::macaulay_piece_dim(&ideal, d).unwrap();
            assert_eq!(from_series, from_linalg, "degree {d} in {}", ring.describe());
            assert_eq!(from_linalg, from_macaulay, "degree {d} in {}", ring.describe());
        }
    }
}

#[test]
fn intersections_agree_with_the_rank_identity() {
    let plane =
        PresentedRing::parse_ring(FieldSpec::rationals(), &[("x", 1), ("y", 1)], &[]).unwrap();
    let pairs = [
        (vec!["x^2"], vec!["y^2"]),
        (vec!["x^2", "x*y"], vec!["y^3"]),
        (vec!["x^3 + y^3"], vec!["x*y", "y^2"]),
    ];
    for (ga, gb) in pairs {
        let a = Ideal::parse(plane.clone(), &ga).unwrap();
        let b = Ideal::parse(plane.clone(), &gb).unwrap();
        let meet = a.intersect(&b).unwrap();
        for d in 0..=10u64 {
            assert_eq!(
                meet.piece_dim(d).unwrap(),
                oracle::macaulay_intersection_dim(&a, &b, d).unwrap(),
                "degree {d} for ({}) ∩ ({})",
                ga.join(", "),
                gb.join(", ")
            );
        }
    }

    let cusp = PresentedRing::parse_ring(
        FieldSpec::rationals(),
        &[("a", 2), ("b", 3)],
        &["b^2 - a^3"],
    )
    .unwrap();
    let a = Ideal::parse(cusp.clone(), &["a^2"]).unwrap();
    let b = Ideal::parse(cusp.clone(), &["b"]).unwrap();
    let meet = a.intersect(&b).unwrap();
    for d in 0..=14u64 {
        assert_eq!(
            meet.piece_dim(d).unwrap(),
            oracle::macaulay_intersection_dim(&a, &b, d).unwrap(),
            "degree {d} in the cusp"
        );
    }
}
