//! End-to-end checks of the core and graded-core formulas on worked
//! examples whose answers are known in closed form, with the Macaulay
//! oracle auditing the results from outside the Gröbner machinery.

use std::sync::Arc;

use corelab_core::engine::{
    core_colon, core_monte_carlo, grcore_monte_carlo, verify_dim1, verify_sandwich,
    verify_standard_formula, McOptions, Mode, Verdict,
};
use corelab_core::error::EngineError;
use corelab_core::oracle;
use corelab_core::reductions::GradedReductionStream;
use corelab_core::{FieldSpec, Ideal, PresentedRing};

fn opts(seed: u64) -> McOptions {
    McOptions {
        seed,
        min_samples: 6,
        window: 4,
        max_samples: 64,
        r_max: 10,
    }
}

fn cusp() -> Arc<PresentedRing> {
    PresentedRing::parse_ring(
        FieldSpec::rationals(),
        &[("a", 2), ("b", 3)],
        &["b^2 - a^3"],
    )
    .unwrap()
}

#[test]
fn cusp_core_and_graded_core_disagree_as_the_criterion_predicts() {
    let ring = cusp();
    let report = verify_dim1(&ring, 4, &opts(41)).unwrap();
    assert_eq!(report.verdict, Verdict::Consistent);
    assert!(!report.nzd_degree_one);
    assert!(!report.equal);

    // Closed forms: core(S_{>=4}) = S_{>=6}, grcore(S_{>=4}) = (a^2).
    let s6 = Ideal::truncation(ring.clone(), 6).unwrap();
    assert!(report.core.result.equals(&s6).unwrap());
    let a2 = Ideal::parse(ring.clone(), &["a^2"]).unwrap();
    assert!(report.graded_core.result.equals(&a2).unwrap());

    // Macaulay audit of the separating element.
    let w = &report.witness.as_ref().unwrap().poly;
    assert!(oracle::macaulay_contains(&a2, w).unwrap());
    assert!(!oracle::macaulay_contains(&s6, w).unwrap());
}

#[test]
fn colon_and_monte_carlo_agree_on_the_same_target() {
    // Same equal-degree target, both routes, must coincide: m^2 in the
    // plane (Gorenstein, QQ), and S_4·S in the cusp.
    let plane =
        PresentedRing::parse_ring(FieldSpec::rationals(), &[("x", 1), ("y", 1)], &[]).unwrap();
    let target = Ideal::equal_degree(plane.clone(), 2).unwrap();
    let mc = core_monte_carlo(&target, &opts(17)).unwrap();
    let cert = GradedReductionStream::new(&plane, 2, 17)
        .unwrap()
        .next()
        .unwrap()
        .unwrap();
    let colon = core_colon(&target, &cert, &opts(17)).unwrap();
    assert_eq!(mc.mode, Mode::MonteCarlo);
    assert_eq!(colon.mode, Mode::Colon);
    assert!(mc.result.equals(&colon.result).unwrap());
    let m3 = Ideal::maximal(plane).unwrap().power(3).unwrap();
    assert!(mc.result.equals(&m3).unwrap());

    let ring = cusp();
    let target = Ideal::equal_degree(ring.clone(), 4).unwrap();
    let mc = core_monte_carlo(&target, &opts(23)).unwrap();
    let cert = GradedReductionStream::new(&ring, 4, 23)
        .unwrap()
        .next()
        .unwrap()
        .unwrap();
    let colon = core_colon(&target, &cert, &opts(23)).unwrap();
    // S_4·S = (a^2) is principal, hence its own core on both routes.
    assert!(mc.result.equals(&colon.result).unwrap());
    assert!(mc
        .result
        .equals(&Ideal::parse(ring, &["a^2"]).unwrap())
        .unwrap());
}

#[test]
fn standard_formula_over_a_large_prime_field() {
    let ring = PresentedRing::parse_ring(
        FieldSpec::prime(32003).unwrap(),
        &[("x", 1), ("y", 1)],
        &[],
    )
    .unwrap();
    let report = verify_standard_formula(&ring, 2, true, &opts(29)).unwrap();
    assert_eq!(report.verdict, Some(Verdict::Consistent));
    // e = Nd + a + 1 = 4 - 2 + 1 = 3.
    let m3 = Ideal::maximal(ring).unwrap().power(3).unwrap();
    assert!(report.result.equals(&m3).unwrap());
    assert_eq!(report.max_reduction_number, 1);
}

#[test]
fn standard_formula_refuses_the_fermat_cubic_in_characteristic_three() {
    let ring = PresentedRing::parse_ring(
        FieldSpec::prime(3).unwrap(),
        &[("x", 1), ("y", 1), ("z", 1)],
        &["x^3 + y^3 + z^3"],
    )
    .unwrap();
    // All partial derivatives vanish, so the guard sees a non-reduced ring
    // and vetoes the caller's assertion.
    match verify_standard_formula(&ring, 1, true, &opts(0)) {
        Err(EngineError::Hypothesis(m)) => assert!(m.contains("squarefree")),
        other => panic!("expected a hypothesis rejection, got {other:?}"),
    }
}

#[test]
fn sandwich_bounds_on_the_gap_ring() {
    let ring = PresentedRing::parse_ring(
        FieldSpec::rationals(),
        &[("a", 2), ("b", 3), ("u", 2)],
        &["b^2 - a^3"],
    )
    .unwrap();

    // N = 3 gives a non-primary equal-degree ideal: an honest error.
    match grcore_monte_carlo(&ring, 3, &opts(0)) {
        Err(EngineError::NotMPrimary(m)) => assert!(m.contains("N = 3")),
        other => panic!("expected NotMPrimary, got {other:?}"),
    }

    // N = 4: k0 = 8, the only gap degree below k0-1 is 1, and the ring is
    // a hypersurface, hence Gorenstein and level: equality with the upper
    // bound is predicted and attained.
    let report = verify_sandwich(&ring, 4, &opts(2)).unwrap();
    assert_eq!(report.verdict, Verdict::Consistent);
    assert_eq!(report.k0, 8);
    assert_eq!(report.gap_degrees, vec![1]);
    assert!(report.lower_contained);
    assert!(report.upper_contains);
    assert_eq!(report.equality_with_upper, Some(true));

    // The upper bound genuinely exceeds the lower one here: S_6 ⊄ S_{>=8}.
    assert!(!report.lower.equals(&report.upper).unwrap());
    let u3 = ring.ambient().parse("u^3").unwrap();
    assert!(report.graded_core.result.contains_poly(&u3).unwrap());
    assert!(!report.lower.contains_poly(&u3).unwrap());

    // Macaulay audit: the graded core's piece dimensions at the window
    // edges match the rank computations.
    for d in [6u64, 7, 8] {
        assert_eq!(
            report.graded_core.result.piece_dim(d).unwrap(),
            oracle::macaulay_piece_dim(&report.graded_core.result, d).unwrap(),
            "degree {d}"
        );
    }
}

#[test]
fn coordinate_cross_reaches_equality_with_a_linear_nonzerodivisor() {
    let ring = PresentedRing::parse_ring(
        FieldSpec::rationals(),
        &[("x", 1), ("y", 1)],
        &["x*y"],
    )
    .unwrap();
    let report = verify_dim1(&ring, 2, &opts(13)).unwrap();
    assert_eq!(report.verdict, Verdict::Consistent);
    assert!(report.nzd_degree_one);
    assert!(report.equal);
    let m3 = Ideal::maximal(ring).unwrap().power(3).unwrap();
    assert!(report.core.result.equals(&m3).unwrap());
    assert!(report.graded_core.result.equals(&m3).unwrap());
}

#[test]
fn reports_are_reproducible_for_a_fixed_seed() {
    let ring = cusp();
    let a = grcore_monte_carlo(&ring, 4, &opts(99)).unwrap();
    let b = grcore_monte_carlo(&ring, 4, &opts(99)).unwrap();
    let render = |r: &corelab_core::engine::CoreReport| {
        (
            r.result
                .gens()
                .iter()
                .map(|g| ring.ambient().render(g))
                .collect::<Vec<_>>(),
            r.certificates.len(),
            r.max_reduction_number,
            r.dimension_table.clone(),
        )
    };
    assert_eq!(render(&a), render(&b));
}
