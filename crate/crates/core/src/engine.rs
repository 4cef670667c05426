//! Core and graded-core computations, plus the verdict-producing verifiers
//! built on them.
//!
//! The core of an ideal is the intersection of all its reductions.  Two
//! routes are implemented:
//!
//! * **Monte-Carlo**: intersect a seeded stream of verified minimal
//!   reductions until the intersection stops moving.  The running
//!   intersection is exact at every step — the internal Gröbner truncation
//!   degree is raised until `S_{>=k} ⊆ I^{r+1}` is *proved* for the largest
//!   reduction number `r` seen, which bounds the degrees of all minimal
//!   generators the fold can ever need.  The only Monte-Carlo element is
//!   which reductions get sampled, so the result is an ideal that provably
//!   *contains* the core and equals it once enough reductions have been
//!   seen.
//! * **Colon formula**: `core(I) = J^{r+1} : I^r` for a single minimal
//!   reduction `J` and stabilized exponent `r`.  This shortcut is gated to
//!   characteristic zero with a Gorenstein certificate, where it is a
//!   theorem; elsewhere it is refused rather than approximated.
//!
//! Verdicts are conservative: `Refuted` always carries a machine-rechecked
//! witness, and anything weaker than a proof lands in `Inconclusive` with a
//! reason instead of being rounded up to `Consistent`.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::derive_seed;
use crate::error::EngineError;
use crate::field::FieldSpec;
use crate::groebner::normal_form;
use crate::hilbert::{cm_certificate, gorenstein_report, ideal_quotient_series, CmVerdict};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial, Term};
use crate::reductions::{
    certify_reduction, random_combination, reduction_number, sample_with_r_max,
    ReductionCertificate, DEFAULT_R_MAX,
};
use crate::ring::PresentedRing;
use crate::Result;

/// Sampling and budget knobs for the Monte-Carlo engine.
#[derive(Debug, Clone)]
pub struct McOptions {
    /// Master seed; sample `i` always draws from `derive_seed(seed, i)`, so
    /// reports are reproducible and sample sets are order-independent.
    pub seed: u64,
    /// Samples required before stabilization may be declared.
    pub min_samples: usize,
    /// Consecutive unchanged intersections required to stabilize.
    pub window: usize,
    /// Hard ceiling on drawn samples.
    pub max_samples: usize,
    /// Bound for reduction-number searches.
    pub r_max: u32,
}

impl Default for McOptions {
    fn default() -> Self {
        McOptions {
            seed: 0,
            min_samples: 16,
            window: 8,
            max_samples: 256,
            r_max: DEFAULT_R_MAX,
        }
    }
}

impl McOptions {
    pub fn with_seed(seed: u64) -> Self {
        McOptions {
            seed,
            ..McOptions::default()
        }
    }
}

/// Which route produced a [`CoreReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    MonteCarlo,
    Colon,
}

/// Outcome of checking a formula against computed evidence.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Consistent,
    /// Carries a witness that was re-verified from scratch before being
    /// reported, and a sentence saying what it violates.
    Refuted {
        witness: Polynomial,
        violated: String,
    },
    Inconclusive {
        reason: String,
    },
}

/// How the Monte-Carlo intersection behaved.
#[derive(Debug, Clone)]
pub struct StabilizationEvidence {
    pub samples_used: usize,
    pub window: usize,
    /// Consecutive final samples that left the intersection unchanged.
    pub stable_for: usize,
    pub stabilized: bool,
    /// Gröbner truncation degree of the final fold step.  The fold is exact
    /// as an ideal; the truncation only discards provably redundant
    /// high-degree basis elements.
    pub truncation_degree: u64,
}

/// Everything one core computation produces.
#[derive(Debug, Clone)]
pub struct CoreReport {
    /// Human description of the target, e.g. `core(m^2)`.
    pub target: String,
    pub mode: Mode,
    /// The computed (graded) core, with a minimal generating set.
    pub result: Ideal,
    /// Certificates that entered the computation: every sample for the
    /// Monte-Carlo route, the single reduction used for the colon route.
    pub certificates: Vec<ReductionCertificate>,
    /// Largest reduction number among the certificates.
    pub max_reduction_number: u32,
    /// Monte-Carlo only.
    pub stabilization: Option<StabilizationEvidence>,
    /// Colon only: the exponent at which `J^{r+1} : I^r` stabilized.
    pub colon_exponent: Option<u32>,
    /// A formula candidate the verifiers compared against, if any.
    pub candidate: Option<Ideal>,
    pub verdict: Option<Verdict>,
    /// `dim_k [result]_d` for low degrees (empty when the result is not
    /// homogeneous).
    pub dimension_table: Vec<(u64, usize)>,
    pub notes: Vec<String>,
}

// Salted sub-seed offsets keep the engine's auxiliary randomness (witness
// searches, nonzerodivisor draws) disjoint from the Monte-Carlo sample
// indices 0..max_samples under the same master seed.
const NZD_SALT: u64 = 0x6e7a64;
const WITNESS_SALT: u64 = 0x776974;

/// Attempts at finding a degree-one nonzerodivisor before giving up.
const NZD_TRIALS: u64 = 20;
/// Random draws in the explicit gap-witness search.
const WITNESS_TRIALS: u64 = 12;
/// Extra independent reductions the colon route is cross-checked against.
const INDEPENDENT_COLON_CHECKS: usize = 2;

fn weight_max(ring: &PresentedRing) -> u64 {
    ring.weights().iter().copied().max().unwrap_or(1)
}

fn rendered_basis(ideal: &Ideal) -> Result<Vec<String>> {
    let ambient = ideal.ring().ambient();
    Ok(ideal
        .gb()?
        .elements()
        .iter()
        .map(|f| ambient.render(f))
        .collect())
}

fn describe_target(ideal: &Ideal) -> String {
    let ambient = ideal.ring().ambient();
    let gens: Vec<String> = ideal.gens().iter().map(|g| ambient.render(g)).collect();
    format!("({})", gens.join(", "))
}

/// Rebuilds an ideal from its stored generators, discarding every cached
/// Gröbner basis — used to re-check claims "from scratch".
fn fresh_copy(ideal: &Ideal) -> Ideal {
    Ideal::new_affine(ideal.ring().clone(), ideal.gens().to_vec())
}

/// `dim_k [I]_d` for `d = 0..=hi`; empty for inhomogeneous ideals, whose
/// pieces are not defined.
fn dims_table(ideal: &Ideal, hi: u64) -> Result<Vec<(u64, usize)>> {
    let ambient = ideal.ring().ambient();
    if !ideal.gens().iter().all(|g| ambient.is_homogeneous(g)) {
        return Ok(Vec::new());
    }
    ideal.dimension_table(0, hi)
}

/// Degree reach of the dimension tables in reports: comfortably past every
/// degree the verifiers compare at.
fn table_bound(ideal: &Ideal) -> Result<u64> {
    let ring = ideal.ring();
    let d = (ring.dimension()? as u64).max(1);
    let a = ring.a_invariant()?.unsigned_abs();
    let dmax = ideal
        .gens()
        .iter()
        .filter_map(|g| ring.ambient().degree(g))
        .max()
        .unwrap_or(1);
    Ok(2 * (dmax * d + a + weight_max(ring)))
}

/// Minimal homogeneous generating set of an ideal of `R`: ascending-degree
/// greedy pruning against the ideal of the kept generators (graded Nakayama
/// makes the greedy choice minimal).  Inhomogeneous ideals are returned
/// untouched — the grading argument does not apply to them.
fn minimal_quotient_generators(ideal: &Ideal) -> Result<Vec<Polynomial>> {
    let ring = ideal.ring();
    let ambient = ring.ambient();
    if !ideal.gens().iter().all(|g| ambient.is_homogeneous(g)) {
        return Ok(ideal.gens().to_vec());
    }
    let mut gens = ideal.gens().to_vec();
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
    let mut basis = ring.q_basis().clone();
    for f in gens {
        if normal_form(ambient, &f, basis.elements()).is_zero() {
            continue;
        }
        kept.push(f.clone());
        let mut input = basis.elements().to_vec();
        input.push(f);
        basis = crate::groebner::buchberger(ambient, &input, ring.budget())?;
    }
    Ok(kept)
}

/// Least `k` with `S_{>=k} ⊆ I^{r+1}`, established by exact containment
/// checks.  Exists because `I` is 𝔪-primary; the search is bounded anyway.
fn asymptotic_floor(target: &Ideal, n: u64, r: u32) -> Result<u64> {
    let ring = target.ring();
    let wmax = weight_max(ring);
    let power = target.power(r + 1)?;
    let start = n * (u64::from(r) + 1);
    let limit = start + 8 * wmax + 8;
    for k in start..=limit {
        if power.contains(&Ideal::truncation(ring.clone(), k)?)? {
            return Ok(k);
        }
    }
    Err(EngineError::Internal(format!(
        "no truncation inside I^{} found below degree {limit}",
        r + 1
    )))
}

struct FoldOutcome {
    result: Ideal,
    certificates: Vec<ReductionCertificate>,
    evidence: StabilizationEvidence,
    max_r: u32,
}

/// Draws minimal reductions of `target` and folds them into a running
/// intersection.  Every step is exact: the truncation degree used for the
/// intersections always dominates `asymptotic_floor(max r so far) + wmax`,
/// which bounds the degree of every minimal generator any intermediate
/// intersection can have (each one contains `I^{r+1}`, hence `S_{>=floor}`).
fn mc_fold(target: &Ideal, opts: &McOptions) -> Result<FoldOutcome> {
    let ring = target.ring().clone();
    let n = target.common_gen_degree().ok_or_else(|| {
        EngineError::Hypothesis(
            "Monte-Carlo core: target generators must share one degree".to_string(),
        )
    })?;
    if !target.is_m_primary()? {
        return Err(EngineError::NotMPrimary(
            "Monte-Carlo core: the target must be m-primary".to_string(),
        ));
    }
    let d = ring.dimension()? as u64;
    let a = ring.a_invariant()?.unsigned_abs();
    let wmax = weight_max(&ring);
    let base_cap = 2 * (n * d + a + wmax);

    let min_samples = opts.min_samples.max(1);
    let window = opts.window.max(1);
    let max_samples = opts.max_samples.max(min_samples);

    let mut floors: BTreeMap<u32, u64> = BTreeMap::new();
    let mut max_r = 0u32;
    let mut cap = base_cap;
    let mut certificates: Vec<ReductionCertificate> = Vec::new();
    let mut current: Option<Ideal> = None;
    let mut prev_quotient_dims: Option<Vec<u64>> = None;
    let mut prev_basis: Option<Vec<String>> = None;
    let mut stable_for = 0usize;
    let mut stabilized = false;

    while certificates.len() < max_samples {
        let index = certificates.len() as u64;
        let cert = sample_with_r_max(target, derive_seed(opts.seed, index), opts.r_max)?;
        max_r = max_r.max(cert.reduction_number());
        if let Entry::Vacant(slot) = floors.entry(max_r) {
            slot.insert(asymptotic_floor(target, n, max_r)?);
        }
        cap = cap.max(floors[&max_r] + wmax);

        let next = match &current {
            None => cert.ideal().clone(),
            Some(cur) => cur.intersect_truncated(cert.ideal(), Some(cap))?,
        };
        certificates.push(cert);

        // Descending-chain law: the quotient dimensions must never shrink.
        // The fold is exact, so a violation is an engine bug.
        let quotient_dims = ideal_quotient_series(&next)?.dims_up_to(base_cap);
        if let Some(prev) = &prev_quotient_dims {
            if quotient_dims.iter().zip(prev).any(|(now, old)| now < old) {
                return Err(EngineError::Internal(
                    "Monte-Carlo fold: intersection grew in a low degree".to_string(),
                ));
            }
        }
        prev_quotient_dims = Some(quotient_dims);

        let basis = rendered_basis(&next)?;
        if prev_basis.as_ref() == Some(&basis) {
            stable_for += 1;
        } else {
            stable_for = 0;
        }
        prev_basis = Some(basis);
        current = Some(next);

        if certificates.len() >= min_samples && stable_for >= window {
            stabilized = true;
            break;
        }
    }

    let raw = current.expect("at least one sample is always drawn");
    // Containment floor: every sampled reduction contains I^{max_r+1}, so
    // the intersection must too.  Exact check; failure is an engine bug.
    let floor = target.power(max_r + 1)?;
    if !raw.contains(&floor)? {
        return Err(EngineError::Internal(
            "Monte-Carlo fold: I^{r+1} escaped the intersection".to_string(),
        ));
    }
    let result = Ideal::new(ring.clone(), minimal_quotient_generators(&raw)?)?;
    Ok(FoldOutcome {
        result,
        evidence: StabilizationEvidence {
            samples_used: certificates.len(),
            window,
            stable_for,
            stabilized,
            truncation_degree: cap,
        },
        certificates,
        max_r,
    })
}

/// Monte-Carlo core of an equal-degree 𝔪-primary ideal.
pub fn core_monte_carlo(target: &Ideal, opts: &McOptions) -> Result<CoreReport> {
    let description = format!("core{}", describe_target(target));
    let fold = mc_fold(target, opts)?;
    let table = dims_table(&fold.result, table_bound(target)?)?;
    Ok(CoreReport {
        target: description,
        mode: Mode::MonteCarlo,
        result: fold.result,
        certificates: fold.certificates,
        max_reduction_number: fold.max_r,
        stabilization: Some(fold.evidence),
        colon_exponent: None,
        candidate: None,
        verdict: None,
        dimension_table: table,
        notes: Vec::new(),
    })
}

/// Monte-Carlo graded core of the truncation `S_{>=n}`, computed as the
/// core of the equal-degree ideal `S_n·S` (the two have the same minimal
/// homogeneous reductions).
pub fn grcore_monte_carlo(
    ring: &Arc<PresentedRing>,
    n: u64,
    opts: &McOptions,
) -> Result<CoreReport> {
    let target = Ideal::equal_degree(ring.clone(), n)?;
    if !target.is_m_primary()? {
        return Err(EngineError::NotMPrimary(format!(
            "S_{n}·S is not m-primary; N = {n} is too small for this ring"
        )));
    }
    let mut report = core_monte_carlo(&target, opts)?;
    report.target = format!("grcore(S_>={n})");
    Ok(report)
}

/// Core via the colon formula `core(I) = J^{r+1} : I^r`, valid over the
/// rationals for Gorenstein rings.  The reduction number of `J` is
/// recomputed against `i` itself (the certificate may have been issued for
/// a different base), and the exponent is raised until the colon value
/// stabilizes.
pub fn core_colon(
    i: &Ideal,
    cert: &ReductionCertificate,
    opts: &McOptions,
) -> Result<CoreReport> {
    let ring = i.ring().clone();
    if ring.field().characteristic() != 0 {
        return Err(EngineError::CharZeroOnly(
            "the colon formula for cores is only certified over the rationals".to_string(),
        ));
    }
    let gr = gorenstein_report(&ring, opts.seed)?.ok_or_else(|| {
        EngineError::NotCertifiedCm(
            "the colon formula requires a Cohen-Macaulay certificate".to_string(),
        )
    })?;
    if !gr.gorenstein {
        return Err(EngineError::Hypothesis(
            "the colon formula is only certified for Gorenstein rings".to_string(),
        ));
    }

    let mut notes = Vec::new();
    let j = cert.ideal();
    if !cert.base().equals(i)? {
        notes.push(
            "certificate was issued for a different base; reduction number recomputed".to_string(),
        );
    }
    let Some(r0) = reduction_number(j, i, opts.r_max)? else {
        return Err(EngineError::ReductionNumberOverflow { bound: opts.r_max });
    };

    let colon_power = |r: u32| -> Result<Ideal> {
        let numerator = j.power(r + 1)?;
        numerator.colon(&i.power(r)?)
    };
    let mut r = r0;
    let mut value = colon_power(r)?;
    loop {
        let next = colon_power(r + 1)?;
        if next.equals(&value)? {
            break;
        }
        if r >= opts.r_max {
            return Err(EngineError::NotStabilized {
                samples: r as usize,
            });
        }
        value = next;
        r += 1;
    }
    notes.push(format!(
        "colon value stabilized at exponent {r} (reduction number {r0})"
    ));

    let result = Ideal::new_affine(ring.clone(), minimal_quotient_generators(&value)?);
    let table = dims_table(&result, table_bound(i)?)?;
    Ok(CoreReport {
        target: format!("core{}", describe_target(i)),
        mode: Mode::Colon,
        result,
        certificates: alloc::vec![cert.clone()],
        max_reduction_number: cert.reduction_number(),
        stabilization: None,
        colon_exponent: Some(r),
        candidate: None,
        verdict: None,
        dimension_table: table,
        notes,
    })
}

/// Partial derivative with respect to variable `i` (weighted-homogeneous in,
/// weighted-homogeneous out).  Terms whose exponent dies in the coefficient
/// field's characteristic vanish.
fn partial_derivative(ring: &PolyRing, f: &Polynomial, i: usize) -> Polynomial {
    let field = ring.field();
    let weights = ring.weights();
    let mut terms = Vec::new();
    for t in f.terms() {
        let e = t.mono.exponents()[i];
        if e == 0 {
            continue;
        }
        let coeff = field.mul(&t.coeff, &field.from_i64(i64::from(e)));
        if coeff.is_zero() {
            continue;
        }
        let mut exps = t.mono.exponents().to_vec();
        exps[i] -= 1;
        terms.push(Term {
            coeff,
            mono: Monomial::new(exps, weights),
        });
    }
    ring.from_terms(terms)
}

/// Decides reducedness when a guard exists: `Some(true/false)` for rings cut
/// out by at most one relation (Jacobian criterion for hypersurfaces over a
/// perfect field: `f` squarefree iff the singular locus has smaller
/// dimension), `None` when no guard applies.
pub fn reduced_guard(ring: &Arc<PresentedRing>) -> Result<Option<bool>> {
    ring.ensure_nonzero()?;
    match ring.relations() {
        [] => Ok(Some(true)),
        [f] => {
            let ambient = ring.ambient();
            let partials: Vec<Polynomial> = (0..ambient.nvars())
                .map(|i| partial_derivative(ambient, f, i))
                .collect();
            let jacobian = Ideal::new(ring.clone(), partials)?;
            if jacobian.is_unit()? {
                // Smooth hypersurface: certainly reduced.
                return Ok(Some(true));
            }
            let singular_dim = ideal_quotient_series(&jacobian)?.dimension();
            Ok(Some(singular_dim < ring.dimension()?))
        }
        _ => Ok(None),
    }
}

/// Checks the power formula for standard graded reduced Cohen-Macaulay
/// rings: `core(m^N) = m^{Nd+a+1}` with `d = dim R` and `a` the a-invariant.
///
/// `reduced_asserted` is the caller's claim that the ring is reduced; it is
/// cross-examined by [`reduced_guard`] whenever a guard exists.  The verdict
/// compares the candidate against a stabilized Monte-Carlo intersection, and
/// `Refuted` is only produced from a re-verified excluding reduction.
pub fn verify_standard_formula(
    ring: &Arc<PresentedRing>,
    n: u64,
    reduced_asserted: bool,
    opts: &McOptions,
) -> Result<CoreReport> {
    ring.ensure_nonzero()?;
    if !ring.is_standard_graded() {
        return Err(EngineError::Hypothesis(
            "the power formula applies to standard-graded rings only".to_string(),
        ));
    }
    if !reduced_asserted {
        return Err(EngineError::Hypothesis(
            "the power formula requires a reduced ring, and the caller did not assert reducedness"
                .to_string(),
        ));
    }
    let mut notes = Vec::new();
    match reduced_guard(ring)? {
        Some(true) => notes.push("reducedness verified by the hypersurface guard".to_string()),
        Some(false) => {
            return Err(EngineError::Hypothesis(
                "the defining hypersurface is not squarefree: the ring is not reduced".to_string(),
            ))
        }
        None => notes.push(
            "reducedness asserted by the caller (no guard for multi-relation presentations)"
                .to_string(),
        ),
    }
    let CmVerdict::Certified(_) = cm_certificate(ring, opts.seed)? else {
        return Err(EngineError::NotCertifiedCm(
            "the power formula requires a Cohen-Macaulay certificate".to_string(),
        ));
    };
    if ring.field().is_small() {
        notes.push(
            "small coefficient field: sampled reductions may miss generic behaviour".to_string(),
        );
    }

    let d = ring.dimension()? as i64;
    let a = ring.a_invariant()?;
    let exponent = n as i64 * d + a + 1;
    if exponent < 1 {
        return Err(EngineError::Hypothesis(format!(
            "formula exponent Nd+a+1 = {exponent} is not positive"
        )));
    }
    let candidate = Ideal::maximal(ring.clone()).and_then(|m| m.power(exponent as u32))?;

    let target = Ideal::equal_degree(ring.clone(), n)?;
    let fold = mc_fold(&target, opts)?;

    // Direction one: the candidate must lie inside every sampled reduction
    // (a failure here refutes `candidate ⊆ core`, witnessed concretely).
    let mut refutation: Option<(usize, Polynomial)> = None;
    'search: for g in candidate.gens() {
        if fold.result.contains_poly(g)? {
            continue;
        }
        for (idx, cert) in fold.certificates.iter().enumerate() {
            if !cert.ideal().contains_poly(g)? {
                cert.reverify()?;
                let fresh = fresh_copy(cert.ideal());
                if fresh.contains_poly(g)? {
                    return Err(EngineError::Internal(
                        "refutation recheck disagreed with the certificate".to_string(),
                    ));
                }
                refutation = Some((idx, g.clone()));
                break 'search;
            }
        }
        return Err(EngineError::Internal(
            "candidate generator escaped the intersection but no sample excludes it".to_string(),
        ));
    }

    let verdict = if let Some((idx, witness)) = refutation {
        let e = exponent;
        Verdict::Refuted {
            witness,
            violated: format!(
                "m^{e} is not contained in verified reduction #{idx}, so m^{e} ⊄ core(m^{n})"
            ),
        }
    } else if !fold.evidence.stabilized {
        Verdict::Inconclusive {
            reason: format!(
                "no stabilization within {} samples",
                fold.evidence.samples_used
            ),
        }
    } else if !candidate.contains(&fold.result)? {
        Verdict::Inconclusive {
            reason: "stabilized intersection strictly exceeds m^{Nd+a+1}; more samples may \
                     shrink it"
                .to_string(),
        }
    } else {
        // candidate ⊆ every sample and intersection ⊆ candidate: equality.
        if !fold.result.contains(&candidate)? {
            return Err(EngineError::Internal(
                "candidate inside every sample but not inside their intersection".to_string(),
            ));
        }
        Verdict::Consistent
    };

    let table = dims_table(&fold.result, table_bound(&target)?)?;
    Ok(CoreReport {
        target: format!("core(m^{n})"),
        mode: Mode::MonteCarlo,
        result: fold.result,
        certificates: fold.certificates,
        max_reduction_number: fold.max_r,
        stabilization: Some(fold.evidence),
        colon_exponent: None,
        candidate: Some(candidate),
        verdict: Some(verdict),
        dimension_table: table,
        notes,
    })
}

/// The sandwich check for graded cores over weighted-graded Gorenstein (or
/// at least Cohen-Macaulay) rings.
#[derive(Debug, Clone)]
pub struct SandwichReport {
    pub graded_core: CoreReport,
    /// `k0 = Nd + a + 1`, the truncation index of the lower bound.
    pub k0: u64,
    /// `S_{>=k0}`.
    pub lower: Ideal,
    /// `S_{>=k0}` plus the pieces `S_{k0-1-i}` for the semigroup gaps `i`.
    pub upper: Ideal,
    /// The gap degrees `i` (with `[S]_i = 0`) that contribute pieces.
    pub gap_degrees: Vec<u64>,
    pub lower_contained: bool,
    pub upper_contains: bool,
    pub level: bool,
    pub gorenstein: bool,
    /// For level rings equality with the upper bound is predicted; `None`
    /// when the ring is not level.
    pub equality_with_upper: Option<bool>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

/// Verifies `S_{>=k0} ⊆ grcore(S_{>=N}) ⊆ S_{>=k0} + Σ_{gaps i} S_{k0-1-i}`
/// and, for level rings, equality with the upper bound.
pub fn verify_sandwich(
    ring: &Arc<PresentedRing>,
    n: u64,
    opts: &McOptions,
) -> Result<SandwichReport> {
    let gr = gorenstein_report(ring, opts.seed)?.ok_or_else(|| {
        EngineError::NotCertifiedCm(
            "the sandwich bounds require a Cohen-Macaulay certificate".to_string(),
        )
    })?;
    let mut notes = Vec::new();
    if ring.field().is_small() {
        notes.push(
            "small coefficient field: sampled reductions may miss generic behaviour".to_string(),
        );
    }

    let d = ring.dimension()? as i64;
    let a = ring.a_invariant()?;
    let k0_signed = n as i64 * d + a + 1;
    if k0_signed < 1 {
        return Err(EngineError::Hypothesis(format!(
            "lower-bound index Nd+a+1 = {k0_signed} is not positive"
        )));
    }
    let k0 = k0_signed as u64;

    let graded_core = grcore_monte_carlo(ring, n, opts)?;
    let lower = Ideal::truncation(ring.clone(), k0)?;

    // Gap degrees i >= 1 with [S]_i = 0 whose reflected piece S_{k0-1-i} is
    // still in positive degree.
    let mut gap_degrees = Vec::new();
    let mut extra_pieces: Vec<Polynomial> = Vec::new();
    for i in 1..k0 {
        let reflected = k0 as i64 - 1 - i as i64;
        if reflected < 1 {
            break;
        }
        if ring.piece_dim(i) == 0 {
            gap_degrees.push(i);
            extra_pieces.extend(ring.piece_basis(reflected as u64));
        }
    }
    let upper = if extra_pieces.is_empty() {
        lower.clone()
    } else {
        lower.sum(&Ideal::new(ring.clone(), extra_pieces)?)?
    };

    let lower_contained = graded_core.result.contains(&lower)?;
    let upper_contains = upper.contains(&graded_core.result)?;
    let equality_with_upper = if gr.level {
        Some(graded_core.result.equals(&upper)?)
    } else {
        None
    };

    let stabilized = graded_core
        .stabilization
        .as_ref()
        .is_some_and(|e| e.stabilized);

    let verdict = if !lower_contained {
        // A provable refutation needs a generator of the lower bound that a
        // verified reduction of S_{>=N} excludes.
        let truncation = Ideal::truncation(ring.clone(), n)?;
        let mut refuted: Option<(Polynomial, usize)> = None;
        'lower: for g in lower.gens() {
            if graded_core.result.contains_poly(g)? {
                continue;
            }
            for (idx, cert) in graded_core.certificates.iter().enumerate() {
                if !cert.ideal().contains_poly(g)? {
                    cert.reverify()?;
                    if fresh_copy(cert.ideal()).contains_poly(g)? {
                        return Err(EngineError::Internal(
                            "sandwich refutation recheck disagreed".to_string(),
                        ));
                    }
                    if reduction_number(cert.ideal(), &truncation, opts.r_max)?.is_none() {
                        notes.push(
                            "an excluding sample is not a reduction of the truncation itself; \
                             exclusion not conclusive"
                                .to_string(),
                        );
                        continue;
                    }
                    refuted = Some((g.clone(), idx));
                    break 'lower;
                }
            }
        }
        match refuted {
            Some((witness, idx)) => Verdict::Refuted {
                witness,
                violated: format!(
                    "S_>={k0} is not contained in verified reduction #{idx} of the truncation, \
                     so the lower bound fails"
                ),
            },
            None => Verdict::Inconclusive {
                reason: "lower bound not contained in the intersection, but no sample provides \
                         a conclusive exclusion"
                    .to_string(),
            },
        }
    } else if !stabilized {
        Verdict::Inconclusive {
            reason: format!(
                "no stabilization within {} samples",
                graded_core
                    .stabilization
                    .as_ref()
                    .map_or(0, |e| e.samples_used)
            ),
        }
    } else if !upper_contains {
        Verdict::Inconclusive {
            reason: "stabilized intersection exceeds the predicted upper bound; either sampling \
                     missed a reduction or the bound fails here"
                .to_string(),
        }
    } else if gr.level && equality_with_upper == Some(false) {
        Verdict::Inconclusive {
            reason: "level ring: equality with the upper bound is predicted but the stabilized \
                     intersection is strictly smaller"
                .to_string(),
        }
    } else {
        Verdict::Consistent
    };

    Ok(SandwichReport {
        graded_core,
        k0,
        lower,
        upper,
        gap_degrees,
        lower_contained,
        upper_contains,
        level: gr.level,
        gorenstein: gr.gorenstein,
        equality_with_upper,
        verdict,
        notes,
    })
}

/// An explicit element of the graded core outside the core, together with
/// an independently certified reduction excluding it (when one is found).
#[derive(Debug, Clone)]
pub struct GapWitness {
    pub poly: Polynomial,
    /// Membership in the graded core, rechecked from scratch.
    pub in_graded_core: bool,
    /// Exclusion from the core, rechecked from scratch.
    pub outside_core: bool,
    /// A certified (not necessarily minimal) reduction of `S_{>=N}` that
    /// does not contain the witness — an unconditional proof of exclusion.
    pub excluding_reduction: Option<ReductionCertificate>,
}

/// The dimension-one equality criterion: `core(S_{>=N}) = grcore(S_{>=N})`
/// exactly when the ring has a degree-one nonzerodivisor.
#[derive(Debug, Clone)]
pub struct Dim1Report {
    pub nzd_degree_one: bool,
    pub nzd_witness: Option<Polynomial>,
    /// Colon-route core of the truncation.
    pub core: CoreReport,
    /// Monte-Carlo graded core.
    pub graded_core: CoreReport,
    pub equal: bool,
    /// True when the observed (in)equality contradicts the criterion.
    pub theorem_violation: bool,
    pub witness: Option<GapWitness>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

/// Runs the dimension-one criterion for `S_{>=n}` in a one-dimensional
/// graded ring over the rationals (the core side uses the colon formula,
/// so its Gorenstein gate applies).
pub fn verify_dim1(ring: &Arc<PresentedRing>, n: u64, opts: &McOptions) -> Result<Dim1Report> {
    if ring.dimension()? != 1 {
        return Err(EngineError::Hypothesis(
            "the equality criterion is stated for one-dimensional rings".to_string(),
        ));
    }
    let mut notes = Vec::new();

    // Degree-one nonzerodivisor search: random combinations of [S]_1 with
    // exact annihilator checks.
    let mut nzd_witness = None;
    if ring.piece_dim(1) > 0 {
        let basis = ring.piece_basis(1);
        for t in 0..NZD_TRIALS {
            let mut rng = ChaCha12Rng::seed_from_u64(derive_seed(opts.seed, NZD_SALT + t));
            let c = random_combination(ring, &basis, &mut rng);
            if c.is_zero() {
                continue;
            }
            let candidate = Ideal::new(ring.clone(), alloc::vec![c.clone()])?;
            if Ideal::zero(ring.clone()).colon(&candidate)?.is_zero() {
                nzd_witness = Some(c);
                break;
            }
        }
        if nzd_witness.is_none() {
            notes.push(format!(
                "no degree-one nonzerodivisor in {NZD_TRIALS} random draws; treating [S]_1 as \
                 zerodivisors only"
            ));
        }
    }
    let nzd_degree_one = nzd_witness.is_some();

    let graded_core = grcore_monte_carlo(ring, n, opts)?;
    let truncation = Ideal::truncation(ring.clone(), n)?;

    // The colon core from the first sampled reduction, cross-checked
    // against further independent reductions: the value must not depend on
    // the choice.
    let core = core_colon(&truncation, &graded_core.certificates[0], opts)?;
    let independent = graded_core
        .certificates
        .iter()
        .skip(1)
        .take(INDEPENDENT_COLON_CHECKS);
    let mut cross_checked = 0usize;
    for cert in independent {
        if cert.ideal().equals(graded_core.certificates[0].ideal())? {
            continue;
        }
        let other = core_colon(&truncation, cert, opts)?;
        if !other.result.equals(&core.result)? {
            return Err(EngineError::Internal(
                "colon core depends on the choice of reduction".to_string(),
            ));
        }
        cross_checked += 1;
    }
    if cross_checked > 0 {
        notes.push(format!(
            "colon core agrees across {} independent reductions",
            cross_checked + 1
        ));
    } else {
        notes.push("all sampled reductions coincide; no independent colon cross-check".to_string());
    }

    let equal = core.result.equals(&graded_core.result)?;
    let theorem_violation = equal != nzd_degree_one;

    // When the cores differ, exhibit the lowest-degree graded-core basis
    // element outside the core and try to certify a reduction excluding it.
    let witness = if equal {
        None
    } else {
        let mut found: Option<Polynomial> = None;
        for g in graded_core.result.gb()?.elements() {
            if !core.result.contains_poly(g)? {
                found = Some(g.clone());
                break;
            }
        }
        match found {
            None => {
                notes.push(
                    "cores differ as ideals, yet every graded-core basis element lies in the \
                     core; the gap sits in the other direction"
                        .to_string(),
                );
                None
            }
            Some(w) => {
                let in_graded_core = fresh_copy(&graded_core.result).contains_poly(&w)?;
                let outside_core = !fresh_copy(&core.result).contains_poly(&w)?;
                let excluding = search_excluding_reduction(ring, &truncation, n, &w, opts)?;
                if excluding.is_none() {
                    notes.push(
                        "no explicit excluding reduction found within the search budget; the \
                         exclusion rests on the colon value alone"
                            .to_string(),
                    );
                }
                Some(GapWitness {
                    poly: w,
                    in_graded_core,
                    outside_core,
                    excluding_reduction: excluding,
                })
            }
        }
    };

    let stabilized = graded_core
        .stabilization
        .as_ref()
        .is_some_and(|e| e.stabilized);
    let verdict = if !stabilized {
        Verdict::Inconclusive {
            reason: "graded-core intersection did not stabilize".to_string(),
        }
    } else if !theorem_violation {
        let witness_sound = match &witness {
            Some(gw) => gw.in_graded_core && gw.outside_core,
            None => true,
        };
        if witness_sound {
            Verdict::Consistent
        } else {
            Verdict::Inconclusive {
                reason: "witness recheck disagreed with the computed cores".to_string(),
            }
        }
    } else if !equal && nzd_degree_one {
        // An inequality despite a degree-one nonzerodivisor refutes the
        // criterion — but only a certified excluding reduction makes the
        // inequality unconditional.
        match &witness {
            Some(gw) if gw.excluding_reduction.is_some() && gw.in_graded_core => {
                Verdict::Refuted {
                    witness: gw.poly.clone(),
                    violated: format!(
                        "graded core exceeds core for S_>={n} although a degree-one \
                         nonzerodivisor exists"
                    ),
                }
            }
            _ => Verdict::Inconclusive {
                reason: "cores appear different despite a degree-one nonzerodivisor, but no \
                         certified excluding reduction was found"
                    .to_string(),
            },
        }
    } else {
        // equal but no degree-one nonzerodivisor: equality rests on the
        // Monte-Carlo side, which only ever over-approximates.
        Verdict::Inconclusive {
            reason: "cores appear equal although no degree-one nonzerodivisor was found; the \
                     graded core may shrink with more samples"
                .to_string(),
        }
    };

    Ok(Dim1Report {
        nzd_degree_one,
        nzd_witness,
        core,
        graded_core,
        equal,
        theorem_violation,
        witness,
        verdict,
        notes,
    })
}

/// Searches for a certified reduction of `S_{>=n}` that excludes `w`.  The
/// catalog drawn from: `(s0 + s1, q)` with `s0` a nonzero combination of
/// `[S]_n`, `s1` a nonzero combination of `[S]_{n+1}` (the perturbation that
/// evades `w`), and `q` a combination from one higher piece (the closure
/// generator that makes the pair an honest reduction).
fn search_excluding_reduction(
    ring: &Arc<PresentedRing>,
    truncation: &Ideal,
    n: u64,
    w: &Polynomial,
    opts: &McOptions,
) -> Result<Option<ReductionCertificate>> {
    let wmax = weight_max(ring);
    let low = ring.piece_basis(n);
    let bump = ring.piece_basis(n + 1);
    if low.is_empty() || bump.is_empty() {
        return Ok(None);
    }
    for trial in 0..WITNESS_TRIALS {
        let mut rng = ChaCha12Rng::seed_from_u64(derive_seed(opts.seed, WITNESS_SALT + trial));
        let s0 = random_combination(ring, &low, &mut rng);
        let s1 = random_combination(ring, &bump, &mut rng);
        if s0.is_zero() || s1.is_zero() {
            continue;
        }
        let p = ring.ambient().add(&s0, &s1);
        for extra in 0..=wmax {
            let piece = ring.piece_basis(n + 2 + extra);
            if piece.is_empty() {
                continue;
            }
            let q = random_combination(ring, &piece, &mut rng);
            if q.is_zero() {
                continue;
            }
            let candidate = Ideal::new_affine(ring.clone(), alloc::vec![p.clone(), q]);
            let Ok(cert) = certify_reduction(
                truncation,
                candidate,
                opts.r_max,
                derive_seed(opts.seed, WITNESS_SALT + trial),
            ) else {
                continue;
            };
            if !cert.ideal().contains_poly(w)? {
                cert.reverify()?;
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

/// One field's outcome within a characteristic scan.
#[derive(Debug, Clone)]
pub enum ScanOutcome {
    Computed {
        /// Rendered reduced basis of the graded core (canonical per field).
        basis: Vec<String>,
        dims: Vec<(u64, usize)>,
        stabilized: bool,
        max_reduction_number: u32,
    },
    Rejected {
        reason: String,
    },
}

#[derive(Debug, Clone)]
pub struct CharScanRow {
    pub field: FieldSpec,
    pub outcome: ScanOutcome,
}

#[derive(Debug, Clone)]
pub struct CharScanReport {
    /// Field-independent description of the scanned ring.
    pub ring: String,
    pub n: u64,
    pub rows: Vec<CharScanRow>,
    /// All computed rows agree on rendered basis and dimensions.
    pub agreement: bool,
    pub notes: Vec<String>,
}

/// Runs the graded core over several coefficient fields and compares.  A
/// failure in one field becomes a `Rejected` row; the scan always completes.
pub fn char_scan(
    recipe: &crate::constructions::RingRecipe,
    n: u64,
    primes: &[u64],
    include_rationals: bool,
    opts: &McOptions,
) -> Result<CharScanReport> {
    let mut fields: Vec<FieldSpec> = Vec::new();
    let mut rows: Vec<CharScanRow> = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    for &p in primes {
        match FieldSpec::prime(p) {
            Ok(f) => fields.push(f),
            Err(e) => notes.push(format!("skipping characteristic {p}: {e}")),
        }
    }
    if include_rationals {
        fields.push(FieldSpec::rationals());
    }

    for field in fields {
        if field.is_small() {
            let label = match field {
                FieldSpec::Prime(p) => format!("F_{p}"),
                FieldSpec::Rationals => "QQ".to_string(),
            };
            notes.push(format!(
                "field {label} is small; sampled reductions may miss generic behaviour"
            ));
        }
        let outcome = match scan_one(recipe, &field, n, opts) {
            Ok(o) => o,
            Err(e) => ScanOutcome::Rejected {
                reason: e.to_string(),
            },
        };
        rows.push(CharScanRow { field, outcome });
    }

    type ComputedRow<'a> = (&'a Vec<String>, &'a Vec<(u64, usize)>);
    let computed: Vec<ComputedRow> = rows
        .iter()
        .filter_map(|r| match &r.outcome {
            ScanOutcome::Computed { basis, dims, .. } => Some((basis, dims)),
            ScanOutcome::Rejected { .. } => None,
        })
        .collect();
    let agreement = computed
        .windows(2)
        .all(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1);
    if computed.len() < 2 {
        notes.push("fewer than two fields computed; agreement is vacuous".to_string());
    }

    Ok(CharScanReport {
        ring: recipe.describe(),
        n,
        rows,
        agreement,
        notes,
    })
}

fn scan_one(
    recipe: &crate::constructions::RingRecipe,
    field: &FieldSpec,
    n: u64,
    opts: &McOptions,
) -> Result<ScanOutcome> {
    let ring = recipe.build(field, opts.seed)?;
    let report = grcore_monte_carlo(&ring, n, opts)?;
    Ok(ScanOutcome::Computed {
        basis: rendered_basis(&report.result)?,
        dims: report.dimension_table.clone(),
        stabilized: report
            .stabilization
            .as_ref()
            .is_some_and(|e| e.stabilized),
        max_reduction_number: report.max_reduction_number,
    })
}
