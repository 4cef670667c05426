//! Hilbert series and the graded invariants that follow from them.
//!
//! For `R = k[x]/Q` with weights `w_i`, the series is held as
//! `H_R(t) = N(t) / Π(1 - t^{w_i})` with an integer numerator computed from
//! the lead ideal of `Q` by the pivot recursion
//! `N(I + (m)) = N(I) - t^{deg m} · N(I : m)`.
//!
//! Derived data: Krull dimension (co-vanishing order of `N` at `t = 1`),
//! a-invariant (`deg N - Σw_i`), normalized multiplicity, per-degree
//! dimensions, and — for Cohen-Macaulay rings — the graded canonical module
//! dimensions via `H_ω(t) = (-1)^d · H_R(1/t)`, giving top local cohomology
//! dimensions by duality.
//!
//! Cohen-Macaulayness itself is certified by random homogeneous systems of
//! parameters: a uniform-degree hsop `θ` with
//! `N_{R/θ} = N_R · (1 - t^D)^d` exactly is a regular sequence, which
//! *proves* CM; three independent valid hsops that all fail the equality
//! yield a (morally certain) "probably not CM".

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::derive_seed;
use crate::ideal::Ideal;
use crate::linalg;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::PresentedRing;
use crate::{EngineError, Result};

// ----- integer polynomials in t -----

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = a.len().max(b.len());
    let mut out = alloc::vec![0i64; n];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

pub(crate) fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_shift(a: &[i64], by: usize) -> Vec<i64> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![0i64; by];
    out.extend_from_slice(a);
    out
}

/// `1 - t^d`.
pub(crate) fn one_minus_t_pow(d: u64) -> Vec<i64> {
    let mut v = alloc::vec![0i64; d as usize + 1];
    v[0] = 1;
    v[d as usize] -= 1; // d = 0 gives the zero polynomial (1 - 1)
    trim(v)
}

fn eval_at_one(a: &[i64]) -> i64 {
    a.iter().sum()
}

/// Divides by `(1 - t)` exactly (caller ensures the value at 1 vanishes).
fn divide_by_one_minus_t(a: &[i64]) -> Vec<i64> {
    // If a = (1-t)·m then m_i = Σ_{j<=i} a_j.
    let mut acc = 0i64;
    let mut out = Vec::with_capacity(a.len());
    for &x in a {
        acc += x;
        out.push(acc);
    }
    debug_assert_eq!(out.last().copied().unwrap_or(0), 0);
    out.pop();
    trim(out)
}

// ----- numerator of a monomial quotient -----

/// Removes duplicates and non-minimal generators.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(Monomial::degree);
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator `N` with `H_{S/(gens)} = N / Π(1 - t^{w_i})` for a monomial
/// ideal of the ambient weighted polynomial ring.
fn monomial_numerator(gens: Vec<Monomial>, weights: &[u64]) -> Vec<i64> {
    let gens = minimalize(gens);
    numerator_rec(gens, weights)
}

fn numerator_rec(gens: Vec<Monomial>, weights: &[u64]) -> Vec<i64> {
    if gens.is_empty() {
        return alloc::vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new(); // unit ideal: the quotient is zero
    }
    let pairwise_coprime = (0..gens.len())
        .all(|i| (i + 1..gens.len()).all(|j| gens[i].coprime_to(&gens[j])));
    if pairwise_coprime {
        let mut acc = alloc::vec![1i64];
        for m in &gens {
            acc = poly_mul(&acc, &one_minus_t_pow(m.degree()));
        }
        return acc;
    }
    // Pivot: split off the largest-degree generator m (deterministic after
    // minimalize's sort) and recurse on I and (I : m).
    let mut rest = gens;
    let m = rest.pop().expect("nonempty");
    let n_rest = numerator_rec(rest.clone(), weights);
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|g| g.gcd(&m, weights).divide_into(g))
        .collect();
    let n_colon = numerator_rec(minimalize(colon), weights);
    poly_sub(&n_rest, &poly_shift(&n_colon, m.degree() as usize))
}

// ----- the series object -----

/// A Hilbert series `N(t) / Π(1 - t^{w_i})` with integer numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<i64>,
    weights: Vec<u64>,
}

impl HilbertSeries {
    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Zero numerator = series of the zero ring.
    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Order of vanishing of the numerator at `t = 1`.
    fn vanishing_order(&self) -> usize {
        let mut n = self.numerator.clone();
        let mut order = 0;
        while !n.is_empty() && eval_at_one(&n) == 0 {
            n = divide_by_one_minus_t(&n);
            order += 1;
        }
        order
    }

    /// Krull dimension (undefined on the zero series; caller guards).
    pub fn dimension(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.weights.len() - self.vanishing_order()
    }

    /// a-invariant: degree of the series as a rational function,
    /// `deg N - Σ w_i`.
    pub fn a_invariant(&self) -> i64 {
        debug_assert!(!self.is_zero());
        (self.numerator.len() as i64 - 1) - self.weights.iter().map(|&w| w as i64).sum::<i64>()
    }

    /// Normalized multiplicity `M(1) / Π w_i` where `M = N / (1-t)^{n-d}`,
    /// plus a flag marking non-standard gradings (where the normalization
    /// convention matters).
    pub fn multiplicity(&self) -> (Ratio<i64>, bool) {
        debug_assert!(!self.is_zero());
        let mut m = self.numerator.clone();
        for _ in 0..self.vanishing_order() {
            m = divide_by_one_minus_t(&m);
        }
        let wprod: i64 = self.weights.iter().map(|&w| w as i64).product();
        let weighted = self.weights.iter().any(|&w| w != 1);
        (Ratio::new(eval_at_one(&m), wprod), weighted)
    }

    /// Per-degree dimensions `dim [R]_d` for `d = 0..=hi`.
    pub fn dims_up_to(&self, hi: u64) -> Vec<u64> {
        let coeffs = self.expand_raw(hi);
        coeffs
            .iter()
            .map(|&c| {
                assert!(c >= 0, "negative Hilbert coefficient: broken series");
                c as u64
            })
            .collect()
    }

    pub fn dim_at(&self, d: u64) -> u64 {
        self.dims_up_to(d)[d as usize]
    }

    /// Raw expansion of `numerator / Π(1 - t^{w_i})` (may be negative for
    /// non-quotient numerators such as the duality computation).
    fn expand_raw(&self, hi: u64) -> Vec<i64> {
        let n = hi as usize + 1;
        let mut c = alloc::vec![0i64; n];
        for (i, &x) in self.numerator.iter().enumerate() {
            if i < n {
                c[i] = x;
            }
        }
        for &w in &self.weights {
            let w = w as usize;
            for i in w..n {
                c[i] += c[i - w];
            }
        }
        c
    }

    /// Graded canonical module dimensions `dim [ω]_j` for `j = lo..=hi`,
    /// via `H_ω(t) = (-1)^d H_R(1/t)`.  Meaningful for Cohen-Macaulay rings;
    /// the caller is expected to hold a CM certificate.
    pub fn omega_dims(&self, lo: i64, hi: i64) -> Vec<(i64, u64)> {
        debug_assert!(!self.is_zero());
        let d = self.dimension();
        let n = self.weights.len();
        let deg_n = self.numerator.len() as i64 - 1;
        let sum_w: i64 = self.weights.iter().map(|&w| w as i64).sum();
        let shift = sum_w - deg_n; // H_ω = sign · t^shift · Ñ/Π(1-t^w)
        let sign = if (n + d).is_multiple_of(2) { 1 } else { -1 };
        let reversed: Vec<i64> = self.numerator.iter().rev().copied().collect();
        let tilde = HilbertSeries {
            numerator: trim(reversed),
            weights: self.weights.clone(),
        };
        let max_idx = hi - shift;
        let expansion = if max_idx >= 0 {
            tilde.expand_raw(max_idx as u64)
        } else {
            Vec::new()
        };
        (lo..=hi)
            .map(|j| {
                let idx = j - shift;
                let raw = if idx < 0 {
                    0
                } else {
                    expansion.get(idx as usize).copied().unwrap_or(0)
                };
                let v = sign * raw;
                assert!(v >= 0, "negative canonical-module dimension at degree {j}");
                (j, v as u64)
            })
            .collect()
    }

    /// `dim [H^d_m(R)]_i` for CM `R`: by graded duality this is
    /// `dim [ω]_{-i}`.
    pub fn top_cohomology_dims(&self, lo: i64, hi: i64) -> Vec<(i64, u64)> {
        let omega = self.omega_dims(-hi, -lo);
        omega.into_iter().rev().map(|(j, v)| (-j, v)).collect()
    }
}

/// Series of the ring itself (cached on the ring).
pub fn quotient_series(ring: &PresentedRing) -> &HilbertSeries {
    if ring.series_cache().get().is_none() {
        let leads = ring.q_basis().leading_monomials();
        let numerator = monomial_numerator(leads, ring.weights());
        let series = HilbertSeries {
            numerator,
            weights: ring.weights().to_vec(),
        };
        let _ = ring
            .series_cache()
            .set(alloc::boxed::Box::new(series));
    }
    ring.series_cache().get().expect("just set")
}

/// Series of `R/I` (quotient by an ideal of the presented ring).
pub fn ideal_quotient_series(ideal: &Ideal) -> Result<HilbertSeries> {
    let leads = ideal.gb()?.leading_monomials();
    Ok(HilbertSeries {
        numerator: monomial_numerator(leads, ideal.ring().weights()),
        weights: ideal.ring().weights().to_vec(),
    })
}

impl PresentedRing {
    pub fn series(&self) -> &HilbertSeries {
        quotient_series(self)
    }

    pub fn dimension(&self) -> Result<usize> {
        self.ensure_nonzero()?;
        Ok(self.series().dimension())
    }

    pub fn a_invariant(&self) -> Result<i64> {
        self.ensure_nonzero()?;
        Ok(self.series().a_invariant())
    }

    pub fn multiplicity(&self) -> Result<(Ratio<i64>, bool)> {
        self.ensure_nonzero()?;
        Ok(self.series().multiplicity())
    }

    /// `dim_k [R]_d` straight from the series.
    pub fn piece_dim(&self, d: u64) -> u64 {
        self.series().dim_at(d)
    }
}

// ----- Cohen-Macaulay certificates -----

/// Upper bound on hsop degree search above `max(w)`.
const HSOP_DEGREE_SPAN: u64 = 24;
/// Random tuples tried per candidate degree.
const HSOP_TRIALS_PER_DEGREE: u32 = 20;
/// Independent valid-hsop series mismatches that settle "probably not CM".
const CM_FAILURE_QUORUM: u32 = 3;

/// Evidence that a ring is Cohen-Macaulay: an explicit homogeneous system of
/// parameters of uniform degree that is a regular sequence, verified by the
/// exact factorization of the Hilbert series.
#[derive(Debug, Clone)]
pub struct CmCertificate {
    /// The hsop elements (empty for Artinian rings, where CM is automatic).
    pub hsop: Vec<Polynomial>,
    /// Common degree of the hsop elements (0 when Artinian).
    pub hsop_degree: u64,
    /// Random tuples drawn before success.
    pub trials: u32,
    /// Numerator of `H_{R/(θ)}` — equals `N_R · (1-t^D)^d` by construction.
    pub artinian_numerator: Vec<i64>,
}

#[derive(Debug, Clone)]
pub enum CmVerdict {
    /// Proof of CM-ness.
    Certified(CmCertificate),
    /// `failures` independent valid hsops each violated the series
    /// factorization; for an actual CM ring this cannot happen even once.
    ProbablyNot { failures: u32, hsop_degree: u64 },
}

/// Searches for a CM certificate with seeded randomness.
pub fn cm_certificate(ring: &Arc<PresentedRing>, seed: u64) -> Result<CmVerdict> {
    ring.ensure_nonzero()?;
    let d = ring.dimension()?;
    if d == 0 {
        return Ok(CmVerdict::Certified(CmCertificate {
            hsop: Vec::new(),
            hsop_degree: 0,
            trials: 0,
            artinian_numerator: ring.series().numerator().to_vec(),
        }));
    }
    let wmax = ring.weights().iter().copied().max().unwrap_or(1);
    let mut failures = 0u32;
    let mut trials_total = 0u32;
    for degree in wmax..=wmax + HSOP_DEGREE_SPAN {
        let piece = ring.piece_basis(degree);
        if piece.is_empty() {
            continue;
        }
        for attempt in 0..HSOP_TRIALS_PER_DEGREE {
            let mut rng =
                ChaCha12Rng::seed_from_u64(derive_seed(seed, degree * 1009 + attempt as u64));
            trials_total += 1;
            let theta: Vec<Polynomial> = (0..d)
                .map(|_| random_combination(ring, &piece, &mut rng))
                .collect();
            if theta.iter().any(Polynomial::is_zero) {
                continue;
            }
            let j = Ideal::new(ring.clone(), theta.clone())?;
            if !j.is_m_primary()? {
                continue; // not an hsop; try another tuple
            }
            // θ is an hsop; CM ⟺ the series factorization holds for it.
            let quotient = ideal_quotient_series(&j)?;
            let mut expected = ring.series().numerator().to_vec();
            for _ in 0..d {
                expected = poly_mul(&expected, &one_minus_t_pow(degree));
            }
            if quotient.numerator() == expected.as_slice() {
                return Ok(CmVerdict::Certified(CmCertificate {
                    hsop: theta,
                    hsop_degree: degree,
                    trials: trials_total,
                    artinian_numerator: expected,
                }));
            }
            failures += 1;
            if failures >= CM_FAILURE_QUORUM {
                return Ok(CmVerdict::ProbablyNot {
                    failures,
                    hsop_degree: degree,
                });
            }
        }
    }
    Err(EngineError::SamplerExhausted {
        attempts: trials_total,
        what: "homogeneous system of parameters".to_string(),
    })
}

/// A random k-linear combination of a graded piece basis.
fn random_combination(
    ring: &PresentedRing,
    piece: &[Polynomial],
    rng: &mut ChaCha12Rng,
) -> Polynomial {
    let ambient = ring.ambient();
    let mut acc = ambient.zero_poly();
    for b in piece {
        let c = ring.field().random(rng);
        acc = ambient.add(&acc, &ambient.scale(b, &c));
    }
    acc
}

// ----- socle profiles and Gorenstein detection -----

/// Socle dimensions of the Artinian reduction `A = R/(θ)`, by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleProfile {
    /// `(degree, dim)` for each degree with nonzero socle.
    pub by_degree: Vec<(u64, usize)>,
    /// Total socle dimension (= Cohen-Macaulay type).
    pub total: usize,
    /// Top nonzero degree of `A` (its a-invariant).
    pub top_degree: u64,
}

#[derive(Debug, Clone)]
pub struct GorensteinReport {
    pub certificate: CmCertificate,
    pub socle: SocleProfile,
    /// Socle dimension 1 ⟺ Gorenstein (given CM).
    pub gorenstein: bool,
    /// Socle concentrated in a single degree ⟺ level.
    pub level: bool,
}

/// Computes the socle profile of `R/(θ)` for a certified hsop.
pub fn socle_profile(ring: &Arc<PresentedRing>, cert: &CmCertificate) -> Result<SocleProfile> {
    let artinian = Ideal::new(ring.clone(), cert.hsop.clone())?;
    let gb = artinian.gb()?;
    let leads = gb.leading_monomials();
    let n = ring.nvars();
    // Bound the top degree via the pure powers guaranteed by Artinian-ness.
    let mut bound = 0u64;
    for i in 0..n {
        let k = leads
            .iter()
            .filter(|m| {
                m.exponents()[i] > 0
                    && m.exponents().iter().enumerate().all(|(j, &e)| j == i || e == 0)
            })
            .map(|m| m.exponents()[i] as u64)
            .min()
            .ok_or_else(|| {
                EngineError::NotMPrimary("socle profile needs an Artinian reduction".to_string())
            })?;
        bound += (k - 1) * ring.weights()[i];
    }
    let ambient = ring.ambient();
    let field = ring.field();
    // Standard monomial bases of A by degree.
    let mut pieces: BTreeMap<u64, Vec<Monomial>> = BTreeMap::new();
    for deg in 0..=bound {
        let ms: Vec<Monomial> = ambient
            .monomials_of_degree(deg)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect();
        if !ms.is_empty() {
            pieces.insert(deg, ms);
        }
    }
    let top_degree = *pieces.keys().last().expect("degree 0 is nonempty");
    let mut by_degree = Vec::new();
    let mut total = 0usize;
    for (&deg, basis) in &pieces {
        // Stack the multiplication maps by every variable; the socle in this
        // degree is the joint kernel.
        let mut rows: Vec<Vec<crate::field::Scalar>> = Vec::new();
        for i in 0..n {
            let out_deg = deg + ring.weights()[i];
            let empty = Vec::new();
            let out_basis = pieces.get(&out_deg).unwrap_or(&empty);
            // Images of basis vectors form the columns of the map.
            let mut images: Vec<Vec<crate::field::Scalar>> = Vec::new();
            for m in basis {
                let shifted = ambient.monomial_poly(m.mul(&Monomial::variable(i, ring.weights())));
                let nf = crate::groebner::normal_form(ambient, &shifted, gb.elements());
                let coords = if out_basis.is_empty() {
                    if !nf.is_zero() {
                        return Err(EngineError::Internal(
                            "normal form escaped the graded piece".to_string(),
                        ));
                    }
                    Vec::new()
                } else {
                    coords_in(&nf, out_basis, field)?
                };
                images.push(coords);
            }
            // Transpose images (columns) into equation rows.
            for r in 0..out_basis.len() {
                rows.push(images.iter().map(|col| col[r].clone()).collect());
            }
        }
        let kernel = linalg::kernel_basis(field, &rows, basis.len());
        if !kernel.is_empty() {
            by_degree.push((deg, kernel.len()));
            total += kernel.len();
        }
    }
    Ok(SocleProfile {
        by_degree,
        total,
        top_degree,
    })
}

fn coords_in(
    f: &Polynomial,
    basis: &[Monomial],
    field: &crate::field::FieldSpec,
) -> Result<Vec<crate::field::Scalar>> {
    let mut coords = alloc::vec![field.zero(); basis.len()];
    for t in f.terms() {
        let idx = basis
            .iter()
            .position(|m| m == &t.mono)
            .ok_or_else(|| EngineError::Internal("coordinate outside basis".to_string()))?;
        coords[idx] = field.add(&coords[idx], &t.coeff);
    }
    Ok(coords)
}

/// Full Gorenstein/level analysis on top of a CM certificate.
pub fn gorenstein_report(ring: &Arc<PresentedRing>, seed: u64) -> Result<Option<GorensteinReport>> {
    match cm_certificate(ring, seed)? {
        CmVerdict::ProbablyNot { .. } => Ok(None),
        CmVerdict::Certified(certificate) => {
            let socle = socle_profile(ring, &certificate)?;
            let gorenstein = socle.total == 1;
            let level = socle.by_degree.len() == 1;
            // Consistency: a(R) = a(A) - Σ deg θ_i for a regular sequence.
            let expected_a = socle.top_degree as i64
                - certificate.hsop_degree as i64 * certificate.hsop.len() as i64;
            if expected_a != ring.a_invariant()? {
                return Err(EngineError::Internal(
                    "a-invariant mismatch between ring and Artinian reduction".to_string(),
                ));
            }
            Ok(Some(GorensteinReport {
                certificate,
                socle,
                gorenstein,
                level,
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use alloc::vec;

    fn ring(
        vars: &[(&str, u64)],
        rels: &[&str],
    ) -> Arc<PresentedRing> {
        PresentedRing::parse_ring(FieldSpec::prime(32003).unwrap(), vars, rels).unwrap()
    }

    #[test]
    fn polynomial_ring_series() {
        let r = ring(&[("x", 1), ("y", 1)], &[]);
        let s = r.series();
        assert_eq!(s.numerator(), &[1]);
        assert_eq!(s.dimension(), 2);
        assert_eq!(s.a_invariant(), -2);
        assert_eq!(s.dims_up_to(4), vec![1, 2, 3, 4, 5]);
        let (e, weighted) = s.multiplicity();
        assert_eq!(e, Ratio::new(1, 1));
        assert!(!weighted);
    }

    #[test]
    fn cusp_series_and_invariants() {
        let r = ring(&[("a", 2), ("b", 3)], &["b^2 - a^3"]);
        let s = r.series();
        // N = 1 - t^6 over (1-t^2)(1-t^3).
        assert_eq!(s.numerator(), &[1, 0, 0, 0, 0, 0, -1]);
        assert_eq!(s.dimension(), 1);
        assert_eq!(s.a_invariant(), 1); // Frobenius number of <2,3>
        assert_eq!(s.dims_up_to(7), vec![1, 0, 1, 1, 1, 1, 1, 1]);
        let (e, weighted) = s.multiplicity();
        assert_eq!(e, Ratio::new(1, 1));
        assert!(weighted);
    }

    #[test]
    fn fermat_cubic_series() {
        let r = ring(&[("x", 1), ("y", 1), ("z", 1)], &["x^3 + y^3 + z^3"]);
        let s = r.series();
        assert_eq!(s.numerator(), &[1, 0, 0, -1]);
        assert_eq!(s.dimension(), 2);
        assert_eq!(s.a_invariant(), 0);
        assert_eq!(s.multiplicity().0, Ratio::new(3, 1));
        assert_eq!(s.dims_up_to(4), vec![1, 3, 6, 9, 12]);
    }

    #[test]
    fn ideal_quotient_series_matches_piece_counts() {
        let r = ring(&[("x", 1), ("y", 1)], &[]);
        let m2 = Ideal::maximal(r.clone()).unwrap().power(2).unwrap();
        let s = ideal_quotient_series(&m2).unwrap();
        // R/m^2 has dims 1, 2, 0, 0, ...
        assert_eq!(s.dims_up_to(3), vec![1, 2, 0, 0]);
        assert_eq!(s.dimension(), 0);
    }

    #[test]
    fn canonical_module_of_polynomial_ring() {
        // ω_{k[x,y]} = R(-2): dim ω_j = dim R_{j-2}.
        let r = ring(&[("x", 1), ("y", 1)], &[]);
        let s = r.series();
        let omega = s.omega_dims(0, 5);
        let expect: Vec<(i64, u64)> =
            vec![(0, 0), (1, 0), (2, 1), (3, 2), (4, 3), (5, 4)];
        assert_eq!(omega, expect);
        // Top local cohomology: dim [H^2]_{-2} = 1, dim [H^2]_{-3} = 2.
        let h = s.top_cohomology_dims(-3, -1);
        assert_eq!(h, vec![(-3, 2), (-2, 1), (-1, 0)]);
    }

    #[test]
    fn canonical_module_of_fermat_cubic_is_free() {
        // a = 0 and ω ≅ R: dim ω_j = dim R_j.
        let r = ring(&[("x", 1), ("y", 1), ("z", 1)], &["x^3 + y^3 + z^3"]);
        let s = r.series();
        let omega = s.omega_dims(0, 4);
        let dims = s.dims_up_to(4);
        for (j, v) in omega {
            assert_eq!(v, dims[j as usize]);
        }
    }

    #[test]
    fn cm_certificate_for_polynomial_ring() {
        let r = ring(&[("x", 1), ("y", 1)], &[]);
        match cm_certificate(&r, 11).unwrap() {
            CmVerdict::Certified(cert) => {
                assert_eq!(cert.hsop.len(), 2);
                assert_eq!(cert.hsop_degree, 1);
            }
            CmVerdict::ProbablyNot { .. } => panic!("k[x,y] is CM"),
        }
    }

    #[test]
    fn cm_certificate_rejects_non_cm_ring() {
        // k[x,y]/(x^2, xy): depth 0, dimension 1 — not CM.
        let r = ring(&[("x", 1), ("y", 1)], &["x^2", "x*y"]);
        assert_eq!(r.dimension().unwrap(), 1);
        match cm_certificate(&r, 5).unwrap() {
            CmVerdict::ProbablyNot { failures, .. } => assert_eq!(failures, 3),
            CmVerdict::Certified(_) => panic!("R has depth 0 but dimension 1"),
        }
    }

    #[test]
    fn gorenstein_detection() {
        // k[x,y] is Gorenstein: any linear hsop reduces it to k[x,y]/(ℓ1,ℓ2)
        // ≅ k, whose socle is 1-dimensional.
        let r = ring(&[("x", 1), ("y", 1)], &[]);
        let report = gorenstein_report(&r, 3).unwrap().expect("CM");
        assert!(report.gorenstein);
        assert!(report.level);
        assert_eq!(report.socle.total, 1);
    }

    #[test]
    fn artinian_ring_is_trivially_certified() {
        let r = ring(&[("x", 1), ("y", 1)], &["x^2", "x*y", "y^2"]);
        match cm_certificate(&r, 1).unwrap() {
            CmVerdict::Certified(cert) => assert!(cert.hsop.is_empty()),
            _ => panic!("Artinian rings are CM"),
        }
        let report = gorenstein_report(&r, 1).unwrap().expect("CM");
        // Socle of k[x,y]/m^2 is m/m^2: dimension 2 in degree 1 — not
        // Gorenstein, but level.
        assert!(!report.gorenstein);
        assert!(report.level);
        assert_eq!(report.socle.by_degree, vec![(1, 2)]);
    }
}
