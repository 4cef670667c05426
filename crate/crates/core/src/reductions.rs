//! Minimal reductions of equal-degree 𝔪-primary ideals: seeded sampling,
//! reduction numbers, and re-verifiable certificates.
//!
//! A reduction of `I` is a subideal `J` with `J·I^r = I^{r+1}` for some `r`;
//! the least such `r` is the reduction number.  For an 𝔪-primary ideal whose
//! stored generators share one degree, minimal reductions are generated by
//! `d = dim R` field-coefficient combinations of those generators, which is
//! what [`sample_minimal_reduction`] draws.

use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::derive_seed;
use crate::error::EngineError;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::PresentedRing;
use crate::Result;

/// Default bound for reduction-number searches.  Desk-scale examples have
/// `r ≤ 3`; there is no effective general bound, so overruns fail loudly.
pub const DEFAULT_R_MAX: u32 = 20;

/// How many times the sampler redraws coefficients before giving up.
const RESAMPLE_ATTEMPTS: u32 = 20;

/// A verified minimal reduction `J` of a base ideal `I`, carrying everything
/// needed to re-check it from scratch: generators, the reduction number, the
/// 𝔪-primarity of `J`, and the RNG seed that produced the coefficients.
#[derive(Debug, Clone)]
pub struct ReductionCertificate {
    base: Ideal,
    j: Ideal,
    reduction_number: u32,
    hsop_checked: bool,
    seed: u64,
}

impl ReductionCertificate {
    pub fn base(&self) -> &Ideal {
        &self.base
    }

    pub fn ideal(&self) -> &Ideal {
        &self.j
    }

    pub fn generators(&self) -> &[Polynomial] {
        self.j.gens()
    }

    /// Least `r` with `J·I^r = I^{r+1}`.
    pub fn reduction_number(&self) -> u32 {
        self.reduction_number
    }

    /// Whether `dim R/J = 0` was verified (always true for emitted
    /// certificates).
    pub fn hsop_checked(&self) -> bool {
        self.hsop_checked
    }

    /// The seed that drew the coefficients.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Re-verifies every claim of the certificate with fresh ideals (and
    /// hence fresh Gröbner bases): `J ⊆ I`, `dim R/J = 0`,
    /// `J·I^r = I^{r+1}` both ways, and the containment floor
    /// `I^{r+1} ⊆ J`.  Intended for skeptical consumers of reports.
    pub fn reverify(&self) -> Result<()> {
        let ring = self.base.ring().clone();
        let i = Ideal::new_affine(ring.clone(), self.base.gens().to_vec());
        let j = Ideal::new_affine(ring, self.j.gens().to_vec());
        if !i.contains(&j)? {
            return Err(EngineError::Internal(
                "certificate reverify: J ⊄ I".to_string(),
            ));
        }
        if !j.is_m_primary()? {
            return Err(EngineError::Internal(
                "certificate reverify: J is not m-primary".to_string(),
            ));
        }
        let r = self.reduction_number;
        let ir = i.power(r)?;
        let ir1 = ir.multiply(&i)?;
        let jir = j.multiply(&ir)?;
        if !jir.contains(&ir1)? || !ir1.contains(&jir)? {
            return Err(EngineError::Internal(format!(
                "certificate reverify: J·I^{r} ≠ I^{}",
                r + 1
            )));
        }
        if r > 0 {
            let prev = j.multiply(&i.power(r - 1)?)?;
            if prev.equals(&ir)? {
                return Err(EngineError::Internal(format!(
                    "certificate reverify: reduction number is below {r}"
                )));
            }
        }
        if !j.contains(&ir1)? {
            return Err(EngineError::Internal(
                "certificate reverify: I^{r+1} ⊄ J".to_string(),
            ));
        }
        Ok(())
    }
}

/// The least `r ≤ r_max` with `J·I^r = I^{r+1}`, or `None` when no such `r`
/// exists within the bound (then `J` is not a reduction within budget).
///
/// Errors when `J ⊄ I`.
pub fn reduction_number(j: &Ideal, i: &Ideal, r_max: u32) -> Result<Option<u32>> {
    if !i.contains(j)? {
        return Err(EngineError::Hypothesis(
            "reduction_number: J must be contained in I".to_string(),
        ));
    }
    // `cur` walks I^r; at r = 0 the product J·I^0 is J itself.
    let mut cur = i.power(0)?;
    for r in 0..=r_max {
        let next = cur.multiply(i)?;
        let product = j.multiply(&cur)?;
        if product.equals(&next)? {
            return Ok(Some(r));
        }
        cur = next;
    }
    Ok(None)
}

/// Draws a minimal reduction of an equal-degree 𝔪-primary ideal: `d = dim R`
/// random field-coefficient combinations of `I`'s stored generators,
/// redrawn (up to 20 times) until the result is an hsop-like ideal
/// (`dim R/J = 0`) with a verified reduction number.
pub fn sample_minimal_reduction(i: &Ideal, seed: u64) -> Result<ReductionCertificate> {
    sample_with_r_max(i, seed, DEFAULT_R_MAX)
}

pub fn sample_with_r_max(i: &Ideal, seed: u64, r_max: u32) -> Result<ReductionCertificate> {
    let ring = i.ring().clone();
    if i.common_gen_degree().is_none() {
        return Err(EngineError::Hypothesis(
            "sample_minimal_reduction: all stored generators must share one degree".to_string(),
        ));
    }
    if !i.is_m_primary()? {
        return Err(EngineError::NotMPrimary(
            "sample_minimal_reduction: the base ideal must be m-primary".to_string(),
        ));
    }
    let d = ring.dimension()?;
    for attempt in 0..RESAMPLE_ATTEMPTS {
        let mut rng = ChaCha12Rng::seed_from_u64(derive_seed(seed, attempt as u64));
        let combos: Vec<Polynomial> = (0..d).map(|_| random_combination(&ring, i.gens(), &mut rng)).collect();
        if combos.iter().any(Polynomial::is_zero) {
            continue;
        }
        let j = Ideal::new(ring.clone(), combos)?;
        if j.gens().len() != d {
            continue; // degenerate draw: combinations were linearly dependent
        }
        if !j.is_m_primary()? {
            continue;
        }
        let Some(r) = reduction_number(&j, i, r_max)? else {
            continue;
        };
        // Containment floor, implied by the reduction equation; a failure
        // here is an engine bug, not bad luck.
        let floor = i.power(r + 1)?;
        if !j.contains(&floor)? {
            return Err(EngineError::Internal(
                "sampled reduction does not contain I^{r+1}".to_string(),
            ));
        }
        return Ok(ReductionCertificate {
            base: i.clone(),
            j,
            reduction_number: r,
            hsop_checked: true,
            seed,
        });
    }
    Err(EngineError::SamplerExhausted {
        attempts: RESAMPLE_ATTEMPTS,
        what: format!("minimal reduction ({d} generators)"),
    })
}

/// Verifies a caller-proposed reduction `J ⊆ I` and wraps it in a
/// certificate: 𝔪-primarity, reduction number within `r_max`, containment
/// floor.  Unlike the sampler this accepts any generator count and
/// inhomogeneous generators (witness reductions of the form
/// `x + higher-degree noise`), so the certified reduction need not be
/// minimal.  The seed is recorded verbatim for report provenance.
pub fn certify_reduction(
    base: &Ideal,
    j: Ideal,
    r_max: u32,
    seed: u64,
) -> Result<ReductionCertificate> {
    if !base.contains(&j)? {
        return Err(EngineError::Hypothesis(
            "certify_reduction: the proposed J is not contained in I".to_string(),
        ));
    }
    if !j.is_m_primary()? {
        return Err(EngineError::NotMPrimary(
            "certify_reduction: the proposed J is not m-primary".to_string(),
        ));
    }
    let Some(r) = reduction_number(&j, base, r_max)? else {
        return Err(EngineError::ReductionNumberOverflow { bound: r_max });
    };
    let floor = base.power(r + 1)?;
    if !j.contains(&floor)? {
        return Err(EngineError::Internal(
            "certified reduction does not contain I^{r+1}".to_string(),
        ));
    }
    Ok(ReductionCertificate {
        base: base.clone(),
        j,
        reduction_number: r,
        hsop_checked: true,
        seed,
    })
}

/// A random field-coefficient combination of the given generators.
pub(crate) fn random_combination(
    ring: &PresentedRing,
    gens: &[Polynomial],
    rng: &mut ChaCha12Rng,
) -> Polynomial {
    let ambient = ring.ambient();
    let mut acc = ambient.zero_poly();
    for g in gens {
        let c = ring.field().random(rng);
        acc = ambient.add(&acc, &ambient.scale(g, &c));
    }
    acc
}

/// Infinite, seeded stream of minimal-reduction certificates for
/// `I′ = S_N·S`, the ideal of the full degree-`N` piece.
///
/// Sample `i` uses the seed `derive_seed(master, i)`, so the certificate
/// SET for given seeds does not depend on evaluation order.
pub struct GradedReductionStream {
    target: Ideal,
    master_seed: u64,
    next_index: u64,
    r_max: u32,
}

impl GradedReductionStream {
    /// Errors when `[S]_N = 0` or when `S_N·S` is not 𝔪-primary (the
    /// latter signals that `N` is too small for the asymptotic regime).
    pub fn new(ring: &Arc<PresentedRing>, n: u64, master_seed: u64) -> Result<Self> {
        Self::with_r_max(ring, n, master_seed, DEFAULT_R_MAX)
    }

    pub fn with_r_max(
        ring: &Arc<PresentedRing>,
        n: u64,
        master_seed: u64,
        r_max: u32,
    ) -> Result<Self> {
        let target = Ideal::equal_degree(ring.clone(), n)?;
        if !target.is_m_primary()? {
            return Err(EngineError::NotMPrimary(format!(
                "S_{n}·S is not m-primary; N = {n} is too small for this ring"
            )));
        }
        Ok(GradedReductionStream {
            target,
            master_seed,
            next_index: 0,
            r_max,
        })
    }

    /// The equal-degree ideal `I′` whose reductions are streamed.
    pub fn target(&self) -> &Ideal {
        &self.target
    }
}

impl Iterator for GradedReductionStream {
    type Item = Result<ReductionCertificate>;

    fn next(&mut self) -> Option<Self::Item> {
        let index = self.next_index;
        self.next_index += 1;
        Some(sample_with_r_max(
            &self.target,
            derive_seed(self.master_seed, index),
            self.r_max,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn poly_xy() -> Arc<PresentedRing> {
        PresentedRing::parse_ring(FieldSpec::rationals(), &[("x", 1), ("y", 1)], &[]).unwrap()
    }

    #[test]
    fn reduction_number_basics() {
        let r = poly_xy();
        let m = Ideal::maximal(r.clone()).unwrap();
        // J = I = m has reduction number 0.
        assert_eq!(reduction_number(&m, &m, 5).unwrap(), Some(0));

        // J = (x^2, y^2) inside I = m^2: J·m^2 = m^4 and J ≠ m^2, so r = 1.
        let m2 = m.power(2).unwrap();
        let j = Ideal::parse(r.clone(), &["x^2", "y^2"]).unwrap();
        assert_eq!(reduction_number(&j, &m2, 5).unwrap(), Some(1));

        // J = (x^2) alone is not a reduction of m^2 within any bound.
        let principal = Ideal::parse(r.clone(), &["x^2"]).unwrap();
        assert_eq!(reduction_number(&principal, &m2, 5).unwrap(), None);

        // J ⊄ I is a hypothesis error.
        let outside = Ideal::parse(r, &["x"]).unwrap();
        assert!(matches!(
            reduction_number(&outside, &m2, 5),
            Err(EngineError::Hypothesis(_))
        ));
    }

    #[test]
    fn sampling_m_in_the_plane() {
        let r = poly_xy();
        let m = Ideal::maximal(r.clone()).unwrap();
        let cert = sample_minimal_reduction(&m, 42).unwrap();
        // Two generic linear forms span [R]_1, so J = m and r = 0.
        assert_eq!(cert.reduction_number(), 0);
        assert_eq!(cert.generators().len(), 2);
        assert!(cert.ideal().equals(&m).unwrap());
        cert.reverify().unwrap();
    }

    #[test]
    fn sampling_m_squared() {
        let r = poly_xy();
        let m2 = Ideal::maximal(r.clone()).unwrap().power(2).unwrap();
        for seed in [1u64, 2, 3] {
            let cert = sample_minimal_reduction(&m2, seed).unwrap();
            assert!(cert.reduction_number() <= 2);
            assert_eq!(cert.generators().len(), 2);
            cert.reverify().unwrap();
        }
    }

    #[test]
    fn sampling_principal_in_cusp() {
        let cusp = PresentedRing::parse_ring(
            FieldSpec::rationals(),
            &[("a", 2), ("b", 3)],
            &["b^2 - a^3"],
        )
        .unwrap();
        let i = Ideal::parse(cusp, &["a^2"]).unwrap();
        let cert = sample_minimal_reduction(&i, 9).unwrap();
        // Principal case: J = (λa²) = I up to a unit.
        assert_eq!(cert.reduction_number(), 0);
        assert!(cert.ideal().equals(&i).unwrap());
        cert.reverify().unwrap();
    }

    #[test]
    fn sampler_rejects_bad_input() {
        let r = poly_xy();
        // Mixed generator degrees.
        let mixed = Ideal::parse(r.clone(), &["x", "y^2"]).unwrap();
        assert!(matches!(
            sample_minimal_reduction(&mixed, 0),
            Err(EngineError::Hypothesis(_))
        ));
        // Not m-primary.
        let line = Ideal::parse(r, &["x"]).unwrap();
        assert!(matches!(
            sample_minimal_reduction(&line, 0),
            Err(EngineError::NotMPrimary(_))
        ));
    }

    #[test]
    fn stream_determinism() {
        let r = poly_xy();
        let certs: Vec<_> = GradedReductionStream::new(&r, 2, 7)
            .unwrap()
            .take(4)
            .map(|c| c.unwrap())
            .collect();
        let again: Vec<_> = GradedReductionStream::new(&r, 2, 7)
            .unwrap()
            .take(4)
            .map(|c| c.unwrap())
            .collect();
        for (a, b) in certs.iter().zip(&again) {
            assert_eq!(a.seed(), b.seed());
            let ambient = r.ambient();
            let ga: Vec<_> = a.generators().iter().map(|f| ambient.render(f)).collect();
            let gb: Vec<_> = b.generators().iter().map(|f| ambient.render(f)).collect();
            assert_eq!(ga, gb);
        }
        // Distinct indices draw distinct coefficients.
        let ambient = r.ambient();
        assert_ne!(
            ambient.render(&certs[0].generators()[0]),
            ambient.render(&certs[1].generators()[0]),
        );
    }

    #[test]
    fn stream_rejects_small_n() {
        // In the gap ring, S_3 = <b> generates (b), which is not m-primary:
        // the stream must refuse N = 3.
        let gap = PresentedRing::parse_ring(
            FieldSpec::rationals(),
            &[("a", 2), ("b", 3), ("u", 2)],
            &["b^2 - a^3"],
        )
        .unwrap();
        assert!(matches!(
            GradedReductionStream::new(&gap, 3, 0),
            Err(EngineError::NotMPrimary(_))
        ));
        // N = 4 is fine.
        let stream = GradedReductionStream::new(&gap, 4, 0).unwrap();
        assert_eq!(stream.target().gens().len(), 3);
    }
}
