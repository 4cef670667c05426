//! Implementations behind the subcommands.  Each returns a [`Report`]
//! whose `results` subtree is a pure function of inputs and seed.

use std::sync::Arc;

use corelab_core::engine::{
    self, core_colon, core_monte_carlo, grcore_monte_carlo, verify_dim1, verify_sandwich,
    verify_standard_formula, McOptions,
};
use corelab_core::groebner::GbBudget;
use corelab_core::hilbert::{cm_certificate, gorenstein_report, CmVerdict};
use corelab_core::reductions::sample_with_r_max;
use corelab_core::{FieldSpec, Ideal, PresentedRing};
use serde_json::{json, Map, Value};

use crate::corpus::{Check, Corpus, Experiment, RunMode};
use crate::error::{CliError, Result};
use crate::report::{
    charscan_json, core_report_json, dim1_json, dims_json, ideal_json, polys_json, ring_json,
    sandwich_json, verdict_exit, verdict_json, Report,
};
use crate::ringspec::RingSpec;

/// Settings shared by every subcommand.
#[derive(Debug, Clone)]
pub struct Settings {
    pub field: FieldSpec,
    pub seed: u64,
    pub samples: usize,
    pub window: usize,
    pub rmax: u32,
    pub degree_cap: Option<u64>,
    pub stats: bool,
}

impl Settings {
    pub fn mc_options(&self) -> McOptions {
        let mut opts = McOptions::with_seed(self.seed);
        opts.max_samples = self.samples.max(1);
        opts.min_samples = opts.min_samples.min(opts.max_samples);
        opts.window = self.window.max(1);
        opts.r_max = self.rmax;
        opts
    }

    pub fn options_json(&self) -> Value {
        json!({
            "samples": self.samples,
            "window": self.window,
            "rmax": self.rmax,
            "degree_cap": self.degree_cap,
        })
    }

    /// Builds the ring, honoring a per-spec field override and the
    /// degree-cap flag.  Construction failures are usage errors.
    pub fn build_ring(&self, spec: &RingSpec) -> Result<Arc<PresentedRing>> {
        let field = spec.field_override.clone().unwrap_or_else(|| self.field.clone());
        let ring = spec
            .recipe
            .build(&field, self.seed)
            .map_err(CliError::usage_from)?;
        match self.degree_cap {
            None => Ok(ring),
            Some(cap) => {
                let ambient = ring.ambient();
                let vars: Vec<(String, u64)> = ambient
                    .var_names()
                    .iter()
                    .cloned()
                    .zip(ambient.weights().iter().copied())
                    .collect();
                let budget = GbBudget {
                    degree_cap: cap,
                    ..GbBudget::default()
                };
                PresentedRing::with_budget(
                    field,
                    vars,
                    ring.relations().to_vec(),
                    budget,
                    None,
                )
                .map_err(CliError::usage_from)
            }
        }
    }
}

fn parse_ideal(ring: &Arc<PresentedRing>, gens: &[String]) -> Result<Ideal> {
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    Ideal::parse(ring.clone(), &refs).map_err(CliError::usage_from)
}

pub fn cmd_gb(
    settings: &Settings,
    spec: &RingSpec,
    gens: &[String],
    nf: Option<&str>,
) -> Result<Report> {
    let ring = settings.build_ring(spec)?;
    let ideal = parse_ideal(&ring, gens)?;
    let gb = ideal.gb()?;
    let mut results = Map::new();
    results.insert("ring".into(), ring_json(&ring));
    results.insert("generators".into(), ideal_json(&ideal));
    results.insert(
        "reduced_basis".into(),
        polys_json(&ring, gb.elements()),
    );
    results.insert("truncated_at".into(), json!(gb.truncated_at()));
    if let Some(poly) = nf {
        let f = ring
            .ambient()
            .parse(poly)
            .map_err(CliError::usage_from)?;
        let reduced = corelab_core::groebner::normal_form(ring.ambient(), &f, gb.elements());
        results.insert(
            "nf".into(),
            json!({
                "input": poly,
                "normal_form": ring.ambient().render(&reduced),
                "member": reduced.is_zero(),
            }),
        );
    }
    Ok(Report::new(Value::Object(results)))
}

pub fn cmd_hilbert(settings: &Settings, spec: &RingSpec, up_to: u64) -> Result<Report> {
    let ring = settings.build_ring(spec)?;
    ring.ensure_nonzero()?;
    let series = ring.series();
    let dims: Vec<(u64, usize)> = series
        .dims_up_to(up_to)
        .into_iter()
        .enumerate()
        .map(|(d, c)| (d as u64, c as usize))
        .collect();
    let (mult, weighted) = ring.multiplicity()?;
    Ok(Report::new(json!({
        "ring": ring_json(&ring),
        "numerator": series.numerator(),
        "dims": dims_json(&dims),
        "dimension": ring.dimension()?,
        "a_invariant": ring.a_invariant()?,
        "multiplicity": mult.to_string(),
        "weighted_normalization": weighted,
    })))
}

pub fn cmd_invariants(settings: &Settings, spec: &RingSpec) -> Result<Report> {
    let ring = settings.build_ring(spec)?;
    ring.ensure_nonzero()?;
    let (mult, _) = ring.multiplicity()?;
    let mut results = Map::new();
    results.insert("ring".into(), ring_json(&ring));
    results.insert("dimension".into(), json!(ring.dimension()?));
    results.insert("a_invariant".into(), json!(ring.a_invariant()?));
    results.insert("multiplicity".into(), json!(mult.to_string()));
    results.insert(
        "standard_graded".into(),
        json!(ring.is_standard_graded()),
    );
    results.insert(
        "reduced_guard".into(),
        json!(engine::reduced_guard(&ring)?),
    );
    match cm_certificate(&ring, settings.seed)? {
        CmVerdict::Certified(cert) => {
            results.insert("cm_certified".into(), json!(true));
            results.insert("hsop_degree".into(), json!(cert.hsop_degree));
            if let Some(report) = gorenstein_report(&ring, settings.seed)? {
                let by_degree: Vec<Value> = report
                    .socle
                    .by_degree
                    .iter()
                    .map(|(d, m)| json!([d, m]))
                    .collect();
                results.insert("gorenstein".into(), json!(report.gorenstein));
                results.insert("level".into(), json!(report.level));
                results.insert(
                    "socle".into(),
                    json!({ "total": report.socle.total, "by_degree": by_degree }),
                );
            }
        }
        CmVerdict::ProbablyNot { failures, hsop_degree } => {
            results.insert("cm_certified".into(), json!(false));
            results.insert(
                "cm_failures".into(),
                json!({ "count": failures, "hsop_degree": hsop_degree }),
            );
        }
    }
    Ok(Report::new(Value::Object(results)))
}

/// Runs the Monte-Carlo and/or colon route on an explicit equal-degree
/// target; `both` also records whether they agree.
fn core_of_target(target: &Ideal, mode: RunMode, opts: &McOptions) -> Result<(Value, Option<bool>)> {
    match mode {
        RunMode::MonteCarlo => {
            let report = core_monte_carlo(target, opts)?;
            Ok((json!({ "monte_carlo": core_report_json(&report) }), None))
        }
        RunMode::Colon => {
            let cert = first_reduction(target, opts)?;
            let report = core_colon(target, &cert, opts)?;
            Ok((json!({ "colon": core_report_json(&report) }), None))
        }
        RunMode::Both => {
            let mc = core_monte_carlo(target, opts)?;
            let cert = first_reduction(target, opts)?;
            let colon = core_colon(target, &cert, opts)?;
            let agree = mc.result.equals(&colon.result)?;
            Ok((
                json!({
                    "monte_carlo": core_report_json(&mc),
                    "colon": core_report_json(&colon),
                    "modes_agree": agree,
                }),
                Some(agree),
            ))
        }
    }
}

fn first_reduction(
    target: &Ideal,
    opts: &McOptions,
) -> Result<corelab_core::reductions::ReductionCertificate> {
    sample_with_r_max(target, opts.seed, opts.r_max).map_err(CliError::from)
}

pub fn cmd_core(
    settings: &Settings,
    spec: &RingSpec,
    gens: &[String],
    mode: RunMode,
) -> Result<Report> {
    let ring = settings.build_ring(spec)?;
    let target = parse_ideal(&ring, gens)?;
    let (value, agree) = core_of_target(&target, mode, &settings.mc_options())?;
    let mut report = Report::new(json!({ "ring": ring_json(&ring), "core": value }));
    if agree == Some(false) {
        report.exit = 2;
    }
    Ok(report)
}

pub fn cmd_grcore(
    settings: &Settings,
    spec: &RingSpec,
    n: u64,
    mode: RunMode,
) -> Result<Report> {
    let ring = settings.build_ring(spec)?;
    let opts = settings.mc_options();
    let value = match mode {
        RunMode::MonteCarlo => {
            let report = grcore_monte_carlo(&ring, n, &opts)?;
            (json!({ "monte_carlo": core_report_json(&report) }), None)
        }
        _ => {
            let target = Ideal::equal_degree(ring.clone(), n).map_err(CliError::from)?;
            core_of_target(&target, mode, &opts)?
        }
    };
    let mut report = Report::new(json!({ "ring": ring_json(&ring), "n": n, "graded_core": value.0 }));
    if value.1 == Some(false) {
        report.exit = 2;
    }
    Ok(report)
}

pub fn cmd_verify_standard(
    settings: &Settings,
    spec: &RingSpec,
    n: u64,
    reduced: bool,
) -> Result<Report> {
    let ring = settings.build_ring(spec)?;
    let report = verify_standard_formula(&ring, n, reduced, &settings.mc_options())?;
    let verdict = report.verdict.clone().expect("verifier always sets a verdict");
    let mut out = Report::new(json!({
        "ring": ring_json(&ring),
        "formula": "core(m^N) = m^(N*d + a + 1)",
        "n": n,
        "core": core_report_json(&report),
        "verdict": verdict_json(&verdict, &ring),
    }));
    out.exit = verdict_exit(&verdict);
    Ok(out)
}

pub fn cmd_verify_sandwich(settings: &Settings, spec: &RingSpec, n: u64) -> Result<Report> {
    let ring = settings.build_ring(spec)?;
    let report = verify_sandwich(&ring, n, &settings.mc_options())?;
    let mut out = Report::new(json!({
        "ring": ring_json(&ring),
        "formula": "S_(>=k0) <= grcore(S_(>=N)) <= S_(>=k0) + gap pieces",
        "n": n,
        "sandwich": sandwich_json(&report),
    }));
    out.exit = verdict_exit(&report.verdict);
    Ok(out)
}

pub fn cmd_verify_dim1(settings: &Settings, spec: &RingSpec, n: u64) -> Result<Report> {
    let ring = settings.build_ring(spec)?;
    let report = verify_dim1(&ring, n, &settings.mc_options())?;
    let mut out = Report::new(json!({
        "ring": ring_json(&ring),
        "criterion": "core = grcore iff a degree-one nonzerodivisor exists (dim 1)",
        "n": n,
        "dim1": dim1_json(&report),
    }));
    out.exit = verdict_exit(&report.verdict);
    Ok(out)
}

pub fn cmd_charscan(
    settings: &Settings,
    spec: &RingSpec,
    n: u64,
    primes: &[u64],
    rationals: bool,
) -> Result<Report> {
    let report = engine::char_scan(
        &spec.recipe,
        n,
        primes,
        rationals,
        &settings.mc_options(),
    )?;
    Ok(Report::new(json!({ "charscan": charscan_json(&report) })))
}

/// One corpus experiment → a result row.  Engine errors land in the row
/// instead of aborting the whole run.
pub fn run_experiment(
    settings: &Settings,
    corpus: &Corpus,
    exp: &Experiment,
) -> (Value, i32) {
    let mut local = settings.clone();
    if let Some(s) = exp.samples {
        local.samples = s;
    }
    if let Some(w) = exp.window {
        local.window = w;
    }
    if let Some(r) = exp.rmax {
        local.rmax = r;
    }
    if let Some(s) = exp.seed {
        local.seed = s;
    }
    let spec = corpus
        .ring(&exp.ring)
        .expect("cross-references were checked at parse time");

    let outcome = match exp.check {
        Check::Standard => cmd_verify_standard(&local, spec, exp.n, exp.reduced),
        Check::Sandwich => cmd_verify_sandwich(&local, spec, exp.n),
        Check::Dim1 => cmd_verify_dim1(&local, spec, exp.n),
        Check::Grcore => cmd_grcore(&local, spec, exp.n, exp.mode),
        Check::CharScan => cmd_charscan(&local, spec, exp.n, &exp.primes, exp.rationals),
    };

    match outcome {
        Ok(report) => {
            let row = json!({
                "experiment": exp.name,
                "ring": exp.ring,
                "check": exp.check.name(),
                "n": exp.n,
                "exit": report.exit,
                "results": report.results,
            });
            (row, report.exit)
        }
        Err(err) => {
            let row = json!({
                "experiment": exp.name,
                "ring": exp.ring,
                "check": exp.check.name(),
                "n": exp.n,
                "exit": err.exit_code(),
                "error": err.to_string(),
            });
            (row, err.exit_code())
        }
    }
}

pub fn cmd_corpus_run(settings: &Settings, corpus: &Corpus, jobs: usize) -> Result<Report> {
    let jobs = jobs.max(1);
    let n = corpus.experiments.len();
    let mut rows: Vec<Option<(Value, i32)>> = (0..n).map(|_| None).collect();

    if jobs == 1 {
        for (i, exp) in corpus.experiments.iter().enumerate() {
            rows[i] = Some(run_experiment(settings, corpus, exp));
        }
    } else {
        // Static round-robin split over scoped worker threads.
        let results = std::sync::Mutex::new(&mut rows);
        std::thread::scope(|scope| {
            for worker in 0..jobs {
                let results = &results;
                let corpus_ref = &corpus;
                let settings_ref = &settings;
                scope.spawn(move || {
                    for i in (worker..n).step_by(jobs) {
                        let row = run_experiment(settings_ref, corpus_ref, &corpus_ref.experiments[i]);
                        results.lock().expect("no poisoned workers")[i] = Some(row);
                    }
                });
            }
        });
    }

    let mut consistent = 0u32;
    let mut refuted = 0u32;
    let mut inconclusive = 0u32;
    let mut worst = 0i32;
    let rows: Vec<Value> = rows
        .into_iter()
        .map(|r| {
            let (value, exit) = r.expect("every experiment ran");
            match exit {
                0 => consistent += 1,
                1 => refuted += 1,
                _ => inconclusive += 1,
            }
            worst = match (worst, exit) {
                (1, _) | (_, 1) => 1,
                (w, e) => w.max(e),
            };
            value
        })
        .collect();

    let mut report = Report::new(json!({
        "experiments": rows,
        "summary": {
            "total": n,
            "consistent_or_computed": consistent,
            "refuted": refuted,
            "inconclusive_or_error": inconclusive,
        },
    }));
    report.exit = worst;
    Ok(report)
}

/// Field-independence note: charscan needs a portable recipe, so reject
/// specs whose field is pinned when the scan would override it anyway.
pub fn check_scan_spec(spec: &RingSpec) -> Result<()> {
    if spec.field_override.is_some() {
        return Err(CliError::usage(
            "charscan varies the coefficient field itself; drop the field override from the ring"
                .to_string(),
        ));
    }
    Ok(())
}

