//! The corpus file format: named ring blocks and experiment blocks.
//!
//! ```text
//! ring cusp_q
//!   field: q
//!   vars: a:2, b:3
//!   rels: b^2 - a^3
//! end
//!
//! experiment cusp_gap
//!   ring: cusp_q
//!   check: dim1
//!   n: 4
//! end
//! ```
//!
//! Experiment keys: `ring`, `check` (standard | sandwich | dim1 | grcore |
//! charscan), `n`, and optional `reduced` (yes/no), `samples`, `window`,
//! `rmax`, `seed`, `mode` (mc | colon | both), `primes` (comma-separated),
//! `rationals` (yes/no).  Unknown keys are rejected with their location.

use corelab_core::constructions::RingRecipe;

use crate::error::{CliError, Result};
use crate::ringspec::{self, RingSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Standard,
    Sandwich,
    Dim1,
    Grcore,
    CharScan,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Standard => "standard",
            Check::Sandwich => "sandwich",
            Check::Dim1 => "dim1",
            Check::Grcore => "grcore",
            Check::CharScan => "charscan",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunMode {
    MonteCarlo,
    Colon,
    Both,
}

impl RunMode {
    pub fn name(self) -> &'static str {
        match self {
            RunMode::MonteCarlo => "mc",
            RunMode::Colon => "colon",
            RunMode::Both => "both",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Experiment {
    pub name: String,
    pub ring: String,
    pub check: Check,
    pub n: u64,
    pub reduced: bool,
    pub samples: Option<usize>,
    pub window: Option<usize>,
    pub rmax: Option<u32>,
    pub seed: Option<u64>,
    pub mode: RunMode,
    pub primes: Vec<u64>,
    pub rationals: bool,
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub rings: Vec<(String, RingSpec)>,
    pub experiments: Vec<Experiment>,
}

impl Corpus {
    pub fn ring(&self, name: &str) -> Option<&RingSpec> {
        self.rings
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, spec)| spec)
    }
}

fn is_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn parse_bool(origin: &str, lineno: usize, v: &str) -> Result<bool> {
    match v {
        "yes" | "true" => Ok(true),
        "no" | "false" => Ok(false),
        other => Err(CliError::usage(format!(
            "{origin}:{lineno}: expected yes or no, got {other:?}"
        ))),
    }
}

fn parse_num<T: std::str::FromStr>(origin: &str, lineno: usize, key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| {
        CliError::usage(format!("{origin}:{lineno}: bad numeric value {v:?} for {key}"))
    })
}

pub fn parse(text: &str, origin: &str) -> Result<Corpus> {
    let mut rings: Vec<(String, RingSpec)> = Vec::new();
    let mut experiments: Vec<Experiment> = Vec::new();

    let lines: Vec<&str> = text.lines().collect();
    let mut i = 0usize;
    while i < lines.len() {
        let line = lines[i].split('#').next().unwrap_or("").trim();
        let lineno = i + 1;
        if line.is_empty() {
            i += 1;
            continue;
        }
        let (kind, name) = line.split_once(char::is_whitespace).ok_or_else(|| {
            CliError::usage(format!(
                "{origin}:{lineno}: expected `ring <name>` or `experiment <name>`"
            ))
        })?;
        let name = name.trim();
        if !is_name(name) {
            return Err(CliError::usage(format!(
                "{origin}:{lineno}: invalid block name {name:?}"
            )));
        }

        // Collect the block body up to the matching `end`.
        let body_start = i + 1;
        let mut j = body_start;
        loop {
            if j >= lines.len() {
                return Err(CliError::usage(format!(
                    "{origin}:{lineno}: block {name:?} is never closed with end"
                )));
            }
            if lines[j].split('#').next().unwrap_or("").trim() == "end" {
                break;
            }
            j += 1;
        }
        let body = lines[body_start..j].join("\n");

        match kind {
            "ring" => {
                if rings.iter().any(|(n, _)| n == name) {
                    return Err(CliError::usage(format!(
                        "{origin}:{lineno}: duplicate ring name {name:?}"
                    )));
                }
                let spec = ringspec::parse_ring_body(&body, origin, body_start)?;
                rings.push((name.to_string(), spec));
            }
            "experiment" => {
                let exp = parse_experiment(name, &body, origin, body_start)?;
                if experiments.iter().any(|e| e.name == exp.name) {
                    return Err(CliError::usage(format!(
                        "{origin}:{lineno}: duplicate experiment name {name:?}"
                    )));
                }
                experiments.push(exp);
            }
            other => {
                return Err(CliError::usage(format!(
                    "{origin}:{lineno}: unknown block kind {other:?}"
                )))
            }
        }
        i = j + 1;
    }

    // Cross-reference check: every experiment must name a known ring.
    for exp in &experiments {
        if !rings.iter().any(|(n, _)| *n == exp.ring) {
            return Err(CliError::usage(format!(
                "{origin}: experiment {:?} references unknown ring {:?}",
                exp.name, exp.ring
            )));
        }
    }

    Ok(Corpus { rings, experiments })
}

fn parse_experiment(name: &str, body: &str, origin: &str, line_offset: usize) -> Result<Experiment> {
    let mut ring = None;
    let mut check = None;
    let mut n = None;
    let mut reduced = false;
    let mut samples = None;
    let mut window = None;
    let mut rmax = None;
    let mut seed = None;
    let mut mode = RunMode::MonteCarlo;
    let mut primes = Vec::new();
    let mut rationals = false;

    for (idx, raw) in body.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = line_offset + idx + 1;
        let (key, value) = line.split_once(':').ok_or_else(|| {
            CliError::usage(format!("{origin}:{lineno}: expected key: value, got {line:?}"))
        })?;
        let value = value.trim();
        match key.trim() {
            "ring" => ring = Some(value.to_string()),
            "check" => {
                check = Some(match value {
                    "standard" => Check::Standard,
                    "sandwich" => Check::Sandwich,
                    "dim1" => Check::Dim1,
                    "grcore" => Check::Grcore,
                    "charscan" => Check::CharScan,
                    other => {
                        return Err(CliError::usage(format!(
                            "{origin}:{lineno}: unknown check {other:?}"
                        )))
                    }
                })
            }
            "n" => n = Some(parse_num(origin, lineno, "n", value)?),
            "reduced" => reduced = parse_bool(origin, lineno, value)?,
            "samples" => samples = Some(parse_num(origin, lineno, "samples", value)?),
            "window" => window = Some(parse_num(origin, lineno, "window", value)?),
            "rmax" => rmax = Some(parse_num(origin, lineno, "rmax", value)?),
            "seed" => seed = Some(parse_num(origin, lineno, "seed", value)?),
            "mode" => {
                mode = match value {
                    "mc" => RunMode::MonteCarlo,
                    "colon" => RunMode::Colon,
                    "both" => RunMode::Both,
                    other => {
                        return Err(CliError::usage(format!(
                            "{origin}:{lineno}: unknown mode {other:?}"
                        )))
                    }
                }
            }
            "primes" => {
                primes = value
                    .split(',')
                    .map(|t| parse_num(origin, lineno, "primes", t.trim()))
                    .collect::<Result<Vec<u64>>>()?;
            }
            "rationals" => rationals = parse_bool(origin, lineno, value)?,
            other => {
                return Err(CliError::usage(format!(
                    "{origin}:{lineno}: unknown key {other:?} in experiment {name:?}"
                )))
            }
        }
    }

    let ring = ring.ok_or_else(|| {
        CliError::usage(format!("{origin}: experiment {name:?} needs a ring"))
    })?;
    let check = check.ok_or_else(|| {
        CliError::usage(format!("{origin}: experiment {name:?} needs a check"))
    })?;
    let n = n.ok_or_else(|| {
        CliError::usage(format!("{origin}: experiment {name:?} needs n"))
    })?;
    if check == Check::CharScan && primes.is_empty() && !rationals {
        return Err(CliError::usage(format!(
            "{origin}: charscan experiment {name:?} needs primes or rationals"
        )));
    }

    Ok(Experiment {
        name: name.to_string(),
        ring,
        check,
        n,
        reduced,
        samples,
        window,
        rmax,
        seed,
        mode,
        primes,
        rationals,
    })
}

/// Re-emits a corpus in the block format; `parse(render(c))` reproduces `c`
/// up to comments and spacing.
pub fn render(corpus: &Corpus) -> String {
    let mut out = String::new();
    for (name, spec) in &corpus.rings {
        out.push_str(&format!("ring {name}\n"));
        if let Some(field) = &spec.field_override {
            let label = match field {
                corelab_core::FieldSpec::Rationals => "q".to_string(),
                corelab_core::FieldSpec::Prime(p) => format!("p={p}"),
            };
            out.push_str(&format!("  field: {label}\n"));
        }
        match &spec.recipe {
            RingRecipe::Raw { vars, relations } => {
                let vs: Vec<String> = vars.iter().map(|(n, w)| format!("{n}:{w}")).collect();
                out.push_str(&format!("  vars: {}\n", vs.join(", ")));
                for r in relations {
                    out.push_str(&format!("  rels: {r}\n"));
                }
            }
            RingRecipe::Semigroup { generators } => {
                let gs: Vec<String> = generators.iter().map(u64::to_string).collect();
                out.push_str(&format!("  recipe: semigroup {}\n", gs.join(" ")));
            }
            RingRecipe::Veronese { base, n } => {
                out.push_str(&format!("  recipe: veronese {n} {}\n", inline_of(base)));
            }
            RingRecipe::Rees { base, ideal_gens } => {
                out.push_str(&format!(
                    "  recipe: rees {} : {}\n",
                    inline_of(base),
                    ideal_gens.join(", ")
                ));
            }
            RingRecipe::CompleteIntersection { nvars, degrees } => {
                let ds: Vec<String> = degrees.iter().map(u64::to_string).collect();
                out.push_str(&format!("  recipe: ci {nvars} {}\n", ds.join(" ")));
            }
        }
        out.push_str("end\n\n");
    }
    for e in &corpus.experiments {
        out.push_str(&format!("experiment {}\n", e.name));
        out.push_str(&format!("  ring: {}\n", e.ring));
        out.push_str(&format!("  check: {}\n", e.check.name()));
        out.push_str(&format!("  n: {}\n", e.n));
        if e.reduced {
            out.push_str("  reduced: yes\n");
        }
        if let Some(s) = e.samples {
            out.push_str(&format!("  samples: {s}\n"));
        }
        if let Some(w) = e.window {
            out.push_str(&format!("  window: {w}\n"));
        }
        if let Some(r) = e.rmax {
            out.push_str(&format!("  rmax: {r}\n"));
        }
        if let Some(s) = e.seed {
            out.push_str(&format!("  seed: {s}\n"));
        }
        if e.mode != RunMode::MonteCarlo {
            out.push_str(&format!("  mode: {}\n", e.mode.name()));
        }
        if !e.primes.is_empty() {
            let ps: Vec<String> = e.primes.iter().map(u64::to_string).collect();
            out.push_str(&format!("  primes: {}\n", ps.join(", ")));
        }
        if e.rationals {
            out.push_str("  rationals: yes\n");
        }
        out.push_str("end\n\n");
    }
    out
}

/// An inline `k[...]` rendering of a raw recipe (used inside recipe lines).
fn inline_of(recipe: &RingRecipe) -> String {
    match recipe {
        RingRecipe::Raw { vars, relations } => {
            let vs: Vec<String> = vars
                .iter()
                .map(|(n, w)| if *w == 1 { n.clone() } else { format!("{n}:{w}") })
                .collect();
            if relations.is_empty() {
                format!("k[{}]", vs.join(","))
            } else {
                format!("k[{}]/({})", vs.join(","), relations.join(", "))
            }
        }
        other => panic!("nested recipe {other:?} cannot be rendered inline"),
    }
}
