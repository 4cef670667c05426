//! Ring specifications.
//!
//! Inline syntax: `k[x,y]` or `k[a:2,b:3]/(b^2 - a^3)` — weights default
//! to 1 and the coefficient field comes from the surrounding command.
//!
//! File syntax: one `key: value` pair per line, `#` comments, blank lines
//! ignored.  Raw presentations use `vars:` (same `name:weight` list) and
//! any number of `rels:` lines; alternatively a single `recipe:` line
//! names a construction:
//!
//! ```text
//! recipe: semigroup 3 4 5
//! recipe: veronese 2 k[x,y]
//! recipe: ci 4 2 3            # 4 variables, relation degrees 2 and 3
//! recipe: rees k[x,y] : x^2, y^2
//! ```
//!
//! A `field: q` or `field: p=32003` line overrides the command-line field.

use std::fs;
use std::path::Path;

use corelab_core::constructions::RingRecipe;
use corelab_core::FieldSpec;

use crate::error::{CliError, Result};

#[derive(Debug, Clone)]
pub struct RingSpec {
    pub recipe: RingRecipe,
    pub field_override: Option<FieldSpec>,
    /// What the user wrote, for reports.
    pub source: String,
}

pub fn parse_field(s: &str) -> Result<FieldSpec> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("q") || s == "QQ" {
        return Ok(FieldSpec::rationals());
    }
    let digits = s.strip_prefix("p=").unwrap_or(s);
    let p: u64 = digits
        .parse()
        .map_err(|_| CliError::usage(format!("cannot read field {s:?}: expected q or p=<prime>")))?;
    FieldSpec::prime(p).map_err(CliError::usage_from)
}

fn parse_vars(list: &str) -> Result<Vec<(String, u64)>> {
    let mut vars = Vec::new();
    for item in list.split(',') {
        let item = item.trim();
        if item.is_empty() {
            return Err(CliError::usage(format!("empty variable entry in {list:?}")));
        }
        let (name, weight) = match item.split_once(':') {
            Some((n, w)) => {
                let weight: u64 = w.trim().parse().map_err(|_| {
                    CliError::usage(format!("bad weight in variable entry {item:?}"))
                })?;
                (n.trim(), weight)
            }
            None => (item, 1),
        };
        vars.push((name.to_string(), weight));
    }
    Ok(vars)
}

/// `k[a:2,b:3]/(b^2 - a^3)` → a raw recipe.
pub fn parse_inline(src: &str) -> Result<RingSpec> {
    let s = src.trim();
    let rest = s
        .strip_prefix("k[")
        .ok_or_else(|| CliError::usage(format!("ring spec {s:?} must start with k[")))?;
    let close = rest
        .find(']')
        .ok_or_else(|| CliError::usage(format!("missing ] in ring spec {s:?}")))?;
    let vars = parse_vars(&rest[..close])?;
    let tail = rest[close + 1..].trim();
    let relations = if tail.is_empty() {
        Vec::new()
    } else {
        let inner = tail
            .strip_prefix("/(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| {
                CliError::usage(format!("relations in {s:?} must be wrapped as /(...)"))
            })?;
        inner
            .split(',')
            .map(|r| r.trim().to_string())
            .filter(|r| !r.is_empty())
            .collect()
    };
    Ok(RingSpec {
        recipe: RingRecipe::Raw { vars, relations },
        field_override: None,
        source: s.to_string(),
    })
}

fn parse_recipe_line(value: &str) -> Result<RingRecipe> {
    let value = value.trim();
    let (kind, rest) = value
        .split_once(char::is_whitespace)
        .unwrap_or((value, ""));
    let rest = rest.trim();
    match kind {
        "semigroup" => {
            let generators = rest
                .split_whitespace()
                .map(|t| {
                    t.parse::<u64>().map_err(|_| {
                        CliError::usage(format!("bad semigroup generator {t:?} in {value:?}"))
                    })
                })
                .collect::<Result<Vec<u64>>>()?;
            if generators.is_empty() {
                return Err(CliError::usage("semigroup recipe needs generators"));
            }
            Ok(RingRecipe::Semigroup { generators })
        }
        "veronese" => {
            let (n, base) = rest.split_once(char::is_whitespace).ok_or_else(|| {
                CliError::usage(format!("veronese recipe {value:?} needs a degree and a base"))
            })?;
            let n: u64 = n
                .parse()
                .map_err(|_| CliError::usage(format!("bad veronese degree {n:?}")))?;
            let base = parse_inline(base)?;
            Ok(RingRecipe::Veronese {
                base: Box::new(base.recipe),
                n,
            })
        }
        "ci" => {
            let mut nums = rest.split_whitespace();
            let nvars: usize = nums
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| CliError::usage(format!("ci recipe {value:?} needs nvars first")))?;
            let degrees = nums
                .map(|t| {
                    t.parse::<u64>()
                        .map_err(|_| CliError::usage(format!("bad degree {t:?} in {value:?}")))
                })
                .collect::<Result<Vec<u64>>>()?;
            if degrees.is_empty() {
                return Err(CliError::usage("ci recipe needs at least one degree"));
            }
            Ok(RingRecipe::CompleteIntersection { nvars, degrees })
        }
        "rees" => {
            let (base, gens) = rest.split_once(':').ok_or_else(|| {
                CliError::usage(format!("rees recipe {value:?} needs base : generators"))
            })?;
            let base = parse_inline(base)?;
            let ideal_gens: Vec<String> = gens
                .split(',')
                .map(|g| g.trim().to_string())
                .filter(|g| !g.is_empty())
                .collect();
            if ideal_gens.is_empty() {
                return Err(CliError::usage("rees recipe needs ideal generators"));
            }
            Ok(RingRecipe::Rees {
                base: Box::new(base.recipe),
                ideal_gens,
            })
        }
        other => Err(CliError::usage(format!(
            "unknown recipe kind {other:?} (expected semigroup, veronese, ci, or rees)"
        ))),
    }
}

/// Parses the `key: value` body of a ring description.  `origin` labels
/// error locations; `line_offset` shifts reported line numbers when the
/// body is embedded in a larger file.
pub fn parse_ring_body(text: &str, origin: &str, line_offset: usize) -> Result<RingSpec> {
    let mut vars: Option<Vec<(String, u64)>> = None;
    let mut relations: Vec<String> = Vec::new();
    let mut recipe: Option<RingRecipe> = None;
    let mut field_override = None;

    for (idx, raw) in text.lines().enumerate() {
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
            "field" => field_override = Some(parse_field(value)?),
            "vars" => vars = Some(parse_vars(value)?),
            "rels" => relations.extend(
                value
                    .split(',')
                    .map(|r| r.trim().to_string())
                    .filter(|r| !r.is_empty()),
            ),
            "recipe" => recipe = Some(parse_recipe_line(value)?),
            other => {
                return Err(CliError::usage(format!(
                    "{origin}:{lineno}: unknown key {other:?} in ring description"
                )))
            }
        }
    }

    let recipe = match (vars, recipe) {
        (Some(vars), None) => RingRecipe::Raw { vars, relations },
        (None, Some(r)) => {
            if !relations.is_empty() {
                return Err(CliError::usage(format!(
                    "{origin}: rels are only valid together with vars, not a recipe"
                )));
            }
            r
        }
        (Some(_), Some(_)) => {
            return Err(CliError::usage(format!(
                "{origin}: give either vars or a recipe, not both"
            )))
        }
        (None, None) => {
            return Err(CliError::usage(format!(
                "{origin}: a ring description needs vars or a recipe"
            )))
        }
    };

    Ok(RingSpec {
        recipe,
        field_override,
        source: origin.to_string(),
    })
}

/// Accepts either an inline spec or a path to a ring file.
pub fn resolve(spec: &str) -> Result<RingSpec> {
    if spec.trim_start().starts_with("k[") {
        parse_inline(spec)
    } else {
        let path = Path::new(spec);
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read ring file {spec:?}: {e}")))?;
        let mut parsed = parse_ring_body(&text, spec, 0)?;
        parsed.source = spec.to_string();
        Ok(parsed)
    }
}
