//! Command implementations behind the `colorlie` binary.
//!
//! Every command returns its output text and an exit status: 0 success
//! (including degenerate-form outcomes), 1 mathematical failure, 2 input
//! failure.

pub mod report;

use std::ops::RangeInclusive;
use std::path::Path;

use colorlie::catalog;
use colorlie::{parse_scalar, AlgebraError, AlgebraSpec, CatalogEntry, CycScalar, GroupElement, ParsedSpec, SpecError};

use report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn input(msg: impl std::fmt::Display) -> Self {
        Outcome {
            text: format!("error: {msg}\n"),
            code: EXIT_INPUT,
        }
    }

    fn from_report(r: Report) -> Self {
        Outcome {
            code: if r.failed { EXIT_MATH } else { EXIT_OK },
            text: r.text,
        }
    }
}

/// Where an algebra comes from: a spec file path or `catalog:<name>`.
#[derive(Clone, Debug)]
pub enum Source {
    Spec(String),
    Catalog { name: String, m: Option<usize>, n: Option<usize> },
}

impl Source {
    pub fn parse(input: &str, m: Option<usize>, n: Option<usize>) -> Self {
        match input.strip_prefix("catalog:") {
            Some(name) => Source::Catalog {
                name: name.to_string(),
                m,
                n,
            },
            None => Source::Spec(input.to_string()),
        }
    }
}

/// Either a parsed spec awaiting assembly or a built-in entry.
enum Loaded {
    Spec(Box<ParsedSpec>),
    Entry(Box<CatalogEntry>),
}

fn load(src: &Source) -> Result<Loaded, SpecError> {
    match src {
        Source::Spec(path) => Ok(Loaded::Spec(Box::new(AlgebraSpec::from_path(Path::new(path))?.parse()?))),
        Source::Catalog { name, m, n } => Ok(Loaded::Entry(Box::new(catalog::build(name, *m, *n)?))),
    }
}

/// Assembles the algebra; on a structural failure returns the exit-1 report.
fn entry_or_report(loaded: Loaded) -> Result<CatalogEntry, Outcome> {
    let parsed = match loaded {
        Loaded::Entry(e) => return Ok(*e),
        Loaded::Spec(p) => p,
    };
    let factor = colorlie::validate_factor(parsed.ctx());
    match parsed.assemble() {
        Ok(e) if factor.passed() => Ok(e),
        res => {
            let mut text = format!("# colorlie report: {}\n== validation ==\n", parsed.name);
            for c in &factor.checks {
                text.push_str(&format!("  {c}\n"));
            }
            if let Err(err) = res {
                text.push_str(&format!("  FAIL  algebra assembly: {}\n", describe(&err)));
            }
            text.push_str("result: FAIL\n");
            Err(Outcome { text, code: EXIT_MATH })
        }
    }
}

fn describe(err: &AlgebraError) -> String {
    err.to_string()
}

fn prepare(src: &Source) -> Result<CatalogEntry, Outcome> {
    let loaded = load(src).map_err(Outcome::input)?;
    entry_or_report(loaded)
}

fn degree(e: &CatalogEntry, text: &str) -> Result<GroupElement, Outcome> {
    e.algebra.ctx().parse_el(text).map_err(Outcome::input)
}

fn normalization(e: &CatalogEntry, text: Option<&str>) -> Result<CycScalar, Outcome> {
    match text {
        None => Ok(e.normalization.clone()),
        Some(t) => parse_scalar(t, e.algebra.ctx().conductor()).map_err(|err| Outcome::input(format!("normalization {t:?}: {err}"))),
    }
}

/// Parses `lo..hi`.
pub fn parse_modes(text: &str) -> Result<RangeInclusive<i64>, String> {
    let (lo, hi) = text.split_once("..").ok_or_else(|| format!("expected lo..hi, got {text:?}"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad lower mode {lo:?}"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad upper mode {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty mode window {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

fn realized(e: &CatalogEntry) -> Result<(), Outcome> {
    if e.algebra.space().is_none() {
        return Err(Outcome::input("algebra has no matrix realization"));
    }
    Ok(())
}

fn run(f: impl FnOnce() -> Result<Outcome, Outcome>) -> Outcome {
    f().unwrap_or_else(|o| o)
}

pub fn cmd_validate(src: &Source) -> Outcome {
    run(|| {
        let e = prepare(src)?;
        let mut r = report::header(&e);
        r.append_report(report::validation(&e));
        r.finish();
        Ok(Outcome::from_report(r))
    })
}

/// `degree = None` means every degree.
pub fn cmd_commutant(src: &Source, degree_text: Option<&str>) -> Outcome {
    run(|| {
        let e = prepare(src)?;
        realized(&e)?;
        let degrees = match degree_text {
            Some(t) => vec![degree(&e, t)?],
            None => e.algebra.ctx().order().to_vec(),
        };
        let mut r = report::header(&e);
        r.append_report(report::commutants(&e, &degrees).0);
        r.finish();
        Ok(Outcome::from_report(r))
    })
}

/// C_μ from the commutants of degree −μ.
pub fn cmd_casimir(src: &Source, degree_text: &str, norm: Option<&str>) -> Outcome {
    run(|| {
        let e = prepare(src)?;
        realized(&e)?;
        let mu = degree(&e, degree_text)?;
        let s = normalization(&e, norm)?;
        let ctx = e.algebra.ctx().clone();
        let seed = ctx.neg(mu);
        let mut r = report::header(&e);
        let (c, comms) = report::commutants(&e, &[seed]);
        r.append_report(c);
        if comms[0].dim() == 0 {
            r.push_line(&format!("no commutant of degree {}: no Casimir at degree {}", ctx.fmt_el(seed), ctx.fmt_el(mu)));
        } else {
            r.append_report(report::forms(&e, &comms, &s).0);
        }
        r.finish();
        Ok(Outcome::from_report(r))
    })
}

pub fn cmd_loop_check(src: &Source, modes: RangeInclusive<i64>, norm: Option<&str>) -> Outcome {
    run(|| {
        let e = prepare(src)?;
        realized(&e)?;
        let s = normalization(&e, norm)?;
        let degrees = e.algebra.ctx().order().to_vec();
        let (_, comms) = report::commutants(&e, &degrees);
        let (_, outcomes) = report::forms(&e, &comms, &s);
        let mut r = report::header(&e);
        r.append_report(report::loop_section(&e, &outcomes, modes));
        r.finish();
        Ok(Outcome::from_report(r))
    })
}

/// Spec JSON for a built-in entry.
pub fn cmd_catalog(name: &str, m: Option<usize>, n: Option<usize>) -> Outcome {
    run(|| {
        let e = catalog::build(name, m, n).map_err(Outcome::input)?;
        let spec = AlgebraSpec::from_entry(&e).map_err(Outcome::input)?;
        Ok(Outcome {
            text: spec.to_json(),
            code: EXIT_OK,
        })
    })
}

pub fn cmd_report(src: &Source, modes: RangeInclusive<i64>, norm: Option<&str>) -> Outcome {
    run(|| {
        let e = prepare(src)?;
        let s = normalization(&e, norm)?;
        Ok(Outcome::from_report(report::full_report(&e, &s, modes)))
    })
}
