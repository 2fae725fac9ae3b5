// SPDX-License-Identifier: Apache-2.0

//! The `bisoft` command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 validation failure,
//! 3 counterexample found for a claim expected to hold.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::fixture::{Fixture, FixtureDocument};
use crate::rough::rough_regions;
use crate::search::{self, Corpus, Expect, SearchConfig};
use crate::separation::{AxiomReport, Orientation, ReportOptions};
use crate::softset::{Context, SoftSet, Subset};
use crate::topology::PointTopology;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bisoft", version, about = "Bi-soft topological spaces: separation axioms, rough approximation and counterexample search")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SpaceArgs {
    /// Fixture document.
    pub file: PathBuf,
    /// Name of a bi-soft space in the document.
    #[arg(long, default_value = "S")]
    pub space: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every named topology of a fixture.
    Validate { file: PathBuf },
    /// Soft, pairwise and strong separation axioms of a space.
    Axioms {
        #[command(flatten)]
        space: SpaceArgs,
        /// Also report the order-sensitive pairwise soft T0 reading.
        #[arg(long)]
        strict_orientation: bool,
        /// Record the separating soft sets of every pair.
        #[arg(long)]
        witnesses: bool,
    },
    /// Members of the supremum topology in canonical order.
    Sup {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// The classical bitopology at one parameter.
    Slice {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        param: String,
    },
    /// The subspace on a set of elements, as a fixture document.
    Subspace {
        #[command(flatten)]
        space: SpaceArgs,
        /// Elements to keep, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<String>,
    },
    /// Rough approximation of a named soft set.
    Rough {
        #[command(flatten)]
        space: SpaceArgs,
        /// Soft set name; defaults to the document target.
        #[arg(long)]
        target: Option<String>,
    },
    /// Search for a counterexample to one claim, or verify every claim
    /// expected to hold when no claim is given.
    Search {
        #[arg(long)]
        claim: Option<String>,
        #[arg(long, default_value_t = 2)]
        max_x: usize,
        #[arg(long, default_value_t = 2)]
        params: usize,
        /// Sample this many random candidates instead of enumerating.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Range over every shape up to `max-x` by `params`.
        #[arg(long)]
        vary: bool,
    },
    /// List the claim registry.
    Claims,
}

/// Parses `args` and runs the command. Never panics on bad input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InvalidTopology(_) => EXIT_INVALID,
                _ => EXIT_USAGE,
            }
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn family(ctx: &Context, t: &PointTopology) -> String {
    let items: Vec<String> = t.opens().iter().map(|u| u.display(ctx.universe()).to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn names(ctx: &Context, s: Subset) -> Vec<&str> {
    s.iter().map(|x| ctx.universe().name(x)).collect()
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Validate { file } => validate(cli.json, file, out),
        Command::Axioms {
            space,
            strict_orientation,
            witnesses,
        } => {
            let fx = Fixture::load(&space.file)?;
            let s = fx.space(&space.space)?;
            let options = ReportOptions {
                orientation: if *strict_orientation {
                    Orientation::Strict
                } else {
                    Orientation::Symmetric
                },
                record_separators: *witnesses,
            };
            let report = AxiomReport::build(&s, options);
            if cli.json {
                emit(out, &report)?;
                return Ok(EXIT_OK);
            }
            for c in &report.checks {
                match &c.failing_pair {
                    Some((x, y)) => writeln!(out, "{}: false (fails at ({x}, {y}))", c.label)?,
                    None => writeln!(out, "{}: true", c.label)?,
                }
                for sep in &c.separators {
                    let labels: Vec<String> = sep.sets.iter().map(|s| fx.label(s)).collect();
                    writeln!(out, "  ({}, {}): {}", sep.x, sep.y, labels.join(", "))?;
                }
            }
            for sl in &report.slices {
                writeln!(
                    out,
                    "slice {}: pw T0 {}, pw T1 {}, pw T2 {}",
                    sl.parameter, sl.pw_t0, sl.pw_t1, sl.pw_t2
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Sup { space } => {
            let fx = Fixture::load(&space.file)?;
            let sup = fx.space(&space.space)?.sup();
            if cli.json {
                let members: Vec<_> = sup
                    .members()
                    .iter()
                    .map(|m| json!({ "name": fx.name_of(m), "set": m }))
                    .collect();
                emit(out, &members)?;
            } else {
                for m in sup.members() {
                    writeln!(out, "{:<4} {m}", fx.name_of(m).unwrap_or("-"))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Slice { space, param } => {
            let fx = Fixture::load(&space.file)?;
            let ctx = fx.context();
            let b = fx.space(&space.space)?.slice_named(param)?;
            if cli.json {
                let opens = |t: &PointTopology| -> Vec<Vec<&str>> { t.opens().iter().map(|&u| names(ctx, u)).collect() };
                emit(
                    out,
                    &json!({
                        "parameter": param,
                        "first": opens(b.p()),
                        "second": opens(b.q()),
                        "pw_t0": b.pw_t0(),
                        "pw_t1": b.pw_t1(),
                        "pw_t2": b.pw_t2(),
                    }),
                )?;
            } else {
                writeln!(out, "T1{param} = {}", family(ctx, b.p()))?;
                writeln!(out, "T2{param} = {}", family(ctx, b.q()))?;
                writeln!(out, "pw T0: {}", b.pw_t0())?;
                writeln!(out, "pw T1: {}", b.pw_t1())?;
                writeln!(out, "pw T2: {}", b.pw_t2())?;
            }
            Ok(EXIT_OK)
        }
        Command::Subspace { space, keep } => {
            let fx = Fixture::load(&space.file)?;
            let doc = fx.subspace_document(&space.space, keep)?;
            writeln!(out, "{}", doc.to_json())?;
            Ok(EXIT_OK)
        }
        Command::Rough { space, target } => {
            let fx = Fixture::load(&space.file)?;
            let s = fx.space(&space.space)?;
            let a = match target {
                Some(name) => fx.soft_set(name)?,
                None => fx
                    .target()
                    .ok_or_else(|| Error::Fixture("no --target and no document target".into()))?,
            };
            let r = rough_regions(&s, a)?;
            if cli.json {
                emit(out, &r)?;
                return Ok(EXIT_OK);
            }
            let ctx = fx.context();
            let regions: [(&str, &SoftSet); 5] = [
                ("lower", &r.lower),
                ("upper", &r.upper),
                ("pos", &r.pos),
                ("neg", &r.neg),
                ("bnd", &r.bnd),
            ];
            for (label, set) in regions {
                let cells: Vec<String> = set
                    .rows()
                    .enumerate()
                    .map(|(e, row)| format!("{}: {}", ctx.parameters().name(e), row.display(ctx.universe())))
                    .collect();
                writeln!(out, "{label:<6}{}", cells.join("  "))?;
            }
            writeln!(out, "definable: {}", r.definable)?;
            Ok(EXIT_OK)
        }
        Command::Search {
            claim,
            max_x,
            params,
            random,
            seed,
            vary,
        } => {
            let mut config = match random {
                Some(count) => SearchConfig::random(*max_x, *params, *count, *seed),
                None => SearchConfig::exhaustive(*max_x, *params),
            };
            if *vary {
                config = config.varying();
            }
            match claim {
                Some(id) => search_claim(cli.json, id, &config, out),
                None => verify_all(cli.json, &config, out),
            }
        }
        Command::Claims => {
            let claims: Vec<_> = search::registry()
                .iter()
                .map(|c| {
                    json!({
                        "id": c.id,
                        "aliases": c.aliases,
                        "expect": c.expect,
                        "arity": c.arity,
                        "statement": c.statement,
                    })
                })
                .collect();
            if cli.json {
                emit(out, &claims)?;
            } else {
                for c in search::registry() {
                    let tag = match c.expect {
                        Expect::Holds => "holds",
                        Expect::Refuted => "refuted",
                    };
                    writeln!(out, "{:<44} {tag:<8} {}", c.id, c.statement)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn validate(json: bool, file: &PathBuf, out: &mut dyn Write) -> Result<i32> {
    let fx = Fixture::load(file)?;
    let results = fx.validate_all();
    let ok = results.iter().all(|(_, r)| r.is_ok());
    if json {
        let rows: Vec<_> = results
            .iter()
            .map(|(name, r)| match r {
                Ok(t) => json!({ "name": name, "valid": true, "members": t.len() }),
                Err(e) => json!({ "name": name, "valid": false, "violation": e.to_string() }),
            })
            .collect();
        emit(out, &json!({ "valid": ok, "topologies": rows }))?;
    } else {
        for (name, r) in &results {
            match r {
                Ok(t) => writeln!(out, "{name}: valid ({} members)", t.len())?,
                Err(e) => writeln!(out, "{name}: {e}")?,
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_INVALID })
}

fn search_claim(json: bool, id: &str, config: &SearchConfig, out: &mut dyn Write) -> Result<i32> {
    let claim = search::lookup(id)?;
    let found = search::find_counterexample(id, config)?;
    let code = match (&found, claim.expect) {
        (Some(_), Expect::Holds) => EXIT_COUNTEREXAMPLE,
        _ => EXIT_OK,
    };
    if json {
        let fixture = found
            .as_ref()
            .map(|r| FixtureDocument::from_space(&r.candidate.space, &r.candidate.targets));
        emit(
            out,
            &json!({
                "claim": claim.id,
                "config": config,
                "counterexample": found,
                "fixture": fixture,
            }),
        )?;
        return Ok(code);
    }
    match &found {
        None => writeln!(out, "{}: no counterexample", claim.id)?,
        Some(r) => {
            writeln!(out, "{}: counterexample at candidate {}", claim.id, r.index)?;
            writeln!(out, "  {}", r.witness.detail)?;
            let doc = FixtureDocument::from_space(&r.candidate.space, &r.candidate.targets);
            writeln!(out, "{}", doc.to_json())?;
        }
    }
    Ok(code)
}

fn verify_all(json: bool, config: &SearchConfig, out: &mut dyn Write) -> Result<i32> {
    config.validate()?;
    let corpus = match config.mode {
        search::Mode::Exhaustive => Corpus::Exhaustive {
            max_cells: config.max_x * config.params,
        },
        search::Mode::Random { .. } => Corpus::Random(*config),
    };
    let report = search::verify_implications(&corpus)?;
    let code = if report.is_clean() { EXIT_OK } else { EXIT_COUNTEREXAMPLE };
    if json {
        emit(out, &report)?;
        return Ok(code);
    }
    writeln!(out, "{} candidates", report.candidates)?;
    for t in &report.tallies {
        writeln!(
            out,
            "{:<44} applicable {:>8}  violations {}",
            t.claim, t.applicable, t.violations
        )?;
    }
    Ok(code)
}
