use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use matchram::{
    construct_critical, construct_star_free, contract_partition, decompose, enumerate_critical, find_structure,
    is_free, proof_ledger, ramsey_value, star_critical_value, verify_decomposition, verify_ramsey_exhaustive,
    verify_star_exhaustive, EdgeColoring, Graph, MatchParams, SearchConfig, VertexSet,
};

#[derive(Parser)]
#[command(
    name = "matchram",
    version,
    about = "Matching Ramsey numbers: constructions, checks and exhaustive verification"
)]
struct Cli {
    /// Output format for colorings and reports.
    #[arg(long, value_enum, default_value_t = Format::Ecg, global = true)]
    format: Format,
    /// Worker threads for exhaustive runs (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
    /// Largest order an exhaustive run may enumerate.
    #[arg(long, default_value_t = matchram::search::DEFAULT_GUARD, global = true)]
    guard: usize,
    /// Write primary output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ecg,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Ramsey and star-critical values.
    Value { sizes: Vec<usize> },
    /// Write the critical construction (or its star extension).
    Construct {
        #[arg(long)]
        star: bool,
        sizes: Vec<usize>,
    },
    /// Report each color's matching number and whether the coloring is free.
    FreeCheck { file: PathBuf, sizes: Vec<usize> },
    /// Find a part-structure witness for a critical coloring.
    Structure { file: PathBuf, sizes: Vec<usize> },
    /// Gallai-Edmonds decomposition of a graph (adjlist) or of one color class (ecg/json).
    Decompose {
        file: PathBuf,
        #[arg(long)]
        color: Option<usize>,
    },
    /// Per-color counting inequalities for a free coloring.
    Ledger { file: PathBuf, sizes: Vec<usize> },
    /// Exhaustively confirm the Ramsey value.
    Verify { sizes: Vec<usize> },
    /// Enumerate critical colorings and check their structure.
    Critical { sizes: Vec<usize> },
    /// Exhaustively confirm the star-critical value.
    Star { sizes: Vec<usize> },
    /// Contract the parts of a partition (one line of vertices per part).
    Contract { file: PathBuf, partition: PathBuf },
}

/// Exit status: 0 confirmed/true, 1 refuted/false, 2 usage or input error.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Verdict {
    Yes,
    No,
}

struct Ctx {
    format: Format,
    config: SearchConfig,
    out: Box<dyn Write>,
}

impl Ctx {
    fn emit(&mut self, text: &str) -> Result<()> {
        self.out.write_all(text.as_bytes()).context("writing output")?;
        if !text.ends_with('\n') {
            self.out.write_all(b"\n")?;
        }
        Ok(())
    }

    fn emit_coloring(&mut self, ec: &EdgeColoring) -> Result<()> {
        let text = match self.format {
            Format::Ecg => ec.to_ecg(),
            Format::Json => ec.to_json(),
            Format::Dot => ec.to_dot(),
        };
        self.emit(&text)
    }
}

/// Sorts the sizes nonincreasing; the returned map sends the given position of each size to
/// its sorted position, so file colors can follow their sizes.
fn params(sizes: &[usize]) -> Result<(MatchParams, Vec<usize>)> {
    if sizes.is_empty() {
        bail!("at least one matching size is required");
    }
    let mut order: Vec<usize> = (0..sizes.len()).collect();
    order.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]));
    let (p, reordered) = MatchParams::sorted(sizes.to_vec())?;
    let mut relabel = vec![0; sizes.len()];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new + 1;
    }
    if reordered {
        eprintln!("warning: sizes reordered to {p}; colors are renumbered to match");
    }
    Ok((p, relabel))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_coloring(path: &Path) -> Result<EdgeColoring> {
    let text = read(path)?;
    let parsed = if text.trim_start().starts_with('{') {
        EdgeColoring::from_json(&text)
    } else {
        EdgeColoring::from_ecg(&text)
    };
    parsed.with_context(|| format!("parsing coloring {}", path.display()))
}

/// A coloring whose colors line up with the sorted sizes.
fn coloring_for(path: &Path, sizes: &[usize]) -> Result<(EdgeColoring, MatchParams)> {
    let (p, relabel) = params(sizes)?;
    let ec = read_coloring(path)?;
    if ec.colors() != p.colors() {
        bail!(
            "{} uses {} colors but {} sizes were given",
            path.display(),
            ec.colors(),
            p.colors()
        );
    }
    let ec = if relabel.iter().enumerate().all(|(i, &c)| c == i + 1) {
        ec
    } else {
        ec.relabel_colors(&relabel)?
    };
    Ok((ec, p))
}

fn read_partition(path: &Path, n: usize) -> Result<Vec<VertexSet>> {
    let text = read(path)?;
    let mut parts = Vec::new();
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let members = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .with_context(|| format!("{} line {}: bad vertex {t:?}", path.display(), i + 1))
            })
            .collect::<Result<Vec<_>>>()?;
        parts.push(VertexSet::from_members(n, members).with_context(|| format!("{} line {}", path.display(), i + 1))?);
    }
    Ok(parts)
}

fn set(s: &VertexSet) -> String {
    let m: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", m.join(","))
}

fn list(v: &[usize]) -> String {
    let m: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", m.join(","))
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Yes
    } else {
        Verdict::No
    }
}

fn run(cli: Cli, ctx: &mut Ctx) -> Result<Verdict> {
    match cli.command {
        Command::Value { sizes } => {
            let (p, _) = params(&sizes)?;
            ctx.emit(&format!("r={} r*={}", ramsey_value(&p), star_critical_value(&p)))?;
            Ok(Verdict::Yes)
        }
        Command::Construct { star, sizes } => {
            let (p, _) = params(&sizes)?;
            let ec = if star {
                construct_star_free(&p).coloring
            } else {
                construct_critical(&p)
            };
            ctx.emit_coloring(&ec)?;
            Ok(Verdict::Yes)
        }
        Command::FreeCheck { file, sizes } => {
            let (ec, p) = coloring_for(&file, &sizes)?;
            let free = is_free(&ec, &p)?;
            let profile = ec.matching_profile();
            if ctx.format == Format::Json {
                ctx.emit(&serde_json::json!({ "free": free, "nu": profile, "params": p }).to_string())?;
            } else {
                ctx.emit(&format!(
                    "{} nu={}",
                    if free { "FREE" } else { "NOT-FREE" },
                    list(&profile)
                ))?;
            }
            Ok(verdict(free))
        }
        Command::Structure { file, sizes } => {
            let (ec, p) = coloring_for(&file, &sizes)?;
            let w = find_structure(&ec, &p);
            match (&w, ctx.format) {
                (_, Format::Json) => ctx.emit(&serde_json::to_string(&w)?)?,
                (None, _) => ctx.emit("NONE")?,
                (Some(w), _) => {
                    let mut text = format!(
                        "WITNESS clique-color={} relabel={}\n",
                        w.clique_color(),
                        list(&w.color_relabel)
                    );
                    for (i, part) in w.parts.iter().enumerate() {
                        text.push_str(&format!("V{}={}\n", i + 1, set(part)));
                    }
                    ctx.emit(&text)?;
                }
            }
            Ok(verdict(w.is_some()))
        }
        Command::Decompose { file, color } => {
            let g = match color {
                Some(i) => read_coloring(&file)?.color_class(i)?,
                None => {
                    Graph::from_adjlist(&read(&file)?).with_context(|| format!("parsing graph {}", file.display()))?
                }
            };
            let ged = decompose(&g);
            let report = verify_decomposition(&g, &ged)?;
            if ctx.format == Format::Json {
                ctx.emit(&serde_json::json!({ "decomposition": ged, "report": report }).to_string())?;
            } else {
                let comps: Vec<String> = ged.d_components.iter().map(set).collect();
                let mark = |b: bool| if b { "ok" } else { "FAIL" };
                ctx.emit(&format!(
                    "D={}\nA={}\nC={}\nnu={} formula={}\nclauses a={} b={} c={} d={} e={}",
                    comps.join(" "),
                    set(&ged.a),
                    set(&ged.c),
                    report.matching_number,
                    report.formula_value,
                    mark(report.a),
                    mark(report.b),
                    mark(report.c),
                    mark(report.d),
                    mark(report.e),
                ))?;
            }
            Ok(verdict(report.all()))
        }
        Command::Ledger { file, sizes } => {
            let (ec, p) = coloring_for(&file, &sizes)?;
            let ledger = match proof_ledger(&ec, &p) {
                Ok(l) => l,
                Err(matchram::Error::NotFree) => {
                    ctx.emit("NOT-FREE")?;
                    return Ok(Verdict::No);
                }
                Err(e) => return Err(e.into()),
            };
            if ctx.format == Format::Json {
                ctx.emit(&serde_json::to_string(&ledger)?)?;
            } else {
                let mut text = String::new();
                for c in &ledger.colors {
                    text.push_str(&format!(
                        "color {}: a={} b={} d0={} d={} edges {}<={}{}\n",
                        c.color,
                        c.a,
                        c.b,
                        c.d0,
                        list(&c.d),
                        c.edge_bound_lhs,
                        c.edge_bound_rhs,
                        if c.holds() { "" } else { " FAIL" }
                    ));
                }
                text.push_str(&format!(
                    "uncovered pairs {} <= bound {} (order pairs {}){}\n",
                    ledger.uncovered_pairs,
                    ledger.bound_sum,
                    ledger.order_pairs,
                    if ledger.tight() { " tight" } else { "" }
                ));
                text.push_str(if ledger.holds() { "HOLDS" } else { "FAILS" });
                ctx.emit(&text)?;
            }
            Ok(verdict(ledger.holds()))
        }
        Command::Verify { sizes } => {
            let (p, _) = params(&sizes)?;
            let rep = verify_ramsey_exhaustive(&p, &ctx.config)?;
            eprintln!("verified in {:.2?}", rep.elapsed);
            let ok = rep.verified();
            if ctx.format == Format::Json {
                ctx.emit(&serde_json::to_string(&rep)?)?;
            } else {
                let r = ramsey_value(&p);
                ctx.emit(&format!("{} r={r}", if ok { "VERIFIED" } else { "REFUTED" }))?;
            }
            Ok(verdict(ok))
        }
        Command::Critical { sizes } => {
            let (p, _) = params(&sizes)?;
            let rep = enumerate_critical(&p, &ctx.config)?;
            eprintln!(
                "{} critical classes, {} without structure, {:.2?}",
                rep.critical_classes.len(),
                rep.structure_failures.len(),
                rep.elapsed
            );
            if ctx.format == Format::Json {
                ctx.emit(&serde_json::to_string(&rep)?)?;
            } else {
                for ec in &rep.critical_classes {
                    ctx.emit_coloring(ec)?;
                }
            }
            Ok(verdict(rep.lower_bound && rep.structure_failures.is_empty()))
        }
        Command::Star { sizes } => {
            let (p, _) = params(&sizes)?;
            let rep = verify_star_exhaustive(&p, &ctx.config)?;
            eprintln!(
                "{} bases, {} free at {} spokes, {} free of {} at {} spokes, {:.2?}",
                rep.bases,
                rep.free_at_lower,
                rep.spokes_lower,
                rep.free_at_upper,
                rep.configurations_upper,
                rep.spokes_lower + 1,
                rep.elapsed
            );
            let ok = rep.verified();
            if ctx.format == Format::Json {
                ctx.emit(&serde_json::to_string(&rep)?)?;
            } else {
                ctx.emit(&format!(
                    "{} r*={}",
                    if ok { "VERIFIED" } else { "REFUTED" },
                    rep.r_star
                ))?;
            }
            Ok(verdict(ok))
        }
        Command::Contract { file, partition } => {
            let ec = read_coloring(&file)?;
            let parts = read_partition(&partition, ec.order())?;
            let c = contract_partition(&ec, &parts)?;
            for (i, j, u, v) in c.representatives.iter() {
                eprintln!("part {i} -- part {j}: edge {u} {v}");
            }
            ctx.emit_coloring(&c.coloring)?;
            Ok(Verdict::Yes)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out: Box<dyn Write> = match &cli.output {
        Some(path) => match fs::File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                eprintln!("error: creating {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(std::io::stdout().lock()),
    };
    let progress: matchram::search::ProgressFn =
        Arc::new(|order, classes| eprintln!("order {order}: {classes} classes"));
    let mut ctx = Ctx {
        format: cli.format,
        config: SearchConfig {
            jobs: cli.jobs,
            guard: cli.guard,
            progress: Some(progress),
        },
        out,
    };
    let result = run(cli, &mut ctx).and_then(|v| ctx.out.flush().map(|_| v).context("flushing output"));
    match result {
        Ok(Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
