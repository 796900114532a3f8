use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;
use subcubic::alpha::{alpha, fractional_chromatic, lb_t, triangle_packing_number, FRACTIONAL_CAP};
use subcubic::critical::{independence_packing, is_critical};
use subcubic::enumerate::{generate, ingest_graph6, GenConstraints, DEFAULT_GEN_CAP};
use subcubic::families::{
    classify_11_30, contains_any_forbidden, enumerate_almost_bad, enumerate_bad, enumerate_dangerous, family_t,
    family_t_minus, forbidden_six, is_forbidden, kappa, Catalog,
};
use subcubic::verify::{check, CheckOptions, ClaimId};
use subcubic::{parse_graph6, SimpleGraph};

/// Exact independence-number tools for subcubic graphs.
#[derive(Parser)]
#[command(name = "subcubic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate graphs up to isomorphism as graph6 lines.
    Gen(GenArgs),
    /// Independence number of each graph6 line.
    Alpha {
        #[command(flatten)]
        input: InputArg,
        /// Also print a maximum independent set.
        #[arg(long)]
        witness: bool,
    },
    /// Print a constructive family as graph6 lines.
    Families {
        family: Family,
        #[arg(long, default_value_t = 24)]
        max_n: usize,
        /// Print construction traces (JSON lines) instead of graph6.
        #[arg(long)]
        traces: bool,
    },
    /// Evaluate a claim over a generated or ingested corpus (JSON lines).
    Check(CheckArgs),
    /// Fractional chromatic number of each graph6 line.
    Fracchi {
        #[command(flatten)]
        input: InputArg,
        /// Also print the primal and dual certificates.
        #[arg(long)]
        certificate: bool,
    },
    /// Classification dossier for one graph.
    Trace { graph6: String },
}

#[derive(Args)]
struct InputArg {
    /// Read graph6 from this file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct GenArgs {
    #[arg(long, default_value_t = 1)]
    min_n: usize,
    #[arg(long)]
    max_n: usize,
    #[arg(long)]
    cubic: bool,
    #[arg(long, default_value_t = 0)]
    min_girth: usize,
    /// 0 allows disconnected graphs.
    #[arg(long, default_value_t = 1)]
    connectivity: u8,
    #[arg(long)]
    allow_triangles: bool,
    #[arg(long)]
    critical: bool,
    #[arg(long, default_value_t = DEFAULT_GEN_CAP)]
    cap: usize,
}

impl GenArgs {
    fn constraints(&self) -> GenConstraints {
        GenConstraints {
            min_n: self.min_n,
            max_n: self.max_n,
            cubic_only: self.cubic,
            min_girth: self.min_girth,
            min_connectivity: self.connectivity,
            triangle_free: !self.allow_triangles,
            critical_only: self.critical,
            cap: self.cap,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Bad,
    Dangerous,
    AlmostBad,
    Forbidden,
    #[value(name = "T")]
    T,
    #[value(name = "Tminus")]
    Tminus,
}

#[derive(Args)]
struct CheckArgs {
    claim: String,
    #[arg(long, conflicts_with = "input")]
    max_n: Option<usize>,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    cubic: bool,
    #[arg(long)]
    min_girth: Option<usize>,
    #[arg(long, env = "SUBCUBIC_JOBS")]
    jobs: Option<usize>,
    /// JSON file with any of the keys `max_n`, `input`, `cubic`, `min_girth`, `jobs`; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Print only the summary line.
    #[arg(long)]
    summary_only: bool,
}

#[derive(Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct CheckConfig {
    max_n: Option<usize>,
    input: Option<PathBuf>,
    #[serde(default)]
    cubic: bool,
    min_girth: Option<usize>,
    jobs: Option<usize>,
}

/// Failure that maps to exit code 2.
struct Usage(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` when a claim failed.
fn run(cli: Cli) -> Result<bool, Usage> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let passed = match cli.command {
        Command::Gen(args) => {
            for g in generate(&args.constraints())? {
                writeln!(out, "{}", g.to_graph6())?;
            }
            true
        }
        Command::Alpha { input, witness } => {
            for g in read_graphs(input.input.as_deref())? {
                let mis = alpha(&g);
                if witness {
                    let set: Vec<String> = mis.witness.iter().map(ToString::to_string).collect();
                    writeln!(out, "{} {}", mis.size, set.join(","))?;
                } else {
                    writeln!(out, "{}", mis.size)?;
                }
            }
            true
        }
        Command::Families {
            family: Family::Forbidden,
            max_n,
            traces,
        } => {
            for (name, g) in forbidden_six().iter().filter(|(_, g)| g.n() <= max_n) {
                if traces {
                    writeln!(out, "{}", json!({"name": name, "graph6": g.to_graph6()}))?;
                } else {
                    writeln!(out, "{}", g.to_graph6())?;
                }
            }
            true
        }
        Command::Families { family, max_n, traces } => {
            let cat = family_catalog(family, max_n)?;
            if traces {
                cat.write_traces(&mut out)?;
            } else {
                cat.write_graph6(&mut out)?;
            }
            true
        }
        Command::Check(args) => run_check(args, &mut out)?,
        Command::Fracchi { input, certificate } => {
            for g in read_graphs(input.input.as_deref())? {
                let chi = fractional_chromatic(&g)?;
                if certificate {
                    let coloring: Vec<_> = chi.coloring.iter().map(|(set, x)| json!({"set": set, "weight": x.to_string()})).collect();
                    let weights: Vec<String> = chi.weights.iter().map(ToString::to_string).collect();
                    let line = json!({"graph6": g.to_graph6(), "chi_f": chi.value.to_string(), "coloring": coloring, "weights": weights});
                    writeln!(out, "{line}")?;
                } else {
                    writeln!(out, "{}", chi.value)?;
                }
            }
            true
        }
        Command::Trace { graph6 } => {
            let g = parse_graph6(graph6.trim().as_bytes()).context("parsing graph6 argument")?;
            writeln!(out, "{}", serde_json::to_string_pretty(&dossier(&g)?)?)?;
            true
        }
    };
    out.flush()?;
    Ok(passed)
}

fn read_graphs(path: Option<&Path>) -> Result<Vec<SimpleGraph>> {
    let reader: Box<dyn BufRead> = match path {
        Some(p) => Box::new(BufReader::new(File::open(p).with_context(|| format!("opening {}", p.display()))?)),
        None => Box::new(io::stdin().lock()),
    };
    Ok(ingest_graph6(reader, None, true)?.graphs.into_iter().map(|g| g.graph).collect())
}

fn family_catalog(family: Family, max_n: usize) -> Result<Catalog> {
    Ok(match family {
        Family::Bad => enumerate_bad(max_n)?,
        Family::Dangerous => enumerate_dangerous(max_n)?,
        Family::AlmostBad => enumerate_almost_bad(max_n)?,
        Family::T => family_t(max_n)?,
        Family::Tminus => family_t_minus(max_n)?,
        Family::Forbidden => unreachable!("forbidden graphs are printed directly"),
    })
}

fn run_check(args: CheckArgs, out: &mut impl Write) -> Result<bool, Usage> {
    let claim: ClaimId = args.claim.parse()?;
    let config: CheckConfig = match &args.config {
        Some(p) => serde_json::from_reader(File::open(p).with_context(|| format!("opening {}", p.display()))?)
            .with_context(|| format!("reading config {}", p.display()))?,
        None => CheckConfig::default(),
    };
    let input = args.input.or(config.input);
    let max_n = args.max_n.or(config.max_n);
    let cubic = args.cubic || config.cubic;
    let min_girth = args.min_girth.or(config.min_girth).unwrap_or(0);
    let jobs = args.jobs.or(config.jobs);
    let corpus = match (input, max_n) {
        (Some(_), Some(_)) => return Err(anyhow!("--input and --max-n are exclusive").into()),
        (Some(path), None) => read_graphs(Some(&path))?,
        (None, Some(max_n)) => {
            let c = GenConstraints {
                max_n,
                cubic_only: cubic,
                min_girth,
                triangle_free: !matches!(claim, ClaimId::ThmTriangles | ClaimId::CorTriangles),
                min_connectivity: if claim == ClaimId::Main38 { 0 } else { 1 },
                ..GenConstraints::default()
            };
            generate(&c)?
        }
        (None, None) => return Err(anyhow!("give either --input FILE or --max-n K").into()),
    };
    let outcome = check(claim, &corpus, &CheckOptions { jobs })?;
    let started = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    writeln!(out, "{}", json!({"header": {"claim_id": claim, "corpus": corpus.len(), "unix_time": started}}))?;
    if !args.summary_only {
        for r in &outcome.reports {
            writeln!(out, "{}", serde_json::to_string(r)?)?;
        }
    }
    writeln!(out, "{}", json!({"summary": outcome.summary}))?;
    Ok(!outcome.summary.failed())
}

fn dossier(g: &SimpleGraph) -> Result<serde_json::Value> {
    let mis = alpha(g);
    let n = g.n();
    // `null` when the catalog cannot be built to this order
    let member = |cat: subcubic::error::Result<Catalog>| cat.ok().map(|c| c.contains(g));
    let tf = g.is_triangle_free();
    let connected = g.is_connected();
    let mut d = json!({
        "graph6": g.to_graph6(),
        "n": n,
        "m": g.m(),
        "degree_counts": g.degree_counts(),
        "subcubic": g.is_subcubic(),
        "triangle_free": tf,
        "girth": g.girth().to_string(),
        "connectivity": g.connectivity_class().as_u8(),
        "alpha": mis.size,
        "witness": mis.witness,
        "kappa": kappa(g),
    });
    if !g.is_subcubic() {
        return Ok(d);
    }
    let lb = g.lb()?;
    d["lb24"] = json!(lb.num24());
    d["lb"] = json!(lb.to_string());
    d["triangle_packing"] = json!(triangle_packing_number(g));
    if connected {
        d["lb_t24"] = json!(lb_t(g)?.num24());
    }
    d["critical"] = json!(is_critical(g));
    d["forbidden"] = json!(is_forbidden(g));
    d["contains_forbidden"] = json!(contains_any_forbidden(g));
    d["bad"] = json!(if n % 8 == 0 { member(enumerate_bad(n)) } else { Some(false) });
    d["dangerous"] = json!(if n % 8 == 5 { member(enumerate_dangerous(n)) } else { Some(false) });
    d["almost_bad"] = json!(if tf { Some(false) } else { member(enumerate_almost_bad(n)) });
    if connected && tf {
        d["case_11_30"] = json!(classify_11_30(g)?);
    }
    if n <= FRACTIONAL_CAP {
        d["chi_f"] = json!(fractional_chromatic(g)?.value.to_string());
    }
    let packing = independence_packing(g);
    d["independence_packing"] = json!(packing.parts);
    Ok(d)
}
