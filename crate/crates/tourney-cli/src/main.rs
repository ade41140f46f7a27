//! `tourney` — generate, enumerate, and measure tournaments and digraphs.
//!
//! Every invocation prints a version/flags header (and the seed of any
//! stochastic step) to stderr so runs are reproducible from their logs;
//! stdout carries only the requested payload.

mod input;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tourney::entropy::{h_star, renyi_exact, renyi_numeric, EntropyValue};
use tourney::enumeration::{
    conjecture_table, enumerate_regular_from, enumerate_score_sequences, enumerate_tournaments,
    EnumerationBudget,
};
use tourney::order::{build_labeled_order, labeled_family};
use tourney::spectral::{self, IntMatrix};
use tourney::walks::{
    entropy_upper_bounds, von_neumann_eigen, von_neumann_series, von_neumann_walk, Digraph,
    WalkConfig,
};
use tourney::{RotationalSymbol, Tournament};

use input::{emit, gather, read_digraph, AnyError};
use report::csv_field;

#[derive(Parser)]
#[command(name = "tourney", version, about = "Tournament and digraph entropy toolkit")]
struct Cli {
    /// Output format (subcommands with a natural format ignore a mismatch)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the payload to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Transitive,
    Consecutive,
    Qr,
    Random,
    Rotational,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Series,
    Eigen,
    Walk,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a single tournament
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Vertex count (the modulus / prime for rotational kinds)
        #[arg(long)]
        n: usize,
        /// RNG seed for `random`
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated rotational symbol, e.g. 1,2,4
        #[arg(long)]
        symbols: Option<String>,
    },
    /// Enumerate isomorphism classes of tournaments
    Enum {
        #[arg(long)]
        n: usize,
        /// Regular tournaments only
        #[arg(long)]
        regular: bool,
        /// Print only the class count
        #[arg(long)]
        count_only: bool,
        /// Unlock long runs (regular n = 11, 13) and print level progress
        #[arg(long)]
        long: bool,
        /// Parallel shards for level extension
        #[arg(long, default_value_t = 1)]
        shards: usize,
        /// Keep at most this many classes
        #[arg(long)]
        limit: Option<usize>,
        /// Directory for per-level checkpoints of long regular runs;
        /// an interrupted run resumes from the last completed level
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Renyi entropy of tournaments
    Entropy {
        /// Entropy order alpha (any positive value other than 1)
        #[arg(long)]
        alpha: f64,
        /// Exact power-sum route: integer alpha >= 2, reports h* = -f_alpha
        #[arg(long)]
        exact: bool,
        /// File of `n=.. bits=..` lines, or `-` for stdin
        #[arg(long)]
        input: Option<String>,
        /// Generator spec, e.g. transitive:5, qr:7, random:6:42 (repeatable)
        #[arg(long = "gen")]
        gen: Vec<String>,
    },
    /// Characteristic polynomial and spectrum of the (normalized) Laplacian
    Spectrum {
        /// Spectrum of L itself instead of L / tr(L)
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        input: Option<String>,
        #[arg(long = "gen")]
        gen: Vec<String>,
    },
    /// Von Neumann entropy of digraphs via series, eigenvalues, or walks
    Vn {
        #[arg(long, value_enum, default_value_t = Method::Series)]
        method: Method,
        /// Series / walk truncation target
        #[arg(long, default_value_t = 1e-6)]
        epsilon: f64,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 100_000)]
        max_length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also report the degree and log2(n) upper bounds
        #[arg(long)]
        bounds: bool,
        /// Tournaments as `n=.. bits=..` lines
        #[arg(long)]
        input: Option<String>,
        #[arg(long = "gen")]
        gen: Vec<String>,
        /// Digraph as JSON `{"n": 3, "arcs": [[0,1], ...]}`
        #[arg(long)]
        graph: Option<String>,
    },
    /// Hasse diagram of the entropy order on all n-tournament classes
    Hasse {
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Power-sum order: 2, 3, or 4
        #[arg(long)]
        alpha: u32,
        /// One node per tournament instead of one per value class
        #[arg(long)]
        twins: bool,
    },
    /// Run a named assertion suite; exit code 0 iff everything passes
    Verify {
        /// One of: small-tables, extremal-23, regular-h4, spectra, walks, counts
        suite: String,
        /// Include the long assertions (regular n = 11)
        #[arg(long)]
        long: bool,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Monte Carlo truncation target
        #[arg(long, default_value_t = 2e-3)]
        epsilon: f64,
        #[arg(long, default_value_t = 1)]
        shards: usize,
    },
    /// Reference tables as CSV
    Tables {
        /// One of: four, five, scores, conjecture
        which: String,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 5)]
        alpha_max: u32,
    },
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    eprintln!(
        "tourney {} ; flags: {}",
        env!("CARGO_PKG_VERSION"),
        argv[1..].join(" ")
    );
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Runs the subcommand; the flag is false only for a failed verify suite.
fn dispatch(cli: &Cli) -> Result<bool, AnyError> {
    let payload = match &cli.command {
        Command::Gen { kind, n, seed, symbols } => {
            let t = generate(*kind, *n, *seed, symbols.as_deref())?;
            render_tournament(&t, cli.format)?
        }
        Command::Enum {
            n,
            regular,
            count_only,
            long,
            shards,
            limit,
            checkpoint,
        } => run_enum(
            *n,
            *regular,
            *count_only,
            *long,
            *shards,
            *limit,
            checkpoint.as_deref(),
            cli.format,
        )?,
        Command::Entropy { alpha, exact, input, gen } => {
            let ts = gather(input.as_deref(), gen)?;
            run_entropy(&ts, *alpha, *exact, cli.format)?
        }
        Command::Spectrum { raw, input, gen } => {
            let ts = gather(input.as_deref(), gen)?;
            run_spectrum(&ts, *raw, cli.format)?
        }
        Command::Vn {
            method,
            epsilon,
            trials,
            max_length,
            seed,
            bounds,
            input,
            gen,
            graph,
        } => {
            let mut graphs: Vec<Digraph> = Vec::new();
            if input.is_some() || !gen.is_empty() {
                for t in gather(input.as_deref(), gen)? {
                    graphs.push(Digraph::from_tournament(&t));
                }
            }
            if let Some(path) = graph {
                graphs.push(read_digraph(path)?);
            }
            if graphs.is_empty() {
                return Err("no input; pass --input, --gen, or --graph".into());
            }
            run_vn(&graphs, *method, *epsilon, *trials, *max_length, *seed, *bounds, cli.format)?
        }
        Command::Hasse { n, alpha, twins } => run_hasse(*n, *alpha, *twins, cli.format)?,
        Command::Verify {
            suite,
            long,
            trials,
            seed,
            epsilon,
            shards,
        } => {
            let opts = verify::VerifyOpts {
                long: *long,
                trials: *trials,
                seed: *seed,
                epsilon: *epsilon,
                shards: *shards,
            };
            if suite == "walks" {
                eprintln!("seed: {}", opts.seed);
            }
            let report = verify::run(suite, &opts)?;
            let payload = match cli.format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
                _ => report.to_text(),
            };
            emit(cli.out.as_ref(), &payload)?;
            return Ok(report.passed());
        }
        Command::Tables { which, n_max, alpha_max } => {
            run_tables(which, *n_max, *alpha_max, cli.format)?
        }
    };
    emit(cli.out.as_ref(), &payload)?;
    Ok(true)
}

fn generate(
    kind: GenKind,
    n: usize,
    seed: u64,
    symbols: Option<&str>,
) -> Result<Tournament, AnyError> {
    let t = match kind {
        GenKind::Transitive => Tournament::transitive(n)?,
        GenKind::Consecutive => Tournament::consecutive_rotational(n)?,
        GenKind::Qr => Tournament::quadratic_residue_tournament(n)?,
        GenKind::Random => {
            eprintln!("seed: {seed}");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Tournament::random(n, &mut rng)?
        }
        GenKind::Rotational => {
            let symbols = symbols.ok_or("rotational needs --symbols, e.g. --symbols 1,2,4")?;
            let members: Vec<usize> = symbols
                .split(',')
                .map(str::parse)
                .collect::<Result<_, _>>()?;
            Tournament::rotational(&RotationalSymbol::new(n, &members)?)
        }
    };
    Ok(t)
}

fn render_tournament(t: &Tournament, format: Format) -> Result<String, AnyError> {
    Ok(match format {
        Format::Text => format!("{}\n", t.to_text()),
        Format::Json => {
            let value = serde_json::json!({
                "n": t.n(),
                "text": t.to_text(),
                "arcs": t.arcs(),
                "scores": t.scores_by_vertex(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value)?)
        }
        Format::Csv => {
            let mut out = String::from("from,to\n");
            for (u, v) in t.arcs() {
                out.push_str(&format!("{u},{v}\n"));
            }
            out
        }
        Format::Dot => {
            let mut out = String::from("digraph tournament {\n");
            for (u, v) in t.arcs() {
                out.push_str(&format!("  {u} -> {v};\n"));
            }
            out.push_str("}\n");
            out
        }
    })
}

#[allow(clippy::too_many_arguments)]
fn run_enum(
    n: usize,
    regular: bool,
    count_only: bool,
    long: bool,
    shards: usize,
    limit: Option<usize>,
    checkpoint: Option<&std::path::Path>,
    format: Format,
) -> Result<String, AnyError> {
    let budget = EnumerationBudget {
        max_n: if long && regular { 13 } else { 8 },
        max_count: limit,
        parallel_shards: shards.max(1),
    };
    let classes = if regular {
        if n >= 11 && !long {
            return Err(format!("regular n={n} is a long run; pass --long").into());
        }
        let seeds = match checkpoint.and_then(|dir| load_checkpoint(dir, n)) {
            Some((level, seeds)) => {
                eprintln!("resuming from checkpointed level {level} ({} classes)", seeds.len());
                seeds
            }
            None => vec![Tournament::from_bits(1, 0)?],
        };
        enumerate_regular_from(n, &budget, seeds, |j, reps| {
            if long {
                eprintln!("level {j}: {} classes", reps.len());
            }
            if let Some(dir) = checkpoint {
                if let Err(e) = save_checkpoint(dir, n, j, reps) {
                    eprintln!("checkpoint write failed: {e}");
                }
            }
        })?
    } else {
        enumerate_tournaments(n, &budget)?
    };

    Ok(match format {
        Format::Json => {
            let texts: Option<Vec<String>> =
                (!count_only).then(|| classes.iter().map(Tournament::to_text).collect());
            let value = serde_json::json!({
                "n": n,
                "regular": regular,
                "count": classes.len(),
                "classes": texts,
            });
            format!("{}\n", serde_json::to_string_pretty(&value)?)
        }
        Format::Csv => {
            if count_only {
                format!("n,regular,count\n{n},{regular},{}\n", classes.len())
            } else {
                let mut out = String::from("index,text,scores\n");
                for (i, t) in classes.iter().enumerate() {
                    let scores: Vec<String> = t
                        .score_sequence()
                        .scores()
                        .iter()
                        .map(usize::to_string)
                        .collect();
                    out.push_str(&format!(
                        "{i},{},{}\n",
                        t.to_text(),
                        csv_field(&scores.join(" "))
                    ));
                }
                out
            }
        }
        _ => {
            if count_only {
                format!("{}\n", classes.len())
            } else {
                let mut out = String::new();
                for t in &classes {
                    out.push_str(&t.to_text());
                    out.push('\n');
                }
                out
            }
        }
    })
}

fn checkpoint_path(dir: &std::path::Path, n: usize, level: usize) -> PathBuf {
    dir.join(format!("regular-{n}-level-{level}.txt"))
}

/// Highest fully written level snapshot for this order, if any.
fn load_checkpoint(dir: &std::path::Path, n: usize) -> Option<(usize, Vec<Tournament>)> {
    for level in (2..n).rev() {
        let path = checkpoint_path(dir, n, level);
        let Ok(text) = std::fs::read_to_string(&path) else {
            continue;
        };
        let parsed: Result<Vec<Tournament>, _> =
            text.lines().map(Tournament::from_text).collect();
        match parsed {
            Ok(seeds) if !seeds.is_empty() => return Some((level, seeds)),
            _ => eprintln!("ignoring unreadable checkpoint {}", path.display()),
        }
    }
    None
}

fn save_checkpoint(
    dir: &std::path::Path,
    n: usize,
    level: usize,
    reps: &[Tournament],
) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut text = String::with_capacity(reps.len() * 24);
    for t in reps {
        text.push_str(&t.to_text());
        text.push('\n');
    }
    // Write-then-rename so a killed run never leaves a torn level file.
    let tmp = checkpoint_path(dir, n, level).with_extension("tmp");
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, checkpoint_path(dir, n, level))
}

fn run_entropy(
    ts: &[Tournament],
    alpha: f64,
    exact: bool,
    format: Format,
) -> Result<String, AnyError> {
    struct Row {
        input: String,
        value: EntropyValue,
        h_star: Option<String>,
    }
    let mut rows = Vec::with_capacity(ts.len());
    for t in ts {
        let (value, star) = if exact {
            if alpha.fract() != 0.0 || alpha < 2.0 || alpha > u32::MAX as f64 {
                return Err("--exact needs an integer alpha >= 2".into());
            }
            let a = alpha as u32;
            let star = h_star(t, a)?;
            let value = if (2..=4).contains(&a) {
                renyi_exact(t, a)?
            } else {
                // Entropy from the exact power sum: log2(f) / (1 - alpha).
                let f = -star.clone();
                if f <= num::BigRational::from_integer(0.into()) {
                    EntropyValue::Undefined(tourney::entropy::UndefinedReason::NonpositiveSum)
                } else {
                    EntropyValue::Defined(f.to_f64().unwrap().log2() / (1.0 - alpha))
                }
            };
            (value, Some(star.to_string()))
        } else {
            (renyi_numeric(t, alpha)?, None)
        };
        rows.push(Row {
            input: t.to_text(),
            value,
            h_star: star,
        });
    }

    Ok(match format {
        Format::Json => {
            let values: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "input": r.input,
                        "alpha": alpha,
                        "entropy": r.value,
                        "h_star": r.h_star,
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&values)?)
        }
        Format::Csv => {
            let mut out = String::from("input,alpha,value,reason,h_star\n");
            for r in &rows {
                let value = r.value.value().map_or(String::new(), |v| format!("{v:.12}"));
                out.push_str(&format!(
                    "{},{alpha},{value},{},{}\n",
                    csv_field(&r.input),
                    r.value.reason_str(),
                    r.h_star.as_deref().unwrap_or("")
                ));
            }
            out
        }
        _ => {
            let mut out = String::new();
            for r in &rows {
                out.push_str(&format!("{} alpha={alpha} H={}", r.input, r.value));
                if let Some(star) = &r.h_star {
                    out.push_str(&format!(" h*={star}"));
                }
                out.push('\n');
            }
            out
        }
    })
}

fn run_spectrum(ts: &[Tournament], raw: bool, format: Format) -> Result<String, AnyError> {
    struct Row {
        input: String,
        coeffs: Vec<String>,
        eigenvalues: Vec<(f64, f64)>,
    }
    let mut rows = Vec::with_capacity(ts.len());
    for t in ts {
        let l = IntMatrix::laplacian(t);
        let poly = spectral::char_poly(&l);
        let spectrum = if raw {
            spectral::roots(&poly, spectral::DEFAULT_TOL)?
        } else {
            spectral::normalized_spectrum(&l, spectral::DEFAULT_TOL)?
        };
        rows.push(Row {
            input: t.to_text(),
            coeffs: poly.coeffs().iter().map(|c| c.to_string()).collect(),
            eigenvalues: spectrum.eigenvalues().iter().map(|z| (z.re, z.im)).collect(),
        });
    }

    Ok(match format {
        Format::Json => {
            let values: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "input": r.input,
                        "char_poly": r.coeffs,
                        "normalized": !raw,
                        "eigenvalues": r.eigenvalues,
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&values)?)
        }
        Format::Csv => {
            let mut out = String::from("input,re,im\n");
            for r in &rows {
                for (re, im) in &r.eigenvalues {
                    out.push_str(&format!("{},{re:.12},{im:.12}\n", csv_field(&r.input)));
                }
            }
            out
        }
        _ => {
            let mut out = String::new();
            for r in &rows {
                out.push_str(&format!("{}\n  char poly (ascending): {}\n  eigenvalues:",
                    r.input,
                    r.coeffs.join(" ")
                ));
                for (re, im) in &r.eigenvalues {
                    out.push_str(&format!(" {re:.9}{im:+.9}i"));
                }
                out.push('\n');
            }
            out
        }
    })
}

#[allow(clippy::too_many_arguments)]
fn run_vn(
    graphs: &[Digraph],
    method: Method,
    epsilon: f64,
    trials: u64,
    max_length: usize,
    seed: u64,
    bounds: bool,
    format: Format,
) -> Result<String, AnyError> {
    if matches!(method, Method::Walk) {
        eprintln!("seed: {seed}");
    }
    let mut values = Vec::with_capacity(graphs.len());
    for g in graphs {
        let mut row = serde_json::Map::new();
        row.insert("n".into(), g.n().into());
        row.insert("arcs".into(), serde_json::to_value(g.arcs())?);
        match method {
            Method::Series => {
                row.insert("method".into(), "series".into());
                row.insert("epsilon".into(), epsilon.into());
                row.insert("value".into(), von_neumann_series(g, epsilon)?.into());
            }
            Method::Eigen => {
                row.insert("method".into(), "eigen".into());
                row.insert("value".into(), von_neumann_eigen(g)?.into());
            }
            Method::Walk => {
                let config = WalkConfig { trials, max_length, seed };
                let est = von_neumann_walk(g, &config, epsilon)?;
                row.insert("method".into(), "walk".into());
                row.insert("epsilon".into(), epsilon.into());
                row.insert("value".into(), est.estimate.into());
                row.insert("stderr".into(), est.stderr.into());
                row.insert("trials".into(), est.trials.into());
                row.insert("truncation".into(), est.truncation.into());
                row.insert("seed".into(), est.seed.into());
            }
        }
        if bounds {
            row.insert("bounds".into(), serde_json::to_value(entropy_upper_bounds(g)?)?);
        }
        values.push(serde_json::Value::Object(row));
    }

    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&values)?),
        Format::Csv => {
            let mut out = String::from("n,method,value,stderr\n");
            for v in &values {
                out.push_str(&format!(
                    "{},{},{:.12},{}\n",
                    v["n"],
                    v["method"].as_str().unwrap(),
                    v["value"].as_f64().unwrap(),
                    v.get("stderr").and_then(|s| s.as_f64()).map_or(String::new(), |s| format!("{s:.3e}")),
                ));
            }
            out
        }
        _ => {
            let mut out = String::new();
            for v in &values {
                out.push_str(&format!(
                    "n={} S={:.9} method={}",
                    v["n"],
                    v["value"].as_f64().unwrap(),
                    v["method"].as_str().unwrap()
                ));
                if let Some(stderr) = v.get("stderr").and_then(|s| s.as_f64()) {
                    out.push_str(&format!(" stderr={stderr:.3e}"));
                }
                if let Some(b) = v.get("bounds") {
                    out.push_str(&format!(
                        " degree_bound={:.9} log_bound={:.9} acyclic={}",
                        b["degree_bound"].as_f64().unwrap(),
                        b["log_bound"].as_f64().unwrap(),
                        b["is_acyclic"]
                    ));
                }
                out.push('\n');
            }
            out
        }
    })
}

fn run_hasse(n: usize, alpha: u32, twins: bool, format: Format) -> Result<String, AnyError> {
    let items = labeled_family(n)?;
    let order = build_labeled_order(&items, alpha)?;
    Ok(match format {
        Format::Dot => order.to_dot(!twins),
        Format::Csv => order.to_csv(),
        Format::Json => {
            let value = serde_json::json!({
                "alpha": alpha,
                "classes": order.class_labels(),
                "edges": order.hasse_edges(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value)?)
        }
        Format::Text => {
            let chain: Vec<String> = order
                .class_labels()
                .iter()
                .map(|c| c.join(" "))
                .collect();
            format!("{}\n", chain.join(" < "))
        }
    })
}

fn run_tables(which: &str, n_max: usize, alpha_max: u32, format: Format) -> Result<String, AnyError> {
    let csv = match which {
        "four" => {
            let mut out = String::from("label,raw2,raw3,source\n");
            let mut rows: Vec<(String, i64, i64)> = labeled_family(4)?
                .iter()
                .map(|(l, t)| {
                    let s = tourney::entropy::power_sums(t);
                    (l.clone(), s.raw2, s.raw3)
                })
                .collect();
            rows.sort();
            for (label, raw2, raw3) in rows {
                out.push_str(&format!("{label},{raw2},{raw3},reference\n"));
            }
            out
        }
        "five" => {
            let mut out = String::from("label,raw2,raw3,raw4,source\n");
            let mut rows: Vec<(String, i64, i64, i64)> = labeled_family(5)?
                .iter()
                .map(|(l, t)| {
                    let s = tourney::entropy::power_sums(t);
                    (l.clone(), s.raw2, s.raw3, s.raw4)
                })
                .collect();
            rows.sort();
            for (label, raw2, raw3, raw4) in rows {
                out.push_str(&format!("{label},{raw2},{raw3},{raw4},reference\n"));
            }
            out
        }
        "scores" => {
            let mut out = String::from("n,count,source\n");
            for n in 2..=10 {
                out.push_str(&format!(
                    "{n},{},reference\n",
                    enumerate_score_sequences(n)?.len()
                ));
            }
            out
        }
        "conjecture" => {
            let budget = EnumerationBudget::default();
            let rows = conjecture_table(n_max, alpha_max, &budget)?;
            let mut out = String::from("n,alpha,distinct_values,score_sequences,source\n");
            for row in rows {
                out.push_str(&format!(
                    "{},{},{},{},computed\n",
                    row.n, row.alpha, row.distinct_values, row.score_sequences
                ));
            }
            out
        }
        other => {
            return Err(
                format!("unknown table {other:?}; expected four, five, scores, or conjecture")
                    .into(),
            )
        }
    };
    Ok(match format {
        Format::Json => {
            let mut lines = csv.lines();
            let header: Vec<&str> = lines.next().unwrap().split(',').collect();
            let rows: Vec<serde_json::Value> = lines
                .map(|line| {
                    let mut obj = serde_json::Map::new();
                    for (key, field) in header.iter().zip(line.split(',')) {
                        obj.insert((*key).into(), (*field).into());
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&rows)?)
        }
        _ => csv,
    })
}
