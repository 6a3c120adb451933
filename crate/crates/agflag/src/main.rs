//! Command-line front end: reproduce the golden cases, build flags, run
//! subset searches, render admissible-pair tables, and query numerical
//! semigroups.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use agflag::curve::{CurveModel, BUILTIN_NAMES};
use agflag::flag::{flag_report, isometry_dual, CompleteFlag};
use agflag::puncture::{
    klein_ladder, pair_table, puncture, search_subsets, PairTable, SearchError, SearchOutcome,
    SearchPolicy, DEFAULT_BUDGET,
};
use agflag::repro;
use agflag::rmflag::{self, RmPolicy};
use agflag::semigroup::NumericalSemigroup;

#[derive(Parser)]
#[command(name = "agflag", version, about = "Exact isometry-dual flag toolkit for one-point AG codes")]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized policies
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Subset budget for exhaustive searches
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads (speed only; results are identical for any count)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Load a custom curve model from a JSON config file
    #[arg(long, global = true)]
    model_config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Re-run a golden reproduction case (or `all`)
    Repro { id: String },
    /// Build the complete flag on a column subset and report duality
    Flag(FlagArgs),
    /// Exhaustive admissible-pair table for a model
    Table(TableArgs),
    /// Rebuild a flag on a subset of its columns and check inheritance
    Puncture(PunctureArgs),
    /// The nested Klein flags D_2 < D_5 < ... < D_23
    KleinLadder,
    /// Reed-Muller-type cube commands
    #[command(subcommand)]
    Rm(RmCommand),
    /// Numerical semigroup queries
    Sg(SgArgs),
}

#[derive(Args)]
struct FlagArgs {
    #[arg(long)]
    model: String,
    /// Comma-separated column indices (0-based) or point labels; all
    /// columns when omitted
    #[arg(long)]
    columns: Option<String>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    model: String,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// exhaustive | random
    #[arg(long, default_value = "exhaustive")]
    policy: String,
    /// Trials per size under the random policy
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
}

#[derive(Args)]
struct PunctureArgs {
    #[arg(long)]
    model: String,
    /// Parent columns (indices or labels); all columns when omitted
    #[arg(long)]
    columns: Option<String>,
    /// Positions (0-based) within the parent columns to keep
    #[arg(long)]
    keep: String,
}

#[derive(Subcommand)]
enum RmCommand {
    /// Count isometry-dual subsets of a given size
    Count {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        size: usize,
        /// exhaustive | span
        #[arg(long, default_value = "exhaustive")]
        policy: String,
    },
    /// Print the DegLex divisibility matrix A and A A^T
    Cube {
        #[arg(long)]
        m: u32,
    },
    /// Weight distribution of the designated row span
    Weights {
        #[arg(long)]
        m: u32,
    },
    /// Random sample check: duals found must lie in the span candidates
    Spot {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
    },
}

#[derive(Args)]
struct SgArgs {
    /// Comma-separated gap list (may be empty for the naturals)
    #[arg(long)]
    gaps: Option<String>,
    /// Comma-separated generator list
    #[arg(long)]
    gens: Option<String>,
    #[command(subcommand)]
    query: SgQuery,
}

#[derive(Subcommand)]
enum SgQuery {
    /// Genus, conductor, gaps
    Genus,
    /// D(i) and G(i) for the i-th nongap
    Profile { index: usize },
    /// All leaders up to a bound
    Leaders { bound: u64 },
    /// Analyze the ideal with the given complement in S
    Ideal { complement: String },
    /// Maximum sparse ideal from the i-th nongap as leader
    Maxsparse { index: usize },
    /// Five-way inclusion equivalence for two leaders (by value)
    Incl { leader_a: u64, leader_b: u64 },
    /// Clifford/Dyck inequalities at a
    Clifford { a: u64 },
}

fn parse_list(s: &str) -> Vec<u64> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().expect("expected an integer list"))
        .collect()
}

fn load_model(cli: &Cli, name: &str) -> Result<CurveModel, String> {
    if let Some(path) = &cli.model_config {
        return CurveModel::from_config_path(path).map_err(|e| e.to_string());
    }
    CurveModel::builtin(name).map_err(|e| {
        format!("{e}; built-ins: {}", BUILTIN_NAMES.join(", "))
    })
}

/// Splits on commas outside parentheses, so point labels like `(w,w2)` work.
fn split_columns(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            ',' if depth == 0 => {
                if !cur.trim().is_empty() {
                    out.push(cur.trim().to_string());
                }
                cur.clear();
            }
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn resolve_columns(model: &CurveModel, spec: &Option<String>) -> Result<Vec<usize>, String> {
    match spec {
        None => Ok((0..model.point_count()).collect()),
        Some(s) => split_columns(s)
            .iter()
            .map(|t| {
                if let Ok(i) = t.parse::<usize>() {
                    return Ok(i);
                }
                model
                    .points
                    .iter()
                    .position(|p| p.label == *t)
                    .ok_or_else(|| format!("no column `{t}`"))
            })
            .collect(),
    }
}

fn cache_dir() -> PathBuf {
    std::env::var_os("AGFLAG_CACHE")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".agflag-cache"))
}

fn cached_search(
    model: &CurveModel,
    s: usize,
    policy: &SearchPolicy,
    budget: u64,
    seed: u64,
) -> Result<SearchOutcome, SearchError> {
    let dir = cache_dir();
    let key = dir.join(format!(
        "{}_{}_{}_{}.json",
        model.name,
        s,
        policy.cache_key(),
        seed
    ));
    if let Ok(text) = std::fs::read_to_string(&key) {
        if let Ok(out) = serde_json::from_str::<SearchOutcome>(&text) {
            return Ok(out);
        }
    }
    let out = search_subsets(model, s, policy, budget)?;
    if std::fs::create_dir_all(&dir).is_ok() {
        let _ = std::fs::write(&key, serde_json::to_string(&out).unwrap());
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Repro { id } => {
            let reports = if id == "all" {
                repro::run_all()
            } else {
                vec![repro::run(id).map_err(|e| e.to_string())?]
            };
            let all_pass = reports.iter().all(|r| r.passed);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&reports).unwrap());
            } else {
                for r in &reports {
                    println!("[{}] {}", if r.passed { "PASS" } else { "FAIL" }, r.id);
                    for c in &r.checks {
                        if r.passed {
                            println!("    ok: {} ({})", c.name, c.detail);
                        } else {
                            let tag = if c.passed { "ok" } else { "DIFF" };
                            println!("    {tag}: {} ({})", c.name, c.detail);
                        }
                    }
                }
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Flag(args) => {
            let model = load_model(cli, &args.model)?;
            let cols = resolve_columns(&model, &args.columns)?;
            let flag = CompleteFlag::from_model(&model, &cols).map_err(|e| e.to_string())?;
            let verdict = isometry_dual(&flag).map_err(|e| e.to_string())?;
            let report = flag_report(&model, &flag, &verdict);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("model: {}", report.model);
                println!("columns: {}", report.columns.join(" "));
                println!("n = {}, m = {}, region {:?}", report.n, report.m, report.region);
                println!("W* = {:?}", report.wstar);
                println!("rows: {}", report.row_functions.join(", "));
                println!("isometry-dual: {}", report.is_dual);
                if let Some(v) = &report.v_text {
                    println!("dualizing vector: ({})", v.join(", "));
                }
                if let Some(f) = &report.failure {
                    println!("failure: {f:?}");
                }
                println!("G diag(v) G^T:");
                for line in &report.product_text {
                    println!("  {line}");
                }
                if !report.violations.is_empty() {
                    println!("violations: {:?}", report.violations);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table(args) => {
            let model = load_model(cli, &args.model)?;
            let mut outcomes = Vec::new();
            for s in 1..=args.max_n.min(model.point_count()) {
                let policy = match args.policy.as_str() {
                    "exhaustive" => SearchPolicy::Exhaustive,
                    "random" => SearchPolicy::Random {
                        seed: cli.seed,
                        trials: args.trials,
                    },
                    other => return Err(format!("unknown policy `{other}`")),
                };
                match cached_search(&model, s, &policy, cli.budget, cli.seed) {
                    Ok(o) => {
                        if !o.violations.is_empty() {
                            eprintln!(
                                "warning: {} property violations at size {s}",
                                o.violations.len()
                            );
                        }
                        outcomes.push(o);
                    }
                    Err(SearchError::BudgetExceeded { s, subsets, budget }) => {
                        eprintln!(
                            "size {s}: {subsets} subsets exceed budget {budget}"
                        );
                        return Ok(ExitCode::from(3));
                    }
                    Err(e) => return Err(e.to_string()),
                }
            }
            let table = pair_table(&model, &outcomes, args.max_n);
            print_table(cli, &table);
            Ok(ExitCode::SUCCESS)
        }
        Command::Puncture(args) => {
            let model = load_model(cli, &args.model)?;
            let cols = resolve_columns(&model, &args.columns)?;
            let parent = CompleteFlag::from_model(&model, &cols).map_err(|e| e.to_string())?;
            let keep: Vec<usize> = parse_list(&args.keep).iter().map(|&x| x as usize).collect();
            let report = puncture(&model, &parent, &keep).map_err(|e| e.to_string())?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!(
                    "parent n = {} (dual: {}), child s = {} (dual: {})",
                    report.parent_n, report.parent_dual, report.child_s, report.child_dual
                );
                println!("child W' = {:?}", report.child_wstar);
                println!("W' within parent W*: {}", report.wprime_contained);
                println!(
                    "removed {} points; in W: {} (theorem applicable: {})",
                    report.removed, report.removed_in_w, report.theorem_applicable
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::KleinLadder => {
            let ladder = klein_ladder();
            if cli.json {
                let rows: Vec<serde_json::Value> = ladder
                    .iter()
                    .map(|(f, v)| {
                        serde_json::json!({
                            "n": f.n(),
                            "wstar": f.wstar,
                            "is_dual": v.is_dual,
                            "v": v.dualizing,
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            } else {
                for (f, v) in &ladder {
                    println!(
                        "D_{:<2} dual: {}  W* = {:?}",
                        f.n(),
                        v.is_dual,
                        f.wstar
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rm(cmd) => run_rm(cli, cmd),
        Command::Sg(args) => run_sg(cli, args),
    }
}

fn print_table(cli: &Cli, table: &PairTable) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(table).unwrap());
    } else {
        println!("{}", table.render_text());
    }
}

fn run_rm(cli: &Cli, cmd: &RmCommand) -> Result<ExitCode, String> {
    match cmd {
        RmCommand::Count { m, size, policy } => {
            let policy = match policy.as_str() {
                "exhaustive" => RmPolicy::Exhaustive,
                "span" => RmPolicy::SpanCharacterization,
                other => return Err(format!("unknown policy `{other}`")),
            };
            match rmflag::count_dual_subsets(*m, *size, policy, cli.budget) {
                Ok(r) => {
                    if cli.json {
                        println!(
                            "{}",
                            serde_json::json!({
                                "m": r.m,
                                "size": r.subset_size,
                                "policy": r.policy,
                                "examined": r.subsets_examined,
                                "candidates": r.candidates,
                                "count": r.verified_dual,
                            })
                        );
                    } else {
                        println!(
                            "m={} size={} policy={:?}: {} candidate(s), {} verified isometry-dual",
                            r.m, r.subset_size, r.policy, r.candidates, r.verified_dual
                        );
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(rmflag::RmError::BudgetExceeded { subsets, budget }) => {
                    eprintln!("{subsets} subsets exceed budget {budget}; use --policy span");
                    Ok(ExitCode::from(3))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        RmCommand::Cube { m } => {
            let cube = rmflag::cube(*m).map_err(|e| e.to_string())?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "m": m,
                        "order": cube.order,
                        "matrix": cube.matrix,
                        "self_product": cube.self_product(),
                    })
                );
            } else {
                println!("points/monomials in DegLex order:");
                let names: Vec<String> = cube
                    .order
                    .iter()
                    .map(|&f| rmflag::monomial_name(f, *m))
                    .collect();
                println!("  {}", names.join(" "));
                println!("A:");
                for row in &cube.matrix {
                    println!(
                        "  {}",
                        row.iter().map(u16::to_string).collect::<Vec<_>>().join(" ")
                    );
                }
                println!("A A^T:");
                for row in cube.self_product() {
                    println!(
                        "  {}",
                        row.iter().map(u16::to_string).collect::<Vec<_>>().join(" ")
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        RmCommand::Weights { m } => {
            let wd = rmflag::span_weight_distribution(*m, &rmflag::designated_span_rows(*m))
                .map_err(|e| e.to_string())?;
            if cli.json {
                println!("{}", serde_json::to_string(&wd).unwrap());
            } else {
                let parts: Vec<String> =
                    wd.iter().map(|(w, c)| format!("{w}^{c}")).collect();
                println!("{}", parts.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        RmCommand::Spot { m, size, samples } => {
            let cube = rmflag::cube(*m).map_err(|e| e.to_string())?;
            let span = cube.row_span(&rmflag::designated_span_rows(*m));
            let allowed: Vec<Vec<bool>> = span
                .iter()
                .filter(|v| v.iter().map(|&x| x as usize).sum::<usize>() == *size)
                .map(|v| v.iter().map(|&x| x == 1).collect())
                .collect();
            let r = rmflag::random_spot_check(*m, *size, *samples, cli.seed, &allowed)
                .map_err(|e| e.to_string())?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "samples": r.samples,
                        "duals_seen": r.duals_seen,
                        "outside": r.outside_allowed.len(),
                    })
                );
            } else {
                println!(
                    "{} samples, {} dual, {} outside the span candidates",
                    r.samples,
                    r.duals_seen,
                    r.outside_allowed.len()
                );
            }
            Ok(if r.outside_allowed.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn run_sg(cli: &Cli, args: &SgArgs) -> Result<ExitCode, String> {
    let s = match (&args.gaps, &args.gens) {
        (Some(g), None) => {
            NumericalSemigroup::from_gaps(&parse_list(g)).map_err(|e| e.to_string())?
        }
        (None, Some(g)) => {
            NumericalSemigroup::from_generators(&parse_list(g)).map_err(|e| e.to_string())?
        }
        _ => return Err("provide exactly one of --gaps or --gens".into()),
    };
    let out: serde_json::Value = match &args.query {
        SgQuery::Genus => serde_json::json!({
            "gaps": s.gaps(),
            "genus": s.genus(),
            "conductor": s.conductor(),
        }),
        SgQuery::Profile { index } => {
            let p = s.profile(*index);
            serde_json::json!({
                "index": p.index, "lambda": p.lambda, "D": p.d_set, "G": p.g_count,
            })
        }
        SgQuery::Leaders { bound } => serde_json::json!({ "leaders": s.leaders(*bound) }),
        SgQuery::Ideal { complement } => {
            let ideal = s
                .ideal_from_complement(&parse_list(complement))
                .map_err(|e| e.to_string())?;
            serde_json::to_value(&ideal).unwrap()
        }
        SgQuery::Maxsparse { index } => {
            let ideal = s.max_sparse_from_leader(*index).map_err(|e| e.to_string())?;
            serde_json::to_value(&ideal).unwrap()
        }
        SgQuery::Incl { leader_a, leader_b } => {
            let ia = s
                .index_of(*leader_a)
                .ok_or_else(|| format!("{leader_a} is a gap"))?;
            let ib = s
                .index_of(*leader_b)
                .ok_or_else(|| format!("{leader_b} is a gap"))?;
            let a = s.max_sparse_from_leader(ia).map_err(|e| e.to_string())?;
            let b = s.max_sparse_from_leader(ib).map_err(|e| e.to_string())?;
            let r = s.incl_equivalences(&a, &b).map_err(|e| e.to_string())?;
            serde_json::to_value(&r).unwrap()
        }
        SgQuery::Clifford { a } => {
            let (lo, hi) = s.clifford_dyck_check(*a);
            serde_json::json!({ "nongap_bound_holds": lo, "gap_bound_holds": hi })
        }
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("{out}");
    }
    Ok(ExitCode::SUCCESS)
}
