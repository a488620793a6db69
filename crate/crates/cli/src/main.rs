//! daha-lab: enumeration, bijections, weights, and verification suites
//! with machine-readable output.
//!
//! Exit codes: 0 = pass, 1 = verification failure, 2 = usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use daha_lab_core::daha::{
    basis_sample, content_bound_check, derived_relation_table, pi_n_eigenvalue_exponent,
    relation_table, support_rule_check, twist_class_count, verify_relations, Normalization,
    Representation, TwistParam,
};
use daha_lab_core::periodic::{per, sper, PeriodicRecord};
use daha_lab_core::schur_weyl::{main_theorem_check, rmatrix_sanity};
use daha_lab_core::tableaux::{enumerate_rect_syt, tab, tab_inverse, TableauRecord};
use daha_lab_core::walks::{enumerate_walks, DominantWeight, Flavor, LoopedWalk};
use daha_lab_core::weight::{format_rat, GlWeight, SlWeight};
use serde::Serialize;
use serde_json::json;
use std::process::ExitCode;

const SCHEMA: &str = "daha-lab/v1";

#[derive(Parser)]
#[command(name = "daha-lab", version, about = "exact DAHA combinatorics lab")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker pool size (default: DAHA_LAB_THREADS or available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Output::Pretty)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    Gl,
    Sl,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Gl => Flavor::Gl,
            FlavorArg::Sl => Flavor::Sl,
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Weight flavor
    #[arg(long, value_enum, default_value_t = FlavorArg::Sl)]
    flavor: FlavorArg,
    /// Rank N
    #[arg(short = 'N', long = "rank")]
    rank: usize,
    /// Rectangle width k (n = N*k)
    #[arg(short, long)]
    k: usize,
    /// Base weight as comma-separated integers (padded with zeros to N)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambda: Option<Vec<i64>>,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate looped walks at lambda with their tableaux and weights
    Walks(CommonArgs),
    /// Enumerate standard tableaux (rectangular or skew at lambda)
    Tableaux {
        #[command(flatten)]
        common: CommonArgs,
        /// Enumerate SYT of the N x k rectangle (lambda = 0)
        #[arg(long)]
        rect: bool,
        /// Validate a tableau file instead of enumerating: JSON with
        /// "lambda" and "rows" keys; exits 2 if malformed or non-standard
        #[arg(long, value_name = "FILE")]
        input: Option<std::path::PathBuf>,
    },
    /// Periodic tableaux / shift classes at lambda, optionally a pi-orbit
    Periodic {
        #[command(flatten)]
        common: CommonArgs,
        /// Emit the full pi-orbit of each class
        #[arg(long)]
        orbit: bool,
    },
    /// Run a verification suite; exit 0 iff zero failures
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Lambda-ball radius for the basis sample
    #[arg(long, default_value_t = 3)]
    radius: i64,
    /// Seed for sampled sub-suites
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Negative control: corrupt the named coefficient (accepts "b-coeff")
    #[arg(long, value_name = "TARGET")]
    sabotage: Option<String>,
}

#[derive(Subcommand)]
enum Suite {
    /// Every defining relation of the presentation on the radius sample,
    /// plus derived X-lattice rows on a seeded subsample
    Relations(VerifyArgs),
    /// Support rules: blocking criteria, membership, multiplicity one
    Support(VerifyArgs),
    /// Ribbon-exponent comparator against the tableau-side diagonals
    MainTheorem(VerifyArgs),
    /// pi^N eigenvalues and isomorphism classes of the n twists
    Twists(VerifyArgs),
    /// Content-bound brute force behind the unique-quotient argument
    ContentBounds(VerifyArgs),
    /// R-matrix coefficient table: Hecke, Yang-Baxter, inverse, ribbon
    Rmatrix(VerifyArgs),
}

/// Usage errors exit 2; verification failures exit 1.
enum RunError {
    Usage(String),
    Verification,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads.or_else(|| {
        std::env::var("DAHA_LAB_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    }) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .ok();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(RunError::Verification) => ExitCode::from(1),
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_lambda(common: &CommonArgs) -> Result<DominantWeight, RunError> {
    let mut coords = common.lambda.clone().unwrap_or_default();
    if coords.len() > common.rank {
        return Err(RunError::Usage(format!(
            "lambda has {} coordinates but N = {}",
            coords.len(),
            common.rank
        )));
    }
    coords.resize(common.rank, 0);
    let w = match Flavor::from(common.flavor) {
        Flavor::Gl => DominantWeight::Gl(GlWeight(coords.clone())),
        Flavor::Sl => {
            let normalized = SlWeight::new(&coords);
            if normalized.gamma() != coords.as_slice() {
                eprintln!(
                    "note: lambda {coords:?} renormalized to the gamma_N = 0 representative {:?}",
                    normalized.gamma()
                );
            }
            DominantWeight::Sl(normalized)
        }
    };
    if !w.is_dominant() {
        let coords = w.coords();
        let bad = coords.windows(2).position(|p| p[0] < p[1]).unwrap_or(0);
        return Err(RunError::Usage(format!(
            "lambda {coords:?} is not dominant: coordinate {} < coordinate {}",
            bad + 1,
            bad + 2
        )));
    }
    Ok(w)
}

#[derive(Serialize)]
struct WalkRecord {
    flavor: Flavor,
    base: Vec<i64>,
    steps: Vec<usize>,
    tableau: Vec<Vec<usize>>,
    weights: Vec<String>,
    round_trip: bool,
}

impl WalkRecord {
    fn new(u: &LoopedWalk) -> Self {
        let t = tab(u);
        let round_trip = tab_inverse(&t).map(|v| v == *u).unwrap_or(false);
        WalkRecord {
            flavor: u.flavor(),
            base: u.base().coords(),
            steps: u.steps().to_vec(),
            tableau: t.rows().to_vec(),
            weights: t
                .weight_exponents()
                .iter()
                .map(|r| format_rat(*r))
                .collect(),
            round_trip,
        }
    }
}

fn emit_records<T: Serialize>(
    output: Output,
    command: &str,
    params: serde_json::Value,
    records: &[T],
    csv_header: &str,
    csv_row: impl Fn(&T) -> String,
    pretty_row: impl Fn(&T) -> String,
) {
    match output {
        Output::Json => {
            let doc = json!({
                "schema": SCHEMA,
                "command": command,
                "params": params,
                "count": records.len(),
                "records": records,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serialize"));
        }
        Output::Csv => {
            println!("{csv_header}");
            for r in records {
                println!("{}", csv_row(r));
            }
        }
        Output::Pretty => {
            for r in records {
                println!("{}", pretty_row(r));
            }
            println!("total: {}", records.len());
        }
    }
}

fn run(cli: &Cli) -> Result<(), RunError> {
    match &cli.command {
        Command::Walks(common) => {
            let lambda = parse_lambda(common)?;
            let records: Vec<WalkRecord> = enumerate_walks(&lambda, common.k)
                .iter()
                .map(WalkRecord::new)
                .collect();
            emit_records(
                cli.output,
                "walks",
                json!({"flavor": Flavor::from(common.flavor), "N": common.rank, "k": common.k,
                       "lambda": lambda.coords()}),
                &records,
                "flavor,base,steps,tableau,weights,round_trip",
                |r| {
                    format!(
                        "{},{},{},{},{},{}",
                        r.flavor,
                        join(&r.base, " "),
                        join(&r.steps, " "),
                        r.tableau
                            .iter()
                            .map(|row| join(row, " "))
                            .collect::<Vec<_>>()
                            .join("|"),
                        r.weights.join(" "),
                        r.round_trip
                    )
                },
                |r| {
                    format!(
                        "steps {:?}  tableau {:?}  wt t^({})",
                        r.steps,
                        r.tableau,
                        r.weights.join(",")
                    )
                },
            );
            Ok(())
        }
        Command::Tableaux {
            common,
            rect,
            input,
        } => {
            if let Some(path) = input {
                return check_tableau_file(cli, common, path);
            }
            let records: Vec<TableauRecord> = if *rect {
                enumerate_rect_syt(common.rank, common.k)
                    .iter()
                    .map(TableauRecord::from_tableau)
                    .collect()
            } else {
                let lambda = parse_lambda(common)?;
                enumerate_walks(&lambda, common.k)
                    .iter()
                    .map(|u| TableauRecord::from_tableau(&tab(u)))
                    .collect()
            };
            emit_records(
                cli.output,
                "tableaux",
                json!({"flavor": Flavor::from(common.flavor), "N": common.rank, "k": common.k,
                       "rect": rect}),
                &records,
                "lambda,principal_label,rows,diag,weight_exponents",
                |r| {
                    format!(
                        "{},{},{},{},{}",
                        join(&r.lambda, " "),
                        r.principal_label,
                        r.rows
                            .iter()
                            .map(|row| join(row, " "))
                            .collect::<Vec<_>>()
                            .join("|"),
                        r.diag.join(" "),
                        r.weight_exponents.join(" ")
                    )
                },
                |r| {
                    format!(
                        "rows {:?}  diag ({})  wt t^({})",
                        r.rows,
                        r.diag.join(","),
                        r.weight_exponents.join(",")
                    )
                },
            );
            Ok(())
        }
        Command::Periodic { common, orbit } => {
            let lambda = parse_lambda(common)?;
            let mut records = Vec::new();
            for u in enumerate_walks(&lambda, common.k) {
                let t = tab(&u);
                match &lambda {
                    DominantWeight::Gl(_) => {
                        let p = per(&t).map_err(|e| RunError::Usage(e.to_string()))?;
                        records.push(PeriodicRecord::from_gl(&p).expect("per image is valid"));
                    }
                    DominantWeight::Sl(_) => {
                        let c = sper(&t).map_err(|e| RunError::Usage(e.to_string()))?;
                        if *orbit {
                            let mut z = c.clone();
                            loop {
                                records.push(PeriodicRecord::from_sl(&z));
                                z = z.pi_shift().expect("rotation stays valid");
                                if z == c {
                                    break;
                                }
                            }
                        } else {
                            records.push(PeriodicRecord::from_sl(&c));
                        }
                    }
                }
            }
            emit_records(
                cli.output,
                "periodic",
                json!({"flavor": Flavor::from(common.flavor), "N": common.rank, "k": common.k,
                       "lambda": lambda.coords(), "orbit": orbit}),
                &records,
                "flavor,lambda,window,diag,weight_exponents",
                |r| {
                    format!(
                        "{},{},{},{},{}",
                        r.flavor,
                        join(&r.lambda, " "),
                        r.window
                            .iter()
                            .map(|row| join(row, " "))
                            .collect::<Vec<_>>()
                            .join("|"),
                        r.diag.join(" "),
                        r.weight_exponents.join(" ")
                    )
                },
                |r| {
                    format!(
                        "lambda {:?}  window {:?}  wt t^({})",
                        r.lambda,
                        r.window,
                        r.weight_exponents.join(",")
                    )
                },
            );
            Ok(())
        }
        Command::Verify { suite } => run_verify(cli, suite),
    }
}

fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// Validate and report a tableau read from a JSON file with "lambda" and
/// "rows" keys; malformed or non-standard input is a usage error (exit 2).
fn check_tableau_file(
    cli: &Cli,
    common: &CommonArgs,
    path: &std::path::Path,
) -> Result<(), RunError> {
    #[derive(serde::Deserialize)]
    struct TableauFile {
        lambda: Vec<i64>,
        rows: Vec<Vec<usize>>,
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| RunError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let file: TableauFile = serde_json::from_str(&text)
        .map_err(|e| RunError::Usage(format!("malformed tableau file: {e}")))?;
    let mut coords = file.lambda;
    if coords.len() > common.rank {
        return Err(RunError::Usage("lambda longer than N".into()));
    }
    coords.resize(common.rank, 0);
    let base = match Flavor::from(common.flavor) {
        Flavor::Gl => DominantWeight::Gl(GlWeight(coords)),
        Flavor::Sl => DominantWeight::Sl(SlWeight::new(&coords)),
    };
    let shape = daha_lab_core::tableaux::SkewShape::new(base, common.k)
        .map_err(|e| RunError::Usage(e.to_string()))?;
    let tableau = daha_lab_core::tableaux::SkewTableau::new(shape, file.rows)
        .map_err(|e| RunError::Usage(format!("not a standard filling: {e}")))?;
    let record = TableauRecord::from_tableau(&tableau);
    emit_records(
        cli.output,
        "tableaux",
        json!({"flavor": Flavor::from(common.flavor), "N": common.rank, "k": common.k,
               "input": path.display().to_string()}),
        &[record],
        "lambda,principal_label,rows,diag,weight_exponents",
        |r| {
            format!(
                "{},{},{},{},{}",
                join(&r.lambda, " "),
                r.principal_label,
                r.rows
                    .iter()
                    .map(|row| join(row, " "))
                    .collect::<Vec<_>>()
                    .join("|"),
                r.diag.join(" "),
                r.weight_exponents.join(" ")
            )
        },
        |r| {
            format!(
                "rows {:?}  diag ({})  wt t^({})",
                r.rows,
                r.diag.join(","),
                r.weight_exponents.join(",")
            )
        },
    );
    Ok(())
}

fn normalization_for(args: &VerifyArgs) -> Result<Normalization, RunError> {
    match args.sabotage.as_deref() {
        None => Ok(Normalization::Seminormal),
        Some("b-coeff") => Ok(Normalization::SabotagedBCoeff),
        Some(other) => Err(RunError::Usage(format!(
            "unknown sabotage target '{other}' (expected 'b-coeff')"
        ))),
    }
}

/// Deterministic seeded subsample used for the derived X-lattice rows.
fn seeded_subsample(sample: &[LoopedWalk], seed: u64, size: usize) -> Vec<LoopedWalk> {
    let mut state = seed.wrapping_add(0x9E3779B97F4A7C15);
    let mut picked: Vec<usize> = Vec::new();
    while picked.len() < size.min(sample.len()) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        let idx = (state % sample.len() as u64) as usize;
        if !picked.contains(&idx) {
            picked.push(idx);
        }
    }
    picked.sort_unstable();
    picked.into_iter().map(|i| sample[i].clone()).collect()
}

fn finish_report<T: Serialize>(
    output: Output,
    command: &str,
    params: serde_json::Value,
    report: &T,
    passed: bool,
    pretty: String,
) -> Result<(), RunError> {
    match output {
        Output::Json | Output::Csv => {
            let doc = json!({
                "schema": SCHEMA,
                "command": command,
                "params": params,
                "passed": passed,
                "report": report,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serialize"));
        }
        Output::Pretty => println!("{pretty}"),
    }
    if passed {
        Ok(())
    } else {
        Err(RunError::Verification)
    }
}

fn run_verify(cli: &Cli, suite: &Suite) -> Result<(), RunError> {
    match suite {
        Suite::Relations(args) => {
            let flavor = Flavor::from(args.common.flavor);
            let rep = Representation::new(flavor, args.common.rank, args.common.k)
                .with_normalization(normalization_for(args)?);
            let mut rows = relation_table(flavor, rep.params());
            let sample = basis_sample(flavor, args.common.rank, args.common.k, args.radius);
            if sample.is_empty() {
                return Err(RunError::Usage("empty basis sample".into()));
            }
            let mut report = verify_relations(&rep, &rows, &sample);
            // The long derived X-words have no bounded support once the
            // b-product is corrupted; the negative control targets the
            // defining table only.
            if args.sabotage.is_none() {
                let derived = derived_relation_table(rep.params());
                let sub = seeded_subsample(&sample, args.seed, 10);
                let derived_report = verify_relations(&rep, &derived, &sub);
                report.relations += derived_report.relations;
                report.checks += derived_report.checks;
                report.failures.extend(derived_report.failures);
                rows.extend(derived);
            }
            let passed = report.passed();
            let pretty = format!(
                "relations {}  basis vectors {}  checks {}  failures {}{}",
                report.relations,
                report.basis_vectors,
                report.checks,
                report.failures.len(),
                report
                    .failures
                    .iter()
                    .take(5)
                    .map(|f| format!(
                        "\n  FAIL {} on {:?}/{:?}",
                        f.relation_id, f.basis_lambda, f.basis_steps
                    ))
                    .collect::<String>()
            );
            finish_report(
                cli.output,
                "verify relations",
                json!({"flavor": flavor, "N": args.common.rank, "k": args.common.k,
                       "radius": args.radius, "seed": args.seed,
                       "sabotage": args.sabotage}),
                &report,
                passed,
                pretty,
            )
        }
        Suite::Support(args) => {
            let flavor = Flavor::from(args.common.flavor);
            let report = support_rule_check(flavor, args.common.rank, args.common.k, args.radius);
            let passed = report.passed();
            let pretty = format!(
                "interior weights {}  mismatches {}  multiplicity violations {}",
                report.interior_weights,
                report.mismatches.len(),
                report.multiplicity_violations.len()
            );
            finish_report(
                cli.output,
                "verify support",
                json!({"flavor": flavor, "N": args.common.rank, "k": args.common.k,
                       "radius": args.radius}),
                &report,
                passed,
                pretty,
            )
        }
        Suite::MainTheorem(args) => {
            let flavor = Flavor::from(args.common.flavor);
            let report = main_theorem_check(flavor, args.common.rank, args.common.k, args.radius);
            let passed = report.passed();
            if cli.output == Output::Csv {
                println!("walk_id,lambda,index,schur_weyl_exponent,tableau_exponent,match");
                let mut id = 0usize;
                for lambda in
                    daha_lab_core::walks::lambda_ball(flavor, args.common.rank, args.radius)
                {
                    for u in enumerate_walks(&lambda, args.common.k) {
                        for i in 1..=u.len() {
                            let lhs = daha_lab_core::schur_weyl::y_exponent(&u, i);
                            let t = tab(&u);
                            let rhs = t.weight_exponents()[i - 1];
                            let matches = match flavor {
                                Flavor::Gl => lhs == rhs,
                                Flavor::Sl => {
                                    lhs + daha_lab_core::scalar::Rat::new(
                                        2 * (i as i64 - 1),
                                        args.common.rank as i64,
                                    ) == rhs
                                }
                            };
                            println!(
                                "{},{},{},{},{},{}",
                                id,
                                join(&lambda.coords(), " "),
                                i,
                                lhs,
                                rhs,
                                matches
                            );
                        }
                        id += 1;
                    }
                }
                return if passed {
                    Ok(())
                } else {
                    Err(RunError::Verification)
                };
            }
            let pretty = format!(
                "walks checked {}  failures {}",
                report.walks_checked,
                report.failures.len()
            );
            finish_report(
                cli.output,
                "verify main-theorem",
                json!({"flavor": flavor, "N": args.common.rank, "k": args.common.k,
                       "radius": args.radius}),
                &report,
                passed,
                pretty,
            )
        }
        Suite::Twists(args) => {
            if Flavor::from(args.common.flavor) != Flavor::Sl {
                return Err(RunError::Usage("twists are an SL-flavor suite".into()));
            }
            let (rank_n, k) = (args.common.rank, args.common.k);
            let n = rank_n * k;
            let untwisted = pi_n_eigenvalue_exponent(rank_n, k, TwistParam { r: 0 })
                .map_err(|e| RunError::Usage(e.to_string()))?;
            let classes =
                twist_class_count(rank_n, k).map_err(|e| RunError::Usage(e.to_string()))?;
            let eigenvalues: Vec<usize> = (0..n)
                .map(|r| pi_n_eigenvalue_exponent(rank_n, k, TwistParam { r }).expect("verified"))
                .collect();
            let passed = untwisted == 0 && classes == k;
            let report = json!({
                "untwisted_pi_N_eigenvalue_exponent": untwisted,
                "twist_eigenvalue_exponents": eigenvalues,
                "isomorphism_classes": classes,
                "expected_classes": k,
            });
            let pretty = format!(
                "untwisted pi^N eigenvalue exponent {untwisted}  classes {classes} (expected {k})"
            );
            finish_report(
                cli.output,
                "verify twists",
                json!({"flavor": "sl", "N": rank_n, "k": k}),
                &report,
                passed,
                pretty,
            )
        }
        Suite::ContentBounds(args) => {
            let report = content_bound_check(args.common.rank, args.common.k);
            let passed = report.passed();
            let pretty = format!(
                "tableaux {}  gammas tried {}  violations {}",
                report.tableaux,
                report.gammas_tried,
                report.bound_violations.len() + report.nonzero_gamma_hits.len()
            );
            finish_report(
                cli.output,
                "verify content-bounds",
                json!({"N": args.common.rank, "k": args.common.k}),
                &report,
                passed,
                pretty,
            )
        }
        Suite::Rmatrix(args) => {
            let report = rmatrix_sanity(args.common.rank);
            let passed = report.passed();
            let pretty = format!(
                "N {}  hecke {}  yang-baxter {}  inverse {}  table {}  ribbon exponent {}",
                report.rank_n,
                report.hecke_ok,
                report.yang_baxter_ok,
                report.inverse_ok,
                report.coefficient_table_ok,
                report.ribbon_inverse_exponent
            );
            finish_report(
                cli.output,
                "verify rmatrix",
                json!({"N": args.common.rank}),
                &report,
                passed,
                pretty,
            )
        }
    }
}
