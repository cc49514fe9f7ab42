use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use kpschur::algebra::schur_to_p;
use kpschur::bernstein::{bernstein, Method};
use kpschur::json;
use kpschur::kp::{
    evaluable_pairs, grassmannian_table, pde_system, reduce_to_log, residue_check_pairs,
    FactoredPde,
};
use kpschur::plucker::{relation_set, symmetric_relation_auto, verdict, Verdict};
use kpschur::Partition;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NOT_EVALUABLE: u8 = 3;

/// Exact symmetric-function and KP τ-function computations.
///
/// Partitions are written as comma-separated parts, `6,5,5,4,1`; the empty
/// partition is `-`. Set KPSCHUR_WORKERS to fix the number of worker threads.
#[derive(Parser)]
#[command(name = "kpschur", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the U/R code of a partition.
    Code {
        #[arg(allow_hyphen_values = true)]
        partition: Partition,
    },
    /// Switch the i-th R (--up) or the i-th U from the right (--down).
    Switch(SwitchArgs),
    /// Expand B(t) s_λ as a Laurent polynomial in t.
    Bernstein {
        #[arg(allow_hyphen_values = true)]
        partition: Partition,
        #[arg(long)]
        max_weight: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
        method: MethodArg,
    },
    /// Schur function operations.
    #[command(subcommand)]
    Schur(SchurCommand),
    /// Plücker relations.
    #[command(subcommand)]
    Plucker(PluckerCommand),
    /// KP τ-function checks and equations.
    #[command(subcommand)]
    Kp(KpCommand),
}

#[derive(Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["up", "down"])))]
struct SwitchArgs {
    #[arg(long)]
    up: bool,
    #[arg(long)]
    down: bool,
    index: usize,
    #[arg(allow_hyphen_values = true)]
    partition: Partition,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Closed,
    Definitional,
    Survivor,
}

#[derive(Subcommand)]
enum SchurCommand {
    /// Expand s_λ in power sums.
    Expand {
        #[arg(allow_hyphen_values = true)]
        partition: Partition,
    },
}

#[derive(Subcommand)]
enum PluckerCommand {
    /// List the distinct relations over pairs with |α| + |β| + 1 <= W.
    Gen {
        #[arg(long)]
        max_weight: usize,
    },
    /// Evaluate every relation of `gen` on a coefficient table.
    Check {
        /// Table JSON file, or `-` for stdin.
        #[arg(long, allow_hyphen_values = true)]
        table: String,
        #[arg(long)]
        max_weight: usize,
        /// Exit 3 if any relation is not evaluable.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Subcommand)]
enum KpCommand {
    /// Check the bilinear residue of a table at every pair.
    Check {
        /// Table JSON file, or `-` for stdin.
        #[arg(long, allow_hyphen_values = true)]
        table: String,
        /// Check pairs with |α| + |β| + 1 <= W (default: the table truncation).
        #[arg(long)]
        max_weight: Option<usize>,
        /// Exit 3 if any pair is not evaluable.
        #[arg(long)]
        strict: bool,
    },
    /// Build a table from the minors of a k×n matrix (always JSON).
    TauFromMatrix {
        /// Matrix JSON file, or `-` for stdin.
        #[arg(allow_hyphen_values = true)]
        file: String,
        #[arg(long)]
        max_weight: usize,
    },
    /// The equation attached to one pair (α, β).
    Pde {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Partition,
        #[arg(long, allow_hyphen_values = true)]
        beta: Partition,
        /// Rewrite in terms of F = log τ.
        #[arg(long)]
        log: bool,
    },
    /// One equation per distinct relation with |α| + |β| + 1 <= W.
    PdeSystem {
        #[arg(long)]
        max_weight: usize,
        #[arg(long)]
        log: bool,
    },
}

/// Output text and exit status of one invocation.
struct Report {
    out: String,
    code: u8,
}

impl Report {
    fn ok(out: String) -> Self {
        Report { out, code: 0 }
    }
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn verdict_code(verdicts: impl IntoIterator<Item = Verdict>, strict: bool) -> u8 {
    let mut code = 0;
    for v in verdicts {
        match v {
            Verdict::Fails(_) => return EXIT_FAILURE,
            Verdict::NotEvaluable if strict => code = EXIT_NOT_EVALUABLE,
            _ => {}
        }
    }
    code
}

fn run(cli: Cli) -> Result<Report, String> {
    let json = cli.json;
    let report = match cli.command {
        Command::Code { partition } => {
            let code = partition.code().to_string();
            if json {
                Report::ok(format!(
                    "{{\"partition\":{:?},\"code\":\"{code}\"}}\n",
                    partition.parts()
                ))
            } else {
                Report::ok(format!("{code}\n"))
            }
        }
        Command::Switch(args) => {
            if args.index == 0 {
                return Err("switch index must be at least 1".into());
            }
            let out = if args.up {
                args.partition.switch_up(args.index)
            } else {
                args.partition.switch_down(args.index)
            };
            if json {
                Report::ok(format!("{{\"partition\":{:?}}}\n", out.parts()))
            } else {
                Report::ok(format!("{out}\n"))
            }
        }
        Command::Bernstein {
            partition,
            max_weight,
            method,
        } => {
            let method = match method {
                MethodArg::Closed => Method::Closed,
                MethodArg::Definitional => Method::Definitional,
                MethodArg::Survivor => Method::Survivor,
            };
            let l = bernstein(&partition, max_weight, method);
            if json {
                Report::ok(format!("{}\n", json::laurent_to_json(&l)))
            } else {
                Report::ok(format!("{}\n", l.to_string().trim_end()))
            }
        }
        Command::Schur(SchurCommand::Expand { partition }) => {
            let p = schur_to_p(&partition);
            if json {
                Report::ok(format!("{}\n", json::series_to_json(&p)))
            } else {
                Report::ok(format!("{p}\n"))
            }
        }
        Command::Plucker(PluckerCommand::Gen { max_weight }) => {
            let rs = relation_set(max_weight);
            if json {
                Report::ok(format!("{}\n", json::relations_to_json(&rs)))
            } else {
                Report::ok(rs.iter().map(|r| format!("{r}\n")).collect())
            }
        }
        Command::Plucker(PluckerCommand::Check {
            table,
            max_weight,
            strict,
        }) => {
            let table = json::table_from_json(&read_input(&table)?).map_err(|e| e.to_string())?;
            let checked: Vec<_> = relation_set(max_weight)
                .into_iter()
                .map(|r| {
                    let v = verdict(&r, table.series());
                    (r, v)
                })
                .collect();
            let code = verdict_code(checked.iter().map(|(_, v)| v.clone()), strict);
            let out = if json {
                format!("{}\n", json::relation_verdicts_to_json(&checked))
            } else {
                let mut s = String::new();
                for (r, v) in &checked {
                    match v {
                        Verdict::Fails(x) => writeln!(s, "fails  {r}  (value {x})"),
                        _ => writeln!(s, "{}  {r}", v.status()),
                    }
                    .unwrap();
                }
                s
            };
            Report { out, code }
        }
        Command::Kp(KpCommand::Check {
            table,
            max_weight,
            strict,
        }) => {
            let table = json::table_from_json(&read_input(&table)?).map_err(|e| e.to_string())?;
            let pairs = evaluable_pairs(max_weight.unwrap_or(table.truncation()));
            let verdicts = residue_check_pairs(&table, &pairs);
            let code = verdict_code(verdicts.iter().map(|v| v.verdict.clone()), strict);
            let out = if json {
                format!("{}\n", json::pair_verdicts_to_json(&verdicts))
            } else {
                let count = |status: &str| {
                    verdicts
                        .iter()
                        .filter(|v| v.verdict.status() == status)
                        .count()
                };
                let mut s = format!(
                    "{} pairs: {} hold, {} fail, {} not evaluable\n",
                    verdicts.len(),
                    count("holds"),
                    count("fails"),
                    count("not_evaluable")
                );
                for v in &verdicts {
                    match &v.verdict {
                        Verdict::Holds => {}
                        Verdict::Fails(x) => {
                            writeln!(s, "fails  alpha={} beta={}  (value {x})", v.alpha, v.beta)
                                .unwrap()
                        }
                        Verdict::NotEvaluable => {
                            writeln!(s, "not_evaluable  alpha={} beta={}", v.alpha, v.beta).unwrap()
                        }
                    }
                }
                s
            };
            Report { out, code }
        }
        Command::Kp(KpCommand::TauFromMatrix { file, max_weight }) => {
            let m = json::matrix_from_json(&read_input(&file)?).map_err(|e| e.to_string())?;
            let table = grassmannian_table(&m, max_weight).map_err(|e| e.to_string())?;
            Report::ok(format!("{}\n", json::table_to_json(&table)))
        }
        Command::Kp(KpCommand::Pde { alpha, beta, log }) => {
            let factored = FactoredPde::new(&symmetric_relation_auto(&alpha, &beta));
            let expr = if log {
                reduce_to_log(&factored.expand())
            } else {
                factored.expand()
            };
            if json {
                Report::ok(format!("{}\n", json::diff_expr_to_json(&expr)))
            } else if log {
                Report::ok(format!("{expr}\n"))
            } else {
                Report::ok(format!("{factored}\n"))
            }
        }
        Command::Kp(KpCommand::PdeSystem { max_weight, log }) => {
            let system = pde_system(max_weight, log);
            if json {
                let exprs: Vec<_> = system.iter().map(|e| &e.expr).collect();
                Report::ok(format!("{}\n", json::diff_exprs_to_json(&exprs)))
            } else if log {
                Report::ok(system.iter().map(|e| format!("{}\n", e.expr)).collect())
            } else {
                Report::ok(
                    system
                        .iter()
                        .map(|e| format!("{}\n", FactoredPde::new(&e.relation)))
                        .collect(),
                )
            }
        }
    };
    Ok(report)
}

fn configure_workers() -> Result<(), String> {
    let Ok(raw) = std::env::var("KPSCHUR_WORKERS") else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .map_err(|_| format!("KPSCHUR_WORKERS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_workers().and_then(|()| run(cli));
    match result {
        Ok(report) => {
            print!("{}", report.out);
            ExitCode::from(report.code)
        }
        Err(msg) => {
            eprintln!("error: {}", msg.lines().next().unwrap_or_default());
            ExitCode::from(EXIT_USAGE)
        }
    }
}
