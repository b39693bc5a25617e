//! Command-line front end. [`run`] parses argv, executes one subcommand and
//! returns the process exit code: 0 on success, 1 on a verification
//! mismatch or failed identity, 2 on usage or input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gadgets::{verify_projection, ProjectionPlan};
use crate::identities::{run_suite, IdentityReport};
use crate::limits::Limits;
use crate::linalg::{
    determinant, immanant, load_matrix, permanent, permanent_direct, permanent_ryser_with_stats, save_matrix, Matrix,
    Scalar,
};
use crate::partitions::Partition;
use crate::random::{case_rng, random_matrix};
use crate::symgroup::{character, character_table, lr_coefficient};

pub const MAX_N_ENV: &str = "IMMANANT_LAB_MAX_N";

pub const GRAMMAR: &str = "\
usage:
  immanant-lab part info <lambda>
  immanant-lab part strips <lambda> <q> --horizontal|--vertical|--skew
  immanant-lab char value <lambda> <gamma>
  immanant-lab char table <n>
  immanant-lab lr <lambda> <alpha> <beta>
  immanant-lab imm eval <lambda> --matrix F
  immanant-lab per eval --matrix F [--ryser|--direct] [--stats]
  immanant-lab det eval --matrix F
  immanant-lab gadget build <lambda> [--row-index i] [--matrix F] [--seed s] --out F
  immanant-lab gadget verify <lambda> [--row-index i] --matrix F
  immanant-lab identity check <name|all> [--max-size n] [--seed s] [--json F]
global options: --config F, --output text|json, --stream-n, --table-n, --immanant-n, --ryser-n
";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Resolved settings for one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub caps: Limits,
    pub seed: u64,
    pub output: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            caps: Limits::DEFAULT,
            seed: 0,
            output: OutputFormat::Text,
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    caps: Option<Limits>,
    seed: Option<u64>,
    output: Option<OutputFormat>,
}

impl Config {
    /// Layers the config file, then `IMMANANT_LAB_MAX_N`, then flags over
    /// the defaults.
    fn resolve(globals: &Globals, env_max_n: Option<String>) -> Result<Config> {
        let mut config = Config::default();
        if let Some(path) = &globals.config {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidArgument(format!("cannot read config {}: {e}", path.display())))?;
            let file: ConfigFile = toml::from_str(&text)
                .map_err(|e| Error::InvalidArgument(format!("bad config {}: {e}", path.display())))?;
            if let Some(caps) = file.caps {
                config.caps = caps;
            }
            if let Some(seed) = file.seed {
                config.seed = seed;
            }
            if let Some(output) = file.output {
                config.output = output;
            }
        }
        if let Some(raw) = env_max_n {
            config.caps.immanant_n = raw
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("{MAX_N_ENV}={raw:?} is not a positive integer")))?;
        }
        let caps = &mut config.caps;
        for (flag, slot) in [
            (globals.stream_n, &mut caps.stream_n),
            (globals.table_n, &mut caps.table_n),
            (globals.immanant_n, &mut caps.immanant_n),
            (globals.ryser_n, &mut caps.ryser_n),
        ] {
            if let Some(v) = flag {
                *slot = v;
            }
        }
        if let Some(output) = globals.output {
            config.output = output;
        }
        config.caps.validate()?;
        Ok(config)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "immanant-lab",
    version,
    about = "Exact immanants, permanents and gadget projections"
)]
struct Cli {
    #[command(flatten)]
    globals: Globals,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Globals {
    /// TOML file with `seed`, `output` and a `[caps]` table.
    #[arg(long, global = true, value_name = "F")]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    output: Option<OutputFormat>,
    #[arg(long, global = true, value_name = "N")]
    stream_n: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    table_n: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    immanant_n: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    ryser_n: Option<usize>,
}

fn partition_arg(text: &str) -> std::result::Result<Partition, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Partition facts and strip removals.
    #[command(subcommand)]
    Part(PartCommand),
    /// Irreducible characters of the symmetric group.
    #[command(subcommand)]
    Char(CharCommand),
    /// Littlewood-Richardson coefficient c^lambda_{alpha,beta}.
    Lr {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        alpha: Partition,
        #[arg(value_parser = partition_arg)]
        beta: Partition,
    },
    /// Immanant of a matrix file.
    #[command(subcommand)]
    Imm(ImmCommand),
    /// Permanent of a matrix file.
    #[command(subcommand)]
    Per(PerCommand),
    /// Determinant of a matrix file.
    #[command(subcommand)]
    Det(DetCommand),
    /// Build or verify the projection matrix G.
    #[command(subcommand)]
    Gadget(GadgetCommand),
    /// Run identity suites.
    #[command(subcommand)]
    Identity(IdentityCommand),
}

#[derive(Debug, Subcommand)]
enum PartCommand {
    Info {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
    },
    Strips {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        q: usize,
        #[arg(long, group = "strip", required = true)]
        horizontal: bool,
        #[arg(long, group = "strip")]
        vertical: bool,
        #[arg(long, group = "strip")]
        skew: bool,
    },
}

#[derive(Debug, Subcommand)]
enum CharCommand {
    Value {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        gamma: Partition,
    },
    Table {
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
enum ImmCommand {
    Eval {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long, value_name = "F")]
        matrix: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum PerCommand {
    Eval {
        #[arg(long, value_name = "F")]
        matrix: PathBuf,
        #[arg(long, conflicts_with = "direct")]
        ryser: bool,
        #[arg(long)]
        direct: bool,
        /// Print Ryser operation counts.
        #[arg(long, conflicts_with = "direct")]
        stats: bool,
    },
}

#[derive(Debug, Subcommand)]
enum DetCommand {
    Eval {
        #[arg(long, value_name = "F")]
        matrix: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum GadgetCommand {
    Build {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long)]
        row_index: Option<usize>,
        /// Matrix A; a seeded random rational matrix when omitted.
        #[arg(long, value_name = "F")]
        matrix: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_name = "F")]
        out: PathBuf,
    },
    Verify {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long)]
        row_index: Option<usize>,
        /// Either A itself or a full G written by `gadget build`.
        #[arg(long, value_name = "F")]
        matrix: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum IdentityCommand {
    Check {
        name: String,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_name = "F")]
        json: Option<PathBuf>,
    },
}

/// What a subcommand produced: text lines, a JSON document, and whether a
/// verification failed.
struct Outcome {
    text: String,
    json: Value,
    failed: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            failed: false,
        }
    }
}

/// Runs with real stdout, stderr and environment.
pub fn run(argv: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_output(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with_output(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    run_with_env(argv, std::env::var(MAX_N_ENV).ok(), out, err)
}

/// `env_max_n` stands in for the `IMMANANT_LAB_MAX_N` variable.
pub fn run_with_env(argv: &[String], env_max_n: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}\n{GRAMMAR}");
            return 2;
        }
    };
    let config = match Config::resolve(&cli.globals, env_max_n) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match execute(&cli.command, &config) {
        Ok(outcome) => {
            let written = match config.output {
                OutputFormat::Text => write!(out, "{}", outcome.text),
                OutputFormat::Json => writeln!(out, "{}", outcome.json),
            };
            if written.is_err() {
                return 2;
            }
            i32::from(outcome.failed)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: &Command, config: &Config) -> Result<Outcome> {
    let limits = &config.caps;
    match command {
        Command::Part(PartCommand::Info { lambda }) => part_info(lambda),
        Command::Part(PartCommand::Strips {
            lambda,
            q,
            horizontal,
            vertical,
            ..
        }) => part_strips(lambda, *q, *horizontal, *vertical),
        Command::Char(CharCommand::Value { lambda, gamma }) => {
            let v = character(lambda, gamma)?;
            Ok(Outcome::ok(
                format!("{v}\n"),
                json!({"lambda": lambda.to_string(), "gamma": gamma.to_string(), "value": v.to_string()}),
            ))
        }
        Command::Char(CharCommand::Table { n }) => {
            let t = character_table(*n, limits)?;
            let strings = |ps: &[Partition]| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>();
            let json = json!({
                "n": t.n,
                "irreducibles": strings(&t.irreducibles),
                "classes": strings(&t.classes),
                "class_sizes": t.class_sizes.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                "values": t.values.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            Ok(Outcome::ok(t.to_string(), json))
        }
        Command::Lr { lambda, alpha, beta } => {
            let c = lr_coefficient(lambda, alpha, beta)?;
            Ok(Outcome::ok(
                format!("{c}\n"),
                json!({
                    "lambda": lambda.to_string(),
                    "alpha": alpha.to_string(),
                    "beta": beta.to_string(),
                    "value": c.to_string(),
                }),
            ))
        }
        Command::Imm(ImmCommand::Eval { lambda, matrix }) => {
            let m = load_matrix(matrix)?;
            let v = immanant(lambda, &m, limits)?;
            Ok(value_outcome(&v, json!({"lambda": lambda.to_string(), "n": m.dim()})))
        }
        Command::Per(PerCommand::Eval {
            matrix,
            ryser,
            direct,
            stats,
        }) => {
            let m = load_matrix(matrix)?;
            if *ryser || *stats {
                let (v, s) = permanent_ryser_with_stats(&m, limits)?;
                let mut outcome = value_outcome(&v, json!({"n": m.dim(), "method": "ryser"}));
                if *stats {
                    outcome.text.push_str(&format!(
                        "additions={} multiplications={} total={}\n",
                        s.additions,
                        s.multiplications,
                        s.total()
                    ));
                    outcome.json["stats"] =
                        json!({"additions": s.additions, "multiplications": s.multiplications, "total": s.total()});
                }
                Ok(outcome)
            } else if *direct {
                let v = permanent_direct(&m, limits)?;
                Ok(value_outcome(&v, json!({"n": m.dim(), "method": "direct"})))
            } else {
                let v = permanent(&m, limits)?;
                Ok(value_outcome(&v, json!({"n": m.dim()})))
            }
        }
        Command::Det(DetCommand::Eval { matrix }) => {
            let m = load_matrix(matrix)?;
            Ok(value_outcome(&determinant(&m), json!({"n": m.dim()})))
        }
        Command::Gadget(GadgetCommand::Build {
            lambda,
            row_index,
            matrix,
            seed,
            out,
        }) => gadget_build(lambda, *row_index, matrix.as_deref(), seed.unwrap_or(config.seed), out),
        Command::Gadget(GadgetCommand::Verify {
            lambda,
            row_index,
            matrix,
        }) => gadget_verify(lambda, *row_index, matrix, limits),
        Command::Identity(IdentityCommand::Check {
            name,
            max_size,
            seed,
            json,
        }) => identity_check(name, *max_size, seed.unwrap_or(config.seed), json.as_deref(), limits),
    }
}

fn value_outcome(v: &Scalar, mut json: Value) -> Outcome {
    json["value"] = json!(v.to_string());
    Outcome::ok(format!("{v}\n"), json)
}

fn part_info(lambda: &Partition) -> Result<Outcome> {
    let conjugate = lambda.conjugate();
    let dimension = lambda.syt_count();
    let mut text = format!(
        "partition={lambda}\nsize={}\nlength={}\nwidth={}\nconjugate={conjugate}\ndimension={dimension}\n",
        lambda.size(),
        lambda.length(),
        lambda.width(),
    );
    let mut json = json!({
        "partition": lambda.to_string(),
        "size": lambda.size(),
        "length": lambda.length(),
        "width": lambda.width(),
        "conjugate": conjugate.to_string(),
        "dimension": dimension.to_string(),
    });
    if lambda.is_empty() {
        text.push_str("separation undefined for the empty partition\n");
        json["separation"] = Value::Null;
    } else {
        let s = lambda.separation()?;
        let at: Vec<String> = s.indices.iter().map(|i| i.to_string()).collect();
        text.push_str(&format!("separation k={} at i={}\n", s.k, at.join(",")));
        json["separation"] = json!({"k": s.k, "indices": s.indices});
    }
    Ok(Outcome::ok(text, json))
}

fn part_strips(lambda: &Partition, q: usize, horizontal: bool, vertical: bool) -> Result<Outcome> {
    let (kind, rows): (&str, Vec<(String, Value)>) = if horizontal || vertical {
        let removals = if horizontal {
            lambda.horizontal_strip_removals(q)?
        } else {
            lambda.vertical_strip_removals(q)?
        };
        let kind = if horizontal { "horizontal" } else { "vertical" };
        (
            kind,
            removals
                .iter()
                .map(|mu| (display_partition(mu), json!(mu.to_string())))
                .collect(),
        )
    } else {
        let removals = lambda.skew_hook_removals(q)?;
        let rows = removals
            .iter()
            .map(|h| {
                let sign = if h.sign() < 0 { "-" } else { "+" };
                (
                    format!("{sign} {} rows={}", display_partition(&h.remainder), h.row_span),
                    json!({"remainder": h.remainder.to_string(), "rows": h.row_span, "sign": h.sign()}),
                )
            })
            .collect();
        ("skew", rows)
    };
    let mut text = format!(
        "{} {kind} removal(s) of size {q} from {}\n",
        rows.len(),
        display_partition(lambda)
    );
    for (line, _) in &rows {
        text.push_str(line);
        text.push('\n');
    }
    let json = json!({
        "partition": lambda.to_string(),
        "q": q,
        "kind": kind,
        "removals": rows.into_iter().map(|(_, v)| v).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(text, json))
}

fn display_partition(p: &Partition) -> String {
    if p.is_empty() {
        "()".to_string()
    } else {
        p.to_string()
    }
}

fn gadget_build(
    lambda: &Partition,
    row_index: Option<usize>,
    matrix: Option<&Path>,
    seed: u64,
    out: &Path,
) -> Result<Outcome> {
    let plan = ProjectionPlan::new(lambda, row_index)?;
    let a = match matrix {
        Some(path) => load_matrix(path)?,
        None => random_matrix(
            &mut case_rng(seed, &format!("gadget/{lambda}/{}", plan.row_index)),
            plan.k,
        ),
    };
    let g = plan.build(&a)?;
    save_matrix(&g, out)?;
    let blocks: Vec<String> = plan.blocks.iter().map(|b| b.to_string()).collect();
    let text = format!(
        "lambda={lambda} i={} k={} blocks=[{}] n={}\nwrote {}\n",
        plan.row_index,
        plan.k,
        blocks.join(", "),
        g.dim(),
        out.display()
    );
    let json = json!({
        "lambda": lambda.to_string(),
        "i": plan.row_index,
        "k": plan.k,
        "blocks": blocks,
        "n": g.dim(),
        "out": out.display().to_string(),
    });
    Ok(Outcome::ok(text, json))
}

/// Accepts `A` (size `k`) or a full `G` (size `|lambda|`); for `G`, the
/// leading block is taken as `A` and the rest must match the gadgets.
fn gadget_verify(lambda: &Partition, row_index: Option<usize>, path: &Path, limits: &Limits) -> Result<Outcome> {
    let plan = ProjectionPlan::new(lambda, row_index)?;
    let m = load_matrix(path)?;
    let (a, layout_ok) = if m.dim() == plan.k {
        (m, true)
    } else if m.dim() == lambda.size() {
        let a = m.leading_block(plan.k);
        let rebuilt: Matrix<Scalar> = plan.build(&a)?;
        (a, rebuilt == m)
    } else {
        return Err(Error::DimensionMismatch {
            expected: plan.k,
            actual: m.dim(),
        });
    };
    let report = verify_projection(lambda, Some(plan.row_index), &a, limits)?;
    let equal = report.equal && layout_ok;
    let mut text = format!(
        "lambda={} i={} k={}\nper(A) = {}\nim(G) = {}\n",
        lambda, report.i, report.k, report.per, report.imm
    );
    if !layout_ok {
        text.push_str("matrix is not the projection G for this partition and row\n");
    }
    text.push_str(&format!("equal: {equal}\n"));
    let mut json = serde_json::to_value(&report).map_err(|e| Error::Internal(e.to_string()))?;
    json["equal"] = json!(equal);
    json["layout_ok"] = json!(layout_ok);
    Ok(Outcome {
        text,
        json,
        failed: !equal,
    })
}

fn identity_check(
    name: &str,
    max_size: usize,
    seed: u64,
    json_path: Option<&Path>,
    limits: &Limits,
) -> Result<Outcome> {
    let reports = run_suite(name, max_size, seed, limits)?;
    let failed = reports.iter().filter(|r| !r.pass).count();
    let mut text = String::new();
    for r in &reports {
        text.push_str(&r.to_string());
        text.push('\n');
    }
    text.push_str(&format!("{} passed, {failed} failed\n", reports.len() - failed));
    let json = json!({
        "suite": name,
        "max_size": max_size,
        "seed": seed,
        "passed": reports.len() - failed,
        "failed": failed,
        "reports": reports,
    });
    if let Some(path) = json_path {
        write_json(path, &reports)?;
    }
    Ok(Outcome {
        text,
        json,
        failed: failed > 0,
    })
}

fn write_json(path: &Path, reports: &[IdentityReport]) -> Result<()> {
    let body = serde_json::to_string_pretty(reports).map_err(|e| Error::Internal(e.to_string()))?;
    std::fs::write(path, body + "\n")
        .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("immanant-lab")
            .chain(args.iter().copied())
            .map(String::from)
            .collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with_env(&argv, None, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn part_info_hook() {
        let (code, out, _) = run_capture(&["part", "info", "5,1,1"]);
        assert_eq!(code, 0);
        for needle in [
            "size=7",
            "length=3",
            "width=5",
            "conjugate=3,1,1,1,1",
            "separation k=4 at i=1",
        ] {
            assert!(out.contains(needle), "{needle} missing from {out}");
        }
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, _, err) = run_capture(&["part", "info", "1,2"]);
        assert_eq!(code, 2);
        assert!(err.contains("usage:"));
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(run_capture(&["part", "strips", "3,1", "2"]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn precedence() {
        let globals = Globals {
            config: None,
            output: None,
            stream_n: None,
            table_n: None,
            immanant_n: Some(9),
            ryser_n: None,
        };
        assert_eq!(Config::resolve(&globals, Some("11".into())).unwrap().caps.immanant_n, 9);
        let globals = Globals {
            immanant_n: None,
            ..globals
        };
        assert_eq!(
            Config::resolve(&globals, Some("11".into())).unwrap().caps.immanant_n,
            11
        );
        assert!(Config::resolve(&globals, Some("13".into())).is_err());
        assert!(Config::resolve(&globals, Some("x".into())).is_err());
    }
}
