use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use minrank_core::bounds::bound_report_for;
use minrank_core::harness::{
    bruteforce, run_experiment, solve_instance, write_csv, ExperimentConfig, HarnessOptions,
    BRUTEFORCE_LIMIT,
};
use minrank_core::instance_io::{read_instance, to_json};
use minrank_core::polymatrix::{validate_degree_matrix, DegreeMatrix, InstanceKind, InstanceParams};
use minrank_core::{bound_report, BoundReport, Error, FieldPrime};

const EXIT_USAGE: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(name = "minrank", version, about = "MinRank minors modeling and solving-degree experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance file.
    Gen(GenArgs),
    /// Print the closed-form bounds for an instance file or a parameter set.
    Bound(BoundArgs),
    /// Measure the solving degree of the minors of an instance.
    Solve(SolveArgs),
    /// Enumerate F_p^k and cross-check the rank locus against the minors.
    Bruteforce(BruteArgs),
    /// Run a JSON-configured experiment and write CSV plus a JSON summary.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct ParamArgs {
    /// classical or generalized
    #[arg(long, default_value = "classical")]
    kind: InstanceKind,
    #[arg(short = 'm')]
    m: usize,
    #[arg(short = 'n')]
    n: usize,
    #[arg(short = 'r')]
    r: usize,
    #[arg(short = 'k')]
    k: usize,
    #[arg(short = 'p', default_value_t = 101)]
    p: u32,
    /// Every entry has this degree.
    #[arg(long, conflicts_with = "degree_grid")]
    degree_const: Option<u32>,
    /// Degree matrix, rows separated by ';' and entries by ',', e.g. "1,1;1,1".
    #[arg(long)]
    degree_grid: Option<String>,
}

impl ParamArgs {
    fn degrees(&self) -> Result<DegreeMatrix, Error> {
        match (&self.degree_grid, self.degree_const) {
            (Some(text), _) => {
                let d = validate_degree_matrix(&parse_grid(text)?)?;
                if (d.nrows(), d.ncols()) != (self.m, self.n) {
                    return Err(Error::InvalidParams(format!(
                        "degree grid is {}x{}, expected {}x{}",
                        d.nrows(),
                        d.ncols(),
                        self.m,
                        self.n
                    )));
                }
                Ok(d)
            }
            (None, d) => DegreeMatrix::constant(self.m, self.n, d.unwrap_or(1)),
        }
    }
}

fn parse_grid(text: &str) -> Result<Vec<Vec<i64>>, Error> {
    text.split(';')
        .map(|row| {
            row.split(',')
                .map(|v| {
                    v.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad degree {v:?} in grid {text:?}")))
                })
                .collect()
        })
        .collect()
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Homogeneous entries (generalized instances; classical ones always are).
    #[arg(long)]
    homogeneous: bool,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundArgs {
    /// Instance file; when omitted the parameters must be given.
    instance: Option<PathBuf>,
    #[arg(short = 'm', required_unless_present = "instance")]
    m: Option<usize>,
    #[arg(short = 'n', required_unless_present = "instance")]
    n: Option<usize>,
    #[arg(short = 'r', required_unless_present = "instance")]
    r: Option<usize>,
    #[arg(short = 'k', required_unless_present = "instance")]
    k: Option<usize>,
    #[arg(long, conflicts_with = "degree_grid")]
    degree_const: Option<u32>,
    #[arg(long)]
    degree_grid: Option<String>,
    /// Human-readable table instead of JSON.
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct SolveArgs {
    instance: PathBuf,
    /// Degree cap for both engines (default: bound + 3).
    #[arg(long)]
    cap: Option<u32>,
    /// Solve over-determined instances too.
    #[arg(long)]
    allow_inapplicable: bool,
    /// Include the reduced Gröbner basis in the output.
    #[arg(long)]
    basis: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BruteArgs {
    instance: PathBuf,
    /// Largest number of points to enumerate.
    #[arg(long, default_value_t = BRUTEFORCE_LIMIT)]
    limit: u128,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    config: PathBuf,
    /// CSV output (overrides the config; stdout when neither is set).
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON summary output (overrides the config).
    #[arg(long)]
    json: Option<PathBuf>,
    /// Degree cap (overrides the config).
    #[arg(long)]
    cap: Option<u32>,
    /// Directory for instance files of violating rows.
    #[arg(long, default_value = ".")]
    dump_dir: PathBuf,
}

enum Failure {
    Error(Error),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(e.into())
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn gen(args: GenArgs) -> Result<(), Failure> {
    let p = &args.params;
    let field = FieldPrime::new(p.p)?;
    let params = match p.kind {
        InstanceKind::Classical => {
            if p.degree_grid.is_some() || p.degree_const.is_some_and(|d| d != 1) {
                return Err(Error::InvalidParams("classical instances have unit degrees".into()).into());
            }
            InstanceParams::classical(p.m, p.n, p.r, p.k, field)?
        }
        InstanceKind::Generalized => {
            let params = InstanceParams::generalized(p.r, p.k, field, p.degrees()?, args.homogeneous);
            params.validate()?;
            params
        }
    };
    let inst = params.generate(args.seed)?;
    emit(&to_json(&inst), args.out.as_deref())
}

fn table(b: &BoundReport) -> String {
    let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
    let grid: Vec<String> = b
        .degrees
        .to_grid()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
        .collect();
    format!(
        "m, n, r, k       {}, {}, {}, {}\n\
         degrees          {}\n\
         class            {}\n\
         applicable       {}\n\
         bound            {}\n\
         bound (square)   {}\n\
         bound (linear)   {}\n\
         bound (deg d)    {}\n\
         krull dim        {}\n\
         a-invariant      {}\n\
         regularity       {}\n\
         note             {}\n",
        b.m,
        b.n,
        b.r,
        b.k,
        grid.join(";"),
        b.classification,
        b.applicable,
        b.bound_main,
        opt(b.bound_square),
        opt(b.bound_linear),
        opt(b.bound_degd),
        opt(b.krull_dim),
        b.a_invariant,
        b.regularity,
        b.note
    )
}

fn bound(args: BoundArgs) -> Result<(), Failure> {
    let report = match &args.instance {
        Some(path) => bound_report(&read_instance(path)?)?,
        None => {
            let (m, n, r, k) = (args.m.unwrap(), args.n.unwrap(), args.r.unwrap(), args.k.unwrap());
            let degrees = match (&args.degree_grid, args.degree_const) {
                (Some(text), _) => validate_degree_matrix(&parse_grid(text)?)?,
                (None, d) => DegreeMatrix::constant(m, n, d.unwrap_or(1))?,
            };
            bound_report_for(m, n, r, k, &degrees)?
        }
    };
    let text = if args.table {
        table(&report)
    } else {
        pretty(&serde_json::to_value(&report).expect("serializable"))
    };
    emit(&text, None)
}

fn solve(args: SolveArgs) -> Result<(), Failure> {
    let inst = read_instance(&args.instance)?;
    let options = HarnessOptions {
        cap: args.cap,
        allow_inapplicable: args.allow_inapplicable,
    };
    let solved = solve_instance(&inst, options)?;
    let mut out = json!({
        "bounds": solved.bounds,
        "report": solved.report,
        "homogenized": solved.homogenized,
        "generators": solved.generators,
    });
    if args.basis {
        out["basis"] = solved
            .basis
            .generators
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .into();
    }
    emit(&pretty(&out), args.out.as_deref())?;
    let rep = &solved.report;
    if solved.bounds.applicable && rep.bound_respected == Some(false) {
        return Err(Failure::Violation(format!(
            "measured solving degree {} exceeds the bound {}",
            rep.measured_solvdeg, solved.bounds.bound_main
        )));
    }
    if !rep.oracle_agrees {
        return Err(Failure::Violation(
            "Macaulay leading terms disagree with the Buchberger basis".into(),
        ));
    }
    Ok(())
}

fn brute(args: BruteArgs) -> Result<(), Failure> {
    let inst = read_instance(&args.instance)?;
    let res = bruteforce(&inst, args.limit)?;
    let out = json!({
        "points_checked": res.points_checked,
        "agrees": res.agrees(),
        "solutions": res.solutions,
        "mismatches": res.mismatches,
    });
    emit(&pretty(&out), args.out.as_deref())?;
    if !res.agrees() {
        return Err(Failure::Violation(format!(
            "{} points where the rank condition and the minors disagree",
            res.mismatches.len()
        )));
    }
    Ok(())
}

fn experiment(args: ExperimentArgs) -> Result<(), Failure> {
    let text = fs::read_to_string(&args.config)?;
    let mut config: ExperimentConfig = serde_json::from_str(&text).map_err(Error::from)?;
    if args.out.is_some() {
        config.csv_out = args.out;
    }
    if args.json.is_some() {
        config.json_out = args.json;
    }
    if args.cap.is_some() {
        config.cap = args.cap;
    }
    let outcome = run_experiment(&config)?;

    let mut csv = Vec::new();
    write_csv(&outcome.rows, &mut csv)?;
    match &config.csv_out {
        Some(path) => fs::write(path, &csv)?,
        None => std::io::stdout().write_all(&csv)?,
    }
    if let Some(path) = &config.json_out {
        let summary = json!({ "summary": outcome.summary, "rows": outcome.rows });
        fs::write(path, pretty(&summary))?;
    }
    for s in &outcome.summary {
        eprintln!(
            "cell ({},{},{},{}) p={} {}: bound {} max {} violations {} aborts {} resamples {}",
            s.cell.m,
            s.cell.n,
            s.cell.r,
            s.cell.k,
            s.cell.p,
            s.class,
            s.bound,
            s.max_solvdeg.map_or("-".into(), |d| d.to_string()),
            s.violations,
            s.aborts,
            s.resamples
        );
    }
    let violating: Vec<_> = outcome.rows.iter().filter(|r| r.is_violation()).collect();
    if violating.is_empty() {
        return Ok(());
    }
    fs::create_dir_all(&args.dump_dir)?;
    for row in &violating {
        let path = args
            .dump_dir
            .join(format!("violation-cell{}-seed{}.json", row.cell, row.seed));
        fs::write(&path, row.dump.as_deref().unwrap_or_default())?;
        eprintln!("dumped violating instance to {}", path.display());
    }
    Err(Failure::Violation(format!("{} violating rows", violating.len())))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Bound(a) => bound(a),
        Command::Solve(a) => solve(a),
        Command::Bruteforce(a) => brute(a),
        Command::Experiment(a) => experiment(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(msg)) => {
            eprintln!("invariant violation: {msg}");
            ExitCode::from(EXIT_VIOLATION)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::DegreeCapExceeded { .. } => EXIT_CAP,
                Error::HomogenizationFailure { .. } => EXIT_VIOLATION,
                _ => EXIT_USAGE,
            })
        }
    }
}
