//! End-to-end pipelines: solve an instance, brute-force its rank locus, and
//! run seeded experiments with resampling of degenerate draws.

use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{bound_report, BoundReport, ProblemClass};
use crate::error::{Error, Result};
use crate::field::FieldPrime;
use crate::gbengine::{krull_dimension, solving_degree, GroebnerBasis, SolveOptions, SolvingDegreeReport};
use crate::instance_io;
use crate::linalg;
use crate::polymatrix::{
    homogenization_failure, minors, validate_degree_matrix, degree_matrix_from_offsets, DegreeMatrix,
    InstanceKind, InstanceParams, MinRankInstance, Payload,
};

/// Fresh draws allowed per trial when a draw looks non-generic.
pub const MAX_ATTEMPTS: usize = 5;

/// Default enumeration guard for [`bruteforce`].
pub const BRUTEFORCE_LIMIT: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HarnessOptions {
    /// Degree cap; `None` means `bound + 3`.
    pub cap: Option<u32>,
    /// Solve instances outside the proven range as well.
    pub allow_inapplicable: bool,
}

/// Result of solving one instance.
#[derive(Clone, Debug)]
pub struct InstanceSolve {
    pub bounds: BoundReport,
    pub report: SolvingDegreeReport,
    pub basis: GroebnerBasis,
    /// Whether the minors were homogenized before solving.
    pub homogenized: bool,
    pub generators: usize,
}

/// Builds the `(r+1)`-minors, homogenizes them when the entries are affine
/// (after checking that homogenization commutes with taking minors), and
/// measures the solving degree against `bound_main`.
pub fn solve_instance(instance: &MinRankInstance, options: HarnessOptions) -> Result<InstanceSolve> {
    let bounds = bound_report(instance)?;
    if !bounds.applicable && !options.allow_inapplicable {
        return Err(Error::NotApplicable(bounds.classification.to_string()));
    }
    let matrix = instance.matrix()?;
    let (system, homogenized) = if matrix.is_homogeneous() {
        (minors(&matrix, instance.r + 1)?, false)
    } else {
        if let Some((rows, cols)) = homogenization_failure(&matrix, instance.r)? {
            return Err(Error::HomogenizationFailure {
                rows: rows.iter().map(|i| i + 1).collect(),
                cols: cols.iter().map(|j| j + 1).collect(),
            });
        }
        (minors(&matrix.homogenize_matrix()?, instance.r + 1)?, true)
    };
    let gens = system.nonzero_generators();
    if gens.is_empty() {
        return Err(Error::params("all minors vanish identically"));
    }
    let opts = SolveOptions {
        cap: options.cap,
        bound: Some(bounds.bound_main),
    };
    let (report, basis) = solving_degree(&gens, opts)?;
    Ok(InstanceSolve {
        bounds,
        report,
        basis,
        homogenized,
        generators: gens.len(),
    })
}

/// Signals that a draw is not generic: a unit ideal, or a leading-term
/// ideal whose dimension differs from `k - (m-r)(n-r)` (checked for
/// homogeneous instances in the proven range).
pub fn degeneracy(instance: &MinRankInstance, solve: &InstanceSolve) -> Option<String> {
    if solve.report.ideal_is_unit {
        return Some("minors generate the unit ideal".into());
    }
    if !solve.homogenized {
        if let Some(expected) = solve.bounds.krull_dim {
            let got = krull_dimension(&solve.basis);
            if got != Some(expected as usize) {
                return Some(format!(
                    "Krull dimension {got:?} differs from the expected {expected} (k={})",
                    instance.k
                ));
            }
        }
    }
    None
}

/// Seed of resampling attempt `attempt` for a trial seeded with `seed`.
pub fn resample_seed(seed: u64, attempt: usize) -> u64 {
    seed.wrapping_add((attempt as u64) << 32)
}

/// How entry degrees of a cell are specified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeSpec {
    Const(u32),
    Grid(Vec<Vec<i64>>),
    Offsets { rows: Vec<i64>, cols: Vec<i64> },
}

impl DegreeSpec {
    pub fn resolve(&self, m: usize, n: usize) -> Result<DegreeMatrix> {
        let d = match self {
            DegreeSpec::Const(d) => DegreeMatrix::constant(m, n, *d)?,
            DegreeSpec::Grid(g) => validate_degree_matrix(g)?,
            DegreeSpec::Offsets { rows, cols } => degree_matrix_from_offsets(rows, cols)?,
        };
        if d.nrows() != m || d.ncols() != n {
            return Err(Error::params(format!(
                "degree matrix is {}x{}, expected {m}x{n}",
                d.nrows(),
                d.ncols()
            )));
        }
        Ok(d)
    }
}

fn default_degree() -> DegreeSpec {
    DegreeSpec::Const(1)
}

fn default_true() -> bool {
    true
}

/// One parameter cell of an experiment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cell {
    pub kind: InstanceKind,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub p: u32,
    #[serde(default = "default_degree")]
    pub degree: DegreeSpec,
    #[serde(default = "default_true")]
    pub homogeneous: bool,
}

impl Cell {
    pub fn params(&self) -> Result<InstanceParams> {
        let field = FieldPrime::new(self.p)?;
        let degrees = self.degree.resolve(self.m, self.n)?;
        let params = InstanceParams {
            kind: self.kind,
            m: self.m,
            n: self.n,
            r: self.r,
            k: self.k,
            field,
            degrees,
            homogeneous: self.homogeneous,
        };
        params.validate()?;
        Ok(params)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub cells: Vec<Cell>,
    pub trials: usize,
    #[serde(default)]
    pub base_seed: u64,
    /// Degree cap; defaults to `bound + 3` per cell.
    #[serde(default)]
    pub cap: Option<u32>,
    #[serde(default)]
    pub csv_out: Option<PathBuf>,
    #[serde(default)]
    pub json_out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::params("trials must be at least 1"));
        }
        for c in &self.cells {
            c.params()?;
        }
        Ok(())
    }
}

/// One (cell, trial) run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub cell: usize,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub p: u32,
    /// Seed of the draw that was finally solved.
    pub seed: u64,
    pub kind: InstanceKind,
    pub class: ProblemClass,
    pub applicable: bool,
    pub solvdeg: Option<u32>,
    pub bound: i64,
    pub respected: Option<bool>,
    pub gb_size: Option<usize>,
    pub ms: u64,
    pub resamples: usize,
    pub krull_dim: Option<usize>,
    pub zero_dimensional: Option<bool>,
    pub oracle_agrees: Option<bool>,
    pub stable: Option<bool>,
    pub buchberger_max_degree: Option<u32>,
    /// Degeneracy signals that triggered resampling, oldest first.
    pub resample_log: Vec<String>,
    pub error: Option<String>,
    /// Instance JSON, kept only when the row shows an invariant violation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dump: Option<String>,
}

impl ExperimentRow {
    /// Bound exceeded on an applicable cell, or the engines disagree.
    pub fn is_violation(&self) -> bool {
        (self.applicable && self.respected == Some(false)) || self.oracle_agrees == Some(false)
    }
}

/// CSV header of experiment output.
pub const CSV_HEADER: [&str; 14] = [
    "m", "n", "r", "k", "p", "seed", "kind", "class", "solvdeg", "bound", "respected", "gb_size",
    "ms", "resamples",
];

#[derive(Serialize)]
struct CsvRow {
    m: usize,
    n: usize,
    r: usize,
    k: usize,
    p: u32,
    seed: u64,
    kind: String,
    class: String,
    solvdeg: Option<u32>,
    bound: i64,
    respected: Option<bool>,
    gb_size: Option<usize>,
    ms: u64,
    resamples: usize,
}

/// Solves one trial, redrawing up to [`MAX_ATTEMPTS`] times on degeneracy.
pub fn run_trial(cell_index: usize, params: &InstanceParams, seed: u64, cap: Option<u32>) -> ExperimentRow {
    let start = Instant::now();
    let class = crate::bounds::classify(params.m, params.n, params.r, params.k)
        .expect("validated parameters");
    let bound = crate::bounds::bound_main(params.r, &params.degrees);
    let mut row = ExperimentRow {
        cell: cell_index,
        m: params.m,
        n: params.n,
        r: params.r,
        k: params.k,
        p: params.field.value(),
        seed,
        kind: params.kind,
        class,
        applicable: class != ProblemClass::OverDetermined,
        solvdeg: None,
        bound,
        respected: None,
        gb_size: None,
        ms: 0,
        resamples: 0,
        krull_dim: None,
        zero_dimensional: None,
        oracle_agrees: None,
        stable: None,
        buchberger_max_degree: None,
        resample_log: Vec::new(),
        error: None,
        dump: None,
    };
    let options = HarnessOptions {
        cap,
        allow_inapplicable: true,
    };
    for attempt in 0..MAX_ATTEMPTS {
        let s = resample_seed(seed, attempt);
        row.seed = s;
        row.resamples = attempt;
        let instance = match params.generate(s) {
            Ok(i) => i,
            Err(e) => {
                row.error = Some(e.to_string());
                break;
            }
        };
        match solve_instance(&instance, options) {
            Ok(solve) => {
                if let Some(reason) = degeneracy(&instance, &solve) {
                    row.resample_log.push(format!("seed {s}: {reason}"));
                    if attempt + 1 < MAX_ATTEMPTS {
                        continue;
                    }
                }
                let rep = &solve.report;
                row.solvdeg = Some(rep.measured_solvdeg);
                row.respected = rep.bound_respected;
                row.gb_size = Some(rep.gb_size);
                row.krull_dim = rep.krull_dim;
                row.zero_dimensional = Some(rep.zero_dimensional);
                row.oracle_agrees = Some(rep.oracle_agrees);
                row.stable = Some(rep.stable);
                row.buchberger_max_degree = Some(rep.buchberger_max_degree);
                row.error = None;
                if row.is_violation() {
                    row.dump = Some(instance_io::to_json(&instance));
                }
                break;
            }
            Err(Error::HomogenizationFailure { rows, cols }) => {
                row.resample_log.push(format!(
                    "seed {s}: homogenization fails on rows {rows:?}, columns {cols:?}"
                ));
                row.error = Some("homogenization failure on every attempt".into());
            }
            Err(e) => {
                row.error = Some(e.to_string());
                break;
            }
        }
    }
    row.ms = start.elapsed().as_millis() as u64;
    row
}

/// Per-cell aggregate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
    pub cell: Cell,
    pub class: ProblemClass,
    pub applicable: bool,
    pub bound: i64,
    pub trials: usize,
    pub max_solvdeg: Option<u32>,
    /// Runs whose measured solving degree equals the bound.
    pub attained_bound: usize,
    pub violations: usize,
    pub aborts: usize,
    pub resamples: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentOutcome {
    pub rows: Vec<ExperimentRow>,
    pub summary: Vec<CellSummary>,
}

impl ExperimentOutcome {
    pub fn violations(&self) -> usize {
        self.summary.iter().map(|s| s.violations).sum()
    }
}

/// Runs every cell for every trial in parallel; rows come back in
/// configuration order with seeds `base_seed + trial`.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutcome> {
    config.validate()?;
    let params: Vec<InstanceParams> = config.cells.iter().map(Cell::params).collect::<Result<_>>()?;
    let jobs: Vec<(usize, usize)> = (0..config.cells.len())
        .flat_map(|c| (0..config.trials).map(move |t| (c, t)))
        .collect();
    let rows: Vec<ExperimentRow> = jobs
        .par_iter()
        .map(|&(c, t)| run_trial(c, &params[c], config.base_seed.wrapping_add(t as u64), config.cap))
        .collect();
    let summary = config
        .cells
        .iter()
        .enumerate()
        .map(|(c, cell)| {
            let mine: Vec<&ExperimentRow> = rows.iter().filter(|r| r.cell == c).collect();
            let class = crate::bounds::classify(cell.m, cell.n, cell.r, cell.k).expect("validated");
            let bound = crate::bounds::bound_main(cell.r, &params[c].degrees);
            CellSummary {
                cell: cell.clone(),
                class,
                applicable: class != ProblemClass::OverDetermined,
                bound,
                trials: mine.len(),
                max_solvdeg: mine.iter().filter_map(|r| r.solvdeg).max(),
                attained_bound: mine
                    .iter()
                    .filter(|r| r.solvdeg.is_some_and(|d| d as i64 == bound))
                    .count(),
                violations: mine.iter().filter(|r| r.is_violation()).count(),
                aborts: mine.iter().filter(|r| r.error.is_some()).count(),
                resamples: mine.iter().map(|r| r.resamples).sum(),
            }
        })
        .collect();
    Ok(ExperimentOutcome { rows, summary })
}

/// Writes the fixed-column CSV (header always present).
pub fn write_csv<W: std::io::Write>(rows: &[ExperimentRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.serialize(CsvRow {
            m: r.m,
            n: r.n,
            r: r.r,
            k: r.k,
            p: r.p,
            seed: r.seed,
            kind: r.kind.to_string(),
            class: r.class.to_string(),
            solvdeg: r.solvdeg,
            bound: r.bound,
            respected: r.respected,
            gb_size: r.gb_size,
            ms: r.ms,
            resamples: r.resamples,
        })?;
    }
    w.flush()?;
    Ok(())
}

/// Points of the rank locus, checked against the minors' zero locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteForceResult {
    pub points_checked: u128,
    /// Points where `rank M(a) ≤ r`, in lexicographic order.
    pub solutions: Vec<Vec<u32>>,
    /// Points where exactly one of the two conditions holds.
    pub mismatches: Vec<Vec<u32>>,
}

impl BruteForceResult {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Enumerates `F_p^k`, computing `rank M(a)` by elimination and evaluating
/// all `(r+1)`-minors at each point.
pub fn bruteforce(instance: &MinRankInstance, limit: u128) -> Result<BruteForceResult> {
    let p = instance.field.value() as u128;
    let total = (0..instance.k).try_fold(1u128, |acc, _| acc.checked_mul(p).filter(|&v| v <= limit));
    let Some(total) = total else {
        let exact = (p as f64).powi(instance.k as i32);
        return Err(Error::SearchSpaceTooLarge(
            if exact >= u128::MAX as f64 { u128::MAX } else { exact as u128 },
            limit,
        ));
    };
    let matrix = instance.matrix()?;
    let system = minors(&matrix, instance.r + 1)?;
    let field = instance.field;
    let mut point = vec![0u32; instance.k];
    let mut solutions = Vec::new();
    let mut mismatches = Vec::new();
    for _ in 0..total {
        let evaluated = match &instance.payload {
            Payload::Classical(mats) => {
                let mut acc = vec![vec![0u32; instance.n]; instance.m];
                for (a, &x) in mats.iter().zip(&point) {
                    if x == 0 {
                        continue;
                    }
                    for (row, arow) in acc.iter_mut().zip(a) {
                        for (v, &c) in row.iter_mut().zip(arow) {
                            *v = field.mul_add(c, x, *v);
                        }
                    }
                }
                acc
            }
            Payload::Generalized(pm) => pm.evaluate(&point)?,
        };
        let low_rank = linalg::rank(field, &evaluated) <= instance.r;
        let mut vanish = true;
        for g in &system.generators {
            if g.evaluate(&point)? != 0 {
                vanish = false;
                break;
            }
        }
        if low_rank {
            solutions.push(point.clone());
        }
        if low_rank != vanish {
            mismatches.push(point.clone());
        }
        // odometer, last coordinate fastest
        for x in point.iter_mut().rev() {
            *x += 1;
            if *x == field.value() {
                *x = 0;
            } else {
                break;
            }
        }
    }
    Ok(BruteForceResult {
        points_checked: total,
        solutions,
        mismatches,
    })
}
