//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::time::{Duration, Instant};

use minrank_core::bounds::{bound_degd, bound_linear, bound_main, regularity};
use minrank_core::harness::{
    bruteforce, run_experiment, Cell, DegreeSpec, ExperimentConfig, ExperimentOutcome, ExperimentRow,
    BRUTEFORCE_LIMIT,
};
use minrank_core::multipoly::Polynomial;
use minrank_core::polymatrix::{
    check_homogenization_commutes, degree_matrix_from_offsets, DegreeMatrix, InstanceKind,
    InstanceParams, PolyMatrix,
};
use minrank_core::FieldPrime;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn classical(m: usize, n: usize, r: usize, k: usize) -> Cell {
    Cell {
        kind: InstanceKind::Classical,
        m,
        n,
        r,
        k,
        p: 101,
        degree: DegreeSpec::Const(1),
        homogeneous: true,
    }
}

fn experiment(cells: Vec<Cell>, trials: usize, base_seed: u64) -> (ExperimentOutcome, Duration) {
    let start = Instant::now();
    let config = ExperimentConfig {
        cells,
        trials,
        base_seed,
        cap: None,
        csv_out: None,
        json_out: None,
    };
    let out = run_experiment(&config).expect("valid experiment config");
    (out, start.elapsed())
}

/// Checks every row solved and stayed within its bound.
fn bound_check(out: &ExperimentOutcome) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for (idx, s) in out.summary.iter().enumerate() {
        let aborted: Vec<&ExperimentRow> = out
            .rows
            .iter()
            .filter(|r| r.cell == idx && r.error.is_some())
            .collect();
        for r in &aborted {
            eprintln!("    abort seed {}: {:?}", r.seed, r.error);
        }
        ok &= s.violations == 0 && s.aborts == 0 && s.max_solvdeg.is_some();
        parts.push(format!(
            "({},{},{},{}) bound {} max {:?} attained {}/{} violations {} aborts {} resamples {}",
            s.cell.m,
            s.cell.n,
            s.cell.r,
            s.cell.k,
            s.bound,
            s.max_solvdeg,
            s.attained_bound,
            s.trials,
            s.violations,
            s.aborts,
            s.resamples
        ));
    }
    for r in out.rows.iter().filter(|r| r.is_violation()) {
        eprintln!("    violation dump:\n{}", r.dump.as_deref().unwrap_or(""));
    }
    (ok, parts.join("; "))
}

/// All degree matrices from offsets in `0..=3` with positive entries.
fn offset_grids(m: usize, n: usize) -> Vec<DegreeMatrix> {
    fn tuples(len: usize) -> Vec<Vec<i64>> {
        (0..4usize.pow(len as u32))
            .map(|mut code| {
                (0..len)
                    .map(|_| {
                        let v = (code % 4) as i64;
                        code /= 4;
                        v
                    })
                    .collect()
            })
            .collect()
    }
    let (es, fs) = (tuples(m), tuples(n));
    let mut out = Vec::new();
    for e in &es {
        for f in &fs {
            let positive = e.iter().all(|&ei| f.iter().all(|&fj| ei + fj > 0));
            if positive {
                out.push(degree_matrix_from_offsets(e, f).expect("positive offsets"));
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let setup = Instant::now();
    let all: Vec<(usize, usize, Vec<DegreeMatrix>)> = (1..=5)
        .flat_map(|m| (m..=5).map(move |n| (m, n, offset_grids(m, n))))
        .collect();
    let setup = setup.elapsed();
    let start = Instant::now();
    let mut checked = 0usize;
    let mut bad = 0usize;
    for (m, _, grids) in &all {
        {
            for r in 0..*m {
                for d in grids {
                    checked += 1;
                    if regularity(r, d) != bound_main(r, d) {
                        bad += 1;
                    }
                }
            }
        }
    }
    let t = start.elapsed();
    outcome(
        bad == 0 && t + setup < Duration::from_secs(1),
        format!(
            "{checked} cases, {bad} mismatches, {:.3} s (grid construction {:.3} s)",
            t.as_secs_f64(),
            setup.as_secs_f64()
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut checked = 0usize;
    let mut bad = 0usize;
    for m in 1..=5 {
        for n in m..=5 {
            for r in 0..m {
                let ones = DegreeMatrix::ones(m, n).unwrap();
                checked += 1;
                let linear = (m * r) as i64 - (r * r) as i64 + 1;
                if bound_main(r, &ones) != linear || bound_linear(m, r) != linear {
                    bad += 1;
                }
                for d in 1..=5u32 {
                    let c = DegreeMatrix::constant(m, n, d).unwrap();
                    let closed = (m - r) as i64 * (n as i64 * d as i64 - n as i64 + r as i64) + 1;
                    checked += 1;
                    if bound_main(r, &c) != closed || bound_degd(m, n, r, d) != closed {
                        bad += 1;
                    }
                }
            }
        }
    }
    outcome(bad == 0, format!("{checked} cases, {bad} mismatches"))
}

fn criterion_3(rows_out: &mut Vec<ExperimentRow>) -> Outcome {
    let (out, t) = experiment(vec![classical(3, 3, 1, 4)], 50, 3000);
    let (ok, detail) = bound_check(&out);
    let max_ms = out.rows.iter().map(|r| r.ms).max().unwrap_or(0);
    let ok = ok && out.rows.len() == 50 && out.rows.iter().all(|r| r.solvdeg.is_some_and(|d| d <= 3));
    rows_out.extend(out.rows);
    outcome(
        ok && max_ms < 1000,
        format!("{detail}; slowest run {max_ms} ms; total {:.2} s", t.as_secs_f64()),
    )
}

fn criterion_4(rows_out: &mut Vec<ExperimentRow>) -> Outcome {
    let cells = vec![classical(3, 4, 1, 6), classical(4, 4, 2, 4), classical(3, 3, 1, 5)];
    let (out, t) = experiment(cells, 25, 4000);
    let (ok, detail) = bound_check(&out);
    let bounds: Vec<i64> = out.summary.iter().map(|s| s.bound).collect();
    rows_out.extend(out.rows);
    outcome(
        ok && bounds == vec![3, 5, 3] && t < Duration::from_secs(120),
        format!("{detail}; total {:.2} s", t.as_secs_f64()),
    )
}

fn generalized(degree: DegreeSpec, homogeneous: bool) -> Cell {
    Cell {
        kind: InstanceKind::Generalized,
        m: 3,
        n: 3,
        r: 1,
        k: 4,
        p: 101,
        degree,
        homogeneous,
    }
}

fn criterion_5(rows_out: &mut Vec<ExperimentRow>) -> Outcome {
    let (out, t) = experiment(vec![generalized(DegreeSpec::Const(2), true)], 10, 5000);
    let (ok, detail) = bound_check(&out);
    let bound = out.summary[0].bound;
    rows_out.extend(out.rows);
    outcome(
        ok && bound == 9 && t < Duration::from_secs(300),
        format!("{detail}; total {:.2} s", t.as_secs_f64()),
    )
}

fn criterion_6(rows_out: &mut Vec<ExperimentRow>) -> Outcome {
    let offsets = DegreeSpec::Offsets {
        rows: vec![1, 1, 2],
        cols: vec![0, 1, 1],
    };
    let (out, t) = experiment(vec![generalized(offsets, true)], 10, 6000);
    let (ok, detail) = bound_check(&out);
    let bound = out.summary[0].bound;
    rows_out.extend(out.rows);
    outcome(ok && bound == 9, format!("{detail}; total {:.2} s", t.as_secs_f64()))
}

fn criterion_7() -> Outcome {
    let f = FieldPrime::new(101).unwrap();
    let shapes: Vec<(usize, Vec<i64>, Vec<i64>)> = vec![
        (1, vec![1, 1], vec![0, 0]),
        (1, vec![1, 2], vec![0, 1, 1]),
        (1, vec![1, 1, 2], vec![0, 1, 1]),
        (2, vec![1, 1, 1], vec![0, 1, 0, 1]),
        (1, vec![2, 3, 3], vec![-1, 0, 0]),
    ];
    let mut trues = 0;
    let mut total = 0;
    for t in 0..100u64 {
        let (r, e, fo) = &shapes[t as usize % shapes.len()];
        let d = degree_matrix_from_offsets(e, fo).unwrap();
        let params = InstanceParams::generalized(*r, 3, f, d, false);
        let inst = params.generate(7000 + t).unwrap();
        total += 1;
        if check_homogenization_commutes(&inst.matrix().unwrap(), *r).unwrap() {
            trues += 1;
        }
    }
    let p = |s: &str| Polynomial::parse(s, 1, f).unwrap();
    let counter = PolyMatrix::new(vec![vec![p("x1 + 1"), p("x1")], vec![p("x1"), p("x1 + 2")]]).unwrap();
    let negative = check_homogenization_commutes(&counter, 1).unwrap();
    outcome(
        trues == total && !negative,
        format!("{trues}/{total} conforming instances commute; counterexample -> {negative}"),
    )
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let f5 = FieldPrime::new(5).unwrap();
    let mut agree = 0;
    let mut points = 0u128;
    let total = 50;
    for t in 0..total as u64 {
        let k = 1 + (t as usize % 3);
        let params = match t % 4 {
            0 => InstanceParams::classical(2, 2, 1, k, f5).unwrap(),
            1 => InstanceParams::classical(2, 3, 1, k, f5).unwrap(),
            2 => InstanceParams::generalized(1, k, f5, DegreeMatrix::constant(2, 3, 2).unwrap(), true),
            _ => InstanceParams::generalized(
                1,
                k,
                f5,
                degree_matrix_from_offsets(&[1, 1, 2], &[0, 1, 1]).unwrap(),
                false,
            ),
        };
        let inst = params.generate(8000 + t).unwrap();
        let res = bruteforce(&inst, BRUTEFORCE_LIMIT).unwrap();
        points += res.points_checked;
        if res.agrees() {
            agree += 1;
        }
    }
    let t = start.elapsed();
    outcome(
        agree == total && t < Duration::from_secs(10),
        format!("{agree}/{total} instances agree over {points} points, {:.2} s", t.as_secs_f64()),
    )
}

fn criterion_9() -> Outcome {
    let (out, _) = experiment(vec![classical(3, 3, 1, 4)], 20, 9000);
    let zero_dim = out
        .rows
        .iter()
        .filter(|r| r.zero_dimensional == Some(true))
        .count();
    for r in &out.rows {
        for line in &r.resample_log {
            eprintln!("    resample: {line}");
        }
    }
    let resamples: usize = out.rows.iter().map(|r| r.resamples).sum();
    outcome(
        zero_dim == 20,
        format!("{zero_dim}/20 zero-dimensional, {resamples} resamples"),
    )
}

fn criterion_10(rows: &[ExperimentRow]) -> Outcome {
    let solved: Vec<&ExperimentRow> = rows.iter().filter(|r| r.solvdeg.is_some()).collect();
    let agree = solved
        .iter()
        .filter(|r| r.oracle_agrees == Some(true))
        .count();
    let stable = solved.iter().filter(|r| r.stable == Some(true)).count();
    outcome(
        !solved.is_empty() && agree == solved.len() && solved.len() == rows.len(),
        format!(
            "{agree}/{} solved instances agree with the Buchberger oracle ({} rows, {stable} stable)",
            solved.len(),
            rows.len()
        ),
    )
}

fn main() {
    // libtest flags such as --nocapture are accepted and ignored
    let mut rows = Vec::new();
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    let mut run = |id: usize, name: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let o = f();
        println!(
            "[{}] criterion {id:>2} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        results.push((id, name, o));
    };
    run(1, "regularity chain = main bound", &mut criterion_1);
    run(2, "main bound reductions", &mut criterion_2);
    run(3, "square classical 3x3 r=1 k=4", &mut || criterion_3(&mut rows));
    run(4, "linear entries", &mut || criterion_4(&mut rows));
    run(5, "constant degree d=2", &mut || criterion_5(&mut rows));
    run(6, "mixed degrees e=(1,1,2) f=(0,1,1)", &mut || criterion_6(&mut rows));
    run(7, "homogenization commutes with minors", &mut criterion_7);
    run(8, "rank locus = minors' zero locus", &mut criterion_8);
    run(9, "zero-dimensional well-defined", &mut criterion_9);
    run(10, "stepper/oracle agreement", &mut || criterion_10(&rows));
    let failed: Vec<usize> = results.iter().filter(|r| !r.2.pass).map(|r| r.0).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", results.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
