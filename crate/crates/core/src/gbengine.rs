//! Degrevlex Gröbner bases with degree instrumentation.
//!
//! Two engines: [`buchberger`] (normal selection strategy with the product
//! and chain criteria) serves as the correctness oracle, and the
//! [`MacaulayStepper`] eliminates one degree-`D` Macaulay matrix at a time.
//! The measured solving degree is the smallest `D` at which the stepper's
//! accumulated leading monomials generate the leading-term ideal of the
//! oracle's reduced basis.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldPrime;
use crate::linalg::DenseMatrix;
use crate::multipoly::{monomials_of_degree, Monomial, Polynomial, Term};

/// A reduced degrevlex Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    /// Monic generators sorted by ascending leading monomial.
    pub generators: Vec<Polynomial>,
    pub nvars: usize,
    pub field: FieldPrime,
    /// Largest degree among inputs, S-polynomials and intermediate
    /// remainders that the computation produced.
    pub max_degree_seen: u32,
    pub ideal_is_unit: bool,
    /// Pairs whose S-polynomial was actually formed.
    pub pairs_reduced: usize,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.generators
            .iter()
            .filter_map(Polynomial::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Normal form of `f` modulo `basis`. Each step reduces the largest
/// reducible term by the first basis element (in list order) whose leading
/// monomial divides it.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    reduce_tracking(f, basis, &mut 0)
}

fn reduce_tracking(f: &Polynomial, basis: &[Polynomial], max_deg: &mut u32) -> Polynomial {
    let p = f.field();
    let reducers: Vec<(&Monomial, u32, &Polynomial)> = basis
        .iter()
        .filter_map(|g| g.leading_term().map(|(c, m)| (m, p.inv(c).expect("nonzero"), g)))
        .collect();
    let mut done: Vec<Term> = Vec::new();
    let mut h = f.clone();
    // `h` holds the not-yet-inspected part, all of whose terms are below
    // everything in `done`.
    while let Some((c, lm)) = h.leading_term() {
        *max_deg = (*max_deg).max(lm.degree());
        match reducers.iter().find(|(m, _, _)| m.divides(lm)) {
            Some(&(m, inv_lc, g)) => {
                let q = m.quotient_of(lm).expect("divides");
                let factor = p.mul(c, inv_lc);
                h = &h - &g.mul_term(factor, &q);
            }
            None => {
                let terms = h.terms();
                done.push(terms[0].clone());
                h = Polynomial::from_sorted(h.nvars(), p, terms[1..].to_vec());
            }
        }
    }
    Polynomial::from_sorted(f.nvars(), p, done)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (cf, mf) = f.leading_term().expect("nonzero");
    let (cg, mg) = g.leading_term().expect("nonzero");
    let lcm = mf.lcm(mg);
    let a = f.mul_term(cg, &mf.quotient_of(&lcm).expect("lcm"));
    let b = g.mul_term(cf, &mg.quotient_of(&lcm).expect("lcm"));
    &a - &b
}

fn common_ambient(f: &[Polynomial]) -> Result<(usize, FieldPrime)> {
    let first = f
        .first()
        .ok_or_else(|| Error::params("empty polynomial system"))?;
    let (nvars, field) = (first.nvars(), first.field());
    if f.iter().any(|g| g.nvars() != nvars || g.field() != field) {
        return Err(Error::AmbientMismatch("system mixes polynomial rings".into()));
    }
    Ok((nvars, field))
}

/// Whether every monomial of `degree` lies in the ideal generated by `lms`.
fn covers_degree(lms: &[Monomial], nvars: usize, degree: u32) -> bool {
    monomials_of_degree(nvars, degree)
        .iter()
        .all(|t| lms.iter().any(|m| m.divides(t)))
}

/// Reduced degrevlex Gröbner basis of the ideal generated by `system`.
///
/// Pairs are processed by increasing lcm degree. Product and chain criteria
/// discard pairs; for homogeneous input, pairs of a degree at which the
/// leading-term ideal already contains every monomial are discarded too,
/// since their S-polynomials reduce to zero. `cap` bounds the degree of any
/// nonzero remainder added to the basis.
pub fn buchberger(system: &[Polynomial], cap: Option<u32>) -> Result<GroebnerBasis> {
    let (nvars, field) = common_ambient(system)?;
    let homogeneous = system.iter().all(Polynomial::is_homogeneous);
    let mut max_degree_seen = system.iter().filter_map(Polynomial::degree).max().unwrap_or(0);

    let mut basis: Vec<Polynomial> = Vec::new();
    // (lcm, j, i) with i < j; BTreeSet order = degrevlex on lcm, which is
    // degree first.
    let mut queue: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut pairs_reduced = 0;
    let mut covered_from: Option<u32> = None;
    let mut last_checked: Option<(u32, usize)> = None;

    let insert = |basis: &mut Vec<Polynomial>,
                      queue: &mut BTreeSet<(Monomial, usize, usize)>,
                      pending: &mut HashSet<(usize, usize)>,
                      g: Polynomial| {
        let j = basis.len();
        let lm = g.leading_monomial().expect("nonzero").clone();
        for (i, b) in basis.iter().enumerate() {
            let lcm = b.leading_monomial().expect("nonzero").lcm(&lm);
            queue.insert((lcm, j, i));
            pending.insert((i, j));
        }
        basis.push(g);
    };

    let mut unit = false;
    for f in system {
        if f.is_zero() {
            continue;
        }
        if f.degree() == Some(0) {
            unit = true;
            break;
        }
        insert(&mut basis, &mut queue, &mut pending, f.monic());
    }

    while !unit {
        let Some((lcm, j, i)) = queue.pop_first() else {
            break;
        };
        pending.remove(&(i, j));
        let (lm_i, lm_j) = (
            basis[i].leading_monomial().expect("nonzero"),
            basis[j].leading_monomial().expect("nonzero"),
        );
        if lm_i.is_coprime(lm_j) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().expect("nonzero").divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        if homogeneous {
            if let Some(d) = covered_from {
                if lcm.degree() >= d {
                    continue;
                }
            } else if last_checked != Some((lcm.degree(), basis.len())) {
                last_checked = Some((lcm.degree(), basis.len()));
                let lms: Vec<Monomial> = basis
                    .iter()
                    .map(|g| g.leading_monomial().expect("nonzero").clone())
                    .collect();
                if covers_degree(&lms, nvars, lcm.degree()) {
                    covered_from = Some(lcm.degree());
                    continue;
                }
            }
        }
        pairs_reduced += 1;
        let s = s_polynomial(&basis[i], &basis[j]);
        let h = reduce_tracking(&s, &basis, &mut max_degree_seen);
        if h.is_zero() {
            continue;
        }
        let d = h.degree().expect("nonzero");
        if let Some(cap) = cap {
            if d > cap {
                return Err(Error::DegreeCapExceeded { cap, reached: d });
            }
        }
        if d == 0 {
            unit = true;
            break;
        }
        if homogeneous {
            // a new leading monomial may uncover monomials of covered degrees
            covered_from = None;
        }
        insert(&mut basis, &mut queue, &mut pending, h.monic());
    }

    if unit {
        return Ok(GroebnerBasis {
            generators: vec![Polynomial::constant(nvars, field, 1)],
            nvars,
            field,
            max_degree_seen,
            ideal_is_unit: true,
            pairs_reduced,
        });
    }
    Ok(GroebnerBasis {
        generators: interreduce(basis),
        nvars,
        field,
        max_degree_seen,
        ideal_is_unit: false,
        pairs_reduced,
    })
}

/// Minimalizes and fully reduces a Gröbner basis.
fn interreduce(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().expect("nonzero");
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().expect("nonzero").divides(lm))
        {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let g = &minimal[idx];
        let (c, lm) = g.leading_term().expect("nonzero");
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(t, _)| t != idx)
            .map(|(_, h)| h.clone())
            .collect();
        let tail = Polynomial::from_sorted(g.nvars(), g.field(), g.terms()[1..].to_vec());
        let tail = reduce(&tail, &others);
        let head = Polynomial::monomial(g.nvars(), g.field(), c, lm.clone());
        reduced.push((&head + &tail).monic());
    }
    reduced
}

/// True when every variable has a pure power among the leading monomials
/// (or the ideal is the unit ideal).
pub fn is_zero_dimensional(basis: &GroebnerBasis) -> bool {
    if basis.ideal_is_unit {
        return true;
    }
    let mut seen = vec![false; basis.nvars];
    for m in basis.leading_monomials() {
        if let Some(v) = m.pure_power_var() {
            seen[v] = true;
        }
    }
    seen.iter().all(|&s| s)
}

/// Krull dimension of `k[x]/I` read off the leading monomials: the largest
/// set of variables containing the support of no leading monomial.
/// Returns `None` for the unit ideal.
pub fn krull_dimension(basis: &GroebnerBasis) -> Option<usize> {
    if basis.ideal_is_unit {
        return None;
    }
    let k = basis.nvars;
    assert!(k <= 24, "krull_dimension enumerates variable subsets");
    let supports: Vec<u32> = basis
        .leading_monomials()
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u32, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    (0u32..(1u32 << k))
        .filter(|&u| supports.iter().all(|&s| s & !u != 0))
        .map(|u| u.count_ones() as usize)
        .max()
}

/// Statistics of one Macaulay-matrix elimination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRecord {
    pub degree: u32,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// Leading monomials of degree `degree` not in the ideal generated by
    /// those found at lower degrees, in canonical text form.
    pub new_leading: Vec<String>,
}

/// Degree-by-degree Macaulay matrix elimination for a homogeneous system.
#[derive(Clone, Debug)]
pub struct MacaulayStepper {
    nvars: usize,
    field: FieldPrime,
    generators: Vec<Polynomial>,
    /// Basis elements with new leading monomials found so far.
    basis: Vec<Polynomial>,
    leading: Vec<Monomial>,
}

impl MacaulayStepper {
    pub fn new(system: &[Polynomial]) -> Result<Self> {
        let (nvars, field) = common_ambient(system)?;
        if let Some(f) = system.iter().find(|f| !f.is_homogeneous()) {
            return Err(Error::NotHomogeneous(f.to_string()));
        }
        Ok(MacaulayStepper {
            nvars,
            field,
            generators: system.iter().filter(|f| !f.is_zero()).cloned().collect(),
            basis: Vec::new(),
            leading: Vec::new(),
        })
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.generators.iter().filter_map(Polynomial::degree).min()
    }

    /// Accumulated leading monomials, which minimally generate the part of
    /// the leading-term ideal found so far.
    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// Eliminates the degree-`degree` Macaulay matrix: all multiples `u * f`
    /// of degree `degree` of the input and of previously found basis
    /// elements, columns indexed by degree-`degree` monomials in descending
    /// degrevlex.
    pub fn step(&mut self, degree: u32) -> DegreeRecord {
        let sources: Vec<&Polynomial> = self
            .generators
            .iter()
            .chain(&self.basis)
            .filter(|f| f.degree().is_some_and(|d| d <= degree))
            .collect();
        if self.generators.iter().all(|f| f.degree().is_none_or(|d| d > degree)) {
            return DegreeRecord {
                degree,
                rows: 0,
                cols: 0,
                rank: 0,
                new_leading: Vec::new(),
            };
        }
        let columns = monomials_of_degree(self.nvars, degree);
        let col_index: HashMap<&Monomial, usize> =
            columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut multipliers: HashMap<u32, Vec<Monomial>> = HashMap::new();
        let mut rows = Vec::new();
        for f in sources {
            let d = f.degree().expect("nonzero");
            let us = multipliers
                .entry(degree - d)
                .or_insert_with(|| monomials_of_degree(self.nvars, degree - d));
            for u in us.iter() {
                let mut row = vec![0u32; columns.len()];
                for t in f.terms() {
                    row[col_index[&t.mono.mul(u)]] = t.coeff;
                }
                rows.push(row);
            }
        }
        let nrows = rows.len();
        let mut mat = DenseMatrix::new(self.field, rows, columns.len());
        let pivots = mat.row_reduce();
        let mut new_leading = Vec::new();
        let mut found = Vec::new();
        for (row, &col) in mat.rows.iter().zip(&pivots) {
            let lm = &columns[col];
            if self.leading.iter().any(|m| m.divides(lm)) {
                continue;
            }
            let terms = row
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| Term {
                    coeff: c,
                    mono: columns[i].clone(),
                })
                .collect();
            found.push(Polynomial::from_sorted(self.nvars, self.field, terms));
            new_leading.push(lm.clone());
        }
        let record = DegreeRecord {
            degree,
            rows: nrows,
            cols: columns.len(),
            rank: pivots.len(),
            new_leading: new_leading.iter().map(ToString::to_string).collect(),
        };
        self.leading.extend(new_leading);
        self.basis.extend(found);
        record
    }

    /// Whether the accumulated leading monomials generate every monomial
    /// in `target`.
    pub fn generates(&self, target: &[Monomial]) -> bool {
        target
            .iter()
            .all(|t| self.leading.iter().any(|m| m.divides(t)))
    }
}

/// Options for [`solving_degree`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Hard degree cap for both engines; defaults to `bound + 3` when a bound
    /// is given, otherwise unlimited.
    pub cap: Option<u32>,
    /// Theoretical bound to compare against.
    pub bound: Option<i64>,
}

impl SolveOptions {
    pub fn with_bound(bound: i64) -> Self {
        SolveOptions {
            cap: None,
            bound: Some(bound),
        }
    }

    pub fn effective_cap(&self) -> Option<u32> {
        self.cap
            .or_else(|| self.bound.map(|b| (b + 3).max(0) as u32))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveMethod {
    MacaulayStepper,
    BuchbergerByDegree,
}

/// Measured solving degree with per-degree Macaulay statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvingDegreeReport {
    pub measured_solvdeg: u32,
    pub method: SolveMethod,
    pub per_degree: Vec<DegreeRecord>,
    pub bound: Option<i64>,
    pub bound_respected: Option<bool>,
    /// Largest degree seen by the Buchberger oracle, for comparison.
    pub buchberger_max_degree: u32,
    pub gb_size: usize,
    pub gb_max_degree: u32,
    pub ideal_is_unit: bool,
    pub zero_dimensional: bool,
    pub krull_dim: Option<usize>,
    /// Stepper's leading monomials equal the oracle's, as sets.
    pub oracle_agrees: bool,
    /// One extra degree past the measured one produced no new leading terms.
    pub stable: bool,
    pub elapsed_ms: u64,
}

/// Measures the solving degree of a homogeneous system: steps the Macaulay
/// matrix through increasing degrees until its leading monomials generate the
/// leading-term ideal of the Buchberger oracle's reduced basis.
pub fn solving_degree(
    system: &[Polynomial],
    options: SolveOptions,
) -> Result<(SolvingDegreeReport, GroebnerBasis)> {
    let start = Instant::now();
    let cap = options.effective_cap();
    let mut stepper = MacaulayStepper::new(system)?;
    let oracle = buchberger(system, cap)?;
    let target = oracle.leading_monomials();

    let mut per_degree = Vec::new();
    let measured = match stepper.min_degree() {
        None => 0,
        Some(dmin) => {
            let mut d = dmin;
            loop {
                if let Some(cap) = cap {
                    if d > cap {
                        return Err(Error::DegreeCapExceeded { cap, reached: d });
                    }
                }
                per_degree.push(stepper.step(d));
                if stepper.generates(&target) {
                    break d;
                }
                d += 1;
            }
        }
    };
    let stable = if per_degree.is_empty() {
        true
    } else {
        stepper.step(measured + 1).new_leading.is_empty()
    };
    let found: HashSet<&Monomial> = stepper.leading_monomials().iter().collect();
    let expected: HashSet<&Monomial> = target.iter().collect();
    let oracle_agrees = found == expected;

    let report = SolvingDegreeReport {
        measured_solvdeg: measured,
        method: SolveMethod::MacaulayStepper,
        per_degree,
        bound: options.bound,
        bound_respected: options.bound.map(|b| measured as i64 <= b),
        buchberger_max_degree: oracle.max_degree_seen,
        gb_size: oracle.len(),
        gb_max_degree: oracle.max_degree(),
        ideal_is_unit: oracle.ideal_is_unit,
        zero_dimensional: is_zero_dimensional(&oracle),
        krull_dim: krull_dimension(&oracle),
        oracle_agrees,
        stable,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    Ok((report, oracle))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f101() -> FieldPrime {
        FieldPrime::new(101).unwrap()
    }

    fn poly(s: &str, k: usize) -> Polynomial {
        Polynomial::parse(s, k, f101()).unwrap()
    }

    fn polys(ss: &[&str], k: usize) -> Vec<Polynomial> {
        ss.iter().map(|s| poly(s, k)).collect()
    }

    #[test]
    fn reduce_examples() {
        assert!(reduce(&poly("x1^2", 2), &polys(&["x1"], 2)).is_zero());
        let f = poly("x1*x2 + x2^2", 2);
        assert_eq!(reduce(&f, &[]), f);
        assert_eq!(
            reduce(&f, &polys(&["x1 - x2"], 2)),
            poly("2*x2^2", 2)
        );
    }

    #[test]
    fn reduce_output_is_irreducible() {
        let g = polys(&["x1^2 - x2", "x1*x2 - 1"], 2);
        let r = reduce(&poly("x1^3*x2 + x1^2 + x2^3", 2), &g);
        for t in r.terms() {
            assert!(!g.iter().any(|h| h.leading_monomial().unwrap().divides(&t.mono)));
        }
    }

    #[test]
    fn buchberger_examples() {
        let gb = buchberger(&polys(&["x1^2 - x2^2", "x1 - x2"], 2), None).unwrap();
        assert_eq!(gb.generators, polys(&["x1 - x2"], 2));

        let vars = polys(&["x1", "x2", "x3"], 3);
        let gb = buchberger(&vars, None).unwrap();
        let mut expected = vars.clone();
        expected.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
        assert_eq!(gb.generators, expected);
        assert_eq!(gb.max_degree_seen, 1);

        let gb = buchberger(&polys(&["37*x1^2"], 1), None).unwrap();
        assert_eq!(gb.generators, polys(&["x1^2"], 1));

        let gb = buchberger(&polys(&["x1*x2 - 1", "x1 - 2", "x2 - 3"], 2), None).unwrap();
        assert!(gb.ideal_is_unit);
        assert_eq!(gb.generators, polys(&["1"], 2));
    }

    #[test]
    fn buchberger_is_a_groebner_basis() {
        // cyclic-3
        let f = polys(
            &["x1 + x2 + x3", "x1*x2 + x2*x3 + x3*x1", "x1*x2*x3 - 1"],
            3,
        );
        let gb = buchberger(&f, None).unwrap();
        for h in &f {
            assert!(reduce(h, &gb.generators).is_zero());
        }
        for (a, g) in gb.generators.iter().enumerate() {
            assert_eq!(g.leading_coeff(), Some(1));
            for h in &gb.generators[a + 1..] {
                assert!(reduce(&s_polynomial(g, h), &gb.generators).is_zero());
            }
        }
    }

    #[test]
    fn homogeneous_basis_is_independent_of_input_order() {
        let f = polys(
            &["x1^2 + 3*x2*x3", "x2^2 - x1*x3", "x1*x2 + x3^2 + 5*x1*x3"],
            3,
        );
        let a = buchberger(&f, None).unwrap();
        let mut g = f.clone();
        g.reverse();
        let b = buchberger(&g, None).unwrap();
        assert_eq!(a.generators, b.generators);
    }

    #[test]
    fn cap_aborts() {
        let f = polys(&["x1^2 + x2*x3", "x2^2 + x1*x3", "x3^2 + x1*x2 + x1*x3"], 3);
        let err = buchberger(&f, Some(2)).unwrap_err();
        assert!(matches!(err, Error::DegreeCapExceeded { cap: 2, .. }));
    }

    #[test]
    fn macaulay_step_examples() {
        let f = polys(&["x1^2", "x2^2"], 2);
        let mut s = MacaulayStepper::new(&f).unwrap();
        assert_eq!(s.step(1), DegreeRecord { degree: 1, rows: 0, cols: 0, rank: 0, new_leading: vec![] });
        let r2 = s.step(2);
        assert_eq!((r2.rows, r2.cols, r2.rank), (2, 3, 2));
        assert_eq!(r2.new_leading, vec!["x1^2", "x2^2"]);
        let r3 = s.step(3);
        assert_eq!(r3.cols, 4);
        assert_eq!(r3.rank, 4);
        assert!(r3.new_leading.is_empty());
        assert!(MacaulayStepper::new(&polys(&["x1^2 + x2"], 2)).is_err());
    }

    #[test]
    fn solving_degree_examples() {
        let (rep, _) = solving_degree(&polys(&["x1", "x2", "x3"], 3), SolveOptions::default()).unwrap();
        assert_eq!(rep.measured_solvdeg, 1);
        assert!(rep.oracle_agrees && rep.stable && rep.zero_dimensional);

        let (rep, gb) = solving_degree(&polys(&["17*x1^2"], 1), SolveOptions::with_bound(2)).unwrap();
        assert_eq!(rep.measured_solvdeg, 2);
        assert_eq!(rep.bound_respected, Some(true));
        assert_eq!(gb.generators, polys(&["x1^2"], 1));
        assert_eq!(rep.per_degree.len(), 1);
        assert_eq!(rep.per_degree[0].rows, 1);
    }

    #[test]
    fn solving_degree_can_exceed_input_degree() {
        // leading-term ideal needs an extra generator of degree 3
        let f = polys(&["x1^2 + x2*x3", "x1*x2 + x3^2"], 3);
        let (rep, gb) = solving_degree(&f, SolveOptions::default()).unwrap();
        assert_eq!(rep.measured_solvdeg, gb.max_degree());
        assert!(rep.measured_solvdeg > 2);
        assert!(rep.oracle_agrees);
        assert!(rep.stable);
    }

    #[test]
    fn zero_dimensionality_and_krull_dimension() {
        let gb = buchberger(&polys(&["x1^2", "x2^3"], 2), None).unwrap();
        assert!(is_zero_dimensional(&gb));
        assert_eq!(krull_dimension(&gb), Some(0));
        let gb = buchberger(&polys(&["x1*x2"], 2), None).unwrap();
        assert!(!is_zero_dimensional(&gb));
        assert_eq!(krull_dimension(&gb), Some(1));
        let gb = buchberger(&polys(&["x1"], 3), None).unwrap();
        assert_eq!(krull_dimension(&gb), Some(2));
    }
}
