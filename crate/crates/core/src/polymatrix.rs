//! Degree matrices, polynomial matrices, MinRank instances and the minors
//! modeling.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldPrime;
use crate::multipoly::{binomial, monomials_of_degree, Monomial, Polynomial, Term};

/// Dimension cap for matrices.
pub const MAX_DIM: usize = 64;
/// Cap on individual entry degrees.
pub const MAX_ENTRY_DEGREE: i64 = 1 << 20;

/// An `m x n` grid of positive entry degrees `d[i][j] = e_i + f_j`.
///
/// Rows are kept sorted by their first-column degree (stable). Offsets are
/// normalized as `e_i = d[i][0]`, `f_j = d[0][j] - d[0][0]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct DegreeMatrix {
    m: usize,
    n: usize,
    entries: Vec<Vec<u32>>,
    row_offsets: Vec<i64>,
    col_offsets: Vec<i64>,
}

impl DegreeMatrix {
    pub fn constant(m: usize, n: usize, d: u32) -> Result<Self> {
        validate_degree_matrix(&vec![vec![d as i64; n]; m])
    }

    pub fn ones(m: usize, n: usize) -> Result<Self> {
        Self::constant(m, n, 1)
    }

    pub fn nrows(&self) -> usize {
        self.m
    }

    pub fn ncols(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<u32>] {
        &self.entries
    }

    pub fn row_offsets(&self) -> &[i64] {
        &self.row_offsets
    }

    pub fn col_offsets(&self) -> &[i64] {
        &self.col_offsets
    }

    /// `Some(d)` when every entry equals `d`.
    pub fn constant_value(&self) -> Option<u32> {
        let d = self.entries[0][0];
        self.entries
            .iter()
            .flatten()
            .all(|&x| x == d)
            .then_some(d)
    }

    pub fn total(&self) -> i64 {
        self.entries.iter().flatten().map(|&d| d as i64).sum()
    }

    /// Degree of the homogeneous minor on the given rows and columns.
    pub fn minor_degree(&self, rows: &[usize], cols: &[usize]) -> u32 {
        rows.iter().zip(cols).map(|(&i, &j)| self.entries[i][j]).sum()
    }

    pub fn to_grid(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&d| d as i64).collect())
            .collect()
    }
}

impl TryFrom<Vec<Vec<i64>>> for DegreeMatrix {
    type Error = Error;

    fn try_from(grid: Vec<Vec<i64>>) -> Result<Self> {
        validate_degree_matrix(&grid)
    }
}

impl From<DegreeMatrix> for Vec<Vec<i64>> {
    fn from(d: DegreeMatrix) -> Self {
        d.to_grid()
    }
}

/// Builds `d[i][j] = e_i + f_j`, then validates and sorts rows.
pub fn degree_matrix_from_offsets(e: &[i64], f: &[i64]) -> Result<DegreeMatrix> {
    let grid: Vec<Vec<i64>> = e
        .iter()
        .map(|&ei| f.iter().map(|&fj| ei + fj).collect())
        .collect();
    validate_degree_matrix(&grid)
}

/// Checks positivity and additivity, recovers the offsets and sorts rows.
pub fn validate_degree_matrix(grid: &[Vec<i64>]) -> Result<DegreeMatrix> {
    validate_with_permutation(grid).map(|(d, _)| d)
}

/// Like [`validate_degree_matrix`], also returning the applied row order:
/// row `t` of the result is row `perm[t]` of the input.
pub(crate) fn validate_with_permutation(grid: &[Vec<i64>]) -> Result<(DegreeMatrix, Vec<usize>)> {
    let m = grid.len();
    let n = grid.first().map_or(0, Vec::len);
    if m == 0 || n == 0 {
        return Err(Error::InvalidDegree("empty degree matrix".into()));
    }
    if m > MAX_DIM || n > MAX_DIM {
        return Err(Error::InvalidDegree(format!(
            "dimensions {m}x{n} exceed the cap of {MAX_DIM}"
        )));
    }
    if let Some(i) = grid.iter().position(|row| row.len() != n) {
        return Err(Error::InvalidDegree(format!(
            "row {} has {} entries, expected {n}",
            i + 1,
            grid[i].len()
        )));
    }
    for (i, row) in grid.iter().enumerate() {
        for (j, &d) in row.iter().enumerate() {
            if d <= 0 {
                return Err(Error::InvalidDegree(format!(
                    "entry ({}, {}) = {d} is not positive",
                    i + 1,
                    j + 1
                )));
            }
            if d > MAX_ENTRY_DEGREE {
                return Err(Error::InvalidDegree(format!(
                    "entry ({}, {}) = {d} exceeds the cap {MAX_ENTRY_DEGREE}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    // d[i][j] + d[h][l] = d[i][l] + d[h][j] for all quadruples follows from
    // the case h = l = 1.
    for i in 1..m {
        for j in 1..n {
            if grid[i][j] + grid[0][0] != grid[i][0] + grid[0][j] {
                return Err(Error::InvalidDegree(format!(
                    "additivity violated at (i,j,h,l) = ({}, {}, 1, 1): d[{},{}] + d[1,1] = {} != d[{},1] + d[1,{}] = {}",
                    i + 1,
                    j + 1,
                    i + 1,
                    j + 1,
                    grid[i][j] + grid[0][0],
                    i + 1,
                    j + 1,
                    grid[i][0] + grid[0][j]
                )));
            }
        }
    }
    let mut perm: Vec<usize> = (0..m).collect();
    perm.sort_by_key(|&i| grid[i][0]);
    let entries: Vec<Vec<u32>> = perm
        .iter()
        .map(|&i| grid[i].iter().map(|&d| d as u32).collect())
        .collect();
    let row_offsets = entries.iter().map(|r| r[0] as i64).collect();
    let col_offsets = entries[0]
        .iter()
        .map(|&d| d as i64 - entries[0][0] as i64)
        .collect();
    Ok((
        DegreeMatrix {
            m,
            n,
            entries,
            row_offsets,
            col_offsets,
        },
        perm,
    ))
}

/// An `m x n` matrix (`m ≤ n`) of polynomials whose entry `(i, j)` has degree
/// exactly `d[i][j]` for a valid [`DegreeMatrix`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    m: usize,
    n: usize,
    nvars: usize,
    field: FieldPrime,
    entries: Vec<Vec<Polynomial>>,
    degrees: DegreeMatrix,
}

impl PolyMatrix {
    /// Builds a matrix from rows of nonzero polynomials, deriving and
    /// validating the degree matrix. Rows are reordered so the first-column
    /// degrees are non-decreasing. Wide-only: transpose `m > n` input first.
    pub fn new(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let (m, n, nvars, field) = shape_of(&rows)?;
        if m > n {
            return Err(Error::params(format!(
                "matrix is {m}x{n}; transpose so that m <= n"
            )));
        }
        let mut grid = Vec::with_capacity(m);
        for (i, row) in rows.iter().enumerate() {
            let mut g = Vec::with_capacity(n);
            for (j, f) in row.iter().enumerate() {
                match f.degree() {
                    Some(d) => g.push(d as i64),
                    None => {
                        return Err(Error::InvalidDegree(format!(
                            "entry ({}, {}) is zero",
                            i + 1,
                            j + 1
                        )))
                    }
                }
            }
            grid.push(g);
        }
        let (degrees, perm) = validate_with_permutation(&grid)?;
        let mut rows: Vec<Option<Vec<Polynomial>>> = rows.into_iter().map(Some).collect();
        let entries = perm.iter().map(|&i| rows[i].take().expect("permutation")).collect();
        Ok(PolyMatrix {
            m,
            n,
            nvars,
            field,
            entries,
            degrees,
        })
    }

    /// Builds a matrix with declared degrees without checking that entries
    /// attain them. Entries must not exceed their declared degree. Intended
    /// for constructing adversarial inputs.
    pub fn from_parts_unchecked(rows: Vec<Vec<Polynomial>>, degrees: DegreeMatrix) -> Result<Self> {
        let (m, n, nvars, field) = shape_of(&rows)?;
        if degrees.nrows() != m || degrees.ncols() != n {
            return Err(Error::params("degree matrix shape does not match entries"));
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, f) in row.iter().enumerate() {
                if f.degree().unwrap_or(0) > degrees.get(i, j) {
                    return Err(Error::InvalidDegree(format!(
                        "entry ({}, {}) exceeds its declared degree",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(PolyMatrix {
            m,
            n,
            nvars,
            field,
            entries: rows,
            degrees,
        })
    }

    pub fn nrows(&self) -> usize {
        self.m
    }

    pub fn ncols(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn degrees(&self) -> &DegreeMatrix {
        &self.degrees
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn is_homogeneous(&self) -> bool {
        self.entries.iter().flatten().all(Polynomial::is_homogeneous)
    }

    /// Evaluates every entry at `point`.
    pub fn evaluate(&self, point: &[u32]) -> Result<Vec<Vec<u32>>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|f| f.evaluate(point)).collect())
            .collect()
    }

    /// Homogenizes entry `(i, j)` to degree `d[i][j]` with the new variable
    /// `x_{k+1}`.
    pub fn homogenize_matrix(&self) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, f)| f.homogenize(self.degrees.get(i, j)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            m: self.m,
            n: self.n,
            nvars: self.nvars + 1,
            field: self.field,
            entries,
            degrees: self.degrees.clone(),
        })
    }
}

fn shape_of(rows: &[Vec<Polynomial>]) -> Result<(usize, usize, usize, FieldPrime)> {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    if m == 0 || n == 0 {
        return Err(Error::params("empty matrix"));
    }
    if m > MAX_DIM || n > MAX_DIM {
        return Err(Error::params(format!("{m}x{n} exceeds the cap of {MAX_DIM}")));
    }
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::params("ragged matrix"));
    }
    let first = &rows[0][0];
    let (nvars, field) = (first.nvars(), first.field());
    if rows
        .iter()
        .flatten()
        .any(|f| f.nvars() != nvars || f.field() != field)
    {
        return Err(Error::AmbientMismatch("matrix entries live in different rings".into()));
    }
    Ok((m, n, nvars, field))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceKind {
    Classical,
    Generalized,
}

impl std::fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InstanceKind::Classical => write!(f, "classical"),
            InstanceKind::Generalized => write!(f, "generalized"),
        }
    }
}

impl std::str::FromStr for InstanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(InstanceKind::Classical),
            "generalized" => Ok(InstanceKind::Generalized),
            _ => Err(Error::params(format!("unknown instance kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    /// `k` scalar `m x n` matrices; the instance matrix is `sum x_i M_i`.
    Classical(Vec<Vec<Vec<u32>>>),
    Generalized(PolyMatrix),
}

/// A MinRank instance: find the points where `M` has rank at most `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinRankInstance {
    pub kind: InstanceKind,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub field: FieldPrime,
    pub seed: Option<u64>,
    pub homogeneous: bool,
    pub degrees: DegreeMatrix,
    pub payload: Payload,
}

pub(crate) fn check_params(m: usize, n: usize, r: usize, k: usize) -> Result<()> {
    if !(r < m && m <= n) {
        return Err(Error::params(format!(
            "need r < m <= n, got m={m}, n={n}, r={r}"
        )));
    }
    if n > MAX_DIM {
        return Err(Error::params(format!("n={n} exceeds the cap of {MAX_DIM}")));
    }
    if k == 0 {
        return Err(Error::params("need k >= 1"));
    }
    Ok(())
}

impl MinRankInstance {
    pub fn classical(matrices: Vec<Vec<Vec<u32>>>, r: usize, field: FieldPrime) -> Result<Self> {
        let k = matrices.len();
        let m = matrices.first().map_or(0, Vec::len);
        let n = matrices.first().and_then(|a| a.first()).map_or(0, Vec::len);
        check_params(m, n, r, k)?;
        let p = field.value();
        let mut matrices = matrices;
        for a in &mut matrices {
            if a.len() != m || a.iter().any(|row| row.len() != n) {
                return Err(Error::params("classical matrices must all be m x n"));
            }
            for v in a.iter_mut().flatten() {
                *v %= p;
            }
        }
        let inst = MinRankInstance {
            kind: InstanceKind::Classical,
            m,
            n,
            r,
            k,
            field,
            seed: None,
            homogeneous: true,
            degrees: DegreeMatrix::ones(m, n)?,
            payload: Payload::Classical(matrices),
        };
        inst.matrix()?;
        Ok(inst)
    }

    pub fn generalized(matrix: PolyMatrix, r: usize) -> Result<Self> {
        let (m, n, k) = (matrix.nrows(), matrix.ncols(), matrix.nvars());
        check_params(m, n, r, k)?;
        Ok(MinRankInstance {
            kind: InstanceKind::Generalized,
            m,
            n,
            r,
            k,
            field: matrix.field(),
            seed: None,
            homogeneous: matrix.is_homogeneous(),
            degrees: matrix.degrees().clone(),
            payload: Payload::Generalized(matrix),
        })
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// The polynomial matrix `M`; for classical instances `sum x_i M_i`.
    pub fn matrix(&self) -> Result<PolyMatrix> {
        match &self.payload {
            Payload::Generalized(m) => Ok(m.clone()),
            Payload::Classical(mats) => {
                let rows = (0..self.m)
                    .map(|i| {
                        (0..self.n)
                            .map(|j| {
                                let terms = mats
                                    .iter()
                                    .enumerate()
                                    .filter(|(_, a)| a[i][j] != 0)
                                    .map(|(v, a)| Term {
                                        coeff: a[i][j],
                                        mono: Monomial::var(self.k, v),
                                    })
                                    .collect();
                                Polynomial::from_raw(self.k, self.field, terms)
                            })
                            .collect()
                    })
                    .collect();
                PolyMatrix::new(rows)
            }
        }
    }
}

/// Parameters for drawing a random instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceParams {
    pub kind: InstanceKind,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub field: FieldPrime,
    pub degrees: DegreeMatrix,
    pub homogeneous: bool,
}

impl InstanceParams {
    pub fn classical(m: usize, n: usize, r: usize, k: usize, field: FieldPrime) -> Result<Self> {
        Ok(InstanceParams {
            kind: InstanceKind::Classical,
            m,
            n,
            r,
            k,
            field,
            degrees: DegreeMatrix::ones(m, n)?,
            homogeneous: true,
        })
    }

    pub fn generalized(
        r: usize,
        k: usize,
        field: FieldPrime,
        degrees: DegreeMatrix,
        homogeneous: bool,
    ) -> Self {
        InstanceParams {
            kind: InstanceKind::Generalized,
            m: degrees.nrows(),
            n: degrees.ncols(),
            r,
            k,
            field,
            degrees,
            homogeneous,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_params(self.m, self.n, self.r, self.k)?;
        if self.degrees.nrows() != self.m || self.degrees.ncols() != self.n {
            return Err(Error::params("degree matrix shape does not match m x n"));
        }
        if self.kind == InstanceKind::Classical {
            if self.degrees.constant_value() != Some(1) {
                return Err(Error::params("classical instances need all-ones degrees"));
            }
            if !self.homogeneous {
                return Err(Error::params("classical instances are always homogeneous"));
            }
        }
        Ok(())
    }

    /// Draws an instance from a ChaCha8 stream seeded with `seed`.
    pub fn generate(&self, seed: u64) -> Result<MinRankInstance> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(random_instance(self, &mut rng)?.with_seed(seed))
    }
}

/// Draws a random instance.
///
/// Classical: `k` matrices with i.i.d. uniform entries; an entry position that
/// is zero in all `k` matrices is redrawn so the induced entry has degree 1.
/// Generalized: entry `(i, j)` gets i.i.d. uniform coefficients on every
/// monomial of degree exactly `d[i][j]` (homogeneous) or of degree at most
/// `d[i][j]`; the top-degree part is redrawn until nonzero.
pub fn random_instance<R: Rng + ?Sized>(params: &InstanceParams, rng: &mut R) -> Result<MinRankInstance> {
    params.validate()?;
    let p = params.field;
    let (m, n, k) = (params.m, params.n, params.k);
    match params.kind {
        InstanceKind::Classical => {
            let mut mats = vec![vec![vec![0u32; n]; m]; k];
            for i in 0..m {
                for j in 0..n {
                    loop {
                        for a in mats.iter_mut() {
                            a[i][j] = p.random_raw(rng);
                        }
                        if mats.iter().any(|a| a[i][j] != 0) {
                            break;
                        }
                    }
                }
            }
            MinRankInstance::classical(mats, params.r, p)
        }
        InstanceKind::Generalized => {
            let mut cache: HashMap<u32, Vec<Monomial>> = HashMap::new();
            let mut rows = Vec::with_capacity(m);
            for i in 0..m {
                let mut row = Vec::with_capacity(n);
                for j in 0..n {
                    let d = params.degrees.get(i, j);
                    let lower = if params.homogeneous { d } else { 0 };
                    let mut terms = Vec::new();
                    for deg in (lower..=d).rev() {
                        let monos = cache
                            .entry(deg)
                            .or_insert_with(|| monomials_of_degree(k, deg));
                        loop {
                            let start = terms.len();
                            for mono in monos.iter() {
                                let c = p.random_raw(rng);
                                if c != 0 {
                                    terms.push(Term {
                                        coeff: c,
                                        mono: mono.clone(),
                                    });
                                }
                            }
                            if deg < d || terms.len() > start {
                                break;
                            }
                        }
                    }
                    row.push(Polynomial::from_sorted(k, p, terms));
                }
                rows.push(row);
            }
            let matrix = PolyMatrix::new(rows)?;
            let mut inst = MinRankInstance::generalized(matrix, params.r)?;
            inst.homogeneous = params.homogeneous || inst.homogeneous;
            Ok(inst)
        }
    }
}

/// All `size x size` minors of a matrix, ordered lexicographically by
/// (row set, column set).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorsSystem {
    pub generators: Vec<Polynomial>,
    /// 0-based `(rows, cols)` of each generator.
    pub index: Vec<(Vec<usize>, Vec<usize>)>,
    pub m: usize,
    pub n: usize,
    pub size: usize,
    pub nvars: usize,
    pub field: FieldPrime,
}

impl MinorsSystem {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Expected count `C(m, size) * C(n, size)`.
    pub fn expected_count(m: usize, n: usize, size: usize) -> u128 {
        binomial(m as u128, size as u128) * binomial(n as u128, size as u128)
    }

    /// Nonzero generators, the input handed to the Gröbner engines.
    pub fn nonzero_generators(&self) -> Vec<Polynomial> {
        self.generators.iter().filter(|f| !f.is_zero()).cloned().collect()
    }
}

fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < size - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// Determinants of the chosen rows, keyed by column-subset bitmask.
type MinorTable = HashMap<u64, Polynomial>;

fn mask_of(cols: &[usize]) -> u64 {
    cols.iter().fold(0, |acc, &c| acc | (1u64 << c))
}

/// One Laplace step: extends the determinants of the rows chosen so far
/// (indexed by column subset) by expanding along the new last row.
fn extend_by_row(
    prev: &MinorTable,
    row: &[Polynomial],
    subsets: &[Vec<usize>],
    nvars: usize,
    field: FieldPrime,
) -> MinorTable {
    let mut next = HashMap::with_capacity(subsets.len());
    for cols in subsets {
        let mask = mask_of(cols);
        let mut acc = Polynomial::zero(nvars, field);
        for (pos, &c) in cols.iter().enumerate() {
            let sub = &prev[&(mask & !(1u64 << c))];
            if sub.is_zero() || row[c].is_zero() {
                continue;
            }
            let prod = &row[c] * sub;
            // sign of the cofactor of the last row: (-1)^(#columns after c)
            acc = if (cols.len() - 1 - pos) % 2 == 0 {
                &acc + &prod
            } else {
                &acc - &prod
            };
        }
        next.insert(mask, acc);
    }
    next
}

/// All minors of size `size` of `matrix`, by column-subset dynamic
/// programming shared across row prefixes. Row prefixes are processed in
/// parallel; output order is deterministic.
pub fn minors(matrix: &PolyMatrix, size: usize) -> Result<MinorsSystem> {
    let (m, n) = (matrix.nrows(), matrix.ncols());
    if size == 0 || size > m {
        return Err(Error::params(format!("minor size {size} outside 1..={m}")));
    }
    let (nvars, field) = (matrix.nvars(), matrix.field());
    let subsets: Vec<Vec<Vec<usize>>> = (0..=size).map(|t| combinations(n, t)).collect();
    let col_sets = &subsets[size];

    fn descend(
        matrix: &PolyMatrix,
        table: &MinorTable,
        rows: &mut Vec<usize>,
        size: usize,
        subsets: &[Vec<Vec<usize>>],
        out: &mut Vec<(Vec<usize>, MinorTable)>,
    ) {
        if rows.len() == size {
            out.push((rows.clone(), table.clone()));
            return;
        }
        let start = rows.last().map_or(0, |&r| r + 1);
        let m = matrix.nrows();
        for i in start..m {
            if m - i < size - rows.len() {
                break;
            }
            let next = extend_by_row(
                table,
                &matrix.rows()[i],
                &subsets[rows.len() + 1],
                matrix.nvars(),
                matrix.field(),
            );
            rows.push(i);
            descend(matrix, &next, rows, size, subsets, out);
            rows.pop();
        }
    }

    let mut base = HashMap::new();
    base.insert(0u64, Polynomial::constant(nvars, field, 1));

    let per_first: Vec<Vec<(Vec<usize>, MinorTable)>> = (0..=(m - size))
        .into_par_iter()
        .map(|first| {
            let table = extend_by_row(&base, &matrix.rows()[first], &subsets[1], nvars, field);
            let mut out = Vec::new();
            descend(matrix, &table, &mut vec![first], size, &subsets, &mut out);
            out
        })
        .collect();

    let mut generators = Vec::new();
    let mut index = Vec::new();
    for (rows, table) in per_first.into_iter().flatten() {
        for cols in col_sets {
            generators.push(table[&mask_of(cols)].clone());
            index.push((rows.clone(), cols.clone()));
        }
    }
    Ok(MinorsSystem {
        generators,
        index,
        m,
        n,
        size,
        nvars,
        field,
    })
}

/// Exact determinant of a square polynomial matrix without division.
pub fn minor_determinant(sub: &[Vec<Polynomial>], nvars: usize, field: FieldPrime) -> Result<Polynomial> {
    let s = sub.len();
    if sub.iter().any(|r| r.len() != s) {
        return Err(Error::params("determinant of a non-square matrix"));
    }
    if s > MAX_DIM {
        return Err(Error::params("matrix too large"));
    }
    if sub
        .iter()
        .flatten()
        .any(|f| f.nvars() != nvars || f.field() != field)
    {
        return Err(Error::AmbientMismatch("determinant entries live in different rings".into()));
    }
    let mut table = HashMap::new();
    table.insert(0u64, Polynomial::constant(nvars, field, 1));
    for (t, row) in sub.iter().enumerate() {
        table = extend_by_row(&table, row, &combinations(s, t + 1), nvars, field);
    }
    Ok(table.remove(&mask_of(&(0..s).collect::<Vec<_>>())).expect("full minor"))
}

/// The first `(rows, cols)` whose minor `f` does not satisfy
/// `homogenize(f, deg f) == minor of the homogenized matrix`.
pub fn homogenization_failure(matrix: &PolyMatrix, r: usize) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let affine = minors(matrix, r + 1)?;
    let homog = minors(&matrix.homogenize_matrix()?, r + 1)?;
    for ((f, fh), idx) in affine
        .generators
        .iter()
        .zip(&homog.generators)
        .zip(&affine.index)
    {
        let lifted = match f.degree() {
            None => Polynomial::zero(f.nvars() + 1, f.field()),
            Some(d) => f.homogenize(d)?,
        };
        if &lifted != fh {
            return Ok(Some(idx.clone()));
        }
    }
    Ok(None)
}

/// Whether the homogenizations of the `(r+1)`-minors of `matrix` are the
/// `(r+1)`-minors of its entrywise homogenization.
pub fn check_homogenization_commutes(matrix: &PolyMatrix, r: usize) -> Result<bool> {
    Ok(homogenization_failure(matrix, r)?.is_none())
}
