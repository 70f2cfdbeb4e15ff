//! Dense Gaussian elimination over `F_p`.

use crate::field::FieldPrime;

/// Row-major dense matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    pub field: FieldPrime,
    pub rows: Vec<Vec<u32>>,
    pub ncols: usize,
}

impl DenseMatrix {
    pub fn new(field: FieldPrime, rows: Vec<Vec<u32>>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        DenseMatrix { field, rows, ncols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Brings the matrix to reduced row echelon form in place, scanning
    /// columns left to right. Zero rows are dropped. Returns pivot columns,
    /// one per remaining row, in increasing order.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let p = self.field;
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.ncols {
            if next == self.rows.len() {
                break;
            }
            let Some(found) = (next..self.rows.len()).find(|&r| self.rows[r][col] != 0) else {
                continue;
            };
            self.rows.swap(next, found);
            let inv = p.inv(self.rows[next][col]).expect("nonzero pivot");
            if inv != 1 {
                for v in &mut self.rows[next][col..] {
                    *v = p.mul(*v, inv);
                }
            }
            let (head, tail) = self.rows.split_at_mut(next);
            let (pivot_row, rest) = tail.split_first_mut().expect("pivot row");
            for row in head.iter_mut().chain(rest.iter_mut()) {
                let factor = row[col];
                if factor == 0 {
                    continue;
                }
                let neg = p.neg(factor);
                for (v, &pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    if pv != 0 {
                        *v = p.mul_add(neg, pv, *v);
                    }
                }
            }
            pivots.push(col);
            next += 1;
        }
        self.rows.truncate(next);
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }
}

/// Rank of a small matrix given as rows.
pub fn rank(field: FieldPrime, rows: &[Vec<u32>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    DenseMatrix::new(field, rows.to_vec(), ncols).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> FieldPrime {
        FieldPrime::new(p).unwrap()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(f(5), &[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(f(5), &[vec![1, 2], vec![2, 3]]), 2);
        assert_eq!(rank(f(5), &[vec![0, 0, 0], vec![0, 0, 0]]), 0);
        // full rank over Q but singular mod 7: det = 7
        assert_eq!(rank(f(7), &[vec![3, 1], vec![1, 5]]), 1);
        assert_eq!(rank(f(5), &[]), 0);
    }

    #[test]
    fn reduced_echelon_form() {
        let mut m = DenseMatrix::new(
            f(101),
            vec![vec![0, 2, 4, 1], vec![1, 1, 1, 1], vec![1, 3, 5, 2]],
            4,
        );
        let pivots = m.row_reduce();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.rows.len(), 2);
        assert_eq!(m.rows[0][0], 1);
        assert_eq!(m.rows[0][1], 0);
        assert_eq!(m.rows[1][1], 1);
        // x1 + x2 + x3 + x4 minus (x2 + 2x3 + x4/2) row gives -x3 + x4/2
        let half = f(101).inv(2).unwrap();
        assert_eq!(m.rows[1], vec![0, 1, 2, half]);
        assert_eq!(m.rows[0], vec![1, 0, 100, f(101).sub(1, half)]);
    }
}
