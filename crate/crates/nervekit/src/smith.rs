//! Exact integer matrices over arbitrary-precision integers, Smith normal
//! form with unimodular transforms, kernels, and exact linear solves.
//!
//! Intermediate entries in Smith reduction blow up routinely, so everything
//! runs over `BigInt`; no fixed-width arithmetic is used anywhere.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = IntMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows, 1);
        for i in 0..self.rows {
            out.set(i, 0, self.get(i, j).clone());
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row_i -= q * row_k`
    fn row_sub_mul(&mut self, i: usize, k: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(i, j) - q * self.get(k, j);
            self.set(i, j, v);
        }
    }

    /// `col_j -= q * col_k`
    fn col_sub_mul(&mut self, j: usize, k: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, j) - q * self.get(i, k);
            self.set(i, j, v);
        }
    }

    /// `row_k += row_i`
    fn row_add(&mut self, k: usize, i: usize) {
        for j in 0..self.cols {
            let v = self.get(k, j) + self.get(i, j);
            self.set(k, j, v);
        }
    }

    fn row_neg(&mut self, k: usize) {
        for j in 0..self.cols {
            let v = -self.get(k, j);
            self.set(k, j, v);
        }
    }
}

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal with a
/// divisibility chain of non-negative entries.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl SmithDecomposition {
    /// Explicit multiplication check `u·a·v == d`.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        self.u.mul(a).mul(&self.v) == self.d
    }

    /// Nonzero diagonal entries in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|k| self.d.get(k, k).clone()).collect()
    }
}

/// Smith normal form by pivoting on minimal absolute value, clearing the
/// pivot row and column, and repairing divisibility by row addition.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let t = rows.min(cols);
    let mut rank = 0;
    'stage: for k in 0..t {
        loop {
            // minimal nonzero |entry| in the trailing submatrix
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if !d.get(i, j).is_zero()
                        && pivot
                            .map_or(true, |(pi, pj)| d.get(i, j).abs() < d.get(pi, pj).abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break 'stage };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut dirty = false;
            for i in k + 1..rows {
                if !d.get(i, k).is_zero() {
                    let q = d.get(i, k) / d.get(k, k);
                    if !q.is_zero() {
                        d.row_sub_mul(i, k, &q);
                        u.row_sub_mul(i, k, &q);
                    }
                    if !d.get(i, k).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in k + 1..cols {
                if !d.get(k, j).is_zero() {
                    let q = d.get(k, j) / d.get(k, k);
                    if !q.is_zero() {
                        d.col_sub_mul(j, k, &q);
                        v.col_sub_mul(j, k, &q);
                    }
                    if !d.get(k, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // pivot row/column clear; repair divisibility of the remainder
            let mut offender = None;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(d.get(i, j) % d.get(k, k)).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    d.row_add(k, i);
                    u.row_add(k, i);
                }
                None => {
                    rank += 1;
                    break;
                }
            }
        }
    }
    for k in 0..rank {
        if d.get(k, k).is_negative() {
            d.row_neg(k);
            u.row_neg(k);
        }
    }
    SmithDecomposition { d, u, v, rank }
}

/// Integer kernel basis of `a`, as the columns of the returned matrix.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let nullity = a.cols - s.rank;
    let mut out = IntMatrix::zeros(a.cols, nullity);
    for (c, j) in (s.rank..a.cols).enumerate() {
        for i in 0..a.cols {
            out.set(i, c, s.v.get(i, j).clone());
        }
    }
    out
}

/// Solves `a · x = b` exactly over the integers (columnwise for matrix `b`).
/// Returns `None` if some column has no integral solution.
pub fn solve(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(a.rows, b.rows);
    let s = smith_normal_form(a);
    let ub = s.u.mul(b);
    let mut y = IntMatrix::zeros(a.cols, b.cols);
    for c in 0..b.cols {
        for i in 0..a.rows {
            let rhs = ub.get(i, c);
            if i < s.rank {
                let di = s.d.get(i, i);
                let (q, r) = (rhs / di, rhs % di);
                if !r.is_zero() {
                    return None;
                }
                if i < a.cols {
                    y.set(i, c, q);
                }
            } else if !rhs.is_zero() {
                return None;
            }
        }
    }
    Some(s.v.mul(&y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn snf_checked(a: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(a);
        assert!(s.verify(a), "U·A·V != D");
        // diagonal with divisibility chain
        for i in 0..s.d.rows {
            for j in 0..s.d.cols {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        for k in 1..s.rank {
            assert!((s.d.get(k, k) % s.d.get(k - 1, k - 1)).is_zero());
        }
        s
    }

    #[test]
    fn snf_examples() {
        let s = snf_checked(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 0]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2)]);

        let s = snf_checked(&IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]));
        assert_eq!(
            s.invariant_factors(),
            vec![BigInt::from(1), BigInt::from(2)]
        );

        let z = IntMatrix::zeros(3, 2);
        let s = snf_checked(&z);
        assert_eq!(s.rank, 0);
        assert!(s.d.is_zero());
    }

    #[test]
    fn kernel_and_solve() {
        // x + y + z = 0 has a rank-2 kernel
        let a = IntMatrix::from_rows(&[vec![1, 1, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols, 2);
        assert!(a.mul(&k).is_zero());

        let a = IntMatrix::from_rows(&[vec![2, 1], vec![0, 3]]);
        let b = IntMatrix::from_rows(&[vec![5], vec![9]]);
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul(&x), b);

        let b = IntMatrix::from_rows(&[vec![1], vec![1]]);
        assert!(solve(&a, &b).is_none(), "2x + y = 1, 3y = 1 has no integer solution");
    }

    proptest! {
        #[test]
        fn snf_random_matrices(entries in proptest::collection::vec(-9i64..=9, 12)) {
            let rows: Vec<Vec<i64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            let a = IntMatrix::from_rows(&rows);
            let s = snf_checked(&a);
            prop_assert!(s.rank <= 3);
            let k = kernel_basis(&a);
            prop_assert!(a.mul(&k).is_zero());
        }
    }
}
