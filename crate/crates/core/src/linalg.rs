//! Exact linear algebra over ℚ.
//!
//! Ranks are computed fraction-free (Bareiss) on integer rows obtained by
//! clearing denominators; systems are solved by Gauss-Jordan over
//! `BigRational`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Q>),
    Inconsistent,
    /// Consistent with this many free variables.
    Underdetermined(usize),
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// `self − k·I`.
    pub fn shift(&self, k: &Q) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] -= k;
        }
        m
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<BigInt>> = (0..self.rows).map(|r| integer_row(self.row(r))).collect();
        bareiss_rank(rows, self.cols)
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Solves `self · x = b`.
    pub fn solve(&self, b: &[Q]) -> Solution {
        assert_eq!(b.len(), self.rows);
        let n = self.cols;
        let mut aug: Vec<Vec<Q>> = (0..self.rows)
            .map(|r| {
                let mut v = self.row(r).to_vec();
                v.push(b[r].clone());
                v
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..aug.len()).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(row, p);
            let inv = aug[row][col].recip();
            for v in aug[row].iter_mut().skip(col) {
                *v *= &inv;
            }
            let pivot_row = aug[row].clone();
            for (r, other) in aug.iter_mut().enumerate() {
                if r == row || other[col].is_zero() {
                    continue;
                }
                let f = other[col].clone();
                for c in col..=n {
                    if !pivot_row[c].is_zero() {
                        let d = &f * &pivot_row[c];
                        other[c] -= d;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == aug.len() {
                break;
            }
        }
        if aug[row..].iter().any(|r| !r[n].is_zero()) {
            return Solution::Inconsistent;
        }
        if pivots.len() < n {
            return Solution::Underdetermined(n - pivots.len());
        }
        let mut x = vec![Q::zero(); n];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[r][n].clone();
        }
        Solution::Unique(x)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }
}

/// Scales a rational row to a primitive integer row with the same span.
fn integer_row(row: &[Q]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .filter(|v| !v.is_zero())
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect()
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == m.len() {
            break;
        }
        let Some(p) = (rank..m.len())
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].abs())
        else {
            continue;
        };
        m.swap(rank, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let piv = &pivot_row[col];
        for r in tail.iter_mut() {
            let f = r[col].clone();
            for c in col + 1..cols {
                let v = &r[c] * piv - &f * &pivot_row[c];
                r[c] = v / &prev;
            }
            r[col] = BigInt::zero();
        }
        prev = piv.clone();
        rank += 1;
    }
    rank
}

/// Solves a square integer system `a·x = b` by fraction-free Gauss-Jordan.
/// Returns `(numerators, denominator)` with `x = numerators / denominator`,
/// or `None` if `a` is singular.
pub fn solve_integer(mut a: Vec<Vec<BigInt>>, b: Vec<BigInt>) -> Option<(Vec<BigInt>, BigInt)> {
    let n = a.len();
    assert_eq!(b.len(), n);
    for (row, v) in a.iter_mut().zip(b) {
        assert_eq!(row.len(), n);
        row.push(v);
    }
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).filter(|&r| !a[r][k].is_zero()).min_by_key(|&r| a[r][k].abs())?;
        a.swap(k, p);
        let pivot_row = a[k].clone();
        let piv = pivot_row[k].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let f = row[k].clone();
            for j in 0..=n {
                if j == k {
                    continue;
                }
                let v = &row[j] * &piv - &f * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = piv;
    }
    // every diagonal entry now equals the final pivot
    let den = prev;
    let nums = a.into_iter().map(|mut r| r.pop().expect("augmented")).collect();
    Some((nums, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect())
    }

    #[test]
    fn rank_small() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[0, 1], &[-1, 0]]).rank(), 2);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).rank(), 2);
        let half = Matrix::from_rows(vec![vec![Q::new(1.into(), 2.into()), q(1)], vec![q(1), q(2)]]);
        assert_eq!(half.rank(), 1);
    }

    #[test]
    fn solve_cases() {
        let a = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(a.solve(&[q(3), q(5)]), Solution::Unique(vec![Q::new(4.into(), 5.into()), Q::new(7.into(), 5.into())]));
        let b = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(b.solve(&[q(1), q(3)]), Solution::Inconsistent);
        assert_eq!(b.solve(&[q(1), q(2)]), Solution::Underdetermined(1));
        let tall = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(tall.solve(&[q(1), q(2), q(3)]), Solution::Unique(vec![q(1), q(2)]));
        assert_eq!(tall.solve(&[q(1), q(2), q(4)]), Solution::Inconsistent);
    }

    #[test]
    fn integer_solve_matches_rational() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(1..7);
            let a: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-5..6)).collect()).collect();
            let b: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..6)).collect();
            let am = Matrix::from_fn(n, n, |r, c| q(a[r][c]));
            let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
            let int = solve_integer(a.iter().map(|r| big(r)).collect(), big(&b));
            match am.solve(&b.iter().map(|&x| q(x)).collect::<Vec<_>>()) {
                Solution::Unique(x) => {
                    let (nums, den) = int.expect("nonsingular");
                    let y: Vec<Q> = nums.into_iter().map(|v| Q::new(v, den.clone())).collect();
                    assert_eq!(x, y);
                }
                _ => assert!(int.is_none()),
            }
        }
    }

    #[test]
    fn rank_matches_solve_on_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let r = rng.gen_range(1..7);
            let c = rng.gen_range(1..7);
            let a = Matrix::from_fn(r, c, |_, _| q(rng.gen_range(-2..3)));
            let rank = a.rank();
            assert_eq!(rank, a.transpose().rank());
            match a.solve(&vec![q(0); r]) {
                Solution::Unique(_) => assert_eq!(rank, c),
                Solution::Underdetermined(k) => assert_eq!(rank, c - k),
                Solution::Inconsistent => unreachable!(),
            }
        }
    }
}
