//! Dense exact matrices over the scalar field: rank, kernel, solve,
//! determinant and Pfaffians of principal minors.

use crate::scalar::Scalar;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatError {
    DimMismatch { expected: (usize, usize), got: (usize, usize) },
    NotSkew,
    OddIndexSet,
    IndexOutOfRange,
}

impl fmt::Display for MatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatError::DimMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {:?}, got {:?}", expected, got)
            }
            MatError::NotSkew => write!(f, "matrix is not skew-symmetric"),
            MatError::OddIndexSet => write!(f, "index set has odd length"),
            MatError::IndexOutOfRange => write!(f, "index out of range"),
        }
    }
}

impl std::error::Error for MatError {}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat { rows, cols, entries }
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut s = Scalar::zero();
            for k in 0..self.cols {
                s += self.at(i, k).clone() * other.at(k, j).clone();
            }
            s
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut s = Scalar::zero();
                for j in 0..self.cols {
                    s += self.at(i, j).clone() * v[j].clone();
                }
                s
            })
            .collect()
    }

    pub fn is_skew(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                if (self.at(i, j).clone() + self.at(j, i).clone()) != Scalar::zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Row echelon form with full pivoting, tracking the column permutation.
    /// Returns (echelon rows, pivot column list in original indexing).
    fn eliminate(&self) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        let mut m: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row(i)).collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut used_rows = vec![false; self.rows];
        loop {
            // pick any nonzero entry in an unused row and unpivoted column
            let mut found = None;
            'outer: for i in 0..self.rows {
                if used_rows[i] {
                    continue;
                }
                for j in 0..self.cols {
                    if pivots.contains(&j) {
                        continue;
                    }
                    if !m[i][j].is_zero() {
                        found = Some((i, j));
                        break 'outer;
                    }
                }
            }
            let (pi, pj) = match found {
                Some(p) => p,
                None => break,
            };
            used_rows[pi] = true;
            pivots.push(pj);
            let pv = m[pi][pj].clone();
            let prow: Vec<Scalar> = m[pi].iter().map(|x| x.clone() / pv.clone()).collect();
            m[pi] = prow.clone();
            for i in 0..self.rows {
                if i == pi || m[i][pj].is_zero() {
                    continue;
                }
                let factor = m[i][pj].clone();
                for j in 0..self.cols {
                    let delta = factor.clone() * prow[j].clone();
                    m[i][j] = m[i][j].clone() - delta;
                }
            }
        }
        // order echelon rows by pivot column for readability
        let mut rows_with_pivot: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for (i, used) in used_rows.iter().enumerate() {
            if *used {
                let pj = (0..self.cols).find(|&j| !m[i][j].is_zero()).unwrap();
                rows_with_pivot.push((pj, m[i].clone()));
            }
        }
        rows_with_pivot.sort_by_key(|(pj, _)| *pj);
        pivots.sort_unstable();
        (rows_with_pivot.into_iter().map(|(_, r)| r).collect(), pivots)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().1.len()
    }

    /// Kernel basis; each vector v satisfies M*v = 0 exactly.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (rows, pivots) = self.eliminate();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fj in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[fj] = Scalar::one();
            for (k, &pj) in pivots.iter().enumerate() {
                v[pj] = -rows[k][fj].clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank_kernel(&self) -> (usize, Vec<Vec<Scalar>>) {
        let r = self.rank();
        let k = self.kernel();
        debug_assert_eq!(r + k.len(), self.cols);
        (r, k)
    }

    /// Exact solve M x = b, or None when b is outside the column span.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, MatError> {
        if b.len() != self.rows {
            return Err(MatError::DimMismatch {
                expected: (self.rows, 1),
                got: (b.len(), 1),
            });
        }
        let aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols { self.at(i, j).clone() } else { b[i].clone() }
        });
        let (rows, pivots) = aug.eliminate();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (k, &pj) in pivots.iter().enumerate() {
            x[pj] = rows[k][self.cols].clone();
        }
        Ok(Some(x))
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m: Vec<Vec<Scalar>> = (0..n).map(|i| self.row(i)).collect();
        let mut det = Scalar::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&i| !m[i][col].is_zero()) {
                Some(r) => r,
                None => return Scalar::zero(),
            };
            if pivot_row != col {
                m.swap(pivot_row, col);
                det = -det;
            }
            let pv = m[col][col].clone();
            det *= pv.clone();
            for i in (col + 1)..n {
                if m[i][col].is_zero() {
                    continue;
                }
                let factor = m[i][col].clone() / pv.clone();
                for j in col..n {
                    let delta = factor.clone() * m[col][j].clone();
                    m[i][j] = m[i][j].clone() - delta;
                }
            }
        }
        det
    }

    /// Pfaffian of the principal minor on the given (0-based, strictly
    /// increasing, even-length) index list of a skew-symmetric matrix.
    pub fn pfaffian(&self, idx: &[usize]) -> Result<Scalar, MatError> {
        if !self.is_skew() {
            return Err(MatError::NotSkew);
        }
        if idx.len() % 2 != 0 {
            return Err(MatError::OddIndexSet);
        }
        if idx.iter().any(|&i| i >= self.rows) {
            return Err(MatError::IndexOutOfRange);
        }
        assert!(idx.windows(2).all(|w| w[0] < w[1]), "index list not increasing");
        Ok(self.pf_rec(idx))
    }

    fn pf_rec(&self, idx: &[usize]) -> Scalar {
        if idx.is_empty() {
            return Scalar::one();
        }
        // expand along the first row of the minor
        let i0 = idx[0];
        let mut acc = Scalar::zero();
        for (k, &j) in idx.iter().enumerate().skip(1) {
            let entry = self.at(i0, j).clone();
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != 0 && p != k)
                .map(|(_, &v)| v)
                .collect();
            let term = entry * self.pf_rec(&rest);
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{}", self.at(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
