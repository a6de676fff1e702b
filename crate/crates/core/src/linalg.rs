//! Dense linear algebra over the cyclotomic field.

use crate::cyclotomic::{CycNumber, Field};
use crate::error::{Error, Result};

/// Row-major matrix of field elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<CycNumber>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![CycNumber::zero(field); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<CycNumber>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) || r == 0 || c == 0 {
            return Err(Error::Precondition("matrix rows must be nonempty and of equal length".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNumber {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNumber) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form in place; returns pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).inverse().expect("nonzero pivot");
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for j in col..self.cols {
                    let v = self.get(r, j) - &(&factor * self.get(row, j));
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn determinant(&self) -> Result<CycNumber> {
        if self.rows != self.cols {
            return Err(Error::Precondition("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let mut det = CycNumber::one(self.data[0].field());
        for col in 0..m.cols {
            let Some(p) = (col..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(CycNumber::zero(self.data[0].field()));
            };
            if p != col {
                m.swap_rows(p, col);
                det = -&det;
            }
            let pivot = m.get(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.inverse()?;
            for r in col + 1..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) * &inv;
                for j in col..m.cols {
                    let v = m.get(r, j) - &(&factor * m.get(col, j));
                    m.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Unique solution of a square nonsingular system.
    pub fn solve(&self, rhs: &[CycNumber]) -> Result<Vec<CycNumber>> {
        if self.rows != self.cols || rhs.len() != self.rows {
            return Err(Error::Precondition("solve needs a square system".into()));
        }
        let mut aug = Matrix::zeros(self.data[0].field(), self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let pivots = aug.rref();
        if pivots.len() < self.cols || pivots.contains(&self.cols) {
            return Err(Error::Degenerate("singular linear system".into()));
        }
        Ok((0..self.rows).map(|i| aug.get(i, self.cols).clone()).collect())
    }

    /// Basis of the right kernel; each vector has first nonzero coordinate 1.
    pub fn kernel(&self) -> Vec<Vec<CycNumber>> {
        let field = self.data[0].field().clone();
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![CycNumber::zero(&field); self.cols];
            v[free] = CycNumber::one(&field);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(r, free);
            }
            let lead = v.iter().find(|c| !c.is_zero()).expect("nonzero").inverse().expect("nonzero");
            basis.push(v.iter().map(|c| c * &lead).collect());
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CyclotomicField;

    #[test]
    fn solve_and_kernel() {
        let k = CyclotomicField::new(12);
        let n = |v: i64| CycNumber::from_int(&k, v);
        let m = Matrix::from_rows(vec![vec![n(2), n(1)], vec![n(1), n(3)]]).unwrap();
        assert_eq!(m.determinant().unwrap(), n(5));
        assert_eq!(m.solve(&[n(3), n(4)]).unwrap(), vec![n(1), n(1)]);
        let s = Matrix::from_rows(vec![vec![n(1), n(2), n(3)], vec![n(2), n(4), n(6)]]).unwrap();
        assert_eq!(s.rank(), 1);
        let ker = s.kernel();
        assert_eq!(ker.len(), 2);
        for v in ker {
            let dot = &(&v[0] + &(&v[1] * &n(2))) + &(&v[2] * &n(3));
            assert!(dot.is_zero());
        }
    }
}
