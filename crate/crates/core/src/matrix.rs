//! Dense square and rectangular matrices over any [`Field`].

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_diag(diag: Vec<F>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::invalid("ragged matrix rows"));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// `E_{ij}` scaled by `value`.
    pub fn unit(n: usize, i: usize, j: usize, value: F) -> Self {
        let mut m = Self::zeros(n, n);
        m.data[i * n + j] = value;
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn diagonal(&self) -> Vec<F> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn entries(&self) -> Vec<(usize, usize, F)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn neg(&self) -> Self {
        self.map(F::neg)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().iter().all(|(i, j, _)| i == j)
    }

    pub fn is_strictly_lower(&self) -> bool {
        self.is_square() && self.entries().iter().all(|(i, j, _)| i > j)
    }

    pub fn is_strictly_upper(&self) -> bool {
        self.is_square() && self.entries().iter().all(|(i, j, _)| i < j)
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.is_square() && self.sub(&Self::identity(self.rows)).is_strictly_lower()
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_square() && self.sub(&Self::identity(self.rows)).is_strictly_upper()
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Fraction-free (Bareiss) elimination with row swaps.
    pub fn determinant(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return F::one();
        }
        let mut a = self.to_rows();
        let mut prev = F::one();
        let mut negate = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return F::zero();
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            let prev_inv = prev.inv().expect("Bareiss pivots are nonzero");
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = v.mul(&prev_inv);
                }
                a[i][k] = F::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            det.neg()
        } else {
            det
        }
    }

    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(p, rank);
            let inv = a[rank][col].inv().expect("nonzero pivot");
            for i in rank + 1..self.rows {
                if a[i][col].is_zero() {
                    continue;
                }
                let factor = a[i][col].mul(&inv);
                for j in col..self.cols {
                    let v = a[i][j].sub(&factor.mul(&a[rank][j]));
                    a[i][j] = v;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Gauss-Jordan inverse, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.to_rows();
        let mut b = Self::identity(n).to_rows();
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(p, col);
            b.swap(p, col);
            let inv = a[col][col].inv()?;
            for j in 0..n {
                a[col][j] = a[col][j].mul(&inv);
                b[col][j] = b[col][j].mul(&inv);
            }
            for i in 0..n {
                if i == col || a[i][col].is_zero() {
                    continue;
                }
                let f = a[i][col].clone();
                for j in 0..n {
                    let va = a[i][j].sub(&f.mul(&a[col][j]));
                    a[i][j] = va;
                    let vb = b[i][j].sub(&f.mul(&b[col][j]));
                    b[i][j] = vb;
                }
            }
        }
        Some(Matrix { rows: n, cols: n, data: b.into_iter().flatten().collect() })
    }

    /// `exp(x)` as a finite series; `x` must be strictly lower or strictly upper triangular.
    pub fn exp_nilpotent(&self) -> Result<Self> {
        if !(self.is_strictly_lower() || self.is_strictly_upper()) {
            return Err(Error::invalid("exp_nilpotent expects a strictly triangular matrix"));
        }
        Ok(self.exp_series())
    }

    /// Series for any nilpotent matrix; terminates once a power vanishes.
    pub(crate) fn exp_series(&self) -> Self {
        let n = self.rows;
        let mut sum = Self::identity(n);
        let mut term = Self::identity(n);
        for k in 1..=n {
            term = term.mul(self).scale(&F::from_i64(k as i64).inv().expect("nonzero"));
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term);
        }
        sum
    }

    /// `log(g)` for a unipotent triangular `g`, as a finite series.
    pub fn log_unipotent(&self) -> Result<Self> {
        if !(self.is_lower_unitriangular() || self.is_upper_unitriangular()) {
            return Err(Error::invalid("log_unipotent expects a unitriangular matrix"));
        }
        let n = self.rows;
        let x = self.sub(&Self::identity(n));
        let mut sum = Self::zeros(n, n);
        let mut power = Self::identity(n);
        for k in 1..=n {
            power = power.mul(&x);
            if power.is_zero() {
                break;
            }
            let c = F::from_i64(if k % 2 == 1 { 1 } else { -1 }).mul(&F::from_i64(k as i64).inv().expect("nonzero"));
            sum = sum.add(&power.scale(&c));
        }
        Ok(sum)
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl<F: Field + Serialize> Serialize for Matrix<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de, F: Field + Deserialize<'de>> Deserialize<'de> for Matrix<F> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<F>>::deserialize(deserializer)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
