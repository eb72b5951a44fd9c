//! Dense matrices of polynomials. Columns are the images of basis vectors,
//! so a `rows x cols` matrix is a map `P^cols -> P^rows`.

use crate::field::Field;
use crate::poly::{PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    data: Vec<Polynomial>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        Matrix { rows, cols, nvars, data: vec![Polynomial::zero(nvars); rows * cols] }
    }

    pub fn identity(n: usize, nvars: usize, field: Field) -> Self {
        Self::scalar(n, &Polynomial::one(nvars, field))
    }

    /// `c * I_n`.
    pub fn scalar(n: usize, c: &Polynomial) -> Self {
        let mut m = Self::zeros(n, n, c.nvars());
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<Polynomial>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, nvars, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_columns(rows: usize, nvars: usize, cols: &[Vec<Polynomial>]) -> Self {
        let mut m = Self::zeros(rows, cols.len(), nvars);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, e) in col.iter().enumerate() {
                m.set(i, j, e.clone());
            }
        }
        m
    }

    /// Parses a row-major table of polynomial strings.
    pub fn parse(ring: &PolyRing, rows: &[&[&str]]) -> crate::Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| ring.parse(s)).collect::<crate::Result<Vec<_>>>())
            .collect::<crate::Result<Vec<_>>>()?;
        Ok(Self::from_rows(ring.nvars(), rows))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Polynomial) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }

    /// Position of the first entry with a nonzero constant term.
    pub fn find_local_unit(&self) -> Option<(usize, usize)> {
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j).is_local_unit())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows, self.nvars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matrix product");
        let mut r = Matrix::zeros(self.rows, o.cols, self.nvars);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = r.get(i, j) + &(a * b);
                        r.set(i, j, v);
                    }
                }
            }
        }
        r
    }

    pub fn mul_vec(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Polynomial::zero(self.nvars);
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &Polynomial) -> Matrix {
        Matrix { data: self.data.iter().map(|e| e * c).collect(), ..self.clone() }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(), ..self.clone() }
    }

    /// `[self | o]`.
    pub fn hconcat(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.rows, o.rows, "row mismatch in hconcat");
        let mut cols = self.columns();
        cols.extend(o.columns());
        Matrix::from_columns(self.rows, self.nvars, &cols)
    }

    /// `self ⊗ I_q`: each entry `a` becomes the block `a * I_q`.
    pub fn kron_identity(&self, q: usize) -> Matrix {
        let mut r = Matrix::zeros(self.rows * q, self.cols * q, self.nvars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for k in 0..q {
                    r.set(i * q + k, j * q + k, self.get(i, j).clone());
                }
            }
        }
        r
    }

    /// `I_p ⊗ self`: block diagonal with `p` copies.
    pub fn identity_kron(&self, p: usize) -> Matrix {
        let blocks = vec![self.clone(); p];
        Matrix::block_diag(self.nvars, &blocks)
    }

    pub fn block_diag(nvars: usize, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut r = Matrix::zeros(rows, cols, nvars);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    r.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        r
    }

    pub fn select_columns(&self, keep: &[usize]) -> Matrix {
        let cols: Vec<_> = keep.iter().map(|&j| self.column(j)).collect();
        Matrix::from_columns(self.rows, self.nvars, &cols)
    }

    pub fn select_rows(&self, keep: &[usize]) -> Matrix {
        let rows: Vec<_> = keep.iter().map(|&i| self.row(i)).collect();
        let mut m = Matrix::from_rows(self.nvars, rows);
        m.cols = self.cols;
        m
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return match self.data.first().and_then(Polynomial::field) {
                Some(f) => Polynomial::one(self.nvars, f),
                None => Polynomial::one(self.nvars, Field::Rational),
            };
        }
        let mut a = self.to_rows();
        let mut sign_flip = false;
        let field = self.data.iter().find_map(Polynomial::field).unwrap_or(Field::Rational);
        let mut prev = Polynomial::one(self.nvars, field);
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign_flip = !sign_flip;
                    }
                    None => return Polynomial::zero(self.nvars),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
                a[i][k] = Polynomial::zero(self.nvars);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign_flip {
            -&d
        } else {
            d
        }
    }
}
