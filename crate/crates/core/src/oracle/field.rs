use std::ops::{Index, IndexMut};

use super::OracleError;

/// The prime field `F_q`, elements stored as residues `0..q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u8,
}

impl PrimeField {
    pub fn new(q: u32) -> Result<Self, OracleError> {
        let prime = q >= 2
            && (2..q)
                .take_while(|d| d * d <= q)
                .all(|d| !q.is_multiple_of(d));
        if !prime || q > u8::MAX as u32 {
            return Err(OracleError::NotPrime(q));
        }
        Ok(PrimeField { q: q as u8 })
    }

    pub fn order(self) -> u32 {
        self.q as u32
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.q as u16) as u8
    }

    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.q as u16 - b as u16) % self.q as u16) as u8
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.q as u16) as u8
    }

    pub fn pow(self, a: u8, mut e: u32) -> u8 {
        let mut base = a % self.q;
        let mut acc = 1 % self.q;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(self, a: u8) -> u8 {
        assert!(!a.is_multiple_of(self.q), "zero has no inverse");
        self.pow(a, self.q as u32 - 2)
    }

    /// A generator of the multiplicative group.
    pub fn primitive_root(self) -> u8 {
        let order = self.q as u32 - 1;
        (1..self.q)
            .find(|&g| (1..order).all(|e| self.pow(g, e) != 1))
            .unwrap_or(1)
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.q
    }
}

/// Dense matrix over a prime field, row major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixOverFq {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl MatrixOverFq {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        MatrixOverFq {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[&[u8]]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for (r, &v) in col.iter().enumerate() {
                m[(r, c)] = v % field.q;
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn mul(&self, other: &MatrixOverFq) -> MatrixOverFq {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    out[(r, c)] = f.add(out[(r, c)], f.mul(a, other[(k, c)]));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (MatrixOverFq, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(sel) = (row..m.rows).find(|&r| m[(r, col)] != 0) else {
                continue;
            };
            m.swap_rows(row, sel);
            let scale = f.inv(m[(row, col)]);
            for c in 0..m.cols {
                m[(row, c)] = f.mul(m[(row, c)], scale);
            }
            for r in 0..m.rows {
                let factor = m[(r, col)];
                if r != row && factor != 0 {
                    for c in 0..m.cols {
                        let sub = f.mul(factor, m[(row, c)]);
                        m[(r, c)] = f.sub(m[(r, c)], sub);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Nonzero rows of the reduced row echelon form.
    pub fn row_space_basis(&self) -> MatrixOverFq {
        let (r, pivots) = self.rref();
        let mut out = Self::zeros(self.field, pivots.len(), self.cols);
        out.data
            .copy_from_slice(&r.data[..pivots.len() * self.cols]);
        out
    }

    pub fn inverse(&self) -> Option<MatrixOverFq> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)];
            }
            aug[(r, n + r)] = 1;
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = Self::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] = red[(r, n + c)];
            }
        }
        Some(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }
}

impl Index<(usize, usize)> for MatrixOverFq {
    type Output = u8;
    fn index(&self, (r, c): (usize, usize)) -> &u8 {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for MatrixOverFq {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut u8 {
        &mut self.data[r * self.cols + c]
    }
}
