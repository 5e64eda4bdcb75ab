//! Dense linear algebra over `F_p`.

use crate::algebra::{PrimeField, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.into_iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            m.data[i * cols..(i + 1) * cols].copy_from_slice(&r);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &Matrix, field: &PrimeField) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let v = field.add(out.get(i, j), field.mul(a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix, field: &PrimeField) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| field.add(*a, *b))
                .collect(),
        }
    }

    pub fn scale(&self, c: Scalar, field: &PrimeField) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| field.mul(*a, c)).collect(),
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar], field: &PrimeField) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (a, b)| field.add(acc, field.mul(*a, *b)))
            })
            .collect()
    }

    pub fn rank(&self, field: &PrimeField) -> usize {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        rref(&mut rows, field).len()
    }
}

/// Reduced row echelon form in place, pivoting on the leftmost available
/// column. Zero rows are removed; returns the pivot column of each
/// remaining row.
pub fn rref(rows: &mut Vec<Vec<Scalar>>, field: &PrimeField) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = field.neg(row[c]);
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    if *pv != 0 {
                        *v = field.add(*v, field.mul(f, *pv));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A subspace of `F_p^n` kept in reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by(ambient: usize, vectors: Vec<Vec<Scalar>>, field: &PrimeField) -> Self {
        let mut rows = vectors;
        for v in &rows {
            assert_eq!(v.len(), ambient);
        }
        let pivots = rref(&mut rows, field);
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient)
                .map(|i| {
                    let mut v = vec![0; ambient];
                    v[i] = 1;
                    v
                })
                .collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that carry no pivot; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Eliminates all pivot coordinates of `v`.
    pub fn reduce(&self, v: &mut [Scalar], field: &PrimeField) {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let a = v[c];
            if a != 0 {
                let f = field.neg(a);
                for (x, r) in v.iter_mut().zip(row) {
                    if *r != 0 {
                        *x = field.add(*x, field.mul(f, *r));
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar], field: &PrimeField) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w, field);
        w.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn rref_leftmost_pivots() {
        let field = f();
        let mut rows = vec![vec![0, 2, 4], vec![1, 1, 1], vec![1, 3, 5]];
        let pivots = rref(&mut rows, &field);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rows, vec![vec![1, 0, 6], vec![0, 1, 2]]);
    }

    #[test]
    fn subspace_complement() {
        let field = f();
        let s = Subspace::spanned_by(3, vec![vec![1, 1, 0]], &field);
        assert_eq!(s.free_columns(), vec![1, 2]);
        let mut v = vec![3, 0, 1];
        s.reduce(&mut v, &field);
        assert_eq!(v, vec![0, 4, 1]);
        assert!(s.contains(&[2, 2, 0], &field));
        assert!(!s.contains(&[0, 0, 1], &field));
    }

    #[test]
    fn products_and_rank() {
        let field = f();
        let a = Matrix::from_rows(vec![vec![1, 2], vec![3, 4]], 2);
        let id = Matrix::identity(2);
        assert_eq!(a.mul(&id, &field), a);
        assert_eq!(a.rank(&field), 2);
        let b = Matrix::from_rows(vec![vec![1, 2], vec![2, 4]], 2);
        assert_eq!(b.rank(&field), 1);
        assert_eq!(a.apply(&[1, 1], &field), vec![3, 0]);
    }
}
