//! Dense linear algebra over a [`Scalar`] field: row reduction, kernels,
//! solves, and subspaces stored in reduced row echelon form.

use std::ops::{Index, IndexMut};

use crate::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn diag(entries: &[F]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
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

    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self[(i, i)].is_zero()
                    && (0..i).all(|j| (self[(i, j)].clone() + self[(j, i)].clone()).is_zero())
            })
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| dot(&self.data[i * self.cols..(i + 1) * self.cols], v))
            .collect()
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Matrix<F> {
        self.add(&rhs.scale(&-F::one()))
    }

    pub fn scale(&self, s: &F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    /// Commutator `self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Matrix<F>) -> Matrix<F> {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Bilinear form `uᵀ M v`.
    pub fn form(&self, u: &[F], v: &[F]) -> F {
        dot(u, &self.mul_vec(v))
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let mut best = None;
            let mut best_mag = 0.0;
            for r in row..m.rows {
                let x = &m[(r, col)];
                if !x.is_zero() && (best.is_none() || x.magnitude() > best_mag) {
                    best = Some(r);
                    best_mag = x.magnitude();
                }
            }
            let Some(p) = best else {
                for r in row..m.rows {
                    m[(r, col)] = F::zero();
                }
                continue;
            };
            m.swap_rows(row, p);
            let inv = F::one() / m[(row, col)].clone();
            for j in col..m.cols {
                m[(row, j)] = m[(row, j)].clone() * inv.clone();
            }
            m[(row, col)] = F::one();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m[(r, col)].clone();
                if factor.is_zero() {
                    m[(r, col)] = F::zero();
                    continue;
                }
                for j in col..m.cols {
                    let delta = factor.clone() * m[(row, j)].clone();
                    m[(r, j)] = m[(r, j)].clone() - delta;
                }
                m[(r, col)] = F::zero();
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column, with the free
    /// coordinate set to 1.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Solves `M x = b`, returning any solution when one exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> F {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n)
                .filter(|&r| !m[(r, col)].is_zero())
                .max_by(|&a, &b| m[(a, col)].magnitude().total_cmp(&m[(b, col)].magnitude()))
            else {
                return F::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det = det * pivot.clone();
            for r in col + 1..n {
                let factor = m[(r, col)].clone() / pivot.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let delta = factor.clone() * m[(col, j)].clone();
                    m[(r, j)] = m[(r, j)].clone() - delta;
                }
            }
        }
        det
    }

    /// Leading principal minors `det(M[..k, ..k])` for `k = 1..=n`.
    pub fn leading_minors(&self) -> Vec<F> {
        (1..=self.rows)
            .map(|k| Self::from_fn(k, k, |i, j| self[(i, j)].clone()).det())
            .collect()
    }

    /// Sub-matrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix<F> {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;

    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot<F: Scalar>(u: &[F], v: &[F]) -> F {
    assert_eq!(u.len(), v.len(), "dot product dimension mismatch");
    u.iter()
        .zip(v)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

pub fn add_scaled<F: Scalar>(acc: &mut [F], s: &F, v: &[F]) {
    if s.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a = a.clone() + s.clone() * b.clone();
        }
    }
}

pub fn scaled<F: Scalar>(s: &F, v: &[F]) -> Vec<F> {
    v.iter().map(|x| s.clone() * x.clone()).collect()
}

pub fn sub_vec<F: Scalar>(u: &[F], v: &[F]) -> Vec<F> {
    u.iter().zip(v).map(|(a, b)| a.clone() - b.clone()).collect()
}

pub fn unit<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

pub fn is_zero_vec<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Linear subspace of `F^n`, stored as a basis in reduced row echelon form.
/// Two subspaces are equal iff their stored bases are equal.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &(0..ambient).map(|i| unit(ambient, i)).collect::<Vec<_>>())
    }

    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let (r, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        // The RREF basis has identity columns at its pivots.
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![F::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            add_scaled(&mut rebuilt, c, b);
        }
        if rebuilt.iter().zip(v).all(|(a, b)| (a.clone() - b.clone()).is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Vector with the given coordinates in the stored basis.
    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            add_scaled(&mut out, c, b);
        }
        out
    }

    /// Orthogonal complement with respect to the symmetric form `gram`.
    pub fn orthogonal(&self, gram: &Matrix<F>) -> Subspace<F> {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        let rows: Vec<Vec<F>> = self.basis.iter().map(|b| gram.transpose().mul_vec(b)).collect();
        Self::span(self.ambient, &Matrix::from_rows(rows).kernel())
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &all)
    }

    pub fn intersection(&self, other: &Subspace<F>) -> Subspace<F> {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        // Solve Σ a_i s_i − Σ b_j t_j = 0.
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| scaled(&-F::one(), v)));
        let m = Matrix::from_columns(self.ambient, &cols);
        let vectors: Vec<Vec<F>> = m
            .kernel()
            .iter()
            .map(|k| self.combine(&k[..self.dim()]))
            .collect();
        Self::span(self.ambient, &vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rank_kernel_and_inverse() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(is_zero_vec(&a.mul_vec(&k[0])));
        assert!(a.inverse().is_none());
        assert!(a.det().is_zero());

        let b = m(&[&[2, 1], &[1, 1]]);
        let inv = b.inverse().unwrap();
        assert_eq!(b.mul(&inv), Matrix::identity(2));
        assert_eq!(b.det(), q(1));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(a.solve(&[q(1), q(3)]).is_none());
        let x = a.solve(&[q(1), q(2)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![q(1), q(2)]);
    }

    #[test]
    fn subspace_operations() {
        let s = Subspace::span(3, &[vec![q(1), q(1), q(0)], vec![q(2), q(2), q(0)]]);
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&[q(3), q(3), q(0)]));
        assert!(!s.contains(&[q(1), q(0), q(0)]));
        let perp = s.orthogonal(&Matrix::identity(3));
        assert_eq!(perp.dim(), 2);
        assert!(perp.contains(&[q(1), q(-1), q(0)]));
        assert_eq!(s.intersection(&perp).dim(), 0);
        assert_eq!(s.sum(&perp), Subspace::full(3));
        let t = Subspace::span(3, &[vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]);
        assert_eq!(t.intersection(&perp), Subspace::span(3, &[vec![q(1), q(-1), q(0)]]));
    }

    #[test]
    fn leading_minors_of_spd() {
        let a = m(&[&[2, 1], &[1, 2]]);
        assert_eq!(a.leading_minors(), vec![q(2), q(3)]);
    }
}
