//! Dense exact linear algebra over the rationals.
//!
//! Matrices here are small (at most a few hundred rows), so a flat row-major
//! `Vec` and straightforward Gaussian elimination are all that is needed.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, height, Scalar, Vector};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| scalar::from_ints(r)).collect())
            .expect("ragged integer matrix")
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

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
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
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| scalar::dot(self.row(i), v))
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub(crate) fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Rank by Gaussian elimination with full pivoting; the pivot is the
    /// nonzero entry of smallest bit height in the remaining block.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        while rank < m.rows && rank < m.cols {
            let mut best: Option<(usize, usize, u64)> = None;
            for i in rank..m.rows {
                for j in rank..m.cols {
                    let x = &m[(i, j)];
                    if !x.is_zero() {
                        let h = height(x);
                        if best.is_none_or(|(_, _, bh)| h < bh) {
                            best = Some((i, j, h));
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = best else { break };
            m.swap_rows(rank, pi);
            m.swap_cols(rank, pj);
            let pivot = m[(rank, rank)].clone();
            for i in rank + 1..m.rows {
                if m[(i, rank)].is_zero() {
                    continue;
                }
                let factor = &m[(i, rank)] / &pivot;
                for j in rank..m.cols {
                    let delta = &factor * &m[(rank, j)];
                    m[(i, j)] -= delta;
                }
            }
            rank += 1;
        }
        rank
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

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // smallest-height pivot within the column
            let pick = (r..m.rows)
                .filter(|&i| !m[(i, c)].is_zero())
                .min_by_key(|&i| height(&m[(i, c)]));
            let Some(p) = pick else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    let delta = &factor * &m[(r, j)];
                    m[(i, j)] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of `{x | self * x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = scalar::zero_vector(self.cols);
                v[f] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Some solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        if b.len() != self.rows {
            return None;
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = scalar::zero_vector(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] / &pivot;
                for j in c..n {
                    let delta = &factor * &m[(c, j)];
                    m[(i, j)] -= delta;
                }
            }
            det *= pivot;
        }
        det
    }

    /// Leading principal minors `det(A[..k, ..k])` for `k = 1..=n`.
    pub fn leading_minors(&self) -> Vec<Scalar> {
        (1..=self.rows.min(self.cols))
            .map(|k| {
                let mut sub = Matrix::zeros(k, k);
                for i in 0..k {
                    for j in 0..k {
                        sub[(i, j)] = self[(i, j)].clone();
                    }
                }
                sub.determinant()
            })
            .collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(scalar::format).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A linear subspace of `Q^n`, stored by a reduced-row-echelon basis so that
/// each subspace has exactly one representation.
#[derive(Clone)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| scalar::unit(ambient, i)))
    }

    /// Span of arbitrary (possibly dependent) vectors of length `ambient`.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let rows: Vec<Vector> = vectors.into_iter().collect();
        assert!(
            rows.iter().all(|v| v.len() == ambient),
            "vector length does not match ambient dimension {ambient}"
        );
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        let m = Matrix::from_rows(rows).expect("rows checked above");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self { ambient, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    fn as_matrix(&self) -> Matrix {
        Matrix::from_rows(self.basis.clone()).unwrap_or_else(|_| Matrix::zeros(0, self.ambient))
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        if scalar::is_zero_vector(v) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(rows)
            .map(|m| m.rank())
            .unwrap_or(usize::MAX)
            == self.dim()
    }

    /// `other ⊆ self`, decided by comparing ranks.
    pub fn contains(&self, other: &Subspace) -> bool {
        if other.ambient != self.ambient {
            return false;
        }
        if other.is_zero() {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Matrix::from_rows(rows)
            .map(|m| m.rank())
            .unwrap_or(usize::MAX)
            == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(
            self.ambient,
            self.basis.iter().chain(other.basis.iter()).cloned(),
        )
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // a·A = b·B  ⇔  (a, -b) in the left kernel of [A; B]
        let mut cols = Vec::new();
        cols.extend(self.basis.iter().cloned());
        cols.extend(
            other
                .basis
                .iter()
                .map(|v| scalar::scale(&-Scalar::one(), v)),
        );
        let m = Matrix::from_columns(self.ambient, &cols).expect("consistent lengths");
        let vectors = m.kernel().into_iter().map(|coeffs| {
            let mut v = scalar::zero_vector(self.ambient);
            for (c, b) in coeffs.iter().zip(&self.basis) {
                v = scalar::add(&v, &scalar::scale(c, b));
            }
            v
        });
        Subspace::span(self.ambient, vectors)
    }

    /// Coefficients of `v` in the stored basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if self.is_zero() {
            return scalar::is_zero_vector(v).then(Vec::new);
        }
        self.as_matrix().transpose().solve(v)
    }

    /// Complement with respect to the bilinear form `gram`.
    pub fn orthogonal_complement(&self, gram: &Matrix) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        let forms = self.as_matrix().mul(gram).expect("gram has ambient size");
        Subspace::span(self.ambient, forms.kernel())
    }

    /// Image of the subspace under a linear map.
    pub fn image_under(&self, map: &Matrix) -> Subspace {
        Subspace::span(
            map.rows(),
            self.basis
                .iter()
                .map(|v| map.mul_vec(v).expect("map matches ambient")),
        )
    }
}

impl PartialEq for Subspace {
    /// Equality by mutual containment.
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.contains(other) && other.contains(self)
    }
}

impl Eq for Subspace {}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|v| {
                format!(
                    "[{}]",
                    v.iter().map(scalar::format).collect::<Vec<_>>().join(", ")
                )
            })
            .collect();
        write!(
            f,
            "Subspace(dim {} in Q^{}: {})",
            self.dim(),
            self.ambient,
            rows.join(" ")
        )
    }
}
