//! Left-invariant metrics: inner products on a Lie algebra, the Levi-Civita
//! connection of the induced metric and its curvature.
//!
//! Left-invariant vector fields are identified with vectors of the algebra,
//! so every derivative of a left-invariant field along another is algebraic.
//! Curvature convention: `R(x,y)z = ∇_x∇_y z − ∇_y∇_x z − ∇_[x,y] z` and
//! `K(x,y) = ⟨R(x,y)y, x⟩ / (|x|²|y|² − ⟨x,y⟩²)`, so round spheres are positive.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::{self, Scalar, Vector};

/// A symmetric positive-definite Gram matrix in the algebra's basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerProduct {
    gram: Matrix,
}

impl InnerProduct {
    /// Checks symmetry and positivity of all leading principal minors.
    pub fn new(gram: Matrix) -> Result<Self> {
        if let Some((i, j)) = gram.first_asymmetry() {
            return Err(Error::NotSymmetric { i, j });
        }
        if let Some(minor) = gram.leading_minors().iter().position(|m| !m.is_positive()) {
            return Err(Error::NotPositiveDefinite { minor: minor + 1 });
        }
        Ok(Self { gram })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            gram: Matrix::identity(n),
        }
    }

    /// The product making the columns of `frame` orthonormal: `G = (B Bᵀ)⁻¹`.
    pub fn from_orthonormal_frame(frame: &Matrix) -> Result<Self> {
        let bbt = frame.mul(&frame.transpose())?;
        Self::new(bbt.inverse()?)
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn inner(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.mul_vec(y).expect("vector matches metric size");
        scalar::dot(x, &gy)
    }

    pub fn norm_sq(&self, x: &[Scalar]) -> Scalar {
        self.inner(x, x)
    }

    /// Orthogonal direct sum with another product on a complementary block.
    pub fn direct_sum(&self, other: &InnerProduct) -> InnerProduct {
        let (a, b) = (self.dim(), other.dim());
        let mut gram = Matrix::zeros(a + b, a + b);
        for i in 0..a {
            for j in 0..a {
                gram[(i, j)] = self.gram[(i, j)].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                gram[(a + i, a + j)] = other.gram[(i, j)].clone();
            }
        }
        InnerProduct { gram }
    }
}

/// A Lie algebra together with an inner product, i.e. a left-invariant
/// Riemannian metric on the corresponding simply connected group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricLieAlgebra {
    algebra: LieAlgebra,
    metric: InnerProduct,
}

/// Coefficients `Γ^k_ij` with `∇_{e_i} e_j = Σ_k Γ^k_ij e_k` on left-invariant fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    dim: usize,
    gamma: Vec<Scalar>,
}

impl Connection {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            gamma: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `Γ^k_ij`.
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.gamma[(i * self.dim + j) * self.dim + k]
    }

    pub(crate) fn gamma_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Scalar {
        &mut self.gamma[(i * self.dim + j) * self.dim + k]
    }

    /// `∇_{e_i} e_j`.
    pub fn apply_basis(&self, i: usize, j: usize) -> Vector {
        let start = (i * self.dim + j) * self.dim;
        self.gamma[start..start + self.dim].to_vec()
    }

    /// `∇_x y` for constant-coefficient fields, by bilinear extension.
    pub fn covariant_derivative(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        let n = self.dim;
        let mut out = scalar::zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let g = self.gamma(i, j, k);
                    if !g.is_zero() {
                        *o += &w * g;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Exact orthonormal frame: `change` holds the new basis vectors as columns
/// in old coordinates, `algebra` the brackets rewritten in that frame.
#[derive(Debug, Clone)]
pub struct OrthonormalFrame {
    pub change: Matrix,
    pub algebra: LieAlgebra,
}

/// Floating-point orthonormal frame for metrics whose norms are not rational squares.
#[derive(Debug, Clone)]
pub struct FloatFrame {
    /// Row-major `n × n`, columns are the frame vectors.
    pub change: Vec<f64>,
    /// Structure constants in the frame, indexed `(i * n + j) * n + k`.
    pub constants: Vec<f64>,
    pub dim: usize,
}

/// Tolerance for the floating-point orthonormalization checks.
pub const FLOAT_FRAME_TOLERANCE: f64 = 1e-12;

impl MetricLieAlgebra {
    pub fn new(algebra: LieAlgebra, metric: InnerProduct) -> Result<Self> {
        if algebra.dim() != metric.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: metric.dim(),
            });
        }
        Ok(Self { algebra, metric })
    }

    pub fn with_identity(algebra: LieAlgebra) -> Self {
        let metric = InnerProduct::identity(algebra.dim());
        Self { algebra, metric }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn metric(&self) -> &InnerProduct {
        &self.metric
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn inner(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.metric.inner(x, y)
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            })
        }
    }

    /// Exact Gram–Schmidt on the columns of `start` (the standard basis when
    /// `None`), in order. Fails with `InexactSqrt` if a squared norm is not
    /// the square of a rational.
    pub fn orthonormalize_exact(&self, start: Option<&Matrix>) -> Result<OrthonormalFrame> {
        let n = self.dim();
        let start = start.cloned().unwrap_or_else(|| Matrix::identity(n));
        if start.rows() != n || start.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: start.cols(),
            });
        }
        let mut frame: Vec<Vector> = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = start.column(j);
            for u in &frame {
                let c = self.inner(&v, u);
                v = scalar::sub(&v, &scalar::scale(&c, u));
            }
            let norm_sq = self.metric.norm_sq(&v);
            if norm_sq.is_zero() {
                return Err(Error::Singular);
            }
            let norm = scalar::sqrt_exact(&norm_sq).ok_or(Error::InexactSqrt { index: j })?;
            frame.push(scalar::scale(&norm.recip(), &v));
        }
        let change = Matrix::from_columns(n, &frame)?;
        let algebra = self.algebra.change_basis(&change)?;
        Ok(OrthonormalFrame { change, algebra })
    }

    /// Floating-point Gram–Schmidt on the standard basis, in order.
    pub fn orthonormalize_float(&self) -> Result<FloatFrame> {
        let n = self.dim();
        let g: Vec<f64> = self
            .metric
            .gram
            .entries()
            .iter()
            .map(scalar::to_f64)
            .collect();
        let inner = |x: &[f64], y: &[f64]| -> f64 {
            let mut s = 0.0;
            for i in 0..n {
                for j in 0..n {
                    s += x[i] * g[i * n + j] * y[j];
                }
            }
            s
        };
        let mut frame: Vec<Vec<f64>> = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = vec![0.0; n];
            v[j] = 1.0;
            for u in &frame {
                let c = inner(&v, u);
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi -= c * ui;
                }
            }
            let norm = inner(&v, &v).sqrt();
            if norm.is_nan() || norm <= FLOAT_FRAME_TOLERANCE {
                return Err(Error::Singular);
            }
            v.iter_mut().for_each(|x| *x /= norm);
            frame.push(v);
        }
        for a in 0..n {
            for b in 0..n {
                let target = if a == b { 1.0 } else { 0.0 };
                if (inner(&frame[a], &frame[b]) - target).abs() > FLOAT_FRAME_TOLERANCE {
                    return Err(Error::Singular);
                }
            }
        }
        // coordinates in the frame: X_a · frameᵀ G
        let c: Vec<f64> = self
            .algebra
            .constants()
            .iter()
            .map(scalar::to_f64)
            .collect();
        let bracket = |x: &[f64], y: &[f64]| -> Vec<f64> {
            let mut out = vec![0.0; n];
            for i in 0..n {
                for j in 0..n {
                    let w = x[i] * y[j];
                    if w == 0.0 {
                        continue;
                    }
                    for k in 0..n {
                        out[k] += w * c[(i * n + j) * n + k];
                    }
                }
            }
            out
        };
        let mut constants = vec![0.0; n * n * n];
        for a in 0..n {
            for b in 0..n {
                let w = bracket(&frame[a], &frame[b]);
                for k in 0..n {
                    constants[(a * n + b) * n + k] = inner(&w, &frame[k]);
                }
            }
        }
        let mut change = vec![0.0; n * n];
        for (j, col) in frame.iter().enumerate() {
            for i in 0..n {
                change[i * n + j] = col[i];
            }
        }
        Ok(FloatFrame {
            change,
            constants,
            dim: n,
        })
    }

    /// Koszul formula for left-invariant fields:
    /// `2⟨∇_X Y, Z⟩ = ⟨[X,Y],Z⟩ − ⟨[Y,Z],X⟩ + ⟨[Z,X],Y⟩`.
    pub fn levi_civita(&self) -> Connection {
        let n = self.dim();
        let g = self.metric.gram();
        let g_inv = g.inverse().expect("positive-definite gram is invertible");
        // lowered[(i,j,k)] = ⟨[e_i, e_j], e_k⟩
        let mut lowered = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let b = self.algebra.bracket_basis(i, j);
                let gb = g.mul_vec(&b).expect("square");
                for k in 0..n {
                    lowered[(i * n + j) * n + k] = gb[k].clone();
                }
            }
        }
        let at = |i: usize, j: usize, k: usize| &lowered[(i * n + j) * n + k];
        let half = scalar::ratio(1, 2);
        let mut conn = Connection::zero(n);
        for i in 0..n {
            for j in 0..n {
                let cov: Vector = (0..n)
                    .map(|k| &half * (at(i, j, k) - at(j, k, i) + at(k, i, j)))
                    .collect();
                if scalar::is_zero_vector(&cov) {
                    continue;
                }
                let raised = g_inv.mul_vec(&cov).expect("square");
                for (m, v) in raised.into_iter().enumerate() {
                    *conn.gamma_mut(i, j, m) = v;
                }
            }
        }
        conn
    }

    /// `R(x,y)z` for the connection `conn` (torsion-free or not, the same
    /// algebraic expression applies on left-invariant fields).
    pub fn curvature_tensor(
        &self,
        conn: &Connection,
        x: &[Scalar],
        y: &[Scalar],
        z: &[Scalar],
    ) -> Result<Vector> {
        for v in [x, y, z] {
            self.check_len(v)?;
        }
        let yz = conn.covariant_derivative(y, z)?;
        let xz = conn.covariant_derivative(x, z)?;
        let xy = self.algebra.bracket(x, y)?;
        let a = conn.covariant_derivative(x, &yz)?;
        let b = conn.covariant_derivative(y, &xz)?;
        let c = conn.covariant_derivative(&xy, z)?;
        Ok(scalar::sub(&scalar::sub(&a, &b), &c))
    }

    /// `⟨R(x,y)y, x⟩ / (|x|²|y|² − ⟨x,y⟩²)` for an arbitrary connection.
    pub fn sectional_with(&self, conn: &Connection, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        self.check_len(x)?;
        self.check_len(y)?;
        let area = self.metric.norm_sq(x) * self.metric.norm_sq(y) - {
            let xy = self.inner(x, y);
            &xy * &xy
        };
        if area.is_zero() {
            return Err(Error::DegeneratePlane);
        }
        let r = self.curvature_tensor(conn, x, y, y)?;
        Ok(self.inner(&r, x) / area)
    }

    pub fn sectional_curvature(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        self.sectional_with(&self.levi_civita(), x, y)
    }

    /// `∇_{e_i} E = 0` for every basis vector.
    pub fn is_parallel(&self, e: &[Scalar]) -> Result<bool> {
        self.check_len(e)?;
        let conn = self.levi_civita();
        Ok(is_parallel_for(&conn, e))
    }
}

pub(crate) fn is_parallel_for(conn: &Connection, e: &[Scalar]) -> bool {
    let n = conn.dim();
    (0..n).all(|i| {
        scalar::is_zero_vector(
            &conn
                .covariant_derivative(&scalar::unit(n, i), e)
                .expect("lengths checked by caller"),
        )
    })
}
