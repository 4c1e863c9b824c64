//! Builders for nilpotent algebras and their extensions: Heisenberg and
//! `{n,2}`-Heisenberg algebras, the Dyer algebra, metabelian algebras from
//! tensor notation, derivation algebras, and semidirect extensions that carry
//! SNP Weyl connections by construction.

use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{semidirect_sum, LieAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::metric::{InnerProduct, MetricLieAlgebra};
use crate::scalar::{self, int, Scalar, Vector};

/// An antisymmetric bilinear form, stored as its matrix `F_ij = F(e_i, e_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingForm {
    matrix: Matrix,
}

impl AlternatingForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        let n = matrix.rows();
        for i in 0..n {
            for j in i..n {
                if matrix[(i, j)] != -matrix[(j, i)].clone() {
                    return Err(Error::NotAlternating { i, j });
                }
            }
        }
        Ok(Self { matrix })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            matrix: Matrix::zeros(n, n),
        }
    }

    /// `e^a ∧ e^b` on `ℝ^n`, zero-based.
    pub fn wedge(n: usize, a: usize, b: usize) -> Self {
        let mut matrix = Matrix::zeros(n, n);
        if a != b {
            matrix[(a, b)] = int(1);
            matrix[(b, a)] = int(-1);
        }
        Self { matrix }
    }

    /// `e^1∧e^2 + e^3∧e^4 + ⋯` on `ℝ^{2n}`.
    pub fn standard_symplectic(n: usize) -> Self {
        let mut form = Self::zero(2 * n);
        for k in 0..n {
            form = form.add(&Self::wedge(2 * n, 2 * k, 2 * k + 1));
        }
        form
    }

    pub fn add(&self, other: &AlternatingForm) -> AlternatingForm {
        Self {
            matrix: self.matrix.add(&other.matrix).expect("same size"),
        }
    }

    pub fn scale(&self, c: &Scalar) -> AlternatingForm {
        Self {
            matrix: self.matrix.scale(c),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn eval(&self, v: &[Scalar], w: &[Scalar]) -> Scalar {
        scalar::dot(
            v,
            &self.matrix.mul_vec(w).expect("vector matches form size"),
        )
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.determinant().is_zero()
    }
}

/// `V ⊕ ⟨x⟩` with `[v,w] = F(v,w) x`; `x` is the last basis vector.
pub fn heisenberg(form: &AlternatingForm) -> Result<LieAlgebra> {
    let n = form.dim();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if !form.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    forms_algebra(&[form])
}

/// `V ⊕ ⟨x, y⟩` with `[v,w] = F1(v,w) x + F2(v,w) y`.
pub fn n2_heisenberg(f1: &AlternatingForm, f2: &AlternatingForm) -> Result<LieAlgebra> {
    if f1.dim() != f2.dim() {
        return Err(Error::DimensionMismatch {
            expected: f1.dim(),
            found: f2.dim(),
        });
    }
    let alg = forms_algebra(&[f1, f2])?;
    if alg.derived_algebra().dim() != 2 {
        return Err(Error::NotSurjective);
    }
    Ok(alg)
}

fn forms_algebra(forms: &[&AlternatingForm]) -> Result<LieAlgebra> {
    let n = forms[0].dim();
    let mut entries = Vec::new();
    for (slot, form) in forms.iter().enumerate() {
        for i in 0..n {
            for j in i + 1..n {
                let c = &form.matrix[(i, j)];
                if !c.is_zero() {
                    entries.push((i, j, n + slot, c.clone()));
                }
            }
        }
    }
    LieAlgebra::from_brackets(n + forms.len(), entries)
}

/// The nine-dimensional table attributed to Dyer, transcribed verbatim:
/// `[X1,X2]=X3, [X1,X3]=X4, [X1,X5]=X7, [X1,X8]=X9, [X2,X3]=X5, [X2,X4]=X7,
/// [X2,X5]=X6, [X2,X7]=−X8, [X3,X7]=X9, [X4,X5]=−X9`.
///
/// The table is not run through validation here; as printed it violates the
/// Jacobi identity (see [`LieAlgebra::validate`]).
pub fn dyer() -> LieAlgebra {
    let table: [(usize, usize, usize, i64); 10] = [
        (1, 2, 3, 1),
        (1, 3, 4, 1),
        (1, 5, 7, 1),
        (1, 8, 9, 1),
        (2, 3, 5, 1),
        (2, 4, 7, 1),
        (2, 5, 6, 1),
        (2, 7, 8, -1),
        (3, 7, 9, 1),
        (4, 5, 9, -1),
    ];
    LieAlgebra::from_brackets(
        9,
        table
            .iter()
            .map(|&(i, j, k, c)| (i - 1, j - 1, k - 1, int(c))),
    )
    .expect("indices are in range")
    .with_labels((1..=9).map(|i| format!("X{i}")).collect())
    .expect("nine labels")
}

/// A linear space of `n × n` matrices, stored as a subspace of `ℝ^{n²}`
/// (row-major flattening).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSpace {
    n: usize,
    space: Subspace,
}

fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

fn unflatten(n: usize, v: &[Scalar]) -> Matrix {
    Matrix::from_rows(v.chunks(n).map(<[Scalar]>::to_vec).collect()).expect("n × n")
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn matrix_size(&self) -> usize {
        self.n
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> Vec<Matrix> {
        self.space
            .basis()
            .iter()
            .map(|v| unflatten(self.n, v))
            .collect()
    }

    pub fn contains(&self, d: &Matrix) -> bool {
        d.rows() == self.n && d.cols() == self.n && self.space.contains_vector(&flatten(d))
    }

    /// `Σ c_i B_i` for the stored basis `B_i`.
    pub fn combination(&self, coefficients: &[Scalar]) -> Matrix {
        let mut v = scalar::zero_vector(self.n * self.n);
        for (c, b) in coefficients.iter().zip(self.space.basis()) {
            v = scalar::add(&v, &scalar::scale(c, b));
        }
        unflatten(self.n, &v)
    }

    /// The space as a Lie algebra under the matrix commutator, in the stored
    /// basis. `None` for the zero space, or if the space is not closed.
    pub fn lie_algebra(&self) -> Option<LieAlgebra> {
        let d = self.dim();
        if d == 0 {
            return None;
        }
        let basis = self.basis();
        let mut constants = vec![Scalar::zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                let c = basis[i].commutator(&basis[j]).expect("same size");
                let coords = self.space.coordinates(&flatten(&c))?;
                for (k, x) in coords.into_iter().enumerate() {
                    constants[(i * d + j) * d + k] = x;
                }
            }
        }
        LieAlgebra::new(d, constants).ok()
    }
}

/// Rows of the Leibniz system `D[e_i,e_j] − [De_i,e_j] − [e_i,De_j] = 0` in the
/// unknowns `D_ab` (index `a * n + b`).
fn leibniz_rows(l: &LieAlgebra) -> Vec<Vector> {
    let n = l.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = scalar::zero_vector(n * n);
                for m in 0..n {
                    // (D[e_i,e_j])_k = Σ_m c^m_ij D_km
                    row[k * n + m] += l.constant(i, j, m);
                    // ([De_i,e_j])_k = Σ_m D_mi c^k_mj
                    row[m * n + i] -= l.constant(m, j, k);
                    // ([e_i,De_j])_k = Σ_m D_mj c^k_im
                    row[m * n + j] -= l.constant(i, m, k);
                }
                if !scalar::is_zero_vector(&row) {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// Rows of `G·D + Dᵀ·G = 0`, entries `a ≤ b`.
fn skew_rows(gram: &Matrix) -> Vec<Vector> {
    let n = gram.rows();
    let mut rows = Vec::new();
    for a in 0..n {
        for b in a..n {
            let mut row = scalar::zero_vector(n * n);
            for m in 0..n {
                row[m * n + b] += &gram[(a, m)];
                row[m * n + a] += &gram[(m, b)];
            }
            rows.push(row);
        }
    }
    rows
}

fn solve_space(n: usize, rows: Vec<Vector>) -> DerivationSpace {
    let space = if rows.is_empty() {
        Subspace::full(n * n)
    } else {
        Subspace::span(
            n * n,
            Matrix::from_rows(rows).expect("rows of length n²").kernel(),
        )
    };
    DerivationSpace { n, space }
}

pub fn derivations(l: &LieAlgebra) -> DerivationSpace {
    solve_space(l.dim(), leibniz_rows(l))
}

/// Derivations that are skew-symmetric for `g`.
pub fn skew_derivations(l: &LieAlgebra, g: &InnerProduct) -> Result<DerivationSpace> {
    if g.dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: g.dim(),
        });
    }
    let mut rows = leibniz_rows(l);
    rows.extend(skew_rows(g.gram()));
    Ok(solve_space(l.dim(), rows))
}

/// Nilpotent with a nilpotent derivation algebra. `ℝ` itself qualifies,
/// since `gl(1)` is abelian.
pub fn is_characteristically_nilpotent(l: &LieAlgebra) -> bool {
    if !l.series().is_nilpotent {
        return false;
    }
    derivations(l)
        .lie_algebra()
        .is_none_or(|der| der.series().is_nilpotent)
}

/// `f ∈ Λ²U* ⊗ V` written as terms `(a, b, c)` for `e^a ∧ e^b ⊗ e_c`
/// (one-based, as in the printed tables).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GtTensor {
    m: usize,
    n: usize,
    terms: Vec<(usize, usize, usize)>,
}

impl GtTensor {
    pub fn new(m: usize, n: usize, terms: Vec<(usize, usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &(a, b, c) in &terms {
            if a == 0 || b == 0 || a > m || b > m {
                return Err(Error::Range(format!(
                    "U index in ({a}{b}{c}) outside 1..={m}"
                )));
            }
            if c == 0 || c > n {
                return Err(Error::Range(format!(
                    "V index in ({a}{b}{c}) outside 1..={n}"
                )));
            }
            if a == b {
                return Err(Error::Range(format!("repeated U index in ({a}{b}{c})")));
            }
            if !seen.insert((a.min(b), a.max(b), c)) {
                return Err(Error::DuplicateTerm { a, b, c });
            }
        }
        Ok(Self { m, n, terms })
    }

    /// Whitespace-separated groups of exactly three digits, e.g. `"132 521"`.
    pub fn parse(text: &str, m: usize, n: usize) -> Result<Self> {
        let mut terms = Vec::new();
        for group in text.split_whitespace() {
            let digits: Vec<u32> = group.chars().filter_map(|c| c.to_digit(10)).collect();
            if digits.len() != group.chars().count() {
                return Err(Error::Parse(format!("non-digit in tensor group {group:?}")));
            }
            if digits.len() != 3 {
                return Err(Error::Parse(format!(
                    "tensor group {group:?} must have exactly three digits"
                )));
            }
            terms.push((digits[0] as usize, digits[1] as usize, digits[2] as usize));
        }
        Self::new(m, n, terms)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(usize, usize, usize)] {
        &self.terms
    }

    /// Terms with `a < b` (sign tracked), sorted; equal tensors give equal output.
    pub fn normalized_terms(&self) -> Vec<(usize, usize, usize, i8)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|&(a, b, c)| if a < b { (a, b, c, 1) } else { (b, a, c, -1) })
            .collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Display for GtTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let groups: Vec<String> = self
            .terms
            .iter()
            .map(|(a, b, c)| format!("{a}{b}{c}"))
            .collect();
        f.write_str(&groups.join(" "))
    }
}

/// A metabelian algebra on `U ⊕ V` built from a tensor.
#[derive(Debug, Clone)]
pub struct GtAlgebra {
    pub algebra: LieAlgebra,
    /// `f` maps onto `V`, i.e. `[g,g] = V`.
    pub surjective: bool,
    /// `(dim g/[g,g], dim [g,g])`.
    pub signature: (usize, usize),
}

/// `[u_a, u_b] = Σ v_c` over the terms; `U` occupies the first `m` basis slots.
pub fn gt_algebra(t: &GtTensor) -> GtAlgebra {
    let (m, n) = (t.m, t.n);
    let mut constants = vec![Scalar::zero(); (m + n).pow(3)];
    let dim = m + n;
    for &(a, b, c) in &t.terms {
        let (i, j, k) = (a - 1, b - 1, m + c - 1);
        constants[(i * dim + j) * dim + k] += int(1);
        constants[(j * dim + i) * dim + k] -= int(1);
    }
    let labels = (1..=m)
        .map(|i| format!("u{i}"))
        .chain((1..=n).map(|i| format!("v{i}")))
        .collect();
    let algebra = LieAlgebra::new(dim, constants)
        .and_then(|a| a.with_labels(labels))
        .expect("dimensions agree");
    let signature = algebra
        .metabelian_signature()
        .expect("two-step brackets are metabelian");
    GtAlgebra {
        surjective: signature.1 == n,
        signature,
        algebra,
    }
}

/// `a ⊕_φ n` with `φ(a_i) = family[i]` (zero beyond the family) and the
/// metric `g_n ⊕ identity`. Every vector of `a` then satisfies both SNP
/// conditions: it is orthogonal to `[g,g] ⊆ n` and acts skew-symmetrically.
pub fn build_snp_extension(
    n: &LieAlgebra,
    g_n: &InnerProduct,
    family: &[Matrix],
    a_dim: usize,
) -> Result<MetricLieAlgebra> {
    if a_dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if family.len() > a_dim {
        return Err(Error::DimensionMismatch {
            expected: a_dim,
            found: family.len(),
        });
    }
    if !n.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    let skew = skew_derivations(n, g_n)?;
    if family.iter().any(|d| !skew.contains(d)) {
        return Err(Error::NotSkewDerivation);
    }
    let mut phi = family.to_vec();
    phi.resize(a_dim, Matrix::zeros(n.dim(), n.dim()));
    let a = LieAlgebra::abelian(a_dim)?;
    let algebra = semidirect_sum(&a, n, &phi)?;
    MetricLieAlgebra::new(algebra, g_n.direct_sum(&InnerProduct::identity(a_dim)))
}

/// The `a`-directions of an extension built by [`build_snp_extension`].
pub fn extension_directions(n_dim: usize, a_dim: usize) -> Subspace {
    let dim = n_dim + a_dim;
    Subspace::span(dim, (n_dim..dim).map(|i| scalar::unit(dim, i)))
}

/// Real form of a complex Lie algebra of complex dimension `d`, given by
/// entries `(i, j, k, re, im)` for `c^k_ij = re + i·im` (zero-based).
///
/// Convention: complex basis vector `z_k` becomes the real pair
/// `x_k = z_k` at index `2k` and `y_k = i·z_k` at index `2k + 1`.
pub fn realify(
    d: usize,
    entries: impl IntoIterator<Item = (usize, usize, usize, Scalar, Scalar)>,
) -> Result<LieAlgebra> {
    let mut real = Vec::new();
    for (i, j, k, re, im) in entries {
        let (xi, yi, xj, yj, xk, yk) = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1, 2 * k, 2 * k + 1);
        // [x_i,x_j] = re x_k + im y_k
        real.push((xi, xj, xk, re.clone()));
        real.push((xi, xj, yk, im.clone()));
        // [x_i,y_j] = [y_i,x_j] = i(re + i im) z_k = −im x_k + re y_k
        for (p, q) in [(xi, yj), (yi, xj)] {
            real.push((p, q, xk, -im.clone()));
            real.push((p, q, yk, re.clone()));
        }
        // [y_i,y_j] = −(re x_k + im y_k)
        real.push((yi, yj, xk, -re.clone()));
        real.push((yi, yj, yk, -im));
    }
    let mut constants = vec![Scalar::zero(); (2 * d).pow(3)];
    let dim = 2 * d;
    for (p, q, r, c) in real {
        if p >= dim || q >= dim || r >= dim {
            return Err(Error::Range(format!("complex index outside dimension {d}")));
        }
        constants[(p * dim + q) * dim + r] += &c;
        constants[(q * dim + p) * dim + r] -= &c;
    }
    LieAlgebra::new(dim, constants)
}

/// The complex structure `J` of a realification: `J x_k = y_k`, `J y_k = −x_k`.
pub fn complex_structure(d: usize) -> Matrix {
    let mut j = Matrix::zeros(2 * d, 2 * d);
    for k in 0..d {
        j[(2 * k + 1, 2 * k)] = int(1);
        j[(2 * k, 2 * k + 1)] = int(-1);
    }
    j
}
