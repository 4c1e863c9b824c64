//! Finite-dimensional Lie algebras given by rational structure constants.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{self, Scalar, Vector};

/// A Lie algebra `g` with basis `e_0, …, e_{n-1}` and brackets
/// `[e_i, e_j] = Σ_k c^k_ij e_k`.
///
/// Construction does not check the Lie axioms, so that corrupted or
/// transcribed tables can be represented and diagnosed; call
/// [`LieAlgebra::validate`] (or use [`LieAlgebra::checked`]) for that.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    constants: Vec<Scalar>,
    labels: Option<Vec<String>>,
}

/// Outcome of checking antisymmetry and the Jacobi identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// First `(i, j, k)` with `c^k_ij ≠ -c^k_ji`.
    pub antisymmetry_violation: Option<(usize, usize, usize)>,
    /// First `(i, j, k, l)` where the `e_l` component of the Jacobi sum is nonzero.
    pub jacobi_violation: Option<(usize, usize, usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry_violation.is_none() && self.jacobi_violation.is_none()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.antisymmetry_violation, self.jacobi_violation) {
            (None, None) => write!(f, "valid"),
            (Some((i, j, k)), _) => write!(
                f,
                "antisymmetry fails: c^{}_({},{}) != -c^{}_({},{})",
                k + 1,
                i + 1,
                j + 1,
                k + 1,
                j + 1,
                i + 1
            ),
            (None, Some((i, j, k, l))) => write!(
                f,
                "Jacobi identity fails for (e{}, e{}, e{}) in component e{}",
                i + 1,
                j + 1,
                k + 1,
                l + 1
            ),
        }
    }
}

/// Derived and lower central series with the flags they determine.
#[derive(Debug, Clone)]
pub struct Series {
    /// `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ …`, stopping once a term repeats or is zero.
    pub derived: Vec<Subspace>,
    /// `g^(0) = g`, `g^(i) = [g, g^(i-1)]`, stopping likewise.
    pub lower_central: Vec<Subspace>,
    pub is_solvable: bool,
    pub is_nilpotent: bool,
    /// Smallest `c` with `g^(c) = 0`, for nilpotent algebras.
    pub nilpotency_class: Option<usize>,
}

impl Series {
    pub fn derived_dims(&self) -> Vec<usize> {
        self.derived.iter().map(Subspace::dim).collect()
    }

    pub fn lower_central_dims(&self) -> Vec<usize> {
        self.lower_central.iter().map(Subspace::dim).collect()
    }
}

/// Dimension drops `d_i = dim g^(i-1) - dim g^(i)` along the lower central series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VergneType(pub Vec<usize>);

impl fmt::Display for VergneType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl LieAlgebra {
    /// Wraps a flat `n³` array indexed as `(i * n + j) * n + k`.
    pub fn new(dim: usize, constants: Vec<Scalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if constants.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: constants.len(),
            });
        }
        Ok(Self {
            dim,
            constants,
            labels: None,
        })
    }

    pub fn abelian(dim: usize) -> Result<Self> {
        Self::new(dim, vec![Scalar::zero(); dim * dim * dim])
    }

    /// Builds an algebra from entries `(i, j, k, c)` meaning `c^k_ij = c`
    /// (0-based). Each entry also sets `c^k_ji = -c`.
    pub fn from_brackets(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut alg = Self::abelian(dim)?;
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Range(format!(
                    "bracket index ({i}, {j}, {k}) outside dimension {dim}"
                )));
            }
            if i == j {
                if c.is_zero() {
                    continue;
                }
                return Err(Error::Range(format!("[e{0}, e{0}] must vanish", i + 1)));
            }
            let neg = -c.clone();
            *alg.constant_mut(i, j, k) = c;
            *alg.constant_mut(j, i, k) = neg;
        }
        Ok(alg)
    }

    /// Like [`LieAlgebra::new`] but rejects tables that fail validation.
    pub fn checked(dim: usize, constants: Vec<Scalar>) -> Result<Self> {
        let alg = Self::new(dim, constants)?;
        let report = alg.validate();
        if report.is_valid() {
            Ok(alg)
        } else {
            Err(Error::InvalidAlgebra(report.to_string()))
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// `c^k_ij`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    fn constant_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Scalar {
        &mut self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.constants
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(Zero::is_zero)
    }

    /// Nonzero `c^k_ij` with `i < j`, in lexicographic order.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let start = (i * self.dim + j) * self.dim;
        self.constants[start..start + self.dim].to_vec()
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            })
        }
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
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
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut report = ValidationReport {
            antisymmetry_violation: None,
            jacobi_violation: None,
        };
        'anti: for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if *self.constant(i, j, k) != -self.constant(j, i, k).clone() {
                        report.antisymmetry_violation = Some((i, j, k));
                        break 'anti;
                    }
                }
            }
        }
        // Σ_m (c^m_ij c^l_mk + c^m_jk c^l_mi + c^m_ki c^l_mj) = 0
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut sum = Scalar::zero();
                        for m in 0..n {
                            let a = self.constant(i, j, m);
                            if !a.is_zero() {
                                sum += a * self.constant(m, k, l);
                            }
                            let b = self.constant(j, k, m);
                            if !b.is_zero() {
                                sum += b * self.constant(m, i, l);
                            }
                            let c = self.constant(k, i, m);
                            if !c.is_zero() {
                                sum += c * self.constant(m, j, l);
                            }
                        }
                        if !sum.is_zero() {
                            report.jacobi_violation = Some((i, j, k, l));
                            return report;
                        }
                    }
                }
            }
        }
        report
    }

    /// Matrix of `y ↦ [x, y]`; column `j` holds `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_len(x)?;
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        m[(k, j)] += xi * c;
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad_matrix(&scalar::unit(self.dim, i))
            .expect("unit vector has the right length")
    }

    pub fn is_unimodular(&self) -> bool {
        (0..self.dim).all(|i| self.ad_basis(i).trace().is_zero())
    }

    /// Span of all `[a, b]` with `a ∈ A`, `b ∈ B`.
    pub fn bracket_of(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                vectors.push(self.bracket(x, y).expect("subspace lives in g"));
            }
        }
        Subspace::span(self.dim, vectors)
    }

    pub fn derived_algebra(&self) -> Subspace {
        let n = self.dim;
        let mut vectors = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                vectors.push(self.bracket_basis(i, j));
            }
        }
        Subspace::span(n, vectors)
    }

    pub fn series(&self) -> Series {
        let full = Subspace::full(self.dim);

        let mut derived = vec![full.clone()];
        loop {
            let last = derived.last().expect("series starts with g");
            let next = self.bracket_of(last, last);
            let stalled = next.dim() == last.dim();
            let done = next.is_zero();
            if !stalled {
                derived.push(next);
            }
            if done || stalled {
                break;
            }
        }

        let mut lower_central = vec![full.clone()];
        loop {
            let last = lower_central.last().expect("series starts with g");
            let next = self.bracket_of(&full, last);
            let stalled = next.dim() == last.dim();
            let done = next.is_zero();
            if !stalled {
                lower_central.push(next);
            }
            if done || stalled {
                break;
            }
        }

        let is_solvable = derived.last().is_some_and(Subspace::is_zero);
        let is_nilpotent = lower_central.last().is_some_and(Subspace::is_zero);
        let nilpotency_class = is_nilpotent.then(|| lower_central.len() - 1);
        Series {
            derived,
            lower_central,
            is_solvable,
            is_nilpotent,
            nilpotency_class,
        }
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // rows indexed by (j, k): Σ_i x_i c^k_ij = 0
        let mut m = Matrix::zeros(n * n, n);
        for j in 0..n {
            for k in 0..n {
                for i in 0..n {
                    m[(j * n + k, i)] = self.constant(i, j, k).clone();
                }
            }
        }
        Subspace::span(n, m.kernel())
    }

    pub fn vergne_type(&self) -> Result<VergneType> {
        let series = self.series();
        if !series.is_nilpotent {
            return Err(Error::NotNilpotent);
        }
        let dims = series.lower_central_dims();
        Ok(VergneType(dims.windows(2).map(|w| w[0] - w[1]).collect()))
    }

    /// `(dim g/[g,g], dim [g,g])` when `[g,[g,g]] = 0`.
    pub fn metabelian_signature(&self) -> Option<(usize, usize)> {
        let derived = self.derived_algebra();
        let full = Subspace::full(self.dim);
        if !self.bracket_of(&derived, &derived).is_zero() {
            return None;
        }
        if !self.bracket_of(&full, &derived).is_zero() {
            return None;
        }
        Some((self.dim - derived.dim(), derived.dim()))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.contains(&self.bracket_of(&Subspace::full(self.dim), s))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains(&self.bracket_of(s, s))
    }

    /// Structure constants of the subalgebra spanned by `basis`, expressed in
    /// that basis. Fails if the span is not closed under the bracket.
    pub fn restrict(&self, basis: &[Vector]) -> Result<LieAlgebra> {
        for v in basis {
            self.check_len(v)?;
        }
        let m = basis.len();
        let as_cols = Matrix::from_columns(self.dim, basis)?;
        if as_cols.rank() != m {
            return Err(Error::InvalidAlgebra(
                "restriction basis is dependent".into(),
            ));
        }
        let mut constants = vec![Scalar::zero(); m * m * m];
        for a in 0..m {
            for b in 0..m {
                let w = self.bracket(&basis[a], &basis[b])?;
                let coords = as_cols.solve(&w).ok_or_else(|| {
                    Error::InvalidAlgebra("subspace is not closed under the bracket".into())
                })?;
                for (c, x) in coords.into_iter().enumerate() {
                    constants[(a * m + b) * m + c] = x;
                }
            }
        }
        LieAlgebra::new(m, constants)
    }

    /// Rewrites the algebra in the basis given by the columns of `change`.
    pub fn change_basis(&self, change: &Matrix) -> Result<LieAlgebra> {
        let inverse = change.inverse()?;
        let n = self.dim;
        if change.rows() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: change.rows(),
            });
        }
        let cols: Vec<Vector> = (0..n).map(|j| change.column(j)).collect();
        let mut constants = vec![Scalar::zero(); n * n * n];
        for a in 0..n {
            for b in 0..n {
                let w = inverse.mul_vec(&self.bracket(&cols[a], &cols[b])?)?;
                for (c, x) in w.into_iter().enumerate() {
                    constants[(a * n + b) * n + c] = x;
                }
            }
        }
        LieAlgebra::new(n, constants)
    }

    /// `true` when `d` satisfies `d[x,y] = [dx,y] + [x,dy]` on all basis pairs.
    pub fn is_derivation(&self, d: &Matrix) -> bool {
        self.derivation_defect(d).is_none()
    }

    /// First basis pair on which the Leibniz rule fails.
    pub fn derivation_defect(&self, d: &Matrix) -> Option<(usize, usize)> {
        let n = self.dim;
        if d.rows() != n || d.cols() != n {
            return Some((0, 0));
        }
        let images: Vec<Vector> = (0..n).map(|j| d.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.mul_vec(&self.bracket_basis(i, j)).expect("square");
                let rhs = scalar::add(
                    &self.bracket(&images[i], &scalar::unit(n, j)).expect("len"),
                    &self.bracket(&scalar::unit(n, i), &images[j]).expect("len"),
                );
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// `a ⊕_φ n`: the basis of `n` comes first, followed by the basis of `a`, and
/// `[a_i, x] = φ_i(x)` for `x ∈ n`.
pub fn semidirect_sum(a: &LieAlgebra, n: &LieAlgebra, phi: &[Matrix]) -> Result<LieAlgebra> {
    if !a.is_abelian() {
        return Err(Error::InvalidAlgebra(
            "the acting algebra must be abelian".into(),
        ));
    }
    if phi.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: phi.len(),
        });
    }
    let nd = n.dim();
    for (idx, d) in phi.iter().enumerate() {
        if d.rows() != nd || d.cols() != nd {
            return Err(Error::DimensionMismatch {
                expected: nd,
                found: d.rows(),
            });
        }
        if let Some((i, j)) = n.derivation_defect(d) {
            return Err(Error::NotADerivation { index: idx, i, j });
        }
    }
    for x in 0..phi.len() {
        for y in x + 1..phi.len() {
            if !phi[x].commutator(&phi[y])?.is_zero() {
                return Err(Error::NonCommutingImages { a: x, b: y });
            }
        }
    }
    let dim = nd + a.dim();
    let mut entries = Vec::new();
    for i in 0..nd {
        for j in i + 1..nd {
            for k in 0..nd {
                let c = n.constant(i, j, k);
                if !c.is_zero() {
                    entries.push((i, j, k, c.clone()));
                }
            }
        }
    }
    for (idx, d) in phi.iter().enumerate() {
        for j in 0..nd {
            for k in 0..nd {
                if !d[(k, j)].is_zero() {
                    entries.push((nd + idx, j, k, d[(k, j)].clone()));
                }
            }
        }
    }
    let mut alg = LieAlgebra::from_brackets(dim, entries)?;
    if let (Some(nl), Some(al)) = (n.labels(), a.labels()) {
        alg = alg.with_labels(nl.iter().chain(al).cloned().collect())?;
    }
    Ok(alg)
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim {}", self.dim)?;
        for (i, j, k, c) in self.nonzero_brackets() {
            write!(
                f,
                ", [e{},e{}]^{}={}",
                i + 1,
                j + 1,
                k + 1,
                scalar::format(&c)
            )?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{from_ints, int};

    fn h3() -> LieAlgebra {
        LieAlgebra::from_brackets(3, [(0, 1, 2, int(1))]).unwrap()
    }

    fn sol4_0() -> LieAlgebra {
        LieAlgebra::from_brackets(
            4,
            [(3, 0, 0, int(1)), (3, 1, 1, int(1)), (3, 2, 2, int(-2))],
        )
        .unwrap()
    }

    fn nil_x_r() -> LieAlgebra {
        LieAlgebra::from_brackets(4, [(2, 3, 0, int(1))]).unwrap()
    }

    #[test]
    fn zero_dimension_is_rejected() {
        assert_eq!(LieAlgebra::abelian(0), Err(Error::ZeroDimension));
    }

    #[test]
    fn abelian_and_heisenberg_validate() {
        for n in 1..5 {
            assert!(LieAlgebra::abelian(n).unwrap().validate().is_valid());
        }
        assert!(h3().validate().is_valid());
    }

    #[test]
    fn validation_reports_first_violation() {
        let mut alg = h3();
        *alg.constant_mut(1, 0, 2) = int(5);
        let report = alg.validate();
        assert_eq!(report.antisymmetry_violation, Some((0, 1, 2)));

        // (e1, e2, e3): [e1,[e2,e3]] = [e1,e4] = e2 with the other terms zero
        let broken =
            LieAlgebra::from_brackets(4, [(0, 1, 2, int(1)), (1, 2, 3, int(1)), (0, 3, 1, int(1))])
                .unwrap();
        assert!(broken.validate().jacobi_violation.is_some());
    }

    #[test]
    fn ad_matrix_examples() {
        assert!(LieAlgebra::abelian(3)
            .unwrap()
            .ad_matrix(&from_ints(&[1, 2, 3]))
            .unwrap()
            .is_zero());

        // [e3, e4] = e1 gives ad(e4): e3 ↦ -e1
        let ad = nil_x_r().ad_basis(3);
        let mut expected = Matrix::zeros(4, 4);
        expected[(0, 2)] = int(-1);
        assert_eq!(ad, expected);

        let ad = sol4_0().ad_basis(3);
        assert_eq!(ad, Matrix::diagonal(&[int(1), int(1), int(-2), int(0)]));
        assert!(h3().ad_matrix(&from_ints(&[1, 0])).is_err());
    }

    #[test]
    fn unimodularity_examples() {
        assert!(LieAlgebra::abelian(4).unwrap().is_unimodular());
        assert!(sol4_0().is_unimodular());
        let affine = LieAlgebra::from_brackets(2, [(0, 1, 1, int(1))]).unwrap();
        assert!(!affine.is_unimodular());
    }

    #[test]
    fn series_of_heisenberg_and_nil4() {
        let s = h3().series();
        assert_eq!(s.lower_central_dims(), vec![3, 1, 0]);
        assert_eq!(s.nilpotency_class, Some(2));
        assert!(s.is_solvable);

        let nil4 = LieAlgebra::from_brackets(4, [(1, 3, 0, int(1)), (2, 3, 1, int(1))]).unwrap();
        let s = nil4.series();
        assert_eq!(s.lower_central_dims(), vec![4, 2, 1, 0]);
        assert_eq!(s.nilpotency_class, Some(3));

        let s = sol4_0().series();
        assert!(s.is_solvable);
        assert!(!s.is_nilpotent);
        assert_eq!(s.nilpotency_class, None);
        assert_eq!(s.lower_central_dims(), vec![4, 3]);
    }

    #[test]
    fn centers() {
        assert_eq!(LieAlgebra::abelian(3).unwrap().center(), Subspace::full(3));
        assert_eq!(
            h3().center(),
            Subspace::span(3, vec![from_ints(&[0, 0, 1])])
        );
        assert_eq!(
            nil_x_r().center(),
            Subspace::span(4, vec![from_ints(&[1, 0, 0, 0]), from_ints(&[0, 1, 0, 0])])
        );
    }

    #[test]
    fn vergne_types_and_signatures() {
        assert_eq!(h3().vergne_type().unwrap(), VergneType(vec![2, 1]));
        assert_eq!(sol4_0().vergne_type(), Err(Error::NotNilpotent));
        assert_eq!(
            LieAlgebra::abelian(3).unwrap().metabelian_signature(),
            Some((3, 0))
        );
        assert_eq!(h3().metabelian_signature(), Some((2, 1)));
        assert_eq!(sol4_0().metabelian_signature(), None);
    }

    #[test]
    fn semidirect_sum_reproduces_sol4_0() {
        let a = LieAlgebra::abelian(1).unwrap();
        let n = LieAlgebra::abelian(3).unwrap();
        let d = Matrix::diagonal(&[int(1), int(1), int(-2)]);
        let g = semidirect_sum(&a, &n, &[d]).unwrap();
        assert_eq!(g, sol4_0());
    }

    #[test]
    fn semidirect_sum_rotation_on_heisenberg() {
        let a = LieAlgebra::abelian(1).unwrap();
        let d = Matrix::from_ints(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        let g = semidirect_sum(&a, &h3(), &[d]).unwrap();
        assert!(g.validate().is_valid());
        assert!(g.is_unimodular());
        // [e4,e1] = e2, [e4,e2] = -e1; relabel h3 (e1,e2,e3) -> (e2,e3,e1) and
        // e4 -> -e4 to land on [e2,e3]=e1, [e4,e2]=-e3, [e4,e3]=e2.
        let p = Matrix::from_ints(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 0], &[0, 0, 0, -1]]);
        let relabeled = g.change_basis(&p).unwrap();
        let target = LieAlgebra::from_brackets(
            4,
            [(1, 2, 0, int(1)), (3, 1, 2, int(-1)), (3, 2, 1, int(1))],
        )
        .unwrap();
        assert_eq!(relabeled, target);
    }

    #[test]
    fn semidirect_sum_rejects_bad_actions() {
        let a = LieAlgebra::abelian(1).unwrap();
        let not_derivation = Matrix::diagonal(&[int(1), int(0), int(0)]);
        assert!(matches!(
            semidirect_sum(&a, &h3(), &[not_derivation]),
            Err(Error::NotADerivation { index: 0, .. })
        ));
        let a2 = LieAlgebra::abelian(2).unwrap();
        let n = LieAlgebra::abelian(2).unwrap();
        let x = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        let y = Matrix::from_ints(&[&[0, 0], &[1, 0]]);
        assert_eq!(
            semidirect_sum(&a2, &n, &[x, y]),
            Err(Error::NonCommutingImages { a: 0, b: 1 })
        );
    }

    #[test]
    fn restrict_and_change_basis() {
        let g = nil_x_r();
        let s = g
            .restrict(&[
                from_ints(&[1, 0, 0, 0]),
                from_ints(&[0, 0, 1, 0]),
                from_ints(&[0, 0, 0, 1]),
            ])
            .unwrap();
        assert_eq!(s.nonzero_brackets(), vec![(1, 2, 0, int(1))]);
        assert!(g
            .restrict(&[from_ints(&[0, 0, 1, 0]), from_ints(&[0, 0, 0, 1])])
            .is_err());
        let scaled = g
            .change_basis(&Matrix::diagonal(&[int(2), int(1), int(1), int(1)]))
            .unwrap();
        assert_eq!(scaled.constant(2, 3, 0), &crate::scalar::ratio(1, 2));
    }
}
