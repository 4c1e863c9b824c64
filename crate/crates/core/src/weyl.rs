//! Weyl connections of left-invariant fields and the stretched non-positive
//! (SNP) condition.
//!
//! For a metric `⟨,⟩` and a field `E` with dual 1-form `φ = ⟨E, ·⟩` the Weyl
//! connection is `∇̂_X Y = ∇_X Y − φ(Y)X − φ(X)Y + ⟨X,Y⟩E`. On a unimodular
//! group `E` is SNP exactly when `ad_E` is skew-symmetric and `E ⊥ [g,g]`;
//! [`snp_space`] solves those two linear conditions exactly.
//!
//! The curvature functional used by [`WeylConnection::sectional`] and
//! [`stretch_scan`] is the Riemannian sectional formula applied to `R̂`. That
//! choice is a convention, so scans are evidence only and never decide SNP.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::metric::{is_parallel_for, Connection, MetricLieAlgebra};
use crate::scalar::{self, Scalar, Vector};

/// Absolute tolerance on sampled curvature values.
pub const SCAN_TOLERANCE: f64 = 1e-9;
/// Sampled planes whose Gram determinant falls below this are redrawn.
pub const MIN_PLANE_AREA: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct WeylConnection {
    base: MetricLieAlgebra,
    field: Vector,
    phi: Vector,
    gamma_hat: Connection,
}

impl WeylConnection {
    pub fn new(base: &MetricLieAlgebra, field: &[Scalar]) -> Result<Self> {
        let n = base.dim();
        if field.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: field.len(),
            });
        }
        let gram = base.metric().gram();
        let phi = gram.mul_vec(field)?;
        let mut gamma_hat = base.levi_civita();
        for i in 0..n {
            for j in 0..n {
                // −φ(e_j) e_i − φ(e_i) e_j + ⟨e_i, e_j⟩ E
                *gamma_hat.gamma_mut(i, j, i) -= &phi[j];
                *gamma_hat.gamma_mut(i, j, j) -= &phi[i];
                let g = &gram[(i, j)];
                if !g.is_zero() {
                    for (k, e) in field.iter().enumerate() {
                        *gamma_hat.gamma_mut(i, j, k) += g * e;
                    }
                }
            }
        }
        Ok(Self {
            base: base.clone(),
            field: field.to_vec(),
            phi,
            gamma_hat,
        })
    }

    pub fn base(&self) -> &MetricLieAlgebra {
        &self.base
    }

    pub fn field(&self) -> &[Scalar] {
        &self.field
    }

    /// Coefficients of `φ` in the dual basis, i.e. `G·E`.
    pub fn phi(&self) -> &[Scalar] {
        &self.phi
    }

    pub fn connection(&self) -> &Connection {
        &self.gamma_hat
    }

    /// `k̂(x,y) = ⟨R̂(x,y)y, x⟩ / (|x|²|y|² − ⟨x,y⟩²)`, exact.
    pub fn sectional(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        self.base.sectional_with(&self.gamma_hat, x, y)
    }

    /// Checks `⟨∇̂_{e_i}Y, Z⟩ + ⟨Y, ∇̂_{e_i}Z⟩ = −2φ(e_i)⟨Y,Z⟩` on all basis
    /// triples and returns the first failing `(i, j, k)`.
    pub fn nonmetricity_defect(&self) -> Option<(usize, usize, usize)> {
        let n = self.base.dim();
        let gram = self.base.metric().gram();
        let two = scalar::int(2);
        for i in 0..n {
            for j in 0..n {
                let dj = self.gamma_hat.apply_basis(i, j);
                let gdj = gram.mul_vec(&dj).expect("square");
                for k in 0..n {
                    let dk = self.gamma_hat.apply_basis(i, k);
                    let lhs = &gdj[k] + scalar::dot(gram.row(j), &dk);
                    let rhs = -(&two * &self.phi[i] * &gram[(j, k)]);
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

/// Exact W2 test: `⟨[E,Y],Y⟩ = 0` for every `Y ⊥ E`, via polarization on a
/// basis of `E^⊥`.
pub fn check_w2(m: &MetricLieAlgebra, e: &[Scalar]) -> Result<bool> {
    let n = m.dim();
    if e.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: e.len(),
        });
    }
    if scalar::is_zero_vector(e) {
        return Err(Error::ZeroField);
    }
    let gram = m.metric().gram();
    let perp = Subspace::span(n, [e.to_vec()]).orthogonal_complement(gram);
    let ad = m.algebra().ad_matrix(e)?;
    let images: Vec<Vector> = perp
        .basis()
        .iter()
        .map(|y| ad.mul_vec(y).expect("square"))
        .collect();
    let basis = perp.basis();
    for i in 0..basis.len() {
        for j in i..basis.len() {
            let s = m.inner(&images[i], &basis[j]) + m.inner(&images[j], &basis[i]);
            if !s.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `G·A + Aᵀ·G = 0`.
pub fn is_skew(gram: &Matrix, a: &Matrix) -> bool {
    let ga = gram.mul(a).expect("square");
    ga.add(&ga.transpose()).expect("square").is_zero()
}

/// Outcome of sampling Riemannian sectional curvature on planes through `E`.
#[derive(Debug, Clone, PartialEq)]
pub struct W1Summary {
    pub samples: usize,
    pub max_value: f64,
    pub non_positive: bool,
}

#[derive(Debug, Clone)]
pub struct SnpReport {
    pub solution_space: Subspace,
    /// The solution space lies in the center (every SNP field is central).
    pub is_central_only: bool,
    /// Each basis vector of the solution space is Levi-Civita parallel.
    pub parallel_verified: bool,
    /// Each basis vector of the solution space passes [`check_w2`].
    pub w2_verified: bool,
    /// The classification only applies to unimodular algebras.
    pub unimodular: bool,
    pub w1_samples: Option<W1Summary>,
}

/// Solves `⟨E, [g,g]⟩ = 0` and `G·ad_E + ad_Eᵀ·G = 0` for `E`, exactly.
pub fn snp_space(m: &MetricLieAlgebra) -> SnpReport {
    let n = m.dim();
    let alg = m.algebra();
    let gram = m.metric().gram();
    let mut rows: Vec<Vector> = Vec::new();
    for d in alg.derived_algebra().basis() {
        rows.push(gram.mul_vec(d).expect("square"));
    }
    // symmetric part of G·ad_{e_m}, one row per entry (i ≤ j), one column per m
    let sym: Vec<Matrix> = (0..n)
        .map(|mi| {
            let ga = gram.mul(&alg.ad_basis(mi)).expect("square");
            ga.add(&ga.transpose()).expect("square")
        })
        .collect();
    for i in 0..n {
        for j in i..n {
            let row: Vector = sym.iter().map(|s| s[(i, j)].clone()).collect();
            if !scalar::is_zero_vector(&row) {
                rows.push(row);
            }
        }
    }
    let solution_space = if rows.is_empty() {
        Subspace::full(n)
    } else {
        let system = Matrix::from_rows(rows).expect("rows have length n");
        Subspace::span(n, system.kernel())
    };
    let conn = m.levi_civita();
    let parallel_verified = solution_space
        .basis()
        .iter()
        .all(|e| is_parallel_for(&conn, e));
    let w2_verified = solution_space
        .basis()
        .iter()
        .all(|e| check_w2(m, e).unwrap_or(false));
    SnpReport {
        is_central_only: alg.center().contains(&solution_space),
        parallel_verified,
        w2_verified,
        unimodular: alg.is_unimodular(),
        solution_space,
        w1_samples: None,
    }
}

/// [`snp_space`] plus a W1 sample: Riemannian `K` on `samples` random planes
/// spanned by a solution basis vector and a random second vector.
pub fn snp_space_sampled(m: &MetricLieAlgebra, samples: usize, seed: u64) -> SnpReport {
    let mut report = snp_space(m);
    if report.solution_space.is_zero() || samples == 0 {
        return report;
    }
    let geo = FloatGeometry::new(m, &scalar::zero_vector(m.dim()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = report.solution_space.basis().to_vec();
    let mut max_value = f64::NEG_INFINITY;
    let mut taken = 0;
    while taken < samples {
        let e: Vec<f64> = basis[taken % basis.len()]
            .iter()
            .map(scalar::to_f64)
            .collect();
        let y = geo.random_vector(&mut rng);
        let Some(k) = geo.sectional(&e, &y, 0.0) else {
            continue;
        };
        max_value = max_value.max(k);
        taken += 1;
    }
    report.w1_samples = Some(W1Summary {
        samples,
        max_value,
        non_positive: max_value <= SCAN_TOLERANCE,
    });
    report
}

/// Result of the structure verifier for a non-central SNP field.
#[derive(Debug, Clone)]
pub struct StructureReport {
    /// `s = E^⊥`.
    pub complement: Subspace,
    pub is_ideal: bool,
    pub solvable: bool,
    pub unimodular: bool,
    /// `ad_E` restricted to `s` is skew-symmetric.
    pub skew_on_complement: bool,
    /// `[s,s] = [g,g]`.
    pub derived_equal: bool,
    /// `[g,g] ⊆ s`, the weaker statement that does hold whenever `E ⊥ [g,g]`.
    pub derived_contained: bool,
}

impl StructureReport {
    /// The four checks of the structure theorem: ideal, solvable and
    /// unimodular complement, skew action, equal derived algebras.
    pub fn all_passed(&self) -> bool {
        self.is_ideal
            && self.solvable
            && self.unimodular
            && self.skew_on_complement
            && self.derived_equal
    }
}

pub fn verify_structure(m: &MetricLieAlgebra, e: &[Scalar]) -> Result<StructureReport> {
    let n = m.dim();
    if e.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: e.len(),
        });
    }
    if scalar::is_zero_vector(e) {
        return Err(Error::ZeroField);
    }
    let alg = m.algebra();
    if alg.center().contains_vector(e) {
        return Err(Error::CentralField);
    }
    if !snp_space(m).solution_space.contains_vector(e) {
        return Err(Error::NotInSnpSpace);
    }
    let gram = m.metric().gram();
    let s = Subspace::span(n, [e.to_vec()]).orthogonal_complement(gram);
    let is_ideal = alg.is_ideal(&s);
    let (solvable, unimodular) = match alg.restrict(s.basis()) {
        Ok(sub) => (sub.series().is_solvable, sub.is_unimodular()),
        Err(_) => (false, false),
    };
    let ad = alg.ad_matrix(e)?;
    let skew_on_complement = s.basis().iter().all(|x| {
        let ax = ad.mul_vec(x).expect("square");
        s.basis().iter().all(|y| {
            let ay = ad.mul_vec(y).expect("square");
            (m.inner(&ax, y) + m.inner(x, &ay)).is_zero()
        })
    });
    let derived = alg.derived_algebra();
    Ok(StructureReport {
        derived_equal: alg.bracket_of(&s, &s) == derived,
        derived_contained: s.contains(&derived),
        complement: s,
        is_ideal,
        solvable,
        unimodular,
        skew_on_complement,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GammaVerdict {
    pub gamma: f64,
    pub max_value: f64,
    pub positive_count: usize,
    pub non_positive: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StretchScan {
    pub gamma_grid: Vec<f64>,
    /// Smallest grid value from which every later verdict is non-positive.
    pub gamma0: Option<f64>,
    pub plane_samples: usize,
    pub verdicts: Vec<GammaVerdict>,
}

impl StretchScan {
    pub fn all_non_positive(&self) -> bool {
        self.verdicts.iter().all(|v| v.non_positive)
    }
}

/// Samples `k̂` for the Weyl connections of `γE` over `samples` seeded random
/// planes, the same planes for every `γ`.
pub fn stretch_scan(
    m: &MetricLieAlgebra,
    e: &[Scalar],
    grid: &[f64],
    samples: usize,
    seed: u64,
) -> Result<StretchScan> {
    let n = m.dim();
    if e.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: e.len(),
        });
    }
    if scalar::is_zero_vector(e) {
        return Err(Error::ZeroField);
    }
    if grid.is_empty()
        || grid.iter().any(|g| !(g.is_finite() && *g > 0.0))
        || grid.windows(2).any(|w| w[0] >= w[1])
    {
        return Err(Error::Range(
            "gamma grid must be positive and strictly increasing".into(),
        ));
    }
    let geo = FloatGeometry::new(m, e);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut planes = Vec::with_capacity(samples);
    while planes.len() < samples {
        let x = geo.random_vector(&mut rng);
        let y = geo.random_vector(&mut rng);
        if geo.area(&x, &y) >= MIN_PLANE_AREA {
            planes.push((x, y));
        }
    }
    let verdicts: Vec<GammaVerdict> = grid
        .iter()
        .map(|&gamma| {
            let values: Vec<f64> = planes
                .iter()
                .filter_map(|(x, y)| geo.sectional(x, y, gamma))
                .collect();
            let max_value = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let positive_count = values.iter().filter(|&&v| v > SCAN_TOLERANCE).count();
            GammaVerdict {
                gamma,
                max_value,
                positive_count,
                non_positive: positive_count == 0,
            }
        })
        .collect();
    let first_stable = verdicts
        .iter()
        .rposition(|v| !v.non_positive)
        .map_or(0, |bad| bad + 1);
    let gamma0 = verdicts.get(first_stable).map(|v| v.gamma);
    Ok(StretchScan {
        gamma_grid: grid.to_vec(),
        gamma0,
        plane_samples: samples,
        verdicts,
    })
}

/// Floating-point copy of a metric algebra and a field, for sampling.
struct FloatGeometry {
    n: usize,
    constants: Vec<f64>,
    gram: Vec<f64>,
    levi_civita: Vec<f64>,
    field: Vec<f64>,
    phi: Vec<f64>,
}

impl FloatGeometry {
    fn new(m: &MetricLieAlgebra, e: &[Scalar]) -> Self {
        let n = m.dim();
        let conn = m.levi_civita();
        let mut levi_civita = vec![0.0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    levi_civita[(i * n + j) * n + k] = scalar::to_f64(conn.gamma(i, j, k));
                }
            }
        }
        let gram = m.metric().gram();
        let phi = gram.mul_vec(e).expect("square");
        Self {
            n,
            constants: m.algebra().constants().iter().map(scalar::to_f64).collect(),
            gram: gram.entries().iter().map(scalar::to_f64).collect(),
            levi_civita,
            field: e.iter().map(scalar::to_f64).collect(),
            phi: phi.iter().map(scalar::to_f64).collect(),
        }
    }

    fn random_vector(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        (0..self.n).map(|_| rng.gen_range(-1.0..=1.0)).collect()
    }

    fn inner(&self, x: &[f64], y: &[f64]) -> f64 {
        let n = self.n;
        let mut s = 0.0;
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                s += xi * self.gram[i * n + j] * yj;
            }
        }
        s
    }

    fn area(&self, x: &[f64], y: &[f64]) -> f64 {
        let xy = self.inner(x, y);
        self.inner(x, x) * self.inner(y, y) - xy * xy
    }

    fn bracket(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut out = vec![0.0; n];
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                let w = xi * yj;
                if w != 0.0 {
                    for (k, o) in out.iter_mut().enumerate() {
                        *o += w * self.constants[(i * n + j) * n + k];
                    }
                }
            }
        }
        out
    }

    /// `∇̂_x y` for the field `γE`.
    fn nabla(&self, x: &[f64], y: &[f64], gamma: f64) -> Vec<f64> {
        let n = self.n;
        let mut out = vec![0.0; n];
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                let w = xi * yj;
                if w != 0.0 {
                    for (k, o) in out.iter_mut().enumerate() {
                        *o += w * self.levi_civita[(i * n + j) * n + k];
                    }
                }
            }
        }
        if gamma != 0.0 {
            let phi_x: f64 = x.iter().zip(&self.phi).map(|(a, b)| a * b).sum();
            let phi_y: f64 = y.iter().zip(&self.phi).map(|(a, b)| a * b).sum();
            let xy = self.inner(x, y);
            for k in 0..n {
                out[k] += gamma * (-phi_y * x[k] - phi_x * y[k] + xy * self.field[k]);
            }
        }
        out
    }

    fn sectional(&self, x: &[f64], y: &[f64], gamma: f64) -> Option<f64> {
        let area = self.area(x, y);
        if area < MIN_PLANE_AREA {
            return None;
        }
        let a = self.nabla(x, &self.nabla(y, y, gamma), gamma);
        let b = self.nabla(y, &self.nabla(x, y, gamma), gamma);
        let c = self.nabla(&self.bracket(x, y), y, gamma);
        let r: Vec<f64> = (0..self.n).map(|k| a[k] - b[k] - c[k]).collect();
        Some(self.inner(&r, x) / area)
    }
}
