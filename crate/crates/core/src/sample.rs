//! Seeded random instances: small rational matrices, positive definite Gram
//! matrices and valid Lie algebras of low dimension.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{self, Family};
use crate::constructors::{gt_algebra, GtTensor};
use crate::lie::{semidirect_sum, LieAlgebra};
use crate::linalg::Matrix;
use crate::metric::{InnerProduct, MetricLieAlgebra};
use crate::scalar::{int, ratio, Scalar, Vector};

/// Entries `p/q` with `|p| ≤ bound`, `1 ≤ q ≤ 3`.
pub fn rational(rng: &mut ChaCha8Rng, bound: i64) -> Scalar {
    ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

pub fn vector(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vector {
    (0..n).map(|_| rational(rng, bound)).collect()
}

/// A nonzero vector.
pub fn nonzero_vector(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vector {
    loop {
        let v = vector(rng, n, bound);
        if v.iter().any(|x| *x != int(0)) {
            return v;
        }
    }
}

pub fn matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    Matrix::from_rows((0..n).map(|_| vector(rng, n, bound)).collect()).expect("square")
}

/// `L·U` with unit diagonals, so the determinant is 1.
pub fn unimodular_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = int(rng.gen_range(-1..=1));
            upper[(j, i)] = int(rng.gen_range(-1..=1));
        }
    }
    lower.mul(&upper).expect("square")
}

/// `L Lᵀ` for lower triangular `L` with positive diagonal.
pub fn spd(rng: &mut ChaCha8Rng, n: usize) -> InnerProduct {
    let mut l = Matrix::zeros(n, n);
    for i in 0..n {
        l[(i, i)] = ratio(rng.gen_range(1..=3), rng.gen_range(1..=2));
        for j in 0..i {
            l[(i, j)] = rational(rng, 1);
        }
    }
    InnerProduct::new(l.mul(&l.transpose()).expect("square")).expect("L Lᵀ is positive definite")
}

/// A valid Lie algebra of dimension in `2..=max_dim` (`max_dim ≥ 2`), drawn
/// from several constructions and then written in a random unimodular basis.
pub fn algebra(rng: &mut ChaCha8Rng, max_dim: usize) -> LieAlgebra {
    let base = match rng.gen_range(0..4) {
        0 => {
            let k = rng.gen_range(1..max_dim);
            let a = LieAlgebra::abelian(1).expect("dim 1");
            let n = LieAlgebra::abelian(k).expect("k ≥ 1");
            semidirect_sum(&a, &n, &[matrix(rng, k, 2)]).expect("abelian n accepts any map")
        }
        1 if max_dim >= 3 => {
            let m = rng.gen_range(2..max_dim);
            let n = rng.gen_range(1..=max_dim - m);
            let mut terms = Vec::new();
            let mut pairs: Vec<(usize, usize)> = (1..=m)
                .flat_map(|a| (a + 1..=m).map(move |b| (a, b)))
                .collect();
            pairs.shuffle(rng);
            for (a, b) in pairs.into_iter().take(rng.gen_range(1..=3)) {
                terms.push((a, b, rng.gen_range(1..=n)));
            }
            gt_algebra(&GtTensor::new(m, n, terms).expect("distinct pairs")).algebra
        }
        2 if max_dim >= 4 => {
            let family = *Family::ALL.choose(rng).expect("nonempty");
            let params = catalog::draw_params(family, &[], rng);
            catalog::build(family, &params)
                .expect("admissible")
                .algebra()
                .clone()
        }
        _ => {
            let d = rng.gen_range(2..=max_dim);
            LieAlgebra::abelian(d).expect("d ≥ 2")
        }
    };
    let change = unimodular_matrix(rng, base.dim());
    base.change_basis(&change).expect("unimodular change")
}

/// [`algebra`] with an [`spd`] metric.
pub fn metric_algebra(rng: &mut ChaCha8Rng, max_dim: usize) -> MetricLieAlgebra {
    let alg = algebra(rng, max_dim);
    let g = spd(rng, alg.dim());
    MetricLieAlgebra::new(alg, g).expect("dimensions agree")
}
