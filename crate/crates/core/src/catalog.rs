//! The eleven simply connected 4-dimensional unimodular solvable Lie groups,
//! their metrics written through Milnor bases, and the expected SNP answers.
//!
//! Brackets live in the standard basis `e1..e4`. A Milnor base is a list of
//! vectors `X_i` (columns of `B`, in `e`-coordinates) declared orthonormal,
//! which gives the Gram matrix `G = (B Bᵀ)⁻¹`.
//!
//! `nil_rtimes_s1` merges its two Milnor forms into one parameter set: the
//! second form is the slice `b33 = 1, b13 = 0`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::metric::{InnerProduct, MetricLieAlgebra};
use crate::scalar::{self, int, Scalar};
use crate::weyl::{snp_space, verify_structure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    R4,
    NilxR,
    Nil4,
    Sol4Mn,
    Sol3xR,
    Sol40,
    Sol40Prime,
    Sol4Mu,
    IsomR2xR,
    Sol41,
    NilRtimesS1,
}

/// Admissible range of one parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamRange {
    Any,
    Positive,
    NonNegative,
    /// `0 < x < 1`
    OpenUnit,
    /// `0 < x ≤ 1`
    HalfOpenUnit,
    /// `x > 1`
    AboveOne,
}

impl ParamRange {
    pub fn contains(self, x: &Scalar) -> bool {
        match self {
            ParamRange::Any => true,
            ParamRange::Positive => x.is_positive(),
            ParamRange::NonNegative => !x.is_negative(),
            ParamRange::OpenUnit => x.is_positive() && *x < Scalar::one(),
            ParamRange::HalfOpenUnit => x.is_positive() && *x <= Scalar::one(),
            ParamRange::AboveOne => *x > Scalar::one(),
        }
    }

    fn describe(self) -> &'static str {
        match self {
            ParamRange::Any => "any rational",
            ParamRange::Positive => "> 0",
            ParamRange::NonNegative => ">= 0",
            ParamRange::OpenUnit => "in (0, 1)",
            ParamRange::HalfOpenUnit => "in (0, 1]",
            ParamRange::AboveOne => "> 1",
        }
    }

    /// Numerators and denominators uniform in `[1, 20]`.
    fn draw(self, rng: &mut ChaCha8Rng) -> Scalar {
        let p = rng.gen_range(1..=20);
        let q = rng.gen_range(1..=20);
        match self {
            ParamRange::Any => {
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                scalar::ratio(sign * p, q)
            }
            ParamRange::Positive | ParamRange::NonNegative => scalar::ratio(p, q),
            ParamRange::OpenUnit | ParamRange::HalfOpenUnit => {
                let q = rng.gen_range(2..=20);
                scalar::ratio(rng.gen_range(1..q), q)
            }
            ParamRange::AboveOne => int(1) + scalar::ratio(p, q),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub range: ParamRange,
}

use ParamRange::{AboveOne, Any, HalfOpenUnit, NonNegative, OpenUnit, Positive};

impl Family {
    pub const ALL: [Family; 11] = [
        Family::R4,
        Family::NilxR,
        Family::Nil4,
        Family::Sol4Mn,
        Family::Sol3xR,
        Family::Sol40,
        Family::Sol40Prime,
        Family::Sol4Mu,
        Family::IsomR2xR,
        Family::Sol41,
        Family::NilRtimesS1,
    ];

    /// Stable identifier used on the command line and in reports.
    pub fn id(self) -> &'static str {
        match self {
            Family::R4 => "r4",
            Family::NilxR => "nil_x_r",
            Family::Nil4 => "nil4",
            Family::Sol4Mn => "sol4_mn",
            Family::Sol3xR => "sol3_x_r",
            Family::Sol40 => "sol4_0",
            Family::Sol40Prime => "sol4_0_prime",
            Family::Sol4Mu => "sol4_mu",
            Family::IsomR2xR => "isom_r2_x_r",
            Family::Sol41 => "sol4_1",
            Family::NilRtimesS1 => "nil_rtimes_s1",
        }
    }

    pub fn from_id(id: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.id() == id)
    }

    pub fn params(self) -> &'static [ParamSpec] {
        match self {
            Family::R4 => &[],
            Family::NilxR => &[ParamSpec {
                name: "b11",
                range: Positive,
            }],
            Family::Nil4 => &[
                ParamSpec {
                    name: "b11",
                    range: Positive,
                },
                ParamSpec {
                    name: "b12",
                    range: NonNegative,
                },
                ParamSpec {
                    name: "b22",
                    range: Positive,
                },
            ],
            Family::Sol4Mn => &[
                ParamSpec {
                    name: "lambda",
                    range: AboveOne,
                },
                ParamSpec {
                    name: "b12",
                    range: NonNegative,
                },
                ParamSpec {
                    name: "b13",
                    range: Any,
                },
                ParamSpec {
                    name: "b23",
                    range: NonNegative,
                },
                ParamSpec {
                    name: "b44",
                    range: Positive,
                },
            ],
            Family::Sol3xR => &[
                ParamSpec {
                    name: "b12",
                    range: NonNegative,
                },
                ParamSpec {
                    name: "b13",
                    range: Any,
                },
                ParamSpec {
                    name: "b23",
                    range: NonNegative,
                },
                ParamSpec {
                    name: "b44",
                    range: Positive,
                },
            ],
            Family::Sol41 => &[
                ParamSpec {
                    name: "b11",
                    range: Positive,
                },
                ParamSpec {
                    name: "b12",
                    range: NonNegative,
                },
                ParamSpec {
                    name: "b13",
                    range: Any,
                },
                ParamSpec {
                    name: "b23",
                    range: NonNegative,
                },
                ParamSpec {
                    name: "b44",
                    range: Positive,
                },
            ],
            Family::Sol40 => &[
                ParamSpec {
                    name: "b13",
                    range: NonNegative,
                },
                ParamSpec {
                    name: "b44",
                    range: Positive,
                },
            ],
            Family::Sol40Prime => &[
                ParamSpec {
                    name: "b13",
                    range: NonNegative,
                },
                ParamSpec {
                    name: "b22",
                    range: Positive,
                },
                ParamSpec {
                    name: "b23",
                    range: Any,
                },
                ParamSpec {
                    name: "b44",
                    range: Positive,
                },
            ],
            Family::Sol4Mu => &[
                ParamSpec {
                    name: "mu",
                    range: Positive,
                },
                ParamSpec {
                    name: "b12",
                    range: Any,
                },
                ParamSpec {
                    name: "b13",
                    range: Any,
                },
                ParamSpec {
                    name: "b22",
                    range: Positive,
                },
                ParamSpec {
                    name: "b23",
                    range: Any,
                },
                ParamSpec {
                    name: "b44",
                    range: Positive,
                },
            ],
            Family::IsomR2xR => &[
                ParamSpec {
                    name: "b13",
                    range: NonNegative,
                },
                ParamSpec {
                    name: "b22",
                    range: OpenUnit,
                },
                ParamSpec {
                    name: "b23",
                    range: NonNegative,
                },
                ParamSpec {
                    name: "b44",
                    range: Positive,
                },
            ],
            Family::NilRtimesS1 => &[
                ParamSpec {
                    name: "b11",
                    range: Positive,
                },
                ParamSpec {
                    name: "b12",
                    range: Any,
                },
                ParamSpec {
                    name: "b13",
                    range: Any,
                },
                ParamSpec {
                    name: "b33",
                    range: HalfOpenUnit,
                },
                ParamSpec {
                    name: "b44",
                    range: Positive,
                },
            ],
        }
    }

    /// Families whose expected answer is inferred from the theorem's list
    /// rather than worked out case by case, or whose Milnor base is not printed.
    pub fn frame_inferred(self) -> bool {
        matches!(self, Family::Sol4Mn | Family::Sol4Mu)
    }

    /// Brackets in the standard basis as `(i, j, k, c^k_ij)`, zero-based.
    fn brackets(self, p: &Params) -> Vec<(usize, usize, usize, Scalar)> {
        match self {
            Family::R4 => vec![],
            Family::NilxR => vec![(2, 3, 0, int(1))],
            Family::Nil4 => vec![(1, 3, 0, int(1)), (2, 3, 1, int(1))],
            Family::Sol4Mn => {
                let l = p.get("lambda").clone();
                let e3 = -(int(1) + &l);
                vec![(3, 0, 0, l), (3, 1, 1, int(1)), (3, 2, 2, e3)]
            }
            Family::Sol3xR => vec![(3, 1, 1, int(1)), (3, 2, 2, int(-1))],
            Family::Sol40 => vec![(3, 0, 0, int(1)), (3, 1, 1, int(1)), (3, 2, 2, int(-2))],
            Family::Sol40Prime => vec![
                (3, 0, 0, int(1)),
                (3, 1, 0, int(1)),
                (3, 1, 1, int(1)),
                (3, 2, 2, int(-2)),
            ],
            Family::Sol4Mu => {
                // derivative at t = 0 of the rotation-plus-scaling one-parameter group
                let mu = p.get("mu").clone();
                vec![
                    (3, 0, 0, mu.clone()),
                    (3, 0, 1, int(-1)),
                    (3, 1, 0, int(1)),
                    (3, 1, 1, mu.clone()),
                    (3, 2, 2, int(-2) * mu),
                ]
            }
            Family::IsomR2xR => vec![(3, 0, 1, int(-1)), (3, 1, 0, int(1))],
            Family::Sol41 => vec![(1, 2, 0, int(1)), (3, 1, 1, int(1)), (3, 2, 2, int(-1))],
            Family::NilRtimesS1 => {
                vec![(1, 2, 0, int(1)), (3, 1, 2, int(-1)), (3, 2, 1, int(1))]
            }
        }
    }

    /// Milnor base vectors in `e`-coordinates, one column per `X_i`.
    pub fn milnor_frame(self, p: &Params) -> Matrix {
        let g = |name: &str| p.get(name).clone();
        let (one, zero) = (int(1), int(0));
        let cols: [[Scalar; 4]; 4] = match self {
            Family::R4 => return Matrix::identity(4),
            Family::NilxR => [
                [g("b11"), zero.clone(), zero.clone(), zero.clone()],
                [zero.clone(), one.clone(), zero.clone(), zero.clone()],
                [zero.clone(), zero.clone(), one.clone(), zero.clone()],
                [zero.clone(), zero.clone(), zero.clone(), one.clone()],
            ],
            // printed as "b12 e2 + b22 e2"; the e1 term is the intended reading
            Family::Nil4 => [
                [g("b11"), zero.clone(), zero.clone(), zero.clone()],
                [g("b12"), g("b22"), zero.clone(), zero.clone()],
                [zero.clone(), zero.clone(), one.clone(), zero.clone()],
                [zero.clone(), zero.clone(), zero.clone(), one.clone()],
            ],
            Family::Sol4Mn | Family::Sol3xR | Family::Sol41 => {
                let b11 = if self == Family::Sol41 {
                    g("b11")
                } else {
                    one.clone()
                };
                [
                    [b11, zero.clone(), zero.clone(), zero.clone()],
                    [g("b12"), one.clone(), zero.clone(), zero.clone()],
                    [g("b13"), g("b23"), one.clone(), zero.clone()],
                    [zero.clone(), zero.clone(), zero.clone(), g("b44")],
                ]
            }
            Family::Sol40 => [
                [one.clone(), zero.clone(), zero.clone(), zero.clone()],
                [zero.clone(), one.clone(), zero.clone(), zero.clone()],
                [g("b13"), zero.clone(), one.clone(), zero.clone()],
                [zero.clone(), zero.clone(), zero.clone(), g("b44")],
            ],
            Family::Sol40Prime | Family::IsomR2xR => [
                [one.clone(), zero.clone(), zero.clone(), zero.clone()],
                [zero.clone(), g("b22"), zero.clone(), zero.clone()],
                [g("b13"), g("b23"), one.clone(), zero.clone()],
                [zero.clone(), zero.clone(), zero.clone(), g("b44")],
            ],
            Family::Sol4Mu => [
                [one.clone(), zero.clone(), zero.clone(), zero.clone()],
                [g("b12"), g("b22"), zero.clone(), zero.clone()],
                [g("b13"), g("b23"), one.clone(), zero.clone()],
                [zero.clone(), zero.clone(), zero.clone(), g("b44")],
            ],
            Family::NilRtimesS1 => [
                [g("b11"), zero.clone(), zero.clone(), zero.clone()],
                [g("b12"), one.clone(), zero.clone(), zero.clone()],
                [g("b13"), zero.clone(), g("b33"), zero.clone()],
                [zero.clone(), zero.clone(), zero.clone(), g("b44")],
            ],
        };
        let cols: Vec<Vec<Scalar>> = cols.into_iter().map(Vec::from).collect();
        Matrix::from_columns(4, &cols).expect("four columns of length four")
    }

    /// Constraints coupling several parameters.
    fn joint_check(self, p: &Params) -> Result<()> {
        if self != Family::NilRtimesS1 {
            return Ok(());
        }
        let (b12, b13, b33) = (p.get("b12"), p.get("b13"), p.get("b33"));
        let ok = if b33.is_one() {
            b13.is_zero() && !b12.is_negative()
        } else {
            !(b12 * b13).is_negative()
        };
        if ok {
            Ok(())
        } else {
            Err(self.inadmissible(
                "need b12*b13 >= 0 when b33 < 1, and b13 = 0, b12 >= 0 when b33 = 1".into(),
            ))
        }
    }

    fn inadmissible(self, reason: String) -> Error {
        Error::InadmissibleParams {
            family: self.id().into(),
            reason,
        }
    }

    /// Parameter overrides that switch or stress the expected answer. Each
    /// boundary draw fixes these and samples the rest.
    fn boundary_overrides(self) -> Vec<Vec<(&'static str, Scalar)>> {
        let z = || int(0);
        match self {
            Family::R4 => vec![],
            Family::NilxR => vec![vec![("b11", int(1))]],
            Family::Nil4 => vec![vec![("b12", z())]],
            Family::Sol4Mn | Family::Sol41 => vec![
                vec![("b12", z()), ("b13", z()), ("b23", z())],
                vec![("b12", z()), ("b13", z())],
            ],
            Family::Sol3xR => vec![
                vec![("b12", z()), ("b13", z())],
                vec![("b12", z()), ("b13", z()), ("b23", z())],
                vec![("b12", z())],
                vec![("b13", z())],
            ],
            Family::Sol40 => vec![vec![("b13", z())]],
            Family::Sol40Prime => vec![vec![("b13", z()), ("b23", z())], vec![("b13", z())]],
            Family::Sol4Mu => vec![vec![("b12", z()), ("b13", z()), ("b23", z())]],
            Family::IsomR2xR => vec![
                vec![("b13", z()), ("b23", z())],
                vec![("b13", z())],
                vec![("b23", z())],
            ],
            Family::NilRtimesS1 => vec![
                vec![("b33", int(1)), ("b13", z()), ("b12", z())],
                vec![("b33", int(1)), ("b13", z())],
                vec![("b12", z()), ("b13", z())],
                vec![("b12", z())],
            ],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Named parameter values for one family, in the family's declared order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    values: Vec<(&'static str, Scalar)>,
}

impl Params {
    /// Checks names, ranges and joint constraints.
    pub fn new<'a>(
        family: Family,
        values: impl IntoIterator<Item = (&'a str, Scalar)>,
    ) -> Result<Params> {
        let mut given: Vec<(&'a str, Scalar)> = values.into_iter().collect();
        let mut ordered = Vec::new();
        for spec in family.params() {
            let pos = given
                .iter()
                .position(|(n, _)| *n == spec.name)
                .ok_or_else(|| family.inadmissible(format!("missing parameter {}", spec.name)))?;
            let (_, value) = given.remove(pos);
            if !spec.range.contains(&value) {
                return Err(family.inadmissible(format!(
                    "{} = {} must be {}",
                    spec.name,
                    scalar::format(&value),
                    spec.range.describe()
                )));
            }
            ordered.push((spec.name, value));
        }
        if let Some((name, _)) = given.first() {
            return Err(family.inadmissible(format!("unknown or repeated parameter {name}")));
        }
        let params = Params { values: ordered };
        family.joint_check(&params)?;
        Ok(params)
    }

    /// Panics on an unknown name; callers hold validated params.
    pub fn get(&self, name: &str) -> &Scalar {
        &self
            .values
            .iter()
            .find(|(n, _)| *n == name)
            .unwrap_or_else(|| panic!("no parameter {name}"))
            .1
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Scalar)> {
        self.values.iter().map(|(n, v)| (*n, v))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|(n, v)| format!("{n}={}", scalar::format(v)))
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// The algebra in its standard basis with the metric of the family's Milnor base.
pub fn build(family: Family, params: &Params) -> Result<MetricLieAlgebra> {
    let algebra = LieAlgebra::from_brackets(4, family.brackets(params))?
        .with_labels((1..=4).map(|i| format!("e{i}")).collect())?;
    let metric = InnerProduct::from_orthonormal_frame(&family.milnor_frame(params))?;
    MetricLieAlgebra::new(algebra, metric)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedSnp {
    pub family: Family,
    pub space: Subspace,
    pub description: &'static str,
    pub frame_inferred: bool,
}

/// The answer listed by the classification theorem for these parameters.
pub fn expected_snp(family: Family, params: &Params) -> ExpectedSnp {
    let e = |i| scalar::unit(4, i);
    let zero = Subspace::zero(4);
    let is0 = |name| params.get(name).is_zero();
    let (space, description) = match family {
        Family::R4 => (Subspace::full(4), "all of R^4"),
        Family::NilxR => (Subspace::span(4, [e(1)]), "span(e2)"),
        Family::IsomR2xR if is0("b13") && is0("b23") => (Subspace::span(4, [e(2)]), "span(e3)"),
        Family::NilRtimesS1 if params.get("b33").is_one() && is0("b12") => {
            (Subspace::span(4, [e(3)]), "span(e4)")
        }
        Family::Sol3xR if is0("b12") && is0("b13") => (Subspace::span(4, [e(0)]), "span(e1)"),
        _ => (zero, "zero"),
    };
    ExpectedSnp {
        family,
        space,
        description,
        frame_inferred: family.frame_inferred(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DrawKind {
    Random(usize),
    Boundary(usize),
}

impl fmt::Display for DrawKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DrawKind::Random(i) => write!(f, "random#{i}"),
            DrawKind::Boundary(i) => write!(f, "boundary#{i}"),
        }
    }
}

/// One parameter draw of the sweep.
#[derive(Debug, Clone)]
pub struct SweepEntry {
    pub family: Family,
    pub draw: DrawKind,
    pub params: Params,
    pub expected: ExpectedSnp,
    pub actual: Subspace,
    pub matches: bool,
    pub parallel_ok: bool,
    pub w2_ok: bool,
    /// `None` when every solution is central; otherwise whether the structure
    /// verifier passed all four checks on each non-central basis vector.
    pub structure_ok: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub trials: usize,
    pub seed: u64,
    pub entries: Vec<SweepEntry>,
}

impl SweepReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &SweepEntry> {
        self.entries.iter().filter(|e| !e.matches)
    }

    pub fn parallel_violations(&self) -> usize {
        self.entries.iter().filter(|e| !e.parallel_ok).count()
    }

    pub fn w2_violations(&self) -> usize {
        self.entries.iter().filter(|e| !e.w2_ok).count()
    }

    pub fn structure_failures(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.structure_ok == Some(false))
            .count()
    }
}

/// Compares an already built metric algebra with the expected answer for
/// `family` at `params`.
pub fn check_draw(
    family: Family,
    draw: DrawKind,
    params: &Params,
    m: &MetricLieAlgebra,
) -> SweepEntry {
    let report = snp_space(m);
    let expected = expected_snp(family, params);
    let center = m.algebra().center();
    let non_central: Vec<_> = report
        .solution_space
        .basis()
        .iter()
        .filter(|e| !center.contains_vector(e))
        .cloned()
        .collect();
    let structure_ok = (!non_central.is_empty()).then(|| {
        non_central
            .iter()
            .all(|e| verify_structure(m, e).is_ok_and(|r| r.all_passed()))
    });
    SweepEntry {
        family,
        draw,
        params: params.clone(),
        matches: report.solution_space == expected.space,
        expected,
        actual: report.solution_space,
        parallel_ok: report.parallel_verified,
        w2_ok: report.w2_verified,
        structure_ok,
    }
}

/// Draws admissible parameters; `overrides` are fixed, the rest sampled.
pub fn draw_params(
    family: Family,
    overrides: &[(&'static str, Scalar)],
    rng: &mut ChaCha8Rng,
) -> Params {
    let mut values: Vec<(&str, Scalar)> = family
        .params()
        .iter()
        .map(|s| {
            let fixed = overrides.iter().find(|(n, _)| *n == s.name);
            (
                s.name,
                fixed.map_or_else(|| s.range.draw(rng), |(_, v)| v.clone()),
            )
        })
        .collect();
    if family == Family::NilRtimesS1 {
        // first form: b12 and b13 share a sign; second form: b12 >= 0
        if values[3].1.is_one() {
            values[1].1 = values[1].1.abs();
        } else if (&values[1].1 * &values[2].1).is_negative() {
            values[2].1 = -values[2].1.clone();
        }
    }
    Params::new(family, values).expect("drawn parameters are admissible")
}

/// The classification sweep: `trials` random draws per family plus every
/// boundary draw, each compared exactly against [`expected_snp`].
pub fn verify_classification(trials: usize, seed: u64) -> SweepReport {
    let mut entries = Vec::new();
    for (index, family) in Family::ALL.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index as u64);
        let mut draws: Vec<(DrawKind, Vec<(&'static str, Scalar)>)> = (0..trials)
            .map(|t| (DrawKind::Random(t), Vec::new()))
            .collect();
        for (b, o) in family.boundary_overrides().into_iter().enumerate() {
            draws.push((DrawKind::Boundary(b), o));
        }
        if family.params().is_empty() {
            draws.truncate(1);
        }
        for (draw, overrides) in draws {
            let params = draw_params(family, &overrides, &mut rng);
            let m = build(family, &params).expect("admissible draws build");
            entries.push(check_draw(family, draw, &params, &m));
        }
    }
    SweepReport {
        trials,
        seed,
        entries,
    }
}
