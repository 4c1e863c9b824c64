//! JSON algebra documents.
//!
//! ```json
//! {
//!   "dim": 3,
//!   "brackets": [{ "i": 1, "j": 2, "k": 3, "value": "1" }],
//!   "gram": [["1", "0", "0"], ["0", "2", "0"], ["0", "0", "1/2"]],
//!   "labels": ["x", "y", "z"]
//! }
//! ```
//!
//! Indices are one-based and `value` is `c^k_ij` as a rational string; the
//! entry for `(j, i, k)` is implied. `gram` defaults to the identity and
//! `labels` is optional. Numbers in `value` or `gram` positions are rejected.

use lie_weyl::scalar::{self, Scalar};
use lie_weyl::{InnerProduct, LieAlgebra, Matrix, MetricLieAlgebra};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub dim: usize,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn parse_field(text: &str, field: impl FnOnce() -> String) -> Result<Scalar, CliError> {
    scalar::parse(text).map_err(|e| CliError::Parse(format!("{}: {e}", field())))
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("plain data serializes");
        out.push('\n');
        out
    }

    /// Builds and validates the metric algebra.
    pub fn load(&self) -> Result<MetricLieAlgebra, CliError> {
        let n = self.dim;
        if n == 0 {
            return Err(CliError::Parse("dim: must be positive".into()));
        }
        let mut constants = vec![scalar::zero(); n * n * n];
        for (idx, b) in self.brackets.iter().enumerate() {
            let at = || format!("brackets[{idx}]");
            for (name, v) in [("i", b.i), ("j", b.j), ("k", b.k)] {
                if v == 0 || v > n {
                    return Err(CliError::Parse(format!(
                        "{}.{name}: index {v} outside 1..={n}",
                        at()
                    )));
                }
            }
            if b.i == b.j {
                return Err(CliError::Parse(format!("{}: i and j must differ", at())));
            }
            let c = parse_field(&b.value, || format!("{}.value", at()))?;
            let (i, j, k) = (b.i - 1, b.j - 1, b.k - 1);
            let slot = (i * n + j) * n + k;
            let mirror = (j * n + i) * n + k;
            let existing = &constants[slot];
            if *existing != scalar::zero() && *existing != c {
                return Err(CliError::Validation(format!(
                    "{}: c^{}_({},{}) given twice with different values",
                    at(),
                    b.k,
                    b.i,
                    b.j
                )));
            }
            constants[mirror] = -c.clone();
            constants[slot] = c;
        }
        let algebra =
            LieAlgebra::checked(n, constants).map_err(|e| CliError::Validation(e.to_string()))?;
        let algebra = match &self.labels {
            Some(labels) => algebra
                .with_labels(labels.clone())
                .map_err(|e| CliError::Parse(format!("labels: {e}")))?,
            None => algebra,
        };
        let metric = match &self.gram {
            None => InnerProduct::identity(n),
            Some(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(CliError::Parse(format!("gram: expected a {n}×{n} matrix")));
                }
                let mut parsed = Vec::with_capacity(n);
                for (r, row) in rows.iter().enumerate() {
                    let mut out = Vec::with_capacity(n);
                    for (c, v) in row.iter().enumerate() {
                        out.push(parse_field(v, || format!("gram[{r}][{c}]"))?);
                    }
                    parsed.push(out);
                }
                let m = Matrix::from_rows(parsed).expect("checked shape");
                InnerProduct::new(m).map_err(|e| CliError::Validation(format!("gram: {e}")))?
            }
        };
        MetricLieAlgebra::new(algebra, metric).map_err(|e| CliError::Validation(e.to_string()))
    }

    /// The normalized document of a metric algebra: brackets with `i < j`,
    /// nonzero, sorted; canonical rationals; `gram` omitted for the identity.
    pub fn from_metric(m: &MetricLieAlgebra) -> Self {
        let alg = m.algebra();
        let brackets = alg
            .nonzero_brackets()
            .into_iter()
            .map(|(i, j, k, c)| BracketEntry {
                i: i + 1,
                j: j + 1,
                k: k + 1,
                value: scalar::format(&c),
            })
            .collect();
        let gram = m.metric().gram();
        let gram = (*gram != Matrix::identity(m.dim())).then(|| {
            gram.to_rows()
                .iter()
                .map(|r| r.iter().map(scalar::format).collect())
                .collect()
        });
        Self {
            dim: m.dim(),
            brackets,
            gram,
            labels: alg.labels().map(<[String]>::to_vec),
        }
    }

    /// Round trip through [`AlgebraDocument::load`] and back.
    pub fn normalized(&self) -> Result<Self, CliError> {
        Ok(Self::from_metric(&self.load()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(text: &str) -> AlgebraDocument {
        AlgebraDocument::from_json(text).unwrap()
    }

    #[test]
    fn heisenberg_loads() {
        let m = doc(r#"{"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "value": "1"}]}"#)
            .load()
            .unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(
            m.algebra().bracket_basis(1, 0),
            scalar::from_ints(&[0, 0, -1])
        );
    }

    #[test]
    fn floats_are_rejected() {
        let err = AlgebraDocument::from_json(
            r#"{"dim": 2, "brackets": [{"i": 1, "j": 2, "k": 2, "value": 1.5}]}"#,
        );
        assert!(matches!(err, Err(CliError::Parse(_))));
        let err =
            doc(r#"{"dim": 2, "brackets": [{"i": 1, "j": 2, "k": 2, "value": "1.5"}]}"#).load();
        assert!(matches!(err, Err(CliError::Parse(m)) if m.contains("brackets[0].value")));
    }

    #[test]
    fn jacobi_failure_names_the_triple() {
        // [e1,e2] = e3, [e1,e3] = e1: the Jacobi sum on (e1,e2,e3) is e3
        let err = doc(r#"{"dim": 3, "brackets": [
                {"i": 1, "j": 2, "k": 3, "value": "1"},
                {"i": 1, "j": 3, "k": 1, "value": "1"}]}"#)
        .load()
        .unwrap_err();
        match err {
            CliError::Validation(msg) => assert!(msg.contains("(e1, e2, e3)"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn conflicting_entries_are_rejected() {
        let err = doc(r#"{"dim": 3, "brackets": [
                {"i": 1, "j": 2, "k": 3, "value": "1"},
                {"i": 2, "j": 1, "k": 3, "value": "1"}]}"#)
        .load();
        assert!(matches!(err, Err(CliError::Validation(_))));
    }

    #[test]
    fn normalization_is_idempotent() {
        let d = doc(
            r#"{"dim": 3, "brackets": [{"i": 2, "j": 1, "k": 3, "value": "-2/4"}],
               "gram": [["2","0","0"],["0","1","0"],["0","0","1"]]}"#,
        );
        let n = d.normalized().unwrap();
        assert_eq!(
            n.brackets,
            vec![BracketEntry {
                i: 1,
                j: 2,
                k: 3,
                value: "1/2".into()
            }]
        );
        assert_eq!(n.normalized().unwrap().to_json(), n.to_json());
    }
}
