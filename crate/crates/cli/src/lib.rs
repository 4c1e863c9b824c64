//! Command-line front end for `lie-weyl`: load algebra documents, run the
//! analyses and print either a text table or a JSON report.

pub mod document;
pub mod error;
mod render;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use lie_weyl::catalog::{self, Family};
use lie_weyl::constructors::{
    build_snp_extension, derivations, extension_directions, gt_algebra,
    is_characteristically_nilpotent, skew_derivations, GtTensor,
};
use lie_weyl::scalar::{self, Scalar};
use lie_weyl::weyl::{self, snp_space_sampled, stretch_scan, verify_structure};
use lie_weyl::{Matrix, MetricLieAlgebra, Subspace};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

pub use document::AlgebraDocument;
pub use error::{exit, CliError};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "lie-weyl",
    version,
    about = "Exact Lie algebra and Weyl connection analyses"
)]
pub struct Cli {
    /// Print the machine-readable JSON report instead of a text table.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validation, unimodularity, series, center and Vergne type.
    Analyze { file: PathBuf },
    /// Solution space of the SNP conditions, with parallel and W2 checks.
    Snp {
        file: PathBuf,
        /// Riemannian curvature samples through each solution (0 skips).
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Structure checks for a non-central SNP field.
    Structure {
        file: PathBuf,
        /// Comma-separated rationals, e.g. `0,0,0,1`.
        #[arg(long)]
        field: String,
    },
    /// Sweep the 4D catalog against the expected SNP solutions.
    Classify4d {
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Derivation algebra, or skew-symmetric derivations with `--skew`.
    Derivations {
        file: PathBuf,
        #[arg(long)]
        skew: bool,
    },
    /// Metabelian tensors in digit-triple notation.
    Gt {
        #[command(subcommand)]
        action: GtCommand,
    },
    /// Semidirect extension by commuting skew derivations.
    Extend {
        file: PathBuf,
        /// Matrix rows separated by `;`, entries by `,`. Repeat for each
        /// direction of the abelian factor; missing ones act trivially.
        #[arg(long = "derivation", required = true)]
        derivations: Vec<String>,
        #[arg(long)]
        adim: usize,
        /// Write the extension as an algebra document.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sampled Weyl sectional curvature along a γ grid.
    Scan {
        file: PathBuf,
        #[arg(long)]
        field: String,
        /// Comma-separated, positive and increasing.
        #[arg(long, default_value = "1,10,100")]
        grid: String,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a catalog family as an algebra document.
    Export {
        /// Family id, e.g. `nil_x_r` or `sol4_0`.
        family: String,
        /// `name=value`; unspecified parameters are drawn from `--seed`.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GtCommand {
    Parse {
        tensor: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// A finished command: the report and whether its result disagrees with
/// the expected one.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub mismatch: bool,
}

impl Outcome {
    fn new(command: &str, result: Value, mismatch: bool) -> Self {
        Self {
            report: json!({
                "schema_version": SCHEMA_VERSION,
                "command": command,
                "result": result,
            }),
            mismatch,
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.mismatch {
            exit::MISMATCH
        } else {
            exit::OK
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.report).expect("values serialize");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        render::table(&self.report)
    }
}

fn rat(x: &Scalar) -> Value {
    Value::String(scalar::format(x))
}

fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

fn subspace_json(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(|v| vector_json(v)).collect())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector_json(r)).collect())
}

pub fn parse_vector(text: &str, dim: usize) -> Result<Vec<Scalar>, CliError> {
    let v = text
        .split(',')
        .map(scalar::parse)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Parse(format!("vector {text:?}: {e}")))?;
    if v.len() != dim {
        return Err(CliError::Parse(format!(
            "vector {text:?} has {} entries, expected {dim}",
            v.len()
        )));
    }
    Ok(v)
}

pub fn parse_matrix(text: &str, dim: usize) -> Result<Matrix, CliError> {
    let rows = text
        .split(';')
        .map(|r| parse_vector(r, dim))
        .collect::<Result<Vec<_>, _>>()?;
    if rows.len() != dim {
        return Err(CliError::Parse(format!(
            "matrix {text:?} has {} rows, expected {dim}",
            rows.len()
        )));
    }
    Ok(Matrix::from_rows(rows).expect("rows checked"))
}

fn parse_grid(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Parse(format!("grid value {x:?} is not a number")))
        })
        .collect()
}

pub fn load_file(path: &Path) -> Result<MetricLieAlgebra, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    AlgebraDocument::from_json(&text)
        .and_then(|d| d.load())
        .map_err(|e| match e {
            CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
            CliError::Validation(m) => CliError::Validation(format!("{}: {m}", path.display())),
            other => other,
        })
}

fn write_document(path: &Path, doc: &AlgebraDocument) -> Result<(), CliError> {
    fs::write(path, doc.to_json())
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Analyze { file } => analyze(&load_file(file)?),
        Command::Snp {
            file,
            samples,
            seed,
        } => snp(&load_file(file)?, *samples, *seed),
        Command::Structure { file, field } => {
            let m = load_file(file)?;
            structure(&m, &parse_vector(field, m.dim())?)
        }
        Command::Classify4d { trials, seed } => Ok(classify(*trials, *seed)),
        Command::Derivations { file, skew } => derivation_report(&load_file(file)?, *skew),
        Command::Gt {
            action:
                GtCommand::Parse {
                    tensor,
                    m,
                    n,
                    output,
                },
        } => gt_parse(tensor, *m, *n, output.as_deref()),
        Command::Extend {
            file,
            derivations,
            adim,
            output,
        } => {
            let m = load_file(file)?;
            let family = derivations
                .iter()
                .map(|d| parse_matrix(d, m.dim()))
                .collect::<Result<Vec<_>, _>>()?;
            extend(&m, &family, *adim, output.as_deref())
        }
        Command::Scan {
            file,
            field,
            grid,
            samples,
            seed,
        } => {
            let m = load_file(file)?;
            scan(
                &m,
                &parse_vector(field, m.dim())?,
                &parse_grid(grid)?,
                *samples,
                *seed,
            )
        }
        Command::Export {
            family,
            params,
            seed,
            output,
        } => export(family, params, *seed, output.as_deref()),
    }
}

pub fn analyze(m: &MetricLieAlgebra) -> Result<Outcome, CliError> {
    let alg = m.algebra();
    let series = alg.series();
    let vergne = alg.vergne_type().ok().map(|v| json!(v.0));
    let result = json!({
        "dim": m.dim(),
        "valid": alg.validate().is_valid(),
        "unimodular": alg.is_unimodular(),
        "solvable": series.is_solvable,
        "nilpotent": series.is_nilpotent,
        "nilpotency_class": series.nilpotency_class,
        "derived_series_dims": series.derived_dims(),
        "lower_central_dims": series.lower_central_dims(),
        "center": subspace_json(&alg.center()),
        "vergne_type": vergne,
        "metabelian_signature": alg.metabelian_signature().map(|(a, b)| json!([a, b])),
    });
    Ok(Outcome::new("analyze", result, false))
}

pub fn snp(m: &MetricLieAlgebra, samples: usize, seed: u64) -> Result<Outcome, CliError> {
    let r = snp_space_sampled(m, samples, seed);
    let w1 = r.w1_samples.as_ref().map(|w| {
        json!({
            "samples": w.samples,
            "max_value": w.max_value,
            "non_positive": w.non_positive,
        })
    });
    let result = json!({
        "dimension": r.solution_space.dim(),
        "solution_basis": subspace_json(&r.solution_space),
        "central_only": r.is_central_only,
        "parallel_verified": r.parallel_verified,
        "w2_verified": r.w2_verified,
        "unimodular": r.unimodular,
        "w1": w1,
    });
    Ok(Outcome::new("snp", result, false))
}

pub fn structure(m: &MetricLieAlgebra, field: &[Scalar]) -> Result<Outcome, CliError> {
    let r = verify_structure(m, field)?;
    let result = json!({
        "field": vector_json(field),
        "complement": subspace_json(&r.complement),
        "checks": {
            "ideal": r.is_ideal,
            "solvable": r.solvable,
            "unimodular": r.unimodular,
            "skew_on_complement": r.skew_on_complement,
            "derived_equal": r.derived_equal,
        },
        "derived_contained": r.derived_contained,
        "all_passed": r.all_passed(),
    });
    Ok(Outcome::new("structure", result, !r.all_passed()))
}

pub fn classify(trials: usize, seed: u64) -> Outcome {
    let report = catalog::verify_classification(trials, seed);
    let mismatches: Vec<Value> = report
        .mismatches()
        .map(|e| {
            json!({
                "family": e.family.id(),
                "draw": e.draw.to_string(),
                "params": e.params.to_string(),
                "expected": subspace_json(&e.expected.space),
                "actual": subspace_json(&e.actual),
            })
        })
        .collect();
    let families: serde_json::Map<String, Value> = Family::ALL
        .iter()
        .map(|f| {
            let entries: Vec<_> = report.entries.iter().filter(|e| e.family == *f).collect();
            let nonzero = entries.iter().filter(|e| !e.actual.is_zero()).count();
            (
                f.id().to_string(),
                json!({
                    "draws": entries.len(),
                    "nonzero_solutions": nonzero,
                    "frame_inferred": f.frame_inferred(),
                }),
            )
        })
        .collect();
    let bad =
        !mismatches.is_empty() || report.parallel_violations() > 0 || report.w2_violations() > 0;
    let result = json!({
        "trials": trials,
        "seed": seed,
        "draws": report.entries.len(),
        "mismatch_count": mismatches.len(),
        "mismatches": mismatches,
        "parallel_violations": report.parallel_violations(),
        "w2_violations": report.w2_violations(),
        "structure_failures": report.structure_failures(),
        "families": families,
    });
    Outcome::new("classify4d", result, bad)
}

pub fn derivation_report(m: &MetricLieAlgebra, skew: bool) -> Result<Outcome, CliError> {
    let alg = m.algebra();
    let space = if skew {
        skew_derivations(alg, m.metric())?
    } else {
        derivations(alg)
    };
    let char_nil =
        (!skew && alg.series().is_nilpotent).then(|| is_characteristically_nilpotent(alg));
    let result = json!({
        "skew": skew,
        "dimension": space.dim(),
        "basis": space.basis().iter().map(matrix_json).collect::<Vec<_>>(),
        "characteristically_nilpotent": char_nil,
    });
    Ok(Outcome::new("derivations", result, false))
}

pub fn gt_parse(
    text: &str,
    m: usize,
    n: usize,
    output: Option<&Path>,
) -> Result<Outcome, CliError> {
    let t = GtTensor::parse(text, m, n)?;
    let g = gt_algebra(&t);
    if let Some(path) = output {
        let doc = AlgebraDocument::from_metric(&MetricLieAlgebra::with_identity(g.algebra.clone()));
        write_document(path, &doc)?;
    }
    let result = json!({
        "tensor": t.to_string(),
        "m": m,
        "n": n,
        "terms": t.terms().iter().map(|&(a, b, c)| json!([a, b, c])).collect::<Vec<_>>(),
        "term_count": t.terms().len(),
        "dim": g.algebra.dim(),
        "valid": g.algebra.validate().is_valid(),
        "surjective": g.surjective,
        "signature": [g.signature.0, g.signature.1],
    });
    Ok(Outcome::new("gt parse", result, false))
}

pub fn extend(
    m: &MetricLieAlgebra,
    family: &[Matrix],
    a_dim: usize,
    output: Option<&Path>,
) -> Result<Outcome, CliError> {
    let ext = build_snp_extension(m.algebra(), m.metric(), family, a_dim)?;
    let report = weyl::snp_space(&ext);
    let a = extension_directions(m.dim(), a_dim);
    let doc = AlgebraDocument::from_metric(&ext);
    if let Some(path) = output {
        write_document(path, &doc)?;
    }
    let contains = report.solution_space.contains(&a);
    let result = json!({
        "dim": ext.dim(),
        "extension_directions": subspace_json(&a),
        "solution_basis": subspace_json(&report.solution_space),
        "contains_extension": contains,
        "document": serde_json::to_value(&doc).expect("document serializes"),
    });
    Ok(Outcome::new("extend", result, !contains))
}

pub fn scan(
    m: &MetricLieAlgebra,
    field: &[Scalar],
    grid: &[f64],
    samples: usize,
    seed: u64,
) -> Result<Outcome, CliError> {
    let s = stretch_scan(m, field, grid, samples, seed)?;
    let verdicts: Vec<Value> = s
        .verdicts
        .iter()
        .map(|v| {
            json!({
                "gamma": v.gamma,
                "max_value": v.max_value,
                "positive_count": v.positive_count,
                "non_positive": v.non_positive,
            })
        })
        .collect();
    let result = json!({
        "field": vector_json(field),
        "samples": s.plane_samples,
        "seed": seed,
        "tolerance": weyl::SCAN_TOLERANCE,
        "gamma0": s.gamma0,
        "all_non_positive": s.all_non_positive(),
        "verdicts": verdicts,
    });
    Ok(Outcome::new("scan", result, false))
}

pub fn export(
    family: &str,
    assignments: &[String],
    seed: u64,
    output: Option<&Path>,
) -> Result<Outcome, CliError> {
    let fam = Family::from_id(family).ok_or_else(|| {
        let ids: Vec<_> = Family::ALL.iter().map(|f| f.id()).collect();
        CliError::Parse(format!(
            "unknown family {family:?}; known: {}",
            ids.join(", ")
        ))
    })?;
    let mut fixed: Vec<(&'static str, Scalar)> = Vec::new();
    for a in assignments {
        let (name, value) = a
            .split_once('=')
            .ok_or_else(|| CliError::Parse(format!("parameter {a:?} must look like name=value")))?;
        let spec = fam
            .params()
            .iter()
            .find(|s| s.name == name.trim())
            .ok_or_else(|| CliError::Validation(format!("{family} has no parameter {name:?}")))?;
        fixed.push((spec.name, scalar::parse(value).map_err(CliError::from)?));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = catalog::draw_params(fam, &fixed, &mut rng);
    let m = catalog::build(fam, &params)?;
    let doc = AlgebraDocument::from_metric(&m);
    if let Some(path) = output {
        write_document(path, &doc)?;
    }
    let result = json!({
        "family": fam.id(),
        "params": params.to_string(),
        "document": serde_json::to_value(&doc).expect("document serializes"),
    });
    Ok(Outcome::new("export", result, false))
}
