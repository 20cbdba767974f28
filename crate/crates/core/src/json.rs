//! JSON interchange for algebras, representations, operators and
//! deformation series.
//!
//! Rationals serialize as strings `"p/q"` (or `"p"` when the denominator is
//! one) in every format. Basis indices are 1-based on disk and in rendered
//! reports; the sparse product lists only carry nonzero entries.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::lts::{LeibnizAlgebra, Lts};
use crate::rep::{LeibnizRepresentation, Representation, Slot};
use crate::report::Report;
use crate::{Q, QLeibnizAlgebra, QLts, QMatrix};

pub fn parse_rational(s: &str) -> Result<Q> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim())
        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
    let den = BigInt::from_str(den.trim())
        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
    if den == BigInt::from(0) {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Q::new(num, den))
}

pub fn format_rational(q: &Q) -> String {
    q.to_string()
}

fn parse_matrix_rows(rows: &[Vec<String>]) -> Result<QMatrix> {
    let parsed: Result<Vec<Vec<Q>>> = rows
        .iter()
        .map(|row| row.iter().map(|s| parse_rational(s)).collect())
        .collect();
    Matrix::from_rows(parsed?)
}

fn matrix_rows(m: &QMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format_rational(m.at(i, j))).collect())
        .collect()
}

/// Sparse algebra file: `{"kind":"lts"|"leibniz","dim":n,"basis":[..],
/// "products":[{"args":[i,j,k],"value":[[l,"p/q"],..]},..]}` with 1-based
/// indices and unlisted products zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub kind: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProductEntry {
    pub args: Vec<usize>,
    pub value: Vec<(usize, String)>,
}

fn check_index(idx: usize, dim: usize) -> Result<usize> {
    if idx == 0 || idx > dim {
        return Err(Error::Parse(format!(
            "basis index {idx} outside 1..={dim}"
        )));
    }
    Ok(idx - 1)
}

pub fn lts_from_file(file: &AlgebraFile) -> Result<QLts> {
    if file.kind != "lts" {
        return Err(Error::Parse(format!("expected kind \"lts\", got {:?}", file.kind)));
    }
    let mut products = Vec::new();
    for entry in &file.products {
        if entry.args.len() != 3 {
            return Err(Error::Parse("triple products take 3 arguments".into()));
        }
        let i = check_index(entry.args[0], file.dim)?;
        let j = check_index(entry.args[1], file.dim)?;
        let k = check_index(entry.args[2], file.dim)?;
        let mut value = Vec::new();
        for (l, coeff) in &entry.value {
            value.push((check_index(*l, file.dim)?, parse_rational(coeff)?));
        }
        products.push((i, j, k, value));
    }
    let lts = Lts::from_products(file.dim, &products)?;
    Ok(match &file.basis {
        Some(labels) if labels.len() == file.dim => lts.with_labels(labels.clone()),
        _ => lts,
    })
}

pub fn lts_to_file(lts: &QLts) -> AlgebraFile {
    AlgebraFile {
        kind: "lts".into(),
        dim: lts.dim(),
        basis: lts.labels().map(<[String]>::to_vec),
        products: lts
            .sparse_products()
            .into_iter()
            .map(|(i, j, k, value)| ProductEntry {
                args: vec![i + 1, j + 1, k + 1],
                value: value
                    .into_iter()
                    .map(|(l, c)| (l + 1, format_rational(&c)))
                    .collect(),
            })
            .collect(),
    }
}

pub fn leibniz_from_file(file: &AlgebraFile) -> Result<QLeibnizAlgebra> {
    if file.kind != "leibniz" {
        return Err(Error::Parse(format!(
            "expected kind \"leibniz\", got {:?}",
            file.kind
        )));
    }
    let mut products = Vec::new();
    for entry in &file.products {
        if entry.args.len() != 2 {
            return Err(Error::Parse("brackets take 2 arguments".into()));
        }
        let i = check_index(entry.args[0], file.dim)?;
        let j = check_index(entry.args[1], file.dim)?;
        let mut value = Vec::new();
        for (l, coeff) in &entry.value {
            value.push((check_index(*l, file.dim)?, parse_rational(coeff)?));
        }
        products.push((i, j, value));
    }
    let alg = LeibnizAlgebra::from_products(file.dim, &products)?;
    Ok(match &file.basis {
        Some(labels) if labels.len() == file.dim => alg.with_labels(labels.clone()),
        _ => alg,
    })
}

pub fn leibniz_to_file(alg: &QLeibnizAlgebra) -> AlgebraFile {
    AlgebraFile {
        kind: "leibniz".into(),
        dim: alg.dim(),
        basis: alg.labels().map(<[String]>::to_vec),
        products: alg
            .sparse_products()
            .into_iter()
            .map(|(i, j, value)| ProductEntry {
                args: vec![i + 1, j + 1],
                value: value
                    .into_iter()
                    .map(|(l, c)| (l + 1, format_rational(&c)))
                    .collect(),
            })
            .collect(),
    }
}

/// Representation file: `{"kind":"lts-rep"|"leibniz-rep","algebra-dim":n,
/// "module-dim":m,"l":[{"args":[i,j],"matrix":[[..]]},..],"m":[..],"r":[..]}`.
/// Leibniz representations use single-index `args` and omit `"m"`. Unlisted
/// pairs act as zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub kind: String,
    #[serde(rename = "algebra-dim")]
    pub algebra_dim: usize,
    #[serde(rename = "module-dim")]
    pub module_dim: usize,
    #[serde(default)]
    pub l: Vec<MatrixEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<MatrixEntry>>,
    #[serde(default)]
    pub r: Vec<MatrixEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixEntry {
    pub args: Vec<usize>,
    pub matrix: Vec<Vec<String>>,
}

pub fn lts_rep_from_file(file: &RepresentationFile) -> Result<Representation<Q>> {
    if file.kind != "lts-rep" {
        return Err(Error::Parse(format!(
            "expected kind \"lts-rep\", got {:?}",
            file.kind
        )));
    }
    let n = file.algebra_dim;
    let m = file.module_dim;
    let mut rep = Representation::zero(n, m);
    let m_entries = file.m.as_deref().unwrap_or(&[]);
    for (slot, entries) in [
        (Slot::L, file.l.as_slice()),
        (Slot::M, m_entries),
        (Slot::R, file.r.as_slice()),
    ] {
        for entry in entries {
            if entry.args.len() != 2 {
                return Err(Error::Parse("action maps take 2 arguments".into()));
            }
            let a = check_index(entry.args[0], n)?;
            let b = check_index(entry.args[1], n)?;
            let mat = parse_matrix_rows(&entry.matrix)?;
            if mat.rows() != m || mat.cols() != m {
                return Err(Error::Parse(format!(
                    "action matrix at ({},{}) is not {m}x{m}",
                    entry.args[0], entry.args[1]
                )));
            }
            rep.set_basis(slot, a, b, mat);
        }
    }
    Ok(rep)
}

pub fn lts_rep_to_file(rep: &Representation<Q>) -> RepresentationFile {
    let n = rep.algebra_dim();
    let entries = |slot: Slot| -> Vec<MatrixEntry> {
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let mat = rep.basis(slot, a, b);
                if !mat.is_zero() {
                    out.push(MatrixEntry {
                        args: vec![a + 1, b + 1],
                        matrix: matrix_rows(mat),
                    });
                }
            }
        }
        out
    };
    RepresentationFile {
        kind: "lts-rep".into(),
        algebra_dim: n,
        module_dim: rep.module_dim(),
        l: entries(Slot::L),
        m: Some(entries(Slot::M)),
        r: entries(Slot::R),
    }
}

pub fn leibniz_rep_from_file(file: &RepresentationFile) -> Result<LeibnizRepresentation<Q>> {
    if file.kind != "leibniz-rep" {
        return Err(Error::Parse(format!(
            "expected kind \"leibniz-rep\", got {:?}",
            file.kind
        )));
    }
    let n = file.algebra_dim;
    let m = file.module_dim;
    let mut rep = LeibnizRepresentation::zero(n, m);
    for (is_left, entries) in [(true, file.l.as_slice()), (false, file.r.as_slice())] {
        for entry in entries {
            if entry.args.len() != 1 {
                return Err(Error::Parse(
                    "Leibniz action maps take 1 argument".into(),
                ));
            }
            let a = check_index(entry.args[0], n)?;
            let mat = parse_matrix_rows(&entry.matrix)?;
            if mat.rows() != m || mat.cols() != m {
                return Err(Error::Parse(format!(
                    "action matrix at ({}) is not {m}x{m}",
                    entry.args[0]
                )));
            }
            if is_left {
                rep.set_rho_l(a, mat);
            } else {
                rep.set_rho_r(a, mat);
            }
        }
    }
    Ok(rep)
}

pub fn leibniz_rep_to_file(rep: &LeibnizRepresentation<Q>) -> RepresentationFile {
    let n = rep.algebra_dim();
    let collect = |left: bool| -> Vec<MatrixEntry> {
        (0..n)
            .filter_map(|a| {
                let mat = if left {
                    rep.rho_l_basis(a)
                } else {
                    rep.rho_r_basis(a)
                };
                (!mat.is_zero()).then(|| MatrixEntry {
                    args: vec![a + 1],
                    matrix: matrix_rows(mat),
                })
            })
            .collect()
    };
    RepresentationFile {
        kind: "leibniz-rep".into(),
        algebra_dim: n,
        module_dim: rep.module_dim(),
        l: collect(true),
        m: None,
        r: collect(false),
    }
}

/// Operator file: `{"kind":"operator","matrix":[["p/q",..],..]}`; the matrix
/// is `algebra-dim x module-dim`, columns are images of module basis
/// vectors.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperatorFile {
    pub kind: String,
    pub matrix: Vec<Vec<String>>,
}

pub fn operator_from_file(file: &OperatorFile) -> Result<QMatrix> {
    if file.kind != "operator" {
        return Err(Error::Parse(format!(
            "expected kind \"operator\", got {:?}",
            file.kind
        )));
    }
    parse_matrix_rows(&file.matrix)
}

pub fn operator_to_file(matrix: &QMatrix) -> OperatorFile {
    OperatorFile {
        kind: "operator".into(),
        matrix: matrix_rows(matrix),
    }
}

/// Deformation file: `{"kind":"deformation","coefficients":[matrix,..]}`,
/// the full coefficient list starting with the base operator.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeformationFile {
    pub kind: String,
    pub coefficients: Vec<Vec<Vec<String>>>,
}

pub fn deformation_from_file(file: &DeformationFile) -> Result<Vec<QMatrix>> {
    if file.kind != "deformation" {
        return Err(Error::Parse(format!(
            "expected kind \"deformation\", got {:?}",
            file.kind
        )));
    }
    file.coefficients
        .iter()
        .map(|rows| parse_matrix_rows(rows))
        .collect()
}

pub fn deformation_to_file(coeffs: &[QMatrix]) -> DeformationFile {
    DeformationFile {
        kind: "deformation".into(),
        coefficients: coeffs.iter().map(matrix_rows).collect(),
    }
}

/// Render a verification report as JSON, 1-based indices and exact
/// residuals.
pub fn report_to_value(report: &Report<Q>) -> Value {
    json!({
        "ok": report.ok(),
        "witnesses": report
            .violations
            .iter()
            .map(|v| {
                json!({
                    "identity": v.identity,
                    "args": v.args.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "residual": v.residual.iter().map(format_rational).collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>(),
    })
}
