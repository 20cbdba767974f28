//! Bundle files: one JSON document holding the algebra, representation,
//! operator and deformation sections a command needs. Builtin bundles are
//! available as `builtin:<name>` (or `--fixture <name>`) without any file.

use serde::{Deserialize, Serialize};

use ltsys::fixtures;
use ltsys::json::{
    deformation_from_file, leibniz_from_file, leibniz_rep_from_file, lts_from_file,
    lts_rep_from_file, AlgebraFile, DeformationFile, OperatorFile, RepresentationFile,
};
use ltsys::json::operator_from_file;
use ltsys::rep::{adjoint_representation, leibniz_adjoint};
use ltsys::{QLeibnizAlgebra, QLeibnizRepresentation, QLts, QMatrix, QRepresentation};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RepSection {
    /// `"adjoint"`: derive the action table from the algebra section.
    Named(String),
    Table(RepresentationFile),
}

/// On-disk shape of a bundle; all sections optional.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct BundleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lts: Option<AlgebraFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leibniz: Option<AlgebraFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leibniz_representation: Option<RepSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<OperatorFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deformation: Option<DeformationFile>,
}

/// Fully resolved bundle.
#[derive(Debug, Clone, Default)]
pub struct Bundle {
    pub lts: Option<QLts>,
    pub leibniz: Option<QLeibnizAlgebra>,
    pub representation: Option<QRepresentation>,
    pub leibniz_representation: Option<QLeibnizRepresentation>,
    pub operator: Option<QMatrix>,
    pub deformation: Option<Vec<QMatrix>>,
}

pub const BUILTIN_NAMES: &[&str] = &[
    "b2",
    "b2-zero-op",
    "b2-id-op",
    "b2-family1",
    "b2-family2",
    "b2-deform-trivial",
    "b2-deform-blocked",
    "leibniz-a",
    "leibniz-b",
];

pub fn builtin(name: &str) -> Option<Bundle> {
    use ltsys::linalg::Matrix;

    let b2_base = || Bundle {
        lts: Some(fixtures::b2()),
        representation: Some(adjoint_representation(&fixtures::b2())),
        ..Bundle::default()
    };
    let with_op = |matrix: QMatrix| {
        let mut bundle = b2_base();
        bundle.operator = Some(matrix);
        bundle
    };
    let leibniz_base = |alg: QLeibnizAlgebra| Bundle {
        leibniz_representation: Some(leibniz_adjoint(&alg)),
        leibniz: Some(alg),
        operator: Some(Matrix::zeros(2, 2)),
        ..Bundle::default()
    };
    match name {
        "b2" => Some(b2_base()),
        "b2-zero-op" => Some(with_op(Matrix::zeros(2, 2))),
        "b2-id-op" => Some(with_op(Matrix::identity(2))),
        "b2-family1" => Some(with_op(fixtures::family1(1, 0))),
        "b2-family2" => Some(with_op(fixtures::family2(1))),
        "b2-deform-trivial" => {
            let mut bundle = with_op(fixtures::family1(1, 0));
            bundle.deformation = Some(vec![fixtures::family1(1, 0), Matrix::zeros(2, 2)]);
            Some(bundle)
        }
        // A valid order-1 series whose obstruction class is nontrivial.
        "b2-deform-blocked" => {
            let mut bundle = with_op(fixtures::family2(1));
            bundle.deformation = Some(vec![fixtures::family2(1), Matrix::identity(2)]);
            Some(bundle)
        }
        "leibniz-a" => Some(leibniz_base(fixtures::leibniz_e1e2())),
        "leibniz-b" => Some(leibniz_base(fixtures::leibniz_e2e2())),
        _ => None,
    }
}

fn resolve(file: BundleFile) -> Result<Bundle, CliError> {
    let parse = |e: ltsys::Error| CliError::usage(format!("invalid bundle: {e}"));
    let lts = file.lts.as_ref().map(lts_from_file).transpose().map_err(parse)?;
    let leibniz = file
        .leibniz
        .as_ref()
        .map(leibniz_from_file)
        .transpose()
        .map_err(parse)?;
    let representation = match &file.representation {
        None => None,
        Some(RepSection::Named(name)) if name == "adjoint" => {
            let lts = lts
                .as_ref()
                .ok_or_else(|| CliError::usage("adjoint representation needs an lts section"))?;
            Some(adjoint_representation(lts))
        }
        Some(RepSection::Named(other)) => {
            return Err(CliError::usage(format!(
                "unknown representation name {other:?} (only \"adjoint\")"
            )))
        }
        Some(RepSection::Table(table)) => Some(lts_rep_from_file(table).map_err(parse)?),
    };
    let leibniz_representation = match &file.leibniz_representation {
        None => None,
        Some(RepSection::Named(name)) if name == "adjoint" => {
            let alg = leibniz.as_ref().ok_or_else(|| {
                CliError::usage("adjoint representation needs a leibniz section")
            })?;
            Some(leibniz_adjoint(alg))
        }
        Some(RepSection::Named(other)) => {
            return Err(CliError::usage(format!(
                "unknown representation name {other:?} (only \"adjoint\")"
            )))
        }
        Some(RepSection::Table(table)) => Some(leibniz_rep_from_file(table).map_err(parse)?),
    };
    let operator = file
        .operator
        .as_ref()
        .map(operator_from_file)
        .transpose()
        .map_err(parse)?;
    let deformation = file
        .deformation
        .as_ref()
        .map(deformation_from_file)
        .transpose()
        .map_err(parse)?;
    Ok(Bundle {
        lts,
        leibniz,
        representation,
        leibniz_representation,
        operator,
        deformation,
    })
}

/// Load a bundle from `--fixture NAME`, a `builtin:NAME` path, or a JSON
/// file path.
pub fn load(input: Option<&str>, fixture: Option<&str>) -> Result<Bundle, CliError> {
    let builtin_err = |name: &str| {
        CliError::usage(format!(
            "unknown builtin {name:?}; available: {}",
            BUILTIN_NAMES.join(", ")
        ))
    };
    if let Some(name) = fixture {
        return builtin(name).ok_or_else(|| builtin_err(name));
    }
    let path = input.ok_or_else(|| CliError::usage("no input: pass a path or --fixture NAME"))?;
    if let Some(name) = path.strip_prefix("builtin:") {
        return builtin(name).ok_or_else(|| builtin_err(name));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))?;
    let file: BundleFile = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("cannot parse {path}: {e}")))?;
    resolve(file)
}
