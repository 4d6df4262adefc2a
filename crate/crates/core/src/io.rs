//! JSON export and import of modules: shape, seed, relation pair, mode,
//! basis in canonical order and, optionally, the generator matrices.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::Generator;
use crate::module::{Mode, ModuleSpace};
use crate::relations::SuperRelationSet;
use crate::sparse::MatrixJson;
use crate::superalgebra::Shape;
use crate::tableau::Tableau;

/// Serialized module. Matrices are keyed by generator name (`e1`, `f2`,
/// `h3`, …) in sorted order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub shape: Shape,
    pub mode: Mode,
    pub seed: Tableau,
    pub relations: SuperRelationSet,
    pub finite: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<usize>,
    pub dimension: usize,
    pub basis: Vec<Tableau>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<BTreeMap<String, MatrixJson>>,
}

/// Captures a module, with generator matrices when `with_matrices` is set.
pub fn export_module(module: &ModuleSpace, with_matrices: bool) -> Result<ModuleJson> {
    let matrices = if with_matrices {
        let gens = module.generator_matrices()?;
        Some(gens.into_iter().map(|(g, m)| (g.to_string(), m.to_json())).collect())
    } else {
        None
    };
    Ok(ModuleJson {
        shape: module.shape(),
        mode: module.mode(),
        seed: module.seed().clone(),
        relations: module.relations().clone(),
        finite: module.is_finite(),
        radius: module.radius(),
        dimension: module.dim(),
        basis: module.basis().to_vec(),
        matrices,
    })
}

/// Rebuilds a module; every basis tableau is re-checked against the
/// membership predicate, and stored matrices must match the recomputed ones.
pub fn import_module(j: &ModuleJson) -> Result<ModuleSpace> {
    if j.relations.shape() != j.shape || j.seed.shape() != j.shape {
        return Err(Error::Shape("shape, seed and relations disagree".into()));
    }
    if j.dimension != j.basis.len() {
        return Err(Error::Parse(format!("dimension {} but {} basis tableaux", j.dimension, j.basis.len())));
    }
    let module = ModuleSpace::from_basis(&j.seed, &j.relations, j.mode, j.basis.clone(), j.finite, j.radius)?;
    if module.dim() != j.basis.len() || module.basis() != j.basis.as_slice() {
        return Err(Error::Parse("basis is not in canonical order or has duplicates".into()));
    }
    if let Some(stored) = &j.matrices {
        let fresh = module.generator_matrices()?;
        for g in Generator::all(j.shape) {
            let name = g.to_string();
            let m = stored.get(&name).ok_or_else(|| Error::Parse(format!("matrix {name} missing")))?;
            if m.to_matrix()? != fresh[&g] {
                return Err(Error::Parse(format!("matrix {name} does not match the action")));
            }
        }
    }
    Ok(module)
}

pub fn to_json_string<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_json(&text).map_err(|e| in_file(path, e))
}

/// Prefixes a parse error with the file it came from.
pub fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    }
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
