//! Raw JSON shape of a spec file, before any cross-reference is resolved.
//!
//! Everything here is plain data: collections of named records whose fields
//! refer to one another by name.  [`super::resolve`] turns a document into
//! engine values; [`super::fixtures`] produces documents from scratch.  The
//! two directions are kept in one crate so the grammar can change in a
//! single place.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A whole spec file.  Empty collections are omitted on output so fixture
/// files stay readable.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDoc {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub categories: Vec<CategoryDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub functors: Vec<FunctorDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub natural_transformations: Vec<NatDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub monads: Vec<MonadDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub adjunctions: Vec<AdjunctionDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub one_cells: Vec<OneCellDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parametric_adjunctions: Vec<ParametricDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tasks: Vec<TaskDef>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDef {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDef>,
    /// Object id → identity morphism id.
    pub identities: BTreeMap<String, String>,
    pub composition: Vec<CompositeDef>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDef {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

/// One table entry: `g ∘ f = eq`, `g` applied after `f`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositeDef {
    pub g: String,
    pub f: String,
    pub eq: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDef {
    pub name: String,
    pub dom: String,
    pub cod: String,
    pub obj_map: BTreeMap<String, String>,
    pub mor_map: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatDef {
    pub name: String,
    /// Source functor name.
    pub source: String,
    /// Target functor name.
    pub target: String,
    /// Object id → component morphism id, in the functors' codomain.
    pub components: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonadDef {
    pub name: String,
    pub base: String,
    pub endo: String,
    pub mult: String,
    pub unit: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdjunctionDef {
    pub name: String,
    pub left: String,
    pub right: String,
    pub unit: String,
    pub counit: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellKind {
    Adj,
    Mnd,
}

/// A square between adjunctions (`kind: adj`) or a 1-cell of monads
/// (`kind: mnd`).  Adjunction squares name source and target adjunctions,
/// the top and bottom functors, and the structure transformation `lambda`;
/// monad cells name source and target monads, the carrier as `top`, and the
/// distributive law `psi`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OneCellDef {
    pub name: String,
    pub kind: CellKind,
    pub source: String,
    pub target: String,
    pub top: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParametricDef {
    pub name: String,
    /// Argument category name.
    pub base: String,
    /// Parameter category name.
    pub param: String,
    /// Forward functor `F` on base×param.
    #[serde(rename = "F")]
    pub forward: String,
    /// Backward functor `G` on op(param)×codomain.
    #[serde(rename = "G")]
    pub backward: String,
    pub per_parameter: Vec<PerParameterDef>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PerParameterDef {
    /// Parameter object id.
    pub param: String,
    /// Name of the slice adjunction at that parameter.
    pub adjunction: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskDef {
    pub name: String,
    pub op: String,
    /// Role → referenced name (or object id), fixed per operation.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub args: BTreeMap<String, String>,
}

/// The operations a task may request, one per engine entry point.
pub const TASK_OPS: &[&str] = &[
    "validate-category",
    "em",
    "phi",
    "psi",
    "hopf-adj",
    "hopf-mnd",
    "fusion",
    "adjoint-object",
    "dinatural-extend",
    "antipode",
    "compare-phi",
    "fusion-hopf",
    "lift",
];

/// Where in a document a problem sits, as a `/`-joined path such as
/// `categories/Bool4/morphisms/3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    pub code: SpecErrorCode,
    pub path: String,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecErrorCode {
    MalformedJson,
    SchemaViolation,
    DuplicateName,
    DanglingReference,
    /// A record could not be built within the configured size limits.
    ResourceLimit,
}

impl SpecErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            SpecErrorCode::MalformedJson => "malformed-json",
            SpecErrorCode::SchemaViolation => "schema-violation",
            SpecErrorCode::DuplicateName => "duplicate-name",
            SpecErrorCode::DanglingReference => "dangling-reference",
            SpecErrorCode::ResourceLimit => "resource-limit",
        }
    }
}

impl std::fmt::Display for SpecError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at {}: {}", self.code.as_str(), self.path, self.detail)
    }
}

impl SpecError {
    pub fn new(code: SpecErrorCode, path: impl Into<String>, detail: impl Into<String>) -> Self {
        SpecError {
            code,
            path: path.into(),
            detail: detail.into(),
        }
    }
}

/// Parse bytes into a document.  JSON syntax errors carry the line and
/// column; schema violations carry serde's own path description.
pub fn parse_spec_file(bytes: &[u8]) -> Result<SpecDoc, Vec<SpecError>> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        vec![SpecError::new(
            SpecErrorCode::MalformedJson,
            "",
            format!("input is not UTF-8: {e}"),
        )]
    })?;
    match serde_json::from_str::<SpecDoc>(text) {
        Ok(doc) => Ok(doc),
        Err(e) => {
            let code = if e.is_syntax() || e.is_eof() {
                SpecErrorCode::MalformedJson
            } else {
                SpecErrorCode::SchemaViolation
            };
            Err(vec![SpecError::new(
                code,
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )])
        }
    }
}

/// Serialize a document with stable key order, ending in a newline.
pub fn emit_spec_file(doc: &SpecDoc) -> Vec<u8> {
    let mut bytes = serde_json::to_vec_pretty(doc).expect("spec documents always serialize");
    bytes.push(b'\n');
    bytes
}
