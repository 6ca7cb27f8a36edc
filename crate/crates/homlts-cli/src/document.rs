//! Problem documents: the JSON input format of the tool.
//!
//! Rationals are strings (`"p/q"` or `"p"`); structure constants are sparse
//! entry lists `[i, j, k, l, "p/q"]` with 0-based indices and antisymmetric
//! completion (listing only one orientation of `(i, j)` is allowed; explicit
//! conflicting mirrors are rejected). Operator grids use entries
//! `[i, j, row, col, "p/q"]`. Omitted entries are zero.

use homlts::{
    parse_rat, CompatibleHomLts, CompatibleRepresentation, HomSpace, Matrix, MultiLinearMap, Rat,
    ThetaGrid, TriBracket,
};
use serde::{Deserialize, Serialize};

pub type SparseEntry = (usize, usize, usize, usize, String);

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepSection {
    pub dim_v: usize,
    /// Dense `dim_v × dim_v` matrix of rational strings.
    pub beta: Vec<Vec<String>>,
    #[serde(default)]
    pub theta1: Vec<SparseEntry>,
    #[serde(default)]
    pub theta2: Vec<SparseEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PrimeSection {
    #[serde(default)]
    pub mu1: Vec<SparseEntry>,
    #[serde(default)]
    pub mu2: Vec<SparseEntry>,
    #[serde(default)]
    pub omega1: Vec<SparseEntry>,
    #[serde(default)]
    pub omega2: Vec<SparseEntry>,
}

/// A full problem document. Sections beyond the algebra itself are optional;
/// each command states which sections it needs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProblemDocument {
    #[serde(default)]
    pub meta: Meta,
    pub dim: usize,
    /// Dense `dim × dim` twist matrix.
    pub alpha: Vec<Vec<String>>,
    #[serde(default)]
    pub bracket1: Vec<SparseEntry>,
    #[serde(default)]
    pub bracket2: Vec<SparseEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<RepSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu1: Option<Vec<SparseEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu2: Option<Vec<SparseEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu1: Option<Vec<SparseEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu2: Option<Vec<SparseEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega1: Option<Vec<SparseEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega2: Option<Vec<SparseEntry>>,
    /// Second deformation for equivalence checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<PrimeSection>,
    /// Candidate Nijenhuis / equivalence operator, dense `dim × dim`.
    #[serde(default, skip_serializing_if = "Option::is_none", rename = "N")]
    pub n_operator: Option<Vec<Vec<String>>>,
    /// Degree-1 cochain `g → V`, dense `dim_v × dim` matrix.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<Vec<Vec<String>>>,
    /// Candidate homomorphism, dense matrix.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<Vec<String>>>,
}

/// Input errors carry a human-readable location.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for InputError {}

fn err<T>(msg: impl Into<String>) -> Result<T, InputError> {
    Err(InputError(msg.into()))
}

pub fn parse_document(bytes: &[u8]) -> Result<ProblemDocument, InputError> {
    serde_json::from_slice(bytes).map_err(|e| {
        InputError(format!(
            "document parse error at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

pub fn parse_matrix(
    what: &str,
    rows: &[Vec<String>],
    expect_rows: usize,
    expect_cols: usize,
) -> Result<Matrix, InputError> {
    if rows.len() != expect_rows || rows.iter().any(|r| r.len() != expect_cols) {
        return err(format!(
            "{what}: expected a {expect_rows}x{expect_cols} matrix"
        ));
    }
    let mut out = Vec::with_capacity(expect_rows);
    for (i, row) in rows.iter().enumerate() {
        let mut parsed = Vec::with_capacity(expect_cols);
        for (j, s) in row.iter().enumerate() {
            parsed.push(parse_rat(s).map_err(|e| InputError(format!("{what}[{i}][{j}]: {e}")))?);
        }
        out.push(parsed);
    }
    Ok(Matrix::from_rows(out))
}

type ParsedEntry = (usize, usize, usize, usize, Rat);

fn parse_entries(what: &str, entries: &[SparseEntry]) -> Result<Vec<ParsedEntry>, InputError> {
    entries
        .iter()
        .enumerate()
        .map(|(idx, (i, j, k, l, v))| {
            let r = parse_rat(v).map_err(|e| InputError(format!("{what} entry {idx}: {e}")))?;
            Ok((*i, *j, *k, *l, r))
        })
        .collect()
}

/// Sparse bracket entries into a validated antisymmetric tensor.
pub fn parse_bracket(
    what: &str,
    dim: usize,
    entries: &[SparseEntry],
) -> Result<TriBracket, InputError> {
    let parsed = parse_entries(what, entries)?;
    TriBracket::from_entries(dim, &parsed).map_err(|e| InputError(format!("{what}: {e}")))
}

/// Sparse `V`-valued 2-cochain entries `[i, j, k, out, value]`.
pub fn parse_two_cochain(
    what: &str,
    dim: usize,
    dim_v: usize,
    entries: &[SparseEntry],
) -> Result<MultiLinearMap, InputError> {
    let parsed = parse_entries(what, entries)?;
    let mut seen = std::collections::HashSet::new();
    let mut map = MultiLinearMap::zero(3, dim, dim_v);
    for (i, j, k, l, v) in &parsed {
        if *i >= dim || *j >= dim || *k >= dim {
            return err(format!("{what}: index out of range in ({i},{j},{k},{l})"));
        }
        if *l >= dim_v {
            return err(format!(
                "{what}: output index {l} out of range for dim {dim_v}"
            ));
        }
        if !seen.insert((*i, *j, *k, *l)) {
            return err(format!("{what}: duplicate entry ({i},{j},{k},{l})"));
        }
        if i == j && !num_traits::Zero::is_zero(v) {
            return err(format!(
                "{what}: nonzero entry with equal pair indices ({i},{j})"
            ));
        }
        map.set(&[*i, *j, *k], *l, v.clone());
    }
    // antisymmetric completion with conflict detection
    for (i, j, k, l, v) in &parsed {
        if i == j {
            continue;
        }
        if seen.contains(&(*j, *i, *k, *l)) {
            let mirror = map.get(&[*j, *i, *k], *l);
            if !num_traits::Zero::is_zero(&(mirror + v)) {
                return err(format!(
                    "{what}: entries ({i},{j},{k},{l}) and ({j},{i},{k},{l}) violate antisymmetry"
                ));
            }
        } else {
            map.set(&[*j, *i, *k], *l, -v.clone());
        }
    }
    Ok(map)
}

/// Theta grid entries `[i, j, row, col, value]`.
pub fn parse_theta(
    what: &str,
    dim: usize,
    dim_v: usize,
    entries: &[SparseEntry],
) -> Result<ThetaGrid, InputError> {
    let parsed = parse_entries(what, entries)?;
    let mut seen = std::collections::HashSet::new();
    let mut mats = vec![Matrix::zero(dim_v, dim_v); dim * dim];
    for (i, j, row, col, v) in parsed {
        if i >= dim || j >= dim {
            return err(format!("{what}: pair index out of range in ({i},{j})"));
        }
        if row >= dim_v || col >= dim_v {
            return err(format!(
                "{what}: operator index out of range in ({row},{col})"
            ));
        }
        if !seen.insert((i, j, row, col)) {
            return err(format!("{what}: duplicate entry ({i},{j},{row},{col})"));
        }
        mats[i * dim + j].set(row, col, v);
    }
    Ok(ThetaGrid::from_fn(dim, dim_v, |i, j| {
        mats[i * dim + j].clone()
    }))
}

/// The algebra part of a document as a compatible pair (not yet verified).
pub fn algebra_of(doc: &ProblemDocument) -> Result<CompatibleHomLts, InputError> {
    if doc.dim == 0 {
        return err("dim must be positive");
    }
    let alpha = parse_matrix("alpha", &doc.alpha, doc.dim, doc.dim)?;
    let space = HomSpace::new(doc.dim, alpha).map_err(|e| InputError(e.to_string()))?;
    let b1 = parse_bracket("bracket1", doc.dim, &doc.bracket1)?;
    let b2 = parse_bracket("bracket2", doc.dim, &doc.bracket2)?;
    CompatibleHomLts::new(space, b1, b2).map_err(|e| InputError(e.to_string()))
}

/// A section required by the current command.
pub fn required<'a>(
    name: &str,
    section: &'a Option<Vec<SparseEntry>>,
) -> Result<&'a [SparseEntry], InputError> {
    section
        .as_deref()
        .ok_or_else(|| InputError(format!("missing required section {name:?}")))
}

/// The representation section, or the adjoint representation when absent.
pub fn representation_of(
    doc: &ProblemDocument,
    algebra: &CompatibleHomLts,
) -> Result<CompatibleRepresentation, InputError> {
    match &doc.rep {
        None => Ok(homlts::adjoint_representation(algebra)),
        Some(rep) => {
            if rep.dim_v == 0 {
                return err("rep.dim_v must be positive");
            }
            let beta = parse_matrix("rep.beta", &rep.beta, rep.dim_v, rep.dim_v)?;
            let v = HomSpace::new(rep.dim_v, beta).map_err(|e| InputError(e.to_string()))?;
            let theta1 = parse_theta("rep.theta1", doc.dim, rep.dim_v, &rep.theta1)?;
            let theta2 = parse_theta("rep.theta2", doc.dim, rep.dim_v, &rep.theta2)?;
            CompatibleRepresentation::new(algebra.space().clone(), v, theta1, theta2)
                .map_err(|e| InputError(e.to_string()))
        }
    }
}

/// Serialize a tensor back to sparse entries (used when the tool emits
/// generated data such as Nijenhuis deformations).
pub fn entries_of_map(map: &MultiLinearMap) -> Vec<SparseEntry> {
    let d = map.dim_in();
    let dv = map.dim_out();
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..dv {
                    let v = map.get(&[i, j, k], l);
                    if !num_traits::Zero::is_zero(v) {
                        out.push((i, j, k, l, v.to_string()));
                    }
                }
            }
        }
    }
    out
}

pub fn entries_of_bracket(b: &TriBracket) -> Vec<SparseEntry> {
    b.entries()
        .into_iter()
        .map(|(i, j, k, l, v)| (i, j, k, l, v.to_string()))
        .collect()
}

pub fn matrix_to_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.at(r, c).to_string()).collect())
        .collect()
}
