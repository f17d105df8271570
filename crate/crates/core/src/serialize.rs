//! JSON interchange for fields, codes, arcs, isometries, and reports.
//!
//! File shapes:
//!
//! - field: `{"p": .., "e": .., "modulus": [c_0, .., c_e]}`, with the
//!   `modulus` key omitted for prime fields;
//! - code: `{"field": .., "n": .., "r": .., "generator": [[..], ..]}`;
//! - arc: `{"field": .., "m": .., "r": .., "subspaces": [[[..], ..], ..]}`;
//! - isometry: `{"field": .., "r": .., "sigma": [..], "blocks": [..]}`,
//!   where `sigma` is 1-based and output block `i` reads input block
//!   `sigma[i]`;
//! - weight distribution: `{"q", "n", "r", "k", "counts"}` with counts as
//!   decimal strings, so arbitrarily large values survive the trip;
//! - classification and density summaries are write-only reports.
//!
//! A prime-field element is a bare integer in `[0, p)`; an extension
//! element is its coefficient vector `[c_0, .., c_{e-1}]`,
//! low-degree-first.  Matrices are arrays of row arrays.  Writing and
//! re-reading any value reproduces it bit-exactly: files store the
//! generator (or basis) actually supplied, not a normal form.

use num::BigUint;
use serde::{Deserialize, Serialize};

use crate::bounds::DensityReport;
use crate::code::{Isometry, LinearCode};
use crate::error::{Error, Result};
use crate::fqmat::MatrixFq;
use crate::gf::{FieldElement, FieldSpec};
use crate::pseudoarc::PseudoArc;
use crate::qmds::Classification;
use crate::wdist::WeightDistribution;

/// One serialized field element: a bare integer over a prime field, a
/// coefficient vector over an extension.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum ElemRepr {
    Scalar(u64),
    Coeffs(Vec<u64>),
}

#[derive(Serialize, Deserialize)]
struct FieldFile {
    p: u64,
    e: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    modulus: Option<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct CodeFile {
    field: FieldFile,
    n: usize,
    r: usize,
    generator: Vec<Vec<ElemRepr>>,
}

#[derive(Serialize, Deserialize)]
struct ArcFile {
    field: FieldFile,
    m: usize,
    r: usize,
    subspaces: Vec<Vec<Vec<ElemRepr>>>,
}

#[derive(Serialize, Deserialize)]
struct IsometryFile {
    field: FieldFile,
    r: usize,
    sigma: Vec<usize>,
    blocks: Vec<Vec<Vec<ElemRepr>>>,
}

#[derive(Serialize, Deserialize)]
struct DistributionFile {
    q: u64,
    n: usize,
    r: usize,
    k: usize,
    counts: Vec<String>,
}

#[derive(Serialize)]
struct ClassificationFile {
    d: usize,
    d_perp: usize,
    class: &'static str,
}

#[derive(Serialize)]
struct DensityFile {
    q: u64,
    n: usize,
    r: usize,
    k: usize,
    trials: u64,
    seed: u64,
    dually_count: u64,
    empirical: String,
    theoretical_bound: String,
    bound_vacuous: bool,
}

fn encode_element(field: &FieldSpec, a: FieldElement) -> ElemRepr {
    if field.degree() == 1 {
        ElemRepr::Scalar(a.index())
    } else {
        ElemRepr::Coeffs(field.coeffs(a))
    }
}

fn decode_element(field: &FieldSpec, repr: &ElemRepr) -> Result<FieldElement> {
    match repr {
        ElemRepr::Scalar(v) => {
            if field.degree() == 1 {
                field.element(*v)
            } else {
                Err(Error::Json(format!(
                    "bare integer {v} where a degree-{} coefficient vector was expected",
                    field.degree()
                )))
            }
        }
        ElemRepr::Coeffs(cs) => field.from_coeffs(cs),
    }
}

fn encode_matrix(m: &MatrixFq) -> Vec<Vec<ElemRepr>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|&a| encode_element(m.field(), a)).collect())
        .collect()
}

fn decode_matrix(field: &FieldSpec, rows: &[Vec<ElemRepr>]) -> Result<MatrixFq> {
    let converted = rows
        .iter()
        .map(|row| row.iter().map(|e| decode_element(field, e)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    MatrixFq::from_rows(field.clone(), converted)
}

fn field_to_file(field: &FieldSpec) -> FieldFile {
    FieldFile {
        p: field.characteristic(),
        e: field.degree(),
        modulus: field.modulus().map(<[u64]>::to_vec),
    }
}

fn field_from_file(file: &FieldFile) -> Result<FieldSpec> {
    FieldSpec::new(file.p, file.e, file.modulus.clone())
}

/// Renders a field as JSON; the `modulus` key is omitted for prime fields.
pub fn field_to_json(field: &FieldSpec) -> Result<String> {
    Ok(serde_json::to_string_pretty(&field_to_file(field))?)
}

/// Renders a bare matrix as a JSON array of row arrays (no field header).
pub fn matrix_to_json(m: &MatrixFq) -> Result<String> {
    Ok(serde_json::to_string_pretty(&encode_matrix(m))?)
}

/// Parses a bare matrix (array of row arrays) whose entries live in
/// `field`.
pub fn matrix_from_json(field: &FieldSpec, text: &str) -> Result<MatrixFq> {
    let rows: Vec<Vec<ElemRepr>> = serde_json::from_str(text)?;
    decode_matrix(field, &rows)
}

/// Parses a field from JSON.  A missing `modulus` on an extension field
/// selects the canonical modulus.
pub fn field_from_json(text: &str) -> Result<FieldSpec> {
    field_from_file(&serde_json::from_str(text)?)
}

/// Renders a code as JSON, preserving the exact generator supplied at
/// construction.
pub fn code_to_json(code: &LinearCode) -> Result<String> {
    let file = CodeFile {
        field: field_to_file(code.field()),
        n: code.n(),
        r: code.r(),
        generator: encode_matrix(code.generator()),
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

/// Parses a code from JSON.  An empty generator array denotes the zero
/// code.
pub fn code_from_json(text: &str) -> Result<LinearCode> {
    let file: CodeFile = serde_json::from_str(text)?;
    let field = field_from_file(&file.field)?;
    if file.generator.is_empty() {
        return LinearCode::zero_code(field, file.n, file.r);
    }
    let generator = decode_matrix(&field, &file.generator)?;
    LinearCode::from_generator(file.n, file.r, generator)
}

/// Renders an arc as JSON, one basis matrix per member subspace.
pub fn arc_to_json(arc: &PseudoArc) -> Result<String> {
    let file = ArcFile {
        field: field_to_file(arc.field()),
        m: arc.m(),
        r: arc.r(),
        subspaces: arc.subspaces().iter().map(encode_matrix).collect(),
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

/// Parses an arc from JSON, checking the declared `m` and `r` against the
/// basis matrices.
pub fn arc_from_json(text: &str) -> Result<PseudoArc> {
    let file: ArcFile = serde_json::from_str(text)?;
    let field = field_from_file(&file.field)?;
    let subspaces = file
        .subspaces
        .iter()
        .map(|s| decode_matrix(&field, s))
        .collect::<Result<Vec<_>>>()?;
    let arc = PseudoArc::new(subspaces)?;
    if arc.m() != file.m || arc.r() != file.r {
        return Err(Error::Json(format!(
            "declared shape m={}, r={} but basis matrices are {}x{}",
            file.m,
            file.r,
            arc.m(),
            arc.r()
        )));
    }
    Ok(arc)
}

/// Renders an isometry as JSON with a 1-based `sigma`.
pub fn isometry_to_json(iso: &Isometry) -> Result<String> {
    let file = IsometryFile {
        field: field_to_file(iso.field()),
        r: iso.r(),
        sigma: iso.sigma().iter().map(|&s| s + 1).collect(),
        blocks: iso.blocks().iter().map(encode_matrix).collect(),
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

/// Parses an isometry from JSON, converting the 1-based `sigma` back to
/// internal 0-based block indices.
pub fn isometry_from_json(text: &str) -> Result<Isometry> {
    let file: IsometryFile = serde_json::from_str(text)?;
    let field = field_from_file(&file.field)?;
    let sigma = file
        .sigma
        .iter()
        .map(|&s| {
            s.checked_sub(1).ok_or_else(|| {
                Error::Json("sigma entries are 1-based and must be at least 1".into())
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let blocks = file
        .blocks
        .iter()
        .map(|b| decode_matrix(&field, b))
        .collect::<Result<Vec<_>>>()?;
    let iso = Isometry::new(sigma, blocks)?;
    if iso.r() != file.r {
        return Err(Error::Json(format!(
            "declared block width r={} but blocks are {}x{}",
            file.r,
            iso.r(),
            iso.r()
        )));
    }
    Ok(iso)
}

/// Renders a weight distribution as JSON with counts as decimal strings.
pub fn distribution_to_json(dist: &WeightDistribution) -> Result<String> {
    let file = DistributionFile {
        q: dist.q(),
        n: dist.n(),
        r: dist.r(),
        k: dist.k(),
        counts: dist.counts().iter().map(BigUint::to_string).collect(),
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

/// Parses a weight distribution from JSON, revalidating length and total
/// mass.
pub fn distribution_from_json(text: &str) -> Result<WeightDistribution> {
    let file: DistributionFile = serde_json::from_str(text)?;
    let counts = file
        .counts
        .iter()
        .map(|s| {
            s.parse::<BigUint>()
                .map_err(|e| Error::Json(format!("bad count {s:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    WeightDistribution::new(file.q, file.n, file.r, file.k, counts)
}

/// Renders a classification as the summary `{"d", "d_perp", "class"}`.
pub fn classification_to_json(c: &Classification) -> Result<String> {
    let file = ClassificationFile { d: c.d, d_perp: c.d_perp, class: c.label() };
    Ok(serde_json::to_string_pretty(&file)?)
}

/// Renders a density experiment as a JSON summary with exact rational
/// strings for the empirical rate and the guaranteed bound.
pub fn density_to_json(rep: &DensityReport) -> Result<String> {
    let file = DensityFile {
        q: rep.q,
        n: rep.n,
        r: rep.r,
        k: rep.k,
        trials: rep.trials,
        seed: rep.seed,
        dually_count: rep.dually_count,
        empirical: rep.empirical.to_string(),
        theoretical_bound: rep.lower_bound.to_string(),
        bound_vacuous: rep.bound_vacuous,
    };
    Ok(serde_json::to_string_pretty(&file)?)
}
