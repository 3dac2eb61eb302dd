//! JSON file formats for pencils and canonical forms.

use serde::{Deserialize, Serialize};

use super::{CanonicalBlock, CanonicalForm, FactoredForm, Pencil};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar};

/// `{"m": int, "n": int, "A": [[scalar…]…], "B": [[…]…]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PencilFile {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<Scalar>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<Scalar>>,
}

/// `{"kind": "L"|"LT"|"J"|"N", "order": int, "mu": scalar}`; `mu` only for J.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockRecord {
    pub kind: String,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Scalar>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactoredFormFile {
    pub blocks: Vec<BlockRecord>,
    #[serde(rename = "E", default, skip_serializing_if = "Option::is_none")]
    pub e: Option<Vec<Vec<Scalar>>>,
    #[serde(rename = "F", default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<Vec<Scalar>>>,
}

fn checked_matrix(rows: Vec<Vec<Scalar>>, m: usize, n: usize, name: &str) -> Result<Matrix> {
    if rows.len() != m || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("matrix {name} must be {m}x{n}")));
    }
    Matrix::from_rows(rows)
}

impl TryFrom<PencilFile> for Pencil {
    type Error = Error;

    fn try_from(file: PencilFile) -> Result<Pencil> {
        if file.m == 0 || file.n == 0 {
            return Err(Error::Parse("pencil dimensions must be positive".into()));
        }
        let a = checked_matrix(file.a, file.m, file.n, "A")?;
        let b = checked_matrix(file.b, file.m, file.n, "B")?;
        Pencil::new(a, b)
    }
}

impl From<&Pencil> for PencilFile {
    fn from(p: &Pencil) -> Self {
        PencilFile { m: p.m(), n: p.n(), a: p.a().to_rows(), b: p.b().to_rows() }
    }
}

impl Pencil {
    pub fn from_json_str(s: &str) -> Result<Pencil> {
        serde_json::from_str::<PencilFile>(s)?.try_into()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PencilFile::from(self)).expect("pencil serializes")
    }
}

impl TryFrom<&BlockRecord> for CanonicalBlock {
    type Error = Error;

    fn try_from(rec: &BlockRecord) -> Result<CanonicalBlock> {
        if rec.mu.is_some() && rec.kind != "J" {
            return Err(Error::Parse(format!("'mu' is only allowed on J blocks, found on {}", rec.kind)));
        }
        let block = match rec.kind.as_str() {
            "L" => CanonicalBlock::RightSingular(rec.order),
            "LT" => CanonicalBlock::LeftSingular(rec.order),
            "J" => {
                let mu = rec.mu.clone().ok_or_else(|| Error::Parse("J block needs 'mu'".into()))?;
                CanonicalBlock::FiniteJordan { size: rec.order, mu }
            }
            "N" => CanonicalBlock::InfiniteJordan(rec.order),
            other => return Err(Error::Parse(format!("unknown block kind '{other}'"))),
        };
        if !block.is_valid() {
            return Err(Error::Parse(format!("Jordan block {block} must have positive size")));
        }
        Ok(block)
    }
}

impl From<&CanonicalBlock> for BlockRecord {
    fn from(b: &CanonicalBlock) -> Self {
        let (kind, order, mu) = match b {
            CanonicalBlock::RightSingular(e) => ("L", *e, None),
            CanonicalBlock::LeftSingular(e) => ("LT", *e, None),
            CanonicalBlock::FiniteJordan { size, mu } => ("J", *size, Some(mu.clone())),
            CanonicalBlock::InfiniteJordan(u) => ("N", *u, None),
        };
        BlockRecord { kind: kind.into(), order, mu }
    }
}

impl TryFrom<FactoredFormFile> for FactoredForm {
    type Error = Error;

    fn try_from(file: FactoredFormFile) -> Result<FactoredForm> {
        let blocks = file.blocks.iter().map(CanonicalBlock::try_from).collect::<Result<Vec<_>>>()?;
        let form = CanonicalForm::new(blocks);
        let (m, n) = form.dims();
        if m == 0 || n == 0 {
            return Err(Error::Parse("canonical form has a zero dimension".into()));
        }
        let e = file.e.map(|rows| checked_matrix(rows, m, m, "E")).transpose()?;
        let f = file.f.map(|rows| checked_matrix(rows, n, n, "F")).transpose()?;
        Ok(FactoredForm { form, e, f })
    }
}

impl From<&FactoredForm> for FactoredFormFile {
    fn from(ff: &FactoredForm) -> Self {
        FactoredFormFile {
            blocks: ff.form.blocks.iter().map(BlockRecord::from).collect(),
            e: ff.e.as_ref().map(Matrix::to_rows),
            f: ff.f.as_ref().map(Matrix::to_rows),
        }
    }
}

impl FactoredForm {
    pub fn from_json_str(s: &str) -> Result<FactoredForm> {
        serde_json::from_str::<FactoredFormFile>(s)?.try_into()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(FactoredFormFile::from(self)).expect("form serializes")
    }
}
