//! On-disk and emitted formats: the order file and the JSON report.

use std::path::Path;

use serde::{Deserialize, Serialize};
use tiled_core::report::STRUCTURE;
use tiled_core::{ExponentMatrix, StructureReport};

use crate::CliError;

/// `{"alpha": [[...], ...]}`; any other key is rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderFile {
    pub alpha: Vec<Vec<i64>>,
}

impl OrderFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<ExponentMatrix, CliError> {
        ExponentMatrix::validate(&self.alpha).map_err(CliError::Invalid)
    }

    /// Single-line rendering, e.g. `{"alpha": [[0,0],[1,0]]}`.
    pub fn render(&self) -> String {
        let rows: Vec<String> = self
            .alpha
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(i64::to_string).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("{{\"alpha\": [{}]}}", rows.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    /// One-line image, 1-based.
    pub perm: Vec<usize>,
    pub x: Vec<i64>,
}

/// Everything `report --json` emits. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub n: usize,
    pub valid: bool,
    pub basic: bool,
    pub zero_one: bool,
    pub quiver: Vec<[usize; 2]>,
    pub loops: Vec<usize>,
    pub valued_arrows: Vec<[i64; 3]>,
    pub aut_q_order: usize,
    pub o_lambda_order: usize,
    pub is_cyclic: bool,
    pub is_abelian: bool,
    pub all_liftable: bool,
    pub generators: Vec<GeneratorEntry>,
    pub structure: String,
}

impl ReportDocument {
    /// Builds the document, re-checking every generator against the
    /// conjugation oracle first.
    pub fn from_report(a: &ExponentMatrix, r: &StructureReport) -> Result<Self, CliError> {
        let mut generators = Vec::new();
        for g in r.group.generators() {
            if !g.verify(a).map_err(CliError::Invalid)? {
                return Err(CliError::Invalid(tiled_core::Error::Invariant(format!(
                    "generator {g:?} failed re-verification"
                ))));
            }
            generators.push(GeneratorEntry {
                perm: g.sigma().one_line(),
                x: g.x().as_slice().to_vec(),
            });
        }
        let q = r.quiver.quiver();
        Ok(Self {
            n: r.n,
            valid: true,
            basic: r.basic,
            zero_one: r.zero_one,
            quiver: q.arrows().map(|(i, j)| [i + 1, j + 1]).collect(),
            loops: q.loops().into_iter().map(|v| v + 1).collect(),
            valued_arrows: r
                .quiver
                .valued_arrows()
                .map(|(i, j, v)| [i as i64 + 1, j as i64 + 1, v])
                .collect(),
            aut_q_order: r.aut_q_order(),
            o_lambda_order: r.o_lambda_order(),
            is_cyclic: r.group.is_cyclic(),
            is_abelian: r.group.is_abelian(),
            all_liftable: r.all_liftable,
            generators,
            structure: STRUCTURE.to_string(),
        })
    }

    /// Compact JSON with keys in sorted order.
    pub fn to_canonical_json(&self) -> String {
        // serde_json's default map is ordered by key
        let value = serde_json::to_value(self).expect("plain data serializes");
        value.to_string()
    }
}
