//! Serializable records for braces and solutions.
//!
//! Tables are row-major arrays of flat indices `n·q + m`.

use serde::{Deserialize, Serialize};

use crate::brace::{
    biskew_by_generators, circ_iso_type, kernel_size_by_generators, BraceLabel, CatalogEntry,
    CircFormula, FormulaBrace, SkewBrace,
};
use crate::error::{Error, Result};
use crate::group::{GroupKind, Params};
use crate::ybe::{verify_solution, YbeReport, YbeSolution};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceDescriptor {
    pub p: u32,
    pub q: u32,
    pub g: Option<u32>,
    pub add_kind: GroupKind,
    pub label: BraceLabel,
    pub ker_lambda: usize,
    /// `None` when the check was skipped for size.
    pub biskew: Option<bool>,
    pub mult_iso: Option<GroupKind>,
    pub formula: Option<CircFormula>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub add_table: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circ_table: Option<Vec<u32>>,
}

impl BraceDescriptor {
    /// Describes a materialized brace, assumed to satisfy the axioms.
    pub fn of_brace(b: &SkewBrace, include_tables: bool) -> Self {
        let params = b.params();
        BraceDescriptor {
            p: params.p(),
            q: params.q(),
            g: params.g(),
            add_kind: b.add_kind(),
            label: b.label(),
            ker_lambda: kernel_size_by_generators(b),
            biskew: biskew_by_generators(b),
            mult_iso: circ_iso_type(b),
            formula: b.formula(),
            add_table: include_tables.then(|| b.add_table().to_vec()),
            circ_table: include_tables.then(|| b.circ_table().to_vec()),
        }
    }

    /// Describes a catalog entry without building tables. The bi-skew
    /// check is quadratic and only runs when `with_biskew` is set.
    pub fn of_entry(params: &Params, e: &CatalogEntry, with_biskew: bool) -> Self {
        let fb = FormulaBrace {
            params,
            add_kind: e.add_kind,
            formula: e.formula,
        };
        BraceDescriptor {
            p: params.p(),
            q: params.q(),
            g: params.g(),
            add_kind: e.add_kind,
            label: e.label,
            ker_lambda: kernel_size_by_generators(&fb),
            biskew: if with_biskew {
                biskew_by_generators(&fb)
            } else {
                None
            },
            mult_iso: circ_iso_type(&fb),
            formula: Some(e.formula),
            add_table: None,
            circ_table: None,
        }
    }

    /// Rebuilds the brace from its circle table.
    pub fn to_brace(&self) -> Result<SkewBrace> {
        let params = params_for(self.p, self.q, self.g)?;
        let circ = self
            .circ_table
            .clone()
            .ok_or_else(|| Error::Malformed("descriptor has no circle table".into()))?;
        let mut b = SkewBrace::from_tables(&params, self.add_kind, circ, self.label)?;
        if let Some(add) = &self.add_table {
            if add.as_slice() != b.add_table() {
                return Err(Error::Malformed(format!(
                    "additive table does not match the canonical {}",
                    self.add_kind
                )));
            }
        }
        b.set_formula(self.formula);
        Ok(b)
    }
}

fn params_for(p: u32, q: u32, g: Option<u32>) -> Result<Params> {
    match g {
        Some(g) => Params::with_generator(p as u64, q as u64, g as u64),
        None => Params::new(p as u64, q as u64),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogExport {
    pub p: u32,
    pub q: u32,
    pub g: Option<u32>,
    pub braces: Vec<BraceDescriptor>,
}

impl CatalogExport {
    pub fn new(params: &Params, braces: Vec<BraceDescriptor>) -> Self {
        CatalogExport {
            p: params.p(),
            q: params.q(),
            g: params.g(),
            braces,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Malformed(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let out: CatalogExport =
            serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))?;
        if out
            .braces
            .iter()
            .any(|d| (d.p, d.q, d.g) != (out.p, out.q, out.g))
        {
            return Err(Error::Malformed(
                "descriptor parameters differ from the header".into(),
            ));
        }
        Ok(out)
    }

    pub fn to_braces(&self) -> Result<Vec<SkewBrace>> {
        self.braces.iter().map(BraceDescriptor::to_brace).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionExport {
    pub label: BraceLabel,
    pub add_kind: GroupKind,
    pub size: usize,
    pub sigma: Vec<u32>,
    pub tau: Vec<u32>,
    #[serde(flatten)]
    pub report: YbeReport,
}

impl SolutionExport {
    pub fn new(b: &SkewBrace, sol: YbeSolution) -> Self {
        let report = verify_solution(&sol);
        SolutionExport {
            label: b.label(),
            add_kind: b.add_kind(),
            size: sol.size,
            sigma: sol.sigma,
            tau: sol.tau,
            report,
        }
    }

    pub fn to_solution(&self) -> Result<YbeSolution> {
        YbeSolution::from_tables(self.size, self.sigma.clone(), self.tau.clone())
    }
}

/// A square table as CSV: a header row of column indices, then one row per
/// index led by that index.
pub fn table_to_csv(table: &[u32], size: usize) -> Result<String> {
    if table.len() != size * size {
        return Err(Error::Malformed(format!(
            "table has {} entries, expected {}",
            table.len(),
            size * size
        )));
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Malformed(e.to_string());
    let header = std::iter::once(String::new()).chain((0..size).map(|i| i.to_string()));
    w.write_record(header).map_err(io)?;
    for (i, row) in table.chunks(size).enumerate() {
        let rec = std::iter::once(i.to_string()).chain(row.iter().map(u32::to_string));
        w.write_record(rec).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Malformed(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of integers is utf-8"))
}

/// Inverse of [`table_to_csv`].
pub fn table_from_csv(s: &str) -> Result<Vec<u32>> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(s.as_bytes());
    let mut out = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| Error::Malformed(e.to_string()))?;
        let mut fields = rec.iter();
        if fields.next() != Some(i.to_string().as_str()) {
            return Err(Error::Malformed(format!(
                "row {i} has a wrong leading index"
            )));
        }
        for f in fields {
            out.push(
                f.parse()
                    .map_err(|_| Error::Malformed(format!("bad entry {f:?} in row {i}")))?,
            );
        }
    }
    Ok(out)
}
