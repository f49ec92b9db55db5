// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Exhaustive census of connected graphs of small order: observed minimum
//! and maximum sizes per `rd` level against the closed-form values.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::enumerate::enumerate_connected_codes;
use crate::graph::{CanonicalCode, Graph};
use crate::rainbow::rd_exact;

/// Largest order the census accepts.
pub const MAX_CENSUS_ORDER: usize = 7;

/// Bumped whenever the solver could produce different values.
pub const SOLVER_VERSION: u32 = 1;

/// Closed-form values at `(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EgValues {
    pub g: usize,
    pub f: usize,
    pub t: usize,
    pub s: usize,
}

/// `g = t = n + k - 2`, `f = ⌊k(n-1)/2⌋ + 1`, `s = ⌊(k+1)(n-1)/2⌋`.
pub fn eg_formulas(n: usize, k: usize) -> Result<EgValues> {
    if k < 1 || k + 1 > n {
        return Err(Error::KOutOfRange { n, k });
    }
    Ok(EgValues {
        g: n + k - 2,
        f: k * (n - 1) / 2 + 1,
        t: n + k - 2,
        s: (k + 1) * (n - 1) / 2,
    })
}

/// `rd` of one census graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub code: CanonicalCode,
    pub edges: usize,
    pub rd: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED-BOUNDARY")]
    SkippedBoundary,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SkippedBoundary => "SKIPPED-BOUNDARY",
        }
    }

    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Observed against closed-form sizes at one level `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub k: usize,
    pub t_formula: usize,
    /// Minimum size over graphs with `rd >= k`.
    pub t_observed: Option<usize>,
    pub t_witness: Option<CanonicalCode>,
    pub s_formula: usize,
    /// Maximum size over graphs with `rd <= k`.
    pub s_observed: Option<usize>,
    pub s_witness: Option<CanonicalCode>,
    pub g: usize,
    pub f: usize,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusTable {
    pub n: usize,
    pub graphs: usize,
    pub rows: Vec<CensusRow>,
}

impl CensusTable {
    pub fn row(&self, k: usize) -> Option<&CensusRow> {
        self.rows.iter().find(|r| r.k == k)
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.status == Status::Pass)
    }
}

/// Computes `rd` for every connected graph of order `n`, in enumeration
/// order.
pub fn census_records(n: usize) -> Result<Vec<GraphRecord>> {
    if n > MAX_CENSUS_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_CENSUS_ORDER,
        });
    }
    let codes = enumerate_connected_codes(n)?;
    if n == 1 {
        return Ok(Vec::new());
    }
    codes
        .par_iter()
        .map(|&code| {
            let g = code.to_graph();
            let report = rd_exact(&g, usize::MAX)?;
            Ok(GraphRecord {
                code,
                edges: g.edge_count(),
                rd: report.rd.expect("census orders are always searchable"),
            })
        })
        .collect()
}

/// Aggregates per-graph records into the table for order `n`.
pub fn table_from_records(n: usize, records: &[GraphRecord]) -> CensusTable {
    let mut rows = Vec::new();
    for k in 1..n {
        let formulas = eg_formulas(n, k).expect("k in range");
        // records are sorted by size, so the first hit is the minimum
        let t = records.iter().find(|r| r.rd >= k);
        let s = records.iter().rev().find(|r| r.rd <= k);
        let t_observed = t.map(|r| r.edges);
        let s_observed = s.map(|r| r.edges);
        rows.push(CensusRow {
            k,
            t_formula: formulas.t,
            t_observed,
            t_witness: t.map(|r| r.code),
            s_formula: formulas.s,
            s_observed,
            s_witness: s.map(|r| r.code),
            g: formulas.g,
            f: formulas.f,
            status: Status::of(t_observed == Some(formulas.t) && s_observed == Some(formulas.s)),
        });
    }
    CensusTable {
        n,
        graphs: records.len(),
        rows,
    }
}

/// Enumerates, solves and tabulates order `n`.
pub fn run_census(n: usize) -> Result<CensusTable> {
    let records = census_records(n)?;
    Ok(table_from_records(n, &records))
}

/// File holding the records for `n` under the current solver version.
pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("census-n{n}-v{SOLVER_VERSION}.json"))
}

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error(transparent)]
    Census(#[from] Error),
    #[error("census cache: {0}")]
    Io(#[from] io::Error),
}

/// [`run_census`] backed by a record cache in `dir`.
///
/// A cache file that fails to parse is recomputed and overwritten.
pub fn run_census_cached(n: usize, dir: &Path) -> std::result::Result<CensusTable, CacheError> {
    let path = cache_path(dir, n);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(records) = serde_json::from_str::<Vec<GraphRecord>>(&text) {
            return Ok(table_from_records(n, &records));
        }
    }
    let records = census_records(n)?;
    fs::create_dir_all(dir)?;
    let text = serde_json::to_string(&records).map_err(io::Error::other)?;
    fs::write(&path, text)?;
    Ok(table_from_records(n, &records))
}

/// Which identity a relation check concerns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `g(n,k) = t(n,k+1) - 1`
    G,
    /// `f(n,k) = s(n,k-1) + 1`
    F,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub relation: Relation,
    pub k: usize,
    pub formula: usize,
    /// Derived from the observed table; absent at boundary levels.
    pub derived: Option<usize>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count()
    }

    pub fn get(&self, relation: Relation, k: usize) -> Option<&RelationCheck> {
        self.checks
            .iter()
            .find(|c| c.relation == relation && c.k == k)
    }
}

/// Derives `g` and `f` from the observed `t` and `s` and compares them
/// with their closed forms.
///
/// `g(n, n-1)` would need `t(n, n)` and `f(n, 1)` would need `s(n, 0)`;
/// neither exists, so those levels are reported as skipped.
pub fn verify_relations(table: &CensusTable) -> RelationReport {
    let n = table.n;
    let mut checks = Vec::new();
    for row in &table.rows {
        let k = row.k;
        let derived = if k + 1 < n {
            table
                .row(k + 1)
                .and_then(|next| next.t_observed)
                .map(|t| t - 1)
        } else {
            None
        };
        checks.push(RelationCheck {
            relation: Relation::G,
            k,
            formula: row.g,
            derived,
            status: if k + 1 >= n {
                Status::SkippedBoundary
            } else {
                Status::of(derived == Some(row.g))
            },
        });
    }
    for row in &table.rows {
        let k = row.k;
        let derived = if k >= 2 {
            table
                .row(k - 1)
                .and_then(|prev| prev.s_observed)
                .map(|s| s + 1)
        } else {
            None
        };
        checks.push(RelationCheck {
            relation: Relation::F,
            k,
            formula: row.f,
            derived,
            status: if k < 2 {
                Status::SkippedBoundary
            } else {
                Status::of(derived == Some(row.f))
            },
        });
    }
    RelationReport { n, checks }
}

pub const CSV_HEADER: &str = "n,k,t_formula,t_observed,s_formula,s_observed,g,f,status";

/// CSV rows for the given tables, header first.
pub fn to_csv(tables: &[CensusTable]) -> String {
    let opt = |v: Option<usize>| v.map_or_else(String::new, |x| x.to_string());
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for table in tables {
        for r in &table.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                table.n,
                r.k,
                r.t_formula,
                opt(r.t_observed),
                r.s_formula,
                opt(r.s_observed),
                r.g,
                r.f,
                r.status.as_str()
            );
        }
    }
    out
}

#[derive(Serialize)]
struct JsonRow<'a> {
    #[serde(flatten)]
    row: &'a CensusRow,
    t_witness_graph: Option<Graph>,
    s_witness_graph: Option<Graph>,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    n: usize,
    graphs: usize,
    rows: Vec<JsonRow<'a>>,
    relations: RelationReport,
}

/// JSON document with witness graphs and relation checks embedded.
pub fn to_json(tables: &[CensusTable]) -> String {
    let doc: Vec<JsonTable> = tables
        .iter()
        .map(|t| JsonTable {
            n: t.n,
            graphs: t.graphs,
            rows: t
                .rows
                .iter()
                .map(|row| JsonRow {
                    row,
                    t_witness_graph: row.t_witness.map(|c| c.to_graph()),
                    s_witness_graph: row.s_witness.map(|c| c.to_graph()),
                })
                .collect(),
            relations: verify_relations(t),
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    text
}
