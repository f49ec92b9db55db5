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

//! Rainbow cuts, rainbow disconnection colorings and the exact `rd` solver.

use serde::{Deserialize, Serialize};

use crate::coloring::{vizing_color, EdgeColoring};
use crate::connectivity::{lambda_global, lambda_plus, mader_lambda_plus_bound};
use crate::error::{Error, Result};
use crate::graph::Graph;

mod search;

pub use search::find_rd_coloring;

/// Largest order for which cuts are found by enumerating bipartitions.
pub const MAX_CUT_ORDER: usize = 20;

/// Default number of edges up to which [`rd_exact`] may search colorings.
pub const DEFAULT_EDGE_BUDGET: usize = 16;

/// A vertex bipartition with its crossing edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCertificate {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    pub crossing: Vec<usize>,
    pub rainbow: bool,
}

impl CutCertificate {
    /// Recomputes sides, crossing edges and the rainbow flag from scratch.
    pub fn revalidate(&self, g: &Graph, c: &EdgeColoring) -> bool {
        let n = g.n();
        let mut side = vec![None; n];
        for (&v, label) in self
            .side_a
            .iter()
            .map(|v| (v, true))
            .chain(self.side_b.iter().map(|v| (v, false)))
        {
            if v >= n || side[v].is_some() {
                return false;
            }
            side[v] = Some(label);
        }
        if side.iter().any(Option::is_none) || c.len() != g.edge_count() {
            return false;
        }
        let crossing: Vec<usize> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| side[a] != side[b])
            .map(|(e, _)| e)
            .collect();
        crossing == self.crossing && self.rainbow == all_distinct(c, &crossing)
    }

    pub fn separates(&self, u: usize, v: usize) -> bool {
        self.side_a.contains(&u) != self.side_a.contains(&v)
    }
}

fn all_distinct(c: &EdgeColoring, edges: &[usize]) -> bool {
    let mut seen = vec![false; c.k() + 1];
    edges
        .iter()
        .all(|&e| !std::mem::replace(&mut seen[c.color(e)], true))
}

fn check_cut_inputs(g: &Graph, c: &EdgeColoring) -> Result<()> {
    c.check_len(g)?;
    if g.n() > MAX_CUT_ORDER {
        return Err(Error::OrderTooLarge {
            n: g.n(),
            max: MAX_CUT_ORDER,
        });
    }
    Ok(())
}

/// Whether the edges crossing the vertex set `side` (a bitmask) are rainbow.
fn crossing_is_rainbow(
    g: &Graph,
    c: &EdgeColoring,
    side: u32,
    stamp: &mut [u32],
    round: u32,
) -> bool {
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if (side >> a & 1) != (side >> b & 1) {
            let color = c.color(e);
            if stamp[color] == round {
                return false;
            }
            stamp[color] = round;
        }
    }
    true
}

/// A `u`–`v` rainbow cut, if one exists.
///
/// `u` is always in `side_a`. The other vertices, in increasing order, are
/// placed by a counter running from "all in `side_a`" down to "all in
/// `side_b`"; the first rainbow cut met is returned.
pub fn find_rainbow_cut(
    g: &Graph,
    c: &EdgeColoring,
    u: usize,
    v: usize,
) -> Result<Option<CutCertificate>> {
    check_cut_inputs(g, c)?;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let others: Vec<usize> = (0..g.n()).filter(|&x| x != u && x != v).collect();
    let mut stamp = vec![0u32; c.k() + 1];
    for (round, mask) in (0..1u32 << others.len()).rev().enumerate() {
        let mut side = 1u32 << u;
        for (i, &x) in others.iter().enumerate() {
            if mask >> i & 1 == 1 {
                side |= 1 << x;
            }
        }
        if crossing_is_rainbow(g, c, side, &mut stamp, round as u32 + 1) {
            let (side_a, side_b): (Vec<usize>, Vec<usize>) =
                (0..g.n()).partition(|&x| side >> x & 1 == 1);
            let crossing = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| (side >> a & 1) != (side >> b & 1))
                .map(|(e, _)| e)
                .collect();
            return Ok(Some(CutCertificate {
                side_a,
                side_b,
                crossing,
                rainbow: true,
            }));
        }
    }
    Ok(None)
}

/// True iff every pair of distinct vertices is separated by a rainbow cut.
///
/// Enumerates every bipartition once (vertex 0 fixed on one side) and strikes
/// off the pairs each rainbow bipartition separates.
pub fn is_rd_coloring(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    check_cut_inputs(g, c)?;
    let n = g.n();
    if n < 2 {
        return Ok(true);
    }
    let mut open: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut stamp = vec![0u32; c.k() + 1];
    let full = (1u32 << n) - 1;
    // side = 1 | (rest << 1) ranges over all sets containing vertex 0
    for (round, rest) in (0..1u32 << (n - 1)).enumerate() {
        let side = 1 | rest << 1;
        if side == full {
            continue;
        }
        if crossing_is_rainbow(g, c, side, &mut stamp, round as u32 + 1) {
            open.retain(|&(a, b)| (side >> a & 1) == (side >> b & 1));
            if open.is_empty() {
                return Ok(true);
            }
        }
    }
    Ok(open.is_empty())
}

/// True iff the star of every vertex other than `hub` is rainbow.
///
/// A rainbow star at `x` is an `x`–`y` rainbow cut for every `y`, so a
/// positive answer implies [`is_rd_coloring`].
pub fn star_rd_check(g: &Graph, c: &EdgeColoring, hub: usize) -> Result<bool> {
    c.check_len(g)?;
    g.check_vertex(hub)?;
    Ok((0..g.n()).filter(|&x| x != hub).all(|x| {
        let star: Vec<usize> = g.incident_edges(x).collect();
        all_distinct(c, &star)
    }))
}

/// How [`rd_exact`] settled the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// The graph is a tree.
    TreeRule,
    /// Lower and upper bounds coincide.
    SandwichCollapse,
    /// Exhaustive coloring search over the bound gap.
    Search,
    /// The bound gap was not searched because of the edge budget.
    BoundsOnly,
}

/// Bounds and, when available, the exact value of `rd(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RdReport {
    pub lambda: usize,
    pub lambda_plus: usize,
    pub mader_bound: usize,
    /// Colors used by the Misra–Gries coloring.
    pub chi_prime_upper: usize,
    pub rd: Option<usize>,
    pub method: Method,
    pub coloring: Option<EdgeColoring>,
}

impl RdReport {
    /// Lower bound `max(λ⁺, Mader bound)`.
    pub fn lower_bound(&self) -> usize {
        self.lambda_plus.max(self.mader_bound)
    }

    /// `λ ≤ λ⁺ ≤ rd ≤ χ′ upper ≤ Δ + 1` for the reported values.
    pub fn chain_holds(&self, max_degree: usize) -> bool {
        let rd = self.rd.unwrap_or(self.lambda_plus);
        self.lambda <= self.lambda_plus
            && self.lambda_plus <= rd
            && rd <= self.chi_prime_upper
            && self.chi_prime_upper <= max_degree + 1
    }
}

/// Exact `rd(G)` for a connected graph.
///
/// Trees are settled directly. Otherwise the value lies between
/// `max(λ⁺, Mader bound)` and the Misra–Gries color count; when the two
/// differ and the graph has at most `edge_budget` edges every palette size in
/// the gap is searched, smallest first. Over budget, a bounds-only report is
/// returned with `rd` absent.
pub fn rd_exact(g: &Graph, edge_budget: usize) -> Result<RdReport> {
    let lambda = lambda_global(g)?;
    if lambda == 0 {
        return Err(Error::Disconnected);
    }
    let lambda_plus = lambda_plus(g)?;
    let mader_bound = mader_lambda_plus_bound(g);
    let vizing = vizing_color(g);
    let chi_prime_upper = vizing.k();
    let mut report = RdReport {
        lambda,
        lambda_plus,
        mader_bound,
        chi_prime_upper,
        rd: None,
        method: Method::BoundsOnly,
        coloring: None,
    };
    if g.is_tree() {
        report.rd = Some(1);
        report.method = Method::TreeRule;
        report.coloring = Some(EdgeColoring::monochromatic(g.edge_count()));
        return Ok(report);
    }
    let lb = report.lower_bound();
    let ub = chi_prime_upper;
    debug_assert!(lb <= ub, "lower bound {lb} above upper bound {ub}");
    if lb >= ub {
        report.rd = Some(ub);
        report.method = Method::SandwichCollapse;
        report.coloring = Some(vizing);
        return Ok(report);
    }
    if g.edge_count() > edge_budget || !search::fits(g, ub) {
        return Ok(report);
    }
    report.method = Method::Search;
    for k in lb..ub {
        if let Some(c) = find_rd_coloring(g, k) {
            report.rd = Some(k);
            report.coloring = Some(c);
            return Ok(report);
        }
    }
    report.rd = Some(ub);
    report.coloring = Some(vizing);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::one_factorize_complete_even;
    use crate::graph::build_graph;

    fn coloring(k: usize, colors: &[usize]) -> EdgeColoring {
        EdgeColoring::new(k, colors.to_vec()).unwrap()
    }

    #[test]
    fn triangle_cut_certificate() {
        let k3 = Graph::complete(3);
        // (0,1)=1 (0,2)=1 (1,2)=2
        let c = coloring(2, &[1, 1, 2]);
        let cert = find_rainbow_cut(&k3, &c, 1, 2).unwrap().unwrap();
        assert_eq!(cert.side_a, vec![0, 1]);
        assert_eq!(cert.side_b, vec![2]);
        assert_eq!(cert.crossing, vec![1, 2]);
        assert!(cert.revalidate(&k3, &c));
        assert!(cert.separates(1, 2));

        let mono = coloring(1, &[1, 1, 1]);
        for (u, v) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(find_rainbow_cut(&k3, &mono, u, v).unwrap(), None);
        }
    }

    #[test]
    fn star_leaf_pair_is_cut_by_one_edge() {
        let star = Graph::star(3);
        let c = EdgeColoring::monochromatic(3);
        let cert = find_rainbow_cut(&star, &c, 1, 2).unwrap().unwrap();
        assert_eq!(cert.crossing.len(), 1);
        assert!(cert.revalidate(&star, &c));
    }

    #[test]
    fn cut_errors() {
        let g = Graph::path(3);
        let c = EdgeColoring::monochromatic(2);
        assert_eq!(find_rainbow_cut(&g, &c, 1, 1), Err(Error::SameVertex(1)));
        let big = Graph::path(21);
        let cb = EdgeColoring::monochromatic(20);
        assert!(matches!(
            find_rainbow_cut(&big, &cb, 0, 1),
            Err(Error::OrderTooLarge { n: 21, .. })
        ));
    }

    #[test]
    fn rd_coloring_examples() {
        let tree = build_graph(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert!(is_rd_coloring(&tree, &EdgeColoring::monochromatic(5)).unwrap());
        // C4 canonical edges (0,1) (0,3) (1,2) (2,3); alternating around the cycle
        let c4 = Graph::cycle(4);
        assert!(is_rd_coloring(&c4, &coloring(2, &[1, 2, 2, 1])).unwrap());
        assert!(!is_rd_coloring(&Graph::complete(3), &coloring(1, &[1, 1, 1])).unwrap());
    }

    #[test]
    fn star_check_examples() {
        let k4 = Graph::complete(4);
        let proper = one_factorize_complete_even(4).unwrap().to_coloring(&k4);
        for hub in 0..4 {
            assert!(star_rd_check(&k4, &proper, hub).unwrap());
        }
        let mono = coloring(1, &[1, 1, 1]);
        for hub in 0..3 {
            assert!(!star_rd_check(&Graph::complete(3), &mono, hub).unwrap());
        }
    }

    #[test]
    fn rd_of_small_graphs() {
        let k4 = rd_exact(&Graph::complete(4), DEFAULT_EDGE_BUDGET).unwrap();
        assert_eq!(k4.rd, Some(3));
        let tree = build_graph(7, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5), (5, 6)]).unwrap();
        let report = rd_exact(&tree, DEFAULT_EDGE_BUDGET).unwrap();
        assert_eq!((report.rd, report.method), (Some(1), Method::TreeRule));
        let c5 = rd_exact(&Graph::cycle(5), DEFAULT_EDGE_BUDGET).unwrap();
        assert_eq!(c5.rd, Some(2));
        assert_eq!(c5.method, Method::Search);
        let witness = c5.coloring.unwrap();
        assert!(is_rd_coloring(&Graph::cycle(5), &witness).unwrap());
    }

    #[test]
    fn rd_errors_and_budget() {
        let two = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(rd_exact(&two, 16), Err(Error::Disconnected));
        assert_eq!(rd_exact(&Graph::empty(1), 16), Err(Error::TrivialGraph));
        let c5 = rd_exact(&Graph::cycle(5), 4).unwrap();
        assert_eq!((c5.rd, c5.method), (None, Method::BoundsOnly));
        assert_eq!(c5.lower_bound(), 2);
        assert_eq!(c5.chi_prime_upper, 3);
    }

    #[test]
    fn report_json_keys() {
        let report = rd_exact(&Graph::path(3), 16).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["method"], "tree-rule");
        assert_eq!(json["rd"], 1);
        assert_eq!(json["coloring"]["k"], 1);
    }
}
