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

//! Edge connectivity through unit-capacity max-flow, and the degree-deficit
//! lower bound on the upper edge-connectivity.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A minimum `u`–`v` edge cut produced by max-flow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCut {
    pub value: usize,
    /// Vertices reachable from `u` in the final residual graph.
    pub source_side: Vec<usize>,
    /// Indices of the edges leaving `source_side`.
    pub edges: Vec<usize>,
}

/// Runs augmenting-path max-flow between `u` and `v`.
///
/// Each undirected edge is a pair of opposite unit arcs; `flow[e]` is the net
/// flow from the smaller endpoint to the larger one.
fn max_flow(g: &Graph, u: usize, v: usize) -> (usize, Vec<bool>) {
    let n = g.n();
    let edges = g.edges();
    let incidence: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|x| {
            g.neighbors(x)
                .iter()
                .map(|&y| (y, g.edge_index(x, y).expect("adjacent")))
                .collect()
        })
        .collect();
    let residual = |flow: &[i8], x: usize, e: usize| -> bool {
        let f = if edges[e].0 == x { flow[e] } else { -flow[e] };
        f < 1
    };
    let mut flow = vec![0i8; edges.len()];
    let bound = g.degree(u).min(g.degree(v));
    let mut value = 0;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    loop {
        if value == bound {
            // saturated by the degree bound: the smaller star is a minimum cut
            let mut side = vec![false; n];
            if g.degree(u) <= g.degree(v) {
                side[u] = true;
            } else {
                side.iter_mut().for_each(|s| *s = true);
                side[v] = false;
            }
            return (value, side);
        }
        seen.iter_mut().for_each(|s| *s = false);
        seen[u] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &(y, e) in &incidence[x] {
                if !seen[y] && residual(&flow, x, e) {
                    seen[y] = true;
                    parent[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        if !seen[v] {
            break;
        }
        let mut y = v;
        while y != u {
            let (x, e) = parent[y].expect("on augmenting path");
            if edges[e].0 == x {
                flow[e] += 1;
            } else {
                flow[e] -= 1;
            }
            y = x;
        }
        value += 1;
    }
    (value, seen)
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(())
}

/// λ(u, v): the maximum number of edge-disjoint `u`–`v` paths.
///
/// Returns 0 when `u` and `v` lie in different components.
pub fn local_edge_connectivity(g: &Graph, u: usize, v: usize) -> Result<usize> {
    check_pair(g, u, v)?;
    Ok(max_flow(g, u, v).0)
}

/// λ(u, v) together with a minimum cut realizing it.
pub fn local_min_cut(g: &Graph, u: usize, v: usize) -> Result<LocalCut> {
    check_pair(g, u, v)?;
    let (value, side) = max_flow(g, u, v);
    let edges: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| side[a] != side[b])
        .map(|(i, _)| i)
        .collect();
    debug_assert_eq!(edges.len(), value);
    Ok(LocalCut {
        value,
        source_side: (0..g.n()).filter(|&x| side[x]).collect(),
        edges,
    })
}

/// λ(G) with a pair realizing it: the minimum of λ(0, v) over `v != 0`.
pub fn lambda_global_with_witness(g: &Graph) -> Result<(usize, (usize, usize))> {
    if g.n() < 2 {
        return Err(Error::TrivialGraph);
    }
    let mut best = (usize::MAX, (0, 1));
    for v in 1..g.n() {
        let lam = max_flow(g, 0, v).0;
        if lam < best.0 {
            best = (lam, (0, v));
        }
    }
    Ok(best)
}

/// λ(G); 0 iff the graph is disconnected.
pub fn lambda_global(g: &Graph) -> Result<usize> {
    lambda_global_with_witness(g).map(|(lam, _)| lam)
}

/// λ⁺(G) with a pair realizing it.
///
/// Pairs are visited by decreasing `min(d(u), d(v))`, which bounds λ(u, v),
/// so the scan stops once no remaining pair can beat the best value found.
pub fn lambda_plus_with_witness(g: &Graph) -> Result<(usize, (usize, usize))> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TrivialGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut pairs: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .map(|(a, b)| (g.degree(a).min(g.degree(b)), a, b))
        .collect();
    pairs.sort_by(|x, y| y.0.cmp(&x.0).then((x.1, x.2).cmp(&(y.1, y.2))));
    let mut best: Option<(usize, (usize, usize))> = None;
    for (cap, a, b) in pairs {
        if let Some((value, _)) = best {
            if cap <= value {
                break;
            }
        }
        let lam = max_flow(g, a, b).0;
        if best.is_none_or(|(value, _)| lam > value) {
            best = Some((lam, (a, b)));
        }
    }
    Ok(best.expect("at least one pair"))
}

/// λ⁺(G) = max over pairs of λ(u, v).
pub fn lambda_plus(g: &Graph) -> Result<usize> {
    lambda_plus_with_witness(g).map(|(lam, _)| lam)
}

/// Global and upper edge-connectivity of a connected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityProfile {
    pub lambda_global: usize,
    pub lambda_plus: usize,
    pub witness_pair_min: (usize, usize),
    pub witness_pair_max: (usize, usize),
}

impl ConnectivityProfile {
    pub fn compute(g: &Graph) -> Result<Self> {
        let (lambda_plus, witness_pair_max) = lambda_plus_with_witness(g)?;
        let (lambda_global, witness_pair_min) = lambda_global_with_witness(g)?;
        Ok(ConnectivityProfile {
            lambda_global,
            lambda_plus,
            witness_pair_min,
            witness_pair_max,
        })
    }
}

/// σ_k(G): total deficiency `k - d(x)` over vertices of degree at most `k`.
pub fn sigma_k(g: &Graph, k: usize) -> usize {
    (0..g.n()).map(|x| k.saturating_sub(g.degree(x))).sum()
}

/// Whether the size condition `e(G) > (k+1)(n-1)/2 - σ_k/2` holds.
///
/// Evaluated as `2e + σ_k > (k+1)(n-1)` in integers. Returns `None` when
/// `k` is not admissible, i.e. unless `n >= k + 2 >= 3`.
pub fn mader_condition(g: &Graph, k: usize) -> Option<bool> {
    let n = g.n();
    if k == 0 || n < k + 2 {
        return None;
    }
    let lhs = 2 * g.edge_count() + sigma_k(g, k);
    Some(lhs > (k + 1) * (n - 1))
}

/// Largest `k + 1` over admissible `k` whose size condition holds, or 1.
///
/// The condition forces λ⁺(G) ≥ k + 1, so the result never exceeds λ⁺.
pub fn mader_lambda_plus_bound(g: &Graph) -> usize {
    (1..g.n().saturating_sub(1))
        .filter(|&k| mader_condition(g, k) == Some(true))
        .map(|k| k + 1)
        .max()
        .unwrap_or(1)
}
