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

//! Constructive side: the peeled 1-factorable regular graphs, the maximum
//! size graphs with prescribed `rd` on an even number of vertices, and a
//! minimum size graph with prescribed `rd`.

use serde::Serialize;

use crate::coloring::{circle_method_rounds, EdgeColoring, OneFactorization};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::star_rd_check;

/// A `k`-regular 1-factorable graph with room for `⌊k/2⌋` extra matching
/// edges inside the neighborhood of `hub`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeelResult {
    pub graph: Graph,
    /// Surviving circle-method factors, in round order.
    pub factorization: OneFactorization,
    pub hub: usize,
    /// Pairwise disjoint non-edges with both ends adjacent to `hub`.
    pub addable_matching: Vec<(usize, usize)>,
    /// Entry `i` holds the ends of the `(i+1)`-th edge of the removed
    /// matching, first end then second end.
    pub pair_labels: Vec<(usize, usize)>,
}

impl PeelResult {
    pub fn degree(&self) -> usize {
        self.graph.degree(self.hub)
    }

    /// Rechecks regularity, the factorization and the addable matching.
    pub fn is_valid(&self) -> bool {
        let g = &self.graph;
        let k = self.degree();
        let regular = (0..g.n()).all(|v| g.degree(v) == k);
        let mut touched = vec![false; g.n()];
        let matching_ok = self.addable_matching.len() == k / 2
            && self.addable_matching.iter().all(|&(a, b)| {
                let fresh = !touched[a] && !touched[b];
                touched[a] = true;
                touched[b] = true;
                fresh
                    && a != b
                    && !g.has_edge(a, b)
                    && g.has_edge(self.hub, a)
                    && g.has_edge(self.hub, b)
            });
        regular
            && matching_ok
            && self.factorization.factors.len() == k
            && self.factorization.is_valid_for(g)
    }
}

/// Pairs `e_1 .. e_{h-1}` whose ends are both still adjacent to `hub`.
fn intact_pairs(present: &[Vec<bool>], hub: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
    (0..pairs.len() - 1)
        .filter(|&i| present[hub][pairs[i].0] && present[hub][pairs[i].1])
        .collect()
}

/// Peels 1-factors off `K_order` until the graph is `degree`-regular.
///
/// Round 0 of the circle method is the first factor removed; its edges
/// `e_1 .. e_h` (`h = order / 2`) name the vertex pairs, and the hub is the
/// first end of `e_h`. At stage `j = 2, 3, ...` the factor holding the hub
/// edge to the first end (even `j`) or second end (odd `j`) of
/// `e_{h - ⌊j/2⌋}` is removed. The surviving pairs `e_1 .. e_{⌊degree/2⌋}`
/// stay non-adjacent inside the hub's neighborhood; this is rechecked after
/// every removal.
pub fn peel_factorable(order: usize, degree: usize) -> Result<PeelResult> {
    if order % 2 == 1 {
        return Err(Error::OddOrder(order));
    }
    let max = order.saturating_sub(2);
    if degree < 1 || degree > max {
        return Err(Error::DegreeOutOfRange {
            n: order,
            k: degree,
            max,
        });
    }
    let rounds = circle_method_rounds(order)?;
    let half = order / 2;
    let pairs = rounds[0].clone();
    let hub = pairs[half - 1].0;

    let mut present = vec![vec![true; order]; order];
    (0..order).for_each(|v| present[v][v] = false);
    let mut remaining = vec![true; rounds.len()];
    let remove = |r: usize, remaining: &mut [bool], present: &mut [Vec<bool>]| {
        remaining[r] = false;
        for &(a, b) in &rounds[r] {
            present[a][b] = false;
            present[b][a] = false;
        }
    };
    remove(0, &mut remaining, &mut present);
    assert_eq!(intact_pairs(&present, hub, &pairs).len(), half - 1);

    for j in 2..order - degree {
        let idx = half - j / 2;
        let target = if j % 2 == 0 {
            pairs[idx - 1].0
        } else {
            pairs[idx - 1].1
        };
        let r = (0..rounds.len())
            .find(|&r| {
                remaining[r]
                    && rounds[r]
                        .iter()
                        .any(|&(a, b)| (a, b) == (hub, target) || (b, a) == (hub, target))
            })
            .expect("each surviving hub edge lies in exactly one remaining factor");
        remove(r, &mut remaining, &mut present);
        let intact = intact_pairs(&present, hub, &pairs);
        let expected: Vec<usize> = (0..half - j / 2 - 1).collect();
        assert_eq!(intact, expected, "intact pairs after peel stage {j}");
        assert_eq!(intact.len(), (order - j - 1) / 2);
    }

    let mut edges = Vec::new();
    for (r, round) in rounds.iter().enumerate() {
        if remaining[r] {
            edges.extend(round.iter().map(|&(a, b)| (a.min(b), a.max(b))));
        }
    }
    let graph = Graph::new(order, edges)?;
    let factors = rounds
        .iter()
        .enumerate()
        .filter(|&(r, _)| remaining[r])
        .map(|(_, round)| {
            let mut f: Vec<usize> = round
                .iter()
                .map(|&(a, b)| graph.edge_index(a, b).expect("surviving factor edge"))
                .collect();
            f.sort_unstable();
            f
        })
        .collect();
    Ok(PeelResult {
        addable_matching: pairs[..degree / 2].to_vec(),
        graph,
        factorization: OneFactorization { factors },
        hub,
        pair_labels: pairs,
    })
}

/// Maximum size graph of even order with a `k`-color rainbow disconnection
/// coloring certified by rainbow stars at every vertex except `hub`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalWitness {
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub hub: usize,
    pub size_formula_value: usize,
}

impl ExtremalWitness {
    pub fn is_valid(&self) -> bool {
        self.graph.edge_count() == self.size_formula_value
            && self.coloring.colors_used() <= self.coloring.k()
            && star_rd_check(&self.graph, &self.coloring, self.hub).unwrap_or(false)
    }
}

/// `⌊(k+1)(n-1)/2⌋`.
pub fn max_size_formula(n: usize, k: usize) -> usize {
    (k + 1) * (n - 1) / 2
}

/// Graph of even order `n` with `rd = k` and `⌊(k+1)(n-1)/2⌋` edges.
///
/// * `k = 1`: the star centered at `n - 1`, one color.
/// * `k = n-1`: `K_n` colored by its circle-method 1-factorization.
/// * otherwise: the `(k-1)`-regular peel with its factors as colors
///   `1..k`, plus the addable matching and every missing hub edge in color
///   `k`.
pub fn extremal_even(n: usize, k: usize) -> Result<ExtremalWitness> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if k < 1 || k + 1 > n {
        return Err(Error::KOutOfRange { n, k });
    }
    let size_formula_value = max_size_formula(n, k);
    if k == 1 {
        let graph = Graph::new(n, (0..n - 1).map(|v| (v, n - 1)))?;
        return Ok(ExtremalWitness {
            coloring: EdgeColoring::monochromatic(graph.edge_count()),
            graph,
            hub: n - 1,
            size_formula_value,
        });
    }
    if k == n - 1 {
        let graph = Graph::complete(n);
        let coloring = crate::coloring::one_factorize_complete_even(n)?.to_coloring(&graph);
        return Ok(ExtremalWitness {
            graph,
            coloring,
            hub: n - 1,
            size_formula_value,
        });
    }

    let peel = peel_factorable(n, k - 1)?;
    let base = &peel.graph;
    let hub = peel.hub;
    let mut colored: Vec<((usize, usize), usize)> = Vec::new();
    for (i, factor) in peel.factorization.factors.iter().enumerate() {
        colored.extend(factor.iter().map(|&e| (base.edges()[e], i + 1)));
    }
    for &(a, b) in &peel.addable_matching {
        colored.push(((a.min(b), a.max(b)), k));
    }
    for w in 0..n {
        if w != hub && !base.has_edge(hub, w) {
            colored.push(((hub.min(w), hub.max(w)), k));
        }
    }
    colored.sort_unstable();
    let graph = Graph::new(n, colored.iter().map(|&(e, _)| e))?;
    let coloring = EdgeColoring::new(k, colored.into_iter().map(|(_, c)| c).collect())?;
    Ok(ExtremalWitness {
        graph,
        coloring,
        hub,
        size_formula_value,
    })
}

/// Connected graph of order `n` with `n + k - 2` edges and `rd = k`.
///
/// Vertices 0 and 1 are adjacent and share the `k - 1` common neighbors
/// `2..=k`, so λ(0, 1) = k; a path `1, k+1, ..., n-1` pads the order.
pub fn min_size_rd(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || k + 1 > n {
        return Err(Error::KOutOfRange { n, k });
    }
    let mut edges = vec![(0, 1)];
    for i in 2..=k {
        edges.push((0, i));
        edges.push((1, i));
    }
    let mut prev = 1;
    for v in k + 1..n {
        edges.push((prev, v));
        prev = v;
    }
    Graph::new(n, edges)
}
