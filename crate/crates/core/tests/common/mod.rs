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

//! Brute-force oracles shared by the integration tests. None of them calls
//! into the solver paths they are used to check.

#![allow(dead_code)]

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rd_core::Graph;

/// Every permutation of `0..n`, by Heap's algorithm.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        heap(k - 1, a, out);
        for i in 0..k - 1 {
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
            heap(k - 1, a, out);
        }
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut out);
    out
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

fn connected_mask(n: usize, adj: &[u32]) -> bool {
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == (1u32 << n) - 1
}

/// Number of isomorphism classes of connected labeled graphs of order `n`,
/// deduplicated by minimizing the adjacency bitstring over all `n!`
/// permutations.
pub fn connected_class_count(n: usize) -> usize {
    let all = pairs(n);
    let perms = permutations(n);
    let mut classes = HashSet::new();
    let mut seen_codes = HashSet::new();
    for mask in 0u64..1 << all.len() {
        let mut adj = vec![0u32; n];
        for (i, &(a, b)) in all.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        if !connected_mask(n, &adj) || seen_codes.contains(&mask) {
            continue;
        }
        let mut best = u64::MAX;
        for p in &perms {
            let mut code = 0u64;
            for (i, &(a, b)) in all.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                    let j = all.iter().position(|&q| q == (x, y)).unwrap();
                    code |= 1 << j;
                }
            }
            seen_codes.insert(code);
            best = best.min(code);
        }
        classes.insert(best);
    }
    classes.len()
}

/// All bipartitions `S` with vertex 0 in `S` and `S != V`, as bitmasks.
fn bipartitions(n: usize) -> impl Iterator<Item = u32> {
    let full = (1u32 << n) - 1;
    (0..1u32 << (n - 1))
        .map(|r| 1 | r << 1)
        .filter(move |&s| s != full)
}

fn crossing(g: &Graph, side: u32) -> Vec<usize> {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| (side >> a & 1) != (side >> b & 1))
        .map(|(e, _)| e)
        .collect()
}

/// λ(u, v) as the smallest crossing set over separating bipartitions.
pub fn local_connectivity(g: &Graph, u: usize, v: usize) -> usize {
    bipartitions(g.n())
        .filter(|&s| (s >> u & 1) != (s >> v & 1))
        .map(|s| crossing(g, s).len())
        .min()
        .unwrap()
}

fn distinct(colors: &[usize], edges: &[usize]) -> bool {
    let mut seen = HashSet::new();
    edges.iter().all(|&e| seen.insert(colors[e]))
}

/// Pair-by-pair, bipartition-by-bipartition rainbow disconnection check.
pub fn is_rd(g: &Graph, colors: &[usize]) -> bool {
    let n = g.n();
    let cuts: Vec<(u32, bool)> = bipartitions(n)
        .map(|s| (s, distinct(colors, &crossing(g, s))))
        .collect();
    pairs(n).into_iter().all(|(u, v)| {
        cuts.iter()
            .any(|&(s, ok)| ok && (s >> u & 1) != (s >> v & 1))
    })
}

/// Calls `f` on every coloring `E -> 1..=k` until it returns true.
fn any_coloring(m: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut colors = vec![1usize; m];
    loop {
        if f(&colors) {
            return true;
        }
        let mut i = 0;
        while i < m && colors[i] == k {
            colors[i] = 1;
            i += 1;
        }
        if i == m {
            return false;
        }
        colors[i] += 1;
    }
}

/// rd(G) by trying every coloring with 1, 2, ... colors.
pub fn rd(g: &Graph) -> usize {
    (1..)
        .find(|&k| any_coloring(g.edge_count(), k, |c| is_rd(g, c)))
        .unwrap()
}

pub fn proper(g: &Graph, colors: &[usize]) -> bool {
    (0..g.n()).all(|v| {
        let star: Vec<usize> = g.incident_edges(v).collect();
        distinct(colors, &star)
    })
}

/// χ′(G) by trying every coloring with 1, 2, ... colors.
pub fn chromatic_index(g: &Graph) -> usize {
    if g.edge_count() == 0 {
        return 0;
    }
    (1..)
        .find(|&k| any_coloring(g.edge_count(), k, |c| proper(g, c)))
        .unwrap()
}

/// Connected graph: a random spanning tree plus each other pair with
/// probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((parent.min(order[i]), parent.max(order[i])));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) && !edges.contains(&(a, b)) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
