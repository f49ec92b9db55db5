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

//! Backtracking search for a rainbow disconnection coloring with `k` colors.
//!
//! Only bonds matter: if some `u`–`v` separating bipartition has a rainbow
//! crossing set, the bond inside it separating `u` from `v` is rainbow too.
//! Every bond with at most `k` crossing edges starts alive; a bond dies once
//! two of its edges share a color, and a branch is pruned as soon as some
//! vertex pair has no live bond separating it.

use crate::coloring::{constrained_edge_order, EdgeColoring};
use crate::graph::Graph;

use super::MAX_CUT_ORDER;

const MAX_SEARCH_EDGES: usize = 64;
const MAX_SEARCH_COLORS: usize = 63;

/// Whether the search can represent `g` with up to `k` colors.
pub(crate) fn fits(g: &Graph, k: usize) -> bool {
    g.n() <= MAX_CUT_ORDER && g.edge_count() <= MAX_SEARCH_EDGES && k <= MAX_SEARCH_COLORS
}

fn induces_connected(g: &Graph, set: u32) -> bool {
    let Some(start) = (0..g.n()).find(|&v| set >> v & 1 == 1) else {
        return false;
    };
    let mut reached = 1u32 << start;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if set >> y & 1 == 1 && reached >> y & 1 == 0 {
                reached |= 1 << y;
                stack.push(y);
            }
        }
    }
    reached == set
}

struct Bond {
    pairs: Vec<usize>,
}

struct Search {
    k: usize,
    order: Vec<usize>,
    bonds: Vec<Bond>,
    /// Bonds containing each edge.
    edge_bonds: Vec<Vec<usize>>,
    used: Vec<u64>,
    dead: Vec<bool>,
    alive: Vec<usize>,
    colors: Vec<usize>,
}

enum Undo {
    Mark(usize, u64),
    Kill(usize),
}

impl Search {
    fn new(g: &Graph, k: usize) -> Option<Self> {
        let n = g.n();
        let pair_index = |a: usize, b: usize| a * n + b;
        let mut bonds = Vec::new();
        let mut edge_bonds = vec![Vec::new(); g.edge_count()];
        let mut alive = vec![0usize; n * n];
        let full = (1u32 << n) - 1;
        for rest in 0..1u32 << (n - 1) {
            let side = 1 | rest << 1;
            if side == full || !induces_connected(g, side) || !induces_connected(g, full & !side) {
                continue;
            }
            let crossing: Vec<usize> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| (side >> a & 1) != (side >> b & 1))
                .map(|(e, _)| e)
                .collect();
            if crossing.len() > k {
                continue;
            }
            let id = bonds.len();
            let mut pairs = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if (side >> a & 1) != (side >> b & 1) {
                        pairs.push(pair_index(a, b));
                        alive[pair_index(a, b)] += 1;
                    }
                }
            }
            for e in crossing {
                edge_bonds[e].push(id);
            }
            bonds.push(Bond { pairs });
        }
        for a in 0..n {
            for b in a + 1..n {
                if alive[pair_index(a, b)] == 0 {
                    return None;
                }
            }
        }
        Some(Search {
            k,
            order: constrained_edge_order(g),
            used: vec![0; bonds.len()],
            dead: vec![false; bonds.len()],
            bonds,
            edge_bonds,
            alive,
            colors: vec![0; g.edge_count()],
        })
    }

    /// Colors edge `e` with `c`; false if some pair lost its last bond.
    fn apply(&mut self, e: usize, c: usize, log: &mut Vec<Undo>) -> bool {
        let bit = 1u64 << c;
        let mut ok = true;
        for &b in &self.edge_bonds[e] {
            if self.dead[b] {
                continue;
            }
            if self.used[b] & bit != 0 {
                self.dead[b] = true;
                log.push(Undo::Kill(b));
                for &p in &self.bonds[b].pairs {
                    self.alive[p] -= 1;
                    if self.alive[p] == 0 {
                        ok = false;
                    }
                }
            } else {
                self.used[b] |= bit;
                log.push(Undo::Mark(b, bit));
            }
        }
        self.colors[e] = c;
        ok
    }

    fn revert(&mut self, e: usize, log: Vec<Undo>) {
        for step in log.into_iter().rev() {
            match step {
                Undo::Mark(b, bit) => self.used[b] &= !bit,
                Undo::Kill(b) => {
                    self.dead[b] = false;
                    for &p in &self.bonds[b].pairs {
                        self.alive[p] += 1;
                    }
                }
            }
        }
        self.colors[e] = 0;
    }

    fn run(&mut self, pos: usize, max_used: usize) -> bool {
        let Some(&e) = self.order.get(pos) else {
            return true;
        };
        // a new color may only follow the largest one already in use
        for c in 1..=self.k.min(max_used + 1) {
            let mut log = Vec::new();
            let ok = self.apply(e, c, &mut log);
            if ok && self.run(pos + 1, max_used.max(c)) {
                return true;
            }
            self.revert(e, log);
        }
        false
    }
}

/// A rainbow disconnection coloring of `g` using colors from `1..=k`, if any.
///
/// # Panics
/// If `g` is beyond the search limits (order above 20, more than 64 edges or
/// more than 63 colors).
pub fn find_rd_coloring(g: &Graph, k: usize) -> Option<EdgeColoring> {
    assert!(fits(g, k), "graph too large for coloring search");
    if g.n() < 2 {
        return Some(EdgeColoring::monochromatic(g.edge_count()));
    }
    if k == 0 {
        return None;
    }
    let mut search = Search::new(g, k)?;
    if !search.run(0, 0) {
        return None;
    }
    Some(EdgeColoring::new(k, search.colors).expect("colors within 1..=k"))
}
