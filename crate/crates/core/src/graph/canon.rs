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

//! Exact canonical form by exhaustive permutation minimization.
//!
//! Candidate labelings are restricted to those that place vertices in
//! nondecreasing degree order. The degree ordering is itself an isomorphism
//! invariant, so the minimum over that subgroup is still a complete
//! invariant, and regular graphs fall back to all `n!` permutations.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_code`].
pub const MAX_CANON_ORDER: usize = 8;

/// Upper-triangular adjacency bits of the canonical labeling.
///
/// Pair `(i, j)`, `i < j`, in lexicographic order occupies one bit; the first
/// pair is the most significant, so integer order equals bitstring order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode {
    n: u8,
    bits: u32,
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Bit position of pair `(i, j)` with `i < j`.
fn pair_shift(n: usize, i: usize, j: usize) -> usize {
    let index = i * (2 * n - i - 1) / 2 + (j - i - 1);
    pair_count(n) - 1 - index
}

impl CanonicalCode {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// The graph in canonical labeling.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.bits >> pair_shift(n, i, j) & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_sorted(n, edges)
    }

    /// Code of `g` under the identity labeling (not canonical).
    pub(crate) fn of_labeling(g: &Graph, label: &[usize]) -> u32 {
        let n = g.n();
        g.edges().iter().fold(0u32, |acc, &(a, b)| {
            let (x, y) = (label[a].min(label[b]), label[a].max(label[b]));
            acc | 1 << pair_shift(n, x, y)
        })
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = pair_count(self.n());
        if width == 0 {
            return write!(f, "{}:-", self.n);
        }
        write!(f, "{}:{:0width$b}", self.n, self.bits, width = width)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical code of `g`; equal codes iff isomorphic graphs.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    let n = g.n();
    if n > MAX_CANON_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_CANON_ORDER,
        });
    }
    // label positions are handed out class by class in degree order
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut classes: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut start = 0;
    for (i, &v) in order.iter().enumerate() {
        if i > 0 && g.degree(v) != g.degree(order[i - 1]) {
            classes.push((start, order[start..i].to_vec()));
            start = i;
        }
    }
    if n > 0 {
        classes.push((start, order[start..].to_vec()));
    }

    let mut label = vec![0usize; n];
    let mut best = u32::MAX;
    search(g, &classes, 0, &mut label, &mut vec![false; n], &mut best);
    Ok(CanonicalCode {
        n: n as u8,
        bits: best,
    })
}

/// Assigns labels to the members of `classes[ci..]` in every order.
fn search(
    g: &Graph,
    classes: &[(usize, Vec<usize>)],
    ci: usize,
    label: &mut [usize],
    used: &mut Vec<bool>,
    best: &mut u32,
) {
    let Some((start, members)) = classes.get(ci) else {
        *best = (*best).min(CanonicalCode::of_labeling(g, label));
        return;
    };
    // `used` tracks which members of the current class are placed
    let placed = members.iter().filter(|&&v| used[v]).count();
    if placed == members.len() {
        search(g, classes, ci + 1, label, used, best);
        return;
    }
    for &v in members {
        if used[v] {
            continue;
        }
        used[v] = true;
        label[v] = start + placed;
        search(g, classes, ci, label, used, best);
        used[v] = false;
    }
}
