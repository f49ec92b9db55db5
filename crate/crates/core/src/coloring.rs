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

//! Proper edge colorings: Misra–Gries (Vizing) coloring, exact chromatic
//! index for small graphs and circle-method 1-factorizations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Colors `1..=k` assigned to edges in the companion graph's edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct EdgeColoring {
    k: usize,
    colors: Vec<usize>,
}

#[derive(Deserialize)]
struct RawColoring {
    k: usize,
    colors: Vec<usize>,
}

impl TryFrom<RawColoring> for EdgeColoring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        EdgeColoring::new(raw.k, raw.colors)
    }
}

impl EdgeColoring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        if let Some((index, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::ColorOutOfRange { index, color, k });
        }
        Ok(EdgeColoring { k, colors })
    }

    /// Every edge gets the same color 1.
    pub fn monochromatic(edges: usize) -> Self {
        EdgeColoring {
            k: 1,
            colors: vec![1; edges],
        }
    }

    /// Renumbers the colors actually present to `1..=count`, keeping order.
    pub fn compacted(colors: Vec<usize>) -> Self {
        let max = colors.iter().copied().max().unwrap_or(0);
        let mut map = vec![0; max + 1];
        for &c in &colors {
            map[c] = 1;
        }
        let mut next = 0;
        for slot in map.iter_mut().skip(1) {
            if *slot == 1 {
                next += 1;
                *slot = next;
            }
        }
        EdgeColoring {
            k: next,
            colors: colors.into_iter().map(|c| map[c]).collect(),
        }
    }

    /// Declared palette size.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, edge: usize) -> usize {
        self.colors[edge]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors that actually occur.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        self.colors.iter().for_each(|&c| seen[c] = true);
        seen.iter().filter(|&&s| s).count()
    }

    pub fn check_len(&self, g: &Graph) -> Result<()> {
        if self.colors.len() == g.edge_count() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: g.edge_count(),
                got: self.colors.len(),
            })
        }
    }
}

/// True iff no two edges sharing an endpoint have the same color.
pub fn is_proper(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    c.check_len(g)?;
    let mut seen = vec![usize::MAX; c.k() + 1];
    for v in 0..g.n() {
        for e in g.incident_edges(v) {
            let color = c.color(e);
            if seen[color] == v {
                return Ok(false);
            }
            seen[color] = v;
        }
    }
    Ok(true)
}

const NONE: usize = usize::MAX;

/// State of the Misra–Gries procedure.
struct Vizing<'g> {
    g: &'g Graph,
    palette: usize,
    /// `at[x][c]` is the neighbor joined to `x` by an edge of color `c`.
    at: Vec<Vec<usize>>,
    color: Vec<usize>,
}

impl<'g> Vizing<'g> {
    fn new(g: &'g Graph) -> Self {
        let palette = g.max_degree() + 1;
        Vizing {
            g,
            palette,
            at: vec![vec![NONE; palette + 1]; g.n()],
            color: vec![0; g.edge_count()],
        }
    }

    fn is_free(&self, x: usize, c: usize) -> bool {
        self.at[x][c] == NONE
    }

    fn free_color(&self, x: usize) -> usize {
        (1..=self.palette)
            .find(|&c| self.is_free(x, c))
            .expect("a vertex of degree at most Δ misses a color of Δ+1")
    }

    fn edge_color(&self, x: usize, y: usize) -> usize {
        self.color[self.g.edge_index(x, y).expect("edge exists")]
    }

    fn set(&mut self, x: usize, y: usize, c: usize) {
        let e = self.g.edge_index(x, y).expect("edge exists");
        self.color[e] = c;
        self.at[x][c] = y;
        self.at[y][c] = x;
    }

    fn unset(&mut self, x: usize, y: usize) {
        let e = self.g.edge_index(x, y).expect("edge exists");
        let c = self.color[e];
        if c != 0 {
            self.at[x][c] = NONE;
            self.at[y][c] = NONE;
            self.color[e] = 0;
        }
    }

    /// Maximal fan at `u` starting with the uncolored edge `uv`.
    fn fan(&self, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().expect("nonempty");
            let next = (1..=self.palette).find_map(|c| {
                let w = self.at[u][c];
                (w != NONE && self.is_free(last, c) && !fan.contains(&w)).then_some(w)
            });
            match next {
                Some(w) => fan.push(w),
                None => return fan,
            }
        }
    }

    /// Swaps `c` and `d` on the alternating path leaving `u` along `d`.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut x, mut cur) = (u, d);
        while self.at[x][cur] != NONE {
            let y = self.at[x][cur];
            path.push((x, y, cur));
            x = y;
            cur = if cur == c { d } else { c };
        }
        for &(x, y, _) in &path {
            self.unset(x, y);
        }
        for &(x, y, old) in &path {
            self.set(x, y, if old == c { d } else { c });
        }
    }

    fn is_fan_prefix(&self, u: usize, fan: &[usize]) -> bool {
        fan.windows(2)
            .all(|w| self.is_free(w[0], self.edge_color(u, w[1])))
    }

    fn color_edge(&mut self, u: usize, v: usize) {
        let fan = self.fan(u, v);
        let c = self.free_color(u);
        let d = self.free_color(*fan.last().expect("nonempty"));
        self.invert_path(u, c, d);
        let w = (0..fan.len())
            .find(|&i| self.is_free(fan[i], d) && self.is_fan_prefix(u, &fan[..=i]))
            .expect("Misra–Gries guarantees a rotatable prefix");
        let shifted: Vec<usize> = (0..w).map(|i| self.edge_color(u, fan[i + 1])).collect();
        for &x in &fan[1..=w] {
            self.unset(u, x);
        }
        for (i, &c) in shifted.iter().enumerate() {
            self.set(u, fan[i], c);
        }
        self.set(u, fan[w], d);
    }
}

/// Proper edge coloring with at most Δ(G) + 1 colors.
///
/// Edges are colored in canonical order. Fans are extended by the smallest
/// eligible color; the missing colors `c` at the fan center and `d` at the fan
/// tip are the smallest free ones. Colors are renumbered to `1..=used`.
pub fn vizing_color(g: &Graph) -> EdgeColoring {
    let mut state = Vizing::new(g);
    for &(a, b) in g.edges() {
        state.color_edge(a, b);
    }
    EdgeColoring::compacted(state.color)
}

/// Limit on the number of edges for [`chromatic_index_exact`].
pub const CHROMATIC_INDEX_MAX_EDGES: usize = 30;

/// Edge order for backtracking: start at a maximum-degree vertex, then always
/// take the edge with the most already-ordered neighbors (ties by index).
pub(crate) fn constrained_edge_order(g: &Graph) -> Vec<usize> {
    let m = g.edge_count();
    let edges = g.edges();
    let mut placed = vec![false; m];
    let mut weight = vec![0usize; m];
    let mut order = Vec::with_capacity(m);
    let hub = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
    let mut touched = vec![false; g.n()];
    if let Some(h) = hub {
        touched[h] = true;
    }
    for _ in 0..m {
        let next = (0..m)
            .filter(|&e| !placed[e])
            .max_by_key(|&e| {
                let (a, b) = edges[e];
                let ends = touched[a] as usize + touched[b] as usize;
                (weight[e], ends, std::cmp::Reverse(e))
            })
            .expect("edges remain");
        placed[next] = true;
        order.push(next);
        let (a, b) = edges[next];
        touched[a] = true;
        touched[b] = true;
        for x in [a, b] {
            for f in g.incident_edges(x) {
                if !placed[f] {
                    weight[f] += 1;
                }
            }
        }
    }
    order
}

/// Whether `g` has a proper edge coloring with `k` colors.
fn is_k_edge_colorable(g: &Graph, k: usize, order: &[usize]) -> bool {
    fn go(
        g: &Graph,
        k: usize,
        order: &[usize],
        pos: usize,
        used: usize,
        masks: &mut [u64],
    ) -> bool {
        let Some(&e) = order.get(pos) else {
            return true;
        };
        let (a, b) = g.edges()[e];
        let limit = k.min(used + 1);
        for c in 1..=limit {
            let bit = 1u64 << c;
            if (masks[a] | masks[b]) & bit != 0 {
                continue;
            }
            masks[a] |= bit;
            masks[b] |= bit;
            if go(g, k, order, pos + 1, used.max(c), masks) {
                return true;
            }
            masks[a] &= !bit;
            masks[b] &= !bit;
        }
        false
    }
    go(g, k, order, 0, 0, &mut vec![0u64; g.n()])
}

/// χ′(G), decided by backtracking whether Δ colors suffice.
pub fn chromatic_index_exact(g: &Graph) -> Result<usize> {
    let m = g.edge_count();
    if m > CHROMATIC_INDEX_MAX_EDGES {
        return Err(Error::TooLarge {
            edges: m,
            max: CHROMATIC_INDEX_MAX_EDGES,
        });
    }
    let delta = g.max_degree();
    if delta == 0 {
        return Ok(0);
    }
    // each color class is a matching of at most floor(n/2) edges
    if m > delta * (g.n() / 2) {
        return Ok(delta + 1);
    }
    let order = constrained_edge_order(g);
    Ok(if is_k_edge_colorable(g, delta, &order) {
        delta
    } else {
        delta + 1
    })
}

/// A partition of a graph's edges into perfect matchings.
///
/// Factors hold edge indices of the companion graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneFactorization {
    pub factors: Vec<Vec<usize>>,
}

impl OneFactorization {
    /// Checks that every factor is a perfect matching and the factors
    /// partition the edge set.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut covered = vec![false; g.edge_count()];
        for factor in &self.factors {
            let mut hit = vec![false; g.n()];
            for &e in factor {
                if e >= covered.len() || covered[e] {
                    return false;
                }
                covered[e] = true;
                let (a, b) = g.edges()[e];
                if hit[a] || hit[b] {
                    return false;
                }
                hit[a] = true;
                hit[b] = true;
            }
            if hit.iter().any(|&h| !h) {
                return false;
            }
        }
        covered.into_iter().all(|c| c)
    }

    /// Coloring that gives factor `i` color `i + 1`.
    pub fn to_coloring(&self, g: &Graph) -> EdgeColoring {
        let mut colors = vec![0; g.edge_count()];
        for (i, factor) in self.factors.iter().enumerate() {
            for &e in factor {
                colors[e] = i + 1;
            }
        }
        EdgeColoring {
            k: self.factors.len(),
            colors,
        }
    }
}

/// Circle-method round pairs of `K_n` for even `n`.
///
/// Vertex `n - 1` is the center. Round `r` lists
/// `((r + i) mod (n-1), (r - i) mod (n-1))` for `i = 1..n/2` and then
/// `(center, r)`.
pub fn circle_method_rounds(n: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if n % 2 == 1 || n == 0 {
        return Err(Error::OddOrder(n));
    }
    let m = n - 1;
    Ok((0..m)
        .map(|r| {
            let mut round: Vec<(usize, usize)> =
                (1..n / 2).map(|i| ((r + i) % m, (r + m - i) % m)).collect();
            round.push((m, r));
            round
        })
        .collect())
}

/// The circle-method 1-factorization of `K_n`, `n` even.
pub fn one_factorize_complete_even(n: usize) -> Result<OneFactorization> {
    let rounds = circle_method_rounds(n)?;
    let kn = Graph::complete(n);
    let factors = rounds
        .into_iter()
        .map(|round| {
            let mut f: Vec<usize> = round
                .into_iter()
                .map(|(a, b)| kn.edge_index(a, b).expect("complete graph"))
                .collect();
            f.sort_unstable();
            f
        })
        .collect();
    Ok(OneFactorization { factors })
}
