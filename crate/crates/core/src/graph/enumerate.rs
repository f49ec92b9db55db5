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

//! Non-isomorphic connected graphs of small order.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canon::{canonical_code, CanonicalCode, MAX_CANON_ORDER};
use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = MAX_CANON_ORDER;

/// All connected graphs of order `n`, one per isomorphism class.
///
/// Graphs come back in canonical labeling, sorted by edge count and then by
/// canonical code.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_connected_codes(n)?
        .into_iter()
        .map(|c| c.to_graph())
        .collect())
}

/// Like [`enumerate_connected`] but returns the canonical codes.
pub fn enumerate_connected_codes(n: usize) -> Result<Vec<CanonicalCode>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let max_edges = n * (n - 1) / 2;
    let mut level: BTreeSet<CanonicalCode> = BTreeSet::new();
    level.insert(canonical_code(&Graph::empty(n))?);
    let mut out: Vec<CanonicalCode> = Vec::new();
    for m in 0..=max_edges {
        let mut connected: Vec<CanonicalCode> = level
            .iter()
            .copied()
            .filter(|c| c.to_graph().is_connected())
            .collect();
        connected.sort();
        out.extend(connected);
        if m == max_edges {
            break;
        }
        // grow every class by one edge and deduplicate
        let children: Vec<Vec<CanonicalCode>> = level
            .par_iter()
            .map(|code| {
                let g = code.to_graph();
                let mut kids = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        if !g.has_edge(a, b) {
                            let h = g.with_edges([(a, b)]).expect("non-edge");
                            kids.push(canonical_code(&h).expect("order checked"));
                        }
                    }
                }
                kids
            })
            .collect();
        level = children.into_iter().flatten().collect();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_connected(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn order_is_by_size_then_code() {
        let gs = enumerate_connected(4).unwrap();
        let sizes: Vec<_> = gs.iter().map(Graph::edge_count).collect();
        assert_eq!(sizes, vec![3, 3, 4, 4, 5, 6]);
        for w in gs.windows(2) {
            let a = (w[0].edge_count(), canonical_code(&w[0]).unwrap());
            let b = (w[1].edge_count(), canonical_code(&w[1]).unwrap());
            assert!(a < b);
        }
    }

    #[test]
    fn rejects_large_orders() {
        assert!(enumerate_connected(9).is_err());
        assert!(enumerate_connected(0).is_err());
    }
}
