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

//! File formats: canonical graph and coloring JSON, and DOT export.

use std::fmt::Write as _;

use crate::coloring::EdgeColoring;
use crate::graph::Graph;

/// `{"n": N, "edges": [[a,b],...]}` with edges in canonical order.
pub fn graph_to_json(g: &Graph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|(a, b)| format!("[{a},{b}]"))
        .collect();
    format!("{{\"n\": {}, \"edges\": [{}]}}\n", g.n(), edges.join(","))
}

/// `{"k": K, "colors": [c,...]}` aligned with the graph's edge order.
pub fn coloring_to_json(c: &EdgeColoring) -> String {
    let colors: Vec<String> = c.colors().iter().map(usize::to_string).collect();
    format!("{{\"k\": {}, \"colors\": [{}]}}\n", c.k(), colors.join(","))
}

pub fn graph_from_json(text: &str) -> serde_json::Result<Graph> {
    serde_json::from_str(text)
}

pub fn coloring_from_json(text: &str) -> serde_json::Result<EdgeColoring> {
    serde_json::from_str(text)
}

const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#000000", "#aec7e8",
];

/// Undirected DOT; with a coloring, each edge carries its class as label and
/// a stroke color cycling through a fixed palette.
pub fn to_dot(g: &Graph, coloring: Option<&EdgeColoring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (e, (a, b)) in g.edges().iter().enumerate() {
        match coloring {
            Some(c) => {
                let class = c.color(e);
                let stroke = PALETTE[(class - 1) % PALETTE.len()];
                let _ = writeln!(out, "  {a} -- {b} [label=\"{class}\", color=\"{stroke}\"];");
            }
            None => {
                let _ = writeln!(out, "  {a} -- {b};");
            }
        }
    }
    out.push_str("}\n");
    out
}
