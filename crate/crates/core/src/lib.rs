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

//! Rainbow disconnection colorings of simple graphs.
//!
//! The crate computes the rainbow disconnection number `rd(G)` exactly for
//! small graphs, builds the extremal graphs of maximum size for a given
//! `rd` on an even number of vertices together with explicit colorings, and
//! checks the extremal size functions against an exhaustive census of all
//! connected graphs of small order.

pub mod census;
pub mod cli;
pub mod coloring;
pub mod connectivity;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod rainbow;

pub use error::{Error, Result};
pub use graph::{build_graph, complete_graph, Graph};
