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

use thiserror::Error;

/// Errors raised by graph construction, the solvers and the builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge ({a},{b})")]
    LoopEdge { a: usize, b: usize },
    #[error("duplicate edge ({a},{b})")]
    DuplicateEdge { a: usize, b: usize },
    #[error("edge ({a},{b}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { a: usize, b: usize, n: usize },
    #[error("vertex {v} does not exist in a graph of order {n}")]
    NoSuchVertex { v: usize, n: usize },
    #[error("order {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("u and v must be distinct (both are {0})")]
    SameVertex(usize),
    #[error("graph needs at least two vertices")]
    TrivialGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {edges} edges, limit is {max}")]
    TooLarge { edges: usize, max: usize },
    #[error("coloring has {got} entries but the graph has {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
    #[error("edge {index} has color {color}, outside 1..={k}")]
    ColorOutOfRange {
        index: usize,
        color: usize,
        k: usize,
    },
    #[error("order {0} is odd")]
    OddOrder(usize),
    #[error("degree {k} out of range 1..={max} for order {n}")]
    DegreeOutOfRange { n: usize, k: usize, max: usize },
    #[error("k = {k} out of range for order {n}")]
    KOutOfRange { n: usize, k: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
