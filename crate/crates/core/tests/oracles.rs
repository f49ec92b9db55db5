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

//! Library results checked against the brute-force oracles.

mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rd_core::coloring::{chromatic_index_exact, vizing_color, EdgeColoring};
use rd_core::connectivity::{
    lambda_global, lambda_plus, local_edge_connectivity, local_min_cut, mader_lambda_plus_bound,
};
use rd_core::constructions::extremal_even;
use rd_core::graph::{canonical_code, enumerate_connected};
use rd_core::rainbow::{find_rainbow_cut, is_rd_coloring, rd_exact, star_rd_check};
use rd_core::Graph;

fn census_up_to(max_n: usize) -> Vec<Graph> {
    (2..=max_n)
        .flat_map(|n| enumerate_connected(n).unwrap())
        .collect()
}

#[test]
fn enumeration_matches_labeled_brute_force() {
    for n in 1..=6 {
        let expected = common::connected_class_count(n);
        assert_eq!(enumerate_connected(n).unwrap().len(), expected, "n = {n}");
    }
    assert_eq!(enumerate_connected(4).unwrap().len(), 6);
    assert_eq!(enumerate_connected(6).unwrap().len(), 112);
}

#[test]
fn enumeration_counts_are_monotone() {
    let counts: Vec<usize> = (1..=7)
        .map(|n| enumerate_connected(n).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    assert!(counts.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn canonical_code_is_permutation_invariant() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for g in census_up_to(6) {
        let code = canonical_code(&g).unwrap();
        for _ in 0..100 {
            let p = common::random_permutation(&mut rng, g.n());
            assert_eq!(canonical_code(&g.relabel(&p)).unwrap(), code);
        }
    }
}

#[test]
fn census_graphs_are_pairwise_non_isomorphic_and_connected() {
    for n in 1..=6 {
        let gs = enumerate_connected(n).unwrap();
        let mut codes: Vec<_> = gs.iter().map(|g| canonical_code(g).unwrap()).collect();
        assert!(gs.iter().all(Graph::is_connected));
        codes.dedup();
        assert_eq!(codes.len(), gs.len());
    }
}

#[test]
fn flow_matches_bipartition_minimum() {
    for g in census_up_to(6) {
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let expected = common::local_connectivity(&g, u, v);
                assert_eq!(local_edge_connectivity(&g, u, v).unwrap(), expected);
                let cut = local_min_cut(&g, u, v).unwrap();
                assert_eq!(cut.edges.len(), expected);
                assert!(cut.source_side.contains(&u) && !cut.source_side.contains(&v));
            }
        }
    }
}

#[test]
fn connectivity_profile_ordering() {
    for g in census_up_to(6) {
        let lam = lambda_global(&g).unwrap();
        let plus = lambda_plus(&g).unwrap();
        assert!(lam <= plus && plus <= g.max_degree() && lam <= g.min_degree());
        assert!(mader_lambda_plus_bound(&g) <= plus);
    }
}

#[test]
fn cycle_five_connectivity_oracle() {
    let c5 = Graph::cycle(5);
    assert_eq!(common::local_connectivity(&c5, 0, 2), 2);
    let chorded = rd_core::build_graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
    assert_eq!(
        (1..4)
            .map(|v| common::local_connectivity(&chorded, 0, v))
            .min(),
        Some(2)
    );
}

#[test]
fn rd_exact_matches_exhaustive_colorings() {
    for g in census_up_to(5) {
        let report = rd_exact(&g, 16).unwrap();
        assert_eq!(report.rd, Some(common::rd(&g)), "{g:?}");
        let witness = report.coloring.unwrap();
        assert!(witness.k() <= report.rd.unwrap());
        assert!(common::is_rd(&g, witness.colors()));
    }
}

#[test]
fn rd_exact_is_isomorphism_invariant() {
    let mut rng = StdRng::seed_from_u64(7);
    for g in census_up_to(5) {
        let rd = rd_exact(&g, 16).unwrap().rd;
        for _ in 0..10 {
            let p = common::random_permutation(&mut rng, g.n());
            assert_eq!(rd_exact(&g.relabel(&p), 16).unwrap().rd, rd);
        }
    }
}

#[test]
fn chromatic_index_matches_exhaustive() {
    for g in census_up_to(5) {
        assert_eq!(
            chromatic_index_exact(&g).unwrap(),
            common::chromatic_index(&g)
        );
    }
    assert_eq!(common::chromatic_index(&Graph::cycle(5)), 3);
}

#[test]
fn is_rd_coloring_agrees_with_naive_check() {
    let mut rng = StdRng::seed_from_u64(99);
    for g in census_up_to(6) {
        for _ in 0..5 {
            let k = rng.gen_range(1..=4);
            let colors: Vec<usize> = (0..g.edge_count()).map(|_| rng.gen_range(1..=k)).collect();
            let c = EdgeColoring::new(k, colors).unwrap();
            assert_eq!(
                is_rd_coloring(&g, &c).unwrap(),
                common::is_rd(&g, c.colors())
            );
        }
    }
}

#[test]
fn certificates_revalidate() {
    let mut rng = StdRng::seed_from_u64(3);
    for g in census_up_to(5) {
        let k = rng.gen_range(1..=3);
        let colors: Vec<usize> = (0..g.edge_count()).map(|_| rng.gen_range(1..=k)).collect();
        let c = EdgeColoring::new(k, colors).unwrap();
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u == v {
                    continue;
                }
                if let Some(cert) = find_rainbow_cut(&g, &c, u, v).unwrap() {
                    assert!(cert.rainbow && cert.revalidate(&g, &c) && cert.separates(u, v));
                    assert!(cert.side_a.contains(&u));
                }
            }
        }
    }
}

#[test]
fn star_check_implies_rd_coloring() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut positives = 0;
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let g = common::random_connected(&mut rng, n, 0.3);
        let k = rng.gen_range(2..=g.max_degree() + 1);
        let colors: Vec<usize> = (0..g.edge_count()).map(|_| rng.gen_range(1..=k)).collect();
        let c = EdgeColoring::new(k, colors).unwrap();
        for hub in 0..n {
            if star_rd_check(&g, &c, hub).unwrap() {
                positives += 1;
                assert!(is_rd_coloring(&g, &c).unwrap());
            }
        }
    }
    for n in (4..=10).step_by(2) {
        for k in 1..n {
            let w = extremal_even(n, k).unwrap();
            assert!(star_rd_check(&w.graph, &w.coloring, w.hub).unwrap());
            assert!(is_rd_coloring(&w.graph, &w.coloring).unwrap());
        }
    }
    assert!(positives > 0);
}

#[test]
fn vizing_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..500 {
        let n = rng.gen_range(2..=50);
        let p = rng.gen_range(0.0..0.5);
        let g = common::random_connected(&mut rng, n, p);
        let c = vizing_color(&g);
        assert!(common::proper(&g, c.colors()));
        assert!(c.k() <= g.max_degree() + 1);
    }
}

proptest! {
    #[test]
    fn trees_have_rd_one(parents in proptest::collection::vec(any::<prop::sample::Index>(), 1..12)) {
        let n = parents.len() + 1;
        let edges: Vec<(usize, usize)> = parents
            .iter()
            .enumerate()
            .map(|(i, idx)| (idx.index(i + 1), i + 1))
            .collect();
        let g = Graph::new(n, edges).unwrap();
        prop_assert!(g.is_tree());
        let report = rd_exact(&g, 16).unwrap();
        prop_assert_eq!(report.rd, Some(1));
        prop_assert!(is_rd_coloring(&g, &EdgeColoring::monochromatic(n - 1)).unwrap());
    }

    #[test]
    fn adding_an_edge_to_a_tree_needs_two_colors(
        parents in proptest::collection::vec(any::<prop::sample::Index>(), 2..9),
        a in any::<prop::sample::Index>(),
        b in any::<prop::sample::Index>(),
    ) {
        let n = parents.len() + 1;
        let tree: Vec<(usize, usize)> = parents
            .iter()
            .enumerate()
            .map(|(i, idx)| (idx.index(i + 1), i + 1))
            .collect();
        let (x, y) = (a.index(n), b.index(n));
        prop_assume!(x != y && !tree.contains(&(x.min(y), x.max(y))));
        let g = Graph::new(n, tree.into_iter().chain([(x, y)])).unwrap();
        prop_assert!(rd_exact(&g, 16).unwrap().rd.unwrap() >= 2);
    }

    #[test]
    fn build_graph_ignores_input_order(n in 2usize..9, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = common::random_connected(&mut rng, n, 0.4);
        let mut shuffled: Vec<(usize, usize)> = g.edges().iter().map(|&(a, b)| if rng.gen() { (b, a) } else { (a, b) }).collect();
        rand::seq::SliceRandom::shuffle(shuffled.as_mut_slice(), &mut rng);
        prop_assert_eq!(rd_core::build_graph(n, &shuffled).unwrap(), g);
    }
}
