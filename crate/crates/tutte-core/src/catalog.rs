//! Exhaustive catalogues of small connected multigraphs, one representative
//! per isomorphism class.
//!
//! Generation grows graphs one edge at a time: every connected multigraph
//! with `m >= 1` edges arises from a connected multigraph with `m - 1`
//! edges either by adding an edge (or loop) between existing vertices or by
//! attaching a fresh pendant vertex. Levels are deduplicated with the exact
//! canonical form from [`crate::canon`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Multigraph;

/// All connected multigraphs with at most `max_edges` edges (loops and
/// parallel edges included), up to isomorphism, grouped by edge count.
///
/// Level 0 is the single-vertex graph. Every returned graph is in the
/// canonical labeling, so output is deterministic.
pub fn connected_multigraphs_by_edges(max_edges: usize) -> Vec<Vec<Multigraph>> {
    let k1 = Multigraph::new(1, Vec::new()).unwrap();
    let mut levels: Vec<Vec<Multigraph>> = alloc::vec![alloc::vec![k1]];
    for _ in 1..=max_edges {
        let mut next: BTreeMap<CanonicalForm, Multigraph> = BTreeMap::new();
        for g in levels.last().unwrap() {
            let n = g.vertex_count();
            let mut consider = |candidate: Multigraph| {
                let form = canonical_form(&candidate);
                next.entry(form.clone()).or_insert_with(|| {
                    Multigraph::new(form.vertex_count, form.edges.clone()).unwrap()
                });
            };
            // new edge or loop between existing vertices
            for u in 0..n {
                for v in u..n {
                    let mut edges = g.edges().to_vec();
                    edges.push((u, v));
                    consider(Multigraph::new(n, edges).unwrap());
                }
            }
            // fresh pendant vertex
            for u in 0..n {
                let mut edges = g.edges().to_vec();
                edges.push((u, n));
                consider(Multigraph::new(n + 1, edges).unwrap());
            }
        }
        levels.push(next.into_values().collect());
    }
    levels
}

/// Flat list of all connected multigraphs with at most `max_edges` edges.
pub fn connected_multigraphs(max_edges: usize) -> Vec<Multigraph> {
    connected_multigraphs_by_edges(max_edges).into_iter().flatten().collect()
}
