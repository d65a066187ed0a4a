//! Canonical forms of multigraphs.
//!
//! Vertex classes come from iterative neighborhood refinement with
//! multiplicity-labeled edges (loops counted separately). On top of that
//! partition two canonical labelings are built:
//!
//! * [`cache_key`]: the fast form used by the deletion–contraction memo
//!   cache. If refinement leaves tied cells, it tries the lexicographically
//!   least adjacency encoding over all within-cell permutations, but only
//!   while every tied cell has at most [`MAX_TIED_CELL`] vertices and the
//!   total number of permutations stays below [`MAX_PERMUTATIONS`];
//!   otherwise it returns `None` and the caller skips caching.
//! * [`canonical_form`]: the exact form, which individualizes one vertex of
//!   the first tied cell, re-refines, and recurses, minimizing over all
//!   choices. Always succeeds; used where a guaranteed canonical form is
//!   required (catalogue generation, isomorphism tests).
//!
//! Two multigraphs get the same encoding iff they are isomorphic, for
//! whichever of the two routes produced an encoding at all.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::Multigraph;

/// Largest tied cell the cache key will permute exhaustively.
pub const MAX_TIED_CELL: usize = 8;

/// Cap on the total number of labelings the cache key will try.
pub const MAX_PERMUTATIONS: usize = 40_320; // 8!

/// A canonically relabeled multigraph: `edges` sorted, endpoints ordered.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Stable vertex partition: `colors[v]` is the class of `v`, classes are
/// numbered `0..class_count` in a labeling-independent order.
struct Refinement {
    colors: Vec<usize>,
    class_count: usize,
}

fn refine(g: &Multigraph, initial: Option<Vec<usize>>) -> Refinement {
    let n = g.vertex_count();
    let adj = g.adjacency_multiset();
    let mut colors = initial.unwrap_or_else(|| alloc::vec![0; n]);
    let mut class_count = colors.iter().copied().max().map_or(0, |m| m + 1);
    loop {
        // signature: (own color, loop count, sorted (neighbor color, multiplicity))
        let mut signatures: Vec<(usize, usize, Vec<(usize, usize)>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut neighbor_colors: Vec<(usize, usize)> =
                adj[v].1.iter().map(|(&u, &mult)| (colors[u], mult)).collect();
            neighbor_colors.sort_unstable();
            signatures.push((colors[v], adj[v].0, neighbor_colors));
        }
        let mut order: BTreeMap<&(usize, usize, Vec<(usize, usize)>), usize> = BTreeMap::new();
        for sig in &signatures {
            order.insert(sig, 0);
        }
        let new_count = order.len();
        for (rank, (_, slot)) in order.iter_mut().enumerate() {
            *slot = rank;
        }
        let new_colors: Vec<usize> = signatures.iter().map(|s| order[s]).collect();
        if new_count == class_count && new_colors == colors {
            return Refinement { colors, class_count };
        }
        colors = new_colors;
        class_count = new_count;
    }
}

/// Cells of the partition, ordered by class number; each cell lists its
/// vertices in ascending index order.
fn cells_of(r: &Refinement) -> Vec<Vec<usize>> {
    let mut cells = alloc::vec![Vec::new(); r.class_count];
    for (v, &c) in r.colors.iter().enumerate() {
        cells[c].push(v);
    }
    cells
}

/// Encodes the graph under the vertex order given by `position[v]`.
fn encode(g: &Multigraph, position: &[usize]) -> CanonicalForm {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (position[u], position[v]);
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    edges.sort_unstable();
    CanonicalForm { vertex_count: g.vertex_count(), edges }
}

fn positions_from_cell_order(cells: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut position = alloc::vec![0; n];
    let mut next = 0;
    for cell in cells {
        for &v in cell {
            position[v] = next;
            next += 1;
        }
    }
    position
}

/// Memo-cache key: refinement plus bounded within-cell permutation search.
///
/// Returns `None` when the tied cells are too large to search, in which
/// case the instance must not be cached.
pub fn cache_key(g: &Multigraph) -> Option<CanonicalForm> {
    let refinement = refine(g, None);
    let cells = cells_of(&refinement);
    if cells.iter().all(|c| c.len() == 1) {
        return Some(encode(g, &positions_from_cell_order(&cells, g.vertex_count())));
    }
    let mut total: usize = 1;
    for cell in &cells {
        if cell.len() > MAX_TIED_CELL {
            return None;
        }
        total = total.saturating_mul(factorial(cell.len()));
        if total > MAX_PERMUTATIONS {
            return None;
        }
    }

    // per-cell permutation tables, walked with an odometer
    let perms: Vec<Vec<Vec<usize>>> = cells.iter().map(|c| permutations(c)).collect();
    let mut indices = alloc::vec![0usize; cells.len()];
    let mut best: Option<CanonicalForm> = None;
    loop {
        let ordered: Vec<Vec<usize>> =
            indices.iter().enumerate().map(|(ci, &pi)| perms[ci][pi].clone()).collect();
        let encoded = encode(g, &positions_from_cell_order(&ordered, g.vertex_count()));
        if best.as_ref().is_none_or(|b| encoded < *b) {
            best = Some(encoded);
        }
        let mut carry = true;
        for (ci, idx) in indices.iter_mut().enumerate() {
            *idx += 1;
            if *idx < perms[ci].len() {
                carry = false;
                break;
            }
            *idx = 0;
        }
        if carry {
            break;
        }
    }
    best
}

/// Exact canonical form by individualization and refinement.
pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    let refinement = refine(g, None);
    canonical_from(g, refinement)
}

fn canonical_from(g: &Multigraph, refinement: Refinement) -> CanonicalForm {
    let cells = cells_of(&refinement);
    if cells.iter().all(|c| c.len() == 1) {
        return encode(g, &positions_from_cell_order(&cells, g.vertex_count()));
    }
    let target = cells.iter().position(|c| c.len() > 1).unwrap();
    let mut best: Option<CanonicalForm> = None;
    for &v in &cells[target] {
        let mut colors = refinement.colors.clone();
        colors[v] = refinement.class_count; // split v off its cell
        let refined = refine(g, Some(colors));
        let candidate = canonical_from(g, refined);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    best.unwrap()
}

/// True iff the two multigraphs are isomorphic (exact canonical forms match).
pub fn isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        let mut rest: Vec<usize> = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            let mut perm = alloc::vec![first];
            perm.append(&mut tail);
            out.push(perm);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Multigraph, perm: &[usize]) -> Multigraph {
        let edges = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Multigraph::new(g.vertex_count(), edges).unwrap()
    }

    #[test]
    fn relabeled_graphs_share_canonical_form() {
        let g = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 0), (1, 2)]).unwrap();
        let h = relabel(&g, &[2, 0, 3, 1]);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert!(isomorphic(&g, &h));
    }

    #[test]
    fn non_isomorphic_graphs_differ() {
        let path = Multigraph::path(3);
        let star = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&path), canonical_form(&star));

        let double_edge = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let loop_pair = Multigraph::new(2, vec![(0, 0), (0, 1)]).unwrap();
        assert_ne!(canonical_form(&double_edge), canonical_form(&loop_pair));
    }

    #[test]
    fn cycle_canonical_form_is_a_cycle() {
        // C5 is vertex-transitive: refinement alone cannot break ties
        let c5 = Multigraph::cycle(5);
        let form = canonical_form(&c5);
        assert_eq!(form.vertex_count, 5);
        assert_eq!(form.edges.len(), 5);
        let shifted = relabel(&c5, &[3, 4, 0, 1, 2]);
        assert_eq!(form, canonical_form(&shifted));
    }

    #[test]
    fn cache_key_matches_exact_form_distinctions() {
        let graphs = [
            Multigraph::cycle(4),
            Multigraph::path(4),
            Multigraph::complete(4),
            Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap(),
            Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap(),
        ];
        for a in &graphs {
            for b in &graphs {
                if let (Some(ka), Some(kb)) = (cache_key(a), cache_key(b)) {
                    assert_eq!(ka == kb, isomorphic(a, b), "{a:?} vs {b:?}");
                }
            }
        }
    }

    #[test]
    fn cache_key_skips_oversized_cells() {
        // 9 isolated vertices plus an edge elsewhere: the isolated cell has
        // nine tied vertices, beyond the permutation bound
        let mut edges = Vec::new();
        edges.push((9, 10));
        let g = Multigraph::new(11, edges).unwrap();
        assert!(cache_key(&g).is_none());
        // the exact form still works
        let _ = canonical_form(&g);
    }
}
