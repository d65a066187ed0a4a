//! Multigraphs (loops and parallel edges allowed) and their cycle matroids.
//!
//! The edge list order is significant: it is the ground-set order of the
//! cycle matroid, so edge `i` of the graph is element `i` of the matroid.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;
use crate::matroid::Matroid;
use crate::structure;
use crate::subset::SubsetMask;

/// An undirected multigraph on vertices `0..vertex_count`.
///
/// `u == v` is a loop; repeated pairs are parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    /// Builds a multigraph, validating endpoint indices.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidParameters(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
        }
        Ok(Multigraph { vertex_count, edges })
    }

    /// Complete graph on `n` vertices, edges in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Multigraph { vertex_count: n, edges }
    }

    /// Cycle on `n >= 1` vertices (`n == 1` yields a single loop).
    pub fn cycle(n: usize) -> Self {
        let edges = (0..n).map(|u| (u, (u + 1) % n)).collect();
        Multigraph { vertex_count: n, edges }
    }

    /// Path with `edge_count` edges.
    pub fn path(edge_count: usize) -> Self {
        let edges = (0..edge_count).map(|u| (u, u + 1)).collect();
        Multigraph { vertex_count: edge_count + 1, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn is_loop(&self, index: usize) -> bool {
        let (u, v) = self.edges[index];
        u == v
    }

    /// Number of connected components of the spanning subgraph `(V, A)`.
    ///
    /// Isolated vertices count; loops never merge anything.
    pub fn component_count(&self, edge_subset: SubsetMask) -> usize {
        debug_assert!(edge_subset.is_subset_of(SubsetMask::full(self.edges.len())));
        let mut dsu = DisjointSets::new(self.vertex_count);
        for e in edge_subset.iter() {
            let (u, v) = self.edges[e];
            dsu.union(u, v);
        }
        dsu.set_count()
    }

    /// Components of the full graph.
    pub fn components(&self) -> usize {
        self.component_count(SubsetMask::full(self.edges.len()))
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    /// Rank of an edge subset in the cycle matroid: `|V| - k(A)`.
    pub fn cycle_rank(&self, edge_subset: SubsetMask) -> usize {
        self.vertex_count - self.component_count(edge_subset)
    }

    /// The cycle matroid on the edge list of this graph.
    pub fn cycle_matroid(&self) -> Matroid {
        Matroid::cycle_of(self.clone())
    }

    /// True if edge `index` is a bridge: removing it increases the
    /// component count. Loops are never bridges.
    pub fn is_bridge(&self, index: usize) -> bool {
        if self.is_loop(index) {
            return false;
        }
        let full = SubsetMask::full(self.edges.len());
        self.component_count(full.without(index)) > self.component_count(full)
    }

    /// Deletes edge `index`, keeping all vertices.
    pub fn delete_edge(&self, index: usize) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Multigraph { vertex_count: self.vertex_count, edges }
    }

    /// Contracts non-loop edge `index`: its endpoints merge into one vertex
    /// (the smaller label survives); all other edges are kept, so parallel
    /// edges become loops on the merged vertex.
    pub fn contract_edge(&self, index: usize) -> Multigraph {
        let (u, v) = self.edges[index];
        assert!(u != v, "cannot contract a loop");
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let map = |w: usize| {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, &(a, b))| {
                let (a, b) = (map(a), map(b));
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        Multigraph { vertex_count: self.vertex_count - 1, edges }
    }

    /// Per-vertex loop counts and neighbor multiplicities, for refinement
    /// and canonical forms.
    pub(crate) fn adjacency_multiset(&self) -> Vec<(usize, BTreeMap<usize, usize>)> {
        let mut adj = alloc::vec![(0usize, BTreeMap::new()); self.vertex_count];
        for &(u, v) in &self.edges {
            if u == v {
                adj[u].0 += 1;
            } else {
                *adj[u].1.entry(v).or_insert(0) += 1;
                *adj[v].1.entry(u).or_insert(0) += 1;
            }
        }
        adj
    }
}

/// Union-find over a fixed vertex set.
struct DisjointSets {
    parent: Vec<usize>,
    count: usize,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect(), count: n }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.count -= 1;
        }
    }

    fn set_count(&self) -> usize {
        self.count
    }
}

/// Structural cut data of a multigraph, derived from its cycle matroid.
///
/// `cuts_by_size[i]` lists the minimal edge cuts (bonds) with exactly `i`
/// edges; each is the complement of a hyperplane of the cycle matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutReport {
    pub cuts_by_size: BTreeMap<usize, Vec<SubsetMask>>,
    /// Least size of a nonempty bond; `None` when the graph has at most one
    /// vertex (no cut can exist).
    pub edge_connectivity: Option<usize>,
    /// Shortest cycle length; `None` for forests.
    pub girth: Option<usize>,
    /// Minimum size of a bridgeless edge set of corank 2; `None` when the
    /// corank of the whole edge set is below 2.
    pub h_value: Option<usize>,
}

/// Enumerates all minimal edge cuts of `g`, grouped by size, along with
/// girth and the corank-2 quantity `h`.
pub fn minimal_edge_cuts(g: &Multigraph) -> Result<CutReport, Error> {
    let m = g.edge_count();
    let matroid = g.cycle_matroid();
    let flats = structure::enumerate_flats(&matroid)?;
    let circuits = structure::enumerate_circuits(&matroid)?;

    let mut cuts_by_size: BTreeMap<usize, Vec<SubsetMask>> = BTreeMap::new();
    for &h in &flats.hyperplanes {
        let cut = h.complement_in(m);
        cuts_by_size.entry(cut.len()).or_default().push(cut);
    }
    for group in cuts_by_size.values_mut() {
        group.sort();
    }

    let edge_connectivity = if g.vertex_count() >= 2 {
        cuts_by_size.keys().next().copied()
    } else {
        None
    };

    Ok(CutReport {
        cuts_by_size,
        edge_connectivity,
        girth: circuits.d.get(&1).copied(),
        h_value: circuits.d.get(&2).copied(),
    })
}

/// True iff the graph is `k_plus_1`-edge-connected.
///
/// Requires a connected graph on at least two vertices.
pub fn is_k_edge_connected(g: &Multigraph, k_plus_1: usize) -> Result<bool, Error> {
    if k_plus_1 == 0 {
        return Err(Error::InvalidParameters("connectivity threshold must be positive".into()));
    }
    if g.vertex_count() < 2 {
        return Err(Error::Precondition("graph has fewer than two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    let report = minimal_edge_cuts(g)?;
    let lambda = report.edge_connectivity.unwrap_or(0);
    Ok(lambda >= k_plus_1)
}

/// Direct search for `h`: smallest `|A|` over bridgeless edge sets `A` of
/// corank exactly 2, scanning sizes in ascending order.
///
/// This is the graph-side route; it must agree with `d_2` of the cycle
/// matroid as reported by [`minimal_edge_cuts`].
pub fn h_value_by_search(g: &Multigraph) -> Result<Option<usize>, Error> {
    let m = g.edge_count();
    if m > crate::EXHAUSTIVE_LIMIT {
        return Err(Error::SizeLimit { size: m, limit: crate::EXHAUSTIVE_LIMIT });
    }
    for size in 0..=m {
        let mut best: Option<SubsetMask> = None;
        for mask in crate::subset::all_subsets(m) {
            if mask.len() != size {
                continue;
            }
            let rank = g.cycle_rank(mask);
            if mask.len() - rank != 2 {
                continue;
            }
            // bridgeless within (V, A): every edge of A lies on a cycle of A
            let bridgeless = mask.iter().all(|e| g.cycle_rank(mask.without(e)) == rank);
            if bridgeless {
                best = Some(mask);
                break;
            }
        }
        if best.is_some() {
            return Ok(Some(size));
        }
    }
    Ok(None)
}
