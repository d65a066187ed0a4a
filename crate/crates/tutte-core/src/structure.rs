//! Structural objects derived from the rank oracle: flats, hyperplanes,
//! circuits, cocircuits, D-sets, and the spanning/independent profiles.
//!
//! All enumerations here iterate every subset of the ground set and are
//! gated by [`crate::EXHAUSTIVE_LIMIT`]. Output lists are sorted by mask
//! value, so results are canonical regardless of evaluation order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::matroid::{Matroid, RankTable};
use crate::subset::{all_subsets, SubsetMask};

/// All flats of a matroid, with the hyperplane sublist and the table
/// `f[k] = max{|F| : F a flat of rank r-k}`.
///
/// `f` has an entry for every `1 <= k <= r` (a flat of every rank below `r`
/// always exists), and no others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatReport {
    pub flats: Vec<SubsetMask>,
    pub hyperplanes: Vec<SubsetMask>,
    pub f: BTreeMap<usize, usize>,
}

impl FlatReport {
    /// Size of the largest hyperplane, when one exists.
    pub fn f1(&self) -> Option<usize> {
        self.f.get(&1).copied()
    }

    /// Size of the largest rank-`(r-2)` flat, when one exists.
    pub fn f2(&self) -> Option<usize> {
        self.f.get(&2).copied()
    }
}

/// All circuits and cocircuits, with the table
/// `d[k] = min{|A| : A a D-set of corank k}`.
///
/// Cocircuits are computed as complements of hyperplanes. `d` has an entry
/// for every `1 <= k <= |X| - r` and no others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitReport {
    pub circuits: Vec<SubsetMask>,
    pub cocircuits: Vec<SubsetMask>,
    pub d: BTreeMap<usize, usize>,
}

impl CircuitReport {
    /// Minimum circuit size (girth of a graph's cycle matroid).
    pub fn d1(&self) -> Option<usize> {
        self.d.get(&1).copied()
    }

    pub fn d2(&self) -> Option<usize> {
        self.d.get(&2).copied()
    }
}

/// Spanning-set counts by cardinality: `counts[t]` is the number of subsets
/// of size `t` with full rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaProfile {
    counts: Vec<u64>,
}

impl SigmaProfile {
    /// Number of spanning sets with `t` elements (0 beyond the ground size).
    pub fn count(&self, t: usize) -> u64 {
        self.counts.get(t).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Total number of spanning sets.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Independent-set counts by cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauProfile {
    counts: Vec<u64>,
}

impl TauProfile {
    pub fn count(&self, t: usize) -> u64 {
        self.counts.get(t).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }
}

fn is_flat(table: &RankTable, subset: SubsetMask) -> bool {
    let n = table.size();
    let rank = table.rank(subset);
    subset.complement_in(n).iter().all(|e| table.rank(subset.with(e)) > rank)
}

/// Enumerates all flats, hyperplanes and the `f_k` table.
pub fn enumerate_flats(m: &Matroid) -> Result<FlatReport, Error> {
    let table = m.rank_table()?;
    Ok(enumerate_flats_from_table(&table))
}

pub(crate) fn enumerate_flats_from_table(table: &RankTable) -> FlatReport {
    let n = table.size();
    let r = table.full_rank();
    let mut flats = Vec::new();
    let mut hyperplanes = Vec::new();
    let mut f: BTreeMap<usize, usize> = BTreeMap::new();
    for subset in all_subsets(n) {
        if !is_flat(table, subset) {
            continue;
        }
        flats.push(subset);
        let rank = table.rank(subset);
        if rank < r {
            let k = r - rank;
            let best = f.entry(k).or_insert(0);
            *best = (*best).max(subset.len());
            if k == 1 {
                hyperplanes.push(subset);
            }
        }
    }
    FlatReport { flats, hyperplanes, f }
}

/// D-set membership: `rk(A - e) = rk(A)` for every `e` in `A`.
///
/// For cycle matroids these are exactly the bridgeless edge sets.
pub fn is_d_set(m: &Matroid, subset: SubsetMask) -> bool {
    let rank = m.rank(subset);
    subset.iter().all(|e| m.rank(subset.without(e)) == rank)
}

/// Enumerates circuits and cocircuits and fills the `d_k` table.
pub fn enumerate_circuits(m: &Matroid) -> Result<CircuitReport, Error> {
    let table = m.rank_table()?;
    Ok(enumerate_circuits_from_table(&table))
}

pub(crate) fn enumerate_circuits_from_table(table: &RankTable) -> CircuitReport {
    let n = table.size();
    let mut circuits = Vec::new();
    let mut d: BTreeMap<usize, usize> = BTreeMap::new();
    for subset in all_subsets(n) {
        if subset.is_empty() {
            continue;
        }
        let rank = table.rank(subset);
        let in_d = subset.iter().all(|e| table.rank(subset.without(e)) == rank);
        if in_d {
            let corank = subset.len() - rank;
            if corank >= 1 {
                let entry = d.entry(corank).or_insert(usize::MAX);
                *entry = (*entry).min(subset.len());
            }
        }
        if rank + 1 == subset.len() && in_d {
            circuits.push(subset);
        }
    }
    let mut cocircuits: Vec<SubsetMask> = enumerate_flats_from_table(table)
        .hyperplanes
        .iter()
        .map(|h| h.complement_in(n))
        .collect();
    cocircuits.sort();
    CircuitReport { circuits, cocircuits, d }
}

/// Counts spanning sets by cardinality.
pub fn sigma_profile(m: &Matroid) -> Result<SigmaProfile, Error> {
    let table = m.rank_table()?;
    let n = table.size();
    let r = table.full_rank();
    let mut counts = alloc::vec![0u64; n + 1];
    for subset in all_subsets(n) {
        if table.rank(subset) == r {
            counts[subset.len()] += 1;
        }
    }
    Ok(SigmaProfile { counts })
}

/// Counts independent sets by cardinality.
pub fn tau_profile(m: &Matroid) -> Result<TauProfile, Error> {
    let table = m.rank_table()?;
    let n = table.size();
    let mut counts = alloc::vec![0u64; n + 1];
    for subset in all_subsets(n) {
        if table.rank(subset) == subset.len() {
            counts[subset.len()] += 1;
        }
    }
    Ok(TauProfile { counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;

    #[test]
    fn flats_of_small_uniforms() {
        let u11 = Matroid::uniform(1, 1).unwrap();
        let report = enumerate_flats(&u11).unwrap();
        assert_eq!(report.flats, vec![SubsetMask::EMPTY, SubsetMask::full(1)]);
        assert_eq!(report.hyperplanes, vec![SubsetMask::EMPTY]);
        assert_eq!(report.f1(), Some(0));

        let u23 = Matroid::uniform(2, 3).unwrap();
        let report = enumerate_flats(&u23).unwrap();
        assert_eq!(report.hyperplanes.len(), 3);
        assert!(report.hyperplanes.iter().all(|h| h.len() == 1));
        assert_eq!(report.f1(), Some(1));
        assert_eq!(report.f2(), Some(0));
    }

    #[test]
    fn flats_of_k4() {
        let m = Multigraph::complete(4).cycle_matroid();
        let report = enumerate_flats(&m).unwrap();
        let sizes: Vec<usize> = report.hyperplanes.iter().map(|h| h.len()).collect();
        assert_eq!(report.hyperplanes.len(), 7);
        assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 4); // triangles
        assert_eq!(sizes.iter().filter(|&&s| s == 2).count(), 3); // perfect matchings
        assert_eq!(report.f1(), Some(3));
        assert_eq!(report.f2(), Some(1));
    }

    #[test]
    fn circuits_of_small_matroids() {
        let u01 = Matroid::uniform(0, 1).unwrap();
        let report = enumerate_circuits(&u01).unwrap();
        assert_eq!(report.circuits, vec![SubsetMask::full(1)]);
        assert_eq!(report.d1(), Some(1));

        let u23 = Matroid::uniform(2, 3).unwrap();
        let report = enumerate_circuits(&u23).unwrap();
        assert_eq!(report.circuits, vec![SubsetMask::full(3)]);
        assert_eq!(report.d1(), Some(3));
        assert_eq!(report.d2(), None);
    }

    #[test]
    fn circuits_of_k4() {
        let m = Multigraph::complete(4).cycle_matroid();
        let report = enumerate_circuits(&m).unwrap();
        let sizes: Vec<usize> = report.circuits.iter().map(|c| c.len()).collect();
        assert_eq!(report.circuits.len(), 7);
        assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 4);
        assert_eq!(sizes.iter().filter(|&&s| s == 4).count(), 3);
        assert_eq!(report.d1(), Some(3));
        assert_eq!(report.d2(), Some(5));
    }

    #[test]
    fn cocircuits_complement_hyperplanes() {
        let m = Multigraph::complete(4).cycle_matroid();
        let flats = enumerate_flats(&m).unwrap();
        let circuits = enumerate_circuits(&m).unwrap();
        let mut complements: Vec<SubsetMask> =
            flats.hyperplanes.iter().map(|h| h.complement_in(6)).collect();
        complements.sort();
        assert_eq!(circuits.cocircuits, complements);
    }

    #[test]
    fn profiles_of_uniforms() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(sigma_profile(&u23).unwrap().counts(), &[0, 0, 3, 1]);
        assert_eq!(tau_profile(&u23).unwrap().counts(), &[1, 3, 3, 0]);

        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(sigma_profile(&u24).unwrap().counts(), &[0, 0, 6, 4, 1]);

        let u01 = Matroid::uniform(0, 1).unwrap();
        assert_eq!(tau_profile(&u01).unwrap().counts(), &[1, 0]);
        assert_eq!(sigma_profile(&u01).unwrap().counts(), &[1, 1]);
    }

    #[test]
    fn empty_matroid_profiles() {
        let empty = Matroid::uniform(0, 0).unwrap();
        assert_eq!(sigma_profile(&empty).unwrap().counts(), &[1]);
        assert_eq!(tau_profile(&empty).unwrap().counts(), &[1]);
        let flats = enumerate_flats(&empty).unwrap();
        assert_eq!(flats.flats, vec![SubsetMask::EMPTY]);
        assert!(flats.hyperplanes.is_empty());
        assert!(enumerate_circuits(&empty).unwrap().circuits.is_empty());
    }

    #[test]
    fn d_set_membership() {
        let m = Multigraph::complete(4).cycle_matroid();
        // a triangle is bridgeless
        assert!(is_d_set(&m, SubsetMask::from_elements([0, 1, 3])));
        // a single edge is a bridge
        assert!(!is_d_set(&m, SubsetMask::from_elements([0])));
        // the empty set is vacuously a D-set
        assert!(is_d_set(&m, SubsetMask::EMPTY));
    }

    #[test]
    fn duality_identities_on_k4() {
        let m = Multigraph::complete(4).cycle_matroid();
        let dual = m.dual();
        let circuits = enumerate_circuits(&m).unwrap();
        let dual_flats = enumerate_flats(&dual).unwrap();
        // d_k(M) + f_k(M*) = |X|
        assert_eq!(circuits.d1().unwrap() + dual_flats.f1().unwrap(), 6);
        assert_eq!(circuits.d2().unwrap() + dual_flats.f2().unwrap(), 6);

        // sigma/tau duality: tau_t(M) = sigma_{n-t}(M*)
        let tau = tau_profile(&m).unwrap();
        let sigma_dual = sigma_profile(&dual).unwrap();
        for t in 0..=6 {
            assert_eq!(tau.count(t), sigma_dual.count(6 - t));
        }
    }
}
