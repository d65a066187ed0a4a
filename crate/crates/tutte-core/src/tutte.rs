//! The three Tutte polynomial engines.
//!
//! * [`tutte_subset_expansion`]: sums `(x-1)^(r-rk(A)) (y-1)^(|A|-rk(A))`
//!   over all subsets of the ground set. Works for any matroid within the
//!   exhaustive limit; the reference engine.
//! * [`tutte_by_activities`]: enumerates bases and counts internal/external
//!   activities with respect to the ground-set order.
//! * [`tutte_deletion_contraction`]: the standard graph recurrence with a
//!   canonical-form memo cache; the only engine that scales past the
//!   exhaustive limit.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::canon;
use crate::error::Error;
use crate::graph::Multigraph;
use crate::matroid::Matroid;
use crate::poly::{power_of_z_minus_1, BivariatePolynomial, SignedBivariate};
use crate::subset::{all_subsets, SubsetMask};

/// Tutte polynomial by subset expansion.
///
/// Subsets are grouped by `(rank, cardinality)` first, so the polynomial
/// work is independent of `2^n`.
pub fn tutte_subset_expansion(m: &Matroid) -> Result<BivariatePolynomial, Error> {
    let table = m.rank_table()?;
    let n = m.size();
    let r = table.full_rank();
    let mut class_counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for subset in all_subsets(n) {
        *class_counts.entry((table.rank(subset), subset.len())).or_insert(0) += 1;
    }
    let mut acc = SignedBivariate::default();
    for ((rank, card), count) in class_counts {
        let x_row = power_of_z_minus_1(r - rank);
        let y_row = power_of_z_minus_1(card - rank);
        let count = BigInt::from(count);
        for (i, xc) in x_row.iter().enumerate() {
            for (j, yc) in y_row.iter().enumerate() {
                acc.add_term(i, j, xc * yc * &count);
            }
        }
    }
    Ok(acc.into_nonnegative())
}

/// A base together with its activity counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivityRecord {
    pub base: SubsetMask,
    pub internal_activity: usize,
    pub external_activity: usize,
}

/// Tutte polynomial by base activities, with the per-base records.
///
/// An element `e` outside base `B` is externally active when no smaller
/// `f` in `B` makes `B - f + e` a base; `e` in `B` is internally active
/// when no smaller `f` outside `B` makes `B - e + f` a base. "Smaller"
/// refers to the fixed element order of the ground set.
pub fn tutte_by_activities(
    m: &Matroid,
) -> Result<(BivariatePolynomial, Vec<ActivityRecord>), Error> {
    let table = m.rank_table()?;
    let n = m.size();
    let r = table.full_rank();
    let bases: Vec<SubsetMask> =
        all_subsets(n).filter(|s| s.len() == r && table.rank(*s) == r).collect();
    let base_set: alloc::collections::BTreeSet<SubsetMask> = bases.iter().copied().collect();

    let mut poly = BivariatePolynomial::zero();
    let mut records = Vec::with_capacity(bases.len());
    for &base in &bases {
        let outside = base.complement_in(n);
        let external_activity = outside
            .iter()
            .filter(|&e| {
                !base.iter().any(|f| f < e && base_set.contains(&base.without(f).with(e)))
            })
            .count();
        let internal_activity = base
            .iter()
            .filter(|&e| {
                !outside.iter().any(|f| f < e && base_set.contains(&base.without(e).with(f)))
            })
            .count();
        poly.add_term(internal_activity, external_activity, BigUint::one());
        records.push(ActivityRecord { base, internal_activity, external_activity });
    }
    Ok((poly, records))
}

/// How deletion–contraction picks its pivot edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotRule {
    /// Highest-index non-loop non-bridge edge; the deterministic default.
    HighestIndex,
    /// Pseudo-random pick among the candidates, seeded; exists so tests can
    /// assert the result does not depend on pivot order.
    Seeded(u64),
}

#[derive(Debug, Clone, Copy)]
pub struct DeletionContractionOptions {
    pub pivot: PivotRule,
    pub memoize: bool,
}

impl Default for DeletionContractionOptions {
    fn default() -> Self {
        DeletionContractionOptions { pivot: PivotRule::HighestIndex, memoize: true }
    }
}

/// Tutte polynomial of a multigraph by deletion and contraction.
///
/// Once every edge is a loop or a bridge the value is
/// `x^bridges y^loops`; otherwise `T(G) = T(G - e) + T(G / e)` for a
/// non-loop non-bridge pivot `e`. Results are memoized under the canonical
/// form from [`canon::cache_key`]; the cache is a pure performance hint.
pub fn tutte_deletion_contraction(g: &Multigraph) -> BivariatePolynomial {
    tutte_deletion_contraction_with(g, DeletionContractionOptions::default())
}

pub fn tutte_deletion_contraction_with(
    g: &Multigraph,
    options: DeletionContractionOptions,
) -> BivariatePolynomial {
    let mut memo = BTreeMap::new();
    let mut rng = SplitMix64::new(match options.pivot {
        PivotRule::HighestIndex => 0,
        PivotRule::Seeded(seed) => seed,
    });
    recurse(g, &options, &mut memo, &mut rng)
}

fn recurse(
    g: &Multigraph,
    options: &DeletionContractionOptions,
    memo: &mut BTreeMap<canon::CanonicalForm, BivariatePolynomial>,
    rng: &mut SplitMix64,
) -> BivariatePolynomial {
    let mut loops = 0usize;
    let mut bridges = 0usize;
    let mut candidates = Vec::new();
    for e in 0..g.edge_count() {
        if g.is_loop(e) {
            loops += 1;
        } else if g.is_bridge(e) {
            bridges += 1;
        } else {
            candidates.push(e);
        }
    }
    if candidates.is_empty() {
        return BivariatePolynomial::monomial(bridges, loops);
    }

    // caching tiny graphs costs more than recomputing them
    let key = if options.memoize && g.edge_count() >= 4 { canon::cache_key(g) } else { None };
    if let Some(k) = &key {
        if let Some(hit) = memo.get(k) {
            return hit.clone();
        }
    }

    let pivot = match options.pivot {
        PivotRule::HighestIndex => *candidates.last().unwrap(),
        PivotRule::Seeded(_) => candidates[rng.next_below(candidates.len())],
    };
    let mut result = recurse(&g.delete_edge(pivot), options, memo, rng);
    result.add_assign(&recurse(&g.contract_edge(pivot), options, memo, rng));

    if let Some(k) = key {
        memo.insert(k, result.clone());
    }
    result
}

/// Checks `T_M(x, y) = T_M*(y, x)` by expanding both sides.
pub fn duality_check(m: &Matroid) -> Result<crate::Verdict<DualityMismatch>, Error> {
    let primal = tutte_subset_expansion(m)?;
    let dual = tutte_subset_expansion(&m.dual())?;
    let swapped = dual.swap_variables();
    if primal == swapped {
        Ok(crate::Verdict::Pass)
    } else {
        let witness = first_difference(&primal, &swapped);
        Ok(crate::Verdict::Fail(DualityMismatch {
            term: witness,
            primal: primal.coeff(witness.0, witness.1),
            dual_swapped: swapped.coeff(witness.0, witness.1),
        }))
    }
}

/// The first `(i, j)` where two polynomials disagree.
pub(crate) fn first_difference(
    a: &BivariatePolynomial,
    b: &BivariatePolynomial,
) -> (usize, usize) {
    let keys: alloc::collections::BTreeSet<(usize, usize)> = a
        .terms()
        .map(|(i, j, _)| (i, j))
        .chain(b.terms().map(|(i, j, _)| (i, j)))
        .collect();
    keys.into_iter().find(|&(i, j)| a.coeff(i, j) != b.coeff(i, j)).unwrap_or((0, 0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityMismatch {
    pub term: (usize, usize),
    pub primal: BigUint,
    pub dual_swapped: BigUint,
}

/// splitmix64; plenty for pivot shuffling.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn next_below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}
