//! Matroids over small ordered ground sets, backed by a rank oracle.
//!
//! A [`Matroid`] pairs a [`GroundSet`] with one of a few rank-oracle kinds:
//! uniform, explicit base list, cycle matroid of a multigraph, or the dual
//! of another matroid. Everything else (flats, circuits, profiles, Tutte
//! polynomials) is derived from rank queries.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{BasesViolation, Error};
use crate::graph::Multigraph;
use crate::subset::{all_subsets, SubsetMask};
use crate::EXHAUSTIVE_LIMIT;

/// An ordered ground set `{0, .., size-1}`; the element order is the index
/// order and never changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    size: usize,
}

impl GroundSet {
    pub fn new(size: usize) -> Self {
        GroundSet { size }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.size)
    }

    pub fn contains(&self, subset: SubsetMask) -> bool {
        subset.is_subset_of(self.full_mask())
    }
}

/// Provenance of a matroid's rank oracle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MatroidKind {
    Uniform { rank: usize },
    ExplicitBases { bases: Vec<SubsetMask> },
    CycleOf { graph: Multigraph },
    DualOf { inner: Box<Matroid> },
}

/// A matroid `(X, rk)` on an ordered ground set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    ground: GroundSet,
    kind: MatroidKind,
}

impl Matroid {
    /// Uniform matroid `U_{r,n}`: `rk(A) = min(|A|, r)`.
    pub fn uniform(rank: usize, n: usize) -> Result<Self, Error> {
        if rank > n {
            return Err(Error::InvalidParameters(format!(
                "uniform matroid needs rank <= ground size, got rank {rank} on {n} elements"
            )));
        }
        Ok(Matroid { ground: GroundSet::new(n), kind: MatroidKind::Uniform { rank } })
    }

    /// Matroid given by an explicit base list; validates the base-exchange
    /// axiom pairwise and reports a violating pair on failure.
    pub fn from_bases(n: usize, bases: Vec<SubsetMask>) -> Result<Self, Error> {
        let ground = GroundSet::new(n);
        if bases.is_empty() {
            return Err(Error::InvalidBases(BasesViolation::Empty));
        }
        for &b in &bases {
            if !ground.contains(b) {
                return Err(Error::InvalidBases(BasesViolation::OutOfGround {
                    base: b,
                    ground_size: n,
                }));
            }
        }
        let cardinality = bases[0].len();
        for &b in &bases[1..] {
            if b.len() != cardinality {
                return Err(Error::InvalidBases(BasesViolation::UnequalCardinality {
                    first: bases[0],
                    second: b,
                }));
            }
        }
        let mut bases = bases;
        bases.sort();
        bases.dedup();
        // exchange: for all B1, B2 and e in B1 - B2 there is f in B2 - B1
        // with B1 - e + f a base
        for &b1 in &bases {
            for &b2 in &bases {
                for e in (b1 & b2.complement_in(n)).iter() {
                    let found = (b2 & b1.complement_in(n))
                        .iter()
                        .any(|f| bases.binary_search(&b1.without(e).with(f)).is_ok());
                    if !found {
                        return Err(Error::InvalidBases(BasesViolation::ExchangeFailure {
                            from: b1,
                            to: b2,
                            removed: e,
                        }));
                    }
                }
            }
        }
        Ok(Matroid { ground, kind: MatroidKind::ExplicitBases { bases } })
    }

    /// Cycle matroid of a multigraph: ground set is the edge list,
    /// `rk(A) = |V| - k(A)`.
    pub fn cycle_of(graph: Multigraph) -> Self {
        Matroid {
            ground: GroundSet::new(graph.edge_count()),
            kind: MatroidKind::CycleOf { graph },
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.size
    }

    pub fn kind(&self) -> &MatroidKind {
        &self.kind
    }

    /// Rank of a subset. Panics if `subset` leaves the ground set.
    pub fn rank(&self, subset: SubsetMask) -> usize {
        assert!(self.ground.contains(subset), "subset outside ground set");
        match &self.kind {
            MatroidKind::Uniform { rank } => subset.len().min(*rank),
            MatroidKind::ExplicitBases { bases } => {
                bases.iter().map(|&b| (b & subset).len()).max().unwrap_or(0)
            }
            MatroidKind::CycleOf { graph } => graph.cycle_rank(subset),
            MatroidKind::DualOf { inner } => {
                let full = self.ground.full_mask();
                subset.len() + inner.rank(full ^ subset) - inner.full_rank()
            }
        }
    }

    /// Rank of the whole ground set.
    pub fn full_rank(&self) -> usize {
        self.rank(self.ground.full_mask())
    }

    /// Corank (nullity) of the whole ground set: `|X| - rk(X)`.
    pub fn corank(&self) -> usize {
        self.size() - self.full_rank()
    }

    /// Closure of `A`: all elements whose addition keeps the rank.
    pub fn closure(&self, subset: SubsetMask) -> SubsetMask {
        let rank = self.rank(subset);
        let mut closed = subset;
        for e in 0..self.size() {
            if !subset.contains(e) && self.rank(subset.with(e)) == rank {
                closed = closed.with(e);
            }
        }
        closed
    }

    /// The dual matroid, with `rk*(A) = |A| + rk(X - A) - rk(X)`.
    ///
    /// Dualizing twice returns (a clone of) the original, so the oracle of a
    /// double dual is identical to the original's on every subset.
    pub fn dual(&self) -> Matroid {
        match &self.kind {
            MatroidKind::DualOf { inner } => (**inner).clone(),
            _ => Matroid {
                ground: self.ground,
                kind: MatroidKind::DualOf { inner: Box::new(self.clone()) },
            },
        }
    }

    /// Precomputed ranks for every subset; the backbone of the exhaustive
    /// enumerations. Fails above [`EXHAUSTIVE_LIMIT`].
    pub fn rank_table(&self) -> Result<RankTable, Error> {
        let n = self.size();
        if n > EXHAUSTIVE_LIMIT {
            return Err(Error::SizeLimit { size: n, limit: EXHAUSTIVE_LIMIT });
        }
        let ranks = all_subsets(n).map(|s| self.rank(s) as u8).collect();
        Ok(RankTable { size: n, ranks })
    }

    /// Exhaustively checks normalization, monotonicity (unit steps) and
    /// submodularity (local pair form); the local forms imply the global
    /// axioms.
    pub fn check_rank_axioms(&self) -> Result<crate::Verdict<AxiomViolation>, Error> {
        let n = self.size();
        let table = self.rank_table()?;
        if table.rank(SubsetMask::EMPTY) != 0 {
            return Ok(crate::Verdict::Fail(AxiomViolation::Normalization {
                rank_of_empty: table.rank(SubsetMask::EMPTY),
            }));
        }
        for a in all_subsets(n) {
            let ra = table.rank(a);
            if ra > a.len() {
                return Ok(crate::Verdict::Fail(AxiomViolation::Bounds { set: a, rank: ra }));
            }
            for e in a.complement_in(n).iter() {
                let rae = table.rank(a.with(e));
                if rae < ra {
                    return Ok(crate::Verdict::Fail(AxiomViolation::Monotonicity {
                        smaller: a,
                        larger: a.with(e),
                        rank_smaller: ra,
                        rank_larger: rae,
                    }));
                }
                for f in a.complement_in(n).iter() {
                    if f <= e {
                        continue;
                    }
                    let raf = table.rank(a.with(f));
                    let raef = table.rank(a.with(e).with(f));
                    if rae + raf < raef + ra {
                        return Ok(crate::Verdict::Fail(AxiomViolation::Submodularity {
                            first: a.with(e),
                            second: a.with(f),
                        }));
                    }
                }
            }
        }
        Ok(crate::Verdict::Pass)
    }
}

/// Ranks of all `2^n` subsets, indexed by mask bits.
pub struct RankTable {
    size: usize,
    ranks: Vec<u8>,
}

impl RankTable {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rank(&self, subset: SubsetMask) -> usize {
        self.ranks[subset.bits() as usize] as usize
    }

    pub fn full_rank(&self) -> usize {
        self.rank(SubsetMask::full(self.size))
    }
}

/// Why a rank function is not a matroid rank function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    Normalization { rank_of_empty: usize },
    Bounds { set: SubsetMask, rank: usize },
    Monotonicity { smaller: SubsetMask, larger: SubsetMask, rank_smaller: usize, rank_larger: usize },
    /// `rk(A) + rk(B) < rk(A ∪ B) + rk(A ∩ B)` for the named pair.
    Submodularity { first: SubsetMask, second: SubsetMask },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Normalization { rank_of_empty } => {
                write!(f, "rk(∅) = {rank_of_empty}, expected 0")
            }
            AxiomViolation::Bounds { set, rank } => {
                write!(f, "rk({set}) = {rank} exceeds |{set}| = {}", set.len())
            }
            AxiomViolation::Monotonicity { smaller, larger, rank_smaller, rank_larger } => {
                write!(
                    f,
                    "monotonicity fails: rk({smaller}) = {rank_smaller} but rk({larger}) = {rank_larger}"
                )
            }
            AxiomViolation::Submodularity { first, second } => {
                write!(f, "submodularity fails on {first} and {second}")
            }
        }
    }
}

/// Checks the rank axioms for an arbitrary oracle function on `n` elements.
///
/// Same checks as [`Matroid::check_rank_axioms`], usable for oracles that
/// are not (and may fail to be) matroids.
pub fn check_rank_axioms_fn<F>(n: usize, oracle: F) -> Result<crate::Verdict<AxiomViolation>, Error>
where
    F: Fn(SubsetMask) -> usize,
{
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::SizeLimit { size: n, limit: EXHAUSTIVE_LIMIT });
    }
    if oracle(SubsetMask::EMPTY) != 0 {
        return Ok(crate::Verdict::Fail(AxiomViolation::Normalization {
            rank_of_empty: oracle(SubsetMask::EMPTY),
        }));
    }
    for a in all_subsets(n) {
        let ra = oracle(a);
        if ra > a.len() {
            return Ok(crate::Verdict::Fail(AxiomViolation::Bounds { set: a, rank: ra }));
        }
        for e in a.complement_in(n).iter() {
            let rae = oracle(a.with(e));
            if rae < ra {
                return Ok(crate::Verdict::Fail(AxiomViolation::Monotonicity {
                    smaller: a,
                    larger: a.with(e),
                    rank_smaller: ra,
                    rank_larger: rae,
                }));
            }
            for f in a.complement_in(n).iter() {
                if f <= e {
                    continue;
                }
                if oracle(a.with(e)) + oracle(a.with(f)) < oracle(a.with(e).with(f)) + ra {
                    return Ok(crate::Verdict::Fail(AxiomViolation::Submodularity {
                        first: a.with(e),
                        second: a.with(f),
                    }));
                }
            }
        }
    }
    Ok(crate::Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Verdict;

    fn ranks_agree(a: &Matroid, b: &Matroid) -> bool {
        a.size() == b.size() && all_subsets(a.size()).all(|s| a.rank(s) == b.rank(s))
    }

    #[test]
    fn uniform_basics() {
        let loop_m = Matroid::uniform(0, 1).unwrap();
        assert_eq!(loop_m.rank(SubsetMask::from_elements([0])), 0);

        let coloop = Matroid::uniform(1, 1).unwrap();
        assert_eq!(coloop.rank(SubsetMask::from_elements([0])), 1);

        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.rank(SubsetMask::from_elements([0, 1])), 2);
        assert_eq!(u23.rank(SubsetMask::full(3)), 2);
        assert_eq!(u23.rank(SubsetMask::EMPTY), 0);

        assert!(matches!(Matroid::uniform(3, 2), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn explicit_bases() {
        let all_pairs: Vec<_> = [
            [0, 1], [0, 2], [1, 2],
        ]
        .iter()
        .map(|p| SubsetMask::from_elements(p.iter().copied()))
        .collect();
        let m = Matroid::from_bases(3, all_pairs).unwrap();
        assert!(ranks_agree(&m, &Matroid::uniform(2, 3).unwrap()));

        let u12 = Matroid::from_bases(
            2,
            vec![SubsetMask::from_elements([0]), SubsetMask::from_elements([1])],
        )
        .unwrap();
        assert_eq!(u12.rank(SubsetMask::full(2)), 1);

        let err = Matroid::from_bases(
            2,
            vec![SubsetMask::from_elements([0, 1]), SubsetMask::from_elements([0])],
        );
        assert!(matches!(
            err,
            Err(Error::InvalidBases(BasesViolation::UnequalCardinality { .. }))
        ));

        let err = Matroid::from_bases(4, vec![
            SubsetMask::from_elements([0, 1]),
            SubsetMask::from_elements([2, 3]),
        ]);
        assert!(matches!(
            err,
            Err(Error::InvalidBases(BasesViolation::ExchangeFailure { .. }))
        ));

        assert!(matches!(
            Matroid::from_bases(3, vec![]),
            Err(Error::InvalidBases(BasesViolation::Empty))
        ));
    }

    #[test]
    fn dual_rank_formula() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        let dual = u23.dual();
        assert_eq!(dual.rank(SubsetMask::full(3)), 1);
        assert!(ranks_agree(&dual, &Matroid::uniform(1, 3).unwrap()));
        assert!(ranks_agree(&u23.dual().dual(), &u23));

        let coloop = Matroid::uniform(1, 1).unwrap();
        assert!(ranks_agree(&coloop.dual(), &Matroid::uniform(0, 1).unwrap()));
    }

    #[test]
    fn closures() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.closure(SubsetMask::from_elements([0])), SubsetMask::from_elements([0]));

        let k3 = Multigraph::complete(3).cycle_matroid();
        assert_eq!(k3.closure(SubsetMask::from_elements([0, 1])), SubsetMask::full(3));

        // closure of the empty set is the set of loops
        let with_loops = Matroid::uniform(0, 2).unwrap();
        assert_eq!(with_loops.closure(SubsetMask::EMPTY), SubsetMask::full(2));
        assert_eq!(u23.closure(SubsetMask::EMPTY), SubsetMask::EMPTY);
    }

    #[test]
    fn cycle_matroid_of_k3_is_u23() {
        let k3 = Multigraph::complete(3).cycle_matroid();
        assert!(ranks_agree(&k3, &Matroid::uniform(2, 3).unwrap()));

        let single_loop = Multigraph::new(1, vec![(0, 0)]).unwrap().cycle_matroid();
        assert!(ranks_agree(&single_loop, &Matroid::uniform(0, 1).unwrap()));

        let parallel = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap().cycle_matroid();
        assert!(ranks_agree(&parallel, &Matroid::uniform(1, 2).unwrap()));
    }

    #[test]
    fn axioms_hold_for_constructions() {
        for m in [
            Matroid::uniform(2, 4).unwrap(),
            Matroid::uniform(0, 0).unwrap(),
            Multigraph::complete(4).cycle_matroid(),
            Multigraph::complete(4).cycle_matroid().dual(),
        ] {
            assert_eq!(m.check_rank_axioms().unwrap(), Verdict::Pass);
        }
    }

    #[test]
    fn broken_oracle_is_caught() {
        // rk(A) = |A| except rk(X) = 1: fails on 3 elements
        let verdict = check_rank_axioms_fn(3, |s| {
            if s == SubsetMask::full(3) {
                1
            } else {
                s.len()
            }
        })
        .unwrap();
        assert!(matches!(
            verdict,
            Verdict::Fail(AxiomViolation::Monotonicity { .. })
                | Verdict::Fail(AxiomViolation::Submodularity { .. })
        ));
    }

    #[test]
    fn size_limit_enforced() {
        let big = Matroid::uniform(2, 30).unwrap();
        assert!(matches!(big.rank_table(), Err(Error::SizeLimit { size: 30, limit: 24 })));
    }
}
