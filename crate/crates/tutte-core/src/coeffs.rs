//! Closed forms for the coefficients of `T_M(1, y)` and `T_M(x, 1)`:
//! alternating sums over the spanning/independent profiles, corrected
//! binomial forms driven by hyperplanes, cocircuits and circuits, the
//! threshold characterizations, and their specializations to graphs
//! (edge cuts, girth, and the corank-2 quantity `h`).
//!
//! All binomial coefficients use the out-of-range-is-zero convention
//! (`C(n, k) = 0` for `k < 0`, `k > n`, or `n < 0`); the correction sums
//! rely on it to drop their vanishing terms.
//!
//! Validity ranges follow the structural thresholds `f_1, f_2, d_1, d_2`.
//! When the defining family is empty the threshold degenerates: a missing
//! `f_2`/`d_2` widens the range to all indices **provided the formula's
//! driving family (hyperplanes on the `y` side, circuits on the `x` side)
//! is nonempty**. A matroid with no hyperplanes at all (rank 0) or no
//! circuits at all (free) is outside the corrected forms entirely — those
//! operations return a precondition error, and the threshold
//! biconditionals hold vacuously.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;
use crate::graph::{minimal_edge_cuts, Multigraph};
use crate::matroid::Matroid;
use crate::structure;
use crate::tutte::tutte_subset_expansion;
use crate::Verdict;

/// `C(n, k)` with the zero convention for out-of-range arguments.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut c = BigUint::one();
    for t in 1..=k {
        // exact at every step: C(n-k+1..n-k+t) is divisible by t!
        c = c * BigUint::from(n - k + t) / BigUint::from(t);
    }
    c
}

fn binomial_int(n: i64, k: i64) -> BigInt {
    BigInt::from(binomial(n, k))
}

/// Both sides of the alternating binomial identity
/// `sum_{i=k}^{m-p} (-1)^(i-k) C(m, p+i) C(i, k) = C(m-k-1, p-1)`.
///
/// Requires `p + k <= m`. Returns `(lhs, rhs)`; callers decide what to do
/// with them (the two sides are equal whenever `p >= 1`, and property
/// tests pin down exactly where the stated identity holds).
pub fn lemma31_both_sides(m: usize, p: usize, k: usize) -> Result<(BigInt, BigInt), Error> {
    if p + k > m {
        return Err(Error::Precondition(format!(
            "identity requires p + k <= m, got p = {p}, k = {k}, m = {m}"
        )));
    }
    let (m, p, k) = (m as i64, p as i64, k as i64);
    let mut lhs = BigInt::zero();
    for i in k..=m - p {
        let term = binomial_int(m, p + i) * binomial_int(i, k);
        if (i - k) % 2 == 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    Ok((lhs, binomial_int(m - k - 1, p - 1)))
}

/// `[y^j] T_M(1, y)` as the alternating sum over the spanning profile:
/// `sum_{t=j}^{|X|-r} (-1)^(t-j) C(t, j) sigma_{r+t}`.
pub fn coeff_y_sigma(m: &Matroid, j: usize) -> Result<BigInt, Error> {
    let sigma = structure::sigma_profile(m)?;
    let n = m.size();
    let r = m.full_rank();
    let mut total = BigInt::zero();
    for t in j..=n - r {
        let term = binomial_int(t as i64, j as i64) * BigInt::from(sigma.count(r + t));
        if (t - j) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// `[x^i] T_M(x, 1)` as the alternating sum over the independent profile:
/// `sum_{t=i}^{r} (-1)^(t-i) C(t, i) tau_{r-t}`.
pub fn coeff_x_tau(m: &Matroid, i: usize) -> Result<BigInt, Error> {
    let tau = structure::tau_profile(m)?;
    let r = m.full_rank();
    let mut total = BigInt::zero();
    for t in i..=r {
        let term = binomial_int(t as i64, i as i64) * BigInt::from(tau.count(r - t));
        if (t - i) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Validity data for the hyperplane/cocircuit corrected forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YFormulaValidity {
    pub rank: usize,
    /// `f_2`, when a rank-`(r-2)` flat exists (always, for `r >= 2`).
    pub f2: Option<usize>,
    /// Lower exclusive bound on valid `j`: `j > f_2 - r`, or unbounded
    /// when `f_2` is undefined.
    pub threshold: Option<i64>,
}

/// Computes the validity threshold for the `y`-side corrected forms.
///
/// Errors on rank-0 matroids: with no hyperplanes to correct with, the
/// corrected form is not the coefficient at the top index, so no `j` is
/// admitted.
pub fn y_formula_validity(m: &Matroid) -> Result<YFormulaValidity, Error> {
    let r = m.full_rank();
    if r == 0 {
        return Err(Error::Precondition(
            "rank-0 matroid has no hyperplanes; the corrected form does not apply".into(),
        ));
    }
    let flats = structure::enumerate_flats(m)?;
    let f2 = flats.f2();
    Ok(YFormulaValidity {
        rank: r,
        f2,
        threshold: f2.map(|v| v as i64 - r as i64),
    })
}

fn require_valid_j(validity: &YFormulaValidity, j: usize) -> Result<(), Error> {
    if let Some(threshold) = validity.threshold {
        if (j as i64) <= threshold {
            return Err(Error::Precondition(format!(
                "j = {j} outside validity range j > f_2 - r = {threshold}"
            )));
        }
    }
    Ok(())
}

/// `[y^j] T_M(1, y)` by the hyperplane correction, valid for `j > f_2 - r`:
/// `C(|X|-j-1, r-1) - sum over hyperplanes H with |H| > f_2 of C(|H|-j-1, r-1)`.
pub fn coeff_y_hyperplane(m: &Matroid, j: usize) -> Result<BigInt, Error> {
    let validity = y_formula_validity(m)?;
    require_valid_j(&validity, j)?;
    let flats = structure::enumerate_flats(m)?;
    let n = m.size() as i64;
    let r = validity.rank as i64;
    let j = j as i64;
    let mut total = binomial_int(n - j - 1, r - 1);
    for h in &flats.hyperplanes {
        let size = h.len() as i64;
        if validity.f2.is_none_or(|f2| size > f2 as i64) {
            total -= binomial_int(size - j - 1, r - 1);
        }
    }
    Ok(total)
}

/// `[y^j] T_M(1, y)` by the cocircuit correction, the complement form of
/// [`coeff_y_hyperplane`]: `C(|X|-j-1, r-1) - sum over cocircuits C with
/// |C| < |X| - f_2 of C(|X|-|C|-j-1, r-1)`.
pub fn coeff_y_cocircuit(m: &Matroid, j: usize) -> Result<BigInt, Error> {
    let validity = y_formula_validity(m)?;
    require_valid_j(&validity, j)?;
    let circuits = structure::enumerate_circuits(m)?;
    let n = m.size() as i64;
    let r = validity.rank as i64;
    let j = j as i64;
    let mut total = binomial_int(n - j - 1, r - 1);
    for c in &circuits.cocircuits {
        let size = c.len() as i64;
        if validity.f2.is_none_or(|f2| size < n - f2 as i64) {
            total -= binomial_int(n - size - j - 1, r - 1);
        }
    }
    Ok(total)
}

/// The uncorrected closed form `C(|X|-j-1, r-1)`, valid exactly when
/// `f_1 < j + r`; errors outside that range or when no hyperplane exists.
pub fn coeff_y_threshold(m: &Matroid, j: usize) -> Result<BigInt, Error> {
    let r = m.full_rank();
    if r == 0 {
        return Err(Error::Precondition(
            "rank-0 matroid has no hyperplanes; the threshold form does not apply".into(),
        ));
    }
    let flats = structure::enumerate_flats(m)?;
    let f1 = flats.f1().expect("rank >= 1 matroids have hyperplanes");
    if f1 >= j + r {
        return Err(Error::Precondition(format!(
            "threshold not applicable: f_1 = {f1} >= j + r = {}",
            j + r
        )));
    }
    Ok(binomial_int(m.size() as i64 - j as i64 - 1, r as i64 - 1))
}

/// A failed threshold biconditional at one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IffCounterexample {
    pub index: usize,
    /// Whether the structural condition (`f_1 < j + r`, `d_1 > r - i`)
    /// held at that index.
    pub condition: bool,
    pub closed_form: BigInt,
    pub engine: BigInt,
}

/// Checks both directions of "`f_1 < j + r` iff
/// `[y^j] T = C(|X|-j-1, r-1)`" for every `j` in `0..=|X|-r`.
///
/// Rank-0 matroids have no hyperplanes and no `f_1`; the biconditional is
/// vacuous and passes.
pub fn threshold_iff_y(m: &Matroid) -> Result<Verdict<IffCounterexample>, Error> {
    let r = m.full_rank();
    if r == 0 {
        return Ok(Verdict::Pass);
    }
    let flats = structure::enumerate_flats(m)?;
    let f1 = flats.f1().expect("rank >= 1 matroids have hyperplanes");
    let engine = tutte_subset_expansion(m)?.specialize_x_at_1();
    let n = m.size();
    for j in 0..=n - r {
        let condition = f1 < j + r;
        let closed_form = binomial_int(n as i64 - j as i64 - 1, r as i64 - 1);
        let engine_value = engine.coeff(j);
        if condition != (closed_form == engine_value) {
            return Ok(Verdict::Fail(IffCounterexample {
                index: j,
                condition,
                closed_form,
                engine: engine_value,
            }));
        }
    }
    Ok(Verdict::Pass)
}

/// Validity data for the circuit corrected form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XFormulaValidity {
    pub rank: usize,
    /// `d_2`, when a corank-2 D-set exists (always, for corank >= 2).
    pub d2: Option<usize>,
    /// Lower exclusive bound on valid `i`: `i > r - d_2`, or unbounded when
    /// `d_2` is undefined.
    pub threshold: Option<i64>,
}

/// Computes the validity threshold for the `x`-side corrected form.
///
/// Errors on free matroids (corank 0): with no circuits to correct with,
/// the corrected form misses the top coefficient, so no `i` is admitted.
pub fn x_formula_validity(m: &Matroid) -> Result<XFormulaValidity, Error> {
    if m.corank() == 0 {
        return Err(Error::Precondition(
            "free matroid has no circuits; the corrected form does not apply".into(),
        ));
    }
    let r = m.full_rank();
    let circuits = structure::enumerate_circuits(m)?;
    let d2 = circuits.d2();
    Ok(XFormulaValidity {
        rank: r,
        d2,
        threshold: d2.map(|v| r as i64 - v as i64),
    })
}

/// `[x^i] T_M(x, 1)` by the circuit correction, valid for `i > r - d_2`:
/// `C(|X|-i-1, r-i) - sum over circuits C with |C| < d_2 of
/// C(|X|-|C|-i-1, |X|-r-1)`.
pub fn coeff_x_circuit(m: &Matroid, i: usize) -> Result<BigInt, Error> {
    let validity = x_formula_validity(m)?;
    if let Some(threshold) = validity.threshold {
        if (i as i64) <= threshold {
            return Err(Error::Precondition(format!(
                "i = {i} outside validity range i > r - d_2 = {threshold}"
            )));
        }
    }
    let circuits = structure::enumerate_circuits(m)?;
    let n = m.size() as i64;
    let r = validity.rank as i64;
    let i = i as i64;
    let mut total = binomial_int(n - i - 1, r - i);
    for c in &circuits.circuits {
        let size = c.len() as i64;
        if validity.d2.is_none_or(|d2| size < d2 as i64) {
            total -= binomial_int(n - size - i - 1, n - r - 1);
        }
    }
    Ok(total)
}

/// Checks both directions of "`d_1 > r - i` iff
/// `[x^i] T = C(|X|-i-1, r-i)`" for every `i` in `0..=r`.
///
/// Free matroids have no circuits and no `d_1`; the biconditional is
/// vacuous and passes.
pub fn threshold_iff_x(m: &Matroid) -> Result<Verdict<IffCounterexample>, Error> {
    if m.corank() == 0 {
        return Ok(Verdict::Pass);
    }
    let r = m.full_rank();
    let n = m.size();
    let circuits = structure::enumerate_circuits(m)?;
    let d1 = circuits.d1().expect("positive-corank matroids have circuits");
    let engine = tutte_subset_expansion(m)?.specialize_y_at_1();
    for i in 0..=r {
        let condition = d1 as i64 > r as i64 - i as i64;
        let closed_form = binomial_int(n as i64 - i as i64 - 1, r as i64 - i as i64);
        let engine_value = engine.coeff(i);
        if condition != (closed_form == engine_value) {
            return Ok(Verdict::Fail(IffCounterexample {
                index: i,
                condition,
                closed_form,
                engine: engine_value,
            }));
        }
    }
    Ok(Verdict::Pass)
}

/// A failed edge-connectivity biconditional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GjkCounterexample {
    pub k: usize,
    pub edge_connectivity: usize,
    /// Whether the binomial identity held on the whole window.
    pub identity_holds: bool,
    /// A window index where the identity fails, when one exists.
    pub failing_j: Option<i64>,
}

/// Checks the biconditional "G is `(k+1)`-edge-connected iff
/// `[y^j] T_G(1, y) = C(m-j-1, n-2)` for all `g - k <= j <= g`",
/// with `g = m - n + 1`.
///
/// The window is taken over signed `j`: for `j < 0` the coefficient is 0
/// while the binomial is positive, which is what makes the reverse
/// direction work for sparse graphs.
pub fn graph_gjk_iff(g: &Multigraph, k: usize) -> Result<Verdict<GjkCounterexample>, Error> {
    if g.vertex_count() < 2 {
        return Err(Error::Precondition("graph has fewer than two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    let n = g.vertex_count() as i64;
    let m = g.edge_count() as i64;
    let corank = m - n + 1;
    let lambda = minimal_edge_cuts(g)?.edge_connectivity.unwrap_or(0);
    let engine = tutte_subset_expansion(&g.cycle_matroid())?.specialize_x_at_1();

    let mut failing_j = None;
    for j in corank - k as i64..=corank {
        let coefficient =
            if j < 0 { BigInt::zero() } else { engine.coeff(j as usize) };
        if coefficient != binomial_int(m - j - 1, n - 2) {
            failing_j = Some(j);
            break;
        }
    }
    let identity_holds = failing_j.is_none();
    let connected_enough = lambda >= k + 1;
    if connected_enough == identity_holds {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::Fail(GjkCounterexample {
            k,
            edge_connectivity: lambda,
            identity_holds,
            failing_j,
        }))
    }
}

/// `[y^j] T_G(1, y)` by the minimal-edge-cut correction, for a connected
/// `(k+1)`-edge-connected graph and `2j > 2g - 3(k+1)` (evaluated in
/// integers): `C(m-j-1, n-2) - sum_{i=k+1}^{g-j} C(m-j-i-1, n-2) |EC_i|`.
pub fn graph_cg_coeff(g: &Multigraph, j: usize, k: usize) -> Result<BigInt, Error> {
    if !crate::graph::is_k_edge_connected(g, k + 1)? {
        return Err(Error::Precondition(format!(
            "graph is not {}-edge-connected",
            k + 1
        )));
    }
    let n = g.vertex_count() as i64;
    let m = g.edge_count() as i64;
    let corank = m - n + 1;
    if 2 * j as i64 <= 2 * corank - 3 * (k as i64 + 1) {
        return Err(Error::Precondition(format!(
            "j = {j} outside validity range 2j > 2g - 3(k+1) = {}",
            2 * corank - 3 * (k as i64 + 1)
        )));
    }
    let cuts = minimal_edge_cuts(g)?;
    let j = j as i64;
    let mut total = binomial_int(m - j - 1, n - 2);
    for i in k as i64 + 1..=corank - j {
        let count = cuts
            .cuts_by_size
            .get(&(i as usize))
            .map(|cuts| cuts.len() as i64)
            .unwrap_or(0);
        total -= binomial_int(m - j - i - 1, n - 2) * BigInt::from(count);
    }
    Ok(total)
}

/// A violated corank-2 flat bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma36Violation {
    pub f2: usize,
    pub edge_count: usize,
    pub k: usize,
}

/// For a `(k+1)`-edge-connected graph, checks `2 f_2(M(G)) <= 2m - 3(k+1)`
/// in integer arithmetic. Passes vacuously when `f_2` is undefined.
pub fn lemma36_bound_check(g: &Multigraph, k: usize) -> Result<Verdict<Lemma36Violation>, Error> {
    if !crate::graph::is_k_edge_connected(g, k + 1)? {
        return Err(Error::Precondition(format!(
            "graph is not {}-edge-connected",
            k + 1
        )));
    }
    let m = g.edge_count();
    let flats = structure::enumerate_flats(&g.cycle_matroid())?;
    match flats.f2() {
        None => Ok(Verdict::Pass),
        Some(f2) => {
            if 2 * f2 as i64 <= 2 * m as i64 - 3 * (k as i64 + 1) {
                Ok(Verdict::Pass)
            } else {
                Ok(Verdict::Fail(Lemma36Violation { f2, edge_count: m, k }))
            }
        }
    }
}

/// `[x^i] T_G(x, 1)` for a graph, by the cycle correction, valid for
/// `i > n - k(G) - h(G)`: `C(m-i-1, n-k(G)-i) - sum over cycles C with
/// |C| < h(G) of C(m-|C|-i-1, m-n+k(G)-1)`.
///
/// Computed both directly from graph quantities and through
/// [`coeff_x_circuit`] on the cycle matroid; the two must coincide.
pub fn graph_corollary_x(g: &Multigraph, i: usize) -> Result<BigInt, Error> {
    let matroid = g.cycle_matroid();
    let via_matroid = coeff_x_circuit(&matroid, i)?;

    let n = g.vertex_count() as i64;
    let m = g.edge_count() as i64;
    let components = g.components() as i64;
    let rank = n - components;
    let circuits = structure::enumerate_circuits(&matroid)?;
    let h = circuits.d2();
    let i = i as i64;
    let mut direct = binomial_int(m - i - 1, rank - i);
    for c in &circuits.circuits {
        let size = c.len() as i64;
        if h.is_none_or(|h| size < h as i64) {
            direct -= binomial_int(m - size - i - 1, m - n + components - 1);
        }
    }
    assert_eq!(via_matroid, direct, "graph- and matroid-level cycle corrections disagree");
    Ok(direct)
}

/// Checks both directions of "`g(G) > n - k(G) - i` iff
/// `[x^i] T_G(x, 1) = C(m-i-1, n-k(G)-i)`" for every `i` in `0..=rank`.
///
/// Forests have no cycles and no girth; the biconditional is vacuous.
/// The graph-level check must agree with [`threshold_iff_x`] on the cycle
/// matroid.
pub fn graph_corollary_x_iff(g: &Multigraph) -> Result<Verdict<IffCounterexample>, Error> {
    let matroid = g.cycle_matroid();
    let via_matroid = threshold_iff_x(&matroid)?;

    let rank = g.vertex_count() - g.components();
    let girth = structure::enumerate_circuits(&matroid)?.d1();
    let direct = match girth {
        None => Verdict::Pass,
        Some(girth) => {
            let n = g.vertex_count() as i64;
            let m = g.edge_count() as i64;
            let components = g.components() as i64;
            let engine = tutte_subset_expansion(&matroid)?.specialize_y_at_1();
            let mut verdict = Verdict::Pass;
            for i in 0..=rank {
                let condition = girth as i64 > n - components - i as i64;
                let closed_form = binomial_int(m - i as i64 - 1, n - components - i as i64);
                let engine_value = engine.coeff(i);
                if condition != (closed_form == engine_value) {
                    verdict = Verdict::Fail(IffCounterexample {
                        index: i,
                        condition,
                        closed_form,
                        engine: engine_value,
                    });
                    break;
                }
            }
            verdict
        }
    };
    assert_eq!(via_matroid, direct, "graph- and matroid-level girth thresholds disagree");
    Ok(direct)
}

/// Convenience: all `y`-coefficients `[y^j] T_M(1, y)` from the engine.
pub fn engine_y_coefficients(m: &Matroid) -> Result<Vec<BigInt>, Error> {
    let engine = tutte_subset_expansion(m)?.specialize_x_at_1();
    let top = m.size() - m.full_rank();
    Ok((0..=top).map(|j| engine.coeff(j)).collect())
}

/// Convenience: all `x`-coefficients `[x^i] T_M(x, 1)` from the engine.
pub fn engine_x_coefficients(m: &Matroid) -> Result<Vec<BigInt>, Error> {
    let engine = tutte_subset_expansion(m)?.specialize_y_at_1();
    Ok((0..=m.full_rank()).map(|i| engine.coeff(i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Multigraph {
        Multigraph::complete(4)
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(2, 5), BigUint::zero());
        assert_eq!(binomial(-1, 0), BigUint::zero());
        assert_eq!(binomial(4, -1), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn lemma31_examples() {
        let (lhs, rhs) = lemma31_both_sides(6, 3, 0).unwrap();
        assert_eq!(lhs, BigInt::from(10)); // 20 - 15 + 6 - 1
        assert_eq!(rhs, BigInt::from(10)); // C(5, 2)

        let (lhs, rhs) = lemma31_both_sides(5, 2, 1).unwrap();
        assert_eq!(lhs, BigInt::from(3)); // 10 - 10 + 3
        assert_eq!(rhs, BigInt::from(3)); // C(3, 1)

        for m in 1..=8 {
            let (lhs, rhs) = lemma31_both_sides(m, m, 0).unwrap();
            assert_eq!(lhs, BigInt::one());
            assert_eq!(rhs, BigInt::one());
        }

        assert!(lemma31_both_sides(4, 3, 2).is_err());
    }

    #[test]
    fn lemma31_degenerate_corner() {
        // at p = 0, k = m the sum is the single term 1 while the right side
        // is C(-1, -1) = 0 under the zero convention; the identity itself
        // only holds for p >= 1
        let (lhs, rhs) = lemma31_both_sides(3, 0, 3).unwrap();
        assert_eq!(lhs, BigInt::one());
        assert_eq!(rhs, BigInt::zero());
    }

    #[test]
    fn sigma_sum_examples() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(coeff_y_sigma(&u23, 0).unwrap(), BigInt::from(2));
        assert_eq!(coeff_y_sigma(&u23, 1).unwrap(), BigInt::from(1));

        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(coeff_y_sigma(&u24, 1).unwrap(), BigInt::from(2));
        assert_eq!(coeff_y_sigma(&u24, 2).unwrap(), BigInt::from(1));

        let u01 = Matroid::uniform(0, 1).unwrap();
        assert_eq!(coeff_y_sigma(&u01, 0).unwrap(), BigInt::zero());
        assert_eq!(coeff_y_sigma(&u01, 1).unwrap(), BigInt::one());
    }

    #[test]
    fn tau_sum_examples() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(coeff_x_tau(&u23, 2).unwrap(), BigInt::one());
        assert_eq!(coeff_x_tau(&u23, 0).unwrap(), BigInt::one()); // 3 - 3 + 1

        let u11 = Matroid::uniform(1, 1).unwrap();
        assert_eq!(coeff_x_tau(&u11, 1).unwrap(), BigInt::one());
    }

    #[test]
    fn hyperplane_correction_on_k4() {
        let m = k4().cycle_matroid();
        let expected = [6, 6, 3, 1];
        for (j, &value) in expected.iter().enumerate() {
            assert_eq!(coeff_y_hyperplane(&m, j).unwrap(), BigInt::from(value), "j = {j}");
            assert_eq!(coeff_y_cocircuit(&m, j).unwrap(), BigInt::from(value), "j = {j}");
        }
        let validity = y_formula_validity(&m).unwrap();
        assert_eq!(validity.f2, Some(1));
        assert_eq!(validity.threshold, Some(-2));
    }

    #[test]
    fn corrected_forms_reject_rank_zero() {
        let u02 = Matroid::uniform(0, 2).unwrap();
        assert!(matches!(coeff_y_hyperplane(&u02, 0), Err(Error::Precondition(_))));
        assert!(matches!(coeff_y_cocircuit(&u02, 1), Err(Error::Precondition(_))));
        assert!(matches!(coeff_y_threshold(&u02, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn circuit_correction_rejects_free_matroids() {
        let tree = Multigraph::path(3).cycle_matroid();
        assert!(matches!(coeff_x_circuit(&tree, 0), Err(Error::Precondition(_))));
        // but the iff is vacuous there
        assert!(threshold_iff_x(&tree).unwrap().is_pass());
    }

    #[test]
    fn threshold_closed_form() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        for (j, expected) in [(0usize, 3i64), (1, 2), (2, 1)] {
            assert_eq!(coeff_y_threshold(&u24, j).unwrap(), BigInt::from(expected));
        }

        let k3 = Multigraph::complete(3).cycle_matroid();
        assert_eq!(coeff_y_threshold(&k3, 1).unwrap(), BigInt::one());

        // f_1(M(K4)) = 3 >= 0 + 3: not applicable at j = 0, and indeed the
        // engine value 6 differs from C(5, 2) = 10
        let m = k4().cycle_matroid();
        assert!(matches!(coeff_y_threshold(&m, 0), Err(Error::Precondition(_))));
        assert_eq!(coeff_y_threshold(&m, 1).unwrap(), BigInt::from(6));
    }

    #[test]
    fn threshold_iffs() {
        for m in [
            Matroid::uniform(2, 3).unwrap(),
            Matroid::uniform(2, 4).unwrap(),
            k4().cycle_matroid(),
            Matroid::uniform(0, 2).unwrap(),
            Matroid::uniform(3, 3).unwrap(),
        ] {
            assert!(threshold_iff_y(&m).unwrap().is_pass());
            assert!(threshold_iff_x(&m).unwrap().is_pass());
        }
    }

    #[test]
    fn circuit_correction_on_k4() {
        let m = k4().cycle_matroid();
        let expected = [6, 6, 3, 1];
        for (i, &value) in expected.iter().enumerate() {
            assert_eq!(coeff_x_circuit(&m, i).unwrap(), BigInt::from(value), "i = {i}");
        }
        let validity = x_formula_validity(&m).unwrap();
        assert_eq!(validity.d2, Some(5));
        assert_eq!(validity.threshold, Some(-2));
    }

    #[test]
    fn gjk_biconditional() {
        assert!(graph_gjk_iff(&k4(), 2).unwrap().is_pass());
        assert!(graph_gjk_iff(&k4(), 3).unwrap().is_pass()); // not 4-connected, identity must fail
        assert!(graph_gjk_iff(&Multigraph::complete(3), 1).unwrap().is_pass());

        // K4 with one subdivided edge is only 2-edge-connected
        let subdivided = Multigraph::new(
            5,
            vec![(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        assert!(graph_gjk_iff(&subdivided, 2).unwrap().is_pass());

        // trees and sparse graphs exercise the negative-j part of the window
        assert!(graph_gjk_iff(&Multigraph::path(3), 1).unwrap().is_pass());
        assert!(graph_gjk_iff(&Multigraph::cycle(3), 2).unwrap().is_pass());

        let disconnected = Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(matches!(graph_gjk_iff(&disconnected, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn cg_formula_on_k4() {
        assert_eq!(graph_cg_coeff(&k4(), 0, 2).unwrap(), BigInt::from(6));
        assert_eq!(graph_cg_coeff(&k4(), 2, 2).unwrap(), BigInt::from(3));
        assert_eq!(graph_cg_coeff(&k4(), 3, 2).unwrap(), BigInt::one());

        // K4 is not 4-edge-connected
        assert!(matches!(graph_cg_coeff(&k4(), 3, 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn lemma36_examples() {
        assert!(lemma36_bound_check(&k4(), 2).unwrap().is_pass());
        assert!(lemma36_bound_check(&Multigraph::complete(3), 1).unwrap().is_pass());
        assert!(lemma36_bound_check(&Multigraph::cycle(4), 0).unwrap().is_pass());
    }

    #[test]
    fn graph_corollaries() {
        assert_eq!(graph_corollary_x(&k4(), 0).unwrap(), BigInt::from(6));

        // K3: girth 3 > 2 - i for all i, so the plain binomial applies
        let k3 = Multigraph::complete(3);
        for i in 0..=2 {
            assert_eq!(graph_corollary_x(&k3, i).unwrap(), BigInt::one());
        }
        assert!(graph_corollary_x_iff(&k3).unwrap().is_pass());

        // disconnected: two disjoint triangles, rank 4
        let two_triangles =
            Multigraph::new(6, vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        let expected = [3, 2, 1];
        for (offset, &value) in expected.iter().enumerate() {
            let i = offset + 2;
            assert_eq!(graph_corollary_x(&two_triangles, i).unwrap(), BigInt::from(value));
        }
        assert!(graph_corollary_x_iff(&two_triangles).unwrap().is_pass());
        // below the validity range
        assert!(matches!(graph_corollary_x(&two_triangles, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn engine_coefficient_vectors() {
        let m = k4().cycle_matroid();
        let y: Vec<BigInt> = engine_y_coefficients(&m).unwrap();
        assert_eq!(y, [6, 6, 3, 1].map(BigInt::from).to_vec());
        let x: Vec<BigInt> = engine_x_coefficients(&m).unwrap();
        assert_eq!(x, [6, 6, 3, 1].map(BigInt::from).to_vec());
    }
}
