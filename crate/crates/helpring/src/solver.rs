//! Exact integer solver for HeLP systems: Fourier-Motzkin variable bounds
//! over the rationals, depth-first enumeration with interval re-propagation,
//! and an independent solution checker that rebuilds every constraint from
//! the character data.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::help::{self, AugmentationTuple, CharacterSelection};
use crate::tables::CharacterTable;

/// `coeffs . x + constant` (= 0, >= 0, or = 0 mod m depending on context).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineRow {
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerLinearSystem {
    pub variables: Vec<String>,
    pub equalities: Vec<AffineRow>,
    pub inequalities: Vec<AffineRow>,
    pub congruences: Vec<(AffineRow, u64)>,
}

impl IntegerLinearSystem {
    pub fn new(variables: Vec<String>) -> Self {
        IntegerLinearSystem {
            variables,
            equalities: Vec::new(),
            inequalities: Vec::new(),
            congruences: Vec::new(),
        }
    }

    pub fn add_equality(&mut self, coeffs: Vec<i64>, constant: i64) {
        assert_eq!(coeffs.len(), self.variables.len());
        self.equalities.push(AffineRow { coeffs, constant });
    }

    pub fn add_inequality(&mut self, coeffs: Vec<i64>, constant: i64) {
        assert_eq!(coeffs.len(), self.variables.len());
        self.inequalities.push(AffineRow { coeffs, constant });
    }

    pub fn add_congruence(&mut self, coeffs: Vec<i64>, constant: i64, modulus: u64) {
        assert_eq!(coeffs.len(), self.variables.len());
        self.congruences
            .push((AffineRow { coeffs, constant }, modulus));
    }

    fn satisfied_point(&self, x: &[i64]) -> bool {
        let eval = |row: &AffineRow| -> i128 {
            row.constant as i128
                + row
                    .coeffs
                    .iter()
                    .zip(x)
                    .map(|(c, v)| *c as i128 * *v as i128)
                    .sum::<i128>()
        };
        self.equalities.iter().all(|r| eval(r) == 0)
            && self.inequalities.iter().all(|r| eval(r) >= 0)
            && self
                .congruences
                .iter()
                .all(|(r, m)| eval(r).rem_euclid(*m as i128) == 0)
    }
}

/// Result of the rational relaxation analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundsResult {
    /// Closed interval [lo, hi] per variable, in variable order.
    Bounded(Vec<(BigRational, BigRational)>),
    /// A derived inequality with no variables and negative constant.
    Infeasible { witness_constant: BigInt },
    /// The relaxation does not bound this variable.
    Unbounded { variable: String },
}

/// Rows over BigInt used inside the elimination, together with the set of
/// source rows (as a bitset) each one was combined from. The history powers
/// Kohler's redundancy test: after eliminating E variables, a derived row
/// combining more than E + 1 source rows is implied by the others and can be
/// dropped, which keeps the Fourier-Motzkin row count from exploding.
type Row = (Vec<BigInt>, BigInt, Vec<u64>);

fn hist_singleton(i: usize, words: usize) -> Vec<u64> {
    let mut h = vec![0u64; words];
    h[i / 64] |= 1 << (i % 64);
    h
}

fn hist_union(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}

fn hist_count(h: &[u64]) -> u32 {
    h.iter().map(|w| w.count_ones()).sum()
}

/// The system after substituting the equalities away: `rows` are the
/// inequalities rewritten over the remaining free variables, and each pivot
/// records `denom * x_pivot + coeffs . x_free + constant = 0` with
/// `denom > 0`.
struct Reduced {
    /// Original indices of the free variables, ascending.
    free: Vec<usize>,
    /// (original index, denom, coeffs over free vars, constant) per pivot.
    pivots: Vec<(usize, BigInt, Vec<BigInt>, BigInt)>,
    /// Inequality rows over the free variables.
    rows: Vec<Row>,
}

/// Gauss-eliminate the equalities (fraction-free over BigInt, pivoting the
/// highest-index variable so the free variables keep their leading class
/// order), substitute them into every inequality, and prune. Errs with a
/// witness constant when the equalities alone are contradictory or a
/// constant inequality row fails.
fn reduce(system: &IntegerLinearSystem) -> Result<Reduced, BigInt> {
    let n = system.variables.len();
    type EqRow = (Vec<BigInt>, BigInt);
    let mut pivot_rows: Vec<EqRow> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();

    let normalize_eq = |row: &mut EqRow| {
        let mut g = BigInt::zero();
        for c in row.0.iter().chain(std::iter::once(&row.1)) {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in row.0.iter_mut() {
                *c /= &g;
            }
            row.1 /= &g;
        }
    };
    // eliminate column `col` from `row` using the pivot row `p` (whose
    // coefficient there is positive), scaling `row` by that positive pivot
    let cancel = |row: &mut EqRow, p: &EqRow, col: usize| {
        let q = row.0[col].clone();
        if q.is_zero() {
            return;
        }
        let d = p.0[col].clone();
        for (rc, pc) in row.0.iter_mut().zip(&p.0) {
            *rc = &*rc * &d - &q * pc;
        }
        row.1 = &row.1 * &d - &q * &p.1;
    };

    for r in &system.equalities {
        let mut row: EqRow = (
            r.coeffs.iter().map(|c| BigInt::from(*c)).collect(),
            BigInt::from(r.constant),
        );
        for (p, &col) in pivot_rows.iter().zip(&pivot_cols) {
            cancel(&mut row, p, col);
        }
        normalize_eq(&mut row);
        if row.0.iter().all(|c| c.is_zero()) {
            if !row.1.is_zero() {
                return Err(-row.1.abs());
            }
            continue;
        }
        // prefer a unit coefficient, then the highest index
        let col = (0..n)
            .rev()
            .find(|&j| row.0[j].abs().is_one())
            .or_else(|| (0..n).rev().find(|&j| !row.0[j].is_zero()))
            .unwrap();
        if row.0[col].is_negative() {
            for c in row.0.iter_mut() {
                *c = -&*c;
            }
            row.1 = -row.1;
        }
        for p in pivot_rows.iter_mut() {
            cancel(p, &row, col);
            normalize_eq(p);
        }
        pivot_rows.push(row);
        pivot_cols.push(col);
    }

    let free: Vec<usize> = (0..n).filter(|j| !pivot_cols.contains(j)).collect();
    let compress = |coeffs: &[BigInt]| -> Vec<BigInt> {
        free.iter().map(|&j| coeffs[j].clone()).collect()
    };
    let pivots: Vec<(usize, BigInt, Vec<BigInt>, BigInt)> = pivot_rows
        .iter()
        .zip(&pivot_cols)
        .map(|(p, &col)| (col, p.0[col].clone(), compress(&p.0), p.1.clone()))
        .collect();

    // leave two spare history bits for the auxiliary rows used when bounding
    // a pivot variable
    let words = (system.inequalities.len() + 2).div_ceil(64).max(1);
    let mut rows: Vec<Row> = Vec::new();
    for (i, r) in system.inequalities.iter().enumerate() {
        let mut row: EqRow = (
            r.coeffs.iter().map(|c| BigInt::from(*c)).collect(),
            BigInt::from(r.constant),
        );
        for (p, &col) in pivot_rows.iter().zip(&pivot_cols) {
            // pivot coefficients are positive, so scaling by them preserves
            // the inequality direction
            cancel(&mut row, p, col);
        }
        rows.push((compress(&row.0), row.1, hist_singleton(i, words)));
    }
    // parallel duplicates among the originals are absolutely redundant, so
    // the fast merge is lossless here
    let rows = prune(rows, PruneMode::Fast)?;
    Ok(Reduced { free, pivots, rows })
}

/// Divide out the gcd of all entries; canonicalizes parallel rows.
fn normalize(row: &mut Row) {
    let mut g = BigInt::zero();
    for c in row.0.iter().chain(std::iter::once(&row.1)) {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in row.0.iter_mut() {
            *c /= &g;
        }
        row.1 /= &g;
    }
}

/// How parallel derived rows are merged between elimination steps.
#[derive(Clone, Copy, PartialEq, Eq)]
enum PruneMode {
    /// Keep the Pareto front over (constant, history): a row is dropped only
    /// when another has a constant at least as tight AND a history that is a
    /// subset, so the survivor can stand in for it in every later derivation
    /// without ever failing Kohler's test where the dropped one would have
    /// passed. Projections stay exact; fronts can grow large.
    Exact,
    /// Keep one row per coefficient vector (the tightest constant). The
    /// survivor may carry a larger history and later fall to Kohler's test,
    /// so projections can come out slightly wider than exact -- but never
    /// narrower, since every derived row is a valid consequence. Used for
    /// enumeration, where leaves are re-checked against the original system
    /// and a wider interval only costs a few extra probes.
    Fast,
}

/// Drop dominated parallel rows. Returns Err with the witness constant if a
/// contradictory constant row appears.
fn prune(rows: Vec<Row>, mode: PruneMode) -> Result<Vec<Row>, BigInt> {
    let subset = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & y == *x);
    let mut best: BTreeMap<Vec<BigInt>, Vec<(BigInt, Vec<u64>)>> = BTreeMap::new();
    for mut row in rows {
        normalize(&mut row);
        if row.0.iter().all(|c| c.is_zero()) {
            if row.1.is_negative() {
                return Err(row.1);
            }
            continue;
        }
        let front = best.entry(row.0).or_default();
        match mode {
            PruneMode::Exact => {
                if front
                    .iter()
                    .any(|(c, h)| *c <= row.1 && subset(h, &row.2))
                {
                    continue;
                }
                front.retain(|(c, h)| !(row.1 <= *c && subset(&row.2, h)));
                front.push((row.1, row.2));
            }
            PruneMode::Fast => match front.first_mut() {
                Some(entry) => {
                    if row.1 < entry.0 {
                        *entry = (row.1, row.2);
                    }
                }
                None => front.push((row.1, row.2)),
            },
        }
    }
    let mut out = Vec::new();
    for (coeffs, front) in best {
        for (constant, hist) in front {
            out.push((coeffs.clone(), constant, hist));
        }
    }
    Ok(out)
}

/// Eliminate variable j by Fourier-Motzkin pairing. `eliminated` is the
/// number of variables eliminated so far including this one; combined rows
/// whose source-row history exceeds `eliminated + 1` fail Kohler's test and
/// are redundant.
fn eliminate(rows: &[Row], j: usize, eliminated: u32, mode: PruneMode) -> Result<Vec<Row>, BigInt> {
    let mut out = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for row in rows {
        match row.0[j].sign() {
            num::bigint::Sign::Plus => pos.push(row),
            num::bigint::Sign::Minus => neg.push(row),
            num::bigint::Sign::NoSign => out.push(row.clone()),
        }
    }
    for p in &pos {
        for n in &neg {
            let hist = hist_union(&p.2, &n.2);
            if hist_count(&hist) > eliminated + 1 {
                continue;
            }
            // p[j] * n + |n[j]| * p has zero j-entry
            let a = p.0[j].clone();
            let b = -n.0[j].clone();
            let coeffs: Vec<BigInt> = p
                .0
                .iter()
                .zip(&n.0)
                .map(|(pc, nc)| &a * nc + &b * pc)
                .collect();
            let constant = &a * &n.1 + &b * &p.1;
            out.push((coeffs, constant, hist));
        }
    }
    prune(out, mode)
}

/// Read the interval on column `col` off rows that involve only that
/// column: each is `c*x + k >= 0`.
fn interval_at(rows: &[Row], col: usize) -> (Option<BigRational>, Option<BigRational>) {
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for (coeffs, constant, _) in rows {
        let c = &coeffs[col];
        if c.is_positive() {
            // x >= -k/c
            let b = BigRational::new(-constant.clone(), c.clone());
            lo = Some(match lo {
                Some(cur) => cur.max(b),
                None => b,
            });
        } else if c.is_negative() {
            // x <= k/(-c)
            let b = BigRational::new(constant.clone(), -c.clone());
            hi = Some(match hi {
                Some(cur) => cur.min(b),
                None => b,
            });
        }
    }
    (lo, hi)
}

/// Exact per-variable bounds from the rational relaxation: substitute the
/// equalities away, then Fourier-Motzkin-eliminate all other free variables
/// for each variable in turn. A substituted (pivot) variable is an affine
/// function of the free ones and is bounded through an auxiliary column.
pub fn rational_bounds(system: &IntegerLinearSystem) -> BoundsResult {
    let n = system.variables.len();
    let red = match reduce(system) {
        Ok(r) => r,
        Err(w) => return BoundsResult::Infeasible { witness_constant: w },
    };
    let m = red.free.len();
    let mut intervals: Vec<Option<(BigRational, BigRational)>> = vec![None; n];

    for (fi, &v) in red.free.iter().enumerate() {
        let mut rows = red.rows.clone();
        let mut eliminated = 0u32;
        for j in 0..m {
            if j == fi {
                continue;
            }
            eliminated += 1;
            rows = match eliminate(&rows, j, eliminated, PruneMode::Exact) {
                Ok(r) => r,
                Err(w) => return BoundsResult::Infeasible { witness_constant: w },
            };
        }
        match interval_at(&rows, fi) {
            (Some(l), Some(h)) => {
                if l > h {
                    return BoundsResult::Infeasible {
                        witness_constant: BigInt::from(-1),
                    };
                }
                intervals[v] = Some((l, h));
            }
            _ => {
                return BoundsResult::Unbounded {
                    variable: system.variables[v].clone(),
                }
            }
        }
    }

    for (v, denom, coeffs, constant) in &red.pivots {
        // denom * x_v = -(coeffs . x_free + constant); bound it by adjoining
        // an auxiliary column t with denom*t + coeffs.x + constant = 0 and
        // eliminating every free variable
        let words = red
            .rows
            .first()
            .map(|r| r.2.len())
            .unwrap_or((system.inequalities.len() + 2).div_ceil(64).max(1));
        let mut rows: Vec<Row> = red
            .rows
            .iter()
            .map(|(c, k, h)| {
                let mut c = c.clone();
                c.push(BigInt::zero());
                (c, k.clone(), h.clone())
            })
            .collect();
        let mut up = coeffs.clone();
        up.push(denom.clone());
        let mut down: Vec<BigInt> = up.iter().map(|c| -c).collect();
        down[m] = -denom.clone();
        rows.push((
            up,
            constant.clone(),
            hist_singleton(system.inequalities.len(), words),
        ));
        rows.push((
            down,
            -constant.clone(),
            hist_singleton(system.inequalities.len() + 1, words),
        ));
        let mut rows = match prune(rows, PruneMode::Exact) {
            Ok(r) => r,
            Err(w) => return BoundsResult::Infeasible { witness_constant: w },
        };
        for j in 0..m {
            rows = match eliminate(&rows, j, (j + 1) as u32, PruneMode::Exact) {
                Ok(r) => r,
                Err(w) => return BoundsResult::Infeasible { witness_constant: w },
            };
        }
        match interval_at(&rows, m) {
            (Some(l), Some(h)) => {
                if l > h {
                    return BoundsResult::Infeasible {
                        witness_constant: BigInt::from(-1),
                    };
                }
                intervals[*v] = Some((l, h));
            }
            _ => {
                return BoundsResult::Unbounded {
                    variable: system.variables[*v].clone(),
                }
            }
        }
    }

    BoundsResult::Bounded(intervals.into_iter().map(|i| i.unwrap()).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveStatus {
    Feasible,
    Infeasible,
    /// The search-space guard was exceeded; the solution list is incomplete.
    Aborted { cap: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub solutions: Vec<AugmentationTuple>,
    pub status: SolveStatus,
}

pub const DEFAULT_NODE_CAP: u64 = 5_000_000;

/// Complete integer solution set of the system: the equalities are
/// substituted away, the free variables are assigned depth-first in variable
/// order with exact interval re-propagation (projections computed once by
/// eliminating variables from the back), and the substituted variables are
/// recovered at the leaves where every original constraint, congruences
/// included, is re-checked. Solutions come out lexicographically sorted;
/// `order` is the unit order recorded on the returned tuples.
pub fn enumerate(system: &IntegerLinearSystem, order: u64, node_cap: u64) -> SolutionSet {
    let n = system.variables.len();
    let infeasible = SolutionSet {
        solutions: Vec::new(),
        status: SolveStatus::Infeasible,
    };
    if n == 0 {
        return infeasible;
    }
    let red = match reduce(system) {
        Ok(r) => r,
        Err(_) => return infeasible,
    };
    let m = red.free.len();
    // projections[i]: rows over free variables 0..=i only
    let mut projections: Vec<Vec<Row>> = vec![Vec::new(); m];
    if m > 0 {
        let mut rows = red.rows.clone();
        projections[m - 1] = rows.clone();
        for i in (0..m - 1).rev() {
            rows = match eliminate(&rows, i + 1, (m - 1 - i) as u32, PruneMode::Fast) {
                Ok(r) => r,
                Err(_) => return infeasible,
            };
            projections[i] = rows.clone();
        }
    }

    let mut solutions = Vec::new();
    let mut xfree = vec![0i64; m];
    let mut nodes: u64 = 0;
    let aborted = dfs(
        system,
        &red,
        &projections,
        order,
        0,
        &mut xfree,
        &mut nodes,
        node_cap,
        &mut solutions,
    );
    solutions.sort_by(|a, b| {
        let key = |t: &AugmentationTuple| -> Vec<i64> {
            system
                .variables
                .iter()
                .map(|v| t.entries.get(v).copied().unwrap_or(0))
                .collect()
        };
        key(a).cmp(&key(b))
    });
    solutions.dedup();
    let status = if aborted {
        SolveStatus::Aborted { cap: node_cap }
    } else if solutions.is_empty() {
        SolveStatus::Infeasible
    } else {
        SolveStatus::Feasible
    };
    SolutionSet { solutions, status }
}

/// Recover the pivot variables from a full assignment of the free ones and
/// check the complete point against the original system.
fn check_leaf(
    system: &IntegerLinearSystem,
    red: &Reduced,
    xfree: &[i64],
    order: u64,
    solutions: &mut Vec<AugmentationTuple>,
) {
    let mut x = vec![0i64; system.variables.len()];
    for (fi, &v) in red.free.iter().enumerate() {
        x[v] = xfree[fi];
    }
    for (v, denom, coeffs, constant) in &red.pivots {
        let mut num = -constant.clone();
        for (c, xv) in coeffs.iter().zip(xfree) {
            num -= c * BigInt::from(*xv);
        }
        let (q, r) = num.div_rem(denom);
        if !r.is_zero() {
            return; // pivot value is not an integer
        }
        match i64::try_from(&q) {
            Ok(q) => x[*v] = q,
            Err(_) => return,
        }
    }
    if system.satisfied_point(&x) {
        let entries = system
            .variables
            .iter()
            .zip(x.iter())
            .filter(|(_, v)| **v != 0)
            .map(|(name, v)| (name.clone(), *v))
            .collect();
        solutions.push(AugmentationTuple { order, entries });
    }
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    system: &IntegerLinearSystem,
    red: &Reduced,
    projections: &[Vec<Row>],
    order: u64,
    depth: usize,
    x: &mut Vec<i64>,
    nodes: &mut u64,
    cap: u64,
    solutions: &mut Vec<AugmentationTuple>,
) -> bool {
    let n = red.free.len();
    if depth == n {
        check_leaf(system, red, x, order, solutions);
        return false;
    }
    // bounds on x[depth] from the projection onto variables 0..=depth
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    for (coeffs, constant, _) in &projections[depth] {
        let mut rest = constant.clone();
        for j in 0..depth {
            rest += &coeffs[j] * BigInt::from(x[j]);
        }
        let c = &coeffs[depth];
        if c.is_positive() {
            // x >= ceil(-rest / c)
            let b = (-rest).div_ceil(c);
            lo = Some(match lo {
                Some(cur) => cur.max(b),
                None => b,
            });
        } else if c.is_negative() {
            let b = rest.div_floor(&-c.clone());
            hi = Some(match hi {
                Some(cur) => cur.min(b),
                None => b,
            });
        } else if rest.is_negative() {
            return false; // fixed part already violated
        }
    }
    let (lo, hi) = match (lo, hi) {
        (Some(l), Some(h)) => (l, h),
        _ => panic!(
            "variable {} is unbounded in the rational relaxation",
            system.variables[red.free[depth]]
        ),
    };
    let mut v = lo.clone();
    while v <= hi {
        *nodes += 1;
        if *nodes > cap {
            return true;
        }
        x[depth] = i64::try_from(&v).expect("assignment overflow");
        if dfs(
            system,
            red,
            projections,
            order,
            depth + 1,
            x,
            nodes,
            cap,
            solutions,
        ) {
            return true;
        }
        v += 1;
    }
    false
}

/// Independent verification: rebuild every constraint for (k, powers,
/// selection) straight from the character tables and evaluate the tuple
/// exactly. Returns the first violated constraint description, or None if
/// the tuple satisfies everything.
pub fn check_solution(
    tables: &[&CharacterTable],
    k: u64,
    powers: &BTreeMap<u64, AugmentationTuple>,
    selection: &CharacterSelection,
    t: &AugmentationTuple,
) -> Option<String> {
    let ordinary = tables
        .iter()
        .find(|tb| tb.characteristic == 0)
        .expect("ordinary table required");
    let allowed: Vec<String> = crate::tables::classes_dividing(ordinary, k)
        .iter()
        .map(|c| c.name.clone())
        .collect();
    for name in t.entries.keys() {
        if !allowed.contains(name) {
            return Some(format!("class {} not allowed at order {}", name, k));
        }
    }
    let total: i64 = t.entries.values().sum();
    if total != 1 {
        return Some(format!("partial augmentations sum to {}, not 1", total));
    }
    let (constraints, _) = match help::build_system(tables, k, powers, selection) {
        Ok(r) => r,
        Err(e) => return Some(e.to_string()),
    };
    for c in &constraints {
        let value = c.scaled_form.evaluate(t);
        if !value.is_integer() {
            return Some(format!(
                "mu_{}({}, p={}) is not rational-integral",
                c.index_l, c.character_name, c.characteristic
            ));
        }
        let v = value.to_integer();
        if v.is_negative() {
            return Some(format!(
                "mu_{}({}, p={}) = {}/{} is negative",
                c.index_l, c.character_name, c.characteristic, v, k
            ));
        }
        if !(&v % BigInt::from(c.modulus)).is_zero() {
            return Some(format!(
                "mu_{}({}, p={}) = {}/{} is not an integer",
                c.index_l, c.character_name, c.characteristic, v, k
            ));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(vars: &[&str]) -> IntegerLinearSystem {
        IntegerLinearSystem::new(vars.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn infeasible_witness() {
        let mut s = sys(&["x"]);
        s.add_inequality(vec![1], -1); // x >= 1
        s.add_inequality(vec![-1], 0); // x <= 0
        assert!(matches!(
            rational_bounds(&s),
            BoundsResult::Infeasible { .. }
        ));
        assert_eq!(enumerate(&s, 2, 1000).status, SolveStatus::Infeasible);
    }

    #[test]
    fn unbounded_reported() {
        let mut s = sys(&["x", "y"]);
        s.add_inequality(vec![1, 0], 0); // x >= 0
        s.add_inequality(vec![-1, 0], 5); // x <= 5, y free
        assert_eq!(
            rational_bounds(&s),
            BoundsResult::Unbounded {
                variable: "y".to_string()
            }
        );
    }

    #[test]
    fn single_variable() {
        let mut s = sys(&["5a"]);
        s.add_equality(vec![1], -1);
        s.add_inequality(vec![1], 0);
        let out = enumerate(&s, 5, 1000);
        assert_eq!(out.status, SolveStatus::Feasible);
        assert_eq!(out.solutions.len(), 1);
        assert_eq!(out.solutions[0].entries.get("5a"), Some(&1));
    }

    #[test]
    fn congruence_filters() {
        // x + y = 1, 0 <= x <= 4, y >= -5; require 2x = 0 mod 4
        let mut s = sys(&["x", "y"]);
        s.add_equality(vec![1, 1], -1);
        s.add_inequality(vec![1, 0], 0);
        s.add_inequality(vec![-1, 0], 4);
        s.add_inequality(vec![0, 1], 5);
        s.add_congruence(vec![2, 0], 0, 4);
        let out = enumerate(&s, 2, 1000);
        let xs: Vec<i64> = out
            .solutions
            .iter()
            .map(|t| t.entries.get("x").copied().unwrap_or(0))
            .collect();
        assert_eq!(xs, vec![0, 2, 4]);
    }

    #[test]
    fn cap_aborts() {
        let mut s = sys(&["x", "y"]);
        s.add_inequality(vec![1, 0], 100);
        s.add_inequality(vec![-1, 0], 100);
        s.add_inequality(vec![0, 1], 100);
        s.add_inequality(vec![0, -1], 100);
        let out = enumerate(&s, 2, 10);
        assert_eq!(out.status, SolveStatus::Aborted { cap: 10 });
    }

    #[test]
    fn brute_force_agreement_small() {
        // hand-rolled cross-check; the property suite covers random systems
        let mut s = sys(&["x", "y"]);
        s.add_equality(vec![1, 1], -1);
        s.add_inequality(vec![-1, 3], 11);
        s.add_inequality(vec![1, -3], 11);
        s.add_congruence(vec![-1, 3], 11, 2);
        let out = enumerate(&s, 2, 100000);
        let mut brute = Vec::new();
        for x in -20..=20i64 {
            for y in -20..=20i64 {
                if s.satisfied_point(&[x, y]) {
                    brute.push((x, y));
                }
            }
        }
        let got: Vec<(i64, i64)> = out
            .solutions
            .iter()
            .map(|t| {
                (
                    t.entries.get("x").copied().unwrap_or(0),
                    t.entries.get("y").copied().unwrap_or(0),
                )
            })
            .collect();
        assert_eq!(got, brute);
        assert_eq!(got.len(), 6);
    }
}
