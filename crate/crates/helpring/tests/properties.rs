//! Property-based suites: ring axioms and Galois/trace invariants for the
//! cyclotomic arithmetic, printer/parser round-trips, agreement of the
//! solver with a brute-force oracle, and completeness of the rational
//! bounds on the actual M12 systems.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, BigRational, ToPrimitive};
use proptest::prelude::*;

use helpring::arith::{self, ratio, Cyclotomic};
use helpring::help::{self, AugmentationTuple, CharacterSelection};
use helpring::solver::{self, BoundsResult, IntegerLinearSystem, SolveStatus};
use helpring::tables::{bundled_m12, usable_tables};

/// Conductors dividing 24 keep products inside Q(zeta_24).
fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    let conductor = prop::sample::select(vec![1u64, 2, 3, 4, 6, 8, 12, 24]);
    conductor.prop_flat_map(|n| {
        prop::collection::vec((0..n as i64, -9i64..=9, 1i64..=4), 1..=4).prop_map(move |terms| {
            let mut acc = Cyclotomic::zero();
            for (e, num, den) in terms {
                acc = acc.add(&Cyclotomic::root_of_unity(n, e).scale(&ratio(num, den)));
            }
            acc
        })
    })
}

proptest! {
    #[test]
    fn ring_axioms(x in cyclotomic(), y in cyclotomic(), z in cyclotomic()) {
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.add(&x.neg()), Cyclotomic::zero());
        prop_assert_eq!(x.mul(&Cyclotomic::from_integer(1)), x.clone());
    }

    #[test]
    fn printer_parser_round_trip(x in cyclotomic()) {
        prop_assert_eq!(arith::parse(&arith::print(&x)).unwrap(), x);
    }

    #[test]
    fn galois_respects_ring_and_trace(x in cyclotomic(), y in cyclotomic(), j in prop::sample::select(vec![1u64, 5, 7, 11, 13, 17, 19, 23])) {
        let sx = x.galois(j).unwrap();
        let sy = y.galois(j).unwrap();
        prop_assert_eq!(x.add(&y).galois(j).unwrap(), sx.add(&sy));
        prop_assert_eq!(x.mul(&y).galois(j).unwrap(), sx.mul(&sy));
        prop_assert_eq!(sx.trace_in(24), x.trace_in(24));
    }

    #[test]
    fn conjugate_sum_is_trace(x in cyclotomic()) {
        let mut orbit = Cyclotomic::zero();
        for j in (1..24).filter(|j| helpring::arith::nt::gcd(*j, 24) == 1) {
            orbit = orbit.add(&x.galois(j).unwrap());
        }
        prop_assert_eq!(orbit.as_rational().unwrap(), x.trace_in(24));
    }

    #[test]
    fn solver_matches_brute_force(
        n in 1usize..=3,
        ineqs in prop::collection::vec((prop::collection::vec(-5i64..=5, 3), -10i64..=10), 0..=3),
        eq in prop::option::of((prop::collection::vec(-5i64..=5, 3), -10i64..=10)),
        congs in prop::collection::vec((prop::collection::vec(-5i64..=5, 3), -10i64..=10, 2u64..=4), 0..=2),
    ) {
        const B: i64 = 6;
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let mut sys = IntegerLinearSystem::new(names.clone());
        for i in 0..n {
            let mut row = vec![0i64; n];
            row[i] = 1;
            sys.add_inequality(row.clone(), B);
            row[i] = -1;
            sys.add_inequality(row, B);
        }
        for (c, k) in &ineqs {
            sys.add_inequality(c[..n].to_vec(), *k);
        }
        if let Some((c, k)) = &eq {
            sys.add_equality(c[..n].to_vec(), *k);
        }
        for (c, k, m) in &congs {
            sys.add_congruence(c[..n].to_vec(), *k, *m);
        }

        let set = solver::enumerate(&sys, 1, 1_000_000);
        let aborted = matches!(set.status, SolveStatus::Aborted { .. });
        prop_assert!(!aborted);
        let got: BTreeSet<Vec<i64>> = set
            .solutions
            .iter()
            .map(|t| names.iter().map(|v| t.entries.get(v).copied().unwrap_or(0)).collect())
            .collect();

        let mut expected = BTreeSet::new();
        let mut x = vec![-B; n];
        loop {
            let eval = |c: &[i64], k: i64| k + c.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>();
            let ok = sys.equalities.iter().all(|r| eval(&r.coeffs, r.constant) == 0)
                && sys.inequalities.iter().all(|r| eval(&r.coeffs, r.constant) >= 0)
                && sys
                    .congruences
                    .iter()
                    .all(|(r, m)| eval(&r.coeffs, r.constant).rem_euclid(*m as i64) == 0);
            if ok {
                expected.insert(x.clone());
            }
            let mut i = 0;
            while i < n && x[i] == B {
                x[i] = -B;
                i += 1;
            }
            if i == n {
                break;
            }
            x[i] += 1;
        }
        prop_assert_eq!(got, expected);
    }
}

fn floor_i64(r: &BigRational) -> i64 {
    r.floor().to_integer().to_i64().unwrap()
}

fn ceil_i64(r: &BigRational) -> i64 {
    r.ceil().to_integer().to_i64().unwrap()
}

/// The rational bounds are complete on the real M12 systems: every integer
/// solution of the full system lies inside them, which we certify by
/// scanning the bounding box enlarged by one in every direction and
/// comparing against the enumeration.
#[test]
fn rational_bounds_box_completeness() {
    let all = bundled_m12();

    let mut systems: Vec<IntegerLinearSystem> = Vec::new();
    for k in [2u64, 3, 5, 11] {
        let tables = usable_tables(&all, k);
        let (_, sys) = help::build_system(&tables, k, &BTreeMap::new(), &CharacterSelection::all())
            .unwrap();
        systems.push(sys);
    }
    // the two surviving order-10 cases
    for two in [("2a", 1i64), ("2b", 1)] {
        let mut powers = BTreeMap::new();
        powers.insert(2, AugmentationTuple::new(2, [two]));
        powers.insert(5, AugmentationTuple::new(5, [("5a", 1)]));
        let tables = usable_tables(&all, 10);
        let (_, sys) =
            help::build_system(&tables, 10, &powers, &CharacterSelection::all()).unwrap();
        systems.push(sys);
    }

    for sys in &systems {
        let n = sys.variables.len();
        let intervals = match solver::rational_bounds(sys) {
            BoundsResult::Bounded(i) => i,
            other => panic!("expected bounded relaxation, got {other:?}"),
        };
        let box_: Vec<(i64, i64)> = intervals
            .iter()
            .map(|(lo, hi)| (ceil_i64(lo) - 1, floor_i64(hi) + 1))
            .collect();

        let set = solver::enumerate(sys, 1, solver::DEFAULT_NODE_CAP);
        assert!(!matches!(set.status, SolveStatus::Aborted { .. }));
        let got: BTreeSet<Vec<i64>> = set
            .solutions
            .iter()
            .map(|t| {
                sys.variables
                    .iter()
                    .map(|v| t.entries.get(v).copied().unwrap_or(0))
                    .collect()
            })
            .collect();

        // solutions sit strictly inside the un-enlarged bounds
        for s in &got {
            for (i, v) in s.iter().enumerate() {
                let val = BigRational::from(BigInt::from(*v));
                assert!(intervals[i].0 <= val && val <= intervals[i].1);
            }
        }

        // scanning the enlarged box finds exactly the same set
        let mut expected = BTreeSet::new();
        let mut x: Vec<i64> = box_.iter().map(|(lo, _)| *lo).collect();
        'scan: loop {
            let eval = |c: &[i64], k: i64| {
                k as i128 + c.iter().zip(&x).map(|(a, b)| *a as i128 * *b as i128).sum::<i128>()
            };
            let ok = sys.equalities.iter().all(|r| eval(&r.coeffs, r.constant) == 0)
                && sys.inequalities.iter().all(|r| eval(&r.coeffs, r.constant) >= 0)
                && sys
                    .congruences
                    .iter()
                    .all(|(r, m)| eval(&r.coeffs, r.constant).rem_euclid(*m as i128) == 0);
            if ok {
                expected.insert(x.clone());
            }
            for i in 0..=n {
                if i == n {
                    break 'scan;
                }
                if x[i] == box_[i].1 {
                    x[i] = box_[i].0;
                } else {
                    x[i] += 1;
                    break;
                }
            }
        }
        assert_eq!(got, expected, "box scan disagrees for {:?}", sys.variables);
    }
}
