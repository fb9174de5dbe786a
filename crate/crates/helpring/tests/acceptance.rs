//! End-to-end acceptance suite: reproduces the published M12 torsion-unit
//! results with the bundled tables. Each test covers one numbered criterion
//! and prints a single pass/fail line (run with `--nocapture` to see them).

use std::collections::{BTreeMap, BTreeSet};
use std::panic::AssertUnwindSafe;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use helpring::help::{self, AugmentationTuple, CharacterSelection, MuConstraint};
use helpring::orchestrator::{self, Limits, OrderStatus, OrderVerdict};
use helpring::solver::{self, SolveStatus};
use helpring::tables::{bundled_m12, usable_tables, CharacterTable};

fn criterion(n: usize, desc: &str, f: impl FnOnce()) {
    match std::panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(()) => println!("criterion {n}: PASS - {desc}"),
        Err(e) => {
            println!("criterion {n}: FAIL - {desc}");
            std::panic::resume_unwind(e);
        }
    }
}

fn tables() -> &'static [CharacterTable] {
    static T: OnceLock<Vec<CharacterTable>> = OnceLock::new();
    T.get_or_init(bundled_m12)
}

struct Run {
    verdicts: BTreeMap<u64, OrderVerdict>,
    elapsed: Duration,
}

/// The full pipeline over every candidate order (open orders excluded),
/// computed once and shared by the criteria that inspect it.
fn full_run() -> &'static Run {
    static R: OnceLock<Run> = OnceLock::new();
    R.get_or_init(|| {
        let start = Instant::now();
        let verdicts = orchestrator::run_all(
            tables(),
            &CharacterSelection::all(),
            false,
            &Limits::default(),
        );
        Run {
            verdicts,
            elapsed: start.elapsed(),
        }
    })
}

fn tuple_vec(entries: &BTreeMap<String, i64>, names: &[&str]) -> Vec<i64> {
    names
        .iter()
        .map(|n| entries.get(*n).copied().unwrap_or(0))
        .collect()
}

fn merged_set(v: &OrderVerdict, names: &[&str]) -> BTreeSet<Vec<i64>> {
    v.merged
        .iter()
        .map(|m| tuple_vec(&m.tuple.entries, names))
        .collect()
}

fn expect_set(tuples: &[&[i64]]) -> BTreeSet<Vec<i64>> {
    tuples.iter().map(|t| t.to_vec()).collect()
}

/// Scaled form of one mu constraint as (coefficients over `names`, constant).
fn form(c: &MuConstraint, names: &[&str]) -> (Vec<i64>, i64) {
    let coeffs = names
        .iter()
        .map(|n| {
            c.scaled_form
                .coefficients
                .get(*n)
                .map(|r| i64::try_from(r.to_integer()).unwrap())
                .unwrap_or(0)
        })
        .collect();
    (coeffs, i64::try_from(c.scaled_form.constant.to_integer()).unwrap())
}

fn mu(table_charc: u64, chi: &str, k: u64, l: u64, powers: &BTreeMap<u64, AugmentationTuple>) -> MuConstraint {
    let t = tables()
        .iter()
        .find(|t| t.characteristic == table_charc)
        .unwrap();
    help::mu_form(t, t.character(chi).unwrap(), k, l, powers).unwrap()
}

#[test]
fn criterion_1_order_2() {
    criterion(1, "order 2: the six published pairs, under 5 s", || {
        let start = Instant::now();
        let v = orchestrator::solve_order(
            2,
            tables(),
            &BTreeMap::new(),
            &CharacterSelection::all(),
            &Limits::default(),
        );
        let elapsed = start.elapsed();
        assert_eq!(v.status, OrderStatus::HasNontrivialSolutions);
        assert_eq!(
            merged_set(&v, &["2a", "2b"]),
            expect_set(&[&[0, 1], &[-2, 3], &[2, -1], &[1, 0], &[3, -2], &[-1, 2]])
        );
        assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    });
}

#[test]
fn criterion_2_orders_3_11_5() {
    criterion(2, "order 3: five pairs; order 11: four pairs; order 5: trivial", || {
        let run = full_run();
        let v3 = &run.verdicts[&3];
        assert_eq!(
            merged_set(v3, &["3a", "3b"]),
            expect_set(&[&[0, 1], &[2, -1], &[1, 0], &[3, -2], &[-1, 2]])
        );
        let v11 = &run.verdicts[&11];
        assert_eq!(
            merged_set(v11, &["11a", "11b"]),
            expect_set(&[&[0, 1], &[2, -1], &[1, 0], &[-1, 2]])
        );
        let v5 = &run.verdicts[&5];
        assert_eq!(v5.status, OrderStatus::RealizedTrivially);
        assert_eq!(merged_set(v5, &["5a"]), expect_set(&[&[1]]));
        assert!(v5.merged[0].rationally_trivial);
    });
}

/// Enumerate a hand-assembled order-10 system over (2a, 2b, 5a, 10a).
fn order10_solutions(constraints: &[MuConstraint]) -> BTreeSet<Vec<i64>> {
    let vars: Vec<String> = ["2a", "2b", "5a", "10a"].iter().map(|s| s.to_string()).collect();
    let system = help::compile_system(&vars, constraints, 10);
    let set = solver::enumerate(&system, 10, solver::DEFAULT_NODE_CAP);
    assert!(!matches!(set.status, SolveStatus::Aborted { .. }));
    set.solutions
        .iter()
        .map(|t| tuple_vec(&t.entries, &["2a", "2b", "5a", "10a"]))
        .collect()
}

#[test]
fn criterion_3_order_10() {
    criterion(3, "order 10: final set and published case narrowings", || {
        // final merged set from the full pipeline
        let run = full_run();
        let v10 = &run.verdicts[&10];
        assert_eq!(
            merged_set(v10, &["2a", "2b", "5a", "10a"]),
            expect_set(&[&[0, 0, 0, 1], &[1, 1, 0, -1]])
        );

        // Case 1: u^5 ~ 2a, u^2 ~ 5a. The six printed forms alone leave
        // three candidates; mu_1(u, chi_4, *) narrows them to one.
        let mut p1 = BTreeMap::new();
        p1.insert(2, AugmentationTuple::new(2, [("2a", 1)]));
        p1.insert(5, AugmentationTuple::new(5, [("5a", 1)]));
        let mut cs: Vec<MuConstraint> = Vec::new();
        for chi in ["chi_2", "chi_4", "chi_7"] {
            for l in [0, 5] {
                cs.push(mu(0, chi, 10, l, &p1));
            }
        }
        assert_eq!(
            order10_solutions(&cs),
            expect_set(&[&[-1, 0, 0, 2], &[0, 0, 0, 1], &[1, 0, 0, 0]])
        );
        cs.push(mu(0, "chi_4", 10, 1, &p1));
        assert_eq!(order10_solutions(&cs), expect_set(&[&[0, 0, 0, 1]]));

        // Case 2: u^5 ~ 2b. Same six forms leave three candidates;
        // mu_1(u, chi_4, *) and mu_0(u, chi_4, 3) narrow them to one.
        let mut p2 = BTreeMap::new();
        p2.insert(2, AugmentationTuple::new(2, [("2b", 1)]));
        p2.insert(5, AugmentationTuple::new(5, [("5a", 1)]));
        let mut cs: Vec<MuConstraint> = Vec::new();
        for chi in ["chi_2", "chi_4", "chi_7"] {
            for l in [0, 5] {
                cs.push(mu(0, chi, 10, l, &p2));
            }
        }
        assert_eq!(
            order10_solutions(&cs),
            expect_set(&[&[-1, 1, 0, 1], &[0, 1, 0, 0], &[1, 1, 0, -1]])
        );
        cs.push(mu(0, "chi_4", 10, 1, &p2));
        cs.push(mu(3, "chi_4", 10, 0, &p2));
        assert_eq!(order10_solutions(&cs), expect_set(&[&[1, 1, 0, -1]]));
    });
}

#[test]
fn criterion_4_eliminations_and_timing() {
    criterion(4, "orders 15/22/33/55 eliminated, multiples skipped, run under 2 min", || {
        let run = full_run();
        for (k, cases) in [(15u64, 5usize), (22, 24), (33, 20), (55, 4)] {
            let v = &run.verdicts[&k];
            assert_eq!(v.status, OrderStatus::Eliminated, "order {k}");
            assert_eq!(v.cases.len(), cases, "order {k} case count");
        }
        // every proper multiple of an eliminated order is settled for free
        for (k, v) in &run.verdicts {
            let multiple = [15u64, 20, 22, 33, 55].iter().any(|d| k % d == 0 && k != d);
            if multiple {
                assert_eq!(v.status, OrderStatus::SkippedByDivisor, "order {k}");
            }
        }
        assert!(
            run.elapsed < Duration::from_secs(120),
            "full run took {:?}",
            run.elapsed
        );
    });
}

#[test]
fn criterion_5_orders_4_6_8() {
    criterion(5, "orders 4, 6, 8 feasible with every trivial tuple present", || {
        let run = full_run();
        for (k, classes) in [(4u64, ["4a", "4b"]), (6, ["6a", "6b"]), (8, ["8a", "8b"])] {
            let v = &run.verdicts[&k];
            assert_eq!(v.status, OrderStatus::HasNontrivialSolutions, "order {k}");
            for c in classes {
                let found = v.merged.iter().any(|m| {
                    m.tuple.entries.len() == 1 && m.tuple.entries.get(c) == Some(&1)
                });
                assert!(found, "trivial tuple {{{c}: 1}} missing at order {k}");
            }
        }
    });
}

#[test]
fn criterion_6_orders_12_20() {
    criterion(6, "order 12 stays open with re-verified solutions; order 20 eliminated", || {
        let run = full_run();

        // order 12 survives the method; re-verify a returned solution
        // through the independent checker
        let v12 = &run.verdicts[&12];
        assert_ne!(v12.status, OrderStatus::Eliminated);
        assert!(!v12.merged.is_empty());
        let usable = usable_tables(tables(), 12);
        let case = v12
            .cases
            .iter()
            .find(|c| !c.solutions.solutions.is_empty())
            .expect("some case has solutions");
        let sol = &case.solutions.solutions[0];
        let verdict = solver::check_solution(
            &usable,
            12,
            &case.profile.assignments,
            &CharacterSelection::all(),
            sol,
        );
        assert_eq!(verdict, None, "independent check rejected {sol:?}");

        // order 20 goes beyond the published analysis (which stopped at the
        // orders of group elements plus 10): composing the full admitted
        // sets of orders 4 and 10 eliminates every case. This verdict is
        // cross-checked against an independent reimplementation; see
        // tools/check_order20.py.
        let v20 = &run.verdicts[&20];
        assert_eq!(v20.status, OrderStatus::Eliminated);
        assert_eq!(v20.cases.len(), 79);
        assert!(v20
            .cases
            .iter()
            .all(|c| c.solutions.status == SolveStatus::Infeasible));
    });
}

#[test]
fn criterion_7_formula_fidelity() {
    criterion(7, "generated scaled forms match the published ones coefficient-for-coefficient", || {
        let empty = BTreeMap::new();
        let v2 = ["2a", "2b"];
        // order 2, chi_2 ordinary: (1/2)(-t1 + 11) and (1/2)(t1 + 11)
        // with t1 = nu_2a - 3 nu_2b
        assert_eq!(form(&mu(0, "chi_2", 2, 0, &empty), &v2), (vec![-1, 3], 11));
        assert_eq!(form(&mu(0, "chi_2", 2, 1, &empty), &v2), (vec![1, -3], 11));
        // order 2, chi_2 mod 3: (1/2)(-2 t2 + 10) and (1/2)(2 t2 + 10)
        // with t2 = nu_2a - nu_2b
        assert_eq!(form(&mu(3, "chi_2", 2, 0, &empty), &v2), (vec![-2, 2], 10));
        assert_eq!(form(&mu(3, "chi_2", 2, 1, &empty), &v2), (vec![2, -2], 10));

        let v11 = ["11a", "11b"];
        // order 11, chi_4 ordinary and mod 3 at l = 1, 2
        assert_eq!(form(&mu(0, "chi_4", 11, 1, &empty), &v11), (vec![6, -5], 16));
        assert_eq!(form(&mu(0, "chi_4", 11, 2, &empty), &v11), (vec![-5, 6], 16));
        assert_eq!(form(&mu(3, "chi_4", 11, 1, &empty), &v11), (vec![7, -4], 15));
        assert_eq!(form(&mu(3, "chi_4", 11, 2, &empty), &v11), (vec![-4, 7], 15));

        // order 10 Case 1 (u^5 ~ 2a, u^2 ~ 5a): all six printed forms, in
        // terms of t1 = nu_2a - 3 nu_2b - nu_5a + nu_10a,
        // t2 = 4 nu_2a + nu_5a - nu_10a, t3 = 6 nu_2a + 6 nu_2b - nu_5a + nu_10a
        let mut p1 = BTreeMap::new();
        p1.insert(2, AugmentationTuple::new(2, [("2a", 1)]));
        p1.insert(5, AugmentationTuple::new(5, [("5a", 1)]));
        let v10 = ["2a", "2b", "5a", "10a"];
        assert_eq!(form(&mu(0, "chi_2", 10, 0, &p1), &v10), (vec![-4, 12, 4, -4], 14));
        assert_eq!(form(&mu(0, "chi_2", 10, 5, &p1), &v10), (vec![4, -12, -4, 4], 16));
        assert_eq!(form(&mu(0, "chi_4", 10, 0, &p1), &v10), (vec![16, 0, 4, -4], 24));
        assert_eq!(form(&mu(0, "chi_4", 10, 5, &p1), &v10), (vec![-16, 0, -4, 4], 16));
        assert_eq!(form(&mu(0, "chi_7", 10, 0, &p1), &v10), (vec![24, 24, -4, 4], 56));
        assert_eq!(form(&mu(0, "chi_7", 10, 5, &p1), &v10), (vec![-24, -24, 4, -4], 44));

        // order 55, chi_2 ordinary: (1/55)(40 nu_5a + 15) in all four cases
        let v55 = ["5a", "11a", "11b"];
        for t11 in [
            AugmentationTuple::new(11, [("11a", 1)]),
            AugmentationTuple::new(11, [("11b", 1)]),
            AugmentationTuple::new(11, [("11a", 2), ("11b", -1)]),
            AugmentationTuple::new(11, [("11a", -1), ("11b", 2)]),
        ] {
            let mut p = BTreeMap::new();
            p.insert(11, t11);
            p.insert(5, AugmentationTuple::new(5, [("5a", 1)]));
            assert_eq!(form(&mu(0, "chi_2", 55, 0, &p), &v55), (vec![40, 0, 0], 15));
        }
    });
}

#[test]
fn criterion_8_prime_graphs() {
    criterion(8, "prime graph of the normalized units matches the group's", || {
        let run = full_run();
        let ordinary = &tables()[0];
        let report = orchestrator::kimmerle_report(ordinary, &run.verdicts).unwrap();
        assert_eq!(report.primes, vec![2, 3, 5, 11]);
        assert_eq!(report.group_edges, vec![(2, 3), (2, 5)]);
        assert_eq!(report.unit_edges, vec![(2, 3), (2, 5)]);
        assert!(report.equal);
    });
}

#[test]
fn criterion_9_property_suites() {
    criterion(9, "arithmetic invariants, solver oracle, and the sum identity", || {
        arith_invariants();
        solver_oracle();
        sum_identity();
    });
}

use helpring::arith::{self, ratio, Cyclotomic};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_cyclotomic(rng: &mut StdRng, n: u64) -> Cyclotomic {
    let mut acc = Cyclotomic::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(1i64..=4);
        let e = rng.gen_range(0i64..n as i64);
        acc = acc.add(&Cyclotomic::root_of_unity(n, e).scale(&ratio(num, den)));
    }
    acc
}

/// 1000 random elements of conductor at most 24: Galois maps are ring
/// homomorphisms, commute as exponents multiply, preserve the trace, and
/// the trace is the sum over the Galois orbit; printing round-trips.
fn arith_invariants() {
    let mut rng = StdRng::seed_from_u64(11);
    let units: Vec<u64> = (1..24).filter(|j| helpring::arith::nt::gcd(*j, 24) == 1).collect();
    // conductors divide 24 so the Galois group of Q(zeta_24) acts on everything
    let conductors = [1u64, 2, 3, 4, 6, 8, 12, 24];
    for _ in 0..1000 {
        let n = conductors[rng.gen_range(0..conductors.len())];
        let x = random_cyclotomic(&mut rng, n);
        let y = random_cyclotomic(&mut rng, n);
        assert!(x.conductor() <= 24);

        let j = units[rng.gen_range(0..units.len())];
        let k = units[rng.gen_range(0..units.len())];
        let sx = x.galois(j).unwrap();
        let sy = y.galois(j).unwrap();
        assert_eq!(x.add(&y).galois(j).unwrap(), sx.add(&sy));
        assert_eq!(x.mul(&y).galois(j).unwrap(), sx.mul(&sy));
        assert_eq!(
            sx.galois(k).unwrap(),
            x.galois((j * k) % 24).unwrap(),
            "automorphism composition"
        );
        assert_eq!(sx.trace_in(24), x.trace_in(24), "trace is Galois-invariant");
        assert_eq!(x.add(&y).trace_in(24), x.trace_in(24) + y.trace_in(24));

        let mut orbit = Cyclotomic::zero();
        for &j in &units {
            orbit = orbit.add(&x.galois(j).unwrap());
        }
        assert_eq!(orbit.as_rational().unwrap(), x.trace_in(24));

        assert_eq!(arith::parse(&arith::print(&x)).unwrap(), x);
    }
}

/// 200 random small systems: the enumeration agrees exactly with a
/// brute-force scan of the bounding box.
fn solver_oracle() {
    let mut rng = StdRng::seed_from_u64(23);
    const B: i64 = 6;
    for round in 0..200 {
        let n = rng.gen_range(1usize..=3);
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let mut sys = solver::IntegerLinearSystem::new(names.clone());
        let row = |rng: &mut StdRng| -> (Vec<i64>, i64) {
            (
                (0..n).map(|_| rng.gen_range(-5i64..=5)).collect(),
                rng.gen_range(-10i64..=10),
            )
        };
        // box constraints keep every instance bounded
        for i in 0..n {
            let mut lo = vec![0i64; n];
            lo[i] = 1;
            sys.add_inequality(lo.clone(), B);
            lo[i] = -1;
            sys.add_inequality(lo, B);
        }
        for _ in 0..rng.gen_range(0..=2) {
            let (c, k) = row(&mut rng);
            sys.add_inequality(c, k);
        }
        if rng.gen_bool(0.4) {
            let (c, k) = row(&mut rng);
            sys.add_equality(c, k);
        }
        for _ in 0..rng.gen_range(0..=2) {
            let (c, k) = row(&mut rng);
            sys.add_congruence(c, k, rng.gen_range(2u64..=4));
        }

        let set = solver::enumerate(&sys, 1, 1_000_000);
        assert!(!matches!(set.status, SolveStatus::Aborted { .. }));
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
        assert_eq!(got, expected, "round {round}: {sys:?}");
    }
}

/// For every solved order and every usable character, the scaled mu_l forms
/// over l sum to k * chi(1): the coefficients cancel and the constants add
/// up, whatever the assumed power profile.
fn sum_identity() {
    let run = full_run();
    for v in run.verdicts.values() {
        let case = match v.cases.first() {
            Some(c) => c,
            None => continue,
        };
        let k = v.order;
        for table in usable_tables(tables(), k) {
            for chi in &table.characters {
                let mut coeffs: BTreeMap<String, helpring::arith::Rational> = BTreeMap::new();
                let mut constant = helpring::arith::rat(0);
                for l in 0..k {
                    let c = help::mu_form(table, chi, k, l, &case.profile.assignments).unwrap();
                    constant += &c.scaled_form.constant;
                    for (name, r) in &c.scaled_form.coefficients {
                        *coeffs.entry(name.clone()).or_insert_with(|| helpring::arith::rat(0)) += r;
                    }
                }
                assert_eq!(constant, helpring::arith::rat((k * chi.degree()) as i64));
                for (name, r) in &coeffs {
                    assert_eq!(*r, helpring::arith::rat(0), "{} {} {}", k, chi.name, name);
                }
            }
        }
    }
}
