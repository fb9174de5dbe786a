//! Solve the HeLP system for one unit order against the bundled M12 tables,
//! printing every case and the merged solution set.
//!
//! Usage: cargo run --example solve_order -- [ORDER]

use std::collections::BTreeMap;

use helpring::help::CharacterSelection;
use helpring::orchestrator::{self, Limits, OrderStatus};
use helpring::tables::bundled_m12;

fn main() {
    let order: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("order must be an integer"))
        .unwrap_or(10);
    let all = bundled_m12();
    let selection = CharacterSelection::all();
    let limits = Limits::default();

    // solve the divisor lattice bottom-up so the order's profiles exist
    let mut admitted = BTreeMap::new();
    let mut target = None;
    for k in orchestrator::candidate_orders(&all[0]) {
        if !order.is_multiple_of(k) {
            continue;
        }
        let verdict = orchestrator::solve_order(k, &all, &admitted, &selection, &limits);
        orchestrator::admit_profiles(&mut admitted, &verdict);
        if k == order {
            target = Some(verdict);
        }
    }
    let verdict = target.expect("order must divide the group exponent");

    println!("order {}: {:?}", verdict.order, verdict.status);
    for (i, case) in verdict.cases.iter().enumerate() {
        let profile: Vec<String> = case
            .profile
            .assignments
            .iter()
            .map(|(m, t)| format!("u^{}~{:?}", verdict.order / m, t.entries))
            .collect();
        println!(
            "  case {}: {} constraints, {} solutions  [{}]",
            i + 1,
            case.constraint_count,
            case.solutions.solutions.len(),
            profile.join(", ")
        );
    }
    if verdict.status != OrderStatus::Eliminated {
        println!("merged solutions:");
        for m in &verdict.merged {
            let tag = if m.rationally_trivial {
                "  (rationally trivial)"
            } else {
                ""
            };
            println!("  {:?}{}", m.tuple.entries, tag);
        }
    }
}
