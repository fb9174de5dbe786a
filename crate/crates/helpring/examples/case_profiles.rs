//! Print the composed case profiles for one unit order as JSON lines: one
//! coherent assignment of admitted partial-augmentation tuples per power,
//! keyed by the order of the power.
//!
//! This is also how tools/cases20.jsonl (the input of the independent
//! order-20 cross-check in tools/check_order20.py) is produced:
//!
//!     cargo run --example case_profiles -- 20 > tools/cases20.jsonl
//!
//! Usage: cargo run --example case_profiles -- [ORDER]

use std::collections::BTreeMap;

use helpring::help::CharacterSelection;
use helpring::orchestrator::{self, Limits};
use helpring::tables::bundled_m12;

fn main() {
    let order: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("order must be an integer"))
        .unwrap_or(20);
    let all = bundled_m12();
    let selection = CharacterSelection::all();
    let limits = Limits::default();
    let mut admitted = BTreeMap::new();
    for k in orchestrator::candidate_orders(&all[0]) {
        if !order.is_multiple_of(k) || k == order {
            continue;
        }
        let verdict = orchestrator::solve_order(k, &all, &admitted, &selection, &limits);
        orchestrator::admit_profiles(&mut admitted, &verdict);
    }
    for p in orchestrator::compose_profiles(order, &admitted) {
        let mut obj = BTreeMap::new();
        for (m, t) in &p.assignments {
            obj.insert(m.to_string(), t.entries.clone());
        }
        println!("{}", serde_json::to_string(&obj).unwrap());
    }
}
