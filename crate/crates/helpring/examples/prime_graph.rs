//! Run the whole divisor lattice of candidate unit orders against the
//! bundled M12 tables and print every verdict plus the prime-graph
//! (Kimmerle) comparison.
//!
//! Usage: cargo run --release --example prime_graph -- [--include-open-orders]

use helpring::help::CharacterSelection;
use helpring::orchestrator::{self, Limits};
use helpring::tables::bundled_m12;

fn main() {
    let include_open = std::env::args().any(|a| a == "--include-open-orders");
    let all = bundled_m12();
    let selection = CharacterSelection::all();
    let limits = Limits::default();

    let verdicts = orchestrator::run_all(&all, &selection, include_open, &limits);
    for v in verdicts.values() {
        println!(
            "order {:>4}: {:?} ({} cases, {} solutions)",
            v.order,
            v.status,
            v.cases.len(),
            v.merged.len()
        );
    }

    let report = orchestrator::kimmerle_report(&all[0], &verdicts).unwrap();
    println!("\nprimes: {:?}", report.primes);
    println!("group prime graph edges: {:?}", report.group_edges);
    println!("unit prime graph edges:  {:?}", report.unit_edges);
    println!("graphs equal: {}", report.equal);
}
