//! Parse and validate the bundled character table files, then show what the
//! validator rejects: the parser checks element and centralizer orders
//! against the group order, power-map consistency, value conductors against
//! element orders, the degree-square sum for ordinary tables, and
//! p-regularity of the classes of Brauer tables.
//!
//! Usage: cargo run --example check_tables

use helpring::tables::parse_table;

fn main() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let mut paths: Vec<_> = std::fs::read_dir(data)
        .expect("data directory")
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().map(|e| e == "json").unwrap_or(false))
        .collect();
    paths.sort();

    for p in &paths {
        let text = std::fs::read_to_string(p).unwrap();
        match parse_table(&text) {
            Ok(t) => println!(
                "{}: ok - {} characteristic {}, {} classes, {} characters, exponent {}",
                p.file_name().unwrap().to_string_lossy(),
                t.group_name,
                t.characteristic,
                t.classes.len(),
                t.characters.len(),
                t.exponent
            ),
            Err(e) => println!("{}: REJECTED - {}", p.display(), e),
        }
    }

    // corrupt one degree and watch the degree-square sum fail
    let text = std::fs::read_to_string(format!("{data}/m12.json")).unwrap();
    let broken = text.replacen("\n    \"11\",", "\n    \"12\",", 1);
    println!("\nwith one corrupted character degree:");
    match parse_table(&broken) {
        Ok(_) => println!("  unexpectedly accepted"),
        Err(e) => println!("  rejected: {e}"),
    }
}
