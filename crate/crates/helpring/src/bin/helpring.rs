//! Command-line front end: character table validation, single-order HeLP
//! solving, and full pipeline runs with JSON or markdown reports.
//!
//! Exit codes: 0 = completed, 2 = completed but some order or case hit a
//! guard and was aborted, 1 = error.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use helpring::help::CharacterSelection;
use helpring::orchestrator::{self, Limits, OrderStatus};
use helpring::report::{self, ReportMeta};
use helpring::solver::SolveStatus;
use helpring::tables::{parse_table, CharacterTable};

#[derive(Parser)]
#[command(name = "helpring", version, about = "HeLP solver for torsion units in integral group rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate character table files.
    Validate {
        /// Table files to check.
        files: Vec<PathBuf>,
    },
    /// Solve the HeLP systems for one unit order.
    Solve {
        /// Directory containing the character table JSON files.
        #[arg(long)]
        tables: PathBuf,
        /// Candidate unit order to analyze.
        #[arg(long)]
        order: u64,
        /// Restrict to these character names (comma separated).
        #[arg(long, value_delimiter = ',')]
        chars: Option<Vec<String>>,
        /// Restrict to these characteristics (comma separated; 0 = ordinary).
        #[arg(long, value_delimiter = ',')]
        charcs: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Cap on the number of composed cases per order.
        #[arg(long)]
        max_cases: Option<u64>,
    },
    /// Analyze every candidate order and compare prime graphs.
    RunAll {
        /// Directory containing the character table JSON files.
        #[arg(long)]
        tables: PathBuf,
        /// Attempt the open orders whose case sets multiply over unresolved
        /// solution sets.
        #[arg(long)]
        include_open_orders: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Cap on the number of composed cases per order.
        #[arg(long)]
        max_cases: Option<u64>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}

fn load_dir(dir: &PathBuf) -> Result<Vec<CharacterTable>, String> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| format!("{}: {}", dir.display(), e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().map(|e| e == "json").unwrap_or(false))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(format!("{}: no table files found", dir.display()));
    }
    let mut tables = Vec::new();
    for p in paths {
        let text = std::fs::read_to_string(&p).map_err(|e| format!("{}: {}", p.display(), e))?;
        let t = parse_table(&text).map_err(|e| format!("{}: {}", p.display(), e))?;
        tables.push(t);
    }
    Ok(tables)
}

fn selection(
    tables: &[CharacterTable],
    chars: Option<Vec<String>>,
    charcs: Option<Vec<u64>>,
) -> Result<CharacterSelection, String> {
    if let Some(names) = &chars {
        for n in names {
            let exists = tables
                .iter()
                .any(|t| t.characters.iter().any(|c| &c.name == n));
            if !exists {
                return Err(format!("character {} not found in any table", n));
            }
        }
    }
    Ok(CharacterSelection {
        names: chars,
        characteristics: charcs,
    })
}

fn limits(max_cases: Option<u64>) -> Limits {
    let mut l = Limits::default();
    if let Some(m) = max_cases {
        l.max_cases = m;
    }
    l
}

fn aborted_order(v: &orchestrator::OrderVerdict) -> bool {
    v.status == OrderStatus::Aborted
        || v.cases
            .iter()
            .any(|c| matches!(c.solutions.status, SolveStatus::Aborted { .. }))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Validate { files } => {
            if files.is_empty() {
                return Err("no files given".to_string());
            }
            for p in &files {
                let text =
                    std::fs::read_to_string(p).map_err(|e| format!("{}: {}", p.display(), e))?;
                let t = parse_table(&text).map_err(|e| format!("{}: {}", p.display(), e))?;
                println!(
                    "{}: ok ({}, characteristic {}, {} classes, {} characters)",
                    p.display(),
                    t.group_name,
                    t.characteristic,
                    t.classes.len(),
                    t.characters.len()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve {
            tables,
            order,
            chars,
            charcs,
            format,
            max_cases,
        } => {
            if order <= 1 {
                return Err("order must be greater than 1".to_string());
            }
            let all = load_dir(&tables)?;
            let sel = selection(&all, chars, charcs)?;
            let lim = limits(max_cases);
            let ordinary = all
                .iter()
                .find(|t| t.characteristic == 0)
                .ok_or("no ordinary table in directory")?;
            if ordinary.exponent % order != 0 {
                return Err(format!(
                    "order {} does not divide the group exponent {}",
                    order, ordinary.exponent
                ));
            }
            // solve the divisor ladder bottom-up so the profiles exist
            let mut admitted = BTreeMap::new();
            let mut target = None;
            for k in orchestrator::candidate_orders(ordinary) {
                if order % k != 0 {
                    continue;
                }
                let verdict = orchestrator::solve_order(k, &all, &admitted, &sel, &lim);
                orchestrator::admit_profiles(&mut admitted, &verdict);
                if k == order {
                    target = Some(verdict);
                }
            }
            let verdict = target.expect("target order is a candidate");
            let aborted = aborted_order(&verdict);
            let rep = report::solve_report(&ordinary.group_name, &verdict);
            let meta = ReportMeta::now();
            match format {
                Format::Json => print!("{}", report::to_json(meta, &rep)),
                Format::Md => print!("{}", report::solve_markdown(&meta, &rep)),
            }
            Ok(ExitCode::from(if aborted { 2 } else { 0 }))
        }
        Command::RunAll {
            tables,
            include_open_orders,
            format,
            max_cases,
        } => {
            let all = load_dir(&tables)?;
            let sel = CharacterSelection::all();
            let lim = limits(max_cases);
            let ordinary = all
                .iter()
                .find(|t| t.characteristic == 0)
                .ok_or("no ordinary table in directory")?;
            let verdicts = orchestrator::run_all(&all, &sel, include_open_orders, &lim);
            let graph = orchestrator::kimmerle_report(ordinary, &verdicts)?;
            let aborted = verdicts.values().any(aborted_order);
            let rep = report::run_all_report(&ordinary.group_name, &verdicts, &graph);
            let meta = ReportMeta::now();
            match format {
                Format::Json => print!("{}", report::to_json(meta, &rep)),
                Format::Md => print!("{}", report::run_all_markdown(&meta, &rep)),
            }
            if graph.equal {
                eprintln!("(KC) holds: the prime graphs of the group and its normalized units match");
            }
            Ok(ExitCode::from(if aborted { 2 } else { 0 }))
        }
    }
}
