//! Report documents for solve and run-all results: a JSON form that
//! round-trips losslessly and a markdown form that follows the analysis
//! order by ascending unit order with numbered cases. Timestamps and tool
//! versions live in a detachable header so the report body is byte-identical
//! across repeated runs with the same configuration.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::orchestrator::{MergedSolution, OrderStatus, OrderVerdict, PrimeGraphReport};
use crate::solver::SolveStatus;

/// Volatile run information, kept out of the deterministic body.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportMeta {
    pub generated_at: String,
    pub tool: String,
}

impl ReportMeta {
    pub fn now() -> Self {
        let secs = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        ReportMeta {
            generated_at: format!("{}", secs),
            tool: format!("helpring {}", env!("CARGO_PKG_VERSION")),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CaseReport {
    pub index: usize,
    /// Partial augmentation tuple assumed for each power order m (u^{k/m}).
    pub profile: BTreeMap<u64, BTreeMap<String, i64>>,
    pub constraint_count: usize,
    pub status: String,
    pub solutions: Vec<BTreeMap<String, i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MergedReport {
    pub tuple: BTreeMap<String, i64>,
    pub rationally_trivial: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OrderReport {
    pub order: u64,
    pub status: String,
    pub cases: Vec<CaseReport>,
    pub merged: Vec<MergedReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SolveReport {
    pub group: String,
    pub verdict: OrderReport,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphReport {
    pub primes: Vec<u64>,
    pub group_edges: Vec<(u64, u64)>,
    pub unit_edges: Vec<(u64, u64)>,
    pub equal: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RunAllReport {
    pub group: String,
    pub verdicts: Vec<OrderReport>,
    pub prime_graph: GraphReport,
    /// Whether the prime graph of the normalized units matches the group's.
    pub kc_holds: bool,
}

/// A report document: deterministic body plus volatile meta header.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Document<T> {
    pub meta: ReportMeta,
    pub report: T,
}

pub fn status_str(s: OrderStatus) -> &'static str {
    match s {
        OrderStatus::Eliminated => "eliminated",
        OrderStatus::RealizedTrivially => "realized-trivially",
        OrderStatus::HasNontrivialSolutions => "has-nontrivial-solutions",
        OrderStatus::SkippedByDivisor => "skipped-by-divisor",
        OrderStatus::Aborted => "aborted",
    }
}

fn solve_status_str(s: &SolveStatus) -> String {
    match s {
        SolveStatus::Feasible => "feasible".to_string(),
        SolveStatus::Infeasible => "infeasible".to_string(),
        SolveStatus::Aborted { cap } => format!("aborted at {} nodes", cap),
    }
}

fn merged_report(m: &MergedSolution) -> MergedReport {
    MergedReport {
        tuple: m.tuple.entries.clone(),
        rationally_trivial: m.rationally_trivial,
    }
}

pub fn order_report(v: &OrderVerdict) -> OrderReport {
    OrderReport {
        order: v.order,
        status: status_str(v.status).to_string(),
        cases: v
            .cases
            .iter()
            .enumerate()
            .map(|(i, c)| CaseReport {
                index: i + 1,
                profile: c
                    .profile
                    .assignments
                    .iter()
                    .map(|(m, t)| (*m, t.entries.clone()))
                    .collect(),
                constraint_count: c.constraint_count,
                status: solve_status_str(&c.solutions.status),
                solutions: c
                    .solutions
                    .solutions
                    .iter()
                    .map(|t| t.entries.clone())
                    .collect(),
            })
            .collect(),
        merged: v.merged.iter().map(merged_report).collect(),
    }
}

pub fn solve_report(group: &str, v: &OrderVerdict) -> SolveReport {
    SolveReport {
        group: group.to_string(),
        verdict: order_report(v),
    }
}

pub fn run_all_report(
    group: &str,
    verdicts: &BTreeMap<u64, OrderVerdict>,
    graph: &PrimeGraphReport,
) -> RunAllReport {
    RunAllReport {
        group: group.to_string(),
        verdicts: verdicts.values().map(order_report).collect(),
        prime_graph: GraphReport {
            primes: graph.primes.clone(),
            group_edges: graph.group_edges.clone(),
            unit_edges: graph.unit_edges.clone(),
            equal: graph.equal,
        },
        kc_holds: graph.equal,
    }
}

/// Serialize as JSON with the meta header attached. The `report` field alone
/// is the deterministic body.
pub fn to_json<T: Serialize>(meta: ReportMeta, report: &T) -> String {
    let doc = serde_json::json!({ "meta": meta, "report": report });
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

fn tuple_str(t: &BTreeMap<String, i64>) -> String {
    if t.is_empty() {
        return "0".to_string();
    }
    t.iter()
        .map(|(k, v)| format!("{}:{}", k, v))
        .collect::<Vec<_>>()
        .join(", ")
}

fn markdown_order(out: &mut String, v: &OrderReport) {
    out.push_str(&format!("## Order {}\n\nstatus: {}\n\n", v.order, v.status));
    for c in &v.cases {
        let mut profile = c
            .profile
            .iter()
            .map(|(m, t)| format!("u^{} (order {}) ~ [{}]", v.order / m, m, tuple_str(t)))
            .collect::<Vec<_>>()
            .join("; ");
        if profile.is_empty() {
            profile = "none (prime order)".to_string();
        }
        out.push_str(&format!(
            "### Case {}\n\npowers: {}\nconstraints: {}\nresult: {}\n",
            c.index, profile, c.constraint_count, c.status
        ));
        if !c.solutions.is_empty() {
            out.push_str("solutions:\n");
            for s in &c.solutions {
                out.push_str(&format!("- ({})\n", tuple_str(s)));
            }
        }
        out.push('\n');
    }
    if !v.merged.is_empty() {
        out.push_str("merged solutions:\n");
        for m in &v.merged {
            let tag = if m.rationally_trivial {
                "  [rationally trivial]"
            } else {
                ""
            };
            out.push_str(&format!("- ({}){}\n", tuple_str(&m.tuple), tag));
        }
        out.push('\n');
    }
}

fn markdown_header(meta: &ReportMeta) -> String {
    format!(
        "<!-- generated_at: {}; tool: {} -->\n\n",
        meta.generated_at, meta.tool
    )
}

/// Markdown body for a single-order solve, cases numbered in composition
/// order. The header comment is the only non-deterministic part.
pub fn solve_markdown(meta: &ReportMeta, r: &SolveReport) -> String {
    let mut out = markdown_header(meta);
    out.push_str(&format!(
        "# HeLP analysis: {}, units of order {}\n\n",
        r.group, r.verdict.order
    ));
    markdown_order(&mut out, &r.verdict);
    out
}

/// Markdown body for a full run, orders ascending.
pub fn run_all_markdown(meta: &ReportMeta, r: &RunAllReport) -> String {
    let mut out = markdown_header(meta);
    out.push_str(&format!("# HeLP analysis: {}, all candidate orders\n\n", r.group));
    out.push_str("| order | status | cases | merged solutions |\n");
    out.push_str("|------:|--------|------:|-----------------:|\n");
    for v in &r.verdicts {
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            v.order,
            v.status,
            v.cases.len(),
            v.merged.len()
        ));
    }
    out.push('\n');
    for v in &r.verdicts {
        if !v.cases.is_empty() {
            markdown_order(&mut out, v);
        }
    }
    let g = &r.prime_graph;
    out.push_str("## Prime graphs\n\n");
    out.push_str(&format!("primes: {:?}\n", g.primes));
    out.push_str(&format!("group edges: {:?}\n", g.group_edges));
    out.push_str(&format!("unit edges: {:?}\n", g.unit_edges));
    if r.kc_holds {
        out.push_str("\n(KC) holds: the prime graph of the normalized units matches the group's.\n");
    } else {
        out.push_str("\n(KC) is not decided: the prime graphs differ.\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::help::CharacterSelection;
    use crate::orchestrator::{self, Limits};
    use crate::tables::bundled_m12;

    #[test]
    fn json_round_trip_solve() {
        let all = bundled_m12();
        let verdict = orchestrator::solve_order(
            11,
            &all,
            &BTreeMap::new(),
            &CharacterSelection::all(),
            &Limits::default(),
        );
        let report = solve_report("M12", &verdict);
        let json = to_json(ReportMeta::now(), &report);
        let doc: Document<SolveReport> = serde_json::from_str(&json).unwrap();
        assert_eq!(doc.report, report);
        assert_eq!(doc.report.verdict.merged.len(), 4);
    }

    #[test]
    fn body_is_deterministic() {
        let all = bundled_m12();
        let verdict = orchestrator::solve_order(
            3,
            &all,
            &BTreeMap::new(),
            &CharacterSelection::all(),
            &Limits::default(),
        );
        let report = solve_report("M12", &verdict);
        let a = serde_json::to_string(&report).unwrap();
        let b = serde_json::to_string(&solve_report("M12", &verdict)).unwrap();
        assert_eq!(a, b);
        let meta1 = ReportMeta {
            generated_at: "1".into(),
            tool: "t".into(),
        };
        let meta2 = ReportMeta {
            generated_at: "2".into(),
            tool: "t".into(),
        };
        let m1 = solve_markdown(&meta1, &report);
        let m2 = solve_markdown(&meta2, &report);
        let body = |s: &str| s.split_once("-->\n\n").unwrap().1.to_string();
        assert_eq!(body(&m1), body(&m2));
        assert_ne!(m1, m2);
    }
}
