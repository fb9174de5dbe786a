//! Exact Luthar-Passi (HeLP) engine for torsion units in integral group
//! rings, with bundled ordinary and Brauer character tables for the Mathieu
//! group M12.
//!
//! The pipeline: [`tables`] loads and validates character tables, [`help`]
//! turns a candidate partial augmentation profile into an integer linear
//! system of HeLP constraints, [`solver`] enumerates its solutions exactly,
//! and [`orchestrator`] walks the divisor lattice of candidate torsion-unit
//! orders and assembles verdicts and the prime-graph comparison.

pub mod arith;
pub mod help;
pub mod orchestrator;
pub mod report;
pub mod solver;
pub mod tables;
