//! Tables, sweeps, the flux figure and the audit of printed values.
//!
//! Records are flat serde structs. [`write_records`] renders them as RFC 4180
//! CSV with six significant digits, or as a JSON array at full precision.

mod audit;
mod format;
mod svg;
mod tables;

pub use audit::{verify_all, AuditFinding, AuditReport, KnownDiscrepancy, Verdict, KNOWN_DISCREPANCIES};
pub use format::{sig6, write_records, OutputFormat};
pub use svg::{flux_svg, FluxFigure, DEFAULT_PHI0};
pub use tables::{
    default_force_sweep, force_table, parse_species, table1_records, table2_records, ForceSweep, Table1Record,
    Table2Record,
};
