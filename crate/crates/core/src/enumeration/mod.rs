//! Exhaustive generation of small lattices and the sweeps built on it.

mod generate;
mod report;

pub use generate::{
    atom_extensions, enumerate_lattices, enumerate_lattices_oracle, enumerate_lattices_with_max,
    enumerate_levels, next_level, DEFAULT_MAX, HARD_MAX,
};
pub use report::{
    cover_certificate, spectrum, spectrum_with, theorem_report, verify_theorem,
    verify_theorem_with, ClassRecord, RunOptions, SpectrumReport, TheoremReport,
};
