//! Exact short-cycle counts for bipartite (Tanner) graphs.
//!
//! The number of `i`-cycles is recovered from `tr(A^i)` by subtracting the
//! closed walks that are not cycles: cycle-free walks, which depend only on
//! degrees, and closed walks with cycle, which depend on shorter cycle counts.
//! Everything is generic over an exact integer type; [`Count`] is the default
//! and [`BigCount`] never overflows.

pub mod counter;
pub mod cwwc;
pub mod error;
pub mod formats;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod scalar;
pub mod spectrum;
pub mod trace;
pub mod walks;

pub use counter::{
    auto_lengths, capability, count_cycles, Capability, CountTerms, CycleReport, Method,
};
pub use error::{Error, Result};
pub use formats::{parse_alist, parse_edgelist, write_alist, write_edgelist, ParseError};
pub use gen::{generate, GenKind, GenSpec};
pub use graph::{classify, girth, BipartiteGraph, DegreeProfile, GirthValue, GraphClass};
pub use scalar::ExactInt;
pub use trace::{exact_traces, TraceVector};

pub type Count = i128;
pub type BigCount = num_bigint::BigInt;
pub type CountReport = CycleReport<Count>;
pub type BigCountReport = CycleReport<BigCount>;
