//! Bi-fuzzy (type-2 fuzzy) discrete event systems.
//!
//! Event occurrence and state membership are both graded: every degree is a
//! normal convex fuzzy set over `[0, 1]` (an NCFD) rather than a single number.
//! The crate provides the NCFD algebra, matrices over it, bi-fuzzy automata
//! with parallel composition, supervisory controllability and nonblocking
//! checks, supremal/infimal controllable approximations over finite language
//! tables, and a traffic-signal simulation comparing bi-fuzzy control with its
//! type-1 counterpart.

pub mod automaton;
pub mod cli;
pub mod format;
pub mod interval;
pub mod lang;
pub mod linear;
pub mod ncfd;
pub mod samples;
pub mod supervisory;
pub mod traffic;

pub use automaton::{Bfdes, EventString};
pub use interval::IntervalDegree;
pub use linear::{NcfdMatrix, NcfdVector};
pub use ncfd::{GridSpec, Ncfd};
pub use supervisory::{
    check_controllability, check_nonblocking_supervision, ControllabilityReport,
    UncontrollabilityMap, Verdict,
};
