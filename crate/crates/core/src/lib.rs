//! Universal cycles (U-cycles) of restricted classes of words.
//!
//! A U-cycle of a class of `m`-letter words is a cyclic string whose
//! length-`m` sliding windows, read with wraparound, list every word of the
//! class exactly once. This crate
//!
//! - enumerates restricted classes ([`ClassSpec`]): plain words, injections,
//!   surjections, almost-onto words, non-bijections, equitable and
//!   s-inequitable words, rankings with ties, and passwords;
//! - counts them in closed form and by brute force ([`counting`]);
//! - builds the restricted de Bruijn digraph ([`digraph`]) and decides
//!   existence from degree balance and strong connectivity ([`euler`]);
//! - constructs cycles with an iterative Hierholzer circuit and checks any
//!   candidate cycle independently ([`verify`]);
//! - produces explicit connectivity witness paths ([`witness`]).
//!
//! ```
//! use ucycle::{generate, verify_ucycle, ClassSpec, DEFAULT_BUDGET};
//!
//! let spec = ClassSpec::Ranking { m: 3 };
//! let cycle = generate(&spec, DEFAULT_BUDGET).unwrap();
//! assert_eq!(cycle.len(), 13);
//! assert!(verify_ucycle(&spec, &cycle.letters, DEFAULT_BUDGET).unwrap().passed());
//! ```

pub mod class;
pub mod cli;
pub mod counting;
pub mod digraph;
pub mod error;
pub mod euler;
pub mod format;
pub mod verify;
pub mod witness;
pub mod word;

pub use class::{
    enumerate_class, is_member, validate_spec, ClassSpec, Expectation, NormalizedSpec,
    DEFAULT_BUDGET,
};
pub use counting::{count_brute_force, count_closed_form, count_report, CountReport};
pub use digraph::{build_digraph, degree_profile, DegreeProfile, TransitionDigraph};
pub use error::{Error, Result};
pub use euler::{
    check_balanced, diagnose, eulerian_circuit, generate, read_ucycle,
    strongly_connected_components, ExistenceReport, Reason, UCycle,
};
pub use verify::{verify_ucycle, VerificationReport};
pub use witness::{
    bfs_path, lag_cycle, letter_status, position_swap_path, ranking_collapse_path, reverse_path,
    status_swap_path, validate_path, LetterStatus, WitnessPath,
};
pub use word::{letter_histogram, Histogram, Letter, Word};
