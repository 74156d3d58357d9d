//! Exact computation of independence polynomials and of the alternating
//! number of independent sets `I(G; -1)`, together with exact solvers for the
//! decycling number `φ(G)` and the ternary decycling number `φ₃(G)`, and a
//! verifier for the inequality chain
//!
//! ```text
//! |I(G; -1)|  <=  min over ternary decycling sets D of |Ind(G[D])|  <=  2^φ₃(G)
//! ```
//!
//! and the classical bounds it sharpens. Everything is exact: counts are
//! arbitrary-precision integers and every search either finishes or reports
//! that it ran out of budget.
//!
//! ```
//! use altind::{graph6, indpoly, decycling};
//!
//! let c6 = graph6::parse_graph6("EhEG").unwrap();
//! assert_eq!(indpoly::alternating_number(&c6).unwrap(), 2.into());
//! assert_eq!(decycling::min_ternary_decycling(&c6).unwrap().0, 1);
//! ```

pub mod bounds;
pub mod constructions;
pub mod cycles;
pub mod decycling;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod indpoly;
mod serde_big;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};

/// Resource limits shared by every exact search in the crate.
///
/// Exceeding a limit always produces [`Error::BudgetExceeded`]; nothing is
/// ever silently approximated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Recursive expansions allowed for one polynomial evaluation, and
    /// path extensions allowed for one cycle search.
    pub expansions: u64,
    /// Maximum number of chordless cycles listed by [`cycles::chordless_cycles`].
    pub cycle_cap: usize,
    /// Candidate subsets examined by one decycling search, and the maximum
    /// number of minimal ternary decycling sets listed.
    pub subset_cap: u64,
}

impl Limits {
    pub const DEFAULT_EXPANSIONS: u64 = 100_000_000;
    pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;
    pub const DEFAULT_SUBSET_CAP: u64 = 10_000_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            expansions: Self::DEFAULT_EXPANSIONS,
            cycle_cap: Self::DEFAULT_CYCLE_CAP,
            subset_cap: Self::DEFAULT_SUBSET_CAP,
        }
    }
}
