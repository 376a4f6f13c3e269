//! Exact combinatorial machinery for finite diagrams of (braided) monoidal
//! categories: nerves, cocycle sets, homotopy colimits, the comparison maps
//! between them, and integral homology certificates.
//!
//! Everything here is table-driven and exact. Categories are finite lookup
//! tables over dense integer ids, simplicial sets are truncated at a bound `N`
//! with explicit face/degeneracy tables, and homology is computed over the
//! integers via Smith normal form with arbitrary-precision arithmetic.

pub mod bisimplicial;
pub mod canon;
pub mod cocycle;
pub mod corpus;
pub mod fincat;
pub mod hocolim;
pub mod homology;
pub mod monoidal;
pub mod nerves;
pub mod report;
pub mod sample;
pub mod schema;
pub mod simplicial;
pub mod smith;

pub use fincat::{enumerate_functors, nerve, ordinal, validate_category, FiniteCategory, Functor};
pub use monoidal::{
    validate_braided, validate_braided_diagram, validate_braided_functor, validate_monoidal,
    validate_monoidal_diagram, validate_monoidal_functor, BraidedDiagram, BraidedMonoidalCategory,
    MonoidalCategory, MonoidalDiagram, MonoidalFunctor,
};
pub use report::{ValidationReport, Violation};
pub use simplicial::{
    check_simplicial, is_isomorphism, validate_simplicial_map, IsoVerdict, Monotone, SimplicialMap,
    TruncatedSimplicialSet,
};

/// Default node budget for cocycle enumeration.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Enumeration failure modes. Budgets are hard limits: exceeding one aborts
/// with the a-priori search-space estimate instead of truncating silently.
#[derive(Debug, thiserror::Error)]
pub enum EnumError {
    #[error("enumeration budget exceeded after {visited} nodes (budget {budget}, estimated search space {estimate:.3e})")]
    BudgetExceeded {
        visited: u64,
        budget: u64,
        estimate: f64,
    },
}
