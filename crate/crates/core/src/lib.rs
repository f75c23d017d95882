//! Skew braces of order `pq` for primes `p > q`.
//!
//! Braces are built from regular subgroups of the holomorphs of the two
//! groups of order `pq`, classified up to isomorphism through conjugation
//! orbits, cross-checked against a brute-force enumeration, and turned into
//! set-theoretic solutions of the Yang–Baxter equation.
//!
//! ```
//! use skewbrace_core::{catalog, Params};
//!
//! let params = Params::new(7, 3).unwrap();
//! assert_eq!(catalog(&params).len(), 8);
//! ```

pub mod arith;
pub mod automorphism;
pub mod brace;
pub mod eprime;
pub mod error;
pub mod export;
pub mod families;
pub mod group;
pub mod holomorph;
pub mod oracle;
pub mod orbits;
pub mod subgroup;
pub mod ybe;

pub use automorphism::Aut;
pub use brace::{catalog, catalog_entries, BraceLabel, SkewBrace};
pub use error::{Error, Result};
pub use group::{GroupElem, GroupKind, Params};
pub use holomorph::HolElem;
pub use subgroup::{FamilyLabel, Subgroup};
pub use ybe::{solution_from_brace, verify_solution, YbeSolution};
