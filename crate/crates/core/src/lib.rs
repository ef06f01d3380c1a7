//! Conjugacy classes and irreducible representations of finite inverse
//! semigroups of partial permutations.
//!
//! The pipeline runs from generators to a [`SemigroupTable`], its
//! [`GreenStructure`], the conjugacy partitions in [`conjugacy`], the
//! decomposition of the semigroup algebra in [`algebra`], and the lifted
//! irreducible representations in [`irreps`]. The number of irreducible
//! lifts always matches the number of conjugacy classes, and [`report`]
//! checks that for a given input.
//!
//! ```
//! use invsemi::conjugacy::s_conjugacy_structural;
//! use invsemi::{fixtures, GreenStructure};
//!
//! let table = fixtures::rook(3).table()?;
//! let green = GreenStructure::new(&table)?;
//! assert_eq!(table.len(), 34);
//! assert_eq!(s_conjugacy_structural(&table, &green).len(), 7);
//! # Ok::<(), invsemi::Error>(())
//! ```

pub mod algebra;
pub mod conjugacy;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod irreps;
pub mod matrix;
pub mod partial_perm;
pub mod report;
pub mod semigroup;

pub use error::{Error, Result};
pub use partial_perm::{PartialPerm, Point};
pub use semigroup::{ElementId, GreenStructure, MaximalSubgroup, SemigroupTable};
