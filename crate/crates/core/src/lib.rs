//! Racks and quandles built from gauge transformations.
//!
//! The crate works bottom-up:
//!
//! - [`group`]: finite groups as Cayley tables, subgroups, cosets, a small catalog.
//! - [`rack`]: operation tables, exhaustive rack/quandle checks, the standard
//!   constructions and an isomorphism search.
//! - [`bundle`]: discrete principal bundles `M × G`, equivariant maps and the
//!   gauge transformations they induce.
//! - [`gauge`]: the rack `p₁·f(p₂)`, the gauge quandle `p₁·f(p₁)⁻¹f(p₂)`, fiber
//!   quandles, reduced quandles on `P/H` and homogeneous quandles on `H\G`.
//! - [`lie`]: parametrized gauge quandles over SO(3), SU(2) and GL(n), checked
//!   numerically.
//! - [`cli`]: the `gauge-quandle` command line front end.

pub mod bundle;
pub mod cli;
pub mod error;
pub mod gauge;
pub mod group;
pub mod lie;
pub mod perm;
pub mod rack;

pub use error::{Error, Result};
pub use group::{catalog, FiniteGroup, Subgroup};
pub use perm::Permutation;
pub use rack::{MagmaTable, RackReport};
