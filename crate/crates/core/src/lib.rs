//! Exact toric combinatorics of G-Hilb for finite abelian subgroups of SL(3).
//!
//! The pipeline runs in stages, each checked against the one before:
//!
//! - [`group`]: weights, characters and the junior simplex
//! - [`cluster`]: torus-fixed G-clusters and the fan of G-Hilb
//! - [`triangulation`]: the complex on the junior simplex, curve types and
//!   regular triangles
//! - [`recipe`]: Reid's recipe markings, chains and del Pezzo characters
//! - [`unlock`]: total G-igsaw pieces computed from the recipe alone
//! - [`chamber`]: the inequalities cutting out the G-Hilb chamber and its walls
//! - [`io`], [`check`]: reports, figures, invariant checks and sweeps

pub mod chamber;
pub mod check;
pub mod cluster;
pub mod error;
pub mod group;
pub mod io;
pub mod lp;
pub mod recipe;
pub mod triangulation;
pub mod unlock;

pub use error::{Error, Result};
pub use group::{parse_group_spec, Character, GroupData, LatticePoint, Monomial};
