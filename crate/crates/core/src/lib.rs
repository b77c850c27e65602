//! Isbell dominions of subgroups of finite nonabelian simple permutation
//! groups, computed in the variety the groups generate.
//!
//! The dominion of `H <= S` is the set of elements fixed by every
//! automorphism of `S` that fixes `H` pointwise. [`dominion`] computes it
//! either from a full enumeration of `Aut(S)` ([`autos`]) or, when an
//! ambient group is known to induce all of `Aut(S)` by conjugation, as a
//! double centralizer. [`oracle`] recomputes dominions straight from the
//! equalizer definition for cross-checking.

pub mod autos;
pub mod catalog;
pub mod config;
pub mod dominion;
pub mod error;
pub mod group;
pub mod oracle;
pub mod perm;
pub mod report;
pub mod reproduce;

pub use config::Caps;
pub use error::{Error, Result};
pub use group::{ElementIndex, PermGroup, Subgroup};
pub use perm::{format_cycles, parse_cycles, Permutation};
