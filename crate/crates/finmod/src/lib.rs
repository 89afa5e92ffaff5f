//! Exact computation on finite rings and finite unital right modules.
//!
//! Everything here works on fully materialized Cayley tables: a ring is an
//! `order x order` addition and multiplication table over element ids, a
//! module is a validated scalar-action table over a finite abelian group.
//! On top of that sit the complete submodule lattice, the classical lattice
//! invariants (radical, socle, Goldie and hollow dimension, Krull/Noetherian
//! deviation, composition length), module classification flags, the
//! semisimple-plus-small-socle decomposition, endomorphism rings with the
//! induced S-module view, and a small symbolic catalog for the classical
//! infinite Z-modules (Z, Q, Prufer groups, finitely generated abelian
//! groups) that finite instances cannot exhibit.
//!
//! All public operations are pure and deterministic: enumerations are
//! returned in a canonical order (sets of element ids ordered by cardinality,
//! then lexicographically), so reports are diffable byte for byte.

pub mod bitset;
pub mod catalog;
pub mod checks;
pub mod endo;
pub mod hom;
pub mod ideal;
pub mod invariants;
pub mod lattice;
pub mod module;
pub mod ring;

pub use bitset::ElemSet;
pub use ideal::{Ideal, Side};
pub use lattice::SubmoduleLattice;
pub use module::{FiniteModule, Submodule};
pub use ring::{FiniteRing, RingPresentation};

use serde::{Deserialize, Serialize};

/// Enumeration ceilings and search budgets.
///
/// Subgroup-style enumeration is exponential in the worst case, so every
/// operation that can blow up takes an explicit `Limits` and fails with a
/// [`CeilingError`] instead of running away. The defaults are sized for desk
/// scale work (rings to order 256, modules to order 512).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Limits {
    /// Largest ring order for which ideals are enumerated exhaustively.
    pub max_ring_order: usize,
    /// Largest module order accepted at construction.
    pub max_module_order: usize,
    /// Largest submodule lattice materialized.
    pub max_lattice_nodes: usize,
    /// Size cap for (co)independent-family searches.
    pub max_family_size: usize,
    /// Candidate-image budget for homomorphism enumeration (|M|^generators).
    pub endo_image_budget: u64,
    /// Largest endomorphism ring materialized as a Cayley table.
    pub max_end_ring_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ring_order: 256,
            max_module_order: 512,
            max_lattice_nodes: 4096,
            max_family_size: 16,
            endo_image_budget: 1_000_000,
            // Endomorphism rings are materialized and re-validated as full
            // Cayley tables, an O(n^3) scan; 256 keeps the matrix rings
            // M_2(Z/4) and M_2(F_3) while bounding the scan at ~17M steps.
            max_end_ring_order: 256,
        }
    }
}

/// An enumeration ceiling was exceeded. Carries enough context to report the
/// instance as skipped rather than silently dropped.
#[derive(Debug, Clone, thiserror::Error, Serialize, Deserialize)]
#[error("{what} exceeds ceiling {limit} (needed {needed})")]
pub struct CeilingError {
    pub what: String,
    pub limit: u64,
    pub needed: u64,
}

impl CeilingError {
    pub fn new(what: impl Into<String>, limit: u64, needed: u64) -> Self {
        CeilingError {
            what: what.into(),
            limit,
            needed,
        }
    }
}

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] ring::RingError),
    #[error(transparent)]
    Module(#[from] module::ModuleError),
    #[error(transparent)]
    Ceiling(#[from] CeilingError),
    /// Two routes that must agree did not; this signals an engine bug, not a
    /// property of the input.
    #[error("internal cross-check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn fresh_token() -> u64 {
    use std::sync::atomic::{AtomicU64, Ordering};
    static NEXT: AtomicU64 = AtomicU64::new(1);
    NEXT.fetch_add(1, Ordering::Relaxed)
}
