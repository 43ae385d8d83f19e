//! Exact computation with maximal subalgebras of finite-dimensional Lie
//! algebras.
//!
//! The crate works over two exact ground fields, GF(p) and the rationals,
//! with no floating point anywhere. Core objects are structure-constant
//! tables ([`algebra::LieAlgebra`]) and canonical RREF subspaces
//! ([`subspace::Subspace`]); on top of those sit exhaustive subalgebra and
//! ideal lattices over finite fields ([`lattice`]), completions of maximal
//! subalgebras with their strict cores and the ideal index ([`index`]),
//! supersolvability and related classifications ([`classify`]), and a
//! deterministic verification suite quantifying the classical statements
//! about maximal subalgebras over a corpus of small algebras ([`verify`]).
//!
//! Everything generic is written against the [`field::Field`] context
//! trait; the concrete aliases below fix the two instantiations.

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod doc;
pub mod field;
pub mod index;
pub mod iso;
pub mod lattice;
pub mod linalg;
pub mod random;
pub mod rational;
pub mod report;
pub mod subspace;
pub mod verify;

pub use algebra::{BasicFlags, LieAlgebra, QuotientMap, SeriesKind, SeriesReport};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use index::{CompletionRecord, IndexComplex};
pub use lattice::{GroundField, LatticeError, LatticeIndex};
pub use subspace::{Bounds, Subspace};

/// Three-valued verdict: `Unknown` is distinct from `No` everywhere, and
/// verification treats it as a skip with notice, never as pass or fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriBool {
    Yes,
    No,
    Unknown,
}

impl std::fmt::Display for TriBool {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TriBool::Yes => write!(f, "yes"),
            TriBool::No => write!(f, "no"),
            TriBool::Unknown => write!(f, "unknown"),
        }
    }
}

/// Rational scalar.
pub type QScalar = num_rational::BigRational;
/// GF(p) residue.
pub type FpScalar = u32;
/// Subspace of a rational coordinate space.
pub type QSubspace = Subspace<Rationals>;
/// Subspace over a prime field.
pub type FpSubspace = Subspace<PrimeField>;
/// Lie algebra over the rationals.
pub type QAlgebra = LieAlgebra<Rationals>;
/// Lie algebra over a prime field.
pub type FpAlgebra = LieAlgebra<PrimeField>;
