//! Exact machinery for derivations on group rings of finitely generated groups.
//!
//! The crate is organised around a small abstract [`Group`] interface with
//! canonical normal forms, and everything else is built on top of it:
//!
//! * [`group`]: concrete models (the integer Heisenberg group, free groups, the
//!   infinite dihedral group, two semidirect products with `Z/2` and direct
//!   products), words, Cayley balls and geodesic word length.
//! * [`graph`]: the conjugacy graph `g -> x g x^-1`, its conjugation metric,
//!   the bounded-conjugation probe and DOT export.
//! * [`ring`]: exact Gaussian-rational coefficients and finitely supported
//!   group ring vectors with `l_p` / sup norms.
//! * [`derivation`]: potentials, characters on the conjugation groupoid,
//!   derivations induced by potentials and inner derivations, and the
//!   property probes built on them.
//! * [`experiments`]: drivers for the unbounded inner derivation in the
//!   Heisenberg group, the norm limit along conjugating sequences and the
//!   inverse-sequence check.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounded;
pub mod derivation;
pub mod experiments;
pub mod graph;
pub mod group;
pub mod ring;

pub use bounded::Bounded;
pub use derivation::{
    CharacterSource, CharacterTable, CharacterValue, ClosedForm, Derivation, DerivationError,
    Exactness, Morphism, Potential, TruncationPolicy,
};
pub use graph::{BcReport, BcVerdict, ConjEdge, ConjGraphBall};
pub use group::{
    DirectProduct, FreeGroup, Generator, Group, GroupElement, GroupError, GroupModel, Heisenberg,
    HeisenbergElement, InfiniteDihedral, Semidirect, Word,
};
pub use ring::{Coefficient, GroupRingVector, NormError};

/// Exact rationals used for coefficients and potential values.
pub type Rational = num_rational::BigRational;

/// Default node budget for breadth-first explorations.
pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

/// Default cutoff index for closed-form potentials.
pub const DEFAULT_TRUNCATION: u64 = 10_000;
