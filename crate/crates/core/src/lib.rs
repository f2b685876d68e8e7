//! Exact combinatorics of arc permutations in the symmetric group `S_n` and
//! their two type-B generalizations (signed arc permutations and B-arc
//! permutations) in the hyperoctahedral group `B_n`.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable values:
//!
//! * [`perm`]: permutation and signed-permutation values plus descent-type
//!   statistics and the four linear characters of `B_n`.
//! * [`arcs`]: membership predicates and direct generators for the arc
//!   families and the exhaustive `S_n` / `B_n` oracles.
//! * [`patterns`]: classical and signed pattern containment and the three
//!   forbidden-pattern lists.
//! * [`canonical`]: factorization into powers of the cyclic elements `c_m`.
//! * [`poly`]: sparse multivariate integer polynomials and the
//!   set-to-enumerator builder.
//! * [`formulas`]: closed-form enumerators and a verifier comparing each one
//!   with a brute-force enumerator.
#![no_std]

extern crate alloc;

pub mod arcs;
pub mod canonical;
mod error;
pub mod formulas;
pub mod patterns;
pub mod perm;
pub mod poly;

pub use error::Error;
pub use perm::{Character, Permutation, SignedPermutation, StatProfile};
pub use poly::{Poly, Variable};

pub type Result<T> = core::result::Result<T, Error>;
