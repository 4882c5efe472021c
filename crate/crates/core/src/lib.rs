//! Exact class multiplication in alternating groups.
//!
//! Character tables of `A_n` with exact quadratic irrationalities,
//! Frobenius counts of class products, covering numbers, explicit
//! factorizations of permutations as products of two elements of a given
//! cycle type, and brute-force cross-checks for small `n`.

pub mod characters;
pub mod bounds;
pub mod classalgebra;
pub mod combinatorics;
pub mod constructor;
pub mod error;
pub mod oracle;
pub mod permutations;
pub mod verify;

pub use combinatorics::Partition;
pub use error::{Error, Result};
pub use permutations::{ClassLabel, Permutation, SplitSign};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/permutations.md")]
    pub struct Permutations;
    #[doc = include_str!("../../../book/src/characters.md")]
    pub struct Characters;
    #[doc = include_str!("../../../book/src/classalgebra.md")]
    pub struct ClassAlgebra;
    #[doc = include_str!("../../../book/src/constructor.md")]
    pub struct Constructor;
    #[doc = include_str!("../../../book/src/bounds.md")]
    pub struct Bounds;
    #[doc = include_str!("../../../book/src/oracle.md")]
    pub struct Oracle;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
