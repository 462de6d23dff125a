//! Exact tools for factorizations of finite cyclic groups and the spectra of the
//! associated periodic tiling sets.
//!
//! - [`group`]: residue sets, direct sums, factorization and gcd checks.
//! - [`cyclotomic`]: cyclotomic polynomials and exact integer zero sets of mask sums.
//! - [`grid`]: multidimensional tile sets and the per-point zero test.
//! - [`spectra`]: spectral-pair, universal-spectrum and complementary-zero criteria.
//! - [`search`]: complement enumeration, quasiperiodicity witnesses, necessity evidence.
//! - [`cli`]: problem files, reports and the subcommands behind the `cyclotile` binary.

pub mod cancel;
pub mod cli;
pub mod cyclotomic;
mod error;
pub mod grid;
pub mod group;
mod par;
pub mod poly;
pub mod search;
pub mod spectra;
mod verdict;

pub use cancel::Cancellation;
pub use cyclotomic::{
    cyclotomic_polynomial, divisors, eval_float, mask_polynomial, vanishes_at_order, zero_set,
    ZeroSet,
};
pub use error::{Error, Result, MAX_CYCLOTOMIC_ORDER, MAX_MODULUS};
pub use grid::{grid_is_factorization, grid_is_zero, GridSet};
pub use group::{
    difference_residues, direct_sum, distinct_mod_lattice, gcd_witness, is_factorization, set_gcd,
    CyclicSet, IntegerList,
};
pub use poly::{reduce_mod, IntPolynomial};
pub use verdict::{Check, Verdict};
