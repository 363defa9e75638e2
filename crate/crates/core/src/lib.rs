//! Ungar games on finite lattices.
//!
//! Two players alternately replace the current element `x` of a finite
//! lattice by the meet of `x` with some nonempty set of elements it covers.
//! The player who faces the bottom element cannot move and loses. This crate
//! provides a generic retrograde solver ([`lattice`]), specialised models for
//! order ideals, Young's lattice, the weak order and the Tamari lattice,
//! exact generating-function machinery, a boolean-formula-to-lattice
//! compiler and checkers for two open conjectures.

pub mod conjectures;
pub mod dyck;
pub mod engine;
pub mod formula;
pub mod ideal;
pub mod lattice;
pub mod par;
pub mod series;
pub mod tamari;
pub mod verify;
pub mod weak;
pub mod young;

pub use lattice::{FiniteLattice, LatticeError, WinLabel};
pub use par::Exec;
pub use series::{BivariateSeries, SeriesError, TruncatedSeries};

/// `n`-th Catalan number.
pub fn catalan(n: u32) -> u64 {
    let mut c: u64 = 1;
    for k in 0..n as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}
