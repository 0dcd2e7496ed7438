//! Exact computation of modified (q,t)-Kostka polynomials, Hall–Littlewood
//! (cocharge) Kostka polynomials, Kostka numbers, fake degrees and symmetric
//! group characters, together with brute-force verification of the cyclic
//! sieving identities that tie them to rotations of matrices.
//!
//! Everything is exact: polynomial coefficients are big integers and root of
//! unity evaluations happen in `Z[x]/Φ_N(x)`.

pub mod combinatorics;
pub mod csp;
pub mod error;
pub mod garsia_haiman;
pub mod macdonald;
pub mod polyring;

pub use error::{Error, Result};
