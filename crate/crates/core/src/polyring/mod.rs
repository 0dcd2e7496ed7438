//! Sparse polynomials in `q, t, z, w` and their exact evaluation at roots of
//! unity.

mod cyclotomic;
mod poly;

pub use cyclotomic::{
    cyclotomic_poly, divisors, euler_phi, eval_at_roots, eval_in_ring, eval_in_ring_with_conductor,
    CyclotomicElement, RootAssignment,
};
pub use poly::{Binding, Monomial, MultiPoly, Var, NUM_VARS};
