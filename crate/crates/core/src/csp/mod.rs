//! Carrier sets, group actions and cyclic sieving checks.

mod matrix;
mod perm;
mod verify;

pub use matrix::{
    apply_action, enumerate_matrices, fixed_point_count, multinomial, symmetry_orders,
    ContentMatrix, GroupElement3,
};
pub use perm::{
    all_permutations, perm_action, perm_fixed_point_count, phi, phi_inv, GroupElement4,
    PermutationMatrix,
};
pub use verify::{
    csp_polynomial, csp_polynomial_with, verify_csp, verify_csp_with, CspKind, CspRecord,
    CspReport, EvalValue, DEFAULT_SIZE_BOUND,
};
