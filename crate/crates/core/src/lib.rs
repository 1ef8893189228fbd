//! Representation counts and generalized Frobenius numbers.
//!
//! `d(n; A)` counts the ways to write `n` as a non-negative integer
//! combination of the parts of `A`, and `g(A; s)` is the largest integer
//! with at most `s` such representations. This crate computes both
//! directly, evaluates the known closed forms (two parts, and three parts
//! under a divisibility condition), and checks one against the other.

pub mod cli;
pub mod closedform;
pub mod denumerant;
pub mod error;
pub mod exactint;
pub mod frobenius;
pub mod limits;
pub mod verify;

pub use closedform::{
    detect_cases, one_a_b_frobenius, pairwise_coprime_frobenius, sigma_index, theorem1_row,
    theorem1_value, triangular, triangular_frobenius, u_set, SIndex, TheoremCase, TheoremRow,
    TriangularVariant, USet,
};
pub use denumerant::{
    denumerant, denumerant_series, denumerant_two, denumerant_with, split_by_part,
    DenumerantTable, Tuple,
};
pub use error::{Error, Result};
pub use frobenius::{
    beck_kifer_reduce, gen_frobenius, gen_frobenius_brute, gen_frobenius_two, GenFrobQuery,
    GenFrobResult, Method, Strategy,
};
pub use limits::Limits;
pub use verify::VerificationReport;
