//! Separation of variables for the A1 and A2 Jack polynomials.

pub mod a1;
pub mod a2;
pub mod coeffs;
pub mod operators;

pub use a1::{
    jack_a1_elementary, jack_a1_gegenbauer, jack_a1_pmn, jack_a1_standard, s2_factorization_sides,
};
pub use a2::{
    jack_a2_repr1, jack_a2_repr2, jack_a2_with, jack_one_row, jack_rectangular, jack_two_row,
    s3hat_factorization_sides, Representation,
};
pub use operators::{s2_apply, s3hat_apply};
pub use coeffs::{
    amn_table, cmn_by_expansion, cmn_closed_form_1, cmn_closed_form_2, cmn_engine, Branch,
    CoeffProblem, CoeffTable, TableKind,
};
