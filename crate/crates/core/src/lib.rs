//! Symbolic computation of global polar invariant profiles and the global
//! Euler obstruction of pure-dimensional affine complex varieties.
//!
//! Given a polynomial presentation of a variety, the engine counts the
//! critical points of generic linear forms on the regular part, level by
//! level through generic hyperplane slices, and combines the resulting
//! profile into a single integer invariant by an alternating sum. Every
//! randomized choice is made from seeded generators, checked for
//! genericity, and recorded in a replayable certificate.
//!
//! Arithmetic runs over a word-sized prime field by default, or over exact
//! rationals for confirmation runs. The basis engine underneath is a
//! classical completion procedure with pair-selection and pair-discard
//! strategies tuned for desk-scale inputs.

pub mod certificate;
pub mod crosscheck;
pub mod elimination;
pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod invariants;
pub mod monomial;
pub mod parse;
pub mod polar;
pub mod poly;
pub mod radical;

pub use certificate::{derive_seed, stage_seed, GenericityCertificate, LevelRecord, TrialRecord};
pub use crosscheck::{
    slice_identity_check, solve_unknown_local_eu, weighted_eu, SliceIdentity, StrataTable,
    StratumData,
};
pub use elimination::{eliminate, intersect, saturate};
pub use error::Error;
pub use field::{Field, Fp, Rationals, DEFAULT_PRIME};
pub use groebner::{groebner, EngineLimits, GroebnerBasis};
pub use ideal::{Ideal, VarietySpec};
pub use invariants::{
    degree_by_slicing, global_euler_obstruction, polar_profile, recursion_check, slice,
    slice_with_carry, DegreeCount, EulerResult, PolarProfile, RecursionVerdict,
};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_polynomial, print_polynomial};
pub use polar::{critical_ideal, morse_count, singular_locus_ideal, CriticalScheme, MorseCount};
pub use poly::{linear_form, random_linear_form, random_polynomial, Polynomial};
pub use radical::{is_radical_zero_dim, minimal_polynomial};
