//! Exact recomputation and cross-verification of dimension tables for Siegel
//! modular forms of degree two with level dividing 4.
//!
//! The crate rebuilds, from first principles and in exact arithmetic, the
//! chain of data that produces those tables: character theory of the
//! symmetric group on six letters and its symplectic incarnation over the
//! field with two elements, fixed-vector counts for a catalogue of local
//! representation types, cusp and boundary contributions, generating series
//! for spaces of modular and cusp forms, counts of automorphic
//! representations contributing to each space, and Fourier–Jacobi expansions
//! of the weight-two forms that pin down the one remaining group.  Every
//! printed table and closed-form series is then checked against the
//! recomputed value.

pub mod arthur;
pub mod exactmath;
pub mod globaldims;
pub mod groups;
pub mod jacobi;
pub mod localreps;
pub mod s6;
pub mod verify;
