//! Diophantine tuples over the Gaussian integers.
//!
//! An exact-arithmetic library and verification harness for the extension
//! problem of the parametric triple {k−1, k+1, 16k³−4k} in ℤ[i]: tuple
//! verification, Pell-type fundamental-solution enumeration, recurrence
//! intersection, congruence sieving, and a certified analytic layer
//! (linear forms in logarithms, simultaneous-approximation constants,
//! polynomial root isolation).

pub mod gint;
pub mod interval;

pub use gint::{GaussianInt, GintError};
pub use interval::{ComplexInterval, RealInterval};

pub mod lemmas;
pub mod pell;
pub mod report;
pub mod sieve;
pub mod suite;
pub mod tuples;

pub mod analytic;
