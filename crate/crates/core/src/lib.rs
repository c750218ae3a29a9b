//! Combinatorics of crystal bases for the quantum superalgebras of types
//! D(N,1) and B(N,1).
//!
//! The crate has three layers:
//!
//! * exact scalar arithmetic: [`qfield`] (the field Q(q)) and [`roots`]
//!   (weight lattices, Cartan data, the invariant bilinear form);
//! * crystal combinatorics: [`crystal`] (tensor words of spin atoms and
//!   their Kashiwara operators), [`tableau`] (single-column tableaux and
//!   the semistandard skew criterion), [`classical`] (finite crystals of
//!   the even subalgebra and a brute-force tensor decomposition),
//!   [`supercrystal`] (the infinite lowest-weight crystals, truncated by
//!   total level) and [`decomposition`] (closed-form decomposition
//!   generators and the comparison engine);
//! * the symbolic module realization [`realization`], which verifies the
//!   defining relations, the polarization and the crystal-lattice property
//!   on an explicit basis over Q(q).
//!
//! Everything is exact: integers, rationals and rational functions of q.
//! No floating point is used anywhere.

pub mod classical;
pub mod crystal;
pub mod decomposition;
pub mod error;
pub mod export;
pub mod qfield;
pub mod realization;
pub mod roots;
pub mod supercrystal;
pub mod tableau;

pub use error::Error;
pub use qfield::{LaurentPoly, LaurentRational};
pub use roots::{AlgebraType, ClassicalWeight, Family, RootData, Weight};
