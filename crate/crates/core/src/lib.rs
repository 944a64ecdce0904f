//! Galois groups of irreducible polynomials of prime degree over the
//! rationals, and explicit polynomials realizing cyclic and Frobenius groups.
//!
//! ```
//! use galprime::{classify, ClassifyOptions, IntPoly};
//!
//! let f = IntPoly::from_i64s(&[2, -4, 0, 0, 0, 1]); // x^5 - 4x + 2
//! let report = classify(&f, &ClassifyOptions::default()).unwrap();
//! assert_eq!(report.verdict.group().to_string(), "S5");
//! ```

pub mod classifier;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod groups;
pub mod modpoly;
pub mod numtheory;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod realize;
pub mod reduction;
pub mod sturm;

pub use classifier::{classify, ClassificationReport, ClassifyOptions};
pub use error::{Error, Result};
pub use groups::TransitiveGroup;
pub use parse::parse_polynomial;
pub use poly::{discriminant, is_perfect_square, resultant, IntPoly};
pub use reduction::{CycleType, GroupVerdict};
