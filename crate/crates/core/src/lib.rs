//! Periods of tensor products of regular motives over a quadratic imaginary
//! field: Hodge types, critical points, Deligne periods as symbolic
//! monomials, the automorphic dictionary and a determinant oracle.

pub mod automorphic;
pub mod cli;
pub mod combinatorics;
pub mod deligne;
pub mod error;
pub mod halfint;
pub mod hodge;
pub mod lfactor;
pub mod oracle;
pub mod period;
pub mod sample;
pub mod tag;

pub use error::{Error, Result};
pub use halfint::HalfInt;
pub use automorphic::InfinityTypeData;
pub use hodge::{HodgeMultiset, RegularMotiveData};
pub use tag::Tag;
