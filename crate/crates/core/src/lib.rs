//! Hilbert polynomials of polarized families, and the search for pairs of
//! families sharing one (hence lying in one connected flat family).

pub mod catalog;
pub mod cli;
pub mod error;
pub mod lifting;
pub mod matcher;
pub mod rangespec;
pub mod ratpoly;
pub mod verify;

pub use catalog::{FamilyDescriptor, FamilyKind, FamilyTag, Registry};
pub use error::{Error, Result};
pub use matcher::{CY4Solution, MatchRecord, Matcher, ParamRange, Side};
pub use ratpoly::{LinearTwist, RatPoly, Rational};
