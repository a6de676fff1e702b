//! Exact construction and verification of the periodic birational maps attached to
//! plane foliations of degree two and three.

pub mod birational;
pub mod cubic;
pub mod cyclotomic;
pub mod error;
pub mod foliation;
pub mod gcd;
mod integral;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod quadratic;
pub mod ratfunc;
pub mod resultant;
pub mod squarefree;
pub mod webs;

pub use cyclotomic::{CycNumber, CyclotomicField, Field, SquareRoot};
pub use error::{Error, Result};
pub use poly::{Monomial, MultiPoly, Var};
pub use ratfunc::RationalFunction;
