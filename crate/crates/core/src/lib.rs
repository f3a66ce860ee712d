pub mod error;
pub mod exactlin;
pub mod field;
pub mod homotopy;
pub mod quivrep;
pub mod random;
pub mod standard;
pub mod trifun;
pub mod verdict;

pub use error::{Error, Result};
pub use field::{Field, FieldKind, FieldSpec, PrimeField, Rationals};
