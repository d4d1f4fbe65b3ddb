//! Generalized and exceptional Jacobi polynomials in exact arithmetic, their
//! identities, and numeric zero asymptotics.

pub mod error;
pub mod exceptional;
pub mod partitions;
pub mod polyalg;
pub mod wronskian;
pub mod zeros;

pub use error::{Error, ErrorKind, Result};
pub use exceptional::{exceptional_jacobi, ExceptionalSpec};
pub use partitions::{MayaDiagram, Partition};
pub use polyalg::{Poly, Rational};
pub use wronskian::{omega, FamilySpec, FourTypeSpec};
