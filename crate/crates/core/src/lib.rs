//! q-Whittaker polynomials through three combinatorial models, the
//! bijections between column strict fillings and overlaid GT patterns, and
//! the tools built on them.

pub mod bijections;
pub mod error;
pub mod fillings;
pub mod lattice;
pub mod oracle;
pub mod par;
pub mod partition;
pub mod patterns;
pub mod polymodels;
pub mod qpoly;
pub mod report;
pub mod sympoly;
pub mod verify;

pub use bijections::{omega, psi_inv, psi_inverse, psi_quinv, Stat};
pub use error::{Error, Result};
pub use fillings::{splice, CellRef, Filling, Triple};
pub use par::Exec;
pub use partition::{BoxedPartition, Partition};
pub use patterns::{GTPattern, Pop};
pub use polymodels::{whittaker, ModelTag};
pub use qpoly::{qbinom, QPoly};
pub use report::{Failure, Report};
pub use sympoly::SymPoly;
