//! Exact Jack polynomials for the A1 and A2 root systems by separation of
//! variables, with an independent eigenvector oracle to check them against.

pub mod algebra;
pub mod continuation;
pub mod error;
pub mod hypergeom;
pub mod json;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod separated;
pub mod sov;
pub mod sympoly;
pub mod unipoly;
pub mod verify;

pub use algebra::{CouplingG, Rational};
pub use continuation::Evaluation;
pub use error::{Error, Result};
pub use partition::Partition;
pub use poly::Poly;
pub use sympoly::{PmnExpansion, SymPoly};
pub use unipoly::UniPoly;
