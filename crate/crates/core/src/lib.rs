//! Interpolated weighted multiset sums `theta_{n;k}(t)`, their exact
//! evaluation by several independent algorithms, and the discrete
//! distributions built from them.

pub mod cli;
pub mod dist;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod theta;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use exact::{Poly, Rational};
pub use theta::{Algorithm, ThetaPoly};
pub use weights::WeightSequence;
