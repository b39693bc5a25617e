//! Exact immanants and permanents, the block-diagonal gadget matrices that
//! project an immanant onto a permanent, and exhaustive checks of the
//! identities behind them.

pub mod cli;
pub mod error;
pub mod gadgets;
pub mod identities;
pub mod limits;
pub mod linalg;
pub mod partitions;
pub mod random;
pub mod symgroup;

pub use error::{Error, Result};
pub use limits::Limits;
pub use linalg::{Matrix, Scalar, SparsePoly};
pub use partitions::Partition;
