//! Exact-arithmetic Gelfand-Tsetlin modules for the Lie superalgebra gl(m|n).

pub mod cli;
pub mod error;
pub mod expr;
pub mod io;
pub mod linalg;
pub mod module;
pub mod rational;
pub mod relations;
pub mod sparse;
pub mod superalgebra;
pub mod tableau;
pub mod verification;

pub use error::{Error, Result};
pub use rational::Q;
