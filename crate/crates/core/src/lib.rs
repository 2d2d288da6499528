//! Convex orders, dual PBW characters and KLR algebra computations for
//! finite-type Cartan data.

pub mod chevalley;
pub mod error;
pub mod klr;
pub mod linalg;
pub mod pbw;
pub mod qarith;
pub mod rootsys;
pub mod shuffle;

pub use error::{Error, Result};
