//! Cuspidal (dual PBW) characters for arbitrary convex orders and
//! character-level checks of their restriction properties.

mod checks;
mod cuspidal;

pub use checks::*;
pub use cuspidal::{
    all_pair_characters, cuspidal_from_pair, lattice_gcd, q_commutator, run_factorial, CuspidalTable, Normalization,
};
