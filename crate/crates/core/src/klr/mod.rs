//! KLR algebras: normal forms, finite-dimensional modules and the modules
//! attached to a convex order.

pub mod algebra;
pub mod cuspidal;
pub mod dim;
pub mod expr;
pub mod fixtures;
pub mod hom;
pub mod induce;
pub mod module;
pub mod perm;
pub mod polyrep;

pub use algebra::{exponent_vectors, Element, Gen, KlrAlgebra, Poly2, Term};
pub use cuspidal::{character_ratio, cuspidal_module, Budget, CuspidalBuilder, CuspidalModule};
pub use dim::{dimension_oracle, graded_dim_hom_space};
pub use expr::{parse_word, word_to_string, Expr};
pub use hom::{intertwiners, kernel, Intertwiner};
pub use induce::{coinduce, induce, shuffles};
pub use module::{BasisVector, FiniteModule, GroundField, Violation};
