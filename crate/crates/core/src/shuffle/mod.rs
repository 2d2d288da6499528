//! The quantum shuffle algebra: characters, the twisted product, Lusztig's
//! form on words and expansion in dual PBW bases.

mod element;
mod expand;
mod form;
mod product;

pub use element::{word_weight, ShuffleElement, Word};
pub use expand::expand_in_dual_pbw;
pub use form::{transported_form, words_of_weight, GramCache};
pub use product::{shuffle_many, shuffle_product, shuffle_words, twisted_coproduct};
