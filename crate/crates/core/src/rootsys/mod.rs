//! Cartan data, positive roots, reduced words, convex orders and Kostant
//! partitions.

mod cartan;
mod hmm;
mod kp;
mod order;
mod roots;

pub use cartan::CartanDatum;
pub use hmm::{hmm_order, parse_word, word_string, HmmData};
pub use kp::{is_sum_of, kostant_partition, kp_vectors, root_sum_split, KpVector};
pub use order::{is_convex, ConvexOrder};
pub use roots::{height, Root, RootSystem, WeylElement};
