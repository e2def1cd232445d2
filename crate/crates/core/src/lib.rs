//! Combinatorial and numerical machinery for totally nonnegative critical
//! varieties: dimer boundary measurements on planar bipartite graphs in a
//! disk, bounded affine permutations and positroid combinatorics, affine
//! poset cyclohedra and their compactifications, and the top-cell maps onto
//! the second hypersimplex.

pub mod error;
pub mod num;
pub mod perm;
pub mod plabic;
pub mod poset;
pub mod critical;
pub mod positroid;
pub mod topcell;

pub use error::{CritError, PermError, PlabicError, PosetError};
