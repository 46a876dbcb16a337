//! Fixed inputs shared by the benchmarks.

use llt_core::ShapeTuple;

/// Two-shape tuple whose swap has a unique matching with total arc weight 5.
pub fn running_example() -> ShapeTuple {
    "((8,7,6),(4,3,2)/(2,0,0))".parse().expect("valid tuple")
}

/// A skew pair whose beads admit more than one matching.
pub fn two_matching_example() -> ShapeTuple {
    "((5,4,4)/(2,2,0),(3,1,1))".parse().expect("valid tuple")
}
