//! Recognition of Hamming-isometric and Lee-isometric words.
//!
//! A word `f` is Hamming-isometric when any two `f`-free words of equal length
//! can be transformed into each other letter by letter through `f`-free words
//! only. It fails to be exactly when it has a border with two mismatches,
//! which [`border::Detector`] finds in `O(n)` for fixed `k = 2` using
//! constant-time longest-common-extension queries ([`lce::LceIndex`]). Over
//! `Z_4` the same scheme with Lee distances decides Lee-isometry.
//!
//! [`cube`] holds the exhaustive ground truth used to cross-check both
//! characterizations on small instances.

pub mod bench;
pub mod border;
pub mod cube;
mod error;
pub mod isometry;
pub mod lce;
pub mod word;

pub use border::{
    find_k_error_borders, find_k_lee_error_borders, has_k_error_border, has_k_lee_error_border,
    naive_border_scan, naive_lee_border_scan, BorderEntry, BorderReport, Detector,
};
pub use cube::{check_isometric_embedding, enumerate_f_free, f_free_transformation_exists, CubeCheckResult, CubeOracle};
pub use error::{Error, Result};
pub use isometry::{is_hamming_isometric, is_isometric, is_lee_isometric, IsometryVerdict};
pub use lce::LceIndex;
pub use word::{hamming_distance, lee_distance_letters, lee_distance_words, make_word, Alphabet, Metric, Word};
