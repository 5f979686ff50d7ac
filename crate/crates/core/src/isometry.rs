//! Isometry decisions from the 2-error-border characterizations.
//!
//! A word is not Hamming-isometric exactly when it has a border with two
//! mismatches. Over `Z_4` a word is not Lee-isometric exactly when it has a
//! border at Lee distance 2; over alphabets of size at most three the two
//! notions coincide. No characterization is known for larger alphabets, so
//! [`is_lee_isometric`] refuses them.

use crate::border::{BorderEntry, Detector};
use crate::error::{Error, Result};
use crate::lce::LceIndex;
use crate::word::{Metric, Word};

/// Largest alphabet for which Lee-isometry can be decided here.
pub const MAX_LEE_ALPHABET: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryVerdict {
    pub isometric: bool,
    pub metric: Metric,
    /// The longest 2-error border; present iff the word is not isometric.
    pub witness: Option<BorderEntry>,
}

impl IsometryVerdict {
    fn from_witness(metric: Metric, witness: Option<BorderEntry>) -> Self {
        IsometryVerdict {
            isometric: witness.is_none(),
            metric,
            witness,
        }
    }
}

pub fn is_hamming_isometric(f: &Word) -> Result<IsometryVerdict> {
    let index = LceIndex::build(f)?;
    let witness = Detector::hamming(&index).first(2, &mut ());
    Ok(IsometryVerdict::from_witness(Metric::Hamming, witness))
}

pub fn is_lee_isometric(f: &Word, d: usize) -> Result<IsometryVerdict> {
    if d > MAX_LEE_ALPHABET {
        return Err(Error::UnsupportedAlphabetSize(d));
    }
    if d == 0 {
        return Err(Error::AlphabetSize(d));
    }
    f.check_codes(d)?;
    let index = LceIndex::build(f)?;
    let witness = if d <= 3 {
        Detector::hamming(&index).first(2, &mut ())
    } else {
        Detector::lee(&index, d)?.first(2, &mut ())
    };
    Ok(IsometryVerdict::from_witness(Metric::Lee, witness))
}

/// Dispatches on `metric`; `d` only matters for Lee.
pub fn is_isometric(f: &Word, metric: Metric, d: usize) -> Result<IsometryVerdict> {
    match metric {
        Metric::Hamming => is_hamming_isometric(f),
        Metric::Lee => is_lee_isometric(f, d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn word(text: &str, symbols: &str) -> Word {
        Word::parse(text, &Alphabet::new(symbols).unwrap()).unwrap()
    }

    #[test]
    fn hamming_examples() {
        assert!(is_hamming_isometric(&word("11", "01")).unwrap().isometric);
        for n in 1..20 {
            assert!(is_hamming_isometric(&word(&"1".repeat(n), "01")).unwrap().isometric);
        }
        let v = is_hamming_isometric(&word("1010011", "01")).unwrap();
        assert!(!v.isometric);
        assert_eq!(v.witness.unwrap().length, 4);
        assert!(!is_hamming_isometric(&word("1100", "01")).unwrap().isometric);
    }

    #[test]
    fn single_letter_is_isometric() {
        for c in ["0", "1"] {
            assert!(is_hamming_isometric(&word(c, "01")).unwrap().isometric);
            assert!(is_lee_isometric(&word(c, "01"), 4).unwrap().isometric);
        }
    }

    #[test]
    fn lee_examples() {
        let v = is_lee_isometric(&word("0301", "0123"), 4).unwrap();
        assert!(!v.isometric);
        assert_eq!(v.metric, Metric::Lee);
        let witness = v.witness.unwrap();
        assert_eq!(witness.length, 2);
        assert_eq!(witness.distance, 2);
        assert!(is_lee_isometric(&word("11", "01"), 2).unwrap().isometric);
        assert_eq!(
            is_lee_isometric(&word("0301", "0123"), 5),
            Err(Error::UnsupportedAlphabetSize(5))
        );
        assert_eq!(is_hamming_isometric(&word("", "01")), Err(Error::EmptyWord));
    }

    #[test]
    fn ternary_lee_matches_hamming() {
        // 0 vs 2 is one Lee step in Z_3
        let u = word("02", "012");
        assert!(is_lee_isometric(&u, 3).unwrap().isometric);
        assert!(!is_lee_isometric(&u, 4).unwrap().isometric);
    }
}
