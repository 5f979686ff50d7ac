//! Alphabets, words and the two letter metrics (Hamming and Lee).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported alphabet; codes always fit in a `u8`.
pub const MAX_ALPHABET: usize = 256;

/// Which distance is used between letters (and which edges a cube has).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    /// Any substitution costs 1.
    Hamming,
    /// Letters live on the cycle `Z_d`; `a` and `b` are `min(|a-b|, d-|a-b|)` apart.
    Lee,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Hamming => "hamming",
            Metric::Lee => "lee",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An ordered set of distinct characters. The symbol at position `i` has code `i`.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Arc<[char]>,
    ascii: Arc<[u16; 128]>,
}

const NO_CODE: u16 = u16::MAX;

impl Alphabet {
    pub fn new(symbols: &str) -> Result<Self> {
        let symbols: Vec<char> = symbols.chars().collect();
        if symbols.is_empty() || symbols.len() > MAX_ALPHABET {
            return Err(Error::AlphabetSize(symbols.len()));
        }
        let mut ascii = [NO_CODE; 128];
        for (code, &c) in symbols.iter().enumerate() {
            if symbols[..code].contains(&c) {
                return Err(Error::DuplicateSymbol(c));
            }
            if c.is_ascii() {
                ascii[c as usize] = code as u16;
            }
        }
        Ok(Alphabet {
            symbols: symbols.into(),
            ascii: Arc::new(ascii),
        })
    }

    /// The alphabet `Z_d` written with the symbols `0-9`, `a-z`, `A-Z` and then
    /// consecutive code points from U+0100 onwards.
    pub fn numeric(d: usize) -> Result<Self> {
        if d == 0 || d > MAX_ALPHABET {
            return Err(Error::AlphabetSize(d));
        }
        let symbols: String = ('0'..='9')
            .chain('a'..='z')
            .chain('A'..='Z')
            .chain((0x100u32..).filter_map(char::from_u32))
            .take(d)
            .collect();
        Alphabet::new(&symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn code_of(&self, c: char) -> Option<u8> {
        if c.is_ascii() {
            let code = self.ascii[c as usize];
            (code != NO_CODE).then_some(code as u8)
        } else {
            self.symbols.iter().position(|&s| s == c).map(|p| p as u8)
        }
    }

    pub fn symbol(&self, code: u8) -> Option<char> {
        self.symbols.get(code as usize).copied()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({:?})", self.symbols.iter().collect::<String>())
    }
}

/// A word as a sequence of dense symbol codes over an [`Alphabet`].
#[derive(Clone, PartialEq, Eq)]
pub struct Word {
    codes: Vec<u8>,
    alphabet: Alphabet,
}

impl Word {
    /// Maps every character of `text` to its position in `alphabet`.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let codes = text
            .chars()
            .enumerate()
            .map(|(position, symbol)| {
                alphabet
                    .code_of(symbol)
                    .ok_or(Error::UnknownSymbol { position, symbol })
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Word {
            codes,
            alphabet: alphabet.clone(),
        })
    }

    pub fn from_codes(codes: Vec<u8>, alphabet: &Alphabet) -> Result<Self> {
        if let Some(&code) = codes.iter().find(|&&c| c as usize >= alphabet.len()) {
            return Err(Error::CodeOutOfRange {
                code: code as usize,
                size: alphabet.len(),
            });
        }
        Ok(Word {
            codes,
            alphabet: alphabet.clone(),
        })
    }

    pub fn codes(&self) -> &[u8] {
        &self.codes
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn reversed(&self) -> Word {
        let mut codes = self.codes.clone();
        codes.reverse();
        Word {
            codes,
            alphabet: self.alphabet.clone(),
        }
    }

    /// Smallest alphabet size able to hold every code of the word.
    pub fn min_alphabet_size(&self) -> usize {
        self.codes.iter().max().map_or(1, |&c| c as usize + 1)
    }

    /// Fails with `CodeOutOfRange` unless every code is below `d`.
    pub fn check_codes(&self, d: usize) -> Result<()> {
        match self.codes.iter().find(|&&c| c as usize >= d) {
            Some(&code) => Err(Error::CodeOutOfRange {
                code: code as usize,
                size: d,
            }),
            None => Ok(()),
        }
    }

    /// Renders the codes in `range` with the word's own symbols.
    pub fn render(&self, range: std::ops::Range<usize>) -> String {
        self.codes[range]
            .iter()
            .map(|&c| self.alphabet.symbols[c as usize])
            .collect()
    }
}

/// Shorthand for [`Word::parse`].
pub fn make_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    Word::parse(text, alphabet)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(0..self.len()))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

pub fn hamming_distance(u: &Word, v: &Word) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    Ok(u.codes.iter().zip(&v.codes).filter(|(a, b)| a != b).count())
}

pub fn lee_distance_letters(a: u8, b: u8, d: usize) -> Result<usize> {
    for code in [a, b] {
        if code as usize >= d {
            return Err(Error::CodeOutOfRange {
                code: code as usize,
                size: d,
            });
        }
    }
    Ok(lee_letter(a, b, d))
}

/// Unchecked letter Lee distance; callers guarantee `a, b < d`.
#[inline]
pub(crate) fn lee_letter(a: u8, b: u8, d: usize) -> usize {
    let diff = (a as usize).abs_diff(b as usize);
    diff.min(d - diff)
}

pub fn lee_distance_words(u: &Word, v: &Word, d: usize) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    u.check_codes(d)?;
    v.check_codes(d)?;
    Ok(u.codes
        .iter()
        .zip(&v.codes)
        .map(|(&a, &b)| lee_letter(a, b, d))
        .sum())
}

/// Letter distance under `metric`; `d` is ignored for Hamming.
#[inline]
pub(crate) fn letter_distance(metric: Metric, a: u8, b: u8, d: usize) -> usize {
    match metric {
        Metric::Hamming => usize::from(a != b),
        Metric::Lee => lee_letter(a, b, d),
    }
}
