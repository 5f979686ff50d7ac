#![allow(dead_code)]

use isoword::{Alphabet, Word};

/// Every word of length `len` over `Z_d`, in lexicographic order.
pub fn all_words(len: usize, d: usize) -> Vec<Word> {
    let alphabet = Alphabet::numeric(d).unwrap();
    let total = d.pow(len as u32);
    (0..total)
        .map(|mut x| {
            let mut codes = vec![0u8; len];
            for slot in codes.iter_mut().rev() {
                *slot = (x % d) as u8;
                x /= d;
            }
            Word::from_codes(codes, &alphabet).unwrap()
        })
        .collect()
}

/// Every non-empty word of length at most `max_len` over `Z_d`.
pub fn words_up_to(max_len: usize, d: usize) -> Vec<Word> {
    (1..=max_len).flat_map(|len| all_words(len, d)).collect()
}

pub fn word(text: &str, symbols: &str) -> Word {
    Word::parse(text, &Alphabet::new(symbols).unwrap()).unwrap()
}

/// Direct character comparison; position `n` is the empty suffix.
pub fn naive_lce(codes: &[u8], i: usize, j: usize) -> usize {
    if i >= codes.len() || j >= codes.len() {
        return 0;
    }
    codes[i..].iter().zip(&codes[j..]).take_while(|(a, b)| a == b).count()
}
