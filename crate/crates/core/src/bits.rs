//! Word-array bitset helpers shared by the graph and set-system types.
//!
//! A bitset over a universe of `n` elements is a `[u64]` slice of
//! `words_for(n)` words; bit `i` of word `i / 64` is element `i`. Unused high
//! bits of the last word are always zero — every routine here preserves that.

pub const WORD_BITS: usize = 64;

pub fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

pub fn get(words: &[u64], i: usize) -> bool {
    words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
}

pub fn set(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
}

pub fn clear(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
}

pub fn count_ones(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// Mask with bits `0..n % 64` set, for trimming the last word of an
/// `n`-element universe (all ones when `n` is a multiple of 64).
pub fn tail_mask(n: usize) -> u64 {
    match n % WORD_BITS {
        0 => !0,
        r => (1u64 << r) - 1,
    }
}

/// Iterator over the set bit positions of a word slice, ascending.
pub struct Ones<'a> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
}

pub fn ones(words: &[u64]) -> Ones<'_> {
    Ones {
        words,
        word_index: 0,
        current: words.first().copied().unwrap_or(0),
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_index * WORD_BITS + bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_roundtrip_across_word_boundary() {
        let mut w = vec![0u64; words_for(130)];
        for i in [0, 1, 63, 64, 65, 127, 128, 129] {
            set(&mut w, i);
        }
        assert!(get(&w, 64));
        assert!(!get(&w, 2));
        assert_eq!(count_ones(&w), 8);
        assert_eq!(ones(&w).collect::<Vec<_>>(), vec![0, 1, 63, 64, 65, 127, 128, 129]);
        clear(&mut w, 64);
        assert!(!get(&w, 64));
    }

    #[test]
    fn empty_and_zero_universe() {
        assert_eq!(words_for(0), 0);
        assert_eq!(ones(&[]).count(), 0);
        assert_eq!(ones(&[0, 0]).count(), 0);
    }

    #[test]
    fn tail_mask_edges() {
        assert_eq!(tail_mask(64), !0);
        assert_eq!(tail_mask(1), 1);
        assert_eq!(tail_mask(65), 1);
        assert_eq!(tail_mask(63), (1u64 << 63) - 1);
    }
}
