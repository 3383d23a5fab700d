//! Fixed-length bitsets used for vertex sets and group-element sets.

use serde::{Deserialize, Serialize};

/// A set over `{0 .. len-1}` backed by 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bitset {
    len: usize,
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Bitset {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut b = Bitset::new(len);
        for &i in indices {
            b.insert(i);
        }
        b
    }

    /// Interprets the low `len` bits of `mask` as a set. Only valid for `len <= 64`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= 64, "mask constructor limited to 64 elements");
        let mut b = Bitset::new(len);
        if !b.words.is_empty() {
            b.words[0] = mask & Self::tail_mask(len);
        }
        b
    }

    fn tail_mask(len: usize) -> u64 {
        if len.is_multiple_of(64) {
            u64::MAX
        } else {
            (1u64 << (len % 64)) - 1
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn complement(&self) -> Bitset {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        if let Some(last) = out.words.last_mut() {
            *last &= Self::tail_mask(self.len);
        }
        out
    }

    pub fn union(&self, other: &Bitset) -> Bitset {
        assert_eq!(self.len, other.len);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
        out
    }

    pub fn intersection(&self, other: &Bitset) -> Bitset {
        assert_eq!(self.len, other.len);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison by ascending index, matching the numeric order
    /// of the corresponding bitmask for sets over at most 64 elements.
    pub fn mask_cmp(&self, other: &Bitset) -> std::cmp::Ordering {
        assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter().zip(&other.words).rev() {
            if w != o {
                return w.cmp(o);
            }
        }
        std::cmp::Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut b = Bitset::new(130);
        b.insert(0);
        b.insert(64);
        b.insert(129);
        assert_eq!(b.count(), 3);
        assert!(b.contains(64));
        assert!(!b.contains(63));
        b.remove(64);
        assert_eq!(b.to_indices(), vec![0, 129]);
        assert_eq!(b.complement().count(), 128);
    }

    #[test]
    fn mask_roundtrip() {
        let b = Bitset::from_mask(5, 0b10110);
        assert_eq!(b.to_indices(), vec![1, 2, 4]);
        assert_eq!(
            b.mask_cmp(&Bitset::from_mask(5, 0b10101)),
            std::cmp::Ordering::Greater
        );
    }
}
