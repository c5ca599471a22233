//! Fixed-capacity bit set over small non-negative integers.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    /// Empty set able to hold values `0..=max`.
    pub(crate) fn with_max(max: u64) -> Self {
        BitSet {
            words: vec![0; (max as usize) / 64 + 1],
        }
    }

    #[inline]
    pub(crate) fn insert(&mut self, v: u64) {
        self.words[(v / 64) as usize] |= 1 << (v % 64);
    }

    #[inline]
    pub(crate) fn remove(&mut self, v: u64) {
        self.words[(v / 64) as usize] &= !(1 << (v % 64));
    }

    #[inline]
    pub(crate) fn contains(&self, v: u64) -> bool {
        self.words
            .get((v / 64) as usize)
            .is_some_and(|w| w & (1 << (v % 64)) != 0)
    }

    /// Values in `1..max` absent from `self`.
    pub(crate) fn complement_below(&self, max: u64) -> BitSet {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        words[0] &= !1;
        let (last, bit) = ((max / 64) as usize, max % 64);
        if let Some(w) = words.get_mut(last) {
            *w &= (1u64 << bit) - 1;
        }
        for w in words.iter_mut().skip(last + 1) {
            *w = 0;
        }
        BitSet { words }
    }

    #[inline]
    fn shifted_word(&self, w: usize, shift: usize) -> u64 {
        let (sw, sb) = (shift / 64, shift % 64);
        let get = |i: isize| -> u64 {
            if i < 0 {
                0
            } else {
                self.words.get(i as usize).copied().unwrap_or(0)
            }
        };
        let hi = w as isize - sw as isize;
        if sb == 0 {
            get(hi)
        } else {
            (get(hi) << sb) | (get(hi - 1) >> (64 - sb))
        }
    }

    /// Least `b > floor` with `b ∈ target` and `b - shift ∈ self`.
    pub(crate) fn first_shifted_hit(&self, shift: u64, target: &BitSet, floor: u64) -> Option<u64> {
        let start = floor + 1;
        let first_word = (start / 64) as usize;
        for w in first_word..target.words.len() {
            let mut hits = self.shifted_word(w, shift as usize) & target.words[w];
            if w == first_word {
                hits &= u64::MAX << (start % 64);
            }
            if hits != 0 {
                return Some(w as u64 * 64 + hits.trailing_zeros() as u64);
            }
        }
        None
    }
}
