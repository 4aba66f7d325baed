//! Fixed-capacity bit-indexed subsets of group elements.
//!
//! Groups in this crate are capped at order [`MAX_ORDER`], so a set of
//! elements fits in four machine words. `ElementSet` is `Copy`, which keeps
//! backtracking searches allocation-free: saving and restoring a set is a
//! stack copy.

/// Hard ceiling on group order. Everything in the crate indexes elements as
/// `0..order` with the identity at index 0.
pub const MAX_ORDER: usize = 256;

const WORDS: usize = MAX_ORDER / 64;

/// A subset of the elements of a group of known order.
///
/// The capacity is the ambient group order; bits at or above it are always
/// zero. The cardinality is kept up to date on every mutation.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementSet {
    words: [u64; WORDS],
    capacity: u16,
    card: u16,
}

impl ElementSet {
    /// The empty subset of a group of order `capacity`.
    pub fn empty(capacity: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&capacity));
        ElementSet {
            words: [0; WORDS],
            capacity: capacity as u16,
            card: 0,
        }
    }

    /// The full set `{0, .., capacity-1}`.
    pub fn full(capacity: usize) -> Self {
        let mut s = Self::empty(capacity);
        for i in 0..capacity {
            s.insert(i);
        }
        s
    }

    /// The singleton `{e}`.
    pub fn singleton(capacity: usize, e: usize) -> Self {
        let mut s = Self::empty(capacity);
        s.insert(e);
        s
    }

    /// The singleton containing only the identity.
    pub fn identity_only(capacity: usize) -> Self {
        Self::singleton(capacity, 0)
    }

    pub fn from_indices(capacity: usize, indices: &[usize]) -> Self {
        let mut s = Self::empty(capacity);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.card as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.card == 0
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        debug_assert!(e < self.capacity as usize);
        self.words[e >> 6] >> (e & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        assert!(e < self.capacity as usize, "element index out of range");
        let w = &mut self.words[e >> 6];
        let bit = 1u64 << (e & 63);
        if *w & bit == 0 {
            *w |= bit;
            self.card += 1;
        }
    }

    #[inline]
    pub fn remove(&mut self, e: usize) {
        let w = &mut self.words[e >> 6];
        let bit = 1u64 << (e & 63);
        if *w & bit != 0 {
            *w &= !bit;
            self.card -= 1;
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.capacity, other.capacity);
        let mut words = [0u64; WORDS];
        let mut card = 0u16;
        for (w, (a, b)) in words.iter_mut().zip(self.words.iter().zip(&other.words)) {
            *w = a & b;
            card += w.count_ones() as u16;
        }
        ElementSet {
            words,
            capacity: self.capacity,
            card,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.capacity, other.capacity);
        let mut words = [0u64; WORDS];
        let mut card = 0u16;
        for (w, (a, b)) in words.iter_mut().zip(self.words.iter().zip(&other.words)) {
            *w = a | b;
            card += w.count_ones() as u16;
        }
        ElementSet {
            words,
            capacity: self.capacity,
            card,
        }
    }

    /// True when the two sets share no element.
    #[inline]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        (0..WORDS).all(|i| self.words[i] & other.words[i] == 0)
    }

    /// True when the only shared element is the identity (index 0).
    ///
    /// This is the form both triple-product conditions take: the sets always
    /// share the identity, and nothing else may coincide.
    #[inline]
    pub fn meets_only_at_identity(&self, other: &Self) -> bool {
        if self.words[0] & other.words[0] & !1 != 0 {
            return false;
        }
        (1..WORDS).all(|i| self.words[i] & other.words[i] == 0)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        (0..WORDS).all(|i| self.words[i] & !other.words[i] == 0)
    }

    /// Smallest element index, if any.
    pub fn min_element(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterates element indices in increasing order.
    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            word_idx: 0,
            base: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Deterministic ordering key: cardinality first, then the element list.
    pub fn canonical_key(&self) -> (usize, Vec<usize>) {
        (self.len(), self.to_vec())
    }
}

impl std::fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word_idx: usize,
    base: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word_idx < WORDS {
            let w = &mut self.words[self.word_idx];
            if *w != 0 {
                let tz = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(self.base + tz);
            }
            self.word_idx += 1;
            self.base += 64;
        }
        None
    }
}
