//! Fixed-width bitsets over group element indices.
//!
//! Subgroup enumeration manipulates millions of element sets, so the
//! representation is a plain boxed slice of machine words sized once from the
//! group order. Ordering is lexicographic on the sorted member list, which
//! makes sorted lattice exports stable and diffable.

/// A set of element indices `0..universe`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: u32,
    words: Box<[u64]>,
}

impl ElementSet {
    /// The empty set over a universe of `universe` elements.
    pub fn new(universe: usize) -> Self {
        let words = vec![0u64; universe.div_ceil(64)].into_boxed_slice();
        ElementSet { universe: universe as u32, words }
    }

    /// Builds a set from an iterator of member indices.
    pub fn from_members<I: IntoIterator<Item = u32>>(universe: usize, members: I) -> Self {
        let mut s = ElementSet::new(universe);
        for m in members {
            s.insert(m);
        }
        s
    }

    /// Number of elements the universe holds (the group order).
    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    /// Inserts `x`, returning `true` if it was absent.
    #[inline]
    pub fn insert(&mut self, x: u32) -> bool {
        debug_assert!(x < self.universe);
        let w = &mut self.words[(x / 64) as usize];
        let bit = 1u64 << (x % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    /// Membership test.
    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        debug_assert!(x < self.universe);
        self.words[(x / 64) as usize] & (1u64 << (x % 64)) != 0
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when no member is set.
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// True when every member of `self` also lies in `other`.
    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    /// Inserts every member of `other` into `self`.
    pub fn union_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    /// Iterates members in increasing order.
    pub fn iter(&self) -> Members<'_> {
        Members { words: &self.words, word_idx: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    /// Members collected into a vector, in increasing order.
    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }
}

/// Iterator over set members in increasing index order.
pub struct Members<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Members<'_> {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros();
        self.current &= self.current - 1;
        Some(self.word_idx as u32 * 64 + bit)
    }
}

impl Ord for ElementSet {
    /// Lexicographic order on the sorted member lists, so `{0,5} < {1,2}` and
    /// `{0} < {0,1}`.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
