//! Compact element sets over a fixed universe `0..universe` of element ids.
//!
//! Submodules, ideals and lattice nodes are all sets of small ids, so a
//! word-packed bitset with a canonical ordering (cardinality first, then the
//! ascending id list lexicographically) keeps enumeration output stable and
//! set algebra cheap.

/// A set of element ids below a fixed universe size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    universe: u32,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet {
            universe: universe as u32,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn singleton(universe: usize, id: u16) -> Self {
        let mut s = Self::empty(universe);
        s.insert(id);
        s
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in 0..s.words.len() {
            s.words[w] = u64::MAX;
        }
        let spare = s.words.len() * 64 - universe;
        if spare > 0 {
            let last = s.words.len() - 1;
            s.words[last] >>= spare;
        }
        s
    }

    pub fn from_ids(universe: usize, ids: &[u16]) -> Self {
        let mut s = Self::empty(universe);
        for &id in ids {
            s.insert(id);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    #[inline]
    pub fn insert(&mut self, id: u16) {
        debug_assert!((id as u32) < self.universe);
        self.words[(id / 64) as usize] |= 1u64 << (id % 64);
    }

    #[inline]
    pub fn contains(&self, id: u16) -> bool {
        self.words[(id / 64) as usize] >> (id % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// True when the set is exactly `{0}`.
    pub fn is_zero_only(&self) -> bool {
        self.words[0] == 1 && self.words[1..].iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Intersection beyond the zero element is nonempty. The zero id is 0 in
    /// every parent structure, so "meets nontrivially" is a masked test.
    pub fn meets_nontrivially(&self, other: &ElemSet) -> bool {
        let joint = self.words[0] & other.words[0] & !1u64;
        if joint != 0 {
            return true;
        }
        self.words[1..]
            .iter()
            .zip(&other.words[1..])
            .any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u16> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some((wi * 64) as u16 + b as u16)
                }
            })
        })
    }

    pub fn ids(&self) -> Vec<u16> {
        self.iter().collect()
    }

    /// Canonical order: cardinality, then the ascending id list
    /// lexicographically. Two equal-cardinality sets compare by the least id
    /// in their symmetric difference: the set containing it comes first.
    pub fn canonical_cmp(&self, other: &ElemSet) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let low = diff & diff.wrapping_neg();
                return if a & low != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(std::cmp::Ord::cmp(self, other))
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical_cmp(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_cardinality_then_lex() {
        let u = 12;
        let a = ElemSet::from_ids(u, &[0, 3]);
        let b = ElemSet::from_ids(u, &[0, 4]);
        let c = ElemSet::from_ids(u, &[0, 2, 4]);
        assert!(a < b, "[0,3] before [0,4]");
        assert!(b < c, "pairs before triples");
        assert!(a < c);
        let d = ElemSet::from_ids(u, &[1]);
        let e = ElemSet::from_ids(u, &[2]);
        assert!(d < e);
    }

    #[test]
    fn full_set_masks_spare_bits() {
        for n in [1usize, 63, 64, 65, 130] {
            let f = ElemSet::full(n);
            assert_eq!(f.len(), n);
            assert_eq!(f.ids(), (0..n as u16).collect::<Vec<_>>());
        }
    }

    #[test]
    fn nontrivial_meet_ignores_zero() {
        let a = ElemSet::from_ids(8, &[0, 2]);
        let b = ElemSet::from_ids(8, &[0, 4]);
        assert!(!a.meets_nontrivially(&b));
        let c = ElemSet::from_ids(8, &[0, 2, 4]);
        assert!(a.meets_nontrivially(&c));
    }
}
