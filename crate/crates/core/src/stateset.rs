use std::cmp::Ordering;
use std::fmt;

/// A set of state indices backed by a growable bitset.
///
/// Trailing zero words are always trimmed so that structural equality and
/// hashing agree with set equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct StateSet {
    words: Vec<u64>,
}

impl StateSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn singleton(q: usize) -> Self {
        let mut s = Self::new();
        s.insert(q);
        s
    }

    /// Builds the set whose members are the set bits of `mask`, offset by
    /// the index map `locals` (bit `i` stands for `locals[i]`).
    pub fn from_mask(mask: u64, locals: &[usize]) -> Self {
        let mut s = Self::new();
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            s.insert(locals[i]);
            m &= m - 1;
        }
        s
    }

    pub fn insert(&mut self, q: usize) -> bool {
        let (w, b) = (q / 64, q % 64);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, q: usize) -> bool {
        let (w, b) = (q / 64, q % 64);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.trim();
        present
    }

    pub fn contains(&self, q: usize) -> bool {
        let (w, b) = (q / 64, q % 64);
        w < self.words.len() && self.words[w] & (1 << b) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Largest member, if any.
    pub fn last(&self) -> Option<usize> {
        let last = self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        let n = self.words.len().max(other.words.len());
        let words = (0..n)
            .map(|i| self.words.get(i).copied().unwrap_or(0) | other.words.get(i).copied().unwrap_or(0))
            .collect();
        StateSet { words }
    }

    pub fn intersection(&self, other: &StateSet) -> StateSet {
        let mut s = StateSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &StateSet) -> StateSet {
        let mut s = StateSet {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0))
                .collect(),
        };
        s.trim();
        s
    }

    /// Complement with respect to `{0, .., n-1}`.
    pub fn complement(&self, n: usize) -> StateSet {
        StateSet::full(n).difference(self)
    }

    pub fn union_with(&mut self, other: &StateSet) {
        *self = self.union(other);
    }

    /// Maps every member through `f`.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> StateSet {
        self.iter().map(f).collect()
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for StateSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = StateSet::new();
        for q in iter {
            s.insert(q);
        }
        s
    }
}

impl Extend<usize> for StateSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for q in iter {
            self.insert(q);
        }
    }
}

impl PartialOrd for StateSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the sorted member lists.
impl Ord for StateSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_trim() {
        let mut s = StateSet::new();
        s.insert(70);
        s.insert(3);
        assert_eq!(s.len(), 2);
        assert_eq!(s.last(), Some(70));
        s.remove(70);
        assert_eq!(s, StateSet::singleton(3));
        s.remove(3);
        assert!(s.is_empty());
        assert_eq!(s, StateSet::new());
    }

    #[test]
    fn set_algebra() {
        let a: StateSet = [1, 2, 3].into_iter().collect();
        let b: StateSet = [3, 4].into_iter().collect();
        assert!(a.intersects(&b));
        assert_eq!(a.intersection(&b), StateSet::singleton(3));
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(b.complement(5).iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert!(StateSet::singleton(3).is_subset(&a));
        assert!(!b.is_subset(&a));
    }

    #[test]
    fn mask_roundtrip() {
        let s = StateSet::from_mask(0b1011, &[5, 6, 7, 9]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![5, 6, 9]);
    }
}
