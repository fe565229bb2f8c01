//! Fixed-universe bitsets, used for sets of reflections.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitSet {
    words: Vec<u64>,
    universe: usize,
}

impl BitSet {
    pub fn new(universe: usize) -> Self {
        BitSet {
            words: vec![0; universe.div_ceil(64)],
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = BitSet::new(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_iter(universe: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = BitSet::new(universe);
        for i in items {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "bit {i} outside universe {}", self.universe);
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    pub fn remove(&mut self, i: usize) -> bool {
        if i >= self.universe {
            return false;
        }
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let had = self.words[w] & b != 0;
        self.words[w] &= !b;
        had
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.universe);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    fn zip(&self, o: &BitSet, f: impl Fn(u64, u64) -> u64) -> BitSet {
        assert_eq!(self.universe, o.universe, "bitset universes differ");
        BitSet {
            words: self.words.iter().zip(&o.words).map(|(&a, &b)| f(a, b)).collect(),
            universe: self.universe,
        }
    }

    pub fn union(&self, o: &BitSet) -> BitSet {
        self.zip(o, |a, b| a | b)
    }

    pub fn intersection(&self, o: &BitSet) -> BitSet {
        self.zip(o, |a, b| a & b)
    }

    pub fn difference(&self, o: &BitSet) -> BitSet {
        self.zip(o, |a, b| a & !b)
    }

    pub fn is_subset(&self, o: &BitSet) -> bool {
        self.words.iter().zip(&o.words).all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, o: &BitSet) -> bool {
        self.words.iter().zip(&o.words).all(|(&a, &b)| a & b == 0)
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
