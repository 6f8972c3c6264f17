//! Fixed-width vertex bit masks.

use std::fmt;

/// A set of vertex indices stored as a fixed-width bit mask.
///
/// All masks that interact must be created with the same capacity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexMask {
    words: Box<[u64]>,
}

impl VertexMask {
    pub fn empty(capacity: usize) -> Self {
        VertexMask {
            words: vec![0; capacity.div_ceil(64).max(1)].into_boxed_slice(),
        }
    }

    /// The mask with bits `0..n` set.
    pub fn full(capacity: usize, n: usize) -> Self {
        let mut m = Self::empty(capacity);
        for v in 0..n {
            m.insert(v);
        }
        m
    }

    pub fn from_indices(capacity: usize, indices: &[usize]) -> Self {
        let mut m = Self::empty(capacity);
        for &v in indices {
            m.insert(v);
        }
        m
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w & (1u64 << (v % 64)) != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(other.words.iter()).any(|(a, b)| a & b != 0)
    }

    pub fn and(&self, other: &Self) -> Self {
        VertexMask {
            words: self.words.iter().zip(other.words.iter()).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn and_not(&self, other: &Self) -> Self {
        VertexMask {
            words: self.words.iter().zip(other.words.iter()).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn or(&self, other: &Self) -> Self {
        VertexMask {
            words: self.words.iter().zip(other.words.iter()).map(|(a, b)| a | b).collect(),
        }
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
