//! Noncrossing partitions of `{1, ..., d}`, the Simion–Ullman involution,
//! families of cyclic intervals with their duals, and the weight statistics
//! that turn `NC(d)` into a generating-function model for the toric
//! contributions.

mod family;
mod partition;
mod weight;

pub use family::{enumerate_families, IntervalFamily, DEFAULT_FAMILY_GUARD};
pub use partition::{
    enumerate_nc, enumerate_nc_with_guard, is_noncrossing, NcPartition, PartitionStats,
    DEFAULT_NC_GUARD,
};
pub use weight::{family_weight_sum, weight_exponent, weight_k_exponent, weight_k_family};

/// Largest ground set supported by the bitmask representation.
pub const MAX_GROUND: usize = 64;

/// A subset of `{1, ..., d}` stored as a bitmask (bit `k-1` for element `k`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn full(d: usize) -> Self {
        if d >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << d) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn insert(&mut self, element: usize) {
        self.0 |= 1u64 << (element - 1);
    }

    pub fn contains(self, element: usize) -> bool {
        (1..=64).contains(&element) && self.0 & (1u64 << (element - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersection(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 & other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64)
            .filter(move |b| self.0 & (1u64 << b) != 0)
            .map(|b| b + 1)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl std::fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Cyclic successor of `k` in `{1, ..., d}`.
#[inline]
pub(crate) fn succ(k: usize, d: usize) -> usize {
    k % d + 1
}
