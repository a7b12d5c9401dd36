//! Ground-set subsets as bitmasks.
//!
//! A `SubsetMask` is a set of element indices inside a fixed universe
//! {0, .., n-1}, n <= 24, stored in the low bits of a `u32`. The canonical
//! order used everywhere for witnesses and set families is ascending
//! (popcount, numeric bitmask value); for equal-size sets the numeric order
//! is colexicographic on the sorted element lists. All reported witnesses,
//! tie-breaks, and golden outputs rely on this single order.

use std::cmp::Ordering;
use std::fmt;

/// Hard cap on universe size: masks fit a u32 with headroom, and every
/// exhaustive sweep in this crate stays desk-scale.
pub const MAX_ELEMENTS: usize = 24;

/// A subset of {0, .., n-1} as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    bits: u32,
    n: u8,
}

impl SubsetMask {
    /// The empty subset of an n-element universe.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        SubsetMask { bits: 0, n: n as u8 }
    }

    /// The full n-element universe.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        let bits = if n == 0 { 0 } else { (1u32 << n) - 1 };
        SubsetMask { bits, n: n as u8 }
    }

    /// Builds from raw bits; only the low n bits may be set.
    pub fn from_bits(bits: u32, n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        assert!(n == 32 || bits < (1u32 << n), "bits outside universe");
        SubsetMask { bits, n: n as u8 }
    }

    pub fn from_elements(elements: &[usize], n: usize) -> Self {
        let mut bits = 0u32;
        for &e in elements {
            assert!(e < n, "element outside universe");
            bits |= 1 << e;
        }
        Self::from_bits(bits, n)
    }

    pub fn singleton(e: usize, n: usize) -> Self {
        Self::from_elements(&[e], n)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Universe size (not the subset size).
    pub fn universe(self) -> usize {
        self.n as usize
    }

    /// Number of elements in the subset.
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < self.n as usize && self.bits & (1 << e) != 0
    }

    pub fn insert(self, e: usize) -> Self {
        assert!(e < self.n as usize);
        SubsetMask { bits: self.bits | (1 << e), n: self.n }
    }

    pub fn remove(self, e: usize) -> Self {
        SubsetMask { bits: self.bits & !(1 << e), n: self.n }
    }

    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubsetMask { bits: self.bits | other.bits, n: self.n }
    }

    pub fn intersect(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubsetMask { bits: self.bits & other.bits, n: self.n }
    }

    pub fn minus(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubsetMask { bits: self.bits & !other.bits, n: self.n }
    }

    /// Complement within the universe.
    pub fn complement(self) -> Self {
        let full = if self.n == 0 { 0 } else { (1u32 << self.n) - 1 };
        SubsetMask { bits: full & !self.bits, n: self.n }
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Elements in ascending order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// Lowest element, if any.
    pub fn min_element(self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }
}

// Canonical witness order: ascending size, then ascending numeric bits.
impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.bits.count_ones(), self.bits).cmp(&(other.bits.count_ones(), other.bits))
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetMask({self})")
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems: Vec<String> = self.elements().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", elems.join(","))
    }
}

/// Gosper's hack: next bitmask with the same popcount, ascending numeric
/// order. Returns None when the value would overflow past `limit` bits.
pub fn next_same_popcount(x: u32, limit: u32) -> Option<u32> {
    if x == 0 {
        return None;
    }
    let c = x & x.wrapping_neg();
    let r = x + c;
    if r == 0 {
        return None;
    }
    let next = (((r ^ x) >> 2) / c) | r;
    if next >> limit != 0 {
        None
    } else {
        Some(next)
    }
}

/// All k-element submasks of `universe` bits, ascending numeric order.
///
/// Runs Gosper's hack in a dense index space and expands through the
/// universe's set-bit positions; the expansion is monotone, so the dense
/// ascending order is the sparse ascending order.
pub fn k_subsets_of(universe: u32, k: usize) -> impl Iterator<Item = u32> {
    let positions: Vec<u32> = (0..32).filter(|&i| universe & (1 << i) != 0).collect();
    let m = positions.len();
    let mut cur = if k <= m && k > 0 {
        Some((1u32 << k) - 1)
    } else if k == 0 {
        Some(0)
    } else {
        None
    };
    let mut done_zero = false;
    std::iter::from_fn(move || {
        if k == 0 {
            if done_zero {
                return None;
            }
            done_zero = true;
            return Some(0);
        }
        let dense = cur?;
        cur = next_same_popcount(dense, m as u32);
        let mut sparse = 0u32;
        let mut d = dense;
        while d != 0 {
            let i = d.trailing_zeros() as usize;
            d &= d - 1;
            sparse |= 1 << positions[i];
        }
        Some(sparse)
    })
}

/// A deduplicated family of subsets of one universe, sorted ascending by
/// (size, numeric bits).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetFamily {
    sets: Vec<SubsetMask>,
}

impl SetFamily {
    pub fn new(mut sets: Vec<SubsetMask>) -> Self {
        sets.sort();
        sets.dedup();
        SetFamily { sets }
    }

    pub fn empty() -> Self {
        SetFamily { sets: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.sets.iter().copied()
    }

    pub fn contains(&self, s: SubsetMask) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    pub fn as_slice(&self) -> &[SubsetMask] {
        &self.sets
    }

    /// True when no member contains another. Circuit and cocircuit families
    /// must satisfy this.
    pub fn is_antichain(&self) -> bool {
        for (i, a) in self.sets.iter().enumerate() {
            for b in &self.sets[i + 1..] {
                if a.is_subset_of(*b) || b.is_subset_of(*a) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_ops() {
        let a = SubsetMask::from_elements(&[0, 2, 5], 8);
        assert_eq!(a.len(), 3);
        assert!(a.contains(2));
        assert!(!a.contains(1));
        assert_eq!(a.complement().len(), 5);
        assert_eq!(a.elements().collect::<Vec<_>>(), vec![0, 2, 5]);
        let b = SubsetMask::from_elements(&[2, 3], 8);
        assert_eq!(a.intersect(b).elements().collect::<Vec<_>>(), vec![2]);
        assert_eq!(a.union(b).len(), 4);
        assert_eq!(a.minus(b).elements().collect::<Vec<_>>(), vec![0, 5]);
    }

    #[test]
    #[should_panic]
    fn out_of_universe_bits_rejected() {
        SubsetMask::from_bits(0b10000, 4);
    }

    #[test]
    fn canonical_order_is_size_then_bits() {
        // {0,3} has bits 9, {1,2} has bits 6: same size, 6 < 9
        let a = SubsetMask::from_bits(0b1001, 4);
        let b = SubsetMask::from_bits(0b0110, 4);
        assert!(b < a);
        // smaller sets come first regardless of bit values
        let c = SubsetMask::from_bits(0b1000, 4);
        assert!(c < b);
    }

    #[test]
    fn gosper_enumerates_ascending() {
        let all: Vec<u32> = k_subsets_of(0b1111, 2).collect();
        assert_eq!(all, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
    }

    #[test]
    fn gosper_sparse_universe() {
        // universe {1, 3, 4}: pairs in ascending numeric order
        let all: Vec<u32> = k_subsets_of(0b11010, 2).collect();
        assert_eq!(all, vec![0b01010, 0b10010, 0b11000]);
        let none: Vec<u32> = k_subsets_of(0b11010, 4).collect();
        assert!(none.is_empty());
        let zero: Vec<u32> = k_subsets_of(0b11010, 0).collect();
        assert_eq!(zero, vec![0]);
    }

    #[test]
    fn set_family_sorted_dedup_antichain() {
        let n = 5;
        let f = SetFamily::new(vec![
            SubsetMask::from_elements(&[1, 2], n),
            SubsetMask::from_elements(&[0], n),
            SubsetMask::from_elements(&[1, 2], n),
            SubsetMask::from_elements(&[3, 4], n),
        ]);
        assert_eq!(f.len(), 3);
        assert_eq!(f.as_slice()[0], SubsetMask::from_elements(&[0], n));
        assert!(f.is_antichain());
    }

    #[test]
    fn antichain_detection() {
        let n = 4;
        let good = SetFamily::new(vec![
            SubsetMask::from_elements(&[0, 1], n),
            SubsetMask::from_elements(&[1, 2], n),
        ]);
        assert!(good.is_antichain());
        let bad = SetFamily::new(vec![
            SubsetMask::from_elements(&[0], n),
            SubsetMask::from_elements(&[0, 1], n),
        ]);
        assert!(!bad.is_antichain());
    }
}
