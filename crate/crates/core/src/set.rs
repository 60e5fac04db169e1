//! Subsets of the neuron set `[n] = {1, ..., n}` as fixed-width bitmasks.
//!
//! A [`NeuronSet`] is the small-set currency used everywhere in this crate:
//! codewords, faces of a simplicial complex, spokes, rims, and witnesses are
//! all neuron sets. Neuron `i` (1-based) occupies bit `i - 1`.

use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Hard cap on the number of neurons a set may mention.
pub const MAX_NEURONS: u8 = 16;

/// A subset of `{1, ..., 16}` stored as a bitmask.
///
/// Ordering is by raw mask value, which gives a stable total order used for
/// sorted word lists, facet lists, and deterministic search orders.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NeuronSet(u16);

impl NeuronSet {
    /// The empty set (the empty codeword, written `-` in the text grammar).
    pub const EMPTY: NeuronSet = NeuronSet(0);

    /// Builds a set from a raw bitmask.
    pub const fn from_bits(bits: u16) -> Self {
        NeuronSet(bits)
    }

    /// The raw bitmask.
    pub const fn bits(self) -> u16 {
        self.0
    }

    /// The singleton `{i}`. Panics if `i` is out of `1..=16`.
    pub fn singleton(i: u8) -> Self {
        assert!((1..=MAX_NEURONS).contains(&i), "neuron {i} out of range");
        NeuronSet(1 << (i - 1))
    }

    /// The full set `{1, ..., n}`.
    pub fn full(n: u8) -> Self {
        assert!(n <= MAX_NEURONS, "neuron count {n} exceeds {MAX_NEURONS}");
        if n == 0 {
            NeuronSet(0)
        } else {
            NeuronSet(u16::MAX >> (16 - n))
        }
    }

    /// Builds a set from 1-based neuron labels.
    pub fn from_neurons<I: IntoIterator<Item = u8>>(neurons: I) -> Self {
        let mut bits = 0u16;
        for i in neurons {
            assert!((1..=MAX_NEURONS).contains(&i), "neuron {i} out of range");
            bits |= 1 << (i - 1);
        }
        NeuronSet(bits)
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of neurons in the set.
    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn contains(self, neuron: u8) -> bool {
        neuron >= 1 && neuron <= 16 && (self.0 >> (neuron - 1)) & 1 == 1
    }

    pub const fn is_subset(self, other: NeuronSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: NeuronSet) -> NeuronSet {
        NeuronSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: NeuronSet) -> NeuronSet {
        NeuronSet(self.0 & other.0)
    }

    pub const fn difference(self, other: NeuronSet) -> NeuronSet {
        NeuronSet(self.0 & !other.0)
    }

    pub const fn intersects(self, other: NeuronSet) -> bool {
        self.0 & other.0 != 0
    }

    /// 1-based neuron labels in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        let bits = self.0;
        (1..=MAX_NEURONS).filter(move |i| (bits >> (i - 1)) & 1 == 1)
    }

    /// The smallest neuron label, if the set is nonempty.
    pub fn min_neuron(self) -> Option<u8> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as u8 + 1)
        }
    }

    /// All subsets of this set in ascending mask order, including the empty
    /// set and the set itself.
    pub fn subsets(self) -> Vec<NeuronSet> {
        let mask = self.0;
        let mut out = Vec::with_capacity(1 << self.len());
        // Enumerate via the (sub - 1) & mask walk, then reverse: the walk
        // emits subsets in descending mask order.
        let mut sub = mask;
        loop {
            out.push(NeuronSet(sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        out.reverse();
        out
    }

    /// Relabels through `perm`, where `perm[i]` is the 0-based image of the
    /// 0-based vertex `i`.
    pub fn permute(self, perm: &[u8]) -> NeuronSet {
        let mut bits = 0u16;
        for (i, &img) in perm.iter().enumerate() {
            if (self.0 >> i) & 1 == 1 {
                bits |= 1 << img;
            }
        }
        NeuronSet(bits)
    }
}

impl std::ops::BitOr for NeuronSet {
    type Output = NeuronSet;
    fn bitor(self, rhs: NeuronSet) -> NeuronSet {
        self.union(rhs)
    }
}

impl std::ops::BitAnd for NeuronSet {
    type Output = NeuronSet;
    fn bitand(self, rhs: NeuronSet) -> NeuronSet {
        self.intersection(rhs)
    }
}

impl std::ops::Sub for NeuronSet {
    type Output = NeuronSet;
    fn sub(self, rhs: NeuronSet) -> NeuronSet {
        self.difference(rhs)
    }
}

impl fmt::Debug for NeuronSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

// Neuron sets serialize as sorted integer arrays, e.g. {2,3,5} <-> [2,3,5].
impl Serialize for NeuronSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len() as usize))?;
        for i in self.iter() {
            seq.serialize_element(&i)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for NeuronSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = NeuronSet;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a sequence of neuron labels in 1..=16")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<NeuronSet, A::Error> {
                let mut bits = 0u16;
                while let Some(i) = seq.next_element::<u8>()? {
                    if !(1..=MAX_NEURONS).contains(&i) {
                        return Err(serde::de::Error::custom(format!(
                            "neuron {i} out of range 1..=16"
                        )));
                    }
                    bits |= 1 << (i - 1);
                }
                Ok(NeuronSet(bits))
            }
        }
        deserializer.deserialize_seq(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_algebra_is_bitwise() {
        let a = NeuronSet::from_neurons([1, 3, 5]);
        let b = NeuronSet::from_neurons([3, 4]);
        assert_eq!(a | b, NeuronSet::from_neurons([1, 3, 4, 5]));
        assert_eq!(a & b, NeuronSet::from_neurons([3]));
        assert_eq!(a - b, NeuronSet::from_neurons([1, 5]));
        assert!(NeuronSet::from_neurons([3]).is_subset(a));
        assert!(!a.is_subset(b));
        assert!(NeuronSet::EMPTY.is_subset(b));
    }

    #[test]
    fn subsets_ascending_and_complete() {
        let s = NeuronSet::from_neurons([2, 4]);
        let subs = s.subsets();
        assert_eq!(subs.len(), 4);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(subs[0], NeuronSet::EMPTY);
        assert_eq!(*subs.last().unwrap(), s);
    }

    #[test]
    fn serde_roundtrip_sorted_arrays() {
        let s = NeuronSet::from_neurons([5, 2, 13]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[2,5,13]");
        let back: NeuronSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn permute_moves_bits() {
        // perm swaps vertices 1 and 2 (0-based 0 and 1)
        let perm = [1u8, 0, 2];
        let s = NeuronSet::from_neurons([1, 3]);
        assert_eq!(s.permute(&perm), NeuronSet::from_neurons([2, 3]));
    }
}
