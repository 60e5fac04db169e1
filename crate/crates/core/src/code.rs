//! Neural codes: deduplicated, sorted sets of codewords containing `∅`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::set::{NeuronSet, MAX_NEURONS};

/// A code on `n` neurons: a strictly sorted word list that always contains
/// the empty codeword. Construction inserts `∅` if the input lacks it.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Code {
    n: u8,
    words: Vec<NeuronSet>,
}

impl Code {
    pub fn new<I: IntoIterator<Item = NeuronSet>>(n: u8, words: I) -> Result<Self> {
        if n > MAX_NEURONS {
            return Err(Error::TooManyNeurons { n, max: MAX_NEURONS });
        }
        let full = NeuronSet::full(n);
        let mut list: Vec<NeuronSet> = vec![NeuronSet::EMPTY];
        for w in words {
            if !w.is_subset(full) {
                return Err(Error::NeuronOutOfRange {
                    neuron: w.iter().find(|&i| i > n).unwrap_or(0),
                    n,
                });
            }
            list.push(w);
        }
        list.sort_unstable();
        list.dedup();
        Ok(Code { n, words: list })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// Sorted, deduplicated codewords (always starts with `∅`).
    pub fn words(&self) -> &[NeuronSet] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        // a valid code always contains ∅
        false
    }

    pub fn contains(&self, w: NeuronSet) -> bool {
        self.words.binary_search(&w).is_ok()
    }

    /// The trunk `Tk_C(σ) = { c ∈ C | σ ⊆ c }`, sorted.
    pub fn trunk(&self, sigma: NeuronSet) -> Vec<NeuronSet> {
        self.words
            .iter()
            .copied()
            .filter(|c| sigma.is_subset(*c))
            .collect()
    }

    /// True iff every codeword containing `phi` contains some `psi_t`.
    ///
    /// This is the combinatorial side of the covering relation
    /// `U_φ ⊆ ∪_t U_ψt`: it holds iff `Tk(φ) ⊆ ∪_t Tk(ψ_t)`.
    pub fn trunk_covered_by(&self, phi: NeuronSet, psis: &[NeuronSet]) -> bool {
        self.words
            .iter()
            .filter(|c| phi.is_subset(**c))
            .all(|c| psis.iter().any(|p| p.is_subset(*c)))
    }

    /// The neural complex `Δ(C)`: facets are the maximal codewords.
    pub fn neural_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_faces(self.n, self.words.iter().copied())
            .expect("words validated at construction")
    }

    /// The maximal codewords (the facets of `Δ(C)`), sorted.
    pub fn maximal_words(&self) -> Vec<NeuronSet> {
        self.neural_complex().facets().to_vec()
    }

    /// The restricted code `C|_χ = { c ∩ χ | c ∈ C }` on the same ambient
    /// neuron set.
    pub fn restrict(&self, chi: NeuronSet) -> Code {
        Code::new(self.n, self.words.iter().map(|c| c.intersection(chi)))
            .expect("restriction stays in range")
    }

    /// Restricts to `[n] ∖ {i}` and compacts labels above `i` down by one,
    /// yielding a code on `n - 1` neurons.
    pub fn drop_neuron(&self, i: u8) -> Code {
        assert!((1..=self.n).contains(&i));
        let words = self.words.iter().map(|w| {
            NeuronSet::from_neurons(
                w.iter()
                    .filter(|&j| j != i)
                    .map(|j| if j > i { j - 1 } else { j }),
            )
        });
        Code::new(self.n - 1, words).expect("compacted labels are in range")
    }

    /// Applies a neuron permutation (`perm[i]` = 0-based image of 0-based `i`).
    pub fn permute(&self, perm: &[u8]) -> Code {
        Code::new(self.n, self.words.iter().map(|w| w.permute(perm)))
            .expect("permutation stays in range")
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::parse::format_sets(f, self.n, &self.words)
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code[n={}: {}]", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_code;

    #[test]
    fn empty_word_auto_inserted() {
        let c = Code::new(3, [NeuronSet::from_neurons([1, 2])]).unwrap();
        assert!(c.contains(NeuronSet::EMPTY));
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn trunk_examples() {
        // Tk_{C2}(35) = {135}
        let c2 = parse_code("1236 234 135 456 13 23 4 5 6 -", None).unwrap();
        let tk = c2.trunk(NeuronSet::from_neurons([3, 5]));
        assert_eq!(tk, vec![NeuronSet::from_neurons([1, 3, 5])]);
        // trunk of ∅ is the whole code
        assert_eq!(c2.trunk(NeuronSet::EMPTY).len(), c2.len());
        // Tk_{C_TL}(4) = {24, 45, 46, 145, 245, 246, 346}
        let ctl = parse_code("123 145 245 246 346 24 45 46 1 2 3", None).unwrap();
        let tk4 = ctl.trunk(NeuronSet::singleton(4));
        assert_eq!(tk4.len(), 7);
        for w in ["24", "45", "46", "145", "245", "246", "346"] {
            let ws = NeuronSet::from_neurons(w.bytes().map(|b| b - b'0'));
            assert!(tk4.contains(&ws));
        }
    }

    #[test]
    fn trunk_covered_by_examples() {
        let c2 = parse_code("1236 234 135 456 13 23 4 5 6", None).unwrap();
        let phi = NeuronSet::singleton(3);
        let psis = [
            NeuronSet::from_neurons([1, 3]),
            NeuronSet::from_neurons([2, 3]),
        ];
        assert!(c2.trunk_covered_by(phi, &psis));
        // ψ = {∅} covers anything
        assert!(c2.trunk_covered_by(phi, &[NeuronSet::EMPTY]));
        // C_TL: Tk(4) ⊄ Tk(24); 145 is the counterexample
        let ctl = parse_code("123 145 245 246 346 24 45 46 1 2 3", None).unwrap();
        assert!(!ctl.trunk_covered_by(
            NeuronSet::singleton(4),
            &[NeuronSet::from_neurons([2, 4])]
        ));
    }

    #[test]
    fn neural_complex_examples() {
        let cstar = parse_code("2345 123 134 145 13 14 23 34 45 3 4", None).unwrap();
        let cx = cstar.neural_complex();
        let expect = ["123", "134", "145", "2345"];
        assert_eq!(cx.facet_count(), 4);
        for w in expect {
            let f = NeuronSet::from_neurons(w.bytes().map(|b| b - b'0'));
            assert!(cx.facets().contains(&f));
        }
        // {∅} -> complex {∅}
        let trivial = Code::new(2, []).unwrap();
        assert_eq!(trivial.neural_complex().facets(), &[NeuronSet::EMPTY]);
    }

    #[test]
    fn restrict_examples() {
        let c = parse_code("2356 123 14 235 236 12 23 1 2 4", None).unwrap();
        let r = c.restrict(NeuronSet::from_neurons([5, 6]));
        let expect = Code::new(
            6,
            [
                NeuronSet::from_neurons([5, 6]),
                NeuronSet::singleton(5),
                NeuronSet::singleton(6),
            ],
        )
        .unwrap();
        assert_eq!(r, expect);
        // restricting to [n] is the identity
        assert_eq!(c.restrict(NeuronSet::full(6)), c);
        // C* restricted to {1}
        let cstar = parse_code("2345 123 134 145 13 14 23 34 45 3 4", None).unwrap();
        let r1 = cstar.restrict(NeuronSet::singleton(1));
        assert_eq!(
            r1.words(),
            &[NeuronSet::EMPTY, NeuronSet::singleton(1)]
        );
    }
}
