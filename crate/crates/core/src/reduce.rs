//! Trivial and redundant neurons, code reduction, and decomposability.

use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::set::NeuronSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionKind {
    /// The neuron appears in no codeword.
    Trivial,
    /// `Tk({i}) = Tk(σ)` for some `σ` not containing `i`.
    Redundant,
}

/// One neuron removal. `neuron` and `witness_sigma` use the labels of the
/// code at the time of removal (labels above the removed neuron shift down
/// by one in later steps).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub neuron: u8,
    pub kind: ReductionKind,
    pub witness_sigma: Option<NeuronSet>,
}

/// A decomposition certificate: codewords meeting `phi` are exactly
/// `φ̃ ∪ psi` for subsets `φ̃ ⊆ phi`, with `psi` a codeword disjoint
/// from `phi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub phi: NeuronSet,
    pub psi: NeuronSet,
}

fn trunks_equal(code: &Code, a: NeuronSet, b: NeuronSet) -> bool {
    code.words()
        .iter()
        .all(|&w| a.is_subset(w) == b.is_subset(w))
}

/// Witness for neuron `i` being redundant, if any.
///
/// Any witness `σ` satisfies `σ ⊆ c` for every codeword `c ⊇ {i}`, so
/// `σ ⊆ σ_max := (∩ Tk({i})) ∖ {i}`, and then
/// `Tk(σ_max) ⊆ Tk(σ) = Tk({i}) ⊆ Tk(σ_max)`. Checking `σ_max` alone is
/// therefore sound and complete.
pub fn redundant_neuron_witness(code: &Code, i: u8) -> Option<NeuronSet> {
    assert!((1..=code.n()).contains(&i), "neuron {i} out of range");
    let unit = NeuronSet::singleton(i);
    let mut meet = NeuronSet::full(code.n());
    let mut any = false;
    for &w in code.words() {
        if unit.is_subset(w) {
            meet = meet.intersection(w);
            any = true;
        }
    }
    if !any {
        return None; // trivial, not redundant
    }
    let sigma_max = meet - unit;
    if trunks_equal(code, sigma_max, unit) {
        Some(sigma_max)
    } else {
        None
    }
}

pub fn is_trivial_neuron(code: &Code, i: u8) -> bool {
    assert!((1..=code.n()).contains(&i), "neuron {i} out of range");
    let unit = NeuronSet::singleton(i);
    code.words().iter().all(|w| !unit.is_subset(*w))
}

/// The lowest-index removable neuron, if any. `include_trivial` controls
/// whether trivial neurons are considered; sweeps over connected complexes
/// can skip them since such codes have none.
pub fn find_removable_neuron(code: &Code, include_trivial: bool) -> Option<ReductionStep> {
    for i in 1..=code.n() {
        if include_trivial && is_trivial_neuron(code, i) {
            return Some(ReductionStep {
                neuron: i,
                kind: ReductionKind::Trivial,
                witness_sigma: None,
            });
        }
        if let Some(sigma) = redundant_neuron_witness(code, i) {
            return Some(ReductionStep {
                neuron: i,
                kind: ReductionKind::Redundant,
                witness_sigma: Some(sigma),
            });
        }
    }
    None
}

/// Repeatedly removes the lowest-index trivial or redundant neuron until the
/// code is reduced. Returns the reduced code (on compacted labels) and the
/// removal log.
pub fn reduce(code: &Code) -> (Code, Vec<ReductionStep>) {
    let mut current = code.clone();
    let mut log = Vec::new();
    while let Some(step) = find_removable_neuron(&current, true) {
        current = current.drop_neuron(step.neuron);
        log.push(step);
    }
    (current, log)
}

/// Searches for a decomposition: a nonempty proper `φ ⊊ [n]` such that all
/// codewords meeting `φ` share the same part `ψ = c ∖ φ`, with `ψ ∈ C`
/// disjoint from `φ`. Scans `φ` in ascending mask order and returns the
/// first hit.
pub fn find_decomposition(code: &Code) -> Option<Decomposition> {
    let n = code.n();
    if n == 0 {
        return None;
    }
    let full = NeuronSet::full(n);
    for bits in 1..full.bits() {
        let phi = NeuronSet::from_bits(bits);
        let mut meeting = code.words().iter().filter(|w| w.intersects(phi));
        let Some(&first) = meeting.next() else {
            continue;
        };
        let psi = first - phi;
        if !meeting.all(|&c| c - phi == psi) {
            continue;
        }
        if !code.contains(psi) {
            continue;
        }
        debug_assert!(!psi.intersects(phi));
        debug_assert!(psi != full);
        // soundness replay: every word meeting φ splits as claimed
        debug_assert!(code
            .words()
            .iter()
            .filter(|w| w.intersects(phi))
            .all(|&c| c == c.intersection(phi).union(psi)));
        return Some(Decomposition { phi, psi });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_code;

    fn s(w: &str) -> NeuronSet {
        NeuronSet::from_neurons(w.bytes().map(|b| b - b'0'))
    }

    #[test]
    fn redundant_witness_examples() {
        let c = parse_code("12", Some(2)).unwrap();
        assert_eq!(redundant_neuron_witness(&c, 1), Some(s("2")));
        let ctl = parse_code("123 145 245 246 346 24 45 46 1 2 3", None).unwrap();
        assert_eq!(redundant_neuron_witness(&ctl, 5), None);
        // a neuron appearing in no word is trivial, not redundant
        let c = parse_code("12", Some(3)).unwrap();
        assert_eq!(redundant_neuron_witness(&c, 3), None);
        assert!(is_trivial_neuron(&c, 3));
    }

    #[test]
    fn reduce_examples() {
        let c = parse_code("12", Some(2)).unwrap();
        let (reduced, log) = reduce(&c);
        assert_eq!(reduced, parse_code("1", Some(1)).unwrap());
        assert_eq!(log.len(), 1);
        assert_eq!(log[0].kind, ReductionKind::Redundant);

        let cstar = parse_code("2345 123 134 145 13 14 23 34 45 3 4", None).unwrap();
        let (reduced, log) = reduce(&cstar);
        assert_eq!(reduced, cstar);
        assert!(log.is_empty());

        let c = Code::new(1, []).unwrap();
        let (reduced, log) = reduce(&c);
        assert_eq!(reduced.n(), 0);
        assert_eq!(log[0].kind, ReductionKind::Trivial);
    }

    #[test]
    fn reduce_is_idempotent() {
        for text in [
            "12 13 2 3",
            "123 124 12",
            "1234 12 34",
            "12",
        ] {
            let c = parse_code(text, None).unwrap();
            let (r1, _) = reduce(&c);
            let (r2, _) = reduce(&r1);
            assert_eq!(r1, r2);
            for i in 1..=r1.n() {
                assert_eq!(redundant_neuron_witness(&r1, i), None);
                assert!(!is_trivial_neuron(&r1, i));
            }
        }
    }

    #[test]
    fn decomposition_example() {
        let c = parse_code("2356 123 14 235 236 12 23 1 2 4", None).unwrap();
        let d = find_decomposition(&c).unwrap();
        assert_eq!(d.phi, s("56"));
        assert_eq!(d.psi, s("23"));
    }

    #[test]
    fn non_decomposable_examples() {
        let cstar = parse_code("2345 123 134 145 13 14 23 34 45 3 4", None).unwrap();
        assert_eq!(find_decomposition(&cstar), None);
        let simplex = parse_code("123", None).unwrap();
        assert_eq!(find_decomposition(&simplex), None);
    }
}
