//! Local-obstruction machinery: max-intersection faces, mandatory faces,
//! minimal codes, max-intersection-completeness, and the pure-code fast path.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::set::NeuronSet;
use crate::topo::{is_contractible, ContractibilityVerdict};

/// Per-code obstruction summary.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub max_intersection_faces: BTreeSet<NeuronSet>,
    pub mandatory_faces: BTreeSet<NeuronSet>,
    pub missing_mandatory: BTreeSet<NeuronSet>,
    pub is_max_int_complete: bool,
}

/// The max-intersection faces of a complex: the closure of the facet set
/// under pairwise intersection, minus the facets themselves. Equivalently,
/// all intersections of two or more facets.
pub fn max_intersection_faces_of(cx: &SimplicialComplex) -> BTreeSet<NeuronSet> {
    let facets = cx.facets();
    let mut closure: BTreeSet<NeuronSet> = facets.iter().copied().collect();
    loop {
        let mut grew = false;
        let snapshot: Vec<NeuronSet> = closure.iter().copied().collect();
        for &a in &snapshot {
            for &b in facets {
                if closure.insert(a.intersection(b)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    for f in facets {
        closure.remove(f);
    }
    closure
}

/// Max-intersection faces of `Δ(code)`.
pub fn max_intersection_faces(code: &Code) -> BTreeSet<NeuronSet> {
    max_intersection_faces_of(&code.neural_complex())
}

/// Mandatory faces of a complex: nonempty faces whose link is not
/// contractible. Only nonempty max-intersection faces can be mandatory, so
/// the search is restricted to them.
pub fn mandatory_faces_of(cx: &SimplicialComplex) -> Result<BTreeSet<NeuronSet>> {
    let mut out = BTreeSet::new();
    for sigma in max_intersection_faces_of(cx) {
        if sigma.is_empty() {
            continue;
        }
        let link = cx.link(sigma)?;
        match is_contractible(&link)? {
            ContractibilityVerdict::Contractible(_) => {}
            ContractibilityVerdict::NonContractible(_) => {
                out.insert(sigma);
            }
            ContractibilityVerdict::Undetermined => {
                return Err(Error::OracleUndetermined { complex: link });
            }
        }
    }
    Ok(out)
}

/// Mandatory faces of `Δ(code)`.
pub fn mandatory_faces(code: &Code) -> Result<BTreeSet<NeuronSet>> {
    mandatory_faces_of(&code.neural_complex())
}

/// True iff every max-intersection face of `Δ(code)` is a codeword.
pub fn is_max_intersection_complete(code: &Code) -> bool {
    max_intersection_faces(code)
        .iter()
        .all(|&s| code.contains(s))
}

/// Returns whether the code has a local obstruction, with the smallest
/// missing mandatory face as witness.
pub fn has_local_obstruction(code: &Code) -> Result<(bool, Option<NeuronSet>)> {
    for sigma in mandatory_faces(code)? {
        if !code.contains(sigma) {
            return Ok((true, Some(sigma)));
        }
    }
    Ok((false, None))
}

/// The minimal code of a complex: facets, mandatory faces, and `∅`. This is
/// the inclusion-least code with neural complex `cx` and no local
/// obstructions.
pub fn minimal_code(cx: &SimplicialComplex) -> Result<Code> {
    if cx.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut words: Vec<NeuronSet> = cx.facets().to_vec();
    words.extend(mandatory_faces_of(cx)?);
    Code::new(cx.n(), words)
}

/// Full obstruction summary for a code.
pub fn obstruction_report(code: &Code) -> Result<ObstructionReport> {
    let max_intersection_faces = max_intersection_faces(code);
    let mandatory_faces = mandatory_faces(code)?;
    let missing_mandatory: BTreeSet<NeuronSet> = mandatory_faces
        .iter()
        .copied()
        .filter(|&s| !code.contains(s))
        .collect();
    let is_max_int_complete = max_intersection_faces
        .iter()
        .all(|&s| code.contains(s));
    Ok(ObstructionReport {
        max_intersection_faces,
        mandatory_faces,
        missing_mandatory,
        is_max_int_complete,
    })
}

/// Verdict of the pure-dimension shortcut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PureVerdict {
    Convex,
    NonConvex,
}

/// For codes whose complex is pure of dimension `0`, `1`, `n-2`, or `n-1`,
/// convexity is equivalent to max-intersection-completeness. Returns `None`
/// when the shortcut does not apply. Degenerate complexes (`{∅}` or a single
/// facet) are vacuously max-intersection-complete and report `Convex`.
pub fn pure_fast_path(code: &Code) -> Option<PureVerdict> {
    let cx = code.neural_complex();
    if cx.facet_count() <= 1 {
        return Some(PureVerdict::Convex);
    }
    if !cx.is_pure() {
        return None;
    }
    let d = cx.dim().unwrap_or(-1);
    let n = code.n() as i32;
    if d == 0 || d == 1 || d == n - 2 || d == n - 1 {
        Some(if is_max_intersection_complete(code) {
            PureVerdict::Convex
        } else {
            PureVerdict::NonConvex
        })
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_code;

    fn s(w: &str) -> NeuronSet {
        NeuronSet::from_neurons(w.bytes().map(|b| b - b'0'))
    }

    fn cstar() -> Code {
        parse_code("2345 123 134 145 13 14 23 34 45 3 4", None).unwrap()
    }

    fn ctl() -> Code {
        parse_code("123 145 245 246 346 24 45 46 1 2 3", None).unwrap()
    }

    #[test]
    fn max_intersection_faces_examples() {
        let mi = max_intersection_faces(&cstar());
        let expect: BTreeSet<NeuronSet> = ["23", "34", "45", "13", "14", "1", "3", "4"]
            .iter()
            .map(|w| s(w))
            .chain([NeuronSet::EMPTY])
            .collect();
        assert_eq!(mi, expect);

        let mi = max_intersection_faces(&ctl());
        let expect: BTreeSet<NeuronSet> = ["1", "2", "3", "4", "24", "45", "46"]
            .iter()
            .map(|w| s(w))
            .chain([NeuronSet::EMPTY])
            .collect();
        assert_eq!(mi, expect);

        // fewer than two facets: no max-intersection faces
        let single = parse_code("123", None).unwrap();
        assert!(max_intersection_faces(&single).is_empty());
    }

    #[test]
    fn mandatory_faces_examples() {
        // C*: every max-intersection face except 1 and ∅ is mandatory
        let man = mandatory_faces(&cstar()).unwrap();
        let expect: BTreeSet<NeuronSet> = ["23", "34", "45", "13", "14", "3", "4"]
            .iter()
            .map(|w| s(w))
            .collect();
        assert_eq!(man, expect);

        // C_TL: 4 is not mandatory (its link is a path)
        let man = mandatory_faces(&ctl()).unwrap();
        let expect: BTreeSet<NeuronSet> = ["1", "2", "3", "24", "45", "46"]
            .iter()
            .map(|w| s(w))
            .collect();
        assert_eq!(man, expect);

        // triangle boundary: every vertex is mandatory
        let tri = parse_code("12 13 23", None).unwrap();
        let man = mandatory_faces(&tri).unwrap();
        let expect: BTreeSet<NeuronSet> =
            ["1", "2", "3"].iter().map(|w| s(w)).collect();
        assert_eq!(man, expect);
    }

    #[test]
    fn max_intersection_completeness() {
        let c = parse_code("123 134 145 13 14", None).unwrap();
        assert!(!is_max_intersection_complete(&c)); // 1 is missing
        let mut words: Vec<NeuronSet> = cstar().words().to_vec();
        words.push(s("1"));
        let c = Code::new(5, words).unwrap();
        assert!(is_max_intersection_complete(&c));
        let trivial = Code::new(2, []).unwrap();
        assert!(is_max_intersection_complete(&trivial));
    }

    #[test]
    fn local_obstruction_examples() {
        assert_eq!(has_local_obstruction(&cstar()).unwrap(), (false, None));
        assert_eq!(has_local_obstruction(&ctl()).unwrap(), (false, None));
        let c = parse_code("12 13 23 1 2", None).unwrap();
        assert_eq!(
            has_local_obstruction(&c).unwrap(),
            (true, Some(s("3")))
        );
    }

    #[test]
    fn minimal_code_examples() {
        assert_eq!(minimal_code(&cstar().neural_complex()).unwrap(), cstar());
        assert_eq!(minimal_code(&ctl().neural_complex()).unwrap(), ctl());
        let simplex = parse_code("123", None).unwrap().neural_complex();
        let mc = minimal_code(&simplex).unwrap();
        assert_eq!(mc, parse_code("123 -", None).unwrap());
    }

    #[test]
    fn pure_fast_path_examples() {
        // pure of dimension 1 = n-2 on 3 neurons, max-intersection-complete
        let c = parse_code("12 23 13 1 2 3", None).unwrap();
        assert_eq!(pure_fast_path(&c), Some(PureVerdict::Convex));
        // {∅} and single-facet codes are vacuously convex
        let trivial = Code::new(1, []).unwrap();
        assert_eq!(pure_fast_path(&trivial), Some(PureVerdict::Convex));
        // C* is not pure
        assert_eq!(pure_fast_path(&cstar()), None);
        // missing a max-intersection face in an eligible dimension
        let c = parse_code("12 23 13 1 2", None).unwrap();
        assert_eq!(pure_fast_path(&c), Some(PureVerdict::NonConvex));
    }
}
