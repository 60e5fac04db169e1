//! Text grammar for codes and complexes.
//!
//! Whitespace-separated tokens. A token is either a digit string (neuron
//! labels 1-9, e.g. `2356`) or a brace form `{2,3,5,6}` (required once labels
//! exceed 9). The literal token `-` denotes the empty set. For codes the
//! empty codeword is implied even when absent. Complexes use the same
//! grammar with tokens read as facets.

use std::fmt;

use crate::code::Code;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::set::NeuronSet;

fn parse_token(tok: &str) -> Result<NeuronSet> {
    if tok == "-" {
        return Ok(NeuronSet::EMPTY);
    }
    if let Some(inner) = tok.strip_prefix('{') {
        let inner = inner
            .strip_suffix('}')
            .ok_or_else(|| Error::Parse(format!("unterminated brace token `{tok}`")))?;
        let mut set = NeuronSet::EMPTY;
        if inner.is_empty() {
            return Ok(set);
        }
        for part in inner.split(',') {
            let i: u8 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad neuron label `{part}` in `{tok}`")))?;
            if !(1..=16).contains(&i) {
                return Err(Error::Parse(format!("neuron {i} out of range 1..=16")));
            }
            set = set | NeuronSet::singleton(i);
        }
        return Ok(set);
    }
    let mut set = NeuronSet::EMPTY;
    for b in tok.bytes() {
        if !(b'1'..=b'9').contains(&b) {
            return Err(Error::Parse(format!(
                "bad token `{tok}`: digit-string tokens use labels 1-9 \
                 (use the brace form {{10,11}} for larger labels)"
            )));
        }
        set = set | NeuronSet::singleton(b - b'0');
    }
    Ok(set)
}

fn parse_sets(input: &str) -> Result<Vec<NeuronSet>> {
    input.split_whitespace().map(parse_token).collect()
}

fn infer_n(sets: &[NeuronSet], n: Option<u8>) -> u8 {
    n.unwrap_or_else(|| {
        sets.iter()
            .flat_map(|s| s.iter())
            .max()
            .unwrap_or(0)
    })
}

/// Parses a code. `n` defaults to the largest neuron label mentioned.
pub fn parse_code(input: &str, n: Option<u8>) -> Result<Code> {
    let sets = parse_sets(input)?;
    Code::new(infer_n(&sets, n), sets)
}

/// Parses a complex from facet tokens. `n` defaults to the largest vertex
/// label mentioned. An all-whitespace input yields the void complex.
pub fn parse_complex(input: &str, n: Option<u8>) -> Result<SimplicialComplex> {
    let sets = parse_sets(input)?;
    if sets.is_empty() {
        return Ok(SimplicialComplex::void(n.unwrap_or(0)));
    }
    SimplicialComplex::from_faces(infer_n(&sets, n), sets)
}

/// Formats one set in the grammar (digit string when `n ≤ 9`, brace form
/// otherwise, `-` for the empty set).
pub fn format_set(f: &mut fmt::Formatter<'_>, n: u8, s: NeuronSet) -> fmt::Result {
    if s.is_empty() {
        return write!(f, "-");
    }
    if n <= 9 {
        for i in s.iter() {
            write!(f, "{i}")?;
        }
        Ok(())
    } else {
        write!(f, "{{")?;
        for (k, i) in s.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn format_sets(
    f: &mut fmt::Formatter<'_>,
    n: u8,
    sets: &[NeuronSet],
) -> fmt::Result {
    for (k, &s) in sets.iter().enumerate() {
        if k > 0 {
            write!(f, " ")?;
        }
        format_set(f, n, s)?;
    }
    Ok(())
}

/// Renders a set to a string in the grammar.
pub fn set_to_string(n: u8, s: NeuronSet) -> String {
    struct W(u8, NeuronSet);
    impl fmt::Display for W {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            format_set(f, self.0, self.1)
        }
    }
    W(n, s).to_string()
}
