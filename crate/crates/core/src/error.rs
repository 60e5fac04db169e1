//! Error types shared across the crate.

use crate::complex::SimplicialComplex;
use crate::set::NeuronSet;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("neuron {neuron} out of range for a code on {n} neurons")]
    NeuronOutOfRange { neuron: u8, n: u8 },

    #[error("neuron count {n} exceeds the supported maximum of {max}")]
    TooManyNeurons { n: u8, max: u8 },

    #[error("{sigma:?} is not a face of the complex")]
    NotAFace { sigma: NeuronSet },

    #[error("operation undefined on the void complex")]
    VoidComplex,

    #[error("canonical forms are only computed for up to {max} vertices, got {n}")]
    VertexBoundExceeded { n: u8, max: u8 },

    #[error("brute-force search exceeded its budget of {budget} tuples")]
    SearchBudgetExceeded { budget: u64 },

    #[error("contractibility undetermined for complex {complex}")]
    OracleUndetermined { complex: SimplicialComplex },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification failure: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
