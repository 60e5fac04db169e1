//! Combinatorial analysis of neural codes for convexity obstructions.
//!
//! The crate detects local obstructions and the three combinatorial wheel
//! kinds (sprockets, wire wheels, wheel frames), reduces and decomposes
//! codes, enumerates connected simplicial complexes isomorph-free, and runs
//! the end-to-end classification of minimal codes on six neurons.
//!
//! Neuron labels are 1-based externally (bit `i - 1` internally) with a
//! hard cap of 16 neurons. All types are immutable values and all
//! operations are pure; everything is safe to call from multiple threads.

pub mod code;
pub mod complex;
pub mod enumerate;
pub mod error;
pub mod obstructions;
pub mod parse;
pub mod pipeline;
pub mod reduce;
pub mod samples;
pub mod set;
pub mod topo;
pub mod wheels;

pub use code::Code;
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use set::NeuronSet;
