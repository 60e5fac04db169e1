//! Simplicial complexes on `[n]`, stored as their facet antichain.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{NeuronSet, MAX_NEURONS};

/// A simplicial complex on vertex set `[n]`, represented by its facets.
///
/// Faces are implicit: `sigma` is a face iff it is contained in some facet.
/// The facet list is a sorted antichain. Two degenerate complexes are
/// representable: the void complex (empty facet list, no faces at all) and
/// the empty complex `{∅}` (facet list `[∅]`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    n: u8,
    facets: Vec<NeuronSet>,
}

impl SimplicialComplex {
    /// Builds a complex from an arbitrary family of faces: the facets are the
    /// inclusion-maximal members. Duplicates and dominated faces are dropped.
    pub fn from_faces<I: IntoIterator<Item = NeuronSet>>(n: u8, faces: I) -> Result<Self> {
        if n > MAX_NEURONS {
            return Err(Error::TooManyNeurons { n, max: MAX_NEURONS });
        }
        let full = NeuronSet::full(n);
        let mut list: Vec<NeuronSet> = Vec::new();
        for f in faces {
            if !f.is_subset(full) {
                return Err(Error::NeuronOutOfRange {
                    neuron: f.iter().find(|&i| i > n).unwrap_or(0),
                    n,
                });
            }
            list.push(f);
        }
        // keep maximal members only
        let mut facets: Vec<NeuronSet> = Vec::new();
        for &f in &list {
            if list.iter().any(|&g| f != g && f.is_subset(g)) {
                continue;
            }
            if !facets.contains(&f) {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        Ok(SimplicialComplex { n, facets })
    }

    /// The void complex (no faces, not even the empty one).
    pub fn void(n: u8) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// Sorted facet list.
    pub fn facets(&self) -> &[NeuronSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `dim(Δ) = max |F| - 1` over facets; `-1` for `{∅}`.
    ///
    /// Returns `None` for the void complex.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.len() as i32 - 1).max()
    }

    /// True when every facet has the same dimension.
    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f0) => self.facets.iter().all(|f| f.len() == f0.len()),
        }
    }

    /// Union of all facets: the vertices actually used.
    pub fn support(&self) -> NeuronSet {
        self.facets
            .iter()
            .fold(NeuronSet::EMPTY, |acc, &f| acc | f)
    }

    /// Membership test: `sigma ∈ Δ` iff `sigma ⊆ F` for some facet `F`.
    pub fn is_face(&self, sigma: NeuronSet) -> bool {
        self.facets.iter().any(|&f| sigma.is_subset(f))
    }

    /// The link `Lk_σ(Δ) = { ω ∖ σ | σ ⊆ ω ∈ Δ }`, a complex on the same
    /// ambient vertex set with `σ` removed.
    pub fn link(&self, sigma: NeuronSet) -> Result<SimplicialComplex> {
        if !self.is_face(sigma) {
            return Err(Error::NotAFace { sigma });
        }
        let faces = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|&f| f - sigma);
        SimplicialComplex::from_faces(self.n, faces)
    }

    /// Every face of the complex, deduplicated, in ascending mask order.
    /// The empty face is included whenever the complex is non-void.
    pub fn faces(&self) -> Vec<NeuronSet> {
        let mut seen = vec![false; 1 << self.n as usize];
        let mut out = Vec::new();
        for &f in &self.facets {
            for s in f.subsets() {
                let idx = s.bits() as usize;
                if !seen[idx] {
                    seen[idx] = true;
                    out.push(s);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Restricts the complex to the vertices of `chi` and compacts the labels
    /// so the result lives on `[|chi|]`. Returns the relabeled complex and the
    /// map sending new labels (1-based, by index) to old labels.
    pub fn compact_to(&self, chi: NeuronSet) -> (SimplicialComplex, Vec<u8>) {
        let old_labels: Vec<u8> = chi.iter().collect();
        let mut new_of_old = [0u8; MAX_NEURONS as usize + 1];
        for (k, &old) in old_labels.iter().enumerate() {
            new_of_old[old as usize] = k as u8 + 1;
        }
        let facets = self.facets.iter().map(|f| {
            NeuronSet::from_neurons(
                f.intersection(chi).iter().map(|i| new_of_old[i as usize]),
            )
        });
        let cx = SimplicialComplex::from_faces(old_labels.len() as u8, facets)
            .expect("compacted labels are in range");
        (cx, old_labels)
    }

    /// Applies a vertex permutation (`perm[i]` = 0-based image of 0-based `i`).
    pub fn permute(&self, perm: &[u8]) -> SimplicialComplex {
        let mut facets: Vec<NeuronSet> =
            self.facets.iter().map(|f| f.permute(perm)).collect();
        facets.sort_unstable();
        SimplicialComplex { n: self.n, facets }
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::parse::format_sets(f, self.n, &self.facets)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ[n={}: {}]", self.n, self)
    }
}
