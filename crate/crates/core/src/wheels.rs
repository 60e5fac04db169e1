//! Certificate-producing detectors for sprockets, wire wheels, and wheel
//! frames, plus unpruned brute-force twins used as test oracles.
//!
//! The pruned finders restrict their searches using facts that hold for any
//! certificate: rims of sprockets and wire wheels are non-codeword
//! max-intersection faces, spokes of sprockets and wire wheels have no
//! pairwise containments, and sprocket witnesses are forced into the
//! intersection of the trunk of `σ_j ∪ τ`. Wheel-frame rims range over all
//! nonempty max-intersection faces; codeword rims are not excluded since
//! that exclusion is only conjectural for frames. The brute-force twins
//! enumerate raw tuples over every face (empty sets included) so the
//! pruning derivations stay guarded by tests.

use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::obstructions::max_intersection_faces_of;
use crate::set::NeuronSet;

/// A partial-wheel: the combinatorial core shared by every wheel kind.
///
/// Conditions, for spokes `σ1, σ2, σ3` and rim `τ`:
/// P(i)   `σ1∪σ2∪σ3 ∈ Δ` and `Tk(σj∪σk) = Tk(σ1∪σ2∪σ3)` for all pairs;
/// P(ii)  `σ1∪σ2∪σ3∪τ ∉ Δ`;
/// P(iii) `σj∪τ ∈ Δ` for `j = 1,2,3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialWheel {
    pub spokes: [NeuronSet; 3],
    pub rim: NeuronSet,
}

/// Sprocket certificate: a partial-wheel plus witnesses `ρ1, ρ3` with
/// S(iii)(1) `Tk(σj∪τ) ⊆ Tk(ρj)` for `j = 1,3`,
/// S(iii)(2) `Tk(τ) ⊆ Tk(ρ1) ∪ Tk(ρ3)`,
/// S(iii)(3) `Tk(ρ1∪ρ3∪τ) ⊆ Tk(σ2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SprocketCert {
    #[serde(flatten)]
    pub wheel: PartialWheel,
    pub witnesses: [NeuronSet; 2],
}

/// Wire wheel certificate: a tuple satisfying P(i) and P(ii) whose rim is a
/// non-codeword with tree link, with `σi ∖ τ` singleton vertices of that
/// tree such that the tree path from `σ1 ∖ τ` to `σ3 ∖ τ` passes through
/// `σ2 ∖ τ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireWheelCert {
    pub spokes: [NeuronSet; 3],
    pub rim: NeuronSet,
}

/// Wheel frame certificate `(σ1, σ3, τ)` satisfying F(i)-F(iv).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WheelFrameCert {
    pub spokes: [NeuronSet; 2],
    pub rim: NeuronSet,
}

/// Search accounting for negative-claim transcripts.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub rims_examined: Vec<NeuronSet>,
    pub tuples_checked: u64,
}

// ---------------------------------------------------------------------------
// Fast per-code tables
// ---------------------------------------------------------------------------

/// Word-index sets as fixed-width bit vectors (one bit per codeword).
type WordBits = Vec<u64>;

fn wb_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn wb_subset_of_union(a: &[u64], b: &[u64], c: &[u64]) -> bool {
    a.iter()
        .zip(b.iter().zip(c))
        .all(|(x, (y, z))| x & !(y | z) == 0)
}

pub(crate) struct CodeIndex {
    n: u8,
    words: Vec<NeuronSet>,
    complex: SimplicialComplex,
    /// Bit per subset of `[n]`: face of the complex or not.
    face_bits: Vec<u64>,
    neuron_trunks: Vec<WordBits>,
    all_words: WordBits,
    /// Trunk of every subset, precomputed for small `n`.
    trunk_table: Option<Vec<WordBits>>,
}

impl CodeIndex {
    pub(crate) fn new(code: &Code) -> CodeIndex {
        let n = code.n();
        let words: Vec<NeuronSet> = code.words().to_vec();
        let complex = code.neural_complex();
        let mut face_bits = vec![0u64; (1usize << n).div_ceil(64)];
        for f in &complex.faces() {
            let m = f.bits() as usize;
            face_bits[m >> 6] |= 1 << (m & 63);
        }
        let wlen = words.len().div_ceil(64);
        let mut all_words = vec![0u64; wlen.max(1)];
        for k in 0..words.len() {
            all_words[k >> 6] |= 1 << (k & 63);
        }
        let mut neuron_trunks = vec![vec![0u64; wlen]; n as usize];
        for (k, &w) in words.iter().enumerate() {
            for i in w.iter() {
                neuron_trunks[i as usize - 1][k >> 6] |= 1 << (k & 63);
            }
        }
        let mut idx = CodeIndex {
            n,
            words,
            complex,
            face_bits,
            neuron_trunks,
            all_words,
            trunk_table: None,
        };
        if n <= 7 {
            let table = (0..1u32 << n)
                .map(|m| idx.compute_trunk(NeuronSet::from_bits(m as u16)))
                .collect();
            idx.trunk_table = Some(table);
        }
        idx
    }

    pub(crate) fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    #[inline]
    pub(crate) fn is_face(&self, s: NeuronSet) -> bool {
        let m = s.bits() as usize;
        (self.face_bits[m >> 6] >> (m & 63)) & 1 == 1
    }

    pub(crate) fn contains_word(&self, s: NeuronSet) -> bool {
        self.words.binary_search(&s).is_ok()
    }

    fn compute_trunk(&self, s: NeuronSet) -> WordBits {
        let mut out = self.all_words.clone();
        for i in s.iter() {
            for (dst, src) in out.iter_mut().zip(&self.neuron_trunks[i as usize - 1]) {
                *dst &= src;
            }
        }
        out
    }

    fn trunk(&self, s: NeuronSet) -> std::borrow::Cow<'_, [u64]> {
        match &self.trunk_table {
            Some(t) => std::borrow::Cow::Borrowed(&t[s.bits() as usize]),
            None => std::borrow::Cow::Owned(self.compute_trunk(s)),
        }
    }

    /// Intersection of all codewords containing `s`; `None` if none do.
    fn trunk_meet(&self, s: NeuronSet) -> Option<NeuronSet> {
        let mut meet = NeuronSet::full(self.n);
        let mut any = false;
        for &w in &self.words {
            if s.is_subset(w) {
                meet = meet.intersection(w);
                any = true;
            }
        }
        any.then_some(meet)
    }

    /// Nonempty faces in ascending mask order.
    fn nonempty_faces(&self) -> Vec<NeuronSet> {
        self.complex
            .faces()
            .into_iter()
            .filter(|f| !f.is_empty())
            .collect()
    }

    /// All faces (including `∅`) in ascending mask order.
    fn all_faces(&self) -> Vec<NeuronSet> {
        self.complex.faces()
    }

    /// Nonempty max-intersection faces, ascending.
    fn max_intersection_faces(&self) -> Vec<NeuronSet> {
        max_intersection_faces_of(&self.complex)
            .into_iter()
            .filter(|s| !s.is_empty())
            .collect()
    }
}

fn partial_wheel_def(
    idx: &CodeIndex,
    s: [NeuronSet; 3],
    tau: NeuronSet,
) -> bool {
    let u = s[0] | s[1] | s[2];
    if !idx.is_face(u) {
        return false;
    }
    if idx.is_face(u | tau) {
        return false;
    }
    if !(idx.is_face(s[0] | tau) && idx.is_face(s[1] | tau) && idx.is_face(s[2] | tau)) {
        return false;
    }
    let tu = idx.trunk(u);
    idx.trunk(s[0] | s[1]).as_ref() == tu.as_ref()
        && idx.trunk(s[0] | s[2]).as_ref() == tu.as_ref()
        && idx.trunk(s[1] | s[2]).as_ref() == tu.as_ref()
}

fn sprocket_witness_def(
    idx: &CodeIndex,
    s: [NeuronSet; 3],
    tau: NeuronSet,
    rho1: NeuronSet,
    rho3: NeuronSet,
) -> bool {
    if !(idx.is_face(rho1) && idx.is_face(rho3)) {
        return false;
    }
    // S(iii)(1)
    if !wb_subset(&idx.trunk(s[0] | tau), &idx.trunk(rho1)) {
        return false;
    }
    if !wb_subset(&idx.trunk(s[2] | tau), &idx.trunk(rho3)) {
        return false;
    }
    // S(iii)(2)
    if !wb_subset_of_union(&idx.trunk(tau), &idx.trunk(rho1), &idx.trunk(rho3)) {
        return false;
    }
    // S(iii)(3)
    wb_subset(&idx.trunk(rho1 | rho3 | tau), &idx.trunk(s[1]))
}

struct TreeLink {
    vertices: Vec<u8>,
    /// parent[v] in a BFS tree rooted at `vertices[0]` (self-parent at root).
    parent: [u8; 17],
    depth: [u16; 17],
}

impl TreeLink {
    /// Builds the structure when the link is a tree (connected, dimension at
    /// most 1, edge count = vertex count - 1).
    fn new(link: &SimplicialComplex) -> Option<TreeLink> {
        let support = link.support();
        let vertices: Vec<u8> = support.iter().collect();
        if vertices.is_empty() {
            return None;
        }
        if link.dim().unwrap_or(-1) > 1 {
            return None;
        }
        let edges: Vec<NeuronSet> = link
            .facets()
            .iter()
            .copied()
            .filter(|f| f.len() == 2)
            .collect();
        if edges.len() != vertices.len() - 1 {
            return None;
        }
        // BFS from the first vertex; a tree must reach everything
        let mut parent = [0u8; 17];
        let mut depth = [u16::MAX; 17];
        let root = vertices[0];
        parent[root as usize] = root;
        depth[root as usize] = 0;
        let mut queue = vec![root];
        while let Some(v) = queue.pop() {
            for e in &edges {
                if e.contains(v) {
                    let w = (*e - NeuronSet::singleton(v)).min_neuron().unwrap();
                    if depth[w as usize] == u16::MAX {
                        depth[w as usize] = depth[v as usize] + 1;
                        parent[w as usize] = v;
                        queue.push(w);
                    }
                }
            }
        }
        if vertices.iter().any(|&v| depth[v as usize] == u16::MAX) {
            return None; // disconnected
        }
        Some(TreeLink { vertices, parent, depth })
    }

    /// Whether the unique tree path between `a` and `b` passes through `mid`.
    fn path_contains(&self, a: u8, b: u8, mid: u8) -> bool {
        let (mut x, mut y) = (a, b);
        let mut seen = mid == a || mid == b;
        while x != y {
            if self.depth[x as usize] >= self.depth[y as usize] {
                x = self.parent[x as usize];
                if x == mid {
                    seen = true;
                }
            } else {
                y = self.parent[y as usize];
                if y == mid {
                    seen = true;
                }
            }
        }
        seen || x == mid
    }
}

fn wire_wheel_def(
    idx: &CodeIndex,
    s: [NeuronSet; 3],
    tau: NeuronSet,
) -> bool {
    if idx.contains_word(tau) || !idx.is_face(tau) {
        return false;
    }
    let Ok(link) = idx.complex().link(tau) else {
        return false;
    };
    let Some(tree) = TreeLink::new(&link) else {
        return false;
    };
    let mut v = [0u8; 3];
    for (k, &sk) in s.iter().enumerate() {
        let rest = sk - tau;
        if rest.len() != 1 {
            return false;
        }
        let vk = rest.min_neuron().unwrap();
        if !tree.vertices.contains(&vk) {
            return false;
        }
        if !idx.is_face(sk) {
            return false;
        }
        v[k] = vk;
    }
    if v[0] == v[1] || v[0] == v[2] || v[1] == v[2] {
        return false;
    }
    if !tree.path_contains(v[0], v[2], v[1]) {
        return false;
    }
    // P(i) and P(ii)
    let u = s[0] | s[1] | s[2];
    if !idx.is_face(u) || idx.is_face(u | tau) {
        return false;
    }
    let tu = idx.trunk(u);
    idx.trunk(s[0] | s[1]).as_ref() == tu.as_ref()
        && idx.trunk(s[0] | s[2]).as_ref() == tu.as_ref()
        && idx.trunk(s[1] | s[2]).as_ref() == tu.as_ref()
}

fn wheel_frame_def(
    idx: &CodeIndex,
    s1: NeuronSet,
    s3: NeuronSet,
    tau: NeuronSet,
) -> bool {
    // F(iv) part 1
    if s1.intersects(s3) {
        return false;
    }
    // F(iii)
    if !(idx.is_face(s1 | tau) && idx.is_face(s3 | tau)) {
        return false;
    }
    let u13 = s1 | s3;
    // F(i) membership
    if !idx.is_face(u13) {
        return false;
    }
    // F(ii)
    if idx.is_face(u13 | tau) {
        return false;
    }
    // F(iv) part 2: every codeword containing τ meets σ1 ∪ σ3
    for &w in &idx.words {
        if tau.is_subset(w) && !w.intersects(u13) {
            return false;
        }
    }
    // F(i) quantifier over ω ⊆ σ1 ∪ σ3
    let t13 = idx.trunk(u13);
    for omega in u13.subsets() {
        if omega.is_subset(s1) || omega.is_subset(s3) {
            continue;
        }
        if !idx.is_face(omega | tau) {
            continue;
        }
        if idx.trunk(s1 | omega).as_ref() != t13.as_ref()
            || idx.trunk(s3 | omega).as_ref() != t13.as_ref()
        {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

/// P(i)-P(iii) for a spoke triple and rim.
pub fn check_partial_wheel(
    code: &Code,
    s1: NeuronSet,
    s2: NeuronSet,
    s3: NeuronSet,
    tau: NeuronSet,
) -> bool {
    let idx = CodeIndex::new(code);
    partial_wheel_def(&idx, [s1, s2, s3], tau)
}

/// Validates a sprocket certificate: the partial-wheel and witness
/// conditions, plus the facts every true sprocket satisfies (distinct
/// witnesses, non-codeword rim).
pub fn check_sprocket(code: &Code, cert: &SprocketCert) -> bool {
    let idx = CodeIndex::new(code);
    let s = cert.wheel.spokes;
    let tau = cert.wheel.rim;
    let [rho1, rho3] = cert.witnesses;
    if rho1 == rho3 || idx.contains_word(tau) {
        return false;
    }
    partial_wheel_def(&idx, s, tau) && sprocket_witness_def(&idx, s, tau, rho1, rho3)
}

/// Validates a wire-wheel certificate.
pub fn check_wire_wheel(code: &Code, cert: &WireWheelCert) -> bool {
    let idx = CodeIndex::new(code);
    wire_wheel_def(&idx, cert.spokes, cert.rim)
}

/// Validates a wheel-frame certificate, evaluating the F(i) quantifier by
/// full subset enumeration of `σ1 ∪ σ3`.
pub fn check_wheel_frame(code: &Code, cert: &WheelFrameCert) -> bool {
    let idx = CodeIndex::new(code);
    wheel_frame_def(&idx, cert.spokes[0], cert.spokes[1], cert.rim)
}

// ---------------------------------------------------------------------------
// Pruned finders
// ---------------------------------------------------------------------------

fn no_containment(a: NeuronSet, b: NeuronSet) -> bool {
    !a.is_subset(b) && !b.is_subset(a)
}

pub fn find_sprocket_with_stats(code: &Code) -> (Option<SprocketCert>, SearchStats) {
    let idx = CodeIndex::new(code);
    let mut stats = SearchStats::default();
    let rims: Vec<NeuronSet> = idx
        .max_intersection_faces()
        .into_iter()
        .filter(|&t| !idx.contains_word(t))
        .collect();
    let faces = idx.nonempty_faces();
    for &tau in &rims {
        stats.rims_examined.push(tau);
        let elig: Vec<NeuronSet> = faces
            .iter()
            .copied()
            .filter(|&s| idx.is_face(s | tau))
            .collect();
        for (i1, &s1) in elig.iter().enumerate() {
            for &s2 in &elig {
                if !no_containment(s1, s2) {
                    continue;
                }
                for &s3 in &elig[i1 + 1..] {
                    if !no_containment(s1, s3) || !no_containment(s2, s3) {
                        continue;
                    }
                    stats.tuples_checked += 1;
                    let spokes = [s1, s2, s3];
                    if !partial_wheel_def(&idx, spokes, tau) {
                        continue;
                    }
                    // Witnesses are forced into the meet of the trunk:
                    // S(iii)(1) says every codeword over σj∪τ contains ρj.
                    let m1 = idx.trunk_meet(s1 | tau).expect("P(iii) holds");
                    let m3 = idx.trunk_meet(s3 | tau).expect("P(iii) holds");
                    for rho1 in m1.subsets() {
                        if rho1.is_empty() {
                            continue;
                        }
                        for rho3 in m3.subsets() {
                            if rho3.is_empty() || rho1 == rho3 {
                                continue;
                            }
                            stats.tuples_checked += 1;
                            if sprocket_witness_def(&idx, spokes, tau, rho1, rho3) {
                                return (
                                    Some(SprocketCert {
                                        wheel: PartialWheel { spokes, rim: tau },
                                        witnesses: [rho1, rho3],
                                    }),
                                    stats,
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    (None, stats)
}

pub fn find_sprocket(code: &Code) -> Option<SprocketCert> {
    find_sprocket_with_stats(code).0
}

pub fn find_wire_wheel_with_stats(code: &Code) -> (Option<WireWheelCert>, SearchStats) {
    let idx = CodeIndex::new(code);
    let mut stats = SearchStats::default();
    let rims: Vec<NeuronSet> = idx
        .max_intersection_faces()
        .into_iter()
        .filter(|&t| !idx.contains_word(t))
        .collect();
    for &tau in &rims {
        stats.rims_examined.push(tau);
        let link = idx.complex().link(tau).expect("rim is a face");
        let Some(tree) = TreeLink::new(&link) else {
            continue;
        };
        let tau_subsets = tau.subsets();
        let verts = tree.vertices.clone();
        for &v1 in &verts {
            for &v2 in &verts {
                if v2 == v1 {
                    continue;
                }
                for &v3 in &verts {
                    if v3 == v1 || v3 == v2 {
                        continue;
                    }
                    let points =
                        NeuronSet::from_neurons([v1, v2, v3].iter().copied());
                    // P(ii) depends only on the vertices: the spoke union
                    // with τ is τ ∪ {v1,v2,v3}
                    if idx.is_face(points | tau) {
                        continue;
                    }
                    if !tree.path_contains(v1, v3, v2) {
                        continue;
                    }
                    for &t1 in &tau_subsets {
                        let s1 = t1 | NeuronSet::singleton(v1);
                        for &t2 in &tau_subsets {
                            let s2 = t2 | NeuronSet::singleton(v2);
                            for &t3 in &tau_subsets {
                                let s3 = t3 | NeuronSet::singleton(v3);
                                stats.tuples_checked += 1;
                                let u = s1 | s2 | s3;
                                if !idx.is_face(u) {
                                    continue;
                                }
                                let tu = idx.trunk(u);
                                if idx.trunk(s1 | s2).as_ref() == tu.as_ref()
                                    && idx.trunk(s1 | s3).as_ref() == tu.as_ref()
                                    && idx.trunk(s2 | s3).as_ref() == tu.as_ref()
                                {
                                    return (
                                        Some(WireWheelCert {
                                            spokes: [s1, s2, s3],
                                            rim: tau,
                                        }),
                                        stats,
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    (None, stats)
}

pub fn find_wire_wheel(code: &Code) -> Option<WireWheelCert> {
    find_wire_wheel_with_stats(code).0
}

pub fn find_wheel_frame_with_stats(code: &Code) -> (Option<WheelFrameCert>, SearchStats) {
    let idx = CodeIndex::new(code);
    let mut stats = SearchStats::default();
    // Codeword rims are not excluded here: that exclusion is unproven for
    // frames, unlike for sprockets and wire wheels.
    let rims = idx.max_intersection_faces();
    let faces = idx.nonempty_faces();
    for &tau in &rims {
        stats.rims_examined.push(tau);
        for (i1, &s1) in faces.iter().enumerate() {
            if !idx.is_face(s1 | tau) {
                continue;
            }
            for &s3 in &faces[i1 + 1..] {
                if s1.intersects(s3) {
                    continue;
                }
                stats.tuples_checked += 1;
                if wheel_frame_def(&idx, s1, s3, tau) {
                    return (
                        Some(WheelFrameCert { spokes: [s1, s3], rim: tau }),
                        stats,
                    );
                }
            }
        }
    }
    (None, stats)
}

pub fn find_wheel_frame(code: &Code) -> Option<WheelFrameCert> {
    find_wheel_frame_with_stats(code).0
}

/// Outcome of running all three detectors. Every finder runs even after a
/// hit: the classification tables need the full per-kind profile.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WheelReport {
    pub sprocket: Option<SprocketCert>,
    pub wire_wheel: Option<WireWheelCert>,
    pub wheel_frame: Option<WheelFrameCert>,
}

impl WheelReport {
    pub fn any(&self) -> bool {
        self.sprocket.is_some() || self.wire_wheel.is_some() || self.wheel_frame.is_some()
    }
}

/// Per-kind search transcripts for negative claims.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct WheelSearchStats {
    pub sprocket: SearchStats,
    pub wire_wheel: SearchStats,
    pub wheel_frame: SearchStats,
}

pub fn wheel_report_with_stats(code: &Code) -> (WheelReport, WheelSearchStats) {
    let (sprocket, s1) = find_sprocket_with_stats(code);
    let (wire_wheel, s2) = find_wire_wheel_with_stats(code);
    let (wheel_frame, s3) = find_wheel_frame_with_stats(code);
    (
        WheelReport { sprocket, wire_wheel, wheel_frame },
        WheelSearchStats { sprocket: s1, wire_wheel: s2, wheel_frame: s3 },
    )
}

pub fn wheel_report(code: &Code) -> WheelReport {
    wheel_report_with_stats(code).0
}

// ---------------------------------------------------------------------------
// Brute-force twins
// ---------------------------------------------------------------------------

/// Default tuple budget for the brute-force searches.
pub const DEFAULT_BRUTE_BUDGET: u64 = 1 << 30;

struct Budget {
    left: u64,
    budget: u64,
}

impl Budget {
    fn new(budget: u64) -> Budget {
        Budget { left: budget, budget }
    }
    fn spend(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::SearchBudgetExceeded { budget: self.budget });
        }
        self.left -= 1;
        Ok(())
    }
}

/// Unpruned sprocket search: all quadruples over all faces (empty set
/// included) and all witness pairs, checking the raw definition only.
pub fn brute_force_find_sprocket(
    code: &Code,
    budget: u64,
) -> Result<Option<SprocketCert>> {
    let idx = CodeIndex::new(code);
    let faces = idx.all_faces();
    let mut budget = Budget::new(budget);
    for &s1 in &faces {
        for &s2 in &faces {
            for &s3 in &faces {
                for &tau in &faces {
                    budget.spend()?;
                    let spokes = [s1, s2, s3];
                    if !partial_wheel_def(&idx, spokes, tau) {
                        continue;
                    }
                    for &rho1 in &faces {
                        for &rho3 in &faces {
                            budget.spend()?;
                            if sprocket_witness_def(&idx, spokes, tau, rho1, rho3) {
                                return Ok(Some(SprocketCert {
                                    wheel: PartialWheel { spokes, rim: tau },
                                    witnesses: [rho1, rho3],
                                }));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Unpruned wire-wheel search over all quadruples of faces.
pub fn brute_force_find_wire_wheel(
    code: &Code,
    budget: u64,
) -> Result<Option<WireWheelCert>> {
    let idx = CodeIndex::new(code);
    let faces = idx.all_faces();
    let mut budget = Budget::new(budget);
    for &s1 in &faces {
        for &s2 in &faces {
            for &s3 in &faces {
                for &tau in &faces {
                    budget.spend()?;
                    if wire_wheel_def(&idx, [s1, s2, s3], tau) {
                        return Ok(Some(WireWheelCert { spokes: [s1, s2, s3], rim: tau }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Unpruned wheel-frame search over all triples of faces.
pub fn brute_force_find_wheel_frame(
    code: &Code,
    budget: u64,
) -> Result<Option<WheelFrameCert>> {
    let idx = CodeIndex::new(code);
    let faces = idx.all_faces();
    let mut budget = Budget::new(budget);
    for &s1 in &faces {
        for &s3 in &faces {
            for &tau in &faces {
                budget.spend()?;
                if wheel_frame_def(&idx, s1, s3, tau) {
                    return Ok(Some(WheelFrameCert { spokes: [s1, s3], rim: tau }));
                }
            }
        }
    }
    Ok(None)
}
