//! Isomorph-free enumeration of connected simplicial complexes, canonical
//! forms, and isomorphism tests.
//!
//! The canonical form of a complex is the lexicographically least sorted
//! facet list over all vertex relabelings. Enumeration grows facet
//! antichains in increasing mask order and emits exactly the canonical
//! representatives, so every isomorphism class appears once.

use std::ops::RangeInclusive;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::code::Code;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::set::NeuronSet;

/// Canonical labeling is a factorial scan; keep it to small vertex counts.
pub const MAX_CANON_VERTICES: u8 = 7;

/// The canonical facet list of a complex together with a permutation that
/// achieves it (`perm[i]` is the 0-based image of 0-based vertex `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub facets: Vec<NeuronSet>,
    pub perm: Vec<u8>,
}

struct PermTables {
    perms: Vec<Vec<u8>>,
    /// `tables[p][mask]` = mask relabeled through `perms[p]`.
    tables: Vec<Vec<u16>>,
}

static PERM_TABLES: [OnceLock<PermTables>; 8] = [
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
];

fn build_perm_tables(n: u8) -> PermTables {
    let mut perms: Vec<Vec<u8>> = Vec::new();
    let mut current: Vec<u8> = (0..n).collect();
    // lexicographic permutation generation
    loop {
        perms.push(current.clone());
        let Some(i) = (0..current.len().saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            break;
        };
        let j = (i + 1..current.len())
            .rev()
            .find(|&j| current[j] > current[i])
            .unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    if n == 0 {
        perms = vec![Vec::new()];
    }
    let size = 1usize << n;
    let tables = perms
        .iter()
        .map(|p| {
            (0..size)
                .map(|mask| NeuronSet::from_bits(mask as u16).permute(p).bits())
                .collect()
        })
        .collect();
    PermTables { perms, tables }
}

fn perm_tables(n: u8) -> &'static PermTables {
    PERM_TABLES[n as usize].get_or_init(|| build_perm_tables(n))
}

/// Compares the multiset `mapped` (destructively sorted as needed) against
/// the ascending list `best`, with early exit.
fn compare_mapped(mapped: &mut [u16], best: &[u16]) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    debug_assert_eq!(mapped.len(), best.len());
    for i in 0..mapped.len() {
        // selection sort step: smallest remaining element to position i
        let mut min_j = i;
        for j in i + 1..mapped.len() {
            if mapped[j] < mapped[min_j] {
                min_j = j;
            }
        }
        mapped.swap(i, min_j);
        match mapped[i].cmp(&best[i]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn check_vertex_bound(n: u8) -> Result<()> {
    if n > MAX_CANON_VERTICES {
        return Err(Error::VertexBoundExceeded { n, max: MAX_CANON_VERTICES });
    }
    Ok(())
}

/// Computes the canonical form: the minimum sorted facet list over all
/// vertex permutations, plus an achieving permutation.
pub fn canonical_form(cx: &SimplicialComplex) -> Result<CanonicalForm> {
    check_vertex_bound(cx.n())?;
    let tables = perm_tables(cx.n());
    let masks: Vec<u16> = cx.facets().iter().map(|f| f.bits()).collect();
    let mut best: Vec<u16> = masks.clone();
    best.sort_unstable();
    let mut best_perm = 0usize;
    let mut scratch = vec![0u16; masks.len()];
    for (p, table) in tables.tables.iter().enumerate() {
        for (dst, &m) in scratch.iter_mut().zip(&masks) {
            *dst = table[m as usize];
        }
        if compare_mapped(&mut scratch, &best) == std::cmp::Ordering::Less {
            // compare_mapped sorts only as far as the deciding position
            scratch.sort_unstable();
            best.copy_from_slice(&scratch);
            best_perm = p;
        }
    }
    Ok(CanonicalForm {
        facets: best.into_iter().map(NeuronSet::from_bits).collect(),
        perm: tables.perms[best_perm].clone(),
    })
}

/// True iff the complex equals its own canonical form.
fn is_canonical(n: u8, sorted_masks: &[u16]) -> bool {
    let tables = perm_tables(n);
    let mut scratch = vec![0u16; sorted_masks.len()];
    for table in &tables.tables {
        for (dst, &m) in scratch.iter_mut().zip(sorted_masks) {
            *dst = table[m as usize];
        }
        // early reject: the smallest mapped facet already beats the original
        let min = scratch.iter().copied().min().unwrap_or(0);
        match min.cmp(&sorted_masks[0]) {
            std::cmp::Ordering::Greater => continue,
            std::cmp::Ordering::Less => return false,
            std::cmp::Ordering::Equal => {}
        }
        if compare_mapped(&mut scratch, sorted_masks) == std::cmp::Ordering::Less {
            return false;
        }
    }
    true
}

/// Isomorphism test via canonical forms.
pub fn are_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<bool> {
    if a.n() != b.n() || a.facet_count() != b.facet_count() {
        return Ok(false);
    }
    let mut sa: Vec<u32> = a.facets().iter().map(|f| f.len()).collect();
    let mut sb: Vec<u32> = b.facets().iter().map(|f| f.len()).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(false);
    }
    Ok(canonical_form(a)?.facets == canonical_form(b)?.facets)
}

/// Code isomorphism: some relabeling of the neurons maps one word list onto
/// the other.
pub fn are_code_isomorphic(a: &Code, b: &Code) -> Result<bool> {
    if a.n() != b.n() || a.len() != b.len() {
        return Ok(false);
    }
    check_vertex_bound(a.n())?;
    let mut sa: Vec<u32> = a.words().iter().map(|w| w.len()).collect();
    let mut sb: Vec<u32> = b.words().iter().map(|w| w.len()).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(false);
    }
    let tables = perm_tables(a.n());
    let masks: Vec<u16> = a.words().iter().map(|w| w.bits()).collect();
    let target: Vec<u16> = b.words().iter().map(|w| w.bits()).collect();
    let mut scratch = vec![0u16; masks.len()];
    for table in &tables.tables {
        for (dst, &m) in scratch.iter_mut().zip(&masks) {
            *dst = table[m as usize];
        }
        scratch.sort_unstable();
        if scratch == target {
            return Ok(true);
        }
    }
    Ok(false)
}

pub(crate) fn support_connected(facets: &[NeuronSet]) -> bool {
    let support = facets
        .iter()
        .fold(NeuronSet::EMPTY, |acc, &f| acc | f);
    let Some(first) = support.min_neuron() else {
        return false;
    };
    let mut comp = NeuronSet::singleton(first);
    loop {
        let mut grew = false;
        for &f in facets {
            if f.intersects(comp) && !f.is_subset(comp) {
                comp = comp | f;
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    comp == support
}

/// Connectivity in the enumerator's sense: every vertex `1..=n` appears in
/// some facet, and the complex is connected through shared vertices.
pub fn is_connected(cx: &SimplicialComplex) -> bool {
    if cx.support() != NeuronSet::full(cx.n()) || cx.n() == 0 {
        return false;
    }
    support_connected(cx.facets())
}

/// Enumerates exactly one representative per isomorphism class of connected
/// complexes on vertex set `[n]` (all `n` vertices used) whose facet count
/// lies in `facet_range`, optionally restricted to pure complexes of the
/// given dimension.
///
/// Results come in a deterministic order (lexicographic in the candidate
/// facet sequence).
pub fn enumerate_connected(
    n: u8,
    facet_range: RangeInclusive<usize>,
    pure_dim: Option<u32>,
) -> Result<Vec<SimplicialComplex>> {
    check_vertex_bound(n)?;
    if n == 0 || *facet_range.end() == 0 || facet_range.is_empty() {
        return Ok(Vec::new());
    }
    let full = NeuronSet::full(n).bits();
    let pool: Vec<u16> = (1..=full)
        .filter(|&m| {
            let pc = m.count_ones();
            match pure_dim {
                Some(d) => pc == d + 1,
                // singleton facets give isolated vertices, impossible in a
                // connected complex unless n == 1
                None => pc >= 2 || n == 1,
            }
        })
        .collect();
    // suffix_union[i] = union of pool[i..]
    let mut suffix_union = vec![0u16; pool.len() + 1];
    for i in (0..pool.len()).rev() {
        suffix_union[i] = suffix_union[i + 1] | pool[i];
    }

    let (min_k, max_k) = (*facet_range.start(), *facet_range.end());
    let mut candidates: Vec<Vec<u16>> = Vec::new();
    let mut out: Vec<SimplicialComplex> = Vec::new();

    // Candidates are batched so the canonicity tests run in parallel
    // without holding the whole labeled family in memory.
    const BATCH: usize = 1 << 16;

    fn flush(n: u8, candidates: &mut Vec<Vec<u16>>, out: &mut Vec<SimplicialComplex>) {
        let kept: Vec<SimplicialComplex> = candidates
            .par_iter()
            .filter(|c| is_canonical(n, c))
            .map(|c| {
                SimplicialComplex::from_faces(
                    n,
                    c.iter().map(|&m| NeuronSet::from_bits(m)),
                )
                .expect("facets are valid")
            })
            .collect();
        out.extend(kept);
        candidates.clear();
    }

    struct Ctx<'a> {
        pool: &'a [u16],
        suffix_union: &'a [u16],
        full: u16,
        min_k: usize,
        max_k: usize,
        n: u8,
    }

    fn recurse(
        ctx: &Ctx,
        start: usize,
        chosen: &mut Vec<u16>,
        union: u16,
        candidates: &mut Vec<Vec<u16>>,
        out: &mut Vec<SimplicialComplex>,
    ) {
        if chosen.len() >= ctx.min_k && union == ctx.full {
            let facets: Vec<NeuronSet> =
                chosen.iter().map(|&m| NeuronSet::from_bits(m)).collect();
            if support_connected(&facets) {
                candidates.push(chosen.clone());
                if candidates.len() >= BATCH {
                    flush(ctx.n, candidates, out);
                }
            }
        }
        if chosen.len() == ctx.max_k {
            return;
        }
        for i in start..ctx.pool.len() {
            // even taking every remaining candidate cannot cover [n]
            if union | ctx.suffix_union[i] != ctx.full {
                break;
            }
            let f = ctx.pool[i];
            if chosen.iter().any(|&g| f & g == f || f & g == g) {
                continue;
            }
            // the least facet of a canonical complex is a contiguous prefix
            // {1..s}: anything else can be relabeled below itself
            if chosen.is_empty() && f != (1u16 << f.count_ones()) - 1 {
                continue;
            }
            chosen.push(f);
            recurse(ctx, i + 1, chosen, union | f, candidates, out);
            chosen.pop();
        }
    }

    let ctx = Ctx { pool: &pool, suffix_union: &suffix_union, full, min_k, max_k, n };
    let mut chosen = Vec::with_capacity(max_k);
    recurse(&ctx, 0, &mut chosen, 0, &mut candidates, &mut out);
    flush(n, &mut candidates, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_complex;

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let a = parse_complex("12 13", None).unwrap();
        let b = parse_complex("12 23", None).unwrap();
        assert!(are_isomorphic(&a, &b).unwrap());
        let ca = canonical_form(&a).unwrap();
        // the achieving permutation really maps to the canonical form
        let mapped = a.permute(&ca.perm);
        assert_eq!(mapped.facets(), ca.facets.as_slice());
    }

    #[test]
    fn non_isomorphic_pairs() {
        let path = parse_complex("12 23", Some(3)).unwrap();
        let triangle = parse_complex("12 13 23", Some(3)).unwrap();
        assert!(!are_isomorphic(&path, &triangle).unwrap());
    }

    #[test]
    fn cstar_complex_relabeled_is_isomorphic() {
        // relabeling by (25)(34) preserves the isomorphism class
        let cx = parse_complex("2345 123 134 145", None).unwrap();
        let perm = [0u8, 4, 3, 2, 1]; // 1->1, 2->5, 3->4, 4->3, 5->2 (0-based)
        let mapped = cx.permute(&perm);
        assert!(are_isomorphic(&cx, &mapped).unwrap());
    }

    #[test]
    fn vertex_bound_enforced() {
        let cx = SimplicialComplex::from_faces(
            8,
            [NeuronSet::from_neurons([1, 8])],
        )
        .unwrap();
        assert!(matches!(
            canonical_form(&cx),
            Err(Error::VertexBoundExceeded { .. })
        ));
    }

    #[test]
    fn connectivity_semantics() {
        let two_points = parse_complex("1 2", Some(2)).unwrap();
        assert!(!is_connected(&two_points));
        let edge = parse_complex("12", Some(2)).unwrap();
        assert!(is_connected(&edge));
        // unused vertex: not a complex "on 3 vertices"
        let edge3 = parse_complex("12", Some(3)).unwrap();
        assert!(!is_connected(&edge3));
        let ctl = parse_complex("123 145 245 246 346", None).unwrap();
        assert!(is_connected(&ctl));
    }

    #[test]
    fn small_enumerations() {
        // n=2: only the single edge
        let cs = enumerate_connected(2, 1..=10, None).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].facets(), &[NeuronSet::from_neurons([1, 2])]);
        // n=1: the single vertex
        let cs1 = enumerate_connected(1, 1..=10, None).unwrap();
        assert_eq!(cs1.len(), 1);
    }

    #[test]
    fn emitted_complexes_are_pairwise_non_isomorphic() {
        let cs = enumerate_connected(4, 1..=6, None).unwrap();
        for c in &cs {
            assert!(is_connected(c));
        }
        for i in 0..cs.len() {
            for j in i + 1..cs.len() {
                assert!(!are_isomorphic(&cs[i], &cs[j]).unwrap());
            }
        }
    }
}
