//! Exhaustive checks on small vertex counts and pipeline-level invariants
//! that go beyond the acceptance criteria.

use once_cell::sync::Lazy;

use codewheel_core::code::Code;
use codewheel_core::complex::SimplicialComplex;
use codewheel_core::enumerate::enumerate_connected;
use codewheel_core::obstructions::{has_local_obstruction, minimal_code};
use codewheel_core::pipeline::{
    classify_complexes, read_records_jsonl, write_records_jsonl, ClassificationRecord,
    ClassifyOptions, Status, Table1,
};
use codewheel_core::set::NeuronSet;

static SMALL: Lazy<Vec<(u8, SimplicialComplex, Code)>> = Lazy::new(|| {
    let max_facets = [0usize, 1, 2, 3, 6, 10];
    let mut out = Vec::new();
    for n in 1..=5u8 {
        for cx in enumerate_connected(n, 1..=max_facets[n as usize], None).unwrap() {
            let mc = minimal_code(&cx).unwrap();
            out.push((n, cx, mc));
        }
    }
    out
});

/// The minimal code is inclusion-least among codes on its complex without
/// local obstructions: dropping any non-facet word either changes the
/// complex (impossible for non-facets) or creates a local obstruction.
#[test]
fn minimal_code_is_inclusion_least_on_small_complexes() {
    for (n, cx, mc) in SMALL.iter() {
        let facets: Vec<NeuronSet> = cx.facets().to_vec();
        for &w in mc.words() {
            if w.is_empty() || facets.contains(&w) {
                continue;
            }
            let words: Vec<NeuronSet> =
                mc.words().iter().copied().filter(|&x| x != w).collect();
            let smaller = Code::new(*n, words).unwrap();
            assert_eq!(smaller.neural_complex(), *cx, "dropping {w:?} kept the complex");
            let (obstructed, witness) = has_local_obstruction(&smaller).unwrap();
            assert!(
                obstructed && witness == Some(w),
                "dropping {w:?} from the minimal code of {cx} must obstruct at {w:?}"
            );
        }
    }
}

#[test]
fn enumeration_emits_valid_complexes() {
    for (n, cx, _) in SMALL.iter() {
        assert_eq!(cx.n(), *n);
        assert_eq!(cx.support(), NeuronSet::full(*n));
        assert!(codewheel_core::enumerate::is_connected(cx));
        // antichain
        let f = cx.facets();
        for i in 0..f.len() {
            for j in 0..f.len() {
                if i != j {
                    assert!(!f[i].is_subset(f[j]));
                }
            }
        }
    }
}

/// Two runs over the same complexes produce identical JSON, timing aside.
#[test]
fn classification_is_deterministic() {
    let complexes = enumerate_connected(6, 4..=4, None).unwrap();
    let opts = ClassifyOptions::default();
    let zero_ms = |mut rs: Vec<ClassificationRecord>| {
        for r in &mut rs {
            r.ms = 0;
        }
        rs
    };
    let a = zero_ms(classify_complexes(&complexes, &opts).unwrap());
    let b = zero_ms(classify_complexes(&complexes, &opts).unwrap());
    let mut buf_a = Vec::new();
    let mut buf_b = Vec::new();
    write_records_jsonl(&mut buf_a, &a).unwrap();
    write_records_jsonl(&mut buf_b, &b).unwrap();
    assert_eq!(buf_a, buf_b, "classification output must be byte-identical");
    // and the JSONL round-trips
    let back = read_records_jsonl(buf_a.as_slice()).unwrap();
    assert_eq!(back.len(), a.len());
}

/// The verification mode agrees with the plain run on the 4-facet column:
/// brute-force twins match the pruned finders at n = 6, and no
/// max-intersection-complete code carries a wheel.
#[test]
fn four_facet_column_passes_brute_force_verification() {
    let complexes = enumerate_connected(6, 4..=4, None).unwrap();
    let opts = ClassifyOptions {
        brute_force_check: true,
        ..ClassifyOptions::default()
    };
    let records = classify_complexes(&complexes, &opts).unwrap();
    let table = Table1::tally(&records);
    assert_eq!(table.reducible_or_decomposable[0], 203);
    assert_eq!(table.max_intersection_complete[0], 4);
    assert_eq!(table.sprocket_only[0], 2);
    assert_eq!(table.wheel_frame_and_sprocket[0], 1);
    assert_eq!(table.unknown[0], 0);
}

/// Wheel statuses always carry a matching certificate; reducible statuses
/// always carry reduction or decomposition evidence; row sums match totals.
#[test]
fn record_invariants_on_five_facet_column() {
    use codewheel_core::pipeline::Certificate;
    let complexes = enumerate_connected(6, 5..=5, None).unwrap();
    let records = classify_complexes(&complexes, &ClassifyOptions::default()).unwrap();
    for r in &records {
        match r.status {
            Status::Wheel => {
                assert!(r.wheel_profile.any());
                assert!(r
                    .certificates
                    .iter()
                    .any(|c| matches!(
                        c,
                        Certificate::Sprocket(_)
                            | Certificate::WireWheel(_)
                            | Certificate::WheelFrame(_)
                    )));
            }
            Status::ReducibleOrDecomposable => {
                assert!(r.certificates.iter().any(|c| matches!(
                    c,
                    Certificate::Reduction { .. } | Certificate::Decomposition(_)
                )));
            }
            _ => assert!(!r.wheel_profile.any()),
        }
    }
    let t = Table1::tally(&records);
    let col = 1; // five facets
    let row_sum = t.reducible_or_decomposable[col]
        + t.max_intersection_complete[col]
        + t.wheel_frame_only[col]
        + t.sprocket_only[col]
        + t.wheel_frame_and_sprocket[col]
        + t.wire_wheel_only[col]
        + t.other_wheel[col]
        + t.unknown[col];
    assert_eq!(row_sum, t.total[col]);
    assert_eq!(t.total[col], 691);
}
