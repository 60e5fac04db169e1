//! Property tests for the set-algebra identities and detector round-trips.

use proptest::prelude::*;

use codewheel_core::code::Code;
use codewheel_core::obstructions::{
    mandatory_faces, max_intersection_faces, minimal_code,
};
use codewheel_core::reduce::{find_decomposition, redundant_neuron_witness, reduce};
use codewheel_core::set::NeuronSet;
use codewheel_core::wheels::{
    check_sprocket, check_wheel_frame, check_wire_wheel, find_sprocket, find_wheel_frame,
    find_wire_wheel,
};

fn arb_code(max_n: u8) -> impl Strategy<Value = Code> {
    (1u8..=max_n).prop_flat_map(move |n| {
        let full = (1u32 << n) - 1;
        proptest::collection::vec(0..=full as u16, 0..12).prop_map(move |masks| {
            Code::new(n, masks.into_iter().map(NeuronSet::from_bits)).unwrap()
        })
    })
}

fn arb_subset(n: u8) -> impl Strategy<Value = NeuronSet> {
    let full = (1u32 << n) - 1;
    (0..=full as u16).prop_map(NeuronSet::from_bits)
}

proptest! {
    #[test]
    fn trunk_of_union_is_intersection_of_trunks(code in arb_code(7), a in 0u16..128, b in 0u16..128) {
        let full = NeuronSet::full(code.n());
        let a = NeuronSet::from_bits(a).intersection(full);
        let b = NeuronSet::from_bits(b).intersection(full);
        let lhs = code.trunk(a | b);
        let ta = code.trunk(a);
        let rhs: Vec<NeuronSet> = ta
            .into_iter()
            .filter(|w| b.is_subset(*w))
            .collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn face_iff_nonempty_trunk(code in arb_code(7), sigma in 0u16..128) {
        let sigma = NeuronSet::from_bits(sigma).intersection(NeuronSet::full(code.n()));
        let cx = code.neural_complex();
        prop_assert_eq!(cx.is_face(sigma), !code.trunk(sigma).is_empty());
    }

    #[test]
    fn link_composes(code in arb_code(7), seed in any::<u64>()) {
        let cx = code.neural_complex();
        // pick a facet-driven pair σ, ω with σ∪ω a face
        let facets = cx.facets();
        prop_assume!(!facets.is_empty());
        let f = facets[(seed as usize) % facets.len()];
        prop_assume!(!f.is_empty());
        let subs = f.subsets();
        let sigma = subs[(seed >> 8) as usize % subs.len()];
        let rest = (f - sigma).subsets();
        let omega = rest[(seed >> 24) as usize % rest.len()];
        let via_union = cx.link(sigma | omega).unwrap();
        let nested = cx.link(sigma).unwrap().link(omega).unwrap();
        prop_assert_eq!(via_union, nested);
    }

    #[test]
    fn restrict_is_idempotent(code in arb_code(7), chi in 0u16..128) {
        let chi = NeuronSet::from_bits(chi).intersection(NeuronSet::full(code.n()));
        let once = code.restrict(chi);
        prop_assert_eq!(once.restrict(chi), once);
    }

    #[test]
    fn singleton_cover_is_trunk_containment(code in arb_code(7), phi in 0u16..128, psi in 0u16..128) {
        let full = NeuronSet::full(code.n());
        let phi = NeuronSet::from_bits(phi).intersection(full);
        let psi = NeuronSet::from_bits(psi).intersection(full);
        let covered = code.trunk_covered_by(phi, &[psi]);
        let tk_phi = code.trunk(phi);
        let tk_psi = code.trunk(psi);
        let subset = tk_phi.iter().all(|w| tk_psi.contains(w));
        prop_assert_eq!(covered, subset);
    }

    #[test]
    fn mandatory_faces_are_max_intersections(code in arb_code(5)) {
        let man = mandatory_faces(&code).unwrap();
        let maxint = max_intersection_faces(&code);
        prop_assert!(man.iter().all(|s| maxint.contains(s)));
    }

    #[test]
    fn minimal_code_round_trip(code in arb_code(5)) {
        let cx = code.neural_complex();
        let mc = minimal_code(&cx).unwrap();
        // same complex, no local obstruction by construction
        prop_assert_eq!(mc.neural_complex(), cx);
        let (obstructed, _) = codewheel_core::obstructions::has_local_obstruction(&mc).unwrap();
        prop_assert!(!obstructed);
    }

    #[test]
    fn finders_round_trip_through_checkers(code in arb_code(5)) {
        if let Some(c) = find_sprocket(&code) {
            prop_assert!(check_sprocket(&code, &c));
        }
        if let Some(c) = find_wire_wheel(&code) {
            prop_assert!(check_wire_wheel(&code, &c));
        }
        if let Some(c) = find_wheel_frame(&code) {
            prop_assert!(check_wheel_frame(&code, &c));
        }
    }

    #[test]
    fn reduce_idempotent_and_complete(code in arb_code(6)) {
        let (r1, _) = reduce(&code);
        let (r2, log2) = reduce(&r1);
        prop_assert_eq!(&r1, &r2);
        prop_assert!(log2.is_empty());
        for i in 1..=r1.n() {
            prop_assert!(redundant_neuron_witness(&r1, i).is_none());
        }
    }

    #[test]
    fn decomposition_is_sound(code in arb_code(6)) {
        if let Some(d) = find_decomposition(&code) {
            prop_assert!(!d.phi.is_empty());
            prop_assert!(!d.phi.intersects(d.psi));
            prop_assert!(code.contains(d.psi));
            prop_assert!(d.phi != NeuronSet::full(code.n()));
            for &c in code.words() {
                if c.intersects(d.phi) {
                    prop_assert_eq!(c - d.phi, d.psi);
                }
            }
        }
    }

    #[test]
    fn subsets_cover_powerset(s in arb_subset(10)) {
        let subs = s.subsets();
        prop_assert_eq!(subs.len(), 1usize << s.len());
        prop_assert!(subs.iter().all(|t| t.is_subset(s)));
        prop_assert!(subs.windows(2).all(|w| w[0] < w[1]));
    }
}
