//! Randomized structural properties, complementing the exhaustive oracle.

use proptest::prelude::*;

use genci_core::homology::boundary_matrix;
use genci_core::input::parse_input;
use genci_core::set::minimal_members;
use genci_core::{
    reduced_betti, FieldSpec, InputDocument, SimplicialComplex, SupportFamily, VertexSet,
};

/// A valid support family on `n` vertices, built by reducing an arbitrary
/// selection of >= 2-subsets to its inclusion-minimal members.
fn family_strategy(n: usize) -> BoxedStrategy<SupportFamily> {
    let candidates: Vec<VertexSet> = VertexSet::full(n)
        .subsets()
        .filter(|s| s.len() >= 2)
        .collect();
    if candidates.is_empty() {
        return Just(SupportFamily::new(n, []).unwrap()).boxed();
    }
    proptest::collection::vec(0..candidates.len(), 0..=2 * n)
        .prop_map(move |picks| {
            let chosen: Vec<VertexSet> = picks.iter().map(|&k| candidates[k]).collect();
            SupportFamily::new(n, minimal_members(chosen))
                .expect("minimal members form an antichain")
        })
        .boxed()
}

fn small_family() -> impl Strategy<Value = SupportFamily> {
    (1usize..=7).prop_flat_map(family_strategy)
}

fn permute(delta: &SimplicialComplex, perm: &[usize]) -> SimplicialComplex {
    let facets = delta.facets().iter().map(|f| {
        f.iter().map(|v| perm[v - 1]).collect::<VertexSet>()
    });
    SimplicialComplex::from_facets(delta.n(), facets, false).expect("relabeling preserves validity")
}

proptest! {
    #[test]
    fn family_complex_round_trip(family in small_family()) {
        let back = family.complex().minimal_nonfaces();
        prop_assert_eq!(back.members(), family.members());
    }

    #[test]
    fn boundary_composition_vanishes(family in small_family()) {
        let delta = family.complex();
        for k in 0..=delta.dim() {
            let dk = boundary_matrix(&delta, k).unwrap();
            let dk1 = boundary_matrix(&delta, k - 1).unwrap();
            prop_assert!(dk1.mul(&dk).is_zero(), "d_{} . d_{} != 0", k - 1, k);
        }
    }

    #[test]
    fn cones_are_acyclic(family in small_family()) {
        // adjoin a fresh apex contained in every facet
        let n = family.complex().n();
        let apex = n + 1;
        let facets = family
            .complex()
            .facets()
            .iter()
            .map(|f| f.with(apex))
            .collect::<Vec<_>>();
        let cone = SimplicialComplex::from_facets(apex, facets, false).unwrap();
        for field in [FieldSpec::Rationals, FieldSpec::PrimeField(3)] {
            prop_assert!(reduced_betti(&cone, field).is_zero());
        }
    }

    #[test]
    fn betti_numbers_are_label_invariant(family in small_family(), seed in any::<u64>()) {
        let delta = family.complex();
        let n = delta.n();
        // a seed-derived permutation of 1..=n
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let relabeled = permute(&delta, &perm);
        for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
            prop_assert_eq!(
                reduced_betti(&delta, field),
                reduced_betti(&relabeled, field)
            );
        }
    }

    #[test]
    fn documents_round_trip_through_text(family in small_family()) {
        let n = family.n();
        let as_generators = InputDocument::from_generators(n, family.members().to_vec());
        let as_facets = InputDocument::from_facets(n, family.complex().facets().to_vec());
        for doc in [as_generators, as_facets] {
            if doc.generators.as_ref().is_some_and(|g| g.is_empty()) {
                continue; // an empty generator list prints no terms
            }
            prop_assert_eq!(parse_input(&doc.to_text()).unwrap(), doc.clone());
            let json = serde_json::to_string(&doc).unwrap();
            prop_assert_eq!(parse_input(&json).unwrap(), doc);
        }
    }
}
