use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tropgrass::g36::{bipyramid, facet_cone_sample, orbit_of, sum_of_vertices, FacetClass};
use tropgrass::rat::Rat;
use tropgrass::subsets::permutations;
use tropgrass::treespace::{
    additive_linkage, random_trivalent_tree, tree_to_plucker, PairDissimilarity,
};
use tropgrass::troplin::*;
use tropgrass::PlueckerVector;

fn sample_plane(class: FacetClass) -> TropicalPlane {
    TropicalPlane::new(PlueckerVector::from_rats(3, 6, facet_cone_sample(class)).unwrap()).unwrap()
}

#[test]
fn sagbi_sample_has_the_listed_type() {
    let ty = sample_plane(FacetClass::EEFF1).plane_type().unwrap();
    assert_eq!(ty.len(), 28);
    assert_eq!(ty, full_type_g36(&SAGBI_TYPE));
}

#[test]
fn bipyramid_tetrahedra_share_the_listed_type() {
    let (fs, gs) = bipyramid([[0, 1], [2, 3], [4, 5]]);
    let expected = full_type_g36(&BIPYRAMID_TYPE);
    assert_eq!(expected.len(), 28);
    for skip in 0..3 {
        let mut tet: Vec<_> = gs.to_vec();
        tet.extend(
            fs.iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, f)| *f),
        );
        let w = PlueckerVector::from_rats(3, 6, sum_of_vertices(&tet)).unwrap();
        assert_eq!(
            TropicalPlane::new(w).unwrap().plane_type().unwrap(),
            expected
        );
    }
    assert_eq!(
        sample_plane(FacetClass::FFGG).plane_type().unwrap(),
        expected
    );
}

#[test]
fn eeee_type_appears_in_its_orbit() {
    let expected = full_type_g36(&EEEE_TYPE);
    assert_eq!(expected.len(), 27);
    assert!(expected.iter().all(|p| !is_bounded_face(p)));
    let rep = FacetClass::EEEE.representative_vertices();
    let hits = orbit_of(&rep)
        .into_iter()
        .filter(|tet| {
            let w = PlueckerVector::from_rats(3, 6, sum_of_vertices(tet)).unwrap();
            TropicalPlane::new(w).unwrap().plane_type().unwrap() == expected
        })
        .count();
    assert!(hits >= 1);
}

#[test]
fn facet_counts_of_all_classes() {
    for class in FacetClass::ALL {
        let plane = sample_plane(class);
        let faces = plane.maximal_faces().unwrap();
        let want = if class == FacetClass::EEEE { 27 } else { 28 };
        assert_eq!(faces.len(), want, "{class}");
        let bounded = faces
            .iter()
            .filter(|f| is_bounded_face(&f.partition))
            .count();
        assert_eq!(
            bounded,
            if class == FacetClass::EEEE { 0 } else { 1 },
            "{class}"
        );
        for f in &faces {
            assert!(plane.contains(&f.interior_point).unwrap());
            assert_eq!(f.partition.len(), 3);
        }
    }
}

#[test]
fn types_follow_relabelling() {
    let w = facet_cone_sample(FacetClass::EEFG);
    let base = TropicalPlane::new(PlueckerVector::from_rats(3, 6, w.clone()).unwrap()).unwrap();
    let ty = base.plane_type().unwrap();
    for perm in permutations(6).into_iter().step_by(97) {
        let moved = PlueckerVector::from_fn(3, 6, |s| {
            let pre: Vec<usize> = s
                .iter()
                .map(|&i| perm.iter().position(|&p| p == i).unwrap())
                .collect();
            base.plucker().at(&pre).clone()
        })
        .unwrap();
        let got = TropicalPlane::new(moved).unwrap().plane_type().unwrap();
        let want: BTreeSet<DPartition> = ty.iter().map(|p| p.relabeled(&perm)).collect();
        assert_eq!(got, want);
    }
}

#[test]
fn small_planes_have_no_bounded_faces() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..3 {
        let t = random_trivalent_tree(5, &mut rng).unwrap();
        let dual = TropicalPlane::new(dual(&tree_to_plucker(&t))).unwrap();
        assert_eq!(dual.d(), 3);
        let ty = dual.plane_type().unwrap();
        assert!(!ty.is_empty());
        assert!(ty.iter().all(|p| !is_bounded_face(p)));
    }
}

#[test]
fn dual_type_of_three_cherries() {
    // No formula relates the dual type to the tree type yet; only block
    // counts and boundedness are checked.
    let w = PlueckerVector::sum_of_units(2, 6, &["12", "34", "56"]).unwrap();
    let ty = TropicalPlane::new(dual(&w)).unwrap().plane_type().unwrap();
    assert!(ty.iter().all(|p| p.len() == 4));
    assert!(ty.iter().all(|p| !is_bounded_face(p)));
}

#[test]
fn g36_samples_round_trip() {
    for class in FacetClass::ALL {
        let plane = sample_plane(class);
        let w = plane.plucker();
        let got = reconstruct_plucker(
            |x| plane.violated_circuits(x).unwrap(),
            3,
            6,
            &ReconstructBound::of(w).unwrap(),
        )
        .unwrap();
        assert!(got.eq_mod_phi(w).unwrap(), "{class}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tree_planes_match_linkage(seed in any::<u64>(), n in 4usize..=7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_trivalent_tree(n, &mut rng).unwrap();
        let w = tree_to_plucker(&t);
        let rebuilt = additive_linkage(&PairDissimilarity::from_plucker_vector(&w).unwrap()).unwrap();
        let mut expected: BTreeSet<DPartition> = rebuilt
            .split_set()
            .iter()
            .map(|s| {
                let (a, b) = s.sides();
                DPartition::new(n, vec![a, b]).unwrap()
            })
            .collect();
        for i in 0..n {
            expected.insert(DPartition::new(n, vec![vec![i], (0..n).filter(|&j| j != i).collect()]).unwrap());
        }
        let plane = TropicalPlane::new(w).unwrap();
        prop_assert_eq!(plane.plane_type().unwrap(), expected);
    }

    #[test]
    fn tree_reconstruction_round_trip(seed in any::<u64>(), n in 4usize..=7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = tree_to_plucker(&random_trivalent_tree(n, &mut rng).unwrap());
        let plane = TropicalPlane::new(w.clone()).unwrap();
        let got = reconstruct_plucker(
            |x| plane.violated_circuits(x).unwrap(),
            2,
            n,
            &ReconstructBound::of(&w).unwrap(),
        )
        .unwrap();
        prop_assert!(got.eq_mod_phi(&w).unwrap());
    }

    #[test]
    fn membership_ignores_the_all_ones_direction(
        seed in any::<u64>(),
        x in prop::collection::vec(-40i64..40, 6),
        c in -30i64..30,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let plane = TropicalPlane::new(tree_to_plucker(&random_trivalent_tree(6, &mut rng).unwrap())).unwrap();
        let x: Vec<Rat> = x.into_iter().map(|v| Rat::from_integer(v.into()) / Rat::from_integer(4.into())).collect();
        let y: Vec<Rat> = x.iter().map(|v| v + Rat::from_integer(c.into())).collect();
        prop_assert_eq!(plane.violated_circuits(&x).unwrap(), plane.violated_circuits(&y).unwrap());
    }
}
