use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tropgrass::exactalg::{plucker_ideal, Field};
use tropgrass::g36::{build_g36, orbit_of, vertex_index, FacetClass};
use tropgrass::rat::rat;
use tropgrass::treespace::*;

#[test]
fn tree_space_is_a_wedge_of_spheres() {
    // reduced Euler characteristic of a wedge of (n-2)! spheres of dimension n-4
    for n in 4..=8usize {
        let k = tn_complex(n).unwrap();
        let count: i64 = (1..=n as i64 - 2).product();
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(k.reduced_euler_characteristic(), sign * count, "n = {n}");
    }
}

#[test]
fn g36_facets_are_closed_under_relabelling() {
    let g = build_g36();
    let index = vertex_index();
    let mut total = 0;
    for class in FacetClass::ALL {
        let orbit = orbit_of(&class.representative_vertices());
        for facet in &orbit {
            let f: Vec<usize> = facet.iter().map(|v| index[v]).collect();
            assert!(g.contains_face(&f), "{class}");
        }
        total += orbit.len();
    }
    assert_eq!(total, g.maximal_faces().len());
}

#[test]
fn tree_weights_are_monomial_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    let ideals: Vec<_> = (4..=7)
        .map(|n| plucker_ideal(2, n, Field::Rational).unwrap())
        .collect();
    for k in 0..100 {
        let n = 4 + k % 4;
        let t = random_trivalent_tree(n, &mut rng).unwrap();
        assert!(
            ideals[n - 4]
                .is_monomial_free(&tree_weight(&t))
                .unwrap()
                .free,
            "{}",
            t.to_newick()
        );
    }
}

fn cherries(t: &SemiLabeledTree) -> usize {
    t.split_set()
        .iter()
        .map(|s| {
            let (a, b) = s.sides();
            usize::from(a.len() == 2) + usize::from(b.len() == 2)
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monomial_free_iff_four_point(w in prop::collection::vec(-3i64..=3, 10)) {
        let d = PairDissimilarity::from_fn(5, {
            let mut it = w.iter();
            move |_, _| rat(*it.next().unwrap())
        });
        let ideal = plucker_ideal(2, 5, Field::Rational).unwrap();
        let free = ideal.is_monomial_free(d.values()).unwrap().free;
        prop_assert_eq!(free, d.four_point_violation().is_none());
    }

    #[test]
    fn caterpillars_have_two_cherries(seed in any::<u64>(), n in 5usize..=9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_trivalent_tree(n, &mut rng).unwrap();
        prop_assert_eq!(t.is_caterpillar().unwrap(), cherries(&t) == 2);
    }
}
