use itertools::Itertools;
use num_bigint::BigUint;
use ordo_core::graph::{has_clique, has_independent_set, EdgeColoring};
use ordo_core::ramsey::{
    andrasfai_graph, collect_bounds, erdos_szekeres_bound, erdos_triangle_multicolor_bound,
    exhaustive_ramsey_check, k17_mod3_coloring, known_value, known_values,
    multicolor_multinomial_bound, recurrence_upper_bound, verify_coloring, ColoringVerdict,
    MulticolorSpec,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn spec(sizes: &[usize]) -> MulticolorSpec {
    MulticolorSpec::new(sizes.to_vec()).unwrap()
}

#[test]
fn bounds_are_symmetric_and_ordered() {
    for m in 1..=10 {
        for k in 1..=10 {
            let rec = recurrence_upper_bound(m, k).unwrap();
            let es = erdos_szekeres_bound(m, k).unwrap();
            assert_eq!(rec, recurrence_upper_bound(k, m).unwrap());
            assert_eq!(es, erdos_szekeres_bound(k, m).unwrap());
            assert!(rec <= es, "R({m},{k}): {rec} > {es}");
            for b in collect_bounds(m, k).unwrap() {
                if let (Some(lo), Some(hi)) = (&b.lower, &b.upper) {
                    assert!(lo <= hi);
                }
            }
        }
    }
}

#[test]
fn recurrence_dominates_table() {
    let entries: Vec<_> = known_values().collect();
    assert_eq!(entries.len(), 36);
    for ((m, k), value) in entries {
        assert_eq!(known_value(k, m).unwrap(), value);
        assert!(recurrence_upper_bound(m, k).unwrap() >= BigUint::from(value.lo()));
        assert!(value.lo() <= value.hi());
    }
}

#[test]
fn triangle_column_bounds() {
    for k in 3..=10usize {
        let v = known_value(3, k).unwrap();
        assert!(3 * (k as u32 - 1) <= v.lo(), "R(3,{k})");
        assert!(v.hi() <= (k * (k + 1) / 2) as u32, "R(3,{k})");
    }
}

#[test]
fn andrasfai_certifies_lower_bounds() {
    for k in 1..=5 {
        let g = andrasfai_graph(k).unwrap();
        assert_eq!(g.vertex_count(), 3 * k - 1);
        assert!(
            has_clique(&g, 3).is_none(),
            "H_{} has a triangle",
            3 * k - 1
        );
        assert!(has_independent_set(&g, k + 1).is_none());
        assert!(has_independent_set(&g, k).is_some());
    }
}

#[test]
fn k17_has_triangles_in_every_colour() {
    let c = k17_mod3_coloring();
    assert!(matches!(
        verify_coloring(&c, &spec(&[3, 3, 3])),
        Ok(ColoringVerdict::Monochromatic { color: 0, .. })
    ));
    for color in 0..3 {
        assert!(has_clique(&c.color_class(color), 3).is_some());
    }
}

#[test]
fn small_exact_values() {
    let five = exhaustive_ramsey_check(3, 3, 5).unwrap();
    assert!(!five.holds);
    assert_eq!(
        verify_coloring(&five.counterexample.unwrap(), &spec(&[3, 3])),
        Ok(ColoringVerdict::Good)
    );
    assert!(exhaustive_ramsey_check(3, 3, 6).unwrap().holds);
    let eight = exhaustive_ramsey_check(3, 4, 8).unwrap();
    assert!(!eight.holds);
    assert_eq!(
        verify_coloring(&eight.counterexample.unwrap(), &spec(&[3, 4])),
        Ok(ColoringVerdict::Good)
    );
}

#[test]
fn named_bound_values() {
    assert_eq!(recurrence_upper_bound(3, 4).unwrap(), 9u32.into());
    assert_eq!(erdos_szekeres_bound(3, 4).unwrap(), 10u32.into());
    assert_eq!(erdos_triangle_multicolor_bound(2).unwrap(), 6u32.into());
    assert_eq!(erdos_triangle_multicolor_bound(3).unwrap(), 17u32.into());
    assert_eq!(multicolor_multinomial_bound(&spec(&[3, 3])), 6u32.into());
}

/// Does any colour class contain its forbidden clique? Plain subset scan.
fn brute_bad(c: &EdgeColoring, sizes: &[usize]) -> bool {
    sizes.iter().enumerate().any(|(color, &size)| {
        (0..c.vertex_count()).combinations(size).any(|set| {
            set.iter()
                .tuple_combinations()
                .all(|(&u, &v)| c.color(u, v) == color)
        })
    })
}

proptest! {
    #[test]
    fn verify_matches_subset_scan(
        n in 2usize..9,
        sizes in proptest::collection::vec(2usize..5, 2..4),
        seed in any::<u64>(),
    ) {
        let colors = sizes.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = EdgeColoring::from_fn(n, colors, |_, _| rng.gen_range(0..colors)).unwrap();
        let verdict = verify_coloring(&c, &spec(&sizes)).unwrap();
        prop_assert_eq!(verdict != ColoringVerdict::Good, brute_bad(&c, &sizes));
        if let ColoringVerdict::Monochromatic { color, vertices } = verdict {
            prop_assert_eq!(vertices.len(), sizes[color]);
            for (u, v) in vertices.iter().tuple_combinations() {
                prop_assert_eq!(c.color(*u, *v), color);
            }
        }
    }
}
