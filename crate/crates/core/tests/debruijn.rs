use std::collections::BTreeSet;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use ordo_core::debruijn::{
    append_cache_record, count_hamiltonian_cycles, de_bruijn_graph, enumerate_hamiltonian_cycles,
    martin, max_disjoint_exact, max_disjoint_upper_bound, pairwise_arc_disjoint, read_cache,
    rotation_family, rotation_seed_search, sigma, CacheRecord, DBParams, DeBruijnWord,
    SeedSearchOptions,
};
use proptest::prelude::*;

const B32_CYCLES: [&str; 24] = [
    "0010211220",
    "0020122110",
    "0010221120",
    "0020112210",
    "0011021220",
    "0022012110",
    "0011022120",
    "0022011210",
    "0011202210",
    "0022101120",
    "0011210220",
    "0022120110",
    "0011220210",
    "0022110120",
    "0011221020",
    "0022112010",
    "0012022110",
    "0021011220",
    "0012110220",
    "0021220110",
    "0012202110",
    "0021101220",
    "0012211020",
    "0021122010",
];

const B52_BLOCK: [&str; 4] = [
    "00102112041422430332313440",
    "00203223012133140443424110",
    "00304334023244210114131220",
    "00401441034311320221242330",
];

fn p(n: usize, m: usize) -> DBParams {
    DBParams::new(n, m).unwrap()
}

fn all_seeds(params: DBParams) -> Vec<Vec<DeBruijnWord>> {
    let options = SeedSearchOptions {
        find_all: true,
        ..Default::default()
    };
    rotation_seed_search(params, &options, &mut |_, _| ControlFlow::Continue(()))
        .families
        .into_iter()
        .map(|f| f.members().to_vec())
        .collect()
}

#[test]
fn b32_enumeration_is_the_listed_set() {
    let found: BTreeSet<String> = enumerate_hamiltonian_cycles(p(3, 2))
        .unwrap()
        .iter()
        .map(DeBruijnWord::encode)
        .collect();
    let listed: BTreeSet<String> = B32_CYCLES.iter().map(|s| s.to_string()).collect();
    assert_eq!(found, listed);
}

#[test]
fn formula_matches_enumeration() {
    for (n, m) in [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (2, 4), (3, 3)] {
        let params = p(n, m);
        let cycles = enumerate_hamiltonian_cycles(params).unwrap();
        assert_eq!(
            BigUint::from(cycles.len()),
            count_hamiltonian_cycles(params),
            "B({n},{m})"
        );
    }
}

#[test]
fn codec_round_trip_and_loops() {
    for (n, m) in [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2)] {
        let params = p(n, m);
        let graph = de_bruijn_graph(params);
        assert_eq!(graph.loop_count(), n);
        for w in enumerate_hamiltonian_cycles(params).unwrap() {
            let text = w.encode();
            assert_eq!(DeBruijnWord::decode(&text, params).unwrap(), w);
            assert_eq!(DeBruijnWord::decode(&text, params).unwrap().encode(), text);
            let arcs = w.arcs();
            assert_eq!(arcs.len(), params.vertex_count());
            assert!(arcs.iter().all(|(u, v)| u != v && graph.has_arc(u, v)));
        }
    }
}

#[test]
fn sigma_is_an_automorphism() {
    for (n, m) in [(3, 2), (4, 2), (2, 3)] {
        let params = p(n, m);
        let cycles: BTreeSet<DeBruijnWord> = enumerate_hamiltonian_cycles(params)
            .unwrap()
            .into_iter()
            .collect();
        for w in &cycles {
            assert!(cycles.contains(&sigma(w)));
            let mut image = w.clone();
            for _ in 0..n - 1 {
                image = sigma(&image);
            }
            assert_eq!(&image, w);
        }
    }
}

#[test]
fn b52_block_is_a_disjoint_rotation_family() {
    let seed = DeBruijnWord::parse(B52_BLOCK[0]).unwrap();
    let family: Vec<String> = rotation_family(&seed)
        .iter()
        .map(DeBruijnWord::encode)
        .collect();
    assert_eq!(family, B52_BLOCK);
    assert!(pairwise_arc_disjoint(&rotation_family(&seed))
        .unwrap()
        .is_disjoint());
}

#[test]
fn martin_is_not_a_seed() {
    for (n, m) in [(3, 2), (3, 3), (4, 2)] {
        let w = martin(p(n, m));
        assert_eq!(w.encode().len(), p(n, m).linear_len());
        assert!(
            !pairwise_arc_disjoint(&rotation_family(&w))
                .unwrap()
                .is_disjoint(),
            "B({n},{m})"
        );
    }
}

#[test]
fn seed_families_are_disjoint_and_full() {
    for (n, m) in [(3, 2), (4, 2), (3, 3)] {
        let families = all_seeds(p(n, m));
        assert!(!families.is_empty());
        for members in families {
            assert_eq!(members.len(), max_disjoint_upper_bound(n).unwrap());
            assert!(pairwise_arc_disjoint(&members).unwrap().is_disjoint());
        }
    }
}

#[test]
fn listed_seeds_are_found() {
    for (n, m, seeds) in [
        (3, 2, &["0011220210", "0021011220"][..]),
        (4, 2, &["00102113230331220", "00102313033211220"][..]),
        (3, 3, &["00010021011022202012111221200"][..]),
    ] {
        let families = all_seeds(p(n, m));
        for s in seeds {
            let w = DeBruijnWord::decode(s, p(n, m)).unwrap();
            assert!(families.iter().any(|f| f.contains(&w)), "{s}");
        }
    }
}

#[test]
fn bond_ivanyi_small_cases() {
    for (n, m, expected) in [(3, 2, 2), (2, 3, 1), (2, 2, 1)] {
        let best = max_disjoint_exact(p(n, m)).unwrap();
        assert_eq!(best.size, expected);
        assert_eq!(best.size, max_disjoint_upper_bound(n).unwrap());
        assert!(best.size >= n / 2);
        assert!(pairwise_arc_disjoint(&best.witness).unwrap().is_disjoint());
    }
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("seeds.jsonl");
    assert!(read_cache(&path).unwrap().is_empty());
    let records: Vec<CacheRecord> = (0..3)
        .map(|i| CacheRecord {
            n: 4,
            m: 2,
            seed: "00102113230331220".into(),
            timestamp: 1_700_000_000 + i,
            nodes_explored: 71 * i,
        })
        .collect();
    for r in &records {
        append_cache_record(&path, r).unwrap();
    }
    assert_eq!(read_cache(&path).unwrap(), records);
}

proptest! {
    #[test]
    fn rotations_canonicalize_to_one_word(index in 0usize..24, shift in 0usize..9) {
        let w = DeBruijnWord::parse(B32_CYCLES[index]).unwrap();
        let mut letters = w.letters().to_vec();
        letters.rotate_left(shift);
        prop_assert_eq!(DeBruijnWord::from_cyclic(w.params(), letters).unwrap(), w);
    }

    #[test]
    fn single_letter_changes_are_rejected(index in 0usize..16, position in 0usize..16, bump in 1u8..4) {
        let params = p(4, 2);
        let cycles = enumerate_hamiltonian_cycles(params).unwrap();
        let w = &cycles[index * cycles.len() / 16];
        let mut letters = w.letters().to_vec();
        letters[position] = (letters[position] + bump) % 4;
        prop_assert!(DeBruijnWord::from_cyclic(params, letters).is_err());
    }
}
