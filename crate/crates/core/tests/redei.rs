use ordo_core::graph::{pairs, Tournament};
use ordo_core::redei::{
    count_hamiltonian_paths_oracle, redei_hamiltonian_path, redei_hamiltonian_path_counted,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn random_tournaments_up_to_100() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e5e);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=100);
        let t = Tournament::random(n, &mut rng);
        let path = redei_hamiltonian_path(&t);
        assert!(
            path.is_hamiltonian_in(t.digraph()),
            "n={n}: {:?}",
            path.vertices()
        );
    }
}

#[test]
fn every_tournament_up_to_5_has_a_path() {
    for n in 0..=5 {
        for index in 0..1u64 << pairs(n) {
            let t = Tournament::from_index(n, index);
            assert!(redei_hamiltonian_path(&t).is_hamiltonian_in(t.digraph()));
            if n >= 1 {
                assert!(count_hamiltonian_paths_oracle(&t).unwrap() >= 1);
            }
        }
    }
}

#[test]
fn path_counts_are_odd() {
    // Exhaustive up to 5 vertices, sampled for 6 and 7.
    for n in 1..=5 {
        for index in 0..1u64 << pairs(n) {
            let count = count_hamiltonian_paths_oracle(&Tournament::from_index(n, index)).unwrap();
            assert_eq!(count % 2, 1, "n={n}, index={index}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in 6..=7 {
        for _ in 0..200 {
            let t = Tournament::random(n, &mut rng);
            assert_eq!(count_hamiltonian_paths_oracle(&t).unwrap() % 2, 1);
        }
    }
}

#[test]
fn quadratic_query_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    let n = 1000;
    for t in [
        Tournament::random(n, &mut rng),
        Tournament::transitive(n),
        Tournament::from_fn(n, |u, v| v == u + 1 || u > v + 1),
    ] {
        let (path, queries) = redei_hamiltonian_path_counted(&t);
        assert!(path.is_hamiltonian_in(t.digraph()));
        assert!(queries <= n * n, "{queries} queries");
    }
}

#[test]
fn oracle_guard() {
    assert!(count_hamiltonian_paths_oracle(&Tournament::transitive(9)).is_err());
}
