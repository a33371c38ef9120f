use affchar_cli::cache::{Cache, QueryKey};
use affchar_cli::commands::{character, kostka_matrix, Method};
use affchar_cli::json::canonical;
use affchar_core::Execution;
use proptest::prelude::*;

fn query() -> impl Strategy<Value = (usize, u64, Vec<i64>, i64, i64, bool)> {
    (1usize..=2, 1u64..=3)
        .prop_flat_map(|(rank, level)| {
            (
                Just(rank),
                Just(level),
                proptest::collection::vec(0i64..=level as i64, rank).prop_filter("integrable", move |w| {
                    w.iter().sum::<i64>() <= level as i64
                }),
                0i64..=3,
                0i64..=3,
                any::<bool>(),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cache_hits_match_cold_documents((rank, level, w, d1, d2, oracle) in query()) {
        let method = if oracle { Method::Freudenthal } else { Method::Fermionic };
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path());
        let exec = Execution::Sequential;
        for d in [d1, d2, d1] {
            let cold = character(rank, level, &w, d, method, None, exec).unwrap();
            let warm = character(rank, level, &w, d, method, Some(&cache), exec).unwrap();
            prop_assert_eq!(canonical(&cold.document), canonical(&warm.document));
        }
    }

    #[test]
    fn kostka_matrix_cache_round_trip(rank in 1usize..=3, t in 0u64..=4, class_seed in 0u64..4, invert in any::<bool>()) {
        let class = class_seed % (rank as u64 + 1);
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(dir.path());
        let exec = Execution::Sequential;
        let cold = kostka_matrix(rank, t, class, invert, None, exec).unwrap();
        let first = kostka_matrix(rank, t, class, invert, Some(&cache), exec).unwrap();
        let hit = kostka_matrix(rank, t, class, invert, Some(&cache), exec).unwrap();
        prop_assert_eq!(canonical(&cold.document), canonical(&first.document));
        prop_assert_eq!(canonical(&cold.document), canonical(&hit.document));
    }
}

#[test]
fn concurrent_writers_never_tear_entries() {
    let dir = tempfile::tempdir().unwrap();
    let key = QueryKey::new("kostka-matrix", 3).option("max_threshold", 4u64).option("class", 0u64).option("invert", false);
    let doc = kostka_matrix(3, 4, 0, false, None, Execution::Sequential).unwrap().document;
    std::thread::scope(|s| {
        for _ in 0..8 {
            s.spawn(|| {
                let cache = Cache::at(dir.path());
                for _ in 0..20 {
                    cache.store(&key, &doc).unwrap();
                    if let Some(read) = cache.load(&key) {
                        assert_eq!(canonical(&read), canonical(&doc));
                    }
                }
            });
        }
    });
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}
