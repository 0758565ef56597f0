use std::collections::{BTreeMap, BTreeSet};

use rectlab::universe::{all_compact, UniverseConfig};

#[test]
fn canonical_form_is_a_strong_class_invariant() {
    for n in 1..=6 {
        let all = all_compact(n, &UniverseConfig::default()).unwrap();
        let mut by_key: BTreeMap<_, BTreeSet<_>> = BTreeMap::new();
        for d in &all {
            let c = d.canonical();
            assert_eq!(c.canonical(), c);
            assert_eq!(c.strong_key(), d.strong_key());
            by_key.entry(d.strong_key()).or_default().insert(c);
        }
        assert!(by_key.values().all(|s| s.len() == 1), "n={n}");
    }
}
