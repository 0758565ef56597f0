use std::collections::BTreeSet;

use rectlab::bijections::elementary::{
    composition_of, compositions, k_class, nw_word, rect_of_composition, rect_of_nw_word, trivial_class,
};
use rectlab::bijections::tau;
use rectlab::patterns::Pattern;
use rectlab::universe::{enumerate_class, Mode};

const MAX_N: usize = 7;

fn words(n: usize) -> Vec<String> {
    (0u32..1 << (n - 1)).map(|m| (0..n - 1).map(|i| if m >> i & 1 == 1 { 'N' } else { 'W' }).collect()).collect()
}

#[test]
fn compositions_biject_with_the_weak_class() {
    for n in 1..=MAX_N {
        let class = enumerate_class(n, Mode::Weak, &[Pattern::TD, Pattern::TU]).unwrap();
        assert_eq!(class.len(), 1 << (n - 1));
        let images: BTreeSet<Vec<usize>> = class.iter().map(|d| composition_of(d).unwrap()).collect();
        assert_eq!(images.len(), class.len());
        for c in compositions(n) {
            let d = rect_of_composition(&c).unwrap();
            assert_eq!(composition_of(&d).unwrap(), c);
            assert!(images.contains(&c));
        }
    }
}

#[test]
fn nw_words_biject_with_the_class_in_both_modes() {
    for n in 1..=MAX_N {
        for mode in [Mode::Weak, Mode::Strong] {
            let class = enumerate_class(n, mode, &[Pattern::TD, Pattern::TR]).unwrap();
            assert_eq!(class.len(), 1 << (n - 1), "n={n} {mode:?}");
            let images: BTreeSet<String> = class.iter().map(|d| nw_word(d).unwrap()).collect();
            assert_eq!(images.len(), class.len());
        }
        for w in words(n) {
            let d = rect_of_nw_word(&w).unwrap();
            assert_eq!(d.n(), n);
            assert_eq!(nw_word(&d).unwrap(), w);
        }
    }
}

#[test]
fn k_class_and_trivial_class_fill_their_classes() {
    for n in 1..=MAX_N {
        for mode in [Mode::Weak, Mode::Strong] {
            let three = enumerate_class(n, mode, &[Pattern::TD, Pattern::TU, Pattern::TR]).unwrap();
            assert_eq!(three.len(), n);
            let ours: BTreeSet<_> = (0..n).map(|k| k_class(n, k).unwrap().strong_key()).collect();
            assert_eq!(ours, three.iter().map(|d| d.strong_key()).collect());
            let four = enumerate_class(n, mode, &[Pattern::TD, Pattern::TU, Pattern::TR, Pattern::TL]).unwrap();
            assert_eq!(four.len(), if n == 1 { 1 } else { 2 });
            let ours: BTreeSet<_> = trivial_class(n).unwrap().iter().map(|d| d.strong_key()).collect();
            assert_eq!(ours, four.iter().map(|d| d.strong_key()).collect());
        }
        for k in 0..n {
            let e = tau(&k_class(n, k).unwrap()).unwrap();
            let expected: Vec<u32> = (0..n as u32).map(|i| if (i as usize) < n - k { 0 } else { i }).collect();
            assert_eq!(e.values(), expected, "n={n} k={k}");
        }
    }
}
