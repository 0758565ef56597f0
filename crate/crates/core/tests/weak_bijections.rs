use std::collections::BTreeSet;

use rectlab::bijections::weak::{
    beta, delta, delta_direct, delta_inv, rect_of_tree, tau, tau_inv, tree_boxes, tree_of, BinaryTree,
};
use rectlab::invseq::{self, theta, InvSeq};
use rectlab::paths::enumerate_dyck;
use rectlab::patterns::{contains, Pattern};
use rectlab::rect::boxes_meet_diagonal;
use rectlab::universe::{enumerate_class, enumerate_weak, Mode};

/// Independent 213 test by brute force over triples.
fn has_213(p: &[u32]) -> bool {
    let n = p.len();
    (0..n).any(|i| (i + 1..n).any(|j| (j + 1..n).any(|k| p[j] < p[i] && p[i] < p[k])))
}

#[test]
fn tau_round_trips_on_weak_classes() {
    for n in 1..=7 {
        let class = enumerate_class(n, Mode::Weak, &[Pattern::TD]).unwrap();
        let mut images = BTreeSet::new();
        for d in &class {
            let e = tau(d).unwrap();
            assert!(e.values().windows(2).all(|w| w[0] <= w[1]));
            assert_eq!(tau_inv(&e).unwrap().weak_key(), d.weak_key(), "{d}");
            assert_eq!(delta(d).unwrap(), delta_direct(d).unwrap());
            images.insert(e);
        }
        assert_eq!(images.len(), class.len());
        let nondecreasing = invseq::enumerate_avoiding(n, &invseq::parse_patterns("10").unwrap()).unwrap();
        assert_eq!(images, nondecreasing.into_iter().collect::<BTreeSet<InvSeq>>());
    }
}

#[test]
fn delta_inverse_on_all_paths() {
    for s in 1..=8 {
        for p in enumerate_dyck(s).unwrap() {
            let d = delta_inv(&p).unwrap();
            assert!(!contains(&d, Pattern::TD));
            assert_eq!(delta(&d).unwrap(), p);
        }
    }
}

#[test]
fn binary_trees_give_diagonal_drawings() {
    for n in 1..=8 {
        let mut keys = BTreeSet::new();
        for t in BinaryTree::enumerate(n) {
            let (size, boxes) = tree_boxes(&t).unwrap();
            assert!(boxes_meet_diagonal(size, size, &boxes), "{t}");
            let d = rect_of_tree(&t).unwrap();
            assert_eq!(d.n(), n);
            assert!(!contains(&d, Pattern::TD));
            assert_eq!(tree_of(&d).unwrap(), t);
            keys.insert(d.weak_key());
        }
        assert_eq!(keys.len(), BinaryTree::enumerate(n).len());
    }
}

#[test]
fn beta_reads_td_as_213_on_weak_universe() {
    for n in 1..=6 {
        let weak = enumerate_weak(n).unwrap();
        let mut perms = BTreeSet::new();
        for d in &weak {
            let pi = beta(d);
            assert_eq!(contains(d, Pattern::TD), has_213(&pi), "{d}");
            let l = rectlab::bijections::weak::l_labels_in_sw_ne(d);
            assert_eq!(theta(&pi).unwrap(), l);
            perms.insert(pi);
        }
        assert_eq!(perms.len(), weak.len());
    }
}
