use std::collections::BTreeSet;

use rectlab::bijections::strong::{sigma, sigma_inv, tau6, tau6_inv, tau7, tau7_inv, tau8, tau8_inv, tree_t, yan_lin};
use rectlab::gentree::{Realization, Rectangulations, Sequences, Tree};
use rectlab::invseq::{self, class_check, minimal_inversion_tree, AreaClass, InvSeq};
use rectlab::patterns::Pattern;
use rectlab::universe::{enumerate_class, Mode};

const MAX_N: usize = 7;

fn class(n: usize, p: Pattern) -> Vec<rectlab::RectDrawing> {
    enumerate_class(n, Mode::Strong, &[p]).unwrap()
}

fn seqs(n: usize, patterns: &str) -> BTreeSet<InvSeq> {
    invseq::enumerate_avoiding(n, &invseq::parse_patterns(patterns).unwrap()).unwrap().into_iter().collect()
}

#[test]
fn tau_family_is_a_bijection_onto_the_area_classes() {
    for n in 1..=MAX_N {
        let drawings = class(n, Pattern::TD);
        let (mut i7, mut i8, mut i6) = (BTreeSet::new(), BTreeSet::new(), BTreeSet::new());
        for d in &drawings {
            let e = tau7(d).unwrap();
            let replayed = Sequences::replay(Tree::T1, &Rectangulations::trace_of(Tree::T1, d).unwrap()).unwrap();
            assert_eq!(e, replayed, "{d}");
            assert!(class_check(e.values(), AreaClass::I7));
            assert_eq!(tau7_inv(&e).unwrap(), d.canonical());
            let e8 = tau8(d).unwrap();
            assert!(class_check(e8.values(), AreaClass::I8));
            assert_eq!(tau8_inv(&e8).unwrap(), d.canonical());
            let e6 = tau6(d).unwrap();
            assert!(class_check(e6.values(), AreaClass::I6));
            assert_eq!(tau6_inv(&e6).unwrap(), d.canonical());
            i7.insert(e);
            i8.insert(e8);
            i6.insert(e6);
        }
        assert_eq!(i7, seqs(n, "010,101,120,201"), "n={n}");
        assert_eq!(i8, seqs(n, "010,110,120,210"), "n={n}");
        assert_eq!(i6, seqs(n, "010,100,120,210"), "n={n}");
    }
}

#[test]
fn tau7_carries_boundary_counts_to_statistics() {
    for n in 1..=MAX_N {
        for d in class(n, Pattern::TD) {
            let s = tau7(&d).unwrap().stats();
            assert_eq!(d.boundary_counts(), [s.ltr_maxima, s.bounce, s.highs, s.zeros], "{d}");
        }
    }
}

#[test]
fn sigma_is_a_bijection_onto_the_t2_class() {
    for n in 1..=MAX_N {
        let drawings = class(n, Pattern::TU);
        let mut images = BTreeSet::new();
        for d in &drawings {
            let e = sigma(d).unwrap();
            let replayed = Sequences::replay(Tree::T2, &Rectangulations::trace_of(Tree::T2, d).unwrap()).unwrap();
            assert_eq!(e, replayed, "{d}");
            assert_eq!(sigma_inv(&e).unwrap(), d.canonical());
            let s = e.stats();
            assert_eq!(d.boundary_counts(), [s.bounce, s.rtl_minima, s.zeros, s.highs], "{d}");
            images.insert(e);
        }
        assert_eq!(images, seqs(n, "011,201"), "n={n}");
    }
}

#[test]
fn tree_t_is_the_minimal_inversion_tree() {
    for n in 1..=MAX_N {
        for d in class(n, Pattern::TU) {
            let t = tree_t(&d).unwrap();
            let order = t.reverse_post_order();
            let mut pos = vec![n; t.children.len()];
            for (p, &v) in order.iter().enumerate() {
                pos[v] = p;
            }
            let mut ours: Vec<(usize, usize)> =
                t.parents().iter().enumerate().filter_map(|(c, p)| p.map(|p| (pos[c], pos[p]))).collect();
            ours.sort();
            let mut theirs = minimal_inversion_tree(sigma(&d).unwrap().values()).unwrap();
            theirs.sort();
            assert_eq!(ours, theirs, "{d}");
        }
    }
}

#[test]
fn yan_lin_exchanges_statistics() {
    for n in 1..=MAX_N {
        let domain = seqs(n, "010,101,120,201");
        let mut images = BTreeSet::new();
        for e in &domain {
            let f = yan_lin(e).unwrap();
            let (a, b) = (e.stats(), f.stats());
            assert_eq!((a.zeros, a.ltr_maxima, a.bounce, a.highs), (b.highs, b.zeros, b.rtl_minima, b.bounce), "{e:?}");
            images.insert(f);
        }
        assert_eq!(images, seqs(n, "011,201"));
    }
}
