//! Randomized properties beyond the exhaustive range, driven by random walks
//! down the generating trees.

use proptest::prelude::*;

use rectlab::bijections::strong::{sigma, sigma_inv, tau7, tau7_inv, tree_t};
use rectlab::bijections::weak::{rect_of_tree, tau, tau_inv, tree_of, BinaryTree};
use rectlab::gentree::{Realization, Rectangulations, Sequences, Trace, TraceStep, Tree};
use rectlab::invseq::{class_check, minimal_inversion_tree, AreaClass, InvSeq};
use rectlab::paths::DyckPath;
use rectlab::patterns::{contains, Pattern};
use rectlab::RectDrawing;

/// Follow `choices` down `tree` on the sequence side.
fn walk(tree: Tree, choices: &[usize]) -> (InvSeq, Trace) {
    let mut e = Sequences::root();
    let mut trace = Vec::new();
    for &c in choices {
        let kids = Sequences::children(tree, &e).unwrap();
        let (step, next) = kids[c % kids.len()].clone();
        trace.push(step);
        e = next;
    }
    (e, trace)
}

fn choices() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<usize>(), 0..11)
}

fn nondecreasing() -> impl Strategy<Value = InvSeq> {
    prop::collection::vec(any::<u32>(), 0..13).prop_map(|raw| {
        let mut v = vec![0u32];
        for (i, r) in raw.into_iter().enumerate() {
            let prev = *v.last().unwrap();
            v.push(prev + r % (i as u32 + 2 - prev));
        }
        InvSeq::new(v).unwrap()
    })
}

fn dyck() -> impl Strategy<Value = DyckPath> {
    nondecreasing().prop_map(|e| rectlab::bijections::epsilon(&e).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tau7_inverts_the_t1_walk(ch in choices()) {
        let (e, trace) = walk(Tree::T1, &ch);
        prop_assert!(class_check(e.values(), AreaClass::I7));
        let d = tau7_inv(&e).unwrap();
        prop_assert!(!contains(&d, Pattern::TD));
        prop_assert_eq!(Rectangulations::trace_of(Tree::T1, &d).unwrap(), trace);
        prop_assert_eq!(tau7(&d).unwrap(), e.clone());
        let s = e.stats();
        prop_assert_eq!(d.boundary_counts(), [s.ltr_maxima, s.bounce, s.highs, s.zeros]);
    }

    #[test]
    fn sigma_inverts_the_t2_walk(ch in choices()) {
        let (e, _) = walk(Tree::T2, &ch);
        let d = sigma_inv(&e).unwrap();
        prop_assert!(!contains(&d, Pattern::TU));
        prop_assert_eq!(sigma(&d).unwrap(), e.clone());
        let s = e.stats();
        prop_assert_eq!(d.boundary_counts(), [s.bounce, s.rtl_minima, s.zeros, s.highs]);
        let t = tree_t(&d).unwrap();
        prop_assert_eq!(t.reverse_post_order().len(), e.len());
        prop_assert!(minimal_inversion_tree(e.values()).is_ok());
    }

    #[test]
    fn canonical_form_is_stable(ch in choices(), flip in any::<bool>()) {
        let (e, _) = walk(Tree::T1, &ch);
        let d = tau7_inv(&e).unwrap();
        let r = d.reflect(flip);
        prop_assert_eq!(r.reflect(flip), d.clone());
        prop_assert_eq!(r.canonical().canonical(), r.canonical());
        prop_assert_eq!(r.canonical().strong_key(), r.strong_key());
        prop_assert_eq!(d.rotate().rotate().rotate().rotate(), d);
    }

    #[test]
    fn tau_round_trips_on_nondecreasing(e in nondecreasing()) {
        let d = tau_inv(&e).unwrap();
        prop_assert_eq!(d.n(), e.len());
        prop_assert_eq!(tau(&d).unwrap(), e);
    }

    #[test]
    fn binary_trees_round_trip(p in dyck()) {
        let t = BinaryTree::from_dyck(&p);
        prop_assert_eq!(t.to_dyck(), p);
        let d = rect_of_tree(&t).unwrap();
        prop_assert_eq!(tree_of(&d).unwrap(), t);
    }

    #[test]
    fn json_round_trips(ch in choices(), p in dyck()) {
        let (e, trace) = walk(Tree::T1, &ch);
        let d = tau7_inv(&e).unwrap();
        let back: RectDrawing = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        prop_assert_eq!(back, d);
        let back: InvSeq = serde_json::from_str(&serde_json::to_string(&e).unwrap()).unwrap();
        prop_assert_eq!(back, e);
        let back: Vec<TraceStep> = serde_json::from_str(&serde_json::to_string(&trace).unwrap()).unwrap();
        prop_assert_eq!(back, trace);
        let back: DyckPath = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(&back, &p);
        let t = BinaryTree::from_dyck(&p);
        let back: BinaryTree = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        prop_assert_eq!(back, t);
    }
}
