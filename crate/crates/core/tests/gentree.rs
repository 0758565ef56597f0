use rectlab::gentree::{child_steps, count_by_tree, t2_patterns, Realization, Rectangulations, Sequences, Tree};
use rectlab::invseq::{enumerate_avoiding, AreaClass};
use rectlab::patterns::Pattern;
use rectlab::universe::{enumerate_class, Mode};
use rectlab::Execution;

fn check_types<R: Realization>(tree: Tree, n: usize) {
    for o in R::level(tree, n, Execution::Parallel).unwrap() {
        let t = R::node_type(tree, &o).unwrap();
        let predicted: Vec<_> = child_steps(tree, t);
        let kids = R::children(tree, &o).unwrap();
        assert_eq!(kids.len(), predicted.len());
        for ((step, child), (pstep, ptype)) in kids.iter().zip(&predicted) {
            assert_eq!(step, pstep);
            assert_eq!(R::node_type(tree, child).unwrap(), *ptype, "{o:?} --{step}--> {child:?}");
            let (back, parent) = R::last_step(tree, child).unwrap().unwrap();
            assert_eq!(back, *step);
            assert_eq!(parent, R::replay(tree, &R::trace_of(tree, &o).unwrap()).unwrap());
        }
    }
}

#[test]
fn child_types_follow_the_rules() {
    for tree in [Tree::T1, Tree::T2] {
        for n in 1..=5 {
            check_types::<Sequences>(tree, n);
            check_types::<Rectangulations>(tree, n);
        }
    }
}

#[test]
fn rectangulation_levels_are_the_classes() {
    for (tree, p) in [(Tree::T1, Pattern::TD), (Tree::T2, Pattern::TU)] {
        for n in 1..=6 {
            let level = Rectangulations::level(tree, n, Execution::Parallel).unwrap();
            let mut class = enumerate_class(n, Mode::Strong, &[p]).unwrap();
            class.sort();
            assert_eq!(level, class, "{tree:?} n={n}");
        }
    }
}

#[test]
fn sequence_levels_are_the_classes() {
    for n in 1..=7 {
        let level = Sequences::level(Tree::T1, n, Execution::Sequential).unwrap();
        assert_eq!(level, enumerate_avoiding(n, &AreaClass::I7.patterns()).unwrap());
        let level = Sequences::level(Tree::T2, n, Execution::Sequential).unwrap();
        assert_eq!(level, enumerate_avoiding(n, &t2_patterns()).unwrap());
        assert_eq!(count_by_tree(Tree::T1, n), level.len().into());
    }
}
