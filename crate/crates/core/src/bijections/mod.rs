//! Explicit bijections between rectangulation classes and inversion
//! sequences, Dyck paths, permutations, trees, compositions and words.

pub mod elementary;
pub mod strong;
pub mod weak;

pub use weak::{
    beta, delta, delta_direct, delta_inv, epsilon, epsilon_inv, rect_of_tree, tau, tau_inv, tree_of, BinaryTree,
};
