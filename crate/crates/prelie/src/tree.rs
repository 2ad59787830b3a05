//! Decorated rooted trees: planar, non-planar (canonical), and binary.

use crate::alphabet::{Alphabet, GenId};
use crate::order;
use std::cmp::Ordering;

/// Common shape interface used by the order and the generic tree walks.
pub trait TreeNode: Sized {
    fn root(&self) -> GenId;
    fn degree(&self) -> u64;
    fn branches(&self) -> &[Self];

    /// b(σ): number of branches at the root.
    fn branch_count(&self) -> usize {
        self.branches().len()
    }

    /// Number of vertices.
    fn vertex_count(&self) -> usize {
        1 + self.branches().iter().map(|b| b.vertex_count()).sum::<usize>()
    }

    /// True iff every vertex has at most one branch (a chain).
    fn is_ladder(&self) -> bool {
        match self.branches() {
            [] => true,
            [b] => b.is_ladder(),
            _ => false,
        }
    }
}

/// A planar decorated rooted tree: branch order is significant.
///
/// The root generator's degree and the total degree are cached so that
/// products and the order never need the alphabet at hand.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PlanarTree {
    root: GenId,
    root_degree: u64,
    degree: u64,
    branches: Vec<PlanarTree>,
}

impl PlanarTree {
    pub fn leaf(alphabet: &Alphabet, g: GenId) -> PlanarTree {
        PlanarTree::from_parts(g, alphabet.degree(g), Vec::new())
    }

    /// B₊-style constructor: root decorated `g` with the given ordered branches.
    pub fn b_plus(alphabet: &Alphabet, g: GenId, branches: Vec<PlanarTree>) -> PlanarTree {
        PlanarTree::from_parts(g, alphabet.degree(g), branches)
    }

    /// Raw constructor used where the alphabet is not available; the caller
    /// supplies the root generator's own degree.
    pub fn from_parts(root: GenId, root_degree: u64, branches: Vec<PlanarTree>) -> PlanarTree {
        let degree = root_degree + branches.iter().map(|b| b.degree).sum::<u64>();
        PlanarTree { root, root_degree, degree, branches }
    }

    pub fn root_degree(&self) -> u64 {
        self.root_degree
    }

    pub fn into_branches(self) -> Vec<PlanarTree> {
        self.branches
    }

    /// True iff at every vertex the branches appear ⪯-nondecreasing left to right.
    pub fn has_nondecreasing_branches(&self) -> bool {
        self.branches.windows(2).all(|w| w[0] <= w[1])
            && self.branches.iter().all(|b| b.has_nondecreasing_branches())
    }

    /// π: forget the planar structure (canonically sorts branches, recursively).
    pub fn forget_planarity(&self) -> Tree {
        let branches = self.branches.iter().map(|b| b.forget_planarity()).collect();
        Tree::from_parts(self.root, self.root_degree, branches)
    }
}

impl TreeNode for PlanarTree {
    fn root(&self) -> GenId {
        self.root
    }
    fn degree(&self) -> u64 {
        self.degree
    }
    fn branches(&self) -> &[PlanarTree] {
        &self.branches
    }
}

impl PartialOrd for PlanarTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PlanarTree {
    fn cmp(&self, other: &Self) -> Ordering {
        order::cmp_trees(self, other)
    }
}

/// A non-planar decorated rooted tree in canonical form: at every vertex the
/// branch list is sorted ⪯-nondecreasing. Equality is structural equality of
/// the canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tree {
    root: GenId,
    root_degree: u64,
    degree: u64,
    branches: Vec<Tree>,
}

impl Tree {
    pub fn leaf(alphabet: &Alphabet, g: GenId) -> Tree {
        Tree::from_parts(g, alphabet.degree(g), Vec::new())
    }

    /// Root decorated `g` over the given branches (sorted internally).
    pub fn b_plus(alphabet: &Alphabet, g: GenId, branches: Vec<Tree>) -> Tree {
        Tree::from_parts(g, alphabet.degree(g), branches)
    }

    /// Raw constructor; sorts the branches into canonical order.
    pub fn from_parts(root: GenId, root_degree: u64, mut branches: Vec<Tree>) -> Tree {
        branches.sort();
        let degree = root_degree + branches.iter().map(|b| b.degree).sum::<u64>();
        Tree { root, root_degree, degree, branches }
    }

    pub fn root_degree(&self) -> u64 {
        self.root_degree
    }

    pub fn into_branches(self) -> Vec<Tree> {
        self.branches
    }

    /// S_min: the ⪯-minimal planar representative. For the canonical sorted
    /// form this is simply the identity embedding (verified by brute force
    /// against all planar preimages in the tests).
    pub fn s_min(&self) -> PlanarTree {
        let branches = self.branches.iter().map(|b| b.s_min()).collect();
        PlanarTree::from_parts(self.root, self.root_degree, branches)
    }
}

impl TreeNode for Tree {
    fn root(&self) -> GenId {
        self.root
    }
    fn degree(&self) -> u64 {
        self.degree
    }
    fn branches(&self) -> &[Tree] {
        &self.branches
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        order::cmp_trees(self, other)
    }
}

/// A planar binary tree with decorated leaves: the free magma on E.
///
/// Derived `Ord` (leaves before nodes, then fieldwise) is a plain structural
/// total order — the magmatic echelon computations only need *some* total
/// order, not a monomial one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BinaryTree {
    Leaf { gen: GenId, degree: u64 },
    Node { degree: u64, left: Box<BinaryTree>, right: Box<BinaryTree> },
}

impl BinaryTree {
    pub fn leaf(alphabet: &Alphabet, g: GenId) -> BinaryTree {
        BinaryTree::Leaf { gen: g, degree: alphabet.degree(g) }
    }

    /// t₁ ∨ t₂: new root with left child t₁ and right child t₂.
    pub fn vee(left: BinaryTree, right: BinaryTree) -> BinaryTree {
        let degree = left.degree() + right.degree();
        BinaryTree::Node { degree, left: Box::new(left), right: Box::new(right) }
    }

    /// Total degree: sum of the leaf decorations' degrees.
    pub fn degree(&self) -> u64 {
        match self {
            BinaryTree::Leaf { degree, .. } => *degree,
            BinaryTree::Node { degree, .. } => *degree,
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            BinaryTree::Leaf { .. } => 1,
            BinaryTree::Node { left, right, .. } => left.leaf_count() + right.leaf_count(),
        }
    }

    /// Leaf decorations left to right.
    pub fn leaves(&self) -> Vec<GenId> {
        fn walk(t: &BinaryTree, out: &mut Vec<GenId>) {
            match t {
                BinaryTree::Leaf { gen, .. } => out.push(*gen),
                BinaryTree::Node { left, right, .. } => {
                    walk(left, out);
                    walk(right, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}
