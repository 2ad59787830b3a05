//! The four bilinear tree products and the graft-position toolkit.
//!
//! Planar: the left Butcher product σ ∘↘ τ (σ becomes the leftmost branch
//! of τ's root) and left grafting σ ↘ τ (σ becomes the leftmost branch of
//! each vertex of τ in turn). Non-planar: the Butcher product s ⊳ t and
//! pre-Lie grafting s → t, where coinciding graft results accumulate
//! integer coefficients.

use crate::poly::LinCombo;
use crate::tree::{PlanarTree, Tree, TreeNode};

/// σ ∘↘ τ: graft σ as the leftmost branch of τ's root.
pub fn left_butcher(sigma: &PlanarTree, tau: &PlanarTree) -> PlanarTree {
    let mut branches = Vec::with_capacity(tau.branch_count() + 1);
    branches.push(sigma.clone());
    branches.extend(tau.branches().iter().cloned());
    PlanarTree::from_parts(tau.root(), tau.root_degree(), branches)
}

/// σ ↘ τ: sum over all vertices v of τ of "σ as leftmost branch of v".
pub fn left_graft(sigma: &PlanarTree, tau: &PlanarTree) -> LinCombo<PlanarTree> {
    let mut out = LinCombo::zero();
    out.add_term(left_butcher(sigma, tau), crate::poly::q(1));
    for (i, branch) in tau.branches().iter().enumerate() {
        for (sub, c) in left_graft(sigma, branch).iter() {
            let mut branches = tau.branches().to_vec();
            branches[i] = sub.clone();
            out.add_term(
                PlanarTree::from_parts(tau.root(), tau.root_degree(), branches),
                c.clone(),
            );
        }
    }
    out
}

/// s ⊳ t: graft s on the root of t (NAP product).
pub fn butcher(s: &Tree, t: &Tree) -> Tree {
    let mut branches = Vec::with_capacity(t.branch_count() + 1);
    branches.extend(t.branches().iter().cloned());
    branches.push(s.clone());
    Tree::from_parts(t.root(), t.root_degree(), branches)
}

/// s → t: sum over all vertices of t; coinciding results merge, so
/// coefficients count graft positions with the same canonical outcome.
pub fn graft(s: &Tree, t: &Tree) -> LinCombo<Tree> {
    let mut out = LinCombo::zero();
    out.add_term(butcher(s, t), crate::poly::q(1));
    for (i, branch) in t.branches().iter().enumerate() {
        for (sub, c) in graft(s, branch).iter() {
            let mut branches = t.branches().to_vec();
            branches[i] = sub.clone();
            out.add_term(Tree::from_parts(t.root(), t.root_degree(), branches), c.clone());
        }
    }
    out
}

/// Bilinear extensions.
pub fn left_butcher_poly(
    f: &LinCombo<PlanarTree>,
    g: &LinCombo<PlanarTree>,
) -> LinCombo<PlanarTree> {
    crate::poly::bilinear(f, g, |s, t| LinCombo::single(left_butcher(s, t)))
}

pub fn left_graft_poly(
    f: &LinCombo<PlanarTree>,
    g: &LinCombo<PlanarTree>,
) -> LinCombo<PlanarTree> {
    crate::poly::bilinear(f, g, left_graft)
}

pub fn butcher_poly(f: &LinCombo<Tree>, g: &LinCombo<Tree>) -> LinCombo<Tree> {
    crate::poly::bilinear(f, g, |s, t| LinCombo::single(butcher(s, t)))
}

pub fn graft_poly(f: &LinCombo<Tree>, g: &LinCombo<Tree>) -> LinCombo<Tree> {
    crate::poly::bilinear(f, g, graft)
}

/// s →_v t for the vertex with preorder index `v` in t (0 = root; branches
/// visited in canonical stored order). Panics if `v` is out of range.
pub fn graft_at(s: &Tree, t: &Tree, v: usize) -> Tree {
    if v == 0 {
        return butcher(s, t);
    }
    let mut offset = 1usize;
    for (i, branch) in t.branches().iter().enumerate() {
        let size = branch.vertex_count();
        if v < offset + size {
            let mut branches = t.branches().to_vec();
            branches[i] = graft_at(s, branch, v - offset);
            return Tree::from_parts(t.root(), t.root_degree(), branches);
        }
        offset += size;
    }
    panic!("vertex index {v} out of range");
}

/// Edges of t as (parent, child) pairs of preorder indices.
pub fn edges(t: &Tree) -> Vec<(usize, usize)> {
    fn walk(t: &Tree, my_index: usize, next_free: &mut usize, out: &mut Vec<(usize, usize)>) {
        for branch in t.branches() {
            let child_index = *next_free;
            *next_free += 1;
            out.push((my_index, child_index));
            walk(branch, child_index, next_free, out);
        }
    }
    let mut out = Vec::new();
    let mut next = 1usize;
    walk(t, 0, &mut next, &mut out);
    out
}

/// All ways to write t = c →_v rest by cutting one edge: one entry per
/// non-root vertex of t (so entries may repeat as unordered pairs).
pub fn decompositions(t: &Tree) -> Vec<(Tree, Tree)> {
    let mut out = Vec::new();
    let branches = t.branches();
    for i in 0..branches.len() {
        // Cut the edge root—branch i.
        let mut rest = branches.to_vec();
        let cut = rest.remove(i);
        out.push((cut, Tree::from_parts(t.root(), t.root_degree(), rest)));
        // Cut an edge strictly inside branch i.
        for (c, shrunk) in decompositions(&branches[i]) {
            let mut rest = branches.to_vec();
            rest[i] = shrunk;
            out.push((c, Tree::from_parts(t.root(), t.root_degree(), rest)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::parse::{format_tree_poly, parse_nonplanar, parse_planar};
    use crate::poly::q;

    #[test]
    fn butcher_products_at_leaves() {
        let al = Alphabet::xy();
        let x = parse_planar(&al, "x").unwrap();
        let y = parse_planar(&al, "y").unwrap();
        // •x ∘↘ •y = b_plus(y, [•x])
        assert_eq!(left_butcher(&x, &y), parse_planar(&al, "y(x)").unwrap());
        // non-planar twin
        let s = parse_nonplanar(&al, "x").unwrap();
        let t = parse_nonplanar(&al, "y").unwrap();
        assert_eq!(butcher(&s, &t), parse_nonplanar(&al, "y(x)").unwrap());
    }

    #[test]
    fn displayed_planar_products() {
        // 2-ladder against the 3-vertex two-branch tree, one generator:
        //   l₂ ∘↘ a(a,a) = a(a(a),a,a)
        //   l₂ ↘ a(a,a) = a(a(a),a,a) + a(a(a(a)),a) + a(a,a(a(a)))
        let al = Alphabet::single();
        let l2 = parse_planar(&al, "a(a)").unwrap();
        let cherry = parse_planar(&al, "a(a,a)").unwrap();
        assert_eq!(left_butcher(&l2, &cherry), parse_planar(&al, "a(a(a),a,a)").unwrap());
        let g = left_graft(&l2, &cherry);
        assert_eq!(g.len(), 3);
        for text in ["a(a(a),a,a)", "a(a(a(a)),a)", "a(a,a(a(a)))"] {
            assert_eq!(g.coeff(&parse_planar(&al, text).unwrap()), q(1));
        }
    }

    #[test]
    fn displayed_nonplanar_products() {
        // One generator: l₂ ⊳ l₂ has branches {l₂, •} at the root, and
        // l₂ → l₂ = that tree + the 4-chain.
        let al = Alphabet::single();
        let l2 = parse_nonplanar(&al, "a(a)").unwrap();
        assert_eq!(butcher(&l2, &l2), parse_nonplanar(&al, "a(a,a(a))").unwrap());
        let g = graft(&l2, &l2);
        assert_eq!(g.len(), 2);
        assert_eq!(g.coeff(&parse_nonplanar(&al, "a(a,a(a))").unwrap()), q(1));
        assert_eq!(g.coeff(&parse_nonplanar(&al, "a(a(a(a)))").unwrap()), q(1));
    }

    #[test]
    fn graft_counts_coincidences() {
        // • → a(a,a): grafting on either leaf gives the same canonical
        // tree, so its coefficient is 2.
        let al = Alphabet::single();
        let dot = parse_nonplanar(&al, "a").unwrap();
        let cherry = parse_nonplanar(&al, "a(a,a)").unwrap();
        let g = graft(&dot, &cherry);
        assert_eq!(g.coeff(&parse_nonplanar(&al, "a(a,a,a)").unwrap()), q(1));
        assert_eq!(g.coeff(&parse_nonplanar(&al, "a(a,a(a))").unwrap()), q(2));
        // Total coefficient mass = #V(t).
        let mass: crate::poly::Coeff = g.iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(mass, q(3));
    }

    #[test]
    fn planar_graft_has_one_term_per_vertex() {
        let al = Alphabet::xy();
        let sigma = parse_planar(&al, "x(y)").unwrap();
        for text in ["x", "y(x,y)", "x(x(y),y)", "y(y(y(x)))"] {
            let tau = parse_planar(&al, text).unwrap();
            let g = left_graft(&sigma, &tau);
            assert_eq!(g.len(), tau.vertex_count());
            assert!(g.iter().all(|(_, c)| c == &q(1)));
        }
    }

    #[test]
    fn degree_additivity() {
        let al = Alphabet::graded(2);
        let s = parse_planar(&al, "a1(a2)").unwrap();
        let t = parse_planar(&al, "a2(a1,a1)").unwrap();
        assert_eq!(left_butcher(&s, &t).degree(), s.degree() + t.degree());
        for (u, _) in left_graft(&s, &t).iter() {
            assert_eq!(u.degree(), s.degree() + t.degree());
        }
    }

    #[test]
    fn pi_is_a_product_homomorphism() {
        // π(σ ∘↘ τ) = π(σ) ⊳ π(τ) and π(σ ↘ τ) = π(σ) → π(τ), termwise.
        let al = Alphabet::xy();
        let corpus: Vec<PlanarTree> = (1..=3)
            .flat_map(|n| crate::enumerate::planar_by_degree(&al, n).unwrap())
            .collect();
        for s in &corpus {
            for t in &corpus {
                assert_eq!(
                    left_butcher(s, t).forget_planarity(),
                    butcher(&s.forget_planarity(), &t.forget_planarity())
                );
                let lhs = left_graft(s, t).map_terms(|u| u.forget_planarity());
                let rhs = graft(&s.forget_planarity(), &t.forget_planarity());
                assert_eq!(lhs, rhs, "{} vs {}", format_tree_poly(&al, &lhs), format_tree_poly(&al, &rhs));
            }
        }
    }

    #[test]
    fn graft_at_covers_all_vertices() {
        let al = Alphabet::single();
        let s = parse_nonplanar(&al, "a").unwrap();
        let t = parse_nonplanar(&al, "a(a,a(a))").unwrap();
        let mut sum = LinCombo::zero();
        for v in 0..t.vertex_count() {
            sum.add_term(graft_at(&s, &t, v), q(1));
        }
        assert_eq!(sum, graft(&s, &t));
        assert_eq!(edges(&t).len(), t.vertex_count() - 1);
    }

    #[test]
    fn decompositions_enumerate_nonroot_vertices() {
        let al = Alphabet::single();
        let t = parse_nonplanar(&al, "a(a,a(a))").unwrap();
        let d = decompositions(&t);
        assert_eq!(d.len(), t.vertex_count() - 1);
        // Every decomposition grafts back to t at some vertex.
        for (c, rest) in &d {
            let g = graft(c, rest);
            assert!(g.coeff(&t) > q(0));
        }
    }
}
