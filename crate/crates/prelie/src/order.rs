//! The monomial well-orders on generators and on decorated rooted trees.
//!
//! Both the planar and the non-planar order run the same four-clause
//! cascade; they differ only in the carrier's invariant (ordered branch
//! lists vs canonically sorted branch lists):
//!
//! 1. smaller total degree wins;
//! 2. at equal degree, fewer root branches wins;
//! 3. at equal branch count, the branch tuples are compared
//!    lexicographically by this same order, recursively;
//! 4. if all branches agree, the smaller root decoration wins.
//!
//! Generators compare by degree first, then by declaration order within a
//! degree — which is exactly the numeric order of [`GenId`].

use crate::alphabet::{Alphabet, GenId, Generator};
use crate::tree::TreeNode;
use std::cmp::Ordering;

/// Outcome of a comparison plus the clause that decided it (diagnostics).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OrderDecision {
    pub outcome: Ordering,
    /// Which clause (1)–(4) fired; `None` iff the inputs are equal.
    pub rule_fired: Option<u8>,
}

impl OrderDecision {
    fn decided(outcome: Ordering, rule: u8) -> OrderDecision {
        OrderDecision { outcome, rule_fired: Some(rule) }
    }

    fn equal() -> OrderDecision {
        OrderDecision { outcome: Ordering::Equal, rule_fired: None }
    }
}

/// Generator order: degree, then within-degree declaration rank.
pub fn cmp_generators(a: &Generator, b: &Generator) -> OrderDecision {
    match a.degree.cmp(&b.degree) {
        Ordering::Equal => match a.rank.cmp(&b.rank) {
            Ordering::Equal => OrderDecision::equal(),
            ord => OrderDecision::decided(ord, 2),
        },
        ord => OrderDecision::decided(ord, 1),
    }
}

/// The four-clause comparison, shared by both tree flavours.
pub fn cmp_trees_explain<T: TreeNode>(a: &T, b: &T) -> OrderDecision {
    // (1) degree
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return OrderDecision::decided(ord, 1),
    }
    // (2) number of root branches
    match a.branch_count().cmp(&b.branch_count()) {
        Ordering::Equal => {}
        ord => return OrderDecision::decided(ord, 2),
    }
    // (3) branch tuples, lexicographically by the recursive order
    for (x, y) in a.branches().iter().zip(b.branches().iter()) {
        match cmp_trees(x, y) {
            Ordering::Equal => {}
            ord => return OrderDecision::decided(ord, 3),
        }
    }
    // (4) root decoration
    match a.root().cmp(&b.root()) {
        Ordering::Equal => OrderDecision::equal(),
        ord => OrderDecision::decided(ord, 4),
    }
}

/// Plain `Ordering` version of the cascade (used by the `Ord` impls).
pub fn cmp_trees<T: TreeNode>(a: &T, b: &T) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    match a.branch_count().cmp(&b.branch_count()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.branches().iter().zip(b.branches().iter()) {
        match cmp_trees(x, y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    a.root().cmp(&b.root())
}

/// Planar order with diagnostics.
pub fn cmp_planar(a: &crate::tree::PlanarTree, b: &crate::tree::PlanarTree) -> OrderDecision {
    cmp_trees_explain(a, b)
}

/// Non-planar order with diagnostics (inputs are canonical by construction).
pub fn cmp_nonplanar(a: &crate::tree::Tree, b: &crate::tree::Tree) -> OrderDecision {
    cmp_trees_explain(a, b)
}

/// Generator comparison by id (same alphabet assumed).
pub fn cmp_gen_ids(alphabet: &Alphabet, a: GenId, b: GenId) -> OrderDecision {
    cmp_generators(alphabet.get(a), alphabet.get(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::parse::parse_planar;
    use crate::tree::PlanarTree;

    fn pt(al: &Alphabet, s: &str) -> PlanarTree {
        parse_planar(al, s).unwrap()
    }

    #[test]
    fn generator_order_degree_then_declaration() {
        let al = Alphabet::new(vec![("x", 1), ("y", 1), ("b", 2)]).unwrap();
        let x = al.get(al.lookup("x").unwrap());
        let y = al.get(al.lookup("y").unwrap());
        let b = al.get(al.lookup("b").unwrap());
        assert_eq!(cmp_generators(x, y).outcome, Ordering::Less);
        assert_eq!(cmp_generators(x, b).outcome, Ordering::Less);
        assert_eq!(cmp_generators(b, y).outcome, Ordering::Greater);
        assert_eq!(cmp_generators(x, x), OrderDecision::equal());
    }

    #[test]
    fn clause_cascade_on_small_trees() {
        let al = Alphabet::single();
        // (1): degree decides.
        let d = cmp_planar(&pt(&al, "a(a)"), &pt(&al, "a(a(a))"));
        assert_eq!((d.outcome, d.rule_fired), (Ordering::Less, Some(1)));
        // (2): ladder before cherry at equal degree.
        let d = cmp_planar(&pt(&al, "a(a(a))"), &pt(&al, "a(a,a)"));
        assert_eq!((d.outcome, d.rule_fired), (Ordering::Less, Some(2)));
        // Equal trees.
        let d = cmp_planar(&pt(&al, "a(a,a)"), &pt(&al, "a(a,a)"));
        assert_eq!((d.outcome, d.rule_fired), (Ordering::Equal, None));
    }

    #[test]
    fn clause_three_beats_clause_four() {
        // b_plus(y,[•x]) ≺ b_plus(x,[•y]): branches decide before roots.
        let al = Alphabet::xy();
        let d = cmp_planar(&pt(&al, "y(x)"), &pt(&al, "x(y)"));
        assert_eq!((d.outcome, d.rule_fired), (Ordering::Less, Some(3)));
        // Equal branches: the root decides.
        let d = cmp_planar(&pt(&al, "x(x)"), &pt(&al, "y(x)"));
        assert_eq!((d.outcome, d.rule_fired), (Ordering::Less, Some(4)));
    }

    #[test]
    fn forced_low_degree_chain_over_graded_alphabet() {
        // Over E = {a1:1, a2:2} the order begins
        //   •a1 ≺ •a2 ≺ a1(a1) ≺ a2(a1) ≺ a1(a2) ≺ a1(a1(a1)) ≺ a1(a1,a1).
        let al = Alphabet::graded(2);
        let chain =
            ["a1", "a2", "a1(a1)", "a2(a1)", "a1(a2)", "a1(a1(a1))", "a1(a1,a1)"];
        for w in chain.windows(2) {
            let (s, t) = (pt(&al, w[0]), pt(&al, w[1]));
            assert!(s < t, "{} should precede {}", w[0], w[1]);
        }
    }

    #[test]
    fn degree_two_chain_over_xy() {
        // x(x) ≺ y(x) ≺ x(y) ≺ y(y): clause (3) ranks by branch first.
        let al = Alphabet::xy();
        let chain = ["x(x)", "y(x)", "x(y)", "y(y)"];
        for w in chain.windows(2) {
            assert!(pt(&al, w[0]) < pt(&al, w[1]), "{} vs {}", w[0], w[1]);
        }
    }
}
