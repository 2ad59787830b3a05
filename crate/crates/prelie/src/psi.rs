//! The monomial-basis map Ψ̃ on non-planar trees, its coefficients β, and
//! the one-edge-move relation R with its transitive hash classes.

use crate::alphabet::Alphabet;
use crate::error::Error;
use crate::poly::{Coeff, LinCombo};
use crate::products;
use crate::tree::{Tree, TreeNode};
use crate::Result;
use num_traits::{One, Zero};
use std::collections::{BTreeSet, HashMap};

/// Splits a non-leaf tree into its ⪯-minimal branch t₁ and the remainder
/// t₂ (the tree with that one branch removed). Returns None on leaves.
pub fn minimal_branch_split(t: &Tree) -> Option<(Tree, Tree)> {
    let bs = t.branches();
    if bs.is_empty() {
        return None;
    }
    // Branches are stored ⪯-ascending, so the first one is minimal.
    let t1 = bs[0].clone();
    let t2 = Tree::from_parts(t.root(), t.root_degree(), bs[1..].to_vec());
    Some((t1, t2))
}

/// Shared memo for Ψ̃ across many trees of the same alphabet.
#[derive(Default)]
pub struct PsiMemo {
    map: HashMap<Tree, LinCombo<Tree>>,
}

impl PsiMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// Ψ̃(t): identity on leaves, otherwise Ψ̃(t₁) → Ψ̃(t₂) for the minimal
    /// branch split (t₁, t₂).
    pub fn of(&mut self, t: &Tree) -> LinCombo<Tree> {
        if let Some(p) = self.map.get(t) {
            return p.clone();
        }
        let p = match minimal_branch_split(t) {
            None => LinCombo::single(t.clone()),
            Some((t1, t2)) => {
                let a = self.of(&t1);
                let b = self.of(&t2);
                products::graft_poly(&a, &b)
            }
        };
        self.map.insert(t.clone(), p.clone());
        p
    }
}

/// One-shot Ψ̃(t).
pub fn psi(t: &Tree) -> LinCombo<Tree> {
    PsiMemo::new().of(t)
}

/// β(s, t) = [s] Ψ̃(t), computed directly: for the split (t₁, t₂) of t, sum
/// m(c, u, s)·β(c, t₁)·β(u, t₂) over the *distinct* branch-removal
/// decompositions (c, u) of s, where m(c, u, s) is the coefficient of s in
/// c → u (the number of reattachment points of c on u recreating s).
pub fn beta(s: &Tree, t: &Tree) -> Coeff {
    fn go(s: &Tree, t: &Tree, memo: &mut HashMap<(Tree, Tree), Coeff>) -> Coeff {
        if s.degree() != t.degree() {
            return Coeff::zero();
        }
        if t.branches().is_empty() {
            return if s == t { Coeff::one() } else { Coeff::zero() };
        }
        if let Some(v) = memo.get(&(s.clone(), t.clone())) {
            return v.clone();
        }
        let (t1, t2) = minimal_branch_split(t).expect("non-leaf");
        let mut pairs = BTreeSet::new();
        for (c, u) in products::decompositions(s) {
            if c.degree() == t1.degree() {
                pairs.insert((c, u));
            }
        }
        let mut total = Coeff::zero();
        for (c, u) in pairs {
            let bc = go(&c, &t1, memo);
            if bc.is_zero() {
                continue;
            }
            let bu = go(&u, &t2, memo);
            if bu.is_zero() {
                continue;
            }
            let m = products::graft(&c, &u).coeff(s);
            total += m * bc * bu;
        }
        memo.insert((s.clone(), t.clone()), total.clone());
        total
    }
    go(s, t, &mut HashMap::new())
}

/// All R-pairs witnessed by t: for each distinct decomposition (c, u) of t
/// and each edge (v, w) of u (v the parent), the pair
/// (c attached at v, c attached at w). The first component is always the
/// ⪯-larger tree.
pub fn relate_r(t: &Tree) -> Vec<(Tree, Tree)> {
    let mut pairs = BTreeSet::new();
    let decomps: BTreeSet<(Tree, Tree)> = products::decompositions(t).into_iter().collect();
    for (c, u) in decomps {
        for (v, w) in products::edges(&u) {
            pairs.insert((products::graft_at(&c, &u, v), products::graft_at(&c, &u, w)));
        }
    }
    pairs.into_iter().collect()
}

/// All trees reachable from s by one R-move (a subtree slides one edge
/// deeper). Sorted, duplicate-free.
pub fn successors(s: &Tree) -> Vec<Tree> {
    let mut out = BTreeSet::new();
    let bs = s.branches();
    // Move a root branch onto the root of one of its siblings.
    for i in 0..bs.len() {
        let c = &bs[i];
        let mut rest: Vec<Tree> = bs.to_vec();
        rest.remove(i);
        for j in 0..rest.len() {
            let mut nb = rest.clone();
            nb[j] = products::butcher(c, &rest[j]);
            out.insert(Tree::from_parts(s.root(), s.root_degree(), nb));
        }
    }
    // Or perform the move inside a single branch.
    for i in 0..bs.len() {
        for u in successors(&bs[i]) {
            let mut nb: Vec<Tree> = bs.to_vec();
            nb[i] = u;
            out.insert(Tree::from_parts(s.root(), s.root_degree(), nb));
        }
    }
    out.into_iter().collect()
}

/// The reflexive-transitive R-closure of a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HashClass {
    pub representative: Tree,
    /// ⪯-ascending; always contains the representative (as its maximum).
    pub members: Vec<Tree>,
}

/// [t]_#: breadth-first closure of t under R-moves. All members share t's
/// degree; `degree_bound` guards against requests beyond what the caller
/// has prepared.
pub fn hash_class(t: &Tree, degree_bound: u64) -> Result<HashClass> {
    if t.degree() > degree_bound {
        return Err(Error::DegreeOutOfRange { requested: t.degree(), available: degree_bound });
    }
    let mut seen = BTreeSet::new();
    seen.insert(t.clone());
    let mut queue = vec![t.clone()];
    while let Some(s) = queue.pop() {
        for next in successors(&s) {
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    Ok(HashClass { representative: t.clone(), members: seen.into_iter().collect() })
}

/// The degree-n monomial basis of the free pre-Lie algebra: every degree-n
/// tree t paired with Ψ̃(t), in ⪯-ascending order of t.
pub fn prelie_monomial_basis(
    alphabet: &Alphabet,
    n: u64,
) -> Result<Vec<(Tree, LinCombo<Tree>)>> {
    let trees = crate::enumerate::nonplanar_by_degree(alphabet, n)?;
    let mut memo = PsiMemo::new();
    Ok(trees
        .into_iter()
        .map(|t| {
            let p = memo.of(&t);
            (t, p)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::echelon::Echelon;
    use crate::enumerate;
    use crate::order::cmp_nonplanar;
    use crate::parse::{parse_nonplanar, parse_nonplanar_poly};
    use crate::poly::q;
    use std::cmp::Ordering;

    fn np(al: &Alphabet, s: &str) -> Tree {
        parse_nonplanar(al, s).unwrap()
    }

    #[test]
    fn psi_fixes_ladders() {
        for al in [Alphabet::single(), Alphabet::graded(2)] {
            for n in 1..=5 {
                for t in enumerate::nonplanar_by_degree(&al, n).unwrap() {
                    if t.is_ladder() {
                        assert_eq!(psi(&t), LinCombo::single(t));
                    }
                }
            }
        }
    }

    #[test]
    fn psi_degree_four_one_generator() {
        let al = Alphabet::single();
        let cases = [
            ("a(a(a(a)))", "a(a(a(a)))"),
            ("a(a(a,a))", "a(a(a,a)) + a(a(a(a)))"),
            ("a(a,a(a))", "a(a,a(a)) + a(a(a,a)) + a(a(a(a)))"),
            ("a(a,a,a)", "a(a,a,a) + 3*a(a,a(a)) + a(a(a,a)) + a(a(a(a)))"),
        ];
        for (t, expect) in cases {
            assert_eq!(
                psi(&np(&al, t)),
                parse_nonplanar_poly(&al, expect).unwrap(),
                "Ψ̃({t})"
            );
        }
    }

    #[test]
    fn psi_mixed_degrees() {
        let al = Alphabet::graded(2);
        assert_eq!(
            psi(&np(&al, "a1(a1,a2)")),
            parse_nonplanar_poly(&al, "a1(a1,a2) + a1(a2(a1))").unwrap()
        );
        assert_eq!(
            psi(&np(&al, "a2(a1,a1)")),
            parse_nonplanar_poly(&al, "a2(a1,a1) + a2(a1(a1))").unwrap()
        );
    }

    #[test]
    fn psi_leading_term_and_support() {
        for al in [Alphabet::single(), Alphabet::xy()] {
            let max = if al.len() == 1 { 5 } else { 4 };
            let mut memo = PsiMemo::new();
            for n in 1..=max {
                for t in enumerate::nonplanar_by_degree(&al, n).unwrap() {
                    let p = memo.of(&t);
                    let (lead, c) = p.leading().unwrap();
                    assert_eq!(lead, &t);
                    assert_eq!(c, &q(1));
                    assert_eq!(p.homogeneous_degree(), Some(n));
                    let class = hash_class(&t, n).unwrap();
                    for s in p.support() {
                        assert!(class.members.contains(s), "supp Ψ̃({t:?}) ⊄ [t]#");
                    }
                }
            }
        }
    }

    #[test]
    fn psi_matrix_is_invertible() {
        // Unitriangularity makes {Ψ̃(t)} a basis degree by degree.
        let al = Alphabet::xy();
        for n in 1..=4 {
            let basis = prelie_monomial_basis(&al, n).unwrap();
            let count = basis.len();
            let mut ech = Echelon::new();
            for (_, p) in basis {
                assert!(ech.insert(&p));
            }
            assert_eq!(ech.rank(), count);
        }
    }

    #[test]
    fn beta_matches_psi_coefficients() {
        for (al, max) in [(Alphabet::single(), 5), (Alphabet::xy(), 3)] {
            let mut memo = PsiMemo::new();
            for n in 1..=max {
                let trees = enumerate::nonplanar_by_degree(&al, n).unwrap();
                for t in &trees {
                    let p = memo.of(t);
                    for s in &trees {
                        assert_eq!(beta(s, t), p.coeff(s), "β({s:?}, {t:?})");
                    }
                }
            }
        }
        let al = Alphabet::single();
        assert_eq!(beta(&np(&al, "a(a,a(a))"), &np(&al, "a(a,a,a)")), q(3));
    }

    #[test]
    fn relate_r_three_chain() {
        let al = Alphabet::single();
        let pairs = relate_r(&np(&al, "a(a(a))"));
        assert_eq!(pairs, vec![(np(&al, "a(a,a)"), np(&al, "a(a(a))"))]);
    }

    #[test]
    fn r_moves_strictly_decrease() {
        let al = Alphabet::single();
        for n in 1..=5 {
            for t in enumerate::nonplanar_by_degree(&al, n).unwrap() {
                for (s, sp) in relate_r(&t) {
                    assert_eq!(cmp_nonplanar(&sp, &s).outcome, Ordering::Less);
                    assert!(successors(&s).contains(&sp));
                }
                for sp in successors(&t) {
                    assert_eq!(cmp_nonplanar(&sp, &t).outcome, Ordering::Less);
                }
            }
        }
    }

    #[test]
    fn successors_golden() {
        let al = Alphabet::single();
        assert_eq!(successors(&np(&al, "a(a,a)")), vec![np(&al, "a(a(a))")]);
        assert!(successors(&np(&al, "a(a(a))")).is_empty());
    }

    #[test]
    fn hash_class_goldens() {
        let al = Alphabet::single();
        let leaf = np(&al, "a");
        assert_eq!(hash_class(&leaf, 1).unwrap().members, vec![leaf.clone()]);
        // Degree-4 cherry reaches every degree-4 tree.
        let cherry = np(&al, "a(a,a,a)");
        let class = hash_class(&cherry, 4).unwrap();
        assert_eq!(class.members, enumerate::nonplanar_by_degree(&al, 4).unwrap());
        // Ladders are alone in their class.
        let l4 = np(&al, "a(a(a(a)))");
        assert_eq!(hash_class(&l4, 4).unwrap().members, vec![l4.clone()]);
        // Degree guard.
        assert!(matches!(
            hash_class(&cherry, 3),
            Err(Error::DegreeOutOfRange { requested: 4, available: 3 })
        ));
    }

    #[test]
    fn r_is_compatible_with_butcher_products() {
        let al = Alphabet::xy();
        let small: Vec<Tree> = (1..=2)
            .flat_map(|n| enumerate::nonplanar_by_degree(&al, n).unwrap())
            .collect();
        for n in 2..=3 {
            for t in enumerate::nonplanar_by_degree(&al, n).unwrap() {
                for (s, sp) in relate_r(&t) {
                    for u in &small {
                        // s R s′ ⇒ (s ⊳ u) R (s′ ⊳ u) and (u ⊳ s) R (u ⊳ s′).
                        let left = products::butcher(&s, u);
                        assert!(successors(&left).contains(&products::butcher(&sp, u)));
                        let right = products::butcher(u, &s);
                        assert!(successors(&right).contains(&products::butcher(u, &sp)));
                    }
                }
            }
        }
    }

    #[test]
    fn monomial_basis_degree_three() {
        let al = Alphabet::single();
        let basis = prelie_monomial_basis(&al, 3).unwrap();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0].0, np(&al, "a(a(a))"));
        assert_eq!(basis[0].1, parse_nonplanar_poly(&al, "a(a(a))").unwrap());
        assert_eq!(basis[1].0, np(&al, "a(a,a)"));
        assert_eq!(basis[1].1, parse_nonplanar_poly(&al, "a(a,a) + a(a(a))").unwrap());
    }
}
