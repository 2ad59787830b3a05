//! The free-magma carrier: planar binary trees with grafting ∨, the
//! weighted product x ∗ y = |x|(x ∨ y), the weight map γ(z) = f(z)·z, and
//! the two binary ideal presentations (which must coincide).

use crate::alphabet::Alphabet;
use crate::ideal::{span_ideal_generic, SpanConfig, SpanResult};
use crate::poly::{q, Coeff, LinCombo};
use crate::tree::BinaryTree;
use crate::Result;
use num_traits::One;

/// x ∨ y without giving up ownership of the arguments.
pub fn vee(x: &BinaryTree, y: &BinaryTree) -> BinaryTree {
    BinaryTree::vee(x.clone(), y.clone())
}

/// Bilinear extension of ∨.
pub fn vee_poly(a: &LinCombo<BinaryTree>, b: &LinCombo<BinaryTree>) -> LinCombo<BinaryTree> {
    crate::poly::bilinear(a, b, |x, y| LinCombo::single(vee(x, y)))
}

/// x ∗ y = |x|(x ∨ y) on basis trees.
pub fn star(x: &BinaryTree, y: &BinaryTree) -> LinCombo<BinaryTree> {
    LinCombo::term(vee(x, y), q(x.degree() as i64))
}

/// Bilinear extension of ∗.
pub fn star_poly(a: &LinCombo<BinaryTree>, b: &LinCombo<BinaryTree>) -> LinCombo<BinaryTree> {
    crate::poly::bilinear(a, b, star)
}

/// f(leaf) = 1, f(x ∨ y) = |x|·f(x)·f(y).
pub fn weight_f(z: &BinaryTree) -> Coeff {
    match z {
        BinaryTree::Leaf { .. } => Coeff::one(),
        BinaryTree::Node { left, right, .. } => {
            q(left.degree() as i64) * weight_f(left) * weight_f(right)
        }
    }
}

/// Equivalent closed form: the product, over every vertex that is the left
/// child of its parent, of the total degree of the subtree rooted there.
pub fn weight_f_by_left_vertices(z: &BinaryTree) -> Coeff {
    fn walk(z: &BinaryTree, acc: &mut Coeff) {
        if let BinaryTree::Node { left, right, .. } = z {
            *acc *= q(left.degree() as i64);
            walk(left, acc);
            walk(right, acc);
        }
    }
    let mut acc = Coeff::one();
    walk(z, &mut acc);
    acc
}

/// γ(z) = f(z)·z; a magma morphism from (·) = ∨ onto ∗:
/// γ(x ∨ y) = γ(x) ∗ γ(y).
pub fn gamma(z: &BinaryTree) -> LinCombo<BinaryTree> {
    LinCombo::term(z.clone(), weight_f(z))
}

/// Linear extension of γ.
pub fn gamma_poly(p: &LinCombo<BinaryTree>) -> LinCombo<BinaryTree> {
    let mut out = LinCombo::zero();
    for (t, c) in p.iter() {
        out.add_term(t.clone(), c.clone() * weight_f(t));
    }
    out
}

/// Anti-symmetry in ∗ (identical to weighted anti-symmetry in ∨):
/// x∗y + y∗x = |x|(x∨y) + |y|(y∨x).
pub fn bin_antisym(x: &BinaryTree, y: &BinaryTree) -> LinCombo<BinaryTree> {
    let mut out = star(x, y);
    out.add_assign(&star(y, x));
    out
}

/// Cyclic Jacobi-type relator in ∗, expanded through ∗ = |·|(·∨·):
/// |x||y| x∨(y∨z) + |y||z| y∨(z∨x) + |z||x| z∨(x∨y).
pub fn bin_jacobi(x: &BinaryTree, y: &BinaryTree, z: &BinaryTree) -> LinCombo<BinaryTree> {
    let (dx, dy, dz) = (x.degree() as i64, y.degree() as i64, z.degree() as i64);
    let mut out = LinCombo::zero();
    out.add_term(vee(x, &vee(y, z)), q(dx * dy));
    out.add_term(vee(y, &vee(z, x)), q(dy * dz));
    out.add_term(vee(z, &vee(x, y)), q(dz * dx));
    out
}

/// Pre-Lie-type relator in the plain grafting product:
/// x∨(y∨z) − (x∨y)∨z − y∨(x∨z) + (y∨x)∨z.
pub fn bin_prelie(x: &BinaryTree, y: &BinaryTree, z: &BinaryTree) -> LinCombo<BinaryTree> {
    let mut out = LinCombo::zero();
    out.add_term(vee(x, &vee(y, z)), q(1));
    out.add_term(vee(&vee(x, y), z), q(-1));
    out.add_term(vee(y, &vee(x, z)), q(-1));
    out.add_term(vee(&vee(y, x), z), q(1));
    out
}

/// The two presentations of the binary ideal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BinaryIdeal {
    /// Generated by anti-symmetry + Jacobi in ∗.
    J,
    /// Generated by the pre-Lie relator in ∨ + weighted anti-symmetry.
    JPrime,
}

/// Spans the chosen binary ideal, closed under ∨ on both sides (a ∗- and a
/// ∨-multiple differ by a nonzero scalar on homogeneous elements, so the
/// closures agree).
pub fn span_binary(
    alphabet: &Alphabet,
    kind: BinaryIdeal,
    max_degree: u64,
    cfg: &SpanConfig,
) -> Result<SpanResult<BinaryTree>> {
    let lists = crate::enumerate::binary_up_to(alphabet, max_degree)?;
    let by_degree = |d: u64| -> &[BinaryTree] {
        if d >= 1 && d <= max_degree {
            &lists[(d - 1) as usize]
        } else {
            &[]
        }
    };
    let seeds = |n: u64| {
        let mut out = Vec::new();
        for a in 1..n {
            let b = n - a;
            for x in by_degree(a) {
                for y in by_degree(b) {
                    out.push(bin_antisym(x, y));
                }
            }
        }
        for a in 1..n {
            for b in 1..n - a {
                let c = n - a - b;
                for x in by_degree(a) {
                    for y in by_degree(b) {
                        for z in by_degree(c) {
                            out.push(match kind {
                                BinaryIdeal::J => bin_jacobi(x, y, z),
                                BinaryIdeal::JPrime => bin_prelie(x, y, z),
                            });
                        }
                    }
                }
            }
        }
        out
    };
    span_ideal_generic(
        max_degree,
        cfg,
        |d| by_degree(d).to_vec(),
        seeds,
        |t, row| row.map_linear(|s| LinCombo::single(vee(t, s))),
        |row, t| row.map_linear(|s| LinCombo::single(vee(s, t))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate;
    use crate::parse::parse_binary;

    fn all_up_to(al: &Alphabet, n: u64) -> Vec<BinaryTree> {
        enumerate::binary_up_to(al, n).unwrap().into_iter().flatten().collect()
    }

    #[test]
    fn weight_two_readings_agree() {
        for al in [Alphabet::single(), Alphabet::xy(), Alphabet::graded(2)] {
            for z in all_up_to(&al, 5) {
                assert_eq!(weight_f(&z), weight_f_by_left_vertices(&z), "{z:?}");
            }
        }
    }

    #[test]
    fn weight_examples() {
        let al = Alphabet::single();
        // Right comb: every left child is a degree-1 leaf, so f = 1.
        let comb = parse_binary(&al, "(a^(a^(a^a)))").unwrap();
        assert_eq!(weight_f(&comb), q(1));
        // Left comb on n leaves: f = (n−1)!.
        let left_comb = parse_binary(&al, "(((a^a)^a)^a)").unwrap();
        assert_eq!(weight_f(&left_comb), q(6));
        // Balanced four leaves: |left| = 2 for the root and 1 inside.
        let balanced = parse_binary(&al, "((a^a)^(a^a))").unwrap();
        assert_eq!(weight_f(&balanced), q(2));
    }

    #[test]
    fn gamma_is_a_magma_morphism() {
        let al = Alphabet::graded(2);
        let trees = all_up_to(&al, 4);
        for x in &trees {
            for y in &trees {
                if x.degree() + y.degree() > 5 {
                    continue;
                }
                let lhs = gamma(&vee(x, y));
                let rhs = star_poly(&gamma(x), &gamma(y));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn star_unrolls_with_degree_weights() {
        // (a∗b)∗c = |a|(|a|+|b|)((a∨b)∨c).
        let al = Alphabet::graded(3);
        let a = parse_binary(&al, "a2").unwrap();
        let b = parse_binary(&al, "a3").unwrap();
        let c = parse_binary(&al, "a1").unwrap();
        let lhs = star_poly(&star(&a, &b), &LinCombo::single(c.clone()));
        let expected = LinCombo::term(
            vee(&vee(&a, &b), &c),
            q(2 * (2 + 3)),
        );
        assert_eq!(lhs, expected);
    }

    #[test]
    fn antisym_was_identical_elements() {
        // The ∗-anti-symmetry instance literally equals the weighted
        // anti-symmetry instance in ∨, term for term.
        let al = Alphabet::xy();
        let x = parse_binary(&al, "(x^y)").unwrap();
        let y = parse_binary(&al, "x").unwrap();
        let e = bin_antisym(&x, &y);
        let mut manual = LinCombo::zero();
        manual.add_term(vee(&x, &y), q(2));
        manual.add_term(vee(&y, &x), q(1));
        assert_eq!(e, manual);
    }

    #[test]
    fn the_two_binary_ideals_coincide() {
        let cfg = SpanConfig::default();
        for (al, max) in [(Alphabet::graded(2), 5), (Alphabet::xy(), 3)] {
            let j = span_binary(&al, BinaryIdeal::J, max, &cfg).unwrap();
            let jp = span_binary(&al, BinaryIdeal::JPrime, max, &cfg).unwrap();
            for n in 1..=max {
                assert!(
                    j.echelon(n).same_span(jp.echelon(n)),
                    "degree {n} spans differ"
                );
            }
        }
    }

    #[test]
    fn binary_quotient_dimensions() {
        // #binary trees per degree minus ideal rank = free Lie dimensions.
        let cfg = SpanConfig::default();
        let al = Alphabet::graded(2);
        let j = span_binary(&al, BinaryIdeal::J, 5, &cfg).unwrap();
        let counts: Vec<usize> =
            (1..=5).map(|n| enumerate::binary_by_degree(&al, n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 12, 40]);
        let dims: Vec<usize> =
            (1..=5).map(|n| counts[(n - 1) as usize] - j.rank(n)).collect();
        // Lie series for generators of degree 1 and 2 (envelope has the
        // Fibonacci Hilbert series 1/(1−t−t²)).
        assert_eq!(dims, vec![1, 1, 1, 1, 2]);

        let al = Alphabet::xy();
        let j = span_binary(&al, BinaryIdeal::J, 4, &cfg).unwrap();
        let dims: Vec<usize> = (1..=4)
            .map(|n| enumerate::binary_by_degree(&al, n).unwrap().len() - j.rank(n))
            .collect();
        assert_eq!(dims, vec![2, 1, 2, 3]);
    }
}
