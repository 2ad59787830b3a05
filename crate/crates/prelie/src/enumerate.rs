//! Degree-by-degree enumeration of the tree carriers.
//!
//! Everything is built by dynamic programming over the degree: a tree of
//! degree n is a root generator plus a (sequence | multiset | pair) of
//! strictly smaller trees. Non-planar trees are constructed directly with
//! nondecreasing branch lists, so no isomorphism rejection is ever needed.

use crate::alphabet::Alphabet;
use crate::error::Error;
use crate::tree::{BinaryTree, PlanarTree, Tree, TreeNode};
use crate::Result;

fn check_degree(n: u64) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidArgument("degree must be ≥ 1".into()));
    }
    Ok(())
}

/// All planar trees of each degree `1..=n`, each list ⪯-ascending.
/// Index 0 of the result is degree 1.
pub fn planar_up_to(alphabet: &Alphabet, n: u64) -> Result<Vec<Vec<PlanarTree>>> {
    check_degree(n)?;
    let mut per_degree: Vec<Vec<PlanarTree>> = Vec::new();
    for d in 1..=n {
        let mut out = Vec::new();
        for g in alphabet.ids() {
            let gd = alphabet.degree(g);
            if gd > d {
                continue;
            }
            for branches in ordered_sequences(&per_degree, d - gd) {
                out.push(PlanarTree::b_plus(alphabet, g, branches));
            }
        }
        out.sort();
        per_degree.push(out);
    }
    Ok(per_degree)
}

/// Ordered sequences of trees (drawn from `per_degree`) with degree sum `m`.
fn ordered_sequences(per_degree: &[Vec<PlanarTree>], m: u64) -> Vec<Vec<PlanarTree>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for d in 1..=m {
        if d as usize > per_degree.len() {
            break;
        }
        for first in &per_degree[(d - 1) as usize] {
            for rest in ordered_sequences(per_degree, m - d) {
                let mut seq = Vec::with_capacity(rest.len() + 1);
                seq.push(first.clone());
                seq.extend(rest);
                out.push(seq);
            }
        }
    }
    out
}

pub fn planar_by_degree(alphabet: &Alphabet, n: u64) -> Result<Vec<PlanarTree>> {
    Ok(planar_up_to(alphabet, n)?.pop().expect("n ≥ 1"))
}

/// All non-planar trees of each degree `1..=n`, each list ⪯-ascending.
pub fn nonplanar_up_to(alphabet: &Alphabet, n: u64) -> Result<Vec<Vec<Tree>>> {
    check_degree(n)?;
    let mut per_degree: Vec<Vec<Tree>> = Vec::new();
    for d in 1..=n {
        // Flat ⪯-ascending list of all strictly smaller trees. Degree is
        // clause (1) of the order, so concatenating the per-degree lists
        // (each already sorted) keeps the whole list sorted.
        let flat: Vec<Tree> = per_degree.iter().flatten().cloned().collect();
        let mut out = Vec::new();
        for g in alphabet.ids() {
            let gd = alphabet.degree(g);
            if gd > d {
                continue;
            }
            for branches in nondecreasing_sequences(&flat, d - gd, 0) {
                out.push(Tree::b_plus(alphabet, g, branches));
            }
        }
        out.sort();
        per_degree.push(out);
    }
    Ok(per_degree)
}

/// ⪯-nondecreasing sequences with degree sum `m`, members drawn from the
/// sorted `flat` list starting at index `from`.
fn nondecreasing_sequences(flat: &[Tree], m: u64, from: usize) -> Vec<Vec<Tree>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in from..flat.len() {
        let d = flat[i].degree();
        if d > m {
            break; // flat is degree-ascending
        }
        for rest in nondecreasing_sequences(flat, m - d, i) {
            let mut seq = Vec::with_capacity(rest.len() + 1);
            seq.push(flat[i].clone());
            seq.extend(rest);
            out.push(seq);
        }
    }
    out
}

pub fn nonplanar_by_degree(alphabet: &Alphabet, n: u64) -> Result<Vec<Tree>> {
    Ok(nonplanar_up_to(alphabet, n)?.pop().expect("n ≥ 1"))
}

/// All binary trees with exactly `k` leaves (any decorations).
pub fn binary_by_leaves(alphabet: &Alphabet, k: usize) -> Result<Vec<BinaryTree>> {
    if k < 1 {
        return Err(Error::InvalidArgument("leaf count must be ≥ 1".into()));
    }
    let mut per_leaves: Vec<Vec<BinaryTree>> = Vec::new();
    for m in 1..=k {
        let mut out = Vec::new();
        if m == 1 {
            for g in alphabet.ids() {
                out.push(BinaryTree::leaf(alphabet, g));
            }
        } else {
            for i in 1..m {
                for l in per_leaves[i - 1].clone() {
                    for r in &per_leaves[m - i - 1] {
                        out.push(BinaryTree::vee(l.clone(), r.clone()));
                    }
                }
            }
        }
        out.sort();
        per_leaves.push(out);
    }
    Ok(per_leaves.pop().expect("k ≥ 1"))
}

/// All binary trees of each total degree `1..=n`.
pub fn binary_up_to(alphabet: &Alphabet, n: u64) -> Result<Vec<Vec<BinaryTree>>> {
    check_degree(n)?;
    let mut per_degree: Vec<Vec<BinaryTree>> = Vec::new();
    for d in 1..=n {
        let mut out = Vec::new();
        for g in alphabet.ids() {
            if alphabet.degree(g) == d {
                out.push(BinaryTree::leaf(alphabet, g));
            }
        }
        for p in 1..d {
            let q = d - p;
            for l in &per_degree[(p - 1) as usize] {
                for r in &per_degree[(q - 1) as usize] {
                    out.push(BinaryTree::vee(l.clone(), r.clone()));
                }
            }
        }
        out.sort();
        per_degree.push(out);
    }
    Ok(per_degree)
}

pub fn binary_by_degree(alphabet: &Alphabet, n: u64) -> Result<Vec<BinaryTree>> {
    Ok(binary_up_to(alphabet, n)?.pop().expect("n ≥ 1"))
}
