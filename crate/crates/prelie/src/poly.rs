//! Exact-rational linear combinations over an ordered term basis.
//!
//! `LinCombo<T>` is the workhorse for every carrier in the crate: planar
//! trees, non-planar trees, binary trees and noncommutative words. Terms
//! live in a `BTreeMap`, so iteration order is the term order and the
//! leading term is the map's last key.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

pub type Coeff = BigRational;

/// Integer-to-coefficient shorthand.
pub fn q(n: i64) -> Coeff {
    BigRational::from_integer(n.into())
}

/// Rational shorthand `n/d`.
pub fn qr(n: i64, d: i64) -> Coeff {
    BigRational::new(n.into(), d.into())
}

/// Types carrying a homogeneous degree.
pub trait Graded {
    fn grade(&self) -> u64;
}

impl Graded for crate::tree::PlanarTree {
    fn grade(&self) -> u64 {
        use crate::tree::TreeNode;
        self.degree()
    }
}

impl Graded for crate::tree::Tree {
    fn grade(&self) -> u64 {
        use crate::tree::TreeNode;
        self.degree()
    }
}

impl Graded for crate::tree::BinaryTree {
    fn grade(&self) -> u64 {
        self.degree()
    }
}

/// A finite linear combination with nonzero exact-rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinCombo<T: Ord + Clone> {
    terms: BTreeMap<T, Coeff>,
}

impl<T: Ord + Clone> Default for LinCombo<T> {
    fn default() -> Self {
        LinCombo::zero()
    }
}

impl<T: Ord + Clone> LinCombo<T> {
    pub fn zero() -> Self {
        LinCombo { terms: BTreeMap::new() }
    }

    /// A single basis element with coefficient 1.
    pub fn single(t: T) -> Self {
        LinCombo::term(t, Coeff::one())
    }

    pub fn term(t: T, c: Coeff) -> Self {
        let mut p = LinCombo::zero();
        p.add_term(t, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (T, Coeff)>>(iter: I) -> Self {
        let mut p = LinCombo::zero();
        for (t, c) in iter {
            p.add_term(t, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending term order.
    pub fn iter(&self) -> impl Iterator<Item = (&T, &Coeff)> {
        self.terms.iter()
    }

    /// Terms in descending term order (leading term first).
    pub fn iter_desc(&self) -> impl Iterator<Item = (&T, &Coeff)> {
        self.terms.iter().rev()
    }

    pub fn support(&self) -> impl Iterator<Item = &T> {
        self.terms.keys()
    }

    pub fn contains_term(&self, t: &T) -> bool {
        self.terms.contains_key(t)
    }

    /// Coefficient of `t` (zero if absent).
    pub fn coeff(&self, t: &T) -> Coeff {
        self.terms.get(t).cloned().unwrap_or_else(Coeff::zero)
    }

    /// T(f) and lc(f): the order-maximal term with its coefficient.
    pub fn leading(&self) -> Option<(&T, &Coeff)> {
        self.terms.last_key_value()
    }

    pub fn add_term(&mut self, t: T, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn remove_term(&mut self, t: &T) -> Option<Coeff> {
        self.terms.remove(t)
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (t, c) in other.iter() {
            self.add_term(t.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (t, c) in other.iter() {
            self.add_term(t.clone(), -c.clone());
        }
    }

    /// self += c · other
    pub fn add_scaled(&mut self, other: &Self, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (t, k) in other.iter() {
            self.add_term(t.clone(), k * c);
        }
    }

    pub fn scale(&mut self, c: &Coeff) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v *= c;
        }
    }

    pub fn scaled(mut self, c: &Coeff) -> Self {
        self.scale(c);
        self
    }

    pub fn plus(mut self, other: &Self) -> Self {
        self.add_assign(other);
        self
    }

    pub fn minus(mut self, other: &Self) -> Self {
        self.sub_assign(other);
        self
    }

    pub fn negated(self) -> Self {
        self.scaled(&-Coeff::one())
    }

    /// Divides by the leading coefficient; `None` on the zero polynomial.
    pub fn monic(&self) -> Option<Self> {
        let (_, lc) = self.leading()?;
        let inv = Coeff::one() / lc.clone();
        Some(self.clone().scaled(&inv))
    }

    /// Applies a basis map `T -> LinCombo<U>` linearly.
    pub fn map_linear<U: Ord + Clone>(&self, f: impl Fn(&T) -> LinCombo<U>) -> LinCombo<U> {
        let mut out = LinCombo::zero();
        for (t, c) in self.iter() {
            out.add_scaled(&f(t), c);
        }
        out
    }

    /// Applies a basis map `T -> U` linearly (merging collisions).
    pub fn map_terms<U: Ord + Clone>(&self, f: impl Fn(&T) -> U) -> LinCombo<U> {
        let mut out = LinCombo::zero();
        for (t, c) in self.iter() {
            out.add_term(f(t), c.clone());
        }
        out
    }
}

impl<T: Ord + Clone + Graded> LinCombo<T> {
    /// `Some(d)` iff nonzero and every term has degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys();
        let d = it.next()?.grade();
        it.all(|t| t.grade() == d).then_some(d)
    }

    /// Splits into homogeneous components keyed by degree.
    pub fn degree_components(&self) -> BTreeMap<u64, LinCombo<T>> {
        let mut out: BTreeMap<u64, LinCombo<T>> = BTreeMap::new();
        for (t, c) in self.iter() {
            out.entry(t.grade()).or_default().add_term(t.clone(), c.clone());
        }
        out
    }

    /// Largest degree appearing in the support (None on zero).
    pub fn max_degree(&self) -> Option<u64> {
        self.terms.keys().map(|t| t.grade()).max()
    }
}

/// Bilinear extension of a basis-level product.
pub fn bilinear<T: Ord + Clone, U: Ord + Clone>(
    a: &LinCombo<T>,
    b: &LinCombo<T>,
    f: impl Fn(&T, &T) -> LinCombo<U>,
) -> LinCombo<U> {
    let mut out = LinCombo::zero();
    for (s, cs) in a.iter() {
        for (t, ct) in b.iter() {
            out.add_scaled(&f(s, t), &(cs * ct));
        }
    }
    out
}

/// Sign-aware helpers used by the formatters.
pub fn coeff_is_negative(c: &Coeff) -> bool {
    c.is_negative()
}
