//! Exact Gaussian elimination: reduced echelon spans over any ordered basis.
//!
//! An [`Echelon`] keeps one monic row per distinct leading term, fully
//! back-substituted (no row's tail touches another row's leading term).
//! That makes the row set the unique reduced basis of the span, so two
//! spans are equal iff the row maps are equal — which is how the ideal
//! equality lemma is tested.

use crate::poly::{Coeff, LinCombo};
use num_traits::One;
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Echelon<T: Ord + Clone> {
    rows: BTreeMap<T, LinCombo<T>>,
}

impl<T: Ord + Clone> Echelon<T> {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Leading terms, ascending.
    pub fn leading_terms(&self) -> impl Iterator<Item = &T> {
        self.rows.keys()
    }

    pub fn is_leading(&self, t: &T) -> bool {
        self.rows.contains_key(t)
    }

    /// The monic row with leading term `t`, if any.
    pub fn row(&self, t: &T) -> Option<&LinCombo<T>> {
        self.rows.get(t)
    }

    /// Rows ascending by leading term.
    pub fn rows(&self) -> impl Iterator<Item = &LinCombo<T>> {
        self.rows.values()
    }

    /// Fully reduces `f` modulo the span: repeatedly cancels any term that
    /// is a row's leading term. The result is the canonical residue.
    pub fn reduce(&self, f: &LinCombo<T>) -> LinCombo<T> {
        let mut f = f.clone();
        loop {
            // Largest reducible term, if any. Row tails avoid all leading
            // terms, so each cancellation strictly shrinks {reducible terms}.
            let hit = f
                .iter_desc()
                .find(|(t, _)| self.rows.contains_key(*t))
                .map(|(t, c)| (t.clone(), c.clone()));
            match hit {
                None => return f,
                Some((t, c)) => {
                    let row = &self.rows[&t];
                    f.add_scaled(row, &-c);
                }
            }
        }
    }

    /// Gaussian insert. Returns true iff the rank grew.
    pub fn insert(&mut self, f: &LinCombo<T>) -> bool {
        let reduced = self.reduce(f);
        let Some(new_row) = reduced.monic() else {
            return false;
        };
        let lead = new_row.leading().expect("nonzero").0.clone();
        // Back-substitute the new row into every existing row that
        // mentions its leading term.
        let touched: Vec<T> = self
            .rows
            .iter()
            .filter(|(_, row)| row.contains_term(&lead))
            .map(|(k, _)| k.clone())
            .collect();
        for key in touched {
            let c = self.rows[&key].coeff(&lead);
            let row = self.rows.get_mut(&key).expect("present");
            row.add_scaled(&new_row, &-c);
        }
        self.rows.insert(lead, new_row);
        true
    }

    /// Membership in the span.
    pub fn contains(&self, f: &LinCombo<T>) -> bool {
        self.reduce(f).is_zero()
    }

    /// Reduced echelon bases are unique per span.
    pub fn same_span(&self, other: &Echelon<T>) -> bool {
        self.rows == other.rows
    }
}

/// An echelon that additionally tracks coordinates of every inserted vector
/// over an external index set, so members of the span can be expressed in
/// terms of the original inserted family.
#[derive(Clone, Debug, Default)]
pub struct CoordEchelon<T: Ord + Clone> {
    rows: BTreeMap<T, (LinCombo<T>, LinCombo<usize>)>,
}

impl<T: Ord + Clone> CoordEchelon<T> {
    pub fn new() -> Self {
        CoordEchelon { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `f` tagged with source index `idx`. Returns true on rank growth.
    pub fn insert(&mut self, f: &LinCombo<T>, idx: usize) -> bool {
        let mut vec = f.clone();
        let mut coords = LinCombo::single(idx);
        loop {
            let hit = vec
                .iter_desc()
                .find(|(t, _)| self.rows.contains_key(*t))
                .map(|(t, c)| (t.clone(), c.clone()));
            match hit {
                None => break,
                Some((t, c)) => {
                    let (row, row_coords) = &self.rows[&t];
                    vec.add_scaled(row, &-c.clone());
                    coords.add_scaled(row_coords, &-c);
                }
            }
        }
        let Some((_, lc)) = vec.leading() else { return false };
        let inv = Coeff::one() / lc.clone();
        let vec = vec.scaled(&inv);
        let coords = coords.scaled(&inv);
        let lead = vec.leading().expect("nonzero").0.clone();
        let touched: Vec<T> = self
            .rows
            .iter()
            .filter(|(_, (row, _))| row.contains_term(&lead))
            .map(|(k, _)| k.clone())
            .collect();
        for key in touched {
            let c = self.rows[&key].0.coeff(&lead);
            let entry = self.rows.get_mut(&key).expect("present");
            entry.0.add_scaled(&vec, &-c.clone());
            entry.1.add_scaled(&coords, &-c);
        }
        self.rows.insert(lead, (vec, coords));
        true
    }

    /// Writes `f` as a combination of the inserted vectors; `None` if `f`
    /// is outside the span. The result maps source indices to coefficients.
    pub fn express(&self, f: &LinCombo<T>) -> Option<LinCombo<usize>> {
        let mut vec = f.clone();
        let mut coords = LinCombo::zero();
        loop {
            let hit = vec
                .iter_desc()
                .find(|(t, _)| self.rows.contains_key(*t))
                .map(|(t, c)| (t.clone(), c.clone()));
            match hit {
                None => break,
                Some((t, c)) => {
                    let (row, row_coords) = &self.rows[&t];
                    vec.add_scaled(row, &-c.clone());
                    coords.add_scaled(row_coords, &c);
                }
            }
        }
        vec.is_zero().then_some(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q, qr};

    fn combo(pairs: &[(u32, i64)]) -> LinCombo<u32> {
        LinCombo::from_terms(pairs.iter().map(|&(t, c)| (t, q(c))))
    }

    #[test]
    fn insert_tracks_rank_and_reduces() {
        let mut e: Echelon<u32> = Echelon::new();
        assert!(e.insert(&combo(&[(3, 2), (1, 2)])));
        assert!(e.insert(&combo(&[(2, 1), (1, 1)])));
        // 3 + 1 again: dependent on the first row
        assert!(!e.insert(&combo(&[(3, 5), (1, 5)])));
        assert_eq!(e.rank(), 2);
        // rows are monic
        for row in e.rows() {
            assert_eq!(row.leading().unwrap().1, &q(1));
        }
        let r = e.reduce(&combo(&[(3, 1), (2, 1), (1, 3)]));
        // 3+2+3·1 − (3+1) − (2+1) = 1
        assert_eq!(r, combo(&[(1, 1)]));
        assert!(e.contains(&combo(&[(3, 1), (1, 1)])));
        assert!(!e.contains(&combo(&[(1, 1)])));
    }

    #[test]
    fn rows_fully_back_substituted() {
        let mut e: Echelon<u32> = Echelon::new();
        e.insert(&combo(&[(5, 1), (4, 1), (1, 1)]));
        e.insert(&combo(&[(4, 1), (1, 2)]));
        // The 5-row's tail must no longer contain 4.
        let row5 = e.row(&5).unwrap();
        assert!(!row5.contains_term(&4));
        // Span unchanged: both original vectors still reduce to zero.
        assert!(e.contains(&combo(&[(5, 1), (4, 1), (1, 1)])));
        assert!(e.contains(&combo(&[(4, 3), (1, 6)])));
    }

    #[test]
    fn same_span_is_representation_independent() {
        let mut a: Echelon<u32> = Echelon::new();
        let mut b: Echelon<u32> = Echelon::new();
        let v1 = combo(&[(3, 1), (2, 1)]);
        let v2 = combo(&[(2, 1), (1, 1)]);
        a.insert(&v1);
        a.insert(&v2);
        // Same span, different generating vectors (and scaled).
        b.insert(&v1.clone().plus(&v2).scaled(&qr(7, 3)));
        b.insert(&v2.clone().scaled(&q(-2)));
        assert!(a.same_span(&b));
        let mut c: Echelon<u32> = Echelon::new();
        c.insert(&v1);
        assert!(!a.same_span(&c));
    }

    #[test]
    fn coord_echelon_expresses_members() {
        let mut e: CoordEchelon<u32> = CoordEchelon::new();
        let fam = [combo(&[(3, 1), (1, 1)]), combo(&[(2, 1)]), combo(&[(3, 2), (2, 2)])];
        for (i, f) in fam.iter().enumerate() {
            e.insert(f, i);
        }
        let target = combo(&[(3, 3), (2, 1), (1, 3)]);
        let coords = e.express(&target).unwrap();
        // Recombine and compare.
        let mut back: LinCombo<u32> = LinCombo::zero();
        for (i, c) in coords.iter() {
            back.add_scaled(&fam[*i], c);
        }
        assert_eq!(back, target);
        assert!(e.express(&combo(&[(9, 1)])).is_none());
    }
}
