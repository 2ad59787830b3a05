//! Homogeneous spanning of two-sided magmatic ideals, leading-term ideals
//! T(I)ₙ with complements O(I)ₙ, and canonical forms Can(f, I).
//!
//! Ideals are generated by homogeneous schema instances and closed under
//! single multiplications by basis trees on both sides. Every product
//! strictly raises the degree, so one ascending pass per degree already
//! reaches the fixpoint (the tests re-run a closure round and assert the
//! rank is stable).

use crate::alphabet::Alphabet;
use crate::echelon::Echelon;
use crate::error::Error;
use crate::poly::{q, qr, Graded, LinCombo};
use crate::products;
use crate::tree::{PlanarTree, Tree, TreeNode};
use crate::Result;
use rand::Rng;

/// Resource caps for the spanning machinery.
#[derive(Clone, Copy, Debug)]
pub struct SpanConfig {
    /// Max number of generator-schema instances seeded overall.
    pub max_seed_instances: usize,
    /// Max number of terms in any single polynomial handled.
    pub max_terms: usize,
}

impl Default for SpanConfig {
    fn default() -> Self {
        SpanConfig { max_seed_instances: 1_000_000, max_terms: 1_000_000 }
    }
}

/// Per-degree reduced echelon bases of an ideal up to a degree bound.
#[derive(Clone, Debug)]
pub struct SpanResult<T: Ord + Clone> {
    pub max_degree: u64,
    /// Indexed by degree; index 0 is an empty placeholder.
    echelons: Vec<Echelon<T>>,
}

impl<T: Ord + Clone + Graded> SpanResult<T> {
    pub fn echelon(&self, n: u64) -> &Echelon<T> {
        &self.echelons[n as usize]
    }

    pub fn rank(&self, n: u64) -> usize {
        self.echelons[n as usize].rank()
    }

    /// T(I)ₙ as a sorted list.
    pub fn leading_terms(&self, n: u64) -> Vec<T> {
        self.echelons[n as usize].leading_terms().cloned().collect()
    }

    pub fn is_leading(&self, t: &T) -> bool {
        let n = t.grade();
        n <= self.max_degree && self.echelons[n as usize].is_leading(t)
    }

    /// O(I)ₙ: the given degree-n basis elements that are not leading terms
    /// of the ideal (input order preserved).
    pub fn complement(&self, all_of_degree: &[T]) -> Vec<T> {
        all_of_degree.iter().filter(|t| !self.is_leading(t)).cloned().collect()
    }
}

/// Generic saturation engine: works for any graded carrier with two-sided
/// multiplication by basis elements.
pub fn span_ideal_generic<T, B, S, L, R>(
    max_degree: u64,
    cfg: &SpanConfig,
    basis: B,
    seeds: S,
    left_mul: L,
    right_mul: R,
) -> Result<SpanResult<T>>
where
    T: Ord + Clone + Graded,
    B: Fn(u64) -> Vec<T>,
    S: Fn(u64) -> Vec<LinCombo<T>>,
    L: Fn(&T, &LinCombo<T>) -> LinCombo<T>,
    R: Fn(&LinCombo<T>, &T) -> LinCombo<T>,
{
    if max_degree < 1 {
        return Err(Error::InvalidArgument("max degree must be ≥ 1".into()));
    }
    let mut echelons = vec![Echelon::new(); (max_degree + 1) as usize];
    let mut seeded = 0usize;
    for n in 1..=max_degree {
        let mut inserted = 0usize;
        for s in seeds(n) {
            seeded += 1;
            if seeded > cfg.max_seed_instances {
                return Err(Error::CapExceeded {
                    what: "generator-schema instances".into(),
                    limit: cfg.max_seed_instances,
                });
            }
            check_terms(&s, cfg)?;
            debug_assert!(s.is_zero() || s.homogeneous_degree() == Some(n));
            if echelons[n as usize].insert(&s) {
                inserted += 1;
            }
        }
        for m in 1..n {
            let k = n - m;
            let rows: Vec<LinCombo<T>> = echelons[m as usize].rows().cloned().collect();
            for t in basis(k) {
                for row in &rows {
                    for prod in [left_mul(&t, row), right_mul(row, &t)] {
                        check_terms(&prod, cfg)?;
                        if echelons[n as usize].insert(&prod) {
                            inserted += 1;
                        }
                    }
                }
            }
        }
        log::debug!("degree {n}: rank {} ({} new rows)", echelons[n as usize].rank(), inserted);
    }
    Ok(SpanResult { max_degree, echelons })
}

fn check_terms<T: Ord + Clone>(p: &LinCombo<T>, cfg: &SpanConfig) -> Result<()> {
    if p.len() > cfg.max_terms {
        return Err(Error::CapExceeded { what: "terms per polynomial".into(), limit: cfg.max_terms });
    }
    Ok(())
}

/// Runs one extra closure round over a finished span; true iff any rank
/// grows (i.e. the span was NOT saturated). Used by the fixpoint tests.
pub fn extra_round_grows<T, B, L, R>(
    span: &SpanResult<T>,
    basis: B,
    left_mul: L,
    right_mul: R,
) -> bool
where
    T: Ord + Clone + Graded,
    B: Fn(u64) -> Vec<T>,
    L: Fn(&T, &LinCombo<T>) -> LinCombo<T>,
    R: Fn(&LinCombo<T>, &T) -> LinCombo<T>,
{
    let mut echelons = span.echelons.clone();
    let mut grew = false;
    for n in 1..=span.max_degree {
        for m in 1..n {
            let k = n - m;
            let rows: Vec<LinCombo<T>> = echelons[m as usize].rows().cloned().collect();
            for t in basis(k) {
                for row in &rows {
                    if echelons[n as usize].insert(&left_mul(&t, row))
                        || echelons[n as usize].insert(&right_mul(row, &t))
                    {
                        grew = true;
                    }
                }
            }
        }
    }
    grew
}

// ---------------------------------------------------------------------------
// Generator schemas
// ---------------------------------------------------------------------------

/// Pre-Lie relator on the planar carrier:
/// (σ∘↘τ)∘↘ρ − σ∘↘(τ∘↘ρ) − (τ∘↘σ)∘↘ρ + τ∘↘(σ∘↘ρ).
pub fn pl_instance(s: &PlanarTree, t: &PlanarTree, r: &PlanarTree) -> LinCombo<PlanarTree> {
    use products::left_butcher as lb;
    let mut out = LinCombo::zero();
    out.add_term(lb(&lb(s, t), r), q(1));
    out.add_term(lb(s, &lb(t, r)), q(-1));
    out.add_term(lb(&lb(t, s), r), q(-1));
    out.add_term(lb(t, &lb(s, r)), q(1));
    out
}

/// Weighted anti-symmetry on the planar carrier: |σ| σ∘↘τ + |τ| τ∘↘σ.
pub fn was_instance(s: &PlanarTree, t: &PlanarTree) -> LinCombo<PlanarTree> {
    let mut out = LinCombo::zero();
    out.add_term(products::left_butcher(s, t), q(s.degree() as i64));
    out.add_term(products::left_butcher(t, s), q(t.degree() as i64));
    out
}

/// Non-planar ideal generator: |s|(s→t) + |t|(t→s).
pub fn i_instance(s: &Tree, t: &Tree) -> LinCombo<Tree> {
    let mut out = products::graft(s, t).scaled(&q(s.degree() as i64));
    out.add_scaled(&products::graft(t, s), &q(t.degree() as i64));
    out
}

/// Planar ideal selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PlanarIdeal {
    /// J: pre-Lie relators only.
    J,
    /// J′ = J + weighted anti-symmetry.
    JPrime,
}

/// Spans the planar ideal J or J′ over all degrees ≤ `max_degree`.
pub fn span_planar(
    alphabet: &Alphabet,
    kind: PlanarIdeal,
    max_degree: u64,
    cfg: &SpanConfig,
) -> Result<SpanResult<PlanarTree>> {
    let lists = crate::enumerate::planar_up_to(alphabet, max_degree)?;
    let by_degree = |d: u64| -> &[PlanarTree] {
        if d >= 1 && d <= max_degree {
            &lists[(d - 1) as usize]
        } else {
            &[]
        }
    };
    let seeds = |n: u64| {
        let mut out = Vec::new();
        for a in 1..n {
            for b in 1..(n - a + 1) {
                let c = n - a - b;
                for s in by_degree(a) {
                    for t in by_degree(b) {
                        if c >= 1 {
                            for r in by_degree(c) {
                                out.push(pl_instance(s, t, r));
                            }
                        } else if kind == PlanarIdeal::JPrime {
                            out.push(was_instance(s, t));
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
        |t, row| row.map_linear(|s| LinCombo::single(products::left_butcher(t, s))),
        |row, t| row.map_linear(|s| LinCombo::single(products::left_butcher(s, t))),
    )
}

/// Spans the non-planar ideal I over all degrees ≤ `max_degree`.
pub fn span_nonplanar(
    alphabet: &Alphabet,
    max_degree: u64,
    cfg: &SpanConfig,
) -> Result<SpanResult<Tree>> {
    let lists = crate::enumerate::nonplanar_up_to(alphabet, max_degree)?;
    let by_degree = |d: u64| -> &[Tree] {
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
            for s in by_degree(a) {
                for t in by_degree(b) {
                    out.push(i_instance(s, t));
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
        |t, row| row.map_linear(|s| products::graft(t, s)),
        |row, t| row.map_linear(|s| products::graft(s, t)),
    )
}

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

/// Can(f, I): the reduction loop driven by the leading term. While f ≠ 0,
/// strip T(f) into the output when it is not a leading term of the ideal;
/// otherwise subtract lc(f)·g for the (monic) ideal row g with T(g) = T(f).
pub fn can<T: Ord + Clone + Graded>(
    f: &LinCombo<T>,
    span: &SpanResult<T>,
) -> Result<LinCombo<T>> {
    if let Some(d) = f.max_degree() {
        if d > span.max_degree {
            return Err(Error::DegreeOutOfRange { requested: d, available: span.max_degree });
        }
    }
    let mut f = f.clone();
    let mut h = LinCombo::zero();
    while let Some((t, c)) = f.leading().map(|(t, c)| (t.clone(), c.clone())) {
        let n = t.grade();
        match span.echelon(n).row(&t) {
            Some(g) => f.add_scaled(g, &-c),
            None => {
                h.add_term(t.clone(), c);
                f.remove_term(&t);
            }
        }
    }
    Ok(h)
}

/// Same loop, but each reducer is a *random* ideal element with the
/// required leading term: the echelon row plus a random combination of
/// rows with strictly smaller leading terms. Canonical forms must not
/// depend on these choices.
pub fn can_randomized<T: Ord + Clone + Graded, R: Rng>(
    f: &LinCombo<T>,
    span: &SpanResult<T>,
    rng: &mut R,
) -> Result<LinCombo<T>> {
    if let Some(d) = f.max_degree() {
        if d > span.max_degree {
            return Err(Error::DegreeOutOfRange { requested: d, available: span.max_degree });
        }
    }
    let mut f = f.clone();
    let mut h = LinCombo::zero();
    while let Some((t, c)) = f.leading().map(|(t, c)| (t.clone(), c.clone())) {
        let n = t.grade();
        match span.echelon(n).row(&t) {
            Some(row) => {
                let mut g = row.clone();
                let lower: Vec<&LinCombo<T>> = span
                    .echelon(n)
                    .rows()
                    .filter(|r| r.leading().map(|(lt, _)| lt < &t).unwrap_or(false))
                    .collect();
                if !lower.is_empty() {
                    for _ in 0..2 {
                        let j = rng.gen_range(0..lower.len());
                        let num = rng.gen_range(-3i64..=3);
                        let den = rng.gen_range(1i64..=3);
                        g.add_scaled(lower[j], &qr(num, den));
                    }
                }
                debug_assert!(g.leading().map(|(lt, _)| *lt == t).unwrap_or(false));
                f.add_scaled(&g, &-c);
            }
            None => {
                h.add_term(t.clone(), c);
                f.remove_term(&t);
            }
        }
    }
    Ok(h)
}

/// Membership test: Can(f, I) = 0 iff f ∈ I.
pub fn contains<T: Ord + Clone + Graded>(f: &LinCombo<T>, span: &SpanResult<T>) -> Result<bool> {
    Ok(can(f, span)?.is_zero())
}

/// s̄ ▷* t̄ = Can(s → t, I): the quotient pre-Lie product.
pub fn quotient_prelie_product(
    f: &LinCombo<Tree>,
    g: &LinCombo<Tree>,
    span: &SpanResult<Tree>,
) -> Result<LinCombo<Tree>> {
    can(&products::graft_poly(f, g), span)
}

/// [s̄, t̄] = Can(|s|(s → t), I): the quotient Lie bracket (first argument
/// must be homogeneous so |s| is defined).
pub fn quotient_bracket(
    f: &LinCombo<Tree>,
    g: &LinCombo<Tree>,
    span: &SpanResult<Tree>,
) -> Result<LinCombo<Tree>> {
    let d = f
        .homogeneous_degree()
        .ok_or_else(|| Error::NotHomogeneous("bracket weight needs |s|".into()))?;
    can(&products::graft_poly(f, g).scaled(&q(d as i64)), span)
}
