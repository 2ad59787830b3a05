//! Words in the free associative algebra, the weighted products ▷ and ▶,
//! the grading automorphism α, the morphism Φ from non-planar trees, and
//! Lie monomial bases extracted from O(I).

use crate::alphabet::{Alphabet, GenId};
use crate::echelon::{CoordEchelon, Echelon};
use crate::error::Error;
use crate::ideal::SpanResult;
use crate::poly::{q, qr, Coeff, Graded, LinCombo};
use crate::products;
use crate::psi::minimal_branch_split;
use crate::tree::{Tree, TreeNode};
use crate::Result;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

/// A noncommutative monomial: a nonempty word in the generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NcWord {
    gens: Vec<GenId>,
    degree: u64,
}

impl NcWord {
    pub fn gen(alphabet: &Alphabet, g: GenId) -> Self {
        NcWord { gens: vec![g], degree: alphabet.degree(g) }
    }

    pub fn from_gens(alphabet: &Alphabet, gens: Vec<GenId>) -> Self {
        assert!(!gens.is_empty(), "words are nonempty");
        let degree = gens.iter().map(|&g| alphabet.degree(g)).sum();
        NcWord { gens, degree }
    }

    pub fn letters(&self) -> &[GenId] {
        &self.gens
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        self.gens.iter().map(|&g| alphabet.name(g)).collect::<Vec<_>>().join(".")
    }
}

// Degree first, then length, then left-to-right generator rank.
impl Ord for NcWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.gens.len().cmp(&other.gens.len()))
            .then_with(|| self.gens.cmp(&other.gens))
    }
}

impl PartialOrd for NcWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Graded for NcWord {
    fn grade(&self) -> u64 {
        self.degree
    }
}

pub type NcPoly = LinCombo<NcWord>;

pub fn concat(a: &NcWord, b: &NcWord) -> NcWord {
    let mut gens = a.gens.clone();
    gens.extend_from_slice(&b.gens);
    NcWord { gens, degree: a.degree + b.degree }
}

pub fn concat_poly(a: &NcPoly, b: &NcPoly) -> NcPoly {
    crate::poly::bilinear(a, b, |x, y| LinCombo::single(concat(x, y)))
}

/// [a, b] = ab − ba.
pub fn bracket(a: &NcPoly, b: &NcPoly) -> NcPoly {
    let mut out = concat_poly(a, b);
    out.sub_assign(&concat_poly(b, a));
    out
}

fn weight_of(a: &NcPoly, what: &str) -> Result<u64> {
    a.homogeneous_degree()
        .filter(|&d| d > 0)
        .ok_or_else(|| Error::NotHomogeneous(format!("{what} needs a homogeneous argument")))
}

/// x ▷ y = (1/|x|)[x, y] for homogeneous x.
pub fn rhd(a: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
    if a.is_zero() || b.is_zero() {
        return Ok(LinCombo::zero());
    }
    let d = weight_of(a, "x ▷ y")?;
    Ok(bracket(a, b).scaled(&qr(1, d as i64)))
}

/// x ▶ y = (|y|/(|x|+|y|))[x, y] for homogeneous x and y.
pub fn black_rhd(a: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
    if a.is_zero() || b.is_zero() {
        return Ok(LinCombo::zero());
    }
    let dx = weight_of(a, "x ▶ y")?;
    let dy = weight_of(b, "x ▶ y")?;
    Ok(bracket(a, b).scaled(&qr(dy as i64, (dx + dy) as i64)))
}

/// α scales each homogeneous component by its degree.
pub fn alpha(p: &NcPoly) -> NcPoly {
    let mut out = LinCombo::zero();
    for (w, c) in p.iter() {
        out.add_term(w.clone(), c.clone() * q(w.degree() as i64));
    }
    out
}

/// [x, y]_▷ = x ▷ y − y ▷ x = ((|x|+|y|)/(|x||y|))[x, y].
pub fn bracket_rhd(a: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
    let mut out = rhd(a, b)?;
    out.sub_assign(&rhd(b, a)?);
    Ok(out)
}

/// Memoized Φ: the unique pre-Lie morphism with Φ(•_a) = a, i.e.
/// Φ(s → t) = Φ(s) ▷ Φ(t). For a non-leaf t with minimal branch split
/// (t₁, t₂), the grafting t₁ → t₂ contains t with coefficient exactly 1
/// (only the root attachment restores the root branch count), so
/// Φ(t) = Φ(t₁) ▷ Φ(t₂) − Σ_{s ≠ t} c_s Φ(s). Every correction term has a
/// smaller root branch count at equal degree, so the recursion terminates.
pub struct Phi<'a> {
    alphabet: &'a Alphabet,
    memo: HashMap<Tree, NcPoly>,
}

impl<'a> Phi<'a> {
    pub fn new(alphabet: &'a Alphabet) -> Self {
        Phi { alphabet, memo: HashMap::new() }
    }

    pub fn of(&mut self, t: &Tree) -> NcPoly {
        if let Some(p) = self.memo.get(t) {
            return p.clone();
        }
        let p = match minimal_branch_split(t) {
            None => LinCombo::single(NcWord::gen(self.alphabet, t.root())),
            Some((t1, t2)) => {
                let a = self.of(&t1);
                let b = self.of(&t2);
                let mut p = rhd(&a, &b).expect("Φ images are homogeneous");
                for (s, c) in products::graft(&t1, &t2).iter() {
                    if s == t {
                        debug_assert!(c.is_one());
                        continue;
                    }
                    let ps = self.of(s);
                    p.add_scaled(&ps, &-c.clone());
                }
                p
            }
        };
        self.memo.insert(t.clone(), p.clone());
        p
    }

    pub fn of_poly(&mut self, f: &LinCombo<Tree>) -> NcPoly {
        let mut out = LinCombo::zero();
        for (t, c) in f.iter() {
            out.add_scaled(&self.of(t), c);
        }
        out
    }
}

/// One-shot Φ(t).
pub fn phi(alphabet: &Alphabet, t: &Tree) -> NcPoly {
    Phi::new(alphabet).of(t)
}

// ---------------------------------------------------------------------------
// Left-normed brackets and dimensions
// ---------------------------------------------------------------------------

/// [[..[g₁, g₂], g₃].., g_k] as an associative polynomial (k ≥ 1).
pub fn left_normed(alphabet: &Alphabet, gens: &[GenId]) -> NcPoly {
    assert!(!gens.is_empty());
    let mut acc = LinCombo::single(NcWord::gen(alphabet, gens[0]));
    for &g in &gens[1..] {
        acc = bracket(&acc, &LinCombo::single(NcWord::gen(alphabet, g)));
    }
    acc
}

/// "[[x,y],x]"-style label for a left-normed bracket.
pub fn left_normed_label(alphabet: &Alphabet, gens: &[GenId]) -> String {
    let mut s = alphabet.name(gens[0]).to_string();
    for &g in &gens[1..] {
        s = format!("[{},{}]", s, alphabet.name(g));
    }
    s
}

/// All generator sequences of total degree n, lexicographic in generator
/// rank position by position.
pub fn gen_sequences(alphabet: &Alphabet, n: u64) -> Vec<Vec<GenId>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(al: &Alphabet, left: u64, cur: &mut Vec<GenId>, out: &mut Vec<Vec<GenId>>) {
        if left == 0 {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            return;
        }
        for g in al.ids() {
            let d = al.degree(g);
            if d <= left {
                cur.push(g);
                go(al, left - d, cur, out);
                cur.pop();
            }
        }
    }
    go(alphabet, n, &mut cur, &mut out);
    out
}

fn mobius(mut k: u64) -> i64 {
    let mut mu = 1i64;
    let mut p = 2;
    while p * p <= k {
        if k % p == 0 {
            k /= p;
            if k % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if k > 1 {
        mu = -mu;
    }
    mu
}

/// dim Lₙ by the graded necklace formula: with p(t) = Σ m_d t^d counting
/// generators by degree, write Σ_j p(t)^j/j = Σ_m (a_m/m) t^m; then
/// n·dim Lₙ = Σ_{d|n} μ(n/d)·a_d.
pub fn witt_dimension(alphabet: &Alphabet, n: u64) -> u64 {
    let n = n as usize;
    let mut p = vec![Coeff::zero(); n + 1];
    for g in alphabet.ids() {
        let d = alphabet.degree(g) as usize;
        if d <= n {
            p[d] += Coeff::one();
        }
    }
    // a[m] = m·[t^m] Σ_j p^j / j, truncated at degree n.
    let mut a = vec![Coeff::zero(); n + 1];
    let mut power = p.clone();
    for j in 1..=n {
        for (m, c) in power.iter().enumerate() {
            a[m] += c.clone() * qr(m as i64, j as i64);
        }
        // power ← power·p, truncated.
        let mut next = vec![Coeff::zero(); n + 1];
        for i in 0..=n {
            if power[i].is_zero() {
                continue;
            }
            for (d, c) in p.iter().enumerate() {
                if i + d <= n && !c.is_zero() {
                    next[i + d] += power[i].clone() * c.clone();
                }
            }
        }
        power = next;
    }
    let mut total = Coeff::zero();
    for d in 1..=n {
        if n % d == 0 {
            total += q(mobius((n / d) as u64)) * a[d].clone();
        }
    }
    let ell = total / q(n as i64);
    assert!(ell.is_integer() && !ell.is_negative(), "necklace count must be a natural number");
    ell.to_integer().try_into().expect("dimension fits in u64")
}

/// dim Lₙ computed as the rank of the left-normed bracket span,
/// cross-checked against the necklace formula.
pub fn lie_dimension(alphabet: &Alphabet, n: u64) -> Result<usize> {
    let mut ech = Echelon::new();
    for seq in gen_sequences(alphabet, n) {
        ech.insert(&left_normed(alphabet, &seq));
    }
    let rank = ech.rank();
    let expected = witt_dimension(alphabet, n) as usize;
    if rank != expected {
        return Err(Error::RankDefect(format!(
            "degree {n}: left-normed rank {rank} ≠ necklace dimension {expected}"
        )));
    }
    Ok(rank)
}

// ---------------------------------------------------------------------------
// Lie monomial bases
// ---------------------------------------------------------------------------

/// B̃ₙ = {Φ(t) : t ∈ O(I)ₙ}. Fails loudly if the images are dependent, miss
/// the expected dimension, or leave the Lie subspace.
pub fn lie_monomial_basis(
    alphabet: &Alphabet,
    n: u64,
    span: &SpanResult<Tree>,
) -> Result<Vec<(Tree, NcPoly)>> {
    if n > span.max_degree {
        return Err(Error::DegreeOutOfRange { requested: n, available: span.max_degree });
    }
    let all = crate::enumerate::nonplanar_by_degree(alphabet, n)?;
    let o = span.complement(&all);
    let mut phi = Phi::new(alphabet);
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for t in o {
        let p = phi.of(&t);
        if !ech.insert(&p) {
            return Err(Error::RankDefect(format!(
                "degree {n}: Φ images of O(I) are linearly dependent"
            )));
        }
        out.push((t, p));
    }
    let expected = lie_dimension(alphabet, n)?;
    if out.len() != expected {
        return Err(Error::RankDefect(format!(
            "degree {n}: |O(I)| = {} but dim L = {expected}",
            out.len()
        )));
    }
    let mut lie_span = Echelon::new();
    for seq in gen_sequences(alphabet, n) {
        lie_span.insert(&left_normed(alphabet, &seq));
    }
    for (t, p) in &out {
        if !lie_span.contains(p) {
            return Err(Error::RankDefect(format!("Φ({t:?}) is not a Lie element")));
        }
    }
    Ok(out)
}

/// Rewrites degree-n Lie elements as combinations of left-normed brackets
/// for display.
pub struct LieRenderer {
    seqs: Vec<Vec<GenId>>,
    coords: CoordEchelon<NcWord>,
}

impl LieRenderer {
    pub fn new(alphabet: &Alphabet, n: u64) -> Self {
        let seqs = gen_sequences(alphabet, n);
        let mut coords = CoordEchelon::new();
        for (i, seq) in seqs.iter().enumerate() {
            coords.insert(&left_normed(alphabet, seq), i);
        }
        LieRenderer { seqs, coords }
    }

    /// None when p is not in the degree-n Lie component.
    pub fn render(&self, alphabet: &Alphabet, p: &NcPoly) -> Option<String> {
        let expr = self.coords.express(p)?;
        if expr.is_zero() {
            return Some("0".to_string());
        }
        Some(crate::parse::format_poly(&expr, |i| {
            left_normed_label(alphabet, &self.seqs[*i])
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate;
    use crate::ideal::{span_nonplanar, SpanConfig};
    use crate::parse::parse_nonplanar;

    fn w(al: &Alphabet, names: &[&str]) -> NcPoly {
        let gens = names.iter().map(|n| al.lookup(n).unwrap()).collect();
        LinCombo::single(NcWord::from_gens(al, gens))
    }

    #[test]
    fn word_order_is_degree_length_lex() {
        let al = Alphabet::graded(2);
        let a1 = w(&al, &["a1"]);
        let a2 = w(&al, &["a2"]);
        let a11 = w(&al, &["a1", "a1"]);
        // a1 < a2 (degree 1 < 2), a2 < a1.a1 (same degree, shorter first).
        let (x, _) = a1.leading().unwrap();
        let (y, _) = a2.leading().unwrap();
        let (z, _) = a11.leading().unwrap();
        assert!(x < y && y < z);
    }

    #[test]
    fn bracket_and_rhd_basics() {
        let al = Alphabet::xy();
        let x = w(&al, &["x"]);
        let y = w(&al, &["y"]);
        let xy = bracket(&x, &y);
        let mut expect = w(&al, &["x", "y"]);
        expect.sub_assign(&w(&al, &["y", "x"]));
        assert_eq!(xy, expect);
        assert_eq!(rhd(&x, &y).unwrap(), xy);
        // x ▶ y = (1/2)[x,y] on unit degrees.
        assert_eq!(black_rhd(&x, &y).unwrap(), xy.clone().scaled(&qr(1, 2)));
        // [x,y]_▷ = 2[x,y] on unit degrees.
        assert_eq!(bracket_rhd(&x, &y).unwrap(), xy.scaled(&q(2)));
    }

    #[test]
    fn alpha_intertwines_the_two_products() {
        // α(x ▶ y) = α(x) ▷ α(y) for homogeneous x, y.
        let al = Alphabet::graded(2);
        let x = bracket(&w(&al, &["a1"]), &w(&al, &["a2"])); // degree 3
        let y = w(&al, &["a2"]); // degree 2
        let lhs = alpha(&black_rhd(&x, &y).unwrap());
        let rhs = rhd(&alpha(&x), &alpha(&y)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rhd_rejects_inhomogeneous_weights() {
        let al = Alphabet::graded(2);
        let mut mixed = w(&al, &["a1"]);
        mixed.add_assign(&w(&al, &["a2"]));
        assert!(matches!(rhd(&mixed, &w(&al, &["a1"])), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn phi_goldens() {
        let al = Alphabet::xy();
        let x = w(&al, &["x"]);
        let y = w(&al, &["y"]);
        let xy = bracket(&x, &y);
        assert_eq!(phi(&al, &parse_nonplanar(&al, "y(x)").unwrap()), xy);
        assert_eq!(
            phi(&al, &parse_nonplanar(&al, "y(y(x))").unwrap()),
            bracket(&xy, &y).scaled(&qr(1, 2))
        );
        assert_eq!(
            phi(&al, &parse_nonplanar(&al, "y(x,x)").unwrap()),
            bracket(&x, &xy)
        );

        let al = Alphabet::graded(2);
        let a12 = bracket(&w(&al, &["a1"]), &w(&al, &["a2"]));
        assert_eq!(phi(&al, &parse_nonplanar(&al, "a2(a1)").unwrap()), a12);
        assert_eq!(
            phi(&al, &parse_nonplanar(&al, "a1(a2(a1))").unwrap()),
            bracket(&a12, &w(&al, &["a1"])).scaled(&qr(1, 3))
        );
    }

    #[test]
    fn phi_is_a_prelie_morphism() {
        let al = Alphabet::xy();
        let mut phi = Phi::new(&al);
        let trees: Vec<Tree> = (1..=3)
            .flat_map(|n| enumerate::nonplanar_by_degree(&al, n).unwrap())
            .collect();
        for s in &trees {
            for t in &trees {
                if s.degree() + t.degree() > 4 {
                    continue;
                }
                let lhs = phi.of_poly(&products::graft(s, t));
                let rhs = rhd(&phi.of(s), &phi.of(t)).unwrap();
                assert_eq!(lhs, rhs, "Φ(s→t) ≠ Φ(s)▷Φ(t) for {s:?}, {t:?}");
            }
        }
    }

    #[test]
    fn dimensions_by_necklace_and_rank() {
        let single = Alphabet::single();
        assert_eq!(
            (1..=5).map(|n| witt_dimension(&single, n)).collect::<Vec<_>>(),
            vec![1, 0, 0, 0, 0]
        );
        let xy = Alphabet::xy();
        assert_eq!(
            (1..=5).map(|n| witt_dimension(&xy, n)).collect::<Vec<_>>(),
            vec![2, 1, 2, 3, 6]
        );
        let g2 = Alphabet::graded(2);
        assert_eq!(
            (1..=5).map(|n| witt_dimension(&g2, n)).collect::<Vec<_>>(),
            vec![1, 1, 1, 1, 2]
        );
        for n in 1..=5 {
            assert_eq!(lie_dimension(&xy, n).unwrap(), witt_dimension(&xy, n) as usize);
            assert_eq!(lie_dimension(&g2, n).unwrap(), witt_dimension(&g2, n) as usize);
        }
    }

    #[test]
    fn lie_basis_small_degrees() {
        let al = Alphabet::xy();
        let span = span_nonplanar(&al, 4, &SpanConfig::default()).unwrap();
        let counts: Vec<usize> =
            (1..=4).map(|n| lie_monomial_basis(&al, n, &span).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 1, 2, 3]);

        // Degree 4, after monic normalization, is exactly the three
        // left-normed brackets [[[x,y],x],x], [[[x,y],x],y], [[[x,y],y],y].
        let x = al.lookup("x").unwrap();
        let y = al.lookup("y").unwrap();
        let targets: Vec<NcPoly> = [
            vec![x, y, x, x],
            vec![x, y, x, y],
            vec![x, y, y, y],
        ]
        .into_iter()
        .map(|seq| left_normed(&al, &seq).monic().unwrap())
        .collect();
        let basis = lie_monomial_basis(&al, 4, &span).unwrap();
        let got: Vec<NcPoly> = basis.iter().map(|(_, p)| p.monic().unwrap()).collect();
        for p in &got {
            assert!(targets.contains(p), "unexpected basis element");
        }
        assert_eq!(got.len(), targets.len());
    }

    #[test]
    fn renderer_round_trips_left_normed_brackets() {
        let al = Alphabet::xy();
        let r = LieRenderer::new(&al, 3);
        let x = al.lookup("x").unwrap();
        let y = al.lookup("y").unwrap();
        let p = left_normed(&al, &[x, y, x]);
        let s = r.render(&al, &p).unwrap();
        assert_eq!(s, "[[x,y],x]");
        // A non-Lie element renders as None.
        let notlie = w(&al, &["x", "y", "x"]);
        assert!(r.render(&al, &notlie).is_none());
    }

    #[test]
    fn degree_four_bracket_identity() {
        // [[[x,y],x],y] = [[[x,y],y],x]: why the degree-4 basis has three
        // elements rather than four.
        let al = Alphabet::xy();
        let x = al.lookup("x").unwrap();
        let y = al.lookup("y").unwrap();
        assert_eq!(left_normed(&al, &[x, y, x, y]), left_normed(&al, &[x, y, y, x]));
    }
}
