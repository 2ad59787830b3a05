//! Text grammar for trees, binary trees and linear combinations.
//!
//! Rooted trees:   `TREE := NAME | NAME "(" TREE ("," TREE)* ")"`.
//! Binary trees:   `BIN  := NAME | "(" BIN "^" BIN ")"`.
//! Combinations:   `POLY := ["-"] TERM (("+"|"-") TERM)*` with
//!                 `TERM := [RAT "*"] TREE` and `RAT := INT ["/" INT]`.
//! Whitespace is insignificant everywhere; `0` denotes the zero polynomial.

use crate::alphabet::{Alphabet, GenId};
use crate::error::Error;
use crate::poly::{Coeff, LinCombo};
use crate::tree::{BinaryTree, PlanarTree, Tree, TreeNode};
use crate::Result;
use num_bigint::BigInt;
use num_traits::One;

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text.as_bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.as_bytes().get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        match self.peek() {
            Some(c) if c == b => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.err(format!("expected `{}`, found `{}`", b as char, c as char)),
            None => self.err(format!("expected `{}`, found end of input", b as char)),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn name(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        if start >= bytes.len() || !(bytes[start].is_ascii_alphabetic() || bytes[start] == b'_') {
            return self.err("expected a generator name");
        }
        let mut end = start + 1;
        while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_') {
            end += 1;
        }
        self.pos = end;
        Ok(&self.text[start..end])
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let mut end = start;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == start {
            return self.err("expected an integer");
        }
        self.pos = end;
        Ok(BigInt::parse_bytes(&bytes[start..end], 10).expect("digits"))
    }

    /// `INT ["/" INT]`, no sign.
    fn rational(&mut self) -> Result<Coeff> {
        let n = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.integer()?;
            if d == BigInt::from(0) {
                return self.err("zero denominator");
            }
            Ok(Coeff::new(n, d))
        } else {
            Ok(Coeff::from_integer(n))
        }
    }

    fn gen(&mut self, alphabet: &Alphabet) -> Result<GenId> {
        let at = self.pos;
        let name = self.name()?;
        alphabet.lookup(name).map_err(|_| Error::Parse {
            pos: at,
            msg: format!("unknown generator `{name}`"),
        })
    }

    fn tree(&mut self, alphabet: &Alphabet) -> Result<PlanarTree> {
        let g = self.gen(alphabet)?;
        let mut branches = Vec::new();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                branches.push(self.tree(alphabet)?);
                match self.bump() {
                    Some(b',') => continue,
                    Some(b')') => break,
                    Some(c) => {
                        self.pos -= 1;
                        return self.err(format!("expected `,` or `)`, found `{}`", c as char));
                    }
                    None => return self.err("expected `,` or `)`, found end of input"),
                }
            }
        }
        Ok(PlanarTree::b_plus(alphabet, g, branches))
    }

    fn binary(&mut self, alphabet: &Alphabet) -> Result<BinaryTree> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let left = self.binary(alphabet)?;
                self.expect(b'^')?;
                let right = self.binary(alphabet)?;
                self.expect(b')')?;
                Ok(BinaryTree::vee(left, right))
            }
            _ => {
                let g = self.gen(alphabet)?;
                Ok(BinaryTree::leaf(alphabet, g))
            }
        }
    }

    /// One signed term; `sign` is the context sign (+1/−1).
    fn poly_term(&mut self, alphabet: &Alphabet, negative: bool) -> Result<(PlanarTree, Coeff)> {
        self.skip_ws();
        let mut coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                // Tolerate both `2*t` and `2 t`.
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                }
                r
            }
            _ => Coeff::one(),
        };
        if negative {
            coeff = -coeff;
        }
        let tree = self.tree(alphabet)?;
        Ok((tree, coeff))
    }

    fn poly(&mut self, alphabet: &Alphabet) -> Result<LinCombo<PlanarTree>> {
        let mut out = LinCombo::zero();
        self.skip_ws();
        // Literal zero polynomial.
        if self.peek() == Some(b'0') {
            let save = self.pos;
            self.pos += 1;
            if self.at_end() {
                return Ok(out);
            }
            self.pos = save;
        }
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (t, c) = self.poly_term(alphabet, negative)?;
            out.add_term(t, c);
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                Some(c) => return self.err(format!("expected `+` or `-`, found `{}`", c as char)),
            }
        }
        Ok(out)
    }
}

pub fn parse_planar(alphabet: &Alphabet, text: &str) -> Result<PlanarTree> {
    let mut c = Cursor::new(text);
    let t = c.tree(alphabet)?;
    if !c.at_end() {
        return c.err("trailing input after tree");
    }
    Ok(t)
}

pub fn parse_nonplanar(alphabet: &Alphabet, text: &str) -> Result<Tree> {
    Ok(parse_planar(alphabet, text)?.forget_planarity())
}

pub fn parse_binary(alphabet: &Alphabet, text: &str) -> Result<BinaryTree> {
    let mut c = Cursor::new(text);
    let t = c.binary(alphabet)?;
    if !c.at_end() {
        return c.err("trailing input after tree");
    }
    Ok(t)
}

pub fn parse_planar_poly(alphabet: &Alphabet, text: &str) -> Result<LinCombo<PlanarTree>> {
    let mut c = Cursor::new(text);
    let p = c.poly(alphabet)?;
    if !c.at_end() {
        return c.err("trailing input after polynomial");
    }
    Ok(p)
}

pub fn parse_nonplanar_poly(alphabet: &Alphabet, text: &str) -> Result<LinCombo<Tree>> {
    Ok(parse_planar_poly(alphabet, text)?.map_terms(|t| t.forget_planarity()))
}

/// `NAME` or `NAME(b1,...,bk)`; works for both tree flavours.
pub fn format_tree<T: TreeNode>(alphabet: &Alphabet, t: &T) -> String {
    let mut s = String::new();
    fn walk<T: TreeNode>(alphabet: &Alphabet, t: &T, s: &mut String) {
        s.push_str(alphabet.name(t.root()));
        if !t.branches().is_empty() {
            s.push('(');
            for (i, b) in t.branches().iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                walk(alphabet, b, s);
            }
            s.push(')');
        }
    }
    walk(alphabet, t, &mut s);
    s
}

pub fn format_binary(alphabet: &Alphabet, t: &BinaryTree) -> String {
    match t {
        BinaryTree::Leaf { gen, .. } => alphabet.name(*gen).to_string(),
        BinaryTree::Node { left, right, .. } => {
            format!("({}^{})", format_binary(alphabet, left), format_binary(alphabet, right))
        }
    }
}

/// Formats a combination leading term first: `3/2*a(a) + a - 1/2*a(a,a)`.
pub fn format_poly<T, F>(p: &LinCombo<T>, fmt_term: F) -> String
where
    T: Ord + Clone,
    F: Fn(&T) -> String,
{
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (t, c)) in p.iter_desc().enumerate() {
        let neg = crate::poly::coeff_is_negative(c);
        let mag = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag.is_one() {
            out.push_str(&fmt_term(t));
        } else {
            out.push_str(&format!("{}*{}", mag, fmt_term(t)));
        }
    }
    out
}

pub fn format_tree_poly<T: TreeNode + Ord + Clone>(
    alphabet: &Alphabet,
    p: &LinCombo<T>,
) -> String {
    format_poly(p, |t| format_tree(alphabet, t))
}

pub fn format_binary_poly(alphabet: &Alphabet, p: &LinCombo<BinaryTree>) -> String {
    format_poly(p, |t| format_binary(alphabet, t))
}
