//! Graded alphabets: finite symbol sets E = ⊔ Eₙ with positive degrees.

use crate::error::Error;
use crate::Result;
use serde::Deserialize;
use std::collections::HashMap;
use std::fmt;

/// Identifier of a generator inside its alphabet.
///
/// The numeric value is the generator's *rank*: generators are sorted by
/// degree first, then by declaration order within equal degree. Comparing
/// two `GenId`s from the same alphabet therefore compares generators in
/// exactly the order the monomial orders use.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GenId(pub u32);

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    /// The grading |a| ≥ 1.
    pub degree: u64,
    /// Position in the total generator order (same as the GenId value).
    pub rank: u32,
}

/// A finite graded alphabet. Generators are stored in rank order.
#[derive(Clone, Debug)]
pub struct Alphabet {
    gens: Vec<Generator>,
    by_name: HashMap<String, GenId>,
}

#[derive(Deserialize)]
struct AlphabetFile {
    generators: Vec<GeneratorEntry>,
}

#[derive(Deserialize)]
struct GeneratorEntry {
    name: String,
    degree: u64,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    /// Builds an alphabet from `(name, degree)` pairs in declaration order.
    ///
    /// Ranks are assigned degree-first (stable within equal degree), so a
    /// declaration `x:1, a:3, y:1` yields ranks x < y < a.
    pub fn new<S: Into<String>>(entries: Vec<(S, u64)>) -> Result<Alphabet> {
        if entries.is_empty() {
            return Err(Error::BadAlphabet("alphabet must be nonempty".into()));
        }
        let mut gens: Vec<Generator> = entries
            .into_iter()
            .map(|(name, degree)| Generator { name: name.into(), degree, rank: 0 })
            .collect();
        for g in &gens {
            if g.degree == 0 {
                return Err(Error::BadAlphabet(format!(
                    "generator `{}` has degree 0; degrees must be ≥ 1",
                    g.name
                )));
            }
            if !valid_name(&g.name) {
                return Err(Error::BadAlphabet(format!(
                    "generator name `{}` is not a valid identifier",
                    g.name
                )));
            }
        }
        // Stable sort: within one degree, declaration order survives.
        gens.sort_by_key(|g| g.degree);
        let mut by_name = HashMap::new();
        for (i, g) in gens.iter_mut().enumerate() {
            g.rank = i as u32;
            if by_name.insert(g.name.clone(), GenId(i as u32)).is_some() {
                return Err(Error::BadAlphabet(format!("duplicate generator `{}`", g.name)));
            }
        }
        Ok(Alphabet { gens, by_name })
    }

    /// Parses the JSON alphabet format:
    /// `{"generators":[{"name":"x","degree":1}, ...]}`.
    pub fn from_json(text: &str) -> Result<Alphabet> {
        let file: AlphabetFile = serde_json::from_str(text)?;
        Alphabet::new(file.generators.into_iter().map(|e| (e.name, e.degree)).collect())
    }

    pub fn from_json_file(path: &std::path::Path) -> Result<Alphabet> {
        Alphabet::from_json(&std::fs::read_to_string(path)?)
    }

    /// Convenience: a single generator named `a` of degree 1.
    pub fn single() -> Alphabet {
        Alphabet::new(vec![("a", 1)]).expect("valid")
    }

    /// Convenience: two generators x < y, both of degree 1.
    pub fn xy() -> Alphabet {
        Alphabet::new(vec![("x", 1), ("y", 1)]).expect("valid")
    }

    /// Convenience: graded generators a1 < a2 < ... < a_k with |a_i| = i.
    pub fn graded(k: u64) -> Alphabet {
        Alphabet::new((1..=k).map(|i| (format!("a{i}"), i)).collect()).expect("valid")
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Generators in rank order.
    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn ids(&self) -> impl Iterator<Item = GenId> + '_ {
        (0..self.gens.len() as u32).map(GenId)
    }

    pub fn get(&self, id: GenId) -> &Generator {
        &self.gens[id.0 as usize]
    }

    pub fn degree(&self, id: GenId) -> u64 {
        self.gens[id.0 as usize].degree
    }

    pub fn name(&self, id: GenId) -> &str {
        &self.gens[id.0 as usize].name
    }

    pub fn lookup(&self, name: &str) -> Result<GenId> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.gens.iter().map(|g| format!("{}:{}", g.name, g.degree)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_follow_degree_then_declaration() {
        let a = Alphabet::new(vec![("x", 1), ("b", 2), ("y", 1), ("a", 2)]).unwrap();
        let names: Vec<&str> = a.generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["x", "y", "b", "a"]);
        assert!(a.lookup("x").unwrap() < a.lookup("y").unwrap());
        assert!(a.lookup("y").unwrap() < a.lookup("b").unwrap());
        assert!(a.lookup("b").unwrap() < a.lookup("a").unwrap());
    }

    #[test]
    fn degree_zero_rejected() {
        assert!(Alphabet::new(vec![("x", 0)]).is_err());
    }

    #[test]
    fn duplicates_rejected() {
        assert!(Alphabet::new(vec![("x", 1), ("x", 2)]).is_err());
    }

    #[test]
    fn bad_names_rejected() {
        assert!(Alphabet::new(vec![("1x", 1)]).is_err());
        assert!(Alphabet::new(vec![("x y", 1)]).is_err());
        assert!(Alphabet::new(vec![("", 1)]).is_err());
        assert!(Alphabet::new(vec![("_ok2", 1)]).is_ok());
    }

    #[test]
    fn json_roundtrip() {
        let a = Alphabet::from_json(
            r#"{"generators":[{"name":"x","degree":1},{"name":"y","degree":1}]}"#,
        )
        .unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.degree(a.lookup("y").unwrap()), 1);
    }

    #[test]
    fn graded_helper() {
        let a = Alphabet::graded(3);
        assert_eq!(a.name(GenId(2)), "a3");
        assert_eq!(a.degree(GenId(2)), 3);
    }
}
