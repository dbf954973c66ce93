use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Generator, GroupError};

/// A possibly unreduced word in the letters `X ∪ X^-1`.
///
/// Text syntax: letters separated by `.`, each `id`, `id^-1` or `id^k` for an
/// integer `k` (expanded). `e` and the empty string denote the empty word.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn new(letters: Vec<Generator>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Generator::inverse_of).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    pub fn power(&self, k: u64) -> Word {
        let mut v = Vec::with_capacity(self.0.len() * k as usize);
        for _ in 0..k {
            v.extend(self.0.iter().cloned());
        }
        Word(v)
    }

    pub fn parse(s: &str) -> Result<Word, GroupError> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Word::empty());
        }
        let mut out = Vec::new();
        for token in s.split('.') {
            let (id, exp) = match token.split_once('^') {
                Some((id, exp)) => {
                    let k: i64 = exp
                        .parse()
                        .map_err(|_| GroupError::BadEncoding(String::from(token)))?;
                    (id, k)
                }
                None => (token, 1),
            };
            if id.is_empty() || !id.chars().all(|c| c.is_ascii_alphanumeric() || c == '\'') {
                return Err(GroupError::BadEncoding(String::from(token)));
            }
            let g = Generator {
                id: String::from(id),
                inverse: exp < 0,
            };
            for _ in 0..exp.unsigned_abs() {
                out.push(g.clone());
            }
        }
        Ok(Word(out))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_exponents() {
        let w = Word::parse("Ax^3.Ap^-1").unwrap();
        assert_eq!(w.len(), 4);
        assert!(w.letters()[3].inverse);
        assert_eq!(w.to_string(), "Ax.Ax.Ax.Ap^-1");
    }

    #[test]
    fn empty_word() {
        assert!(Word::parse("e").unwrap().is_empty());
        assert_eq!(Word::empty().to_string(), "e");
    }

    #[test]
    fn rejects_garbage() {
        assert!(Word::parse("Ax^x").is_err());
        assert!(Word::parse("A x").is_err());
        assert!(Word::parse("Ax..Ap").is_err());
    }

    #[test]
    fn inverse_reverses() {
        let w = Word::parse("a.b^-1").unwrap();
        assert_eq!(w.inverse().to_string(), "b.a^-1");
    }
}
