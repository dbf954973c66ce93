use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use super::{require_canonical, Generator, Group, GroupError, Word};

/// Free group of rank `n` on `x1 .. xn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeGroup {
    rank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeLetter {
    /// Zero-based generator index: `x1` is 0.
    pub index: u32,
    pub inverse: bool,
}

impl FreeLetter {
    fn inv(self) -> Self {
        FreeLetter {
            index: self.index,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord(Vec<FreeLetter>);

impl FreeWord {
    pub fn letters(&self) -> &[FreeLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push_reduced(out: &mut Vec<FreeLetter>, l: FreeLetter) {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
}

impl FreeGroup {
    pub fn new(rank: usize) -> Self {
        FreeGroup { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn parse_letter(&self, token: &str) -> Option<FreeLetter> {
        let (id, inverse) = match token.strip_suffix("^-1") {
            Some(id) => (id, true),
            None => (token, false),
        };
        let digits = id.strip_prefix('x')?;
        if digits.starts_with('0') {
            return None;
        }
        let n: u32 = digits.parse().ok()?;
        if n == 0 || n as usize > self.rank {
            return None;
        }
        Some(FreeLetter {
            index: n - 1,
            inverse,
        })
    }
}

impl Group for FreeGroup {
    type Element = FreeWord;

    fn name(&self) -> String {
        format!("free{}", self.rank)
    }

    fn identity(&self) -> FreeWord {
        FreeWord::default()
    }

    fn multiply(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        let mut out = a.0.clone();
        for &l in &b.0 {
            FreeWord::push_reduced(&mut out, l);
        }
        FreeWord(out)
    }

    fn invert(&self, a: &FreeWord) -> FreeWord {
        FreeWord(a.0.iter().rev().map(|l| l.inv()).collect())
    }

    fn generators(&self) -> Vec<Generator> {
        (1..=self.rank)
            .map(|i| Generator::new(format!("x{i}")))
            .collect()
    }

    fn is_involution(&self, _id: &str) -> bool {
        false
    }

    fn letter(&self, gen: &Generator) -> Result<FreeWord, GroupError> {
        let l = self
            .parse_letter(&gen.id)
            .filter(|l| !l.inverse)
            .ok_or_else(|| GroupError::UnknownGenerator(gen.id.clone()))?;
        let l = if gen.inverse { l.inv() } else { l };
        Ok(FreeWord(vec![l]))
    }

    fn encode(&self, e: &FreeWord) -> String {
        if e.0.is_empty() {
            return String::from("e");
        }
        let parts: Vec<String> =
            e.0.iter()
                .map(|l| {
                    if l.inverse {
                        format!("x{}^-1", l.index + 1)
                    } else {
                        format!("x{}", l.index + 1)
                    }
                })
                .collect();
        parts.join(".")
    }

    fn decode(&self, s: &str) -> Result<FreeWord, GroupError> {
        if s == "e" {
            return Ok(FreeWord::default());
        }
        let mut out = Vec::new();
        for token in s.split('.') {
            let l = self
                .parse_letter(token)
                .ok_or_else(|| GroupError::BadEncoding(String::from(s)))?;
            FreeWord::push_reduced(&mut out, l);
        }
        require_canonical(self, s, FreeWord(out))
    }

    fn relators(&self) -> Vec<Word> {
        Vec::new()
    }

    fn contains(&self, e: &FreeWord) -> bool {
        e.0.iter().all(|l| (l.index as usize) < self.rank)
            && e.0.windows(2).all(|w| w[1] != w[0].inv())
    }
}
