use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{require_canonical, Generator, Group, GroupError, Involution, Word};

/// The infinite dihedral group `<a, b | a^2, b^2>`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct InfiniteDihedral;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DihedralLetter {
    A,
    B,
}

impl DihedralLetter {
    pub fn other(self) -> Self {
        match self {
            DihedralLetter::A => DihedralLetter::B,
            DihedralLetter::B => DihedralLetter::A,
        }
    }

    fn as_char(self) -> char {
        match self {
            DihedralLetter::A => 'a',
            DihedralLetter::B => 'b',
        }
    }
}

/// A reduced word in `{a, b}`, which is necessarily alternating and is
/// therefore determined by its first letter and its length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DihedralWord {
    len: u64,
    start: DihedralLetter,
}

impl DihedralWord {
    pub fn identity() -> Self {
        DihedralWord {
            len: 0,
            start: DihedralLetter::A,
        }
    }

    pub fn new(start: DihedralLetter, len: u64) -> Self {
        if len == 0 {
            Self::identity()
        } else {
            DihedralWord { len, start }
        }
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn first(&self) -> Option<DihedralLetter> {
        (self.len > 0).then_some(self.start)
    }

    /// Letter at zero-based position `i`.
    fn at(&self, i: u64) -> DihedralLetter {
        if i.is_multiple_of(2) {
            self.start
        } else {
            self.start.other()
        }
    }

    pub fn last(&self) -> Option<DihedralLetter> {
        (self.len > 0).then(|| self.at(self.len - 1))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (Some(last), Some(first)) = (self.last(), rhs.first()) else {
            return if self.is_empty() { *rhs } else { *self };
        };
        if last != first {
            return DihedralWord {
                len: self.len + rhs.len,
                start: self.start,
            };
        }
        // equal letters at the seam cancel pairwise all the way
        let cancel = self.len.min(rhs.len);
        if self.len > rhs.len {
            DihedralWord::new(self.start, self.len - cancel)
        } else {
            DihedralWord::new(rhs.at(cancel), rhs.len - cancel)
        }
    }

    pub fn inv(&self) -> Self {
        DihedralWord::new(self.last().unwrap_or(DihedralLetter::A), self.len)
    }

    /// The automorphism `a <-> b`.
    pub fn swap(&self) -> Self {
        DihedralWord::new(self.start.other(), self.len)
    }

    pub(crate) fn encode(&self) -> String {
        if self.len == 0 {
            return String::from("e");
        }
        (0..self.len).map(|i| self.at(i).as_char()).collect()
    }

    /// Parse a non-empty string over `{a, b}`, reducing as it goes.
    pub(crate) fn parse_letters(s: &str) -> Option<Self> {
        if s == "e" {
            return Some(Self::identity());
        }
        if s.is_empty() {
            return None;
        }
        let mut acc = Self::identity();
        for ch in s.chars() {
            let l = match ch {
                'a' => DihedralLetter::A,
                'b' => DihedralLetter::B,
                _ => return None,
            };
            acc = acc.mul(&DihedralWord::new(l, 1));
        }
        Some(acc)
    }
}

impl Group for InfiniteDihedral {
    type Element = DihedralWord;

    fn name(&self) -> String {
        String::from("dinf")
    }

    fn identity(&self) -> DihedralWord {
        DihedralWord::identity()
    }

    fn multiply(&self, a: &DihedralWord, b: &DihedralWord) -> DihedralWord {
        a.mul(b)
    }

    fn invert(&self, a: &DihedralWord) -> DihedralWord {
        a.inv()
    }

    fn generators(&self) -> Vec<Generator> {
        vec![Generator::new("a"), Generator::new("b")]
    }

    fn is_involution(&self, _id: &str) -> bool {
        true
    }

    fn letter(&self, gen: &Generator) -> Result<DihedralWord, GroupError> {
        match gen.id.as_str() {
            "a" => Ok(DihedralWord::new(DihedralLetter::A, 1)),
            "b" => Ok(DihedralWord::new(DihedralLetter::B, 1)),
            other => Err(GroupError::UnknownGenerator(String::from(other))),
        }
    }

    fn encode(&self, e: &DihedralWord) -> String {
        e.encode()
    }

    fn decode(&self, s: &str) -> Result<DihedralWord, GroupError> {
        let e = DihedralWord::parse_letters(s)
            .ok_or_else(|| GroupError::BadEncoding(String::from(s)))?;
        require_canonical(self, s, e)
    }

    fn relators(&self) -> Vec<Word> {
        vec![Word::parse("a.a").unwrap(), Word::parse("b.b").unwrap()]
    }

    fn contains(&self, e: &DihedralWord) -> bool {
        e.len > 0 || e.start == DihedralLetter::A
    }
}

impl Involution for InfiniteDihedral {
    fn twist(&self, e: &DihedralWord) -> DihedralWord {
        e.swap()
    }

    fn twist_generator(&self, id: &str) -> Option<(&'static str, bool)> {
        match id {
            "a" => Some(("b", false)),
            "b" => Some(("a", false)),
            _ => None,
        }
    }
}
