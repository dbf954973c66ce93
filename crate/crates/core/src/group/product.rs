use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Generator, Group, GroupError, Word};

/// Direct product `L × R`, generated by the images of both generating sets.
///
/// Right-hand generator ids that clash with a left-hand id get a `'` suffix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectProduct<L, R> {
    left: L,
    right: R,
}

impl<L: Group, R: Group> DirectProduct<L, R> {
    pub fn new(left: L, right: R) -> Self {
        DirectProduct { left, right }
    }

    pub fn left(&self) -> &L {
        &self.left
    }

    pub fn right(&self) -> &R {
        &self.right
    }

    fn clashes(&self, id: &str) -> bool {
        self.left.generators().iter().any(|g| g.id == id)
    }

    fn right_label(&self, id: &str) -> String {
        if self.clashes(id) {
            format!("{id}'")
        } else {
            String::from(id)
        }
    }

    /// Route a product-level generator id to its factor.
    fn route(&self, id: &str) -> Option<(bool, String)> {
        for g in self.right.generators() {
            if self.right_label(&g.id) == id {
                return Some((false, g.id));
            }
        }
        self.clashes(id).then(|| (true, String::from(id)))
    }
}

/// Split `(lhs|rhs)` at its top-level bar.
pub(crate) fn split_pair(s: &str) -> Option<(&str, &str)> {
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    let mut depth = 0i32;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '|' if depth == 0 => return Some((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    None
}

impl<L: Group, R: Group> Group for DirectProduct<L, R> {
    type Element = (L::Element, R::Element);

    fn name(&self) -> String {
        format!("({}|{})", self.left.name(), self.right.name())
    }

    fn identity(&self) -> Self::Element {
        (self.left.identity(), self.right.identity())
    }

    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        (
            self.left.multiply(&a.0, &b.0),
            self.right.multiply(&a.1, &b.1),
        )
    }

    fn invert(&self, a: &Self::Element) -> Self::Element {
        (self.left.invert(&a.0), self.right.invert(&a.1))
    }

    fn generators(&self) -> Vec<Generator> {
        let mut gens = self.left.generators();
        gens.extend(
            self.right
                .generators()
                .into_iter()
                .map(|g| Generator::new(self.right_label(&g.id))),
        );
        gens
    }

    fn is_involution(&self, id: &str) -> bool {
        match self.route(id) {
            Some((true, id)) => self.left.is_involution(&id),
            Some((false, id)) => self.right.is_involution(&id),
            None => false,
        }
    }

    fn letter(&self, gen: &Generator) -> Result<Self::Element, GroupError> {
        match self.route(&gen.id) {
            Some((true, id)) => {
                let g = Generator {
                    id,
                    inverse: gen.inverse,
                };
                Ok((self.left.letter(&g)?, self.right.identity()))
            }
            Some((false, id)) => {
                let g = Generator {
                    id,
                    inverse: gen.inverse,
                };
                Ok((self.left.identity(), self.right.letter(&g)?))
            }
            None => Err(GroupError::UnknownGenerator(gen.id.clone())),
        }
    }

    fn encode(&self, e: &Self::Element) -> String {
        format!("({}|{})", self.left.encode(&e.0), self.right.encode(&e.1))
    }

    fn decode(&self, s: &str) -> Result<Self::Element, GroupError> {
        let (l, r) = split_pair(s).ok_or_else(|| GroupError::BadEncoding(String::from(s)))?;
        Ok((self.left.decode(l)?, self.right.decode(r)?))
    }

    fn relators(&self) -> Vec<Word> {
        let relabel = |w: &Word| -> Word {
            w.letters()
                .iter()
                .map(|g| Generator {
                    id: self.right_label(&g.id),
                    inverse: g.inverse,
                })
                .collect()
        };
        let mut rels = self.left.relators();
        rels.extend(self.right.relators().iter().map(relabel));
        // the two factors commute
        for x in self.left.generators() {
            for y in self.right.generators() {
                let y = Generator::new(self.right_label(&y.id));
                rels.push(Word::new(alloc::vec![
                    x.clone(),
                    y.clone(),
                    x.inverse_of(),
                    y.inverse_of()
                ]));
            }
        }
        rels
    }

    fn contains(&self, e: &Self::Element) -> bool {
        self.left.contains(&e.0) && self.right.contains(&e.1)
    }
}
