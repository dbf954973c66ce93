use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use super::product::split_pair;
use super::{
    DihedralWord, DirectProduct, FreeGroup, FreeWord, Generator, Group, GroupError, Heisenberg,
    HeisenbergElement, InfiniteDihedral, SemiElement, Semidirect, Word,
};

/// Runtime choice among the concrete models.
///
/// Names: `h3`, `free<n>`, `dinf`, `dsemi` (`D∞ ⋊ Z/2`), `h3semi`
/// (`H3 ⋊ Z/2`) and `(lhs|rhs)` for direct products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupModel {
    Heisenberg(Heisenberg),
    Free(FreeGroup),
    DihedralInf(InfiniteDihedral),
    DihedralSemidirect(Semidirect<InfiniteDihedral>),
    HeisenbergSemidirect(Semidirect<Heisenberg>),
    DirectProduct(Box<DirectProduct<GroupModel, GroupModel>>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElement {
    Heisenberg(HeisenbergElement),
    Free(FreeWord),
    Dihedral(DihedralWord),
    DihedralSemidirect(SemiElement<DihedralWord>),
    HeisenbergSemidirect(SemiElement<HeisenbergElement>),
    Product(Box<(GroupElement, GroupElement)>),
}

impl GroupModel {
    pub fn heisenberg() -> Self {
        GroupModel::Heisenberg(Heisenberg)
    }

    pub fn free(rank: usize) -> Self {
        GroupModel::Free(FreeGroup::new(rank))
    }

    pub fn dihedral() -> Self {
        GroupModel::DihedralInf(InfiniteDihedral)
    }

    pub fn dihedral_semidirect() -> Self {
        GroupModel::DihedralSemidirect(Semidirect::new(InfiniteDihedral))
    }

    pub fn heisenberg_semidirect() -> Self {
        GroupModel::HeisenbergSemidirect(Semidirect::new(Heisenberg))
    }

    pub fn product(left: GroupModel, right: GroupModel) -> Self {
        GroupModel::DirectProduct(Box::new(DirectProduct::new(left, right)))
    }
}

impl FromStr for GroupModel {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        match s {
            "h3" => return Ok(GroupModel::heisenberg()),
            "dinf" => return Ok(GroupModel::dihedral()),
            "dsemi" => return Ok(GroupModel::dihedral_semidirect()),
            "h3semi" => return Ok(GroupModel::heisenberg_semidirect()),
            _ => {}
        }
        if let Some(n) = s.strip_prefix("free") {
            if let Ok(rank) = n.parse::<usize>() {
                if rank >= 1 && !n.starts_with('0') {
                    return Ok(GroupModel::free(rank));
                }
            }
        }
        if let Some((l, r)) = split_pair(s) {
            return Ok(GroupModel::product(l.parse()?, r.parse()?));
        }
        Err(GroupError::UnknownModel(String::from(s)))
    }
}

macro_rules! mismatch {
    ($model:expr) => {
        panic!("element does not belong to group model {}", $model.name())
    };
}

impl Group for GroupModel {
    type Element = GroupElement;

    fn name(&self) -> String {
        match self {
            GroupModel::Heisenberg(g) => g.name(),
            GroupModel::Free(g) => g.name(),
            GroupModel::DihedralInf(g) => g.name(),
            GroupModel::DihedralSemidirect(g) => g.name(),
            GroupModel::HeisenbergSemidirect(g) => g.name(),
            GroupModel::DirectProduct(g) => g.name(),
        }
    }

    fn identity(&self) -> GroupElement {
        match self {
            GroupModel::Heisenberg(g) => GroupElement::Heisenberg(g.identity()),
            GroupModel::Free(g) => GroupElement::Free(g.identity()),
            GroupModel::DihedralInf(g) => GroupElement::Dihedral(g.identity()),
            GroupModel::DihedralSemidirect(g) => GroupElement::DihedralSemidirect(g.identity()),
            GroupModel::HeisenbergSemidirect(g) => GroupElement::HeisenbergSemidirect(g.identity()),
            GroupModel::DirectProduct(g) => GroupElement::Product(Box::new(g.identity())),
        }
    }

    /// Panics when an argument belongs to another model; use
    /// [`Group::try_multiply`] on unvalidated input.
    fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        use GroupElement as E;
        match (self, a, b) {
            (GroupModel::Heisenberg(g), E::Heisenberg(x), E::Heisenberg(y)) => {
                E::Heisenberg(g.multiply(x, y))
            }
            (GroupModel::Free(g), E::Free(x), E::Free(y)) => E::Free(g.multiply(x, y)),
            (GroupModel::DihedralInf(g), E::Dihedral(x), E::Dihedral(y)) => {
                E::Dihedral(g.multiply(x, y))
            }
            (
                GroupModel::DihedralSemidirect(g),
                E::DihedralSemidirect(x),
                E::DihedralSemidirect(y),
            ) => E::DihedralSemidirect(g.multiply(x, y)),
            (
                GroupModel::HeisenbergSemidirect(g),
                E::HeisenbergSemidirect(x),
                E::HeisenbergSemidirect(y),
            ) => E::HeisenbergSemidirect(g.multiply(x, y)),
            (GroupModel::DirectProduct(g), E::Product(x), E::Product(y)) => {
                E::Product(Box::new(g.multiply(x, y)))
            }
            _ => mismatch!(self),
        }
    }

    fn invert(&self, a: &GroupElement) -> GroupElement {
        use GroupElement as E;
        match (self, a) {
            (GroupModel::Heisenberg(g), E::Heisenberg(x)) => E::Heisenberg(g.invert(x)),
            (GroupModel::Free(g), E::Free(x)) => E::Free(g.invert(x)),
            (GroupModel::DihedralInf(g), E::Dihedral(x)) => E::Dihedral(g.invert(x)),
            (GroupModel::DihedralSemidirect(g), E::DihedralSemidirect(x)) => {
                E::DihedralSemidirect(g.invert(x))
            }
            (GroupModel::HeisenbergSemidirect(g), E::HeisenbergSemidirect(x)) => {
                E::HeisenbergSemidirect(g.invert(x))
            }
            (GroupModel::DirectProduct(g), E::Product(x)) => E::Product(Box::new(g.invert(x))),
            _ => mismatch!(self),
        }
    }

    fn conjugate(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        match (self, g, h) {
            (
                GroupModel::Heisenberg(m),
                GroupElement::Heisenberg(x),
                GroupElement::Heisenberg(y),
            ) => GroupElement::Heisenberg(m.conjugate(x, y)),
            _ => {
                let gh = self.multiply(g, h);
                self.multiply(&gh, &self.invert(g))
            }
        }
    }

    fn generators(&self) -> Vec<Generator> {
        match self {
            GroupModel::Heisenberg(g) => g.generators(),
            GroupModel::Free(g) => g.generators(),
            GroupModel::DihedralInf(g) => g.generators(),
            GroupModel::DihedralSemidirect(g) => g.generators(),
            GroupModel::HeisenbergSemidirect(g) => g.generators(),
            GroupModel::DirectProduct(g) => g.generators(),
        }
    }

    fn is_involution(&self, id: &str) -> bool {
        match self {
            GroupModel::Heisenberg(g) => g.is_involution(id),
            GroupModel::Free(g) => g.is_involution(id),
            GroupModel::DihedralInf(g) => g.is_involution(id),
            GroupModel::DihedralSemidirect(g) => g.is_involution(id),
            GroupModel::HeisenbergSemidirect(g) => g.is_involution(id),
            GroupModel::DirectProduct(g) => g.is_involution(id),
        }
    }

    fn letter(&self, gen: &Generator) -> Result<GroupElement, GroupError> {
        Ok(match self {
            GroupModel::Heisenberg(g) => GroupElement::Heisenberg(g.letter(gen)?),
            GroupModel::Free(g) => GroupElement::Free(g.letter(gen)?),
            GroupModel::DihedralInf(g) => GroupElement::Dihedral(g.letter(gen)?),
            GroupModel::DihedralSemidirect(g) => GroupElement::DihedralSemidirect(g.letter(gen)?),
            GroupModel::HeisenbergSemidirect(g) => {
                GroupElement::HeisenbergSemidirect(g.letter(gen)?)
            }
            GroupModel::DirectProduct(g) => GroupElement::Product(Box::new(g.letter(gen)?)),
        })
    }

    fn encode(&self, e: &GroupElement) -> String {
        use GroupElement as E;
        match (self, e) {
            (GroupModel::Heisenberg(g), E::Heisenberg(x)) => g.encode(x),
            (GroupModel::Free(g), E::Free(x)) => g.encode(x),
            (GroupModel::DihedralInf(g), E::Dihedral(x)) => g.encode(x),
            (GroupModel::DihedralSemidirect(g), E::DihedralSemidirect(x)) => g.encode(x),
            (GroupModel::HeisenbergSemidirect(g), E::HeisenbergSemidirect(x)) => g.encode(x),
            (GroupModel::DirectProduct(g), E::Product(x)) => g.encode(x),
            _ => mismatch!(self),
        }
    }

    fn decode(&self, s: &str) -> Result<GroupElement, GroupError> {
        Ok(match self {
            GroupModel::Heisenberg(g) => GroupElement::Heisenberg(g.decode(s)?),
            GroupModel::Free(g) => GroupElement::Free(g.decode(s)?),
            GroupModel::DihedralInf(g) => GroupElement::Dihedral(g.decode(s)?),
            GroupModel::DihedralSemidirect(g) => GroupElement::DihedralSemidirect(g.decode(s)?),
            GroupModel::HeisenbergSemidirect(g) => GroupElement::HeisenbergSemidirect(g.decode(s)?),
            GroupModel::DirectProduct(g) => GroupElement::Product(Box::new(g.decode(s)?)),
        })
    }

    fn relators(&self) -> Vec<Word> {
        match self {
            GroupModel::Heisenberg(g) => g.relators(),
            GroupModel::Free(g) => g.relators(),
            GroupModel::DihedralInf(g) => g.relators(),
            GroupModel::DihedralSemidirect(g) => g.relators(),
            GroupModel::HeisenbergSemidirect(g) => g.relators(),
            GroupModel::DirectProduct(g) => g.relators(),
        }
    }

    fn contains(&self, e: &GroupElement) -> bool {
        use GroupElement as E;
        match (self, e) {
            (GroupModel::Heisenberg(_), E::Heisenberg(_)) => true,
            (GroupModel::Free(g), E::Free(x)) => g.contains(x),
            (GroupModel::DihedralInf(g), E::Dihedral(x)) => g.contains(x),
            (GroupModel::DihedralSemidirect(g), E::DihedralSemidirect(x)) => g.contains(x),
            (GroupModel::HeisenbergSemidirect(_), E::HeisenbergSemidirect(_)) => true,
            (GroupModel::DirectProduct(g), E::Product(x)) => g.contains(x),
            _ => false,
        }
    }
}
