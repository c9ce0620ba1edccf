use serde::Serialize;

use super::{Elem, StarRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubsetKind {
    Center,
    Units,
    Projections,
    CentralProjections,
    Idempotents,
    Hermitian,
}

impl SubsetKind {
    pub const ALL: [SubsetKind; 6] = [
        SubsetKind::Center,
        SubsetKind::Units,
        SubsetKind::Projections,
        SubsetKind::CentralProjections,
        SubsetKind::Idempotents,
        SubsetKind::Hermitian,
    ];
}

/// Members of one distinguished subset, ascending by canonical index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetReport {
    pub kind: SubsetKind,
    pub members: Vec<Elem>,
}

impl SubsetReport {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.binary_search(&a).is_ok()
    }
}

const NO_INVERSE: u32 = u32::MAX;

/// Membership tables for every distinguished subset of a ring.
#[derive(Debug)]
pub struct Subsets {
    central: Vec<bool>,
    inverse: Vec<u32>,
    idempotent: Vec<bool>,
    hermitian: Vec<bool>,
    tripotent: Vec<bool>,
}

impl Subsets {
    pub(super) fn compute(ring: &StarRing) -> Self {
        let n = ring.size() as usize;
        let central = ring.elements().map(|c| ring.commutes_with_all(c)).collect();

        // One-sided inverses are two-sided in a finite ring; the second
        // product is still checked so the table only records genuine units.
        let one = ring.one();
        let mut inverse = vec![NO_INVERSE; n];
        for a in ring.elements() {
            if inverse[a.index() as usize] != NO_INVERSE {
                continue;
            }
            if let Some(x) = ring.elements().find(|&x| ring.mul(a, x) == one) {
                if ring.mul(x, a) == one {
                    inverse[a.index() as usize] = x.index();
                    inverse[x.index() as usize] = a.index();
                }
            }
        }

        Subsets {
            central,
            inverse,
            idempotent: ring.elements().map(|a| ring.is_idempotent(a)).collect(),
            hermitian: ring.elements().map(|a| ring.is_hermitian(a)).collect(),
            tripotent: ring.elements().map(|a| ring.is_tripotent(a)).collect(),
        }
    }

    pub fn is_central(&self, a: Elem) -> bool {
        self.central[a.index() as usize]
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.inverse[a.index() as usize] != NO_INVERSE
    }

    pub fn unit_inverse(&self, ring: &StarRing, a: Elem) -> Option<Elem> {
        match self.inverse[a.index() as usize] {
            NO_INVERSE => None,
            i => Some(ring.at(i)),
        }
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.idempotent[a.index() as usize]
    }

    pub fn is_hermitian(&self, a: Elem) -> bool {
        self.hermitian[a.index() as usize]
    }

    pub fn is_projection(&self, a: Elem) -> bool {
        self.is_idempotent(a) && self.is_hermitian(a)
    }

    pub fn is_central_projection(&self, a: Elem) -> bool {
        self.is_projection(a) && self.is_central(a)
    }

    pub fn is_tripotent(&self, a: Elem) -> bool {
        self.tripotent[a.index() as usize]
    }

    pub fn contains(&self, kind: SubsetKind, a: Elem) -> bool {
        match kind {
            SubsetKind::Center => self.is_central(a),
            SubsetKind::Units => self.is_unit(a),
            SubsetKind::Projections => self.is_projection(a),
            SubsetKind::CentralProjections => self.is_central_projection(a),
            SubsetKind::Idempotents => self.is_idempotent(a),
            SubsetKind::Hermitian => self.is_hermitian(a),
        }
    }

    pub fn members(&self, ring: &StarRing, kind: SubsetKind) -> Vec<Elem> {
        ring.elements()
            .filter(|&a| self.contains(kind, a))
            .collect()
    }

    pub fn tripotents(&self, ring: &StarRing) -> Vec<Elem> {
        ring.elements().filter(|&a| self.is_tripotent(a)).collect()
    }

    pub(super) fn report(&self, ring: &StarRing, kind: SubsetKind) -> SubsetReport {
        SubsetReport {
            kind,
            members: self.members(ring, kind),
        }
    }
}
