//! Named generalized inverses, each obtained from its defining system and
//! audited by counting witnesses.

use serde::Serialize;

use crate::error::Result;
use crate::ring::{Elem, StarRing};
use crate::solver::{solve_detailed, Solution, SystemId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InverseKind {
    MoorePenrose,
    Inner13,
    Inner14,
    Group,
    Drazin,
    Core,
    PseudoCore,
    CentralGroup,
    Cep,
}

impl InverseKind {
    pub const ALL: [InverseKind; 9] = [
        InverseKind::MoorePenrose,
        InverseKind::Inner13,
        InverseKind::Inner14,
        InverseKind::Group,
        InverseKind::Drazin,
        InverseKind::Core,
        InverseKind::PseudoCore,
        InverseKind::CentralGroup,
        InverseKind::Cep,
    ];

    pub fn system(self) -> SystemId {
        match self {
            InverseKind::MoorePenrose => SystemId::Penrose1234,
            InverseKind::Inner13 => SystemId::Penrose13,
            InverseKind::Inner14 => SystemId::Penrose14,
            InverseKind::Group => SystemId::Group,
            InverseKind::Drazin => SystemId::Drazin,
            InverseKind::Core => SystemId::Core,
            InverseKind::PseudoCore => SystemId::PseudoCore,
            InverseKind::CentralGroup => SystemId::CGroup,
            InverseKind::Cep => SystemId::CepInv,
        }
    }

    /// Whether the defining system is known to have at most one solution.
    pub fn is_unique(self) -> bool {
        !matches!(
            self,
            InverseKind::Inner13 | InverseKind::Inner14 | InverseKind::CentralGroup
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            InverseKind::MoorePenrose => "moore-penrose",
            InverseKind::Inner13 => "inner-13",
            InverseKind::Inner14 => "inner-14",
            InverseKind::Group => "group",
            InverseKind::Drazin => "drazin",
            InverseKind::Core => "core",
            InverseKind::PseudoCore => "pseudo-core",
            InverseKind::CentralGroup => "central-group",
            InverseKind::Cep => "cep",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Found,
    /// Every candidate (and every exponent) was tried.
    NotExists,
    /// Nothing found, but the exponent bound did not cover every `n`.
    BoundExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseResult {
    pub kind: InverseKind,
    pub exists: bool,
    /// First witness in canonical order.
    pub inverse: Option<Elem>,
    /// Drazin index, pseudo-core exponent: the least admissible exponent.
    pub index: Option<u32>,
    pub witness_count: usize,
    pub status: SearchStatus,
}

impl InverseResult {
    pub fn from_solution(kind: InverseKind, sol: &Solution) -> Self {
        debug_assert_eq!(kind.system(), sol.system);
        let first = sol.first();
        let status = match (first, sol.exhaustive) {
            (Some(_), _) => SearchStatus::Found,
            (None, true) => SearchStatus::NotExists,
            (None, false) => SearchStatus::BoundExhausted,
        };
        InverseResult {
            kind,
            exists: first.is_some(),
            inverse: first.map(|w| w.x),
            index: first.and_then(|w| w.n),
            witness_count: sol.count(),
            status,
        }
    }

    /// Whether the uniqueness the kind promises actually held.
    pub fn uniqueness_holds(&self) -> bool {
        !self.kind.is_unique() || self.witness_count <= 1
    }
}

pub fn compute(
    ring: &StarRing,
    a: Elem,
    kind: InverseKind,
    n_bound: Option<u32>,
) -> Result<InverseResult> {
    ring.ensure(a)?;
    let sol = solve_detailed(ring, a, kind.system(), n_bound);
    Ok(InverseResult::from_solution(kind, &sol))
}

/// `a^†`: the common solution of the four Penrose equations.
pub fn mp_inverse(ring: &StarRing, a: Elem) -> Result<InverseResult> {
    compute(ring, a, InverseKind::MoorePenrose, None)
}

/// A `{1,3}`-inverse (first in canonical order; not unique in general).
pub fn inverse_13(ring: &StarRing, a: Elem) -> Result<InverseResult> {
    compute(ring, a, InverseKind::Inner13, None)
}

pub fn inverse_14(ring: &StarRing, a: Elem) -> Result<InverseResult> {
    compute(ring, a, InverseKind::Inner14, None)
}

/// `a^#`: `axa = a, xax = x, ax = xa`.
pub fn group_inverse(ring: &StarRing, a: Elem) -> Result<InverseResult> {
    compute(ring, a, InverseKind::Group, None)
}

/// `a^D` with `index = ind(a)`, the least `k >= 0` such that `a^k = a^(k+1) a^D`.
///
/// Every element of a finite ring is Drazin invertible, so with the default
/// bound this always exists.
pub fn drazin_inverse(ring: &StarRing, a: Elem, n_bound: Option<u32>) -> Result<InverseResult> {
    compute(ring, a, InverseKind::Drazin, n_bound)
}

pub fn core_inverse(ring: &StarRing, a: Elem) -> Result<InverseResult> {
    compute(ring, a, InverseKind::Core, None)
}

/// Pseudo core inverse with the least exponent `n` in `index`.
pub fn pseudo_core_inverse(
    ring: &StarRing,
    a: Elem,
    n_bound: Option<u32>,
) -> Result<InverseResult> {
    compute(ring, a, InverseKind::PseudoCore, n_bound)
}

/// A central group inverse. Uniqueness is not assumed; see `witness_count`.
pub fn central_group_inverse(ring: &StarRing, a: Elem) -> Result<InverseResult> {
    compute(ring, a, InverseKind::CentralGroup, None)
}

/// `a^©†`: the unique `z` with `aza = a, zaz = z, (az)* = za` central.
pub fn cep_inverse(ring: &StarRing, a: Elem) -> Result<InverseResult> {
    compute(ring, a, InverseKind::Cep, None)
}
