//! Unit/projection decompositions of CEP and `*`-DMP elements, and Peirce
//! blocks. Every decomposition is built from its closed-form parts, checked
//! against its defining identities, and audited against an exhaustive search.

use std::collections::HashMap;
use std::str::FromStr;

use serde::Serialize;

use super::{Analysis, Method};
use crate::error::{Error, Result};
use crate::ring::{Elem, StarRing, SubsetKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionKind {
    /// `a = u + p`, `u` a unit, `p` a central projection, `up = -p`.
    CleanCep,
    /// `a = uq`, `u` a unit, `q` a central projection.
    UnitProjection,
    /// `a = u + p`, `p = p^3`, `p^2` a central projection, `up^2 = -p`.
    TripotentSum,
    /// `a = uq^2`, `q = q^3`, `q^2` a central projection.
    TripotentProduct,
    /// `a^n = u + p`, `p` a projection, `pa = ap`, `up = pu = -p`.
    DmpClean,
    /// `a^n = uq = qu`, `q` a projection, `aq = qa`.
    DmpUnitProjection,
}

impl DecompositionKind {
    pub const ALL: [DecompositionKind; 6] = [
        DecompositionKind::CleanCep,
        DecompositionKind::UnitProjection,
        DecompositionKind::TripotentSum,
        DecompositionKind::TripotentProduct,
        DecompositionKind::DmpClean,
        DecompositionKind::DmpUnitProjection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DecompositionKind::CleanCep => "clean-cep",
            DecompositionKind::UnitProjection => "unit-projection",
            DecompositionKind::TripotentSum => "tripotent-sum",
            DecompositionKind::TripotentProduct => "tripotent-product",
            DecompositionKind::DmpClean => "dmp-clean",
            DecompositionKind::DmpUnitProjection => "dmp-unit-projection",
        }
    }

    /// Method that must hold before the decomposition is attempted.
    pub fn precondition(self) -> Method {
        match self {
            DecompositionKind::DmpClean | DecompositionKind::DmpUnitProjection => Method::DmpEpPow,
            _ => Method::CepDef,
        }
    }
}

impl FromStr for DecompositionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DecompositionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown decomposition `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Part {
    pub name: &'static str,
    pub value: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub parts: Vec<Part>,
    /// `n` for the `*`-DMP kinds.
    pub exponent: Option<u32>,
    /// Number of decompositions found by exhaustive search, counted by the
    /// parts the kind claims unique (all parts where nothing is claimed).
    pub alternatives: usize,
    /// Whether the claimed-unique parts are unique; `None` if nothing is claimed.
    pub unique: Option<bool>,
}

impl Decomposition {
    pub fn part(&self, name: &str) -> Option<Elem> {
        self.parts.iter().find(|p| p.name == name).map(|p| p.value)
    }
}

/// A projection-like factor `q` with the units `u` completing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitFactor {
    pub q: Elem,
    /// First completing unit in canonical order.
    pub u: Elem,
    pub u_count: usize,
}

fn members(ring: &StarRing, kind: SubsetKind) -> Vec<Elem> {
    ring.subsets().members(ring, kind)
}

/// `(u, p)` with `p` a central projection, `u = a - p` a unit and `up = -p`.
pub fn clean_cep_candidates(ring: &StarRing, a: Elem) -> Vec<(Elem, Elem)> {
    let subsets = ring.subsets();
    members(ring, SubsetKind::CentralProjections)
        .into_iter()
        .filter_map(|p| {
            let u = ring.sub(a, p);
            (subsets.is_unit(u) && ring.mul(u, p) == ring.neg(p)).then_some((u, p))
        })
        .collect()
}

/// Units `u` with `f(u)` for each candidate, given as `(first, count)`.
fn completing_units(units: &[Elem], f: impl Fn(Elem) -> bool) -> Option<(Elem, usize)> {
    let mut first = None;
    let mut count = 0;
    for &u in units {
        if f(u) {
            first.get_or_insert(u);
            count += 1;
        }
    }
    first.map(|u| (u, count))
}

/// Central projections `q` with `a = uq` for some unit `u`.
pub fn unit_projection_candidates(ring: &StarRing, a: Elem) -> Vec<UnitFactor> {
    let units = members(ring, SubsetKind::Units);
    members(ring, SubsetKind::CentralProjections)
        .into_iter()
        .filter_map(|q| {
            completing_units(&units, |u| ring.mul(u, q) == a).map(|(u, u_count)| UnitFactor {
                q,
                u,
                u_count,
            })
        })
        .collect()
}

/// `(u, p)` with `p = p^3`, `p^2` a central projection, `u = a - p` a unit, `up^2 = -p`.
pub fn tripotent_sum_candidates(ring: &StarRing, a: Elem) -> Vec<(Elem, Elem)> {
    let subsets = ring.subsets();
    subsets
        .tripotents(ring)
        .into_iter()
        .filter_map(|p| {
            let p2 = ring.mul(p, p);
            let u = ring.sub(a, p);
            (subsets.is_central_projection(p2)
                && subsets.is_unit(u)
                && ring.mul(u, p2) == ring.neg(p))
            .then_some((u, p))
        })
        .collect()
}

/// Tripotents `q` with `q^2` a central projection and `a = uq^2` for a unit `u`.
pub fn tripotent_product_candidates(ring: &StarRing, a: Elem) -> Vec<UnitFactor> {
    let subsets = ring.subsets();
    let units = members(ring, SubsetKind::Units);
    // Only q^2 enters the product, so completions are shared per square.
    let mut by_square: HashMap<Elem, Option<(Elem, usize)>> = HashMap::new();
    subsets
        .tripotents(ring)
        .into_iter()
        .filter_map(|q| {
            let q2 = ring.mul(q, q);
            if !subsets.is_central_projection(q2) {
                return None;
            }
            let found = *by_square
                .entry(q2)
                .or_insert_with(|| completing_units(&units, |u| ring.mul(u, q2) == a));
            found.map(|(u, u_count)| UnitFactor { q, u, u_count })
        })
        .collect()
}

/// `(p, y)` with `p` a central projection, `a in pRp` and `y` the inverse of
/// `a` in the corner ring `pRp`.
pub fn peirce_candidates(ring: &StarRing, a: Elem) -> Vec<(Elem, Elem)> {
    members(ring, SubsetKind::CentralProjections)
        .into_iter()
        .filter(|&p| ring.product(&[p, a, p]) == a)
        .filter_map(|p| {
            ring.elements()
                .find(|&y| {
                    ring.product(&[p, y, p]) == y && ring.mul(a, y) == p && ring.mul(y, a) == p
                })
                .map(|y| (p, y))
        })
        .collect()
}

/// `(u, p)` with `p` a projection commuting with `a`, `u = a^n - p` a unit and `up = pu = -p`.
pub fn dmp_clean_candidates(ring: &StarRing, a: Elem, n: u32) -> Vec<(Elem, Elem)> {
    let subsets = ring.subsets();
    let an = ring.pow(a, n);
    members(ring, SubsetKind::Projections)
        .into_iter()
        .filter_map(|p| {
            let u = ring.sub(an, p);
            let minus_p = ring.neg(p);
            (ring.mul(p, a) == ring.mul(a, p)
                && subsets.is_unit(u)
                && ring.mul(u, p) == minus_p
                && ring.mul(p, u) == minus_p)
                .then_some((u, p))
        })
        .collect()
}

/// Projections `q` commuting with `a` with `a^n = uq = qu` for a unit `u`.
pub fn dmp_unit_projection_candidates(ring: &StarRing, a: Elem, n: u32) -> Vec<UnitFactor> {
    let units = members(ring, SubsetKind::Units);
    let an = ring.pow(a, n);
    members(ring, SubsetKind::Projections)
        .into_iter()
        .filter(|&q| ring.mul(a, q) == ring.mul(q, a))
        .filter_map(|q| {
            completing_units(&units, |u| ring.mul(u, q) == an && ring.mul(q, u) == an)
                .map(|(u, u_count)| UnitFactor { q, u, u_count })
        })
        .collect()
}

/// Decomposes `a` by the closed-form parts of `kind`.
pub fn decompose(ring: &StarRing, a: Elem, kind: DecompositionKind) -> Result<Decomposition> {
    decompose_with(&Analysis::new(ring, a)?, kind)
}

pub(super) fn decompose_with(an: &Analysis<'_>, kind: DecompositionKind) -> Result<Decomposition> {
    let ring = an.ring();
    let a = an.element();
    let pre = kind.precondition();
    if !an.method(pre) {
        return Err(Error::precondition(
            pre.id(),
            format!("{} is required for {}", pre.predicate().name(), kind.name()),
        ));
    }
    let subsets = ring.subsets();
    let one = ring.one();
    let check = |ok: bool, what: &str| -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::MethodDisagreement {
                element: ring.show(a),
                detail: format!("{}: closed-form parts violate {what}", kind.name()),
            })
        }
    };
    let part = |name, value| Part { name, value };

    match kind {
        DecompositionKind::CleanCep | DecompositionKind::TripotentSum => {
            let d = an.mp().expect("CEP elements are MP invertible");
            let aad = ring.mul(a, d);
            let u = ring.add(ring.sub(a, one), aad);
            let p = ring.sub(one, aad);
            check(ring.add(u, p) == a, "a = u + p")?;
            check(subsets.is_unit(u), "u is a unit")?;
            let p2 = ring.mul(p, p);
            if kind == DecompositionKind::CleanCep {
                check(
                    subsets.is_central_projection(p),
                    "p is a central projection",
                )?;
                check(ring.mul(u, p) == ring.neg(p), "up = -p")?;
                let found = clean_cep_candidates(ring, a);
                check(found.contains(&(u, p)), "exhaustive search contains (u, p)")?;
                Ok(Decomposition {
                    kind,
                    parts: vec![part("u", u), part("p", p)],
                    exponent: None,
                    alternatives: found.len(),
                    unique: Some(found.len() == 1),
                })
            } else {
                check(ring.mul(p2, p) == p, "p = p^3")?;
                check(
                    subsets.is_central_projection(p2),
                    "p^2 is a central projection",
                )?;
                check(ring.mul(u, p2) == ring.neg(p), "up^2 = -p")?;
                let found = tripotent_sum_candidates(ring, a);
                check(found.contains(&(u, p)), "exhaustive search contains (u, p)")?;
                Ok(Decomposition {
                    kind,
                    parts: vec![part("u", u), part("p", p)],
                    exponent: None,
                    alternatives: found.len(),
                    unique: None,
                })
            }
        }
        DecompositionKind::UnitProjection | DecompositionKind::TripotentProduct => {
            let d = an.mp().expect("CEP elements are MP invertible");
            let q = ring.mul(d, a);
            let u = ring.add(ring.sub(a, one), q);
            check(subsets.is_unit(u), "u is a unit")?;
            check(
                subsets.is_central_projection(q),
                "q is a central projection",
            )?;
            if kind == DecompositionKind::UnitProjection {
                check(ring.mul(u, q) == a, "a = uq")?;
                let found = unit_projection_candidates(ring, a);
                check(
                    found.iter().any(|f| f.q == q),
                    "exhaustive search contains q",
                )?;
                Ok(Decomposition {
                    kind,
                    parts: vec![part("u", u), part("q", q)],
                    exponent: None,
                    alternatives: found.len(),
                    unique: Some(found.len() == 1),
                })
            } else {
                let q2 = ring.mul(q, q);
                check(ring.mul(q2, q) == q, "q = q^3")?;
                check(ring.mul(u, q2) == a, "a = uq^2")?;
                let found = tripotent_product_candidates(ring, a);
                check(
                    found.iter().any(|f| f.q == q),
                    "exhaustive search contains q",
                )?;
                Ok(Decomposition {
                    kind,
                    parts: vec![part("u", u), part("q", q)],
                    exponent: None,
                    alternatives: found.iter().map(|f| f.u_count).sum(),
                    unique: None,
                })
            }
        }
        DecompositionKind::DmpClean | DecompositionKind::DmpUnitProjection => {
            let n = an.dmp_exponent();
            let (x, _) = an.drazin();
            let an_pow = ring.pow(a, n);
            let ax = ring.mul(a, x);
            let u = ring.add(ring.sub(an_pow, one), ax);
            check(subsets.is_unit(u), "u is a unit")?;
            if kind == DecompositionKind::DmpClean {
                let p = ring.sub(one, ax);
                let minus_p = ring.neg(p);
                check(ring.add(u, p) == an_pow, "a^n = u + p")?;
                check(subsets.is_projection(p), "p is a projection")?;
                check(ring.mul(p, a) == ring.mul(a, p), "pa = ap")?;
                check(
                    ring.mul(u, p) == minus_p && ring.mul(p, u) == minus_p,
                    "up = pu = -p",
                )?;
                let found = dmp_clean_candidates(ring, a, n);
                check(found.contains(&(u, p)), "exhaustive search contains (u, p)")?;
                Ok(Decomposition {
                    kind,
                    parts: vec![part("u", u), part("p", p)],
                    exponent: Some(n),
                    alternatives: found.len(),
                    unique: Some(found.len() == 1),
                })
            } else {
                let q = ax;
                check(
                    ring.mul(u, q) == an_pow && ring.mul(q, u) == an_pow,
                    "a^n = uq = qu",
                )?;
                check(subsets.is_projection(q), "q is a projection")?;
                check(ring.mul(a, q) == ring.mul(q, a), "aq = qa")?;
                let found = dmp_unit_projection_candidates(ring, a, n);
                check(
                    found.iter().any(|f| f.q == q),
                    "exhaustive search contains q",
                )?;
                Ok(Decomposition {
                    kind,
                    parts: vec![part("u", u), part("q", q)],
                    exponent: Some(n),
                    alternatives: found.len(),
                    unique: Some(found.len() == 1),
                })
            }
        }
    }
}

/// The four blocks of `a` relative to an idempotent `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeirceBlocks {
    pub p: Elem,
    pub a11: Elem,
    pub a12: Elem,
    pub a21: Elem,
    pub a22: Elem,
}

impl PeirceBlocks {
    pub fn reconstruct(&self, ring: &StarRing) -> Elem {
        ring.add(ring.add(self.a11, self.a12), ring.add(self.a21, self.a22))
    }

    /// Whether only the `(1,1)` block is nonzero.
    pub fn is_corner(&self, ring: &StarRing) -> bool {
        let z = ring.zero();
        self.a12 == z && self.a21 == z && self.a22 == z
    }
}

/// Blocks `pap, pa(1-p), (1-p)ap, (1-p)a(1-p)`. `p` must be idempotent.
pub fn peirce(ring: &StarRing, a: Elem, p: Elem) -> Result<PeirceBlocks> {
    ring.ensure(a)?;
    ring.ensure(p)?;
    if !ring.is_idempotent(p) {
        return Err(Error::InvalidArgument(format!(
            "{} is not idempotent",
            ring.show(p)
        )));
    }
    let q = ring.sub(ring.one(), p);
    Ok(PeirceBlocks {
        p,
        a11: ring.product(&[p, a, p]),
        a12: ring.product(&[p, a, q]),
        a21: ring.product(&[q, a, p]),
        a22: ring.product(&[q, a, q]),
    })
}
