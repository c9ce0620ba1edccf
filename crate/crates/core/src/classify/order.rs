//! Closure of CEP under products, powers and orthogonal sums, and the
//! relation `a <= b` iff `a = a^©† a b` on CEP elements.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{Elem, StarRing, SubsetKind};
use crate::solver::{solve_detailed, SystemId};

/// Carrier limit for the pair and triple loops of [`verify_partial_order`].
pub const ORDER_CARRIER_LIMIT: u32 = 2000;

fn cep_inv(ring: &StarRing, a: Elem) -> Option<Elem> {
    solve_detailed(ring, a, SystemId::CepInv, None)
        .first()
        .map(|w| w.x)
}

fn require_cep(ring: &StarRing, a: Elem, role: &str) -> Result<Elem> {
    ring.ensure(a)?;
    cep_inv(ring, a).ok_or_else(|| {
        Error::precondition("cep-inv", format!("{role} = {} is not CEP", ring.show(a)))
    })
}

fn agree(ring: &StarRing, subject: Elem, formula: Elem, what: &str) -> Result<Elem> {
    match cep_inv(ring, subject) {
        Some(direct) if direct == formula => Ok(formula),
        direct => Err(Error::MethodDisagreement {
            element: ring.show(subject),
            detail: format!(
                "{what} gives {}, direct solve gives {}",
                ring.show(formula),
                direct.map_or("none".to_string(), |d| ring.show(d))
            ),
        }),
    }
}

/// CEP-inverse of `ab` as `b^©† a^©†`, checked against a direct solve.
pub fn cep_product(ring: &StarRing, a: Elem, b: Elem) -> Result<Elem> {
    let x = require_cep(ring, a, "a")?;
    let y = require_cep(ring, b, "b")?;
    agree(ring, ring.mul(a, b), ring.mul(y, x), "b^©† a^©†")
}

/// CEP-inverse of `a^n` as `(a^©†)^n`, checked against a direct solve.
pub fn cep_power(ring: &StarRing, a: Elem, n: u32) -> Result<Elem> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "exponent must be positive".to_string(),
        ));
    }
    let x = require_cep(ring, a, "a")?;
    agree(ring, ring.pow(a, n), ring.pow(x, n), "(a^©†)^n")
}

/// CEP-inverse of `a + b` as `x + y` when `xb = bx = 0 = ya = ay`.
pub fn cep_sum(ring: &StarRing, a: Elem, b: Elem) -> Result<Elem> {
    let x = require_cep(ring, a, "a")?;
    let y = require_cep(ring, b, "b")?;
    let zero = ring.zero();
    for (name, value) in [
        ("xb = 0", ring.mul(x, b)),
        ("bx = 0", ring.mul(b, x)),
        ("ya = 0", ring.mul(y, a)),
        ("ay = 0", ring.mul(a, y)),
    ] {
        if value != zero {
            return Err(Error::precondition(
                "orthogonality",
                format!("{name} fails: got {}", ring.show(value)),
            ));
        }
    }
    agree(ring, ring.add(a, b), ring.add(x, y), "x + y")
}

/// The four equivalent forms of `a <= b` for a CEP element `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LeqDetail {
    /// `a = a^©† a b`
    pub definition: bool,
    /// `a^©† a = a^©† b`
    pub left: bool,
    /// `a a^©† = b a^©†`
    pub right: bool,
    /// Some central projection `p` has `a = pap` invertible in `pRp` and `pbp = a`.
    pub block: bool,
}

impl LeqDetail {
    pub fn agree(&self) -> bool {
        self.definition == self.left && self.left == self.right && self.right == self.block
    }
}

/// Central projections `p` with `a = pap` invertible in the corner ring `pRp`.
pub fn corner_projections(ring: &StarRing, a: Elem, central_projections: &[Elem]) -> Vec<Elem> {
    central_projections
        .iter()
        .copied()
        .filter(|&p| {
            ring.product(&[p, a, p]) == a
                && ring.elements().any(|y| {
                    ring.product(&[p, y, p]) == y && ring.mul(a, y) == p && ring.mul(y, a) == p
                })
        })
        .collect()
}

/// Evaluates all four forms given `z = a^©†` and the corner projections of `a`.
pub fn leq_forms(ring: &StarRing, a: Elem, z: Elem, b: Elem, corners: &[Elem]) -> LeqDetail {
    LeqDetail {
        definition: ring.product(&[z, a, b]) == a,
        left: ring.mul(z, a) == ring.mul(z, b),
        right: ring.mul(a, z) == ring.mul(b, z),
        block: corners.iter().any(|&p| ring.product(&[p, b, p]) == a),
    }
}

pub fn cep_leq_detail(ring: &StarRing, a: Elem, b: Elem) -> Result<LeqDetail> {
    let z = require_cep(ring, a, "a")?;
    ring.ensure(b)?;
    let cps = ring.subsets().members(ring, SubsetKind::CentralProjections);
    Ok(leq_forms(ring, a, z, b, &corner_projections(ring, a, &cps)))
}

/// `a <= b`. Fails if the four equivalent forms disagree.
pub fn cep_leq(ring: &StarRing, a: Elem, b: Elem) -> Result<bool> {
    let d = cep_leq_detail(ring, a, b)?;
    if !d.agree() {
        return Err(Error::MethodDisagreement {
            element: format!("({}, {})", ring.show(a), ring.show(b)),
            detail: format!("order forms disagree: {d:?}"),
        });
    }
    Ok(d.definition)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderViolation {
    pub axiom: &'static str,
    pub elements: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderReport {
    /// The CEP elements, ascending.
    pub cep_elements: Vec<Elem>,
    pub reflexivity_checks: u64,
    pub antisymmetry_checks: u64,
    pub transitivity_checks: u64,
    pub violations: Vec<OrderViolation>,
}

impl OrderReport {
    pub fn is_partial_order(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn total_checks(&self) -> u64 {
        self.reflexivity_checks + self.antisymmetry_checks + self.transitivity_checks
    }
}

/// Checks reflexivity, antisymmetry and transitivity over all CEP elements.
pub fn verify_partial_order(ring: &StarRing) -> Result<OrderReport> {
    if ring.size() > ORDER_CARRIER_LIMIT {
        return Err(Error::BoundExceeded(format!(
            "{} has {} elements; the order check is limited to {ORDER_CARRIER_LIMIT}",
            ring,
            ring.size()
        )));
    }
    let (set, inverses): (Vec<Elem>, Vec<Elem>) = ring
        .elements()
        .filter_map(|a| cep_inv(ring, a).map(|z| (a, z)))
        .unzip();
    let s = set.len();
    let words = s.div_ceil(64);
    let mut below = vec![0u64; s * words];
    for (i, (&a, &z)) in set.iter().zip(&inverses).enumerate() {
        let za = ring.mul(z, a);
        for (j, &b) in set.iter().enumerate() {
            if ring.mul(za, b) == a {
                below[i * words + j / 64] |= 1 << (j % 64);
            }
        }
    }
    let leq = |i: usize, j: usize| below[i * words + j / 64] >> (j % 64) & 1 == 1;

    let mut violations = Vec::new();
    for (i, &a) in set.iter().enumerate() {
        if !leq(i, i) {
            violations.push(OrderViolation {
                axiom: "reflexivity",
                elements: vec![a],
            });
        }
    }
    for i in 0..s {
        for j in i + 1..s {
            if leq(i, j) && leq(j, i) {
                violations.push(OrderViolation {
                    axiom: "antisymmetry",
                    elements: vec![set[i], set[j]],
                });
            }
        }
    }
    for i in 0..s {
        for j in (0..s).filter(|&j| leq(i, j)) {
            for w in 0..words {
                let mut missing = below[j * words + w] & !below[i * words + w];
                while missing != 0 {
                    let k = w * 64 + missing.trailing_zeros() as usize;
                    missing &= missing - 1;
                    violations.push(OrderViolation {
                        axiom: "transitivity",
                        elements: vec![set[i], set[j], set[k]],
                    });
                }
            }
        }
    }
    let n = s as u64;
    Ok(OrderReport {
        cep_elements: set,
        reflexivity_checks: n,
        antisymmetry_checks: n * n,
        transitivity_checks: n * n * n,
        violations,
    })
}
