//! Exhaustive search for counterexamples to refutable claims.
//!
//! Both claims have the form "if `a` has a solution `x` of some system then
//! `a` is EP". A counterexample is an element with a solution that is not EP.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classify::is_ep;
use crate::error::{Error, Result};
use crate::ring::{Elem, StarRing};
use crate::solver::{solve_detailed, SystemId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(into = "&'static str")]
pub enum Claim {
    /// `axa = a, (ax)* = xa` implies EP.
    AxaImpliesEp,
    /// `x = ax^2, (ax)* = xa` implies EP.
    XAx2ImpliesEp,
}

impl Claim {
    pub const ALL: [Claim; 2] = [Claim::AxaImpliesEp, Claim::XAx2ImpliesEp];

    pub fn id(self) -> &'static str {
        match self {
            Claim::AxaImpliesEp => "axa-implies-ep",
            Claim::XAx2ImpliesEp => "x-ax2-implies-ep",
        }
    }

    /// The system whose solvability is the premise.
    pub fn system(self) -> SystemId {
        match self {
            Claim::AxaImpliesEp => SystemId::AxaMixed,
            Claim::XAx2ImpliesEp => SystemId::XAx2,
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Claim::AxaImpliesEp => "exists x: axa = a, (ax)* = xa  =>  a is EP",
            Claim::XAx2ImpliesEp => "exists x: x = ax^2, (ax)* = xa  =>  a is EP",
        }
    }
}

impl From<Claim> for &'static str {
    fn from(c: Claim) -> Self {
        c.id()
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub element: Elem,
    /// Smallest solution `x` in canonical order.
    pub witness: Elem,
    /// Number of solutions `x`.
    pub witness_count: usize,
}

/// Every counterexample in canonical order, lazily.
pub fn counterexamples(ring: &StarRing, claim: Claim) -> impl Iterator<Item = Counterexample> + '_ {
    let system = claim.system();
    ring.elements().filter_map(move |a| {
        let sol = solve_detailed(ring, a, system, None);
        let first = sol.first()?.x;
        if is_ep(ring, a) {
            return None;
        }
        Some(Counterexample {
            element: a,
            witness: first,
            witness_count: sol.count(),
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub claim: Claim,
    /// Elements examined before stopping.
    pub elements_checked: u32,
    /// The first counterexample, or all of them when requested.
    pub found: Vec<Counterexample>,
}

impl SearchReport {
    pub fn refuted(&self) -> bool {
        !self.found.is_empty()
    }
}

/// First counterexample in canonical order, or every one when `all` is set.
pub fn search(ring: &StarRing, claim: Claim, all: bool) -> SearchReport {
    let found: Vec<Counterexample> = if all {
        counterexamples(ring, claim).collect()
    } else {
        counterexamples(ring, claim).take(1).collect()
    };
    let elements_checked = match (all, found.first()) {
        (false, Some(c)) => c.element.index() + 1,
        _ => ring.size(),
    };
    SearchReport {
        claim,
        elements_checked,
        found,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_elem, parse_ring};
    use crate::solver::{check_equations, Equation};

    #[test]
    fn claim_ids_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>().unwrap(), c);
        }
        assert!(matches!(
            "nope".parse::<Claim>(),
            Err(Error::UnknownClaim(_))
        ));
    }

    #[test]
    fn x_ax2_in_z4_and_z6() {
        let z4 = parse_ring("zn(4)").unwrap();
        let rep = search(&z4, Claim::XAx2ImpliesEp, false);
        assert_eq!(rep.found.len(), 1);
        assert_eq!(z4.show(rep.found[0].element), "2");
        assert_eq!(rep.found[0].witness, z4.zero());

        let z6 = parse_ring("zn(6)").unwrap();
        assert!(!search(&z6, Claim::XAx2ImpliesEp, true).refuted());
    }

    #[test]
    fn axa_claim_is_refuted_in_m2z5() {
        let r = parse_ring("mat(2,zn(5),transpose)").unwrap();
        let rep = search(&r, Claim::AxaImpliesEp, false);
        let c = &rep.found[0];
        // Independent check of the premise and of non-EP via a* a = 0 with a != 0.
        assert!(check_equations(
            &r,
            c.element,
            c.witness,
            &[Equation::AxaIsA, Equation::AxStarIsXa]
        ));
        assert!(!is_ep(&r, c.element));
        let a = parse_elem(&r, "[[1,2],[2,4]]").unwrap();
        assert!(counterexamples(&r, Claim::AxaImpliesEp).any(|c| c.element == a));
        assert!(rep.elements_checked <= a.index() + 1);
    }

    #[test]
    fn first_is_head_of_all() {
        let r = parse_ring("mat(2,zn(2),transpose)").unwrap();
        for claim in Claim::ALL {
            let all = search(&r, claim, true);
            let first = search(&r, claim, false);
            assert_eq!(
                first.found,
                all.found.into_iter().take(1).collect::<Vec<_>>()
            );
        }
    }
}
