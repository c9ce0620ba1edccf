//! Exhaustive solver for the equation systems that define generalized
//! inverses and EP-type characterizations.
//!
//! Every system is a plain conjunction of [`Equation`]s over an element `a`,
//! an unknown `x` and, for indexed systems, an exponent `n`. Solving scans
//! every `x` of the ring in canonical order; nothing is pruned using known
//! lemmas, so solver results can serve as an oracle for those lemmas.
//!
//! Indexed systems only see `n` through the powers `a^n` and `a^(n+1)`, which
//! repeat with the power cycle of `a`. The default exponent bound is therefore
//! `preperiod + period - 1`, which makes the search exhaustive over all
//! positive `n`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{Elem, StarRing};

/// One equational constraint over `(a, x, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Equation {
    /// `axa = a`
    AxaIsA,
    /// `xax = x`
    XaxIsX,
    /// `(ax)* = ax`
    AxHermitian,
    /// `(xa)* = xa`
    XaHermitian,
    /// `(ax)* = xa`
    AxStarIsXa,
    /// `ax = xa`
    Commute,
    /// `x a^2 = a`
    XaaIsA,
    /// `a^2 x = a`
    AaxIsA,
    /// `a x^2 = x`
    AxxIsX,
    /// `x^2 a = x`
    XxaIsX,
    /// `xa` lies in the center
    XaCentral,
    /// `x a^(n+1) = a^n`
    XaPowIsPow,
    /// `a x a^n = a`
    AxaPowIsA,
    /// `a x a^n = a^n`
    AxaPowIsPow,
    /// `a^n = a^(n+1) x`
    PowIsPowX,
}

impl Equation {
    pub fn is_indexed(self) -> bool {
        matches!(
            self,
            Equation::XaPowIsPow
                | Equation::AxaPowIsA
                | Equation::AxaPowIsPow
                | Equation::PowIsPowX
        )
    }

    pub fn text(self) -> &'static str {
        match self {
            Equation::AxaIsA => "axa = a",
            Equation::XaxIsX => "xax = x",
            Equation::AxHermitian => "(ax)* = ax",
            Equation::XaHermitian => "(xa)* = xa",
            Equation::AxStarIsXa => "(ax)* = xa",
            Equation::Commute => "ax = xa",
            Equation::XaaIsA => "xa^2 = a",
            Equation::AaxIsA => "a^2x = a",
            Equation::AxxIsX => "ax^2 = x",
            Equation::XxaIsX => "x^2a = x",
            Equation::XaCentral => "xa in C(R)",
            Equation::XaPowIsPow => "xa^(n+1) = a^n",
            Equation::AxaPowIsA => "axa^n = a",
            Equation::AxaPowIsPow => "axa^n = a^n",
            Equation::PowIsPowX => "a^n = a^(n+1)x",
        }
    }
}

macro_rules! systems {
    ($( $(#[$doc:meta])* $variant:ident = $name:literal => [$($eq:ident),+ $(,)?] ),+ $(,)?) => {
        /// Identifier of a defining equation system.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum SystemId {
            $( $(#[$doc])* $variant, )+
        }

        impl SystemId {
            pub const ALL: &'static [SystemId] = &[$(SystemId::$variant),+];

            /// Exact identifier used on the command line and in reports.
            pub fn name(self) -> &'static str {
                match self {
                    $( SystemId::$variant => $name, )+
                }
            }

            pub fn equations(self) -> &'static [Equation] {
                match self {
                    $( SystemId::$variant => &[$(Equation::$eq),+], )+
                }
            }
        }

        impl FromStr for SystemId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $( $name => Ok(SystemId::$variant), )+
                    other => Err(Error::UnknownSystem(other.to_string())),
                }
            }
        }
    };
}

systems! {
    /// Core inverse: `xa^2 = a, ax^2 = x, (ax)* = ax`.
    Core = "core" => [XaaIsA, AxxIsX, AxHermitian],
    /// Pseudo core inverse: `xa^(n+1) = a^n, ax^2 = x, (ax)* = ax`.
    PseudoCore = "pseudo-core" => [XaPowIsPow, AxxIsX, AxHermitian],
    RightCore = "right-core" => [AxaIsA, AxxIsX, AxHermitian],
    RightPseudoCore = "right-pseudo-core" => [AxaPowIsA, AxxIsX, AxHermitian],
    /// `xa^2 = a, ax^2 = x, (xa)* = xa`.
    EpXu = "ep-xu" => [XaaIsA, AxxIsX, XaHermitian],
    /// `xa^2 = a, ax^2 = x, (ax)* = xa`.
    Q1 = "q1" => [XaaIsA, AxxIsX, AxStarIsXa],
    /// `axa = a, ax^2 = x, (ax)* = xa`.
    Q2 = "q2" => [AxaIsA, AxxIsX, AxStarIsXa],
    /// `axa^n = a, ax^2 = x, (ax)* = xa`.
    Q3 = "q3" => [AxaPowIsA, AxxIsX, AxStarIsXa],
    Penrose13 = "p13" => [AxaIsA, AxHermitian],
    Penrose14 = "p14" => [AxaIsA, XaHermitian],
    /// Moore-Penrose: all four Penrose equations.
    Penrose1234 = "mp" => [AxaIsA, XaxIsX, AxHermitian, XaHermitian],
    Group = "group" => [AxaIsA, XaxIsX, Commute],
    /// Drazin: `xax = x, ax = xa, a^k = a^(k+1)x` with `k >= 0`.
    Drazin = "drazin" => [XaxIsX, Commute, PowIsPowX],
    Theo1Left = "theo1-left" => [XaaIsA, AxStarIsXa],
    Theo1Right = "theo1-right" => [AaxIsA, AxStarIsXa],
    AxaMixed = "axa-mixed" => [AxaIsA, AxStarIsXa],
    /// `x = ax^2, (ax)* = xa`; always solved by `x = 0`.
    XAx2 = "x-ax2" => [AxxIsX, AxStarIsXa],
    CepDef = "cep-def" => [AxaIsA, AxStarIsXa, XaCentral],
    /// CEP-inverse: `aza = a, zaz = z, (az)* = za in C(R)`.
    CepInv = "cep-inv" => [AxaIsA, XaxIsX, AxStarIsXa, XaCentral],
    /// Central group inverse: `xa in C(R), xax = x, a^2x = a`.
    CGroup = "cgroup" => [XaCentral, XaxIsX, AaxIsA],
    /// `axa^n = a^n, ax^2 = x, (ax)* = xa`.
    DmpSys = "dmp-sys" => [AxaPowIsPow, AxxIsX, AxStarIsXa],
    Eight2 = "eight-2" => [AxaIsA, XxaIsX, AxStarIsXa],
    Eight3 = "eight-3" => [AaxIsA, XxaIsX, AxStarIsXa],
    Eight4 = "eight-4" => [XaaIsA, XxaIsX, AxStarIsXa],
    Eight5 = "eight-5" => [AaxIsA, AxxIsX, AxStarIsXa],
    Eight6 = "eight-6" => [XaaIsA, AxxIsX, AxStarIsXa],
    Eight7 = "eight-7" => [AaxIsA, XaxIsX, AxStarIsXa],
    Eight8 = "eight-8" => [XaaIsA, XaxIsX, AxStarIsXa],
}

impl SystemId {
    /// Smallest admissible exponent, or `None` when the system has no `n`.
    pub fn min_exponent(self) -> Option<u32> {
        match self {
            SystemId::Drazin => Some(0),
            s if s.equations().iter().any(|e| e.is_indexed()) => Some(1),
            _ => None,
        }
    }

    pub fn is_indexed(self) -> bool {
        self.min_exponent().is_some()
    }

    /// The items (2)-(8) of the eight-way EP characterization.
    pub const EIGHT_WAY: [SystemId; 7] = [
        SystemId::Eight2,
        SystemId::Eight3,
        SystemId::Eight4,
        SystemId::Eight5,
        SystemId::Eight6,
        SystemId::Eight7,
        SystemId::Eight8,
    ];
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for SystemId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A candidate solution with one flag per equation of its system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub x: Elem,
    pub n: Option<u32>,
    pub satisfied: Vec<bool>,
}

impl Witness {
    pub fn new(x: Elem, n: Option<u32>) -> Self {
        Witness {
            x,
            n,
            satisfied: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        !self.satisfied.is_empty() && self.satisfied.iter().all(|&b| b)
    }
}

/// Witnesses of one system together with the exponent range searched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub system: SystemId,
    pub witnesses: Vec<Witness>,
    /// Largest exponent tried, for indexed systems.
    pub exponent_bound: Option<u32>,
    /// Whether the exponent range covered every `n` (always true when unindexed).
    pub exhaustive: bool,
}

impl Solution {
    pub fn is_solvable(&self) -> bool {
        !self.witnesses.is_empty()
    }

    pub fn first(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    pub fn count(&self) -> usize {
        self.witnesses.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.witnesses.iter().any(|w| w.x == x)
    }
}

/// Precomputed powers of the fixed element `a`.
struct Subject {
    a: Elem,
    a2: Elem,
    /// `powers[i] = a^i` for `i <= bound + 1`.
    powers: Vec<Elem>,
}

impl Subject {
    fn new(ring: &StarRing, a: Elem, bound: u32) -> Self {
        let mut powers = Vec::with_capacity(bound as usize + 2);
        let mut p = ring.one();
        for _ in 0..=bound + 1 {
            powers.push(p);
            p = ring.mul(p, a);
        }
        Subject {
            a,
            a2: ring.mul(a, a),
            powers,
        }
    }

    fn power(&self, ring: &StarRing, n: u32) -> Elem {
        match self.powers.get(n as usize) {
            Some(&p) => p,
            None => ring.pow(self.a, n),
        }
    }
}

/// Lazily memoized products of `a` and a candidate `x`.
struct Probe<'r> {
    ring: &'r StarRing,
    subject: &'r Subject,
    x: Elem,
    ax: Option<Elem>,
    xa: Option<Elem>,
    central: Option<bool>,
}

impl<'r> Probe<'r> {
    fn new(ring: &'r StarRing, subject: &'r Subject, x: Elem) -> Self {
        Probe {
            ring,
            subject,
            x,
            ax: None,
            xa: None,
            central: None,
        }
    }

    fn ax(&mut self) -> Elem {
        *self
            .ax
            .get_or_insert_with(|| self.ring.mul(self.subject.a, self.x))
    }

    fn xa(&mut self) -> Elem {
        *self
            .xa
            .get_or_insert_with(|| self.ring.mul(self.x, self.subject.a))
    }

    fn xa_central(&mut self) -> bool {
        if let Some(c) = self.central {
            return c;
        }
        let xa = self.xa();
        let c = self.ring.commutes_with_all(xa);
        if let Some(subsets) = self.ring.subsets_if_ready() {
            debug_assert_eq!(c, subsets.is_central(xa), "center table disagrees");
        }
        self.central = Some(c);
        c
    }

    fn holds(&mut self, eq: Equation, n: Option<u32>) -> bool {
        let r = self.ring;
        let subject = self.subject;
        let (a, x) = (subject.a, self.x);
        let pow = |k: u32| subject.power(r, k);
        match eq {
            Equation::AxaIsA => r.mul(self.ax(), a) == a,
            Equation::XaxIsX => r.mul(self.xa(), x) == x,
            Equation::AxHermitian => {
                let ax = self.ax();
                r.star(ax) == ax
            }
            Equation::XaHermitian => {
                let xa = self.xa();
                r.star(xa) == xa
            }
            Equation::AxStarIsXa => r.star(self.ax()) == self.xa(),
            Equation::Commute => self.ax() == self.xa(),
            Equation::XaaIsA => r.mul(x, subject.a2) == a,
            Equation::AaxIsA => r.mul(subject.a2, x) == a,
            Equation::AxxIsX => r.mul(self.ax(), x) == x,
            Equation::XxaIsX => r.mul(x, self.xa()) == x,
            Equation::XaCentral => self.xa_central(),
            Equation::XaPowIsPow => {
                let n = n.expect("indexed equation needs n");
                r.mul(x, pow(n + 1)) == pow(n)
            }
            Equation::AxaPowIsA => {
                let n = n.expect("indexed equation needs n");
                r.mul(self.ax(), pow(n)) == a
            }
            Equation::AxaPowIsPow => {
                let n = n.expect("indexed equation needs n");
                r.mul(self.ax(), pow(n)) == pow(n)
            }
            Equation::PowIsPowX => {
                let n = n.expect("indexed equation needs n");
                pow(n) == r.mul(pow(n + 1), x)
            }
        }
    }

    /// Smallest admissible exponent making every equation hold, if any.
    fn solve_for(&mut self, sys: SystemId, bound: u32) -> Option<Option<u32>> {
        let eqs = sys.equations();
        let plain = |e: &&Equation| !e.is_indexed() && **e != Equation::XaCentral;
        for eq in eqs.iter().filter(plain) {
            if !self.holds(*eq, None) {
                return None;
            }
        }
        let n = match sys.min_exponent() {
            None => None,
            Some(lo) => {
                let indexed: Vec<Equation> =
                    eqs.iter().copied().filter(|e| e.is_indexed()).collect();
                let n = (lo..=bound).find(|&n| indexed.iter().all(|&e| self.holds(e, Some(n))))?;
                Some(n)
            }
        };
        if eqs.contains(&Equation::XaCentral) && !self.xa_central() {
            return None;
        }
        Some(n)
    }
}

/// Exponent bound for `a`: `(bound, exhaustive)`.
pub fn exponent_bound(ring: &StarRing, a: Elem, requested: Option<u32>) -> (u32, bool) {
    let complete = ring.power_cycle(a).exponent_bound();
    match requested {
        Some(b) => (b, b >= complete),
        None => (complete, true),
    }
}

/// Evaluates every equation of `sys` at `(a, x, n)` without short-circuiting.
pub fn evaluate(
    ring: &StarRing,
    a: Elem,
    x: Elem,
    n: Option<u32>,
    sys: SystemId,
) -> Result<Vec<bool>> {
    ring.ensure(a)?;
    ring.ensure(x)?;
    let n = match sys.min_exponent() {
        None => None,
        Some(lo) => match n {
            Some(n) if n >= lo => Some(n),
            Some(n) => {
                return Err(Error::InvalidArgument(format!(
                    "system {sys} needs n >= {lo}, got {n}"
                )))
            }
            None => {
                return Err(Error::InvalidArgument(format!(
                    "system {sys} needs an exponent n"
                )))
            }
        },
    };
    let subject = Subject::new(ring, a, n.unwrap_or(0));
    let mut probe = Probe::new(ring, &subject, x);
    Ok(sys.equations().iter().map(|&e| probe.holds(e, n)).collect())
}

/// Whether `w` solves `sys` for `a`. Pure check, no search.
pub fn check_witness(ring: &StarRing, a: Elem, w: &Witness, sys: SystemId) -> Result<bool> {
    Ok(evaluate(ring, a, w.x, w.n, sys)?.into_iter().all(|b| b))
}

/// Whether `(a, x)` satisfies an ad-hoc conjunction of unindexed equations.
pub fn check_equations(ring: &StarRing, a: Elem, x: Elem, eqs: &[Equation]) -> bool {
    debug_assert!(eqs.iter().all(|e| !e.is_indexed()));
    let subject = Subject::new(ring, a, 0);
    let mut probe = Probe::new(ring, &subject, x);
    eqs.iter().all(|&e| probe.holds(e, None))
}

/// Solves several systems in one pass over the candidates.
///
/// Results are in the order of `systems`; each witness list is ascending by
/// `x`, carrying the smallest admissible exponent for that `x`.
pub fn solve_many(
    ring: &StarRing,
    a: Elem,
    systems: &[SystemId],
    n_bound: Option<u32>,
) -> Vec<Solution> {
    let indexed = systems.iter().any(|s| s.is_indexed());
    let (bound, exhaustive) = if indexed {
        exponent_bound(ring, a, n_bound)
    } else {
        (0, true)
    };
    let subject = Subject::new(ring, a, bound);
    let mut out: Vec<Solution> = systems
        .iter()
        .map(|&system| Solution {
            system,
            witnesses: Vec::new(),
            exponent_bound: system.is_indexed().then_some(bound),
            exhaustive: !system.is_indexed() || exhaustive,
        })
        .collect();
    for x in ring.elements() {
        let mut probe = Probe::new(ring, &subject, x);
        for sol in out.iter_mut() {
            if let Some(n) = probe.solve_for(sol.system, bound) {
                sol.witnesses.push(Witness {
                    x,
                    n,
                    satisfied: vec![true; sol.system.equations().len()],
                });
            }
        }
    }
    out
}

pub fn solve_detailed(ring: &StarRing, a: Elem, sys: SystemId, n_bound: Option<u32>) -> Solution {
    solve_many(ring, a, &[sys], n_bound)
        .pop()
        .expect("one system in, one solution out")
}

/// All witnesses of `sys` for `a`, ascending by `x`.
pub fn solve(ring: &StarRing, a: Elem, sys: SystemId, n_bound: Option<u32>) -> Vec<Witness> {
    solve_detailed(ring, a, sys, n_bound).witnesses
}

/// `(a in a^2 R, a in R a^2)`, each with its first witness.
pub fn left_right_witnesses(ring: &StarRing, a: Elem) -> (Option<Elem>, Option<Elem>) {
    let a2 = ring.mul(a, a);
    let s = ring.elements().find(|&s| ring.mul(a2, s) == a);
    let t = ring.elements().find(|&t| ring.mul(t, a2) == a);
    (s, t)
}

/// `(a in a^2 R, a in R a^2)`, decided exhaustively.
pub fn solvable_left_right(ring: &StarRing, a: Elem) -> (bool, bool) {
    let (s, t) = left_right_witnesses(ring, a);
    (s.is_some(), t.is_some())
}

#[cfg(test)]
mod tests;
