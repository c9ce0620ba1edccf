//! EP, central EP (CEP) and `*`-DMP classification.
//!
//! Each characterization is a separate [`Method`]. The umbrella predicates
//! run every method of a predicate and record disagreements rather than
//! trusting a single characterization.

mod decompose;
mod order;
#[cfg(test)]
mod tests;

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::inverse::{InverseKind, InverseResult};
use crate::ring::{Elem, StarRing};
use crate::solver::{left_right_witnesses, solve_many, Solution, SystemId};

pub use decompose::{
    clean_cep_candidates, decompose, dmp_clean_candidates, dmp_unit_projection_candidates, peirce,
    peirce_candidates, tripotent_product_candidates, tripotent_sum_candidates,
    unit_projection_candidates, Decomposition, DecompositionKind, Part, PeirceBlocks, UnitFactor,
};
pub use order::{
    cep_leq, cep_leq_detail, cep_power, cep_product, cep_sum, corner_projections, leq_forms,
    verify_partial_order, LeqDetail, OrderReport, OrderViolation, ORDER_CARRIER_LIMIT,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    Ep,
    Cep,
    StarDmp,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::Ep => "ep",
            Predicate::Cep => "cep",
            Predicate::StarDmp => "star-dmp",
        }
    }

    pub fn methods(self) -> impl Iterator<Item = Method> {
        Method::ALL
            .iter()
            .copied()
            .filter(move |m| m.predicate() == self)
    }
}

macro_rules! methods {
    ($( $variant:ident = $id:literal ($pred:ident) ),+ $(,)?) => {
        /// One characterization of EP, CEP or `*`-DMP.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Method {
            $( $variant, )+
        }

        impl Method {
            pub const ALL: &'static [Method] = &[$(Method::$variant),+];

            pub fn id(self) -> &'static str {
                match self {
                    $( Method::$variant => $id, )+
                }
            }

            pub fn predicate(self) -> Predicate {
                match self {
                    $( Method::$variant => Predicate::$pred, )+
                }
            }
        }

        impl FromStr for Method {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $( $id => Ok(Method::$variant), )+
                    other => Err(Error::InvalidArgument(format!("unknown method `{other}`"))),
                }
            }
        }
    };
}

methods! {
    EpDef = "ep.def" (Ep),
    EpXu = "ep.xu" (Ep),
    EpT1L = "ep.t1l" (Ep),
    EpT1R = "ep.t1r" (Ep),
    EpSharpStar = "ep.sharpstar" (Ep),
    EpEight2 = "ep.eight.2" (Ep),
    EpEight3 = "ep.eight.3" (Ep),
    EpEight4 = "ep.eight.4" (Ep),
    EpEight5 = "ep.eight.5" (Ep),
    EpEight6 = "ep.eight.6" (Ep),
    EpEight7 = "ep.eight.7" (Ep),
    EpEight8 = "ep.eight.8" (Ep),
    CepDef = "cep.def" (Cep),
    CepCgMp = "cep.cgmp" (Cep),
    CepUniqueZ = "cep.uniquez" (Cep),
    CepEpCentral = "cep.epcentral" (Cep),
    CepClean = "cep.clean" (Cep),
    CepUq = "cep.uq" (Cep),
    CepTriSum = "cep.trisum" (Cep),
    CepTriProd = "cep.triprod" (Cep),
    CepPeirce = "cep.peirce" (Cep),
    DmpEpPow = "dmp.eppow" (StarDmp),
    DmpHerm = "dmp.herm" (StarDmp),
    DmpSys = "dmp.sys" (StarDmp),
    DmpClean = "dmp.clean" (StarDmp),
    DmpUq = "dmp.uq" (StarDmp),
}

impl Method {
    /// Systems this method reads from the solver.
    pub fn systems(self) -> &'static [SystemId] {
        use SystemId as S;
        match self {
            Method::EpDef => &[S::Group, S::Penrose1234],
            Method::EpXu => &[S::EpXu],
            Method::EpT1L => &[S::Theo1Left],
            Method::EpT1R => &[S::Theo1Right],
            Method::EpSharpStar => &[S::Group],
            Method::EpEight2 => &[S::Eight2],
            Method::EpEight3 => &[S::Eight3],
            Method::EpEight4 => &[S::Eight4],
            Method::EpEight5 => &[S::Eight5],
            Method::EpEight6 => &[S::Eight6],
            Method::EpEight7 => &[S::Eight7],
            Method::EpEight8 => &[S::Eight8],
            Method::CepDef => &[S::CepDef],
            Method::CepCgMp => &[S::CGroup, S::Penrose1234],
            Method::CepUniqueZ => &[S::CepInv],
            Method::CepEpCentral => &[S::Group, S::Penrose1234],
            Method::CepClean
            | Method::CepUq
            | Method::CepTriSum
            | Method::CepTriProd
            | Method::CepPeirce => &[],
            Method::DmpEpPow => &[],
            Method::DmpHerm | Method::DmpClean | Method::DmpUq => &[S::Drazin],
            Method::DmpSys => &[S::DmpSys],
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Method {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// Side condition of a conditional EP characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hypothesis {
    /// `a` has a `{1,3}`-inverse.
    H13,
    /// `a` has a `{1,4}`-inverse.
    H14,
    /// `a` is Moore-Penrose invertible.
    HDag,
    /// `a in a^2 R`.
    HA2R,
    /// `a in R a^2`.
    HRa2,
    /// `a` is group invertible.
    HSharp,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 6] = [
        Hypothesis::H13,
        Hypothesis::H14,
        Hypothesis::HDag,
        Hypothesis::HA2R,
        Hypothesis::HRa2,
        Hypothesis::HSharp,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Hypothesis::H13 => "h13",
            Hypothesis::H14 => "h14",
            Hypothesis::HDag => "hdag",
            Hypothesis::HA2R => "h-a2R",
            Hypothesis::HRa2 => "h-Ra2",
            Hypothesis::HSharp => "hsharp",
        }
    }

    pub fn systems(self) -> &'static [SystemId] {
        match self {
            Hypothesis::H13 => &[SystemId::Penrose13],
            Hypothesis::H14 => &[SystemId::Penrose14],
            Hypothesis::HDag => &[SystemId::Penrose1234],
            Hypothesis::HSharp => &[SystemId::Group],
            Hypothesis::HA2R | Hypothesis::HRa2 => &[],
        }
    }
}

impl FromStr for Hypothesis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Hypothesis::ALL
            .into_iter()
            .find(|h| h.id() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown hypothesis `{s}`")))
    }
}

impl Serialize for Hypothesis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// `(hypothesis_holds, axa_mixed_solvable, is_ep)` for one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConditionalVerdict {
    pub hypothesis: Hypothesis,
    pub hypothesis_holds: bool,
    pub axa_mixed_solvable: bool,
    pub is_ep: bool,
}

impl ConditionalVerdict {
    /// Under the hypothesis, solvability of `axa = a, (ax)* = xa` and EP coincide.
    pub fn consistent(&self) -> bool {
        !self.hypothesis_holds || self.axa_mixed_solvable == self.is_ep
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodVerdict {
    pub method: Method,
    pub holds: bool,
    /// Exponent reported by the method, for `*`-DMP methods.
    pub index: Option<u32>,
    pub note: Option<String>,
}

/// All methods of one predicate. `holds` is the verdict of the defining method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateVerdict {
    pub predicate: Predicate,
    pub holds: bool,
    pub methods: Vec<MethodVerdict>,
}

impl PredicateVerdict {
    pub fn disagreements(&self) -> Vec<Method> {
        self.methods
            .iter()
            .filter(|m| m.holds != self.holds)
            .map(|m| m.method)
            .collect()
    }

    pub fn agree(&self) -> bool {
        self.methods.iter().all(|m| m.holds == self.holds)
    }
}

/// Lazily solved view of one element. Solutions are cached per system and
/// fetched in shared passes when requested together.
pub struct Analysis<'r> {
    ring: &'r StarRing,
    a: Elem,
    solutions: RefCell<BTreeMap<SystemId, Rc<Solution>>>,
    ep_memo: RefCell<HashMap<Elem, bool>>,
    ep_table: Option<&'r [bool]>,
}

impl<'r> Analysis<'r> {
    pub fn new(ring: &'r StarRing, a: Elem) -> Result<Self> {
        ring.ensure(a)?;
        Ok(Analysis {
            ring,
            a,
            solutions: RefCell::new(BTreeMap::new()),
            ep_memo: RefCell::new(HashMap::new()),
            ep_table: None,
        })
    }

    /// Supplies EP verdicts for every element, indexed canonically, so that
    /// powers of `a` need no further solving.
    pub fn with_ep_table(mut self, table: &'r [bool]) -> Self {
        debug_assert_eq!(table.len(), self.ring.size() as usize);
        self.ep_table = Some(table);
        self
    }

    pub fn ring(&self) -> &'r StarRing {
        self.ring
    }

    pub fn element(&self) -> Elem {
        self.a
    }

    /// Solves every missing system among `systems` in one pass.
    pub fn prefetch(&self, systems: &[SystemId]) {
        let mut missing: Vec<SystemId> = {
            let cache = self.solutions.borrow();
            systems
                .iter()
                .copied()
                .filter(|s| !cache.contains_key(s))
                .collect()
        };
        missing.sort();
        missing.dedup();
        if missing.is_empty() {
            return;
        }
        let solved = solve_many(self.ring, self.a, &missing, None);
        let mut cache = self.solutions.borrow_mut();
        for sol in solved {
            cache.insert(sol.system, Rc::new(sol));
        }
    }

    pub fn prefetch_methods(&self, methods: &[Method]) {
        let systems: Vec<SystemId> = methods
            .iter()
            .flat_map(|m| m.systems().iter().copied())
            .collect();
        self.prefetch(&systems);
    }

    pub fn solution(&self, sys: SystemId) -> Rc<Solution> {
        self.prefetch(&[sys]);
        Rc::clone(&self.solutions.borrow()[&sys])
    }

    fn first(&self, sys: SystemId) -> Option<Elem> {
        self.solution(sys).first().map(|w| w.x)
    }

    fn solvable(&self, sys: SystemId) -> bool {
        self.solution(sys).is_solvable()
    }

    pub fn inverse(&self, kind: InverseKind) -> InverseResult {
        InverseResult::from_solution(kind, &self.solution(kind.system()))
    }

    pub fn mp(&self) -> Option<Elem> {
        self.first(SystemId::Penrose1234)
    }

    pub fn group(&self) -> Option<Elem> {
        self.first(SystemId::Group)
    }

    /// `(a^D, ind(a))`. Always present in a finite ring.
    pub fn drazin(&self) -> (Elem, u32) {
        let sol = self.solution(SystemId::Drazin);
        let w = sol
            .first()
            .expect("every element of a finite ring is Drazin invertible");
        (w.x, w.n.expect("Drazin witnesses carry an exponent"))
    }

    pub fn cep_inverse(&self) -> Option<Elem> {
        self.first(SystemId::CepInv)
    }

    /// Exponent used by the `*`-DMP decompositions: `max(ind(a), 1)`.
    pub fn dmp_exponent(&self) -> u32 {
        self.drazin().1.max(1)
    }

    /// `a^# = a^†`.
    pub fn is_ep(&self) -> bool {
        self.prefetch(&[SystemId::Group, SystemId::Penrose1234]);
        match (self.group(), self.mp()) {
            (Some(g), Some(m)) => g == m,
            _ => false,
        }
    }

    fn ep_of(&self, b: Elem) -> bool {
        if let Some(table) = self.ep_table {
            return table[b.index() as usize];
        }
        if b == self.a {
            return self.is_ep();
        }
        if let Some(&v) = self.ep_memo.borrow().get(&b) {
            return v;
        }
        let v = is_ep(self.ring, b);
        self.ep_memo.borrow_mut().insert(b, v);
        v
    }

    /// Least `n >= 1` with `a^n` EP, searched over every distinct power.
    pub fn dmp_index(&self) -> Option<u32> {
        let bound = self.ring.power_cycle(self.a).exponent_bound();
        (1..=bound).find(|&n| self.ep_of(self.ring.pow(self.a, n)))
    }

    pub fn method(&self, m: Method) -> bool {
        self.method_detail(m).holds
    }

    pub fn method_detail(&self, m: Method) -> MethodVerdict {
        let ring = self.ring;
        let a = self.a;
        let mut index = None;
        let mut note = None;
        let holds = match m {
            Method::EpDef => self.is_ep(),
            Method::EpXu => self.solvable(SystemId::EpXu),
            Method::EpT1L => self.solvable(SystemId::Theo1Left),
            Method::EpT1R => self.solvable(SystemId::Theo1Right),
            Method::EpSharpStar => match self.group() {
                Some(g) => ring.is_hermitian(ring.mul(g, a)),
                None => {
                    note = Some("not group invertible".to_string());
                    false
                }
            },
            Method::EpEight2
            | Method::EpEight3
            | Method::EpEight4
            | Method::EpEight5
            | Method::EpEight6
            | Method::EpEight7
            | Method::EpEight8 => {
                let count = self.solution(m.systems()[0]).count();
                if count > 1 {
                    note = Some(format!("{count} solutions"));
                }
                count == 1
            }
            Method::CepDef => self.solvable(SystemId::CepDef),
            Method::CepCgMp => {
                self.prefetch(m.systems());
                match self.mp() {
                    Some(d) => self.solution(SystemId::CGroup).contains(d),
                    None => false,
                }
            }
            Method::CepUniqueZ => self.solution(SystemId::CepInv).count() == 1,
            Method::CepEpCentral => {
                self.is_ep() && {
                    let d = self.mp().expect("EP elements are MP invertible");
                    let e = ring.sub(ring.one(), ring.mul(d, a));
                    ring.commutes_with_all(e)
                }
            }
            Method::CepClean => !clean_cep_candidates(ring, a).is_empty(),
            Method::CepUq => !unit_projection_candidates(ring, a).is_empty(),
            Method::CepTriSum => !tripotent_sum_candidates(ring, a).is_empty(),
            Method::CepTriProd => !tripotent_product_candidates(ring, a).is_empty(),
            Method::CepPeirce => !peirce_candidates(ring, a).is_empty(),
            Method::DmpEpPow => {
                index = self.dmp_index();
                index.is_some()
            }
            Method::DmpHerm => {
                let (d, _) = self.drazin();
                ring.is_hermitian(ring.mul(a, d))
            }
            Method::DmpSys => {
                let sol = self.solution(SystemId::DmpSys);
                index = sol.first().and_then(|w| w.n);
                sol.is_solvable()
            }
            Method::DmpClean => {
                let n = self.dmp_exponent();
                index = Some(n);
                !dmp_clean_candidates(ring, a, n).is_empty()
            }
            Method::DmpUq => {
                let n = self.dmp_exponent();
                index = Some(n);
                !dmp_unit_projection_candidates(ring, a, n).is_empty()
            }
        };
        MethodVerdict {
            method: m,
            holds,
            index: if holds { index } else { None },
            note,
        }
    }

    /// Runs every method of `p`; `holds` follows the defining method.
    pub fn verdict(&self, p: Predicate) -> PredicateVerdict {
        let methods: Vec<Method> = p.methods().collect();
        self.prefetch_methods(&methods);
        let methods: Vec<MethodVerdict> =
            methods.into_iter().map(|m| self.method_detail(m)).collect();
        PredicateVerdict {
            predicate: p,
            holds: methods[0].holds,
            methods,
        }
    }

    pub fn hypothesis(&self, h: Hypothesis) -> bool {
        match h {
            Hypothesis::H13 => self.solvable(SystemId::Penrose13),
            Hypothesis::H14 => self.solvable(SystemId::Penrose14),
            Hypothesis::HDag => self.solvable(SystemId::Penrose1234),
            Hypothesis::HSharp => self.solvable(SystemId::Group),
            Hypothesis::HA2R => left_right_witnesses(self.ring, self.a).0.is_some(),
            Hypothesis::HRa2 => left_right_witnesses(self.ring, self.a).1.is_some(),
        }
    }

    pub fn conditional(&self, h: Hypothesis) -> ConditionalVerdict {
        let mut systems = vec![SystemId::AxaMixed, SystemId::Group, SystemId::Penrose1234];
        systems.extend_from_slice(h.systems());
        self.prefetch(&systems);
        ConditionalVerdict {
            hypothesis: h,
            hypothesis_holds: self.hypothesis(h),
            axa_mixed_solvable: self.solvable(SystemId::AxaMixed),
            is_ep: self.is_ep(),
        }
    }
}

/// `a^# = a^†`, solved directly.
pub fn is_ep(ring: &StarRing, a: Elem) -> bool {
    let sols = solve_many(ring, a, &[SystemId::Group, SystemId::Penrose1234], None);
    match (sols[0].first(), sols[1].first()) {
        (Some(g), Some(m)) => g.x == m.x,
        _ => false,
    }
}

/// EP verdicts for every element, indexed canonically.
pub fn ep_table(ring: &StarRing) -> Vec<bool> {
    ring.elements().map(|a| is_ep(ring, a)).collect()
}

/// Whether `a` satisfies `method`.
pub fn check_method(ring: &StarRing, a: Elem, method: Method) -> Result<bool> {
    Ok(Analysis::new(ring, a)?.method(method))
}

pub fn is_ep_conditional(ring: &StarRing, a: Elem, h: Hypothesis) -> Result<ConditionalVerdict> {
    Ok(Analysis::new(ring, a)?.conditional(h))
}

/// Solution summary of one system in a classification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemSummary {
    pub system: SystemId,
    pub count: usize,
    /// Leading witnesses in canonical order, at most [`WITNESS_LISTING`].
    pub witnesses: Vec<(Elem, Option<u32>)>,
}

/// Witnesses listed per system in a classification report.
pub const WITNESS_LISTING: usize = 8;

/// Everything known about one element.
#[derive(Debug, Clone)]
pub struct ClassReport {
    pub element: Elem,
    pub is_ep: bool,
    pub is_cep: bool,
    pub is_star_dmp: bool,
    pub dmp_index: Option<u32>,
    pub verdicts: Vec<PredicateVerdict>,
    pub conditionals: Vec<ConditionalVerdict>,
    pub inverses: Vec<InverseResult>,
    pub systems: Vec<SystemSummary>,
    pub decompositions: Vec<Decomposition>,
}

impl ClassReport {
    /// `(predicate, method)` pairs that contradict their predicate's verdict,
    /// plus violated implications between predicates.
    pub fn disagreements(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .verdicts
            .iter()
            .flat_map(|v| {
                v.disagreements()
                    .into_iter()
                    .map(move |m| format!("{} disagrees with {}", m, v.predicate.name()))
            })
            .collect();
        if self.is_cep && !self.is_ep {
            out.push("CEP element is not EP".to_string());
        }
        if self.is_ep && self.dmp_index != Some(1) {
            out.push("EP element does not have *-DMP index 1".to_string());
        }
        out.extend(
            self.conditionals
                .iter()
                .filter(|c| !c.consistent())
                .map(|c| {
                    format!(
                        "conditional characterization fails under {}",
                        c.hypothesis.id()
                    )
                }),
        );
        out
    }
}

/// Full classification of `a`: every inverse, every method, every
/// conditional characterization and the decompositions its predicates allow.
pub fn classify(ring: &StarRing, a: Elem) -> Result<ClassReport> {
    let an = Analysis::new(ring, a)?;
    an.prefetch(SystemId::ALL);

    let verdicts: Vec<PredicateVerdict> = [Predicate::Ep, Predicate::Cep, Predicate::StarDmp]
        .into_iter()
        .map(|p| an.verdict(p))
        .collect();
    let (is_ep, is_cep, is_star_dmp) = (verdicts[0].holds, verdicts[1].holds, verdicts[2].holds);
    let dmp_index = an.dmp_index();

    let conditionals = Hypothesis::ALL
        .into_iter()
        .map(|h| an.conditional(h))
        .collect();
    let inverses = InverseKind::ALL
        .into_iter()
        .map(|k| an.inverse(k))
        .collect();
    let systems = SystemId::ALL
        .iter()
        .map(|&s| {
            let sol = an.solution(s);
            SystemSummary {
                system: s,
                count: sol.count(),
                witnesses: sol
                    .witnesses
                    .iter()
                    .take(WITNESS_LISTING)
                    .map(|w| (w.x, w.n))
                    .collect(),
            }
        })
        .collect();

    let mut kinds = Vec::new();
    if is_cep {
        kinds.extend([
            DecompositionKind::CleanCep,
            DecompositionKind::UnitProjection,
            DecompositionKind::TripotentSum,
            DecompositionKind::TripotentProduct,
        ]);
    }
    if is_star_dmp {
        kinds.extend([
            DecompositionKind::DmpClean,
            DecompositionKind::DmpUnitProjection,
        ]);
    }
    let decompositions = kinds
        .into_iter()
        .map(|k| decompose::decompose_with(&an, k))
        .collect::<Result<Vec<_>>>()?;

    Ok(ClassReport {
        element: a,
        is_ep,
        is_cep,
        is_star_dmp,
        dmp_index,
        verdicts,
        conditionals,
        inverses,
        systems,
        decompositions,
    })
}
