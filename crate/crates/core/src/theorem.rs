//! Registry of exhaustively checkable statements and their checkers.
//!
//! Every entry is evaluated over a whole ring (elements, pairs or triples).
//! A report is `verified` when no violation was found and at least one
//! element satisfied the hypothesis, `vacuous` when none did.

use serde::Serialize;

use crate::classify::{
    clean_cep_candidates, corner_projections, dmp_clean_candidates, dmp_unit_projection_candidates,
    ep_table, leq_forms, peirce, peirce_candidates, tripotent_product_candidates,
    tripotent_sum_candidates, unit_projection_candidates, verify_partial_order, Analysis,
    Hypothesis, Method,
};
use crate::error::{Error, Result};
use crate::ring::{Elem, StarRing, SubsetKind};
use crate::solver::{left_right_witnesses, SystemId};

/// Carrier limit for checks that loop over pairs or triples of elements.
pub const PAIR_CARRIER_LIMIT: u32 = 2000;

/// Violations kept verbatim in a report; the total is always counted.
pub const VIOLATION_LISTING: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    Equivalence,
    Implication,
    Uniqueness,
    Closure,
    OrderAxioms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    Elements,
    Pairs,
    Triples,
    Ring,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremInfo {
    pub id: &'static str,
    pub kind: ClaimKind,
    pub scope: Scope,
    /// Elements satisfying this are the ones the claim constrains.
    pub hypothesis: &'static str,
    pub statement: &'static str,
}

macro_rules! registry {
    ($( $id:literal : $kind:ident, $scope:ident, $hyp:literal, $stmt:literal; )+) => {
        pub const REGISTRY: &[TheoremInfo] = &[
            $( TheoremInfo {
                id: $id,
                kind: ClaimKind::$kind,
                scope: Scope::$scope,
                hypothesis: $hyp,
                statement: $stmt,
            }, )+
        ];
    };
}

registry! {
    "lem-commute": Implication, Pairs, "(ax)* = xa with one of a = xa^2, x = ax^2, a = a^2x, x = x^2a",
        "each of the four premises forces ax = xa";
    "ep-theo1": Equivalence, Elements, "any a",
        "EP <=> (exists x: a = xa^2, (ax)* = xa) <=> (exists x: a = a^2x, (ax)* = xa); every such x has xax = a^# = a^†";
    "ep-prop1": Equivalence, Elements, "any a",
        "EP <=> axa = a, x = ax^2, (ax)* = xa has exactly one solution x, and then x = a^# = a^†";
    "ep-eightway": Equivalence, Elements, "any a",
        "EP <=> each of the seven three-equation systems mixing {axa = a | a^2x = a | xa^2 = a} with {x = x^2a | x = ax^2 | x = xax} and (ax)* = xa has exactly one solution, which is a^# = a^†";
    "ep-13": Equivalence, Elements, "a has a {1,3}-inverse",
        "EP <=> exists x: axa = a, (ax)* = xa";
    "ep-14": Equivalence, Elements, "a has a {1,4}-inverse",
        "EP <=> exists x: axa = a, (ax)* = xa";
    "ep-dag": Equivalence, Elements, "a is MP invertible",
        "EP <=> exists x: axa = a, (ax)* = xa";
    "ep-a2r": Equivalence, Elements, "a in a^2R",
        "EP <=> exists x: axa = a, (ax)* = xa";
    "ep-ra2": Equivalence, Elements, "a in Ra^2",
        "EP <=> exists x: axa = a, (ax)* = xa";
    "ep-sharp": Equivalence, Elements, "a is group invertible",
        "EP <=> exists x: axa = a, (ax)* = xa";
    "cep-thm34": Equivalence, Elements, "any a",
        "CEP <=> a is central group invertible and MP invertible with a^† among its central group inverses";
    "cep-prop36": Uniqueness, Elements, "any a",
        "CEP <=> aza = a, zaz = z, (az)* = za central has exactly one solution z; then z = a^© = a^# = a^†";
    "cep-prop38": Equivalence, Elements, "any a",
        "CEP <=> EP and 1 - a^†a is central";
    "cep-cor39": Equivalence, Ring, "the ring",
        "every EP element is CEP <=> every projection is central";
    "cep-clean310": Equivalence, Elements, "any a",
        "CEP <=> a = u + p with u a unit, p a central projection, up = -p; (u, p) is unique";
    "cep-uq311": Equivalence, Elements, "any a",
        "CEP <=> a = uq with u a unit, q a central projection; q is unique";
    "cep-tri-sum": Equivalence, Elements, "any a",
        "CEP <=> a = u + p with u a unit, p = p^3, p^2 a central projection, up^2 = -p";
    "cep-tri-prod": Equivalence, Elements, "any a",
        "CEP <=> a = uq^2 with u a unit, q = q^3, q^2 a central projection";
    "cep-prod315": Closure, Pairs, "a, b both CEP",
        "ab is CEP with CEP-inverse b^©† a^©†";
    "cep-pow316": Closure, Elements, "a CEP",
        "a^n is CEP with CEP-inverse (a^©†)^n for every n >= 1";
    "cep-sum318": Closure, Pairs, "a, b CEP with xb = bx = 0 = ya = ay for x = a^©†, y = b^©†",
        "a + b is CEP with CEP-inverse x + y";
    "cep-peirce317": Equivalence, Elements, "any a",
        "CEP <=> some central projection p has a = diag(a1, 0) relative to p with a1 invertible in pRp <=> some central projection p has a invertible in pRp; that inverse is a^©†";
    "cep-ord321": Equivalence, Pairs, "a CEP, b arbitrary",
        "a = a^©†ab <=> a^©†a = a^©†b <=> aa^©† = ba^©† <=> some central projection p has a = diag(a1, 0), b = diag(a1, b2) with a1 invertible in pRp";
    "cep-order322": OrderAxioms, Triples, "a, b, c CEP",
        "a <= b iff a = a^©†ab is reflexive, antisymmetric and transitive on CEP elements";
    "dmp-lemma41-thm42": Equivalence, Elements, "any a",
        "some a^n is EP <=> aa^D is Hermitian <=> exists n, x: axa^n = a^n, ax^2 = x, (ax)* = xa; that x is unique and equals a^D";
    "dmp-clean43": Equivalence, Elements, "any a, with n = max(ind(a), 1)",
        "*-DMP <=> a^n = u + p with u a unit, p a projection, pa = ap, up = pu = -p; (u, p) is unique";
    "dmp-uq44": Equivalence, Elements, "any a, with n = max(ind(a), 1)",
        "*-DMP <=> a^n = uq = qu with u a unit, q a projection, aq = qa; q is unique";
    "inv-coherence": Equivalence, Elements, "any a",
        "a^† exists <=> {1,3}- and {1,4}-inverses exist; a^# exists <=> a in a^2R and a in Ra^2 <=> ind(a) <= 1; a^D exists; core inverse exists <=> pseudo core inverse exists with n = 1, and they coincide";
    "uniq-audit": Uniqueness, Elements, "any a",
        "mp, group, drazin, core, pseudo-core, cep-inv and dmp-sys each have at most one solution";
}

pub fn lookup(id: &str) -> Result<&'static TheoremInfo> {
    REGISTRY
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Verified,
    Refuted,
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Offending element(s), rendered as literals.
    pub elements: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub ring: String,
    pub theorem: &'static str,
    pub kind: ClaimKind,
    pub scope: Scope,
    /// Elements, pairs or triples examined.
    pub checked: u64,
    /// How many of those satisfied the hypothesis.
    pub in_scope: u64,
    pub violation_count: u64,
    /// The first [`VIOLATION_LISTING`] violations in canonical order.
    pub violations: Vec<Violation>,
    /// Named counts gathered along the way.
    pub facts: Vec<(String, u64)>,
    pub verdict: Verdict,
}

struct Tally<'r> {
    ring: &'r StarRing,
    checked: u64,
    in_scope: u64,
    violation_count: u64,
    violations: Vec<Violation>,
    facts: Vec<(String, u64)>,
}

impl<'r> Tally<'r> {
    fn new(ring: &'r StarRing) -> Self {
        Tally {
            ring,
            checked: 0,
            in_scope: 0,
            violation_count: 0,
            violations: Vec::new(),
            facts: Vec::new(),
        }
    }

    fn violation(&mut self, elements: &[Elem], detail: impl Into<String>) {
        self.violation_count += 1;
        if self.violations.len() < VIOLATION_LISTING {
            self.violations.push(Violation {
                elements: elements.iter().map(|&e| self.ring.show(e)).collect(),
                detail: detail.into(),
            });
        }
    }

    /// Records a violation unless every named verdict agrees.
    fn same(&mut self, a: Elem, verdicts: &[(&str, bool)]) {
        if verdicts.iter().any(|v| v.1 != verdicts[0].1) {
            let detail = verdicts
                .iter()
                .map(|(name, v)| format!("{name}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            self.violation(&[a], detail);
        }
    }

    fn require(&mut self, elems: &[Elem], ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.violation(elems, detail());
        }
    }

    fn fact(&mut self, name: &str, value: u64) {
        match self.facts.iter_mut().find(|(n, _)| n == name) {
            Some(f) => f.1 = value,
            None => self.facts.push((name.to_string(), value)),
        }
    }

    fn bump(&mut self, name: &str) {
        match self.facts.iter_mut().find(|(n, _)| n == name) {
            Some(f) => f.1 += 1,
            None => self.facts.push((name.to_string(), 1)),
        }
    }

    fn finish(self, info: &'static TheoremInfo) -> TheoremReport {
        let verdict = if self.violation_count > 0 {
            Verdict::Refuted
        } else if self.in_scope == 0 {
            Verdict::Vacuous
        } else {
            Verdict::Verified
        };
        TheoremReport {
            ring: self.ring.spec().to_string(),
            theorem: info.id,
            kind: info.kind,
            scope: info.scope,
            checked: self.checked,
            in_scope: self.in_scope,
            violation_count: self.violation_count,
            violations: self.violations,
            facts: self.facts,
            verdict,
        }
    }
}

fn guard_pairs(ring: &StarRing, id: &str) -> Result<()> {
    if ring.size() > PAIR_CARRIER_LIMIT {
        return Err(Error::BoundExceeded(format!(
            "{id} loops over pairs of elements; {ring} has {} elements, limit {PAIR_CARRIER_LIMIT}",
            ring.size()
        )));
    }
    Ok(())
}

/// Runs `f` on every element with `systems` solved in one shared pass.
fn each_element<'r: 't, 't>(
    ring: &'r StarRing,
    t: &mut Tally<'r>,
    systems: &[SystemId],
    table: Option<&'t [bool]>,
    mut f: impl FnMut(&Analysis<'t>, &mut Tally<'r>),
) {
    for a in ring.elements() {
        let mut an = Analysis::new(ring, a).expect("elements of the ring");
        if let Some(table) = table {
            an = an.with_ep_table(table);
        }
        an.prefetch(systems);
        t.checked += 1;
        f(&an, t);
    }
}

/// CEP-inverse of every element, indexed canonically.
fn cep_inverse_table(ring: &StarRing) -> Vec<Option<Elem>> {
    ring.elements()
        .map(|a| {
            Analysis::new(ring, a)
                .expect("elements of the ring")
                .cep_inverse()
        })
        .collect()
}

/// Exhaustively checks `id` over `ring`.
pub fn verify(ring: &StarRing, id: &str) -> Result<TheoremReport> {
    let info = lookup(id)?;
    let mut t = Tally::new(ring);
    let show = |e: Elem| ring.show(e);
    use SystemId as S;

    match info.id {
        "lem-commute" => {
            guard_pairs(ring, id)?;
            for a in ring.elements() {
                let a2 = ring.mul(a, a);
                for x in ring.elements() {
                    t.checked += 1;
                    let ax = ring.mul(a, x);
                    let xa = ring.mul(x, a);
                    if ring.star(ax) != xa {
                        continue;
                    }
                    let premises = [
                        ("a = xa^2", ring.mul(x, a2) == a),
                        ("x = ax^2", ring.mul(ax, x) == x),
                        ("a = a^2x", ring.mul(a2, x) == a),
                        ("x = x^2a", ring.mul(x, xa) == x),
                    ];
                    if premises.iter().any(|p| p.1) {
                        t.in_scope += 1;
                    }
                    for (name, holds) in premises {
                        if holds {
                            t.bump(name);
                            if ax != xa {
                                t.violation(&[a, x], format!("{name} and (ax)* = xa but ax != xa"));
                            }
                        }
                    }
                }
            }
        }
        "ep-theo1" => {
            let systems = [S::Group, S::Penrose1234, S::Theo1Left, S::Theo1Right];
            each_element(ring, &mut t, &systems, None, |an, t| {
                t.in_scope += 1;
                let a = an.element();
                let ep = an.is_ep();
                let left = an.solution(S::Theo1Left);
                let right = an.solution(S::Theo1Right);
                t.same(
                    a,
                    &[
                        ("ep", ep),
                        ("theo1-left", left.is_solvable()),
                        ("theo1-right", right.is_solvable()),
                    ],
                );
                if ep {
                    t.bump("ep");
                    let d = an.mp().expect("EP elements are MP invertible");
                    for w in left.witnesses.iter().chain(&right.witnesses) {
                        let xax = ring.product(&[w.x, a, w.x]);
                        t.require(&[a, w.x], xax == d, || {
                            format!("xax = {} differs from a^† = {}", show(xax), show(d))
                        });
                    }
                }
            });
        }
        "ep-prop1" | "ep-eightway" => {
            let systems: Vec<SystemId> = if info.id == "ep-prop1" {
                vec![S::Q2]
            } else {
                SystemId::EIGHT_WAY.to_vec()
            };
            let mut all = systems.clone();
            all.extend([S::Group, S::Penrose1234]);
            each_element(ring, &mut t, &all, None, |an, t| {
                t.in_scope += 1;
                let a = an.element();
                let ep = an.is_ep();
                for &sys in &systems {
                    let sol = an.solution(sys);
                    let unique = sol.count() == 1;
                    if ep != unique {
                        t.violation(
                            &[a],
                            format!("ep={ep} but {sys} has {} solutions", sol.count()),
                        );
                    } else if unique {
                        let x = sol.witnesses[0].x;
                        t.require(&[a, x], Some(x) == an.mp(), || {
                            format!("{sys} solution is not a^†")
                        });
                    }
                }
            });
        }
        "ep-13" | "ep-14" | "ep-dag" | "ep-a2r" | "ep-ra2" | "ep-sharp" => {
            let h = match info.id {
                "ep-13" => Hypothesis::H13,
                "ep-14" => Hypothesis::H14,
                "ep-dag" => Hypothesis::HDag,
                "ep-a2r" => Hypothesis::HA2R,
                "ep-ra2" => Hypothesis::HRa2,
                _ => Hypothesis::HSharp,
            };
            let mut systems = vec![S::AxaMixed, S::Group, S::Penrose1234];
            systems.extend_from_slice(h.systems());
            each_element(ring, &mut t, &systems, None, |an, t| {
                let c = an.conditional(h);
                if c.hypothesis_holds {
                    t.in_scope += 1;
                    if c.axa_mixed_solvable && !c.is_ep {
                        t.bump("outside-hypothesis-counterexamples");
                    }
                }
                t.require(&[an.element()], c.consistent(), || {
                    format!(
                        "{} holds, axa-mixed solvable={}, ep={}",
                        h.id(),
                        c.axa_mixed_solvable,
                        c.is_ep
                    )
                });
            });
            // Counterexamples to the unconditional claim that escape the hypothesis.
            let escaped = t
                .facts
                .iter()
                .find(|f| f.0 == "outside-hypothesis-counterexamples")
                .map(|f| f.1);
            t.facts.clear();
            if let Some(n) = escaped {
                t.fact("outside-hypothesis-counterexamples", n);
            }
        }
        "cep-thm34" => {
            each_element(
                ring,
                &mut t,
                &[S::CepDef, S::CGroup, S::Penrose1234],
                None,
                |an, t| {
                    t.in_scope += 1;
                    let cg = an.solution(S::CGroup);
                    if cg.count() > 1 {
                        t.bump("multiple-central-group-inverses");
                    }
                    t.same(
                        an.element(),
                        &[
                            ("cep.def", an.method(Method::CepDef)),
                            ("cep.cgmp", an.method(Method::CepCgMp)),
                        ],
                    );
                },
            );
        }
        "cep-prop36" => {
            let systems = [S::CepDef, S::CepInv, S::CGroup, S::Group, S::Penrose1234];
            each_element(ring, &mut t, &systems, None, |an, t| {
                t.in_scope += 1;
                let a = an.element();
                let cep = an.method(Method::CepDef);
                let inv = an.solution(S::CepInv);
                t.same(a, &[("cep.def", cep), ("cep.uniquez", inv.count() == 1)]);
                if cep && inv.count() == 1 {
                    t.bump("cep");
                    let z = inv.witnesses[0].x;
                    let cg = an.solution(S::CGroup);
                    let chain = cg.count() == 1
                        && cg.contains(z)
                        && an.group() == Some(z)
                        && an.mp() == Some(z);
                    t.require(&[a], chain, || {
                        format!(
                            "a^©† = {}, central group inverses {:?}, a^# = {:?}, a^† = {:?}",
                            show(z),
                            cg.witnesses.iter().map(|w| show(w.x)).collect::<Vec<_>>(),
                            an.group().map(show),
                            an.mp().map(show)
                        )
                    });
                }
            });
        }
        "cep-prop38" => {
            each_element(
                ring,
                &mut t,
                &[S::CepDef, S::Group, S::Penrose1234],
                None,
                |an, t| {
                    t.in_scope += 1;
                    t.same(
                        an.element(),
                        &[
                            ("cep.def", an.method(Method::CepDef)),
                            ("cep.epcentral", an.method(Method::CepEpCentral)),
                        ],
                    );
                },
            );
        }
        "cep-cor39" => {
            t.in_scope = 1;
            let mut ep_not_cep = None;
            each_element(
                ring,
                &mut t,
                &[S::CepDef, S::Group, S::Penrose1234],
                None,
                |an, t| {
                    if an.is_ep() {
                        t.bump("ep");
                        if an.method(Method::CepDef) {
                            t.bump("cep");
                        } else if ep_not_cep.is_none() {
                            ep_not_cep = Some(an.element());
                        }
                    }
                },
            );
            let p = ring.subset(SubsetKind::Projections);
            let cp = ring.subset(SubsetKind::CentralProjections);
            t.fact("projections", p.len() as u64);
            t.fact("central-projections", cp.len() as u64);
            let lhs = ep_not_cep.is_none();
            let rhs = p.members == cp.members;
            t.fact("every-ep-is-cep", u64::from(lhs));
            t.fact("projections-central", u64::from(rhs));
            if lhs != rhs {
                let witness: Vec<Elem> = ep_not_cep.into_iter().collect();
                t.violation(&witness, format!("every EP is CEP: {lhs}; P = CP: {rhs}"));
            }
        }
        "cep-clean310" => {
            each_element(ring, &mut t, &[S::CepDef, S::Penrose1234], None, |an, t| {
                t.in_scope += 1;
                let a = an.element();
                let cep = an.method(Method::CepDef);
                let found = clean_cep_candidates(ring, a);
                t.same(a, &[("cep.def", cep), ("cep.clean", !found.is_empty())]);
                if cep {
                    let d = an.mp().expect("CEP elements are MP invertible");
                    let aad = ring.mul(a, d);
                    let formula = (
                        ring.add(ring.sub(a, ring.one()), aad),
                        ring.sub(ring.one(), aad),
                    );
                    t.require(&[a], found == [formula], || {
                        format!(
                            "{} (u, p) pairs; closed form in search: {}",
                            found.len(),
                            found.contains(&formula)
                        )
                    });
                }
            });
        }
        "cep-uq311" => {
            each_element(ring, &mut t, &[S::CepDef, S::Penrose1234], None, |an, t| {
                t.in_scope += 1;
                let a = an.element();
                let cep = an.method(Method::CepDef);
                let found = unit_projection_candidates(ring, a);
                t.same(a, &[("cep.def", cep), ("cep.uq", !found.is_empty())]);
                if cep {
                    let q = ring.mul(an.mp().expect("CEP elements are MP invertible"), a);
                    t.require(&[a], found.len() == 1 && found[0].q == q, || {
                        format!("{} central projections q complete a = uq", found.len())
                    });
                    if found.iter().any(|f| f.u_count > 1) {
                        t.bump("non-unique-u");
                    }
                }
            });
        }
        "cep-tri-sum" | "cep-tri-prod" => {
            let sum = info.id == "cep-tri-sum";
            each_element(ring, &mut t, &[S::CepDef], None, |an, t| {
                t.in_scope += 1;
                let a = an.element();
                let (name, found) = if sum {
                    ("cep.trisum", !tripotent_sum_candidates(ring, a).is_empty())
                } else {
                    (
                        "cep.triprod",
                        !tripotent_product_candidates(ring, a).is_empty(),
                    )
                };
                t.same(a, &[("cep.def", an.method(Method::CepDef)), (name, found)]);
            });
        }
        "cep-prod315" | "cep-sum318" => {
            guard_pairs(ring, id)?;
            let inv = cep_inverse_table(ring);
            let cep: Vec<(Elem, Elem)> = ring
                .elements()
                .filter_map(|a| inv[a.index() as usize].map(|x| (a, x)))
                .collect();
            t.fact("cep-elements", cep.len() as u64);
            let zero = ring.zero();
            for &(a, x) in &cep {
                for &(b, y) in &cep {
                    t.checked += 1;
                    let (subject, formula, what) = if info.id == "cep-prod315" {
                        (ring.mul(a, b), ring.mul(y, x), "b^©† a^©†")
                    } else {
                        let orthogonal = [
                            ring.mul(x, b),
                            ring.mul(b, x),
                            ring.mul(y, a),
                            ring.mul(a, y),
                        ]
                        .iter()
                        .all(|&v| v == zero);
                        if !orthogonal {
                            continue;
                        }
                        (ring.add(a, b), ring.add(x, y), "x + y")
                    };
                    t.in_scope += 1;
                    let direct = inv[subject.index() as usize];
                    t.require(&[a, b], direct == Some(formula), || {
                        format!(
                            "{what} = {}, CEP-inverse of result = {:?}",
                            show(formula),
                            direct.map(show)
                        )
                    });
                }
            }
        }
        "cep-pow316" => {
            let inv = cep_inverse_table(ring);
            for a in ring.elements() {
                t.checked += 1;
                let Some(x) = inv[a.index() as usize] else {
                    continue;
                };
                t.in_scope += 1;
                // (a^n, x^n) repeats with the joint power cycle of a and x.
                let ca = ring.power_cycle(a);
                let cx = ring.power_cycle(x);
                let period = lcm(ca.period, cx.period);
                let bound = ca.preperiod.max(cx.preperiod) + period - 1;
                let (mut an, mut xn) = (a, x);
                for n in 1..=bound {
                    let direct = inv[an.index() as usize];
                    t.require(&[a], direct == Some(xn), || {
                        format!(
                            "n = {n}: (a^©†)^n = {}, CEP-inverse of a^n = {:?}",
                            show(xn),
                            direct.map(show)
                        )
                    });
                    an = ring.mul(an, a);
                    xn = ring.mul(xn, x);
                }
            }
        }
        "cep-peirce317" => {
            let cps = ring.subsets().members(ring, SubsetKind::CentralProjections);
            each_element(ring, &mut t, &[S::CepDef, S::CepInv], None, |an, t| {
                t.in_scope += 1;
                let a = an.element();
                let found = peirce_candidates(ring, a);
                let block_form = cps.iter().any(|&p| {
                    let b = peirce(ring, a, p).expect("projections are idempotent");
                    b.is_corner(ring) && corner_projections(ring, b.a11, &[p]) == [p]
                });
                t.same(
                    a,
                    &[
                        ("cep.def", an.method(Method::CepDef)),
                        ("block-form", block_form),
                        ("cep.peirce", !found.is_empty()),
                    ],
                );
                if let Some(z) = an.cep_inverse() {
                    for &(p, y) in &found {
                        t.require(&[a, p], y == z, || {
                            format!("inverse in pRp is {}, a^©† = {}", show(y), show(z))
                        });
                    }
                }
            });
        }
        "cep-ord321" => {
            let cps = ring.subsets().members(ring, SubsetKind::CentralProjections);
            let inv = cep_inverse_table(ring);
            for a in ring.elements() {
                let Some(z) = inv[a.index() as usize] else {
                    t.checked += ring.size() as u64;
                    continue;
                };
                let corners = corner_projections(ring, a, &cps);
                for b in ring.elements() {
                    t.checked += 1;
                    t.in_scope += 1;
                    let d = leq_forms(ring, a, z, b, &corners);
                    if d.definition {
                        t.bump("related-pairs");
                    }
                    t.require(&[a, b], d.agree(), || format!("{d:?}"));
                }
            }
        }
        "cep-order322" => {
            if ring.size() > PAIR_CARRIER_LIMIT {
                return Err(Error::BoundExceeded(format!(
                    "{id} loops over triples of CEP elements; {ring} has {} elements, limit {PAIR_CARRIER_LIMIT}",
                    ring.size()
                )));
            }
            let rep = verify_partial_order(ring)?;
            t.checked = rep.total_checks();
            t.in_scope = rep.total_checks();
            t.fact("cep-elements", rep.cep_elements.len() as u64);
            t.fact("reflexivity-checks", rep.reflexivity_checks);
            t.fact("antisymmetry-checks", rep.antisymmetry_checks);
            t.fact("transitivity-checks", rep.transitivity_checks);
            for v in &rep.violations {
                t.violation(&v.elements, v.axiom);
            }
        }
        "dmp-lemma41-thm42" => {
            let table = ep_table(ring);
            each_element(
                ring,
                &mut t,
                &[S::Drazin, S::DmpSys],
                Some(&table),
                |an, t| {
                    t.in_scope += 1;
                    let a = an.element();
                    let sys = an.solution(S::DmpSys);
                    let eppow = an.method(Method::DmpEpPow);
                    t.same(
                        a,
                        &[
                            ("dmp.eppow", eppow),
                            ("dmp.herm", an.method(Method::DmpHerm)),
                            ("dmp.sys", sys.is_solvable()),
                        ],
                    );
                    if eppow {
                        t.bump("star-dmp");
                    }
                    let (d, _) = an.drazin();
                    t.require(&[a], sys.count() <= 1, || {
                        format!("dmp-sys has {} solutions", sys.count())
                    });
                    if let Some(w) = sys.first() {
                        t.require(&[a, w.x], w.x == d, || {
                            format!("dmp-sys solution differs from a^D = {}", show(d))
                        });
                    }
                },
            );
        }
        "dmp-clean43" | "dmp-uq44" => {
            let table = ep_table(ring);
            let clean = info.id == "dmp-clean43";
            each_element(ring, &mut t, &[S::Drazin], Some(&table), |an, t| {
                t.in_scope += 1;
                let a = an.element();
                let dmp = an.method(Method::DmpEpPow);
                let n = an.dmp_exponent();
                let (x, _) = an.drazin();
                let ax = ring.mul(a, x);
                let u = ring.add(ring.sub(ring.pow(a, n), ring.one()), ax);
                if clean {
                    let found = dmp_clean_candidates(ring, a, n);
                    t.same(a, &[("dmp.eppow", dmp), ("dmp.clean", !found.is_empty())]);
                    if dmp {
                        let formula = (u, ring.sub(ring.one(), ax));
                        t.require(&[a], found == [formula], || {
                            format!(
                                "n = {n}: {} (u, p) pairs; closed form in search: {}",
                                found.len(),
                                found.contains(&formula)
                            )
                        });
                    }
                } else {
                    let found = dmp_unit_projection_candidates(ring, a, n);
                    t.same(a, &[("dmp.eppow", dmp), ("dmp.uq", !found.is_empty())]);
                    if dmp {
                        t.require(&[a], found.len() == 1 && found[0].q == ax, || {
                            format!(
                                "n = {n}: {} projections q complete a^n = uq = qu",
                                found.len()
                            )
                        });
                    }
                }
            });
        }
        "inv-coherence" => {
            let systems = [
                S::Penrose1234,
                S::Penrose13,
                S::Penrose14,
                S::Group,
                S::Drazin,
                S::Core,
                S::PseudoCore,
            ];
            each_element(ring, &mut t, &systems, None, |an, t| {
                t.in_scope += 1;
                let a = an.element();
                let solvable = |s| an.solution(s).is_solvable();
                t.same(
                    a,
                    &[
                        ("mp", solvable(S::Penrose1234)),
                        (
                            "p13 and p14",
                            solvable(S::Penrose13) && solvable(S::Penrose14),
                        ),
                    ],
                );
                let (l, r) = left_right_witnesses(ring, a);
                let drazin = an.solution(S::Drazin);
                let ind = drazin.first().and_then(|w| w.n);
                t.require(&[a], ind.is_some(), || "no Drazin inverse".to_string());
                t.same(
                    a,
                    &[
                        ("group", solvable(S::Group)),
                        ("a in a^2R and Ra^2", l.is_some() && r.is_some()),
                        ("ind <= 1", ind.is_some_and(|k| k <= 1)),
                    ],
                );
                let core = an.solution(S::Core);
                let pseudo = an.solution(S::PseudoCore);
                let pseudo_one = pseudo.first().filter(|w| w.n == Some(1)).map(|w| w.x);
                t.require(&[a], core.first().map(|w| w.x) == pseudo_one, || {
                    format!(
                        "core inverse {:?}, pseudo core inverse {:?} with n = {:?}",
                        core.first().map(|w| show(w.x)),
                        pseudo.first().map(|w| show(w.x)),
                        pseudo.first().and_then(|w| w.n)
                    )
                });
                if let Some(z) = an.cep_inverse() {
                    t.require(&[a], an.group() == Some(z) && an.mp() == Some(z), || {
                        "a^©† differs from a^# or a^†".to_string()
                    });
                }
            });
        }
        "uniq-audit" => {
            const UNIQUE: [SystemId; 7] = [
                S::Penrose1234,
                S::Group,
                S::Drazin,
                S::Core,
                S::PseudoCore,
                S::CepInv,
                S::DmpSys,
            ];
            each_element(ring, &mut t, &UNIQUE, None, |an, t| {
                t.in_scope += 1;
                for sys in UNIQUE {
                    let c = an.solution(sys).count();
                    t.require(&[an.element()], c <= 1, || {
                        format!("{sys} has {c} solutions")
                    });
                }
            });
        }
        other => unreachable!("registry entry {other} has no checker"),
    }
    Ok(t.finish(info))
}

fn lcm(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Reports for several theorems over one ring.
pub fn verify_all(ring: &StarRing, ids: &[&str]) -> Result<Vec<TheoremReport>> {
    ids.iter().map(|id| verify(ring, id)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ring;

    fn run(spec: &str, id: &str) -> TheoremReport {
        verify(&parse_ring(spec).unwrap(), id).unwrap()
    }

    #[test]
    fn registry_ids_are_unique_and_resolvable() {
        for (i, t) in REGISTRY.iter().enumerate() {
            assert!(
                REGISTRY[..i].iter().all(|u| u.id != t.id),
                "duplicate {}",
                t.id
            );
            assert_eq!(lookup(t.id).unwrap().id, t.id);
        }
        assert!(matches!(lookup("nope"), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn every_entry_verifies_on_small_rings() {
        for spec in [
            "zn(2)",
            "zn(4)",
            "zn(6)",
            "gauss(2)",
            "mat(2,zn(2),transpose)",
        ] {
            for t in REGISTRY {
                let rep = run(spec, t.id);
                assert_eq!(
                    rep.verdict,
                    Verdict::Verified,
                    "{spec} {}: {:?}",
                    t.id,
                    rep.violations
                );
            }
        }
    }

    #[test]
    fn theo1_counts_elements() {
        let rep = run("mat(2,zn(3),transpose)", "ep-theo1");
        assert_eq!(rep.checked, 81);
        assert_eq!(rep.violation_count, 0);
    }

    #[test]
    fn order_counts_on_z6() {
        let rep = run("zn(6)", "cep-order322");
        assert_eq!(rep.checked, 6 + 36 + 216);
        assert_eq!(rep.verdict, Verdict::Verified);
    }

    #[test]
    fn ep_need_not_be_cep_when_projections_are_not_central() {
        let rep = run("mat(2,zn(2),transpose)", "cep-cor39");
        assert_eq!(rep.verdict, Verdict::Verified);
        let fact = |n: &str| rep.facts.iter().find(|f| f.0 == n).unwrap().1;
        assert_eq!(fact("every-ep-is-cep"), 0);
        assert_eq!(fact("projections-central"), 0);
    }

    #[test]
    fn pair_guard() {
        let big = parse_ring("mat(2,gauss(3),conjtranspose)").unwrap();
        assert!(matches!(
            verify(&big, "lem-commute"),
            Err(Error::BoundExceeded(_))
        ));
        assert!(matches!(
            verify(&big, "cep-order322"),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn conditional_scope_is_hypothesis_holders() {
        let rep = run("mat(2,zn(2),transpose)", "ep-a2r");
        assert!(rep.in_scope > 0);
    }
}
