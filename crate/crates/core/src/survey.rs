//! Whole-ring counts of distinguished subsets and invertibility classes.

use serde::Serialize;

use crate::ring::{StarRing, SubsetKind};
use crate::solver::{solve_many, SystemId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurveyCounts {
    pub size: u64,
    pub units: u64,
    pub projections: u64,
    pub central_projections: u64,
    pub group_invertible: u64,
    pub mp_invertible: u64,
    pub ep: u64,
    pub cep: u64,
    pub star_dmp: u64,
    pub core_invertible: u64,
}

/// How the `q3` system relates to the `dmp-sys` system, elementwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Q3Relation {
    pub q3_solvable: u64,
    pub dmp_sys_solvable: u64,
    pub both: u64,
    pub q3_only: u64,
    pub dmp_sys_only: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Invariant {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyReport {
    pub ring: String,
    pub counts: SurveyCounts,
    pub q3_relation: Q3Relation,
    pub invariants: Vec<Invariant>,
}

impl SurveyReport {
    pub fn invariants_hold(&self) -> bool {
        self.invariants.iter().all(|i| i.holds)
    }
}

const SYSTEMS: [SystemId; 6] = [
    SystemId::Group,
    SystemId::Penrose1234,
    SystemId::CepInv,
    SystemId::Core,
    SystemId::Q3,
    SystemId::DmpSys,
];

pub fn survey(ring: &StarRing) -> SurveyReport {
    let mut c = SurveyCounts {
        size: ring.size() as u64,
        units: ring.subset(SubsetKind::Units).len() as u64,
        projections: ring.subset(SubsetKind::Projections).len() as u64,
        central_projections: ring.subset(SubsetKind::CentralProjections).len() as u64,
        group_invertible: 0,
        mp_invertible: 0,
        ep: 0,
        cep: 0,
        star_dmp: 0,
        core_invertible: 0,
    };
    let mut q = Q3Relation {
        q3_solvable: 0,
        dmp_sys_solvable: 0,
        both: 0,
        q3_only: 0,
        dmp_sys_only: 0,
    };
    let mut ep = Vec::with_capacity(ring.size() as usize);
    for a in ring.elements() {
        let [group, mp, cep, core, q3, dmp] =
            <[_; 6]>::try_from(solve_many(ring, a, &SYSTEMS, None))
                .expect("one solution per system");
        let is_ep = matches!((group.first(), mp.first()), (Some(g), Some(m)) if g.x == m.x);
        ep.push(is_ep);
        c.group_invertible += u64::from(group.is_solvable());
        c.mp_invertible += u64::from(mp.is_solvable());
        c.ep += u64::from(is_ep);
        c.cep += u64::from(cep.is_solvable());
        c.core_invertible += u64::from(core.is_solvable());
        let (q3, dmp) = (q3.is_solvable(), dmp.is_solvable());
        q.q3_solvable += u64::from(q3);
        q.dmp_sys_solvable += u64::from(dmp);
        q.both += u64::from(q3 && dmp);
        q.q3_only += u64::from(q3 && !dmp);
        q.dmp_sys_only += u64::from(dmp && !q3);
    }
    for a in ring.elements() {
        // The powers a^1 .. a^bound cover every positive power.
        let bound = ring.power_cycle(a).exponent_bound();
        let mut p = a;
        for _ in 0..bound {
            if ep[p.index() as usize] {
                c.star_dmp += 1;
                break;
            }
            p = ring.mul(p, a);
        }
    }
    let invariants = vec![
        Invariant {
            name: "#CEP <= #EP",
            holds: c.cep <= c.ep,
        },
        Invariant {
            name: "#EP <= #*-DMP",
            holds: c.ep <= c.star_dmp,
        },
        Invariant {
            name: "#*-DMP <= |R|",
            holds: c.star_dmp <= c.size,
        },
        Invariant {
            name: "#EP <= min(#group, #MP)",
            holds: c.ep <= c.group_invertible.min(c.mp_invertible),
        },
    ];
    SurveyReport {
        ring: ring.spec().to_string(),
        counts: c,
        q3_relation: q,
        invariants,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, is_ep};
    use crate::parse::parse_ring;

    fn counts(spec: &str) -> SurveyCounts {
        survey(&parse_ring(spec).unwrap()).counts
    }

    #[test]
    fn small_ring_counts() {
        let z4 = counts("zn(4)");
        assert_eq!((z4.size, z4.ep, z4.cep, z4.star_dmp), (4, 3, 3, 4));
        let z6 = counts("zn(6)");
        assert_eq!((z6.ep, z6.cep), (6, 6));
        let m = counts("mat(2,zn(2),transpose)");
        assert_eq!((m.size, m.units, m.cep), (16, 6, 7));
    }

    #[test]
    fn counts_match_per_element_classification() {
        for spec in ["zn(8)", "gauss(2)", "mat(2,zn(2),transpose)"] {
            let r = parse_ring(spec).unwrap();
            let rep = survey(&r);
            assert!(rep.invariants_hold(), "{spec}");
            let reports: Vec<_> = r.elements().map(|a| classify(&r, a).unwrap()).collect();
            let n = |f: &dyn Fn(&crate::classify::ClassReport) -> bool| {
                reports.iter().filter(|c| f(c)).count() as u64
            };
            assert_eq!(rep.counts.ep, n(&|c| c.is_ep), "{spec}");
            assert_eq!(rep.counts.cep, n(&|c| c.is_cep), "{spec}");
            assert_eq!(rep.counts.star_dmp, n(&|c| c.is_star_dmp), "{spec}");
            assert_eq!(
                rep.counts.ep,
                r.elements().filter(|&a| is_ep(&r, a)).count() as u64
            );
        }
    }
}
