use proptest::prelude::*;

use super::*;
use crate::parse::{parse_elem, parse_ring};
use crate::ring::SubsetKind;

fn ring(spec: &str) -> StarRing {
    parse_ring(spec).unwrap()
}

fn el(r: &StarRing, lit: &str) -> Elem {
    parse_elem(r, lit).unwrap()
}

const SMALL: &[&str] = &[
    "zn(2)",
    "zn(4)",
    "zn(6)",
    "zn(8)",
    "zn(12)",
    "gauss(2)",
    "gauss(3)",
    "mat(2,zn(2),transpose)",
    "mat(2,zn(3),transpose)",
    "mat(2,gauss(2),conjtranspose)",
];

#[test]
fn ep_examples() {
    let m2 = ring("mat(2,zn(2),transpose)");
    let p = el(&m2, "[[1,0],[0,0]]");
    let an = Analysis::new(&m2, p).unwrap();
    let v = an.verdict(Predicate::Ep);
    assert!(v.holds && v.agree(), "{v:?}");
    assert_eq!(an.group(), Some(p));
    assert_eq!(an.mp(), Some(p));
    assert_eq!(m2.star(p), p);

    let nil = el(&m2, "[[0,1],[0,0]]");
    let an = Analysis::new(&m2, nil).unwrap();
    assert!(an.mp().is_some() && an.group().is_none());
    let v = an.verdict(Predicate::Ep);
    assert!(!v.holds && v.agree());

    let m5 = ring("mat(2,zn(5),transpose)");
    let a = el(&m5, "[[1,2],[2,4]]");
    let an = Analysis::new(&m5, a).unwrap();
    assert!(an.solution(SystemId::AxaMixed).is_solvable());
    let v = an.verdict(Predicate::Ep);
    assert!(!v.holds && v.agree());
}

#[test]
fn sharp_star_needs_group_inverse() {
    let z4 = ring("zn(4)");
    let v = Analysis::new(&z4, el(&z4, "2"))
        .unwrap()
        .method_detail(Method::EpSharpStar);
    assert!(!v.holds);
    assert!(v.note.is_some());
}

#[test]
fn conditional_examples() {
    let z6 = ring("zn(6)");
    let c = is_ep_conditional(&z6, el(&z6, "2"), Hypothesis::HSharp).unwrap();
    assert_eq!(
        (c.hypothesis_holds, c.axa_mixed_solvable, c.is_ep),
        (true, true, true)
    );

    let m5 = ring("mat(2,zn(5),transpose)");
    let c = is_ep_conditional(&m5, el(&m5, "[[1,2],[2,4]]"), Hypothesis::HA2R).unwrap();
    assert!(!c.hypothesis_holds && !c.is_ep && c.consistent());

    let m2 = ring("mat(2,zn(2),transpose)");
    let c = is_ep_conditional(&m2, el(&m2, "[[0,1],[0,0]]"), Hypothesis::H13).unwrap();
    assert!(c.hypothesis_holds && c.consistent());
}

#[test]
fn cep_examples() {
    let m2 = ring("mat(2,zn(2),transpose)");
    let v = Analysis::new(&m2, el(&m2, "[[1,0],[0,0]]"))
        .unwrap()
        .verdict(Predicate::Cep);
    assert!(!v.holds && v.agree(), "{v:?}");
    assert!(v.methods.iter().all(|m| !m.holds));

    let z6 = ring("zn(6)");
    for lit in ["5", "2"] {
        let v = Analysis::new(&z6, el(&z6, lit))
            .unwrap()
            .verdict(Predicate::Cep);
        assert!(v.holds && v.agree(), "{lit}: {v:?}");
    }
}

#[test]
fn star_dmp_examples() {
    let z4 = ring("zn(4)");
    let an = Analysis::new(&z4, el(&z4, "2")).unwrap();
    let v = an.verdict(Predicate::StarDmp);
    assert!(v.holds && v.agree());
    assert_eq!(an.dmp_index(), Some(2));
    assert!(an
        .ring()
        .is_hermitian(an.ring().mul(an.element(), an.drazin().0)));

    let m5 = ring("mat(2,zn(5),transpose)");
    let an = Analysis::new(&m5, el(&m5, "[[1,2],[2,4]]")).unwrap();
    assert!(an.verdict(Predicate::StarDmp).holds);
    assert_eq!(an.dmp_index(), Some(2));

    let z6 = ring("zn(6)");
    assert_eq!(
        Analysis::new(&z6, el(&z6, "2")).unwrap().dmp_index(),
        Some(1)
    );
}

#[test]
fn decomposition_examples() {
    let z6 = ring("zn(6)");
    let d = decompose(&z6, el(&z6, "2"), DecompositionKind::CleanCep).unwrap();
    assert_eq!(d.part("u"), Some(el(&z6, "5")));
    assert_eq!(d.part("p"), Some(el(&z6, "3")));
    assert_eq!(d.unique, Some(true));

    let d = decompose(&z6, z6.one(), DecompositionKind::UnitProjection).unwrap();
    assert_eq!((d.part("u"), d.part("q")), (Some(z6.one()), Some(z6.one())));

    let z4 = ring("zn(4)");
    let d = decompose(&z4, el(&z4, "2"), DecompositionKind::DmpClean).unwrap();
    assert_eq!(d.exponent, Some(2));
    assert_eq!(d.part("u"), Some(el(&z4, "3")));
    assert_eq!(d.part("p"), Some(z4.one()));
    assert_eq!(d.unique, Some(true));
}

#[test]
fn decomposition_requires_predicate() {
    let m2 = ring("mat(2,zn(2),transpose)");
    let err = decompose(&m2, el(&m2, "[[1,0],[0,0]]"), DecompositionKind::CleanCep).unwrap_err();
    match err {
        Error::PreconditionViolation { method, .. } => assert_eq!(method, "cep.def"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn unit_factor_not_unique_at_zero() {
    let z6 = ring("zn(6)");
    let found = unit_projection_candidates(&z6, z6.zero());
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].q, z6.zero());
    assert_eq!(found[0].u_count, 2);
}

#[test]
fn peirce_examples() {
    let z6 = ring("zn(6)");
    let two = el(&z6, "2");
    let z = z6.zero();
    let b = peirce(&z6, two, z6.one()).unwrap();
    assert_eq!((b.a11, b.a12, b.a21, b.a22), (two, z, z, z));
    let b = peirce(&z6, two, z).unwrap();
    assert_eq!((b.a11, b.a12, b.a21, b.a22), (z, z, z, two));
    let b = peirce(&z6, two, el(&z6, "4")).unwrap();
    assert_eq!((b.a11, b.a12, b.a21, b.a22), (two, z, z, z));
    assert!(matches!(
        peirce(&z6, two, two),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn peirce_blocks_reconstruct_and_respect_adjoint() {
    for spec in [
        "mat(2,zn(2),transpose)",
        "mat(2,zn(3),transpose)",
        "gauss(3)",
    ] {
        let r = ring(spec);
        let idempotents = r.subset(SubsetKind::Idempotents).members;
        for a in r.elements() {
            for &p in &idempotents {
                let b = peirce(&r, a, p).unwrap();
                assert_eq!(b.reconstruct(&r), a);
                if r.is_hermitian(p) {
                    let s = peirce(&r, r.star(a), p).unwrap();
                    assert_eq!(s.a11, r.star(b.a11));
                    assert_eq!(s.a12, r.star(b.a21));
                    assert_eq!(s.a21, r.star(b.a12));
                    assert_eq!(s.a22, r.star(b.a22));
                }
            }
        }
    }
}

#[test]
fn closure_examples() {
    let z6 = ring("zn(6)");
    let e = |s: &str| el(&z6, s);
    assert_eq!(cep_product(&z6, e("2"), e("2")).unwrap(), e("4"));
    assert_eq!(cep_product(&z6, e("2"), e("1")).unwrap(), e("2"));
    assert_eq!(cep_product(&z6, e("0"), e("0")).unwrap(), e("0"));
    assert_eq!(cep_power(&z6, e("2"), 2).unwrap(), e("4"));
    assert_eq!(cep_power(&z6, e("2"), 1).unwrap(), e("2"));
    assert_eq!(cep_power(&z6, e("1"), 5).unwrap(), e("1"));
    assert_eq!(cep_sum(&z6, e("0"), e("5")).unwrap(), e("5"));
    assert_eq!(cep_sum(&z6, e("3"), e("4")).unwrap(), e("1"));
    assert!(matches!(
        cep_sum(&z6, e("1"), e("1")),
        Err(Error::PreconditionViolation { .. })
    ));

    let m2 = ring("mat(2,zn(2),transpose)");
    let p = el(&m2, "[[1,0],[0,0]]");
    assert!(matches!(
        cep_product(&m2, p, m2.one()),
        Err(Error::PreconditionViolation { .. })
    ));
}

#[test]
fn order_examples() {
    let z6 = ring("zn(6)");
    let e = |s: &str| el(&z6, s);
    assert!(cep_leq(&z6, e("2"), e("5")).unwrap());
    assert!(!cep_leq(&z6, e("2"), e("1")).unwrap());
    for a in z6.elements() {
        assert!(cep_leq(&z6, a, a).unwrap());
    }

    let rep = verify_partial_order(&z6).unwrap();
    assert_eq!(rep.cep_elements.len(), 6);
    assert_eq!(rep.total_checks(), 6 + 36 + 216);
    assert!(rep.is_partial_order());

    let m2 = ring("mat(2,zn(2),transpose)");
    let rep = verify_partial_order(&m2).unwrap();
    assert_eq!(rep.cep_elements.len(), 7);
    assert!(rep.is_partial_order());
    let mut expected = m2.subset(SubsetKind::Units).members;
    expected.insert(0, m2.zero());
    assert_eq!(rep.cep_elements, expected);
}

#[test]
fn order_guard() {
    let big = ring("mat(2,zn(7),transpose)");
    assert!(matches!(
        verify_partial_order(&big),
        Err(Error::BoundExceeded(_))
    ));
}

#[test]
fn order_forms_agree_exhaustively() {
    for spec in ["zn(6)", "zn(12)", "mat(2,zn(2),transpose)"] {
        let r = ring(spec);
        for a in r.elements() {
            let Ok(_) = require(&r, a) else { continue };
            for b in r.elements() {
                let d = cep_leq_detail(&r, a, b).unwrap();
                assert!(d.agree(), "{spec} {} {}: {d:?}", r.show(a), r.show(b));
            }
        }
    }
}

fn require(r: &StarRing, a: Elem) -> Result<Elem> {
    Analysis::new(r, a)?
        .cep_inverse()
        .ok_or(Error::InvalidArgument(String::new()))
}

#[test]
fn all_methods_agree_on_small_rings() {
    for spec in SMALL {
        let r = ring(spec);
        for a in r.elements() {
            let rep = classify(&r, a).unwrap();
            assert!(
                rep.disagreements().is_empty(),
                "{spec} {}: {:?}",
                r.show(a),
                rep.disagreements()
            );
            if rep.is_cep {
                assert!(rep.is_ep);
            }
            if rep.is_ep {
                assert_eq!(rep.dmp_index, Some(1));
            }
            for d in &rep.decompositions {
                assert_ne!(d.unique, Some(false), "{spec} {} {:?}", r.show(a), d.kind);
            }
        }
    }
}

#[test]
fn commutative_rings_are_star_dmp() {
    for spec in ["zn(4)", "zn(8)", "zn(12)", "gauss(2)", "gauss(3)"] {
        let r = ring(spec);
        let table = ep_table(&r);
        for a in r.elements() {
            let an = Analysis::new(&r, a).unwrap().with_ep_table(&table);
            assert!(an.dmp_index().is_some(), "{spec} {}", r.show(a));
        }
    }
}

#[test]
fn every_ep_is_cep_iff_projections_are_central() {
    for (spec, expected) in [("zn(6)", true), ("mat(2,zn(2),transpose)", false)] {
        let r = ring(spec);
        let all_ep_cep = r.elements().all(|a| {
            let an = Analysis::new(&r, a).unwrap();
            !an.is_ep() || an.method(Method::CepDef)
        });
        let p = r.subset(SubsetKind::Projections).members;
        let cp = r.subset(SubsetKind::CentralProjections).members;
        assert_eq!(all_ep_cep, expected);
        assert_eq!(p == cp, expected);
    }
}

#[test]
fn method_ids_round_trip() {
    for &m in Method::ALL {
        assert_eq!(m.id().parse::<Method>().unwrap(), m);
    }
    for h in Hypothesis::ALL {
        assert_eq!(h.id().parse::<Hypothesis>().unwrap(), h);
    }
    for k in DecompositionKind::ALL {
        assert_eq!(k.name().parse::<DecompositionKind>().unwrap(), k);
    }
    assert_eq!(Predicate::Ep.methods().count(), 12);
    assert_eq!(Predicate::Cep.methods().count(), 9);
    assert_eq!(Predicate::StarDmp.methods().count(), 5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decompositions_reconstruct(ring_ix in 0usize..4, seed in any::<u32>()) {
        let spec = ["zn(12)", "gauss(3)", "mat(2,zn(2),transpose)", "mat(2,zn(3),transpose)"][ring_ix];
        let r = ring(spec);
        let a = r.elem(seed % r.size()).unwrap();
        let an = Analysis::new(&r, a).unwrap();
        if an.method(Method::CepDef) {
            let d = decompose(&r, a, DecompositionKind::CleanCep).unwrap();
            prop_assert_eq!(r.add(d.part("u").unwrap(), d.part("p").unwrap()), a);
            let d = decompose(&r, a, DecompositionKind::UnitProjection).unwrap();
            prop_assert_eq!(r.mul(d.part("u").unwrap(), d.part("q").unwrap()), a);
        }
        if an.method(Method::DmpEpPow) {
            let d = decompose(&r, a, DecompositionKind::DmpClean).unwrap();
            let an_pow = r.pow(a, d.exponent.unwrap());
            prop_assert_eq!(r.add(d.part("u").unwrap(), d.part("p").unwrap()), an_pow);
            let d = decompose(&r, a, DecompositionKind::DmpUnitProjection).unwrap();
            prop_assert_eq!(r.mul(d.part("u").unwrap(), d.part("q").unwrap()), an_pow);
        }
    }
}
