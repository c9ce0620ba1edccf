use proptest::prelude::*;

use super::*;
use crate::parse::{parse_elem, parse_ring};

fn z(n: u64) -> StarRing {
    make_zn(n).unwrap()
}

fn m2(base: &StarRing, inv: Involution) -> StarRing {
    make_matrix_ring(base, 2, inv).unwrap()
}

fn el(ring: &StarRing, lit: &str) -> Elem {
    parse_elem(ring, lit).unwrap()
}

#[test]
fn zn_basics() {
    let r = z(6);
    assert_eq!(r.size(), 6);
    assert_eq!(r.star(r.zero()), r.zero());
    assert_eq!(r.star(el(&r, "5")), el(&r, "5"));

    let r = z(4);
    let two = el(&r, "2");
    assert_eq!(r.add(two, two), r.zero());
    assert_eq!(r.mul(two, two), r.zero());

    assert!(matches!(make_zn(1), Err(Error::InvalidParameter(_))));
    assert!(matches!(make_zn(0), Err(Error::InvalidParameter(_))));
}

#[test]
fn gauss_basics() {
    let g = make_gauss(3).unwrap();
    let a = el(&g, "(1,2)");
    let b = el(&g, "(1,1)");
    assert_eq!(g.show(g.mul(a, b)), "(2,0)");
    assert_eq!(g.show(g.star(a)), "(1,1)");
    assert_eq!(a.index(), 5);
    assert_eq!(make_gauss(2).unwrap().size(), 4);
    assert!(make_gauss(1).is_err());
    assert!(make_gauss(1001).is_err());
}

#[test]
fn matrix_basics() {
    let m = m2(&z(2), Involution::Transpose);
    assert_eq!(m.size(), 16);

    let m5 = m2(&z(5), Involution::Transpose);
    let a = el(&m5, "[[1,2],[2,4]]");
    assert_eq!(m5.star(a), a);
    assert_eq!(m5.mul(a, a), m5.zero());

    let b = el(&m5, "[[1,2],[3,4]]");
    assert_eq!(m5.show(m5.star(b)), "[[1,3],[2,4]]");
    assert_eq!(m5.show(m5.one()), "[[1,0],[0,1]]");
    // row-major little-endian: entry (0,0) is the lowest digit
    assert_eq!(el(&m5, "[[1,0],[0,0]]").index(), 1);
    assert_eq!(el(&m5, "[[0,1],[0,0]]").index(), 5);
    assert_eq!(el(&m5, "[[0,0],[0,1]]").index(), 125);

    let g = make_gauss(3).unwrap();
    let mg = m2(&g, Involution::ConjugateTranspose);
    let c = el(&mg, "[[(1,1),(0,2)],[(2,0),(1,0)]]");
    assert_eq!(mg.show(mg.star(c)), "[[(1,2),(2,0)],[(0,1),(1,0)]]");
}

#[test]
fn matrix_constructor_errors() {
    let m = m2(&z(2), Involution::Transpose);
    assert!(make_matrix_ring(&m, 2, Involution::Transpose).is_err());
    assert!(make_matrix_ring(&z(3), 2, Involution::ConjugateTranspose).is_err());
    assert!(make_matrix_ring(&z(3), 0, Involution::Transpose).is_err());
    assert!(make_matrix_ring(&z(3), 2, Involution::Identity).is_err());
    // 7^9 > 10^6
    assert!(make_matrix_ring(&z(7), 3, Involution::Transpose).is_err());
    assert_eq!(
        make_matrix_ring(&z(31), 2, Involution::Transpose)
            .unwrap()
            .size(),
        923_521
    );
}

#[test]
fn enumeration_is_canonical() {
    let idx: Vec<u32> = z(4).elements().map(Elem::index).collect();
    assert_eq!(idx, vec![0, 1, 2, 3]);
    let m = m2(&z(2), Involution::Transpose);
    let all: Vec<Elem> = m.elements().collect();
    assert_eq!(all.len(), 16);
    assert_eq!(m.show(all[0]), "[[0,0],[0,0]]");
    assert_eq!(make_gauss(3).unwrap().elements().count(), 9);
}

#[test]
fn subsets_match_examples() {
    let m = m2(&z(2), Involution::Transpose);
    let center = m.subset(SubsetKind::Center);
    assert_eq!(center.members, vec![m.zero(), m.one()]);
    let cp = m.subset(SubsetKind::CentralProjections);
    assert_eq!(cp.members, vec![m.zero(), m.one()]);
    assert_eq!(m.subset(SubsetKind::Units).len(), 6);

    let r = z(6);
    let units = r.subset(SubsetKind::Units);
    assert_eq!(units.members, vec![el(&r, "1"), el(&r, "5")]);
    assert_eq!(r.unit_inverse(el(&r, "5")), Some(el(&r, "5")));
    assert_eq!(r.unit_inverse(el(&r, "2")), None);
}

#[test]
fn subset_reports_are_sorted_and_consistent() {
    for spec in [
        "zn(12)",
        "gauss(3)",
        "mat(2,zn(2),transpose)",
        "mat(2,zn(3),transpose)",
    ] {
        let r = parse_ring(spec).unwrap();
        for kind in SubsetKind::ALL {
            let rep = r.subset(kind);
            assert!(
                rep.members.windows(2).all(|w| w[0] < w[1]),
                "{spec} {kind:?}"
            );
        }
        let p = r.subset(SubsetKind::Projections);
        let c = r.subset(SubsetKind::Center);
        let cp = r.subset(SubsetKind::CentralProjections);
        let inter: Vec<Elem> = p
            .members
            .iter()
            .copied()
            .filter(|&e| c.contains(e))
            .collect();
        assert_eq!(cp.members, inter, "{spec}");
        for &q in &cp.members {
            assert!(r.elements().all(|a| r.mul(q, a) == r.mul(a, q)));
        }
        for u in r.subset(SubsetKind::Units).members {
            let v = r.unit_inverse(u).unwrap();
            assert_eq!(r.mul(u, v), r.one());
            assert_eq!(r.mul(v, u), r.one());
        }
    }
}

fn check_axioms_exhaustive(r: &StarRing) {
    let all: Vec<Elem> = r.elements().collect();
    let (zero, one) = (r.zero(), r.one());
    for &a in &all {
        assert_eq!(r.add(a, zero), a);
        assert_eq!(r.mul(a, one), a);
        assert_eq!(r.mul(one, a), a);
        assert_eq!(r.add(a, r.neg(a)), zero);
        assert_eq!(r.star(r.star(a)), a);
        for &b in &all {
            assert_eq!(r.add(a, b), r.add(b, a));
            assert_eq!(r.star(r.mul(a, b)), r.mul(r.star(b), r.star(a)), "{r}");
            assert_eq!(r.star(r.add(a, b)), r.add(r.star(a), r.star(b)));
            for &c in &all {
                assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
                assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
                assert_eq!(r.mul(r.add(a, b), c), r.add(r.mul(a, c), r.mul(b, c)));
                assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
            }
        }
    }
}

#[test]
fn ring_axioms_hold_exhaustively_on_small_rings() {
    for spec in [
        "zn(2)",
        "zn(12)",
        "gauss(3)",
        "gauss(4)",
        "mat(2,zn(2),transpose)",
        "mat(2,zn(3),transpose)",
        "mat(2,gauss(2),conjtranspose)",
        "mat(1,gauss(5),conjtranspose)",
    ] {
        check_axioms_exhaustive(&parse_ring(spec).unwrap());
    }
}

#[test]
fn involution_is_anti_multiplicative_on_gaussian_matrices() {
    let r = parse_ring("mat(2,gauss(3),conjtranspose)").unwrap();
    for a in r.elements() {
        let sa = r.star(a);
        assert_eq!(r.star(sa), a);
        for b in r.elements() {
            assert_eq!(r.star(r.mul(a, b)), r.mul(r.star(b), sa));
        }
    }
}

/// Schoolbook matrix product over decoded values with wide integers.
fn naive_mul(ring: &StarRing, a: Elem, b: Elem) -> Value {
    let (n, gauss) = match ring.kind() {
        RingKind::Matrix {
            base: Base::Zn(n), ..
        } => (n as i64, false),
        RingKind::Matrix {
            base: Base::Gauss(n),
            ..
        } => (n as i64, true),
        _ => unreachable!(),
    };
    let pair = |v: &Value| match *v {
        Value::Residue(r) => (r as i64, 0),
        Value::Gauss(x, y) => (x as i64, y as i64),
        _ => unreachable!(),
    };
    let (Value::Matrix(ra), Value::Matrix(rb)) = (ring.decode(a), ring.decode(b)) else {
        unreachable!()
    };
    let k = ra.len();
    let rows = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let (mut re, mut im) = (0i64, 0i64);
                    for l in 0..k {
                        let (p, q) = pair(&ra[i][l]);
                        let (s, t) = pair(&rb[l][j]);
                        re += p * s - q * t;
                        im += p * t + q * s;
                    }
                    if gauss {
                        Value::Gauss(re.rem_euclid(n) as u32, im.rem_euclid(n) as u32)
                    } else {
                        Value::Residue(re.rem_euclid(n) as u32)
                    }
                })
                .collect()
        })
        .collect();
    Value::Matrix(rows)
}

#[test]
fn matrix_product_matches_schoolbook_oracle() {
    // mat(3,zn(4)) is past the row-table limit and exercises the direct product.
    for spec in [
        "mat(2,zn(5),transpose)",
        "mat(3,zn(2),transpose)",
        "mat(2,gauss(3),conjtranspose)",
        "mat(3,zn(4),transpose)",
    ] {
        let r = parse_ring(spec).unwrap();
        let step = (r.size() / 97).max(1);
        for a in r.elements().step_by(step as usize) {
            for b in r.elements().step_by((r.size() / 2000).max(3) as usize) {
                assert_eq!(r.decode(r.mul(a, b)), naive_mul(&r, a, b), "{spec}");
            }
        }
    }
}

#[test]
fn power_cycle_examples() {
    let r = z(4);
    // 2, 0, 0, ...
    assert_eq!(
        r.power_cycle(el(&r, "2")),
        PowerCycle {
            preperiod: 2,
            period: 1
        }
    );
    // 3, 1, 3, ...
    assert_eq!(
        r.power_cycle(el(&r, "3")),
        PowerCycle {
            preperiod: 1,
            period: 2
        }
    );
    let r = z(6);
    assert_eq!(
        r.power_cycle(el(&r, "2")),
        PowerCycle {
            preperiod: 1,
            period: 2
        }
    );
    assert_eq!(r.pow(el(&r, "5"), 0), r.one());
    assert_eq!(r.pow(el(&r, "2"), 5), el(&r, "2"));
}

#[test]
fn elem_identity_includes_ring() {
    let a = z(6).one();
    let b = z(7).one();
    assert_eq!(a.index(), b.index());
    assert_ne!(a, b);
    assert_eq!(z(6).one(), a);
    assert!(!z(7).owns(a));
}

fn any_ring() -> impl Strategy<Value = StarRing> {
    prop_oneof![
        (2u64..40).prop_map(|n| make_zn(n).unwrap()),
        (2u64..12).prop_map(|n| make_gauss(n).unwrap()),
        (2u64..6).prop_map(
            |n| make_matrix_ring(&make_zn(n).unwrap(), 2, Involution::Transpose).unwrap()
        ),
        (2u64..4).prop_map(|n| {
            make_matrix_ring(&make_gauss(n).unwrap(), 2, Involution::ConjugateTranspose).unwrap()
        }),
    ]
}

proptest! {
    #[test]
    fn decode_encode_round_trip(ring in any_ring(), seed in any::<u32>()) {
        let a = ring.elem(seed % ring.size()).unwrap();
        prop_assert_eq!(ring.encode(&ring.decode(a)).unwrap(), a);
        prop_assert_eq!(parse_elem(&ring, &ring.show(a)).unwrap(), a);
    }

    #[test]
    fn involution_axioms_sampled(ring in any_ring(), s in any::<(u32, u32)>()) {
        let a = ring.elem(s.0 % ring.size()).unwrap();
        let b = ring.elem(s.1 % ring.size()).unwrap();
        prop_assert_eq!(ring.star(ring.mul(a, b)), ring.mul(ring.star(b), ring.star(a)));
        prop_assert_eq!(ring.star(ring.add(a, b)), ring.add(ring.star(a), ring.star(b)));
        prop_assert_eq!(ring.star(ring.star(a)), a);
    }
}
