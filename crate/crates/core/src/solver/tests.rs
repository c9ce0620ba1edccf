use super::*;
use crate::parse::{parse_elem, parse_ring};

fn ring(spec: &str) -> StarRing {
    parse_ring(spec).unwrap()
}

fn el(r: &StarRing, lit: &str) -> Elem {
    parse_elem(r, lit).unwrap()
}

const TEST_RINGS: &[&str] = &[
    "zn(2)",
    "zn(4)",
    "zn(6)",
    "zn(12)",
    "gauss(2)",
    "gauss(3)",
    "mat(2,zn(2),transpose)",
    "mat(2,zn(3),transpose)",
];

/// Straight-line evaluation of one equation, independent of `Probe`.
fn oracle_holds(r: &StarRing, eq: Equation, a: Elem, x: Elem, n: u32) -> bool {
    let m = |p: Elem, q: Elem| r.mul(p, q);
    let s = |p: Elem| r.star(p);
    match eq {
        Equation::AxaIsA => m(m(a, x), a) == a,
        Equation::XaxIsX => m(m(x, a), x) == x,
        Equation::AxHermitian => s(m(a, x)) == m(a, x),
        Equation::XaHermitian => s(m(x, a)) == m(x, a),
        Equation::AxStarIsXa => s(m(a, x)) == m(x, a),
        Equation::Commute => m(a, x) == m(x, a),
        Equation::XaaIsA => m(x, m(a, a)) == a,
        Equation::AaxIsA => m(m(a, a), x) == a,
        Equation::AxxIsX => m(a, m(x, x)) == x,
        Equation::XxaIsX => m(m(x, x), a) == x,
        Equation::XaCentral => {
            let c = m(x, a);
            r.elements().all(|t| m(c, t) == m(t, c))
        }
        Equation::XaPowIsPow => m(x, r.pow(a, n + 1)) == r.pow(a, n),
        Equation::AxaPowIsA => m(m(a, x), r.pow(a, n)) == a,
        Equation::AxaPowIsPow => m(m(a, x), r.pow(a, n)) == r.pow(a, n),
        Equation::PowIsPowX => r.pow(a, n) == m(r.pow(a, n + 1), x),
    }
}

/// Double loop over (x, n) with the oracle evaluator.
fn oracle_solve(r: &StarRing, a: Elem, sys: SystemId, bound: u32) -> Vec<(Elem, Option<u32>)> {
    let mut out = Vec::new();
    for x in r.elements() {
        match sys.min_exponent() {
            None => {
                if sys.equations().iter().all(|&e| oracle_holds(r, e, a, x, 0)) {
                    out.push((x, None));
                }
            }
            Some(lo) => {
                if let Some(n) = (lo..=bound)
                    .find(|&n| sys.equations().iter().all(|&e| oracle_holds(r, e, a, x, n)))
                {
                    out.push((x, Some(n)));
                }
            }
        }
    }
    out
}

#[test]
fn check_witness_examples() {
    let m5 = ring("mat(2,zn(5),transpose)");
    let a = el(&m5, "[[1,2],[2,4]]");
    let x = el(&m5, "[[2,0],[0,1]]");
    assert!(check_witness(&m5, a, &Witness::new(x, None), SystemId::AxaMixed).unwrap());

    let z4 = ring("zn(4)");
    let w = Witness::new(z4.zero(), None);
    assert!(check_witness(&z4, z4.zero(), &w, SystemId::EpXu).unwrap());

    let z6 = ring("zn(6)");
    let two = el(&z6, "2");
    assert!(check_witness(&z6, two, &Witness::new(two, None), SystemId::Group).unwrap());
}

#[test]
fn check_witness_rejects_bad_arguments() {
    let z6 = ring("zn(6)");
    let z7 = ring("zn(7)");
    let w = Witness::new(z7.one(), None);
    assert!(matches!(
        check_witness(&z6, z6.one(), &w, SystemId::Group),
        Err(Error::InvalidArgument(_))
    ));
    let w = Witness::new(z6.one(), None);
    assert!(check_witness(&z6, z6.one(), &w, SystemId::PseudoCore).is_err());
    let w = Witness::new(z6.one(), Some(0));
    assert!(check_witness(&z6, z6.one(), &w, SystemId::PseudoCore).is_err());
    // Drazin admits k = 0
    assert!(check_witness(&z6, z6.one(), &w, SystemId::Drazin).unwrap());
}

#[test]
fn evaluate_reports_each_equation() {
    let m5 = ring("mat(2,zn(5),transpose)");
    let a = el(&m5, "[[1,2],[2,4]]");
    let x = el(&m5, "[[2,0],[0,1]]");
    // axa = a holds, xax = x fails, (ax)* = ax fails, (xa)* = xa fails
    let flags = evaluate(&m5, a, x, None, SystemId::Penrose1234).unwrap();
    assert!(flags[0]);
    assert!(!flags.iter().all(|&b| b));
}

#[test]
fn solve_examples() {
    let z2 = ring("zn(2)");
    let xs: Vec<Elem> = solve(&z2, z2.zero(), SystemId::Theo1Left, None)
        .into_iter()
        .map(|w| w.x)
        .collect();
    assert_eq!(xs, vec![z2.zero(), z2.one()]);

    let z4 = ring("zn(4)");
    assert!(solve(&z4, el(&z4, "2"), SystemId::Penrose1234, None).is_empty());

    let m2 = ring("mat(2,zn(2),transpose)");
    let a = el(&m2, "[[0,1],[0,0]]");
    let ws = solve(&m2, a, SystemId::Penrose1234, None);
    assert_eq!(ws.len(), 1);
    assert_eq!(ws[0].x, el(&m2, "[[0,0],[1,0]]"));
    assert_eq!(ws[0].x, m2.star(a));
}

#[test]
fn solvable_left_right_examples() {
    let z6 = ring("zn(6)");
    assert_eq!(solvable_left_right(&z6, el(&z6, "2")), (true, true));
    let (s, _) = left_right_witnesses(&z6, el(&z6, "2"));
    assert_eq!(s, Some(el(&z6, "2")));
    let m2 = ring("mat(2,zn(2),transpose)");
    assert_eq!(
        solvable_left_right(&m2, el(&m2, "[[0,1],[0,0]]")),
        (false, false)
    );
    for spec in TEST_RINGS {
        let r = ring(spec);
        assert_eq!(solvable_left_right(&r, r.one()), (true, true));
    }
}

#[test]
fn solver_agrees_with_double_loop_oracle() {
    for spec in ["zn(4)", "zn(12)", "gauss(2)", "mat(2,zn(2),transpose)"] {
        let r = ring(spec);
        for a in r.elements() {
            let bound = r.size();
            for &sys in SystemId::ALL {
                let got: Vec<(Elem, Option<u32>)> = solve(&r, a, sys, Some(bound))
                    .into_iter()
                    .map(|w| (w.x, w.n))
                    .collect();
                assert_eq!(
                    got,
                    oracle_solve(&r, a, sys, bound),
                    "{spec} a={} {sys}",
                    r.show(a)
                );
            }
        }
    }
}

#[test]
fn returned_witnesses_pass_check() {
    for spec in TEST_RINGS {
        let r = ring(spec);
        for a in r.elements() {
            for sol in solve_many(&r, a, SystemId::ALL, None) {
                for w in &sol.witnesses {
                    assert!(w.holds());
                    assert!(check_witness(&r, a, w, sol.system).unwrap());
                }
            }
        }
    }
}

#[test]
fn power_cycle_bound_is_exhaustive() {
    for spec in [
        "zn(8)",
        "zn(12)",
        "gauss(4)",
        "mat(2,zn(2),transpose)",
        "mat(2,zn(4),transpose)",
    ] {
        let r = ring(spec);
        for a in r.elements() {
            let indexed: Vec<SystemId> = SystemId::ALL
                .iter()
                .copied()
                .filter(|s| s.is_indexed())
                .collect();
            let short = solve_many(&r, a, &indexed, None);
            let long = solve_many(&r, a, &indexed, Some(r.size() + 2));
            for (s, l) in short.iter().zip(&long) {
                assert!(s.exhaustive);
                assert_eq!(s.witnesses, l.witnesses, "{spec} {}", s.system);
            }
        }
    }
}

#[test]
fn solve_many_matches_single_solves() {
    let r = ring("mat(2,zn(3),transpose)");
    for a in r.elements().step_by(7) {
        let many = solve_many(&r, a, SystemId::ALL, None);
        for sol in many {
            assert_eq!(sol.witnesses, solve(&r, a, sol.system, None));
        }
    }
}

fn commute_hypotheses() -> [&'static [Equation]; 4] {
    [
        &[Equation::XaaIsA, Equation::AxStarIsXa],
        &[Equation::AxxIsX, Equation::AxStarIsXa],
        &[Equation::AaxIsA, Equation::AxStarIsXa],
        &[Equation::XxaIsX, Equation::AxStarIsXa],
    ]
}

#[test]
fn commutation_premises_force_ax_eq_xa() {
    for spec in TEST_RINGS {
        let r = ring(spec);
        for a in r.elements() {
            for x in r.elements() {
                for hyp in commute_hypotheses() {
                    if check_equations(&r, a, x, hyp) {
                        assert_eq!(r.mul(a, x), r.mul(x, a), "{spec}");
                    }
                }
            }
        }
    }
}

#[test]
fn unique_systems_have_at_most_one_witness() {
    let unique = [
        SystemId::Penrose1234,
        SystemId::Group,
        SystemId::Drazin,
        SystemId::Core,
        SystemId::PseudoCore,
        SystemId::CepInv,
        SystemId::DmpSys,
    ];
    for spec in TEST_RINGS {
        let r = ring(spec);
        for a in r.elements() {
            for sol in solve_many(&r, a, &unique, None) {
                assert!(sol.count() <= 1, "{spec} {} a={}", sol.system, r.show(a));
            }
        }
    }
}

#[test]
fn group_solvable_iff_in_both_one_sided_ideals() {
    for spec in TEST_RINGS {
        let r = ring(spec);
        for a in r.elements() {
            let lr = solvable_left_right(&r, a);
            let group = !solve(&r, a, SystemId::Group, None).is_empty();
            assert_eq!(group, lr == (true, true), "{spec} a={}", r.show(a));
        }
    }
}

#[test]
fn system_names_round_trip() {
    for &s in SystemId::ALL {
        assert_eq!(s.name().parse::<SystemId>().unwrap(), s);
    }
    assert!("nope".parse::<SystemId>().is_err());
    assert_eq!(SystemId::Drazin.min_exponent(), Some(0));
    assert_eq!(SystemId::Q3.min_exponent(), Some(1));
    assert_eq!(SystemId::Q2.min_exponent(), None);
}
