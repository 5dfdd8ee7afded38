use ellhyp::quad::{
    factorize, ideal_types, is_prime, is_split, quotient_invariants, solve_twist, split,
    sylow_types, units, AbelianInvariants, QuadInt, Ring,
};
use ellhyp::{Error, QuadInt128, QuadInt64};
use proptest::prelude::*;

fn q(ring: Ring, a: i64, b: i64) -> QuadInt64 {
    QuadInt::new(ring, a, b)
}

fn inv(d1: u64, d2: u64) -> AbelianInvariants {
    AbelianInvariants { d1, d2 }
}

#[test]
fn norms() {
    assert_eq!(q(Ring::Gauss, 1, 1).norm(), 2);
    assert_eq!(q(Ring::Eisenstein, 1, 1).norm(), 3);
    assert_eq!(q(Ring::Gauss, 3, -4).norm(), 25);
    assert_eq!(q(Ring::Eisenstein, 2, -1).norm(), 3);
}

#[test]
fn unit_groups() {
    let g = units::<i64>(Ring::Gauss);
    assert_eq!(g.len(), 4);
    for (a, b) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
        assert!(g.contains(&q(Ring::Gauss, a, b)));
    }
    let e = units::<i64>(Ring::Eisenstein);
    assert_eq!(e.len(), 6);
    assert!(e.contains(&q(Ring::Eisenstein, -1, 1)));
    assert!(g.iter().chain(&e).all(|u| u.norm() == 1 && u.is_unit()));
}

#[test]
fn omega_satisfies_its_relation() {
    let w = q(Ring::Eisenstein, 0, 1);
    let one = q(Ring::Eisenstein, 1, 0);
    assert_eq!(w * w, w - one);
    assert_eq!(w * w * w, -one);
    let i = q(Ring::Gauss, 0, 1);
    assert_eq!(i * i, -q(Ring::Gauss, 1, 0));
}

#[test]
fn splitting_rules() {
    assert!(is_split(5, Ring::Gauss).unwrap());
    assert!(!is_split(7, Ring::Gauss).unwrap());
    assert!(is_split(7, Ring::Eisenstein).unwrap());
    assert!(is_split(2, Ring::Gauss).unwrap());
    assert!(is_split(3, Ring::Eisenstein).unwrap());
    assert!(!is_split(2, Ring::Eisenstein).unwrap());
    assert_eq!(is_split(9, Ring::Gauss), Err(Error::NotPrime(9)));
}

#[test]
fn split_examples() {
    assert_eq!(
        split::<i64>(2, Ring::Gauss).unwrap(),
        (q(Ring::Gauss, 1, 1), q(Ring::Gauss, 1, -1))
    );
    assert_eq!(
        split::<i64>(5, Ring::Gauss).unwrap(),
        (q(Ring::Gauss, 2, 1), q(Ring::Gauss, 2, -1))
    );
    let (p, r) = split::<i64>(7, Ring::Eisenstein).unwrap();
    assert_eq!(p, q(Ring::Eisenstein, 2, 1));
    assert_eq!(p * r, q(Ring::Eisenstein, 7, 0));
    assert!(matches!(
        split::<i64>(7, Ring::Gauss),
        Err(Error::DoesNotSplit { p: 7, .. })
    ));
    assert_eq!(split::<i64>(21, Ring::Eisenstein), Err(Error::NotPrime(21)));
}

#[test]
fn quotient_examples() {
    let g = Ring::Gauss;
    assert_eq!(quotient_invariants(&q(g, 8, 0)).unwrap(), inv(8, 8));
    let pi = q(g, 1, 1);
    assert_eq!(quotient_invariants(&(pi * pi * pi)).unwrap(), inv(2, 4));
    assert_eq!(quotient_invariants(&q(g, 2, 1)).unwrap(), inv(1, 5));
    assert_eq!(quotient_invariants(&q(g, 0, 0)), Err(Error::ZeroModulus));
}

#[test]
fn wide_coordinates_agree() {
    let z: QuadInt128 = QuadInt::new(Ring::Eisenstein, 123_456, -98_765);
    let w: QuadInt64 = q(Ring::Eisenstein, 123_456, -98_765);
    assert_eq!(
        quotient_invariants(&z).unwrap(),
        quotient_invariants(&w).unwrap()
    );
}

#[test]
fn sylow_examples() {
    assert_eq!(
        sylow_types(5, 2, Ring::Gauss).unwrap(),
        vec![inv(1, 25), inv(5, 5)]
    );
    assert_eq!(sylow_types(5, 0, Ring::Gauss).unwrap(), vec![inv(1, 1)]);
    assert_eq!(sylow_types(13, 4, Ring::Gauss).unwrap().len(), 3);
    assert!(matches!(
        sylow_types(3, 2, Ring::Eisenstein),
        Err(Error::NotApplicable(_))
    ));
    assert!(matches!(
        sylow_types(7, 2, Ring::Gauss),
        Err(Error::NotApplicable(_))
    ));
}

#[test]
fn twist_examples() {
    assert_eq!(solve_twist(4, 2).unwrap(), vec![1]);
    assert!(solve_twist(6, 3).unwrap().contains(&2));
    assert_eq!(solve_twist(4, 5).unwrap(), vec![2, 3]);
    assert_eq!(solve_twist(3, 7).unwrap(), solve_twist(6, 7).unwrap());
    assert!(solve_twist(5, 7).is_err());
    assert_eq!(solve_twist(4, 0), Err(Error::ZeroModulus));
}

#[test]
fn ideal_type_counts() {
    assert_eq!(ideal_types(100, Ring::Gauss), vec![inv(2, 50), inv(10, 10)]);
    assert!(ideal_types(7, Ring::Gauss).is_empty());
    assert_eq!(ideal_types(49, Ring::Gauss), vec![inv(7, 7)]);
    // Norm-n ideals are exactly the principal ideals (z) with N(z) = n.
    for ring in [Ring::Gauss, Ring::Eisenstein] {
        for n in 1..=60u64 {
            let mut seen: Vec<AbelianInvariants> = Vec::new();
            let r = (n as f64).sqrt() as i64 + 2;
            for a in -r..=r {
                for b in -r..=r {
                    let z = q(ring, a, b);
                    if z.norm() == n as i64 {
                        let t = quotient_invariants(&z).unwrap();
                        if !seen.contains(&t) {
                            seen.push(t);
                        }
                    }
                }
            }
            seen.sort();
            assert_eq!(ideal_types(n, ring), seen, "{ring} n = {n}");
        }
    }
}

#[test]
fn trial_division() {
    assert!(is_prime(2) && is_prime(97) && !is_prime(1) && !is_prime(91));
    assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
}

fn ring() -> impl Strategy<Value = Ring> {
    prop_oneof![Just(Ring::Gauss), Just(Ring::Eisenstein)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn norm_is_multiplicative(r in ring(), a in -3000i64..3000, b in -3000i64..3000,
                              c in -3000i64..3000, d in -3000i64..3000) {
        let (z, w) = (q(r, a, b), q(r, c, d));
        prop_assert_eq!((z * w).norm(), z.norm() * w.norm());
        prop_assert_eq!(z * z.conj(), q(r, z.norm(), 0));
    }

    #[test]
    fn invariants_multiply_to_norm(r in ring(), a in -500i64..500, b in -500i64..500) {
        prop_assume!(a != 0 || b != 0);
        let z = q(r, a, b);
        let t = quotient_invariants(&z).unwrap();
        prop_assert_eq!(t.order() as i64, z.norm());
        prop_assert_eq!(t.d2 % t.d1, 0);
    }

    #[test]
    fn associates_share_invariants(r in ring(), a in -200i64..200, b in -200i64..200, k in 0usize..6) {
        prop_assume!(a != 0 || b != 0);
        let z = q(r, a, b);
        let us = units::<i64>(r);
        let u = us[k % us.len()];
        prop_assert_eq!(quotient_invariants(&(u * z)).unwrap(), quotient_invariants(&z).unwrap());
    }
}

#[test]
fn split_factors_multiply_back() {
    for p in (2..2000u64).filter(|&p| is_prime(p)) {
        for r in [Ring::Gauss, Ring::Eisenstein] {
            if !is_split(p, r).unwrap() {
                continue;
            }
            let (x, y) = split::<i64>(p, r).unwrap();
            assert_eq!(x * y, q(r, p as i64, 0), "{p} in {r}");
            assert_eq!((x.norm(), y.norm()), (p as i64, p as i64));
            assert!(x.a >= x.b && x.b >= 0, "{x}");
        }
    }
}

#[test]
fn twist_solutions_are_exactly_the_roots() {
    for q in 1..=200u64 {
        for t in [4, 6] {
            let brute: Vec<u64> = (0..q)
                .filter(|&k| {
                    let v = if t == 4 { k * k + 1 } else { k * k + 1 - k };
                    v % q == 0 && num_integer::gcd(k, q) == 1
                })
                .collect();
            assert_eq!(solve_twist(t, q).unwrap(), brute);
        }
    }
}

#[test]
fn twist_solvable_iff_split_with_squarefree_ramified_part() {
    for q in 1..=1000u64 {
        for (t, ring) in [(4, Ring::Gauss), (6, Ring::Eisenstein)] {
            let expect = factorize(q).iter().all(|&(p, e)| {
                is_split(p, ring).unwrap() && (p != ring.ramified_prime() || e == 1)
            });
            assert_eq!(
                !solve_twist(t, q).unwrap().is_empty(),
                expect,
                "q = {q}, {ring}"
            );
        }
    }
}
