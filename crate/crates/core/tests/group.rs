use ellhyp::group::{
    compare_with_coset_enumeration, hom_from_images, Element, Family, Gen, Group, GroupSpec,
    Params, Variant, Word,
};
use ellhyp::Error;
use proptest::prelude::*;

fn closed_form(family: Family, n: u64) -> u64 {
    let k = match family {
        Family::A => 8,
        Family::B => 4,
        Family::C => 12,
        Family::D => 4,
        Family::E => 6,
        Family::F => 2,
    };
    k * n * n
}

/// Every spec with `n ≤ max_n` whose presentation is consistent.
fn specs(max_n: u32, with_tau: bool) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for family in Family::ALL {
        if with_tau && !family.supports_tau() {
            continue;
        }
        for n in (1..=max_n).filter(|n| n % family.lattice_index() == 0) {
            for params in Params::all(family.kind()) {
                for variant in Variant::all(family) {
                    let Ok(s) = GroupSpec::new(family, n, params, variant, with_tau) else {
                        continue;
                    };
                    if Group::new(s).unwrap().is_consistent() {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn orders_match_closed_forms() {
    for with_tau in [false, true] {
        for spec in specs(6, with_tau) {
            let g = Group::new(spec).unwrap();
            let expect = closed_form(spec.family, spec.n as u64) * if with_tau { 2 } else { 1 };
            assert_eq!(g.order(), expect, "{}", spec.label());
            assert_eq!(g.elements().len() as u64, expect, "{}", spec.label());
            assert!(g.relators_hold(), "{}", spec.label());
        }
    }
}

#[test]
fn constructor_rejects_bad_specs() {
    let p = Params::k244(0, 0, 0);
    assert!(matches!(
        GroupSpec::new(Family::B, 3, p, Variant::pair(0, 0), false),
        Err(Error::InvalidSpec(_))
    ));
    assert!(matches!(
        GroupSpec::new(Family::A, 0, p, Variant::single(0), false),
        Err(Error::InvalidSpec(_))
    ));
    assert!(matches!(
        GroupSpec::new(Family::A, 2, p, Variant::pair(0, 1), false),
        Err(Error::InvalidSpec(_))
    ));
    assert!(matches!(
        GroupSpec::new(
            Family::C,
            2,
            Params::k244(1, 0, 0),
            Variant::single(0),
            false
        ),
        Err(Error::InvalidSpec(_))
    ));
    let tau_less = Family::ALL.iter().find(|f| !f.supports_tau());
    if let Some(&f) = tau_less {
        let p = Params::all(f.kind())[0];
        let n = f.lattice_index();
        assert_eq!(
            GroupSpec::new(f, n, p, Variant::all(f)[0], true),
            Err(Error::FamilyUnsupported(f))
        );
    }
}

#[test]
fn engine_matches_coset_enumeration() {
    for spec in specs(3, false).into_iter().chain(specs(2, true)) {
        let cmp = compare_with_coset_enumeration(&spec, 200_000)
            .unwrap()
            .expect("enumeration finishes");
        assert!(cmp.isomorphic, "{}: {cmp:?}", spec.label());
        assert_eq!(cmp.engine_order, cmp.presented_order as u64);
        assert_eq!(cmp.engine_classes, cmp.presented_classes);
    }
}

#[test]
fn element_text_roundtrip() {
    for spec in specs(3, true) {
        let g = Group::new(spec).unwrap();
        for &e in g.elements() {
            let text = e.display(spec.family).to_string();
            assert_eq!(g.parse_element(&text).unwrap(), e, "{text}");
        }
    }
}

#[test]
fn word_text_roundtrip() {
    for src in ["x^2 y^-1 c rho", "v w^3 c^-2 tau", "1"] {
        let w = Word::parse(Family::B, src).unwrap();
        let again = Word::parse(Family::B, &w.display(Family::B)).unwrap();
        assert_eq!(w, again);
    }
    assert!(Word::parse(Family::A, "x^").is_err());
    assert!(Word::parse(Family::A, "q").is_err());
}

#[test]
fn class_sizes_times_centralizers() {
    for spec in specs(4, true) {
        let g = Group::new(spec).unwrap();
        let classes = g.conjugacy_classes();
        assert_eq!(
            classes.iter().map(Vec::len).sum::<usize>() as u64,
            g.order()
        );
        for cl in &classes {
            let c = g.centralizer(cl[0]);
            assert_eq!((cl.len() * c.len()) as u64, g.order(), "{}", spec.label());
        }
    }
}

#[test]
fn foreign_elements_are_rejected() {
    let small = Group::new(
        GroupSpec::new(
            Family::A,
            2,
            Params::k244(0, 0, 0),
            Variant::single(0),
            false,
        )
        .unwrap(),
    )
    .unwrap();
    let big = Group::new(
        GroupSpec::new(
            Family::A,
            5,
            Params::k244(0, 0, 0),
            Variant::single(0),
            false,
        )
        .unwrap(),
    )
    .unwrap();
    let x4 = big.power(big.generator(Gen::X).unwrap(), 4);
    assert_eq!(small.checked_inv(x4), Err(Error::SpecMismatch));
    assert_eq!(small.generator(Gen::Tau), Err(Error::SpecMismatch));
}

fn some_group() -> impl Strategy<Value = (GroupSpec, Vec<usize>)> {
    let all = specs(6, false)
        .into_iter()
        .chain(specs(4, true))
        .collect::<Vec<_>>();
    (0..all.len(), proptest::collection::vec(any::<usize>(), 3))
        .prop_map(move |(i, idx)| (all[i], idx))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn multiplication_is_associative((spec, idx) in some_group()) {
        let g = Group::new(spec).unwrap();
        let n = g.elements().len();
        let [a, b, c] = [idx[0] % n, idx[1] % n, idx[2] % n].map(|i| g.element_at(i));
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
    }

    #[test]
    fn inverses_cancel((spec, idx) in some_group()) {
        let g = Group::new(spec).unwrap();
        let a = g.element_at(idx[0] % g.elements().len());
        prop_assert_eq!(g.mul(a, g.inv(a)), Element::IDENTITY);
        prop_assert_eq!(g.mul(g.inv(a), a), Element::IDENTITY);
        prop_assert_eq!(g.index_of(&a), idx[0] % g.elements().len());
    }

    #[test]
    fn power_matches_repeated_product((spec, idx) in some_group(), k in -30i64..30) {
        let g = Group::new(spec).unwrap();
        let a = g.element_at(idx[0] % g.elements().len());
        let step = if k < 0 { g.inv(a) } else { a };
        let mut acc = Element::IDENTITY;
        for _ in 0..k.unsigned_abs() {
            acc = g.mul(acc, step);
        }
        prop_assert_eq!(g.power(a, k), acc);
        prop_assert_eq!(g.power(a, g.element_order(a) as i64), Element::IDENTITY);
    }

    #[test]
    fn conjugation_preserves_order((spec, idx) in some_group()) {
        let g = Group::new(spec).unwrap();
        let n = g.elements().len();
        let (h, a) = (g.element_at(idx[0] % n), g.element_at(idx[1] % n));
        let b = g.conjugate(h, a);
        prop_assert_eq!(g.element_order(a), g.element_order(b));
        prop_assert!(g.are_conjugate(a, b));
        prop_assert_eq!(a.is_anticonformal(), b.is_anticonformal());
    }
}

fn group(family: Family, n: u32, params: Params, variant: Variant, tau: bool) -> Group {
    Group::new(GroupSpec::new(family, n, params, variant, tau).unwrap()).unwrap()
}

fn a_group(n: u32, alpha: u8, gamma: u8, eps: u8) -> Group {
    group(
        Family::A,
        n,
        Params::k244(alpha, gamma, 0),
        Variant::single(eps),
        false,
    )
}

#[test]
fn rewriting_examples() {
    let g = a_group(4, 0, 1, 0);
    let e = |s: &str| g.parse_element(s).unwrap();
    assert_eq!(g.mul(e("y"), e("x")), e("x y rho"));
    assert_eq!(g.power(e("x y"), 2), e("x^2 y^2 rho"));
    assert_eq!(g.power(e("x y"), 0), Element::IDENTITY);

    let g = a_group(4, 1, 0, 0);
    let e = |s: &str| g.parse_element(s).unwrap();
    assert_eq!(g.conjugate(e("c"), e("x")), e("y^-1 rho"));

    let g = a_group(5, 0, 0, 1);
    assert_eq!(g.element_order(g.generator(Gen::X).unwrap()), 10);
}

#[test]
fn identity_and_rho() {
    for spec in specs(4, true) {
        let g = Group::new(spec).unwrap();
        let rho = g.generator(Gen::Rho).unwrap();
        assert_eq!(g.element_order(rho), 2);
        assert_eq!(g.element_order(Element::IDENTITY), 1);
        assert_eq!(g.centralizer(rho).len() as u64, g.order());
        assert_eq!(g.centralizer(Element::IDENTITY).len() as u64, g.order());
        assert_eq!(g.subgroup_generated(&[]), vec![Element::IDENTITY]);
        assert_eq!(g.subgroup_order(&[rho]), 2);
        assert_eq!(g.subgroup_order(&g.generators()) as u64, g.order());
    }
    let g = a_group(4, 0, 0, 0);
    for &e in g.elements() {
        assert_eq!(g.mul(Element::IDENTITY, e), e);
        assert_eq!(g.mul(e, Element::IDENTITY), e);
    }
}

#[test]
fn exhaustive_axioms_small() {
    for spec in specs(2, true) {
        let g = Group::new(spec).unwrap();
        for &a in g.elements() {
            assert_eq!(g.mul(g.inv(a), a), Element::IDENTITY);
            for &b in g.elements() {
                let ab = g.mul(a, b);
                for &c in g.elements().iter().step_by(3) {
                    assert_eq!(g.mul(ab, c), g.mul(a, g.mul(b, c)), "{}", spec.label());
                }
            }
        }
    }
}

#[test]
fn enumeration_sizes() {
    let p = Params::k244(0, 0, 0);
    assert_eq!(
        group(Family::A, 2, p, Variant::single(0), false)
            .elements()
            .len(),
        32
    );
    let p = Params::k236(0, 0, 0);
    assert_eq!(
        group(Family::D, 6, p, Variant::pair(0, 0), false)
            .elements()
            .len(),
        144
    );
    assert_eq!(
        group(Family::C, 2, p, Variant::single(0), true)
            .elements()
            .len(),
        96
    );
}

#[test]
fn reduced_quotients() {
    let rq = a_group(3, 0, 0, 0).reduced_quotient();
    assert_eq!((rq.invariants.d1, rq.invariants.d2, rq.twist), (3, 3, 4));
    let d = group(
        Family::D,
        6,
        Params::k236(0, 0, 0),
        Variant::pair(0, 0),
        false,
    );
    let rq = d.reduced_quotient();
    assert_eq!((rq.invariants.d1, rq.invariants.d2, rq.twist), (2, 6, 6));
    for spec in specs(6, false) {
        let g = Group::new(spec).unwrap();
        let rq = g.reduced_quotient();
        let (d, e, t) = spec.dims();
        assert_eq!(rq.invariants.order(), (d * e) as u64);
        assert_eq!(rq.invariants.order() * rq.twist as u64, g.order() / 2);
        let expect = match spec.family {
            Family::A | Family::C | Family::E => (spec.n, spec.n),
            Family::B => (spec.n / 2, spec.n),
            Family::D | Family::F => (spec.n / 3, spec.n),
        };
        assert_eq!(
            (rq.invariants.d1, rq.invariants.d2),
            (expect.0 as u64, expect.1 as u64)
        );
        assert_eq!(rq.twist, t);
    }
}

#[test]
fn homomorphism_from_images() {
    for case in ["6.2", "6.3", "6.5", "6.6", "6.8"] {
        let case = ellhyp::catalog::find_case(case).unwrap();
        let label = case
            .labels()
            .into_iter()
            .find(|l| l.family == Family::C)
            .unwrap();
        let n = case.admissible_n(label).next().unwrap();
        let g = Group::new(case.spec(label, n, false).unwrap()).unwrap();
        let rel = g.spec().relators();
        let e = |s: &str| g.parse_element(s).unwrap();
        let ident: Vec<(Gen, Element)> = [Gen::X, Gen::Y, Gen::C, Gen::Rho]
            .iter()
            .map(|&x| (x, g.generator(x).unwrap()))
            .collect();
        let h = hom_from_images(&rel, &ident, &g).unwrap().unwrap();
        assert!(h.is_surjective(&g) && h.is_injective_given(&g, g.order()));

        let (al, be) = (case.params.alpha, case.params.beta);
        let phi = vec![
            (Gen::X, e("x^-1")),
            (Gen::Y, e(&format!("x^-1 y rho^{be}"))),
            (Gen::C, e(&format!("c^-1 y^-1 x rho^{al}"))),
            (Gen::Rho, e("rho")),
        ];
        let h = hom_from_images(&rel, &phi, &g).unwrap();
        assert!(h.is_some_and(|h| h.is_surjective(&g)), "{}", case.label);

        // A corrupted relator no longer holds.
        let mut bad = rel.clone();
        bad[0] = bad[0].clone().then(&Word::gen(Gen::Rho, 1));
        assert!(!g.words_vanish(&bad));
        assert!(hom_from_images(&bad, &ident, &g).unwrap().is_none());
    }
}
