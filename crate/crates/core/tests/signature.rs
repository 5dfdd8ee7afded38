use ellhyp::signature::{
    genus_of_kernel, rh_index, triangular_symmetric_candidates, Sign, Signature,
    TriangularSignature,
};
use ellhyp::{Error, Rational};
use proptest::prelude::*;

fn tri(p: [u32; 3]) -> TriangularSignature {
    TriangularSignature::new(p).unwrap()
}

fn nec(src: &str) -> Signature {
    src.parse().unwrap()
}

#[test]
fn areas() {
    assert_eq!(tri([2, 4, 8]).area(), Rational::new(1, 8));
    assert_eq!(nec("(2; +; [-]; {-})").area().unwrap(), Rational::from(2));
    assert!(matches!(
        TriangularSignature::new([2, 3, 6]),
        Err(Error::NonHyperbolic(_))
    ));
    assert!(matches!(
        nec("(0; +; [-]; {(2,3,6)})").area(),
        Err(Error::NonHyperbolic(_))
    ));
}

#[test]
fn canonical_subgroups() {
    let s = nec("(0; +; [-]; {(2,4,8)})").canonical_fuchsian().unwrap();
    assert_eq!((s.orbit_genus(), s.proper_periods()), (0, &[2, 4, 8][..]));

    let s = nec("(0; +; [3]; {(5)})").canonical_fuchsian().unwrap();
    assert_eq!(s.proper_periods(), &[3, 3, 5]);

    let s = nec("(1; -; [-]; {(-)})").canonical_fuchsian().unwrap();
    assert_eq!((s.orbit_genus(), s.is_fuchsian()), (1, true));
    assert!(s.proper_periods().is_empty());

    let f = Signature::fuchsian(0, vec![2, 4, 8]).unwrap();
    assert_eq!(f.canonical_fuchsian(), Err(Error::AlreadyFuchsian));
}

#[test]
fn indices() {
    let sub = tri([4, 8, 8]).to_signature().unwrap();
    let sup = tri([2, 8, 8]).to_signature().unwrap();
    assert_eq!(rh_index(&sub, &sup).unwrap(), Rational::from(2));
    assert_eq!(rh_index(&sup, &sup).unwrap(), Rational::from(1));
    let surface = Signature::fuchsian(9, vec![]).unwrap();
    let sup = tri([2, 4, 8]).to_signature().unwrap();
    assert_eq!(rh_index(&surface, &sup).unwrap(), Rational::from(128));
}

#[test]
fn kernel_genus() {
    assert_eq!(genus_of_kernel(&tri([2, 4, 8]), 128).unwrap(), 9);
    assert_eq!(genus_of_kernel(&tri([2, 6, 6]), 216).unwrap(), 19);
    assert!(matches!(
        genus_of_kernel(&tri([2, 3, 7]), 10),
        Err(Error::NonIntegralGenus { .. })
    ));
}

#[test]
fn symmetric_candidates() {
    let c = triangular_symmetric_candidates();
    assert_eq!(c.len(), 15);
    assert!(c.contains(&tri([2, 4, 8])));
    assert!(c.contains(&tri([4, 6, 12])));
    assert!(c.iter().all(|s| s.area() > Rational::from(0)));
    // Independent construction: multiply each period of a Euclidean triple by 1 or 2.
    let mut brute: Vec<[u32; 3]> = Vec::new();
    for base in [[2, 4, 4], [2, 3, 6], [3, 3, 3]] {
        for mask in 1..8u32 {
            let mut p = base.map(|x| x);
            for (i, x) in p.iter_mut().enumerate() {
                if mask >> i & 1 == 1 {
                    *x *= 2;
                }
            }
            p.sort_unstable();
            if !brute.contains(&p) {
                brute.push(p);
            }
        }
    }
    let mut got: Vec<[u32; 3]> = c.iter().map(|s| s.sorted().periods()).collect();
    got.sort_unstable();
    brute.sort_unstable();
    assert_eq!(got, brute);
}

#[test]
fn construction_rejects_degenerate_input() {
    assert!(Signature::new(0, Sign::Minus, vec![], vec![]).is_err());
    assert!(Signature::fuchsian(0, vec![1, 4, 8]).is_err());
    assert!("(0; +; [2,3]".parse::<Signature>().is_err());
    assert!("(0; *; [-]; {-})".parse::<Signature>().is_err());
}

#[test]
fn cycles_compare_up_to_rotation() {
    assert_eq!(nec("(0; +; [-]; {(2,3,4)})"), nec("(0; +; [-]; {(3,4,2)})"));
}

#[test]
fn display_parses_back() {
    for src in [
        "(0; +; [-]; {(2,4,8)})",
        "(1; -; [-]; {(-)})",
        "(0; +; [3]; {(5)})",
        "(2; +; [2,2]; {(2,2),(-)})",
    ] {
        let s = nec(src);
        assert_eq!(nec(&s.to_string()), s, "{src}");
    }
}

fn proper_nec() -> impl Strategy<Value = Signature> {
    (
        0u32..3,
        any::<bool>(),
        proptest::collection::vec(2u32..9, 0..3),
        proptest::collection::vec(proptest::collection::vec(2u32..9, 0..3), 1..3),
    )
        .prop_filter_map("hyperbolic", |(g, minus, periods, cycles)| {
            let sign = if minus { Sign::Minus } else { Sign::Plus };
            Signature::hyperbolic(if minus { g + 1 } else { g }, sign, periods, cycles).ok()
        })
}

proptest! {
    #[test]
    fn canonical_subgroup_doubles_area(s in proper_nec()) {
        let c = s.canonical_fuchsian().unwrap();
        prop_assert_eq!(c.area().unwrap(), s.area().unwrap() * Rational::from(2));
    }

    #[test]
    fn text_roundtrip(s in proper_nec()) {
        prop_assert_eq!(s.to_string().parse::<Signature>().unwrap(), s);
    }

    #[test]
    fn indices_multiply_along_chains(a in 2u32..12, b in 2u32..12, c in 2u32..12, k in 1u64..6, l in 1u64..6) {
        let Ok(sup) = TriangularSignature::new([a, b, c]) else { return Ok(()) };
        let sup = sup.to_signature().unwrap();
        let area = sup.area().unwrap();
        // Surface signatures of matching area give a chain sub ⊂ mid ⊂ sup.
        let genus_for = |idx: u64| {
            let two_g_minus_2 = area * Rational::from(idx as i64);
            (two_g_minus_2.is_integer() && (two_g_minus_2.to_integer() % 2 == 0))
                .then(|| (two_g_minus_2.to_integer() / 2 + 1) as u32)
        };
        let (Some(gm), Some(gs)) = (genus_for(k * 24), genus_for(k * l * 24)) else { return Ok(()) };
        prop_assume!(gm >= 2);
        let mid = Signature::fuchsian(gm, vec![]).unwrap();
        let sub = Signature::fuchsian(gs, vec![]).unwrap();
        prop_assert_eq!(
            rh_index(&sub, &sup).unwrap(),
            rh_index(&sub, &mid).unwrap() * rh_index(&mid, &sup).unwrap()
        );
    }

    #[test]
    fn float_area_tracks_exact(a in 2u32..20, b in 2u32..20, c in 2u32..20) {
        let Ok(t) = TriangularSignature::new([a, b, c]) else { return Ok(()) };
        let s = t.to_signature().unwrap();
        let exact = t.area();
        let f: f64 = s.area_as();
        prop_assert!((f - *exact.numer() as f64 / *exact.denom() as f64).abs() < 1e-12);
    }
}
