use ellhyp::catalog::{
    catalog, find_case, signature_of, transcribed_catalog, GroupLabel, TriangularAction,
};
use ellhyp::group::Family;
use ellhyp::locus::{
    all_decompositions, extension_of, genus_decomposition, listing_of, symmetric_actions,
    symmetric_full_count, ActionRef, GenusDecomposition,
};
use ellhyp::ovals::{
    build_full_group, build_full_group_unchecked, centralizer_profile, merged_classes_odd_n,
    oval_counts, reflection_conjugacy,
};
use ellhyp::Error;
use proptest::prelude::*;

fn label(s: &str) -> GroupLabel {
    GroupLabel::parse(s).unwrap()
}

fn action(case: &str, l: &str, n: u32) -> TriangularAction {
    TriangularAction::from_labels(case, label(l), n).unwrap()
}

fn aref(case: &str, l: &str, n: u32) -> ActionRef {
    let gl = label(l);
    ActionRef {
        case: case.into(),
        family: gl.family,
        variant: gl.variant,
        n,
    }
}

#[test]
fn catalog_cells() {
    let c = find_case("4.2").unwrap();
    assert!(c.admits(label("A_1"), 3) && c.admits(label("B_01"), 4));
    assert!(c.groups_at(3).iter().all(|g| g.family == Family::A));
    assert!(!find_case("4.4").unwrap().admits(label("B_00"), 7));
    let c = find_case("6.2").unwrap();
    assert!(c.admits(label("D_10"), 9) && c.admits(label("D_10"), 15));
    assert!(!c.admits(label("D_00"), 9) && c.admits(label("D_00"), 12));
    // The printed 3.3 cell admits E_0 at odd n; the working one does not.
    let printed = transcribed_catalog()
        .iter()
        .find(|c| c.label == "3.3")
        .unwrap();
    assert!(printed.admits(label("E_0"), 3));
    assert!(!find_case("3.3").unwrap().admits(label("E_0"), 3));
    assert!(find_case("3.3").unwrap().admits(label("E_1"), 3));
    assert_eq!(catalog().len(), transcribed_catalog().len());
}

#[test]
fn case_signatures() {
    let sorted = |c: &str| signature_of(c).unwrap().sorted().periods();
    assert_eq!(sorted("4.4"), [2, 4, 8]);
    assert_eq!(sorted("6.6"), [4, 6, 6]);
    assert_eq!(sorted("6.3"), [2, 3, 12]);
    assert_eq!(sorted("3.3"), [3, 6, 6]);
    assert!(find_case("9.9").is_err());
}

#[test]
fn theta_orders_match_periods() {
    let a = action("4.4", "B_00", 8);
    let g = a.group();
    let orders = a.theta_images().map(|e| g.element_order(e));
    assert_eq!(orders, [2, 4, 8]);
    assert!(a.is_smooth() && a.is_symmetric() && a.is_generating());
}

#[test]
fn genus_examples() {
    assert_eq!(action("4.4", "A_0", 4).genus().unwrap(), 9);
    assert_eq!(action("4.4", "B_00", 8).genus().unwrap(), 17);
    assert_eq!(action("6.2", "C_1", 3).genus().unwrap(), 10);
    assert_eq!(action("6.6", "D_11", 6).genus().unwrap(), 31);
}

#[test]
fn identity_images_are_not_smooth() {
    let a = action("4.4", "B_00", 4);
    let e = ellhyp::group::Element::IDENTITY;
    let bad = TriangularAction::with_images(a.case(), a.group_label(), 4, [e, e, e]).unwrap();
    assert!(!bad.is_smooth() && !bad.is_generating());
}

#[test]
fn decompositions() {
    assert_eq!(
        genus_decomposition(17).unwrap(),
        Some(GenusDecomposition { k: 1, a: 4 })
    );
    assert_eq!(
        genus_decomposition(7).unwrap(),
        Some(GenusDecomposition { k: 6, a: 1 })
    );
    assert_eq!(genus_decomposition(12).unwrap(), None);
    assert_eq!(genus_decomposition(5), Err(Error::GenusTooSmall(5)));
}

#[test]
fn full_counts() {
    assert_eq!(symmetric_full_count(73).unwrap(), 4);
    assert_eq!(symmetric_full_count(11).unwrap(), 1);
    assert_eq!(symmetric_full_count(12).unwrap(), 0);
}

#[test]
fn full_count_agrees_with_listing() {
    for g in 6..=200 {
        let acts = symmetric_actions(g).unwrap();
        assert_eq!(
            acts.iter().filter(|a| a.full).count(),
            symmetric_full_count(g).unwrap(),
            "g = {g}"
        );
        for a in &acts {
            assert!(a.is_valid(g), "{} at g = {g}", a.reference);
            assert_eq!(a.action.genus().unwrap(), g);
        }
    }
}

#[test]
fn extensions_reach_full_actions() {
    let d = GenusDecomposition { k: 1, a: 4 };
    let e = extension_of(&aref("4.2", "B_00", 4), d).unwrap().unwrap();
    assert!(e.index_matches_area && e.order_ratio_matches);
    let mut last = &e;
    while let Some(next) = &last.then {
        last = next;
    }
    assert!(last.target_full, "{}", last.target);
    assert_eq!(listing_of(&last.target).unwrap(), Some(true));

    assert_eq!(listing_of(&aref("6.6", "C_1", 2)).unwrap(), Some(true));
    assert_eq!(listing_of(&aref("4.2", "B_00", 4)).unwrap(), Some(false));
}

#[test]
fn every_non_full_action_extends() {
    for g in [7, 10, 17, 19, 28, 55, 73] {
        for a in symmetric_actions(g).unwrap().iter().filter(|a| !a.full) {
            // 3.4 E has no extension row of its own.
            if a.reference.case == "3.4" && a.reference.family == Family::E {
                assert!(a.extension.is_none());
                continue;
            }
            let e = a
                .extension
                .as_ref()
                .unwrap_or_else(|| panic!("{} at g = {g}", a.reference));
            assert!(e.index_matches_area && e.order_ratio_matches);
        }
    }
}

#[test]
fn reflection_classes() {
    assert_eq!(reflection_conjugacy([2, 4, 8]).len(), 3);
    assert_eq!(reflection_conjugacy([2, 3, 12]).len(), 2);
    assert_eq!(reflection_conjugacy([3, 3, 3]).len(), 1);
}

#[test]
fn centralizers_and_merged_classes() {
    let fg = build_full_group(&action("4.4", "A_0", 4)).unwrap();
    assert_eq!(fg.group().order(), 256);
    assert_eq!(centralizer_profile(&fg, 0), 32);
    assert_eq!(centralizer_profile(&fg, 1), 64);
    assert!(!merged_classes_odd_n(&fg));

    let fg = build_full_group(&action("4.4", "B_00", 8)).unwrap();
    assert_eq!(centralizer_profile(&fg, 0), 32);

    // At odd n the first two reflections of 4.2 fall into one class.
    let fg = build_full_group_unchecked(&action("4.2", "A_0", 3)).unwrap();
    assert!(merged_classes_odd_n(&fg));
    let fg = build_full_group(&action("6.2", "C_1", 3)).unwrap();
    assert!(!merged_classes_odd_n(&fg));
}

#[test]
fn full_group_needs_supported_family() {
    let e = build_full_group(&action("3.3", "E_1", 3));
    assert!(matches!(
        e,
        Err(Error::FamilyUnsupported(Family::E)) | Err(Error::NotFull(_))
    ));
    assert!(matches!(
        build_full_group_unchecked(&action("3.3", "E_1", 3)),
        Err(Error::FamilyUnsupported(Family::E))
    ));
}

#[test]
fn oval_examples() {
    let ovals = |c: &str, l: &str, n| {
        oval_counts(&build_full_group(&action(c, l, n)).unwrap())
            .unwrap()
            .oval_multiset()
    };
    assert_eq!(ovals("4.4", "B_00", 8), [2, 4, 4]);
    assert_eq!(ovals("6.2", "C_1", 3), [1, 3, 3]);
    assert_eq!(ovals("6.6", "C_1", 2), [1, 3]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn at_most_one_decomposition(g in 6u64..2_000_000) {
        prop_assert!(all_decompositions(g).len() <= 1);
        prop_assert!(symmetric_full_count(g).unwrap() <= 4);
    }
}
