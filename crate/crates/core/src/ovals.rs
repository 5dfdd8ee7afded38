//! Symmetries of full actions and their ovals.
//!
//! The full group `A = G ⋊ ⟨τ⟩` is the `τ`-extension of the conformal group. The three
//! canonical reflections of the NEC group map to `g1·τ`, `τ` and `τ·g2`. The number of
//! ovals of a symmetry `φ` is `Σ |C(A, θ̃(cᵢ))| / |θ̃(C(Λ̃, cᵢ))|`, summed over
//! non-conjugate reflections `cᵢ` with image conjugate to `φ`.

use serde::Serialize;

use crate::catalog::{theta_words, TriangularAction};
use crate::error::{Error, Result};
use crate::group::{Element, Family, Gen, Group, Word};
use crate::locus::{listing_of, ActionRef};

/// The conformal and anticonformal automorphism group of a full action.
#[derive(Debug)]
pub struct FullGroup {
    reference: ActionRef,
    group: Group,
    genus: u64,
    theta: [Element; 3],
    tau: Element,
    reflections: [Element; 3],
    periods: [u32; 3],
}

/// Builds `G ⋊ ⟨τ⟩` for a full action of family A–D.
pub fn build_full_group(action: &TriangularAction) -> Result<FullGroup> {
    build(action, true)
}

/// As [`build_full_group`] but without requiring the action to be full.
pub fn build_full_group_unchecked(action: &TriangularAction) -> Result<FullGroup> {
    build(action, false)
}

fn build(action: &TriangularAction, require_full: bool) -> Result<FullGroup> {
    let family = action.group_label().family;
    if !family.supports_tau() {
        return Err(Error::FamilyUnsupported(family));
    }
    let reference = ActionRef {
        case: action.case().label.clone(),
        family,
        variant: action.group_label().variant,
        n: action.n(),
    };
    if require_full && listing_of(&reference)? != Some(true) {
        return Err(Error::NotFull(action.label()));
    }
    let group = Group::new(action.spec().with_tau(true)?)?;
    if !group.relators_hold() {
        return Err(Error::Invalid(
            action.label(),
            "τ-extension relators fail".into(),
        ));
    }
    let mut theta = [Element::IDENTITY; 3];
    for (slot, w) in theta.iter_mut().zip(theta_words(family)) {
        *slot = group.eval(&Word::parse(family, w)?)?;
    }
    let tau = group.generator(Gen::Tau)?;
    let [g1, g2, _] = theta;
    if group.conjugate(tau, g1) != group.inv(g1) || group.conjugate(tau, g2) != group.inv(g2) {
        return Err(Error::Invalid(
            action.label(),
            "τ does not invert g1, g2".into(),
        ));
    }
    let reflections = [group.mul(g1, tau), tau, group.mul(tau, g2)];
    Ok(FullGroup {
        genus: action.genus()?,
        periods: action.signature().periods(),
        reference,
        group,
        theta,
        tau,
        reflections,
    })
}

impl FullGroup {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn reference(&self) -> &ActionRef {
        &self.reference
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn theta(&self) -> [Element; 3] {
        self.theta
    }

    pub fn tau(&self) -> Element {
        self.tau
    }

    pub fn reflections(&self) -> [Element; 3] {
        self.reflections
    }

    /// Link periods `(k′, l′, m′)` of the NEC signature `(0; +; [-]; {(k′, l′, m′)})`.
    pub fn nec_periods(&self) -> [u32; 3] {
        self.periods
    }

    fn eval_reflections(&self, word: &[usize]) -> Element {
        word.iter().fold(Element::IDENTITY, |acc, &i| {
            self.group.mul(acc, self.reflections[i])
        })
    }
}

/// Classes of canonical reflections under conjugacy in the NEC group: neighbours are
/// conjugate exactly when the link period between them is odd.
pub fn reflection_conjugacy(periods: [u32; 3]) -> Vec<Vec<usize>> {
    let mut parent = [0usize, 1, 2];
    fn find(p: &mut [usize; 3], i: usize) -> usize {
        if p[i] == i {
            i
        } else {
            let r = find(p, p[i]);
            p[i] = r;
            r
        }
    }
    for i in 0..3 {
        if periods[i] % 2 == 1 {
            let (a, b) = (find(&mut parent, i), find(&mut parent, (i + 1) % 3));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..3 {
        let r = find(&mut parent, i);
        match classes.iter_mut().find(|c| find(&mut parent, c[0]) == r) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}

/// Generators of the centralizer of a canonical reflection, as words in the reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerWords {
    pub reflection: usize,
    pub words: Vec<Vec<usize>>,
}

fn alt(a: usize, b: usize, k: u32) -> Vec<usize> {
    (0..k).flat_map(|_| [a, b]).collect()
}

fn cat(parts: &[Vec<usize>]) -> Vec<usize> {
    parts.concat()
}

/// Centralizer generators for one reflection of each conjugacy class, after rotating
/// the link periods to one of the four parity patterns odd/odd/odd, even/odd/odd,
/// even/even/odd and even/even/even.
pub fn centralizer_words(periods: [u32; 3]) -> Vec<CentralizerWords> {
    let even = |p: u32| p % 2 == 0;
    let pattern = |r: usize| {
        let q = [periods[r], periods[(r + 1) % 3], periods[(r + 2) % 3]];
        match q.map(even) {
            [false, false, false] => Some((1, q)),
            [true, false, false] => Some((2, q)),
            [true, true, false] => Some((3, q)),
            [true, true, true] => Some((4, q)),
            _ => None,
        }
    };
    let (rot, (case, [kp, lp, mp])) = (0..3)
        .find_map(|r| pattern(r).map(|p| (r, p)))
        .expect("every parity pattern rotates to a listed one");
    let (k, l, m) = (kp / 2, lp / 2, mp / 2);
    // Local labels 0, 1, 2 stand for the reflections rot, rot + 1, rot + 2.
    let (c0, c1, c2) = (rot, (rot + 1) % 3, (rot + 2) % 3);
    let entry = |reflection: usize, words: Vec<Vec<usize>>| CentralizerWords { reflection, words };
    match case {
        1 => vec![entry(
            c0,
            vec![
                vec![c0],
                cat(&[alt(c2, c0, m), alt(c1, c2, l), alt(c0, c1, k)]),
            ],
        )],
        2 => vec![entry(
            c0,
            vec![
                vec![c0],
                alt(c0, c1, k),
                cat(&[
                    alt(c2, c0, m),
                    alt(c1, c2, l),
                    alt(c1, c0, k),
                    alt(c2, c1, l),
                    alt(c0, c2, m),
                ]),
            ],
        )],
        3 => vec![
            entry(
                c0,
                vec![
                    vec![c0],
                    alt(c0, c1, k),
                    cat(&[alt(c2, c0, m), alt(c2, c1, l), alt(c0, c2, m)]),
                ],
            ),
            entry(c1, vec![vec![c1], alt(c0, c1, k), alt(c1, c2, l)]),
        ],
        _ => vec![
            entry(c0, vec![vec![c0], alt(c0, c1, k), alt(c0, c2, m)]),
            entry(c1, vec![vec![c1], alt(c0, c1, k), alt(c1, c2, l)]),
            entry(c2, vec![vec![c2], alt(c0, c2, m), alt(c1, c2, l)]),
        ],
    }
}

/// `|θ̃(C(Λ̃, cᵢ))|` for each representative reflection, by subgroup closure.
pub fn nu_values(fg: &FullGroup) -> Vec<(usize, u64)> {
    centralizer_words(fg.periods)
        .into_iter()
        .map(|cw| {
            let gens: Vec<Element> = cw.words.iter().map(|w| fg.eval_reflections(w)).collect();
            (cw.reflection, fg.group.subgroup_order(&gens) as u64)
        })
        .collect()
}

/// Closed forms `4·ord(g1^k (g1g2)^m)`, `4·ord(g1^k g2^l)`, `4·ord((g1g2)^m g2^l)` for
/// link periods `(2k, 2l, 2m)`; `None` unless all periods are even.
pub fn nu_closed_form(fg: &FullGroup) -> Option<[u64; 3]> {
    let [kp, lp, mp] = fg.periods;
    if kp % 2 + lp % 2 + mp % 2 != 0 {
        return None;
    }
    let g = &fg.group;
    let (k, l, m) = ((kp / 2) as i64, (lp / 2) as i64, (mp / 2) as i64);
    let [g1, g2, _] = fg.theta;
    let g12 = g.mul(g1, g2);
    let ord = |e: Element| 4 * g.element_order(e);
    Some([
        ord(g.mul(g.power(g1, k), g.power(g12, m))),
        ord(g.mul(g.power(g1, k), g.power(g2, l))),
        ord(g.mul(g.power(g12, m), g.power(g2, l))),
    ])
}

/// `|C(A, θ̃(cᵢ))|`.
pub fn centralizer_profile(fg: &FullGroup, reflection: usize) -> u64 {
    fg.group.centralizer(fg.reflections[reflection]).len() as u64
}

/// Whether `τ` and `g1·τ` are conjugate in `A`.
pub fn merged_classes_odd_n(fg: &FullGroup) -> bool {
    fg.group.are_conjugate(fg.tau, fg.reflections[0])
}

/// One conjugacy class of anticonformal involutions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OvalClass {
    pub rep: String,
    #[serde(skip)]
    pub element: Element,
    pub size: usize,
    pub ovals: u64,
    pub fixed_points: bool,
    /// Canonical reflections (0, 1, 2) whose images lie in this class.
    pub reflections: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OvalReport {
    pub genus: u64,
    pub case: String,
    pub family: Family,
    pub n: u32,
    pub variant: String,
    pub classes: Vec<OvalClass>,
}

impl OvalReport {
    /// Oval counts of the classes with fixed points, sorted.
    pub fn oval_multiset(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .classes
            .iter()
            .filter(|c| c.fixed_points)
            .map(|c| c.ovals)
            .collect();
        v.sort_unstable();
        v
    }

    pub fn fixed_point_classes(&self) -> usize {
        self.classes.iter().filter(|c| c.fixed_points).count()
    }
}

/// Classifies the symmetries of `A` and counts their ovals.
pub fn oval_counts(fg: &FullGroup) -> Result<OvalReport> {
    let g = &fg.group;
    let family = fg.reference.family;
    let fail = |msg: String| Error::Invalid(fg.reference.to_string(), msg);
    let mut contributions = Vec::new();
    for (i, nu) in nu_values(fg) {
        let v = centralizer_profile(fg, i);
        if v % nu != 0 {
            return Err(fail(format!("ν = {nu} does not divide |C| = {v}")));
        }
        contributions.push((i, v / nu));
    }
    let mut seen = vec![false; g.order() as usize];
    let mut classes = Vec::new();
    let mut starts: Vec<Element> = fg.reflections.to_vec();
    starts.extend(
        g.elements()
            .iter()
            .copied()
            .filter(|e| e.is_anticonformal() && g.mul(*e, *e).is_identity()),
    );
    for start in starts {
        if seen[g.index_of(&start)] {
            continue;
        }
        let cls = g.conjugacy_class(start);
        for e in &cls {
            seen[g.index_of(e)] = true;
        }
        let reflections: Vec<usize> = (0..3)
            .filter(|&i| cls.contains(&fg.reflections[i]))
            .collect();
        let ovals = contributions
            .iter()
            .filter(|(i, _)| reflections.contains(i))
            .map(|(_, c)| c)
            .sum();
        let element = if reflections.is_empty() {
            cls[0]
        } else {
            fg.reflections[reflections[0]]
        };
        if ovals > fg.genus + 1 {
            return Err(fail(format!("{ovals} ovals exceed g + 1")));
        }
        if !reflections.is_empty() && ovals == 0 {
            return Err(fail("reflection class without ovals".into()));
        }
        classes.push(OvalClass {
            rep: element.display(family).to_string(),
            element,
            size: cls.len(),
            ovals,
            fixed_points: !reflections.is_empty(),
            reflections,
        });
    }
    Ok(OvalReport {
        genus: fg.genus,
        case: fg.reference.case.clone(),
        family,
        n: fg.reference.n,
        variant: fg.reference.variant.label(family),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugacy_patterns() {
        assert_eq!(
            reflection_conjugacy([2, 4, 8]),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(reflection_conjugacy([3, 3, 3]), vec![vec![0, 1, 2]]);
        assert_eq!(reflection_conjugacy([2, 3, 12]), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn one_word_set_per_class() {
        for p in [
            [2, 4, 8],
            [3, 3, 3],
            [2, 3, 12],
            [4, 3, 6],
            [3, 6, 6],
            [6, 3, 3],
        ] {
            let reps: Vec<usize> = centralizer_words(p).iter().map(|c| c.reflection).collect();
            let classes = reflection_conjugacy(p);
            assert_eq!(reps.len(), classes.len(), "{p:?}");
            for c in classes {
                assert_eq!(c.iter().filter(|i| reps.contains(i)).count(), 1);
            }
        }
    }
}
