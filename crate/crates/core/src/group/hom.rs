use std::collections::VecDeque;

use super::engine::{Element, Group};
use super::word::{Gen, Word};
use crate::error::Result;

/// A homomorphism given by the images of a generating set, tabulated on the subgroup
/// those generators span.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    domain_gens: Vec<Element>,
    table: Vec<Option<Element>>,
    covered: usize,
}

impl Homomorphism {
    /// Extends `gens[i] ↦ images[i]` along the Cayley graph of `⟨gens⟩ ≤ domain`.
    /// Returns `None` if two paths to the same element give different images.
    pub fn extend(
        domain: &Group,
        gens: &[Element],
        target: &Group,
        images: &[Element],
    ) -> Option<Homomorphism> {
        assert_eq!(gens.len(), images.len());
        let mut table = vec![None; domain.order() as usize];
        table[0] = Some(Element::IDENTITY);
        let mut queue = VecDeque::from([Element::IDENTITY]);
        let mut covered = 1;
        while let Some(a) = queue.pop_front() {
            let fa = table[domain.index_of(&a)].expect("visited");
            for (g, h) in gens.iter().zip(images) {
                let b = domain.mul(a, *g);
                let fb = target.mul(fa, *h);
                let slot = &mut table[domain.index_of(&b)];
                match slot {
                    Some(prev) if *prev != fb => return None,
                    Some(_) => {}
                    None => {
                        *slot = Some(fb);
                        covered += 1;
                        queue.push_back(b);
                    }
                }
            }
        }
        Some(Homomorphism {
            domain_gens: gens.to_vec(),
            table,
            covered,
        })
    }

    pub fn domain_generators(&self) -> &[Element] {
        &self.domain_gens
    }

    pub fn apply(&self, domain: &Group, a: Element) -> Option<Element> {
        self.table[domain.index_of(&a)]
    }

    /// Size of the subgroup on which the map is defined.
    pub fn domain_size(&self) -> usize {
        self.covered
    }

    pub fn image(&self, target: &Group) -> Vec<Element> {
        let mut seen = vec![false; target.order() as usize];
        let mut out = Vec::new();
        for e in self.table.iter().flatten() {
            let k = target.index_of(e);
            if !seen[k] {
                seen[k] = true;
                out.push(*e);
            }
        }
        out
    }

    pub fn is_injective(&self, target: &Group) -> bool {
        self.image(target).len() == self.covered
    }

    pub fn is_surjective(&self, target: &Group) -> bool {
        self.image(target).len() as u64 == target.order()
    }

    /// Defined on all of `domain` and bijective onto `target`.
    pub fn is_isomorphism(&self, domain: &Group, target: &Group) -> bool {
        self.covered as u64 == domain.order() && self.is_surjective(target)
    }
}

/// A homomorphism from a finitely presented group into `target`, given by generator
/// images. Exists exactly when every relator maps to the identity.
#[derive(Clone, Debug)]
pub struct PresentedHom {
    images: Vec<(Gen, Element)>,
}

impl PresentedHom {
    pub fn eval(&self, target: &Group, w: &Word) -> Element {
        let mut acc = Element::IDENTITY;
        for &(g, k) in &w.0 {
            let img = self
                .images
                .iter()
                .find(|(h, _)| *h == g)
                .map(|(_, e)| *e)
                .expect("generator has an image");
            acc = target.mul(acc, target.power(img, k));
        }
        acc
    }

    pub fn image(&self, target: &Group) -> Vec<Element> {
        let gens: Vec<Element> = self.images.iter().map(|(_, e)| *e).collect();
        target.subgroup_generated(&gens)
    }

    pub fn is_surjective(&self, target: &Group) -> bool {
        self.image(target).len() as u64 == target.order()
    }

    /// With the order of the presented group known, injectivity is an order comparison.
    pub fn is_injective_given(&self, target: &Group, domain_order: u64) -> bool {
        self.image(target).len() as u64 == domain_order
    }
}

/// `Some` iff the assignment `gen ↦ image` respects every relator.
pub fn hom_from_images(
    relators: &[Word],
    images: &[(Gen, Element)],
    target: &Group,
) -> Result<Option<PresentedHom>> {
    let h = PresentedHom {
        images: images.to_vec(),
    };
    for r in relators {
        for (g, _) in &r.0 {
            if !images.iter().any(|(h, _)| h == g) {
                return Err(crate::Error::SpecMismatch);
            }
        }
        if !h.eval(target, r).is_identity() {
            return Ok(None);
        }
    }
    Ok(Some(h))
}
