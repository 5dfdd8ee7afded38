//! Normal-form arithmetic for the families A–F and their extensions by `τ`.

pub mod coset;
mod engine;
mod hom;
mod spec;
mod word;

pub use engine::{Element, ElementDisplay, Group, ReducedQuotient};
pub use hom::{hom_from_images, Homomorphism, PresentedHom};
pub use spec::{Family, GroupSpec, Kind, Params, Variant};
pub use word::{Gen, Word};

use crate::error::Result;

/// Outcome of comparing the engine with coset enumeration on the same presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleComparison {
    pub engine_order: u64,
    pub presented_order: usize,
    pub engine_classes: usize,
    pub presented_classes: usize,
    /// The map coset ↦ normal form is a bijection intertwining generator actions.
    pub isomorphic: bool,
}

/// Enumerates cosets of the presentation of `spec` and compares with the engine.
/// `None` if enumeration exceeded `limit` cosets.
pub fn compare_with_coset_enumeration(
    spec: &GroupSpec,
    limit: usize,
) -> Result<Option<OracleComparison>> {
    let g = Group::new(*spec)?;
    let mut gens = vec![Gen::X, Gen::Y, Gen::C, Gen::Rho];
    if spec.with_tau {
        gens.push(Gen::Tau);
    }
    let Some(table) = coset::enumerate(&gens, &spec.relators(), limit) else {
        return Ok(None);
    };
    let gen_elems: Vec<Element> = gens
        .iter()
        .map(|&x| g.generator(x))
        .collect::<Result<_>>()?;
    let presented_order = table.len();
    let mut isomorphic = presented_order as u64 == g.order();
    let mut image = vec![None; presented_order];
    if isomorphic {
        image[0] = Some(Element::IDENTITY);
        let mut queue = std::collections::VecDeque::from([0u32]);
        while let Some(k) = queue.pop_front() {
            let ek = image[k as usize].expect("visited");
            for (i, &ge) in gen_elems.iter().enumerate() {
                for inv in [false, true] {
                    let target = table.act(k, i, inv);
                    let step = if inv { g.inv(ge) } else { ge };
                    let et = g.mul(ek, step);
                    match image[target as usize] {
                        Some(prev) if prev != et => isomorphic = false,
                        Some(_) => {}
                        None => {
                            image[target as usize] = Some(et);
                            queue.push_back(target);
                        }
                    }
                }
            }
        }
        let mut hit = vec![false; presented_order];
        for e in image.iter().flatten() {
            let idx = g.index_of(e);
            if hit[idx] {
                isomorphic = false;
            }
            hit[idx] = true;
        }
    }
    let engine_classes = if isomorphic {
        g.conjugacy_classes().len()
    } else {
        0
    };
    Ok(Some(OracleComparison {
        engine_order: g.order(),
        presented_order,
        engine_classes,
        presented_classes: table.class_count(),
        isomorphic,
    }))
}
