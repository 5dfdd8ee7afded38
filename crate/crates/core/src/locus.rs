//! Genus-level classification of triangular symmetric actions.
//!
//! For `g − 1 = k·a²` with `k ∈ {1, 2, 3, 6, 10, 30}` the admissible actions are listed
//! as templates in `a` ([`statements`]); [`symmetric_actions`] instantiates and
//! re-validates them. [`extension_rows`] lists how non-full actions extend, and
//! [`exceptional_census`] counts the possible reduced-group types for each full
//! signature.

use std::fmt;

use num_integer::Roots;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::catalog::{find_case, transcribed_catalog, GroupLabel, TriangularAction};
use crate::error::{Error, Result};
use crate::group::{Family, GroupSpec, Variant};
use crate::quad::{ideal_types, AbelianInvariants, Ring};
use crate::signature::TriangularSignature;
use crate::Rational;

pub const GENUS_FACTORS: [u32; 6] = [1, 2, 3, 6, 10, 30];

/// `g − 1 = k·a²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenusDecomposition {
    pub k: u32,
    pub a: u32,
}

impl GenusDecomposition {
    pub fn genus(&self) -> u64 {
        self.k as u64 * (self.a as u64).pow(2) + 1
    }
}

/// The decomposition of `g − 1`, if any. Errors for `g ≤ 5`.
pub fn genus_decomposition(g: u64) -> Result<Option<GenusDecomposition>> {
    if g <= 5 {
        return Err(Error::GenusTooSmall(g));
    }
    Ok(all_decompositions(g).into_iter().next())
}

/// Every `(k, a)` with `k·a² = g − 1`; used to check that at most one exists.
pub fn all_decompositions(g: u64) -> Vec<GenusDecomposition> {
    let m = g.saturating_sub(1);
    GENUS_FACTORS
        .iter()
        .filter(|&&k| m % k as u64 == 0 && m > 0)
        .filter_map(|&k| {
            let q = m / k as u64;
            let a = q.sqrt();
            (a * a == q).then(|| GenusDecomposition { k, a: a as u32 })
        })
        .collect()
}

/// One entry of a statement: `case` with the listed groups at `n = level·a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Template {
    pub case: &'static str,
    pub labels: &'static [&'static str],
    pub level: u32,
    pub full: bool,
    /// Only present when `3 | a`.
    pub needs_three: bool,
    /// The labels as originally printed, when they had to be changed.
    pub printed: Option<&'static [&'static str]>,
}

/// The actions at genus `k·a² + 1` for `a` of the given parity (`None`: any `a`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Statement {
    pub number: u8,
    pub k: u32,
    pub parity: Option<u32>,
    pub templates: &'static [Template],
}

impl Statement {
    pub fn applies(&self, d: GenusDecomposition) -> bool {
        self.k == d.k && self.parity.map_or(true, |p| d.a % 2 == p)
    }

    /// Templates whose guard holds for `a`.
    pub fn active(&self, a: u32) -> impl Iterator<Item = &'static Template> {
        self.templates
            .iter()
            .filter(move |t| !t.needs_three || a % 3 == 0)
    }

    pub fn full_count(&self, a: u32) -> usize {
        self.active(a)
            .filter(|t| t.full)
            .map(|t| t.labels.len())
            .sum()
    }
}

const fn t(
    case: &'static str,
    labels: &'static [&'static str],
    level: u32,
    full: bool,
) -> Template {
    Template {
        case,
        labels,
        level,
        full,
        needs_three: false,
        printed: None,
    }
}

const fn t3(
    case: &'static str,
    labels: &'static [&'static str],
    level: u32,
    full: bool,
) -> Template {
    Template {
        needs_three: true,
        ..t(case, labels, level, full)
    }
}

static STATEMENTS: [Statement; 12] = [
    Statement {
        number: 1,
        k: 1,
        parity: Some(0),
        templates: &[
            t("4.2", &["B_00", "B_01"], 1, false),
            t("4.3", &["A_0", "A_1"], 1, false),
            t("4.4", &["B_00", "B_01"], 2, true),
            t("4.6", &["A_0", "A_1"], 1, false),
            t("6.2", &["C_0"], 1, true),
            t("3.3", &["E_0"], 1, false),
            t3("6.8", &["D_00"], 1, true),
        ],
    },
    Statement {
        number: 2,
        k: 1,
        parity: Some(1),
        templates: &[
            t("6.2", &["C_1"], 1, true),
            Template {
                printed: Some(&["E_0"]),
                ..t("3.3", &["E_1"], 1, false)
            },
            t3("6.8", &["D_01"], 1, true),
        ],
    },
    Statement {
        number: 3,
        k: 2,
        parity: Some(0),
        templates: &[
            t("4.2", &["A_0", "A_1"], 1, false),
            t("4.3", &["B_00", "B_01"], 2, false),
            t("4.4", &["A_0", "A_1"], 2, true),
            t("4.6", &["B_00", "B_01"], 2, false),
            t("6.3", &["C_0"], 2, true),
            t("6.7", &["C_0"], 1, false),
            t("3.2", &["E_0"], 2, false),
            t3("6.4", &["D_00"], 2, false),
            t3("6.5", &["D_00"], 2, true),
            t3("3.4", &["F_00"], 2, false),
        ],
    },
    Statement {
        number: 4,
        k: 2,
        parity: Some(1),
        templates: &[
            t("4.2", &["A_0", "A_1"], 1, false),
            t("4.3", &["B_11", "B_10"], 2, false),
            t("4.4", &["A_0", "A_1"], 2, true),
            t("4.6", &["B_10", "B_11"], 2, false),
            t("6.7", &["C_1"], 1, false),
            t("6.3", &["C_1"], 2, true),
            t("3.2", &["E_1"], 2, false),
            t3("6.4", &["D_11"], 2, false),
            t3("6.5", &["D_11"], 2, true),
            t3("3.4", &["F_11"], 2, false),
        ],
    },
    Statement {
        number: 5,
        k: 3,
        parity: Some(0),
        templates: &[
            t("4.5", &["B_00", "B_01"], 2, true),
            t("6.8", &["C_0"], 1, true),
            t("6.2", &["D_00"], 3, true),
            t("3.3", &["F_00"], 3, false),
        ],
    },
    Statement {
        number: 6,
        k: 3,
        parity: Some(1),
        templates: &[
            t("6.8", &["C_0"], 1, true),
            t("6.2", &["D_10"], 3, true),
            t("3.3", &["F_01"], 3, false),
        ],
    },
    Statement {
        number: 7,
        k: 6,
        parity: Some(0),
        templates: &[
            t("4.5", &["A_0", "A_1"], 2, true),
            t("6.3", &["D_00"], 6, true),
            t("6.4", &["C_0"], 2, false),
            t("6.5", &["C_0"], 2, true),
            t("6.7", &["D_00"], 3, false),
            t("3.2", &["F_00"], 6, false),
            t("3.4", &["E_0"], 2, false),
        ],
    },
    Statement {
        number: 8,
        k: 6,
        parity: Some(1),
        templates: &[
            t("4.5", &["A_0", "A_1"], 2, true),
            t("6.3", &["D_11"], 6, true),
            t("6.4", &["C_1"], 2, false),
            t("6.5", &["C_1"], 2, true),
            t("6.7", &["D_11"], 3, false),
            t("3.2", &["F_11"], 6, false),
            t("3.4", &["E_1"], 2, false),
        ],
    },
    Statement {
        number: 9,
        k: 10,
        parity: Some(0),
        templates: &[t("6.6", &["C_0"], 2, true)],
    },
    Statement {
        number: 9,
        k: 10,
        parity: Some(1),
        templates: &[t("6.6", &["C_1"], 2, true)],
    },
    Statement {
        number: 10,
        k: 30,
        parity: Some(0),
        templates: &[t("6.6", &["D_00"], 6, true)],
    },
    Statement {
        number: 10,
        k: 30,
        parity: Some(1),
        templates: &[t("6.6", &["D_11"], 6, true)],
    },
];

/// The classification as data, one entry per (statement, parity of `a`).
pub fn statements() -> &'static [Statement] {
    &STATEMENTS
}

pub fn statement_for(d: GenusDecomposition) -> &'static Statement {
    STATEMENTS
        .iter()
        .find(|s| s.applies(d))
        .expect("every decomposition has a statement")
}

/// A row of the extension table: the groups of `source` at `n = source_level·a` extend
/// to those of `target` at `target_level·a` with the given index. Only the variants for
/// even `a` are listed; for odd `a` the row applies to the same case, family and level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionRow {
    pub number: usize,
    pub k: u32,
    pub source_case: &'static str,
    pub source_labels: &'static [&'static str],
    pub source_level: u32,
    pub source_signature: [u32; 3],
    pub target_case: &'static str,
    pub target_labels: &'static [&'static str],
    pub target_level: u32,
    pub target_signature: [u32; 3],
    pub index: u32,
}

macro_rules! row {
    ($num:expr, $k:expr, $sc:expr, $sl:expr, $slev:expr, $ss:expr => $tc:expr, $tl:expr, $tlev:expr, $ts:expr, $idx:expr) => {
        ExtensionRow {
            number: $num,
            k: $k,
            source_case: $sc,
            source_labels: $sl,
            source_level: $slev,
            source_signature: $ss,
            target_case: $tc,
            target_labels: $tl,
            target_level: $tlev,
            target_signature: $ts,
            index: $idx,
        }
    };
}

static EXTENSION_ROWS: [ExtensionRow; 16] = [
    row!(1, 1, "4.2", &["B_00", "B_01"], 1, [4, 8, 8] => "4.6", &["A_0", "A_1"], 1, [2, 8, 8], 2),
    row!(2, 2, "4.2", &["A_0", "A_1"], 1, [4, 8, 8] => "4.4", &["A_0", "A_1"], 2, [2, 8, 4], 4),
    row!(3, 2, "4.2", &["A_0", "A_1"], 1, [4, 8, 8] => "4.6", &["B_00", "B_01"], 2, [2, 8, 8], 2),
    row!(4, 1, "4.3", &["A_0", "A_1"], 1, [4, 4, 4] => "4.4", &["B_00", "B_01"], 2, [2, 4, 8], 2),
    row!(5, 2, "4.3", &["B_00", "B_01"], 2, [4, 4, 4] => "4.4", &["A_0", "A_1"], 2, [2, 4, 8], 2),
    row!(6, 1, "4.6", &["A_0", "A_1"], 1, [2, 8, 8] => "4.4", &["B_00", "B_01"], 2, [2, 8, 4], 2),
    row!(7, 2, "4.6", &["B_00", "B_01"], 2, [2, 8, 8] => "4.4", &["A_0", "A_1"], 2, [2, 8, 4], 2),
    row!(8, 2, "6.4", &["D_00"], 2, [2, 6, 12] => "6.3", &["C_0"], 2, [2, 3, 12], 3),
    row!(9, 6, "6.4", &["C_0"], 2, [2, 6, 12] => "6.3", &["D_00"], 6, [2, 3, 12], 3),
    row!(10, 6, "6.7", &["D_00"], 3, [4, 3, 12] => "6.3", &["D_00"], 6, [2, 3, 12], 4),
    row!(11, 2, "6.7", &["C_0"], 1, [4, 3, 12] => "6.3", &["C_0"], 2, [2, 3, 12], 4),
    row!(12, 2, "3.2", &["E_0"], 2, [6, 3, 3] => "6.3", &["C_0"], 2, [2, 3, 12], 2),
    row!(13, 6, "3.2", &["F_00"], 6, [6, 3, 3] => "6.3", &["D_00"], 6, [2, 3, 12], 2),
    row!(14, 3, "3.3", &["F_00"], 3, [3, 6, 6] => "6.2", &["D_00"], 3, [2, 6, 6], 2),
    row!(15, 1, "3.3", &["E_0"], 1, [3, 6, 6] => "6.2", &["C_0"], 1, [2, 6, 6], 2),
    row!(16, 2, "3.4", &["F_00"], 2, [6, 6, 6] => "3.2", &["E_0"], 2, [6, 3, 3], 3),
];

pub fn extension_rows() -> &'static [ExtensionRow] {
    &EXTENSION_ROWS
}

/// Case, group and level of a concrete action.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ActionRef {
    pub case: String,
    pub family: Family,
    pub variant: Variant,
    pub n: u32,
}

impl ActionRef {
    pub fn group_label(&self) -> GroupLabel {
        GroupLabel::new(self.family, self.variant)
    }

    pub fn spec(&self) -> Result<GroupSpec> {
        find_case(&self.case)?.spec(self.group_label(), self.n, false)
    }

    pub fn signature(&self) -> Result<TriangularSignature> {
        Ok(find_case(&self.case)?.signature())
    }

    pub fn instantiate(&self) -> Result<TriangularAction> {
        TriangularAction::from_labels(&self.case, self.group_label(), self.n)
    }
}

impl fmt::Display for ActionRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.case, self.group_label().with_n(self.n))
    }
}

/// A step along the extension table, possibly continued until a full action is reached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extension {
    pub row: usize,
    pub target: ActionRef,
    pub index: u32,
    pub target_full: bool,
    /// `index` equals the ratio of the two signature areas.
    pub index_matches_area: bool,
    /// `|G′| = index · |G|`.
    pub order_ratio_matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub then: Option<Box<Extension>>,
}

impl Extension {
    /// The full action at the end of the chain, if the chain reaches one.
    pub fn full_target(&self) -> Option<(&ActionRef, u32)> {
        let mut cur = self;
        let mut idx = self.index;
        while let Some(next) = &cur.then {
            cur = next;
            idx *= cur.index;
        }
        cur.target_full.then_some((&cur.target, idx))
    }

    pub fn consistent(&self) -> bool {
        self.index_matches_area
            && self.order_ratio_matches
            && self.then.as_ref().map_or(true, |n| n.consistent())
    }
}

/// Outcome of re-validating an instantiated action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub smooth: bool,
    pub generating: bool,
    pub symmetric: bool,
    pub genus: Option<u64>,
}

#[derive(Debug)]
pub struct ClassifiedAction {
    pub action: TriangularAction,
    pub reference: ActionRef,
    pub full: bool,
    /// Admitted by the working catalog.
    pub cataloged: bool,
    /// Admitted by the catalog cells as transcribed, before corrections.
    pub transcribed: bool,
    pub validation: Validation,
    pub extension: Option<Extension>,
}

impl ClassifiedAction {
    pub fn is_valid(&self, g: u64) -> bool {
        let v = self.validation;
        v.smooth && v.generating && v.symmetric && v.genus == Some(g)
    }

    pub fn record(&self) -> ActionRecord {
        ActionRecord {
            case: self.reference.case.clone(),
            family: self.reference.family,
            variant: self.reference.variant.label(self.reference.family),
            n: self.reference.n,
            signature: self.action.signature(),
            full: self.full,
            extension: self.extension.clone(),
        }
    }
}

/// Serializable summary of a classified action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionRecord {
    pub case: String,
    pub family: Family,
    pub variant: String,
    pub n: u32,
    pub signature: TriangularSignature,
    pub full: bool,
    pub extension: Option<Extension>,
}

fn resolve(case: &str, label: &str, level: u32, a: u32) -> Result<ActionRef> {
    let gl = GroupLabel::parse(label)?;
    Ok(ActionRef {
        case: case.to_string(),
        family: gl.family,
        variant: gl.variant,
        n: level * a,
    })
}

/// Templated references for a decomposition, in listing order, with fullness.
pub fn action_refs(d: GenusDecomposition) -> Result<Vec<(ActionRef, bool)>> {
    let st = statement_for(d);
    let mut out = Vec::new();
    for tpl in st.active(d.a) {
        for l in tpl.labels {
            out.push((resolve(tpl.case, l, tpl.level, d.a)?, tpl.full));
        }
    }
    Ok(out)
}

fn family_of(label: &str) -> Family {
    GroupLabel::parse(label).expect("static label").family
}

/// Rows of the extension table that apply to `source` at genus `k·a² + 1`.
pub fn rows_for(source: &ActionRef, d: GenusDecomposition) -> Vec<&'static ExtensionRow> {
    EXTENSION_ROWS
        .iter()
        .filter(|r| {
            r.k == d.k
                && r.source_case == source.case
                && family_of(r.source_labels[0]) == source.family
                && r.source_level * d.a == source.n
        })
        .collect()
}

fn extend_along(
    row: &ExtensionRow,
    source: &ActionRef,
    d: GenusDecomposition,
    depth: usize,
) -> Result<Option<Extension>> {
    let st = statement_for(d);
    let Some(src_tpl) = st.active(d.a).find(|t| {
        t.case == source.case
            && t.level * d.a == source.n
            && family_of(t.labels[0]) == source.family
    }) else {
        return Ok(None);
    };
    let pos = src_tpl
        .labels
        .iter()
        .position(|l| GroupLabel::parse(l).map(|g| g.variant) == Ok(source.variant))
        .unwrap_or(0);
    let tgt_family = family_of(row.target_labels[0]);
    let Some(tgt_tpl) = st.active(d.a).find(|t| {
        t.case == row.target_case
            && t.level == row.target_level
            && family_of(t.labels[0]) == tgt_family
    }) else {
        return Ok(None);
    };
    let label = tgt_tpl.labels[pos.min(tgt_tpl.labels.len() - 1)];
    let target = resolve(tgt_tpl.case, label, tgt_tpl.level, d.a)?;
    let (ss, ts) = (source.signature()?, target.signature()?);
    let ratio = ss.area() / ts.area();
    let (so, to) = (source.spec()?.order(), target.spec()?.order());
    let then = if tgt_tpl.full || depth > 4 {
        None
    } else {
        extension_of_ref(&target, d, depth + 1)?.map(Box::new)
    };
    Ok(Some(Extension {
        row: row.number,
        target,
        index: row.index,
        target_full: tgt_tpl.full,
        index_matches_area: ratio == Rational::from_integer(row.index as i64),
        order_ratio_matches: to == so * row.index as u64,
        then,
    }))
}

fn extension_of_ref(
    source: &ActionRef,
    d: GenusDecomposition,
    depth: usize,
) -> Result<Option<Extension>> {
    let mut best: Option<Extension> = None;
    for row in rows_for(source, d) {
        if let Some(e) = extend_along(row, source, d, depth)? {
            let better = match &best {
                None => true,
                Some(b) => e.target_full && !b.target_full,
            };
            if better {
                best = Some(e);
            }
        }
    }
    Ok(best)
}

/// The extension of a (non-full) action at genus `k·a² + 1`: the table row for it,
/// preferring one whose target is full, continued along further rows until a full
/// action is reached.
pub fn extension_of(source: &ActionRef, d: GenusDecomposition) -> Result<Option<Extension>> {
    extension_of_ref(source, d, 0)
}

/// Whether `r` is listed at its genus and, if so, whether it is listed as full.
pub fn listing_of(r: &ActionRef) -> Result<Option<bool>> {
    let order = r.spec()?.order();
    let Ok(g) = crate::signature::genus_of_kernel(&r.signature()?, order) else {
        return Ok(None);
    };
    let Some(d) = genus_decomposition(g).unwrap_or(None) else {
        return Ok(None);
    };
    Ok(action_refs(d)?
        .into_iter()
        .find(|(x, _)| x == r)
        .map(|(_, full)| full))
}

/// All triangular symmetric actions at genus `g`, instantiated and re-validated.
/// Empty when `g − 1` has no decomposition.
pub fn symmetric_actions(g: u64) -> Result<Vec<ClassifiedAction>> {
    let Some(d) = genus_decomposition(g)? else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for (reference, full) in action_refs(d)? {
        let action = reference.instantiate()?;
        let validation = Validation {
            smooth: action.is_smooth(),
            generating: action.is_generating(),
            symmetric: action.is_symmetric(),
            genus: action.genus().ok(),
        };
        let label = reference.group_label();
        let transcribed = transcribed_catalog()
            .iter()
            .find(|c| c.label == reference.case)
            .is_some_and(|c| c.admits(label, reference.n));
        let extension = if full {
            None
        } else {
            extension_of(&reference, d)?
        };
        out.push(ClassifiedAction {
            cataloged: action.is_cataloged(),
            action,
            reference,
            full,
            transcribed,
            validation,
            extension,
        });
    }
    Ok(out)
}

/// Number of full symmetric actions at genus `g`, read off the templates.
pub fn symmetric_full_count(g: u64) -> Result<usize> {
    Ok(match genus_decomposition(g)? {
        Some(d) => statement_for(d).full_count(d.a),
        None => 0,
    })
}

/// A signature of a full action with the ring its reduced group lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusSignature {
    pub periods: [u32; 3],
    pub ring: Ring,
    /// The ratio `nm : (g − 1)` as printed, when one is printed for it.
    pub printed_ratio: Option<(u32, u32)>,
}

/// The seven signatures of full actions. The printed list of ratios has six entries;
/// the one for `[2, 3, 12]` is missing.
pub const CENSUS_SIGNATURES: [CensusSignature; 7] = [
    CensusSignature {
        periods: [2, 4, 8],
        ring: Ring::Gauss,
        printed_ratio: Some((2, 1)),
    },
    CensusSignature {
        periods: [4, 4, 8],
        ring: Ring::Gauss,
        printed_ratio: Some((2, 3)),
    },
    CensusSignature {
        periods: [2, 6, 6],
        ring: Ring::Eisenstein,
        printed_ratio: Some((1, 1)),
    },
    CensusSignature {
        periods: [2, 3, 12],
        ring: Ring::Eisenstein,
        printed_ratio: None,
    },
    CensusSignature {
        periods: [4, 3, 6],
        ring: Ring::Eisenstein,
        printed_ratio: Some((2, 3)),
    },
    CensusSignature {
        periods: [4, 6, 6],
        ring: Ring::Eisenstein,
        printed_ratio: Some((2, 5)),
    },
    CensusSignature {
        periods: [4, 6, 12],
        ring: Ring::Eisenstein,
        printed_ratio: Some((1, 3)),
    },
];

impl CensusSignature {
    pub fn signature(&self) -> TriangularSignature {
        TriangularSignature::new(self.periods).expect("hyperbolic")
    }

    /// `nm / (g − 1)` from Riemann–Hurwitz: `2g − 2 = |G|·area` with `|G| = 2t·nm`.
    pub fn ratio(&self) -> Rational {
        let t = self.ring.twist() as i64;
        Rational::new(1, t) / self.signature().area()
    }

    pub fn ratio_matches_printed(&self) -> Option<bool> {
        self.printed_ratio
            .map(|(p, q)| Rational::new(p as i64, q as i64) == self.ratio())
    }
}

/// Possible reduced-group types `(Z_m ⊕ Z_n) ⋊ Z_t` for one signature at one genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedTypeCensus {
    pub signature: TriangularSignature,
    pub nm: Option<u64>,
    /// `(m, n)` with `m | n`.
    pub types: Vec<(u64, u64)>,
    pub count: usize,
    pub printed_ratio: Option<(u32, u32)>,
    pub ratio_matches_printed: Option<bool>,
}

/// Lower bound on the number of exceptional points at genus `g`, per full signature.
pub fn exceptional_census(g: u64) -> Result<Vec<ReducedTypeCensus>> {
    if g <= 5 {
        return Err(Error::GenusTooSmall(g));
    }
    Ok(CENSUS_SIGNATURES
        .iter()
        .map(|cs| {
            let nm = cs.ratio() * Rational::from_integer((g - 1) as i64);
            let nm = nm.is_integer().then(|| nm.to_integer().to_u64()).flatten();
            let types: Vec<(u64, u64)> = nm
                .map(|v| ideal_types(v, cs.ring))
                .unwrap_or_default()
                .into_iter()
                .map(|AbelianInvariants { d1, d2 }| (d1, d2))
                .collect();
            ReducedTypeCensus {
                signature: cs.signature(),
                nm,
                count: types.len(),
                types,
                printed_ratio: cs.printed_ratio,
                ratio_matches_printed: cs.ratio_matches_printed(),
            }
        })
        .collect())
}

/// Census line in the per-genus record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub signature: TriangularSignature,
    pub nm: Option<u64>,
    pub count: usize,
}

/// Everything known at one genus, in the machine-readable record shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusRecord {
    pub genus: u64,
    pub k: Option<u32>,
    pub a: Option<u32>,
    pub actions: Vec<ActionRecord>,
    pub full_count: usize,
    pub census: Vec<CensusEntry>,
}

pub fn genus_record(g: u64) -> Result<GenusRecord> {
    let d = genus_decomposition(g)?;
    let actions = symmetric_actions(g)?;
    for ca in &actions {
        if !ca.is_valid(g) {
            return Err(Error::Invalid(
                ca.action.label(),
                format!("{:?}", ca.validation),
            ));
        }
    }
    let census = exceptional_census(g)?
        .into_iter()
        .map(|c| CensusEntry {
            signature: c.signature,
            nm: c.nm,
            count: c.count,
        })
        .collect();
    Ok(GenusRecord {
        genus: g,
        k: d.map(|d| d.k),
        a: d.map(|d| d.a),
        full_count: actions.iter().filter(|c| c.full).count(),
        actions: actions.iter().map(ClassifiedAction::record).collect(),
        census,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

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
        assert!(matches!(
            genus_decomposition(5),
            Err(Error::GenusTooSmall(5))
        ));
    }

    #[test]
    fn recomputed_ratios() {
        let r: Vec<Rational> = CENSUS_SIGNATURES.iter().map(|c| c.ratio()).collect();
        assert_eq!(r[0], Rational::new(2, 1));
        assert_eq!(r[3], Rational::new(2, 1));
        assert_eq!(r[6], Rational::new(1, 3));
        assert!(CENSUS_SIGNATURES
            .iter()
            .all(|c| c.ratio_matches_printed() != Some(false)));
    }

    #[test]
    fn template_signatures_agree_with_rows() {
        for r in extension_rows() {
            let s = find_case(r.source_case).unwrap().signature();
            let t = find_case(r.target_case).unwrap().signature();
            assert!(
                s.same_up_to_permutation(&TriangularSignature::new(r.source_signature).unwrap())
            );
            assert!(
                t.same_up_to_permutation(&TriangularSignature::new(r.target_signature).unwrap())
            );
        }
    }
}
