//! Catalog of triangular symmetric actions of the families A–F.
//!
//! Each case fixes the parameter bits, hence the signature, and lists which groups act
//! for each residue class of `n`. Two layers are kept: the cells exactly as transcribed,
//! and the working catalog with the [`corrections`] applied.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Element, Family, Group, GroupSpec, Homomorphism, Kind, Params, Variant, Word};
use crate::signature::{genus_of_kernel, TriangularSignature};

/// A family together with its variant bits, e.g. `B_01`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupLabel {
    pub family: Family,
    pub variant: Variant,
}

impl GroupLabel {
    pub fn new(family: Family, variant: Variant) -> Self {
        GroupLabel { family, variant }
    }

    /// Parses `A_0`, `B_01` and so on.
    pub fn parse(s: &str) -> Result<Self> {
        let (f, v) = s
            .split_once('_')
            .ok_or_else(|| crate::error::parse_err("group label", s))?;
        let family: Family = f.parse()?;
        Ok(GroupLabel {
            family,
            variant: Variant::parse(family, v)?,
        })
    }

    pub fn with_n(&self, n: u32) -> String {
        format!("{}^{}_{}", self.family, n, self.variant.label(self.family))
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.variant.label(self.family))
    }
}

/// The groups acting for `n ≡ r (mod modulus)`, `r ∈ residues`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Column {
    pub modulus: u32,
    pub residues: Vec<u32>,
    pub groups: Vec<GroupLabel>,
}

impl Column {
    pub fn matches(&self, n: u32) -> bool {
        self.residues.contains(&(n % self.modulus))
    }
}

/// One case of the catalog, labelled as in the classical enumeration (`4.2`, `6.8`, ...).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionCase {
    pub label: String,
    pub kind: Kind,
    pub params: Params,
    pub columns: Vec<Column>,
}

impl ActionCase {
    /// Signature from the parameter bits, each expression reduced mod 2 before adding 1.
    pub fn signature(&self) -> TriangularSignature {
        self.try_signature()
            .expect("catalog signatures are hyperbolic")
    }

    /// As [`signature`](Self::signature), but reports bad parameters (from a loaded
    /// fixture, say) instead of panicking.
    pub fn try_signature(&self) -> Result<TriangularSignature> {
        let Params {
            alpha,
            beta,
            gamma,
            mu,
        } = self.params;
        if [alpha, beta, gamma, mu].iter().any(|&x| x > 1) {
            return Err(Error::InvalidSpec(format!(
                "{}: parameter bits must be 0 or 1",
                self.label
            )));
        }
        let (a, b, g, m) = (alpha as u32, beta as u32, gamma as u32, mu as u32);
        let periods = match self.kind {
            Kind::K244 => [2 * ((a + m) % 2 + 1), 4 * (m + 1), 4 * ((g + m) % 2 + 1)],
            Kind::K236 => [2 * (a + 1), 3 * (b + 1), 6 * (m + 1)],
            Kind::K333 => [3 * (m + 1), 3 * (b + 1), 3 * ((g + b + m) % 2 + 1)],
        };
        TriangularSignature::new(periods)
    }

    pub fn groups_at(&self, n: u32) -> Vec<GroupLabel> {
        self.columns
            .iter()
            .filter(|c| c.matches(n))
            .flat_map(|c| c.groups.iter().copied())
            .collect()
    }

    pub fn admits(&self, label: GroupLabel, n: u32) -> bool {
        n % label.family.lattice_index() == 0 && self.groups_at(n).contains(&label)
    }

    /// Every group label appearing anywhere in the case.
    pub fn labels(&self) -> Vec<GroupLabel> {
        let mut v: Vec<GroupLabel> = self
            .columns
            .iter()
            .flat_map(|c| c.groups.iter().copied())
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Admissible `n` for `label` in increasing order, starting at 1.
    pub fn admissible_n(&self, label: GroupLabel) -> impl Iterator<Item = u32> + '_ {
        (1u32..).filter(move |&n| self.admits(label, n))
    }

    pub fn spec(&self, label: GroupLabel, n: u32, with_tau: bool) -> Result<GroupSpec> {
        if label.family.kind() != self.kind {
            return Err(Error::SpecMismatch);
        }
        GroupSpec::new(label.family, n, self.params, label.variant, with_tau)
    }
}

fn labels(list: &str) -> Vec<GroupLabel> {
    list.split_whitespace()
        .map(|s| GroupLabel::parse(s).expect("catalog label"))
        .collect()
}

fn col(modulus: u32, residues: &[u32], groups: &str) -> Column {
    Column {
        modulus,
        residues: residues.to_vec(),
        groups: labels(groups),
    }
}

fn case(label: &str, kind: Kind, params: Params, columns: Vec<Column>) -> ActionCase {
    ActionCase {
        label: label.into(),
        kind,
        params,
        columns: columns
            .into_iter()
            .filter(|c| !c.groups.is_empty())
            .collect(),
    }
}

const M0: &[u32] = &[0];
const M1: &[u32] = &[1, 11];
const M2: &[u32] = &[2, 10];
const M3: &[u32] = &[3, 9];
const M4: &[u32] = &[4, 8];
const M5: &[u32] = &[5, 7];
const M6: &[u32] = &[6];

fn mod12(label: &str, kind: Kind, params: Params, cells: [&str; 7]) -> ActionCase {
    let res = [M0, M1, M2, M3, M4, M5, M6];
    case(
        label,
        kind,
        params,
        res.iter().zip(cells).map(|(r, g)| col(12, r, g)).collect(),
    )
}

fn build_transcribed() -> Vec<ActionCase> {
    let k244 = |label: &str, a, g, m, c0: &str, c2: &str, c1: &str| {
        case(
            label,
            Kind::K244,
            Params::k244(a, g, m),
            vec![col(4, &[0], c0), col(4, &[2], c2), col(2, &[1], c1)],
        )
    };
    let all4 = "A_0 A_1 B_00 B_01";
    let sw = "A_0 A_1 B_10 B_11";
    let k236 = |label: &str, a, b, m, cells| mod12(label, Kind::K236, Params::k236(a, b, m), cells);
    let k333 = |label: &str, b, g, m, cells| mod12(label, Kind::K333, Params::k333(b, g, m), cells);
    let even = |c0: &'static str, c6: &'static str| -> [&'static str; 7] {
        [c0, "", "C_1", "", "C_0", "", c6]
    };
    vec![
        k244("4.2", 0, 0, 1, all4, all4, "A_0 A_1"),
        k244("4.3", 1, 0, 0, all4, sw, ""),
        k244("4.4", 0, 1, 0, all4, "", ""),
        k244("4.5", 1, 1, 0, all4, "", ""),
        k244("4.6", 1, 0, 1, all4, sw, ""),
        k236(
            "6.2",
            0,
            1,
            0,
            [
                "C_0 D_00", "C_1", "C_0", "C_1 D_10", "C_0", "C_1", "C_0 D_00",
            ],
        ),
        k236("6.3", 0, 0, 1, even("C_0 D_00", "C_1 D_11")),
        k236("6.4", 0, 1, 1, even("C_0 D_00", "C_1 D_11")),
        k236("6.5", 1, 0, 0, even("C_0 D_00", "C_1 D_11")),
        k236("6.6", 1, 1, 0, even("C_0 D_00", "C_1 D_11")),
        k236(
            "6.7",
            1,
            0,
            1,
            [
                "C_0 D_00", "C_1", "C_0", "C_1 D_11", "C_0", "C_1", "C_0 D_00",
            ],
        ),
        k236(
            "6.8",
            1,
            1,
            1,
            [
                "C_0 D_00", "C_0", "C_0", "C_0 D_01", "C_0", "C_0", "C_0 D_00",
            ],
        ),
        k333(
            "3.2",
            0,
            1,
            0,
            ["E_0 F_00", "", "E_1", "", "E_0", "", "E_1 F_11"],
        ),
        k333(
            "3.3",
            1,
            0,
            1,
            [
                "E_0 F_00", "E_0", "E_0", "E_0 F_01", "E_0", "E_0", "E_0 F_00",
            ],
        ),
        k333(
            "3.4",
            1,
            1,
            1,
            ["E_0 F_00", "", "E_1", "", "E_0", "", "E_1 F_11"],
        ),
    ]
}

/// A change from the transcribed cells to the working catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Correction {
    pub case: String,
    pub cells: String,
    pub transcribed: String,
    pub corrected: String,
    pub reason: String,
}

/// Corrections applied on top of the transcribed catalog.
pub fn corrections() -> Vec<Correction> {
    vec![
        Correction {
            case: "3.3".into(),
            cells: "n odd".into(),
            transcribed: "E_0".into(),
            corrected: "E_1".into(),
            reason:
                "with x^n = 1 and n odd, conjugating by c gives y^n = rho, then x^n = rho^(n+1) \
                     forces rho = 1; E_1 is the consistent group there"
                    .into(),
        },
        Correction {
            case: "4.4, 4.5".into(),
            cells: "n = 2 mod 4".into(),
            transcribed: "(empty)".into(),
            corrected: "A_0 A_1".into(),
            reason: "these A-groups are smooth, symmetric and generating; they carry the \
                     actions with n = 2a, a odd, in the genus classification"
                .into(),
        },
    ]
}

fn build_corrected() -> Vec<ActionCase> {
    let mut cat = build_transcribed();
    for c in cat.iter_mut() {
        match c.label.as_str() {
            "3.3" => {
                for column in c.columns.iter_mut() {
                    if column.residues.iter().all(|r| r % 2 == 1) {
                        for g in column.groups.iter_mut() {
                            if g.family == Family::E {
                                g.variant = Variant::single(1);
                            }
                        }
                    }
                }
            }
            "4.4" | "4.5" => c.columns.insert(1, col(4, &[2], "A_0 A_1")),
            _ => {}
        }
    }
    cat
}

/// The cells exactly as transcribed, including inconsistent ones.
pub fn transcribed_catalog() -> &'static [ActionCase] {
    static CELL: OnceLock<Vec<ActionCase>> = OnceLock::new();
    CELL.get_or_init(build_transcribed)
}

/// The working catalog: transcribed cells with [`corrections`] applied.
pub fn catalog() -> &'static [ActionCase] {
    static CELL: OnceLock<Vec<ActionCase>> = OnceLock::new();
    CELL.get_or_init(build_corrected)
}

pub fn find_case(label: &str) -> Result<&'static ActionCase> {
    catalog()
        .iter()
        .find(|c| c.label == label)
        .ok_or_else(|| crate::error::parse_err("case", label))
}

pub fn signature_of(case_label: &str) -> Result<TriangularSignature> {
    Ok(find_case(case_label)?.signature())
}

/// Words for the images of the three elliptic generators.
pub fn theta_words(family: Family) -> [&'static str; 3] {
    match family {
        Family::A => ["c^-2 x", "c", "y^-1 c"],
        Family::B => ["c^-2 v", "c", "v^-1 w^-1 c"],
        Family::C => ["c^3 x", "c^2 y", "c"],
        Family::D => ["c^3 w v^-1", "c^2 v", "c"],
        Family::E => ["c", "c^-2 x", "x^-1 c"],
        Family::F => ["c", "c^-2 w v^-1", "v w^-1 c"],
    }
}

/// A group of one of the families together with an assignment of the three elliptic
/// generators of a triangular Fuchsian group.
#[derive(Debug)]
pub struct TriangularAction {
    case: ActionCase,
    label: GroupLabel,
    group: Group,
    theta: [Element; 3],
}

impl TriangularAction {
    /// The standard action of `label` at level `n` under `case`, cataloged or not.
    pub fn new(case: &ActionCase, label: GroupLabel, n: u32) -> Result<Self> {
        let spec = case.spec(label, n, false)?;
        let group = Group::new(spec)?;
        let words = theta_words(label.family);
        let mut theta = [Element::IDENTITY; 3];
        for (slot, w) in theta.iter_mut().zip(words) {
            *slot = group.eval(&Word::parse(label.family, w)?)?;
        }
        Ok(TriangularAction {
            case: case.clone(),
            label,
            group,
            theta,
        })
    }

    /// Looks the case up in the working catalog.
    pub fn from_labels(case_label: &str, label: GroupLabel, n: u32) -> Result<Self> {
        Self::new(find_case(case_label)?, label, n)
    }

    /// An arbitrary assignment of images, e.g. to test non-smooth choices.
    pub fn with_images(
        case: &ActionCase,
        label: GroupLabel,
        n: u32,
        images: [Element; 3],
    ) -> Result<Self> {
        let spec = case.spec(label, n, false)?;
        let group = Group::new(spec)?;
        if images.iter().any(|e| !group.contains(e)) {
            return Err(Error::SpecMismatch);
        }
        Ok(TriangularAction {
            case: case.clone(),
            label,
            group,
            theta: images,
        })
    }

    pub fn case(&self) -> &ActionCase {
        &self.case
    }

    pub fn group_label(&self) -> GroupLabel {
        self.label
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn n(&self) -> u32 {
        self.group.spec().n
    }

    pub fn spec(&self) -> GroupSpec {
        *self.group.spec()
    }

    pub fn signature(&self) -> TriangularSignature {
        self.case.signature()
    }

    pub fn theta_images(&self) -> [Element; 3] {
        self.theta
    }

    /// `4.4 B^8_00` style label.
    pub fn label(&self) -> String {
        format!("{} {}", self.case.label, self.label.with_n(self.n()))
    }

    pub fn is_cataloged(&self) -> bool {
        find_case(&self.case.label)
            .map(|c| c.admits(self.label, self.n()))
            .unwrap_or(false)
    }

    /// The images multiply to 1 and have exactly the periods as orders.
    pub fn is_smooth(&self) -> bool {
        if !self.group.is_consistent() {
            return false;
        }
        let g = &self.group;
        let [a, b, c] = self.theta;
        g.mul(g.mul(a, b), c).is_identity()
            && self
                .theta
                .iter()
                .zip(self.signature().periods())
                .all(|(e, m)| g.element_order(*e) == m as u64)
    }

    /// The images generate the group.
    pub fn is_generating(&self) -> bool {
        self.group.is_consistent()
            && self.group.subgroup_order(&self.theta[..2]) as u64 == self.group.order()
    }

    /// Whether `g_i ↦ g_i^{-1}` for `i ∈ pair` extends to an automorphism.
    pub fn inversion_extends(&self, i: usize, j: usize) -> bool {
        let g = &self.group;
        let (a, b) = (self.theta[i], self.theta[j]);
        self.automorphism(&[a, b], &[g.inv(a), g.inv(b)])
    }

    /// Whether `g_i ↦ g_j^{-1}, g_j ↦ g_i^{-1}` extends to an automorphism.
    pub fn swap_extends(&self, i: usize, j: usize) -> bool {
        let g = &self.group;
        let (a, b) = (self.theta[i], self.theta[j]);
        self.automorphism(&[a, b], &[g.inv(b), g.inv(a)])
    }

    fn automorphism(&self, gens: &[Element], images: &[Element]) -> bool {
        if !self.group.is_consistent() {
            return false;
        }
        Homomorphism::extend(&self.group, gens, &self.group, images)
            .map(|h| h.is_isomorphism(&self.group, &self.group))
            .unwrap_or(false)
    }

    /// An orientation-reversing extension exists: either `g1, g2` can both be inverted,
    /// or they can be swapped and inverted.
    pub fn is_symmetric(&self) -> bool {
        self.inversion_extends(0, 1) || self.swap_extends(0, 1)
    }

    pub fn genus(&self) -> Result<u64> {
        if !self.is_smooth() {
            return Err(Error::Invalid(self.label(), "not smooth".into()));
        }
        genus_of_kernel(&self.signature(), self.group.order())
    }
}

pub fn theta_images(action: &TriangularAction) -> [Element; 3] {
    action.theta_images()
}

pub fn is_smooth(action: &TriangularAction) -> bool {
    action.is_smooth()
}

pub fn is_symmetric(action: &TriangularAction) -> bool {
    action.is_symmetric()
}

pub fn genus_of(action: &TriangularAction) -> Result<u64> {
    action.genus()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_signatures() {
        let sig = |c: &str| signature_of(c).unwrap().periods();
        assert_eq!(sig("4.4"), [2, 4, 8]);
        assert_eq!(sig("6.3"), [2, 3, 12]);
        assert_eq!(sig("3.3"), [6, 6, 3]);
        assert_eq!(sig("3.4"), [6, 6, 6]);
    }

    #[test]
    fn corrected_layer_differs_only_where_documented() {
        let t = transcribed_catalog();
        let c = catalog();
        let changed: Vec<&str> = t
            .iter()
            .zip(c)
            .filter(|(a, b)| a != b)
            .map(|(a, _)| a.label.as_str())
            .collect();
        assert_eq!(changed, vec!["4.4", "4.5", "3.3"]);
    }
}
