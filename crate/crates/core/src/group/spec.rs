use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::word::Word;
use crate::error::{parse_err, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
}

/// Base triangle of the action a family belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "2,4,4")]
    K244,
    #[serde(rename = "2,3,6")]
    K236,
    #[serde(rename = "3,3,3")]
    K333,
}

impl Kind {
    pub fn families(self) -> [Family; 2] {
        match self {
            Kind::K244 => [Family::A, Family::B],
            Kind::K236 => [Family::C, Family::D],
            Kind::K333 => [Family::E, Family::F],
        }
    }
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
    ];

    pub fn kind(self) -> Kind {
        match self {
            Family::A | Family::B => Kind::K244,
            Family::C | Family::D => Kind::K236,
            Family::E | Family::F => Kind::K333,
        }
    }

    /// Order of `c` modulo the translation subgroup.
    pub fn twist(self) -> u32 {
        match self.kind() {
            Kind::K244 => 4,
            Kind::K236 => 6,
            Kind::K333 => 3,
        }
    }

    /// B, D and F are written in the generators `v, w` and carry two variant bits.
    pub fn uses_vw(self) -> bool {
        matches!(self, Family::B | Family::D | Family::F)
    }

    /// The index of `⟨v, w⟩` style lattices: 1, 2 or 3.
    pub fn lattice_index(self) -> u32 {
        match self {
            Family::A | Family::C | Family::E => 1,
            Family::B => 2,
            Family::D | Family::F => 3,
        }
    }

    pub fn supports_tau(self) -> bool {
        !matches!(self, Family::E | Family::F)
    }

    pub fn x_name(self) -> &'static str {
        if self.uses_vw() {
            "v"
        } else {
            "x"
        }
    }

    pub fn y_name(self) -> &'static str {
        if self.uses_vw() {
            "w"
        } else {
            "y"
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            _ => return Err(parse_err("family", s)),
        })
    }
}

/// The four parameter bits. Which of them are free depends on the family:
/// `α, γ, μ` for A/B, `α, β, μ` for C/D (with `γ = α + μ`), `β, γ, μ` for E/F.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub alpha: u8,
    pub beta: u8,
    pub gamma: u8,
    pub mu: u8,
}

impl Params {
    pub fn k244(alpha: u8, gamma: u8, mu: u8) -> Self {
        Params {
            alpha,
            beta: 0,
            gamma,
            mu,
        }
    }

    pub fn k236(alpha: u8, beta: u8, mu: u8) -> Self {
        Params {
            alpha,
            beta,
            gamma: (alpha + mu) % 2,
            mu,
        }
    }

    pub fn k333(beta: u8, gamma: u8, mu: u8) -> Self {
        Params {
            alpha: 0,
            beta,
            gamma,
            mu,
        }
    }

    /// Every admissible parameter choice for a kind.
    pub fn all(kind: Kind) -> Vec<Params> {
        let mut v = Vec::new();
        for i in 0..8u8 {
            let (a, b, c) = (i & 1, (i >> 1) & 1, (i >> 2) & 1);
            v.push(match kind {
                Kind::K244 => Params::k244(a, b, c),
                Kind::K236 => Params::k236(a, b, c),
                Kind::K333 => Params::k333(a, b, c),
            });
        }
        v
    }

    fn check(&self, kind: Kind) -> Result<()> {
        let bits = [self.alpha, self.beta, self.gamma, self.mu];
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidSpec("parameter bits must be 0 or 1".into()));
        }
        let ok = match kind {
            Kind::K244 => self.beta == 0,
            Kind::K236 => self.gamma == (self.alpha + self.mu) % 2,
            Kind::K333 => self.alpha == 0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSpec(format!(
                "parameters {self:?} do not fit the {kind:?} families"
            )))
        }
    }
}

/// Variant bits: `ε` alone for A/C/E, `(ε, δ)` for B and `(ε, ε′)` for D/F.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct Variant {
    pub eps: u8,
    pub eps2: u8,
}

impl Variant {
    pub fn single(eps: u8) -> Self {
        Variant { eps, eps2: 0 }
    }

    pub fn pair(eps: u8, eps2: u8) -> Self {
        Variant { eps, eps2 }
    }

    pub fn all(family: Family) -> Vec<Variant> {
        if family.uses_vw() {
            vec![
                Variant::pair(0, 0),
                Variant::pair(0, 1),
                Variant::pair(1, 0),
                Variant::pair(1, 1),
            ]
        } else {
            vec![Variant::single(0), Variant::single(1)]
        }
    }

    pub fn label(&self, family: Family) -> String {
        if family.uses_vw() {
            format!("{}{}", self.eps, self.eps2)
        } else {
            format!("{}", self.eps)
        }
    }

    pub fn parse(family: Family, s: &str) -> Result<Self> {
        let bits: Vec<u8> = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(parse_err("variant", s)),
            })
            .collect::<Result<_>>()?;
        match (family.uses_vw(), bits.as_slice()) {
            (false, [e]) => Ok(Variant::single(*e)),
            (true, [e, f]) => Ok(Variant::pair(*e, *f)),
            _ => Err(parse_err("variant", s)),
        }
    }
}

/// Complete description of one finite group of the six families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub n: u32,
    pub params: Params,
    pub variant: Variant,
    pub with_tau: bool,
}

impl GroupSpec {
    pub fn new(
        family: Family,
        n: u32,
        params: Params,
        variant: Variant,
        with_tau: bool,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("n must be positive".into()));
        }
        if n % family.lattice_index() != 0 {
            return Err(Error::InvalidSpec(format!(
                "family {family} needs n divisible by {}",
                family.lattice_index()
            )));
        }
        if with_tau && !family.supports_tau() {
            return Err(Error::FamilyUnsupported(family));
        }
        if variant.eps > 1 || variant.eps2 > 1 || (!family.uses_vw() && variant.eps2 != 0) {
            return Err(Error::InvalidSpec(format!("bad variant {variant:?}")));
        }
        params.check(family.kind())?;
        Ok(GroupSpec {
            family,
            n,
            params,
            variant,
            with_tau,
        })
    }

    pub fn with_tau(mut self, on: bool) -> Result<Self> {
        if on && !self.family.supports_tau() {
            return Err(Error::FamilyUnsupported(self.family));
        }
        self.with_tau = on;
        Ok(self)
    }

    /// `(d, e, t)`: orders of `X`, `Y` modulo `ρ`, and of `c` modulo the translations.
    pub fn dims(&self) -> (u32, u32, u32) {
        (
            self.n,
            self.n / self.family.lattice_index(),
            self.family.twist(),
        )
    }

    /// Closed-form order of the group.
    pub fn order(&self) -> u64 {
        let (d, e, t) = self.dims();
        d as u64 * e as u64 * t as u64 * 2 * if self.with_tau { 2 } else { 1 }
    }

    /// Short label such as `B^8_00`.
    pub fn label(&self) -> String {
        format!(
            "{}^{}_{}",
            self.family,
            self.n,
            self.variant.label(self.family)
        )
    }

    /// Defining relators of the presentation, in the letters `x, y` (or `v, w`), `c`,
    /// `rho` and, with the extension, `tau`.
    pub fn relators(&self) -> Vec<Word> {
        let Params {
            alpha,
            beta,
            gamma,
            mu,
        } = self.params;
        let (a, b, g, m) = (alpha as u32, beta as u32, gamma as u32, mu as u32);
        let n = self.n;
        let eps = self.variant.eps as u32;
        let eps2 = self.variant.eps2 as u32;
        let mut rels: Vec<String> = vec!["rho^2".into()];
        match self.family {
            Family::A => rels.extend([
                format!("x^{n} rho^{eps}"),
                format!("c^4 rho^{m}"),
                format!("x y x^-1 y^-1 rho^{g}"),
                "c y c^-1 x^-1".into(),
                format!("c x c^-1 y rho^{a}"),
            ]),
            Family::B => rels.extend([
                format!("c^4 rho^{m}"),
                format!("v^{n} rho^{eps}"),
                format!("w^{} rho^{eps2}", n / 2),
                format!("c v c^-1 w v rho^{a}"),
                format!("c w c^-1 v^-2 w^-1 rho^{}", a + g),
                format!("v w v^-1 w^-1 rho^{g}"),
            ]),
            Family::C => rels.extend([
                format!("y^{n} rho^{eps}"),
                format!("c^6 rho^{m}"),
                format!("c x c^-1 y^-1 rho^{a}"),
                format!("c y c^-1 y^-1 x rho^{b}"),
                format!("x y x^-1 y^-1 rho^{}", a + m),
            ]),
            Family::D => rels.extend([
                format!("c^6 rho^{m}"),
                format!("v^{n} rho^{eps}"),
                format!("w^{} rho^{eps2}", n / 3),
                format!("c v c^-1 w v^-2 rho^{}", a + m + b),
                format!("c w c^-1 w v^-3 rho^{}", b + m),
                format!("v w v^-1 w^-1 rho^{}", a + m),
            ]),
            Family::E => rels.extend([
                format!("c^3 rho^{m}"),
                format!("x^{n} rho^{eps}"),
                "c x c^-1 y^-1 x".into(),
                format!("c y c^-1 x rho^{b}"),
                format!("x y x^-1 y^-1 rho^{g}"),
            ]),
            Family::F => rels.extend([
                format!("c^3 rho^{m}"),
                format!("v^{n} rho^{eps}"),
                format!("w^{} rho^{eps2}", n / 3),
                format!("c v c^-1 w v^-1 rho^{b}"),
                format!("c w c^-1 w^2 v^-3 rho^{b}"),
                format!("v w v^-1 w^-1 rho^{g}"),
            ]),
        }
        let (xn, yn) = (self.family.x_name(), self.family.y_name());
        for gname in [xn, yn, "c"] {
            rels.push(format!("rho {gname} rho^-1 {gname}^-1"));
        }
        if self.with_tau {
            rels.push("tau^2".into());
            rels.push("tau rho tau^-1 rho^-1".into());
            for (gname, image) in self.tau_images() {
                rels.push(format!("tau {gname} tau^-1 ({image})^-1"));
            }
        }
        rels.iter()
            .map(|r| Word::parse(self.family, r).expect("relator syntax"))
            .collect()
    }

    /// Images of the generators under conjugation by `τ`, as words.
    ///
    /// For D the `w` entry carries `ρ^{β+γ}`; with `ρ^β` alone conjugation by `τ` is not
    /// an automorphism whenever `γ = 1`.
    pub fn tau_images(&self) -> Vec<(&'static str, String)> {
        let Params {
            alpha,
            beta,
            gamma,
            mu,
        } = self.params;
        let (a, b, g, m) = (alpha as u32, beta as u32, gamma as u32, mu as u32);
        match self.family {
            Family::A => vec![
                ("c", "c^-1".into()),
                ("x", format!("x rho^{a}")),
                ("y", "y^-1".into()),
            ],
            Family::B => vec![
                ("c", "c^-1".into()),
                ("w", format!("v^-2 w^-1 rho^{}", a + g)),
                ("v", format!("v rho^{a}")),
            ],
            Family::C => vec![
                ("c", format!("y^-1 c^-1 rho^{}", a + b)),
                ("x", "x^-1".into()),
                ("y", "c y c^-1".into()),
            ],
            Family::D => vec![
                ("c", format!("v^-1 c^-1 rho^{}", a + b)),
                ("w", format!("v^3 w^-2 rho^{}", b + g)),
                ("v", format!("v^2 w^-1 rho^{}", a + b + m)),
            ],
            Family::E | Family::F => Vec::new(),
        }
    }

    /// Same as [`GroupSpec::tau_images`] but with the D entry for `w` carrying `ρ^β`.
    pub fn tau_images_uncorrected(&self) -> Vec<(&'static str, String)> {
        let mut v = self.tau_images();
        if self.family == Family::D {
            v[1].1 = format!("v^3 w^-2 rho^{}", self.params.beta);
        }
        v
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())?;
        if self.with_tau {
            write!(f, "+tau")?;
        }
        Ok(())
    }
}
