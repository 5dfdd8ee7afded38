//! NEC and Fuchsian signatures.
//!
//! Areas are normalized: the value returned is the hyperbolic area divided by 2π.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};
use crate::num::Scalar;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    fn alpha(self) -> i64 {
        match self {
            Sign::Plus => 2,
            Sign::Minus => 1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `(g; ±; [m1, ..., mr]; {C1, ..., Ck})`.
///
/// Period cycles compare equal up to cyclic rotation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Signature {
    #[serde(rename = "genus")]
    orbit_genus: u32,
    sign: Sign,
    #[serde(rename = "periods")]
    proper_periods: Vec<u32>,
    #[serde(rename = "cycles")]
    period_cycles: Vec<Vec<u32>>,
}

fn min_rotation(cycle: &[u32]) -> Vec<u32> {
    (0..cycle.len())
        .map(|i| {
            let mut c = cycle.to_vec();
            c.rotate_left(i);
            c
        })
        .min()
        .unwrap_or_default()
}

impl Signature {
    /// Builds a signature after structural validation; hyperbolicity is not required.
    pub fn new(
        orbit_genus: u32,
        sign: Sign,
        proper_periods: Vec<u32>,
        period_cycles: Vec<Vec<u32>>,
    ) -> Result<Self> {
        if let Some(m) = proper_periods.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidSignature(format!("proper period {m} < 2")));
        }
        if let Some(n) = period_cycles.iter().flatten().find(|&&n| n < 2) {
            return Err(Error::InvalidSignature(format!("link period {n} < 2")));
        }
        if sign == Sign::Minus && orbit_genus == 0 {
            return Err(Error::InvalidSignature(
                "a non-orientable quotient needs genus >= 1".into(),
            ));
        }
        Ok(Signature {
            orbit_genus,
            sign,
            proper_periods,
            period_cycles,
        })
    }

    /// Like [`Signature::new`] but also rejects non-positive area.
    pub fn hyperbolic(
        orbit_genus: u32,
        sign: Sign,
        proper_periods: Vec<u32>,
        period_cycles: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let s = Self::new(orbit_genus, sign, proper_periods, period_cycles)?;
        s.area()?;
        Ok(s)
    }

    /// Fuchsian signature `(g; [m1, ..., mr])`.
    pub fn fuchsian(genus: u32, periods: Vec<u32>) -> Result<Self> {
        Self::new(genus, Sign::Plus, periods, Vec::new())
    }

    pub fn orbit_genus(&self) -> u32 {
        self.orbit_genus
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn proper_periods(&self) -> &[u32] {
        &self.proper_periods
    }

    pub fn period_cycles(&self) -> &[Vec<u32>] {
        &self.period_cycles
    }

    pub fn is_fuchsian(&self) -> bool {
        self.sign == Sign::Plus && self.period_cycles.is_empty()
    }

    /// Area in any [`Scalar`], without the hyperbolicity check.
    pub fn area_as<T: Scalar>(&self) -> T {
        let mut total = T::from_fraction(
            self.sign.alpha() * self.orbit_genus as i64 + self.period_cycles.len() as i64 - 2,
            1,
        );
        for &m in &self.proper_periods {
            total = total + T::from_fraction(m as i64 - 1, m as i64);
        }
        for &n in self.period_cycles.iter().flatten() {
            total = total + T::from_fraction(n as i64 - 1, 2 * n as i64);
        }
        total
    }

    /// Exact normalized area; fails with [`Error::NonHyperbolic`] when it is not positive.
    pub fn area(&self) -> Result<Rational> {
        let a: Rational = self.area_as();
        if a <= Rational::zero() {
            return Err(Error::NonHyperbolic(a.to_string()));
        }
        Ok(a)
    }

    /// The canonical Fuchsian subgroup: orientation-preserving half of an NEC group.
    pub fn canonical_fuchsian(&self) -> Result<Signature> {
        if self.is_fuchsian() {
            return Err(Error::AlreadyFuchsian);
        }
        let genus =
            self.sign.alpha() as u32 * self.orbit_genus + self.period_cycles.len() as u32 - 1;
        let mut periods: Vec<u32> = self.proper_periods.iter().flat_map(|&m| [m, m]).collect();
        periods.extend(self.period_cycles.iter().flatten().copied());
        Signature::new(genus, Sign::Plus, periods, Vec::new())
    }

    fn canonical_cycles(&self) -> Vec<Vec<u32>> {
        self.period_cycles.iter().map(|c| min_rotation(c)).collect()
    }
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.orbit_genus == other.orbit_genus
            && self.sign == other.sign
            && self.proper_periods == other.proper_periods
            && self.canonical_cycles() == other.canonical_cycles()
    }
}

impl Eq for Signature {}

impl Hash for Signature {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.orbit_genus.hash(state);
        self.sign.hash(state);
        self.proper_periods.hash(state);
        self.canonical_cycles().hash(state);
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let periods = if self.proper_periods.is_empty() {
            "-".to_string()
        } else {
            join(&self.proper_periods)
        };
        let cycles = if self.period_cycles.is_empty() {
            "-".to_string()
        } else {
            self.period_cycles
                .iter()
                .map(|c| {
                    if c.is_empty() {
                        "(-)".to_string()
                    } else {
                        format!("({})", join(c))
                    }
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "({}; {}; [{}]; {{{}}})",
            self.orbit_genus, self.sign, periods, cycles
        )
    }
}

fn parse_list(s: &str, input: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| parse_err("signature", input)))
        .collect()
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let err = || parse_err("signature", input);
        let body = input
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(err)?;
        let parts: Vec<&str> = body.splitn(4, ';').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(err());
        }
        let genus = parts[0].parse().map_err(|_| err())?;
        let sign = match parts[1] {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            _ => return Err(err()),
        };
        let periods = parse_list(
            parts[2]
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(err)?,
            input,
        )?;
        let cycles_src = parts[3]
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(err)?
            .trim();
        let mut cycles = Vec::new();
        if cycles_src != "-" && !cycles_src.is_empty() {
            for chunk in cycles_src.split(')') {
                let chunk = chunk.trim().trim_start_matches(',').trim();
                if chunk.is_empty() {
                    continue;
                }
                let inner = chunk.strip_prefix('(').ok_or_else(err)?;
                cycles.push(parse_list(inner, input)?);
            }
        }
        Signature::new(genus, sign, periods, cycles)
    }
}

/// Periods `[k, l, m]` of a triangular Fuchsian group, kept in the order given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[u32; 3]", try_from = "[u32; 3]")]
pub struct TriangularSignature([u32; 3]);

impl TriangularSignature {
    pub fn new(periods: [u32; 3]) -> Result<Self> {
        let t = TriangularSignature(periods);
        t.to_signature()?.area()?;
        Ok(t)
    }

    pub fn periods(&self) -> [u32; 3] {
        self.0
    }

    pub fn sorted(&self) -> Self {
        let mut p = self.0;
        p.sort_unstable();
        TriangularSignature(p)
    }

    pub fn same_up_to_permutation(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }

    pub fn to_signature(&self) -> Result<Signature> {
        Signature::fuchsian(0, self.0.to_vec())
    }

    pub fn area(&self) -> Rational {
        // Construction guarantees hyperbolicity.
        self.to_signature()
            .and_then(|s| s.area())
            .expect("triangular signature is hyperbolic")
    }
}

impl From<TriangularSignature> for [u32; 3] {
    fn from(t: TriangularSignature) -> Self {
        t.0
    }
}

impl TryFrom<[u32; 3]> for TriangularSignature {
    type Error = Error;

    fn try_from(p: [u32; 3]) -> Result<Self> {
        TriangularSignature::new(p)
    }
}

impl fmt::Display for TriangularSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join(&self.0))
    }
}

/// Index of `sub` in `sup` as the ratio of their areas.
pub fn rh_index(sub: &Signature, sup: &Signature) -> Result<Rational> {
    Ok(sub.area()? / sup.area()?)
}

/// Genus of the surface uniformized by a torsion-free normal subgroup of the given index.
pub fn genus_of_kernel(tri: &TriangularSignature, order: u64) -> Result<u64> {
    let v = tri.area() * Rational::from_integer(order as i64);
    let fail = || Error::NonIntegralGenus {
        signature: tri.to_string(),
        order,
    };
    if !v.is_integer() || v.to_integer() % 2 != 0 {
        return Err(fail());
    }
    let g = v.to_integer() / 2 + 1;
    if g < 2 {
        return Err(fail());
    }
    g.to_u64().ok_or_else(fail)
}

/// Triangular signatures admitting a symmetric action with a cyclic-by-translation
/// group, generated by doubling some of the periods of `[2,4,4]`, `[2,3,6]`, `[3,3,3]`
/// (never none of them). Returned sorted and without repetition up to permutation.
pub fn triangular_symmetric_candidates() -> Vec<TriangularSignature> {
    let mut out: Vec<TriangularSignature> = Vec::new();
    for base in [[2u32, 4, 4], [2, 3, 6], [3, 3, 3]] {
        for mask in 1u32..8 {
            let mut p = base;
            for (i, x) in p.iter_mut().enumerate() {
                if mask & (1 << i) != 0 {
                    *x *= 2;
                }
            }
            let t = TriangularSignature(p).sorted();
            if !out.contains(&t) {
                out.push(t);
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn candidates_are_fifteen() {
        let c = triangular_symmetric_candidates();
        assert_eq!(c.len(), 15);
        assert!(c.contains(&TriangularSignature([2, 4, 8])));
        assert!(c.contains(&TriangularSignature([4, 6, 12])));
        assert!(!c.contains(&TriangularSignature([2, 4, 4])));
    }

    #[test]
    fn minus_sign_needs_genus() {
        assert!(Signature::new(0, Sign::Minus, vec![], vec![]).is_err());
        assert!(Signature::new(1, Sign::Minus, vec![], vec![]).is_ok());
    }

    #[test]
    fn rotation_equality() {
        let a = Signature::new(0, Sign::Plus, vec![], vec![vec![2, 4, 8]]).unwrap();
        let b = Signature::new(0, Sign::Plus, vec![], vec![vec![8, 2, 4]]).unwrap();
        let c = Signature::new(0, Sign::Plus, vec![], vec![vec![4, 2, 8]]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn float_and_exact_areas_agree() {
        let s = TriangularSignature::new([2, 3, 7])
            .unwrap()
            .to_signature()
            .unwrap();
        let exact = s.area().unwrap();
        let f: f64 = s.area_as();
        let g: f32 = s.area_as();
        assert!((f - 1.0 / 42.0).abs() < 1e-12);
        assert!((g - 1.0 / 42.0).abs() < 1e-6);
        assert_eq!(exact, Rational::new(1, 42));
    }
}
