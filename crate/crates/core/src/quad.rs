//! Gaussian integers `Z[i]` and Eisenstein integers `Z[ω]` with `ω² = ω − 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::RingInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    Gauss,
    Eisenstein,
}

impl Ring {
    /// The rotation order `t` attached to the ring in the census (4 for `Z[i]`, 6 for `Z[ω]`).
    pub fn twist(self) -> u32 {
        match self {
            Ring::Gauss => 4,
            Ring::Eisenstein => 6,
        }
    }

    /// The unique ramified rational prime.
    pub fn ramified_prime(self) -> u64 {
        match self {
            Ring::Gauss => 2,
            Ring::Eisenstein => 3,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::Gauss => "gauss",
            Ring::Eisenstein => "eisenstein",
        })
    }
}

impl std::str::FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gauss" | "gaussian" | "Z[i]" => Ok(Ring::Gauss),
            "eisenstein" | "Z[w]" => Ok(Ring::Eisenstein),
            _ => Err(crate::error::parse_err("ring", s)),
        }
    }
}

/// `a + b·i` or `a + b·ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadInt<T> {
    pub ring: Ring,
    pub a: T,
    pub b: T,
}

impl<T: RingInt> QuadInt<T> {
    pub fn new(ring: Ring, a: T, b: T) -> Self {
        QuadInt { ring, a, b }
    }

    pub fn from_int(ring: Ring, a: T) -> Self {
        Self::new(ring, a, T::zero())
    }

    pub fn norm(&self) -> T {
        let (a, b) = (self.a, self.b);
        match self.ring {
            Ring::Gauss => a * a + b * b,
            Ring::Eisenstein => a * a + a * b + b * b,
        }
    }

    pub fn conj(&self) -> Self {
        match self.ring {
            Ring::Gauss => Self::new(self.ring, self.a, -self.b),
            Ring::Eisenstein => Self::new(self.ring, self.a + self.b, -self.b),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Integer matrix of multiplication by `self` on the basis `{1, i}` or `{1, ω}`.
    pub fn mult_matrix(&self) -> [[T; 2]; 2] {
        let (a, b) = (self.a, self.b);
        match self.ring {
            Ring::Gauss => [[a, -b], [b, a]],
            Ring::Eisenstein => [[a, -b], [b, a + b]],
        }
    }

    fn same_ring(&self, other: &Self) {
        assert_eq!(self.ring, other.ring, "mixed-ring arithmetic");
    }
}

impl<T: RingInt> Add for QuadInt<T> {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        self.same_ring(&o);
        Self::new(self.ring, self.a + o.a, self.b + o.b)
    }
}

impl<T: RingInt> Sub for QuadInt<T> {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        self.same_ring(&o);
        Self::new(self.ring, self.a - o.a, self.b - o.b)
    }
}

impl<T: RingInt> Neg for QuadInt<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(self.ring, -self.a, -self.b)
    }
}

impl<T: RingInt> Mul for QuadInt<T> {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        self.same_ring(&o);
        let (a, b, c, d) = (self.a, self.b, o.a, o.b);
        match self.ring {
            Ring::Gauss => Self::new(self.ring, a * c - b * d, a * d + b * c),
            Ring::Eisenstein => Self::new(self.ring, a * c - b * d, a * d + b * c + b * d),
        }
    }
}

impl<T: RingInt> fmt::Display for QuadInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = match self.ring {
            Ring::Gauss => "i",
            Ring::Eisenstein => "w",
        };
        if self.b.is_negative() {
            write!(f, "{}-{}{}", self.a, -self.b, unit)
        } else {
            write!(f, "{}+{}{}", self.a, self.b, unit)
        }
    }
}

pub fn norm<T: RingInt>(z: &QuadInt<T>) -> T {
    z.norm()
}

/// All units of the ring: four in `Z[i]`, six in `Z[ω]`.
pub fn units<T: RingInt>(ring: Ring) -> Vec<QuadInt<T>> {
    let (o, z) = (T::one(), T::zero());
    let mut v = vec![
        QuadInt::new(ring, o, z),
        QuadInt::new(ring, -o, z),
        QuadInt::new(ring, z, o),
        QuadInt::new(ring, z, -o),
    ];
    if ring == Ring::Eisenstein {
        v.push(QuadInt::new(ring, -o, o));
        v.push(QuadInt::new(ring, o, -o));
    }
    v
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(p, multiplicity)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Whether the rational prime `p` is a norm, i.e. factors as `π·π̄` in the ring.
///
/// The ramified prime (2 resp. 3) counts as splitting, with associate factors.
pub fn is_split(p: u64, ring: Ring) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(p == ring.ramified_prime()
        || match ring {
            Ring::Gauss => p % 4 == 1,
            Ring::Eisenstein => p % 6 == 1,
        })
}

/// `p = π·π̄` with `π = a + b·(i|ω)`, `a ≥ b ≥ 0`, returned as `(π, π̄)`.
pub fn split<T: RingInt>(p: u64, ring: Ring) -> Result<(QuadInt<T>, QuadInt<T>)> {
    if !is_split(p, ring)? {
        return Err(Error::DoesNotSplit { p, ring });
    }
    let mut a = 0u64;
    while a * a <= p {
        for b in 0..=a {
            let n = match ring {
                Ring::Gauss => a * a + b * b,
                Ring::Eisenstein => a * a + a * b + b * b,
            };
            if n == p {
                let cast = |x: u64| T::from(x).expect("coordinate fits");
                let pi = QuadInt::new(ring, cast(a), cast(b));
                let bar = pi.conj();
                debug_assert_eq!((pi * bar).a.to_u64(), Some(p));
                return Ok((pi, bar));
            }
        }
        a += 1;
    }
    unreachable!("split prime {p} has a norm representation")
}

/// Invariant factors `(d1, d2)`, `d1 | d2`, of the additive group of `R/zR`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub d1: u64,
    pub d2: u64,
}

impl AbelianInvariants {
    pub fn new(x: u64, y: u64) -> Self {
        let d1 = x.gcd(&y);
        let d2 = if d1 == 0 { 0 } else { x / d1 * y };
        AbelianInvariants { d1, d2 }
    }

    pub fn order(&self) -> u64 {
        self.d1 * self.d2
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{} x Z{}", self.d1, self.d2)
    }
}

/// Smith normal form diagonal of a 2×2 integer matrix: `d1 = gcd` of the entries and
/// `d2 = |det| / d1`.
pub fn smith_2x2<T: RingInt>(m: [[T; 2]; 2]) -> (T, T) {
    let d1 = m[0][0].gcd(&m[0][1]).gcd(&m[1][0]).gcd(&m[1][1]);
    let det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs();
    if d1.is_zero() {
        return (T::zero(), T::zero());
    }
    (d1, det / d1)
}

/// Additive structure of `R/zR`.
pub fn quotient_invariants<T: RingInt>(z: &QuadInt<T>) -> Result<AbelianInvariants> {
    if z.a.is_zero() && z.b.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let (d1, d2) = smith_2x2(z.mult_matrix());
    let cast = |x: T| x.to_u64().expect("invariant fits in u64");
    Ok(AbelianInvariants {
        d1: cast(d1),
        d2: cast(d2),
    })
}

/// Possible Sylow `p`-subgroups `Z_{p^l} × Z_{p^{μ−l}}` of a quotient `R/J` with
/// `|R/J|_p = p^μ`, for a split prime `p > 3`.
pub fn sylow_types(p: u64, mult: u32, ring: Ring) -> Result<Vec<AbelianInvariants>> {
    if p <= 3 {
        return Err(Error::NotApplicable(format!("p = {p} must exceed 3")));
    }
    if !is_split(p, ring)? {
        return Err(Error::NotApplicable(format!(
            "{p} does not split in {ring}"
        )));
    }
    Ok((0..=mult / 2)
        .map(|l| AbelianInvariants {
            d1: p.pow(l),
            d2: p.pow(mult - l),
        })
        .collect())
}

/// Residues `k mod q` with `gcd(k, q) = 1` and `k² + 1 ≡ 0` (t = 4) or `k² − k + 1 ≡ 0`
/// (t = 3, 6).
pub fn solve_twist(t: u32, q: u64) -> Result<Vec<u64>> {
    if q == 0 {
        return Err(Error::ZeroModulus);
    }
    let poly: fn(u128) -> u128 = match t {
        4 => |k| k * k + 1,
        3 | 6 => |k| k * k + 1 - k,
        _ => {
            return Err(Error::NotApplicable(format!(
                "twist {t} not in {{3, 4, 6}}"
            )))
        }
    };
    Ok((0..q)
        .filter(|&k| {
            let v = poly(k as u128);
            v % q as u128 == 0 && k.gcd(&q) == 1
        })
        .collect())
}

/// Isomorphism types of `R/J` for ideals `J` of norm `n`, one entry per type.
///
/// A split prime `p^μ` contributes the choices `Z_{p^l} × Z_{p^{μ−l}}`, `0 ≤ l ≤ μ/2`;
/// the ramified prime contributes the single type of `(π^μ)`; an inert prime needs even
/// `μ` and contributes `Z_{p^{μ/2}}²`.
pub fn ideal_types(n: u64, ring: Ring) -> Vec<AbelianInvariants> {
    if n == 0 {
        return Vec::new();
    }
    let mut acc = vec![AbelianInvariants { d1: 1, d2: 1 }];
    for (p, mu) in factorize(n) {
        let local: Vec<(u64, u64)> = if p == ring.ramified_prime() {
            vec![(p.pow(mu / 2), p.pow(mu - mu / 2))]
        } else if is_split(p, ring).unwrap_or(false) {
            (0..=mu / 2).map(|l| (p.pow(l), p.pow(mu - l))).collect()
        } else if mu % 2 == 0 {
            vec![(p.pow(mu / 2), p.pow(mu / 2))]
        } else {
            Vec::new()
        };
        acc = acc
            .iter()
            .flat_map(|inv| {
                local.iter().map(move |&(x, y)| AbelianInvariants {
                    d1: inv.d1 * x,
                    d2: inv.d2 * y,
                })
            })
            .collect();
    }
    acc.sort();
    acc.dedup();
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_product() {
        let a = QuadInt::<i64>::new(Ring::Gauss, 1, 2);
        let b = QuadInt::new(Ring::Gauss, 3, -1);
        assert_eq!(a * b, QuadInt::new(Ring::Gauss, 5, 5));
    }

    #[test]
    fn omega_relation() {
        let w = QuadInt::<i64>::new(Ring::Eisenstein, 0, 1);
        assert_eq!(w * w, QuadInt::new(Ring::Eisenstein, -1, 1));
        let w6 = (0..6).fold(QuadInt::from_int(Ring::Eisenstein, 1), |acc, _| acc * w);
        assert_eq!(w6, QuadInt::from_int(Ring::Eisenstein, 1));
    }

    #[test]
    fn twist_six_small_modulus() {
        assert_eq!(solve_twist(6, 7).unwrap(), vec![3, 5]);
    }
}
