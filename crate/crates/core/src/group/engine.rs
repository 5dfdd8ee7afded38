use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::spec::{Family, GroupSpec};
use super::word::{Gen, Word};
use crate::error::{Error, Result};
use crate::quad::AbelianInvariants;

/// Normal form `X^r Y^s c^t τ^p ρ^q` with `0 ≤ r < d`, `0 ≤ s < e`, `0 ≤ t < twist`,
/// `p, q ∈ {0, 1}`. `X, Y` stand for `x, y` or `v, w` depending on the family.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct Element {
    pub r: u32,
    pub s: u32,
    pub t: u32,
    pub p: u8,
    pub q: u8,
}

impl Element {
    pub const IDENTITY: Element = Element {
        r: 0,
        s: 0,
        t: 0,
        p: 0,
        q: 0,
    };

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Orientation-reversing elements carry `τ`.
    pub fn is_anticonformal(&self) -> bool {
        self.p == 1
    }

    pub fn display(&self, family: Family) -> ElementDisplay {
        ElementDisplay { e: *self, family }
    }

    fn trans(&self) -> Trans {
        Trans {
            r: self.r,
            s: self.s,
            q: self.q,
        }
    }

    fn from_parts(tr: Trans, t: u32, p: u8) -> Element {
        Element {
            r: tr.r,
            s: tr.s,
            t,
            p,
            q: tr.q,
        }
    }
}

pub struct ElementDisplay {
    e: Element,
    family: Family,
}

impl fmt::Display for ElementDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.e;
        let parts: Vec<String> = [
            (self.family.x_name(), e.r),
            (self.family.y_name(), e.s),
            ("c", e.t),
            ("τ", e.p as u32),
            ("ρ", e.q as u32),
        ]
        .iter()
        .filter(|(_, k)| *k != 0)
        .map(|(g, k)| {
            if *k == 1 {
                g.to_string()
            } else {
                format!("{g}^{k}")
            }
        })
        .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Translation `X^r Y^s ρ^q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Trans {
    r: u32,
    s: u32,
    q: u8,
}

const T_ID: Trans = Trans { r: 0, s: 0, q: 0 };

/// Element of the orientation-preserving part, as translation times `c^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Rot {
    tr: Trans,
    t: u32,
}

const R_ID: Rot = Rot { tr: T_ID, t: 0 };

/// Data describing conjugation by `τ`.
#[derive(Clone, Debug)]
struct TauData {
    x_pows: Vec<Rot>,
    y_pows: Vec<Rot>,
    c_pows: Vec<Rot>,
    images: [Rot; 3],
}

/// Multiplication engine for one [`GroupSpec`].
///
/// The translation subgroup is a central extension of `Z_d × Z_e` by `⟨ρ⟩` with
/// commutator `ρ^γ`; `c` acts on it by the automorphism `φ` whose powers are tabulated
/// once, and `τ` (when present) acts by an involutive automorphism `ψ`.
#[derive(Debug)]
pub struct Group {
    spec: GroupSpec,
    d: u32,
    e: u32,
    tc: u32,
    x_carry: u8,
    y_carry: u8,
    gamma: u8,
    mu: u8,
    phi_one: (Trans, Trans),
    conj: Vec<(Trans, Trans)>,
    tau: Option<TauData>,
    elements: OnceLock<Vec<Element>>,
}

fn bit(x: i64) -> u8 {
    x.rem_euclid(2) as u8
}

impl Group {
    pub fn new(spec: GroupSpec) -> Result<Group> {
        let spec = GroupSpec::new(
            spec.family,
            spec.n,
            spec.params,
            spec.variant,
            spec.with_tau,
        )?;
        let (d, e, tc) = spec.dims();
        let n = spec.n as i64;
        let p = spec.params;
        let (al, be, ga, mu) = (p.alpha as i64, p.beta as i64, p.gamma as i64, p.mu as i64);
        let (eps, eps2) = (spec.variant.eps as i64, spec.variant.eps2 as i64);
        let (x_carry, y_carry) = match spec.family {
            Family::A => (eps, eps),
            Family::C => (eps + n * al, eps),
            Family::E => (eps, eps + n * be),
            Family::B | Family::D | Family::F => (eps, eps2),
        };
        let mut g = Group {
            spec,
            d,
            e,
            tc,
            x_carry: bit(x_carry),
            y_carry: bit(y_carry),
            gamma: bit(ga),
            mu: bit(mu),
            phi_one: (T_ID, T_ID),
            conj: Vec::new(),
            tau: None,
            elements: OnceLock::new(),
        };
        // c X c^-1 and c Y c^-1 as X^a Y^b ρ^q.
        let w =
            |g: &Group, a: i64, b: i64, q: i64| g.t_mul(g.t_reduce(a, 0, q), g.t_reduce(0, b, 0));
        let phi = match spec.family {
            Family::A => (w(&g, 0, -1, al), w(&g, 1, 0, 0)),
            Family::B => (w(&g, -1, -1, al), w(&g, 2, 1, al + ga)),
            Family::C => (w(&g, 0, 1, al), w(&g, -1, 1, be)),
            Family::D => (w(&g, 2, -1, al + be + mu), w(&g, 3, -1, be + mu)),
            Family::E => (w(&g, -1, 1, 0), w(&g, -1, 0, be)),
            Family::F => (w(&g, 1, -1, be), w(&g, 3, -2, be)),
        };
        g.phi_one = phi;
        let mut conj = vec![(g.t_reduce(1, 0, 0), g.t_reduce(0, 1, 0))];
        for i in 1..tc as usize {
            let (px, py) = conj[i - 1];
            conj.push((g.phi_step(px), g.phi_step(py)));
        }
        g.conj = conj;
        if spec.with_tau {
            let base = GroupSpec {
                with_tau: false,
                ..spec
            };
            let plain = Group::new(base)?;
            let images: Vec<Rot> = spec
                .tau_images()
                .iter()
                .map(|(_, w)| {
                    let word = Word::parse(spec.family, w).expect("image syntax");
                    plain.eval(&word).map(|el| Rot {
                        tr: el.trans(),
                        t: el.t,
                    })
                })
                .collect::<Result<_>>()?;
            // Order in the table: c first, then the two translation generators.
            let (ic, i1, i2) = (images[0], images[1], images[2]);
            let (ix, iy) = match spec.family {
                Family::A | Family::C => (i1, i2),
                _ => (i2, i1),
            };
            let pows = |base: Rot, k: u32| {
                let mut v = vec![R_ID];
                for i in 1..k as usize {
                    v.push(g.rot_mul(v[i - 1], base));
                }
                v
            };
            g.tau = Some(TauData {
                x_pows: pows(ix, d),
                y_pows: pows(iy, e),
                c_pows: pows(ic, tc),
                images: [ix, iy, ic],
            });
        }
        Ok(g)
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn order(&self) -> u64 {
        self.spec.order()
    }

    // ---- translations -------------------------------------------------------------

    fn t_reduce(&self, r: i64, s: i64, q: i64) -> Trans {
        let (d, e) = (self.d as i64, self.e as i64);
        let q = q + self.x_carry as i64 * r.div_euclid(d) + self.y_carry as i64 * s.div_euclid(e);
        Trans {
            r: r.rem_euclid(d) as u32,
            s: s.rem_euclid(e) as u32,
            q: bit(q),
        }
    }

    fn t_mul(&self, a: Trans, b: Trans) -> Trans {
        self.t_reduce(
            a.r as i64 + b.r as i64,
            a.s as i64 + b.s as i64,
            a.q as i64 + b.q as i64 + self.gamma as i64 * a.s as i64 * b.r as i64,
        )
    }

    fn t_inv(&self, a: Trans) -> Trans {
        self.t_reduce(
            -(a.r as i64),
            -(a.s as i64),
            a.q as i64 + self.gamma as i64 * a.r as i64 * a.s as i64,
        )
    }

    /// `(X^a Y^b ρ^q)^k = X^{ak} Y^{bk} ρ^{qk + γ·ab·k(k−1)/2}`.
    fn t_pow(&self, a: Trans, k: i64) -> Trans {
        if k < 0 {
            return self.t_pow(self.t_inv(a), -k);
        }
        let (r, s) = (a.r as i64, a.s as i64);
        let tri = (k * (k - 1) / 2) % 2;
        self.t_reduce(
            r * k,
            s * k,
            a.q as i64 * k + self.gamma as i64 * ((r * s) % 2) * tri,
        )
    }

    fn phi_step(&self, a: Trans) -> Trans {
        let (px, py) = self.phi_one;
        let img = self.t_mul(self.t_pow(px, a.r as i64), self.t_pow(py, a.s as i64));
        self.t_mul(img, Trans { r: 0, s: 0, q: a.q })
    }

    /// `c^t T c^{−t}`.
    fn t_conj(&self, t: u32, a: Trans) -> Trans {
        if t == 0 {
            return a;
        }
        let (px, py) = self.conj[t as usize];
        let img = self.t_mul(self.t_pow(px, a.r as i64), self.t_pow(py, a.s as i64));
        Trans {
            q: img.q ^ a.q,
            ..img
        }
    }

    // ---- orientation-preserving part -----------------------------------------------

    fn rot_mul(&self, a: Rot, b: Rot) -> Rot {
        let tr = self.t_mul(a.tr, self.t_conj(a.t, b.tr));
        let t = a.t + b.t;
        if t >= self.tc {
            Rot {
                tr: Trans {
                    q: tr.q ^ self.mu,
                    ..tr
                },
                t: t - self.tc,
            }
        } else {
            Rot { tr, t }
        }
    }

    fn rot_inv(&self, a: Rot) -> Rot {
        let ti = self.t_inv(a.tr);
        if a.t == 0 {
            return Rot { tr: ti, t: 0 };
        }
        let back = self.tc - a.t;
        let tr = self.t_conj(back, ti);
        Rot {
            tr: Trans {
                q: tr.q ^ self.mu,
                ..tr
            },
            t: back,
        }
    }

    /// `τ a τ`.
    fn psi(&self, a: Rot) -> Rot {
        let tau = self.tau.as_ref().expect("extension present");
        let mut out = self.rot_mul(tau.x_pows[a.tr.r as usize], tau.y_pows[a.tr.s as usize]);
        out = self.rot_mul(out, tau.c_pows[a.t as usize]);
        out.tr.q ^= a.tr.q;
        out
    }

    fn split(e: Element) -> (Rot, u8) {
        (
            Rot {
                tr: e.trans(),
                t: e.t,
            },
            e.p,
        )
    }

    fn join(a: Rot, p: u8) -> Element {
        Element::from_parts(a.tr, a.t, p)
    }

    // ---- public arithmetic --------------------------------------------------------

    pub fn contains(&self, e: &Element) -> bool {
        e.r < self.d
            && e.s < self.e
            && e.t < self.tc
            && e.q <= 1
            && (e.p == 0 || (e.p == 1 && self.spec.with_tau))
    }

    fn check(&self, e: &Element) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        debug_assert!(self.contains(&a) && self.contains(&b));
        let (ra, pa) = Self::split(a);
        let (rb, pb) = Self::split(b);
        let rb = if pa == 1 { self.psi(rb) } else { rb };
        Self::join(self.rot_mul(ra, rb), pa ^ pb)
    }

    pub fn checked_mul(&self, a: Element, b: Element) -> Result<Element> {
        self.check(&a)?;
        self.check(&b)?;
        Ok(self.mul(a, b))
    }

    pub fn inv(&self, a: Element) -> Element {
        let (ra, pa) = Self::split(a);
        let ri = self.rot_inv(ra);
        if pa == 1 {
            Self::join(self.psi(ri), 1)
        } else {
            Self::join(ri, 0)
        }
    }

    pub fn checked_inv(&self, a: Element) -> Result<Element> {
        self.check(&a)?;
        Ok(self.inv(a))
    }

    pub fn power(&self, a: Element, k: i64) -> Element {
        let mut base = if k < 0 { self.inv(a) } else { a };
        let mut k = k.unsigned_abs();
        let mut acc = Element::IDENTITY;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Closed-form power of a pure translation `X^r Y^s ρ^q`.
    pub fn translation_power(&self, a: Element, k: i64) -> Result<Element> {
        self.check(&a)?;
        if a.t != 0 || a.p != 0 {
            return Err(Error::NotApplicable("not a translation".into()));
        }
        Ok(Element::from_parts(self.t_pow(a.trans(), k), 0, 0))
    }

    pub fn element_order(&self, a: Element) -> u64 {
        let mut x = a;
        let mut k = 1;
        while !x.is_identity() {
            x = self.mul(x, a);
            k += 1;
            assert!(k <= self.order(), "element order exceeds group order");
        }
        k
    }

    pub fn conjugate(&self, h: Element, a: Element) -> Element {
        self.mul(self.mul(h, a), self.inv(h))
    }

    pub fn commutes(&self, a: Element, b: Element) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn generator(&self, g: Gen) -> Result<Element> {
        Ok(match g {
            Gen::X => Element::from_parts(self.t_reduce(1, 0, 0), 0, 0),
            Gen::Y => Element::from_parts(self.t_reduce(0, 1, 0), 0, 0),
            Gen::C => Element {
                t: 1,
                ..Element::IDENTITY
            },
            Gen::Rho => Element {
                q: 1,
                ..Element::IDENTITY
            },
            Gen::Tau => {
                if !self.spec.with_tau {
                    return Err(Error::SpecMismatch);
                }
                Element {
                    p: 1,
                    ..Element::IDENTITY
                }
            }
        })
    }

    /// Generators of the whole group: `X, Y, c, ρ` and `τ` when present.
    pub fn generators(&self) -> Vec<Element> {
        let mut gens: Vec<Element> = [Gen::X, Gen::Y, Gen::C, Gen::Rho]
            .iter()
            .map(|&g| self.generator(g).expect("base generator"))
            .collect();
        if self.spec.with_tau {
            gens.push(self.generator(Gen::Tau).expect("tau"));
        }
        gens
    }

    /// Multiplies out a word letter by letter.
    pub fn eval(&self, w: &Word) -> Result<Element> {
        let mut acc = Element::IDENTITY;
        for &(g, k) in &w.0 {
            let gen = self.generator(g)?;
            acc = self.mul(acc, self.power(gen, k));
        }
        Ok(acc)
    }

    pub fn parse_element(&self, s: &str) -> Result<Element> {
        self.eval(&Word::parse(self.family(), s)?)
    }

    // ---- enumeration --------------------------------------------------------------

    pub fn index_of(&self, a: &Element) -> usize {
        let (d, e, tc) = (self.d as usize, self.e as usize, self.tc as usize);
        ((((a.p as usize * tc + a.t as usize) * d + a.r as usize) * e + a.s as usize) << 1)
            | a.q as usize
    }

    pub fn element_at(&self, mut i: usize) -> Element {
        let (d, e, tc) = (self.d as usize, self.e as usize, self.tc as usize);
        let q = (i & 1) as u8;
        i >>= 1;
        let s = (i % e) as u32;
        i /= e;
        let r = (i % d) as u32;
        i /= d;
        let t = (i % tc) as u32;
        let p = (i / tc) as u8;
        Element { r, s, t, p, q }
    }

    /// All elements in index order. Cached after the first call.
    pub fn elements(&self) -> &[Element] {
        self.elements.get_or_init(|| {
            (0..self.order() as usize)
                .map(|i| self.element_at(i))
                .collect()
        })
    }

    /// Subgroup generated by `gens`, sorted by index.
    pub fn subgroup_generated(&self, gens: &[Element]) -> Vec<Element> {
        let mut seen = vec![false; self.order() as usize];
        let mut out = vec![Element::IDENTITY];
        seen[0] = true;
        let mut i = 0;
        while i < out.len() {
            let a = out[i];
            for &g in gens {
                let b = self.mul(a, g);
                let k = self.index_of(&b);
                if !seen[k] {
                    seen[k] = true;
                    out.push(b);
                }
            }
            i += 1;
        }
        out.sort_by_key(|e| self.index_of(e));
        out
    }

    pub fn subgroup_order(&self, gens: &[Element]) -> usize {
        self.subgroup_generated(gens).len()
    }

    pub fn centralizer(&self, a: Element) -> Vec<Element> {
        self.elements()
            .iter()
            .copied()
            .filter(|&h| self.commutes(h, a))
            .collect()
    }

    pub fn conjugacy_class(&self, a: Element) -> Vec<Element> {
        let gens = self.generators();
        let mut seen = vec![false; self.order() as usize];
        let mut out = vec![a];
        seen[self.index_of(&a)] = true;
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.conjugate(g, x);
                let k = self.index_of(&y);
                if !seen[k] {
                    seen[k] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_by_key(|e| self.index_of(e));
        out
    }

    pub fn are_conjugate(&self, a: Element, b: Element) -> bool {
        self.conjugacy_class(a).contains(&b)
    }

    /// Partition of the group into conjugacy classes.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Element>> {
        let mut seen = vec![false; self.order() as usize];
        let mut classes = Vec::new();
        for &a in self.elements() {
            if seen[self.index_of(&a)] {
                continue;
            }
            let cls = self.conjugacy_class(a);
            for x in &cls {
                seen[self.index_of(x)] = true;
            }
            classes.push(cls);
        }
        classes
    }

    // ---- consistency --------------------------------------------------------------

    /// Whether the normal-form multiplication really defines a group satisfying the
    /// presentation: the translation cocycle is well defined, conjugation by `c` is an
    /// automorphism of order dividing the twist, `τ` acts by an involutive automorphism
    /// compatible with `c`, and every relator of [`GroupSpec::relators`] evaluates to 1.
    pub fn relators_hold(&self) -> bool {
        self.is_consistent()
            && self
                .spec
                .relators()
                .iter()
                .all(|w| self.eval(w).map(|e| e.is_identity()).unwrap_or(false))
    }

    /// Checks arbitrary relator words against the engine.
    pub fn words_vanish(&self, words: &[Word]) -> bool {
        words
            .iter()
            .all(|w| self.eval(w).map(|e| e.is_identity()).unwrap_or(false))
    }

    pub fn is_consistent(&self) -> bool {
        let g = self.gamma as u32;
        if (g * self.d) % 2 != 0 || (g * self.e) % 2 != 0 {
            return false;
        }
        let (px, py) = self.phi_one;
        let rho = |q: u8| Trans { r: 0, s: 0, q };
        if self.t_pow(px, self.d as i64) != rho(self.x_carry)
            || self.t_pow(py, self.e as i64) != rho(self.y_carry)
            || self.t_mul(py, px) != self.t_mul(self.t_mul(px, py), rho(self.gamma))
        {
            return false;
        }
        let x = self.t_reduce(1, 0, 0);
        let y = self.t_reduce(0, 1, 0);
        let (lx, ly) = *self.conj.last().expect("twist >= 3");
        if self.phi_step(lx) != x || self.phi_step(ly) != y {
            return false;
        }
        match &self.tau {
            None => true,
            Some(tau) => self.tau_consistent(tau),
        }
    }

    fn tau_consistent(&self, tau: &TauData) -> bool {
        let [ix, iy, ic] = tau.images;
        let pow = |a: Rot, k: u32| (0..k).fold(R_ID, |acc, _| self.rot_mul(acc, a));
        let rho = |q: u8| Rot {
            tr: Trans { r: 0, s: 0, q },
            t: 0,
        };
        let x = Rot {
            tr: self.t_reduce(1, 0, 0),
            t: 0,
        };
        let y = Rot {
            tr: self.t_reduce(0, 1, 0),
            t: 0,
        };
        let c = Rot { tr: T_ID, t: 1 };
        let checks = [
            pow(ix, self.d) == rho(self.x_carry),
            pow(iy, self.e) == rho(self.y_carry),
            self.rot_mul(iy, ix) == self.rot_mul(self.rot_mul(ix, iy), rho(self.gamma)),
            pow(ic, self.tc) == rho(self.mu),
            self.rot_mul(self.rot_mul(ic, ix), self.rot_inv(ic))
                == self.psi(Rot {
                    tr: self.phi_one.0,
                    t: 0,
                }),
            self.rot_mul(self.rot_mul(ic, iy), self.rot_inv(ic))
                == self.psi(Rot {
                    tr: self.phi_one.1,
                    t: 0,
                }),
            self.psi(ix) == x,
            self.psi(iy) == y,
            self.psi(ic) == c,
        ];
        checks.iter().all(|&b| b)
    }

    // ---- reduced quotient ---------------------------------------------------------

    /// Structure of the translation subgroup modulo `ρ` together with the order of `c`
    /// modulo translations.
    pub fn reduced_quotient(&self) -> ReducedQuotient {
        let mut exponent = 1u64;
        for r in 0..self.d {
            for s in 0..self.e {
                let a = Trans { r, s, q: 0 };
                let mut k = 1u64;
                let mut x = a;
                while x.r != 0 || x.s != 0 {
                    x = self.t_mul(x, a);
                    k += 1;
                }
                exponent = num_integer::lcm(exponent, k);
            }
        }
        let size = self.d as u64 * self.e as u64;
        ReducedQuotient {
            invariants: AbelianInvariants {
                d1: size / exponent,
                d2: exponent,
            },
            twist: self.tc,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedQuotient {
    pub invariants: AbelianInvariants,
    pub twist: u32,
}
