use std::fmt;

use super::spec::Family;
use crate::error::{parse_err, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    X,
    Y,
    C,
    Rho,
    Tau,
}

impl Gen {
    pub const ALL: [Gen; 5] = [Gen::X, Gen::Y, Gen::C, Gen::Rho, Gen::Tau];

    pub fn index(self) -> usize {
        self as usize
    }

    fn name(self, family: Family) -> &'static str {
        match self {
            Gen::X => family.x_name(),
            Gen::Y => family.y_name(),
            Gen::C => "c",
            Gen::Rho => "rho",
            Gen::Tau => "tau",
        }
    }
}

/// A word in the generators, kept as a list of `(generator, exponent)` syllables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<(Gen, i64)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: Gen, e: i64) -> Self {
        Word(vec![(g, e)])
    }

    pub fn then(mut self, other: &Word) -> Self {
        self.0.extend_from_slice(&other.0);
        self
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    /// Letters as `(generator, ±1)`, expanded.
    pub fn letters(&self) -> impl Iterator<Item = (Gen, bool)> + '_ {
        self.0
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat((g, e < 0)).take(e.unsigned_abs() as usize))
    }

    /// Parses space-separated syllables such as `c x^-2 rho` or `(v w)^-1`; `1` is the
    /// empty word.
    ///
    /// `x`/`v`, `y`/`w`, `c`, `rho`/`ρ` and `tau`/`τ` are accepted; the family decides
    /// nothing about parsing and is kept for symmetry with [`Word::display`].
    pub fn parse(_family: Family, src: &str) -> Result<Self> {
        let mut parser = Parser {
            chars: src.chars().collect(),
            pos: 0,
            src,
        };
        let w = parser.sequence()?;
        parser.skip_ws();
        if parser.pos != parser.chars.len() {
            return Err(parse_err("word", src));
        }
        Ok(w)
    }

    pub fn display(&self, family: Family) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    g.name(family).to_string()
                } else {
                    format!("{}^{}", g.name(family), e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn sequence(&mut self) -> Result<Word> {
        let mut w = Word::identity();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') => return Ok(w),
                _ => {
                    let atom = self.atom()?;
                    w = w.then(&atom);
                }
            }
        }
    }

    fn atom(&mut self) -> Result<Word> {
        let base = if self.peek() == Some('(') {
            self.pos += 1;
            let inner = self.sequence()?;
            if self.peek() != Some(')') {
                return Err(parse_err("word", self.src));
            }
            self.pos += 1;
            inner
        } else if self.peek() == Some('1') {
            self.pos += 1;
            Word::identity()
        } else {
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_alphabetic() && c != '^') {
                self.pos += 1;
            }
            let name: String = self.chars[start..self.pos].iter().collect();
            let g = match name.as_str() {
                "x" | "v" => Gen::X,
                "y" | "w" => Gen::Y,
                "c" => Gen::C,
                "rho" | "ρ" => Gen::Rho,
                "tau" | "τ" => Gen::Tau,
                _ => return Err(parse_err("word", self.src)),
            };
            Word::gen(g, 1)
        };
        let exp = if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            if self.peek() == Some('-') {
                self.pos += 1;
            }
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let s: String = self.chars[start..self.pos].iter().collect();
            s.parse::<i64>().map_err(|_| parse_err("word", self.src))?
        } else {
            1
        };
        Ok(power(&base, exp))
    }
}

fn power(w: &Word, e: i64) -> Word {
    if w.0.len() == 1 {
        let (g, k) = w.0[0];
        return Word::gen(g, k * e);
    }
    let unit = if e < 0 { w.inverse() } else { w.clone() };
    (0..e.unsigned_abs()).fold(Word::identity(), |acc, _| acc.then(&unit))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Family::A))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let w = Word::parse(Family::B, "c v^-2 (w v)^-1 rho^0").unwrap();
        assert_eq!(
            w.0,
            vec![
                (Gen::C, 1),
                (Gen::X, -2),
                (Gen::X, -1),
                (Gen::Y, -1),
                (Gen::Rho, 0)
            ]
        );
        assert!(Word::parse(Family::A, "c z").is_err());
    }
}
