//! Parser for the group-spec grammar:
//!
//! ```text
//! spec  := "cyclic:" N | "dihedral:" N | "quaternion:" N | "elemabelian:" P "^" K
//!        | "sym:" M | "alt:" M | "semidirect:" P ":" Q
//!        | "product:(" spec ")x(" spec ")" { "x(" spec ")" }
//!        | "perm:" D ":" [ gen { ";" gen } ]
//! gen   := cycle { cycle }
//! cycle := "(" { N } ")"
//! ```
//!
//! Chained products nest to the right. Whitespace is ignored everywhere.

use std::fmt;

use kappa_core::groups::{GroupSpec, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: expected {}", self.position, self.expected)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.error("end of input"));
    }
    Ok(spec)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, expected: &str) -> ParseError {
        ParseError { position: self.pos, expected: expected.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("'{}'", c as char)))
        }
    }

    fn keyword(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("a group family name"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).to_ascii_lowercase())
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| ParseError { position: start, expected: "a number that fits in 64 bits".into() })
    }

    fn small(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let n = self.number()?;
        u32::try_from(n).map_err(|_| ParseError { position: start, expected: "a number below 2^32".into() })
    }

    fn spec(&mut self) -> Result<GroupSpec, ParseError> {
        let start = self.pos;
        let family = self.keyword()?;
        self.expect(b':')?;
        Ok(match family.as_str() {
            "cyclic" => GroupSpec::Cyclic(self.number()?),
            "dihedral" => GroupSpec::Dihedral(self.number()?),
            "quaternion" => GroupSpec::Quaternion(self.number()?),
            "elemabelian" => {
                let p = self.number()?;
                self.expect(b'^')?;
                GroupSpec::ElementaryAbelian { p, k: self.small()? }
            }
            "sym" => GroupSpec::Symmetric(self.small()?),
            "alt" => GroupSpec::Alternating(self.small()?),
            "semidirect" => {
                let p = self.number()?;
                self.expect(b':')?;
                GroupSpec::SemidirectPQ { p, q: self.number()? }
            }
            "product" => {
                let mut factors = vec![self.bracketed()?];
                if self.peek() != Some(b'x') {
                    return Err(self.error("'x'"));
                }
                while self.eat(b'x') {
                    factors.push(self.bracketed()?);
                }
                let last = factors.pop().expect("two factors");
                factors.into_iter().rev().fold(last, |acc, f| GroupSpec::product(f, acc))
            }
            "perm" => {
                let degree = self.small()?;
                self.expect(b':')?;
                let mut generators = Vec::new();
                if self.peek() == Some(b'(') {
                    generators.push(self.generator(degree)?);
                    while self.eat(b';') {
                        generators.push(self.generator(degree)?);
                    }
                }
                GroupSpec::Permutation { degree, generators }
            }
            _ => {
                return Err(ParseError {
                    position: start,
                    expected: "one of cyclic, dihedral, quaternion, elemabelian, sym, alt, semidirect, product, perm"
                        .into(),
                })
            }
        })
    }

    fn bracketed(&mut self) -> Result<GroupSpec, ParseError> {
        self.expect(b'(')?;
        let s = self.spec()?;
        self.expect(b')')?;
        Ok(s)
    }

    fn generator(&mut self, degree: u32) -> Result<Permutation, ParseError> {
        let start = self.pos;
        let mut cycles = Vec::new();
        while self.eat(b'(') {
            let mut cycle = Vec::new();
            while self.peek() != Some(b')') {
                cycle.push(self.number()? as usize);
            }
            self.expect(b')')?;
            cycles.push(cycle);
        }
        if cycles.is_empty() {
            return Err(self.error("'(' starting a cycle"));
        }
        Permutation::from_cycles(degree as usize, &cycles).map_err(|e| ParseError {
            position: start,
            expected: format!("a permutation of 1..={degree} ({e})"),
        })
    }
}
