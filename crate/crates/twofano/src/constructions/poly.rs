//! Commutative polynomials over named generators, with a small expression parser.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::algebra::{format_sum, int, parse_rational, Rational};
use crate::error::{Error, Result};

/// Polynomial in `nvars` generators; keys are exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        debug_assert_eq!(e.len(), self.nvars);
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn check(&self, o: &Poly) -> Result<()> {
        if self.nvars == o.nvars {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("polynomials over {} and {} generators", self.nvars, o.nvars)))
        }
    }

    pub fn add(&self, o: &Poly) -> Result<Poly> {
        self.check(o)?;
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Poly) -> Result<Poly> {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, q: &Rational) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * q);
        }
        out
    }

    pub fn mul(&self, o: &Poly) -> Result<Poly> {
        self.check(o)?;
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, m: u32) -> Result<Poly> {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..m {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// The homogeneous part of degree `d`.
    pub fn part(&self, d: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    /// Re-embeds into `total` generators, shifting variable `i` to `offset + i`.
    pub fn embed(&self, total: usize, offset: usize) -> Poly {
        let mut out = Poly::zero(total);
        for (e, c) in &self.terms {
            let mut f = vec![0; total];
            f[offset..offset + self.nvars].copy_from_slice(e);
            out.add_term(f, c.clone());
        }
        out
    }

    /// Coefficient of a single generator in the linear part.
    pub fn linear_coeff(&self, i: usize) -> Rational {
        let mut e = vec![0; self.nvars];
        e[i] = 1;
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn render(&self, names: &[String]) -> String {
        let items: Vec<(String, Rational)> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let f: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| if x == 1 { names[i].clone() } else { format!("{}^{x}", names[i]) })
                    .collect();
                (if f.is_empty() { "1".to_string() } else { f.join("*") }, c.clone())
            })
            .collect();
        format_sum(&items)
    }
}

/// Parses expressions such as `2*h1 + 3/2*h2^2 - (h1+h2)^2` over the given generator names.
pub fn parse_poly(src: &str, names: &[String]) -> Result<Poly> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, names, src };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(cs[st..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected `{c}` in `{s}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a [String],
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in `{}`", self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let n = self.names.len();
        let mut acc = if self.eat('-') {
            self.term()?.scale(&int(-1))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                break;
            }
        }
        debug_assert_eq!(acc.nvars, n);
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?)?;
            } else if self.eat('/') {
                match self.toks.get(self.pos).cloned() {
                    Some(Tok::Num(d)) => {
                        self.pos += 1;
                        let q = parse_rational(&d)?;
                        if q.is_zero() {
                            return Err(self.err("division by zero"));
                        }
                        acc = acc.scale(&(Rational::one() / q));
                    }
                    _ => return Err(self.err("only division by integers is supported")),
                }
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(e)) => {
                    self.pos += 1;
                    let e: u32 = e.parse().map_err(|_| self.err("bad exponent"))?;
                    base.pow(e)
                }
                _ => Err(self.err("exponent must be a nonnegative integer")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let n = self.names.len();
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(d)) => {
                self.pos += 1;
                Ok(Poly::constant(n, parse_rational(&d)?))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.names.iter().position(|x| *x == name) {
                    Some(i) => Ok(Poly::var(n, i)),
                    None => Err(self.err(&format!("unknown generator `{name}`"))),
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing `)`"));
                }
                Ok(e)
            }
            Some(Tok::Sym('-')) => {
                self.pos += 1;
                Ok(self.factor()?.scale(&int(-1)))
            }
            _ => Err(self.err("expected a number, generator or `(`")),
        }
    }
}

/// True when every coefficient is an integer.
pub fn is_integral(p: &Poly) -> bool {
    p.terms().all(|(_, c)| c.is_integer())
}

/// True when every coefficient is nonnegative.
pub fn is_nonnegative(p: &Poly) -> bool {
    p.terms().all(|(_, c)| !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_and_render() {
        let n = names(&["h1", "h2"]);
        let p = parse_poly("(h1+h2)^2 - 3/2*h1^2", &n).unwrap();
        assert_eq!(p.render(&n), "-1/2*h1^2 + 2*h1*h2 + h2^2");
        let q = parse_poly("-h1/2 + 1", &n).unwrap();
        assert_eq!(q.render(&n), "-1/2*h1 + 1");
        assert_eq!(parse_poly("0", &n).unwrap().render(&n), "0");
    }

    #[test]
    fn parse_errors() {
        let n = names(&["h"]);
        assert!(parse_poly("x", &n).is_err());
        assert!(parse_poly("h^", &n).is_err());
        assert!(parse_poly("(h", &n).is_err());
        assert!(parse_poly("h/0", &n).is_err());
        assert!(parse_poly("h h", &n).is_err());
    }

    #[test]
    fn arithmetic() {
        let n = names(&["a", "b"]);
        let a = parse_poly("a+b", &n).unwrap();
        let sq = a.pow(2).unwrap();
        assert_eq!(sq.linear_coeff(0), rat(0, 1));
        assert!(sq.is_homogeneous_of(2));
        assert_eq!(sq.embed(3, 1).nvars(), 3);
    }
}
