//! Intersection rings of the spaces used in explicit witness computations.
//!
//! A space is built from a [`SpaceSpec`] and knows its generators, its
//! dimension, c1 and ch2 as polynomials, and how to integrate a polynomial.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{int, rat, Rational};
use crate::constructions::poly::{parse_poly, Poly};
use crate::error::{Error, Result};

/// Serializable description of a space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceSpec {
    /// P^n with hyperplane generator `var` (default `h`).
    Proj {
        n: u32,
        #[serde(default)]
        var: Option<String>,
    },
    /// Q^n in P^{n+1}.
    Quadric {
        n: u32,
        #[serde(default)]
        var: Option<String>,
    },
    /// Ring generated by one class H with H^dim = degree.
    Abstract {
        dim: u32,
        var: String,
        #[serde(with = "crate::algebra::rational_str")]
        degree: Rational,
        c1: String,
        #[serde(default)]
        ch2: Option<String>,
    },
    Product(Vec<SpaceSpec>),
    /// Blow-up at `count` distinct points, exceptional generators `E` or `E1..Em`.
    BlowupPoints {
        base: Box<SpaceSpec>,
        count: u32,
        #[serde(default)]
        prefix: Option<String>,
    },
    /// P(E) of rank-1 quotients, O(1) = `var` (default `xi`).
    /// E is given by Chern classes or by the first Chern classes of line bundle summands.
    Bundle {
        base: Box<SpaceSpec>,
        #[serde(default)]
        chern: Option<Vec<String>>,
        #[serde(default)]
        split: Option<Vec<String>>,
        #[serde(default)]
        var: Option<String>,
    },
    /// Complete intersection of the given divisors.
    Ci {
        ambient: Box<SpaceSpec>,
        divisors: Vec<String>,
    },
    /// Double cover branched along `branch`.
    DoubleCover {
        base: Box<SpaceSpec>,
        branch: String,
    },
}

#[derive(Clone, Debug)]
enum Kind {
    Proj { n: u32 },
    Abstract { degree: Rational },
    Product { factors: Vec<(Space, usize)> },
    BlowupPoints { base: Box<Space>, count: usize },
    Bundle { base: Box<Space>, chern: Vec<Poly> },
    Ci { ambient: Box<Space>, divisors: Vec<Poly> },
    DoubleCover { base: Box<Space> },
}

/// A built space.
#[derive(Clone, Debug)]
pub struct Space {
    names: Vec<String>,
    dim: u32,
    kind: Kind,
    c1: Poly,
    ch2: Option<Poly>,
}

impl Space {
    pub fn build(spec: &SpaceSpec) -> Result<Space> {
        match spec {
            SpaceSpec::Proj { n, var } => {
                if *n == 0 {
                    return Err(Error::InvalidInput("P^0 is a point".into()));
                }
                let names = vec![var.clone().unwrap_or_else(|| "h".into())];
                let h = Poly::var(1, 0);
                Ok(Space {
                    names,
                    dim: *n,
                    kind: Kind::Proj { n: *n },
                    c1: h.scale(&int(*n as i64 + 1)),
                    ch2: Some(h.pow(2)?.scale(&rat(*n as i64 + 1, 2))),
                })
            }
            SpaceSpec::Quadric { n, var } => {
                let v = var.clone().unwrap_or_else(|| "h".into());
                Space::build(&SpaceSpec::Ci {
                    ambient: Box::new(SpaceSpec::Proj { n: n + 1, var: Some(v.clone()) }),
                    divisors: vec![format!("2*{v}")],
                })
            }
            SpaceSpec::Abstract { dim, var, degree, c1, ch2 } => {
                let names = vec![var.clone()];
                let c1 = parse_poly(c1, &names)?;
                let ch2 = ch2.as_ref().map(|s| parse_poly(s, &names)).transpose()?;
                Ok(Space { names, dim: *dim, kind: Kind::Abstract { degree: degree.clone() }, c1, ch2 })
            }
            SpaceSpec::Product(parts) => {
                if parts.is_empty() {
                    return Err(Error::InvalidInput("empty product".into()));
                }
                let built = parts.iter().map(Space::build).collect::<Result<Vec<_>>>()?;
                let mut names: Vec<String> = Vec::new();
                for b in &built {
                    for nm in &b.names {
                        if names.contains(nm) {
                            return Err(Error::InvalidInput(format!("generator `{nm}` repeated in product")));
                        }
                        names.push(nm.clone());
                    }
                }
                let total = names.len();
                let mut c1 = Poly::zero(total);
                let mut ch2 = Some(Poly::zero(total));
                let mut factors = Vec::new();
                let mut off = 0;
                for b in built {
                    c1 = c1.add(&b.c1.embed(total, off))?;
                    ch2 = match (ch2, &b.ch2) {
                        (Some(a), Some(x)) => Some(a.add(&x.embed(total, off))?),
                        _ => None,
                    };
                    let w = b.names.len();
                    factors.push((b, off));
                    off += w;
                }
                let dim = factors.iter().map(|(b, _)| b.dim).sum();
                Ok(Space { names, dim, kind: Kind::Product { factors }, c1, ch2 })
            }
            SpaceSpec::BlowupPoints { base, count, prefix } => {
                let base = Space::build(base)?;
                let p = prefix.clone().unwrap_or_else(|| "E".into());
                let m = *count as usize;
                let mut names = base.names.clone();
                for i in 0..m {
                    let nm = if m == 1 { p.clone() } else { format!("{p}{}", i + 1) };
                    if names.contains(&nm) {
                        return Err(Error::InvalidInput(format!("generator `{nm}` repeated")));
                    }
                    names.push(nm);
                }
                let total = names.len();
                let nb = base.names.len();
                let n = base.dim as i64;
                let mut c1 = base.c1.embed(total, 0);
                let mut ch2 = base.ch2.as_ref().map(|x| x.embed(total, 0));
                for i in 0..m {
                    let e = Poly::var(total, nb + i);
                    c1 = c1.sub(&e.scale(&int(n - 1)))?;
                    ch2 = ch2.map(|x| x.add(&e.pow(2)?.scale(&rat(n + 1, 2)))).transpose()?;
                }
                Ok(Space { names, dim: base.dim, kind: Kind::BlowupPoints { base: Box::new(base), count: m }, c1, ch2 })
            }
            SpaceSpec::Bundle { base, chern, split, var } => {
                let base = Space::build(base)?;
                let bn = &base.names;
                let chern: Vec<Poly> = match (chern, split) {
                    (Some(c), None) => c.iter().map(|s| parse_poly(s, bn)).collect::<Result<_>>()?,
                    (None, Some(ls)) => {
                        let ls: Vec<Poly> = ls.iter().map(|s| parse_poly(s, bn)).collect::<Result<_>>()?;
                        let nb = bn.len();
                        // Elementary symmetric functions of the summands.
                        let mut e = vec![Poly::one(nb)];
                        for l in &ls {
                            let mut next = vec![Poly::zero(nb); e.len() + 1];
                            for (i, ei) in e.iter().enumerate() {
                                next[i] = next[i].add(ei)?;
                                next[i + 1] = next[i + 1].add(&ei.mul(l)?)?;
                            }
                            e = next;
                        }
                        e.into_iter().skip(1).collect()
                    }
                    _ => return Err(Error::InvalidInput("bundle needs exactly one of `chern` or `split`".into())),
                };
                let r = chern.len();
                if r < 2 {
                    return Err(Error::InvalidInput("bundle rank must be at least 2".into()));
                }
                let mut names = bn.clone();
                let v = var.clone().unwrap_or_else(|| "xi".into());
                if names.contains(&v) {
                    return Err(Error::InvalidInput(format!("generator `{v}` repeated")));
                }
                names.push(v);
                let total = names.len();
                let xi = Poly::var(total, total - 1);
                let c1e = chern[0].embed(total, 0);
                let c2e = chern[1].embed(total, 0);
                let ch2e = c1e.pow(2)?.scale(&rat(1, 2)).sub(&c2e)?;
                let c1 = base.c1.embed(total, 0).sub(&c1e)?.add(&xi.scale(&int(r as i64)))?;
                let ch2 = base
                    .ch2
                    .as_ref()
                    .map(|b| -> Result<Poly> { b.embed(total, 0).add(&ch2e)?.sub(&c1e.mul(&xi)?)?.add(&xi.pow(2)?.scale(&rat(r as i64, 2))) })
                    .transpose()?;
                let dim = base.dim + r as u32 - 1;
                Ok(Space { names, dim, kind: Kind::Bundle { base: Box::new(base), chern }, c1, ch2 })
            }
            SpaceSpec::Ci { ambient, divisors } => {
                let amb = Space::build(ambient)?;
                let ds: Vec<Poly> = divisors.iter().map(|s| parse_poly(s, &amb.names)).collect::<Result<_>>()?;
                if ds.len() as u32 >= amb.dim {
                    return Err(Error::InvalidInput("too many divisors".into()));
                }
                let mut c1 = amb.c1.clone();
                let mut ch2 = amb.ch2.clone();
                for d in &ds {
                    if !d.is_homogeneous_of(1) {
                        return Err(Error::InvalidInput("divisors must be linear in the generators".into()));
                    }
                    c1 = c1.sub(d)?;
                    ch2 = ch2.map(|x| x.sub(&d.pow(2)?.scale(&rat(1, 2)))).transpose()?;
                }
                Ok(Space {
                    names: amb.names.clone(),
                    dim: amb.dim - ds.len() as u32,
                    kind: Kind::Ci { ambient: Box::new(amb), divisors: ds },
                    c1,
                    ch2,
                })
            }
            SpaceSpec::DoubleCover { base, branch } => {
                let base = Space::build(base)?;
                let b = parse_poly(branch, &base.names)?;
                if !b.is_homogeneous_of(1) {
                    return Err(Error::InvalidInput("branch divisor must be linear".into()));
                }
                let c1 = base.c1.sub(&b.scale(&rat(1, 2)))?;
                let ch2 = base.ch2.as_ref().map(|x| x.sub(&b.pow(2)?.scale(&rat(3, 8)))).transpose()?;
                Ok(Space { names: base.names.clone(), dim: base.dim, kind: Kind::DoubleCover { base: Box::new(base) }, c1, ch2 })
            }
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn c1(&self) -> &Poly {
        &self.c1
    }

    pub fn ch2(&self) -> Result<&Poly> {
        self.ch2.as_ref().ok_or_else(|| Error::InvalidInput("ch2 of this space is not known".into()))
    }

    pub fn parse(&self, s: &str) -> Result<Poly> {
        parse_poly(s, &self.names)
    }

    /// Degree of the top-dimensional part of `p`.
    pub fn integrate(&self, p: &Poly) -> Result<Rational> {
        if p.nvars() != self.names.len() {
            return Err(Error::InvalidInput("polynomial over the wrong generators".into()));
        }
        let top = p.part(self.dim);
        match &self.kind {
            Kind::Proj { n } => Ok(top.terms().filter(|(e, _)| e[0] == *n).map(|(_, c)| c.clone()).sum()),
            Kind::Abstract { degree } => Ok(top.terms().map(|(_, c)| c * degree).sum()),
            Kind::Product { factors } => {
                let mut total = Rational::zero();
                for (e, c) in top.terms() {
                    let mut v = c.clone();
                    for (f, off) in factors {
                        let sub = &e[*off..off + f.names.len()];
                        let mono = monomial(sub);
                        v *= f.integrate(&mono)?;
                        if v.is_zero() {
                            break;
                        }
                    }
                    total += v;
                }
                Ok(total)
            }
            Kind::BlowupPoints { base, count } => {
                let nb = base.names.len();
                let mut total = Rational::zero();
                for (e, c) in top.terms() {
                    let ex = &e[nb..nb + count];
                    let nonzero: Vec<usize> = (0..*count).filter(|&i| ex[i] > 0).collect();
                    if nonzero.is_empty() {
                        total += c * base.integrate(&monomial(&e[..nb]))?;
                    } else if nonzero.len() == 1 && e[..nb].iter().all(|&x| x == 0) {
                        let sign = if (self.dim - 1).is_multiple_of(2) { int(1) } else { int(-1) };
                        total += c * sign;
                    }
                }
                Ok(total)
            }
            Kind::Bundle { base, chern } => {
                let nb = base.names.len();
                let r = chern.len();
                let mut total = Rational::zero();
                let max_xi = top.terms().map(|(e, _)| e[nb]).max().unwrap_or(0) as usize;
                // reductions[j][t]: coefficient of xi^t in xi^j.
                let mut red: Vec<Vec<Poly>> = Vec::new();
                let mut cur: Vec<Poly> = (0..r).map(|t| if t == 0 { Poly::one(nb) } else { Poly::zero(nb) }).collect();
                for _ in 0..=max_xi {
                    red.push(cur.clone());
                    let top_c = cur[r - 1].clone();
                    let mut next = vec![Poly::zero(nb); r];
                    next[1..r].clone_from_slice(&cur[..(r - 1)]);
                    for (i, ci) in chern.iter().enumerate() {
                        let i = i + 1;
                        let sign = if i % 2 == 1 { int(1) } else { int(-1) };
                        next[r - i] = next[r - i].add(&top_c.mul(ci)?.scale(&sign))?;
                    }
                    cur = next;
                }
                for (e, c) in top.terms() {
                    let b = monomial(&e[..nb]);
                    let coef = &red[e[nb] as usize][r - 1];
                    total += c * base.integrate(&b.mul(coef)?)?;
                }
                Ok(total)
            }
            Kind::Ci { ambient, divisors } => {
                let mut q = p.clone();
                for d in divisors {
                    q = q.mul(d)?;
                }
                ambient.integrate(&q)
            }
            Kind::DoubleCover { base } => Ok(base.integrate(p)? * int(2)),
        }
    }

    /// ∫ ch2 · cycle.
    pub fn pair_ch2(&self, cycle: &Poly) -> Result<Rational> {
        self.integrate(&self.ch2()?.mul(cycle)?)
    }
}

fn monomial(e: &[u32]) -> Poly {
    let n = e.len();
    let mut p = Poly::one(n);
    for (i, &x) in e.iter().enumerate() {
        for _ in 0..x {
            p = p.mul(&Poly::var(n, i)).expect("same arity");
        }
    }
    p
}

/// A curve in a space, enough to know −K·C and its genus.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum CurveSpec {
    /// Complete intersection of dim−1 divisors; genus from adjunction.
    Ci { divisors: Vec<String> },
    /// Curve with given degrees against the generators (−K·C read off a linear c1).
    Degrees { degrees: Vec<(String, i64)>, genus: u32 },
}

/// (−K·C, genus).
pub fn curve_invariants(space: &Space, c: &CurveSpec) -> Result<(Rational, Rational)> {
    match c {
        CurveSpec::Ci { divisors } => {
            if divisors.len() as u32 + 1 != space.dim() {
                return Err(Error::InvalidInput("a curve needs dim - 1 divisors".into()));
            }
            let ds: Vec<Poly> = divisors.iter().map(|s| space.parse(s)).collect::<Result<_>>()?;
            let mut cls = Poly::one(space.names().len());
            let mut sum = Poly::zero(space.names().len());
            for d in &ds {
                cls = cls.mul(d)?;
                sum = sum.add(d)?;
            }
            let kc = space.integrate(&space.c1().mul(&cls)?)?;
            let two_g_minus_2 = space.integrate(&sum.sub(space.c1())?.mul(&cls)?)?;
            Ok((kc, (two_g_minus_2 + int(2)) / int(2)))
        }
        CurveSpec::Degrees { degrees, genus } => {
            if !space.c1().is_homogeneous_of(1) {
                return Err(Error::InvalidInput("c1 is not linear".into()));
            }
            let mut kc = Rational::zero();
            for (name, d) in degrees {
                let i = space.names().iter().position(|x| x == name).ok_or_else(|| Error::InvalidInput(format!("unknown generator `{name}`")))?;
                kc += space.c1().linear_coeff(i) * int(*d);
            }
            Ok((kc, int(*genus as i64)))
        }
    }
}

/// Integrates `cycle` against the product of the given classes; convenience for tests.
pub fn integrate_str(space: &Space, s: &str) -> Result<Rational> {
    space.integrate(&space.parse(s)?)
}

impl Space {
    /// The unit polynomial in this space's generators.
    pub fn one(&self) -> Poly {
        Poly::one(self.names.len())
    }

    /// Drops monomials that vanish in the ring for degree reasons.
    pub fn reduce(&self, p: &Poly) -> Result<Poly> {
        let mut out = Poly::zero(p.nvars());
        for (e, c) in p.terms() {
            if !self.monomial_vanishes(e) {
                out = out.add(&monomial(e).scale(c))?;
            }
        }
        Ok(out)
    }

    fn monomial_vanishes(&self, e: &[u32]) -> bool {
        if e.iter().sum::<u32>() > self.dim {
            return true;
        }
        match &self.kind {
            Kind::Proj { n } => e[0] > *n,
            Kind::Product { factors } => factors.iter().any(|(f, off)| f.monomial_vanishes(&e[*off..off + f.names.len()])),
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(j: &str) -> Space {
        Space::build(&serde_json::from_str(j).unwrap()).unwrap()
    }

    #[test]
    fn projective_space() {
        let p3 = sp(r#"{"proj":{"n":3}}"#);
        assert_eq!(integrate_str(&p3, "h^3").unwrap(), int(1));
        assert_eq!(p3.pair_ch2(&p3.parse("h").unwrap()).unwrap(), int(2));
    }

    #[test]
    fn quadric_pairings() {
        let q = sp(r#"{"quadric":{"n":3}}"#);
        assert_eq!(integrate_str(&q, "h^3").unwrap(), int(2));
        assert_eq!(q.pair_ch2(&q.parse("h").unwrap()).unwrap(), int(1));
    }

    #[test]
    fn del_pezzo_chain() {
        for m in 0..=8u32 {
            let s =
                if m == 0 { sp(r#"{"proj":{"n":2}}"#) } else { sp(&format!(r#"{{"blowup_points":{{"base":{{"proj":{{"n":2}}}},"count":{m}}}}}"#)) };
            let d = 9 - m as i64;
            assert_eq!(s.pair_ch2(&s.one()).unwrap(), rat(3 * (d - 8), 2));
            assert_eq!(s.integrate(&s.c1().pow(2).unwrap()).unwrap(), int(d));
        }
    }

    #[test]
    fn bundle_over_p2() {
        // V7 = P(O + O(1)) over P2 has (−K)^3 = 56.
        let v7 = sp(r#"{"bundle":{"base":{"proj":{"n":2}},"split":["0","h"]}}"#);
        assert_eq!(v7.integrate(&v7.c1().pow(3).unwrap()).unwrap(), int(56));
        // P(T_P2) has (−K)^3 = 48 and ch2 = 0.
        let w = sp(r#"{"bundle":{"base":{"proj":{"n":2}},"chern":["3*h","3*h^2"]}}"#);
        assert_eq!(w.integrate(&w.c1().pow(3).unwrap()).unwrap(), int(48));
        for cyc in ["h", "xi"] {
            assert_eq!(w.pair_ch2(&w.parse(cyc).unwrap()).unwrap(), int(0));
        }
    }

    #[test]
    fn product_and_ci() {
        let w = sp(r#"{"ci":{"ambient":{"product":[{"proj":{"n":2,"var":"h1"}},{"proj":{"n":2,"var":"h2"}}]},"divisors":["h1+h2"]}}"#);
        assert_eq!(w.dim(), 3);
        assert_eq!(w.integrate(&w.c1().pow(3).unwrap()).unwrap(), int(48));
    }

    #[test]
    fn double_cover_doubles() {
        let x = sp(r#"{"double_cover":{"base":{"proj":{"n":3}},"branch":"4*h"}}"#);
        assert_eq!(integrate_str(&x, "h^3").unwrap(), int(2));
        assert_eq!(x.integrate(&x.c1().pow(3).unwrap()).unwrap(), int(16));
    }

    #[test]
    fn curve_adjunction() {
        let p3 = sp(r#"{"proj":{"n":3}}"#);
        let (kc, g) = curve_invariants(&p3, &CurveSpec::Ci { divisors: vec!["3*h".into(), "3*h".into()] }).unwrap();
        assert_eq!(kc, int(36));
        assert_eq!(g, int(10));
        let (kc, g) = curve_invariants(&p3, &CurveSpec::Degrees { degrees: vec![("h".into(), 3)], genus: 0 }).unwrap();
        assert_eq!((kc, g), (int(12), int(0)));
    }
}
