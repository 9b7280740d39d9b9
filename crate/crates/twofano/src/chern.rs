//! Truncated Chern characters of ambient spaces and tautological bundles.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{int, rat, AmbientDescriptor, GradedClass, Label, Partition, Rational};
use crate::error::{Error, Result};
use crate::ring;
use crate::schubert::{self, SchubertRing};

pub const TRUNCATION: u32 = 3;

/// rank + ch1 + ch2 + ch3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernCharacter {
    #[serde(with = "crate::algebra::rational_str")]
    pub rank: Rational,
    pub graded: GradedClass,
}

impl ChernCharacter {
    /// Builds a character, dropping codimension 0 and anything above the truncation.
    pub fn new(rank: Rational, graded: GradedClass) -> Self {
        let mut g = graded.truncate(TRUNCATION);
        let c0 = g.component(0);
        g = g.sub(&c0).expect("same ambient");
        ChernCharacter { rank, graded: g }
    }

    pub fn zero(amb: AmbientDescriptor) -> Self {
        ChernCharacter { rank: Rational::zero(), graded: GradedClass::zero(amb) }
    }

    pub fn ambient(&self) -> &AmbientDescriptor {
        &self.graded.ambient
    }

    pub fn ch(&self, i: u32) -> GradedClass {
        self.graded.component(i)
    }

    pub fn c1(&self) -> GradedClass {
        self.ch(1)
    }

    pub fn ch2(&self) -> GradedClass {
        self.ch(2)
    }

    pub fn add(&self, o: &ChernCharacter) -> Result<ChernCharacter> {
        Ok(ChernCharacter { rank: &self.rank + &o.rank, graded: self.graded.add(&o.graded)? })
    }

    pub fn sub(&self, o: &ChernCharacter) -> Result<ChernCharacter> {
        Ok(ChernCharacter { rank: &self.rank - &o.rank, graded: self.graded.sub(&o.graded)? })
    }

    /// The character as a single class including the codimension-0 rank term.
    pub fn total(&self) -> GradedClass {
        self.graded.add(&ring::unit(self.ambient()).scale(&self.rank)).expect("same ambient")
    }

    pub fn from_total(x: &GradedClass) -> Self {
        let rank = x.component(0).terms().map(|(_, c)| c.clone()).fold(Rational::zero(), |a, b| a + b);
        ChernCharacter::new(rank, x.clone())
    }

    /// ch(E ⊗ F), truncated.
    pub fn multiply(&self, o: &ChernCharacter) -> Result<ChernCharacter> {
        Ok(ChernCharacter::from_total(&ring::multiply(&self.total(), &o.total())?))
    }

    /// ch(E*): ch_i changes sign for odd i.
    pub fn dual(&self) -> ChernCharacter {
        let mut g = GradedClass::zero(self.ambient().clone());
        for i in 1..=TRUNCATION {
            let part = self.ch(i);
            let part = if i % 2 == 1 { part.scale(&-Rational::one()) } else { part };
            g = g.add(&part).expect("same ambient");
        }
        ChernCharacter { rank: self.rank.clone(), graded: g }
    }
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "space: {}", self.ambient())?;
        writeln!(f, "rank: {}", self.rank)?;
        for i in 1..=TRUNCATION {
            if i > self.ambient().dimension() {
                break;
            }
            writeln!(f, "ch{i}: {}", self.ch(i))?;
        }
        Ok(())
    }
}

fn factorial(k: u32) -> i64 {
    (1..=k as i64).product()
}

fn sched(amb: &AmbientDescriptor, terms: &[(&[u32], Rational)]) -> Result<GradedClass> {
    let mut g = GradedClass::zero(amb.clone());
    let AmbientDescriptor::Grassmannian { k, n } = amb else { unreachable!("grassmannian only") };
    for (parts, c) in terms {
        let p = Partition::new(parts.to_vec())?;
        if p.fits_box(*k, n - k) {
            g.add_term(Label::Schubert(p), c.clone())?;
        }
    }
    Ok(g)
}

pub fn ch_proj_space(n: u32) -> Result<ChernCharacter> {
    let amb = AmbientDescriptor::proj_space(n)?;
    let terms = (1..=TRUNCATION.min(n)).map(|k| (Label::Power(k), rat(n as i64 + 1, factorial(k))));
    Ok(ChernCharacter::new(int(n as i64), GradedClass::from_terms(amb, terms)?))
}

/// Formal character on the smooth locus: ch_k = Σ a_i^k / k! H^k.
pub fn ch_weighted_proj(weights: &[u32]) -> Result<ChernCharacter> {
    let amb = AmbientDescriptor::weighted_proj(weights.to_vec())?;
    let dim = amb.dimension();
    let terms = (1..=TRUNCATION.min(dim)).map(|k| {
        let s: i64 = weights.iter().map(|&a| (a as i64).pow(k)).sum();
        (Label::Power(k), rat(s, factorial(k)))
    });
    Ok(ChernCharacter::new(int(dim as i64), GradedClass::from_terms(amb, terms)?))
}

pub fn ch_grassmannian(k: u32, n: u32) -> Result<ChernCharacter> {
    let amb = AmbientDescriptor::grassmannian(k, n)?;
    let (k, n) = (k as i64, n as i64);
    let g = sched(
        &amb,
        &[
            (&[1], int(n)),
            (&[2], rat(n + 2 - 2 * k, 2)),
            (&[1, 1], rat(-(n - 2 - 2 * k), 2)),
            (&[3], rat(n - 2 * k, 6)),
            (&[2, 1], rat(-(n - 2 * k), 6)),
            (&[1, 1, 1], rat(n - 2 * k, 6)),
        ],
    )?;
    Ok(ChernCharacter::new(int(k * (n - k)), g))
}

pub fn ch_s_dual(k: u32, n: u32) -> Result<ChernCharacter> {
    let amb = AmbientDescriptor::grassmannian(k, n)?;
    let g =
        sched(&amb, &[(&[1], int(1)), (&[2], rat(1, 2)), (&[1, 1], rat(-1, 2)), (&[3], rat(1, 6)), (&[2, 1], rat(-1, 6)), (&[1, 1, 1], rat(1, 6))])?;
    Ok(ChernCharacter::new(int(k as i64), g))
}

pub fn ch_wedge2_s_dual(k: u32, n: u32) -> Result<ChernCharacter> {
    let amb = AmbientDescriptor::grassmannian(k, n)?;
    let k = k as i64;
    let g = sched(
        &amb,
        &[
            (&[1], int(k - 1)),
            (&[2], rat(k - 1, 2)),
            (&[1, 1], rat(-(k - 3), 2)),
            (&[3], rat(k - 1, 6)),
            (&[2, 1], rat(-(k - 4), 6)),
            (&[1, 1, 1], rat(k - 7, 6)),
        ],
    )?;
    Ok(ChernCharacter::new(int(k * (k - 1) / 2), g))
}

pub fn ch_sym2_s_dual(k: u32, n: u32) -> Result<ChernCharacter> {
    let amb = AmbientDescriptor::grassmannian(k, n)?;
    let k = k as i64;
    let g = sched(
        &amb,
        &[
            (&[1], int(k + 1)),
            (&[2], rat(k + 3, 2)),
            (&[1, 1], rat(-(k + 1), 2)),
            (&[3], rat(k + 7, 6)),
            (&[2, 1], rat(-(k + 4), 6)),
            (&[1, 1, 1], rat(k + 1, 6)),
        ],
    )?;
    Ok(ChernCharacter::new(int(k * (k + 1) / 2), g))
}

/// Orthogonal Grassmannian OG(k,n) as a formal σ-expansion on G(k,n).
pub fn ch_og(k: u32, n: u32) -> Result<ChernCharacter> {
    let amb = AmbientDescriptor::grassmannian(k, n)?;
    let (k, n) = (k as i64, n as i64);
    let m = n - 3 * k;
    let g = sched(
        &amb,
        &[
            (&[1], int(n - k - 1)),
            (&[2], rat(m - 1, 2)),
            (&[1, 1], rat(-(m - 3), 2)),
            (&[3], rat(m - 7, 6)),
            (&[2, 1], rat(-(m - 4), 6)),
            (&[1, 1, 1], rat(m - 1, 6)),
        ],
    )?;
    Ok(ChernCharacter::new(rat(k * (2 * n - 3 * k - 1), 2), g))
}

/// Symplectic Grassmannian SG(k,n), n even, as a formal σ-expansion on G(k,n).
pub fn ch_sg(k: u32, n: u32) -> Result<ChernCharacter> {
    if n % 2 == 1 {
        return Err(Error::InvalidAmbient(format!("SG({k},{n}) needs n even")));
    }
    let amb = AmbientDescriptor::grassmannian(k, n)?;
    let (k, n) = (k as i64, n as i64);
    let m = n - 3 * k;
    let g = sched(
        &amb,
        &[
            (&[1], int(n - k + 1)),
            (&[2], rat(m + 3, 2)),
            (&[1, 1], rat(-(m + 1), 2)),
            (&[3], rat(m + 1, 6)),
            (&[2, 1], rat(-(m + 4), 6)),
            (&[1, 1, 1], rat(m + 7, 6)),
        ],
    )?;
    Ok(ChernCharacter::new(rat(k * (2 * n - 3 * k + 1), 2), g))
}

/// Copies the codimension <= 2 part of a σ-expansion on G(k,2k) onto OG+ or SG.
fn restrict_sigma(x: &ChernCharacter, target: AmbientDescriptor) -> Result<ChernCharacter> {
    let mut g = GradedClass::zero(target);
    for (l, c) in x.graded.terms() {
        if l.codim() <= 2 {
            g.add_term(l.clone(), c.clone())?;
        }
    }
    Ok(ChernCharacter::new(x.rank.clone(), g))
}

/// OG+(k,2k) character in the σ-basis (codimension <= 2).
pub fn ch_og_plus_sigma(k: u32) -> Result<ChernCharacter> {
    let amb = AmbientDescriptor::og_plus(k)?;
    let mut x = restrict_sigma(&ch_og(k, 2 * k)?, amb)?;
    x.rank = int((k * (k - 1) / 2) as i64);
    Ok(x)
}

/// OG+(k,2k) character with σ1 = 2H and σ2 = σ11 = 2H^2.
pub fn ch_og_plus(k: u32) -> Result<ChernCharacter> {
    let s = ch_og_plus_sigma(k)?;
    Ok(ChernCharacter::new(s.rank.clone(), schubert::reduce_to_h(&s.graded)?))
}

/// SG(k,2k) character in the σ-basis (codimension <= 2).
pub fn ch_sg_sigma(k: u32) -> Result<ChernCharacter> {
    restrict_sigma(&ch_sg(k, 2 * k)?, AmbientDescriptor::sg(k)?)
}

/// SG(k,2k) character with σ1 = H and σ2 = σ11 = H^2/2.
pub fn ch_sg_reduced(k: u32) -> Result<ChernCharacter> {
    let s = ch_sg_sigma(k)?;
    Ok(ChernCharacter::new(s.rank.clone(), schubert::reduce_to_h(&s.graded)?))
}

/// ch of a Picard rank one variety with b4 = 1: c1 = index*H, ch2 = a*H^2.
pub fn ch_rank_one_b4(name: &str, dim: u32, a: Rational, index: u32) -> Result<ChernCharacter> {
    let amb = AmbientDescriptor::rank_one_b4(name, dim, a.clone())?;
    let g = GradedClass::from_terms(amb, [(Label::Power(1), int(index as i64)), (Label::Power(2), a)])?;
    Ok(ChernCharacter::new(int(dim as i64), g))
}

/// G2/P2: dimension 5, index 3, ch2 = H^2/2.
pub fn ch_g2p2() -> Result<ChernCharacter> {
    let g = GradedClass::from_terms(AmbientDescriptor::G2P2, [(Label::Power(1), int(3)), (Label::Power(2), rat(1, 2))])?;
    Ok(ChernCharacter::new(int(5), g))
}

pub fn ch_product_proj(dims: &[u32]) -> Result<ChernCharacter> {
    let amb = AmbientDescriptor::product_proj(dims.to_vec())?;
    let mut g = GradedClass::zero(amb.clone());
    for (i, &n) in dims.iter().enumerate() {
        for k in 1..=TRUNCATION.min(n) {
            let mut e = vec![0; dims.len()];
            e[i] = k;
            g.add_term(Label::Mono(e), rat(n as i64 + 1, factorial(k)))?;
        }
    }
    Ok(ChernCharacter::new(int(dims.iter().sum::<u32>() as i64), g))
}

/// Parses `proj:n`, `wproj:a0,a1,...`, `grassmannian:k,n`, `og:k,n`, `ogplus:k`, `sg:k,n`, `g2p2`, `product:n1,n2,...`.
pub fn ch_from_space_spec(spec: &str) -> Result<Vec<ChernCharacter>> {
    let (kind, args) = spec.split_once(':').unwrap_or((spec, ""));
    let nums = || -> Result<Vec<u32>> {
        if args.trim().is_empty() {
            return Ok(Vec::new());
        }
        args.split(',').map(|s| s.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad number in `{spec}`")))).collect()
    };
    let want = |v: &Vec<u32>, n: usize| -> Result<()> {
        if v.len() == n {
            Ok(())
        } else {
            Err(Error::Parse(format!("`{spec}` needs {n} argument(s)")))
        }
    };
    let v = nums()?;
    match kind {
        "proj" => {
            want(&v, 1)?;
            Ok(vec![ch_proj_space(v[0])?])
        }
        "wproj" => Ok(vec![ch_weighted_proj(&v)?]),
        "grassmannian" => {
            want(&v, 2)?;
            Ok(vec![ch_grassmannian(v[0], v[1])?])
        }
        "og" => {
            want(&v, 2)?;
            let mut out = vec![ch_og(v[0], v[1])?];
            if v[1] == 2 * v[0] {
                out.push(ch_og_plus(v[0])?);
            }
            Ok(out)
        }
        "ogplus" => {
            want(&v, 1)?;
            Ok(vec![ch_og_plus_sigma(v[0])?, ch_og_plus(v[0])?])
        }
        "sg" => {
            want(&v, 2)?;
            let mut out = vec![ch_sg(v[0], v[1])?];
            if v[1] == 2 * v[0] {
                out.push(ch_sg_reduced(v[0])?);
            }
            Ok(out)
        }
        "g2p2" => Ok(vec![ch_g2p2()?]),
        "product" => Ok(vec![ch_product_proj(&v)?]),
        _ => Err(Error::Parse(format!("unknown space `{kind}`"))),
    }
}

/// Polynomials in Chern roots x_1..x_k with rational coefficients.
pub type RootPoly = BTreeMap<Vec<u32>, Rational>;

fn rp_mul(a: &RootPoly, b: &RootPoly) -> RootPoly {
    let mut out = RootPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn rp_add(a: &mut RootPoly, b: &RootPoly, s: &Rational) {
    for (e, c) in b {
        *a.entry(e.clone()).or_insert_with(Rational::zero) += c * s;
    }
    a.retain(|_, c| !c.is_zero());
}

fn rp_linear(k: usize, coeffs: &[(usize, i64)]) -> RootPoly {
    let mut out = RootPoly::new();
    for &(i, c) in coeffs {
        let mut e = vec![0; k];
        e[i] = 1;
        *out.entry(e).or_insert_with(Rational::zero) += int(c);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn rp_pow(a: &RootPoly, m: u32, k: usize) -> RootPoly {
    let mut acc: RootPoly = [(vec![0; k], Rational::one())].into_iter().collect();
    for _ in 0..m {
        acc = rp_mul(&acc, a);
    }
    acc
}

fn elementary(k: usize, i: usize) -> RootPoly {
    let mut out = RootPoly::new();
    fn rec(start: usize, left: usize, k: usize, cur: &mut Vec<u32>, out: &mut RootPoly) {
        if left == 0 {
            out.insert(cur.clone(), Rational::one());
            return;
        }
        for j in start..k {
            cur[j] = 1;
            rec(j + 1, left - 1, k, cur, out);
            cur[j] = 0;
        }
    }
    rec(0, i, k, &mut vec![0; k], &mut out);
    out
}

/// Rewrites a symmetric polynomial in the Chern roots of S* as a class on G(k,n),
/// using c_i(S*) = σ_{1^i}.
pub fn symmetric_to_schubert(ring: &mut SchubertRing, f: &RootPoly) -> Result<GradedClass> {
    let k = ring.k() as usize;
    let mut f = f.clone();
    let mut out = GradedClass::zero(ring.ambient());
    let e_cache: Vec<RootPoly> = (0..=k).map(|i| elementary(k, i)).collect();
    while let Some((lead, c)) = f.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput("polynomial is not symmetric".into()));
        }
        let mut mono: RootPoly = [(vec![0; k], Rational::one())].into_iter().collect();
        let mut class = ring.one();
        for i in 1..=k {
            let m = lead[i - 1] - if i < k { lead[i] } else { 0 };
            mono = rp_mul(&mono, &rp_pow(&e_cache[i], m, k));
            if m > 0 {
                let s = ring.sigma(&vec![1; i]).unwrap_or_else(|_| GradedClass::zero(ring.ambient()));
                let sp = ring.power(&s, m)?;
                class = ring.multiply(&class, &sp)?;
            }
        }
        rp_add(&mut f, &mono, &-c.clone());
        out = out.add(&class.scale(&c))?;
    }
    Ok(out)
}

/// Bundles built from S* whose Chern roots are linear in the roots of S*.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tautological {
    SDual,
    Wedge2SDual,
    Sym2SDual,
}

fn roots_of(b: Tautological, k: usize) -> Vec<RootPoly> {
    match b {
        Tautological::SDual => (0..k).map(|i| rp_linear(k, &[(i, 1)])).collect(),
        Tautological::Wedge2SDual => {
            let mut v = Vec::new();
            for i in 0..k {
                for j in i + 1..k {
                    v.push(rp_linear(k, &[(i, 1), (j, 1)]));
                }
            }
            v
        }
        Tautological::Sym2SDual => {
            let mut v = Vec::new();
            for i in 0..k {
                for j in i..k {
                    v.push(rp_linear(k, &[(i, 1), (j, 1)]));
                }
            }
            v
        }
    }
}

/// ch through codimension 3 computed from Chern roots.
pub fn splitting_ch(b: Tautological, k: u32, n: u32) -> Result<ChernCharacter> {
    let mut ring = SchubertRing::new(k, n)?;
    let roots = roots_of(b, k as usize);
    let mut g = GradedClass::zero(ring.ambient());
    for d in 1..=TRUNCATION {
        let mut p = RootPoly::new();
        for r in &roots {
            rp_add(&mut p, &rp_pow(r, d, k as usize), &rat(1, factorial(d)));
        }
        g = g.add(&symmetric_to_schubert(&mut ring, &p)?)?;
    }
    Ok(ChernCharacter::new(int(roots.len() as i64), g))
}

/// Top Chern class (product of the roots).
pub fn splitting_top_chern(b: Tautological, k: u32, n: u32) -> Result<GradedClass> {
    let mut ring = SchubertRing::new(k, n)?;
    let kk = k as usize;
    let mut p: RootPoly = [(vec![0; kk], Rational::one())].into_iter().collect();
    for r in roots_of(b, kk) {
        p = rp_mul(&p, &r);
    }
    symmetric_to_schubert(&mut ring, &p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> Label {
        Label::Schubert(Partition::new(v.to_vec()).unwrap())
    }

    #[test]
    fn projective_examples() {
        assert_eq!(ch_proj_space(3).unwrap().ch2().coeff(&Label::Power(2)), int(2));
        assert_eq!(ch_proj_space(2).unwrap().ch2().coeff(&Label::Power(2)), rat(3, 2));
        let p1 = ch_proj_space(1).unwrap();
        assert_eq!(p1.c1().coeff(&Label::Power(1)), int(2));
        assert!(p1.ch2().is_zero());
    }

    #[test]
    fn weighted_examples() {
        for n in 3..12u32 {
            let mut w = vec![2];
            w.extend(std::iter::repeat_n(1, n as usize));
            assert_eq!(ch_weighted_proj(&w).unwrap().ch2().coeff(&Label::Power(2)), rat(n as i64 + 4, 2));
            let mut w = vec![3, 2];
            w.extend(std::iter::repeat_n(1, n as usize - 1));
            assert_eq!(ch_weighted_proj(&w).unwrap().ch2().coeff(&Label::Power(2)), rat(n as i64 + 12, 2));
        }
        assert!(ch_weighted_proj(&[2, 4]).is_err());
    }

    #[test]
    fn grassmannian_examples() {
        let g = ch_grassmannian(2, 5).unwrap();
        assert_eq!(g.rank, int(6));
        assert_eq!(g.ch2().to_string(), "3/2*[2] + 1/2*[1,1]");
        assert_eq!(ch_grassmannian(3, 6).unwrap().ch2().to_string(), "[2] + [1,1]");
        assert_eq!(ch_grassmannian(3, 7).unwrap().ch(3).to_string(), "1/6*[3] - 1/6*[2,1] + 1/6*[1,1,1]");
    }

    #[test]
    fn tautological_examples() {
        let w = ch_wedge2_s_dual(3, 7).unwrap();
        assert_eq!(w.c1().to_string(), "2*[1]");
        assert_eq!(w.ch2().to_string(), "[2]");
        let s2 = ch_sym2_s_dual(2, 6).unwrap();
        assert_eq!(s2.c1().to_string(), "3*[1]");
        assert_eq!(s2.ch2().to_string(), "5/2*[2] - 3/2*[1,1]");
        for k in 2..6 {
            assert_eq!(ch_wedge2_s_dual(k, 2 * k + 1).unwrap().rank, int((k * (k - 1) / 2) as i64));
            assert_eq!(ch_sym2_s_dual(k, 2 * k + 1).unwrap().rank, int((k * (k + 1) / 2) as i64));
        }
    }

    #[test]
    fn isotropic_examples() {
        for k in 2..7 {
            let sg = ch_sg_reduced(k).unwrap();
            assert_eq!(sg.ch2().to_string(), "1/2*H^2");
            assert_eq!(sg.c1().coeff(&Label::Power(1)), int(k as i64 + 1));
            let sigma = ch_sg_sigma(k).unwrap();
            assert_eq!(sigma.ch2().coeff(&s(&[2])), rat(3 - k as i64, 2));
            assert_eq!(sigma.ch2().coeff(&s(&[1, 1])), rat(k as i64 - 1, 2));
        }
        for k in 4..8 {
            let og = ch_og_plus(k).unwrap();
            assert_eq!(og.ch2().to_string(), "2*H^2");
            assert_eq!(og.c1().coeff(&Label::Power(1)), int(2 * (k as i64 - 1)));
            assert_eq!(og.rank, int((k * (k - 1) / 2) as i64));
        }
        for k in 2..6 {
            assert_eq!(ch_og(k, 2 * k + 1).unwrap().rank, int((k * (k + 1) / 2) as i64));
        }
    }

    #[test]
    fn rank_one_examples() {
        assert_eq!(ch_g2p2().unwrap().ch2().to_string(), "1/2*H^2");
        let og = ch_rank_one_b4("OG+(5,10)", 10, int(2), 8).unwrap();
        assert_eq!(og.ch2().to_string(), "2*H^2");
        assert!(ch_rank_one_b4("Y", 4, int(0), 2).unwrap().ch2().is_zero());
    }

    #[test]
    fn weighted_all_ones_is_projective() {
        for n in 1..10 {
            let a = ch_weighted_proj(&vec![1; n as usize + 1]).unwrap();
            let b = ch_proj_space(n).unwrap();
            let terms_a: Vec<_> = a.graded.terms().map(|(l, c)| (l.clone(), c.clone())).collect();
            let terms_b: Vec<_> = b.graded.terms().map(|(l, c)| (l.clone(), c.clone())).collect();
            assert_eq!(terms_a, terms_b);
            assert_eq!(a.rank, b.rank);
        }
    }

    #[test]
    fn space_spec_parsing() {
        let g = ch_from_space_spec("grassmannian:2,5").unwrap();
        assert_eq!(g[0].c1().to_string(), "5*[1]");
        assert!(ch_from_space_spec("proj:x").is_err());
        assert!(ch_from_space_spec("nope:1").is_err());
        assert_eq!(ch_from_space_spec("product:1,2").unwrap()[0].rank, int(3));
    }

    #[test]
    fn top_chern_of_wedge2_on_g37() {
        let c = splitting_top_chern(Tautological::Wedge2SDual, 3, 7).unwrap();
        assert_eq!(c.to_string(), "[2,1]");
    }
}
