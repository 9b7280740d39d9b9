//! Decision criteria for 2-Fano and weakly 2-Fano manifolds.
//!
//! Every classifier returns a [`Verdict`]: a status, the exact intersection
//! numbers it rests on, and the named rules that were applied.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{int, AmbientDescriptor, GradedClass, Label, Partition, Rational};
use crate::chern::{self, ChernCharacter};
use crate::constructions::{self as cons, SurfaceWitness};
use crate::error::{Error, Result};
use crate::ring;
use crate::schubert::SchubertRing;

/// Classification status. The non-open values are ordered by strength:
/// `TwoFano` implies weakly 2-Fano implies Fano.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FanoStatus {
    NotFano,
    NotWeakly,
    WeaklyNotTwoFano,
    TwoFano,
    Open,
}

impl FanoStatus {
    /// Position in the implication chain; `None` for `Open`.
    pub fn strength(self) -> Option<u8> {
        match self {
            FanoStatus::NotFano => Some(0),
            FanoStatus::NotWeakly => Some(1),
            FanoStatus::WeaklyNotTwoFano => Some(2),
            FanoStatus::TwoFano => Some(3),
            FanoStatus::Open => None,
        }
    }

    pub fn from_strength(s: u8) -> Option<FanoStatus> {
        [FanoStatus::NotFano, FanoStatus::NotWeakly, FanoStatus::WeaklyNotTwoFano, FanoStatus::TwoFano].get(s as usize).copied()
    }

    pub fn is_weakly(self) -> bool {
        matches!(self, FanoStatus::WeaklyNotTwoFano | FanoStatus::TwoFano)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FanoStatus::NotFano => "NotFano",
            FanoStatus::NotWeakly => "NotWeakly",
            FanoStatus::WeaklyNotTwoFano => "WeaklyNotTwoFano",
            FanoStatus::TwoFano => "TwoFano",
            FanoStatus::Open => "Open",
        }
    }

    /// Status from the sign of a class that is a positive multiple of an ample square.
    pub fn from_sign(x: &Rational) -> FanoStatus {
        if x.is_positive() {
            FanoStatus::TwoFano
        } else if x.is_zero() {
            FanoStatus::WeaklyNotTwoFano
        } else {
            FanoStatus::NotWeakly
        }
    }
}

impl fmt::Display for FanoStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FanoStatus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [FanoStatus::NotFano, FanoStatus::NotWeakly, FanoStatus::WeaklyNotTwoFano, FanoStatus::TwoFano, FanoStatus::Open]
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown status `{s}`")))
    }
}

/// A status with its evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: FanoStatus,
    pub witnesses: Vec<SurfaceWitness>,
    pub rule_chain: Vec<String>,
}

impl Verdict {
    pub fn new(status: FanoStatus) -> Self {
        Verdict { status, witnesses: Vec::new(), rule_chain: Vec::new() }
    }

    fn rule(mut self, r: impl Into<String>) -> Self {
        self.rule_chain.push(r.into());
        self
    }

    fn witness(mut self, w: SurfaceWitness) -> Self {
        self.witnesses.push(w);
        self
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "status: {}", self.status)?;
        for w in &self.witnesses {
            writeln!(f, "witness: {w}")?;
        }
        for r in &self.rule_chain {
            writeln!(f, "rule: {r}")?;
        }
        Ok(())
    }
}

fn check_surface_or_more(dim: i64) -> Result<()> {
    if dim >= 2 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("the complete intersection has dimension {dim}; need at least 2")))
    }
}

fn check_degrees(degrees: &[u32]) -> Result<()> {
    if degrees.contains(&0) {
        Err(Error::InvalidInput("degrees must be positive".into()))
    } else {
        Ok(())
    }
}

/// Verdict for a manifold whose ch2 is t·H² with H ample: the sign of t decides.
fn ample_square_verdict(c1_coeff: &Rational, t: &Rational, what: &str) -> Verdict {
    if !c1_coeff.is_positive() {
        return Verdict::new(FanoStatus::NotFano).witness(SurfaceWitness::new("c1 coefficient", c1_coeff.clone())).rule("fano: c1 is not positive");
    }
    Verdict::new(FanoStatus::from_sign(t))
        .witness(SurfaceWitness::new(format!("coefficient of {what} in ch2"), t.clone()))
        .rule(format!("ch2 is a multiple of {what}, which is positive on every surface, so its coefficient decides"))
}

/// Complete intersection of hypersurfaces of the given degrees in P^N.
pub fn classify_ci_proj(ambient_dim: u32, degrees: &[u32]) -> Result<Verdict> {
    check_degrees(degrees)?;
    check_surface_or_more(ambient_dim as i64 - degrees.len() as i64)?;
    let p = chern::ch_proj_space(ambient_dim)?;
    let amb = p.ambient().clone();
    let ds: Vec<GradedClass> = degrees.iter().map(|d| ring::multiple_of_hyperplane(&amb, &int(*d as i64))).collect::<Result<_>>()?;
    let x = cons::ci_ch(&p, &ds)?;
    let c1 = x.c1().coeff(&Label::Power(1));
    let t = x.ch2().coeff(&Label::Power(2));
    let mut v = ample_square_verdict(&c1, &t, "h^2");
    if v.status != FanoStatus::NotFano {
        let dim = ambient_dim - degrees.len() as u32;
        let h = ring::hyperplane(&amb, 0)?;
        let cyc = ring::power(&h, dim - 2)?;
        let cls = cons::ci_class(&amb, &ds)?;
        v = v.witness(SurfaceWitness::new(format!("ch2.h^{}", dim - 2), cons::pair(&[&x.ch2(), &cyc, &cls])?));
    }
    Ok(v)
}

/// Complete intersection in a weighted projective space. The character is formal
/// (valid on the smooth locus); only the signs of its coefficients are used.
pub fn classify_ci_weighted(weights: &[u32], degrees: &[u32]) -> Result<Verdict> {
    check_degrees(degrees)?;
    check_surface_or_more(weights.len() as i64 - 1 - degrees.len() as i64)?;
    let w = chern::ch_weighted_proj(weights)?;
    let amb = w.ambient().clone();
    let ds: Vec<GradedClass> = degrees.iter().map(|d| ring::multiple_of_hyperplane(&amb, &int(*d as i64))).collect::<Result<_>>()?;
    let x = cons::ci_ch(&w, &ds)?;
    Ok(ample_square_verdict(&x.c1().coeff(&Label::Power(1)), &x.ch2().coeff(&Label::Power(2)), "H^2"))
}

/// Complete intersection of hypersurfaces in a b4 = 1 ambient with ch2 = a·H² and
/// c1 = index·H: 2-Fano iff Fano and Σd² < 2a, weakly iff Σd² <= 2a.
pub fn classify_rank_one_b4(name: &str, dim: u32, index: u32, a: &Rational, degrees: &[u32]) -> Result<Verdict> {
    let y = chern::ch_rank_one_b4(name, dim, a.clone(), index)?;
    classify_reduced(&y, degrees)
}

fn classify_reduced(y: &ChernCharacter, degrees: &[u32]) -> Result<Verdict> {
    check_degrees(degrees)?;
    check_surface_or_more(y.ambient().dimension() as i64 - degrees.len() as i64)?;
    let amb = y.ambient().clone();
    let ds: Vec<GradedClass> = degrees.iter().map(|d| ring::multiple_of_hyperplane(&amb, &int(*d as i64))).collect::<Result<_>>()?;
    let x = cons::ci_ch(y, &ds)?;
    Ok(ample_square_verdict(&x.c1().coeff(&Label::Power(1)), &x.ch2().coeff(&Label::Power(2)), "H^2"))
}

/// Complete intersection in OG+(k,2k), degrees in units of the spinor hyperplane H (σ1 = 2H).
pub fn classify_ci_og_plus(k: u32, degrees: &[u32]) -> Result<Verdict> {
    classify_reduced(&chern::ch_og_plus(k)?, degrees)
}

/// Complete intersection in SG(k,2k), degrees in units of σ1.
pub fn classify_ci_sg(k: u32, degrees: &[u32]) -> Result<Verdict> {
    classify_reduced(&chern::ch_sg_reduced(k)?, degrees)
}

/// Complete intersection in G2/P2.
pub fn classify_ci_g2p2(degrees: &[u32]) -> Result<Verdict> {
    classify_reduced(&chern::ch_g2p2()?, degrees)
}

/// Double cover of a b4 = 1 ambient (or P^n) branched along b·H.
pub fn classify_double_cover(base: &ChernCharacter, branch: u32) -> Result<Verdict> {
    let amb = base.ambient().clone();
    match amb {
        AmbientDescriptor::ProjSpace { .. }
        | AmbientDescriptor::RankOnePicBFour { .. }
        | AmbientDescriptor::OgPlus { .. }
        | AmbientDescriptor::Sg { .. }
        | AmbientDescriptor::G2P2 => {}
        other => return Err(Error::InvalidInput(format!("double covers are classified over b4 = 1 bases, not {other}"))),
    }
    if amb.dimension() < 2 {
        return Err(Error::InvalidInput("the base must have dimension at least 2".into()));
    }
    let b = ring::multiple_of_hyperplane(&amb, &int(branch as i64))?;
    let dc = cons::double_cover_ch2(base, &b)?;
    Ok(ample_square_verdict(&dc.c1.coeff(&Label::Power(1)), &dc.ch2.coeff(&Label::Power(2)), "H^2")
        .rule("ch2 of a double cover is the pullback of ch2(Y) - 3/8 B^2"))
}

/// ch2(X) = a σ2 + b σ11 for a complete intersection in G(k,n), with its class and the σ1-power witness.
struct GrassData {
    a: Rational,
    b: Rational,
    fano: bool,
    sigma_power: SurfaceWitness,
}

fn grass_data(k: u32, n: u32, degrees: &[u32]) -> Result<GrassData> {
    let g = chern::ch_grassmannian(k, n)?;
    let amb = g.ambient().clone();
    let mut r = SchubertRing::new(k, n)?;
    let s1 = r.sigma(&[1])?;
    let ds: Vec<GradedClass> = degrees.iter().map(|d| s1.scale(&int(*d as i64))).collect();
    let x = cons::ci_ch(&g, &ds)?;
    let dim = amb.dimension() - degrees.len() as u32;
    let cls = cons::ci_class(&amb, &ds)?;
    let cyc = r.power(&s1, dim - 2)?;
    let ch2 = x.ch2();
    Ok(GrassData {
        a: ch2.coeff(&Label::Schubert(Partition::new(vec![2])?)),
        b: ch2.coeff(&Label::Schubert(Partition::new(vec![1, 1])?)),
        fano: x.c1().coeff(&Label::Schubert(Partition::new(vec![1])?)).is_positive(),
        sigma_power: SurfaceWitness::new(format!("ch2.sigma1^{}", dim - 2), cons::pair(&[&ch2, &cyc, &cls])?),
    })
}

/// Surfaces known to lie on a codimension-c linear section of G(k,n), as
/// (name, coefficient of σ2*, coefficient of σ11*), and whether they generate the cone.
pub fn grass_known_surfaces(k: u32, n: u32, c: u32) -> (Vec<(&'static str, i64, i64)>, bool) {
    let mut out = Vec::new();
    if c < k {
        out.push(("sigma11*", 0, 1));
    }
    if c + 1 < n - k {
        out.push(("sigma2*", 1, 0));
    }
    if (k, n, c) == (2, 5, 2) || (k, n, c) == (2, 6, 2) {
        out.push(("sigma2*+sigma11*", 1, 1));
    }
    let exact = c == 0 || (c < k && n > 2 * k);
    (out, exact)
}

/// Linear section of codimension c in G(k,n), 2 <= k <= n/2.
pub fn classify_linear_section_grass(k: u32, n: u32, c: u32) -> Result<Verdict> {
    AmbientDescriptor::grassmannian(k, n)?;
    check_surface_or_more((k * (n - k)) as i64 - c as i64)?;
    let d = grass_data(k, n, &vec![1; c as usize])?;
    let mut v = grass_verdict(&d)?;
    if v.status != FanoStatus::Open {
        return Ok(v);
    }
    let (surfaces, exact) = grass_known_surfaces(k, n, c);
    let mut hi = FanoStatus::TwoFano;
    let mut neg = false;
    for (name, x, y) in &surfaces {
        let val = &d.a * int(*x) + &d.b * int(*y);
        if val.is_negative() {
            neg = true;
        } else if val.is_zero() {
            hi = FanoStatus::WeaklyNotTwoFano;
        }
        v = v.witness(SurfaceWitness::new(format!("ch2.{name}"), val));
    }
    v.status = if neg {
        FanoStatus::NotWeakly
    } else if exact {
        hi
    } else {
        FanoStatus::Open
    };
    if exact {
        v = v.rule("surfaces listed generate the cone of effective surfaces");
    } else if v.status == FanoStatus::Open && hi == FanoStatus::WeaklyNotTwoFano {
        v = v.rule("not 2-Fano; weak 2-Fano property undecided");
    }
    Ok(v)
}

fn grass_verdict(d: &GrassData) -> Result<Verdict> {
    if !d.fano {
        return Ok(Verdict::new(FanoStatus::NotFano).rule("fano: c1 is not positive"));
    }
    let v = Verdict::new(FanoStatus::Open).witness(d.sigma_power.clone());
    if d.a == d.b {
        return Ok(Verdict { status: FanoStatus::from_sign(&d.a), ..v }.rule("ch2 is a multiple of sigma1^2"));
    }
    if d.sigma_power.value.is_negative() {
        return Ok(Verdict { status: FanoStatus::NotWeakly, ..v }.rule("sigma1 is ample"));
    }
    Ok(v)
}

/// Complete intersection of hypersurfaces of degrees d_i (multiples of σ1) in G(k,n).
pub fn classify_ci_grass(k: u32, n: u32, degrees: &[u32]) -> Result<Verdict> {
    check_degrees(degrees)?;
    if degrees.is_empty() {
        return Err(Error::InvalidInput("at least one hypersurface is required".into()));
    }
    if degrees.iter().all(|&d| d == 1) {
        return classify_linear_section_grass(k, n, degrees.len() as u32);
    }
    AmbientDescriptor::grassmannian(k, n)?;
    check_surface_or_more((k * (n - k)) as i64 - degrees.len() as i64)?;
    let d = grass_data(k, n, degrees)?;
    let mut v = grass_verdict(&d)?;
    v.witnesses.push(SurfaceWitness::new("coefficient of sigma2 in ch2", d.a.clone()));
    v.witnesses.push(SurfaceWitness::new("coefficient of sigma11 in ch2", d.b.clone()));
    Ok(v)
}

/// "Y is not 2-Fano and the branch divisor is ample" implies the double cover is not weakly 2-Fano.
pub fn descent_double_cover(base: FanoStatus, branch_ample: bool) -> Result<Verdict> {
    if !branch_ample {
        return Err(Error::InvalidInput("premise not established: the branch divisor is not known to be ample".into()));
    }
    match base {
        FanoStatus::NotWeakly | FanoStatus::WeaklyNotTwoFano => {
            Ok(Verdict::new(FanoStatus::NotWeakly).rule("double-cover-descent: base not 2-Fano, branch ample"))
        }
        other => Err(Error::InvalidInput(format!("premise not established: base status is {other}"))),
    }
}

/// A threefold with ρ = 1 that is not weakly 2-Fano has no weakly 2-Fano blow-up along points and curves.
pub fn descent_blowup_rho_one(base: FanoStatus, base_rho: u32) -> Result<Verdict> {
    if base_rho != 1 {
        return Err(Error::InvalidInput(format!("premise not established: base has Picard number {base_rho}")));
    }
    if base != FanoStatus::NotWeakly {
        return Err(Error::InvalidInput(format!("premise not established: base status is {base}")));
    }
    Ok(Verdict::new(FanoStatus::NotWeakly).rule("blowup-rho-one: base has Picard number 1 and is not weakly 2-Fano"))
}

/// A semiample divisor T with ch2·T < 0 rules out weakly 2-Fano blow-ups along points and curves.
pub fn descent_semiample(value: &Rational, semiample: bool) -> Result<Verdict> {
    if !semiample {
        return Err(Error::InvalidInput("premise not established: the divisor is not known to be semiample".into()));
    }
    if !value.is_negative() {
        return Err(Error::InvalidInput(format!("premise not established: ch2.T = {value} is not negative")));
    }
    Ok(Verdict::new(FanoStatus::NotWeakly).witness(SurfaceWitness::new("ch2.T", value.clone())).rule("semiample-divisor: ch2.T < 0"))
}

/// Double cover with ample branch divisor and a semiample T downstairs with
/// (ch2(Y) − 3/8 B²)·T <= 0: blow-ups of the cover are not weakly 2-Fano.
pub fn descent_double_cover_semiample(value: &Rational, branch_ample: bool, semiample: bool) -> Result<Verdict> {
    if !branch_ample || !semiample {
        return Err(Error::InvalidInput("premise not established: ampleness or semiampleness missing".into()));
    }
    if value.is_positive() {
        return Err(Error::InvalidInput(format!("premise not established: criterion value {value} is positive")));
    }
    Ok(Verdict::new(FanoStatus::NotWeakly)
        .witness(SurfaceWitness::new("(ch2(Y) - 3/8 B^2).T", value.clone()))
        .rule("double-cover-semiample: criterion value <= 0"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use FanoStatus::*;

    #[test]
    fn status_order_and_parse() {
        assert!(TwoFano.strength() > WeaklyNotTwoFano.strength());
        assert_eq!(Open.strength(), None);
        for s in [NotFano, NotWeakly, WeaklyNotTwoFano, TwoFano, Open] {
            assert_eq!(s.as_str().parse::<FanoStatus>().unwrap(), s);
            if let Some(k) = s.strength() {
                assert_eq!(FanoStatus::from_strength(k), Some(s));
            }
        }
        assert!("Weakly".parse::<FanoStatus>().is_err());
    }

    #[test]
    fn projective_thresholds() {
        // Cubic n-folds are 2-Fano from n = 8.
        assert_eq!(classify_ci_proj(9, &[3]).unwrap().status, TwoFano);
        assert_eq!(classify_ci_proj(8, &[3]).unwrap().status, WeaklyNotTwoFano);
        assert_eq!(classify_ci_proj(7, &[3]).unwrap().status, NotWeakly);
        assert_eq!(classify_ci_proj(16, &[4]).unwrap().status, TwoFano);
        assert_eq!(classify_ci_proj(12, &[2, 2, 2]).unwrap().status, TwoFano);
        assert_eq!(classify_ci_proj(11, &[2, 2, 2]).unwrap().status, WeaklyNotTwoFano);
        assert_eq!(classify_ci_proj(9, &[2, 2]).unwrap().status, TwoFano);
        assert_eq!(classify_ci_proj(3, &[4]).unwrap().status, NotFano);
        assert!(classify_ci_proj(3, &[2, 2]).is_err());
        let v = classify_ci_proj(4, &[3]).unwrap();
        assert_eq!(v.witnesses[1].value, int(-6));
    }

    #[test]
    fn weighted_thresholds() {
        let w = |ones: usize, head: &[u32]| {
            let mut v = head.to_vec();
            v.extend(std::iter::repeat_n(1, ones));
            v
        };
        // Degree 6 in P(3,2,1^n): 2-Fano iff n > 23.
        assert_eq!(classify_ci_weighted(&w(24, &[3, 2]), &[6]).unwrap().status, TwoFano);
        assert_eq!(classify_ci_weighted(&w(23, &[3, 2]), &[6]).unwrap().status, WeaklyNotTwoFano);
        assert_eq!(classify_ci_weighted(&w(22, &[3, 2]), &[6]).unwrap().status, NotWeakly);
        // Degree 4 in P(2,1^{n+1}): 2-Fano iff n > 11.
        assert_eq!(classify_ci_weighted(&w(13, &[2]), &[4]).unwrap().status, TwoFano);
        assert_eq!(classify_ci_weighted(&w(12, &[2]), &[4]).unwrap().status, WeaklyNotTwoFano);
        for n in 2..20u32 {
            for d in [vec![2], vec![3], vec![2, 2]] {
                if n as usize <= d.len() + 1 {
                    continue;
                }
                let a = classify_ci_proj(n, &d).unwrap().status;
                let b = classify_ci_weighted(&vec![1; n as usize + 1], &d).unwrap().status;
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn grassmannians() {
        assert_eq!(classify_ci_grass(2, 5, &[2]).unwrap().status, NotWeakly);
        assert_eq!(classify_ci_grass(3, 6, &[1, 1]).unwrap().status, WeaklyNotTwoFano);
        assert_eq!(classify_ci_grass(2, 5, &[3]).unwrap().status, NotWeakly);
        assert_eq!(classify_linear_section_grass(2, 5, 1).unwrap().status, WeaklyNotTwoFano);
        assert_eq!(classify_linear_section_grass(2, 5, 2).unwrap().status, Open);
        assert_eq!(classify_linear_section_grass(2, 5, 3).unwrap().status, NotWeakly);
        assert_eq!(classify_linear_section_grass(2, 5, 0).unwrap().status, TwoFano);
        assert_eq!(classify_linear_section_grass(2, 6, 0).unwrap().status, WeaklyNotTwoFano);
        assert_eq!(classify_linear_section_grass(2, 6, 1).unwrap().status, NotWeakly);
        assert_eq!(classify_linear_section_grass(2, 6, 2).unwrap().status, Open);
        let v = classify_linear_section_grass(2, 6, 3).unwrap();
        assert_eq!(v.status, NotWeakly);
        assert_eq!(v.witnesses[0].value, int(-3));
        assert_eq!(classify_linear_section_grass(3, 6, 1).unwrap().status, TwoFano);
        assert_eq!(classify_linear_section_grass(3, 6, 2).unwrap().status, WeaklyNotTwoFano);
        assert_eq!(classify_linear_section_grass(3, 7, 1).unwrap().status, WeaklyNotTwoFano);
        assert_eq!(classify_linear_section_grass(3, 7, 2).unwrap().status, NotWeakly);
    }

    #[test]
    fn linear_sections_match_closed_form() {
        for k in 2..=4u32 {
            for n in 2 * k..=2 * k + 4 {
                for c in 0..5u32 {
                    if c >= n || k * (n - k) < c + 2 {
                        continue;
                    }
                    let d = grass_data(k, n, &vec![1; c as usize]).unwrap();
                    let (n_, k_, c_) = (n as i64, k as i64, c as i64);
                    assert_eq!(d.a, rat(n_ + 2 - 2 * k_ - c_, 2));
                    assert_eq!(d.b, rat(-(n_ - 2 - 2 * k_ + c_), 2));
                }
            }
        }
    }

    #[test]
    fn homogeneous_b4_one() {
        assert_eq!(classify_ci_og_plus(5, &[1, 1, 1]).unwrap().status, TwoFano);
        assert_eq!(classify_ci_og_plus(5, &[1, 1, 1, 1]).unwrap().status, WeaklyNotTwoFano);
        assert_eq!(classify_ci_og_plus(5, &[2]).unwrap().status, WeaklyNotTwoFano);
        assert_eq!(classify_ci_og_plus(5, &[2, 2]).unwrap().status, NotWeakly);
        assert_eq!(classify_ci_sg(3, &[1]).unwrap().status, WeaklyNotTwoFano);
        assert_eq!(classify_ci_sg(3, &[]).unwrap().status, TwoFano);
        assert_eq!(classify_ci_sg(4, &[2]).unwrap().status, NotWeakly);
        // c1 = (k+1-Σd)σ1: Σd = k is still Fano.
        assert_eq!(classify_ci_sg(3, &[1, 1, 1]).unwrap().status, NotWeakly);
        assert_eq!(classify_ci_sg(3, &[2, 2]).unwrap().status, NotFano);
        assert_eq!(classify_ci_g2p2(&[1]).unwrap().status, WeaklyNotTwoFano);
        assert_eq!(classify_ci_g2p2(&[1, 1]).unwrap().status, NotWeakly);
        assert_eq!(classify_rank_one_b4("OG+(5,10)", 10, 8, &int(2), &[1, 1, 1]).unwrap().status, TwoFano);
    }

    #[test]
    fn double_covers() {
        for (n, want) in [(11, WeaklyNotTwoFano), (12, TwoFano), (10, NotWeakly)] {
            assert_eq!(classify_double_cover(&chern::ch_proj_space(n).unwrap(), 4).unwrap().status, want);
        }
        assert_eq!(classify_double_cover(&chern::ch_proj_space(27).unwrap(), 6).unwrap().status, TwoFano);
        assert_eq!(classify_double_cover(&chern::ch_proj_space(26).unwrap(), 6).unwrap().status, WeaklyNotTwoFano);
        assert!(classify_double_cover(&chern::ch_grassmannian(2, 5).unwrap(), 2).is_err());
    }

    #[test]
    fn descent() {
        assert_eq!(descent_double_cover(WeaklyNotTwoFano, true).unwrap().status, NotWeakly);
        assert!(descent_double_cover(TwoFano, true).is_err());
        assert!(descent_double_cover(NotWeakly, false).is_err());
        assert_eq!(descent_blowup_rho_one(NotWeakly, 1).unwrap().status, NotWeakly);
        assert!(descent_blowup_rho_one(NotWeakly, 2).is_err());
        assert!(descent_semiample(&int(0), true).is_err());
        assert_eq!(descent_semiample(&int(-1), true).unwrap().status, NotWeakly);
        assert_eq!(descent_double_cover_semiample(&int(0), true, true).unwrap().status, NotWeakly);
    }
}
