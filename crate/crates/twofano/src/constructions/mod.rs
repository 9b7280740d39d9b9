//! Chern characters and intersection numbers under the standard constructions:
//! zero loci, complete intersections, double covers, projective bundles,
//! products, blow-ups, divisors in products and ruled surfaces.
//!
//! Restrictions to a subvariety X are never modeled directly. A class "on X"
//! is the ambient class, and pairings on X multiply by the class of X before
//! integrating.

pub mod poly;
pub mod space;
pub mod witness;

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{int, rat, AmbientDescriptor, GradedClass, Label, Partition, Rational};
use crate::chern::{ChernCharacter, TRUNCATION};
use crate::classifier::FanoStatus;
use crate::error::{Error, Result};
use crate::ring;
use poly::Poly;
use space::{Space, SpaceSpec};

/// An exact intersection number together with what it pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceWitness {
    pub description: String,
    #[serde(with = "crate::algebra::rational_str")]
    pub value: Rational,
}

impl SurfaceWitness {
    pub fn new(description: impl Into<String>, value: Rational) -> Self {
        SurfaceWitness { description: description.into(), value }
    }
}

impl fmt::Display for SurfaceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.description, self.value)
    }
}

/// ch(X) for the zero locus of a regular section of a bundle.
pub fn zero_locus_ch(ambient: &ChernCharacter, bundle: &ChernCharacter) -> Result<ChernCharacter> {
    if bundle.rank > int(ambient.ambient().dimension() as i64) {
        return Err(Error::InvalidInput(format!("bundle rank {} exceeds the ambient dimension", bundle.rank)));
    }
    ambient.sub(bundle)
}

/// ch(O(D)) truncated.
pub fn line_bundle_ch(d: &GradedClass) -> Result<ChernCharacter> {
    ring::check_divisor(d)?;
    let mut total = ring::unit(&d.ambient);
    let mut pow = ring::unit(&d.ambient);
    let mut fact = int(1);
    for k in 1..=TRUNCATION {
        pow = ring::multiply(&pow, d)?;
        fact *= int(k as i64);
        total = total.add(&pow.scale(&(Rational::one() / &fact)))?;
    }
    Ok(ChernCharacter::from_total(&total))
}

/// ch of a complete intersection: ch_k drops by (1/k!) Σ D_i^k.
pub fn ci_ch(ambient: &ChernCharacter, divisors: &[GradedClass]) -> Result<ChernCharacter> {
    let mut out = ambient.clone();
    for d in divisors {
        out = zero_locus_ch(&out, &line_bundle_ch(d)?)?;
    }
    Ok(out)
}

/// The class of a complete intersection: the product of its divisors.
pub fn ci_class(amb: &AmbientDescriptor, divisors: &[GradedClass]) -> Result<GradedClass> {
    let mut x = ring::unit(amb);
    for d in divisors {
        x = ring::multiply(&x, d)?;
    }
    Ok(x)
}

/// Integral of the product of the given classes.
pub fn pair(classes: &[&GradedClass]) -> Result<Rational> {
    let first = classes.first().ok_or_else(|| Error::InvalidInput("nothing to pair".into()))?;
    let mut acc = (*first).clone();
    for c in &classes[1..] {
        acc = ring::multiply(&acc, c)?;
    }
    ring::integrate(&acc)
}

/// c1 and ch2 of a double cover, as classes downstairs.
///
/// Integrals of pulled-back classes upstairs are `integration_factor` times
/// the integrals downstairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoverCh2 {
    pub c1: GradedClass,
    pub ch2: GradedClass,
    pub integration_factor: Rational,
}

pub fn double_cover_ch2(base: &ChernCharacter, branch: &GradedClass) -> Result<DoubleCoverCh2> {
    ring::check_divisor(branch)?;
    let b2 = ring::multiply(branch, branch)?;
    Ok(DoubleCoverCh2 { c1: base.c1().sub(&branch.scale(&rat(1, 2)))?, ch2: base.ch2().sub(&b2.scale(&rat(3, 8)))?, integration_factor: int(2) })
}

/// ch2 of P(E) over a base, E of rank r: π*(ch2 X + ch2 E) − π*c1(E)·ξ + (r/2)ξ²,
/// with ξ = O(1) on the bundle of rank-one quotients.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjBundleCh2 {
    pub names: Vec<String>,
    pub pullback: Poly,
    pub xi_coeff: Poly,
    pub xi_square: Rational,
}

pub fn proj_bundle_ch2(base: &SpaceSpec, chern: &[String]) -> Result<ProjBundleCh2> {
    if chern.len() < 2 {
        return Err(Error::InvalidInput("bundle rank must be at least 2".into()));
    }
    let b = Space::build(base)?;
    let names = b.names().to_vec();
    let cs: Vec<Poly> = chern.iter().map(|s| b.parse(s)).collect::<Result<_>>()?;
    let ch2e = cs[0].pow(2)?.scale(&rat(1, 2)).sub(&cs[1])?;
    Ok(ProjBundleCh2 {
        pullback: b.reduce(&b.ch2()?.add(&ch2e)?)?,
        xi_coeff: b.reduce(&cs[0].scale(&int(-1)))?,
        xi_square: rat(chern.len() as i64, 2),
        names,
    })
}

impl fmt::Display for ProjBundleCh2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.pullback.is_zero() {
            parts.push(format!("pi*({})", self.pullback.render(&self.names)));
        }
        if !self.xi_coeff.is_zero() {
            parts.push(format!("pi*({})*xi", self.xi_coeff.render(&self.names)));
        }
        parts.push(format!("{}*xi^2", self.xi_square));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Rank-two bundles: P(E) is never 2-Fano over a positive-dimensional base, and is
/// weakly 2-Fano iff it is Fano and the criterion class is nonnegative on surfaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank2Criterion {
    pub never_two_fano: bool,
    pub criterion: GradedClass,
}

pub fn proj_bundle_rank2_criterion(base: &ChernCharacter, c1e: &GradedClass, c2e: &GradedClass) -> Result<Rank2Criterion> {
    let c1sq = ring::multiply(c1e, c1e)?;
    let inner = c1sq.sub(&c2e.scale(&int(4)))?.scale(&rat(1, 2));
    Ok(Rank2Criterion { never_two_fano: base.ambient().dimension() > 0, criterion: base.ch2().add(&inner)? })
}

/// ch2(X) + c1(L)²/2, the criterion class of P(O ⊕ L).
pub fn o_plus_l_criterion(base: &ChernCharacter, c1l: &GradedClass) -> Result<GradedClass> {
    ring::check_divisor(c1l)?;
    base.ch2().add(&ring::multiply(c1l, c1l)?.scale(&rat(1, 2)))
}

/// Status of P(O ⊕ L): Fano iff c1(X) ± c1(L) are ample; weakly 2-Fano iff moreover
/// the criterion class is nonnegative; never 2-Fano.
pub fn o_plus_l_status(base: &ChernCharacter, c1l: &GradedClass) -> Result<FanoStatus> {
    let c1 = base.c1();
    let fano = is_ample(&c1.add(c1l)?)? && is_ample(&c1.sub(c1l)?)?;
    if !fano {
        return Ok(FanoStatus::NotFano);
    }
    let crit = o_plus_l_criterion(base, c1l)?;
    Ok(if is_nonnegative_on_surfaces(&crit)? { FanoStatus::WeaklyNotTwoFano } else { FanoStatus::NotWeakly })
}

/// P(O ⊕ O(a)) over P^n: weakly 2-Fano iff |a| <= n.
pub fn o_plus_l_over_proj(n: u32, a: i64) -> Result<FanoStatus> {
    let base = crate::chern::ch_proj_space(n)?;
    let l = ring::multiple_of_hyperplane(base.ambient(), &int(a))?;
    o_plus_l_status(&base, &l)
}

/// P(O ⊕ O(a,b)) over P^n × P^m: weakly 2-Fano iff |a| <= n, |b| <= m and ab >= 0.
pub fn o_plus_l_over_product(n: u32, m: u32, a: i64, b: i64) -> Result<FanoStatus> {
    let base = crate::chern::ch_product_proj(&[n, m])?;
    let l = ring::multidegree(base.ambient(), &[a, b])?;
    o_plus_l_status(&base, &l)
}

/// Pairings of a codimension-2 class with the generators of the cone of effective
/// surfaces of the ambient, each up to a positive factor.
///
/// Products use the monomial surfaces, Grassmannians the Schubert surfaces dual to
/// σ2 and σ11, and the b4 = 1 ambients the class dual to H².
pub fn surface_cone_pairings(alpha: &GradedClass) -> Result<Vec<Rational>> {
    if alpha.terms().any(|(l, _)| l.codim() != 2) {
        return Err(Error::InvalidInput(format!("{alpha} is not a codimension-2 class")));
    }
    let amb = &alpha.ambient;
    Ok(match amb {
        AmbientDescriptor::ProductProj { dims } => {
            let mut out = Vec::new();
            for i in 0..dims.len() {
                for j in i..dims.len() {
                    let mut e = vec![0; dims.len()];
                    e[i] += 1;
                    e[j] += 1;
                    if e.iter().zip(dims).all(|(x, d)| x <= d) {
                        out.push(alpha.coeff(&Label::Mono(e)));
                    }
                }
            }
            out
        }
        AmbientDescriptor::Grassmannian { k, n } => [vec![2], vec![1, 1]]
            .into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|p| p.fits_box(*k, n - k))
            .map(|p| alpha.coeff(&Label::Schubert(p)))
            .collect(),
        _ => {
            if amb.dimension() < 2 {
                Vec::new()
            } else {
                vec![alpha.coeff(&Label::Power(2))]
            }
        }
    })
}

pub fn is_nonnegative_on_surfaces(alpha: &GradedClass) -> Result<bool> {
    Ok(surface_cone_pairings(alpha)?.iter().all(|x| !x.is_negative()))
}

pub fn is_positive_on_surfaces(alpha: &GradedClass) -> Result<bool> {
    Ok(surface_cone_pairings(alpha)?.iter().all(|x| x.is_positive()))
}

/// Ampleness of a divisor class on a supported ambient: positive on every generator.
pub fn is_ample(d: &GradedClass) -> Result<bool> {
    ring::check_divisor(d)?;
    let amb = &d.ambient;
    Ok(match amb {
        AmbientDescriptor::ProductProj { dims } => (0..dims.len()).all(|i| {
            let mut e = vec![0; dims.len()];
            e[i] = 1;
            d.coeff(&Label::Mono(e)).is_positive()
        }),
        AmbientDescriptor::Grassmannian { .. } => d.coeff(&Label::Schubert(Partition::new(vec![1])?)).is_positive(),
        _ => d.coeff(&Label::Power(1)).is_positive(),
    })
}

/// Status of a product of positive-dimensional manifolds: never 2-Fano, weakly
/// 2-Fano iff both factors are.
pub fn product_ch2_status(a: FanoStatus, b: FanoStatus) -> FanoStatus {
    use FanoStatus::*;
    match (a, b) {
        (NotFano, _) | (_, NotFano) => NotFano,
        (NotWeakly, _) | (_, NotWeakly) => NotWeakly,
        (Open, _) | (_, Open) => Open,
        _ => WeaklyNotTwoFano,
    }
}

/// ch2 of the blow-up along a smooth center of codimension c:
/// f*ch2(X) + (c+1)/2 E² − j_*π*c1(N).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupCh2 {
    pub base_ch2: String,
    pub codim: u32,
    pub e_square: Rational,
    pub normal_c1: Option<String>,
}

pub fn blowup_ch2(base_ch2: &GradedClass, codim: u32, normal_c1: Option<&str>) -> Result<BlowupCh2> {
    if codim < 2 {
        return Err(Error::InvalidInput("the center must have codimension at least 2".into()));
    }
    Ok(BlowupCh2 {
        base_ch2: base_ch2.to_string(),
        codim,
        e_square: rat(codim as i64 + 1, 2),
        normal_c1: normal_c1.map(str::trim).filter(|s| !s.is_empty() && *s != "0").map(String::from),
    })
}

impl fmt::Display for BlowupCh2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f*({}) + {}*E^2", self.base_ch2, self.e_square)?;
        if let Some(n) = &self.normal_c1 {
            write!(f, " - j_*pi*({n})")?;
        }
        Ok(())
    }
}

/// ∫ ch2 of a surface blown up at one point: the base value minus 3/2.
pub fn blowup_point_on_surface(base: &Rational) -> Rational {
    // c = 2, E² = −1 on the surface, and c1 of the normal space of a point vanishes.
    base + rat(3, 2) * int(-1)
}

/// ∫ ch2 of a del Pezzo surface of degree d, reached from P² by blowing up 9 − d points.
pub fn del_pezzo_ch2(d: u32) -> Result<Rational> {
    if !(1..=9).contains(&d) {
        return Err(Error::InvalidInput(format!("no del Pezzo surface of degree {d}")));
    }
    let mut v = rat(3, 2);
    for _ in d..9 {
        v = blowup_point_on_surface(&v);
    }
    Ok(v)
}

/// Degree of the normal bundle of a curve in a threefold: −K·C + 2g − 2.
pub fn normal_degree(minus_k_dot_c: &Rational, genus: u32) -> Rational {
    minus_k_dot_c + int(2 * genus as i64 - 2)
}

/// ch2 · E for the exceptional divisor over a curve in a threefold: −deg(N)/2.
pub fn blowup_curve_exceptional(minus_k_dot_c: &Rational, genus: u32) -> SurfaceWitness {
    SurfaceWitness::new("ch2.E", -normal_degree(minus_k_dot_c, genus) / int(2))
}

/// Proper transform of a surface meeting the blown-up curves transversally in r points.
pub fn blowup_curve_transversal(base: &Rational, r: u32) -> SurfaceWitness {
    SurfaceWitness::new("ch2.T", base - rat(3 * r as i64, 2))
}

/// Proper transform of a surface T containing the blown-up curve C:
/// ch2(X)·T + (3/2)(C²)_T − deg(N).
pub fn blowup_curve_containing(base: &Rational, self_intersection: &Rational, normal_degree: &Rational) -> SurfaceWitness {
    SurfaceWitness::new("ch2.T", base + rat(3, 2) * self_intersection - normal_degree)
}

/// ch2 · E for a point blown up in a threefold.
pub fn blowup_point_3fold_exceptional() -> SurfaceWitness {
    SurfaceWitness::new("ch2.E", int(2))
}

/// Proper transform of a surface with multiplicity m at the blown-up point.
pub fn blowup_point_3fold(base: &Rational, m: u32) -> SurfaceWitness {
    SurfaceWitness::new("ch2.T", base - int(2 * m as i64))
}

/// Curves met transversally r times and points on the surface s times.
pub fn blowup_mixed_3fold(base: &Rational, r: u32, s: u32) -> SurfaceWitness {
    SurfaceWitness::new("ch2.T", base - rat(3 * r as i64, 2) - int(2 * s as i64))
}

/// Sign of ch2 · E for the blow-up of a curve of genus g with the given −K·C.
pub fn exceptional_sign(genus: u32, minus_k_dot_c: i64) -> Ordering {
    blowup_curve_exceptional(&int(minus_k_dot_c), genus).value.cmp(&Rational::zero())
}

/// A divisor of given multidegree in a product of projective spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorInProduct {
    pub ch2: GradedClass,
    pub divisor: GradedClass,
    /// ch2 · [D] in the ambient product, computed once for repeated pairings.
    restricted: GradedClass,
}

impl DivisorInProduct {
    /// ch2(Y) · h^exps on Y; the exponents must sum to dim Y − 2.
    pub fn pairing(&self, exps: &[u32]) -> Result<Rational> {
        let AmbientDescriptor::ProductProj { dims } = &self.ch2.ambient else { unreachable!("product ambient") };
        check_exponents(dims, exps, 1)?;
        if exps.iter().zip(dims).any(|(e, d)| e > d) {
            return Ok(Rational::zero());
        }
        // Only the complementary monomial of the 4-cycle ch2 · [D] survives.
        let rest = dims.iter().zip(exps).map(|(d, e)| d - e).collect();
        Ok(self.restricted.coeff(&Label::Mono(rest)))
    }
}

fn check_exponents(dims: &[u32], exps: &[u32], codim: u32) -> Result<()> {
    if exps.len() != dims.len() {
        return Err(Error::InvalidInput("one exponent per factor".into()));
    }
    let want = dims.iter().sum::<u32>() - codim - 2;
    if exps.iter().sum::<u32>() != want {
        return Err(Error::InvalidInput(format!("exponents must sum to {want}")));
    }
    Ok(())
}

/// h_1^{e_1} ⋯ h_r^{e_r}; zero if some exponent exceeds its factor's dimension.
pub fn monomial_class(amb: &AmbientDescriptor, exps: &[u32]) -> Result<GradedClass> {
    let AmbientDescriptor::ProductProj { dims } = amb else {
        return Err(Error::InvalidInput(format!("{amb} is not a product")));
    };
    if exps.iter().zip(dims).any(|(e, d)| e > d) {
        return Ok(GradedClass::zero(amb.clone()));
    }
    GradedClass::basis(amb.clone(), Label::Mono(exps.to_vec()))
}

pub fn divisor_in_product_ch2(dims: &[u32], multidegree: &[i64]) -> Result<DivisorInProduct> {
    let base = crate::chern::ch_product_proj(dims)?;
    let d = ring::multidegree(base.ambient(), multidegree)?;
    let x = ci_ch(&base, std::slice::from_ref(&d))?;
    let ch2 = x.ch2();
    let restricted = ring::multiply(&ch2, &d)?;
    Ok(DivisorInProduct { ch2, divisor: d, restricted })
}

/// The pairing of [`DivisorInProduct::pairing`] from the expansion
/// ch2(Y) = ½ Σ (n_i + 1 − a_i²) h_i² − Σ_{i<j} a_i a_j h_i h_j, integrating monomial by monomial.
pub fn divisor_in_product_closed(dims: &[u32], multidegree: &[i64], exps: &[u32]) -> Result<Rational> {
    if multidegree.len() != dims.len() {
        return Err(Error::InvalidInput("one degree per factor".into()));
    }
    check_exponents(dims, exps, 1)?;
    let r = dims.len();
    let mut ch2: Vec<(Vec<u32>, Rational)> = Vec::new();
    for i in 0..r {
        let a = multidegree[i];
        let mut m = vec![0; r];
        m[i] = 2;
        ch2.push((m, rat(dims[i] as i64 + 1 - a * a, 2)));
        for j in i + 1..r {
            let mut m = vec![0; r];
            m[i] = 1;
            m[j] = 1;
            ch2.push((m, int(-a * multidegree[j])));
        }
    }
    let mut total = Rational::zero();
    for (m, c) in &ch2 {
        for (k, a) in multidegree.iter().enumerate() {
            let top = (0..r).all(|i| m[i] + exps[i] + u32::from(i == k) == dims[i]);
            if top {
                total += c * int(*a);
            }
        }
    }
    Ok(total)
}

/// ch2(Y) · h_1^{e_1} ⋯ h_r^{e_r} for a complete intersection of divisors of the
/// given multidegrees.
pub fn ci_in_product_pairing(dims: &[u32], multidegrees: &[Vec<i64>], exps: &[u32]) -> Result<Rational> {
    let base = crate::chern::ch_product_proj(dims)?;
    let amb = base.ambient().clone();
    let ds = multidegrees.iter().map(|m| ring::multidegree(&amb, m)).collect::<Result<Vec<_>>>()?;
    check_exponents(dims, exps, ds.len() as u32)?;
    let x = ci_ch(&base, &ds)?;
    let cls = ci_class(&amb, &ds)?;
    pair(&[&x.ch2(), &cls, &monomial_class(&amb, exps)?])
}

/// ch2(Y) · h_1^{n−2} h_2^{m−2} for Y = D_1 ∩ D_2 in P^n × P^m.
pub fn ci_in_product_ch2(dims: [u32; 2], d1: [i64; 2], d2: [i64; 2]) -> Result<Rational> {
    let [n, m] = dims;
    if n < 2 || m < 2 {
        return Err(Error::InvalidInput("both factors need dimension at least 2".into()));
    }
    ci_in_product_pairing(&dims, &[d1.to_vec(), d2.to_vec()], &[n - 2, m - 2])
}

/// A bundle restricted to a smooth curve, split as a sum of line bundles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleOnCurveSpec {
    pub genus: u32,
    pub restriction_degrees: Vec<i64>,
    #[serde(default)]
    pub minus_k_dot_c: Option<i64>,
}

/// Where the ruled surface lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuledContext {
    /// S = P(G) inside P(F) for a rank-2 quotient G of F restricted to C.
    ProjBundle,
    /// S = P(G) inside the exceptional divisor P(N*) over the center C, where the
    /// restriction degrees are those of N* and G is a quotient of N*.
    Blowup,
}

/// ch2 · S for a ruled surface S = P(G) over a curve, G a rank-2 quotient:
/// −Σ deg F|_C + (r/2) deg G in a projective bundle of rank r, and
/// −Σ deg N*|_C + ((c+1)/2) deg G in the exceptional divisor over a center of codimension c.
pub fn ruled_surface_ch2_dot(context: RuledContext, curve: &BundleOnCurveSpec, quotient: &[i64]) -> Result<SurfaceWitness> {
    let r = curve.restriction_degrees.len();
    if quotient.len() != 2 {
        return Err(Error::InvalidInput("the quotient must have rank 2".into()));
    }
    if r < 2 {
        return Err(Error::InvalidInput(format!("rank mismatch: a rank-2 quotient of a rank-{r} bundle")));
    }
    let mut pool = curve.restriction_degrees.clone();
    for q in quotient {
        match pool.iter().position(|x| x == q) {
            Some(i) => {
                pool.remove(i);
            }
            None => {
                return Err(Error::InvalidInput(format!("quotient degrees {quotient:?} are not a sub-multiset of {:?}", curve.restriction_degrees)))
            }
        }
    }
    let total: i64 = curve.restriction_degrees.iter().sum();
    let deg_g: i64 = quotient.iter().sum();
    let (coef, what) = match context {
        RuledContext::ProjBundle => (rat(r as i64, 2), "ch2.S (ruled surface in a projective bundle)"),
        RuledContext::Blowup => {
            if let Some(kc) = curve.minus_k_dot_c {
                let expect = -normal_degree(&int(kc), curve.genus);
                if int(total) != expect {
                    return Err(Error::InvalidInput(format!("conormal degrees sum to {total}, but -K.C and the genus give {expect}")));
                }
            }
            (rat(r as i64 + 1, 2), "ch2.S (ruled surface in an exceptional divisor)")
        }
    };
    Ok(SurfaceWitness::new(what, int(-total) + coef * int(deg_g)))
}
