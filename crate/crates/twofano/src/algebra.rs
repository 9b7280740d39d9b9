//! Exact rationals, partitions, ambient descriptors and graded classes.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `rat(3, 2)` is 3/2. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if let Some((a, b)) = t.split_once('/') {
        let n: BigInt = a.trim().parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
        let d: BigInt = b.trim().parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(Rational::new(n, d))
    } else {
        let n: BigInt = t.parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
        Ok(Rational::from_integer(n))
    }
}

/// Serde adapter writing rationals as strings such as `"-3/2"`.
pub mod rational_str {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            I(i64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::I(i) => Ok(int(i)),
            Raw::S(s) => parse_rational(&s).map_err(serde::de::Error::custom),
        }
    }
}

/// A partition with weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Trailing zeros are dropped; the parts must otherwise be weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn fits_box(&self, rows: u32, cols: u32) -> bool {
        self.0.len() <= rows as usize && self.part(0) <= cols
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.part(0);
        Partition((1..=cols).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Parses `"2,1"`, `"[2,1]"` or `""`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts =
            t.split(',').map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition `{s}`")))).collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// The ambient variety a graded class lives on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AmbientDescriptor {
    ProjSpace {
        n: u32,
    },
    WeightedProj {
        weights: Vec<u32>,
    },
    Grassmannian {
        k: u32,
        n: u32,
    },
    /// Connected component of the orthogonal Grassmannian of isotropic k-planes in C^{2k}.
    OgPlus {
        k: u32,
    },
    /// Lagrangian Grassmannian of k-planes in C^{2k}.
    Sg {
        k: u32,
    },
    G2P2,
    ProductProj {
        dims: Vec<u32>,
    },
    /// Picard rank one variety with b4 = 1 and ch2 = a*H^2.
    RankOnePicBFour {
        name: String,
        dim: u32,
        #[serde(with = "rational_str")]
        a: Rational,
    },
}

impl AmbientDescriptor {
    pub fn proj_space(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidAmbient("projective space needs n >= 1".into()));
        }
        Ok(AmbientDescriptor::ProjSpace { n })
    }

    pub fn weighted_proj(weights: Vec<u32>) -> Result<Self> {
        if weights.len() < 2 || weights.contains(&0) {
            return Err(Error::InvalidAmbient("weighted projective space needs >= 2 positive weights".into()));
        }
        if weights.iter().fold(0u32, |g, &w| num_integer::gcd(g, w)) != 1 {
            return Err(Error::InvalidAmbient(format!("weights {weights:?} do not have gcd 1")));
        }
        Ok(AmbientDescriptor::WeightedProj { weights })
    }

    /// G(k, n) with 2 <= k <= n/2.
    pub fn grassmannian(k: u32, n: u32) -> Result<Self> {
        if k < 2 || 2 * k > n {
            return Err(Error::InvalidAmbient(format!("G({k},{n}) needs 2 <= k <= n/2")));
        }
        Ok(AmbientDescriptor::Grassmannian { k, n })
    }

    /// G(k, n) for any 1 <= k < n. Used for duality checks.
    pub fn grassmannian_any(k: u32, n: u32) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidAmbient(format!("G({k},{n}) needs 1 <= k < n")));
        }
        Ok(AmbientDescriptor::Grassmannian { k, n })
    }

    pub fn og_plus(k: u32) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidAmbient("OG+(k,2k) needs k >= 3".into()));
        }
        Ok(AmbientDescriptor::OgPlus { k })
    }

    pub fn sg(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidAmbient("SG(k,2k) needs k >= 2".into()));
        }
        Ok(AmbientDescriptor::Sg { k })
    }

    pub fn product_proj(dims: Vec<u32>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::InvalidAmbient("product needs positive factor dimensions".into()));
        }
        Ok(AmbientDescriptor::ProductProj { dims })
    }

    pub fn rank_one_b4(name: &str, dim: u32, a: Rational) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidAmbient("need dim >= 2".into()));
        }
        Ok(AmbientDescriptor::RankOnePicBFour { name: name.to_string(), dim, a })
    }

    pub fn dimension(&self) -> u32 {
        match self {
            AmbientDescriptor::ProjSpace { n } => *n,
            AmbientDescriptor::WeightedProj { weights } => weights.len() as u32 - 1,
            AmbientDescriptor::Grassmannian { k, n } => k * (n - k),
            AmbientDescriptor::OgPlus { k } => k * (k - 1) / 2,
            AmbientDescriptor::Sg { k } => k * (k + 1) / 2,
            AmbientDescriptor::G2P2 => 5,
            AmbientDescriptor::ProductProj { dims } => dims.iter().sum(),
            AmbientDescriptor::RankOnePicBFour { dim, .. } => *dim,
        }
    }

    /// Checks that `label` names a class on this ambient.
    pub fn accepts(&self, label: &Label) -> Result<()> {
        let bad = || Err(Error::LabelMismatch(format!("{label:?} on {self}")));
        match (self, label) {
            (AmbientDescriptor::ProductProj { dims }, Label::Mono(e)) => {
                if e.len() == dims.len() && e.iter().zip(dims).all(|(a, b)| a <= b) {
                    Ok(())
                } else {
                    bad()
                }
            }
            (AmbientDescriptor::ProductProj { .. }, _) => bad(),
            (AmbientDescriptor::Grassmannian { k, n }, Label::Schubert(p)) => {
                if p.fits_box(*k, n - k) {
                    Ok(())
                } else {
                    bad()
                }
            }
            (AmbientDescriptor::Grassmannian { .. }, _) => bad(),
            (AmbientDescriptor::OgPlus { .. } | AmbientDescriptor::Sg { .. }, Label::Schubert(p)) => {
                if p.weight() <= 2 && p.len() <= 2 {
                    Ok(())
                } else {
                    bad()
                }
            }
            (_, Label::Power(c)) if *c <= self.dimension() => Ok(()),
            _ => bad(),
        }
    }

    fn power_symbol(&self) -> &'static str {
        match self {
            AmbientDescriptor::ProjSpace { .. } => "h",
            _ => "H",
        }
    }
}

impl fmt::Display for AmbientDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmbientDescriptor::ProjSpace { n } => write!(f, "P^{n}"),
            AmbientDescriptor::WeightedProj { weights } => {
                let w: Vec<String> = weights.iter().map(|a| a.to_string()).collect();
                write!(f, "P({})", w.join(","))
            }
            AmbientDescriptor::Grassmannian { k, n } => write!(f, "G({k},{n})"),
            AmbientDescriptor::OgPlus { k } => write!(f, "OG+({k},{})", 2 * k),
            AmbientDescriptor::Sg { k } => write!(f, "SG({k},{})", 2 * k),
            AmbientDescriptor::G2P2 => write!(f, "G2/P2"),
            AmbientDescriptor::ProductProj { dims } => {
                let w: Vec<String> = dims.iter().map(|a| format!("P^{a}")).collect();
                write!(f, "{}", w.join(" x "))
            }
            AmbientDescriptor::RankOnePicBFour { name, .. } => write!(f, "{name}"),
        }
    }
}

/// A basis label. Ordered by codimension, then descending within a codimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    /// `h^c` on projective space, `H^c` elsewhere.
    Power(u32),
    Schubert(Partition),
    /// Monomial `h_1^{e_1} ... h_r^{e_r}` on a product of projective spaces.
    Mono(Vec<u32>),
}

impl Label {
    pub fn codim(&self) -> u32 {
        match self {
            Label::Power(c) => *c,
            Label::Schubert(p) => p.weight(),
            Label::Mono(e) => e.iter().sum(),
        }
    }

    fn variant_rank(&self) -> u8 {
        match self {
            Label::Power(_) => 0,
            Label::Schubert(_) => 1,
            Label::Mono(_) => 2,
        }
    }

    pub fn render(&self, ambient: &AmbientDescriptor) -> String {
        match self {
            Label::Power(0) => "1".to_string(),
            Label::Power(1) => ambient.power_symbol().to_string(),
            Label::Power(c) => format!("{}^{c}", ambient.power_symbol()),
            Label::Schubert(p) => p.to_string(),
            Label::Mono(e) => {
                let factors: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| if x == 1 { format!("h{}", i + 1) } else { format!("h{}^{x}", i + 1) })
                    .collect();
                if factors.is_empty() {
                    "1".to_string()
                } else {
                    factors.join("*")
                }
            }
        }
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.codim().cmp(&other.codim()).then(self.variant_rank().cmp(&other.variant_rank())).then_with(|| match (self, other) {
            (Label::Power(a), Label::Power(b)) => b.cmp(a),
            (Label::Schubert(a), Label::Schubert(b)) => b.cmp(a),
            (Label::Mono(a), Label::Mono(b)) => b.cmp(a),
            _ => Ordering::Equal,
        })
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite rational combination of basis labels on one ambient. Zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedClass {
    pub ambient: AmbientDescriptor,
    #[serde(with = "terms_serde")]
    terms: BTreeMap<Label, Rational>,
}

mod terms_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Term {
        label: Label,
        #[serde(with = "rational_str")]
        coeff: Rational,
    }

    pub fn serialize<S: Serializer>(t: &BTreeMap<Label, Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Term> = t.iter().map(|(l, c)| Term { label: l.clone(), coeff: c.clone() }).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<Label, Rational>, D::Error> {
        let v = Vec::<Term>::deserialize(d)?;
        let mut out = BTreeMap::new();
        for t in v {
            let e: &mut Rational = out.entry(t.label).or_insert_with(Rational::zero);
            *e += t.coeff;
        }
        out.retain(|_, c: &mut Rational| !c.is_zero());
        Ok(out)
    }
}

impl GradedClass {
    pub fn zero(ambient: AmbientDescriptor) -> Self {
        GradedClass { ambient, terms: BTreeMap::new() }
    }

    pub fn basis(ambient: AmbientDescriptor, label: Label) -> Result<Self> {
        Self::from_terms(ambient, [(label, Rational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Label, Rational)>>(ambient: AmbientDescriptor, terms: I) -> Result<Self> {
        let mut out = GradedClass::zero(ambient);
        for (l, c) in terms {
            out.add_term(l, c)?;
        }
        Ok(out)
    }

    pub fn add_term(&mut self, label: Label, coeff: Rational) -> Result<()> {
        self.ambient.accepts(&label)?;
        let e = self.terms.entry(label.clone()).or_insert_with(Rational::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&label);
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Label, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, label: &Label) -> Rational {
        self.terms.get(label).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The codimension-`c` part.
    pub fn component(&self, c: u32) -> GradedClass {
        GradedClass {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().filter(|(l, _)| l.codim() == c).map(|(l, q)| (l.clone(), q.clone())).collect(),
        }
    }

    /// Drops every term of codimension above `c`.
    pub fn truncate(&self, c: u32) -> GradedClass {
        GradedClass {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().filter(|(l, _)| l.codim() <= c).map(|(l, q)| (l.clone(), q.clone())).collect(),
        }
    }

    pub fn add(&self, other: &GradedClass) -> Result<GradedClass> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient.to_string(), other.ambient.to_string()));
        }
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GradedClass) -> Result<GradedClass> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, q: &Rational) -> GradedClass {
        if q.is_zero() {
            return GradedClass::zero(self.ambient.clone());
        }
        GradedClass { ambient: self.ambient.clone(), terms: self.terms.iter().map(|(l, c)| (l.clone(), c * q)).collect() }
    }
}

fn write_terms<'a, I: Iterator<Item = (String, &'a Rational)>>(f: &mut fmt::Formatter<'_>, it: I) -> fmt::Result {
    let mut first = true;
    for (name, c) in it {
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if name == "1" {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{name}")?;
        } else {
            write!(f, "{mag}*{name}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(l, c)| (l.render(&self.ambient), c)))
    }
}

/// Formats `(name, coeff)` pairs as a signed sum.
pub fn format_sum(terms: &[(String, Rational)]) -> String {
    struct W<'a>(&'a [(String, Rational)]);
    impl fmt::Display for W<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_terms(f, self.0.iter().filter(|(_, c)| !c.is_zero()).map(|(n, c)| (n.clone(), c)))
        }
    }
    W(terms).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn g25() -> AmbientDescriptor {
        AmbientDescriptor::grassmannian(2, 5).unwrap()
    }

    #[test]
    fn rational_display() {
        assert_eq!(rat(3, 2).to_string(), "3/2");
        assert_eq!(int(-1).to_string(), "-1");
        assert_eq!(rat(6, -4).to_string(), "-3/2");
        assert_eq!(parse_rational(" -15/2 ").unwrap(), rat(-15, 2));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn partition_normalizes_and_validates() {
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::parse("[3,1]").unwrap(), p(&[3, 1]));
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert!(p(&[2, 2]).fits_box(2, 3));
        assert!(!p(&[4]).fits_box(2, 3));
    }

    #[test]
    fn label_order_is_codim_then_descending() {
        let mut v = vec![Label::Schubert(p(&[3, 3, 3])), Label::Schubert(p(&[1])), Label::Schubert(p(&[4, 4, 1])), Label::Schubert(p(&[4, 3, 2]))];
        v.sort();
        assert_eq!(
            v,
            vec![Label::Schubert(p(&[1])), Label::Schubert(p(&[4, 4, 1])), Label::Schubert(p(&[4, 3, 2])), Label::Schubert(p(&[3, 3, 3])),]
        );
    }

    #[test]
    fn display_forms() {
        let a = GradedClass::from_terms(
            g25(),
            [(Label::Schubert(p(&[2])), rat(3, 2)), (Label::Schubert(p(&[1, 1])), rat(-1, 2)), (Label::Schubert(p(&[1])), int(1))],
        )
        .unwrap();
        assert_eq!(a.to_string(), "[1] + 3/2*[2] - 1/2*[1,1]");
        let h = GradedClass::from_terms(AmbientDescriptor::proj_space(4).unwrap(), [(Label::Power(2), rat(-5, 2))]).unwrap();
        assert_eq!(h.to_string(), "-5/2*h^2");
        assert_eq!(GradedClass::zero(g25()).to_string(), "0");
    }

    #[test]
    fn mismatched_ambients_error() {
        let a = GradedClass::basis(g25(), Label::Schubert(p(&[1]))).unwrap();
        let b = GradedClass::basis(AmbientDescriptor::grassmannian(2, 6).unwrap(), Label::Schubert(p(&[1]))).unwrap();
        assert!(matches!(a.add(&b), Err(Error::AmbientMismatch(..))));
    }

    #[test]
    fn labels_are_checked_against_ambient() {
        assert!(GradedClass::basis(g25(), Label::Schubert(p(&[4]))).is_err());
        assert!(GradedClass::basis(g25(), Label::Power(1)).is_err());
        let pp = AmbientDescriptor::product_proj(vec![1, 2]).unwrap();
        assert!(GradedClass::basis(pp.clone(), Label::Mono(vec![1, 2])).is_ok());
        assert!(GradedClass::basis(pp, Label::Mono(vec![2, 0])).is_err());
        assert!(AmbientDescriptor::grassmannian(3, 5).is_err());
        assert!(AmbientDescriptor::grassmannian_any(3, 5).is_ok());
    }

    #[test]
    fn serde_round_trip() {
        let a = GradedClass::from_terms(g25(), [(Label::Schubert(p(&[2])), rat(3, 2)), (Label::Schubert(p(&[1, 1])), rat(1, 2))]).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        let b: GradedClass = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }

    fn arb_class() -> impl Strategy<Value = GradedClass> {
        let lab = prop_oneof![Just(vec![1u32]), Just(vec![2]), Just(vec![1, 1]), Just(vec![3]), Just(vec![2, 1]), Just(vec![3, 3])];
        prop::collection::vec((lab, -20i64..20, 1i64..6), 0..8)
            .prop_map(|ts| GradedClass::from_terms(g25(), ts.into_iter().map(|(l, n, d)| (Label::Schubert(p(&l)), rat(n, d)))).unwrap())
    }

    proptest! {
        #[test]
        fn add_is_commutative_and_associative(a in arb_class(), b in arb_class(), c in arb_class()) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        }

        #[test]
        fn zero_is_identity_and_negation_cancels(a in arb_class()) {
            let z = GradedClass::zero(g25());
            prop_assert_eq!(a.add(&z).unwrap(), a.clone());
            prop_assert!(a.sub(&a).unwrap().is_zero());
        }

        #[test]
        fn scaling_distributes(a in arb_class(), b in arb_class(), n in -9i64..9, d in 1i64..5) {
            let q = rat(n, d);
            prop_assert_eq!(a.add(&b).unwrap().scale(&q), a.scale(&q).add(&b.scale(&q)).unwrap());
        }

        #[test]
        fn no_zero_terms_stored(a in arb_class(), b in arb_class()) {
            let s = a.add(&b).unwrap();
            prop_assert!(s.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn components_sum_back(a in arb_class()) {
            let mut acc = GradedClass::zero(g25());
            for c in 0..=6 {
                acc = acc.add(&a.component(c)).unwrap();
            }
            prop_assert_eq!(acc, a);
        }
    }
}
