//! Serializable witness computations used by catalog entries.

use serde::{Deserialize, Serialize};

use crate::algebra::{int, rat, AmbientDescriptor, GradedClass, Label, Partition, Rational};
use crate::chern::{ch_grassmannian, splitting_ch, splitting_top_chern, Tautological};
use crate::constructions::space::{curve_invariants, CurveSpec, Space, SpaceSpec};
use crate::constructions::{self as cons, BundleOnCurveSpec, RuledContext};
use crate::error::{Error, Result};
use crate::ring;
use crate::schubert::SchubertRing;

/// A bundle summand of a zero locus in a Grassmannian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GrassBundle {
    Wedge2,
    Sym2,
}

/// What is integrated against the cycle on a Grassmannian zero locus.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Integrand {
    #[default]
    Ch2,
    /// The cycle alone, giving an intersection number on X.
    One,
}

/// One way of computing an exact intersection number.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Computation {
    /// ∫ ch2 · cycle on a space.
    Pairing { space: SpaceSpec, cycle: String },
    /// ∫ (ch2(Y) − 3/8 B²) · cycle on the base Y of a double cover.
    DoubleCoverCriterion { base: SpaceSpec, branch: String, cycle: String },
    /// ∫ (ch2(X) + (c1² − 4c2)/2) · cycle for a rank-2 bundle on X.
    BundleCriterion { base: SpaceSpec, chern: [String; 2], cycle: String },
    /// ∫ (ch2(X) + L²/2) · cycle for P(O ⊕ L).
    OPlusL { base: SpaceSpec, line: String, cycle: String },
    /// ch2 · E over a curve blown up in a threefold.
    ExceptionalOverCurve { space: SpaceSpec, curve: CurveSpec },
    /// ch2 · E over a point blown up in a threefold.
    PointExceptional,
    /// Proper transform of a surface meeting blown-up curves in r points and
    /// passing through s blown-up points.
    ProperTransform {
        base: Box<Computation>,
        #[serde(default)]
        curves_met: u32,
        #[serde(default)]
        points_on: u32,
    },
    /// Proper transform of a surface containing a blown-up curve.
    ContainingCurve {
        base: Box<Computation>,
        #[serde(with = "crate::algebra::rational_str")]
        self_intersection: Rational,
        space: SpaceSpec,
        curve: CurveSpec,
    },
    /// A ruled surface over a curve in a projective bundle or an exceptional divisor.
    RuledSurface { context: RuledContext, curve: BundleOnCurveSpec, quotient: Vec<i64> },
    /// A divisor in a product of projective spaces, paired with a monomial.
    DivisorInProduct { dims: Vec<u32>, multidegree: Vec<i64>, exponents: Vec<u32> },
    /// A complete intersection in a product of projective spaces, paired with a monomial.
    CiInProduct { dims: Vec<u32>, multidegrees: Vec<Vec<i64>>, exponents: Vec<u32> },
    /// A zero locus in G(k,n) of hypersurface sections and tautological bundles,
    /// possibly followed by a double cover; pairs ch2 (or 1) with a Schubert cycle.
    GrassmannianZeroLocus {
        k: u32,
        n: u32,
        #[serde(default)]
        degrees: Vec<i64>,
        #[serde(default)]
        bundles: Vec<GrassBundle>,
        #[serde(default)]
        double_cover_branch: Option<i64>,
        cycle: Vec<(i64, Vec<u32>)>,
        #[serde(default)]
        integrand: Integrand,
    },
    /// ∫ ch2 on a del Pezzo surface of the given degree.
    DelPezzo { degree: u32 },
}

impl Computation {
    pub fn kind(&self) -> &'static str {
        match self {
            Computation::Pairing { .. } => "pairing",
            Computation::DoubleCoverCriterion { .. } => "double_cover_criterion",
            Computation::BundleCriterion { .. } => "bundle_criterion",
            Computation::OPlusL { .. } => "o_plus_l",
            Computation::ExceptionalOverCurve { .. } => "exceptional_over_curve",
            Computation::PointExceptional => "point_exceptional",
            Computation::ProperTransform { .. } => "proper_transform",
            Computation::ContainingCurve { .. } => "containing_curve",
            Computation::RuledSurface { .. } => "ruled_surface",
            Computation::DivisorInProduct { .. } => "divisor_in_product",
            Computation::CiInProduct { .. } => "ci_in_product",
            Computation::GrassmannianZeroLocus { .. } => "grassmannian_zero_locus",
            Computation::DelPezzo { .. } => "del_pezzo",
        }
    }

    pub fn evaluate(&self) -> Result<Rational> {
        match self {
            Computation::Pairing { space, cycle } => {
                let s = Space::build(space)?;
                s.pair_ch2(&s.parse(cycle)?)
            }
            Computation::DoubleCoverCriterion { base, branch, cycle } => {
                let s = Space::build(base)?;
                let b = s.parse(branch)?;
                let crit = s.ch2()?.sub(&b.pow(2)?.scale(&rat(3, 8)))?;
                s.integrate(&crit.mul(&s.parse(cycle)?)?)
            }
            Computation::BundleCriterion { base, chern, cycle } => {
                let s = Space::build(base)?;
                let c1 = s.parse(&chern[0])?;
                let c2 = s.parse(&chern[1])?;
                let crit = s.ch2()?.add(&c1.pow(2)?.sub(&c2.scale(&int(4)))?.scale(&rat(1, 2)))?;
                s.integrate(&crit.mul(&s.parse(cycle)?)?)
            }
            Computation::OPlusL { base, line, cycle } => {
                let s = Space::build(base)?;
                let l = s.parse(line)?;
                let crit = s.ch2()?.add(&l.pow(2)?.scale(&rat(1, 2)))?;
                s.integrate(&crit.mul(&s.parse(cycle)?)?)
            }
            Computation::ExceptionalOverCurve { space, curve } => {
                let s = Space::build(space)?;
                check_threefold(&s)?;
                let (kc, g) = curve_invariants(&s, curve)?;
                Ok(cons::blowup_curve_exceptional(&kc, genus_u32(&g)?).value)
            }
            Computation::PointExceptional => Ok(cons::blowup_point_3fold_exceptional().value),
            Computation::ProperTransform { base, curves_met, points_on } => {
                Ok(cons::blowup_mixed_3fold(&base.evaluate()?, *curves_met, *points_on).value)
            }
            Computation::ContainingCurve { base, self_intersection, space, curve } => {
                let s = Space::build(space)?;
                check_threefold(&s)?;
                let (kc, g) = curve_invariants(&s, curve)?;
                let dn = cons::normal_degree(&kc, genus_u32(&g)?);
                Ok(cons::blowup_curve_containing(&base.evaluate()?, self_intersection, &dn).value)
            }
            Computation::RuledSurface { context, curve, quotient } => Ok(cons::ruled_surface_ch2_dot(*context, curve, quotient)?.value),
            Computation::DivisorInProduct { dims, multidegree, exponents } => cons::divisor_in_product_ch2(dims, multidegree)?.pairing(exponents),
            Computation::CiInProduct { dims, multidegrees, exponents } => cons::ci_in_product_pairing(dims, multidegrees, exponents),
            Computation::GrassmannianZeroLocus { k, n, degrees, bundles, double_cover_branch, cycle, integrand } => {
                grassmannian_zero_locus(*k, *n, degrees, bundles, *double_cover_branch, cycle, *integrand)
            }
            Computation::DelPezzo { degree } => cons::del_pezzo_ch2(*degree),
        }
    }
}

fn check_threefold(s: &Space) -> Result<()> {
    if s.dim() == 3 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("expected a threefold, got dimension {}", s.dim())))
    }
}

fn genus_u32(g: &Rational) -> Result<u32> {
    if g.is_integer() && *g >= int(0) {
        g.to_integer().try_into().map_err(|_| Error::InvalidInput("genus too large".into()))
    } else {
        Err(Error::InvalidInput(format!("genus {g} is not a nonnegative integer")))
    }
}

/// ch2(X) · cycle · [X] (or cycle · [X]) for X cut out in G(k,n) by hypersurfaces of
/// degrees d_i and sections of ∧²S* or Sym²S*, optionally double covered with branch
/// b·σ1 (value downstairs).
pub fn grassmannian_zero_locus(
    k: u32,
    n: u32,
    degrees: &[i64],
    bundles: &[GrassBundle],
    branch: Option<i64>,
    cycle: &[(i64, Vec<u32>)],
    integrand: Integrand,
) -> Result<Rational> {
    let amb = AmbientDescriptor::grassmannian_any(k, n)?;
    let mut ring_ = SchubertRing::new(k, n)?;
    let s1 = ring_.sigma(&[1])?;
    let divisors: Vec<GradedClass> = degrees.iter().map(|d| s1.scale(&int(*d))).collect();
    let mut x = cons::ci_ch(&ch_grassmannian(k, n)?, &divisors)?;
    let mut fundamental = cons::ci_class(&amb, &divisors)?;
    for b in bundles {
        let t = match b {
            GrassBundle::Wedge2 => Tautological::Wedge2SDual,
            GrassBundle::Sym2 => Tautological::Sym2SDual,
        };
        x = cons::zero_locus_ch(&x, &splitting_ch(t, k, n)?)?;
        fundamental = ring_.multiply(&fundamental, &splitting_top_chern(t, k, n)?)?;
    }
    let mut ch2 = x.ch2();
    if let Some(b) = branch {
        ch2 = cons::double_cover_ch2(&x, &s1.scale(&int(b)))?.ch2;
    }
    let mut cyc = GradedClass::zero(amb.clone());
    for (c, parts) in cycle {
        cyc.add_term(Label::Schubert(Partition::new(parts.clone())?), int(*c))?;
    }
    let t = match integrand {
        Integrand::Ch2 => ring_.multiply(&ch2, &cyc)?,
        Integrand::One => cyc,
    };
    let prod = ring_.multiply(&t, &fundamental)?;
    ring::integrate(&prod)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(j: &str) -> Rational {
        serde_json::from_str::<Computation>(j).unwrap().evaluate().unwrap()
    }

    #[test]
    fn genus_twelve() {
        let v = eval(r#"{"grassmannian_zero_locus":{"k":3,"n":7,"bundles":["wedge2","wedge2","wedge2"],"cycle":[[1,[1]]]}}"#);
        assert_eq!(v, int(-13));
        let x22 = |cycle: &str| {
            eval(&format!(
                r#"{{"grassmannian_zero_locus":{{"k":3,"n":7,"bundles":["wedge2","wedge2","wedge2"],"cycle":{cycle},"integrand":"one"}}}}"#
            ))
        };
        // s2.s1 = s3 + s21 and s11.s1 = s21 + s111.
        assert_eq!(x22("[[1,[3]],[1,[2,1]]]"), int(12));
        assert_eq!(x22("[[1,[2,1]],[1,[1,1,1]]]"), int(10));
        assert_eq!(x22("[[1,[3]],[2,[2,1]],[1,[1,1,1]]]"), int(22));
    }

    #[test]
    fn genus_six_double_cover() {
        // Double cover of G(2,5) branched in a quadric section, paired with s22.
        let v = eval(r#"{"grassmannian_zero_locus":{"k":2,"n":5,"double_cover_branch":2,"cycle":[[1,[2,2]]]}}"#);
        assert_eq!(v, int(-1));
    }

    #[test]
    fn blowup_witnesses() {
        let t = r#"{"proper_transform":{"base":{"pairing":{"space":{"quadric":{"n":3}},"cycle":"h"}},"points_on":1}}"#;
        assert_eq!(eval(t), int(-1));
        let e = r#"{"exceptional_over_curve":{"space":{"proj":{"n":3}},"curve":{"degrees":[["h",1]],"genus":0}}}"#;
        assert_eq!(eval(e), int(-1));
        let c = r#"{"proper_transform":{"base":{"containing_curve":{"base":{"pairing":{"space":{"proj":{"n":3}},"cycle":"h"}},"self_intersection":"1","space":{"proj":{"n":3}},"curve":{"degrees":[["h",1]],"genus":0}}},"curves_met":2}}"#;
        assert_eq!(eval(c), rat(-3, 2));
        assert_eq!(eval(r#""point_exceptional""#), int(2));
    }

    #[test]
    fn criteria() {
        let v = eval(r#"{"bundle_criterion":{"base":{"proj":{"n":2}},"chern":["3*h","3*h^2"],"cycle":"1"}}"#);
        assert_eq!(v, int(0));
        let v = eval(r#"{"o_plus_l":{"base":{"proj":{"n":2}},"line":"h","cycle":"1"}}"#);
        assert_eq!(v, int(2));
        let v = eval(
            r#"{"double_cover_criterion":{"base":{"product":[{"proj":{"n":2,"var":"h1"}},{"proj":{"n":2,"var":"h2"}}]},"branch":"2*h1+2*h2","cycle":"h1*h2"}}"#,
        );
        assert_eq!(v, int(-3));
    }

    #[test]
    fn rejects_unknown_fields() {
        assert!(serde_json::from_str::<Computation>(r#"{"del_pezzo":{"degree":3,"x":1}}"#).is_err());
    }
}
