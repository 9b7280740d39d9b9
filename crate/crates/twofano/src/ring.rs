//! Multiplication and integration of graded classes on every supported ambient.

use num_traits::{One, Zero};

use crate::algebra::{AmbientDescriptor, GradedClass, Label, Rational};
use crate::error::{Error, Result};
use crate::schubert::{self, SchubertRing};

/// Product of two classes on the same ambient.
///
/// Terms above the ambient dimension vanish. On OG+, SG, G2/P2 and rank-one
/// b4 = 1 ambients the product is truncated at codimension 2.
pub fn multiply(a: &GradedClass, b: &GradedClass) -> Result<GradedClass> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch(a.ambient.to_string(), b.ambient.to_string()));
    }
    let amb = a.ambient.clone();
    match &amb {
        AmbientDescriptor::Grassmannian { k, n } => SchubertRing::new(*k, *n)?.multiply(a, b),
        AmbientDescriptor::OgPlus { .. } | AmbientDescriptor::Sg { .. } | AmbientDescriptor::G2P2 | AmbientDescriptor::RankOnePicBFour { .. } => {
            schubert::reduced_ring_multiply(&amb, a, b)
        }
        AmbientDescriptor::ProjSpace { .. } | AmbientDescriptor::WeightedProj { .. } => {
            let dim = amb.dimension();
            let mut out = GradedClass::zero(amb.clone());
            for (la, ca) in a.terms() {
                for (lb, cb) in b.terms() {
                    let (Label::Power(x), Label::Power(y)) = (la, lb) else {
                        return Err(Error::LabelMismatch(format!("{la:?} * {lb:?}")));
                    };
                    if x + y <= dim {
                        out.add_term(Label::Power(x + y), ca * cb)?;
                    }
                }
            }
            Ok(out)
        }
        AmbientDescriptor::ProductProj { dims } => {
            let mut out = GradedClass::zero(amb.clone());
            for (la, ca) in a.terms() {
                for (lb, cb) in b.terms() {
                    let (Label::Mono(x), Label::Mono(y)) = (la, lb) else {
                        return Err(Error::LabelMismatch(format!("{la:?} * {lb:?}")));
                    };
                    let e: Vec<u32> = x.iter().zip(y).map(|(p, q)| p + q).collect();
                    if e.iter().zip(dims).all(|(p, d)| p <= d) {
                        out.add_term(Label::Mono(e), ca * cb)?;
                    }
                }
            }
            Ok(out)
        }
    }
}

pub fn power(a: &GradedClass, m: u32) -> Result<GradedClass> {
    let mut acc = unit(&a.ambient);
    for _ in 0..m {
        acc = multiply(&acc, a)?;
    }
    Ok(acc)
}

/// The fundamental class 1.
pub fn unit(amb: &AmbientDescriptor) -> GradedClass {
    let label = match amb {
        AmbientDescriptor::Grassmannian { .. } => Label::Schubert(Default::default()),
        AmbientDescriptor::ProductProj { dims } => Label::Mono(vec![0; dims.len()]),
        _ => Label::Power(0),
    };
    GradedClass::from_terms(amb.clone(), [(label, Rational::one())]).expect("unit label")
}

/// The hyperplane-type generator: h, H, σ1 (σ1 = 2H on OG+), or h_i on a product.
pub fn hyperplane(amb: &AmbientDescriptor, factor: usize) -> Result<GradedClass> {
    let label = match amb {
        AmbientDescriptor::Grassmannian { .. } => Label::Schubert(crate::algebra::Partition::new(vec![1])?),
        AmbientDescriptor::ProductProj { dims } => {
            if factor >= dims.len() {
                return Err(Error::InvalidInput(format!("factor {factor} out of range")));
            }
            let mut e = vec![0; dims.len()];
            e[factor] = 1;
            Label::Mono(e)
        }
        _ => Label::Power(1),
    };
    GradedClass::basis(amb.clone(), label)
}

/// Degree of the zero-dimensional part. Only defined where the point class is a basis label.
pub fn integrate(x: &GradedClass) -> Result<Rational> {
    match &x.ambient {
        AmbientDescriptor::ProjSpace { n } => Ok(x.coeff(&Label::Power(*n))),
        AmbientDescriptor::ProductProj { dims } => Ok(x.coeff(&Label::Mono(dims.clone()))),
        AmbientDescriptor::Grassmannian { .. } => schubert::degree(x),
        other => Err(Error::InvalidInput(format!("no degree map on {other}"))),
    }
}

/// Checks that a class is concentrated in codimension 1.
pub fn check_divisor(d: &GradedClass) -> Result<()> {
    if d.terms().all(|(l, _)| l.codim() == 1) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{d} is not a divisor class")))
    }
}

/// `a*h` style divisor: `a` times the generator.
pub fn multiple_of_hyperplane(amb: &AmbientDescriptor, a: &Rational) -> Result<GradedClass> {
    if a.is_zero() {
        return Ok(GradedClass::zero(amb.clone()));
    }
    Ok(hyperplane(amb, 0)?.scale(a))
}

/// Multidegree divisor a_1 h_1 + ... + a_r h_r on a product of projective spaces.
pub fn multidegree(amb: &AmbientDescriptor, degs: &[i64]) -> Result<GradedClass> {
    let AmbientDescriptor::ProductProj { dims } = amb else {
        return Err(Error::InvalidInput(format!("{amb} is not a product")));
    };
    if degs.len() != dims.len() {
        return Err(Error::InvalidInput("multidegree length differs from number of factors".into()));
    }
    let mut out = GradedClass::zero(amb.clone());
    for (i, &d) in degs.iter().enumerate() {
        out = out.add(&hyperplane(amb, i)?.scale(&Rational::from_integer(d.into())))?;
    }
    Ok(out)
}
