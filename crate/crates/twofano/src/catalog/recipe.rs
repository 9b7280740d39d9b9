//! Construction recipes and the verdicts they determine on their own.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::algebra::{int, rat, Rational};
use crate::chern;
use crate::classifier::{self as cl, FanoStatus, Verdict};
use crate::constructions::space::{Space, SpaceSpec};
use crate::constructions::witness::GrassBundle;
use crate::constructions::{self as cons, SurfaceWitness};
use crate::error::{Error, Result};
use crate::ring;

/// A manifold referenced from another entry: by catalog id or inline.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Premise {
    Entry(String),
    Recipe(Box<Recipe>),
}

/// Base of a P(O ⊕ L) bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum LineBase {
    Proj(u32),
    Product(Vec<u32>),
    Quadric(u32),
}

/// One member of a dimension-indexed family; `n` is the dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Template {
    /// X of the given degrees in P^{n+c}.
    CiProj { degrees: Vec<u32> },
    /// X of the given degrees in P(head, 1, ..., 1) with n + 1 + c weights in total.
    CiWeighted { head: Vec<u32>, degrees: Vec<u32> },
    /// Double cover of P^n branched along a hypersurface of degree `branch`.
    DoubleCoverProj { branch: u32 },
    /// Double cover of Q^n branched along its intersection with a hypersurface of degree `branch`.
    DoubleCoverQuadric { branch: u32 },
}

impl Template {
    pub fn instantiate(&self, n: u32) -> Result<Recipe> {
        Ok(match self {
            Template::CiProj { degrees } => Recipe::CiProj { ambient_dim: n + degrees.len() as u32, degrees: degrees.clone() },
            Template::CiWeighted { head, degrees } => {
                let total = (n + 1) as usize + degrees.len();
                if total < head.len() {
                    return Err(Error::InvalidInput("weight head longer than the weight list".into()));
                }
                let mut weights = head.clone();
                weights.resize(total, 1);
                Recipe::CiWeighted { weights, degrees: degrees.clone() }
            }
            Template::DoubleCoverProj { branch } => Recipe::DoubleCoverProj { n, branch: *branch },
            Template::DoubleCoverQuadric { branch } => Recipe::DoubleCoverQuadric { n, branch: *branch },
        })
    }
}

/// How a manifold is built.
///
/// The first group of variants is decided by the classifier. The descriptive
/// variants carry no criterion of their own; their status comes from the
/// entry's witnesses and rules.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Recipe {
    Proj {
        n: u32,
    },
    /// S_d; degree 9 is P², degree 8 is F1.
    DelPezzoSurface {
        degree: u32,
    },
    CiProj {
        ambient_dim: u32,
        degrees: Vec<u32>,
    },
    CiWeighted {
        weights: Vec<u32>,
        degrees: Vec<u32>,
    },
    CiGrass {
        k: u32,
        n: u32,
        degrees: Vec<u32>,
    },
    LinearSectionGrass {
        k: u32,
        n: u32,
        c: u32,
    },
    CiOgPlus {
        k: u32,
        degrees: Vec<u32>,
    },
    CiSg {
        k: u32,
        degrees: Vec<u32>,
    },
    CiG2p2 {
        degrees: Vec<u32>,
    },
    CiRankOneB4 {
        name: String,
        dim: u32,
        index: u32,
        #[serde(with = "crate::algebra::rational_str")]
        a: Rational,
        degrees: Vec<u32>,
    },
    DoubleCoverProj {
        n: u32,
        branch: u32,
    },
    DoubleCoverQuadric {
        n: u32,
        branch: u32,
    },
    Product {
        factors: Vec<Premise>,
    },
    /// P(O ⊕ L) with L of the given (multi)degree.
    OPlusL {
        base: LineBase,
        line: Vec<i64>,
    },
    /// P(E) for a rank-2 bundle E with Chern classes `chern` over `base`, a member of
    /// a classification of Fano manifolds.
    RankTwoBundle {
        base: SpaceSpec,
        chern: [String; 2],
    },
    /// A dimension-indexed family; every template must have the same thresholds.
    Family {
        templates: Vec<Template>,
        min_dim: u32,
        #[serde(default = "default_scan")]
        scan_to: u32,
    },
    /// Several manifolds sharing one status.
    Instances {
        cases: Vec<Recipe>,
    },
    Blowup {
        base: Premise,
        center: String,
    },
    DoubleCover {
        base: Premise,
        branch: String,
    },
    ProjBundle {
        base: Premise,
        bundle: String,
    },
    Divisor {
        ambient: String,
        class: String,
    },
    DivisorInProduct {
        dims: Vec<u32>,
        multidegree: Vec<i64>,
    },
    CiInProduct {
        dims: Vec<u32>,
        multidegrees: Vec<Vec<i64>>,
    },
    ZeroLocus {
        k: u32,
        n: u32,
        bundles: Vec<GrassBundle>,
    },
}

fn default_scan() -> u32 {
    120
}

/// Resolves catalog ids to verified statuses.
pub trait Resolver {
    fn status_of(&self, id: &str, depth: usize) -> Result<FanoStatus>;
}

pub(crate) const MAX_DEPTH: usize = 8;

impl Premise {
    pub fn status(&self, r: &dyn Resolver, depth: usize) -> Result<FanoStatus> {
        if depth > MAX_DEPTH {
            return Err(Error::Catalog("premise chain too deep".into()));
        }
        match self {
            Premise::Entry(id) => r.status_of(id, depth + 1),
            Premise::Recipe(rec) => match rec.verdict(r, depth + 1)? {
                Some(v) => Ok(v.status),
                None => Err(Error::Catalog("premise recipe has no criterion of its own".into())),
            },
        }
    }

    pub fn label(&self) -> String {
        match self {
            Premise::Entry(id) => id.clone(),
            Premise::Recipe(r) => r.kind().to_string(),
        }
    }
}

impl Recipe {
    pub fn kind(&self) -> &'static str {
        match self {
            Recipe::Proj { .. } => "proj",
            Recipe::DelPezzoSurface { .. } => "del_pezzo_surface",
            Recipe::CiProj { .. } => "ci_proj",
            Recipe::CiWeighted { .. } => "ci_weighted",
            Recipe::CiGrass { .. } => "ci_grass",
            Recipe::LinearSectionGrass { .. } => "linear_section_grass",
            Recipe::CiOgPlus { .. } => "ci_og_plus",
            Recipe::CiSg { .. } => "ci_sg",
            Recipe::CiG2p2 { .. } => "ci_g2p2",
            Recipe::CiRankOneB4 { .. } => "ci_rank_one_b4",
            Recipe::DoubleCoverProj { .. } => "double_cover_proj",
            Recipe::DoubleCoverQuadric { .. } => "double_cover_quadric",
            Recipe::Product { .. } => "product",
            Recipe::OPlusL { .. } => "o_plus_l",
            Recipe::RankTwoBundle { .. } => "rank_two_bundle",
            Recipe::Family { .. } => "family",
            Recipe::Instances { .. } => "instances",
            Recipe::Blowup { .. } => "blowup",
            Recipe::DoubleCover { .. } => "double_cover",
            Recipe::ProjBundle { .. } => "proj_bundle",
            Recipe::Divisor { .. } => "divisor",
            Recipe::DivisorInProduct { .. } => "divisor_in_product",
            Recipe::CiInProduct { .. } => "ci_in_product",
            Recipe::ZeroLocus { .. } => "zero_locus",
        }
    }

    /// The verdict the recipe determines by itself, or `None` for descriptive recipes.
    pub fn verdict(&self, r: &dyn Resolver, depth: usize) -> Result<Option<Verdict>> {
        let v = match self {
            Recipe::Proj { n } => {
                if *n == 0 {
                    return Err(Error::InvalidInput("P^0 is a point".into()));
                }
                let mut v = Verdict::new(FanoStatus::TwoFano);
                v.witnesses.push(SurfaceWitness::new("coefficient of h^2 in ch2", rat(*n as i64 + 1, 2)));
                v.rule_chain.push("projective space".into());
                v
            }
            Recipe::DelPezzoSurface { degree } => {
                let x = cons::del_pezzo_ch2(*degree)?;
                let mut v = Verdict::new(FanoStatus::from_sign(&x));
                v.witnesses.push(SurfaceWitness::new(format!("ch2(S_{degree})"), x));
                v.rule_chain.push("surface: the fundamental class spans the cone".into());
                v
            }
            Recipe::CiProj { ambient_dim, degrees } => cl::classify_ci_proj(*ambient_dim, degrees)?,
            Recipe::CiWeighted { weights, degrees } => cl::classify_ci_weighted(weights, degrees)?,
            Recipe::CiGrass { k, n, degrees } => cl::classify_ci_grass(*k, *n, degrees)?,
            Recipe::LinearSectionGrass { k, n, c } => cl::classify_linear_section_grass(*k, *n, *c)?,
            Recipe::CiOgPlus { k, degrees } => cl::classify_ci_og_plus(*k, degrees)?,
            Recipe::CiSg { k, degrees } => cl::classify_ci_sg(*k, degrees)?,
            Recipe::CiG2p2 { degrees } => cl::classify_ci_g2p2(degrees)?,
            Recipe::CiRankOneB4 { name, dim, index, a, degrees } => cl::classify_rank_one_b4(name, *dim, *index, a, degrees)?,
            Recipe::DoubleCoverProj { n, branch } => cl::classify_double_cover(&chern::ch_proj_space(*n)?, *branch)?,
            Recipe::DoubleCoverQuadric { n, branch } => cl::classify_double_cover(&quadric(*n)?, *branch)?,
            Recipe::Product { factors } => {
                if factors.len() < 2 {
                    return Err(Error::InvalidInput("a product needs at least two factors".into()));
                }
                let mut status = None;
                let mut v = Verdict::new(FanoStatus::Open);
                for f in factors {
                    let s = f.status(r, depth)?;
                    v.rule_chain.push(format!("factor {}: {s}", f.label()));
                    status = Some(match status {
                        None => s,
                        Some(prev) => cons::product_ch2_status(prev, s),
                    });
                }
                v.status = status.expect("at least two factors");
                v.rule_chain.push("product: never 2-Fano; weakly 2-Fano iff every factor is".into());
                v
            }
            Recipe::OPlusL { base, line } => o_plus_l(base, line)?,
            Recipe::RankTwoBundle { base, chern } => rank_two_bundle(base, chern)?,
            Recipe::Family { templates, min_dim, scan_to } => family(templates, *min_dim, *scan_to, r, depth)?,
            Recipe::Instances { cases } => {
                if cases.is_empty() {
                    return Err(Error::InvalidInput("no instances".into()));
                }
                let mut out = Verdict::new(FanoStatus::Open);
                let mut status = None;
                for (i, c) in cases.iter().enumerate() {
                    let v = c.verdict(r, depth + 1)?.ok_or_else(|| Error::Catalog("instance recipes must carry a criterion".into()))?;
                    if status.is_some_and(|s| s != v.status) {
                        return Err(Error::Catalog(format!("instance {} has status {}, unlike the others", i + 1, v.status)));
                    }
                    status = Some(v.status);
                    for w in v.witnesses {
                        out.witnesses.push(SurfaceWitness::new(format!("case {}: {}", i + 1, w.description), w.value));
                    }
                }
                out.status = status.expect("nonempty");
                out.rule_chain.push(format!("all {} instances agree", cases.len()));
                out
            }
            Recipe::Blowup { .. }
            | Recipe::DoubleCover { .. }
            | Recipe::ProjBundle { .. }
            | Recipe::Divisor { .. }
            | Recipe::DivisorInProduct { .. }
            | Recipe::CiInProduct { .. }
            | Recipe::ZeroLocus { .. } => return Ok(None),
        };
        Ok(Some(v))
    }
}

/// Q^n as a b4 = 1 ambient: c1 = nH, ch2 = (n−2)/2 H².
pub fn quadric(n: u32) -> Result<chern::ChernCharacter> {
    if n < 3 {
        return Err(Error::InvalidInput("quadrics of dimension at least 3 only".into()));
    }
    chern::ch_rank_one_b4(&format!("Q^{n}"), n, rat(n as i64 - 2, 2), n)
}

fn o_plus_l(base: &LineBase, line: &[i64]) -> Result<Verdict> {
    let (b, l) = match base {
        LineBase::Proj(n) => {
            let b = chern::ch_proj_space(*n)?;
            if line.len() != 1 {
                return Err(Error::InvalidInput("a line bundle on P^n has one degree".into()));
            }
            let l = ring::multiple_of_hyperplane(b.ambient(), &int(line[0]))?;
            (b, l)
        }
        LineBase::Product(dims) => {
            let b = chern::ch_product_proj(dims)?;
            let l = ring::multidegree(b.ambient(), line)?;
            (b, l)
        }
        LineBase::Quadric(n) => {
            let b = quadric(*n)?;
            if line.len() != 1 {
                return Err(Error::InvalidInput("a line bundle on a quadric has one degree".into()));
            }
            let l = ring::multiple_of_hyperplane(b.ambient(), &int(line[0]))?;
            (b, l)
        }
    };
    let status = cons::o_plus_l_status(&b, &l)?;
    let mut v = Verdict::new(status);
    let crit = cons::o_plus_l_criterion(&b, &l)?;
    for (i, x) in cons::surface_cone_pairings(&crit)?.into_iter().enumerate() {
        v.witnesses.push(SurfaceWitness::new(format!("criterion on surface generator {}", i + 1), x));
    }
    v.rule_chain.push("o-plus-l: never 2-Fano; weakly iff Fano and ch2(X) + L^2/2 >= 0".into());
    Ok(v)
}

fn rank_two_bundle(base: &SpaceSpec, chern: &[String; 2]) -> Result<Verdict> {
    let s = Space::build(base)?;
    if s.dim() < 2 {
        return Err(Error::InvalidInput("the base must have dimension at least 2".into()));
    }
    let c1 = s.parse(&chern[0])?;
    let c2 = s.parse(&chern[1])?;
    let crit = s.ch2()?.add(&c1.pow(2)?.sub(&c2.scale(&int(4)))?.scale(&rat(1, 2)))?;
    let cyc = if s.dim() == 2 {
        s.one()
    } else if s.names().len() == 1 {
        s.parse(&format!("{}^{}", s.names()[0], s.dim() - 2))?
    } else {
        return Err(Error::InvalidInput("rank-two criterion needs a surface base or a base with one generator".into()));
    };
    let x = s.integrate(&crit.mul(&cyc)?)?;
    let status = if x.is_negative() { FanoStatus::NotWeakly } else { FanoStatus::WeaklyNotTwoFano };
    let mut v = Verdict::new(status);
    v.witnesses.push(SurfaceWitness::new("criterion ch2(X) + (c1^2 - 4 c2)/2", x));
    v.rule_chain.push("rank-two-bundle: ch2 is the pullback of the criterion class; never 2-Fano".into());
    Ok(v)
}

fn family(templates: &[Template], min_dim: u32, scan_to: u32, r: &dyn Resolver, depth: usize) -> Result<Verdict> {
    if templates.is_empty() {
        return Err(Error::InvalidInput("a family needs a template".into()));
    }
    let mut found: Option<(u32, u32)> = None;
    for t in templates {
        let mut statuses = Vec::new();
        for n in min_dim..=scan_to {
            let v = t.instantiate(n)?.verdict(r, depth + 1)?.expect("templates are classified");
            statuses.push((n, v.status));
        }
        let first = |p: &dyn Fn(FanoStatus) -> bool| statuses.iter().find(|(_, s)| p(*s)).map(|(n, _)| *n);
        let two = first(&|s| s == FanoStatus::TwoFano).ok_or_else(|| Error::Catalog(format!("no 2-Fano member up to n = {scan_to}")))?;
        let weak = first(&|s| s.is_weakly()).expect("2-Fano implies weakly");
        for (n, s) in &statuses {
            let want = if *n >= two {
                FanoStatus::TwoFano
            } else if *n >= weak {
                FanoStatus::WeaklyNotTwoFano
            } else {
                *s
            };
            if *s != want || (*n < weak && s.is_weakly()) {
                return Err(Error::Catalog(format!("status is not monotone in n at n = {n}")));
            }
        }
        match found {
            None => found = Some((two, weak)),
            Some(f) if f == (two, weak) => {}
            Some(f) => {
                return Err(Error::Catalog(format!("templates disagree: thresholds {f:?} versus {:?}", (two, weak))));
            }
        }
    }
    let (two, weak) = found.expect("nonempty");
    let mut v = Verdict::new(FanoStatus::TwoFano);
    v.witnesses.push(SurfaceWitness::new("least n with X 2-Fano", int(two as i64)));
    v.witnesses.push(SurfaceWitness::new("least n with X weakly 2-Fano", int(weak as i64)));
    v.rule_chain.push(format!("family: 2-Fano iff n >= {two}, weakly 2-Fano iff n >= {weak} (checked for n <= {scan_to})"));
    if templates.len() > 1 {
        v.rule_chain.push(format!("{} descriptions agree", templates.len()));
    }
    Ok(v)
}

/// Boundary statuses of a family at t−1, t, t+1 for both thresholds.
pub fn family_boundary(template: &Template, two: u32, weak: u32, r: &dyn Resolver) -> Result<Vec<(u32, FanoStatus)>> {
    let mut ns: Vec<u32> = [weak.saturating_sub(1), weak, weak + 1, two.saturating_sub(1), two, two + 1].into();
    ns.sort_unstable();
    ns.dedup();
    ns.into_iter().map(|n| Ok((n, template.instantiate(n)?.verdict(r, 0)?.expect("templates are classified").status))).collect()
}
