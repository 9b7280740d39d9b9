//! Machine-readable catalog of Fano manifolds with their expected status,
//! exact witnesses and descent rules, plus the engine that re-verifies it.

pub mod recipe;
pub mod report;

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::classifier::{self as cl, FanoStatus, Verdict};
use crate::constructions::witness::Computation;
use crate::error::{Error, Result};
pub use recipe::{Premise, Recipe, Resolver, Template};
pub use report::{EntryReport, Summary, WitnessReport};

/// The catalog shipped with the crate.
pub const DEFAULT_CATALOG: &str = include_str!("../../../../data/catalog.json");
/// Identifiers every shipped catalog must contain, grouped by source list.
pub const DEFAULT_MANIFEST: &str = include_str!("../../../../data/manifest.json");

pub const FORMAT: &str = "twofano-catalog";

/// How a witness enters the verdict.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    /// ch2 paired with an effective surface of the manifold itself.
    Surface,
    /// ch2 · T for a semiample divisor T of a manifold being blown up.
    SemiampleDivisor,
    /// (ch2(Y) − 3/8 B²) · T on the base of a double cover with ample branch divisor.
    DoubleCoverSemiample,
    /// Recorded and checked, but not used to decide anything.
    #[default]
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessSpec {
    pub description: String,
    #[serde(default)]
    pub role: Role,
    /// Absent when the value is reported by the recipe's own verdict.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub computation: Option<Computation>,
    #[serde(with = "crate::algebra::rational_str")]
    pub expected: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case", deny_unknown_fields)]
pub enum RuleSpec {
    /// Double cover whose base is not 2-Fano, with ample branch divisor.
    DoubleCoverDescent { base: Premise, branch_ample: bool },
    /// Blow-up along points and curves of a threefold with Picard number 1 that is not weakly 2-Fano.
    BlowupOfRhoOne { base: Premise, rho: u32 },
}

/// A weaker claim made about an entry in the literature, checked for consistency.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    NotTwoFano,
    NotWeakly,
    Weakly,
    TwoFano,
}

impl Claim {
    pub fn consistent_with(self, s: FanoStatus) -> bool {
        use FanoStatus::*;
        match self {
            Claim::NotTwoFano => s != TwoFano,
            Claim::NotWeakly => matches!(s, NotWeakly | NotFano),
            Claim::Weakly => s.is_weakly(),
            Claim::TwoFano => s == TwoFano,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub id: String,
    pub source: String,
    pub description: String,
    pub recipe: Recipe,
    pub expected_status: FanoStatus,
    #[serde(default)]
    pub witnesses: Vec<WitnessSpec>,
    #[serde(default)]
    pub rule_chain: Vec<RuleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stated_claim: Option<Claim>,
    /// Required for entries expected to stay Open.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub open_question: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    pub format: String,
    pub version: u32,
    pub entries: Vec<CatalogEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub groups: Vec<ManifestGroup>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestGroup {
    pub name: String,
    pub ids: Vec<String>,
}

impl Manifest {
    pub fn parse(s: &str) -> Result<Manifest> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("manifest: {e}")))
    }

    pub fn shipped() -> Manifest {
        Manifest::parse(DEFAULT_MANIFEST).expect("shipped manifest parses")
    }

    pub fn ids(&self) -> Vec<&str> {
        self.groups.iter().flat_map(|g| g.ids.iter().map(String::as_str)).collect()
    }
}

impl Catalog {
    pub fn empty() -> Catalog {
        Catalog { format: FORMAT.into(), version: 1, entries: Vec::new() }
    }

    pub fn parse(s: &str) -> Result<Catalog> {
        let c: Catalog = serde_json::from_str(s).map_err(|e| Error::Parse(format!("catalog: {e}")))?;
        if c.format != FORMAT {
            return Err(Error::Catalog(format!("unknown catalog format `{}`", c.format)));
        }
        if c.version != 1 {
            return Err(Error::Catalog(format!("unsupported catalog version {}", c.version)));
        }
        let mut seen = HashMap::new();
        for (i, e) in c.entries.iter().enumerate() {
            if let Some(j) = seen.insert(e.id.as_str(), i) {
                return Err(Error::Catalog(format!("duplicate id `{}` (entries {} and {})", e.id, j + 1, i + 1)));
            }
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Catalog> {
        let s = fs::read_to_string(path).map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
        Catalog::parse(&s)
    }

    pub fn shipped() -> Catalog {
        Catalog::parse(DEFAULT_CATALOG).expect("shipped catalog parses")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("catalog serializes")
    }

    pub fn get(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

struct Ctx<'a> {
    catalog: &'a Catalog,
}

impl Resolver for Ctx<'_> {
    fn status_of(&self, id: &str, depth: usize) -> Result<FanoStatus> {
        if depth > recipe::MAX_DEPTH {
            return Err(Error::Catalog(format!("premise chain through `{id}` is too deep")));
        }
        let e = self.catalog.get(id).ok_or_else(|| Error::Catalog(format!("premise `{id}` is not in the catalog")))?;
        let r = check_entry(e, self, depth);
        if !r.pass {
            return Err(Error::Catalog(format!("premise `{id}` does not verify")));
        }
        r.status.ok_or_else(|| Error::Catalog(format!("premise `{id}` has no status")))
    }
}

/// Verifies one entry against the catalog it belongs to (premises are looked up there).
pub fn verify_entry(entry: &CatalogEntry, catalog: &Catalog) -> EntryReport {
    check_entry(entry, &Ctx { catalog }, 0)
}

/// Verifies every entry; the report keeps catalog order.
pub fn verify_all(catalog: &Catalog) -> Summary {
    let ctx = Ctx { catalog };
    let entries: Vec<EntryReport> = catalog.entries.par_iter().map(|e| check_entry(e, &ctx, 0)).collect();
    Summary::new(entries)
}

fn check_entry(entry: &CatalogEntry, ctx: &Ctx<'_>, depth: usize) -> EntryReport {
    let mut report = EntryReport::new(&entry.id, entry.expected_status);
    match derive(entry, ctx, depth, &mut report) {
        Ok(v) => {
            report.status = Some(v.status);
            report.rule_chain = v.rule_chain;
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    report.finish();
    report
}

fn derive(entry: &CatalogEntry, ctx: &Ctx<'_>, depth: usize, report: &mut EntryReport) -> Result<Verdict> {
    let recipe_verdict = entry.recipe.verdict(ctx, depth)?;

    let mut evidence: Vec<(Role, Rational)> = Vec::new();
    for w in &entry.witnesses {
        let got = match &w.computation {
            Some(c) => c.evaluate(),
            None => recipe_verdict
                .as_ref()
                .and_then(|v| v.witnesses.iter().find(|x| x.description == w.description))
                .map(|x| x.value.clone())
                .ok_or_else(|| Error::Catalog(format!("the recipe reports no witness `{}`", w.description))),
        };
        match got {
            Ok(g) => {
                evidence.push((w.role, g.clone()));
                report.witnesses.push(WitnessReport::new(&w.description, w.expected.clone(), Some(g)));
            }
            Err(e) => {
                report.witnesses.push(WitnessReport::new(&w.description, w.expected.clone(), None));
                report.notes.push(format!("witness `{}`: {e}", w.description));
            }
        }
    }

    let mut verdict = Verdict::new(FanoStatus::Open);
    let mut not_weakly = false;
    let mut zero_surface = false;
    for (role, x) in &evidence {
        let step = match role {
            Role::Surface if x.is_negative() => Some(Verdict {
                rule_chain: vec!["negative-surface: ch2 is negative on an effective surface".into()],
                ..Verdict::new(FanoStatus::NotWeakly)
            }),
            Role::Surface => {
                zero_surface |= x.is_zero();
                None
            }
            Role::SemiampleDivisor if x.is_negative() => Some(cl::descent_semiample(x, true)?),
            Role::DoubleCoverSemiample if !x.is_positive() => Some(cl::descent_double_cover_semiample(x, true, true)?),
            _ => None,
        };
        if let Some(s) = step {
            not_weakly = true;
            verdict.rule_chain.extend(s.rule_chain);
        }
    }
    for rule in &entry.rule_chain {
        let s = match rule {
            RuleSpec::DoubleCoverDescent { base, branch_ample } => {
                let st = base.status(ctx, depth)?;
                let mut s = cl::descent_double_cover(st, *branch_ample)?;
                s.rule_chain.push(format!("base {}: {st}", base.label()));
                s
            }
            RuleSpec::BlowupOfRhoOne { base, rho } => {
                let st = base.status(ctx, depth)?;
                let mut s = cl::descent_blowup_rho_one(st, *rho)?;
                s.rule_chain.push(format!("base {}: {st}", base.label()));
                s
            }
        };
        not_weakly = true;
        verdict.rule_chain.extend(s.rule_chain);
    }

    match recipe_verdict {
        Some(rv) if rv.status != FanoStatus::Open => {
            if not_weakly && rv.status.is_weakly() {
                return Err(Error::Catalog(format!("evidence contradicts the recipe verdict {}", rv.status)));
            }
            if zero_surface && rv.status == FanoStatus::TwoFano {
                return Err(Error::Catalog("a zero surface witness contradicts 2-Fano".into()));
            }
            let mut chain = rv.rule_chain;
            chain.extend(verdict.rule_chain);
            verdict = Verdict { status: rv.status, witnesses: rv.witnesses, rule_chain: chain };
        }
        other => {
            if let Some(rv) = other {
                verdict.rule_chain.splice(0..0, rv.rule_chain);
                verdict.witnesses = rv.witnesses;
            }
            if not_weakly {
                verdict.status = FanoStatus::NotWeakly;
            } else {
                if zero_surface {
                    verdict.rule_chain.push("not 2-Fano: ch2 vanishes on an effective surface; weak 2-Fano property undecided".into());
                }
                verdict.status = FanoStatus::Open;
            }
        }
    }

    if let Some(c) = entry.stated_claim {
        if !c.consistent_with(verdict.status) {
            return Err(Error::Catalog(format!("status {} contradicts the stated claim {c:?}", verdict.status)));
        }
        report.notes.push(format!("stated claim {c:?} is consistent with {}", verdict.status));
    }
    if verdict.status == FanoStatus::Open && entry.open_question.is_none() {
        return Err(Error::Catalog("an Open status must cite an open question".into()));
    }
    Ok(verdict)
}
