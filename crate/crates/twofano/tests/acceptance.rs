//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails outside the known threshold discrepancy.

use std::collections::BTreeSet;
use std::process::Command;

use twofano::algebra::{int, rat, GradedClass, Rational};
use twofano::catalog::{self, recipe, Catalog, Summary};
use twofano::chern;
use twofano::classifier::FanoStatus;
use twofano::constructions::space::{Space, SpaceSpec};
use twofano::constructions::{self as cons, BundleOnCurveSpec, RuledContext};
use twofano::schubert::{self, SchubertRing};
use twofano::Partition;

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn term(ring: &SchubertRing, parts: &[u32], c: i64) -> GradedClass {
    ring.sigma(parts).unwrap().scale(&int(c))
}

fn golden_schubert() -> Check {
    let r = SchubertRing::new(3, 7).map_err(|e| e.to_string())?;
    let got = schubert::multiply_many(3, 7, &[p(&[2, 1]), p(&[2, 1]), p(&[2, 1])]).map_err(|e| e.to_string())?;
    let want = term(&r, &[4, 4, 1], 4).add(&term(&r, &[4, 3, 2], 8)).and_then(|x| x.add(&term(&r, &[3, 3, 3], 2))).map_err(|e| e.to_string())?;
    ensure(got == want, || format!("sigma21^3 on G(3,7) = {got}"))?;
    let r = SchubertRing::new(2, 6).map_err(|e| e.to_string())?;
    let got = schubert::multiply_many(2, 6, &vec![p(&[1]); 6]).map_err(|e| e.to_string())?;
    let want = term(&r, &[4, 2], 9).add(&term(&r, &[3, 3], 5)).map_err(|e| e.to_string())?;
    ensure(got == want, || format!("sigma1^6 on G(2,6) = {got}"))?;
    let top = schubert::degree(&schubert::multiply_many(2, 6, &vec![p(&[1]); 8]).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(top == int(14), || format!("deg G(2,6) = {top}"))
}

fn pieri_vs_tableaux() -> Check {
    let mut pairs = 0u64;
    for k in 1..=3u32 {
        for n in k + 1..=8 {
            let mut r = SchubertRing::new(k, n).map_err(|e| e.to_string())?;
            let all = r.all_partitions();
            for lam in &all {
                for mu in &all {
                    if lam.weight() + mu.weight() > 12 {
                        continue;
                    }
                    let a = r.lr_multiply(lam, mu).map_err(|e| e.to_string())?;
                    let b = r.lr_multiply_tableaux(lam, mu).map_err(|e| e.to_string())?;
                    ensure(a == b, || format!("G({k},{n}) {lam} * {mu}: {a} vs {b}"))?;
                    pairs += 1;
                }
            }
        }
    }
    println!("    {pairs} products compared");
    Ok(())
}

fn got(s: &Summary, id: &str, i: usize) -> Result<Rational, String> {
    let e = s.entries.iter().find(|e| e.id == id).ok_or(format!("no entry {id}"))?;
    let w = e.witnesses.get(i).ok_or(format!("{id} has no witness {i}"))?;
    let g = w.got.as_deref().ok_or(format!("{id} witness {i} was not computed"))?;
    twofano::algebra::parse_rational(g).map_err(|e| e.to_string())
}

fn x22_values(s: &Summary) -> Check {
    for (i, v) in [(0, int(12)), (1, int(10)), (2, int(-13))] {
        let g = got(s, "mukai-g12", i)?;
        ensure(g == v, || format!("mukai-g12 witness {i}: {g}, expected {v}"))?;
    }
    Ok(())
}

struct NoCatalog;

impl catalog::Resolver for NoCatalog {
    fn status_of(&self, id: &str, _: usize) -> twofano::Result<FanoStatus> {
        Err(twofano::Error::Catalog(format!("no {id}")))
    }
}

/// Thresholds as stated in the classification list: 2-Fano iff n > t.
/// Returns the names of families whose computed status disagrees at t or t+1.
fn stated_thresholds() -> Result<Vec<String>, String> {
    use recipe::Template::*;
    let families: Vec<(&str, recipe::Template, u32)> = vec![
        ("Q^n", CiProj { degrees: vec![2] }, 2),
        ("X_{2.2}", CiProj { degrees: vec![2, 2] }, 5),
        ("X_3", CiProj { degrees: vec![3] }, 7),
        ("X_4", CiProj { degrees: vec![4] }, 15),
        ("X_{2.3}", CiProj { degrees: vec![2, 3] }, 11),
        ("X_{2.2.2}", CiProj { degrees: vec![2, 2, 2] }, 9),
        ("X_4 in P(2,1..1)", CiWeighted { head: vec![2], degrees: vec![4] }, 11),
        ("X_6 in P(3,2,1..1)", CiWeighted { head: vec![3, 2], degrees: vec![6] }, 23),
        ("X_6 in P(3,1..1)", CiWeighted { head: vec![3], degrees: vec![6] }, 26),
        ("X_{2.4} in P(2,1..1)", CiWeighted { head: vec![2], degrees: vec![2, 4] }, 14),
    ];
    let mut bad = Vec::new();
    for (name, t, thr) in families {
        let st = |n: u32| -> Result<FanoStatus, String> {
            let v = t.instantiate(n).and_then(|r| r.verdict(&NoCatalog, 0)).map_err(|e| e.to_string())?;
            v.map(|v| v.status).ok_or(format!("{name} at n = {n} is not classified"))
        };
        let (below, above) = (st(thr)?, st(thr + 1)?);
        if below == FanoStatus::TwoFano || above != FanoStatus::TwoFano {
            let first = (3..=thr + 1).find(|&n| st(n).ok() == Some(FanoStatus::TwoFano));
            println!(
                "    {name}: stated n > {thr}, computed n = {thr} -> {below:?}, n = {} -> {above:?}; first 2-Fano dimension {}",
                thr + 1,
                first.map(|n| n.to_string()).unwrap_or("none".into())
            );
            bad.push(name.to_string());
        }
    }
    Ok(bad)
}

fn mm_sweep(c: &Catalog, s: &Summary) -> Check {
    let mm: Vec<_> = s.entries.iter().filter(|e| e.id.starts_with("MM-")).collect();
    ensure(mm.len() == 84, || format!("{} Mori-Mukai entries, expected 84", mm.len()))?;
    let bad: Vec<&str> = mm.iter().filter(|e| !e.pass).map(|e| e.id.as_str()).collect();
    ensure(bad.is_empty(), || format!("failing: {bad:?}"))?;
    for (id, i, v) in [
        ("MM-2-4", 0, int(-27)),
        ("MM-3-2", 0, rat(-15, 2)),
        ("MM-3-8", 0, int(-3)),
        ("MM-3-19", 0, int(-1)),
        ("MM-3-24", 0, rat(-3, 2)),
        ("MM-4-7", 0, rat(-3, 2)),
        ("MM-4-9", 0, int(-1)),
        ("MM-4-12", 0, rat(-3, 2)),
        ("MM-5-1", 0, int(-2)),
    ] {
        let g = got(s, id, i)?;
        ensure(g == v, || format!("{id} witness {i}: {g}, expected {v}"))?;
    }
    ensure(c.entries.iter().filter(|e| e.id.starts_with("MM-")).count() == 84, || "catalog count".into())
}

fn fourfolds(s: &Summary) -> Check {
    let ff: Vec<_> = s.entries.iter().filter(|e| e.id.starts_with("fourfold-")).collect();
    ensure(ff.len() == 18, || format!("{} fourfold entries", ff.len()))?;
    let bad: Vec<&str> = ff.iter().filter(|e| !e.pass).map(|e| e.id.as_str()).collect();
    ensure(bad.is_empty(), || format!("failing: {bad:?}"))?;
    for id in ["fourfold-10", "fourfold-12"] {
        let g = got(s, id, 0)?;
        ensure(g == int(-2), || format!("{id} ruled surface: {g}"))?;
    }
    for n in 3..=8usize {
        let mut restr = vec![2i64];
        restr.extend(std::iter::repeat_n(1, n - 1));
        let c = BundleOnCurveSpec { genus: 0, restriction_degrees: restr, minus_k_dot_c: None };
        let v = cons::ruled_surface_ch2_dot(RuledContext::ProjBundle, &c, &[1, 1]).map_err(|e| e.to_string())?.value;
        ensure(v == int(-1), || format!("P(T_P^{n}) ruled surface: {v}"))?;
    }
    let nc = got(s, "fourfold-11", 0)?;
    ensure(nc == int(0), || format!("null-correlation criterion: {nc}"))?;
    let q3 = recipe::quadric(3).map_err(|e| e.to_string())?;
    let h = q3.c1().scale(&rat(1, 3));
    let crit = cons::o_plus_l_criterion(&q3, &h).map_err(|e| e.to_string())?;
    ensure(cons::is_positive_on_surfaces(&crit).map_err(|e| e.to_string())?, || format!("P(O(-1)+O) over Q^3: {crit}"))?;
    let p3 = chern::ch_proj_space(3).map_err(|e| e.to_string())?;
    let h2 = p3.c1().scale(&rat(1, 2));
    let crit = cons::o_plus_l_criterion(&p3, &h2).map_err(|e| e.to_string())?;
    ensure(cons::is_positive_on_surfaces(&crit).map_err(|e| e.to_string())?, || format!("P(O(-1)+O(1)) over P^3: {crit}"))
}

fn open_entries(s: &Summary) -> Check {
    let open: BTreeSet<&str> = s.entries.iter().filter(|e| e.status == Some(FanoStatus::Open)).map(|e| e.id.as_str()).collect();
    ensure(open == BTreeSet::from(["MM-3-30", "dp-y5-c2", "mukai-g8-c2"]), || format!("open: {open:?}"))?;
    ensure(s.open == 3, || format!("summary counts {} open", s.open))?;
    let v = got(s, "MM-3-30", 0)?;
    ensure(v == int(0), || format!("MM-3-30 witness {v}"))
}

fn exponents(dims: &[u32], total: u32) -> Vec<Vec<u32>> {
    match dims.split_first() {
        None => {
            if total == 0 {
                vec![vec![]]
            } else {
                vec![]
            }
        }
        Some((d, rest)) => (0..=(*d).min(total))
            .flat_map(|e| {
                exponents(rest, total - e).into_iter().map(move |mut t| {
                    t.insert(0, e);
                    t
                })
            })
            .collect(),
    }
}

fn dim_vectors(max_entry: u32, max_total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u32>> = (1..=max_entry).map(|d| vec![d]).collect();
    while let Some(v) = stack.pop() {
        let total: u32 = v.iter().sum();
        if v.len() >= 2 && total >= 3 {
            out.push(v.clone());
        }
        let last = *v.last().unwrap();
        for d in 1..=last.min(max_entry) {
            if total + d <= max_total {
                let mut w = v.clone();
                w.push(d);
                stack.push(w);
            }
        }
    }
    out.sort();
    out
}

fn orthogonality() -> Check {
    let mut checked = 0u64;
    for k in 1..=8u32 {
        for n in k + 1..=k + 16 {
            if k * (n - k) > 16 {
                continue;
            }
            let r = SchubertRing::new(k, n).map_err(|e| e.to_string())?;
            let top = k * (n - k);
            for lam in r.all_partitions() {
                let dual = r.dual(&lam).map_err(|e| e.to_string())?;
                for mu in r.partitions_of_weight(top - lam.weight()) {
                    let d = schubert::degree(&schubert::lr_multiply(k, n, &lam, &mu).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                    let want = if mu == dual { int(1) } else { int(0) };
                    ensure(d == want, || format!("G({k},{n}): deg {lam} * {mu} = {d}"))?;
                    checked += 1;
                }
            }
        }
    }
    for d in 1..=9u32 {
        let want = rat(3 * (d as i64 - 8), 2);
        let spec = if d == 9 {
            SpaceSpec::Proj { n: 2, var: None }
        } else {
            SpaceSpec::BlowupPoints { base: Box::new(SpaceSpec::Proj { n: 2, var: None }), count: 9 - d, prefix: None }
        };
        let s = Space::build(&spec).map_err(|e| e.to_string())?;
        let v = s.pair_ch2(&s.one()).map_err(|e| e.to_string())?;
        ensure(v == want && cons::del_pezzo_ch2(d).ok() == Some(want.clone()), || format!("del Pezzo degree {d}: {v}"))?;
    }
    let mut grid = 0u64;
    for dims in dim_vectors(3, 8).into_iter().filter(|d| d.len() <= 4) {
        let exps = exponents(&dims, dims.iter().sum::<u32>() - 3);
        for md in multidegrees(dims.len(), 3) {
            let ring = cons::divisor_in_product_ch2(&dims, &md).map_err(|e| e.to_string())?;
            for e in &exps {
                let a = ring.pairing(e).map_err(|e| e.to_string())?;
                let b = cons::divisor_in_product_closed(&dims, &md, e).map_err(|e| e.to_string())?;
                ensure(a == b, || format!("{md:?} on {dims:?} against {e:?}: {a} vs {b}"))?;
                grid += 1;
            }
        }
    }
    println!("    {checked} Schubert pairings, 9 del Pezzo surfaces, {grid} divisor pairings");
    Ok(())
}

fn multidegrees(len: usize, max: i64) -> Vec<Vec<i64>> {
    (0..len).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|v| {
                (0..=max).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect()
    })
}

fn deterministic_tsv() -> Check {
    let run = || Command::new(env!("CARGO_BIN_EXE_twofano")).args(["verify", "--format", "tsv"]).output().map_err(|e| e.to_string());
    let (a, b) = (run()?, run()?);
    ensure(a.status.success() && b.status.success(), || format!("exit codes {:?} {:?}", a.status.code(), b.status.code()))?;
    ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || "TSV output differs between runs".into())
}

fn report(n: u32, name: &str, r: Check, failed: &mut Vec<u32>) {
    match r {
        Ok(()) => println!("PASS {n} {name}"),
        Err(e) => {
            println!("FAIL {n} {name}: {e}");
            failed.push(n);
        }
    }
}

fn main() {
    let cat = Catalog::shipped();
    let sum = catalog::verify_all(&cat);
    let mut failed = Vec::new();

    report(1, "golden Schubert products", golden_schubert(), &mut failed);
    report(2, "Pieri and tableau products agree", pieri_vs_tableaux(), &mut failed);
    report(3, "genus 12 threefold in G(3,7): 12, 10, -13", x22_values(&sum), &mut failed);
    let thresholds = stated_thresholds()
        .and_then(|bad| ensure(bad.is_empty(), || format!("computed boundary differs from the stated one for {}", bad.join(", "))));
    report(4, "classification thresholds at t and t+1", thresholds, &mut failed);
    report(5, "Mori-Mukai threefolds", mm_sweep(&cat, &sum), &mut failed);
    report(6, "index 2 fourfolds", fourfolds(&sum), &mut failed);
    report(7, "open entries", open_entries(&sum), &mut failed);
    report(8, "orthogonality and closed forms", orthogonality(), &mut failed);
    report(9, "deterministic TSV", deterministic_tsv(), &mut failed);

    // The stated list puts the quartic, (2,3) and (2,2,2) boundaries one
    // dimension higher than the computed ones, which agree with the
    // individual statements n >= 15, 11, 9. That failure is expected.
    let known: BTreeSet<u32> = BTreeSet::from([4]);
    let unexpected: Vec<u32> = failed.iter().copied().filter(|n| !known.contains(n)).collect();
    println!("{} of 9 criteria pass; failing: {:?}; known discrepancy: {:?}; unexpected: {:?}", 9 - failed.len(), failed, known, unexpected);
    if !unexpected.is_empty() {
        std::process::exit(1);
    }
}
