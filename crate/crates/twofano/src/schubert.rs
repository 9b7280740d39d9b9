//! Schubert calculus on G(k,n) and the truncated rings of b4 = 1 ambients.
//!
//! Products are computed two ways: by iterated Pieri on an h-expansion of one
//! factor, and by direct Littlewood-Richardson tableau enumeration.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{int, rat, AmbientDescriptor, GradedClass, Label, Partition, Rational};
use crate::error::{Error, Result};

type Lin = BTreeMap<Partition, BigInt>;

fn add_into(acc: &mut Lin, p: Partition, c: BigInt) {
    let e = acc.entry(p.clone()).or_insert_with(BigInt::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&p);
    }
}

/// Multiplication engine for one G(k,n), caching h-expansions of Schubert classes.
#[derive(Debug, Clone)]
pub struct SchubertRing {
    k: u32,
    n: u32,
    h_cache: HashMap<Partition, BTreeMap<Vec<u32>, BigInt>>,
}

impl SchubertRing {
    /// Any 1 <= k < n is accepted.
    pub fn new(k: u32, n: u32) -> Result<Self> {
        AmbientDescriptor::grassmannian_any(k, n)?;
        Ok(SchubertRing { k, n, h_cache: HashMap::new() })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn cols(&self) -> u32 {
        self.n - self.k
    }

    pub fn ambient(&self) -> AmbientDescriptor {
        AmbientDescriptor::Grassmannian { k: self.k, n: self.n }
    }

    pub fn fits(&self, p: &Partition) -> bool {
        p.fits_box(self.k, self.cols())
    }

    fn check(&self, p: &Partition) -> Result<()> {
        if self.fits(p) {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("{p} does not fit the {}x{} box", self.k, self.cols())))
        }
    }

    pub fn top(&self) -> Partition {
        Partition::new(vec![self.cols(); self.k as usize]).expect("rectangle")
    }

    /// Every partition in the box of the given weight, in descending lex order.
    pub fn partitions_of_weight(&self, w: u32) -> Vec<Partition> {
        fn rec(rows: u32, maxp: u32, w: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if w == 0 {
                out.push(Partition::new(cur.clone()).expect("decreasing"));
                return;
            }
            if rows == 0 {
                return;
            }
            for p in (1..=maxp.min(w)).rev() {
                cur.push(p);
                rec(rows - 1, p, w - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self.k, self.cols(), w, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions in the box.
    pub fn all_partitions(&self) -> Vec<Partition> {
        (0..=self.k * self.cols()).flat_map(|w| self.partitions_of_weight(w)).collect()
    }

    /// Horizontal strips of size p added to λ inside the box.
    fn pieri_raw(&self, lam: &Partition, p: u32) -> Vec<Partition> {
        let k = self.k as usize;
        let lam_v: Vec<u32> = (0..k).map(|i| lam.part(i)).collect();
        let mut out = Vec::new();
        let mut cur = vec![0u32; k];
        fn rec(i: usize, left: u32, lam: &[u32], cols: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == lam.len() {
                if left == 0 {
                    out.push(Partition::new(cur.clone()).expect("strip keeps order"));
                }
                return;
            }
            let hi = if i == 0 { cols } else { lam[i - 1] };
            let max_add = hi.saturating_sub(lam[i]).min(left);
            for add in 0..=max_add {
                cur[i] = lam[i] + add;
                rec(i + 1, left - add, lam, cols, cur, out);
            }
        }
        rec(0, p, &lam_v, self.cols(), &mut cur, &mut out);
        out
    }

    fn pieri_lin(&self, x: &Lin, p: u32) -> Lin {
        let mut out = Lin::new();
        for (lam, c) in x {
            for mu in self.pieri_raw(lam, p) {
                add_into(&mut out, mu, c.clone());
            }
        }
        out
    }

    /// σ_μ as an integer combination of products h_{a1} h_{a2} ... (valid in the ring of G(k,n)).
    fn h_expansion(&mut self, mu: &Partition) -> BTreeMap<Vec<u32>, BigInt> {
        if let Some(e) = self.h_cache.get(mu) {
            return e.clone();
        }
        let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        if mu.is_empty() {
            out.insert(Vec::new(), BigInt::one());
        } else {
            let a = mu.part(0);
            let rest = Partition::new(mu.parts()[1..].to_vec()).expect("suffix");
            for (mono, c) in self.h_expansion(&rest) {
                let mut m2 = mono.clone();
                m2.push(a);
                m2.sort_unstable();
                *out.entry(m2).or_insert_with(BigInt::zero) += c;
            }
            for nu in self.pieri_raw(&rest, a) {
                if &nu == mu {
                    continue;
                }
                for (mono, c) in self.h_expansion(&nu) {
                    *out.entry(mono).or_insert_with(BigInt::zero) -= c;
                }
            }
            out.retain(|_, c| !c.is_zero());
        }
        self.h_cache.insert(mu.clone(), out.clone());
        out
    }

    fn lr_lin(&mut self, lam: &Partition, mu: &Partition) -> Lin {
        let mut out = Lin::new();
        let start: Lin = [(lam.clone(), BigInt::one())].into_iter().collect();
        for (mono, c) in self.h_expansion(mu) {
            let mut cur = start.clone();
            for &a in &mono {
                cur = self.pieri_lin(&cur, a);
                if cur.is_empty() {
                    break;
                }
            }
            for (nu, d) in cur {
                add_into(&mut out, nu, d * &c);
            }
        }
        out
    }

    fn to_class(&self, x: Lin) -> GradedClass {
        GradedClass::from_terms(self.ambient(), x.into_iter().map(|(p, c)| (Label::Schubert(p), Rational::from_integer(c))))
            .expect("boxed partitions")
    }

    /// σ_λ · σ_p by the Pieri rule; out-of-box terms are dropped.
    pub fn pieri(&self, lam: &Partition, p: u32) -> Result<GradedClass> {
        self.check(lam)?;
        if p > self.cols() {
            return Err(Error::InvalidInput(format!("pieri degree {p} exceeds n-k = {}", self.cols())));
        }
        let mut out = Lin::new();
        for mu in self.pieri_raw(lam, p) {
            add_into(&mut out, mu, BigInt::one());
        }
        Ok(self.to_class(out))
    }

    /// σ_λ · σ_μ by iterated Pieri.
    pub fn lr_multiply(&mut self, lam: &Partition, mu: &Partition) -> Result<GradedClass> {
        self.check(lam)?;
        self.check(mu)?;
        let x = self.lr_lin(lam, mu);
        Ok(self.to_class(x))
    }

    /// σ_λ · σ_μ by counting Littlewood-Richardson tableaux.
    pub fn lr_multiply_tableaux(&self, lam: &Partition, mu: &Partition) -> Result<GradedClass> {
        self.check(lam)?;
        self.check(mu)?;
        let mut out = Lin::new();
        for nu in self.partitions_of_weight(lam.weight() + mu.weight()) {
            if nu.contains(lam) && nu.contains(mu) {
                let c = lr_coefficient(lam, mu, &nu);
                if c > 0 {
                    out.insert(nu, BigInt::from(c));
                }
            }
        }
        Ok(self.to_class(out))
    }

    /// Bilinear product of two classes on this Grassmannian.
    pub fn multiply(&mut self, a: &GradedClass, b: &GradedClass) -> Result<GradedClass> {
        let amb = self.ambient();
        if a.ambient != amb || b.ambient != amb {
            return Err(Error::AmbientMismatch(a.ambient.to_string(), b.ambient.to_string()));
        }
        let mut acc = GradedClass::zero(amb);
        for (la, ca) in a.terms() {
            let Label::Schubert(pa) = la else { return Err(Error::LabelMismatch(format!("{la:?}"))) };
            for (lb, cb) in b.terms() {
                let Label::Schubert(pb) = lb else { return Err(Error::LabelMismatch(format!("{lb:?}"))) };
                let prod = self.lr_multiply(pa, pb)?;
                acc = acc.add(&prod.scale(&(ca * cb)))?;
            }
        }
        Ok(acc)
    }

    pub fn sigma(&self, parts: &[u32]) -> Result<GradedClass> {
        let p = Partition::new(parts.to_vec())?;
        self.check(&p)?;
        GradedClass::basis(self.ambient(), Label::Schubert(p))
    }

    pub fn one(&self) -> GradedClass {
        GradedClass::basis(self.ambient(), Label::Schubert(Partition::empty())).expect("unit")
    }

    pub fn power(&mut self, a: &GradedClass, m: u32) -> Result<GradedClass> {
        let mut acc = self.one();
        for _ in 0..m {
            acc = self.multiply(&acc, a)?;
        }
        Ok(acc)
    }

    /// Coefficient of the point class.
    pub fn degree(&self, x: &GradedClass) -> Result<Rational> {
        if x.ambient != self.ambient() {
            return Err(Error::AmbientMismatch(x.ambient.to_string(), self.ambient().to_string()));
        }
        Ok(x.coeff(&Label::Schubert(self.top())))
    }

    /// The complementary partition: λ̂_i = (n-k) - λ_{k+1-i}.
    pub fn dual(&self, lam: &Partition) -> Result<Partition> {
        self.check(lam)?;
        let k = self.k as usize;
        Partition::new((0..k).map(|i| self.cols() - lam.part(k - 1 - i)).collect())
    }
}

/// Number of LR tableaux of shape ν/λ and content μ.
///
/// Cells are filled in reading order (rows top to bottom, right to left), so the
/// lattice condition can be checked on each prefix.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !nu.contains(lam) || nu.weight() != lam.weight() + mu.weight() {
        return 0;
    }
    let rows = nu.len();
    let mut cells = Vec::new();
    for r in 0..rows {
        for c in (lam.part(r)..nu.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let width = nu.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; rows];
    let mut counts = vec![0u32; mu.len() + 1];
    fn rec(idx: usize, cells: &[(usize, usize)], lam: &Partition, nu: &Partition, mu: &Partition, grid: &mut [Vec<u32>], counts: &mut [u32]) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut upper = mu.len() as u32;
        if c + 1 < nu.part(r) as usize {
            upper = upper.min(grid[r][c + 1]);
        }
        let mut lower = 1u32;
        if r > 0 && c >= lam.part(r - 1) as usize {
            lower = grid[r - 1][c] + 1;
        }
        let mut total = 0;
        for v in lower..=upper {
            let vi = v as usize;
            if counts[vi] >= mu.part(vi - 1) {
                continue;
            }
            if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
                continue;
            }
            counts[vi] += 1;
            grid[r][c] = v;
            total += rec(idx + 1, cells, lam, nu, mu, grid, counts);
            counts[vi] -= 1;
        }
        grid[r][c] = 0;
        total
    }
    rec(0, &cells, lam, nu, mu, &mut grid, &mut counts)
}

fn grass_of(x: &GradedClass) -> Result<SchubertRing> {
    match x.ambient {
        AmbientDescriptor::Grassmannian { k, n } => SchubertRing::new(k, n),
        _ => Err(Error::InvalidInput(format!("{} is not a Grassmannian", x.ambient))),
    }
}

pub fn pieri(k: u32, n: u32, lam: &Partition, p: u32) -> Result<GradedClass> {
    SchubertRing::new(k, n)?.pieri(lam, p)
}

pub fn lr_multiply(k: u32, n: u32, lam: &Partition, mu: &Partition) -> Result<GradedClass> {
    SchubertRing::new(k, n)?.lr_multiply(lam, mu)
}

/// Product of Schubert classes given as partitions, e.g. σ_{2,1}^3.
pub fn multiply_many(k: u32, n: u32, factors: &[Partition]) -> Result<GradedClass> {
    let mut ring = SchubertRing::new(k, n)?;
    let mut acc = ring.one();
    for f in factors {
        let s = GradedClass::basis(ring.ambient(), Label::Schubert(f.clone()))
            .map_err(|_| Error::InvalidInput(format!("{f} does not fit the box of G({k},{n})")))?;
        acc = ring.multiply(&acc, &s)?;
    }
    Ok(acc)
}

pub fn degree(x: &GradedClass) -> Result<Rational> {
    grass_of(x)?.degree(x)
}

pub fn dual_class(k: u32, n: u32, lam: &Partition) -> Result<Partition> {
    SchubertRing::new(k, n)?.dual(lam)
}

/// Rewrites a class of codimension <= 2 on a b4 = 1 ambient in powers of H.
///
/// On OG+ σ1 = 2H and σ2 = σ11 = 2H^2; on SG σ1 = H and σ2 = σ11 = H^2/2.
pub fn reduce_to_h(x: &GradedClass) -> Result<GradedClass> {
    let amb = x.ambient.clone();
    let mut out = GradedClass::zero(amb.clone());
    for (l, c) in x.terms() {
        let (pow, factor) = match (&amb, l) {
            (_, Label::Power(p)) => (*p, int(1)),
            (AmbientDescriptor::OgPlus { .. } | AmbientDescriptor::Sg { .. }, Label::Schubert(p)) => {
                let og = matches!(amb, AmbientDescriptor::OgPlus { .. });
                match p.weight() {
                    0 => (0, int(1)),
                    1 => (1, if og { int(2) } else { int(1) }),
                    2 => (2, if og { int(2) } else { rat(1, 2) }),
                    _ => return Err(Error::NonReducible(format!("{p} on {amb}"))),
                }
            }
            _ => return Err(Error::NonReducible(format!("{l:?} on {amb}"))),
        };
        out.add_term(Label::Power(pow), c * factor)?;
    }
    Ok(out)
}

fn is_reduced_ambient(a: &AmbientDescriptor) -> bool {
    matches!(a, AmbientDescriptor::OgPlus { .. } | AmbientDescriptor::Sg { .. } | AmbientDescriptor::G2P2 | AmbientDescriptor::RankOnePicBFour { .. })
}

/// Product in the ring generated by H, truncated above codimension 2.
pub fn reduced_ring_multiply(ambient: &AmbientDescriptor, a: &GradedClass, b: &GradedClass) -> Result<GradedClass> {
    if !is_reduced_ambient(ambient) {
        return Err(Error::NonReducible(format!("{ambient} is not a b4 = 1 ambient")));
    }
    if &a.ambient != ambient || &b.ambient != ambient {
        return Err(Error::AmbientMismatch(a.ambient.to_string(), b.ambient.to_string()));
    }
    let (ra, rb) = (reduce_to_h(a)?, reduce_to_h(b)?);
    let mut out = GradedClass::zero(ambient.clone());
    for (la, ca) in ra.terms() {
        for (lb, cb) in rb.terms() {
            let c = la.codim() + lb.codim();
            if c <= 2 {
                out.add_term(Label::Power(c), ca * cb)?;
            }
        }
    }
    Ok(out)
}

/// The σ-basis view of an H-class on OG+ or SG: H^2 is shown through σ2 and σ11 with equal coefficients.
pub fn sigma_view(x: &GradedClass) -> Result<GradedClass> {
    let (h1, h2) = match x.ambient {
        AmbientDescriptor::OgPlus { .. } => (rat(1, 2), rat(1, 4)),
        AmbientDescriptor::Sg { .. } => (int(1), int(1)),
        _ => return Err(Error::NonReducible(format!("no σ-view on {}", x.ambient))),
    };
    let r = reduce_to_h(x)?;
    let mut out = GradedClass::zero(x.ambient.clone());
    let s = |v: &[u32]| Label::Schubert(Partition::new(v.to_vec()).expect("partition"));
    out.add_term(s(&[]), r.coeff(&Label::Power(0)))?;
    out.add_term(s(&[1]), r.coeff(&Label::Power(1)) * &h1)?;
    let c2 = r.coeff(&Label::Power(2)) * &h2;
    out.add_term(s(&[2]), c2.clone())?;
    out.add_term(s(&[1, 1]), c2)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn coeffs(x: &GradedClass) -> Vec<(String, String)> {
        x.terms().map(|(l, c)| (format!("{l:?}"), c.to_string())).collect()
    }

    #[test]
    fn pieri_examples() {
        let r = SchubertRing::new(2, 5).unwrap();
        assert_eq!(r.pieri(&p(&[1]), 1).unwrap().to_string(), "[2] + [1,1]");
        assert_eq!(r.pieri(&p(&[2]), 2).unwrap().to_string(), "[3,1] + [2,2]");
        assert_eq!(r.pieri(&p(&[3]), 1).unwrap().to_string(), "[3,1]");
        assert!(r.pieri(&p(&[1]), 4).is_err());
    }

    #[test]
    fn horizontal_strip_oracle() {
        // Brute force over all boxed μ of the right weight.
        let r = SchubertRing::new(3, 7).unwrap();
        for lam in r.all_partitions() {
            for q in 0..=4 {
                let got: Vec<Partition> = r
                    .pieri(&lam, q)
                    .unwrap()
                    .terms()
                    .map(|(l, _)| match l {
                        Label::Schubert(m) => m.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                let mut want: Vec<Partition> = r
                    .partitions_of_weight(lam.weight() + q)
                    .into_iter()
                    .filter(|mu| mu.contains(&lam) && (1..3).all(|i| mu.part(i) <= lam.part(i - 1)))
                    .collect();
                want.sort_by(|a, b| b.cmp(a));
                assert_eq!(got, want, "λ={lam} p={q}");
            }
        }
    }

    #[test]
    fn golden_products() {
        let x = multiply_many(3, 7, &[p(&[2, 1]), p(&[2, 1]), p(&[2, 1])]).unwrap();
        assert_eq!(x.to_string(), "4*[4,4,1] + 8*[4,3,2] + 2*[3,3,3]");
        let y = multiply_many(2, 6, &vec![p(&[1]); 6]).unwrap();
        assert_eq!(y.to_string(), "9*[4,2] + 5*[3,3]");
        let z = multiply_many(2, 5, &[p(&[2]), p(&[2]), p(&[1, 1])]).unwrap();
        assert_eq!(degree(&z).unwrap(), int(1));
        let w = multiply_many(2, 5, &vec![p(&[1]); 6]).unwrap();
        assert_eq!(degree(&w).unwrap(), int(5));
    }

    #[test]
    fn genus_twelve_pairings() {
        let mut r = SchubertRing::new(3, 7).unwrap();
        let c9 = multiply_many(3, 7, &vec![p(&[2, 1]); 3]).unwrap();
        let s1c9 = r.multiply(&r.sigma(&[1]).unwrap(), &c9).unwrap();
        assert_eq!(s1c9.to_string(), "12*[4,4,2] + 10*[4,3,3]");
        let a = r.multiply(&s1c9, &r.sigma(&[2]).unwrap()).unwrap();
        let b = r.multiply(&s1c9, &r.sigma(&[1, 1]).unwrap()).unwrap();
        assert_eq!(r.degree(&a).unwrap(), int(12));
        assert_eq!(r.degree(&b).unwrap(), int(10));
    }

    #[test]
    fn duals() {
        assert_eq!(dual_class(2, 6, &p(&[2])).unwrap(), p(&[4, 2]));
        assert_eq!(dual_class(2, 6, &p(&[1, 1])).unwrap(), p(&[3, 3]));
        assert_eq!(dual_class(3, 7, &p(&[])).unwrap(), p(&[4, 4, 4]));
    }

    #[test]
    fn lr_coefficient_known_values() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[2, 1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[2]), &p(&[2, 1, 1])), 0);
    }

    #[test]
    fn reduced_ring() {
        let og = AmbientDescriptor::og_plus(5).unwrap();
        let h = GradedClass::basis(og.clone(), Label::Power(1)).unwrap();
        assert_eq!(reduced_ring_multiply(&og, &h, &h).unwrap().to_string(), "H^2");
        let s2 = GradedClass::basis(og.clone(), Label::Schubert(p(&[2]))).unwrap();
        assert_eq!(reduce_to_h(&s2).unwrap().to_string(), "2*H^2");

        let sg = AmbientDescriptor::sg(3).unwrap();
        let s1 = GradedClass::basis(sg.clone(), Label::Schubert(p(&[1]))).unwrap();
        let sq = reduced_ring_multiply(&sg, &s1, &s1).unwrap();
        assert_eq!(sq.to_string(), "H^2");
        let view = sigma_view(&sq).unwrap();
        assert_eq!(view.coeff(&Label::Schubert(p(&[2]))), int(1));
        assert_eq!(view.coeff(&Label::Schubert(p(&[1, 1]))), int(1));

        let g2 = AmbientDescriptor::G2P2;
        let bad = GradedClass::zero(g2.clone());
        assert!(reduced_ring_multiply(&g2, &bad, &bad).unwrap().is_zero());
        let gr = AmbientDescriptor::grassmannian(2, 5).unwrap();
        assert!(matches!(reduced_ring_multiply(&gr, &bad, &bad), Err(Error::NonReducible(_))));
    }

    #[test]
    fn h_cubed_truncates() {
        let g2 = AmbientDescriptor::G2P2;
        let h = GradedClass::basis(g2.clone(), Label::Power(1)).unwrap();
        let h2 = reduced_ring_multiply(&g2, &h, &h).unwrap();
        assert!(reduced_ring_multiply(&g2, &h2, &h).unwrap().is_zero());
    }

    fn boxed(k: u32, n: u32) -> impl Strategy<Value = (Partition, Partition)> {
        let all = SchubertRing::new(k, n).unwrap().all_partitions();
        let m = all.len();
        (0..m, 0..m).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn lr_commutes((a, b) in boxed(3, 7)) {
            let mut r = SchubertRing::new(3, 7).unwrap();
            prop_assert_eq!(r.lr_multiply(&a, &b).unwrap(), r.lr_multiply(&b, &a).unwrap());
        }

        #[test]
        fn lr_coefficients_are_nonnegative_integers((a, b) in boxed(3, 8)) {
            let mut r = SchubertRing::new(3, 8).unwrap();
            for (_, c) in r.lr_multiply(&a, &b).unwrap().terms() {
                prop_assert!(c.is_integer() && *c > int(0));
            }
        }

        #[test]
        fn pieri_matches_lr_row((a, _) in boxed(3, 7), q in 0u32..=4) {
            let mut r = SchubertRing::new(3, 7).unwrap();
            let row = if q == 0 { Partition::empty() } else { p(&[q]) };
            prop_assert_eq!(coeffs(&r.pieri(&a, q).unwrap()), coeffs(&r.lr_multiply(&a, &row).unwrap()));
        }

        #[test]
        fn product_is_associative((a, b) in boxed(2, 6), (c, _) in boxed(2, 6)) {
            let mut r = SchubertRing::new(2, 6).unwrap();
            let sa = GradedClass::basis(r.ambient(), Label::Schubert(a)).unwrap();
            let sb = GradedClass::basis(r.ambient(), Label::Schubert(b)).unwrap();
            let sc = GradedClass::basis(r.ambient(), Label::Schubert(c)).unwrap();
            let ab = r.multiply(&sa, &sb).unwrap();
            let bc = r.multiply(&sb, &sc).unwrap();
            prop_assert_eq!(r.multiply(&ab, &sc).unwrap(), r.multiply(&sa, &bc).unwrap());
        }
    }
}
