//! The ring of symmetric functions in the Schur basis, with exact integer
//! coefficients: outer product, coproduct, skew, antipode, counit, the
//! Schur-Hall pairing and the (dual) Cauchy kernels.
//!
//! All structure constants are Littlewood-Richardson coefficients, computed
//! by enumerating lattice-word skew tableaux. Basis-level products, skews
//! and coproducts are memoized globally; the caches are value-deterministic
//! and safe for concurrent readers.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num::{BigInt, One, Signed, Zero};

use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::tensor::{Orientation, TensorSF};

pub type Coeff = BigInt;

/// A finite integer-linear combination of Schur functions.
///
/// Invariant: no stored zero coefficients. Terms iterate sorted by
/// (weight, reverse-lex partition).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: std::collections::BTreeMap<Partition, Coeff>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    /// The unit `s_0`.
    pub fn one() -> Self {
        SymFunc::schur(Partition::empty())
    }

    pub fn schur(lambda: impl Into<Partition>) -> Self {
        let mut f = SymFunc::default();
        f.add_term(lambda.into(), Coeff::one());
        f
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Coeff)>) -> Self {
        let mut f = SymFunc::default();
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Coeff {
        self.terms.get(lambda).cloned().unwrap_or_else(Coeff::zero)
    }

    /// The terms of weight exactly `n`.
    pub fn grade(&self, n: u32) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() == n)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_grade(&self) -> u32 {
        self.terms.keys().map(Partition::weight).max().unwrap_or(0)
    }

    /// Drops all terms of weight above `d`.
    pub fn truncate(&self, d: u32) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() <= d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(p, k)| (p.clone(), k * c))
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(p, c)| {
                serde_json::json!({
                    "partition": p.parts(),
                    "coeff": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> crate::error::Result<Self> {
        use crate::error::Error;
        let terms = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| Error::Parse("expected object with a \"terms\" array".into()))?;
        let mut f = SymFunc::zero();
        for t in terms {
            let parts = t
                .get("partition")
                .and_then(|p| p.as_array())
                .ok_or_else(|| Error::Parse("term missing \"partition\" array".into()))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|v| v as u32)
                        .ok_or_else(|| Error::Parse("partition entries must be integers".into()))
                })
                .collect::<crate::error::Result<Vec<u32>>>()?;
            let coeff = t
                .get("coeff")
                .and_then(|c| c.as_str())
                .ok_or_else(|| Error::Parse("term missing \"coeff\" string".into()))?;
            let coeff: Coeff = coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", coeff)))?;
            f.add_term(Partition::try_new(parts)?, coeff);
        }
        Ok(f)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() {
                write!(f, "s{}", p)?;
            } else {
                write!(f, "{}*s{}", mag, p)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (p, c) in rhs.terms() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (p, c) in rhs.terms() {
            out.add_term(p.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        outer_product(self, rhs)
    }
}

/// Number of Littlewood-Richardson skew tableaux of shape `outer/inner` and
/// content `content`: semistandard filling whose reverse reading word is a
/// lattice word. This is the coefficient `c^outer_{inner,content}`.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, content: &Partition) -> u64 {
    if inner.weight() + content.weight() != outer.weight()
        || !outer.contains(inner)
        || !outer.contains(content)
    {
        return 0;
    }
    if content.is_empty() {
        return 1; // outer == inner
    }
    // cells of the skew shape in reverse reading order: rows top to bottom,
    // within a row right to left
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 0..outer.len() {
        let lo = inner.part(r) as usize;
        let hi = outer.part(r) as usize;
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let k = content.len();
    let mut counts = vec![0u32; k];
    let mut filling: HashMap<(usize, usize), usize> = HashMap::new();
    let mut total = 0u64;
    search(
        &cells, 0, content, &mut counts, &mut filling, inner, &mut total,
    );
    return total;

    fn search(
        cells: &[(usize, usize)],
        idx: usize,
        content: &Partition,
        counts: &mut Vec<u32>,
        filling: &mut HashMap<(usize, usize), usize>,
        inner: &Partition,
        total: &mut u64,
    ) {
        if idx == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[idx];
        // row weakly increasing left to right: bounded by the right neighbour,
        // which is already placed
        let max_v = filling.get(&(r, c + 1)).copied().unwrap_or(counts.len() - 1);
        // column strictly increasing: bounded below by the cell above, when
        // that cell lies in the skew part
        let min_v = if r > 0 && c >= inner.part(r - 1) as usize {
            filling[&(r - 1, c)] + 1
        } else {
            0
        };
        for v in min_v..=max_v {
            if counts[v] >= content.part(v) {
                continue;
            }
            // lattice word: after placing v, #v must not exceed #(v-1)
            if v > 0 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            counts[v] += 1;
            filling.insert((r, c), v);
            search(cells, idx + 1, content, counts, filling, inner, total);
            filling.remove(&(r, c));
            counts[v] -= 1;
        }
    }
}

type PairKey = (Partition, Partition);

fn product_cache() -> &'static RwLock<HashMap<PairKey, Arc<SymFunc>>> {
    static CACHE: OnceLock<RwLock<HashMap<PairKey, Arc<SymFunc>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn skew_cache() -> &'static RwLock<HashMap<PairKey, Arc<SymFunc>>> {
    static CACHE: OnceLock<RwLock<HashMap<PairKey, Arc<SymFunc>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

type CoproductTerms = Vec<(Partition, Partition, Coeff)>;

fn coproduct_cache() -> &'static RwLock<HashMap<Partition, Arc<CoproductTerms>>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<CoproductTerms>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `s_lambda * s_mu` on basis elements, memoized.
pub fn product_basis(lambda: &Partition, mu: &Partition) -> Arc<SymFunc> {
    // the product is commutative; canonicalize the key
    let key = if lambda <= mu {
        (lambda.clone(), mu.clone())
    } else {
        (mu.clone(), lambda.clone())
    };
    if let Some(hit) = product_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let (lam, mu) = (&key.0, &key.1);
    let mut out = SymFunc::zero();
    for nu in partitions_of(lam.weight() + mu.weight()) {
        if !nu.contains(lam) || !nu.contains(mu) {
            continue;
        }
        let c = lr_coefficient(&nu, lam, mu);
        if c > 0 {
            out.add_term(nu, Coeff::from(c));
        }
    }
    let out = Arc::new(out);
    product_cache()
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| out.clone())
        .clone()
}

/// `s_mu / s_lambda` on basis elements, memoized.
pub fn skew_basis(mu: &Partition, lambda: &Partition) -> Arc<SymFunc> {
    let key = (mu.clone(), lambda.clone());
    if let Some(hit) = skew_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let mut out = SymFunc::zero();
    if mu.contains(lambda) {
        for alpha in partitions_of(mu.weight() - lambda.weight()) {
            if !mu.contains(&alpha) {
                continue;
            }
            let c = lr_coefficient(mu, lambda, &alpha);
            if c > 0 {
                out.add_term(alpha, Coeff::from(c));
            }
        }
    }
    let out = Arc::new(out);
    skew_cache()
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| out.clone())
        .clone()
}

/// Coproduct of a basis element as a term list, memoized.
pub fn coproduct_basis(lambda: &Partition) -> Arc<CoproductTerms> {
    if let Some(hit) = coproduct_cache().read().unwrap().get(lambda) {
        return hit.clone();
    }
    let mut out: CoproductTerms = Vec::new();
    for mu in partitions_up_to(lambda.weight()) {
        if !lambda.contains(&mu) {
            continue;
        }
        let rest = skew_basis(lambda, &mu);
        for (nu, c) in rest.terms() {
            out.push((mu.clone(), nu.clone(), c.clone()));
        }
    }
    let out = Arc::new(out);
    coproduct_cache()
        .write()
        .unwrap()
        .entry(lambda.clone())
        .or_insert_with(|| out.clone())
        .clone()
}

/// Bilinear extension of `s_lambda * s_mu = sum c^nu_{lambda,mu} s_nu`.
pub fn outer_product(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (lam, cf) in f.terms() {
        for (mu, cg) in g.terms() {
            let prod = product_basis(lam, mu);
            let c = cf * cg;
            for (nu, k) in prod.terms() {
                out.add_term(nu.clone(), k * &c);
            }
        }
    }
    out
}

/// Outer coproduct into a rank-2 tensor; cocommutative, same structure
/// constants as the product.
pub fn coproduct(f: &SymFunc) -> TensorSF {
    let mut out = TensorSF::new(vec![Orientation::Primal; 2]);
    for (lam, c) in f.terms() {
        for (mu, nu, k) in coproduct_basis(lam).iter() {
            out.add_term(vec![mu.clone(), nu.clone()], k * c);
        }
    }
    out
}

/// Coproduct minus its two extreme terms:
/// `Delta'(f) = Delta(f) - f (x) 1 - 1 (x) f + counit(f) 1 (x) 1`.
pub fn cut_coproduct(f: &SymFunc) -> TensorSF {
    let mut out = coproduct(f);
    let e = counit(f);
    for (lam, c) in f.terms() {
        out.add_term(vec![lam.clone(), Partition::empty()], -c.clone());
        out.add_term(vec![Partition::empty(), lam.clone()], -c.clone());
    }
    out.add_term(vec![Partition::empty(), Partition::empty()], e);
    out
}

/// The cut-coproduct pair list of `s_pi`, with multiplicity, sorted.
/// Its length is the `p` that drives every pi-deformation.
pub fn cut_pairs(pi: &Partition) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for (mu, nu, c) in coproduct_basis(pi).iter() {
        if mu.is_empty() || nu.is_empty() {
            continue;
        }
        let reps = u64::try_from(c.clone()).expect("coproduct coefficients are nonnegative");
        for _ in 0..reps {
            out.push((mu.clone(), nu.clone()));
        }
    }
    out.sort();
    out
}

/// Skew `f / g`: the adjoint of multiplication by `g` under the Schur-Hall
/// pairing. Zero whenever weights or shapes make the skew impossible.
pub fn skew(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (mu, cf) in f.terms() {
        for (lam, cg) in g.terms() {
            let sk = skew_basis(mu, lam);
            let c = cf * cg;
            for (alpha, k) in sk.terms() {
                out.add_term(alpha.clone(), k * &c);
            }
        }
    }
    out
}

/// Antipode `S(s_lambda) = (-1)^{|lambda|} s_{lambda'}`, extended linearly.
pub fn antipode(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (lam, c) in f.terms() {
        let sign = if lam.weight() % 2 == 0 { 1 } else { -1 };
        out.add_term(lam.conjugate(), c * Coeff::from(sign));
    }
    out
}

/// Counit: the coefficient of `s_0`.
pub fn counit(f: &SymFunc) -> Coeff {
    f.coefficient(&Partition::empty())
}

/// Schur-Hall scalar product: the Schur basis is orthonormal.
pub fn schur_hall(f: &SymFunc, g: &SymFunc) -> Coeff {
    let mut out = Coeff::zero();
    for (lam, cf) in f.terms() {
        let cg = g.coefficient(lam);
        if !cg.is_zero() {
            out += cf * cg;
        }
    }
    out
}

/// Exhaustively verifies the Hopf axioms on Schur basis elements: counit,
/// antipode convolution (both sides), antipode involution and the duality
/// pairing on basis elements of weight at most `w`, and the bialgebra
/// identity on pairs of total weight at most `w`.
pub fn check_hopf(w: u32) -> crate::report::CheckReport {
    let mut report = crate::report::CheckReport::new(format!("hopf axioms to weight {}", w));
    for lam in partitions_up_to(w) {
        let f = SymFunc::schur(lam.clone());
        let e = counit(&f);

        let cp = coproduct(&f);
        report.record(cp.counit_slot(0).into_symfunc() == f, || {
            format!("left counit at s{}", lam)
        });
        report.record(cp.counit_slot(1).into_symfunc() == f, || {
            format!("right counit at s{}", lam)
        });

        let mut left = SymFunc::zero();
        let mut right = SymFunc::zero();
        for (mu, nu, c) in coproduct_basis(&lam).iter() {
            let l = outer_product(&antipode(&SymFunc::schur(mu.clone())), &SymFunc::schur(nu.clone()));
            left = &left + &l.scale(c);
            let r = outer_product(&SymFunc::schur(mu.clone()), &antipode(&SymFunc::schur(nu.clone())));
            right = &right + &r.scale(c);
        }
        let expect = SymFunc::one().scale(&e);
        report.record(left == expect, || format!("antipode convolution (left) at s{}", lam));
        report.record(right == expect, || format!("antipode convolution (right) at s{}", lam));
        report.record(antipode(&antipode(&f)) == f, || {
            format!("antipode involution at s{}", lam)
        });

        // duality: the coproduct coefficient equals the product coefficient
        for k in 0..=lam.weight() {
            for g in partitions_of(k) {
                for h in partitions_of(lam.weight() - k) {
                    let lhs = cp.coefficient(&[g.clone(), h.clone()]);
                    let rhs = schur_hall(
                        &f,
                        &outer_product(&SymFunc::schur(g.clone()), &SymFunc::schur(h.clone())),
                    );
                    report.record(lhs == rhs, || {
                        format!("duality at (s{}; s{}, s{})", lam, g, h)
                    });
                }
            }
        }
    }
    // bialgebra on pairs of total weight at most w
    for n in 0..=w {
        for a in partitions_of(n) {
            for b in partitions_up_to(w - n) {
                let f = SymFunc::schur(a.clone());
                let g = SymFunc::schur(b.clone());
                let lhs = coproduct(&outer_product(&f, &g));
                let rhs = coproduct(&f).hadamard(&coproduct(&g));
                report.record(lhs == rhs, || format!("bialgebra at (s{}, s{})", a, b));
            }
        }
    }
    report
}

/// Cauchy kernel truncated by degree: `sum_{|lambda| <= d} s_lambda (x) s_lambda`.
pub fn cauchy_kernel(d: u32) -> TensorSF {
    let mut out = TensorSF::new(vec![Orientation::Primal; 2]);
    for lam in partitions_up_to(d) {
        out.add_term(vec![lam.clone(), lam], Coeff::one());
    }
    out
}

/// Cauchy-Binet kernel: the antipode applied to one slot of the Cauchy kernel,
/// `sum (-1)^{|lambda|} s_lambda (x) s_{lambda'}`.
pub fn cauchy_binet_kernel(d: u32) -> TensorSF {
    let mut out = TensorSF::new(vec![Orientation::Primal; 2]);
    for lam in partitions_up_to(d) {
        let sign = if lam.weight() % 2 == 0 { 1 } else { -1 };
        out.add_term(vec![lam.clone(), lam.conjugate()], Coeff::from(sign));
    }
    out
}
