//! Plethysm of symmetric functions, computed in the power-sum basis.
//!
//! The Schur-to-power-sum transition uses symmetric-group characters from
//! the Murnaghan-Nakayama border-strip recursion, memoized globally. Exact
//! rationals appear only inside this module; everything exposed is an
//! integer-coefficient `SymFunc`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::schur::SymFunc;

/// Sparse rational combination of power-sum basis elements `p_mu`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PowerSumFunc {
    terms: BTreeMap<Partition, BigRational>,
}

impl PowerSumFunc {
    pub fn zero() -> Self {
        PowerSumFunc::default()
    }

    pub fn one() -> Self {
        let mut f = PowerSumFunc::default();
        f.add_term(Partition::empty(), BigRational::one());
        f
    }

    pub fn power_sum(mu: impl Into<Partition>) -> Self {
        let mut f = PowerSumFunc::default();
        f.add_term(mu.into(), BigRational::one());
        f
    }

    pub fn add_term(&mut self, mu: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mu) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mu: &Partition) -> BigRational {
        self.terms.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &PowerSumFunc) -> PowerSumFunc {
        let mut out = self.clone();
        for (mu, c) in other.terms() {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> PowerSumFunc {
        if c.is_zero() {
            return PowerSumFunc::zero();
        }
        PowerSumFunc {
            terms: self
                .terms
                .iter()
                .map(|(mu, k)| (mu.clone(), k * c))
                .collect(),
        }
    }

    /// `p_mu * p_nu` merges the part multisets.
    pub fn mul(&self, other: &PowerSumFunc) -> PowerSumFunc {
        let mut out = PowerSumFunc::zero();
        for (mu, cm) in self.terms() {
            for (nu, cn) in other.terms() {
                let mut parts = mu.parts().to_vec();
                parts.extend_from_slice(nu.parts());
                parts.sort_unstable_by(|a, b| b.cmp(a));
                out.add_term(Partition::new(parts), cm * cn);
            }
        }
        out
    }

    /// The degree-scaling substitution `p_k -> p_{n k}` on every term; this
    /// is plethysm by `p_n` on the left.
    pub fn scale_degrees(&self, n: u32) -> PowerSumFunc {
        assert!(n >= 1);
        PowerSumFunc {
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| {
                    let parts = mu.parts().iter().map(|&p| p * n).collect();
                    (Partition::new(parts), c.clone())
                })
                .collect(),
        }
    }
}

/// Centralizer order `z_mu = prod_i i^{m_i} m_i!` from part multiplicities.
pub fn z_mu(mu: &Partition) -> BigInt {
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in mu.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    let mut z = BigInt::one();
    for (i, m) in mult {
        z *= BigInt::from(i).pow(m);
        for f in 1..=m {
            z *= BigInt::from(f);
        }
    }
    z
}

fn character_cache() -> &'static RwLock<HashMap<(Partition, Partition), BigInt>> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Irreducible symmetric-group character `chi^lambda(mu)` by the
/// Murnaghan-Nakayama border-strip recursion (via first-column hook lengths).
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            lambda: lambda.clone(),
            mu: mu.clone(),
            lw: lambda.weight(),
            mw: mu.weight(),
        });
    }
    Ok(mn_rec(lambda, mu))
}

fn mn_rec(lambda: &Partition, mu: &Partition) -> BigInt {
    if mu.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(hit) = character_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let r = mu.part(0);
    let mu_rest = Partition::new(mu.parts()[1..].to_vec());
    // beta numbers: lambda_i + (L - i), strictly decreasing; removing a
    // border strip of length r subtracts r from one beta number, and the
    // strip height is the number of beta numbers jumped over
    let len = lambda.len();
    let betas: Vec<i64> = (0..len)
        .map(|i| lambda.part(i) as i64 + (len - 1 - i) as i64)
        .collect();
    let mut total = BigInt::zero();
    for i in 0..len {
        let target = betas[i] - r as i64;
        if target < 0 || betas.contains(&target) {
            continue;
        }
        let jumped = betas.iter().filter(|&&b| target < b && b < betas[i]).count();
        let mut new_betas = betas.clone();
        new_betas[i] = target;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = new_betas
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - (len - 1 - j) as i64) as u32)
            .collect();
        let reduced = Partition::new(parts);
        let term = mn_rec(&reduced, &mu_rest);
        if jumped % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    character_cache()
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| total.clone())
        .clone()
}

/// Basis change `s_lambda = sum_mu chi^lambda(mu) / z_mu * p_mu`, extended
/// linearly.
pub fn to_powersum(f: &SymFunc) -> PowerSumFunc {
    let mut out = PowerSumFunc::zero();
    for (lam, c) in f.terms() {
        let cr = BigRational::from(c.clone());
        for mu in partitions_of(lam.weight()) {
            let chi = mn_rec(lam, &mu);
            if chi.is_zero() {
                continue;
            }
            let coeff = BigRational::new(chi, z_mu(&mu)) * &cr;
            out.add_term(mu, coeff);
        }
    }
    out
}

/// Inverse basis change via `p_mu = sum_lambda chi^lambda(mu) s_lambda`.
/// Errors if any resulting Schur coefficient fails to be an integer.
pub fn from_powersum(q: &PowerSumFunc) -> Result<SymFunc> {
    let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (mu, c) in q.terms() {
        for lam in partitions_of(mu.weight()) {
            let chi = mn_rec(&lam, mu);
            if chi.is_zero() {
                continue;
            }
            let entry = acc.entry(lam).or_insert_with(BigRational::zero);
            *entry += BigRational::from(chi) * c;
        }
    }
    let mut out = SymFunc::zero();
    for (lam, c) in acc {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::NonIntegral {
                partition: lam,
                value: c.to_string(),
            });
        }
        out.add_term(lam, c.to_integer());
    }
    Ok(out)
}

/// Plethysm `f[g]` of a power-sum expansion by a fixed alphabet expansion:
/// `p_mu[g] = prod_i (g with p_k -> p_{mu_i k})`.
fn plethysm_powersum(f_ps: &PowerSumFunc, g_ps: &PowerSumFunc) -> PowerSumFunc {
    let mut out = PowerSumFunc::zero();
    for (mu, c) in f_ps.terms() {
        let mut term = PowerSumFunc::one();
        for &part in mu.parts() {
            term = term.mul(&g_ps.scale_degrees(part));
        }
        out = out.add(&term.scale(c));
    }
    out
}

/// Plethysm `f[g]`: substitution of the alphabet of `g` into `f`, computed
/// through the power-sum basis and converted back to the Schur basis. The
/// result of plethysm of integral symmetric functions is always integral.
pub fn plethysm(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let f_ps = to_powersum(f);
    let g_ps = to_powersum(g);
    from_powersum(&plethysm_powersum(&f_ps, &g_ps))
        .expect("plethysm of integral symmetric functions is integral")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{monomial_oracle, plethysm_oracle};
    use crate::partition::partitions_up_to;
    use crate::schur::outer_product;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn s(parts: &[u32]) -> SymFunc {
        SymFunc::schur(p(parts))
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Independent oracle: number of standard Young tableaux by brute force.
    fn syt_count(lambda: &Partition) -> BigInt {
        fn rec(rows: &mut Vec<u32>, lambda: &Partition, placed: u32, n: u32) -> BigInt {
            if placed == n {
                return BigInt::one();
            }
            let mut total = BigInt::zero();
            for r in 0..lambda.len() {
                let can_grow = rows[r] < lambda.part(r) && (r == 0 || rows[r] < rows[r - 1]);
                if can_grow {
                    rows[r] += 1;
                    total += rec(rows, lambda, placed + 1, n);
                    rows[r] -= 1;
                }
            }
            total
        }
        let mut rows = vec![0u32; lambda.len()];
        rec(&mut rows, lambda, 0, lambda.weight())
    }

    #[test]
    fn character_examples() {
        for mu in partitions_of(5) {
            assert_eq!(mn_character(&p(&[5]), &mu).unwrap(), 1.into());
        }
        assert_eq!(mn_character(&p(&[1, 1]), &p(&[2])).unwrap(), (-1).into());
        assert_eq!(
            mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(),
            syt_count(&p(&[2, 1]))
        );
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2.into());
        // dimensions match the tableau count oracle
        for lam in partitions_of(6) {
            let classes = Partition::new(vec![1; 6]);
            assert_eq!(mn_character(&lam, &classes).unwrap(), syt_count(&lam));
        }
        assert!(matches!(
            mn_character(&p(&[2]), &p(&[1])),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        // sum over classes of n!/z_mu = n!, i.e. sum of 1/z_mu = 1
        for n in 1..=6u32 {
            let mut sum = BigRational::zero();
            for mu in partitions_of(n) {
                sum += BigRational::new(BigInt::one(), z_mu(&mu));
            }
            assert_eq!(sum, BigRational::one());
        }
    }

    #[test]
    fn powersum_transitions() {
        assert_eq!(to_powersum(&s(&[1])), PowerSumFunc::power_sum(p(&[1])));
        assert_eq!(from_powersum(&PowerSumFunc::power_sum(p(&[1]))).unwrap(), s(&[1]));

        let mut expect = PowerSumFunc::zero();
        expect.add_term(p(&[1, 1]), rat(1, 2));
        expect.add_term(p(&[2]), rat(1, 2));
        assert_eq!(to_powersum(&s(&[2])), expect);

        let got = from_powersum(&PowerSumFunc::power_sum(p(&[2]))).unwrap();
        assert_eq!(got, &s(&[2]) - &s(&[1, 1]));

        for lam in partitions_up_to(6) {
            let f = SymFunc::schur(lam);
            assert_eq!(from_powersum(&to_powersum(&f)).unwrap(), f);
        }
    }

    #[test]
    fn from_powersum_rejects_non_integral() {
        let mut q = PowerSumFunc::zero();
        q.add_term(p(&[2]), rat(1, 2));
        assert!(matches!(
            from_powersum(&q),
            Err(Error::NonIntegral { .. })
        ));
    }

    #[test]
    fn plethysm_examples() {
        let mut expect = s(&[4]);
        expect.add_term(p(&[2, 2]), 1.into());
        assert_eq!(plethysm(&s(&[2]), &s(&[2])), expect);
        assert_eq!(plethysm(&s(&[1, 1]), &s(&[2])), s(&[3, 1]));

        for lam in partitions_up_to(4) {
            let f = SymFunc::schur(lam);
            assert_eq!(plethysm(&f, &s(&[1])), f);
        }
    }

    #[test]
    fn plethysm_matches_substitution_oracle() {
        for lam in partitions_up_to(3) {
            if lam.is_empty() {
                continue;
            }
            for mu in partitions_up_to(2) {
                if mu.is_empty() {
                    continue;
                }
                let f = SymFunc::schur(lam.clone());
                let g = SymFunc::schur(mu.clone());
                let got = monomial_oracle(&plethysm(&f, &g), 3);
                let expect = plethysm_oracle(&f, &g, 3);
                assert_eq!(got, expect, "plethysm of {} by {}", lam, mu);
            }
        }
    }

    #[test]
    fn power_sum_composition_rule() {
        for n in 1..=4u32 {
            for m in 1..=4u32 {
                let pn = from_powersum(&PowerSumFunc::power_sum(p(&[n]))).unwrap();
                let pm = from_powersum(&PowerSumFunc::power_sum(p(&[m]))).unwrap();
                let pnm = from_powersum(&PowerSumFunc::power_sum(p(&[n * m]))).unwrap();
                assert_eq!(plethysm(&pn, &pm), pnm);
            }
        }
    }

    #[test]
    fn plethysm_is_ring_morphism_in_first_argument() {
        for f1 in partitions_up_to(2) {
            for f2 in partitions_up_to(2) {
                for g in partitions_up_to(2) {
                    if g.is_empty() {
                        continue;
                    }
                    let sf1 = SymFunc::schur(f1.clone());
                    let sf2 = SymFunc::schur(f2.clone());
                    let sg = SymFunc::schur(g.clone());
                    let lhs = plethysm(&outer_product(&sf1, &sf2), &sg);
                    let rhs = outer_product(&plethysm(&sf1, &sg), &plethysm(&sf2, &sg));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

}
