//! Degree-truncated symmetric-function series and the group-branching maps.
//!
//! For a nonzero partition `pi`, the mutually inverse generating series are
//!
//! ```text
//! M_pi = sum_n h_n[s_pi],    L_pi = sum_n (-1)^n e_n[s_pi],
//! ```
//!
//! truncated so that every retained grade is exact. Skewing by `M_pi` maps
//! ordinary characters to subgroup characters; skewing by `L_pi` inverts it.
//! Series values are cached per `(pi, kind, degree)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::plethysm::plethysm;
use crate::schur::{skew, SymFunc};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SeriesKind {
    M,
    L,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesKind::M => write!(f, "M"),
            SeriesKind::L => write!(f, "L"),
        }
    }
}

/// A series value with its defining data; all graded components of `value`
/// have weight at most `degree`, and nonzero grades occur only in multiples
/// of `|pi|`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    pub pi: Partition,
    pub kind: SeriesKind,
    pub degree: u32,
    pub value: SymFunc,
}

type SeriesKey = (Partition, SeriesKind, u32);

fn series_cache() -> &'static RwLock<HashMap<SeriesKey, Arc<SymFunc>>> {
    static CACHE: OnceLock<RwLock<HashMap<SeriesKey, Arc<SymFunc>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn h_n(n: u32) -> SymFunc {
    SymFunc::schur(Partition::new(vec![n]))
}

fn e_n(n: u32) -> SymFunc {
    SymFunc::schur(Partition::new(vec![1; n as usize]))
}

/// The series `M_pi` or `L_pi`, exact in every grade `<= degree`.
pub fn series(pi: &Partition, kind: SeriesKind, degree: u32) -> Result<TruncatedSeries> {
    if pi.is_empty() {
        return Err(Error::ZeroPartitionSeries);
    }
    let key = (pi.clone(), kind, degree);
    let value = if let Some(hit) = series_cache().read().unwrap().get(&key) {
        (**hit).clone()
    } else {
        let w = pi.weight();
        let s_pi = SymFunc::schur(pi.clone());
        let mut value = SymFunc::zero();
        let mut n = 0u32;
        while n * w <= degree {
            let term = match kind {
                SeriesKind::M => plethysm(&h_n(n), &s_pi),
                SeriesKind::L => {
                    let t = plethysm(&e_n(n), &s_pi);
                    if n % 2 == 0 {
                        t
                    } else {
                        -&t
                    }
                }
            };
            value = &value + &term;
            n += 1;
        }
        series_cache()
            .write()
            .unwrap()
            .entry(key)
            .or_insert_with(|| Arc::new(value.clone()));
        value
    };
    Ok(TruncatedSeries {
        pi: pi.clone(),
        kind,
        degree,
        value,
    })
}

/// Branching from ordinary characters to subgroup characters: `f / M_pi`.
/// Exact when every grade of `f` is at most `degree`.
pub fn branch_to_subgroup(f: &SymFunc, pi: &Partition, degree: u32) -> Result<SymFunc> {
    let m = series(pi, SeriesKind::M, degree)?;
    Ok(skew(f, &m.value))
}

/// Branching from subgroup characters back to ordinary characters: `f / L_pi`.
pub fn branch_to_group(f: &SymFunc, pi: &Partition, degree: u32) -> Result<SymFunc> {
    let l = series(pi, SeriesKind::L, degree)?;
    Ok(skew(f, &l.value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{monomial_oracle, MonomialPoly};
    use crate::partition::{partitions_of, partitions_up_to};
    use crate::schur::outer_product;
    use num::{BigInt, Zero};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn s(parts: &[u32]) -> SymFunc {
        SymFunc::schur(p(parts))
    }

    #[test]
    fn series_examples() {
        let got = series(&p(&[2]), SeriesKind::M, 4).unwrap().value;
        let mut expect = SymFunc::one();
        expect.add_term(p(&[2]), 1.into());
        expect.add_term(p(&[4]), 1.into());
        expect.add_term(p(&[2, 2]), 1.into());
        assert_eq!(got, expect);

        let got = series(&p(&[1, 1]), SeriesKind::L, 2).unwrap().value;
        assert_eq!(got, &SymFunc::one() - &s(&[1, 1]));

        // the degree-2 term of L_2 is -e_1[s_2] = -s_2
        let got = series(&p(&[2]), SeriesKind::L, 2).unwrap().value;
        assert_eq!(got, &SymFunc::one() - &s(&[2]));

        let got = series(&p(&[2, 1]), SeriesKind::M, 3).unwrap().value;
        let mut expect = SymFunc::one();
        expect.add_term(p(&[2, 1]), 1.into());
        assert_eq!(got, expect);
    }

    #[test]
    fn l2_matches_product_expansion_oracle() {
        // expand prod_{i<=j} (1 - x_i x_j) in 4 variables up to degree 2;
        // with nvars >= degree the monomial image is faithful
        let nvars = 4usize;
        let mut oracle = MonomialPoly::constant(nvars, 1.into());
        for i in 0..nvars {
            for j in i..nvars {
                let mut factor = MonomialPoly::constant(nvars, 1.into());
                let mut e = vec![0u16; nvars];
                e[i] += 1;
                e[j] += 1;
                factor.add_term(e, (-1).into());
                oracle = oracle.mul(&factor);
            }
        }
        let series_poly =
            monomial_oracle(&series(&p(&[2]), SeriesKind::L, 2).unwrap().value, nvars);
        // both agree on every monomial of total degree <= 2
        let degree = |k: &[u16]| k.iter().map(|&x| x as u32).sum::<u32>();
        for (k, c) in series_poly.terms() {
            if degree(k) <= 2 {
                assert_eq!(&oracle.coefficient(k), c);
            }
        }
        for (k, c) in oracle.terms() {
            if degree(k) <= 2 {
                assert_eq!(&series_poly.coefficient(k), c);
            }
        }
    }

    #[test]
    fn zero_partition_is_rejected() {
        assert!(matches!(
            series(&Partition::empty(), SeriesKind::M, 4),
            Err(Error::ZeroPartitionSeries)
        ));
    }

    #[test]
    fn grades_are_multiples_of_pi_weight_and_m_is_positive() {
        for pi in [p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1])] {
            let w = pi.weight();
            let m = series(&pi, SeriesKind::M, 6).unwrap().value;
            let l = series(&pi, SeriesKind::L, 6).unwrap().value;
            assert_eq!(m.grade(0), SymFunc::one());
            assert_eq!(l.grade(0), SymFunc::one());
            for (lam, c) in m.terms() {
                assert_eq!(lam.weight() % w, 0);
                assert!(c > &BigInt::zero());
            }
            for (lam, c) in l.terms() {
                assert_eq!(lam.weight() % w, 0);
                let n = lam.weight() / w;
                if n % 2 == 0 {
                    assert!(c > &BigInt::zero());
                } else {
                    assert!(c < &BigInt::zero());
                }
            }
        }
    }

    #[test]
    fn m_times_l_is_one_to_degree_6() {
        for pi in [p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1])] {
            let m = series(&pi, SeriesKind::M, 6).unwrap().value;
            let l = series(&pi, SeriesKind::L, 6).unwrap().value;
            let prod = outer_product(&m, &l).truncate(6);
            assert_eq!(prod, SymFunc::one(), "M*L for pi = {}", pi);
        }
    }

    #[test]
    fn m2_and_m11_match_row_and_column_parity_to_degree_8() {
        let d = series(&p(&[2]), SeriesKind::M, 8).unwrap().value;
        let b = series(&p(&[1, 1]), SeriesKind::M, 8).unwrap().value;
        for n in 0..=8u32 {
            if n % 2 == 1 {
                assert!(d.grade(n).is_zero());
                assert!(b.grade(n).is_zero());
                continue;
            }
            for lam in partitions_of(n) {
                let even_rows = lam.parts().iter().all(|&r| r % 2 == 0);
                let even_cols = lam
                    .conjugate()
                    .parts()
                    .iter()
                    .all(|&r| r % 2 == 0);
                assert_eq!(d.coefficient(&lam), BigInt::from(even_rows as u8));
                assert_eq!(b.coefficient(&lam), BigInt::from(even_cols as u8));
            }
        }
    }

    /// Frobenius coordinates (arm lengths, leg lengths down the diagonal).
    fn frobenius(lam: &Partition) -> (Vec<u32>, Vec<u32>) {
        let conj = lam.conjugate();
        let d = (0..lam.len())
            .take_while(|&i| lam.part(i) as usize > i)
            .count();
        let arms = (0..d).map(|i| lam.part(i) - 1 - i as u32).collect();
        let legs = (0..d).map(|i| conj.part(i) - 1 - i as u32).collect();
        (arms, legs)
    }

    #[test]
    fn l2_terms_are_arm_exceeds_leg_hooks_to_degree_8() {
        let c_series = series(&p(&[2]), SeriesKind::L, 8).unwrap().value;
        for n in 0..=8u32 {
            for gam in partitions_of(n) {
                let (arms, legs) = frobenius(&gam);
                let in_family = arms.iter().zip(&legs).all(|(a, b)| *a == b + 1);
                let expect = if in_family {
                    let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
                    BigInt::from(sign)
                } else {
                    BigInt::zero()
                };
                assert_eq!(c_series.coefficient(&gam), expect, "at {}", gam);
            }
        }
    }

    #[test]
    fn branching_examples() {
        let got = branch_to_subgroup(&s(&[2]), &p(&[2]), 2).unwrap();
        assert_eq!(got, &s(&[2]) + &SymFunc::one());
        assert_eq!(branch_to_subgroup(&s(&[1]), &p(&[2]), 2).unwrap(), s(&[1]));
        assert_eq!(
            branch_to_subgroup(&SymFunc::one(), &p(&[3]), 3).unwrap(),
            SymFunc::one()
        );

        let f = &s(&[2]) + &SymFunc::one();
        assert_eq!(branch_to_group(&f, &p(&[2]), 2).unwrap(), s(&[2]));
        assert_eq!(branch_to_group(&s(&[1]), &p(&[2]), 2).unwrap(), s(&[1]));
        assert_eq!(
            branch_to_group(&SymFunc::one(), &p(&[2]), 2).unwrap(),
            SymFunc::one()
        );
    }

    #[test]
    fn branching_round_trip_to_degree_6() {
        for pi in [p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1])] {
            for lam in partitions_up_to(6) {
                let f = SymFunc::schur(lam.clone());
                let down = branch_to_subgroup(&f, &pi, 6).unwrap();
                let back = branch_to_group(&down, &pi, 6).unwrap();
                assert_eq!(back, f, "round trip of {} through pi = {}", lam, pi);
            }
        }
    }
}
