//! Expansion of symmetric functions into multivariate polynomials by
//! semistandard-tableau enumeration.
//!
//! This is the independent route used to cross-check products and plethysms:
//! `s_lambda(x_1..x_n) = sum_T x^T` over semistandard tableaux of shape
//! `lambda` with entries in `1..=n`.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, Zero};

use crate::partition::Partition;
use crate::schur::{Coeff, SymFunc};

/// Sparse polynomial keyed by exponent vectors of fixed length.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, Coeff>,
}

impl MonomialPoly {
    pub fn zero(nvars: usize) -> Self {
        MonomialPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, expts: &[u16]) -> Coeff {
        self.terms.get(expts).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Coeff)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, expts: Vec<u16>, c: Coeff) {
        assert_eq!(expts.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(expts) {
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

    pub fn add(&self, other: &MonomialPoly) -> MonomialPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MonomialPoly) -> MonomialPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MonomialPoly::zero(self.nvars);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let k: Vec<u16> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                out.add_term(k, ca * cb);
            }
        }
        out
    }

    /// Monomials with multiplicity, each repeated per its coefficient.
    /// Panics on negative coefficients; used to turn a Schur-positive
    /// polynomial into an alphabet.
    pub fn monomials_with_multiplicity(&self) -> Vec<Vec<u16>> {
        let mut out = Vec::new();
        for (k, c) in &self.terms {
            let reps = u64::try_from(c.clone()).expect("alphabet requires nonnegative coefficients");
            for _ in 0..reps {
                out.push(k.clone());
            }
        }
        out
    }
}

impl fmt::Debug for MonomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialPoly({} vars, {} terms)", self.nvars, self.terms.len())
    }
}

/// Enumerates the semistandard tableaux of straight shape `lambda` with
/// entries in `1..=nvars`, calling `emit` with the content vector of each.
fn for_each_ssyt(lambda: &Partition, nvars: usize, emit: &mut impl FnMut(&[u16])) {
    if lambda.is_empty() {
        emit(&vec![0; nvars]);
        return;
    }
    if lambda.len() > nvars {
        return; // column constraint is unsatisfiable
    }
    let rows = lambda.len();
    let mut filling: Vec<Vec<u16>> = (0..rows)
        .map(|r| vec![0; lambda.part(r) as usize])
        .collect();
    let mut content = vec![0u16; nvars];
    // cells row by row, left to right: both neighbours that constrain a cell
    // (left and above) are already placed
    let mut cells = Vec::new();
    for r in 0..rows {
        for c in 0..lambda.part(r) as usize {
            cells.push((r, c));
        }
    }
    rec(&cells, 0, nvars, &mut filling, &mut content, emit);

    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        nvars: usize,
        filling: &mut Vec<Vec<u16>>,
        content: &mut Vec<u16>,
        emit: &mut impl FnMut(&[u16]),
    ) {
        if idx == cells.len() {
            emit(content);
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = 1u16;
        if c > 0 {
            lo = lo.max(filling[r][c - 1]); // weakly increasing along rows
        }
        if r > 0 {
            lo = lo.max(filling[r - 1][c] + 1); // strictly increasing down columns
        }
        for v in lo..=(nvars as u16) {
            filling[r][c] = v;
            content[(v - 1) as usize] += 1;
            rec(cells, idx + 1, nvars, filling, content, emit);
            content[(v - 1) as usize] -= 1;
        }
    }
}

/// The polynomial `f(x_1..x_nvars)` by semistandard-tableau enumeration.
///
/// With fewer variables than rows a Schur term specializes to zero, which is
/// still the correct specialization.
pub fn monomial_oracle(f: &SymFunc, nvars: usize) -> MonomialPoly {
    let mut out = MonomialPoly::zero(nvars);
    for (lam, c) in f.terms() {
        for_each_ssyt(lam, nvars, &mut |content| {
            out.add_term(content.to_vec(), c.clone());
        });
    }
    out
}

/// Evaluates `f` on the alphabet whose letters are the monomials of `g` in
/// `nvars` base variables: the substitution definition of plethysm, used as
/// an independent oracle. `g` must expand with nonnegative coefficients.
pub fn plethysm_oracle(f: &SymFunc, g: &SymFunc, nvars: usize) -> MonomialPoly {
    let alphabet = monomial_oracle(g, nvars).monomials_with_multiplicity();
    let n = alphabet.len();
    let mut out = MonomialPoly::zero(nvars);
    for (lam, c) in f.terms() {
        for_each_ssyt(lam, n, &mut |content| {
            // product over letters of (letter monomial)^count, as an
            // exponent vector in the base variables
            let mut expts = vec![0u16; nvars];
            for (letter, &count) in alphabet.iter().zip(content.iter()) {
                if count == 0 {
                    continue;
                }
                for (e, l) in expts.iter_mut().zip(letter) {
                    *e += l * count;
                }
            }
            out.add_term(expts, c.clone());
        });
    }
    out
}
