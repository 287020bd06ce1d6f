//! Sparse elements of tensor powers of the symmetric-function ring, with a
//! primal/dual orientation flag per slot.
//!
//! Primal slots are acted on by outer multiplication, dual slots by skewing;
//! the orientation bookkeeping is what the oriented-tangle operations in the
//! knot module rely on.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::partition::Partition;
use crate::schur::{coproduct_basis, product_basis, Coeff, SymFunc};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Orientation {
    Primal,
    Dual,
}

/// Sparse map from tuples of partitions to integer coefficients.
///
/// Invariant: no stored zero coefficients; every key has length `rank()`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorSF {
    orient: Vec<Orientation>,
    terms: BTreeMap<Vec<Partition>, Coeff>,
}

impl TensorSF {
    pub fn new(orient: Vec<Orientation>) -> Self {
        assert!(
            (1..=3).contains(&orient.len()),
            "tensor rank must be 1..=3"
        );
        TensorSF {
            orient,
            terms: BTreeMap::new(),
        }
    }

    /// The all-primal unit `s_0 (x) ... (x) s_0`.
    pub fn unit(rank: usize) -> Self {
        let mut t = TensorSF::new(vec![Orientation::Primal; rank]);
        t.add_term(vec![Partition::empty(); rank], Coeff::one());
        t
    }

    pub fn rank(&self) -> usize {
        self.orient.len()
    }

    pub fn orientations(&self) -> &[Orientation] {
        &self.orient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Partition>, &Coeff)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: Vec<Partition>, c: Coeff) {
        assert_eq!(key.len(), self.rank());
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
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

    pub fn coefficient(&self, key: &[Partition]) -> Coeff {
        self.terms.get(key).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add(&self, other: &TensorSF) -> TensorSF {
        assert_eq!(self.orient, other.orient);
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> TensorSF {
        if c.is_zero() {
            return TensorSF::new(self.orient.clone());
        }
        TensorSF {
            orient: self.orient.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Rank-1 embedding of a symmetric function.
    pub fn from_symfunc(f: &SymFunc, orient: Orientation) -> TensorSF {
        let mut t = TensorSF::new(vec![orient]);
        for (p, c) in f.terms() {
            t.add_term(vec![p.clone()], c.clone());
        }
        t
    }

    /// `f (x) g` with both slots primal.
    pub fn outer2(f: &SymFunc, g: &SymFunc) -> TensorSF {
        let mut t = TensorSF::new(vec![Orientation::Primal; 2]);
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                t.add_term(vec![a.clone(), b.clone()], ca * cb);
            }
        }
        t
    }

    pub fn basis2(a: &Partition, b: &Partition) -> TensorSF {
        let mut t = TensorSF::new(vec![Orientation::Primal; 2]);
        t.add_term(vec![a.clone(), b.clone()], Coeff::one());
        t
    }

    pub fn basis3(a: &Partition, b: &Partition, c: &Partition) -> TensorSF {
        let mut t = TensorSF::new(vec![Orientation::Primal; 3]);
        t.add_term(vec![a.clone(), b.clone(), c.clone()], Coeff::one());
        t
    }

    pub fn into_symfunc(self) -> SymFunc {
        assert_eq!(self.rank(), 1);
        SymFunc::from_terms(self.terms.into_iter().map(|(mut k, c)| (k.remove(0), c)))
    }

    /// Replaces slot `i` by the expansion `f(s_lambda)`; orientation of the
    /// slot is unchanged.
    pub fn map_slot(&self, i: usize, f: impl Fn(&Partition) -> SymFunc) -> TensorSF {
        let mut out = TensorSF::new(self.orient.clone());
        for (key, c) in self.terms() {
            let image = f(&key[i]);
            for (p, k) in image.terms() {
                let mut nk = key.clone();
                nk[i] = p.clone();
                out.add_term(nk, k * c);
            }
        }
        out
    }

    /// Applies the outer coproduct to slot `i`, raising the rank by one; the
    /// two new slots inherit the orientation of slot `i`.
    pub fn coproduct_slot(&self, i: usize) -> TensorSF {
        let mut orient = self.orient.clone();
        orient.insert(i + 1, orient[i]);
        let mut out = TensorSF::new(orient);
        for (key, c) in self.terms() {
            for (mu, nu, k) in coproduct_basis(&key[i]).iter() {
                let mut nk = key.clone();
                nk[i] = mu.clone();
                nk.insert(i + 1, nu.clone());
                out.add_term(nk, k * c);
            }
        }
        out
    }

    /// Applies the counit to slot `i`, lowering the rank by one.
    pub fn counit_slot(&self, i: usize) -> TensorSF {
        let mut orient = self.orient.clone();
        orient.remove(i);
        let mut out = TensorSF::new(orient);
        for (key, c) in self.terms() {
            if key[i].is_empty() {
                let mut nk = key.clone();
                nk.remove(i);
                out.add_term(nk, c.clone());
            }
        }
        out
    }

    /// Swaps slots `i` and `j` (contents and orientations).
    pub fn switch(&self, i: usize, j: usize) -> TensorSF {
        let mut orient = self.orient.clone();
        orient.swap(i, j);
        let mut out = TensorSF::new(orient);
        for (key, c) in self.terms() {
            let mut nk = key.clone();
            nk.swap(i, j);
            out.add_term(nk, c.clone());
        }
        out
    }

    /// Componentwise outer product; all slots of both operands must be primal.
    pub fn hadamard(&self, other: &TensorSF) -> TensorSF {
        assert_eq!(self.orient, other.orient);
        assert!(
            self.orient.iter().all(|o| *o == Orientation::Primal),
            "componentwise products act on primal slots"
        );
        let rank = self.rank();
        let mut out = TensorSF::new(self.orient.clone());
        for (ka, ca) in self.terms() {
            for (kb, cb) in other.terms() {
                // expand the per-slot products one slot at a time
                let mut partial: Vec<(Vec<Partition>, Coeff)> = vec![(Vec::new(), ca * cb)];
                for slot in 0..rank {
                    let expansion = product_basis(&ka[slot], &kb[slot]);
                    let mut next = Vec::new();
                    for (prefix, c) in &partial {
                        for (p, k) in expansion.terms() {
                            let mut np = prefix.clone();
                            np.push(p.clone());
                            next.push((np, c * k));
                        }
                    }
                    partial = next;
                }
                for (key, c) in partial {
                    out.add_term(key, c);
                }
            }
        }
        out
    }

    /// Embeds a rank-2 tensor into `rank` slots at positions `(i, j)`, with
    /// `s_0` elsewhere.
    pub fn embed2(&self, rank: usize, i: usize, j: usize) -> TensorSF {
        assert_eq!(self.rank(), 2);
        assert!(i < j && j < rank);
        let mut out = TensorSF::new(vec![Orientation::Primal; rank]);
        for (key, c) in self.terms() {
            let mut nk = vec![Partition::empty(); rank];
            nk[i] = key[0].clone();
            nk[j] = key[1].clone();
            out.add_term(nk, c.clone());
        }
        out
    }

    /// Keeps the terms whose every slot has weight at most `d`.
    pub fn truncate_slots(&self, d: u32) -> TensorSF {
        TensorSF {
            orient: self.orient.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.iter().all(|p| p.weight() <= d))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps the terms of total weight at most `w`.
    pub fn filter_total(&self, w: u32) -> TensorSF {
        TensorSF {
            orient: self.orient.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.iter().map(Partition::weight).sum::<u32>() <= w)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let orient: Vec<&str> = self
            .orient
            .iter()
            .map(|o| match o {
                Orientation::Primal => "primal",
                Orientation::Dual => "dual",
            })
            .collect();
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(k, c)| {
                serde_json::json!({
                    "partitions": k.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
                    "coeff": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "rank": self.rank(), "orientation": orient, "terms": terms })
    }
}

impl fmt::Display for TensorSF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, c)) in self.terms.iter().enumerate() {
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
            if !mag.is_one() {
                write!(f, "{}*", mag)?;
            }
            for (slot, p) in key.iter().enumerate() {
                if slot > 0 {
                    write!(f, "⊗")?;
                }
                write!(f, "s{}", p)?;
                if self.orient[slot] == Orientation::Dual {
                    write!(f, "*")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TensorSF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::{coproduct, outer_product};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn hadamard_matches_bialgebra_shuffle() {
        // (f1 g1) (x) (f2 g2) summed over Sweedler parts equals Delta(f g)
        let f = SymFunc::schur(p(&[2]));
        let g = SymFunc::schur(p(&[1, 1]));
        let lhs = coproduct(&f).hadamard(&coproduct(&g));
        let rhs = coproduct(&outer_product(&f, &g));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn switch_and_embed() {
        let t = TensorSF::basis2(&p(&[2]), &p(&[1]));
        let sw = t.switch(0, 1);
        assert_eq!(sw.coefficient(&[p(&[1]), p(&[2])]), 1.into());
        let e = t.embed2(3, 0, 2);
        assert_eq!(
            e.coefficient(&[p(&[2]), Partition::empty(), p(&[1])]),
            1.into()
        );
    }

    #[test]
    fn counit_slot_picks_empty_components() {
        let mut t = TensorSF::new(vec![Orientation::Primal; 2]);
        t.add_term(vec![p(&[]), p(&[3])], 2.into());
        t.add_term(vec![p(&[1]), p(&[1])], 5.into());
        let u = t.counit_slot(0);
        assert_eq!(u.rank(), 1);
        assert_eq!(u.into_symfunc(), SymFunc::schur(p(&[3])).scale(&2.into()));
    }

    #[test]
    fn display_marks_dual_slots() {
        let mut t = TensorSF::new(vec![Orientation::Primal, Orientation::Dual]);
        t.add_term(vec![p(&[1]), p(&[2])], 1.into());
        assert_eq!(t.to_string(), "s[1]⊗s[2]*");
    }
}
