//! Integer partitions: the index set of every basis in the crate.
//!
//! A partition is stored as a weakly decreasing sequence of positive parts;
//! trailing zeros are stripped on construction so each partition has exactly
//! one representative. Enumeration is reverse-lexicographic (largest first
//! part first), and `Ord` sorts by weight and then by that enumeration
//! order, which keeps every printed or serialized term list byte-stable.

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from a weakly decreasing sequence; zeros are
    /// stripped. Panics on an increasing pair, which is a programmer error.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {:?}",
            parts
        );
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    /// Fallible constructor for text/JSON input.
    pub fn try_new(parts: Vec<u32>) -> crate::error::Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(crate::error::Error::Parse(format!(
                "partition parts must be weakly decreasing: {:?}",
                parts
            )));
        }
        Ok(Self::new(parts))
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Row `i` (0-indexed), zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transposed partition: column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for c in 0..cols {
            out.push(self.parts.iter().take_while(|&&p| p as usize > c).count() as u32);
        }
        Partition { parts: out }
    }

    /// Containment of Young diagrams: `mu[i] <= self[i]` for all rows.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.parts
            .iter()
            .enumerate()
            .all(|(i, &m)| m <= self.part(i))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            // within a weight: reverse-lexicographic, so (4) < (3,1) < (2,2)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    fn from(parts: [u32; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// All partitions of `n`, reverse-lexicographic: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    rec(n, n, &mut stack, &mut out);
    return out;

    fn rec(rest: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        let hi = rest.min(max);
        for p in (1..=hi).rev() {
            stack.push(p);
            rec(rest - p, p, stack, out);
            stack.pop();
        }
    }
}

/// All partitions of weight at most `d`, sorted by (weight, reverse-lex).
pub fn partitions_up_to(d: u32) -> Vec<Partition> {
    (0..=d).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Independent oracle: column lengths counted directly on the diagram.
    fn conjugate_oracle(lambda: &Partition) -> Partition {
        let mut cols: Vec<u32> = Vec::new();
        for &row in lambda.parts() {
            for c in 0..row as usize {
                if cols.len() <= c {
                    cols.push(0);
                }
                cols[c] += 1;
            }
        }
        Partition::new(cols)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3]).conjugate(), conjugate_oracle(&p(&[3])));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
    }

    #[test]
    fn conjugate_is_involutive_and_weight_preserving() {
        for n in 0..=12 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().weight(), lam.weight());
                assert_eq!(lam.conjugate(), conjugate_oracle(&lam));
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(1), vec![p(&[1])]);
        assert_eq!(
            partitions_of(4),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
    }

    #[test]
    fn partition_counts_match_classical_sequence() {
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &count) in expected.iter().enumerate() {
            let all = partitions_of(n as u32);
            assert_eq!(all.len(), count);
            // each exactly once
            let mut dedup = all.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), count);
        }
    }

    #[test]
    fn containment() {
        assert!(p(&[2, 1]).contains(&p(&[1])));
        assert!(!p(&[2, 1]).contains(&p(&[2, 2])));
        assert!(p(&[3, 2, 1]).contains(&p(&[2, 2])));
        assert!(p(&[1]).contains(&Partition::empty()));
    }

    #[test]
    fn ordering_is_weight_then_reverse_lex() {
        let mut v = vec![p(&[1, 1]), p(&[3]), p(&[2]), Partition::empty(), p(&[2, 1])];
        v.sort();
        assert_eq!(
            v,
            vec![Partition::empty(), p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1])]
        );
    }

    #[test]
    fn canonical_form_strips_zeros() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(Partition::new(vec![0]), Partition::empty());
    }
}
