//! Braid words on `m` strands and the combinatorial statistics of their
//! closures: strand permutation, components, per-component writhes and the
//! linking matrix.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A word in the signed Artin generators; generator `i` crosses the strands
/// at positions `i` and `i+1` (1-indexed).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i8)>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("need at least one strand".into()));
        }
        for &(i, sign) in &letters {
            if i == 0 || i >= strands {
                return Err(Error::InvalidBraid(format!(
                    "generator {} out of range for {} strands",
                    i, strands
                )));
            }
            if sign != 1 && sign != -1 {
                return Err(Error::InvalidBraid(format!("sign must be +-1, got {}", sign)));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses whitespace-separated signed generator indices, e.g. `"1 -2 1"`.
    /// The strand count defaults to one more than the largest index used.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        let mut max_idx = 0usize;
        for tok in text.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::InvalidBraid(format!("bad generator token {:?}", tok)))?;
            if v == 0 {
                return Err(Error::InvalidBraid("generator index 0 is invalid".into()));
            }
            let idx = v.unsigned_abs() as usize;
            max_idx = max_idx.max(idx);
            letters.push((idx, if v > 0 { 1 } else { -1 }));
        }
        let strands = strands.unwrap_or(max_idx + 1);
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn length(&self) -> usize {
        self.letters.len()
    }

    /// Writhe: the signed crossing count `w_+ - w_-`.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&(_, s)| s as i64).sum()
    }
}

/// Closure statistics of a braid word. Strands are 0-indexed internally;
/// `permutation[j]` is the strand found at bottom position `j`, and the
/// closure glues bottom position `j` back to top position `j`, so the
/// components are the cycles of that permutation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkStats {
    pub permutation: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub component_writhes: Vec<i64>,
    pub linking_matrix: Vec<Vec<i64>>,
}

impl LinkStats {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// `w = sum w_i + 2 sum_{i<j} w_ij`.
    pub fn writhe(&self) -> i64 {
        let k = self.components.len();
        let mut w: i64 = self.component_writhes.iter().sum();
        for i in 0..k {
            for j in (i + 1)..k {
                w += 2 * self.linking_matrix[i][j];
            }
        }
        w
    }

    pub fn to_json(&self, b: &BraidWord) -> serde_json::Value {
        serde_json::json!({
            "strands": b.strands(),
            "length": b.length(),
            "writhe": b.writhe(),
            "permutation": self.permutation.iter().map(|v| v + 1).collect::<Vec<_>>(),
            "components": self
                .components
                .iter()
                .map(|c| c.iter().map(|v| v + 1).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "component_writhes": self.component_writhes,
            "linking_matrix": self.linking_matrix,
        })
    }
}

/// Computes the strand permutation, cycle decomposition, per-component
/// writhes, and linking numbers of the braid closure. A letter is a
/// self-crossing of a component exactly when the two positions it acts on
/// are occupied by strands of the same cycle; signed inter-component counts
/// are always even and are halved into linking numbers.
pub fn link_stats(b: &BraidWord) -> LinkStats {
    let m = b.strands();
    let mut perm: Vec<usize> = (0..m).collect();
    for &(i, _) in b.letters() {
        perm.swap(i - 1, i);
    }

    // cycles of the closure permutation, ordered by smallest strand
    let mut comp_of = vec![usize::MAX; m];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..m {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let idx = components.len();
        let mut cycle = Vec::new();
        let mut cur = start;
        while comp_of[cur] == usize::MAX {
            comp_of[cur] = idx;
            cycle.push(cur);
            cur = perm[cur];
        }
        cycle.sort_unstable();
        components.push(cycle);
    }

    let k = components.len();
    let mut component_writhes = vec![0i64; k];
    let mut inter: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    let mut occupancy: Vec<usize> = (0..m).collect();
    for &(i, sign) in b.letters() {
        let (s1, s2) = (occupancy[i - 1], occupancy[i]);
        let (c1, c2) = (comp_of[s1], comp_of[s2]);
        if c1 == c2 {
            component_writhes[c1] += sign as i64;
        } else {
            *inter.entry((c1.min(c2), c1.max(c2))).or_insert(0) += sign as i64;
        }
        occupancy.swap(i - 1, i);
    }

    let mut linking_matrix = vec![vec![0i64; k]; k];
    for ((i, j), count) in inter {
        assert!(
            count % 2 == 0,
            "signed inter-component count between {} and {} is odd: {}",
            i,
            j,
            count
        );
        linking_matrix[i][j] = count / 2;
        linking_matrix[j][i] = count / 2;
    }

    LinkStats {
        permutation: perm,
        components,
        component_writhes,
        linking_matrix,
    }
}
