//! Mesh patterns and occurrence matching.
//!
//! A mesh pattern of length `k` is a classical pattern `tau` together with a
//! set of shaded boxes `(i, j)`, `0 <= i, j <= k`. Box `(i, j)` is the open
//! region between the `i`-th and `(i+1)`-th selected positions and between
//! the `j`-th and `(j+1)`-th smallest selected values, with sentinels at `0`
//! and `n + 1`. An occurrence is a subsequence order-isomorphic to `tau`
//! whose shaded regions contain no other point of the host.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Longest pattern the matcher supports; `(k + 1)^2` boxes must fit in a `u128`.
pub const MAX_PATTERN_LEN: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symmetry {
    Reverse,
    Complement,
    Inverse,
}

impl Symmetry {
    pub fn apply_to_perm(self, p: &Permutation) -> Permutation {
        match self {
            Symmetry::Reverse => p.reverse(),
            Symmetry::Complement => p.complement(),
            Symmetry::Inverse => p.inverse(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct MeshPattern {
    tau: Permutation,
    shading: BTreeSet<(usize, usize)>,
    mask: u128,
}

impl MeshPattern {
    pub fn new(tau: Permutation, boxes: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let k = tau.len();
        if k > MAX_PATTERN_LEN {
            return Err(Error::InvalidInput(format!(
                "patterns longer than {MAX_PATTERN_LEN} are not supported"
            )));
        }
        let mut shading = BTreeSet::new();
        let mut mask = 0u128;
        for (i, j) in boxes {
            if i > k || j > k {
                return Err(Error::InvalidInput(format!(
                    "box ({i},{j}) lies outside [0,{k}]x[0,{k}]"
                )));
            }
            shading.insert((i, j));
            mask |= 1 << (i * (k + 1) + j);
        }
        Ok(MeshPattern { tau, shading, mask })
    }

    /// The classical pattern `tau` with no shading.
    pub fn classical(tau: Permutation) -> Result<Self> {
        MeshPattern::new(tau, [])
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    pub fn len(&self) -> usize {
        self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau.is_empty()
    }

    pub fn shading(&self) -> &BTreeSet<(usize, usize)> {
        &self.shading
    }

    pub fn is_shaded(&self, i: usize, j: usize) -> bool {
        let k = self.len();
        i <= k && j <= k && self.mask & (1 << (i * (k + 1) + j)) != 0
    }

    pub fn transform(&self, op: Symmetry) -> MeshPattern {
        let k = self.len();
        let boxes = self.shading.iter().map(|&(i, j)| match op {
            Symmetry::Reverse => (k - i, j),
            Symmetry::Complement => (i, k - j),
            Symmetry::Inverse => (j, i),
        });
        MeshPattern::new(op.apply_to_perm(&self.tau), boxes).expect("transform stays in range")
    }

    /// All occurrences as 0-based strictly increasing position tuples, in lexicographic order.
    pub fn find_occurrences(&self, pi: &Permutation) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.scan(pi.as_slice(), |idx| {
            out.push(idx.to_vec());
            true
        });
        out
    }

    pub fn count_occurrences(&self, pi: &Permutation) -> usize {
        self.count_in_word(pi.as_slice())
    }

    /// Counts occurrences in a raw one-line word (must be a permutation of `1..=n`).
    pub fn count_in_word(&self, word: &[u32]) -> usize {
        let mut c = 0;
        self.scan(word, |_| {
            c += 1;
            true
        });
        c
    }

    pub fn contains(&self, pi: &Permutation) -> bool {
        let mut found = false;
        self.scan(pi.as_slice(), |_| {
            found = true;
            false
        });
        found
    }

    pub fn avoids(&self, pi: &Permutation) -> bool {
        !self.contains(pi)
    }

    /// Visits every occurrence in lexicographic order of index tuples; the
    /// visitor returns `false` to stop early.
    fn scan(&self, word: &[u32], mut visit: impl FnMut(&[usize]) -> bool) {
        let n = word.len();
        let k = self.len();
        if k > n {
            return;
        }
        if k == 0 {
            // The empty pattern occurs once, provided the shaded box (0,0) is empty.
            if n == 0 || !self.is_shaded(0, 0) {
                visit(&[]);
            }
            return;
        }
        let tau = self.tau.as_slice();
        let mut idx: Vec<usize> = (0..k).collect();
        let mut vals = vec![0u32; k];
        loop {
            if self.matches_at(word, &idx, &mut vals, tau) && !visit(&idx) {
                return;
            }
            // next k-combination of 0..n
            let mut t = k;
            while t > 0 && idx[t - 1] == n - k + t - 1 {
                t -= 1;
            }
            if t == 0 {
                return;
            }
            idx[t - 1] += 1;
            for s in t..k {
                idx[s] = idx[s - 1] + 1;
            }
        }
    }

    fn matches_at(&self, word: &[u32], idx: &[usize], vals: &mut [u32], tau: &[u32]) -> bool {
        let k = idx.len();
        // order-isomorphism: the selected value of rank tau[a] sits at slot a
        for a in 0..k {
            vals[tau[a] as usize - 1] = word[idx[a]];
        }
        if vals.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        if self.mask == 0 {
            return true;
        }
        let mut col = 0;
        for (m, &v) in word.iter().enumerate() {
            if col < k && idx[col] == m {
                col += 1;
                continue;
            }
            let row = vals.partition_point(|&s| s < v);
            if self.mask & (1 << (col * (k + 1) + row)) != 0 {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for MeshPattern {
    /// `tau=<word>;R=(i1,j1)(i2,j2)...` with boxes in lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("tau=")?;
        for v in self.tau.as_slice() {
            write!(f, "{v}")?;
        }
        f.write_str(";R=")?;
        for (i, j) in &self.shading {
            write!(f, "({i},{j})")?;
        }
        Ok(())
    }
}

impl FromStr for MeshPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("pattern literal `{s}`: {why}"));
        let s = s.trim();
        let (tau_part, r_part) = s.split_once(';').ok_or_else(|| bad("missing `;`"))?;
        let tau_word = tau_part
            .trim()
            .strip_prefix("tau=")
            .ok_or_else(|| bad("expected `tau=`"))?;
        let boxes_str = r_part
            .trim()
            .strip_prefix("R=")
            .ok_or_else(|| bad("expected `R=`"))?;
        let tau: Permutation = if tau_word.is_empty() {
            Permutation::empty()
        } else {
            tau_word.parse()?
        };
        let mut boxes = Vec::new();
        let mut rest = boxes_str.trim();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .ok_or_else(|| bad("boxes must look like (i,j)"))?;
            let close = inner.find(')').ok_or_else(|| bad("unclosed box"))?;
            let (a, b) = inner[..close]
                .split_once(',')
                .ok_or_else(|| bad("box needs two coordinates"))?;
            let i = a.trim().parse().map_err(|_| bad("bad box coordinate"))?;
            let j = b.trim().parse().map_err(|_| bad("bad box coordinate"))?;
            boxes.push((i, j));
            rest = inner[close + 1..].trim_start();
        }
        MeshPattern::new(tau, boxes)
    }
}

impl TryFrom<String> for MeshPattern {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<MeshPattern> for String {
    fn from(p: MeshPattern) -> String {
        p.to_string()
    }
}
