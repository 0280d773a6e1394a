//! Exhaustive ground truth over `S_n`.
//!
//! Permutations are enumerated in lexicographic order, sharded by first
//! letter. Shard tables are summed in shard order, so the result does not
//! depend on the shard count.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::MeshPattern;
use crate::perm::{next_lex, Permutation};
use crate::series::{QPoly, TruncatedSeries};

/// Default largest `n` the oracle enumerates.
pub const DEFAULT_CEILING: usize = 9;
/// Largest `n` allowed even with an explicit override.
pub const HARD_CEILING: usize = 10;
/// Environment variable naming a directory for cached avoider lists.
pub const CACHE_DIR_ENV: &str = "MESHDIST_CACHE_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub ceiling: usize,
    /// Worker threads; `1` runs the shards sequentially on the caller's thread.
    pub shards: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            ceiling: DEFAULT_CEILING,
            shards: 1,
        }
    }
}

impl OracleConfig {
    /// Raises the ceiling to the hard limit.
    pub fn unsafe_n_max(mut self) -> Self {
        self.ceiling = HARD_CEILING;
        self
    }

    pub fn with_shards(mut self, shards: usize) -> Self {
        self.shards = shards.max(1);
        self
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.ceiling.min(HARD_CEILING) {
            return Err(Error::ResourceLimit {
                requested: n,
                ceiling: self.ceiling.min(HARD_CEILING),
            });
        }
        Ok(())
    }

    /// Runs `job` on each first letter `1..=n` and returns the results in letter order.
    fn run_shards<T: Send>(&self, n: usize, job: impl Fn(u32) -> T + Sync + Send) -> Vec<T> {
        if n == 0 {
            return Vec::new();
        }
        if self.shards <= 1 {
            return (1..=n as u32).map(job).collect();
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.shards)
            .build()
            .expect("thread pool");
        pool.install(|| (1..=n as u32).into_par_iter().map(job).collect())
    }
}

/// Visits every permutation of length `n` beginning with `first`, in lexicographic order.
fn for_each_with_first(n: usize, first: u32, mut f: impl FnMut(&[u32])) {
    let mut w: Vec<u32> = std::iter::once(first)
        .chain((1..=n as u32).filter(|&v| v != first))
        .collect();
    loop {
        f(&w);
        if !next_lex(&mut w[1..]) {
            break;
        }
    }
}

fn add_at(v: &mut Vec<u64>, i: usize, by: u64) {
    if v.len() <= i {
        v.resize(i + 1, 0);
    }
    v[i] += by;
}

fn to_big(v: Vec<u64>) -> Vec<BigInt> {
    v.into_iter().map(BigInt::from).collect()
}

pub(crate) fn trim(mut row: Vec<BigInt>) -> Vec<BigInt> {
    while row.len() > 1 && row.last().is_some_and(Zero::is_zero) {
        row.pop();
    }
    if row.is_empty() {
        row.push(BigInt::zero());
    }
    row
}

/// `T[n][k]`: the number of `n`-permutations with exactly `k` occurrences.
///
/// Rows carry no trailing zeros (row `0` is `[1]`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionTable {
    pub pattern: String,
    #[serde(with = "crate::json::matrix")]
    pub rows: Vec<Vec<BigInt>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub conjectural: bool,
}

impl DistributionTable {
    pub fn new(pattern: impl Into<String>, rows: Vec<Vec<BigInt>>) -> Self {
        DistributionTable {
            pattern: pattern.into(),
            rows: rows.into_iter().map(trim).collect(),
            conjectural: false,
        }
    }

    /// Reads rows `0..=n_max` off the `q`-coefficients of a generating function.
    pub fn from_series(
        pattern: impl Into<String>,
        s: &TruncatedSeries,
        n_max: usize,
    ) -> Result<Self> {
        if n_max > s.order() {
            return Err(Error::OrderMismatch(s.order(), n_max));
        }
        let rows = (0..=n_max).map(|n| s.coeff(n).q_coeffs()).collect();
        Ok(DistributionTable::new(pattern, rows))
    }

    /// The generating function `sum_n sum_k T[n][k] q^k x^n` truncated at `n_max`.
    pub fn to_series(&self) -> TruncatedSeries {
        TruncatedSeries::new(
            self.n_max(),
            self.rows
                .iter()
                .map(|r| QPoly::from_q_coeffs(r.iter().cloned())),
        )
    }

    pub fn n_max(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_default()
    }

    /// Keeps rows `0..=n_max`.
    pub fn truncated(&self, n_max: usize) -> Self {
        let mut t = self.clone();
        t.rows.truncate(n_max + 1);
        t
    }

    /// Row `n` sums to `n!` for every `n`.
    pub fn check_row_sums(&self) -> Result<()> {
        let mut fact = BigInt::from(1);
        for (n, row) in self.rows.iter().enumerate() {
            if n > 0 {
                fact *= n;
            }
            let s: BigInt = row.iter().sum();
            if s != fact || row.iter().any(|v| v < &BigInt::zero()) {
                return Err(Error::InvalidInput(format!(
                    "row {n} of `{}` sums to {s}, expected {fact}",
                    self.pattern
                )));
            }
        }
        Ok(())
    }

    /// First `(n, k, self, other)` where the tables disagree, over their common rows.
    pub fn first_divergence(&self, other: &Self) -> Option<(usize, usize, BigInt, BigInt)> {
        let n_max = self.n_max().min(other.n_max());
        for n in 0..=n_max {
            let width = self.rows[n].len().max(other.rows[n].len());
            for k in 0..width {
                let (a, b) = (self.get(n, k), other.get(n, k));
                if a != b {
                    return Some((n, k, a, b));
                }
            }
        }
        None
    }

    /// One line per row, entries space-separated.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// b-file lines `n T[n][k]` for `n` from `offset` to `n_max`.
    pub fn bfile_column(&self, k: usize, offset: usize) -> String {
        let mut out = String::new();
        for n in offset..=self.n_max() {
            let _ = writeln!(out, "{n} {}", self.get(n, k));
        }
        out
    }

    /// b-file of the triangle read by rows (rows `n >= first_row`), indexed from `offset`.
    pub fn bfile_triangle(&self, first_row: usize, offset: usize) -> String {
        let mut out = String::new();
        let mut idx = offset;
        for row in self.rows.iter().skip(first_row) {
            for v in row {
                let _ = writeln!(out, "{idx} {v}");
                idx += 1;
            }
        }
        out
    }
}

/// `J[n][k][d]`: `n`-permutations with `k` occurrences and `d` descents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JointTable {
    pub pattern: String,
    #[serde(with = "crate::json::cube")]
    pub rows: Vec<Vec<Vec<BigInt>>>,
}

impl JointTable {
    pub fn get(&self, n: usize, k: usize, d: usize) -> BigInt {
        self.rows
            .get(n)
            .and_then(|m| m.get(k))
            .and_then(|r| r.get(d))
            .cloned()
            .unwrap_or_default()
    }

    /// Sum over descents.
    pub fn occurrence_marginal(&self) -> DistributionTable {
        DistributionTable::new(
            self.pattern.clone(),
            self.rows
                .iter()
                .map(|m| m.iter().map(|r| r.iter().sum()).collect())
                .collect(),
        )
    }

    /// Sum over occurrences: the Eulerian triangle.
    pub fn descent_marginal(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|m| {
                let width = m.iter().map(Vec::len).max().unwrap_or(0);
                let mut out = vec![BigInt::zero(); width];
                for r in m {
                    for (d, v) in r.iter().enumerate() {
                        out[d] += v;
                    }
                }
                trim(out)
            })
            .collect()
    }

    /// The generating function `sum J[n][k][d] q^k t^d x^n`.
    pub fn to_series(&self) -> TruncatedSeries {
        TruncatedSeries::new(
            self.rows.len().saturating_sub(1),
            self.rows.iter().map(|m| QPoly::from_rows(m.clone())),
        )
    }
}

fn distribution_row(p: &MeshPattern, n: usize, cfg: &OracleConfig) -> Vec<BigInt> {
    if n == 0 {
        let k = p.count_in_word(&[]);
        let mut row = vec![BigInt::zero(); k + 1];
        row[k] = BigInt::from(1);
        return row;
    }
    let parts = cfg.run_shards(n, |first| {
        let mut counts = Vec::new();
        for_each_with_first(n, first, |w| add_at(&mut counts, p.count_in_word(w), 1));
        counts
    });
    let mut total = Vec::new();
    for part in parts {
        for (k, c) in part.into_iter().enumerate() {
            add_at(&mut total, k, c);
        }
    }
    to_big(total)
}

/// Exact distribution table for rows `0..=n_max`.
pub fn brute_distribution(p: &MeshPattern, n_max: usize) -> Result<DistributionTable> {
    brute_distribution_with(p, n_max, &OracleConfig::default())
}

pub fn brute_distribution_with(
    p: &MeshPattern,
    n_max: usize,
    cfg: &OracleConfig,
) -> Result<DistributionTable> {
    cfg.check(n_max)?;
    let rows = (0..=n_max).map(|n| distribution_row(p, n, cfg)).collect();
    Ok(DistributionTable::new(p.to_string(), rows))
}

/// Every `n`-permutation avoiding `p`, in lexicographic order.
pub fn avoiders_lex(p: &MeshPattern, n: usize) -> Result<Vec<Permutation>> {
    avoiders_lex_with(p, n, &OracleConfig::default())
}

pub fn avoiders_lex_with(
    p: &MeshPattern,
    n: usize,
    cfg: &OracleConfig,
) -> Result<Vec<Permutation>> {
    cfg.check(n)?;
    if n == 0 {
        return Ok(if p.count_in_word(&[]) == 0 {
            vec![Permutation::empty()]
        } else {
            Vec::new()
        });
    }
    let parts = cfg.run_shards(n, |first| {
        let mut out = Vec::new();
        for_each_with_first(n, first, |w| {
            if p.count_in_word(w) == 0 {
                out.push(Permutation::from_word_unchecked(w.to_vec()));
            }
        });
        out
    });
    Ok(parts.into_iter().flatten().collect())
}

/// Like [`avoiders_lex`], reading and writing a plain-text cache in `dir` when given.
pub fn avoiders_lex_cached(
    p: &MeshPattern,
    n: usize,
    dir: Option<&Path>,
) -> Result<Vec<Permutation>> {
    let Some(dir) = dir else {
        return avoiders_lex(p, n);
    };
    let path = cache_path(dir, p, n);
    if let Ok(text) = fs::read_to_string(&path) {
        let parsed: Result<Vec<Permutation>> = text.lines().map(str::parse).collect();
        if let Ok(list) = parsed {
            if list.iter().all(|q| q.len() == n) {
                return Ok(list);
            }
        }
    }
    let list = avoiders_lex(p, n)?;
    // A failed cache write is not an error; the list is still correct.
    if fs::create_dir_all(dir).is_ok() {
        let body: String = list.iter().map(|q| format!("{q}\n")).collect();
        let _ = fs::write(&path, body);
    }
    Ok(list)
}

fn cache_path(dir: &Path, p: &MeshPattern, n: usize) -> PathBuf {
    let name: String = p
        .to_string()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    dir.join(format!("avoiders-{name}-n{n}.txt"))
}

/// Joint distribution of occurrences and descents for rows `0..=n_max`.
pub fn brute_joint(p: &MeshPattern, n_max: usize) -> Result<JointTable> {
    brute_joint_with(p, n_max, &OracleConfig::default())
}

pub fn brute_joint_with(p: &MeshPattern, n_max: usize, cfg: &OracleConfig) -> Result<JointTable> {
    cfg.check(n_max)?;
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut m: Vec<Vec<u64>> = Vec::new();
        let put = |m: &mut Vec<Vec<u64>>, k: usize, d: usize, c: u64| {
            if m.len() <= k {
                m.resize(k + 1, Vec::new());
            }
            add_at(&mut m[k], d, c);
        };
        if n == 0 {
            put(&mut m, p.count_in_word(&[]), 0, 1);
        } else {
            let parts = cfg.run_shards(n, |first| {
                let mut local: Vec<Vec<u64>> = Vec::new();
                for_each_with_first(n, first, |w| {
                    let d = w.windows(2).filter(|x| x[0] > x[1]).count();
                    let k = p.count_in_word(w);
                    if local.len() <= k {
                        local.resize(k + 1, Vec::new());
                    }
                    add_at(&mut local[k], d, 1);
                });
                local
            });
            for part in parts {
                for (k, r) in part.into_iter().enumerate() {
                    for (d, c) in r.into_iter().enumerate() {
                        put(&mut m, k, d, c);
                    }
                }
            }
        }
        rows.push(m.into_iter().map(to_big).collect());
    }
    Ok(JointTable {
        pattern: p.to_string(),
        rows,
    })
}
