//! Formula tables checked against the oracle, one report line per result and `n`.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::formulas::{Target, TheoremId};
use crate::oracle::{brute_distribution_with, brute_joint_with, DistributionTable, OracleConfig};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LineStatus {
    #[serde(rename = "OK")]
    Ok,
    /// A proved formula disagrees with the oracle.
    #[serde(rename = "MISMATCH")]
    Mismatch,
    /// A conjectured formula disagrees with the oracle.
    #[serde(rename = "CONJECTURE-DIVERGENCE")]
    ConjectureDivergence,
}

/// One `(result, target, n)` comparison; the counterexample fields are set
/// only when the rows differ, at the smallest differing `k` (then `d`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyLine {
    pub theorem: TheoremId,
    pub target: String,
    pub n: usize,
    pub status: LineStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Descent count, for the joint distribution only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_big")]
    pub formula: Option<BigInt>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_big")]
    pub oracle: Option<BigInt>,
}

mod opt_big {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Number;

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(crate::json::to_number).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<Number>::deserialize(d)?
            .map(|n| crate::json::from_number(&n).map_err(serde::de::Error::custom))
            .transpose()
    }
}

impl VerifyLine {
    fn ok(theorem: TheoremId, target: Target, n: usize) -> Self {
        VerifyLine {
            theorem,
            target: target.label(),
            n,
            status: LineStatus::Ok,
            k: None,
            d: None,
            formula: None,
            oracle: None,
        }
    }

    fn counterexample(
        mut self,
        k: usize,
        d: Option<usize>,
        formula: BigInt,
        oracle: BigInt,
    ) -> Self {
        self.status = if self.theorem.is_conjecture() {
            LineStatus::ConjectureDivergence
        } else {
            LineStatus::Mismatch
        };
        self.k = Some(k);
        self.d = d;
        self.formula = Some(formula);
        self.oracle = Some(oracle);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub lines: Vec<VerifyLine>,
}

impl VerifyReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &VerifyLine> {
        self.lines
            .iter()
            .filter(|l| l.status == LineStatus::Mismatch)
    }

    pub fn divergences(&self) -> impl Iterator<Item = &VerifyLine> {
        self.lines
            .iter()
            .filter(|l| l.status == LineStatus::ConjectureDivergence)
    }

    /// `true` iff every proved result matched.
    pub fn proved_ok(&self) -> bool {
        self.mismatches().next().is_none()
    }

    pub fn to_json_lines(&self) -> String {
        self.lines.iter().map(|l| l.to_json() + "\n").collect()
    }
}

fn compare_rows(
    theorem: TheoremId,
    target: Target,
    formula: &DistributionTable,
    oracle: &DistributionTable,
    n_max: usize,
) -> Vec<VerifyLine> {
    (0..=n_max)
        .map(|n| {
            let line = VerifyLine::ok(theorem, target, n);
            let width = formula
                .row(n)
                .map_or(0, <[_]>::len)
                .max(oracle.row(n).map_or(0, <[_]>::len));
            match (0..width).find(|&k| formula.get(n, k) != oracle.get(n, k)) {
                Some(k) => line.counterexample(k, None, formula.get(n, k), oracle.get(n, k)),
                None => line,
            }
        })
        .collect()
}

fn compare_joint(
    theorem: TheoremId,
    target: Target,
    formula: &TruncatedSeries,
    oracle: &TruncatedSeries,
    n_max: usize,
) -> Vec<VerifyLine> {
    (0..=n_max)
        .map(|n| {
            let line = VerifyLine::ok(theorem, target, n);
            let (f, o) = (formula.coeff(n), oracle.coeff(n));
            let kw = f.rows().len().max(o.rows().len());
            let dw = f
                .rows()
                .iter()
                .chain(o.rows())
                .map(Vec::len)
                .max()
                .unwrap_or(0);
            let first = (0..kw)
                .flat_map(|k| (0..dw).map(move |d| (k, d)))
                .find(|&(k, d)| f.coeff(k, d) != o.coeff(k, d));
            match first {
                Some((k, d)) => line.counterexample(k, Some(d), f.coeff(k, d), o.coeff(k, d)),
                None => line,
            }
        })
        .collect()
}

/// Lines for every target of `theorem` and every `n <= n_max`.
pub fn verify_theorem(
    theorem: TheoremId,
    n_max: usize,
    cfg: &OracleConfig,
) -> Result<Vec<VerifyLine>> {
    let mut lines = Vec::new();
    if theorem == TheoremId::J6 {
        let target = Target::StrongFixedPoint;
        let oracle = brute_joint_with(&target.pattern(), n_max, cfg)?.to_series();
        let formula = theorem.series(n_max)?.expect("series-backed result");
        lines.extend(compare_joint(theorem, target, &formula, &oracle, n_max));
        return Ok(lines);
    }
    let formula = theorem.table(n_max)?;
    for target in theorem.targets() {
        let oracle = brute_distribution_with(&target.pattern(), n_max, cfg)?;
        lines.extend(compare_rows(theorem, target, &formula, &oracle, n_max));
    }
    Ok(lines)
}

/// Verifies `theorems` in parallel; lines keep the order of `theorems`.
pub fn verify(theorems: &[TheoremId], n_max: usize, cfg: &OracleConfig) -> Result<VerifyReport> {
    let inner = OracleConfig { shards: 1, ..*cfg };
    let run = |t: &TheoremId| verify_theorem(*t, n_max, &inner);
    let per: Vec<Vec<VerifyLine>> = if cfg.shards <= 1 {
        theorems.iter().map(run).collect::<Result<_>>()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.shards)
            .build()
            .expect("thread pool")
            .install(|| theorems.par_iter().map(run).collect::<Result<_>>())?
    };
    Ok(VerifyReport {
        lines: per.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proved_results_match_small_n() {
        let r = verify(
            &TheoremId::proved(),
            6,
            &OracleConfig::default().with_shards(4),
        )
        .unwrap();
        let bad: Vec<_> = r.mismatches().map(VerifyLine::to_json).collect();
        assert!(bad.is_empty(), "{bad:?}");
        // T4.1 and T4.2 each cover two patterns
        assert_eq!(r.lines.len(), (TheoremId::proved().len() + 2) * 7);
    }

    #[test]
    fn counterexample_is_minimal_and_serialized() {
        let f = DistributionTable::new(
            "x",
            vec![vec![1.into()], vec![1.into()], vec![1.into(), 1.into()]],
        );
        let o = DistributionTable::new("x", vec![vec![1.into()], vec![1.into()], vec![2.into()]]);
        let lines = compare_rows(TheoremId::Eq1, Target::Nr(1), &f, &o, 2);
        assert_eq!(lines[1].status, LineStatus::Ok);
        let bad = &lines[2];
        assert_eq!((bad.status, bad.k), (LineStatus::Mismatch, Some(0)));
        assert_eq!(
            bad.to_json(),
            r#"{"theorem":"Eq1","target":"nr=1","n":2,"status":"MISMATCH","k":0,"formula":1,"oracle":2}"#
        );
        let back: VerifyLine = serde_json::from_str(&bad.to_json()).unwrap();
        assert_eq!(&back, bad);
        let conj = compare_rows(TheoremId::C6_1, Target::Nr(3), &f, &o, 2);
        assert_eq!(conj[2].status, LineStatus::ConjectureDivergence);
    }

    #[test]
    fn ok_line_format() {
        let l = VerifyLine::ok(TheoremId::T3(10), Target::Nr(63), 4);
        assert_eq!(
            l.to_json(),
            r#"{"theorem":"T3.10","target":"nr=63","n":4,"status":"OK"}"#
        );
    }
}
