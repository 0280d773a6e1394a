//! Equidistribution of pattern groups, compared on full distribution rows.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::error::{Error, Result};
use crate::oracle::{brute_distribution_with, DistributionTable, OracleConfig};

/// Groups whose equidistribution is a theorem.
pub const PROVED_GROUPS: [&[u32]; 4] = [&[8, 9], &[14, 15], &[48, 49], &[63, 64, 65]];
/// Groups whose equidistribution is only conjectured.
pub const CONJECTURED_GROUPS: [&[u32]; 5] =
    [&[23, 24], &[48, 49, 50], &[53, 54], &[57, 58], &[61, 62]];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupStatus {
    Proved,
    Conjectured,
    /// Not a listed group.
    Unclaimed,
}

/// First disagreement between the first group member and another one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divergence {
    pub k: usize,
    pub nr_a: u32,
    #[serde(with = "crate::json::scalar")]
    pub count_a: BigInt,
    pub nr_b: u32,
    #[serde(with = "crate::json::scalar")]
    pub count_b: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowVerdict {
    pub n: usize,
    /// `None` when every member has the same row `n`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub divergence: Option<Divergence>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquidistReport {
    pub group: Vec<u32>,
    pub status: GroupStatus,
    pub rows: Vec<RowVerdict>,
}

impl EquidistReport {
    pub fn is_equal(&self) -> bool {
        self.rows.iter().all(|r| r.divergence.is_none())
    }

    /// Smallest `n` with a divergence.
    pub fn first_divergence(&self) -> Option<(usize, &Divergence)> {
        self.rows
            .iter()
            .find_map(|r| r.divergence.as_ref().map(|d| (r.n, d)))
    }

    /// A proved group that is not equidistributed.
    pub fn violates_proof(&self) -> bool {
        self.status == GroupStatus::Proved && !self.is_equal()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn label(&self) -> String {
        let nrs: Vec<String> = self.group.iter().map(ToString::to_string).collect();
        format!("{{{}}}", nrs.join(","))
    }

    pub fn n_max(&self) -> usize {
        self.rows.last().map_or(0, |r| r.n)
    }
}

pub fn status_of(nrs: &[u32]) -> GroupStatus {
    let mut sorted = nrs.to_vec();
    sorted.sort_unstable();
    if PROVED_GROUPS.contains(&sorted.as_slice()) {
        GroupStatus::Proved
    } else if CONJECTURED_GROUPS.contains(&sorted.as_slice()) {
        GroupStatus::Conjectured
    } else {
        GroupStatus::Unclaimed
    }
}

/// Compares rows `0..=n_max` of every member against the first member.
pub fn compare_tables(nrs: &[u32], tables: &[DistributionTable], n_max: usize) -> Vec<RowVerdict> {
    (0..=n_max)
        .map(|n| {
            let divergence = tables.iter().zip(nrs).skip(1).find_map(|(t, &nr)| {
                let only_n = |t: &DistributionTable| {
                    DistributionTable::new("", vec![t.row(n).unwrap_or(&[]).to_vec()])
                };
                only_n(&tables[0])
                    .first_divergence(&only_n(t))
                    .map(|(_, k, a, b)| Divergence {
                        k,
                        nr_a: nrs[0],
                        count_a: a,
                        nr_b: nr,
                        count_b: b,
                    })
            });
            RowVerdict { n, divergence }
        })
        .collect()
}

pub fn check_group(nrs: &[u32], n_max: usize) -> Result<EquidistReport> {
    check_group_with(nrs, n_max, &OracleConfig::default())
}

pub fn check_group_with(nrs: &[u32], n_max: usize, cfg: &OracleConfig) -> Result<EquidistReport> {
    if nrs.len() < 2 {
        return Err(Error::InvalidInput(
            "a group needs at least two patterns".into(),
        ));
    }
    let tables = nrs
        .iter()
        .map(|&nr| brute_distribution_with(&catalog::pattern(nr)?, n_max, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(EquidistReport {
        group: nrs.to_vec(),
        status: status_of(nrs),
        rows: compare_tables(nrs, &tables, n_max),
    })
}

/// Every listed group, proved groups first; groups run in parallel, order is fixed.
pub fn check_all(n_max: usize, cfg: &OracleConfig) -> Result<Vec<EquidistReport>> {
    let groups: Vec<&[u32]> = PROVED_GROUPS
        .iter()
        .chain(CONJECTURED_GROUPS.iter())
        .copied()
        .collect();
    let inner = OracleConfig { shards: 1, ..*cfg };
    let run = || {
        groups
            .par_iter()
            .map(|g| check_group_with(g, n_max, &inner))
            .collect::<Result<Vec<_>>>()
    };
    if cfg.shards <= 1 {
        return groups
            .iter()
            .map(|g| check_group_with(g, n_max, &inner))
            .collect();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.shards)
        .build()
        .expect("thread pool")
        .install(run)
}

/// One line per group: members, claimed status, verdict.
pub fn summary_table(reports: &[EquidistReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<14} {:<12} {:>5}  verdict",
        "group", "status", "n_max"
    );
    for r in reports {
        let status = match r.status {
            GroupStatus::Proved => "proved",
            GroupStatus::Conjectured => "conjectured",
            GroupStatus::Unclaimed => "unclaimed",
        };
        let verdict = match r.first_divergence() {
            None => "equal".to_string(),
            Some((n, d)) => format!(
                "diverges at n={n} k={}: nr={} has {}, nr={} has {}",
                d.k, d.nr_a, d.count_a, d.nr_b, d.count_b
            ),
        };
        let _ = writeln!(
            out,
            "{:<14} {:<12} {:>5}  {verdict}",
            r.label(),
            status,
            r.n_max()
        );
    }
    out
}
