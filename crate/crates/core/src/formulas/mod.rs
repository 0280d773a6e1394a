//! Exact distribution formulas, one entry point per result.

mod gf;
mod recurrence;
mod trivial;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

pub use gf::{
    dist_conjecture_nr3, dist_gf, dist_inversions, dist_joint_sfp_des, dist_strong_fixed_points,
    sfp_avoiders_series, GF_NRS,
};
pub use recurrence::{
    dist_recurrence, dist_recurrence_45, nr45_with_helper, Nr45Route, RECURRENCE_NRS,
};
pub use trivial::{dist_trivial, nr21_avoiders_printed, nr21_containing, TRIVIAL_NRS};

use crate::catalog;
use crate::error::{Error, Result};
use crate::oracle::DistributionTable;
use crate::pattern::MeshPattern;
use crate::series::TruncatedSeries;

/// Largest truncation order accepted by the series-based formulas.
pub const MAX_ORDER: usize = 16;

pub(crate) fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::ResourceLimit {
            requested: order,
            ceiling: MAX_ORDER,
        });
    }
    Ok(())
}

pub(crate) fn fact(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// A distribution result, tagged as `T1.1`, `Eq1`, `T2.1`..`T2.10`,
/// `T3.1`..`T3.12`, `T4.1`..`T4.4`, `C6.1` or `J6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum TheoremId {
    /// Strong fixed points.
    T1_1,
    /// Non-inversions (Nr. 1).
    Eq1,
    /// Closed forms, indexing [`TRIVIAL_NRS`].
    T2(u8),
    /// Generating functions, indexing [`GF_NRS`].
    T3(u8),
    /// Recurrences for Nr. 8/9, 14/15, 36, 45.
    T4(u8),
    /// Continued-fraction conjecture for Nr. 3.
    C6_1,
    /// Joint distribution of strong fixed points and descents.
    J6,
}

/// What a result is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Target {
    Nr(u32),
    StrongFixedPoint,
}

impl Target {
    pub fn pattern(self) -> MeshPattern {
        match self {
            Target::Nr(nr) => catalog::pattern(nr).expect("targets are catalogued"),
            Target::StrongFixedPoint => catalog::strong_fixed_point(),
        }
    }

    pub fn label(self) -> String {
        match self {
            Target::Nr(nr) => format!("nr={nr}"),
            Target::StrongFixedPoint => "sfp".to_string(),
        }
    }
}

impl TheoremId {
    /// Every result with an implemented formula, proved results first.
    pub fn all() -> Vec<TheoremId> {
        let mut v = vec![TheoremId::T1_1, TheoremId::Eq1];
        v.extend((1..=10).map(TheoremId::T2));
        v.extend((1..=12).map(TheoremId::T3));
        v.extend((1..=4).map(TheoremId::T4));
        v.push(TheoremId::J6);
        v.push(TheoremId::C6_1);
        v
    }

    /// Results whose distribution table is proved (everything except `C6.1`).
    pub fn proved() -> Vec<TheoremId> {
        TheoremId::all()
            .into_iter()
            .filter(|t| !t.is_conjecture())
            .collect()
    }

    pub fn is_conjecture(self) -> bool {
        self == TheoremId::C6_1
    }

    pub fn targets(self) -> Vec<Target> {
        use Target::*;
        match self {
            TheoremId::T1_1 | TheoremId::J6 => vec![StrongFixedPoint],
            TheoremId::Eq1 => vec![Nr(1)],
            TheoremId::T2(i) => vec![Nr(TRIVIAL_NRS[i as usize - 1])],
            TheoremId::T3(i) => vec![Nr(GF_NRS[i as usize - 1])],
            TheoremId::T4(1) => vec![Nr(8), Nr(9)],
            TheoremId::T4(2) => vec![Nr(14), Nr(15)],
            TheoremId::T4(3) => vec![Nr(36)],
            TheoremId::T4(_) => vec![Nr(45)],
            TheoremId::C6_1 => vec![Nr(3)],
        }
    }

    /// The result covering catalog pattern `nr`, if any.
    pub fn for_nr(nr: u32) -> Option<TheoremId> {
        TheoremId::all()
            .into_iter()
            .find(|t| t.targets().contains(&Target::Nr(nr)))
    }

    /// Generating function to order `order`, for results stated that way.
    pub fn series(self, order: usize) -> Result<Option<TruncatedSeries>> {
        Ok(Some(match self {
            TheoremId::T1_1 => dist_strong_fixed_points(order)?,
            TheoremId::Eq1 => dist_inversions(order)?,
            TheoremId::T3(i) => dist_gf(GF_NRS[i as usize - 1], order)?,
            TheoremId::J6 => dist_joint_sfp_des(order)?,
            TheoremId::C6_1 => dist_conjecture_nr3(order)?,
            _ => return Ok(None),
        }))
    }

    /// Distribution table for rows `0..=n_max` (descents summed out for `J6`).
    pub fn table(self, n_max: usize) -> Result<DistributionTable> {
        let label = self.targets()[0].label();
        let mut table = match self {
            TheoremId::T2(i) => {
                let nr = TRIVIAL_NRS[i as usize - 1];
                let rows = (0..=n_max)
                    .map(|n| dist_trivial(nr, n))
                    .collect::<Result<Vec<_>>>()?;
                DistributionTable::new(label, rows)
            }
            TheoremId::T4(_) => {
                let mut t = dist_recurrence(
                    match self.targets()[0] {
                        Target::Nr(nr) => nr,
                        Target::StrongFixedPoint => unreachable!(),
                    },
                    n_max,
                )?;
                t.pattern = label;
                t
            }
            _ => {
                let s = self.series(n_max)?.expect("series-backed result");
                let s = s.eval_t_one();
                s.check_degree_bound()?;
                DistributionTable::from_series(label, &s, n_max)?
            }
        };
        table.conjectural = self.is_conjecture();
        Ok(table)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremId::T1_1 => f.write_str("T1.1"),
            TheoremId::Eq1 => f.write_str("Eq1"),
            TheoremId::T2(i) => write!(f, "T2.{i}"),
            TheoremId::T3(i) => write!(f, "T3.{i}"),
            TheoremId::T4(i) => write!(f, "T4.{i}"),
            TheoremId::C6_1 => f.write_str("C6.1"),
            TheoremId::J6 => f.write_str("J6"),
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown result tag `{s}`"));
        let s = s.trim();
        match s {
            "T1.1" => return Ok(TheoremId::T1_1),
            "Eq1" | "Eq.1" | "E1" => return Ok(TheoremId::Eq1),
            "C6.1" => return Ok(TheoremId::C6_1),
            "J6" => return Ok(TheoremId::J6),
            _ => {}
        }
        let (sec, idx) = s
            .strip_prefix('T')
            .and_then(|r| r.split_once('.'))
            .ok_or_else(bad)?;
        let idx: u8 = idx.parse().map_err(|_| bad())?;
        let (make, max): (fn(u8) -> TheoremId, u8) = match sec {
            "2" => (TheoremId::T2, 10),
            "3" => (TheoremId::T3, 12),
            "4" => (TheoremId::T4, 4),
            _ => return Err(bad()),
        };
        if idx == 0 || idx > max {
            return Err(bad());
        }
        Ok(make(idx))
    }
}

impl TryFrom<String> for TheoremId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<TheoremId> for String {
    fn from(t: TheoremId) -> String {
        t.to_string()
    }
}
