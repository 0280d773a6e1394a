//! Catalogued length-2 mesh patterns, numbered as in the standard classification table,
//! plus the length-1 strong-fixed-point pattern.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::MeshPattern;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The distribution has an exact formula.
    ProvedDistribution,
    /// The distribution is only conjectured.
    Conjectured,
    /// Only an equidistribution with another pattern is known or conjectured.
    EquidistributionOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub nr: u32,
    pub pattern: MeshPattern,
    pub status: Status,
}

/// `(nr, shaded boxes as (column, row), status)`; every entry has `tau = 12`.
type Row = (u32, &'static [(usize, usize)], Status);

const TABLE: &[Row] = {
    use Status::*;
    &[
        (1, &[], ProvedDistribution),
        (3, &[(0, 0), (0, 1), (1, 2)], Conjectured),
        (5, &[(0, 0), (0, 1), (0, 2)], ProvedDistribution),
        (8, &[(0, 0), (0, 1), (1, 0), (1, 1)], ProvedDistribution),
        (9, &[(0, 1), (1, 1), (1, 2), (2, 1)], ProvedDistribution),
        (
            10,
            &[(0, 0), (0, 1), (0, 2), (2, 0), (2, 1), (2, 2)],
            ProvedDistribution,
        ),
        (
            11,
            &[
                (0, 0),
                (0, 1),
                (0, 2),
                (1, 0),
                (1, 1),
                (1, 2),
                (2, 0),
                (2, 1),
                (2, 2),
            ],
            ProvedDistribution,
        ),
        (
            12,
            &[(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)],
            ProvedDistribution,
        ),
        (
            13,
            &[
                (0, 0),
                (0, 1),
                (0, 2),
                (1, 0),
                (1, 2),
                (2, 0),
                (2, 1),
                (2, 2),
            ],
            ProvedDistribution,
        ),
        (
            14,
            &[(0, 1), (1, 1), (1, 2), (1, 0), (2, 1)],
            ProvedDistribution,
        ),
        (
            15,
            &[(0, 1), (0, 2), (1, 0), (1, 1), (1, 2)],
            ProvedDistribution,
        ),
        (16, &[(0, 1), (2, 0), (1, 0), (0, 2)], ProvedDistribution),
        (
            17,
            &[(0, 1), (1, 2), (0, 0), (2, 0), (1, 0), (0, 2), (2, 1)],
            ProvedDistribution,
        ),
        (
            18,
            &[(0, 0), (0, 1), (0, 2), (1, 2), (2, 0), (2, 2)],
            ProvedDistribution,
        ),
        (
            19,
            &[(0, 1), (0, 2), (1, 1), (1, 2), (2, 0), (2, 2)],
            ProvedDistribution,
        ),
        (
            20,
            &[(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 0), (2, 1)],
            ProvedDistribution,
        ),
        (
            21,
            &[(0, 1), (1, 2), (0, 0), (2, 0), (2, 2)],
            ProvedDistribution,
        ),
        (
            22,
            &[(0, 1), (1, 2), (0, 0), (2, 0), (2, 2), (1, 1)],
            ProvedDistribution,
        ),
        (
            23,
            &[(0, 0), (0, 2), (1, 0), (1, 1), (1, 2)],
            EquidistributionOnly,
        ),
        (
            24,
            &[(0, 0), (0, 1), (1, 0), (1, 1), (1, 2)],
            EquidistributionOnly,
        ),
        (
            27,
            &[(0, 1), (2, 0), (2, 2), (1, 0), (1, 1), (0, 2)],
            ProvedDistribution,
        ),
        (
            28,
            &[(0, 1), (1, 2), (0, 0), (2, 2), (1, 0), (2, 1)],
            ProvedDistribution,
        ),
        (
            30,
            &[(0, 1), (1, 2), (2, 0), (1, 0), (1, 1), (2, 1), (0, 2)],
            ProvedDistribution,
        ),
        (
            33,
            &[(0, 1), (1, 2), (2, 0), (1, 0), (0, 2), (2, 1)],
            ProvedDistribution,
        ),
        (
            34,
            &[(0, 1), (1, 2), (0, 0), (2, 2), (1, 0), (1, 1), (2, 1)],
            ProvedDistribution,
        ),
        (
            36,
            &[(0, 1), (1, 2), (0, 0), (1, 0), (1, 1), (2, 1)],
            ProvedDistribution,
        ),
        (
            45,
            &[(0, 1), (1, 2), (1, 0), (1, 1), (2, 1), (0, 2)],
            ProvedDistribution,
        ),
        (
            48,
            &[(0, 1), (1, 2), (0, 0), (2, 1), (2, 2)],
            EquidistributionOnly,
        ),
        (
            49,
            &[(0, 1), (1, 2), (0, 0), (1, 1), (2, 0)],
            EquidistributionOnly,
        ),
        (
            50,
            &[(0, 1), (1, 2), (0, 0), (1, 1), (2, 2)],
            EquidistributionOnly,
        ),
        (53, &[(0, 1), (1, 2), (0, 0), (2, 1)], EquidistributionOnly),
        (54, &[(0, 1), (0, 0), (1, 1), (2, 2)], EquidistributionOnly),
        (
            55,
            &[(0, 1), (1, 2), (0, 0), (2, 0), (1, 1), (2, 1)],
            ProvedDistribution,
        ),
        (
            56,
            &[(0, 1), (1, 2), (0, 0), (2, 2), (1, 1), (2, 1)],
            ProvedDistribution,
        ),
        (57, &[(0, 1), (1, 2), (1, 1), (2, 0)], EquidistributionOnly),
        (58, &[(0, 1), (1, 0), (1, 1), (2, 2)], EquidistributionOnly),
        (61, &[(0, 1), (1, 2), (0, 0), (2, 0)], EquidistributionOnly),
        (62, &[(0, 1), (1, 0), (0, 0), (2, 2)], EquidistributionOnly),
        (
            63,
            &[(0, 1), (1, 2), (0, 0), (2, 1), (2, 0)],
            ProvedDistribution,
        ),
        (
            64,
            &[(0, 1), (1, 2), (2, 0), (0, 2), (1, 1)],
            ProvedDistribution,
        ),
        (
            65,
            &[(0, 1), (1, 0), (0, 0), (1, 1), (2, 2)],
            ProvedDistribution,
        ),
    ]
};

fn entry(row: &(u32, &[(usize, usize)], Status)) -> CatalogEntry {
    let (nr, boxes, status) = *row;
    CatalogEntry {
        nr,
        pattern: MeshPattern::new(Permutation::identity(2), boxes.iter().copied())
            .expect("catalog shadings are in range"),
        status,
    }
}

/// All catalogued patterns in increasing `nr` order.
pub fn catalog() -> Vec<CatalogEntry> {
    TABLE.iter().map(entry).collect()
}

pub fn catalog_numbers() -> Vec<u32> {
    TABLE.iter().map(|r| r.0).collect()
}

pub fn lookup(nr: u32) -> Result<CatalogEntry> {
    TABLE
        .iter()
        .find(|r| r.0 == nr)
        .map(entry)
        .ok_or_else(|| Error::InvalidInput(format!("no catalogued pattern with nr={nr}")))
}

pub fn pattern(nr: u32) -> Result<MeshPattern> {
    lookup(nr).map(|e| e.pattern)
}

/// `tau = 1` with boxes (0,1) and (1,0) shaded: all smaller letters to the left, all larger to the right.
pub fn strong_fixed_point() -> MeshPattern {
    MeshPattern::new(Permutation::identity(1), [(0, 1), (1, 0)]).expect("valid shading")
}

/// Resolves a selector of the form `nr=<int>`, `sfp`, or a pattern literal.
pub fn resolve(selector: &str) -> Result<MeshPattern> {
    let s = selector.trim();
    if let Some(num) = s.strip_prefix("nr=") {
        let nr = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad catalog number `{num}`")))?;
        return pattern(nr);
    }
    if s == "sfp" {
        return Ok(strong_fixed_point());
    }
    s.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups_match_diagrams() {
        assert_eq!(
            pattern(16).unwrap().to_string(),
            "tau=12;R=(0,1)(0,2)(1,0)(2,0)"
        );
        assert_eq!(
            pattern(64).unwrap().to_string(),
            "tau=12;R=(0,1)(0,2)(1,1)(1,2)(2,0)"
        );
        assert_eq!(pattern(11).unwrap().shading().len(), 9);
        assert_eq!(pattern(1).unwrap().to_string(), "tau=12;R=");
        assert!(lookup(2).is_err());
    }

    #[test]
    fn numbers_are_increasing_and_unique() {
        let nrs = catalog_numbers();
        assert!(nrs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(nrs.len(), 41);
    }

    #[test]
    fn resolves_selectors() {
        assert_eq!(resolve("nr=16").unwrap(), pattern(16).unwrap());
        assert_eq!(resolve("sfp").unwrap(), strong_fixed_point());
        assert_eq!(resolve("tau=12;R=").unwrap(), pattern(1).unwrap());
        assert!(resolve("nr=x").is_err());
    }
}
