//! Block structure of permutations containing Nr. 48 or Nr. 49.
//!
//! Occurrences of either pattern are pairwise element-disjoint. Each
//! occurrence `(x_i, y_i)` owns a band of non-occurrence elements split into
//! `X1`, `X2`, `X3`; the elements outside every band form `A`.
//!
//! Nr. 48, by position: `A x_1 [X1 X3]_1 y_1 [X2]_1 x_2 [X1 X3]_2 y_2 [X2]_2 ...`
//! with band `i` entirely above band `i + 1`, `A` above everything, and
//! `X1 ∪ X2 < x_i < X3 < y_i` inside band `i`.
//!
//! Nr. 49, by position: `[X2]_k x_k ... [X2]_1 x_1 A y_1 [X13]_1 y_2 [X13]_2 ...`
//! with `A` below everything, band `i` below band `i + 1`, and
//! `x_i < X3 < y_i < X1 ∪ X2` inside band `i`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pattern::MeshPattern;
use crate::perm::Permutation;

/// Which side of the bijection a decomposition belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// Nr. 48.
    From,
    /// Nr. 49.
    To,
}

impl Side {
    pub fn nr(self) -> u32 {
        match self {
            Side::From => 48,
            Side::To => 49,
        }
    }

    pub fn pattern(self) -> MeshPattern {
        crate::catalog::pattern(self.nr()).expect("catalogued")
    }
}

/// Elements of one band, as host values in host position order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BandBlocks {
    pub x1: Vec<u32>,
    pub x2: Vec<u32>,
    pub x3: Vec<u32>,
}

/// A band with host values replaced by their ranks `0..m` inside the band,
/// as `(rank, label)` in host position order; labels are `1`, `2`, `3`.
pub type Band = Vec<(u8, u8)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub side: Side,
    /// `(x_i, y_i)` as host values; `i = 1` first.
    pub occurrences: Vec<(u32, u32)>,
    /// Values of `A` in position order.
    pub a: Vec<u32>,
    pub blocks: Vec<BandBlocks>,
    /// Each band in reduced form.
    pub bands: Vec<Band>,
}

fn band_from(values_labels: &[(u32, u8)]) -> Band {
    let mut sorted: Vec<u32> = values_labels.iter().map(|p| p.0).collect();
    sorted.sort_unstable();
    values_labels
        .iter()
        .map(|&(v, l)| (sorted.binary_search(&v).expect("present") as u8, l))
        .collect()
}

fn blocks_from(values_labels: &[(u32, u8)]) -> BandBlocks {
    let pick = |lab| {
        values_labels
            .iter()
            .filter(|p| p.1 == lab)
            .map(|p| p.0)
            .collect()
    };
    BandBlocks {
        x1: pick(1),
        x2: pick(2),
        x3: pick(3),
    }
}

fn malformed(side: Side, pi: &Permutation) -> Error {
    Error::InvalidInput(format!(
        "occurrences of Nr. {} in {pi} do not have the expected block structure",
        side.nr()
    ))
}

/// Splits a permutation containing Nr. 48 (`Side::From`) or Nr. 49 (`Side::To`) into blocks.
pub fn decompose(side: Side, pi: &Permutation) -> Result<BlockDecomposition> {
    let occ = side.pattern().find_occurrences(pi);
    if occ.is_empty() {
        return Err(Error::InvalidInput(format!(
            "{pi} avoids Nr. {}; avoiders are mapped by the lexicographic bijection",
            side.nr()
        )));
    }
    let w = pi.as_slice();
    let n = w.len();
    match side {
        Side::From => {
            // occurrences come in position order: x_1 < y_1 < x_2 < y_2 < ...
            for pair in occ.windows(2) {
                if pair[0][1] >= pair[1][0] || w[pair[0][0]] <= w[pair[1][1]] {
                    return Err(malformed(side, pi));
                }
            }
            let a = w[..occ[0][0]].to_vec();
            let mut bands = Vec::new();
            let mut blocks = Vec::new();
            for (t, o) in occ.iter().enumerate() {
                let (xi, yi) = (o[0], o[1]);
                let end = occ.get(t + 1).map_or(n, |nx| nx[0]);
                let xv = w[xi];
                let mut vl: Vec<(u32, u8)> = (xi + 1..yi)
                    .map(|m| (w[m], if w[m] < xv { 1 } else { 3 }))
                    .collect();
                vl.extend((yi + 1..end).map(|m| (w[m], 2)));
                if vl.iter().any(|&(v, l)| l == 2 && v > xv) {
                    return Err(malformed(side, pi));
                }
                bands.push(band_from(&vl));
                blocks.push(blocks_from(&vl));
            }
            Ok(BlockDecomposition {
                side,
                occurrences: occ.iter().map(|o| (w[o[0]], w[o[1]])).collect(),
                a,
                blocks,
                bands,
            })
        }
        Side::To => {
            // band order follows the values: x_1 < y_1 < x_2 < y_2 < ...
            let mut occ = occ;
            occ.sort_by_key(|o| w[o[0]]);
            for pair in occ.windows(2) {
                let ok = pair[1][0] < pair[0][0]
                    && pair[0][1] < pair[1][1]
                    && w[pair[0][1]] < w[pair[1][0]];
                if !ok {
                    return Err(malformed(side, pi));
                }
            }
            let a = w[occ[0][0] + 1..occ[0][1]].to_vec();
            let mut bands = Vec::new();
            let mut blocks = Vec::new();
            for (t, o) in occ.iter().enumerate() {
                let (xi, yi) = (o[0], o[1]);
                let x2_start = occ.get(t + 1).map_or(0, |nx| nx[0] + 1);
                let x13_end = occ.get(t + 1).map_or(n, |nx| nx[1]);
                let yv = w[yi];
                let mut vl: Vec<(u32, u8)> = (x2_start..xi).map(|m| (w[m], 2)).collect();
                vl.extend((yi + 1..x13_end).map(|m| (w[m], if w[m] < yv { 3 } else { 1 })));
                if vl.iter().any(|&(v, l)| l == 2 && v < yv) {
                    return Err(malformed(side, pi));
                }
                bands.push(band_from(&vl));
                blocks.push(blocks_from(&vl));
            }
            Ok(BlockDecomposition {
                side,
                occurrences: occ.iter().map(|o| (w[o[0]], w[o[1]])).collect(),
                a,
                blocks,
                bands,
            })
        }
    }
}

/// Rebuilds a Nr. 48 host from the reduced `A` and reduced bands.
pub fn assemble_from(a: &[u32], bands: &[Band]) -> Permutation {
    let total: usize = a.len() + bands.iter().map(|b| b.len() + 2).sum::<usize>();
    let mut word = Vec::with_capacity(total);
    // band i occupies the values just below band i - 1; A sits on top
    let mut top = total as u32 - a.len() as u32;
    word.extend(a.iter().map(|&v| v + top));
    for band in bands {
        let m = band.len() as u32;
        let d = band.iter().filter(|p| p.1 != 3).count() as u32;
        let base = top - (m + 2);
        let val = |r: u8| {
            let r = r as u32;
            if r < d {
                base + 1 + r
            } else {
                base + 2 + r
            }
        };
        word.push(base + d + 1);
        word.extend(band.iter().filter(|p| p.1 != 2).map(|p| val(p.0)));
        word.push(base + m + 2);
        word.extend(band.iter().filter(|p| p.1 == 2).map(|p| val(p.0)));
        top = base;
    }
    Permutation::from_word_unchecked(word)
}

/// Rebuilds a Nr. 49 host from the reduced `A'` and reduced bands (band `1` innermost).
pub fn assemble_to(a: &[u32], bands: &[Band]) -> Permutation {
    let k = bands.len();
    let mut next = a.len() as u32;
    let mut xs = Vec::with_capacity(k);
    let mut ys = Vec::with_capacity(k);
    let mut valued: Vec<Vec<(u32, u8)>> = Vec::with_capacity(k);
    for band in bands {
        // x' < X'3 < y' < X'1 ∪ X'2
        let d = band.iter().filter(|p| p.1 == 3).count() as u32;
        let x = next + 1;
        let y = x + d + 1;
        xs.push(x);
        ys.push(y);
        valued.push(
            band.iter()
                .map(|&(r, l)| {
                    let r = r as u32;
                    (if r < d { x + 1 + r } else { y + 1 + (r - d) }, l)
                })
                .collect(),
        );
        next = y + band.len() as u32 - d;
    }
    let mut word = Vec::with_capacity(next as usize);
    for i in (0..k).rev() {
        word.extend(valued[i].iter().filter(|p| p.1 == 2).map(|p| p.0));
        word.push(xs[i]);
    }
    word.extend(a.iter().copied());
    for i in 0..k {
        word.push(ys[i]);
        word.extend(valued[i].iter().filter(|p| p.1 != 2).map(|p| p.0));
    }
    Permutation::from_word_unchecked(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<u32>) -> Vec<u32> {
        v.sort_unstable();
        v
    }

    #[test]
    fn worked_example_blocks() {
        let pi: Permutation = "(15)(17)(16)9(10)6(12)8(13)(11)(14)745321".parse().unwrap();
        let d = decompose(Side::From, &pi).unwrap();
        assert_eq!(d.occurrences, vec![(9, 14), (4, 5)]);
        assert_eq!(d.a, vec![15, 17, 16]);
        assert_eq!(sorted(d.blocks[0].x1.clone()), vec![6, 8]);
        assert_eq!(d.blocks[0].x2, vec![7]);
        assert_eq!(sorted(d.blocks[0].x3.clone()), vec![10, 11, 12, 13]);
        assert!(d.blocks[1].x1.is_empty() && d.blocks[1].x3.is_empty());
        assert_eq!(sorted(d.blocks[1].x2.clone()), vec![1, 2, 3]);
        let a = crate::perm::reduce(&d.a).unwrap();
        assert_eq!(assemble_from(a.as_slice(), &d.bands), pi);
    }

    #[test]
    fn single_occurrence_and_avoiders() {
        let pi: Permutation = "12".parse().unwrap();
        let d = decompose(Side::From, &pi).unwrap();
        assert_eq!(d.occurrences, vec![(1, 2)]);
        assert!(d.a.is_empty() && d.bands[0].is_empty());
        assert!(decompose(Side::From, &"21".parse().unwrap()).is_err());
    }

    #[test]
    fn assembly_round_trips() {
        for n in 2..=7 {
            for pi in crate::perm::all_permutations(n) {
                for side in [Side::From, Side::To] {
                    let Ok(d) = decompose(side, &pi) else {
                        continue;
                    };
                    let a = crate::perm::reduce(&d.a).unwrap();
                    let back = match side {
                        Side::From => assemble_from(a.as_slice(), &d.bands),
                        Side::To => assemble_to(a.as_slice(), &d.bands),
                    };
                    assert_eq!(back, pi, "{side:?}");
                }
            }
        }
    }
}
