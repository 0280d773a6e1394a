//! Occurrence-preserving bijection between Nr. 48 and Nr. 49.
//!
//! Avoiders are matched by [`LexBijection`]: the `i`-th lexicographically
//! smallest avoider of one pattern goes to the `i`-th of the other.
//!
//! A permutation with `k >= 1` occurrences splits into `A` and `k` bands
//! (see [`decompose`]). `g` sends `A` to `f(red(A))` and each band through a
//! fixed bijection between valid bands of the same size, then reassembles.
//! A band is valid when the two-point host built from it has exactly one
//! occurrence. Inside the band map, a band is rotated by 180 degrees and its
//! `X2` part is replaced by `f(red(X2))` whenever that produces a valid band
//! not already taken; the remaining bands are paired in lexicographic order.

mod decompose;

pub use decompose::{
    assemble_from, assemble_to, decompose, Band, BandBlocks, BlockDecomposition, Side,
};

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::oracle::{avoiders_lex_with, OracleConfig, HARD_CEILING};
use crate::pattern::MeshPattern;
use crate::perm::{next_lex, reduce, Permutation};

/// Largest band the band map is built for.
pub const MAX_BAND: usize = 8;

/// The lexicographic matching of `S_n(p_from)` with `S_n(p_to)`.
#[derive(Debug, Clone)]
pub struct LexBijection {
    pub n: usize,
    from: Vec<Permutation>,
    to: Vec<Permutation>,
    forward: HashMap<Permutation, usize>,
    backward: HashMap<Permutation, usize>,
}

impl LexBijection {
    pub fn new(n: usize, p_from: &MeshPattern, p_to: &MeshPattern) -> Result<Self> {
        let cfg = OracleConfig {
            ceiling: HARD_CEILING,
            shards: 1,
        };
        Self::from_lists(
            n,
            avoiders_lex_with(p_from, n, &cfg)?,
            avoiders_lex_with(p_to, n, &cfg)?,
        )
    }

    /// Matches two lexicographically sorted avoider lists of length-`n` permutations.
    pub fn from_lists(n: usize, from: Vec<Permutation>, to: Vec<Permutation>) -> Result<Self> {
        if from.len() != to.len() {
            return Err(Error::EquidistributionViolation {
                n,
                from: from.len(),
                to: to.len(),
            });
        }
        let index =
            |v: &[Permutation]| v.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(LexBijection {
            n,
            forward: index(&from),
            backward: index(&to),
            from,
            to,
        })
    }

    pub fn len(&self) -> usize {
        self.from.len()
    }

    pub fn is_empty(&self) -> bool {
        self.from.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Permutation, &Permutation)> {
        self.from.iter().zip(&self.to)
    }

    pub fn apply(&self, pi: &Permutation) -> Option<&Permutation> {
        self.forward.get(pi).map(|&i| &self.to[i])
    }

    pub fn invert(&self, sigma: &Permutation) -> Option<&Permutation> {
        self.backward.get(sigma).map(|&i| &self.from[i])
    }
}

/// Builds the lexicographic avoider matching for any two patterns.
pub fn lex_bijection_f(n: usize, p_from: &MeshPattern, p_to: &MeshPattern) -> Result<LexBijection> {
    LexBijection::new(n, p_from, p_to)
}

fn f_memo(n: usize) -> Result<Arc<LexBijection>> {
    static MEMO: OnceLock<Mutex<HashMap<usize, Arc<LexBijection>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(b) = memo.lock().expect("memo lock").get(&n) {
        return Ok(b.clone());
    }
    let built = Arc::new(LexBijection::new(
        n,
        &Side::From.pattern(),
        &Side::To.pattern(),
    )?);
    Ok(memo
        .lock()
        .expect("memo lock")
        .entry(n)
        .or_insert(built)
        .clone())
}

/// `f`: avoider of Nr. 48 to avoider of Nr. 49.
pub fn map_f(pi: &Permutation) -> Result<Permutation> {
    f_memo(pi.len())?
        .apply(pi)
        .cloned()
        .ok_or_else(|| Error::InvalidInput(format!("{pi} contains Nr. 48")))
}

/// `f^{-1}`: avoider of Nr. 49 to avoider of Nr. 48.
pub fn map_f_inverse(sigma: &Permutation) -> Result<Permutation> {
    f_memo(sigma.len())?
        .invert(sigma)
        .cloned()
        .ok_or_else(|| Error::InvalidInput(format!("{sigma} contains Nr. 49")))
}

struct BandMap {
    forward: HashMap<Band, Band>,
    backward: HashMap<Band, Band>,
    by_rule: usize,
}

/// All `(rank, label)` sequences of size `m` shaped like a Nr. 48 band:
/// labels `1`/`3` first, then `2`; labels `1`, `2` take the ranks below `d`.
fn from_shapes(m: usize) -> Vec<Band> {
    shapes(m, |w, c, d| {
        if w[c..].iter().any(|&r| r as usize >= d) {
            return None;
        }
        Some(
            w.iter()
                .enumerate()
                .map(|(i, &r)| {
                    (
                        r,
                        if i >= c {
                            2
                        } else if (r as usize) < d {
                            1
                        } else {
                            3
                        },
                    )
                })
                .collect(),
        )
    })
}

/// Nr. 49 band shapes: `c` leading `2`s with ranks at least `d`, then `1`/`3`; label `3` below `d`.
fn to_shapes(m: usize) -> Vec<Band> {
    shapes(m, |w, c, d| {
        if w[..c].iter().any(|&r| (r as usize) < d) {
            return None;
        }
        Some(
            w.iter()
                .enumerate()
                .map(|(i, &r)| {
                    (
                        r,
                        if i < c {
                            2
                        } else if (r as usize) < d {
                            3
                        } else {
                            1
                        },
                    )
                })
                .collect(),
        )
    })
}

fn shapes(m: usize, make: impl Fn(&[u8], usize, usize) -> Option<Band>) -> Vec<Band> {
    let mut out = Vec::new();
    let mut w: Vec<u32> = (0..m as u32).collect();
    loop {
        let ranks: Vec<u8> = w.iter().map(|&r| r as u8).collect();
        for c in 0..=m {
            for d in 0..=m {
                if let Some(b) = make(&ranks, c, d) {
                    out.push(b);
                }
            }
        }
        if !next_lex(&mut w) {
            break;
        }
    }
    out.sort();
    out
}

fn band_valid(side: Side, p: &MeshPattern, band: &Band) -> bool {
    let host = match side {
        Side::From => assemble_from(&[], std::slice::from_ref(band)),
        Side::To => assemble_to(&[], std::slice::from_ref(band)),
    };
    p.count_occurrences(&host) == 1
}

/// Rotates a Nr. 48 band by 180 degrees, then replaces its `X2` by `f(red(X2))`.
fn rotate_band(band: &Band) -> Result<Option<Band>> {
    let m = band.len() as u8;
    let rotated: Band = band.iter().rev().map(|&(r, l)| (m - 1 - r, l)).collect();
    let x2: Vec<u8> = band.iter().filter(|p| p.1 == 2).map(|p| p.0).collect();
    let Ok(image) = map_f(&reduce(&x2)?) else {
        return Ok(None);
    };
    let mut slots: Vec<u8> = rotated.iter().filter(|p| p.1 == 2).map(|p| p.0).collect();
    slots.sort_unstable();
    let mut fresh = image.as_slice().iter().map(|&i| slots[i as usize - 1]);
    Ok(Some(
        rotated
            .into_iter()
            .map(|(r, l)| {
                if l == 2 {
                    (fresh.next().expect("same size"), 2)
                } else {
                    (r, l)
                }
            })
            .collect(),
    ))
}

fn build_band_map(m: usize) -> Result<BandMap> {
    let (p1, p2) = (Side::From.pattern(), Side::To.pattern());
    let valid_from: Vec<Band> = from_shapes(m)
        .into_iter()
        .filter(|b| band_valid(Side::From, &p1, b))
        .collect();
    let valid_to: Vec<Band> = to_shapes(m)
        .into_iter()
        .filter(|b| band_valid(Side::To, &p2, b))
        .collect();
    if valid_from.len() != valid_to.len() {
        return Err(Error::EquidistributionViolation {
            n: m,
            from: valid_from.len(),
            to: valid_to.len(),
        });
    }
    let to_set: std::collections::HashSet<&Band> = valid_to.iter().collect();
    let mut forward = HashMap::with_capacity(valid_from.len());
    let mut backward = HashMap::with_capacity(valid_from.len());
    for b in &valid_from {
        if let Some(r) = rotate_band(b)? {
            if to_set.contains(&r) && !backward.contains_key(&r) {
                backward.insert(r.clone(), b.clone());
                forward.insert(b.clone(), r);
            }
        }
    }
    let by_rule = forward.len();
    let rest_to: Vec<&Band> = valid_to
        .iter()
        .filter(|b| !backward.contains_key(*b))
        .collect();
    let rest_from: Vec<&Band> = valid_from
        .iter()
        .filter(|b| !forward.contains_key(*b))
        .collect();
    for (a, b) in rest_from.into_iter().zip(rest_to) {
        forward.insert(a.clone(), b.clone());
        backward.insert(b.clone(), a.clone());
    }
    Ok(BandMap {
        forward,
        backward,
        by_rule,
    })
}

fn band_memo(m: usize) -> Result<Arc<BandMap>> {
    static MEMO: OnceLock<Mutex<HashMap<usize, Arc<BandMap>>>> = OnceLock::new();
    if m > MAX_BAND {
        return Err(Error::ResourceLimit {
            requested: m,
            ceiling: MAX_BAND,
        });
    }
    let memo = MEMO.get_or_init(Default::default);
    if let Some(b) = memo.lock().expect("memo lock").get(&m) {
        return Ok(b.clone());
    }
    let built = Arc::new(build_band_map(m)?);
    Ok(memo
        .lock()
        .expect("memo lock")
        .entry(m)
        .or_insert(built)
        .clone())
}

/// Numbers of valid bands of size `m`, and how many of them the rotation rule maps.
pub fn band_map_stats(m: usize) -> Result<(usize, usize)> {
    let b = band_memo(m)?;
    Ok((b.forward.len(), b.by_rule))
}

fn band_image(band: &Band, inverse: bool) -> Result<Band> {
    let map = band_memo(band.len())?;
    let table = if inverse { &map.backward } else { &map.forward };
    table
        .get(band)
        .cloned()
        .ok_or_else(|| Error::InvalidInput("band does not carry exactly one occurrence".into()))
}

/// `g`: a permutation with `k >= 1` occurrences of Nr. 48 to one with `k` occurrences of Nr. 49.
pub fn map_g(pi: &Permutation) -> Result<Permutation> {
    let d = decompose(Side::From, pi)?;
    let a = map_f(&reduce(&d.a)?)?;
    let bands = d
        .bands
        .iter()
        .map(|b| band_image(b, false))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble_to(a.as_slice(), &bands))
}

/// `g^{-1}`.
pub fn map_g_inverse(sigma: &Permutation) -> Result<Permutation> {
    let d = decompose(Side::To, sigma)?;
    let a = map_f_inverse(&reduce(&d.a)?)?;
    let bands = d
        .bands
        .iter()
        .map(|b| band_image(b, true))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble_from(a.as_slice(), &bands))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lex_map_examples() {
        assert_eq!(map_f(&p("1")).unwrap(), p("1"));
        assert_eq!(map_f(&p("21")).unwrap(), p("21"));
        assert_eq!(map_f(&p("132")).unwrap(), p("231"));
        assert_eq!(map_f(&p("321")).unwrap(), p("321"));
        assert_eq!(map_f_inverse(&p("231")).unwrap(), p("132"));
        assert!(map_f(&p("12")).is_err());
    }

    #[test]
    fn worked_example() {
        let pi = p("(15)(17)(16)9(10)6(12)8(13)(11)(14)745321");
        let sigma = map_g(&pi).unwrap();
        assert_eq!(
            sigma.to_compact_string(),
            "(17)(16)(15)(13)(11)4231975(10)6(12)8(14)"
        );
        assert_eq!(Side::To.pattern().count_occurrences(&sigma), 2);
        assert_eq!(map_g_inverse(&sigma).unwrap(), pi);
    }

    #[test]
    fn smallest_case() {
        assert_eq!(map_g(&p("12")).unwrap(), p("12"));
        assert!(map_g(&p("21")).is_err());
    }
}
