//! Integer parameter sweeps over `(m, A)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::classify::{classify, GroupLabel};
use crate::error::Result;
use crate::exact::{int, rat};
use crate::murphy::Params;

/// `m_min <= m <= m_max` and `c_min <= A + (m+2)/2 <= c_max`, `A` integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanRange {
    pub m_min: i64,
    pub m_max: i64,
    pub c_min: i64,
    pub c_max: i64,
}

impl ScanRange {
    pub fn symmetric(m: i64, c: i64) -> ScanRange {
        ScanRange { m_min: -m, m_max: m, c_min: -c, c_max: c }
    }

    /// All integer pairs in the range, `m = +-2` included.
    pub fn pairs(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for m in self.m_min..=self.m_max {
            // 2A ranges over [2c_min - m - 2, 2c_max - m - 2]
            let lo = 2 * self.c_min - m - 2;
            let hi = 2 * self.c_max - m - 2;
            let a_lo = lo.div_euclid(2) + i64::from(lo.rem_euclid(2) != 0);
            let a_hi = hi.div_euclid(2);
            for a in a_lo..=a_hi {
                out.push((m, a));
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    pub m: i64,
    pub a: i64,
    pub deg_e: u32,
    pub group: GroupLabel,
    pub real_roots: usize,
    pub notes: Vec<String>,
}

impl ScanRow {
    pub fn special(&self) -> bool {
        self.m == 2 || self.m == -2
    }
}

pub fn scan_row(m: i64, a: i64) -> Result<ScanRow> {
    let c = classify(&Params::ints(m, a))?;
    Ok(ScanRow { m, a, deg_e: c.deg_e, group: c.group, real_roots: c.signature.0, notes: c.notes })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanSummary {
    pub histogram: BTreeMap<u32, usize>,
    /// Rows with `m != +-2`.
    pub counted: usize,
    pub special: usize,
    pub deg8_fraction: Option<f64>,
}

pub fn summarize(rows: &[ScanRow]) -> ScanSummary {
    let mut histogram = BTreeMap::new();
    let mut counted = 0;
    let mut special = 0;
    for r in rows {
        if r.special() {
            special += 1;
            continue;
        }
        counted += 1;
        *histogram.entry(r.deg_e).or_insert(0) += 1;
    }
    let deg8 = histogram.get(&8).copied().unwrap_or(0);
    let deg8_fraction = (counted > 0).then(|| deg8 as f64 / counted as f64);
    ScanSummary { histogram, counted, special, deg8_fraction }
}

/// Rows with an Abelian label and a non-real splitting field.
pub fn abelian_nonreal(rows: &[ScanRow]) -> Vec<(i64, i64)> {
    rows.iter().filter(|r| !r.special() && r.group.is_abelian() && r.real_roots < 8).map(|r| (r.m, r.a)).collect()
}

/// The list of Abelian non-real pairs stated in the paper.
pub const ABELIAN_NONREAL: [(i64, i64); 9] =
    [(3, -3), (3, -2), (4, -3), (1, -4), (1, 1), (7, -4), (7, -5), (7, 1), (7, -10)];

pub fn scan(range: &ScanRange) -> Result<Vec<ScanRow>> {
    range.pairs().into_iter().map(|(m, a)| scan_row(m, a)).collect()
}

/// Checks the centering used by [`ScanRange`].
pub fn center(m: i64, a: i64) -> crate::exact::Rational {
    int(a) + rat(m + 2, 2)
}
