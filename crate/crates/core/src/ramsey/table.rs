//! Known small Ramsey numbers `R(m, k)` for `3 <= m <= k <= 10`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KnownValue {
    Exact { value: u32 },
    Range { lo: u32, hi: u32 },
}

impl KnownValue {
    pub fn lo(&self) -> u32 {
        match *self {
            KnownValue::Exact { value } => value,
            KnownValue::Range { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> u32 {
        match *self {
            KnownValue::Exact { value } => value,
            KnownValue::Range { hi, .. } => hi,
        }
    }
}

impl fmt::Display for KnownValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnownValue::Exact { value } => write!(f, "{value}"),
            KnownValue::Range { lo, hi } => write!(f, "[{lo},{hi}]"),
        }
    }
}

const fn e(value: u32) -> KnownValue {
    KnownValue::Exact { value }
}

const fn r(lo: u32, hi: u32) -> KnownValue {
    KnownValue::Range { lo, hi }
}

pub const TABLE_MIN: usize = 3;
pub const TABLE_MAX: usize = 10;

/// Row `m` holds columns `k = m..=10`.
const ROWS: [&[KnownValue]; 8] = [
    &[e(6), e(9), e(14), e(18), e(23), e(28), e(36), r(40, 43)],
    &[
        e(18),
        e(25),
        r(35, 41),
        r(49, 61),
        r(56, 84),
        r(73, 115),
        r(92, 149),
    ],
    &[
        r(43, 49),
        r(58, 87),
        r(80, 143),
        r(101, 216),
        r(125, 316),
        r(143, 442),
    ],
    &[
        r(102, 165),
        r(113, 298),
        r(127, 495),
        r(169, 780),
        r(179, 1171),
    ],
    &[r(205, 540), r(216, 1031), r(233, 1713), r(232, 2826)],
    &[r(282, 1870), r(317, 3583), r(377, 6090)],
    &[r(565, 6588), r(580, 12677)],
    &[r(798, 23556)],
];

/// Table lookup, symmetric in `(m, k)`.
pub fn known_value(m: usize, k: usize) -> Result<KnownValue> {
    let (lo, hi) = (m.min(k), m.max(k));
    if lo < TABLE_MIN || hi > TABLE_MAX {
        return Err(Error::InvalidParameter(format!(
            "R({m},{k}) is outside the table range {TABLE_MIN}..={TABLE_MAX}"
        )));
    }
    Ok(ROWS[lo - TABLE_MIN][hi - lo])
}

/// Every table entry as `((m, k), value)` with `m <= k`.
pub fn known_values() -> impl Iterator<Item = ((usize, usize), KnownValue)> {
    ROWS.iter().enumerate().flat_map(|(i, row)| {
        let m = i + TABLE_MIN;
        row.iter().enumerate().map(move |(j, &v)| ((m, m + j), v))
    })
}
