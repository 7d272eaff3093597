//! Closed-form and recursive bounds on Ramsey numbers, in exact arithmetic.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::table::{known_value, TABLE_MAX, TABLE_MIN};
use super::MulticolorSpec;
use crate::error::{Error, Result};

fn check_sizes(m: usize, k: usize) -> Result<()> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidParameter(format!(
            "clique sizes must be positive, got ({m},{k})"
        )));
    }
    Ok(())
}

/// `R(m,k) <= R(m-1,k) + R(m,k-1)`, one less when both terms are even,
/// seeded with `R(1,k) = 1` and `R(2,k) = k`.
pub fn recurrence_upper_bound(m: usize, k: usize) -> Result<BigUint> {
    check_sizes(m, k)?;
    let mut table = vec![vec![BigUint::zero(); k + 1]; m + 1];
    for i in 1..=m {
        for j in 1..=k {
            table[i][j] = if i == 1 || j == 1 {
                BigUint::one()
            } else if i == 2 {
                BigUint::from(j)
            } else if j == 2 {
                BigUint::from(i)
            } else {
                let (a, b) = (&table[i - 1][j], &table[i][j - 1]);
                let both_even = !a.bit(0) && !b.bit(0);
                let sum = a + b;
                if both_even {
                    sum - 1u32
                } else {
                    sum
                }
            };
        }
    }
    Ok(table[m][k].clone())
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `C(m+k-2, m-1)`.
pub fn erdos_szekeres_bound(m: usize, k: usize) -> Result<BigUint> {
    check_sizes(m, k)?;
    Ok(binomial((m + k - 2) as u64, (m - 1) as u64))
}

/// `2^(k/2)`; the diagonal number `R(k,k)` strictly exceeds it.
pub fn diagonal_lower_bound(k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    Ok((k as f64 / 2.0).exp2())
}

/// For entries `k_i + 1`: `(k_1 + ... + k_c)! / (k_1! ... k_c!)`.
pub fn multicolor_multinomial_bound(spec: &MulticolorSpec) -> BigUint {
    let parts: Vec<u64> = spec.sizes().iter().map(|&s| s as u64 - 1).collect();
    let total: u64 = parts.iter().sum();
    let denominator = parts
        .iter()
        .fold(BigUint::one(), |acc, &p| acc * factorial(p));
    factorial(total) / denominator
}

/// `r! * sum_{j=0..r} 1/j! + 1`, as the integer `sum_j r!/j! + 1`.
pub fn erdos_triangle_multicolor_bound(r: usize) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    // r!/j! for j = r, r-1, ..., 0 is the running product r * (r-1) * ... * (j+1).
    let mut term = BigUint::one();
    let mut sum = BigUint::one();
    for j in (0..r as u64).rev() {
        term *= j + 1;
        sum += &term;
    }
    Ok(sum + 1u32)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    Exact,
    Recurrence,
    ErdosSzekeres,
    Table,
    Witness,
}

/// A bound on `R(m,k)` together with where it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamseyBound {
    pub m: usize,
    pub k: usize,
    pub lower: Option<BigUint>,
    pub upper: Option<BigUint>,
    pub source: BoundSource,
    pub note: String,
}

impl RamseyBound {
    fn new(
        m: usize,
        k: usize,
        lower: Option<BigUint>,
        upper: Option<BigUint>,
        source: BoundSource,
        note: impl Into<String>,
    ) -> Self {
        if let (Some(lo), Some(hi)) = (&lower, &upper) {
            debug_assert!(lo <= hi, "lower bound above upper bound for R({m},{k})");
        }
        RamseyBound {
            m,
            k,
            lower,
            upper,
            source,
            note: note.into(),
        }
    }
}

/// Every bound this crate can state for `R(m,k)`.
pub fn collect_bounds(m: usize, k: usize) -> Result<Vec<RamseyBound>> {
    check_sizes(m, k)?;
    let (lo, hi) = (m.min(k), m.max(k));
    let mut out = Vec::new();
    match lo {
        1 => out.push(RamseyBound::new(
            m,
            k,
            Some(1u32.into()),
            Some(1u32.into()),
            BoundSource::Exact,
            "R(1,k) = 1",
        )),
        2 => out.push(RamseyBound::new(
            m,
            k,
            Some(hi.into()),
            Some(hi.into()),
            BoundSource::Exact,
            "R(2,k) = k",
        )),
        _ => {}
    }
    out.push(RamseyBound::new(
        m,
        k,
        None,
        Some(recurrence_upper_bound(m, k)?),
        BoundSource::Recurrence,
        "R(m-1,k) + R(m,k-1), minus one when both are even",
    ));
    out.push(RamseyBound::new(
        m,
        k,
        None,
        Some(erdos_szekeres_bound(m, k)?),
        BoundSource::ErdosSzekeres,
        "C(m+k-2, m-1)",
    ));
    if lo >= TABLE_MIN && hi <= TABLE_MAX {
        let v = known_value(m, k)?;
        out.push(RamseyBound::new(
            m,
            k,
            Some(v.lo().into()),
            Some(v.hi().into()),
            BoundSource::Table,
            format!("table entry {v}"),
        ));
    }
    if lo == 3 {
        // The Andrásfai graph on 3(hi-1)-1 vertices avoids triangles and
        // independent sets of size hi.
        out.push(RamseyBound::new(
            m,
            k,
            Some((3 * (hi - 1)).into()),
            None,
            BoundSource::Witness,
            format!("Andrásfai graph H_{}", 3 * (hi - 1) - 1),
        ));
    }
    if m == k {
        let diag = diagonal_lower_bound(k)?;
        // R(k,k) > 2^(k/2), so R(k,k) >= floor(2^(k/2)) + 1.
        let lower = diag.floor().to_u64().map(|v| BigUint::from(v + 1));
        out.push(RamseyBound::new(
            m,
            k,
            lower,
            None,
            BoundSource::Witness,
            format!("R(k,k) > 2^(k/2) = {diag}"),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(recurrence_upper_bound(3, 3), Ok(big(6)));
        assert_eq!(recurrence_upper_bound(3, 4), Ok(big(9)));
        assert_eq!(recurrence_upper_bound(2, 7), Ok(big(7)));
        assert_eq!(recurrence_upper_bound(7, 2), Ok(big(7)));
        assert_eq!(recurrence_upper_bound(1, 9), Ok(big(1)));
        assert_eq!(recurrence_upper_bound(4, 4), Ok(big(18)));
        assert!(recurrence_upper_bound(0, 3).is_err());
    }

    #[test]
    fn erdos_szekeres_examples() {
        assert_eq!(erdos_szekeres_bound(3, 3), Ok(big(6)));
        assert_eq!(erdos_szekeres_bound(3, 4), Ok(big(10)));
        assert_eq!(erdos_szekeres_bound(1, 12), Ok(big(1)));
        assert_eq!(erdos_szekeres_bound(10, 10), Ok(big(48620)));
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(diagonal_lower_bound(2), Ok(2.0));
        assert_eq!(diagonal_lower_bound(6), Ok(8.0));
        assert_eq!(diagonal_lower_bound(10), Ok(32.0));
    }

    #[test]
    fn multinomial_examples() {
        let spec = |s: &[usize]| MulticolorSpec::new(s.to_vec()).unwrap();
        assert_eq!(multicolor_multinomial_bound(&spec(&[3, 3])), big(6));
        assert_eq!(multicolor_multinomial_bound(&spec(&[3, 3, 3])), big(90));
        assert_eq!(multicolor_multinomial_bound(&spec(&[2, 2])), big(2));
        assert_eq!(multicolor_multinomial_bound(&spec(&[1, 5])), big(1));
    }

    #[test]
    fn triangle_multicolor_examples() {
        assert_eq!(erdos_triangle_multicolor_bound(1), Ok(big(3)));
        assert_eq!(erdos_triangle_multicolor_bound(2), Ok(big(6)));
        assert_eq!(erdos_triangle_multicolor_bound(3), Ok(big(17)));
        // 4! (1 + 1 + 1/2 + 1/6 + 1/24) + 1 = 24 + 24 + 12 + 4 + 1 + 1
        assert_eq!(erdos_triangle_multicolor_bound(4), Ok(big(66)));
    }

    #[test]
    fn collected_bounds_for_3_4() {
        let bounds = collect_bounds(3, 4).unwrap();
        let upper: Vec<_> = bounds.iter().filter_map(|b| b.upper.clone()).collect();
        assert!(upper.contains(&big(9)));
        assert!(upper.contains(&big(10)));
        let witness = bounds
            .iter()
            .find(|b| b.source == BoundSource::Witness)
            .unwrap();
        assert_eq!(witness.lower, Some(big(9)));
    }
}
