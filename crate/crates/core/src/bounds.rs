//! Closed-form thresholds and clustering bounds.
//!
//! The clustering bounds of the 2-colouring results are towers such as
//! `d^(k^(3(k+2)k^k))`; they are never materialised. [`PowerBound`] keeps
//! base and exponent as arbitrary-precision integers and compares a measured
//! value against them by repeated multiplication with early exit.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

/// `(k+2) * k^k * (18 k^(2k+1) + 1)`, the high-degree threshold.
pub fn high_degree_threshold(k: usize) -> BigUint {
    let k_big = BigUint::from(k);
    let kk = k_big.pow(k as u32);
    let inner = BigUint::from(18u32) * k_big.pow(2 * k as u32 + 1) + BigUint::one();
    BigUint::from(k + 2) * kk * inner
}

/// The threshold as a machine integer, saturating when it does not fit.
pub fn high_degree_threshold_usize(k: usize) -> usize {
    high_degree_threshold(k).to_usize().unwrap_or(usize::MAX)
}

/// `(k+2) k^k`, the number of high-degree vertices that forces a fat minor.
pub fn many_high_count(k: usize) -> usize {
    saturating_pow(k, k).saturating_mul(k + 2)
}

pub(crate) fn saturating_pow(base: usize, exp: usize) -> usize {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

/// `multiplier * base^exponent`, held symbolically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerBound {
    pub multiplier: BigUint,
    pub base: BigUint,
    pub exponent: BigUint,
}

impl PowerBound {
    /// Clustering of the parity case inside one block: `d^k`.
    pub fn parity_case(k: usize) -> Self {
        Self {
            multiplier: BigUint::one(),
            base: high_degree_threshold(k),
            exponent: BigUint::from(k),
        }
    }

    /// Clustering inside one 2-connected block: `d^(k^(3(k+2)k^k))`.
    pub fn two_connected(k: usize) -> Self {
        Self {
            multiplier: BigUint::one(),
            base: high_degree_threshold(k),
            exponent: tower_exponent(k),
        }
    }

    /// Clustering of the full 2-colouring: `k d^(k^(3(k+2)k^k))`.
    pub fn two_colour(k: usize) -> Self {
        Self { multiplier: BigUint::from(k), ..Self::two_connected(k) }
    }

    /// Whether `value <= multiplier * base^exponent`.
    pub fn admits(&self, value: usize) -> bool {
        let target = BigUint::from(value);
        if self.multiplier.is_zero() {
            return target.is_zero();
        }
        if self.base <= BigUint::one() || self.exponent.is_zero() {
            let b = if self.exponent.is_zero() { BigUint::one() } else { self.base.clone() };
            return target <= &self.multiplier * b;
        }
        let mut acc = self.multiplier.clone();
        let mut remaining = self.exponent.clone();
        while !remaining.is_zero() {
            if acc >= target {
                return true;
            }
            acc *= &self.base;
            remaining -= 1u32;
        }
        acc >= target
    }

    pub fn describe(&self) -> String {
        let exp = if self.exponent.bits() <= 64 {
            self.exponent.to_string()
        } else {
            format!("<{}-bit integer>", self.exponent.bits())
        };
        format!("{} * {}^{}", self.multiplier, self.base, exp)
    }
}

/// `k^(3(k+2)k^k)`.
fn tower_exponent(k: usize) -> BigUint {
    let inner = 3 * (k + 2) * saturating_pow(k, k);
    BigUint::from(k).pow(inner as u32)
}

/// `(4^h - 4) / 6`, the colour count of the weak-closure colouring.
pub fn weak_closure_colours(h: usize) -> usize {
    assert!(h >= 1);
    (saturating_pow(4, h) - 4) / 6
}

/// `2^h - 2`, the colour count of the layered hitting-set colouring.
pub fn heart_colours(h: usize) -> usize {
    assert!(h >= 1);
    (1usize << h) - 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_values() {
        assert_eq!(high_degree_threshold(1), BigUint::from(57u32));
        // 4 * 4 * (18 * 32 + 1)
        assert_eq!(high_degree_threshold(2), BigUint::from(9232u32));
        // 5 * 27 * (18 * 2187 + 1)
        assert_eq!(high_degree_threshold(3), BigUint::from(5_314_545u64));
        assert_eq!(many_high_count(1), 3);
        assert_eq!(many_high_count(2), 16);
    }

    #[test]
    fn colour_counts() {
        assert_eq!(weak_closure_colours(1), 0);
        assert_eq!(weak_closure_colours(2), 2);
        assert_eq!(weak_closure_colours(3), 10);
        for h in 2..8 {
            assert_eq!(weak_closure_colours(h), 4 * weak_closure_colours(h - 1) + 2);
        }
        assert_eq!(heart_colours(1), 0);
        assert_eq!(heart_colours(3), 6);
    }

    #[test]
    fn symbolic_comparison() {
        let b = PowerBound {
            multiplier: BigUint::from(2u32),
            base: BigUint::from(3u32),
            exponent: BigUint::from(4u32),
        };
        assert!(b.admits(162));
        assert!(!b.admits(163));
        assert!(PowerBound::two_colour(3).admits(usize::MAX));
        assert!(PowerBound::parity_case(1).admits(57));
        assert!(!PowerBound::parity_case(1).admits(58));
    }
}
