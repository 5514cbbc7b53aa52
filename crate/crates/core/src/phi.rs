//! The lattice counting function phi and its window sums.
//!
//! `phi(p/q, i, s)` counts the integers n with floor((i + p*n)/q) = s. It is
//! the combinatorial kernel of the rational surgery dimension formula. The
//! closed form reduces the count to one floor and one ceiling; an independent
//! brute-force enumeration is kept alongside it as an oracle.
//!
//! All arithmetic is exact: inputs are 63-bit signed integers, intermediates
//! are 128-bit, and the only representable-range hazard (a window-sum count
//! exceeding 64 bits) is reported as an overflow error.

use crate::arith::{ceil_div, floor_div};
use crate::error::{Error, Result};
use crate::slope::SurgerySlope;

/// Counts integers n with `lo <= p*n <= hi` (requires `lo <= hi`, `p != 0`).
fn count_scaled_in_interval(p: i128, lo: i128, hi: i128) -> i128 {
    debug_assert!(p != 0 && lo <= hi);
    let (n_lo, n_hi) = if p > 0 {
        (ceil_div(lo, p), floor_div(hi, p))
    } else {
        (ceil_div(hi, p), floor_div(lo, p))
    };
    (n_hi - n_lo + 1).max(0)
}

/// Number of integers n with floor((i + p*n)/q) = s, by closed form.
///
/// The defining condition is equivalent to `q*s <= i + p*n <= q*s + q - 1`,
/// so the count is the number of multiples of p in an interval of q
/// consecutive integers; it never exceeds q and always fits in u64.
pub fn phi(slope: SurgerySlope, i: i64, s: i64) -> u64 {
    let (p, q) = (i128::from(slope.p()), i128::from(slope.q()));
    let (i, s) = (i128::from(i), i128::from(s));
    let lo = q * s - i;
    let hi = q * s + q - 1 - i;
    count_scaled_in_interval(p, lo, hi) as u64
}

/// Same count as [`phi`], by direct enumeration over a provably sufficient
/// window of n. Independent oracle for the closed form.
pub fn phi_bruteforce(slope: SurgerySlope, i: i64, s: i64) -> u64 {
    let (p, q) = (i128::from(slope.p()), i128::from(slope.q()));
    let (i, s) = (i128::from(i), i128::from(s));
    // Any solution has q*s <= i + p*n <= q*s + q - 1, hence
    // |p*n| <= |q*s| + q + |i| and |n| <= (|q*s| + q + |i|) / |p| + 1.
    let bound = ((q * s).abs() + q + i.abs()) / p.abs() + 1;
    let mut count = 0u64;
    let mut n = -bound;
    while n <= bound {
        if (i + p * n).div_euclid(q) == s {
            count += 1;
        }
        n += 1;
    }
    count
}

/// The bounds floor(|q/p|) <= phi <= ceil(|q/p|), valid for every i and s.
pub fn phi_bounds(slope: SurgerySlope) -> (u64, u64) {
    let p = slope.p().unsigned_abs();
    let q = slope.q().unsigned_abs();
    (q / p, q.div_ceil(p))
}

/// Sum of `phi(slope, i, s)` over `s_lo <= s <= s_hi`, as one interval count.
///
/// The union of the defining conditions over the window is the single
/// condition `q*s_lo <= i + p*n <= q*(s_hi + 1) - 1`, so no term-by-term
/// summation is needed. Errors if the window is empty or the count exceeds
/// the 64-bit range.
pub fn phi_window_sum(slope: SurgerySlope, i: i64, s_lo: i64, s_hi: i64) -> Result<u64> {
    if s_lo > s_hi {
        return Err(Error::InvalidInput(format!(
            "empty window: s_lo = {s_lo} exceeds s_hi = {s_hi}"
        )));
    }
    let (p, q) = (i128::from(slope.p()), i128::from(slope.q()));
    let (i, s_lo, s_hi) = (i128::from(i), i128::from(s_lo), i128::from(s_hi));
    let lo = q * s_lo - i;
    let hi = q * (s_hi + 1) - 1 - i;
    u64::try_from(count_scaled_in_interval(p, lo, hi))
        .map_err(|_| Error::Overflow("phi window sum count"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slope(p: i64, q: i64) -> SurgerySlope {
        SurgerySlope::new(p, q).unwrap()
    }

    #[test]
    fn phi_spot_values() {
        assert_eq!(phi(slope(2, 1), 0, 0), 1);
        assert_eq!(phi(slope(1, 2), 0, 7), 2);
        assert_eq!(phi(slope(2, 1), 1, 0), 0); // i + 2n is odd, never 0
    }

    #[test]
    fn bruteforce_spot_values() {
        assert_eq!(phi_bruteforce(slope(7, 1), 3, 3), 1); // n = 0 only
        assert_eq!(phi_bruteforce(slope(1, 5), 0, 0), 5); // n in 0..=4
        assert_eq!(phi_bruteforce(slope(-1, 1), 0, 0), 1); // floor(-n) = 0 iff n = 0
    }

    #[test]
    fn bounds_spot_values() {
        assert_eq!(phi_bounds(slope(1, 2)), (2, 2));
        assert_eq!(phi_bounds(slope(2, 1)), (0, 1));
        assert_eq!(phi_bounds(slope(-3, 7)), (2, 3));
    }

    #[test]
    fn bounds_contain_all_values_for_minus_3_over_7() {
        let sl = slope(-3, 7);
        let (lo, hi) = phi_bounds(sl);
        for i in -10..=10 {
            for s in -10..=10 {
                let v = phi_bruteforce(sl, i, s);
                assert!(lo <= v && v <= hi, "phi({sl}, {i}, {s}) = {v} outside [{lo}, {hi}]");
            }
        }
    }

    #[test]
    fn window_sum_spot_values() {
        assert_eq!(phi_window_sum(slope(1, 1), 0, -1, 1).unwrap(), 3);
        // Window of s-length 2v-1 = 3 at p = (2v-1)q = 3: exactly one n.
        assert_eq!(phi_window_sum(slope(3, 1), 0, -1, 1).unwrap(), 1);
        assert_eq!(phi_window_sum(slope(1, 5), 2, 0, 0).unwrap(), 5);
    }

    #[test]
    fn window_sum_matches_term_by_term() {
        for (p, q) in [(3, 1), (1, 5), (-2, 7), (5, 3), (-7, 4)] {
            let sl = slope(p, q);
            for i in -6..=6 {
                let direct: u64 = (-4..=5).map(|s| phi(sl, i, s)).sum();
                assert_eq!(phi_window_sum(sl, i, -4, 5).unwrap(), direct, "{sl} i={i}");
            }
        }
    }

    #[test]
    fn empty_window_rejected() {
        assert!(phi_window_sum(slope(1, 1), 0, 1, 0).is_err());
    }

    #[test]
    fn window_count_overflow_reported() {
        // q * (s-range) / |p| exceeds u64: count = ~4.6e18 * 4 > 2^64.
        let sl = slope(1, i64::MAX);
        let err = phi_window_sum(sl, 0, 0, 3).unwrap_err();
        assert!(matches!(err, Error::Overflow(_)));
    }

    #[test]
    fn residue_invariance_small_grid() {
        for (p, q) in [(2, 1), (3, 5), (-4, 3), (-1, 6)] {
            let sl = slope(p, q);
            for i in -8..=8i64 {
                for s in -8..=8 {
                    assert_eq!(phi(sl, i, s), phi(sl, i + p, s));
                }
            }
        }
    }
}
