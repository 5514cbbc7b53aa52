//! Exact integer helpers: floor/ceil division with mathematical rounding,
//! gcd, modular inverses, and prime-power factorization.
//!
//! All division here rounds toward -inf (floor) or +inf (ceil) regardless of
//! operand signs. Rust's `/` truncates toward zero, which is the wrong
//! convention for the counting arguments in this crate, so nothing below uses
//! bare `/` on signed values.

/// Floor division: the largest integer `<= a/b`. `b` must be non-zero.
pub fn floor_div(a: i128, b: i128) -> i128 {
    debug_assert!(b != 0);
    if b > 0 {
        a.div_euclid(b)
    } else {
        // floor(a/b) = floor((-a)/(-b)) and -b > 0.
        (-a).div_euclid(-b)
    }
}

/// Ceiling division: the smallest integer `>= a/b`. `b` must be non-zero.
pub fn ceil_div(a: i128, b: i128) -> i128 {
    -floor_div(-a, b)
}

/// Greatest common divisor; gcd(0, 0) = 0.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Multiplicative inverse of `a` modulo `m` (m >= 1), if gcd(a, m) = 1.
///
/// Extended Euclidean algorithm; the result is canonical in `0..m`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (i128::from(m), i128::from(a % m));
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None; // not coprime
    }
    Some(t0.rem_euclid(i128::from(m)) as u64)
}

/// Writes `m` as `r^n` for a prime `r` and `n >= 1`, if possible.
///
/// Trial division; intended for the small cover degrees that arise in
/// lens-space families, not as general-purpose factorization.
pub fn prime_power(m: u64) -> Option<(u64, u32)> {
    if m < 2 {
        return None;
    }
    let mut rest = m;
    let mut base = 0u64;
    let mut d = 2u64;
    while d.saturating_mul(d) <= rest {
        if rest.is_multiple_of(d) {
            base = d;
            break;
        }
        d += 1;
    }
    if base == 0 {
        return Some((m, 1)); // m itself is prime
    }
    let mut n = 0u32;
    while rest.is_multiple_of(base) {
        rest /= base;
        n += 1;
    }
    if rest == 1 {
        Some((base, n))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_and_ceil_round_away_from_truncation() {
        assert_eq!(floor_div(7, 2), 3);
        assert_eq!(floor_div(-7, 2), -4);
        assert_eq!(floor_div(7, -2), -4);
        assert_eq!(floor_div(-7, -2), 3);
        assert_eq!(ceil_div(7, 2), 4);
        assert_eq!(ceil_div(-7, 2), -3);
        assert_eq!(ceil_div(7, -2), -3);
        assert_eq!(ceil_div(-7, -2), 4);
        assert_eq!(floor_div(6, 3), 2);
        assert_eq!(ceil_div(6, 3), 2);
        assert_eq!(floor_div(-6, 3), -2);
        assert_eq!(ceil_div(-6, 3), -2);
    }

    #[test]
    fn floor_ceil_match_definition_on_grid() {
        for a in -50i128..=50 {
            for b in -12i128..=12 {
                if b == 0 {
                    continue;
                }
                let f = floor_div(a, b);
                let c = ceil_div(a, b);
                // f <= a/b < f+1 and c-1 < a/b <= c, cross-multiplied by |b|.
                assert!(f * b.abs() <= a * b.signum() && a * b.signum() < (f + 1) * b.abs());
                assert!((c - 1) * b.abs() < a * b.signum() && a * b.signum() <= c * b.abs());
            }
        }
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(7, 0), 7);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(1, 1), 1);
        assert_eq!(gcd(49, 32), 1);
    }

    #[test]
    fn mod_inverse_agrees_with_definition() {
        for m in 1u64..=60 {
            for a in 0..m.max(1) {
                match mod_inverse(a, m) {
                    Some(inv) => {
                        assert_eq!(gcd(a, m), 1);
                        if m > 1 {
                            assert_eq!(a * inv % m, 1);
                        }
                    }
                    None => assert_ne!(gcd(a % m.max(1), m), 1),
                }
            }
        }
        assert_eq!(mod_inverse(4, 7), Some(2)); // 4*2 = 8 = 1 mod 7
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(91), None); // 7 * 13
        assert_eq!(prime_power(6 * 4 + 1), Some((5, 2))); // degree for k = 4
    }
}
