//! Surgery slopes p/q and the Spin^c class labels of a p/q-surgery.

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Error, Result};

/// A reduced rational surgery coefficient p/q with q >= 1 and p != 0.
///
/// Construction accepts any pair with non-zero numerator and denominator,
/// reduces it, and normalizes the sign into the numerator. Zero surgery is
/// rejected: the surgered manifold is not a rational homology sphere and the
/// dimension formula does not apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SurgerySlope {
    p: i64,
    q: i64,
}

impl SurgerySlope {
    /// Builds the reduced slope from an unreduced pair.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let (orig_p, orig_q) = (p, q);
        if p == 0 {
            return Err(Error::InvalidSlope {
                p,
                q,
                reason: "numerator must be non-zero (0-surgery is not supported)",
            });
        }
        if q == 0 {
            return Err(Error::InvalidSlope {
                p,
                q,
                reason: "denominator must be non-zero",
            });
        }
        let g = gcd(p.unsigned_abs(), q.unsigned_abs());
        let negative = (p < 0) != (q < 0);
        let p_mag = p.unsigned_abs() / g;
        let q_mag = q.unsigned_abs() / g;
        let p = if negative {
            i64::try_from(p_mag)
                .map(|v| -v)
                .or_else(|_| (p_mag == 1u64 << 63).then_some(i64::MIN).ok_or(()))
        } else {
            i64::try_from(p_mag).map_err(|_| ())
        }
        .map_err(|_| Error::InvalidSlope {
            p: orig_p,
            q: orig_q,
            reason: "reduced numerator does not fit in 63-bit signed range",
        })?;
        let q = i64::try_from(q_mag).map_err(|_| Error::InvalidSlope {
            p: orig_p,
            q: orig_q,
            reason: "reduced denominator does not fit in 63-bit signed range",
        })?;
        Ok(SurgerySlope { p, q })
    }

    /// Reduced numerator; carries the sign of the slope.
    pub fn p(&self) -> i64 {
        self.p
    }

    /// Reduced denominator, always >= 1.
    pub fn q(&self) -> i64 {
        self.q
    }

    /// |p|: the order of H_1 of the surgered manifold, and the number of
    /// Spin^c structures on it.
    pub fn class_count(&self) -> u64 {
        self.p.unsigned_abs()
    }

    /// The slope with numerator negated (the mirror-image query).
    pub fn negated(&self) -> Result<Self> {
        let p = self
            .p
            .checked_neg()
            .ok_or(Error::Overflow("slope negation"))?;
        Ok(SurgerySlope { p, q: self.q })
    }

    /// True when p > 0.
    pub fn is_positive(&self) -> bool {
        self.p > 0
    }
}

impl std::fmt::Display for SurgerySlope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// A Spin^c structure label on S^3_{p/q}(K): a canonical residue mod |p|.
///
/// The labeling is purely combinatorial (residues 0..|p|-1); it is not matched
/// to any geometric Spin^c convention. All obstruction tests in this crate
/// only compare extrema over the full set of classes, so the labeling choice
/// never affects a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpincClass {
    index: u64,
    modulus: u64,
}

impl SpincClass {
    /// Canonicalizes an arbitrary integer label `i` modulo `modulus` (>= 1).
    pub fn canonical(i: i64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidInput(
                "Spin^c modulus must be positive".into(),
            ));
        }
        let m = i128::from(modulus);
        let index = i128::from(i).rem_euclid(m) as u64;
        Ok(SpincClass { index, modulus })
    }

    /// Residue in `0..modulus`.
    pub fn index(&self) -> u64 {
        self.index
    }

    /// The modulus |p|.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl std::fmt::Display for SpincClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}] mod {}", self.index, self.modulus)
    }
}
