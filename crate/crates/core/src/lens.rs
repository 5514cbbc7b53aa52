//! Lens space arithmetic: Moser slopes on the trefoil, homeomorphism
//! testing, cyclic covers, and the virtually-cosmetic trefoil family.

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, mod_inverse, prime_power};
use crate::error::{Error, Result};
use crate::slope::SurgerySlope;

/// A lens space L(p, q), stored normalized: p >= 1, 0 <= q < p, gcd = 1.
/// p = 1 (with q = 0) is the 3-sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    /// Normalizes q modulo p; requires p >= 1 and gcd(p, q) = 1.
    pub fn new(p: u64, q: i64) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidInput(
                "lens space order p must be positive".into(),
            ));
        }
        let q = i128::from(q).rem_euclid(i128::from(p)) as u64;
        if gcd(p, q) != 1 {
            return Err(Error::InvalidInput(format!(
                "L({p},{q}) is not a lens space: gcd({p},{q}) != 1"
            )));
        }
        Ok(LensSpace { p, q })
    }

    /// Builds from an already-reduced residue 0 <= q < p.
    fn from_canonical(p: u64, q: u64) -> Result<Self> {
        debug_assert!(p >= 1 && q < p.max(1));
        if gcd(p, q) != 1 {
            return Err(Error::InvalidInput(format!(
                "L({p},{q}) is not a lens space: gcd({p},{q}) != 1"
            )));
        }
        Ok(LensSpace { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_sphere(&self) -> bool {
        self.p == 1
    }
}

impl std::fmt::Display for LensSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_sphere() {
            write!(f, "S^3")
        } else {
            write!(f, "L({},{})", self.p, self.q)
        }
    }
}

/// The lens space produced by p/q-surgery on the right-handed trefoil, when
/// there is one: L(p, 4q) exactly for p = 6q +/- 1 (positive slopes).
pub fn moser_trefoil(slope: SurgerySlope) -> Option<LensSpace> {
    let p = i128::from(slope.p());
    let q = i128::from(slope.q());
    if p <= 0 || (p - 6 * q).abs() != 1 {
        return None;
    }
    let q4 = (4 * q).rem_euclid(p) as u64;
    // gcd(6q +/- 1, 4q) = 1, so the construction cannot fail.
    Some(LensSpace::from_canonical(p as u64, q4).expect("Moser slope yields a valid lens space"))
}

/// Unoriented homeomorphism: L(p, q) = L(p, q') iff q' = +/- q^{+/-1} mod p.
pub fn lens_homeomorphic(a: LensSpace, b: LensSpace) -> bool {
    if a.p != b.p {
        return false;
    }
    if a.p == 1 {
        return true;
    }
    let p = a.p;
    let inv = mod_inverse(a.q, p).expect("stored q is coprime to p");
    b.q == a.q || b.q == (p - a.q) % p || b.q == inv || b.q == (p - inv) % p
}

/// The degree-d cyclic cover of a lens space: defined when d divides p,
/// giving L(p/d, q mod p/d). Degree 1 returns the space itself.
pub fn cyclic_cover(base: LensSpace, degree: u64) -> Option<LensSpace> {
    if degree == 0 || !base.p.is_multiple_of(degree) {
        return None;
    }
    let p = base.p / degree;
    Some(LensSpace::from_canonical(p, base.q % p).expect("gcd is inherited by divisors"))
}

/// Sign selector for the Moser family p = 6q + 1 or p = 6q - 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn offset(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "+1" | "plus" => Ok(Sign::Plus),
            "-" | "-1" | "minus" => Ok(Sign::Minus),
            other => Err(Error::InvalidInput(format!(
                "sign must be one of +, -, plus, minus (got `{other}`)"
            ))),
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Verification record for one member of the trefoil cover family
/// parameterized by (q, k, sign): cover slope p/q with p = 6q + sign, base
/// slope p'/q' with q' = q + k*p and p' = 6q' + sign, cover degree 6k + 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrefoilFamilyRecord {
    pub q: u64,
    pub k: u64,
    pub sign: Sign,
    pub p: u64,
    pub q_prime: u64,
    pub p_prime: u64,
    /// The number of sheets, 6k + 1.
    pub degree: u64,
    /// The small surgery L(p, 4q mod p) - the candidate cover.
    pub cover: LensSpace,
    /// The large surgery L(p', 4q' mod p') - the candidate base.
    pub base: LensSpace,
    /// (a) p' = p * (6k + 1).
    pub product_identity: bool,
    /// (b) both slopes are Moser slopes with the expected lens spaces.
    pub moser_applies: bool,
    /// (c) the degree-(6k+1) cyclic cover of the base is homeomorphic to the cover.
    pub cover_matches: bool,
    /// (d) 6k + 1 is a prime power r^n.
    pub degree_is_prime_power: bool,
    /// The (r, n) with degree = r^n, when (d) holds.
    pub prime_power: Option<(u64, u32)>,
}

impl TrefoilFamilyRecord {
    /// (a) through (c): the arithmetic of the family itself.
    pub fn arithmetic_ok(&self) -> bool {
        self.product_identity && self.moser_applies && self.cover_matches
    }
}

/// Checks one member of the trefoil family. `q >= 1`, `k >= 1`; the degree
/// 6k + 1 need not be a prime power - the record reports whether it is.
pub fn verify_trefoil_family(q: u64, k: u64, sign: Sign) -> Result<TrefoilFamilyRecord> {
    if q == 0 || k == 0 {
        return Err(Error::InvalidInput(
            "trefoil family parameters require q >= 1 and k >= 1".into(),
        ));
    }
    let off = sign.offset();
    let q_i = i64::try_from(q).map_err(|_| Error::Overflow("family parameter q"))?;
    let k_i = i64::try_from(k).map_err(|_| Error::Overflow("family parameter k"))?;
    let p_i = q_i
        .checked_mul(6)
        .and_then(|v| v.checked_add(off))
        .ok_or(Error::Overflow("family numerator p"))?;
    let q_prime_i = k_i
        .checked_mul(p_i)
        .and_then(|v| v.checked_add(q_i))
        .ok_or(Error::Overflow("family denominator q'"))?;
    let p_prime_i = q_prime_i
        .checked_mul(6)
        .and_then(|v| v.checked_add(off))
        .ok_or(Error::Overflow("family numerator p'"))?;
    let degree = 6 * k + 1;

    let cover_slope = SurgerySlope::new(p_i, q_i)?;
    let base_slope = SurgerySlope::new(p_prime_i, q_prime_i)?;
    let p = p_i as u64;
    let p_prime = p_prime_i as u64;
    let q_prime = q_prime_i as u64;

    let product_identity = p
        .checked_mul(degree)
        .ok_or(Error::Overflow("family product p * (6k+1)"))?
        == p_prime;

    let expected_cover = LensSpace::new(p, 4 * q_i)?;
    let expected_base = LensSpace::new(p_prime, 4 * q_prime_i)?;
    let moser_applies = moser_trefoil(cover_slope) == Some(expected_cover)
        && moser_trefoil(base_slope) == Some(expected_base);

    let cover_matches = cyclic_cover(expected_base, degree)
        .is_some_and(|c| lens_homeomorphic(c, expected_cover));

    let pp = prime_power(degree);
    Ok(TrefoilFamilyRecord {
        q,
        k,
        sign,
        p,
        q_prime,
        p_prime,
        degree,
        cover: expected_cover,
        base: expected_base,
        product_identity,
        moser_applies,
        cover_matches,
        degree_is_prime_power: pp.is_some(),
        prime_power: pp,
    })
}
