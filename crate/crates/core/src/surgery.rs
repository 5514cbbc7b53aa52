//! The rational surgery dimension formula and per-surgery dimension tables.
//!
//! Given a validated profile (genus g, nu >= 0, dims of H(A_s)) and a reduced
//! slope p/q, the dimension of the hat Floer group of S^3_{p/q}(K) in the
//! class [i] is piecewise in nu and the sign/size of p:
//!
//! * nu = 0:                      1 + S
//! * nu > 0, 0 < (2nu-1)q <= p:   1 + S
//! * nu > 0, 0 < p <= (2nu-1)q:  -1 + 2*Phi + S
//! * nu > 0, p < 0:               1 + 2*Phi + S
//!
//! where S is the weighted sum from [`big_s`](crate::profile::big_s) and Phi
//! is the phi window sum over |s| < nu. At the branch boundary
//! p = (2nu-1)q the first form is used; the two agree there because the
//! window then admits exactly one lattice point per class.

use crate::error::{Error, Result};
use crate::phi::phi_window_sum;
use crate::profile::{big_s, KnotProfile};
use crate::slope::{SpincClass, SurgerySlope};

/// Per-class Floer dimensions of one surgery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HFDimTable {
    slope: SurgerySlope,
    profile_name: String,
    /// dims[i] is the dimension in the class with canonical residue i.
    dims: Vec<u64>,
    total: u64,
    is_lspace: bool,
}

impl HFDimTable {
    pub fn slope(&self) -> SurgerySlope {
        self.slope
    }

    pub fn profile_name(&self) -> &str {
        &self.profile_name
    }

    /// Dimension in the class labeled by any integer i (canonicalized mod |p|).
    pub fn dim(&self, i: i64) -> Result<u64> {
        let class = SpincClass::canonical(i, self.dims.len() as u64)?;
        Ok(self.dims[class.index() as usize])
    }

    /// Dimensions indexed by canonical residue 0..|p|.
    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    /// Iterates (class, dimension) in residue order.
    pub fn classes(&self) -> impl Iterator<Item = (SpincClass, u64)> + '_ {
        let modulus = self.dims.len() as u64;
        self.dims.iter().enumerate().map(move |(i, d)| {
            let class = SpincClass::canonical(i as i64, modulus)
                .expect("table modulus is positive");
            (class, *d)
        })
    }

    /// Total dimension over all Spin^c classes.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// True iff every class has dimension 1, i.e. the total equals |H_1| = |p|.
    pub fn is_lspace(&self) -> bool {
        self.is_lspace
    }

    pub fn max_dim(&self) -> u64 {
        *self.dims.iter().max().expect("table is non-empty")
    }

    pub fn min_dim(&self) -> u64 {
        *self.dims.iter().min().expect("table is non-empty")
    }
}

/// Dimension of the hat Floer group of S^3_{p/q}(K) in class [i].
///
/// The profile must validate; in particular nu >= 0 (mirror the knot first
/// if necessary). The result is always >= 1.
pub fn hf_dim(profile: &KnotProfile, slope: SurgerySlope, i: i64) -> Result<u64> {
    profile.validated()?;
    hf_dim_unchecked(profile, slope, i)
}

fn hf_dim_unchecked(profile: &KnotProfile, slope: SurgerySlope, i: i64) -> Result<u64> {
    let s = i128::from(big_s(profile, slope, i)?);
    let nu = i128::from(profile.nu);
    let p = i128::from(slope.p());
    let q = i128::from(slope.q());

    let dim = if nu == 0 {
        // Stated without a sign restriction on p; applied verbatim.
        1 + s
    } else {
        let threshold = (2 * nu - 1) * q;
        if p >= threshold {
            // 0 < (2nu-1)q <= p
            1 + s
        } else {
            let nu_edge = i64::try_from(nu - 1).map_err(|_| Error::Overflow("nu window edge"))?;
            let window = i128::from(phi_window_sum(slope, i, -nu_edge, nu_edge)?);
            if p > 0 {
                // 0 < p <= (2nu-1)q; the window spans q(2nu-1) >= p integers,
                // so it contains at least one lattice point and the result
                // stays positive.
                -1 + 2 * window + s
            } else {
                1 + 2 * window + s
            }
        }
    };
    u64::try_from(dim).map_err(|_| Error::Overflow("surgery dimension"))
}

/// The full dimension table of S^3_{p/q}(K) over all |p| Spin^c classes.
pub fn hf_table(profile: &KnotProfile, slope: SurgerySlope) -> Result<HFDimTable> {
    profile.validated()?;
    let classes = usize::try_from(slope.class_count())
        .map_err(|_| Error::Overflow("Spin^c class count"))?;
    let mut dims = Vec::with_capacity(classes);
    let mut total: u64 = 0;
    for i in 0..classes {
        let d = hf_dim_unchecked(profile, slope, i as i64)?;
        total = total
            .checked_add(d)
            .ok_or(Error::Overflow("dimension table total"))?;
        dims.push(d);
    }
    let is_lspace = dims.iter().all(|d| *d == 1);
    debug_assert_eq!(is_lspace, total == slope.class_count());
    Ok(HFDimTable {
        slope,
        profile_name: profile.name.clone(),
        dims,
        total,
        is_lspace,
    })
}

/// Whether S^3_{p/q}(K) has the minimal dimension |p| over Z/rZ, i.e. is a
/// Z/rZ-L-space for the primes the profile asserts.
pub fn is_zrz_lspace_surgery(profile: &KnotProfile, slope: SurgerySlope) -> Result<bool> {
    Ok(hf_table(profile, slope)?.is_lspace())
}
