//! Covering-space obstruction tests between surgeries, with certificates.
//!
//! Every test here is one-directional: `Obstructed` certifies that no
//! r^n-sheeted regular cover (r prime, n >= 1) of the stated shape exists,
//! while `NotObstructed` only means the tests are silent, never that a cover
//! exists. The dimension-gap test compares the maximum dimension over the
//! candidate cover's Spin^c classes with the minimum over the base's; since
//! the pullback correspondence between classes is not known to the tool,
//! this extremal comparison is the only labeling-independent sound one.

use crate::arith::ceil_div;
use crate::error::{Error, Result};
use crate::profile::KnotProfile;
use crate::slope::SurgerySlope;
use crate::surgery::hf_table;

use serde::{Deserialize, Serialize};

/// Outcome of an obstruction query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    /// At least one test certified that the cover cannot exist.
    Obstructed,
    /// No test fired; existence of a cover is NOT asserted.
    NotObstructed,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Obstructed => write!(f, "obstructed"),
            Status::NotObstructed => write!(f, "not-obstructed"),
        }
    }
}

/// Witness data for one fired test. Each variant records the two numbers
/// whose strict inequality (or boolean contrast) constitutes the proof.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certificate {
    /// Same-knot hypotheses: p/q <= 1 and ceil(q/p) < floor(q'/p').
    SameKnotHypotheses { cover_ceil: u64, base_floor: u64 },
    /// L-space-knot genus hypotheses: (2g-1)ceil(q/p) < (2g'-1)floor(q'/p').
    GenusHypotheses { cover_bound: u64, base_bound: u64 },
    /// Computed dimension gap: max dim over the cover < min dim over the base.
    DimensionGap { max_cover_dim: u64, min_base_dim: u64 },
    /// The candidate cover is a Z/rZ-L-space but the base is not.
    LspaceContradiction {
        cover_is_lspace: bool,
        base_is_lspace: bool,
    },
}

impl Certificate {
    /// Re-evaluates the defining inequality from the stored numbers.
    pub fn holds(&self) -> bool {
        match self {
            Certificate::SameKnotHypotheses {
                cover_ceil,
                base_floor,
            } => cover_ceil < base_floor,
            Certificate::GenusHypotheses {
                cover_bound,
                base_bound,
            } => cover_bound < base_bound,
            Certificate::DimensionGap {
                max_cover_dim,
                min_base_dim,
            } => max_cover_dim < min_base_dim,
            Certificate::LspaceContradiction {
                cover_is_lspace,
                base_is_lspace,
            } => *cover_is_lspace && !*base_is_lspace,
        }
    }
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Certificate::SameKnotHypotheses {
                cover_ceil,
                base_floor,
            } => write!(f, "same-knot hypotheses: ceil(q/p) = {cover_ceil} < floor(q'/p') = {base_floor}"),
            Certificate::GenusHypotheses {
                cover_bound,
                base_bound,
            } => write!(f, "genus hypotheses: (2g-1)ceil(q/p) = {cover_bound} < (2g'-1)floor(q'/p') = {base_bound}"),
            Certificate::DimensionGap {
                max_cover_dim,
                min_base_dim,
            } => write!(f, "dimension gap: max cover dim {max_cover_dim} < min base dim {min_base_dim}"),
            Certificate::LspaceContradiction {
                cover_is_lspace,
                base_is_lspace,
            } => write!(f, "L-space contradiction: cover L-space = {cover_is_lspace}, base L-space = {base_is_lspace}"),
        }
    }
}

/// Certified outcome of a covering-obstruction query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionVerdict {
    status: Status,
    certificates: Vec<Certificate>,
}

impl ObstructionVerdict {
    /// Builds a verdict; the status is forced by whether certificates exist.
    pub fn from_certificates(certificates: Vec<Certificate>) -> Self {
        let status = if certificates.is_empty() {
            Status::NotObstructed
        } else {
            Status::Obstructed
        };
        ObstructionVerdict {
            status,
            certificates,
        }
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_obstructed(&self) -> bool {
        self.status == Status::Obstructed
    }

    pub fn certificates(&self) -> &[Certificate] {
        &self.certificates
    }
}

/// A "can this surgery regularly cover that one?" question.
///
/// `prime`, when set, pins the coefficient prime r of the putative r^n cover;
/// both profiles must then assert their data for that prime. When unset, the
/// verdict is uniform over all primes the profiles assert.
#[derive(Debug, Clone)]
pub struct CoverQuery {
    pub cover_profile: KnotProfile,
    pub cover_slope: SurgerySlope,
    pub base_profile: KnotProfile,
    pub base_slope: SurgerySlope,
    pub prime: Option<u64>,
}

impl CoverQuery {
    pub fn new(
        cover_profile: KnotProfile,
        cover_slope: SurgerySlope,
        base_profile: KnotProfile,
        base_slope: SurgerySlope,
    ) -> Self {
        CoverQuery {
            cover_profile,
            cover_slope,
            base_profile,
            base_slope,
            prime: None,
        }
    }

    pub fn with_prime(mut self, prime: u64) -> Self {
        self.prime = Some(prime);
        self
    }

    /// Profiles must validate, and a pinned prime must be asserted by both.
    pub fn validate(&self) -> Result<()> {
        self.cover_profile.validated()?;
        self.base_profile.validated()?;
        if let Some(r) = self.prime {
            for profile in [&self.cover_profile, &self.base_profile] {
                if !profile.coefficient_note.asserts(r) {
                    return Err(Error::CoefficientMismatch {
                        name: profile.name.clone(),
                        prime: r,
                    });
                }
            }
        }
        Ok(())
    }

    /// True when the same-knot theorem's hypotheses shape fits this query:
    /// identical nontrivial profile on both sides, both slopes positive.
    pub fn same_knot_applicable(&self) -> bool {
        self.cover_profile == self.base_profile
            && self.cover_profile.nontrivial
            && self.cover_slope.is_positive()
            && self.base_slope.is_positive()
    }

    /// True when the L-space-knot genus theorem applies: both profiles are
    /// nontrivial L-space-knot profiles and both slopes are positive.
    pub fn genus_applicable(&self) -> bool {
        self.cover_profile.is_lspace_knot_profile()
            && self.base_profile.is_lspace_knot_profile()
            && self.cover_slope.is_positive()
            && self.base_slope.is_positive()
    }
}

fn ceil_q_over_p(slope: SurgerySlope) -> u64 {
    debug_assert!(slope.is_positive());
    ceil_div(i128::from(slope.q()), i128::from(slope.p())) as u64
}

fn floor_q_over_p(slope: SurgerySlope) -> u64 {
    debug_assert!(slope.is_positive());
    (slope.q() / slope.p()) as u64
}

/// Same-knot test: S^3_{p/q}(K) cannot regularly cover S^3_{p'/q'}(K) in
/// prime-power degree when p/q <= 1 and ceil(q/p) < floor(q'/p').
///
/// Requires a nontrivial profile (1/q-surgeries on the unknot cover every
/// lens space, so triviality genuinely breaks the statement) and positive
/// slopes on both sides.
pub fn obstruct_same_knot(
    profile: &KnotProfile,
    cover_slope: SurgerySlope,
    base_slope: SurgerySlope,
) -> Result<ObstructionVerdict> {
    profile.validated()?;
    if !profile.nontrivial {
        return Err(Error::InvalidInput(
            "same-knot obstruction requires a nontrivial knot profile".into(),
        ));
    }
    if !cover_slope.is_positive() || !base_slope.is_positive() {
        return Err(Error::InvalidInput(
            "same-knot obstruction requires positive surgery coefficients".into(),
        ));
    }
    let mut certs = Vec::new();
    // p/q <= 1 for reduced positive slopes means p <= q.
    if cover_slope.p() <= cover_slope.q() {
        let cover_ceil = ceil_q_over_p(cover_slope);
        let base_floor = floor_q_over_p(base_slope);
        if cover_ceil < base_floor {
            certs.push(Certificate::SameKnotHypotheses {
                cover_ceil,
                base_floor,
            });
        }
    }
    Ok(ObstructionVerdict::from_certificates(certs))
}

/// Two-knot L-space-knot test: fires when
/// (2g(K)-1) ceil(q/p) < (2g(K')-1) floor(q'/p').
pub fn obstruct_lspace_knots(
    cover_profile: &KnotProfile,
    cover_slope: SurgerySlope,
    base_profile: &KnotProfile,
    base_slope: SurgerySlope,
) -> Result<ObstructionVerdict> {
    for profile in [cover_profile, base_profile] {
        if !profile.is_lspace_knot_profile() {
            return Err(Error::InvalidInput(format!(
                "profile `{}` is not a nontrivial L-space-knot profile",
                profile.name
            )));
        }
    }
    if !cover_slope.is_positive() || !base_slope.is_positive() {
        return Err(Error::InvalidInput(
            "L-space-knot obstruction requires positive surgery coefficients".into(),
        ));
    }
    let two_g_minus_1 = |p: &KnotProfile| 2 * u64::from(p.genus) - 1;
    let cover_bound = two_g_minus_1(cover_profile)
        .checked_mul(ceil_q_over_p(cover_slope))
        .ok_or(Error::Overflow("genus-hypothesis bound"))?;
    let base_bound = two_g_minus_1(base_profile)
        .checked_mul(floor_q_over_p(base_slope))
        .ok_or(Error::Overflow("genus-hypothesis bound"))?;
    let mut certs = Vec::new();
    if cover_bound < base_bound {
        certs.push(Certificate::GenusHypotheses {
            cover_bound,
            base_bound,
        });
    }
    Ok(ObstructionVerdict::from_certificates(certs))
}

/// The computed extremal dimensions: (max over the cover's classes, min over
/// the base's classes). The covering inequality forces max >= min whenever a
/// regular prime-power cover exists, so max < min is an obstruction.
pub fn dimension_gap(query: &CoverQuery) -> Result<(u64, u64)> {
    query.validate()?;
    let cover = hf_table(&query.cover_profile, query.cover_slope)?;
    let base = hf_table(&query.base_profile, query.base_slope)?;
    Ok((cover.max_dim(), base.min_dim()))
}

/// Strengthened test via the full dimension tables; applies to any pair of
/// valid profiles and any slopes.
pub fn obstruct_by_dimension_gap(query: &CoverQuery) -> Result<ObstructionVerdict> {
    let (max_cover_dim, min_base_dim) = dimension_gap(query)?;
    let mut certs = Vec::new();
    if max_cover_dim < min_base_dim {
        certs.push(Certificate::DimensionGap {
            max_cover_dim,
            min_base_dim,
        });
    }
    Ok(ObstructionVerdict::from_certificates(certs))
}

/// L-space descent test: a Z/rZ-L-space can only regularly cover (in degree
/// r^n) another Z/rZ-L-space, so "cover is, base is not" is an obstruction.
pub fn obstruct_lspace_cover(query: &CoverQuery) -> Result<ObstructionVerdict> {
    query.validate()?;
    let cover_is_lspace = hf_table(&query.cover_profile, query.cover_slope)?.is_lspace();
    let base_is_lspace = hf_table(&query.base_profile, query.base_slope)?.is_lspace();
    let mut certs = Vec::new();
    if cover_is_lspace && !base_is_lspace {
        certs.push(Certificate::LspaceContradiction {
            cover_is_lspace,
            base_is_lspace,
        });
    }
    Ok(ObstructionVerdict::from_certificates(certs))
}

/// Runs every applicable test and merges the certificates.
pub fn obstruct_all(query: &CoverQuery) -> Result<ObstructionVerdict> {
    query.validate()?;
    let mut certs = Vec::new();
    if query.same_knot_applicable() {
        let v = obstruct_same_knot(&query.cover_profile, query.cover_slope, query.base_slope)?;
        certs.extend(v.certificates().iter().cloned());
    }
    if query.genus_applicable() {
        let v = obstruct_lspace_knots(
            &query.cover_profile,
            query.cover_slope,
            &query.base_profile,
            query.base_slope,
        )?;
        certs.extend(v.certificates().iter().cloned());
    }
    let v = obstruct_by_dimension_gap(query)?;
    certs.extend(v.certificates().iter().cloned());
    let v = obstruct_lspace_cover(query)?;
    certs.extend(v.certificates().iter().cloned());
    Ok(ObstructionVerdict::from_certificates(certs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::{builtin, unknot};

    fn slope(p: i64, q: i64) -> SurgerySlope {
        SurgerySlope::new(p, q).unwrap()
    }

    #[test]
    fn same_knot_fires_on_small_over_large_denominator() {
        let t = builtin("T(2,3)").unwrap();
        let v = obstruct_same_knot(&t, slope(1, 2), slope(1, 5)).unwrap();
        assert!(v.is_obstructed());
        assert_eq!(
            v.certificates(),
            &[Certificate::SameKnotHypotheses {
                cover_ceil: 2,
                base_floor: 5
            }]
        );
    }

    #[test]
    fn same_knot_silent_on_lens_cover_family_and_on_equality() {
        let t = builtin("T(2,3)").unwrap();
        // 7/1 over 49/8 is a genuine cover; p/q = 7 > 1 so the test is silent.
        let v = obstruct_same_knot(&t, slope(7, 1), slope(49, 8)).unwrap();
        assert!(!v.is_obstructed());
        let v = obstruct_same_knot(&t, slope(1, 2), slope(1, 2)).unwrap();
        assert!(!v.is_obstructed());
    }

    #[test]
    fn same_knot_rejects_unknot() {
        let u = unknot();
        assert!(obstruct_same_knot(&u, slope(1, 1), slope(5, 1)).is_err());
    }

    #[test]
    fn genus_test_fires_by_genus_imbalance() {
        let t = builtin("T(2,3)").unwrap();
        let p = builtin("P(-2,3,7)").unwrap();
        let v = obstruct_lspace_knots(&t, slope(1, 1), &p, slope(1, 1)).unwrap();
        assert_eq!(
            v.certificates(),
            &[Certificate::GenusHypotheses {
                cover_bound: 1,
                base_bound: 9
            }]
        );
        let v = obstruct_lspace_knots(&p, slope(1, 1), &t, slope(1, 1)).unwrap();
        assert!(!v.is_obstructed());
        let v = obstruct_lspace_knots(&t, slope(2, 1), &t, slope(1, 1)).unwrap();
        assert!(!v.is_obstructed()); // 1*1 < 1*1 is not strict
    }

    #[test]
    fn dimension_gap_certifies_trefoil_pair() {
        let t = builtin("T(2,3)").unwrap();
        let q = CoverQuery::new(t.clone(), slope(1, 2), t, slope(1, 5));
        let v = obstruct_by_dimension_gap(&q).unwrap();
        assert_eq!(
            v.certificates(),
            &[Certificate::DimensionGap {
                max_cover_dim: 3,
                min_base_dim: 9
            }]
        );
    }

    #[test]
    fn dimension_gap_silent_on_genuine_covers() {
        let u = unknot();
        let q = CoverQuery::new(u.clone(), slope(1, 1), u, slope(5, 1));
        assert_eq!(dimension_gap(&q).unwrap(), (1, 1));
        assert!(!obstruct_by_dimension_gap(&q).unwrap().is_obstructed());

        let t = builtin("T(2,3)").unwrap();
        let q = CoverQuery::new(t.clone(), slope(7, 1), t, slope(49, 8));
        assert_eq!(dimension_gap(&q).unwrap(), (1, 1));
        assert!(!obstruct_by_dimension_gap(&q).unwrap().is_obstructed());
    }

    #[test]
    fn lspace_descent_examples() {
        let t = builtin("T(2,3)").unwrap();
        let q = CoverQuery::new(t.clone(), slope(7, 1), t.clone(), slope(1, 2));
        assert!(obstruct_lspace_cover(&q).unwrap().is_obstructed());
        let q = CoverQuery::new(t.clone(), slope(1, 2), t.clone(), slope(7, 1));
        assert!(!obstruct_lspace_cover(&q).unwrap().is_obstructed());

        // An L-space surgery on P(-2,3,7) over a non-L-space trefoil surgery.
        let p = builtin("P(-2,3,7)").unwrap();
        let q = CoverQuery::new(p.clone(), slope(9, 1), t.clone(), slope(1, 2));
        assert!(obstruct_lspace_cover(&q).unwrap().is_obstructed());
        // 1-surgery on the trefoil is already minimal (threshold 2g-1 = 1),
        // so the descent test stays silent against it.
        let q = CoverQuery::new(p, slope(9, 1), t, slope(1, 1));
        assert!(!obstruct_lspace_cover(&q).unwrap().is_obstructed());
    }

    #[test]
    fn aggregate_merges_applicable_certificates() {
        let t = builtin("T(2,3)").unwrap();
        let q = CoverQuery::new(t.clone(), slope(1, 2), t, slope(1, 5));
        let v = obstruct_all(&q).unwrap();
        assert!(v.is_obstructed());
        let kinds: Vec<bool> = vec![
            v.certificates()
                .iter()
                .any(|c| matches!(c, Certificate::SameKnotHypotheses { cover_ceil: 2, base_floor: 5 })),
            v.certificates()
                .iter()
                .any(|c| matches!(c, Certificate::DimensionGap { max_cover_dim: 3, min_base_dim: 9 })),
        ];
        assert_eq!(kinds, vec![true, true]);
        assert!(v.certificates().iter().all(Certificate::holds));
    }

    #[test]
    fn aggregate_silent_on_unknot_family() {
        let u = unknot();
        let q = CoverQuery::new(u.clone(), slope(1, 1), u, slope(5, 1));
        let v = obstruct_all(&q).unwrap();
        assert!(!v.is_obstructed());
        assert!(v.certificates().is_empty());
    }

    #[test]
    fn aggregate_two_knot_query_fires_genus_and_more() {
        let t = builtin("T(2,3)").unwrap();
        let p = builtin("P(-2,3,7)").unwrap();
        let q = CoverQuery::new(t, slope(1, 1), p, slope(1, 1));
        let v = obstruct_all(&q).unwrap();
        assert!(v.is_obstructed());
        assert!(v
            .certificates()
            .iter()
            .any(|c| matches!(c, Certificate::GenusHypotheses { cover_bound: 1, base_bound: 9 })));
        assert!(v.certificates().iter().all(Certificate::holds));
    }

    #[test]
    fn pinned_prime_must_be_asserted() {
        let mut t = builtin("T(2,3)").unwrap();
        t.coefficient_note = "2,3".parse().unwrap();
        let q = CoverQuery::new(t.clone(), slope(1, 2), t, slope(1, 5)).with_prime(5);
        assert!(matches!(
            obstruct_all(&q),
            Err(Error::CoefficientMismatch { prime: 5, .. })
        ));
    }
}
