//! Knot invariant profiles: the finite input package of the surgery formula.
//!
//! A profile carries the genus g, the non-negative invariant nu, and the
//! homology dimensions of the hook complexes A_s for |s| <= g (dimension 1
//! implicitly outside that range). Profiles are inputs, not computations:
//! nothing here derives them from a knot diagram.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::phi::phi;
use crate::slope::SurgerySlope;

/// Which coefficient primes the dimension data is asserted for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoefficientNote {
    /// Valid over Z/rZ for every prime r.
    AllPrimes,
    /// Asserted only for the listed primes.
    Primes(Vec<u64>),
}

impl CoefficientNote {
    /// True when the data may be used for coefficient prime `r`.
    pub fn asserts(&self, r: u64) -> bool {
        match self {
            CoefficientNote::AllPrimes => true,
            CoefficientNote::Primes(ps) => ps.contains(&r),
        }
    }
}

impl fmt::Display for CoefficientNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientNote::AllPrimes => write!(f, "all primes"),
            CoefficientNote::Primes(ps) => {
                let strs: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", strs.join(","))
            }
        }
    }
}

impl std::str::FromStr for CoefficientNote {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("all primes") || t.eq_ignore_ascii_case("all") {
            return Ok(CoefficientNote::AllPrimes);
        }
        let mut primes = Vec::new();
        for part in t.split(',') {
            let part = part.trim();
            let v: u64 = part.parse().map_err(|_| Error::Parse {
                what: "coefficient note",
                detail: format!("expected \"all primes\" or a comma-separated prime list, got `{s}`"),
            })?;
            primes.push(v);
        }
        if primes.is_empty() {
            return Err(Error::Parse {
                what: "coefficient note",
                detail: "empty prime list".into(),
            });
        }
        primes.sort_unstable();
        primes.dedup();
        Ok(CoefficientNote::Primes(primes))
    }
}

/// The invariant package driving the surgery formula.
///
/// Profiles must be pre-mirrored so that nu >= 0; queries about the mirror
/// knot are served through negative slopes, not by transforming the profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotProfile {
    pub name: String,
    /// Seifert genus g; bounds the support of the dimension data.
    pub genus: u32,
    /// The concordance-type invariant selecting the formula branch; >= 0.
    pub nu: u32,
    /// s -> dim H(A_s) for s in [-g, g]. Every value is >= 1 when valid.
    pub a_dims: BTreeMap<i64, u64>,
    /// False only for the unknot profile.
    pub nontrivial: bool,
    /// Coefficient primes for which a_dims is asserted.
    pub coefficient_note: CoefficientNote,
}

/// A named invariant violation found by [`KnotProfile::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// a_dims must contain exactly the keys -g..=g.
    DimsDomain { missing: Vec<i64>, extra: Vec<i64> },
    /// dim H(A_s) >= 1 for every s.
    DimsPositive { zero_at: Vec<i64> },
    /// If every dimension is 1 on a nontrivial profile then nu must be > 0.
    NuZeroWithTrivialDims,
    /// With all dimensions 1 on a nontrivial profile, nu cannot exceed g.
    NuExceedsGenus { nu: u32, genus: u32 },
    /// A trivial profile must be exactly the unknot package.
    TrivialShape,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DimsDomain { missing, extra } => {
                write!(f, "a_dims domain mismatch")?;
                if !missing.is_empty() {
                    write!(f, "; missing s = {missing:?}")?;
                }
                if !extra.is_empty() {
                    write!(f, "; out-of-range s = {extra:?}")?;
                }
                Ok(())
            }
            Violation::DimsPositive { zero_at } => {
                write!(f, "dim H(A_s) must be >= 1; zero at s = {zero_at:?}")
            }
            Violation::NuZeroWithTrivialDims => write!(
                f,
                "all dims equal 1 on a nontrivial profile requires nu > 0"
            ),
            Violation::NuExceedsGenus { nu, genus } => write!(
                f,
                "nu = {nu} exceeds genus {genus} on an all-ones nontrivial profile"
            ),
            Violation::TrivialShape => write!(
                f,
                "a trivial profile must have genus 0, nu 0 and a_dims {{0: 1}}"
            ),
        }
    }
}

/// Outcome of validating one profile.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid")
        } else {
            let msgs: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", msgs.join("; "))
        }
    }
}

impl KnotProfile {
    /// Checks every structural invariant; reports all violations, never panics.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let g = i64::from(self.genus);

        let missing: Vec<i64> = (-g..=g).filter(|s| !self.a_dims.contains_key(s)).collect();
        let extra: Vec<i64> = self
            .a_dims
            .keys()
            .copied()
            .filter(|s| *s < -g || *s > g)
            .collect();
        if !missing.is_empty() || !extra.is_empty() {
            report.violations.push(Violation::DimsDomain { missing, extra });
        }

        let zero_at: Vec<i64> = self
            .a_dims
            .iter()
            .filter(|(_, d)| **d == 0)
            .map(|(s, _)| *s)
            .collect();
        if !zero_at.is_empty() {
            report.violations.push(Violation::DimsPositive { zero_at });
        }

        let all_ones = self.a_dims.values().all(|d| *d == 1);
        if self.nontrivial && all_ones {
            if self.nu == 0 {
                report.violations.push(Violation::NuZeroWithTrivialDims);
            } else if self.nu > self.genus {
                report.violations.push(Violation::NuExceedsGenus {
                    nu: self.nu,
                    genus: self.genus,
                });
            }
        }

        if !self.nontrivial {
            let unknot_shape = self.genus == 0
                && self.nu == 0
                && self.a_dims.len() == 1
                && self.a_dims.get(&0) == Some(&1);
            if !unknot_shape {
                report.violations.push(Violation::TrivialShape);
            }
        }

        report
    }

    /// Validates and wraps violations into an error.
    pub fn validated(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidProfile {
                name: self.name.clone(),
                violations: report.to_string(),
            })
        }
    }

    /// dim H(A_s), defaulting to 1 outside the stored range.
    pub fn a_dim(&self, s: i64) -> u64 {
        self.a_dims.get(&s).copied().unwrap_or(1)
    }

    /// True when this is a (nontrivial) profile with all dimensions 1 and
    /// nu = g >= 1: the shape every knot with a positive L-space surgery has.
    pub fn is_lspace_knot_profile(&self) -> bool {
        self.nontrivial
            && self.genus >= 1
            && self.nu == self.genus
            && self.a_dims.values().all(|d| *d == 1)
            && self.validate().is_valid()
    }

    /// Hex digest of the profile content; pinned into survey report headers.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.name.as_bytes());
        hasher.update([0u8]);
        hasher.update(self.genus.to_le_bytes());
        hasher.update(self.nu.to_le_bytes());
        hasher.update([u8::from(self.nontrivial)]);
        for (s, d) in &self.a_dims {
            hasher.update(s.to_le_bytes());
            hasher.update(d.to_le_bytes());
        }
        hasher.update(self.coefficient_note.to_string().as_bytes());
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// The profile of a knot admitting a positive L-space surgery: all dims 1,
/// nu = g. Genus 0 is rejected (that would be the unknot; use [`unknot`]).
pub fn lspace_knot_profile(name: &str, genus: u32) -> Result<KnotProfile> {
    if genus == 0 {
        return Err(Error::InvalidInput(
            "L-space knot profile requires genus >= 1 (the unknot is the built-in `unknot`)"
                .into(),
        ));
    }
    let g = i64::from(genus);
    let a_dims = (-g..=g).map(|s| (s, 1u64)).collect();
    Ok(KnotProfile {
        name: name.to_string(),
        genus,
        nu: genus,
        a_dims,
        nontrivial: true,
        coefficient_note: CoefficientNote::AllPrimes,
    })
}

/// The trivial-knot profile.
pub fn unknot() -> KnotProfile {
    KnotProfile {
        name: "unknot".to_string(),
        genus: 0,
        nu: 0,
        a_dims: [(0i64, 1u64)].into_iter().collect(),
        nontrivial: false,
        coefficient_note: CoefficientNote::AllPrimes,
    }
}

/// Looks up a built-in profile: `unknot`, `T(2,N)` for odd N >= 3 (genus
/// (N-1)/2), or `P(-2,3,7)` (genus 5).
pub fn builtin(name: &str) -> Result<KnotProfile> {
    let trimmed = name.trim();
    if trimmed == "unknot" {
        return Ok(unknot());
    }
    if trimmed == "P(-2,3,7)" {
        return lspace_knot_profile(trimmed, 5);
    }
    if let Some(rest) = trimmed.strip_prefix("T(2,") {
        if let Some(num) = rest.strip_suffix(')') {
            if let Ok(n) = num.trim().parse::<u32>() {
                if n >= 3 && n % 2 == 1 {
                    return lspace_knot_profile(trimmed, (n - 1) / 2);
                }
            }
        }
    }
    Err(Error::UnknownProfile {
        name: name.to_string(),
    })
}

/// The weighted sum S = sum over s of phi(slope, i, s) * (dim H(A_s) - 1).
///
/// Only |s| <= g contributes, since the dimension is 1 elsewhere. For every
/// valid profile the sum is non-negative; it vanishes exactly on all-ones
/// profiles (in particular on L-space knot profiles).
pub fn big_s(profile: &KnotProfile, slope: SurgerySlope, i: i64) -> Result<u64> {
    let mut total: i128 = 0;
    for (&s, &dim) in &profile.a_dims {
        if dim <= 1 {
            continue;
        }
        let count = i128::from(phi(slope, i, s));
        let weight = i128::from(dim) - 1;
        let term = count
            .checked_mul(weight)
            .ok_or(Error::Overflow("weighted dimension sum term"))?;
        total = total
            .checked_add(term)
            .ok_or(Error::Overflow("weighted dimension sum"))?;
    }
    u64::try_from(total).map_err(|_| Error::Overflow("weighted dimension sum result"))
}

// ---------------------------------------------------------------------------
// Profile document format
// ---------------------------------------------------------------------------

/// On-disk record; see the repository README for the grammar.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileRecord {
    name: String,
    genus: u32,
    nu: u32,
    nontrivial: bool,
    #[serde(default)]
    a_dims: BTreeMap<String, u64>,
    #[serde(default)]
    mirror_symmetric: bool,
    #[serde(default)]
    coefficient_note: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileDocument {
    #[serde(rename = "profile", default)]
    profiles: Vec<ProfileRecord>,
}

fn record_to_profile(rec: ProfileRecord) -> Result<KnotProfile> {
    let g = i64::from(rec.genus);
    let mut dims: BTreeMap<i64, u64> = BTreeMap::new();
    for (key, value) in &rec.a_dims {
        let s: i64 = key.trim().parse().map_err(|_| Error::Parse {
            what: "profile a_dims",
            detail: format!("profile `{}`: key `{key}` is not an integer", rec.name),
        })?;
        if rec.mirror_symmetric && s < 0 {
            return Err(Error::Parse {
                what: "profile a_dims",
                detail: format!(
                    "profile `{}`: negative key {s} not allowed with mirror_symmetric = true",
                    rec.name
                ),
            });
        }
        if s < -g || s > g {
            return Err(Error::Parse {
                what: "profile a_dims",
                detail: format!("profile `{}`: key {s} outside [-{g}, {g}]", rec.name),
            });
        }
        dims.insert(s, *value);
    }
    if rec.mirror_symmetric {
        for s in 1..=g {
            if let Some(d) = dims.get(&s).copied() {
                dims.insert(-s, d);
            }
        }
    }
    // Unspecified in-range entries default to dimension 1.
    for s in -g..=g {
        dims.entry(s).or_insert(1);
    }
    let coefficient_note = match rec.coefficient_note {
        Some(s) => s.parse()?,
        None => CoefficientNote::AllPrimes,
    };
    Ok(KnotProfile {
        name: rec.name,
        genus: rec.genus,
        nu: rec.nu,
        a_dims: dims,
        nontrivial: rec.nontrivial,
        coefficient_note,
    })
}

/// Parses a profile document without insisting on validity; each profile is
/// paired with its validation report. Parse errors still fail.
pub fn parse_profiles(text: &str) -> Result<Vec<(KnotProfile, ValidationReport)>> {
    let doc: ProfileDocument = toml::from_str(text).map_err(|e| Error::Parse {
        what: "profile document",
        detail: e.to_string(),
    })?;
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for rec in doc.profiles {
        if !seen.insert(rec.name.clone()) {
            return Err(Error::Parse {
                what: "profile document",
                detail: format!("duplicate profile name `{}`", rec.name),
            });
        }
        let profile = record_to_profile(rec)?;
        let report = profile.validate();
        out.push((profile, report));
    }
    Ok(out)
}

/// Parses a profile document and requires every profile to validate.
pub fn load_profiles(text: &str) -> Result<Vec<KnotProfile>> {
    let parsed = parse_profiles(text)?;
    let mut bad = Vec::new();
    for (profile, report) in &parsed {
        if !report.is_valid() {
            bad.push(format!("{}: {report}", profile.name));
        }
    }
    if !bad.is_empty() {
        return Err(Error::Parse {
            what: "profile document",
            detail: format!("invalid profiles: {}", bad.join(" | ")),
        });
    }
    Ok(parsed.into_iter().map(|(p, _)| p).collect())
}

/// Serializes profiles into the document format accepted by
/// [`load_profiles`]. Symmetric dimension data is written with the
/// mirror shorthand; asymmetric data is written with explicit signed keys.
pub fn serialize_profiles(profiles: &[KnotProfile]) -> String {
    let records: Vec<ProfileRecord> = profiles
        .iter()
        .map(|p| {
            let g = i64::from(p.genus);
            let symmetric = (1..=g).all(|s| p.a_dim(s) == p.a_dim(-s));
            let mut a_dims = BTreeMap::new();
            for (&s, &d) in &p.a_dims {
                if d == 1 || (symmetric && s < 0) {
                    continue; // defaults reconstruct these
                }
                a_dims.insert(s.to_string(), d);
            }
            ProfileRecord {
                name: p.name.clone(),
                genus: p.genus,
                nu: p.nu,
                nontrivial: p.nontrivial,
                a_dims,
                mirror_symmetric: symmetric,
                coefficient_note: Some(p.coefficient_note.to_string()),
            }
        })
        .collect();
    toml::to_string(&ProfileDocument { profiles: records })
        .expect("profile records serialize to TOML")
}
