//! C ABI for the floercover library.
//!
//! Conventions:
//!
//! - Every fallible function returns an [`FcStatus`]; `FC_STATUS_OK` (0)
//!   means success. On any other status a thread-local message is set and
//!   can be read with [`fc_last_error_message`].
//! - Results are written through out-pointers, which must be non-null.
//! - Opaque handles ([`FcProfile`], [`FcDimTable`], [`FcVerdict`]) are
//!   created and freed only by this library; free each with its matching
//!   `fc_*_free` function. Freeing a null pointer is a no-op.
//! - The generated header lives at `include/floercover.h`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use floercover::{
    builtin, cyclic_cover, hf_dim, hf_table, lens_homeomorphic, load_profiles,
    lspace_knot_profile, moser_trefoil, obstruct_all, phi, phi_bounds, phi_window_sum,
    verify_trefoil_family, Certificate, CoverQuery, Error, HFDimTable, KnotProfile, LensSpace,
    ObstructionVerdict, Sign, SurgerySlope,
};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FcStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Arguments violate a precondition (bad slope, wrong profile kind, ...).
    InvalidInput = 2,
    /// The profile name is not in the built-in catalog or the document.
    UnknownProfile = 3,
    /// The profile fails its structural invariants.
    InvalidProfile = 4,
    /// The document could not be parsed.
    ParseError = 5,
    /// An intermediate value left the exact integer range.
    Overflow = 6,
    /// A string argument was not valid UTF-8.
    Utf8Error = 7,
    /// An index argument was out of range.
    OutOfRange = 8,
    /// The library panicked; this indicates a bug in floercover.
    InternalPanic = 9,
}

/// Discriminants for certificates reported by [`fc_verdict_certificate`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FcCertificateKind {
    /// values: (ceil(q/p) on the cover, floor(q'/p') on the base).
    SameKnotHypotheses = 0,
    /// values: ((2g-1)ceil(q/p), (2g'-1)floor(q'/p')).
    GenusHypotheses = 1,
    /// values: (max dimension over the cover, min dimension over the base).
    DimensionGap = 2,
    /// values: (cover is L-space as 0/1, base is L-space as 0/1).
    LspaceContradiction = 3,
}

/// Opaque knot-invariant profile handle.
pub struct FcProfile(KnotProfile);

/// Opaque per-surgery dimension table handle.
pub struct FcDimTable(HFDimTable);

/// Opaque obstruction verdict handle.
pub struct FcVerdict(ObstructionVerdict);

/// Flat result record for one trefoil lens-cover family member.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct FcTrefoilFamily {
    pub p: u64,
    pub q_prime: u64,
    pub p_prime: u64,
    /// Number of sheets, 6k + 1.
    pub degree: u64,
    pub cover_p: u64,
    pub cover_q: u64,
    pub base_p: u64,
    pub base_q: u64,
    /// p' = p * (6k + 1).
    pub product_identity: bool,
    /// Both slopes are Moser slopes with the expected lens spaces.
    pub moser_applies: bool,
    /// The cyclic cover of the base is homeomorphic to the cover.
    pub cover_matches: bool,
    /// 6k + 1 is r^n for the prime below.
    pub degree_is_prime_power: bool,
    /// r, when the degree is a prime power (0 otherwise).
    pub prime_base: u64,
    /// n, when the degree is a prime power (0 otherwise).
    pub prime_exponent: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|c| *c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

/// Message for the most recent non-OK status on this thread. The pointer is
/// valid until the next failing call on the same thread. Never null.
#[no_mangle]
pub extern "C" fn fc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

fn status_of(err: &Error) -> FcStatus {
    match err {
        Error::Overflow(_) => FcStatus::Overflow,
        Error::UnknownProfile { .. } => FcStatus::UnknownProfile,
        Error::InvalidProfile { .. } => FcStatus::InvalidProfile,
        Error::Parse { .. } => FcStatus::ParseError,
        Error::InvalidSlope { .. }
        | Error::InvalidInput(_)
        | Error::CoefficientMismatch { .. }
        | Error::Io { .. } => FcStatus::InvalidInput,
    }
}

fn fail(err: Error) -> FcStatus {
    let status = status_of(&err);
    set_error(&err.to_string());
    status
}

fn guard(f: impl FnOnce() -> FcStatus) -> FcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic in floercover");
            FcStatus::InternalPanic
        }
    }
}

fn null_fail(what: &str) -> FcStatus {
    set_error(&format!("null pointer: {what}"));
    FcStatus::NullPointer
}

/// # Safety
/// `ptr` must be null or a NUL-terminated C string.
unsafe fn cstr<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, FcStatus> {
    if ptr.is_null() {
        return Err(null_fail(what));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        FcStatus::Utf8Error
    })
}

fn make_slope(p: i64, q: i64) -> Result<SurgerySlope, FcStatus> {
    SurgerySlope::new(p, q).map_err(fail)
}

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

/// Looks up a built-in profile (`unknot`, `T(2,N)` for odd N >= 3,
/// `P(-2,3,7)`). On success writes a new handle to `out`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_profile_builtin(
    name: *const c_char,
    out: *mut *mut FcProfile,
) -> FcStatus {
    guard(|| {
        if out.is_null() {
            return null_fail("out");
        }
        let name = match cstr(name, "name") {
            Ok(s) => s,
            Err(status) => return status,
        };
        match builtin(name) {
            Ok(profile) => {
                *out = Box::into_raw(Box::new(FcProfile(profile)));
                FcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Builds the profile of a knot with a positive L-space surgery: all hook
/// homology dimensions 1, nu = genus. Genus must be >= 1.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_profile_lspace_knot(
    name: *const c_char,
    genus: u32,
    out: *mut *mut FcProfile,
) -> FcStatus {
    guard(|| {
        if out.is_null() {
            return null_fail("out");
        }
        let name = match cstr(name, "name") {
            Ok(s) => s,
            Err(status) => return status,
        };
        match lspace_knot_profile(name, genus) {
            Ok(profile) => {
                *out = Box::into_raw(Box::new(FcProfile(profile)));
                FcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Parses a profile document (the TOML format described in the README) and
/// extracts the profile named `name`.
///
/// # Safety
/// `text` and `name` must be NUL-terminated strings; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fc_profile_from_document(
    text: *const c_char,
    name: *const c_char,
    out: *mut *mut FcProfile,
) -> FcStatus {
    guard(|| {
        if out.is_null() {
            return null_fail("out");
        }
        let text = match cstr(text, "text") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let name = match cstr(name, "name") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let profiles = match load_profiles(text) {
            Ok(ps) => ps,
            Err(e) => return fail(e),
        };
        match profiles.into_iter().find(|p| p.name == name) {
            Some(profile) => {
                *out = Box::into_raw(Box::new(FcProfile(profile)));
                FcStatus::Ok
            }
            None => fail(Error::UnknownProfile {
                name: name.to_string(),
            }),
        }
    })
}

/// Genus of the profile.
///
/// # Safety
/// `profile` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn fc_profile_genus(profile: *const FcProfile) -> u32 {
    if profile.is_null() {
        return 0;
    }
    (*profile).0.genus
}

/// The invariant nu of the profile.
///
/// # Safety
/// `profile` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn fc_profile_nu(profile: *const FcProfile) -> u32 {
    if profile.is_null() {
        return 0;
    }
    (*profile).0.nu
}

/// Frees a profile handle. Null is ignored.
///
/// # Safety
/// `profile` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn fc_profile_free(profile: *mut FcProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}

// ---------------------------------------------------------------------------
// Counting function
// ---------------------------------------------------------------------------

/// phi(p/q, i, s): the number of integers n with floor((i + p*n)/q) = s.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_phi(p: i64, q: i64, i: i64, s: i64, out: *mut u64) -> FcStatus {
    guard(|| {
        if out.is_null() {
            return null_fail("out");
        }
        match make_slope(p, q) {
            Ok(slope) => {
                *out = phi(slope, i, s);
                FcStatus::Ok
            }
            Err(status) => status,
        }
    })
}

/// The universal bounds floor(|q/p|) and ceil(|q/p|) on phi.
///
/// # Safety
/// `out_lower` and `out_upper` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn fc_phi_bounds(
    p: i64,
    q: i64,
    out_lower: *mut u64,
    out_upper: *mut u64,
) -> FcStatus {
    guard(|| {
        if out_lower.is_null() || out_upper.is_null() {
            return null_fail("out_lower/out_upper");
        }
        match make_slope(p, q) {
            Ok(slope) => {
                let (lo, hi) = phi_bounds(slope);
                *out_lower = lo;
                *out_upper = hi;
                FcStatus::Ok
            }
            Err(status) => status,
        }
    })
}

/// Sum of phi over s_lo <= s <= s_hi, computed as one interval count.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_phi_window_sum(
    p: i64,
    q: i64,
    i: i64,
    s_lo: i64,
    s_hi: i64,
    out: *mut u64,
) -> FcStatus {
    guard(|| {
        if out.is_null() {
            return null_fail("out");
        }
        let slope = match make_slope(p, q) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match phi_window_sum(slope, i, s_lo, s_hi) {
            Ok(v) => {
                *out = v;
                FcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

// ---------------------------------------------------------------------------
// Surgery dimensions
// ---------------------------------------------------------------------------

/// Floer dimension of S^3_{p/q}(K) in the Spin^c class labeled i.
///
/// # Safety
/// `profile` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fc_hf_dim(
    profile: *const FcProfile,
    p: i64,
    q: i64,
    i: i64,
    out: *mut u64,
) -> FcStatus {
    guard(|| {
        if profile.is_null() {
            return null_fail("profile");
        }
        if out.is_null() {
            return null_fail("out");
        }
        let slope = match make_slope(p, q) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match hf_dim(&(*profile).0, slope, i) {
            Ok(v) => {
                *out = v;
                FcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Computes the full dimension table over all |p| Spin^c classes.
///
/// # Safety
/// `profile` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fc_hf_table_new(
    profile: *const FcProfile,
    p: i64,
    q: i64,
    out: *mut *mut FcDimTable,
) -> FcStatus {
    guard(|| {
        if profile.is_null() {
            return null_fail("profile");
        }
        if out.is_null() {
            return null_fail("out");
        }
        let slope = match make_slope(p, q) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match hf_table(&(*profile).0, slope) {
            Ok(table) => {
                *out = Box::into_raw(Box::new(FcDimTable(table)));
                FcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Number of Spin^c classes (|p|) in the table.
///
/// # Safety
/// `table` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_dim_table_class_count(table: *const FcDimTable) -> u64 {
    if table.is_null() {
        return 0;
    }
    (*table).0.dims().len() as u64
}

/// Dimension in the class with canonical residue `index`.
///
/// # Safety
/// `table` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fc_dim_table_dim(
    table: *const FcDimTable,
    index: u64,
    out: *mut u64,
) -> FcStatus {
    guard(|| {
        if table.is_null() {
            return null_fail("table");
        }
        if out.is_null() {
            return null_fail("out");
        }
        let dims = (*table).0.dims();
        match usize::try_from(index).ok().and_then(|i| dims.get(i)) {
            Some(d) => {
                *out = *d;
                FcStatus::Ok
            }
            None => {
                set_error(&format!(
                    "class index {index} out of range 0..{}",
                    dims.len()
                ));
                FcStatus::OutOfRange
            }
        }
    })
}

/// Sum of the dimensions over all classes.
///
/// # Safety
/// `table` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_dim_table_total(table: *const FcDimTable) -> u64 {
    if table.is_null() {
        return 0;
    }
    (*table).0.total()
}

/// True iff every class has dimension 1 (total = |H_1| = |p|).
///
/// # Safety
/// `table` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_dim_table_is_lspace(table: *const FcDimTable) -> bool {
    if table.is_null() {
        return false;
    }
    (*table).0.is_lspace()
}

/// Frees a dimension-table handle. Null is ignored.
///
/// # Safety
/// `table` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn fc_dim_table_free(table: *mut FcDimTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Whether S^3_{p/q}(K) is a Z/rZ-L-space for the primes the profile asserts.
///
/// # Safety
/// `profile` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fc_is_zrz_lspace(
    profile: *const FcProfile,
    p: i64,
    q: i64,
    out: *mut bool,
) -> FcStatus {
    guard(|| {
        if profile.is_null() {
            return null_fail("profile");
        }
        if out.is_null() {
            return null_fail("out");
        }
        let slope = match make_slope(p, q) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match hf_table(&(*profile).0, slope) {
            Ok(table) => {
                *out = table.is_lspace();
                FcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

// ---------------------------------------------------------------------------
// Obstructions
// ---------------------------------------------------------------------------

/// Runs every applicable obstruction test on the query "can cover_p/cover_q
/// surgery on `cover` be an r^n-sheeted regular cover of base_p/base_q
/// surgery on `base`?". `prime` = 0 leaves the coefficient prime unpinned.
///
/// # Safety
/// `cover` and `base` must be live handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn fc_obstruct_all(
    cover: *const FcProfile,
    cover_p: i64,
    cover_q: i64,
    base: *const FcProfile,
    base_p: i64,
    base_q: i64,
    prime: u64,
    out: *mut *mut FcVerdict,
) -> FcStatus {
    guard(|| {
        if cover.is_null() || base.is_null() {
            return null_fail("cover/base profile");
        }
        if out.is_null() {
            return null_fail("out");
        }
        let cover_slope = match make_slope(cover_p, cover_q) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let base_slope = match make_slope(base_p, base_q) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let mut query = CoverQuery::new(
            (*cover).0.clone(),
            cover_slope,
            (*base).0.clone(),
            base_slope,
        );
        if prime != 0 {
            query = query.with_prime(prime);
        }
        match obstruct_all(&query) {
            Ok(verdict) => {
                *out = Box::into_raw(Box::new(FcVerdict(verdict)));
                FcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// True when the verdict certifies that no such cover exists.
///
/// # Safety
/// `verdict` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_verdict_is_obstructed(verdict: *const FcVerdict) -> bool {
    if verdict.is_null() {
        return false;
    }
    (*verdict).0.is_obstructed()
}

/// Number of certificates attached to the verdict.
///
/// # Safety
/// `verdict` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_verdict_certificate_count(verdict: *const FcVerdict) -> u64 {
    if verdict.is_null() {
        return 0;
    }
    (*verdict).0.certificates().len() as u64
}

/// Reads certificate `index` as (kind, value_a, value_b); the meaning of the
/// two values per kind is documented on [`FcCertificateKind`].
///
/// # Safety
/// `verdict` must be a live handle; out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fc_verdict_certificate(
    verdict: *const FcVerdict,
    index: u64,
    out_kind: *mut FcCertificateKind,
    out_value_a: *mut u64,
    out_value_b: *mut u64,
) -> FcStatus {
    guard(|| {
        if verdict.is_null() {
            return null_fail("verdict");
        }
        if out_kind.is_null() || out_value_a.is_null() || out_value_b.is_null() {
            return null_fail("out_kind/out_value_a/out_value_b");
        }
        let certs = (*verdict).0.certificates();
        let cert = match usize::try_from(index).ok().and_then(|i| certs.get(i)) {
            Some(c) => c,
            None => {
                set_error(&format!(
                    "certificate index {index} out of range 0..{}",
                    certs.len()
                ));
                return FcStatus::OutOfRange;
            }
        };
        let (kind, a, b) = match cert {
            Certificate::SameKnotHypotheses {
                cover_ceil,
                base_floor,
            } => (FcCertificateKind::SameKnotHypotheses, *cover_ceil, *base_floor),
            Certificate::GenusHypotheses {
                cover_bound,
                base_bound,
            } => (FcCertificateKind::GenusHypotheses, *cover_bound, *base_bound),
            Certificate::DimensionGap {
                max_cover_dim,
                min_base_dim,
            } => (FcCertificateKind::DimensionGap, *max_cover_dim, *min_base_dim),
            Certificate::LspaceContradiction {
                cover_is_lspace,
                base_is_lspace,
            } => (
                FcCertificateKind::LspaceContradiction,
                u64::from(*cover_is_lspace),
                u64::from(*base_is_lspace),
            ),
        };
        *out_kind = kind;
        *out_value_a = a;
        *out_value_b = b;
        FcStatus::Ok
    })
}

/// Frees a verdict handle. Null is ignored.
///
/// # Safety
/// `verdict` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn fc_verdict_free(verdict: *mut FcVerdict) {
    if !verdict.is_null() {
        drop(Box::from_raw(verdict));
    }
}

// ---------------------------------------------------------------------------
// Lens spaces
// ---------------------------------------------------------------------------

/// Moser's lens space for p/q-surgery on the right-handed trefoil. Writes
/// whether a lens space exists to `out_has`; the normalized L(p', q') to the
/// other out-pointers when it does.
///
/// # Safety
/// All out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fc_moser_trefoil(
    p: i64,
    q: i64,
    out_has: *mut bool,
    out_lens_p: *mut u64,
    out_lens_q: *mut u64,
) -> FcStatus {
    guard(|| {
        if out_has.is_null() || out_lens_p.is_null() || out_lens_q.is_null() {
            return null_fail("out_has/out_lens_p/out_lens_q");
        }
        let slope = match make_slope(p, q) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match moser_trefoil(slope) {
            Some(lens) => {
                *out_has = true;
                *out_lens_p = lens.p();
                *out_lens_q = lens.q();
            }
            None => {
                *out_has = false;
                *out_lens_p = 0;
                *out_lens_q = 0;
            }
        }
        FcStatus::Ok
    })
}

/// Unoriented homeomorphism test for L(p1, q1) and L(p2, q2).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_lens_homeomorphic(
    p1: u64,
    q1: i64,
    p2: u64,
    q2: i64,
    out: *mut bool,
) -> FcStatus {
    guard(|| {
        if out.is_null() {
            return null_fail("out");
        }
        let a = match LensSpace::new(p1, q1) {
            Ok(l) => l,
            Err(e) => return fail(e),
        };
        let b = match LensSpace::new(p2, q2) {
            Ok(l) => l,
            Err(e) => return fail(e),
        };
        *out = lens_homeomorphic(a, b);
        FcStatus::Ok
    })
}

/// Degree-d cyclic cover of L(p, q); defined when d divides p.
///
/// # Safety
/// All out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fc_cyclic_cover(
    p: u64,
    q: i64,
    degree: u64,
    out_has: *mut bool,
    out_cover_p: *mut u64,
    out_cover_q: *mut u64,
) -> FcStatus {
    guard(|| {
        if out_has.is_null() || out_cover_p.is_null() || out_cover_q.is_null() {
            return null_fail("out_has/out_cover_p/out_cover_q");
        }
        let base = match LensSpace::new(p, q) {
            Ok(l) => l,
            Err(e) => return fail(e),
        };
        match cyclic_cover(base, degree) {
            Some(cover) => {
                *out_has = true;
                *out_cover_p = cover.p();
                *out_cover_q = cover.q();
            }
            None => {
                *out_has = false;
                *out_cover_p = 0;
                *out_cover_q = 0;
            }
        }
        FcStatus::Ok
    })
}

/// Verifies one member of the trefoil lens-cover family. `sign` must be
/// +1 (slopes (6q+1)/q) or -1 (slopes (6q-1)/q); q and k must be >= 1.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fc_trefoil_family(
    q: u64,
    k: u64,
    sign: i32,
    out: *mut FcTrefoilFamily,
) -> FcStatus {
    guard(|| {
        if out.is_null() {
            return null_fail("out");
        }
        let sign = match sign {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            other => {
                set_error(&format!("sign must be +1 or -1 (got {other})"));
                return FcStatus::InvalidInput;
            }
        };
        match verify_trefoil_family(q, k, sign) {
            Ok(record) => {
                let (prime_base, prime_exponent) = record.prime_power.unwrap_or((0, 0));
                *out = FcTrefoilFamily {
                    p: record.p,
                    q_prime: record.q_prime,
                    p_prime: record.p_prime,
                    degree: record.degree,
                    cover_p: record.cover.p(),
                    cover_q: record.cover.q(),
                    base_p: record.base.p(),
                    base_q: record.base.q(),
                    product_identity: record.product_identity,
                    moser_applies: record.moser_applies,
                    cover_matches: record.cover_matches,
                    degree_is_prime_power: record.degree_is_prime_power,
                    prime_base,
                    prime_exponent,
                };
                FcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}
