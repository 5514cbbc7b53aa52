//! Exercises the C ABI the way a foreign binding would: through the raw
//! extern "C" functions, handles and status codes.

use std::ffi::{CStr, CString};
use std::ptr;

use floercover_ffi::*;

fn builtin(name: &str) -> *mut FcProfile {
    let name = CString::new(name).unwrap();
    let mut profile = ptr::null_mut();
    let status = unsafe { fc_profile_builtin(name.as_ptr(), &mut profile) };
    assert_eq!(status, FcStatus::Ok);
    assert!(!profile.is_null());
    profile
}

fn last_error() -> String {
    unsafe {
        CStr::from_ptr(fc_last_error_message())
            .to_string_lossy()
            .to_string()
    }
}

#[test]
fn phi_and_bounds_through_the_abi() {
    let mut value = 0u64;
    assert_eq!(unsafe { fc_phi(1, 2, 0, 7, &mut value) }, FcStatus::Ok);
    assert_eq!(value, 2);

    let (mut lo, mut hi) = (0u64, 0u64);
    assert_eq!(unsafe { fc_phi_bounds(-3, 7, &mut lo, &mut hi) }, FcStatus::Ok);
    assert_eq!((lo, hi), (2, 3));

    assert_eq!(
        unsafe { fc_phi_window_sum(3, 1, 0, -1, 1, &mut value) },
        FcStatus::Ok
    );
    assert_eq!(value, 1);
}

#[test]
fn status_codes_and_error_messages() {
    let mut value = 0u64;
    assert_eq!(
        unsafe { fc_phi(0, 1, 0, 0, &mut value) },
        FcStatus::InvalidInput
    );
    assert!(last_error().contains("invalid surgery slope"));

    assert_eq!(
        unsafe { fc_phi(1, 1, 0, 0, ptr::null_mut()) },
        FcStatus::NullPointer
    );

    let name = CString::new("not-a-knot").unwrap();
    let mut profile = ptr::null_mut();
    assert_eq!(
        unsafe { fc_profile_builtin(name.as_ptr(), &mut profile) },
        FcStatus::UnknownProfile
    );
    assert!(last_error().contains("not-a-knot"));

    // Window-sum count past 64 bits reports overflow.
    assert_eq!(
        unsafe { fc_phi_window_sum(1, i64::MAX, 0, 0, 3, &mut value) },
        FcStatus::Overflow
    );
    assert!(last_error().contains("overflow"));
}

#[test]
fn profile_handles_and_dimension_tables() {
    let trefoil = builtin("T(2,3)");
    unsafe {
        assert_eq!(fc_profile_genus(trefoil), 1);
        assert_eq!(fc_profile_nu(trefoil), 1);

        let mut dim = 0u64;
        assert_eq!(fc_hf_dim(trefoil, 1, 2, 0, &mut dim), FcStatus::Ok);
        assert_eq!(dim, 3);

        let mut table = ptr::null_mut();
        assert_eq!(fc_hf_table_new(trefoil, 7, 1, &mut table), FcStatus::Ok);
        assert_eq!(fc_dim_table_class_count(table), 7);
        assert_eq!(fc_dim_table_total(table), 7);
        assert!(fc_dim_table_is_lspace(table));
        for index in 0..7 {
            let mut d = 0u64;
            assert_eq!(fc_dim_table_dim(table, index, &mut d), FcStatus::Ok);
            assert_eq!(d, 1);
        }
        let mut d = 0u64;
        assert_eq!(
            fc_dim_table_dim(table, 7, &mut d),
            FcStatus::OutOfRange
        );
        fc_dim_table_free(table);

        let mut is_lspace = true;
        assert_eq!(
            fc_is_zrz_lspace(trefoil, 1, 2, &mut is_lspace),
            FcStatus::Ok
        );
        assert!(!is_lspace);

        fc_profile_free(trefoil);
    }
}

#[test]
fn profiles_from_documents() {
    let text = CString::new(
        r#"
[[profile]]
name = "wide"
genus = 1
nu = 0
nontrivial = true
mirror_symmetric = true

[profile.a_dims]
"0" = 3
"#,
    )
    .unwrap();
    let name = CString::new("wide").unwrap();
    let mut profile = ptr::null_mut();
    assert_eq!(
        unsafe { fc_profile_from_document(text.as_ptr(), name.as_ptr(), &mut profile) },
        FcStatus::Ok
    );
    let mut dim = 0u64;
    // nu = 0 branch: 1 + phi(1/2, 0, 0) * (3 - 1) = 5.
    assert_eq!(unsafe { fc_hf_dim(profile, 1, 2, 0, &mut dim) }, FcStatus::Ok);
    assert_eq!(dim, 5);
    unsafe { fc_profile_free(profile) };

    let missing = CString::new("absent").unwrap();
    let mut other = ptr::null_mut();
    assert_eq!(
        unsafe { fc_profile_from_document(text.as_ptr(), missing.as_ptr(), &mut other) },
        FcStatus::UnknownProfile
    );
}

#[test]
fn obstruction_verdicts_with_certificates() {
    let trefoil = builtin("T(2,3)");
    unsafe {
        let mut verdict = ptr::null_mut();
        assert_eq!(
            fc_obstruct_all(trefoil, 1, 2, trefoil, 1, 5, 0, &mut verdict),
            FcStatus::Ok
        );
        assert!(fc_verdict_is_obstructed(verdict));
        let count = fc_verdict_certificate_count(verdict);
        assert!(count >= 2);
        let mut seen_same_knot = false;
        let mut seen_gap = false;
        for index in 0..count {
            let mut kind = FcCertificateKind::DimensionGap;
            let (mut a, mut b) = (0u64, 0u64);
            assert_eq!(
                fc_verdict_certificate(verdict, index, &mut kind, &mut a, &mut b),
                FcStatus::Ok
            );
            assert!(a < b, "certificate inequality must re-validate");
            match kind {
                FcCertificateKind::SameKnotHypotheses => {
                    seen_same_knot = true;
                    assert_eq!((a, b), (2, 5));
                }
                FcCertificateKind::DimensionGap => {
                    seen_gap = true;
                    assert_eq!((a, b), (3, 9));
                }
                _ => {}
            }
        }
        assert!(seen_same_knot && seen_gap);
        fc_verdict_free(verdict);

        // Genuine cover pair: clean verdict, no certificates.
        let mut verdict = ptr::null_mut();
        assert_eq!(
            fc_obstruct_all(trefoil, 7, 1, trefoil, 49, 8, 0, &mut verdict),
            FcStatus::Ok
        );
        assert!(!fc_verdict_is_obstructed(verdict));
        assert_eq!(fc_verdict_certificate_count(verdict), 0);
        fc_verdict_free(verdict);

        fc_profile_free(trefoil);
    }
}

#[test]
fn lens_functions_through_the_abi() {
    unsafe {
        let mut has = false;
        let (mut lp, mut lq) = (0u64, 0u64);
        assert_eq!(
            fc_moser_trefoil(7, 1, &mut has, &mut lp, &mut lq),
            FcStatus::Ok
        );
        assert!(has);
        assert_eq!((lp, lq), (7, 4));
        assert_eq!(
            fc_moser_trefoil(8, 1, &mut has, &mut lp, &mut lq),
            FcStatus::Ok
        );
        assert!(!has);

        let mut homeo = false;
        assert_eq!(
            fc_lens_homeomorphic(7, 4, 7, 2, &mut homeo),
            FcStatus::Ok
        );
        assert!(homeo);

        let (mut cp, mut cq) = (0u64, 0u64);
        assert_eq!(
            fc_cyclic_cover(49, 32, 7, &mut has, &mut cp, &mut cq),
            FcStatus::Ok
        );
        assert!(has);
        assert_eq!((cp, cq), (7, 4));

        let mut family = std::mem::zeroed::<FcTrefoilFamily>();
        assert_eq!(fc_trefoil_family(1, 4, 1, &mut family), FcStatus::Ok);
        assert_eq!(family.degree, 25);
        assert!(family.product_identity && family.moser_applies && family.cover_matches);
        assert!(family.degree_is_prime_power);
        assert_eq!((family.prime_base, family.prime_exponent), (5, 2));

        assert_eq!(
            fc_trefoil_family(1, 1, 0, &mut family),
            FcStatus::InvalidInput
        );
    }
}

#[test]
fn generated_header_covers_the_surface() {
    let header = include_str!("../include/floercover.h");
    for symbol in [
        "fc_last_error_message",
        "fc_profile_builtin",
        "fc_profile_lspace_knot",
        "fc_profile_from_document",
        "fc_profile_free",
        "fc_phi",
        "fc_phi_bounds",
        "fc_phi_window_sum",
        "fc_hf_dim",
        "fc_hf_table_new",
        "fc_dim_table_dim",
        "fc_dim_table_free",
        "fc_is_zrz_lspace",
        "fc_obstruct_all",
        "fc_verdict_certificate",
        "fc_verdict_free",
        "fc_moser_trefoil",
        "fc_lens_homeomorphic",
        "fc_cyclic_cover",
        "fc_trefoil_family",
        "FC_STATUS_OVERFLOW",
        "FC_CERTIFICATE_KIND_DIMENSION_GAP",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
}
