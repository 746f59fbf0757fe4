//! Drives the C ABI the way a foreign caller would: everything through raw
//! pointers and status codes, strings freed through the library.

use std::ffi::{CStr, CString};
use std::ptr;

use qpath_ffi::*;

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let owned = CStr::from_ptr(s).to_str().unwrap().to_owned();
    qpath_string_free(s);
    owned
}

unsafe fn last_error() -> String {
    CStr::from_ptr(qpath_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(qpath_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn gauss_binom_round_trip() {
    unsafe {
        let mut p: *mut QPathPoly = ptr::null_mut();
        assert_eq!(qpath_gauss_binom(4, 2, &mut p), QPathStatus::Ok);

        let mut deg = 0u64;
        assert_eq!(qpath_poly_degree(p, &mut deg), QPathStatus::Ok);
        assert_eq!(deg, 4);

        // 1 + q + 2q^2 + q^3 + q^4, and zero beyond the degree.
        let coeffs: Vec<String> =
            (0..=5).map(|i| {
                let mut s = ptr::null_mut();
                assert_eq!(qpath_poly_coeff(p, i, &mut s), QPathStatus::Ok);
                take_string(s)
            }).collect();
        assert_eq!(coeffs, ["1", "1", "2", "1", "1", "0"]);

        let mut total = ptr::null_mut();
        assert_eq!(qpath_poly_value_at_one(p, &mut total), QPathStatus::Ok);
        assert_eq!(take_string(total), "6");

        qpath_poly_free(p);
    }
}

#[test]
fn central_factorization_through_the_abi() {
    // {2n brack n} = (1 + q^n) [2n-1]_q ({2n-2 brack n-1} / [n]_q) at n = 3:
    // divide out [3]_q from {4 brack 2}, multiply by [5]_q, compare totals.
    unsafe {
        let mut central = ptr::null_mut();
        assert_eq!(qpath_gauss_binom(4, 2, &mut central), QPathStatus::Ok);

        let mut q3 = ptr::null_mut();
        assert_eq!(qpath_q_analogue(3, &mut q3), QPathStatus::Ok);

        let mut quotient = ptr::null_mut();
        assert_eq!(qpath_poly_exact_div(central, q3, &mut quotient), QPathStatus::Ok);

        let mut q5 = ptr::null_mut();
        assert_eq!(qpath_q_analogue(5, &mut q5), QPathStatus::Ok);
        let mut product = ptr::null_mut();
        assert_eq!(qpath_poly_mul(quotient, q5, &mut product), QPathStatus::Ok);

        let mut at_one = ptr::null_mut();
        assert_eq!(qpath_poly_value_at_one(product, &mut at_one), QPathStatus::Ok);
        // 6/3 * 5 = 10, half of C(6,3).
        assert_eq!(take_string(at_one), "10");

        for h in [central, q3, quotient, q5, product] {
            qpath_poly_free(h);
        }
    }
}

#[test]
fn exact_division_failure_reports_remainder() {
    unsafe {
        let mut central = ptr::null_mut();
        assert_eq!(qpath_gauss_binom(4, 2, &mut central), QPathStatus::Ok);
        let mut q4 = ptr::null_mut();
        assert_eq!(qpath_q_analogue(4, &mut q4), QPathStatus::Ok);

        let mut quotient = ptr::null_mut();
        assert_eq!(
            qpath_poly_exact_div(central, q4, &mut quotient),
            QPathStatus::NotDivisible
        );
        assert!(quotient.is_null());
        assert!(last_error().contains("not divisible"));

        qpath_poly_free(central);
        qpath_poly_free(q4);
    }
}

#[test]
fn constant_polynomial_observers() {
    unsafe {
        // [1]_q is the constant 1: nonzero, degree 0.
        let mut one = ptr::null_mut();
        assert_eq!(qpath_q_analogue(1, &mut one), QPathStatus::Ok);
        let mut flag = true;
        assert_eq!(qpath_poly_is_zero(one, &mut flag), QPathStatus::Ok);
        assert!(!flag);
        let mut deg = 9u64;
        assert_eq!(qpath_poly_degree(one, &mut deg), QPathStatus::Ok);
        assert_eq!(deg, 0);
        qpath_poly_free(one);

        // m = 0 is rejected before the output pointer matters.
        let mut p = ptr::null_mut();
        assert_eq!(qpath_q_analogue(0, &mut p), QPathStatus::InvalidArgument);
        assert!(p.is_null());
        assert!(last_error().contains("m >= 1"));
        // A valid m with a null output slot is a pointer error.
        assert_eq!(qpath_q_analogue(2, ptr::null_mut()), QPathStatus::NullPointer);
    }
}

#[test]
fn equal_content_tracks_divisibility() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(qpath_gauss_binom(10, 4, &mut p), QPathStatus::Ok);

        let mut even = false;
        assert_eq!(qpath_poly_equal_content(p, 5, &mut even), QPathStatus::Ok);
        assert!(even);
        assert_eq!(qpath_poly_equal_content(p, 10, &mut even), QPathStatus::Ok);
        assert!(!even);

        let mut d = ptr::null_mut();
        assert_eq!(qpath_poly_content_sums(p, 5, &mut d), QPathStatus::Ok);
        let mut uniform = false;
        assert_eq!(qpath_dist_is_uniform(d, &mut uniform), QPathStatus::Ok);
        assert!(uniform);
        let mut count = ptr::null_mut();
        assert_eq!(qpath_dist_count(d, 0, &mut count), QPathStatus::Ok);
        assert_eq!(take_string(count), "42");

        qpath_dist_free(d);
        qpath_poly_free(p);
    }
}

#[test]
fn area_distribution_end_to_end() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(qpath_area_distribution(4, 6, 10, &mut d), QPathStatus::Ok);

        let mut m = 0u64;
        assert_eq!(qpath_dist_modulus(d, &mut m), QPathStatus::Ok);
        assert_eq!(m, 10);
        let mut classes = 0u64;
        assert_eq!(qpath_dist_class_count(d, &mut classes), QPathStatus::Ok);
        assert_eq!(classes, 10);
        let mut first = 7u64;
        assert_eq!(qpath_dist_first_residue(d, &mut first), QPathStatus::Ok);
        assert_eq!(first, 0);

        let counts: Vec<String> = (0..10)
            .map(|i| {
                let mut s = ptr::null_mut();
                assert_eq!(qpath_dist_count(d, i, &mut s), QPathStatus::Ok);
                take_string(s)
            })
            .collect();
        let expect: Vec<String> = [22, 20, 22, 20, 22, 20, 22, 20, 22, 20]
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(counts, expect);

        let mut total = ptr::null_mut();
        assert_eq!(qpath_dist_total(d, &mut total), QPathStatus::Ok);
        assert_eq!(take_string(total), "210");

        let mut s = ptr::null_mut();
        assert_eq!(qpath_dist_count(d, 10, &mut s), QPathStatus::InvalidArgument);
        assert!(last_error().contains("out of range"));

        qpath_dist_free(d);
    }
}

#[test]
fn subset_distributions() {
    unsafe {
        // Sums of 3-subsets of {1..6} mod 5: C(6,3)/5 = 4 per class.
        let mut sums = ptr::null_mut();
        assert_eq!(qpath_subset_sum_distribution(6, 3, 5, &mut sums), QPathStatus::Ok);
        let mut uniform = false;
        assert_eq!(qpath_dist_is_uniform(sums, &mut uniform), QPathStatus::Ok);
        assert!(uniform);
        qpath_dist_free(sums);

        // Products of 3-subsets of the units mod 5, classes labelled from 1.
        let mut prods = ptr::null_mut();
        assert_eq!(qpath_subset_product_distribution(5, 3, &mut prods), QPathStatus::Ok);
        let mut first = 0u64;
        assert_eq!(qpath_dist_first_residue(prods, &mut first), QPathStatus::Ok);
        assert_eq!(first, 1);
        qpath_dist_free(prods);

        // gcd(2, 4) > 1 violates the stated precondition.
        let mut bad = ptr::null_mut();
        assert_eq!(
            qpath_subset_product_distribution(5, 2, &mut bad),
            QPathStatus::Precondition
        );
        assert!(bad.is_null());

        // Major index marginals match area marginals.
        let mut maj = ptr::null_mut();
        assert_eq!(qpath_maj_distribution(3, 7, &mut maj), QPathStatus::Ok);
        let mut area = ptr::null_mut();
        assert_eq!(qpath_area_distribution(3, 3, 7, &mut area), QPathStatus::Ok);
        for i in 0..7 {
            let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
            assert_eq!(qpath_dist_count(maj, i, &mut a), QPathStatus::Ok);
            assert_eq!(qpath_dist_count(area, i, &mut b), QPathStatus::Ok);
            assert_eq!(take_string(a), take_string(b));
        }
        qpath_dist_free(maj);
        qpath_dist_free(area);
    }
}

#[test]
fn path_and_word_statistics() {
    unsafe {
        let path = CString::new("ENNENEEN").unwrap();
        let mut area = 0u64;
        assert_eq!(qpath_path_area(path.as_ptr(), &mut area), QPathStatus::Ok);

        let word = CString::new("01101001").unwrap();
        let mut inv = 0u64;
        assert_eq!(qpath_word_inversions(word.as_ptr(), &mut inv), QPathStatus::Ok);
        assert_eq!(inv, area);
        assert_eq!(inv, 8);

        let mut maj = 0u64;
        assert_eq!(qpath_word_major_index(word.as_ptr(), &mut maj), QPathStatus::Ok);

        // Exceedance needs a square endpoint.
        let square = CString::new("NNEE").unwrap();
        let mut exc = 0u64;
        assert_eq!(qpath_path_exceedance(square.as_ptr(), &mut exc), QPathStatus::Ok);
        assert_eq!(exc, 2);
        let skew = CString::new("ENE").unwrap();
        assert_eq!(
            qpath_path_exceedance(skew.as_ptr(), &mut exc),
            QPathStatus::InvalidArgument
        );

        let junk = CString::new("EXN").unwrap();
        assert_eq!(
            qpath_path_area(junk.as_ptr(), &mut area),
            QPathStatus::InvalidArgument
        );
        assert!(!last_error().is_empty());
    }
}

#[test]
fn orbit_json_shape() {
    unsafe {
        let map = CString::new("phi-square").unwrap();
        let start = CString::new("01101001").unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(
            qpath_orbit_json(map.as_ptr(), start.as_ptr(), 0, &mut s),
            QPathStatus::Ok
        );
        let json = take_string(s);
        assert!(json.contains("\"map\": \"phi-square\""));
        assert!(json.contains("\"modulus\": 7"));

        // Inferred bound for sequences: two terms means bound 4.
        let map = CString::new("phi-seq").unwrap();
        let start = CString::new("1,2").unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(
            qpath_orbit_json(map.as_ptr(), start.as_ptr(), 0, &mut s),
            QPathStatus::Ok
        );
        assert!(take_string(s).contains("\"modulus\": 3"));

        let bogus = CString::new("shuffle").unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(
            qpath_orbit_json(bogus.as_ptr(), start.as_ptr(), 0, &mut s),
            QPathStatus::InvalidArgument
        );
    }
}

#[test]
fn identity_sweeps() {
    unsafe {
        let mut ok = false;
        assert_eq!(qpath_verify_q_identities(12, &mut ok), QPathStatus::Ok);
        assert!(ok);
        assert_eq!(qpath_verify_central_recurrence(40, &mut ok), QPathStatus::Ok);
        assert!(ok);
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        assert_eq!(
            qpath_gauss_binom(4, 2, ptr::null_mut()),
            QPathStatus::NullPointer
        );

        let mut deg = 0u64;
        assert_eq!(qpath_poly_degree(ptr::null(), &mut deg), QPathStatus::NullPointer);

        let mut out = 0u64;
        assert_eq!(qpath_path_area(ptr::null(), &mut out), QPathStatus::NullPointer);

        let mut flag = false;
        assert_eq!(qpath_dist_is_uniform(ptr::null(), &mut flag), QPathStatus::NullPointer);

        // Frees tolerate null.
        qpath_poly_free(ptr::null_mut());
        qpath_dist_free(ptr::null_mut());
        qpath_string_free(ptr::null_mut());

        assert_eq!(qpath_gauss_binom(2, 5, ptr::null_mut()), QPathStatus::InvalidArgument);
        assert!(last_error().contains("k <= n"));
    }
}
