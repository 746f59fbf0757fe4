//! C ABI over the qpath library.
//!
//! Handles are opaque pointers created and freed here; never free them with
//! anything but the matching `qpath_*_free`. Every fallible call returns a
//! [`QPathStatus`] and leaves a message for [`qpath_last_error`] on failure.
//! Exact integers (coefficients, counts) cross the boundary as decimal
//! strings so no precision is lost; free those with [`qpath_string_free`].

// The safety contract is the same C convention everywhere (valid or null
// pointers as documented above); per-function Safety sections would only
// duplicate it into the generated header.
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qpath::cyclic::{named_orbit, IncreasingSequence, NamedMap, OrbitObject};
use qpath::dist::{self, DistMode, ResidueDistribution};
use qpath::gaussian;
use qpath::Error;
use qpath::paths::{BinaryWord, LatticePath};
use qpath::poly::Poly;
use qpath::render::{self, Format};

/// Opaque handle to a polynomial with exact integer coefficients.
pub struct QPathPoly {
    _private: [u8; 0],
}

/// Opaque handle to a residue-class count distribution.
pub struct QPathDist {
    _private: [u8; 0],
}

/// Result of every fallible call in this ABI.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QPathStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    /// Exact polynomial division left a remainder.
    NotDivisible = 4,
    /// A stated precondition of the operation does not hold.
    Precondition = 5,
    /// An enumeration would exceed the step bound.
    LimitExceeded = 6,
    /// Internal panic; the library state is still sound.
    Panic = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn status_for(err: &Error) -> QPathStatus {
    match err {
        Error::InvalidArgument(_) => QPathStatus::InvalidArgument,
        Error::NotDivisible { .. } => QPathStatus::NotDivisible,
        Error::Precondition(_) => QPathStatus::Precondition,
        Error::LimitExceeded { .. } => QPathStatus::LimitExceeded,
    }
}

fn fail(err: Error) -> QPathStatus {
    let status = status_for(&err);
    set_error(err.to_string());
    status
}

/// Runs a closure behind a panic guard; panics become `Panic` instead of
/// unwinding across the C boundary.
fn guarded(f: impl FnOnce() -> QPathStatus) -> QPathStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic".into());
            QPathStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, QPathStatus> {
    if ptr.is_null() {
        set_error("null string argument".into());
        return Err(QPathStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8".into());
        QPathStatus::InvalidUtf8
    })
}

unsafe fn store<T>(out: *mut T, value: T) -> QPathStatus {
    if out.is_null() {
        set_error("null output pointer".into());
        return QPathStatus::NullPointer;
    }
    out.write(value);
    QPathStatus::Ok
}

unsafe fn poly_ref<'a>(p: *const QPathPoly) -> Result<&'a Poly, QPathStatus> {
    if p.is_null() {
        set_error("null polynomial handle".into());
        return Err(QPathStatus::NullPointer);
    }
    Ok(&*(p as *const Poly))
}

unsafe fn dist_ref<'a>(d: *const QPathDist) -> Result<&'a ResidueDistribution, QPathStatus> {
    if d.is_null() {
        set_error("null distribution handle".into());
        return Err(QPathStatus::NullPointer);
    }
    Ok(&*(d as *const ResidueDistribution))
}

fn poly_handle(p: Poly) -> *mut QPathPoly {
    Box::into_raw(Box::new(p)) as *mut QPathPoly
}

fn dist_handle(d: ResidueDistribution) -> *mut QPathDist {
    Box::into_raw(Box::new(d)) as *mut QPathDist
}

fn string_handle(s: String) -> *mut c_char {
    CString::new(s)
        .unwrap_or_else(|_| CString::new("invalid text").unwrap())
        .into_raw()
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn qpath_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the most recent failure on this thread. Empty when the last
/// call succeeded. The pointer is valid until the next qpath call on the
/// same thread; do not free.
#[no_mangle]
pub extern "C" fn qpath_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Frees a string returned by this library. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn qpath_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Frees a polynomial handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn qpath_poly_free(p: *mut QPathPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p as *mut Poly));
    }
}

/// Frees a distribution handle. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn qpath_dist_free(d: *mut QPathDist) {
    if !d.is_null() {
        drop(Box::from_raw(d as *mut ResidueDistribution));
    }
}

/// Gaussian binomial for n over k: the area generating polynomial of the
/// lattice paths from the origin to (k, n-k). Requires k <= n.
#[no_mangle]
pub unsafe extern "C" fn qpath_gauss_binom(
    n: u32,
    k: u32,
    out: *mut *mut QPathPoly,
) -> QPathStatus {
    guarded(|| {
        if k > n {
            return fail(Error::InvalidArgument(format!("need k <= n, got k = {k}, n = {n}")));
        }
        store(out, poly_handle(gaussian::gauss_binom(n, k as i64)))
    })
}

/// The polynomial 1 + q + ... + q^(m-1). Requires m >= 1.
#[no_mangle]
pub unsafe extern "C" fn qpath_q_analogue(m: u64, out: *mut *mut QPathPoly) -> QPathStatus {
    guarded(|| match Poly::q_analogue(m) {
        Ok(p) => store(out, poly_handle(p)),
        Err(err) => fail(err),
    })
}

/// The n-th q-Catalan polynomial.
#[no_mangle]
pub unsafe extern "C" fn qpath_q_catalan(n: u32, out: *mut *mut QPathPoly) -> QPathStatus {
    guarded(|| store(out, poly_handle(gaussian::q_catalan(n))))
}

#[no_mangle]
pub unsafe extern "C" fn qpath_poly_mul(
    a: *const QPathPoly,
    b: *const QPathPoly,
    out: *mut *mut QPathPoly,
) -> QPathStatus {
    guarded(|| {
        let (a, b) = match (poly_ref(a), poly_ref(b)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        store(out, poly_handle(a * b))
    })
}

/// Exact division in the polynomial ring; fails with `NotDivisible` when a
/// remainder would be left.
#[no_mangle]
pub unsafe extern "C" fn qpath_poly_exact_div(
    num: *const QPathPoly,
    den: *const QPathPoly,
    out: *mut *mut QPathPoly,
) -> QPathStatus {
    guarded(|| {
        let (num, den) = match (poly_ref(num), poly_ref(den)) {
            (Ok(n), Ok(d)) => (n, d),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        match num.exact_div(den) {
            Ok(q) => store(out, poly_handle(q)),
            Err(err) => fail(err),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn qpath_poly_is_zero(p: *const QPathPoly, out: *mut bool) -> QPathStatus {
    guarded(|| match poly_ref(p) {
        Ok(poly) => store(out, poly.is_zero()),
        Err(s) => s,
    })
}

/// Degree of the polynomial. Fails with `Precondition` for the zero
/// polynomial, which has none.
#[no_mangle]
pub unsafe extern "C" fn qpath_poly_degree(p: *const QPathPoly, out: *mut u64) -> QPathStatus {
    guarded(|| {
        let poly = match poly_ref(p) {
            Ok(poly) => poly,
            Err(s) => return s,
        };
        match poly.degree() {
            Some(d) => store(out, d as u64),
            None => fail(Error::Precondition("the zero polynomial has no degree".into())),
        }
    })
}

/// Coefficient of q^power as a decimal string (zero beyond the degree).
#[no_mangle]
pub unsafe extern "C" fn qpath_poly_coeff(
    p: *const QPathPoly,
    power: u64,
    out: *mut *mut c_char,
) -> QPathStatus {
    guarded(|| {
        let poly = match poly_ref(p) {
            Ok(poly) => poly,
            Err(s) => return s,
        };
        let Ok(i) = usize::try_from(power) else {
            return fail(Error::InvalidArgument(format!("power {power} out of range")));
        };
        store(out, string_handle(poly.coeff(i).to_string()))
    })
}

/// Value at q = 1 (the plain count) as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn qpath_poly_value_at_one(
    p: *const QPathPoly,
    out: *mut *mut c_char,
) -> QPathStatus {
    guarded(|| match poly_ref(p) {
        Ok(poly) => store(out, string_handle(poly.value_at_one().to_string())),
        Err(s) => s,
    })
}

/// Whether the coefficient sums over the modulus residue classes of the
/// exponents all agree; equivalent to divisibility by the q-analogue of
/// the modulus.
#[no_mangle]
pub unsafe extern "C" fn qpath_poly_equal_content(
    p: *const QPathPoly,
    modulus: u64,
    out: *mut bool,
) -> QPathStatus {
    guarded(|| {
        let poly = match poly_ref(p) {
            Ok(poly) => poly,
            Err(s) => return s,
        };
        match poly.has_equal_content(modulus) {
            Ok(flag) => store(out, flag),
            Err(err) => fail(err),
        }
    })
}

/// Residue-class coefficient sums of a polynomial with nonnegative
/// coefficients.
#[no_mangle]
pub unsafe extern "C" fn qpath_poly_content_sums(
    p: *const QPathPoly,
    modulus: u64,
    out: *mut *mut QPathDist,
) -> QPathStatus {
    guarded(|| {
        let poly = match poly_ref(p) {
            Ok(poly) => poly,
            Err(s) => return s,
        };
        match dist::content_distribution(poly, modulus) {
            Ok(d) => store(out, dist_handle(d)),
            Err(err) => fail(err),
        }
    })
}

/// Area under a lattice path written in E/N or 0/1 letters.
#[no_mangle]
pub unsafe extern "C" fn qpath_path_area(path: *const c_char, out: *mut u64) -> QPathStatus {
    guarded(|| {
        let s = match read_str(path) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match s.parse::<LatticePath>() {
            Ok(p) => store(out, p.area()),
            Err(err) => fail(err),
        }
    })
}

/// Exceedance of a path with a square endpoint: the number of north steps
/// taken on or above the diagonal.
#[no_mangle]
pub unsafe extern "C" fn qpath_path_exceedance(
    path: *const c_char,
    out: *mut u64,
) -> QPathStatus {
    guarded(|| {
        let s = match read_str(path) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let p = match s.parse::<LatticePath>() {
            Ok(p) => p,
            Err(err) => return fail(err),
        };
        match p.exceedance() {
            Ok(e) => store(out, e),
            Err(err) => fail(err),
        }
    })
}

/// Inversions of a binary word (pairs 1...0); equals the area of the
/// corresponding path.
#[no_mangle]
pub unsafe extern "C" fn qpath_word_inversions(
    word: *const c_char,
    out: *mut u64,
) -> QPathStatus {
    guarded(|| {
        let s = match read_str(word) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match s.parse::<BinaryWord>() {
            Ok(w) => store(out, w.inversions()),
            Err(err) => fail(err),
        }
    })
}

/// Major index of a binary word: the sum of the descent positions.
#[no_mangle]
pub unsafe extern "C" fn qpath_word_major_index(
    word: *const c_char,
    out: *mut u64,
) -> QPathStatus {
    guarded(|| {
        let s = match read_str(word) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match s.parse::<BinaryWord>() {
            Ok(w) => store(out, w.major_index()),
            Err(err) => fail(err),
        }
    })
}

/// Area counts mod `modulus` for paths to (width, height). Chooses between
/// direct enumeration and the polynomial route automatically.
#[no_mangle]
pub unsafe extern "C" fn qpath_area_distribution(
    width: u32,
    height: u32,
    modulus: u64,
    out: *mut *mut QPathDist,
) -> QPathStatus {
    guarded(|| {
        match dist::area_distribution(width, height, modulus, DistMode::Auto) {
            Ok(d) => store(out, dist_handle(d)),
            Err(err) => fail(err),
        }
    })
}

/// Sums of k-element subsets of {1, ..., n} mod `modulus`.
#[no_mangle]
pub unsafe extern "C" fn qpath_subset_sum_distribution(
    n: u64,
    k: u64,
    modulus: u64,
    out: *mut *mut QPathDist,
) -> QPathStatus {
    guarded(|| match dist::subset_sum_distribution(n, k, modulus) {
        Ok(d) => store(out, dist_handle(d)),
        Err(err) => fail(err),
    })
}

/// Products of l-element subsets of the units mod a prime p, counted over
/// the residues 1, ..., p-1. Requires gcd(l, p-1) = 1.
#[no_mangle]
pub unsafe extern "C" fn qpath_subset_product_distribution(
    p: u64,
    l: u64,
    out: *mut *mut QPathDist,
) -> QPathStatus {
    guarded(|| match dist::subset_product_distribution(p, l) {
        Ok(d) => store(out, dist_handle(d)),
        Err(err) => fail(err),
    })
}

/// Major-index counts mod `modulus` over binary words with n ones and
/// n zeros.
#[no_mangle]
pub unsafe extern "C" fn qpath_maj_distribution(
    n: u32,
    modulus: u64,
    out: *mut *mut QPathDist,
) -> QPathStatus {
    guarded(|| match dist::maj_distribution(n, modulus) {
        Ok(d) => store(out, dist_handle(d)),
        Err(err) => fail(err),
    })
}

#[no_mangle]
pub unsafe extern "C" fn qpath_dist_modulus(d: *const QPathDist, out: *mut u64) -> QPathStatus {
    guarded(|| match dist_ref(d) {
        Ok(dist) => store(out, dist.modulus()),
        Err(s) => s,
    })
}

/// Number of residue classes carried by the distribution.
#[no_mangle]
pub unsafe extern "C" fn qpath_dist_class_count(
    d: *const QPathDist,
    out: *mut u64,
) -> QPathStatus {
    guarded(|| match dist_ref(d) {
        Ok(dist) => store(out, dist.class_count() as u64),
        Err(s) => s,
    })
}

/// Residue labelled by the first class (0, or 1 for unit-group
/// distributions).
#[no_mangle]
pub unsafe extern "C" fn qpath_dist_first_residue(
    d: *const QPathDist,
    out: *mut u64,
) -> QPathStatus {
    guarded(|| match dist_ref(d) {
        Ok(dist) => store(out, dist.first_residue()),
        Err(s) => s,
    })
}

/// Count in the class at `index` (0-based) as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn qpath_dist_count(
    d: *const QPathDist,
    index: u64,
    out: *mut *mut c_char,
) -> QPathStatus {
    guarded(|| {
        let dist = match dist_ref(d) {
            Ok(dist) => dist,
            Err(s) => return s,
        };
        let classes = dist.class_count() as u64;
        if index >= classes {
            return fail(Error::InvalidArgument(format!(
                "class index {index} out of range for {classes} classes"
            )));
        }
        store(out, string_handle(dist.counts()[index as usize].to_string()))
    })
}

#[no_mangle]
pub unsafe extern "C" fn qpath_dist_is_uniform(
    d: *const QPathDist,
    out: *mut bool,
) -> QPathStatus {
    guarded(|| match dist_ref(d) {
        Ok(dist) => store(out, dist.is_uniform()),
        Err(s) => s,
    })
}

/// Sum of all class counts as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn qpath_dist_total(
    d: *const QPathDist,
    out: *mut *mut c_char,
) -> QPathStatus {
    guarded(|| match dist_ref(d) {
        Ok(dist) => store(out, string_handle(dist.total().to_string())),
        Err(s) => s,
    })
}

fn orbit_start(map: NamedMap, start: &str, bound: u64) -> Result<OrbitObject, Error> {
    match map {
        NamedMap::Rotate | NamedMap::PhiSquare | NamedMap::CatalanRestrict => {
            Ok(OrbitObject::Path(start.parse()?))
        }
        NamedMap::PhiWord => Ok(OrbitObject::Word(start.parse::<LatticePath>()?.to_word())),
        NamedMap::PhiSequence => {
            // bound 0 means infer: sequences of n terms live below 2n.
            let bound = if bound == 0 {
                2 * start.split(',').count() as u64
            } else {
                bound
            };
            Ok(OrbitObject::Sequence(IncreasingSequence::parse(start, bound)?))
        }
    }
}

/// Full orbit of a start object under a named cyclic map, rendered as
/// JSON. Map names: rotate, phi-square, phi-word, phi-seq,
/// catalan-restrict. `bound` only applies to phi-seq; pass 0 to infer it
/// from the number of terms.
#[no_mangle]
pub unsafe extern "C" fn qpath_orbit_json(
    map: *const c_char,
    start: *const c_char,
    bound: u64,
    out: *mut *mut c_char,
) -> QPathStatus {
    guarded(|| {
        let (map, start) = match (read_str(map), read_str(start)) {
            (Ok(m), Ok(s)) => (m, s),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        let map = match NamedMap::parse(map) {
            Ok(m) => m,
            Err(err) => return fail(err),
        };
        let start = match orbit_start(map, start, bound) {
            Ok(obj) => obj,
            Err(err) => return fail(err),
        };
        let orbit = match named_orbit(map, start) {
            Ok(o) => o,
            Err(err) => return fail(err),
        };
        match render::render_orbit(map, &orbit, Format::Json) {
            Ok(json) => store(out, string_handle(json)),
            Err(err) => fail(err),
        }
    })
}

/// Checks the central factorization, the q-Catalan identity, and central
/// divisibility for every n up to `max_n`; true when all hold.
#[no_mangle]
pub unsafe extern "C" fn qpath_verify_q_identities(max_n: u32, out: *mut bool) -> QPathStatus {
    guarded(|| {
        for n in 1..=max_n {
            match gaussian::verify_q_identities(n) {
                Ok(report) if report.all_hold() => {}
                Ok(_) => return store(out, false),
                Err(err) => return fail(err),
            }
        }
        store(out, true)
    })
}

/// Checks the doubling recurrence for the central binomial coefficients up
/// to `max_n`; true when it holds throughout.
#[no_mangle]
pub unsafe extern "C" fn qpath_verify_central_recurrence(
    max_n: u64,
    out: *mut bool,
) -> QPathStatus {
    guarded(|| {
        for n in 1..=max_n {
            if !qpath::numtheory::verify_eq1(n) {
                return store(out, false);
            }
        }
        store(out, true)
    })
}
