//! C interface. Ideals are opaque heap handles owned by the caller and
//! released with `bn_ideal_free`; strings returned through `char **` are
//! released with `bn_string_free`. Every fallible call returns a
//! [`BnStatus`]; on failure `bn_last_error` describes what went wrong on
//! the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use binomials::algebra::MonomialOrder;
use binomials::cellular::{cellular_decompose, is_cellular};
use binomials::cli::input::parse_input;
use binomials::cli::parse_order;
use binomials::engine::{BinomialIdeal, Ring};
use binomials::lattice::{toric_ideal, IntMatrix};
use binomials::mesoprimary::{is_mesoprimary, is_prime};
use binomials::Error;

/// Result codes. The first three match the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BnStatus {
    Ok = 0,
    /// The request is well formed but its mathematical precondition fails.
    Refused = 1,
    InputError = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    /// An internal failure; the library state is still usable.
    Panic = 5,
}

/// Opaque ideal handle.
pub struct BnIdeal {
    inner: BinomialIdeal,
}

/// Opaque list of ideals.
pub struct BnIdealList {
    items: Vec<BnIdeal>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: BnStatus, msg: &str) -> BnStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> BnStatus {
    let status = if e.is_input_error() { BnStatus::InputError } else { BnStatus::Refused };
    fail(status, &e.to_string())
}

/// Runs `f`, turning panics into [`BnStatus::Panic`].
fn guard(f: impl FnOnce() -> BnStatus) -> BnStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == BnStatus::Ok {
                LAST_ERROR.with(|e| *e.borrow_mut() = None);
            }
            s
        }
        Err(_) => fail(BnStatus::Panic, "internal error"),
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, BnStatus> {
    if p.is_null() {
        return Err(fail(BnStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(BnStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> BnStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            BnStatus::Ok
        }
        Err(_) => fail(BnStatus::Panic, "result contains a NUL byte"),
    }
}

macro_rules! nonnull {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(BnStatus::NullPointer, concat!("null argument: ", stringify!($p)));
        })+
    };
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the most recent failure on this thread, or NULL. The
/// pointer stays valid until the next call into the library on this
/// thread.
#[no_mangle]
pub extern "C" fn bn_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bn_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an input document (`ring`, `ideal`, generator lines) and returns
/// the ideal called `name`, or the first one when `name` is NULL.
///
/// # Safety
/// `text` and a non-NULL `name` must be NUL-terminated; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn bn_ideal_parse(text: *const c_char, name: *const c_char, out: *mut *mut BnIdeal) -> BnStatus {
    guard(|| {
        nonnull!(out);
        let text = tri!(read_str(text));
        let name = if name.is_null() { None } else { Some(tri!(read_str(name))) };
        let session = match parse_input(text) {
            Ok(s) => s,
            Err(e) => return from_error(e),
        };
        match session.ideal(name) {
            Ok(i) => {
                *out = Box::into_raw(Box::new(BnIdeal { inner: i.clone() }));
                BnStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Toric ideal of a row-major `rows × cols` matrix, in variables
/// `x1, …, x<cols>`.
///
/// # Safety
/// `entries` must hold `rows * cols` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bn_toric_ideal(entries: *const i64, rows: usize, cols: usize, out: *mut *mut BnIdeal) -> BnStatus {
    guard(|| {
        nonnull!(entries, out);
        let Some(len) = rows.checked_mul(cols) else {
            return fail(BnStatus::InputError, "matrix size overflows");
        };
        let data = std::slice::from_raw_parts(entries, len);
        let m: Vec<Vec<i64>> = data.chunks(cols.max(1)).map(<[i64]>::to_vec).collect();
        let a = match IntMatrix::from_i64(&m) {
            Ok(a) => a,
            Err(e) => return from_error(e),
        };
        match toric_ideal(&a, &Arc::new(Ring::generic(cols))) {
            Ok(i) => {
                *out = Box::into_raw(Box::new(BnIdeal { inner: i }));
                BnStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Releases an ideal. NULL is ignored.
///
/// # Safety
/// `ideal` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bn_ideal_free(ideal: *mut BnIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Number of ring variables, or 0 for NULL.
///
/// # Safety
/// `ideal` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bn_ideal_nvars(ideal: *const BnIdeal) -> usize {
    ideal.as_ref().map_or(0, |i| i.inner.nvars())
}

/// Reduced Gröbner basis, one generator per line. `order` is `lex`,
/// `grevlex`, `elim:X,Y`, or NULL for grevlex.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bn_ideal_groebner_basis(ideal: *const BnIdeal, order: *const c_char, out: *mut *mut c_char) -> BnStatus {
    guard(|| {
        nonnull!(ideal, out);
        let i = &(*ideal).inner;
        let o = if order.is_null() {
            MonomialOrder::grevlex()
        } else {
            match parse_order(tri!(read_str(order)), i.ring()) {
                Ok(o) => o,
                Err(e) => return from_error(e),
            }
        };
        if let Err(e) = o.validate(i.nvars()) {
            return from_error(e);
        }
        let lines: Vec<String> =
            i.groebner_basis(&o).elements().iter().map(|g| g.display_with(i.names()).to_string()).collect();
        write_string(out, lines.join("\n"))
    })
}

/// The ideal as `<g1, g2, …>` with its original generators.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bn_ideal_to_string(ideal: *const BnIdeal, out: *mut *mut c_char) -> BnStatus {
    guard(|| {
        nonnull!(ideal, out);
        write_string(out, (*ideal).inner.to_string())
    })
}

/// Ideal equality.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bn_ideal_equal(a: *const BnIdeal, b: *const BnIdeal, out: *mut bool) -> BnStatus {
    guard(|| {
        nonnull!(a, b, out);
        *out = (*a).inner == (*b).inner;
        BnStatus::Ok
    })
}

/// Whether `a ⊇ b`.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bn_ideal_contains(a: *const BnIdeal, b: *const BnIdeal, out: *mut bool) -> BnStatus {
    guard(|| {
        nonnull!(a, b, out);
        if (*a).inner.nvars() != (*b).inner.nvars() {
            return fail(BnStatus::InputError, "ideals live in rings of different dimension");
        }
        *out = (*a).inner.contains_ideal(&(*b).inner);
        BnStatus::Ok
    })
}

/// Binomial primality.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bn_ideal_is_prime(ideal: *const BnIdeal, out: *mut bool) -> BnStatus {
    guard(|| {
        nonnull!(ideal, out);
        match is_prime(&(*ideal).inner) {
            Ok(p) => {
                *out = p;
                BnStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Whether every variable is a nonzerodivisor or nilpotent.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bn_ideal_is_cellular(ideal: *const BnIdeal, out: *mut bool) -> BnStatus {
    guard(|| {
        nonnull!(ideal, out);
        match is_cellular(&(*ideal).inner) {
            Ok(d) => {
                *out = d.is_some();
                BnStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Mesoprimary test. When the answer is false and `witness` is non-NULL,
/// the witness monomial is written there; otherwise `*witness` is NULL.
///
/// # Safety
/// `ideal` must be a live handle; `out` and a non-NULL `witness` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn bn_ideal_is_mesoprimary(ideal: *const BnIdeal, out: *mut bool, witness: *mut *mut c_char) -> BnStatus {
    guard(|| {
        nonnull!(ideal, out);
        let i = &(*ideal).inner;
        match is_mesoprimary(i) {
            Ok(c) => {
                *out = c.mesoprimary;
                if !witness.is_null() {
                    *witness = ptr::null_mut();
                    if let Some(w) = c.witness {
                        return write_string(witness, w.display_with(i.names()).to_string());
                    }
                }
                BnStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Cellular decomposition into a new list.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bn_ideal_cellular_decompose(ideal: *const BnIdeal, out: *mut *mut BnIdealList) -> BnStatus {
    guard(|| {
        nonnull!(ideal, out);
        match cellular_decompose(&(*ideal).inner) {
            Ok(comps) => {
                let items = comps.into_iter().map(|c| BnIdeal { inner: c.ideal().clone() }).collect();
                *out = Box::into_raw(Box::new(BnIdealList { items }));
                BnStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Number of ideals in a list, or 0 for NULL.
///
/// # Safety
/// `list` must be NULL or a live list.
#[no_mangle]
pub unsafe extern "C" fn bn_ideal_list_len(list: *const BnIdealList) -> usize {
    list.as_ref().map_or(0, |l| l.items.len())
}

/// Borrowed pointer to the `index`-th ideal, or NULL when out of range.
/// It is valid while the list is alive and must not be freed.
///
/// # Safety
/// `list` must be NULL or a live list.
#[no_mangle]
pub unsafe extern "C" fn bn_ideal_list_get(list: *const BnIdealList, index: usize) -> *const BnIdeal {
    list.as_ref().and_then(|l| l.items.get(index)).map_or(ptr::null(), |i| i as *const BnIdeal)
}

/// Releases a list and every ideal in it. NULL is ignored.
///
/// # Safety
/// `list` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bn_ideal_list_free(list: *mut BnIdealList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}
