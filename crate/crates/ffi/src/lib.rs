// SPDX-License-Identifier: Apache-2.0

//! C ABI over `bisoft`.
//!
//! Fixtures live behind an opaque `BisoftFixture` handle. Every fallible
//! call returns a `BisoftStatus`; on failure `bisoft_last_error` describes
//! the error until the next call on the same thread. Strings returned
//! through out-parameters are owned by the caller and must be released with
//! `bisoft_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bisoft::error::Error;
use bisoft::fixture::Fixture;
use bisoft::rough::rough_regions;
use bisoft::search::{self, Expect, SearchConfig};
use bisoft::separation::{self, AxiomReport, Orientation, ReportOptions};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BisoftStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownName = 4,
    InvalidTopology = 5,
    UnknownClaim = 6,
    Config = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BisoftAxiom {
    SoftT0First = 0,
    SoftT0Second = 1,
    SoftT0Sup = 2,
    SoftT1First = 3,
    SoftT1Second = 4,
    SoftT1Sup = 5,
    SoftT2First = 6,
    SoftT2Second = 7,
    SoftT2Sup = 8,
    PairwiseT0 = 9,
    PairwiseT0Strict = 10,
    PairwiseT1 = 11,
    PairwiseT2 = 12,
    StrongT0 = 13,
    StrongT1 = 14,
    HausdorffChar = 15,
}

/// A parsed and resolved fixture document.
pub struct BisoftFixture(Fixture);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = CString::new(message.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

fn status_of(e: &Error) -> BisoftStatus {
    match e {
        Error::Json(_) | Error::Io(_) | Error::DuplicateName { .. } | Error::Empty(_) | Error::UniverseTooLarge { .. } => {
            BisoftStatus::Parse
        }
        Error::UnknownElement(_) | Error::UnknownParameter(_) | Error::Fixture(_) => BisoftStatus::UnknownName,
        Error::InvalidTopology(_) => BisoftStatus::InvalidTopology,
        Error::UnknownClaim(_) => BisoftStatus::UnknownClaim,
        _ => BisoftStatus::Config,
    }
}

/// Runs `f`, recording errors and panics.
fn guard(f: impl FnOnce() -> Result<(), BisoftStatus>) -> BisoftStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BisoftStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic");
            BisoftStatus::Panic
        }
    }
}

fn fail(e: Error) -> BisoftStatus {
    let status = status_of(&e);
    set_error(e.to_string());
    status
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, BisoftStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(BisoftStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        BisoftStatus::InvalidUtf8
    })
}

unsafe fn handle<'a>(fx: *const BisoftFixture) -> Result<&'a Fixture, BisoftStatus> {
    if fx.is_null() {
        set_error("null fixture handle");
        return Err(BisoftStatus::NullPointer);
    }
    Ok(&(*fx).0)
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), BisoftStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(BisoftStatus::NullPointer);
    }
    *out = CString::new(s).expect("JSON has no interior nul").into_raw();
    Ok(())
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), BisoftStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(BisoftStatus::NullPointer);
    }
    *out = value;
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports always serialize")
}

/// The message of the last failed call on this thread, or null. Valid
/// until the next call on this thread.
#[no_mangle]
pub extern "C" fn bisoft_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static version string.
#[no_mangle]
pub extern "C" fn bisoft_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses and resolves a JSON fixture document.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bisoft_fixture_parse(json: *const c_char, out: *mut *mut BisoftFixture) -> BisoftStatus {
    guard(|| {
        let fx = Fixture::from_json(text(json)?).map_err(fail)?;
        put(out, Box::into_raw(Box::new(BisoftFixture(fx))))
    })
}

/// # Safety
/// `fx` must come from `bisoft_fixture_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bisoft_fixture_free(fx: *mut BisoftFixture) {
    if !fx.is_null() {
        drop(Box::from_raw(fx));
    }
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bisoft_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Validates every named topology. `*all_valid` is false when any fails;
/// the first failure is left in `bisoft_last_error`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bisoft_fixture_validate(fx: *const BisoftFixture, all_valid: *mut bool) -> BisoftStatus {
    guard(|| {
        let fx = handle(fx)?;
        let results = fx.validate_all();
        let first = results.iter().find_map(|(name, r)| r.as_ref().err().map(|e| format!("{name}: {e}")));
        put(all_valid, first.is_none())?;
        if let Some(message) = first {
            set_error(message);
        }
        Ok(())
    })
}

/// Evaluates one axiom on a named space.
///
/// # Safety
/// Pointers must be valid; `space` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn bisoft_check_axiom(
    fx: *const BisoftFixture,
    space: *const c_char,
    axiom: BisoftAxiom,
    holds: *mut bool,
) -> BisoftStatus {
    use separation::{Axiom, Which};
    guard(|| {
        let s = handle(fx)?.space(text(space)?).map_err(fail)?;
        let axiom = match axiom {
            BisoftAxiom::SoftT0First => Axiom::SoftT0(Which::First),
            BisoftAxiom::SoftT0Second => Axiom::SoftT0(Which::Second),
            BisoftAxiom::SoftT0Sup => Axiom::SoftT0(Which::Supremum),
            BisoftAxiom::SoftT1First => Axiom::SoftT1(Which::First),
            BisoftAxiom::SoftT1Second => Axiom::SoftT1(Which::Second),
            BisoftAxiom::SoftT1Sup => Axiom::SoftT1(Which::Supremum),
            BisoftAxiom::SoftT2First => Axiom::SoftT2(Which::First),
            BisoftAxiom::SoftT2Second => Axiom::SoftT2(Which::Second),
            BisoftAxiom::SoftT2Sup => Axiom::SoftT2(Which::Supremum),
            BisoftAxiom::PairwiseT0 => Axiom::PairwiseT0(Orientation::Symmetric),
            BisoftAxiom::PairwiseT0Strict => Axiom::PairwiseT0(Orientation::Strict),
            BisoftAxiom::PairwiseT1 => Axiom::PairwiseT1,
            BisoftAxiom::PairwiseT2 => Axiom::PairwiseT2,
            BisoftAxiom::StrongT0 => Axiom::StrongT0,
            BisoftAxiom::StrongT1 => Axiom::StrongT1,
            BisoftAxiom::HausdorffChar => Axiom::HausdorffChar,
        };
        let sup = s.sup();
        put(holds, axiom.holds(&s, &sup))
    })
}

/// The full axiom report of a space as JSON.
///
/// # Safety
/// Pointers must be valid; `space` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn bisoft_axioms_json(
    fx: *const BisoftFixture,
    space: *const c_char,
    strict_orientation: bool,
    out: *mut *mut c_char,
) -> BisoftStatus {
    guard(|| {
        let s = handle(fx)?.space(text(space)?).map_err(fail)?;
        let options = ReportOptions {
            orientation: if strict_orientation {
                Orientation::Strict
            } else {
                Orientation::Symmetric
            },
            record_separators: false,
        };
        put_string(out, to_json(&AxiomReport::build(&s, options)))
    })
}

/// Members of the supremum topology, in canonical order, as a JSON array.
///
/// # Safety
/// Pointers must be valid; `space` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn bisoft_sup_json(
    fx: *const BisoftFixture,
    space: *const c_char,
    out: *mut *mut c_char,
) -> BisoftStatus {
    guard(|| {
        let s = handle(fx)?.space(text(space)?).map_err(fail)?;
        put_string(out, to_json(&s.sup().members()))
    })
}

/// Rough regions of a named soft set. A null `target` uses the document
/// target.
///
/// # Safety
/// Pointers must be valid; strings nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn bisoft_rough_json(
    fx: *const BisoftFixture,
    space: *const c_char,
    target: *const c_char,
    out: *mut *mut c_char,
) -> BisoftStatus {
    guard(|| {
        let fx = handle(fx)?;
        let s = fx.space(text(space)?).map_err(fail)?;
        let a = if target.is_null() {
            fx.target()
                .ok_or_else(|| fail(Error::Fixture("document has no target".into())))?
        } else {
            fx.soft_set(text(target)?).map_err(fail)?
        };
        put_string(out, to_json(&rough_regions(&s, a).map_err(fail)?))
    })
}

/// Searches for a counterexample to a claim. `random_count == 0` selects
/// exhaustive mode. `*found` reports whether one was found; `*out` receives
/// the record as JSON, or null. `*refutes_expected` is true when the claim
/// was expected to hold and a counterexample was found.
///
/// # Safety
/// Pointers must be valid; `claim` nul-terminated. `out` may be null.
#[no_mangle]
pub unsafe extern "C" fn bisoft_find_counterexample(
    claim: *const c_char,
    max_x: usize,
    params: usize,
    random_count: usize,
    seed: u64,
    found: *mut bool,
    refutes_expected: *mut bool,
    out: *mut *mut c_char,
) -> BisoftStatus {
    guard(|| {
        let id = text(claim)?;
        let claim = search::lookup(id).map_err(fail)?;
        let config = if random_count == 0 {
            SearchConfig::exhaustive(max_x, params)
        } else {
            SearchConfig::random(max_x, params, random_count, seed)
        };
        let record = search::find_counterexample(id, &config).map_err(fail)?;
        put(found, record.is_some())?;
        if !refutes_expected.is_null() {
            *refutes_expected = record.is_some() && claim.expect == Expect::Holds;
        }
        if !out.is_null() {
            *out = match &record {
                Some(r) => CString::new(to_json(r)).expect("JSON has no interior nul").into_raw(),
                None => ptr::null_mut(),
            };
        }
        Ok(())
    })
}
