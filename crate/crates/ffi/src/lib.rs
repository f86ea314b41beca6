//! C ABI for the probabilistic-method toolkit.
//!
//! Conventions, uniform across every function here:
//!
//! * Fallible calls return a [`PmtkStatus`] and write results through `out`
//!   pointers, which are touched only on `PMTK_STATUS_OK`. A human-readable
//!   message for the most recent failure on the current thread is available
//!   from [`pmtk_last_error`].
//! * Strings returned through `char **out` parameters are NUL-terminated,
//!   allocated by this library, and must be released with
//!   [`pmtk_string_free`] — never with `free(3)`.
//! * Set systems live behind the opaque [`PmtkSetSystem`] handle, created by
//!   the `pmtk_set_system_*` constructors and released with
//!   [`pmtk_set_system_free`].
//! * Structured results (bounds, trial reports, witnesses) are JSON strings
//!   in the same "pmtk/1" document schema the command-line tool reads and
//!   writes, so artifacts can flow freely between the two.
//! * Panics never unwind across the boundary; they surface as
//!   `PMTK_STATUS_PANICKED`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde::Serialize;

use pmtk::bounds;
use pmtk::certificate::{verify_certificate, Certificate};
use pmtk::construct::{self, Outcome, TrialFailure, TrialReport};
use pmtk::error::Error;
use pmtk::instance::{self, InstanceBody};
use pmtk::magnitude::Verdict;
use pmtk::oracle::{self, OracleLimits};
use pmtk::report::MagnitudeDoc;
use pmtk::setsystem::SetSystem;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmtkStatus {
    /// The call succeeded and all `out` parameters are filled in.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// An argument violated a precondition; see `pmtk_last_error`.
    InvalidInput = 2,
    /// The computation would blow past a resource cap; see `pmtk_last_error`.
    ResourceLimit = 3,
    /// An internal invariant failed; see `pmtk_last_error`.
    Panicked = 4,
}

/// Three-valued comparison verdict: sound answers or an explicit abstention.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmtkVerdict {
    False = 0,
    True = 1,
    Indeterminate = 2,
}

impl From<Verdict> for PmtkVerdict {
    fn from(v: Verdict) -> PmtkVerdict {
        match v {
            Verdict::False => PmtkVerdict::False,
            Verdict::True => PmtkVerdict::True,
            Verdict::Indeterminate => PmtkVerdict::Indeterminate,
        }
    }
}

/// Opaque set-system handle (a family of subsets of a finite universe).
pub struct PmtkSetSystem {
    inner: SetSystem,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

/// Runs one API body, translating errors and panics to status codes.
fn guarded(f: impl FnOnce() -> Result<(), Error>) -> PmtkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            clear_error();
            PmtkStatus::Ok
        }
        Ok(Err(e)) => {
            let status = match &e {
                Error::InvalidInput(_) => PmtkStatus::InvalidInput,
                Error::ResourceLimit(_) => PmtkStatus::ResourceLimit,
            };
            set_error(&e.to_string());
            status
        }
        Err(_) => {
            set_error("internal panic; this is a bug in the library");
            PmtkStatus::Panicked
        }
    }
}

fn null_argument(which: &str) -> PmtkStatus {
    set_error(&format!("{which} must not be NULL"));
    PmtkStatus::NullArgument
}

/// # Safety
/// `ptr` must be a valid NUL-terminated string (checked non-null by callers).
unsafe fn str_arg<'a>(ptr: *const c_char) -> Result<&'a str, Error> {
    CStr::from_ptr(ptr).to_str().map_err(|_| Error::invalid("argument is not valid UTF-8"))
}

/// # Safety
/// `out` must be valid for a write (checked non-null by callers).
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Error> {
    let c = CString::new(s).map_err(|_| Error::invalid("result contained a NUL byte"))?;
    *out = c.into_raw();
    Ok(())
}

fn limits(force: bool) -> OracleLimits {
    if force {
        OracleLimits { max_sign_bits: 63, max_edge_bits: 63 }
    } else {
        OracleLimits::default()
    }
}

// ---------------------------------------------------------------------------
// library-level strings
// ---------------------------------------------------------------------------

/// Version of the toolkit, as a static string; do not free.
#[no_mangle]
pub extern "C" fn pmtk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the most recent failure on this thread, or NULL if the last
/// call succeeded. The caller owns the returned copy (release it with
/// `pmtk_string_free`).
#[no_mangle]
pub extern "C" fn pmtk_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be a pointer previously returned by a `pmtk_*` call that hands
/// ownership to the caller, and must not be used after this call.
#[no_mangle]
pub unsafe extern "C" fn pmtk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

fn magnitude_json(m: &pmtk::Magnitude) -> String {
    serde_json::to_string(&MagnitudeDoc::new(m)).expect("magnitude docs serialize")
}

/// Largest vertex count r = 2^floor((n-2)/2) with a guaranteed graph free of
/// n-cliques and n-anticliques, as a JSON number document (exact digits when
/// printable, directed log2 bounds otherwise).
///
/// # Safety
/// `out_json` must be valid for a write; the result is released with
/// `pmtk_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pmtk_ramsey_bound_json(n: u64, out_json: *mut *mut c_char) -> PmtkStatus {
    if out_json.is_null() {
        return null_argument("out_json");
    }
    guarded(|| write_string(out_json, magnitude_json(&bounds::erdos_graph_bound(n)?)))
}

/// Same guarantee for k-colorings of complete-graph edges: k^floor((n-2)/2).
///
/// # Safety
/// As for `pmtk_ramsey_bound_json`.
#[no_mangle]
pub unsafe extern "C" fn pmtk_multicolor_bound_json(
    n: u64,
    k: u64,
    out_json: *mut *mut c_char,
) -> PmtkStatus {
    if out_json.is_null() {
        return null_argument("out_json");
    }
    guarded(|| write_string(out_json, magnitude_json(&bounds::erdos_multicolor_bound(n, k)?)))
}

/// Same guarantee for k-colorings of l-element subsets:
/// k^floor((n-l+1)^(l-1)/l!).
///
/// # Safety
/// As for `pmtk_ramsey_bound_json`.
#[no_mangle]
pub unsafe extern "C" fn pmtk_hyper_bound_json(
    n: u64,
    k: u64,
    l: u64,
    out_json: *mut *mut c_char,
) -> PmtkStatus {
    if out_json.is_null() {
        return null_argument("out_json");
    }
    guarded(|| write_string(out_json, magnitude_json(&bounds::erdos_hypergraph_bound(n, k, l)?)))
}

/// Smallest positive a with 2^(a^2) >= (2s)^(2n).
///
/// # Safety
/// `out_a` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn pmtk_discrepancy_guarantee(
    n: u64,
    s: u64,
    out_a: *mut u64,
) -> PmtkStatus {
    if out_a.is_null() {
        return null_argument("out_a");
    }
    guarded(|| {
        *out_a = bounds::discrepancy_guarantee(n, s)?;
        Ok(())
    })
}

/// Whether 2^(a^2) >= (2s)^(2n), decided exactly.
///
/// # Safety
/// `out_holds` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn pmtk_discrepancy_condition_holds(
    n: u64,
    s: u64,
    a: u64,
    out_holds: *mut bool,
) -> PmtkStatus {
    if out_holds.is_null() {
        return null_argument("out_holds");
    }
    guarded(|| {
        *out_holds = bounds::discrepancy_condition_holds(n, s, a)?;
        Ok(())
    })
}

/// Verdict of "graphs on r vertices with an n-clique or n-anticlique are a
/// strict minority" — TRUE certifies a witness graph exists.
///
/// # Safety
/// `out_verdict` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn pmtk_ramsey_bad_verdict(
    r: u64,
    n: u64,
    out_verdict: *mut PmtkVerdict,
) -> PmtkStatus {
    if out_verdict.is_null() {
        return null_argument("out_verdict");
    }
    guarded(|| {
        *out_verdict = bounds::ramsey_bad_count_bound(r, n)?.verdict.into();
        Ok(())
    })
}

/// Verdict of the analogous minority claim for 2-colorings of l-subsets of
/// [m] and monochromatic n-hypercliques.
///
/// # Safety
/// `out_verdict` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn pmtk_hyper_bad_verdict(
    m: u64,
    n: u64,
    l: u64,
    out_verdict: *mut PmtkVerdict,
) -> PmtkStatus {
    if out_verdict.is_null() {
        return null_argument("out_verdict");
    }
    guarded(|| {
        *out_verdict = bounds::hypergraph_bad_count_bound(m, n, l)?.verdict.into();
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// set-system handles
// ---------------------------------------------------------------------------

/// Parses a "pmtk/1" set-system document into a handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out_sys` must be valid for
/// a write. Release the handle with `pmtk_set_system_free`.
#[no_mangle]
pub unsafe extern "C" fn pmtk_set_system_parse(
    json: *const c_char,
    out_sys: *mut *mut PmtkSetSystem,
) -> PmtkStatus {
    if json.is_null() {
        return null_argument("json");
    }
    if out_sys.is_null() {
        return null_argument("out_sys");
    }
    guarded(|| {
        let body = instance::from_json(str_arg(json)?)?;
        let inner = instance::decode_set_system(&body)?;
        *out_sys = Box::into_raw(Box::new(PmtkSetSystem { inner }));
        Ok(())
    })
}

/// Samples s clubs of `club_size` distinct members each from a universe of n
/// people, seeded and reproducible.
///
/// # Safety
/// `out_sys` must be valid for a write. Release the handle with
/// `pmtk_set_system_free`.
#[no_mangle]
pub unsafe extern "C" fn pmtk_set_system_clubs(
    n: u64,
    s: u64,
    club_size: u64,
    seed: u64,
    out_sys: *mut *mut PmtkSetSystem,
) -> PmtkStatus {
    if out_sys.is_null() {
        return null_argument("out_sys");
    }
    guarded(|| {
        let inner =
            construct::sample_clubs(n as usize, s as usize, club_size as usize, seed)?;
        *out_sys = Box::into_raw(Box::new(PmtkSetSystem { inner }));
        Ok(())
    })
}

/// Universe size of the system; 0 for NULL.
///
/// # Safety
/// `sys` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn pmtk_set_system_n(sys: *const PmtkSetSystem) -> u64 {
    if sys.is_null() {
        return 0;
    }
    (*sys).inner.n() as u64
}

/// Number of member sets; 0 for NULL.
///
/// # Safety
/// `sys` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn pmtk_set_system_len(sys: *const PmtkSetSystem) -> u64 {
    if sys.is_null() {
        return 0;
    }
    (*sys).inner.s() as u64
}

/// Serializes the system back to its "pmtk/1" document.
///
/// # Safety
/// `sys` must be a live handle; `out_json` must be valid for a write; the
/// result is released with `pmtk_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pmtk_set_system_to_json(
    sys: *const PmtkSetSystem,
    out_json: *mut *mut c_char,
) -> PmtkStatus {
    if sys.is_null() {
        return null_argument("sys");
    }
    if out_json.is_null() {
        return null_argument("out_json");
    }
    guarded(|| {
        write_string(out_json, instance::to_json(&instance::encode_set_system(&(*sys).inner)))
    })
}

/// Releases a set-system handle. NULL is a no-op.
///
/// # Safety
/// `sys` must be a pointer from `pmtk_set_system_parse`/`pmtk_set_system_clubs`
/// and must not be used after this call.
#[no_mangle]
pub unsafe extern "C" fn pmtk_set_system_free(sys: *mut PmtkSetSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

// ---------------------------------------------------------------------------
// exact oracles
// ---------------------------------------------------------------------------

/// Exact count of sign colorings with |delta| >= a on at least one member
/// set, as a decimal string. Enumeration walks all 2^n colorings; `force`
/// raises the practicality cap from 2^28 to 2^63.
///
/// # Safety
/// `sys` must be a live handle; `out_count` must be valid for a write; the
/// result is released with `pmtk_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pmtk_count_exceeding_decimal(
    sys: *const PmtkSetSystem,
    a: u64,
    force: bool,
    out_count: *mut *mut c_char,
) -> PmtkStatus {
    if sys.is_null() {
        return null_argument("sys");
    }
    if out_count.is_null() {
        return null_argument("out_count");
    }
    guarded(|| {
        let count = oracle::count_exceeding_colorings(&(*sys).inner, a, &limits(force))?;
        write_string(out_count, count.to_string())
    })
}

/// Exact optimum min over all colorings of max |delta|, with the first
/// optimal coloring as a "pmtk/1" document when `out_witness_json` is
/// non-NULL.
///
/// # Safety
/// `sys` must be a live handle; `out_optimum` must be valid for a write;
/// `out_witness_json` may be NULL to skip the witness, otherwise it must be
/// valid for a write and the result is released with `pmtk_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pmtk_exact_discrepancy(
    sys: *const PmtkSetSystem,
    force: bool,
    out_optimum: *mut u64,
    out_witness_json: *mut *mut c_char,
) -> PmtkStatus {
    if sys.is_null() {
        return null_argument("sys");
    }
    if out_optimum.is_null() {
        return null_argument("out_optimum");
    }
    guarded(|| {
        let (optimum, witness) = oracle::min_max_discrepancy(&(*sys).inner, &limits(force))?;
        if !out_witness_json.is_null() {
            write_string(
                out_witness_json,
                instance::to_json(&instance::encode_sign_coloring(&witness)),
            )?;
        }
        *out_optimum = optimum;
        Ok(())
    })
}

/// Exact count of graphs on r labeled vertices containing an n-clique or an
/// n-anticlique. Enumeration walks all 2^(r(r-1)/2) graphs; `force` raises
/// the cap from 2^30 to 2^63.
///
/// # Safety
/// `out_count` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn pmtk_count_ramsey_graphs(
    r: u32,
    n: u32,
    force: bool,
    out_count: *mut u64,
) -> PmtkStatus {
    if out_count.is_null() {
        return null_argument("out_count");
    }
    guarded(|| {
        *out_count = oracle::count_ramsey_graphs(r, n, &limits(force))?;
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// randomized constructions
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct FailureDoc {
    trial: u64,
    reason: String,
}

#[derive(Serialize)]
struct TrialDoc {
    seed: u64,
    max_trials: u64,
    trials_run: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    success_trial: Option<u64>,
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<InstanceBody>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    failures: Vec<FailureDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failures_omitted: Option<u64>,
}

const FAILURE_LIST_CAP: usize = 10;

fn trial_json<W>(
    report: &TrialReport<W>,
    certify: impl Fn(&W) -> Certificate,
    encode: impl Fn(&W) -> InstanceBody,
) -> Result<String, Error> {
    let mut doc = TrialDoc {
        seed: report.seed,
        max_trials: report.max_trials,
        trials_run: report.trials_run,
        success_trial: None,
        verified: false,
        witness: None,
        failures: Vec::new(),
        failures_omitted: None,
    };
    match &report.outcome {
        Outcome::Success { witness, trial } => {
            doc.success_trial = Some(*trial);
            doc.verified = verify_certificate(&certify(witness))?.ok;
            doc.witness = Some(encode(witness));
        }
        Outcome::Exhausted { failures } => {
            doc.failures = failures
                .iter()
                .take(FAILURE_LIST_CAP)
                .map(|TrialFailure { trial, reason }| FailureDoc {
                    trial: *trial,
                    reason: reason.clone(),
                })
                .collect();
            if failures.len() > FAILURE_LIST_CAP {
                doc.failures_omitted = Some((failures.len() - FAILURE_LIST_CAP) as u64);
            }
        }
    }
    Ok(serde_json::to_string(&doc).expect("trial docs serialize"))
}

/// Seeded search for a sign coloring with |delta| < a on every member set.
/// `a = 0` means "use the guarantee threshold for this system";
/// `max_trials = 0` means the default budget of 1000. Exhausting the budget
/// is not an error: the report's `success_trial` is absent and `failures`
/// lists the first rejections.
///
/// # Safety
/// `sys` must be a live handle; `out_report_json` must be valid for a write;
/// the result is released with `pmtk_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pmtk_find_low_discrepancy_json(
    sys: *const PmtkSetSystem,
    a: u64,
    seed: u64,
    max_trials: u64,
    out_report_json: *mut *mut c_char,
) -> PmtkStatus {
    if sys.is_null() {
        return null_argument("sys");
    }
    if out_report_json.is_null() {
        return null_argument("out_report_json");
    }
    guarded(|| {
        let system = &(*sys).inner;
        let a = match a {
            0 => bounds::discrepancy_guarantee(system.n() as u64, system.s() as u64)?,
            a => a,
        };
        let trials = if max_trials == 0 { construct::DEFAULT_MAX_TRIALS } else { max_trials };
        let report = construct::find_low_discrepancy_coloring(system, Some(a), seed, trials)?;
        let json = trial_json(
            &report,
            |x| Certificate::Discrepancy { a, system: system.clone(), coloring: x.clone() },
            instance::encode_sign_coloring,
        )?;
        write_string(out_report_json, json)
    })
}

/// Seeded search for a graph on r vertices with no n-clique and no
/// n-anticlique. `r = 0` means "use the guaranteed bound 2^floor((n-2)/2)";
/// `max_trials = 0` means the default budget of 1000.
///
/// # Safety
/// `out_report_json` must be valid for a write; the result is released with
/// `pmtk_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pmtk_find_ramsey_graph_json(
    n: u64,
    r: u64,
    seed: u64,
    max_trials: u64,
    out_report_json: *mut *mut c_char,
) -> PmtkStatus {
    if out_report_json.is_null() {
        return null_argument("out_report_json");
    }
    guarded(|| {
        let r = if r == 0 { None } else { Some(r as usize) };
        let trials = if max_trials == 0 { construct::DEFAULT_MAX_TRIALS } else { max_trials };
        let report = construct::find_ramsey_graph(n as usize, r, seed, trials)?;
        let json = trial_json(
            &report,
            |g| Certificate::RamseyGraph { n: n as usize, graph: g.clone() },
            instance::encode_graph,
        )?;
        write_string(out_report_json, json)
    })
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

/// Checks a "pmtk/1" graph document against the claim "no n-clique and no
/// n-anticlique". `out_ok` gets the verdict; `out_reason` (optional) gets the
/// first violated constraint or a summary of what was checked.
///
/// # Safety
/// `graph_json` must be a valid NUL-terminated string; `out_ok` must be valid
/// for a write; `out_reason` may be NULL, otherwise it must be valid for a
/// write and the result is released with `pmtk_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pmtk_verify_ramsey_json(
    graph_json: *const c_char,
    n: u64,
    out_ok: *mut bool,
    out_reason: *mut *mut c_char,
) -> PmtkStatus {
    if graph_json.is_null() {
        return null_argument("graph_json");
    }
    if out_ok.is_null() {
        return null_argument("out_ok");
    }
    guarded(|| {
        let graph = instance::decode_graph(&instance::from_json(str_arg(graph_json)?)?)?;
        let v = verify_certificate(&Certificate::RamseyGraph { n: n as usize, graph })?;
        if !out_reason.is_null() {
            write_string(out_reason, v.reason)?;
        }
        *out_ok = v.ok;
        Ok(())
    })
}

/// Checks a "pmtk/1" sign-coloring document against a set system and the
/// claim "every member set has |delta| < a".
///
/// # Safety
/// `coloring_json` must be a valid NUL-terminated string; `sys` must be a
/// live handle; `out_ok` must be valid for a write; `out_reason` may be NULL,
/// otherwise it must be valid for a write and the result is released with
/// `pmtk_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pmtk_verify_coloring_json(
    coloring_json: *const c_char,
    sys: *const PmtkSetSystem,
    a: u64,
    out_ok: *mut bool,
    out_reason: *mut *mut c_char,
) -> PmtkStatus {
    if coloring_json.is_null() {
        return null_argument("coloring_json");
    }
    if sys.is_null() {
        return null_argument("sys");
    }
    if out_ok.is_null() {
        return null_argument("out_ok");
    }
    guarded(|| {
        let coloring =
            instance::decode_sign_coloring(&instance::from_json(str_arg(coloring_json)?)?)?;
        let v = verify_certificate(&Certificate::Discrepancy {
            a,
            system: (*sys).inner.clone(),
            coloring,
        })?;
        if !out_reason.is_null() {
            write_string(out_reason, v.reason)?;
        }
        *out_ok = v.ok;
        Ok(())
    })
}
