//! C ABI for `pencil-strata`.
//!
//! Pencils cross the boundary as opaque `PsPencil` handles; everything
//! structured (canonical forms, structures, decompositions) crosses as
//! UTF-8 JSON in the same formats as the command-line tool. Every function
//! returns a `PsStatus`; on failure, `ps_last_error_message` describes the
//! most recent error on the calling thread. Strings returned through `out`
//! parameters must be released with `ps_string_free`, handles with
//! `ps_pencil_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_rational::BigRational;
use pencil_strata::decomp::{
    perturb_to_full_rank, sample_component, witness_decomposition, DegreePatternDecomposition,
};
use pencil_strata::invariants::{kronecker_structure, normal_rank};
use pencil_strata::pencil::{FactoredForm, Pencil};
use pencil_strata::strata::{
    closure_includes, component_member, components_of, dimension, generic_pencil, verify_dimension, ComponentId,
};
use pencil_strata::Error;

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    MalformedInput = 3,
    Precondition = 4,
    DimensionMismatch = 5,
    Panic = 6,
}

/// Opaque handle to an exact pencil `A + λB`.
pub struct PsPencil {
    inner: Pencil,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs were replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

type Failure = (PsStatus, String);

fn from_error(e: Error) -> Failure {
    let status = match e {
        Error::Parse(_) => PsStatus::MalformedInput,
        Error::DimensionMismatch(_) => PsStatus::DimensionMismatch,
        _ => PsStatus::Precondition,
    };
    (status, e.to_string())
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(&format!("internal error: {msg}"));
            PsStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    (PsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|e| (PsStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn pencil_ref<'a>(p: *const PsPencil, what: &str) -> Result<&'a Pencil, Failure> {
    p.as_ref().map(|h| &h.inner).ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|e| (PsStatus::Precondition, e.to_string()))?;
    out.write(c.into_raw());
    Ok(())
}

unsafe fn write_pencil(out: *mut *mut PsPencil, p: Pencil) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(PsPencil { inner: p })));
    Ok(())
}

fn component(m: usize, n: usize, r: usize, a: usize) -> Result<ComponentId, Failure> {
    ComponentId::new(m, n, r, a).map_err(from_error)
}

/// Message of the last failed call on this thread, or null if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ps_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses `{"m","n","A","B"}` JSON into a new handle.
///
/// # Safety
/// `json` must be null or a NUL-terminated string; `out` must be null or
/// valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn ps_pencil_from_json(json: *const c_char, out: *mut *mut PsPencil) -> PsStatus {
    guard(|| {
        let p = Pencil::from_json_str(read_str(json, "json")?).map_err(from_error)?;
        write_pencil(out, p)
    })
}

/// Serializes a pencil to JSON.
///
/// # Safety
/// `p` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ps_pencil_to_json(p: *const PsPencil, out: *mut *mut c_char) -> PsStatus {
    guard(|| write_string(out, pencil_ref(p, "pencil")?.to_json_value().to_string()))
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ps_pencil_free(p: *mut PsPencil) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ps_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `p` must be null or a live handle; `m` and `n` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ps_pencil_dims(p: *const PsPencil, m: *mut usize, n: *mut usize) -> PsStatus {
    guard(|| {
        let p = pencil_ref(p, "pencil")?;
        write_out(m, p.m())?;
        write_out(n, p.n())
    })
}

/// # Safety
/// `p` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ps_pencil_normal_rank(p: *const PsPencil, out: *mut usize) -> PsStatus {
    guard(|| write_out(out, normal_rank(pencil_ref(p, "pencil")?)))
}

/// Kronecker structure as JSON.
///
/// # Safety
/// `p` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ps_pencil_classify_json(p: *const PsPencil, out: *mut *mut c_char) -> PsStatus {
    guard(|| write_string(out, kronecker_structure(pencil_ref(p, "pencil")?).to_json_value().to_string()))
}

/// Whether Q lies in the orbit closure of P. When `witness_json` is not
/// null it receives the verdict as JSON, including the failing condition.
///
/// # Safety
/// `p`, `q` must be null or live handles; `included` must be null or
/// writable; `witness_json` may be null.
#[no_mangle]
pub unsafe extern "C" fn ps_closure_includes(
    p: *const PsPencil,
    q: *const PsPencil,
    included: *mut bool,
    witness_json: *mut *mut c_char,
) -> PsStatus {
    guard(|| {
        let v = closure_includes(pencil_ref(p, "p")?, pencil_ref(q, "q")?).map_err(from_error)?;
        write_out(included, v.included)?;
        if !witness_json.is_null() {
            write_string(witness_json, serde_json::to_string(&v).expect("verdict serializes"))?;
        }
        Ok(())
    })
}

/// The generic pencil `K_a` of the component (m, n, r, a).
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ps_generic_pencil(
    m: usize,
    n: usize,
    r: usize,
    a: usize,
    out: *mut *mut PsPencil,
) -> PsStatus {
    guard(|| write_pencil(out, generic_pencil(&component(m, n, r, a)?)))
}

/// # Safety
/// `q` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ps_component_member(
    q: *const PsPencil,
    m: usize,
    n: usize,
    r: usize,
    a: usize,
    out: *mut bool,
) -> PsStatus {
    guard(|| {
        let member = component_member(pencil_ref(q, "q")?, &component(m, n, r, a)?).map_err(from_error)?;
        write_out(out, member)
    })
}

/// All `a` with Q in `C_a^r`, as a JSON array.
///
/// # Safety
/// `q` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ps_components_of_json(q: *const PsPencil, r: usize, out: *mut *mut c_char) -> PsStatus {
    guard(|| {
        let found = components_of(pencil_ref(q, "q")?, r).map_err(from_error)?;
        write_string(out, serde_json::to_string(&found).expect("list serializes"))
    })
}

/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ps_dimension(m: usize, n: usize, r: usize, a: usize, out: *mut usize) -> PsStatus {
    guard(|| write_out(out, dimension(&component(m, n, r, a)?)))
}

/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ps_verify_dimension(
    m: usize,
    n: usize,
    r: usize,
    a: usize,
    trials: usize,
    seed: u64,
    out: *mut bool,
) -> PsStatus {
    guard(|| write_out(out, verify_dimension(&component(m, n, r, a)?, trials, seed)))
}

/// Witness decomposition of a canonical form given as
/// `{"blocks": [...], "E": ..., "F": ...}` JSON.
///
/// # Safety
/// `form_json` must be null or NUL-terminated; `out` must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ps_witness_decomposition_json(
    form_json: *const c_char,
    m: usize,
    n: usize,
    r: usize,
    a: usize,
    out: *mut *mut c_char,
) -> PsStatus {
    guard(|| {
        let ff = FactoredForm::from_json_str(read_str(form_json, "form_json")?).map_err(from_error)?;
        let d = witness_decomposition(&ff, &component(m, n, r, a)?).map_err(from_error)?;
        write_string(out, d.to_json_value().to_string())
    })
}

/// Random member of the component. `decomposition_json` may be null.
///
/// # Safety
/// `out_pencil` must be null or writable; `decomposition_json` may be null.
#[no_mangle]
pub unsafe extern "C" fn ps_sample_component(
    m: usize,
    n: usize,
    r: usize,
    a: usize,
    seed: u64,
    height: u64,
    out_pencil: *mut *mut PsPencil,
    decomposition_json: *mut *mut c_char,
) -> PsStatus {
    guard(|| {
        let (_, p, d) = sample_component(&component(m, n, r, a)?, seed, height);
        if out_pencil.is_null() {
            return Err(null("output pointer"));
        }
        if !decomposition_json.is_null() {
            write_string(decomposition_json, d.to_json_value().to_string())?;
        }
        write_pencil(out_pencil, p)
    })
}

/// Perturbs the constant parts of an m×n decomposition by at most
/// `eps_num / eps_den` so that it reaches full normal rank.
///
/// # Safety
/// `decomposition_json` must be null or NUL-terminated; `out` must be null
/// or writable.
#[no_mangle]
pub unsafe extern "C" fn ps_perturb_to_full_rank_json(
    decomposition_json: *const c_char,
    m: usize,
    n: usize,
    eps_num: i64,
    eps_den: i64,
    seed: u64,
    out: *mut *mut c_char,
) -> PsStatus {
    guard(|| {
        if eps_den == 0 {
            return Err((PsStatus::Precondition, "eps denominator is zero".into()));
        }
        let d = DegreePatternDecomposition::from_json_str(read_str(decomposition_json, "decomposition_json")?, m, n)
            .map_err(from_error)?;
        let eps = BigRational::new(eps_num.into(), eps_den.into());
        let out_d = perturb_to_full_rank(&d, m, n, &eps, seed).map_err(from_error)?;
        write_string(out, out_d.to_json_value().to_string())
    })
}
