//! C ABI over the engine: opaque handles behind pointers, integer
//! status codes, JSON strings for structured results.
//!
//! Conventions, kept by every entry point below:
//! - out parameters are written only when the call returns
//!   `STMOD_STATUS_OK`;
//! - any other status leaves a message readable through
//!   `stmod_last_error` until the next failing call on the same thread;
//! - strings returned through `char **` belong to the caller and are
//!   released with `stmod_string_free`;
//! - every handle is released with its matching `_free`, all of which
//!   accept null;
//! - panics never unwind across the boundary; they come back as
//!   `STMOD_STATUS_INTERNAL`.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use serde::Serialize;
use serde_json::json;
use stmod::ar::strong_ghost_witness;
use stmod::cohom::tate_dim;
use stmod::ghosts::{is_ghost, is_strong_ghost, ModeRequest};
use stmod::groups::Group;
use stmod::linalg::{Matrix, PrimeField};
use stmod::reps::{Module, ModuleMap};
use stmod::reports::run_report;
use stmod::stable::{Caps, StableCtx};
use stmod::Error;

/// Status code returned by every fallible entry point.
#[repr(i32)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StmodStatus {
    /// Computed; out parameters are valid. Refutations (a verdict of
    /// not-ghost, a report that fails) are still Ok.
    Ok = 0,
    /// Rejected input: parse failure, validation failure, incompatible
    /// operands.
    BadInput = 1,
    /// Blocked by a configured cap before any verdict was reached.
    Cap = 2,
    /// Internal invariant violation or a panic; a bug, please report.
    Internal = 3,
    /// A required pointer argument was null.
    NullArg = 4,
    /// A string argument was not valid UTF-8.
    Utf8 = 5,
    /// The result could not be serialized to JSON.
    Json = 6,
}

/// Engine context: caps, seed, and the syzygy/hom caches.
pub struct StmodCtx {
    inner: StableCtx,
}

/// A validated finite group with its multiplication table.
pub struct StmodGroup {
    inner: Arc<Group>,
}

/// A finite dimensional module over a group algebra.
pub struct StmodModule {
    inner: Module,
}

/// An equivariant linear map between two modules.
pub struct StmodMap {
    inner: ModuleMap,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: StmodStatus, message: &str) -> StmodStatus {
    let printable = message.replace('\0', " ");
    let owned = CString::new(printable)
        .unwrap_or_else(|_| CString::new("unprintable error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(owned));
    status
}

fn fail_error(e: &Error) -> StmodStatus {
    let status = match e.exit_code() {
        2 => StmodStatus::Cap,
        3 => StmodStatus::Internal,
        _ => StmodStatus::BadInput,
    };
    fail(status, &e.to_string())
}

/// Runs the body with a panic guard; a panic is reported like an
/// internal error instead of unwinding into the caller.
fn guarded(body: impl FnOnce() -> StmodStatus) -> StmodStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "opaque panic payload".into());
            fail(StmodStatus::Internal, &format!("panic: {msg}"))
        }
    }
}

unsafe fn cstr<'a>(p: *const c_char, what: &str) -> Result<&'a str, StmodStatus> {
    if p.is_null() {
        return Err(fail(StmodStatus::NullArg, &format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(StmodStatus::Utf8, &format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, StmodStatus> {
    p.as_ref()
        .ok_or_else(|| fail(StmodStatus::NullArg, &format!("{what} is null")))
}

unsafe fn slot<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, StmodStatus> {
    p.as_mut()
        .ok_or_else(|| fail(StmodStatus::NullArg, &format!("{what} is null")))
}

fn json_out<T: Serialize>(value: &T, out: &mut *mut c_char) -> StmodStatus {
    let text = match serde_json::to_string_pretty(value) {
        Ok(t) => t,
        Err(e) => return fail(StmodStatus::Json, &format!("serialize: {e}")),
    };
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            StmodStatus::Ok
        }
        Err(_) => fail(StmodStatus::Json, "serialized text contains a NUL byte"),
    }
}

/// Crate version as a static string; never freed.
#[no_mangle]
pub extern "C" fn stmod_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the most recent failure on this thread, or null when
/// every call so far succeeded. The pointer stays valid until the next
/// failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn stmod_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |c| c.as_ptr())
    })
}

/// Releases a string returned through a `char **` out parameter.
#[no_mangle]
pub unsafe extern "C" fn stmod_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates an engine context. `degree_cap` bounds the Tate degrees any
/// computation may touch (the syzygy cap is twice that); `seed` fixes
/// every randomized search, so equal seeds give equal answers.
#[no_mangle]
pub unsafe extern "C" fn stmod_ctx_new(
    seed: u64,
    degree_cap: i64,
    out: *mut *mut StmodCtx,
) -> StmodStatus {
    guarded(|| {
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        if degree_cap < 1 {
            return fail(StmodStatus::BadInput, "degree_cap must be positive");
        }
        let caps = Caps { degree: degree_cap, syzygy: 2 * degree_cap, ..Caps::default() };
        *out = Box::into_raw(Box::new(StmodCtx { inner: StableCtx::with_caps(caps, seed) }));
        StmodStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn stmod_ctx_free(ctx: *mut StmodCtx) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Builds a group from a spec: `trivial`, `cyclic:N`, `elemab:P:K`,
/// `dihedral:ORDER`, `quaternion:8`, `symmetric:M`, or
/// `product:SPEC,SPEC[,...]` of further specs.
#[no_mangle]
pub unsafe extern "C" fn stmod_group_from_spec(
    spec: *const c_char,
    out: *mut *mut StmodGroup,
) -> StmodStatus {
    guarded(|| {
        let spec = match cstr(spec, "spec") {
            Ok(s) => s,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        match Group::from_spec(spec) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(StmodGroup { inner: Arc::new(g) }));
                StmodStatus::Ok
            }
            Err(e) => fail_error(&e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn stmod_group_free(g: *mut StmodGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

#[no_mangle]
pub unsafe extern "C" fn stmod_group_order(
    g: *const StmodGroup,
    out: *mut u64,
) -> StmodStatus {
    guarded(|| {
        let g = match handle(g, "group") {
            Ok(g) => g,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        *out = g.inner.order() as u64;
        StmodStatus::Ok
    })
}

/// Structural facts about a group as a JSON object: name, order,
/// abelian flag, element orders, generator set, table fingerprint.
#[no_mangle]
pub unsafe extern "C" fn stmod_group_describe(
    g: *const StmodGroup,
    out: *mut *mut c_char,
) -> StmodStatus {
    guarded(|| {
        let g = match handle(g, "group") {
            Ok(g) => &g.inner,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        let orders: Vec<usize> = (0..g.order() as u8).map(|e| g.element_order(e)).collect();
        json_out(
            &json!({
                "name": g.name(),
                "order": g.order(),
                "abelian": g.is_abelian(),
                "element_orders": orders,
                "generators": g.generators(),
                "fingerprint": g.fingerprint(),
            }),
            out,
        )
    })
}

/// Builds a module over `group` in characteristic `p` from a spec:
/// `trivial`, `regular`, `jordan:I`, or `v4band:N:LAMBDA`.
#[no_mangle]
pub unsafe extern "C" fn stmod_module_from_spec(
    group: *const StmodGroup,
    p: u64,
    spec: *const c_char,
    out: *mut *mut StmodModule,
) -> StmodStatus {
    guarded(|| {
        let g = match handle(group, "group") {
            Ok(g) => g,
            Err(s) => return s,
        };
        let spec = match cstr(spec, "spec") {
            Ok(s) => s,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        let built = PrimeField::new(p).and_then(|f| Module::from_spec(&g.inner, f, spec));
        match built {
            Ok(m) => {
                *out = Box::into_raw(Box::new(StmodModule { inner: m }));
                StmodStatus::Ok
            }
            Err(e) => fail_error(&e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn stmod_module_free(m: *mut StmodModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

#[no_mangle]
pub unsafe extern "C" fn stmod_module_dim(
    m: *const StmodModule,
    out: *mut u64,
) -> StmodStatus {
    guarded(|| {
        let m = match handle(m, "module") {
            Ok(m) => m,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        *out = m.inner.dim() as u64;
        StmodStatus::Ok
    })
}

/// Module facts as a JSON object: name, dimension, characteristic, and
/// the group it lives over.
#[no_mangle]
pub unsafe extern "C" fn stmod_module_describe(
    m: *const StmodModule,
    out: *mut *mut c_char,
) -> StmodStatus {
    guarded(|| {
        let m = match handle(m, "module") {
            Ok(m) => &m.inner,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        json_out(
            &json!({
                "name": m.name(),
                "dim": m.dim(),
                "p": m.field().p(),
                "group": m.group().name(),
                "group_order": m.group().order(),
            }),
            out,
        )
    })
}

/// The linear dual with the contragredient action.
#[no_mangle]
pub unsafe extern "C" fn stmod_module_dual(
    m: *const StmodModule,
    out: *mut *mut StmodModule,
) -> StmodStatus {
    guarded(|| {
        let m = match handle(m, "module") {
            Ok(m) => m,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        *out = Box::into_raw(Box::new(StmodModule { inner: m.inner.dual() }));
        StmodStatus::Ok
    })
}

/// The i-th syzygy as a projective-free module; negative `i` takes
/// cosyzygies. `i = 0` strips projective summands.
#[no_mangle]
pub unsafe extern "C" fn stmod_module_syzygy(
    ctx: *const StmodCtx,
    m: *const StmodModule,
    i: i64,
    out: *mut *mut StmodModule,
) -> StmodStatus {
    guarded(|| {
        let ctx = match handle(ctx, "ctx") {
            Ok(c) => c,
            Err(s) => return s,
        };
        let m = match handle(m, "module") {
            Ok(m) => m,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        match ctx.inner.syzygy(&m.inner, i) {
            Ok(s) => {
                *out = Box::into_raw(Box::new(StmodModule { inner: s }));
                StmodStatus::Ok
            }
            Err(e) => fail_error(&e),
        }
    })
}

/// Wraps `entries` as an equivariant map `domain -> codomain`. The
/// matrix is row major with `dim codomain` rows and `dim domain`
/// columns, entries reduced mod p; non-equivariant matrices are
/// rejected.
#[no_mangle]
pub unsafe extern "C" fn stmod_map_new(
    domain: *const StmodModule,
    codomain: *const StmodModule,
    entries: *const u8,
    len: usize,
    out: *mut *mut StmodMap,
) -> StmodStatus {
    guarded(|| {
        let m = match handle(domain, "domain") {
            Ok(m) => &m.inner,
            Err(s) => return s,
        };
        let n = match handle(codomain, "codomain") {
            Ok(n) => &n.inner,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        if m.group().fingerprint() != n.group().fingerprint() || m.field() != n.field() {
            return fail(
                StmodStatus::BadInput,
                "domain and codomain live over different group algebras",
            );
        }
        let rows = n.dim();
        let cols = m.dim();
        if entries.is_null() && len != 0 {
            return fail(StmodStatus::NullArg, "entries is null");
        }
        if len != rows * cols {
            return fail(
                StmodStatus::BadInput,
                &format!("expected {rows} x {cols} = {} entries, got {len}", rows * cols),
            );
        }
        let flat = if len == 0 { &[][..] } else { std::slice::from_raw_parts(entries, len) };
        let p = m.field().p() as u8;
        let reduced: Vec<Vec<u8>> = (0..rows)
            .map(|r| flat[r * cols..(r + 1) * cols].iter().map(|&e| e % p).collect())
            .collect();
        let built = Matrix::from_rows(m.field(), &reduced)
            .and_then(|mat| ModuleMap::new(m.clone(), n.clone(), mat));
        match built {
            Ok(phi) => {
                *out = Box::into_raw(Box::new(StmodMap { inner: phi }));
                StmodStatus::Ok
            }
            Err(e) => fail_error(&e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn stmod_map_free(f: *mut StmodMap) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Whether the map factors through a projective module.
#[no_mangle]
pub unsafe extern "C" fn stmod_map_is_stably_zero(
    ctx: *const StmodCtx,
    f: *const StmodMap,
    out: *mut bool,
) -> StmodStatus {
    guarded(|| {
        let ctx = match handle(ctx, "ctx") {
            Ok(c) => c,
            Err(s) => return s,
        };
        let f = match handle(f, "map") {
            Ok(f) => f,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        match ctx.inner.is_stably_zero(&f.inner) {
            Ok(z) => {
                *out = z;
                StmodStatus::Ok
            }
            Err(e) => fail_error(&e),
        }
    })
}

/// Dimension of the stable hom space Hom(m, n) modulo maps factoring
/// through projectives.
#[no_mangle]
pub unsafe extern "C" fn stmod_stable_hom_dim(
    ctx: *const StmodCtx,
    m: *const StmodModule,
    n: *const StmodModule,
    out: *mut u64,
) -> StmodStatus {
    guarded(|| {
        let ctx = match handle(ctx, "ctx") {
            Ok(c) => c,
            Err(s) => return s,
        };
        let m = match handle(m, "domain") {
            Ok(m) => m,
            Err(s) => return s,
        };
        let n = match handle(n, "codomain") {
            Ok(n) => n,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        match ctx.inner.stable_hom(&m.inner, &n.inner) {
            Ok(sh) => {
                *out = sh.dim() as u64;
                StmodStatus::Ok
            }
            Err(e) => fail_error(&e),
        }
    })
}

/// Dimension of Tate cohomology of the module's group with the module
/// as coefficients, in degree `i` (any sign).
#[no_mangle]
pub unsafe extern "C" fn stmod_tate_dim(
    ctx: *const StmodCtx,
    m: *const StmodModule,
    i: i64,
    out: *mut u64,
) -> StmodStatus {
    guarded(|| {
        let ctx = match handle(ctx, "ctx") {
            Ok(c) => c,
            Err(s) => return s,
        };
        let m = match handle(m, "module") {
            Ok(m) => m,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        match tate_dim(&ctx.inner, &m.inner, i) {
            Ok(d) => {
                *out = d as u64;
                StmodStatus::Ok
            }
            Err(e) => fail_error(&e),
        }
    })
}

/// Ghost certificate for a map as JSON, in the given mode: `auto`,
/// `periodic`, `bounds`, or `window:FROM:TO`; null means `auto`. A
/// verdict of not-ghost is still `STMOD_STATUS_OK`; read the verdict
/// from the JSON.
#[no_mangle]
pub unsafe extern "C" fn stmod_ghost_check(
    ctx: *const StmodCtx,
    f: *const StmodMap,
    mode: *const c_char,
    out: *mut *mut c_char,
) -> StmodStatus {
    guarded(|| {
        let ctx = match handle(ctx, "ctx") {
            Ok(c) => c,
            Err(s) => return s,
        };
        let f = match handle(f, "map") {
            Ok(f) => f,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        let req = if mode.is_null() {
            ModeRequest::Auto
        } else {
            let text = match cstr(mode, "mode") {
                Ok(t) => t,
                Err(s) => return s,
            };
            match text.parse() {
                Ok(r) => r,
                Err(e) => return fail_error(&e),
            }
        };
        match is_ghost(&ctx.inner, &f.inner, req) {
            Ok(cert) => json_out(&cert, out),
            Err(e) => fail_error(&e),
        }
    })
}

/// Strong-ghost certificate as JSON: ghost on every restriction to a
/// subgroup. `reduce_to_conjugacy_classes` sweeps one subgroup per
/// conjugacy class instead of all of them.
#[no_mangle]
pub unsafe extern "C" fn stmod_ghost_strong(
    ctx: *const StmodCtx,
    f: *const StmodMap,
    reduce_to_conjugacy_classes: bool,
    out: *mut *mut c_char,
) -> StmodStatus {
    guarded(|| {
        let ctx = match handle(ctx, "ctx") {
            Ok(c) => c,
            Err(s) => return s,
        };
        let f = match handle(f, "map") {
            Ok(f) => f,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        match is_strong_ghost(&ctx.inner, &f.inner, reduce_to_conjugacy_classes) {
            Ok(cert) => json_out(&cert, out),
            Err(e) => fail_error(&e),
        }
    })
}

/// Searches for a module whose almost split sequence yields a strong
/// ghost out of it, over `group` in characteristic `p`. The JSON
/// carries `found` plus, when found, the module data, the checked
/// conditions, and both certificates; groups proven to have none
/// report `found: false`.
#[no_mangle]
pub unsafe extern "C" fn stmod_strong_ghost_witness(
    ctx: *const StmodCtx,
    group: *const StmodGroup,
    p: u64,
    out: *mut *mut c_char,
) -> StmodStatus {
    guarded(|| {
        let ctx = match handle(ctx, "ctx") {
            Ok(c) => c,
            Err(s) => return s,
        };
        let g = match handle(group, "group") {
            Ok(g) => g,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        let f = match PrimeField::new(p) {
            Ok(f) => f,
            Err(e) => return fail_error(&e),
        };
        match strong_ghost_witness(&ctx.inner, &g.inner, f) {
            Ok(None) => json_out(&json!({ "found": false, "group": g.inner.name() }), out),
            Ok(Some(w)) => json_out(
                &json!({
                    "found": true,
                    "group": g.inner.name(),
                    "module": w.module.name(),
                    "dim": w.dim,
                    "dim_mod_order": w.dim_mod_order,
                    "dim_coprime_to_p": w.dim_coprime_to_p,
                    "syzygy_dims_exclude": w.syzygy_dims_exclude,
                    "syzygy_iso_range": w.syzygy_iso_range,
                    "condition_one": w.condition_one,
                    "restrictions": w.restrictions,
                    "sylow": w.sylow,
                    "stably_zero": w.stably_zero,
                    "ar_solution_dim": w.ar_solution_dim,
                    "ghost": w.ghost_cert,
                    "strong": w.strong_cert,
                }),
                out,
            ),
            Err(e) => fail_error(&e),
        }
    })
}

/// Runs one named verification report and returns it as JSON. Valid
/// names are the CLI's report names; the JSON's `pass` field says
/// whether every check held (a failing report is still
/// `STMOD_STATUS_OK`).
#[no_mangle]
pub unsafe extern "C" fn stmod_report_run(
    ctx: *const StmodCtx,
    name: *const c_char,
    out: *mut *mut c_char,
) -> StmodStatus {
    guarded(|| {
        let ctx = match handle(ctx, "ctx") {
            Ok(c) => c,
            Err(s) => return s,
        };
        let name = match cstr(name, "name") {
            Ok(n) => n,
            Err(s) => return s,
        };
        let out = match slot(out, "out") {
            Ok(o) => o,
            Err(s) => return s,
        };
        match run_report(name, &ctx.inner) {
            Ok(report) => json_out(&report, out),
            Err(e) => fail_error(&e),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    unsafe fn group(spec: &str) -> *mut StmodGroup {
        let spec = CString::new(spec).unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(stmod_group_from_spec(spec.as_ptr(), &mut g), StmodStatus::Ok);
        g
    }

    unsafe fn module(g: *const StmodGroup, p: u64, spec: &str) -> *mut StmodModule {
        let spec = CString::new(spec).unwrap();
        let mut m = ptr::null_mut();
        assert_eq!(stmod_module_from_spec(g, p, spec.as_ptr(), &mut m), StmodStatus::Ok);
        m
    }

    unsafe fn take_json(p: *mut c_char) -> serde_json::Value {
        assert!(!p.is_null());
        let v = serde_json::from_str(CStr::from_ptr(p).to_str().unwrap()).unwrap();
        stmod_string_free(p);
        v
    }

    #[test]
    fn version_is_a_static_string() {
        let v = unsafe { CStr::from_ptr(stmod_version()) };
        assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }

    #[test]
    fn nulls_are_rejected_not_dereferenced() {
        unsafe {
            let mut order = 0u64;
            assert_eq!(stmod_group_order(ptr::null(), &mut order), StmodStatus::NullArg);
            let err = CStr::from_ptr(stmod_last_error()).to_str().unwrap();
            assert!(err.contains("null"), "{err}");

            let mut g = ptr::null_mut();
            assert_eq!(stmod_group_from_spec(ptr::null(), &mut g), StmodStatus::NullArg);
            let spec = CString::new("cyclic:4").unwrap();
            assert_eq!(
                stmod_group_from_spec(spec.as_ptr(), ptr::null_mut()),
                StmodStatus::NullArg
            );
        }
    }

    #[test]
    fn bad_specs_report_bad_input_with_a_message() {
        unsafe {
            let spec = CString::new("dodecahedral:11").unwrap();
            let mut g = ptr::null_mut();
            assert_eq!(stmod_group_from_spec(spec.as_ptr(), &mut g), StmodStatus::BadInput);
            let err = CStr::from_ptr(stmod_last_error()).to_str().unwrap();
            assert!(err.contains("dodecahedral"), "{err}");
        }
    }

    #[test]
    fn group_and_module_lifecycle() {
        unsafe {
            let g = group("quaternion:8");
            let mut order = 0u64;
            assert_eq!(stmod_group_order(g, &mut order), StmodStatus::Ok);
            assert_eq!(order, 8);

            let mut described = ptr::null_mut();
            assert_eq!(stmod_group_describe(g, &mut described), StmodStatus::Ok);
            let info = take_json(described);
            assert_eq!(info["abelian"], false);
            assert_eq!(info["order"], 8);

            let m = module(g, 2, "trivial");
            let mut dim = 0u64;
            assert_eq!(stmod_module_dim(m, &mut dim), StmodStatus::Ok);
            assert_eq!(dim, 1);

            let mut dual = ptr::null_mut();
            assert_eq!(stmod_module_dual(m, &mut dual), StmodStatus::Ok);
            assert_eq!(stmod_module_dim(dual, &mut dim), StmodStatus::Ok);
            assert_eq!(dim, 1);

            stmod_module_free(dual);
            stmod_module_free(m);
            stmod_group_free(g);
        }
    }

    #[test]
    fn syzygy_and_tate_dims_match_the_engine() {
        unsafe {
            let mut ctx = ptr::null_mut();
            assert_eq!(stmod_ctx_new(7, 12, &mut ctx), StmodStatus::Ok);
            let g = group("quaternion:8");
            let k = module(g, 2, "trivial");

            let mut s = ptr::null_mut();
            assert_eq!(stmod_module_syzygy(ctx, k, 1, &mut s), StmodStatus::Ok);
            let mut dim = 0u64;
            assert_eq!(stmod_module_dim(s, &mut dim), StmodStatus::Ok);
            assert_eq!(dim, 7);

            // Q_8 pattern 1, 2, 2, 1 repeating with period 4
            let expect = [1u64, 2, 2, 1];
            for i in -4i64..=4 {
                let mut d = 0u64;
                assert_eq!(stmod_tate_dim(ctx, k, i, &mut d), StmodStatus::Ok);
                assert_eq!(d, expect[i.rem_euclid(4) as usize], "degree {i}");
            }

            // the configured cap reports Cap, not an answer
            let mut d = 0u64;
            assert_eq!(stmod_tate_dim(ctx, k, 40, &mut d), StmodStatus::Cap);

            stmod_module_free(s);
            stmod_module_free(k);
            stmod_group_free(g);
            stmod_ctx_free(ctx);
        }
    }

    #[test]
    fn ghost_certificates_round_trip_as_json() {
        unsafe {
            let mut ctx = ptr::null_mut();
            assert_eq!(stmod_ctx_new(7, 12, &mut ctx), StmodStatus::Ok);
            let g = group("cyclic:4");
            let m2 = module(g, 2, "jordan:2");

            // g - 1 on J_2: entries row major, rows = cols = 2
            let entries = [0u8, 1, 0, 0];
            let mut f = ptr::null_mut();
            assert_eq!(
                stmod_map_new(m2, m2, entries.as_ptr(), entries.len(), &mut f),
                StmodStatus::Ok
            );

            let mut zero = true;
            assert_eq!(stmod_map_is_stably_zero(ctx, f, &mut zero), StmodStatus::Ok);
            assert!(!zero);

            let mode = CString::new("periodic").unwrap();
            let mut cert = ptr::null_mut();
            assert_eq!(stmod_ghost_check(ctx, f, mode.as_ptr(), &mut cert), StmodStatus::Ok);
            let cert = take_json(cert);
            assert_eq!(cert["verdict"], "ghost");
            assert_eq!(cert["assumptions"]["d"], 2);

            let mut strong = ptr::null_mut();
            assert_eq!(stmod_ghost_strong(ctx, f, false, &mut strong), StmodStatus::Ok);
            let strong = take_json(strong);
            assert_eq!(strong["verdict"], "not-ghost");
            assert_eq!(strong["witness"]["kind"], "NotGhost");

            // non-equivariant matrices are rejected at construction
            let skew = [1u8, 0, 0, 0];
            let mut bad = ptr::null_mut();
            assert_eq!(
                stmod_map_new(m2, m2, skew.as_ptr(), skew.len(), &mut bad),
                StmodStatus::BadInput
            );

            stmod_map_free(f);
            stmod_module_free(m2);
            stmod_group_free(g);
            stmod_ctx_free(ctx);
        }
    }

    #[test]
    fn witness_search_and_reports_run_end_to_end() {
        unsafe {
            let mut ctx = ptr::null_mut();
            assert_eq!(stmod_ctx_new(7, 12, &mut ctx), StmodStatus::Ok);

            let c3 = group("cyclic:3");
            let mut w = ptr::null_mut();
            assert_eq!(stmod_strong_ghost_witness(ctx, c3, 3, &mut w), StmodStatus::Ok);
            assert_eq!(take_json(w)["found"], false);

            let c5 = group("cyclic:5");
            let mut w = ptr::null_mut();
            assert_eq!(stmod_strong_ghost_witness(ctx, c5, 5, &mut w), StmodStatus::Ok);
            let w = take_json(w);
            assert_eq!(w["found"], true);
            assert_eq!(w["dim"], 2);
            assert_eq!(w["strong"]["verdict"], "ghost");

            let name = CString::new("duality").unwrap();
            let mut rep = ptr::null_mut();
            assert_eq!(stmod_report_run(ctx, name.as_ptr(), &mut rep), StmodStatus::Ok);
            let rep = take_json(rep);
            assert_eq!(rep["pass"], true);
            assert_eq!(rep["name"], "duality");

            let bogus = CString::new("nope").unwrap();
            let mut rep = ptr::null_mut();
            assert_eq!(stmod_report_run(ctx, bogus.as_ptr(), &mut rep), StmodStatus::BadInput);

            stmod_group_free(c5);
            stmod_group_free(c3);
            stmod_ctx_free(ctx);
        }
    }
}
