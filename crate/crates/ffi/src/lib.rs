//! C ABI for `permod`.
//!
//! Models and group actions are opaque handles created by `permod_*_new`-style
//! constructors and released with the matching `_free`. Every fallible call
//! returns a [`PermodStatus`]; on failure the message is available from
//! [`permod_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use permod::alpha::{check_gamma_naturality, check_modular_invariance, induction_step_check, z_matrix};
use permod::category::{load_model, verify_hexagon, verify_pentagon, AnyonModel, LoadOptions, ModelSource};
use permod::group_action::PermutationAction;
use permod::permutation_module::module_pentagon_check_multi;
use permod::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermodStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Parse = 4,
    InvalidModel = 5,
    AxiomViolation = 6,
    Group = 7,
    Io = 8,
    Panic = 9,
}

/// A validated anyon model.
pub struct PermodModel(AnyonModel);

/// A permutation action of a finitely generated group on a finite set.
pub struct PermodAction(PermutationAction);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> PermodStatus {
    match e {
        Error::Parse(_) | Error::Json(_) => PermodStatus::Parse,
        Error::InvalidModel(_) | Error::Multiplicity { .. } | Error::UnknownLabel(_) => PermodStatus::InvalidModel,
        Error::AxiomViolation { .. } => PermodStatus::AxiomViolation,
        Error::InvalidPermutation(_)
        | Error::GroupTooLarge { .. }
        | Error::UnknownSymbol(_)
        | Error::MalformedWord { .. }
        | Error::OrbitNotStable
        | Error::CoverInconsistency(_) => PermodStatus::Group,
        Error::Io(_) => PermodStatus::Io,
        _ => PermodStatus::InvalidArgument,
    }
}

struct Failure(PermodStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PermodStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PermodStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PermodStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(PermodStatus::NullPointer, format!("`{what}` is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(PermodStatus::InvalidUtf8, format!("`{what}` is not valid UTF-8")))
}

unsafe fn slice_arg<'a>(p: *const usize, len: usize, what: &str) -> Result<&'a [usize], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn options(verify: bool) -> LoadOptions {
    LoadOptions { verify, ..LoadOptions::default() }
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn permod_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Loads a built-in model (`fibonacci`, `ising`, `vec_z<N>`, `vec_z<N>:<p>`).
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permod_model_builtin(name: *const c_char, out: *mut *mut PermodModel) -> PermodStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let model = load_model(&ModelSource::builtin(name)?, options(true))?;
        write(out, Box::into_raw(Box::new(PermodModel(model))), "out")
    })
}

/// Parses a model document. With `verify` set, the model is rejected unless
/// the pentagon and hexagon identities hold.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permod_model_from_json(
    json: *const c_char,
    verify: bool,
    out: *mut *mut PermodModel,
) -> PermodStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let model = load_model(&ModelSource::Document(text.to_owned()), options(verify))?;
        write(out, Box::into_raw(Box::new(PermodModel(model))), "out")
    })
}

/// # Safety
/// `model` must be null or a handle from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn permod_model_free(model: *mut PermodModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// Number of simple objects, or 0 for a null handle.
///
/// # Safety
/// `model` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn permod_model_num_labels(model: *const PermodModel) -> usize {
    model.as_ref().map_or(0, |m| m.0.num_labels())
}

/// Maximum pentagon and hexagon residuals.
///
/// # Safety
/// `model` must be a live handle; the output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn permod_model_verify(
    model: *const PermodModel,
    pentagon: *mut f64,
    hexagon: *mut f64,
) -> PermodStatus {
    guard(|| {
        let m = &ref_arg(model, "model")?.0;
        write(pentagon, verify_pentagon(m).max_residual, "pentagon")?;
        write(hexagon, verify_hexagon(m).max_residual, "hexagon")
    })
}

/// Parses a group-action document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permod_action_from_json(json: *const c_char, out: *mut *mut PermodAction) -> PermodStatus {
    guard(|| {
        let action = PermutationAction::from_json(str_arg(json, "json")?)?;
        write(out, Box::into_raw(Box::new(PermodAction(action))), "out")
    })
}

/// `cyclic:N`, `symmetric:N`, or the path of a group-action document.
///
/// # Safety
/// `reference` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permod_action_resolve(
    reference: *const c_char,
    out: *mut *mut PermodAction,
) -> PermodStatus {
    guard(|| {
        let action = PermutationAction::resolve_reference(str_arg(reference, "reference")?)?;
        write(out, Box::into_raw(Box::new(PermodAction(action))), "out")
    })
}

/// # Safety
/// `action` must be null or a handle from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn permod_action_free(action: *mut PermodAction) {
    if !action.is_null() {
        drop(Box::from_raw(action));
    }
}

/// Size of the permuted set, or 0 for a null handle.
///
/// # Safety
/// `action` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn permod_action_size(action: *const PermodAction) -> usize {
    action.as_ref().map_or(0, |a| a.0.size())
}

/// Writes the images of the group element `word` (e.g. `"r*s"`) to
/// `images[0..size]`.
///
/// # Safety
/// `word` must be a NUL-terminated string and `images` must hold
/// `permod_action_size(action)` entries.
#[no_mangle]
pub unsafe extern "C" fn permod_action_element(
    action: *const PermodAction,
    word: *const c_char,
    images: *mut usize,
) -> PermodStatus {
    guard(|| {
        let a = &ref_arg(action, "action")?.0;
        let g = a.resolve(str_arg(word, "word")?)?;
        if images.is_null() {
            return Err(null("images"));
        }
        std::slice::from_raw_parts_mut(images, g.degree()).copy_from_slice(g.images());
        Ok(())
    })
}

/// Residual of the mixed pentagon for the element `word`. `a`, `b`, `c`
/// have one label per point of X, `m` one label per `<g>`-orbit in order of
/// smallest element.
///
/// # Safety
/// Handles must be live, `word` NUL-terminated, and each array must hold the
/// stated number of entries.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn permod_pentagon_check(
    model: *const PermodModel,
    action: *const PermodAction,
    word: *const c_char,
    a: *const usize,
    b: *const usize,
    c: *const usize,
    x_len: usize,
    m: *const usize,
    m_len: usize,
    residual: *mut f64,
) -> PermodStatus {
    guard(|| {
        let model = &ref_arg(model, "model")?.0;
        let action = &ref_arg(action, "action")?.0;
        let g = action.resolve(str_arg(word, "word")?)?;
        let r = module_pentagon_check_multi(
            model,
            action,
            &g,
            slice_arg(a, x_len, "a")?,
            slice_arg(b, x_len, "b")?,
            slice_arg(c, x_len, "c")?,
            slice_arg(m, m_len, "m")?,
        )?;
        write(residual, r, "residual")
    })
}

/// Residual of the naturality of `Γ` on one orbit of size `n`, with `u` and
/// `v` listed in action order.
///
/// # Safety
/// `model` must be live; `u` and `v` must hold `n` entries.
#[no_mangle]
pub unsafe extern "C" fn permod_gamma_check(
    model: *const PermodModel,
    u: *const usize,
    v: *const usize,
    n: usize,
    m: usize,
    residual: *mut f64,
) -> PermodStatus {
    guard(|| {
        let model = &ref_arg(model, "model")?.0;
        let r = check_gamma_naturality(model, slice_arg(u, n, "u")?, slice_arg(v, n, "v")?, m)?;
        write(residual, r, "residual")
    })
}

/// Residuals of the two induction identities at orbit size `n ≥ 3`.
///
/// # Safety
/// `model` must be live; `u` and `v` must hold `n` entries.
#[no_mangle]
pub unsafe extern "C" fn permod_induction_check(
    model: *const PermodModel,
    u: *const usize,
    v: *const usize,
    n: usize,
    m: usize,
    left: *mut f64,
    right: *mut f64,
) -> PermodStatus {
    guard(|| {
        let model = &ref_arg(model, "model")?.0;
        let rep = induction_step_check(model, slice_arg(u, n, "u")?, slice_arg(v, n, "v")?, m)?;
        write(left, rep.l_residual, "left")?;
        write(right, rep.r_residual, "right")
    })
}

/// Commutators of `Z(g)` with `S^{⊗X}` and `T^{⊗X}`, for `g` given by its
/// images on `0..degree`.
///
/// # Safety
/// `model` must be live and `images` must hold `degree` entries.
#[no_mangle]
pub unsafe extern "C" fn permod_zmatrix_check(
    model: *const PermodModel,
    images: *const usize,
    degree: usize,
    s_residual: *mut f64,
    t_residual: *mut f64,
) -> PermodStatus {
    guard(|| {
        let model = &ref_arg(model, "model")?.0;
        let g = permod::group_action::Perm::new(slice_arg(images, degree, "images")?.to_vec())?;
        let rep = check_modular_invariance(model, &z_matrix(&g, model.num_labels())?)?;
        write(s_residual, rep.s_residual, "s_residual")?;
        write(t_residual, rep.t_residual, "t_residual")
    })
}
