//! C ABI for the ym-verify toolkit.
//!
//! Conventions:
//! - Configurations are opaque handles created by `ymv_config_new` or
//!   `ymv_config_from_toml` and released with `ymv_config_free`.
//! - Strings returned through out-parameters are NUL-terminated, owned by
//!   the caller, and must be released with `ymv_string_free`.
//! - Return codes: 0 success, 1 check failed (validation or internal
//!   gate), -1 null or invalid argument, -2 invalid configuration,
//!   -3 internal error. Out-parameters are written only on codes >= 0.
//!
//! The matching header is `include/ym_verify.h`.

use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ym_verify::ansatz::{paper_presets, PresetField};
use ym_verify::claims::{run_claims, sweep_beta};
use ym_verify::report::{Report, RunConfig};
use ym_verify::Error;

pub const YMV_OK: c_int = 0;
pub const YMV_CHECK_FAILED: c_int = 1;
pub const YMV_NULL_ARG: c_int = -1;
pub const YMV_INVALID_CONFIG: c_int = -2;
pub const YMV_INTERNAL: c_int = -3;

/// Opaque run configuration.
pub struct YmvConfig {
    inner: RunConfig,
}

fn error_code(e: &Error) -> c_int {
    match e {
        Error::InvalidConfig(_) | Error::UnknownPreset(_) | Error::UnknownClaim(_) => {
            YMV_INVALID_CONFIG
        }
        _ => YMV_INTERNAL,
    }
}

/// Runs a closure producing a C string, storing it in `out`; converts
/// panics and errors to return codes.
fn guarded<F>(out: *mut *mut c_char, f: F) -> c_int
where
    F: FnOnce() -> Result<(String, c_int), Error>,
{
    if out.is_null() {
        return YMV_NULL_ARG;
    }
    let result = catch_unwind(AssertUnwindSafe(f));
    match result {
        Ok(Ok((text, code))) => match CString::new(text) {
            Ok(s) => {
                unsafe { *out = s.into_raw() };
                code
            }
            Err(_) => YMV_INTERNAL,
        },
        Ok(Err(e)) => error_code(&e),
        Err(_) => YMV_INTERNAL,
    }
}

/// Version of the underlying toolkit as a static string.
#[no_mangle]
pub extern "C" fn ymv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// New configuration with default settings (paper-single preset, beta 1).
#[no_mangle]
pub extern "C" fn ymv_config_new() -> *mut YmvConfig {
    Box::into_raw(Box::new(YmvConfig {
        inner: RunConfig::default(),
    }))
}

/// Parse a TOML run configuration. On success writes a new handle to
/// `out` and returns 0.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn ymv_config_from_toml(
    text: *const c_char,
    out: *mut *mut YmvConfig,
) -> c_int {
    if text.is_null() || out.is_null() {
        return YMV_NULL_ARG;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return YMV_NULL_ARG;
    };
    let parsed = catch_unwind(|| -> Result<RunConfig, Error> {
        let cfg: RunConfig = toml::from_str(text)
            .map_err(|e| Error::InvalidConfig(format!("config parse: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    });
    match parsed {
        Ok(Ok(cfg)) => {
            *out = Box::into_raw(Box::new(YmvConfig { inner: cfg }));
            YMV_OK
        }
        Ok(Err(e)) => error_code(&e),
        Err(_) => YMV_INTERNAL,
    }
}

/// Release a configuration handle. Null is a no-op.
///
/// # Safety
/// `cfg` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ymv_config_free(cfg: *mut YmvConfig) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

/// Check the parameter conditions of the configured field. Returns 0 when
/// all conditions hold at 1e-10, 1 when violated.
///
/// # Safety
/// `cfg` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn ymv_validate(cfg: *const YmvConfig) -> c_int {
    let Some(cfg) = cfg.as_ref() else {
        return YMV_NULL_ARG;
    };
    let result = catch_unwind(AssertUnwindSafe(|| -> Result<bool, Error> {
        let c = &cfg.inner;
        c.validate()?;
        let field = match (&c.preset, &c.spec) {
            (Some(name), _) => paper_presets(name, c.beta[0], c.s.clone())?,
            (None, Some(spec)) => PresetField::Single(spec.clone()),
            (None, None) => return Err(Error::InvalidConfig("no field specified".into())),
        };
        Ok(field
            .specs()
            .iter()
            .all(|s| s.validate_conditions().el_valid(1e-10)))
    }));
    match result {
        Ok(Ok(true)) => YMV_OK,
        Ok(Ok(false)) => YMV_CHECK_FAILED,
        Ok(Err(e)) => error_code(&e),
        Err(_) => YMV_INTERNAL,
    }
}

/// Run the claim audit and write the JSON report to `out_json`. Returns 0
/// on success, 1 when the internal oracle/quadrature gate failed (the
/// report is still written).
///
/// # Safety
/// `cfg` must be a valid handle and `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ymv_run_claims(
    cfg: *const YmvConfig,
    out_json: *mut *mut c_char,
) -> c_int {
    let Some(cfg) = cfg.as_ref() else {
        return YMV_NULL_ARG;
    };
    guarded(out_json, || {
        let c = &cfg.inner;
        c.validate()?;
        let start = std::time::Instant::now();
        let verdicts = run_claims(&c.claims, &c.claim_params()?)?;
        let report = Report::new(
            c.clone(),
            verdicts,
            Vec::new(),
            start.elapsed().as_millis() as u64,
        );
        let code = if report.gates_ok() {
            YMV_OK
        } else {
            YMV_CHECK_FAILED
        };
        Ok((report.to_json()?, code))
    })
}

/// Sweep the configured beta values (at least 3) and write a CSV with
/// columns beta, norm, energy, ratio plus a fitted-exponent trailer.
///
/// # Safety
/// `cfg` must be a valid handle and `out_csv` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ymv_sweep_csv(cfg: *const YmvConfig, out_csv: *mut *mut c_char) -> c_int {
    let Some(cfg) = cfg.as_ref() else {
        return YMV_NULL_ARG;
    };
    guarded(out_csv, || {
        let c = &cfg.inner;
        c.validate()?;
        if c.beta.len() < 3 {
            return Err(Error::InvalidConfig(format!(
                "sweep needs at least 3 beta values, got {}",
                c.beta.len()
            )));
        }
        let params = c.claim_params()?;
        let norm = sweep_beta("norm", &params, &c.beta)?;
        let energy = sweep_beta("energy", &params, &c.beta)?;
        let ratio = sweep_beta("ratio", &params, &c.beta)?;
        let mut csv = String::from("beta,norm,energy,ratio\n");
        for (i, b) in c.beta.iter().enumerate() {
            csv.push_str(&format!(
                "{b},{:.12e},{:.12e},{:.12e}\n",
                norm.values[i], energy.values[i], ratio.values[i]
            ));
        }
        csv.push_str(&format!(
            "exponent,{:.6},{:.6},{:.6}",
            norm.fitted_exponent, energy.fitted_exponent, ratio.fitted_exponent
        ));
        Ok((csv, YMV_OK))
    })
}

/// Release a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ymv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
