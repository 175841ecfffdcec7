use std::ffi::{c_char, c_int, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use hopfyb_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { hopfyb_string_free(s) };
    text
}

fn algebra(name: &str) -> *mut HopfybAlgebra {
    let name = CString::new(name).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { hopfyb_algebra_catalog(name.as_ptr(), &mut out) },
        HopfybStatus::Ok
    );
    out
}

fn pair(
    name: &str,
    alg: *const HopfybAlgebra,
    alpha: Option<&str>,
) -> Result<*mut HopfybPair, HopfybStatus> {
    let name = CString::new(name).unwrap();
    let alpha = alpha.map(|a| CString::new(a).unwrap());
    let mut out = ptr::null_mut();
    let status = unsafe {
        hopfyb_pair_named(
            name.as_ptr(),
            alg,
            alpha.as_ref().map_or(ptr::null(), |a| a.as_ptr()),
            &mut out,
        )
    };
    if status == HopfybStatus::Ok {
        Ok(out)
    } else {
        Err(status)
    }
}

#[test]
fn algebra_json_round_trip() {
    let h = algebra("a_c2c2");
    assert_eq!(unsafe { hopfyb_algebra_dim(h) }, 8);
    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { hopfyb_algebra_to_json(h, &mut json) },
        HopfybStatus::Ok
    );
    let text = CString::new(take(json)).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(
        unsafe { hopfyb_algebra_from_json(text.as_ptr(), &mut back) },
        HopfybStatus::Ok
    );
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { hopfyb_algebra_verify(back, &mut report) },
        HopfybStatus::Ok
    );
    assert!(take(report).contains("\"passed\": true"));
    unsafe {
        hopfyb_algebra_free(back);
        hopfyb_algebra_free(h);
    }
}

#[test]
fn family_braiding_is_involutive() {
    let p = pair("family1", ptr::null(), Some("3")).unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(
        unsafe { hopfyb_braiding_build(p, &mut r) },
        HopfybStatus::Ok
    );
    assert_eq!(
        unsafe { hopfyb_braiding_check(r, false, ptr::null_mut()) },
        HopfybStatus::Ok
    );
    let mut flags = [false; 4];
    assert_eq!(
        unsafe { hopfyb_pair_involutivity(p, flags.as_mut_ptr()) },
        HopfybStatus::Ok
    );
    assert_eq!(flags, [true; 4]);
    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { hopfyb_braiding_to_json(r, &mut json) },
        HopfybStatus::Ok
    );
    assert!(take(json).contains("rmatrix.v1"));
    unsafe {
        hopfyb_braiding_free(r);
        hopfyb_pair_free(p);
    }
}

#[test]
fn error_codes() {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { hopfyb_algebra_catalog(ptr::null(), &mut out) },
        HopfybStatus::NullArgument
    );
    let bad = CString::new("{").unwrap();
    assert_eq!(
        unsafe { hopfyb_algebra_from_json(bad.as_ptr(), &mut out) },
        HopfybStatus::InvalidInput
    );
    assert!(!take(hopfyb_last_error()).is_empty());
    assert_eq!(
        pair("conjugation", ptr::null(), None).unwrap_err(),
        HopfybStatus::InvalidInput
    );
    let h = algebra("a_c2c2");
    assert_eq!(
        pair("conjugation", h, None).unwrap_err(),
        HopfybStatus::InvalidInput
    );
    let s3 = algebra("s3");
    let trivial = pair("trivial", s3, None).unwrap();
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { hopfyb_pair_verify(trivial, &mut report) },
        HopfybStatus::CheckFailed
    );
    assert!(take(report).contains("\"passed\": false"));
    let mut r = ptr::null_mut();
    assert_eq!(
        unsafe { hopfyb_braiding_build(trivial, &mut r) },
        HopfybStatus::CheckFailed
    );
    assert!(take(hopfyb_last_error()).contains("verification failed"));
    unsafe {
        hopfyb_pair_free(trivial);
        hopfyb_algebra_free(s3);
        hopfyb_algebra_free(h);
        hopfyb_algebra_free(ptr::null_mut());
    }
}

#[test]
fn run_matches_cli_exit_codes() {
    let run = |args: &[&str]| {
        let owned: Vec<CString> = args.iter().map(|a| CString::new(*a).unwrap()).collect();
        let argv: Vec<*const c_char> = owned.iter().map(|a| a.as_ptr()).collect();
        let mut code: c_int = -1;
        let mut out = ptr::null_mut();
        let status = unsafe {
            hopfyb_run(
                argv.len() as c_int,
                argv.as_ptr(),
                &mut code,
                &mut out,
                ptr::null_mut(),
            )
        };
        assert_eq!(status, HopfybStatus::Ok);
        (code, take(out))
    };
    let (code, out) = run(&["hopfyb", "catalog", "c2"]);
    assert_eq!(code, 0);
    assert!(out.contains("hopf.v1"));
    assert_eq!(
        run(&[
            "hopfyb",
            "involutive",
            "--hopf",
            "s3",
            "--pair",
            "conjugation"
        ])
        .0,
        1
    );
    assert_eq!(run(&["hopfyb", "verify-hopf", "--hopf", "missing"]).0, 2);
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(hopfyb_version()) }
        .to_str()
        .unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links_from_c() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler, skipping");
        return;
    };
    let lib = target_dir().join("libhopfyb_ffi.a");
    let exe = tempfile::tempdir().unwrap();
    let bin = exe.path().join("smoke");
    let mut cmd = Command::new(cc);
    cmd.arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(root.join("include"));
    if !lib.exists() {
        let status = cmd
            .arg("-fsyntax-only")
            .arg(root.join("tests/smoke.c"))
            .status()
            .unwrap();
        assert!(status.success());
        return;
    }
    let status = cmd
        .arg(root.join("tests/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(
        out.status.success(),
        "smoke exited with {:?}",
        out.status.code()
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}

fn which_cc() -> Result<String, ()> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    match Command::new(&cc).arg("--version").output() {
        Ok(o) if o.status.success() => Ok(cc),
        _ => Err(()),
    }
}
