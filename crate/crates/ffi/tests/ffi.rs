use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use heptic_ffi::*;

fn last_error() -> String {
    let p = heptic_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn version_is_nul_terminated() {
    let v = unsafe { CStr::from_ptr(heptic_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn run_p5_and_render() {
    unsafe {
        let mut report = ptr::null_mut();
        assert_eq!(
            heptic_run(HepticPipeline::P5, 7, 2, false, &mut report),
            HepticStatus::Ok
        );
        assert!(!report.is_null());
        let mut code = -1;
        assert_eq!(heptic_report_exit_code(report, &mut code), HepticStatus::Ok);
        assert_eq!(code, 0);
        let (mut sections, mut warnings) = (0usize, 0usize);
        assert_eq!(
            heptic_report_counts(report, &mut sections, &mut warnings),
            HepticStatus::Ok
        );
        assert_eq!((sections, warnings), (6, 0));
        let mut text = ptr::null_mut();
        assert_eq!(
            heptic_report_render(report, HepticFormat::Json, &mut text),
            HepticStatus::Ok
        );
        let json: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(text).to_str().unwrap()).unwrap();
        assert_eq!(json["metadata"]["seed"], 7);
        heptic_string_free(text);
        heptic_report_free(report);
    }
}

#[test]
fn delta_audit_reports_flags() {
    unsafe {
        let mut report = ptr::null_mut();
        assert_eq!(
            heptic_run(HepticPipeline::DeltaAudit, 1, 2, false, &mut report),
            HepticStatus::Ok
        );
        let (mut sections, mut warnings) = (0usize, 0usize);
        heptic_report_counts(report, &mut sections, &mut warnings);
        assert_eq!(warnings, 3);
        heptic_report_free(report);
    }
}

#[test]
fn ideal_handle_round_trip() {
    let text = CString::new("x0^2, x0*x1^7, x1^9").unwrap();
    unsafe {
        let mut ideal = ptr::null_mut();
        assert_eq!(
            heptic_ideal_parse(text.as_ptr(), 3, &mut ideal),
            HepticStatus::Ok
        );
        let mut n = 0usize;
        assert_eq!(
            heptic_ideal_generator_count(ideal, &mut n),
            HepticStatus::Ok
        );
        assert_eq!(n, 3);
        let mut borel = false;
        assert_eq!(
            heptic_ideal_is_borel_fixed(ideal, &mut borel),
            HepticStatus::Ok
        );
        assert!(borel);
        let mut q = 0u64;
        assert_eq!(
            heptic_ideal_hilbert_count(ideal, 9, true, &mut q),
            HepticStatus::Ok
        );
        assert_eq!(q, 16);
        heptic_ideal_free(ideal);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut ideal = ptr::null_mut();
        let bad = CString::new("x7^2").unwrap();
        assert_eq!(
            heptic_ideal_parse(bad.as_ptr(), 3, &mut ideal),
            HepticStatus::InputError
        );
        assert!(ideal.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(
            heptic_ideal_parse(ptr::null(), 3, &mut ideal),
            HepticStatus::NullPointer
        );
        assert!(last_error().contains("text"));

        let mut g = 0u32;
        assert_eq!(heptic_castelnuovo_bound(16, 3, &mut g), HepticStatus::Ok);
        assert_eq!(g, 49);
        assert!(heptic_last_error().is_null());
        assert_eq!(
            heptic_castelnuovo_bound(2, 5, &mut g),
            HepticStatus::InvalidArgument
        );
        assert_eq!(
            heptic_castelnuovo_bound(16, 3, ptr::null_mut()),
            HepticStatus::NullPointer
        );

        let exps = [3u32, 5];
        let mut d = 0u32;
        assert_eq!(
            heptic_semigroup_delta(exps.as_ptr(), 2, &mut d),
            HepticStatus::Ok
        );
        assert_eq!(d, 4);
        let even = [2u32, 4];
        assert_eq!(
            heptic_semigroup_delta(even.as_ptr(), 2, &mut d),
            HepticStatus::InvalidArgument
        );
        assert_eq!(
            heptic_semigroup_delta(exps.as_ptr(), 0, &mut d),
            HepticStatus::InvalidArgument
        );

        let mut report = ptr::null_mut();
        assert_eq!(
            heptic_run(HepticPipeline::P5, 0, 1, false, &mut report),
            HepticStatus::InvalidArgument
        );
        assert!(report.is_null());

        heptic_report_free(ptr::null_mut());
        heptic_ideal_free(ptr::null_mut());
        heptic_string_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/heptic.h");
    let text = std::fs::read_to_string(header).unwrap();
    for sym in [
        "heptic_run",
        "heptic_report_free",
        "heptic_ideal_parse",
        "HEPTIC_STATUS_OK",
    ] {
        assert!(text.contains(sym), "{sym} missing from header");
    }
    let probe = format!("#include \"{header}\"\nint main(void) {{ return HEPTIC_STATUS_OK; }}\n");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("probe.c");
    std::fs::write(&src, probe).unwrap();
    let Ok(out) = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only"])
        .arg(&src)
        .output()
    else {
        eprintln!("no C compiler available; skipping");
        return;
    };
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
