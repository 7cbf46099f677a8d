use std::f64::consts::FRAC_PI_2;
use std::ffi::CStr;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use fused_angles_ffi::*;

fn handle_from_fused(f: FaFused) -> *mut FaRotation {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { fa_rotation_from_fused(&f, &mut h) }, FaStatus::Ok);
    h
}

#[test]
fn stateless_fused_quat_round_trip() {
    let f = FaFused {
        psi: 0.0,
        theta: 0.0,
        phi: FRAC_PI_2,
        hemi: 1,
    };
    let mut q = FaQuat {
        w: 0.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };
    assert_eq!(unsafe { fa_fused_to_quat(&f, &mut q) }, FaStatus::Ok);
    let h = 0.5_f64.sqrt();
    assert!((q.w - h).abs() < 1e-15 && (q.x - h).abs() < 1e-15);
    let mut back = FaFused {
        psi: 9.0,
        theta: 9.0,
        phi: 9.0,
        hemi: 0,
    };
    assert_eq!(unsafe { fa_quat_to_fused(&q, &mut back) }, FaStatus::Ok);
    assert!((back.phi - FRAC_PI_2).abs() < 1e-12);
}

#[test]
fn domain_errors_map_to_status_codes() {
    let bad = FaFused {
        psi: 0.0,
        theta: 1.0,
        phi: 1.0,
        hemi: 1,
    };
    let mut q = FaQuat {
        w: 1.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };
    assert_eq!(unsafe { fa_fused_to_quat(&bad, &mut q) }, FaStatus::SineSum);
    let bad_hemi = FaFused {
        psi: 0.0,
        theta: 0.0,
        phi: 0.0,
        hemi: 0,
    };
    assert_eq!(
        unsafe { fa_fused_to_quat(&bad_hemi, &mut q) },
        FaStatus::InvalidArgument
    );
    let not_unit = FaQuat {
        w: 1.0,
        x: 1.0,
        y: 0.0,
        z: 0.0,
    };
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { fa_rotation_from_quat(&not_unit, &mut h) },
        FaStatus::NotUnitQuat
    );
    assert!(h.is_null());
    let reflection = FaRotMat {
        m: [1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, -1.0],
    };
    assert_eq!(
        unsafe { fa_rotation_from_rotmat(&reflection, &mut h) },
        FaStatus::NotRotation
    );
    assert_eq!(
        unsafe { fa_quat_to_fused(ptr::null(), ptr::null_mut()) },
        FaStatus::NullPointer
    );
}

#[test]
fn handle_operations() {
    let a = handle_from_fused(FaFused {
        psi: FRAC_PI_2,
        theta: 0.0,
        phi: FRAC_PI_2,
        hemi: 1,
    });
    let mut inv = ptr::null_mut();
    let mut f = FaFused {
        psi: 0.0,
        theta: 0.0,
        phi: 0.0,
        hemi: 0,
    };
    unsafe {
        assert_eq!(fa_rotation_inverse(a, &mut inv), FaStatus::Ok);
        assert_eq!(fa_rotation_to_fused(inv, &mut f), FaStatus::Ok);
    }
    assert!(
        (f.psi + FRAC_PI_2).abs() < 1e-12 && (f.theta + FRAC_PI_2).abs() < 1e-12,
        "{f:?}"
    );
    assert!(f.phi.abs() < 1e-12);

    let mut id = ptr::null_mut();
    let mut d = -1.0;
    unsafe {
        assert_eq!(fa_rotation_compose(a, inv, &mut id), FaStatus::Ok);
        assert_eq!(
            fa_rotation_distance(a, a, FaMetric::Riemannian as i32, &mut d),
            FaStatus::Ok
        );
        assert_eq!(d, 0.0);
        assert_eq!(
            fa_rotation_distance(a, a, 7, &mut d),
            FaStatus::InvalidArgument
        );
    }
    let mut q = FaQuat {
        w: 0.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };
    unsafe { fa_rotation_to_quat(id, &mut q) };
    assert!((q.w.abs() - 1.0).abs() < 1e-12);

    let mut mid = ptr::null_mut();
    let mut yaw = 0.0;
    let mut singular = -1;
    unsafe {
        assert_eq!(
            fa_rotation_slerp(id, a, 2.0, &mut mid),
            FaStatus::OutOfRange
        );
        assert_eq!(fa_rotation_slerp(id, a, 0.5, &mut mid), FaStatus::Ok);
        assert_eq!(
            fa_rotation_distance(id, mid, FaMetric::Riemannian as i32, &mut d),
            FaStatus::Ok
        );
        let mut full = 0.0;
        fa_rotation_distance(id, a, FaMetric::Riemannian as i32, &mut full);
        assert!((d - full / 2.0).abs() < 1e-12);
        assert_eq!(
            fa_rotation_fused_yaw(a, &mut yaw, &mut singular),
            FaStatus::Ok
        );
    }
    assert!((yaw - FRAC_PI_2).abs() < 1e-12 && singular == 0);
    unsafe {
        for h in [a, inv, id, mid] {
            fa_rotation_free(h);
        }
        fa_rotation_free(ptr::null_mut());
    }
}

#[test]
fn remove_yaw_reports_singularity() {
    let q = FaQuat {
        w: 0.0,
        x: 1.0,
        y: 0.0,
        z: 0.0,
    };
    let mut h = ptr::null_mut();
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(fa_rotation_from_quat(&q, &mut h), FaStatus::Ok);
        assert_eq!(
            fa_rotation_remove_yaw(h, &mut out),
            FaStatus::FusedYawSingular
        );
        assert!(out.is_null());
        let msg = CStr::from_ptr(fa_status_message(FaStatus::FusedYawSingular as i32));
        assert_eq!(msg.to_str().unwrap(), "fused yaw singular (alpha = pi)");
        assert_eq!(
            CStr::from_ptr(fa_status_message(-4)).to_str().unwrap(),
            "unknown status"
        );
        fa_rotation_free(h);
    }
}

#[test]
fn standard_form_of_singular_rotation() {
    let f = FaFused {
        psi: 1.2,
        theta: 0.0,
        phi: 0.0,
        hemi: -1,
    };
    let mut sf = f;
    assert_eq!(unsafe { fa_fused_standard_form(&f, &mut sf) }, FaStatus::Ok);
    assert_eq!((sf.psi, sf.hemi), (0.0, -1));
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/fused_angles.h")
}

#[test]
fn header_declares_api() {
    let text = std::fs::read_to_string(header()).unwrap();
    for name in [
        "typedef struct FaRotation FaRotation;",
        "FA_STATUS_SINE_SUM = 5",
        "FA_METRIC_LINEAR = 1",
        "fa_rotation_from_fused",
        "fa_rotation_remove_yaw",
        "fa_rotation_free",
        "fa_status_message",
        "int32_t hemi;",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
}

#[test]
fn c_program_links_against_static_library() {
    let Ok(exe) = std::env::current_exe() else {
        return;
    };
    let target_dir = exe.parent().and_then(Path::parent).unwrap();
    let lib = target_dir.join("libfused_angles_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: static library or C compiler unavailable");
        return;
    }
    let dir = std::env::temp_dir().join(format!("fa_ffi_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    std::fs::write(
        &src,
        r#"#include <math.h>
#include <stdio.h>
#include "fused_angles.h"

int main(void) {
    FaFused f = {0.0, 0.0, M_PI / 2, 1};
    FaRotation *r = NULL;
    if (fa_rotation_from_fused(&f, &r) != FA_STATUS_OK) return 1;
    FaTilt t;
    fa_rotation_to_tilt(r, &t);
    fa_rotation_free(r);
    FaFused bad = {0.0, 1.0, 1.0, 1};
    if (fa_rotation_from_fused(&bad, &r) != FA_STATUS_SINE_SUM) return 2;
    printf("%.12f %.12f %.12f %s\n", t.psi, t.gamma, t.alpha,
           fa_status_message(FA_STATUS_SINE_SUM));
    return 0;
}
"#,
    )
    .unwrap();
    let bin = dir.join("smoke");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "0.000000000000 0.000000000000 1.570796326795 sine sum criterion violated\n"
    );
    let _ = std::fs::remove_dir_all(&dir);
}
