use std::f64::consts::{FRAC_PI_2, PI};

use fused_angles::convert::{
    fused_to_quat, fused_to_tilt, quat_to_fused, quat_to_rotmat, quat_to_tilt, rotmat_to_quat,
    tilt_to_fused, tilt_to_quat, Repr, Rotation,
};
use fused_angles::fusedops::{
    fused_equal, fused_inverse, metric_dr, quat_fused_yaw, remove_yaw, standard_form, tilt_inverse,
};
use fused_angles::rotcore::wrap;
use fused_angles::{FusedAngles, Hemisphere, Quat, RotError, TiltAngles};
use proptest::prelude::*;

fn unit_quat() -> impl Strategy<Value = Quat> {
    prop::array::uniform4(-1.0f64..1.0)
        .prop_filter("non-degenerate", |a| {
            a.iter().map(|v| v * v).sum::<f64>() > 1e-3
        })
        .prop_map(|a| Quat::from_array(a).normalized())
}

fn fused_params() -> impl Strategy<Value = FusedAngles> {
    (
        -PI..PI,
        -FRAC_PI_2..FRAC_PI_2,
        0.0f64..1.0,
        any::<bool>(),
        any::<bool>(),
    )
        .prop_map(|(psi, theta, frac, neg_phi, hemi)| {
            let room = FRAC_PI_2 - theta.abs();
            let phi = if neg_phi { -frac * room } else { frac * room };
            let hemi = if hemi {
                Hemisphere::Positive
            } else {
                Hemisphere::Negative
            };
            FusedAngles::new(psi, theta, phi, hemi)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn any_repr_round_trip(q in unit_quat()) {
        for repr in Repr::ALL {
            let back = Rotation::Quat(q).convert(repr).unwrap().to_quat().unwrap();
            prop_assert!(metric_dr(q, back) < 1e-9, "{repr}: {}", metric_dr(q, back));
        }
    }

    #[test]
    fn rotmat_quat_round_trip(q in unit_quat()) {
        let back = rotmat_to_quat(&quat_to_rotmat(q));
        prop_assert!(q.max_abs_diff_up_to_sign(back) < 1e-12);
    }

    #[test]
    fn fused_outputs_in_domain(q in unit_quat()) {
        let f = quat_to_fused(q);
        prop_assert!(f.theta.abs() + f.phi.abs() <= FRAC_PI_2 + 1e-9);
        prop_assert!(f.psi > -PI && f.psi <= PI);
        let t = quat_to_tilt(q);
        prop_assert!((0.0..=PI).contains(&t.alpha));
    }

    #[test]
    fn fused_parameters_round_trip(f in fused_params()) {
        let q = fused_to_quat(&f).unwrap();
        let back = quat_to_fused(q);
        prop_assert!(fused_equal(&f, &back, 1e-9), "{f:?} -> {back:?}");
    }

    #[test]
    fn tilt_fused_agree(f in fused_params()) {
        let t = fused_to_tilt(&f).unwrap();
        let qf = fused_to_quat(&f).unwrap();
        let qt = tilt_to_quat(&t);
        prop_assert!(metric_dr(qf, qt) < 1e-9);
        let f2 = tilt_to_fused(&t);
        prop_assert!(metric_dr(qf, fused_to_quat(&f2).unwrap()) < 1e-9);
    }

    #[test]
    fn inverse_formulas_match_conjugate(q in unit_quat()) {
        prop_assume!(q.w * q.w + q.z * q.z > 1e-6);
        let inv = q.conj();
        let fi = fused_inverse(&quat_to_fused(q)).unwrap();
        prop_assert!(metric_dr(fused_to_quat(&fi).unwrap(), inv) < 1e-9);
        let ti = tilt_inverse(&quat_to_tilt(q));
        prop_assert!(metric_dr(tilt_to_quat(&ti), inv) < 1e-9);
    }

    #[test]
    fn remove_yaw_leaves_zero_yaw(q in unit_quat()) {
        prop_assume!(q.w * q.w + q.z * q.z > 1e-6);
        let t = remove_yaw(q).unwrap();
        prop_assert!(quat_fused_yaw(t).value.abs() < 1e-12);
        let tilt = quat_to_tilt(t);
        prop_assert!((tilt.alpha - quat_to_tilt(q).alpha).abs() < 1e-9);
    }

    #[test]
    fn yaw_is_additive(q in unit_quat(), beta in -PI..PI) {
        prop_assume!(q.w * q.w + q.z * q.z > 1e-6);
        let psi = quat_fused_yaw(q).value;
        let rotated = quat_fused_yaw(Quat::rot_z(beta) * q).value;
        prop_assert!(wrap(rotated - psi - beta).abs() < 1e-12);
    }

    #[test]
    fn over_budget_fused_rejected(theta in 0.0f64..FRAC_PI_2, excess in 1e-6f64..0.5) {
        let phi = (FRAC_PI_2 - theta + excess).min(FRAC_PI_2);
        prop_assume!(theta + phi > FRAC_PI_2 + 1e-6);
        let f = FusedAngles::new(0.0, theta, phi, Hemisphere::Positive);
        let is_sine_sum = matches!(fused_to_quat(&f), Err(RotError::SineSum { .. }));
        prop_assert!(is_sine_sum);
    }
}

#[test]
fn boundary_fused_projected() {
    let f = FusedAngles::new(0.3, 0.5, FRAC_PI_2 - 0.5 + 5e-10, Hemisphere::Negative);
    let v = f.validated().unwrap();
    assert!((v.theta.abs() + v.phi.abs() - FRAC_PI_2).abs() < 1e-15);
    let sf = standard_form(&v);
    assert_eq!(sf.hemi, Hemisphere::Positive);
}

#[test]
fn tilt_angle_pi_has_standard_form() {
    let t = TiltAngles::new(1.0, 0.4, PI);
    let f = tilt_to_fused(&t);
    let sf = standard_form(&f);
    assert_eq!(sf.hemi, Hemisphere::Negative);
    assert_eq!(
        (sf.psi, sf.theta.abs() < 1e-15, sf.phi.abs() < 1e-15),
        (0.0, true, true)
    );
}
