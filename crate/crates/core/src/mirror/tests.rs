use super::*;
use crate::exactmath::{factorial, pow_int};

#[test]
fn lambert_curve_coefficients() {
    let c = spectral_y(1, 6).unwrap();
    let want = [rat(1, 1), rat(1, 1), rat(3, 2), rat(8, 3), rat(125, 24), rat(54, 5)];
    for (d, w) in (1..=6).zip(want) {
        assert_eq!(c.y_of_x.at(d), w);
    }
}

#[test]
fn orbifold_curve_coefficients() {
    for r in 1..=4u32 {
        let c = spectral_y(r, 20).unwrap();
        assert_eq!(c.y_of_x.at(r), int(1));
        for d in 1..=20 {
            let want = if d % r == 0 {
                let k = (d / r) as i64;
                pow_int(&int(r as i64 * k), k - 1) / factorial(k as u32)
            } else {
                int(0)
            };
            assert_eq!(c.y_of_x.at(d), want, "r={r} d={d}");
        }
        assert!(c.lambert_residual().unwrap().is_zero());
    }
}

#[test]
fn f01_closed_form() {
    for r in 1..=3 {
        let rep = verify_f01(r, 20).unwrap();
        assert!(rep.passed(), "{}", summary(&rep));
    }
    let composed = f01(1, 20).compose(&x_of_z(1, 20).unwrap()).unwrap();
    assert_eq!(composed.at(1), int(1));
    assert_eq!(composed.at(2), rat(-1, 2));
    assert!((3..=20).all(|k| composed.at(k).is_zero()));
}

#[test]
fn f02_closed_form() {
    for (r, n) in [(1, 12), (2, 12), (3, 9)] {
        let rep = verify_f02(r, n).unwrap();
        assert!(rep.passed(), "{}", summary(&rep));
        assert_eq!(rep.checks.len(), 4);
    }
    let lhs = in_z(&f02(1, 4), &x_of_z(1, 4).unwrap(), 4).unwrap();
    assert_eq!(lhs.coeff([1, 1]), rat(1, 2));
}

#[test]
fn a_wrong_identity_is_caught() {
    // perturb one number and the closed form must fail
    let f = f01(2, 12).add(&TruncatedSeries::monomial(Vars::One, [6, 0], rat(1, 7), 12)).unwrap();
    let composed = f.compose(&x_of_z(2, 12).unwrap()).unwrap();
    let closed = TruncatedSeries::from_terms(Vars::One, 12, [([2, 0], rat(1, 2)), ([4, 0], rat(-1, 2))]);
    let c = Check::compare("perturbed", &composed, &closed);
    assert_eq!(c.mismatch.unwrap().exponent, [6, 0]);
}

#[test]
fn preconditions() {
    assert!(matches!(spectral_y(3, 2), Err(MirrorError::Order { .. })));
    assert!(matches!(verify_f01(2, 3), Err(MirrorError::Order { .. })));
    assert!(matches!(verify_f02(1, F02_MAX_ORDER + 1), Err(MirrorError::Order { .. })));
    assert!(matches!(spectral_y(0, 4), Err(MirrorError::ZeroR)));
}
