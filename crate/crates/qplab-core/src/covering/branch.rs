//! Branch-point normalization: the Moebius map M carrying the m-th roots
//! of unity to {inf, 0, 1, lambda_1, ..., lambda_(m-3)}, the rotation
//! conjugate T~ cycling them, and the involution U~ = M L M^-1 reversing
//! the lambda list.

use super::CoveringError;
use crate::algebra::{Cyclotomic, Mobius, ProjPoint};

#[derive(Clone, Debug)]
pub struct BranchData {
    pub m: u32,
    pub omega: Cyclotomic,
    pub lambdas: Vec<Cyclotomic>,
    pub normalizer: Mobius,
    pub rotation: Mobius,
    pub involution: Mobius,
}

/// Builds and verifies the branch data for m >= 5.
pub fn branch_data(m: u32) -> Result<BranchData, CoveringError> {
    if m < 5 {
        return Err(CoveringError::OutOfRange(m));
    }
    let one = Cyclotomic::one();
    let omega = Cyclotomic::zeta(m);
    // M(z) = ((omega + 1)/omega) (z - omega)/(z - 1)
    let c = one.add(&omega).div(&omega).expect("omega != 0");
    let normalizer = Mobius::new(
        c.clone(),
        c.mul(&omega).neg(),
        one.clone(),
        one.neg(),
    )
    .map_err(|_| CoveringError::VerificationFailed("normalizer singular".into()))?;
    // lambda_j = M(omega^(2+j))
    let lambdas: Vec<Cyclotomic> = (1..=m - 3)
        .map(|j| {
            match normalizer.apply(&ProjPoint::Finite(omega.pow((2 + j) as i64))) {
                ProjPoint::Finite(v) => v,
                ProjPoint::Infinity => panic!("lambda_{j} unexpectedly infinite"),
            }
        })
        .collect();
    // T~(z) = (1+omega)^2 / ((1+omega)^2 - omega z)
    let a = one.add(&omega).pow(2);
    let rotation = Mobius::new(
        Cyclotomic::zero(),
        a.clone(),
        omega.neg(),
        a.clone(),
    )
    .map_err(|_| CoveringError::VerificationFailed("rotation singular".into()))?;
    // U~(z) = -z + (1+omega)^2/omega
    let involution = Mobius::new(
        one.neg(),
        a.div(&omega).expect("omega != 0"),
        Cyclotomic::zero(),
        one.clone(),
    )
    .map_err(|_| CoveringError::VerificationFailed("involution singular".into()))?;

    let data = BranchData { m, omega, lambdas, normalizer, rotation, involution };
    verify(&data)?;
    Ok(data)
}

fn verify(d: &BranchData) -> Result<(), CoveringError> {
    let fail = |msg: &str| Err(CoveringError::VerificationFailed(msg.to_string()));
    let m = d.m;
    let inf = ProjPoint::Infinity;
    let zero = ProjPoint::Finite(Cyclotomic::zero());
    let one = ProjPoint::Finite(Cyclotomic::one());
    // T~ is the conjugate of z -> omega z by M
    let rot0 = Mobius::scaling(d.omega.clone()).expect("omega != 0");
    let conj = d.normalizer.compose(&rot0).compose(&d.normalizer.inverse());
    if conj != d.rotation {
        return fail("rotation is not M (omega z) M^-1");
    }
    // U~ is the conjugate of z -> 1/z by M
    let conj_u = d
        .normalizer
        .compose(&Mobius::inversion())
        .compose(&d.normalizer.inverse());
    if conj_u != d.involution {
        return fail("involution is not M (1/z) M^-1");
    }
    // the cycle inf -> 0 -> 1 -> lambda_1 -> ... -> lambda_(m-3) -> inf
    let mut points = vec![inf.clone(), zero.clone(), one.clone()];
    points.extend(d.lambdas.iter().cloned().map(ProjPoint::Finite));
    for i in 0..points.len() {
        let next = &points[(i + 1) % points.len()];
        if d.rotation.apply(&points[i]) != *next {
            return fail("rotation does not cycle the branch points");
        }
    }
    if d.rotation.order(2 * m) != Some(m) {
        return fail("rotation order is not m");
    }
    // U~ fixes inf, swaps 0 with lambda_(m-3), 1 with lambda_(m-4), and
    // lambda_j with lambda_(m-4-j)
    if d.involution.apply(&inf) != inf {
        return fail("involution does not fix infinity");
    }
    if d.involution.apply(&zero) != ProjPoint::Finite(d.lambdas[(m - 4) as usize].clone()) {
        return fail("involution does not send 0 to the last lambda");
    }
    if d.involution.apply(&one) != ProjPoint::Finite(d.lambdas[(m - 5) as usize].clone()) {
        return fail("involution does not send 1 to lambda_(m-4)");
    }
    for j in 1..=(m - 5) {
        let img = d.involution.apply(&ProjPoint::Finite(d.lambdas[(j - 1) as usize].clone()));
        if img != ProjPoint::Finite(d.lambdas[(m - 4 - j - 1) as usize].clone()) {
            return fail("involution does not reverse the lambda list");
        }
    }
    if !d.involution.compose(&d.involution).is_identity() {
        return fail("involution does not square to the identity");
    }
    // for even m the unique fixed lambda is the image of -1 = omega^(m/2)
    if m % 2 == 0 {
        let mid = &d.lambdas[((m - 4) / 2) as usize - 1];
        let fixed = d.involution.apply(&ProjPoint::Finite(mid.clone()));
        if fixed != ProjPoint::Finite(mid.clone()) {
            return fail("involution does not fix the middle lambda");
        }
        let back = d
            .normalizer
            .inverse()
            .apply(&ProjPoint::Finite(mid.clone()));
        if back != ProjPoint::Finite(Cyclotomic::from_integer(-1)) {
            return fail("middle lambda is not the image of -1");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn m6_lambda_values() {
        let d = branch_data(6).unwrap();
        // frozen by direct evaluation of M at the roots of unity:
        // lambda = (3/2, 2, 3)
        assert_eq!(d.lambdas[0], Cyclotomic::from_rational(rat(3, 2)));
        assert_eq!(d.lambdas[1], Cyclotomic::from_integer(2));
        assert_eq!(d.lambdas[2], Cyclotomic::from_integer(3));
        // T~(lambda_(m-3)) = infinity
        assert_eq!(
            d.rotation.apply(&ProjPoint::Finite(d.lambdas[2].clone())),
            ProjPoint::Infinity
        );
    }

    #[test]
    fn rotation_hits_displayed_values() {
        for m in [5u32, 6, 8, 9] {
            let d = branch_data(m).unwrap();
            assert_eq!(d.rotation.apply(&ProjPoint::Infinity), ProjPoint::Finite(Cyclotomic::zero()));
            assert_eq!(
                d.rotation.apply(&ProjPoint::Finite(Cyclotomic::zero())),
                ProjPoint::Finite(Cyclotomic::one())
            );
        }
    }

    #[test]
    fn involution_fixed_point_even_m() {
        // the fixed lambda is lambda_((m-4)/2), whose M-preimage is -1;
        // its value is 1 + cos(2 pi / m), e.g. 3/2 at m = 6
        let d = branch_data(8).unwrap();
        let mid = &d.lambdas[((8 - 4) / 2) as usize - 1];
        assert_eq!(
            d.involution.apply(&ProjPoint::Finite(mid.clone())),
            ProjPoint::Finite(mid.clone())
        );
        let (re, im) = mid.to_complex();
        let expect = 1.0 + (2.0 * std::f64::consts::PI / 8.0).cos();
        assert!((re - expect).abs() < 1e-9 && im.abs() < 1e-9);
    }

    #[test]
    fn odd_m_has_no_fixed_lambda() {
        let d = branch_data(9).unwrap();
        for l in &d.lambdas {
            assert_ne!(
                d.involution.apply(&ProjPoint::Finite(l.clone())),
                ProjPoint::Finite(l.clone())
            );
        }
    }

    #[test]
    fn too_small_m_rejected() {
        assert!(matches!(branch_data(4), Err(CoveringError::OutOfRange(4))));
    }
}
