use num_traits::{Signed, Zero};

use super::form::{rat, LinearForm};
use crate::error::{Error, Result};
use crate::rootdata::{CartanMatrix, Weight};
use crate::sequence::IotaSequence;

/// Which of the two `beta_k^(+/-)` forms is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `x_k + sum_{k<j<k+} <h_{i_k}, alpha_{i_j}> x_j + x_{k+}`; zero for `k = 0`.
pub fn beta_k(iota: &IotaSequence, cartan: &CartanMatrix, k: usize) -> LinearForm {
    if k == 0 {
        return LinearForm::zero();
    }
    let ik = iota.letter(k);
    let next = iota.k_plus(k);
    let mut terms = vec![(k, 1), (next, 1)];
    for j in k + 1..next {
        terms.push((j, cartan.a(ik, iota.letter(j))));
    }
    LinearForm::from_integers(0, &terms)
}

/// `beta_k^(+) = beta_k`; `beta_k^(-) = beta_{k-}` when `k- > 0`, and
/// otherwise `-<h_{i_k}, lambda> + sum_{j<k} <h_{i_k}, alpha_{i_j}> x_j + x_k`.
pub fn beta_k_pm(
    iota: &IotaSequence,
    cartan: &CartanMatrix,
    lambda: Option<&Weight>,
    k: usize,
    sign: Sign,
) -> Result<LinearForm> {
    if k == 0 {
        return Err(Error::ZeroPosition);
    }
    match sign {
        Sign::Plus => Ok(beta_k(iota, cartan, k)),
        Sign::Minus => {
            let prev = iota.k_minus(k);
            if prev > 0 {
                return Ok(beta_k(iota, cartan, prev));
            }
            let lambda = lambda.ok_or(Error::InfinityMode)?;
            let ik = iota.letter(k);
            let mut terms = vec![(k, 1)];
            for j in 1..k {
                terms.push((j, cartan.a(ik, iota.letter(j))));
            }
            Ok(LinearForm::from_integers(-lambda.coeff(ik), &terms))
        }
    }
}

/// `lambda^(i) = -beta^(-)_{iota^(i)}`.
pub fn lambda_form(
    iota: &IotaSequence,
    cartan: &CartanMatrix,
    lambda: &Weight,
    i: usize,
) -> Result<LinearForm> {
    let first = iota.first_occurrence(i)?;
    let beta = beta_k_pm(iota, cartan, Some(lambda), first, Sign::Minus)?;
    Ok(LinearForm::zero().sub_scaled(&rat(1), &beta))
}

/// The piecewise-linear operator on forms used for `B(infinity)`:
/// subtract `phi_k beta_k` when `phi_k > 0`, else `phi_k beta_{k-}`.
pub fn s_k(iota: &IotaSequence, cartan: &CartanMatrix, k: usize, phi: &LinearForm) -> LinearForm {
    let q = phi.coeff(k);
    if q.is_zero() {
        return phi.clone();
    }
    let beta = if q.is_positive() {
        beta_k(iota, cartan, k)
    } else {
        beta_k(iota, cartan, iota.k_minus(k))
    };
    phi.sub_scaled(&q, &beta)
}

/// The `lambda`-twisted operator: subtract `phi_k beta_k^(+)` when
/// `phi_k > 0`, else `phi_k beta_k^(-)` (which carries a constant when
/// `k- = 0`).
pub fn s_hat_k(
    iota: &IotaSequence,
    cartan: &CartanMatrix,
    lambda: &Weight,
    k: usize,
    phi: &LinearForm,
) -> LinearForm {
    let q = phi.coeff(k);
    if q.is_zero() {
        return phi.clone();
    }
    let sign = if q.is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    };
    let beta = beta_k_pm(iota, cartan, Some(lambda), k, sign).expect("k >= 1 and lambda given");
    phi.sub_scaled(&q, &beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::IotaSpec;

    fn alt(cartan: &CartanMatrix) -> IotaSequence {
        IotaSequence::new(IotaSpec::new(vec![], vec![1, 2]), cartan).unwrap()
    }

    fn remark() -> (CartanMatrix, IotaSequence) {
        let a = CartanMatrix::type_a(3);
        let s =
            IotaSequence::new(IotaSpec::new(vec![1, 2, 3, 2, 1, 2], vec![3, 2, 1, 2]), &a).unwrap();
        (a, s)
    }

    #[test]
    fn beta_k_examples() {
        let a = CartanMatrix::rank2(2, 2).unwrap();
        assert_eq!(beta_k(&alt(&a), &a, 0), LinearForm::zero());
        assert_eq!(
            beta_k(&alt(&a), &a, 1),
            LinearForm::from_integers(0, &[(1, 1), (2, -2), (3, 1)])
        );
        let a = CartanMatrix::rank2(0, 0).unwrap();
        assert_eq!(
            beta_k(&alt(&a), &a, 1),
            LinearForm::from_integers(0, &[(1, 1), (3, 1)])
        );
    }

    #[test]
    fn beta_minus_examples() {
        let (a, s) = remark();
        let lam = Weight::new(vec![5, 7, 11]);
        assert_eq!(
            beta_k_pm(&s, &a, Some(&lam), 1, Sign::Minus).unwrap(),
            LinearForm::from_integers(-5, &[(1, 1)])
        );
        assert_eq!(
            beta_k_pm(&s, &a, Some(&lam), 4, Sign::Minus).unwrap(),
            LinearForm::from_integers(0, &[(2, 1), (3, -1), (4, 1)])
        );
        for k in 1..12 {
            assert_eq!(
                beta_k_pm(&s, &a, None, k, Sign::Plus).unwrap(),
                beta_k(&s, &a, k)
            );
        }
        assert_eq!(
            beta_k_pm(&s, &a, None, 1, Sign::Minus),
            Err(Error::InfinityMode)
        );
    }

    #[test]
    fn lambda_form_examples() {
        let a = CartanMatrix::type_a(2);
        let lam = Weight::new(vec![3, 4]);
        let s = alt(&a);
        assert_eq!(
            lambda_form(&s, &a, &lam, 1).unwrap(),
            LinearForm::from_integers(3, &[(1, -1)])
        );
        assert_eq!(
            lambda_form(&s, &a, &lam, 2).unwrap(),
            LinearForm::from_integers(4, &[(1, 1), (2, -1)])
        );
        let (a, s) = remark();
        let lam = Weight::new(vec![1, 2, 3]);
        for i in 1..=3 {
            let k = s.first_occurrence(i).unwrap();
            let beta = beta_k_pm(&s, &a, Some(&lam), k, Sign::Minus).unwrap();
            assert_eq!(
                lambda_form(&s, &a, &lam, i).unwrap(),
                LinearForm::zero().sub_scaled(&rat(1), &beta)
            );
        }
    }

    #[test]
    fn s_operator_examples() {
        let a = CartanMatrix::type_a(2);
        let s = alt(&a);
        for k in 1..6 {
            let expected = LinearForm::var(k).sub_scaled(&rat(1), &beta_k(&s, &a, k));
            assert_eq!(s_k(&s, &a, k, &LinearForm::var(k)), expected);
        }
        let phi = LinearForm::from_integers(2, &[(1, 3)]);
        assert_eq!(s_k(&s, &a, 2, &phi), phi);

        let lam = Weight::new(vec![1, 1]);
        assert_eq!(
            s_hat_k(&s, &a, &lam, 1, &LinearForm::var(1)),
            LinearForm::from_integers(0, &[(2, 1), (3, -1)])
        );
        // phi_k < 0 with k- = 0: S_k is the identity, S_hat_k is not
        let neg = LinearForm::from_integers(0, &[(1, -1)]);
        assert_eq!(s_k(&s, &a, 1, &neg), neg);
        assert_eq!(
            s_hat_k(&s, &a, &lam, 1, &neg),
            LinearForm::from_integers(-1, &[])
        );
    }
}
