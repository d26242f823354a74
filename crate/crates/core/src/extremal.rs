//! Extremal vectors `x_w`, the images of `u_{w lambda}`.
//!
//! `x_w` is the unique solution of `x_k = 0` for `k > L` and
//! `beta_k^(-)(x) = 0` for `k <= L`. Each `beta_k^(-)` is `x_k` plus terms in
//! earlier coordinates plus a constant, so the system is unitriangular and
//! solved by forward substitution.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::crystal::{CrystalContext, ZVector};
use crate::error::{Error, Result};
use crate::polyhedral::{beta_k_pm, Sign};
use crate::rootdata::{CartanMatrix, Weight, WeightOffset, WeylWord};
use crate::sequence::IotaSequence;

fn check_inputs(
    cartan: &CartanMatrix,
    iota: &IotaSequence,
    lambda: &Weight,
    word: &WeylWord,
) -> Result<()> {
    if lambda.rank() != cartan.rank() {
        return Err(Error::RankMismatch {
            expected: cartan.rank(),
            found: lambda.rank(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coeffs().to_vec()));
    }
    if !cartan.is_reduced(word)? {
        return Err(Error::NotReduced(word.letters().to_vec()));
    }
    iota.check_extends(word)
}

/// Solves the triangular system for `x_w` and re-checks it: every entry is
/// nonnegative, every equation holds, and `wt(x_w) = w lambda`.
pub fn solve_extremal(
    cartan: &CartanMatrix,
    iota: &IotaSequence,
    lambda: &Weight,
    word: &WeylWord,
) -> Result<ZVector> {
    check_inputs(cartan, iota, lambda, word)?;
    let len = word.len();
    let mut x = ZVector::zero();
    for k in 1..=len {
        let beta = beta_k_pm(iota, cartan, Some(lambda), k, Sign::Minus)?;
        debug_assert!(beta.coeff(k).is_one());
        // x_k is still 0 here, so this is the rest of the equation
        let rest = beta.eval(&x);
        if !rest.is_integer() {
            return Err(Error::Inconsistency(format!(
                "non-integral value {rest} while solving x_{k}"
            )));
        }
        let value = (-rest.to_integer())
            .to_i64()
            .ok_or_else(|| Error::Inconsistency(format!("x_{k} overflows")))?;
        if value < 0 {
            return Err(Error::Inconsistency(format!("x_{k} = {value} is negative")));
        }
        x = x.add_at(k, value);
    }

    for k in 1..=len {
        let beta = beta_k_pm(iota, cartan, Some(lambda), k, Sign::Minus)?;
        if !beta.eval(&x).is_zero() {
            return Err(Error::Inconsistency(format!("equation {k} fails at {x}")));
        }
    }
    let ctx = CrystalContext::with_weight(cartan.clone(), iota.clone(), lambda.clone())?;
    let expected = extremal_weight(cartan, lambda, word)?;
    if ctx.wt(&x) != expected {
        return Err(Error::Inconsistency(format!(
            "wt({x}) = {} but w lambda = {expected}",
            ctx.wt(&x)
        )));
    }
    Ok(x)
}

/// `x_w` by iterating `x <- f_{i_k}^max x` along the word from 0.
pub fn extremal_oracle(
    cartan: &CartanMatrix,
    iota: &IotaSequence,
    lambda: &Weight,
    word: &WeylWord,
) -> Result<ZVector> {
    check_inputs(cartan, iota, lambda, word)?;
    let ctx = CrystalContext::with_weight(cartan.clone(), iota.clone(), lambda.clone())?;
    let mut x = ZVector::zero();
    for &i in word.letters() {
        x = ctx.f_max(i, &x)?;
    }
    Ok(x)
}

/// `w lambda` by reflecting along the word in application order.
pub fn extremal_weight(
    cartan: &CartanMatrix,
    lambda: &Weight,
    word: &WeylWord,
) -> Result<WeightOffset> {
    let mut mu = WeightOffset::at_base(lambda.clone());
    for &i in word.letters() {
        mu = cartan.reflect(i, &mu)?;
    }
    Ok(mu)
}

/// Lowers `x` with `e_i` until it stops; returns the number of steps.
pub fn e_reduce(ctx: &CrystalContext, i: usize, x: &ZVector) -> Result<(ZVector, i64)> {
    let mut y = x.clone();
    let mut steps = 0;
    while let Some(z) = ctx.e_tilde(i, &y)? {
        y = z;
        steps += 1;
    }
    if y.entries().iter().any(|v| v.is_negative()) {
        return Err(Error::Inconsistency(format!(
            "e_{i} left the lattice at {y}"
        )));
    }
    Ok((y, steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::demazure_crystal;
    use crate::sequence::IotaSpec;

    fn remark() -> (CartanMatrix, IotaSequence) {
        let a = CartanMatrix::type_a(3);
        let s =
            IotaSequence::new(IotaSpec::new(vec![1, 2, 3, 2, 1, 2], vec![3, 2, 1, 2]), &a).unwrap();
        (a, s)
    }

    fn word(letters: &[usize], n: usize) -> WeylWord {
        WeylWord::new(letters.to_vec(), n).unwrap()
    }

    #[test]
    fn empty_word_gives_zero() {
        let (a, s) = remark();
        let lam = Weight::new(vec![1, 2, 3]);
        assert_eq!(
            solve_extremal(&a, &s, &lam, &WeylWord::empty()).unwrap(),
            ZVector::zero()
        );
        assert_eq!(
            extremal_oracle(&a, &s, &lam, &WeylWord::empty()).unwrap(),
            ZVector::zero()
        );
        assert_eq!(
            extremal_weight(&a, &lam, &WeylWord::empty()).unwrap(),
            WeightOffset::at_base(lam)
        );
    }

    #[test]
    fn non_ample_a3_vectors() {
        let (a, s) = remark();
        let lam = Weight::new(vec![2, 3, 5]);
        let x = solve_extremal(&a, &s, &lam, &word(&[1, 2, 3], 3)).unwrap();
        assert_eq!(x, ZVector::from_dense(vec![2, 5, 10]));
        let x = solve_extremal(&a, &s, &lam, &word(&[1, 2, 3, 2, 1, 2], 3)).unwrap();
        assert_eq!(x, ZVector::from_dense(vec![2, 5, 10, 5, 8, 3]));
    }

    #[test]
    fn a2_single_letter() {
        let a = CartanMatrix::type_a(2);
        let s = IotaSequence::new(IotaSpec::new(vec![], vec![1, 2]), &a).unwrap();
        let lam = Weight::fundamental(2, 1);
        let w = word(&[1], 2);
        assert_eq!(
            extremal_oracle(&a, &s, &lam, &w).unwrap(),
            ZVector::from_dense(vec![1])
        );
        assert_eq!(
            extremal_weight(&a, &lam, &w).unwrap(),
            WeightOffset::new(lam.clone(), vec![1, 0])
        );
    }

    #[test]
    fn solver_matches_oracle_and_lies_in_demazure() {
        let (a, s) = remark();
        let ctx_for =
            |lam: &Weight| CrystalContext::with_weight(a.clone(), s.clone(), lam.clone()).unwrap();
        for m in [[0, 0, 1], [1, 0, 1], [1, 1, 0], [2, 1, 1]] {
            let lam = Weight::new(m.to_vec());
            let ctx = ctx_for(&lam);
            for l in 0..=6 {
                let w = word(&[1, 2, 3, 2, 1, 2][..l], 3);
                let x = solve_extremal(&a, &s, &lam, &w).unwrap();
                assert_eq!(x, extremal_oracle(&a, &s, &lam, &w).unwrap());
                assert!(x.truncated_at(l));
                if l <= 4 {
                    assert!(demazure_crystal(&ctx, &w).unwrap().contains(&x));
                }
                if l > 0 {
                    let (y, steps) = e_reduce(&ctx, w.letters()[l - 1], &x).unwrap();
                    assert_eq!(steps, x.get(l));
                    assert_eq!(y.get(l), 0);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let (a, s) = remark();
        let lam = Weight::new(vec![1, 1, 1]);
        assert!(matches!(
            solve_extremal(&a, &s, &lam, &word(&[1, 1], 3)),
            Err(Error::NotReduced(_))
        ));
        assert!(matches!(
            solve_extremal(&a, &s, &Weight::new(vec![1, -1, 0]), &word(&[1], 3)),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(
            solve_extremal(&a, &s, &lam, &word(&[2], 3)),
            Err(Error::SequenceMismatch { .. })
        ));
    }
}
