//! Work-list generation of the inequality sets `Xi_iota` and
//! `Xi_iota[lambda]`.
//!
//! Both sets are infinite in general, so generation works on sequences
//! vanishing beyond a variable cutoff `N`: every form is restricted to
//! `x_1..x_N`, and only the operators `S_k` / `S_hat_k` with `k <= N` are
//! applied. Restriction commutes with those operators, so every generated
//! form is the restriction of a genuine member. The set is `closed` when
//! the fixpoint is reached before the count cutoff.

use std::collections::{BTreeSet, VecDeque};

use num_traits::{Signed, Zero};

use super::form::LinearForm;
use super::operators::{lambda_form, s_hat_k, s_k};
use crate::error::Result;
use crate::rootdata::{CartanMatrix, Weight};
use crate::sequence::IotaSequence;

/// A generated inequality set, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiSet {
    pub forms: Vec<LinearForm>,
    pub closed: bool,
    pub var_cutoff: usize,
    pub count_cutoff: usize,
}

/// A yes/no answer that is only a certificate when the underlying
/// generation closed; otherwise it holds "up to cutoff".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub certified: bool,
}

/// Generates `Xi_iota` (when `lambda` is `None`) or `Xi_iota[lambda]`.
pub fn generate_xi(
    iota: &IotaSequence,
    cartan: &CartanMatrix,
    lambda: Option<&Weight>,
    var_cutoff: usize,
    count_cutoff: usize,
) -> Result<XiSet> {
    let mut seeds: Vec<LinearForm> = (1..=var_cutoff).map(LinearForm::var).collect();
    if let Some(lambda) = lambda {
        for i in 1..=cartan.rank() {
            seeds.push(lambda_form(iota, cartan, lambda, i)?.restricted(var_cutoff));
        }
    }
    let apply = |k: usize, phi: &LinearForm| -> LinearForm {
        let out = match lambda {
            Some(lambda) => s_hat_k(iota, cartan, lambda, k, phi),
            None => s_k(iota, cartan, k, phi),
        };
        out.restricted(var_cutoff)
    };

    let mut seen: BTreeSet<LinearForm> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut closed = true;
    for s in seeds {
        if seen.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    'work: while let Some(phi) = queue.pop_front() {
        let support: Vec<usize> = phi.terms().map(|(k, _)| k).collect();
        for k in support {
            let psi = apply(k, &phi);
            if seen.contains(&psi) {
                continue;
            }
            if seen.len() >= count_cutoff {
                closed = false;
                break 'work;
            }
            seen.insert(psi.clone());
            queue.push_back(psi);
        }
    }
    Ok(XiSet {
        forms: seen.into_iter().collect(),
        closed,
        var_cutoff,
        count_cutoff,
    })
}

/// Every form has a nonnegative coefficient at each first occurrence
/// position (`k- = 0`).
pub fn check_positivity(xi: &XiSet, iota: &IotaSequence) -> Verdict {
    let holds = xi.forms.iter().all(|phi| {
        phi.terms()
            .all(|(k, q)| !(q.is_negative() && iota.k_minus(k) == 0))
    });
    Verdict {
        holds,
        certified: xi.closed,
    }
}

/// The zero vector satisfies every generated form.
pub fn ample_verdict(xi: &XiSet) -> Verdict {
    Verdict {
        holds: xi.forms.iter().all(|phi| !phi.constant().is_negative()),
        certified: xi.closed,
    }
}

/// Whether `(iota, lambda)` is ample, as far as generation up to the cutoffs
/// can tell.
pub fn check_ample(
    iota: &IotaSequence,
    cartan: &CartanMatrix,
    lambda: &Weight,
    var_cutoff: usize,
    count_cutoff: usize,
) -> Result<Verdict> {
    let xi = generate_xi(iota, cartan, Some(lambda), var_cutoff, count_cutoff)?;
    Ok(ample_verdict(&xi))
}

/// Forms that are not identically zero; the zero form carries no constraint.
pub fn nontrivial(xi: &XiSet) -> impl Iterator<Item = &LinearForm> {
    xi.forms
        .iter()
        .filter(|f| !(f.constant().is_zero() && f.max_index() == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedral::form::rat;
    use crate::sequence::IotaSpec;

    fn alt(cartan: &CartanMatrix) -> IotaSequence {
        IotaSequence::new(IotaSpec::new(vec![], vec![1, 2]), cartan).unwrap()
    }

    #[test]
    fn a1xa1_closes_with_all_coordinates() {
        let a = CartanMatrix::rank2(0, 0).unwrap();
        let xi = generate_xi(&alt(&a), &a, None, 8, 10_000).unwrap();
        assert!(xi.closed);
        for j in 1..=8 {
            assert!(xi.forms.contains(&LinearForm::var(j)));
        }
        // S_1 x_1 = -x_3
        assert!(xi.forms.contains(&LinearForm::from_integers(0, &[(3, -1)])));
    }

    #[test]
    fn seeds_are_members() {
        let a = CartanMatrix::type_a(2);
        let lam = Weight::new(vec![1, 1]);
        let xi = generate_xi(&alt(&a), &a, Some(&lam), 6, 10_000).unwrap();
        for j in 1..=6 {
            assert!(xi.forms.contains(&LinearForm::var(j)));
        }
        for i in 1..=2 {
            let f = lambda_form(&alt(&a), &a, &lam, i).unwrap().restricted(6);
            assert!(xi.forms.contains(&f));
        }
    }

    #[test]
    fn positivity_examples() {
        let a = CartanMatrix::type_a(2);
        let s = alt(&a);
        let only_vars = XiSet {
            forms: (1..5).map(LinearForm::var).collect(),
            closed: true,
            var_cutoff: 4,
            count_cutoff: 4,
        };
        assert!(check_positivity(&only_vars, &s).holds);

        let xi = generate_xi(&s, &a, None, 8, 10_000).unwrap();
        assert!(xi.closed);
        let v = check_positivity(&xi, &s);
        assert!(v.holds && v.certified);

        let bad = XiSet {
            forms: vec![LinearForm::from_integers(0, &[(1, -1), (3, 1)])],
            closed: true,
            var_cutoff: 4,
            count_cutoff: 4,
        };
        assert!(!check_positivity(&bad, &s).holds);
    }

    #[test]
    fn ample_examples() {
        let a = CartanMatrix::type_a(2);
        let s = alt(&a);
        let v = check_ample(&s, &a, &Weight::new(vec![1, 1]), 6, 10_000).unwrap();
        assert!(v.holds && v.certified);
        let v = check_ample(&s, &a, &Weight::new(vec![0, 0]), 6, 10_000).unwrap();
        assert!(v.holds);
    }

    #[test]
    fn count_cutoff_marks_not_closed() {
        let a = CartanMatrix::type_a(2);
        let xi = generate_xi(&alt(&a), &a, Some(&Weight::new(vec![1, 1])), 6, 3).unwrap();
        assert!(!xi.closed);
        assert!(!ample_verdict(&xi).certified);
    }

    #[test]
    fn generated_forms_have_consistent_branch() {
        // re-applying S_hat_k to a form whose k-th coefficient is already 0
        // leaves it unchanged
        let a = CartanMatrix::type_a(2);
        let lam = Weight::new(vec![2, 1]);
        let s = alt(&a);
        let xi = generate_xi(&s, &a, Some(&lam), 6, 10_000).unwrap();
        for phi in &xi.forms {
            for k in 1..=6 {
                let once = s_hat_k(&s, &a, &lam, k, phi);
                if once.coeff(k) == rat(0) {
                    assert_eq!(s_hat_k(&s, &a, &lam, k, &once), once);
                }
            }
        }
    }
}
