use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::form::LinearForm;
use crate::crystal::ZVector;

/// Whether `x` satisfies every form.
pub fn membership<'a>(forms: impl IntoIterator<Item = &'a LinearForm>, x: &ZVector) -> bool {
    forms.into_iter().all(|f| f.holds_at(x))
}

/// Per-coordinate bounds `max_k + 1` over a point set, for `k = 1..=len`.
pub fn box_from_points<'a>(points: impl IntoIterator<Item = &'a ZVector>, len: usize) -> Vec<i64> {
    let mut bounds = vec![0i64; len];
    for p in points {
        for (k, b) in bounds.iter_mut().enumerate() {
            *b = (*b).max(p.get(k + 1));
        }
    }
    bounds.iter().map(|b| b + 1).collect()
}

/// An integer multiple of a form restricted to `x_1..x_len`, with the best
/// possible contribution of the still-unassigned coordinates precomputed.
struct ScaledForm {
    constant: i128,
    coeffs: Vec<i128>,
    /// `slack[k]`: max of `sum_{j<=k} q_j x_j` over the box.
    slack: Vec<i128>,
}

fn to_i128(v: &BigInt) -> i128 {
    v.to_i128().expect("form coefficients fit in i128")
}

impl ScaledForm {
    fn new(form: &LinearForm, bounds: &[i64]) -> Self {
        let len = bounds.len();
        let (c, terms) = form.integral_multiple();
        let mut coeffs = vec![0i128; len + 1];
        for (k, q) in terms {
            if k <= len {
                coeffs[k] = to_i128(&q);
            }
        }
        let mut slack = vec![0i128; len + 1];
        for k in 1..=len {
            slack[k] = slack[k - 1] + (coeffs[k] * bounds[k - 1] as i128).max(0);
        }
        Self {
            constant: to_i128(&c),
            coeffs,
            slack,
        }
    }
}

/// Lattice points of `{x : phi(x) >= 0, x_k = 0 for k > len}` inside the box
/// `0 <= x_k <= bounds[k-1]`.
///
/// Depth-first from `x_len` down to `x_1`; a branch is cut as soon as some
/// form cannot recover nonnegativity with the coordinates still free.
pub fn enumerate_truncated<'a>(
    forms: impl IntoIterator<Item = &'a LinearForm>,
    len: usize,
    bounds: &[i64],
) -> BTreeSet<ZVector> {
    assert_eq!(bounds.len(), len, "one bound per coordinate");
    let scaled: Vec<ScaledForm> = forms
        .into_iter()
        .map(|f| ScaledForm::new(f, bounds))
        .collect();
    let mut partial: Vec<i128> = scaled.iter().map(|f| f.constant).collect();
    let mut out = BTreeSet::new();
    if scaled.iter().any(|f| f.constant + f.slack[len] < 0) {
        return out;
    }
    let mut x = vec![0i64; len];
    descend(&scaled, bounds, len, &mut x, &mut partial, &mut out);
    out
}

fn descend(
    forms: &[ScaledForm],
    bounds: &[i64],
    k: usize,
    x: &mut Vec<i64>,
    partial: &mut [i128],
    out: &mut BTreeSet<ZVector>,
) {
    if k == 0 {
        out.insert(ZVector::from_dense(x.clone()));
        return;
    }
    for v in 0..=bounds[k - 1] {
        let mut feasible = true;
        for (f, p) in forms.iter().zip(partial.iter_mut()) {
            *p += f.coeffs[k] * v as i128;
            if *p + f.slack[k - 1] < 0 {
                feasible = false;
            }
        }
        if feasible {
            x[k - 1] = v;
            descend(forms, bounds, k - 1, x, partial, out);
        }
        for (f, p) in forms.iter().zip(partial.iter_mut()) {
            *p -= f.coeffs[k] * v as i128;
        }
    }
    x[k - 1] = 0;
}
