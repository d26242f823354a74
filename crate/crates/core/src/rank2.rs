//! Rank 2 closed forms for `iota = (1, 2, 1, 2, ...)`: the Chebyshev-derived
//! sequences `a_l` and `a'_l`, `l_max`, the words `w_L`, the extremal
//! coordinates `d_k`, and the explicit inequality list of the image.

use std::fmt;

use crate::crystal::ZVector;
use crate::error::{Error, Result};
use crate::polyhedral::LinearForm;
use crate::rootdata::{CartanMatrix, Weight, WeylWord};
use crate::sequence::{IotaSequence, IotaSpec};

/// Cartan data `<h_1, alpha_2> = -c1`, `<h_2, alpha_1> = -c2` and the
/// weight `lambda = m1 Lambda_1 + m2 Lambda_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rank2Params {
    pub c1: i64,
    pub c2: i64,
    pub m1: i64,
    pub m2: i64,
}

impl Rank2Params {
    pub fn new(c1: i64, c2: i64, m1: i64, m2: i64) -> Result<Self> {
        if c1 < 0 || c2 < 0 {
            return Err(Error::InvalidRank2(format!(
                "c1 = {c1}, c2 = {c2} must be >= 0"
            )));
        }
        if (c1 == 0) != (c2 == 0) {
            return Err(Error::InvalidRank2(format!(
                "c1 = {c1}, c2 = {c2}: either both vanish or neither does"
            )));
        }
        if m1 < 0 || m2 < 0 {
            return Err(Error::NotDominant(vec![m1, m2]));
        }
        Ok(Self { c1, c2, m1, m2 })
    }

    /// `X = c1 c2 - 2`.
    pub fn x(&self) -> i64 {
        self.c1 * self.c2 - 2
    }

    /// Same data with the two simple roots exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            c1: self.c2,
            c2: self.c1,
            m1: self.m2,
            m2: self.m1,
        }
    }

    pub fn cartan(&self) -> CartanMatrix {
        CartanMatrix::rank2(self.c1, self.c2).expect("validated on construction")
    }

    pub fn lambda(&self) -> Weight {
        Weight::new(vec![self.m1, self.m2])
    }

    /// The alternating sequence `i_1 = 1, i_2 = 2, ...`.
    pub fn iota(&self) -> IotaSequence {
        IotaSequence::new(IotaSpec::new(vec![], vec![1, 2]), &self.cartan())
            .expect("alternating sequence is valid")
    }
}

/// `P_k(X)` from `P_0 = 1`, `P_1 = X`, `P_k = X P_{k-1} - P_{k-2}`.
pub fn chebyshev_p(k: usize, x: i64) -> i64 {
    let (mut prev, mut cur) = (1i64, x);
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        (prev, cur) = (cur, x * cur - prev);
    }
    cur
}

fn a_seq(c1: i64, c2: i64, l: usize) -> i64 {
    let x = c1 * c2 - 2;
    match l {
        0 => 0,
        1 => 1,
        _ if l.is_multiple_of(2) => c1 * chebyshev_p(l / 2 - 1, x),
        _ => {
            let k = l / 2;
            chebyshev_p(k, x) + chebyshev_p(k - 1, x)
        }
    }
}

/// `a_l(c1, c2)`.
pub fn a_l(p: &Rank2Params, l: usize) -> i64 {
    a_seq(p.c1, p.c2, l)
}

/// `a'_l(c1, c2) = a_l(c2, c1)`.
pub fn a_prime_l(p: &Rank2Params, l: usize) -> i64 {
    a_seq(p.c2, p.c1, l)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LMax {
    Finite(usize),
    Infinity,
}

impl LMax {
    /// Whether `l <= l_max`.
    pub fn admits(&self, l: usize) -> bool {
        match self {
            LMax::Finite(m) => l <= *m,
            LMax::Infinity => true,
        }
    }
}

impl fmt::Display for LMax {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LMax::Finite(m) => write!(f, "{m}"),
            LMax::Infinity => write!(f, "infinity"),
        }
    }
}

/// The least `l` with `a_{l+1} < 0`. For `c1 c2 >= 4` every `P_k(X)` is
/// positive, so the scan stops at `2 (c1 c2 + 4)` and reports infinity.
pub fn l_max(p: &Rank2Params) -> LMax {
    let bound = 2 * (p.c1 * p.c2 + 4) as usize;
    for l in 0..=bound {
        if a_l(p, l + 1) < 0 {
            return LMax::Finite(l);
        }
    }
    LMax::Infinity
}

/// `w_L`: letters `1, 2, 1, 2, ...` (application order), `L` of them.
pub fn w_l(p: &Rank2Params, len: usize) -> Result<WeylWord> {
    if let LMax::Finite(m) = l_max(p) {
        if len > m {
            return Err(Error::BeyondLMax {
                length: len,
                l_max: m,
            });
        }
    }
    WeylWord::new((0..len).map(|k| 1 + k % 2).collect(), 2)
}

/// `d_k = m1 a_k(c2, c1) + m2 a_{k-1}(c1, c2)`.
pub fn d_k(p: &Rank2Params, k: usize) -> i64 {
    assert!(k >= 1, "d_k is defined for k >= 1");
    p.m1 * a_prime_l(p, k) + p.m2 * a_l(p, k - 1)
}

/// `x_{w_L} = (d_1, ..., d_L, 0, ...)`.
pub fn rank2_extremal(p: &Rank2Params, len: usize) -> Result<ZVector> {
    w_l(p, len)?;
    Ok(ZVector::from_dense((1..=len).map(|k| d_k(p, k)).collect()))
}

/// The inequalities cutting out the image for `iota = (1, 2, 1, 2, ...)`:
/// `x_k >= 0`, `m1 - x_1 >= 0`, and for `1 <= l < l_max`
/// `a_l x_l - a_{l-1} x_{l+1} >= 0`, `m2 + a'_{l+1} x_l - a'_l x_{l+1} >= 0`.
///
/// Coordinates live in `1..=top`, where `top` is `l_max`, or `bound` when
/// `l_max` is infinite. The list is canonically sorted.
pub fn rank2_polytope(p: &Rank2Params, bound: usize) -> (usize, Vec<LinearForm>) {
    let top = match l_max(p) {
        LMax::Finite(m) => m,
        LMax::Infinity => bound,
    };
    let mut forms: Vec<LinearForm> = (1..=top).map(LinearForm::var).collect();
    forms.push(LinearForm::from_integers(p.m1, &[(1, -1)]));
    for l in 1..top {
        forms.push(LinearForm::from_integers(
            0,
            &[(l, a_l(p, l)), (l + 1, -a_l(p, l - 1))],
        ));
        forms.push(LinearForm::from_integers(
            p.m2,
            &[(l, a_prime_l(p, l + 1)), (l + 1, -a_prime_l(p, l))],
        ));
    }
    forms.sort();
    forms.dedup();
    (top, forms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c1: i64, c2: i64) -> Rank2Params {
        Rank2Params::new(c1, c2, 0, 0).unwrap()
    }

    /// Coefficients of `1 / (1 - X z + z^2)` by power series long division.
    fn series_coeffs(x: i64, n: usize) -> Vec<i64> {
        let den = [1i64, -x, 1];
        let mut out = vec![0i64; n];
        for k in 0..n {
            let mut v = if k == 0 { 1 } else { 0 };
            for j in 1..=2.min(k) {
                v -= den[j] * out[k - j];
            }
            out[k] = v;
        }
        out
    }

    #[test]
    fn chebyshev_examples() {
        for x in -4..=6 {
            assert_eq!(chebyshev_p(0, x), 1);
            assert_eq!(chebyshev_p(1, x), x);
            assert_eq!(chebyshev_p(2, x), x * x - 1);
            assert_eq!(chebyshev_p(3, x), x * x * x - 2 * x);
            let s = series_coeffs(x, 13);
            for (k, &v) in s.iter().enumerate().take(13) {
                assert_eq!(chebyshev_p(k, x), v);
            }
        }
        for k in 0..20 {
            assert_eq!(chebyshev_p(k, 2), k as i64 + 1);
        }
    }

    #[test]
    fn a_sequence_examples() {
        for (c1, c2) in [
            (1, 1),
            (1, 2),
            (2, 1),
            (1, 3),
            (3, 1),
            (2, 2),
            (2, 3),
            (4, 1),
            (0, 0),
        ] {
            let q = p(c1, c2);
            let n = c1 * c2;
            assert_eq!(a_l(&q, 0), 0);
            assert_eq!(a_l(&q, 1), 1);
            assert_eq!(a_l(&q, 2), c1);
            assert_eq!(a_l(&q, 3), n - 1);
            assert_eq!(a_l(&q, 4), c1 * (n - 2));
            assert_eq!(a_l(&q, 5), (n - 1) * (n - 2) - 1);
            assert_eq!(a_l(&q, 6), c1 * (n - 1) * (n - 3));
            assert_eq!(a_prime_l(&q, 2), c2);
        }
        for l in 0..=12 {
            assert_eq!(a_l(&p(2, 2), l), l as i64);
        }
    }

    #[test]
    fn a_sequence_recurrence() {
        for (c1, c2) in [
            (0, 0),
            (1, 1),
            (1, 2),
            (2, 1),
            (1, 3),
            (3, 1),
            (2, 2),
            (2, 3),
            (5, 1),
        ] {
            let q = p(c1, c2);
            for k in 1..=5 {
                assert_eq!(a_l(&q, 2 * k + 1), c2 * a_l(&q, 2 * k) - a_l(&q, 2 * k - 1));
                assert_eq!(a_l(&q, 2 * k + 2), c1 * a_l(&q, 2 * k + 1) - a_l(&q, 2 * k));
            }
        }
    }

    #[test]
    fn l_max_table() {
        assert_eq!(l_max(&p(0, 0)), LMax::Finite(2));
        assert_eq!(l_max(&p(1, 1)), LMax::Finite(3));
        assert_eq!(l_max(&p(1, 2)), LMax::Finite(4));
        assert_eq!(l_max(&p(2, 1)), LMax::Finite(4));
        assert_eq!(l_max(&p(1, 3)), LMax::Finite(6));
        assert_eq!(l_max(&p(3, 1)), LMax::Finite(6));
        assert_eq!(l_max(&p(2, 2)), LMax::Infinity);
        assert_eq!(l_max(&p(2, 3)), LMax::Infinity);
        for (c1, c2) in [(0, 0), (1, 1), (1, 2), (2, 1), (1, 3), (3, 1)] {
            let q = p(c1, c2);
            let LMax::Finite(m) = l_max(&q) else {
                unreachable!()
            };
            assert_eq!(a_l(&q, m), 0);
            assert!((1..m).all(|l| a_l(&q, l) > 0));
        }
    }

    #[test]
    fn params_validation() {
        assert!(Rank2Params::new(0, 1, 0, 0).is_err());
        assert!(Rank2Params::new(-1, -1, 0, 0).is_err());
        assert!(matches!(
            Rank2Params::new(1, 1, -1, 0),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn words() {
        let q = p(1, 1);
        assert!(w_l(&q, 0).unwrap().is_empty());
        assert_eq!(w_l(&q, 3).unwrap().letters(), &[1, 2, 1]);
        assert!(matches!(w_l(&q, 4), Err(Error::BeyondLMax { .. })));
        assert_eq!(w_l(&p(2, 2), 4).unwrap().letters(), &[1, 2, 1, 2]);
    }

    #[test]
    fn d_examples() {
        for (c1, c2) in [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (2, 3)] {
            for (m1, m2) in [(1, 0), (0, 1), (2, 3)] {
                let q = Rank2Params::new(c1, c2, m1, m2).unwrap();
                assert_eq!(d_k(&q, 1), m1);
                assert_eq!(d_k(&q, 2), m1 * c2 + m2);
                for k in 1..=4 {
                    assert_eq!(
                        d_k(&q, 2 * k + 1) - c1 * d_k(&q, 2 * k) + d_k(&q, 2 * k - 1),
                        0
                    );
                    assert_eq!(
                        d_k(&q, 2 * k + 2) - c2 * d_k(&q, 2 * k + 1) + d_k(&q, 2 * k),
                        0
                    );
                }
            }
        }
        let q = Rank2Params::new(2, 2, 3, 5).unwrap();
        for k in 1..=10 {
            assert_eq!(d_k(&q, k), k as i64 * 3 + (k as i64 - 1) * 5);
        }
    }

    #[test]
    fn a1xa1_polytope() {
        let q = Rank2Params::new(0, 0, 2, 3).unwrap();
        let (top, forms) = rank2_polytope(&q, 0);
        assert_eq!(top, 2);
        let mut expected = vec![
            LinearForm::var(1),
            LinearForm::var(2),
            LinearForm::from_integers(2, &[(1, -1)]),
            LinearForm::from_integers(3, &[(2, -1)]),
        ];
        expected.sort();
        assert_eq!(forms, expected);
    }
}
