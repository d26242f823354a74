use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::crystal::ZVector;

/// An affine form `c + sum_k q_k x_k` with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is form
/// equality. The derived order compares the constant first, then the
/// coefficients by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LinearForm {
    constant: BigRational,
    coeffs: BTreeMap<usize, BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LinearForm {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The coordinate form `x_k`.
    pub fn var(k: usize) -> Self {
        let mut f = Self::zero();
        f.coeffs.insert(k, BigRational::one());
        f
    }

    pub fn from_integers(constant: i64, terms: &[(usize, i64)]) -> Self {
        let mut f = Self {
            constant: rat(constant),
            coeffs: BTreeMap::new(),
        };
        for &(k, q) in terms {
            f.add_term(k, &rat(q));
        }
        f
    }

    pub fn constant(&self) -> &BigRational {
        &self.constant
    }

    /// The coefficient of `x_k`.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().map(|(k, q)| (*k, q))
    }

    /// Largest index with a nonzero coefficient, 0 if none.
    pub fn max_index(&self) -> usize {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.is_empty()
    }

    pub(crate) fn add_term(&mut self, k: usize, q: &BigRational) {
        if q.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(BigRational::zero);
        *entry += q;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    /// `self - factor * other`.
    pub fn sub_scaled(&self, factor: &BigRational, other: &LinearForm) -> LinearForm {
        let mut out = self.clone();
        if factor.is_zero() {
            return out;
        }
        out.constant -= factor * &other.constant;
        for (k, q) in &other.coeffs {
            out.add_term(*k, &-(factor * q));
        }
        out
    }

    /// Drops every term `x_k` with `k > max_index`, i.e. restricts the form to
    /// sequences vanishing beyond `max_index`.
    pub fn restricted(&self, max_index: usize) -> LinearForm {
        let mut out = self.clone();
        out.coeffs.retain(|k, _| *k <= max_index);
        out
    }

    pub fn eval(&self, x: &ZVector) -> BigRational {
        let mut total = self.constant.clone();
        for (k, q) in &self.coeffs {
            let xk = x.get(*k);
            if xk != 0 {
                total += q * rat(xk);
            }
        }
        total
    }

    /// Whether `self(x) >= 0`.
    pub fn holds_at(&self, x: &ZVector) -> bool {
        !self.eval(x).is_negative()
    }

    /// A positive integer multiple of the form, as `(constant, terms)`.
    pub(crate) fn integral_multiple(&self) -> (BigInt, Vec<(usize, BigInt)>) {
        let lcm = self
            .coeffs
            .values()
            .chain(std::iter::once(&self.constant))
            .fold(BigInt::one(), |acc, q| {
                num_integer::lcm(acc, q.denom().clone())
            });
        let scale = |q: &BigRational| (q * BigRational::from_integer(lcm.clone())).to_integer();
        (
            scale(&self.constant),
            self.coeffs.iter().map(|(k, q)| (*k, scale(q))).collect(),
        )
    }
}

impl fmt::Display for LinearForm {
    /// `c + q_1*x_1 + q_2*x_2 + ...`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.constant.is_zero() {
            parts.push(self.constant.to_string());
        }
        for (k, q) in &self.coeffs {
            parts.push(format!("{q}*x_{k}"));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" + "))
    }
}
