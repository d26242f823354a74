//! The crystal structure on finitely supported integer sequences.
//!
//! A point `x = (x_1, x_2, ...)` carries the crystal structure of either
//! `Z^inf_iota[lambda]` (the highest-weight setting) or `Z^inf_iota` (the
//! `B(infinity)` setting), selected by [`Highest`]. The zero vector plays the
//! role of the highest weight element in both.

mod demazure;
mod enumerate;
mod vector;

pub use demazure::{
    demazure_b_infinity, demazure_crystal, i_string_status, in_demazure_b_infinity, StringStatus,
};
pub use enumerate::{enumerate_image, Budget, Enumeration};
pub use vector::ZVector;

use crate::error::{Error, Result};
use crate::rootdata::{CartanMatrix, Weight, WeightOffset};
use crate::sequence::IotaSequence;

/// Which crystal structure a context uses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Highest {
    Weight(Weight),
    Infinity,
}

/// A Cartan matrix, an index sequence and a choice of highest weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalContext {
    cartan: CartanMatrix,
    iota: IotaSequence,
    highest: Highest,
}

/// The argmax set `M^(i)`. It is infinite exactly when `sigma^(i)(x) = 0`, in
/// which case only its minimum is recorded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Argmax {
    pub min: usize,
    max: Option<usize>,
}

impl Argmax {
    pub fn is_finite(&self) -> bool {
        self.max.is_some()
    }

    /// The largest element, defined only for a finite set.
    pub fn max(&self) -> Result<usize> {
        self.max.ok_or_else(|| {
            Error::Inconsistency("max of M^(i) requested while sigma^(i)(x) = 0".into())
        })
    }
}

/// All `sigma_k(x)` for `k` inside the support, plus the full sums
/// `sum_j <h_i, alpha_{i_j}> x_j` for every `i`.
struct SigmaTable {
    sigma: Vec<i64>,
    totals: Vec<i64>,
}

impl CrystalContext {
    pub fn new(cartan: CartanMatrix, iota: IotaSequence, highest: Highest) -> Result<Self> {
        let n = cartan.rank();
        if iota.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: iota.rank(),
            });
        }
        if let Highest::Weight(w) = &highest {
            if w.rank() != n {
                return Err(Error::RankMismatch {
                    expected: n,
                    found: w.rank(),
                });
            }
        }
        Ok(Self {
            cartan,
            iota,
            highest,
        })
    }

    pub fn with_weight(cartan: CartanMatrix, iota: IotaSequence, lambda: Weight) -> Result<Self> {
        Self::new(cartan, iota, Highest::Weight(lambda))
    }

    pub fn infinity(cartan: CartanMatrix, iota: IotaSequence) -> Result<Self> {
        Self::new(cartan, iota, Highest::Infinity)
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn iota(&self) -> &IotaSequence {
        &self.iota
    }

    pub fn highest(&self) -> &Highest {
        &self.highest
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// The highest weight, or an error in `B(infinity)` mode.
    pub fn lambda(&self) -> Result<&Weight> {
        match &self.highest {
            Highest::Weight(w) => Ok(w),
            Highest::Infinity => Err(Error::InfinityMode),
        }
    }

    pub(crate) fn require_dominant(&self) -> Result<&Weight> {
        let w = self.lambda()?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.coeffs().to_vec()));
        }
        Ok(w)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        self.cartan.check_index(i)
    }

    fn sigma_table(&self, x: &ZVector) -> SigmaTable {
        let n = self.rank();
        let s = x.support_len();
        let mut sigma = vec![0i64; s];
        let mut running = vec![0i64; n];
        for k in (1..=s).rev() {
            let ik = self.iota.letter(k);
            let xk = x.get(k);
            sigma[k - 1] = xk + running[ik - 1];
            if xk != 0 {
                for (i, r) in running.iter_mut().enumerate() {
                    *r += self.cartan.a(i + 1, ik) * xk;
                }
            }
        }
        SigmaTable {
            sigma,
            totals: running,
        }
    }

    /// `sigma_k(x) = x_k + sum_{j > k} <h_{i_k}, alpha_{i_j}> x_j`.
    pub fn sigma_k(&self, x: &ZVector, k: usize) -> Result<i64> {
        if k == 0 {
            return Err(Error::ZeroPosition);
        }
        if k > x.support_len() {
            return Ok(0);
        }
        let ik = self.iota.letter(k);
        let tail: i64 = (k + 1..=x.support_len())
            .map(|j| self.cartan.a(ik, self.iota.letter(j)) * x.get(j))
            .sum();
        Ok(x.get(k) + tail)
    }

    /// `sigma_0^(i)(x) = -<h_i, lambda> + sum_j <h_i, alpha_{i_j}> x_j`.
    pub fn sigma0(&self, x: &ZVector, i: usize) -> Result<i64> {
        self.check_index(i)?;
        let lambda = self.lambda()?;
        let table = self.sigma_table(x);
        Ok(table.totals[i - 1] - lambda.coeff(i))
    }

    fn sigma_max_from(&self, table: &SigmaTable, support: usize, i: usize) -> (i64, Argmax) {
        // positions beyond the support all have sigma_k = 0; the first of
        // them stands in for the whole tail
        let positions = (1..=support).filter(|&k| self.iota.letter(k) == i);
        let best = positions
            .clone()
            .map(|k| table.sigma[k - 1])
            .max()
            .unwrap_or(0)
            .max(0);
        let mut attained = positions.filter(|&k| table.sigma[k - 1] == best);
        let first = attained.next();
        let last = attained.next_back().or(first);
        let min = first.unwrap_or_else(|| self.iota.next_occurrence(i, support));
        let max = if best > 0 { last } else { None };
        (best, Argmax { min, max })
    }

    /// `sigma^(i)(x)` together with the argmax set `M^(i)`.
    pub fn sigma_max(&self, x: &ZVector, i: usize) -> Result<(i64, Argmax)> {
        self.check_index(i)?;
        let table = self.sigma_table(x);
        Ok(self.sigma_max_from(&table, x.support_len(), i))
    }

    /// The Kashiwara lowering operator; `None` stands for the crystal zero.
    pub fn f_tilde(&self, i: usize, x: &ZVector) -> Result<Option<ZVector>> {
        self.check_index(i)?;
        let table = self.sigma_table(x);
        let (best, argmax) = self.sigma_max_from(&table, x.support_len(), i);
        if let Highest::Weight(lambda) = &self.highest {
            let s0 = table.totals[i - 1] - lambda.coeff(i);
            if best <= s0 {
                return Ok(None);
            }
        }
        Ok(Some(x.add_at(argmax.min, 1)))
    }

    /// The Kashiwara raising operator; `None` stands for the crystal zero.
    pub fn e_tilde(&self, i: usize, x: &ZVector) -> Result<Option<ZVector>> {
        self.check_index(i)?;
        let table = self.sigma_table(x);
        let (best, argmax) = self.sigma_max_from(&table, x.support_len(), i);
        if best <= 0 {
            return Ok(None);
        }
        if let Highest::Weight(lambda) = &self.highest {
            let s0 = table.totals[i - 1] - lambda.coeff(i);
            if best < s0 {
                return Ok(None);
            }
        }
        Ok(Some(x.add_at(argmax.max()?, -1)))
    }

    /// `wt(x) = lambda - sum_j x_j alpha_{i_j}`, with base weight 0 in
    /// `B(infinity)` mode.
    pub fn wt(&self, x: &ZVector) -> WeightOffset {
        let n = self.rank();
        let base = match &self.highest {
            Highest::Weight(w) => w.clone(),
            Highest::Infinity => Weight::zero(n),
        };
        let mut c = vec![0i64; n];
        for (k, &xk) in x.entries().iter().enumerate() {
            c[self.iota.letter(k + 1) - 1] += xk;
        }
        WeightOffset::new(base, c)
    }

    /// `epsilon_i(x)`: `max(sigma^(i), sigma_0^(i))`, or `sigma^(i)` in
    /// `B(infinity)` mode.
    pub fn epsilon(&self, x: &ZVector, i: usize) -> Result<i64> {
        self.check_index(i)?;
        let table = self.sigma_table(x);
        let (best, _) = self.sigma_max_from(&table, x.support_len(), i);
        Ok(match &self.highest {
            Highest::Weight(lambda) => best.max(table.totals[i - 1] - lambda.coeff(i)),
            Highest::Infinity => best,
        })
    }

    /// `phi_i(x) = <h_i, wt(x)> + epsilon_i(x)`.
    pub fn phi(&self, x: &ZVector, i: usize) -> Result<i64> {
        let eps = self.epsilon(x, i)?;
        let wt = self.wt(x);
        Ok(self.cartan.pairing(i, &wt)? + eps)
    }

    /// `f_i^max x = f_i^{phi_i(x)} x`.
    pub fn f_max(&self, i: usize, x: &ZVector) -> Result<ZVector> {
        self.lambda()?;
        let phi = self.phi(x, i)?;
        if phi < 0 {
            return Err(Error::Inconsistency(format!(
                "phi_{i} = {phi} is negative at {x}"
            )));
        }
        let mut y = x.clone();
        for step in 0..phi {
            y = self.f_tilde(i, &y)?.ok_or_else(|| {
                Error::Inconsistency(format!(
                    "f_{i} vanished after {step} of {phi} steps from {x}"
                ))
            })?;
        }
        Ok(y)
    }
}
