//! Cartan data: generalized Cartan matrices, weights written as offsets from a
//! fixed base weight, and Weyl-group words.
//!
//! Indices are 1-based throughout the public API, matching the usual
//! `I = {1, ..., n}` labelling.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// A symmetrizable generalized Cartan matrix `a[i][j] = <h_i, alpha_j>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    /// Builds a Cartan matrix from its rows, rejecting anything that is not a
    /// symmetrizable generalized Cartan matrix.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        check_generalized(rows)?;
        if symmetrizer(rows).is_none() {
            return Err(Error::NotSymmetrizable);
        }
        let n = rows.len();
        Ok(Self {
            n,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    /// Type `A_n`.
    pub fn type_a(n: usize) -> Self {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(&rows).expect("type A is a valid Cartan matrix")
    }

    /// The rank 2 matrix with `<h_1, alpha_2> = -c1` and `<h_2, alpha_1> = -c2`.
    pub fn rank2(c1: i64, c2: i64) -> Result<Self> {
        Self::from_rows(&[vec![2, -c1], vec![-c2, 2]])
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `<h_i, alpha_j>`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> Result<i64> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.a(i, j))
    }

    #[inline]
    pub(crate) fn a(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Positive integers `d_i` with `d_i a[i][j] = d_j a[j][i]`, normalized so
    /// that they are coprime within each connected component.
    pub fn symmetrizer(&self) -> Vec<i64> {
        symmetrizer(&self.rows()).expect("validated at construction")
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn check_offset(&self, mu: &WeightOffset) -> Result<()> {
        if mu.base.rank() != self.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                found: mu.base.rank(),
            });
        }
        if mu.c.len() != self.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                found: mu.c.len(),
            });
        }
        Ok(())
    }

    /// `<h_i, mu>` for `mu = base - sum_j c_j alpha_j`.
    pub fn pairing(&self, i: usize, mu: &WeightOffset) -> Result<i64> {
        self.check_index(i)?;
        self.check_offset(mu)?;
        Ok(self.pairing_parts(i, &mu.base.m, &mu.c))
    }

    #[inline]
    pub(crate) fn pairing_parts(&self, i: usize, base: &[i64], c: &[i64]) -> i64 {
        let row = &self.entries[(i - 1) * self.n..i * self.n];
        base[i - 1] - row.iter().zip(c).map(|(a, c)| a * c).sum::<i64>()
    }

    /// The simple reflection `s_i mu = mu - <h_i, mu> alpha_i`.
    pub fn reflect(&self, i: usize, mu: &WeightOffset) -> Result<WeightOffset> {
        let p = self.pairing(i, mu)?;
        let mut out = mu.clone();
        out.c[i - 1] += p;
        Ok(out)
    }

    fn reflect_root(&self, i: usize, root: &mut [i64]) {
        let p: i64 = (1..=self.n).map(|j| self.a(i, j) * root[j - 1]).sum();
        root[i - 1] -= p;
    }

    /// Whether `w = s_{i_L} ... s_{i_1}` is a reduced expression.
    ///
    /// Uses the root criterion: the prefix `u = s_{i_1} ... s_{i_{t-1}}`
    /// gains length when multiplied by `s_{i_t}` iff `u(alpha_{i_t})` is a
    /// positive root.
    pub fn is_reduced(&self, word: &WeylWord) -> Result<bool> {
        for &i in &word.letters {
            self.check_index(i)?;
        }
        let mut root = vec![0i64; self.n];
        for t in 0..word.letters.len() {
            root.iter_mut().for_each(|r| *r = 0);
            root[word.letters[t] - 1] = 1;
            for &j in word.letters[..t].iter().rev() {
                self.reflect_root(j, &mut root);
            }
            // real roots are either positive or negative
            if root.iter().any(|&r| r < 0) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Checks the three generalized-Cartan invariants, with a diagnostic naming
/// the first offending entry.
#[allow(clippy::needless_range_loop)]
pub fn check_generalized(rows: &[Vec<i64>]) -> Result<()> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::InvalidCartan("matrix is empty".into()));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidCartan(format!(
                "row {} has length {}, expected {n}",
                i + 1,
                row.len()
            )));
        }
    }
    for i in 0..n {
        if rows[i][i] != 2 {
            return Err(Error::InvalidCartan(format!(
                "diagonal entry a[{0}][{0}] = {1}, expected 2",
                i + 1,
                rows[i][i]
            )));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if rows[i][j] > 0 {
                return Err(Error::InvalidCartan(format!(
                    "off-diagonal entry a[{}][{}] = {} is positive",
                    i + 1,
                    j + 1,
                    rows[i][j]
                )));
            }
            if (rows[i][j] == 0) != (rows[j][i] == 0) {
                return Err(Error::InvalidCartan(format!(
                    "a[{}][{}] and a[{}][{}] must vanish together",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    Ok(())
}

/// Whether a generalized Cartan matrix is symmetrizable.
pub fn is_symmetrizable(rows: &[Vec<i64>]) -> Result<bool> {
    check_generalized(rows)?;
    Ok(symmetrizer(rows).is_some())
}

/// Propagates the ratios `d_j / d_i = a[i][j] / a[j][i]` across each
/// connected component and checks every edge for consistency.
fn symmetrizer(rows: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = rows.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(Ratio::from_integer(1));
        let mut component = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].unwrap();
            for j in 0..n {
                if i == j || rows[i][j] == 0 {
                    continue;
                }
                let dj = di * Ratio::new(rows[i][j], rows[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != dj => return None,
                    Some(_) => {}
                }
            }
        }
        let denom_lcm = component
            .iter()
            .fold(1i64, |acc, &i| acc.lcm(d[i].unwrap().denom()));
        for &i in &component {
            let v = d[i].unwrap() * denom_lcm;
            d[i] = Some(v);
        }
        let g = component
            .iter()
            .fold(0i64, |acc, &i| acc.gcd(&d[i].unwrap().to_integer()));
        for &i in &component {
            d[i] = Some(d[i].unwrap() / g);
        }
    }
    Some(d.into_iter().map(|x| x.unwrap().to_integer()).collect())
}

/// An integral weight `sum_i m_i Lambda_i`, so `<h_i, lambda> = m_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    m: Vec<i64>,
}

impl Weight {
    pub fn new(m: Vec<i64>) -> Self {
        Self { m }
    }

    pub fn zero(n: usize) -> Self {
        Self { m: vec![0; n] }
    }

    /// The fundamental weight `Lambda_i` (1-based).
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut m = vec![0; n];
        m[i - 1] = 1;
        Self { m }
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.m
    }

    /// `<h_i, lambda>`, 1-based.
    pub fn coeff(&self, i: usize) -> i64 {
        self.m[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.m.iter().all(|&x| x >= 0)
    }
}

/// A weight `base - sum_j c_j alpha_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightOffset {
    pub base: Weight,
    pub c: Vec<i64>,
}

impl WeightOffset {
    pub fn new(base: Weight, c: Vec<i64>) -> Self {
        Self { base, c }
    }

    pub fn at_base(base: Weight) -> Self {
        let n = base.rank();
        Self {
            base,
            c: vec![0; n],
        }
    }
}

impl fmt::Display for WeightOffset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ")?;
        write_offsets(f, &self.c)
    }
}

/// Writes ` - c1*a1 + ...` with zero offsets omitted.
pub(crate) fn write_offsets(f: &mut fmt::Formatter<'_>, c: &[i64]) -> fmt::Result {
    for (j, &cj) in c.iter().enumerate() {
        if cj > 0 {
            write!(f, " - {}*a{}", cj, j + 1)?;
        } else if cj < 0 {
            write!(f, " + {}*a{}", -cj, j + 1)?;
        }
    }
    Ok(())
}

/// A word `w = s_{i_L} ... s_{i_1}`, stored in application order
/// (`letters[0] = i_1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>, rank: usize) -> Result<Self> {
        for &i in &letters {
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
        }
        Ok(Self { letters })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word with its last-applied letter removed (`w'` with `w = s_{i_L} w'`).
    pub fn without_last(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.pop();
        Self { letters }
    }
}

impl fmt::Display for WeylWord {
    /// Product notation, leftmost letter applied last.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().rev().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(""))
    }
}
