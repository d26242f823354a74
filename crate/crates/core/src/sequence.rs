//! Eventually periodic index sequences `iota = (i_1, i_2, ...)`.
//!
//! A sequence is described by a finite prefix followed by a cycle repeated
//! forever. [`IotaSpec`] is the raw description; [`IotaSequence`] is a spec
//! that has been checked against a Cartan matrix and supports the
//! `k^(+)`, `k^(-)` and first-occurrence accessors.

use std::fmt;

use crate::error::{Error, Result};
use crate::rootdata::{CartanMatrix, WeylWord};

/// A reason a raw sequence fails the adjacency or occurrence conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceViolation {
    /// `i_k = i_{k+1}`.
    AdjacentEqual { position: usize, index: usize },
    /// An entry outside `1..=rank`.
    OutOfRange { position: usize, index: usize },
    /// The index never occurs in the cycle, so it occurs finitely often.
    MissingFromCycle { index: usize },
}

impl fmt::Display for SequenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AdjacentEqual { position, index } => {
                write!(f, "i_{position} = i_{} = {index}", position + 1)
            }
            Self::OutOfRange { position, index } => {
                write!(f, "i_{position} = {index} is out of range")
            }
            Self::MissingFromCycle { index } => {
                write!(f, "index {index} never occurs in the cycle")
            }
        }
    }
}

/// Raw prefix/cycle description of a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IotaSpec {
    pub prefix: Vec<usize>,
    pub cycle: Vec<usize>,
}

impl IotaSpec {
    pub fn new(prefix: Vec<usize>, cycle: Vec<usize>) -> Self {
        Self { prefix, cycle }
    }

    fn raw_at(&self, k: usize) -> usize {
        if k <= self.prefix.len() {
            self.prefix[k - 1]
        } else {
            self.cycle[(k - 1 - self.prefix.len()) % self.cycle.len()]
        }
    }

    /// Reports every violation of the sequence conditions for the given
    /// Cartan matrix. An empty list means the prefix and cycle are valid.
    pub fn validate(&self, cartan: &CartanMatrix) -> Vec<SequenceViolation> {
        let n = cartan.rank();
        let mut out = Vec::new();
        if self.cycle.is_empty() {
            // nothing else is meaningful
            for i in 1..=n {
                out.push(SequenceViolation::MissingFromCycle { index: i });
            }
            return out;
        }
        let span = self.prefix.len() + self.cycle.len();
        for k in 1..=span {
            let i = self.raw_at(k);
            if i == 0 || i > n {
                out.push(SequenceViolation::OutOfRange {
                    position: k,
                    index: i,
                });
            }
        }
        // positions 1..=span cover the seam and the wrap-around of the cycle
        for k in 1..=span {
            let i = self.raw_at(k);
            if i == self.raw_at(k + 1) {
                out.push(SequenceViolation::AdjacentEqual {
                    position: k,
                    index: i,
                });
            }
        }
        for i in 1..=n {
            if !self.cycle.contains(&i) {
                out.push(SequenceViolation::MissingFromCycle { index: i });
            }
        }
        out
    }
}

/// A validated index sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IotaSequence {
    spec: IotaSpec,
    rank: usize,
}

impl IotaSequence {
    pub fn new(spec: IotaSpec, cartan: &CartanMatrix) -> Result<Self> {
        let violations = spec.validate(cartan);
        if !violations.is_empty() {
            return Err(Error::InvalidSequence(violations));
        }
        Ok(Self {
            spec,
            rank: cartan.rank(),
        })
    }

    /// The sequence whose first letters are the word (in application order)
    /// and which then repeats `cycle`, rotated if needed so that the seam does
    /// not repeat an index.
    pub fn extending(word: &WeylWord, cycle: &[usize], cartan: &CartanMatrix) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::EmptyCycle);
        }
        let prefix = word.letters().to_vec();
        let mut rotated = cycle.to_vec();
        if let Some(&last) = prefix.last() {
            let shift = (0..cycle.len())
                .find(|&r| cycle[r] != last)
                .ok_or(Error::UnfixableSeam(last))?;
            rotated.rotate_left(shift);
        }
        Self::new(IotaSpec::new(prefix, rotated), cartan)
    }

    pub fn spec(&self) -> &IotaSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn prefix(&self) -> &[usize] {
        &self.spec.prefix
    }

    pub fn cycle(&self) -> &[usize] {
        &self.spec.cycle
    }

    /// `i_k`; position 0 is rejected.
    pub fn at(&self, k: usize) -> Result<usize> {
        if k == 0 {
            return Err(Error::ZeroPosition);
        }
        Ok(self.spec.raw_at(k))
    }

    /// `i_k` for `k >= 1`.
    #[inline]
    pub(crate) fn letter(&self, k: usize) -> usize {
        self.spec.raw_at(k)
    }

    /// Smallest `l > k` with `i_l = i_k`.
    ///
    /// # Panics
    /// If `k == 0`.
    pub fn k_plus(&self, k: usize) -> usize {
        assert!(k >= 1, "positions start at 1");
        let i = self.letter(k);
        (k + 1..)
            .find(|&l| self.letter(l) == i)
            .expect("every index recurs in the cycle")
    }

    /// Largest `l < k` with `i_l = i_k`, or 0 if there is none.
    ///
    /// # Panics
    /// If `k == 0`.
    pub fn k_minus(&self, k: usize) -> usize {
        assert!(k >= 1, "positions start at 1");
        let i = self.letter(k);
        (1..k).rev().find(|&l| self.letter(l) == i).unwrap_or(0)
    }

    /// First position `k` with `i_k = i`.
    pub fn first_occurrence(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        Ok((1..)
            .find(|&k| self.letter(k) == i)
            .expect("every index occurs in the cycle"))
    }

    /// Smallest position `k > after` with `i_k = i`.
    pub(crate) fn next_occurrence(&self, i: usize, after: usize) -> usize {
        (after + 1..)
            .find(|&k| self.letter(k) == i)
            .expect("every index occurs in the cycle")
    }

    /// Checks that `i_k` equals the `k`-th letter of the word for `k <= L`.
    pub fn check_extends(&self, word: &WeylWord) -> Result<()> {
        for (pos, &expected) in word.letters().iter().enumerate() {
            let found = self.letter(pos + 1);
            if found != expected {
                return Err(Error::SequenceMismatch {
                    position: pos + 1,
                    expected,
                    found,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for IotaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.spec.prefix.iter().map(|x| x.to_string()).collect();
        let c: Vec<String> = self.spec.cycle.iter().map(|x| x.to_string()).collect();
        write!(f, "({}|{})*", p.join(","), c.join(","))
    }
}
