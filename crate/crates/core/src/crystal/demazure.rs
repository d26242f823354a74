//! Demazure crystals `B_w(lambda)` and `B_w(infinity)` built along a reduced
//! word, and the `i`-string classification used to check them.

use std::collections::BTreeSet;

use super::{CrystalContext, Highest, ZVector};
use crate::error::{Error, Result};
use crate::rootdata::WeylWord;

fn check_word(ctx: &CrystalContext, word: &WeylWord) -> Result<()> {
    if !ctx.cartan().is_reduced(word)? {
        return Err(Error::NotReduced(word.letters().to_vec()));
    }
    ctx.iota().check_extends(word)
}

/// `B_w(lambda)`: starting from `{0}`, each letter `i` (in application order)
/// replaces the set by all nonzero `f_i^k b`, `k >= 0`.
pub fn demazure_crystal(ctx: &CrystalContext, word: &WeylWord) -> Result<BTreeSet<ZVector>> {
    ctx.require_dominant()?;
    check_word(ctx, word)?;
    let mut current = BTreeSet::from([ZVector::zero()]);
    for &i in word.letters() {
        let mut next = current.clone();
        for b in &current {
            let mut y = b.clone();
            while let Some(z) = ctx.f_tilde(i, &y)? {
                next.insert(z.clone());
                y = z;
            }
        }
        current = next;
    }
    let len = word.len();
    if let Some(bad) = current.iter().find(|x| !x.truncated_at(len)) {
        return Err(Error::Inconsistency(format!(
            "{bad} has support beyond the word length {len}"
        )));
    }
    Ok(current)
}

fn require_infinity(ctx: &CrystalContext) -> Result<()> {
    match ctx.highest() {
        Highest::Infinity => Ok(()),
        Highest::Weight(_) => Err(Error::Inconsistency(
            "B_w(infinity) needs a B(infinity) context".into(),
        )),
    }
}

/// The elements of `B_w(infinity)` with `sum_k x_k <= max_depth`.
pub fn demazure_b_infinity(
    ctx: &CrystalContext,
    word: &WeylWord,
    max_depth: i64,
) -> Result<BTreeSet<ZVector>> {
    require_infinity(ctx)?;
    check_word(ctx, word)?;
    let mut current = BTreeSet::from([ZVector::zero()]);
    for &i in word.letters() {
        let mut next = current.clone();
        for b in &current {
            let mut y = b.clone();
            while y.depth() < max_depth {
                y = ctx
                    .f_tilde(i, &y)?
                    .ok_or_else(|| Error::Inconsistency("f_i vanished on B(infinity)".into()))?;
                next.insert(y.clone());
            }
        }
        current = next;
    }
    Ok(current)
}

/// Whether `x` lies in the embedded `B_w(infinity)`: it must vanish beyond
/// the word length and reduce to the zero vector under the raising
/// operators.
pub fn in_demazure_b_infinity(ctx: &CrystalContext, word: &WeylWord, x: &ZVector) -> Result<bool> {
    require_infinity(ctx)?;
    check_word(ctx, word)?;
    if !x.truncated_at(word.len()) || !x.is_nonnegative() {
        return Ok(false);
    }
    let n = ctx.rank();
    let mut y = x.clone();
    'reduce: while !y.is_zero() {
        for i in 1..=n {
            if let Some(z) = ctx.e_tilde(i, &y)? {
                if !z.is_nonnegative() {
                    return Ok(false);
                }
                y = z;
                continue 'reduce;
            }
        }
        // a highest-weight element other than the zero vector
        return Ok(false);
    }
    Ok(true)
}

/// How a set meets an `i`-string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StringStatus {
    Full,
    HighestOnly,
    Empty,
    /// Any other intersection.
    Other,
}

/// Classifies `set ∩ (i-string through x)`.
pub fn i_string_status(
    ctx: &CrystalContext,
    set: &BTreeSet<ZVector>,
    i: usize,
    x: &ZVector,
) -> Result<StringStatus> {
    ctx.lambda()?;
    let mut head = x.clone();
    while let Some(y) = ctx.e_tilde(i, &head)? {
        head = y;
    }
    let mut string = vec![head.clone()];
    let mut y = head;
    while let Some(z) = ctx.f_tilde(i, &y)? {
        string.push(z.clone());
        y = z;
    }
    let inside: Vec<bool> = string.iter().map(|b| set.contains(b)).collect();
    let count = inside.iter().filter(|&&b| b).count();
    Ok(if count == inside.len() {
        StringStatus::Full
    } else if count == 0 {
        StringStatus::Empty
    } else if count == 1 && inside[0] {
        StringStatus::HighestOnly
    } else {
        StringStatus::Other
    })
}
