use std::collections::{BTreeSet, HashSet, VecDeque};

use super::{CrystalContext, ZVector};
use crate::error::Result;

/// Limits for breadth-first crystal enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Budget {
    /// Stop once this many points have been found.
    pub max_elements: Option<usize>,
    /// Skip points with `sum_k x_k` above this.
    pub max_depth: Option<i64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn elements(max: usize) -> Self {
        Self {
            max_elements: Some(max),
            max_depth: None,
        }
    }
}

/// A canonically ordered point set, flagged incomplete when a budget cut
/// the search short.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub points: BTreeSet<ZVector>,
    pub complete: bool,
}

/// Closure of the zero vector under all `f_i`, i.e. the embedded image of
/// `B(lambda)`.
pub fn enumerate_image(ctx: &CrystalContext, budget: Budget) -> Result<Enumeration> {
    ctx.require_dominant()?;
    let n = ctx.rank();
    let mut seen: HashSet<ZVector> = HashSet::from([ZVector::zero()]);
    let mut queue = VecDeque::from([ZVector::zero()]);
    let mut complete = true;
    'search: while let Some(x) = queue.pop_front() {
        for i in 1..=n {
            let Some(y) = ctx.f_tilde(i, &x)? else {
                continue;
            };
            if seen.contains(&y) {
                continue;
            }
            if budget.max_depth.is_some_and(|d| y.depth() > d) {
                complete = false;
                continue;
            }
            if budget.max_elements.is_some_and(|m| seen.len() >= m) {
                complete = false;
                break 'search;
            }
            seen.insert(y.clone());
            queue.push_back(y);
        }
    }
    Ok(Enumeration {
        points: seen.into_iter().collect(),
        complete,
    })
}
