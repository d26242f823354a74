use std::cmp::Ordering;
use std::fmt;

/// A finitely supported integer sequence `(x_1, x_2, ...)`.
///
/// Stored densely up to the last nonzero entry, so equal sequences have equal
/// representations. Ordering is lexicographic on `(x_1, x_2, ...)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZVector {
    entries: Vec<i64>,
}

impl ZVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// From `(x_1, ..., x_m)`; trailing zeros are dropped.
    pub fn from_dense(mut entries: Vec<i64>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Self { entries }
    }

    /// From `(position, value)` pairs with 1-based positions.
    pub fn from_sparse(pairs: &[(usize, i64)]) -> Self {
        let len = pairs.iter().map(|p| p.0).max().unwrap_or(0);
        let mut entries = vec![0; len];
        for &(k, v) in pairs {
            assert!(k >= 1, "positions start at 1");
            entries[k - 1] += v;
        }
        Self::from_dense(entries)
    }

    /// `x_k`, 1-based; zero outside the support.
    #[inline]
    pub fn get(&self, k: usize) -> i64 {
        if k == 0 {
            return 0;
        }
        self.entries.get(k - 1).copied().unwrap_or(0)
    }

    /// Largest `k` with `x_k != 0`, or 0 for the zero vector.
    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `sum_k x_k`.
    pub fn depth(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&x| x >= 0)
    }

    /// Copy with `delta` added at position `k`.
    pub fn add_at(&self, k: usize, delta: i64) -> Self {
        let mut entries = self.entries.clone();
        if entries.len() < k {
            entries.resize(k, 0);
        }
        entries[k - 1] += delta;
        Self::from_dense(entries)
    }

    /// `(x_1, ..., x_width)`, padding with zeros.
    pub fn padded(&self, width: usize) -> Vec<i64> {
        let mut out = self.entries.clone();
        out.resize(width.max(out.len()), 0);
        out
    }

    /// Whether `x_k = 0` for every `k > len`.
    pub fn truncated_at(&self, len: usize) -> bool {
        self.entries.len() <= len
    }
}

impl Ord for ZVector {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.entries.len().max(other.entries.len());
        for k in 1..=n {
            match self.get(k).cmp(&other.get(k)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for ZVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ZVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
