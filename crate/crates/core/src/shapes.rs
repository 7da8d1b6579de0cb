//! Weak compositions, partitions, rearrangement sets, and the reverse
//! dominance order.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// A finite sequence of non-negative integers. Trailing zeros are significant
/// for the width but not for identity: `(0,1)` and `(0,1,0)` are equal.
#[derive(Debug, Clone, Default)]
pub struct WeakComposition {
    parts: Vec<usize>,
}

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition { parts }
    }

    /// The all-zero composition of the given width.
    pub fn zeros(width: usize) -> Self {
        WeakComposition { parts: vec![0; width] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts, trailing zeros included.
    pub fn width(&self) -> usize {
        self.parts.len()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part at 1-based position `i`; zero beyond the stored width.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are indexed from 1");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts without trailing zeros.
    pub fn trimmed(&self) -> &[usize] {
        let end = self
            .parts
            .iter()
            .rposition(|&p| p > 0)
            .map_or(0, |i| i + 1);
        &self.parts[..end]
    }

    /// The same composition extended by zeros to at least `width` parts.
    pub fn padded(&self, width: usize) -> Self {
        let mut parts = self.parts.clone();
        if parts.len() < width {
            parts.resize(width, 0);
        }
        WeakComposition { parts }
    }

    /// Tail sums `T_k = part(k) + part(k+1) + ...` for `k = 1..=width`.
    fn tail_sums(&self, width: usize) -> Vec<usize> {
        let mut tails = Vec::with_capacity(width);
        let mut acc = 0;
        for k in (1..=width).rev() {
            acc += self.part(k);
            tails.push(acc);
        }
        tails.reverse();
        tails
    }
}

impl PartialEq for WeakComposition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for WeakComposition {}

impl Hash for WeakComposition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl Ord for WeakComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        let width = self.width().max(other.width());
        for i in 1..=width {
            match self.part(i).cmp(&other.part(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for WeakComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<usize>> for WeakComposition {
    fn from(parts: Vec<usize>) -> Self {
        WeakComposition::new(parts)
    }
}

impl Serialize for WeakComposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeakComposition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(WeakComposition::new(Vec::deserialize(deserializer)?))
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        let positive = parts.iter().all(|&p| p > 0);
        if decreasing && positive {
            Ok(Partition { parts })
        } else {
            Err(Error::MalformedPartition)
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part at 1-based position `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are indexed from 1");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The conjugate partition: column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Sorts the parts of `gamma` into weakly decreasing order and drops zeros.
pub fn sort_to_partition(gamma: &WeakComposition) -> Partition {
    let mut parts: Vec<usize> = gamma.parts().iter().copied().filter(|&p| p > 0).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition { parts }
}

/// All compositions of width `width` whose nonzero parts, sorted, equal
/// `lambda`, in ascending lexicographic order.
pub fn rearrangements(lambda: &Partition, width: usize) -> Result<Vec<WeakComposition>, Error> {
    if width < lambda.len() {
        return Err(Error::WidthTooSmall {
            width,
            parts: lambda.len(),
        });
    }
    let mut slots: Vec<usize> = vec![0; width - lambda.len()];
    slots.extend_from_slice(lambda.parts());
    slots.sort_unstable();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(width);
    distinct_permutations(&mut slots, &mut current, &mut out);
    Ok(out)
}

// Multiset permutations in lexicographic order: at each level pick each
// distinct remaining value once, smallest first.
fn distinct_permutations(
    remaining: &mut Vec<usize>,
    current: &mut Vec<usize>,
    out: &mut Vec<WeakComposition>,
) {
    if remaining.is_empty() {
        out.push(WeakComposition::new(current.clone()));
        return;
    }
    let mut last: Option<usize> = None;
    for i in 0..remaining.len() {
        let v = remaining[i];
        if last == Some(v) {
            continue;
        }
        last = Some(v);
        remaining.remove(i);
        current.push(v);
        distinct_permutations(remaining, current, out);
        current.pop();
        remaining.insert(i, v);
    }
}

/// Reverse dominance: `mu <= gamma` iff every tail sum of `mu` is at most the
/// corresponding tail sum of `gamma`. Widths are padded to match; the sums
/// must agree.
pub fn reverse_dominance_leq(mu: &WeakComposition, gamma: &WeakComposition) -> Result<bool, Error> {
    if mu.total() != gamma.total() {
        return Err(Error::SumMismatch {
            left: mu.total(),
            right: gamma.total(),
        });
    }
    let width = mu.width().max(gamma.width());
    let mu_tails = mu.tail_sums(width);
    let gamma_tails = gamma.tail_sums(width);
    Ok(mu_tails
        .iter()
        .zip(&gamma_tails)
        .all(|(m, g)| m <= g))
}

/// All weak compositions of `total` into exactly `width` parts, in ascending
/// lexicographic order.
pub fn compositions(total: usize, width: usize) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(width);
    fn go(total: usize, width: usize, current: &mut Vec<usize>, out: &mut Vec<WeakComposition>) {
        if width == 0 {
            if total == 0 {
                out.push(WeakComposition::new(current.clone()));
            }
            return;
        }
        if width == 1 {
            current.push(total);
            out.push(WeakComposition::new(current.clone()));
            current.pop();
            return;
        }
        for first in 0..=total {
            current.push(first);
            go(total - first, width - 1, current, out);
            current.pop();
        }
    }
    go(total, width, &mut current, &mut out);
    out
}

/// All partitions of `total`, in descending lexicographic order.
pub fn partitions(total: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for next in (1..=rest.min(max)).rev() {
            current.push(next);
            go(rest - next, next, current, out);
            current.pop();
        }
    }
    go(total, total.max(1), &mut current, &mut out);
    out
}
