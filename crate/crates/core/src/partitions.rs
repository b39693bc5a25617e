//! Young diagrams and the diagram surgery used by the projection gadgets:
//! conjugation, separation, horizontal/vertical strip removal, rim hook
//! (skew-hook) removal and the row/column reduction chain.
//!
//! Row indices in the public API are 1-based, matching the usual
//! `lambda_1 >= lambda_2 >= ...` notation.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition stored densely, weakly decreasing, with no zero parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts`: every part positive, weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::malformed_partition(&join(&parts), "parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::malformed_partition(
                &join(&parts),
                "parts must be weakly decreasing",
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// Sorts and drops zeros; used for cycle types and merged multisets.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn width(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda_i` for a 1-based index, zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_row(&self) -> bool {
        self.parts.len() == 1
    }

    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Multiplicities `m_i` of each part size, indexed by part size.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.width() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.width())
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Largest overhang `max_i (lambda_i - lambda_{i+1})` with every row
    /// index attaining it.
    pub fn separation(&self) -> Result<Separation> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let gaps: Vec<usize> = (1..=self.length()).map(|i| self.gap(i)).collect();
        let k = *gaps.iter().max().expect("nonempty");
        let indices = gaps
            .iter()
            .enumerate()
            .filter(|(_, &g)| g == k)
            .map(|(i, _)| i + 1)
            .collect();
        Ok(Separation { k, indices })
    }

    /// `lambda_i - lambda_{i+1}` for a 1-based row index.
    pub fn gap(&self, i: usize) -> usize {
        self.part(i) - self.part(i + 1)
    }

    /// Every `mu` such that `self / mu` is a horizontal strip of size `q`,
    /// i.e. `lambda_{i+1} <= mu_i <= lambda_i` with `|mu| = |lambda| - q`.
    pub fn horizontal_strip_removals(&self, q: usize) -> Result<Vec<Partition>> {
        self.check_removal_size(q)?;
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.length());
        self.interleave(0, q, &mut current, &mut out);
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    fn interleave(&self, row: usize, remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == self.length() {
            if remaining == 0 {
                out.push(Partition::from_multiset(current.clone()));
            }
            return;
        }
        let upper = self.parts[row];
        let lower = self.parts.get(row + 1).copied().unwrap_or(0);
        // boxes still removable below this row
        let capacity_below: usize = (row + 1..self.length()).map(|r| self.gap(r + 1)).sum();
        for keep in (lower..=upper).rev() {
            let taken = upper - keep;
            if taken > remaining {
                break;
            }
            if remaining - taken > capacity_below {
                continue;
            }
            current.push(keep);
            self.interleave(row + 1, remaining - taken, current, out);
            current.pop();
        }
    }

    /// Every `nu` such that `self / nu` is a vertical strip of size `q`.
    pub fn vertical_strip_removals(&self, q: usize) -> Result<Vec<Partition>> {
        self.check_removal_size(q)?;
        let mut out: Vec<Partition> = self
            .conjugate()
            .horizontal_strip_removals(q)?
            .iter()
            .map(Partition::conjugate)
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    /// Every removal of a connected border strip (rim hook) of `q` boxes.
    ///
    /// Works on beta-numbers `lambda_i + l - i`: removing a rim hook of size
    /// `q` moves one bead from `b` to an empty position `b - q`, and the
    /// beads jumped over count the rows of the hook minus one.
    pub fn skew_hook_removals(&self, q: usize) -> Result<Vec<SkewHookRemoval>> {
        if q == 0 {
            return Err(Error::InvalidArgument("skew-hook size must be positive".into()));
        }
        self.check_removal_size(q)?;
        let l = self.length();
        let beta: Vec<usize> = self.parts.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
        let mut out = Vec::new();
        for (idx, &b) in beta.iter().enumerate() {
            if b < q || beta.contains(&(b - q)) {
                continue;
            }
            let target = b - q;
            let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut moved = beta.clone();
            moved[idx] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let parts = moved.iter().enumerate().map(|(i, &x)| x - (l - 1 - i)).collect();
            out.push(SkewHookRemoval {
                remainder: Partition::from_multiset(parts),
                row_span: jumped + 1,
                sign_exponent: jumped,
            });
        }
        out.sort_unstable_by(|a, b| b.remainder.cmp(&a.remainder));
        Ok(out)
    }

    /// Gadget blocks peeling `self` down to the row `(lambda_i - lambda_{i+1})`:
    /// one `H` per leading row, then one `E` per leading column of
    /// `(lambda_i, ..., lambda_l)`.
    pub fn reduction_chain(&self, i: usize) -> Result<Vec<Block>> {
        if i == 0 || i > self.length() {
            return Err(Error::IndexOutOfRange {
                index: i,
                length: self.length(),
            });
        }
        let mut blocks: Vec<Block> = self.parts[..i - 1].iter().map(|&p| Block::h(p)).collect();
        let tail = Partition {
            parts: self.parts[i - 1..].to_vec(),
        };
        let columns = tail.conjugate();
        blocks.extend(columns.parts.iter().take(self.part(i + 1)).map(|&c| Block::e(c)));
        Ok(blocks)
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn syt_count(&self) -> BigUint {
        let conj = self.conjugate();
        let mut hooks = BigUint::one();
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = conj.parts[c] - r - 1;
                hooks *= BigUint::from(arm + leg + 1);
            }
        }
        factorial(self.size()) / hooks
    }

    fn check_removal_size(&self, q: usize) -> Result<()> {
        if q > self.size() {
            Err(Error::SizeOutOfRange { q, size: self.size() })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `4,2,1`, `[4,2,1]`, `(4,2,1)`; blank or `[]` is the empty
    /// partition. Input is never re-sorted.
    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .or_else(|| trimmed.strip_prefix('(').and_then(|s| s.strip_suffix(')')))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in inner.split(',') {
            let token = token.trim();
            if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::malformed_partition(
                    text,
                    format!("{token:?} is not a positive integer"),
                ));
            }
            let value: usize = token
                .parse()
                .map_err(|_| Error::malformed_partition(text, format!("{token:?} is out of range")))?;
            parts.push(value);
        }
        Partition::new(parts).map_err(|e| match e {
            Error::MalformedPartition { reason, .. } => Error::malformed_partition(text, reason),
            other => other,
        })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Output of [`Partition::separation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub k: usize,
    /// 1-based, ascending.
    pub indices: Vec<usize>,
}

impl Separation {
    pub fn smallest_index(&self) -> usize {
        self.indices[0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewHookRemoval {
    pub remainder: Partition,
    pub row_span: usize,
    /// `row_span - 1`; the removal contributes `(-1)^sign_exponent`.
    pub sign_exponent: usize,
}

impl SkewHookRemoval {
    pub fn sign(&self) -> i32 {
        if self.sign_exponent.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    /// Row remover `H_q`.
    H,
    /// Column remover `E_q`.
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub kind: BlockKind,
    pub size: usize,
}

impl Block {
    pub fn h(size: usize) -> Self {
        Block {
            kind: BlockKind::H,
            size,
        }
    }

    pub fn e(size: usize) -> Self {
        Block {
            kind: BlockKind::E,
            size,
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            BlockKind::H => 'H',
            BlockKind::E => 'E',
        };
        write!(f, "{tag}{}", self.size)
    }
}

/// All partitions of `n` in decreasing lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// Partitions of every size `1..=max_size`, smallest sizes first.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (1..=max_size).flat_map(partitions_of).collect()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}
