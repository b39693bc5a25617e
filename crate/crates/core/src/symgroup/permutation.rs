use std::fmt;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partitions::Partition;

/// A bijection of `{1..n}` stored in one-line notation (0-based internally).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based one-line notation, e.g. `[2, 3, 1]`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &x in one_line {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{one_line:?} is not a permutation of 1..={n}"
                )));
            }
            seen[x - 1] = true;
            images.push(x - 1);
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based images.
    pub fn images0(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    /// Disjoint cycles (0-based), each starting from its smallest element,
    /// ordered by smallest element. Fixed points are 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        cycle_type_of(&self.images)
    }

    pub fn sign(&self) -> i32 {
        let cycles = self.cycles().len();
        if (self.images.len() - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Cycle type of a 0-based image vector without allocating cycle lists.
pub(crate) fn cycle_type_of(images: &[usize]) -> Partition {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = images[x];
        }
        lengths.push(len);
    }
    Partition::from_multiset(lengths)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// All `n!` permutations in lexicographic order of one-line notation.
pub fn permutations(n: usize, limits: &Limits) -> Result<Permutations> {
    if n == 0 {
        return Err(Error::InvalidArgument("permutation degree must be positive".into()));
    }
    Limits::check("permutation stream", n, limits.stream_n)?;
    Ok(Permutations {
        next: Some((0..n).collect()),
    })
}

#[derive(Clone, Debug)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

fn next_lexicographic(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).expect("successor exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}
