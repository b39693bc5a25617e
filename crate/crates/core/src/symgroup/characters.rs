use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partitions::{factorial, partitions_of, Partition};

type MemoKey = (Partition, Partition);

static MEMO: LazyLock<RwLock<HashMap<MemoKey, BigInt>>> = LazyLock::new(Default::default);

/// Number of permutations of cycle type `gamma`:
/// `n! / prod_i (i^{m_i} m_i!)`.
pub fn class_size(gamma: &Partition) -> BigUint {
    let mut denom = BigUint::one();
    for (part, &m) in gamma.multiplicities().iter().enumerate().skip(1) {
        denom *= BigUint::from(part).pow(m as u32) * factorial(m);
    }
    factorial(gamma.size()) / denom
}

/// Sign of any permutation of cycle type `gamma`.
pub fn class_sign(gamma: &Partition) -> i32 {
    if (gamma.size() - gamma.length()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Irreducible character value `chi_lambda` at cycle type `gamma`, by the
/// Murnaghan-Nakayama rule with a process-wide memo.
pub fn character(lambda: &Partition, gamma: &Partition) -> Result<BigInt> {
    if lambda.size() != gamma.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lambda}| = {} but |{gamma}| = {}",
            lambda.size(),
            gamma.size()
        )));
    }
    Ok(murnaghan_nakayama(lambda, gamma))
}

fn murnaghan_nakayama(lambda: &Partition, gamma: &Partition) -> BigInt {
    let Some((&first, rest)) = gamma.parts().split_first() else {
        return BigInt::one();
    };
    if lambda.is_row() {
        return BigInt::one();
    }
    let key = (lambda.clone(), gamma.clone());
    if let Some(v) = MEMO.read().expect("character memo poisoned").get(&key) {
        return v.clone();
    }
    let rest = Partition::from_multiset(rest.to_vec());
    let mut value = BigInt::zero();
    for hook in lambda.skew_hook_removals(first).expect("sizes agree") {
        let sub = murnaghan_nakayama(&hook.remainder, &rest);
        if hook.sign() > 0 {
            value += sub;
        } else {
            value -= sub;
        }
    }
    MEMO.write()
        .expect("character memo poisoned")
        .insert(key, value.clone());
    value
}

/// Character table of `S_n`: rows are irreducibles in decreasing
/// lexicographic order (`(n)` first); columns are cycle types starting with
/// the identity class `(1^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub irreducibles: Vec<Partition>,
    pub classes: Vec<Partition>,
    pub class_sizes: Vec<BigUint>,
    /// `values[row][col] = chi_{irreducibles[row]}(classes[col])`.
    pub values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn value(&self, lambda: &Partition, gamma: &Partition) -> Option<&BigInt> {
        let r = self.irreducibles.iter().position(|p| p == lambda)?;
        let c = self.classes.iter().position(|p| p == gamma)?;
        Some(&self.values[r][c])
    }

    /// `sum_gamma d_gamma chi_a(gamma) chi_b(gamma)` for rows `a`, `b`.
    pub fn inner_product(&self, a: usize, b: usize) -> BigInt {
        self.class_sizes
            .iter()
            .zip(self.values[a].iter().zip(&self.values[b]))
            .map(|(d, (x, y))| BigInt::from(d.clone()) * x * y)
            .sum()
    }
}

pub fn character_table(n: usize, limits: &Limits) -> Result<CharacterTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("character table degree must be positive".into()));
    }
    Limits::check("character table", n, limits.table_n)?;
    let irreducibles = partitions_of(n);
    let mut classes = irreducibles.clone();
    classes.reverse();
    let class_sizes = classes.iter().map(class_size).collect();
    let values = irreducibles
        .iter()
        .map(|l| classes.iter().map(|g| murnaghan_nakayama(l, g)).collect())
        .collect();
    Ok(CharacterTable {
        n,
        irreducibles,
        classes,
        class_sizes,
        values,
    })
}

impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row_label_width = self
            .irreducibles
            .iter()
            .map(|p| p.to_string().len())
            .max()
            .unwrap_or(0)
            .max(5);
        let mut widths: Vec<usize> = self.classes.iter().map(|c| c.to_string().len()).collect();
        for (c, w) in widths.iter_mut().enumerate() {
            *w = (*w).max(self.class_sizes[c].to_string().len());
            for row in &self.values {
                *w = (*w).max(row[c].to_string().len());
            }
        }
        let line = |label: &str, cells: Vec<String>| {
            let body: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            format!("{label:<row_label_width$} | {}", body.join(" "))
        };
        writeln!(
            f,
            "{}",
            line("class", self.classes.iter().map(|c| c.to_string()).collect())
        )?;
        writeln!(
            f,
            "{}",
            line("size", self.class_sizes.iter().map(|d| d.to_string()).collect())
        )?;
        writeln!(
            f,
            "{}",
            "-".repeat(row_label_width + 3 + widths.iter().sum::<usize>() + widths.len().saturating_sub(1))
        )?;
        for (l, row) in self.irreducibles.iter().zip(&self.values) {
            writeln!(
                f,
                "{}",
                line(&l.to_string(), row.iter().map(|v| v.to_string()).collect())
            )?;
        }
        Ok(())
    }
}
