//! Slow, independent reference computations used by the integration tests.
//! Nothing here calls the library's combinatorial algorithms.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use immanant_lab::linalg::{Matrix, Scalar};
use immanant_lab::Partition;
use num_bigint::BigUint;

pub fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

/// Integer polynomial in a fixed number of variables.
pub type IntPoly = BTreeMap<Vec<u32>, i64>;

pub fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = IntPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// All permutations of `0..n` with their signs, by Heap-free recursion.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if prefix[i] > prefix[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `a_{mu}(x_1..x_n) = det(x_i^{mu_j})`.
pub fn alternant(mu: &[u32]) -> IntPoly {
    let n = mu.len();
    let mut out = IntPoly::new();
    for (sigma, sign) in signed_permutations(n) {
        let mut e = vec![0; n];
        for (j, &i) in sigma.iter().enumerate() {
            e[i] = mu[j];
        }
        *out.entry(e).or_insert(0) += sign;
    }
    out
}

fn padded_plus_staircase(lambda: &Partition, n: usize) -> Vec<u32> {
    (0..n).map(|i| (lambda.part(i + 1) + n - 1 - i) as u32).collect()
}

pub fn power_sum(k: usize, n: usize) -> IntPoly {
    (0..n)
        .map(|a| {
            let mut e = vec![0; n];
            e[a] = k as u32;
            (e, 1)
        })
        .collect()
}

/// Frobenius formula: `chi_lambda(gamma) = [x^(lambda + delta)] a_delta p_gamma`.
pub fn frobenius_character(lambda: &Partition, gamma: &Partition) -> i64 {
    assert_eq!(lambda.size(), gamma.size());
    let n = lambda.length().max(1);
    let mut acc = alternant(&padded_plus_staircase(&Partition::empty(), n));
    for &g in gamma.parts() {
        acc = poly_mul(&acc, &power_sum(g, n));
    }
    acc.get(&padded_plus_staircase(lambda, n)).copied().unwrap_or(0)
}

/// Semistandard tableaux of shape `beta` with entries in `1..=n`, as
/// content vectors.
pub fn schur_by_tableaux(beta: &Partition, n: usize) -> IntPoly {
    let cells: Vec<(usize, usize)> = (0..beta.length())
        .flat_map(|r| (0..beta.part(r + 1)).map(move |c| (r, c)))
        .collect();
    let mut filling = vec![vec![0u32; beta.width()]; beta.length()];
    let mut out = IntPoly::new();
    fn go(idx: usize, cells: &[(usize, usize)], filling: &mut Vec<Vec<u32>>, n: u32, out: &mut IntPoly) {
        if idx == cells.len() {
            let mut e = vec![0u32; n as usize];
            for &(r, c) in cells {
                e[filling[r][c] as usize - 1] += 1;
            }
            *out.entry(e).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[idx];
        let low_row = if c > 0 { filling[r][c - 1] } else { 1 };
        let low_col = if r > 0 { filling[r - 1][c] + 1 } else { 1 };
        for v in low_row.max(low_col)..=n {
            filling[r][c] = v;
            go(idx + 1, cells, filling, n, out);
        }
        filling[r][c] = 0;
    }
    go(0, &cells, &mut filling, n as u32, &mut out);
    out
}

/// `c^lambda_{alpha,beta} = [x^(lambda + delta)] a_(alpha + delta) s_beta`.
pub fn lr_oracle(lambda: &Partition, alpha: &Partition, beta: &Partition) -> i64 {
    if alpha.size() + beta.size() != lambda.size() {
        return 0;
    }
    let n = lambda.length().max(alpha.length()).max(beta.length()).max(1);
    let prod = poly_mul(
        &alternant(&padded_plus_staircase(alpha, n)),
        &schur_by_tableaux(beta, n),
    );
    prod.get(&padded_plus_staircase(lambda, n)).copied().unwrap_or(0)
}

pub fn hook_length_count(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut denom = BigUint::from(1u32);
    for r in 1..=lambda.length() {
        for c in 1..=lambda.part(r) {
            let hook = (lambda.part(r) - c) + (conj.part(c) - r) + 1;
            denom *= BigUint::from(hook);
        }
    }
    let mut num = BigUint::from(1u32);
    for k in 2..=lambda.size() {
        num *= BigUint::from(k);
    }
    num / denom
}

pub fn leibniz_det(m: &Matrix<Scalar>) -> Scalar {
    let mut total = Scalar::zero();
    for (sigma, sign) in signed_permutations(m.dim()) {
        let mut term = Scalar::integer(sign);
        for (i, &j) in sigma.iter().enumerate() {
            term = &term * m.get(i, j);
        }
        total += &term;
    }
    total
}

pub fn leibniz_per(m: &Matrix<Scalar>) -> Scalar {
    let mut total = Scalar::zero();
    for (sigma, _) in signed_permutations(m.dim()) {
        let mut term = Scalar::one();
        for (i, &j) in sigma.iter().enumerate() {
            term = &term * m.get(i, j);
        }
        total += &term;
    }
    total
}

fn boxes(p: &Partition) -> BTreeSet<(usize, usize)> {
    (1..=p.length())
        .flat_map(|r| (1..=p.part(r)).map(move |c| (r, c)))
        .collect()
}

/// Partitions of `|lambda| - q` whose diagram sits inside `lambda`, with the
/// skew boxes.
fn sub_diagrams(lambda: &Partition, q: usize) -> Vec<(Partition, Vec<(usize, usize)>)> {
    let outer = boxes(lambda);
    let mut out = Vec::new();
    for mu in immanant_lab::partitions::partitions_of(lambda.size() - q) {
        let inner = boxes(&mu);
        if inner.is_subset(&outer) {
            out.push((mu, outer.difference(&inner).copied().collect()));
        }
    }
    out
}

pub fn strips_oracle(lambda: &Partition, q: usize, horizontal: bool) -> BTreeSet<Partition> {
    sub_diagrams(lambda, q)
        .into_iter()
        .filter(|(_, skew)| {
            let keys: Vec<usize> = skew.iter().map(|&(r, c)| if horizontal { c } else { r }).collect();
            keys.iter().collect::<BTreeSet<_>>().len() == keys.len()
        })
        .map(|(mu, _)| mu)
        .collect()
}

/// Connected skew shapes without a 2x2 square, with their row counts.
pub fn rim_hooks_oracle(lambda: &Partition, q: usize) -> BTreeSet<(Partition, usize)> {
    sub_diagrams(lambda, q)
        .into_iter()
        .filter(|(_, skew)| {
            let set: BTreeSet<(usize, usize)> = skew.iter().copied().collect();
            let no_square = set.iter().all(|&(r, c)| {
                !(set.contains(&(r + 1, c)) && set.contains(&(r, c + 1)) && set.contains(&(r + 1, c + 1)))
            });
            let mut seen = BTreeSet::new();
            let mut queue: VecDeque<(usize, usize)> = set.iter().next().copied().into_iter().collect();
            while let Some((r, c)) = queue.pop_front() {
                if !seen.insert((r, c)) {
                    continue;
                }
                for nb in [(r + 1, c), (r.wrapping_sub(1), c), (r, c + 1), (r, c.wrapping_sub(1))] {
                    if set.contains(&nb) && !seen.contains(&nb) {
                        queue.push_back(nb);
                    }
                }
            }
            no_square && seen.len() == set.len()
        })
        .map(|(mu, skew)| {
            let rows = skew.iter().map(|&(r, _)| r).collect::<BTreeSet<_>>().len();
            (mu, rows)
        })
        .collect()
}
