//! Executable checks of the identities behind the projection: the
//! block-diagonal immanant formula, strip and rim-hook projections,
//! Littlewood's matrix `Z` and its cycle-format polynomials, orbit counts,
//! the power-sum/Schur specialization, and the Pieri rules.
//!
//! Each check returns an [`IdentityReport`] whose `pass` is exact equality
//! of the two sides. [`run_suite`] drives the checks over every partition
//! up to a size bound with seeded random matrices.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gadgets::{matrix_e, matrix_h, matrix_h_alt, matrix_p, verify_projection};
use crate::limits::Limits;
use crate::linalg::{block_diag, determinant, immanant, permanent, Matrix, Monomial, Scalar, SparsePoly};
use crate::partitions::{factorial, partitions_of, partitions_up_to, Partition};
use crate::random::{case_rng, random_matrix};
use crate::symgroup::{character, class_size, lr_coefficient, permutations, pieri_coefficient, Permutation, StripKind};

/// Largest `q` accepted by the brute-force Littlewood checks.
pub const LITTLEWOOD_MAX_Q: usize = 8;
/// Largest `|gamma|` accepted by [`orbit_count`].
pub const ORBIT_MAX_Q: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub parameters: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl IdentityReport {
    fn compare<T: PartialEq + fmt::Display>(name: &str, parameters: String, lhs: &T, rhs: &T) -> Self {
        IdentityReport {
            name: name.to_string(),
            parameters,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass: lhs == rhs,
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.name, self.parameters)?;
        if !self.pass {
            write!(f, " lhs={} rhs={}", self.lhs, self.rhs)?;
        }
        Ok(())
    }
}

/// `im_lambda(diag(A, B)) = sum c^lambda_{alpha,beta} im_alpha(A) im_beta(B)`.
pub fn check_block_formula(
    lambda: &Partition,
    a: &Matrix<Scalar>,
    b: &Matrix<Scalar>,
    limits: &Limits,
) -> Result<IdentityReport> {
    if a.dim() + b.dim() != lambda.size() {
        return Err(Error::SizeMismatch(format!(
            "blocks of size {} + {} do not match |{lambda}| = {}",
            a.dim(),
            b.dim(),
            lambda.size()
        )));
    }
    let lhs = immanant(lambda, &block_diag(&[a.clone(), b.clone()])?, limits)?;
    let mut rhs = Scalar::zero();
    let a_values = immanants_of_all_shapes(a, limits)?;
    let b_values = immanants_of_all_shapes(b, limits)?;
    for (alpha, im_a) in &a_values {
        for (beta, im_b) in &b_values {
            let c = lr_coefficient(lambda, alpha, beta)?;
            if c != BigUint::ZERO {
                rhs += &(&(&Scalar::from_biguint(c) * im_a) * im_b);
            }
        }
    }
    let parameters = format!("lambda={lambda} p={} q={}", a.dim(), b.dim());
    Ok(IdentityReport::compare("block-formula", parameters, &lhs, &rhs))
}

fn immanants_of_all_shapes(m: &Matrix<Scalar>, limits: &Limits) -> Result<Vec<(Partition, Scalar)>> {
    partitions_of(m.dim())
        .into_iter()
        .map(|p| {
            let v = immanant(&p, m, limits)?;
            Ok((p, v))
        })
        .collect()
}

/// Which removal rule a strip projection exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProjectionKind {
    /// Horizontal strips, gadget `H_q`.
    Row,
    /// Vertical strips, gadget `E_q`.
    Column,
    /// Signed rim hooks, gadget `P_q`.
    Skew,
}

impl ProjectionKind {
    pub fn name(self) -> &'static str {
        match self {
            ProjectionKind::Row => "strip-row",
            ProjectionKind::Column => "strip-column",
            ProjectionKind::Skew => "strip-skew",
        }
    }

    pub fn gadget(self, q: usize) -> Matrix<Scalar> {
        match self {
            ProjectionKind::Row => matrix_h(q),
            ProjectionKind::Column => matrix_e(q),
            ProjectionKind::Skew => matrix_p(q),
        }
    }
}

/// `sum_mu (+-) im_mu(A) = im_lambda(diag(A, gadget_q))` over horizontal
/// strips, vertical strips, or rim hooks (signed by `(-1)^(rows - 1)`).
pub fn check_strip_projection(
    lambda: &Partition,
    q: usize,
    a: &Matrix<Scalar>,
    kind: ProjectionKind,
    limits: &Limits,
) -> Result<IdentityReport> {
    if q == 0 {
        return Err(Error::InvalidArgument("strip size must be positive".into()));
    }
    if q > lambda.size() || a.dim() != lambda.size() - q {
        return Err(Error::SizeMismatch(format!(
            "matrix of size {} plus strip of size {q} does not match |{lambda}| = {}",
            a.dim(),
            lambda.size()
        )));
    }
    let signed: Vec<(Partition, bool)> = match kind {
        ProjectionKind::Row => lambda
            .horizontal_strip_removals(q)?
            .into_iter()
            .map(|p| (p, false))
            .collect(),
        ProjectionKind::Column => lambda
            .vertical_strip_removals(q)?
            .into_iter()
            .map(|p| (p, false))
            .collect(),
        ProjectionKind::Skew => lambda
            .skew_hook_removals(q)?
            .into_iter()
            .map(|h| {
                let negative = h.sign() < 0;
                (h.remainder, negative)
            })
            .collect(),
    };
    let mut lhs = Scalar::zero();
    for (mu, negative) in &signed {
        let v = immanant(mu, a, limits)?;
        lhs += &if *negative { -v } else { v };
    }
    let rhs = immanant(lambda, &block_diag(&[a.clone(), kind.gadget(q)])?, limits)?;
    let parameters = format!("lambda={lambda} q={q} removals={}", signed.len());
    Ok(IdentityReport::compare(kind.name(), parameters, &lhs, &rhs))
}

/// Littlewood's matrix: `Z[j][m] = z_{j-m+1}` for `m <= j`,
/// `Z[j][j+1] = j`, zero above the superdiagonal (1-based indices).
pub fn littlewood_z(q: usize) -> Matrix<SparsePoly> {
    Matrix::from_fn(q, |i, j| {
        if j <= i {
            SparsePoly::var(i - j)
        } else if j == i + 1 {
            SparsePoly::constant(Scalar::integer(i as i64 + 1))
        } else {
            SparsePoly::zero()
        }
    })
}

/// Entrywise substitution `z_i := values[i-1]`.
pub fn specialize(m: &Matrix<SparsePoly>, values: &[Scalar]) -> Result<Matrix<Scalar>> {
    let mut missing = false;
    let out = m.map(|p| {
        p.evaluate(values).unwrap_or_else(|| {
            missing = true;
            Scalar::zero()
        })
    });
    if missing {
        return Err(Error::InvalidArgument(format!(
            "{} values do not cover every variable",
            values.len()
        )));
    }
    Ok(out)
}

fn monomial_poly(gamma: &Partition, coefficient: Scalar) -> SparsePoly {
    SparsePoly::term(coefficient, Monomial::power_product(gamma.parts()))
}

/// `CF_gamma(Z) = sum_{pi of type gamma} f_pi(Z)`, by brute force.
pub fn cycle_format_polynomial(q: usize, gamma: &Partition, limits: &Limits) -> Result<SparsePoly> {
    if gamma.size() != q {
        return Err(Error::SizeMismatch(format!("|{gamma}| = {} but q = {q}", gamma.size())));
    }
    Limits::check("cycle-format polynomial", q, LITTLEWOOD_MAX_Q)?;
    if q == 0 {
        return Ok(SparsePoly::one());
    }
    let z = littlewood_z(q);
    let mut total = SparsePoly::zero();
    for pi in permutations(q, limits)?.filter(|pi| pi.cycle_type() == *gamma) {
        total += &z.diagonal_product(&pi)?;
    }
    Ok(total)
}

/// `CF_gamma(Z) = d_gamma z^gamma`.
pub fn check_cycle_format(gamma: &Partition, limits: &Limits) -> Result<IdentityReport> {
    let lhs = cycle_format_polynomial(gamma.size(), gamma, limits)?;
    let rhs = monomial_poly(gamma, Scalar::from_biguint(class_size(gamma)));
    Ok(IdentityReport::compare(
        "cycle-format",
        format!("gamma={gamma}"),
        &lhs,
        &rhs,
    ))
}

/// Right side of `im_beta(Z) = sum_gamma d_gamma chi^gamma_beta z^gamma`.
pub fn littlewood_expansion(beta: &Partition) -> Result<SparsePoly> {
    let mut out = SparsePoly::zero();
    for gamma in partitions_of(beta.size()) {
        let coeff = BigInt::from(class_size(&gamma)) * character(beta, &gamma)?;
        out += &monomial_poly(&gamma, Scalar::from_bigint(coeff));
    }
    Ok(out)
}

pub fn check_imz(beta: &Partition, limits: &Limits) -> Result<IdentityReport> {
    Limits::check("Littlewood immanant", beta.size(), ORBIT_MAX_Q)?;
    let lhs = immanant(beta, &littlewood_z(beta.size()), limits)?;
    let rhs = littlewood_expansion(beta)?;
    Ok(IdentityReport::compare("imz", format!("beta={beta}"), &lhs, &rhs))
}

/// Both counts of permutations of type `gamma` whose max-ordered cycle
/// factorization has length sequence `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCount {
    pub enumerated: BigUint,
    /// `q! / phi(j)` with `phi(j) = j_1 (j_1 + j_2) ... (j_1 + ... + j_r)`.
    pub formula: BigUint,
}

/// Cycle lengths of `pi` with cycles ordered by increasing maximum element.
pub fn max_ordered_cycle_lengths(pi: &Permutation) -> Vec<usize> {
    let mut cycles: Vec<(usize, usize)> = pi
        .cycles()
        .iter()
        .map(|c| (*c.iter().max().expect("nonempty cycle"), c.len()))
        .collect();
    cycles.sort_unstable();
    cycles.into_iter().map(|(_, len)| len).collect()
}

pub fn orbit_count(gamma: &Partition, j: &[usize]) -> Result<OrbitCount> {
    let mut sorted = j.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted != gamma.parts() {
        return Err(Error::InvalidComposition {
            gamma: gamma.to_string(),
            j: j.to_vec(),
        });
    }
    let q = gamma.size();
    Limits::check("orbit count", q, ORBIT_MAX_Q)?;
    let enumerated = if q == 0 {
        1
    } else {
        let limits = Limits {
            stream_n: ORBIT_MAX_Q,
            ..Limits::DEFAULT
        };
        permutations(q, &limits)?
            .filter(|pi| pi.cycle_type() == *gamma && max_ordered_cycle_lengths(pi) == j)
            .count()
    };
    let mut phi = BigUint::from(1u32);
    let mut running = 0;
    for &part in j {
        running += part;
        phi *= BigUint::from(running);
    }
    Ok(OrbitCount {
        enumerated: BigUint::from(enumerated),
        formula: factorial(q) / phi,
    })
}

/// Distinct rearrangements of the parts of `gamma`.
pub fn rearrangements(gamma: &Partition) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = gamma.parts().iter().rev().copied().collect();
    let mut out = vec![current.clone()];
    while next_multiset_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

fn next_multiset_permutation(a: &mut [usize]) -> bool {
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

/// Every rearrangement agrees with `q!/phi(j)`, and the formulas sum to
/// `d_gamma`.
pub fn check_orbit_counts(gamma: &Partition) -> Result<IdentityReport> {
    let mut all_match = true;
    let mut sum = BigUint::ZERO;
    let mut mismatches = Vec::new();
    for j in rearrangements(gamma) {
        let c = orbit_count(gamma, &j)?;
        if c.enumerated != c.formula {
            all_match = false;
            mismatches.push(format!("{j:?}: {} vs {}", c.enumerated, c.formula));
        }
        sum += c.formula;
    }
    let d = class_size(gamma);
    let mut report = IdentityReport::compare("orbit-count", format!("gamma={gamma}"), &sum, &d);
    if !all_match {
        report.pass = false;
        report.lhs = format!("{} [{}]", report.lhs, mismatches.join("; "));
    }
    Ok(report)
}

/// `p_i(x) = sum_a x_a^i` for `i = 1..=q`.
pub fn power_sums(sample: &[Scalar], q: usize) -> Vec<Scalar> {
    (1..=q as u32).map(|i| sample.iter().map(|x| x.pow(i)).sum()).collect()
}

/// `im_beta(Z)` with `z_i := p_i(sample)`.
pub fn power_sum_immanant(beta: &Partition, sample: &[Scalar], limits: &Limits) -> Result<Scalar> {
    let q = beta.size();
    let z = specialize(&littlewood_z(q), &power_sums(sample, q))?;
    immanant(beta, &z, limits)
}

/// Schur polynomial `s_beta(x_1..x_m)` by the bialternant
/// `det(x_a^(beta_b + m - b)) / det(x_a^(m - b))`.
pub fn schur_bialternant(beta: &Partition, sample: &[Scalar]) -> Result<Scalar> {
    let m = sample.len();
    if beta.length() > m {
        return Err(Error::InvalidArgument(format!("{beta} has more than {m} rows")));
    }
    check_sample(sample)?;
    let alternant = |shift: &dyn Fn(usize) -> usize| {
        determinant(&Matrix::from_fn(m, |a, b| sample[a].pow((shift(b) + m - b - 1) as u32)))
    };
    let numerator = alternant(&|b| beta.part(b + 1));
    let vandermonde = alternant(&|_| 0);
    if vandermonde.is_zero() {
        return Err(Error::DegenerateSample);
    }
    Ok(&numerator / &vandermonde)
}

fn check_sample(sample: &[Scalar]) -> Result<()> {
    for (i, x) in sample.iter().enumerate() {
        if x.is_zero() || sample[..i].contains(x) {
            return Err(Error::DegenerateSample);
        }
    }
    Ok(())
}

/// `im_beta(Z)|_{z_i = p_i(x)} = q! s_beta(x)` for `m = sample.len()`
/// variables.
pub fn schur_check(beta: &Partition, m: usize, sample: &[Scalar], limits: &Limits) -> Result<IdentityReport> {
    if sample.len() != m {
        return Err(Error::InvalidArgument(format!(
            "expected {m} sample values, got {}",
            sample.len()
        )));
    }
    if m < beta.length() {
        return Err(Error::InvalidArgument(format!(
            "m = {m} is smaller than the length of {beta}"
        )));
    }
    check_sample(sample)?;
    let lhs = power_sum_immanant(beta, sample, limits)?;
    let rhs = Scalar::from_biguint(factorial(beta.size())) * schur_bialternant(beta, sample)?;
    let shown: Vec<String> = sample.iter().map(Scalar::to_string).collect();
    Ok(IdentityReport::compare(
        "schur",
        format!("beta={beta} m={m} x=({})", shown.join(",")),
        &lhs,
        &rhs,
    ))
}

/// `lr_coefficient(lambda, alpha, (q) or (1^q))` against the strip predicate.
pub fn check_pieri(lambda: &Partition, alpha: &Partition, kind: StripKind) -> Result<IdentityReport> {
    let q = lambda
        .size()
        .checked_sub(alpha.size())
        .ok_or_else(|| Error::SizeMismatch(format!("|{alpha}| exceeds |{lambda}|")))?;
    let factor = match kind {
        StripKind::Row => Partition::row(q),
        StripKind::Column => Partition::column(q),
    };
    let lr = lr_coefficient(lambda, alpha, &factor)?;
    let predicate = BigUint::from(pieri_coefficient(lambda, alpha, q, kind)?);
    let name = match kind {
        StripKind::Row => "pieri-row",
        StripKind::Column => "pieri-column",
    };
    Ok(IdentityReport::compare(
        name,
        format!("lambda={lambda} alpha={alpha} q={q}"),
        &lr,
        &predicate,
    ))
}

/// Gadget annihilation: `per(H_q) = 1`, `det(E_q) = 1`, and every other
/// immanant of `H_q`, `E_q` (and of the variant `H'_q`) vanishes.
pub fn check_gadget_lemma(q: usize, limits: &Limits) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    let gadgets = [
        ("H", matrix_h(q), Partition::row(q)),
        ("E", matrix_e(q), Partition::column(q)),
        ("H'", matrix_h_alt(q), Partition::row(q)),
    ];
    for (label, m, survivor) in &gadgets {
        for beta in partitions_of(q) {
            let value = immanant(&beta, m, limits)?;
            let expected = if beta == *survivor {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            out.push(IdentityReport::compare(
                "gadget-lemma",
                format!("gadget={label}{q} beta={beta}"),
                &value,
                &expected,
            ));
        }
    }
    let per = permanent(&matrix_h(q), limits)?;
    out.push(IdentityReport::compare(
        "gadget-lemma",
        format!("per(H{q})"),
        &per,
        &Scalar::one(),
    ));
    let det = determinant(&matrix_e(q));
    out.push(IdentityReport::compare(
        "gadget-lemma",
        format!("det(E{q})"),
        &det,
        &Scalar::one(),
    ));
    Ok(out)
}

/// `per(A) = im_lambda(G)` for one row choice.
pub fn check_projection(
    lambda: &Partition,
    row_index: usize,
    a: &Matrix<Scalar>,
    limits: &Limits,
) -> Result<IdentityReport> {
    let r = verify_projection(lambda, Some(row_index), a, limits)?;
    Ok(IdentityReport::compare(
        "projection",
        format!("lambda={lambda} i={} k={}", r.i, r.k),
        &r.per,
        &r.imm,
    ))
}

/// Suite names accepted by [`run_suite`]; `all` runs each in this order.
pub const SUITES: &[&str] = &[
    "projection",
    "gadget-lemma",
    "block-formula",
    "strip-row",
    "strip-column",
    "strip-skew",
    "cycle-format",
    "imz",
    "orbit-count",
    "schur",
    "pieri",
];

pub const PROJECTION_SAMPLES: usize = 5;
pub const BLOCK_SAMPLES: usize = 3;

type Case = Box<dyn Fn() -> Result<Vec<IdentityReport>> + Send + Sync>;

fn single(f: impl Fn() -> Result<IdentityReport> + Send + Sync + 'static) -> Case {
    Box::new(move || f().map(|r| vec![r]))
}

fn suite_cases(name: &str, max_size: usize, seed: u64, limits: Limits) -> Result<Vec<Case>> {
    let mut cases: Vec<Case> = Vec::new();
    match name {
        "projection" => {
            for lambda in partitions_up_to(max_size) {
                for i in 1..=lambda.length() {
                    let k = lambda.gap(i);
                    if k == 0 {
                        continue;
                    }
                    for sample in 0..PROJECTION_SAMPLES {
                        let lambda = lambda.clone();
                        cases.push(single(move || {
                            let a = random_matrix(&mut case_rng(seed, &format!("projection/{lambda}/{i}/{sample}")), k);
                            let mut r = check_projection(&lambda, i, &a, &limits)?;
                            r.parameters.push_str(&format!(" sample={sample}"));
                            Ok(r)
                        }));
                    }
                }
            }
        }
        "gadget-lemma" => {
            for q in 1..=max_size.min(ORBIT_MAX_Q) {
                cases.push(Box::new(move || check_gadget_lemma(q, &limits)));
            }
        }
        "block-formula" => {
            for lambda in partitions_up_to(max_size) {
                for p in 1..lambda.size() {
                    for sample in 0..BLOCK_SAMPLES {
                        let lambda = lambda.clone();
                        cases.push(single(move || {
                            let mut rng = case_rng(seed, &format!("block/{lambda}/{p}/{sample}"));
                            let a = random_matrix(&mut rng, p);
                            let b = random_matrix(&mut rng, lambda.size() - p);
                            let mut r = check_block_formula(&lambda, &a, &b, &limits)?;
                            r.parameters.push_str(&format!(" sample={sample}"));
                            Ok(r)
                        }));
                    }
                }
            }
        }
        "strip-row" | "strip-column" | "strip-skew" => {
            let kind = match name {
                "strip-row" => ProjectionKind::Row,
                "strip-column" => ProjectionKind::Column,
                _ => ProjectionKind::Skew,
            };
            for lambda in partitions_up_to(max_size) {
                for q in 1..=lambda.size() {
                    let lambda = lambda.clone();
                    cases.push(single(move || {
                        let a = random_matrix(
                            &mut case_rng(seed, &format!("{}/{lambda}/{q}", kind.name())),
                            lambda.size() - q,
                        );
                        check_strip_projection(&lambda, q, &a, kind, &limits)
                    }));
                }
            }
        }
        "cycle-format" => {
            for gamma in partitions_up_to(max_size.min(LITTLEWOOD_MAX_Q)) {
                cases.push(single(move || check_cycle_format(&gamma, &limits)));
            }
        }
        "imz" => {
            for beta in partitions_up_to(max_size.min(ORBIT_MAX_Q)) {
                cases.push(single(move || check_imz(&beta, &limits)));
            }
        }
        "orbit-count" => {
            for gamma in partitions_up_to(max_size.min(ORBIT_MAX_Q)) {
                cases.push(single(move || check_orbit_counts(&gamma)));
            }
        }
        "schur" => {
            for beta in partitions_up_to(max_size) {
                let top = beta.length().max(4);
                for m in beta.length()..=top {
                    let beta = beta.clone();
                    cases.push(single(move || {
                        let sample: Vec<Scalar> = (1..=m as i64).map(Scalar::integer).collect();
                        schur_check(&beta, m, &sample, &limits)
                    }));
                }
            }
        }
        "pieri" => {
            for lambda in partitions_up_to(max_size) {
                for q in 1..=lambda.size() {
                    for alpha in partitions_of(lambda.size() - q) {
                        for kind in [StripKind::Row, StripKind::Column] {
                            let (lambda, alpha) = (lambda.clone(), alpha.clone());
                            cases.push(single(move || check_pieri(&lambda, &alpha, kind)));
                        }
                    }
                }
            }
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown identity suite {other:?}; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    }
    Ok(cases)
}

/// Runs one suite (or `all`) over partitions of size `1..=max_size`.
/// Cases run in parallel; reports come back in case order.
pub fn run_suite(name: &str, max_size: usize, seed: u64, limits: &Limits) -> Result<Vec<IdentityReport>> {
    let names: Vec<&str> = if name == "all" { SUITES.to_vec() } else { vec![name] };
    let mut cases = Vec::new();
    for n in names {
        cases.extend(suite_cases(n, max_size, seed, *limits)?);
    }
    let results: Vec<Result<Vec<IdentityReport>>> = cases.par_iter().map(|case| case()).collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    const LIM: Limits = Limits::DEFAULT;

    #[test]
    fn z_matrix_shape() {
        let z1 = littlewood_z(1);
        assert_eq!(z1.get(0, 0), &SparsePoly::var(0));
        let z2 = littlewood_z(2);
        assert_eq!(z2.get(0, 1), &SparsePoly::one());
        assert_eq!(z2.get(1, 0), &SparsePoly::var(1));
        assert_eq!(z2.get(1, 1), &SparsePoly::var(0));
        for q in 1..=6 {
            let alternating: Vec<Scalar> = (0..q)
                .map(|i| Scalar::integer(if i % 2 == 0 { 1 } else { -1 }))
                .collect();
            let t = specialize(&littlewood_z(q), &alternating).unwrap();
            let scaled = Matrix::from_fn(q, |i, j| t.get(i, j) * &Scalar::ratio(1, i as i64 + 1));
            assert_eq!(scaled, matrix_e(q));
        }
    }

    #[test]
    fn cycle_format_examples() {
        let z1 = SparsePoly::var(0);
        let z2 = SparsePoly::var(1);
        assert_eq!(cycle_format_polynomial(2, &p("2"), &LIM).unwrap(), z2);
        assert_eq!(cycle_format_polynomial(2, &p("1,1"), &LIM).unwrap(), &z1 * &z1);
        assert_eq!(
            cycle_format_polynomial(3, &p("2,1"), &LIM).unwrap(),
            (&z2 * &z1).scale(&Scalar::integer(3))
        );
        assert!(cycle_format_polynomial(9, &Partition::row(9), &LIM).is_err());
    }

    #[test]
    fn imz_examples() {
        let z1 = SparsePoly::var(0);
        let z2 = SparsePoly::var(1);
        let z3 = SparsePoly::var(2);
        let mut per = &z1 * &z1;
        per += &z2;
        assert_eq!(immanant(&p("2"), &littlewood_z(2), &LIM).unwrap(), per);
        let mut det = &z1 * &z1;
        det += &(-&z2);
        assert_eq!(immanant(&p("1,1"), &littlewood_z(2), &LIM).unwrap(), det);
        let mut expected = (&(&z1 * &z1) * &z1).scale(&Scalar::integer(2));
        expected += &z3.scale(&Scalar::integer(-2));
        assert_eq!(littlewood_expansion(&p("2,1")).unwrap(), expected);
        assert!(check_imz(&p("2,1"), &LIM).unwrap().pass);
    }

    #[test]
    fn orbit_examples() {
        let c = orbit_count(&p("2,1"), &[2, 1]).unwrap();
        assert_eq!((c.enumerated, c.formula), (1u32.into(), 1u32.into()));
        let c = orbit_count(&p("2,1"), &[1, 2]).unwrap();
        assert_eq!((c.enumerated, c.formula), (2u32.into(), 2u32.into()));
        for q in 1..=6 {
            let c = orbit_count(&Partition::row(q), &[q]).unwrap();
            assert_eq!(c.enumerated, factorial(q - 1));
            assert_eq!(c.formula, factorial(q - 1));
        }
        assert!(matches!(
            orbit_count(&p("2,1"), &[3]),
            Err(Error::InvalidComposition { .. })
        ));
        assert_eq!(rearrangements(&p("2,1,1")).len(), 3);
    }

    #[test]
    fn schur_examples() {
        let s = |x: i64| Scalar::integer(x);
        let r = schur_check(&p("2"), 2, &[s(1), s(2)], &LIM).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, "14");
        let r = schur_check(&p("1,1"), 2, &[s(1), s(2)], &LIM).unwrap();
        assert!(r.pass);
        assert_eq!(r.rhs, "4");
        let x = Scalar::ratio(5, 7);
        let r = schur_check(&p("1"), 1, std::slice::from_ref(&x), &LIM).unwrap();
        assert_eq!((r.lhs.as_str(), r.pass), ("5/7", true));
        assert_eq!(
            schur_check(&p("2"), 2, &[s(3), s(3)], &LIM),
            Err(Error::DegenerateSample)
        );
        assert_eq!(
            schur_check(&p("2"), 2, &[s(0), s(3)], &LIM),
            Err(Error::DegenerateSample)
        );
    }

    #[test]
    fn strip_examples() {
        let a = Matrix::from_rows(vec![
            vec![Scalar::integer(2), Scalar::integer(3)],
            vec![Scalar::ratio(1, 2), Scalar::integer(5)],
        ])
        .unwrap();
        let r = check_strip_projection(&p("2,1"), 1, &a, ProjectionKind::Row, &LIM).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, "20");
        let x = Matrix::from_rows(vec![vec![Scalar::integer(4)]]).unwrap();
        let r = check_strip_projection(&p("3,1"), 3, &x, ProjectionKind::Row, &LIM).unwrap();
        assert_eq!((r.lhs.as_str(), r.pass), ("4", true));
        let r = check_strip_projection(&Partition::column(3), 3, &Matrix::empty(), ProjectionKind::Skew, &LIM).unwrap();
        assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("1", "1"));
    }

    #[test]
    fn block_examples() {
        let x = Matrix::from_rows(vec![vec![Scalar::integer(3)]]).unwrap();
        let r = check_block_formula(&p("2,1"), &x, &Matrix::identity(2), &LIM).unwrap();
        assert!(r.pass);
        assert!(check_block_formula(&p("2,1"), &x, &x, &LIM).is_err());
    }

    #[test]
    fn power_sum_immanant_vanishes_below_length() {
        for beta in partitions_up_to(6) {
            for m in 1..beta.length() {
                let sample: Vec<Scalar> = (1..=m as i64).map(|v| Scalar::ratio(v, 2)).collect();
                assert!(
                    power_sum_immanant(&beta, &sample, &LIM).unwrap().is_zero(),
                    "{beta} m={m}"
                );
                assert!(schur_check(&beta, m, &sample, &LIM).is_err());
            }
        }
    }
}
