use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, Mul, Neg};

use super::scalar::Scalar;

/// Exponent vector over `z1, z2, ...`; trailing zeros are trimmed so
/// equal monomials compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Monomial(exponents)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// The single variable with 0-based index `var`.
    pub fn var(var: usize) -> Self {
        let mut e = vec![0; var + 1];
        e[var] = 1;
        Monomial(e)
    }

    /// `z^gamma = z_{gamma_1} * ... * z_{gamma_r}`, variables 1-based.
    pub fn power_product(parts: &[usize]) -> Self {
        let mut e = vec![0u32; parts.iter().copied().max().unwrap_or(0)];
        for &p in parts {
            e[p - 1] += 1;
        }
        Monomial::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut e = long.0.clone();
        for (a, b) in e.iter_mut().zip(&short.0) {
            *a += b;
        }
        Monomial(e)
    }
}

/// Multivariate polynomial with exact rational coefficients; zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn one() -> Self {
        SparsePoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        SparsePoly::term(c, Monomial::one())
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    /// Variable with 0-based index `var` (printed as `z{var+1}`).
    pub fn var(var: usize) -> Self {
        SparsePoly::term(Scalar::one(), Monomial::var(var))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Substitutes `values[i]` for variable `i`; missing values are an error
    /// only if the variable actually occurs.
    pub fn evaluate(&self, values: &[Scalar]) -> Option<Scalar> {
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * &values.get(i)?.pow(e);
                }
            }
            total += &term;
        }
        Some(total)
    }

    pub fn scale(&self, c: &Scalar) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

impl AddAssign<&SparsePoly> for SparsePoly {
    fn add_assign(&mut self, rhs: &SparsePoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Mul<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        for (idx, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.numer().sign() == num_bigint::Sign::Minus;
            let magnitude = c.abs();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("z{}", i + 1)
                    } else {
                        format!("z{}^{}", i + 1, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude == Scalar::one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
