use std::fmt;

use serde::{Deserialize, Serialize};

use super::ring::Ring;
use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::symgroup::Permutation;

/// Dense square matrix, row-major. Dimension 0 is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::SizeMismatch(format!(
                "row {} has {} entries, expected {n}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Ok(Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    pub fn empty() -> Self {
        Matrix {
            n: 0,
            entries: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    /// The all-ones matrix `J_n`.
    pub fn ones(n: usize) -> Self {
        Self::from_fn(n, |_, _| R::one())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// 0-based access.
    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        (0..self.n).map(move |i| self.row(i))
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Top-left `k x k` submatrix.
    pub fn leading_block(&self, k: usize) -> Self {
        assert!(k <= self.n);
        Self::from_fn(k, |i, j| self.get(i, j).clone())
    }

    /// `f_pi(M) = prod_i M[i, pi(i)]`.
    pub fn diagonal_product(&self, pi: &Permutation) -> Result<R> {
        if pi.degree() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                actual: pi.degree(),
            });
        }
        let mut acc = R::one();
        for (i, &j) in pi.images0().iter().enumerate() {
            let e = self.get(i, j);
            if e.is_zero() {
                return Ok(R::zero());
            }
            acc = acc.mul_ref(e);
        }
        Ok(acc)
    }
}

impl Matrix<Scalar> {
    pub fn scalar_diagonal(values: &[Scalar]) -> Self {
        Self::from_fn(
            values.len(),
            |i, j| if i == j { values[i].clone() } else { Scalar::zero() },
        )
    }

    pub fn lift<R: Ring>(&self) -> Matrix<R> {
        self.map(R::from_scalar)
    }
}

/// Block-diagonal assembly; off-block entries are exact zeros.
pub fn block_diag<R: Ring>(blocks: &[Matrix<R>]) -> Result<Matrix<R>> {
    if blocks.is_empty() {
        return Err(Error::EmptyBlockList);
    }
    let n: usize = blocks.iter().map(Matrix::dim).sum();
    let mut out = Matrix {
        n,
        entries: vec![R::zero(); n * n],
    };
    let mut offset = 0;
    for b in blocks {
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                out.entries[(offset + i) * n + offset + j] = b.get(i, j).clone();
            }
        }
        offset += b.dim();
    }
    Ok(out)
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.n {
            let row: Vec<String> = cells[i * self.n..(i + 1) * self.n]
                .iter()
                .map(|c| format!("{c:>width$}"))
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixDocument {
    n: usize,
    entries: Vec<Vec<String>>,
}

/// `{"n": <int>, "entries": [["1/2", "-3"], ...]}` with canonical scalars.
pub fn matrix_to_json(m: &Matrix<Scalar>) -> String {
    let doc = MatrixDocument {
        n: m.dim(),
        entries: m.rows().map(|r| r.iter().map(Scalar::to_string).collect()).collect(),
    };
    serde_json::to_string(&doc).expect("matrix document serializes")
}

pub fn matrix_from_json(text: &str) -> Result<Matrix<Scalar>> {
    let doc: MatrixDocument =
        serde_json::from_str(text).map_err(|e| Error::schema(None, format!("invalid matrix document: {e}")))?;
    if doc.entries.len() != doc.n {
        return Err(Error::schema(
            None,
            format!("\"n\" is {} but there are {} rows", doc.n, doc.entries.len()),
        ));
    }
    let mut rows = Vec::with_capacity(doc.n);
    for (i, row) in doc.entries.iter().enumerate() {
        if row.len() != doc.n {
            return Err(Error::schema(
                Some((i + 1, row.len().min(doc.n) + 1)),
                format!("row {} has {} entries, expected {}", i + 1, row.len(), doc.n),
            ));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, text)| {
                text.parse::<Scalar>()
                    .map_err(|e| Error::schema(Some((i + 1, j + 1)), e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(parsed);
    }
    Matrix::from_rows(rows)
}

pub fn load_matrix(path: &std::path::Path) -> Result<Matrix<Scalar>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::schema(None, format!("cannot read {}: {e}", path.display())))?;
    matrix_from_json(&text)
}

pub fn save_matrix(m: &Matrix<Scalar>, path: &std::path::Path) -> Result<()> {
    let mut text = matrix_to_json(m);
    text.push('\n');
    std::fs::write(path, text).map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn block_diag_examples() {
        let a = Matrix::<Scalar>::identity(2);
        let b = Matrix::<Scalar>::identity(3);
        assert_eq!(block_diag(std::slice::from_ref(&a)).unwrap(), a);
        assert_eq!(block_diag(&[a, b]).unwrap(), Matrix::identity(5));
        assert_eq!(block_diag::<Scalar>(&[]), Err(Error::EmptyBlockList));

        let x = Matrix::from_rows(vec![vec![s("7")]]).unwrap();
        let h2 = Matrix::from_rows(vec![vec![s("1"), s("1")], vec![s("1/2"), s("1/2")]]).unwrap();
        let g = block_diag(&[x, h2]).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![s("7"), s("0"), s("0")],
            vec![s("0"), s("1"), s("1")],
            vec![s("0"), s("1/2"), s("1/2")],
        ])
        .unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn diagonal_products() {
        let i3 = Matrix::<Scalar>::identity(3);
        assert_eq!(i3.diagonal_product(&Permutation::identity(3)).unwrap(), Scalar::one());
        let cycle = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(i3.diagonal_product(&cycle).unwrap(), Scalar::zero());
        assert!(matches!(
            i3.diagonal_product(&Permutation::identity(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn json_examples() {
        let m = matrix_from_json(r#"{"n":1,"entries":[["1/2"]]}"#).unwrap();
        assert_eq!(m.get(0, 0), &Scalar::ratio(1, 2));
        let h2 = matrix_from_json(r#"{"n":2,"entries":[["1","1"],["1/2","1/2"]]}"#).unwrap();
        assert_eq!(h2.get(1, 0), &Scalar::ratio(1, 2));
        let err = matrix_from_json(r#"{"n":2,"entries":[["2/4","0"],["0","1"]]}"#).unwrap_err();
        assert!(
            matches!(
                err,
                Error::Schema {
                    location: Some((1, 1)),
                    ..
                }
            ),
            "{err}"
        );
        let err = matrix_from_json(r#"{"n":2,"entries":[["1","0"],["0","1/0"]]}"#).unwrap_err();
        assert!(
            matches!(
                err,
                Error::Schema {
                    location: Some((2, 2)),
                    ..
                }
            ),
            "{err}"
        );
        assert!(matrix_from_json(r#"{"n":2,"entries":[["1","0"]]}"#).is_err());
        assert!(matrix_from_json(r#"{"n":1,"entries":[[1]]}"#).is_err());
    }

    #[test]
    fn json_round_trip_is_textual_identity() {
        let text = r#"{"n":2,"entries":[["-3","1/2"],["0","-7/9"]]}"#;
        assert_eq!(matrix_to_json(&matrix_from_json(text).unwrap()), text);
        let empty = r#"{"n":0,"entries":[]}"#;
        assert_eq!(matrix_to_json(&matrix_from_json(empty).unwrap()), empty);
    }
}
