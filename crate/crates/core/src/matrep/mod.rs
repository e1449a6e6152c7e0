//! Dense matrices over exact integers and over the boolean semiring, the
//! Kronecker product, and the swap, counit and unit matrices.
//!
//! An arrow `m → n` is an `n × m` matrix; composition is multiplication
//! and the tensor product is the Kronecker product, the left factor
//! indexing the outer blocks.

pub mod rep;
pub mod verify;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub use rep::{dim_cap_from_env, rep_j, rep_j_with_cap, rep_k, rep_k_with_cap, DEFAULT_DIM_CAP};
pub use verify::{verify_faithfulness, verify_subsided_mat, FaithfulnessReport, SubsidedReport};

/// Entries of a matrix: a commutative semiring.
pub trait Semiring: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_product(&mut self, a: &Self, b: &Self);
    fn mul(&self, other: &Self) -> Self;
}

impl Semiring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_product(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// The two-element semiring with `1 + 1 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bool(pub bool);

impl fmt::Display for Bool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl Semiring for Bool {
    fn zero() -> Self {
        Bool(false)
    }
    fn one() -> Self {
        Bool(true)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn add_assign_product(&mut self, a: &Self, b: &Self) {
        self.0 |= a.0 && b.0;
    }
    fn mul(&self, other: &Self) -> Self {
        Bool(self.0 && other.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type BoolMatrix = Matrix<Bool>;

impl<S: Semiring> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let data = (0..rows * cols).map(|x| f(x / cols.max(1), x % cols.max(1))).collect();
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    /// `self · other`; the arrow `other` runs first.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let dst = i * other.cols;
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.row(k).iter().enumerate() {
                    if !b.is_zero() {
                        out.data[dst + j].add_assign_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; `self` indexes the outer blocks.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * cols + j * other.cols + l] = a.mul(b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<T: Semiring>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Row-major entries as decimal strings.
    pub fn entries(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Json {
            rows: usize,
            cols: usize,
            entries: Vec<Vec<String>>,
        }
        serde_json::to_string(&Json {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries(),
        })
        .expect("serializable")
    }
}

impl IntMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    /// The boolean image: non-zero entries become 1.
    pub fn to_bool(&self) -> BoolMatrix {
        self.map(|x| Bool(!Semiring::is_zero(x)))
    }
}

impl<S: Semiring> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries = self.entries();
        let width = entries.iter().flatten().map(String::len).max().unwrap_or(1);
        write!(f, "{}x{}", self.rows, self.cols)?;
        for row in entries {
            f.write_str("\n[")?;
            for (n, x) in row.iter().enumerate() {
                if n > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x:>width$}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

pub fn matmul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    a.matmul(b)
}

pub fn kron(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    a.kron(b)
}

pub fn transpose(a: &IntMatrix) -> IntMatrix {
    a.transpose()
}

pub fn id_matrix(n: usize) -> IntMatrix {
    Matrix::identity(n)
}

/// The swap `m ⊗ n → n ⊗ m`.
pub fn s_matrix_over<S: Semiring>(m: usize, n: usize) -> Matrix<S> {
    let size = m * n;
    let mut out = Matrix::zeros(size, size);
    for i in 0..n {
        for j in 0..m {
            out.set(i * m + j, j * n + i, S::one());
        }
    }
    out
}

/// The counit `m ⊗ m ⊗ n → n`.
pub fn e_matrix_over<S: Semiring>(m: usize, n: usize) -> Matrix<S> {
    let base = Matrix::from_fn(1, m * m, |_, x| {
        if x / m == x % m {
            S::one()
        } else {
            S::zero()
        }
    });
    base.kron(&Matrix::identity(n))
}

/// The unit `n → m ⊗ m ⊗ n`.
pub fn h_matrix_over<S: Semiring>(m: usize, n: usize) -> Matrix<S> {
    e_matrix_over::<S>(m, n).transpose()
}

pub fn s_matrix(m: usize, n: usize) -> IntMatrix {
    s_matrix_over(m, n)
}

pub fn e_matrix(m: usize, n: usize) -> IntMatrix {
    e_matrix_over(m, n)
}

pub fn h_matrix(m: usize, n: usize) -> IntMatrix {
    h_matrix_over(m, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_examples() {
        assert_eq!(kron(&id_matrix(2), &id_matrix(3)), id_matrix(6));
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let expected = IntMatrix::from_rows(&[
            vec![0, 1, 0, 0],
            vec![1, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 0],
        ]);
        assert_eq!(kron(&id_matrix(2), &swap), expected);
    }

    #[test]
    fn empty_shapes() {
        let a = IntMatrix::zeros(3, 0);
        let b = IntMatrix::zeros(0, 2);
        let c = matmul(&a, &b).unwrap();
        assert_eq!((c.rows(), c.cols()), (3, 2));
        assert!(matmul(&b, &IntMatrix::zeros(2, 3)).unwrap().is_empty());
        assert!(matmul(&id_matrix(2), &id_matrix(3)).is_err());
    }

    #[test]
    fn s_examples() {
        let expected = IntMatrix::from_rows(&[
            vec![1, 0, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0],
            vec![0, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 1],
        ]);
        assert_eq!(s_matrix(3, 2), expected);
        for n in 0..5 {
            assert_eq!(s_matrix(1, n), id_matrix(n));
        }
        for m in 0..5 {
            for n in 0..5 {
                let prod = matmul(&s_matrix(n, m), &s_matrix(m, n)).unwrap();
                assert_eq!(prod, id_matrix(m * n));
            }
        }
        assert!(s_matrix(0, 3).is_empty());
    }

    #[test]
    fn e_examples() {
        assert_eq!(
            e_matrix(2, 2),
            IntMatrix::from_rows(&[vec![1, 0, 0, 0, 0, 0, 1, 0], vec![0, 1, 0, 0, 0, 0, 0, 1]])
        );
        assert_eq!(e_matrix(2, 1), IntMatrix::from_rows(&[vec![1, 0, 0, 1]]));
        for m in 0..5 {
            let circle = matmul(&e_matrix(m, 1), &h_matrix(m, 1)).unwrap();
            assert_eq!(circle, IntMatrix::from_rows(&[vec![m as i64]]));
            assert_eq!(transpose(&e_matrix(m, 2)), h_matrix(m, 2));
        }
        let e = e_matrix(3, 0);
        assert_eq!((e.rows(), e.cols()), (0, 0));
        let e = e_matrix(0, 3);
        assert_eq!((e.rows(), e.cols()), (3, 0));
    }

    #[test]
    fn boolean_addition_saturates() {
        let e: BoolMatrix = e_matrix_over(3, 1);
        let h: BoolMatrix = h_matrix_over(3, 1);
        assert_eq!(e.matmul(&h).unwrap(), BoolMatrix::identity(1));
    }

    #[test]
    fn json_layout() {
        let m = IntMatrix::from_rows(&[vec![1, 0], vec![0, 12]]);
        assert_eq!(m.to_json(), r#"{"rows":2,"cols":2,"entries":[["1","0"],["0","12"]]}"#);
    }
}
