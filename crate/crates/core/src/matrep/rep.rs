//! The matrix representation of arrows at a dimension parameter `p`.

use num_bigint::BigInt;

use crate::adjunction::ArrowTerm;
use crate::error::{Error, Result};

use super::{e_matrix_over, h_matrix_over, s_matrix_over, Bool, Matrix, Semiring};

/// Largest row or column count `rep_k` and `rep_j` will build.
pub const DEFAULT_DIM_CAP: usize = 4096;

/// The cap from `BRAUERKIT_DIM_CAP`, falling back to [`DEFAULT_DIM_CAP`].
pub fn dim_cap_from_env() -> usize {
    std::env::var("BRAUERKIT_DIM_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_DIM_CAP)
}

fn check_cap(f: &ArrowTerm, p: usize, cap: usize) -> Result<()> {
    let top = f.max_object()?;
    let dim = (p as u128).checked_pow(top).unwrap_or(u128::MAX);
    if dim > cap as u128 {
        return Err(Error::DimensionCap { dim, cap });
    }
    Ok(())
}

fn rep<S: Semiring>(f: &ArrowTerm, p: usize) -> Matrix<S> {
    let dim = |n: u32| p.pow(n);
    match f {
        ArrowTerm::Id(n) => Matrix::identity(dim(*n)),
        ArrowTerm::Phi(n) => e_matrix_over(p, dim(*n)),
        ArrowTerm::Gamma(n) => h_matrix_over(p, dim(*n)),
        ArrowTerm::Chi(n) => s_matrix_over::<S>(p, p).kron(&Matrix::identity(dim(*n))),
        ArrowTerm::Fap(g) => Matrix::<S>::identity(p).kron(&rep(g, p)),
        ArrowTerm::Comp(g, h) => rep::<S>(g, p)
            .matmul(&rep(h, p))
            .expect("well-typed composition has matching shapes"),
    }
}

/// Integer matrix of a well-typed arrow, refusing when some intermediate
/// object would exceed `cap` rows or columns.
pub fn rep_k_with_cap(f: &ArrowTerm, p: usize, cap: usize) -> Result<Matrix<BigInt>> {
    check_cap(f, p, cap)?;
    Ok(rep(f, p))
}

/// Boolean matrix of a well-typed arrow; the loop becomes the unit.
pub fn rep_j_with_cap(f: &ArrowTerm, p: usize, cap: usize) -> Result<Matrix<Bool>> {
    check_cap(f, p, cap)?;
    Ok(rep(f, p))
}

pub fn rep_k(f: &ArrowTerm, p: usize) -> Result<Matrix<BigInt>> {
    rep_k_with_cap(f, p, dim_cap_from_env())
}

pub fn rep_j(f: &ArrowTerm, p: usize) -> Result<Matrix<Bool>> {
    rep_j_with_cap(f, p, dim_cap_from_env())
}
