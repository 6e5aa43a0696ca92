//! Faithful 4×4 matrix representations with exact fidelity checks: the
//! commutators of the representation matrices must reproduce the structure
//! constants entry by entry in rational arithmetic.


use super::mat::{Rat, RatMat4};
use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct MatrixRep {
    algebra: LieAlgebra,
    mats: Vec<RatMat4>,
    signature: String,
}

impl MatrixRep {
    /// Build and verify `[rho_i, rho_j] = c^k_ij rho_k` exactly. The host
    /// algebra must have rational structure constants (no free parameters).
    pub fn new(algebra: LieAlgebra, mats: Vec<RatMat4>, signature: &str) -> Result<MatrixRep> {
        let d = algebra.dim();
        if mats.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: mats.len(),
            });
        }
        for i in 0..d {
            for j in (i + 1)..d {
                let lhs = mats[i].commutator(&mats[j]);
                let mut rhs = RatMat4::zeros();
                for k in 0..d {
                    let c = algebra.c(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let c = c.as_rat().ok_or_else(|| {
                        Error::Structural(
                            "matrix representations need numeric structure constants".into(),
                        )
                    })?;
                    rhs = rhs.add(&mats[k].scale(&c));
                }
                if lhs != rhs {
                    return Err(Error::Structural(format!(
                        "representation violates [rho_{i}, rho_{j}] = c^k_ij rho_k"
                    )));
                }
            }
        }
        Ok(MatrixRep {
            algebra,
            mats,
            signature: signature.to_string(),
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.mats.len()
    }

    pub fn matrix(&self, i: usize) -> &RatMat4 {
        &self.mats[i]
    }

    pub fn signature(&self) -> &str {
        &self.signature
    }
}

/// Unit matrix `E_ab`.
pub fn unit(a: usize, b: usize) -> RatMat4 {
    let mut m = RatMat4::zeros();
    m.0[a][b] = Rat::from_integer(1.into());
    m
}
