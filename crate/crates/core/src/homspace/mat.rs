//! Small dense matrix helpers: exact rational 4×4 matrices for
//! representation fidelity, `f64` 4×4 products for the group layer, and a
//! pivoted Gaussian solver for the frame inversions.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Exact rational 4×4 matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat4(pub [[Rat; 4]; 4]);

impl RatMat4 {
    pub fn zeros() -> RatMat4 {
        RatMat4(std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero())))
    }

    pub fn from_i64(entries: [[i64; 4]; 4]) -> RatMat4 {
        RatMat4(std::array::from_fn(|i| {
            std::array::from_fn(|j| Rat::from_integer(entries[i][j].into()))
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|row| row.iter().all(|e| e.is_zero()))
    }

    pub fn mul(&self, other: &RatMat4) -> RatMat4 {
        let mut out = RatMat4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = Rat::zero();
                for k in 0..4 {
                    acc += &self.0[i][k] * &other.0[k][j];
                }
                out.0[i][j] = acc;
            }
        }
        out
    }

    pub fn add(&self, other: &RatMat4) -> RatMat4 {
        let mut out = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] += &other.0[i][j];
            }
        }
        out
    }

    pub fn sub(&self, other: &RatMat4) -> RatMat4 {
        let mut out = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] -= &other.0[i][j];
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> RatMat4 {
        let mut out = self.clone();
        for row in out.0.iter_mut() {
            for e in row.iter_mut() {
                *e *= c;
            }
        }
        out
    }

    pub fn commutator(&self, other: &RatMat4) -> RatMat4 {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn to_f64(&self) -> Result<Mat4> {
        let mut out = Mat4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = self.0[i][j]
                    .to_f64()
                    .ok_or_else(|| Error::Numeric("rational out of f64 range".into()))?;
            }
        }
        Ok(out)
    }
}

/// Plain `f64` 4×4 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4(pub [[f64; 4]; 4]);

impl Mat4 {
    pub fn zeros() -> Mat4 {
        Mat4([[0.0; 4]; 4])
    }

    pub fn identity() -> Mat4 {
        let mut m = Mat4::zeros();
        for i in 0..4 {
            m.0[i][i] = 1.0;
        }
        m
    }

    pub fn mul(&self, other: &Mat4) -> Mat4 {
        let mut out = Mat4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = 0.0;
                for k in 0..4 {
                    acc += self.0[i][k] * other.0[k][j];
                }
                out.0[i][j] = acc;
            }
        }
        out
    }

    pub fn add(&self, other: &Mat4) -> Mat4 {
        let mut out = *self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] += other.0[i][j];
            }
        }
        out
    }

    pub fn scale(&self, c: f64) -> Mat4 {
        let mut out = *self;
        for row in out.0.iter_mut() {
            for e in row.iter_mut() {
                *e *= c;
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Mat4) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                m = m.max((self.0[i][j] - other.0[i][j]).abs());
            }
        }
        m
    }

    pub fn flatten(&self) -> [f64; 16] {
        let mut out = [0.0; 16];
        for i in 0..4 {
            for j in 0..4 {
                out[i * 4 + j] = self.0[i][j];
            }
        }
        out
    }
}

/// Solve `A x = b` in place by Gaussian elimination with partial pivoting.
pub fn solve_linear(a: &[Vec<f64>], b: &[f64]) -> Result<Vec<f64>> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) || b.len() != n {
        return Err(Error::Numeric("linear system shape mismatch".into()));
    }
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let (pivot_row, pivot_val) = (col..n)
            .map(|r| (r, m[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if pivot_val < 1e-12 {
            return Err(Error::ChartSingularity(format!(
                "singular frame matrix (pivot {pivot_val:.3e} at column {col})"
            )));
        }
        m.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        let diag = m[col][col];
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = m[r][col] / diag;
            if factor == 0.0 {
                continue;
            }
            for c in col..n {
                let v = m[col][c];
                m[r][c] -= factor * v;
            }
            rhs[r] -= factor * rhs[col];
        }
    }
    Ok((0..n).map(|i| rhs[i] / m[i][i]).collect())
}

/// Invert a square matrix column by column.
pub fn invert(a: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![0.0; n];
        e[j] = 1.0;
        cols.push(solve_linear(a, &e)?);
    }
    // cols[j] is the j-th column of the inverse
    Ok((0..n)
        .map(|i| (0..n).map(|j| cols[j][i]).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_and_invert_roundtrip() {
        let a = vec![
            vec![2.0, 1.0, 0.0],
            vec![0.0, 1.0, -1.0],
            vec![1.0, 0.0, 3.0],
        ];
        let b = vec![3.0, -1.0, 7.0];
        let x = solve_linear(&a, &b).unwrap();
        for i in 0..3 {
            let got: f64 = (0..3).map(|j| a[i][j] * x[j]).sum();
            assert!((got - b[i]).abs() < 1e-12);
        }
        let inv = invert(&a).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let got: f64 = (0..3).map(|k| a[i][k] * inv[k][j]).sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((got - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn singular_systems_are_reported() {
        let a = vec![vec![1.0, 2.0], vec![2.0, 4.0]];
        assert!(matches!(
            solve_linear(&a, &[1.0, 2.0]),
            Err(Error::ChartSingularity(_))
        ));
    }
}
