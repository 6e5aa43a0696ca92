//! Left- and right-invariant vector fields in chart coordinates, obtained by
//! solving `g⁻¹∂_μ g = Σ L^a_μ X_a` and `(∂_μ g) g⁻¹ = Σ R^a_μ X_a` in the
//! representation and inverting the Maurer-Cartan coefficient matrices.

use super::chart::GroupChart;
use super::mat::{invert, solve_linear, Mat4};
use crate::error::{Error, Result};

/// Field components at one chart point: `left[a][mu]` is the `∂_mu`
/// component of the left-invariant field of generator `a`, and likewise for
/// `right`. The Maurer-Cartan coefficient matrices are kept for duality
/// checks.
#[derive(Debug, Clone)]
pub struct FieldSample {
    pub point: Vec<f64>,
    pub left: Vec<Vec<f64>>,
    pub right: Vec<Vec<f64>>,
    pub maurer_cartan_left: Vec<Vec<f64>>,
    pub maurer_cartan_right: Vec<Vec<f64>>,
}

/// Express a matrix in the span of the representation matrices.
fn lie_coords(chart: &GroupChart, m: &Mat4) -> Result<Vec<f64>> {
    let d = chart.dim();
    let gens: Vec<[f64; 16]> = (0..d)
        .map(|a| chart.rep().matrix(a).to_f64().map(|m| m.flatten()))
        .collect::<Result<_>>()?;
    let target = m.flatten();
    // normal equations of the 16×d least-squares system
    let mut gram = vec![vec![0.0; d]; d];
    let mut rhs = vec![0.0; d];
    for a in 0..d {
        for b in 0..d {
            gram[a][b] = (0..16).map(|k| gens[a][k] * gens[b][k]).sum();
        }
        rhs[a] = (0..16).map(|k| gens[a][k] * target[k]).sum();
    }
    let coords = solve_linear(&gram, &rhs)
        .map_err(|_| Error::Numeric("representation matrices are degenerate".into()))?;
    // the solution must be exact: the matrix has to lie in the image
    let mut residual: f64 = 0.0;
    for k in 0..16 {
        let got: f64 = (0..d).map(|a| coords[a] * gens[a][k]).sum();
        residual = residual.max((got - target[k]).abs());
    }
    if residual > 1e-9 {
        return Err(Error::Numeric(format!(
            "matrix is not in the representation image (residual {residual:.3e})"
        )));
    }
    Ok(coords)
}

/// Compute both invariant frames at a point.
pub fn invariant_fields(chart: &GroupChart, point: &[f64]) -> Result<FieldSample> {
    let d = chart.dim();
    let derivs = chart.derivatives(point)?;
    let ginv = chart.group_element_inverse(point)?;
    // Maurer-Cartan coefficients: columns indexed by the coordinate
    let mut lmat = vec![vec![0.0; d]; d]; // lmat[a][mu]
    let mut rmat = vec![vec![0.0; d]; d];
    for (mu, dmu) in derivs.iter().enumerate() {
        let l = lie_coords(chart, &ginv.mul(dmu))?;
        let r = lie_coords(chart, &dmu.mul(&ginv))?;
        for a in 0..d {
            lmat[a][mu] = l[a];
            rmat[a][mu] = r[a];
        }
    }
    let linv = invert(&lmat)?; // linv[mu][a]
    let rinv = invert(&rmat)?;
    let left = (0..d)
        .map(|a| (0..d).map(|mu| linv[mu][a]).collect())
        .collect();
    let right = (0..d)
        .map(|a| (0..d).map(|mu| rinv[mu][a]).collect())
        .collect();
    Ok(FieldSample {
        point: point.to_vec(),
        left,
        right,
        maurer_cartan_left: lmat,
        maurer_cartan_right: rmat,
    })
}

/// The closed-form Euclidean frames in the standard chart: the comparison
/// target for the numeric field computation. Components are ordered
/// (x1, x2, x3, th1, th2, th3) and generators (J1, J2, J3, P1, P2, P3);
/// valid away from |th2| = pi/2.
pub fn euclid3_reference_frames(point: &[f64]) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let (x1, x2, x3) = (point[0], point[1], point[2]);
    let (t1, t2, t3) = (point[3], point[4], point[5]);
    let (s1, c1) = t1.sin_cos();
    let (s2, c2) = t2.sin_cos();
    let (s3, c3) = t3.sin_cos();
    let mut left = vec![vec![0.0; 6]; 6];
    let mut right = vec![vec![0.0; 6]; 6];
    // X^L_J1 = (cos t3 / cos t2)(d_t1 - sin t2 d_t3) + sin t3 d_t2
    left[0][3] = c3 / c2;
    left[0][4] = s3;
    left[0][5] = -c3 * s2 / c2;
    // X^L_J2 = (sin t3 / cos t2)(-d_t1 + sin t2 d_t3) + cos t3 d_t2
    left[1][3] = -s3 / c2;
    left[1][4] = c3;
    left[1][5] = s3 * s2 / c2;
    // X^L_J3 = d_t3
    left[2][5] = 1.0;
    // X^L_P1 = cos t2 cos t3 d_x1 + (sin t1 sin t2 cos t3 + cos t1 sin t3) d_x2
    //          - (cos t1 sin t2 cos t3 - sin t1 sin t3) d_x3
    left[3][0] = c2 * c3;
    left[3][1] = s1 * s2 * c3 + c1 * s3;
    left[3][2] = -(c1 * s2 * c3 - s1 * s3);
    // X^L_P2 = -cos t2 sin t3 d_x1 - (sin t1 sin t2 sin t3 - cos t1 cos t3) d_x2
    //          + (cos t1 sin t2 sin t3 + sin t1 cos t3) d_x3
    left[4][0] = -c2 * s3;
    left[4][1] = -(s1 * s2 * s3 - c1 * c3);
    left[4][2] = c1 * s2 * s3 + s1 * c3;
    // X^L_P3 = sin t2 d_x1 - cos t2 (sin t1 d_x2 - cos t1 d_x3)
    left[5][0] = s2;
    left[5][1] = -c2 * s1;
    left[5][2] = c2 * c1;
    // X^R_J1 = -x3 d_x2 + x2 d_x3 + d_t1
    right[0][1] = -x3;
    right[0][2] = x2;
    right[0][3] = 1.0;
    // X^R_J2 = x3 d_x1 - x1 d_x3 + cos t1 d_t2 + (sin t1 / cos t2)(sin t2 d_t1 - d_t3)
    right[1][0] = x3;
    right[1][2] = -x1;
    right[1][4] = c1;
    right[1][3] = s1 * s2 / c2;
    right[1][5] = -s1 / c2;
    // X^R_J3 = -x2 d_x1 + x1 d_x2 + sin t1 d_t2 + (cos t1 / cos t2)(-sin t2 d_t1 + d_t3)
    right[2][0] = -x2;
    right[2][1] = x1;
    right[2][4] = s1;
    right[2][3] = -c1 * s2 / c2;
    right[2][5] = c1 / c2;
    // X^R_Pi = d_xi
    right[3][0] = 1.0;
    right[4][1] = 1.0;
    right[5][2] = 1.0;
    (left, right)
}
