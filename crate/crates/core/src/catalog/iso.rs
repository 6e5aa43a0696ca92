//! Explicit basis isomorphisms between catalog algebras, with exact
//! invertibility and bracket-preservation checks at construction.

use crate::algebra::{wedge, wedge3, Bivector, LieAlgebra, Trivector, Vector};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Invertible linear map on generators, stored as the images of the source
/// basis in target coordinates together with the precomputed inverse images.
#[derive(Debug, Clone)]
pub struct BasisIso {
    name: String,
    source: String,
    target: String,
    images: Vec<Vector>,
    inverse_images: Vec<Vector>,
}

impl BasisIso {
    /// Invertibility only, no bracket check: the bootstrap for source
    /// presentations that are defined as pullbacks through the map itself.
    pub fn new_unverified(
        name: &str,
        source: &str,
        target: &str,
        images: Vec<Vector>,
    ) -> Result<BasisIso> {
        let d = images.len();
        if images.iter().any(|v| v.dim() != d) {
            return Err(Error::Structural(format!(
                "isomorphism `{name}` has mismatched dimensions"
            )));
        }
        let matrix: Vec<Vec<Scalar>> = (0..d)
            .map(|row| (0..d).map(|col| images[col].coeff(row).clone()).collect())
            .collect();
        let inv = invert_scalar_matrix(&matrix).ok_or_else(|| {
            Error::Structural(format!("isomorphism `{name}` is not invertible"))
        })?;
        let inverse_images: Vec<Vector> = (0..d)
            .map(|col| Vector::from_coeffs((0..d).map(|row| inv[row][col].clone()).collect()))
            .collect();
        Ok(BasisIso {
            name: name.to_string(),
            source: source.to_string(),
            target: target.to_string(),
            images,
            inverse_images,
        })
    }

    /// Build and verify: the map must be invertible and intertwine the two
    /// bracket tables, symbolically in all parameters.
    pub fn new(
        name: &str,
        source: &LieAlgebra,
        target: &LieAlgebra,
        images: Vec<Vector>,
    ) -> Result<BasisIso> {
        let d = source.dim();
        if target.dim() != d || images.len() != d || images.iter().any(|v| v.dim() != d) {
            return Err(Error::Structural(format!(
                "isomorphism `{name}` has mismatched dimensions"
            )));
        }
        let matrix: Vec<Vec<Scalar>> = (0..d)
            .map(|row| (0..d).map(|col| images[col].coeff(row).clone()).collect())
            .collect();
        let inv = invert_scalar_matrix(&matrix).ok_or_else(|| {
            Error::Structural(format!("isomorphism `{name}` is not invertible"))
        })?;
        let inverse_images: Vec<Vector> = (0..d)
            .map(|col| Vector::from_coeffs((0..d).map(|row| inv[row][col].clone()).collect()))
            .collect();
        let iso = BasisIso {
            name: name.to_string(),
            source: source.name().to_string(),
            target: target.name().to_string(),
            images,
            inverse_images,
        };
        for i in 0..d {
            for j in (i + 1)..d {
                let lhs = iso.push_vector(source.bracket_basis(i, j))?;
                let rhs = target.bracket(&iso.images[i], &iso.images[j])?;
                if lhs != rhs {
                    return Err(Error::Structural(format!(
                        "map `{name}` does not preserve the bracket at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(iso)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn target(&self) -> &str {
        &self.target
    }

    pub fn image_of_basis(&self, i: usize) -> &Vector {
        &self.images[i]
    }

    pub fn push_vector(&self, x: &Vector) -> Result<Vector> {
        let d = self.images.len();
        if x.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: x.dim(),
            });
        }
        let mut out = Vector::zero(d);
        for i in 0..d {
            if !x.coeff(i).is_zero() {
                out = out.add(&self.images[i].scale(x.coeff(i)))?;
            }
        }
        Ok(out)
    }

    pub fn pull_vector(&self, x: &Vector) -> Result<Vector> {
        let d = self.images.len();
        if x.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: x.dim(),
            });
        }
        let mut out = Vector::zero(d);
        for i in 0..d {
            if !x.coeff(i).is_zero() {
                out = out.add(&self.inverse_images[i].scale(x.coeff(i)))?;
            }
        }
        Ok(out)
    }

    pub fn push_bivector(&self, r: &Bivector) -> Result<Bivector> {
        let d = self.images.len();
        if r.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: r.dim(),
            });
        }
        let mut out = Bivector::zero(d);
        for (a, b, c) in r.terms() {
            let w = wedge(&self.images[a], &self.images[b])?;
            out = out.add(&w.scale(c))?;
        }
        Ok(out)
    }

    pub fn pull_bivector(&self, r: &Bivector) -> Result<Bivector> {
        let d = self.images.len();
        let mut out = Bivector::zero(d);
        for (a, b, c) in r.terms() {
            let w = wedge(&self.inverse_images[a], &self.inverse_images[b])?;
            out = out.add(&w.scale(c))?;
        }
        Ok(out)
    }

    pub fn push_trivector(&self, t: &Trivector) -> Result<Trivector> {
        let d = self.images.len();
        if t.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: t.dim(),
            });
        }
        let mut out = Trivector::zero(d);
        for (a, b, c, v) in t.terms() {
            let w = wedge3(&self.images[a], &self.images[b], &self.images[c])?;
            out = out.add(&w.scale(v))?;
        }
        Ok(out)
    }

    /// The source bracket table transported from the target: used to realize
    /// source presentations that are only defined through the map.
    pub fn pullback_algebra(
        &self,
        name: &str,
        basis: Vec<String>,
        target: &LieAlgebra,
    ) -> Result<LieAlgebra> {
        let d = self.images.len();
        let mut table = vec![vec![Vector::zero(d); d]; d];
        for i in 0..d {
            for j in 0..d {
                let bracket_target = target.bracket(&self.images[i], &self.images[j])?;
                table[i][j] = self.pull_vector(&bracket_target)?;
            }
        }
        LieAlgebra::from_table(name, basis, target.params().to_vec(), table)
    }
}

/// Exact Gaussian elimination over the rational-function field.
pub fn invert_scalar_matrix(m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return None;
    }
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut inv: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        for j in 0..n {
            a[col][j] = a[col][j].checked_div(&pivot).ok()?;
            inv[col][j] = inv[col][j].checked_div(&pivot).ok()?;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                a[r][j] = &a[r][j] - &(&factor * &a[col][j]);
                inv[r][j] = &inv[r][j] - &(&factor * &inv[col][j]);
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn scalar_matrix_inverse_with_parameters() {
        let k = Scalar::param("kappa");
        let m = vec![
            vec![Scalar::zero(), k.clone()],
            vec![Scalar::one().checked_div(&k).unwrap(), Scalar::zero()],
        ];
        let inv = invert_scalar_matrix(&m).unwrap();
        assert_eq!(inv[0][1], k.clone());
        assert_eq!(inv[1][0], Scalar::one().checked_div(&k).unwrap());
        // singular matrix
        let s = vec![
            vec![Scalar::one(), Scalar::one()],
            vec![Scalar::one(), Scalar::one()],
        ];
        assert!(invert_scalar_matrix(&s).is_none());
    }

    #[test]
    fn identity_iso_acts_trivially() {
        let e3 = catalog::euclid3();
        let images = (0..6).map(|i| Vector::basis(6, i)).collect();
        let iso = BasisIso::new("id", &e3, &e3, images).unwrap();
        let r = catalog::get("euclid3.classII").unwrap().r_matrix().unwrap();
        assert_eq!(iso.push_bivector(&r).unwrap(), r);
        let v = Vector::basis(6, 2);
        assert_eq!(iso.push_vector(&v).unwrap(), v);
    }

    #[test]
    fn bracket_preservation_is_enforced() {
        let e3 = catalog::euclid3();
        // spoiled map: swap J1 and P1 without compensating
        let mut images: Vec<Vector> = (0..6).map(|i| Vector::basis(6, i)).collect();
        images.swap(0, 3);
        assert!(BasisIso::new("bad", &e3, &e3, images).is_err());
    }

    #[test]
    fn pushforward_commutes_with_the_schouten_bracket() {
        use crate::bialgebra::schouten;
        let iso = catalog::get("so31.csiso").unwrap().basis_iso().unwrap();
        let cs = catalog::get("so31cs").unwrap().algebra().unwrap();
        let so = catalog::so31();
        let r = catalog::get("so31cs.caseA").unwrap().r_matrix().unwrap();
        let lhs = iso.push_trivector(&schouten(&cs, &r).unwrap()).unwrap();
        let rhs = schouten(&so, &iso.push_bivector(&r).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
