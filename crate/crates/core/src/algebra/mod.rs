//! Structure-constant Lie algebras and the exact checks everything else
//! relies on: brackets, the Jacobi defect tensor and ad-invariance of
//! rank-2/3 tensors.

mod multivector;

pub use multivector::{
    wedge, wedge3, wedge_vector_bivector, Bivector, Tensor2, Tensor3, Trivector, Vector,
};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Var};

/// Finite-dimensional Lie algebra over exact scalars, given by an ordered
/// basis and the full bracket table `[e_i, e_j]`.
///
/// Antisymmetry is enforced by construction; the Jacobi identity is checked
/// eagerly by [`LieAlgebra::new`] and can be deferred with
/// [`LieAlgebra::new_unchecked`] for candidate structures that are going to
/// be tested explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    params: Vec<Var>,
    /// table[i][j] = [e_i, e_j]
    table: Vec<Vec<Vector>>,
}

/// Sparse bracket specification: `(i, j, [(k, c^k_ij)])` for `i < j`.
pub type BracketSpec = Vec<(usize, usize, Vec<(usize, Scalar)>)>;

impl LieAlgebra {
    pub fn new(
        name: &str,
        basis: Vec<String>,
        params: Vec<Var>,
        brackets: BracketSpec,
    ) -> Result<LieAlgebra> {
        let la = LieAlgebra::new_unchecked(name, basis, params, brackets)?;
        let defect = la.jacobi_defect();
        if let Some(&(i, j, k)) = defect.witness() {
            return Err(Error::JacobiViolation {
                algebra: la.name.clone(),
                i,
                j,
                k,
            });
        }
        Ok(la)
    }

    pub fn new_unchecked(
        name: &str,
        basis: Vec<String>,
        params: Vec<Var>,
        brackets: BracketSpec,
    ) -> Result<LieAlgebra> {
        let dim = basis.len();
        let mut table = vec![vec![Vector::zero(dim); dim]; dim];
        for (i, j, coeffs) in brackets {
            if i >= dim || j >= dim {
                return Err(Error::Structural(format!(
                    "bracket index out of range in algebra `{name}`"
                )));
            }
            if i == j {
                return Err(Error::Structural(format!(
                    "bracket [e_{i}, e_{i}] must vanish in algebra `{name}`"
                )));
            }
            let mut v = Vector::zero(dim);
            for (k, c) in coeffs {
                if k >= dim {
                    return Err(Error::Structural(format!(
                        "bracket target index out of range in algebra `{name}`"
                    )));
                }
                v.set(k, v.coeff(k) + &c);
            }
            table[i][j] = v.clone();
            table[j][i] = v.scale(&-Scalar::one());
        }
        Ok(LieAlgebra {
            name: name.to_string(),
            basis,
            params,
            table,
        })
    }

    /// Build directly from a full bracket table (antisymmetry verified).
    pub fn from_table(
        name: &str,
        basis: Vec<String>,
        params: Vec<Var>,
        table: Vec<Vec<Vector>>,
    ) -> Result<LieAlgebra> {
        let dim = basis.len();
        if table.len() != dim || table.iter().any(|row| row.len() != dim) {
            return Err(Error::Structural("bracket table shape mismatch".into()));
        }
        for i in 0..dim {
            for j in 0..dim {
                if table[i][j].dim() != dim {
                    return Err(Error::Structural("bracket value dimension mismatch".into()));
                }
                if table[i][j] != table[j][i].scale(&-Scalar::one()) {
                    return Err(Error::Structural(format!(
                        "bracket table not antisymmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(LieAlgebra {
            name: name.to_string(),
            basis,
            params,
            table,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn params(&self) -> &[Var] {
        &self.params
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn basis_vector(&self, index: usize) -> Vector {
        Vector::basis(self.dim(), index)
    }

    /// `[e_i, e_j]` straight from the table.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    /// Structure constant `c^k_{ij}`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.table[i][j].coeff(k)
    }

    /// Bilinear extension of the bracket.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        if x.dim() != self.dim() || y.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: if x.dim() != self.dim() { x.dim() } else { y.dim() },
            });
        }
        let mut out = Vector::zero(self.dim());
        for i in 0..self.dim() {
            if x.coeff(i).is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                if y.coeff(j).is_zero() {
                    continue;
                }
                let factor = x.coeff(i) * y.coeff(j);
                let v = &self.table[i][j];
                for k in 0..self.dim() {
                    if !v.coeff(k).is_zero() {
                        out.set(k, out.coeff(k) + &(&factor * v.coeff(k)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Jacobi defect `J_{ijk} = [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`
    /// for all `i < j < k`, kept sparse with the violating triples listed.
    pub fn jacobi_defect(&self) -> JacobiDefect {
        let d = self.dim();
        let mut entries = Vec::new();
        for i in 0..d {
            for j in (i + 1)..d {
                for k in (j + 1)..d {
                    let t1 = self.bracket(&self.table[i][j], &self.basis_vector(k)).unwrap();
                    let t2 = self.bracket(&self.table[j][k], &self.basis_vector(i)).unwrap();
                    let t3 = self.bracket(&self.table[k][i], &self.basis_vector(j)).unwrap();
                    let sum = t1.add(&t2).unwrap().add(&t3).unwrap();
                    if !sum.is_zero() {
                        entries.push(((i, j, k), sum));
                    }
                }
            }
        }
        JacobiDefect {
            dim: d,
            entries,
        }
    }

    /// `ad_{e_i}` applied to a rank-2 tensor by the Leibniz rule.
    pub fn ad_basis_tensor2(&self, i: usize, t: &Tensor2) -> Tensor2 {
        let d = self.dim();
        let mut out = Tensor2::zero(d);
        for a in 0..d {
            for b in 0..d {
                let c = t.get(a, b);
                if c.is_zero() {
                    continue;
                }
                let va = &self.table[i][a];
                for k in 0..d {
                    if !va.coeff(k).is_zero() {
                        out.add_to(k, b, &(va.coeff(k) * c));
                    }
                }
                let vb = &self.table[i][b];
                for k in 0..d {
                    if !vb.coeff(k).is_zero() {
                        out.add_to(a, k, &(vb.coeff(k) * c));
                    }
                }
            }
        }
        out
    }

    /// `ad_{e_i}` on a bivector, staying in wedge coordinates.
    pub fn ad_basis_bivector(&self, i: usize, r: &Bivector) -> Bivector {
        let d = self.dim();
        let mut out = Bivector::zero(d);
        for (a, b, c) in r.terms() {
            let va = &self.table[i][a];
            for k in 0..d {
                if !va.coeff(k).is_zero() {
                    out.add_term(k, b, va.coeff(k) * c);
                }
            }
            let vb = &self.table[i][b];
            for k in 0..d {
                if !vb.coeff(k).is_zero() {
                    out.add_term(a, k, vb.coeff(k) * c);
                }
            }
        }
        out
    }

    /// `ad_{e_i}` on a trivector.
    pub fn ad_basis_trivector(&self, i: usize, t: &Trivector) -> Trivector {
        let d = self.dim();
        let mut out = Trivector::zero(d);
        for (a, b, c, v) in t.terms() {
            for (slot, idx) in [(0usize, a), (1, b), (2, c)] {
                let w = &self.table[i][idx];
                for k in 0..d {
                    if w.coeff(k).is_zero() {
                        continue;
                    }
                    let coeff = w.coeff(k) * v;
                    match slot {
                        0 => out.add_term(k, b, c, coeff),
                        1 => out.add_term(a, k, c, coeff),
                        _ => out.add_term(a, b, k, coeff),
                    }
                }
            }
        }
        out
    }

    /// True iff every basis `ad` annihilates the tensor.
    pub fn is_ad_invariant_tensor2(&self, t: &Tensor2) -> bool {
        (0..self.dim()).all(|i| self.ad_basis_tensor2(i, t).is_zero())
    }

    /// True iff every basis `ad` annihilates the trivector.
    pub fn is_ad_invariant_trivector(&self, t: &Trivector) -> bool {
        (0..self.dim()).all(|i| self.ad_basis_trivector(i, t).is_zero())
    }

    /// Same basis names and same bracket table; ignores the display name.
    pub fn structurally_equal(&self, other: &LieAlgebra) -> bool {
        self.basis == other.basis && self.table == other.table
    }

    /// Map every structure constant, e.g. for contraction limits.
    pub fn map_scalars<F>(&self, name: &str, f: &mut F) -> Result<LieAlgebra>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        let mut table = Vec::with_capacity(self.dim());
        for row in &self.table {
            let mut new_row = Vec::with_capacity(self.dim());
            for v in row {
                new_row.push(v.map_scalars(f)?);
            }
            table.push(new_row);
        }
        Ok(LieAlgebra {
            name: name.to_string(),
            basis: self.basis.clone(),
            params: self.params.clone(),
            table,
        })
    }

    /// All structure constants, for pole scans.
    pub fn scalars(&self) -> impl Iterator<Item = &Scalar> {
        self.table
            .iter()
            .flat_map(|row| row.iter().flat_map(|v| v.coeffs().iter()))
    }
}

/// Result of the Jacobi scan: the nonvanishing defect vectors per triple.
#[derive(Debug, Clone)]
pub struct JacobiDefect {
    dim: usize,
    entries: Vec<((usize, usize, usize), Vector)>,
}

impl JacobiDefect {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn witness(&self) -> Option<&(usize, usize, usize)> {
        self.entries.first().map(|(t, _)| t)
    }

    pub fn entries(&self) -> &[((usize, usize, usize), Vector)] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn euclidean_brackets_match_commutation_rules() {
        let e3 = catalog::euclid3();
        let j1 = e3.basis_vector(0);
        let j2 = e3.basis_vector(1);
        let p1 = e3.basis_vector(3);
        let p2 = e3.basis_vector(4);
        assert_eq!(e3.bracket(&j1, &j2).unwrap(), e3.basis_vector(2));
        assert!(e3.bracket(&p1, &p2).unwrap().is_zero());
        assert!(e3.bracket(&j1, &j1).unwrap().is_zero());
        // bilinearity with symbolic coefficients
        let alpha = Scalar::param("alpha");
        let x = j1.scale(&alpha).add(&p2).unwrap();
        let lhs = e3.bracket(&x, &j2).unwrap();
        let rhs = e3
            .bracket(&j1, &j2)
            .unwrap()
            .scale(&alpha)
            .add(&e3.bracket(&p2, &j2).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let e3 = catalog::euclid3();
        let bad = Vector::zero(4);
        assert!(matches!(
            e3.bracket(&bad, &e3.basis_vector(0)),
            Err(Error::DimensionMismatch { expected: 6, got: 4 })
        ));
    }

    #[test]
    fn perturbed_structure_constants_fail_jacobi_with_witness() {
        // c^3_12 = 1 and c^1_23 = 1 close up fine; perturbing the first
        // bracket by c^2_12 = 1 breaks Jacobi on the triple (0, 1, 2)
        let clean = LieAlgebra::new_unchecked(
            "clean",
            vec!["e1".into(), "e2".into(), "e3".into()],
            vec![],
            vec![
                (0, 1, vec![(2, Scalar::one())]),
                (1, 2, vec![(0, Scalar::one())]),
            ],
        )
        .unwrap();
        assert!(clean.jacobi_defect().is_zero());
        let broken_spec: BracketSpec = vec![
            (0, 1, vec![(2, Scalar::one()), (1, Scalar::one())]),
            (1, 2, vec![(0, Scalar::one())]),
        ];
        let la = LieAlgebra::new_unchecked(
            "broken",
            vec!["e1".into(), "e2".into(), "e3".into()],
            vec![],
            broken_spec.clone(),
        )
        .unwrap();
        let defect = la.jacobi_defect();
        assert!(!defect.is_zero());
        assert_eq!(defect.witness(), Some(&(0, 1, 2)));
        // the defect vector is [[e1,e2],e3] + cyclic = e1
        assert_eq!(defect.entries()[0].1, Vector::basis(3, 0));
        // and the checked constructor rejects it
        assert!(matches!(
            LieAlgebra::new(
                "broken",
                vec!["e1".into(), "e2".into(), "e3".into()],
                vec![],
                broken_spec,
            ),
            Err(Error::JacobiViolation { .. })
        ));
    }

    #[test]
    fn ad_invariance_of_euclidean_casimirs() {
        let e3 = catalog::euclid3();
        let c1 = catalog::casimir(&e3, "c1").unwrap();
        let c2 = catalog::casimir(&e3, "c2").unwrap();
        assert!(e3.is_ad_invariant_tensor2(&c1));
        assert!(e3.is_ad_invariant_tensor2(&c2));
        // P1 ⊗ P1 alone is not invariant (ad_J2 moves it)
        let mut t = Tensor2::zero(6);
        t.set(3, 3, Scalar::one());
        assert!(!e3.is_ad_invariant_tensor2(&t));
        assert!(!e3.ad_basis_tensor2(1, &t).is_zero());
        // the zero tensor trivially is
        assert!(e3.is_ad_invariant_tensor2(&Tensor2::zero(6)));
    }
}
