//! Flat-limit contraction: exact Laurent-coefficient extraction in the
//! curvature parameter. `scaled_limit(x, n)` is the `kappa^0` coefficient of
//! `kappa^n * x` at `kappa -> 0`; everything stays rational, no numerics.

use crate::algebra::{Bivector, LieAlgebra, Tensor2, Trivector, Vector};
use crate::error::{Error, Result};
use crate::scalar::{Scalar, Var};

/// Anything whose scalars can be rewritten wholesale.
pub trait ScalarMap: Sized {
    fn map_scalars_with<F>(&self, f: &mut F) -> Result<Self>
    where
        F: FnMut(&Scalar) -> Result<Scalar>;

    fn scalar_values(&self) -> Vec<Scalar>;
}

impl ScalarMap for Vector {
    fn map_scalars_with<F>(&self, f: &mut F) -> Result<Self>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        self.map_scalars(f)
    }

    fn scalar_values(&self) -> Vec<Scalar> {
        self.coeffs().to_vec()
    }
}

impl ScalarMap for Bivector {
    fn map_scalars_with<F>(&self, f: &mut F) -> Result<Self>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        self.map_scalars(f)
    }

    fn scalar_values(&self) -> Vec<Scalar> {
        self.terms().map(|(_, _, c)| c.clone()).collect()
    }
}

impl ScalarMap for Trivector {
    fn map_scalars_with<F>(&self, f: &mut F) -> Result<Self>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        self.map_scalars(f)
    }

    fn scalar_values(&self) -> Vec<Scalar> {
        self.terms().map(|(_, _, _, c)| c.clone()).collect()
    }
}

impl ScalarMap for Tensor2 {
    fn map_scalars_with<F>(&self, f: &mut F) -> Result<Self>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        self.map_scalars(f)
    }

    fn scalar_values(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let c = self.get(i, j);
                if !c.is_zero() {
                    out.push(c.clone());
                }
            }
        }
        out
    }
}

/// `kappa^0` coefficient of `kappa^shift * x` at `kappa -> 0`; errors with
/// the pole order when any coefficient still diverges.
pub fn scaled_limit<T: ScalarMap>(x: &T, kappa: Var, shift: i64) -> Result<T> {
    x.map_scalars_with(&mut |c: &Scalar| c.scaled_limit_at_zero(kappa, shift))
}

/// Minimal `n` for which `scaled_limit(x, n)` is finite and nonzero,
/// together with that limit.
pub fn auto_scale<T: ScalarMap>(x: &T, kappa: Var) -> Result<(i64, T)> {
    let orders: Vec<i64> = x
        .scalar_values()
        .iter()
        .filter_map(|c| c.order_in(kappa))
        .collect();
    let min_order = orders
        .iter()
        .min()
        .copied()
        .ok_or_else(|| Error::DegenerateInput("cannot scale the zero object".into()))?;
    let n = -min_order;
    let limit = scaled_limit(x, kappa, n)?;
    Ok((n, limit))
}

/// `kappa -> 0` of every structure constant; the result is re-verified for
/// the Jacobi identity.
pub fn contract_algebra(la: &LieAlgebra, kappa: Var, name: &str) -> Result<LieAlgebra> {
    let contracted =
        la.map_scalars(name, &mut |c: &Scalar| c.scaled_limit_at_zero(kappa, 0))?;
    if let Some(&(i, j, k)) = contracted.jacobi_defect().witness() {
        return Err(Error::JacobiViolation {
            algebra: name.to_string(),
            i,
            j,
            k,
        });
    }
    Ok(contracted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{grade_decompose, identify_stachura_class, StachuraClass};
    use crate::catalog;

    fn kappa() -> Var {
        Var::new("kappa")
    }

    fn case(label: &str) -> Bivector {
        catalog::get(&format!("so31.case{label}"))
            .unwrap()
            .r_matrix()
            .unwrap()
    }

    #[test]
    fn four_reference_limits() {
        let e3 = catalog::euclid3();
        let names = e3.basis().to_vec();
        // lim k r'_A = P3∧P2
        let (n, lim) = auto_scale(&case("A"), kappa()).unwrap();
        assert_eq!(n, 1);
        assert_eq!(lim.display_with(&names), "-P2∧P3");
        let mut expect = Bivector::zero(6);
        expect.add_term(5, 4, Scalar::one());
        assert_eq!(lim, expect);
        // lim r'_B = (1/2)(P1∧J1 + P2∧J2 + P3∧J3)
        let (n, lim) = auto_scale(&case("B"), kappa()).unwrap();
        assert_eq!(n, 0);
        let class_ii = catalog::get("euclid3.classII").unwrap().r_matrix().unwrap();
        assert_eq!(lim, class_ii.scale(&Scalar::from_rat(1, 2)));
        // lim k r'_C = (1/2) P3∧P1
        let (n, lim) = auto_scale(&case("C"), kappa()).unwrap();
        assert_eq!(n, 1);
        let mut expect = Bivector::zero(6);
        expect.add_term(5, 3, Scalar::from_rat(1, 2));
        assert_eq!(lim, expect);
        // lim k r'_D = ((1-mu^2)/(2mu)) P1∧P2
        let (n, lim) = auto_scale(&case("D"), kappa()).unwrap();
        assert_eq!(n, 1);
        let m = Scalar::param("mu");
        let coeff = (Scalar::one() - m.clone() * m.clone())
            .checked_div(&(Scalar::from_int(2) * m))
            .unwrap();
        let mut expect = Bivector::zero(6);
        expect.add_term(3, 4, coeff);
        assert_eq!(lim, expect);
    }

    #[test]
    fn divergence_and_degenerate_inputs() {
        // r'_A at n = 0 still has the 1/kappa pole
        let err = scaled_limit(&case("A"), kappa(), 0).unwrap_err();
        assert!(matches!(err, Error::LimitDivergent { pole_order: 1, .. }));
        // kappa-free bivectors pass through unchanged
        let r = catalog::get("euclid3.classII").unwrap().r_matrix().unwrap();
        assert_eq!(scaled_limit(&r, kappa(), 0).unwrap(), r);
        // the zero object cannot be auto-scaled
        assert!(matches!(
            auto_scale(&Bivector::zero(6), kappa()),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn pole_in_structure_constants_diverges() {
        use crate::algebra::LieAlgebra;
        let k = Scalar::param("kappa");
        let la = LieAlgebra::new(
            "pole",
            vec!["e1".into(), "e2".into(), "e3".into()],
            vec![kappa()],
            vec![(0, 1, vec![(2, Scalar::one().checked_div(&k).unwrap())])],
        )
        .unwrap();
        let err = contract_algebra(&la, kappa(), "flat").unwrap_err();
        assert!(matches!(err, Error::LimitDivergent { pole_order: 1, .. }));
    }

    #[test]
    fn so31_contracts_to_euclid3() {
        let so = catalog::so31();
        let contracted = contract_algebra(&so, kappa(), "euclid3").unwrap();
        assert!(contracted.structurally_equal(&catalog::euclid3()));
        // the Euclidean algebra is kappa-free, contraction is the identity
        let e3 = catalog::euclid3();
        let again = contract_algebra(&e3, kappa(), "euclid3").unwrap();
        assert!(again.structurally_equal(&e3));
    }

    #[test]
    fn casimirs_contract_to_euclidean_ones() {
        let so = catalog::so31();
        let e3 = catalog::euclid3();
        for which in ["c1", "c2"] {
            let c = catalog::casimir(&so, which).unwrap();
            let lim = scaled_limit(&c, kappa(), 0).unwrap();
            assert_eq!(lim, catalog::casimir(&e3, which).unwrap(), "{which}");
        }
    }

    #[test]
    fn contracted_cases_land_in_their_classes() {
        let e3 = catalog::euclid3();
        let h = catalog::rotation_subalgebra(&e3).unwrap();
        let t = catalog::translation_subalgebra(&e3).unwrap();
        for label in ["A", "C", "D"] {
            let (_, lim) = auto_scale(&case(label), kappa()).unwrap();
            assert_eq!(
                identify_stachura_class(&e3, &lim, &h, &t).unwrap(),
                StachuraClass::ClassIII,
                "case {label}"
            );
        }
        let (_, lim_b) = auto_scale(&case("B"), kappa()).unwrap();
        assert_eq!(
            identify_stachura_class(&e3, &lim_b, &h, &t).unwrap(),
            StachuraClass::ClassII {
                scale: Scalar::from_rat(1, 2)
            }
        );
    }

    #[test]
    fn contraction_commutes_with_grade_decomposition() {
        let so = catalog::so31();
        let e3 = catalog::euclid3();
        let h = catalog::rotation_subalgebra(&so).unwrap();
        let t = catalog::translation_subalgebra(&so).unwrap();
        for label in ["A", "B", "C", "D"] {
            let r = case(label);
            let (n, lim) = auto_scale(&r, kappa()).unwrap();
            let (la, lb, lc) = grade_decompose(&lim, &h, &t).unwrap();
            let (a, b, c) = grade_decompose(&r, &h, &t).unwrap();
            // scaled limit of each part, tolerating parts that wash out
            let part_limit = |p: &Bivector| scaled_limit(p, kappa(), n).unwrap();
            assert_eq!(part_limit(&a), la, "a-part of case {label}");
            assert_eq!(part_limit(&b), lb, "b-part of case {label}");
            assert_eq!(part_limit(&c), lc, "c-part of case {label}");
            let _ = e3.dim();
        }
    }

    #[test]
    fn case_d_pairing_diverges_and_others_do_not() {
        for label in ["A", "B", "C"] {
            let form = catalog::get(&format!("so31.case{label}.pairing"))
                .unwrap()
                .tensor()
                .unwrap();
            let lim = scaled_limit(&form, kappa(), 0).unwrap();
            assert_eq!(lim, form, "case {label} pairing is kappa-free");
        }
        let form_d = catalog::get("so31.caseD.pairing").unwrap().tensor().unwrap();
        let err = scaled_limit(&form_d, kappa(), 0).unwrap_err();
        assert!(matches!(err, Error::LimitDivergent { pole_order: 1, .. }));
    }
}
