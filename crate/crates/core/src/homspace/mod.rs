//! Numeric group layer: exponential-product charts, invariant vector fields,
//! Sklyanin brackets and the reproduction of Poisson homogeneous space
//! bracket tables.

mod chart;
mod fields;
mod mat;
mod rep;
mod sklyanin;

pub use chart::{ChartFactor, FactorKind, GroupChart};
pub use fields::{euclid3_reference_frames, invariant_fields, FieldSample};
pub use mat::{invert, solve_linear, Mat4, RatMat4};
pub use rep::MatrixRep;
pub use sklyanin::{
    fit_bracket, max_abs_bracket, rationalize, verify_phs, FittedTable, PairDeviation, PhsReport,
    SamplePlan, SklyaninEvaluator,
};

pub mod charts {
    //! The two catalog charts. Generators act on column vectors
    //! `(1, x^1, x^2, x^3)` (Euclidean) or `(1, x^0, x^1, x^2)` (Poincare,
    //! Lorentz block preserving diag(+,−,−)); translations sit in the first
    //! column, so `exp(x P)` shifts the corresponding coordinate.

    use super::rep::unit;
    use super::{GroupChart, MatrixRep};
    use crate::catalog;
    use crate::error::Result;

    /// Faithful 4×4 representation of euclid3: `P_i = E_{i,0}`,
    /// `J_1 = E_{3,2} − E_{2,3}`, `J_2 = E_{1,3} − E_{3,1}`,
    /// `J_3 = E_{2,1} − E_{1,2}`.
    pub fn euclid3_rep() -> Result<MatrixRep> {
        let j1 = unit(3, 2).sub(&unit(2, 3));
        let j2 = unit(1, 3).sub(&unit(3, 1));
        let j3 = unit(2, 1).sub(&unit(1, 2));
        let p = |i: usize| unit(i, 0);
        MatrixRep::new(
            catalog::euclid3(),
            vec![j1, j2, j3, p(1), p(2), p(3)],
            "euclidean(+,+,+)",
        )
    }

    /// The chart `g = exp(x1 P1) exp(x2 P2) exp(x3 P3) exp(th1 J1) exp(th2 J2) exp(th3 J3)`.
    /// Rotation angles are valid away from `|th2| = pi/2` where the frame
    /// degenerates.
    pub fn euclid3_chart() -> Result<GroupChart> {
        GroupChart::new(
            euclid3_rep()?,
            vec![
                ("x1", 3),
                ("x2", 4),
                ("x3", 5),
                ("th1", 0),
                ("th2", 1),
                ("th3", 2),
            ],
        )
    }

    /// Faithful 4×4 representation of poincare21 on `(1, x^0, x^1, x^2)`:
    /// `P_a = E_{a+1,0}`, rotation `J = E_{3,2} − E_{2,3}`, boosts
    /// `K_1 = E_{2,1} + E_{1,2}`, `K_2 = E_{3,1} + E_{1,3}`.
    pub fn poincare21_rep() -> Result<MatrixRep> {
        let j = unit(3, 2).sub(&unit(2, 3));
        let k1 = unit(2, 1).add(&unit(1, 2));
        let k2 = unit(3, 1).add(&unit(1, 3));
        let p = |a: usize| unit(a + 1, 0);
        MatrixRep::new(
            catalog::poincare21(),
            vec![j, k1, k2, p(0), p(1), p(2)],
            "lorentzian(+,-,-)",
        )
    }

    /// The chart mirroring the Euclidean order: translations first, then the
    /// rotation and the two boosts,
    /// `g = exp(x0 P0) exp(x1 P1) exp(x2 P2) exp(phi J) exp(eta1 K1) exp(eta2 K2)`.
    pub fn poincare21_chart() -> Result<GroupChart> {
        GroupChart::new(
            poincare21_rep()?,
            vec![
                ("x0", 3),
                ("x1", 4),
                ("x2", 5),
                ("phi", 0),
                ("eta1", 1),
                ("eta2", 2),
            ],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::charts::{euclid3_chart, euclid3_rep, poincare21_chart, poincare21_rep};
    use super::*;
    use crate::catalog;
    use crate::scalar::Var;
    use std::collections::BTreeMap;

    #[test]
    fn representations_are_exact() {
        // constructors run the exact fidelity check; failure would error
        assert_eq!(euclid3_rep().unwrap().dim(), 6);
        assert_eq!(poincare21_rep().unwrap().dim(), 6);
    }

    #[test]
    fn poincare_case0_bracket_table() {
        let chart = poincare21_chart().unwrap();
        let r = catalog::get("poincare21.case0").unwrap().r_matrix().unwrap();
        let target = catalog::get("poincare21.case0.phs")
            .unwrap()
            .poisson_target()
            .unwrap();
        let report = verify_phs(&chart, &r, &BTreeMap::new(), &target, &SamplePlan::default())
            .unwrap();
        assert!(report.pass, "case 0 max dev {}", report.max_deviation);
    }

    #[test]
    fn poincare_linear_cases_and_dd_presets() {
        let chart = poincare21_chart().unwrap();
        let plan = SamplePlan::default();
        for case in [2usize, 6, 7] {
            let r = catalog::get(&format!("poincare21.case{case}"))
                .unwrap()
                .r_matrix()
                .unwrap();
            let target = catalog::get(&format!("poincare21.case{case}.phs"))
                .unwrap()
                .poisson_target()
                .unwrap();
            let binding: BTreeMap<Var, f64> = catalog::dd_preset(case).into_iter().collect();
            let report = verify_phs(&chart, &r, &binding, &target, &plan).unwrap();
            assert!(
                report.pass,
                "case {case} max dev {}",
                report.max_deviation
            );
        }
    }

    #[test]
    fn poincare_quadratic_case_one() {
        let chart = poincare21_chart().unwrap();
        let r = catalog::get("poincare21.case1").unwrap().r_matrix().unwrap();
        let target = catalog::get("poincare21.case1.phs")
            .unwrap()
            .poisson_target()
            .unwrap();
        let binding: BTreeMap<Var, f64> = catalog::dd_preset(1).into_iter().collect();
        let report = verify_phs(&chart, &r, &binding, &target, &SamplePlan::default()).unwrap();
        assert!(report.pass, "case 1 max dev {}", report.max_deviation);
        // the quadratic table is also recoverable by fitting
        let coords: Vec<String> = ["x0", "x1", "x2"].map(String::from).to_vec();
        let fitted =
            fit_bracket(&chart, &r, &binding, &coords, 2, &SamplePlan::default()).unwrap();
        assert!(fitted.residual < 1e-8);
        assert!(fitted.rationalized.jacobiator().is_empty());
    }

    #[test]
    fn coisotropic_brackets_project_to_translations() {
        // at fixed x, the x-x brackets of coisotropic cases cannot depend on
        // the rotation-sector coordinates
        let chart = euclid3_chart().unwrap();
        let r = catalog::get("euclid3.classII").unwrap().r_matrix().unwrap();
        let eval = SklyaninEvaluator::new(&chart, &r, &BTreeMap::new()).unwrap();
        let x = [0.37, -0.81, 0.52];
        let plan = SamplePlan {
            points: 50,
            ..SamplePlan::default()
        };
        let mut values = Vec::new();
        for p in plan.points(3) {
            let point = [x[0], x[1], x[2], p[0], p[1], p[2]];
            values.push(eval.bracket_at(&point, 0, 1).unwrap());
        }
        let mean: f64 = values.iter().sum::<f64>() / values.len() as f64;
        let var: f64 = values
            .iter()
            .map(|v| (v - mean) * (v - mean))
            .sum::<f64>()
            / values.len() as f64;
        assert!(var < 1e-18, "variance {var:.3e}");
        assert!((mean - 2.0 * x[2]).abs() < 1e-9);
    }
}
