//! Sklyanin bracket evaluation on chart coordinates, verification against
//! closed-form Poisson tables, and least-squares recovery of bracket tables
//! from samples.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::chart::GroupChart;
use super::fields::{invariant_fields, FieldSample};
use super::mat::solve_linear;
use crate::algebra::Bivector;
use crate::catalog::PoissonTarget;
use crate::error::{Error, Result};
use crate::scalar::{Poly, Rat, Var};

/// Deterministic sampling plan: uniform points in `[-1, 1]` per coordinate.
#[derive(Debug, Clone)]
pub struct SamplePlan {
    pub points: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for SamplePlan {
    fn default() -> SamplePlan {
        SamplePlan {
            points: 100,
            seed: 0xD1D0,
            tol: 1e-9,
        }
    }
}

impl SamplePlan {
    pub fn with_seed(mut self, seed: u64) -> SamplePlan {
        self.seed = seed;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> SamplePlan {
        self.tol = tol;
        self
    }

    pub fn points(&self, dim: usize) -> Vec<Vec<f64>> {
        let mut rng = StdRng::seed_from_u64(self.seed);
        (0..self.points)
            .map(|_| (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect())
            .collect()
    }
}

/// Numeric Sklyanin bracket for one r-matrix on one chart, with all symbolic
/// parameters bound to values.
pub struct SklyaninEvaluator<'a> {
    chart: &'a GroupChart,
    /// full antisymmetric coefficient matrix of the r-matrix
    rho: Vec<Vec<f64>>,
}

impl<'a> SklyaninEvaluator<'a> {
    pub fn new(
        chart: &'a GroupChart,
        r: &Bivector,
        binding: &BTreeMap<Var, f64>,
    ) -> Result<SklyaninEvaluator<'a>> {
        let d = chart.dim();
        if r.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: r.dim(),
            });
        }
        let env = |v: Var| binding.get(&v).copied();
        let mut rho = vec![vec![0.0; d]; d];
        for (a, b, c) in r.terms() {
            let value = c.eval_f64(&env)?;
            rho[a][b] += value;
            rho[b][a] -= value;
        }
        Ok(SklyaninEvaluator { chart, rho })
    }

    pub fn chart(&self) -> &GroupChart {
        self.chart
    }

    /// `{q^i, q^j}` at the point:
    /// `Σ ρ^{ab} (X^L_a q^i · X^L_b q^j − X^R_a q^i · X^R_b q^j)`.
    pub fn bracket(&self, sample: &FieldSample, i: usize, j: usize) -> f64 {
        let d = self.chart.dim();
        let mut acc = 0.0;
        for a in 0..d {
            for b in 0..d {
                let rho = self.rho[a][b];
                if rho == 0.0 {
                    continue;
                }
                acc += rho
                    * (sample.left[a][i] * sample.left[b][j]
                        - sample.right[a][i] * sample.right[b][j]);
            }
        }
        acc
    }

    pub fn bracket_at(&self, point: &[f64], i: usize, j: usize) -> Result<f64> {
        let sample = invariant_fields(self.chart, point)?;
        Ok(self.bracket(&sample, i, j))
    }
}

/// Outcome of comparing the Sklyanin bracket against a closed-form table.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PhsReport {
    pub pairs: Vec<PairDeviation>,
    pub max_deviation: f64,
    pub tol: f64,
    pub points: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct PairDeviation {
    pub lhs: String,
    pub rhs: String,
    pub max_abs_error: f64,
}

/// Evaluate `sklyanin({x^i, x^j}) − target^{ij}` over the sample plan.
/// Failures are reported in the result, not raised.
pub fn verify_phs(
    chart: &GroupChart,
    r: &Bivector,
    binding: &BTreeMap<Var, f64>,
    target: &PoissonTarget,
    plan: &SamplePlan,
) -> Result<PhsReport> {
    let eval = SklyaninEvaluator::new(chart, r, binding)?;
    let coords = target.coords();
    let chart_index: Vec<usize> = coords
        .iter()
        .map(|name| {
            chart.coord_index(name).ok_or_else(|| {
                Error::Structural(format!("target coordinate `{name}` is not on the chart"))
            })
        })
        .collect::<Result<_>>()?;
    let mut pairs: Vec<PairDeviation> = Vec::new();
    for i in 0..coords.len() {
        for j in (i + 1)..coords.len() {
            pairs.push(PairDeviation {
                lhs: coords[i].clone(),
                rhs: coords[j].clone(),
                max_abs_error: 0.0,
            });
        }
    }
    for point in plan.points(chart.dim()) {
        let sample = invariant_fields(chart, &point)?;
        let target_point: Vec<f64> = chart_index.iter().map(|&ci| point[ci]).collect();
        let mut k = 0;
        for i in 0..coords.len() {
            for j in (i + 1)..coords.len() {
                let got = eval.bracket(&sample, chart_index[i], chart_index[j]);
                let want = target.eval(i, j, &target_point, binding)?;
                let err = (got - want).abs();
                if err > pairs[k].max_abs_error {
                    pairs[k].max_abs_error = err;
                }
                k += 1;
            }
        }
    }
    let max_deviation = pairs.iter().map(|p| p.max_abs_error).fold(0.0, f64::max);
    Ok(PhsReport {
        pairs,
        max_deviation,
        tol: plan.tol,
        points: plan.points,
        pass: max_deviation < plan.tol,
    })
}

/// Largest |{q^i, q^j}| over the plan for one coordinate pair; used to check
/// brackets that must vanish identically.
pub fn max_abs_bracket(
    chart: &GroupChart,
    r: &Bivector,
    binding: &BTreeMap<Var, f64>,
    ci: usize,
    cj: usize,
    plan: &SamplePlan,
) -> Result<f64> {
    let eval = SklyaninEvaluator::new(chart, r, binding)?;
    let mut worst: f64 = 0.0;
    for point in plan.points(chart.dim()) {
        worst = worst.max(eval.bracket_at(&point, ci, cj)?.abs());
    }
    Ok(worst)
}

/// A bracket table recovered from samples: raw least-squares coefficients
/// plus a rationalized exact table for symbolic checks.
#[derive(Debug, Clone)]
pub struct FittedTable {
    pub coords: Vec<String>,
    /// monomial labels, matching the coefficient vectors
    pub monomials: Vec<String>,
    /// per coordinate pair (i, j) with i < j
    pub coefficients: BTreeMap<(usize, usize), Vec<f64>>,
    pub residual: f64,
    pub rationalized: PoissonTarget,
}

impl FittedTable {
    pub fn display(&self) -> Vec<String> {
        self.rationalized.display()
    }
}

/// Degree-<=2 monomial exponent patterns over `k` coordinates.
fn monomial_patterns(k: usize, degree: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; k]];
    if degree >= 1 {
        for i in 0..k {
            let mut m = vec![0; k];
            m[i] = 1;
            out.push(m);
        }
    }
    if degree >= 2 {
        for i in 0..k {
            for j in i..k {
                let mut m = vec![0; k];
                m[i] += 1;
                m[j] += 1;
                out.push(m);
            }
        }
    }
    out
}

/// Recover the closed-form bracket table `{x^i, x^j}` as polynomials of the
/// given degree in the fit coordinates, by least squares over the sample
/// plan. Errors when the residual exceeds the plan tolerance scaled by the
/// sample magnitude.
pub fn fit_bracket(
    chart: &GroupChart,
    r: &Bivector,
    binding: &BTreeMap<Var, f64>,
    fit_coords: &[String],
    degree: usize,
    plan: &SamplePlan,
) -> Result<FittedTable> {
    let eval = SklyaninEvaluator::new(chart, r, binding)?;
    let chart_index: Vec<usize> = fit_coords
        .iter()
        .map(|name| {
            chart.coord_index(name).ok_or_else(|| {
                Error::Structural(format!("fit coordinate `{name}` is not on the chart"))
            })
        })
        .collect::<Result<_>>()?;
    let k = fit_coords.len();
    let patterns = monomial_patterns(k, degree);
    let n_mono = patterns.len();
    let points = plan.points(chart.dim());
    if points.len() <= n_mono {
        return Err(Error::Numeric(format!(
            "{} samples cannot determine {} monomial coefficients",
            points.len(),
            n_mono
        )));
    }
    // design matrix rows are shared across pairs
    let design: Vec<Vec<f64>> = points
        .iter()
        .map(|p| {
            patterns
                .iter()
                .map(|pat| {
                    pat.iter()
                        .enumerate()
                        .map(|(c, &e)| p[chart_index[c]].powi(e as i32))
                        .product()
                })
                .collect()
        })
        .collect();
    let field_samples: Vec<FieldSample> = points
        .iter()
        .map(|p| invariant_fields(chart, p))
        .collect::<Result<_>>()?;

    // least squares for every pair first: the residual gate decides whether
    // a polynomial table of this degree exists at all
    let mut coefficients = BTreeMap::new();
    let mut residual: f64 = 0.0;
    for i in 0..k {
        for j in (i + 1)..k {
            let values: Vec<f64> = field_samples
                .iter()
                .map(|s| eval.bracket(s, chart_index[i], chart_index[j]))
                .collect();
            // normal equations
            let mut gram = vec![vec![0.0; n_mono]; n_mono];
            let mut rhs = vec![0.0; n_mono];
            for (row, &v) in design.iter().zip(&values) {
                for a in 0..n_mono {
                    for b in 0..n_mono {
                        gram[a][b] += row[a] * row[b];
                    }
                    rhs[a] += row[a] * v;
                }
            }
            let coeffs = solve_linear(&gram, &rhs)
                .map_err(|_| Error::Numeric("degenerate fit design".into()))?;
            for (row, &v) in design.iter().zip(&values) {
                let pred: f64 = (0..n_mono).map(|a| row[a] * coeffs[a]).sum();
                residual = residual.max((pred - v).abs());
            }
            coefficients.insert((i, j), coeffs);
        }
    }
    if residual > plan.tol * 100.0 {
        return Err(Error::NotPolynomial { degree, residual });
    }
    // exact polynomials from the rationalized coefficients
    let mut entries = Vec::new();
    for (&(i, j), coeffs) in &coefficients {
        let mut poly = Poly::zero();
        for (pat, &c) in patterns.iter().zip(coeffs) {
            if c.abs() < plan.tol {
                continue;
            }
            let rat = rationalize(c).ok_or_else(|| {
                Error::Numeric(format!("fitted coefficient {c} is not a small rational"))
            })?;
            let mut mono = Poly::constant(rat);
            for (ci, &e) in pat.iter().enumerate() {
                let v = Var::new(&fit_coords[ci]);
                for _ in 0..e {
                    mono = mono.mul(&Poly::var(v));
                }
            }
            poly = poly.add(&mono);
        }
        entries.push((i, j, poly));
    }
    let monomials = patterns
        .iter()
        .map(|pat| {
            let s: Vec<String> = pat
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(c, &e)| {
                    if e == 1 {
                        fit_coords[c].clone()
                    } else {
                        format!("{}^{}", fit_coords[c], e)
                    }
                })
                .collect();
            if s.is_empty() {
                "1".to_string()
            } else {
                s.join("*")
            }
        })
        .collect();
    let rationalized = PoissonTarget::new(fit_coords.to_vec(), vec![], entries)?;
    Ok(FittedTable {
        coords: fit_coords.to_vec(),
        monomials,
        coefficients,
        residual,
        rationalized,
    })
}

/// Continued-fraction rationalization of a fitted coefficient: accepts only
/// denominators up to 1000 within relative 1e-8, so fit noise cannot be
/// dressed up as an exact value.
pub fn rationalize(x: f64) -> Option<Rat> {
    let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, x.round() as i64, 1i64);
    let mut frac = x - x.round();
    for _ in 0..24 {
        let approx = p1 as f64 / q1 as f64;
        if (approx - x).abs() < 1e-8 * x.abs().max(1.0) {
            return Some(Rat::new(p1.into(), q1.into()));
        }
        if frac.abs() < 1e-12 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.round();
        frac = inv - a;
        let p2 = a as i64 * p1 + p0;
        let q2 = a as i64 * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if q1 > 1000 {
            return None;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::homspace::charts::euclid3_chart;

    fn no_params() -> BTreeMap<Var, f64> {
        BTreeMap::new()
    }

    #[test]
    fn class_ii_bracket_is_so3_type() {
        let chart = euclid3_chart().unwrap();
        let r = catalog::get("euclid3.classII").unwrap().r_matrix().unwrap();
        let eval = SklyaninEvaluator::new(&chart, &r, &no_params()).unwrap();
        let plan = SamplePlan::default();
        let mut worst: f64 = 0.0;
        for point in plan.points(6) {
            let sample = invariant_fields(&chart, &point).unwrap();
            // {x1, x2} = 2 x3 at every point
            let got = eval.bracket(&sample, 0, 1);
            worst = worst.max((got - 2.0 * point[2]).abs());
        }
        assert!(worst < 1e-9, "max deviation {worst:.3e}");
    }

    #[test]
    fn zero_r_matrix_gives_zero_brackets() {
        let chart = euclid3_chart().unwrap();
        let r = crate::algebra::Bivector::zero(6);
        let plan = SamplePlan { points: 10, ..SamplePlan::default() };
        for i in 0..6 {
            for j in 0..6 {
                if i != j {
                    let m = max_abs_bracket(&chart, &r, &no_params(), i, j, &plan).unwrap();
                    assert_eq!(m, 0.0);
                }
            }
        }
    }

    #[test]
    fn class_ii_angle_brackets_vanish() {
        let chart = euclid3_chart().unwrap();
        let r = catalog::get("euclid3.classII").unwrap().r_matrix().unwrap();
        let plan = SamplePlan { points: 25, ..SamplePlan::default() };
        // {x^i, th^j} and {th^i, th^j} all vanish
        for i in 0..6 {
            for j in 3..6 {
                if i == j {
                    continue;
                }
                let m = max_abs_bracket(&chart, &r, &no_params(), i, j, &plan).unwrap();
                assert!(m < 1e-9, "pair ({i}, {j}) deviates by {m:.3e}");
            }
        }
    }

    #[test]
    fn zero_r_matrix_verifies_against_zero_target() {
        let chart = euclid3_chart().unwrap();
        let target = PoissonTarget::new(
            vec!["x1".into(), "x2".into(), "x3".into()],
            vec![],
            vec![],
        )
        .unwrap();
        let plan = SamplePlan { points: 10, ..SamplePlan::default() };
        let report = verify_phs(
            &chart,
            &crate::algebra::Bivector::zero(6),
            &no_params(),
            &target,
            &plan,
        )
        .unwrap();
        assert!(report.pass);
        assert_eq!(report.max_deviation, 0.0);
    }

    #[test]
    fn verify_phs_class_ii_and_class_i() {
        let chart = euclid3_chart().unwrap();
        let plan = SamplePlan::default();
        let r2 = catalog::get("euclid3.classII").unwrap().r_matrix().unwrap();
        let t2 = catalog::get("euclid3.classII.phs").unwrap().poisson_target().unwrap();
        let report = verify_phs(&chart, &r2, &no_params(), &t2, &plan).unwrap();
        assert!(report.pass, "class II max dev {}", report.max_deviation);

        let alpha = Var::new("alpha");
        let rho = Var::new("rho");
        let r1 = catalog::get("euclid3.classI").unwrap().r_matrix().unwrap();
        let t1 = catalog::get("euclid3.classI.phs").unwrap().poisson_target().unwrap();
        for (a, r) in [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0)] {
            let mut binding = BTreeMap::new();
            binding.insert(alpha, a);
            binding.insert(rho, r);
            // a-part parameters vanish in the coisotropic family
            binding.insert(Var::new("a12"), 0.0);
            binding.insert(Var::new("a13"), 0.0);
            binding.insert(Var::new("a23"), 0.0);
            let report = verify_phs(&chart, &r1, &binding, &t1, &plan).unwrap();
            assert!(
                report.pass,
                "class I at ({a}, {r}): max dev {}",
                report.max_deviation
            );
        }
    }

    #[test]
    fn fit_recovers_class_ii_table() {
        let chart = euclid3_chart().unwrap();
        let r = catalog::get("euclid3.classII").unwrap().r_matrix().unwrap();
        let coords: Vec<String> = ["x1", "x2", "x3"].map(String::from).to_vec();
        let fitted = fit_bracket(&chart, &r, &no_params(), &coords, 2, &SamplePlan::default())
            .unwrap();
        assert!(fitted.residual < 1e-9);
        let expect = catalog::get("euclid3.classII.phs")
            .unwrap()
            .poisson_target()
            .unwrap();
        assert_eq!(fitted.rationalized, expect);
        assert!(fitted.rationalized.jacobiator().is_empty());
        // zero r-matrix fits to the zero table
        let zero = fit_bracket(
            &chart,
            &crate::algebra::Bivector::zero(6),
            &no_params(),
            &coords,
            2,
            &SamplePlan { points: 30, ..SamplePlan::default() },
        )
        .unwrap();
        assert!(zero
            .rationalized
            .entries()
            .all(|(_, _, p)| p.is_zero()));
    }

    #[test]
    fn non_projectable_brackets_refuse_to_fit() {
        // class III with a != 0 is not coisotropic: its x-x Sklyanin brackets
        // depend on the rotation coordinates, so no polynomial table in the
        // translations exists
        let chart = euclid3_chart().unwrap();
        let r = catalog::get("euclid3.classIII").unwrap().r_matrix().unwrap();
        let mut binding = BTreeMap::new();
        binding.insert(Var::new("a12"), 1.0);
        binding.insert(Var::new("a13"), 0.0);
        binding.insert(Var::new("a23"), 0.0);
        let coords: Vec<String> = ["x1", "x2", "x3"].map(String::from).to_vec();
        let err = fit_bracket(&chart, &r, &binding, &coords, 2, &SamplePlan::default())
            .unwrap_err();
        assert!(matches!(
            err,
            crate::error::Error::NotPolynomial { degree: 2, .. }
        ));
    }

    #[test]
    fn rationalize_snaps_small_fractions() {
        assert_eq!(rationalize(0.5).unwrap(), Rat::new(1.into(), 2.into()));
        assert_eq!(rationalize(-2.0).unwrap(), Rat::new((-2).into(), 1.into()));
        assert_eq!(
            rationalize(1.0 / 3.0).unwrap(),
            Rat::new(1.into(), 3.into())
        );
        assert!(rationalize(0.7234819462).is_none());
    }
}
