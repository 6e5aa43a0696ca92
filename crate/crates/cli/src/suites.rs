//! The verification suites: each check exercises one identity or table from
//! the catalog and reports pass/fail with residuals.

use std::collections::BTreeMap;

use drinfeld::algebra::Bivector;
use drinfeld::bialgebra::{
    classify_yb, coboundary_delta, cocycle_defect, coisotropy_classify, cyb_tensor,
    identify_stachura_class, stachura_invariants, CoisotropyClass, StachuraClass,
    YangBaxterClass,
};
use drinfeld::catalog;
use drinfeld::contraction::{auto_scale, contract_algebra, scaled_limit};
use drinfeld::double::{assemble_double, DoubleSpec};
use drinfeld::error::Error;
use drinfeld::homspace::{
    charts, euclid3_reference_frames, fit_bracket, invariant_fields, max_abs_bracket, verify_phs,
    SamplePlan,
};
use drinfeld::scalar::{Rat, Scalar, Var};

use crate::report::{check, error, numeric, pass, CheckRecord, Status, VerificationReport};

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub seed: u64,
    pub tol: f64,
}

impl Default for SuiteOptions {
    fn default() -> SuiteOptions {
        SuiteOptions {
            seed: 0xD1D0,
            tol: 1e-9,
        }
    }
}

pub const SUITES: [&str; 4] = ["euclid", "poincare", "so31-contraction", "all"];

/// Run a named suite. Unknown names are a usage error (exit code 2 at the
/// CLI level).
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new(name, opts.seed, opts.tol);
    match name {
        "euclid" => euclid_suite(&mut report, opts),
        "poincare" => poincare_suite(&mut report, opts),
        "so31-contraction" => so31_suite(&mut report, opts),
        "all" => {
            euclid_suite(&mut report, opts);
            poincare_suite(&mut report, opts);
            so31_suite(&mut report, opts);
        }
        other => {
            return Err(Error::Structural(format!(
                "unknown suite `{other}` (expected euclid | poincare | so31-contraction | all)"
            )))
        }
    }
    report.finalize();
    Ok(report)
}

fn plan(opts: &SuiteOptions) -> SamplePlan {
    SamplePlan::default().with_seed(opts.seed).with_tol(opts.tol)
}

fn algebra_checks(report: &mut VerificationReport, id: &str, prefix: &str) {
    let entry = match catalog::get(id) {
        Ok(e) => e,
        Err(e) => {
            report.push(error(&format!("{prefix}.jacobi"), "plumbing", e));
            return;
        }
    };
    let la = entry.algebra().expect("algebra entry");
    report.push(check(
        &format!("{prefix}.jacobi"),
        "Jacobi identity of the structure constants, symbolically in all parameters",
        la.jacobi_defect().is_zero(),
        &format!("{} basis triples scanned", la.dim() * (la.dim() - 1) * (la.dim() - 2) / 6),
    ));
    for which in ["c1", "c2"] {
        match catalog::casimir(&la, which) {
            Ok(c) => report.push(check(
                &format!("{prefix}.casimir.{which}"),
                "quadratic Casimir is ad-invariant",
                la.is_ad_invariant_tensor2(&c),
                "Leibniz action of every generator vanishes",
            )),
            Err(e) => report.push(error(&format!("{prefix}.casimir.{which}"), "plumbing", e)),
        }
    }
}

// ---------------------------------------------------------------------------
// euclid
// ---------------------------------------------------------------------------

fn euclid_suite(report: &mut VerificationReport, opts: &SuiteOptions) {
    algebra_checks(report, "euclid3", "euclid.algebra");
    euclid_double_checks(report);
    euclid_stachura_checks(report);
    euclid_yang_baxter_checks(report);
    euclid_cocommutator_checks(report);
    euclid_field_checks(report, opts);
    euclid_phs_checks(report, opts);
}

fn euclid_double_checks(report: &mut VerificationReport) {
    let spec = DoubleSpec::new(
        "euclid-double",
        vec!["J1".into(), "J2".into(), "J3".into()],
        vec![],
        vec![
            (0, 1, vec![(2, Scalar::one())]),
            (1, 2, vec![(0, Scalar::one())]),
            (0, 2, vec![(1, -Scalar::one())]),
        ],
        vec![],
    )
    .expect("well-formed spec");
    let dd = match assemble_double(&spec) {
        Ok(dd) => dd,
        Err(e) => {
            report.push(error(
                "euclid.double.assemble",
                "the rotation double (c = eps, f = 0) is a matched pair",
                e,
            ));
            return;
        }
    };
    report.push(pass(
        "euclid.double.assemble",
        "the rotation double (c = eps, f = 0) is a matched pair",
        "6-dimensional double assembled; Jacobi holds",
    ));
    report.push(check(
        "euclid.double.pairing",
        "<y^i, Y_j> = delta and <[X,Y],Z> = <X,[Y,Z]> over all 216 triples",
        dd.associativity_check().unwrap_or(false),
        "canonical pairing is symmetric and associative",
    ));
    let class_ii = catalog::get("euclid3.classII")
        .and_then(|e| e.r_matrix())
        .expect("catalog");
    report.push(check(
        "euclid.double.skew-r",
        "r' = r - C2 = P1∧J1 + P2∧J2 + P3∧J3",
        dd.canonical_r_skew() == class_ii,
        "skew part of the canonical r-matrix, coefficient-exact",
    ));
    report.push(check(
        "euclid.double.casimir",
        "C = (1/2) sum (y^i Y_i + Y_i y^i) is ad-invariant",
        dd.algebra().is_ad_invariant_tensor2(&dd.canonical_casimir()),
        "canonical Casimir invariance over the full double",
    ));
    let cybe_ok = cyb_tensor(dd.algebra(), &dd.canonical_r())
        .map(|t| t.is_zero())
        .unwrap_or(false);
    report.push(check(
        "euclid.double.cybe",
        "the canonical r-matrix solves the CYBE",
        cybe_ok,
        "Yang-Baxter operator vanishes identically",
    ));
}

fn euclid_stachura_checks(report: &mut VerificationReport) {
    let la = catalog::euclid3();
    let h = catalog::rotation_subalgebra(&la).expect("subalgebra");
    let t = catalog::translation_subalgebra(&la).expect("subspace");
    // class II: (p, mu) = (0, 2)
    match catalog::get("euclid3.classII")
        .and_then(|e| e.r_matrix())
        .and_then(|r| stachura_invariants(&la, &r, &h, &t))
    {
        Ok(inv) => report.push(check(
            "euclid.stachura.classII",
            "class (II) has (p, mu) = (0, 2)",
            inv.p.is_zero() && inv.mu == Scalar::from_int(2) && inv.bc_vanishes && inv.cc_vanishes,
            &format!("p = {}, mu = {}", inv.p, inv.mu),
        )),
        Err(e) => report.push(error("euclid.stachura.classII", "(p, mu) = (0, 2)", e)),
    }
    // class I: mu = -2 alpha^2 symbolically, p explicit, p|alpha=0 = 0
    match catalog::get("euclid3.classI")
        .and_then(|e| e.r_matrix())
        .and_then(|r| stachura_invariants(&la, &r, &h, &t))
    {
        Ok(inv) => {
            let alpha = Scalar::param("alpha");
            let mu_ok = inv.mu == -(Scalar::from_int(2) * alpha.clone() * alpha);
            let p0 = inv
                .p
                .subst_rat(Var::new("alpha"), &Rat::from_integer(0.into()))
                .map(|s| s.is_zero())
                .unwrap_or(false);
            report.push(check(
                "euclid.stachura.classI",
                "class (I) has mu = -2 alpha^2 and [[b,c]] = [[c,c]] = 0",
                mu_ok && p0 && inv.bc_vanishes && inv.cc_vanishes,
                &format!("mu = {}, p = {}", inv.mu, inv.p),
            ));
        }
        Err(e) => report.push(error("euclid.stachura.classI", "mu = -2 alpha^2", e)),
    }
    // class III: (0, 0)
    match catalog::get("euclid3.classIII")
        .and_then(|e| e.r_matrix())
        .and_then(|r| stachura_invariants(&la, &r, &h, &t))
    {
        Ok(inv) => report.push(check(
            "euclid.stachura.classIII",
            "class (III) has (p, mu) = (0, 0)",
            inv.p.is_zero() && inv.mu.is_zero(),
            &format!("p = {}, mu = {}", inv.p, inv.mu),
        )),
        Err(e) => report.push(error("euclid.stachura.classIII", "(p, mu) = (0, 0)", e)),
    }
}

fn euclid_yang_baxter_checks(report: &mut VerificationReport) {
    let la = catalog::euclid3();
    let alpha = Var::new("alpha");
    let r_iii = catalog::get("euclid3.classIII").and_then(|e| e.r_matrix()).unwrap();
    let r_ii = catalog::get("euclid3.classII").and_then(|e| e.r_matrix()).unwrap();
    let r_i = catalog::get("euclid3.classI").and_then(|e| e.r_matrix()).unwrap();
    let zero = Rat::from_integer(0.into());
    let one = Rat::from_integer(1.into());
    let subst = |r: &Bivector, v: &Rat| {
        r.map_scalars(&mut |c: &Scalar| c.subst_rat(alpha, v))
    };
    let results = (|| -> Result<[YangBaxterClass; 4], Error> {
        Ok([
            classify_yb(&la, &r_iii)?,
            classify_yb(&la, &subst(&r_i, &zero)?)?,
            classify_yb(&la, &subst(&r_i, &one)?)?,
            classify_yb(&la, &r_ii)?,
        ])
    })();
    match results {
        Ok([iii, i0, i1, ii]) => {
            report.push(check(
                "euclid.yangbaxter.classIII",
                "class (III) solves the CYBE for all a-parameters",
                iii == YangBaxterClass::Cybe,
                &format!("{iii}"),
            ));
            report.push(check(
                "euclid.yangbaxter.classI",
                "class (I) solves the CYBE iff alpha = 0",
                i0 == YangBaxterClass::Cybe && i1 != YangBaxterClass::Cybe,
                &format!("alpha=0: {i0}; alpha=1: {i1}"),
            ));
            report.push(check(
                "euclid.yangbaxter.classII",
                "class (II) and the DD skew r-matrix satisfy the modified CYBE",
                ii == YangBaxterClass::ModifiedCybe,
                &format!("{ii}"),
            ));
        }
        Err(e) => report.push(error("euclid.yangbaxter", "CYBE classification", e)),
    }
}

fn euclid_cocommutator_checks(report: &mut VerificationReport) {
    let la = catalog::euclid3();
    for class in ["classI", "classII", "classIII"] {
        let id = format!("euclid.cocommutator.{class}");
        let result = catalog::get(&format!("euclid3.{class}"))
            .and_then(|e| e.r_matrix())
            .and_then(|r| coboundary_delta(&la, &r))
            .and_then(|delta| {
                let target = catalog::get(&format!("euclid3.{class}.delta"))?.cocommutator()?;
                let cocycle = cocycle_defect(&la, &delta)?.is_zero();
                Ok((delta == target, cocycle))
            });
        match result {
            Ok((table_ok, cocycle_ok)) => report.push(check(
                &id,
                "delta(X) = [X⊗1 + 1⊗X, r] reproduces the published cocommutator lines",
                table_ok && cocycle_ok,
                &format!("table exact: {table_ok}; 1-cocycle: {cocycle_ok}"),
            )),
            Err(e) => report.push(error(&id, "cocommutator table", e)),
        }
    }
}

fn euclid_field_checks(report: &mut VerificationReport, opts: &SuiteOptions) {
    let chart = match charts::euclid3_chart() {
        Ok(c) => c,
        Err(e) => {
            report.push(error("euclid.fields", "invariant frames", e));
            return;
        }
    };
    let mut worst: f64 = 0.0;
    let mut err: Option<Error> = None;
    for point in plan(opts).points(6) {
        match invariant_fields(&chart, &point) {
            Ok(sample) => {
                let (left, right) = euclid3_reference_frames(&point);
                for a in 0..6 {
                    for mu in 0..6 {
                        worst = worst.max((sample.left[a][mu] - left[a][mu]).abs());
                        worst = worst.max((sample.right[a][mu] - right[a][mu]).abs());
                    }
                }
            }
            Err(e) => {
                err = Some(e);
                break;
            }
        }
    }
    match err {
        None => report.push(numeric(
            "euclid.fields",
            "left/right invariant fields match the closed forms componentwise",
            worst,
            opts.tol,
            &format!("{} seeded chart points, 12 fields", plan(opts).points),
        )),
        Some(e) => report.push(error("euclid.fields", "invariant frames", e)),
    }
}

fn euclid_phs_checks(report: &mut VerificationReport, opts: &SuiteOptions) {
    let chart = match charts::euclid3_chart() {
        Ok(c) => c,
        Err(e) => {
            report.push(error("euclid.phs", "poisson euclidean spaces", e));
            return;
        }
    };
    let sample_plan = plan(opts);
    // class II: {x^i, x^j} = 2 eps_ijk x^k
    let r2 = catalog::get("euclid3.classII").and_then(|e| e.r_matrix()).unwrap();
    match catalog::get("euclid3.classII.phs")
        .and_then(|e| e.poisson_target())
        .and_then(|t| verify_phs(&chart, &r2, &BTreeMap::new(), &t, &sample_plan))
    {
        Ok(rep) => report.push(numeric(
            "euclid.phs.classII",
            "{x^i, x^j} = 2 eps_ijk x^k",
            rep.max_deviation,
            opts.tol,
            &format!("{} points, {} pairs", rep.points, rep.pairs.len()),
        )),
        Err(e) => report.push(error("euclid.phs.classII", "{x,x} table", e)),
    }
    // class II: angle brackets vanish
    let mut worst: f64 = 0.0;
    let mut failed = None;
    'outer: for i in 0..6 {
        for j in 3..6 {
            if i == j {
                continue;
            }
            match max_abs_bracket(&chart, &r2, &BTreeMap::new(), i, j, &sample_plan) {
                Ok(m) => worst = worst.max(m),
                Err(e) => {
                    failed = Some(e);
                    break 'outer;
                }
            }
        }
    }
    match failed {
        None => report.push(numeric(
            "euclid.phs.classII.angles",
            "{x^i, th^j} = {th^i, th^j} = 0",
            worst,
            opts.tol,
            "all coordinate pairs involving an angle",
        )),
        Some(e) => report.push(error("euclid.phs.classII.angles", "{x,th} = 0", e)),
    }
    // class I at (alpha, rho) in {(1,0), (0,1), (1,1)} with a = 0
    let r1 = catalog::get("euclid3.classI").and_then(|e| e.r_matrix()).unwrap();
    let t1 = catalog::get("euclid3.classI.phs")
        .and_then(|e| e.poisson_target())
        .unwrap();
    for (a, r) in [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0)] {
        let mut binding = BTreeMap::new();
        binding.insert(Var::new("alpha"), a);
        binding.insert(Var::new("rho"), r);
        binding.insert(Var::new("a12"), 0.0);
        binding.insert(Var::new("a13"), 0.0);
        binding.insert(Var::new("a23"), 0.0);
        let id = format!("euclid.phs.classI.alpha{a}.rho{r}");
        match verify_phs(&chart, &r1, &binding, &t1, &sample_plan) {
            Ok(rep) => report.push(numeric(
                &id,
                "{x^1,x^3} = alpha x^1 - rho x^2, {x^2,x^3} = alpha x^2 + rho x^1, {x^1,x^2} = 0",
                rep.max_deviation,
                opts.tol,
                &format!("{} points", rep.points),
            )),
            Err(e) => report.push(error(&id, "class (I) table", e)),
        }
    }
}

// ---------------------------------------------------------------------------
// poincare
// ---------------------------------------------------------------------------

fn poincare_suite(report: &mut VerificationReport, opts: &SuiteOptions) {
    algebra_checks(report, "poincare21", "poincare.algebra");
    poincare_table1_checks(report);
    poincare_phs_checks(report, opts);
}

fn poincare_table1_checks(report: &mut VerificationReport) {
    let p21 = catalog::poincare21();
    let h = catalog::lorentz_subalgebra(&p21).expect("subalgebra");
    let expected = [
        CoisotropyClass::Zero,
        CoisotropyClass::PoissonSubgroup,
        CoisotropyClass::Coisotropic,
        CoisotropyClass::NonCoisotropic,
        CoisotropyClass::NonCoisotropic,
        CoisotropyClass::NonCoisotropic,
        CoisotropyClass::Coisotropic,
        CoisotropyClass::Coisotropic,
    ];
    for (case, want) in expected.iter().enumerate() {
        let id = format!("poincare.table1.case{case}");
        let result = catalog::get(&format!("poincare21.case{case}"))
            .and_then(|e| e.r_matrix())
            .and_then(|r| coboundary_delta(&p21, &r))
            .and_then(|delta| coisotropy_classify(&p21, &delta, &h));
        match result {
            Ok(got) => report.push(check(
                &id,
                "delta_D(h) column of the DD classification table",
                got == *want,
                &format!("expected {want}, computed {got} (symbolic in lambda)"),
            )),
            Err(e) => report.push(error(&id, "coisotropy classification", e)),
        }
    }
}

fn poincare_phs_checks(report: &mut VerificationReport, opts: &SuiteOptions) {
    let chart = match charts::poincare21_chart() {
        Ok(c) => c,
        Err(e) => {
            report.push(error("poincare.phs", "poisson minkowski spaces", e));
            return;
        }
    };
    let sample_plan = plan(opts);
    // linear rows: cases 0, 2, 6, 7
    for case in [0usize, 2, 6, 7] {
        let id = format!("poincare.phs.case{case}");
        let binding: BTreeMap<Var, f64> = catalog::dd_preset(case).into_iter().collect();
        let result = catalog::get(&format!("poincare21.case{case}"))
            .and_then(|e| e.r_matrix())
            .and_then(|r| {
                let t = catalog::get(&format!("poincare21.case{case}.phs"))?.poisson_target()?;
                verify_phs(&chart, &r, &binding, &t, &sample_plan)
            });
        match result {
            Ok(rep) => report.push(numeric(
                &id,
                "linear Poisson Minkowski bracket row",
                rep.max_deviation,
                opts.tol,
                &format!("{} points; DD preset {:?}", rep.points, catalog::dd_preset(case)),
            )),
            Err(e) => report.push(error(&id, "poisson minkowski row", e)),
        }
    }
    // quadratic case 1: pass, or report the fitted table as chart-dependent
    let id = "poincare.phs.case1";
    let binding: BTreeMap<Var, f64> = catalog::dd_preset(1).into_iter().collect();
    let result = catalog::get("poincare21.case1")
        .and_then(|e| e.r_matrix())
        .and_then(|r| {
            let t = catalog::get("poincare21.case1.phs")?.poisson_target()?;
            let direct = verify_phs(&chart, &r, &binding, &t, &sample_plan)?;
            Ok((r, direct))
        });
    match result {
        Ok((_, rep)) if rep.pass => report.push(numeric(
            id,
            "quadratic Poisson Minkowski bracket row",
            rep.max_deviation,
            opts.tol,
            &format!(
                "{} points; DD preset {:?}",
                rep.points,
                catalog::dd_preset(1)
            ),
        )),
        Ok((r, rep)) => {
            // chart-dependent: report the fitted tables for both factor orders
            let coords: Vec<String> = ["x0", "x1", "x2"].map(String::from).to_vec();
            let mut details = format!(
                "direct comparison deviates by {:.3e}; chart-dependent — reporting fitted tables. ",
                rep.max_deviation
            );
            for (label, c) in [("documented", chart.clone()), ("reversed", chart.reversed())] {
                match fit_bracket(&c, &r, &binding, &coords, 2, &sample_plan) {
                    Ok(f) => details.push_str(&format!(
                        "{label} order: {} (residual {:.3e}). ",
                        f.display().join("; "),
                        f.residual
                    )),
                    Err(e) => details.push_str(&format!("{label} order: fit failed ({e}). ")),
                }
            }
            report.push(CheckRecord {
                id: id.to_string(),
                citation: "quadratic Poisson Minkowski bracket row".to_string(),
                status: Status::Qualified,
                details,
                residual: Some(rep.max_deviation),
            });
        }
        Err(e) => report.push(error(id, "quadratic row", e)),
    }
}

// ---------------------------------------------------------------------------
// so31-contraction
// ---------------------------------------------------------------------------

fn so31_suite(report: &mut VerificationReport, opts: &SuiteOptions) {
    let _ = opts;
    algebra_checks(report, "so31", "so31.algebra");
    let kappa = Var::new("kappa");
    let e3 = catalog::euclid3();
    let names = e3.basis().to_vec();

    // the four scaled limits
    let mu = Scalar::param("mu");
    let d_coeff = (Scalar::one() - mu.clone() * mu.clone())
        .checked_div(&(Scalar::from_int(2) * mu))
        .expect("mu != 0");
    let mut lim_a = Bivector::zero(6);
    lim_a.add_term(5, 4, Scalar::one());
    let lim_b = catalog::get("euclid3.classII")
        .and_then(|e| e.r_matrix())
        .unwrap()
        .scale(&Scalar::from_rat(1, 2));
    let mut lim_c = Bivector::zero(6);
    lim_c.add_term(5, 3, Scalar::from_rat(1, 2));
    let mut lim_d = Bivector::zero(6);
    lim_d.add_term(3, 4, d_coeff);
    let expected: [(&str, i64, Bivector); 4] = [
        ("A", 1, lim_a),
        ("B", 0, lim_b),
        ("C", 1, lim_c),
        ("D", 1, lim_d),
    ];
    for (case, want_n, want_limit) in expected {
        let id = format!("so31.limit.case{case}");
        match catalog::get(&format!("so31.case{case}"))
            .and_then(|e| e.r_matrix())
            .and_then(|r| auto_scale(&r, kappa))
        {
            Ok((n, lim)) => report.push(check(
                &id,
                "flat limit of the DD r-matrix after kappa-scaling",
                n == want_n && lim == want_limit,
                &format!("n = {n}, limit = {}", lim.display_with(&names)),
            )),
            Err(e) => report.push(error(&id, "scaled flat limit", e)),
        }
    }

    // limits land in their coboundary classes
    let h = catalog::rotation_subalgebra(&e3).unwrap();
    let t = catalog::translation_subalgebra(&e3).unwrap();
    let mut class_ok = true;
    let mut class_details = String::new();
    for case in ["A", "C", "D"] {
        let got = catalog::get(&format!("so31.case{case}"))
            .and_then(|e| e.r_matrix())
            .and_then(|r| auto_scale(&r, kappa))
            .and_then(|(_, lim)| identify_stachura_class(&e3, &lim, &h, &t));
        let ok = matches!(got, Ok(StachuraClass::ClassIII));
        class_ok &= ok;
        class_details.push_str(&format!("case {case}: class III = {ok}; "));
    }
    let got_b = catalog::get("so31.caseB")
        .and_then(|e| e.r_matrix())
        .and_then(|r| auto_scale(&r, kappa))
        .and_then(|(_, lim)| identify_stachura_class(&e3, &lim, &h, &t));
    let ok_b = matches!(got_b, Ok(StachuraClass::ClassII { .. }));
    class_ok &= ok_b;
    class_details.push_str(&format!("case B: class II = {ok_b}"));
    report.push(check(
        "so31.limit.classes",
        "cases A, C, D contract into class (III), case B into class (II)",
        class_ok,
        &class_details,
    ));

    // the algebra and its Casimirs contract to the Euclidean ones
    match contract_algebra(&catalog::so31(), kappa, "euclid3") {
        Ok(contracted) => report.push(check(
            "so31.contract.algebra",
            "kappa -> 0 of the brackets gives the Euclidean algebra",
            contracted.structurally_equal(&e3),
            "structure constants agree after the limit",
        )),
        Err(e) => report.push(error("so31.contract.algebra", "flat limit", e)),
    }
    let so = catalog::so31();
    let casimir_ok = ["c1", "c2"].iter().all(|which| {
        catalog::casimir(&so, which)
            .and_then(|c| scaled_limit(&c, kappa, 0))
            .map(|lim| Some(lim) == catalog::casimir(&e3, which).ok())
            .unwrap_or(false)
    });
    report.push(check(
        "so31.contract.casimirs",
        "both Casimirs reduce to the Euclidean ones under kappa -> 0",
        casimir_ok,
        "C1 and C2 limits compared coefficient-exactly",
    ));

    // pairing behavior under the limit
    let abc_ok = ["A", "B", "C"].iter().all(|case| {
        catalog::get(&format!("so31.case{case}.pairing"))
            .and_then(|e| e.tensor())
            .and_then(|form| scaled_limit(&form, kappa, 0).map(|lim| lim == form))
            .unwrap_or(false)
    });
    report.push(check(
        "so31.pairing.kappa-free",
        "<P_i, J_i> = 1 for cases A, B, C does not depend on kappa",
        abc_ok,
        "pairing forms unchanged under the flat limit",
    ));
    let d_result = catalog::get("so31.caseD.pairing")
        .and_then(|e| e.tensor())
        .and_then(|form| scaled_limit(&form, kappa, 0));
    report.push(check(
        "so31.pairing.caseD",
        "the case D pairing diverges under kappa -> 0",
        matches!(d_result, Err(Error::LimitDivergent { .. })),
        &format!("scaled limit at n = 0: {:?}", d_result.err().map(|e| e.to_string())),
    ));

    // transported presentations round-trip
    let mut iso_ok = true;
    for (case, iso_id, src) in [
        ("A", "so31.csiso", "so31cs"),
        ("C", "so31.csiso", "so31cs"),
        ("B", "so31.csiso2", "so31shifted"),
        ("D", "so31.csiso2", "so31shifted"),
    ] {
        let ok = (|| -> Result<bool, Error> {
            let iso = catalog::get(iso_id)?.basis_iso()?;
            let stored = catalog::get(&format!("{src}.case{case}"))?.r_matrix()?;
            let reference = catalog::get(&format!("so31.case{case}"))?.r_matrix()?;
            Ok(iso.push_bivector(&stored)? == reference)
        })()
        .unwrap_or(false);
        iso_ok &= ok;
    }
    report.push(check(
        "so31.iso.transport",
        "the two basis isomorphisms carry the source-presentation r-matrices onto the curvature-basis ones",
        iso_ok,
        "cases A, C via the Chern-Simons-type map; B, D via the index shift",
    ));
}
