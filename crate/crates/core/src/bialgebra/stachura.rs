//! Graded analysis of Euclidean r-matrices: the splitting `r = a + b + c`
//! over `h ⊕ t` and the two invariants `(p, μ)` defined by
//! `[[a,b]] = p·η̃` and `2[[a,c]] + [[b,b]] = μ·Ω` with `[[b,c]] = [[c,c]] = 0`.
//!
//! The reference elements are pinned as follows: `η̃ = P1∧P2∧P3` with unit
//! coefficient, and `Ω` is half the self-bracket of the diagonal r-matrix
//! `ΣPi∧Ji`, which makes that r-matrix come out at exactly `(p, μ) = (0, 2)`.

use super::schouten::{schouten, schouten_mixed};
use super::Subspace;
use crate::algebra::{Bivector, LieAlgebra, Trivector};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Split `r` into `a ⊂ t∧t`, `b ⊂ t∧h`, `c ⊂ h∧h` by basis membership.
pub fn grade_decompose(
    r: &Bivector,
    h: &Subspace,
    t: &Subspace,
) -> Result<(Bivector, Bivector, Bivector)> {
    let dim = r.dim();
    let mut seen = vec![false; dim];
    for &i in h.indices().iter().chain(t.indices()) {
        if i >= dim {
            return Err(Error::Structural("subspace index out of range".into()));
        }
        if seen[i] {
            return Err(Error::Structural(format!(
                "subspaces `{}` and `{}` overlap at index {}",
                h.name(),
                t.name(),
                i
            )));
        }
        seen[i] = true;
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Structural(format!(
            "subspaces `{}` and `{}` do not span the algebra",
            h.name(),
            t.name()
        )));
    }
    let mut a = Bivector::zero(dim);
    let mut b = Bivector::zero(dim);
    let mut c = Bivector::zero(dim);
    for (i, j, coeff) in r.terms() {
        let hi = h.contains(i);
        let hj = h.contains(j);
        let target = match (hi, hj) {
            (false, false) => &mut a,
            (true, true) => &mut c,
            _ => &mut b,
        };
        target.add_term(i, j, coeff.clone());
    }
    Ok((a, b, c))
}

/// The volume reference `η̃ = e_{t1}∧e_{t2}∧e_{t3}` with unit coefficient.
pub fn eta_reference(dim: usize, t: &Subspace) -> Result<Trivector> {
    let idx = t.indices();
    if idx.len() != 3 {
        return Err(Error::Structural(
            "translation sector must be three-dimensional".into(),
        ));
    }
    let mut eta = Trivector::zero(dim);
    eta.add_term(idx[0], idx[1], idx[2], Scalar::one());
    Ok(eta)
}

/// The mixed reference `Ω = ½ [[b₀, b₀]]` for the diagonal `b₀ = ΣPi∧Ji`.
pub fn omega_reference(la: &LieAlgebra, h: &Subspace, t: &Subspace) -> Result<Trivector> {
    if h.indices().len() != 3 || t.indices().len() != 3 {
        return Err(Error::Structural(
            "reference element needs 3+3 split".into(),
        ));
    }
    let mut b0 = Bivector::zero(la.dim());
    for (ti, hi) in t.indices().iter().zip(h.indices()) {
        b0.add_term(*ti, *hi, Scalar::one());
    }
    let s = schouten(la, &b0)?;
    Ok(s.scale(&Scalar::from_rat(1, 2)))
}

/// The `(p, μ)` invariants plus the two residual checks of the
/// classification relations.
#[derive(Debug, Clone)]
pub struct StachuraInvariants {
    pub p: Scalar,
    pub mu: Scalar,
    /// `[[b, c]] = 0` held
    pub bc_vanishes: bool,
    /// `[[c, c]] = 0` held
    pub cc_vanishes: bool,
}

pub fn stachura_invariants(
    la: &LieAlgebra,
    r: &Bivector,
    h: &Subspace,
    t: &Subspace,
) -> Result<StachuraInvariants> {
    let (a, b, c) = grade_decompose(r, h, t)?;
    let eta = eta_reference(la.dim(), t)?;
    let omega = omega_reference(la, h, t)?;

    let ab = schouten_mixed(la, &a, &b)?;
    let p = ab.proportionality(&eta).ok_or_else(|| {
        Error::NotInClassificationForm(format!(
            "[[a,b]] is not proportional to the translation volume: {}",
            ab.display_with(la.basis())
        ))
    })?;

    let ac2 = schouten_mixed(la, &a, &c)?.scale(&Scalar::from_int(2));
    let bb = schouten(la, &b)?;
    let mixed = ac2.add(&bb)?;
    let mu = mixed.proportionality(&omega).ok_or_else(|| {
        Error::NotInClassificationForm(format!(
            "2[[a,c]] + [[b,b]] is not proportional to the mixed reference: {}",
            mixed.display_with(la.basis())
        ))
    })?;

    let bc_vanishes = schouten_mixed(la, &b, &c)?.is_zero();
    let cc_vanishes = schouten(la, &c)?.is_zero();

    Ok(StachuraInvariants {
        p,
        mu,
        bc_vanishes,
        cc_vanishes,
    })
}

/// Which of the three Euclidean classes a decomposed r-matrix lands in.
/// Only the patterns needed to identify contraction limits are matched:
/// the diagonal class carries its scale factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StachuraClass {
    /// `a = c = 0`, `b = s · ΣPi∧Ji`
    ClassII { scale: Scalar },
    /// `b = c = 0`, pure translation part
    ClassIII,
    /// anything else
    Other,
}

pub fn identify_stachura_class(
    la: &LieAlgebra,
    r: &Bivector,
    h: &Subspace,
    t: &Subspace,
) -> Result<StachuraClass> {
    let (a, b, c) = grade_decompose(r, h, t)?;
    if !c.is_zero() {
        return Ok(StachuraClass::Other);
    }
    if b.is_zero() {
        return Ok(StachuraClass::ClassIII);
    }
    if !a.is_zero() {
        return Ok(StachuraClass::Other);
    }
    let mut b0 = Bivector::zero(la.dim());
    for (ti, hi) in t.indices().iter().zip(h.indices()) {
        b0.add_term(*ti, *hi, Scalar::one());
    }
    match b.proportionality(&b0) {
        Some(scale) if !scale.is_zero() => Ok(StachuraClass::ClassII { scale }),
        _ => Ok(StachuraClass::Other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::{Rat, Scalar, Var};

    fn setup() -> (LieAlgebra, Subspace, Subspace) {
        let la = catalog::euclid3();
        let h = catalog::rotation_subalgebra(&la).unwrap();
        let t = catalog::translation_subalgebra(&la).unwrap();
        (la, h, t)
    }

    #[test]
    fn grade_decompose_splits_by_membership() {
        let (la, h, t) = setup();
        let r = catalog::get("euclid3.classII").unwrap().r_matrix().unwrap();
        let (a, b, c) = grade_decompose(&r, &h, &t).unwrap();
        assert!(a.is_zero());
        assert!(c.is_zero());
        assert_eq!(b, r);
        // the Euclidean double r-matrix decomposes identically
        let rdd = catalog::get("euclid3.dd").unwrap().r_matrix().unwrap();
        let (add, bdd, cdd) = grade_decompose(&rdd, &h, &t).unwrap();
        assert!(add.is_zero() && cdd.is_zero());
        assert_eq!(bdd, b);
        // and a pure translation term is all a-part
        let mut rp = Bivector::zero(la.dim());
        rp.add_term(3, 4, Scalar::one());
        let (ap, bp, cp) = grade_decompose(&rp, &h, &t).unwrap();
        assert_eq!(ap, rp);
        assert!(bp.is_zero() && cp.is_zero());
    }

    #[test]
    fn overlapping_subspaces_are_rejected() {
        let (la, h, _) = setup();
        let bad_t = Subspace::new("t", vec![2, 3, 4], la.dim()).unwrap();
        let r = Bivector::zero(la.dim());
        assert!(grade_decompose(&r, &h, &bad_t).is_err());
        let short_t = Subspace::new("t", vec![3, 4], la.dim()).unwrap();
        assert!(grade_decompose(&r, &h, &short_t).is_err());
    }

    #[test]
    fn class_ii_invariants_are_zero_and_two() {
        let (la, h, t) = setup();
        let r = catalog::get("euclid3.classII").unwrap().r_matrix().unwrap();
        let inv = stachura_invariants(&la, &r, &h, &t).unwrap();
        assert!(inv.p.is_zero());
        assert_eq!(inv.mu, Scalar::from_int(2));
        assert!(inv.bc_vanishes && inv.cc_vanishes);
    }

    #[test]
    fn class_i_mu_is_minus_two_alpha_squared() {
        let (la, h, t) = setup();
        let r = catalog::get("euclid3.classI").unwrap().r_matrix().unwrap();
        let inv = stachura_invariants(&la, &r, &h, &t).unwrap();
        let alpha = Scalar::param("alpha");
        assert_eq!(inv.mu, -(Scalar::from_int(2) * alpha.clone() * alpha.clone()));
        assert!(inv.bc_vanishes && inv.cc_vanishes);
        // p evaluates to alpha * a12: frozen from the dense Schouten oracle;
        // only the P1∧P2 component of the a-part couples to the b-part
        assert_eq!(inv.p, alpha * Scalar::param("a12"));
        // in particular p vanishes identically at alpha = 0 (the CYBE locus)
        let a = Var::new("alpha");
        let p0 = inv.p.subst_rat(a, &Rat::from_integer(0.into())).unwrap();
        assert!(p0.is_zero());
    }

    #[test]
    fn class_iii_invariants_vanish() {
        let (la, h, t) = setup();
        let r = catalog::get("euclid3.classIII").unwrap().r_matrix().unwrap();
        let inv = stachura_invariants(&la, &r, &h, &t).unwrap();
        assert!(inv.p.is_zero());
        assert!(inv.mu.is_zero());
    }

    #[test]
    fn off_classification_r_matrix_reports_residual() {
        let (la, h, t) = setup();
        // b = P1∧J2 squares to a single mixed term, not a multiple of Omega
        let mut r = Bivector::zero(la.dim());
        r.add_term(3, 1, Scalar::one());
        let err = stachura_invariants(&la, &r, &h, &t).unwrap_err();
        assert!(matches!(err, Error::NotInClassificationForm(_)));
    }

    #[test]
    fn class_identification() {
        let (la, h, t) = setup();
        let rii = catalog::get("euclid3.classII").unwrap().r_matrix().unwrap();
        assert_eq!(
            identify_stachura_class(&la, &rii, &h, &t).unwrap(),
            StachuraClass::ClassII {
                scale: Scalar::one()
            }
        );
        let half = rii.scale(&Scalar::from_rat(1, 2));
        assert_eq!(
            identify_stachura_class(&la, &half, &h, &t).unwrap(),
            StachuraClass::ClassII {
                scale: Scalar::from_rat(1, 2)
            }
        );
        let riii = catalog::get("euclid3.classIII").unwrap().r_matrix().unwrap();
        assert_eq!(
            identify_stachura_class(&la, &riii, &h, &t).unwrap(),
            StachuraClass::ClassIII
        );
        let ri = catalog::get("euclid3.classI").unwrap().r_matrix().unwrap();
        assert_eq!(
            identify_stachura_class(&la, &ri, &h, &t).unwrap(),
            StachuraClass::Other
        );
    }
}
