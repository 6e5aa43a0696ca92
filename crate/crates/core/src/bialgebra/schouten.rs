//! Schouten bracket of bivectors and the Yang-Baxter operator, both through
//! the commutator formula `[r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]`.

use crate::algebra::{Bivector, LieAlgebra, Tensor2, Tensor3, Trivector};
use crate::error::Result;
use crate::scalar::Scalar;

/// Yang-Baxter operator on a full `g⊗g` tensor, as a general rank-3 tensor.
/// For the canonical r-matrix of a Drinfel'd double this vanishes
/// identically.
pub fn cyb_tensor(la: &LieAlgebra, r: &Tensor2) -> Result<Tensor3> {
    let d = la.dim();
    if r.dim() != d {
        return Err(crate::error::Error::DimensionMismatch {
            expected: d,
            got: r.dim(),
        });
    }
    let mut out = Tensor3::zero(d);
    // collect sparse entries once
    let mut entries = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let c = r.get(a, b);
            if !c.is_zero() {
                entries.push((a, b, c.clone()));
            }
        }
    }
    for (a, b, x) in &entries {
        for (c, e, y) in &entries {
            let xy = x * y;
            // [r12, r13]: [e_a, e_c] ⊗ e_b ⊗ e_e
            let v = la.bracket_basis(*a, *c);
            for k in 0..d {
                if !v.coeff(k).is_zero() {
                    out.add_to(k, *b, *e, &(&xy * v.coeff(k)));
                }
            }
            // [r12, r23]: e_a ⊗ [e_b, e_c] ⊗ e_e
            let v = la.bracket_basis(*b, *c);
            for k in 0..d {
                if !v.coeff(k).is_zero() {
                    out.add_to(*a, k, *e, &(&xy * v.coeff(k)));
                }
            }
            // [r13, r23]: e_a ⊗ e_c ⊗ [e_b, e_e]
            let v = la.bracket_basis(*b, *e);
            for k in 0..d {
                if !v.coeff(k).is_zero() {
                    out.add_to(*a, *c, k, &(&xy * v.coeff(k)));
                }
            }
        }
    }
    Ok(out)
}

/// Schouten bracket `[[r, r]]` of a bivector with itself. For a skew r-matrix
/// over a Lie algebra the commutator formula is totally antisymmetric, so the
/// result lives in `Λ³g`.
pub fn schouten(la: &LieAlgebra, r: &Bivector) -> Result<Trivector> {
    cyb_tensor(la, &r.to_tensor2())?.to_trivector()
}

/// Mixed bracket `[[x, y]]` by polarization:
/// `([[x+y, x+y]] − [[x, x]] − [[y, y]]) / 2`.
pub fn schouten_mixed(la: &LieAlgebra, x: &Bivector, y: &Bivector) -> Result<Trivector> {
    let sum = schouten(la, &x.add(y)?)?;
    let xx = schouten(la, x)?;
    let yy = schouten(la, y)?;
    let half = Scalar::from_rat(1, 2);
    sum.sub(&xx)?.sub(&yy).map(|t| t.scale(&half))
}

/// Outcome of the classical Yang-Baxter test for a skew r-matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum YangBaxterClass {
    /// `[[r, r]] = 0`
    Cybe,
    /// `[[r, r]] ≠ 0` but ad-invariant
    ModifiedCybe,
    /// `[[r, r]]` neither zero nor invariant
    Neither,
}

impl std::fmt::Display for YangBaxterClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            YangBaxterClass::Cybe => "CYBE",
            YangBaxterClass::ModifiedCybe => "mCYBE",
            YangBaxterClass::Neither => "none",
        };
        write!(f, "{}", s)
    }
}

pub fn classify_yb(la: &LieAlgebra, r: &Bivector) -> Result<YangBaxterClass> {
    let s = schouten(la, r)?;
    Ok(if s.is_zero() {
        YangBaxterClass::Cybe
    } else if la.is_ad_invariant_trivector(&s) {
        YangBaxterClass::ModifiedCybe
    } else {
        YangBaxterClass::Neither
    })
}
