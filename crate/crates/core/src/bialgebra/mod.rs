//! Lie bialgebra machinery: coboundary cocommutators, the 1-cocycle and
//! co-Jacobi checks, coisotropy classification of isotropy subalgebras, and
//! the graded (a, b, c) analysis of Euclidean r-matrices.

mod schouten;
mod stachura;

pub use schouten::{classify_yb, cyb_tensor, schouten, schouten_mixed, YangBaxterClass};
pub use stachura::{
    grade_decompose, identify_stachura_class, omega_reference, stachura_invariants, StachuraClass,
    StachuraInvariants,
};

use crate::algebra::{Bivector, LieAlgebra, Tensor2, Vector};
use crate::error::{Error, Result};

/// Linear map `g → Λ²g` given on the basis: `δ(e_n)` as a bivector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocommutator {
    deltas: Vec<Bivector>,
}

impl Cocommutator {
    pub fn new(deltas: Vec<Bivector>) -> Result<Cocommutator> {
        let dim = deltas.len();
        for d in &deltas {
            if d.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: d.dim(),
                });
            }
        }
        Ok(Cocommutator { deltas })
    }

    pub fn zero(dim: usize) -> Cocommutator {
        Cocommutator {
            deltas: vec![Bivector::zero(dim); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.deltas.len()
    }

    pub fn delta_basis(&self, n: usize) -> &Bivector {
        &self.deltas[n]
    }

    pub fn deltas(&self) -> &[Bivector] {
        &self.deltas
    }

    pub fn is_zero(&self) -> bool {
        self.deltas.iter().all(Bivector::is_zero)
    }

    /// Linear extension to arbitrary elements.
    pub fn delta(&self, x: &Vector) -> Result<Bivector> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.dim(),
            });
        }
        let mut out = Bivector::zero(self.dim());
        for n in 0..self.dim() {
            if !x.coeff(n).is_zero() {
                out = out.add(&self.deltas[n].scale(x.coeff(n)))?;
            }
        }
        Ok(out)
    }

    /// Dual structure constants as a candidate Lie algebra on `g*`: the dual
    /// bracket `[y^l, y^m] = f^{lm}_n y^n` reads the coefficients of `δ(e_n)`.
    pub fn dual_algebra(&self) -> Result<LieAlgebra> {
        let d = self.dim();
        let basis = (1..=d).map(|i| format!("y{}", i)).collect();
        let mut brackets = Vec::new();
        for l in 0..d {
            for m in (l + 1)..d {
                let mut coeffs = Vec::new();
                for n in 0..d {
                    let c = self.deltas[n].coeff(l, m);
                    if !c.is_zero() {
                        coeffs.push((n, c));
                    }
                }
                if !coeffs.is_empty() {
                    brackets.push((l, m, coeffs));
                }
            }
        }
        LieAlgebra::new_unchecked("dual", basis, vec![], brackets)
    }
}

/// Coboundary cocommutator `δ(X) = [X⊗1 + 1⊗X, r] = ad_X(r)`.
///
/// For a bivector input the computation stays in wedge coordinates. A full
/// `g⊗g` input is reduced through the adjoint action followed by skew
/// projection; when its symmetric part is ad-invariant this equals the
/// bivector route on the skew part.
pub fn coboundary_delta(la: &LieAlgebra, r: &Bivector) -> Result<Cocommutator> {
    if r.dim() != la.dim() {
        return Err(Error::DimensionMismatch {
            expected: la.dim(),
            got: r.dim(),
        });
    }
    let deltas = (0..la.dim())
        .map(|i| la.ad_basis_bivector(i, r))
        .collect();
    Cocommutator::new(deltas)
}

/// [`coboundary_delta`] for a full `g⊗g` r-matrix.
pub fn coboundary_delta_tensor(la: &LieAlgebra, r: &Tensor2) -> Result<Cocommutator> {
    if r.dim() != la.dim() {
        return Err(Error::DimensionMismatch {
            expected: la.dim(),
            got: r.dim(),
        });
    }
    let deltas = (0..la.dim())
        .map(|i| la.ad_basis_tensor2(i, r).skew_bivector())
        .collect();
    Cocommutator::new(deltas)
}

/// Defect of the 1-cocycle condition per basis pair:
/// `δ([e_i,e_j]) − ad_i δ(e_j) + ad_j δ(e_i)`.
#[derive(Debug, Clone)]
pub struct CocycleDefect {
    entries: Vec<((usize, usize), Bivector)>,
}

impl CocycleDefect {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn witness(&self) -> Option<&(usize, usize)> {
        self.entries.first().map(|(p, _)| p)
    }

    pub fn entries(&self) -> &[((usize, usize), Bivector)] {
        &self.entries
    }
}

pub fn cocycle_defect(la: &LieAlgebra, delta: &Cocommutator) -> Result<CocycleDefect> {
    if delta.dim() != la.dim() {
        return Err(Error::DimensionMismatch {
            expected: la.dim(),
            got: delta.dim(),
        });
    }
    let d = la.dim();
    let mut entries = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            let lhs = delta.delta(la.bracket_basis(i, j))?;
            let adi = la.ad_basis_bivector(i, delta.delta_basis(j));
            let adj = la.ad_basis_bivector(j, delta.delta_basis(i));
            let defect = lhs.sub(&adi)?.add(&adj)?;
            if !defect.is_zero() {
                entries.push(((i, j), defect));
            }
        }
    }
    Ok(CocycleDefect { entries })
}

/// True iff the dual map of `δ` satisfies the Jacobi identity.
pub fn dual_jacobi(delta: &Cocommutator) -> Result<bool> {
    let dual = delta.dual_algebra()?;
    Ok(dual.jacobi_defect().is_zero())
}

/// Span of a subset of the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    name: String,
    indices: Vec<usize>,
}

impl Subspace {
    pub fn new(name: &str, mut indices: Vec<usize>, dim: usize) -> Result<Subspace> {
        indices.sort_unstable();
        let distinct = indices.windows(2).all(|w| w[0] != w[1]);
        if !distinct || indices.iter().any(|&i| i >= dim) {
            return Err(Error::Structural(format!(
                "subspace `{name}` has repeated or out-of-range indices"
            )));
        }
        Ok(Subspace {
            name: name.to_string(),
            indices,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Verify closure under the bracket.
    pub fn is_subalgebra(&self, la: &LieAlgebra) -> bool {
        for &i in &self.indices {
            for &j in &self.indices {
                let v = la.bracket_basis(i, j);
                for k in 0..la.dim() {
                    if !self.contains(k) && !v.coeff(k).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Where `δ(h)` lands, strongest condition first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum CoisotropyClass {
    /// δ(h) = 0
    Zero,
    /// δ(h) ⊂ h∧h: h is a sub-bialgebra (Poisson subgroup type)
    PoissonSubgroup,
    /// δ(h) ⊂ h∧g: the Sklyanin bracket projects to G/H
    Coisotropic,
    /// δ(h) ⊄ h∧g
    NonCoisotropic,
}

impl std::fmt::Display for CoisotropyClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CoisotropyClass::Zero => "zero",
            CoisotropyClass::PoissonSubgroup => "poisson-subgroup",
            CoisotropyClass::Coisotropic => "coisotropic",
            CoisotropyClass::NonCoisotropic => "non-coisotropic",
        };
        write!(f, "{}", s)
    }
}

/// Classify `δ(h)` against the flags `= 0`, `⊂ h∧h`, `⊂ h∧g`.
pub fn coisotropy_classify(
    la: &LieAlgebra,
    delta: &Cocommutator,
    h: &Subspace,
) -> Result<CoisotropyClass> {
    if !h.is_subalgebra(la) {
        return Err(Error::Structural(format!(
            "`{}` is not a subalgebra",
            h.name()
        )));
    }
    let mut all_zero = true;
    let mut in_hh = true;
    let mut in_hg = true;
    for &i in h.indices() {
        let d = delta.delta_basis(i);
        if !d.is_zero() {
            all_zero = false;
        }
        for (a, b, c) in d.terms() {
            if c.is_zero() {
                continue;
            }
            let a_in = h.contains(a);
            let b_in = h.contains(b);
            if !(a_in && b_in) {
                in_hh = false;
            }
            if !(a_in || b_in) {
                in_hg = false;
            }
        }
    }
    Ok(if all_zero {
        CoisotropyClass::Zero
    } else if in_hh {
        CoisotropyClass::PoissonSubgroup
    } else if in_hg {
        CoisotropyClass::Coisotropic
    } else {
        CoisotropyClass::NonCoisotropic
    })
}
