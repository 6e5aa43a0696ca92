//! Vectors, bivectors, trivectors and rank-2/3 tensors with exact scalar
//! coefficients over a fixed ordered basis.
//!
//! The wedge convention carries no 1/k! factors: `a∧b = a⊗b − b⊗a` and
//! `a∧b∧c` expands to the six signed permutations with unit weight. This is
//! what makes canonical double identities like `r' = r − C₂` hold
//! coefficient-for-coefficient.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

/// Element of the algebra: coefficients over the ordered basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    coeffs: Vec<Scalar>,
}

impl Vector {
    pub fn zero(dim: usize) -> Vector {
        Vector {
            coeffs: vec![Scalar::zero(); dim],
        }
    }

    pub fn basis(dim: usize, index: usize) -> Vector {
        let mut v = Vector::zero(dim);
        v.coeffs[index] = Scalar::one();
        v
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Vector {
        Vector { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn set(&mut self, i: usize, c: Scalar) {
        self.coeffs[i] = c;
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        check_dim(self.dim(), other.dim())?;
        Ok(Vector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn map_scalars<F>(&self, f: &mut F) -> Result<Vector>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        Ok(Vector {
            coeffs: self.coeffs.iter().map(&mut *f).collect::<Result<_>>()?,
        })
    }

    pub fn display_with(&self, names: &[String]) -> String {
        display_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c.clone(), names[i].clone())),
        )
    }
}

fn display_terms<I>(terms: I) -> String
where
    I: Iterator<Item = (Scalar, String)>,
{
    let mut out = String::new();
    for (c, label) in terms {
        let s = format!("{}", c);
        if out.is_empty() {
            if s == "1" {
                out = label;
            } else if s == "-1" {
                out = format!("-{}", label);
            } else {
                let _ = write!(out, "{}*{}", wrap_coeff(&s), label);
            }
        } else if s == "1" {
            let _ = write!(out, " + {}", label);
        } else if s == "-1" {
            let _ = write!(out, " - {}", label);
        } else if let Some(stripped) = s.strip_prefix('-') {
            let _ = write!(out, " - {}*{}", wrap_coeff(stripped), label);
        } else {
            let _ = write!(out, " + {}*{}", wrap_coeff(&s), label);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn wrap_coeff(s: &str) -> String {
    if s.contains(" + ") || s.contains(" - ") {
        format!("({})", s)
    } else {
        s.to_string()
    }
}

/// Skew bivector stored strictly upper-triangular: the coefficient at
/// `(a, b)` with `a < b` multiplies `e_a ∧ e_b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bivector {
    dim: usize,
    terms: BTreeMap<(usize, usize), Scalar>,
}

impl Bivector {
    pub fn zero(dim: usize) -> Bivector {
        Bivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `c · e_a ∧ e_b`; indices in either order, equal indices drop out.
    pub fn add_term(&mut self, a: usize, b: usize, c: Scalar) {
        assert!(a < self.dim && b < self.dim, "basis index out of range");
        if a == b || c.is_zero() {
            return;
        }
        let (key, signed) = if a < b { ((a, b), c) } else { ((b, a), -c) };
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(signed);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &signed;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn from_terms(dim: usize, terms: Vec<(usize, usize, Scalar)>) -> Bivector {
        let mut b = Bivector::zero(dim);
        for (i, j, c) in terms {
            b.add_term(i, j, c);
        }
        b
    }

    pub fn coeff(&self, a: usize, b: usize) -> Scalar {
        if a == b {
            return Scalar::zero();
        }
        if a < b {
            self.terms.get(&(a, b)).cloned().unwrap_or_else(Scalar::zero)
        } else {
            self.terms
                .get(&(b, a))
                .map(|c| -c.clone())
                .unwrap_or_else(Scalar::zero)
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn add(&self, other: &Bivector) -> Result<Bivector> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (a, b, c) in other.terms() {
            out.add_term(a, b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Bivector) -> Result<Bivector> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Bivector {
        if c.is_zero() {
            return Bivector::zero(self.dim);
        }
        Bivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    /// Expansion `Σ c (e_a⊗e_b − e_b⊗e_a)`.
    pub fn to_tensor2(&self) -> Tensor2 {
        let mut t = Tensor2::zero(self.dim);
        for (a, b, c) in self.terms() {
            t.set(a, b, c.clone());
            t.set(b, a, -c.clone());
        }
        t
    }

    pub fn map_scalars<F>(&self, f: &mut F) -> Result<Bivector>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        let mut out = Bivector::zero(self.dim);
        for (a, b, c) in self.terms() {
            out.add_term(a, b, f(c)?);
        }
        Ok(out)
    }

    /// `Some(s)` when `self == s * other` with `s` a single exact scalar.
    pub fn proportionality(&self, other: &Bivector) -> Option<Scalar> {
        if other.is_zero() {
            return if self.is_zero() {
                Some(Scalar::zero())
            } else {
                None
            };
        }
        let (&(a, b), c0) = other.terms.iter().next()?;
        let s = self.coeff(a, b).checked_div(c0).ok()?;
        let scaled = other.scale(&s);
        if &scaled == self {
            Some(s)
        } else {
            None
        }
    }

    pub fn display_with(&self, names: &[String]) -> String {
        display_terms(
            self.terms
                .iter()
                .map(|(&(a, b), c)| (c.clone(), format!("{}∧{}", names[a], names[b]))),
        )
    }
}

/// Permutation sign and sorted triple; `None` when two indices coincide.
pub(crate) fn sort3(a: usize, b: usize, c: usize) -> Option<((usize, usize, usize), i8)> {
    if a == b || b == c || a == c {
        return None;
    }
    let mut idx = [a, b, c];
    let mut sign = 1i8;
    // three-element bubble sort
    if idx[0] > idx[1] {
        idx.swap(0, 1);
        sign = -sign;
    }
    if idx[1] > idx[2] {
        idx.swap(1, 2);
        sign = -sign;
    }
    if idx[0] > idx[1] {
        idx.swap(0, 1);
        sign = -sign;
    }
    Some(((idx[0], idx[1], idx[2]), sign))
}

/// Totally antisymmetric trivector stored on sorted triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trivector {
    dim: usize,
    terms: BTreeMap<(usize, usize, usize), Scalar>,
}

impl Trivector {
    pub fn zero(dim: usize) -> Trivector {
        Trivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: usize, b: usize, c: usize, coeff: Scalar) {
        assert!(a < self.dim && b < self.dim && c < self.dim);
        if coeff.is_zero() {
            return;
        }
        let Some((key, sign)) = sort3(a, b, c) else {
            return;
        };
        let signed = if sign > 0 { coeff } else { -coeff };
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(signed);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &signed;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn from_terms(dim: usize, terms: Vec<(usize, usize, usize, Scalar)>) -> Trivector {
        let mut t = Trivector::zero(dim);
        for (a, b, c, coeff) in terms {
            t.add_term(a, b, c, coeff);
        }
        t
    }

    pub fn coeff(&self, a: usize, b: usize, c: usize) -> Scalar {
        match sort3(a, b, c) {
            None => Scalar::zero(),
            Some((key, sign)) => {
                let v = self.terms.get(&key).cloned().unwrap_or_else(Scalar::zero);
                if sign > 0 {
                    v
                } else {
                    -v
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.terms.iter().map(|(&(a, b, c), v)| (a, b, c, v))
    }

    pub fn add(&self, other: &Trivector) -> Result<Trivector> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (a, b, c, v) in other.terms() {
            out.add_term(a, b, c, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Trivector) -> Result<Trivector> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Trivector {
        if c.is_zero() {
            return Trivector::zero(self.dim);
        }
        Trivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// `Some(s)` when `self == s * other` exactly.
    pub fn proportionality(&self, other: &Trivector) -> Option<Scalar> {
        if other.is_zero() {
            return if self.is_zero() {
                Some(Scalar::zero())
            } else {
                None
            };
        }
        let (&(a, b, c), c0) = other.terms.iter().next()?;
        let s = self.coeff(a, b, c).checked_div(c0).ok()?;
        let scaled = other.scale(&s);
        if &scaled == self {
            Some(s)
        } else {
            None
        }
    }

    pub fn map_scalars<F>(&self, f: &mut F) -> Result<Trivector>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        let mut out = Trivector::zero(self.dim);
        for (a, b, c, v) in self.terms() {
            out.add_term(a, b, c, f(v)?);
        }
        Ok(out)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        display_terms(self.terms.iter().map(|(&(a, b, c), v)| {
            (
                v.clone(),
                format!("{}∧{}∧{}", names[a], names[b], names[c]),
            )
        }))
    }
}

/// Dense rank-2 tensor over `g ⊗ g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor2 {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Tensor2 {
    pub fn zero(dim: usize) -> Tensor2 {
        Tensor2 {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Scalar) {
        self.entries[i * self.dim + j] = c;
    }

    pub fn add_to(&mut self, i: usize, j: usize, c: &Scalar) {
        let e = &mut self.entries[i * self.dim + j];
        *e = &*e + c;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Tensor2) -> Result<Tensor2> {
        check_dim(self.dim, other.dim)?;
        Ok(Tensor2 {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Tensor2) -> Result<Tensor2> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Tensor2 {
        Tensor2 {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> Tensor2 {
        let mut t = Tensor2::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        *self == self.transpose().scale(&-Scalar::one())
    }

    /// Symmetric part `(T + Tᵀ)/2`.
    pub fn symmetric_part(&self) -> Tensor2 {
        self.add(&self.transpose())
            .expect("same dim")
            .scale(&Scalar::from_rat(1, 2))
    }

    /// Antisymmetric part `(T − Tᵀ)/2`.
    pub fn antisymmetric_part(&self) -> Tensor2 {
        self.sub(&self.transpose())
            .expect("same dim")
            .scale(&Scalar::from_rat(1, 2))
    }

    /// The bivector with the same expansion as the antisymmetric part, i.e.
    /// the inverse of [`Bivector::to_tensor2`] on its image.
    pub fn skew_bivector(&self) -> Bivector {
        let mut b = Bivector::zero(self.dim);
        for a in 0..self.dim {
            for c in (a + 1)..self.dim {
                let coeff = (self.get(a, c) - self.get(c, a)) * Scalar::from_rat(1, 2);
                b.add_term(a, c, coeff);
            }
        }
        b
    }

    pub fn map_scalars<F>(&self, f: &mut F) -> Result<Tensor2>
    where
        F: FnMut(&Scalar) -> Result<Scalar>,
    {
        Ok(Tensor2 {
            dim: self.dim,
            entries: self.entries.iter().map(&mut *f).collect::<Result<_>>()?,
        })
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let mut terms = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let c = self.get(i, j);
                if !c.is_zero() {
                    terms.push((c.clone(), format!("{}⊗{}", names[i], names[j])));
                }
            }
        }
        display_terms(terms.into_iter())
    }
}

/// Dense rank-3 tensor; working space for Schouten/Yang-Baxter computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zero(dim: usize) -> Tensor3 {
        Tensor3 {
            dim,
            entries: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[(i * self.dim + j) * self.dim + k]
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, c: &Scalar) {
        let e = &mut self.entries[(i * self.dim + j) * self.dim + k];
        *e = &*e + c;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Tensor3) -> Result<Tensor3> {
        check_dim(self.dim, other.dim)?;
        Ok(Tensor3 {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Tensor3 {
        Tensor3 {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Interpret as a trivector; errors when not totally antisymmetric.
    pub fn to_trivector(&self) -> Result<Trivector> {
        let d = self.dim;
        // diagonal-degenerate entries must vanish
        for i in 0..d {
            for j in 0..d {
                if !self.get(i, i, j).is_zero()
                    || !self.get(i, j, i).is_zero()
                    || !self.get(j, i, i).is_zero()
                {
                    return Err(Error::Structural(
                        "rank-3 tensor is not totally antisymmetric".into(),
                    ));
                }
            }
        }
        let mut out = Trivector::zero(d);
        for a in 0..d {
            for b in (a + 1)..d {
                for c in (b + 1)..d {
                    let base = self.get(a, b, c).clone();
                    // all six permutations must match the alternating sign
                    let perms = [
                        ((a, b, c), 1i8),
                        ((a, c, b), -1),
                        ((b, a, c), -1),
                        ((b, c, a), 1),
                        ((c, a, b), 1),
                        ((c, b, a), -1),
                    ];
                    for ((i, j, k), s) in perms {
                        let expect = if s > 0 { base.clone() } else { -base.clone() };
                        if *self.get(i, j, k) != expect {
                            return Err(Error::Structural(
                                "rank-3 tensor is not totally antisymmetric".into(),
                            ));
                        }
                    }
                    out.add_term(a, b, c, base);
                }
            }
        }
        Ok(out)
    }
}

/// `x ∧ y` with the convention `a∧b = a⊗b − b⊗a`.
pub fn wedge(x: &Vector, y: &Vector) -> Result<Bivector> {
    check_dim(x.dim(), y.dim())?;
    let mut out = Bivector::zero(x.dim());
    for a in 0..x.dim() {
        for b in (a + 1)..x.dim() {
            let c = x.coeff(a) * y.coeff(b) - x.coeff(b) * y.coeff(a);
            out.add_term(a, b, c);
        }
    }
    Ok(out)
}

/// `x ∧ y ∧ z`: coefficients are 3×3 minors of the coefficient rows.
pub fn wedge3(x: &Vector, y: &Vector, z: &Vector) -> Result<Trivector> {
    check_dim(x.dim(), y.dim())?;
    check_dim(x.dim(), z.dim())?;
    let mut out = Trivector::zero(x.dim());
    for a in 0..x.dim() {
        for b in (a + 1)..x.dim() {
            for c in (b + 1)..x.dim() {
                let det = x.coeff(a) * (y.coeff(b) * z.coeff(c) - y.coeff(c) * z.coeff(b))
                    - x.coeff(b) * (y.coeff(a) * z.coeff(c) - y.coeff(c) * z.coeff(a))
                    + x.coeff(c) * (y.coeff(a) * z.coeff(b) - y.coeff(b) * z.coeff(a));
                out.add_term(a, b, c, det);
            }
        }
    }
    Ok(out)
}

/// `x ∧ B` for a vector and a bivector.
pub fn wedge_vector_bivector(x: &Vector, b: &Bivector) -> Result<Trivector> {
    check_dim(x.dim(), b.dim())?;
    let mut out = Trivector::zero(x.dim());
    for (p, q, c) in b.terms() {
        for a in 0..x.dim() {
            let coeff = x.coeff(a) * c;
            out.add_term(a, p, q, coeff);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(dim: usize) -> Vec<String> {
        (0..dim).map(|i| format!("e{}", i)).collect()
    }

    #[test]
    fn wedge_is_alternating() {
        let x = Vector::basis(4, 1);
        let r = wedge(&x, &x).unwrap();
        assert!(r.is_zero());
        let y = Vector::basis(4, 3);
        let xy = wedge(&x, &y).unwrap();
        let yx = wedge(&y, &x).unwrap();
        assert_eq!(xy, yx.scale(&-Scalar::one()));
        assert_eq!(xy.coeff(1, 3), Scalar::one());
        assert_eq!(xy.coeff(3, 1), -Scalar::one());
    }

    #[test]
    fn wedge_expansion_convention() {
        // P1∧J1 expands to P1⊗J1 − J1⊗P1 (indices 3 and 0 in the standard order)
        let p1 = Vector::basis(6, 3);
        let j1 = Vector::basis(6, 0);
        let w = wedge(&p1, &j1).unwrap();
        let t = w.to_tensor2();
        assert_eq!(*t.get(3, 0), Scalar::one());
        assert_eq!(*t.get(0, 3), -Scalar::one());
        assert_eq!(w.display_with(&names(6)), "-e0∧e3");
    }

    #[test]
    fn bivector_tensor_roundtrip_is_identity() {
        let mut b = Bivector::zero(5);
        b.add_term(0, 2, Scalar::from_int(3));
        b.add_term(4, 1, Scalar::from_rat(1, 2));
        let back = b.to_tensor2().skew_bivector();
        assert_eq!(b, back);
    }

    #[test]
    fn sum_of_wedges_matches_tensor_difference() {
        // Σ Pi⊗Ji − Σ Ji⊗Pi equals Σ Pi∧Ji as tensors
        let mut t = Tensor2::zero(6);
        for i in 0..3 {
            t.set(3 + i, i, Scalar::one());
            t.set(i, 3 + i, -Scalar::one());
        }
        let mut b = Bivector::zero(6);
        for i in 0..3 {
            b.add_term(3 + i, i, Scalar::one());
        }
        assert_eq!(b.to_tensor2(), t);
    }

    #[test]
    fn trivector_signs() {
        let mut t = Trivector::zero(4);
        t.add_term(2, 1, 0, Scalar::one()); // e2∧e1∧e0 = -e0∧e1∧e2
        assert_eq!(t.coeff(0, 1, 2), -Scalar::one());
        assert_eq!(t.coeff(1, 0, 2), Scalar::one());
        t.add_term(0, 1, 2, Scalar::one());
        assert!(t.is_zero());
    }

    #[test]
    fn wedge3_is_signed_volume() {
        let x = Vector::basis(3, 0);
        let y = Vector::basis(3, 1);
        let z = Vector::basis(3, 2);
        let t = wedge3(&x, &y, &z).unwrap();
        assert_eq!(t.coeff(0, 1, 2), Scalar::one());
        let t2 = wedge3(&y, &x, &z).unwrap();
        assert_eq!(t2.coeff(0, 1, 2), -Scalar::one());
        assert!(wedge3(&x, &x, &z).unwrap().is_zero());
    }
}
