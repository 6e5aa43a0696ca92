//! Exponential-product group charts `g = Π exp(q^μ X_μ)` and their exact
//! per-factor derivatives.
//!
//! Each factor matrix is classified once, exactly, as nilpotent of degree
//! two, rotation-like (`X³ = −X`) or boost-like (`X³ = X`), so the factor
//! exponentials and their q-derivatives are closed-form.


use super::mat::{Mat4, RatMat4};
use super::rep::MatrixRep;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// `X² = 0`: exp(qX) = 1 + qX
    Nilpotent,
    /// `X³ = −X`: exp(qX) = 1 + sin(q) X + (1 − cos q) X²
    Rotation,
    /// `X³ = X`: exp(qX) = 1 + sinh(q) X + (cosh q − 1) X²
    Boost,
}

#[derive(Debug, Clone)]
pub struct ChartFactor {
    pub coord: String,
    pub generator: usize,
    pub kind: FactorKind,
    x: Mat4,
    x2: Mat4,
}

impl ChartFactor {
    fn classify(m: &RatMat4) -> Result<FactorKind> {
        let m2 = m.mul(m);
        if m2.is_zero() {
            return Ok(FactorKind::Nilpotent);
        }
        let m3 = m2.mul(m);
        if m3.add(m).is_zero() {
            return Ok(FactorKind::Rotation);
        }
        if m3.sub(m).is_zero() {
            return Ok(FactorKind::Boost);
        }
        Err(Error::Structural(
            "chart generator is not nilpotent, rotation-like or boost-like".into(),
        ))
    }

    /// exp(q X)
    pub fn exp(&self, q: f64) -> Mat4 {
        match self.kind {
            FactorKind::Nilpotent => Mat4::identity().add(&self.x.scale(q)),
            FactorKind::Rotation => Mat4::identity()
                .add(&self.x.scale(q.sin()))
                .add(&self.x2.scale(1.0 - q.cos())),
            FactorKind::Boost => Mat4::identity()
                .add(&self.x.scale(q.sinh()))
                .add(&self.x2.scale(q.cosh() - 1.0)),
        }
    }

    /// d/dq exp(q X) = X · exp(q X)
    pub fn exp_derivative(&self, q: f64) -> Mat4 {
        self.x.mul(&self.exp(q))
    }

    pub fn generator_matrix(&self) -> &Mat4 {
        &self.x
    }
}

/// Ordered exponential-product parametrization of the group through a
/// faithful representation. The factor order is part of the chart identity.
#[derive(Debug, Clone)]
pub struct GroupChart {
    rep: MatrixRep,
    factors: Vec<ChartFactor>,
}

impl GroupChart {
    /// `factors`: (coordinate name, generator index) in product order.
    pub fn new(rep: MatrixRep, factors: Vec<(&str, usize)>) -> Result<GroupChart> {
        if factors.len() != rep.dim() {
            return Err(Error::DimensionMismatch {
                expected: rep.dim(),
                got: factors.len(),
            });
        }
        let factors = factors
            .into_iter()
            .map(|(coord, generator)| {
                let rm = rep.matrix(generator);
                let kind = ChartFactor::classify(rm)?;
                let x = rm.to_f64()?;
                Ok(ChartFactor {
                    coord: coord.to_string(),
                    generator,
                    kind,
                    x,
                    x2: x.mul(&x),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupChart { rep, factors })
    }

    pub fn rep(&self) -> &MatrixRep {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[ChartFactor] {
        &self.factors
    }

    pub fn coord_names(&self) -> Vec<String> {
        self.factors.iter().map(|f| f.coord.clone()).collect()
    }

    pub fn coord_index(&self, name: &str) -> Option<usize> {
        self.factors.iter().position(|f| f.coord == name)
    }

    /// Reverse the factor order, keeping coordinate names attached to their
    /// generators.
    pub fn reversed(&self) -> GroupChart {
        let mut factors = self.factors.clone();
        factors.reverse();
        GroupChart {
            rep: self.rep.clone(),
            factors,
        }
    }

    fn check_point(&self, point: &[f64]) -> Result<()> {
        if point.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: point.len(),
            });
        }
        Ok(())
    }

    /// The group element at a chart point.
    pub fn group_element(&self, point: &[f64]) -> Result<Mat4> {
        self.check_point(point)?;
        let mut g = Mat4::identity();
        for (factor, &q) in self.factors.iter().zip(point) {
            g = g.mul(&factor.exp(q));
        }
        Ok(g)
    }

    /// Inverse element, assembled from the factor inverses.
    pub fn group_element_inverse(&self, point: &[f64]) -> Result<Mat4> {
        self.check_point(point)?;
        let mut g = Mat4::identity();
        for (factor, &q) in self.factors.iter().zip(point).rev() {
            g = g.mul(&factor.exp(-q));
        }
        Ok(g)
    }

    /// All partial derivatives `∂_μ g` at the point, via the product rule
    /// over factors with closed-form factor derivatives.
    pub fn derivatives(&self, point: &[f64]) -> Result<Vec<Mat4>> {
        self.check_point(point)?;
        let n = self.dim();
        let exps: Vec<Mat4> = self
            .factors
            .iter()
            .zip(point)
            .map(|(f, &q)| f.exp(q))
            .collect();
        // prefix[i] = F_0 ... F_{i-1}, suffix[i] = F_{i+1} ... F_{n-1}
        let mut prefix = vec![Mat4::identity(); n + 1];
        for i in 0..n {
            prefix[i + 1] = prefix[i].mul(&exps[i]);
        }
        let mut suffix = vec![Mat4::identity(); n + 1];
        for i in (0..n).rev() {
            suffix[i] = exps[i].mul(&suffix[i + 1]);
        }
        Ok((0..n)
            .map(|mu| {
                prefix[mu]
                    .mul(&self.factors[mu].exp_derivative(point[mu]))
                    .mul(&suffix[mu + 1])
            })
            .collect())
    }
}
