//! Closed-form Poisson bracket tables on homogeneous-space coordinates:
//! the comparison targets for the numeric Sklyanin layer.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{Poly, Var};

/// Antisymmetric table `{x^i, x^j}` of polynomials in the coordinates, with
/// symbolic parameters allowed in the coefficients. Degree in the coordinates
/// is at most two for every catalog target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonTarget {
    coords: Vec<(String, Var)>,
    params: Vec<Var>,
    /// upper triangular: (i, j) with i < j
    table: BTreeMap<(usize, usize), Poly>,
}

impl PoissonTarget {
    pub fn new(
        coords: Vec<String>,
        params: Vec<Var>,
        entries: Vec<(usize, usize, Poly)>,
    ) -> Result<PoissonTarget> {
        let coords: Vec<(String, Var)> = coords
            .into_iter()
            .map(|name| {
                let v = Var::new(&name);
                (name, v)
            })
            .collect();
        let coord_vars: std::collections::BTreeSet<Var> =
            coords.iter().map(|(_, v)| *v).collect();
        let mut table = BTreeMap::new();
        for (i, j, p) in entries {
            if i >= coords.len() || j >= coords.len() || i == j {
                return Err(Error::Structural(
                    "poisson target indices out of range".into(),
                ));
            }
            if p.degree_in_set(&coord_vars) > 2 {
                return Err(Error::Structural(
                    "poisson target entry exceeds degree two in the coordinates".into(),
                ));
            }
            let (key, value) = if i < j { ((i, j), p) } else { ((j, i), p.neg()) };
            if table.insert(key, value).is_some() {
                return Err(Error::Structural(
                    "duplicate poisson target entry".into(),
                ));
            }
        }
        Ok(PoissonTarget {
            coords,
            params,
            table,
        })
    }

    pub fn coords(&self) -> Vec<String> {
        self.coords.iter().map(|(n, _)| n.clone()).collect()
    }

    pub fn coord_var(&self, i: usize) -> Var {
        self.coords[i].1
    }

    pub fn params(&self) -> &[Var] {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Poly)> {
        self.table.iter().map(|(&(i, j), p)| (i, j, p))
    }

    /// `{x^i, x^j}` with the sign implied by storage.
    pub fn bracket(&self, i: usize, j: usize) -> Poly {
        if i == j {
            return Poly::zero();
        }
        if i < j {
            self.table.get(&(i, j)).cloned().unwrap_or_else(Poly::zero)
        } else {
            self.table
                .get(&(j, i))
                .map(|p| p.neg())
                .unwrap_or_else(Poly::zero)
        }
    }

    /// Evaluate `{x^i, x^j}` at a coordinate point with parameters bound.
    pub fn eval(&self, i: usize, j: usize, point: &[f64], params: &BTreeMap<Var, f64>) -> Result<f64> {
        let p = self.bracket(i, j);
        let env = |v: Var| -> Option<f64> {
            if let Some(pos) = self.coords.iter().position(|(_, cv)| *cv == v) {
                return point.get(pos).copied();
            }
            params.get(&v).copied()
        };
        p.eval_f64(&env)
            .ok_or_else(|| Error::Numeric("unbound symbol in poisson target".into()))
    }

    /// Jacobiator `{x^i,{x^j,x^k}} + cyclic` as exact polynomials; all zero
    /// for a genuine Poisson structure.
    pub fn jacobiator(&self) -> Vec<((usize, usize, usize), Poly)> {
        let n = self.coords.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut acc = Poly::zero();
                    for m in 0..n {
                        let vm = self.coords[m].1;
                        let t1 = self.bracket(i, m).mul(&self.bracket(j, k).derivative(vm));
                        let t2 = self.bracket(j, m).mul(&self.bracket(k, i).derivative(vm));
                        let t3 = self.bracket(k, m).mul(&self.bracket(i, j).derivative(vm));
                        acc = acc.add(&t1).add(&t2).add(&t3);
                    }
                    if !acc.is_zero() {
                        out.push(((i, j, k), acc));
                    }
                }
            }
        }
        out
    }

    pub fn display(&self) -> Vec<String> {
        self.table
            .iter()
            .map(|(&(i, j), p)| {
                format!(
                    "{{{}, {}}} = {}",
                    self.coords[i].0, self.coords[j].0, p
                )
            })
            .collect()
    }
}
