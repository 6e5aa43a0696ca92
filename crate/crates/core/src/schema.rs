//! TOML/JSON exchange format for algebras, r-matrices, double specs,
//! cocommutators, Poisson targets and basis isomorphisms. Scalar-strings are
//! rational expressions in the document's declared parameters.

use serde::{Deserialize, Serialize};

use crate::algebra::{Bivector, LieAlgebra, Vector};
use crate::bialgebra::Cocommutator;
use crate::catalog::{BasisIso, CatalogEntry, Payload, PoissonTarget};
use crate::double::DoubleSpec;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, Var};

/// One document of the exchange format, discriminated by `kind`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    LieAlgebra(AlgebraDoc),
    RMatrix(RMatrixDoc),
    DoubleSpec(DoubleSpecDoc),
    Cocommutator(CocommutatorDoc),
    PoissonTarget(PoissonDoc),
    BasisIso(IsoDoc),
    Pairing(TensorDoc),
    Casimir(TensorDoc),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub params: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketDoc {
    pub i: String,
    pub j: String,
    /// target basis name -> scalar expression
    pub coeffs: std::collections::BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RMatrixDoc {
    pub algebra: String,
    pub basis: Vec<String>,
    #[serde(default)]
    pub params: Vec<String>,
    pub terms: Vec<WedgeTermDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WedgeTermDoc {
    pub i: String,
    pub j: String,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DoubleSpecDoc {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub params: Vec<String>,
    #[serde(default)]
    pub c: Vec<BracketDoc>,
    #[serde(default)]
    pub f: Vec<BracketDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CocommutatorDoc {
    pub algebra: String,
    pub basis: Vec<String>,
    #[serde(default)]
    pub params: Vec<String>,
    pub lines: Vec<CocommutatorLineDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CocommutatorLineDoc {
    pub generator: String,
    pub terms: Vec<WedgeTermDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PoissonDoc {
    pub coords: Vec<String>,
    #[serde(default)]
    pub params: Vec<String>,
    pub brackets: Vec<PoissonEntryDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PoissonEntryDoc {
    pub i: String,
    pub j: String,
    pub expr: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IsoDoc {
    pub name: String,
    pub source: String,
    pub target: String,
    pub source_basis: Vec<String>,
    pub target_basis: Vec<String>,
    #[serde(default)]
    pub params: Vec<String>,
    pub map: Vec<IsoLineDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IsoLineDoc {
    pub from: String,
    /// target basis name -> scalar expression
    pub to: std::collections::BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TensorDoc {
    pub algebra: String,
    pub basis: Vec<String>,
    #[serde(default)]
    pub params: Vec<String>,
    pub entries: Vec<TensorEntryDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TensorEntryDoc {
    pub i: String,
    pub j: String,
    pub coeff: String,
}

fn declare_params(names: &[String]) -> Vec<Var> {
    names.iter().map(|n| Var::new(n)).collect()
}

fn index_of(basis: &[String], name: &str) -> Result<usize> {
    basis
        .iter()
        .position(|b| b == name)
        .ok_or_else(|| Error::Schema(format!("unknown basis name `{name}`")))
}

impl AlgebraDoc {
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        if self.basis.len() != self.dim {
            return Err(Error::Schema(format!(
                "declared dim {} does not match basis length {}",
                self.dim,
                self.basis.len()
            )));
        }
        let params = declare_params(&self.params);
        let mut brackets = Vec::new();
        for b in &self.brackets {
            let i = index_of(&self.basis, &b.i)?;
            let j = index_of(&self.basis, &b.j)?;
            let mut coeffs = Vec::new();
            for (k, expr) in &b.coeffs {
                let k = index_of(&self.basis, k)?;
                coeffs.push((k, Scalar::parse(expr, &params)?));
            }
            brackets.push((i, j, coeffs));
        }
        LieAlgebra::new(&self.name, self.basis.clone(), params, brackets)
    }

    pub fn from_algebra(la: &LieAlgebra) -> AlgebraDoc {
        let mut brackets = Vec::new();
        for i in 0..la.dim() {
            for j in (i + 1)..la.dim() {
                let v = la.bracket_basis(i, j);
                let mut coeffs = std::collections::BTreeMap::new();
                for k in 0..la.dim() {
                    if !v.coeff(k).is_zero() {
                        coeffs.insert(la.basis()[k].clone(), format!("{}", v.coeff(k)));
                    }
                }
                if !coeffs.is_empty() {
                    brackets.push(BracketDoc {
                        i: la.basis()[i].clone(),
                        j: la.basis()[j].clone(),
                        coeffs,
                    });
                }
            }
        }
        AlgebraDoc {
            name: la.name().to_string(),
            dim: la.dim(),
            basis: la.basis().to_vec(),
            params: la.params().iter().map(|p| p.name()).collect(),
            brackets,
        }
    }
}

impl RMatrixDoc {
    pub fn to_bivector(&self) -> Result<Bivector> {
        let params = declare_params(&self.params);
        let mut r = Bivector::zero(self.basis.len());
        for t in &self.terms {
            let i = index_of(&self.basis, &t.i)?;
            let j = index_of(&self.basis, &t.j)?;
            r.add_term(i, j, Scalar::parse(&t.coeff, &params)?);
        }
        Ok(r)
    }

    pub fn from_bivector(algebra: &str, basis: &[String], params: &[Var], r: &Bivector) -> RMatrixDoc {
        RMatrixDoc {
            algebra: algebra.to_string(),
            basis: basis.to_vec(),
            params: params.iter().map(|p| p.name()).collect(),
            terms: r
                .terms()
                .map(|(i, j, c)| WedgeTermDoc {
                    i: basis[i].clone(),
                    j: basis[j].clone(),
                    coeff: format!("{}", c),
                })
                .collect(),
        }
    }
}

impl DoubleSpecDoc {
    pub fn to_spec(&self) -> Result<DoubleSpec> {
        if self.basis.len() != self.dim {
            return Err(Error::Schema(format!(
                "declared dim {} does not match basis length {}",
                self.dim,
                self.basis.len()
            )));
        }
        let params = declare_params(&self.params);
        // f-blocks may reference the dual names y1..yd
        let dual_basis: Vec<String> = (1..=self.dim).map(|i| format!("y{}", i)).collect();
        let parse_block = |block: &[BracketDoc], basis: &[String]| -> Result<Vec<(usize, usize, Vec<(usize, Scalar)>)>> {
            block
                .iter()
                .map(|b| {
                    let i = index_of(basis, &b.i)?;
                    let j = index_of(basis, &b.j)?;
                    let coeffs = b
                        .coeffs
                        .iter()
                        .map(|(k, expr)| Ok((index_of(basis, k)?, Scalar::parse(expr, &params)?)))
                        .collect::<Result<Vec<_>>>()?;
                    Ok((i, j, coeffs))
                })
                .collect()
        };
        DoubleSpec::new(
            &self.name,
            self.basis.clone(),
            params.clone(),
            parse_block(&self.c, &self.basis)?,
            parse_block(&self.f, &dual_basis)?,
        )
    }
}

impl CocommutatorDoc {
    pub fn to_cocommutator(&self) -> Result<Cocommutator> {
        let params = declare_params(&self.params);
        let mut deltas = vec![Bivector::zero(self.basis.len()); self.basis.len()];
        for line in &self.lines {
            let n = index_of(&self.basis, &line.generator)?;
            for t in &line.terms {
                let i = index_of(&self.basis, &t.i)?;
                let j = index_of(&self.basis, &t.j)?;
                deltas[n].add_term(i, j, Scalar::parse(&t.coeff, &params)?);
            }
        }
        Cocommutator::new(deltas)
    }
}

impl PoissonDoc {
    pub fn to_target(&self) -> Result<PoissonTarget> {
        let params = declare_params(&self.params);
        let mut all: Vec<Var> = self.coords.iter().map(|c| Var::new(c)).collect();
        all.extend(params.iter().copied());
        let entries = self
            .brackets
            .iter()
            .map(|e| {
                let i = index_of(&self.coords, &e.i)?;
                let j = index_of(&self.coords, &e.j)?;
                let s = Scalar::parse(&e.expr, &all)?;
                if !s.denominator().is_one() {
                    return Err(Error::Schema(format!(
                        "poisson entry `{}` is not polynomial",
                        e.expr
                    )));
                }
                Ok((i, j, s.numerator().clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        PoissonTarget::new(self.coords.clone(), params, entries)
    }

    pub fn from_target(t: &PoissonTarget) -> PoissonDoc {
        let coords = t.coords();
        PoissonDoc {
            coords: coords.clone(),
            params: t.params().iter().map(|p| p.name()).collect(),
            brackets: t
                .entries()
                .map(|(i, j, p)| PoissonEntryDoc {
                    i: coords[i].clone(),
                    j: coords[j].clone(),
                    expr: format!("{}", p),
                })
                .collect(),
        }
    }
}

/// Export any catalog entry as a document for round-tripping.
pub fn export_entry(entry: &CatalogEntry) -> Result<Document> {
    let host_basis = |algebra: &str| -> Result<Vec<String>> {
        Ok(crate::catalog::get(algebra)?.algebra()?.basis().to_vec())
    };
    Ok(match &entry.payload {
        Payload::Algebra(la) => Document::LieAlgebra(AlgebraDoc::from_algebra(la)),
        Payload::RMatrix { algebra, r } => Document::RMatrix(RMatrixDoc::from_bivector(
            algebra,
            &host_basis(algebra)?,
            &entry.params,
            r,
        )),
        Payload::Cocommutator { algebra, delta } => {
            let basis = host_basis(algebra)?;
            Document::Cocommutator(CocommutatorDoc {
                algebra: algebra.clone(),
                basis: basis.clone(),
                params: entry.params.iter().map(|p| p.name()).collect(),
                lines: delta
                    .deltas()
                    .iter()
                    .enumerate()
                    .filter(|(_, d)| !d.is_zero())
                    .map(|(n, d)| CocommutatorLineDoc {
                        generator: basis[n].clone(),
                        terms: d
                            .terms()
                            .map(|(i, j, c)| WedgeTermDoc {
                                i: basis[i].clone(),
                                j: basis[j].clone(),
                                coeff: format!("{}", c),
                            })
                            .collect(),
                    })
                    .collect(),
            })
        }
        Payload::Casimir { algebra, tensor } | Payload::Pairing { algebra, form: tensor } => {
            let basis = host_basis(algebra)?;
            let mut entries = Vec::new();
            for i in 0..tensor.dim() {
                for j in 0..tensor.dim() {
                    if !tensor.get(i, j).is_zero() {
                        entries.push(TensorEntryDoc {
                            i: basis[i].clone(),
                            j: basis[j].clone(),
                            coeff: format!("{}", tensor.get(i, j)),
                        });
                    }
                }
            }
            let doc = TensorDoc {
                algebra: algebra.clone(),
                basis,
                params: entry.params.iter().map(|p| p.name()).collect(),
                entries,
            };
            if matches!(entry.payload, Payload::Casimir { .. }) {
                Document::Casimir(doc)
            } else {
                Document::Pairing(doc)
            }
        }
        Payload::Poisson(t) => Document::PoissonTarget(PoissonDoc::from_target(t)),
        Payload::Iso(iso) => {
            let source_basis = host_basis(iso.source())?;
            let target_basis = host_basis(iso.target())?;
            Document::BasisIso(IsoDoc {
                name: iso.name().to_string(),
                source: iso.source().to_string(),
                target: iso.target().to_string(),
                source_basis: source_basis.clone(),
                target_basis: target_basis.clone(),
                params: entry.params.iter().map(|p| p.name()).collect(),
                map: (0..source_basis.len())
                    .map(|i| {
                        let img = iso.image_of_basis(i);
                        let mut to = std::collections::BTreeMap::new();
                        for (k, name) in target_basis.iter().enumerate() {
                            if !img.coeff(k).is_zero() {
                                to.insert(name.clone(), format!("{}", img.coeff(k)));
                            }
                        }
                        IsoLineDoc {
                            from: source_basis[i].clone(),
                            to,
                        }
                    })
                    .collect(),
            })
        }
    })
}

/// Rebuild the payload-bearing object from an imported iso document against a
/// known pair of catalog algebras.
pub fn import_iso(doc: &IsoDoc) -> Result<BasisIso> {
    let source = crate::catalog::get(&doc.source)?.algebra()?;
    let target = crate::catalog::get(&doc.target)?.algebra()?;
    let params = declare_params(&doc.params);
    let mut images = vec![Vector::zero(target.dim()); source.dim()];
    for line in &doc.map {
        let from = index_of(&doc.source_basis, &line.from)?;
        let mut v = Vector::zero(target.dim());
        for (name, expr) in &line.to {
            let k = index_of(&doc.target_basis, name)?;
            v.set(k, Scalar::parse(expr, &params)?);
        }
        images[from] = v;
    }
    BasisIso::new(&doc.name, &source, &target, images)
}

pub fn to_toml(doc: &Document) -> Result<String> {
    toml::to_string_pretty(doc).map_err(|e| Error::Schema(format!("toml encode: {e}")))
}

pub fn from_toml(src: &str) -> Result<Document> {
    toml::from_str(src).map_err(|e| Error::Schema(format!("toml decode: {e}")))
}

pub fn to_json(doc: &Document) -> Result<String> {
    serde_json::to_string_pretty(doc).map_err(|e| Error::Schema(format!("json encode: {e}")))
}

pub fn from_json(src: &str) -> Result<Document> {
    serde_json::from_str(src).map_err(|e| Error::Schema(format!("json decode: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn algebra_roundtrip_through_toml() {
        let e3 = catalog::euclid3();
        let doc = Document::LieAlgebra(AlgebraDoc::from_algebra(&e3));
        let text = to_toml(&doc).unwrap();
        let back = from_toml(&text).unwrap();
        let Document::LieAlgebra(doc2) = back else {
            panic!("wrong document kind");
        };
        let rebuilt = doc2.to_algebra().unwrap();
        assert!(rebuilt.structurally_equal(&e3));
    }

    #[test]
    fn user_algebra_from_toml() {
        let text = r#"
kind = "lie_algebra"
name = "heis"
dim = 3
basis = ["X", "Y", "Z"]
params = ["c"]

[[brackets]]
i = "X"
j = "Y"
[brackets.coeffs]
Z = "c"
"#;
        let Document::LieAlgebra(doc) = from_toml(text).unwrap() else {
            panic!("wrong kind");
        };
        let la = doc.to_algebra().unwrap();
        assert_eq!(la.dim(), 3);
        assert_eq!(
            *la.bracket_basis(0, 1).coeff(2),
            Scalar::param("c")
        );
        // undeclared / malformed inputs fail cleanly
        let bad = text.replace("Z = \"c\"", "Z = \"undeclared\"");
        let Document::LieAlgebra(bad_doc) = from_toml(&bad).unwrap() else {
            panic!()
        };
        assert!(bad_doc.to_algebra().is_err());
    }

    #[test]
    fn rmatrix_and_poisson_roundtrip_json() {
        for id in ["so31.caseD", "poincare21.case3"] {
            let entry = catalog::get(id).unwrap();
            let doc = export_entry(&entry).unwrap();
            let text = to_json(&doc).unwrap();
            let Document::RMatrix(doc2) = from_json(&text).unwrap() else {
                panic!("wrong kind");
            };
            assert_eq!(doc2.to_bivector().unwrap(), entry.r_matrix().unwrap());
        }
        let entry = catalog::get("poincare21.case1.phs").unwrap();
        let doc = export_entry(&entry).unwrap();
        let text = to_json(&doc).unwrap();
        let Document::PoissonTarget(doc2) = from_json(&text).unwrap() else {
            panic!("wrong kind");
        };
        assert_eq!(doc2.to_target().unwrap(), entry.poisson_target().unwrap());
    }

    #[test]
    fn double_spec_from_toml() {
        let text = r#"
kind = "double_spec"
name = "euclid-double"
dim = 3
basis = ["J1", "J2", "J3"]

[[c]]
i = "J1"
j = "J2"
[c.coeffs]
J3 = "1"

[[c]]
i = "J2"
j = "J3"
[c.coeffs]
J1 = "1"

[[c]]
i = "J1"
j = "J3"
[c.coeffs]
J2 = "-1"
"#;
        let Document::DoubleSpec(doc) = from_toml(text).unwrap() else {
            panic!("wrong kind");
        };
        let spec = doc.to_spec().unwrap();
        let dd = crate::double::assemble_double(&spec).unwrap();
        assert_eq!(dd.dim(), 6);
    }

    #[test]
    fn iso_export_reimports_and_verifies() {
        let entry = catalog::get("so31.csiso").unwrap();
        let doc = export_entry(&entry).unwrap();
        let Document::BasisIso(iso_doc) = &doc else {
            panic!("wrong kind")
        };
        let iso = import_iso(iso_doc).unwrap();
        assert_eq!(iso.name(), "csiso");
    }
}
