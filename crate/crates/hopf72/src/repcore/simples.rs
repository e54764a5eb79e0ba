//! Simple modules and the projective covers `𝒜 δ_g`.

use serde::Serialize;

use super::{
    end_algebra, identify, is_indecomposable, is_simple, jacobson_radical, module_radical, module_socle, onedim,
    simple_l, verma, Representation,
};
use crate::linalg::Subspace;
use crate::presentation::table::StructureTable;
use crate::symgroup::{isotropy_group, Regime, RegimeTag, SymGroup};
use crate::Error;

#[derive(Clone, Debug)]
pub struct SimpleClassification {
    pub regime: RegimeTag,
    pub simples: Vec<Representation>,
    pub radical: Subspace,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleSummary {
    pub regime: RegimeTag,
    pub simples: Vec<SimpleEntry>,
    pub radical_dimension: usize,
    /// `Σ dim² + dim J = 72`.
    pub wedderburn_ok: bool,
    pub all_simple: bool,
    /// Every `M_g / rad M_g` is one of the listed simples.
    pub tops_covered: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleEntry {
    pub name: String,
    pub dimension: usize,
    pub weights: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverReport {
    pub g: String,
    pub primitive: bool,
    pub top: Option<String>,
    pub socle: Option<String>,
    pub top_dim: usize,
    pub socle_dim: usize,
}

/// Candidate simples: the one-dimensional `k_h`, `h` in the isotropy group, plus `L` when it exists.
pub fn classify_simples(table: &StructureTable) -> Result<SimpleClassification, Error> {
    let regime = Regime::classify(&table.a)?;
    if regime.tag == RegimeTag::SubGeneric && regime.canonical != table.a {
        return Err(Error::Precondition(format!("normalize the sub-generic parameter {} first", table.a)));
    }
    let grp = SymGroup::new(3);
    let mut simples = Vec::new();
    for h in isotropy_group(&table.a) {
        simples.push(onedim(&table.a, grp.index_of(&h))?);
    }
    if regime.tag != RegimeTag::Zero {
        simples.push(simple_l(&table.a)?);
    }
    Ok(SimpleClassification { regime: regime.tag, simples, radical: jacobson_radical(table) })
}

impl SimpleClassification {
    pub fn summary(&self, table: &StructureTable) -> SimpleSummary {
        let grp = SymGroup::new(3);
        let sq: usize = self.simples.iter().map(|s| s.dim() * s.dim()).sum();
        let all_simple = self.simples.iter().all(|s| is_simple(table, &self.radical, s))
            && (0..self.simples.len())
                .all(|i| (0..i).all(|j| super::hom_space(&self.simples[i], &self.simples[j]).is_empty()));
        let tops_covered = (0..6).all(|g| {
            let m = verma(table, g);
            let rad = module_radical(table, &self.radical, &m);
            m.quotient(&rad, "top").map(|t| identify(&t, &self.simples).is_some()).unwrap_or(false)
        });
        SimpleSummary {
            regime: self.regime,
            simples: self
                .simples
                .iter()
                .map(|s| SimpleEntry {
                    name: s.label.clone(),
                    dimension: s.dim(),
                    weights: s.weights.iter().map(|&w| grp.name(w)).collect(),
                })
                .collect(),
            radical_dimension: self.radical.dim(),
            wedderburn_ok: sq + self.radical.dim() == table.dim(),
            all_simple,
            tops_covered,
        }
    }

    /// `δ_g` is primitive (`End(M_g)` local) and `M_g` has simple top and socle.
    pub fn cover_report(&self, table: &StructureTable, g: usize) -> CoverReport {
        let grp = SymGroup::new(3);
        let m = verma(table, g);
        let rad = module_radical(table, &self.radical, &m);
        let soc = module_socle(table, &self.radical, &m);
        let name_of = |r: Option<Representation>| {
            r.and_then(|r| {
                if is_simple(table, &self.radical, &r) {
                    identify(&r, &self.simples).map(|i| self.simples[i].label.clone())
                } else {
                    None
                }
            })
        };
        let top = name_of(m.quotient(&rad, "top").ok());
        let socle = name_of(m.restrict(&soc, "socle").ok());
        CoverReport {
            g: grp.name(g),
            primitive: is_indecomposable(&m) && end_algebra(&m).len() >= 1,
            top,
            socle,
            top_dim: m.dim() - rad.dim(),
            socle_dim: soc.dim(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Variant;
    use crate::ParamVector;

    #[test]
    fn radical_dimensions() {
        for (a, j) in [([1, 2, -3], 46), ([2, -1, -1], 54), ([0, 0, 0], 66)] {
            let t = StructureTable::build(&ParamVector::from_ints(3, &a).unwrap(), Variant::A, 6).unwrap();
            let c = classify_simples(&t).unwrap();
            let s = c.summary(&t);
            assert_eq!(s.radical_dimension, j);
            assert!(s.wedderburn_ok && s.all_simple && s.tops_covered);
        }
    }
}
