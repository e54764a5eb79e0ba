//! The published submodule lattices of the Verma modules, as named generator
//! sets, and their comparison with a computed lattice.

use num::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::lattice::SubmoduleLattice;
use super::{combo, sample_point, Representation};
use crate::linalg::{parallel, zero_vec, Subspace, Vector};
use crate::presentation::table::StructureTable;
use crate::scalar::Q;
use crate::symgroup::{f_idx, Regime, RegimeTag, SymGroup};
use crate::Error;

const C: u8 = 0;
const A: u8 = 1;
const B: u8 = 2;

#[derive(Clone, Debug)]
pub enum ExpectedNode {
    /// Submodule generated by the vectors.
    Spin(Vec<Vector>),
    /// `𝒜·v` for `v` in a two-dimensional weight space, off the excluded lines.
    Family { weight: usize, excluded: Vec<Vector> },
}

#[derive(Clone, Debug)]
pub struct ExpectedLattice {
    pub g: usize,
    pub nodes: Vec<(String, ExpectedNode)>,
    /// `(upper, lower, label)`.
    pub edges: Vec<(String, String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeComparison {
    pub module: String,
    pub matched: Vec<(String, String)>,
    pub missing_nodes: Vec<String>,
    pub extra_nodes: Vec<String>,
    pub missing_edges: Vec<(String, String)>,
    pub extra_edges: Vec<(String, String)>,
    /// `(upper, lower, expected, computed)`.
    pub label_mismatches: Vec<(String, String, String, String)>,
    pub exclusions_match: bool,
}

impl LatticeComparison {
    pub fn passes(&self) -> bool {
        self.missing_nodes.is_empty()
            && self.extra_nodes.is_empty()
            && self.missing_edges.is_empty()
            && self.extra_edges.is_empty()
            && self.label_mismatches.is_empty()
            && self.exclusions_match
    }
}

struct Builder<'a> {
    table: &'a StructureTable,
    m: &'a Representation,
}

impl Builder<'_> {
    fn v(&self, terms: &[(&[u8], Q)]) -> Vector {
        let mut out = zero_vec(self.m.dim());
        for (w, c) in terms {
            let i = self.table.word_index(w).expect("normal word");
            out[i] += c;
        }
        out
    }

    fn w(&self, w: &[u8]) -> Vector {
        self.v(&[(w, Q::one())])
    }

    fn weight(&self, h: usize) -> Vec<Vector> {
        self.m.weight_space(h).basis().to_vec()
    }

    fn f(&self, k: usize, g: usize) -> Q {
        f_idx(&self.table.grp, &self.table.a, k, g)
    }

    fn m_soc(&self) -> Vector {
        let c = self.f(1, 3) * self.f(2, 2);
        self.v(&[(&[], c), (&[A, C, B, C], -Q::one())])
    }

    fn m_o(&self) -> Vector {
        let c = self.f(1, 3);
        self.v(&[(&[A, C, A], Q::one()), (&[B], c)])
    }
}

fn spin(vs: Vec<Vector>) -> ExpectedNode {
    ExpectedNode::Spin(vs)
}

fn edges(list: &[(&str, &str, &str)]) -> Vec<(String, String, String)> {
    list.iter().map(|(u, l, s)| (u.to_string(), l.to_string(), s.to_string())).collect()
}

/// The published lattice of `M_g`, when one is given for this regime and `g`.
pub fn expected_lattice(table: &StructureTable, m: &Representation, g: usize) -> Result<ExpectedLattice, Error> {
    let regime = Regime::classify(&table.a)?;
    let b = Builder { table, m };
    let (e, t12, c132) = (0usize, 1usize, 5usize);
    let m1 = b.w(&[]);
    let m4 = b.w(&[A, C, B, C]);
    let m3 = b.w(&[A, C, B]);
    let both = |x: usize, y: usize| {
        let mut v = b.weight(x);
        v.extend(b.weight(y));
        v
    };
    let out = match (regime.tag, g) {
        (RegimeTag::Generic, 0) => ExpectedLattice {
            g,
            nodes: vec![
                ("0".into(), spin(vec![])),
                ("<m4>".into(), spin(vec![m4])),
                ("A·v".into(), ExpectedNode::Family { weight: c132, excluded: vec![] }),
                ("N_e".into(), spin(b.weight(c132))),
                ("M_e".into(), spin(vec![m1])),
            ],
            edges: edges(&[("<m4>", "0", "k_e"), ("A·v", "<m4>", "L"), ("N_e", "A·v", "L"), ("M_e", "N_e", "k_e")]),
        },
        (RegimeTag::Generic, 5) => ExpectedLattice {
            g,
            nodes: vec![
                ("0".into(), spin(vec![])),
                ("A·m_soc".into(), spin(vec![b.m_soc()])),
                ("A·v".into(), ExpectedNode::Family { weight: e, excluded: vec![] }),
                ("N".into(), spin(b.weight(e))),
                ("M".into(), spin(vec![m1])),
            ],
            edges: edges(&[("A·m_soc", "0", "L"), ("A·v", "A·m_soc", "k_e"), ("N", "A·v", "k_e"), ("M", "N", "L")]),
        },
        (RegimeTag::SubGeneric, 0) => {
            let m2312 = b.w(&[B, C]);
            ExpectedLattice {
                g,
                nodes: vec![
                    ("0".into(), spin(vec![])),
                    ("<m4>".into(), spin(vec![m4])),
                    ("A·m(13)(12)(23)".into(), spin(vec![m3.clone()])),
                    ("A·m(23)(12)".into(), spin(vec![m2312.clone()])),
                    ("A·<m(13)(12)(23),m(23)(12)>".into(), spin(vec![m3.clone(), m2312.clone()])),
                    ("A·v".into(), ExpectedNode::Family { weight: c132, excluded: vec![m2312] }),
                    ("A·w".into(), ExpectedNode::Family { weight: t12, excluded: vec![m3] }),
                    ("A·M[(13)(23)]".into(), spin(b.weight(c132))),
                    ("A·M[(12)]".into(), spin(b.weight(t12))),
                    ("N_e".into(), spin(both(c132, t12))),
                    ("M_e".into(), spin(vec![m1])),
                ],
                edges: edges(&[
                    ("M_e", "N_e", "k_e"),
                    ("N_e", "A·M[(13)(23)]", "k_(12)"),
                    ("N_e", "A·M[(12)]", "L"),
                    ("A·M[(13)(23)]", "A·v", "L"),
                    ("A·M[(13)(23)]", "A·<m(13)(12)(23),m(23)(12)>", "L"),
                    ("A·M[(12)]", "A·<m(13)(12)(23),m(23)(12)>", "k_(12)"),
                    ("A·M[(12)]", "A·w", "k_(12)"),
                    ("A·v", "A·m(13)(12)(23)", "L"),
                    ("A·<m(13)(12)(23),m(23)(12)>", "A·m(13)(12)(23)", "L"),
                    ("A·<m(13)(12)(23),m(23)(12)>", "A·m(23)(12)", "k_(12)"),
                    ("A·w", "A·m(23)(12)", "k_(12)"),
                    ("A·m(13)(12)(23)", "<m4>", "k_(12)"),
                    ("A·m(23)(12)", "<m4>", "L"),
                    ("<m4>", "0", "k_e"),
                ]),
            }
        }
        (RegimeTag::SubGeneric, 5) => {
            let m1223 = b.w(&[C, B]);
            let mo = b.m_o();
            ExpectedLattice {
                g,
                nodes: vec![
                    ("0".into(), spin(vec![])),
                    ("A·m_soc".into(), spin(vec![b.m_soc()])),
                    ("A·m_o".into(), spin(vec![mo.clone()])),
                    ("A·m(12)(23)".into(), spin(vec![m1223.clone()])),
                    ("A·<m_o,m(12)(23)>".into(), spin(vec![mo.clone(), m1223.clone()])),
                    ("A·v".into(), ExpectedNode::Family { weight: e, excluded: vec![m1223] }),
                    ("A·w".into(), ExpectedNode::Family { weight: t12, excluded: vec![mo] }),
                    ("A·M[e]".into(), spin(b.weight(e))),
                    ("A·M[(12)]".into(), spin(b.weight(t12))),
                    ("N".into(), spin(both(e, t12))),
                    ("M".into(), spin(vec![m1])),
                ],
                edges: edges(&[
                    ("M", "N", "L"),
                    ("N", "A·M[e]", "k_(12)"),
                    ("N", "A·M[(12)]", "k_e"),
                    ("A·M[e]", "A·v", "k_e"),
                    ("A·M[e]", "A·<m_o,m(12)(23)>", "k_e"),
                    ("A·M[(12)]", "A·<m_o,m(12)(23)>", "k_(12)"),
                    ("A·M[(12)]", "A·w", "k_(12)"),
                    ("A·v", "A·m_o", "k_e"),
                    ("A·<m_o,m(12)(23)>", "A·m_o", "k_e"),
                    ("A·<m_o,m(12)(23)>", "A·m(12)(23)", "k_(12)"),
                    ("A·w", "A·m(12)(23)", "k_(12)"),
                    ("A·m_o", "A·m_soc", "k_(12)"),
                    ("A·m(12)(23)", "A·m_soc", "k_e"),
                    ("A·m_soc", "0", "L"),
                ]),
            }
        }
        (RegimeTag::SubGeneric, 1) => {
            let mo = b.m_o();
            ExpectedLattice {
                g,
                nodes: vec![
                    ("0".into(), spin(vec![])),
                    ("<m4>".into(), spin(vec![m4])),
                    ("A·m(13)(12)(23)".into(), spin(vec![m3.clone()])),
                    ("A·m_o".into(), spin(vec![mo.clone()])),
                    ("A·<m(13)(12)(23),m_o>".into(), spin(vec![m3.clone(), mo.clone()])),
                    ("A·v".into(), ExpectedNode::Family { weight: c132, excluded: vec![mo] }),
                    ("A·w".into(), ExpectedNode::Family { weight: e, excluded: vec![m3] }),
                    ("A·M[(13)(23)]".into(), spin(b.weight(c132))),
                    ("A·M[e]".into(), spin(b.weight(e))),
                    ("N".into(), spin(both(c132, e))),
                    ("M".into(), spin(vec![m1])),
                ],
                edges: edges(&[
                    ("M", "N", "k_(12)"),
                    ("N", "A·M[(13)(23)]", "k_e"),
                    ("N", "A·M[e]", "L"),
                    ("A·M[(13)(23)]", "A·v", "L"),
                    ("A·M[(13)(23)]", "A·<m(13)(12)(23),m_o>", "L"),
                    ("A·M[e]", "A·<m(13)(12)(23),m_o>", "k_e"),
                    ("A·M[e]", "A·w", "k_e"),
                    ("A·v", "A·m(13)(12)(23)", "L"),
                    ("A·<m(13)(12)(23),m_o>", "A·m(13)(12)(23)", "L"),
                    ("A·<m(13)(12)(23),m_o>", "A·m_o", "k_e"),
                    ("A·w", "A·m_o", "k_e"),
                    ("A·m(13)(12)(23)", "<m4>", "k_e"),
                    ("A·m_o", "<m4>", "L"),
                    ("<m4>", "0", "k_(12)"),
                ]),
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "no published lattice for M_{} in the {} regime",
                SymGroup::new(3).name(g),
                regime.tag
            )))
        }
    };
    Ok(out)
}

/// Matches every expected node to a computed one, then compares covering edges and labels.
pub fn compare(lat: &SubmoduleLattice, exp: &ExpectedLattice, seed: u64) -> LatticeComparison {
    let m = &lat.module;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut matched: Vec<(String, String)> = Vec::new();
    let mut missing_nodes = Vec::new();
    let mut exclusions_match = true;
    for (name, node) in &exp.nodes {
        let id = match node {
            ExpectedNode::Spin(vs) => {
                let s = if vs.is_empty() { Subspace::zero(m.dim()) } else { m.spin(vs) };
                lat.locate(&s)
            }
            ExpectedNode::Family { weight, excluded } => {
                let basis = m.weight_space(*weight).basis().to_vec();
                let mut ids = Vec::new();
                let mut tries = 0;
                while ids.len() < 3 && tries < 100 {
                    tries += 1;
                    let (l, mu) = sample_point(&mut rng);
                    let v = combo(&[(l, &basis[0]), (mu, &basis[1])]);
                    if excluded.iter().any(|x| parallel(x, &v)) {
                        continue;
                    }
                    ids.push(lat.locate(&m.spin(&[v])));
                }
                let first = ids[0].clone();
                let same = ids.iter().all(|x| x == &first && x.is_some());
                if let (true, Some(id)) = (same, &first) {
                    let f = lat.nodes.iter().position(|(i, _)| i == id);
                    if let Some(super::lattice::NodeRef::Family(fi)) = f.map(|p| lat.nodes[p].1) {
                        let got = lat.special_lines(fi, *weight);
                        let ok = got.len() == excluded.len()
                            && excluded.iter().all(|x| got.iter().any(|y| parallel(x, y)));
                        exclusions_match &= ok;
                    } else {
                        exclusions_match = false;
                    }
                }
                if same {
                    first
                } else {
                    None
                }
            }
        };
        match id {
            Some(id) => matched.push((name.clone(), id)),
            None => missing_nodes.push(name.clone()),
        }
    }
    let to_id = |n: &str| matched.iter().find(|(e, _)| e == n).map(|(_, c)| c.clone());
    let matched_ids: Vec<&String> = matched.iter().map(|(_, c)| c).collect();
    let extra_nodes: Vec<String> =
        lat.nodes.iter().map(|(id, _)| id.clone()).filter(|id| !matched_ids.contains(&id)).collect();
    let to_name = |id: &str| {
        matched.iter().find(|(_, c)| c == id).map(|(e, _)| e.clone()).unwrap_or_else(|| id.to_string())
    };
    let mut missing_edges = Vec::new();
    let mut label_mismatches = Vec::new();
    let mut used = vec![false; lat.edges.len()];
    for (u, l, label) in &exp.edges {
        let (Some(ui), Some(li)) = (to_id(u), to_id(l)) else {
            missing_edges.push((u.clone(), l.clone()));
            continue;
        };
        match lat.edges.iter().position(|e| e.upper == ui && e.lower == li) {
            Some(p) => {
                used[p] = true;
                if &lat.edges[p].label != label {
                    label_mismatches.push((u.clone(), l.clone(), label.clone(), lat.edges[p].label.clone()));
                }
            }
            None => missing_edges.push((u.clone(), l.clone())),
        }
    }
    let extra_edges = lat
        .edges
        .iter()
        .zip(&used)
        .filter(|(_, u)| !**u)
        .map(|(e, _)| (to_name(&e.upper), to_name(&e.lower)))
        .collect();
    LatticeComparison {
        module: m.label.clone(),
        matched,
        missing_nodes,
        extra_nodes,
        missing_edges,
        extra_edges,
        label_mismatches,
        exclusions_match,
    }
}

/// The Verma modules with a published lattice in the regime of `a`.
pub fn published_vermas(tag: RegimeTag) -> Vec<usize> {
    match tag {
        RegimeTag::Generic => vec![0, 5],
        RegimeTag::SubGeneric => vec![0, 1, 5],
        RegimeTag::Zero => vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Variant;
    use crate::repcore::simples::classify_simples;
    use crate::repcore::verma;
    use crate::ParamVector;

    #[test]
    fn published_lattices_match() {
        for a in [[1, 2, -3], [2, -1, -1]] {
            let t = StructureTable::build(&ParamVector::from_ints(3, &a).unwrap(), Variant::A, 6).unwrap();
            let c = classify_simples(&t).unwrap();
            for g in published_vermas(Regime::classify(&t.a).unwrap().tag) {
                let m = verma(&t, g);
                let lat = SubmoduleLattice::compute(&m, &c.simples, 11).unwrap();
                let exp = expected_lattice(&t, &m, g).unwrap();
                let cmp = compare(&lat, &exp, 5);
                assert!(lat.families_symbolic && lat.families_sampled);
                assert!(cmp.passes(), "{a:?} {}: {cmp:#?}", m.label);
            }
        }
    }
}
