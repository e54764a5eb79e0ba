//! The 72-dimensional structure table of `𝒜_[a]` (or `𝒦_a`) over the
//! basis `{ w δ_g : w ∈ 𝔅, g ∈ S_3 }`.

use num::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};

use super::{relations, word_name, word_weight, RewriteSystem, SmashPoly, Variant, Word, WordOrder};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{fmt_q, Q};
use crate::symgroup::{ParamVector, SymGroup};
use crate::Error;

pub const SCHEMA_ID: &str = "hopf72/structure-table/v1";

/// Letters: 0 = x12, 1 = x13, 2 = x23.
const X12: u8 = 0;
const X13: u8 = 1;
const X23: u8 = 2;

/// The normal words in display order.
pub fn basis_words() -> Vec<Word> {
    let (a, b, c) = (X13, X23, X12);
    vec![
        vec![],
        vec![a],
        vec![b],
        vec![c],
        vec![a, c],
        vec![c, a],
        vec![b, c],
        vec![c, b],
        vec![a, c, a],
        vec![c, b, c],
        vec![a, c, b],
        vec![a, c, b, c],
    ]
}

/// Letter precedence x13 < x23 < x12 for tie-breaking.
pub fn letter_rank() -> Vec<u8> {
    vec![2, 0, 1]
}

/// Dense element of the algebra in the table basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement(pub Vector);

#[derive(Clone, Debug)]
pub struct StructureTable {
    pub grp: SymGroup,
    pub a: ParamVector,
    pub variant: Variant,
    pub words: Vec<Word>,
    pub weights: Vec<usize>,
    pub system: RewriteSystem,
    word_index: HashMap<Word, usize>,
    /// `prod[i*dim + j]` = sparse product of basis vectors `i` and `j`.
    prod: Vec<Vec<(usize, Q)>>,
}

impl StructureTable {
    /// Completes the relators, checks the normal words are exactly the
    /// expected twelve, and tabulates all products.
    pub fn build(a: &ParamVector, variant: Variant, degree_bound: usize) -> Result<Self, Error> {
        if a.n() != 3 {
            return Err(Error::Unsupported(format!(
                "the structure table is built for n = 3 only, got n = {}",
                a.n()
            )));
        }
        let grp = SymGroup::new(3);
        let words = basis_words();
        let preferred: BTreeSet<Word> = words.iter().cloned().collect();
        let rels: Vec<SmashPoly> = relations(a, 3, variant)?.into_iter().map(|r| r.poly).collect();
        let order = WordOrder::with_preferred(letter_rank(), preferred.clone());
        let system = RewriteSystem::complete(grp.clone(), &rels, order, degree_bound.max(5))?;
        let irr: BTreeSet<Word> = system.irreducible_words(5).into_iter().collect();
        if irr != preferred {
            return Err(Error::Completion(format!(
                "irreducible words differ from the expected basis: found {}",
                irr.len()
            )));
        }
        let word_index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let weights: Vec<usize> = words.iter().map(|w| word_weight(&grp, w)).collect();
        let nw = words.len();
        let ng = grp.order();
        let dim = nw * ng;
        let mut pair_nf: Vec<SmashPoly> = Vec::with_capacity(nw * nw);
        for u in &words {
            for v in &words {
                let mut uv = u.clone();
                uv.extend_from_slice(v);
                pair_nf.push(system.nf_word(&uv)?);
            }
        }
        let mut prod = vec![Vec::new(); dim * dim];
        for ui in 0..nw {
            for g in 0..ng {
                for vi in 0..nw {
                    for h in 0..ng {
                        if g != grp.mul(weights[vi], h) {
                            continue;
                        }
                        let p = &pair_nf[ui * nw + vi];
                        let mut entry = Vec::new();
                        for (w, c) in p.at(h) {
                            let wi = *word_index.get(&w).ok_or_else(|| {
                                Error::Completion(format!("normal form left the basis: {}", word_name(&grp, &w)))
                            })?;
                            entry.push((wi * ng + h, c));
                        }
                        entry.sort_by_key(|e| e.0);
                        prod[(ui * ng + g) * dim + vi * ng + h] = entry;
                    }
                }
            }
        }
        Ok(StructureTable { grp, a: a.clone(), variant, words, weights, system, word_index, prod })
    }

    pub fn dim(&self) -> usize {
        self.words.len() * self.grp.order()
    }

    pub fn index(&self, word: usize, g: usize) -> usize {
        word * self.grp.order() + g
    }

    /// `(word index, group index)` of a basis vector.
    pub fn split(&self, i: usize) -> (usize, usize) {
        (i / self.grp.order(), i % self.grp.order())
    }

    pub fn word_index(&self, w: &[u8]) -> Option<usize> {
        self.word_index.get(w).copied()
    }

    pub fn basis_name(&self, i: usize) -> String {
        let (w, g) = self.split(i);
        format!("{}|d{}", word_name(&self.grp, &self.words[w]), self.grp.name(g))
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.prod[i * self.dim() + j]
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vector {
        let dim = self.dim();
        let mut out = vec![Q::zero(); dim];
        let ys: Vec<(usize, &Q)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, cx) in x.iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            for &(j, cy) in &ys {
                let e = &self.prod[i * dim + j];
                if e.is_empty() {
                    continue;
                }
                let c = cx * cy;
                for (k, v) in e {
                    out[*k] += &c * v;
                }
            }
        }
        out
    }

    pub fn basis(&self, i: usize) -> Vector {
        crate::linalg::unit_vec(self.dim(), i)
    }

    pub fn unit(&self) -> Vector {
        let mut v = vec![Q::zero(); self.dim()];
        for g in 0..self.grp.order() {
            v[self.index(0, g)] = Q::one();
        }
        v
    }

    pub fn delta(&self, g: usize) -> Vector {
        self.basis(self.index(0, g))
    }

    /// `w = Σ_g w δ_g` for a normal word.
    pub fn word_elem(&self, w: &[u8]) -> Result<Vector, Error> {
        let p = self.system.nf_word(w)?;
        self.poly_elem(&p)
    }

    /// Generator `x_t` by transposition index.
    pub fn x(&self, k: usize) -> Vector {
        self.word_elem(&[k as u8]).expect("letters are normal")
    }

    /// Element of a normal-form smash polynomial.
    pub fn poly_elem(&self, p: &SmashPoly) -> Result<Vector, Error> {
        let p = self.system.nf(p)?;
        let mut v = vec![Q::zero(); self.dim()];
        for (w, phi) in &p.terms {
            let wi = self
                .word_index(w)
                .ok_or_else(|| Error::Completion(format!("word {} is not normal", word_name(&self.grp, w))))?;
            for (g, c) in phi.iter().enumerate() {
                v[self.index(wi, g)] = c.clone();
            }
        }
        Ok(v)
    }

    /// Left multiplication by `x` as a matrix acting on column vectors.
    pub fn left_matrix(&self, x: &[Q]) -> Matrix {
        let dim = self.dim();
        let mut m = Matrix::zeros(dim, dim);
        for j in 0..dim {
            let col = self.mul(x, &self.basis(j));
            for (i, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    m.set(i, j, c);
                }
            }
        }
        m
    }

    /// Right multiplication by `x` as a matrix acting on column vectors.
    pub fn right_matrix(&self, x: &[Q]) -> Matrix {
        let dim = self.dim();
        let mut m = Matrix::zeros(dim, dim);
        for j in 0..dim {
            let col = self.mul(&self.basis(j), x);
            for (i, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    m.set(i, j, c);
                }
            }
        }
        m
    }

    /// x-degree of a basis vector.
    pub fn degree(&self, i: usize) -> usize {
        self.words[self.split(i).0].len()
    }

    /// `χ = Σ sgn(g) δ_g`.
    pub fn chi(&self) -> Vector {
        let mut v = vec![Q::zero(); self.dim()];
        for g in 0..self.grp.order() {
            v[self.index(0, g)] = crate::scalar::q(self.grp.sign(g) as i64);
        }
        v
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` on every basis triple.
    /// Returns the number of triples with a nonzero side.
    pub fn verify_associativity(&self) -> Result<usize, Error> {
        let dim = self.dim();
        let mut nonzero = 0;
        for i in 0..dim {
            for j in 0..dim {
                let ij = self.basis_product(i, j);
                for k in 0..dim {
                    let jk = self.basis_product(j, k);
                    if ij.is_empty() && jk.is_empty() {
                        continue;
                    }
                    let mut lhs = vec![Q::zero(); dim];
                    for (m, c) in ij {
                        for (n, d) in self.basis_product(*m, k) {
                            lhs[*n] += c * d;
                        }
                    }
                    let mut rhs = vec![Q::zero(); dim];
                    for (m, c) in jk {
                        for (n, d) in self.basis_product(i, *m) {
                            rhs[*n] += c * d;
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::Verification(format!(
                            "associativity fails on ({}, {}, {})",
                            self.basis_name(i),
                            self.basis_name(j),
                            self.basis_name(k)
                        )));
                    }
                    if lhs.iter().any(|c| !c.is_zero()) {
                        nonzero += 1;
                    }
                }
            }
        }
        Ok(nonzero)
    }

    /// Evaluates every defining relator in the table and checks it vanishes.
    pub fn verify_relators(&self) -> Result<usize, Error> {
        let rels = relations(&self.a, 3, self.variant)?;
        for r in &rels {
            let mut acc = vec![Q::zero(); self.dim()];
            for (w, phi) in &r.poly.terms {
                let mut e = self.unit();
                for &l in w {
                    e = self.mul(&e, &self.x(l as usize));
                }
                let mut f = vec![Q::zero(); self.dim()];
                for (g, c) in phi.iter().enumerate() {
                    f[self.index(0, g)] = c.clone();
                }
                let t = self.mul(&e, &f);
                for (a, b) in acc.iter_mut().zip(t) {
                    *a += b;
                }
            }
            if acc.iter().any(|c| !c.is_zero()) {
                return Err(Error::Verification(format!("relator {} does not vanish", r.name)));
            }
        }
        Ok(rels.len())
    }

    /// Checks `1` is a two-sided unit on the basis.
    pub fn verify_unit(&self) -> Result<(), Error> {
        let u = self.unit();
        for i in 0..self.dim() {
            let b = self.basis(i);
            if self.mul(&u, &b) != b || self.mul(&b, &u) != b {
                return Err(Error::Verification(format!("unit fails on {}", self.basis_name(i))));
            }
        }
        Ok(())
    }

    pub fn render(&self, v: &[Q]) -> String {
        let parts: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}*{}", fmt_q(c), self.basis_name(i)))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn to_json(&self) -> StructureTableJson {
        let dim = self.dim();
        let mut products = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let e = self.basis_product(i, j);
                if !e.is_empty() {
                    products.push(ProductEntry {
                        left: i,
                        right: j,
                        terms: e.iter().map(|(k, c)| (*k, fmt_q(c))).collect(),
                    });
                }
            }
        }
        StructureTableJson {
            schema: SCHEMA_ID.into(),
            n: 3,
            parameter: self.a.to_strings(),
            variant: self.variant,
            dimension: dim,
            basis: (0..dim).map(|i| self.basis_name(i)).collect(),
            rules: self.system.render_rules(),
            products,
        }
    }
}

#[derive(Serialize, Debug)]
pub struct ProductEntry {
    pub left: usize,
    pub right: usize,
    pub terms: Vec<(usize, String)>,
}

#[derive(Serialize, Debug)]
pub struct StructureTableJson {
    #[serde(rename = "$schema")]
    pub schema: String,
    pub n: usize,
    pub parameter: Vec<String>,
    pub variant: Variant,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub rules: Vec<String>,
    pub products: Vec<ProductEntry>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_table_builds() {
        let a = ParamVector::from_ints(3, &[1, 2, -3]).unwrap();
        let t = StructureTable::build(&a, Variant::A, 6).unwrap();
        assert_eq!(t.dim(), 72);
        t.verify_unit().unwrap();
        assert_eq!(t.verify_relators().unwrap(), 5);
    }

    #[test]
    fn zero_table_builds() {
        let t = StructureTable::build(&ParamVector::zero(3), Variant::A, 6).unwrap();
        assert_eq!(t.system.rules.len(), 8);
    }
}
