//! Coproduct, counit and antipode on the structure table, and the
//! Hopf-theoretic invariants: group-likes, skew-primitives, Hopf
//! subalgebras, integrals and the quasitriangularity obstruction.

pub mod deform;

use num::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

use crate::linalg::{nullspace, parallel, sparse_kernel, SparseVec, Subspace, Vector};
use crate::presentation::{relations, StructureTable, Word};
use crate::scalar::{fmt_q, q, qf, Q};
use crate::Error;

/// Sparse element of `𝒜 ⊗ 𝒜` keyed by basis index pairs.
pub type Tensor = BTreeMap<(usize, usize), Q>;

fn tensor_add(acc: &mut Tensor, c: &Q, t: &Tensor) {
    for (k, v) in t {
        let e = acc.entry(*k).or_insert_with(Q::zero);
        *e += c * v;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

fn tensor_sub(a: &Tensor, b: &Tensor) -> Tensor {
    let mut out = a.clone();
    tensor_add(&mut out, &-Q::one(), b);
    out
}

/// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
pub fn tensor_mul(t: &StructureTable, x: &Tensor, y: &Tensor) -> Tensor {
    let mut acc: HashMap<(usize, usize), Q> = HashMap::new();
    for ((i, j), c) in x {
        for ((k, l), d) in y {
            let p1 = t.basis_product(*i, *k);
            if p1.is_empty() {
                continue;
            }
            let p2 = t.basis_product(*j, *l);
            if p2.is_empty() {
                continue;
            }
            let cd = c * d;
            for (m, e) in p1 {
                let ce = &cd * e;
                for (n, f) in p2 {
                    *acc.entry((*m, *n)).or_insert_with(Q::zero) += &ce * f;
                }
            }
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `x ⊗ y` for dense elements.
pub fn simple_tensor(x: &[Q], y: &[Q]) -> Tensor {
    let mut out = Tensor::new();
    for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            out.insert((i, j), a * b);
        }
    }
    out
}

fn flip(t: &Tensor) -> Tensor {
    t.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect()
}

fn sub(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(c: &Q, a: &[Q]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

/// Coalgebra structure and antipode on a structure table.
#[derive(Clone, Debug)]
pub struct Coalgebra<'a> {
    pub table: &'a StructureTable,
    /// `Δ(b_i)` for every basis vector.
    pub delta: Vec<Tensor>,
    pub counit: Vec<Q>,
    /// `𝒮(b_i)` for every basis vector.
    pub antipode: Vec<Vector>,
    delta_x: Vec<Tensor>,
    delta_d: Vec<Tensor>,
}

impl<'a> Coalgebra<'a> {
    /// Extends the generator coproducts multiplicatively, checks every
    /// relator is sent to zero, and solves the antipode.
    pub fn build(table: &'a StructureTable) -> Result<Self, Error> {
        let grp = &table.grp;
        let ng = grp.order();
        let delta_d: Vec<Tensor> = (0..ng)
            .map(|g| {
                (0..ng)
                    .map(|u| ((table.index(0, u), table.index(0, grp.mul(grp.inv(u), g))), Q::one()))
                    .collect()
            })
            .collect();
        let delta_x: Vec<Tensor> = (0..3)
            .map(|k| {
                let mut t = simple_tensor(&table.x(k), &table.unit());
                for h in 0..ng {
                    let s = q(grp.sign(h) as i64);
                    let right = table.x(grp.conj_trans(k, h));
                    tensor_add(&mut t, &s, &simple_tensor(&table.delta(h), &right));
                }
                t
            })
            .collect();
        let mut co = Coalgebra {
            table,
            delta: vec![],
            counit: vec![],
            antipode: vec![],
            delta_x,
            delta_d,
        };
        co.check_relators()?;
        let mut memo: HashMap<Word, Tensor> = HashMap::new();
        let mut delta = Vec::with_capacity(table.dim());
        for i in 0..table.dim() {
            let (wi, g) = table.split(i);
            let dw = co.delta_word(&table.words[wi], &mut memo);
            delta.push(tensor_mul(table, &dw, &co.delta_d[g]));
        }
        co.delta = delta;
        co.counit = (0..table.dim())
            .map(|i| if i == table.index(0, grp.identity()) { Q::one() } else { Q::zero() })
            .collect();
        co.antipode = co.solve_antipode()?;
        Ok(co)
    }

    fn one_one(&self) -> Tensor {
        simple_tensor(&self.table.unit(), &self.table.unit())
    }

    fn delta_word(&self, w: &[u8], memo: &mut HashMap<Word, Tensor>) -> Tensor {
        if w.is_empty() {
            return self.one_one();
        }
        if let Some(t) = memo.get(w) {
            return t.clone();
        }
        let prefix = self.delta_word(&w[..w.len() - 1], memo);
        let out = tensor_mul(self.table, &prefix, &self.delta_x[w[w.len() - 1] as usize]);
        memo.insert(w.to_vec(), out.clone());
        out
    }

    fn delta_fn(&self, phi: &[Q]) -> Tensor {
        let mut t = Tensor::new();
        for (g, c) in phi.iter().enumerate() {
            if !c.is_zero() {
                tensor_add(&mut t, c, &self.delta_d[g]);
            }
        }
        t
    }

    /// `Δ` vanishes on every defining relator, so it descends to the quotient.
    fn check_relators(&self) -> Result<(), Error> {
        let mut memo = HashMap::new();
        for r in relations(&self.table.a, 3, self.table.variant)? {
            let mut acc = Tensor::new();
            for (w, phi) in &r.poly.terms {
                let t = tensor_mul(self.table, &self.delta_word(w, &mut memo), &self.delta_fn(phi));
                tensor_add(&mut acc, &Q::one(), &t);
            }
            if !acc.is_empty() {
                return Err(Error::Verification(format!("Δ does not annihilate relator {}", r.name)));
            }
        }
        Ok(())
    }

    pub fn apply_delta(&self, x: &[Q]) -> Tensor {
        let mut t = Tensor::new();
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                tensor_add(&mut t, c, &self.delta[i]);
            }
        }
        t
    }

    pub fn apply_counit(&self, x: &[Q]) -> Q {
        x.iter().zip(&self.counit).map(|(a, b)| a * b).fold(Q::zero(), |s, v| s + v)
    }

    pub fn apply_antipode(&self, x: &[Q]) -> Vector {
        let mut out = vec![Q::zero(); self.table.dim()];
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                crate::linalg::add_scaled(&mut out, c, &self.antipode[i]);
            }
        }
        out
    }

    /// `v · b_j`.
    fn mul_vec_basis(&self, v: &[Q], j: usize) -> Vector {
        let t = self.table;
        let mut out = vec![Q::zero(); t.dim()];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, d) in t.basis_product(i, j) {
                out[*k] += c * d;
            }
        }
        out
    }

    /// `b_i · v`.
    fn mul_basis_vec(&self, i: usize, v: &[Q]) -> Vector {
        let t = self.table;
        let mut out = vec![Q::zero(); t.dim()];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, d) in t.basis_product(i, j) {
                out[*k] += c * d;
            }
        }
        out
    }

    /// Every term `b_i ⊗ b_j` of `Δ(b)` has `deg b_i + deg b_j ≤ deg b`.
    pub fn verify_bidegree(&self) -> Result<(), Error> {
        let t = self.table;
        for (b, d) in self.delta.iter().enumerate() {
            for (i, j) in d.keys() {
                if t.degree(*i) + t.degree(*j) > t.degree(b) {
                    return Err(Error::Verification(format!(
                        "Δ({}) has a term of too high bidegree",
                        t.basis_name(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Solves `m(𝒮 ⊗ id)Δ(b) = ε(b)1` by induction on x-degree. For a basis
    /// word `w`, the terms of `Δ(wδ_g)` with left factor of top degree are
    /// `Σ_{uv=g} wδ_u ⊗ δ_v`, so `𝒮(wδ_u)δ_v` is the `uv`-th right-hand side
    /// multiplied by `δ_v`.
    fn solve_antipode(&self) -> Result<Vec<Vector>, Error> {
        let t = self.table;
        let grp = &t.grp;
        let ng = grp.order();
        let dim = t.dim();
        let mut s: Vec<Option<Vector>> = vec![None; dim];
        let mut order: Vec<usize> = (0..t.words.len()).collect();
        order.sort_by_key(|&w| t.words[w].len());
        for wi in order {
            let mut rhs: Vec<Vector> = Vec::with_capacity(ng);
            for g in 0..ng {
                let b = t.index(wi, g);
                let mut r = scale(&self.counit[b], &t.unit());
                for ((i, j), c) in &self.delta[b] {
                    let (iw, iu) = t.split(*i);
                    if iw == wi {
                        let (jw, jv) = t.split(*j);
                        if jw != 0 || grp.mul(iu, jv) != g || !c.is_one() {
                            return Err(Error::Verification(format!(
                                "unexpected top-degree term in Δ({})",
                                t.basis_name(b)
                            )));
                        }
                        continue;
                    }
                    let si = s[*i].as_ref().ok_or_else(|| {
                        Error::Linear(format!(
                            "antipode system is not triangular at {} (needs {})",
                            t.basis_name(b),
                            t.basis_name(*i)
                        ))
                    })?;
                    let prod = self.mul_vec_basis(si, *j);
                    r = sub(&r, &scale(c, &prod));
                }
                rhs.push(r);
            }
            for u in 0..ng {
                let mut val = vec![Q::zero(); dim];
                for v in 0..ng {
                    let part = self.mul_vec_basis(&rhs[grp.mul(u, v)], t.index(0, v));
                    val = add(&val, &part);
                }
                s[t.index(wi, u)] = Some(val);
            }
        }
        Ok(s.into_iter().map(|x| x.expect("all words solved")).collect())
    }

    /// `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ` on every basis vector.
    pub fn verify_coassociativity(&self) -> Result<(), Error> {
        for (b, d) in self.delta.iter().enumerate() {
            let mut left: HashMap<(usize, usize, usize), Q> = HashMap::new();
            let mut right: HashMap<(usize, usize, usize), Q> = HashMap::new();
            for ((i, j), c) in d {
                for ((k, l), e) in &self.delta[*i] {
                    *left.entry((*k, *l, *j)).or_insert_with(Q::zero) += c * e;
                }
                for ((k, l), e) in &self.delta[*j] {
                    *right.entry((*i, *k, *l)).or_insert_with(Q::zero) += c * e;
                }
            }
            left.retain(|_, v| !v.is_zero());
            right.retain(|_, v| !v.is_zero());
            if left != right {
                return Err(Error::Verification(format!(
                    "coassociativity fails on {}",
                    self.table.basis_name(b)
                )));
            }
        }
        Ok(())
    }

    /// `(ε ⊗ id)Δ = id = (id ⊗ ε)Δ` on every basis vector.
    pub fn verify_counit(&self) -> Result<(), Error> {
        let dim = self.table.dim();
        for (b, d) in self.delta.iter().enumerate() {
            let mut l = vec![Q::zero(); dim];
            let mut r = vec![Q::zero(); dim];
            for ((i, j), c) in d {
                l[*j] += c * &self.counit[*i];
                r[*i] += c * &self.counit[*j];
            }
            let e = self.table.basis(b);
            if l != e || r != e {
                return Err(Error::Verification(format!("counit fails on {}", self.table.basis_name(b))));
            }
        }
        Ok(())
    }

    /// Both convolution identities `m(𝒮⊗id)Δ = uε = m(id⊗𝒮)Δ`.
    pub fn verify_antipode(&self) -> Result<(), Error> {
        let t = self.table;
        for (b, d) in self.delta.iter().enumerate() {
            let target = scale(&self.counit[b], &t.unit());
            let mut l = vec![Q::zero(); t.dim()];
            let mut r = vec![Q::zero(); t.dim()];
            for ((i, j), c) in d {
                l = add(&l, &scale(c, &self.mul_vec_basis(&self.antipode[*i], *j)));
                r = add(&r, &scale(c, &self.mul_basis_vec(*i, &self.antipode[*j])));
            }
            if l != target || r != target {
                return Err(Error::Verification(format!("antipode axiom fails on {}", t.basis_name(b))));
            }
        }
        Ok(())
    }

    /// Compares with the anti-multiplicative extension of
    /// `𝒮(x_t) = −Σ_h sgn(h) δ_{h⁻¹} x_{h⁻¹th}` and `𝒮(δ_g) = δ_{g⁻¹}`.
    pub fn verify_antipode_closed_form(&self) -> Result<(), Error> {
        let t = self.table;
        let grp = &t.grp;
        for g in 0..grp.order() {
            if self.apply_antipode(&t.delta(g)) != t.delta(grp.inv(g)) {
                return Err(Error::Verification(format!("𝒮(δ{}) ≠ δ of the inverse", grp.name(g))));
            }
        }
        for k in 0..3 {
            let mut expect = vec![Q::zero(); t.dim()];
            for h in 0..grp.order() {
                let term = t.mul(&t.delta(grp.inv(h)), &t.x(grp.conj_trans(k, h)));
                expect = sub(&expect, &scale(&q(grp.sign(h) as i64), &term));
            }
            if self.apply_antipode(&t.x(k)) != expect {
                return Err(Error::Verification("𝒮 on a generator differs from the closed form".into()));
            }
        }
        let gens: Vec<Vector> = (0..3).map(|k| t.x(k)).chain((0..grp.order()).map(|g| t.delta(g))).collect();
        for x in &gens {
            let sx = self.apply_antipode(x);
            for b in 0..t.dim() {
                let lhs = self.apply_antipode(&t.mul(x, &t.basis(b)));
                let rhs = t.mul(&self.antipode[b], &sx);
                if lhs != rhs {
                    return Err(Error::Verification(format!(
                        "𝒮 is not anti-multiplicative at {}",
                        t.basis_name(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `𝒮²(b) = χ b χ⁻¹` for every basis vector, and `𝒮⁴ = id`.
    pub fn verify_s2_s4(&self) -> Result<(), Error> {
        let t = self.table;
        let chi = t.chi();
        for b in 0..t.dim() {
            let s2 = self.apply_antipode(&self.antipode[b]);
            if s2 != t.mul(&t.mul(&chi, &t.basis(b)), &chi) {
                return Err(Error::Verification(format!("𝒮² ≠ χ·χ⁻¹ conjugation on {}", t.basis_name(b))));
            }
            let s4 = self.apply_antipode(&self.apply_antipode(&s2));
            if s4 != t.basis(b) {
                return Err(Error::Verification(format!("𝒮⁴ ≠ id on {}", t.basis_name(b))));
            }
        }
        Ok(())
    }

    /// All of coassociativity, counit, antipode and `𝒮²`, `𝒮⁴` checks.
    pub fn verify_all(&self) -> Result<(), Error> {
        self.verify_bidegree()?;
        self.verify_coassociativity()?;
        self.verify_counit()?;
        self.verify_antipode()?;
        self.verify_antipode_closed_form()?;
        self.verify_s2_s4()
    }

    pub fn is_grouplike(&self, g: &[Q]) -> bool {
        self.apply_counit(g).is_one() && self.apply_delta(g) == simple_tensor(g, g)
    }

    /// Group-like elements. By the bidegree bound, the top x-degree part
    /// `g_d` of a group-like satisfies `g_d ⊗ g_d = 0` when `d > 0`, so
    /// `g ∈ k^{S_3}`; there `Δg = g ⊗ g` says the coefficients form a
    /// character of `S_3`, whose value on each transposition squares to 1.
    pub fn grouplikes(&self) -> Result<Vec<Vector>, Error> {
        self.verify_bidegree()?;
        let t = self.table;
        let grp = &t.grp;
        let gens: Vec<usize> = (0..grp.transpositions().len()).map(|k| grp.trans_elem(k)).collect();
        let mut out = Vec::new();
        for mask in 0..(1u32 << gens.len()) {
            let val = |k: usize| if mask >> k & 1 == 1 { -1i64 } else { 1 };
            // extend along words in the transpositions; reject if inconsistent
            let mut chr: Vec<Option<i64>> = vec![None; grp.order()];
            chr[grp.identity()] = Some(1);
            let mut frontier = vec![grp.identity()];
            let mut ok = true;
            while let Some(x) = frontier.pop() {
                for (k, &tk) in gens.iter().enumerate() {
                    let y = grp.mul(tk, x);
                    let v = val(k) * chr[x].unwrap();
                    match chr[y] {
                        None => {
                            chr[y] = Some(v);
                            frontier.push(y);
                        }
                        Some(w) if w != v => ok = false,
                        _ => {}
                    }
                }
            }
            if !ok {
                continue;
            }
            let mut g = vec![Q::zero(); t.dim()];
            for h in 0..grp.order() {
                g[t.index(0, h)] = q(chr[h].unwrap());
            }
            if self.is_grouplike(&g) {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Basis of `{ z : Δz = z ⊗ 1 + g ⊗ z }`.
    pub fn skew_primitives(&self, g: &[Q]) -> Vec<Vector> {
        let t = self.table;
        let one = t.unit();
        let cols: Vec<SparseVec> = (0..t.dim())
            .map(|b| {
                let e = t.basis(b);
                let mut d = self.delta[b].clone();
                tensor_add(&mut d, &-Q::one(), &simple_tensor(&e, &one));
                tensor_add(&mut d, &-Q::one(), &simple_tensor(g, &e));
                d.into_iter().map(|((i, j), c)| (i * t.dim() + j, c)).collect()
            })
            .collect();
        sparse_kernel(&cols)
    }

    /// Smallest subalgebra containing the unit and `gens`.
    pub fn subalgebra(&self, gens: &[Vector]) -> Subspace {
        let t = self.table;
        let mut ech = crate::linalg::Echelon::new(t.dim());
        let mut queue = vec![t.unit()];
        ech.insert(t.unit());
        while let Some(v) = queue.pop() {
            for g in gens {
                let w = t.mul(g, &v);
                if ech.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        Subspace::span(t.dim(), ech.rows().to_vec())
    }

    /// `Δ(V) ⊆ V ⊗ V` and `𝒮(V) ⊆ V`.
    pub fn is_hopf_subspace(&self, v: &Subspace) -> bool {
        let dim = self.table.dim();
        for b in v.basis() {
            if !v.contains(&self.apply_antipode(b)) {
                return false;
            }
            let d = self.apply_delta(b);
            let mut rows: BTreeMap<usize, Vector> = BTreeMap::new();
            let mut cols: BTreeMap<usize, Vector> = BTreeMap::new();
            for ((i, j), c) in &d {
                rows.entry(*i).or_insert_with(|| vec![Q::zero(); dim])[*j] = c.clone();
                cols.entry(*j).or_insert_with(|| vec![Q::zero(); dim])[*i] = c.clone();
            }
            if !rows.values().all(|r| v.contains(r)) || !cols.values().all(|c| v.contains(c)) {
                return false;
            }
        }
        true
    }

    pub fn y(&self) -> Vector {
        let t = self.table;
        (0..3).fold(vec![Q::zero(); t.dim()], |acc, k| add(&acc, &t.x(k)))
    }

    pub fn sweedler_report(&self) -> SweedlerReport {
        let t = self.table;
        let chi = t.chi();
        let y = self.y();
        let one = t.unit();
        let y2 = t.mul(&y, &y);
        let chiy = t.mul(&chi, &y);
        let ychi = t.mul(&y, &chi);
        let sub = self.subalgebra(&[chi.clone(), y.clone()]);
        let quad = Subspace::span(t.dim(), vec![one.clone(), chi.clone(), y.clone(), chiy.clone()]);
        let y_skew = self.apply_delta(&y) == {
            let mut s = simple_tensor(&y, &one);
            tensor_add(&mut s, &Q::one(), &simple_tensor(&chi, &y));
            s
        };
        let chi_sq = t.mul(&chi, &chi) == one;
        let anti = add(&chiy, &ychi).iter().all(|c| c.is_zero());
        let y2_zero = y2.iter().all(|c| c.is_zero());
        SweedlerReport {
            y_squared: t.render(&y2),
            y_squared_zero: y2_zero,
            chi_squared_one: chi_sq,
            anticommute: anti,
            y_skew_primitive: y_skew,
            dimension: sub.dim(),
            spanned_by_1_chi_y_chiy: quad.dim() == 4 && sub == quad,
            isomorphic_to_sweedler: y2_zero && chi_sq && anti && y_skew && quad.dim() == 4 && sub == quad,
        }
    }

    /// The Hopf subalgebras `k⟨χ⟩`, `k⟨χ, y⟩`, `k^{S_3}` and `𝒜` with their dimensions.
    pub fn hopf_subalgebra_census(&self) -> Vec<HopfSubalgebra> {
        let t = self.table;
        let chi = t.chi();
        let y = self.y();
        let deltas: Vec<Vector> = (0..t.grp.order()).map(|g| t.delta(g)).collect();
        let all: Vec<Vector> = (0..3).map(|k| t.x(k)).chain(deltas.iter().cloned()).collect();
        let cases: Vec<(&str, Vec<Vector>)> = vec![
            ("k<chi>", vec![chi.clone()]),
            ("k<chi,y>", vec![chi, y]),
            ("k^S3", deltas),
            ("A", all),
        ];
        cases
            .into_iter()
            .map(|(name, gens)| {
                let s = self.subalgebra(&gens);
                HopfSubalgebra { name: name.into(), dimension: s.dim(), hopf: self.is_hopf_subspace(&s) }
            })
            .collect()
    }

    fn stacked_kernel(&self, mats: &[(Vector, Q, bool)]) -> Vec<Vector> {
        // rows of (L_a - c·I) or (R_a - c·I)
        let t = self.table;
        let dim = t.dim();
        let mut rows = Vec::new();
        for (a, c, left) in mats {
            let m = if *left { t.left_matrix(a) } else { t.right_matrix(a) };
            for r in 0..dim {
                let mut row = m.row(r).to_vec();
                row[r] -= c;
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        nullspace(&rows, dim)
    }

    fn generator_list(&self) -> Vec<(String, Vector, Q)> {
        let t = self.table;
        let grp = &t.grp;
        let mut out: Vec<(String, Vector, Q)> =
            (0..3).map(|k| (grp.transpositions()[k].letter(), t.x(k), Q::zero())).collect();
        for g in 0..grp.order() {
            let e = if g == grp.identity() { Q::one() } else { Q::zero() };
            out.push((format!("d{}", grp.name(g)), t.delta(g), e));
        }
        out
    }

    /// Integrals of `𝒜` and of `𝒜*`, modular data and distinguished group-likes.
    pub fn integrals(&self) -> Result<IntegralReport, Error> {
        let t = self.table;
        let gens = self.generator_list();
        let left = self.stacked_kernel(&gens.iter().map(|(_, a, e)| (a.clone(), e.clone(), true)).collect::<Vec<_>>());
        let right =
            self.stacked_kernel(&gens.iter().map(|(_, a, e)| (a.clone(), e.clone(), false)).collect::<Vec<_>>());
        let left_s = Subspace::span(t.dim(), left.clone());
        let right_s = Subspace::span(t.dim(), right.clone());
        if left_s.dim() != 1 {
            return Err(Error::Verification(format!("left integral space has dimension {}", left_s.dim())));
        }
        let lam = left_s.basis()[0].clone();
        // modular function: Λ a = α(a) Λ
        let mut alpha = Vec::new();
        let mut alpha_trivial = true;
        for (name, a, e) in &gens {
            let la = t.mul(&lam, a);
            let val = proportionality(&la, &lam)
                .ok_or_else(|| Error::Verification(format!("Λ·{name} is not a multiple of Λ")))?;
            alpha_trivial &= &val == e;
            alpha.push((name.clone(), fmt_q(&val)));
        }
        let m4 = t.index(t.words.len() - 1, t.grp.identity());
        let expected = t.basis(m4);
        let left_is_m4 = parallel(&lam, &expected);

        let dual_left = self.dual_integrals(true);
        let dual_right = self.dual_integrals(false);
        let dl = Subspace::span(t.dim(), dual_left.clone());
        let dr = Subspace::span(t.dim(), dual_right.clone());
        if dl.dim() != 1 {
            return Err(Error::Verification(format!("dual left integral space has dimension {}", dl.dim())));
        }
        let lambda = dl.basis()[0].clone();
        let g = self.distinguished_grouplike(&lambda)?;
        let g_trivial = g == t.unit();
        Ok(IntegralReport {
            left: left.iter().map(|v| t.render(v)).collect(),
            right: right.iter().map(|v| t.render(v)).collect(),
            left_dim: left_s.dim(),
            right_dim: right_s.dim(),
            left_is_m4_delta_e: left_is_m4,
            unimodular: left_s == right_s,
            modular_function: alpha,
            modular_function_trivial: alpha_trivial,
            dual_left_dim: dl.dim(),
            dual_right_dim: dr.dim(),
            dual_left: dual_left.iter().map(|v| render_functional(t, v)).collect(),
            dual_unimodular: dl == dr,
            distinguished_grouplike: t.render(&g),
            distinguished_grouplike_trivial: g_trivial,
        })
    }

    /// `λ ∈ 𝒜*` with `(id⊗λ)Δ(a) = λ(a)1` (left) or `(λ⊗id)Δ(a) = λ(a)1` (right).
    pub fn dual_integrals(&self, left: bool) -> Vec<Vector> {
        let t = self.table;
        let dim = t.dim();
        let one = t.unit();
        let mut cols: Vec<SparseVec> = vec![SparseVec::new(); dim];
        for (a, d) in self.delta.iter().enumerate() {
            for ((i, j), c) in d {
                let (out, var) = if left { (*i, *j) } else { (*j, *i) };
                let e = cols[var].entry(a * dim + out).or_insert_with(Q::zero);
                *e += c;
            }
            for (k, u) in one.iter().enumerate() {
                if !u.is_zero() {
                    let e = cols[a].entry(a * dim + k).or_insert_with(Q::zero);
                    *e -= u;
                }
            }
        }
        for c in cols.iter_mut() {
            c.retain(|_, v| !v.is_zero());
        }
        sparse_kernel(&cols)
    }

    /// The group-like `g` with `(λ⊗id)Δ(a) = λ(a) g` for a left integral `λ` of `𝒜*`.
    pub fn distinguished_grouplike(&self, lambda: &[Q]) -> Result<Vector, Error> {
        let t = self.table;
        let dim = t.dim();
        let apply = |a: usize| -> Vector {
            let mut out = vec![Q::zero(); dim];
            for ((i, j), c) in &self.delta[a] {
                out[*j] += c * &lambda[*i];
            }
            out
        };
        let a0 = (0..dim)
            .find(|&a| !lambda[a].is_zero())
            .ok_or_else(|| Error::Precondition("zero functional".into()))?;
        let g = scale(&lambda[a0].recip(), &apply(a0));
        for a in 0..dim {
            if apply(a) != scale(&lambda[a], &g) {
                return Err(Error::Verification("no distinguished group-like for this integral".into()));
            }
        }
        if !self.is_grouplike(&g) {
            return Err(Error::Verification("distinguished element is not group-like".into()));
        }
        Ok(g)
    }

    /// `R₀ = ½(1⊗1 + 1⊗χ + χ⊗1 − χ⊗χ)` against `Δ(δ_g)`. `simple_dims`
    /// are the dimensions of the simple `𝒜`-modules, i.e. the matrix
    /// blocks of the coradical of `𝒜*`.
    pub fn qt_obstruction(&self, simple_dims: &[usize]) -> QtReport {
        let t = self.table;
        let grp = &t.grp;
        let one = t.unit();
        let chi = t.chi();
        let mut r0 = simple_tensor(&one, &one);
        tensor_add(&mut r0, &Q::one(), &simple_tensor(&one, &chi));
        tensor_add(&mut r0, &Q::one(), &simple_tensor(&chi, &one));
        tensor_add(&mut r0, &-Q::one(), &simple_tensor(&chi, &chi));
        let half = qf(1, 2);
        r0 = r0.into_iter().map(|(k, v)| (k, v * &half)).collect();
        let r0_sq = tensor_mul(t, &r0, &r0) == simple_tensor(&one, &one);
        let mut witnesses = Vec::new();
        let mut holds_at_e = false;
        for g in 0..grp.order() {
            let d = &self.delta[t.index(0, g)];
            let lhs = tensor_mul(t, &flip(d), &r0);
            let rhs = tensor_mul(t, &r0, d);
            let ok = tensor_sub(&lhs, &rhs).is_empty();
            if g == grp.identity() {
                holds_at_e = ok;
            }
            if !ok {
                witnesses.push(grp.name(g));
            }
        }
        let mut dual_side = simple_dims.to_vec();
        dual_side.sort_unstable();
        // k^{S_3} is dual to the group algebra kS_3 ≅ k ⊕ k ⊕ M(2, k).
        let a_side = vec![1, 1, 2];
        QtReport {
            r0_squared_is_one: r0_sq,
            identity_holds_at_e: holds_at_e,
            witness: witnesses.first().cloned(),
            witnesses,
            coradical_blocks_a: a_side.clone(),
            coradical_blocks_dual: dual_side.clone(),
            not_self_dual_cop: a_side != dual_side,
        }
    }
}

fn proportionality(x: &[Q], base: &[Q]) -> Option<Q> {
    let p = base.iter().position(|c| !c.is_zero())?;
    let c = &x[p] / &base[p];
    if x.iter().zip(base).all(|(a, b)| a == &(&c * b)) {
        Some(c)
    } else {
        None
    }
}

fn render_functional(t: &StructureTable, v: &[Q]) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("{}*({})*", fmt_q(c), t.basis_name(i)))
        .collect();
    parts.join(" + ")
}

#[derive(Clone, Debug, Serialize)]
pub struct SweedlerReport {
    pub y_squared: String,
    pub y_squared_zero: bool,
    pub chi_squared_one: bool,
    pub anticommute: bool,
    pub y_skew_primitive: bool,
    pub dimension: usize,
    pub spanned_by_1_chi_y_chiy: bool,
    pub isomorphic_to_sweedler: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfSubalgebra {
    pub name: String,
    pub dimension: usize,
    pub hopf: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntegralReport {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub left_dim: usize,
    pub right_dim: usize,
    pub left_is_m4_delta_e: bool,
    pub unimodular: bool,
    pub modular_function: Vec<(String, String)>,
    pub modular_function_trivial: bool,
    pub dual_left_dim: usize,
    pub dual_right_dim: usize,
    pub dual_left: Vec<String>,
    pub dual_unimodular: bool,
    pub distinguished_grouplike: String,
    pub distinguished_grouplike_trivial: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct QtReport {
    pub r0_squared_is_one: bool,
    pub identity_holds_at_e: bool,
    pub witness: Option<String>,
    pub witnesses: Vec<String>,
    pub coradical_blocks_a: Vec<usize>,
    pub coradical_blocks_dual: Vec<usize>,
    pub not_self_dual_cop: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Variant;
    use crate::ParamVector;

    fn table(v: [i64; 3]) -> StructureTable {
        StructureTable::build(&ParamVector::from_ints(3, &v).unwrap(), Variant::A, 6).unwrap()
    }

    #[test]
    fn antipode_on_delta_is_inverse() {
        let t = table([1, 2, -3]);
        let co = Coalgebra::build(&t).unwrap();
        for g in 0..6 {
            assert_eq!(co.apply_antipode(&t.delta(g)), t.delta(t.grp.inv(g)));
        }
        co.verify_counit().unwrap();
    }

    #[test]
    fn grouplikes_are_one_and_chi() {
        let t = table([2, -1, -1]);
        let co = Coalgebra::build(&t).unwrap();
        let g = co.grouplikes().unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.contains(&t.unit()) && g.contains(&t.chi()));
        assert_eq!(co.skew_primitives(&t.chi()).len(), 2);
    }
}
