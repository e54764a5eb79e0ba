//! Finite-dimensional representations of `𝒜_[a]` given on a weight basis.
//!
//! A module is a list of weights (one group element per basis vector) plus the
//! matrices of `x12, x13, x23`. The `δ_g` act diagonally.

pub mod expected;
pub mod lattice;
pub mod simples;

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{add_scaled, is_zero_vec, nullspace, unit_vec, zero_vec, Echelon, Matrix, Subspace, Vector};
use crate::presentation::table::StructureTable;
use crate::presentation::{relations, Variant};
use crate::scalar::{fmt_q, Q};
use crate::symgroup::{f_idx, ParamVector, SymGroup};
use crate::Error;

#[derive(Clone, Debug)]
pub struct Representation {
    pub label: String,
    /// Weight (group index) of each basis vector.
    pub weights: Vec<usize>,
    /// Matrices of x12, x13, x23 acting on columns.
    pub x: Vec<Matrix>,
    /// Display names of the basis vectors.
    pub names: Vec<String>,
}

impl Representation {
    pub fn new(label: impl Into<String>, weights: Vec<usize>, x: Vec<Matrix>) -> Self {
        let names = (0..weights.len()).map(|i| format!("v{i}")).collect();
        Representation { label: label.into(), weights, x, names }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn delta(&self, g: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, &w) in self.weights.iter().enumerate() {
            if w == g {
                m.set(i, i, Q::one());
            }
        }
        m
    }

    pub fn word_op(&self, w: &[u8]) -> Matrix {
        let mut m = Matrix::identity(self.dim());
        for &l in w {
            m = m.mul(&self.x[l as usize]);
        }
        m
    }

    /// Operator of the basis element `w δ_g` of the table.
    fn basis_op(&self, word_ops: &[Matrix], wi: usize, g: usize) -> Matrix {
        let mut m = word_ops[wi].clone();
        for (c, &w) in self.weights.iter().enumerate() {
            if w != g {
                for r in 0..m.rows {
                    m.set(r, c, Q::zero());
                }
            }
        }
        m
    }

    /// Operator of an arbitrary algebra element given in the table basis.
    pub fn act(&self, table: &StructureTable, elem: &[Q]) -> Matrix {
        let ops: Vec<Matrix> = table.words.iter().map(|w| self.word_op(w)).collect();
        self.act_with(&ops, table, elem)
    }

    fn act_with(&self, ops: &[Matrix], table: &StructureTable, elem: &[Q]) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (i, c) in elem.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (wi, g) = table.split(i);
            out.add_scaled_assign(c, &self.basis_op(ops, wi, g));
        }
        out
    }

    /// Checks the weight law and every defining relator.
    pub fn check_relations(&self, a: &ParamVector, variant: Variant) -> Result<(), Error> {
        let grp = SymGroup::new(3);
        let n = self.dim();
        if self.x.len() != 3 || self.x.iter().any(|m| m.rows != n || m.cols != n) {
            return Err(Error::Verification(format!("{}: operator shapes do not match dimension {n}", self.label)));
        }
        for (k, m) in self.x.iter().enumerate() {
            let t = grp.trans_elem(k);
            for r in 0..n {
                for c in 0..n {
                    if !m.get(r, c).is_zero() && self.weights[r] != grp.mul(t, self.weights[c]) {
                        return Err(Error::Verification(format!(
                            "{}: x{} breaks the weight law at ({r},{c})",
                            self.label,
                            grp.transpositions()[k]
                        )));
                    }
                }
            }
        }
        for rel in relations(a, 3, variant)? {
            let mut op = Matrix::zeros(n, n);
            for (w, phi) in &rel.poly.terms {
                let wm = self.word_op(w);
                let mut d = Matrix::zeros(n, n);
                for (i, &g) in self.weights.iter().enumerate() {
                    d.set(i, i, phi[g].clone());
                }
                op = op.add(&wm.mul(&d));
            }
            if !op.is_zero() {
                return Err(Error::Verification(format!("{}: relator {} does not vanish", self.label, rel.name)));
            }
        }
        Ok(())
    }

    pub fn weight_indices(&self, h: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.weights[i] == h).collect()
    }

    pub fn weight_space(&self, h: usize) -> Subspace {
        let n = self.dim();
        Subspace::span(n, self.weight_indices(h).into_iter().map(|i| unit_vec(n, i)))
    }

    pub fn weight_multiplicities(&self) -> Vec<usize> {
        (0..6).map(|h| self.weight_indices(h).len()).collect()
    }

    /// Submodule generated by `vs`.
    pub fn spin(&self, vs: &[Vector]) -> Subspace {
        let n = self.dim();
        let mut ech = Echelon::new(n);
        let mut queue: Vec<Vector> = Vec::new();
        // weight components first, so the closure under δ_g is automatic
        for v in vs {
            for h in 0..6 {
                let mut c = zero_vec(n);
                for i in self.weight_indices(h) {
                    c[i] = v[i].clone();
                }
                if ech.insert(c.clone()) {
                    queue.push(c);
                }
            }
        }
        while let Some(v) = queue.pop() {
            for m in &self.x {
                let w = m.apply(&v);
                if ech.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        Subspace::span(n, ech.rows().to_vec())
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        let graded: usize = (0..6).map(|h| s.intersect(&self.weight_space(h)).dim()).sum();
        graded == s.dim() && s.basis().iter().all(|v| self.x.iter().all(|m| s.contains(&m.apply(v))))
    }

    /// Weight-adapted basis of a submodule.
    pub(crate) fn weight_basis(&self, s: &Subspace) -> Vec<(usize, Vector)> {
        let mut out = Vec::new();
        for h in 0..6 {
            for v in s.intersect(&self.weight_space(h)).basis() {
                out.push((h, v.clone()));
            }
        }
        out
    }

    /// The submodule `s` as a module in its own right.
    pub fn restrict(&self, s: &Subspace, label: impl Into<String>) -> Result<Representation, Error> {
        if !self.is_submodule(s) {
            return Err(Error::Precondition(format!("{}: subspace is not a submodule", self.label)));
        }
        let basis = self.weight_basis(s);
        let a = Matrix::from_cols(self.dim(), &basis.iter().map(|(_, b)| b.clone()).collect::<Vec<_>>());
        let coords = |v: &Vector| crate::linalg::solve(&a, v).expect("submodule is closed");
        let x = self
            .x
            .iter()
            .map(|m| {
                let cols: Vec<Vector> = basis.iter().map(|(_, b)| coords(&m.apply(b))).collect();
                Matrix::from_cols(basis.len(), &cols)
            })
            .collect();
        let mut r = Representation::new(label, basis.iter().map(|(h, _)| *h).collect(), x);
        r.names = basis.iter().map(|(_, b)| render_vector(self, b)).collect();
        Ok(r)
    }

    /// `self / s` on a weight-adapted complement.
    pub fn quotient(&self, s: &Subspace, label: impl Into<String>) -> Result<Representation, Error> {
        if !self.is_submodule(s) {
            return Err(Error::Precondition(format!("{}: subspace is not a submodule", self.label)));
        }
        let n = self.dim();
        let mut comp: Vec<(usize, Vector)> = Vec::new();
        for h in 0..6 {
            let sh = s.intersect(&self.weight_space(h));
            for v in sh.complement_in(&self.weight_space(h)) {
                comp.push((h, v));
            }
        }
        let mut cols: Vec<Vector> = s.basis().to_vec();
        let ks = cols.len();
        cols.extend(comp.iter().map(|(_, v)| v.clone()));
        let a = Matrix::from_cols(n, &cols);
        let x = self
            .x
            .iter()
            .map(|m| {
                let qcols: Vec<Vector> = comp
                    .iter()
                    .map(|(_, v)| {
                        let sol = crate::linalg::solve(&a, &m.apply(v)).expect("full basis");
                        sol[ks..].to_vec()
                    })
                    .collect();
                Matrix::from_cols(comp.len(), &qcols)
            })
            .collect();
        let mut r = Representation::new(label, comp.iter().map(|(h, _)| *h).collect(), x);
        r.names = comp.iter().map(|(_, b)| format!("[{}]", render_vector(self, b))).collect();
        Ok(r)
    }

    /// Direct sum.
    pub fn direct_sum(&self, other: &Representation) -> Representation {
        let (n, m) = (self.dim(), other.dim());
        let x = (0..3)
            .map(|k| {
                let mut out = Matrix::zeros(n + m, n + m);
                for r in 0..n {
                    for c in 0..n {
                        out.set(r, c, self.x[k].get(r, c).clone());
                    }
                }
                for r in 0..m {
                    for c in 0..m {
                        out.set(n + r, n + c, other.x[k].get(r, c).clone());
                    }
                }
                out
            })
            .collect();
        let mut w = self.weights.clone();
        w.extend(&other.weights);
        Representation::new(format!("{} ⊕ {}", self.label, other.label), w, x)
    }

    pub fn render_action(&self) -> String {
        let grp = SymGroup::new(3);
        let mut s = String::new();
        for c in 0..self.dim() {
            for k in 0..3 {
                let col = self.x[k].col(c);
                let terms: Vec<String> = col
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(r, v)| format!("{}·v{}", fmt_q(v), r))
                    .collect();
                if !terms.is_empty() {
                    s.push_str(&format!(
                        "{} · v{} [{}] = {}\n",
                        grp.transpositions()[k].letter(),
                        c,
                        grp.name(self.weights[c]),
                        terms.join(" + ")
                    ));
                }
            }
        }
        s
    }
}

/// `M_g = 𝒜 δ_g` with basis `m_w = w δ_g` in the order of the normal words.
pub fn verma(table: &StructureTable, g: usize) -> Representation {
    let grp = &table.grp;
    let nw = table.words.len();
    let weights: Vec<usize> = (0..nw).map(|wi| grp.mul(table.weights[wi], g)).collect();
    let x = (0..3)
        .map(|k| {
            let xk = table.x(k);
            let mut m = Matrix::zeros(nw, nw);
            for wi in 0..nw {
                let prod = table.mul(&xk, &table.basis(table.index(wi, g)));
                for (i, c) in prod.iter().enumerate() {
                    if !c.is_zero() {
                        let (wj, h) = table.split(i);
                        debug_assert_eq!(h, g);
                        m.set(wj, wi, c.clone());
                    }
                }
            }
            m
        })
        .collect();
    let mut m = Representation::new(format!("M_{}", grp.name(g)), weights, x);
    m.names = table.words.iter().map(|w| verma_name(grp, w)).collect();
    m
}

/// `m1` for the empty word, otherwise `m` followed by the letters as transpositions.
pub fn verma_name(grp: &SymGroup, w: &[u8]) -> String {
    if w.is_empty() {
        return "m1".into();
    }
    let mut s = String::from("m");
    for &l in w {
        s.push_str(&grp.transpositions()[l as usize].to_string());
    }
    s
}

/// Renders a vector as a combination of the basis names.
pub fn render_vector(m: &Representation, v: &[Q]) -> String {
    let mut s = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            s.push_str(&fmt_q(&abs));
            s.push('·');
        }
        s.push_str(&m.names[i]);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Vector of `M_g` from `(word, coefficient)` pairs, words written as in [`crate::presentation::parse_word`].
pub fn verma_vector(table: &StructureTable, terms: &[(&str, Q)]) -> Result<Vector, Error> {
    let mut v = zero_vec(table.words.len());
    for (w, c) in terms {
        let word = crate::presentation::parse_word(&table.grp, w)?;
        let i = table
            .word_index(&word)
            .ok_or_else(|| Error::Parse(format!("{w} is not a normal word")))?;
        v[i] += c;
    }
    Ok(v)
}

/// The one-dimensional module `k_h`; needs `h` in the isotropy group.
pub fn onedim(a: &ParamVector, h: usize) -> Result<Representation, Error> {
    let grp = SymGroup::new(3);
    if (0..3).any(|k| !f_idx(&grp, a, k, h).is_zero()) {
        return Err(Error::Precondition(format!("{} is not in the isotropy group of a = {a}", grp.name(h))));
    }
    Ok(Representation::new(format!("k_{}", grp.name(h)), vec![h], vec![Matrix::zeros(1, 1); 3]))
}

/// Module on basis `v_g, g ∈ support` with `x_k v_g = coeff(k, g) v_{t_k g}`.
fn monomial_module(
    label: &str,
    support: &[usize],
    coeff: impl Fn(usize, usize) -> Q,
) -> Result<Representation, Error> {
    let grp = SymGroup::new(3);
    let n = support.len();
    let pos = |g: usize| support.iter().position(|&s| s == g);
    let mut x = vec![Matrix::zeros(n, n); 3];
    for (c, &g) in support.iter().enumerate() {
        for (k, m) in x.iter_mut().enumerate() {
            let c_kg = coeff(k, g);
            if c_kg.is_zero() {
                continue;
            }
            let target = grp.mul(grp.trans_elem(k), g);
            let r = pos(target).ok_or_else(|| {
                Error::Verification(format!("{label}: x{} v{} leaves the support", grp.transpositions()[k], grp.name(g)))
            })?;
            m.set(r, c, c_kg);
        }
    }
    Ok(Representation::new(label, support.to_vec(), x))
}

/// The simple module `L`: dimension 5 for generic and 4 for canonical sub-generic parameters.
pub fn simple_l(a: &ParamVector) -> Result<Representation, Error> {
    let grp = SymGroup::new(3);
    let regime = crate::symgroup::Regime::classify(a)?;
    match regime.tag {
        crate::RegimeTag::Generic => monomial_module("L", &[1, 2, 3, 4, 5], |k, g| {
            if grp.sign(g) == 1 {
                Q::one()
            } else {
                f_idx(&grp, a, k, g)
            }
        }),
        crate::RegimeTag::SubGeneric => {
            if &regime.canonical != a {
                return Err(Error::Precondition(format!("sub-generic parameter {a} is not in canonical form")));
            }
            monomial_module("L", &[2, 3, 4, 5], |k, g| {
                if g == grp.trans_elem(k) {
                    Q::zero()
                } else if grp.sign(g) == -1 {
                    Q::one()
                } else {
                    f_idx(&grp, a, k, g)
                }
            })
        }
        crate::RegimeTag::Zero => Err(Error::Precondition("the zero parameter has only one-dimensional simples".into())),
    }
}

/// `W_t(L, k_e)`: an extension with `L` on top and `k_e` at the bottom.
pub fn w_l_ke(a: &ParamVector, t: &ParamVector) -> Result<Representation, Error> {
    let grp = SymGroup::new(3);
    monomial_module(&format!("W_{t}(L,k_e)"), &[0, 1, 2, 3, 4, 5], |k, g| {
        if g == 0 {
            Q::zero()
        } else if g == grp.trans_elem(k) {
            t.at(k).clone()
        } else if grp.sign(g) == 1 {
            Q::one()
        } else {
            f_idx(&grp, a, k, g)
        }
    })
}

/// `W_t(k_e, L)` with `x_ij w_(ij) = 0`; the printed table sends it to `w_e`.
pub fn w_ke_l(a: &ParamVector, t: &ParamVector) -> Result<Representation, Error> {
    w_ke_l_impl(a, t, false)
}

/// `W_t(k_e, L)` exactly as tabulated, kept to show that it violates `x_ij^2 = f_ij`.
pub fn w_ke_l_as_printed(a: &ParamVector, t: &ParamVector) -> Result<Representation, Error> {
    w_ke_l_impl(a, t, true)
}

fn w_ke_l_impl(a: &ParamVector, t: &ParamVector, printed: bool) -> Result<Representation, Error> {
    let grp = SymGroup::new(3);
    monomial_module(&format!("W_{t}(k_e,L)"), &[0, 1, 2, 3, 4, 5], |k, g| {
        if g == 0 {
            t.at(k).clone()
        } else if g == grp.trans_elem(k) && !printed {
            Q::zero()
        } else if grp.sign(g) == 1 {
            f_idx(&grp, a, k, g)
        } else {
            Q::one()
        }
    })
}

/// Basis of `Hom_𝒜(m, n)` as `dim n × dim m` matrices.
pub fn hom_space(m: &Representation, n: &Representation) -> Vec<Matrix> {
    // unknowns: entries F[r][c] with equal weights
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    for r in 0..n.dim() {
        for c in 0..m.dim() {
            if n.weights[r] == m.weights[c] {
                unknowns.push((r, c));
            }
        }
    }
    let nu = unknowns.len();
    if nu == 0 {
        return Vec::new();
    }
    let mut rows: Vec<Vector> = Vec::new();
    for k in 0..3 {
        // (X^N F − F X^M)[r][c] = Σ_s X^N[r][s] F[s][c] − Σ_s F[r][s] X^M[s][c]
        for r in 0..n.dim() {
            for c in 0..m.dim() {
                let mut row = zero_vec(nu);
                let mut any = false;
                for (u, &(s, cc)) in unknowns.iter().enumerate() {
                    if cc == c {
                        let v = n.x[k].get(r, s);
                        if !v.is_zero() {
                            row[u] += v;
                            any = true;
                        }
                    }
                    if s == r {
                        let v = m.x[k].get(cc, c);
                        if !v.is_zero() {
                            row[u] -= v;
                            any = true;
                        }
                    }
                }
                if any && !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    nullspace(&rows, nu)
        .into_iter()
        .map(|sol| {
            let mut f = Matrix::zeros(n.dim(), m.dim());
            for (u, &(r, c)) in unknowns.iter().enumerate() {
                f.set(r, c, sol[u].clone());
            }
            f
        })
        .collect()
}

pub fn end_algebra(m: &Representation) -> Vec<Matrix> {
    hom_space(m, m)
}

/// Radical of a matrix algebra given by a basis, by the trace form `tr(ab)`.
pub fn matrix_algebra_radical(basis: &[Matrix]) -> Vec<Vector> {
    let k = basis.len();
    let rows: Vec<Vector> = (0..k).map(|i| (0..k).map(|j| basis[i].mul(&basis[j]).trace()).collect()).collect();
    nullspace(&rows, k)
}

/// `End(m)` is local, equivalently `m` is indecomposable.
pub fn is_indecomposable(m: &Representation) -> bool {
    if m.dim() == 0 {
        return false;
    }
    let e = end_algebra(m);
    e.len() - matrix_algebra_radical(&e).len() == 1
}

/// Isomorphism test. Exact when `dim Hom ≤ 1`; otherwise a random
/// combination of the Hom basis is tested for invertibility (Schwartz–Zippel),
/// so a negative answer is wrong with probability at most `(d/1000)^tries`.
pub fn is_isomorphic(m: &Representation, n: &Representation, seed: u64) -> bool {
    if m.dim() != n.dim() || m.weight_multiplicities() != n.weight_multiplicities() {
        return false;
    }
    if m.dim() == 0 {
        return true;
    }
    let h = hom_space(m, n);
    if h.is_empty() {
        return false;
    }
    if h.len() == 1 {
        return h[0].rank() == m.dim();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let mut f = Matrix::zeros(n.dim(), m.dim());
        for b in &h {
            let c = Q::from_integer(rng.gen_range(-500i64..=500).into());
            f.add_scaled_assign(&c, b);
        }
        if f.rank() == m.dim() {
            return true;
        }
    }
    false
}

/// Jacobson radical of the algebra via `tr(L_{ab}) = 0 ∀ b`.
pub fn jacobson_radical(table: &StructureTable) -> Subspace {
    let d = table.dim();
    let tr: Vec<Q> = (0..d)
        .map(|i| {
            let mut s = Q::zero();
            for k in 0..d {
                for (j, c) in table.basis_product(i, k) {
                    if *j == k {
                        s += c;
                    }
                }
            }
            s
        })
        .collect();
    let rows: Vec<Vector> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let mut s = Q::zero();
                    for (c, v) in table.basis_product(i, j) {
                        s += v * &tr[*c];
                    }
                    s
                })
                .collect()
        })
        .collect();
    Subspace::span(d, nullspace(&rows, d))
}

/// Operators on `m` of a basis of the Jacobson radical.
pub fn radical_operators(table: &StructureTable, j: &Subspace, m: &Representation) -> Vec<Matrix> {
    let ops: Vec<Matrix> = table.words.iter().map(|w| m.word_op(w)).collect();
    j.basis().iter().map(|e| m.act_with(&ops, table, e)).collect()
}

/// `rad m = J m`.
pub fn module_radical(table: &StructureTable, j: &Subspace, m: &Representation) -> Subspace {
    let n = m.dim();
    let mut ech = Echelon::new(n);
    for op in radical_operators(table, j, m) {
        for c in 0..n {
            ech.insert(op.col(c));
        }
    }
    Subspace::span(n, ech.rows().to_vec())
}

/// `soc m = { v : J v = 0 }`.
pub fn module_socle(table: &StructureTable, j: &Subspace, m: &Representation) -> Subspace {
    let n = m.dim();
    let mut rows = Vec::new();
    for op in radical_operators(table, j, m) {
        rows.extend(op.row_vecs().into_iter().filter(|r| !is_zero_vec(r)));
    }
    Subspace::span(n, nullspace(&rows, n))
}

/// Simple iff semisimple (`J m = 0`) with one-dimensional endomorphisms.
pub fn is_simple(table: &StructureTable, j: &Subspace, m: &Representation) -> bool {
    m.dim() > 0 && module_radical(table, j, m).dim() == 0 && end_algebra(m).len() == 1
}

/// Index of the simple in `simples` isomorphic to `m`, if any.
pub fn identify(m: &Representation, simples: &[Representation]) -> Option<usize> {
    simples.iter().position(|s| is_isomorphic(m, s, 7))
}

/// A random nonzero point of a two-dimensional coordinate line, for sampling.
pub fn sample_point(rng: &mut ChaCha8Rng) -> (Q, Q) {
    loop {
        let l = Q::from_integer(rng.gen_range(-9i64..=9).into());
        let m = Q::from_integer(rng.gen_range(-9i64..=9).into());
        if !(l.is_zero() && m.is_zero()) {
            return (l, m);
        }
    }
}

pub(crate) fn combo(c: &[(Q, &Vector)]) -> Vector {
    let n = c.first().map(|x| x.1.len()).unwrap_or(0);
    let mut v = zero_vec(n);
    for (q, b) in c {
        add_scaled(&mut v, q, b);
    }
    v
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn gen() -> StructureTable {
        StructureTable::build(&ParamVector::from_ints(3, &[1, 2, -3]).unwrap(), Variant::A, 6).unwrap()
    }

    #[test]
    fn verma_satisfies_relations() {
        let t = gen();
        for g in 0..6 {
            let m = verma(&t, g);
            m.check_relations(&t.a, Variant::A).unwrap();
            assert_eq!(m.weight_multiplicities(), vec![2; 6]);
        }
    }

    #[test]
    fn simple_l_and_onedim() {
        let a = ParamVector::from_ints(3, &[1, 2, -3]).unwrap();
        simple_l(&a).unwrap().check_relations(&a, Variant::A).unwrap();
        assert!(onedim(&a, 1).is_err());
        let sub = ParamVector::from_ints(3, &[2, -1, -1]).unwrap();
        let l = simple_l(&sub).unwrap();
        assert_eq!(l.dim(), 4);
        l.check_relations(&sub, Variant::A).unwrap();
        onedim(&sub, 1).unwrap().check_relations(&sub, Variant::A).unwrap();
    }

    #[test]
    fn w_modules() {
        let a = ParamVector::from_ints(3, &[1, 2, -3]).unwrap();
        let t = ParamVector::new(3, vec![q(1), q(3), q(-4)]).unwrap();
        w_l_ke(&a, &t).unwrap().check_relations(&a, Variant::A).unwrap();
        w_ke_l(&a, &t).unwrap().check_relations(&a, Variant::A).unwrap();
        assert!(w_ke_l_as_printed(&a, &t).unwrap().check_relations(&a, Variant::A).is_err());
    }

    #[test]
    fn hom_and_iso() {
        let a = ParamVector::from_ints(3, &[1, 2, -3]).unwrap();
        let l = simple_l(&a).unwrap();
        assert_eq!(end_algebra(&l).len(), 1);
        let t = gen();
        let m = verma(&t, 0);
        assert!(is_indecomposable(&m));
        assert!(is_isomorphic(&l, &l, 1));
        let z = ParamVector::from_ints(3, &[0, 0, 0]).unwrap();
        let w0 = w_l_ke(&a, &z).unwrap();
        assert!(!is_indecomposable(&w0));
    }

    #[test]
    fn w_modules_are_cyclic_submodules() {
        let t = gen();
        let a = t.a.clone();
        let me = verma(&t, 0);
        let mg = verma(&t, 5);
        for tv in [[1i64, 3, -4], [2, -1, -1], [0, 1, -1]] {
            let tt = ParamVector::from_ints(3, &tv).unwrap();
            let (t12, t13) = (tt.at(0).clone(), tt.at(1).clone());
            let w = verma_vector(&t, &[("x23.x12", t13.clone()), ("x12.x13", -t12.clone())]).unwrap();
            let sub = me.restrict(&me.spin(&[w]), "A·w").unwrap();
            assert!(is_isomorphic(&w_l_ke(&a, &tt).unwrap(), &sub, 3));
            let we = verma_vector(&t, &[("x13.x12", -t12), ("x12.x23", t13)]).unwrap();
            let sub = mg.restrict(&mg.spin(&[we]), "A·w_e").unwrap();
            assert!(is_isomorphic(&w_ke_l(&a, &tt).unwrap(), &sub, 3));
        }
        let t1 = ParamVector::from_ints(3, &[1, 3, -4]).unwrap();
        let t2 = ParamVector::from_ints(3, &[2, 6, -8]).unwrap();
        let t3 = ParamVector::from_ints(3, &[2, -1, -1]).unwrap();
        assert!(is_isomorphic(&w_l_ke(&a, &t1).unwrap(), &w_l_ke(&a, &t2).unwrap(), 1));
        assert!(!is_isomorphic(&w_l_ke(&a, &t1).unwrap(), &w_l_ke(&a, &t3).unwrap(), 1));
        let z = ParamVector::zero(3);
        let split = simple_l(&a).unwrap().direct_sum(&onedim(&a, 0).unwrap());
        assert!(is_isomorphic(&w_ke_l(&a, &z).unwrap(), &split, 1));
    }
}
