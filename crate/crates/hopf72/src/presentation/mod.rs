//! Presentation of `𝒜_[a]` and `𝒦_a` as quotients of `T(V_n) # k^{S_n}`.
//!
//! Elements of the free smash product are kept normal ordered, x-letters
//! first and the `k^G` coefficient on the right: `Σ_w w·φ_w`. Moving a
//! function past a word uses `φ·v = v·φ(g_v ·)` where `g_v` is the product
//! of the transpositions of `v`.

pub mod crosscheck;
pub mod rewrite;
pub mod table;

use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Q;
use crate::symgroup::{f_idx, ParamVector, SymGroup};
use crate::Error;

pub use rewrite::{RewriteSystem, Rule, WordOrder};
pub use table::{AlgebraElement, StructureTable};

/// A word in the x-letters; each letter is a transposition index of the group.
pub type Word = Vec<u8>;

/// Which square relations to impose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Variant {
    /// `x_ij² = f_ij`: the Hopf algebra `𝒜_[a]`.
    A,
    /// `x_ij² = −Σ_g a_{g⁻¹(ij)g} δ_g`: the cocycle-deformation witness `𝒦_a`.
    K,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "A" | "a" => Ok(Variant::A),
            "K" | "k" => Ok(Variant::K),
            _ => Err(Error::Parse(format!("unknown variant {s:?}, expected A or K"))),
        }
    }
}

/// Product of the transpositions of `w` as a group index.
pub fn word_weight(grp: &SymGroup, w: &[u8]) -> usize {
    w.iter().fold(grp.identity(), |acc, &k| grp.mul(acc, grp.trans_elem(k as usize)))
}

pub fn word_name(grp: &SymGroup, w: &[u8]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let ts = grp.transpositions();
    w.iter().map(|&k| ts[k as usize].letter()).collect::<Vec<_>>().join(".")
}

/// Parses `x13.x12` or `1`.
pub fn parse_word(grp: &SymGroup, s: &str) -> Result<Word, Error> {
    let s = s.trim();
    if s == "1" || s.is_empty() {
        return Ok(vec![]);
    }
    s.split('.')
        .map(|l| {
            grp.transpositions()
                .iter()
                .position(|t| t.letter() == l.trim())
                .map(|k| k as u8)
                .ok_or_else(|| Error::Parse(format!("unknown letter {l:?}")))
        })
        .collect()
}

/// `ψ(g_v ·)` for a word `v`: the function obtained by moving `ψ` right past `v`.
pub fn shift_fn(grp: &SymGroup, psi: &[Q], v: &[u8]) -> Vec<Q> {
    let gv = word_weight(grp, v);
    (0..grp.order()).map(|g| psi[grp.mul(gv, g)].clone()).collect()
}

pub fn mul_fn(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

/// Element of the free smash product, `Σ_w w·φ_w`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SmashPoly {
    pub terms: BTreeMap<Word, Vec<Q>>,
}

impl SmashPoly {
    pub fn zero() -> Self {
        SmashPoly { terms: BTreeMap::new() }
    }

    pub fn constant_fn(w: Word, phi: Vec<Q>) -> Self {
        let mut p = Self::zero();
        p.add_term(w, &phi);
        p
    }

    /// `c·w` with `c` a scalar (the function `c·1`).
    pub fn word(grp: &SymGroup, w: Word, c: Q) -> Self {
        Self::constant_fn(w, vec![c; grp.order()])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, phi: &[Q]) {
        if phi.iter().all(|x| x.is_zero()) {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(|| vec![Q::zero(); phi.len()]);
        for (x, y) in e.iter_mut().zip(phi) {
            *x += y;
        }
        if e.iter().all(|x| x.is_zero()) {
            self.terms.remove(&w);
        }
    }

    pub fn add(&mut self, other: &SmashPoly) {
        for (w, phi) in &other.terms {
            self.add_term(w.clone(), phi);
        }
    }

    pub fn sub(&mut self, other: &SmashPoly) {
        for (w, phi) in &other.terms {
            let neg: Vec<Q> = phi.iter().map(|x| -x.clone()).collect();
            self.add_term(w.clone(), &neg);
        }
    }

    /// Right multiplication by a function.
    pub fn mul_fn_right(&self, psi: &[Q]) -> SmashPoly {
        let mut out = SmashPoly::zero();
        for (w, phi) in &self.terms {
            out.add_term(w.clone(), &mul_fn(phi, psi));
        }
        out
    }

    /// `u · self`.
    pub fn mul_word_left(&self, u: &[u8]) -> SmashPoly {
        let mut out = SmashPoly::zero();
        for (w, phi) in &self.terms {
            let mut uw = u.to_vec();
            uw.extend_from_slice(w);
            out.add_term(uw, phi);
        }
        out
    }

    /// `self · v`, moving coefficients right past `v`.
    pub fn mul_word_right(&self, grp: &SymGroup, v: &[u8]) -> SmashPoly {
        let mut out = SmashPoly::zero();
        for (w, phi) in &self.terms {
            let mut wv = w.clone();
            wv.extend_from_slice(v);
            out.add_term(wv, &shift_fn(grp, phi, v));
        }
        out
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    /// Value at tail `g`: the scalar combination `Σ_w φ_w(g) w`.
    pub fn at(&self, g: usize) -> Vec<(Word, Q)> {
        self.terms
            .iter()
            .filter(|(_, phi)| !phi[g].is_zero())
            .map(|(w, phi)| (w.clone(), phi[g].clone()))
            .collect()
    }

    pub fn render(&self, grp: &SymGroup) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, phi)| {
                let coeff = render_fn(grp, phi);
                format!("{}·{}", word_name(grp, w), coeff)
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for SmashPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, phi) in &self.terms {
            let c: Vec<String> = phi.iter().map(crate::scalar::fmt_q).collect();
            write!(f, "{:?}[{}] ", w, c.join(","))?;
        }
        Ok(())
    }
}

/// Renders a `k^G` function: a scalar when constant, else `Σ c δ_g`.
pub fn render_fn(grp: &SymGroup, phi: &[Q]) -> String {
    if phi.iter().all(|x| x == &phi[0]) {
        return crate::scalar::fmt_q(&phi[0]);
    }
    let parts: Vec<String> = phi
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(g, c)| format!("{}δ{}", crate::scalar::fmt_q(c), grp.name(g)))
        .collect();
    format!("({})", parts.join(" + "))
}

/// The function `f_t` as a vector over the group.
pub fn f_fn(grp: &SymGroup, a: &ParamVector, k: usize) -> Vec<Q> {
    (0..grp.order()).map(|g| f_idx(grp, a, k, g)).collect()
}

/// Right-hand side of the square relation `x_t x_t = sq_t` for the variant.
pub fn square_fn(grp: &SymGroup, a: &ParamVector, k: usize, variant: Variant) -> Vec<Q> {
    match variant {
        Variant::A => f_fn(grp, a, k),
        Variant::K => (0..grp.order()).map(|g| -a.at(grp.conj_trans(k, g)).clone()).collect(),
    }
}

/// A named defining relator.
#[derive(Clone, Debug)]
pub struct Relator {
    pub name: String,
    pub poly: SmashPoly,
}

/// All defining relators for `S_n`, `n ∈ {3,4,5}`.
pub fn relations(a: &ParamVector, n: usize, variant: Variant) -> Result<Vec<Relator>, Error> {
    if !(3..=5).contains(&n) {
        return Err(Error::Unsupported(format!("relations are emitted for n in 3..=5, got {n}")));
    }
    if a.n() != n {
        return Err(Error::Param(format!("parameter has degree {}, expected {n}", a.n())));
    }
    let grp = SymGroup::new(n);
    let ts = grp.transpositions().to_vec();
    let one = vec![Q::one(); grp.order()];
    let mut out = Vec::new();
    for (k, t) in ts.iter().enumerate() {
        let mut p = SmashPoly::constant_fn(vec![k as u8, k as u8], one.clone());
        let sq: Vec<Q> = square_fn(&grp, a, k, variant).into_iter().map(|x| -x).collect();
        p.add_term(vec![], &sq);
        out.push(Relator { name: format!("{}^2", t.letter()), poly: p });
    }
    for (s, ts_) in ts.iter().enumerate() {
        for (t, tt) in ts.iter().enumerate().skip(s + 1) {
            if ts_.disjoint(tt) {
                let mut p = SmashPoly::constant_fn(vec![s as u8, t as u8], one.clone());
                p.add_term(vec![t as u8, s as u8], &one);
                out.push(Relator { name: format!("R{}{}", ts_, tt), poly: p });
            }
        }
    }
    // R_(ij)(ik) = x_ij x_ik + x_ik x_jk + x_jk x_ij, one per cyclic order of each triple.
    for p in 1..=n {
        for q in (p + 1)..=n {
            for r in (q + 1)..=n {
                let i = r;
                for (j, kk) in [(p, q), (q, p)] {
                    let ij = grp.trans_index(&crate::symgroup::Transposition::new(i, j)) as u8;
                    let ik = grp.trans_index(&crate::symgroup::Transposition::new(i, kk)) as u8;
                    let jk = grp.trans_index(&crate::symgroup::Transposition::new(j, kk)) as u8;
                    let mut poly = SmashPoly::constant_fn(vec![ij, ik], one.clone());
                    poly.add_term(vec![ik, jk], &one);
                    poly.add_term(vec![jk, ij], &one);
                    out.push(Relator { name: format!("R{}{}", ts[ij as usize], ts[ik as usize]), poly });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relator_counts() {
        let a3 = ParamVector::from_ints(3, &[1, 2, -3]).unwrap();
        let r = relations(&a3, 3, Variant::A).unwrap();
        assert_eq!(r.len(), 5);
        let names: Vec<&str> = r.iter().map(|x| x.name.as_str()).collect();
        assert!(names.contains(&"R(13)(23)") && names.contains(&"R(23)(13)"));
        let a4 = ParamVector::zero(4);
        assert_eq!(relations(&a4, 4, Variant::A).unwrap().len(), 6 + 3 + 8);
        assert!(relations(&ParamVector::zero(6), 6, Variant::A).is_err());
    }

    #[test]
    fn zero_parameter_squares_are_monomial() {
        let r = relations(&ParamVector::zero(3), 3, Variant::A).unwrap();
        for rel in r.iter().filter(|x| x.name.ends_with("^2")) {
            assert_eq!(rel.poly.terms.len(), 1);
        }
    }

    #[test]
    fn coefficient_shift() {
        let grp = SymGroup::new(3);
        // φ = δ_e ; φ·x12 = x12·δ_(12)
        let mut phi = vec![Q::zero(); 6];
        phi[0] = Q::one();
        let s = shift_fn(&grp, &phi, &[0]);
        assert!(s[1].is_one() && s.iter().filter(|x| !x.is_zero()).count() == 1);
    }
}
