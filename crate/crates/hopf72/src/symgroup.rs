//! Symmetric groups, the parameter space and the functionals `f_ij`.
//!
//! Permutations compose right to left: `(p * q)(x) = p(q(x))`. With this
//! convention the product `(13)(23)` is the 3-cycle `(132)`.

use num::Zero;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::scalar::{fmt_q, parse_q, Q};
use crate::Error;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    map: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { map: (0..n as u8).collect() }
    }

    /// From a zero-based image list; `None` unless it is a bijection.
    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x as usize >= n || seen[x as usize] {
                return None;
            }
            seen[x as usize] = true;
        }
        Some(Perm { map: images })
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// Image of the one-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.map[x - 1] as usize + 1
    }

    pub fn images(&self) -> &[u8] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "degree mismatch");
        Perm { map: other.map.iter().map(|&x| self.map[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm { map: inv }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s + 1];
            seen[s] = true;
            let mut x = self.map[s] as usize;
            while x != s {
                seen[x] = true;
                c.push(x + 1);
                x = self.map[x] as usize;
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    pub fn sign(&self) -> i32 {
        let odd = self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2;
        if odd == 1 {
            -1
        } else {
            1
        }
    }

    pub fn cycle(n: usize, pts: &[usize]) -> Result<Perm, Error> {
        let mut map: Vec<u8> = (0..n as u8).collect();
        let mut seen = BTreeSet::new();
        for &p in pts {
            if p == 0 || p > n || !seen.insert(p) {
                return Err(Error::Parse(format!("bad cycle {pts:?} for degree {n}")));
            }
        }
        for k in 0..pts.len() {
            map[pts[k] - 1] = (pts[(k + 1) % pts.len()] - 1) as u8;
        }
        Ok(Perm { map })
    }

    /// Parses cycle notation such as `(12)`, `(13)(23)`, `(1 2 3)`, `e` or `()`.
    /// A product of cycles is composed right to left.
    pub fn parse(s: &str, n: usize) -> Result<Perm, Error> {
        let t = s.trim();
        if t == "e" || t == "()" || t == "id" {
            return Ok(Perm::identity(n));
        }
        let mut out = Perm::identity(n);
        let mut rest = t;
        if !rest.starts_with('(') {
            return Err(Error::Parse(format!("expected cycle notation, got {s:?}")));
        }
        while !rest.is_empty() {
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {s:?}")))?;
            let body = &rest[1..close];
            let pts: Vec<usize> = if body.contains(',') || body.contains(' ') {
                body.split([',', ' '])
                    .filter(|x| !x.is_empty())
                    .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad point in {s:?}"))))
                    .collect::<Result<_, _>>()?
            } else {
                body.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad point in {s:?}"))))
                    .collect::<Result<_, _>>()?
            };
            out = out.compose(&Perm::cycle(n, &pts)?);
            rest = rest[close + 1..].trim_start();
            if !rest.is_empty() && !rest.starts_with('(') {
                return Err(Error::Parse(format!("unexpected text in {s:?}")));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return write!(f, "e");
        }
        let sep = if self.n() > 9 { "," } else { "" };
        for c in cs {
            let pts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A transposition `(ij)` with `i < j`, one-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    pub i: usize,
    pub j: usize,
}

impl Transposition {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i != j, "a transposition moves two distinct points");
        Transposition { i: i.min(j), j: i.max(j) }
    }

    pub fn to_perm(&self, n: usize) -> Perm {
        Perm::cycle(n, &[self.i, self.j]).expect("valid transposition")
    }

    /// `g⁻¹ t g`, which swaps `g⁻¹(i)` and `g⁻¹(j)`.
    pub fn conjugate_by(&self, g: &Perm) -> Transposition {
        let gi = g.inverse();
        Transposition::new(gi.apply(self.i), gi.apply(self.j))
    }

    pub fn disjoint(&self, o: &Transposition) -> bool {
        self.i != o.i && self.i != o.j && self.j != o.i && self.j != o.j
    }

    pub fn letter(&self) -> String {
        format!("x{}{}", self.i, self.j)
    }

    pub fn from_perm(p: &Perm) -> Option<Transposition> {
        let cs = p.cycles();
        if cs.len() == 1 && cs[0].len() == 2 {
            Some(Transposition::new(cs[0][0], cs[0][1]))
        } else {
            None
        }
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{})", self.i, self.j)
    }
}

impl fmt::Debug for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `S_n` with a fixed element order and a multiplication table.
///
/// Order: identity, the transpositions in lexicographic order, then the
/// remaining elements by one-line notation. For `n = 3` this is
/// `e, (12), (13), (23), (123), (132)`.
#[derive(Clone, Debug)]
pub struct SymGroup {
    pub n: usize,
    elems: Vec<Perm>,
    index: HashMap<Perm, usize>,
    mul: Vec<usize>,
    inv: Vec<usize>,
    trans: Vec<Transposition>,
    trans_elem: Vec<usize>,
}

impl SymGroup {
    pub fn new(n: usize) -> Self {
        assert!((1..=7).contains(&n), "degree out of supported range");
        let mut all = Vec::new();
        permutations(n, &mut all);
        let trans: Vec<Transposition> =
            (1..=n).flat_map(|i| ((i + 1)..=n).map(move |j| Transposition::new(i, j))).collect();
        let mut elems = vec![Perm::identity(n)];
        elems.extend(trans.iter().map(|t| t.to_perm(n)));
        let mut rest: Vec<Perm> = all
            .into_iter()
            .filter(|p| !p.is_identity() && Transposition::from_perm(p).is_none())
            .collect();
        rest.sort();
        elems.extend(rest);
        let index: HashMap<Perm, usize> = elems.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let m = elems.len();
        let mut mul = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                mul[a * m + b] = index[&elems[a].compose(&elems[b])];
            }
        }
        let inv = elems.iter().map(|p| index[&p.inverse()]).collect();
        let trans_elem = (1..=trans.len()).collect();
        SymGroup { n, elems, index, mul, inv, trans, trans_elem }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elem(&self, i: usize) -> &Perm {
        &self.elems[i]
    }

    pub fn elems(&self) -> &[Perm] {
        &self.elems
    }

    pub fn index_of(&self, p: &Perm) -> usize {
        self.index[p]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elems.len() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn sign(&self, a: usize) -> i32 {
        self.elems[a].sign()
    }

    pub fn transpositions(&self) -> &[Transposition] {
        &self.trans
    }

    pub fn trans_index(&self, t: &Transposition) -> usize {
        self.trans.iter().position(|x| x == t).expect("transposition of this degree")
    }

    /// Group index of the k-th transposition.
    pub fn trans_elem(&self, k: usize) -> usize {
        self.trans_elem[k]
    }

    /// Index of the transposition `g⁻¹ t_k g`.
    pub fn conj_trans(&self, k: usize, g: usize) -> usize {
        let t = self.trans[k].conjugate_by(&self.elems[g]);
        self.trans_index(&t)
    }

    pub fn parse(&self, s: &str) -> Result<usize, Error> {
        Ok(self.index_of(&Perm::parse(s, self.n)?))
    }

    pub fn name(&self, a: usize) -> String {
        self.elems[a].to_string()
    }
}

fn permutations(n: usize, out: &mut Vec<Perm>) {
    fn rec(cur: &mut Vec<u8>, used: &mut Vec<bool>, n: usize, out: &mut Vec<Perm>) {
        if cur.len() == n {
            out.push(Perm { map: cur.clone() });
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x as u8);
                rec(cur, used, n, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    rec(&mut Vec::new(), &mut vec![false; n], n, out);
}

/// A point of `𝔄_n`: one rational per transposition, summing to zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParamVector {
    n: usize,
    values: Vec<Q>,
}

impl ParamVector {
    pub fn new(n: usize, values: Vec<Q>) -> Result<Self, Error> {
        let expect = n * (n - 1) / 2;
        if values.len() != expect {
            return Err(Error::Param(format!("expected {expect} entries for n = {n}, got {}", values.len())));
        }
        let s: Q = values.iter().sum();
        if !s.is_zero() {
            return Err(Error::Param(format!(
                "entries must sum to zero (sum is {}); adjust one entry by {}",
                fmt_q(&s),
                fmt_q(&-s.clone())
            )));
        }
        Ok(ParamVector { n, values })
    }

    pub fn from_ints(n: usize, v: &[i64]) -> Result<Self, Error> {
        Self::new(n, v.iter().map(|&x| crate::scalar::q(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        ParamVector { n, values: vec![Q::zero(); n * (n - 1) / 2] }
    }

    /// Parses a comma separated list of rationals, ordered like the transpositions.
    pub fn parse(s: &str, n: usize) -> Result<Self, Error> {
        let vals = s.split(',').map(parse_q).collect::<Result<Vec<_>, _>>()?;
        Self::new(n, vals)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    /// Value at the k-th transposition.
    pub fn at(&self, k: usize) -> &Q {
        &self.values[k]
    }

    pub fn get(&self, t: &Transposition) -> &Q {
        let k = trans_rank(self.n, t);
        &self.values[k]
    }

    /// The parameter `b` with `b_t = a_{p⁻¹ t p}`.
    pub fn conjugate(&self, p: &Perm) -> ParamVector {
        let g = SymGroup::new(self.n);
        let values = g
            .transpositions()
            .iter()
            .map(|t| self.get(&t.conjugate_by(p)).clone())
            .collect();
        ParamVector { n: self.n, values }
    }

    pub fn scale(&self, mu: &Q) -> ParamVector {
        ParamVector { n: self.n, values: self.values.iter().map(|x| mu * x).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|x| x.is_zero())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values.iter().map(fmt_q).collect()
    }
}

impl fmt::Display for ParamVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

fn trans_rank(n: usize, t: &Transposition) -> usize {
    let mut k = 0;
    for i in 1..=n {
        for j in (i + 1)..=n {
            if (i, j) == (t.i, t.j) {
                return k;
            }
            k += 1;
        }
    }
    panic!("transposition {t} outside degree {n}")
}

/// `f_t(g) = a_t − a_{g⁻¹ t g}`.
pub fn f_eval(a: &ParamVector, t: &Transposition, g: &Perm) -> Q {
    a.get(t) - a.get(&t.conjugate_by(g))
}

/// Index-based variant used in inner loops.
pub fn f_idx(grp: &SymGroup, a: &ParamVector, k: usize, g: usize) -> Q {
    a.at(k) - a.at(grp.conj_trans(k, g))
}

/// `Ω(g) = f₁₃((12)g) − f₁₃(g)`, for `n = 3`.
pub fn omega_eval(a: &ParamVector, g: &Perm) -> Q {
    assert_eq!(a.n(), 3, "Ω is defined for n = 3");
    let t13 = Transposition::new(1, 3);
    let s12 = Transposition::new(1, 2).to_perm(3);
    f_eval(a, &t13, &s12.compose(g)) - f_eval(a, &t13, g)
}

/// `{ h : f_t(h) = 0 for every t }`.
pub fn isotropy_group(a: &ParamVector) -> Vec<Perm> {
    let g = SymGroup::new(a.n());
    g.elems()
        .iter()
        .filter(|h| g.transpositions().iter().all(|t| f_eval(a, t, h).is_zero()))
        .cloned()
        .collect()
}

/// Result of a linkage query: the chain `t_1, …, t_m` with `g = t_m ⋯ t_1 h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linkage {
    pub linked: bool,
    pub chain: Vec<Transposition>,
}

/// Breadth-first search along steps `x ↦ t x` allowed when `f_t(x) ≠ 0`.
pub fn linked(a: &ParamVector, g: &Perm, h: &Perm) -> Linkage {
    let grp = SymGroup::new(a.n());
    let (gi, hi) = (grp.index_of(g), grp.index_of(h));
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; grp.order()];
    let mut seen = vec![false; grp.order()];
    seen[hi] = true;
    let mut queue = VecDeque::from([hi]);
    while let Some(x) = queue.pop_front() {
        if x == gi {
            break;
        }
        for k in 0..grp.transpositions().len() {
            if f_idx(&grp, a, k, x).is_zero() {
                continue;
            }
            let y = grp.mul(grp.trans_elem(k), x);
            if !seen[y] {
                seen[y] = true;
                prev[y] = Some((x, k));
                queue.push_back(y);
            }
        }
    }
    if !seen[gi] {
        return Linkage { linked: false, chain: vec![] };
    }
    let mut chain = Vec::new();
    let mut cur = gi;
    while let Some((p, k)) = prev[cur] {
        chain.push(grp.transpositions()[k]);
        cur = p;
    }
    chain.reverse();
    Linkage { linked: true, chain }
}

/// Partition of `S_n` into linkage classes, each sorted by the group order.
pub fn linkage_classes(a: &ParamVector) -> Vec<Vec<Perm>> {
    let grp = SymGroup::new(a.n());
    let mut class = vec![usize::MAX; grp.order()];
    let mut out: Vec<Vec<Perm>> = Vec::new();
    for s in 0..grp.order() {
        if class[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![];
        let mut stack = vec![s];
        class[s] = id;
        while let Some(x) = stack.pop() {
            members.push(x);
            for k in 0..grp.transpositions().len() {
                if f_idx(&grp, a, k, x).is_zero() {
                    continue;
                }
                let y = grp.mul(grp.trans_elem(k), x);
                if class[y] == usize::MAX {
                    class[y] = id;
                    stack.push(y);
                }
            }
        }
        members.sort();
        out.push(members.into_iter().map(|i| grp.elem(i).clone()).collect());
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegimeTag {
    Zero,
    SubGeneric,
    Generic,
}

impl fmt::Display for RegimeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegimeTag::Zero => "zero",
            RegimeTag::SubGeneric => "sub-generic",
            RegimeTag::Generic => "generic",
        })
    }
}

/// Regime of a parameter for `n = 3`, with the conjugation bringing a
/// sub-generic parameter to the form `a₁₂ ≠ a₁₃ = a₂₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regime {
    pub tag: RegimeTag,
    /// `p` with `canonical = a.conjugate(p)`.
    pub normalizer: Perm,
    pub canonical: ParamVector,
}

impl Regime {
    pub fn classify(a: &ParamVector) -> Result<Regime, Error> {
        if a.n() != 3 {
            return Err(Error::Unsupported(format!("regime classification needs n = 3, got {}", a.n())));
        }
        let v = a.values();
        let distinct = v.iter().collect::<BTreeSet<_>>().len();
        let tag = match distinct {
            1 => RegimeTag::Zero,
            3 => RegimeTag::Generic,
            _ => RegimeTag::SubGeneric,
        };
        if tag != RegimeTag::SubGeneric {
            return Ok(Regime { tag, normalizer: Perm::identity(3), canonical: a.clone() });
        }
        let grp = SymGroup::new(3);
        for p in grp.elems() {
            let b = a.conjugate(p);
            if b.at(0) != b.at(1) && b.at(1) == b.at(2) {
                return Ok(Regime { tag, normalizer: p.clone(), canonical: b });
            }
        }
        unreachable!("some conjugate of a sub-generic parameter is canonical")
    }

    /// Name in the user's coordinates of a canonical-coordinate group element.
    pub fn original_name(&self, canonical: &Perm) -> String {
        let p = &self.normalizer;
        p.inverse().compose(canonical).compose(p).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn p(s: &str) -> Perm {
        Perm::parse(s, 3).unwrap()
    }

    #[test]
    fn composition_is_right_to_left() {
        assert_eq!(p("(13)(23)"), p("(132)"));
        assert_eq!(p("(23)(13)"), p("(123)"));
        assert_eq!(p("(13)(12)"), p("(123)"));
        assert_eq!(p("(12)").sign(), -1);
        assert_eq!(p("(123)").sign(), 1);
        assert_eq!(p("e").to_string(), "e");
        assert_eq!(p("(1 3 2)").to_string(), "(132)");
    }

    #[test]
    fn group_order_and_table() {
        let g = SymGroup::new(3);
        let names: Vec<String> = (0..6).map(|i| g.name(i)).collect();
        assert_eq!(names, ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]);
        for a in 0..6 {
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
        assert_eq!(SymGroup::new(4).order(), 24);
        assert_eq!(SymGroup::new(4).transpositions().len(), 6);
    }

    #[test]
    fn f_table_matches_expansion() {
        let a = ParamVector::from_ints(3, &[1, 2, -3]).unwrap();
        let t13 = Transposition::new(1, 3);
        // f13 = (a13 − a23)(δ(12) + δ(123)) + (a13 − a12)(δ(23) + δ(132))
        assert_eq!(f_eval(&a, &t13, &p("(12)")), q(5));
        assert_eq!(f_eval(&a, &t13, &p("(123)")), q(5));
        assert_eq!(f_eval(&a, &t13, &p("(23)")), q(1));
        assert_eq!(f_eval(&a, &t13, &p("(132)")), q(1));
        assert_eq!(f_eval(&a, &t13, &p("(13)")), q(0));
        assert_eq!(f_eval(&a, &t13, &p("e")), q(0));
    }

    #[test]
    fn omega_expansion() {
        let a = ParamVector::from_ints(3, &[1, 2, -3]).unwrap();
        let (a12, a13, a23) = (q(1), q(2), q(-3));
        assert_eq!(omega_eval(&a, &p("(12)")), &a23 - &a13);
        assert_eq!(omega_eval(&a, &p("e")), &a13 - &a23);
        assert_eq!(omega_eval(&a, &p("(13)")), &a13 - &a12);
        assert_eq!(omega_eval(&a, &p("(132)")), &a12 - &a13);
        assert_eq!(omega_eval(&a, &p("(23)")), &a12 - &a23);
        assert_eq!(omega_eval(&a, &p("(123)")), &a23 - &a12);
    }

    #[test]
    fn isotropy_and_classes() {
        let sub = ParamVector::from_ints(3, &[2, -1, -1]).unwrap();
        assert_eq!(isotropy_group(&sub), vec![p("e"), p("(12)")]);
        let gen = ParamVector::from_ints(3, &[1, 2, -3]).unwrap();
        assert_eq!(isotropy_group(&gen), vec![p("e")]);
        let cl = linkage_classes(&sub);
        assert_eq!(cl.len(), 3);
        assert_eq!(cl[2].len(), 4);
        assert!(!linked(&sub, &p("e"), &p("(12)")).linked);
        let l = linked(&gen, &p("(12)"), &p("(13)"));
        assert!(l.linked);
        let mut x = p("(13)");
        for t in &l.chain {
            x = t.to_perm(3).compose(&x);
        }
        assert_eq!(x, p("(12)"));
    }

    #[test]
    fn regime_normalizer() {
        let a = ParamVector::from_ints(3, &[-1, 2, -1]).unwrap();
        let r = Regime::classify(&a).unwrap();
        assert_eq!(r.tag, RegimeTag::SubGeneric);
        assert!(r.canonical.at(0) != r.canonical.at(1));
        assert_eq!(r.canonical.at(1), r.canonical.at(2));
        assert_eq!(Regime::classify(&ParamVector::zero(3)).unwrap().tag, RegimeTag::Zero);
        assert!(ParamVector::from_ints(3, &[1, 1, 1]).is_err());
    }
}
