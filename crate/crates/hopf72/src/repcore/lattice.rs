//! Exact submodule lattices of modules whose weight spaces have dimension at most two.
//!
//! Submodules are graded, so a submodule is a choice in each weight space of
//! `0`, a line, or everything. For a fixed dimension profile the closure
//! conditions `x_t N[h] ⊆ N[t h]` become: a line is fixed, two lines are
//! linked by an invertible 2×2 block, or (for rank-one blocks) a disjunction
//! of two fixings. Solving these exactly enumerates every submodule; lines
//! left free form `ℙ¹` families.
//!
//! Along a family every closure condition is a binary form of degree at most
//! two in the parameter, so closure at three distinct parameters is closure
//! for all of them.

use num::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{identify, render_vector, sample_point, Representation};
use crate::linalg::{parallel, solve, zero_vec, Matrix, Subspace, Vector};
use crate::scalar::{fmt_q, q, sqrt_q, Q};
use crate::symgroup::SymGroup;
use crate::Error;

pub const SCHEMA_ID: &str = "hopf72/lattice/v1";
pub const DOT_SCHEMA_ID: &str = "hopf72/lattice-dot/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Slot {
    Zero,
    Line,
    Full,
}

#[derive(Clone, Debug)]
enum Constraint {
    Fix(usize, Vector),
    Link(usize, usize, Matrix),
    Either(usize, Vector, usize, Vector),
}

/// Solver state: `ℓ_h = P_h ℓ_{root(h)}` up to scalars, roots possibly fixed.
#[derive(Clone, Debug)]
struct Chart {
    root: Vec<usize>,
    p: Vec<Matrix>,
    fixed: Vec<Option<Vector>>,
}

fn normalize(v: &[Q]) -> Vector {
    match v.iter().find(|x| !x.is_zero()) {
        Some(f) => {
            let f = f.clone();
            v.iter().map(|x| x / &f).collect()
        }
        None => v.to_vec(),
    }
}

#[cfg(test)]
fn mat2(a: &[[i64; 2]; 2]) -> Matrix {
    Matrix::from_rows(&[vec![q(a[0][0]), q(a[0][1])], vec![q(a[1][0]), q(a[1][1])]])
}

/// Rational eigenlines of a non-scalar 2×2 matrix.
fn eigenlines(c: &Matrix) -> Result<Vec<Vector>, Error> {
    let tr = c.trace();
    let det = c.get(0, 0) * c.get(1, 1) - c.get(0, 1) * c.get(1, 0);
    let disc = &tr * &tr - q(4) * &det;
    let s = sqrt_q(&disc).ok_or_else(|| {
        Error::Unsupported("a submodule family is cut out by an irrational eigenline; extend the field".into())
    })?;
    let mut out: Vec<Vector> = Vec::new();
    for lam in [(&tr + &s) / q(2), (&tr - &s) / q(2)] {
        let shifted = c.sub(&Matrix::identity(2).scale(&lam));
        for v in shifted.kernel() {
            let v = normalize(&v);
            if !out.iter().any(|w| parallel(w, &v)) {
                out.push(v);
            }
        }
    }
    Ok(out)
}

impl Chart {
    fn new() -> Self {
        Chart { root: (0..6).collect(), p: vec![Matrix::identity(2); 6], fixed: vec![None; 6] }
    }

    fn fix(mut self, v: usize, s: &[Q]) -> Option<Chart> {
        let r = self.root[v];
        let s_r = normalize(&self.p[v].inverse()?.apply(s));
        match &self.fixed[r] {
            Some(t) => parallel(t, &s_r).then_some(self),
            None => {
                self.fixed[r] = Some(s_r);
                Some(self)
            }
        }
    }

    fn link(mut self, v: usize, w: usize, x: &Matrix) -> Result<Vec<Chart>, Error> {
        let (r, rw) = (self.root[v], self.root[w]);
        let pw_inv = self.p[w].inverse().expect("chart maps are invertible");
        let c = pw_inv.mul(x).mul(&self.p[v]);
        if r != rw {
            for u in 0..6 {
                if self.root[u] == rw {
                    self.root[u] = r;
                    self.p[u] = self.p[u].mul(&c);
                }
            }
            let moved = self.fixed[rw].take();
            return Ok(match moved {
                Some(t) => {
                    let c_inv = c.inverse().expect("link blocks are invertible");
                    // ℓ_r ∥ C⁻¹ t, expressed at weight r itself (P_r = I)
                    let s = c_inv.apply(&t);
                    self.fix(r, &s).into_iter().collect()
                }
                None => vec![self],
            });
        }
        if c.is_scalar().is_some() {
            return Ok(vec![self]);
        }
        if let Some(t) = &self.fixed[r] {
            let ok = parallel(&c.apply(t), t);
            return Ok(if ok { vec![self] } else { vec![] });
        }
        let mut out = Vec::new();
        for e in eigenlines(&c)? {
            if let Some(ch) = self.clone().fix(r, &e) {
                out.push(ch);
            }
        }
        Ok(out)
    }
}

fn run(chart: Chart, cons: &[Constraint], out: &mut Vec<Chart>) -> Result<(), Error> {
    let Some((first, rest)) = cons.split_first() else {
        out.push(chart);
        return Ok(());
    };
    match first {
        Constraint::Fix(v, s) => {
            if let Some(c) = chart.fix(*v, s) {
                run(c, rest, out)?;
            }
        }
        Constraint::Either(v, s, w, t) => {
            if let Some(c) = chart.clone().fix(*v, s) {
                run(c, rest, out)?;
            }
            if let Some(c) = chart.fix(*w, t) {
                run(c, rest, out)?;
            }
        }
        Constraint::Link(v, w, x) => {
            for c in chart.link(*v, *w, x)? {
                run(c, rest, out)?;
            }
        }
    }
    Ok(())
}

/// A one-parameter family `ℓ ↦ N(ℓ)`, `ℓ ∈ ℙ¹`, of submodules.
#[derive(Clone, Debug)]
pub struct Family {
    pub profile: Vec<Slot>,
    /// Weight whose line is the parameter.
    pub root: usize,
    /// Per weight: the map `ℓ ↦ line`, when the line moves with the parameter.
    pub maps: Vec<Option<Matrix>>,
    /// Per weight: a line that stays put.
    pub lines: Vec<Option<Vector>>,
    /// Parameters where the member is a separate point node.
    pub special: Vec<(Vector, usize)>,
    pub generic: Vector,
}

struct Blocks {
    idx: Vec<Vec<usize>>,
    n: usize,
}

impl Blocks {
    fn embed(&self, h: usize, line: &[Q]) -> Vector {
        let mut v = zero_vec(self.n);
        for (k, &i) in self.idx[h].iter().enumerate() {
            v[i] = line[k].clone();
        }
        v
    }

    fn full(&self, h: usize) -> Vec<Vector> {
        self.idx[h].iter().map(|&i| crate::linalg::unit_vec(self.n, i)).collect()
    }

    /// Coordinates in `M[h]` of the part of `s` in weight `h`.
    fn weight_part(&self, s: &Subspace, h: usize) -> Vec<Vector> {
        let wh = Subspace::span(self.n, self.full(h));
        s.intersect(&wh).basis().iter().map(|v| self.idx[h].iter().map(|&i| v[i].clone()).collect()).collect()
    }
}

impl Family {
    fn line_at(&self, h: usize, l: &[Q]) -> Option<Vector> {
        match (&self.maps[h], &self.lines[h]) {
            (Some(p), _) => Some(p.apply(l)),
            (None, Some(t)) => Some(t.clone()),
            _ => None,
        }
    }

    fn member_in(&self, b: &Blocks, l: &[Q]) -> Subspace {
        let mut vs = Vec::new();
        for h in 0..6 {
            match self.profile[h] {
                Slot::Zero => {}
                Slot::Full => vs.extend(b.full(h)),
                Slot::Line => vs.push(b.embed(h, &self.line_at(h, l).expect("line slot"))),
            }
        }
        Subspace::span(b.n, vs)
    }

    fn param_of_in(&self, b: &Blocks, s: &Subspace) -> Option<Vector> {
        let part = b.weight_part(s, self.root);
        if part.len() != 1 {
            return None;
        }
        let l = normalize(&part[0]);
        (self.member_in(b, &l) == *s).then_some(l)
    }

    fn is_special(&self, l: &[Q]) -> bool {
        self.special.iter().any(|(s, _)| parallel(s, l))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeRef {
    Point(usize),
    Family(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub upper: String,
    pub lower: String,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    pub module: Representation,
    pub points: Vec<Subspace>,
    pub families: Vec<Family>,
    /// Nodes in display order with their ids.
    pub nodes: Vec<(String, NodeRef)>,
    pub edges: Vec<Edge>,
    /// Closure at three parameters, hence for every parameter.
    pub families_symbolic: bool,
    /// Relations and labels agree at the sampled parameters.
    pub families_sampled: bool,
    pub samples: usize,
    blocks: Blocks,
}

impl Clone for Blocks {
    fn clone(&self) -> Self {
        Blocks { idx: self.idx.clone(), n: self.n }
    }
}

impl std::fmt::Debug for Blocks {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Blocks({})", self.n)
    }
}

fn profiles(dims: &[usize]) -> Vec<Vec<Slot>> {
    let mut out: Vec<Vec<Slot>> = vec![vec![]];
    for &d in dims {
        let opts: &[Slot] = match d {
            0 => &[Slot::Zero],
            1 => &[Slot::Zero, Slot::Full],
            _ => &[Slot::Zero, Slot::Line, Slot::Full],
        };
        out = out
            .into_iter()
            .flat_map(|p| {
                opts.iter().map(move |&o| {
                    let mut p = p.clone();
                    p.push(o);
                    p
                })
            })
            .collect();
    }
    out
}

/// Closure constraints for a profile, or `None` if it is infeasible outright.
fn constraints(m: &Representation, b: &Blocks, prof: &[Slot]) -> Option<Vec<Constraint>> {
    let grp = SymGroup::new(3);
    let mut out = Vec::new();
    for k in 0..3 {
        for h in 0..6 {
            let h2 = grp.mul(grp.trans_elem(k), h);
            if b.idx[h].is_empty() || b.idx[h2].is_empty() {
                continue;
            }
            let x = m.x[k].block(&b.idx[h2], &b.idx[h]);
            let r = x.rank();
            match (prof[h], prof[h2]) {
                (Slot::Zero, _) | (_, Slot::Full) => {}
                (_, _) if r == 0 => {}
                (Slot::Full, Slot::Zero) => return None,
                (Slot::Full, Slot::Line) => {
                    if r == 2 {
                        return None;
                    }
                    out.push(Constraint::Fix(h2, x.image().basis()[0].clone()));
                }
                (Slot::Line, Slot::Zero) => {
                    let ker = x.kernel();
                    if ker.len() != 1 {
                        return None;
                    }
                    out.push(Constraint::Fix(h, ker[0].clone()));
                }
                (Slot::Line, Slot::Line) => {
                    if r == 2 {
                        out.push(Constraint::Link(h, h2, x));
                    } else {
                        out.push(Constraint::Either(h, x.kernel()[0].clone(), h2, x.image().basis()[0].clone()));
                    }
                }
            }
        }
    }
    // fixings first keeps the branching small
    out.sort_by_key(|c| match c {
        Constraint::Fix(..) => 0,
        Constraint::Link(..) => 1,
        Constraint::Either(..) => 2,
    });
    Some(out)
}

fn chart_to_node(prof: &[Slot], ch: &Chart, b: &Blocks) -> Result<Result<Subspace, Family>, Error> {
    let free: Vec<usize> =
        (0..6).filter(|&h| prof[h] == Slot::Line && ch.root[h] == h && ch.fixed[h].is_none()).collect();
    if free.len() > 1 {
        return Err(Error::Unsupported("a submodule family with more than one parameter".into()));
    }
    let mut maps = vec![None; 6];
    let mut lines = vec![None; 6];
    for h in 0..6 {
        if prof[h] != Slot::Line {
            continue;
        }
        let r = ch.root[h];
        match &ch.fixed[r] {
            Some(t) => lines[h] = Some(normalize(&ch.p[h].apply(t))),
            None => maps[h] = Some(ch.p[h].clone()),
        }
    }
    let fam = Family {
        profile: prof.to_vec(),
        root: free.first().copied().unwrap_or(0),
        maps,
        lines,
        special: Vec::new(),
        generic: vec![Q::one(), Q::zero()],
    };
    if free.is_empty() {
        Ok(Ok(fam.member_in(b, &[])))
    } else {
        Ok(Err(fam))
    }
}

const GENERIC_CANDIDATES: [[i64; 2]; 8] = [[3, 7], [2, -5], [5, 11], [7, -3], [4, 13], [11, 6], [1, 17], [13, -19]];

impl SubmoduleLattice {
    /// Enumerates every submodule of `m` and labels covering pairs by the simples.
    pub fn compute(m: &Representation, simples: &[Representation], seed: u64) -> Result<SubmoduleLattice, Error> {
        let idx: Vec<Vec<usize>> = (0..6).map(|h| m.weight_indices(h)).collect();
        if idx.iter().any(|v| v.len() > 2) {
            return Err(Error::Unsupported(format!("{}: a weight space has dimension above two", m.label)));
        }
        let b = Blocks { idx, n: m.dim() };
        let dims: Vec<usize> = b.idx.iter().map(|v| v.len()).collect();
        let mut points: Vec<Subspace> = Vec::new();
        let mut families: Vec<Family> = Vec::new();
        for prof in profiles(&dims) {
            let Some(cons) = constraints(m, &b, &prof) else { continue };
            let mut charts = Vec::new();
            run(Chart::new(), &cons, &mut charts)?;
            for ch in charts {
                match chart_to_node(&prof, &ch, &b)? {
                    Ok(s) => {
                        if !points.contains(&s) {
                            points.push(s);
                        }
                    }
                    Err(f) => {
                        let dup = families.iter().any(|g| {
                            g.profile == f.profile
                                && [[1, 0], [0, 1], [1, 1]].iter().all(|l| {
                                    let l: Vector = l.iter().map(|&x| q(x)).collect();
                                    g.param_of_in(&b, &f.member_in(&b, &l)).is_some()
                                })
                        });
                        if !dup {
                            families.push(f);
                        }
                    }
                }
            }
        }
        // rank-one branches also yield single members of families
        points.retain(|s| !families.iter().any(|f| f.param_of_in(&b, s).is_some()));
        for s in &points {
            if !m.is_submodule(s) {
                return Err(Error::Verification(format!("{}: solver produced a non-submodule", m.label)));
            }
        }
        let families_symbolic = families.iter().all(|f| {
            [[1, 0], [0, 1], [1, 1]].iter().all(|l| {
                let l: Vector = l.iter().map(|&x| q(x)).collect();
                m.is_submodule(&f.member_in(&b, &l))
            })
        });
        let mut lat = SubmoduleLattice {
            module: m.clone(),
            points,
            families,
            nodes: Vec::new(),
            edges: Vec::new(),
            families_symbolic,
            families_sampled: true,
            samples: 0,
            blocks: b,
        };
        lat.promote_special_points();
        lat.order_nodes();
        lat.edges = lat.covering_edges(simples, None)?;
        lat.check_samples(simples, seed)?;
        Ok(lat)
    }

    pub fn member(&self, f: usize, l: &[Q]) -> Subspace {
        self.families[f].member_in(&self.blocks, l)
    }

    pub fn param_of(&self, f: usize, s: &Subspace) -> Option<Vector> {
        self.families[f].param_of_in(&self.blocks, s)
    }

    fn signature(&self, x: &Subspace) -> Vec<(bool, bool)> {
        self.points.iter().map(|s| (x.contains_space(s), s.contains_space(x))).collect()
    }

    fn candidates(&self, fi: usize) -> Vec<Vector> {
        let f = &self.families[fi];
        let mut out: Vec<Vector> = Vec::new();
        let mut push = |v: Vector| {
            let v = normalize(&v);
            if !out.iter().any(|w| parallel(w, &v)) {
                out.push(v);
            }
        };
        for h in 0..6 {
            let Some(p) = &f.maps[h] else { continue };
            let p_inv = p.inverse().expect("family maps are invertible");
            for s in &self.points {
                let part = self.blocks.weight_part(s, h);
                if part.len() == 1 {
                    push(p_inv.apply(&part[0]));
                }
            }
            for (gi, g) in self.families.iter().enumerate() {
                if gi != fi {
                    if let Some(t) = &g.lines[h] {
                        push(p_inv.apply(t));
                    }
                }
            }
        }
        out
    }

    fn pick_generic(cands: &[Vector]) -> Vector {
        GENERIC_CANDIDATES
            .iter()
            .map(|l| vec![q(l[0]), q(l[1])])
            .find(|l| !cands.iter().any(|c| parallel(c, l)))
            .expect("finitely many special parameters")
    }

    /// Parameters whose member relates differently to the point nodes become point nodes.
    fn promote_special_points(&mut self) {
        loop {
            let mut grew = false;
            for fi in 0..self.families.len() {
                let cands = self.candidates(fi);
                let generic = Self::pick_generic(&cands);
                self.families[fi].generic = generic.clone();
                let gen_sig = self.signature(&self.member(fi, &generic));
                for c in cands {
                    if self.families[fi].is_special(&c) {
                        continue;
                    }
                    let x = self.member(fi, &c);
                    if self.signature(&x) != gen_sig {
                        let pos = match self.points.iter().position(|s| *s == x) {
                            Some(p) => p,
                            None => {
                                self.points.push(x);
                                grew = true;
                                self.points.len() - 1
                            }
                        };
                        self.families[fi].special.push((c, pos));
                    }
                }
            }
            if !grew {
                break;
            }
        }
    }

    fn rep(&self, n: NodeRef, at: Option<&Vector>) -> Subspace {
        match n {
            NodeRef::Point(i) => self.points[i].clone(),
            NodeRef::Family(f) => self.member(f, at.unwrap_or(&self.families[f].generic)),
        }
    }

    fn order_nodes(&mut self) {
        let mut nodes: Vec<NodeRef> = (0..self.points.len()).map(NodeRef::Point).collect();
        nodes.extend((0..self.families.len()).map(NodeRef::Family));
        let key = |n: &NodeRef| {
            let s = self.rep(*n, None);
            let kind = matches!(n, NodeRef::Family(_)) as u8;
            let basis: Vec<String> = s.basis().iter().map(|v| render_vector(&self.module, v)).collect();
            (s.dim(), kind, basis)
        };
        nodes.sort_by_key(key);
        self.nodes = nodes.into_iter().enumerate().map(|(i, n)| (format!("n{i}"), n)).collect();
    }

    /// Representatives `(lower, upper)` when `a ≤ b` generically, with `fam_at` fixing a family parameter.
    fn relation(&self, a: NodeRef, b: NodeRef, fam_at: Option<(usize, &Vector)>) -> Option<(Subspace, Subspace)> {
        let at = |n: NodeRef| match (n, fam_at) {
            (NodeRef::Family(f), Some((g, l))) if f == g => Some(l.clone()),
            (NodeRef::Family(f), _) => Some(self.families[f].generic.clone()),
            _ => None,
        };
        let x = self.rep(a, at(a).as_ref());
        match b {
            NodeRef::Point(_) => {
                let y = self.rep(b, None);
                y.contains_space(&x).then_some((x, y))
            }
            NodeRef::Family(g) => {
                if let Some((fg, l)) = fam_at {
                    if fg == g {
                        let y = self.member(g, l);
                        return y.contains_space(&x).then_some((x, y));
                    }
                }
                let fam = &self.families[g];
                let mut param: Option<Vector> = None;
                for h in 0..6 {
                    let Some(p) = &fam.maps[h] else { continue };
                    let part = self.blocks.weight_part(&x, h);
                    match part.len() {
                        0 => {}
                        1 => {
                            let l = normalize(&p.inverse()?.apply(&part[0]));
                            match &param {
                                Some(prev) if !parallel(prev, &l) => return None,
                                _ => param = Some(l),
                            }
                        }
                        _ => return None,
                    }
                }
                let l = param.unwrap_or_else(|| fam.generic.clone());
                if fam.is_special(&l) {
                    return None;
                }
                let y = self.member(g, &l);
                y.contains_space(&x).then_some((x, y))
            }
        }
    }

    fn covering_edges(&self, simples: &[Representation], fam_at: Option<(usize, &Vector)>) -> Result<Vec<Edge>, Error> {
        let n = self.nodes.len();
        let mut less = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    less[i][j] = self.relation(self.nodes[i].1, self.nodes[j].1, fam_at).is_some();
                }
            }
        }
        let mut edges = Vec::new();
        for j in 0..n {
            for i in 0..n {
                if !less[i][j] || (0..n).any(|k| less[i][k] && less[k][j]) {
                    continue;
                }
                let (lo, up) = self.relation(self.nodes[i].1, self.nodes[j].1, fam_at).expect("related");
                edges.push(Edge {
                    upper: self.nodes[j].0.clone(),
                    lower: self.nodes[i].0.clone(),
                    label: self.label(&lo, &up, simples)?,
                });
            }
        }
        edges.sort_by(|a, b| (&a.upper, &a.lower).cmp(&(&b.upper, &b.lower)));
        Ok(edges)
    }

    fn label(&self, lower: &Subspace, upper: &Subspace, simples: &[Representation]) -> Result<String, Error> {
        let sq = subquotient(&self.module, upper, lower)?;
        Ok(identify(&sq, simples).map(|i| simples[i].label.clone()).unwrap_or_else(|| "?".into()))
    }

    fn check_samples(&mut self, simples: &[Representation], seed: u64) -> Result<(), Error> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ok = true;
        let mut count = 0;
        for fi in 0..self.families.len() {
            let gen_sig = self.signature(&self.member(fi, &self.families[fi].generic.clone()));
            let cands = self.candidates(fi);
            let mut done = 0;
            while done < 3 {
                let (l, m) = sample_point(&mut rng);
                let p = normalize(&[l, m]);
                if cands.iter().any(|c| parallel(c, &p)) || self.families[fi].is_special(&p) {
                    continue;
                }
                let x = self.member(fi, &p);
                ok &= self.module.is_submodule(&x) && self.signature(&x) == gen_sig;
                ok &= self.covering_edges(simples, Some((fi, &p)))? == self.edges;
                done += 1;
                count += 1;
            }
        }
        self.families_sampled = ok;
        self.samples = count;
        Ok(())
    }

    pub fn node_id(&self, n: NodeRef) -> &str {
        &self.nodes.iter().find(|x| x.1 == n).expect("known node").0
    }

    /// Id of the point node equal to `s`, or of the family containing it generically.
    pub fn locate(&self, s: &Subspace) -> Option<String> {
        if let Some(i) = self.points.iter().position(|p| p == s) {
            return Some(self.node_id(NodeRef::Point(i)).to_string());
        }
        (0..self.families.len())
            .find(|&f| self.param_of(f, s).is_some_and(|l| !self.families[f].is_special(&l)))
            .map(|f| self.node_id(NodeRef::Family(f)).to_string())
    }

    pub fn family_weight(&self, f: usize) -> usize {
        self.families[f].root
    }

    /// Lines in weight `h` at the special parameters of family `f`.
    pub fn special_lines(&self, f: usize, h: usize) -> Vec<Vector> {
        let fam = &self.families[f];
        fam.special
            .iter()
            .filter_map(|(l, _)| fam.line_at(h, l))
            .map(|v| normalize(&self.blocks.embed(h, &v)))
            .collect()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn certificate(&self, parameter: &[String]) -> LatticeCertificate {
        let grp = SymGroup::new(3);
        let nodes = self
            .nodes
            .iter()
            .map(|(id, n)| {
                let s = self.rep(*n, None);
                let wd: Vec<usize> = (0..6).map(|h| self.blocks.weight_part(&s, h).len()).collect();
                let family = match n {
                    NodeRef::Point(_) => None,
                    NodeRef::Family(f) => Some(self.family_json(*f)),
                };
                NodeJson {
                    id: id.clone(),
                    kind: if family.is_some() { "family" } else { "point" },
                    dimension: s.dim(),
                    weight_dimensions: (0..6).map(|h| (grp.name(h), wd[h])).collect(),
                    basis: match n {
                        NodeRef::Point(_) => s.basis().iter().map(|v| render_vector(&self.module, v)).collect(),
                        NodeRef::Family(_) => Vec::new(),
                    },
                    family,
                }
            })
            .collect();
        LatticeCertificate {
            schema: SCHEMA_ID,
            module: self.module.label.clone(),
            parameter: parameter.to_vec(),
            nodes,
            edges: self.edges.clone(),
            families_symbolic: self.families_symbolic,
            families_sampled: self.families_sampled,
            samples: self.samples,
        }
    }

    fn family_json(&self, f: usize) -> FamilyJson {
        let grp = SymGroup::new(3);
        let fam = &self.families[f];
        let mut member = Vec::new();
        for h in 0..6 {
            match fam.profile[h] {
                Slot::Zero => {}
                Slot::Full => member.extend(self.blocks.full(h).iter().map(|v| render_vector(&self.module, v))),
                Slot::Line => match (&fam.maps[h], &fam.lines[h]) {
                    (Some(p), _) => member.push(self.render_linear(h, p)),
                    (None, Some(t)) => member.push(render_vector(&self.module, &self.blocks.embed(h, t))),
                    _ => {}
                },
            }
        }
        FamilyJson {
            parameter_weight: grp.name(fam.root),
            member,
            excluded: fam
                .special
                .iter()
                .map(|(l, p)| ExcludedJson {
                    parameter: format!("({}:{})", fmt_q(&l[0]), fmt_q(&l[1])),
                    node: self.node_id(NodeRef::Point(*p)).to_string(),
                })
                .collect(),
        }
    }

    /// `P (λ, μ)` as a combination of the basis names of weight `h`.
    fn render_linear(&self, h: usize, p: &Matrix) -> String {
        let mut parts = Vec::new();
        for (k, &i) in self.blocks.idx[h].iter().enumerate() {
            let (a, b) = (p.get(k, 0), p.get(k, 1));
            let coef = match (a.is_zero(), b.is_zero()) {
                (true, true) => continue,
                (false, true) => format!("{}λ", coef_str(a)),
                (true, false) => format!("{}μ", coef_str(b)),
                (false, false) => format!("({}λ + {}μ)", coef_str(a), coef_str(b)),
            };
            parts.push(format!("{coef}·{}", self.module.names[i]));
        }
        parts.join(" + ")
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("// schema: {DOT_SCHEMA_ID}\ndigraph lattice {{\n  rankdir=BT;\n");
        for (id, n) in &self.nodes {
            let r = self.rep(*n, None);
            let kind = if matches!(n, NodeRef::Family(_)) { " (P1 family)" } else { "" };
            s.push_str(&format!("  {id} [label=\"{id}: dim {}{kind}\"];\n", r.dim()));
        }
        for e in &self.edges {
            s.push_str(&format!("  {} -> {} [label=\"{}\"];\n", e.lower, e.upper, e.label));
        }
        s.push_str("}\n");
        s
    }
}

fn coef_str(c: &Q) -> String {
    if c.is_one() {
        String::new()
    } else if (-c).is_one() {
        "-".into()
    } else {
        fmt_q(c)
    }
}

/// `upper / lower` as a module, for `lower ⊆ upper` submodules of `m`.
pub fn subquotient(m: &Representation, upper: &Subspace, lower: &Subspace) -> Result<Representation, Error> {
    let r = m.restrict(upper, "upper")?;
    let basis: Vec<Vector> = m.weight_basis(upper).into_iter().map(|(_, v)| v).collect();
    let a = Matrix::from_cols(m.dim(), &basis);
    let lows: Vec<Vector> = lower
        .basis()
        .iter()
        .map(|v| solve(&a, v).ok_or_else(|| Error::Precondition("lower node is not inside the upper".into())))
        .collect::<Result<_, _>>()?;
    r.quotient(&Subspace::span(r.dim(), lows), "quotient")
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeCertificate {
    #[serde(rename = "$schema")]
    pub schema: &'static str,
    pub module: String,
    pub parameter: Vec<String>,
    pub nodes: Vec<NodeJson>,
    pub edges: Vec<Edge>,
    pub families_symbolic: bool,
    pub families_sampled: bool,
    pub samples: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeJson {
    pub id: String,
    pub kind: &'static str,
    pub dimension: usize,
    pub weight_dimensions: Vec<(String, usize)>,
    pub basis: Vec<String>,
    pub family: Option<FamilyJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyJson {
    pub parameter_weight: String,
    /// Spanning set of the member at parameter `(λ:μ)`.
    pub member: Vec<String>,
    pub excluded: Vec<ExcludedJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExcludedJson {
    pub parameter: String,
    pub node: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenlines_of_diagonalizable() {
        let e = eigenlines(&mat2(&[[2, 1], [0, 3]])).unwrap();
        assert_eq!(e.len(), 2);
        assert!(eigenlines(&mat2(&[[0, 1], [2, 0]])).is_err());
        assert_eq!(eigenlines(&mat2(&[[1, 1], [0, 1]])).unwrap().len(), 1);
    }

    #[test]
    fn profile_count() {
        assert_eq!(profiles(&[2, 2, 1, 0]).len(), 18);
    }
}
