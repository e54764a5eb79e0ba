//! `Ext¹` between simples, the separated quiver of `𝒜/J²`, and the representation-type verdict.
//!
//! `Ext¹(S, T)` is computed twice:
//! 1. as derivations `d: 𝒜 → Hom_k(S, T)` given on the generators `x12, x13, x23, δ_g`,
//!    constrained by every relator, every completed rewriting rule and the relations of `k^G`,
//!    modulo inner derivations;
//! 2. from `0 → rad P → P → S → 0` with `P = 𝒜δ_g` the projective cover of `S`.

pub mod graph;

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::linalg::{is_zero_vec, nullspace, unit_vec, zero_vec, Matrix, Subspace, Vector};
use crate::presentation::table::StructureTable;
use crate::presentation::{relations, SmashPoly};
use crate::repcore::simples::SimpleClassification;
use crate::repcore::{
    hom_space, identify, is_indecomposable, is_isomorphic, module_radical, module_socle, render_vector, verma,
    w_ke_l, w_l_ke, Representation,
};
use crate::scalar::Q;
use crate::symgroup::{ParamVector, RegimeTag, SymGroup};
use crate::Error;
use graph::{classify_connected, GraphClass, MultiGraph};

pub const VERDICT_SCHEMA_ID: &str = "hopf72/ext-verdict/v1";
pub const CATALOG_SCHEMA_ID: &str = "hopf72/ext-catalog/v1";
pub const QUIVER_DOT_SCHEMA_ID: &str = "hopf72/quiver-dot/v1";

/// Generator values of a derivation: `d(x_k)` for `k < 3`, then `d(δ_g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub gens: Vec<Matrix>,
}

#[derive(Clone, Debug)]
pub struct Ext1 {
    pub dim: usize,
    /// Representatives of a basis of `Ext¹`, normalized to vanish on `k^G`.
    pub classes: Vec<Derivation>,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
}

struct Ops {
    t: Vec<Matrix>,
    s: Vec<Matrix>,
    dt: Vec<Matrix>,
    ds: Vec<Matrix>,
}

impl Ops {
    fn new(s: &Representation, t: &Representation) -> Self {
        Ops {
            t: t.x.clone(),
            s: s.x.clone(),
            dt: (0..6).map(|g| t.delta(g)).collect(),
            ds: (0..6).map(|g| s.delta(g)).collect(),
        }
    }

    fn word(ms: &[Matrix], n: usize, w: &[u8]) -> Matrix {
        let mut m = Matrix::identity(n);
        for &l in w {
            m = m.mul(&ms[l as usize]);
        }
        m
    }

    fn fn_op(deltas: &[Matrix], phi: &[Q]) -> Matrix {
        let mut m = Matrix::zeros(deltas[0].rows, deltas[0].cols);
        for (g, c) in phi.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled_assign(c, &deltas[g]);
            }
        }
        m
    }

    /// `d(w·φ) = d(w) ρS(φ) + ρT(w) d(φ)`, with `d(w)` by the Leibniz rule.
    fn d_term(&self, d: &Derivation, w: &[u8], phi: &[Q]) -> Matrix {
        let (nt, ns) = (self.dt[0].rows, self.ds[0].rows);
        let mut dw = Matrix::zeros(nt, ns);
        for i in 0..w.len() {
            let left = Self::word(&self.t, nt, &w[..i]);
            let right = Self::word(&self.s, ns, &w[i + 1..]);
            dw = dw.add(&left.mul(&d.gens[w[i] as usize]).mul(&right));
        }
        let mut out = dw.mul(&Self::fn_op(&self.ds, phi));
        let mut dphi = Matrix::zeros(nt, ns);
        for (g, c) in phi.iter().enumerate() {
            if !c.is_zero() {
                dphi.add_scaled_assign(c, &d.gens[3 + g]);
            }
        }
        out = out.add(&Self::word(&self.t, nt, w).mul(&dphi));
        out
    }

    fn d_poly(&self, d: &Derivation, p: &SmashPoly) -> Matrix {
        let (nt, ns) = (self.dt[0].rows, self.ds[0].rows);
        let mut out = Matrix::zeros(nt, ns);
        for (w, phi) in &p.terms {
            out = out.add(&self.d_term(d, w, phi));
        }
        out
    }
}

/// Every constraint a derivation must satisfy, each a `dim T × dim S` matrix that must vanish.
fn constraints(table: &StructureTable, ops: &Ops, polys: &[SmashPoly], d: &Derivation) -> Vec<Matrix> {
    let grp = &table.grp;
    let mut out: Vec<Matrix> = polys.iter().map(|p| ops.d_poly(d, p)).collect();
    let e = &d.gens[3..];
    for g in 0..6 {
        for h in 0..6 {
            let mut m = e[g].mul(&ops.ds[h]).add(&ops.dt[g].mul(&e[h]));
            if g == h {
                m = m.sub(&e[g]);
            }
            out.push(m);
        }
    }
    let mut sum = e[0].clone();
    for m in &e[1..] {
        sum = sum.add(m);
    }
    out.push(sum);
    for k in 0..3 {
        for g in 0..6 {
            let tg = grp.mul(grp.trans_elem(k), g);
            let lhs = d.gens[k].mul(&ops.ds[g]).add(&ops.t[k].mul(&e[g]));
            let rhs = e[tg].mul(&ops.s[k]).add(&ops.dt[tg].mul(&d.gens[k]));
            out.push(lhs.sub(&rhs));
        }
    }
    out
}

fn flatten(ms: &[Matrix]) -> Vector {
    let mut v = Vec::new();
    for m in ms {
        for r in 0..m.rows {
            v.extend_from_slice(m.row(r));
        }
    }
    v
}

fn unflatten(v: &[Q], nt: usize, ns: usize) -> Derivation {
    let gens = (0..9)
        .map(|k| {
            let mut m = Matrix::zeros(nt, ns);
            for r in 0..nt {
                for c in 0..ns {
                    m.set(r, c, v[k * nt * ns + r * ns + c].clone());
                }
            }
            m
        })
        .collect();
    Derivation { gens }
}

fn inner(ops: &Ops, f: &Matrix) -> Derivation {
    let mut gens: Vec<Matrix> = (0..3).map(|k| ops.t[k].mul(f).sub(&f.mul(&ops.s[k]))).collect();
    gens.extend((0..6).map(|g| ops.dt[g].mul(f).sub(&f.mul(&ops.ds[g]))));
    Derivation { gens }
}

/// Relators and completed rules (`lhs − rhs`) as elements of the free smash product.
fn defining_polys(table: &StructureTable) -> Result<Vec<SmashPoly>, Error> {
    let mut polys: Vec<SmashPoly> = relations(&table.a, 3, table.variant)?.into_iter().map(|r| r.poly).collect();
    for rule in &table.system.rules {
        let mut p = SmashPoly::word(&table.grp, rule.lhs.clone(), Q::from_integer(1.into()));
        p.sub(&rule.rhs);
        polys.push(p);
    }
    Ok(polys)
}

/// `Ext¹(S, T)` by derivations on generators, modulo inner derivations.
pub fn ext1_cocycle(table: &StructureTable, s: &Representation, t: &Representation) -> Result<Ext1, Error> {
    let (nt, ns) = (t.dim(), s.dim());
    let block = nt * ns;
    let nu = 9 * block;
    let ops = Ops::new(s, t);
    let polys = defining_polys(table)?;
    let mut cols: Vec<Vector> = Vec::with_capacity(nu);
    for u in 0..nu {
        let d = unflatten(&unit_vec(nu, u), nt, ns);
        cols.push(flatten(&constraints(table, &ops, &polys, &d)));
    }
    let m = cols.first().map(|c| c.len()).unwrap_or(0);
    let rows: Vec<Vector> = (0..m).map(|i| cols.iter().map(|c| c[i].clone()).collect()).filter(|r: &Vector| !is_zero_vec(r)).collect();
    let z = Subspace::span(nu, nullspace(&rows, nu));
    let b = Subspace::span(
        nu,
        (0..block).map(|i| {
            let mut f = Matrix::zeros(nt, ns);
            f.set(i / ns, i % ns, Q::from_integer(1.into()));
            flatten(&inner(&ops, &f).gens)
        }),
    );
    if !z.contains_space(&b) {
        return Err(Error::Verification("an inner derivation violates the cocycle constraints".into()));
    }
    let mut classes = Vec::new();
    for v in b.complement_in(&z) {
        let d = unflatten(&v, nt, ns);
        // subtract the inner derivation that removes d on k^G
        let mut f = Matrix::zeros(nt, ns);
        for r in 0..nt {
            for c in 0..ns {
                if t.weights[r] != s.weights[c] {
                    f.set(r, c, d.gens[3 + t.weights[r]].get(r, c).clone());
                }
            }
        }
        let fi = inner(&ops, &f);
        let gens: Vec<Matrix> = d.gens.iter().zip(&fi.gens).map(|(a, b)| a.sub(b)).collect();
        if gens[3..].iter().any(|m| !m.is_zero()) {
            return Err(Error::Verification("cocycle could not be normalized on k^G".into()));
        }
        classes.push(Derivation { gens });
    }
    Ok(Ext1 { dim: z.dim() - b.dim(), classes, cocycle_dim: z.dim(), coboundary_dim: b.dim() })
}

/// The extension `0 → T → E → S → 0` of a class normalized on `k^G`; basis of `T` first.
pub fn extension_module(s: &Representation, t: &Representation, d: &Derivation, label: &str) -> Representation {
    let (nt, ns) = (t.dim(), s.dim());
    let n = nt + ns;
    let x = (0..3)
        .map(|k| {
            let mut m = Matrix::zeros(n, n);
            for r in 0..nt {
                for c in 0..nt {
                    m.set(r, c, t.x[k].get(r, c).clone());
                }
                for c in 0..ns {
                    m.set(r, nt + c, d.gens[k].get(r, c).clone());
                }
            }
            for r in 0..ns {
                for c in 0..ns {
                    m.set(nt + r, nt + c, s.x[k].get(r, c).clone());
                }
            }
            m
        })
        .collect();
    let weights = t.weights.iter().chain(&s.weights).copied().collect();
    let mut e = Representation::new(label, weights, x);
    e.names = t.names.iter().map(|x| format!("{}:{x}", t.label)).chain(s.names.iter().map(|x| format!("{}:{x}", s.label))).collect();
    e
}

/// Index `g` with `top(𝒜δ_g) ≅ s`.
fn projective_cover(table: &StructureTable, jrad: &Subspace, s: &Representation) -> Result<usize, Error> {
    (0..6)
        .find(|&g| {
            let m = verma(table, g);
            let rad = module_radical(table, jrad, &m);
            m.dim() - rad.dim() == s.dim() && m.quotient(&rad, "top").map(|q| is_isomorphic(&q, s, 11)).unwrap_or(false)
        })
        .ok_or_else(|| Error::Verification(format!("no 𝒜δ_g has top {}", s.label)))
}

/// Index `g` with `soc(𝒜δ_g) ≅ t`.
fn injective_hull(table: &StructureTable, jrad: &Subspace, t: &Representation) -> Result<usize, Error> {
    (0..6)
        .find(|&g| {
            let m = verma(table, g);
            let soc = module_socle(table, jrad, &m);
            soc.dim() == t.dim() && m.restrict(&soc, "soc").map(|q| is_isomorphic(&q, t, 13)).unwrap_or(false)
        })
        .ok_or_else(|| Error::Verification(format!("no 𝒜δ_g has socle {}", t.label)))
}

/// `dim Ext¹(S, T) = dim Hom(rad P, T) − dim Hom(P, T) + dim Hom(S, T)`.
pub fn ext1_resolution(
    table: &StructureTable,
    jrad: &Subspace,
    s: &Representation,
    t: &Representation,
) -> Result<usize, Error> {
    let g = projective_cover(table, jrad, s)?;
    let p = verma(table, g);
    let omega = p.restrict(&module_radical(table, jrad, &p), "rad P")?;
    let v = hom_space(&omega, t).len() + hom_space(s, t).len();
    v.checked_sub(hom_space(&p, t).len())
        .ok_or_else(|| Error::Verification("negative Ext dimension from the resolution".into()))
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtMatrix {
    pub regime: RegimeTag,
    pub simples: Vec<String>,
    pub dimensions: Vec<usize>,
    /// `entries[i][j] = dim Ext¹(S_i, S_j)`.
    pub entries: Vec<Vec<usize>>,
    pub methods_agree: bool,
}

/// Both methods on every ordered pair of simples; disagreement is an error.
pub fn ext_matrix(table: &StructureTable, cls: &SimpleClassification) -> Result<ExtMatrix, Error> {
    let n = cls.simples.len();
    let mut entries = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let a = ext1_cocycle(table, &cls.simples[i], &cls.simples[j])?.dim;
            let b = ext1_resolution(table, &cls.radical, &cls.simples[i], &cls.simples[j])?;
            if a != b {
                return Err(Error::Verification(format!(
                    "Ext¹({}, {}): cocycles give {a}, the resolution gives {b}",
                    cls.simples[i].label, cls.simples[j].label
                )));
            }
            entries[i][j] = a;
        }
    }
    Ok(ExtMatrix {
        regime: cls.regime,
        simples: cls.simples.iter().map(|s| s.label.clone()).collect(),
        dimensions: cls.simples.iter().map(|s| s.dim()).collect(),
        entries,
        methods_agree: true,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SeparatedQuiver {
    /// `S_i` then `S_i'`.
    pub vertices: Vec<String>,
    /// `(S_i, S_j', multiplicity)`.
    pub arrows: Vec<(usize, usize, usize)>,
}

impl SeparatedQuiver {
    pub fn new(ext: &ExtMatrix) -> Self {
        let n = ext.simples.len();
        let mut vertices: Vec<String> = ext.simples.clone();
        vertices.extend(ext.simples.iter().map(|s| format!("{s}'")));
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if ext.entries[i][j] > 0 {
                    arrows.push((i, n + j, ext.entries[i][j]));
                }
            }
        }
        SeparatedQuiver { vertices, arrows }
    }

    pub fn underlying(&self) -> MultiGraph {
        let mut g = MultiGraph::new(self.vertices.len());
        for &(a, b, m) in &self.arrows {
            for _ in 0..m {
                g.add_edge(a, b);
            }
        }
        g
    }

    /// Connected components (isolated vertices included) with their class.
    pub fn components(&self) -> Vec<Component> {
        let g = self.underlying();
        g.components()
            .into_iter()
            .map(|vs| Component {
                class: classify_connected(&g.induced(&vs)),
                vertices: vs.iter().map(|&v| self.vertices[v].clone()).collect(),
            })
            .collect()
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("// schema: {QUIVER_DOT_SCHEMA_ID}\ndigraph \"{name}\" {{\n  rankdir=LR;\n");
        for (i, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!("  v{i} [label=\"{v}\"];\n"));
        }
        for &(a, b, m) in &self.arrows {
            s.push_str(&format!("  v{a} -> v{b} [label=\"{m}\"];\n"));
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Component {
    pub vertices: Vec<String>,
    pub class: GraphClass,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    #[serde(rename = "$schema")]
    pub schema: &'static str,
    pub regime: RegimeTag,
    pub ext_matrix: ExtMatrix,
    pub components: Vec<ComponentJson>,
    pub verdict: String,
    pub basis_of_inference: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentJson {
    pub vertices: Vec<String>,
    pub class: String,
}

pub fn verdict(ext: &ExtMatrix) -> Verdict {
    let q = SeparatedQuiver::new(ext);
    let comps = q.components();
    let nontrivial: Vec<&Component> = comps.iter().filter(|c| c.vertices.len() > 1).collect();
    let all_dynkin = comps.iter().all(|c| matches!(c.class, GraphClass::Dynkin(_)));
    let all_tame = comps.iter().all(|c| !matches!(c.class, GraphClass::Neither));
    let classes: Vec<String> = nontrivial.iter().map(|c| c.class.to_string()).collect();
    let mut basis = vec![format!(
        "the separated quiver of 𝒜/J² has components {}",
        if classes.is_empty() { "with no arrows".to_string() } else { classes.join(", ") }
    )];
    basis.push("Gabriel: a radical-square-zero algebra is of finite type iff its separated quiver is a union of Dynkin diagrams, and tame iff it is a union of Dynkin and affine diagrams".into());
    basis.push("every 𝒜/J²-module is an 𝒜-module, so infinite type or wildness of 𝒜/J² passes to 𝒜".into());
    let text = if all_dynkin {
        "proved for 𝒜/J²: finite representation type. inferred for 𝒜: nothing beyond 𝒜/J², since finite type of the quotient does not bound 𝒜".to_string()
    } else if all_tame {
        if ext.regime == RegimeTag::Generic {
            basis.push("the ℙ¹-family W_t of pairwise non-isomorphic indecomposable extensions of L by k_e gives infinitely many indecomposables of 𝒜 directly".into());
        }
        "proved for 𝒜/J²: tame of infinite representation type. inferred for 𝒜: not of finite representation type. open for 𝒜: tame versus wild is not decided by 𝒜/J²".to_string()
    } else {
        "proved for 𝒜/J²: wild. inferred for 𝒜: wild".to_string()
    };
    Verdict {
        schema: VERDICT_SCHEMA_ID,
        regime: ext.regime,
        ext_matrix: ext.clone(),
        components: comps.iter().map(|c| ComponentJson { vertices: c.vertices.clone(), class: c.class.to_string() }).collect(),
        verdict: text,
        basis_of_inference: basis,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Realization {
    pub verma: String,
    /// `𝒜·v` for every displayed `v`: the least-degree weight generators, all spanning the same image.
    pub generators: Vec<String>,
    #[serde(skip)]
    pub image: Subspace,
    pub submodule: bool,
    pub socle_ok: bool,
    pub quotient_ok: bool,
    pub indecomposable: bool,
}

impl Realization {
    pub fn ok(&self) -> bool {
        self.submodule && self.socle_ok && self.quotient_ok && self.indecomposable
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub socle: String,
    pub top: String,
    pub ext_dim: usize,
    /// One realization per basis class; empty when only the split extension exists.
    pub realizations: Vec<Realization>,
    /// Present when `Ext¹ ≥ 2`: the projective line of classes and, if recognized, the named family.
    pub family: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtensionCatalog {
    #[serde(rename = "$schema")]
    pub schema: &'static str,
    pub regime: RegimeTag,
    pub entries: Vec<CatalogEntry>,
}

impl ExtensionCatalog {
    pub fn all_verified(&self) -> bool {
        self.entries.iter().all(|e| e.realizations.len() == e.ext_dim && e.realizations.iter().all(Realization::ok))
    }

    pub fn find(&self, socle: &str, top: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.socle == socle && e.top == top)
    }
}

/// Embeds `e` into `𝒜δ_h` by an injective homomorphism and checks the image.
pub fn realize(
    table: &StructureTable,
    jrad: &Subspace,
    e: &Representation,
    socle: &Representation,
    top: &Representation,
    seed: u64,
) -> Result<Realization, Error> {
    let grp = &table.grp;
    let h = injective_hull(table, jrad, socle)?;
    let m = verma(table, h);
    let homs = hom_space(e, &m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = (0..16)
        .map(|_| {
            let mut f = Matrix::zeros(m.dim(), e.dim());
            for b in &homs {
                f.add_scaled_assign(&Q::from_integer(rng.gen_range(-50i64..=50).into()), b);
            }
            f
        })
        .find(|f| f.rank() == e.dim())
        .ok_or_else(|| Error::Verification(format!("{} does not embed in M_{}", e.label, grp.name(h))))?;
    let image = f.image();
    let sub = m.restrict(&image, "image")?;
    let soc = module_socle(table, jrad, &sub);
    let socle_ok = sub.restrict(&soc, "soc").map(|r| is_isomorphic(&r, socle, 17)).unwrap_or(false);
    let quotient_ok = sub.quotient(&soc, "top").map(|r| is_isomorphic(&r, top, 19)).unwrap_or(false);
    Ok(Realization {
        verma: format!("M_{}", grp.name(h)),
        generators: generators(table, jrad, &m, &image).into_iter().map(|g| format!("𝒜·({g})")).collect(),
        submodule: m.is_submodule(&image),
        image,
        socle_ok,
        quotient_ok,
        indecomposable: is_indecomposable(e),
    })
}

/// Generators of a cyclic submodule with simple top: weight vectors outside the radical,
/// reduced modulo it, of least degree in the Verma basis.
fn generators(table: &StructureTable, jrad: &Subspace, m: &Representation, image: &Subspace) -> Vec<String> {
    let Ok(sub) = m.restrict(image, "image") else { return Vec::new() };
    let basis = m.weight_basis(image);
    let lift = |v: &Vector| -> Vector {
        let mut out = zero_vec(m.dim());
        for (c, (_, b)) in v.iter().zip(&basis) {
            crate::linalg::add_scaled(&mut out, c, b);
        }
        out
    };
    let rad = Subspace::span(m.dim(), module_radical(table, jrad, &sub).basis().iter().map(lift));
    let degree = |v: &Vector| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| table.words[i].len()).max();
    let mut found: Vec<(usize, Vector)> = Vec::new();
    for h in 0..6 {
        let wt = image.intersect(&m.weight_space(h));
        for v in wt.basis() {
            let r = rad.reduce(v.clone());
            if is_zero_vec(&r) || m.spin(&[r.clone()]) != *image {
                continue;
            }
            let lead = r.iter().find(|x| !x.is_zero()).cloned().expect("nonzero");
            found.push((degree(&r).unwrap_or(0), r.iter().map(|x| x / &lead).collect()));
        }
    }
    let least = found.iter().map(|(d, _)| *d).min();
    found.into_iter().filter(|(d, _)| Some(*d) == least).map(|(_, v)| render_vector(m, &v)).collect()
}

/// For every ordered pair of simples: `dim Ext¹(top, socle)` and a verified realization per class.
pub fn extension_catalog(table: &StructureTable, cls: &SimpleClassification, seed: u64) -> Result<ExtensionCatalog, Error> {
    let n = cls.simples.len();
    let mut entries = Vec::new();
    for j in 0..n {
        for i in 0..n {
            let (top, socle) = (&cls.simples[i], &cls.simples[j]);
            let ext = ext1_cocycle(table, top, socle)?;
            if i == j && ext.dim == 0 {
                continue;
            }
            let mut realizations = Vec::new();
            for (c, d) in ext.classes.iter().enumerate() {
                let e = extension_module(top, socle, d, &format!("E{c}"));
                e.check_relations(&table.a, table.variant)?;
                realizations.push(realize(table, &cls.radical, &e, socle, top, seed + c as u64)?);
            }
            let family = if ext.dim >= 2 {
                Some(family_name(table, cls, &ext, top, socle, seed))
            } else {
                None
            };
            entries.push(CatalogEntry {
                socle: socle.label.clone(),
                top: top.label.clone(),
                ext_dim: ext.dim,
                realizations,
                family,
            });
        }
    }
    Ok(ExtensionCatalog { schema: CATALOG_SCHEMA_ID, regime: cls.regime, entries })
}

/// Names the projective line of classes. In the generic regime it is matched against
/// `W_t(L,k_e)` and `W_t(k_e,L)`: three members with distinct `[t12:t13]` must be
/// indecomposable extensions of `top` by `socle` and pairwise non-isomorphic.
fn family_name(
    table: &StructureTable,
    cls: &SimpleClassification,
    ext: &Ext1,
    top: &Representation,
    socle: &Representation,
    seed: u64,
) -> String {
    let line = format!("ℙ¹ of classes in a {}-dimensional Ext¹", ext.dim);
    if cls.regime != RegimeTag::Generic || ext.dim != 2 {
        return line;
    }
    let ts = [[1, 3, -4], [2, 1, -3], [1, -1, 0]].map(|v| ParamVector::from_ints(3, &v).expect("sum zero"));
    let want = (identify(socle, &cls.simples), identify(top, &cls.simples));
    for name in ["W_t(L,k_e)", "W_t(k_e,L)"] {
        let ws: Vec<Representation> = ts
            .iter()
            .filter_map(|t| if name == "W_t(L,k_e)" { w_l_ke(&table.a, t) } else { w_ke_l(&table.a, t) }.ok())
            .collect();
        let shape_ok = ws.len() == 3
            && ws.iter().all(|w| {
                let soc = module_socle(table, &cls.radical, w);
                let s = w.restrict(&soc, "soc").ok().and_then(|s| identify(&s, &cls.simples));
                let q = w.quotient(&soc, "top").ok().and_then(|q| identify(&q, &cls.simples));
                (s, q) == want && is_indecomposable(w)
            });
        let distinct = shape_ok
            && (0..3).all(|i| (0..i).all(|j| !is_isomorphic(&ws[i], &ws[j], seed)));
        if distinct {
            return format!("{line}: the {name} family");
        }
    }
    line
}

/// Helper for the group name of a weight.
pub fn weight_name(g: usize) -> String {
    SymGroup::new(3).name(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Variant;
    use crate::repcore::simples::classify_simples;

    fn setup(a: [i64; 3]) -> (StructureTable, SimpleClassification) {
        let t = StructureTable::build(&ParamVector::from_ints(3, &a).unwrap(), Variant::A, 6).unwrap();
        let c = classify_simples(&t).unwrap();
        (t, c)
    }

    #[test]
    fn generic_ext_matrix() {
        let (t, c) = setup([1, 2, -3]);
        let e = ext_matrix(&t, &c).unwrap();
        assert_eq!(e.entries, vec![vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn subgeneric_ext_matrix() {
        let (t, c) = setup([2, -1, -1]);
        let e = ext_matrix(&t, &c).unwrap();
        assert_eq!(e.entries, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let comps = SeparatedQuiver::new(&e).components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].class, GraphClass::Affine(graph::DiagramName::A(5)));
    }
}
