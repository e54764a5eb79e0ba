//! Command-line front end. Every command returns an [`Output`] carrying a schema id,
//! a JSON document, a text rendering, an optional DOT graph and the list of checks run.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::extquiver::{ext_matrix, extension_catalog, verdict, SeparatedQuiver};
use crate::hopf::deform::deform_report;
use crate::hopf::Coalgebra;
use crate::presentation::crosscheck::{regular_action_crosscheck, verify_identities};
use crate::presentation::rewrite::{RewriteSystem, WordOrder};
use crate::presentation::{relations, StructureTable, Variant};
use crate::repcore::expected::{compare, expected_lattice, published_vermas};
use crate::repcore::lattice::SubmoduleLattice;
use crate::repcore::simples::classify_simples;
use crate::repcore::verma;
use crate::symgroup::{linkage_classes, ParamVector, Perm, Regime, RegimeTag, SymGroup};
use crate::Error;

#[derive(Parser, Debug)]
#[command(name = "hopf72", version, about = "Exact certificates for the 72-dimensional Hopf algebras over the dual of S3")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Complete the relations and export the structure table.
    Build(Common),
    /// Associativity, Hopf axioms, the degree-3 identities and the formula cross-check.
    Verify(Common),
    /// Simple modules, the Jacobson radical and the projective covers.
    Simples(Common),
    /// Submodule lattice of the Verma module M_g.
    Lattice(LatticeArgs),
    /// Integrals of the algebra and its dual.
    Integrals(Common),
    /// Ext matrix, separated quiver, representation-type verdict and extension catalog.
    Quiver(Common),
    /// Aggregated report over every check.
    Report(Common),
    /// Group-likes, skew-primitives, integrals, antipode square and the quasitriangularity witness.
    HopfReport(Common),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Parameter `a` as comma separated rationals `p/q`, ordered a12,a13,a23 (summing to zero).
    #[arg(short = 'a', long = "params", allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, value_enum, default_value = "A", ignore_case = true)]
    pub variant: VariantArg,
    /// Seed for every sampled check.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the output into this directory instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Overlap degree bound for the completion.
    #[arg(long, default_value_t = 6)]
    pub degree_bound: usize,
    #[arg(long)]
    pub json: bool,
    #[arg(long)]
    pub dot: bool,
}

#[derive(Args, Debug, Clone)]
pub struct LatticeArgs {
    #[command(flatten)]
    pub common: Common,
    /// Group element in cycle notation, e.g. "(12)" or "(13)(23)".
    #[arg(short = 'g', allow_hyphen_values = true)]
    pub g: String,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum VariantArg {
    #[value(name = "A")]
    A,
    #[value(name = "K")]
    K,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::A => Variant::A,
            VariantArg::K => Variant::K,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool) -> Self {
        Check { name: name.into(), pass, detail: String::new() }
    }

    fn from_result<T>(name: impl Into<String>, r: Result<T, Error>) -> Self {
        match r {
            Ok(_) => Check::new(name, true),
            Err(e) => Check { name: name.into(), pass: false, detail: e.to_string() },
        }
    }
}

pub struct Output {
    pub name: &'static str,
    pub schema: &'static str,
    pub json: Value,
    pub text: String,
    pub dot: Option<String>,
    pub checks: Vec<Check>,
}

impl Output {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Parses `-a`; the number of entries fixes `n` (3, 6 or 10 entries for n = 3, 4, 5).
pub fn parse_params(s: &str) -> Result<ParamVector, Error> {
    let k = s.split(',').count();
    let n = match k {
        3 => 3,
        6 => 4,
        10 => 5,
        _ => {
            return Err(Error::Param(format!(
                "expected 3, 6 or 10 comma separated rationals (n = 3, 4, 5), got {k}"
            )))
        }
    };
    ParamVector::parse(s, n)
}

/// Parsed parameter plus the normalization of sub-generic parameters.
struct Ctx {
    input: ParamVector,
    regime: Regime,
    table: StructureTable,
}

impl Ctx {
    fn load(c: &Common) -> Result<Ctx, Error> {
        let input = parse_params(&c.a)?;
        if input.n() != 3 {
            return Err(Error::Unsupported(format!("this command needs n = 3 (three entries), got n = {}", input.n())));
        }
        let regime = Regime::classify(&input)?;
        let table = StructureTable::build(&regime.canonical, c.variant.into(), c.degree_bound)?;
        Ok(Ctx { input, regime, table })
    }

    /// Table on the parameter as given, for commands that need no normalization.
    fn load_raw(c: &Common) -> Result<StructureTable, Error> {
        let input = parse_params(&c.a)?;
        StructureTable::build(&input, c.variant.into(), c.degree_bound)
    }

    fn normalization(&self) -> Value {
        let grp = SymGroup::new(3);
        let map: BTreeMap<String, String> =
            grp.elems().iter().map(|p| (p.to_string(), self.regime.original_name(p))).collect();
        json!({
            "input": self.input.to_strings(),
            "canonical": self.regime.canonical.to_strings(),
            "witness": self.regime.normalizer.to_string(),
            "canonical_to_input": map,
        })
    }

    fn normalization_text(&self) -> String {
        if self.regime.normalizer.is_identity() {
            String::new()
        } else {
            format!(
                "normalized {} to {} by conjugation with p = {}; module labels k_g, M_g are given in input coordinates, Verma vectors m_w in canonical ones\n",
                self.input, self.regime.canonical, self.regime.normalizer
            )
        }
    }

    /// Rewrites every module label `k_g` / `M_g` from canonical to input coordinates.
    fn relabel(&self, s: &str) -> String {
        if self.regime.normalizer.is_identity() {
            return s.to_string();
        }
        let mut out = String::with_capacity(s.len());
        let mut rest = s;
        while let Some(i) = rest.find(|c| c == 'k' || c == 'M') {
            out.push_str(&rest[..i]);
            let tail = &rest[i..];
            if tail[1..].starts_with('_') {
                let name = &tail[2..];
                let len = if name.starts_with('e') {
                    1
                } else if name.starts_with('(') {
                    name.find(')').map_or(0, |j| j + 1)
                } else {
                    0
                };
                if let Some(p) = (len > 0).then(|| Perm::parse(&name[..len], 3).ok()).flatten() {
                    out.push_str(&tail[..2]);
                    out.push_str(&self.regime.original_name(&p));
                    rest = &name[len..];
                    continue;
                }
            }
            out.push_str(&tail[..1]);
            rest = &tail[1..];
        }
        out.push_str(rest);
        out
    }

    fn relabel_json(&self, v: &mut Value) {
        match v {
            Value::String(s) => *s = self.relabel(s),
            Value::Array(a) => a.iter_mut().for_each(|x| self.relabel_json(x)),
            Value::Object(o) => o.iter_mut().filter(|(k, _)| *k != "normalization").for_each(|(_, x)| self.relabel_json(x)),
            _ => {}
        }
    }

    /// Output with module labels in the user's coordinates.
    fn finish(&self, mut out: Output) -> Output {
        if !self.regime.normalizer.is_identity() {
            self.relabel_json(&mut out.json);
            out.text = self.relabel(&out.text);
            out.dot = out.dot.map(|d| self.relabel(&d));
            for c in &mut out.checks {
                c.name = self.relabel(&c.name);
            }
        }
        out
    }

    /// Canonical index of a group element given in input coordinates.
    fn to_canonical(&self, g: &Perm) -> usize {
        let p = &self.regime.normalizer;
        SymGroup::new(3).index_of(&p.compose(g).compose(&p.inverse()))
    }
}

fn require_variant_a(c: &Common, cmd: &str) -> Result<(), Error> {
    if matches!(c.variant, VariantArg::K) {
        return Err(Error::Unsupported(format!("{cmd} is defined for variant A only")));
    }
    Ok(())
}

pub fn cmd_build(c: &Common) -> Result<Output, Error> {
    let a = parse_params(&c.a)?;
    if a.n() != 3 {
        return build_exploration(c, &a);
    }
    let t = StructureTable::build(&a, c.variant.into(), c.degree_bound)?;
    let checks = vec![
        Check::new("dimension 72", t.dim() == 72),
        Check::new("completion resolved every overlap", t.system.complete),
        Check::from_result("relators vanish", t.verify_relators()),
        Check::from_result("unit", t.verify_unit()),
    ];
    let text = format!(
        "# schema {}\nparameter {} variant {:?}\ndimension {}\nrewriting rules:\n  {}\n",
        crate::presentation::table::SCHEMA_ID,
        a,
        t.variant,
        t.dim(),
        t.system.render_rules().join("\n  ")
    );
    Ok(Output {
        name: "build",
        schema: crate::presentation::table::SCHEMA_ID,
        json: serde_json::to_value(t.to_json()).expect("serializable"),
        text,
        dot: None,
        checks,
    })
}

pub const EXPLORATION_SCHEMA_ID: &str = "hopf72/completion/v1";

/// `n ≥ 4`: relations and degree-bounded completion, no dimension claim.
fn build_exploration(c: &Common, a: &ParamVector) -> Result<Output, Error> {
    let grp = SymGroup::new(a.n());
    let rels = relations(a, a.n(), c.variant.into())?;
    let order = WordOrder::deglex((0..grp.transpositions().len() as u8).collect());
    let polys: Vec<_> = rels.iter().map(|r| r.poly.clone()).collect();
    let sys = RewriteSystem::complete(grp.clone(), &polys, order, c.degree_bound)?;
    let counts: Vec<usize> = (0..=c.degree_bound)
        .map(|d| sys.irreducible_words(d).iter().filter(|w| w.len() == d).count())
        .collect();
    let json = json!({
        "$schema": EXPLORATION_SCHEMA_ID,
        "n": a.n(),
        "parameter": a.to_strings(),
        "variant": Variant::from(c.variant),
        "degree_bound": c.degree_bound,
        "relations": rels.iter().map(|r| format!("{}: {}", r.name, r.poly.render(&grp))).collect::<Vec<_>>(),
        "rules": sys.render_rules(),
        "overlaps_skipped": sys.skipped_overlaps,
        "irreducible_words_by_degree": counts,
        "dimension_claim": Value::Null,
    });
    let text = format!(
        "# schema {EXPLORATION_SCHEMA_ID}\nn = {} parameter {}\n{} relations, {} rules after completion up to degree {} ({} overlaps beyond the bound)\nirreducible words by degree: {:?}\nno dimension is claimed for n = {}\n",
        a.n(),
        a,
        rels.len(),
        sys.rules.len(),
        c.degree_bound,
        sys.skipped_overlaps,
        counts,
        a.n()
    );
    Ok(Output { name: "build", schema: EXPLORATION_SCHEMA_ID, json, text, dot: None, checks: Vec::new() })
}

pub const VERIFY_SCHEMA_ID: &str = "hopf72/verify/v1";

pub fn cmd_verify(c: &Common) -> Result<Output, Error> {
    let t = Ctx::load_raw(c)?;
    let mut checks = vec![
        Check::new("dimension 72", t.dim() == 72),
        Check::from_result("associativity over all basis triples", t.verify_associativity()),
        Check::from_result("relators vanish", t.verify_relators()),
        Check::from_result("unit", t.verify_unit()),
    ];
    let mut extra = json!({});
    if t.variant == Variant::A {
        let co = Coalgebra::build(&t)?;
        checks.push(Check::from_result("coassociativity", co.verify_coassociativity()));
        checks.push(Check::from_result("counit", co.verify_counit()));
        checks.push(Check::from_result("antipode", co.verify_antipode()));
        checks.push(Check::from_result("antipode square is conjugation by chi, fourth power identity", co.verify_s2_s4()));
        checks.push(Check::from_result("degree-3 identities", verify_identities(&t)));
        let cx = regular_action_crosscheck(&[&t])?;
        checks.push(Check::new("printed action formulas agree with the rewriting", cx.passes()));
        extra = json!({ "crosscheck": cx });
    }
    let json = json!({
        "$schema": VERIFY_SCHEMA_ID,
        "parameter": t.a.to_strings(),
        "variant": t.variant,
        "checks": checks,
        "details": extra,
    });
    let text = format!("# schema {VERIFY_SCHEMA_ID}\nparameter {}\n{}", t.a, render_checks(&checks));
    Ok(Output { name: "verify", schema: VERIFY_SCHEMA_ID, json, text, dot: None, checks })
}

fn render_checks(checks: &[Check]) -> String {
    let mut s = String::new();
    for c in checks {
        s.push_str(&format!("{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name));
        if !c.detail.is_empty() {
            s.push_str(&format!(": {}", c.detail));
        }
        s.push('\n');
    }
    s
}

pub const SIMPLES_SCHEMA_ID: &str = "hopf72/simples/v1";

pub fn cmd_simples(c: &Common) -> Result<Output, Error> {
    require_variant_a(c, "simples")?;
    let ctx = Ctx::load(c)?;
    let cls = classify_simples(&ctx.table)?;
    let summary = cls.summary(&ctx.table);
    let covers: Vec<_> = (0..6).map(|g| cls.cover_report(&ctx.table, g)).collect();
    let expected_j = match cls.regime {
        RegimeTag::Generic => 46,
        RegimeTag::SubGeneric => 54,
        RegimeTag::Zero => 66,
    };
    let mut checks = vec![
        Check::new("simples are simple and pairwise non-isomorphic", summary.all_simple),
        Check::new("sum of squared dimensions plus dim J is 72", summary.wedderburn_ok),
        Check::new("every projective cover has a listed top", summary.tops_covered),
        Check::new(format!("dim J = {expected_j}"), summary.radical_dimension == expected_j),
    ];
    for r in &covers {
        checks.push(Check::new(
            format!("M_{} has simple top and socle, delta is primitive", r.g),
            r.primitive && r.top.is_some() && r.socle.is_some() && (cls.regime != RegimeTag::Zero || r.top_dim == 1),
        ));
    }
    let mut text = format!("# schema {SIMPLES_SCHEMA_ID}\nparameter {} regime {}\n{}", ctx.input, cls.regime, ctx.normalization_text());
    for s in &summary.simples {
        text.push_str(&format!("{} dim {} weights [{}]\n", s.name, s.dimension, s.weights.join(", ")));
    }
    text.push_str(&format!("dim J = {}\n", summary.radical_dimension));
    for r in &covers {
        text.push_str(&format!(
            "M_{}: top {} socle {}\n",
            r.g,
            r.top.as_deref().unwrap_or("?"),
            r.socle.as_deref().unwrap_or("?")
        ));
    }
    text.push_str(&render_checks(&checks));
    let json = json!({
        "$schema": SIMPLES_SCHEMA_ID,
        "parameter": ctx.input.to_strings(),
        "normalization": ctx.normalization(),
        "summary": summary,
        "projective_covers": covers,
        "checks": checks,
    });
    Ok(ctx.finish(Output { name: "simples", schema: SIMPLES_SCHEMA_ID, json, text, dot: None, checks }))
}

pub fn cmd_lattice(l: &LatticeArgs) -> Result<Output, Error> {
    let c = &l.common;
    require_variant_a(c, "lattice")?;
    let a = parse_params(&c.a)?;
    if a.n() != 3 {
        return Err(Error::Unsupported(format!("lattice supports n = 3 only, got n = {}", a.n())));
    }
    let ctx = Ctx::load(c)?;
    let g_in = Perm::parse(&l.g, 3)?;
    let g = ctx.to_canonical(&g_in);
    let cls = classify_simples(&ctx.table)?;
    let m = verma(&ctx.table, g);
    let lat = SubmoduleLattice::compute(&m, &cls.simples, c.seed)?;
    let mut checks = vec![
        Check::new("families closed symbolically", lat.families_symbolic),
        Check::new("families closed at sampled points", lat.families_sampled),
    ];
    let mut comparison = Value::Null;
    if published_vermas(cls.regime).contains(&g) {
        let exp = expected_lattice(&ctx.table, &m, g)?;
        let cmp = compare(&lat, &exp, c.seed);
        checks.push(Check::new("lattice matches the published diagram node for node", cmp.passes()));
        comparison = serde_json::to_value(&cmp).expect("serializable");
    }
    let cert = lat.certificate(&ctx.input.to_strings());
    let json = json!({
        "$schema": crate::repcore::lattice::SCHEMA_ID,
        "normalization": ctx.normalization(),
        "lattice": cert,
        "published_comparison": comparison,
        "checks": checks,
    });
    let mut text = format!(
        "# schema {}\nM_{} for parameter {}: {} nodes, {} edges\n{}",
        crate::repcore::lattice::SCHEMA_ID,
        SymGroup::new(3).name(g),
        ctx.input,
        lat.node_count(),
        lat.edges.len(),
        ctx.normalization_text()
    );
    for e in &lat.edges {
        text.push_str(&format!("{} > {} : {}\n", e.upper, e.lower, e.label));
    }
    text.push_str(&render_checks(&checks));
    Ok(ctx.finish(Output {
        name: "lattice",
        schema: crate::repcore::lattice::SCHEMA_ID,
        json,
        text,
        dot: Some(lat.to_dot()),
        checks,
    }))
}

pub const INTEGRALS_SCHEMA_ID: &str = "hopf72/integrals/v1";

pub fn cmd_integrals(c: &Common) -> Result<Output, Error> {
    require_variant_a(c, "integrals")?;
    let t = Ctx::load_raw(c)?;
    let co = Coalgebra::build(&t)?;
    let r = co.integrals()?;
    let checks = vec![
        Check::new("left integrals are one-dimensional", r.left_dim == 1),
        Check::new("left integrals spanned by x13.x12.x23.x12 delta_e", r.left_is_m4_delta_e),
        Check::new("unimodular", r.unimodular),
        Check::new("dual unimodular", r.dual_unimodular),
        Check::new("distinguished group-like trivial", r.distinguished_grouplike_trivial),
        Check::new("modular function trivial", r.modular_function_trivial),
    ];
    let text = format!(
        "# schema {INTEGRALS_SCHEMA_ID}\nparameter {}\nleft integrals: {}\nright integrals: {}\n{}",
        t.a,
        r.left.join(", "),
        r.right.join(", "),
        render_checks(&checks)
    );
    let json = json!({ "$schema": INTEGRALS_SCHEMA_ID, "parameter": t.a.to_strings(), "integrals": r, "checks": checks });
    Ok(Output { name: "integrals", schema: INTEGRALS_SCHEMA_ID, json, text, dot: None, checks })
}

pub fn cmd_quiver(c: &Common) -> Result<Output, Error> {
    require_variant_a(c, "quiver")?;
    let ctx = Ctx::load(c)?;
    let cls = classify_simples(&ctx.table)?;
    let ext = ext_matrix(&ctx.table, &cls)?;
    let v = verdict(&ext);
    let cat = extension_catalog(&ctx.table, &cls, c.seed)?;
    let q = SeparatedQuiver::new(&ext);
    let checks = vec![
        Check::new("Ext¹ by cocycles equals Ext¹ by the projective resolution", ext.methods_agree),
        Check::new("every catalog extension verified", cat.all_verified()),
    ];
    let mut text = format!(
        "# schema {}\nparameter {} regime {}\n{}simples {:?}\n",
        crate::extquiver::VERDICT_SCHEMA_ID,
        ctx.input,
        ext.regime,
        ctx.normalization_text(),
        ext.simples
    );
    for (s, row) in ext.simples.iter().zip(&ext.entries) {
        text.push_str(&format!("Ext¹({s}, -) = {row:?}\n"));
    }
    for comp in &v.components {
        text.push_str(&format!("component {{{}}}: {}\n", comp.vertices.join(", "), comp.class));
    }
    text.push_str(&format!("verdict: {}\n", v.verdict));
    for e in cat.entries.iter().filter(|e| e.ext_dim > 0) {
        let r: Vec<String> = e.realizations.iter().map(|r| format!("{} ⊂ {}", r.generators.join(" = "), r.verma)).collect();
        text.push_str(&format!("extension socle {} top {}: {}\n", e.socle, e.top, r.join("; ")));
        if let Some(f) = &e.family {
            text.push_str(&format!("  {f}\n"));
        }
    }
    text.push_str(&render_checks(&checks));
    let mut json = serde_json::to_value(&v).expect("serializable");
    json["normalization"] = ctx.normalization();
    json["extension_catalog"] = serde_json::to_value(&cat).expect("serializable");
    json["checks"] = serde_json::to_value(&checks).expect("serializable");
    Ok(ctx.finish(Output {
        name: "quiver",
        schema: crate::extquiver::VERDICT_SCHEMA_ID,
        json,
        text,
        dot: Some(q.to_dot(&format!("separated quiver {}", ctx.input))),
        checks,
    }))
}

pub const HOPF_REPORT_SCHEMA_ID: &str = "hopf72/hopf-report/v1";

pub fn cmd_hopf_report(c: &Common) -> Result<Output, Error> {
    require_variant_a(c, "hopf-report")?;
    let ctx = Ctx::load(c)?;
    let t = &ctx.table;
    let co = Coalgebra::build(t)?;
    let g = co.grouplikes()?;
    let chi = t.chi();
    let sp = co.skew_primitives(&chi);
    let sw = co.sweedler_report();
    let census = co.hopf_subalgebra_census();
    let ints = co.integrals()?;
    let cls = classify_simples(t)?;
    let dims: Vec<usize> = cls.simples.iter().map(|s| s.dim()).collect();
    let qt = co.qt_obstruction(&dims);
    // S² on generators against conjugation by χ
    let mut s2_table = Vec::new();
    let gens: Vec<(String, Vec<crate::Q>)> = (0..3)
        .map(|k| (format!("x{}", t.grp.transpositions()[k]), t.x(k)))
        .chain((0..6).map(|h| (format!("d{}", t.grp.name(h)), t.delta(h))))
        .collect();
    for (name, b) in &gens {
        let s2 = co.apply_antipode(&co.apply_antipode(b));
        let conj = t.mul(&t.mul(&chi, b), &chi);
        s2_table.push(json!({ "element": name, "s2": t.render(&s2), "chi_conjugate": t.render(&conj), "equal": s2 == conj }));
    }
    let checks = vec![
        Check::new("group-likes are {1, chi}", g.len() == 2 && g.contains(&t.unit()) && g.contains(&chi)),
        Check::new("dim P(1,chi) = 2", sp.len() == 2),
        Check::new("dim k<chi,y> = 4", sw.dimension == 4),
        Check::new("antipode square is conjugation by chi on generators", s2_table.iter().all(|r| r["equal"] == json!(true))),
        Check::new("unimodular", ints.unimodular),
        Check::new("dual unimodular", ints.dual_unimodular),
        Check::new("quasitriangularity obstruction witness found", qt.witness.is_some()),
    ];
    let text = format!(
        "# schema {HOPF_REPORT_SCHEMA_ID}\nparameter {}\ngroup-likes: {}\nskew-primitives: {}\ny² = {}\nleft integral: {}\nqt witness g = {}\n{}",
        ctx.input,
        g.iter().map(|x| t.render(x)).collect::<Vec<_>>().join(" ; "),
        sp.iter().map(|x| t.render(x)).collect::<Vec<_>>().join(" ; "),
        sw.y_squared,
        ints.left.join(", "),
        qt.witness.as_deref().unwrap_or("none"),
        render_checks(&checks)
    );
    let json = json!({
        "$schema": HOPF_REPORT_SCHEMA_ID,
        "parameter": ctx.input.to_strings(),
        "normalization": ctx.normalization(),
        "grouplikes": g.iter().map(|x| t.render(x)).collect::<Vec<_>>(),
        "skew_primitives": sp.iter().map(|x| t.render(x)).collect::<Vec<_>>(),
        "sweedler": sw,
        "hopf_subalgebras": census,
        "integrals": ints,
        "s2_table": s2_table,
        "qt_obstruction": qt,
        "checks": checks,
    });
    Ok(ctx.finish(Output { name: "hopf-report", schema: HOPF_REPORT_SCHEMA_ID, json, text, dot: None, checks }))
}

pub const REPORT_SCHEMA_ID: &str = "hopf72/report/v1";

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub claim: String,
    pub pass: bool,
    pub provenance: String,
}

fn claim(claim: impl Into<String>, pass: bool, provenance: impl Into<String>) -> Claim {
    Claim { claim: claim.into(), pass, provenance: provenance.into() }
}

pub fn cmd_report(c: &Common) -> Result<Output, Error> {
    require_variant_a(c, "report")?;
    let ctx = Ctx::load(c)?;
    let t = &ctx.table;
    let mut claims = Vec::new();
    claims.push(claim("dim 𝒜 = 72", t.dim() == 72, "completion of the defining relators reproduces the 12 normal words, 12·6 = 72"));
    claims.push(claim(
        "multiplication is associative",
        t.verify_associativity().is_ok(),
        "exact sweep over all 72³ basis triples",
    ));
    claims.push(claim("three degree-3 identities hold", verify_identities(t).is_ok(), "exact evaluation in the structure table"));
    let cx = regular_action_crosscheck(&[t])?;
    claims.push(claim(
        "printed action formulas agree with the rewriting",
        cx.passes(),
        "each formula evaluated on the regular representation and compared term by term",
    ));
    let co = Coalgebra::build(t)?;
    claims.push(claim(
        "Hopf axioms, antipode square = conjugation by chi, antipode fourth power = id",
        co.verify_all().is_ok(),
        "coproduct extended multiplicatively, antipode by exact linear solve, axioms checked on every basis element",
    ));
    let g = co.grouplikes()?;
    claims.push(claim("group-likes are {1, chi}", g.len() == 2, "bidegree argument, then characters of S3 tested"));
    claims.push(claim(
        "dim P(1,chi) = 2",
        co.skew_primitives(&t.chi()).len() == 2,
        "kernel of Δz − z⊗1 − chi⊗z over the full basis",
    ));
    claims.push(claim("dim k<chi,y> = 4", co.sweedler_report().dimension == 4, "span closure in the structure table"));
    let ints = co.integrals()?;
    claims.push(claim(
        "left integrals = span of x13.x12.x23.x12 delta_e, unimodular, distinguished group-likes trivial",
        ints.left_is_m4_delta_e && ints.unimodular && ints.dual_unimodular && ints.distinguished_grouplike_trivial,
        "integral equations solved on generators; dual side from (id⊗λ)Δ = λ·1",
    ));
    let cls = classify_simples(t)?;
    let summary = cls.summary(t);
    let names: Vec<String> = summary.simples.iter().map(|s| format!("{} (dim {})", s.name, s.dimension)).collect();
    claims.push(claim(
        format!("simples are {}; dim J = {}", names.join(", "), summary.radical_dimension),
        summary.all_simple && summary.wedderburn_ok && summary.tops_covered,
        "radical from the trace form of the regular representation, simples checked by End = k and J·S = 0",
    ));
    if cls.regime != RegimeTag::Zero {
        let ok = (0..6).all(|g| {
            let r = cls.cover_report(t, g);
            r.primitive && r.top.is_some() && r.socle.is_some()
        });
        claims.push(claim(
            "every delta_g is primitive and every M_g has simple top and socle",
            ok,
            "local endomorphism ring and radical/socle series of each M_g",
        ));
        let mut all = true;
        for g in published_vermas(cls.regime) {
            let m = verma(t, g);
            let lat = SubmoduleLattice::compute(&m, &cls.simples, c.seed)?;
            let exp = expected_lattice(t, &m, g)?;
            all &= compare(&lat, &exp, c.seed).passes() && lat.families_symbolic && lat.families_sampled;
        }
        claims.push(claim(
            "published submodule lattices match node for node, with labels",
            all,
            "exhaustive weight-profile solve with ℙ¹ families, compared against the published diagrams",
        ));
    }
    let ext = ext_matrix(t, &cls)?;
    let v = verdict(&ext);
    claims.push(claim(
        format!("Ext¹ matrix {:?}", ext.entries),
        ext.methods_agree,
        "derivations on generators modulo inner ones, and Hom counts along the projective cover",
    ));
    claims.push(claim(v.verdict.clone(), true, v.basis_of_inference.join("; ")));
    let k = deform_report(&ctx.regime.canonical, c.degree_bound)?;
    claims.push(claim(
        "𝒦_a has dim 72 and acts on M3",
        k.passes(),
        "variant-K completion and relator check on the six-dimensional module",
    ));
    let dims: Vec<usize> = cls.simples.iter().map(|s| s.dim()).collect();
    let qt = co.qt_obstruction(&dims);
    claims.push(claim(
        format!("no quasitriangular structure of the R0 shape; witness g = {}", qt.witness.as_deref().unwrap_or("none")),
        qt.witness.is_some() && qt.r0_squared_is_one,
        "Δ^cop(δ_g)R0 − R0Δ(δ_g) evaluated exactly",
    ));
    let linkage: Vec<Vec<String>> =
        linkage_classes(&ctx.input).iter().map(|cl| cl.iter().map(|p| p.to_string()).collect()).collect();
    let checks: Vec<Check> = claims.iter().map(|c| Check::new(c.claim.clone(), c.pass)).collect();
    let mut text = format!(
        "# schema {REPORT_SCHEMA_ID}\nparameter {} regime {}\n{}linkage partition: {}\n",
        ctx.input,
        ctx.regime.tag,
        ctx.normalization_text(),
        linkage.iter().map(|c| format!("{{{}}}", c.join(", "))).collect::<Vec<_>>().join(" ")
    );
    for cl in &claims {
        text.push_str(&format!("{} {}\n    via {}\n", if cl.pass { "PASS" } else { "FAIL" }, cl.claim, cl.provenance));
    }
    let json = json!({
        "$schema": REPORT_SCHEMA_ID,
        "parameter": ctx.input.to_strings(),
        "regime": ctx.regime.tag,
        "normalization": ctx.normalization(),
        "linkage_partition": linkage,
        "claims": claims,
    });
    Ok(ctx.finish(Output { name: "report", schema: REPORT_SCHEMA_ID, json, text, dot: None, checks }))
}

pub const FAILURE_SCHEMA_ID: &str = "hopf72/failures/v1";

/// Runs the parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let (common, res) = match &cli.command {
        Command::Build(c) => (c, cmd_build(c)),
        Command::Verify(c) => (c, cmd_verify(c)),
        Command::Simples(c) => (c, cmd_simples(c)),
        Command::Lattice(l) => (&l.common, cmd_lattice(l)),
        Command::Integrals(c) => (c, cmd_integrals(c)),
        Command::Quiver(c) => (c, cmd_quiver(c)),
        Command::Report(c) => (c, cmd_report(c)),
        Command::HopfReport(c) => (c, cmd_hopf_report(c)),
    };
    let out = match res {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    if common.dot && out.dot.is_none() {
        eprintln!("error: --dot is available for lattice and quiver only");
        return 2;
    }
    let (body, ext) = if common.dot {
        (out.dot.clone().expect("checked"), "dot")
    } else if common.json {
        (serde_json::to_string_pretty(&out.json).expect("serializable") + "\n", "json")
    } else {
        (out.text.clone(), "txt")
    };
    match &common.out {
        Some(dir) => {
            let path = dir.join(format!("{}.{ext}", out.name));
            if let Err(e) = std::fs::create_dir_all(dir).and_then(|_| std::fs::write(&path, &body)) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
            println!("{}", path.display());
        }
        None => {
            // a closed pipe (e.g. `| head`) is not an error of the command
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
        }
    }
    if out.passes() {
        0
    } else {
        let failures: Vec<&Check> = out.checks.iter().filter(|c| !c.pass).collect();
        eprintln!("{}", json!({ "$schema": FAILURE_SCHEMA_ID, "command": out.name, "failures": failures }));
        1
    }
}

/// Usage-level errors exit with 2, failed verifications with 1.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Param(_) | Error::Unsupported(_) | Error::Precondition(_) => 2,
        Error::Completion(_) | Error::Verification(_) | Error::Linear(_) => 1,
    }
}
