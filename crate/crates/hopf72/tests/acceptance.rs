//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hopf72::extquiver::graph::{DiagramName, GraphClass};
use hopf72::extquiver::{ext_matrix, extension_catalog, verdict, SeparatedQuiver};
use hopf72::hopf::deform::deform_report;
use hopf72::hopf::Coalgebra;
use hopf72::linalg::{sub_vec, Subspace};
use hopf72::presentation::crosscheck::{regular_action_crosscheck, verify_identities};
use hopf72::presentation::{StructureTable, Variant};
use hopf72::repcore::expected::{compare, expected_lattice, published_vermas};
use hopf72::repcore::lattice::SubmoduleLattice;
use hopf72::repcore::simples::classify_simples;
use hopf72::repcore::verma;
use hopf72::{ParamVector, RegimeTag, SymGroup, Q};

const PARAMS: [[i64; 3]; 3] = [[0, 0, 0], [2, -1, -1], [1, 2, -3]];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table(a: &ParamVector) -> Result<StructureTable, String> {
    StructureTable::build(a, Variant::A, 6).map_err(|e| e.to_string())
}

fn named(v: [i64; 3]) -> ParamVector {
    ParamVector::from_ints(3, &v).expect("sum zero")
}

fn tables() -> Result<Vec<StructureTable>, String> {
    PARAMS.iter().map(|&v| table(&named(v))).collect()
}

fn c1_dimension(ts: &[StructureTable]) -> Outcome {
    let mut notes = Vec::new();
    for t in ts {
        let clock = Instant::now();
        ensure(t.dim() == 72 && t.words.len() == 12, || format!("{}: dim {}", t.a, t.dim()))?;
        t.verify_unit().map_err(|e| e.to_string())?;
        t.verify_relators().map_err(|e| e.to_string())?;
        t.verify_associativity().map_err(|e| format!("{}: {e}", t.a))?;
        notes.push(format!("{} in {:.1?}", t.a, clock.elapsed()));
    }
    Ok(format!("72 basis words, closure and 72³ associativity for {}", notes.join(", ")))
}

fn c2_hopf(ts: &[StructureTable]) -> Outcome {
    for t in ts {
        let co = Coalgebra::build(t).map_err(|e| e.to_string())?;
        co.verify_all().map_err(|e| format!("{}: {e}", t.a))?;
    }
    Ok("coassociativity, counit, antipode, S² = χ·χ⁻¹, S⁴ = id on all basis elements".into())
}

fn c3_identities() -> Outcome {
    let mut params: Vec<ParamVector> = PARAMS.iter().map(|&v| named(v)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    while params.len() < 28 {
        let r = |rng: &mut ChaCha8Rng| Q::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into());
        let (x, y) = (r(&mut rng), r(&mut rng));
        let z = -(&x + &y);
        params.push(ParamVector::new(3, vec![x, y, z]).map_err(|e| e.to_string())?);
    }
    for a in &params {
        verify_identities(&table(a)?).map_err(|e| format!("{a}: {e}"))?;
    }
    Ok(format!("{} parameters (3 named, 25 random sum-zero)", params.len()))
}

fn c4_crosscheck(ts: &[StructureTable]) -> Outcome {
    let refs: Vec<&StructureTable> = ts.iter().collect();
    let r = regular_action_crosscheck(&refs).map_err(|e| e.to_string())?;
    ensure(r.passes(), || format!("{} flagged formulas", r.flagged().len()))?;
    Ok(format!("{} printed formulas agree on {} parameters", r.formulas.len(), r.parameters))
}

fn c5_simples(ts: &[StructureTable]) -> Outcome {
    let expect = [(vec![1; 6], 66), (vec![1, 1, 4], 54), (vec![1, 5], 46)];
    for (t, (dims, j)) in ts.iter().zip(expect) {
        let cls = classify_simples(t).map_err(|e| e.to_string())?;
        let s = cls.summary(t);
        let got: Vec<usize> = s.simples.iter().map(|x| x.dimension).collect();
        ensure(got == dims && s.radical_dimension == j, || format!("{}: simples {got:?}, dim J {}", t.a, s.radical_dimension))?;
        ensure(s.all_simple && s.wedderburn_ok && s.tops_covered, || format!("{}: {s:?}", t.a))?;
    }
    Ok("{1,5} / {1,1,4} / six 1-dim with dim J = 46 / 54 / 66".into())
}

fn c6_lattices(ts: &[StructureTable]) -> Outcome {
    let mut done = Vec::new();
    for t in &ts[1..] {
        let cls = classify_simples(t).map_err(|e| e.to_string())?;
        for g in published_vermas(cls.regime) {
            let m = verma(t, g);
            let lat = SubmoduleLattice::compute(&m, &cls.simples, 7).map_err(|e| e.to_string())?;
            ensure(lat.families_symbolic && lat.families_sampled && lat.samples >= 3, || format!("{}: family checks", m.label))?;
            let cmp = compare(&lat, &expected_lattice(t, &m, g).map_err(|e| e.to_string())?, 7);
            ensure(cmp.passes(), || format!("{} at {}: {cmp:?}", m.label, t.a))?;
            done.push(format!("{} {}", cls.regime, m.label));
        }
    }
    Ok(format!("node-for-node with labels: {}", done.join(", ")))
}

fn c7_primitive(ts: &[StructureTable]) -> Outcome {
    for t in &ts[1..] {
        let cls = classify_simples(t).map_err(|e| e.to_string())?;
        for g in 0..6 {
            let r = cls.cover_report(t, g);
            ensure(r.primitive && r.top.is_some() && r.socle.is_some(), || format!("{}: {r:?}", t.a))?;
        }
    }
    Ok("δ_g primitive, M_g with simple top and socle in the nonzero regimes".into())
}

fn c8_integrals(ts: &[StructureTable]) -> Outcome {
    for t in ts {
        let co = Coalgebra::build(t).map_err(|e| e.to_string())?;
        let r = co.integrals().map_err(|e| e.to_string())?;
        ensure(
            r.left_dim == 1
                && r.left_is_m4_delta_e
                && r.unimodular
                && r.dual_unimodular
                && r.distinguished_grouplike_trivial
                && r.modular_function_trivial,
            || format!("{}: {r:?}", t.a),
        )?;
    }
    Ok("left = span{x13x12x23x12 δ_e}, unimodular both sides, distinguished group-likes trivial".into())
}

fn c9_sweedler(ts: &[StructureTable]) -> Outcome {
    for t in ts {
        let co = Coalgebra::build(t).map_err(|e| e.to_string())?;
        let (one, chi) = (t.unit(), t.chi());
        let g = co.grouplikes().map_err(|e| e.to_string())?;
        ensure(g.len() == 2 && g.contains(&one) && g.contains(&chi), || format!("{}: {} group-likes", t.a, g.len()))?;
        let sp = Subspace::span(t.dim(), co.skew_primitives(&chi));
        let want = Subspace::span(t.dim(), vec![sub_vec(&one, &chi), co.y()]);
        ensure(sp.dim() == 2 && sp == want, || format!("{}: dim P = {}", t.a, sp.dim()))?;
        let sw = co.sweedler_report();
        ensure(sw.dimension == 4, || format!("{}: dim k<χ,y> = {}", t.a, sw.dimension))?;
    }
    Ok("G = {1, χ}, P(1,χ) = span{1−χ, y}, dim k<χ,y> = 4".into())
}

fn c10_ext(ts: &[StructureTable]) -> Outcome {
    let grp = SymGroup::new(3);
    for t in ts {
        let cls = classify_simples(t).map_err(|e| e.to_string())?;
        let ext = ext_matrix(t, &cls).map_err(|e| e.to_string())?;
        ensure(ext.methods_agree, || "methods disagree".into())?;
        let n = ext.simples.len();
        for i in 0..n {
            for j in 0..n {
                let want = match cls.regime {
                    _ if i == j => 0,
                    RegimeTag::Generic => 2,
                    RegimeTag::SubGeneric => 1,
                    RegimeTag::Zero => {
                        let (g, h) = (cls.simples[i].weights[0], cls.simples[j].weights[0]);
                        usize::from(grp.sign(grp.mul(g, grp.inv(h))) == -1)
                    }
                };
                ensure(ext.entries[i][j] == want, || format!("{}: Ext¹({}, {})", t.a, ext.simples[i], ext.simples[j]))?;
            }
        }
        let q = SeparatedQuiver::new(&ext);
        let comps: Vec<_> = q.components().into_iter().filter(|c| c.vertices.len() > 1).collect();
        let shape_ok = match cls.regime {
            RegimeTag::Generic => comps.len() == 2 && comps.iter().all(|c| c.class == GraphClass::Affine(DiagramName::A(1))),
            RegimeTag::SubGeneric => {
                comps.len() == 1 && comps[0].vertices.len() == 6 && comps[0].class == GraphClass::Affine(DiagramName::A(5))
            }
            RegimeTag::Zero => {
                let g = q.underlying();
                comps.len() == 2
                    && comps.iter().all(|c| c.class == GraphClass::Neither && c.vertices.len() == 6)
                    && g.components().iter().all(|vs| {
                        let (top, bottom): (Vec<usize>, Vec<usize>) = vs.iter().partition(|&&v| v < 6);
                        top.len() == 3 && bottom.len() == 3 && top.iter().all(|&a| bottom.iter().all(|&b| g.mult[a][b] == 1))
                    })
            }
        };
        ensure(shape_ok, || format!("{}: quiver shape {comps:?}", t.a))?;
        let v = verdict(&ext);
        let text_ok = match cls.regime {
            RegimeTag::Zero => v.verdict.contains("inferred for 𝒜: wild"),
            _ => v.verdict.contains("not of finite representation type") && v.verdict.contains("open for 𝒜"),
        };
        ensure(text_ok, || format!("{}: verdict {}", t.a, v.verdict))?;
        let cat = extension_catalog(t, &cls, 3).map_err(|e| e.to_string())?;
        ensure(cat.all_verified(), || format!("{}: catalog not verified", t.a))?;
        let named = |socle: &str, top: &str, gen: &str, hull: &str| {
            cat.find(socle, top).is_some_and(|e| {
                e.realizations.iter().all(|r| r.verma == hull && r.generators.iter().any(|g| g == gen))
            })
        };
        let catalog_ok = match cls.regime {
            RegimeTag::SubGeneric => {
                named("k_e", "k_(12)", "𝒜·(m(13)(12)(23))", "M_e") && named("k_e", "L", "𝒜·(m(23)(12))", "M_e")
            }
            RegimeTag::Generic => cat.find("k_e", "L").and_then(|e| e.family.as_deref()).is_some_and(|f| f.contains("W_t")),
            RegimeTag::Zero => cat.entries.iter().all(|e| {
                let g = grp.parse(&e.socle[2..]).unwrap_or(0);
                let h = grp.parse(&e.top[2..]).unwrap_or(0);
                (grp.sign(g) == grp.sign(h)) == e.realizations.is_empty()
            }),
        };
        ensure(catalog_ok, || format!("{}: catalog names", t.a))?;
    }
    Ok("Ext matrices 2 / 1 / transposition-linked, both methods agree; Ã1 ⊔ Ã1, Ã5, K3,3 ⊔ K3,3; verdicts and catalog verified".into())
}

fn c11_deform() -> Outcome {
    for v in PARAMS {
        let r = deform_report(&named(v), 6).map_err(|e| e.to_string())?;
        ensure(r.passes(), || format!("{r:?}"))?;
    }
    Ok("𝒦_a has dim 72 and M3 satisfies the variant-K relators".into())
}

fn c12_qt(ts: &[StructureTable]) -> Outcome {
    let mut ws = Vec::new();
    for t in ts {
        let co = Coalgebra::build(t).map_err(|e| e.to_string())?;
        let cls = classify_simples(t).map_err(|e| e.to_string())?;
        let dims: Vec<usize> = cls.simples.iter().map(|s| s.dim()).collect();
        let r = co.qt_obstruction(&dims);
        ensure(r.r0_squared_is_one && r.identity_holds_at_e, || format!("{}: {r:?}", t.a))?;
        ws.push(format!("{}: g = {}", t.a, r.witness.ok_or_else(|| format!("{}: no witness", t.a))?));
    }
    Ok(format!("witnesses {}", ws.join(", ")))
}

fn main() {
    let ts = match tables() {
        Ok(t) => t,
        Err(e) => {
            println!("FAIL build: {e}");
            std::process::exit(1);
        }
    };
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("1 dimension and associativity", Box::new(|| c1_dimension(&ts))),
        ("2 Hopf axioms", Box::new(|| c2_hopf(&ts))),
        ("3 degree-3 identities", Box::new(c3_identities)),
        ("4 formula cross-check", Box::new(|| c4_crosscheck(&ts))),
        ("5 simples and radical", Box::new(|| c5_simples(&ts))),
        ("6 Verma lattices", Box::new(|| c6_lattices(&ts))),
        ("7 primitive idempotents", Box::new(|| c7_primitive(&ts))),
        ("8 integrals", Box::new(|| c8_integrals(&ts))),
        ("9 group-likes and Sweedler", Box::new(|| c9_sweedler(&ts))),
        ("10 Ext quivers and verdicts", Box::new(|| c10_ext(&ts))),
        ("11 deformation K_a and M3", Box::new(c11_deform)),
        ("12 quasitriangularity witness", Box::new(|| c12_qt(&ts))),
    ];
    let mut failed = 0;
    for (name, f) in &criteria {
        match f() {
            Ok(msg) => println!("PASS {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name}: {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
