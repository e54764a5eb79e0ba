use proptest::prelude::*;

use hopf72::extquiver::graph::{classify_connected, complete_bipartite, known_diagrams, GraphClass};
use hopf72::symgroup::isotropy_group;
use hopf72::{ParamVector, Perm, Q, Regime, RegimeTag, SymGroup};

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u8).collect::<Vec<u8>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

fn param() -> impl Strategy<Value = ParamVector> {
    (-6i64..=6, -6i64..=6, 1i64..=4).prop_map(|(x, y, d)| {
        let (x, y) = (Q::new(x.into(), d.into()), Q::new(y.into(), d.into()));
        let z = -(&x + &y);
        ParamVector::new(3, vec![x, y, z]).unwrap()
    })
}

proptest! {
    #[test]
    fn sign_is_multiplicative(p in perm(4), q in perm(4)) {
        prop_assert_eq!(p.compose(&q).sign(), p.sign() * q.sign());
        prop_assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn cycle_notation_round_trips(p in perm(4)) {
        prop_assert_eq!(Perm::parse(&p.to_string(), 4).unwrap(), p);
    }

    #[test]
    fn group_table_is_a_group(i in 0usize..6, j in 0usize..6, k in 0usize..6) {
        let g = SymGroup::new(3);
        prop_assert_eq!(g.mul(g.mul(i, j), k), g.mul(i, g.mul(j, k)));
        prop_assert_eq!(g.mul(i, g.inv(i)), g.identity());
    }

    #[test]
    fn conjugation_preserves_regime(a in param(), p in perm(3)) {
        let b = a.conjugate(&p);
        prop_assert!(b.values().iter().sum::<Q>() == Q::from_integer(0.into()));
        let (ra, rb) = (Regime::classify(&a).unwrap(), Regime::classify(&b).unwrap());
        prop_assert_eq!(ra.tag, rb.tag);
        prop_assert_eq!(isotropy_group(&a).len(), isotropy_group(&b).len());
    }

    #[test]
    fn subgeneric_canonical_form(a in param()) {
        let r = Regime::classify(&a).unwrap();
        if r.tag == RegimeTag::SubGeneric {
            let c = r.canonical.values();
            prop_assert!(c[0] != c[1] && c[1] == c[2]);
            prop_assert_eq!(a.conjugate(&r.normalizer), r.canonical);
        }
    }

    #[test]
    fn classifier_ignores_vertex_names(idx in 0usize..200, seed in any::<u64>()) {
        let table = known_diagrams(10);
        let (g, class) = &table[idx % table.len()];
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(classify_connected(&g.relabel(&order)), *class);
    }

    #[test]
    fn a_pendant_vertex_on_an_affine_diagram_is_neither(idx in 0usize..200, at in 0usize..10) {
        let affine: Vec<_> = known_diagrams(9).into_iter().filter(|(_, c)| matches!(c, GraphClass::Affine(_))).collect();
        let (g, _) = &affine[idx % affine.len()];
        let n = g.n();
        let mut h = hopf72::extquiver::graph::MultiGraph::new(n + 1);
        h.mult.iter_mut().zip(&g.mult).for_each(|(r, s)| r[..n].clone_from_slice(s));
        h.add_edge(at % n, n);
        prop_assert_eq!(classify_connected(&h), GraphClass::Neither);
    }
}

#[test]
fn complete_bipartite_k33_is_neither() {
    assert_eq!(classify_connected(&complete_bipartite(3, 3)), GraphClass::Neither);
}

#[test]
fn table_has_every_family_up_to_ten_vertices() {
    let t = known_diagrams(10);
    // A1..A10, D4..D10, E6..E8, ~A1..~A9, ~D4..~D9, ~E6..~E8
    assert_eq!(t.len(), 10 + 7 + 3 + 9 + 6 + 3);
}
