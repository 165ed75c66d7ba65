use polylaw::corpus::{free_one, free_table, free_two, mutate_composition, mutate_exchange, random_family};
use polylaw::fincard::{FinMap, Span};
use polylaw::polycat::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn obj(s: &str) -> Obj {
    s.to_string()
}

fn objs(v: &[&str]) -> Vec<Obj> {
    v.iter().map(|s| s.to_string()).collect()
}

fn sample_cat() -> FreeCat {
    FreeCat::new(
        vec![
            Generator::new("f", &["a"], &["x", "y"]),
            Generator::new("g", &["x"], &["b"]),
            Generator::new("h", &["y"], &["c"]),
            Generator::new("k", &["x", "y"], &["d"]),
        ],
        8,
    )
}

fn pair(f: usize, out: usize, g: usize, inp: usize) -> Pairing {
    Pairing { f, out, g, inp }
}

#[test]
fn matching_spans() {
    let c = sample_cat();
    let f = c.generator("f").unwrap();
    let g = c.generator("g").unwrap();
    let h = c.generator("h").unwrap();
    let k = c.generator("k").unwrap();

    let empty: FamilyMatching<FreeTerm> = FamilyMatching::new(vec![], vec![], vec![]);
    let s = family_matching_span(&c, &empty).unwrap();
    assert_eq!((s.n(), s.apex(), s.m()), (0, 0, 0));

    let two = FamilyMatching::new(vec![f.clone()], vec![g, h], vec![pair(0, 0, 0, 0), pair(0, 1, 1, 0)]);
    let expected = Span::new(FinMap::new(vec![1, 1], 1).unwrap(), FinMap::new(vec![1, 2], 2).unwrap()).unwrap();
    assert_eq!(family_matching_span(&c, &two).unwrap(), expected);
    assert!(is_suitable_matching(&c, &two).unwrap());

    let double = FamilyMatching::new(vec![f.clone()], vec![k.clone()], vec![pair(0, 0, 0, 0), pair(0, 1, 0, 1)]);
    let s = family_matching_span(&c, &double).unwrap();
    assert_eq!((s.n(), s.apex(), s.m()), (1, 2, 1));
    assert!(!is_suitable_matching(&c, &double).unwrap());

    let single = FamilyMatching::new(vec![f.clone()], vec![k.clone()], vec![pair(0, 0, 0, 0)]);
    assert!(is_suitable_matching(&c, &single).unwrap());

    let bad = FamilyMatching::new(vec![f], vec![k], vec![pair(0, 0, 0, 1)]);
    assert!(matches!(family_matching_span(&c, &bad), Err(PolyError::CutMismatch { .. })));
}

#[test]
fn binary_composition_examples() {
    let c = sample_cat();
    let f = c.generator("f").unwrap();
    let g = c.generator("g").unwrap();
    let h = c.generator("h").unwrap();
    let idx = c.identity(&obj("x")).unwrap();
    assert_eq!(binary_compose(&c, &idx, &f, (0, 0)).unwrap(), f);
    let gf = binary_compose(&c, &g, &f, (0, 0)).unwrap();
    assert_eq!((c.dom(&gf), c.cod(&gf)), (objs(&["a"]), objs(&["b", "y"])));
    let hgf = binary_compose(&c, &h, &gf, (1, 0)).unwrap();
    assert_eq!((c.dom(&hgf), c.cod(&hgf)), (objs(&["a"]), objs(&["b", "c"])));
    assert!(matches!(binary_compose(&c, &g, &f, (1, 0)), Err(PolyError::CutMismatch { .. })));
}

#[test]
fn polycompose_examples() {
    let c = sample_cat();
    let f = c.generator("f").unwrap();
    let g = c.generator("g").unwrap();
    let h = c.generator("h").unwrap();
    let fm = FamilyMatching::new(vec![f.clone()], vec![g.clone(), h.clone()], vec![pair(0, 0, 0, 0), pair(0, 1, 1, 0)]);
    let r = polycompose(&c, &fm).unwrap();
    assert_eq!((c.dom(&r), c.cod(&r)), (objs(&["a"]), objs(&["b", "c"])));
    assert_eq!(r, graft_family(&c, &fm).unwrap());

    let ids = FamilyMatching::new(
        vec![f.clone()],
        vec![c.identity(&obj("x")).unwrap(), c.identity(&obj("y")).unwrap()],
        vec![pair(0, 0, 0, 0), pair(0, 1, 1, 0)],
    );
    assert_eq!(polycompose(&c, &ids).unwrap(), f);

    let unsuitable = FamilyMatching::new(vec![f.clone(), f], vec![g], vec![pair(0, 0, 0, 0)]);
    assert_eq!(polycompose(&c, &unsuitable), Err(PolyError::Unsuitable));
}

#[test]
fn random_families_are_peel_order_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for round in 0..300 {
        let partial = round % 2 == 1;
        let (c, fm) = random_family(&mut rng, 5, partial);
        assert!(is_suitable_matching(&c, &fm).unwrap());
        let oracle = graft_family(&c, &fm).unwrap();
        let orders = peel_orders(&fm);
        assert!(!orders.is_empty());
        for order in &orders {
            assert_eq!(polycompose_with_order(&c, &fm, order).unwrap(), oracle, "order {order:?}");
        }
        if !partial {
            assert!(fm.is_full(&c));
            assert_eq!(fm.pairs.len(), fm.vertex_count() - 1);
        }
        // Domain: every Λ in order, then the unpaired inputs of the gs.
        let mut dom = Vec::new();
        for f in &fm.fs {
            dom.extend(c.dom(f));
        }
        for (b, g) in fm.gs.iter().enumerate() {
            for (p, x) in c.dom(g).into_iter().enumerate() {
                if !fm.pairs.iter().any(|q| q.g == b && q.inp == p) {
                    dom.push(x);
                }
            }
        }
        let mut cod = Vec::new();
        for g in &fm.gs {
            cod.extend(c.cod(g));
        }
        for (a, f) in fm.fs.iter().enumerate() {
            for (p, x) in c.cod(f).into_iter().enumerate() {
                if !fm.pairs.iter().any(|q| q.f == a && q.out == p) {
                    cod.push(x);
                }
            }
        }
        assert_eq!(c.dom(&oracle), dom);
        assert_eq!(c.cod(&oracle), cod);
    }
}

#[test]
fn terminal_tables_satisfy_axioms() {
    for bound in [2, 3] {
        let t = PolyTable::terminal(&["*"], bound);
        let r = check_polycategory_axioms(&t, &AxiomTag::ALL);
        assert!(r.clean, "{}", r.to_text());
        if bound == 3 {
            assert!(r.checks.iter().all(|c| c.instances > 0), "{}", r.to_text());
        }
    }
    let t = PolyTable::terminal(&["u", "v"], 2);
    assert!(check_polycategory_axioms(&t, &AxiomTag::ALL).clean);
}

#[test]
fn free_truncations_satisfy_axioms() {
    let (t1, _) = free_table(&free_one(), 4);
    assert!(check_polycategory_axioms(&t1, &AxiomTag::ALL).clean);
    let (t2, _) = free_table(&free_two(), 4);
    let r = check_polycategory_axioms(&t2, &AxiomTag::ALL);
    assert!(r.clean, "{}", r.to_text());
    let seq = r.check("assoc.sequential").unwrap();
    assert!(seq.instances > 0);
}

#[test]
fn mutated_tables_fail_with_witness() {
    let (t, _) = free_table(&free_two(), 4);
    let (bad, (g, f, cut)) = mutate_composition(&t).unwrap();
    let r = check_polycategory_axioms(&bad, &AxiomTag::ALL);
    assert!(!r.clean);
    let cell = format!("{} after {} at ({},{})", bad.name(g), bad.name(f), cut.0, cut.1);
    let named = r
        .checks
        .iter()
        .flat_map(|c| &c.violations)
        .any(|v| v.instance.contains(bad.name(g)) && v.instance.contains(bad.name(f)));
    assert!(named, "no witness mentions {cell}\n{}", r.to_text());

    let (bad, _) = mutate_exchange(&t).unwrap();
    assert!(!check_polycategory_axioms(&bad, &AxiomTag::ALL).clean);
}

#[test]
fn axiom_selection_by_tag() {
    let (t, _) = free_table(&free_two(), 4);
    let (bad, _) = mutate_composition(&t).unwrap();
    let only_exchange = [AxiomTag::ExchangeInvolution, AxiomTag::ExchangeBraid, AxiomTag::ExchangeCommute];
    let r = check_polycategory_axioms(&bad, &only_exchange);
    assert_eq!(r.checks.len(), 3);
    assert!(r.clean);
    assert_eq!(AxiomTag::parse("assoc.parallel"), Some(AxiomTag::AssocParallel));
}

#[test]
fn roundtrips() {
    let t = PolyTable::terminal(&["*"], 3);
    let r = roundtrip_check(&t, &DerivedPolycomp::new(&t));
    assert!(r.clean, "{}", r.to_text());

    let (t2, _) = free_table(&free_two(), 4);
    let r = roundtrip_check(&t2, &DerivedPolycomp::new(&t2));
    assert!(r.clean, "{}", r.to_text());
    assert!(r.checks.iter().all(|c| c.instances > 0), "{}", r.to_text());

    let fams = full_families(&t2, 3);
    let target = fams
        .iter()
        .find(|fm| {
            let m = polycompose(&t2, fm).unwrap();
            t2.hom(&t2.dom(&m), &t2.cod(&m)).len() > 1
        })
        .unwrap()
        .clone();
    let right = polycompose(&t2, &target).unwrap();
    let wrong = t2
        .hom(&t2.dom(&right), &t2.cod(&right))
        .into_iter()
        .find(|&m| m != right)
        .unwrap();
    let mut mutated = OverriddenPolycomp::new(&t2);
    mutated.set(target, wrong);
    let r = roundtrip_check(&t2, &mutated);
    assert!(!r.clean);
    assert!(!r.check("roundtrip.poly").unwrap().is_clean());
}

#[test]
fn binary_from_identity_padding_recovers_composites() {
    let (t, _) = free_table(&free_two(), 4);
    let derived = DerivedPolycomp::new(&t);
    for g in t.maps() {
        for f in t.maps() {
            for i in 0..t.cod(&f).len() {
                for j in 0..t.dom(&g).len() {
                    if let Ok(direct) = t.compose(&g, &f, (i, j)) {
                        assert_eq!(binary_from_poly(&t, &derived, &g, &f, (i, j)).unwrap(), direct);
                    }
                }
            }
        }
    }
}

#[test]
fn table_json_roundtrip_for_free_truncation() {
    let (t, _) = free_table(&free_two(), 4);
    let back = PolyTable::from_json(&t.to_json()).unwrap();
    assert_eq!(back.len(), t.len());
    assert!(check_polycategory_axioms(&back, &AxiomTag::ALL).clean);
    assert!(matches!(PolyTable::from_json("{"), Err(TableError::Parse { .. })));
}
