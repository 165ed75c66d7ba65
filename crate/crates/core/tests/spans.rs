use polylaw::fincard::{all_spans, is_acyclic, is_connected, is_suitable_span, pushout, Span};

/// Component labels by repeated relaxation to the least reachable vertex.
fn labels(s: &Span) -> Vec<usize> {
    let n = s.n();
    let mut label: Vec<usize> = (0..n + s.m()).collect();
    loop {
        let mut changed = false;
        for i in 1..=s.apex() {
            let (a, b) = (s.left().apply(i) - 1, n + s.right().apply(i) - 1);
            let low = label[a].min(label[b]);
            for v in [a, b] {
                if label[v] != low {
                    label[v] = low;
                    changed = true;
                }
            }
        }
        if !changed {
            return label;
        }
    }
}

fn components(s: &Span) -> usize {
    let l = labels(s);
    (0..l.len()).filter(|&v| l[v] == v).count()
}

#[test]
fn pushout_counts_components_up_to_four() {
    for n in 0..=4 {
        for k in 0..=4 {
            for m in 0..=4 {
                for s in all_spans(n, k, m) {
                    let c = components(&s);
                    assert_eq!(pushout(&s).r, c, "{s}");
                    // A multigraph is a forest iff edges = vertices - components.
                    assert_eq!(is_acyclic(&s), k + c == n + m, "{s}");
                    assert_eq!(is_connected(&s), c == 1, "{s}");
                }
            }
        }
    }
}

#[test]
fn pushout_legs_respect_components() {
    for s in all_spans(2, 3, 3) {
        let po = pushout(&s);
        let l = labels(&s);
        for i in 1..=s.apex() {
            assert_eq!(po.tau1.apply(s.left().apply(i)), po.tau2.apply(s.right().apply(i)));
        }
        for a in 0..5 {
            for b in 0..5 {
                let side = |v: usize| if v < 2 { po.tau1.apply(v + 1) } else { po.tau2.apply(v - 1) };
                assert_eq!(side(a) == side(b), l[a] == l[b]);
            }
        }
    }
}

#[test]
fn suitable_means_tree() {
    let mut trees = 0;
    // Here n + m = k + 1, so connected is the same as being a tree.
    for s in all_spans(2, 3, 2) {
        let tree = components(&s) == 1;
        assert_eq!(is_suitable_span(&s), tree);
        trees += usize::from(tree);
    }
    // Spanning trees of K(2,2) with a labelled edge set: 4 trees, 3! labellings.
    assert_eq!(trees, 4 * 6);
}

#[test]
fn empty_span_is_not_connected() {
    let s = all_spans(0, 0, 0).pop().unwrap();
    assert_eq!(pushout(&s).r, 0);
    assert!(!is_connected(&s));
    assert!(is_acyclic(&s));
}
