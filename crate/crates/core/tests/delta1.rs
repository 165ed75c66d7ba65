use polylaw::fincard::Bijection;
use polylaw::matchings::{delta1_act, delta1_elements, Action};
use polylaw::symcat::{enumerate_s2, s2_hom, S2Obj};

fn s2(v: &[usize], m: usize) -> S2Obj {
    S2Obj::from_values(v.to_vec(), m).unwrap()
}

/// Whether the bipartite multigraph on fibres, with one edge per point
/// `i` from `φ(i)` to `ψ(f(i))`, is a tree: connected with one edge fewer
/// than vertices.
fn is_tree_matching(phi: &S2Obj, psi: &S2Obj, f: &Bijection) -> bool {
    let (a, b) = (phi.m(), psi.m());
    let n = phi.n();
    if n + 1 != a + b {
        return false;
    }
    let mut reach = vec![false; a + b];
    if a + b == 0 {
        return false;
    }
    reach[0] = true;
    for _ in 0..a + b {
        for i in 1..=n {
            let (x, y) = (phi.map().apply(i) - 1, a + psi.map().apply(f.apply(i)) - 1);
            if reach[x] || reach[y] {
                reach[x] = true;
                reach[y] = true;
            }
        }
    }
    reach.iter().all(|&r| r)
}

#[test]
fn small_example() {
    let got: Vec<Vec<usize>> = delta1_elements(&s2(&[1, 1], 1), &S2Obj::identity(2))
        .iter()
        .map(|x| x.f_n.values().to_vec())
        .collect();
    assert_eq!(got, vec![vec![1, 2], vec![2, 1]]);
}

#[test]
fn elements_are_exactly_the_trees() {
    for n in 0..=4 {
        let objects: Vec<S2Obj> = (0..=4).flat_map(|m| enumerate_s2(n, m)).collect();
        for phi in &objects {
            for psi in &objects {
                let got: Vec<Bijection> = delta1_elements(phi, psi).into_iter().map(|x| x.f_n).collect();
                let want: Vec<Bijection> = Bijection::all(n).filter(|f| is_tree_matching(phi, psi, f)).collect();
                let mut sorted = want.clone();
                sorted.sort();
                assert_eq!(got, sorted, "{phi} {psi}");
                if !got.is_empty() {
                    assert_eq!(phi.m() + psi.m(), n + 1);
                }
            }
        }
    }
}

#[test]
fn actions_compose() {
    let phi = s2(&[1, 1, 2], 2);
    let psi = s2(&[1, 2, 2], 2);
    for x in delta1_elements(&phi, &psi) {
        for g in s2_hom(&psi, &psi) {
            for h in s2_hom(&phi, &phi) {
                let a = delta1_act(Action::Left(&g), &x).and_then(|y| delta1_act(Action::Right(&h), &y)).unwrap();
                let b = delta1_act(Action::Right(&h), &x).and_then(|y| delta1_act(Action::Left(&g), &y)).unwrap();
                assert_eq!(a, b);
                let direct: Vec<usize> = (1..=3).map(|i| g.f_n.apply(x.f_n.apply(h.f_n.apply(i)))).collect();
                assert_eq!(a.f_n.values(), &direct[..]);
            }
        }
    }
}
