mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{brute_cochains, case, path_count, reachability};
use ffl::hasse::build_diagram;
use ffl::paths::{
    all_dyck_paths, cochain_formula, cochains, is_dyck, maximal_paths, supp1, supp1_inverse, CoChain,
};
use ffl::rootsys::weyl_dim_rect;
use ffl::{CaseId, LieType, Series, Variant};
use proptest::prelude::*;

fn sets_1(v: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    v.iter()
        .map(|s| {
            let mut s: Vec<usize> = s.iter().map(|i| i + 1).collect();
            s.sort_unstable();
            s
        })
        .collect()
}

fn max_sets(s: &str) -> BTreeSet<Vec<usize>> {
    let d = build_diagram(&case(s)).unwrap();
    sets_1(&maximal_paths(&d).into_iter().map(|p| p.indices).collect::<Vec<_>>())
}

fn spin(series: Series, n: usize, k: usize) -> CaseId {
    CaseId::new(LieType::new(series, n).unwrap(), k, Variant::Standard).unwrap()
}

#[test]
fn a4_w3_maximal_paths() {
    let want: BTreeSet<Vec<usize>> = [vec![1, 2, 4, 6], vec![1, 2, 5, 6], vec![1, 3, 5, 6]].into();
    assert_eq!(max_sets("A4:w3"), want);
}

#[test]
fn b3_w3_maximal_paths() {
    let want: BTreeSet<Vec<usize>> = [vec![1, 2, 3, 5, 6], vec![1, 2, 4, 5, 6]].into();
    assert_eq!(max_sets("B3:w3"), want);
}

#[test]
fn single_vertex_diagram() {
    let d = build_diagram(&case("A1:w1")).unwrap();
    let p = maximal_paths(&d);
    assert_eq!(p.len(), 1);
    assert_eq!(p[0].indices, vec![0]);
}

#[test]
fn paths_are_walks_in_order() {
    for c in CaseId::table(7) {
        let d = build_diagram(&c).unwrap();
        let em = d.edge_map();
        let paths = maximal_paths(&d);
        assert_eq!(paths.len() as u64, path_count(&d), "{c}");
        for p in &paths {
            for w in p.indices.windows(2) {
                assert!(em.contains_key(&(w[0], w[1])), "{c}: {w:?} is not an edge");
            }
        }
    }
}

#[test]
fn all_dyck_paths_examples() {
    let d = build_diagram(&case("A4:w3")).unwrap();
    let all: BTreeSet<Vec<usize>> = all_dyck_paths(&d).into_iter().map(|p| p.indices).collect();
    assert!(all.contains(&vec![0, 1, 3, 5]));
    assert!(all.contains(&vec![0, 1, 5]));
    assert!(all.contains(&vec![]));
    let paths = maximal_paths(&d);
    assert!(!is_dyck(&paths, &[2, 3]));
    assert!(is_dyck(&paths, &[0, 5]));
}

#[test]
fn chain_has_all_subsets() {
    // A_n, ω₁: the support α_{1,n}, …, α_{1,1} is one chain
    for n in 1..=8 {
        let d = build_diagram(&spin(Series::A, n, 1)).unwrap();
        assert_eq!(maximal_paths(&d).len(), 1);
        assert_eq!(all_dyck_paths(&d).len(), 1 << n);
    }
}

#[test]
fn a4_w3_cochains() {
    let d = build_diagram(&case("A4:w3")).unwrap();
    let got: Vec<Vec<usize>> = cochains(&d).unwrap().into_iter().map(|c| c.indices).collect();
    let want: Vec<Vec<usize>> = vec![
        vec![],
        vec![0],
        vec![1],
        vec![2],
        vec![3],
        vec![4],
        vec![5],
        vec![1, 2],
        vec![2, 3],
        vec![3, 4],
    ];
    assert_eq!(got, want);
}

#[test]
fn e7_cochain_histogram() {
    let d = build_diagram(&case("E7:w7")).unwrap();
    let cc = cochains(&d).unwrap();
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for c in &cc {
        *hist.entry(c.indices.len()).or_default() += 1;
    }
    assert_eq!(hist, BTreeMap::from([(0, 1), (1, 27), (2, 27), (3, 1)]));
    let triple: Vec<&CoChain> = cc.iter().filter(|c| c.indices.len() == 3).collect();
    assert_eq!(triple[0].indices, vec![12, 13, 14]);
}

#[test]
fn f4_cochains() {
    let d = build_diagram(&case("F4:w4")).unwrap();
    let cc = cochains(&d).unwrap();
    assert_eq!(cc.len(), 26);
    let pairs: BTreeSet<Vec<usize>> = cc.iter().filter(|c| c.indices.len() == 2).map(|c| c.indices.clone()).collect();
    let want: BTreeSet<Vec<usize>> = [(3, 5), (4, 6), (5, 6), (6, 7), (7, 8), (6, 9), (8, 9), (9, 10), (9, 12), (11, 12)]
        .iter()
        .map(|&(a, b)| vec![a - 1, b - 1])
        .collect();
    assert_eq!(pairs, want);
}

#[test]
fn cochains_match_reachability_antichains() {
    for c in CaseId::table(7) {
        let d = build_diagram(&c).unwrap();
        let got: Vec<Vec<usize>> = cochains(&d).unwrap().into_iter().map(|c| c.indices).collect();
        assert_eq!(got, brute_cochains(&d), "{c}");
    }
}

#[test]
fn cochain_counts_equal_dimensions() {
    for c in CaseId::table(8) {
        let d = build_diagram(&c).unwrap();
        let n = cochains(&d).unwrap().len() as u64;
        assert_eq!(n, weyl_dim_rect(c.lie, c.fund_index, 1), "{c}");
    }
}

#[test]
fn formula_examples() {
    assert_eq!(cochain_formula(&case("B4:w4")).unwrap().len(), 16);
    assert_eq!(cochain_formula(&case("D5:w5")).unwrap().len(), 16);
    let d = build_diagram(&case("A4:w3")).unwrap();
    assert_eq!(cochain_formula(&case("A4:w3")).unwrap(), cochains(&d).unwrap());
    assert!(cochain_formula(&case("E6:w6")).is_err());
}

#[test]
fn formula_matches_diagram_small() {
    let mut cases = Vec::new();
    for n in 1..=6 {
        for k in 1..=n {
            cases.push(spin(Series::A, n, k));
        }
    }
    for n in 2..=6 {
        cases.push(spin(Series::B, n, n));
    }
    for n in 4..=6 {
        cases.push(spin(Series::D, n, n - 1));
        cases.push(spin(Series::D, n, n));
    }
    for c in cases {
        let d = build_diagram(&c).unwrap();
        assert_eq!(cochain_formula(&c).unwrap(), cochains(&d).unwrap(), "{c}");
    }
}

#[test]
fn d_n_and_b_n_minus_1_cochain_counts_agree() {
    for n in 4..=8 {
        let b = cochains(&build_diagram(&spin(Series::B, n - 1, n - 1)).unwrap()).unwrap().len();
        for k in [n - 1, n] {
            let d = cochains(&build_diagram(&spin(Series::D, n, k)).unwrap()).unwrap().len();
            assert_eq!(d, b, "D{n} w{k}");
        }
    }
}

#[test]
fn supp1_examples() {
    let d = build_diagram(&case("A4:w3")).unwrap();
    let paths = maximal_paths(&d);
    assert_eq!(supp1(&paths, &[0; 6]).unwrap().indices, Vec::<usize>::new());
    let x = [0, 0, 1, 1, 0, 0];
    let c = supp1(&paths, &x).unwrap();
    assert_eq!(c.indices, vec![2, 3]);
    assert_eq!(supp1_inverse(6, &c), x.to_vec());
    assert!(supp1(&paths, &[1, 1, 0, 0, 0, 0]).is_err());
    assert!(supp1(&paths, &[2, 0, 0, 0, 0, 0]).is_err());
}

/// Concatenation closure, in the form that covers every pair: for each
/// vertex v, a maximal path down to v followed by a maximal path from v is
/// again on one path.
#[test]
fn dyck_family_axioms() {
    for c in CaseId::table(6) {
        let d = build_diagram(&c).unwrap();
        if d.len() > 30 {
            continue;
        }
        let paths = maximal_paths(&d);
        let covered: BTreeSet<usize> = paths.iter().flat_map(|p| p.indices.iter().copied()).collect();
        assert_eq!(covered.len(), d.len(), "{c}: not covered");
        let reach = reachability(&d);
        for p in &paths {
            // maximal: starts at θ side, every pair along it is comparable
            for (i, &a) in p.indices.iter().enumerate() {
                for &b in &p.indices[i + 1..] {
                    assert!(reach[a][b], "{c}");
                }
            }
        }
        for v in 0..d.len() {
            for p in paths.iter().filter(|p| p.indices.contains(&v)) {
                let head: Vec<usize> = p.indices.iter().take_while(|&&x| x != v).copied().collect();
                for q in paths.iter().filter(|q| q.indices.contains(&v)) {
                    let mut set = head.clone();
                    set.extend(q.indices.iter().skip_while(|&&x| x != v).copied());
                    assert!(is_dyck(&paths, &set), "{c}: concatenation at {v} fails");
                }
            }
        }
        // every subset of a Dyck path is Dyck
        for p in all_dyck_paths(&d).iter().take(2000) {
            for skip in 0..p.indices.len() {
                let sub: Vec<usize> =
                    p.indices.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
                assert!(is_dyck(&paths, &sub), "{c}");
            }
        }
    }
}

#[test]
fn type_a_comparability_is_coefficient_order() {
    // on standard type A diagrams two roots share a path iff one dominates
    // the other coefficientwise
    for n in 2..=6 {
        for k in 1..=n {
            let c = spin(Series::A, n, k);
            let d = build_diagram(&c).unwrap();
            let paths = maximal_paths(&d);
            for (i, a) in d.vertices.iter().enumerate() {
                for (j, b) in d.vertices.iter().enumerate() {
                    let dom = a.simple_coeffs.iter().zip(&b.simple_coeffs).all(|(x, y)| x >= y)
                        || a.simple_coeffs.iter().zip(&b.simple_coeffs).all(|(x, y)| x <= y);
                    assert_eq!(is_dyck(&paths, &[i, j]), dom, "{c}: {i} {j}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn supp1_accepts_exactly_antichains(bits in 0u32..(1 << 16), which in 0usize..4) {
        let name = ["E6:w6", "B4:w4", "D6:w6", "A5:w3"][which];
        let d = build_diagram(&case(name)).unwrap();
        let n = d.len();
        let x: Vec<u32> = (0..n).map(|i| (bits >> (i % 16)) & 1).collect();
        let reach = reachability(&d);
        let set: Vec<usize> = (0..n).filter(|&i| x[i] == 1).collect();
        let anti = set.iter().all(|&a| set.iter().all(|&b| !reach[a][b]));
        let got = supp1(&maximal_paths(&d), &x);
        prop_assert_eq!(got.is_ok(), anti);
        if let Ok(c) = got {
            prop_assert_eq!(supp1_inverse(n, &c), x);
        }
    }
}
