mod common;

use common::{binom, case, hook_content};
use ffl::rootsys::{
    cartan_matrix, highest_root, pairing, positive_roots, standard_support, support_roots, weyl_dim, weyl_dim_rect,
    Weight,
};
use ffl::{CaseId, LieType, Series};
use proptest::prelude::*;

fn lie(s: Series, n: usize) -> LieType {
    LieType::new(s, n).unwrap()
}

fn coeffs(c: &CaseId) -> Vec<Vec<i64>> {
    support_roots(c).unwrap().into_iter().map(|r| r.simple_coeffs).collect()
}

#[test]
fn cartan_a2_and_g2() {
    assert_eq!(cartan_matrix(lie(Series::A, 2)), vec![vec![2, -1], vec![-1, 2]]);
    let g = cartan_matrix(lie(Series::G, 2));
    assert_eq!(g[0][1] * g[1][0], 3);
    assert_eq!(highest_root(lie(Series::G, 2)).simple_coeffs, vec![3, 2]);
}

#[test]
fn highest_roots() {
    assert_eq!(highest_root(lie(Series::B, 3)).simple_coeffs, vec![1, 2, 2]);
    assert_eq!(highest_root(lie(Series::F, 4)).simple_coeffs, vec![2, 3, 4, 2]);
    assert_eq!(highest_root(lie(Series::E, 7)).simple_coeffs, vec![2, 2, 3, 4, 3, 2, 1]);
    assert_eq!(highest_root(lie(Series::C, 3)).simple_coeffs, vec![2, 2, 1]);
}

#[test]
fn positive_root_counts() {
    for n in 1..=8 {
        assert_eq!(positive_roots(lie(Series::A, n)).len(), n * (n + 1) / 2);
    }
    for n in 2..=8 {
        assert_eq!(positive_roots(lie(Series::B, n)).len(), n * n);
    }
    for n in 3..=8 {
        assert_eq!(positive_roots(lie(Series::C, n)).len(), n * n);
    }
    for n in 4..=8 {
        assert_eq!(positive_roots(lie(Series::D, n)).len(), n * (n - 1));
    }
    for (n, k) in [(6, 36), (7, 63), (8, 120)] {
        assert_eq!(positive_roots(lie(Series::E, n)).len(), k);
    }
    assert_eq!(positive_roots(lie(Series::F, 4)).len(), 24);
    assert_eq!(positive_roots(lie(Series::G, 2)).len(), 6);
}

#[test]
fn type_a_roots_are_intervals() {
    let n = 5;
    let mut want: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        for j in i..n {
            want.push((0..n).map(|l| i64::from(l >= i && l <= j)).collect());
        }
    }
    let mut got: Vec<Vec<i64>> = positive_roots(lie(Series::A, n)).into_iter().map(|r| r.simple_coeffs).collect();
    want.sort();
    got.sort();
    assert_eq!(got, want);
}

#[test]
fn pairings_with_theta() {
    for n in 2..=6 {
        let t = lie(Series::B, n);
        let theta = highest_root(t);
        assert_eq!(pairing(&Weight::fundamental(n, 1, 1), &theta), 1);
        assert_eq!(pairing(&Weight::fundamental(n, n, 1), &theta), 1);
    }
    let g = lie(Series::G, 2);
    assert_eq!(pairing(&Weight::fundamental(2, 2, 1), &highest_root(g)), 2);
    assert_eq!(highest_root(g).coroot_coeffs, vec![1, 2]);
    for n in 1..=6 {
        let t = lie(Series::A, n);
        for k in 1..=n {
            assert_eq!(pairing(&Weight::fundamental(n, k, 1), &highest_root(t)), 1);
        }
    }
}

#[test]
fn pairing_reads_coroot_coefficients() {
    for t in [lie(Series::B, 4), lie(Series::C, 4), lie(Series::F, 4), lie(Series::G, 2), lie(Series::E, 6)] {
        for r in positive_roots(t) {
            for i in 1..=t.rank {
                assert_eq!(pairing(&Weight::fundamental(t.rank, i, 1), &r), r.coroot_coeffs[i - 1]);
            }
        }
    }
}

#[test]
fn a4_w3_support_in_order() {
    let want = vec![
        vec![1, 1, 1, 1],
        vec![0, 1, 1, 1],
        vec![1, 1, 1, 0],
        vec![0, 0, 1, 1],
        vec![0, 1, 1, 0],
        vec![0, 0, 1, 0],
    ];
    assert_eq!(coeffs(&case("A4:w3")), want);
}

#[test]
fn e6_w6_support_in_order() {
    let want: Vec<Vec<i64>> = [
        "122321", "112321", "112221", "111221", "112211", "011221", "111211", "011211", "111111", "011111",
        "101111", "001111", "010111", "000111", "000011", "000001",
    ]
    .iter()
    .map(|s| s.bytes().map(|b| (b - b'0') as i64).collect())
    .collect();
    assert_eq!(coeffs(&case("E6:w6")), want);
}

#[test]
fn e7_w7_support_in_order() {
    let want: Vec<Vec<i64>> = [
        "2234321", "1234321", "1224321", "1223321", "1123321", "1223221", "1123221", "1223211", "1122221",
        "1123211", "1112221", "1122211", "0112221", "1112211", "1122111", "0112211", "1112111", "0112111",
        "1111111", "0111111", "1011111", "0011111", "0101111", "0001111", "0000111", "0000011", "0000001",
    ]
    .iter()
    .map(|s| s.bytes().map(|b| (b - b'0') as i64).collect())
    .collect();
    assert_eq!(coeffs(&case("E7:w7:standard")), want);
}

#[test]
fn f4_w4_support_standard_and_spanning() {
    let table: Vec<Vec<i64>> = [
        "2342", "1342", "1242", "1232", "1222", "1231", "1122", "1221", "0122", "1121", "0121", "1111", "0111",
        "0011", "0001",
    ]
    .iter()
    .map(|s| s.bytes().map(|b| (b - b'0') as i64).collect())
    .collect();
    assert_eq!(coeffs(&case("F4:w4:standard")), table);
    let mut spanning = table.clone();
    spanning.swap(3, 4);
    assert_eq!(coeffs(&case("F4:w4")), spanning);
}

#[test]
fn b_n_w1_has_2n_minus_1_roots() {
    for n in 2..=8 {
        let c = CaseId::ffl(lie(Series::B, n), 1).unwrap();
        assert_eq!(support_roots(&c).unwrap().len(), 2 * n - 1);
    }
}

#[test]
fn support_is_pairing_filter_and_respects_dominance() {
    for c in CaseId::table(7) {
        let t = c.lie;
        let sup = standard_support(t, c.fund_index);
        let w = c.weight(1);
        let mut want: Vec<Vec<i64>> = positive_roots(t)
            .into_iter()
            .filter(|r| pairing(&w, r) >= 1)
            .map(|r| r.simple_coeffs)
            .collect();
        let mut got: Vec<Vec<i64>> = sup.iter().map(|r| r.simple_coeffs.clone()).collect();
        want.sort();
        got.sort();
        assert_eq!(got, want, "{c}");
        for (i, a) in sup.iter().enumerate() {
            for b in &sup[i + 1..] {
                assert!(a.height() >= b.height(), "{c}: heights not descending");
                let dominated = a.simple_coeffs.iter().zip(&b.simple_coeffs).all(|(x, y)| x <= y);
                assert!(!dominated || a == b, "{c}: {} listed before larger {}", a.digits(), b.digits());
            }
        }
    }
}

#[test]
fn weyl_dim_examples() {
    assert_eq!(weyl_dim_rect(lie(Series::E, 6), 6, 1), 27);
    assert_eq!(weyl_dim_rect(lie(Series::E, 6), 1, 1), 27);
    assert_eq!(weyl_dim_rect(lie(Series::E, 7), 7, 1), 56);
    assert_eq!(weyl_dim_rect(lie(Series::F, 4), 4, 1), 26);
    assert_eq!(weyl_dim_rect(lie(Series::G, 2), 1, 1), 7);
    assert_eq!(weyl_dim_rect(lie(Series::B, 4), 1, 1), 9);
    let all = Weight { fund_coeffs: vec![1, 1, 1, 1] };
    assert_eq!(weyl_dim(&all, lie(Series::A, 4)).unwrap().to_string(), "1024");
}

#[test]
fn weyl_dim_matches_known_dims() {
    for c in CaseId::table(8) {
        let d = weyl_dim_rect(c.lie, c.fund_index, 1);
        assert_eq!(d, ffl::repmodels::known_dim(&c).unwrap(), "{c}");
    }
}

#[test]
fn weyl_dim_rejects_bad_weights() {
    let t = lie(Series::A, 3);
    assert!(weyl_dim(&Weight { fund_coeffs: vec![1, -1, 0] }, t).is_err());
    assert!(weyl_dim(&Weight { fund_coeffs: vec![1, 0] }, t).is_err());
}

#[test]
fn case_strings_round_trip() {
    for s in ["A4:w3", "G2:w1", "G2:w1:standard", "G2:w1:normality-order", "E7:w7", "B5:w1"] {
        assert_eq!(case(s).to_string(), s);
    }
    assert_eq!(case("G2:w1").variant, ffl::Variant::Modified);
    assert!("A4:w3:modified".parse::<CaseId>().is_err());
    assert!("A4:w9".parse::<CaseId>().is_err());
    assert!("X4:w1".parse::<CaseId>().is_err());
    assert!("A4".parse::<CaseId>().is_err());
}

#[test]
fn a_n_binomial_dims() {
    for n in 1..=8u64 {
        for k in 1..=n {
            let t = lie(Series::A, n as usize);
            assert_eq!(weyl_dim_rect(t, k as usize, 1), binom(n + 1, k));
        }
    }
}

proptest! {
    #[test]
    fn weyl_dim_agrees_with_hook_content(n in 1u64..8, k0 in 0u64..8, m in 0u64..5) {
        let k = k0 % n + 1;
        let t = lie(Series::A, n as usize);
        prop_assert_eq!(weyl_dim_rect(t, k as usize, m as i64), hook_content(n, k, m));
    }
}
