//! Shared helpers and independent oracles for the integration tests.
#![allow(dead_code)]

use ffl::hasse::HasseDiagram;
use ffl::polytope::PolytopeH;
use ffl::CaseId;

pub fn case(s: &str) -> CaseId {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// dim V(m ω_k) for sl_{n+1}: the rectangle with k rows of length m, by the
/// hook-content formula.
pub fn hook_content(n: u64, k: u64, m: u64) -> u64 {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for r in 0..k {
        for c in 0..m {
            num *= (n + 1 + c - r) as u128;
            den *= ((m - c) + (k - r) - 1) as u128;
        }
    }
    (num / den) as u64
}

/// reach[u][v]: v is reachable from u by a non-empty edge walk.
pub fn reachability(d: &HasseDiagram) -> Vec<Vec<bool>> {
    let n = d.len();
    let mut r = vec![vec![false; n]; n];
    for e in &d.edges {
        r[e.from][e.to] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                let row = r[k].clone();
                for (x, y) in r[i].iter_mut().zip(row) {
                    *x |= y;
                }
            }
        }
    }
    r
}

/// Antichains of the reachability order, sorted by size then lexicographically.
pub fn brute_cochains(d: &HasseDiagram) -> Vec<Vec<usize>> {
    let r = reachability(d);
    let n = d.len();
    let mut out = Vec::new();
    fn rec(v0: usize, n: usize, r: &[Vec<bool>], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for v in v0..n {
            if cur.iter().all(|&u| !r[u][v] && !r[v][u]) {
                cur.push(v);
                rec(v + 1, n, r, cur, out);
                cur.pop();
            }
        }
    }
    rec(0, n, &r, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Number of source-to-sink walks, by dynamic programming over the order.
pub fn path_count(d: &HasseDiagram) -> u64 {
    let n = d.len();
    let mut indeg = vec![0; n];
    let mut outdeg = vec![0; n];
    for e in &d.edges {
        indeg[e.to] += 1;
        outdeg[e.from] += 1;
    }
    let mut ways = vec![0u64; n];
    for &v in &d.order {
        if indeg[v] == 0 {
            ways[v] = 1;
        }
        for e in d.edges.iter().filter(|e| e.from == v) {
            ways[e.to] += ways[v];
        }
    }
    (0..n).filter(|&v| outdeg[v] == 0).map(|v| ways[v]).sum()
}

/// Lattice points of the polytope by scanning the whole box [0, bound]^N.
pub fn box_points(p: &PolytopeH) -> Vec<Vec<u32>> {
    let n = p.dim;
    let b = p.bound;
    let mut out = Vec::new();
    let mut x = vec![0u32; n];
    loop {
        if p.contains(&x) {
            out.push(x.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if x[i] < b {
                x[i] += 1;
                break;
            }
            x[i] = 0;
        }
    }
}

/// All exponent vectors of length n with entries summing to at most d.
pub fn monomials_upto(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(i: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(i + 1, n, left - v, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, n, d, &mut vec![0; n], &mut out);
    out
}

/// 1-based support sets from a polytope, each sorted.
pub fn one_based_supports(p: &PolytopeH) -> Vec<Vec<usize>> {
    p.support_set().into_iter().map(|s| s.into_iter().map(|i| i + 1).collect()).collect()
}
