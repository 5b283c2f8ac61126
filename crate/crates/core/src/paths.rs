//! Dyck paths (vertex sets of subsequences of directed paths), co-chains,
//! closed-form co-chain lists for the classical minuscule cases, and the
//! supp₁ bijection.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hasse::HasseDiagram;
use crate::rootsys::{standard_support, CaseId, Series};

/// Vertex set of a Dyck path, listed along the diagram's topological order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DyckPath {
    pub indices: Vec<usize>,
}

/// A set of vertices meeting every Dyck path at most once, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoChain {
    pub indices: Vec<usize>,
}

impl CoChain {
    pub fn new(mut indices: Vec<usize>) -> CoChain {
        indices.sort_unstable();
        indices.dedup();
        CoChain { indices }
    }
}

/// Canonical order: by cardinality, then lexicographic on sorted indices.
pub fn canonical_cmp(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

pub(crate) fn mask_of(indices: &[usize]) -> u128 {
    indices.iter().fold(0u128, |m, &i| m | (1u128 << i))
}

fn check_size(d: &HasseDiagram) -> Result<()> {
    if d.len() > 128 {
        Err(Error::TooLarge(d.len()))
    } else {
        Ok(())
    }
}

/// Vertex sets of all source-to-sink paths, deduplicated, each listed in
/// traversal order. Sorted lexicographically by their ascending index lists.
pub fn maximal_paths(d: &HasseDiagram) -> Vec<DyckPath> {
    let succ = d.successors();
    let mut found: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    let mut stack: Vec<Vec<usize>> = d.sources().into_iter().map(|s| vec![s]).collect();
    while let Some(path) = stack.pop() {
        let last = *path.last().expect("non-empty");
        if succ[last].is_empty() {
            let mut key = path.clone();
            key.sort_unstable();
            found.insert((key, path));
            continue;
        }
        for &nx in succ[last].iter().rev() {
            let mut p = path.clone();
            p.push(nx);
            stack.push(p);
        }
    }
    let mut seen = BTreeSet::new();
    found
        .into_iter()
        .filter(|(k, _)| seen.insert(k.clone()))
        .map(|(_, p)| DyckPath { indices: p })
        .collect()
}

/// Bit masks of maximal paths.
pub fn path_masks(paths: &[DyckPath]) -> Vec<u128> {
    paths.iter().map(|p| mask_of(&p.indices)).collect()
}

/// For each vertex, the union of the maximal paths through it.
pub fn comparability(d: &HasseDiagram, paths: &[DyckPath]) -> Vec<u128> {
    let mut comp = vec![0u128; d.len()];
    for m in path_masks(paths) {
        for (v, c) in comp.iter_mut().enumerate() {
            if m >> v & 1 == 1 {
                *c |= m;
            }
        }
    }
    comp
}

/// Whether the set lies on one directed path.
pub fn is_dyck(paths: &[DyckPath], set: &[usize]) -> bool {
    let m = mask_of(set);
    path_masks(paths).into_iter().any(|p| p & m == m)
}

/// The down-closure of the maximal paths: every subset of every maximal
/// path, including ∅. Sorted canonically. Exponential; meant for small cases.
pub fn all_dyck_paths(d: &HasseDiagram) -> Vec<DyckPath> {
    let rank = d.order_rank();
    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    for p in maximal_paths(d) {
        let k = p.indices.len();
        for bits in 0u64..(1u64 << k) {
            let mut s: Vec<usize> = (0..k).filter(|i| bits >> i & 1 == 1).map(|i| p.indices[i]).collect();
            s.sort_unstable();
            all.insert(s);
        }
    }
    let mut v: Vec<Vec<usize>> = all.into_iter().collect();
    v.sort_by(|a, b| canonical_cmp(a, b));
    v.into_iter()
        .map(|mut s| {
            s.sort_by_key(|&x| rank[x]);
            DyckPath { indices: s }
        })
        .collect()
}

/// All co-chains, sorted canonically.
pub fn cochains(d: &HasseDiagram) -> Result<Vec<CoChain>> {
    check_size(d)?;
    let paths = maximal_paths(d);
    let comp = comparability(d, &paths);
    let n = d.len();
    let mut out: Vec<Vec<usize>> = Vec::new();
    // depth-first over increasing vertex indices; `blocked` holds everything
    // comparable with a chosen vertex
    fn rec(v0: usize, n: usize, comp: &[u128], blocked: u128, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for v in v0..n {
            if blocked >> v & 1 == 0 {
                cur.push(v);
                rec(v + 1, n, comp, blocked | comp[v], cur, out);
                cur.pop();
            }
        }
    }
    rec(0, n, &comp, 0, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| canonical_cmp(a, b));
    Ok(out.into_iter().map(|indices| CoChain { indices }).collect())
}

/// ε-style description of a root in the classical minuscule cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Eps {
    /// α_{i,j} = αᵢ + … + αⱼ (type A).
    Alpha(usize, usize),
    /// ε_{i,j}, i < j (types B and D).
    Pair(usize, usize),
    /// ε_k (B_n, ωₙ), ε_{k,n̄} (D_n, ω_{n−1}) or ε_{k,n} (D_n, ωₙ).
    Single(usize),
}

/// Simple-root coefficients of an ε-labelled root of the given case.
pub fn eps_coeffs(c: &CaseId, e: Eps) -> Vec<i64> {
    let n = c.lie.rank;
    let mut v = vec![0i64; n];
    let add = |v: &mut Vec<i64>, lo: usize, hi: usize, k: i64| {
        for r in lo..=hi {
            v[r - 1] += k;
        }
    };
    match (c.lie.series, e) {
        (_, Eps::Alpha(i, j)) => add(&mut v, i, j, 1),
        (Series::B, Eps::Pair(i, j)) => {
            if j > i {
                add(&mut v, i, j - 1, 1);
            }
            add(&mut v, j, n, 2);
        }
        (Series::B, Eps::Single(k)) => add(&mut v, k, n, 1),
        (Series::D, Eps::Pair(i, j)) => {
            add(&mut v, i, j - 1, 1);
            if j <= n - 2 {
                add(&mut v, j, n - 2, 2);
            }
            v[n - 2] += 1;
            v[n - 1] += 1;
        }
        (Series::D, Eps::Single(k)) if c.fund_index == n - 1 => add(&mut v, k, n - 1, 1),
        (Series::D, Eps::Single(k)) => {
            if k <= n - 2 {
                add(&mut v, k, n - 2, 1);
            }
            v[n - 1] += 1;
        }
        _ => unreachable!("ε labels only exist for A, B and D"),
    }
    v
}

/// Inverse of `eps_coeffs` over the support of the case.
pub fn eps_of(c: &CaseId, coeffs: &[i64]) -> Option<Eps> {
    let n = c.lie.rank;
    let cands: Vec<Eps> = match c.lie.series {
        Series::A => {
            let k = c.fund_index;
            (1..=k).flat_map(|i| (k..=n).map(move |j| Eps::Alpha(i, j))).collect()
        }
        Series::B | Series::D => {
            let top = if c.lie.series == Series::B { n } else { n - 1 };
            let mut v: Vec<Eps> = (1..=top).map(Eps::Single).collect();
            for i in 1..=top {
                for j in i + 1..=top {
                    v.push(Eps::Pair(i, j));
                }
            }
            v
        }
        _ => return None,
    };
    cands.into_iter().find(|&e| eps_coeffs(c, e) == coeffs)
}

/// Nested pair sets inside (lo..=hi): i₁ < i₂ < … < i_s < j_s < … < j₁.
fn nested_pairs(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    let pool: Vec<usize> = (lo..=hi).collect();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << pool.len()) {
        let chosen: Vec<usize> = (0..pool.len()).filter(|i| bits >> i & 1 == 1).map(|i| pool[i]).collect();
        if chosen.len() % 2 == 1 {
            continue;
        }
        let s = chosen.len() / 2;
        out.push((0..s).map(|l| (chosen[l], chosen[2 * s - 1 - l])).collect());
    }
    out
}

/// Co-chains generated from the closed-form descriptions: (A_n, ω_k),
/// (B_n, ωₙ), (D_n, ω_{n−1}) and (D_n, ωₙ).
pub fn cochain_formula(c: &CaseId) -> Result<Vec<CoChain>> {
    let n = c.lie.rank;
    let k = c.fund_index;
    let sets: Vec<Vec<Eps>> = match c.lie.series {
        Series::A => {
            let bound = k.min(n + 1 - k);
            let mut out = Vec::new();
            for s in 0..=bound {
                for is in subsets(&(1..=k).collect::<Vec<_>>(), s) {
                    for js in subsets(&(k..=n).collect::<Vec<_>>(), s) {
                        // pair rows and columns in increasing order
                        out.push(is.iter().zip(&js).map(|(&i, &j)| Eps::Alpha(i, j)).collect());
                    }
                }
            }
            out
        }
        Series::B | Series::D
            if (c.lie.series == Series::B && k == n)
                || (c.lie.series == Series::D && (k == n || k == n - 1)) =>
        {
            let top = if c.lie.series == Series::B { n } else { n - 1 };
            let (b1, b2) = if c.lie.series == Series::B {
                (n.div_ceil(2), n / 2)
            } else {
                let odd = usize::from(n % 2 == 1);
                let even = usize::from(n.is_multiple_of(2));
                (n.div_ceil(2) - odd, n / 2 - even)
            };
            let mut out = Vec::new();
            // form 2: nested pairs only
            for ps in nested_pairs(1, top) {
                if ps.len() <= b2 {
                    out.push(ps.into_iter().map(|(i, j)| Eps::Pair(i, j)).collect());
                }
            }
            // form 1: one single ε_k below all nested pairs
            for kk in 1..=top {
                for ps in nested_pairs(kk + 1, top) {
                    if ps.len() < b1 {
                        let mut v = vec![Eps::Single(kk)];
                        v.extend(ps.into_iter().map(|(i, j)| Eps::Pair(i, j)));
                        out.push(v);
                    }
                }
            }
            out
        }
        _ => {
            return Err(Error::Precondition(format!(
                "no closed-form co-chain description for {c}"
            )))
        }
    };
    let support = standard_support(c.lie, c.fund_index);
    let mut out: Vec<CoChain> = sets
        .into_iter()
        .map(|es| {
            CoChain::new(
                es.into_iter()
                    .map(|e| {
                        let v = eps_coeffs(c, e);
                        support
                            .iter()
                            .position(|r| r.simple_coeffs == v)
                            .expect("ε root lies in the support")
                    })
                    .collect(),
            )
        })
        .collect();
    out.sort_by(|a, b| canonical_cmp(&a.indices, &b.indices));
    Ok(out)
}

fn subsets(pool: &[usize], s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(pool: &[usize], s: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            rec(pool, s, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(pool, s, 0, &mut Vec::new(), &mut out);
    out
}

/// supp₁: a 0/1 point of P(1) to its support, checked against every
/// maximal path.
pub fn supp1(paths: &[DyckPath], s: &[u32]) -> Result<CoChain> {
    if s.iter().any(|&x| x > 1) {
        return Err(Error::Precondition("entry larger than 1".into()));
    }
    for p in paths {
        let sum: u32 = p.indices.iter().map(|&i| s[i]).sum();
        if sum > 1 {
            let mut ix: Vec<usize> = p.indices.iter().map(|i| i + 1).collect();
            ix.sort_unstable();
            return Err(Error::Precondition(format!("violates path {ix:?}")));
        }
    }
    Ok(CoChain::new((0..s.len()).filter(|&i| s[i] == 1).collect()))
}

/// Indicator vector of a co-chain.
pub fn supp1_inverse(n: usize, c: &CoChain) -> Vec<u32> {
    let mut v = vec![0; n];
    for &i in &c.indices {
        v[i] = 1;
    }
    v
}
