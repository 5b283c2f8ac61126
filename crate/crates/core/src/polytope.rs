//! P(mω) from maximal Dyck paths, redundancy removal, lattice points,
//! Minkowski sums and the normality certificate (brute force and peeling).

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::{degree, MultiExponent};
use crate::hasse::{build_diagram, HasseDiagram};
use crate::paths::{cochains, maximal_paths, CoChain};
use crate::rootsys::{case_order, CaseId, Variant};

/// {x ≥ 0 : Σ_{j∈P} x_j ≤ bound for every support P}. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolytopeH {
    pub dim: usize,
    pub supports: Vec<Vec<usize>>,
    pub bound: u32,
}

impl PolytopeH {
    pub fn with_bound(&self, m: u32) -> PolytopeH {
        PolytopeH { bound: m, ..self.clone() }
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        x.len() == self.dim
            && self
                .supports
                .iter()
                .all(|p| p.iter().map(|&j| x[j]).sum::<u32>() <= self.bound)
    }

    /// Supports as sets, sorted lexicographically (for comparisons).
    pub fn support_set(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self
            .supports
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q.sort_unstable();
                q
            })
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

/// One inequality per maximal path of the diagram.
pub fn polytope_from_diagram(d: &HasseDiagram, m: u32) -> PolytopeH {
    let mut supports: Vec<Vec<usize>> = maximal_paths(d)
        .into_iter()
        .map(|p| {
            let mut s = p.indices;
            s.sort_unstable();
            s
        })
        .collect();
    supports.sort();
    PolytopeH { dim: d.len(), supports, bound: m }
}

pub fn build_polytope(c: &CaseId, m: u32) -> Result<PolytopeH> {
    c.require_ffl()?;
    Ok(polytope_from_diagram(&build_diagram(c)?, m))
}

/// Certificate that an inequality is not implied by the others: the 0/1
/// point `point` lies in the polytope without it at bound `bound`, and
/// violates it there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub support: Vec<usize>,
    pub point: MultiExponent,
    pub bound: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct Reduction {
    pub polytope: PolytopeH,
    pub witnesses: Vec<Witness>,
}

/// Drop supports contained in another support, then certify each survivor
/// with an explicit witness point.
pub fn reduce_nonredundant(p: &PolytopeH) -> Reduction {
    let sets = p.support_set();
    let keep: Vec<Vec<usize>> = sets
        .iter()
        .filter(|a| {
            !sets
                .iter()
                .any(|b| b != *a && a.iter().all(|x| b.binary_search(x).is_ok()))
        })
        .cloned()
        .collect();
    let mut witnesses = Vec::new();
    let mut certified = Vec::new();
    for (i, a) in keep.iter().enumerate() {
        // k = largest overlap with another inequality; 1_A sits on every
        // other hyperplane at bound k and exceeds bound k on its own
        let k = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, b)| a.iter().filter(|x| b.binary_search(x).is_ok()).count())
            .max()
            .unwrap_or(0) as u32;
        let mut x = vec![0u32; p.dim];
        for &j in a {
            x[j] = 1;
        }
        let others_ok = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .all(|(_, b)| b.iter().map(|&j| x[j]).sum::<u32>() <= k);
        if others_ok && (a.len() as u32) > k {
            certified.push(a.clone());
            witnesses.push(Witness { support: a.clone(), point: x, bound: k });
        }
    }
    Reduction {
        polytope: PolytopeH { dim: p.dim, supports: certified, bound: p.bound },
        witnesses,
    }
}

/// Lattice points of a polytope, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticePointSet {
    pub dim: usize,
    pub points: Vec<MultiExponent>,
}

impl LatticePointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn as_set(&self) -> HashSet<&MultiExponent> {
        self.points.iter().collect()
    }
}

/// Depth-first enumeration over coordinates 1..N with per-inequality
/// residuals.
pub fn lattice_points(p: &PolytopeH) -> LatticePointSet {
    let n = p.dim;
    let mut member: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, s) in p.supports.iter().enumerate() {
        for &j in s {
            member[j].push(k);
        }
    }
    let mut out = Vec::new();
    let mut residual = vec![p.bound; p.supports.len()];
    let mut x = vec![0u32; n];
    fn rec(
        j: usize,
        n: usize,
        bound: u32,
        member: &[Vec<usize>],
        residual: &mut [u32],
        x: &mut MultiExponent,
        out: &mut Vec<MultiExponent>,
    ) {
        if j == n {
            out.push(x.clone());
            return;
        }
        let cap = member[j].iter().map(|&k| residual[k]).min().unwrap_or(bound);
        for v in 0..=cap {
            x[j] = v;
            for &k in &member[j] {
                residual[k] -= v;
            }
            rec(j + 1, n, bound, member, residual, x, out);
            for &k in &member[j] {
                residual[k] += v;
            }
        }
        x[j] = 0;
    }
    rec(0, n, p.bound, &member, &mut residual, &mut x, &mut out);
    LatticePointSet { dim: n, points: out }
}

pub fn minkowski_sum(a: &LatticePointSet, b: &LatticePointSet) -> Result<LatticePointSet> {
    if a.dim != b.dim {
        return Err(Error::Dimension(a.dim, b.dim));
    }
    let mut set: Vec<MultiExponent> = a
        .points
        .par_iter()
        .flat_map_iter(|x| {
            b.points
                .iter()
                .map(move |y| x.iter().zip(y).map(|(p, q)| p + q).collect::<MultiExponent>())
        })
        .collect();
    set.par_sort_unstable();
    set.dedup();
    Ok(LatticePointSet { dim: a.dim, points: set })
}

/// Total order z₁ ≻ z₂ ≻ … on the vertices; `seq[0]` is the maximum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZOrder {
    pub seq: Vec<usize>,
}

impl ZOrder {
    /// Reverse of the case's ≺ order: θ is the maximum. Rewritten cases use
    /// their normality order.
    pub fn for_case(c: &CaseId) -> Result<ZOrder> {
        let c = if c.has_modified() && c.variant != Variant::Standard {
            c.with_variant(Variant::NormalityOrder)?
        } else {
            *c
        };
        Ok(ZOrder { seq: case_order(&c) })
    }

    pub fn rank(&self) -> Vec<usize> {
        let mut r = vec![0; self.seq.len()];
        for (p, &v) in self.seq.iter().enumerate() {
            r[v] = p;
        }
        r
    }
}

/// Non-homogeneous lexicographic order on sets given as z-rank lists sorted
/// ascending (best element first): compare positionally; with an equal
/// prefix the longer list is greater.
pub fn set_order_cmp(a: &[usize], b: &[usize]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match y.cmp(x) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Data needed for repeated decomposition steps on one case.
#[derive(Debug, Clone)]
pub struct Peeler {
    pub polytope: PolytopeH,
    pub cochains: Vec<CoChain>,
    pub zrank: Vec<usize>,
}

impl Peeler {
    pub fn new(c: &CaseId) -> Result<Peeler> {
        c.require_ffl()?;
        let d = build_diagram(c)?;
        let z = ZOrder::for_case(c)?;
        Ok(Peeler { polytope: polytope_from_diagram(&d, 1), cochains: cochains(&d)?, zrank: z.rank() })
    }

    /// ∇ = co-chains inside supp(s).
    pub fn nabla(&self, s: &[u32]) -> Vec<&CoChain> {
        self.cochains
            .iter()
            .filter(|c| c.indices.iter().all(|&i| s[i] > 0))
            .collect()
    }

    /// M_s: maximum of ∇ in the set order, as a vertex list.
    pub fn max_set(&self, s: &[u32]) -> Vec<usize> {
        let key = |c: &CoChain| {
            let mut r: Vec<usize> = c.indices.iter().map(|&i| self.zrank[i]).collect();
            r.sort_unstable();
            r
        };
        self.nabla(s)
            .into_iter()
            .max_by(|a, b| set_order_cmp(&key(a), &key(b)))
            .map(|c| c.indices.clone())
            .unwrap_or_default()
    }

    /// One peeling step: t¹ = indicator of M_s.
    pub fn decompose_step(&self, s: &[u32], m: u32) -> Result<MultiExponent> {
        if degree(s) == 0 {
            return Err(Error::Precondition("s = 0".into()));
        }
        if !self.polytope.with_bound(m).contains(s) {
            return Err(Error::Precondition("s is not in S(m)".into()));
        }
        let mut t = vec![0u32; s.len()];
        for i in self.max_set(s) {
            t[i] = 1;
        }
        Ok(t)
    }
}

pub fn decompose_step(s: &[u32], c: &CaseId, m: u32) -> Result<MultiExponent> {
    Peeler::new(c)?.decompose_step(s, m)
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalityLevel {
    pub m: u32,
    pub points: usize,
    pub minkowski_points: usize,
    pub brute_force_equal: bool,
    pub peeling_ok: bool,
    pub counterexample: Option<MultiExponent>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalityCertificate {
    pub case: String,
    pub levels: Vec<NormalityLevel>,
}

impl NormalityCertificate {
    pub fn ok(&self) -> bool {
        self.levels.iter().all(|l| l.brute_force_equal && l.peeling_ok)
    }
}

/// For m = 1..=m_max check S(m) = S(m−1) + S(1) by set equality and by
/// peeling every point with `decompose_step`.
pub fn certify_normality(c: &CaseId, m_max: u32) -> Result<NormalityCertificate> {
    let peeler = Peeler::new(c)?;
    let s1 = lattice_points(&peeler.polytope.with_bound(1));
    let s1_set: HashSet<&MultiExponent> = s1.as_set();
    let mut prev = lattice_points(&peeler.polytope.with_bound(0));
    let mut levels = Vec::new();
    for m in 1..=m_max {
        let cur = lattice_points(&peeler.polytope.with_bound(m));
        let sum = minkowski_sum(&prev, &s1)?;
        let brute = sum.points == cur.points;
        let prev_set: HashSet<&MultiExponent> = prev.as_set();
        let bad = cur.points.par_iter().find_any(|s| {
            if degree(s) == 0 {
                return false;
            }
            match peeler.decompose_step(s, m) {
                Ok(t) => {
                    let rest: MultiExponent = s.iter().zip(&t).map(|(a, b)| a.wrapping_sub(*b)).collect();
                    let rest_ok = s.iter().zip(&t).all(|(a, b)| a >= b) && prev_set.contains(&rest);
                    !(degree(&t) > 0 && s1_set.contains(&t) && rest_ok)
                }
                Err(_) => true,
            }
        });
        levels.push(NormalityLevel {
            m,
            points: cur.len(),
            minkowski_points: sum.len(),
            brute_force_equal: brute,
            peeling_ok: bad.is_none(),
            counterexample: bad.cloned(),
        });
        prev = cur;
    }
    Ok(NormalityCertificate { case: c.to_string(), levels })
}

/// One line per inequality: 1-based sorted indices, then the bound.
pub fn to_text(p: &PolytopeH) -> String {
    let mut s = String::new();
    for sup in p.support_set() {
        let ix: Vec<String> = sup.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(s, "{} <= {}", ix.join(" "), p.bound);
    }
    s
}

/// `align*` block in the layout of the printed tables.
pub fn to_latex(p: &PolytopeH) -> String {
    let mut s = String::from("\\begin{align*}\n");
    for sup in p.support_set() {
        let terms: Vec<String> = sup
            .iter()
            .map(|i| if i + 1 < 10 { format!("x_{}", i + 1) } else { format!("x_{{{}}}", i + 1) })
            .collect();
        let _ = writeln!(s, "&{}\\leq m\\\\", terms.join("+"));
    }
    s.push_str("\\end{align*}\n");
    s
}

/// CSV with header x1..xN.
pub fn points_csv(points: &LatticePointSet) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header: Vec<String> = (1..=points.dim).map(|i| format!("x{i}")).collect();
    w.write_record(&header).expect("in-memory write");
    for p in &points.points {
        w.write_record(p.iter().map(|v| v.to_string())).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}
