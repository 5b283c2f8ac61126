//! Shadow calculus for the differential operators ∂_ν on S(n⁻_λ): supports
//! and leading terms are exact, scalar coefficients are replaced by markers.
//! Tails are therefore supersets of the true supports.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::{degree, MonomialOrder, MultiExponent};
use crate::hasse::{build_diagram, k_chains, tag_expansion, HasseDiagram, Label};
use crate::paths::{maximal_paths, DyckPath};
use crate::polytope::{polytope_from_diagram, PolytopeH};
use crate::rootsys::{case_order, CaseId, RootSystem};

/// Operator product ∂_{ν₁}^{e₁}⋯∂_{ν_k}^{e_k} as (ν, e) pairs, applied in order.
pub type Schedule = Vec<(Vec<i64>, u32)>;

/// Formal coefficient: known to be a unit, or only known to be nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Marker {
    Unit,
    Nonzero,
}

/// Σ c_u f^u with the coefficients abstracted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ShadowSum {
    pub terms: BTreeMap<MultiExponent, Marker>,
}

impl ShadowSum {
    pub fn monomial(s: MultiExponent) -> ShadowSum {
        let mut terms = BTreeMap::new();
        terms.insert(s, Marker::Unit);
        ShadowSum { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A straightening relation f^head + Σ_{t ∈ tail} c_t f^t ∈ I.
#[derive(Debug, Clone, Serialize)]
pub struct Relation {
    pub head: MultiExponent,
    pub tail: Vec<MultiExponent>,
    /// Maximal path used, in traversal order.
    pub path: Vec<usize>,
    /// Operators applied to f_θ^{deg}, in order: (root, exponent).
    pub schedule: Schedule,
    /// True when the label cascade failed and a searched product was used.
    pub searched: bool,
}

/// One rewriting step, for the JSON-lines trace.
#[derive(Debug, Clone, Serialize)]
pub struct TraceStep {
    pub monomial: MultiExponent,
    pub path: Vec<usize>,
    pub head: MultiExponent,
    pub tail_size: usize,
    pub searched: bool,
}

/// Case data for the shadow calculus.
#[derive(Debug, Clone)]
pub struct Straightener {
    pub case: CaseId,
    pub diagram: HasseDiagram,
    pub paths: Vec<DyckPath>,
    pub order: MonomialOrder,
    roots: RootSystem,
    index: HashMap<Vec<i64>, usize>,
    edges: HashMap<(usize, usize), Label>,
}

impl Straightener {
    pub fn new(c: &CaseId) -> Result<Straightener> {
        let diagram = build_diagram(c)?;
        let index = diagram
            .vertices
            .iter()
            .enumerate()
            .map(|(k, r)| (r.simple_coeffs.clone(), k))
            .collect();
        Ok(Straightener {
            case: *c,
            paths: maximal_paths(&diagram),
            order: MonomialOrder::new(case_order(c)),
            roots: RootSystem::new(c.lie),
            index,
            edges: diagram.edge_map(),
            diagram,
        })
    }

    pub fn n(&self) -> usize {
        self.diagram.len()
    }

    pub fn polytope(&self, m: u32) -> PolytopeH {
        polytope_from_diagram(&self.diagram, m)
    }

    fn coeffs(&self, v: usize) -> &[i64] {
        &self.diagram.vertices[v].simple_coeffs
    }

    /// For each vertex β, the vertex β − ν if it lies in Δ₊^λ.
    pub fn moves(&self, nu: &[i64]) -> Result<Vec<Option<usize>>> {
        self.roots.root(nu)?;
        Ok((0..self.n())
            .map(|v| {
                let t: Vec<i64> = self.coeffs(v).iter().zip(nu).map(|(a, b)| a - b).collect();
                self.index.get(&t).copied()
            })
            .collect())
    }

    /// ∂_ν by the Leibniz rule: every way of replacing one factor f_β by f_{β−ν}.
    pub fn apply_diff(&self, nu: &[i64], x: &ShadowSum) -> Result<ShadowSum> {
        let mv = self.moves(nu)?;
        Ok(apply_moves(&mv, x))
    }

    /// Whether β ≺ β' implies β − ν ≺ β' − ν whenever both lie in Δ₊^λ.
    /// Always true for the PBW order; the rewritten spanning orders break it
    /// for some ν.
    pub fn order_compatible(&self, nu: &[i64]) -> Result<bool> {
        let mv = self.moves(nu)?;
        let rank = self.order.rank();
        let mut imgs: Vec<(usize, usize)> = (0..self.n()).filter_map(|v| mv[v].map(|w| (rank[v], rank[w]))).collect();
        imgs.sort_unstable();
        Ok(imgs.windows(2).all(|w| w[0].1 < w[1].1))
    }

    /// Order compatibility, β ≺ β − ν for every movable β, and no β − 2ν
    /// in Δ₊^λ. Under these the closed form for `leading_term` is exact.
    pub fn closed_form_applies(&self, nu: &[i64]) -> Result<bool> {
        let mv = self.moves(nu)?;
        let rank = self.order.rank();
        let upward = (0..self.n()).all(|v| mv[v].is_none_or(|w| rank[v] < rank[w]));
        let single = (0..self.n()).all(|v| mv[v].is_none_or(|w| mv[w].is_none()));
        Ok(upward && single && self.order_compatible(nu)?)
    }

    /// The maximum of ∂_ν^l f^s. When `closed_form_applies` this is the closed
    /// form: move l copies of the ≺-largest factor that ν can lower.
    /// Otherwise every split of the l lowerings over the factors is scored.
    pub fn leading_term(&self, nu: &[i64], l: u32, s: &[u32]) -> Result<MultiExponent> {
        let support: Vec<usize> = (0..s.len()).filter(|&i| s[i] > 0).collect();
        if !crate::paths::is_dyck(&self.paths, &support) {
            return Err(Error::Precondition("s is not supported on a Dyck path".into()));
        }
        let mv = self.moves(nu)?;
        let k = self
            .order
            .seq
            .iter()
            .rev()
            .copied()
            .find(|&v| s[v] > 0 && mv[v].is_some())
            .ok_or_else(|| Error::Precondition("no factor can be lowered by ν".into()))?;
        if l > s[k] {
            return Err(Error::Precondition(format!("l = {l} exceeds exponent {}", s[k])));
        }
        if !self.closed_form_applies(nu)? {
            return Ok(self.split_max(&mv, l, s));
        }
        let mut out = s.to_vec();
        out[k] -= l;
        out[mv[k].expect("movable")] += l;
        Ok(out)
    }

    /// Max over all ways to give each copy of each factor a lowering depth,
    /// depths summing to l.
    fn split_max(&self, mv: &[Option<usize>], l: u32, s: &[u32]) -> MultiExponent {
        let support: Vec<usize> = (0..s.len()).filter(|&i| s[i] > 0).collect();
        let mut best: Option<MultiExponent> = None;
        // per factor: split its s_v copies into counts by depth
        #[allow(clippy::too_many_arguments)]
        fn rec(
            st: &Straightener,
            mv: &[Option<usize>],
            support: &[usize],
            s: &[u32],
            idx: usize,
            left: u32,
            cur: &mut MultiExponent,
            best: &mut Option<MultiExponent>,
        ) {
            if idx == support.len() {
                if left == 0 && best.as_ref().is_none_or(|b| st.order.cmp(cur, b) == std::cmp::Ordering::Greater) {
                    *best = Some(cur.clone());
                }
                return;
            }
            let v = support[idx];
            let mut chain = vec![v];
            while let Some(w) = mv[*chain.last().expect("non-empty")] {
                if chain.len() as u32 > left {
                    break;
                }
                chain.push(w);
            }
            split(st, mv, support, s, idx, &chain, 0, s[v], left, cur, best);
        }
        #[allow(clippy::too_many_arguments)]
        fn split(
            st: &Straightener,
            mv: &[Option<usize>],
            support: &[usize],
            s: &[u32],
            idx: usize,
            chain: &[usize],
            depth: usize,
            copies: u32,
            left: u32,
            cur: &mut MultiExponent,
            best: &mut Option<MultiExponent>,
        ) {
            if depth + 1 == chain.len() || copies == 0 {
                // remaining copies stay at this depth
                cur[chain[depth]] += copies;
                let cost = copies * depth as u32;
                if cost <= left {
                    rec(st, mv, support, s, idx + 1, left - cost, cur, best);
                }
                cur[chain[depth]] -= copies;
                return;
            }
            for here in 0..=copies {
                let cost = here * depth as u32;
                if cost > left {
                    break;
                }
                cur[chain[depth]] += here;
                split(st, mv, support, s, idx, chain, depth + 1, copies - here, left - cost, cur, best);
                cur[chain[depth]] -= here;
            }
        }
        let mut cur = vec![0u32; s.len()];
        rec(self, mv, &support, s, 0, l, &mut cur, &mut best);
        best.expect("the closed-form split is always available")
    }

    /// First maximal path (canonical order) containing the given vertices.
    pub fn maximal_path_through(&self, set: &[usize]) -> Option<&DyckPath> {
        self.paths
            .iter()
            .find(|p| set.iter().all(|v| p.indices.contains(v)))
    }

    /// The plan read off the diagram labels along a maximal path.
    ///
    /// Every vertex of the path is reached from a parent by its incoming
    /// label: a root label ν names the parent β + ν (θ or an earlier path
    /// vertex), a formal tag lowers the previous vertex by its expansion.
    pub fn label_plan(&self, path: &[usize]) -> Result<Plan> {
        let theta = 0usize;
        let rank = self.case.lie.rank;
        let mut steps = Vec::new();
        for (i, &v) in path.iter().enumerate() {
            if v == theta {
                continue;
            }
            let label = if i == 0 {
                Label::Root(self.diff(theta, v))
            } else {
                self.edges
                    .get(&(path[i - 1], v))
                    .cloned()
                    .ok_or_else(|| Error::Cascade(format!("no edge β{} → β{}", path[i - 1] + 1, v + 1)))?
            };
            match label.as_root(rank) {
                Some(nu) => {
                    self.roots.root(&nu)?;
                    let target: Vec<i64> = self.coeffs(v).iter().zip(&nu).map(|(a, b)| a + b).collect();
                    let parent = std::iter::once(theta)
                        .chain(path[..i].iter().copied())
                        .rev()
                        .find(|&u| self.coeffs(u) == target.as_slice())
                        .ok_or_else(|| {
                            Error::Cascade(format!("label {label} into β{} has no parent on the path", v + 1))
                        })?;
                    steps.push(PlanStep { child: v, parent, ops: vec![(nu, 1)] });
                }
                None => {
                    let Label::Tag(t) = &label else { unreachable!() };
                    let ops = tag_expansion(t).ok_or_else(|| Error::Cascade(format!("unknown tag {t}")))?;
                    steps.push(PlanStep { child: v, parent: path[i - 1], ops });
                }
            }
        }
        Ok(Plan { steps })
    }

    fn diff(&self, a: usize, b: usize) -> Vec<i64> {
        self.coeffs(a).iter().zip(self.coeffs(b)).map(|(x, y)| x - y).collect()
    }

    /// Operator schedule of a plan for the exponent s: each step is applied
    /// to as many factors as end in its subtree.
    pub fn schedule(&self, plan: &Plan, s: &[u32]) -> Result<Schedule> {
        let mut sub: HashMap<usize, i64> = HashMap::new();
        sub.insert(0, i64::from(s[0]));
        for st in &plan.steps {
            sub.insert(st.child, i64::from(s[st.child]));
        }
        for st in plan.steps.iter().rev() {
            let add = sub[&st.child];
            *sub.entry(st.parent).or_insert(0) += add;
        }
        let mut sched: Vec<(Vec<i64>, i64)> = Vec::new();
        for st in &plan.steps {
            for (nu, c) in &st.ops {
                let amount = c * sub[&st.child];
                match sched.last_mut() {
                    Some((last, e)) if last == nu => *e += amount,
                    _ => sched.push((nu.clone(), amount)),
                }
            }
        }
        sched
            .into_iter()
            .filter(|(_, e)| *e != 0)
            .map(|(nu, e)| {
                u32::try_from(e)
                    .map(|e| (nu, e))
                    .map_err(|_| Error::Cascade("negative operator exponent".into()))
            })
            .collect()
    }

    /// Apply a schedule to f_θ^{total}.
    pub fn run(&self, sched: &[(Vec<i64>, u32)], total: u32) -> Result<ShadowSum> {
        let mut x = vec![0u32; self.n()];
        x[0] = total;
        let mut acc = ShadowSum::monomial(x);
        for (nu, e) in sched {
            let mv = self.moves(nu)?;
            for _ in 0..*e {
                acc = apply_moves(&mv, &acc);
            }
        }
        Ok(acc)
    }

    /// Run the label cascade on f_θ^{|s|} along a maximal path containing supp(s).
    pub fn cascade(&self, s: &[u32], path: &[usize]) -> Result<(ShadowSum, Schedule)> {
        let sched = self.schedule(&self.label_plan(path)?, s)?;
        let total = path.iter().map(|&v| s[v]).sum();
        Ok((self.run(&sched, total)?, sched))
    }

    /// Head of the operator product given by `plan`, if it is s.
    fn try_plan(&self, plan: &Plan, s: &[u32], total: u32) -> Result<Option<(ShadowSum, Schedule)>> {
        let sched = match self.schedule(plan, s) {
            Ok(x) => x,
            Err(Error::Cascade(_)) => return Ok(None),
            Err(e) => return Err(e),
        };
        let a = self.run(&sched, total)?;
        let ok = self.order.max(a.terms.keys()).is_some_and(|h| h.as_slice() == s);
        Ok(ok.then_some((a, sched)))
    }

    /// Iterative-deepening search over products ∂_{ν₁}^{e₁}⋯∂_{ν_k}^{e_k}
    /// of total weight |s|θ − Σ s_β β whose maximum on f_θ^{|s|} is s.
    fn search_schedule(&self, s: &[u32], total: u32) -> Option<(ShadowSum, Schedule)> {
        let mut x = vec![0u32; self.n()];
        x[0] = total;
        let start = ShadowSum::monomial(x);
        let mut need: Vec<i64> = self.coeffs(0).iter().map(|c| c * i64::from(total)).collect();
        for (v, &e) in s.iter().enumerate() {
            for (a, c) in need.iter_mut().zip(self.coeffs(v)) {
                *a -= c * i64::from(e);
            }
        }
        let moves: Vec<(Vec<i64>, Vec<Option<usize>>)> = self
            .roots
            .positive
            .iter()
            .map(|r| (r.simple_coeffs.clone(), self.moves(&r.simple_coeffs).expect("positive root")))
            .filter(|(_, mv)| mv.iter().any(Option::is_some))
            .collect();
        let mut budget = SEARCH_BUDGET;
        for depth in 1..=SEARCH_DEPTH {
            let mut sched = Vec::new();
            let mut seen = HashMap::new();
            if let Some(a) = self.dfs(&moves, &start, &need, s, depth, &mut sched, &mut seen, &mut budget) {
                return Some((a, sched));
            }
            if budget == 0 {
                break;
            }
        }
        None
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        moves: &[(Vec<i64>, Vec<Option<usize>>)],
        x: &ShadowSum,
        need: &[i64],
        s: &[u32],
        depth: usize,
        sched: &mut Schedule,
        seen: &mut HashMap<Vec<MultiExponent>, usize>,
        budget: &mut usize,
    ) -> Option<ShadowSum> {
        if need.iter().all(|&a| a == 0) {
            let hit = self.order.max(x.terms.keys()).is_some_and(|h| h.as_slice() == s);
            return hit.then(|| x.clone());
        }
        if depth == 0 {
            return None;
        }
        // the same support reached by another product: only revisit with more depth left
        let key: Vec<MultiExponent> = x.terms.keys().cloned().collect();
        match seen.get(&key) {
            Some(&d) if d >= depth => return None,
            _ => {
                seen.insert(key, depth);
            }
        }
        for (nu, mv) in moves {
            if sched.last().is_some_and(|(last, _)| last == nu) {
                continue;
            }
            let mut rest = need.to_vec();
            let mut y = x.clone();
            for e in 1.. {
                for (a, b) in rest.iter_mut().zip(nu) {
                    *a -= b;
                }
                if rest.iter().any(|&a| a < 0) || *budget == 0 {
                    break;
                }
                *budget -= 1;
                y = apply_moves(mv, &y);
                if y.is_empty() {
                    break;
                }
                sched.push((nu.clone(), e));
                if let Some(a) = self.dfs(moves, &y, &rest, s, depth - 1, sched, seen, budget) {
                    return Some(a);
                }
                sched.pop();
            }
        }
        None
    }

    /// Straightening relation for s supported on `path` with Σ_path s > m.
    ///
    /// The label cascade is tried first. When its maximum is not s, an
    /// operator product is searched for.
    pub fn straighten_relation(&self, s: &[u32], path: &DyckPath, m: u32) -> Result<Relation> {
        if !k_chains(&self.diagram).is_empty() {
            return Err(Error::NeedsModified(self.case.to_string()));
        }
        if s.iter().enumerate().any(|(v, &x)| x > 0 && !path.indices.contains(&v)) {
            return Err(Error::Precondition("s is not supported on the path".into()));
        }
        let total: u32 = path.indices.iter().map(|&v| s[v]).sum();
        if total <= m {
            return Err(Error::Precondition(format!("path sum {total} is within the bound {m}")));
        }
        let full = self
            .maximal_path_through(&path.indices)
            .ok_or_else(|| Error::Precondition("not a Dyck path".into()))?
            .indices
            .clone();
        let finish = |a: ShadowSum, schedule, searched| {
            let head = s.to_vec();
            let tail = a.terms.into_keys().filter(|t| t != &head).collect();
            Relation { head, tail, path: full.clone(), schedule, searched }
        };
        if let Some((a, sched)) = self.try_plan(&self.label_plan(&full)?, s, total)? {
            return Ok(finish(a, sched, false));
        }
        match self.search_schedule(s, total) {
            Some((a, sched)) => Ok(finish(a, sched, true)),
            None => {
                let (a, _) = self.cascade(s, &full)?;
                let head = self.order.max(a.terms.keys()).cloned().unwrap_or_default();
                Err(Error::Cascade(format!(
                    "leading monomial {head:?} differs from {s:?} on path {:?}",
                    full.iter().map(|v| v + 1).collect::<Vec<_>>()
                )))
            }
        }
    }
}

const SEARCH_BUDGET: usize = 200_000;
const SEARCH_DEPTH: usize = 8;

/// One edge of a plan: reach `child` from `parent` by the operators `ops`
/// (root, multiplier of the subtree sum).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanStep {
    pub child: usize,
    pub parent: usize,
    pub ops: Vec<(Vec<i64>, i64)>,
}

/// A rooted forest below θ with its edges in application order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Plan {
    pub steps: Vec<PlanStep>,
}

fn apply_moves(mv: &[Option<usize>], x: &ShadowSum) -> ShadowSum {
    let mut out = BTreeMap::new();
    for u in x.terms.keys() {
        for (b, target) in mv.iter().enumerate() {
            if let Some(t) = target {
                if u[b] > 0 {
                    let mut w = u.clone();
                    w[b] -= 1;
                    w[*t] += 1;
                    out.insert(w, Marker::Nonzero);
                }
            }
        }
    }
    ShadowSum { terms: out }
}

/// Rewrites monomials into S(m) with memoised relations.
#[derive(Debug)]
pub struct Rewriter {
    pub st: Straightener,
    pub m: u32,
    poly: PolytopeH,
    succ: HashMap<MultiExponent, Vec<MultiExponent>>,
    closure: HashMap<MultiExponent, BTreeSet<MultiExponent>>,
    pub steps: usize,
    /// Relations that needed a searched product.
    pub searched: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Rewrite {
    pub basis: BTreeSet<MultiExponent>,
    pub trace: Vec<TraceStep>,
}

impl Rewriter {
    pub fn new(c: &CaseId, m: u32) -> Result<Rewriter> {
        let st = Straightener::new(c)?;
        let poly = st.polytope(m);
        Ok(Rewriter { st, m, poly, succ: HashMap::new(), closure: HashMap::new(), steps: 0, searched: 0 })
    }

    pub fn in_basis(&self, t: &[u32]) -> bool {
        self.poly.contains(t)
    }

    /// One rewriting step for t ∉ S(m): the smallest violating maximal path,
    /// the relation for t restricted to it, and the off-path factors put back.
    pub fn step(&self, t: &[u32]) -> Result<(TraceStep, Vec<MultiExponent>)> {
        let p = self
            .st
            .paths
            .iter()
            .find(|p| p.indices.iter().map(|&v| t[v]).sum::<u32>() > self.m)
            .ok_or_else(|| Error::Precondition("monomial already in S(m)".into()))?;
        let mut restricted = vec![0u32; t.len()];
        for &v in &p.indices {
            restricted[v] = t[v];
        }
        let rel = self.st.straighten_relation(&restricted, p, self.m)?;
        let off: Vec<u32> = t.iter().zip(&restricted).map(|(a, b)| a - b).collect();
        let next: Vec<MultiExponent> = rel
            .tail
            .iter()
            .map(|u| u.iter().zip(&off).map(|(a, b)| a + b).collect())
            .collect();
        for w in &next {
            if self.st.order.cmp(w, t) != std::cmp::Ordering::Less {
                return Err(Error::Cascade(format!("rewrite of {t:?} did not decrease")));
            }
        }
        let step = TraceStep {
            monomial: t.to_vec(),
            path: rel.path.clone(),
            head: rel.head.clone(),
            tail_size: next.len(),
            searched: rel.searched,
        };
        Ok((step, next))
    }

    fn successors(&mut self, t: &MultiExponent) -> Result<Vec<MultiExponent>> {
        if let Some(v) = self.succ.get(t) {
            return Ok(v.clone());
        }
        let (step, next) = self.step(t)?;
        self.steps += 1;
        self.searched += usize::from(step.searched);
        self.succ.insert(t.clone(), next.clone());
        Ok(next)
    }

    /// The S(m) monomials reached from t. Memoised across calls.
    pub fn rewrite_to_basis(&mut self, t: &[u32]) -> Result<BTreeSet<MultiExponent>> {
        let root = t.to_vec();
        let mut stack: Vec<(MultiExponent, bool)> = vec![(root.clone(), false)];
        while let Some((u, expanded)) = stack.pop() {
            if self.closure.contains_key(&u) {
                continue;
            }
            if self.in_basis(&u) {
                self.closure.insert(u.clone(), BTreeSet::from([u]));
                continue;
            }
            let next = self.successors(&u)?;
            if expanded {
                let mut acc = BTreeSet::new();
                for w in &next {
                    acc.extend(self.closure[w].iter().cloned());
                }
                self.closure.insert(u, acc);
            } else {
                stack.push((u, true));
                for w in next {
                    if !self.closure.contains_key(&w) {
                        stack.push((w, false));
                    }
                }
            }
        }
        Ok(self.closure[&root].clone())
    }

    /// Unmemoised rewrite of a single monomial that records every step.
    pub fn rewrite_traced(&self, t: &[u32]) -> Result<Rewrite> {
        let mut basis = BTreeSet::new();
        let mut trace = Vec::new();
        let mut seen: BTreeSet<MultiExponent> = BTreeSet::new();
        let mut work = vec![t.to_vec()];
        while let Some(u) = work.pop() {
            if !seen.insert(u.clone()) {
                continue;
            }
            if self.in_basis(&u) {
                basis.insert(u);
                continue;
            }
            let (step, next) = self.step(&u)?;
            trace.push(step);
            work.extend(next);
        }
        Ok(Rewrite { basis, trace })
    }
}

/// Brute-force ≻-maximum of ∂_ν^l f^s.
pub fn brute_max(st: &Straightener, nu: &[i64], l: u32, s: &[u32]) -> Result<Option<MultiExponent>> {
    let mut x = ShadowSum::monomial(s.to_vec());
    for _ in 0..l {
        x = st.apply_diff(nu, &x)?;
    }
    Ok(st.order.max(x.terms.keys()).cloned())
}

/// Degree is preserved by every operator.
pub fn degrees_preserved(x: &ShadowSum, d: u32) -> bool {
    x.terms.keys().all(|u| degree(u) == d)
}
