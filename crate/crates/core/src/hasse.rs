//! The labelled directed graph on Δ₊^λ, k-chain detection, the rewritten
//! diagrams for (B_n, ω₁), (F₄, ω₄), (G₂, ω₁), and DOT/JSON export.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{case_order, coeff_digits, standard_support, CaseId, Root, Series, Variant};

/// Edge label: a simple root, an arbitrary positive root, or an opaque tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Label {
    /// 1-based simple root index.
    Simple(usize),
    Root(Vec<i64>),
    Tag(String),
}

impl Label {
    /// The root this label stands for, if it is one.
    pub fn as_root(&self, rank: usize) -> Option<Vec<i64>> {
        match self {
            Label::Simple(k) => {
                let mut v = vec![0; rank];
                v[k - 1] = 1;
                Some(v)
            }
            Label::Root(v) => Some(v.clone()),
            Label::Tag(_) => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Simple(k) => write!(f, "{k}"),
            Label::Root(v) => write!(f, "{}", coeff_digits(v)),
            Label::Tag(t) => write!(f, "{t}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: Label,
}

/// Vertices are Δ₊^λ in standard PBW numbering (vertex k is β_{k+1}).
/// `order` is a topological order of the graph: the PBW order for standard
/// diagrams, the normality order for the rewritten ones.
#[derive(Debug, Clone)]
pub struct HasseDiagram {
    pub case: CaseId,
    pub vertices: Vec<Root>,
    pub edges: Vec<Edge>,
    pub order: Vec<usize>,
}

/// Two consecutive edges γ → β → δ with the same simple label k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct KChain {
    pub gamma: usize,
    pub beta: usize,
    pub delta: usize,
    pub k: usize,
}

/// Signed simple-root expansion of the two formal F₄ labels, used only by
/// the straightening cascade: 𝔞 lowers by α₂ + 2α₃, 𝔟 gives back one α₃.
pub const F4_TAG_A: &str = "𝔞";
pub const F4_TAG_B: &str = "𝔟";

pub fn tag_expansion(tag: &str) -> Option<Vec<(Vec<i64>, i64)>> {
    match tag {
        F4_TAG_A => Some(vec![(vec![0, 1, 0, 0], 1), (vec![0, 0, 1, 0], 2)]),
        F4_TAG_B => Some(vec![(vec![0, 0, 1, 0], -1)]),
        _ => None,
    }
}

impl HasseDiagram {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.case.lie.rank
    }

    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.len()];
        for e in &self.edges {
            out[e.from].push(e.to);
        }
        for v in &mut out {
            v.sort_unstable();
        }
        out
    }

    pub fn label(&self, from: usize, to: usize) -> Option<&Label> {
        self.edges
            .iter()
            .find(|e| e.from == from && e.to == to)
            .map(|e| &e.label)
    }

    pub fn edge_map(&self) -> HashMap<(usize, usize), Label> {
        self.edges
            .iter()
            .map(|e| ((e.from, e.to), e.label.clone()))
            .collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.len()];
        for e in &self.edges {
            has_in[e.to] = true;
        }
        (0..self.len()).filter(|&v| !has_in[v]).collect()
    }

    /// Position of each vertex in `order`.
    pub fn order_rank(&self) -> Vec<usize> {
        let mut r = vec![0; self.len()];
        for (p, &v) in self.order.iter().enumerate() {
            r[v] = p;
        }
        r
    }

    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.vertices.iter().position(|r| r.simple_coeffs == coeffs)
    }
}

/// Build the diagram for a case: simple-difference edges for the standard
/// variant, the rewritten golden edge lists otherwise.
pub fn build_diagram(c: &CaseId) -> Result<HasseDiagram> {
    if c.variant != Variant::Standard && !c.has_modified() {
        return Err(Error::NoVariant(c.to_string()));
    }
    let vertices = standard_support(c.lie, c.fund_index);
    let rank = c.lie.rank;
    let edges = if c.variant == Variant::Standard {
        let mut edges = Vec::new();
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                let d: Vec<i64> = vertices[i]
                    .simple_coeffs
                    .iter()
                    .zip(&vertices[j].simple_coeffs)
                    .map(|(a, b)| a - b)
                    .collect();
                if d.iter().sum::<i64>() == 1 && d.iter().all(|&x| x >= 0) {
                    let k = d.iter().position(|&x| x == 1).expect("unit vector");
                    edges.push(Edge { from: i, to: j, label: Label::Simple(k + 1) });
                }
            }
        }
        edges
    } else {
        modified_edges(c, &vertices, rank)?
    };
    let order = match c.variant {
        Variant::Standard => (0..vertices.len()).collect(),
        _ => case_order(&c.with_variant(Variant::NormalityOrder)?),
    };
    Ok(HasseDiagram { case: *c, vertices, edges, order })
}

fn modified_edges(c: &CaseId, vertices: &[Root], rank: usize) -> Result<Vec<Edge>> {
    use Label::{Simple, Tag};
    // 1-based golden edge lists
    let list: Vec<(usize, usize, Label)> = match c.lie.series {
        Series::G => vec![
            (1, 3, Label::Root(vec![1, 1])),
            (3, 2, Simple(2)),
            (3, 4, Label::Root(vec![2, 1])),
            (2, 5, Label::Root(vec![2, 1])),
            (4, 5, Simple(2)),
        ],
        Series::F => vec![
            (1, 2, Simple(1)),
            (2, 3, Simple(2)),
            (2, 5, Tag(F4_TAG_A.into())),
            (3, 6, Label::Root(vec![0, 0, 1, 1])),
            (3, 4, Simple(3)),
            (5, 4, Tag(F4_TAG_B.into())),
            (6, 8, Simple(3)),
            (4, 8, Label::Root(vec![0, 0, 1, 1])),
            (4, 7, Label::Root(vec![0, 1, 1, 0])),
            (8, 10, Simple(2)),
            (7, 10, Simple(4)),
            (7, 9, Simple(1)),
            (10, 12, Simple(3)),
            (10, 11, Simple(1)),
            (9, 11, Simple(4)),
            (12, 13, Simple(1)),
            (11, 13, Simple(3)),
            (13, 14, Simple(2)),
            (14, 15, Simple(3)),
        ],
        Series::B if rank == 2 => vec![(2, 1, Tag("2'".into())), (2, 3, Simple(2))],
        Series::B => b_n_omega1_edges(vertices, rank),
        _ => return Err(Error::NoVariant(c.to_string())),
    };
    Ok(list
        .into_iter()
        .map(|(f, t, label)| Edge { from: f - 1, to: t - 1, label })
        .collect())
}

/// Spine β₁ → β₃ → … → β_{N−2}, then β_{N−2} → β₂ → β_N and
/// β_{N−2} → β_{N−1} → β_N. Labels on the spine are root differences, except
/// β₁ → β₃, β_r → β_{r+1} and β_{N−2} → β_{N−1}, which carry θ − target.
fn b_n_omega1_edges(vertices: &[Root], n: usize) -> Vec<(usize, usize, Label)> {
    let big_n = vertices.len();
    let r = n;
    let coeff = |k: usize| vertices[k - 1].simple_coeffs.clone();
    let diff = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    let label_of = |d: Vec<i64>| -> Label {
        if d.iter().sum::<i64>() == 1 {
            Label::Simple(d.iter().position(|&x| x == 1).expect("unit") + 1)
        } else {
            Label::Root(d)
        }
    };
    let theta = coeff(1);
    let mut out = Vec::new();
    let mut spine = vec![1];
    spine.extend(3..=big_n - 2);
    for w in spine.windows(2) {
        let (a, b) = (w[0], w[1]);
        let l = if a == 1 || (a == r && b == r + 1) {
            label_of(diff(&theta, &coeff(b)))
        } else {
            label_of(diff(&coeff(a), &coeff(b)))
        };
        out.push((a, b, l));
    }
    let tail = big_n - 2;
    out.push((tail, 2, label_of(diff(&theta, &coeff(2)))));
    out.push((2, big_n, label_of(diff(&coeff(2), &coeff(big_n)))));
    out.push((tail, big_n - 1, label_of(diff(&theta, &coeff(big_n - 1)))));
    out.push((big_n - 1, big_n, label_of(diff(&coeff(big_n - 1), &coeff(big_n)))));
    out
}

/// All γ → β → δ with equal simple labels, sorted.
pub fn k_chains(d: &HasseDiagram) -> Vec<KChain> {
    let mut out = Vec::new();
    for e1 in &d.edges {
        let Label::Simple(k) = e1.label else { continue };
        for e2 in &d.edges {
            if e2.from == e1.to && e2.label == Label::Simple(k) {
                out.push(KChain { gamma: e1.from, beta: e1.to, delta: e2.to, k });
            }
        }
    }
    out.sort();
    out
}

/// DOT text, one `rank=same` group per height, β-indices 1-based.
pub fn to_dot(d: &HasseDiagram) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{}\" {{", d.case);
    let _ = writeln!(s, "  rankdir=TB;");
    let _ = writeln!(s, "  node [shape=plaintext];");
    let mut levels: BTreeMap<std::cmp::Reverse<i64>, Vec<usize>> = BTreeMap::new();
    for (k, r) in d.vertices.iter().enumerate() {
        levels.entry(std::cmp::Reverse(r.height())).or_default().push(k);
    }
    for (k, r) in d.vertices.iter().enumerate() {
        let _ = writeln!(s, "  b{} [label=\"β{} ({})\"];", k + 1, k + 1, r.digits());
    }
    for vs in levels.values() {
        let names: Vec<String> = vs.iter().map(|k| format!("b{}", k + 1)).collect();
        let _ = writeln!(s, "  {{ rank=same; {}; }}", names.join("; "));
    }
    let mut edges = d.edges.clone();
    edges.sort_by_key(|e| (e.from, e.to));
    for e in edges {
        let _ = writeln!(s, "  b{} -> b{} [label=\"{}\"];", e.from + 1, e.to + 1, e.label);
    }
    s.push_str("}\n");
    s
}

#[derive(Serialize)]
struct JsonVertex {
    index: usize,
    simple_coeffs: Vec<i64>,
    coroot_coeffs: Vec<i64>,
    height: i64,
}

#[derive(Serialize)]
struct JsonEdge {
    from: usize,
    to: usize,
    label: String,
}

#[derive(Serialize)]
struct JsonDiagram {
    case: String,
    variant: &'static str,
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
    order: Vec<usize>,
}

/// JSON dump with 1-based indices.
pub fn to_json(d: &HasseDiagram) -> serde_json::Value {
    let mut edges = d.edges.clone();
    edges.sort_by_key(|e| (e.from, e.to));
    let j = JsonDiagram {
        case: d.case.to_string(),
        variant: d.case.variant.name(),
        vertices: d
            .vertices
            .iter()
            .enumerate()
            .map(|(k, r)| JsonVertex {
                index: k + 1,
                simple_coeffs: r.simple_coeffs.clone(),
                coroot_coeffs: r.coroot_coeffs.clone(),
                height: r.height(),
            })
            .collect(),
        edges: edges
            .iter()
            .map(|e| JsonEdge { from: e.from + 1, to: e.to + 1, label: e.label.to_string() })
            .collect(),
        order: d.order.iter().map(|k| k + 1).collect(),
    };
    serde_json::to_value(j).expect("serialisable")
}
