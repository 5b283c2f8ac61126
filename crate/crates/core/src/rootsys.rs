//! Cartan data, positive roots, coroots, the PBW total order and Weyl's
//! dimension formula.
//!
//! Node numbering is Bourbaki throughout. In the E series node 2 is the
//! branch node: the chain is 1-3-4-5-6(-7-8) with 2 attached to 4.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn from_char(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A simple Lie algebra, given by its Dynkin series and rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LieType {
    pub series: Series,
    pub rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<LieType> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(LieType { series, rank })
        } else {
            Err(Error::InvalidType(format!("{series}{rank}")))
        }
    }

    /// Half squared lengths of the simple roots, up to a common factor.
    /// Long roots get the larger value.
    fn norms(&self) -> Vec<i64> {
        let n = self.rank;
        match self.series {
            Series::B => (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect(),
            Series::C => (0..n).map(|i| if i + 1 == n { 2 } else { 1 }).collect(),
            Series::F => vec![2, 2, 1, 1],
            Series::G => vec![1, 3],
            _ => vec![1; n],
        }
    }

    /// Edges of the Dynkin diagram, 0-based.
    fn dynkin_edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.series {
            Series::A | Series::B | Series::C | Series::F | Series::G => {
                (0..n - 1).map(|i| (i, i + 1)).collect()
            }
            Series::D => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Series::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Symmetric bilinear form on simple roots, (αᵢ,αᵢ) = 2·normᵢ.
    fn form(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let norms = self.norms();
        let mut b = vec![vec![0i64; n]; n];
        for i in 0..n {
            b[i][i] = 2 * norms[i];
        }
        for (i, j) in self.dynkin_edges() {
            let v = -norms[i].max(norms[j]);
            b[i][j] = v;
            b[j][i] = v;
        }
        b
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<LieType> {
        let mut chars = s.trim().chars();
        let series = chars
            .next()
            .and_then(Series::from_char)
            .ok_or_else(|| Error::Parse(s.to_string()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| Error::Parse(s.to_string()))?;
        LieType::new(series, rank)
    }
}

/// Cartan matrix with entries ⟨αᵢ, αⱼ∨⟩ = 2(αᵢ,αⱼ)/(αⱼ,αⱼ).
pub fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let b = t.form();
    let n = t.rank;
    (0..n)
        .map(|i| (0..n).map(|j| 2 * b[i][j] / b[j][j]).collect())
        .collect()
}

/// A positive root written over the simple roots, with its coroot written
/// over the simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Root {
    pub simple_coeffs: Vec<i64>,
    pub coroot_coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coeffs.iter().sum()
    }

    /// Compact digit string, e.g. `0110`.
    pub fn digits(&self) -> String {
        coeff_digits(&self.simple_coeffs)
    }
}

pub fn coeff_digits(c: &[i64]) -> String {
    c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(if c.iter().any(|&x| x > 9) { "," } else { "" })
}

/// The PBW total order on roots: `Less` means `a` comes first (a ≺ b).
///
/// Greater height comes first. Ties are broken by comparing simple
/// coefficients starting from the highest simple index; the larger entry
/// comes first. This reproduces the numbering of every root table we
/// check against (A4 ω₃, E₆ ω₆, E₇ ω₇, F₄ ω₄, B₄ ω₄).
pub fn pbw_cmp(a: &[i64], b: &[i64]) -> Ordering {
    let ha: i64 = a.iter().sum();
    let hb: i64 = b.iter().sum();
    hb.cmp(&ha).then_with(|| {
        for k in (0..a.len()).rev() {
            match b[k].cmp(&a[k]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

/// Root system data for one Lie type, with Δ₊ sorted in PBW order.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub lie: LieType,
    pub cartan: Vec<Vec<i64>>,
    form: Vec<Vec<i64>>,
    pub positive: Vec<Root>,
}

impl RootSystem {
    pub fn new(lie: LieType) -> RootSystem {
        let n = lie.rank;
        let form = lie.form();
        let cartan = cartan_matrix(lie);
        let simple: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut all: HashSet<Vec<i64>> = simple.iter().cloned().collect();
        let mut layer = simple.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    // ⟨β, αᵢ∨⟩ = Σⱼ rⱼ ⟨αⱼ, αᵢ∨⟩
                    let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                    let mut q = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if all.contains(&probe) {
                            q += 1;
                        } else {
                            break;
                        }
                    }
                    if q - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if all.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            layer = next;
        }
        let mut positive: Vec<Root> = all
            .into_iter()
            .map(|c| {
                let norm = quad(&form, &c);
                let coroot = (0..n)
                    .map(|i| {
                        let num = c[i] * form[i][i];
                        debug_assert_eq!(num % norm, 0);
                        num / norm
                    })
                    .collect();
                Root { simple_coeffs: c, coroot_coeffs: coroot }
            })
            .collect();
        positive.sort_by(|a, b| pbw_cmp(&a.simple_coeffs, &b.simple_coeffs));
        RootSystem { lie, cartan, form, positive }
    }

    pub fn rank(&self) -> usize {
        self.lie.rank
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive[0]
    }

    pub fn find(&self, coeffs: &[i64]) -> Option<&Root> {
        self.positive.iter().find(|r| r.simple_coeffs == coeffs)
    }

    pub fn root(&self, coeffs: &[i64]) -> Result<&Root> {
        self.find(coeffs).ok_or_else(|| Error::NotARoot(coeffs.to_vec()))
    }

    /// (β,β) in the internal normalisation (shortest simple root has 2).
    pub fn squared_length(&self, coeffs: &[i64]) -> i64 {
        quad(&self.form, coeffs)
    }
}

fn quad(form: &[Vec<i64>], c: &[i64]) -> i64 {
    let n = c.len();
    let mut s = 0;
    for i in 0..n {
        for j in 0..n {
            s += c[i] * c[j] * form[i][j];
        }
    }
    s
}

/// Positive roots of `t` in PBW order.
pub fn positive_roots(t: LieType) -> Vec<Root> {
    RootSystem::new(t).positive
}

pub fn highest_root(t: LieType) -> Root {
    RootSystem::new(t).positive[0].clone()
}

/// Dominant integral weight, written over the fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Weight {
    pub fund_coeffs: Vec<i64>,
}

impl Weight {
    pub fn fundamental(rank: usize, i: usize, m: i64) -> Weight {
        let mut c = vec![0; rank];
        c[i - 1] = m;
        Weight { fund_coeffs: c }
    }
}

/// ⟨λ, β∨⟩.
pub fn pairing(lambda: &Weight, beta: &Root) -> i64 {
    lambda
        .fund_coeffs
        .iter()
        .zip(&beta.coroot_coeffs)
        .map(|(a, b)| a * b)
        .sum()
}

/// dim V(λ) by Weyl's formula, in exact big-integer arithmetic.
pub fn weyl_dim(lambda: &Weight, t: LieType) -> Result<BigUint> {
    if lambda.fund_coeffs.len() != t.rank {
        return Err(Error::Precondition(format!(
            "weight has {} entries, rank is {}",
            lambda.fund_coeffs.len(),
            t.rank
        )));
    }
    if lambda.fund_coeffs.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant);
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for beta in positive_roots(t) {
        let rho: i64 = beta.coroot_coeffs.iter().sum();
        let shifted = rho + pairing(lambda, &beta);
        num *= BigUint::from(shifted as u64);
        den *= BigUint::from(rho as u64);
    }
    debug_assert!((&num % &den) == BigUint::from(0u8));
    Ok(num / den)
}

/// Convenience: dim V(m ωᵢ) as u64 (panics past u64, which no solved case reaches).
pub fn weyl_dim_rect(t: LieType, i: usize, m: i64) -> u64 {
    weyl_dim(&Weight::fundamental(t.rank, i, m), t)
        .expect("dominant weight")
        .to_u64()
        .expect("dimension fits in u64")
}

/// Which diagram/order flavour a case uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    Standard,
    /// Rewritten diagram with the order used for spanning (straightening).
    Modified,
    /// Rewritten diagram with the order used for normality peeling.
    NormalityOrder,
}

impl Variant {
    pub fn parse(s: &str) -> Option<Variant> {
        Some(match s {
            "standard" => Variant::Standard,
            "modified" | "modified-spanning" | "spanning" => Variant::Modified,
            "normality" | "normality-order" | "modified-normality" => Variant::NormalityOrder,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Variant::Standard => "standard",
            Variant::Modified => "modified",
            Variant::NormalityOrder => "normality-order",
        }
    }
}

/// A pair (g, ωᵢ) together with the variant of diagram and order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CaseId {
    pub lie: LieType,
    pub fund_index: usize,
    pub variant: Variant,
}

/// Whether (t, ωᵢ) is one of the solved pairs.
pub fn in_table(t: LieType, i: usize) -> bool {
    let n = t.rank;
    if i == 0 || i > n {
        return false;
    }
    match t.series {
        Series::A => true,
        Series::B => i == 1 || i == n,
        Series::C => i == 1,
        Series::D => i == 1 || i == n - 1 || i == n,
        Series::E => match n {
            6 => i == 1 || i == 6,
            7 => i == 7,
            _ => false,
        },
        Series::F => i == 4,
        Series::G => i == 1,
    }
}

/// Whether (t, ωᵢ) has rewritten diagrams: (B_n, ω₁), (F₄, ω₄), (G₂, ω₁).
pub fn has_modified(t: LieType, i: usize) -> bool {
    matches!(
        (t.series, i),
        (Series::B, 1) | (Series::F, 4) | (Series::G, 1)
    )
}

impl CaseId {
    /// Any fundamental weight is accepted; FFL operations check `in_table` themselves.
    pub fn new(lie: LieType, fund_index: usize, variant: Variant) -> Result<CaseId> {
        if fund_index == 0 || fund_index > lie.rank {
            return Err(Error::Parse(format!("{lie}:w{fund_index}")));
        }
        if variant != Variant::Standard && !has_modified(lie, fund_index) {
            return Err(Error::NoVariant(format!("{lie}:w{fund_index}")));
        }
        Ok(CaseId { lie, fund_index, variant })
    }

    /// The variant used for basis/polytope work: modified where one exists.
    pub fn ffl(lie: LieType, fund_index: usize) -> Result<CaseId> {
        let v = if has_modified(lie, fund_index) { Variant::Modified } else { Variant::Standard };
        CaseId::new(lie, fund_index, v)
    }

    pub fn with_variant(&self, variant: Variant) -> Result<CaseId> {
        CaseId::new(self.lie, self.fund_index, variant)
    }

    pub fn rank(&self) -> usize {
        self.lie.rank
    }

    pub fn in_table(&self) -> bool {
        in_table(self.lie, self.fund_index)
    }

    pub fn has_modified(&self) -> bool {
        has_modified(self.lie, self.fund_index)
    }

    /// True when the diagram used by this case is free of k-chains, i.e. it
    /// can carry the polytope and the straightening cascade.
    pub fn is_ffl_variant(&self) -> bool {
        !(self.has_modified() && self.variant == Variant::Standard)
    }

    pub fn require_ffl(&self) -> Result<()> {
        if !self.in_table() {
            return Err(Error::NotInTable(self.to_string()));
        }
        if !self.is_ffl_variant() {
            return Err(Error::NeedsModified(self.to_string()));
        }
        Ok(())
    }

    pub fn weight(&self, m: i64) -> Weight {
        Weight::fundamental(self.lie.rank, self.fund_index, m)
    }

    /// All solved cases up to the given rank, each in its FFL variant.
    pub fn table(max_rank: usize) -> Vec<CaseId> {
        let mut out = Vec::new();
        for (s, lo) in [
            (Series::A, 1),
            (Series::B, 2),
            (Series::C, 3),
            (Series::D, 4),
            (Series::E, 6),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            for n in lo..=max_rank {
                let Ok(t) = LieType::new(s, n) else { continue };
                for i in 1..=n {
                    if in_table(t, i) {
                        out.push(CaseId::ffl(t, i).expect("valid"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:w{}", self.lie, self.fund_index)?;
        let default = if self.has_modified() { Variant::Modified } else { Variant::Standard };
        if self.variant != default {
            write!(f, ":{}", self.variant.name())?;
        }
        Ok(())
    }
}

impl FromStr for CaseId {
    type Err = Error;
    /// `<Series><rank>:w<index>[:variant]`. Without a variant the FFL
    /// variant is chosen (modified for (B_n,ω₁), (F₄,ω₄), (G₂,ω₁)).
    fn from_str(s: &str) -> Result<CaseId> {
        let bad = || Error::Parse(s.to_string());
        let parts: Vec<&str> = s.trim().split(':').collect();
        if parts.len() < 2 || parts.len() > 3 {
            return Err(bad());
        }
        let lie: LieType = parts[0].parse()?;
        let idx = parts[1]
            .strip_prefix('w')
            .or_else(|| parts[1].strip_prefix('W'))
            .and_then(|x| x.parse::<usize>().ok())
            .ok_or_else(bad)?;
        match parts.get(2) {
            None => CaseId::ffl(lie, idx),
            Some(v) => CaseId::new(lie, idx, Variant::parse(v).ok_or_else(bad)?),
        }
    }
}

/// Δ₊^{ωᵢ} = {β : ⟨ωᵢ,β∨⟩ ≥ 1} in the standard PBW order. Vertex numbering
/// β₁..β_N everywhere in the crate refers to this list.
pub fn standard_support(t: LieType, i: usize) -> Vec<Root> {
    positive_roots(t)
        .into_iter()
        .filter(|r| r.coroot_coeffs[i - 1] >= 1)
        .collect()
}

/// The total order ≺ used by a case, as a sequence of 0-based indices into
/// `standard_support` from ≺-minimum (θ) to ≺-maximum.
pub fn case_order(c: &CaseId) -> Vec<usize> {
    let n_roots = standard_support(c.lie, c.fund_index).len();
    match c.variant {
        Variant::Standard => (0..n_roots).collect(),
        Variant::Modified => spanning_order(c.lie, n_roots),
        Variant::NormalityOrder => normality_order(c.lie, n_roots),
    }
}

/// 1-based index lists turned into 0-based.
fn zero_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x - 1).collect()
}

fn spanning_order(t: LieType, n_roots: usize) -> Vec<usize> {
    match t.series {
        Series::G => zero_based(&[1, 2, 4, 5, 3]),
        Series::F => {
            let mut v: Vec<usize> = (1..=15).collect();
            v.swap(3, 4);
            zero_based(&v)
        }
        Series::B => {
            let big_n = n_roots;
            let r = t.rank;
            let mut v: Vec<usize> = (1..r).collect();
            v.extend((r + 2..big_n).rev());
            v.push(r + 1);
            if r + 1 != big_n {
                v.push(big_n);
            }
            v.push(r);
            zero_based(&v)
        }
        _ => (0..n_roots).collect(),
    }
}

fn normality_order(t: LieType, n_roots: usize) -> Vec<usize> {
    match t.series {
        Series::G => zero_based(&[1, 3, 4, 2, 5]),
        Series::F => spanning_order(t, n_roots),
        Series::B if t.rank == 2 => zero_based(&[2, 1, 3]),
        Series::B => {
            let big_n = n_roots;
            let mut v = vec![1];
            v.extend(3..=big_n - 2);
            v.extend([2, big_n - 1, big_n]);
            zero_based(&v)
        }
        _ => (0..n_roots).collect(),
    }
}

/// Δ₊^{ωᵢ} listed in the case's order (overrides applied for the rewritten
/// variants).
pub fn support_roots(c: &CaseId) -> Result<Vec<Root>> {
    if c.variant != Variant::Standard && !c.has_modified() {
        return Err(Error::NoVariant(c.to_string()));
    }
    let base = standard_support(c.lie, c.fund_index);
    Ok(case_order(c).into_iter().map(|k| base[k].clone()).collect())
}
