//! Concrete minuscule models: the wedge model for (A_n, ω_k) and sign
//! vectors for the spin representations of B_n and D_n.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hasse::build_diagram;
use crate::paths::{eps_of, maximal_paths, supp1, supp1_inverse, CoChain, DyckPath, Eps};
use crate::rootsys::{standard_support, CaseId, Series};

/// A k-subset of {1..n+1}, i.e. the basis vector e_{i₁} ∧ … ∧ e_{i_k}.
pub type WedgeLabel = BTreeSet<usize>;

/// (l₁,…,lₙ) with lᵣ = ±1, the weight ½ Σ lᵣ εᵣ.
pub type SpinSign = Vec<i8>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Wedge,
    Spin,
}

/// Case data shared by both models.
#[derive(Debug, Clone)]
pub struct Model {
    pub case: CaseId,
    pub kind: ModelKind,
    eps: Vec<Eps>,
    paths: Vec<DyckPath>,
}

impl Model {
    pub fn new(c: &CaseId) -> Result<Model> {
        let n = c.lie.rank;
        let kind = match (c.lie.series, c.fund_index) {
            (Series::A, _) => ModelKind::Wedge,
            (Series::B, k) if k == n => ModelKind::Spin,
            (Series::D, k) if k + 1 >= n => ModelKind::Spin,
            _ => return Err(Error::Precondition(format!("{c} has no minuscule model here"))),
        };
        let eps = standard_support(c.lie, c.fund_index)
            .iter()
            .map(|r| eps_of(c, &r.simple_coeffs).expect("support root has an ε label"))
            .collect();
        let paths = maximal_paths(&build_diagram(c)?);
        Ok(Model { case: *c, kind, eps, paths })
    }

    fn check(&self, p: &CoChain) -> Result<Vec<Eps>> {
        let n = self.eps.len();
        if p.indices.iter().any(|&i| i >= n) {
            return Err(Error::Precondition("index outside the support".into()));
        }
        supp1(&self.paths, &supp1_inverse(n, p))?;
        Ok(p.indices.iter().map(|&i| self.eps[i]).collect())
    }

    pub fn wedge_image(&self, p: &CoChain) -> Result<WedgeLabel> {
        if self.kind != ModelKind::Wedge {
            return Err(Error::Precondition("not a type A case".into()));
        }
        let k = self.case.fund_index;
        let mut out: WedgeLabel = (1..=k).collect();
        for e in self.check(p)? {
            let Eps::Alpha(i, j) = e else { unreachable!() };
            out.remove(&i);
            out.insert(j + 1);
        }
        if out.len() != k {
            return Err(Error::Precondition("rows or columns repeat".into()));
        }
        Ok(out)
    }

    pub fn spin_image(&self, p: &CoChain) -> Result<SpinSign> {
        if self.kind != ModelKind::Spin {
            return Err(Error::Precondition("not a spin case".into()));
        }
        let n = self.case.lie.rank;
        let d_series = self.case.lie.series == Series::D;
        let mut l: SpinSign = vec![1; n];
        if d_series && self.case.fund_index == n - 1 {
            l[n - 1] = -1;
        }
        for e in self.check(p)? {
            match e {
                Eps::Pair(i, j) => {
                    l[i - 1] = -l[i - 1];
                    l[j - 1] = -l[j - 1];
                }
                Eps::Single(k) => {
                    l[k - 1] = -l[k - 1];
                    if d_series {
                        l[n - 1] = -l[n - 1];
                    }
                }
                Eps::Alpha(..) => unreachable!(),
            }
        }
        Ok(l)
    }

    /// Required parity of the number of −1 entries, if any.
    pub fn parity(&self) -> Option<usize> {
        let n = self.case.lie.rank;
        match (self.case.lie.series, self.case.fund_index) {
            (Series::D, k) if k == n - 1 => Some(1),
            (Series::D, _) => Some(0),
            _ => None,
        }
    }

    /// One CSV row per co-chain: 1-based indices and the label.
    pub fn audit_csv(&self, chains: &[CoChain]) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["cochain", "label"]).map_err(csv_err)?;
        for p in chains {
            let idx = p.indices.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ");
            let label = match self.kind {
                ModelKind::Wedge => self.wedge_image(p)?.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
                ModelKind::Spin => self
                    .spin_image(p)?
                    .iter()
                    .map(|&x| if x > 0 { "+" } else { "-" })
                    .collect::<String>(),
            };
            w.write_record([idx, label]).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Precondition(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Precondition(e.to_string())
}

pub fn wedge_image(p: &CoChain, c: &CaseId) -> Result<WedgeLabel> {
    Model::new(c)?.wedge_image(p)
}

pub fn spin_image(p: &CoChain, c: &CaseId) -> Result<SpinSign> {
    Model::new(c)?.spin_image(p)
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension of V(ωᵢ) for the solved cases, by the classical formulas.
pub fn known_dim(c: &CaseId) -> Result<u64> {
    if !c.in_table() {
        return Err(Error::NotInTable(c.to_string()));
    }
    let n = c.lie.rank as u64;
    let k = c.fund_index as u64;
    Ok(match c.lie.series {
        Series::A => binom(n + 1, k),
        Series::B if k == 1 => 2 * n + 1,
        Series::B => 1 << n,
        Series::C => 2 * n,
        Series::D if k == 1 => 2 * n,
        Series::D => 1 << (n - 1),
        Series::E if n == 6 => 27,
        Series::E => 56,
        Series::F => 26,
        Series::G => 7,
    })
}

