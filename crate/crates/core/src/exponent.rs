//! Multi-exponents f^s = ∏ f_{βᵢ}^{sᵢ} and the homogeneous lexicographic
//! monomial order induced by a total order on the roots.

use std::cmp::Ordering;

/// Exponent vector indexed by the standard vertex numbering.
pub type MultiExponent = Vec<u32>;

pub fn degree(s: &[u32]) -> u32 {
    s.iter().sum()
}

pub fn unit(n: usize, i: usize) -> MultiExponent {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Monomial order: higher degree is larger; within a degree, compare at the
/// ≺-largest root where the exponents differ, bigger exponent wins.
#[derive(Debug, Clone)]
pub struct MonomialOrder {
    /// Vertices from ≺-minimum to ≺-maximum.
    pub seq: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(seq: Vec<usize>) -> MonomialOrder {
        MonomialOrder { seq }
    }

    pub fn cmp(&self, s: &[u32], t: &[u32]) -> Ordering {
        degree(s).cmp(&degree(t)).then_with(|| {
            for &k in self.seq.iter().rev() {
                match s[k].cmp(&t[k]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    /// Position of each vertex in the order.
    pub fn rank(&self) -> Vec<usize> {
        let mut r = vec![0; self.seq.len()];
        for (p, &v) in self.seq.iter().enumerate() {
            r[v] = p;
        }
        r
    }

    pub fn max<'a, I: IntoIterator<Item = &'a MultiExponent>>(&self, it: I) -> Option<&'a MultiExponent> {
        it.into_iter().max_by(|a, b| self.cmp(a, b))
    }
}
