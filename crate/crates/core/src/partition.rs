//! Generalized partitions, interlacing and Gelfand–Tsetlin chains.
//!
//! A generalized partition keeps its trailing zeros: `(2,1)` and `(2,1,0)`
//! are different values. Parts beyond the stored length read as 0 in every
//! comparison.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct GeneralizedPartition(Vec<u32>);

impl GeneralizedPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(GeneralizedPartition(parts))
    }

    pub fn empty() -> Self {
        GeneralizedPartition(Vec::new())
    }

    /// `n` zero parts.
    pub fn zeros(n: usize) -> Self {
        GeneralizedPartition(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Stored length, trailing zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based); 0 beyond the stored length.
    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Sum of parts, written |λ|.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Number of nonzero parts.
    pub fn nonzero_len(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    /// The ordinary partition obtained by stripping trailing zeros.
    pub fn normalize(&self) -> Self {
        GeneralizedPartition(self.0[..self.nonzero_len()].to_vec())
    }

    /// Appends zeros up to length `n`. Returns `None` if the partition is
    /// already longer than `n` with nonzero parts past `n`.
    pub fn padded(&self, n: usize) -> Option<Self> {
        if self.nonzero_len() > n {
            return None;
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Some(GeneralizedPartition(v))
    }

    /// Appends `k` zero parts.
    pub fn with_zeros(&self, k: usize) -> Self {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat(0).take(k));
        GeneralizedPartition(v)
    }

    /// Whether the last `k` stored parts exist and are all zero.
    pub fn ends_with_zeros(&self, k: usize) -> bool {
        self.len() >= k && self.0[self.len() - k..].iter().all(|&p| p == 0)
    }
}

impl TryFrom<Vec<u32>> for GeneralizedPartition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        GeneralizedPartition::new(v)
    }
}

impl From<GeneralizedPartition> for Vec<u32> {
    fn from(p: GeneralizedPartition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for GeneralizedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses comma-separated parts, e.g. `2,1,0`. The empty string is ∅.
impl FromStr for GeneralizedPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(GeneralizedPartition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part `{t}` in `{s}`"))))
            .collect::<Result<Vec<u32>>>()?;
        GeneralizedPartition::new(parts)
    }
}

/// Shorthand for literal partitions in tests and examples.
#[macro_export]
macro_rules! gp {
    () => { $crate::partition::GeneralizedPartition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::GeneralizedPartition::new(vec![$($p),+]).expect("weakly decreasing")
    };
}

/// `nu ≺ la`: `la_i >= nu_i >= la_{i+1}` for every `i`, missing parts 0.
pub fn interlaces(nu: &GeneralizedPartition, la: &GeneralizedPartition) -> bool {
    let n = nu.len().max(la.len());
    (0..n).all(|i| la.get(i) >= nu.get(i) && nu.get(i) >= la.get(i + 1))
}

/// `mu ⊂ la`: `la_i >= mu_i` for every `i`, missing parts 0.
pub fn contains(mu: &GeneralizedPartition, la: &GeneralizedPartition) -> bool {
    let n = mu.len().max(la.len());
    (0..n).all(|i| la.get(i) >= mu.get(i))
}

/// Fills `out` with every part vector of length `bounds.len()` whose entry
/// `j` lies in `bounds[j]`, in lexicographically decreasing order.
fn product_desc(bounds: &[(u32, u32)], out: &mut Vec<Vec<u32>>) {
    fn rec(bounds: &[(u32, u32)], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let j = cur.len();
        if j == bounds.len() {
            out.push(cur.clone());
            return;
        }
        let (lo, hi) = bounds[j];
        let hi = match cur.last() {
            Some(&prev) => hi.min(prev),
            None => hi,
        };
        if lo > hi {
            return;
        }
        for v in (lo..=hi).rev() {
            cur.push(v);
            rec(bounds, cur, out);
            cur.pop();
        }
    }
    rec(bounds, &mut Vec::with_capacity(bounds.len()), out);
}

/// All `α` of length `len` with `lo ≺ α ≺ hi`, lexicographically decreasing.
pub fn enumerate_between(
    lo: &GeneralizedPartition,
    hi: &GeneralizedPartition,
    len: usize,
) -> Vec<GeneralizedPartition> {
    // lo ≺ α:  lo_j <= α_j <= lo_{j-1};   α ≺ hi:  hi_{j+1} <= α_j <= hi_j.
    let bounds: Vec<(u32, u32)> = (0..len)
        .map(|j| {
            let upper_lo = if j == 0 { u32::MAX } else { lo.get(j - 1) };
            (lo.get(j).max(hi.get(j + 1)), hi.get(j).min(upper_lo))
        })
        .collect();
    let mut raw = Vec::new();
    product_desc(&bounds, &mut raw);
    raw.into_iter()
        .map(GeneralizedPartition)
        .filter(|a| interlaces(lo, a) && interlaces(a, hi))
        .collect()
}

/// All chains `mu = z_0 ≺ z_1 ≺ ... ≺ z_s = la` with `len(z_k) = lengths[k]`.
///
/// `lengths[0]` and `lengths[s]` must equal the lengths of `mu` and `la`.
/// Chains are produced in lexicographically decreasing order of
/// `(z_1, z_2, ...)`.
pub fn enumerate_chains(
    mu: &GeneralizedPartition,
    la: &GeneralizedPartition,
    lengths: &[usize],
) -> Vec<Vec<GeneralizedPartition>> {
    assert!(lengths.len() >= 2, "a chain needs at least two endpoints");
    assert_eq!(lengths[0], mu.len());
    assert_eq!(lengths[lengths.len() - 1], la.len());
    let mut out = Vec::new();
    if !contains(mu, la) {
        return out;
    }
    let steps = lengths.len() - 1;
    let mut chain = vec![mu.clone()];
    chain_rec(la, lengths, steps, &mut chain, &mut out);
    out
}

fn chain_rec(
    la: &GeneralizedPartition,
    lengths: &[usize],
    steps: usize,
    chain: &mut Vec<GeneralizedPartition>,
    out: &mut Vec<Vec<GeneralizedPartition>>,
) {
    let k = chain.len() - 1;
    let prev = &chain[k];
    if k + 1 == steps {
        if interlaces(prev, la) {
            let mut done = chain.clone();
            done.push(la.clone());
            out.push(done);
        }
        return;
    }
    let len = lengths[k + 1];
    // After α there remain `rest` steps to reach la, so α_j >= la_{j+rest}.
    let rest = steps - (k + 1);
    let bounds: Vec<(u32, u32)> = (0..len)
        .map(|j| {
            let upper_prev = if j == 0 { u32::MAX } else { prev.get(j - 1) };
            (prev.get(j).max(la.get(j + rest)), la.get(j).min(upper_prev))
        })
        .collect();
    let mut raw = Vec::new();
    product_desc(&bounds, &mut raw);
    let cands: Vec<GeneralizedPartition> = raw
        .into_iter()
        .map(GeneralizedPartition)
        .filter(|a| interlaces(prev, a))
        .collect();
    for alpha in cands {
        chain.push(alpha);
        chain_rec(la, lengths, steps, chain, out);
        chain.pop();
    }
}

/// A symplectic/orthogonal Gelfand–Tsetlin chain
/// `mu = z_0 ≺ z_1 ≺ ... ≺ z_{2N} = la` with `len(z_k) = l + ceil(k/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GTChain {
    pub steps: Vec<GeneralizedPartition>,
    pub base_length: usize,
    pub halfsteps: usize,
}

impl GTChain {
    /// `z_k`.
    pub fn step(&self, k: usize) -> &GeneralizedPartition {
        &self.steps[k]
    }
}

/// Lengths `l + ceil(k/2)` for `k = 0..=2N`.
pub fn bcd_chain_lengths(base_length: usize, halfsteps: usize) -> Vec<usize> {
    (0..=2 * halfsteps).map(|k| base_length + k.div_ceil(2)).collect()
}

/// All symplectic-type chains from `mu` to `la` over `halfsteps` variables.
pub fn enumerate_gt_chains(
    mu: &GeneralizedPartition,
    la: &GeneralizedPartition,
    halfsteps: usize,
) -> Result<Vec<GTChain>> {
    if la.len() != mu.len() + halfsteps {
        return Err(Error::LengthMismatch { expected: mu.len() + halfsteps, actual: la.len() });
    }
    if halfsteps == 0 {
        return Ok(if mu == la {
            vec![GTChain { steps: vec![mu.clone()], base_length: mu.len(), halfsteps }]
        } else {
            Vec::new()
        });
    }
    let lengths = bcd_chain_lengths(mu.len(), halfsteps);
    Ok(enumerate_chains(mu, la, &lengths)
        .into_iter()
        .map(|steps| GTChain { steps, base_length: mu.len(), halfsteps })
        .collect())
}

/// Ordinary partitions (no trailing zeros) with at most `max_len` parts and
/// weight at most `max_weight`, ordered by weight, then lexicographically
/// decreasing.
pub fn partitions_up_to(max_len: usize, max_weight: u32) -> Vec<GeneralizedPartition> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        partitions_of(w, max_len, w, &mut Vec::new(), &mut out);
    }
    out
}

fn partitions_of(
    remaining: u32,
    max_len: usize,
    max_part: u32,
    cur: &mut Vec<u32>,
    out: &mut Vec<GeneralizedPartition>,
) {
    if remaining == 0 {
        out.push(GeneralizedPartition(cur.clone()));
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        cur.push(p);
        partitions_of(remaining - p, max_len, p, cur, out);
        cur.pop();
    }
}

/// Generalized partitions of exactly `len` parts (zeros allowed) with weight
/// at most `max_weight`, ordered by weight, then lexicographically
/// decreasing.
pub fn generalized_partitions(len: usize, max_weight: u32) -> Vec<GeneralizedPartition> {
    partitions_up_to(len, max_weight)
        .into_iter()
        .map(|p| p.padded(len).expect("length bounded by construction"))
        .collect()
}
