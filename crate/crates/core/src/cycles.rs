//! Exact hamiltonicity and circumference by subset dynamic programming.
//!
//! Both oracles keep, for every vertex subset, the set of possible path
//! endpoints as a bitmask, so the state space is `2^(n-1)` words.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{oracle} oracle supports at most {limit} vertices, got {n}")]
    TooLarge { oracle: &'static str, n: usize, limit: usize },
}

/// Size caps for the exponential oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleLimits {
    pub hamiltonian: usize,
    pub circumference: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { hamiltonian: 24, circumference: 20 }
    }
}

/// A cycle given as a cyclic vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCertificate {
    pub vertices: Vec<usize>,
    pub length: usize,
}

impl CycleCertificate {
    fn new(vertices: Vec<usize>) -> Self {
        let length = vertices.len();
        CycleCertificate { vertices, length }
    }

    /// Distinct vertices, consecutive ones adjacent, length at least 3.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        let distinct: VertexSet = self.vertices.iter().copied().filter(|&v| v < g.order()).collect();
        k >= 3
            && k == self.length
            && distinct.len() == k
            && (0..k).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circumference {
    /// 0 for forests.
    pub length: usize,
    pub certificate: Option<CycleCertificate>,
}

pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<CycleCertificate>, OracleError> {
    hamiltonian_cycle_with(g, OracleLimits::default())
}

pub fn is_hamiltonian(g: &Graph) -> Result<bool, OracleError> {
    hamiltonian_cycle(g).map(|c| c.is_some())
}

pub fn hamiltonian_cycle_with(g: &Graph, limits: OracleLimits) -> Result<Option<CycleCertificate>, OracleError> {
    let n = g.order();
    // endpoint sets are 32-bit words
    let limit = limits.hamiltonian.min(32);
    if n > limit {
        return Err(OracleError::TooLarge { oracle: "hamiltonian", n, limit });
    }
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) || !g.is_two_connected() {
        return Ok(None);
    }
    let others = g.vertices().without(0);
    Ok(longest_through(g, 0, others, n).map(CycleCertificate::new))
}

pub fn circumference(g: &Graph) -> Result<Circumference, OracleError> {
    circumference_with(g, OracleLimits::default())
}

pub fn circumference_with(g: &Graph, limits: OracleLimits) -> Result<Circumference, OracleError> {
    let n = g.order();
    let limit = limits.circumference.min(32);
    if n > limit {
        return Err(OracleError::TooLarge { oracle: "circumference", n, limit });
    }
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        let best_len = best.as_ref().map_or(2, Vec::len);
        // cycles whose smallest vertex is s use only vertices above s
        let above = VertexSet::from_bits(g.vertices().bits() >> (s + 1) << (s + 1));
        if above.len() < best_len {
            break;
        }
        if let Some(c) = longest_through(g, s, above, best_len + 1) {
            best = Some(c);
        }
    }
    let length = best.as_ref().map_or(0, Vec::len);
    Ok(Circumference { length, certificate: best.map(CycleCertificate::new) })
}

/// Longest cycle through `s` using only vertices of `pool`, provided its
/// length is at least `min_len`. Returns the cycle starting at `s`.
fn longest_through(g: &Graph, s: usize, pool: VertexSet, min_len: usize) -> Option<Vec<usize>> {
    let local: Vec<usize> = pool.to_vec();
    let m = local.len();
    if m < 2 || m + 1 < min_len {
        return None;
    }
    // neighbourhoods re-indexed onto pool positions
    let index_of = |v: usize| local.iter().position(|&w| w == v);
    let mut nb = vec![0u32; m];
    let mut from_s = 0u32;
    for (i, &v) in local.iter().enumerate() {
        for w in g.neighbors(v) & pool {
            nb[i] |= 1 << index_of(w).expect("in pool");
        }
        if g.has_edge(s, v) {
            from_s |= 1 << i;
        }
    }
    let size = 1usize << m;
    let mut dp = vec![0u32; size];
    for i in 0..m {
        if from_s >> i & 1 == 1 {
            dp[1 << i] = 1 << i;
        }
    }
    let mut best: Option<(usize, u32)> = None;
    for mask in 1..size {
        let ends = dp[mask];
        if ends == 0 {
            continue;
        }
        let count = mask.count_ones() as usize;
        if count >= 2 && ends & from_s != 0 && count + 1 >= min_len && best.is_none_or(|(len, _)| count + 1 > len) {
            best = Some((count + 1, mask as u32));
        }
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = nb[v] & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                dp[mask | 1 << w] |= 1 << w;
            }
        }
    }
    let (_, mask) = best?;
    // walk back from an endpoint adjacent to s
    let mut cycle = vec![s];
    let mut mask = mask;
    let mut end = (dp[mask as usize] & from_s).trailing_zeros();
    loop {
        cycle.push(local[end as usize]);
        let prev = mask & !(1 << end);
        if prev == 0 {
            break;
        }
        let choices = dp[prev as usize] & nb[end as usize];
        end = choices.trailing_zeros();
        mask = prev;
    }
    Some(cycle)
}

/// Which classical sufficient conditions hold, and whether the oracle
/// agrees that the graph is hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SanityReport {
    /// Every vertex heavy.
    pub dirac: bool,
    /// Every nonadjacent pair has degree sum at least `n`.
    pub ore: bool,
    /// 2-connected and every distance-2 pair has a heavy vertex.
    pub fan: bool,
    pub hamiltonian: bool,
}

impl SanityReport {
    pub fn violated(&self) -> bool {
        (self.dirac || self.ore || self.fan) && !self.hamiltonian
    }
}

pub fn dirac_ore_fan_sanity(g: &Graph) -> Result<SanityReport, OracleError> {
    let n = g.order();
    let deg = g.degrees();
    let heavy = |v: usize| 2 * deg[v] >= n;
    let dirac = n >= 3 && (0..n).all(heavy);
    let ore = n >= 3 && (0..n).all(|u| (g.vertices() - g.neighbors(u)).iter().all(|v| v <= u || deg[u] + deg[v] >= n));
    let fan = g.is_two_connected()
        && (0..n).all(|u| {
            let mut two = VertexSet::EMPTY;
            for w in g.neighbors(u) {
                two = two | g.neighbors(w);
            }
            let at_two = two - g.neighbors(u) - VertexSet::singleton(u);
            heavy(u) || at_two.iter().all(heavy)
        });
    Ok(SanityReport { dirac, ore, fan, hamiltonian: is_hamiltonian(g)? })
}

/// Plain backtracking oracles, kept independent of the subset DP for
/// cross-checking.
pub mod naive {
    use crate::graph::Graph;

    /// Extends paths from vertex 0 one unvisited neighbour at a time.
    pub fn is_hamiltonian(g: &Graph) -> bool {
        let n = g.order();
        if n < 3 {
            return false;
        }
        fn go(g: &Graph, v: usize, visited: u64, count: usize) -> bool {
            if count == g.order() {
                return g.has_edge(v, 0);
            }
            (0..g.order()).any(|w| visited >> w & 1 == 0 && g.has_edge(v, w) && go(g, w, visited | 1 << w, count + 1))
        }
        go(g, 0, 1, 1)
    }

    /// Longest cycle length, by enumerating simple paths from each start
    /// through larger vertices only.
    pub fn circumference(g: &Graph) -> usize {
        fn go(g: &Graph, s: usize, v: usize, visited: u64, len: usize, best: &mut usize) {
            if len >= 3 && g.has_edge(v, s) {
                *best = (*best).max(len);
            }
            for w in s + 1..g.order() {
                if visited >> w & 1 == 0 && g.has_edge(v, w) {
                    go(g, s, w, visited | 1 << w, len + 1, best);
                }
            }
        }
        let mut best = 0;
        for s in 0..g.order() {
            go(g, s, s, 1 << s, 1, &mut best);
        }
        best
    }
}
