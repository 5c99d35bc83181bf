//! Broadcast cost functions and the hearing/domination/efficiency
//! semantics, evaluated directly from the definition.
//!
//! [`classify`] is the independent validator for solver witnesses: it never
//! looks at balls or covers, only at who hears whom.

use serde::{Serialize, Serializer};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A per-vertex cost function with all costs bounded by `cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Broadcast {
    costs: Vec<usize>,
    cap: usize,
}

impl Broadcast {
    pub fn new(costs: Vec<usize>, cap: usize) -> Result<Broadcast> {
        if let Some(&c) = costs.iter().find(|&&c| c > cap) {
            return Err(Error::InvalidParameter(format!(
                "cost {c} exceeds the cap {cap}"
            )));
        }
        Ok(Broadcast { costs, cap })
    }

    pub fn costs(&self) -> &[usize] {
        &self.costs
    }

    pub fn cost_of(&self, v: usize) -> usize {
        self.costs[v]
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Total cost: the sum of all assigned costs.
    pub fn total_cost(&self) -> usize {
        self.costs.iter().sum()
    }

    /// Vertices with positive cost, ascending.
    pub fn broadcasters(&self) -> Vec<usize> {
        (0..self.costs.len())
            .filter(|&v| self.costs[v] > 0)
            .collect()
    }
}

// Serializes as the bare cost array.
impl Serialize for Broadcast {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.costs.serialize(serializer)
    }
}

/// Everything the hearing rule determines about one broadcast.
#[derive(Debug, Clone, Serialize)]
pub struct HearingReport {
    /// For each vertex u, the broadcasters v with d(u,v) <= f(v).
    pub hearers: Vec<Vec<usize>>,
    /// Number of vertices hearing at least one broadcaster.
    pub coverage_count: usize,
    pub is_dominating: bool,
    pub is_efficient: bool,
    pub is_k_eldb: bool,
    pub cost: usize,
    /// Vertices strictly inside some broadcaster's radius.
    pub overdominated: Vec<usize>,
    /// Broadcasters whose cost exceeds their eccentricity (their ball
    /// saturates at V).
    pub costs_above_ecc: Vec<usize>,
}

/// Evaluates the hearing rule for every vertex.
pub fn classify(g: &Graph, d: &DistanceMatrix, f: &Broadcast) -> Result<HearingReport> {
    let n = g.vertex_count();
    if f.costs().len() != n {
        return Err(Error::DimensionMismatch(format!(
            "broadcast over {} vertices applied to a graph on {n}",
            f.costs().len()
        )));
    }
    let broadcasters = f.broadcasters();
    let mut hearers = vec![Vec::new(); n];
    let mut overdominated = Vec::new();
    for (u, heard) in hearers.iter_mut().enumerate() {
        let mut over = false;
        for &v in &broadcasters {
            if d.get(u, v) <= f.cost_of(v) {
                heard.push(v);
            }
            if d.get(u, v) < f.cost_of(v) {
                over = true;
            }
        }
        if over {
            overdominated.push(u);
        }
    }
    let coverage_count = hearers.iter().filter(|h| !h.is_empty()).count();
    let is_dominating = hearers.iter().all(|h| !h.is_empty());
    let is_efficient = hearers.iter().all(|h| h.len() <= 1);
    let is_k_eldb = hearers.iter().all(|h| h.len() == 1);
    let costs_above_ecc = broadcasters
        .iter()
        .copied()
        .filter(|&v| f.cost_of(v) > d.eccentricity(v))
        .collect();
    Ok(HearingReport {
        hearers,
        coverage_count,
        is_dominating,
        is_efficient,
        is_k_eldb,
        cost: f.total_cost(),
        overdominated,
        costs_above_ecc,
    })
}

/// Result of an influence query: either the influence value of a
/// 2-packing, or the first pair of closed neighborhoods that touch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Influence {
    Packing { influence: usize },
    Violation { u: usize, v: usize },
}

/// Influence of a vertex set: the number of vertices its closed
/// neighborhoods dominate, defined only when those neighborhoods are
/// pairwise disjoint.
pub fn influence(g: &Graph, s: &[usize]) -> Influence {
    let n = g.vertex_count();
    let mut sorted: Vec<usize> = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    assert!(
        sorted.iter().all(|&v| v < n),
        "influence set contains a vertex outside the graph"
    );
    // Closed neighborhoods of u and v intersect exactly when d(u,v) <= 2;
    // adjacency suffices to detect that.
    for (i, &u) in sorted.iter().enumerate() {
        for &v in &sorted[i + 1..] {
            let touching =
                g.has_edge(u, v) || g.neighbors(u).iter().any(|&w| w == v || g.has_edge(w, v));
            if touching {
                return Influence::Violation { u, v };
            }
        }
    }
    Influence::Packing {
        influence: sorted.iter().map(|&v| 1 + g.degree(v)).sum(),
    }
}
