//! All-pairs BFS distances and the derived eccentricity views.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact hop distances for a connected graph, with eccentricities,
/// radius, diameter, and center precomputed.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    dist: Vec<Vec<usize>>,
    ecc: Vec<usize>,
    radius: usize,
    diameter: usize,
    center: Vec<usize>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.dist[u][v]
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        self.ecc[v]
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    /// Vertices whose eccentricity equals the radius, sorted.
    pub fn center(&self) -> &[usize] {
        &self.center
    }

    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }
}

/// Runs one BFS per vertex. Errors with the first unreachable pair if the
/// input is not connected.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let d = all_pairs_distances_saturating(g);
    for u in 0..g.vertex_count() {
        if let Some(v) = d.dist[u].iter().position(|&x| x == usize::MAX) {
            return Err(Error::Disconnected { u, v });
        }
    }
    Ok(d)
}

/// As [`all_pairs_distances`], but unreachable pairs saturate at
/// `usize::MAX` instead of erroring. Hearing comparisons treat such pairs
/// as never heard, which is the right reading for the disjoint-union
/// gadget graphs.
pub fn all_pairs_distances_saturating(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let dist: Vec<Vec<usize>> = (0..n).map(|u| g.bfs_distances(u)).collect();
    let ecc: Vec<usize> = dist
        .iter()
        .map(|row| *row.iter().max().expect("n >= 2"))
        .collect();
    let radius = *ecc.iter().min().expect("n >= 2");
    let diameter = *ecc.iter().max().expect("n >= 2");
    let center = (0..n).filter(|&v| ecc[v] == radius).collect();
    DistanceMatrix {
        dist,
        ecc,
        radius,
        diameter,
        center,
    }
}

/// A closed neighborhood `{u : d(u, center) <= radius}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ball {
    pub center: usize,
    pub radius: usize,
    /// Covered vertices, sorted ascending.
    pub covered: Vec<usize>,
}

/// The ball of the given radius around `center` (radius 0 gives `{center}`).
pub fn ball(d: &DistanceMatrix, center: usize, radius: usize) -> Ball {
    let covered = (0..d.vertex_count())
        .filter(|&u| d.get(u, center) <= radius)
        .collect();
    Ball {
        center,
        radius,
        covered,
    }
}
