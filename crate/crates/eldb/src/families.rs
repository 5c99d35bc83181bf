//! Canonical graph families: paths, cycles, complete graphs, stars,
//! subdivided stars, and the recursive bicentral trees used by the
//! hardness gadget.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "star" => Ok(Family::Star),
            other => Err(Error::InvalidParameter(format!(
                "unknown family {other:?} (expected path, cycle, complete, or star)"
            ))),
        }
    }
}

/// The canonical member of `family` on `size` vertices.
///
/// Paths are numbered along the path, cycles use edges `(i, i+1 mod n)`,
/// and the star center is vertex 0.
pub fn generate(family: Family, size: usize) -> Result<Graph> {
    match family {
        Family::Path => {
            require(size >= 2, "path needs size >= 2")?;
            let edges: Vec<_> = (0..size - 1).map(|i| (i, i + 1)).collect();
            Graph::from_edges(size, &edges)
        }
        Family::Cycle => {
            require(size >= 3, "cycle needs size >= 3")?;
            let edges: Vec<_> = (0..size).map(|i| (i, (i + 1) % size)).collect();
            Graph::from_edges(size, &edges)
        }
        Family::Complete => {
            require(size >= 2, "complete graph needs size >= 2")?;
            let mut edges = Vec::new();
            for u in 0..size {
                for v in u + 1..size {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(size, &edges)
        }
        Family::Star => {
            require(size >= 2, "star needs size >= 2")?;
            let edges: Vec<_> = (1..size).map(|v| (0, v)).collect();
            Graph::from_edges(size, &edges)
        }
    }
}

/// The i-th subdivision of the star K_{1,n-1}: vertex 0 is the center and
/// each of the n-1 original edges becomes a path with `subdivisions`
/// internal vertices, so every leaf sits at distance `subdivisions + 1`.
pub fn subdivided_star(subdivisions: usize, n: usize) -> Result<Graph> {
    require(
        n >= 3,
        "subdivided star needs n >= 3 (fewer than 2 leaves is a path; use generate)",
    )?;
    let arms = n - 1;
    let arm_len = subdivisions + 1;
    let total = 1 + arms * arm_len;
    let mut edges = Vec::with_capacity(arms * arm_len);
    for arm in 0..arms {
        let base = 1 + arm * arm_len;
        edges.push((0, base));
        for step in 0..arm_len - 1 {
            edges.push((base + step, base + step + 1));
        }
    }
    Graph::from_edges(total, &edges)
}

/// The recursive bicentral tree on `4k - 2` vertices.
///
/// Starts from K_2 (vertices 0 and 1, which stay the centers). Each round
/// hangs two fresh leaves on each of the two current outer endpoints and
/// promotes the lowest-id new leaf on each side to be the next endpoint.
pub fn build_tk(k: usize) -> Result<Graph> {
    require(k >= 1, "tree parameter k must be >= 1")?;
    let n = 4 * k - 2;
    let mut edges = vec![(0usize, 1usize)];
    let mut next = 2;
    let (mut left, mut right) = (0usize, 1usize);
    for _ in 1..k {
        edges.push((left, next));
        edges.push((left, next + 1));
        edges.push((right, next + 2));
        edges.push((right, next + 3));
        left = next;
        right = next + 2;
        next += 4;
    }
    debug_assert_eq!(next, n);
    Graph::from_edges(n, &edges)
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::all_pairs_distances;

    #[test]
    fn family_edge_counts() {
        assert_eq!(
            generate(Family::Path, 5).unwrap().edges(),
            vec![(0, 1), (1, 2), (2, 3), (3, 4)]
        );
        assert_eq!(generate(Family::Cycle, 3).unwrap().edge_count(), 3);
        assert_eq!(generate(Family::Complete, 4).unwrap().edge_count(), 6);
        assert_eq!(generate(Family::Star, 5).unwrap().edge_count(), 4);

        for n in 2..=12 {
            assert_eq!(generate(Family::Path, n).unwrap().edge_count(), n - 1);
            assert_eq!(generate(Family::Star, n).unwrap().edge_count(), n - 1);
            assert_eq!(
                generate(Family::Complete, n).unwrap().edge_count(),
                n * (n - 1) / 2
            );
            if n >= 3 {
                assert_eq!(generate(Family::Cycle, n).unwrap().edge_count(), n);
            }
        }
    }

    #[test]
    fn size_minimums_are_rejected() {
        assert!(generate(Family::Path, 1).is_err());
        assert!(generate(Family::Cycle, 2).is_err());
        assert!(generate(Family::Complete, 1).is_err());
        assert!(generate(Family::Star, 1).is_err());
        assert!(subdivided_star(0, 2).is_err());
        assert!(build_tk(0).is_err());
    }

    #[test]
    fn subdivided_star_shape() {
        // Zero subdivisions is the plain star.
        let s0 = subdivided_star(0, 4).unwrap();
        assert_eq!(s0.vertex_count(), 4);
        assert_eq!(s0.degree(0), 3);

        // One subdivision of a 2-leaf star is a 5-path.
        let s1 = subdivided_star(1, 3).unwrap();
        assert_eq!(s1.vertex_count(), 5);
        let mut degrees: Vec<_> = (0..5).map(|v| s1.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2, 2, 2]);

        // Three arms of length 3: every leaf at BFS depth 3 from the center.
        let s2 = subdivided_star(2, 4).unwrap();
        assert_eq!(s2.vertex_count(), 10);
        let d = all_pairs_distances(&s2).unwrap();
        let leaves: Vec<_> = (0..10).filter(|&v| s2.degree(v) == 1).collect();
        assert_eq!(leaves.len(), 3);
        assert!(leaves.iter().all(|&l| d.get(0, l) == 3));
    }

    #[test]
    fn tk_counts_radius_center() {
        for k in 1..=6 {
            let t = build_tk(k).unwrap();
            assert_eq!(t.vertex_count(), 4 * k - 2);
            assert_eq!(t.edge_count(), t.vertex_count() - 1, "tree");
            let d = all_pairs_distances(&t).unwrap();
            assert_eq!(d.radius(), k);
            assert_eq!(d.center(), &[0, 1]);
            assert_eq!(d.diameter(), 2 * k - 1);
        }
    }

    #[test]
    fn t2_is_the_double_star() {
        let t2 = build_tk(2).unwrap();
        assert_eq!(t2.vertex_count(), 6);
        assert!(t2.has_edge(0, 1));
        assert_eq!(t2.degree(0), 3);
        assert_eq!(t2.degree(1), 3);
        assert_eq!((2..6).filter(|&v| t2.degree(v) == 1).count(), 4);
    }
}
