//! Lexicographic, strong, and cartesian graph products.
//!
//! Vertex `(i, j)` of a product maps to id `i * |V(H)| + j`; each vertex
//! is labeled with its pair for debugging.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    Lexicographic,
    Strong,
    Cartesian,
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Strong => "strong",
            ProductKind::Cartesian => "cartesian",
        };
        f.write_str(s)
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ProductKind> {
        match s {
            "lexicographic" | "lex" => Ok(ProductKind::Lexicographic),
            "strong" => Ok(ProductKind::Strong),
            "cartesian" => Ok(ProductKind::Cartesian),
            other => Err(Error::InvalidParameter(format!(
                "unknown product kind {other:?} (expected lexicographic, strong, or cartesian)"
            ))),
        }
    }
}

/// The product of two connected graphs; the result is connected for all
/// three kinds.
pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Graph {
    let (gn, hn) = (g.vertex_count(), h.vertex_count());
    let id = |i: usize, j: usize| i * hn + j;
    let mut edges = Vec::new();
    for i in 0..gn {
        for j in 0..hn {
            for i2 in i..gn {
                let j_start = if i2 == i { j + 1 } else { 0 };
                for j2 in j_start..hn {
                    let g_adj = g.has_edge(i, i2);
                    let h_adj = h.has_edge(j, j2);
                    let g_eq = i == i2;
                    let h_eq = j == j2;
                    let adjacent = match kind {
                        ProductKind::Lexicographic => g_adj || (g_eq && h_adj),
                        ProductKind::Strong => {
                            (g_eq && h_adj) || (h_eq && g_adj) || (g_adj && h_adj)
                        }
                        ProductKind::Cartesian => (g_eq && h_adj) || (h_eq && g_adj),
                    };
                    if adjacent {
                        edges.push((id(i, j), id(i2, j2)));
                    }
                }
            }
        }
    }
    let labels = (0..gn)
        .flat_map(|i| (0..hn).map(move |j| format!("({i},{j})")))
        .collect();
    Graph::from_edges_labeled(gn * hn, &edges, labels)
        .expect("product of connected graphs is a valid connected graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::all_pairs_distances;
    use crate::families::{generate, Family};

    fn k2() -> Graph {
        generate(Family::Complete, 2).unwrap()
    }

    #[test]
    fn k2_products() {
        let lex = product(ProductKind::Lexicographic, &k2(), &k2());
        assert_eq!(lex.vertex_count(), 4);
        assert_eq!(lex.edge_count(), 6, "K_2 . K_2 = K_4");

        let strong = product(ProductKind::Strong, &k2(), &k2());
        assert_eq!(strong.edge_count(), 6, "K_2 x K_2 strong = K_4");

        let cart = product(ProductKind::Cartesian, &k2(), &k2());
        assert_eq!(cart.edge_count(), 4);
        assert!((0..4).all(|v| cart.degree(v) == 2), "K_2 box K_2 = C_4");
    }

    #[test]
    fn strong_distance_is_max_of_factors() {
        let g = k2();
        let h = generate(Family::Path, 3).unwrap();
        let p = product(ProductKind::Strong, &g, &h);
        let d = all_pairs_distances(&p).unwrap();
        // (0,0) to (1,2): max(1, 2) = 2
        assert_eq!(d.get(0, 5), 2);
    }

    #[test]
    fn product_labels_record_pairs() {
        let p = product(
            ProductKind::Cartesian,
            &k2(),
            &generate(Family::Path, 3).unwrap(),
        );
        assert_eq!(p.label(0), Some("(0,0)"));
        assert_eq!(p.label(5), Some("(1,2)"));
    }
}
