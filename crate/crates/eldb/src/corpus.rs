//! Named standard instances shared by sweeps, tests, and benches.

use crate::families::{build_tk, generate, subdivided_star, Family};
use crate::graph::Graph;
use crate::products::{product, ProductKind};

/// The general-purpose corpus of small connected graphs: families,
/// subdivided stars, the tree gadgets, and one product of each kind.
pub fn small_connected() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 2..=10 {
        out.push((format!("P_{n}"), generate(Family::Path, n).unwrap()));
    }
    for n in 3..=10 {
        out.push((format!("C_{n}"), generate(Family::Cycle, n).unwrap()));
    }
    for n in 2..=5 {
        out.push((format!("K_{n}"), generate(Family::Complete, n).unwrap()));
    }
    for n in 4..=7 {
        out.push((format!("K_1_{}", n - 1), generate(Family::Star, n).unwrap()));
    }
    out.push(("S_1(K_1_3)".into(), subdivided_star(1, 4).unwrap()));
    out.push(("S_2(K_1_3)".into(), subdivided_star(2, 4).unwrap()));
    out.push(("S_1(K_1_4)".into(), subdivided_star(1, 5).unwrap()));
    for k in 1..=3 {
        out.push((format!("T_{k}"), build_tk(k).unwrap()));
    }
    let k2 = generate(Family::Complete, 2).unwrap();
    let p3 = generate(Family::Path, 3).unwrap();
    let p4 = generate(Family::Path, 4).unwrap();
    let c3 = generate(Family::Cycle, 3).unwrap();
    let c4 = generate(Family::Cycle, 4).unwrap();
    out.push((
        "K_2.P_3".into(),
        product(ProductKind::Lexicographic, &k2, &p3),
    ));
    out.push((
        "K_2.P_4".into(),
        product(ProductKind::Lexicographic, &k2, &p4),
    ));
    out.push((
        "P_3.P_3".into(),
        product(ProductKind::Lexicographic, &p3, &p3),
    ));
    out.push(("K_2xP_4".into(), product(ProductKind::Strong, &k2, &p4)));
    out.push(("K_2xC_4".into(), product(ProductKind::Strong, &k2, &c4)));
    out.push((
        "C_3boxC_3".into(),
        product(ProductKind::Cartesian, &c3, &c3),
    ));
    out.push(("C_4xP_3".into(), product(ProductKind::Strong, &c4, &p3)));
    out
}

/// Corpus for the gamma_eb2 degree-bound checks. Restricted to graphs with
/// mcr <= 2 where the lower bound actually binds (it needs cost-2
/// broadcasters to be the efficient choice, which fails for max degree
/// <= 2 in general); the only expected upper-bound violation is C_5.
pub fn bounds_corpus() -> Vec<(String, Graph)> {
    vec![
        ("P_4".into(), generate(Family::Path, 4).unwrap()),
        ("P_5".into(), generate(Family::Path, 5).unwrap()),
        ("P_7".into(), generate(Family::Path, 7).unwrap()),
        ("C_5".into(), generate(Family::Cycle, 5).unwrap()),
        ("K_4".into(), generate(Family::Complete, 4).unwrap()),
        ("K_5".into(), generate(Family::Complete, 5).unwrap()),
        ("K_6".into(), generate(Family::Complete, 6).unwrap()),
        ("K_1_3".into(), generate(Family::Star, 4).unwrap()),
        ("K_1_4".into(), generate(Family::Star, 5).unwrap()),
        ("K_1_5".into(), generate(Family::Star, 6).unwrap()),
        ("S_1(K_1_3)".into(), subdivided_star(1, 4).unwrap()),
    ]
}
