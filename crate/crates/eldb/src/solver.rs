//! Exact computation of efficient k-limited dominating broadcasts.
//!
//! An efficient broadcast is exactly a family of pairwise-disjoint distance
//! balls (every vertex heard once means it lies in exactly one chosen
//! ball), so everything here reduces to one exact-cover search core with
//! different objectives, plus a naive enumeration oracle for tiny
//! instances.

use serde::Serialize;

use crate::broadcast::{classify, Broadcast};
use crate::distance::{all_pairs_distances, ball, Ball, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;

/// Resource knobs for a solve call.
#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// Search node budget; hitting it yields `exhausted = true`, never a
    /// silent wrong answer.
    pub node_limit: u64,
    /// Largest instance the brute-force oracle will accept.
    pub brute_vertex_limit: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_limit: DEFAULT_NODE_LIMIT,
            brute_vertex_limit: 10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Exists,
    MinCost,
    MaxCoverage,
    Mcr,
    MinKNoCostOne,
}

/// Outcome of a solve call.
///
/// `value` carries gamma_ebk for `min_cost`, F_k for `max_coverage`, k for
/// `mcr` and `min_k_no_cost_one`, and 0/1 for `exists`. When the node
/// budget runs out, `exhausted` is set and feasibility is undetermined.
#[derive(Debug, Clone, Serialize)]
pub struct SolveResult {
    pub objective: Objective,
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Broadcast>,
    pub nodes_explored: u64,
    pub exhausted: bool,
}

impl SolveResult {
    fn exhausted(objective: Objective, nodes: u64) -> SolveResult {
        SolveResult {
            objective,
            feasible: false,
            value: None,
            witness: None,
            nodes_explored: nodes,
            exhausted: true,
        }
    }
}

/// One ball per (center, radius) pair with radius in `1..=k` (or `2..=k`
/// when cost-one balls are forbidden), except that radii repeating a
/// smaller radius's covered set are dropped: they cost more and cover the
/// same vertices. Order: center ascending, then radius ascending.
pub fn enumerate_balls(
    g: &Graph,
    d: &DistanceMatrix,
    k: usize,
    forbid_cost_one: bool,
) -> Vec<Ball> {
    debug_assert_eq!(g.vertex_count(), d.vertex_count());
    let lo = if forbid_cost_one { 2 } else { 1 };
    let mut out = Vec::new();
    for center in 0..g.vertex_count() {
        let mut last_size = 0usize;
        for radius in lo..=k {
            let b = ball(d, center, radius);
            // Balls at one center are nested, so equal size means equal set.
            if b.covered.len() > last_size {
                last_size = b.covered.len();
                out.push(b);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Bitset over vertices.

#[derive(Clone, PartialEq, Eq)]
struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    fn empty(n: usize) -> VertexSet {
        VertexSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn from_slice(n: usize, items: &[usize]) -> VertexSet {
        let mut s = VertexSet::empty(n);
        for &i in items {
            s.words[i / 64] |= 1 << (i % 64);
        }
        s
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Removes a subset previously added with `union_with`; valid because
    /// chosen balls are pairwise disjoint.
    fn xor_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

// ---------------------------------------------------------------------------
// Exact-cover search core.

struct SearchCtx {
    n: usize,
    masks: Vec<VertexSet>,
    radii: Vec<usize>,
    centers: Vec<usize>,
    /// For each vertex, the balls containing it, in canonical ball order.
    by_vertex: Vec<Vec<usize>>,
    max_ball_size: usize,
    nodes: u64,
    limit: u64,
    exhausted: bool,
}

impl SearchCtx {
    fn new(n: usize, balls: &[Ball], limit: u64) -> SearchCtx {
        let masks: Vec<VertexSet> = balls
            .iter()
            .map(|b| VertexSet::from_slice(n, &b.covered))
            .collect();
        let mut by_vertex = vec![Vec::new(); n];
        for (idx, b) in balls.iter().enumerate() {
            for &v in &b.covered {
                by_vertex[v].push(idx);
            }
        }
        SearchCtx {
            n,
            masks,
            radii: balls.iter().map(|b| b.radius).collect(),
            centers: balls.iter().map(|b| b.center).collect(),
            by_vertex,
            max_ball_size: balls.iter().map(|b| b.covered.len()).max().unwrap_or(1),
            nodes: 0,
            limit,
            exhausted: false,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.limit {
            self.exhausted = true;
        }
        !self.exhausted
    }

    /// The uncovered vertex with the fewest usable balls, plus those balls.
    /// Ties break toward the lowest vertex id.
    fn branch_vertex(&self, covered: &VertexSet) -> Option<(usize, Vec<usize>)> {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for v in 0..self.n {
            if covered.contains(v) {
                continue;
            }
            let usable: Vec<usize> = self.by_vertex[v]
                .iter()
                .copied()
                .filter(|&b| self.masks[b].is_disjoint(covered))
                .collect();
            match &best {
                Some((_, bs)) if bs.len() <= usable.len() => {}
                _ => {
                    let dead_end = usable.is_empty();
                    best = Some((v, usable));
                    if dead_end {
                        break;
                    }
                }
            }
        }
        best
    }

    fn witness(&self, chosen: &[usize], cap: usize) -> Broadcast {
        let mut costs = vec![0; self.n];
        for &b in chosen {
            costs[self.centers[b]] = self.radii[b];
        }
        Broadcast::new(costs, cap).expect("ball radii never exceed the cap")
    }

    /// Depth-first exact cover, stopping at the first complete one.
    fn find_first(&mut self, covered: &mut VertexSet, chosen: &mut Vec<usize>) -> bool {
        if !self.tick() {
            return false;
        }
        let Some((_, candidates)) = self.branch_vertex(covered) else {
            return true; // everything covered
        };
        for b in candidates {
            covered.union_with(&self.masks[b]);
            chosen.push(b);
            if self.find_first(covered, chosen) {
                return true;
            }
            chosen.pop();
            covered.xor_with(&self.masks[b]);
            if self.exhausted {
                break;
            }
        }
        false
    }

    /// Branch and bound on total radius. The bound charges at least one
    /// unit per ball still needed: ceil(uncovered / max_ball_size).
    fn find_min_cost(
        &mut self,
        covered: &mut VertexSet,
        chosen: &mut Vec<usize>,
        cost: usize,
        best: &mut Option<(usize, Vec<usize>)>,
    ) {
        if !self.tick() {
            return;
        }
        let remaining = self.n - covered.count();
        if remaining == 0 {
            if best.as_ref().is_none_or(|(c, _)| cost < *c) {
                *best = Some((cost, chosen.clone()));
            }
            return;
        }
        if let Some((best_cost, _)) = best {
            if cost + remaining.div_ceil(self.max_ball_size) >= *best_cost {
                return;
            }
        }
        let Some((_, candidates)) = self.branch_vertex(covered) else {
            unreachable!("remaining > 0 guarantees an uncovered vertex");
        };
        for b in candidates {
            covered.union_with(&self.masks[b]);
            chosen.push(b);
            self.find_min_cost(covered, chosen, cost + self.radii[b], best);
            chosen.pop();
            covered.xor_with(&self.masks[b]);
            if self.exhausted {
                break;
            }
        }
    }

    /// Collects every exact cover of total radius exactly `target`.
    fn enumerate_at_cost(
        &mut self,
        covered: &mut VertexSet,
        chosen: &mut Vec<usize>,
        cost: usize,
        target: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !self.tick() {
            return;
        }
        let remaining = self.n - covered.count();
        if remaining == 0 {
            if cost == target {
                out.push(chosen.clone());
            }
            return;
        }
        if cost + remaining.div_ceil(self.max_ball_size) > target {
            return;
        }
        let Some((_, candidates)) = self.branch_vertex(covered) else {
            unreachable!("remaining > 0 guarantees an uncovered vertex");
        };
        for b in candidates {
            covered.union_with(&self.masks[b]);
            chosen.push(b);
            self.enumerate_at_cost(covered, chosen, cost + self.radii[b], target, out);
            chosen.pop();
            covered.xor_with(&self.masks[b]);
            if self.exhausted {
                break;
            }
        }
    }

    /// Maximum-coverage disjoint ball packing. Branches on the highest-id
    /// vertex that is neither covered nor explicitly skipped, with the
    /// skip decision tried last; coverage ties keep the lexicographically
    /// smallest witness.
    #[allow(clippy::too_many_arguments)]
    fn max_pack(
        &mut self,
        covered: &mut VertexSet,
        skipped: &mut VertexSet,
        chosen: &mut Vec<usize>,
        coverage: usize,
        undecided: usize,
        hint: usize,
        best: &mut (usize, Vec<usize>),
    ) {
        if !self.tick() {
            return;
        }
        if coverage + undecided < best.0 {
            return;
        }
        let mut v = hint;
        let branch = loop {
            if !covered.contains(v) && !skipped.contains(v) {
                break Some(v);
            }
            if v == 0 {
                break None;
            }
            v -= 1;
        };
        let Some(v) = branch else {
            let witness = self.witness(chosen, usize::MAX).costs().to_vec();
            if coverage > best.0 || (coverage == best.0 && witness < best.1) {
                *best = (coverage, witness);
            }
            return;
        };
        // A ball through a skipped vertex belongs to the branch where that
        // vertex was covered instead; admitting it here would revisit the
        // same packing and break the undecided count.
        let candidates: Vec<usize> = self.by_vertex[v]
            .iter()
            .copied()
            .filter(|&b| self.masks[b].is_disjoint(covered) && self.masks[b].is_disjoint(skipped))
            .collect();
        for b in candidates {
            let gained = self.masks[b].count();
            covered.union_with(&self.masks[b]);
            chosen.push(b);
            self.max_pack(
                covered,
                skipped,
                chosen,
                coverage + gained,
                undecided - gained,
                v,
                best,
            );
            chosen.pop();
            covered.xor_with(&self.masks[b]);
            if self.exhausted {
                return;
            }
        }
        skipped.insert(v);
        self.max_pack(covered, skipped, chosen, coverage, undecided - 1, v, best);
        skipped.remove(v);
    }
}

// ---------------------------------------------------------------------------
// Public objectives.

/// Whether the graph admits an efficient k-limited dominating broadcast.
pub fn exists_k_eldb(g: &Graph, k: usize) -> Result<SolveResult> {
    solve(g, Objective::Exists, Some(k), &SolverConfig::default())
}

/// Minimum total cost over all efficient k-limited dominating broadcasts;
/// infeasible when k is below the minimum covering radius.
pub fn gamma_ebk(g: &Graph, k: usize) -> Result<SolveResult> {
    solve(g, Objective::MinCost, Some(k), &SolverConfig::default())
}

/// Maximum number of vertices coverable exactly once by pairwise-disjoint
/// balls of radius at most k.
pub fn f_k(g: &Graph, k: usize) -> Result<SolveResult> {
    solve(g, Objective::MaxCoverage, Some(k), &SolverConfig::default())
}

/// Minimum covering radius: the least k admitting a k-ELDB. Always between
/// 1 and the radius, since a central vertex broadcasting at the radius
/// covers everything exactly once.
pub fn mcr(g: &Graph) -> Result<SolveResult> {
    solve(g, Objective::Mcr, None, &SolverConfig::default())
}

/// Smallest k such that an efficient dominating broadcast exists using no
/// cost-1 broadcaster.
pub fn min_k_without_cost_one(g: &Graph) -> Result<SolveResult> {
    solve(g, Objective::MinKNoCostOne, None, &SolverConfig::default())
}

/// Configurable entry point behind the objective-specific helpers.
pub fn solve(
    g: &Graph,
    objective: Objective,
    k: Option<usize>,
    cfg: &SolverConfig,
) -> Result<SolveResult> {
    let d = all_pairs_distances(g)?;
    let fixed_k = || -> Result<usize> {
        let k =
            k.ok_or_else(|| Error::InvalidParameter(format!("objective {objective:?} needs k")))?;
        if k < 1 {
            return Err(Error::InvalidParameter("k must be >= 1".into()));
        }
        Ok(k)
    };
    match objective {
        Objective::Exists => {
            let k = fixed_k()?;
            Ok(exists_inner(
                g,
                &d,
                k,
                false,
                cfg.node_limit,
                Objective::Exists,
            ))
        }
        Objective::MinCost => {
            let k = fixed_k()?;
            let balls = enumerate_balls(g, &d, k, false);
            let mut ctx = SearchCtx::new(g.vertex_count(), &balls, cfg.node_limit);
            let mut best = None;
            ctx.find_min_cost(&mut VertexSet::empty(ctx.n), &mut Vec::new(), 0, &mut best);
            if ctx.exhausted {
                return Ok(SolveResult::exhausted(Objective::MinCost, ctx.nodes));
            }
            Ok(match best {
                Some((cost, chosen)) => SolveResult {
                    objective: Objective::MinCost,
                    feasible: true,
                    value: Some(cost),
                    witness: Some(ctx.witness(&chosen, k)),
                    nodes_explored: ctx.nodes,
                    exhausted: false,
                },
                None => SolveResult {
                    objective: Objective::MinCost,
                    feasible: false,
                    value: None,
                    witness: None,
                    nodes_explored: ctx.nodes,
                    exhausted: false,
                },
            })
        }
        Objective::MaxCoverage => {
            let k = fixed_k()?;
            let balls = enumerate_balls(g, &d, k, false);
            let n = g.vertex_count();
            let mut ctx = SearchCtx::new(n, &balls, cfg.node_limit);
            let mut best = (0, vec![0; n]);
            ctx.max_pack(
                &mut VertexSet::empty(n),
                &mut VertexSet::empty(n),
                &mut Vec::new(),
                0,
                n,
                n - 1,
                &mut best,
            );
            if ctx.exhausted {
                return Ok(SolveResult::exhausted(Objective::MaxCoverage, ctx.nodes));
            }
            let (coverage, costs) = best;
            Ok(SolveResult {
                objective: Objective::MaxCoverage,
                feasible: true,
                value: Some(coverage),
                witness: Some(Broadcast::new(costs, k).expect("radii bounded by k")),
                nodes_explored: ctx.nodes,
                exhausted: false,
            })
        }
        Objective::Mcr => {
            let mut nodes = 0;
            for k in 1..=d.radius() {
                let remaining = cfg.node_limit.saturating_sub(nodes);
                let mut r = exists_inner(g, &d, k, false, remaining, Objective::Mcr);
                nodes += r.nodes_explored;
                r.nodes_explored = nodes;
                if r.exhausted {
                    return Ok(r);
                }
                if r.feasible {
                    r.value = Some(k);
                    return Ok(r);
                }
            }
            unreachable!("a center vertex broadcasting at the radius always works")
        }
        Objective::MinKNoCostOne => {
            let mut nodes = 0;
            for k in 2..=d.radius().max(2) {
                let remaining = cfg.node_limit.saturating_sub(nodes);
                let mut r = exists_inner(g, &d, k, true, remaining, Objective::MinKNoCostOne);
                nodes += r.nodes_explored;
                r.nodes_explored = nodes;
                if r.exhausted {
                    return Ok(r);
                }
                if r.feasible {
                    r.value = Some(k);
                    return Ok(r);
                }
            }
            unreachable!("a center ball of radius max(rad, 2) covers everything exactly once")
        }
    }
}

fn exists_inner(
    g: &Graph,
    d: &DistanceMatrix,
    k: usize,
    forbid_cost_one: bool,
    limit: u64,
    objective: Objective,
) -> SolveResult {
    let balls = enumerate_balls(g, d, k, forbid_cost_one);
    let mut ctx = SearchCtx::new(g.vertex_count(), &balls, limit);
    let mut chosen = Vec::new();
    let found = ctx.find_first(&mut VertexSet::empty(ctx.n), &mut chosen);
    if ctx.exhausted {
        return SolveResult::exhausted(objective, ctx.nodes);
    }
    SolveResult {
        objective,
        feasible: found,
        value: Some(usize::from(found)),
        witness: found.then(|| ctx.witness(&chosen, k)),
        nodes_explored: ctx.nodes,
        exhausted: false,
    }
}

/// All minimum-cost k-ELDB witnesses, sorted by cost vector; `None` when no
/// k-ELDB exists.
pub fn enumerate_optimal(g: &Graph, k: usize) -> Result<Option<(usize, Vec<Broadcast>)>> {
    let best = gamma_ebk(g, k)?;
    if best.exhausted {
        return Err(Error::TooLarge(
            "node budget exhausted while computing the optimum".into(),
        ));
    }
    if !best.feasible {
        return Ok(None);
    }
    let target = best.value.expect("feasible min-cost carries a value");
    let d = all_pairs_distances(g)?;
    let balls = enumerate_balls(g, &d, k, false);
    let mut ctx = SearchCtx::new(g.vertex_count(), &balls, DEFAULT_NODE_LIMIT);
    let mut covers = Vec::new();
    ctx.enumerate_at_cost(
        &mut VertexSet::empty(ctx.n),
        &mut Vec::new(),
        0,
        target,
        &mut covers,
    );
    if ctx.exhausted {
        return Err(Error::TooLarge(
            "node budget exhausted while enumerating optima".into(),
        ));
    }
    let mut witnesses: Vec<Broadcast> = covers.iter().map(|c| ctx.witness(c, k)).collect();
    witnesses.sort_by(|a, b| a.costs().cmp(b.costs()));
    Ok(Some((target, witnesses)))
}

// ---------------------------------------------------------------------------
// Brute-force oracle.

/// Exhaustive enumeration of all (k+1)^n cost vectors, filtered through
/// [`classify`]. Deliberately independent of the exact-cover machinery; used
/// to cross-check it on tiny instances.
pub fn brute_force_oracle(g: &Graph, k: usize, objective: Objective) -> Result<SolveResult> {
    brute_force_with(g, k, objective, &SolverConfig::default())
}

pub fn brute_force_with(
    g: &Graph,
    k: usize,
    objective: Objective,
    cfg: &SolverConfig,
) -> Result<SolveResult> {
    let n = g.vertex_count();
    if n > cfg.brute_vertex_limit {
        return Err(Error::TooLarge(format!(
            "brute force refuses n = {n} > {}",
            cfg.brute_vertex_limit
        )));
    }
    if k > 3 {
        return Err(Error::TooLarge(format!("brute force refuses k = {k} > 3")));
    }
    if k < 1 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    let d = all_pairs_distances(g)?;
    match objective {
        Objective::Exists | Objective::MinCost | Objective::MaxCoverage => {
            Ok(brute_fixed_k(g, &d, k, objective, false))
        }
        Objective::Mcr | Objective::MinKNoCostOne => {
            let forbid = objective == Objective::MinKNoCostOne;
            let lo = if forbid { 2 } else { 1 };
            let mut nodes = 0;
            for kk in lo..=d.radius().max(lo) {
                if kk > 3 {
                    return Err(Error::TooLarge(
                        "brute force cannot search beyond k = 3".into(),
                    ));
                }
                let mut r = brute_fixed_k(g, &d, kk, Objective::Exists, forbid);
                nodes += r.nodes_explored;
                if r.feasible {
                    r.objective = objective;
                    r.value = Some(kk);
                    r.nodes_explored = nodes;
                    return Ok(r);
                }
            }
            unreachable!("a central broadcast at max(rad, 2) always succeeds")
        }
    }
}

fn brute_fixed_k(
    g: &Graph,
    d: &DistanceMatrix,
    k: usize,
    objective: Objective,
    forbid_cost_one: bool,
) -> SolveResult {
    let n = g.vertex_count();
    let base = k + 1;
    let total = (base as u64).pow(n as u32);
    let mut nodes = 0u64;
    let mut best_cost: Option<(usize, Vec<usize>)> = None;
    let mut best_cover: (usize, Option<Vec<usize>>) = (0, None);
    let mut costs = vec![0usize; n];
    for index in 0..total {
        nodes += 1;
        let mut rest = index;
        for c in costs.iter_mut() {
            *c = (rest % base as u64) as usize;
            rest /= base as u64;
        }
        if forbid_cost_one && costs.contains(&1) {
            continue;
        }
        let f = Broadcast::new(costs.clone(), k).expect("digits bounded by k");
        let report = classify(g, d, &f).expect("dimensions match");
        match objective {
            Objective::Exists => {
                if report.is_k_eldb {
                    return SolveResult {
                        objective,
                        feasible: true,
                        value: Some(1),
                        witness: Some(f),
                        nodes_explored: nodes,
                        exhausted: false,
                    };
                }
            }
            Objective::MinCost => {
                if report.is_k_eldb && best_cost.as_ref().is_none_or(|(c, _)| report.cost < *c) {
                    best_cost = Some((report.cost, costs.clone()));
                }
            }
            Objective::MaxCoverage => {
                if report.is_efficient && report.coverage_count > best_cover.0 {
                    best_cover = (report.coverage_count, Some(costs.clone()));
                }
            }
            _ => unreachable!("outer dispatch handles search objectives"),
        }
    }
    match objective {
        Objective::Exists => SolveResult {
            objective,
            feasible: false,
            value: Some(0),
            witness: None,
            nodes_explored: nodes,
            exhausted: false,
        },
        Objective::MinCost => match best_cost {
            Some((cost, costs)) => SolveResult {
                objective,
                feasible: true,
                value: Some(cost),
                witness: Some(Broadcast::new(costs, k).expect("bounded")),
                nodes_explored: nodes,
                exhausted: false,
            },
            None => SolveResult {
                objective,
                feasible: false,
                value: None,
                witness: None,
                nodes_explored: nodes,
                exhausted: false,
            },
        },
        Objective::MaxCoverage => {
            let (coverage, costs) = best_cover;
            SolveResult {
                objective,
                feasible: true,
                value: Some(coverage),
                witness: Some(
                    Broadcast::new(costs.unwrap_or_else(|| vec![0; n]), k).expect("bounded"),
                ),
                nodes_explored: nodes,
                exhausted: false,
            }
        }
        _ => unreachable!(),
    }
}
