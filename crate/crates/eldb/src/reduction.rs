//! EXACT 3-SAT reduction gadget: per-variable bicentral trees whose two
//! centers stand for a literal and its negation, clause vertices joined to
//! their three literal centers by length-k subdivided paths, and the
//! translation between truth assignments and broadcasts.

use serde::Serialize;

use crate::broadcast::{classify, Broadcast};
use crate::distance::all_pairs_distances_saturating;
use crate::error::{Error, Result};
use crate::families::build_tk;
use crate::graph::Graph;
use crate::parallel;
use crate::solver::{self, Objective, SolveResult, SolverConfig};

/// A signed literal over 1-based variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lit {
    pub var: usize,
    pub negated: bool,
}

impl Lit {
    pub fn from_dimacs(value: i64) -> Lit {
        Lit {
            var: value.unsigned_abs() as usize,
            negated: value < 0,
        }
    }
}

/// A CNF formula whose clauses each hold exactly three literals over three
/// distinct variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub variable_count: usize,
    pub clauses: Vec<[Lit; 3]>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<[Lit; 3]>) -> Result<CnfFormula> {
        for (idx, clause) in clauses.iter().enumerate() {
            validate_clause(clause, variable_count, idx + 1)?;
        }
        Ok(CnfFormula {
            variable_count,
            clauses,
        })
    }

    /// Does the assignment make exactly one literal true in every clause?
    pub fn exactly_one_satisfied(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause
                .iter()
                .filter(|lit| assignment[lit.var - 1] != lit.negated)
                .count()
                == 1
        })
    }
}

fn validate_clause(clause: &[Lit; 3], n: usize, line: usize) -> Result<()> {
    for lit in clause {
        if lit.var == 0 || lit.var > n {
            let signed = if lit.negated {
                -(lit.var as i64)
            } else {
                lit.var as i64
            };
            return Err(Error::LiteralOutOfRange {
                line,
                lit: signed,
                n,
            });
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if clause[i].var == clause[j].var {
                if clause[i].negated != clause[j].negated {
                    return Err(Error::TautologicalPair {
                        line,
                        var: clause[i].var,
                    });
                }
                return Err(Error::RepeatedVariable {
                    line,
                    var: clause[i].var,
                });
            }
        }
    }
    Ok(())
}

/// Parses the DIMACS CNF subset: `c` comments, a `p cnf n m` header, then
/// `m` lines of exactly three nonzero literals terminated by 0.
pub fn parse_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::Malformed {
                    line: line_no,
                    msg: "duplicate header".into(),
                });
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(Error::Malformed {
                    line: line_no,
                    msg: format!("expected 'p cnf n m', got {line:?}"),
                });
            }
            let n = fields[2].parse().map_err(|_| Error::Malformed {
                line: line_no,
                msg: format!("bad variable count {:?}", fields[2]),
            })?;
            let m = fields[3].parse().map_err(|_| Error::Malformed {
                line: line_no,
                msg: format!("bad clause count {:?}", fields[3]),
            })?;
            header = Some((n, m, line_no));
            continue;
        }
        let Some((n, m, _)) = header else {
            return Err(Error::Malformed {
                line: line_no,
                msg: "clause before 'p cnf' header".into(),
            });
        };
        if clauses.len() == m {
            return Err(Error::Malformed {
                line: line_no,
                msg: format!("more than the declared {m} clauses"),
            });
        }
        let mut values = Vec::new();
        for field in line.split_whitespace() {
            let v: i64 = field.parse().map_err(|_| Error::Malformed {
                line: line_no,
                msg: format!("not an integer: {field:?}"),
            })?;
            values.push(v);
        }
        if values.last() != Some(&0) {
            return Err(Error::Malformed {
                line: line_no,
                msg: "clause line must end with 0".into(),
            });
        }
        values.pop();
        if values.contains(&0) {
            return Err(Error::Malformed {
                line: line_no,
                msg: "unexpected 0 inside a clause".into(),
            });
        }
        if values.len() != 3 {
            return Err(Error::ClauseWidth {
                line: line_no,
                width: values.len(),
            });
        }
        let clause = [
            Lit::from_dimacs(values[0]),
            Lit::from_dimacs(values[1]),
            Lit::from_dimacs(values[2]),
        ];
        validate_clause(&clause, n, line_no)?;
        clauses.push(clause);
    }
    let (n, m, header_line) = header.ok_or(Error::Malformed {
        line: 1,
        msg: "missing 'p cnf' header".into(),
    })?;
    if clauses.len() != m {
        return Err(Error::Malformed {
            line: header_line,
            msg: format!("declared {m} clauses, found {}", clauses.len()),
        });
    }
    CnfFormula::new(n, clauses)
}

/// The gadget graph plus the role map back to the formula.
///
/// The graph is a disjoint union when some variable appears in no clause
/// (its tree block attaches to nothing); solving and classification then
/// work per component, which is sound because balls never cross
/// components.
#[derive(Debug, Clone)]
pub struct ReductionGraph {
    pub graph: Graph,
    pub k: usize,
    /// Center labeled with the positive literal of each variable.
    pub pos_vertex: Vec<usize>,
    /// Center labeled with the negated literal of each variable.
    pub neg_vertex: Vec<usize>,
    pub clause_vertex: Vec<usize>,
    /// Per clause and literal slot, the k-1 internal path vertices ordered
    /// from the clause vertex toward the literal center.
    pub path_vertices: Vec<[Vec<usize>; 3]>,
}

impl ReductionGraph {
    /// The gadget vertex of the literal center for `lit`.
    pub fn literal_vertex(&self, lit: Lit) -> usize {
        if lit.negated {
            self.neg_vertex[lit.var - 1]
        } else {
            self.pos_vertex[lit.var - 1]
        }
    }
}

/// Builds the gadget: one tree block per variable, one vertex per clause,
/// and a length-k path from each clause vertex to each of its three
/// literal centers. Total vertex count is (3k-2)m + (4k-2)n.
pub fn build_reduction(cnf: &CnfFormula, k: usize) -> Result<ReductionGraph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "gadget needs k >= 2, got {k}"
        )));
    }
    let n = cnf.variable_count;
    let m = cnf.clauses.len();
    let block = 4 * k - 2;
    let total = (3 * k - 2) * m + block * n;
    let tk = build_tk(k)?;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut labels = vec![String::new(); total];

    let mut pos_vertex = Vec::with_capacity(n);
    let mut neg_vertex = Vec::with_capacity(n);
    for i in 0..n {
        let base = i * block;
        for (u, v) in tk.edges() {
            edges.push((base + u, base + v));
        }
        pos_vertex.push(base);
        neg_vertex.push(base + 1);
        labels[base] = format!("pos:{}", i + 1);
        labels[base + 1] = format!("neg:{}", i + 1);
        for local in 2..block {
            labels[base + local] = format!("tk:{}:{}", i + 1, local);
        }
    }

    let clause_base = n * block;
    let clause_vertex: Vec<usize> = (0..m).map(|j| clause_base + j).collect();
    for (j, &c) in clause_vertex.iter().enumerate() {
        labels[c] = format!("clause:{}", j + 1);
    }

    let path_base = clause_base + m;
    let steps = k - 1;
    let mut path_vertices = Vec::with_capacity(m);
    for (j, clause) in cnf.clauses.iter().enumerate() {
        let mut slots: [Vec<usize>; 3] = Default::default();
        for (slot, lit) in clause.iter().enumerate() {
            let start = path_base + (j * 3 + slot) * steps;
            let internals: Vec<usize> = (0..steps).map(|t| start + t).collect();
            for (t, &v) in internals.iter().enumerate() {
                labels[v] = format!("path:{}:{}:{}", j + 1, slot, t + 1);
            }
            let center = if lit.negated {
                neg_vertex[lit.var - 1]
            } else {
                pos_vertex[lit.var - 1]
            };
            // clause -> internals -> literal center, k edges in all
            let mut prev = clause_vertex[j];
            for &v in &internals {
                edges.push((prev, v));
                prev = v;
            }
            edges.push((prev, center));
            slots[slot] = internals;
        }
        path_vertices.push(slots);
    }

    let graph = Graph::from_edges_labeled_any(total, &edges, Some(labels))?;
    Ok(ReductionGraph {
        graph,
        k,
        pos_vertex,
        neg_vertex,
        clause_vertex,
        path_vertices,
    })
}

fn components_of(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// k-ELDB existence on the gadget, solving each connected component
/// independently and merging the witnesses.
pub fn gadget_exists_k_eldb(
    rg: &ReductionGraph,
    k: usize,
    cfg: &SolverConfig,
) -> Result<SolveResult> {
    let components = components_of(&rg.graph);
    if components.len() == 1 {
        return solver::solve(&rg.graph, Objective::Exists, Some(k), cfg);
    }
    let mut merged = vec![0usize; rg.graph.vertex_count()];
    let mut nodes = 0u64;
    let mut feasible = true;
    for comp in &components {
        let mut edges = Vec::new();
        for (pos, &u) in comp.iter().enumerate() {
            for &v in rg.graph.neighbors(u) {
                if u < v {
                    let vpos = comp
                        .binary_search(&v)
                        .expect("neighbor shares the component");
                    edges.push((pos, vpos));
                }
            }
        }
        let sub = Graph::from_edges(comp.len(), &edges)?;
        let sub_cfg = SolverConfig {
            node_limit: cfg.node_limit.saturating_sub(nodes),
            ..*cfg
        };
        let r = solver::solve(&sub, Objective::Exists, Some(k), &sub_cfg)?;
        nodes += r.nodes_explored;
        if r.exhausted {
            return Ok(SolveResult {
                objective: Objective::Exists,
                feasible: false,
                value: None,
                witness: None,
                nodes_explored: nodes,
                exhausted: true,
            });
        }
        if !r.feasible {
            feasible = false;
            break;
        }
        let w = r.witness.expect("feasible existence carries a witness");
        for (pos, &u) in comp.iter().enumerate() {
            merged[u] = w.cost_of(pos);
        }
    }
    Ok(SolveResult {
        objective: Objective::Exists,
        feasible,
        value: Some(usize::from(feasible)),
        witness: if feasible {
            Some(Broadcast::new(merged, k)?)
        } else {
            None
        },
        nodes_explored: nodes,
        exhausted: false,
    })
}

/// Broadcast induced by a truth assignment: cost k on the positive center
/// of each true variable and on the negated center of each false one.
pub fn assignment_to_broadcast(rg: &ReductionGraph, assignment: &[bool]) -> Result<Broadcast> {
    if assignment.len() != rg.pos_vertex.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} assignment bits for {} variables",
            assignment.len(),
            rg.pos_vertex.len()
        )));
    }
    let mut costs = vec![0; rg.graph.vertex_count()];
    for (i, &value) in assignment.iter().enumerate() {
        let v = if value {
            rg.pos_vertex[i]
        } else {
            rg.neg_vertex[i]
        };
        costs[v] = rg.k;
    }
    Broadcast::new(costs, rg.k)
}

/// Outcome of reading an assignment back out of a broadcast.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ExtractOutcome {
    Assignment(Vec<bool>),
    /// The broadcast is a valid k-ELDB but not of the expected one-center-
    /// per-variable shape. No such witness should exist; seeing one is a
    /// reduction-soundness alarm, not a silent repair.
    Rejected {
        reason: String,
    },
}

/// Reads the truth assignment off a k-ELDB witness on the gadget.
///
/// Errors when the broadcast is not an efficient dominating broadcast at
/// all; rejects (structured) when it is one but not of the expected shape.
pub fn broadcast_to_assignment(rg: &ReductionGraph, f: &Broadcast) -> Result<ExtractOutcome> {
    let d = all_pairs_distances_saturating(&rg.graph);
    let report = classify(&rg.graph, &d, f)?;
    if !report.is_k_eldb {
        return Err(Error::NotEfficientDominating(
            "some vertex is not heard exactly once".into(),
        ));
    }
    let n = rg.pos_vertex.len();
    let mut assignment = vec![false; n];
    let mut decided = vec![false; n];
    for v in f.broadcasters() {
        let cost = f.cost_of(v);
        let role = (0..n).find_map(|i| {
            if rg.pos_vertex[i] == v {
                Some((i, true))
            } else if rg.neg_vertex[i] == v {
                Some((i, false))
            } else {
                None
            }
        });
        let Some((i, positive)) = role else {
            return Ok(ExtractOutcome::Rejected {
                reason: format!("broadcaster {v} is not a literal center"),
            });
        };
        if cost != rg.k {
            return Ok(ExtractOutcome::Rejected {
                reason: format!(
                    "literal center {v} broadcasts at cost {cost}, expected {}",
                    rg.k
                ),
            });
        }
        if decided[i] {
            return Ok(ExtractOutcome::Rejected {
                reason: format!("variable {} has both centers broadcasting", i + 1),
            });
        }
        decided[i] = true;
        assignment[i] = positive;
    }
    if let Some(i) = decided.iter().position(|&d| !d) {
        return Ok(ExtractOutcome::Rejected {
            reason: format!("variable {} has no broadcasting center", i + 1),
        });
    }
    Ok(ExtractOutcome::Assignment(assignment))
}

/// All assignments satisfying every clause with exactly one true literal,
/// in counting order (variable i is bit i-1).
pub fn x3sat_brute(cnf: &CnfFormula) -> Result<Vec<Vec<bool>>> {
    let n = cnf.variable_count;
    if n > 20 {
        return Err(Error::TooLarge(format!(
            "exhaustive assignment search refuses n = {n} > 20"
        )));
    }
    let mut out = Vec::new();
    for bits in 0u64..(1 << n) {
        let assignment: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        if cnf.exactly_one_satisfied(&assignment) {
            out.push(assignment);
        }
    }
    Ok(out)
}

/// Empirical verdict for one reduction instance.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    pub variables: usize,
    pub clauses: usize,
    pub k: usize,
    pub vertex_count: usize,
    pub expected_vertex_count: usize,
    pub x3sat_satisfiable: bool,
    pub satisfying_assignments: usize,
    pub eldb_feasible: bool,
    /// Satisfiability on the formula side matches feasibility on the
    /// gadget side.
    pub equivalence_holds: bool,
    /// Assignments whose broadcast failed validation or did not read back
    /// identically; zero expected.
    pub roundtrip_failures: usize,
    /// The solver witness (when feasible) extracts to a satisfying
    /// assignment of the expected shape.
    pub witness_shape_ok: bool,
    pub nodes_explored: u64,
    pub exhausted: bool,
}

/// Builds the gadget, runs both oracles, and checks the round trips.
pub fn verify_reduction(cnf: &CnfFormula, k: usize) -> Result<ReductionReport> {
    verify_reduction_with(cnf, k, &SolverConfig::default())
}

pub fn verify_reduction_with(
    cnf: &CnfFormula,
    k: usize,
    cfg: &SolverConfig,
) -> Result<ReductionReport> {
    let rg = build_reduction(cnf, k)?;
    let n = cnf.variable_count;
    let m = cnf.clauses.len();
    let expected_vertex_count = (3 * k - 2) * m + (4 * k - 2) * n;
    let assignments = x3sat_brute(cnf)?;
    let solved = gadget_exists_k_eldb(&rg, k, cfg)?;
    if solved.exhausted {
        // Verdict withheld: report the exhaustion, claim nothing.
        return Ok(ReductionReport {
            variables: n,
            clauses: m,
            k,
            vertex_count: rg.graph.vertex_count(),
            expected_vertex_count,
            x3sat_satisfiable: !assignments.is_empty(),
            satisfying_assignments: assignments.len(),
            eldb_feasible: false,
            equivalence_holds: false,
            roundtrip_failures: 0,
            witness_shape_ok: false,
            nodes_explored: solved.nodes_explored,
            exhausted: true,
        });
    }

    let d = all_pairs_distances_saturating(&rg.graph);
    let mut roundtrip_failures = 0;
    for assignment in &assignments {
        let f = assignment_to_broadcast(&rg, assignment)?;
        let ok = classify(&rg.graph, &d, &f)?.is_k_eldb
            && broadcast_to_assignment(&rg, &f)? == ExtractOutcome::Assignment(assignment.clone());
        if !ok {
            roundtrip_failures += 1;
        }
    }

    let witness_shape_ok = match &solved.witness {
        Some(w) => match broadcast_to_assignment(&rg, w)? {
            ExtractOutcome::Assignment(t) => cnf.exactly_one_satisfied(&t),
            ExtractOutcome::Rejected { .. } => false,
        },
        None => !solved.feasible,
    };

    Ok(ReductionReport {
        variables: n,
        clauses: m,
        k,
        vertex_count: rg.graph.vertex_count(),
        expected_vertex_count,
        x3sat_satisfiable: !assignments.is_empty(),
        satisfying_assignments: assignments.len(),
        eldb_feasible: solved.feasible,
        equivalence_holds: !assignments.is_empty() == solved.feasible,
        roundtrip_failures,
        witness_shape_ok,
        nodes_explored: solved.nodes_explored,
        exhausted: false,
    })
}

/// Verifies a batch of instances, fanning out across the rayon pool when
/// the `parallel` feature is on.
pub fn verify_many(cnfs: Vec<CnfFormula>, k: usize) -> Result<Vec<ReductionReport>> {
    parallel::map_collect(cnfs, |cnf| verify_reduction(&cnf, k))
        .into_iter()
        .collect()
}
