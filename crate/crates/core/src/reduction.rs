//! Graph codes from the independent-set reduction.
//!
//! For a graph `G` and a positive integer `c`, every vertex and every edge
//! carries `binom(|V|, c-1)` qubits labelled by `(c-1)`-subsets `ν`, and
//! each vertex carries one or two extra qubits so that the vertex operator
//! `X(v)` (X on the vertex's own qubits and on the qubits of its incident
//! edges) has even support. The stabilizer is generated by the products
//! `X(u)X(v)` and the global `Z`; all odd products `X(A)` represent one
//! logical class whose `c`-disjointness tracks `α(G)`.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::disjointness::{c_disjointness, DisjointCollection};
use crate::gf2::{BitMatrix, BitVector};
use crate::pauli::{LogicalClass, PauliOperator, StabilizerCode};
use crate::{ratio_serde, Error, Integer, Rational, Result};

/// Default cap on the number of qubits of a graph code.
pub const DEFAULT_QUBIT_CAP: usize = 100_000;
/// Largest vertex count accepted by [`independence_number`].
pub const INDEPENDENCE_VERTEX_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edges are stored as `(min, max)` in input order.
    pub fn new(num_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::from_lined(num_vertices, edges.into_iter().map(|(u, v)| (0, u, v)))
    }

    fn from_lined(num_vertices: usize, edges: impl IntoIterator<Item = (usize, usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (line, u, v) in edges {
            let fail = |message: String| Error::Parse { line, message };
            if u >= num_vertices || v >= num_vertices {
                return Err(fail(format!("edge ({u}, {v}) outside 0..{num_vertices}")));
            }
            if u == v {
                return Err(fail(format!("self-loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(fail(format!("duplicate edge ({}, {})", e.0, e.1)));
            }
            out.push(e);
        }
        Ok(Self {
            num_vertices,
            edges: out,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.num_vertices).any(|v| self.degree(v) == 0)
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        self.first_conflict(vs).is_none()
    }

    fn first_conflict(&self, vs: &[usize]) -> Option<(usize, usize)> {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if u == v || self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Parses the graph file format: the vertex count on the first line,
    /// then one `u v` edge per line. Blank lines and `#` comments are
    /// ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (first, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        let num_vertices: usize = header.parse().map_err(|_| Error::Parse {
            line: first,
            message: format!("bad vertex count {header:?}"),
        })?;
        let mut edges = Vec::new();
        for (line, l) in lines {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let parsed: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
            match parsed.as_deref() {
                Some([u, v]) => edges.push((line, *u, *v)),
                _ => {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected two vertex indices, found {l:?}"),
                    })
                }
            }
        }
        Self::from_lined(num_vertices, edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.num_vertices);
        for (u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum QubitLabel {
    VertexSubset { vertex: usize, subset: Vec<usize> },
    EdgeSubset { edge: (usize, usize), subset: Vec<usize> },
    VertexExtra { vertex: usize, index: u8 },
}

#[derive(Debug, Clone)]
pub struct GraphCode {
    pub graph: Graph,
    pub c: u64,
    pub code: StabilizerCode,
    pub labels: Vec<QubitLabel>,
    /// Support of `X(v)` for every vertex.
    pub vertex_supports: Vec<BitVector>,
    /// `X(v₀)`, the representative defining the logical class.
    pub logical_rep: PauliOperator,
}

impl GraphCode {
    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn logical(&self) -> LogicalClass<'_> {
        LogicalClass::new(&self.code, self.logical_rep.clone())
    }

    /// `X(A) = ∏_{v ∈ A} X(v)`.
    pub fn x_of_set(&self, vs: &[usize]) -> PauliOperator {
        let n = self.n();
        let mut x = BitVector::zeros(n);
        for &v in vs {
            x.xor_assign(&self.vertex_supports[v]);
        }
        PauliOperator::from_xz(&x, &BitVector::zeros(n))
    }

    /// The vertex set `A` with `p = X(A)` up to the global `Z`, if any.
    pub fn vertex_set_of(&self, p: &PauliOperator) -> Option<Vec<usize>> {
        let n = self.n();
        if p.num_qubits() != n {
            return None;
        }
        let z = p.z_part();
        if !(z.is_zero() || z.count_ones() == n) {
            return None;
        }
        let x = p.x_part();
        // extra qubits of a vertex lie in X(v) alone
        let firsts: Vec<usize> = (0..self.graph.num_vertices())
            .map(|v| {
                self.labels
                    .iter()
                    .position(|l| matches!(l, QubitLabel::VertexExtra { vertex, .. } if *vertex == v))
                    .expect("every vertex has an extra qubit")
            })
            .collect();
        let vs: Vec<usize> = (0..self.graph.num_vertices()).filter(|&v| x.get(firsts[v])).collect();
        (self.x_of_set(&vs).x_part() == x).then_some(vs)
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Subsets of `0..n` of size `k` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Builds the graph code with the default qubit cap.
pub fn build_graph_code(g: &Graph, c: u64) -> Result<GraphCode> {
    build_graph_code_with_cap(g, c, DEFAULT_QUBIT_CAP)
}

pub fn build_graph_code_with_cap(g: &Graph, c: u64, max_qubits: usize) -> Result<GraphCode> {
    if c == 0 {
        return Err(Error::InvalidC(c));
    }
    let nv = g.num_vertices();
    if nv == 0 {
        return Err(Error::Parse {
            line: 0,
            message: "graph has no vertices".into(),
        });
    }
    let too_large = |size: String| Error::TooLarge {
        what: "graph code",
        size,
        cap: format!("{max_qubits} qubits"),
    };
    let k_sub = usize::try_from(c - 1).map_err(|_| too_large(format!("c = {c}")))?;
    let per = binomial(nv, k_sub);
    let odd_per = per.bit(0);
    let base = &per * BigUint::from(nv + g.edges().len());
    let base = base
        .to_usize()
        .filter(|&b| b + 2 * nv <= max_qubits)
        .ok_or_else(|| too_large(format!("{base} + extras qubits")))?;
    let per = per.to_usize().expect("bounded by base");
    let nus = subsets(nv, k_sub);

    let mut labels = Vec::with_capacity(base + 2 * nv);
    for v in 0..nv {
        for nu in &nus {
            labels.push(QubitLabel::VertexSubset {
                vertex: v,
                subset: nu.clone(),
            });
        }
    }
    for &e in g.edges() {
        for nu in &nus {
            labels.push(QubitLabel::EdgeSubset {
                edge: e,
                subset: nu.clone(),
            });
        }
    }
    let mut extra_start = vec![0usize; nv];
    let mut extra_count = vec![0usize; nv];
    for v in 0..nv {
        let odd = odd_per && (g.degree(v) + 1) % 2 == 1;
        extra_start[v] = labels.len();
        extra_count[v] = if odd { 1 } else { 2 };
        for i in 1..=extra_count[v] {
            labels.push(QubitLabel::VertexExtra {
                vertex: v,
                index: i as u8,
            });
        }
    }
    let n = labels.len();
    if n > max_qubits {
        return Err(too_large(n.to_string()));
    }

    let vertex_supports: Vec<BitVector> = (0..nv)
        .map(|v| {
            let mut s = BitVector::zeros(n);
            for i in 0..per {
                s.set(v * per + i, true);
            }
            for (ei, &(a, b)) in g.edges().iter().enumerate() {
                if a == v || b == v {
                    for i in 0..per {
                        s.set(nv * per + ei * per + i, true);
                    }
                }
            }
            for i in 0..extra_count[v] {
                s.set(extra_start[v] + i, true);
            }
            s
        })
        .collect();

    let zero = BitVector::zeros(n);
    let mut rows = Vec::with_capacity(nv);
    for s in &vertex_supports[1..] {
        rows.push(vertex_supports[0].xor(s).concat(&zero));
    }
    rows.push(zero.concat(&BitVector::ones(n)));
    let code = StabilizerCode::new(BitMatrix::from_rows(2 * n, rows)?)?;
    let logical_rep = PauliOperator::from_xz(&vertex_supports[0], &zero);
    Ok(GraphCode {
        graph: g.clone(),
        c,
        code,
        labels,
        vertex_supports,
        logical_rep,
    })
}

/// Exact independence number with a maximum independent set, found as a
/// maximum clique of the complement by branch-and-bound with greedy
/// colouring bounds.
pub fn independence_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let nv = g.num_vertices();
    if nv > INDEPENDENCE_VERTEX_CAP {
        return Err(Error::TooLarge {
            what: "independence search",
            size: format!("{nv} vertices"),
            cap: format!("{INDEPENDENCE_VERTEX_CAP} vertices"),
        });
    }
    if nv == 0 {
        return Ok((0, Vec::new()));
    }
    let all = if nv == 64 { u64::MAX } else { (1u64 << nv) - 1 };
    let mut comp = vec![all; nv];
    for (v, row) in comp.iter_mut().enumerate() {
        *row &= !(1u64 << v);
    }
    for &(u, v) in g.edges() {
        comp[u] &= !(1u64 << v);
        comp[v] &= !(1u64 << u);
    }

    struct Search<'a> {
        adj: &'a [u64],
        best: u64,
        best_size: u32,
    }

    impl Search<'_> {
        fn expand(&mut self, clique: u64, mut candidates: u64) {
            // greedy colouring of the candidates; colour classes are
            // independent in `adj`, so a clique takes one vertex from each
            let mut order = Vec::with_capacity(candidates.count_ones() as usize);
            let mut uncoloured = candidates;
            let mut colour = 0u32;
            while uncoloured != 0 {
                colour += 1;
                let mut avail = uncoloured;
                while avail != 0 {
                    let v = avail.trailing_zeros() as usize;
                    avail &= !(1u64 << v);
                    avail &= !self.adj[v];
                    uncoloured &= !(1u64 << v);
                    order.push((v, colour));
                }
            }
            for &(v, colour) in order.iter().rev() {
                if clique.count_ones() + colour <= self.best_size {
                    return;
                }
                let next = clique | (1u64 << v);
                let rest = candidates & self.adj[v];
                if rest == 0 {
                    if next.count_ones() > self.best_size {
                        self.best = next;
                        self.best_size = next.count_ones();
                    }
                } else {
                    self.expand(next, rest);
                }
                candidates &= !(1u64 << v);
            }
        }
    }

    let mut search = Search {
        adj: &comp,
        best: 0,
        best_size: 0,
    };
    search.expand(0, all);
    let set: Vec<usize> = (0..nv).filter(|&v| search.best >> v & 1 == 1).collect();
    Ok((set.len(), set))
}

/// Replaces every vertex `v` by `v` and `v + |V|`, and every edge by the
/// four edges between the copies of its endpoints.
pub fn double_graph(g: &Graph) -> Graph {
    let nv = g.num_vertices();
    let mut edges = Vec::with_capacity(4 * g.edges().len());
    for &(u, v) in g.edges() {
        edges.extend([(u, v), (u, v + nv), (u + nv, v), (u + nv, v + nv)]);
    }
    Graph::new(2 * nv, edges).expect("doubling preserves simplicity")
}

/// `{X(v) : v ∈ vs}`, plus `X(vs)` when `|vs|(c+1)` is odd.
pub fn collection_from_independent_set(gc: &GraphCode, vs: &[usize]) -> Result<DisjointCollection> {
    if let Some(&v) = vs.iter().find(|&&v| v >= gc.graph.num_vertices()) {
        return Err(Error::Parse {
            line: 0,
            message: format!("vertex {v} out of range"),
        });
    }
    if let Some((u, v)) = gc.graph.first_conflict(vs) {
        return Err(Error::NotIndependent(u, v));
    }
    let mut members: Vec<PauliOperator> = vs.iter().map(|&v| gc.x_of_set(&[v])).collect();
    if (vs.len() as u64 * (gc.c + 1)) % 2 == 1 {
        members.push(gc.x_of_set(vs));
    }
    Ok(DisjointCollection { members, c: gc.c })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma3Verdict {
    pub c: u64,
    pub alpha: usize,
    /// `α(G)(c+1) mod 2`.
    pub b: u64,
    /// `Δ_c` of the graph code's logical class.
    #[serde(with = "ratio_serde")]
    pub c_disjointness: Rational,
    /// `(α(G) + b) / c`.
    #[serde(with = "ratio_serde")]
    pub predicted: Rational,
    pub holds: bool,
    /// No isolated vertices and `2α(G) ≥ 9c³`; without it the comparison
    /// is informative only.
    pub hypothesis_met: bool,
}

impl Lemma3Verdict {
    /// The verdict if the hypothesis holds, otherwise
    /// [`Error::HypothesisNotMet`] describing both sides.
    pub fn binding(self) -> Result<Self> {
        if self.hypothesis_met {
            Ok(self)
        } else {
            Err(Error::HypothesisNotMet(format!(
                "need no isolated vertices and 2α ≥ 9c³ (α = {}, c = {}); Δ_c = {}, (α + b)/c = {}",
                self.alpha, self.c, self.c_disjointness, self.predicted
            )))
        }
    }
}

/// Compares `Δ_c` of the graph code with `(α(G) + b)/c`.
pub fn verify_lemma3(g: &Graph, c: u64) -> Result<Lemma3Verdict> {
    let gc = build_graph_code(g, c)?;
    let (alpha, _) = independence_number(g)?;
    let b = (alpha as u64 * (c + 1)) % 2;
    let hypothesis_met = !g.has_isolated_vertex()
        && Integer::from(2 * alpha as u64) >= Integer::from(9u64) * Integer::from(c).pow(3);
    let value = c_disjointness(&gc.logical(), c)?;
    let predicted = Rational::new(Integer::from(alpha as u64 + b), Integer::from(c));
    Ok(Lemma3Verdict {
        c,
        alpha,
        b,
        holds: value == predicted,
        c_disjointness: value,
        predicted,
        hypothesis_met,
    })
}

/// Whether no single-qubit Pauli is a nontrivial logical operator.
pub fn error_detecting_check(gc: &GraphCode) -> bool {
    gc.code.undetected_single_qubit_errors().is_empty()
}

/// Greedily picks one vertex from each member's vertex set, skipping
/// members that would break independence. Returns the chosen vertices and
/// the indices of the members kept.
pub fn independent_subcollection(gc: &GraphCode, members: &[PauliOperator]) -> (Vec<usize>, Vec<usize>) {
    let mut chosen: Vec<usize> = Vec::new();
    let mut kept = Vec::new();
    for (i, p) in members.iter().enumerate() {
        let Some(set) = gc.vertex_set_of(p) else {
            continue;
        };
        let pick = set
            .iter()
            .copied()
            .find(|&v| chosen.iter().all(|&u| u != v && !gc.graph.has_edge(u, v)));
        if let Some(v) = pick {
            chosen.push(v);
            kept.push(i);
        }
    }
    (chosen, kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disjointness::verify_collection;
    use crate::logical::distance_report;
    use crate::pauli::logical_basis;

    fn path2() -> Graph {
        Graph::new(2, [(0, 1)]).unwrap()
    }

    fn triangle() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::new(10, e).unwrap()
    }

    fn brute_alpha(g: &Graph) -> usize {
        let nv = g.num_vertices();
        (0u32..1 << nv)
            .filter(|m| {
                g.edges()
                    .iter()
                    .all(|&(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn qubit_counts() {
        let gc = build_graph_code(&path2(), 1).unwrap();
        assert_eq!((gc.n(), gc.code.num_generators(), gc.code.k()), (7, 2, 5));
        let gc = build_graph_code(&triangle(), 1).unwrap();
        assert_eq!(gc.n(), 9);
        assert!(!gc.logical().is_trivial());
    }

    #[test]
    fn vertex_operators_even_and_equivalent() {
        let g = petersen();
        for c in [1, 2] {
            let gc = build_graph_code(&g, c).unwrap();
            for v in 0..g.num_vertices() {
                assert_eq!(gc.vertex_supports[v].count_ones() % 2, 0);
                assert!(gc.logical().is_representative(&gc.x_of_set(&[v])));
            }
            assert!(gc.code.is_stabilizer(&gc.x_of_set(&[2, 7])));
        }
    }

    #[test]
    fn c_two_labels() {
        let gc = build_graph_code(&triangle(), 2).unwrap();
        // binom(3,1) = 3 qubits on each of 3 vertices and 3 edges, and
        // 3·(2+1) odd gives one extra per vertex
        assert_eq!(gc.n(), 18 + 3);
        assert_eq!(
            gc.labels[1],
            QubitLabel::VertexSubset {
                vertex: 0,
                subset: vec![1]
            }
        );
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&triangle()).unwrap().0, 1);
        assert_eq!(independence_number(&Graph::new(5, []).unwrap()).unwrap().0, 5);
        let (a, set) = independence_number(&petersen()).unwrap();
        assert_eq!(a, brute_alpha(&petersen()));
        assert_eq!(a, 4);
        assert!(petersen().is_independent(&set));
    }

    #[test]
    fn doubling() {
        let d = double_graph(&path2());
        assert_eq!((d.num_vertices(), d.edges().len()), (4, 4));
        assert_eq!(independence_number(&d).unwrap().0, 2);
        let e = double_graph(&Graph::new(3, []).unwrap());
        assert_eq!(independence_number(&e).unwrap().0, 6);
    }

    #[test]
    fn collections_from_independent_sets() {
        let g = Graph::new(3, []).unwrap();
        let gc = build_graph_code(&g, 1).unwrap();
        let col = collection_from_independent_set(&gc, &[0, 1, 2]).unwrap();
        assert_eq!(col.len(), 3);
        assert!(verify_collection(&col, &gc.logical()).valid);

        let gc2 = build_graph_code(&g, 2).unwrap();
        let col2 = collection_from_independent_set(&gc2, &[0, 1, 2]).unwrap();
        assert_eq!(col2.len(), 4);
        assert!(verify_collection(&col2, &gc2.logical()).valid);

        assert!(collection_from_independent_set(&gc, &[]).unwrap().is_empty());
        let gt = build_graph_code(&triangle(), 1).unwrap();
        assert_eq!(
            collection_from_independent_set(&gt, &[0, 1]),
            Err(Error::NotIndependent(0, 1))
        );
    }

    #[test]
    fn lemma3_star() {
        let star = Graph::new(6, (1..6).map(|i| (0, i))).unwrap();
        let v = verify_lemma3(&star, 1).unwrap().binding().unwrap();
        assert_eq!(v.alpha, 5);
        assert!(v.holds);
    }

    #[test]
    fn lemma3_hypothesis_gate() {
        let v = verify_lemma3(&path2(), 2).unwrap();
        assert!(!v.hypothesis_met);
        assert!(matches!(v.binding(), Err(Error::HypothesisNotMet(_))));
    }

    #[test]
    fn error_detection() {
        let gc = build_graph_code(&triangle(), 1).unwrap();
        assert!(error_detecting_check(&gc));
        let report = distance_report(&gc.code, &logical_basis(&gc.code)).unwrap();
        assert!(report.d_min >= 2);
        // on two vertices the edge qubit's Z commutes with X(0)X(1)
        assert!(!error_detecting_check(&build_graph_code(&path2(), 1).unwrap()));
    }

    #[test]
    fn vertex_sets_round_trip() {
        let gc = build_graph_code(&petersen(), 1).unwrap();
        let p = gc.x_of_set(&[0, 2, 8]);
        assert_eq!(gc.vertex_set_of(&p), Some(vec![0, 2, 8]));
        let (chosen, kept) = independent_subcollection(&gc, &[gc.x_of_set(&[0]), gc.x_of_set(&[2])]);
        assert_eq!((chosen, kept), (vec![0, 2], vec![0, 1]));
    }

    #[test]
    fn graph_file_parsing() {
        let g = Graph::parse("# tri\n3\n0 1\n1 2\n\n0 2\n").unwrap();
        assert_eq!(g, triangle());
        assert!(matches!(Graph::parse("3\n0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse("3\n0 1\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert_eq!(Graph::parse(&triangle().to_text()).unwrap(), triangle());
    }
}
