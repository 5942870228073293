//! The corresponding graph G_k^n: vertices are adjacency-hopping words of
//! length n-1, edges join words overlapping in n-2 symbols. Every H(k, n)
//! is the edge read-off of an Eulerian tour on this graph.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::types::{Code, Parameters};

/// Dense matrix dimension above which exact matrix operations refuse to run.
pub const MATRIX_DIM_CAP: usize = 2_000;

/// A graph vertex: an adjacency-hopping word of length n-1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    word: Vec<Code>,
}

impl Vertex {
    pub fn word(&self) -> &[Code] {
        &self.word
    }
}

/// A directed edge; `emitted_code` is the last code of the head word,
/// the value read off when an Eulerian tour traverses this edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub emitted_code: Code,
}

/// The corresponding graph G_k^n, k >= 2 and n >= 2. Immutable once built.
#[derive(Debug, Clone)]
pub struct CorrespondingGraph {
    params: Parameters,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    // per-vertex outgoing edge ordinals, sorted by emitted code
    out_edges: Vec<Vec<usize>>,
}

/// Enumerates all adjacency-hopping words of a given length over 0..k,
/// in lexicographic order.
pub fn adjacency_hopping_words(k: usize, len: usize) -> Vec<Vec<Code>> {
    let mut out = Vec::new();
    let mut word: Vec<Code> = Vec::with_capacity(len);
    fn rec(k: usize, len: usize, word: &mut Vec<Code>, out: &mut Vec<Vec<Code>>) {
        if word.len() == len {
            out.push(word.clone());
            return;
        }
        for c in 0..k as Code {
            if word.last() == Some(&c) {
                continue;
            }
            word.push(c);
            rec(k, len, word, out);
            word.pop();
        }
    }
    rec(k, len, &mut word, &mut out);
    out
}

/// Builds G_k^n with vertices in lexicographic word order and each vertex's
/// outgoing edges ordered by emitted code.
pub fn build_graph(params: Parameters) -> Result<CorrespondingGraph> {
    let (k, n) = (params.k, params.n);
    if k < 2 || n < 2 {
        return Err(Error::InfeasibleParameters { k, n });
    }

    let words = adjacency_hopping_words(k, n - 1);
    let index: HashMap<&[Code], usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_slice(), i))
        .collect();

    let mut edges = Vec::with_capacity(params.sequence_length());
    let mut out_edges = vec![Vec::with_capacity(k - 1); words.len()];
    for (u, word) in words.iter().enumerate() {
        // head word = tail of `word` extended by any code differing from the
        // last one; for n=2 this excludes the self-loop directly
        let last = *word.last().unwrap();
        for c in 0..k as Code {
            if c == last {
                continue;
            }
            let mut to_word = word[1..].to_vec();
            to_word.push(c);
            let v = index[to_word.as_slice()];
            out_edges[u].push(edges.len());
            edges.push(Edge {
                from: u,
                to: v,
                emitted_code: c,
            });
        }
    }

    let vertices = words.into_iter().map(|word| Vertex { word }).collect();
    Ok(CorrespondingGraph {
        params,
        vertices,
        edges,
        out_edges,
    })
}

impl CorrespondingGraph {
    pub fn params(&self) -> Parameters {
        self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Outgoing edge ordinals of a vertex, sorted by emitted code.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn vertex_index(&self, word: &[Code]) -> Option<usize> {
        self.vertices.iter().position(|v| v.word() == word)
    }

    /// The 0/1 adjacency matrix, rows and columns indexed by vertex ordinal.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.vertices.len());
        for e in &self.edges {
            m.set(e.from, e.to, BigInt::one());
        }
        m
    }

    /// Checks A^(n-1) + A^(n-2) = J with exact integer arithmetic.
    pub fn verify_power_identity(&self) -> Result<bool> {
        let a = self.adjacency_matrix();
        let n = self.params.n;
        let hi = a.pow(n - 1)?;
        let lo = a.pow(n - 2)?;
        let one = BigInt::one();
        let dim = a.dim();
        for i in 0..dim {
            for j in 0..dim {
                if hi.get(i, j) + lo.get(i, j) != one {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Strong connectivity by forward and reverse reachability from vertex 0.
    pub fn is_strongly_connected(&self) -> bool {
        let n = self.vertices.len();
        let reach = |reverse: bool| -> usize {
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            let mut count = 1;
            while let Some(u) = stack.pop() {
                for e in &self.edges {
                    let (a, b) = if reverse { (e.to, e.from) } else { (e.from, e.to) };
                    if a == u && !seen[b] {
                        seen[b] = true;
                        count += 1;
                        stack.push(b);
                    }
                }
            }
            count
        };
        reach(false) == n && reach(true) == n
    }

    pub fn report(&self) -> Result<GraphReport> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        let mut loops = 0;
        for e in &self.edges {
            outdeg[e.from] += 1;
            indeg[e.to] += 1;
            if e.from == e.to {
                loops += 1;
            }
        }
        Ok(GraphReport {
            k: self.params.k,
            n: self.params.n,
            vertices: n,
            edges: self.edges.len(),
            min_indegree: indeg.iter().copied().min().unwrap(),
            max_indegree: indeg.iter().copied().max().unwrap(),
            min_outdegree: outdeg.iter().copied().min().unwrap(),
            max_outdegree: outdeg.iter().copied().max().unwrap(),
            loops,
            strongly_connected: self.is_strongly_connected(),
            power_identity: self.verify_power_identity()?,
        })
    }
}

/// Structural report over a corresponding graph.
#[derive(Debug, Clone, Serialize)]
pub struct GraphReport {
    pub k: usize,
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub min_indegree: usize,
    pub max_indegree: usize,
    pub min_outdegree: usize,
    pub max_outdegree: usize,
    pub loops: usize,
    pub strongly_connected: bool,
    pub power_identity: bool,
}

/// Dense square matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            data: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.dim + j] = v;
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        assert_eq!(self.dim, rhs.dim);
        if self.dim > MATRIX_DIM_CAP {
            return Err(Error::SizeLimit {
                what: "matrix dimension",
                actual: self.dim,
                cap: MATRIX_DIM_CAP,
            });
        }
        let dim = self.dim;
        let mut out = IntMatrix::zeros(dim);
        for i in 0..dim {
            for l in 0..dim {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        out.data[i * dim + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: usize) -> Result<IntMatrix> {
        let mut out = IntMatrix::identity(self.dim);
        for _ in 0..exp {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }
}
