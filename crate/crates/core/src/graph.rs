//! Edge ideals and cover ideals of simple graphs.
//!
//! Vertex `k` (1-based) maps to ring variable `x_k`.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::parse::Cursor;
use crate::ring::{Monomial, RingContext};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// Builds a graph on vertices `1..=vertex_count`. Edges are unordered;
    /// loops and out-of-range endpoints are rejected, repeats collapse.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph(
                "graph needs at least one vertex".into(),
            ));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(Error::InvalidGraph(format!("edge {u}-{v} out of range")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(SimpleGraph {
            vertex_count,
            edges: set,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    /// The ring `K[x1, ..., xN]` this graph's ideals live in.
    pub fn ring(&self) -> Arc<RingContext> {
        RingContext::indexed("x", self.vertex_count)
            .expect("indexed names are valid")
            .into_shared()
    }

    fn require_edges(&self) -> Result<()> {
        if self.edges.is_empty() {
            Err(Error::InvalidGraph("graph has no edges".into()))
        } else {
            Ok(())
        }
    }
}

/// `C_k` on vertices `1..=k`.
pub fn cycle_graph(k: usize) -> Result<SimpleGraph> {
    if k < 3 {
        return Err(Error::InvalidGraph(format!("cycle length {k} < 3")));
    }
    SimpleGraph::new(k, (1..=k).map(|i| (i, i % k + 1)))
}

/// Wheel of the given order: a rim cycle on `order - 1` vertices plus a hub
/// (the highest-numbered vertex) adjacent to every rim vertex.
pub fn wheel_graph(order: usize) -> Result<SimpleGraph> {
    if order < 4 {
        return Err(Error::InvalidGraph(format!("wheel order {order} < 4")));
    }
    let rim = order - 1;
    let spokes = (1..=rim).map(|i| (i, order));
    SimpleGraph::new(order, (1..=rim).map(|i| (i, i % rim + 1)).chain(spokes))
}

/// `(x_u x_v : {u,v} ∈ E)` over `ctx` (which must have at least `vertex_count` variables).
pub fn edge_ideal_in(graph: &SimpleGraph, ctx: &Arc<RingContext>) -> Result<MonomialIdeal> {
    graph.require_edges()?;
    check_ring(graph, ctx)?;
    let n = ctx.nvars();
    let gens = graph
        .edges
        .iter()
        .map(|&(u, v)| {
            let mut e = vec![0; n];
            e[u - 1] = 1;
            e[v - 1] = 1;
            Monomial::new(e)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::from_generators(ctx, gens)
}

/// `⋂ (x_u, x_v)` over the edges.
pub fn cover_ideal_in(graph: &SimpleGraph, ctx: &Arc<RingContext>) -> Result<MonomialIdeal> {
    graph.require_edges()?;
    check_ring(graph, ctx)?;
    let primes: Vec<MonomialIdeal> = graph
        .edges
        .iter()
        .map(|&(u, v)| Ok(MonomialPrime::new(ctx, [u - 1, v - 1])?.to_ideal()))
        .collect::<Result<_>>()?;
    MonomialIdeal::intersect(&primes)
}

pub fn edge_ideal(graph: &SimpleGraph) -> Result<MonomialIdeal> {
    edge_ideal_in(graph, &graph.ring())
}

pub fn cover_ideal(graph: &SimpleGraph) -> Result<MonomialIdeal> {
    cover_ideal_in(graph, &graph.ring())
}

fn check_ring(graph: &SimpleGraph, ctx: &RingContext) -> Result<()> {
    if ctx.nvars() < graph.vertex_count {
        return Err(Error::InvalidGraph(format!(
            "ring has {} variables but the graph has {} vertices",
            ctx.nvars(),
            graph.vertex_count
        )));
    }
    Ok(())
}

/// Parses `graph N; u-v u-v ...`, or a named family `cycle:k` / `wheel:k`.
pub fn parse_graph(src: &str) -> Result<SimpleGraph> {
    let trimmed = src.trim();
    if let Some((family, arg)) = trimmed.split_once(':') {
        let k: usize = arg.trim().parse().map_err(|_| Error::Parse {
            line: 1,
            column: family.len() + 2,
            message: format!("bad family parameter `{}`", arg.trim()),
        })?;
        return match family.trim() {
            "cycle" => cycle_graph(k),
            "wheel" => wheel_graph(k),
            other => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown graph family `{other}`"),
            }),
        };
    }
    let mut cur = Cursor::new(src);
    if !cur.keyword("graph") {
        return Err(cur.error("expected `graph N; u-v ...` or `cycle:k` / `wheel:k`"));
    }
    let n = cur.uint()? as usize;
    cur.expect(';')?;
    let mut edges = Vec::new();
    while !cur.at_end() {
        let u = cur.uint()? as usize;
        cur.expect('-')?;
        let v = cur.uint()? as usize;
        edges.push((u, v));
        cur.eat(',');
    }
    SimpleGraph::new(n, edges).map_err(|e| cur.error(e.to_string()))
}
