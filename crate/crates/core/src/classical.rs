//! Classical invariants of the underlying abstract multigraph.
//!
//! These never look at the rotation system, which makes them usable as
//! independent oracles for the ribbon-graph polynomials.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::bollobas_riordan::SizeLimit;
use crate::dsu::Dsu;
use crate::error::{ComputeError, MapError};
use crate::poly::{MultiPoly, QExp};

/// A multigraph on vertices `0..vertices`; loops and parallel edges allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl AbstractGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, MapError> {
        if let Some(&(u, v)) = edges.iter().find(|(u, v)| *u >= vertices || *v >= vertices) {
            return Err(MapError::VertexOutOfRange { vertex: u.max(v) });
        }
        Ok(AbstractGraph { vertices, edges })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of connected components of the spanning subgraph keeping the
    /// edges whose bit is set in `mask`.
    fn components_of(&self, mask: u64, dsu: &mut Dsu) -> usize {
        dsu.reset();
        let mut k = self.vertices;
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 1 && dsu.union(u, v) {
                k -= 1;
            }
        }
        k
    }
}

fn check_limit(size: usize, limit: SizeLimit) -> Result<(), ComputeError> {
    if size > limit.get() {
        Err(ComputeError::SizeLimit {
            size,
            limit: limit.get(),
        })
    } else {
        Ok(())
    }
}

fn poly_from_counts(vars: &[&str], counts: BTreeMap<[i64; 2], u64>) -> MultiPoly {
    let mut p = MultiPoly::with_vars(vars);
    for (e, c) in counts {
        p.add_term(
            e.iter().map(|x| QExp::from_int(*x)).collect(),
            BigInt::from(c),
        );
    }
    p
}

/// Tutte polynomial `T(x, y)` by deletion-contraction: loops give a factor
/// `y`, bridges a factor `x`, every other edge splits into `G - e` and
/// `G / e`.
pub fn tutte_polynomial(g: &AbstractGraph, limit: SizeLimit) -> Result<MultiPoly, ComputeError> {
    check_limit(g.edges.len(), limit)?;
    let mut counts = BTreeMap::new();
    tutte_rec(g.vertices, g.edges.clone(), [0, 0], &mut counts);
    Ok(poly_from_counts(&["x", "y"], counts))
}

fn tutte_rec(
    vertices: usize,
    mut edges: Vec<(usize, usize)>,
    acc: [i64; 2],
    counts: &mut BTreeMap<[i64; 2], u64>,
) {
    let Some((u, v)) = edges.pop() else {
        *counts.entry(acc).or_insert(0) += 1;
        return;
    };
    if u == v {
        return tutte_rec(vertices, edges, [acc[0], acc[1] + 1], counts);
    }
    let mut dsu = Dsu::new(vertices);
    for &(a, b) in &edges {
        dsu.union(a, b);
    }
    let contracted: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| {
            let f = |w: usize| if w == v { u } else { w };
            (f(a), f(b))
        })
        .collect();
    if dsu.find(u) != dsu.find(v) {
        tutte_rec(vertices, contracted, [acc[0] + 1, acc[1]], counts);
    } else {
        tutte_rec(vertices, edges, acc, counts);
        tutte_rec(vertices, contracted, acc, counts);
    }
}

/// Dichromatic polynomial `Z(q, v) = Σ_F q^{k(F)} v^{e(F)}` over all
/// spanning subgraphs.
pub fn dichromatic_polynomial(
    g: &AbstractGraph,
    limit: SizeLimit,
) -> Result<MultiPoly, ComputeError> {
    check_limit(g.edges.len(), limit)?;
    let mut dsu = Dsu::new(g.vertices);
    let mut counts = BTreeMap::new();
    for mask in 0..(1u64 << g.edges.len()) {
        let k = g.components_of(mask, &mut dsu) as i64;
        *counts.entry([k, mask.count_ones() as i64]).or_insert(0) += 1;
    }
    Ok(poly_from_counts(&["q", "v"], counts))
}
