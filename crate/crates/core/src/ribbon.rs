//! Oriented ribbon graphs as combinatorial maps.
//!
//! A map is a pair of permutations on darts: `sigma` (the next dart
//! counterclockwise around the same vertex) and `alpha` (the other dart of
//! the same edge). After construction darts are renumbered so that edge `i`
//! owns darts `2i` and `2i + 1`, hence `alpha(d) = d ^ 1`. Isolated vertices
//! own no darts and are only counted.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::classical::AbstractGraph;
use crate::dsu::Dsu;
use crate::error::MapError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub usize);

impl Dart {
    pub fn edge(self) -> Edge {
        Edge(self.0 / 2)
    }
}

impl Edge {
    pub fn darts(self) -> (Dart, Dart) {
        (Dart(2 * self.0), Dart(2 * self.0 + 1))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Sign {
    #[default]
    Positive,
    Negative,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }
}

/// Counts attached to a ribbon graph. `genus` comes from the orientable
/// Euler relation `k - bc + n = 2 * genus`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GraphMetrics {
    pub v: usize,
    pub e: usize,
    pub k: usize,
    pub r: usize,
    pub n: usize,
    pub bc: usize,
    pub genus: usize,
}

impl fmt::Display for GraphMetrics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "v={} e={} k={} r={} n={} bc={} genus={}",
            self.v, self.e, self.k, self.r, self.n, self.bc, self.genus
        )
    }
}

/// Checks that `alpha` is a fixed-point-free involution and `sigma` a
/// bijection on the same dart set `0..len`.
pub fn validate_map(sigma: &[usize], alpha: &[usize]) -> Result<(), MapError> {
    if sigma.len() != alpha.len() {
        return Err(MapError::DanglingDart {
            dart: sigma.len().min(alpha.len()),
        });
    }
    let n = sigma.len();
    let mut hit = vec![false; n];
    for (d, &s) in sigma.iter().enumerate() {
        if s >= n {
            return Err(MapError::DanglingDart { dart: s });
        }
        if hit[s] {
            return Err(MapError::SigmaNotBijection { dart: s });
        }
        hit[s] = true;
        let a = alpha[d];
        if a >= n {
            return Err(MapError::DanglingDart { dart: a });
        }
    }
    for (d, &a) in alpha.iter().enumerate() {
        if a == d {
            return Err(MapError::AlphaFixedPoint { dart: d });
        }
        if alpha[a] != d {
            return Err(MapError::AlphaNotInvolution { dart: d });
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonGraph {
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    /// Vertex index of each dart; vertices are numbered by smallest dart.
    vertex_of: Vec<usize>,
    dart_vertices: usize,
    isolated: usize,
    signs: Vec<Sign>,
}

impl RibbonGraph {
    /// Builds a map from raw permutations plus a number of isolated
    /// vertices. Darts are renumbered: edges are ordered by their smaller
    /// original dart, and within an edge the smaller original dart comes
    /// first.
    pub fn from_permutations(
        sigma: &[usize],
        alpha: &[usize],
        isolated: usize,
    ) -> Result<Self, MapError> {
        validate_map(sigma, alpha)?;
        let n = sigma.len();
        let mut relabel = vec![usize::MAX; n];
        let mut next = 0;
        for d in 0..n {
            if relabel[d] == usize::MAX {
                relabel[d] = next;
                relabel[alpha[d]] = next + 1;
                next += 2;
            }
        }
        let mut s = vec![0; n];
        for d in 0..n {
            s[relabel[d]] = relabel[sigma[d]];
        }
        Ok(Self::from_normalized(s, isolated))
    }

    /// Builds a map whose edge `i` owns darts `2i` and `2i + 1` from the
    /// counterclockwise dart cycle of every vertex. An empty cycle is an
    /// isolated vertex.
    pub fn from_rotations<V: AsRef<[usize]>>(vertices: &[V]) -> Result<Self, MapError> {
        let n: usize = vertices.iter().map(|v| v.as_ref().len()).sum();
        let mut sigma = vec![usize::MAX; n];
        let mut isolated = 0;
        for cycle in vertices {
            let cycle = cycle.as_ref();
            if cycle.is_empty() {
                isolated += 1;
                continue;
            }
            for (i, &d) in cycle.iter().enumerate() {
                if d >= n {
                    return Err(MapError::DanglingDart { dart: d });
                }
                if sigma[d] != usize::MAX {
                    return Err(MapError::SigmaNotBijection { dart: d });
                }
                sigma[d] = cycle[(i + 1) % cycle.len()];
            }
        }
        if n % 2 == 1 {
            return Err(MapError::AlphaFixedPoint { dart: n - 1 });
        }
        Ok(Self::from_normalized(sigma, isolated))
    }

    fn from_normalized(sigma: Vec<usize>, isolated: usize) -> Self {
        let n = sigma.len();
        let mut sigma_inv = vec![0; n];
        for (d, &s) in sigma.iter().enumerate() {
            sigma_inv[s] = d;
        }
        let mut vertex_of = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if vertex_of[start] != usize::MAX {
                continue;
            }
            let mut d = start;
            loop {
                vertex_of[d] = count;
                d = sigma[d];
                if d == start {
                    break;
                }
            }
            count += 1;
        }
        RibbonGraph {
            sigma,
            sigma_inv,
            vertex_of,
            dart_vertices: count,
            isolated,
            signs: vec![Sign::Positive; n / 2],
        }
    }

    /// The graph with no vertices at all.
    pub fn empty() -> Self {
        Self::from_normalized(Vec::new(), 0)
    }

    /// Replaces the edge signs. `signs[i]` belongs to `Edge(i)`.
    pub fn with_signs(mut self, signs: Vec<Sign>) -> Result<Self, MapError> {
        if signs.len() != self.num_edges() {
            return Err(MapError::SignCount {
                expected: self.num_edges(),
                got: signs.len(),
            });
        }
        self.signs = signs;
        Ok(self)
    }

    pub fn num_darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn num_edges(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn num_vertices(&self) -> usize {
        self.dart_vertices + self.isolated
    }

    pub fn isolated_vertices(&self) -> usize {
        self.isolated
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        Dart(self.sigma[d.0])
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        Dart(self.sigma_inv[d.0])
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        Dart(d.0 ^ 1)
    }

    /// Vertex index of a dart. Isolated vertices come after all others.
    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of[d.0]
    }

    pub fn sign(&self, e: Edge) -> Sign {
        self.signs[e.0]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn has_negative_edges(&self) -> bool {
        self.signs.iter().any(|s| s.is_negative())
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> {
        (0..self.num_edges()).map(Edge)
    }

    /// Counterclockwise dart cycle of every vertex, each starting at its
    /// smallest dart, ordered by that dart. Isolated vertices appear as empty
    /// cycles at the end.
    pub fn rotations(&self) -> Vec<Vec<Dart>> {
        let mut out: Vec<Vec<Dart>> = vec![Vec::new(); self.num_vertices()];
        for start in 0..self.num_darts() {
            let v = self.vertex_of[start];
            if !out[v].is_empty() {
                continue;
            }
            let mut d = start;
            loop {
                out[v].push(Dart(d));
                d = self.sigma[d];
                if d == start {
                    break;
                }
            }
        }
        out
    }

    fn count_components(&self) -> usize {
        let mut dsu = Dsu::new(self.dart_vertices);
        let mut k = self.dart_vertices;
        for e in 0..self.num_edges() {
            if dsu.union(self.vertex_of[2 * e], self.vertex_of[2 * e + 1]) {
                k -= 1;
            }
        }
        k + self.isolated
    }

    /// Orbits of `d ↦ sigma(alpha(d))`, each starting at its smallest dart.
    /// Every isolated vertex contributes one empty walk, so the length of the
    /// result is always `bc`.
    pub fn boundary_walks(&self) -> Vec<Vec<Dart>> {
        let n = self.num_darts();
        let mut seen = vec![false; n];
        let mut walks = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                walk.push(Dart(d));
                d = self.sigma[d ^ 1];
            }
            walks.push(walk);
        }
        walks.extend((0..self.isolated).map(|_| Vec::new()));
        walks
    }

    pub fn metrics(&self) -> GraphMetrics {
        let v = self.num_vertices();
        let e = self.num_edges();
        let k = self.count_components();
        let bc = self.boundary_walks().len();
        let r = v - k;
        let n = e - r;
        let twice_genus = k + n - bc;
        debug_assert!(twice_genus % 2 == 0);
        GraphMetrics {
            v,
            e,
            k,
            r,
            n,
            bc,
            genus: twice_genus / 2,
        }
    }

    /// The spanning subgraph keeping exactly `kept` (all vertices stay).
    /// Around each vertex the induced rotation skips darts of removed edges.
    /// Kept edges are renumbered in increasing order and keep their signs.
    pub fn induced_subgraph(&self, kept: &[Edge]) -> Result<RibbonGraph, MapError> {
        let mut keep = vec![false; self.num_edges()];
        for e in kept {
            if e.0 >= self.num_edges() {
                return Err(MapError::UnknownEdge { edge: e.0 });
            }
            keep[e.0] = true;
        }
        let mut new_id = vec![usize::MAX; self.num_darts()];
        let mut next = 0;
        for d in 0..self.num_darts() {
            if keep[d / 2] {
                new_id[d] = next;
                next += 1;
            }
        }
        let mut sigma = vec![0; next];
        for d in 0..self.num_darts() {
            if !keep[d / 2] {
                continue;
            }
            let mut s = self.sigma[d];
            while !keep[s / 2] {
                s = self.sigma[s];
            }
            sigma[new_id[d]] = new_id[s];
        }
        let mut has_kept = vec![false; self.dart_vertices];
        for d in 0..self.num_darts() {
            if keep[d / 2] {
                has_kept[self.vertex_of[d]] = true;
            }
        }
        let emptied = has_kept.iter().filter(|h| !**h).count();
        let mut g = Self::from_normalized(sigma, self.isolated + emptied);
        g.signs = (0..self.num_edges())
            .filter(|e| keep[*e])
            .map(|e| self.signs[e])
            .collect();
        Ok(g)
    }

    /// The underlying multigraph, with vertices numbered as in
    /// [`RibbonGraph::vertex_of`].
    pub fn underlying_graph(&self) -> AbstractGraph {
        let edges = (0..self.num_edges())
            .map(|e| (self.vertex_of[2 * e], self.vertex_of[2 * e + 1]))
            .collect();
        AbstractGraph::new(self.num_vertices(), edges).expect("vertex indices in range")
    }

    /// Splits into connected components. Each component with at least one
    /// dart comes first (ordered by smallest dart), then one single-vertex
    /// graph per isolated vertex.
    pub fn components(&self) -> Vec<RibbonGraph> {
        let mut dsu = Dsu::new(self.dart_vertices);
        for e in 0..self.num_edges() {
            dsu.union(self.vertex_of[2 * e], self.vertex_of[2 * e + 1]);
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut buckets: Vec<Vec<usize>> = Vec::new();
        for e in 0..self.num_edges() {
            let r = dsu.find(self.vertex_of[2 * e]);
            let i = match roots.iter().position(|x| *x == r) {
                Some(i) => i,
                None => {
                    roots.push(r);
                    buckets.push(Vec::new());
                    roots.len() - 1
                }
            };
            buckets[i].push(e);
        }
        let mut out: Vec<RibbonGraph> = buckets
            .into_iter()
            .map(|edges| {
                let mut local = vec![usize::MAX; self.num_darts()];
                for (i, e) in edges.iter().enumerate() {
                    local[2 * e] = 2 * i;
                    local[2 * e + 1] = 2 * i + 1;
                }
                let mut sigma = vec![0; 2 * edges.len()];
                for e in &edges {
                    for d in [2 * e, 2 * e + 1] {
                        sigma[local[d]] = local[self.sigma[d]];
                    }
                }
                let mut g = Self::from_normalized(sigma, 0);
                g.signs = edges.iter().map(|e| self.signs[*e]).collect();
                g
            })
            .collect();
        out.extend((0..self.isolated).map(|_| Self::from_normalized(Vec::new(), 1)));
        out
    }

    /// Disjoint union; darts of `other` are shifted after ours.
    pub fn disjoint_union(&self, other: &RibbonGraph) -> RibbonGraph {
        let shift = self.num_darts();
        let mut sigma = self.sigma.clone();
        sigma.extend(other.sigma.iter().map(|s| s + shift));
        let mut g = Self::from_normalized(sigma, self.isolated + other.isolated);
        g.signs = self.signs.iter().chain(&other.signs).copied().collect();
        g
    }

    /// Raw `sigma` as a slice, indexed by dart.
    pub fn sigma_table(&self) -> &[usize] {
        &self.sigma
    }
}
