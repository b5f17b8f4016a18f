//! The Bollobás-Riordan polynomial by spanning-subgraph enumeration.
//!
//! For a ribbon graph `G`
//!
//! ```text
//! R_G(x, y, z) = Σ_F x^{r(G)-r(F)} y^{n(F)} z^{k(F)-bc(F)+n(F)}
//! ```
//!
//! and, for signed graphs, the exponents of `x` and `y` are shifted by
//! `+s(F)` and `-s(F)` with `s(F) = (e₋(F) - e₋(G∖F)) / 2`.
//!
//! Subsets are indexed by a bitmask over edges (bit `i` set keeps `Edge(i)`).
//! [`BrKernel::accumulate`] handles any index range, which is what the
//! parallel driver in the companion crate splits on.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::dsu::Dsu;
use crate::error::ComputeError;
use crate::poly::{MultiPoly, Tally};
use crate::ribbon::{Dart, RibbonGraph};

/// Upper bound on the number of edges (or crossings) enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SizeLimit(usize);

impl SizeLimit {
    pub const DEFAULT: usize = 30;
    /// Subsets are indexed by `u64`; nothing above this is accepted.
    pub const HARD_MAX: usize = 62;

    pub fn new(n: usize) -> Self {
        SizeLimit(n.min(Self::HARD_MAX))
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn check(self, size: usize) -> Result<(), ComputeError> {
        if size > self.0 {
            Err(ComputeError::SizeLimit {
                size,
                limit: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for SizeLimit {
    fn default() -> Self {
        SizeLimit(Self::DEFAULT)
    }
}

/// Everything the polynomial needs to know about one spanning subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetStats {
    pub e: usize,
    pub k: usize,
    pub r: usize,
    pub n: usize,
    pub bc: usize,
    /// Negative edges kept.
    pub neg_in: usize,
    /// Negative edges removed.
    pub neg_out: usize,
}

impl SubsetStats {
    /// `2 s(F) = e₋(F) - e₋(complement)`.
    pub fn twice_s(&self) -> i64 {
        self.neg_in as i64 - self.neg_out as i64
    }

    pub fn twice_genus(&self) -> usize {
        self.k + self.n - self.bc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BrOptions {
    pub signed: bool,
    pub limit: SizeLimit,
    pub factor_components: bool,
}

impl Default for BrOptions {
    fn default() -> Self {
        BrOptions {
            signed: false,
            limit: SizeLimit::default(),
            factor_components: true,
        }
    }
}

struct Scratch {
    dsu: Dsu,
    next_kept: Vec<usize>,
    seen: Vec<bool>,
    kept_darts: Vec<usize>,
}

/// Subset-sum kernel for one ribbon graph.
pub struct BrKernel<'g> {
    graph: &'g RibbonGraph,
    signed: bool,
    rank: usize,
    rotations: Vec<Vec<usize>>,
    negative: Vec<bool>,
}

impl<'g> BrKernel<'g> {
    pub fn new(
        graph: &'g RibbonGraph,
        signed: bool,
        limit: SizeLimit,
    ) -> Result<Self, ComputeError> {
        limit.check(graph.num_edges())?;
        let m = graph.metrics();
        let rotations = graph
            .rotations()
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|c| c.into_iter().map(|d| d.0).collect())
            .collect();
        let negative = graph
            .signs()
            .iter()
            .map(|s| signed && s.is_negative())
            .collect();
        Ok(BrKernel {
            graph,
            signed,
            rank: m.r,
            rotations,
            negative,
        })
    }

    pub fn graph(&self) -> &RibbonGraph {
        self.graph
    }

    pub fn is_signed(&self) -> bool {
        self.signed
    }

    pub fn num_subsets(&self) -> u64 {
        1u64 << self.graph.num_edges()
    }

    fn scratch(&self) -> Scratch {
        Scratch {
            dsu: Dsu::new(self.graph.num_vertices()),
            next_kept: vec![0; self.graph.num_darts()],
            seen: vec![false; self.graph.num_darts()],
            kept_darts: Vec::with_capacity(self.graph.num_darts()),
        }
    }

    pub fn subset_stats(&self, mask: u64) -> SubsetStats {
        self.stats_with(mask, &mut self.scratch())
    }

    fn stats_with(&self, mask: u64, s: &mut Scratch) -> SubsetStats {
        let g = self.graph;
        let kept = |d: usize| mask >> (d / 2) & 1 == 1;

        s.dsu.reset();
        let mut r = 0;
        let (mut e, mut neg_in, mut neg_out) = (0, 0, 0);
        for i in 0..g.num_edges() {
            if mask >> i & 1 == 1 {
                e += 1;
                if s.dsu
                    .union(g.vertex_of(Dart(2 * i)), g.vertex_of(Dart(2 * i + 1)))
                {
                    r += 1;
                }
                neg_in += self.negative[i] as usize;
            } else {
                neg_out += self.negative[i] as usize;
            }
        }
        let v = g.num_vertices();
        let k = v - r;

        // induced rotation restricted to kept darts; bare vertices are discs
        let mut bc = v - self.rotations.len();
        s.kept_darts.clear();
        for rot in &self.rotations {
            let start = s.kept_darts.len();
            s.kept_darts
                .extend(rot.iter().copied().filter(|d| kept(*d)));
            let here = &s.kept_darts[start..];
            if here.is_empty() {
                bc += 1;
                continue;
            }
            for j in 0..here.len() {
                s.next_kept[here[j]] = here[(j + 1) % here.len()];
            }
        }
        for &d in &s.kept_darts {
            s.seen[d] = false;
        }
        for i in 0..s.kept_darts.len() {
            let start = s.kept_darts[i];
            if s.seen[start] {
                continue;
            }
            bc += 1;
            let mut d = start;
            while !s.seen[d] {
                s.seen[d] = true;
                d = s.next_kept[d ^ 1];
            }
        }

        SubsetStats {
            e,
            k,
            r,
            n: e - r,
            bc,
            neg_in,
            neg_out,
        }
    }

    /// Quarter exponents of `(x, y, z)` for one subgraph.
    pub fn exponents(&self, st: &SubsetStats) -> [i64; 3] {
        let s2 = if self.signed { st.twice_s() } else { 0 };
        [
            4 * (self.rank as i64 - st.r as i64) + 2 * s2,
            4 * st.n as i64 - 2 * s2,
            4 * st.twice_genus() as i64,
        ]
    }

    /// Adds the terms of every subset index in `range` to `tally`.
    pub fn accumulate(&self, range: Range<u64>, tally: &mut Tally) {
        let mut s = self.scratch();
        for mask in range {
            let st = self.stats_with(mask, &mut s);
            tally.add(self.exponents(&st));
        }
    }

    pub fn polynomial(&self, tally: Tally) -> MultiPoly {
        tally.into_poly(["x", "y", "z"])
    }
}

/// Computes `R` with a caller-supplied kernel runner, e.g. a parallel one.
/// The runner must return the tally over the kernel's full subset range.
pub fn br_polynomial_with<F>(
    g: &RibbonGraph,
    opts: BrOptions,
    mut run: F,
) -> Result<MultiPoly, ComputeError>
where
    F: FnMut(&BrKernel<'_>) -> Tally,
{
    opts.limit.check(g.num_edges())?;
    let vars = ["x", "y", "z"];
    if !opts.factor_components {
        let kernel = BrKernel::new(g, opts.signed, opts.limit)?;
        return Ok(kernel.polynomial(run(&kernel)).reorder_vars(&vars));
    }
    let mut total = MultiPoly::one().reorder_vars(&vars);
    for part in g.components() {
        if part.num_edges() == 0 {
            continue;
        }
        let kernel = BrKernel::new(&part, opts.signed, opts.limit)?;
        total = &total * &kernel.polynomial(run(&kernel));
    }
    Ok(total)
}

fn sequential(kernel: &BrKernel<'_>) -> Tally {
    let mut t = Tally::new();
    kernel.accumulate(0..kernel.num_subsets(), &mut t);
    t
}

/// `R_G(x, y, z)`; edge signs are ignored.
pub fn br_polynomial(g: &RibbonGraph, limit: SizeLimit) -> Result<MultiPoly, ComputeError> {
    let opts = BrOptions {
        limit,
        ..BrOptions::default()
    };
    br_polynomial_with(g, opts, sequential)
}

/// Signed `R_Ĝ(x, y, z)`; equals [`br_polynomial`] when no edge is negative.
pub fn signed_br_polynomial(g: &RibbonGraph, limit: SizeLimit) -> Result<MultiPoly, ComputeError> {
    let opts = BrOptions {
        signed: true,
        limit,
        ..BrOptions::default()
    };
    br_polynomial_with(g, opts, sequential)
}
