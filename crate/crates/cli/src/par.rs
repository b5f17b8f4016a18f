//! Multi-threaded drivers for the subset and state sums.
//!
//! Each kernel sums over `0..2^n`; the range is cut into contiguous blocks,
//! one per worker, and the per-block tallies are merged. Tallies are ordered
//! maps of integer counts, so the result does not depend on the worker count.

use std::ops::Range;
use std::thread;

use ribbonkb_core::{
    br_polynomial_with, kauffman_bracket_with, medial_diagram, BrKernel, BrOptions, BracketKernel,
    ComputeError, IdentityReport, MultiPoly, Orientation, RibbonGraph, SizeLimit,
    SurfaceLinkDiagram, Tally,
};

/// Anything that sums over a range of subset masks.
pub trait RangeKernel: Sync {
    fn total(&self) -> u64;
    fn accumulate(&self, range: Range<u64>, tally: &mut Tally);
}

impl RangeKernel for BrKernel<'_> {
    fn total(&self) -> u64 {
        self.num_subsets()
    }
    fn accumulate(&self, range: Range<u64>, tally: &mut Tally) {
        BrKernel::accumulate(self, range, tally)
    }
}

impl RangeKernel for BracketKernel<'_> {
    fn total(&self) -> u64 {
        self.num_states()
    }
    fn accumulate(&self, range: Range<u64>, tally: &mut Tally) {
        BracketKernel::accumulate(self, range, tally)
    }
}

/// Splits `0..total` into at most `parts` nonempty contiguous blocks.
pub fn split(total: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = (parts.max(1) as u64).min(total.max(1));
    let (q, r) = (total / parts, total % parts);
    let mut start = 0;
    (0..parts)
        .map(|i| {
            let len = q + u64::from(i < r);
            let block = start..start + len;
            start += len;
            block
        })
        .collect()
}

/// Runs `kernel` over its full range on `workers` threads.
pub fn run<K: RangeKernel + ?Sized>(kernel: &K, workers: usize) -> Tally {
    let blocks = split(kernel.total(), workers);
    if blocks.len() <= 1 {
        let mut t = Tally::new();
        kernel.accumulate(0..kernel.total(), &mut t);
        return t;
    }
    thread::scope(|s| {
        let handles: Vec<_> = blocks
            .into_iter()
            .map(|b| {
                s.spawn(move || {
                    let mut t = Tally::new();
                    kernel.accumulate(b, &mut t);
                    t
                })
            })
            .collect();
        let mut total = Tally::new();
        for h in handles {
            total.merge(h.join().expect("worker panicked"));
        }
        total
    })
}

pub fn br_polynomial(
    g: &RibbonGraph,
    signed: bool,
    limit: SizeLimit,
    workers: usize,
) -> Result<MultiPoly, ComputeError> {
    let opts = BrOptions {
        signed,
        limit,
        ..BrOptions::default()
    };
    br_polynomial_with(g, opts, |k| run(k, workers))
}

pub fn kauffman_bracket(
    d: &SurfaceLinkDiagram,
    limit: SizeLimit,
    workers: usize,
) -> Result<MultiPoly, ComputeError> {
    kauffman_bracket_with(d, limit, |k| run(k, workers))
}

pub fn jones_polynomial(
    d: &SurfaceLinkDiagram,
    orientation: &Orientation,
    limit: SizeLimit,
    workers: usize,
) -> Result<MultiPoly, ComputeError> {
    let w = d.writhe(orientation)?;
    ribbonkb_core::jones_from_bracket(&kauffman_bracket(d, limit, workers)?, w)
}

/// Bracket of the medial diagram against the transformed signed polynomial.
pub fn check_identity(
    g: &RibbonGraph,
    limit: SizeLimit,
    workers: usize,
) -> Result<IdentityReport, ComputeError> {
    let lhs = kauffman_bracket(&medial_diagram(g).diagram, limit, workers)?;
    let r = br_polynomial(g, true, limit, workers)?;
    let rhs = ribbonkb_core::bracket_from_br(g, &r)?;
    Ok(IdentityReport::new(lhs, rhs))
}
