//! Exhaustive generation of small rotation systems.

use alloc::vec::Vec;

use crate::ribbon::RibbonGraph;

/// Permutations of `0..n` in lexicographic order.
pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            current: Some((0..n).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut p = out.clone();
        if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            self.current = Some(p);
        }
        Some(out)
    }
}

/// Every perfect matching of `0..n` as an involution table. Empty for odd `n`.
pub fn perfect_matchings(n: usize) -> Vec<Vec<usize>> {
    fn rec(alpha: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(first) = alpha.iter().position(|a| *a == usize::MAX) else {
            out.push(alpha.clone());
            return;
        };
        for other in first + 1..alpha.len() {
            if alpha[other] == usize::MAX {
                alpha[first] = other;
                alpha[other] = first;
                rec(alpha, out);
                alpha[first] = usize::MAX;
                alpha[other] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    if n % 2 == 0 {
        rec(&mut alloc::vec![usize::MAX; n], &mut out);
    }
    out
}

fn cycle_count(sigma: &[usize]) -> usize {
    let mut seen = alloc::vec![false; sigma.len()];
    let mut c = 0;
    for s in 0..sigma.len() {
        if !seen[s] {
            c += 1;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                d = sigma[d];
            }
        }
    }
    c
}

/// All ribbon graphs with at most `max_edges` edges and at most
/// `max_vertices` vertices, up to the fixed pairing `{2i, 2i+1}`: every
/// vertex rotation `sigma` on `2e` darts, padded with `0..` isolated
/// vertices. Isomorphic copies are not removed.
pub fn all_maps(max_edges: usize, max_vertices: usize) -> Vec<RibbonGraph> {
    let mut out = Vec::new();
    for e in 0..=max_edges {
        for sigma in Permutations::new(2 * e) {
            let c = cycle_count(&sigma);
            if c > max_vertices {
                continue;
            }
            let alpha: Vec<usize> = (0..2 * e).map(|d| d ^ 1).collect();
            for pad in 0..=(max_vertices - c) {
                if c + pad == 0 {
                    continue;
                }
                out.push(RibbonGraph::from_permutations(&sigma, &alpha, pad).unwrap());
            }
        }
    }
    out
}

/// Like [`all_maps`] but for exactly `edges` edges and every pairing of the
/// darts into edges, not just the fixed one. Each rotation system appears
/// once per labelling.
pub fn all_labelled_maps(edges: usize, max_vertices: usize) -> Vec<RibbonGraph> {
    let mut out = Vec::new();
    let pairings = perfect_matchings(2 * edges);
    for sigma in Permutations::new(2 * edges) {
        let c = cycle_count(&sigma);
        if c > max_vertices {
            continue;
        }
        for alpha in &pairings {
            for pad in 0..=(max_vertices - c) {
                if c + pad == 0 {
                    continue;
                }
                out.push(RibbonGraph::from_permutations(&sigma, alpha, pad).unwrap());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(Permutations::new(4).count(), 24);
        assert_eq!(Permutations::new(0).count(), 1);
        assert_eq!(perfect_matchings(6).len(), 15);
        assert!(perfect_matchings(3).is_empty());
        // one edge: sigma = id (2 vertices) or the swap (1 vertex, +1 padding)
        assert_eq!(
            all_maps(1, 2).len(),
            1 /* e=0,v=1 */ + 1 /* e=0,v=2 */ + 1 + 2
        );
    }

    #[test]
    fn every_map_is_valid_and_bounded() {
        for g in all_labelled_maps(2, 3) {
            assert!(g.num_vertices() <= 3);
            assert_eq!(g.num_edges(), 2);
            assert_eq!(g.rotations().iter().map(|r| r.len()).sum::<usize>(), 4);
        }
    }

    #[test]
    fn boundary_count_is_orbit_count_up_to_eight_darts() {
        for g in all_maps(4, 8) {
            let m = g.metrics();
            let phi: Vec<usize> = (0..g.num_darts()).map(|d| g.sigma_table()[d ^ 1]).collect();
            assert_eq!(m.bc, cycle_count(&phi) + g.isolated_vertices());
            assert_eq!(m.k + m.n, m.bc + 2 * m.genus);
        }
    }
}
