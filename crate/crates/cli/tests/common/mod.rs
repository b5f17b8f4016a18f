#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use ribbonkb_core::{RibbonGraph, Sign};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn data_file(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// `edges` edges with darts cut at random into `1..=2·edges` vertex cycles,
/// plus up to one isolated vertex.
pub fn random_ribbon_graph(rng: &mut StdRng, edges: usize) -> RibbonGraph {
    let mut darts: Vec<usize> = (0..2 * edges).collect();
    darts.shuffle(rng);
    let mut rotations: Vec<Vec<usize>> = Vec::new();
    if !darts.is_empty() {
        let cuts = rng.gen_range(0..darts.len());
        let mut points: Vec<usize> = (1..darts.len()).collect();
        points.shuffle(rng);
        let mut points = points[..cuts].to_vec();
        points.sort_unstable();
        let mut start = 0;
        for p in points.into_iter().chain([darts.len()]) {
            rotations.push(darts[start..p].to_vec());
            start = p;
        }
    }
    if rotations.is_empty() || rng.gen_bool(0.2) {
        rotations.push(Vec::new());
    }
    RibbonGraph::from_rotations(&rotations).unwrap()
}

pub fn random_signs(rng: &mut StdRng, g: RibbonGraph) -> RibbonGraph {
    let signs = (0..g.num_edges())
        .map(|_| {
            if rng.gen_bool(0.5) {
                Sign::Negative
            } else {
                Sign::Positive
            }
        })
        .collect();
    g.with_signs(signs).unwrap()
}

fn insert_before(rotations: &mut [Vec<usize>], w: usize, new: usize) {
    for cycle in rotations.iter_mut() {
        if let Some(i) = cycle.iter().position(|&d| d == w) {
            cycle.insert(i, new);
            return;
        }
    }
    unreachable!("dart {w} not in any rotation");
}

/// Connected plane graph grown one edge at a time: either a pendant edge at
/// a random corner, or an edge joining two corners of one face.
pub fn random_planar_graph(rng: &mut StdRng, edges: usize) -> RibbonGraph {
    let mut rotations: Vec<Vec<usize>> = vec![Vec::new()];
    for i in 0..edges {
        let (a, b) = (2 * i, 2 * i + 1);
        if i == 0 {
            rotations[0].push(a);
            rotations.push(vec![b]);
            continue;
        }
        if rng.gen_bool(0.4) {
            let w = rng.gen_range(0..a);
            insert_before(&mut rotations, w, a);
            rotations.push(vec![b]);
        } else {
            let g = RibbonGraph::from_rotations(&rotations).unwrap();
            let faces: Vec<_> = g
                .boundary_walks()
                .into_iter()
                .filter(|f| !f.is_empty())
                .collect();
            let face = faces.choose(rng).unwrap();
            let w1 = face.choose(rng).unwrap().0;
            let w2 = face.choose(rng).unwrap().0;
            insert_before(&mut rotations, w1, a);
            insert_before(&mut rotations, w2, b);
        }
    }
    let g = RibbonGraph::from_rotations(&rotations).unwrap();
    assert_eq!(
        g.metrics().genus,
        0,
        "generator left the plane: {rotations:?}"
    );
    g
}
