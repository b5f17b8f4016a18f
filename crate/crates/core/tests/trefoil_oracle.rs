//! Brute-force Jones polynomial of the triangle-graph medial (a trefoil),
//! computed without the crate's bracket, writhe or polynomial code.

use std::collections::BTreeMap;

use ribbonkb_core::{medial_diagram, RibbonGraph};

type Laurent = BTreeMap<i64, i64>; // quarter exponent of t -> coefficient

fn mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn find(parent: &mut Vec<usize>, x: usize) -> usize {
    if parent[x] != x {
        let r = find(parent, parent[x]);
        parent[x] = r;
    }
    parent[x]
}

#[test]
fn trefoil_jones_by_brute_force() {
    let g = RibbonGraph::from_rotations(&[vec![0, 5], vec![1, 2], vec![3, 4]]).unwrap();
    let d = medial_diagram(&g).diagram;
    let n = d.num_crossings();
    assert_eq!(n, 3);
    let arcs = d.arcs();
    let over: Vec<usize> = d.crossings().iter().map(|c| c.over.offset()).collect();

    // smoothings written out per over offset: A joins (o,o-1),(o+2,o+1)
    let a_pairs = |o: usize| [(o, (o + 3) % 4), (o + 2, (o + 1) % 4)];
    let b_pairs = |o: usize| [(o, (o + 1) % 4), (o + 2, (o + 3) % 4)];

    let loop_value: Laurent = [(2, -1), (-2, -1)].into_iter().collect(); // -t^{1/2} - t^{-1/2}
    let mut bracket = Laurent::new();
    for mask in 0..(1u32 << n) {
        let mut parent: Vec<usize> = (0..4 * n).collect();
        let join = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            p[ra] = rb;
        };
        for &(a, b) in &arcs {
            join(&mut parent, a, b);
        }
        let mut alpha = 0;
        for c in 0..n {
            let pairs = if mask >> c & 1 == 1 {
                alpha += 1;
                a_pairs(over[c])
            } else {
                b_pairs(over[c])
            };
            for (a, b) in pairs {
                join(&mut parent, 4 * c + a, 4 * c + b);
            }
        }
        let loops = (0..4 * n).filter(|&x| find(&mut parent, x) == x).count();
        // A^α B^β = t^{(β-α)/4}
        let beta = n as i64 - alpha;
        let mut term: Laurent = [(beta - alpha, 1)].into_iter().collect();
        for _ in 1..loops {
            term = mul(&term, &loop_value);
        }
        for (e, c) in term {
            *bracket.entry(e).or_insert(0) += c;
        }
    }
    bracket.retain(|_, c| *c != 0);

    // writhe: walk the single component, record which port each strand leaves by
    let partner: BTreeMap<usize, usize> =
        arcs.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
    let mut leaves = vec![false; 4 * n];
    let mut p = 0;
    loop {
        leaves[p] = true;
        p = partner[&p] ^ 2;
        if p == 0 {
            break;
        }
    }
    let mut w = 0i64;
    for c in 0..n {
        let o = over[c];
        let oe = if leaves[4 * c + o] { o } else { o + 2 };
        let ue = if leaves[4 * c + o + 1] {
            o + 1
        } else {
            (o + 3) % 4
        };
        w += if ue == (oe + 1) % 4 { 1 } else { -1 };
    }
    assert_eq!(w.abs(), 3);

    let sign = if w % 2 == 0 { 1 } else { -1 };
    let jones = mul(&[(3 * w, sign)].into_iter().collect(), &bracket);

    let left: Laurent = [(-16, -1), (-12, 1), (-4, 1)].into_iter().collect();
    let right: Laurent = [(16, -1), (12, 1), (4, 1)].into_iter().collect();
    println!("writhe {w}, jones {jones:?}");
    assert!(jones == left || jones == right);
    // frozen: with these port conventions the triangle medial is the
    // right-handed trefoil, t + t^3 - t^4
    assert_eq!(jones, right);
    assert_eq!(w, 3);
}
