use num_bigint::BigInt;
use proptest::prelude::*;

use ribbonkb_core::diagram::{jones_polynomial, kauffman_bracket};
use ribbonkb_core::{
    br_polynomial, check_identity, medial_diagram, signed_br_polynomial, tutte_polynomial, Edge,
    MultiPoly, Orientation, QExp, RibbonGraph, Sign, SizeLimit,
};

fn lim() -> SizeLimit {
    SizeLimit::default()
}

prop_compose! {
    fn ribbon_graph(max_edges: usize)(e in 0..=max_edges)
        (sigma in Just((0..2 * e).collect::<Vec<usize>>()).prop_shuffle(),
         isolated in 0..2usize,
         signs in proptest::collection::vec(any::<bool>(), e)) -> RibbonGraph {
        let alpha: Vec<usize> = (0..sigma.len()).map(|d| d ^ 1).collect();
        let g = RibbonGraph::from_permutations(&sigma, &alpha, isolated).unwrap();
        let signs = signs.into_iter().map(|n| if n { Sign::Negative } else { Sign::Positive }).collect();
        g.with_signs(signs).unwrap()
    }
}

fn tutte_specialization(g: &RibbonGraph) -> MultiPoly {
    let r = br_polynomial(g, lim()).unwrap();
    let x = MultiPoly::parse("x - 1").unwrap();
    let y = MultiPoly::parse("y - 1").unwrap();
    r.substitute(&[("x", &x), ("y", &y), ("z", &MultiPoly::one())])
        .unwrap()
}

#[test]
fn trefoil_from_triangle() {
    let g = RibbonGraph::from_rotations(&[vec![0, 5], vec![1, 2], vec![3, 4]]).unwrap();
    let d = medial_diagram(&g).diagram;
    assert_eq!(d.components().len(), 1);
    for dir in [true, false] {
        let o = Orientation(vec![dir]);
        assert_eq!(d.crossing_signs(&o).unwrap(), vec![1, 1, 1]);
        let j = jones_polynomial(&d, &o, lim()).unwrap();
        assert_eq!(j, MultiPoly::parse("t + t^3 - t^4").unwrap());
    }
    let t = tutte_polynomial(&g.underlying_graph(), lim()).unwrap();
    assert_eq!(t, MultiPoly::parse("x^2 + x + y").unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn signed_identity_holds(g in ribbon_graph(6)) {
        let rep = check_identity(&g, lim()).unwrap();
        prop_assert!(rep.equal, "lhs {} rhs {}", rep.lhs, rep.rhs);
    }

    #[test]
    fn bracket_is_homogeneous(g in ribbon_graph(6)) {
        let d = medial_diagram(&g).diagram;
        let b = kauffman_bracket(&d, lim()).unwrap();
        let n = QExp::from_int(d.num_crossings() as i64);
        let vars = b.vars().to_vec();
        let ia = vars.iter().position(|v| v == "A").unwrap();
        let ib = vars.iter().position(|v| v == "B").unwrap();
        for (e, _) in b.terms() {
            prop_assert_eq!(e[ia] + e[ib], n);
        }
        prop_assert_eq!(b.coefficient_sum(), BigInt::from(1u64 << d.num_crossings()));
    }

    #[test]
    fn z_exponents_are_even(g in ribbon_graph(6)) {
        let r = signed_br_polynomial(&g, lim()).unwrap();
        for z in r.exponents_of("z") {
            prop_assert!(z.quarters() >= 0 && z.quarters() % 8 == 0);
        }
    }

    #[test]
    fn z_equal_one_gives_tutte(g in ribbon_graph(6)) {
        let t = tutte_polynomial(&g.underlying_graph(), lim()).unwrap();
        prop_assert_eq!(tutte_specialization(&g), t);
    }

    #[test]
    fn multiplicative_over_disjoint_union(a in ribbon_graph(4), b in ribbon_graph(4)) {
        let u = a.disjoint_union(&b);
        prop_assert_eq!(
            signed_br_polynomial(&u, lim()).unwrap(),
            &signed_br_polynomial(&a, lim()).unwrap() * &signed_br_polynomial(&b, lim()).unwrap()
        );
    }

    #[test]
    fn full_subgraph_has_same_metrics(g in ribbon_graph(6)) {
        let all: Vec<Edge> = g.edges().collect();
        prop_assert_eq!(g.induced_subgraph(&all).unwrap().metrics(), g.metrics());
        let m = g.metrics();
        prop_assert_eq!(m.r, m.v - m.k);
        prop_assert_eq!(m.k + m.n, m.bc + 2 * m.genus);
    }

    #[test]
    fn writhe_survives_global_reversal(g in ribbon_graph(6)) {
        let d = medial_diagram(&g).diagram;
        let fwd = d.default_orientation();
        let back = Orientation(fwd.0.iter().map(|b| !b).collect());
        prop_assert_eq!(d.writhe(&fwd).unwrap(), d.writhe(&back).unwrap());
        if fwd.0.len() == 1 {
            let j1 = jones_polynomial(&d, &fwd, lim()).unwrap();
            let j2 = jones_polynomial(&d, &back, lim()).unwrap();
            prop_assert_eq!(j1, j2);
        }
    }
}
