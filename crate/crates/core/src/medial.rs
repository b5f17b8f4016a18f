//! Medial alternating link of a ribbon graph and the bracket identity
//!
//! ```text
//! ⟨L_G⟩(A, B, d) = A^{r(G)} B^{n(G)} d^{k(G)-1} R_G(Bd/A, Ad/B, 1/d)
//! ```
//!
//! which also holds for signed graphs with the signed polynomial and the
//! crossings of negative edges switched.
//!
//! Edge `i` (darts `a = 2i`, `ā = 2i + 1`) becomes crossing `i`. Its ports,
//! counterclockwise, sit at the corners
//!
//! | port | corner          |
//! |------|-----------------|
//! | 0    | `(ā, σ(ā))`     |
//! | 1    | `(σ⁻¹(ā), ā)`   |
//! | 2    | `(a, σ(a))`     |
//! | 3    | `(σ⁻¹(a), a)`   |
//!
//! and every corner `(d, σ(d))` carries one arc, from the port of `d` on the
//! side leaving `d` to the port of `σ(d)` on the side entering it. The
//! overstrand of a positive edge runs through ports 0 and 2.

use alloc::vec::Vec;

use crate::bollobas_riordan::{signed_br_polynomial, SizeLimit};
use crate::diagram::{kauffman_bracket, Crossing, OverPair, State, SurfaceLinkDiagram};
use crate::error::ComputeError;
use crate::poly::{MultiPoly, QExp};
use crate::ribbon::{Dart, Edge, RibbonGraph};

/// The medial diagram together with its dictionary back to the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Medial {
    pub diagram: SurfaceLinkDiagram,
    corners: Vec<(Dart, Dart)>,
}

impl Medial {
    pub fn crossing_of(&self, e: Edge) -> usize {
        e.0
    }

    pub fn edge_of(&self, crossing: usize) -> Edge {
        Edge(crossing)
    }

    /// Corner `(d, σ(d))` of the graph at which `port` sits.
    pub fn corner(&self, port: usize) -> (Dart, Dart) {
        self.corners[port]
    }

    /// Spanning subgraph matched with a state: an edge is kept exactly when
    /// its crossing is A-smoothed.
    pub fn subgraph_of_state(&self, state: &State) -> Vec<Edge> {
        state
            .0
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == crate::diagram::Smoothing::A)
            .map(|(i, _)| self.edge_of(i))
            .collect()
    }
}

fn leaving_port(d: usize) -> usize {
    4 * (d / 2) + if d % 2 == 0 { 2 } else { 0 }
}

fn entering_port(d: usize) -> usize {
    4 * (d / 2) + if d % 2 == 0 { 3 } else { 1 }
}

pub fn medial_diagram(g: &RibbonGraph) -> Medial {
    let sigma = g.sigma_table();
    let mut corners = alloc::vec![(Dart(0), Dart(0)); 4 * g.num_edges()];
    let mut arcs = Vec::with_capacity(g.num_darts());
    for d in 0..g.num_darts() {
        let s = sigma[d];
        let (p, q) = (leaving_port(d), entering_port(s));
        corners[p] = (Dart(d), Dart(s));
        corners[q] = (Dart(d), Dart(s));
        arcs.push((p, q));
    }
    let crossings = g
        .signs()
        .iter()
        .map(|s| Crossing {
            over: if s.is_negative() {
                OverPair::Odd
            } else {
                OverPair::Even
            },
        })
        .collect();
    let diagram = SurfaceLinkDiagram::new(crossings, &arcs, g.isolated_vertices())
        .expect("medial arcs form a perfect matching");
    Medial { diagram, corners }
}

/// Applies `A^r B^n d^{k-1} R(Bd/A, Ad/B, 1/d)` to a computed `R`.
pub fn bracket_from_br(g: &RibbonGraph, r: &MultiPoly) -> Result<MultiPoly, ComputeError> {
    let m = g.metrics();
    let one = QExp::from_int(1);
    let x = MultiPoly::monomial(1, &[("A", -one), ("B", one), ("d", one)]);
    let y = MultiPoly::monomial(1, &[("A", one), ("B", -one), ("d", one)]);
    let z = MultiPoly::monomial(1, &[("d", -one)]);
    let sub = r.substitute(&[("x", &x), ("y", &y), ("z", &z)])?;
    let pre = MultiPoly::monomial(
        1,
        &[
            ("A", QExp::from_int(m.r as i64)),
            ("B", QExp::from_int(m.n as i64)),
            ("d", QExp::from_int(m.k as i64 - 1)),
        ],
    );
    Ok((&pre * &sub).reorder_vars(&["A", "B", "d"]))
}

/// Right-hand side of the bracket identity, using the signed polynomial
/// (which is the plain one when all edges are positive).
pub fn identity_rhs(g: &RibbonGraph, limit: SizeLimit) -> Result<MultiPoly, ComputeError> {
    bracket_from_br(g, &signed_br_polynomial(g, limit)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub equal: bool,
}

impl IdentityReport {
    pub fn new(lhs: MultiPoly, rhs: MultiPoly) -> Self {
        let equal = lhs == rhs;
        IdentityReport { lhs, rhs, equal }
    }
}

pub fn check_identity(g: &RibbonGraph, limit: SizeLimit) -> Result<IdentityReport, ComputeError> {
    let lhs = kauffman_bracket(&medial_diagram(g).diagram, limit)?;
    let rhs = identity_rhs(g, limit)?;
    Ok(IdentityReport::new(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bollobas_riordan::BrKernel;
    use crate::enumerate::all_maps;
    use crate::ribbon::Sign;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    fn rot(v: &[&[usize]]) -> RibbonGraph {
        RibbonGraph::from_rotations(v).unwrap()
    }

    #[test]
    fn two_loop_medial_states() {
        let m = medial_diagram(&rot(&[&[0, 2, 1, 3]]));
        let d = &m.diagram;
        assert_eq!(d.num_crossings(), 2);
        let mut got = Vec::new();
        // AA, AB, BA, BB with crossing 0 first
        for mask in [0b11, 0b10, 0b01, 0b00] {
            let t = d.resolve_state(&State::from_mask(2, mask)).unwrap();
            got.push((t.alpha, t.beta, t.delta));
        }
        assert_eq!(got, [(2, 0, 1), (1, 1, 2), (1, 1, 2), (0, 2, 1)]);
        assert_eq!(
            kauffman_bracket(d, SizeLimit::default()).unwrap(),
            p("A^2 + 2*A*B*d + B^2")
        );
    }

    #[test]
    fn small_medials() {
        let kink = medial_diagram(&rot(&[&[0, 1]]));
        assert_eq!(kink.diagram.arcs(), [(0, 3), (1, 2)]);
        assert_eq!(kink.corner(2), (Dart(0), Dart(1)));
        assert_eq!(
            kauffman_bracket(&kink.diagram, SizeLimit::default()).unwrap(),
            p("A*d + B")
        );
        let bare = medial_diagram(&rot(&[&[]]));
        assert_eq!(bare.diagram.num_crossings(), 0);
        assert_eq!(bare.diagram.free_loops(), 1);
        assert_eq!(
            kauffman_bracket(&bare.diagram, SizeLimit::default()).unwrap(),
            MultiPoly::one()
        );
    }

    #[test]
    fn rhs_examples() {
        let lim = SizeLimit::default();
        assert_eq!(
            identity_rhs(&rot(&[&[0, 2, 1, 3]]), lim).unwrap(),
            p("A^2 + 2*A*B*d + B^2")
        );
        assert_eq!(
            identity_rhs(&rot(&[&[0], &[1]]), lim).unwrap(),
            p("B*d + A")
        );
        assert_eq!(identity_rhs(&rot(&[&[]]), lim).unwrap(), MultiPoly::one());
    }

    #[test]
    fn negative_bridge() {
        let g = rot(&[&[0], &[1]])
            .with_signs(alloc::vec![Sign::Negative])
            .unwrap();
        let rep = check_identity(&g, SizeLimit::default()).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.lhs, p("A*d + B"));
    }

    #[test]
    fn empty_graph_both_sides() {
        let rep = check_identity(&RibbonGraph::empty(), SizeLimit::default()).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.lhs, p("d^-1"));
    }

    #[test]
    fn evaluation_point_lies_on_xyz2_equals_one() {
        let xyz2 = p("x*y*z^2");
        let one = QExp::from_int(1);
        let x = MultiPoly::monomial(1, &[("A", -one), ("B", one), ("d", one)]);
        let y = MultiPoly::monomial(1, &[("A", one), ("B", -one), ("d", one)]);
        let z = MultiPoly::monomial(1, &[("d", -one)]);
        let v = xyz2.substitute(&[("x", &x), ("y", &y), ("z", &z)]).unwrap();
        assert_eq!(v, MultiPoly::one());
    }

    #[test]
    fn states_match_subgraphs_on_small_maps() {
        for g in all_maps(3, 3) {
            let m = medial_diagram(&g);
            let kernel = BrKernel::new(&g, false, SizeLimit::default()).unwrap();
            for mask in 0..kernel.num_subsets() {
                let state = State::from_mask(g.num_edges(), mask);
                let t = m.diagram.resolve_state(&state).unwrap();
                let kept = m.subgraph_of_state(&state);
                let f = g.induced_subgraph(&kept).unwrap().metrics();
                assert_eq!(t.delta, f.bc);
                assert_eq!(t.alpha, f.e);
                assert_eq!(t.beta, g.num_edges() - f.e);
                assert_eq!(kernel.subset_stats(mask).bc, f.bc);
            }
            assert!(check_identity(&g, SizeLimit::default()).unwrap().equal);
        }
    }

    #[test]
    fn corners_are_consistent() {
        let g = rot(&[&[0, 2, 4], &[1, 5], &[3]]);
        let m = medial_diagram(&g);
        for (p, q) in m.diagram.arcs() {
            assert_eq!(m.corner(p), m.corner(q));
            let (d, s) = m.corner(p);
            assert_eq!(g.sigma(d), s);
        }
    }
}
