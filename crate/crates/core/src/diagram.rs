//! Link diagrams on oriented surfaces, as purely combinatorial objects.
//!
//! A crossing has four ports numbered `0..4` counterclockwise; the global
//! id of port `p` at crossing `c` is `4c + p`. Inside a crossing the strands
//! join opposite ports (`0-2` and `1-3`); [`OverPair`] says which of the two
//! is on top. Outside, ports are joined in pairs by arcs. Closed components
//! without crossings are only counted.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::bollobas_riordan::SizeLimit;
use crate::error::{ComputeError, DiagramError};
use crate::poly::{MultiPoly, QExp, Tally};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OverPair {
    /// Ports 0 and 2 carry the overstrand.
    #[default]
    Even,
    /// Ports 1 and 3 carry the overstrand.
    Odd,
}

impl OverPair {
    /// Position of the first over-port (0 or 1).
    pub fn offset(self) -> usize {
        match self {
            OverPair::Even => 0,
            OverPair::Odd => 1,
        }
    }

    pub fn from_offset(o: usize) -> Option<Self> {
        match o {
            0 => Some(OverPair::Even),
            1 => Some(OverPair::Odd),
            _ => None,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            OverPair::Even => OverPair::Odd,
            OverPair::Odd => OverPair::Even,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub over: OverPair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothing {
    A,
    B,
}

/// A choice of smoothing at every crossing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct State(pub Vec<Smoothing>);

impl State {
    /// Bit `i` of `mask` set means crossing `i` is A-smoothed.
    pub fn from_mask(crossings: usize, mask: u64) -> Self {
        State(
            (0..crossings)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Smoothing::A
                    } else {
                        Smoothing::B
                    }
                })
                .collect(),
        )
    }

    pub fn mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Smoothing::A)
            .fold(0, |m, (i, _)| m | 1 << i)
    }
}

/// `(α, β, δ)` for one state: A-count, B-count, number of closed curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BracketTerm {
    pub alpha: usize,
    pub beta: usize,
    pub delta: usize,
}

/// Direction of each crossing-carrying component, indexed as in
/// [`SurfaceLinkDiagram::components`]. `true` keeps the default direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation(pub Vec<bool>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceLinkDiagram {
    crossings: Vec<Crossing>,
    partner: Vec<usize>,
    free_loops: usize,
}

fn opposite(port: usize) -> usize {
    port ^ 2
}

impl SurfaceLinkDiagram {
    /// Builds a diagram from its crossings and the arcs between ports.
    /// Every port must occur in exactly one arc.
    pub fn new(
        crossings: Vec<Crossing>,
        arcs: &[(usize, usize)],
        free_loops: usize,
    ) -> Result<Self, DiagramError> {
        let n = 4 * crossings.len();
        let mut partner = vec![usize::MAX; n];
        for &(p, q) in arcs {
            for x in [p, q] {
                if x >= n {
                    return Err(DiagramError::PortOutOfRange { port: x });
                }
            }
            if p == q {
                return Err(DiagramError::SelfPairedPort { port: p });
            }
            for x in [p, q] {
                if partner[x] != usize::MAX {
                    return Err(DiagramError::DuplicatePort { port: x });
                }
            }
            partner[p] = q;
            partner[q] = p;
        }
        if let Some(port) = partner.iter().position(|x| *x == usize::MAX) {
            return Err(DiagramError::UnmatchedPort { port });
        }
        Ok(SurfaceLinkDiagram {
            crossings,
            partner,
            free_loops,
        })
    }

    pub fn unknot_loops(free_loops: usize) -> Self {
        SurfaceLinkDiagram {
            crossings: Vec::new(),
            partner: Vec::new(),
            free_loops,
        }
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn partner(&self, port: usize) -> usize {
        self.partner[port]
    }

    /// Arcs as `(p, q)` with `p < q`, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|p| *p < self.partner[*p])
            .map(|p| (p, self.partner[p]))
            .collect()
    }

    /// The same diagram with every crossing switched.
    pub fn mirror(&self) -> Self {
        let mut m = self.clone();
        for c in &mut m.crossings {
            c.over = c.over.flipped();
        }
        m
    }

    /// Port paired with `port` by the smoothing at its crossing.
    ///
    /// With over-ports at positions `o` and `o + 2`, the A-smoothing joins
    /// each over-port to its counterclockwise predecessor and the
    /// B-smoothing to its successor.
    fn smoothing_partner(&self, port: usize, a_smoothed: bool) -> usize {
        let base = port & !3;
        let pos = port & 3;
        let o = self.crossings[port / 4].over.offset();
        let is_over = pos % 2 == o;
        let step = match (is_over, a_smoothed) {
            (true, true) | (false, false) => 3,
            (true, false) | (false, true) => 1,
        };
        base + (pos + step) % 4
    }

    /// Closed curves after smoothing every crossing per `mask`
    /// (bit set = A), including free loops.
    fn delta_for_mask(&self, mask: u64, seen: &mut [bool]) -> usize {
        seen.fill(false);
        let mut cycles = 0;
        for start in 0..self.partner.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            loop {
                seen[p] = true;
                let q = self.partner[p];
                seen[q] = true;
                p = self.smoothing_partner(q, mask >> (q / 4) & 1 == 1);
                if p == start {
                    break;
                }
            }
        }
        cycles + self.free_loops
    }

    pub fn resolve_state(&self, state: &State) -> Result<BracketTerm, DiagramError> {
        if state.0.len() != self.num_crossings() {
            return Err(DiagramError::PartialState {
                expected: self.num_crossings(),
                got: state.0.len(),
            });
        }
        let alpha = state.0.iter().filter(|s| **s == Smoothing::A).count();
        let mut seen = vec![false; self.partner.len()];
        Ok(BracketTerm {
            alpha,
            beta: self.num_crossings() - alpha,
            delta: self.delta_for_mask(state.mask(), &mut seen),
        })
    }

    /// Components that pass through crossings. Each is listed as the ports
    /// it leaves through, in default traversal order: start by leaving the
    /// component's lowest port along its arc, then go straight through every
    /// crossing. Components are ordered by lowest port.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.partner.len()];
        let mut out = Vec::new();
        for start in 0..self.partner.len() {
            if seen[start] {
                continue;
            }
            let mut exits = Vec::new();
            let mut p = start;
            loop {
                exits.push(p);
                let q = self.partner[p];
                seen[p] = true;
                seen[q] = true;
                p = opposite(q);
                if p == start {
                    break;
                }
            }
            out.push(exits);
        }
        out
    }

    pub fn default_orientation(&self) -> Orientation {
        Orientation(vec![true; self.components().len()])
    }

    /// Sign of every crossing under `orientation`: `+1` iff the
    /// understrand leaves through the port counterclockwise-next to the one
    /// the overstrand leaves through.
    pub fn crossing_signs(&self, orientation: &Orientation) -> Result<Vec<i8>, DiagramError> {
        let comps = self.components();
        if orientation.0.len() != comps.len() {
            return Err(DiagramError::IncoherentOrientation {
                expected: comps.len(),
                got: orientation.0.len(),
            });
        }
        let mut exit = vec![false; self.partner.len()];
        for (c, forward) in comps.iter().zip(&orientation.0) {
            for &p in c {
                if *forward {
                    exit[p] = true;
                } else {
                    exit[opposite(p)] = true;
                }
            }
        }
        Ok(self
            .crossings
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let o = c.over.offset();
                let over_exit = if exit[4 * i + o] { o } else { o + 2 };
                let under_exit = if exit[4 * i + o + 1] {
                    o + 1
                } else {
                    (o + 3) % 4
                };
                if under_exit == (over_exit + 1) % 4 {
                    1
                } else {
                    -1
                }
            })
            .collect())
    }

    pub fn writhe(&self, orientation: &Orientation) -> Result<i64, DiagramError> {
        Ok(self
            .crossing_signs(orientation)?
            .into_iter()
            .map(i64::from)
            .sum())
    }
}

/// State-sum kernel for the Kauffman bracket.
pub struct BracketKernel<'d> {
    diagram: &'d SurfaceLinkDiagram,
}

impl<'d> BracketKernel<'d> {
    pub fn new(diagram: &'d SurfaceLinkDiagram, limit: SizeLimit) -> Result<Self, ComputeError> {
        limit.check(diagram.num_crossings())?;
        Ok(BracketKernel { diagram })
    }

    pub fn num_states(&self) -> u64 {
        1u64 << self.diagram.num_crossings()
    }

    /// Adds `A^α B^β d^{δ-1}` for every state index in `range`.
    pub fn accumulate(&self, range: Range<u64>, tally: &mut Tally) {
        let n = self.diagram.num_crossings() as i64;
        let mut seen = vec![false; self.diagram.partner.len()];
        for mask in range {
            let a = mask.count_ones() as i64;
            let delta = self.diagram.delta_for_mask(mask, &mut seen) as i64;
            tally.add([4 * a, 4 * (n - a), 4 * (delta - 1)]);
        }
    }

    pub fn polynomial(&self, tally: Tally) -> MultiPoly {
        tally.into_poly(["A", "B", "d"])
    }
}

/// `⟨D⟩(A, B, d)` with a caller-supplied kernel runner.
pub fn kauffman_bracket_with<F>(
    d: &SurfaceLinkDiagram,
    limit: SizeLimit,
    run: F,
) -> Result<MultiPoly, ComputeError>
where
    F: FnOnce(&BracketKernel<'_>) -> Tally,
{
    let kernel = BracketKernel::new(d, limit)?;
    Ok(kernel.polynomial(run(&kernel)))
}

/// `⟨D⟩(A, B, d) = Σ_S A^{α(S)} B^{β(S)} d^{δ(S)-1}`.
pub fn kauffman_bracket(
    d: &SurfaceLinkDiagram,
    limit: SizeLimit,
) -> Result<MultiPoly, ComputeError> {
    kauffman_bracket_with(d, limit, |k| {
        let mut t = Tally::new();
        k.accumulate(0..k.num_states(), &mut t);
        t
    })
}

/// Applies `J(t) = (-1)^w t^{3w/4} ⟨D⟩(t^{-1/4}, t^{1/4}, -t^{1/2} - t^{-1/2})`
/// to an already computed bracket.
pub fn jones_from_bracket(bracket: &MultiPoly, writhe: i64) -> Result<MultiPoly, ComputeError> {
    let a = MultiPoly::monomial(1, &[("t", QExp::from_quarters(-1))]);
    let b = MultiPoly::monomial(1, &[("t", QExp::from_quarters(1))]);
    let d = &MultiPoly::monomial(-1, &[("t", QExp::from_quarters(2))])
        - &MultiPoly::monomial(1, &[("t", QExp::from_quarters(-2))]);
    let sub = bracket.substitute(&[("A", &a), ("B", &b), ("d", &d)])?;
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let pre = MultiPoly::monomial(sign, &[("t", QExp::from_quarters(3 * writhe))]);
    Ok((&pre * &sub).reorder_vars(&["t"]))
}

pub fn jones_polynomial(
    d: &SurfaceLinkDiagram,
    orientation: &Orientation,
    limit: SizeLimit,
) -> Result<MultiPoly, ComputeError> {
    let w = d.writhe(orientation)?;
    jones_from_bracket(&kauffman_bracket(d, limit)?, w)
}
