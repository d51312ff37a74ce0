//! Oriented state expansion of a diagram map.
//!
//! Every crossing is resolved either orientation-coherently or into the
//! disoriented smoothing that introduces a cusp pair. A resolved state is a
//! long segment plus circles; surviving cusps come in zigzag trains whose
//! data (count, sides, sink/source pattern, position relative to the outer
//! region) drives the invariant variables.

use crate::embed::{dart, DiagramMap, EdgeEnd, HEAD, TAIL};
use crate::gauss::Sign;

/// Which smoothing a crossing takes in a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    Oriented,
    Disoriented,
}

/// Side of the acute cusp angle relative to the component traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuspSide {
    Left,
    Right,
}

/// Arrow pattern at a cusp: both strands point in (sink) or out (source).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuspDir {
    Sink,
    Source,
}

#[derive(Debug, Clone)]
pub struct Cusp {
    pub side: CuspSide,
    pub dir: CuspDir,
    /// Dart whose state face contains the pinched corner.
    pub pinch_dart: usize,
}

#[derive(Debug, Clone)]
pub struct StateComponent {
    /// Traversal darts; the segment runs tail to head, circles are cyclic.
    pub darts: Vec<usize>,
    pub closed: bool,
    /// Cusps along the traversal, already reduced to the surviving train.
    pub cusps: Vec<Cusp>,
}

impl StateComponent {
    /// Number of zigzag pairs among the surviving cusps.
    pub fn zigzags(&self) -> usize {
        self.cusps.len() / 2
    }
}

/// One resolved state of the diagram.
#[derive(Debug, Clone)]
pub struct SmoothedState {
    /// Net A-exponent from the smoothing choices.
    pub a_weight: i32,
    /// Component 0 is the long segment.
    pub components: Vec<StateComponent>,
    /// For each circle component (index ≥ 1), whether it winds around the
    /// long segment; only computed in planar mode.
    pub encloses_segment: Vec<bool>,
    /// For each circle, whether the acute angles on its Left side (in
    /// traversal order) open towards the side containing the outer region.
    pub left_is_outer_side: Vec<bool>,
}

/// Junction pairing of the four edge-ends at a smoothed crossing.
fn pairings(slots: &[EdgeEnd], sign: Sign, res: Resolution) -> [(EdgeEnd, EdgeEnd); 2] {
    // Pairing of cyclically adjacent slots (i, i+1): (01)(23) carries weight
    // A, (12)(30) carries A^-1, for either sign.
    let adj01 = match (sign, res) {
        (Sign::Plus, Resolution::Oriented) => true,
        (Sign::Plus, Resolution::Disoriented) => false,
        (Sign::Minus, Resolution::Oriented) => false,
        (Sign::Minus, Resolution::Disoriented) => true,
    };
    if adj01 {
        [(slots[0], slots[1]), (slots[2], slots[3])]
    } else {
        [(slots[1], slots[2]), (slots[3], slots[0])]
    }
}

fn weight_of(sign: Sign, res: Resolution) -> i32 {
    match (sign, res) {
        (Sign::Plus, Resolution::Oriented) | (Sign::Minus, Resolution::Disoriented) => 1,
        _ => -1,
    }
}

/// Per-state scratch-free expansion of one smoothing choice.
pub struct StateBuilder<'a> {
    map: &'a DiagramMap,
    signs: &'a [Sign],
}

struct JunctionTable {
    /// partner[end] = paired end at the smoothed crossing, usize::MAX at
    /// endpoint vertices.
    partner: Vec<EdgeEnd>,
    /// ccw_first[end] = true when the end is the counterclockwise-first slot
    /// of its junction pair.
    ccw_first: Vec<bool>,
    /// cusp[end] = the junction is disorienting.
    is_cusp: Vec<bool>,
    /// sink[end] = both paired ends point into the vertex.
    is_sink: Vec<bool>,
}

impl<'a> StateBuilder<'a> {
    pub fn new(map: &'a DiagramMap, signs: &'a [Sign]) -> Self {
        StateBuilder { map, signs }
    }

    fn junctions(&self, choice: u64) -> (JunctionTable, i32) {
        let n = self.map.n;
        let arcs = 2 * n + 1;
        let mut t = JunctionTable {
            partner: vec![usize::MAX; arcs * 2],
            ccw_first: vec![false; arcs * 2],
            is_cusp: vec![false; arcs * 2],
            is_sink: vec![false; arcs * 2],
        };
        let mut a_weight = 0i32;
        for c in 1..=n {
            let res = if choice >> (c - 1) & 1 == 0 {
                Resolution::Oriented
            } else {
                Resolution::Disoriented
            };
            let sign = self.signs[c - 1];
            a_weight += weight_of(sign, res);
            let slots = &self.map.slots[c + 1];
            for (x, y) in pairings(slots, sign, res) {
                t.partner[x] = y;
                t.partner[y] = x;
                t.ccw_first[x] = true;
                // Both ends incoming (target ends) or both outgoing: cusp.
                let x_in = x % 2 == 1;
                let y_in = y % 2 == 1;
                if x_in == y_in {
                    t.is_cusp[x] = true;
                    t.is_cusp[y] = true;
                    t.is_sink[x] = x_in;
                    t.is_sink[y] = x_in;
                }
            }
        }
        (t, a_weight)
    }

    /// Expands the smoothing choice given by the bitmask.
    ///
    /// `planar_outer`: outer face of the diagram map, when the state is
    /// expanded for a planar invariant; enables face tracing and the
    /// enclosing-circle bookkeeping.
    pub fn expand(&self, choice: u64, planar_outer: Option<usize>) -> SmoothedState {
        let (tbl, a_weight) = self.junctions(choice);
        let n = self.map.n;
        let arcs = 2 * n + 1;

        // Trace components.
        let mut comp_of_arc = vec![usize::MAX; arcs];
        let mut components: Vec<StateComponent> = Vec::new();
        {
            // segment from the tail
            let (darts, cusps) = self.trace(dart(0, 0), &tbl, &mut comp_of_arc, 0, false);
            components.push(StateComponent { darts, closed: false, cusps });
        }
        for e in 0..arcs {
            if comp_of_arc[e] != usize::MAX {
                continue;
            }
            let id = components.len();
            let (darts, cusps) = self.trace(dart(e, 0), &tbl, &mut comp_of_arc, id, true);
            components.push(StateComponent { darts, closed: true, cusps });
        }

        let mut state = SmoothedState {
            a_weight,
            components,
            encloses_segment: Vec::new(),
            left_is_outer_side: Vec::new(),
        };

        if let Some(outer_face) = planar_outer {
            self.planar_positions(&tbl, &comp_of_arc, outer_face, &mut state);
        }
        state
    }

    // Walks the state curve from `start`, recording traversal darts and the
    // surviving cusp train.
    fn trace(
        &self,
        start: usize,
        tbl: &JunctionTable,
        comp_of_arc: &mut [usize],
        comp_id: usize,
        closed: bool,
    ) -> (Vec<usize>, Vec<Cusp>) {
        let mut darts = Vec::new();
        let mut cusps: Vec<Cusp> = Vec::new();
        let mut d = start;
        loop {
            darts.push(d);
            comp_of_arc[d / 2] = comp_id;
            let arc = d / 2;
            let arrive: EdgeEnd = arc * 2 + (1 - (d % 2));
            let v = self.map.vertex_of_end(arrive);
            if v == TAIL || v == HEAD {
                break; // open component ends
            }
            let partner = tbl.partner[arrive];
            debug_assert_ne!(partner, usize::MAX);
            if tbl.is_cusp[arrive] {
                let side = if tbl.ccw_first[arrive] { CuspSide::Right } else { CuspSide::Left };
                let dir = if tbl.is_sink[arrive] { CuspDir::Sink } else { CuspDir::Source };
                // The pinched corner lies in the state face of the walk that
                // arrives via the ccw-second end of the pair.
                let second_end = if tbl.ccw_first[arrive] { partner } else { arrive };
                let e2 = second_end / 2;
                let pinch_dart = if second_end % 2 == 1 { dart(e2, 0) } else { dart(e2, 1) };
                cusps.push(Cusp { side, dir, pinch_dart });
            }
            // leave along the partner's edge, away from the vertex
            let e2 = partner / 2;
            d = if partner % 2 == 0 { dart(e2, 0) } else { dart(e2, 1) };
            if closed && d == start {
                break;
            }
        }
        (darts, reduce_cusps(cusps, closed))
    }

    // Face structure of the state: enclosing flags and inside/outside sides
    // for every circle.
    //
    // A state is a disjoint 1-manifold, so its regions cannot be traced from
    // the rotation system alone. Instead they are unions of the faces of the
    // (connected) diagram map: smoothing a crossing opens a channel between
    // the two non-pinched corners, merging their faces.
    fn planar_positions(
        &self,
        tbl: &JunctionTable,
        comp_of_arc: &[usize],
        outer_face: usize,
        state: &mut SmoothedState,
    ) {
        let arcs = 2 * self.map.n + 1;
        let dart_count = arcs * 2;
        let nf = self.map.faces.len();
        let mut parent: Vec<usize> = (0..nf).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        // dart travelling into an edge-end
        let arriving = |end: EdgeEnd| -> usize {
            let e = end / 2;
            if end % 2 == 1 {
                dart(e, 0)
            } else {
                dart(e, 1)
            }
        };
        for c in 1..=self.map.n {
            let slots = &self.map.slots[c + 1];
            // channel corners are the two wedges not pinched by the pairing
            let channel_heads = if tbl.partner[slots[0]] == slots[1] {
                // pairing (01)(23): channels at wedges (1,2) and (3,0)
                [slots[2], slots[0]]
            } else {
                // pairing (12)(30): channels at wedges (0,1) and (2,3)
                [slots[1], slots[3]]
            };
            let f1 = find(&mut parent, self.map.face_of[arriving(channel_heads[0])]);
            let f2 = find(&mut parent, self.map.face_of[arriving(channel_heads[1])]);
            parent[f1] = f2;
        }

        let region_of_dart = |parent: &mut Vec<usize>, d: usize| -> usize {
            let f = self.map.face_of[d];
            find(parent, f)
        };

        // BFS over regions; parity[r][component] = crossing parity of that
        // component along a path from the outer region.
        let outer_region = find(&mut parent, outer_face);
        let ncomp = state.components.len();
        let mut region_darts: Vec<(usize, usize)> = Vec::with_capacity(dart_count);
        for d in 0..dart_count {
            region_darts.push((region_of_dart(&mut parent, d), d));
        }
        let mut adjacency: std::collections::HashMap<usize, Vec<usize>> =
            std::collections::HashMap::new();
        for &(r, d) in &region_darts {
            adjacency.entry(r).or_default().push(d);
        }
        let mut parity: std::collections::HashMap<usize, Vec<u8>> =
            std::collections::HashMap::new();
        parity.insert(outer_region, vec![0; ncomp]);
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(outer_region);
        while let Some(r) = queue.pop_front() {
            let base = parity[&r].clone();
            if let Some(ds) = adjacency.get(&r) {
                let ds = ds.clone();
                for d in ds {
                    let g = region_of_dart(&mut parent, d ^ 1);
                    if parity.contains_key(&g) {
                        continue;
                    }
                    let mut p = base.clone();
                    p[comp_of_arc[d / 2]] ^= 1;
                    parity.insert(g, p);
                    queue.push_back(g);
                }
            }
        }

        let seg_region = region_of_dart(&mut parent, dart(0, 0));
        let seg_parity = parity[&seg_region].clone();

        for (idx, comp) in state.components.iter().enumerate().skip(1) {
            // circle `idx` winds around the segment iff it separates the
            // segment side from the outer region
            state.encloses_segment.push(seg_parity[idx] == 1);
            let left_region = region_of_dart(&mut parent, comp.darts[0]);
            let left_par = parity[&left_region][idx];
            state.left_is_outer_side.push(left_par == 0);
        }
    }
}

/// Cancels consecutive same-side cusp pairs to a fixpoint. The surviving
/// train alternates sides; for circles the wrap-around pair also cancels.
fn reduce_cusps(cusps: Vec<Cusp>, closed: bool) -> Vec<Cusp> {
    let mut stack: Vec<Cusp> = Vec::with_capacity(cusps.len());
    for c in cusps {
        if let Some(top) = stack.last() {
            if top.side == c.side {
                stack.pop();
                continue;
            }
        }
        stack.push(c);
    }
    if closed {
        while stack.len() >= 2 && stack.first().unwrap().side == stack.last().unwrap().side {
            stack.pop();
            stack.remove(0);
        }
    }
    debug_assert!(stack.len() % 2 == 0, "odd surviving cusp count");
    stack
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::build_map;
    use crate::gauss::parse_sphere;

    #[test]
    fn trivial_code_single_state() {
        let code = parse_sphere("").unwrap();
        let map = build_map(&code).unwrap();
        let b = StateBuilder::new(&map, &code.signs);
        let st = b.expand(0, None);
        assert_eq!(st.components.len(), 1);
        assert_eq!(st.a_weight, 0);
        assert!(st.components[0].cusps.is_empty());
    }

    #[test]
    fn kink_states() {
        let code = parse_sphere("1 -1  +").unwrap();
        let map = build_map(&code).unwrap();
        let b = StateBuilder::new(&map, &code.signs);
        // oriented: segment plus one circle, weight A
        let oriented = b.expand(0, None);
        assert_eq!(oriented.a_weight, 1);
        assert_eq!(oriented.components.len(), 2);
        assert!(oriented.components.iter().all(|c| c.cusps.is_empty()));
        // disoriented: single segment, the cusp pair cancels
        let dis = b.expand(1, None);
        assert_eq!(dis.a_weight, -1);
        assert_eq!(dis.components.len(), 1);
        assert!(dis.components[0].cusps.is_empty(), "kink cusps must cancel");
    }

    #[test]
    fn fig7_state_count_and_even_cusps() {
        let code = parse_sphere("1 -2 -1 2  ++").unwrap();
        let map = build_map(&code).unwrap();
        let b = StateBuilder::new(&map, &code.signs);
        for choice in 0..4u64 {
            let st = b.expand(choice, None);
            for comp in &st.components {
                assert_eq!(comp.cusps.len() % 2, 0);
            }
        }
    }
}
