//! Combinatorial embedding of a Gauss code.
//!
//! The underlying graph of an n-crossing knotoid diagram has the n crossings
//! plus the two endpoints as vertices and the 2n+1 arcs as edges. The word,
//! passages and signs force the cyclic order of the four arc-ends around
//! every crossing, so face tracing of that rotation system decides whether
//! the code is the trace of a diagram on the sphere: it is exactly when
//! Euler's formula gives n+1 faces.

use crate::error::{InvariantError, NotRealizable};
use crate::gauss::{ExtendedGaussCode, OrientedGaussCode, Passage, Sign};

/// Directed edge side: `arc * 2 + dir`, where dir 0 travels with the strand
/// orientation and dir 1 against it.
pub type Dart = usize;

/// Edge end: `arc * 2 + end`, end 0 at the arc's source vertex.
pub type EdgeEnd = usize;

pub const TAIL: usize = 0;
pub const HEAD: usize = 1;

pub fn dart(arc: usize, dir: usize) -> Dart {
    arc * 2 + dir
}

pub fn dart_arc(d: Dart) -> usize {
    d / 2
}

pub fn dart_reverse(d: Dart) -> Dart {
    d ^ 1
}

#[derive(Debug, Clone)]
pub struct DiagramMap {
    pub n: usize,
    /// Rotation system: CCW cyclic list of edge-ends per vertex. Vertex 0 is
    /// the tail, vertex 1 the head, crossing `c` is vertex `c + 1`.
    pub slots: Vec<Vec<EdgeEnd>>,
    /// For each edge-end, its (vertex, slot index).
    end_at: Vec<(usize, usize)>,
    /// Face id per dart.
    pub face_of: Vec<usize>,
    /// Dart cycles, one per face.
    pub faces: Vec<Vec<Dart>>,
}

impl DiagramMap {
    pub fn vertex_of_end(&self, e: EdgeEnd) -> usize {
        self.end_at[e].0
    }

    /// Vertex a dart runs into.
    pub fn dart_head(&self, d: Dart) -> usize {
        let arc = d / 2;
        let end = arc * 2 + (1 - (d % 2));
        self.end_at[end].0
    }

    /// Vertex a dart leaves from.
    pub fn dart_tail_vertex(&self, d: Dart) -> usize {
        let arc = d / 2;
        let end = arc * 2 + (d % 2);
        self.end_at[end].0
    }

    /// Next dart along the face: pivot clockwise around the arrival vertex.
    pub fn next_in_face(&self, d: Dart) -> Dart {
        let arc = d / 2;
        let arrive_end = arc * 2 + (1 - (d % 2));
        let (v, idx) = self.end_at[arrive_end];
        let rot = &self.slots[v];
        let k = rot.len();
        let depart_end = rot[(idx + k - 1) % k];
        let e2 = depart_end / 2;
        let dir = depart_end % 2; // source end departs forward
        dart(e2, dir)
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Sorted arc labels of a face, one entry per side-incidence, except that
    /// the two sides of an arc meeting around an endpoint count once.
    pub fn region_arcs(&self, face: usize) -> Vec<u16> {
        if self.n == 0 {
            return vec![0];
        }
        let mut arcs: Vec<u16> = Vec::new();
        for &d in &self.faces[face] {
            if self.dart_tail_vertex(d) <= HEAD {
                continue;
            }
            arcs.push(dart_arc(d) as u16);
        }
        arcs.sort_unstable();
        arcs
    }

    /// Sorted distinct arc labels of a face; the outer section of an
    /// extended code is exactly this set for the outer face.
    pub fn region_arc_set(&self, face: usize) -> Vec<u16> {
        let mut arcs = self.region_arcs(face);
        arcs.dedup();
        arcs
    }

    /// Face wrapping the tail endpoint.
    pub fn tail_face(&self) -> usize {
        self.face_of[dart(0, 0)]
    }

    /// Face wrapping the head endpoint.
    pub fn head_face(&self) -> usize {
        self.face_of[dart(2 * self.n, 1)]
    }

    /// Face whose arc set equals the given outer list, if any.
    pub fn face_with_arc_set(&self, outer: &[u16]) -> Option<usize> {
        (0..self.faces.len()).find(|&f| self.region_arc_set(f) == outer)
    }
}

/// Builds the rotation system forced by the code and traces its faces.
/// Fails with `NotRealizable` when the face count is not n+1.
pub fn build_map(code: &OrientedGaussCode) -> Result<DiagramMap, NotRealizable> {
    let map = build_rotation_system(code);
    let expected = code.crossings() + 1;
    if map.face_count() != expected {
        return Err(NotRealizable { faces: map.face_count(), expected });
    }
    Ok(map)
}

pub fn is_realizable(code: &OrientedGaussCode) -> bool {
    build_map(code).is_ok()
}

/// The rotation system and traced faces, without the sphere check.
pub fn build_rotation_system(code: &OrientedGaussCode) -> DiagramMap {
    let n = code.crossings();
    let arcs = 2 * n + 1;
    let mut over_pos = vec![0usize; n + 1];
    let mut under_pos = vec![0usize; n + 1];
    for (i, v) in code.word.iter().enumerate() {
        let pos = i + 1;
        match v.passage {
            Passage::Over => over_pos[v.label as usize] = pos,
            Passage::Under => under_pos[v.label as usize] = pos,
        }
    }

    let mut slots: Vec<Vec<EdgeEnd>> = vec![Vec::new(); n + 2];
    slots[TAIL] = vec![0 * 2 + 0];
    slots[HEAD] = vec![(arcs - 1) * 2 + 1];
    for c in 1..=n {
        let p_o = over_pos[c];
        let p_u = under_pos[c];
        let u_in = (p_u - 1) * 2 + 1;
        let u_out = p_u * 2;
        let o_in = (p_o - 1) * 2 + 1;
        let o_out = p_o * 2;
        slots[c + 1] = match code.signs[c - 1] {
            Sign::Plus => vec![u_in, o_out, u_out, o_in],
            Sign::Minus => vec![u_in, o_in, u_out, o_out],
        };
    }

    let mut end_at = vec![(usize::MAX, usize::MAX); arcs * 2];
    for (v, rot) in slots.iter().enumerate() {
        for (idx, &e) in rot.iter().enumerate() {
            end_at[e] = (v, idx);
        }
    }

    let mut map = DiagramMap {
        n,
        slots,
        end_at,
        face_of: vec![usize::MAX; arcs * 2],
        faces: Vec::new(),
    };
    trace_faces(&mut map);
    map
}

fn trace_faces(map: &mut DiagramMap) {
    let darts = map.face_of.len();
    for start in 0..darts {
        if map.face_of[start] != usize::MAX {
            continue;
        }
        let id = map.faces.len();
        let mut cycle = Vec::new();
        let mut d = start;
        loop {
            map.face_of[d] = id;
            cycle.push(d);
            d = map.next_in_face(d);
            if d == start {
                break;
            }
        }
        map.faces.push(cycle);
    }
}

/// All regions of a realizable code, as sorted arc lists with multiplicity.
pub fn regions(code: &OrientedGaussCode) -> Result<Vec<Vec<u16>>, NotRealizable> {
    let map = build_map(code)?;
    Ok((0..map.face_count()).map(|f| map.region_arcs(f)).collect())
}

/// One planar diagram per region of a realizable sphere code.
pub fn extended_variants(
    code: &OrientedGaussCode,
) -> Result<Vec<ExtendedGaussCode>, NotRealizable> {
    let map = build_map(code)?;
    let mut out = Vec::with_capacity(map.face_count());
    for f in 0..map.face_count() {
        out.push(ExtendedGaussCode { base: code.clone(), outer: map.region_arc_set(f) });
    }
    debug_assert_eq!(
        {
            let mut sets: Vec<_> = out.iter().map(|c| c.outer.clone()).collect();
            sets.sort();
            sets.dedup();
            sets.len()
        },
        out.len(),
        "distinct faces must give distinct arc sets"
    );
    Ok(out)
}

/// Position of the endpoints relative to the outer region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EndpointClass {
    KnotType,
    Proper,
    NonProper,
}

pub fn classify_endpoints(code: &ExtendedGaussCode) -> EndpointClass {
    let tail_arc = 0u16;
    let head_arc = 2 * code.crossings() as u16;
    let tail_in = code.outer.binary_search(&tail_arc).is_ok();
    let head_in = code.outer.binary_search(&head_arc).is_ok();
    match (tail_in, head_in) {
        (true, true) => EndpointClass::KnotType,
        (false, false) => EndpointClass::NonProper,
        _ => EndpointClass::Proper,
    }
}

/// Builds the map and checks that the outer list names an actual region.
pub fn build_planar_map(code: &ExtendedGaussCode) -> Result<(DiagramMap, usize), InvariantError> {
    let map = build_map(&code.base)?;
    match map.face_with_arc_set(&code.outer) {
        Some(f) => Ok((map, f)),
        None => Err(InvariantError::BadOuter(code.outer.clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::{parse_planar, parse_sphere};

    #[test]
    fn trivial_code_has_one_face() {
        let code = OrientedGaussCode::trivial();
        let map = build_map(&code).unwrap();
        assert_eq!(map.face_count(), 1);
        assert_eq!(map.region_arcs(0), vec![0]);
    }

    #[test]
    fn two_crossing_example_has_three_faces() {
        let code = parse_sphere("1 -2 -1 2  ++").unwrap();
        let map = build_map(&code).unwrap();
        assert_eq!(map.face_count(), 3);
    }

    #[test]
    fn two_crossing_example_regions() {
        let code = parse_sphere("1 -2 -1 2  ++").unwrap();
        let mut regs = regions(&code).unwrap();
        regs.sort();
        assert_eq!(regs, vec![vec![0, 2, 3], vec![1, 2, 4], vec![1, 3]]);
    }

    #[test]
    fn fig7_outer_is_a_region() {
        let code = parse_planar("1 -2 -1 2  ++  1 3").unwrap();
        let (_, f) = build_planar_map(&code).unwrap();
        let map = build_map(&code.base).unwrap();
        assert_eq!(map.region_arc_set(f), vec![1, 3]);
    }

    #[test]
    fn fig7_class_is_non_proper() {
        let code = parse_planar("1 -2 -1 2  ++  1 3").unwrap();
        assert_eq!(classify_endpoints(&code), EndpointClass::NonProper);
    }

    #[test]
    fn trivial_is_knot_type() {
        assert_eq!(
            classify_endpoints(&ExtendedGaussCode::trivial()),
            EndpointClass::KnotType
        );
    }
}
