//! Reidemeister moves on Gauss codes.
//!
//! Sites are found on the embedding (kink edges, bigon faces, triangle
//! faces, dart pairs on a common face); applying a move rewrites the word
//! and signs. For planar diagrams the outer region of the result is
//! recovered from the embedding of the rewritten code by tracking witness
//! darts of the old outer face through the arc relabeling, instead of
//! transcribing the printed case tables; the tables appear as test oracles.

use crate::embed::{build_map, dart, DiagramMap};
use crate::gauss::{ExtendedGaussCode, OrientedGaussCode, Passage, Sign, Visit};

/// A concrete move application point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveSite {
    /// Untwist the kink at this crossing (its visits are word-adjacent).
    R1Remove { crossing: u16 },
    /// Pull apart two strands; `first`/`second` are the word indices of the
    /// first letter of each adjacent pair.
    R2Remove { first: usize, second: usize },
    /// Slide a strand across the crossing opposite it; the three arcs bound
    /// a triangular face.
    R3 { arcs: [u16; 3] },
    /// Add a kink on the arc side given by the dart.
    R1Add { dart: usize, over_first: bool },
    /// Push the strand at `mover` across the strand at `target`; both darts
    /// lie on one face. `mover_over` picks which strand goes on top.
    R2Add { mover: usize, target: usize, mover_over: bool },
}

impl MoveSite {
    pub fn is_increasing(self) -> bool {
        matches!(self, MoveSite::R1Add { .. } | MoveSite::R2Add { .. })
    }

    pub fn is_decreasing(self) -> bool {
        matches!(self, MoveSite::R1Remove { .. } | MoveSite::R2Remove { .. })
    }
}

/// Which site kinds to enumerate.
#[derive(Debug, Clone, Copy)]
pub struct SiteFilter {
    pub decreasing: bool,
    pub r3: bool,
    /// Enumerate crossing-increasing sites only while n < cap.
    pub increasing_cap: Option<usize>,
}

impl SiteFilter {
    pub fn all(cap: usize) -> Self {
        SiteFilter { decreasing: true, r3: true, increasing_cap: Some(cap) }
    }

    pub fn non_increasing() -> Self {
        SiteFilter { decreasing: true, r3: true, increasing_cap: None }
    }
}

fn word_positions(code: &OrientedGaussCode) -> Vec<[usize; 2]> {
    // positions[label-1] = word indices (0-based) of the two visits
    let n = code.crossings();
    let mut pos = vec![[usize::MAX; 2]; n];
    for (i, v) in code.word.iter().enumerate() {
        let slot = &mut pos[v.label as usize - 1];
        if slot[0] == usize::MAX {
            slot[0] = i;
        } else {
            slot[1] = i;
        }
    }
    pos
}

/// Sphere-level site enumeration. `outer` restricts decreasing/R3 sites for
/// planar diagrams: the face a move collapses must stay bounded.
pub fn sites(
    code: &OrientedGaussCode,
    map: &DiagramMap,
    filter: SiteFilter,
    outer: Option<usize>,
) -> Vec<MoveSite> {
    let n = code.crossings();
    let mut out = Vec::new();
    let pos = word_positions(code);

    if filter.decreasing {
        // kinks: both visits adjacent in the word
        for (idx, p) in pos.iter().enumerate() {
            if p[1] == p[0] + 1 {
                // loop piece is the arc between the visits
                let loop_arc = p[0] + 1;
                let loop_face = (0..2).map(|dir| map.face_of[dart(loop_arc, dir)]).find(|&f| {
                    map.faces[f].len() == 1
                });
                if let Some(f) = loop_face {
                    if outer != Some(f) {
                        out.push(MoveSite::R1Remove { crossing: (idx + 1) as u16 });
                    }
                }
            }
        }
        // strand pairs: two adjacent pairs with the same two crossings, the
        // top strand over at both, opposite signs, bounding an empty bigon
        for i in 0..code.word.len().saturating_sub(1) {
            let (x, y) = (code.word[i], code.word[i + 1]);
            if x.label == y.label || x.passage != y.passage {
                continue;
            }
            // find the partner pair j with the same labels
            for j in i + 2..code.word.len().saturating_sub(1) {
                let (u, w) = (code.word[j], code.word[j + 1]);
                let same =
                    (u.label == x.label && w.label == y.label) || (u.label == y.label && w.label == x.label);
                if !same || u.passage != w.passage || u.passage == x.passage {
                    continue;
                }
                if code.signs[x.label as usize - 1] == code.signs[y.label as usize - 1] {
                    continue;
                }
                // middle pieces are arcs i+1 and j+1; they must bound a bigon
                let (a1, a2) = (i + 1, j + 1);
                let bigon = (0..2).map(|dir| map.face_of[dart(a1, dir)]).find(|&f| {
                    let fc = &map.faces[f];
                    fc.len() == 2 && fc.iter().any(|&d| d / 2 == a2)
                });
                if let Some(f) = bigon {
                    if outer != Some(f) {
                        out.push(MoveSite::R2Remove { first: i, second: j });
                    }
                }
            }
        }
    }

    if filter.r3 {
        for (f, cycle) in map.faces.iter().enumerate() {
            if cycle.len() != 3 || outer == Some(f) {
                continue;
            }
            let arcs: Vec<usize> = cycle.iter().map(|&d| d / 2).collect();
            if arcs.iter().any(|&a| a == 0 || a == 2 * n) {
                continue; // endpoint arcs never bound a triangle
            }
            let mut distinct = arcs.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != 3 {
                continue;
            }
            // the three corners must be distinct crossings
            let mut corners: Vec<usize> = cycle.iter().map(|&d| map.dart_head(d)).collect();
            corners.sort_unstable();
            corners.dedup();
            if corners.len() != 3 {
                continue;
            }
            // each triangle arc joins two of the corner crossings; the move
            // needs one strand over at both its corners and one under both
            let passage_pair = |arc: usize| -> (Passage, Passage) {
                (code.word[arc - 1].passage, code.word[arc].passage)
            };
            let mut has_top = false;
            let mut has_bottom = false;
            for &a in &arcs {
                let (p1, p2) = passage_pair(a);
                if p1 == Passage::Over && p2 == Passage::Over {
                    has_top = true;
                }
                if p1 == Passage::Under && p2 == Passage::Under {
                    has_bottom = true;
                }
            }
            if has_top && has_bottom {
                out.push(MoveSite::R3 {
                    arcs: [arcs[0] as u16, arcs[1] as u16, arcs[2] as u16],
                });
            }
        }
    }

    if let Some(cap) = filter.increasing_cap {
        if n < cap {
            for d in 0..(2 * n + 1) * 2 {
                for over_first in [false, true] {
                    out.push(MoveSite::R1Add { dart: d, over_first });
                }
            }
        }
        if n + 2 <= cap {
            for cycle in &map.faces {
                for &d1 in cycle {
                    for &d2 in cycle {
                        if d1 == d2 {
                            continue;
                        }
                        for mover_over in [false, true] {
                            out.push(MoveSite::R2Add { mover: d1, target: d2, mover_over });
                        }
                    }
                }
            }
        }
    }

    out
}

// Result of a word rewrite: the new (canonical) sphere code together with
// the positional arc maps needed to push outer-face darts through the move.
struct Rewrite {
    code: OrientedGaussCode,
    /// maps an old dart to its witness dart in the new code, or None when
    /// the dart cannot serve as a witness
    dart_map: Box<dyn Fn(usize) -> Option<usize>>,
}

fn or_of(d: usize) -> i64 {
    if d % 2 == 0 {
        1
    } else {
        -1
    }
}

fn rewrite(code: &OrientedGaussCode, site: MoveSite) -> Rewrite {
    let n = code.crossings();
    match site {
        MoveSite::R1Add { dart: d, over_first } => {
            let a = d / 2;
            let label = (n + 1) as u16;
            let mut word = code.word.clone();
            let (first, second) = if over_first {
                (Passage::Over, Passage::Under)
            } else {
                (Passage::Under, Passage::Over)
            };
            word.splice(a..a, [Visit::new(label, first), Visit::new(label, second)]);
            let mut signs = code.signs.clone();
            signs.push(if (or_of(d) == 1) == over_first { Sign::Minus } else { Sign::Plus });
            let code2 = OrientedGaussCode { word, signs }.canonicalize();
            Rewrite {
                code: code2,
                dart_map: Box::new(move |old| {
                    let (e, dir) = (old / 2, old % 2);
                    Some(if e <= a { dart(e, dir) } else { dart(e + 2, dir) })
                }),
            }
        }
        MoveSite::R2Add { mover, target, mover_over } => {
            let (am, at) = (mover / 2, target / 2);
            let la = (n + 1) as u16; // first crossing along the mover contact
            let lb = (n + 2) as u16;
            let mover_passage = if mover_over { Passage::Over } else { Passage::Under };
            let target_passage = mover_passage.flip();
            let mover_pair = [Visit::new(la, mover_passage), Visit::new(lb, mover_passage)];
            let same_order = or_of(mover) * or_of(target) == -1;
            let target_pair = if same_order {
                [Visit::new(la, target_passage), Visit::new(lb, target_passage)]
            } else {
                [Visit::new(lb, target_passage), Visit::new(la, target_passage)]
            };
            let mut word = code.word.clone();
            if am < at {
                word.splice(at..at, target_pair);
                word.splice(am..am, mover_pair);
            } else if at < am {
                word.splice(am..am, mover_pair);
                word.splice(at..at, target_pair);
            } else {
                // both contacts on one arc: the mover piece comes first
                word.splice(am..am, mover_pair.into_iter().chain(target_pair));
            }
            let sign_a = if (or_of(target) == 1) == mover_over { Sign::Plus } else { Sign::Minus };
            let mut signs = code.signs.clone();
            signs.push(sign_a);
            signs.push(sign_a.flip());
            let code2 = OrientedGaussCode { word, signs }.canonicalize();
            Rewrite {
                code: code2,
                dart_map: Box::new(move |old| {
                    let (e, dir) = (old / 2, old % 2);
                    let (lo, hi) = if am <= at { (am, at) } else { (at, am) };
                    let e2 = if e < lo {
                        e
                    } else if e == lo {
                        e // first piece of the lower arc
                    } else if e < hi {
                        e + 2
                    } else if e == hi {
                        e + 2 // first piece of the upper arc
                    } else {
                        e + 4
                    };
                    Some(dart(e2, dir))
                }),
            }
        }
        MoveSite::R1Remove { crossing } => {
            let pos = word_positions(code);
            let p = pos[crossing as usize - 1];
            debug_assert_eq!(p[1], p[0] + 1);
            let a = p[0]; // pieces a, a+1, a+2 merge into arc a
            let mut word = code.word.clone();
            word.drain(p[0]..=p[1]);
            let mut signs = code.signs.clone();
            signs.remove(crossing as usize - 1);
            let word = word
                .into_iter()
                .map(|v| {
                    let l = if v.label > crossing { v.label - 1 } else { v.label };
                    Visit::new(l, v.passage)
                })
                .collect();
            let code2 = OrientedGaussCode { word, signs }.canonicalize();
            Rewrite {
                code: code2,
                dart_map: Box::new(move |old| {
                    let (e, dir) = (old / 2, old % 2);
                    if e == a + 1 {
                        return None; // loop piece: direction is ambiguous
                    }
                    Some(if e <= a { dart(e, dir) } else { dart(e - 2, dir) })
                }),
            }
        }
        MoveSite::R2Remove { first, second } => {
            let (i, j) = (first, second);
            let (c1, c2) = (code.word[i].label, code.word[j].label);
            let mut word = code.word.clone();
            word.drain(j..=j + 1);
            word.drain(i..=i + 1);
            let mut signs = code.signs.clone();
            let (lo, hi) = if c1 < c2 { (c1, c2) } else { (c2, c1) };
            signs.remove(hi as usize - 1);
            signs.remove(lo as usize - 1);
            let word = word
                .into_iter()
                .map(|v| {
                    let mut l = v.label;
                    if l > hi {
                        l -= 1;
                    }
                    if l > lo {
                        l -= 1;
                    }
                    Visit::new(l, v.passage)
                })
                .collect();
            let code2 = OrientedGaussCode { word, signs }.canonicalize();
            Rewrite {
                code: code2,
                dart_map: Box::new(move |old| {
                    let (e, dir) = (old / 2, old % 2);
                    if e == i + 1 || e == j + 1 {
                        return None; // middle pieces retract with the finger
                    }
                    // pieces i, i+1, i+2 merge to arc i; j, j+1, j+2 to j-2
                    let e2 = if e <= i {
                        e
                    } else if e == i + 2 {
                        i
                    } else if e <= j {
                        e - 2
                    } else if e == j + 2 {
                        j - 2
                    } else {
                        e - 4
                    };
                    Some(dart(e2, dir))
                }),
            }
        }
        MoveSite::R3 { arcs } => {
            let mut word = code.word.clone();
            for &a in &arcs {
                word.swap(a as usize - 1, a as usize);
            }
            let code2 = OrientedGaussCode { word, signs: code.signs.clone() }.canonicalize();
            Rewrite {
                code: code2,
                dart_map: Box::new(move |old| {
                    let e = old / 2;
                    if arcs.iter().any(|&a| a as usize == e) {
                        None // triangle edges change sides
                    } else {
                        Some(old)
                    }
                }),
            }
        }
    }
}

/// Applies a move to a sphere diagram; the result is canonical.
pub fn apply_sphere(code: &OrientedGaussCode, site: MoveSite) -> OrientedGaussCode {
    let rw = rewrite(code, site);
    debug_assert!(
        crate::embed::is_realizable(&rw.code),
        "move output not realizable: {} via {:?} -> {}",
        code,
        site,
        rw.code
    );
    rw.code
}

/// Applies a move to a planar diagram. Crossing-increasing strand pushes
/// across the outer region have two outcomes (either side of the new finger
/// may keep the unbounded region); every other move has exactly one.
pub fn apply_planar(
    xcode: &ExtendedGaussCode,
    map: &DiagramMap,
    outer_face: usize,
    site: MoveSite,
) -> Vec<ExtendedGaussCode> {
    let rw = rewrite(&xcode.base, site);
    let new_map = match build_map(&rw.code) {
        Ok(m) => m,
        Err(e) => panic!("planar move output not realizable: {} via {:?}: {}", xcode, site, e),
    };

    if let MoveSite::R2Add { mover, target, .. } = site {
        if map.face_of[mover] == outer_face {
            // the finger divides the outer region: both sides are valid
            let (am, at) = (mover / 2, target / 2);
            let dir = mover % 2;
            let (piece1, piece2) = if am < at {
                (am, am + 2)
            } else if at < am {
                (am + 2, am + 4)
            } else {
                // single arc: mover pieces are am and am+2 before the target
                // pieces shift them no further
                (am, am + 2)
            };
            let f1 = new_map.face_of[dart(piece1, dir)];
            let f2 = new_map.face_of[dart(piece2, dir)];
            debug_assert_ne!(f1, f2);
            return [f1, f2]
                .iter()
                .map(|&f| ExtendedGaussCode {
                    base: rw.code.clone(),
                    outer: new_map.region_arc_set(f),
                })
                .collect();
        }
    }

    let mut face = None;
    for &d in &map.faces[outer_face] {
        if let Some(nd) = (rw.dart_map)(d) {
            let f = new_map.face_of[nd];
            match face {
                None => face = Some(f),
                Some(prev) => debug_assert_eq!(
                    prev, f,
                    "witness darts disagree: {} via {:?}",
                    xcode, site
                ),
            }
        }
    }
    let f = match face {
        Some(f) => f,
        None => panic!("outer face without witness dart: {} via {:?}", xcode, site),
    };
    vec![ExtendedGaussCode { base: rw.code, outer: new_map.region_arc_set(f) }]
}

/// Greedy reduction: repeatedly applies the crossing-decreasing or triangle
/// move whose (order-minimal) result is smallest, while that is smaller than
/// the current code.
pub fn reduce_sphere(code: &OrientedGaussCode) -> OrientedGaussCode {
    let mut cur = code.clone();
    loop {
        let map = match build_map(&cur) {
            Ok(m) => m,
            Err(_) => return cur,
        };
        let candidates = sites(&cur, &map, SiteFilter::non_increasing(), None);
        let mut best: Option<OrientedGaussCode> = None;
        for site in candidates {
            let out = apply_sphere(&cur, site);
            if out.compare(&cur) == std::cmp::Ordering::Less {
                best = match best {
                    None => Some(out),
                    Some(b) => Some(if out.compare(&b) == std::cmp::Ordering::Less {
                        out
                    } else {
                        b
                    }),
                };
            }
        }
        match best {
            Some(b) => cur = b,
            None => return cur,
        }
    }
}

/// Planar greedy reduction under the planar total order.
pub fn reduce_planar(xcode: &ExtendedGaussCode) -> ExtendedGaussCode {
    let mut cur = xcode.clone();
    loop {
        let (map, outer_face) = match crate::embed::build_planar_map(&cur) {
            Ok(x) => x,
            Err(_) => return cur,
        };
        let candidates = sites(&cur.base, &map, SiteFilter::non_increasing(), Some(outer_face));
        let mut best: Option<ExtendedGaussCode> = None;
        for site in candidates {
            for out in apply_planar(&cur, &map, outer_face, site) {
                if out.compare(&cur) == std::cmp::Ordering::Less {
                    best = match best {
                        None => Some(out),
                        Some(b) => Some(if out.compare(&b) == std::cmp::Ordering::Less {
                            out
                        } else {
                            b
                        }),
                    };
                }
            }
        }
        match best {
            Some(b) => cur = b,
            None => return cur,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::build_planar_map;
    use crate::gauss::{parse_planar, parse_sphere};
    use std::collections::BTreeSet;

    #[test]
    fn kink_has_one_remove_site() {
        let code = parse_sphere("1 -1  +").unwrap();
        let map = build_map(&code).unwrap();
        let s = sites(&code, &map, SiteFilter::non_increasing(), None);
        assert_eq!(s, vec![MoveSite::R1Remove { crossing: 1 }]);
        assert_eq!(apply_sphere(&code, s[0]), OrientedGaussCode::trivial());
    }

    #[test]
    fn r1_add_on_trivial_gives_all_one_crossing_codes() {
        let code = OrientedGaussCode::trivial();
        let map = build_map(&code).unwrap();
        let s = sites(&code, &map, SiteFilter::all(1), None);
        let outputs: BTreeSet<String> = s
            .iter()
            .filter(|s| matches!(s, MoveSite::R1Add { .. }))
            .map(|&site| apply_sphere(&code, site).to_string())
            .collect();
        let expected: BTreeSet<String> = ["1 -1  -", "1 -1  +", "-1 1  -", "-1 1  +"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(outputs, expected);
    }

    #[test]
    fn opposite_sign_bigon_is_removable() {
        // a strand pushed over another leaves it over at both crossings
        let code = parse_sphere("1 2 -1 -2  +-").unwrap();
        let map = build_map(&code).unwrap();
        let s = sites(&code, &map, SiteFilter::non_increasing(), None);
        let removes: Vec<_> = s
            .iter()
            .filter(|s| matches!(s, MoveSite::R2Remove { .. }))
            .collect();
        assert_eq!(removes.len(), 1);
        assert_eq!(apply_sphere(&code, *removes[0]), OrientedGaussCode::trivial());
    }

    #[test]
    fn mixed_passage_pair_is_a_clasp_not_a_bigon() {
        // over-then-under visits make a clasp; with opposite signs the code
        // does not even close up on the sphere
        let code = parse_sphere("1 -2 -1 2  +-").unwrap();
        assert!(build_map(&code).is_err());
    }

    #[test]
    fn same_sign_pair_not_removable() {
        let code = parse_sphere("1 -2 -1 2  ++").unwrap();
        let map = build_map(&code).unwrap();
        let s = sites(&code, &map, SiteFilter::non_increasing(), None);
        assert!(s.iter().all(|s| !matches!(s, MoveSite::R2Remove { .. })));
    }

    #[test]
    fn planar_kink_with_outer_in_loop_is_stuck() {
        // untwisting would sweep the strand through the unbounded region
        let code = parse_planar("1 -1  +  1").unwrap();
        let (map, outer) = build_planar_map(&code).unwrap();
        let s = sites(&code.base, &map, SiteFilter::non_increasing(), Some(outer));
        assert!(s.is_empty());
        assert_eq!(reduce_planar(&code), code);
    }

    #[test]
    fn planar_kink_outside_loop_reduces_to_trivial() {
        let code = parse_planar("1 -1  +  0 1 2").unwrap();
        assert_eq!(reduce_planar(&code), ExtendedGaussCode::trivial());
    }

    #[test]
    fn reduce_trivial_loop() {
        let code = parse_sphere("1 -1  +").unwrap();
        assert_eq!(reduce_sphere(&code), OrientedGaussCode::trivial());
    }
}
