//! The arrow polynomial of a knotoid in the sphere and the loop arrow
//! polynomial of a planar knotoid.
//!
//! Both are writhe-normalized oriented state sums. Each state contributes
//! `A^±…` from the smoothing choices times one factor per component:
//!
//! * plain circle: the loop value δ = −A² − A⁻²,
//! * plain circle winding around the long segment (planar only): `v`,
//! * segment with 2k surviving cusps: `m_k` or (planar) `w_k` by zigzag type,
//! * circle with 2k cusps around the segment: `p_k` or `q_k` by zigzag type,
//! * other circles with 2k cusps: `m_k`.

use crate::embed::{build_map, build_planar_map};
use crate::error::{InvariantError, NotRealizable};
use crate::gauss::{ExtendedGaussCode, OrientedGaussCode};
use crate::poly::{Fam, Monomial, MultiPoly};
use crate::state::{CuspDir, CuspSide, SmoothedState, StateBuilder, StateComponent};

/// How the two zigzag types are told apart. The assignment is pinned by the
/// tabulated polynomial values; see the tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Typing {
    /// Type the segment train by the side of its first surviving cusp
    /// (tail to head); otherwise by which side carries the sinks.
    pub segment_by_first_side: bool,
    /// Segment train types to `m` when the bit is Left.
    pub segment_m_on_left: bool,
    /// Enclosing circles type to `p` when their sinks open towards the
    /// segment side.
    pub circle_p_sink_inside: bool,
}

pub const TYPING: Typing = Typing {
    segment_by_first_side: true,
    segment_m_on_left: true,
    circle_p_sink_inside: true,
};

fn segment_family(comp: &StateComponent, typing: Typing) -> Fam {
    let first = &comp.cusps[0];
    let bit = if typing.segment_by_first_side {
        first.side == CuspSide::Left
    } else {
        (first.dir == CuspDir::Sink) == (first.side == CuspSide::Left)
    };
    if bit == typing.segment_m_on_left {
        Fam::M
    } else {
        Fam::W
    }
}

fn enclosing_family(comp: &StateComponent, left_is_outer: bool, typing: Typing) -> Fam {
    let first = &comp.cusps[0];
    let opens_inside = (first.side == CuspSide::Left) != left_is_outer;
    let sink_inside = (first.dir == CuspDir::Sink) == opens_inside;
    if sink_inside == typing.circle_p_sink_inside {
        Fam::P
    } else {
        Fam::Q
    }
}

fn state_value_sphere(st: &SmoothedState) -> MultiPoly {
    let mut mono = Monomial::a_power(st.a_weight);
    let mut plain_circles = 0u32;
    for (i, comp) in st.components.iter().enumerate() {
        let k = comp.zigzags();
        if i == 0 {
            if k > 0 {
                mono = mono.checked_mul_var(Fam::M, k as u16);
            }
        } else if k == 0 {
            plain_circles += 1;
        } else {
            mono = mono.checked_mul_var(Fam::M, k as u16);
        }
    }
    MultiPoly::term(mono, 1).mul(&MultiPoly::delta().pow(plain_circles))
}

fn state_value_planar(st: &SmoothedState, typing: Typing) -> MultiPoly {
    let mut mono = Monomial::a_power(st.a_weight);
    let mut plain_circles = 0u32;
    for (i, comp) in st.components.iter().enumerate() {
        let k = comp.zigzags();
        if i == 0 {
            if k > 0 {
                mono = mono.checked_mul_var(segment_family(comp, typing), k as u16);
            }
            continue;
        }
        let encloses = st.encloses_segment[i - 1];
        if k == 0 {
            if encloses {
                mono.v += 1;
            } else {
                plain_circles += 1;
            }
        } else if encloses {
            let fam = enclosing_family(comp, st.left_is_outer_side[i - 1], typing);
            mono = mono.checked_mul_var(fam, k as u16);
        } else {
            mono = mono.checked_mul_var(Fam::M, k as u16);
        }
    }
    MultiPoly::term(mono, 1).mul(&MultiPoly::delta().pow(plain_circles))
}

impl Monomial {
    fn checked_mul_var(mut self, fam: Fam, index: u16) -> Self {
        for entry in self.ix.iter_mut() {
            if entry.0 == (fam, index) {
                entry.1 += 1;
                return self;
            }
        }
        self.ix.push(((fam, index), 1));
        self.ix.sort();
        self
    }
}

/// Arrow polynomial of a knotoid in the sphere.
pub fn arrow_polynomial(code: &OrientedGaussCode) -> Result<MultiPoly, NotRealizable> {
    let map = build_map(code)?;
    let builder = StateBuilder::new(&map, &code.signs);
    let n = code.crossings();
    let mut total = MultiPoly::zero();
    for choice in 0..(1u64 << n) {
        let st = builder.expand(choice, None);
        total.add_assign(&state_value_sphere(&st));
    }
    Ok(total.writhe_normalize(-code.writhe()))
}

/// Loop arrow polynomial of a planar knotoid, with an explicit typing
/// (exposed for the calibration tests).
pub fn loop_arrow_polynomial_with(
    code: &ExtendedGaussCode,
    typing: Typing,
) -> Result<MultiPoly, InvariantError> {
    let (map, outer) = build_planar_map(code)?;
    let builder = StateBuilder::new(&map, &code.base.signs);
    let n = code.crossings();
    let mut total = MultiPoly::zero();
    for choice in 0..(1u64 << n) {
        let st = builder.expand(choice, Some(outer));
        total.add_assign(&state_value_planar(&st, typing));
    }
    Ok(total.writhe_normalize(-code.writhe()))
}

/// Loop arrow polynomial of a planar knotoid.
pub fn loop_arrow_polynomial(code: &ExtendedGaussCode) -> Result<MultiPoly, InvariantError> {
    loop_arrow_polynomial_with(code, TYPING)
}

/// Forgets the planar structure: v ↦ δ, w ↦ m, p ↦ m, q ↦ m. Specializing
/// the loop arrow this way recovers the arrow polynomial of the underlying
/// sphere code.
pub fn forget_planar(p: &MultiPoly) -> MultiPoly {
    p.map_vars(|_, k| (Fam::M, k)).substitute_v_delta()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::{parse_planar, parse_sphere};

    #[test]
    fn trivial_knotoid_arrow_is_one() {
        let code = parse_sphere("").unwrap();
        assert_eq!(arrow_polynomial(&code).unwrap().render(), "1");
    }

    #[test]
    fn kink_arrow_is_one() {
        for text in ["1 -1  +", "1 -1  -", "-1 1  +", "-1 1  -"] {
            let code = parse_sphere(text).unwrap();
            assert_eq!(arrow_polynomial(&code).unwrap().render(), "1", "kink {text}");
        }
    }

    #[test]
    fn trivial_loop_arrow_is_one() {
        let code = ExtendedGaussCode::trivial();
        assert_eq!(loop_arrow_polynomial(&code).unwrap().render(), "1");
    }

    #[test]
    fn state_count_is_two_to_n() {
        // indirectly: the unnormalized sum of |coefficients| over a zero-writhe
        // 2-crossing code stays small and fig7's polynomial is computable
        let code = parse_planar("1 -2 -1 2  ++  1 3").unwrap();
        let p = loop_arrow_polynomial(&code).unwrap();
        assert!(!p.is_zero());
    }

    #[test]
    fn forgetting_fig7() {
        let code = parse_planar("1 -2 -1 2  ++  1 3").unwrap();
        let lp = loop_arrow_polynomial(&code).unwrap();
        let ap = arrow_polynomial(&code.base).unwrap();
        assert_eq!(forget_planar(&lp).render(), ap.render());
    }
}
