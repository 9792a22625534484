//! Exact rational plane geometry for in-triangle strand arrangements.
//!
//! Every triangle is drawn in the model frame with corners `(0,0), (1,0),
//! (0,1)` (counterclockwise, matching the abstract orientation), strand
//! endpoints at rational parameters along the sides, and strands as straight
//! segments. All predicates are exact; no floating point.

use num::rational::Ratio;
use num::{One, Signed, Zero};

pub type Q = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pt {
    pub x: Q,
    pub y: Q,
}

impl Pt {
    pub fn new(x: Q, y: Q) -> Self {
        Pt { x, y }
    }
    pub fn sub(&self, o: &Pt) -> Pt {
        Pt::new(self.x - o.x, self.y - o.y)
    }
}

pub fn q(n: i128, d: i128) -> Q {
    Ratio::new(n, d)
}

/// Sign of the cross product `(b-a) x (c-a)`.
pub fn orient(a: &Pt, b: &Pt, c: &Pt) -> i8 {
    let v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    sign(&v)
}

pub fn cross(u: &Pt, v: &Pt) -> Q {
    u.x * v.y - u.y * v.x
}

pub fn sign(v: &Q) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Model-frame corner positions.
pub fn corner_pt(k: usize) -> Pt {
    match k {
        0 => Pt::new(Q::zero(), Q::zero()),
        1 => Pt::new(Q::one(), Q::zero()),
        _ => Pt::new(Q::zero(), Q::one()),
    }
}

/// Point at parameter `u` in `(0,1)` along directed side `k`.
pub fn side_pt(k: usize, u: Q) -> Pt {
    match k {
        0 => Pt::new(u, Q::zero()),
        1 => Pt::new(Q::one() - u, u),
        _ => Pt::new(Q::zero(), Q::one() - u),
    }
}

/// Proper interior intersection of segments `ab` and `cd`.
///
/// Returns `Err(())` on any degeneracy (touching endpoints, collinear
/// overlap), which callers resolve by re-jittering boundary parameters.
pub fn segment_intersection(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> Result<Option<Pt>, ()> {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0 {
        // A shared endpoint between distinct strand segments or a collinear
        // configuration: treat as degenerate unless clearly disjoint.
        let strictly_apart = (o1 != 0 && o1 == o2) || (o3 != 0 && o3 == o4);
        if strictly_apart {
            return Ok(None);
        }
        return Err(());
    }
    if o1 != o2 && o3 != o4 {
        let r = b.sub(a);
        let s = d.sub(c);
        let denom = cross(&r, &s);
        debug_assert!(!denom.is_zero());
        let t = cross(&c.sub(a), &s) / denom;
        return Ok(Some(Pt::new(a.x + t * r.x, a.y + t * r.y)));
    }
    Ok(None)
}

/// Total order on directions by counterclockwise angle from the positive
/// `x`-axis; used to sort darts around a vertex.
pub fn compare_directions(u: &Pt, v: &Pt) -> std::cmp::Ordering {
    let half = |p: &Pt| -> u8 {
        // 0: angle in [0, pi), 1: in [pi, 2pi).
        if sign(&p.y) > 0 || (sign(&p.y) == 0 && sign(&p.x) > 0) {
            0
        } else {
            1
        }
    };
    let (hu, hv) = (half(u), half(v));
    if hu != hv {
        return hu.cmp(&hv);
    }
    // Same half-plane: CCW order by cross product.
    match sign(&cross(u, v)) {
        1 => std::cmp::Ordering::Less,
        -1 => std::cmp::Ordering::Greater,
        _ => std::cmp::Ordering::Equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_segments_intersect() {
        let p = segment_intersection(
            &Pt::new(q(0, 1), q(0, 1)),
            &Pt::new(q(1, 1), q(1, 1)),
            &Pt::new(q(0, 1), q(1, 1)),
            &Pt::new(q(1, 1), q(0, 1)),
        )
        .unwrap()
        .unwrap();
        assert_eq!(p, Pt::new(q(1, 2), q(1, 2)));
    }

    #[test]
    fn touching_endpoint_is_degenerate() {
        let r = segment_intersection(
            &Pt::new(q(0, 1), q(0, 1)),
            &Pt::new(q(1, 1), q(0, 1)),
            &Pt::new(q(1, 1), q(0, 1)),
            &Pt::new(q(1, 1), q(1, 1)),
        );
        assert!(r.is_err());
    }

    #[test]
    fn direction_order_is_ccw() {
        let dirs = [
            Pt::new(q(1, 1), q(0, 1)),
            Pt::new(q(1, 1), q(1, 1)),
            Pt::new(q(0, 1), q(1, 1)),
            Pt::new(q(-1, 1), q(1, 1)),
            Pt::new(q(-1, 1), q(0, 1)),
            Pt::new(q(0, 1), q(-1, 1)),
        ];
        for w in dirs.windows(2) {
            assert_eq!(compare_directions(&w[0], &w[1]), std::cmp::Ordering::Less);
        }
    }
}
