//! Tracing normal multicurves into corridor words, and reducing arbitrary
//! transversal loop words to normal position.
//!
//! A corridor word records a closed transversal loop as the cyclic sequence
//! of side slots it exits through; consecutive steps are joined by an arc
//! inside the triangle between them. A word with no immediate same-slot
//! return is bigon-free against every edge, so its per-edge crossing counts
//! are the normal coordinates of its free homotopy class.

use crate::coords;
use crate::error::CurveError;
use crate::surface::{Corner, SideSlot, Triangulation};

/// One crossing of the 1-skeleton: the loop leaves through `slot` at
/// `pos` (0-based, counted along the directed side of `slot`'s triangle).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub slot: SideSlot,
    pub pos: u32,
}

/// A traced component: cyclic sequence of crossings in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub steps: Vec<Step>,
}

impl Component {
    /// The corner cut inside the triangle entered after step `i`.
    ///
    /// Entering through the glued image of `steps[i]` and leaving through
    /// `steps[i+1]` cuts the corner shared by those two sides.
    pub fn corner_after(&self, tri: &Triangulation, i: usize) -> Corner {
        let entry = tri.glue(self.steps[i].slot);
        let exit = self.steps[(i + 1) % self.steps.len()].slot;
        debug_assert_eq!(entry.triangle(), exit.triangle());
        shared_corner(entry, exit)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The corridor word: side slots only, dropping positions.
    pub fn word(&self) -> Vec<SideSlot> {
        self.steps.iter().map(|s| s.slot).collect()
    }
}

/// The corner shared by two distinct sides of one triangle.
pub fn shared_corner(a: SideSlot, b: SideSlot) -> Corner {
    debug_assert_eq!(a.triangle(), b.triangle());
    debug_assert_ne!(a.side(), b.side());
    let (u, v) = (a.side(), b.side());
    let corner = if v == (u + 1) % 3 { v } else { u };
    Corner { triangle: a.triangle(), corner }
}

/// Traces an admissible weight vector into its components.
///
/// Crossing points on a side slot are numbered along the directed side; the
/// point at position `p` of a slot is the point at position `w-1-p` of the
/// glued slot. Inside a triangle, arcs cutting corner `j` occupy the
/// positions nearest that corner, nested.
pub fn trace(tri: &Triangulation, weights: &[u32]) -> Result<Vec<Component>, CurveError> {
    coords::validate(tri, weights)?;
    let w_of = |s: SideSlot| weights[tri.edge_of(s)];
    // Arc through triangle: entry (slot, pos) -> exit (slot, pos).
    let arc_exit = |s: SideSlot, p: u32| -> (SideSlot, u32) {
        let t = s.triangle();
        let k = s.side();
        let c_here = coords::corner_count(tri, weights, t, k);
        if p < c_here {
            // Cuts corner k: partner side is (k+2)%3, at depth p from its far end.
            let other = SideSlot::new(t, (k + 2) % 3);
            (other, w_of(other) - 1 - p)
        } else {
            // Cuts corner k+1: depth m counted from the corner-(k+1) end.
            let m = w_of(s) - 1 - p;
            let other = SideSlot::new(t, (k + 1) % 3);
            (other, m)
        }
    };
    let mut visited = std::collections::HashSet::new();
    let mut components = Vec::new();
    for e in 0..tri.edge_count() {
        let (canon, _) = tri.slots_of_edge(e);
        for p0 in 0..weights[e] {
            if visited.contains(&(e, p0)) {
                continue;
            }
            // Start by entering the triangle on the far side of `canon`:
            // the loop is about to exit through `canon` at p0.
            let mut steps = Vec::new();
            let (mut s, mut p) = (canon, p0);
            loop {
                let key = (tri.edge_of(s), if s <= tri.glue(s) { p } else { w_of(s) - 1 - p });
                if visited.contains(&key) {
                    break;
                }
                visited.insert(key);
                steps.push(Step { slot: s, pos: p });
                // Cross the edge, then run through the next triangle.
                let entry = tri.glue(s);
                let entry_pos = w_of(s) - 1 - p;
                let (exit, exit_pos) = arc_exit(entry, entry_pos);
                s = exit;
                p = exit_pos;
            }
            components.push(Component { steps });
        }
    }
    Ok(components)
}

/// Reduces a transversal loop word by cancelling immediate same-slot returns,
/// cyclically, and returns the normal coordinates of the loop's class.
///
/// An empty result means the loop was null-homotopic.
pub fn reduce_word(tri: &Triangulation, word: &[SideSlot]) -> Vec<SideSlot> {
    let mut cur: Vec<SideSlot> = word.to_vec();
    loop {
        // Linear pass with a stack.
        let mut stack: Vec<SideSlot> = Vec::with_capacity(cur.len());
        for &s in &cur {
            if let Some(&top) = stack.last() {
                if tri.glue(top) == s {
                    stack.pop();
                    continue;
                }
            }
            stack.push(s);
        }
        // Cyclic boundary: cancel across the wrap point.
        let mut changed = false;
        while stack.len() >= 2 {
            let first = stack[0];
            let last = *stack.last().unwrap();
            if tri.glue(last) == first {
                stack.pop();
                stack.remove(0);
                changed = true;
            } else {
                break;
            }
        }
        let done = !changed && stack.len() == cur.len();
        cur = stack;
        if done || cur.is_empty() {
            return cur;
        }
    }
}

/// Per-edge crossing counts of a word.
pub fn word_weights(tri: &Triangulation, word: &[SideSlot]) -> Vec<u32> {
    let mut w = vec![0u32; tri.edge_count()];
    for &s in word {
        w[tri.edge_of(s)] += 1;
    }
    w
}

/// Validates that consecutive steps of a word share the in-between triangle.
pub fn word_is_connected(tri: &Triangulation, word: &[SideSlot]) -> bool {
    if word.is_empty() {
        return true;
    }
    (0..word.len()).all(|i| {
        let next = word[(i + 1) % word.len()];
        tri.glue(word[i]).triangle() == next.triangle()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{build_base_triangulation, SurfaceSpec};

    fn tri(g: u32, n: u32) -> Triangulation {
        build_base_triangulation(SurfaceSpec::new(g, n).unwrap()).unwrap()
    }

    #[test]
    fn empty_weights_trace_to_no_components() {
        let t = tri(0, 5);
        assert!(trace(&t, &vec![0; t.edge_count()]).unwrap().is_empty());
    }

    #[test]
    fn vertex_link_traces_to_one_component() {
        for (g, n) in [(0, 5), (1, 3), (2, 1), (2, 3)] {
            let t = tri(g, n);
            for p in 0..n as usize {
                let w = t.vertex_link_weights(p);
                let comps = trace(&t, &w).unwrap();
                assert_eq!(comps.len(), 1, "link of puncture {p} on ({g},{n})");
                assert_eq!(comps[0].len() as u32, w.iter().sum::<u32>());
                // Every step of the link cuts a corner at the same puncture.
                for i in 0..comps[0].len() {
                    let c = comps[0].corner_after(&t, i);
                    assert_eq!(t.puncture_of(c), p);
                }
            }
        }
    }

    #[test]
    fn disjoint_sum_traces_to_two_components() {
        let t = tri(0, 5);
        let sum: Vec<u32> = t
            .vertex_link_weights(0)
            .iter()
            .zip(t.vertex_link_weights(2))
            .map(|(a, b)| a + b)
            .collect();
        assert_eq!(trace(&t, &sum).unwrap().len(), 2);
    }

    #[test]
    fn trace_covers_all_crossings() {
        let t = tri(1, 3);
        let w: Vec<u32> = t
            .vertex_link_weights(0)
            .iter()
            .zip(t.vertex_link_weights(1))
            .map(|(a, b)| a + b)
            .collect();
        let comps = trace(&t, &w).unwrap();
        let total: usize = comps.iter().map(|c| c.len()).sum();
        assert_eq!(total as u32, w.iter().sum::<u32>());
    }

    #[test]
    fn traced_word_round_trips_through_reduction() {
        let t = tri(1, 3);
        for p in 0..3 {
            let w = t.vertex_link_weights(p);
            let comp = &trace(&t, &w).unwrap()[0];
            let word = comp.word();
            assert!(word_is_connected(&t, &word));
            let reduced = reduce_word(&t, &word);
            assert_eq!(reduced.len(), word.len(), "link word is already reduced");
            assert_eq!(word_weights(&t, &reduced), w);
        }
    }

    #[test]
    fn backtracks_cancel() {
        let t = tri(0, 5);
        let w = t.vertex_link_weights(1);
        let comp = &trace(&t, &w).unwrap()[0];
        let mut word = comp.word();
        // Insert an immediate backtrack: exit and re-enter through one edge.
        let s = word[0];
        word.insert(1, t.glue(s));
        word.insert(2, s);
        let reduced = reduce_word(&t, &word);
        assert_eq!(reduced.len(), comp.len());
        assert_eq!(word_weights(&t, &reduced), w);
    }
}
