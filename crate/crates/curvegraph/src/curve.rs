//! Essential simple closed curves in canonical form.
//!
//! A [`Curve`] owns the normal coordinates of an essential curve with
//! respect to the fixed base triangulation; two curves are equal iff their
//! coordinate vectors are equal. Classification (non-separating / outer /
//! separating non-outer) is derived from the complement decomposition and
//! cached.

use std::sync::OnceLock;

use serde::Serialize;

use crate::coords;
use crate::error::CurveError;
use crate::overlay::{Circuit, Overlay};
use crate::surface::{SideSlot, Triangulation};
use crate::trace;

/// Topological type of an essential curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TopType {
    Nonseparating,
    /// Separating with a 3-holed-sphere side: the two enclosed punctures.
    Outer { enclosed: [usize; 2] },
    /// Separating, neither side a pair of pants with two punctures.
    SeparatingNonOuter { sides: [SideData; 2] },
}

/// One side of a separating curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideData {
    pub genus: u32,
    pub punctures: Vec<usize>,
}

#[derive(Debug)]
pub struct Curve {
    weights: Vec<u32>,
    toptype: OnceLock<TopType>,
}

impl Clone for Curve {
    fn clone(&self) -> Self {
        let cell = OnceLock::new();
        if let Some(t) = self.toptype.get() {
            let _ = cell.set(t.clone());
        }
        Curve { weights: self.weights.clone(), toptype: cell }
    }
}

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        self.weights == other.weights
    }
}
impl Eq for Curve {}

impl PartialOrd for Curve {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Curve {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weights.cmp(&other.weights)
    }
}

impl std::hash::Hash for Curve {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.weights.hash(state);
    }
}

impl Curve {
    /// Accepts admissible coordinates tracing to a single essential curve.
    pub fn from_weights(tri: &Triangulation, weights: Vec<u32>) -> Result<Self, CurveError> {
        if coords::is_zero(&weights) {
            return Err(CurveError::Empty);
        }
        let comps = trace::trace(tri, &weights)?;
        if comps.len() != 1 {
            return Err(CurveError::NotASingleCurve { components: comps.len() });
        }
        if coords::vertex_link_puncture(tri, &weights).is_some() {
            return Err(CurveError::NotEssential("bounds a once-punctured disk"));
        }
        Ok(Curve { weights, toptype: OnceLock::new() })
    }

    /// Canonicalizes a transversal loop word: reduces it, rejects loops that
    /// are null-homotopic or puncture-parallel, and verifies that the result
    /// is a single embedded curve.
    pub fn from_word(tri: &Triangulation, word: &[SideSlot]) -> Result<Self, CurveError> {
        debug_assert!(trace::word_is_connected(tri, word), "inconsistent corridor word");
        let reduced = trace::reduce_word(tri, word);
        if reduced.is_empty() {
            return Err(CurveError::Empty);
        }
        let weights = trace::word_weights(tri, &reduced);
        if coords::vertex_link_puncture(tri, &weights).is_some() {
            return Err(CurveError::NotEssential("bounds a once-punctured disk"));
        }
        let comps = trace::trace(tri, &weights)?;
        if comps.len() != 1 || comps[0].len() != reduced.len() {
            // The word did not describe an embedded curve.
            return Err(CurveError::NotASingleCurve { components: comps.len() });
        }
        Ok(Curve { weights, toptype: OnceLock::new() })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().map(|&w| w as u64).sum()
    }

    /// Classification from the complement of the curve.
    pub fn top_type(&self, tri: &Triangulation) -> &TopType {
        self.toptype.get_or_init(|| classify(tri, &self.weights))
    }

    pub fn is_outer(&self, tri: &Triangulation) -> bool {
        matches!(self.top_type(tri), TopType::Outer { .. })
    }

    pub fn is_nonseparating(&self, tri: &Triangulation) -> bool {
        matches!(self.top_type(tri), TopType::Nonseparating)
    }

    pub fn to_json(&self, tri: &Triangulation, label: Option<&str>) -> serde_json::Value {
        let spec = tri.spec();
        let mut v = serde_json::json!({
            "surface": [spec.genus, spec.punctures],
            "weights": self.weights,
        });
        if let Some(l) = label {
            v["label"] = serde_json::Value::String(l.to_string());
        }
        v
    }
}

fn classify(tri: &Triangulation, weights: &[u32]) -> TopType {
    let ov = Overlay::new(tri, &[weights]).expect("curve invariants hold");
    let pieces = ov.pieces();
    match pieces.len() {
        1 => TopType::Nonseparating,
        2 => {
            let outer_side = pieces
                .iter()
                .find(|p| p.genus == 0 && p.boundary_count() == 1 && p.puncture_count() == 2);
            if let Some(p) = outer_side {
                TopType::Outer { enclosed: [p.punctures[0], p.punctures[1]] }
            } else {
                let mut sides: Vec<SideData> = pieces
                    .iter()
                    .map(|p| SideData { genus: p.genus, punctures: p.punctures.clone() })
                    .collect();
                sides.sort_by(|a, b| a.punctures.cmp(&b.punctures).then(a.genus.cmp(&b.genus)));
                TopType::SeparatingNonOuter { sides: [sides[0].clone(), sides[1].clone()] }
            }
        }
        n => unreachable!("complement of one curve has {n} pieces"),
    }
}

/// Geometric intersection number via the reduced overlay.
pub fn intersection_number(tri: &Triangulation, a: &Curve, b: &Curve) -> u64 {
    if a == b {
        return 0;
    }
    let mut ov = Overlay::new(tri, &[a.weights(), b.weights()]).expect("curve invariants hold");
    ov.reduce();
    ov.crossings(0, 1) as u64
}

/// Disjoint in the curve-graph sense: zero intersection and distinct.
pub fn is_disjoint(tri: &Triangulation, a: &Curve, b: &Curve) -> bool {
    a != b && intersection_number(tri, a, b) == 0
}

/// What a piece-boundary pushoff is, as a curve of the ambient surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PushoffClass {
    Null,
    PunctureLink(usize),
    Essential(Curve),
}

/// Reduces a circuit's parallel pushoff to a curve of the surface.
pub fn classify_pushoff(tri: &Triangulation, circuit: &Circuit) -> PushoffClass {
    assert!(!circuit.open, "open circuits have no pushoff curve");
    let word = circuit.pushoff_word();
    let reduced = trace::reduce_word(tri, &word);
    if reduced.is_empty() {
        return PushoffClass::Null;
    }
    let weights = trace::word_weights(tri, &reduced);
    if let Some(p) = coords::vertex_link_puncture(tri, &weights) {
        return PushoffClass::PunctureLink(p);
    }
    let curve = Curve::from_weights(tri, weights).expect("pushoff of a circuit is embedded");
    PushoffClass::Essential(curve)
}

/// The outer curve bounding the two (distinct) endpoint punctures of an
/// edge of the triangulation: the boundary of a neighbourhood of the edge.
pub fn edge_link_curve(tri: &Triangulation, edge: usize) -> Result<Curve, CurveError> {
    let (p, q) = tri.edge_endpoints(edge);
    if p == q {
        return Err(CurveError::NotEssential("edge is a loop, its link is not an outer curve"));
    }
    let w: Vec<u32> = (0..tri.edge_count())
        .map(|e| {
            let ends = (tri.edge_ends_at(e, p) + tri.edge_ends_at(e, q)) as u32;
            if e == edge {
                ends - 2
            } else {
                ends
            }
        })
        .collect();
    Curve::from_weights(tri, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{build_base_triangulation, SurfaceSpec};

    fn tri(g: u32, n: u32) -> Triangulation {
        build_base_triangulation(SurfaceSpec::new(g, n).unwrap()).unwrap()
    }

    /// Seam edge joining punctures i and i+1 on the genus-0 base complex.
    fn seam(t: &Triangulation, i: usize) -> usize {
        let n = t.spec().punctures as usize;
        (0..t.edge_count())
            .find(|&e| {
                let (p, q) = t.edge_endpoints(e);
                (p, q) == (i, (i + 1) % n) || (q, p) == (i, (i + 1) % n)
            })
            .unwrap()
    }

    #[test]
    fn vertex_link_is_rejected() {
        let t = tri(0, 5);
        let w = t.vertex_link_weights(0);
        assert!(matches!(Curve::from_weights(&t, w), Err(CurveError::NotEssential(_))));
    }

    #[test]
    fn seam_links_are_outer() {
        let t = tri(0, 5);
        for i in 0..5 {
            let c = edge_link_curve(&t, seam(&t, i)).unwrap();
            match c.top_type(&t) {
                TopType::Outer { enclosed } => {
                    let mut e = *enclosed;
                    e.sort();
                    let mut want = [i, (i + 1) % 5];
                    want.sort();
                    assert_eq!(e, want);
                }
                other => panic!("expected outer, got {other:?}"),
            }
        }
    }

    #[test]
    fn outer_chain_intersections_on_sphere() {
        // Consecutive outer curves around {i,i+1} and {i+1,i+2} meet twice;
        // non-consecutive ones are disjoint.
        let t = tri(0, 5);
        let alphas: Vec<Curve> =
            (0..5).map(|i| edge_link_curve(&t, seam(&t, i)).unwrap()).collect();
        for i in 0..5 {
            for j in (i + 1)..5 {
                let d = (j - i).min(5 - (j - i));
                let want = if d == 1 { 2 } else { 0 };
                assert_eq!(
                    intersection_number(&t, &alphas[i], &alphas[j]),
                    want,
                    "i({i},{j})"
                );
                assert_eq!(
                    intersection_number(&t, &alphas[j], &alphas[i]),
                    want,
                    "symmetry {i},{j}"
                );
            }
        }
    }

    #[test]
    fn self_intersection_is_zero() {
        let t = tri(0, 5);
        let a = edge_link_curve(&t, seam(&t, 0)).unwrap();
        assert_eq!(intersection_number(&t, &a, &a), 0);
        assert!(!is_disjoint(&t, &a, &a));
    }

    #[test]
    fn outer_complement_pieces_on_s05() {
        let t = tri(0, 5);
        let a = edge_link_curve(&t, seam(&t, 0)).unwrap();
        let ov = Overlay::new(&t, &[a.weights()]).unwrap();
        let mut sig: Vec<(u32, usize, usize)> = ov
            .pieces()
            .iter()
            .map(|p| (p.genus, p.boundary_count(), p.puncture_count()))
            .collect();
        sig.sort();
        assert_eq!(sig, vec![(0, 1, 2), (0, 1, 3)]);
    }

    #[test]
    fn pushoffs_of_outer_complement_give_back_the_curve() {
        let t = tri(0, 5);
        let a = edge_link_curve(&t, seam(&t, 1)).unwrap();
        let ov = Overlay::new(&t, &[a.weights()]).unwrap();
        for piece in ov.pieces() {
            for circ in &piece.circuits {
                match classify_pushoff(&t, circ) {
                    PushoffClass::Essential(c) => assert_eq!(c, a),
                    other => panic!("outer pushoff should be essential, got {other:?}"),
                }
            }
        }
    }

    #[test]
    fn flip_transfer_preserves_component_count() {
        let t = tri(0, 5);
        let a = edge_link_curve(&t, seam(&t, 0)).unwrap();
        for e in 0..t.edge_count() {
            if !t.is_flippable(e) {
                continue;
            }
            let (t2, f) = t.flip(e).unwrap();
            let w2 = f.apply(a.weights());
            let comps = trace::trace(&t2, &w2).unwrap();
            assert_eq!(comps.len(), 1, "flip {e}");
        }
    }
}
