//! Bounded-weight enumeration of normal multicurve vectors and of essential
//! curves, used by property sweeps and as an independent oracle for
//! determination queries.

use crate::coords;
use crate::curve::Curve;
use crate::surface::Triangulation;
use crate::trace;

/// All admissible weight vectors with total weight in `1..=max_total`.
///
/// Edges are assigned depth-first in an order that completes triangles as
/// early as possible; each completed triangle prunes by parity and corner
/// positivity.
pub fn enumerate_vectors(tri: &Triangulation, max_total: u32) -> Vec<Vec<u32>> {
    let ne = tri.edge_count();
    // Edge order: greedily pick the edge that completes the most triangles.
    let mut order: Vec<usize> = Vec::with_capacity(ne);
    let mut placed = vec![false; ne];
    while order.len() < ne {
        let best = (0..ne)
            .filter(|&e| !placed[e])
            .max_by_key(|&e| {
                (0..tri.triangle_count())
                    .filter(|&t| {
                        let es = tri.triangle_edges(t);
                        es.contains(&e) && es.iter().filter(|&&x| placed[x] || x == e).count() == 3
                    })
                    .count()
            })
            .unwrap();
        placed[best] = true;
        order.push(best);
    }
    // For each position, the triangles completed there.
    let mut completed_at: Vec<Vec<usize>> = vec![Vec::new(); ne];
    {
        let mut pos = vec![0usize; ne];
        for (i, &e) in order.iter().enumerate() {
            pos[e] = i;
        }
        for t in 0..tri.triangle_count() {
            let latest = tri.triangle_edges(t).iter().map(|&e| pos[e]).max().unwrap();
            completed_at[latest].push(t);
        }
    }
    let mut out = Vec::new();
    let mut w = vec![0u32; ne];
    fn dfs(
        tri: &Triangulation,
        order: &[usize],
        completed_at: &[Vec<usize>],
        w: &mut Vec<u32>,
        depth: usize,
        left: u32,
        out: &mut Vec<Vec<u32>>,
    ) {
        if depth == order.len() {
            if w.iter().any(|&x| x > 0) {
                out.push(w.clone());
            }
            return;
        }
        let e = order[depth];
        for v in 0..=left {
            w[e] = v;
            let ok = completed_at[depth].iter().all(|&t| {
                let es = tri.triangle_edges(t);
                let x = [w[es[0]] as i64, w[es[1]] as i64, w[es[2]] as i64];
                (x[0] + x[1] + x[2]) % 2 == 0
                    && x[0] <= x[1] + x[2]
                    && x[1] <= x[0] + x[2]
                    && x[2] <= x[0] + x[1]
            });
            if ok {
                dfs(tri, order, completed_at, w, depth + 1, left - v, out);
            }
        }
        w[e] = 0;
    }
    dfs(tri, &order, &completed_at, &mut w, 0, max_total, &mut out);
    out
}

/// All essential simple closed curves of total weight at most `max_total`.
pub fn enumerate_curves(tri: &Triangulation, max_total: u32) -> Vec<Curve> {
    enumerate_vectors(tri, max_total)
        .into_iter()
        .filter_map(|w| {
            if coords::vertex_link_puncture(tri, &w).is_some() {
                return None;
            }
            let comps = trace::trace(tri, &w).ok()?;
            if comps.len() != 1 {
                return None;
            }
            Curve::from_weights(tri, w).ok()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{build_base_triangulation, SurfaceSpec};

    #[test]
    fn small_enumeration_finds_outer_chain() {
        let tri = build_base_triangulation(SurfaceSpec::new(0, 5).unwrap()).unwrap();
        let curves = enumerate_curves(&tri, 8);
        // All five seam links have total weight <= 8 and must appear.
        for e in 0..tri.edge_count() {
            let (p, q) = tri.edge_endpoints(e);
            if p != q {
                let c = crate::curve::edge_link_curve(&tri, e).unwrap();
                if c.total_weight() <= 8 {
                    assert!(curves.contains(&c));
                }
            }
        }
    }

    #[test]
    fn enumerated_vectors_are_admissible() {
        let tri = build_base_triangulation(SurfaceSpec::new(1, 3).unwrap()).unwrap();
        for w in enumerate_vectors(&tri, 6) {
            coords::validate(&tri, &w).unwrap();
        }
    }
}
