//! Normal coordinates: per-edge crossing counts of a multicurve with respect
//! to the fixed triangulation, and their admissibility constraints.

use crate::error::CurveError;
use crate::surface::Triangulation;

/// Checks length, parity and corner positivity of a weight vector.
///
/// In a triangle with side weights `(x0,x1,x2)` the number of arcs cutting
/// corner `j` is `(x_j + x_{j+2} - x_{j+1}) / 2`; all three must be
/// non-negative integers.
pub fn validate(tri: &Triangulation, weights: &[u32]) -> Result<(), CurveError> {
    if weights.len() != tri.edge_count() {
        return Err(CurveError::WrongLength { got: weights.len(), expected: tri.edge_count() });
    }
    for t in 0..tri.triangle_count() {
        let e = tri.triangle_edges(t);
        let x = [weights[e[0]], weights[e[1]], weights[e[2]]];
        if (x[0] + x[1] + x[2]) % 2 != 0 {
            return Err(CurveError::BadTriangle { triangle: t, weights: x, reason: "odd side sum" });
        }
        for j in 0..3 {
            if (x[j] as i64 + x[(j + 2) % 3] as i64 - x[(j + 1) % 3] as i64) < 0 {
                return Err(CurveError::BadTriangle {
                    triangle: t,
                    weights: x,
                    reason: "negative corner count",
                });
            }
        }
    }
    Ok(())
}

/// Number of arcs cutting corner `j` of triangle `t`.
pub fn corner_count(tri: &Triangulation, weights: &[u32], t: usize, j: usize) -> u32 {
    let e = tri.triangle_edges(t);
    let x = [weights[e[0]], weights[e[1]], weights[e[2]]];
    ((x[j] + x[(j + 2) % 3]) - x[(j + 1) % 3]) / 2
}

/// True when the vector equals the link of some puncture.
pub fn vertex_link_puncture(tri: &Triangulation, weights: &[u32]) -> Option<usize> {
    (0..tri.spec().punctures as usize).find(|&p| tri.vertex_link_weights(p) == weights)
}

pub fn is_zero(weights: &[u32]) -> bool {
    weights.iter().all(|&w| w == 0)
}

/// Pointwise sum, the normal coordinates of a disjoint union.
pub fn add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{build_base_triangulation, SurfaceSpec};

    #[test]
    fn zero_vector_is_admissible() {
        let tri = build_base_triangulation(SurfaceSpec::new(0, 5).unwrap()).unwrap();
        assert!(validate(&tri, &vec![0; tri.edge_count()]).is_ok());
    }

    #[test]
    fn odd_triangle_sum_is_rejected() {
        let tri = build_base_triangulation(SurfaceSpec::new(0, 5).unwrap()).unwrap();
        let mut w = vec![0u32; tri.edge_count()];
        w[tri.triangle_edges(0)[0]] = 1;
        let err = validate(&tri, &w).unwrap_err();
        assert!(matches!(err, CurveError::BadTriangle { .. }));
    }

    #[test]
    fn vertex_links_are_admissible() {
        for (g, n) in [(0, 5), (1, 3), (2, 1), (2, 2)] {
            let tri = build_base_triangulation(SurfaceSpec::new(g, n).unwrap()).unwrap();
            for p in 0..n as usize {
                let w = tri.vertex_link_weights(p);
                validate(&tri, &w).unwrap();
                assert_eq!(vertex_link_puncture(&tri, &w), Some(p));
            }
        }
    }
}
