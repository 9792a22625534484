use curvegraph::curve::*;
use curvegraph::enumerate::enumerate_curves;
use curvegraph::surface::*;

fn seam(t: &Triangulation, i: usize) -> usize {
    let n = t.spec().punctures as usize;
    (0..t.edge_count()).find(|&e| {
        let (p, q) = t.edge_endpoints(e);
        (p, q) == (i, (i + 1) % n) || (q, p) == (i, (i + 1) % n)
    }).unwrap()
}

fn main() {
    let t = build_base_triangulation(SurfaceSpec::new(0,5).unwrap()).unwrap();
    let set: Vec<Curve> = (0..4).map(|i| edge_link_curve(&t, seam(&t, i)).unwrap()).collect();
    let all = enumerate_curves(&t, 16);
    println!("enumerated {} curves up to weight 16", all.len());
    let disjoint: Vec<&Curve> = all.iter()
        .filter(|c| set.iter().all(|s| is_disjoint(&t, c, s)))
        .collect();
    println!("disjoint from the 4-chain: {}", disjoint.len());
    for c in disjoint { println!("  {:?}", c.weights()); }
}
