use curvegraph::curve::*;
use curvegraph::expansion::*;
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
    let base: Vec<Curve> = (0..5).map(|i| edge_link_curve(&t, seam(&t, i)).unwrap()).collect();
    let naive = expand_once_naive(&t, &base);
    println!("O^1 \\ O discoveries: {}", naive.len());
    for (c, w) in &naive { println!("  {:?} from {:?}", c.weights(), w); }
    let pruned = expand_once(&t, &base, ExpansionBudget::default());
    println!("pruned: {} complete={} visited={}", pruned.discovered.len(), pruned.complete, pruned.subsets_visited);
    assert_eq!(naive.keys().collect::<Vec<_>>(), pruned.discovered.keys().collect::<Vec<_>>());
    println!("naive == pruned OK");
}
