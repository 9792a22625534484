use curvegraph::curve::*;
use curvegraph::enumerate::enumerate_curves;
use curvegraph::expansion::{determine, Verdict};
use curvegraph::surface::*;

fn main() {
    let t = build_base_triangulation(SurfaceSpec::new(0,5).unwrap()).unwrap();
    let small = enumerate_curves(&t, 10);
    println!("{} curves up to weight 10", small.len());
    let mut uniq = 0;
    for i in 0..small.len() {
        for j in (i+1)..small.len() {
            let d = determine(&t, &[small[i].clone(), small[j].clone()]).unwrap();
            if let Verdict::Unique(c) = d.verdict {
                if uniq < 3 {
                    println!("unique: A={:?} B={:?} -> {:?}",
                        small[i].weights(), small[j].weights(), c.weights());
                }
                uniq += 1;
            }
        }
    }
    println!("{uniq} unique pairs");
}
