use curvegraph::families::*;
fn main() {
    match genus2_family(2) { Ok(_) => println!("n=2 ok"), Err(e) => println!("n=2 FAILED: {e}") }
}
