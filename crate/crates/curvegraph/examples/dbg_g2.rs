use curvegraph::families::*;

fn main() {
    for n in [1u32, 2] {
        println!("=== genus 2, n = {n} ===");
        match genus2_family(n) {
            Ok(cat) => {
                for fam in ["C", "C0", "Cf", "B", "Y", "Douter", "E", "Z"] {
                    println!("  {fam}: {}", cat.labels(fam).len());
                }
            }
            Err(e) => println!("  FAILED: {e}"),
        }
    }
}
