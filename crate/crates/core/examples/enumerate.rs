//! Enumerate all models up to isomorphism and count them per variety.
//!
//!     cargo run --release --example enumerate -- 3

use std::time::Instant;

use implicator_lab::enumerator::{count_models, enumerate_models, naive_enumerate, EnumOptions};
use implicator_lab::registry::Registry;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let reg = Registry::standard();
    for size in 1..=n {
        let t = Instant::now();
        let e = enumerate_models(size, &EnumOptions::default()).unwrap();
        println!(
            "size {size}: {} iso classes ({:?})",
            e.models.len(),
            t.elapsed()
        );
        if size <= 3 {
            let naive = naive_enumerate(size, false).unwrap();
            println!("  brute force agrees: {}", naive == e.models);
        }
    }
    println!("\nclasses of size {n} per variety:");
    for v in [
        "Z", "C", "A", "I20", "MC", "SCP", "DM", "KL", "BA", "SL", "I10", "ID", "I31",
    ] {
        let c = count_models(n, &reg.get_variety(v).unwrap(), None).unwrap();
        println!("  {v:<4} {c}");
    }
}
