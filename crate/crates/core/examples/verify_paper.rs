//! The full battery, then the same battery with a corrupted 2_s table.

use implicator_lab::algebra::builtin;
use implicator_lab::lab::{verify_paper, Battery};

fn main() {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let rep = verify_paper(max_n).unwrap();
    print!("{}", rep.render_text());

    let broken = builtin("two_s").unwrap().with_entry(1, 0, 0);
    let rep = Battery::new(2)
        .override_builtin("two_s", broken)
        .unwrap()
        .run()
        .unwrap();
    println!("\nwith 1 -> 0 set to 0 in 2_s:");
    for e in rep.failures() {
        println!("  {} ({}): {:?}", e.claim_id, e.paper_ref, e.witness);
    }
}
