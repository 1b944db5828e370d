//! Smallest models separating varieties.

use implicator_lab::lab::{find_counterexample, Counterexample};
use implicator_lab::registry::Registry;

fn main() {
    let reg = Registry::standard();
    let v = |s: &str| reg.get_variety(s).unwrap();
    for (sat, fail, max_n) in [
        ("MC", "SCP", 3),
        ("I20", "MC", 3),
        ("A", "C", 4),
        ("CP", "SL", 3),
        ("SCP", "MC", 3),
    ] {
        let r = find_counterexample(&v(sat), &v(fail).identities, max_n, Some(60.0)).unwrap();
        match &r {
            Counterexample::Found {
                identity, witness, ..
            } => {
                println!("{sat} ⊄ {fail}: fails {identity} at {witness}");
                print!("{}", r.model().unwrap().render_table());
            }
            Counterexample::NoneUpTo { max_n } => {
                println!("{sat} ⊆ {fail} on all models of size ≤ {max_n}")
            }
            Counterexample::Incomplete { searched_up_to } => {
                println!("{sat} vs {fail}: budget ran out after size {searched_up_to}")
            }
        }
        println!();
    }
}
