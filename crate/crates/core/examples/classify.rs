//! Membership vector of each builtin algebra over all registered varieties.

use implicator_lab::algebra::{builtin, BUILTIN_NAMES};
use implicator_lab::checker::membership;
use implicator_lab::registry::Registry;

fn main() {
    let reg = Registry::standard();
    let names = reg.variety_names();
    print!("{:<8}", "");
    for v in &names {
        print!("{v:>7}");
    }
    println!();
    for a in BUILTIN_NAMES {
        let m = builtin(a).unwrap();
        print!("{a:<8}");
        for v in &names {
            let yes = membership(&m, &reg.get_variety(v).unwrap()).unwrap().member;
            print!("{:>7}", if yes { "x" } else { "." });
        }
        println!();
    }
}
