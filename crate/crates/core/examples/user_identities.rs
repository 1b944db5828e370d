//! Loading extra identities from a `.ids` file and using them as a variety.

use implicator_lab::algebra::{builtin, BUILTIN_NAMES};
use implicator_lab::checker::membership;
use implicator_lab::registry::Registry;

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/sample.ids");
    let mut reg = Registry::standard();
    let added = reg
        .load_ids("sample", &std::fs::read_to_string(path).unwrap())
        .unwrap();
    for name in &added {
        println!("{name:<16} {}", reg.identity(name).unwrap());
    }
    let v = reg.get_variety("user:sample").unwrap();
    for a in BUILTIN_NAMES {
        let m = membership(&builtin(a).unwrap(), &v).unwrap();
        match m.failure {
            None => println!("{a}: satisfies all of them"),
            Some(f) => println!("{a}: fails {} at {}", f.identity, f.witness),
        }
    }
}
