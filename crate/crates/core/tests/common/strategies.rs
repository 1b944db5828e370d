use implicator_lab::term::Term;
use proptest::prelude::*;

/// Sugared terms over `x, y, z` of depth at most `depth`.
pub fn term(depth: u32) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::var("x")),
        Just(Term::var("y")),
        Just(Term::var("z")),
        Just(Term::Zero),
    ];
    leaf.prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            3 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::imp(a, b)),
            2 => inner.clone().prop_map(|a| Term::Prime(Box::new(a))),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::Meet(Box::new(a), Box::new(b))),
            1 => (inner.clone(), inner).prop_map(|(a, b)| Term::Join(Box::new(a), Box::new(b))),
        ]
    })
}
