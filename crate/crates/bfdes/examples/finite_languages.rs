//! Finite-horizon bi-fuzzy languages: prefix closure, union/intersection, and
//! the language-level controllability test.

use bfdes::automaton::format_event_string;
use bfdes::lang::{is_controllable_finite, FiniteLang};
use bfdes::samples::{example2_plant, example2_spec, example2_uc_primary};

fn main() {
    let m = FiniteLang::from_automaton(&example2_plant(), 2).unwrap();
    let k = FiniteLang::from_automaton(&example2_spec(), 2)
        .unwrap()
        .intersect(&m)
        .unwrap();

    println!("plant language to horizon 2:");
    for (s, d) in m.degrees() {
        println!("  {:8} -> {d}", if s.is_empty() { "eps".into() } else { format_event_string(s) });
    }

    println!("prefix-closed: K {}, M {}", k.is_prefix_closed(), m.is_prefix_closed());
    println!("K subset of M: {}", k.subset_of(&m));
    println!("union(K, M) == M: {}", k.union(&m).unwrap() == m);

    let uc = example2_uc_primary();
    match is_controllable_finite(&k, &m, &uc).unwrap() {
        None => println!("K is controllable with respect to M"),
        Some(v) => println!(
            "uncontrollable at s={}, event={}: {} not leq {}",
            if v.s.is_empty() { "eps".into() } else { format_event_string(&v.s) },
            v.event,
            v.lhs,
            v.rhs
        ),
    }
}
