//! Supremal controllable sublanguage and infimal prefix-closed controllable
//! superlanguage of an uncontrollable specification, cross-checked against the
//! exhaustive oracles.

use bfdes::automaton::format_event_string;
use bfdes::lang::{
    brute_force_infimal, brute_force_supremal, infimal_closed_controllable,
    is_controllable_finite, supremal_controllable, FiniteLang, ValueLattice,
};
use bfdes::samples::{example2_plant, example2_spec, example2_uc_primary};

fn main() {
    let m = FiniteLang::from_automaton(&example2_plant(), 2).unwrap();
    let k = FiniteLang::from_automaton(&example2_spec(), 2)
        .unwrap()
        .intersect(&m)
        .unwrap();
    let uc = example2_uc_primary();

    let mut seed: Vec<_> = k.degrees().values().chain(m.degrees().values()).cloned().collect();
    seed.extend(uc.events().map(|(_, d)| d.clone()));
    let lattice = ValueLattice::closure(seed, 1024).unwrap();
    println!("lattice has {} values", lattice.len());

    let sup = supremal_controllable(&k, &m, &uc, &lattice).unwrap();
    let inf = infimal_closed_controllable(&k, &m, &uc, &lattice).unwrap();
    assert_eq!(sup, brute_force_supremal(&k, &m, &uc, &lattice).unwrap());
    assert_eq!(inf, brute_force_infimal(&k, &m, &uc, &lattice).unwrap());
    println!("fixpoint results match the exhaustive oracles");

    assert!(is_controllable_finite(&sup, &m, &uc).unwrap().is_none());
    assert!(is_controllable_finite(&inf, &m, &uc).unwrap().is_none());
    assert!(sup.subset_of(&k) && k.subset_of(&inf) && inf.subset_of(&m));

    println!("supremal sublanguage:");
    for (s, d) in sup.degrees() {
        println!("  {:8} -> {d}", if s.is_empty() { "eps".into() } else { format_event_string(s) });
    }
    println!("infimal superlanguage:");
    for (s, d) in inf.degrees() {
        println!("  {:8} -> {d}", if s.is_empty() { "eps".into() } else { format_event_string(s) });
    }
}
