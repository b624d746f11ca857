//! Constructive supervisor round trips: admissibility and the closed-loop
//! language equality, plus re-validation of reported violations.

mod common;

use bfdes::lang::all_strings;
use bfdes::supervisory::{
    admissibility_holds, check_controllability, controlled_language_degree, realize_supervisor,
    ConstantSupervisor, ConstructedSupervisor, DEFAULT_STATE_BUDGET,
};
use bfdes::Ncfd;
use common::{rand_automaton, rand_ucmap};
use rand::rngs::StdRng;
use rand::SeedableRng;

const EVENTS: [&str; 2] = ["a", "b"];

#[test]
fn constructed_supervisor_achieves_spec_language_on_controllable_instances() {
    let mut rng = StdRng::seed_from_u64(0x5501);
    let alphabet: Vec<String> = EVENTS.iter().map(|s| s.to_string()).collect();
    for _ in 0..50 {
        let plant = rand_automaton(&mut rng, 2, &EVENTS);
        let spec = plant.clone();
        let uc = rand_ucmap(&mut rng, &EVENTS);
        let report = check_controllability(&plant, &spec, &uc, DEFAULT_STATE_BUDGET).unwrap();
        assert!(report.is_controllable());

        let sup = ConstructedSupervisor { spec: &spec, uc: &uc };
        assert!(admissibility_holds(&plant, &sup, &uc, 4).unwrap());
        for s in all_strings(&alphabet, 4) {
            assert_eq!(
                controlled_language_degree(&plant, &sup, &s).unwrap(),
                spec.language_degree(&s).unwrap()
            );
        }
    }
}

#[test]
fn violations_break_the_round_trip_at_the_witness_extension() {
    let mut rng = StdRng::seed_from_u64(0x5502);
    let mut failing = 0;
    let mut attempts = 0;
    while failing < 50 {
        attempts += 1;
        assert!(attempts < 5000, "could not generate enough failing instances");
        let plant = rand_automaton(&mut rng, 2, &EVENTS);
        let spec = rand_automaton(&mut rng, 2, &EVENTS);
        let uc = rand_ucmap(&mut rng, &EVENTS);
        let report = check_controllability(&plant, &spec, &uc, DEFAULT_STATE_BUDGET).unwrap();
        if report.is_controllable() {
            continue;
        }
        failing += 1;

        for v in &report.violations {
            // Reported values re-evaluate to a genuine order failure.
            let mut t = v.witness.clone();
            t.push(v.event.clone());
            let lhs = spec
                .language_degree(&v.witness)
                .unwrap()
                .meet(uc.degree(&v.event).unwrap())
                .meet(&plant.language_degree(&t).unwrap());
            assert_eq!(lhs, v.lhs);
            assert_eq!(spec.language_degree(&t).unwrap(), v.rhs);
            assert!(!v.lhs.leq(&v.rhs));
        }

        // The closed loop cannot reproduce the spec along the first witness.
        let v = &report.violations[0];
        let mut t = v.witness.clone();
        t.push(v.event.clone());
        let sup = ConstructedSupervisor { spec: &spec, uc: &uc };
        let broken = (0..=t.len()).any(|k| {
            controlled_language_degree(&plant, &sup, &t[..k]).unwrap()
                != spec.language_degree(&t[..k]).unwrap()
        });
        assert!(broken, "round trip survived a reported violation");
    }
}

#[test]
fn fully_enabling_supervisor_recovers_the_plant_language() {
    let mut rng = StdRng::seed_from_u64(0x5503);
    let alphabet: Vec<String> = EVENTS.iter().map(|s| s.to_string()).collect();
    for _ in 0..20 {
        let plant = rand_automaton(&mut rng, 2, &EVENTS);
        let open = ConstantSupervisor(Ncfd::top());
        for s in all_strings(&alphabet, 4) {
            assert_eq!(
                controlled_language_degree(&plant, &open, &s).unwrap(),
                plant.language_degree(&s).unwrap()
            );
        }
    }
}

#[test]
fn realized_supervisor_language_is_the_meet() {
    let mut rng = StdRng::seed_from_u64(0x5504);
    let alphabet: Vec<String> = EVENTS.iter().map(|s| s.to_string()).collect();
    for _ in 0..20 {
        let plant = rand_automaton(&mut rng, 2, &EVENTS);
        let spec = rand_automaton(&mut rng, 2, &EVENTS);
        let loop_ = realize_supervisor(&plant, &spec);
        for s in all_strings(&alphabet, 3) {
            assert_eq!(
                loop_.language_degree(&s).unwrap(),
                plant.language_degree(&s).unwrap().meet(&spec.language_degree(&s).unwrap())
            );
        }
    }
}
