//! Shared randomized generators for the property suites.

#![allow(dead_code)]

use std::collections::BTreeMap;

use bfdes::lang::{FiniteLang, ValueLattice};
use bfdes::supervisory::UncontrollabilityMap;
use bfdes::{Bfdes, Ncfd, NcfdMatrix};
use rand::rngs::StdRng;
use rand::Rng;

/// Random NCFD on the 0.1 grid, support size at most `max_support`.
pub fn rand_ncfd(rng: &mut StdRng, max_support: usize) -> Ncfd {
    let n = rng.gen_range(1..=max_support);
    let mut us: Vec<i32> = (0..=10).collect();
    for i in (1..us.len()).rev() {
        us.swap(i, rng.gen_range(0..=i));
    }
    let mut us: Vec<f64> = us[..n].iter().map(|&x| x as f64 / 10.0).collect();
    us.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let peak = rng.gen_range(0..n);
    let mut pts = Vec::new();
    let mut g = 1.0;
    let mut left = Vec::new();
    for i in (0..peak).rev() {
        g = (g * 10.0 - rng.gen_range(1..=3) as f64).max(1.0) / 10.0;
        left.push((us[i], g));
    }
    left.reverse();
    pts.extend(left);
    pts.push((us[peak], 1.0));
    let mut g = 1.0;
    for &u in us.iter().skip(peak + 1) {
        g = (g * 10.0 - rng.gen_range(1..=3) as f64).max(1.0) / 10.0;
        pts.push((u, g));
    }
    Ncfd::canonicalize(&pts).expect("generated points are unimodal and normal")
}

pub fn rand_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> NcfdMatrix {
    NcfdMatrix::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| rand_ncfd(rng, 3)).collect())
            .collect(),
    )
    .expect("rectangular")
}

/// Random automaton with crisp initial state concentrated on the first state.
pub fn rand_automaton(rng: &mut StdRng, states: usize, events: &[&str]) -> Bfdes {
    let event_map: BTreeMap<String, NcfdMatrix> = events
        .iter()
        .map(|&e| (e.to_string(), rand_matrix(rng, states, states)))
        .collect();
    let mut x0 = vec![Ncfd::bottom(); states];
    x0[0] = Ncfd::top();
    let xm = (0..states).map(|_| rand_ncfd(rng, 2)).collect();
    Bfdes::new(
        (0..states).map(|i| format!("x{i}")).collect(),
        event_map,
        NcfdMatrix::row_vector(x0),
        NcfdMatrix::row_vector(xm),
    )
    .expect("well formed")
}

pub fn rand_ucmap(rng: &mut StdRng, events: &[&str]) -> UncontrollabilityMap {
    UncontrollabilityMap::new(
        events.iter().map(|&e| (e.to_string(), rand_ncfd(rng, 2))).collect(),
    )
}

/// Three-element chain lattice `{bottom, v, top}`; always meet/join closed.
pub fn chain_lattice(rng: &mut StdRng) -> ValueLattice {
    let mid = Ncfd::singleton(rng.gen_range(1..=9) as f64 / 10.0);
    ValueLattice::new(vec![mid]).expect("chains are closed")
}

/// Random language over `alphabet` up to `horizon` with degrees drawn from the lattice.
pub fn rand_lang(
    rng: &mut StdRng,
    alphabet: &[&str],
    horizon: usize,
    lattice: &ValueLattice,
) -> FiniteLang {
    let alpha: Vec<String> = alphabet.iter().map(|s| s.to_string()).collect();
    let empty = FiniteLang::empty(horizon, alpha.clone());
    let degrees: BTreeMap<_, _> = empty
        .strings()
        .into_iter()
        .map(|s| {
            let v = lattice.values()[rng.gen_range(0..lattice.len())].clone();
            (s, v)
        })
        .collect();
    FiniteLang::new(horizon, alpha, degrees).expect("lattice values are valid degrees")
}

/// Uncontrollability map with degrees drawn from the lattice.
pub fn rand_uc_in_lattice(
    rng: &mut StdRng,
    events: &[&str],
    lattice: &ValueLattice,
) -> UncontrollabilityMap {
    UncontrollabilityMap::new(
        events
            .iter()
            .map(|&e| {
                let v = lattice.values()[rng.gen_range(0..lattice.len())].clone();
                (e.to_string(), v)
            })
            .collect(),
    )
}
