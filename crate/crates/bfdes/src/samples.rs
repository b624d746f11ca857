//! Small built-in models: the two-state plant/spec pair used throughout the
//! docs, examples, and tests, plus the treatment-regimen ranking data.

use std::collections::BTreeMap;

use crate::automaton::Bfdes;
use crate::linear::NcfdMatrix;
use crate::ncfd::Ncfd;
use crate::supervisory::UncontrollabilityMap;

fn n(s: &str) -> Ncfd {
    s.parse().expect("valid NCFD literal")
}

fn mat(rows: &[&[&str]]) -> NcfdMatrix {
    NcfdMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| n(s)).collect())
            .collect(),
    )
    .expect("rectangular literal")
}

/// Two-state plant with events `s1`, `s2` and initial state `[1/1, 1/0]`.
pub fn example2_plant() -> Bfdes {
    let mut events = BTreeMap::new();
    events.insert(
        "s1".to_string(),
        mat(&[
            &["1/0.6 + 0.6/0.9", "1/0.9 + 0.8/1"],
            &["1/0.3 + 0.7/0.6", "1/0.3 + 0.7/0.6"],
        ]),
    );
    events.insert(
        "s2".to_string(),
        mat(&[
            &["1/0.6 + 0.6/0.9", "1/0.3 + 0.7/0.6"],
            &["1/0.9 + 0.8/1", "1/0.6 + 0.6/0.9"],
        ]),
    );
    Bfdes::new(
        vec!["x1".to_string(), "x2".to_string()],
        events,
        NcfdMatrix::row_vector(vec![Ncfd::top(), Ncfd::bottom()]),
        NcfdMatrix::all_ones_vector(2),
    )
    .expect("well-formed sample plant")
}

/// Two-state specification automaton paired with [`example2_plant`].
pub fn example2_spec() -> Bfdes {
    let mut events = BTreeMap::new();
    events.insert(
        "s1".to_string(),
        mat(&[
            &["1/0.3 + 0.7/0.6", "1/0.9 + 0.8/1"],
            &["1/0.3 + 0.7/0.6", "1/0.3 + 0.7/0.6"],
        ]),
    );
    events.insert(
        "s2".to_string(),
        mat(&[
            &["1/0.3 + 0.7/0.6", "1/0.3 + 0.7/0.6"],
            &["1/0.9 + 0.8/1", "1/0.6 + 0.6/0.9"],
        ]),
    );
    Bfdes::new(
        vec!["q1".to_string(), "q2".to_string()],
        events,
        NcfdMatrix::row_vector(vec![Ncfd::top(), Ncfd::bottom()]),
        NcfdMatrix::all_ones_vector(2),
    )
    .expect("well-formed sample spec")
}

/// Uncontrollability map making the sample spec uncontrollable.
pub fn example2_uc_primary() -> UncontrollabilityMap {
    UncontrollabilityMap::new(
        [
            ("s1".to_string(), Ncfd::singleton(0.9)),
            ("s2".to_string(), Ncfd::singleton(0.1)),
        ]
        .into_iter()
        .collect(),
    )
}

/// Swapped map under which the sample spec is controllable.
pub fn example2_uc_swapped() -> UncontrollabilityMap {
    UncontrollabilityMap::new(
        [
            ("s1".to_string(), Ncfd::singleton(0.1)),
            ("s2".to_string(), Ncfd::singleton(0.9)),
        ]
        .into_iter()
        .collect(),
    )
}

/// Grid form (segment midpoints at step 0.05) of the regimen-A transition degree.
pub fn regimen_a_degree() -> Ncfd {
    Ncfd::canonicalize(&[(0.55, 0.5), (0.65, 1.0), (0.75, 0.75), (0.85, 0.25)])
        .expect("valid sample degree")
}

/// Grid form of the regimen-B transition degree, which out-ranks regimen A.
pub fn regimen_b_degree() -> Ncfd {
    Ncfd::canonicalize(&[(0.55, 0.75), (0.65, 1.0), (0.75, 0.75), (0.85, 0.5)])
        .expect("valid sample degree")
}
