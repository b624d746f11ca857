//! Bi-fuzzy automata, their generated/marked languages, and parallel composition.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::linear::{NcfdMatrix, NcfdVector};
use crate::ncfd::Ncfd;

#[derive(Debug, Error, PartialEq)]
pub enum AutomatonError {
    #[error("unknown event {0:?}")]
    UnknownEvent(String),
    #[error("automaton needs at least one event")]
    NoEvents,
    #[error("event {event:?} has a {rows}x{cols} matrix, expected {n}x{n}")]
    BadEventShape { event: String, rows: usize, cols: usize, n: usize },
    #[error("{which} vector has length {got}, expected {n}")]
    BadVectorLength { which: &'static str, got: usize, n: usize },
    #[error("state label count {got} does not match dimension {n}")]
    BadLabelCount { got: usize, n: usize },
}

/// A string of event names; the empty string is ε.
pub type EventString = Vec<String>;

/// Parses a dot-separated event string; the empty string denotes ε.
pub fn parse_event_string(s: &str) -> EventString {
    if s.is_empty() {
        Vec::new()
    } else {
        s.split('.').map(str::to_string).collect()
    }
}

/// Renders an event string in the dot-separated form, ε as the empty string.
pub fn format_event_string(s: &[String]) -> String {
    s.join(".")
}

/// A bi-fuzzy automaton: state vector and one NCFD matrix per event.
#[derive(Debug, Clone, PartialEq)]
pub struct Bfdes {
    state_labels: Vec<String>,
    events: BTreeMap<String, NcfdMatrix>,
    x0: NcfdVector,
    xm: NcfdVector,
}

impl Bfdes {
    pub fn new(
        state_labels: Vec<String>,
        events: BTreeMap<String, NcfdMatrix>,
        x0: NcfdVector,
        xm: NcfdVector,
    ) -> Result<Bfdes, AutomatonError> {
        let n = x0.cols();
        if events.is_empty() {
            return Err(AutomatonError::NoEvents);
        }
        if state_labels.len() != n {
            return Err(AutomatonError::BadLabelCount { got: state_labels.len(), n });
        }
        if x0.rows() != 1 {
            return Err(AutomatonError::BadVectorLength { which: "x0", got: x0.rows(), n: 1 });
        }
        if xm.rows() != 1 || xm.cols() != n {
            return Err(AutomatonError::BadVectorLength { which: "xm", got: xm.cols(), n });
        }
        for (name, m) in &events {
            if m.rows() != n || m.cols() != n {
                return Err(AutomatonError::BadEventShape {
                    event: name.clone(),
                    rows: m.rows(),
                    cols: m.cols(),
                    n,
                });
            }
        }
        Ok(Bfdes { state_labels, events, x0, xm })
    }

    /// One-state automaton that is neutral for parallel composition over `alphabet`.
    pub fn neutral(alphabet: &[String]) -> Bfdes {
        let events = alphabet
            .iter()
            .map(|e| (e.clone(), NcfdMatrix::from_rows(vec![vec![Ncfd::top()]]).unwrap()))
            .collect();
        Bfdes::new(
            vec!["*".to_string()],
            events,
            NcfdMatrix::row_vector(vec![Ncfd::top()]),
            NcfdMatrix::row_vector(vec![Ncfd::top()]),
        )
        .expect("neutral automaton is well formed")
    }

    pub fn dimension(&self) -> usize {
        self.x0.cols()
    }

    pub fn state_labels(&self) -> &[String] {
        &self.state_labels
    }

    pub fn x0(&self) -> &NcfdVector {
        &self.x0
    }

    pub fn xm(&self) -> &NcfdVector {
        &self.xm
    }

    pub fn events(&self) -> &BTreeMap<String, NcfdMatrix> {
        &self.events
    }

    /// Alphabet in canonical (sorted) order.
    pub fn alphabet(&self) -> Vec<String> {
        self.events.keys().cloned().collect()
    }

    pub fn event_matrix(&self, name: &str) -> Result<&NcfdMatrix, AutomatonError> {
        self.events
            .get(name)
            .ok_or_else(|| AutomatonError::UnknownEvent(name.to_string()))
    }

    /// Initial vector composed left-to-right with each event matrix; ε gives `x0`.
    pub fn state_after(&self, s: &[String]) -> Result<NcfdVector, AutomatonError> {
        let mut x = self.x0.clone();
        for ev in s {
            let m = self.event_matrix(ev)?;
            x = x.compose(m).expect("square event matrices keep dimensions");
        }
        Ok(x)
    }

    /// Generated-language degree `L_G(s) = x0 ⊙ σ1 ⊙ ... ⊙ Â_nᵀ`; `L_G(ε) = 1/1`.
    pub fn language_degree(&self, s: &[String]) -> Result<Ncfd, AutomatonError> {
        if s.is_empty() {
            return Ok(Ncfd::top());
        }
        Ok(self.state_after(s)?.join_all())
    }

    /// Marked-language degree `L_G,m(s) = x0 ⊙ σ1 ⊙ ... ⊙ xmᵀ`; `L_G,m(ε) = 1/1`.
    pub fn marked_degree(&self, s: &[String]) -> Result<Ncfd, AutomatonError> {
        if s.is_empty() {
            return Ok(Ncfd::top());
        }
        let x = self.state_after(s)?;
        Ok(x.compose(&self.xm.transpose()).expect("conformable").get(0, 0).clone())
    }

    /// Parallel composition: shared events synchronize via ⊗, private events are
    /// lifted with the identity matrix of the other operand.
    pub fn parallel_compose(&self, other: &Bfdes) -> Bfdes {
        let n1 = self.dimension();
        let n2 = other.dimension();
        let i1 = NcfdMatrix::identity(n1);
        let i2 = NcfdMatrix::identity(n2);
        let mut names: Vec<String> = self.events.keys().cloned().collect();
        for k in other.events.keys() {
            if !self.events.contains_key(k) {
                names.push(k.clone());
            }
        }
        names.sort();
        let mut events = BTreeMap::new();
        for name in names {
            let m = match (self.events.get(&name), other.events.get(&name)) {
                (Some(a), Some(b)) => a.tensor(b),
                (Some(a), None) => a.tensor(&i2),
                (None, Some(b)) => i1.tensor(b),
                (None, None) => unreachable!(),
            };
            events.insert(name, m);
        }
        let mut labels = Vec::with_capacity(n1 * n2);
        for a in &self.state_labels {
            for b in &other.state_labels {
                labels.push(format!("{a}|{b}"));
            }
        }
        Bfdes::new(
            labels,
            events,
            self.x0.tensor(&other.x0),
            self.xm.tensor(&other.xm),
        )
        .expect("tensor construction preserves well-formedness")
    }
}
