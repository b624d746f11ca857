//! Supervisory control: admissibility, controlled languages, the computing-tree
//! controllability check, marked-language closure, and supervisor realization.

use std::collections::{BTreeMap, HashSet, VecDeque};

use thiserror::Error;

use crate::automaton::{AutomatonError, Bfdes, EventString};
use crate::linear::NcfdVector;
use crate::ncfd::Ncfd;

/// Default cap on distinct reachable state pairs.
pub const DEFAULT_STATE_BUDGET: usize = 10_000;

#[derive(Debug, Error, PartialEq)]
pub enum SupervisoryError {
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
    #[error("state budget of {budget} distinct state pairs exceeded")]
    StateBudgetExceeded { budget: usize },
    #[error("alphabet mismatch: plant has {plant:?}, other side has {other:?}")]
    AlphabetMismatch { plant: Vec<String>, other: Vec<String> },
}

/// Per-event uncontrollability degrees Σ_uc; the controllable degree is the complement.
#[derive(Debug, Clone, PartialEq)]
pub struct UncontrollabilityMap {
    map: BTreeMap<String, Ncfd>,
}

impl UncontrollabilityMap {
    pub fn new(map: BTreeMap<String, Ncfd>) -> UncontrollabilityMap {
        UncontrollabilityMap { map }
    }

    pub fn degree(&self, event: &str) -> Result<&Ncfd, AutomatonError> {
        self.map
            .get(event)
            .ok_or_else(|| AutomatonError::UnknownEvent(event.to_string()))
    }

    /// Σ_c(σ) = ¬Σ_uc(σ).
    pub fn controllable_degree(&self, event: &str) -> Result<Ncfd, AutomatonError> {
        Ok(self.degree(event)?.complement())
    }

    pub fn events(&self) -> impl Iterator<Item = (&String, &Ncfd)> {
        self.map.iter()
    }

    /// The map must cover exactly the given alphabet.
    pub fn check_covers(&self, alphabet: &[String]) -> Result<(), SupervisoryError> {
        let own: Vec<String> = self.map.keys().cloned().collect();
        if own != alphabet {
            return Err(SupervisoryError::AlphabetMismatch {
                plant: alphabet.to_vec(),
                other: own,
            });
        }
        Ok(())
    }
}

/// A control policy assigning each (history, event) an enablement degree.
pub trait SupervisorPolicy {
    fn enablement(&self, s: &[String], event: &str) -> Result<Ncfd, AutomatonError>;
}

/// Constant policy, handy for tests and degenerate supervisors.
pub struct ConstantSupervisor(pub Ncfd);

impl SupervisorPolicy for ConstantSupervisor {
    fn enablement(&self, _s: &[String], _event: &str) -> Result<Ncfd, AutomatonError> {
        Ok(self.0.clone())
    }
}

/// The constructive supervisor `S(s)(σ) = L_R(sσ) ⊔ Σ_uc(σ)` built from a
/// specification automaton generating the prefix-closed target language.
pub struct ConstructedSupervisor<'a> {
    pub spec: &'a Bfdes,
    pub uc: &'a UncontrollabilityMap,
}

impl SupervisorPolicy for ConstructedSupervisor<'_> {
    fn enablement(&self, s: &[String], event: &str) -> Result<Ncfd, AutomatonError> {
        supervisor_degree(self.spec, self.uc, s, event)
    }
}

/// `S(s)(σ) = L_R(sσ) ⊔ Σ_uc(σ)`.
pub fn supervisor_degree(
    spec: &Bfdes,
    uc: &UncontrollabilityMap,
    s: &[String],
    event: &str,
) -> Result<Ncfd, AutomatonError> {
    let mut extended = s.to_vec();
    extended.push(event.to_string());
    Ok(spec.language_degree(&extended)?.join(uc.degree(event)?))
}

fn strings_up_to(alphabet: &[String], horizon: usize) -> Vec<EventString> {
    let mut all: Vec<EventString> = vec![Vec::new()];
    let mut frontier: Vec<EventString> = vec![Vec::new()];
    for _ in 0..horizon {
        let mut next = Vec::new();
        for s in &frontier {
            for ev in alphabet {
                let mut t = s.clone();
                t.push(ev.clone());
                next.push(t);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Checks `Σ_uc(σ) ⊓ L_G(sσ) ⊑ S(s)(σ)` for every string up to `horizon` and every event.
pub fn admissibility_holds(
    plant: &Bfdes,
    policy: &dyn SupervisorPolicy,
    uc: &UncontrollabilityMap,
    horizon: usize,
) -> Result<bool, AutomatonError> {
    let alphabet = plant.alphabet();
    for s in strings_up_to(&alphabet, horizon) {
        for ev in &alphabet {
            let mut extended = s.clone();
            extended.push(ev.clone());
            let lhs = uc.degree(ev)?.meet(&plant.language_degree(&extended)?);
            if !lhs.leq(&policy.enablement(&s, ev)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Closed-loop generated language: `L(ε) = 1/1`, `L(sσ) = L(s) ⊓ L_G(sσ) ⊓ S(s)(σ)`.
pub fn controlled_language_degree(
    plant: &Bfdes,
    policy: &dyn SupervisorPolicy,
    s: &[String],
) -> Result<Ncfd, AutomatonError> {
    let mut acc = Ncfd::top();
    for k in 1..=s.len() {
        let prefix = &s[..k - 1];
        let event = &s[k - 1];
        acc = acc
            .meet(&plant.language_degree(&s[..k])?)
            .meet(&policy.enablement(prefix, event)?);
    }
    Ok(acc)
}

/// Closed-loop marked language: the generated degree met with the plant's marked degree.
pub fn controlled_marked_degree(
    plant: &Bfdes,
    policy: &dyn SupervisorPolicy,
    s: &[String],
) -> Result<Ncfd, AutomatonError> {
    Ok(controlled_language_degree(plant, policy, s)?.meet(&plant.marked_degree(s)?))
}

/// One equivalence class of strings: the plant/spec state-vector pair reached
/// by the (shortest) witness.
#[derive(Debug, Clone, PartialEq)]
pub struct StatePairNode {
    pub plant_state: NcfdVector,
    pub spec_state: NcfdVector,
    pub witness: EventString,
}

/// Breadth-first computing tree over plant/spec state-vector pairs. A child
/// whose label repeats an already-discovered label is a leaf and not expanded.
pub fn reachable_pairs(
    plant: &Bfdes,
    spec: &Bfdes,
    budget: usize,
) -> Result<Vec<StatePairNode>, SupervisoryError> {
    let alphabet = plant.alphabet();
    if spec.alphabet() != alphabet {
        return Err(SupervisoryError::AlphabetMismatch {
            plant: alphabet,
            other: spec.alphabet(),
        });
    }
    let root = StatePairNode {
        plant_state: plant.x0().clone(),
        spec_state: spec.x0().clone(),
        witness: Vec::new(),
    };
    type PairKey = (Vec<Vec<(i64, i64)>>, Vec<Vec<(i64, i64)>>);
    let mut seen: HashSet<PairKey> = HashSet::new();
    seen.insert((root.plant_state.quantized(), root.spec_state.quantized()));
    let mut nodes = vec![root.clone()];
    let mut frontier = VecDeque::from([root]);
    while let Some(node) = frontier.pop_front() {
        for ev in &alphabet {
            let pm = plant.event_matrix(ev)?;
            let sm = spec.event_matrix(ev)?;
            let child = StatePairNode {
                plant_state: node.plant_state.compose(pm).expect("square"),
                spec_state: node.spec_state.compose(sm).expect("square"),
                witness: {
                    let mut w = node.witness.clone();
                    w.push(ev.clone());
                    w
                },
            };
            let key = (child.plant_state.quantized(), child.spec_state.quantized());
            if seen.insert(key) {
                if nodes.len() + 1 > budget {
                    return Err(SupervisoryError::StateBudgetExceeded { budget });
                }
                nodes.push(child.clone());
                frontier.push_back(child);
            }
        }
    }
    Ok(nodes)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Controllable,
    Uncontrollable,
}

/// One failing instance of the controllability condition.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub witness: EventString,
    pub event: String,
    /// `L_R(s) ⊓ Σ_uc(σ) ⊓ L_G(sσ)`
    pub lhs: Ncfd,
    /// `L_R(sσ)`
    pub rhs: Ncfd,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LmClosureViolation {
    pub witness: EventString,
    /// `L_R,m(s)`
    pub marked: Ncfd,
    /// `L_R(s) ⊓ L_G,m(s)`
    pub expected: Ncfd,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LmClosureReport {
    pub holds: bool,
    pub violations: Vec<LmClosureViolation>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ControllabilityReport {
    pub verdict: Verdict,
    pub pairs: Vec<StatePairNode>,
    pub violations: Vec<Violation>,
    pub lm_closure: Option<LmClosureReport>,
}

impl ControllabilityReport {
    pub fn is_controllable(&self) -> bool {
        self.verdict == Verdict::Controllable
    }

    /// Nonblocking supervision is achievable when both sub-checks pass.
    pub fn nonblocking_achievable(&self) -> bool {
        self.is_controllable() && self.lm_closure.as_ref().is_some_and(|r| r.holds)
    }
}

/// Checks `L_R(s) ⊓ Σ_uc(σ) ⊓ L_G(sσ) ⊑ L_R(sσ)` over every reachable pair and
/// event. The empty-string class passes vacuously: ε carries degree `1/1` on
/// both sides by definition, before any transition or control decision occurs.
pub fn check_controllability(
    plant: &Bfdes,
    spec: &Bfdes,
    uc: &UncontrollabilityMap,
    budget: usize,
) -> Result<ControllabilityReport, SupervisoryError> {
    uc.check_covers(&plant.alphabet())?;
    let pairs = reachable_pairs(plant, spec, budget)?;
    let alphabet = plant.alphabet();
    let mut violations = Vec::new();
    for pair in &pairs {
        if pair.witness.is_empty() {
            continue;
        }
        let spec_here = pair.spec_state.join_all();
        for ev in &alphabet {
            let plant_next = pair.plant_state.compose(plant.event_matrix(ev)?).expect("square");
            let spec_next = pair.spec_state.compose(spec.event_matrix(ev)?).expect("square");
            let lhs = spec_here.meet(uc.degree(ev)?).meet(&plant_next.join_all());
            let rhs = spec_next.join_all();
            if !lhs.leq(&rhs) {
                violations.push(Violation {
                    witness: pair.witness.clone(),
                    event: ev.clone(),
                    lhs,
                    rhs,
                });
            }
        }
    }
    let verdict = if violations.is_empty() {
        Verdict::Controllable
    } else {
        Verdict::Uncontrollable
    };
    Ok(ControllabilityReport { verdict, pairs, violations, lm_closure: None })
}

/// Checks the marked-language closure condition `L_R,m(s) = L_R(s) ⊓ L_G,m(s)`
/// over every reachable pair.
pub fn check_lm_closure(
    plant: &Bfdes,
    spec: &Bfdes,
    budget: usize,
) -> Result<LmClosureReport, SupervisoryError> {
    let pairs = reachable_pairs(plant, spec, budget)?;
    let mut violations = Vec::new();
    for pair in &pairs {
        let marked = pair
            .spec_state
            .compose(&spec.xm().transpose())
            .expect("conformable")
            .get(0, 0)
            .clone();
        let plant_marked = pair
            .plant_state
            .compose(&plant.xm().transpose())
            .expect("conformable")
            .get(0, 0)
            .clone();
        let expected = pair.spec_state.join_all().meet(&plant_marked);
        if marked != expected {
            violations.push(LmClosureViolation { witness: pair.witness.clone(), marked, expected });
        }
    }
    Ok(LmClosureReport { holds: violations.is_empty(), violations })
}

/// Conjunction of the controllability and closure checks.
pub fn check_nonblocking_supervision(
    plant: &Bfdes,
    spec: &Bfdes,
    uc: &UncontrollabilityMap,
    budget: usize,
) -> Result<ControllabilityReport, SupervisoryError> {
    let mut report = check_controllability(plant, spec, uc, budget)?;
    report.lm_closure = Some(check_lm_closure(plant, spec, budget)?);
    Ok(report)
}

/// Automaton realization of the supervisor: the closed loop is `G || R`.
pub fn realize_supervisor(plant: &Bfdes, spec: &Bfdes) -> Bfdes {
    plant.parallel_compose(spec)
}
