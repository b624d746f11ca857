//! Finite-horizon bi-fuzzy languages: prefix closure, language-level
//! controllability, and the supremal/infimal controllable approximations with
//! exhaustive oracles over finite value lattices.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::automaton::{AutomatonError, Bfdes, EventString};
use crate::ncfd::Ncfd;
use crate::supervisory::UncontrollabilityMap;

#[derive(Debug, Error, PartialEq)]
pub enum LangError {
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
    #[error("alphabet mismatch: {left:?} vs {right:?}")]
    AlphabetMismatch { left: Vec<String>, right: Vec<String> },
    #[error("horizon mismatch: {left} vs {right}")]
    HorizonMismatch { left: usize, right: usize },
    #[error("string {0:?} exceeds horizon {1}")]
    StringTooLong(String, usize),
    #[error("premise violated: {0}")]
    PremiseViolated(String),
    #[error("lattice is not closed: {a} and {b} produce {result} under {op}")]
    LatticeNotClosed { a: String, b: String, op: &'static str, result: String },
    #[error("value {0} is outside the declared lattice")]
    ValueOutsideLattice(String),
    #[error("search space of {candidates} candidates exceeds the limit {limit}")]
    SearchSpaceTooLarge { candidates: u128, limit: u128 },
}

/// All strings over `alphabet` of length at most `horizon`, in shortlex order.
pub fn all_strings(alphabet: &[String], horizon: usize) -> Vec<EventString> {
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

/// A bi-fuzzy language restricted to strings of length at most `horizon`.
/// Strings absent from the table carry the bottom degree `{1/0}`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteLang {
    horizon: usize,
    alphabet: Vec<String>,
    degrees: BTreeMap<EventString, Ncfd>,
}

impl FiniteLang {
    pub fn new(
        horizon: usize,
        mut alphabet: Vec<String>,
        degrees: BTreeMap<EventString, Ncfd>,
    ) -> Result<FiniteLang, LangError> {
        alphabet.sort();
        alphabet.dedup();
        let mut table = BTreeMap::new();
        for (s, d) in degrees {
            if s.len() > horizon {
                return Err(LangError::StringTooLong(s.join("."), horizon));
            }
            for ev in &s {
                if !alphabet.contains(ev) {
                    return Err(AutomatonError::UnknownEvent(ev.clone()).into());
                }
            }
            if d != Ncfd::bottom() {
                table.insert(s, d);
            }
        }
        Ok(FiniteLang { horizon, alphabet, degrees: table })
    }

    /// The empty language (bottom everywhere).
    pub fn empty(horizon: usize, alphabet: Vec<String>) -> FiniteLang {
        FiniteLang::new(horizon, alphabet, BTreeMap::new()).expect("no entries to validate")
    }

    /// The unit language `{ε → 1/1}`.
    pub fn unit(horizon: usize, alphabet: Vec<String>) -> FiniteLang {
        FiniteLang::new(horizon, alphabet, [(Vec::new(), Ncfd::top())].into_iter().collect())
            .expect("single valid entry")
    }

    /// Truncation of an automaton's generated language to the horizon.
    pub fn from_automaton(g: &Bfdes, horizon: usize) -> Result<FiniteLang, LangError> {
        let alphabet = g.alphabet();
        let mut degrees = BTreeMap::new();
        for s in all_strings(&alphabet, horizon) {
            degrees.insert(s.clone(), g.language_degree(&s)?);
        }
        FiniteLang::new(horizon, alphabet, degrees)
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn degrees(&self) -> &BTreeMap<EventString, Ncfd> {
        &self.degrees
    }

    pub fn get(&self, s: &[String]) -> Ncfd {
        self.degrees.get(s).cloned().unwrap_or_else(Ncfd::bottom)
    }

    fn set(&mut self, s: EventString, d: Ncfd) {
        if d == Ncfd::bottom() {
            self.degrees.remove(&s);
        } else {
            self.degrees.insert(s, d);
        }
    }

    /// All in-horizon strings over the alphabet, shortlex.
    pub fn strings(&self) -> Vec<EventString> {
        all_strings(&self.alphabet, self.horizon)
    }

    fn check_compat(&self, other: &FiniteLang) -> Result<(), LangError> {
        if self.alphabet != other.alphabet {
            return Err(LangError::AlphabetMismatch {
                left: self.alphabet.clone(),
                right: other.alphabet.clone(),
            });
        }
        if self.horizon != other.horizon {
            return Err(LangError::HorizonMismatch { left: self.horizon, right: other.horizon });
        }
        Ok(())
    }

    /// Pointwise join.
    pub fn union(&self, other: &FiniteLang) -> Result<FiniteLang, LangError> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (s, d) in &other.degrees {
            out.set(s.clone(), out.get(s).join(d));
        }
        Ok(out)
    }

    /// Pointwise meet.
    pub fn intersect(&self, other: &FiniteLang) -> Result<FiniteLang, LangError> {
        self.check_compat(other)?;
        let mut degrees = BTreeMap::new();
        for (s, d) in &self.degrees {
            degrees.insert(s.clone(), d.meet(&other.get(s)));
        }
        FiniteLang::new(self.horizon, self.alphabet.clone(), degrees)
    }

    /// Concatenation: `(L1 L2)(s) = ⊔ over splits s = uv of L1(u) ⊓ L2(v)`,
    /// with the result horizon being the sum of the operand horizons.
    pub fn concat(&self, other: &FiniteLang) -> Result<FiniteLang, LangError> {
        if self.alphabet != other.alphabet {
            return Err(LangError::AlphabetMismatch {
                left: self.alphabet.clone(),
                right: other.alphabet.clone(),
            });
        }
        let horizon = self.horizon + other.horizon;
        let mut out = FiniteLang::empty(horizon, self.alphabet.clone());
        for (u, du) in &self.degrees {
            for (v, dv) in &other.degrees {
                let mut s = u.clone();
                s.extend(v.iter().cloned());
                out.set(s.clone(), out.get(&s).join(&du.meet(dv)));
            }
        }
        Ok(out)
    }

    /// Prefix closure: `pr(K)(s) = ⊔ over in-horizon extensions su of K(su)`.
    pub fn pr(&self) -> FiniteLang {
        let mut out = FiniteLang::empty(self.horizon, self.alphabet.clone());
        for (t, d) in &self.degrees {
            for k in 0..=t.len() {
                let p = t[..k].to_vec();
                out.set(p.clone(), out.get(&p).join(d));
            }
        }
        out
    }

    pub fn is_prefix_closed(&self) -> bool {
        *self == self.pr()
    }

    /// Pointwise inclusion `self ⊆ other`.
    pub fn subset_of(&self, other: &FiniteLang) -> bool {
        self.degrees.iter().all(|(s, d)| d.leq(&other.get(s)))
            && other.degrees.keys().all(|s| self.get(s).leq(&other.get(s)))
    }
}

/// A finite set of NCFDs closed under meet and join, with bottom and top
/// always included. Serves as the value space for the approximation searches.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueLattice {
    values: Vec<Ncfd>,
}

impl ValueLattice {
    pub fn new(mut values: Vec<Ncfd>) -> Result<ValueLattice, LangError> {
        values.push(Ncfd::bottom());
        values.push(Ncfd::top());
        let mut dedup: Vec<Ncfd> = Vec::new();
        for v in values {
            if !dedup.contains(&v) {
                dedup.push(v);
            }
        }
        dedup.sort_by(|a, b| {
            a.quantized().cmp(&b.quantized())
        });
        for i in 0..dedup.len() {
            for j in i..dedup.len() {
                for (op, r) in [("meet", dedup[i].meet(&dedup[j])), ("join", dedup[i].join(&dedup[j]))] {
                    if !dedup.contains(&r) {
                        return Err(LangError::LatticeNotClosed {
                            a: dedup[i].to_string(),
                            b: dedup[j].to_string(),
                            op,
                            result: r.to_string(),
                        });
                    }
                }
            }
        }
        Ok(ValueLattice { values: dedup })
    }

    /// Smallest lattice containing `seed`: saturates the set under meet and
    /// join, failing with `SearchSpaceTooLarge` past `cap` values.
    pub fn closure(seed: Vec<Ncfd>, cap: usize) -> Result<ValueLattice, LangError> {
        let mut values: Vec<Ncfd> = vec![Ncfd::bottom(), Ncfd::top()];
        for v in seed {
            if !values.contains(&v) {
                values.push(v);
            }
        }
        loop {
            let mut fresh = Vec::new();
            for i in 0..values.len() {
                for j in i..values.len() {
                    for r in [values[i].meet(&values[j]), values[i].join(&values[j])] {
                        if !values.contains(&r) && !fresh.contains(&r) {
                            fresh.push(r);
                        }
                    }
                }
            }
            if fresh.is_empty() {
                return ValueLattice::new(values);
            }
            values.extend(fresh);
            if values.len() > cap {
                return Err(LangError::SearchSpaceTooLarge {
                    candidates: values.len() as u128,
                    limit: cap as u128,
                });
            }
        }
    }

    pub fn values(&self) -> &[Ncfd] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: &Ncfd) -> bool {
        self.values.contains(v)
    }

    /// The largest lattice value `v` with `v ⊓ c ⊑ d`. The set of such values
    /// is closed under join by distributivity, so its join is itself a member.
    pub fn maxval(&self, c: &Ncfd, d: &Ncfd) -> Ncfd {
        let mut best = Ncfd::bottom();
        for v in &self.values {
            if v.meet(c).leq(d) {
                best = best.join(v);
            }
        }
        best
    }

    fn check_lang(&self, l: &FiniteLang) -> Result<(), LangError> {
        for d in l.degrees.values() {
            if !self.contains(d) {
                return Err(LangError::ValueOutsideLattice(d.to_string()));
            }
        }
        Ok(())
    }

    fn check_uc(&self, uc: &UncontrollabilityMap) -> Result<(), LangError> {
        for (_, d) in uc.events() {
            if !self.contains(d) {
                return Err(LangError::ValueOutsideLattice(d.to_string()));
            }
        }
        Ok(())
    }
}

/// A failing instance of the language-level controllability condition.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteViolation {
    pub s: EventString,
    pub event: String,
    pub lhs: Ncfd,
    pub rhs: Ncfd,
}

fn first_violation(
    l: &FiniteLang,
    m: &FiniteLang,
    uc: &UncontrollabilityMap,
) -> Result<Option<FiniteViolation>, LangError> {
    let prl = l.pr();
    for s in all_strings(&l.alphabet, l.horizon.saturating_sub(1)) {
        for ev in &l.alphabet {
            let mut t = s.clone();
            t.push(ev.clone());
            let lhs = prl.get(&s).meet(uc.degree(ev)?).meet(&m.get(&t));
            let rhs = prl.get(&t);
            if !lhs.leq(&rhs) {
                return Ok(Some(FiniteViolation { s, event: ev.clone(), lhs, rhs }));
            }
        }
    }
    Ok(None)
}

fn check_premises(k: &FiniteLang, m: &FiniteLang) -> Result<(), LangError> {
    k.check_compat(m)?;
    if !m.is_prefix_closed() {
        return Err(LangError::PremiseViolated("M is not prefix-closed".to_string()));
    }
    if !k.subset_of(m) {
        return Err(LangError::PremiseViolated("K is not a sublanguage of M".to_string()));
    }
    Ok(())
}

/// Tests `pr(K)(s) ⊓ Σ_uc(σ) ⊓ M(sσ) ⊑ pr(K)(sσ)` for all in-horizon `(s, σ)`;
/// `None` means controllable.
pub fn is_controllable_finite(
    k: &FiniteLang,
    m: &FiniteLang,
    uc: &UncontrollabilityMap,
) -> Result<Option<FiniteViolation>, LangError> {
    check_premises(k, m)?;
    first_violation(k, m, uc)
}

/// Supremal controllable sublanguage of `K` over the lattice: descending
/// repair. At each violation `(s, σ)` every extension of `s` is lowered by the
/// largest lattice value still compatible with the condition; each repair
/// preserves every controllable sublanguage, so the fixpoint is exact.
pub fn supremal_controllable(
    k: &FiniteLang,
    m: &FiniteLang,
    uc: &UncontrollabilityMap,
    lattice: &ValueLattice,
) -> Result<FiniteLang, LangError> {
    check_premises(k, m)?;
    lattice.check_lang(k)?;
    lattice.check_lang(m)?;
    lattice.check_uc(uc)?;
    let mut l = k.clone();
    loop {
        let Some(v) = first_violation(&l, m, uc)? else {
            return Ok(l);
        };
        let mut t = v.s.clone();
        t.push(v.event.clone());
        let c = uc.degree(&v.event)?.meet(&m.get(&t));
        let cap = lattice.maxval(&c, &l.pr().get(&t));
        for u in l.strings() {
            if u.len() >= v.s.len() && u[..v.s.len()] == v.s[..] {
                l.set(u.clone(), l.get(&u).meet(&cap));
            }
        }
    }
}

/// Infimal prefix-closed controllable superlanguage of `K` within `M`:
/// ascending repair from `pr(K)`. Raising `L(sσ)` by `L(s) ⊓ Σ_uc(σ) ⊓ M(sσ)`
/// keeps `L` prefix-closed and below every member of the superlanguage family.
pub fn infimal_closed_controllable(
    k: &FiniteLang,
    m: &FiniteLang,
    uc: &UncontrollabilityMap,
    lattice: &ValueLattice,
) -> Result<FiniteLang, LangError> {
    check_premises(k, m)?;
    lattice.check_lang(k)?;
    lattice.check_lang(m)?;
    lattice.check_uc(uc)?;
    let mut l = k.pr();
    loop {
        let Some(v) = first_violation(&l, m, uc)? else {
            return Ok(l);
        };
        let mut t = v.s.clone();
        t.push(v.event.clone());
        l.set(t.clone(), l.get(&t).join(&v.lhs));
    }
}

const SEARCH_LIMIT: u128 = 1_000_000;

fn guard_search(lattice: &ValueLattice, nstrings: usize) -> Result<(), LangError> {
    let mut total: u128 = 1;
    for _ in 0..nstrings {
        total = total.saturating_mul(lattice.len() as u128);
        if total > SEARCH_LIMIT {
            return Err(LangError::SearchSpaceTooLarge { candidates: total, limit: SEARCH_LIMIT });
        }
    }
    Ok(())
}

fn enumerate_candidates(
    base: &FiniteLang,
    allowed_per_string: &[Vec<Ncfd>],
    strings: &[EventString],
    mut visit: impl FnMut(&FiniteLang),
) {
    let mut idx = vec![0usize; strings.len()];
    loop {
        let mut cand = FiniteLang::empty(base.horizon, base.alphabet.clone());
        for (pos, s) in strings.iter().enumerate() {
            cand.set(s.clone(), allowed_per_string[pos][idx[pos]].clone());
        }
        visit(&cand);
        let mut pos = 0;
        loop {
            if pos == strings.len() {
                return;
            }
            idx[pos] += 1;
            if idx[pos] < allowed_per_string[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Exhaustive oracle: join of every controllable lattice-valued sublanguage of `K`.
pub fn brute_force_supremal(
    k: &FiniteLang,
    m: &FiniteLang,
    uc: &UncontrollabilityMap,
    lattice: &ValueLattice,
) -> Result<FiniteLang, LangError> {
    check_premises(k, m)?;
    let strings = k.strings();
    guard_search(lattice, strings.len())?;
    let allowed: Vec<Vec<Ncfd>> = strings
        .iter()
        .map(|s| {
            let cap = k.get(s);
            lattice.values().iter().filter(|v| v.leq(&cap)).cloned().collect()
        })
        .collect();
    let mut best = FiniteLang::empty(k.horizon, k.alphabet.clone());
    let mut err = None;
    enumerate_candidates(k, &allowed, &strings, |cand| {
        if err.is_some() {
            return;
        }
        match first_violation(cand, m, uc) {
            Ok(None) => best = best.union(cand).expect("compatible by construction"),
            Ok(Some(_)) => {}
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(best),
    }
}

/// Exhaustive oracle: meet of every prefix-closed controllable lattice-valued
/// language between `K` and `M`.
pub fn brute_force_infimal(
    k: &FiniteLang,
    m: &FiniteLang,
    uc: &UncontrollabilityMap,
    lattice: &ValueLattice,
) -> Result<FiniteLang, LangError> {
    check_premises(k, m)?;
    let strings = k.strings();
    guard_search(lattice, strings.len())?;
    let allowed: Vec<Vec<Ncfd>> = strings
        .iter()
        .map(|s| {
            let lo = k.get(s);
            let hi = m.get(s);
            lattice
                .values()
                .iter()
                .filter(|v| lo.leq(v) && v.leq(&hi))
                .cloned()
                .collect()
        })
        .collect();
    let mut best: Option<FiniteLang> = None;
    let mut err = None;
    enumerate_candidates(k, &allowed, &strings, |cand| {
        if err.is_some() || !cand.is_prefix_closed() {
            return;
        }
        match first_violation(cand, m, uc) {
            Ok(None) => {
                best = Some(match best.take() {
                    None => cand.clone(),
                    Some(b) => b.intersect(cand).expect("compatible by construction"),
                });
            }
            Ok(Some(_)) => {}
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    best.ok_or_else(|| {
        LangError::PremiseViolated("no prefix-closed controllable superlanguage exists".to_string())
    })
}
