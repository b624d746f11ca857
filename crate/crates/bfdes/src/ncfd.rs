//! Normal convex fuzzy degrees (NCFD): the scalar type of the bi-fuzzy calculus.
//!
//! An NCFD is a finitely supported type-1 fuzzy set over `[0, 1]`: a list of
//! `(primary value u, secondary grade g)` pairs with strictly increasing `u`,
//! grades in `(0, 1]`, maximum grade exactly 1 (normality) and unimodal grades
//! (convexity). Meet and join extend `min`/`max` over pairs of primary values,
//! taking the best grade witnessing each result value.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Absolute tolerance for all scalar comparisons on primary values and grades.
pub const TOL: f64 = 1e-9;

/// `a == b` up to [`TOL`].
pub fn scalar_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOL
}

#[derive(Debug, Error, PartialEq)]
pub enum NcfdError {
    #[error("empty support: an NCFD needs at least one point")]
    EmptySupport,
    #[error("value out of range: ({u}, {g}) must lie in [0,1] x [0,1]")]
    OutOfRange { u: f64, g: f64 },
    #[error("not normal: maximum grade {max_grade} < 1")]
    NotNormal { max_grade: f64 },
    #[error("not convex: grade {g} at {u} is below both neighbours")]
    NotConvex { u: f64, g: f64 },
    #[error("parse error in NCFD string: {0}")]
    Parse(String),
}

/// A normal convex fuzzy degree with finite support.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Ncfd {
    /// `(u, g)` pairs, strictly ascending in `u`.
    points: Vec<(f64, f64)>,
}

impl Ncfd {
    /// Builds an NCFD from raw `(u, g)` pairs: merges duplicate `u` keeping the
    /// maximum grade, drops zero grades, sorts ascending, then checks the
    /// normality and convexity invariants.
    pub fn canonicalize(raw: &[(f64, f64)]) -> Result<Ncfd, NcfdError> {
        if raw.is_empty() {
            return Err(NcfdError::EmptySupport);
        }
        for &(u, g) in raw {
            if !((-TOL..=1.0 + TOL).contains(&u)) || !((-TOL..=1.0 + TOL).contains(&g)) {
                return Err(NcfdError::OutOfRange { u, g });
            }
        }
        let mut pts: Vec<(f64, f64)> = raw.to_vec();
        pts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
        for (u, g) in pts {
            match merged.last_mut() {
                Some(last) if scalar_eq(last.0, u) => {
                    if g > last.1 {
                        last.1 = g;
                    }
                }
                _ => merged.push((u, g)),
            }
        }
        merged.retain(|&(_, g)| g > TOL);
        if merged.is_empty() {
            return Err(NcfdError::EmptySupport);
        }
        let max_grade = merged.iter().map(|&(_, g)| g).fold(f64::MIN, f64::max);
        if max_grade < 1.0 - TOL {
            return Err(NcfdError::NotNormal { max_grade });
        }
        // Unimodality: once grades strictly decrease they must never rise again.
        let mut decreased = false;
        for w in merged.windows(2) {
            if w[1].1 < w[0].1 - TOL {
                decreased = true;
            } else if w[1].1 > w[0].1 + TOL && decreased {
                return Err(NcfdError::NotConvex { u: w[1].0, g: w[1].1 });
            }
        }
        Ok(Ncfd { points: Ncfd::reduce(merged) })
    }

    /// Like [`Ncfd::canonicalize`] but repairs convexity dips by raising each
    /// grade to its convex hull value instead of rejecting them. Meet and join
    /// of gapped supports land here: the raw pair enumeration can dip below
    /// the hull at interior points where an operand has a support gap.
    fn canonical_hull(raw: &[(f64, f64)]) -> Result<Ncfd, NcfdError> {
        let mut pts: Vec<(f64, f64)> = raw.to_vec();
        pts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
        for (u, g) in pts {
            match merged.last_mut() {
                Some(last) if scalar_eq(last.0, u) => {
                    if g > last.1 {
                        last.1 = g;
                    }
                }
                _ => merged.push((u, g)),
            }
        }
        merged.retain(|&(_, g)| g > TOL);
        if merged.is_empty() {
            return Err(NcfdError::EmptySupport);
        }
        let max_grade = merged.iter().map(|&(_, g)| g).fold(f64::MIN, f64::max);
        if max_grade < 1.0 - TOL {
            return Err(NcfdError::NotNormal { max_grade });
        }
        let n = merged.len();
        let mut left = vec![0.0; n];
        let mut right = vec![0.0; n];
        let mut acc = 0.0f64;
        for i in 0..n {
            acc = acc.max(merged[i].1);
            left[i] = acc;
        }
        acc = 0.0;
        for i in (0..n).rev() {
            acc = acc.max(merged[i].1);
            right[i] = acc;
        }
        for i in 0..n {
            merged[i].1 = left[i].min(right[i]);
        }
        Ok(Ncfd { points: Ncfd::reduce(merged) })
    }

    /// Reduces unimodal points to the unique minimal support with the same
    /// convex hull, so that hull-equal degrees compare equal and the lattice
    /// laws hold: on the rising side keep the first point of each equal-grade
    /// run, on the falling side the last, and only the endpoints of the
    /// grade-1 plateau.
    fn reduce(merged: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
        let peak_first = merged.iter().position(|&(_, g)| g >= 1.0 - TOL).expect("normal");
        let peak_last = merged.iter().rposition(|&(_, g)| g >= 1.0 - TOL).expect("normal");
        let n = merged.len();
        merged
            .iter()
            .enumerate()
            .filter(|&(i, &(_, g))| {
                if i == 0 || i == n - 1 {
                    true
                } else if i < peak_first {
                    !scalar_eq(g, merged[i - 1].1)
                } else if i > peak_last {
                    !scalar_eq(g, merged[i + 1].1)
                } else {
                    i == peak_first || i == peak_last
                }
            })
            .map(|(_, &p)| p)
            .collect()
    }

    /// Singleton degree `1/u`.
    pub fn singleton(u: f64) -> Ncfd {
        Ncfd::canonicalize(&[(u, 1.0)]).expect("singleton in range")
    }

    /// `1/0`, the bottom of the NCFD lattice.
    pub fn bottom() -> Ncfd {
        Ncfd::singleton(0.0)
    }

    /// `1/1`, the top of the NCFD lattice.
    pub fn top() -> Ncfd {
        Ncfd::singleton(1.0)
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn support_len(&self) -> usize {
        self.points.len()
    }

    fn combine(a: &Ncfd, b: &Ncfd, pick: fn(f64, f64) -> f64) -> Ncfd {
        let mut raw = Vec::with_capacity(a.points.len() * b.points.len());
        for &(u, ga) in &a.points {
            for &(w, gb) in &b.points {
                raw.push((pick(u, w), ga.min(gb)));
            }
        }
        Ncfd::canonical_hull(&raw).expect("meet/join of normal convex operands is normal convex")
    }

    /// Meet (⊓): grade at `v` is the best `min(g_a, g_b)` over pairs with `min(u, w) = v`.
    pub fn meet(&self, other: &Ncfd) -> Ncfd {
        Ncfd::combine(self, other, f64::min)
    }

    /// Join (⊔): dual of meet with `max(u, w)`.
    pub fn join(&self, other: &Ncfd) -> Ncfd {
        Ncfd::combine(self, other, f64::max)
    }

    /// Complement: reflects every point to `(1 - u, g)`.
    pub fn complement(&self) -> Ncfd {
        let raw: Vec<(f64, f64)> = self.points.iter().map(|&(u, g)| (1.0 - u, g)).collect();
        Ncfd::canonicalize(&raw).expect("reflection preserves the invariants")
    }

    /// Inclusion (⊑): `a ⊑ b` iff `a ⊓ b = a`.
    pub fn leq(&self, other: &Ncfd) -> bool {
        self.meet(other) == *self
    }

    /// Center of gravity `Σ(u·g) / Σ(g)`, the ranking key.
    pub fn centroid(&self) -> f64 {
        let num: f64 = self.points.iter().map(|&(u, g)| u * g).sum();
        let den: f64 = self.points.iter().map(|&(_, g)| g).sum();
        num / den
    }

    /// Centroid ranking (⪰): ties count as greater-or-equal.
    pub fn rank_geq(&self, other: &Ncfd) -> bool {
        self.centroid() >= other.centroid() - TOL
    }

    /// Quantized key for hashing/dedup of state vectors; stable at [`TOL`] resolution.
    pub fn quantized(&self) -> Vec<(i64, i64)> {
        self.points
            .iter()
            .map(|&(u, g)| ((u / TOL).round() as i64, (g / TOL).round() as i64))
            .collect()
    }
}

impl PartialEq for Ncfd {
    fn eq(&self, other: &Self) -> bool {
        self.points.len() == other.points.len()
            && self
                .points
                .iter()
                .zip(&other.points)
                .all(|(a, b)| scalar_eq(a.0, b.0) && scalar_eq(a.1, b.1))
    }
}

fn fmt_num(v: f64) -> String {
    let rounded = (v / TOL).round() * TOL;
    let s = format!("{rounded:.9}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() { "0".to_string() } else { s.to_string() }
}

impl fmt::Display for Ncfd {
    /// Sum-of-terms form `g1/u1 + g2/u2 + ...`, terms ascending in `u`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .points
            .iter()
            .map(|&(u, g)| format!("{}/{}", fmt_num(g), fmt_num(u)))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl FromStr for Ncfd {
    type Err = NcfdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut raw = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(NcfdError::Parse(format!("empty term in {s:?}")));
            }
            let (g, u) = term
                .split_once('/')
                .ok_or_else(|| NcfdError::Parse(format!("term {term:?} is not of the form g/u")))?;
            let g: f64 = g
                .trim()
                .parse()
                .map_err(|_| NcfdError::Parse(format!("bad grade in term {term:?}")))?;
            let u: f64 = u
                .trim()
                .parse()
                .map_err(|_| NcfdError::Parse(format!("bad primary value in term {term:?}")))?;
            raw.push((u, g));
        }
        Ncfd::canonicalize(&raw)
    }
}

impl TryFrom<String> for Ncfd {
    type Error = NcfdError;
    fn try_from(s: String) -> Result<Self, NcfdError> {
        s.parse()
    }
}

impl From<Ncfd> for String {
    fn from(n: Ncfd) -> String {
        n.to_string()
    }
}

/// Uniform discretization step for turning interval degrees into NCFDs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    step: f64,
}

impl GridSpec {
    pub fn new(step: f64) -> Result<GridSpec, NcfdError> {
        if !(step > 0.0 && step <= 1.0) {
            return Err(NcfdError::OutOfRange { u: step, g: 1.0 });
        }
        let n = 1.0 / step;
        if !scalar_eq(n, n.round()) {
            return Err(NcfdError::Parse(format!("grid step {step} does not divide 1 evenly")));
        }
        Ok(GridSpec { step })
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// Grid points falling inside `[lo, hi]` (inclusive, with tolerance).
    pub fn points_in(&self, lo: f64, hi: f64) -> Vec<f64> {
        let n = (1.0 / self.step).round() as i64;
        (0..=n)
            .map(|k| k as f64 * self.step)
            .filter(|&u| u >= lo - TOL && u <= hi + TOL)
            .collect()
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { step: 0.05 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> Ncfd {
        s.parse().unwrap()
    }

    #[test]
    fn canonicalize_merges_and_sorts() {
        let a = Ncfd::canonicalize(&[(0.9, 1.0), (1.0, 0.8)]).unwrap();
        assert_eq!(a, n("1/0.9 + 0.8/1"));

        let b = Ncfd::canonicalize(&[(0.5, 1.0), (0.5, 0.3)]).unwrap();
        assert_eq!(b, n("1/0.5"));
    }

    #[test]
    fn canonicalize_rejects_invalid() {
        assert_eq!(Ncfd::canonicalize(&[]), Err(NcfdError::EmptySupport));
        assert!(matches!(
            Ncfd::canonicalize(&[(0.2, 0.4), (0.6, 1.0), (0.4, 0.1)]),
            Err(NcfdError::NotConvex { .. })
        ));
        assert!(matches!(
            Ncfd::canonicalize(&[(0.3, 0.5)]),
            Err(NcfdError::NotNormal { .. })
        ));
        assert!(matches!(
            Ncfd::canonicalize(&[(1.2, 1.0)]),
            Err(NcfdError::OutOfRange { .. })
        ));
    }

    #[test]
    fn meet_identities() {
        let x = n("1/0.6 + 0.6/0.9");
        assert_eq!(Ncfd::top().meet(&x), x);
        assert_eq!(Ncfd::bottom().meet(&x), Ncfd::bottom());
        assert_eq!(
            n("1/0.6 + 0.6/0.9").meet(&n("1/0.9 + 0.8/1")),
            n("1/0.6 + 0.6/0.9")
        );
    }

    #[test]
    fn join_identities() {
        let x = n("1/0.6 + 0.6/0.9");
        assert_eq!(Ncfd::bottom().join(&x), x);
        assert_eq!(Ncfd::top().join(&x), Ncfd::top());
        assert_eq!(
            n("1/0.3 + 0.7/0.6").join(&n("1/0.6 + 0.6/0.9")),
            n("1/0.6 + 0.6/0.9")
        );
    }

    #[test]
    fn complement_reflects() {
        assert_eq!(Ncfd::singleton(0.9).complement(), Ncfd::singleton(0.1));
        let x = n("1/0.3 + 0.7/0.6");
        assert_eq!(x.complement(), n("0.7/0.4 + 1/0.7"));
        assert_eq!(x.complement().complement(), x);
    }

    #[test]
    fn leq_examples() {
        let x = n("1/0.6 + 0.6/0.9");
        assert!(x.leq(&x));
        assert!(!x.leq(&n("1/0.3 + 0.7/0.6")));
        assert!(Ncfd::bottom().leq(&x));
    }

    #[test]
    fn centroid_and_ranking() {
        assert!(scalar_eq(Ncfd::singleton(0.7).centroid(), 0.7));
        // Segment-midpoint grid forms of the two treatment-regimen degrees.
        let a = Ncfd::canonicalize(&[(0.55, 0.5), (0.65, 1.0), (0.75, 0.75), (0.85, 0.25)]).unwrap();
        let b = Ncfd::canonicalize(&[(0.55, 0.75), (0.65, 1.0), (0.75, 0.75), (0.85, 0.5)]).unwrap();
        assert!(scalar_eq(a.centroid(), 0.68));
        assert!((b.centroid() - 0.6833333333).abs() < 1e-6);
        assert!(b.rank_geq(&a));
        assert!(!a.rank_geq(&b));
        assert!(a.rank_geq(&a));
        assert!(!Ncfd::singleton(0.3).rank_geq(&Ncfd::singleton(0.9)));
    }

    #[test]
    fn display_roundtrip() {
        let x = n("1/0.6 + 0.6/0.9");
        assert_eq!(x.to_string(), "1/0.6 + 0.6/0.9");
        assert_eq!(x.to_string().parse::<Ncfd>().unwrap(), x);
        // Parser accepts arbitrary term order and whitespace.
        assert_eq!(n("0.6/0.9+1/0.6"), x);
    }

    #[test]
    fn grid_spec() {
        assert!(GridSpec::new(0.05).is_ok());
        assert!(GridSpec::new(0.3).is_err());
        let g = GridSpec::default();
        let pts = g.points_in(0.1, 0.2);
        assert_eq!(pts.len(), 3);
        for (p, want) in pts.iter().zip([0.1, 0.15, 0.2]) {
            assert!(scalar_eq(*p, want));
        }
    }
}
