//! State-based acceptance conditions and their evaluation on sets of states.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::stateset::StateSet;

/// A Rabin or Streett pair. `bad` is the `E` component and `good` the `F`
/// component in both readings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pair {
    pub bad: StateSet,
    pub good: StateSet,
}

impl Pair {
    pub fn new(bad: StateSet, good: StateSet) -> Self {
        Pair { bad, good }
    }

    /// The pair with its components exchanged.
    pub fn swapped(&self) -> Pair {
        Pair::new(self.good.clone(), self.bad.clone())
    }

    /// Rabin reading: avoid `bad`, meet `good`.
    pub fn rabin_holds(&self, s: &StateSet) -> bool {
        !s.intersects(&self.bad) && s.intersects(&self.good)
    }

    /// Streett reading: avoid `bad` or meet `good`.
    pub fn streett_holds(&self, s: &StateSet) -> bool {
        !s.intersects(&self.bad) || s.intersects(&self.good)
    }

    fn map_sets(&self, f: &impl Fn(&StateSet) -> StateSet) -> Pair {
        Pair::new(f(&self.bad), f(&self.good))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AcceptanceKind {
    Buchi,
    CoBuchi,
    Parity,
    Rabin,
    Streett,
    Weak,
}

impl AcceptanceKind {
    pub fn keyword(self) -> &'static str {
        match self {
            AcceptanceKind::Buchi => "buchi",
            AcceptanceKind::CoBuchi => "cobuchi",
            AcceptanceKind::Parity => "parity",
            AcceptanceKind::Rabin => "rabin",
            AcceptanceKind::Streett => "streett",
            AcceptanceKind::Weak => "weak",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            AcceptanceKind::Buchi => "Büchi",
            AcceptanceKind::CoBuchi => "co-Büchi",
            AcceptanceKind::Parity => "parity",
            AcceptanceKind::Rabin => "Rabin",
            AcceptanceKind::Streett => "Streett",
            AcceptanceKind::Weak => "weak",
        }
    }
}

impl fmt::Display for AcceptanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// An acceptance condition over the states of one automaton.
///
/// Parity uses the min-even convention: a set is accepting iff the least
/// priority occurring in it is even.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Acceptance {
    Buchi(StateSet),
    CoBuchi(StateSet),
    /// Priority of every state, indexed by state.
    Parity(Vec<u32>),
    Rabin(Vec<Pair>),
    Streett(Vec<Pair>),
    /// A Büchi set whose strongly connected components are homogeneous.
    Weak(StateSet),
}

impl Acceptance {
    pub fn kind(&self) -> AcceptanceKind {
        match self {
            Acceptance::Buchi(_) => AcceptanceKind::Buchi,
            Acceptance::CoBuchi(_) => AcceptanceKind::CoBuchi,
            Acceptance::Parity(_) => AcceptanceKind::Parity,
            Acceptance::Rabin(_) => AcceptanceKind::Rabin,
            Acceptance::Streett(_) => AcceptanceKind::Streett,
            Acceptance::Weak(_) => AcceptanceKind::Weak,
        }
    }

    /// Decides whether `s` (an inf-set) satisfies the condition.
    pub fn satisfies(&self, s: &StateSet) -> Result<bool> {
        Ok(match self {
            Acceptance::Buchi(f) | Acceptance::Weak(f) => s.intersects(f),
            Acceptance::CoBuchi(f) => !s.intersects(f),
            Acceptance::Parity(prio) => {
                if s.is_empty() {
                    return Err(Error::ParityOnEmptySet);
                }
                let mut min = u32::MAX;
                for q in s.iter() {
                    let p = *prio.get(q).ok_or(Error::ForeignState(q))?;
                    min = min.min(p);
                }
                min % 2 == 0
            }
            Acceptance::Rabin(pairs) => pairs.iter().any(|p| p.rabin_holds(s)),
            Acceptance::Streett(pairs) => pairs.iter().all(|p| p.streett_holds(s)),
        })
    }

    /// Largest state index mentioned by the condition.
    pub fn max_state(&self) -> Option<usize> {
        match self {
            Acceptance::Buchi(f) | Acceptance::CoBuchi(f) | Acceptance::Weak(f) => f.last(),
            Acceptance::Parity(prio) => prio.len().checked_sub(1),
            Acceptance::Rabin(pairs) | Acceptance::Streett(pairs) => pairs
                .iter()
                .filter_map(|p| p.bad.last().max(p.good.last()))
                .max(),
        }
    }

    /// Rabin pairs expressing the same condition over `n` states, when the
    /// condition is Rabin-expressible (everything except Streett).
    pub fn rabin_pairs(&self, n: usize) -> Option<Vec<Pair>> {
        match self {
            Acceptance::Buchi(f) | Acceptance::Weak(f) => {
                Some(vec![Pair::new(StateSet::new(), f.clone())])
            }
            Acceptance::CoBuchi(f) => Some(vec![Pair::new(f.clone(), StateSet::full(n))]),
            Acceptance::Parity(prio) => Some(parity_rabin_ladder(prio)),
            Acceptance::Rabin(pairs) => Some(pairs.clone()),
            Acceptance::Streett(_) => None,
        }
    }

    /// Streett pairs expressing the same condition over `n` states, when the
    /// condition is Streett-expressible (everything except Rabin).
    pub fn streett_pairs(&self, n: usize) -> Option<Vec<Pair>> {
        match self {
            Acceptance::Buchi(f) | Acceptance::Weak(f) => {
                Some(vec![Pair::new(StateSet::full(n), f.clone())])
            }
            Acceptance::CoBuchi(f) => Some(vec![Pair::new(f.clone(), StateSet::new())]),
            Acceptance::Parity(prio) => Some(parity_streett_ladder(prio)),
            Acceptance::Streett(pairs) => Some(pairs.clone()),
            Acceptance::Rabin(_) => None,
        }
    }

    /// The condition satisfied by exactly the nonempty sets that do not
    /// satisfy `self`. Rabin and Streett exchange with swapped pairs.
    pub fn negation(&self) -> Acceptance {
        match self {
            Acceptance::Buchi(f) | Acceptance::Weak(f) => Acceptance::CoBuchi(f.clone()),
            Acceptance::CoBuchi(f) => Acceptance::Buchi(f.clone()),
            Acceptance::Parity(prio) => Acceptance::Parity(prio.iter().map(|p| p + 1).collect()),
            Acceptance::Rabin(pairs) => Acceptance::Streett(pairs.iter().map(Pair::swapped).collect()),
            Acceptance::Streett(pairs) => Acceptance::Rabin(pairs.iter().map(Pair::swapped).collect()),
        }
    }

    /// Lifts the condition through `tau`: new state `m` carries the role of
    /// old state `tau[m]`.
    pub fn pullback(&self, tau: &[usize]) -> Acceptance {
        let lift = |s: &StateSet| -> StateSet {
            tau.iter()
                .enumerate()
                .filter(|(_, &q)| s.contains(q))
                .map(|(m, _)| m)
                .collect()
        };
        self.map_sets(&lift, |prio| tau.iter().map(|&q| prio[q]).collect())
    }

    /// Renames states through `keep`, dropping those mapped to `None`.
    pub fn restrict(&self, keep: &[Option<usize>]) -> Acceptance {
        let rename = |s: &StateSet| -> StateSet { s.iter().filter_map(|q| keep.get(q).copied().flatten()).collect() };
        self.map_sets(&rename, |prio| {
            keep.iter()
                .enumerate()
                .filter(|(_, k)| k.is_some())
                .map(|(q, _)| prio[q])
                .collect()
        })
    }

    /// Same condition over `n` states with a fresh state `n` that is
    /// rejecting in every reading.
    pub fn with_rejecting_sink(&self, n: usize) -> Acceptance {
        match self {
            Acceptance::Buchi(f) => Acceptance::Buchi(f.clone()),
            Acceptance::Weak(f) => Acceptance::Weak(f.clone()),
            Acceptance::CoBuchi(f) => {
                let mut f = f.clone();
                f.insert(n);
                Acceptance::CoBuchi(f)
            }
            Acceptance::Parity(prio) => {
                let max = prio.iter().copied().max().unwrap_or(0);
                let sink = if max % 2 == 1 { max } else { max + 1 };
                let mut prio = prio.clone();
                prio.push(sink);
                Acceptance::Parity(prio)
            }
            Acceptance::Rabin(pairs) => Acceptance::Rabin(
                pairs
                    .iter()
                    .map(|p| {
                        let mut bad = p.bad.clone();
                        bad.insert(n);
                        Pair::new(bad, p.good.clone())
                    })
                    .collect(),
            ),
            Acceptance::Streett(pairs) => {
                let mut pairs = pairs.clone();
                pairs.push(Pair::new(StateSet::singleton(n), StateSet::new()));
                Acceptance::Streett(pairs)
            }
        }
    }

    /// Shifts parity priorities down by the largest even amount that keeps
    /// them nonnegative. Other conditions are returned unchanged.
    pub fn normalized(&self) -> Acceptance {
        match self {
            Acceptance::Parity(prio) => {
                let min = prio.iter().copied().min().unwrap_or(0);
                let shift = min - min % 2;
                Acceptance::Parity(prio.iter().map(|p| p - shift).collect())
            }
            other => other.clone(),
        }
    }

    fn map_sets(&self, f: &impl Fn(&StateSet) -> StateSet, parity: impl Fn(&[u32]) -> Vec<u32>) -> Acceptance {
        match self {
            Acceptance::Buchi(s) => Acceptance::Buchi(f(s)),
            Acceptance::CoBuchi(s) => Acceptance::CoBuchi(f(s)),
            Acceptance::Weak(s) => Acceptance::Weak(f(s)),
            Acceptance::Parity(prio) => Acceptance::Parity(parity(prio)),
            Acceptance::Rabin(pairs) => Acceptance::Rabin(pairs.iter().map(|p| p.map_sets(f)).collect()),
            Acceptance::Streett(pairs) => Acceptance::Streett(pairs.iter().map(|p| p.map_sets(f)).collect()),
        }
    }
}

fn priorities_present(prio: &[u32]) -> Vec<u32> {
    let mut ps: Vec<u32> = prio.to_vec();
    ps.sort_unstable();
    ps.dedup();
    ps
}

/// Min-even parity as Rabin pairs: for every even priority `p` that occurs,
/// the pair (priorities below `p`, priority `p`).
pub fn parity_rabin_ladder(prio: &[u32]) -> Vec<Pair> {
    priorities_present(prio)
        .into_iter()
        .filter(|p| p % 2 == 0)
        .map(|p| {
            let bad = (0..prio.len()).filter(|&q| prio[q] < p).collect();
            let good = (0..prio.len()).filter(|&q| prio[q] == p).collect();
            Pair::new(bad, good)
        })
        .collect()
}

/// Min-even parity as Streett pairs: for every odd priority `p` that occurs,
/// the pair (priority `p`, priorities below `p`).
pub fn parity_streett_ladder(prio: &[u32]) -> Vec<Pair> {
    priorities_present(prio)
        .into_iter()
        .filter(|p| p % 2 == 1)
        .map(|p| {
            let bad = (0..prio.len()).filter(|&q| prio[q] == p).collect();
            let good = (0..prio.len()).filter(|&q| prio[q] < p).collect();
            Pair::new(bad, good)
        })
        .collect()
}

/// A disjunction of Streett conditions, closed under conjunction.
///
/// Every acceptance kind, and every boolean combination used by the
/// product constructions, normalizes into this shape; the emptiness search
/// works on it directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralCondition {
    pub disjuncts: Vec<Vec<Pair>>,
}

impl GeneralCondition {
    pub fn from_acceptance(acc: &Acceptance, n: usize) -> Self {
        let disjuncts = match acc {
            Acceptance::Rabin(pairs) => pairs
                .iter()
                .map(|p| {
                    vec![
                        Pair::new(p.bad.clone(), StateSet::new()),
                        Pair::new(StateSet::full(n), p.good.clone()),
                    ]
                })
                .collect(),
            other => vec![other.streett_pairs(n).expect("Streett-expressible")],
        };
        GeneralCondition { disjuncts }
    }

    /// The condition that holds on every nonempty set.
    pub fn always() -> Self {
        GeneralCondition { disjuncts: vec![Vec::new()] }
    }

    pub fn holds(&self, s: &StateSet) -> bool {
        self.disjuncts
            .iter()
            .any(|conj| conj.iter().all(|p| p.streett_holds(s)))
    }

    pub fn and(&self, other: &GeneralCondition) -> GeneralCondition {
        let mut disjuncts = Vec::with_capacity(self.disjuncts.len() * other.disjuncts.len());
        for a in &self.disjuncts {
            for b in &other.disjuncts {
                disjuncts.push(a.iter().chain(b).cloned().collect());
            }
        }
        GeneralCondition { disjuncts }
    }

    pub fn or(&self, other: &GeneralCondition) -> GeneralCondition {
        GeneralCondition {
            disjuncts: self.disjuncts.iter().chain(&other.disjuncts).cloned().collect(),
        }
    }

    /// Lifts the condition through the projection `proj` (new state `x`
    /// plays the role of old state `proj[x]`).
    pub fn pullback(&self, proj: &[usize]) -> GeneralCondition {
        let lift = |s: &StateSet| -> StateSet {
            proj.iter()
                .enumerate()
                .filter(|(_, &q)| s.contains(q))
                .map(|(x, _)| x)
                .collect()
        };
        GeneralCondition {
            disjuncts: self
                .disjuncts
                .iter()
                .map(|conj| conj.iter().map(|p| p.map_sets(&lift)).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> StateSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn buchi_intersection() {
        let acc = Acceptance::Buchi(set(&[1]));
        assert!(acc.satisfies(&set(&[0, 1])).unwrap());
        assert!(!acc.satisfies(&set(&[0])).unwrap());
    }

    #[test]
    fn parity_min_even() {
        // q0 -> 0, q1 -> 1, q2 -> 2
        let acc = Acceptance::Parity(vec![0, 1, 2]);
        assert!(!acc.satisfies(&set(&[1, 2])).unwrap());
        assert!(acc.satisfies(&set(&[0, 1, 2])).unwrap());
        assert!(acc.satisfies(&set(&[2])).unwrap());
        assert_eq!(acc.satisfies(&StateSet::new()), Err(Error::ParityOnEmptySet));
        assert_eq!(acc.satisfies(&set(&[5])), Err(Error::ForeignState(5)));
    }

    #[test]
    fn degenerate_pairs() {
        let rabin = Acceptance::Rabin(vec![Pair::new(StateSet::new(), StateSet::new())]);
        let streett = Acceptance::Streett(vec![]);
        for s in [set(&[0]), set(&[0, 1, 2])] {
            assert!(!rabin.satisfies(&s).unwrap());
            assert!(streett.satisfies(&s).unwrap());
        }
    }

    #[test]
    fn ladders_agree_with_parity() {
        let prio = vec![3, 0, 2, 1, 4];
        let acc = Acceptance::Parity(prio.clone());
        let rabin = Acceptance::Rabin(parity_rabin_ladder(&prio));
        let streett = Acceptance::Streett(parity_streett_ladder(&prio));
        for mask in 1u64..32 {
            let s = StateSet::from_mask(mask, &[0, 1, 2, 3, 4]);
            let expect = acc.satisfies(&s).unwrap();
            assert_eq!(rabin.satisfies(&s).unwrap(), expect);
            assert_eq!(streett.satisfies(&s).unwrap(), expect);
        }
    }

    #[test]
    fn general_condition_matches_each_kind() {
        let n = 4;
        let conditions = vec![
            Acceptance::Buchi(set(&[1])),
            Acceptance::CoBuchi(set(&[1, 2])),
            Acceptance::Parity(vec![1, 2, 3, 0]),
            Acceptance::Rabin(vec![Pair::new(set(&[0]), set(&[1])), Pair::new(set(&[]), set(&[3]))]),
            Acceptance::Streett(vec![Pair::new(set(&[0]), set(&[1])), Pair::new(set(&[2]), set(&[3]))]),
            Acceptance::Weak(set(&[2, 3])),
        ];
        for acc in &conditions {
            let gc = GeneralCondition::from_acceptance(acc, n);
            let neg = GeneralCondition::from_acceptance(&acc.negation(), n);
            for mask in 1u64..16 {
                let s = StateSet::from_mask(mask, &[0, 1, 2, 3]);
                let v = acc.satisfies(&s).unwrap();
                assert_eq!(gc.holds(&s), v, "{acc:?} on {s:?}");
                assert_eq!(neg.holds(&s), !v, "negation of {acc:?} on {s:?}");
            }
        }
    }

    #[test]
    fn sink_is_rejecting() {
        let n = 2;
        let conditions = vec![
            Acceptance::Buchi(set(&[1])),
            Acceptance::CoBuchi(set(&[])),
            Acceptance::Parity(vec![0, 2]),
            Acceptance::Rabin(vec![Pair::new(set(&[]), set(&[0, 1]))]),
            Acceptance::Streett(vec![]),
        ];
        for acc in conditions {
            let with = acc.with_rejecting_sink(n);
            assert!(!with.satisfies(&StateSet::singleton(n)).unwrap(), "{acc:?}");
            assert_eq!(with.satisfies(&set(&[0])).unwrap(), acc.satisfies(&set(&[0])).unwrap());
        }
    }

    #[test]
    fn pullback_lifts_sets() {
        let acc = Acceptance::Parity(vec![0, 1, 2]);
        // memories m0 -> q0, m1 -> q1, m1' -> q1, m2 -> q2
        assert_eq!(acc.pullback(&[0, 1, 1, 2]), Acceptance::Parity(vec![0, 1, 1, 2]));
        let b = Acceptance::Buchi(set(&[1]));
        assert_eq!(b.pullback(&[0, 1, 1, 2]), Acceptance::Buchi(set(&[1, 2])));
    }
}
