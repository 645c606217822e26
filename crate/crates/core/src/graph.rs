//! Letter-erased graph algorithms: strongly connected components,
//! reachability and enumeration of cycle sets.
//!
//! Graphs are successor lists indexed by node. Most functions take an
//! optional `allowed` set restricting the graph to an induced subgraph.

use crate::error::{Error, Result};
use crate::stateset::StateSet;

/// Default bound on the size of a region enumerated by [`cycle_sets`].
pub const DEFAULT_CAP: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Members in increasing order.
    pub states: Vec<usize>,
    /// True iff the component contains a cycle (more than one member, or a
    /// self-loop on its only member).
    pub nontrivial: bool,
}

impl Component {
    pub fn to_set(&self) -> StateSet {
        self.states.iter().copied().collect()
    }
}

fn admits(allowed: Option<&StateSet>, q: usize) -> bool {
    allowed.is_none_or(|s| s.contains(q))
}

/// Tarjan's algorithm, iterative. Components are returned sorted by their
/// least member.
pub fn sccs(succ: &[Vec<usize>], allowed: Option<&StateSet>) -> Vec<Component> {
    let n = succ.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0;
    let mut out = Vec::new();

    for root in 0..n {
        if !admits(allowed, root) || index[root] != usize::MAX {
            continue;
        }
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        call.push((root, 0));

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < succ[v].len() {
                let w = succ[v][*pos];
                *pos += 1;
                if !admits(allowed, w) {
                    continue;
                }
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(u, _)) = call.last() {
                    low[u] = low[u].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut states = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        states.push(w);
                        if w == v {
                            break;
                        }
                    }
                    states.sort_unstable();
                    let nontrivial = states.len() > 1 || succ[v].contains(&v);
                    out.push(Component { states, nontrivial });
                }
            }
        }
    }
    out.sort_by_key(|c| c.states[0]);
    out
}

/// Forward closure of `from` (intersected with `allowed`).
pub fn reachable(succ: &[Vec<usize>], from: &StateSet, allowed: Option<&StateSet>) -> StateSet {
    let mut seen = StateSet::new();
    let mut work: Vec<usize> = from.iter().filter(|&q| admits(allowed, q)).collect();
    for &q in &work {
        seen.insert(q);
    }
    while let Some(q) = work.pop() {
        for &r in &succ[q] {
            if admits(allowed, r) && seen.insert(r) {
                work.push(r);
            }
        }
    }
    seen
}

pub fn reverse(succ: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut pred = vec![Vec::new(); succ.len()];
    for (q, ts) in succ.iter().enumerate() {
        for &r in ts {
            pred[r].push(q);
        }
    }
    pred
}

/// True iff `set` is nonempty, induces a strongly connected subgraph, and
/// every member lies on a cycle inside it.
pub fn is_cycle_set(succ: &[Vec<usize>], set: &StateSet) -> bool {
    let Some(first) = set.first() else {
        return false;
    };
    if set.len() == 1 {
        return succ[first].contains(&first);
    }
    let fwd = reachable(succ, &StateSet::singleton(first), Some(set));
    if fwd != *set {
        return false;
    }
    let pred = reverse(succ);
    reachable(&pred, &StateSet::singleton(first), Some(set)) == *set
}

/// Local bitmask view of a region of at most 63 nodes.
#[derive(Clone, Debug)]
pub(crate) struct Region {
    pub locals: Vec<usize>,
    pub adj: Vec<u64>,
    pub radj: Vec<u64>,
}

impl Region {
    pub fn new(succ: &[Vec<usize>], members: &[usize]) -> Self {
        let pos = |q: usize| members.iter().position(|&x| x == q);
        let mut adj = vec![0u64; members.len()];
        let mut radj = vec![0u64; members.len()];
        for (i, &q) in members.iter().enumerate() {
            for &r in &succ[q] {
                if let Some(j) = pos(r) {
                    adj[i] |= 1 << j;
                    radj[j] |= 1 << i;
                }
            }
        }
        Region {
            locals: members.to_vec(),
            adj,
            radj,
        }
    }

    pub fn local(&self, q: usize) -> Option<usize> {
        self.locals.iter().position(|&x| x == q)
    }

    /// Nodes of `mask` reachable from the nodes of `seed` inside `mask`,
    /// following `edges`.
    pub fn closure(edges: &[u64], seed: u64, mask: u64) -> u64 {
        let mut reach = seed & mask;
        let mut frontier = reach;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let i = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= edges[i];
            }
            next &= mask & !reach;
            reach |= next;
            frontier = next;
        }
        reach
    }

    pub fn strongly_connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let start = mask.trailing_zeros() as usize;
        if mask.count_ones() == 1 {
            return self.adj[start] & mask != 0;
        }
        let seed = 1 << start;
        Self::closure(&self.adj, seed, mask) == mask && Self::closure(&self.radj, seed, mask) == mask
    }
}

/// Lazy enumeration of cycle sets; see [`cycle_sets`].
#[derive(Debug)]
pub struct CycleSets {
    regions: Vec<(Region, u64)>,
    current: usize,
    next_mask: u64,
}

impl Iterator for CycleSets {
    type Item = StateSet;

    fn next(&mut self) -> Option<StateSet> {
        while let Some((region, anchor_bit)) = self.regions.get(self.current) {
            let limit = 1u64 << region.locals.len();
            while self.next_mask < limit {
                let mask = self.next_mask;
                self.next_mask += 1;
                if mask & anchor_bit != *anchor_bit {
                    continue;
                }
                if region.strongly_connected(mask) {
                    return Some(StateSet::from_mask(mask, &region.locals));
                }
            }
            self.current += 1;
            self.next_mask = 1;
        }
        None
    }
}

/// Enumerates every set `C ⊆ restrict` (containing `anchor`, when given)
/// that induces a strongly connected subgraph with every member on a cycle
/// inside `C`. These are exactly the possible inf-sets of runs confined to
/// `restrict`.
///
/// Each such set lies inside one nontrivial component of the restricted
/// graph; enumeration is per component, and any component to be enumerated
/// that is larger than `cap` (or than 63) is an error.
pub fn cycle_sets(
    succ: &[Vec<usize>],
    restrict: &StateSet,
    anchor: Option<usize>,
    cap: usize,
) -> Result<CycleSets> {
    let mut regions = Vec::new();
    if anchor.is_none_or(|q| restrict.contains(q)) {
        for comp in sccs(succ, Some(restrict)) {
            if !comp.nontrivial {
                continue;
            }
            if let Some(q) = anchor {
                if !comp.states.contains(&q) {
                    continue;
                }
            }
            if comp.states.len() > cap.min(63) {
                return Err(Error::EnumerationCap {
                    region: comp.states.len(),
                    cap,
                });
            }
            let region = Region::new(succ, &comp.states);
            let anchor_bit = anchor.and_then(|q| region.local(q)).map_or(0, |i| 1u64 << i);
            regions.push((region, anchor_bit));
        }
    }
    Ok(CycleSets {
        regions,
        current: 0,
        next_mask: 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> StateSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn tarjan_components() {
        // 0 <-> 1, 1 -> 2, 2 -> 3, 3 -> 2, 4 isolated with self loop, 5 isolated
        let succ = vec![vec![1], vec![0, 2], vec![3], vec![2], vec![4], vec![]];
        let comps = sccs(&succ, None);
        assert_eq!(
            comps,
            vec![
                Component { states: vec![0, 1], nontrivial: true },
                Component { states: vec![2, 3], nontrivial: true },
                Component { states: vec![4], nontrivial: true },
                Component { states: vec![5], nontrivial: false },
            ]
        );
        let restricted = sccs(&succ, Some(&set(&[0, 2, 3])));
        assert_eq!(restricted[0], Component { states: vec![0], nontrivial: false });
    }

    #[test]
    fn reachability_respects_restriction() {
        let succ = vec![vec![1], vec![2], vec![0]];
        assert_eq!(reachable(&succ, &set(&[0]), None), set(&[0, 1, 2]));
        assert_eq!(reachable(&succ, &set(&[0]), Some(&set(&[0, 2]))), set(&[0]));
        assert!(reachable(&succ, &StateSet::new(), None).is_empty());
    }

    #[test]
    fn cycle_sets_of_triangle_with_chords() {
        // 0 -> 1 -> 2 -> 0, and 0 -> 0
        let succ = vec![vec![0, 1], vec![2], vec![0]];
        let all: Vec<_> = cycle_sets(&succ, &set(&[0, 1, 2]), None, 22).unwrap().collect();
        assert_eq!(all, vec![set(&[0]), set(&[0, 1, 2])]);
        for c in &all {
            assert!(is_cycle_set(&succ, c));
        }
        let anchored: Vec<_> = cycle_sets(&succ, &set(&[0, 1, 2]), Some(1), 22).unwrap().collect();
        assert_eq!(anchored, vec![set(&[0, 1, 2])]);
        let outside: Vec<_> = cycle_sets(&succ, &set(&[0]), Some(1), 22).unwrap().collect();
        assert!(outside.is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let succ: Vec<Vec<usize>> = (0..5).map(|i| vec![(i + 1) % 5]).collect();
        let err = cycle_sets(&succ, &StateSet::full(5), None, 4).unwrap_err();
        assert_eq!(err, Error::EnumerationCap { region: 5, cap: 4 });
    }
}
