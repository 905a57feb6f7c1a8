use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Triangulation;
use crate::arith::{triad_ok, Spin};

/// Hard ceiling on internal spins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutoffPolicy {
    pub lambda: Spin,
}

impl CutoffPolicy {
    pub fn new(lambda: Spin) -> Self {
        CutoffPolicy { lambda }
    }
}

/// Spins of the internal edges, in the order of
/// [`Triangulation::internal`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Coloring(pub Vec<Spin>);

impl Coloring {
    /// The assignment keyed by edge id.
    pub fn assignment(&self, t: &Triangulation) -> BTreeMap<String, Spin> {
        t.internal.iter().zip(&self.0).map(|(&e, &s)| (t.edges[e].id.clone(), s)).collect()
    }
}

/// One face to check, as positions into the full edge-spin vector.
type Triad = [usize; 3];

/// Depth-first enumeration of admissible colorings, lexicographic in
/// internal edge id with ascending spins.
///
/// Each face is checked as soon as its last internal edge is assigned, so
/// dead branches are cut early.
pub struct ColoringIter<'a> {
    t: &'a Triangulation,
    lambda: u32,
    /// Faces whose last internal edge sits at each depth.
    checks: Vec<Vec<Triad>>,
    spins: Vec<u32>,
    /// Doubled spins of the depths entered so far.
    stack: Vec<u32>,
    done: bool,
}

impl<'a> ColoringIter<'a> {
    pub fn new(t: &'a Triangulation, cutoff: CutoffPolicy) -> Self {
        let depth_of: BTreeMap<usize, usize> = t.internal.iter().enumerate().map(|(d, &e)| (e, d)).collect();
        let mut checks = vec![Vec::new(); t.internal.len()];
        let spins: Vec<u32> = t.edge_spins(&[]).iter().map(|s| s.twice()).collect();
        let mut done = false;
        for face in &t.faces {
            match face.edges.iter().filter_map(|e| depth_of.get(e)).max() {
                Some(&d) => checks[d].push(face.edges),
                None => {
                    let [a, b, c] = face.edges.map(|e| spins[e]);
                    done |= !triad_ok(a, b, c);
                }
            }
        }
        ColoringIter { t, lambda: cutoff.lambda.twice(), checks, spins, stack: Vec::new(), done }
    }

    fn admissible_at(&self, depth: usize) -> bool {
        self.checks[depth].iter().all(|f| triad_ok(self.spins[f[0]], self.spins[f[1]], self.spins[f[2]]))
    }

    fn set(&mut self, depth: usize, value: u32) {
        self.stack[depth] = value;
        self.spins[self.t.internal[depth]] = value;
    }
}

impl Iterator for ColoringIter<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.done {
            return None;
        }
        let n = self.t.internal.len();
        if n == 0 {
            self.done = true;
            return Some(Coloring(Vec::new()));
        }
        // resume: advance the deepest level, or start at depth 0
        let mut depth = if self.stack.is_empty() {
            self.stack.push(0);
            self.set(0, 0);
            0
        } else {
            let d = n - 1;
            if !self.advance(d) {
                self.backtrack(d)?
            } else {
                d
            }
        };
        loop {
            if self.admissible_at(depth) {
                if depth + 1 == n {
                    return Some(Coloring(self.stack.iter().map(|&v| Spin::from_twice(v)).collect()));
                }
                depth += 1;
                self.stack.push(0);
                self.set(depth, 0);
                continue;
            }
            if !self.advance(depth) {
                depth = self.backtrack(depth)?;
            }
        }
    }
}

impl ColoringIter<'_> {
    /// Moves the value at `depth` up by one; `false` past the cutoff.
    fn advance(&mut self, depth: usize) -> bool {
        let next = self.stack[depth] + 1;
        if next > self.lambda {
            return false;
        }
        self.set(depth, next);
        true
    }

    /// Pops exhausted levels until one can advance. Marks the iterator done
    /// when none can.
    fn backtrack(&mut self, mut depth: usize) -> Option<usize> {
        loop {
            self.stack.pop();
            if depth == 0 {
                self.done = true;
                return None;
            }
            depth -= 1;
            if self.advance(depth) {
                return Some(depth);
            }
        }
    }
}

/// Admissible colorings of `t` under `cutoff`, in deterministic order.
pub fn enumerate_colorings(t: &Triangulation, cutoff: CutoffPolicy) -> ColoringIter<'_> {
    ColoringIter::new(t, cutoff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statesum::PachnerBoundary;

    fn spins(c: &Coloring) -> Vec<u32> {
        c.0.iter().map(|s| s.twice()).collect()
    }

    #[test]
    fn no_internal_edges_give_one_empty_coloring() {
        let t = PachnerBoundary::from_twice([2; 9]).two_side();
        let all: Vec<Coloring> = enumerate_colorings(&t, CutoffPolicy::new(Spin::integer(3))).collect();
        assert_eq!(all, vec![Coloring(Vec::new())]);
    }

    #[test]
    fn one_internal_edge_follows_the_triangle_range() {
        // (e14, e15) = (1, 2), (e24, e25) = (1, 1), (e34, e35) = (2, 1): x ∈ {1, 2}
        let b = PachnerBoundary::from_twice([2, 2, 2, 4, 2, 2, 2, 4, 2]);
        let t = b.three_side();
        let listed: Vec<Vec<u32>> =
            enumerate_colorings(&t, CutoffPolicy::new(Spin::integer(6))).map(|c| spins(&c)).collect();
        assert_eq!(listed, vec![vec![2], vec![4]]);
        let capped: Vec<Vec<u32>> =
            enumerate_colorings(&t, CutoffPolicy::new(Spin::integer(1))).map(|c| spins(&c)).collect();
        assert_eq!(capped, vec![vec![2]]);
        assert_eq!(enumerate_colorings(&t, CutoffPolicy::new(Spin::ZERO)).count(), 0);
    }

    #[test]
    fn inadmissible_boundary_gives_nothing() {
        let mut t = PachnerBoundary::from_twice([2; 9]).three_side();
        t.edges[0].spin = Some(Spin::integer(5));
        assert_eq!(enumerate_colorings(&t, CutoffPolicy::new(Spin::integer(4))).count(), 0);
    }
}
