//! The 144-element symmetry group of the 6j symbol: 24 tetrahedral
//! symmetries combined with the Regge symmetries.

use std::collections::HashSet;

use super::labels::SixJLabels;

type Tuple = [u32; 6];

fn swap_first_columns([a, b, c, d, e, f]: Tuple) -> Tuple {
    [b, a, c, e, d, f]
}

fn swap_last_columns([a, b, c, d, e, f]: Tuple) -> Tuple {
    [a, c, b, d, f, e]
}

fn flip_rows([a, b, c, d, e, f]: Tuple) -> Tuple {
    [d, e, c, a, b, f]
}

fn regge([a, b, c, d, e, f]: Tuple) -> Option<Tuple> {
    let sum = b + c + e + f;
    if sum % 2 != 0 {
        return None;
    }
    let s = sum / 2;
    Some([a, s.checked_sub(b)?, s.checked_sub(c)?, d, s.checked_sub(e)?, s.checked_sub(f)?])
}

/// All labels obtainable from `labels` by the symmetry group, each listed
/// once, in discovery order.
pub fn orbit(labels: &SixJLabels) -> Vec<SixJLabels> {
    let start = labels.twice();
    let mut seen: HashSet<Tuple> = HashSet::with_capacity(160);
    let mut queue = vec![start];
    seen.insert(start);
    let mut head = 0;
    while head < queue.len() {
        let t = queue[head];
        head += 1;
        let images = [Some(swap_first_columns(t)), Some(swap_last_columns(t)), Some(flip_rows(t)), regge(t)];
        for img in images.into_iter().flatten() {
            if seen.insert(img) {
                queue.push(img);
            }
        }
    }
    queue.into_iter().map(SixJLabels::from_twice).collect()
}

/// `true` when the Racah parameter map applies directly: the `j23` range is
/// exactly `[j3 - j2, j3 + j2]` and the lowest `j12` is `j1 - j2`.
pub fn is_racah_oriented(labels: &SixJLabels) -> bool {
    let [j1, j2, _, j3, j, _] = labels.twice().map(i64::from);
    j3 - j2 >= (j1 - j).abs() && j2 + j3 <= j1 + j && j1 - j2 >= (j3 - j).abs()
}

/// The lexicographically smallest doubled tuple in the orbit on which the
/// parameter map is valid. Admissible labels always have one.
pub fn canonical_orientation(labels: &SixJLabels) -> Option<SixJLabels> {
    orbit(labels).into_iter().filter(is_racah_oriented).min_by_key(SixJLabels::twice)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_orbit_has_144_elements() {
        let l = SixJLabels::from_twice([2, 4, 6, 6, 6, 6]);
        assert!(l.is_admissible());
        assert_eq!(orbit(&l).len(), 144);
    }

    #[test]
    fn orbit_preserves_admissibility() {
        let l = SixJLabels::from_twice([1, 3, 4, 4, 4, 5]);
        assert!(l.is_admissible());
        assert!(orbit(&l).iter().all(SixJLabels::is_admissible));
    }

    #[test]
    fn canonical_is_orbit_invariant() {
        let l = SixJLabels::from_twice([2, 4, 4, 6, 4, 2]);
        let c = canonical_orientation(&l).unwrap();
        for m in orbit(&l) {
            assert_eq!(canonical_orientation(&m), Some(c));
        }
    }
}
