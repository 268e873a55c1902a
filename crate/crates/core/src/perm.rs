//! Permutations on `{0, …, n-1}` stored as image tables.

use alloc::vec;
use alloc::vec::Vec;

/// A permutation given by its images: `p.apply(i) == p.images()[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Builds a permutation from an image table, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Option<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n || seen[im] {
                return None;
            }
            seen[im] = true;
        }
        Some(Perm { images })
    }

    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Builds from disjoint cycles; entries absent from every cycle are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Option<Perm> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a >= n || b >= n || moved[a] {
                    return None;
                }
                moved[a] = true;
                images[a] = b;
            }
        }
        Perm::new(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im] = i;
        }
        Perm { images: inv }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.len(), other.len());
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// Conjugate `g ↦ self ∘ g ∘ self⁻¹`.
    pub fn conjugate(&self, g: &Perm) -> Perm {
        let mut images = vec![0; self.len()];
        for i in 0..self.len() {
            images[self.apply(i)] = self.apply(g.apply(i));
        }
        Perm { images }
    }

    pub fn is_involution(&self) -> bool {
        (0..self.len()).all(|i| self.apply(self.apply(i)) == i)
    }

    pub fn has_fixed_point(&self) -> bool {
        (0..self.len()).any(|i| self.apply(i) == i)
    }

    /// Orbits (cycles), each listed in traversal order from its smallest element;
    /// orbits are sorted by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut orbits = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                orbit.push(d);
                d = self.apply(d);
            }
            orbits.push(orbit);
        }
        orbits
    }

    pub fn num_orbits(&self) -> usize {
        self.orbits().len()
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        let mut ord: u64 = 1;
        for orbit in self.orbits() {
            ord = num_integer::lcm(ord, orbit.len() as u64);
        }
        ord
    }

    /// Lengths of the non-trivial cycles, sorted ascending.
    pub fn nontrivial_cycle_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self
            .orbits()
            .into_iter()
            .map(|o| o.len())
            .filter(|&l| l > 1)
            .collect();
        lens.sort_unstable();
        lens
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_and_orbits() {
        let p = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        assert_eq!(p.apply(3), 0);
        assert_eq!(p.num_orbits(), 1);
        assert_eq!(p.order(), 4);
        let inv = p.inverse();
        assert_eq!(inv.apply(0), 3);
        assert_eq!(p.compose(&inv), Perm::identity(4));
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Perm::new(vec![0, 0, 1]).is_none());
        assert!(Perm::new(vec![0, 3]).is_none());
        assert!(Perm::from_cycles(3, &[&[0, 1], &[1, 2]]).is_none());
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let g = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        let s = Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
        let c = s.conjugate(&g);
        assert_eq!(c, Perm::from_cycles(4, &[&[2, 3]]).unwrap());
    }
}
