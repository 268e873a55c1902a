//! Linear holonomy of a tiling's flat metric.
//!
//! Giving every face the geometry of a unit equilateral triangle or unit
//! square makes the surface flat away from the vertices; a vertex of valency
//! `e` carries cone angle `pi*e/3` (triangles) or `pi*e/2` (squares). The
//! rotation parts of the transition maps live in Z/6 or Z/4, and the image of
//! the holonomy homomorphism is the cyclic subgroup U_k generated by the
//! developing defects; `k` is its order.
//!
//! The developing gauge assigns each face a rotation class along a spanning
//! tree of the dual graph. With sigma counterclockwise the face permutation
//! traverses boundaries clockwise, so side `t` of a face points in direction
//! class `-u*t` (`u` = 2 for triangles, 1 for squares) relative to the face's
//! rotation; crossing the edge of dart `d` rotates by
//! `turn*(pos(d) - pos(alpha(d))) + M/2` with `turn = M - u`. The gauged
//! defect of a non-tree edge is a holonomy generator, as is the rotation
//! `e_v mod M` around each vertex, and stepping `sigma` once advances the
//! outgoing direction by one corner: `theta(sigma(d)) = theta(d) + 1` in a
//! defect-free gauge. The subgroup, hence `k`, does not depend on the tree.

use alloc::vec;
use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};

use crate::map::{Tiling, TilingKind};

/// Holonomy of the flat structure, together with the developing data the
/// cover construction consumes.
#[derive(Clone, Debug)]
pub struct HolonomyData {
    /// 6 for triangles, 4 for squares.
    pub modulus: usize,
    /// Order of the holonomy group; divides the modulus.
    pub k: usize,
    /// Developing rotation class of each face in Z/modulus (tree gauge).
    pub face_rotation: Vec<usize>,
    /// Gauged defect of each non-tree edge (indexed by the edge's smallest
    /// dart); tree edges have defect zero.
    pub defects: Vec<(usize, usize)>,
    /// Rotation class `e_v mod modulus` around each vertex.
    pub vertex_rotations: Vec<usize>,
    /// Direction class of every dart in the developing gauge.
    pub dart_direction: Vec<usize>,
    /// Gauged defect of every dart (antisymmetric under alpha).
    pub dart_defect: Vec<usize>,
}

impl HolonomyData {
    /// Index of U_k in U_modulus; every defect is a multiple of this.
    pub fn subgroup_step(&self) -> usize {
        self.modulus / self.k
    }
}

fn side_turn(kind: TilingKind) -> usize {
    match kind {
        TilingKind::Triangle => 4,
        TilingKind::Square => 3,
    }
}

/// Holonomy with a deterministic spanning tree (darts explored in index
/// order).
pub fn holonomy(tiling: &Tiling) -> HolonomyData {
    let n = tiling.map().num_darts();
    holonomy_with_order(tiling, &(0..n).collect::<Vec<_>>())
}

/// Holonomy with the dual BFS exploring darts in a seeded random order; the
/// resulting `k` must not depend on the seed.
pub fn holonomy_with_seed(tiling: &Tiling, seed: u64) -> HolonomyData {
    let n = tiling.map().num_darts();
    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        order.swap(i, j);
    }
    holonomy_with_order(tiling, &order)
}

fn holonomy_with_order(tiling: &Tiling, dart_order: &[usize]) -> HolonomyData {
    let map = tiling.map();
    let kind = tiling.kind();
    let n = map.num_darts();
    let modulus = kind.modulus() as i64;
    let turn = side_turn(kind) as i64;

    let faces = map.phi().orbits();
    let mut face_of = vec![0usize; n];
    let mut pos_of = vec![0usize; n];
    for (f, face) in faces.iter().enumerate() {
        for (t, &d) in face.iter().enumerate() {
            face_of[d] = f;
            pos_of[d] = t;
        }
    }
    // Rotation across the edge of dart d, before gauging.
    let cross = |d: usize| -> i64 {
        let a = map.alpha().apply(d);
        (turn * pos_of[d] as i64 - turn * pos_of[a] as i64 + modulus / 2).rem_euclid(modulus)
    };

    const UNSET: i64 = i64::MIN;
    let mut rotation = vec![UNSET; faces.len()];
    rotation[face_of[dart_order[0]]] = 0;
    // BFS over the dual graph, rescanning the dart order; quadratic but tiny,
    // and the order fully determines the tree.
    let mut changed = true;
    while changed {
        changed = false;
        for &d in dart_order {
            let f = face_of[d];
            let f2 = face_of[map.alpha().apply(d)];
            if rotation[f] != UNSET && rotation[f2] == UNSET {
                rotation[f2] = (rotation[f] + cross(d)).rem_euclid(modulus);
                changed = true;
            }
        }
    }
    debug_assert!(rotation.iter().all(|&r| r != UNSET), "dual graph connected");

    let mut dart_defect = vec![0usize; n];
    let mut defects = Vec::new();
    for d in 0..n {
        let a = map.alpha().apply(d);
        let delta =
            (rotation[face_of[d]] + cross(d) - rotation[face_of[a]]).rem_euclid(modulus) as usize;
        dart_defect[d] = delta;
        if d < a && delta != 0 {
            defects.push((d, delta));
        }
    }

    let vertex_rotations: Vec<usize> = map
        .valencies()
        .iter()
        .map(|&e| e % modulus as usize)
        .collect();

    // Around a vertex the gauged crossings compose to the cone rotation
    // e_v mod M; a mismatch means the developing bookkeeping is corrupt.
    for orbit in map.sigma().orbits() {
        let total: i64 = orbit.iter().map(|&d| dart_defect[d] as i64).sum();
        assert_eq!(
            total.rem_euclid(modulus),
            (orbit.len() as i64).rem_euclid(modulus),
            "vertex rotation must equal its valency class"
        );
    }

    let mut generator_gcd = modulus as usize;
    for &(_, delta) in &defects {
        generator_gcd = num_integer::gcd(generator_gcd, delta);
    }
    for &r in &vertex_rotations {
        generator_gcd = num_integer::gcd(generator_gcd, r);
    }
    let k = modulus as usize / generator_gcd;

    let dart_direction: Vec<usize> = (0..n)
        .map(|d| ((rotation[face_of[d]] + turn * pos_of[d] as i64).rem_euclid(modulus)) as usize)
        .collect();

    HolonomyData {
        modulus: modulus as usize,
        k,
        face_rotation: rotation.iter().map(|&r| r as usize).collect(),
        defects,
        vertex_rotations,
        dart_direction,
        dart_defect,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_tilings, EnumerationConfig};
    use crate::map::{cube, one_square_torus, tetrahedron, Profile, Tiling, TilingKind};

    #[test]
    fn one_square_torus_is_translation() {
        let t = Tiling::new(one_square_torus(), TilingKind::Square).unwrap();
        let h = holonomy(&t);
        assert_eq!(h.modulus, 4);
        assert_eq!(h.k, 1);
        assert!(h.defects.is_empty());
    }

    #[test]
    fn tetrahedron_has_order_two_holonomy() {
        let t = Tiling::new(tetrahedron(), TilingKind::Triangle).unwrap();
        let h = holonomy(&t);
        assert_eq!(h.modulus, 6);
        // Valency-3 vertices rotate by half a turn.
        assert!(h.vertex_rotations.iter().all(|&r| r == 3));
        assert_eq!(h.k, 2);
    }

    #[test]
    fn cube_has_order_four_holonomy() {
        let t = Tiling::new(cube(), TilingKind::Square).unwrap();
        let h = holonomy(&t);
        assert!(h.vertex_rotations.iter().all(|&r| r == 3));
        assert_eq!(h.k, 4);
    }

    #[test]
    fn hexagonal_torus_is_translation() {
        // The unique 2-triangle torus tiling is C modulo a hexagonal lattice:
        // a translation surface, despite the Z/6 ambient group.
        let profile = Profile::new(TilingKind::Triangle, vec![]);
        let config = EnumerationConfig::default();
        let tilings = enumerate_tilings(TilingKind::Triangle, &profile, 2, &config).unwrap();
        assert_eq!(tilings.len(), 1);
        assert_eq!(holonomy(&tilings[0]).k, 1);
    }

    #[test]
    fn k_is_independent_of_tree_and_labels() {
        let config = EnumerationConfig::default();
        let profile = Profile::new(TilingKind::Square, vec![-1; 8]);
        let tilings = enumerate_tilings(TilingKind::Square, &profile, 6, &config).unwrap();
        for t in &tilings {
            let k = holonomy(t).k;
            for seed in 0..10 {
                assert_eq!(holonomy_with_seed(t, seed).k, k);
            }
        }
    }

    #[test]
    fn defects_lie_in_the_holonomy_subgroup() {
        let config = EnumerationConfig::default();
        let profile = Profile::new(TilingKind::Triangle, vec![-3, -3, -3, -3]);
        let tilings = enumerate_tilings(TilingKind::Triangle, &profile, 6, &config).unwrap();
        for t in &tilings {
            let h = holonomy(t);
            let step = h.subgroup_step();
            assert!(h.dart_defect.iter().all(|&d| d % step == 0));
            assert!(h.vertex_rotations.iter().all(|&r| r % step == 0));
        }
    }
}
