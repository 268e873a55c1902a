//! Combinatorial maps: embedded graphs on closed oriented surfaces encoded by
//! a dart permutation pair `(alpha, sigma)`.
//!
//! * `alpha` is a fixed-point-free involution pairing each dart with its
//!   reversal (so alpha-orbits are edges),
//! * `sigma` rotates the darts counterclockwise around their source vertex
//!   (sigma-orbits are vertices),
//! * faces are the orbits of `phi = sigma ∘ alpha`; the face degree is the
//!   orbit length. This convention is fixed here and inherited everywhere.
//!
//! A loop contributes two darts to its vertex, so vertex valencies always sum
//! to the dart count.

use alloc::vec;
use alloc::vec::Vec;

use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapError {
    /// `alpha` or `sigma` is not a permutation of the darts, or sizes disagree.
    NotPermutation,
    /// `alpha` is not an involution.
    NotInvolution,
    /// `alpha` fixes a dart.
    FixedPoint,
    /// The group generated by `alpha` and `sigma` is not transitive.
    Disconnected,
    /// V - E + F came out odd; impossible for a valid oriented map.
    OddEuler,
    /// A face degree differs from the tiling kind's face degree.
    BadFaceDegree { face_degree: usize, expected: usize },
    /// Dart count must be positive and even.
    BadDartCount,
}

impl core::fmt::Display for MapError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MapError::NotPermutation => write!(f, "alpha/sigma are not permutations of the darts"),
            MapError::NotInvolution => write!(f, "alpha is not an involution"),
            MapError::FixedPoint => write!(f, "alpha has a fixed point"),
            MapError::Disconnected => write!(f, "map is not connected"),
            MapError::OddEuler => write!(f, "odd Euler characteristic (corrupt map)"),
            MapError::BadFaceDegree {
                face_degree,
                expected,
            } => write!(f, "face of degree {face_degree}, expected {expected}"),
            MapError::BadDartCount => write!(f, "dart count must be positive and even"),
        }
    }
}

/// A validated connected combinatorial map on an oriented surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialMap {
    alpha: Perm,
    sigma: Perm,
}

impl CombinatorialMap {
    pub fn new(num_darts: usize, alpha: Perm, sigma: Perm) -> Result<CombinatorialMap, MapError> {
        if num_darts == 0 || num_darts % 2 != 0 {
            return Err(MapError::BadDartCount);
        }
        if alpha.len() != num_darts || sigma.len() != num_darts {
            return Err(MapError::NotPermutation);
        }
        if alpha.has_fixed_point() {
            return Err(MapError::FixedPoint);
        }
        if !alpha.is_involution() {
            return Err(MapError::NotInvolution);
        }
        let map = CombinatorialMap { alpha, sigma };
        if !map.is_connected() {
            return Err(MapError::Disconnected);
        }
        Ok(map)
    }

    /// Builds the map from raw image tables, validating everything.
    pub fn from_images(
        num_darts: usize,
        alpha: Vec<usize>,
        sigma: Vec<usize>,
    ) -> Result<CombinatorialMap, MapError> {
        if alpha.len() != num_darts || sigma.len() != num_darts {
            return Err(MapError::NotPermutation);
        }
        let alpha = Perm::new(alpha).ok_or(MapError::NotPermutation)?;
        let sigma = Perm::new(sigma).ok_or(MapError::NotPermutation)?;
        CombinatorialMap::new(num_darts, alpha, sigma)
    }

    pub fn num_darts(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &Perm {
        &self.alpha
    }

    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    /// Face permutation `phi = sigma ∘ alpha` (apply `alpha` first).
    pub fn phi(&self) -> Perm {
        self.sigma.compose(&self.alpha)
    }

    fn is_connected(&self) -> bool {
        let n = self.num_darts();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for nb in [self.alpha.apply(d), self.sigma.apply(d)] {
                if !seen[nb] {
                    seen[nb] = true;
                    count += 1;
                    stack.push(nb);
                }
            }
        }
        count == n
    }

    pub fn num_vertices(&self) -> usize {
        self.sigma.num_orbits()
    }

    pub fn num_edges(&self) -> usize {
        self.num_darts() / 2
    }

    pub fn num_faces(&self) -> usize {
        self.phi().num_orbits()
    }

    /// Vertex valencies (sigma-orbit lengths), one per vertex.
    pub fn valencies(&self) -> Vec<usize> {
        self.sigma.orbits().into_iter().map(|o| o.len()).collect()
    }

    /// Genus from V - E + F = 2 - 2g.
    pub fn genus(&self) -> Result<usize, MapError> {
        let euler = self.num_vertices() as i64 - self.num_edges() as i64 + self.num_faces() as i64;
        if euler.rem_euclid(2) != 0 || euler > 2 {
            return Err(MapError::OddEuler);
        }
        Ok(((2 - euler) / 2) as usize)
    }

    /// Relabels darts by `relab`: dart `d` becomes `relab(d)`.
    pub fn relabel(&self, relab: &Perm) -> CombinatorialMap {
        CombinatorialMap {
            alpha: relab.conjugate(&self.alpha),
            sigma: relab.conjugate(&self.sigma),
        }
    }

    /// The mirror image: reversing orientation inverts the vertex rotations.
    pub fn mirror(&self) -> CombinatorialMap {
        CombinatorialMap {
            alpha: self.alpha.clone(),
            sigma: self.sigma.inverse(),
        }
    }

    /// BFS labelling from `root`: explores `sigma` then `alpha` from each dart
    /// in label order. Returns the label table (dart -> label).
    fn bfs_labels(&self, root: usize) -> Perm {
        let n = self.num_darts();
        const UNSET: usize = usize::MAX;
        let mut label = vec![UNSET; n];
        let mut order = Vec::with_capacity(n);
        label[root] = 0;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let d = order[head];
            head += 1;
            for nb in [self.sigma.apply(d), self.alpha.apply(d)] {
                if label[nb] == UNSET {
                    label[nb] = order.len();
                    order.push(nb);
                }
            }
        }
        debug_assert_eq!(order.len(), n);
        Perm::new(label).expect("BFS labels form a permutation on a connected map")
    }

    fn code_from_root(&self, root: usize) -> Vec<u16> {
        let label = self.bfs_labels(root);
        let inv = label.inverse();
        let n = self.num_darts();
        let mut code = Vec::with_capacity(2 * n);
        for i in 0..n {
            let d = inv.apply(i);
            code.push(label.apply(self.sigma.apply(d)) as u16);
            code.push(label.apply(self.alpha.apply(d)) as u16);
        }
        code
    }

    /// Canonical code: the lexicographically smallest BFS encoding over all
    /// root darts. Two maps have equal codes iff they are isomorphic (related
    /// by a dart relabelling commuting with both permutations), i.e. iff the
    /// embedded graphs are equivalent under an orientation-preserving
    /// homeomorphism of the surface.
    pub fn canonical_code(&self) -> Vec<u8> {
        CodeScratch::new()
            .canonical_code(self.alpha.images(), self.sigma.images())
            .expect("valid maps are connected")
    }

    /// Canonical code where mirror images are identified (the lex-min of the
    /// map's and its mirror's canonical codes).
    pub fn canonical_code_unoriented(&self) -> Vec<u8> {
        let a = self.canonical_code();
        let b = self.mirror().canonical_code();
        core::cmp::min(a, b)
    }

    pub fn is_isomorphic_to(&self, other: &CombinatorialMap) -> bool {
        self.num_darts() == other.num_darts() && self.canonical_code() == other.canonical_code()
    }

    /// All automorphisms (dart bijections commuting with `alpha` and `sigma`).
    ///
    /// An automorphism of a connected map is determined by the image of dart
    /// 0; each root whose BFS code matches dart 0's code yields exactly one.
    pub fn automorphisms(&self) -> Vec<Perm> {
        let base_code = self.code_from_root(0);
        let base_labels = self.bfs_labels(0);
        let mut autos = Vec::new();
        for root in 0..self.num_darts() {
            if self.code_from_root(root) == base_code {
                // psi = labels_root^{-1} ∘ labels_0 maps dart 0 to root.
                let psi = self.bfs_labels(root).inverse().compose(&base_labels);
                debug_assert_eq!(psi.conjugate(&self.alpha), self.alpha);
                debug_assert_eq!(psi.conjugate(&self.sigma), self.sigma);
                autos.push(psi);
            }
        }
        autos
    }
}

fn encode_u16s(num_darts: usize, words: &[u16]) -> Vec<u8> {
    let mut out = Vec::with_capacity(2 + 2 * words.len());
    out.extend_from_slice(&(num_darts as u16).to_le_bytes());
    for w in words {
        out.extend_from_slice(&w.to_le_bytes());
    }
    out
}

/// Reusable buffers for canonical-code computation on raw image tables; the
/// enumerators hit this on every surviving leaf, so it avoids allocating and
/// abandons a root as soon as its encoding exceeds the best so far.
pub struct CodeScratch {
    label: Vec<usize>,
    order: Vec<usize>,
    code: Vec<u16>,
    best: Vec<u16>,
}

impl Default for CodeScratch {
    fn default() -> Self {
        CodeScratch::new()
    }
}

impl CodeScratch {
    pub fn new() -> CodeScratch {
        CodeScratch {
            label: Vec::new(),
            order: Vec::new(),
            code: Vec::new(),
            best: Vec::new(),
        }
    }

    /// Canonical code of the map `(alpha, sigma)`; `None` when the map is
    /// not connected. Must agree with [`CombinatorialMap::canonical_code`].
    pub fn canonical_code(&mut self, alpha: &[usize], sigma: &[usize]) -> Option<Vec<u8>> {
        let n = alpha.len();
        debug_assert_eq!(sigma.len(), n);
        self.best.clear();
        for root in 0..n {
            self.label.clear();
            self.label.resize(n, usize::MAX);
            self.order.clear();
            self.code.clear();
            self.label[root] = 0;
            self.order.push(root);
            let mut head = 0;
            // `worse` means the prefix already exceeds the incumbent.
            let mut worse = false;
            let mut better = self.best.is_empty();
            while head < self.order.len() {
                let d = self.order[head];
                for nb in [sigma[d], alpha[d]] {
                    if self.label[nb] == usize::MAX {
                        self.label[nb] = self.order.len();
                        self.order.push(nb);
                    }
                    let w = self.label[nb] as u16;
                    if !better {
                        let incumbent = self.best[self.code.len()];
                        if w > incumbent {
                            worse = true;
                        } else if w < incumbent {
                            better = true;
                        }
                    }
                    self.code.push(w);
                }
                if worse {
                    break;
                }
                head += 1;
            }
            if worse {
                continue;
            }
            if self.order.len() < n {
                // Unreached darts: same for every root.
                return None;
            }
            if better {
                core::mem::swap(&mut self.best, &mut self.code);
            }
        }
        Some(encode_u16s(n, &self.best))
    }
}

/// Builds a map from faces given as cyclic vertex sequences (counterclockwise
/// when viewed from outside the surface). Every ordered edge must appear
/// exactly once and its reversal exactly once. Darts are numbered
/// face-by-face, position-by-position.
pub fn map_from_faces(faces: &[Vec<usize>]) -> Result<CombinatorialMap, MapError> {
    let num_darts: usize = faces.iter().map(|f| f.len()).sum();
    let mut dart = 0usize;
    let mut by_edge: Vec<(usize, usize, usize)> = Vec::with_capacity(num_darts);
    let mut phi_images = vec![0usize; num_darts];
    for face in faces {
        let start = dart;
        for (i, &u) in face.iter().enumerate() {
            let v = face[(i + 1) % face.len()];
            by_edge.push((u, v, dart));
            phi_images[dart] = start + (i + 1) % face.len();
            dart += 1;
        }
    }
    let mut alpha_images = vec![usize::MAX; num_darts];
    for &(u, v, d) in &by_edge {
        if alpha_images[d] != usize::MAX {
            continue;
        }
        let mut partner = None;
        for &(u2, v2, d2) in &by_edge {
            if d2 != d && u2 == v && v2 == u && alpha_images[d2] == usize::MAX {
                partner = Some(d2);
                break;
            }
        }
        let d2 = partner.ok_or(MapError::NotInvolution)?;
        alpha_images[d] = d2;
        alpha_images[d2] = d;
    }
    let alpha = Perm::new(alpha_images).ok_or(MapError::NotPermutation)?;
    let phi = Perm::new(phi_images).ok_or(MapError::NotPermutation)?;
    let sigma = phi.compose(&alpha);
    CombinatorialMap::new(num_darts, alpha, sigma)
}

/// Which regular polygon tiles the surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TilingKind {
    Triangle,
    Square,
}

impl TilingKind {
    /// Face degree: 3 or 4.
    pub fn degree(self) -> usize {
        match self {
            TilingKind::Triangle => 3,
            TilingKind::Square => 4,
        }
    }

    /// Regular vertex valency: 6 or 4.
    pub fn regular_valency(self) -> usize {
        match self {
            TilingKind::Triangle => 6,
            TilingKind::Square => 4,
        }
    }

    /// Order of the rotation group of the flat model: 6 or 4. Holonomy
    /// classes live in Z/modulus.
    pub fn modulus(self) -> usize {
        self.regular_valency()
    }

    /// Coefficient in the Euler relation: profile entries sum to
    /// `euler_factor * (g - 1)`.
    pub fn euler_factor(self) -> i64 {
        match self {
            TilingKind::Triangle => 12,
            TilingKind::Square => 8,
        }
    }
}

/// Multiset of non-zero vertex indices `e_v - 6` (triangles) or `e_v - 4`
/// (squares), stored sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    kind: TilingKind,
    entries: Vec<i64>,
}

impl Profile {
    /// Accepts any multiset of indices; use [`Profile::admissible_genus`] to
    /// check admissibility.
    pub fn new(kind: TilingKind, mut entries: Vec<i64>) -> Profile {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Profile { kind, entries }
    }

    pub fn kind(&self) -> TilingKind {
        self.kind
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// The genus forced by the Euler relation, if the profile is admissible:
    /// all entries non-zero and greater than `-regular_valency`, and the sum
    /// a non-negative-genus multiple of 12 (triangles) or 8 (squares).
    pub fn admissible_genus(&self) -> Option<usize> {
        let reg = self.kind.regular_valency() as i64;
        if self.entries.iter().any(|&k| k == 0 || k <= -reg) {
            return None;
        }
        let factor = self.kind.euler_factor();
        let sum = self.sum();
        if sum.rem_euclid(factor) != 0 || sum / factor < -1 {
            return None;
        }
        Some((sum / factor + 1) as usize)
    }

    /// Singular vertex valencies `kappa_i + regular_valency`.
    pub fn singular_valencies(&self) -> Vec<usize> {
        let reg = self.kind.regular_valency() as i64;
        self.entries.iter().map(|&k| (k + reg) as usize).collect()
    }
}

/// A tiling: a combinatorial map with uniform face degree 3 or 4, plus its
/// derived profile, genus and canonical code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    map: CombinatorialMap,
    kind: TilingKind,
    profile: Profile,
    genus: usize,
    canonical_code: Vec<u8>,
}

impl Tiling {
    pub fn new(map: CombinatorialMap, kind: TilingKind) -> Result<Tiling, MapError> {
        let deg = kind.degree();
        for face in map.phi().orbits() {
            if face.len() != deg {
                return Err(MapError::BadFaceDegree {
                    face_degree: face.len(),
                    expected: deg,
                });
            }
        }
        let reg = kind.regular_valency() as i64;
        let entries: Vec<i64> = map
            .valencies()
            .into_iter()
            .map(|e| e as i64 - reg)
            .filter(|&k| k != 0)
            .collect();
        let profile = Profile::new(kind, entries);
        let genus = map.genus()?;
        let canonical_code = map.canonical_code();
        Ok(Tiling {
            map,
            kind,
            profile,
            genus,
            canonical_code,
        })
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }

    pub fn kind(&self) -> TilingKind {
        self.kind
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn canonical_code(&self) -> &[u8] {
        &self.canonical_code
    }

    pub fn face_count(&self) -> usize {
        self.map.num_faces()
    }
}

/// The one-square torus: 4 darts, alpha = (0 2)(1 3), sigma = (0 1 2 3).
pub fn one_square_torus() -> CombinatorialMap {
    let alpha = Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
    let sigma = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
    CombinatorialMap::new(4, alpha, sigma).unwrap()
}

/// The boundary of the tetrahedron as a triangle map on 12 darts.
pub fn tetrahedron() -> CombinatorialMap {
    map_from_faces(&[
        vec![0, 1, 2],
        vec![0, 3, 1],
        vec![1, 3, 2],
        vec![2, 3, 0],
    ])
    .unwrap()
}

/// The surface of the cube as a quadrangulation on 24 darts.
pub fn cube() -> CombinatorialMap {
    map_from_faces(&[
        vec![0, 3, 2, 1],
        vec![4, 5, 6, 7],
        vec![0, 1, 5, 4],
        vec![1, 2, 6, 5],
        vec![2, 3, 7, 6],
        vec![3, 0, 4, 7],
    ])
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use rand_core::{RngCore, SeedableRng};

    fn random_perm(n: usize, rng: &mut rand_chacha::ChaCha8Rng) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            v.swap(i, j);
        }
        Perm::new(v).unwrap()
    }

    /// Exhaustive structure-preserving bijection search; an isomorphism is
    /// determined by the image of dart 0, so try all images and propagate.
    fn isomorphic_by_search(a: &CombinatorialMap, b: &CombinatorialMap) -> bool {
        if a.num_darts() != b.num_darts() {
            return false;
        }
        let n = a.num_darts();
        'roots: for root in 0..n {
            const UNSET: usize = usize::MAX;
            let mut image = vec![UNSET; n];
            image[0] = root;
            let mut stack = vec![0usize];
            while let Some(d) = stack.pop() {
                for (na, nb) in [
                    (a.sigma().apply(d), b.sigma().apply(image[d])),
                    (a.alpha().apply(d), b.alpha().apply(image[d])),
                ] {
                    if image[na] == UNSET {
                        image[na] = nb;
                        stack.push(na);
                    } else if image[na] != nb {
                        continue 'roots;
                    }
                }
            }
            if Perm::new(image).is_some() {
                return true;
            }
        }
        false
    }

    #[test]
    fn one_square_counts() {
        let m = one_square_torus();
        assert_eq!(m.num_vertices(), 1);
        assert_eq!(m.num_edges(), 2);
        assert_eq!(m.num_faces(), 1);
        assert_eq!(m.phi().orbits()[0].len(), 4);
        assert_eq!(m.genus().unwrap(), 1);
        let t = Tiling::new(m, TilingKind::Square).unwrap();
        assert!(t.profile().is_empty());
        assert_eq!(t.profile().sum(), 0);
    }

    #[test]
    fn alpha_fixed_point_rejected() {
        // alpha fixes dart 0.
        let alpha = Perm::new(vec![0, 2, 1, 3]).unwrap();
        let sigma = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        assert_eq!(
            CombinatorialMap::new(4, alpha, sigma),
            Err(MapError::FixedPoint)
        );
    }

    #[test]
    fn non_involution_rejected() {
        let alpha = Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let sigma = Perm::identity(4);
        assert_eq!(
            CombinatorialMap::new(4, alpha, sigma),
            Err(MapError::NotInvolution)
        );
    }

    #[test]
    fn disjoint_squares_rejected() {
        // Two one-square tori side by side (block diagonal on 8 darts).
        let alpha = Perm::from_cycles(8, &[&[0, 2], &[1, 3], &[4, 6], &[5, 7]]).unwrap();
        let sigma = Perm::from_cycles(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]).unwrap();
        assert_eq!(
            CombinatorialMap::new(8, alpha, sigma),
            Err(MapError::Disconnected)
        );
    }

    #[test]
    fn tetrahedron_counts_and_profile() {
        let m = tetrahedron();
        assert_eq!(m.num_darts(), 12);
        assert_eq!(m.num_vertices(), 4);
        assert_eq!(m.num_edges(), 6);
        assert_eq!(m.num_faces(), 4);
        assert_eq!(m.genus().unwrap(), 0);
        let t = Tiling::new(m, TilingKind::Triangle).unwrap();
        assert_eq!(t.profile().entries(), &[-3, -3, -3, -3]);
        assert_eq!(t.profile().sum(), -12);
        assert_eq!(t.profile().admissible_genus(), Some(0));
    }

    #[test]
    fn cube_profile() {
        let m = cube();
        assert_eq!(m.num_darts(), 24);
        assert_eq!(m.genus().unwrap(), 0);
        let t = Tiling::new(m, TilingKind::Square).unwrap();
        assert_eq!(t.profile().entries(), &[-1; 8]);
        assert_eq!(t.profile().sum(), -8);
    }

    #[test]
    fn valencies_sum_to_darts() {
        for m in [one_square_torus(), tetrahedron(), cube()] {
            let total: usize = m.valencies().iter().sum();
            assert_eq!(total, m.num_darts());
        }
    }

    #[test]
    fn canonical_code_relabel_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for m in [one_square_torus(), tetrahedron(), cube()] {
            let code = m.canonical_code();
            let genus = m.genus().unwrap();
            for _ in 0..100 {
                let relab = random_perm(m.num_darts(), &mut rng);
                let m2 = m.relabel(&relab);
                assert_eq!(m2.canonical_code(), code);
                assert_eq!(m2.genus().unwrap(), genus);
            }
        }
    }

    #[test]
    fn different_maps_different_codes() {
        assert_ne!(
            tetrahedron().canonical_code(),
            one_square_torus().canonical_code()
        );
    }

    #[test]
    fn isomorphism_agrees_with_bijection_search() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let maps = [one_square_torus(), tetrahedron()];
        for a in &maps {
            for b in &maps {
                assert_eq!(a.is_isomorphic_to(b), isomorphic_by_search(a, b));
            }
            let relab = random_perm(a.num_darts(), &mut rng);
            let a2 = a.relabel(&relab);
            assert!(a.is_isomorphic_to(&a2));
            assert!(isomorphic_by_search(a, &a2));
        }
    }

    /// All 2-triangle gluings on 6 darts: canonical-code classes must agree
    /// with brute-force isomorphism classes.
    #[test]
    fn two_triangle_code_classes_match_bijection_search() {
        let phi = Perm::from_cycles(6, &[&[0, 1, 2], &[3, 4, 5]]).unwrap();
        let mut maps = Vec::new();
        // All fixed-point-free involutions on 6 darts.
        let pairings = [
            [(0, 1), (2, 3), (4, 5)],
            [(0, 1), (2, 4), (3, 5)],
            [(0, 1), (2, 5), (3, 4)],
            [(0, 2), (1, 3), (4, 5)],
            [(0, 2), (1, 4), (3, 5)],
            [(0, 2), (1, 5), (3, 4)],
            [(0, 3), (1, 2), (4, 5)],
            [(0, 3), (1, 4), (2, 5)],
            [(0, 3), (1, 5), (2, 4)],
            [(0, 4), (1, 2), (3, 5)],
            [(0, 4), (1, 3), (2, 5)],
            [(0, 4), (1, 5), (2, 3)],
            [(0, 5), (1, 2), (3, 4)],
            [(0, 5), (1, 3), (2, 4)],
            [(0, 5), (1, 4), (2, 3)],
        ];
        for pairing in pairings {
            let mut images = vec![0usize; 6];
            for (a, b) in pairing {
                images[a] = b;
                images[b] = a;
            }
            let alpha = Perm::new(images).unwrap();
            let sigma = phi.compose(&alpha);
            if let Ok(m) = CombinatorialMap::new(6, alpha, sigma) {
                maps.push(m);
            }
        }
        assert!(!maps.is_empty());
        // Group by canonical code and check against exhaustive search.
        let codes: BTreeSet<Vec<u8>> = maps.iter().map(|m| m.canonical_code()).collect();
        for a in &maps {
            for b in &maps {
                assert_eq!(
                    a.canonical_code() == b.canonical_code(),
                    isomorphic_by_search(a, b)
                );
            }
        }
        assert!(codes.len() < maps.len(), "some gluings must coincide");
    }

    #[test]
    fn automorphisms_commute() {
        let m = tetrahedron();
        let autos = m.automorphisms();
        // Orientation-preserving symmetries of the tetrahedron: A4.
        assert_eq!(autos.len(), 12);
        for psi in &autos {
            assert_eq!(psi.conjugate(m.alpha()), *m.alpha());
            assert_eq!(psi.conjugate(m.sigma()), *m.sigma());
        }
    }

    #[test]
    fn mirror_identifies_only_chiral_pairs() {
        let m = tetrahedron();
        // The tetrahedron is amphichiral: its mirror is isomorphic to it.
        assert!(m.is_isomorphic_to(&m.mirror()));
        assert_eq!(m.canonical_code_unoriented(), m.canonical_code());
    }
}
