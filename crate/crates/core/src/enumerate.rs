//! Isomorph-free exhaustive generation of tilings with a prescribed profile.
//!
//! Both generators fix the face permutation `phi` as disjoint 3- or 4-cycles
//! (face `j` owns darts `deg*j .. deg*(j+1)`) and search over fixed-point-free
//! involutions `alpha`; `sigma = phi ∘ alpha` is derived. Equivalence classes
//! of tilings correspond to orbits of valid `alpha` under the centralizer of
//! `phi` (face permutations and rotations), so duplicates are removed by
//! canonical code.
//!
//! [`enumerate_tilings`] is the production generator: it extends partial
//! involutions dart-by-dart, pairing the smallest unmatched dart first, and
//! prunes by
//!  * vertex bookkeeping: a closed `sigma`-cycle must be an available valency,
//!    an open `sigma`-chain longer than every remaining valency is dead, and
//!    the number of open chains must cover the vertices still needed;
//!  * symmetry: untouched faces are interchangeable, so a fresh face is always
//!    entered at its first dart and faces are used in index order, plus a
//!    rotation-class reduction for the very first pairing.
//!
//! [`naive_enumerate`] is the independent oracle: the same involution tree
//! with no symmetry reductions and only the valency filter (applied as soon
//! as a sigma-cycle becomes decidable), every leaf re-derived and re-validated
//! through the public map API. It must return identical canonical-code
//! multisets on the documented range.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::map::{CombinatorialMap, Profile, Tiling, TilingKind};
use crate::perm::Perm;

const UNSET: usize = usize::MAX;

/// Hard dart cap for the naive oracle: 6 faces of either kind. Larger runs
/// are feasible (see the ignored extended-oracle test) but take hours on one
/// core, so the supported oracle range stops here.
pub fn naive_dart_cap(kind: TilingKind) -> usize {
    match kind {
        TilingKind::Triangle => 18,
        TilingKind::Square => 24,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientationPolicy {
    /// Classes under orientation-preserving homeomorphisms (the default).
    Preserving,
    /// Mirror pairs merged.
    Both,
}

#[derive(Clone, Copy, Debug)]
pub struct EnumerationConfig {
    /// Hard cap on the number of darts a run may require.
    pub budget_darts: usize,
    pub orientation: OrientationPolicy,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            budget_darts: 96,
            orientation: OrientationPolicy::Preserving,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumError {
    /// The profile violates the admissibility conditions for its kind.
    InadmissibleProfile,
    /// The run would need more darts than the configured cap.
    ResourceBudgetExceeded { needed: usize, budget: usize },
}

impl core::fmt::Display for EnumError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EnumError::InadmissibleProfile => write!(f, "inadmissible profile"),
            EnumError::ResourceBudgetExceeded { needed, budget } => {
                write!(f, "dart budget exceeded: need {needed}, budget {budget}")
            }
        }
    }
}

/// Dedup key for a tiling under the given orientation policy.
pub fn dedupe_key(tiling: &Tiling, orientation: OrientationPolicy) -> Vec<u8> {
    match orientation {
        OrientationPolicy::Preserving => tiling.canonical_code().to_vec(),
        OrientationPolicy::Both => tiling.map().canonical_code_unoriented(),
    }
}

/// Face counts `f <= m_max` that pass the counting constraints: the dart
/// count is even and the singular valencies fit with a whole number of
/// regular vertices left over.
pub fn feasible_face_counts(kind: TilingKind, profile: &Profile, m_max: usize) -> Vec<usize> {
    let deg = kind.degree();
    let reg = kind.regular_valency();
    let singular_total: usize = profile.singular_valencies().iter().sum();
    (1..=m_max)
        .filter(|&f| {
            let n = deg * f;
            n % 2 == 0 && n >= singular_total && (n - singular_total) % reg == 0
        })
        .collect()
}

/// One independent branch of the production search: a face count together
/// with the first pairing `alpha(0) = root`. Branches may run on any number
/// of workers; merging by canonical code makes the result schedule-agnostic.
#[derive(Clone, Debug)]
pub struct SearchTask {
    kind: TilingKind,
    profile: Profile,
    faces: usize,
    root: usize,
    orientation: OrientationPolicy,
}

fn validate(
    kind: TilingKind,
    profile: &Profile,
    m_max: usize,
    budget: usize,
) -> Result<(), EnumError> {
    if profile.kind() != kind || profile.admissible_genus().is_none() {
        return Err(EnumError::InadmissibleProfile);
    }
    let needed = kind.degree() * m_max;
    if needed > budget {
        return Err(EnumError::ResourceBudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Splits an enumeration run into independent root branches.
pub fn root_tasks(
    kind: TilingKind,
    profile: &Profile,
    m_max: usize,
    config: &EnumerationConfig,
) -> Result<Vec<SearchTask>, EnumError> {
    validate(kind, profile, m_max, config.budget_darts)?;
    let deg = kind.degree();
    let mut tasks = Vec::new();
    for f in feasible_face_counts(kind, profile, m_max) {
        // Rotation classes of the first pairing: within face 0 only {0,1}
        // (triangles) or {0,1} and {0,2} (squares) survive up to rotation;
        // across faces every dart is equivalent to the first dart of face 1.
        let mut roots: Vec<usize> = match kind {
            TilingKind::Triangle => vec![1],
            TilingKind::Square => vec![1, 2],
        };
        if f >= 2 {
            roots.push(deg);
        }
        for root in roots {
            tasks.push(SearchTask {
                kind,
                profile: profile.clone(),
                faces: f,
                root,
                orientation: config.orientation,
            });
        }
    }
    Ok(tasks)
}

/// Runs one branch; output is deduplicated within the branch but distinct
/// branches can still produce isomorphic tilings, so callers must merge.
pub fn run_task(task: &SearchTask) -> Vec<Tiling> {
    let mut engine = match Engine::new(task.kind, &task.profile, task.faces, task.orientation) {
        Some(e) => e,
        None => return Vec::new(),
    };
    let mark = engine.trail.len();
    if engine.match_pair(0, task.root) {
        engine.search(1);
    }
    engine.undo_to(mark);
    engine.results.into_values().collect()
}

/// Merges branch outputs: one representative per dedupe key, sorted by
/// (face count, key).
pub fn merge_tilings(
    parts: impl IntoIterator<Item = Tiling>,
    orientation: OrientationPolicy,
) -> Vec<Tiling> {
    let mut by_key: BTreeMap<(usize, Vec<u8>), Tiling> = BTreeMap::new();
    for t in parts {
        let key = (t.face_count(), dedupe_key(&t, orientation));
        by_key.entry(key).or_insert(t);
    }
    by_key.into_values().collect()
}

/// All tilings of the given kind and profile with at most `m_max` faces, one
/// representative per equivalence class, sorted by (face count, dedupe key).
pub fn enumerate_tilings(
    kind: TilingKind,
    profile: &Profile,
    m_max: usize,
    config: &EnumerationConfig,
) -> Result<Vec<Tiling>, EnumError> {
    let tasks = root_tasks(kind, profile, m_max, config)?;
    let parts: Vec<Tiling> = tasks.iter().flat_map(|t| run_task(t)).collect();
    Ok(merge_tilings(parts, config.orientation))
}

/// Independent oracle with the same contract as [`enumerate_tilings`],
/// capped at [`naive_dart_cap`].
pub fn naive_enumerate(
    kind: TilingKind,
    profile: &Profile,
    m_max: usize,
    config: &EnumerationConfig,
) -> Result<Vec<Tiling>, EnumError> {
    let tasks = naive_root_tasks(kind, profile, m_max, config)?;
    let parts: Vec<Tiling> = tasks.iter().flat_map(|t| run_naive_task(t)).collect();
    Ok(merge_tilings(parts, config.orientation))
}

// ---------------------------------------------------------------------------
// Production engine
// ---------------------------------------------------------------------------

enum TrailOp {
    Alpha(usize),
    OutDef(usize),
    InDef(usize),
    Chain { dart: usize, other: usize, len: usize },
    Valency(usize),
    CycleClosed,
    ChainsMerged,
    Touched(usize),
}

struct Engine {
    kind: TilingKind,
    deg: usize,
    n: usize,
    faces: usize,
    alpha: Vec<usize>,
    // sigma(d) = phi(alpha(d)) becomes defined once d is matched. Chains are
    // maximal open sigma-paths; chain_other/chain_len are only meaningful at
    // chain endpoints (darts with an undefined out- or in-edge).
    out_def: Vec<bool>,
    in_def: Vec<bool>,
    chain_other: Vec<usize>,
    chain_len: Vec<usize>,
    // (valency, remaining vertex count); includes the regular valency.
    val_remaining: Vec<(usize, usize)>,
    cycles_needed: usize,
    chains_count: usize,
    touched: Vec<bool>,
    trail: Vec<TrailOp>,
    orientation: OrientationPolicy,
    target_entries: Vec<i64>,
    results: BTreeMap<Vec<u8>, Tiling>,
}

impl Engine {
    fn new(
        kind: TilingKind,
        profile: &Profile,
        faces: usize,
        orientation: OrientationPolicy,
    ) -> Option<Engine> {
        let deg = kind.degree();
        let reg = kind.regular_valency();
        let n = deg * faces;
        let singular_total: usize = profile.singular_valencies().iter().sum();
        if n % 2 != 0 || n < singular_total || (n - singular_total) % reg != 0 {
            return None;
        }
        let regular_count = (n - singular_total) / reg;
        let mut val_remaining: Vec<(usize, usize)> = Vec::new();
        for v in profile.singular_valencies() {
            match val_remaining.iter_mut().find(|(val, _)| *val == v) {
                Some(entry) => entry.1 += 1,
                None => val_remaining.push((v, 1)),
            }
        }
        if regular_count > 0 {
            val_remaining.push((reg, regular_count));
        }
        let cycles_needed = profile.len() + regular_count;
        Some(Engine {
            kind,
            deg,
            n,
            faces,
            alpha: vec![UNSET; n],
            out_def: vec![false; n],
            in_def: vec![false; n],
            chain_other: (0..n).collect(),
            chain_len: vec![1; n],
            val_remaining,
            cycles_needed,
            chains_count: n,
            touched: vec![false; faces],
            trail: Vec::new(),
            orientation,
            target_entries: profile.entries().to_vec(),
            results: BTreeMap::new(),
        })
    }

    #[inline]
    fn phi(&self, d: usize) -> usize {
        let base = d - d % self.deg;
        base + (d + 1 - base) % self.deg
    }

    fn max_open_valency(&self) -> usize {
        self.val_remaining
            .iter()
            .filter(|(_, c)| *c > 0)
            .map(|(v, _)| *v)
            .max()
            .unwrap_or(0)
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                TrailOp::Alpha(d) => self.alpha[d] = UNSET,
                TrailOp::OutDef(d) => self.out_def[d] = false,
                TrailOp::InDef(d) => self.in_def[d] = false,
                TrailOp::Chain { dart, other, len } => {
                    self.chain_other[dart] = other;
                    self.chain_len[dart] = len;
                }
                TrailOp::Valency(idx) => self.val_remaining[idx].1 += 1,
                TrailOp::CycleClosed => self.cycles_needed += 1,
                TrailOp::ChainsMerged => self.chains_count += 1,
                TrailOp::Touched(face) => self.touched[face] = false,
            }
        }
    }

    /// Inserts the sigma-edge `u -> v`. Returns false when the insertion
    /// proves the branch infeasible (the caller unwinds via the trail).
    fn link(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(!self.out_def[u] && !self.in_def[v]);
        let chain_start = self.chain_other[u];
        let chain_end = self.chain_other[v];
        let len_u = self.chain_len[u];
        let len_v = self.chain_len[v];
        self.out_def[u] = true;
        self.trail.push(TrailOp::OutDef(u));
        self.in_def[v] = true;
        self.trail.push(TrailOp::InDef(v));
        if chain_start == v {
            // The chain v ... u closes into a sigma-cycle: a vertex of
            // valency len_u must still be available.
            let idx = match self
                .val_remaining
                .iter()
                .position(|&(val, c)| val == len_u && c > 0)
            {
                Some(idx) => idx,
                None => return false,
            };
            self.val_remaining[idx].1 -= 1;
            self.trail.push(TrailOp::Valency(idx));
            self.cycles_needed -= 1;
            self.trail.push(TrailOp::CycleClosed);
            self.chains_count -= 1;
            self.trail.push(TrailOp::ChainsMerged);
            true
        } else {
            let new_len = len_u + len_v;
            self.trail.push(TrailOp::Chain {
                dart: chain_start,
                other: self.chain_other[chain_start],
                len: self.chain_len[chain_start],
            });
            self.trail.push(TrailOp::Chain {
                dart: chain_end,
                other: self.chain_other[chain_end],
                len: self.chain_len[chain_end],
            });
            self.chain_other[chain_start] = chain_end;
            self.chain_len[chain_start] = new_len;
            self.chain_other[chain_end] = chain_start;
            self.chain_len[chain_end] = new_len;
            self.chains_count -= 1;
            self.trail.push(TrailOp::ChainsMerged);
            new_len <= self.max_open_valency() && self.chains_count >= self.cycles_needed
        }
    }

    fn touch(&mut self, face: usize) {
        if !self.touched[face] {
            self.touched[face] = true;
            self.trail.push(TrailOp::Touched(face));
        }
    }

    fn match_pair(&mut self, a: usize, b: usize) -> bool {
        debug_assert!(self.alpha[a] == UNSET && self.alpha[b] == UNSET && a != b);
        self.alpha[a] = b;
        self.trail.push(TrailOp::Alpha(a));
        self.alpha[b] = a;
        self.trail.push(TrailOp::Alpha(b));
        self.touch(a / self.deg);
        self.touch(b / self.deg);
        let pa = self.phi(b);
        let pb = self.phi(a);
        self.link(a, pa) && self.link(b, pb)
    }

    fn search(&mut self, cursor: usize) {
        let mut d0 = cursor;
        while d0 < self.n && self.alpha[d0] != UNSET {
            d0 += 1;
        }
        if d0 == self.n {
            self.emit();
            return;
        }
        if !self.touched[d0 / self.deg] {
            // Under the face-order rule, reaching an untouched face means the
            // touched prefix is alpha-closed: the map would be disconnected.
            return;
        }
        let min_untouched_first_dart = self
            .touched
            .iter()
            .position(|&t| !t)
            .map(|face| face * self.deg);
        for c in d0 + 1..self.n {
            let candidate_ok = self.alpha[c] == UNSET
                && (self.touched[c / self.deg] || Some(c) == min_untouched_first_dart);
            if candidate_ok {
                let mark = self.trail.len();
                if self.match_pair(d0, c) {
                    self.search(d0 + 1);
                }
                self.undo_to(mark);
            }
        }
    }

    fn emit(&mut self) {
        // Connectivity over <alpha, phi> (the same group as <alpha, sigma>).
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for nb in [self.alpha[d], self.phi(d)] {
                if !seen[nb] {
                    seen[nb] = true;
                    count += 1;
                    stack.push(nb);
                }
            }
        }
        if count != self.n {
            return;
        }
        let alpha = Perm::new(self.alpha.clone()).expect("complete involution");
        let sigma_images: Vec<usize> = (0..self.n).map(|d| self.phi(self.alpha[d])).collect();
        let sigma = Perm::new(sigma_images).expect("sigma is a permutation");
        let map = CombinatorialMap::new(self.n, alpha, sigma).expect("validated by construction");
        let tiling = Tiling::new(map, self.kind).expect("uniform face degrees by construction");
        assert_eq!(
            tiling.profile().entries(),
            &self.target_entries[..],
            "vertex bookkeeping must force the target profile"
        );
        assert_eq!(tiling.face_count(), self.faces);
        let key = dedupe_key(&tiling, self.orientation);
        self.results.entry(key).or_insert(tiling);
    }
}

// ---------------------------------------------------------------------------
// Naive oracle
// ---------------------------------------------------------------------------

/// Search statistics, exposed for tuning runs.
#[doc(hidden)]
#[derive(Clone, Copy, Debug, Default)]
pub struct NaiveStats {
    pub nodes: u64,
    pub leaves: u64,
    pub classes: u64,
}

#[doc(hidden)]
pub fn naive_face_count_stats(kind: TilingKind, profile: &Profile, faces: usize) -> NaiveStats {
    let mut search = NaiveSearch::new(kind, profile, faces);
    search.run(0);
    NaiveStats {
        nodes: search.nodes,
        leaves: search.leaves,
        classes: search.results.len() as u64,
    }
}

/// One root branch of the naive search (the pairing of dart 0), for running
/// the oracle on several workers. Merging is by canonical code, as for the
/// production tasks.
#[derive(Clone, Debug)]
pub struct NaiveTask {
    kind: TilingKind,
    profile: Profile,
    faces: usize,
    partner: usize,
}

/// Splits the naive run into independent branches (one per partner of dart 0
/// per feasible face count).
pub fn naive_root_tasks(
    kind: TilingKind,
    profile: &Profile,
    m_max: usize,
    config: &EnumerationConfig,
) -> Result<Vec<NaiveTask>, EnumError> {
    let budget = config.budget_darts.min(naive_dart_cap(kind));
    validate(kind, profile, m_max, budget)?;
    let mut tasks = Vec::new();
    for f in feasible_face_counts(kind, profile, m_max) {
        for partner in 1..kind.degree() * f {
            tasks.push(NaiveTask {
                kind,
                profile: profile.clone(),
                faces: f,
                partner,
            });
        }
    }
    Ok(tasks)
}

pub fn run_naive_task(task: &NaiveTask) -> Vec<Tiling> {
    let mut search = NaiveSearch::new(task.kind, &task.profile, task.faces);
    let mark = search.trail.len();
    if search.match_pair(0, task.partner) {
        search.run(1);
    }
    search.undo_to(mark);
    search.results.into_values().collect()
}

enum NaiveTrail {
    Alpha(usize),
    Peer { dart: usize, peer: usize, len: usize },
    Valency(usize),
    CycleClosed,
}

struct NaiveSearch {
    kind: TilingKind,
    deg: usize,
    n: usize,
    alpha: Vec<usize>,
    // Open sigma-chain bookkeeping, meaningful at chain endpoints only: every
    // unmatched dart is the end of exactly one chain.
    peer: Vec<usize>,
    clen: Vec<usize>,
    val_remaining: Vec<(usize, usize)>,
    cycles_needed: usize,
    trail: Vec<NaiveTrail>,
    hist: Vec<u32>,
    scratch: crate::map::CodeScratch,
    sigma_buf: Vec<usize>,
    target_entries: Vec<i64>,
    results: BTreeMap<Vec<u8>, Tiling>,
    nodes: u64,
    leaves: u64,
}

impl NaiveSearch {
    fn new(kind: TilingKind, profile: &Profile, faces: usize) -> NaiveSearch {
        let deg = kind.degree();
        let reg = kind.regular_valency();
        let n = deg * faces;
        let singular_total: usize = profile.singular_valencies().iter().sum();
        let regular_count = (n - singular_total) / reg;
        let mut val_remaining: Vec<(usize, usize)> = Vec::new();
        for v in profile.singular_valencies() {
            match val_remaining.iter_mut().find(|(val, _)| *val == v) {
                Some(entry) => entry.1 += 1,
                None => val_remaining.push((v, 1)),
            }
        }
        if regular_count > 0 {
            val_remaining.push((reg, regular_count));
        }
        let max_valency = val_remaining.iter().map(|&(v, _)| v).max().unwrap_or(0);
        NaiveSearch {
            kind,
            deg,
            n,
            alpha: vec![UNSET; n],
            peer: (0..n).collect(),
            clen: vec![1; n],
            cycles_needed: val_remaining.iter().map(|&(_, c)| c).sum(),
            val_remaining,
            trail: Vec::new(),
            hist: vec![0; max_valency + 2],
            scratch: crate::map::CodeScratch::new(),
            sigma_buf: vec![0; n],
            target_entries: profile.entries().to_vec(),
            results: BTreeMap::new(),
            nodes: 0,
            leaves: 0,
        }
    }

    #[inline]
    fn phi(&self, d: usize) -> usize {
        let base = d - d % self.deg;
        base + (d + 1 - base) % self.deg
    }

    #[inline]
    fn phi_inv(&self, d: usize) -> usize {
        let base = d - d % self.deg;
        base + (d + self.deg - 1 - base) % self.deg
    }

    fn max_valency(&self) -> usize {
        self.val_remaining
            .iter()
            .filter(|(_, c)| *c > 0)
            .map(|(v, _)| *v)
            .max()
            .unwrap_or(0)
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                NaiveTrail::Alpha(d) => self.alpha[d] = UNSET,
                NaiveTrail::Peer { dart, peer, len } => {
                    self.peer[dart] = peer;
                    self.clen[dart] = len;
                }
                NaiveTrail::Valency(idx) => self.val_remaining[idx].1 += 1,
                NaiveTrail::CycleClosed => self.cycles_needed += 1,
            }
        }
    }

    fn link(&mut self, u: usize, v: usize) -> bool {
        let chain_start = self.peer[u];
        let len_u = self.clen[u];
        if chain_start == v {
            let idx = match self
                .val_remaining
                .iter()
                .position(|&(val, c)| val == len_u && c > 0)
            {
                Some(idx) => idx,
                None => return false,
            };
            self.val_remaining[idx].1 -= 1;
            self.trail.push(NaiveTrail::Valency(idx));
            self.cycles_needed -= 1;
            self.trail.push(NaiveTrail::CycleClosed);
            true
        } else {
            let chain_end = self.peer[v];
            let new_len = len_u + self.clen[v];
            self.trail.push(NaiveTrail::Peer {
                dart: chain_start,
                peer: self.peer[chain_start],
                len: self.clen[chain_start],
            });
            self.trail.push(NaiveTrail::Peer {
                dart: chain_end,
                peer: self.peer[chain_end],
                len: self.clen[chain_end],
            });
            self.peer[chain_start] = chain_end;
            self.clen[chain_start] = new_len;
            self.peer[chain_end] = chain_start;
            self.clen[chain_end] = new_len;
            new_len <= self.max_valency()
        }
    }

    fn match_pair(&mut self, a: usize, b: usize) -> bool {
        self.alpha[a] = b;
        self.trail.push(NaiveTrail::Alpha(a));
        self.alpha[b] = a;
        self.trail.push(NaiveTrail::Alpha(b));
        let pa = self.phi(b);
        let pb = self.phi(a);
        self.link(a, pa) && self.link(b, pb)
    }

    fn run(&mut self, depth: usize) {
        self.nodes += 1;
        if 2 * depth == self.n {
            self.leaves += 1;
            self.emit();
            return;
        }
        let unmatched_count = self.n - 2 * depth;
        // Every vertex still owed absorbs at least one chain, and every open
        // chain ends at exactly one unmatched dart.
        if unmatched_count < self.cycles_needed {
            return;
        }
        let cap = self.max_valency();
        // Pick the unmatched dart with the longest chain (ties to the
        // smallest dart): its cycle closes or dies soonest. The same sweep
        // also fills the chain-length histogram for the packing filter.
        for h in self.hist.iter_mut() {
            *h = 0;
        }
        let mut pick = UNSET;
        let mut pick_len = 0;
        for u in 0..self.n {
            if self.alpha[u] != UNSET {
                continue;
            }
            let len = self.clen[u];
            if len > cap {
                return;
            }
            self.hist[len] += 1;
            if len > pick_len {
                pick = u;
                pick_len = len;
            }
        }
        // Packing filter: chains of length >= t only fit into remaining
        // valencies v at a rate of floor(v/t) each.
        let mut longer: u32 = 0;
        for t in (2..=cap).rev() {
            longer += self.hist[t];
            if longer > 0 {
                let capacity: u32 = self
                    .val_remaining
                    .iter()
                    .map(|&(v, c)| (v / t * c) as u32)
                    .sum();
                if longer > capacity {
                    return;
                }
            }
        }
        // A chain already at the longest admissible valency can only close.
        let forced = if pick_len == cap {
            let closer = self.phi_inv(self.peer[pick]);
            if closer == pick || self.alpha[closer] != UNSET {
                return;
            }
            Some(closer)
        } else {
            None
        };
        for c in 0..self.n {
            if self.alpha[c] != UNSET || c == pick {
                continue;
            }
            if let Some(only) = forced {
                if c != only {
                    continue;
                }
            }
            let mark = self.trail.len();
            if self.match_pair(pick, c) {
                self.run(depth + 1);
            }
            self.undo_to(mark);
        }
    }

    fn emit(&mut self) {
        for d in 0..self.n {
            self.sigma_buf[d] = self.phi(self.alpha[d]);
        }
        // Disconnected gluings come back as None.
        let code = match self.scratch.canonical_code(&self.alpha, &self.sigma_buf) {
            Some(code) => code,
            None => return,
        };
        if self.results.contains_key(&code) {
            return;
        }
        // New class: re-derive through the public API as an end-to-end check.
        let alpha = Perm::new(self.alpha.clone()).expect("complete involution");
        let sigma = Perm::new(self.sigma_buf.clone()).expect("sigma permutation");
        let map = match CombinatorialMap::new(self.n, alpha, sigma) {
            Ok(m) => m,
            Err(_) => return,
        };
        let tiling = match Tiling::new(map, self.kind) {
            Ok(t) => t,
            Err(_) => return,
        };
        if tiling.profile().entries() != &self.target_entries[..] {
            return;
        }
        debug_assert_eq!(tiling.canonical_code(), &code[..]);
        self.results.insert(code, tiling);
    }
}

// ---------------------------------------------------------------------------
// Census bookkeeping
// ---------------------------------------------------------------------------

/// Cumulative class counts per face bound `m`, with the per-cover-order
/// partition filled in by the classification pass.
#[derive(Clone, Debug)]
pub struct CensusRecord {
    pub kind: TilingKind,
    pub profile: Profile,
    pub orientation: OrientationPolicy,
    pub rows: Vec<CensusRow>,
}

#[derive(Clone, Debug)]
pub struct CensusRow {
    pub m: usize,
    pub total: u64,
    /// Cover order k -> cumulative count; empty until classified.
    pub per_k: BTreeMap<usize, u64>,
}

impl CensusRecord {
    pub fn total(&self, m: usize) -> u64 {
        self.rows
            .iter()
            .filter(|r| r.m <= m)
            .next_back()
            .map_or(0, |r| r.total)
    }
}

/// Builds the cumulative census from an already-enumerated class list.
pub fn census_from_tilings(
    kind: TilingKind,
    profile: &Profile,
    m_max: usize,
    orientation: OrientationPolicy,
    tilings: &[Tiling],
) -> CensusRecord {
    let mut rows = Vec::with_capacity(m_max);
    let mut cumulative = 0u64;
    for m in 1..=m_max {
        cumulative += tilings.iter().filter(|t| t.face_count() == m).count() as u64;
        rows.push(CensusRow {
            m,
            total: cumulative,
            per_k: BTreeMap::new(),
        });
    }
    CensusRecord {
        kind,
        profile: profile.clone(),
        orientation,
        rows,
    }
}

/// Enumerates and counts: cumulative class counts for each `m <= m_max`,
/// together with the class representatives.
pub fn census(
    kind: TilingKind,
    profile: &Profile,
    m_max: usize,
    config: &EnumerationConfig,
) -> Result<(CensusRecord, Vec<Tiling>), EnumError> {
    let tilings = enumerate_tilings(kind, profile, m_max, config)?;
    let record = census_from_tilings(kind, profile, m_max, config.orientation, &tilings);
    Ok((record, tilings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map;
    use alloc::collections::BTreeSet;

    fn codes(tilings: &[Tiling]) -> Vec<Vec<u8>> {
        tilings
            .iter()
            .map(|t| t.canonical_code().to_vec())
            .collect()
    }

    #[test]
    fn tetrahedron_is_unique_class_up_to_four_faces() {
        let profile = Profile::new(TilingKind::Triangle, vec![-3, -3, -3, -3]);
        let config = EnumerationConfig::default();
        let tilings = enumerate_tilings(TilingKind::Triangle, &profile, 4, &config).unwrap();
        assert_eq!(tilings.len(), 1);
        assert_eq!(
            tilings[0].canonical_code(),
            &map::tetrahedron().canonical_code()[..]
        );
        assert_eq!(tilings[0].genus(), 0);
    }

    #[test]
    fn four_singular_vertices_need_four_faces() {
        let profile = Profile::new(TilingKind::Triangle, vec![-3, -3, -3, -3]);
        let config = EnumerationConfig::default();
        let tilings = enumerate_tilings(TilingKind::Triangle, &profile, 2, &config).unwrap();
        assert!(tilings.is_empty());
    }

    #[test]
    fn inadmissible_profiles_rejected() {
        let config = EnumerationConfig::default();
        for entries in [vec![0, -3], vec![-6, -6], vec![1]] {
            let profile = Profile::new(TilingKind::Triangle, entries);
            assert_eq!(
                enumerate_tilings(TilingKind::Triangle, &profile, 4, &config),
                Err(EnumError::InadmissibleProfile)
            );
        }
    }

    #[test]
    fn budget_is_enforced() {
        let profile = Profile::new(TilingKind::Triangle, vec![-3, -3, -3, -3]);
        let config = EnumerationConfig {
            budget_darts: 12,
            ..Default::default()
        };
        assert_eq!(
            enumerate_tilings(TilingKind::Triangle, &profile, 6, &config),
            Err(EnumError::ResourceBudgetExceeded {
                needed: 18,
                budget: 12
            })
        );
    }

    #[test]
    fn oracle_agrees_on_tetrahedral_profile() {
        let profile = Profile::new(TilingKind::Triangle, vec![-3, -3, -3, -3]);
        let config = EnumerationConfig::default();
        let fast = enumerate_tilings(TilingKind::Triangle, &profile, 6, &config).unwrap();
        let slow = naive_enumerate(TilingKind::Triangle, &profile, 6, &config).unwrap();
        assert_eq!(codes(&fast), codes(&slow));
        assert!(!fast.is_empty());
    }

    #[test]
    fn oracle_agrees_on_torus_squares() {
        // Empty profile: diagnostic only, but the generators must agree.
        let profile = Profile::new(TilingKind::Square, vec![]);
        let config = EnumerationConfig::default();
        let fast = enumerate_tilings(TilingKind::Square, &profile, 4, &config).unwrap();
        let slow = naive_enumerate(TilingKind::Square, &profile, 4, &config).unwrap();
        assert_eq!(codes(&fast), codes(&slow));
        let one = map::one_square_torus().canonical_code();
        assert!(fast.iter().any(|t| t.canonical_code() == &one[..]));
    }

    #[test]
    fn torus_profile_with_two_faces_is_empty_for_both() {
        let profile = Profile::new(TilingKind::Triangle, vec![1, -1]);
        let config = EnumerationConfig::default();
        let fast = enumerate_tilings(TilingKind::Triangle, &profile, 2, &config).unwrap();
        let slow = naive_enumerate(TilingKind::Triangle, &profile, 2, &config).unwrap();
        assert_eq!(fast.len(), 0);
        assert_eq!(slow.len(), 0);
    }

    #[test]
    fn cube_appears_among_eight_simple_poles() {
        let profile = Profile::new(TilingKind::Square, vec![-1; 8]);
        let config = EnumerationConfig::default();
        let tilings = enumerate_tilings(TilingKind::Square, &profile, 6, &config).unwrap();
        let cube_code = map::cube().canonical_code();
        assert!(tilings.iter().any(|t| t.canonical_code() == &cube_code[..]));
        let slow = naive_enumerate(TilingKind::Square, &profile, 6, &config).unwrap();
        assert_eq!(codes(&tilings), codes(&slow));
    }

    #[test]
    fn outputs_are_isomorph_free_and_validated() {
        let profile = Profile::new(TilingKind::Triangle, vec![-3, -3, -3, -3]);
        let config = EnumerationConfig::default();
        let tilings = enumerate_tilings(TilingKind::Triangle, &profile, 8, &config).unwrap();
        let mut seen = BTreeSet::new();
        for t in &tilings {
            assert!(seen.insert(t.canonical_code().to_vec()), "duplicate class");
            assert_eq!(t.profile().entries(), profile.entries());
            let factor = t.kind().euler_factor();
            assert_eq!(t.profile().sum(), factor * (t.genus() as i64 - 1));
        }
    }

    #[test]
    fn triangle_counts_only_grow_at_even_m() {
        let profile = Profile::new(TilingKind::Triangle, vec![-3, -3, -3, -3]);
        let config = EnumerationConfig::default();
        let (record, _) = census(TilingKind::Triangle, &profile, 7, &config).unwrap();
        for row in &record.rows {
            if row.m % 2 == 1 {
                assert_eq!(record.total(row.m), record.total(row.m.saturating_sub(1)));
            }
        }
        assert_eq!(record.total(4), 1);
    }

    #[test]
    fn census_counts_are_cumulative() {
        let profile = Profile::new(TilingKind::Square, vec![-1; 8]);
        let config = EnumerationConfig::default();
        let (record, tilings) = census(TilingKind::Square, &profile, 6, &config).unwrap();
        let mut prev = 0;
        for row in &record.rows {
            assert!(row.total >= prev);
            prev = row.total;
        }
        assert_eq!(record.total(6) as usize, tilings.len());
    }

    #[test]
    fn parallel_split_matches_sequential() {
        let profile = Profile::new(TilingKind::Square, vec![-1; 8]);
        let config = EnumerationConfig::default();
        let sequential = enumerate_tilings(TilingKind::Square, &profile, 5, &config).unwrap();
        let tasks = root_tasks(TilingKind::Square, &profile, 5, &config).unwrap();
        let mut parts = Vec::new();
        for task in &tasks {
            parts.extend(run_task(task));
        }
        let merged = merge_tilings(parts, config.orientation);
        assert_eq!(codes(&sequential), codes(&merged));
    }

    #[test]
    fn mirror_policy_never_increases_counts() {
        let profile = Profile::new(TilingKind::Square, vec![-1; 8]);
        let preserving = EnumerationConfig::default();
        let both = EnumerationConfig {
            orientation: OrientationPolicy::Both,
            ..Default::default()
        };
        let a = enumerate_tilings(TilingKind::Square, &profile, 5, &preserving).unwrap();
        let b = enumerate_tilings(TilingKind::Square, &profile, 5, &both).unwrap();
        assert!(b.len() <= a.len());
    }
}
