use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset;
use crate::graph::{Color, Graph, Vertex};

/// Total order used to break minimum-entropy ties: lower rank wins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TieOrder {
    rank: Vec<u32>,
    by_rank: Vec<Vertex>,
}

impl TieOrder {
    /// Highest degree first, then lowest id.
    pub fn highest_degree(g: &Graph) -> Self {
        let mut by_rank: Vec<Vertex> = g.vertices().collect();
        by_rank.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Self::from_order(by_rank)
    }

    /// Uniformly random order drawn from a ChaCha8 stream.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut by_rank: Vec<Vertex> = (0..n).collect();
        by_rank.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Self::from_order(by_rank)
    }

    /// `by_rank` must be a permutation of `0..n`.
    pub fn from_order(by_rank: Vec<Vertex>) -> Self {
        let mut rank = vec![u32::MAX; by_rank.len()];
        for (r, &v) in by_rank.iter().enumerate() {
            assert!(rank[v] == u32::MAX, "tie order is not a permutation");
            rank[v] = r as u32;
        }
        TieOrder { rank, by_rank }
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }
}

/// One bitset over tie ranks per entropy value, plus a summary bitset of
/// entropy values whose bucket may be non-empty. Summary bits are cleared
/// lazily when a scan finds the bucket empty.
#[derive(Debug, Clone)]
struct EntropyIndex {
    rank_words: usize,
    buckets: Vec<u64>,
    summary: Vec<u64>,
}

impl EntropyIndex {
    fn new(n: usize, m: u32) -> Self {
        let rank_words = bitset::words_for(n);
        EntropyIndex {
            rank_words,
            buckets: vec![0; rank_words * (m as usize + 1)],
            summary: vec![0; bitset::words_for(m as usize + 1)],
        }
    }

    fn bucket_mut(&mut self, e: u32) -> &mut [u64] {
        let start = e as usize * self.rank_words;
        &mut self.buckets[start..start + self.rank_words]
    }

    #[inline]
    fn insert(&mut self, rank: u32, e: u32) {
        bitset::set(self.bucket_mut(e), rank as usize);
        bitset::set(&mut self.summary, e as usize);
    }

    #[inline]
    fn remove(&mut self, rank: u32, e: u32) {
        bitset::clear(self.bucket_mut(e), rank as usize);
    }

    #[inline]
    fn contains(&self, rank: u32, e: u32) -> bool {
        let start = e as usize * self.rank_words;
        bitset::get(&self.buckets[start..start + self.rank_words], rank as usize)
    }

    /// Lowest entropy present and the best-ranked vertex rank in it.
    fn min(&mut self) -> Option<(u32, u32)> {
        loop {
            let e = bitset::first_set(&self.summary)?;
            let start = e * self.rank_words;
            match bitset::first_set(&self.buckets[start..start + self.rank_words]) {
                Some(r) => return Some((e as u32, r as u32)),
                None => bitset::clear(&mut self.summary, e),
            }
        }
    }
}

/// Plain-data copy of a [`DomainState`]: colors for colored vertices and
/// domains (sorted) for uncolored ones. Colored vertices carry an empty
/// domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainSnapshot {
    pub m: u32,
    pub colors: Vec<Option<Color>>,
    pub domains: Vec<Vec<Color>>,
}

/// Working state of one WFC-C run with color budget `m`.
///
/// Domains are bitsets over colors `1..=m` (bit `c - 1`) and are only
/// meaningful for uncolored vertices.
#[derive(Debug, Clone)]
pub struct DomainState {
    m: u32,
    domain_words: usize,
    domains: Vec<u64>,
    entropy: Vec<u32>,
    colors: Vec<Color>,
    uncolored: usize,
    forced: usize,
    order: TieOrder,
    index: EntropyIndex,
    pub(crate) stack: Vec<(Vertex, usize)>,
}

impl DomainState {
    /// Every vertex uncolored with the full domain `{1..=m}`.
    pub fn new(m: u32, order: TieOrder) -> Self {
        assert!(m >= 1, "color budget must be positive");
        let n = order.len();
        let domain_words = bitset::words_for(m as usize);
        let mut state = DomainState {
            m,
            domain_words,
            domains: vec![0; n * domain_words],
            entropy: vec![m; n],
            colors: vec![0; n],
            uncolored: n,
            forced: 0,
            index: EntropyIndex::new(n, m),
            order,
            stack: Vec::new(),
        };
        for v in 0..n {
            bitset::fill_prefix(state.domain_mut(v), m as usize);
        }
        for r in 0..n as u32 {
            state.index.insert(r, m);
        }
        state
    }

    /// Rebuilds a state from a snapshot. Domain colors must lie in `1..=m`.
    pub fn from_snapshot(snapshot: &DomainSnapshot, order: TieOrder) -> Self {
        let n = snapshot.colors.len();
        assert_eq!(order.len(), n);
        assert_eq!(snapshot.domains.len(), n);
        let m = snapshot.m;
        let domain_words = bitset::words_for(m as usize);
        let mut state = DomainState {
            m,
            domain_words,
            domains: vec![0; n * domain_words],
            entropy: vec![0; n],
            colors: vec![0; n],
            uncolored: 0,
            forced: 0,
            index: EntropyIndex::new(n, m),
            order,
            stack: Vec::new(),
        };
        for v in 0..n {
            match snapshot.colors[v] {
                Some(c) => state.colors[v] = c,
                None => {
                    for &c in &snapshot.domains[v] {
                        assert!(c >= 1 && c <= m, "domain color {c} outside 1..={m}");
                        bitset::set(state.domain_mut(v), c as usize - 1);
                    }
                    let e = bitset::ones(state.domain(v)).count() as u32;
                    state.entropy[v] = e;
                    state.uncolored += 1;
                    state.index.insert(state.order.rank[v], e);
                }
            }
        }
        state
    }

    pub fn snapshot(&self) -> DomainSnapshot {
        let n = self.colors.len();
        DomainSnapshot {
            m: self.m,
            colors: (0..n).map(|v| self.color(v)).collect(),
            domains: (0..n)
                .map(|v| {
                    if self.is_colored(v) {
                        Vec::new()
                    } else {
                        self.domain_colors(v).collect()
                    }
                })
                .collect(),
        }
    }

    #[inline]
    fn domain(&self, v: Vertex) -> &[u64] {
        &self.domains[v * self.domain_words..(v + 1) * self.domain_words]
    }

    #[inline]
    fn domain_mut(&mut self, v: Vertex) -> &mut [u64] {
        &mut self.domains[v * self.domain_words..(v + 1) * self.domain_words]
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn uncolored_count(&self) -> usize {
        self.uncolored
    }

    /// Vertices colored by propagation since construction.
    pub fn forced_count(&self) -> usize {
        self.forced
    }

    #[inline]
    pub fn is_colored(&self, v: Vertex) -> bool {
        self.colors[v] != 0
    }

    #[inline]
    pub fn color(&self, v: Vertex) -> Option<Color> {
        match self.colors[v] {
            0 => None,
            c => Some(c),
        }
    }

    #[inline]
    pub fn entropy(&self, v: Vertex) -> u32 {
        self.entropy[v]
    }

    pub fn domain_contains(&self, v: Vertex, c: Color) -> bool {
        c >= 1 && c <= self.m && bitset::get(self.domain(v), c as usize - 1)
    }

    /// Domain of `v` in increasing order.
    pub fn domain_colors(&self, v: Vertex) -> impl Iterator<Item = Color> + '_ {
        bitset::ones(self.domain(v)).map(|b| b as Color + 1)
    }

    #[inline]
    pub fn min_color(&self, v: Vertex) -> Option<Color> {
        bitset::first_set(self.domain(v)).map(|b| b as Color + 1)
    }

    /// Uncolored vertex with minimum entropy, ties resolved by the tie order.
    pub fn min_entropy_vertex(&mut self) -> Option<(Vertex, u32)> {
        self.index
            .min()
            .map(|(e, r)| (self.order.by_rank[r as usize], e))
    }

    /// Colors an uncolored vertex and drops it from the entropy index.
    pub fn assign(&mut self, v: Vertex, c: Color) {
        debug_assert!(!self.is_colored(v));
        debug_assert!(c >= 1);
        self.colors[v] = c;
        self.uncolored -= 1;
        self.index.remove(self.order.rank[v], self.entropy[v]);
    }

    pub(crate) fn note_forced(&mut self) {
        self.forced += 1;
    }

    /// Removes `c` from the domain of uncolored `v`. Returns whether the
    /// domain changed.
    #[inline]
    pub fn remove_color(&mut self, v: Vertex, c: Color) -> bool {
        debug_assert!(!self.is_colored(v));
        let bit = c as usize - 1;
        if c > self.m || !bitset::get(self.domain(v), bit) {
            return false;
        }
        bitset::clear(self.domain_mut(v), bit);
        let rank = self.order.rank[v];
        let e = self.entropy[v];
        self.index.remove(rank, e);
        self.index.insert(rank, e - 1);
        self.entropy[v] = e - 1;
        true
    }

    pub fn colors(&self) -> Vec<Option<Color>> {
        (0..self.colors.len()).map(|v| self.color(v)).collect()
    }

    /// Checks the structural invariants against `g`: cached entropy equals
    /// domain size, the index holds exactly the uncolored vertices under
    /// their entropy, and no uncolored domain holds a colored neighbor's
    /// color. Returns a description of the first failure.
    pub fn check_invariants(&self, g: &Graph) -> Result<(), String> {
        let mut uncolored = 0;
        for v in 0..self.colors.len() {
            let rank = self.order.rank[v];
            if self.is_colored(v) {
                for e in 0..=self.m {
                    if self.index.contains(rank, e) {
                        return Err(format!("colored vertex {v} still indexed"));
                    }
                }
                continue;
            }
            uncolored += 1;
            let size = bitset::ones(self.domain(v)).count() as u32;
            if size != self.entropy[v] {
                return Err(format!(
                    "vertex {v}: entropy {} but domain size {size}",
                    self.entropy[v]
                ));
            }
            for e in 0..=self.m {
                if self.index.contains(rank, e) != (e == size) {
                    return Err(format!("vertex {v}: index disagrees at entropy {e}"));
                }
            }
            for &w in g.neighbors(v) {
                if let Some(c) = self.color(w) {
                    if self.domain_contains(v, c) {
                        return Err(format!(
                            "vertex {v} keeps color {c} of colored neighbor {w}"
                        ));
                    }
                }
            }
        }
        if uncolored != self.uncolored {
            return Err(format!(
                "uncolored count {} but {uncolored} uncolored vertices",
                self.uncolored
            ));
        }
        Ok(())
    }
}
