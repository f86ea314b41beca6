//! Graphs, edge colorings, subset colorings, and the exact detectors for
//! cliques, anticliques, and monochromatic (hyper)cliques.
//!
//! Everything here is desk-scale and exact: detectors answer by search, not by
//! bound. Witnesses are always the lexicographically first object of their
//! kind (vertex sets compared as sorted tuples; colors before vertex sets for
//! monochromatic searches), which keeps every downstream report reproducible.

use crate::bits;
use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// small combinatorial helpers
// ---------------------------------------------------------------------------

/// Binomial coefficient C(n, k), saturating at `u128::MAX` on overflow.
///
/// Saturation (rather than panic or Option) keeps cap checks simple: every
/// resource cap in this crate is far below `u128::MAX`, so a saturated value
/// can never masquerade as a legal size.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc == C(n, i) here, so the product below is divisible by i + 1.
        acc = match acc.checked_mul((n - i) as u128) {
            Some(p) => p / (i + 1) as u128,
            None => return u128::MAX,
        };
    }
    acc
}

/// Rank of the unordered pair `{i, j}` (with `i < j < r`) among all pairs of
/// `{0..r-1}` in lexicographic order: (0,1), (0,2), …, (0,r−1), (1,2), …
pub fn pair_index(r: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < r);
    i * (2 * r - i - 1) / 2 + (j - i - 1)
}

/// Advances a sorted `l`-subset of `{0..m-1}` to its lexicographic successor.
/// Returns `false` (leaving the slice in an unspecified state) when `combo`
/// was already the last subset.
pub fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let l = combo.len();
    let mut i = l;
    while i > 0 {
        i -= 1;
        if combo[i] < m - (l - i) {
            combo[i] += 1;
            for j in i + 1..l {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Lexicographic rank of a sorted `l`-subset of `{0..m-1}`.
pub fn subset_rank(m: usize, l: usize, combo: &[usize]) -> usize {
    debug_assert_eq!(combo.len(), l);
    let mut rank: u128 = 0;
    let mut prev = 0usize;
    for (idx, &c) in combo.iter().enumerate() {
        for v in prev..c {
            rank += binomial((m - 1 - v) as u64, (l - 1 - idx) as u64);
        }
        prev = c + 1;
    }
    rank as usize
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// Simple undirected graph on vertices `0..r`, stored as bitset adjacency
/// rows. Symmetry and a zero diagonal are maintained by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    r: usize,
    w: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn empty(r: usize) -> Graph {
        let w = bits::words_for(r);
        Graph { r, w, rows: vec![0; w * r] }
    }

    /// Builds a graph from an edge list (0-based endpoints). Rejects loops,
    /// out-of-range endpoints, and duplicate edges (in either orientation).
    pub fn from_edges(r: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(r);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {}", u + 1)));
            }
            if u >= r || v >= r {
                return Err(Error::invalid(format!(
                    "edge ({}, {}) out of range for {} vertices",
                    u + 1,
                    v + 1,
                    r
                )));
            }
            if g.has_edge(u, v) {
                return Err(Error::invalid(format!("duplicate edge ({}, {})", u + 1, v + 1)));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph by asking `f(i, j)` for every pair `i < j` in
    /// lexicographic order. The call order is part of the randomized
    /// constructors' stream-consumption contract.
    pub fn from_fn(r: usize, mut f: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut g = Graph::empty(r);
        for i in 0..r {
            for j in i + 1..r {
                if f(i, j) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        bits::set(&mut self.rows[u * self.w..(u + 1) * self.w], v);
        bits::set(&mut self.rows[v * self.w..(v + 1) * self.w], u);
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::get(self.row(u), v)
    }

    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.w..(u + 1) * self.w]
    }

    pub fn edge_count(&self) -> usize {
        bits::count_ones(&self.rows) / 2
    }

    /// Edges as 0-based pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.r {
            for j in bits::ones(self.row(i)) {
                if j > i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Complement graph (loops stay absent).
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.r);
        if self.r == 0 {
            return g;
        }
        let tail = bits::tail_mask(self.r);
        for i in 0..self.r {
            let src = self.row(i);
            let dst = &mut g.rows[i * self.w..(i + 1) * self.w];
            for k in 0..self.w {
                dst[k] = !src[k];
            }
            *dst.last_mut().unwrap() &= tail;
            bits::clear(dst, i);
        }
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("r", &self.r)
            .field("edges", &self.edges())
            .finish()
    }
}

// ---------------------------------------------------------------------------
// clique / anticlique search
// ---------------------------------------------------------------------------

/// Lex-ordered backtracking over candidate bitsets.
///
/// Vertices are tried in ascending order and candidates are restricted to
/// larger vertices, so complete cliques are visited in lexicographic order of
/// their sorted vertex tuples; the first hit is the lex-smallest witness.
/// Pruning (not enough candidates left to finish) never skips the branch that
/// would have completed first, so the tie-break survives it.
struct CliqueSearch<'a> {
    rows: &'a [u64],
    w: usize,
    n: usize,
    chosen: Vec<usize>,
}

impl CliqueSearch<'_> {
    fn run(rows: &[u64], r: usize, w: usize, n: usize) -> Option<Vec<usize>> {
        if n == 0 {
            return Some(Vec::new());
        }
        if n > r {
            return None;
        }
        let mut all = vec![0u64; w];
        for i in 0..r {
            bits::set(&mut all, i);
        }
        let mut search = CliqueSearch { rows, w, n, chosen: Vec::with_capacity(n) };
        if search.extend(&all) {
            Some(search.chosen)
        } else {
            None
        }
    }

    fn extend(&mut self, cands: &[u64]) -> bool {
        if self.chosen.len() == self.n {
            return true;
        }
        let need = self.n - self.chosen.len();
        let mut avail = bits::count_ones(cands);
        let mut next = vec![0u64; self.w];
        for v in bits::ones(cands) {
            if avail < need {
                return false; // candidates at or after v can no longer finish
            }
            avail -= 1;
            let row = &self.rows[v * self.w..(v + 1) * self.w];
            for k in 0..self.w {
                next[k] = cands[k] & row[k];
            }
            // restrict to vertices after v, keeping enumeration lexicographic
            for k in 0..v / 64 {
                next[k] = 0;
            }
            let b = v % 64;
            next[v / 64] &= if b == 63 { 0 } else { !0u64 << (b + 1) };
            if bits::count_ones(&next) >= need - 1 {
                self.chosen.push(v);
                let saved = std::mem::take(&mut next);
                if self.extend(&saved) {
                    return true;
                }
                next = saved;
                self.chosen.pop();
            }
        }
        false
    }
}

/// True iff `g` contains a clique on `n` vertices. `n > g.r()` is legal and
/// yields `false`; `n == 0` is vacuously `true`.
pub fn has_clique(g: &Graph, n: usize) -> bool {
    find_clique(g, n).is_some()
}

/// Lexicographically first `n`-clique of `g`, if any.
pub fn find_clique(g: &Graph, n: usize) -> Option<Vec<usize>> {
    CliqueSearch::run(&g.rows, g.r, g.w.max(1), n)
}

/// True iff `g` contains `n` pairwise non-adjacent vertices. Equivalent to
/// `has_clique(&g.complement(), n)` but computed on complemented rows
/// directly; the equivalence is property-tested.
pub fn has_anticlique(g: &Graph, n: usize) -> bool {
    find_anticlique(g, n).is_some()
}

/// Lexicographically first `n`-anticlique of `g`, if any.
pub fn find_anticlique(g: &Graph, n: usize) -> Option<Vec<usize>> {
    if g.r == 0 {
        return if n == 0 { Some(Vec::new()) } else { None };
    }
    let w = g.w;
    let tail = bits::tail_mask(g.r);
    let mut rows = vec![0u64; w * g.r];
    for i in 0..g.r {
        let src = g.row(i);
        let dst = &mut rows[i * w..(i + 1) * w];
        for k in 0..w {
            dst[k] = !src[k];
        }
        dst[w - 1] &= tail;
        bits::clear(dst, i);
    }
    CliqueSearch::run(&rows, g.r, w, n)
}

// ---------------------------------------------------------------------------
// EdgeColoring
// ---------------------------------------------------------------------------

/// Coloring of the edges of the complete graph K_r with colors `0..k`.
/// Colors are stored per unordered pair in lexicographic pair order.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    r: usize,
    k: u32,
    colors: Vec<u32>,
}

impl EdgeColoring {
    /// `colors` must hold one color per pair of `{0..r-1}` in lexicographic
    /// pair order, each strictly below `k`. `k == 0` is only legal for `r < 2`
    /// (no edges to color).
    pub fn new(r: usize, k: u32, colors: Vec<u32>) -> Result<EdgeColoring> {
        let pairs = binomial(r as u64, 2) as usize;
        if colors.len() != pairs {
            return Err(Error::invalid(format!(
                "expected {} edge colors for r = {}, got {}",
                pairs,
                r,
                colors.len()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= k) {
            return Err(Error::invalid(format!("edge color {} out of range (k = {})", c + 1, k)));
        }
        Ok(EdgeColoring { r, k, colors })
    }

    /// Builds a coloring by asking `f(i, j)` for every pair `i < j` in
    /// lexicographic order (same ordering contract as [`Graph::from_fn`]).
    pub fn from_fn(r: usize, k: u32, mut f: impl FnMut(usize, usize) -> u32) -> EdgeColoring {
        let mut colors = Vec::with_capacity(binomial(r as u64, 2) as usize);
        for i in 0..r {
            for j in i + 1..r {
                let c = f(i, j);
                debug_assert!(c < k);
                colors.push(c);
            }
        }
        EdgeColoring { r, k, colors }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn color(&self, i: usize, j: usize) -> u32 {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.colors[pair_index(self.r, i, j)]
    }

    /// Colors in lexicographic pair order (the storage order).
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// The graph formed by the edges of color `q`.
    pub fn color_class(&self, q: u32) -> Graph {
        Graph::from_fn(self.r, |i, j| self.colors[pair_index(self.r, i, j)] == q)
    }
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EdgeColoring")
            .field("r", &self.r)
            .field("k", &self.k)
            .finish()
    }
}

/// First monochromatic `n`-clique of the coloring, minimizing the pair
/// (color, vertex set) lexicographically: colors are scanned in ascending
/// order, and within a color the witness is the lex-first clique.
pub fn find_monochromatic_clique(c: &EdgeColoring, n: usize) -> Option<(u32, Vec<usize>)> {
    if n > c.r {
        return None;
    }
    for q in 0..c.k {
        if let Some(set) = find_clique(&c.color_class(q), n) {
            return Some((q, set));
        }
    }
    None
}

// ---------------------------------------------------------------------------
// SubsetColoring
// ---------------------------------------------------------------------------

/// Coloring of all `l`-element subsets of `{0..m-1}` with colors `0..k`,
/// stored in lexicographic subset order.
#[derive(Clone, PartialEq, Eq)]
pub struct SubsetColoring {
    m: usize,
    l: usize,
    k: u32,
    colors: Vec<u32>,
}

impl SubsetColoring {
    pub fn new(m: usize, l: usize, k: u32, colors: Vec<u32>) -> Result<SubsetColoring> {
        if l == 0 {
            return Err(Error::invalid("subset size l must be at least 1"));
        }
        if l > m {
            return Err(Error::invalid(format!("subset size l = {} exceeds universe m = {}", l, m)));
        }
        let expect = binomial(m as u64, l as u64);
        if colors.len() as u128 != expect {
            return Err(Error::invalid(format!(
                "expected {} subset colors for (m, l) = ({}, {}), got {}",
                expect,
                m,
                l,
                colors.len()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= k) {
            return Err(Error::invalid(format!("subset color {} out of range (k = {})", c + 1, k)));
        }
        Ok(SubsetColoring { m, l, k, colors })
    }

    /// Builds a coloring by asking `f` for every sorted `l`-subset in
    /// lexicographic order (part of the stream-consumption contract).
    pub fn from_fn(m: usize, l: usize, k: u32, mut f: impl FnMut(&[usize]) -> u32) -> Result<SubsetColoring> {
        if l == 0 || l > m {
            return Err(Error::invalid(format!("subset size l = {} invalid for universe m = {}", l, m)));
        }
        let count = binomial(m as u64, l as u64);
        if count > usize::MAX as u128 {
            return Err(Error::resource(format!("C({}, {}) subsets do not fit in memory", m, l)));
        }
        let mut colors = Vec::with_capacity(count as usize);
        let mut combo: Vec<usize> = (0..l).collect();
        loop {
            let c = f(&combo);
            debug_assert!(c < k);
            colors.push(c);
            if !next_combination(&mut combo, m) {
                break;
            }
        }
        Ok(SubsetColoring { m, l, k, colors })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Color of a sorted `l`-subset (0-based elements).
    pub fn color(&self, subset: &[usize]) -> u32 {
        debug_assert!(subset.windows(2).all(|p| p[0] < p[1]));
        debug_assert!(subset.iter().all(|&v| v < self.m));
        self.colors[subset_rank(self.m, self.l, subset)]
    }

    /// Colors in lexicographic subset order (the storage order).
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }
}

impl std::fmt::Debug for SubsetColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubsetColoring")
            .field("m", &self.m)
            .field("l", &self.l)
            .field("k", &self.k)
            .finish()
    }
}

/// First monochromatic hyperclique: an `n`-element set whose `l`-subsets all
/// share one color, minimizing (color, vertex set) lexicographically.
///
/// Requires `n >= l`; `n > m` is legal and yields `None`.
pub fn find_monochromatic_hyperclique(c: &SubsetColoring, n: usize) -> Result<Option<(u32, Vec<usize>)>> {
    if n < c.l {
        return Err(Error::invalid(format!(
            "hyperclique size n = {} is smaller than the subset size l = {}",
            n, c.l
        )));
    }
    if n > c.m {
        return Ok(None);
    }
    for q in 0..c.k {
        let mut chosen = Vec::with_capacity(n);
        if extend_hyperclique(c, q, n, 0, &mut chosen) {
            return Ok(Some((q, chosen)));
        }
    }
    Ok(None)
}

fn extend_hyperclique(c: &SubsetColoring, q: u32, n: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == n {
        return true;
    }
    let need = n - chosen.len();
    for v in start..c.m {
        if c.m - v < need {
            return false;
        }
        if extends_monochromatically(c, q, chosen, v) {
            chosen.push(v);
            if extend_hyperclique(c, q, n, v + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Checks every l-subset of `chosen ∪ {v}` that contains `v`; over the whole
/// search each l-subset of the final set is checked exactly once (when its
/// largest element is pushed).
fn extends_monochromatically(c: &SubsetColoring, q: u32, chosen: &[usize], v: usize) -> bool {
    if chosen.len() + 1 < c.l {
        return true;
    }
    let t = c.l - 1;
    if t == 0 {
        return c.color(&[v]) == q;
    }
    let mut idx: Vec<usize> = (0..t).collect();
    let mut subset = vec![0usize; c.l];
    loop {
        for (s, &i) in subset.iter_mut().zip(idx.iter()) {
            *s = chosen[i];
        }
        subset[t] = v;
        if c.color(&subset) != q {
            return false;
        }
        if !next_combination(&mut idx, chosen.len()) {
            return true;
        }
    }
}

// ---------------------------------------------------------------------------
