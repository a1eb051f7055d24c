//! Enumeration of list assignments from the pot `{1, ..., p}`, one per orbit.
//!
//! Lists are chosen vertex by vertex. Colours that no earlier list tells apart
//! form an interval, and a new list always takes the lowest colours of each
//! interval, so exactly the lexicographically least member of every
//! colour-permutation orbit is produced, in increasing lexicographic order.
//! Optionally, automorphisms of `(G, f)` cut prefixes too: lists on swappable
//! twins must be sorted, and a prefix is dropped when one of the remaining
//! automorphisms (those that move a vertex out of its twin class, plus single
//! twin swaps) maps it to something smaller. Every orbit keeps its least
//! member; a few orbits may be visited more than once.

use super::{ColorSet, ListAssignment, ListError, MAX_COLOR};
use crate::budget::{Budget, LocalMeter, Meter};
use crate::graph::{automorphisms, Graph};

const PERMS_PER_DEPTH: usize = 4096;
pub(crate) const AUTOMORPHISM_CAP: usize = 50_000;

/// Colour interval `(start, len)`.
type Class = (u8, u8);

#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct Counters {
    pub nodes: u64,
    pub assignments: u64,
    pub symmetry_prunes: u64,
    pub pot_prunes: u64,
    pub completion_prunes: u64,
}

impl Counters {
    pub fn merge(&mut self, o: &Counters) {
        self.nodes += o.nodes;
        self.assignments += o.assignments;
        self.symmetry_prunes += o.symmetry_prunes;
        self.pot_prunes += o.pot_prunes;
        self.completion_prunes += o.completion_prunes;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flow {
    Continue,
    Stop,
    Tripped,
}

/// Colour classes of a relabelled prefix: actual colours, canonical interval.
type State = Vec<(u64, u8, u8)>;

#[derive(Debug, Clone)]
struct Perm {
    map: Vec<u8>,
    /// Index at the previous depth of the same restriction, when it fixes the last vertex.
    parent: Option<u32>,
    first_moved: u8,
}

/// A permutation under which the prefix relabels to itself so far.
#[derive(Debug, Clone)]
pub(crate) struct Tie {
    perm: u32,
    state: State,
}

/// Restrictions of automorphisms to `{0, ..., d-1}` for each depth `d`.
#[derive(Debug, Clone, Default)]
pub(crate) struct Symmetry {
    by_depth: Vec<Vec<Perm>>,
    /// Latest earlier vertex `u` such that swapping `u` and `v` is an automorphism.
    twin: Vec<Option<usize>>,
    pub group_size: usize,
}

enum Cmp {
    Less,
    Greater,
    Equal,
}

fn step(state: &State, y: u64, next: &mut State) -> u64 {
    let mut canon = 0u64;
    next.clear();
    for &(actual, start, len) in state {
        let k = (y & actual).count_ones() as u8;
        canon |= interval(start, k);
        if k > 0 {
            next.push((y & actual, start, k));
        }
        if k < len {
            next.push((actual & !y, start + k, len - k));
        }
    }
    canon
}

/// Order of two equal-size colour sets as sorted sequences.
#[inline]
fn cmp_sets(a: u64, b: u64) -> Cmp {
    if a == b {
        return Cmp::Equal;
    }
    let low = (a ^ b) & (a ^ b).wrapping_neg();
    if a & low != 0 {
        Cmp::Less
    } else {
        Cmp::Greater
    }
}

impl Symmetry {
    pub fn of(g: &Graph, f: &[usize]) -> Self {
        let (auts, _) = automorphisms(g, f, AUTOMORPHISM_CAP);
        let n = g.order();
        let twin: Vec<Option<usize>> = (0..n)
            .map(|v| {
                (0..v).rev().find(|&u| f[u] == f[v] && g.neighbors(u).without(v) == g.neighbors(v).without(u))
            })
            .collect();
        let mut class: Vec<usize> = (0..n).collect();
        for v in 0..n {
            if let Some(u) = twin[v] {
                class[v] = class[u];
            }
        }
        let mut by_depth: Vec<Vec<Perm>> = vec![Vec::new(); n + 1];
        for d in 1..=n {
            let mut maps: Vec<Vec<u8>> = auts
                .iter()
                .filter(|s| s[..d].iter().all(|&x| x < d))
                .filter(|s| s[..d].iter().enumerate().any(|(i, &x)| i != x))
                .filter(|s| {
                    s[..d].iter().enumerate().any(|(i, &x)| class[i] != class[x])
                        || s[..d].iter().enumerate().filter(|&(i, &x)| i != x).count() == 2
                })
                .map(|s| s[..d].iter().map(|&x| x as u8).collect())
                .collect();
            maps.sort_unstable();
            maps.dedup();
            maps.truncate(PERMS_PER_DEPTH);
            let prev = &by_depth[d - 1];
            let perms = maps
                .into_iter()
                .map(|map| {
                    let parent = if map[d - 1] as usize == d - 1 {
                        prev.binary_search_by(|p| p.map[..].cmp(&map[..d - 1])).ok().map(|i| i as u32)
                    } else {
                        None
                    };
                    let first_moved = map.iter().enumerate().position(|(i, &x)| i != x as usize);
                    Perm { map, parent, first_moved: first_moved.unwrap() as u8 }
                })
                .collect();
            by_depth[d] = perms;
        }
        Symmetry { by_depth, twin, group_size: auts.len() }
    }

    /// Ties for the extended prefix, or `None` if some permutation sends it to
    /// a smaller canonical form.
    fn extend(&self, ties: &[Tie], prefix: &[u64], pot: usize) -> Option<Vec<Tie>> {
        let d = prefix.len();
        let x = prefix[d - 1];
        let mut out = Vec::new();
        let mut next = State::with_capacity(pot);
        let mut cur = State::with_capacity(pot);
        // identity states before each position; fixed points at the front relabel trivially
        let mut before: Vec<State> = Vec::new();
        'perm: for (idx, p) in self.by_depth[d].iter().enumerate() {
            if let Some(par) = p.parent {
                let Ok(t) = ties.binary_search_by_key(&par, |t| t.perm) else {
                    continue;
                };
                let canon = step(&ties[t].state, x, &mut next);
                match cmp_sets(canon, x) {
                    Cmp::Less => return None,
                    Cmp::Greater => continue,
                    Cmp::Equal => out.push(Tie { perm: idx as u32, state: next.clone() }),
                }
                continue;
            }
            if before.is_empty() {
                let mut st: State = vec![(interval(1, pot as u8), 1, pot as u8)];
                for &xj in prefix {
                    step(&st, xj, &mut next);
                    before.push(std::mem::replace(&mut st, next.clone()));
                }
            }
            let j0 = p.first_moved as usize;
            cur.clone_from(&before[j0]);
            for (j, &xj) in prefix.iter().enumerate().skip(j0) {
                let canon = step(&cur, prefix[p.map[j] as usize], &mut next);
                match cmp_sets(canon, xj) {
                    Cmp::Less => return None,
                    Cmp::Greater => continue 'perm,
                    Cmp::Equal => std::mem::swap(&mut cur, &mut next),
                }
            }
            out.push(Tie { perm: idx as u32, state: cur.clone() });
        }
        Some(out)
    }
}

#[inline]
fn interval(start: u8, len: u8) -> u64 {
    if len == 0 {
        0
    } else {
        (u64::MAX >> (64 - len as u32)) << start
    }
}

/// Skips prefixes whose every completion is colourable.
///
/// Applies when the last vertices are universal. Once the other vertices have
/// lists, colouring them with at most `palette` colours leaves each universal
/// vertex enough colours to finish the clique whatever its list is.
#[derive(Debug, Clone)]
pub(crate) struct Completion {
    depth: usize,
    adj: Vec<u32>,
    palette: usize,
}

impl Completion {
    pub fn of(g: &Graph, sizes: &[usize]) -> Option<Self> {
        let n = g.order();
        let u = (0..n).rev().take_while(|&v| g.degree(v) + 1 == n).count();
        let depth = n - u;
        if u == 0 || depth == 0 {
            return None;
        }
        let mut tail: Vec<usize> = sizes[depth..].to_vec();
        tail.sort_unstable();
        let palette = tail.iter().enumerate().map(|(i, &k)| k as i64 - i as i64 - 1).min()?;
        if palette <= 0 {
            return None;
        }
        let adj = (0..depth).map(|v| g.neighbors(v).0 & ((1u32 << v) - 1)).collect();
        Some(Completion { depth, adj, palette: palette as usize })
    }

    fn settles(&self, lists: &[u64]) -> bool {
        let mut colors = vec![0u8; self.depth];
        self.fit(lists, 0, &mut colors, 0)
    }

    fn fit(&self, lists: &[u64], v: usize, colors: &mut [u8], used: u64) -> bool {
        if v == self.depth {
            return true;
        }
        let mut taken = 0u64;
        let mut it = self.adj[v];
        while it != 0 {
            taken |= 1 << colors[it.trailing_zeros() as usize];
            it &= it - 1;
        }
        let free = lists[v] & !taken;
        let old = free & used;
        let fresh = if (used.count_ones() as usize) < self.palette { free & !used } else { 0 };
        for mut cs in [old, fresh] {
            while cs != 0 {
                let c = cs.trailing_zeros();
                cs &= cs - 1;
                colors[v] = c as u8;
                if self.fit(lists, v + 1, colors, used | (1 << c)) {
                    return true;
                }
            }
        }
        false
    }
}

/// A node of the enumeration: lists for the first `lists.len()` vertices.
#[derive(Debug, Clone)]
pub(crate) struct Node {
    pub lists: Vec<u64>,
    classes: Vec<Class>,
    untouched: u8,
    ties: Vec<Tie>,
}

/// The assignments with `|L(v)| = sizes[v]` and pot exactly `{1, ..., pot}`.
pub(crate) struct Space<'a> {
    sizes: &'a [usize],
    pot: usize,
    suffix: Vec<usize>,
    symmetry: Option<&'a Symmetry>,
    completion: Option<&'a Completion>,
}

impl<'a> Space<'a> {
    pub fn new(sizes: &'a [usize], pot: usize, symmetry: Option<&'a Symmetry>) -> Self {
        assert!(pot <= MAX_COLOR as usize);
        let mut suffix = vec![0; sizes.len() + 1];
        for i in (0..sizes.len()).rev() {
            suffix[i] = suffix[i + 1] + sizes[i];
        }
        Space { sizes, pot, suffix, symmetry, completion: None }
    }

    pub fn with_completion(mut self, completion: Option<&'a Completion>) -> Self {
        self.completion = completion;
        self
    }

    pub fn root(&self) -> Node {
        let classes = if self.pot > 0 { vec![(1, self.pot as u8)] } else { Vec::new() };
        Node { lists: Vec::new(), classes, untouched: self.pot as u8, ties: Vec::new() }
    }

    /// Children of `node` in increasing lexicographic order, after pruning.
    pub fn children(&self, node: &Node, stats: &mut Counters) -> Vec<Node> {
        let i = node.lists.len();
        let k = self.sizes[i];
        let mut out = Vec::new();
        if k > self.pot {
            return out;
        }
        let mut caps = vec![0usize; node.classes.len() + 1];
        for j in (0..node.classes.len()).rev() {
            caps[j] = caps[j + 1] + node.classes[j].1 as usize;
        }
        let mut counts = vec![0u8; node.classes.len()];
        self.choose(node, 0, k, &caps, &mut counts, &mut out, stats);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &self,
        node: &Node,
        j: usize,
        remaining: usize,
        caps: &[usize],
        counts: &mut [u8],
        out: &mut Vec<Node>,
        stats: &mut Counters,
    ) {
        if j == node.classes.len() {
            if remaining == 0 {
                self.emit(node, counts, out, stats);
            }
            return;
        }
        let len = node.classes[j].1 as usize;
        let hi = len.min(remaining);
        let lo = remaining.saturating_sub(caps[j + 1]);
        for c in (lo..=hi).rev() {
            counts[j] = c as u8;
            self.choose(node, j + 1, remaining - c, caps, counts, out, stats);
        }
    }

    fn emit(&self, node: &Node, counts: &[u8], out: &mut Vec<Node>, stats: &mut Counters) {
        let i = node.lists.len();
        let mut untouched = node.untouched;
        if untouched > 0 {
            untouched -= counts[counts.len() - 1];
        }
        if untouched as usize > self.suffix[i + 1] {
            stats.pot_prunes += 1;
            return;
        }
        let mut list = 0u64;
        let mut classes = Vec::with_capacity(node.classes.len() + counts.len());
        for (&(start, len), &k) in node.classes.iter().zip(counts) {
            list |= interval(start, k);
            if k > 0 {
                classes.push((start, k));
            }
            if k < len {
                classes.push((start + k, len - k));
            }
        }
        let mut lists = Vec::with_capacity(self.sizes.len());
        lists.extend_from_slice(&node.lists);
        lists.push(list);
        if let Some(u) = self.symmetry.and_then(|sym| sym.twin[i]) {
            if let Cmp::Less = cmp_sets(list, node.lists[u]) {
                stats.symmetry_prunes += 1;
                return;
            }
        }
        let ties = match self.symmetry {
            Some(sym) => match sym.extend(&node.ties, &lists, self.pot) {
                Some(t) => t,
                None => {
                    stats.symmetry_prunes += 1;
                    return;
                }
            },
            None => Vec::new(),
        };
        out.push(Node { lists, classes, untouched, ties });
    }

    pub fn is_leaf(&self, node: &Node) -> bool {
        node.lists.len() == self.sizes.len()
    }

    /// Depth-first walk below `node`; `leaf` returns `true` to stop.
    pub fn walk(
        &self,
        node: &Node,
        meter: &mut LocalMeter<'_>,
        stats: &mut Counters,
        abort: &dyn Fn() -> bool,
        leaf: &mut dyn FnMut(&[u64]) -> bool,
    ) -> Flow {
        stats.nodes += 1;
        if !meter.tick() {
            return Flow::Tripped;
        }
        if self.is_leaf(node) {
            stats.assignments += 1;
            return if leaf(&node.lists) { Flow::Stop } else { Flow::Continue };
        }
        if stats.nodes.is_multiple_of(4096) && abort() {
            return Flow::Stop;
        }
        if let Some(c) = self.completion {
            if node.lists.len() == c.depth && c.settles(&node.lists) {
                stats.completion_prunes += 1;
                return Flow::Continue;
            }
        }
        for child in self.children(node, stats) {
            match self.walk(&child, meter, stats, abort, leaf) {
                Flow::Continue => {}
                other => return other,
            }
        }
        Flow::Continue
    }

    /// Nodes at the first depth with at least `target` of them, in walk order.
    pub fn frontier(&self, target: usize, stats: &mut Counters) -> Vec<Node> {
        let mut layer = vec![self.root()];
        while layer.len() < target && !layer.is_empty() && !self.is_leaf(&layer[0]) {
            let mut next = Vec::new();
            for node in &layer {
                stats.nodes += 1;
                next.extend(self.children(node, stats));
            }
            layer = next;
        }
        layer
    }
}

fn check_sizes(g: &Graph, sizes: &[usize], pot: usize) -> Result<(), ListError> {
    if sizes.len() != g.order() {
        return Err(ListError::LengthMismatch { expected: g.order(), got: sizes.len() });
    }
    if pot > MAX_COLOR as usize {
        return Err(ListError::PotTooLarge(pot));
    }
    Ok(())
}

/// Calls `visit` on each canonical assignment with `|L(v)| = sizes[v]` and pot
/// exactly `{1, ..., pot}`, in increasing lexicographic order, until it
/// returns `false`.
///
/// With `use_automorphisms`, assignments equivalent under an automorphism of
/// `g` that preserves `sizes` are also reduced to their least member.
pub fn for_each_canonical_assignment(
    g: &Graph,
    sizes: &[usize],
    pot: usize,
    use_automorphisms: bool,
    mut visit: impl FnMut(&ListAssignment) -> bool,
) -> Result<(), ListError> {
    check_sizes(g, sizes, pot)?;
    let sym = use_automorphisms.then(|| Symmetry::of(g, sizes));
    let space = Space::new(sizes, pot, sym.as_ref());
    let meter = Meter::new(Budget::unlimited());
    let mut local = meter.local();
    let mut stats = Counters::default();
    let mut leaf = |lists: &[u64]| !visit(&ListAssignment::new(lists.iter().map(|&l| ColorSet(l)).collect()));
    space.walk(&space.root(), &mut local, &mut stats, &|| false, &mut leaf);
    Ok(())
}

/// All assignments visited by [`for_each_canonical_assignment`].
pub fn canonical_assignments(
    g: &Graph,
    sizes: &[usize],
    pot: usize,
    use_automorphisms: bool,
) -> Result<Vec<ListAssignment>, ListError> {
    let mut out = Vec::new();
    for_each_canonical_assignment(g, sizes, pot, use_automorphisms, |l| {
        out.push(l.clone());
        true
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn single_vertex_single_orbit() {
        let g = named("K1").unwrap();
        let all = canonical_assignments(&g, &[2], 2, false).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].list(0), ColorSet::first_k(2));
        assert!(canonical_assignments(&g, &[2], 3, false).unwrap().is_empty());
    }

    #[test]
    fn orbit_count_two_vertices() {
        // two 2-sets covering the pot: one orbit for each overlap size
        let g = named("E2").unwrap();
        let all = canonical_assignments(&g, &[2, 2], 3, false).unwrap();
        assert_eq!(all.len(), 1);
        let all = canonical_assignments(&g, &[2, 2], 4, false).unwrap();
        assert_eq!(all.len(), 1);
        let all = canonical_assignments(&g, &[2, 2], 2, false).unwrap();
        assert_eq!(all.len(), 1);
    }

    #[test]
    fn lexicographic_order() {
        let g = named("P3").unwrap();
        let all = canonical_assignments(&g, &[2, 1, 2], 3, false).unwrap();
        let flat: Vec<Vec<u32>> =
            all.iter().map(|l| l.lists().iter().flat_map(|s| s.iter()).collect()).collect();
        let mut sorted = flat.clone();
        sorted.sort();
        assert_eq!(flat, sorted);
        for l in &all {
            assert_eq!(l.pot(), ColorSet::first_k(3));
        }
    }

    #[test]
    fn automorphisms_shrink_the_space() {
        let g = named("K3").unwrap();
        let plain = canonical_assignments(&g, &[2, 2, 2], 4, false).unwrap().len();
        let sym = canonical_assignments(&g, &[2, 2, 2], 4, true).unwrap().len();
        assert!(sym < plain, "{sym} vs {plain}");
        assert!(sym > 0);
    }
}
