//! Exhaustive `f`-choosability.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::{Completion, Counters, Flow, Node, Space, Symmetry};
use super::solve::Colorer;
use super::{color_from_lists, degree_minus, ColorSet, ListAssignment, ListError, MAX_COLOR};
use crate::budget::{Budget, BudgetExceeded, Meter};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoosabilityOptions {
    pub budget: Budget,
    /// Also reduce by automorphisms of `(G, f)`.
    pub symmetry: bool,
    /// Search pots up to this size instead of `|G| - 1`. Never lowers the bound.
    pub max_pot: Option<usize>,
    /// Worker threads; `None` uses the ambient rayon pool.
    pub threads: Option<usize>,
}

impl Default for ChoosabilityOptions {
    fn default() -> Self {
        ChoosabilityOptions { budget: Budget::DEFAULT, symmetry: false, max_pot: None, threads: None }
    }
}

impl ChoosabilityOptions {
    pub fn with_budget(budget: Budget) -> Self {
        ChoosabilityOptions { budget, ..Self::default() }
    }

    pub fn symmetric(mut self) -> Self {
        self.symmetry = true;
        self
    }

    pub fn threads(mut self, n: usize) -> Self {
        self.threads = Some(n);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Choosability {
    Choosable,
    NotChoosable,
    Indeterminate,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Complete assignments handed to the colouring solver.
    pub assignments: u64,
    pub nodes: u64,
    pub symmetry_prunes: u64,
    pub pot_prunes: u64,
    /// Prefixes dropped because every way of finishing them is colourable.
    pub completion_prunes: u64,
    /// Vertices removed up front because `f(v) > d(v)`.
    pub peeled: usize,
    pub automorphisms: usize,
    /// Largest pot size whose search was started.
    pub max_pot_searched: usize,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoosabilityVerdict {
    pub status: Choosability,
    /// A bad assignment, present exactly when the status is not-choosable.
    pub witness: Option<ListAssignment>,
    pub stats: SearchStats,
}

impl ChoosabilityVerdict {
    /// `Some(true)` for choosable, `None` when the budget ran out.
    pub fn choosable(&self) -> Option<bool> {
        match self.status {
            Choosability::Choosable => Some(true),
            Choosability::NotChoosable => Some(false),
            Choosability::Indeterminate => None,
        }
    }
}

enum Outcome {
    Clean,
    Bad(Vec<u64>),
    Tripped,
    Skipped,
}

/// Decides whether every assignment with `|L(v)| = f(v)` is colourable.
///
/// Pots `{1, ..., p}` are searched for `p` from `max f` to `|G| - 1`, so a
/// returned witness has minimum pot size and is lexicographically least among
/// those of that size. The witness is re-checked by [`color_from_lists`].
pub fn is_f_choosable(
    g: &Graph,
    f: &[i64],
    opts: &ChoosabilityOptions,
) -> Result<ChoosabilityVerdict, ListError> {
    if f.len() != g.order() {
        return Err(ListError::LengthMismatch { expected: g.order(), got: f.len() });
    }
    let meter = Meter::new(opts.budget);
    let mut stats = SearchStats::default();
    let finish = |status, witness: Option<ListAssignment>, mut stats: SearchStats| {
        if let Some(w) = &witness {
            assert!(color_from_lists(g, w).is_none(), "witness must be bad");
        }
        stats.elapsed_ms = meter.elapsed().as_millis() as u64;
        Ok(ChoosabilityVerdict { status, witness, stats })
    };

    if f.iter().any(|&k| k <= 0) {
        let lists = f.iter().map(|&k| ColorSet::first_k(k.max(0) as usize)).collect();
        return finish(Choosability::NotChoosable, Some(ListAssignment::new(lists)), stats);
    }
    if let Some(&k) = f.iter().find(|&&k| k > MAX_COLOR as i64) {
        return Err(ListError::PotTooLarge(k as usize));
    }

    // vertices with f(v) > d(v) can always be coloured last
    let mut keep = g.vertices();
    loop {
        let peel: Vec<usize> =
            keep.iter().filter(|&v| f[v] > g.neighbors(v).intersection(keep).len() as i64).collect();
        if peel.is_empty() {
            break;
        }
        for v in peel {
            keep.remove(v);
        }
    }
    stats.peeled = g.order() - keep.len();
    if keep.is_empty() {
        return finish(Choosability::Choosable, None, stats);
    }
    let core = g.induced_unchecked(keep).graph;
    let kept: Vec<usize> = keep.to_vec();
    let sizes: Vec<usize> = kept.iter().map(|&v| f[v] as usize).collect();
    let n = core.order();

    let sym = opts.symmetry.then(|| Symmetry::of(&core, &sizes));
    stats.automorphisms = sym.as_ref().map_or(1, |s| s.group_size);
    let colorer = Colorer::new(&core);
    let completion = Completion::of(&core, &sizes);
    let lo = *sizes.iter().max().unwrap();
    let hi = opts.max_pot.unwrap_or(0).max(n - 1).min(sizes.iter().sum()).min(MAX_COLOR as usize);

    let run = |pool: Option<&rayon::ThreadPool>, threads: usize| -> (Outcome, Counters, usize) {
        let mut counters = Counters::default();
        let mut top = 0;
        for p in lo..=hi {
            top = p;
            let space = Space::new(&sizes, p, sym.as_ref()).with_completion(completion.as_ref());
            let outcome = if threads <= 1 {
                sequential(&space, &colorer, &meter, &mut counters)
            } else {
                let mut work = || parallel(&space, &colorer, &meter, &mut counters, threads);
                match pool {
                    Some(pool) => pool.install(work),
                    None => work(),
                }
            };
            match outcome {
                Outcome::Clean => {}
                other => return (other, counters, top),
            }
        }
        (Outcome::Clean, counters, top)
    };
    let (outcome, counters, top) = match opts.threads {
        Some(1) => run(None, 1),
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => run(Some(&pool), k),
            Err(_) => run(None, 1),
        },
        None => run(None, rayon::current_num_threads()),
    };
    stats.assignments = counters.assignments;
    stats.nodes = counters.nodes;
    stats.symmetry_prunes = counters.symmetry_prunes;
    stats.pot_prunes = counters.pot_prunes;
    stats.completion_prunes = counters.completion_prunes;
    stats.max_pot_searched = top;

    match outcome {
        Outcome::Clean => finish(Choosability::Choosable, None, stats),
        Outcome::Tripped | Outcome::Skipped => finish(Choosability::Indeterminate, None, stats),
        Outcome::Bad(lists) => {
            let mut full: Vec<ColorSet> = (0..g.order()).map(|v| ColorSet::first_k(f[v] as usize)).collect();
            for (i, &v) in kept.iter().enumerate() {
                full[v] = ColorSet(lists[i]);
            }
            finish(Choosability::NotChoosable, Some(ListAssignment::new(full)), stats)
        }
    }
}

fn sequential(space: &Space<'_>, colorer: &Colorer, meter: &Meter, counters: &mut Counters) -> Outcome {
    let mut local = meter.local();
    let mut bad = None;
    let mut leaf = |lists: &[u64]| {
        if colorer.colorable(lists) {
            false
        } else {
            bad = Some(lists.to_vec());
            true
        }
    };
    let flow = space.walk(&space.root(), &mut local, counters, &|| false, &mut leaf);
    match flow {
        Flow::Tripped => Outcome::Tripped,
        _ => match bad {
            Some(l) => Outcome::Bad(l),
            None => Outcome::Clean,
        },
    }
}

fn parallel(
    space: &Space<'_>,
    colorer: &Colorer,
    meter: &Meter,
    counters: &mut Counters,
    threads: usize,
) -> Outcome {
    let prefixes: Vec<Node> = space.frontier(threads * 16, counters);
    let best = AtomicUsize::new(usize::MAX);
    let results: Vec<(Outcome, Counters)> = prefixes
        .par_iter()
        .enumerate()
        .map(|(idx, node)| {
            let mut c = Counters::default();
            if best.load(Ordering::Relaxed) < idx {
                return (Outcome::Skipped, c);
            }
            let mut local = meter.local();
            let mut bad = None;
            let mut leaf = |lists: &[u64]| {
                if colorer.colorable(lists) {
                    false
                } else {
                    bad = Some(lists.to_vec());
                    true
                }
            };
            let abort = || best.load(Ordering::Relaxed) < idx;
            let flow = space.walk(node, &mut local, &mut c, &abort, &mut leaf);
            let outcome = match (flow, bad) {
                (Flow::Tripped, _) => Outcome::Tripped,
                (_, Some(l)) => {
                    best.fetch_min(idx, Ordering::Relaxed);
                    Outcome::Bad(l)
                }
                (Flow::Stop, None) => Outcome::Skipped,
                (Flow::Continue, None) => Outcome::Clean,
            };
            (outcome, c)
        })
        .collect();
    let mut verdict = Outcome::Clean;
    for (_, c) in &results {
        counters.merge(c);
    }
    for (o, _) in results {
        match o {
            Outcome::Clean => continue,
            other => {
                verdict = other;
                break;
            }
        }
    }
    if matches!(verdict, Outcome::Clean) && meter.is_tripped() {
        return Outcome::Tripped;
    }
    verdict
}

/// `f`-choosability with `f(v) = d(v) - r`.
pub fn is_d_r_choosable(
    g: &Graph,
    r: i64,
    opts: &ChoosabilityOptions,
) -> Result<ChoosabilityVerdict, ListError> {
    is_f_choosable(g, &degree_minus(g, r), opts)
}

/// A bad `f`-assignment of minimum pot size, or `None` if `G` is `f`-choosable.
pub fn minimal_pot_bad_assignment(
    g: &Graph,
    f: &[i64],
    opts: &ChoosabilityOptions,
) -> Result<Result<Option<ListAssignment>, BudgetExceeded>, ListError> {
    let v = is_f_choosable(g, f, opts)?;
    Ok(match v.status {
        Choosability::Choosable => Ok(None),
        Choosability::NotChoosable => Ok(v.witness),
        Choosability::Indeterminate => {
            Err(BudgetExceeded { nodes: v.stats.nodes, millis: v.stats.elapsed_ms })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn g(s: &str) -> Graph {
        named(s).unwrap()
    }

    fn opts() -> ChoosabilityOptions {
        ChoosabilityOptions::with_budget(Budget::unlimited()).threads(1)
    }

    #[test]
    fn k2_with_single_colours() {
        let v = is_f_choosable(&g("K2"), &[1, 1], &opts()).unwrap();
        assert_eq!(v.status, Choosability::NotChoosable);
        let w = v.witness.unwrap();
        assert_eq!(w.lists(), &[ColorSet::first_k(1), ColorSet::first_k(1)]);
    }

    #[test]
    fn degree_choosability() {
        let c6 = is_d_r_choosable(&g("C6"), 0, &opts()).unwrap();
        assert_eq!(c6.status, Choosability::Choosable);
        let k4 = is_d_r_choosable(&g("K4"), 0, &opts()).unwrap();
        assert_eq!(k4.status, Choosability::NotChoosable);
        let w = k4.witness.unwrap();
        assert_eq!(w, ListAssignment::uniform(4, ColorSet::first_k(3)));
        let c5 = is_d_r_choosable(&g("C5"), 0, &opts()).unwrap();
        assert_eq!(c5.status, Choosability::NotChoosable);
    }

    #[test]
    fn nonpositive_sizes_short_circuit() {
        let v = is_d_r_choosable(&g("P3"), 1, &opts()).unwrap();
        assert_eq!(v.status, Choosability::NotChoosable);
        assert!(v.witness.unwrap().lists().iter().any(|l| l.is_empty()));
    }

    #[test]
    fn peeling_large_lists() {
        let v = is_f_choosable(&g("K3"), &[3, 2, 2], &opts()).unwrap();
        assert_eq!(v.status, Choosability::Choosable);
        assert_eq!(v.stats.peeled, 3);
        let v = is_f_choosable(&g("paw"), &[2, 2, 2, 2], &opts()).unwrap();
        assert_eq!(v.status, Choosability::NotChoosable);
        assert_eq!(v.stats.peeled, 1);
        assert_eq!(v.witness.unwrap().list(3), ColorSet::first_k(2));
    }

    #[test]
    fn tiny_budget_is_indeterminate() {
        let j = g("K4").join(&g("E3")).unwrap();
        let o = ChoosabilityOptions::with_budget(Budget::new(10, u64::MAX)).threads(1);
        let v = is_d_r_choosable(&j, 1, &o).unwrap();
        assert_eq!(v.status, Choosability::Indeterminate);
        assert!(v.witness.is_none());
    }

    #[test]
    fn length_mismatch() {
        assert!(is_f_choosable(&g("K2"), &[1], &opts()).is_err());
    }
}
