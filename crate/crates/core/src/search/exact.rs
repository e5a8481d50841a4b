//! Include/exclude branch-and-bound.
//!
//! Invariant kept by propagation: an undecided vertex can always be
//! included. It has at most `k` included neighbours, and none of them is
//! already saturated with `k` included neighbours.
//!
//! Upper bound: in the final set `X`, every `x` sends at least
//! `deg(x) - k` edges out of `X`, and every `y` outside `X` receives at most
//! its number of neighbours that are not excluded (`avail(y)`). Choosing `T`
//! among the undecided vertices costs `(deg - k)^+ + avail` per vertex
//! against the budget
//! `sum_{excluded} avail + sum_{undecided} avail - sum_{included} (deg - k)^+`,
//! so taking the cheapest vertices first bounds `|T|`. At the root of a
//! `d`-regular graph with `k = 1` this is `d n / (2d - 1)`.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use super::{branch_order, Progress, SearchOptions, SearchResult};
use crate::graph::{Graph, VertexSubset};

const STACK_SIZE: usize = 256 << 20;
const FLUSH_EVERY: u64 = 1024;
const PROGRESS_EVERY: u64 = 1 << 16;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Status {
    Undecided,
    In,
    Out,
}

struct Problem<'a> {
    graph: &'a Graph,
    k: usize,
    order: Vec<usize>,
    /// `(deg - k)^+`
    excess: Vec<usize>,
    max_weight: usize,
}

impl<'a> Problem<'a> {
    fn new(graph: &'a Graph, k: usize) -> Self {
        let excess: Vec<usize> = (0..graph.n())
            .map(|v| graph.degree(v).saturating_sub(k))
            .collect();
        let max_weight = (0..graph.n())
            .map(|v| excess[v] + graph.degree(v))
            .max()
            .unwrap_or(0);
        Problem {
            graph,
            k,
            order: branch_order(graph),
            excess,
            max_weight,
        }
    }
}

struct Shared<'a> {
    best: AtomicUsize,
    nodes: AtomicU64,
    stop: AtomicBool,
    aborted: AtomicBool,
    root_bound: usize,
    options: &'a SearchOptions,
}

#[derive(Clone)]
struct State {
    status: Vec<Status>,
    inc: Vec<u32>,
    avail: Vec<u32>,
    n_in: usize,
    trail: Vec<usize>,
}

impl State {
    fn new(graph: &Graph) -> Self {
        State {
            status: vec![Status::Undecided; graph.n()],
            inc: vec![0; graph.n()],
            avail: (0..graph.n()).map(|v| graph.degree(v) as u32).collect(),
            n_in: 0,
            trail: Vec::with_capacity(graph.n()),
        }
    }
}

struct Searcher<'p, 's> {
    p: &'p Problem<'p>,
    shared: &'s Shared<'s>,
    st: State,
    best_size: usize,
    best: Option<Vec<usize>>,
    local_nodes: u64,
    buckets: Vec<usize>,
}

impl<'p, 's> Searcher<'p, 's> {
    fn new(p: &'p Problem<'p>, shared: &'s Shared<'s>) -> Self {
        Searcher {
            p,
            shared,
            st: State::new(p.graph),
            best_size: 0,
            best: None,
            local_nodes: 0,
            buckets: vec![0; p.max_weight + 1],
        }
    }

    fn set_in(&mut self, v: usize) {
        self.st.status[v] = Status::In;
        self.st.n_in += 1;
        for &u in self.p.graph.neighbors(v) {
            self.st.inc[u] += 1;
        }
        self.st.trail.push(v);
    }

    fn set_out(&mut self, v: usize) {
        self.st.status[v] = Status::Out;
        for &u in self.p.graph.neighbors(v) {
            self.st.avail[u] -= 1;
        }
        self.st.trail.push(v);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.st.trail.len() > mark {
            let v = self.st.trail.pop().expect("trail above mark");
            match self.st.status[v] {
                Status::In => {
                    self.st.n_in -= 1;
                    for &u in self.p.graph.neighbors(v) {
                        self.st.inc[u] -= 1;
                    }
                }
                Status::Out => {
                    for &u in self.p.graph.neighbors(v) {
                        self.st.avail[u] += 1;
                    }
                }
                Status::Undecided => unreachable!("undecided vertex on the trail"),
            }
            self.st.status[v] = Status::Undecided;
        }
    }

    fn force_out_neighbors(&mut self, v: usize) {
        let g = self.p.graph;
        for &u in g.neighbors(v) {
            if self.st.status[u] == Status::Undecided {
                self.set_out(u);
            }
        }
    }

    fn include(&mut self, v: usize) {
        let k = self.p.k as u32;
        debug_assert_eq!(self.st.status[v], Status::Undecided);
        self.set_in(v);
        if self.st.inc[v] == k {
            self.force_out_neighbors(v);
        }
        let g = self.p.graph;
        for &u in g.neighbors(v) {
            match self.st.status[u] {
                Status::In if self.st.inc[u] == k => self.force_out_neighbors(u),
                Status::Undecided if self.st.inc[u] > k => self.set_out(u),
                _ => {}
            }
        }
    }

    /// Largest number of undecided vertices that could still join.
    fn completion_bound(&mut self) -> usize {
        let mut budget: i64 = 0;
        let mut undecided = 0usize;
        for v in 0..self.p.graph.n() {
            match self.st.status[v] {
                Status::In => budget -= self.p.excess[v] as i64,
                Status::Out => budget += self.st.avail[v] as i64,
                Status::Undecided => {
                    budget += self.st.avail[v] as i64;
                    self.buckets[self.p.excess[v] + self.st.avail[v] as usize] += 1;
                    undecided += 1;
                }
            }
        }
        let mut taken = 0usize;
        let mut spent: i64 = 0;
        let mut exhausted = false;
        for w in 0..self.buckets.len() {
            let c = std::mem::take(&mut self.buckets[w]);
            if c == 0 || exhausted {
                continue;
            }
            let fit = if w == 0 {
                c
            } else {
                (((budget - spent).max(0)) / w as i64) as usize
            };
            let t = fit.min(c);
            taken += t;
            spent += (t * w) as i64;
            if t < c {
                exhausted = true;
            }
        }
        taken.min(undecided)
    }

    fn record(&mut self) {
        self.best_size = self.st.n_in;
        self.best = Some(
            (0..self.p.graph.n())
                .filter(|&v| self.st.status[v] == Status::In)
                .collect(),
        );
        self.shared
            .best
            .fetch_max(self.best_size, Ordering::Relaxed);
        if self.best_size >= self.shared.root_bound {
            self.shared.stop.store(true, Ordering::Relaxed);
        }
    }

    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes.is_multiple_of(FLUSH_EVERY) {
            let total = self.shared.nodes.fetch_add(FLUSH_EVERY, Ordering::Relaxed) + FLUSH_EVERY;
            if let Some(limit) = self.shared.options.node_limit {
                if total >= limit {
                    self.shared.aborted.store(true, Ordering::Relaxed);
                    self.shared.stop.store(true, Ordering::Relaxed);
                }
            }
            if total.is_multiple_of(PROGRESS_EVERY) {
                if let Some(hook) = &self.shared.options.progress {
                    hook(Progress {
                        nodes_explored: total,
                        incumbent: self.shared.best.load(Ordering::Relaxed),
                    });
                }
            }
        }
        if let Some(limit) = self.shared.options.node_limit {
            if self.local_nodes >= limit {
                self.shared.aborted.store(true, Ordering::Relaxed);
                self.shared.stop.store(true, Ordering::Relaxed);
            }
        }
        !self.shared.stop.load(Ordering::Relaxed)
    }

    fn next_undecided(&self, mut pos: usize) -> Option<usize> {
        while pos < self.p.order.len() {
            if self.st.status[self.p.order[pos]] == Status::Undecided {
                return Some(pos);
            }
            pos += 1;
        }
        None
    }

    fn dfs(&mut self, pos: usize) {
        if !self.tick() {
            return;
        }
        if self.st.n_in > self.best_size {
            self.record();
        }
        let incumbent = self.best_size.max(self.shared.best.load(Ordering::Relaxed));
        let Some(pos) = self.next_undecided(pos) else {
            return;
        };
        if self.st.n_in + self.completion_bound() <= incumbent {
            return;
        }
        let v = self.p.order[pos];
        let mark = self.st.trail.len();
        self.include(v);
        self.dfs(pos + 1);
        self.undo_to(mark);
        if self.shared.stop.load(Ordering::Relaxed) {
            return;
        }
        self.set_out(v);
        self.dfs(pos + 1);
        self.undo_to(mark);
    }

    fn apply(&mut self, decisions: &[(usize, bool)]) {
        for &(v, include) in decisions {
            if include {
                self.include(v);
            } else {
                self.set_out(v);
            }
        }
    }

    /// Decision prefixes of the first `depth` branchings, in search order.
    fn frontier(
        &mut self,
        pos: usize,
        depth: u32,
        path: &mut Vec<(usize, bool)>,
        out: &mut Vec<(Vec<(usize, bool)>, usize)>,
    ) {
        let next = self.next_undecided(pos);
        let (Some(pos), true) = (next, depth > 0) else {
            out.push((path.clone(), next.unwrap_or(self.p.order.len())));
            return;
        };
        let v = self.p.order[pos];
        for include in [true, false] {
            let mark = self.st.trail.len();
            if include {
                self.include(v);
            } else {
                self.set_out(v);
            }
            path.push((v, include));
            self.frontier(pos + 1, depth - 1, path, out);
            path.pop();
            self.undo_to(mark);
        }
    }
}

pub(super) fn run(graph: &Graph, k: usize, options: &SearchOptions) -> SearchResult {
    let problem = Problem::new(graph, k);
    let root_bound = {
        let dummy = Shared {
            best: AtomicUsize::new(0),
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            aborted: AtomicBool::new(false),
            root_bound: usize::MAX,
            options,
        };
        Searcher::new(&problem, &dummy).completion_bound()
    };
    let shared = Shared {
        best: AtomicUsize::new(0),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        aborted: AtomicBool::new(false),
        root_bound,
        options,
    };
    let threads = options.threads.max(1);

    let (best, local_nodes) = if threads == 1 {
        std::thread::scope(|scope| {
            std::thread::Builder::new()
                .stack_size(STACK_SIZE)
                .spawn_scoped(scope, || {
                    let mut s = Searcher::new(&problem, &shared);
                    s.dfs(0);
                    (s.best, s.local_nodes)
                })
                .expect("spawn search thread")
                .join()
                .expect("search thread panicked")
        })
    } else {
        run_parallel(&problem, &shared, threads)
    };

    let nodes_explored = local_nodes;
    if let Some(hook) = &options.progress {
        hook(Progress {
            nodes_explored,
            incumbent: best.as_ref().map_or(0, Vec::len),
        });
    }
    let members = best.unwrap_or_default();
    SearchResult {
        best_size: members.len(),
        witness: VertexSubset::from_indices(graph.n(), members).expect("witness within graph"),
        nodes_explored,
        proven_optimal: !shared.aborted.load(Ordering::Relaxed),
    }
}

/// Splits the tree into decision prefixes and lets workers pull them from a
/// shared queue, pruning against a common incumbent size.
fn run_parallel(
    problem: &Problem<'_>,
    shared: &Shared<'_>,
    threads: usize,
) -> (Option<Vec<usize>>, u64) {
    let depth = (8 * threads).next_power_of_two().trailing_zeros();
    let mut tasks = Vec::new();
    Searcher::new(problem, shared).frontier(0, depth, &mut Vec::new(), &mut tasks);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, usize, Vec<usize>)>> = Mutex::new(Vec::new());
    let local_total = AtomicU64::new(0);

    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|_| {
                let (tasks, next, results, local_total) = (&tasks, &next, &results, &local_total);
                std::thread::Builder::new()
                    .stack_size(STACK_SIZE)
                    .spawn_scoped(scope, move || {
                        let mut s = Searcher::new(problem, shared);
                        loop {
                            let i = next.fetch_add(1, Ordering::Relaxed);
                            if i >= tasks.len() || shared.stop.load(Ordering::Relaxed) {
                                break;
                            }
                            let (decisions, pos) = &tasks[i];
                            let before = s.best_size;
                            s.apply(decisions);
                            s.dfs(*pos);
                            s.undo_to(0);
                            if s.best_size > before {
                                let w = s.best.clone().expect("recorded witness");
                                results
                                    .lock()
                                    .expect("results lock")
                                    .push((s.best_size, i, w));
                            }
                        }
                        local_total.fetch_add(s.local_nodes, Ordering::Relaxed);
                    })
                    .expect("spawn search worker")
            })
            .collect();
        for h in handles {
            h.join().expect("search worker panicked");
        }
    });
    let best = results
        .into_inner()
        .expect("results lock")
        .into_iter()
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .map(|(_, _, w)| w);
    (best, local_total.load(Ordering::Relaxed))
}
