//! Exhaustive enumeration of fixed polyominoes and the classification
//! census.
//!
//! The enumerator walks a search tree whose nodes are the polyominoes rooted
//! at their lexicographically smallest cell. Each node extends its parent by
//! one cell drawn from an untried queue of free neighbours; a queue entry,
//! once tried, stays excluded for the remainder of the subtree, so every
//! translation class is visited exactly once and no deduplication is needed.
//!
//! For the census the tree is split at a fixed depth into independent
//! subtree tasks. Workers own disjoint subtrees and produce per-size
//! counters that are merged by addition, so the output is byte-identical
//! for any worker count.

use crate::cell::Cell;
use crate::polyomino::{self, Polyomino};
use crate::recognize;
use rayon::prelude::*;
use std::collections::BTreeMap;
use thiserror::Error;

/// Largest size enumerated unless a configuration raises the bound; keeps a
/// worst-case run in minutes on desk hardware.
pub const DEFAULT_SIZE_BOUND: usize = 12;

/// Tree depth at which the census hands subtrees to workers.
const SPLIT_DEPTH: usize = 5;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CensusError {
    #[error("size {requested} exceeds the configured bound {bound}")]
    SizeOverflow { requested: usize, bound: usize },
}

/// Which classes a census should count, besides the always-counted total.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClassSelection {
    pub directed: bool,
    pub stacked: bool,
    pub multi: bool,
    pub column_convex: bool,
}

impl ClassSelection {
    pub const ALL: ClassSelection =
        ClassSelection { directed: true, stacked: true, multi: true, column_convex: true };

    pub const NONE: ClassSelection =
        ClassSelection { directed: false, stacked: false, multi: false, column_convex: false };
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusConfig {
    pub n_max: usize,
    pub workers: usize,
    pub classes: ClassSelection,
    /// Upper limit on `n_max`; raising it past [`DEFAULT_SIZE_BOUND`] is the
    /// caller's acknowledgement of the cost.
    pub size_bound: usize,
}

impl CensusConfig {
    pub fn new(n_max: usize) -> Self {
        CensusConfig {
            n_max,
            workers: 1,
            classes: ClassSelection::ALL,
            size_bound: DEFAULT_SIZE_BOUND,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

/// Counts for one size. Class counts are `None` when the census was not
/// asked to compute them. When present, `directed <= stacked <= multi <=
/// total` and `column_convex <= multi`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CensusRow {
    pub n: usize,
    pub total: u64,
    pub directed: Option<u64>,
    pub stacked: Option<u64>,
    pub multi: Option<u64>,
    pub column_convex: Option<u64>,
}

/// Separating examples between adjacent classes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SeparatorKind {
    /// A polyomino that is not a multi-directed animal.
    NotMultiDirected,
    /// A multi-directed animal that is not stacked.
    MultiNotStacked,
    /// A stacked directed animal that is not directed.
    StackedNotDirected,
    /// A multi-directed animal that is not column-convex.
    MultiNotColumnConvex,
}

impl SeparatorKind {
    pub const ALL: [SeparatorKind; 4] = [
        SeparatorKind::NotMultiDirected,
        SeparatorKind::MultiNotStacked,
        SeparatorKind::StackedNotDirected,
        SeparatorKind::MultiNotColumnConvex,
    ];

    fn matches(self, label: &recognize::ClassLabel) -> bool {
        match self {
            SeparatorKind::NotMultiDirected => !label.is_multi,
            SeparatorKind::MultiNotStacked => label.is_multi && !label.is_stacked,
            SeparatorKind::StackedNotDirected => label.is_stacked && !label.is_directed,
            SeparatorKind::MultiNotColumnConvex => label.is_multi && !label.is_column_convex,
        }
    }
}

/// Every translation class of `n`-cell polyominoes, exactly once, sorted by
/// the canonical cell sequence. Materializes the whole size class.
pub fn enumerate_fixed(n: usize) -> Result<Vec<Polyomino>, CensusError> {
    enumerate_fixed_bounded(n, DEFAULT_SIZE_BOUND)
}

pub fn enumerate_fixed_bounded(n: usize, bound: usize) -> Result<Vec<Polyomino>, CensusError> {
    assert!(n >= 1, "polyominoes have at least one cell");
    if n > bound {
        return Err(CensusError::SizeOverflow { requested: n, bound });
    }
    Ok(collect_size(n))
}

/// One row per size `1..=n_max`, counting every polyomino of that size and
/// classifying it per the configured selection. Deterministic: the result is
/// independent of `workers`.
pub fn census(config: &CensusConfig) -> Result<Vec<CensusRow>, CensusError> {
    assert!(config.n_max >= 1, "census needs at least size 1");
    assert!(config.workers >= 1, "census needs at least one worker");
    if config.n_max > config.size_bound {
        return Err(CensusError::SizeOverflow {
            requested: config.n_max,
            bound: config.size_bound,
        });
    }
    let counts = census_counts(config.n_max, config.workers, config.classes);
    let sel = config.classes;
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(i, raw)| CensusRow {
            n: i + 1,
            total: raw.total,
            directed: sel.directed.then_some(raw.directed),
            stacked: sel.stacked.then_some(raw.stacked),
            multi: sel.multi.then_some(raw.multi),
            column_convex: sel.column_convex.then_some(raw.column_convex),
        })
        .collect())
}

/// For each separator kind, the smallest-size, lexicographically first
/// example with at most `n_max` cells, if one exists in range. Sizes are
/// scanned in order, so the search can be stopped early once all kinds are
/// found.
pub fn find_separators(n_max: usize) -> BTreeMap<SeparatorKind, Polyomino> {
    assert!(n_max >= 1);
    let mut found = BTreeMap::new();
    for n in 1..=n_max {
        if found.len() == SeparatorKind::ALL.len() {
            break;
        }
        for p in collect_size(n) {
            let label = recognize::classify(&p);
            for kind in SeparatorKind::ALL {
                if !found.contains_key(&kind) && kind.matches(&label) {
                    found.insert(kind, p.clone());
                }
            }
        }
    }
    found
}

// ── Tree walker ──────────────────────────────────────────────────

/// DFS state over the bounded grid for size `n`: columns `0..n`, positions
/// `-(n-1)..=n-1` within a column, root pinned at lattice cell `(0, 0)`.
struct Walker {
    n: usize,
    rows: i32,
    blocked: Vec<bool>,
    untried: Vec<u32>,
    /// Grid indices of the current animal, in insertion order.
    animal: Vec<u32>,
    /// Lattice cells mirroring `animal`.
    cells: Vec<Cell>,
}

/// Snapshot of a walker poised to explore one subtree.
struct Task {
    blocked: Vec<bool>,
    untried: Vec<u32>,
    animal: Vec<u32>,
    lo: usize,
}

impl Walker {
    fn new(n: usize) -> Walker {
        let rows = 2 * n as i32 - 1;
        let mut blocked = vec![false; n * rows as usize];
        // Cells lexicographically below the root can never join an animal
        // rooted at its smallest cell: block column 0 below the root.
        for slot in blocked.iter_mut().take(n - 1) {
            *slot = true;
        }
        let root = (n - 1) as u32; // column 0, gy = n-1
        blocked[root as usize] = true;
        Walker { n, rows, blocked, untried: vec![root], animal: Vec::new(), cells: Vec::new() }
    }

    fn resume(n: usize, task: &Task) -> Walker {
        let rows = 2 * n as i32 - 1;
        let cells = task.animal.iter().map(|&idx| decode(idx, rows, n)).collect();
        Walker {
            n,
            rows,
            blocked: task.blocked.clone(),
            untried: task.untried.clone(),
            animal: task.animal.clone(),
            cells,
        }
    }

    fn push_free_neighbours(&mut self, idx: u32) {
        let (gx, gy) = (idx as i32 / self.rows, idx as i32 % self.rows);
        for (dx, dy) in [(0, 1), (0, -1), (-1, 1), (-1, 0), (1, 0), (1, -1)] {
            let (nx, ny) = (gx + dx, gy + dy);
            if nx < 0 || nx >= self.n as i32 || ny < 0 || ny >= self.rows {
                continue;
            }
            let nb = (nx * self.rows + ny) as usize;
            if !self.blocked[nb] {
                self.blocked[nb] = true;
                self.untried.push(nb as u32);
            }
        }
    }

    /// Visit every animal extending the current one by cells drawn from
    /// `untried[lo..]`. A queue entry, once iterated past, stays blocked for
    /// the rest of this subtree; entries discovered deeper are rolled back
    /// when the recursion returns.
    fn walk<F: FnMut(&[Cell])>(&mut self, lo: usize, visit: &mut F) {
        let hi = self.untried.len();
        for i in lo..hi {
            let idx = self.untried[i];
            self.animal.push(idx);
            self.cells.push(decode(idx, self.rows, self.n));
            visit(&self.cells);
            if self.animal.len() < self.n {
                let mark = self.untried.len();
                self.push_free_neighbours(idx);
                self.walk(i + 1, visit);
                for k in mark..self.untried.len() {
                    self.blocked[self.untried[k] as usize] = false;
                }
                self.untried.truncate(mark);
            }
            self.animal.pop();
            self.cells.pop();
        }
    }

    /// Like `walk`, but instead of descending past `split` cells, capture
    /// the would-be subtree as a task.
    fn walk_split<F: FnMut(&[Cell])>(
        &mut self,
        lo: usize,
        split: usize,
        visit: &mut F,
        tasks: &mut Vec<Task>,
    ) {
        let hi = self.untried.len();
        for i in lo..hi {
            let idx = self.untried[i];
            self.animal.push(idx);
            self.cells.push(decode(idx, self.rows, self.n));
            visit(&self.cells);
            if self.animal.len() < self.n {
                let mark = self.untried.len();
                self.push_free_neighbours(idx);
                if self.animal.len() == split {
                    tasks.push(Task {
                        blocked: self.blocked.clone(),
                        untried: self.untried.clone(),
                        animal: self.animal.clone(),
                        lo: i + 1,
                    });
                } else {
                    self.walk_split(i + 1, split, visit, tasks);
                }
                for k in mark..self.untried.len() {
                    self.blocked[self.untried[k] as usize] = false;
                }
                self.untried.truncate(mark);
            }
            self.animal.pop();
            self.cells.pop();
        }
    }
}

fn decode(idx: u32, rows: i32, n: usize) -> Cell {
    Cell::new(idx as i32 / rows, idx as i32 % rows - (n as i32 - 1))
}

// ── Counting ─────────────────────────────────────────────────────

#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
struct RawRow {
    total: u64,
    directed: u64,
    stacked: u64,
    multi: u64,
    column_convex: u64,
}

fn merge_rows(mut a: Vec<RawRow>, b: Vec<RawRow>) -> Vec<RawRow> {
    for (x, y) in a.iter_mut().zip(b) {
        x.total += y.total;
        x.directed += y.directed;
        x.stacked += y.stacked;
        x.multi += y.multi;
        x.column_convex += y.column_convex;
    }
    a
}

fn tally(cells: &[Cell], sel: ClassSelection, rows: &mut [RawRow], scratch: &mut Vec<Cell>) {
    let row = &mut rows[cells.len() - 1];
    row.total += 1;
    if sel == ClassSelection::NONE {
        return;
    }
    scratch.clear();
    scratch.extend_from_slice(cells);
    scratch.sort_unstable();
    if sel.column_convex && polyomino::column_convex_cells(scratch) {
        row.column_convex += 1;
    }
    if sel.directed || sel.stacked || sel.multi {
        let d = recognize::decompose_cells(scratch);
        if sel.directed && d.parts.len() == 1 && d.covers() {
            row.directed += 1;
        }
        if sel.stacked || sel.multi {
            let report = recognize::conditions_for(&d);
            if sel.multi && report.multi_directed() {
                row.multi += 1;
            }
            if sel.stacked && report.stacked_directed() {
                row.stacked += 1;
            }
        }
    }
}

fn census_counts(n: usize, workers: usize, sel: ClassSelection) -> Vec<RawRow> {
    let mut rows = vec![RawRow::default(); n];
    let mut scratch = Vec::with_capacity(n);
    let mut tasks = Vec::new();
    let split = SPLIT_DEPTH.min(n);
    let mut walker = Walker::new(n);
    walker.walk_split(0, split, &mut |cells| tally(cells, sel, &mut rows, &mut scratch), &mut tasks);
    if tasks.is_empty() {
        return rows;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("building the census worker pool");
    let deep = pool.install(|| {
        tasks
            .par_iter()
            .map(|task| {
                let mut rows = vec![RawRow::default(); n];
                let mut scratch = Vec::with_capacity(n);
                let mut walker = Walker::resume(n, task);
                walker.walk(task.lo, &mut |cells| tally(cells, sel, &mut rows, &mut scratch));
                rows
            })
            .reduce(|| vec![RawRow::default(); n], merge_rows)
    });
    merge_rows(rows, deep)
}

/// All size-`n` translation classes, canonicalized and sorted.
fn collect_size(n: usize) -> Vec<Polyomino> {
    let mut tasks = Vec::new();
    let split = SPLIT_DEPTH.min(n);
    let mut out = Vec::new();
    let mut walker = Walker::new(n);
    let keep_leaf = |found: &mut Vec<Polyomino>, cells: &[Cell]| {
        if cells.len() == n {
            found.push(Polyomino::from_connected(cells.to_vec()));
        }
    };
    walker.walk_split(0, split, &mut |cells| keep_leaf(&mut out, cells), &mut tasks);
    let mut deep: Vec<Polyomino> = tasks
        .par_iter()
        .flat_map_iter(|task| {
            let mut found = Vec::new();
            let mut walker = Walker::resume(n, task);
            walker.walk(task.lo, &mut |cells| keep_leaf(&mut found, cells));
            found
        })
        .collect();
    out.append(&mut deep);
    out.sort_unstable();
    out
}
