//! Edge-connected cell sets considered up to translation.
//!
//! A [`Polyomino`] is stored canonically: translated so that the smallest
//! column index and the smallest in-column index are both zero, with cells
//! sorted by `(x, y)`. Constructing from any translate of the same cell set
//! therefore yields an equal value, and `Ord` on polyominoes (lexicographic
//! over the sorted cell sequence) gives the listing order used throughout.

use crate::cell::Cell;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyominoError {
    #[error("a polyomino needs at least one cell")]
    Empty,
    #[error("cells split into {} edge-connected components: {}", components.len(), describe(components))]
    Disconnected { components: Vec<Vec<Cell>> },
}

fn describe(components: &[Vec<Cell>]) -> String {
    components
        .iter()
        .map(|comp| {
            let cells: Vec<String> = comp.iter().map(Cell::to_string).collect();
            format!("[{}]", cells.join(";"))
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// A nonempty, edge-connected, translation-normalized set of cells.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Polyomino {
    cells: Vec<Cell>,
}

impl Polyomino {
    /// Validates that the cells are nonempty and edge-connected, then
    /// normalizes the translation. Duplicate cells are collapsed.
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Self, PolyominoError> {
        let set: BTreeSet<Cell> = cells.into_iter().collect();
        if set.is_empty() {
            return Err(PolyominoError::Empty);
        }
        let components = connected_components(&set);
        if components.len() > 1 {
            return Err(PolyominoError::Disconnected { components });
        }
        let mut cells = components.into_iter().next().unwrap();
        cells.sort_unstable();
        Ok(Self::from_connected(cells))
    }

    /// Canonicalize a cell list already known to be nonempty, duplicate-free
    /// and edge-connected (e.g. produced by the enumerator).
    pub(crate) fn from_connected(mut cells: Vec<Cell>) -> Self {
        debug_assert!(!cells.is_empty());
        let min_x = cells.iter().map(|c| c.x).min().unwrap();
        let min_y = cells.iter().map(|c| c.y).min().unwrap();
        if min_x != 0 || min_y != 0 {
            for cell in &mut cells {
                *cell = cell.translated(-min_x, -min_y);
            }
        }
        cells.sort_unstable();
        Polyomino { cells }
    }

    /// The cells, sorted by `(x, y)`, with `min x = 0` and `min y = 0`.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    /// The columns of the polyomino, ascending by column index, each with
    /// its cell positions in ascending order. Columns partition the cells
    /// but are not necessarily contiguous runs.
    pub fn columns(&self) -> Vec<Column> {
        let mut out: Vec<Column> = Vec::new();
        for cell in &self.cells {
            match out.last_mut() {
                Some(col) if col.x == cell.x => col.ys.push(cell.y),
                _ => out.push(Column { x: cell.x, ys: vec![cell.y] }),
            }
        }
        out
    }

    /// Whether every column is a contiguous run of cells.
    pub fn is_column_convex(&self) -> bool {
        column_convex_cells(&self.cells)
    }

    /// The cells that dominate no other cell of the polyomino, sorted by
    /// `(x, y)`. Always nonempty; distinct source cells are at least two
    /// columns apart.
    pub fn source_cells(&self) -> Vec<Cell> {
        source_cells_sorted(&self.cells)
    }
}

impl fmt::Display for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, cell) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{cell}")?;
        }
        Ok(())
    }
}

/// One column of a polyomino: every cell with column index `x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Column {
    pub x: i32,
    pub ys: Vec<i32>,
}

impl Column {
    pub fn is_contiguous(&self) -> bool {
        self.ys.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

pub(crate) fn column_convex_cells(sorted: &[Cell]) -> bool {
    sorted
        .windows(2)
        .all(|w| w[0].x != w[1].x || w[1].y == w[0].y + 1)
}

pub(crate) fn source_cells_sorted(sorted: &[Cell]) -> Vec<Cell> {
    sorted
        .iter()
        .copied()
        .filter(|c| !sorted.iter().any(|d| c.dominates(*d)))
        .collect()
}

/// Error for [`dominates_set`] called on sets that share a cell.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("sets overlap: both contain {shared}")]
pub struct OverlappingSets {
    pub shared: Cell,
}

/// Set-level domination: `s` dominates `t` when some cell of `s` dominates
/// a cell of `t` and no cell of `t` dominates a cell of `s`.
///
/// Defined for arbitrary disjoint cell sets, not only polyominoes: the
/// decomposition verifier applies it to unions of parts.
pub fn dominates_set(s: &[Cell], t: &[Cell]) -> Result<bool, OverlappingSets> {
    if let Some(&shared) = s.iter().find(|c| t.contains(c)) {
        return Err(OverlappingSets { shared });
    }
    let forwards = s.iter().any(|a| t.iter().any(|b| a.dominates(*b)));
    let backwards = t.iter().any(|b| s.iter().any(|a| b.dominates(*a)));
    Ok(forwards && !backwards)
}

fn connected_components(cells: &BTreeSet<Cell>) -> Vec<Vec<Cell>> {
    let mut unvisited: BTreeSet<Cell> = cells.clone();
    let mut components = Vec::new();
    while let Some(&start) = unvisited.iter().next() {
        unvisited.remove(&start);
        let mut component = vec![start];
        let mut frontier = vec![start];
        while let Some(cell) = frontier.pop() {
            for nb in cell.neighbours() {
                if unvisited.remove(&nb) {
                    component.push(nb);
                    frontier.push(nb);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components
}
