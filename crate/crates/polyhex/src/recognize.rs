//! Recognizers for directed, stacked directed, and multi-directed animals,
//! built on one canonical decomposition.
//!
//! The decomposition walks the source cells left to right. Each part is the
//! upward closure of its source within the cells not claimed by earlier
//! parts — the greatest directed animal rooted there — and whatever no part
//! reaches is the leftover. A polyomino is multi-directed exactly when the
//! leftover is empty and every later part sits strictly right of its
//! predecessor's source column, is dominated by the union of the earlier
//! parts, and shares an edge with that union. Stacked directed animals
//! additionally require each part to be dominated by its immediate
//! predecessor alone. Directed animals are the single-part case.
//!
//! Checking these conditions on the one canonical decomposition, instead of
//! searching over all ways to split the polyomino, is justified by the
//! uniqueness of a valid split; the brute-force search in [`crate::oracle`]
//! cross-checks that at small sizes.

use crate::cell::Cell;
use crate::polyomino::{self, dominates_set, Polyomino};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecognizeError {
    #[error("cell {0} is not in the ambient set")]
    CellNotInSet(Cell),
    #[error("decomposition was not produced from this polyomino")]
    MismatchedDecomposition,
}

/// One part of a decomposition: a directed animal `body` together with its
/// source cell. Body cells are sorted by `(x, y)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompositionPart {
    pub source: Cell,
    pub body: Vec<Cell>,
}

/// The canonical split of a polyomino into directed components, plus the
/// cells no component reaches. Parts are ordered by source column, strictly
/// increasing with gaps of at least two columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub parts: Vec<DecompositionPart>,
    pub leftover: Vec<Cell>,
}

impl Decomposition {
    pub fn covers(&self) -> bool {
        self.leftover.is_empty()
    }
}

/// Truth values of the per-part requirements for one part at `part_index`
/// (1-based, so always >= 2), judged against the parts before it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PartConditions {
    pub part_index: usize,
    /// The predecessor's source column projects strictly left of every
    /// column of this part. With regular hexagons, adjacent columns overlap
    /// horizontally, so this needs a column gap of at least two.
    pub proj_left: bool,
    /// The union of all earlier parts dominates this part.
    pub union_dominates: bool,
    /// This part shares at least one edge with the union of earlier parts.
    pub edge_shared: bool,
    /// The immediate predecessor alone dominates this part (the extra
    /// requirement for stacked directed animals).
    pub pred_dominates: bool,
}

/// Full condition report for a decomposition. Every condition is evaluated,
/// with no short-circuiting, so failure diagnostics are complete. For a
/// single-part decomposition `per_part` is empty and `covers` alone decides.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConditionReport {
    pub covers: bool,
    pub per_part: Vec<PartConditions>,
}

impl ConditionReport {
    pub fn multi_directed(&self) -> bool {
        self.covers
            && self
                .per_part
                .iter()
                .all(|c| c.proj_left && c.union_dominates && c.edge_shared)
    }

    pub fn stacked_directed(&self) -> bool {
        self.multi_directed() && self.per_part.iter().all(|c| c.pred_dominates)
    }
}

/// Membership of a polyomino in each class of the family. `is_directed`
/// implies `is_stacked` implies `is_multi`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClassLabel {
    pub is_polyomino: bool,
    pub is_column_convex: bool,
    pub is_directed: bool,
    pub is_stacked: bool,
    pub is_multi: bool,
}

/// The smallest subset of `cells` that contains `from` and is closed under
/// taking generalized upper neighbours inside `cells`. If `from` is a source
/// cell of the set, this is the greatest directed animal contained in the
/// set with that source.
///
/// `cells` may be any finite cell set; order and duplicates are irrelevant.
/// The result is sorted by `(x, y)`.
pub fn upward_closure(cells: &[Cell], from: Cell) -> Result<Vec<Cell>, RecognizeError> {
    let mut sorted: Vec<Cell> = cells.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let start = sorted
        .binary_search(&from)
        .map_err(|_| RecognizeError::CellNotInSet(from))?;
    let mut member = vec![false; sorted.len()];
    Ok(closure_indices(&sorted, &mut member, start)
        .into_iter()
        .map(|i| sorted[i])
        .collect())
}

/// Breadth-first fixed point over generalized-upper-neighbour steps.
/// `claimed[i]` marks cells that are off-limits; visited cells are claimed
/// as a side effect. Returned indices are ascending.
fn closure_indices(sorted: &[Cell], claimed: &mut [bool], start: usize) -> Vec<usize> {
    debug_assert!(!claimed[start]);
    claimed[start] = true;
    let mut body = vec![start];
    let mut cursor = 0;
    while cursor < body.len() {
        let cell = sorted[body[cursor]];
        cursor += 1;
        for up in cell.gen_upper_neighbours() {
            if let Ok(i) = sorted.binary_search(&up) {
                if !claimed[i] {
                    claimed[i] = true;
                    body.push(i);
                }
            }
        }
    }
    body.sort_unstable();
    body
}

/// Whether the polyomino is a directed animal: exactly one source cell,
/// whose upward closure covers everything.
pub fn is_directed_animal(p: &Polyomino) -> bool {
    let sources = p.source_cells();
    if sources.len() != 1 {
        return false;
    }
    let mut claimed = vec![false; p.cell_count()];
    let start = p.cells().binary_search(&sources[0]).expect("source is a cell");
    closure_indices(p.cells(), &mut claimed, start).len() == p.cell_count()
}

/// Cells of `p` that are not a generalized upper neighbour of any other cell
/// of `p`. On a directed animal this is exactly the source cell.
pub fn non_upper_neighbour_cells(p: &Polyomino) -> Vec<Cell> {
    p.cells()
        .iter()
        .copied()
        .filter(|c| {
            !p.cells()
                .iter()
                .any(|d| d != c && d.gen_upper_neighbours().contains(c))
        })
        .collect()
}

/// Decompose into directed components rooted at the source cells, leftmost
/// source first, each claiming the upward closure of its source among the
/// still-unclaimed cells.
pub fn canonical_decomposition(p: &Polyomino) -> Decomposition {
    decompose_cells(p.cells())
}

pub(crate) fn decompose_cells(sorted: &[Cell]) -> Decomposition {
    let sources = polyomino::source_cells_sorted(sorted);
    let mut claimed = vec![false; sorted.len()];
    let mut parts = Vec::with_capacity(sources.len());
    for source in sources {
        let start = sorted.binary_search(&source).expect("source is a cell");
        // a source dominates nothing, so no earlier closure can have claimed it
        debug_assert!(!claimed[start]);
        let body = closure_indices(sorted, &mut claimed, start)
            .into_iter()
            .map(|i| sorted[i])
            .collect();
        parts.push(DecompositionPart { source, body });
    }
    let leftover = (0..sorted.len())
        .filter(|&i| !claimed[i])
        .map(|i| sorted[i])
        .collect();
    Decomposition { parts, leftover }
}

/// Evaluate the class-defining conditions for a decomposition of `p`.
/// The decomposition must be the one [`canonical_decomposition`] produces.
pub fn verify_conditions(
    p: &Polyomino,
    d: &Decomposition,
) -> Result<ConditionReport, RecognizeError> {
    if *d != canonical_decomposition(p) {
        return Err(RecognizeError::MismatchedDecomposition);
    }
    Ok(conditions_for(d))
}

pub(crate) fn conditions_for(d: &Decomposition) -> ConditionReport {
    let covers = d.covers();
    let mut per_part = Vec::new();
    let mut union: Vec<Cell> = Vec::new();
    for (j, part) in d.parts.iter().enumerate() {
        if j > 0 {
            let prev = &d.parts[j - 1];
            let body = &part.body;
            let min_col = body[0].x; // body sorted by (x, y)
            per_part.push(PartConditions {
                part_index: j + 1,
                proj_left: prev.source.x + 2 <= min_col,
                union_dominates: dominates_set(&union, body).expect("parts are disjoint"),
                edge_shared: union
                    .iter()
                    .any(|u| body.iter().any(|v| u.is_neighbour(*v))),
                pred_dominates: dominates_set(&prev.body, body).expect("parts are disjoint"),
            });
        }
        union.extend_from_slice(&part.body);
    }
    ConditionReport { covers, per_part }
}

pub fn is_multi_directed(p: &Polyomino) -> bool {
    conditions_for(&canonical_decomposition(p)).multi_directed()
}

pub fn is_stacked_directed(p: &Polyomino) -> bool {
    conditions_for(&canonical_decomposition(p)).stacked_directed()
}

/// All class memberships at once, sharing the decomposition work.
pub fn classify(p: &Polyomino) -> ClassLabel {
    classify_cells(p.cells())
}

pub(crate) fn classify_cells(sorted: &[Cell]) -> ClassLabel {
    let d = decompose_cells(sorted);
    let report = conditions_for(&d);
    ClassLabel {
        is_polyomino: true,
        is_column_convex: polyomino::column_convex_cells(sorted),
        is_directed: d.parts.len() == 1 && d.covers(),
        is_stacked: report.stacked_directed(),
        is_multi: report.multi_directed(),
    }
}
