//! Brute-force reference implementations, used to cross-validate the fast
//! paths: a recursion-literal builder for directed animals, a naive
//! grow-and-deduplicate enumerator, and an exhaustive search for sequences
//! of directed animals witnessing multi-directedness.
//!
//! Everything here favours obviousness over speed and shares no logic with
//! the recognizers and the enumerator it checks; sizes are capped
//! accordingly. The functions stay out of hot paths but remain reachable
//! through a hidden CLI flag so the cross-checks can be rerun by hand.

use crate::cell::Cell;
use crate::polyomino::Polyomino;
use crate::recognize::{Decomposition, DecompositionPart};
use std::collections::BTreeSet;
use thiserror::Error;

pub const MAX_RECURSION_SIZE: usize = 9;
pub const MAX_NAIVE_SIZE: usize = 8;
pub const MAX_WITNESS_SIZE: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("size {requested} exceeds this reference implementation's bound {bound}")]
pub struct SizeOverflow {
    pub requested: usize,
    pub bound: usize,
}

/// All directed animals with `n` cells, built literally by the recursive
/// definition: start from the one-celled animal and repeatedly adjoin a
/// generalized upper neighbour of an existing cell, deduplicating canonical
/// forms at every size.
pub fn directed_by_recursion(n: usize) -> Result<BTreeSet<Polyomino>, SizeOverflow> {
    assert!(n >= 1);
    if n > MAX_RECURSION_SIZE {
        return Err(SizeOverflow { requested: n, bound: MAX_RECURSION_SIZE });
    }
    let mut current: BTreeSet<Polyomino> = BTreeSet::new();
    current.insert(Polyomino::new([Cell::new(0, 0)]).unwrap());
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for animal in &current {
            for cell in animal.cells() {
                for up in cell.gen_upper_neighbours() {
                    if !animal.contains(up) {
                        let grown = animal.cells().iter().copied().chain([up]);
                        next.insert(Polyomino::new(grown).unwrap());
                    }
                }
            }
        }
        current = next;
    }
    Ok(current)
}

/// All polyominoes with `n` cells, grown by attaching any free neighbour of
/// any cell and deduplicating canonical forms at every size.
pub fn naive_enumerate(n: usize) -> Result<BTreeSet<Polyomino>, SizeOverflow> {
    assert!(n >= 1);
    if n > MAX_NAIVE_SIZE {
        return Err(SizeOverflow { requested: n, bound: MAX_NAIVE_SIZE });
    }
    let mut current: BTreeSet<Polyomino> = BTreeSet::new();
    current.insert(Polyomino::new([Cell::new(0, 0)]).unwrap());
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for animal in &current {
            for cell in animal.cells() {
                for nb in cell.neighbours() {
                    if !animal.contains(nb) {
                        let grown = animal.cells().iter().copied().chain([nb]);
                        next.insert(Polyomino::new(grown).unwrap());
                    }
                }
            }
        }
        current = next;
    }
    Ok(current)
}

/// Outcome of [`witness_search`]. A found witness covers the polyomino by
/// construction, so it carries no leftover.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessSearchResult {
    pub found: bool,
    pub witness: Option<Decomposition>,
}

/// Exhaustively search for an ordered sequence of pairwise-disjoint directed
/// animals (at most `k_max` of them) that covers `p` and satisfies, for each
/// animal after the first, the three requirements spelled out in the
/// multi-directed definition: the predecessor's source projects strictly
/// left of the animal, the union of earlier animals dominates it, and that
/// union shares an edge with it.
///
/// Candidate animals are tried by ascending source column and then ascending
/// body, so the first witness found is well defined.
pub fn witness_search(p: &Polyomino, k_max: usize) -> Result<WitnessSearchResult, SizeOverflow> {
    let n = p.cell_count();
    if n > MAX_WITNESS_SIZE {
        return Err(SizeOverflow { requested: n, bound: MAX_WITNESS_SIZE });
    }
    let cells = p.cells();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };

    // For each cell, the mask of cells it is a generalized upper neighbour of.
    let upper_of: Vec<u32> = cells
        .iter()
        .map(|c| {
            let mut mask = 0u32;
            for (j, d) in cells.iter().enumerate() {
                if d.gen_upper_neighbours().contains(c) {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect();

    // directed[m]: the cells selected by mask m form a directed animal.
    // Peels one cell at a time per the recursive definition; subsets precede
    // supersets numerically, so a single ascending pass fills the table.
    let mut directed = vec![false; 1 << n];
    for mask in 1u32..=full {
        if mask.count_ones() == 1 {
            directed[mask as usize] = true;
            continue;
        }
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = mask & !(1 << i);
            if directed[rest as usize] && upper_of[i] & rest != 0 {
                directed[mask as usize] = true;
                break;
            }
        }
    }

    struct Candidate {
        mask: u32,
        source: Cell,
        min_col: i32,
        body: Vec<Cell>,
    }

    let mut candidates: Vec<Candidate> = (1..=full)
        .filter(|&m| directed[m as usize])
        .map(|mask| {
            let body: Vec<Cell> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| cells[i]).collect();
            let source = body
                .iter()
                .copied()
                .find(|c| {
                    !body.iter().any(|d| d != c && d.gen_upper_neighbours().contains(c))
                })
                .expect("a directed animal has a source cell");
            Candidate { mask, source, min_col: body[0].x, body }
        })
        .collect();
    candidates.sort_by(|a, b| (a.source.x, &a.body).cmp(&(b.source.x, &b.body)));

    let mut chosen: Vec<usize> = Vec::new();
    let mut union: Vec<Cell> = Vec::new();
    let found = search(&candidates, full, k_max, 0, &mut chosen, &mut union);
    let witness = found.then(|| Decomposition {
        parts: chosen
            .iter()
            .map(|&i| DecompositionPart {
                source: candidates[i].source,
                body: candidates[i].body.clone(),
            })
            .collect(),
        leftover: vec![],
    });
    return Ok(WitnessSearchResult { found, witness });

    fn search(
        candidates: &[Candidate],
        full: u32,
        k_max: usize,
        used: u32,
        chosen: &mut Vec<usize>,
        union: &mut Vec<Cell>,
    ) -> bool {
        if used == full {
            return true;
        }
        if chosen.len() >= k_max {
            return false;
        }
        for (i, cand) in candidates.iter().enumerate() {
            if cand.mask & used != 0 {
                continue;
            }
            if let Some(&last) = chosen.last() {
                if !projection_left(candidates[last].source, cand.min_col)
                    || !set_dominates(union, &cand.body)
                    || !shares_edge(union, &cand.body)
                {
                    continue;
                }
            }
            chosen.push(i);
            let before = union.len();
            union.extend_from_slice(&cand.body);
            if search(candidates, full, k_max, used | cand.mask, chosen, union) {
                return true;
            }
            union.truncate(before);
            chosen.pop();
        }
        false
    }
}

/// With regular hexagons of circumradius 1, column `x` projects onto the
/// open interval `(3x/2, 3x/2 + 2)` of the horizontal axis. Doubling to stay
/// in integers, the projection of `source`'s column lies entirely to the
/// left of the animal spanning columns `min_col..` when the right end of the
/// first interval is at most the left end of the second.
fn projection_left(source: Cell, min_col: i32) -> bool {
    3 * i64::from(source.x) + 4 <= 3 * i64::from(min_col)
}

fn set_dominates(s: &[Cell], t: &[Cell]) -> bool {
    s.iter().any(|a| t.iter().any(|b| a.dominates(*b)))
        && !t.iter().any(|b| s.iter().any(|a| b.dominates(*a)))
}

fn shares_edge(s: &[Cell], t: &[Cell]) -> bool {
    s.iter().any(|a| t.iter().any(|b| a.is_neighbour(*b)))
}
