//! Cells of the hexagonal tiling and the relations between them.
//!
//! Hexagons are drawn with two horizontal edges, so the tiling splits into
//! vertical columns of cells stacked edge on edge, with adjacent columns
//! offset by half a cell. `Cell { x, y }` addresses the `y`-th cell of
//! column `x`; the centre of that cell sits at height `y + x/2` in units of
//! one cell height. In-column steps change the height by a full unit, steps
//! into a neighbouring column by half a unit.
//!
//! # Domination
//!
//! `c` dominates `d` when `c` lies `i >= 0` units above one of the three
//! generalized upper neighbours of `d`. The three candidate columns collapse
//! the existential into a closed form over `dx = c.x - d.x`:
//!
//! * `dx == -1`: `c` is at or above the upper-left neighbour, `c.y >= d.y + 1`;
//! * `dx ==  0`: `c` is at or above the upper neighbour, `c.y >= d.y + 1`;
//! * `dx == +1`: `c` is at or above the upper-right neighbour, `c.y >= d.y`.
//!
//! Cells two or more columns apart never dominate one another, and no cell
//! dominates itself. The unit tests check the closed form against the
//! literal "some `i` units above" definition over a coordinate window.

use std::fmt;

/// One cell of the hexagonal tiling: column `x`, position `y` inside the
/// column. Ordering is lexicographic by `(x, y)`.
///
/// Coordinates are expected to stay within roughly `±10^9` so neighbour
/// offsets and height arithmetic cannot overflow.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    /// The six cells sharing an edge with `self`: upper, lower, upper-left,
    /// lower-left, upper-right, lower-right.
    pub fn neighbours(self) -> [Cell; 6] {
        let Cell { x, y } = self;
        [
            Cell::new(x, y + 1),
            Cell::new(x, y - 1),
            Cell::new(x - 1, y + 1),
            Cell::new(x - 1, y),
            Cell::new(x + 1, y),
            Cell::new(x + 1, y - 1),
        ]
    }

    /// The generalized upper neighbours: upper-left, upper, upper-right.
    pub fn gen_upper_neighbours(self) -> [Cell; 3] {
        let Cell { x, y } = self;
        [Cell::new(x - 1, y + 1), Cell::new(x, y + 1), Cell::new(x + 1, y)]
    }

    /// Twice the height of the cell centre, `2y + x`. The height itself is
    /// the half-integer `y + x/2`; doubling keeps it in integers.
    pub fn doubled_height(self) -> i64 {
        2 * self.y as i64 + self.x as i64
    }

    /// Height of the cell centre in cell-height units. Half-integers of this
    /// magnitude are exact in an `f64`.
    pub fn height(self) -> f64 {
        self.doubled_height() as f64 / 2.0
    }

    /// Whether `self` and `other` share an edge.
    pub fn is_neighbour(self, other: Cell) -> bool {
        let dx = other.x as i64 - self.x as i64;
        let dy = other.y as i64 - self.y as i64;
        matches!((dx, dy), (0, 1) | (0, -1) | (-1, 1) | (-1, 0) | (1, 0) | (1, -1))
    }

    /// Whether `self` dominates `other`, i.e. lies some `i >= 0` units above
    /// a generalized upper neighbour of `other`. See the module docs for the
    /// derivation of the closed form.
    pub fn dominates(self, other: Cell) -> bool {
        let dx = self.x as i64 - other.x as i64;
        let dy = self.y as i64 - other.y as i64;
        match dx {
            -1 | 0 => dy >= 1,
            1 => dy >= 0,
            _ => false,
        }
    }

    pub fn translated(self, dx: i32, dy: i32) -> Cell {
        Cell::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.x, self.y)
    }
}
