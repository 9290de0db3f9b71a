//! Text formats for cell lists.
//!
//! The file format is one cell per line, `x y` with two decimal integers;
//! blank lines and lines starting with `#` are ignored; duplicate cells are
//! rejected. The listing format packs a whole polyomino on one line as
//! `x y;x y;...` with cells sorted by `(x, y)`.

use crate::cell::Cell;
use thiserror::Error;

/// Largest accepted coordinate magnitude, so downstream arithmetic on
/// neighbours and heights can never overflow.
pub const COORD_LIMIT: i32 = 1_000_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CellListError {
    #[error("line {line}: expected \"x y\" with two decimal integers, found {found:?}")]
    Malformed { line: usize, found: String },
    #[error("line {line}: coordinate exceeds ±{COORD_LIMIT}")]
    OutOfRange { line: usize },
    #[error("line {line}: duplicate cell {cell}")]
    DuplicateCell { line: usize, cell: Cell },
}

/// Parse the one-cell-per-line format. Cells are returned in file order and
/// are not translated or validated beyond duplicate rejection.
pub fn parse_cell_list(input: &str) -> Result<Vec<Cell>, CellListError> {
    let mut cells = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        push_cell(&mut cells, text, line)?;
    }
    Ok(cells)
}

pub fn write_cell_list(cells: &[Cell]) -> String {
    let mut out = String::new();
    for cell in cells {
        out.push_str(&cell.to_string());
        out.push('\n');
    }
    out
}

/// One-line listing of a cell sequence, `x y;x y;...`.
pub fn listing_line(cells: &[Cell]) -> String {
    cells
        .iter()
        .map(Cell::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

/// Parse a listing line back into cells. Reported "line" numbers refer to
/// the position of the entry within the line.
pub fn parse_listing_line(line: &str) -> Result<Vec<Cell>, CellListError> {
    let mut cells = Vec::new();
    for (idx, entry) in line.trim().split(';').enumerate() {
        push_cell(&mut cells, entry.trim(), idx + 1)?;
    }
    Ok(cells)
}

fn push_cell(cells: &mut Vec<Cell>, text: &str, line: usize) -> Result<(), CellListError> {
    let malformed = || CellListError::Malformed { line, found: text.to_string() };
    let mut tokens = text.split_whitespace();
    let x: i64 = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(malformed)?;
    let y: i64 = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(malformed)?;
    if tokens.next().is_some() {
        return Err(malformed());
    }
    let limit = COORD_LIMIT as i64;
    if x.abs() > limit || y.abs() > limit {
        return Err(CellListError::OutOfRange { line });
    }
    let cell = Cell::new(x as i32, y as i32);
    if cells.contains(&cell) {
        return Err(CellListError::DuplicateCell { line, cell });
    }
    cells.push(cell);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blanks() {
        let text = "# header\n\n0 0\n 1  -1 \n\n# trailing\n";
        assert_eq!(
            parse_cell_list(text).unwrap(),
            vec![Cell::new(0, 0), Cell::new(1, -1)]
        );
    }

    #[test]
    fn rejects_garbage_and_arity() {
        assert!(matches!(
            parse_cell_list("0\n"),
            Err(CellListError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_cell_list("0 0\n1 2 3\n"),
            Err(CellListError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_cell_list("a b\n"),
            Err(CellListError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn rejects_duplicates() {
        assert_eq!(
            parse_cell_list("0 0\n1 0\n0 0\n"),
            Err(CellListError::DuplicateCell { line: 3, cell: Cell::new(0, 0) })
        );
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            parse_cell_list("2000000000 0\n"),
            Err(CellListError::OutOfRange { line: 1 })
        );
        // beyond i64 parse range is merely malformed
        assert!(matches!(
            parse_cell_list("99999999999999999999 0\n"),
            Err(CellListError::Malformed { .. })
        ));
    }

    #[test]
    fn listing_round_trip() {
        let cells = vec![Cell::new(0, 1), Cell::new(1, 0), Cell::new(2, -3)];
        let line = listing_line(&cells);
        assert_eq!(line, "0 1;1 0;2 -3");
        assert_eq!(parse_listing_line(&line).unwrap(), cells);
    }

    #[test]
    fn file_round_trip() {
        let cells = vec![Cell::new(-2, 5), Cell::new(0, 0)];
        assert_eq!(parse_cell_list(&write_cell_list(&cells)).unwrap(), cells);
    }
}
