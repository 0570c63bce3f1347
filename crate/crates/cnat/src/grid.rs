//! Dotted square grids: the raw input representation.
//!
//! Coordinates are 1-based with the origin at the top-left; `(row, col)`
//! order throughout. Row 1 is the top row, column 1 the leftmost column.

use std::fmt;

use thiserror::Error;

/// A single cell position, 1-based, `(row, col)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellCoord {
    pub row: u32,
    pub col: u32,
}

impl CellCoord {
    pub fn new(row: u32, col: u32) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for CellCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("grid size must be at least 1")]
    ZeroSize,
    #[error("cell {0} outside the {1}x{1} grid")]
    OutOfBounds(CellCoord, u32),
    #[error("duplicate cell {0}")]
    Duplicate(CellCoord),
}

/// An `n` x `n` grid with a set of dotted cells. Candidate input for CNAT
/// validation; carries no tree structure.
///
/// Dots are kept sorted in row-major order with no duplicates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DotGrid {
    n: u32,
    dots: Vec<CellCoord>,
}

impl DotGrid {
    pub fn new(n: u32, mut dots: Vec<CellCoord>) -> Result<Self, GridError> {
        if n == 0 {
            return Err(GridError::ZeroSize);
        }
        for &d in &dots {
            if d.row < 1 || d.col < 1 || d.row > n || d.col > n {
                return Err(GridError::OutOfBounds(d, n));
            }
        }
        dots.sort_unstable();
        for w in dots.windows(2) {
            if w[0] == w[1] {
                return Err(GridError::Duplicate(w[0]));
            }
        }
        Ok(Self { n, dots })
    }

    /// Dots must already be sorted row-major, deduplicated, and in bounds.
    pub(crate) fn from_sorted_unchecked(n: u32, dots: Vec<CellCoord>) -> Self {
        debug_assert!(dots.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(dots
            .iter()
            .all(|d| (1..=n).contains(&d.row) && (1..=n).contains(&d.col)));
        Self { n, dots }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Dots in row-major order.
    pub fn dots(&self) -> &[CellCoord] {
        &self.dots
    }

    pub fn contains(&self, coord: CellCoord) -> bool {
        self.dots.binary_search(&coord).is_ok()
    }

    pub fn index_of(&self, coord: CellCoord) -> Option<usize> {
        self.dots.binary_search(&coord).ok()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line} has {len} characters, expected {expected}")]
    RaggedLine {
        line: usize,
        len: usize,
        expected: usize,
    },
    #[error("{rows} lines of {cols} characters do not form a square grid")]
    NotSquare { rows: usize, cols: usize },
    #[error("illegal character {ch:?} at line {line}, column {col}")]
    BadChar { line: usize, col: usize, ch: char },
}

/// Parses the plain text grid format: `n` lines of exactly `n` characters,
/// `'X'` for a dot and `'.'` for an empty cell, with an optional trailing
/// newline.
pub fn parse_grid(text: &str) -> Result<DotGrid, GridParseError> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Err(GridParseError::Empty);
    }
    let lines: Vec<&str> = body.split('\n').collect();
    let width = lines[0].chars().count();
    for (i, line) in lines.iter().enumerate() {
        let len = line.chars().count();
        if len != width {
            return Err(GridParseError::RaggedLine {
                line: i + 1,
                len,
                expected: width,
            });
        }
    }
    if lines.len() != width {
        return Err(GridParseError::NotSquare {
            rows: lines.len(),
            cols: width,
        });
    }
    let n = width as u32;
    let mut dots = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        for (j, ch) in line.chars().enumerate() {
            match ch {
                'X' => dots.push(CellCoord::new(i as u32 + 1, j as u32 + 1)),
                '.' => {}
                _ => {
                    return Err(GridParseError::BadChar {
                        line: i + 1,
                        col: j + 1,
                        ch,
                    })
                }
            }
        }
    }
    Ok(DotGrid::from_sorted_unchecked(n, dots))
}

/// Canonical text form of a grid: `n` newline-separated lines, no trailing
/// newline. Inverse of [`parse_grid`].
pub fn serialize_grid(grid: &DotGrid) -> String {
    let n = grid.n() as usize;
    let mut rows = vec![vec![b'.'; n]; n];
    for d in grid.dots() {
        rows[(d.row - 1) as usize][(d.col - 1) as usize] = b'X';
    }
    rows.iter()
        .map(|r| std::str::from_utf8(r).unwrap())
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_small_grid() {
        let g = parse_grid("XX\nX.").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(
            g.dots(),
            &[
                CellCoord::new(1, 1),
                CellCoord::new(1, 2),
                CellCoord::new(2, 1)
            ]
        );
    }

    #[test]
    fn parse_single_cell() {
        let g = parse_grid("X").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.dots(), &[CellCoord::new(1, 1)]);
    }

    #[test]
    fn trailing_newline_accepted() {
        assert_eq!(parse_grid("XX\nX.\n").unwrap(), parse_grid("XX\nX.").unwrap());
    }

    #[test]
    fn serialize_round_trip() {
        for text in ["X", "XX\nX.", "XX.\nX.X\n.X."] {
            assert_eq!(serialize_grid(&parse_grid(text).unwrap()), text);
        }
    }

    #[test]
    fn rejects_empty() {
        assert_eq!(parse_grid(""), Err(GridParseError::Empty));
        assert_eq!(parse_grid("\n"), Err(GridParseError::Empty));
    }

    #[test]
    fn rejects_ragged() {
        assert!(matches!(
            parse_grid("XX\nX"),
            Err(GridParseError::RaggedLine { line: 2, .. })
        ));
    }

    #[test]
    fn rejects_non_square() {
        assert_eq!(
            parse_grid("XXX\n..X"),
            Err(GridParseError::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn rejects_bad_char() {
        assert!(matches!(
            parse_grid("X.\n.o"),
            Err(GridParseError::BadChar {
                line: 2,
                col: 2,
                ch: 'o'
            })
        ));
    }

    #[test]
    fn grid_rejects_out_of_bounds_and_duplicates() {
        let oob = DotGrid::new(2, vec![CellCoord::new(3, 1)]);
        assert!(matches!(oob, Err(GridError::OutOfBounds(_, 2))));
        let dup = DotGrid::new(2, vec![CellCoord::new(1, 1), CellCoord::new(1, 1)]);
        assert!(matches!(dup, Err(GridError::Duplicate(_))));
        assert!(matches!(DotGrid::new(0, vec![]), Err(GridError::ZeroSize)));
    }
}
