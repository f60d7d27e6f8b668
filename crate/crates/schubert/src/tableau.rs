//! Semistandard (skew) tableaux, the plactic product, jeu de taquin and LR fillings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::partition::{Cell, Partition};
use crate::skewshape::SkewShape;

/// A semistandard filling of a skew shape. `rows[r]` lists the entries of row `r + 1`
/// from left to right, skipping inner cells.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

/// Order in which inner corners are vacated during rectification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlideOrder {
    TopCornerFirst,
    BottomCornerFirst,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> std::result::Result<Self, ParseError> {
        let n = shape.outer().len();
        let mut rows = rows;
        while rows.len() > n && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() != n {
            return Err(ParseError(format!("expected {n} rows for shape {shape}")));
        }
        for (i, row) in rows.iter().enumerate() {
            let (a, b) = shape.row_span(i + 1);
            if row.len() != b - a {
                return Err(ParseError(format!(
                    "row {} of shape {shape} needs {} entries",
                    i + 1,
                    b - a
                )));
            }
        }
        let t = Tableau { shape, rows };
        if !t.is_semistandard() {
            return Err(ParseError("filling is not semistandard".into()));
        }
        Ok(t)
    }

    /// The empty tableau of shape `∅`.
    pub fn empty() -> Self {
        Tableau {
            shape: SkewShape::straight(Partition::empty()),
            rows: Vec::new(),
        }
    }

    /// `U(λ)`: row `i` filled with `i`.
    pub fn superstandard(lambda: &Partition) -> Self {
        let rows = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| vec![i + 1; p])
            .collect();
        Tableau {
            shape: SkewShape::straight(lambda.clone()),
            rows,
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_straight(&self) -> bool {
        self.shape.is_straight()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, (r, c): Cell) -> Option<usize> {
        if !self.shape.contains_cell((r, c)) {
            return None;
        }
        let a = self.shape.inner().get(r - 1);
        Some(self.rows[r - 1][c - a - 1])
    }

    /// Multiset of entries as `value → multiplicity`.
    pub fn content(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &x in self.rows.iter().flatten() {
            *m.entry(x).or_insert(0) += 1;
        }
        m
    }

    pub fn is_semistandard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if i == 0 {
                continue;
            }
            let (a, _) = self.shape.row_span(i + 1);
            for (k, &x) in row.iter().enumerate() {
                if let Some(above) = self.entry((i, a + k + 1)) {
                    if above >= x {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Row reading word: rows from bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Entries listed in reverse numbering order (rows top to bottom, right to left).
    pub fn reverse_word(&self) -> Vec<usize> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev())
            .copied()
            .collect()
    }

    fn from_straight_rows(rows: Vec<Vec<usize>>) -> Self {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect::<Vec<_>>())
            .expect("row insertion keeps a partition shape");
        Tableau {
            shape: SkewShape::straight(shape),
            rows,
        }
    }

    /// Schensted row insertion of a word into the empty tableau.
    pub fn from_word(word: &[usize]) -> Self {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for &x in word {
            row_insert(&mut rows, x);
        }
        Tableau::from_straight_rows(rows)
    }

    /// The plactic product `self · other`.
    pub fn product(&self, other: &Tableau) -> Result<Tableau> {
        if !self.is_straight() || !other.is_straight() {
            return Err(Error::SkewInputNotSupported);
        }
        let mut rows = self.rows.clone();
        for x in other.reading_word() {
            row_insert(&mut rows, x);
        }
        Ok(Tableau::from_straight_rows(rows))
    }

    pub fn rectify(&self) -> Tableau {
        self.rectify_with(SlideOrder::BottomCornerFirst)
    }

    /// Jeu-de-taquin rectification, vacating inner corners in the given order.
    pub fn rectify_with(&self, order: SlideOrder) -> Tableau {
        let mut grid: Vec<Vec<Option<usize>>> = (0..self.shape.outer().len())
            .map(|r| {
                let (a, _) = self.shape.row_span(r + 1);
                let mut v = vec![None; a];
                v.extend(self.rows[r].iter().map(|&x| Some(x)));
                v
            })
            .collect();
        let mut inner: Vec<usize> = self.shape.inner().parts().to_vec();
        loop {
            let corners: Vec<usize> = (0..inner.len())
                .filter(|&r| inner[r] > 0 && inner.get(r + 1).copied().unwrap_or(0) < inner[r])
                .collect();
            let Some(&r) = (match order {
                SlideOrder::TopCornerFirst => corners.first(),
                SlideOrder::BottomCornerFirst => corners.last(),
            }) else {
                break;
            };
            let c = inner[r] - 1;
            inner[r] -= 1;
            slide(&mut grid, r, c);
        }
        while grid.last().is_some_and(|row| row.is_empty()) {
            grid.pop();
        }
        let rows = grid
            .into_iter()
            .map(|row| row.into_iter().map(|x| x.unwrap()).collect())
            .collect();
        Tableau::from_straight_rows(rows)
    }
}

/// Bumps the leftmost entry strictly greater than `x`, cascading downwards.
fn row_insert(rows: &mut Vec<Vec<usize>>, mut x: usize) {
    for row in rows.iter_mut() {
        match row.iter().position(|&y| y > x) {
            Some(k) => x = std::mem::replace(&mut row[k], x),
            None => {
                row.push(x);
                return;
            }
        }
    }
    rows.push(vec![x]);
}

/// Moves the hole at `(r, c)` outwards until it leaves the shape.
fn slide(grid: &mut [Vec<Option<usize>>], mut r: usize, mut c: usize) {
    loop {
        let right = grid[r].get(c + 1).copied().flatten();
        let below = grid
            .get(r + 1)
            .and_then(|row| row.get(c))
            .copied()
            .flatten();
        let go_down = match (right, below) {
            (None, None) => break,
            (Some(_), None) => false,
            (None, Some(_)) => true,
            (Some(x), Some(y)) => y <= x,
        };
        if go_down {
            grid[r][c] = grid[r + 1][c].take();
            r += 1;
        } else {
            grid[r][c] = grid[r][c + 1].take();
            c += 1;
        }
    }
    grid[r].truncate(c);
}

/// Fillings `S` of `shape` with `Rect(S) = U(content)`, ordered lexicographically on the
/// reverse-numbering word.
pub fn enumerate_lr_fillings(shape: &SkewShape, content: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    lr_search(shape, content, &mut |rows| {
        out.push(Tableau {
            shape: shape.clone(),
            rows: rows.to_vec(),
        });
    });
    out
}

/// Number of LR fillings of `shape` with the given content.
pub fn count_lr_fillings(shape: &SkewShape, content: &Partition) -> u64 {
    let mut n = 0u64;
    lr_search(shape, content, &mut |_| n += 1);
    n
}

/// Backtracks over semistandard fillings whose reverse-numbering word is a lattice word.
fn lr_search(shape: &SkewShape, content: &Partition, emit: &mut dyn FnMut(&[Vec<usize>])) {
    if shape.size() != content.weight() {
        return;
    }
    let order = shape.reverse_numbering();
    let mut rows: Vec<Vec<usize>> = (1..=shape.outer().len())
        .map(|r| {
            let (a, b) = shape.row_span(r);
            vec![0; b - a]
        })
        .collect();
    let mut counts = vec![0usize; content.len() + 1];
    let mut st = Search {
        shape,
        content,
        order: &order,
        rows: &mut rows,
        counts: &mut counts,
    };
    st.go(0, emit);
}

struct Search<'a> {
    shape: &'a SkewShape,
    content: &'a Partition,
    order: &'a [Cell],
    rows: &'a mut Vec<Vec<usize>>,
    counts: &'a mut Vec<usize>,
}

impl Search<'_> {
    fn at(&self, (r, c): Cell) -> Option<usize> {
        if !self.shape.contains_cell((r, c)) {
            return None;
        }
        Some(self.rows[r - 1][c - self.shape.inner().get(r - 1) - 1])
    }

    fn go(&mut self, k: usize, emit: &mut dyn FnMut(&[Vec<usize>])) {
        if k == self.order.len() {
            emit(self.rows);
            return;
        }
        let (r, c) = self.order[k];
        // filled right to left: bounded above by the right neighbour
        let hi = self.at((r, c + 1)).unwrap_or(self.content.len());
        let lo = self.at((r - 1, c)).filter(|_| r > 1).map_or(1, |x| x + 1);
        let a = self.shape.inner().get(r - 1);
        for v in lo..=hi.min(self.content.len()) {
            if self.counts[v] >= self.content.get(v - 1) {
                continue;
            }
            if v > 1 && self.counts[v] >= self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.rows[r - 1][c - a - 1] = v;
            self.go(k + 1, emit);
            self.rows[r - 1][c - a - 1] = 0;
            self.counts[v] -= 1;
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let a = self.shape.inner().get(i);
                let mut s = ".".repeat(a);
                let multi = self.rows.iter().flatten().any(|&x| x > 9);
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                if multi {
                    if a > 0 && !cells.is_empty() {
                        s.push(',');
                    }
                    s.push_str(&cells.join(","));
                } else {
                    s.push_str(&cells.concat());
                }
                s
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({self})")
    }
}

impl FromStr for Tableau {
    type Err = ParseError;

    /// Rows separated by `/`, `.` for inner cells; entries are single digits or comma-separated.
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::empty());
        }
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        let multi = s.contains(',');
        for line in s.split('/') {
            let dots = line.chars().take_while(|&ch| ch == '.').count();
            let rest = line[dots..].trim_start_matches(',');
            let entries: Vec<usize> = if rest.is_empty() {
                Vec::new()
            } else if multi {
                rest.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| ParseError(format!("bad entry {t:?}")))
                    })
                    .collect::<std::result::Result<_, _>>()?
            } else {
                rest.chars()
                    .map(|ch| {
                        ch.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| ParseError(format!("bad entry {ch:?}")))
                    })
                    .collect::<std::result::Result<_, _>>()?
            };
            inner.push(dots);
            outer.push(dots + entries.len());
            rows.push(entries);
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)
            .map_err(|e| ParseError(e.to_string()))?;
        Tableau::new(shape, rows)
    }
}
