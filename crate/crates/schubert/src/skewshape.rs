//! Skew diagrams `μ/λ`, their rectangle decompositions and concatenations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::partition::{partitions_between, Cell, Partition, Rectangle};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// A rectangle block of a decomposition together with its top-left cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlacedBlock {
    pub rect: Rectangle,
    pub row: usize,
    pub col: usize,
}

/// Blocks of a decomposition, top-right block first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RectangleChain {
    pub blocks: Vec<Rectangle>,
}

impl RectangleChain {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn total_rows(&self) -> usize {
        self.blocks.iter().map(|r| r.rows).sum()
    }

    pub fn total_cols(&self) -> usize {
        self.blocks.iter().map(|r| r.cols).sum()
    }
}

impl fmt::Display for RectangleChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        f.write_str(&s.join("*"))
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape {
            outer: shape,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.outer.is_symmetric() && self.inner.is_symmetric()
    }

    /// Row `r` (1-based) spans columns `inner_r + 1 ..= outer_r`.
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (self.inner.get(r - 1), self.outer.get(r - 1))
    }

    pub fn contains_cell(&self, (r, c): Cell) -> bool {
        r >= 1 && c > self.inner.get(r - 1) && c <= self.outer.get(r - 1)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.outer.len())
            .flat_map(|r| {
                let (a, b) = self.row_span(r);
                (a + 1..=b).map(move |c| (r, c))
            })
            .collect()
    }

    /// Right to left along each row, rows top to bottom.
    pub fn reverse_numbering(&self) -> Vec<Cell> {
        (1..=self.outer.len())
            .flat_map(|r| {
                let (a, b) = self.row_span(r);
                (a + 1..=b).rev().map(move |c| (r, c))
            })
            .collect()
    }

    /// Edge-connected components, each required to be a full rectangle.
    pub fn placed_blocks(&self) -> Option<Vec<PlacedBlock>> {
        let mut blocks: Vec<PlacedBlock> = Vec::new();
        let mut prev: Option<(usize, usize)> = None;
        for r in 1..=self.outer.len() {
            let (a, b) = self.row_span(r);
            if a == b {
                prev = None;
                continue;
            }
            let joins = matches!(prev, Some((pa, pb)) if b > pa && a < pb);
            if joins {
                let last = blocks.last_mut().unwrap();
                if (a, b) != (last.col - 1, last.col - 1 + last.rect.cols) {
                    return None;
                }
                last.rect.rows += 1;
            } else {
                blocks.push(PlacedBlock {
                    rect: Rectangle {
                        rows: 1,
                        cols: b - a,
                    },
                    row: r,
                    col: a + 1,
                });
            }
            prev = Some((a, b));
        }
        Some(blocks)
    }

    /// The corner-contact rectangle chain, or `None` when the cells are not such a union.
    pub fn rectangle_decomposition(&self) -> Option<RectangleChain> {
        self.placed_blocks().map(|bs| RectangleChain {
            blocks: bs.into_iter().map(|b| b.rect).collect(),
        })
    }

    /// All `μ'/λ` with `λ ⊆ μ' ⊆ μ` and `|μ'| = |λ| + size`.
    pub fn sub_skews(&self, size: usize) -> Vec<SkewShape> {
        partitions_between(&self.inner, &self.outer, self.inner.weight() + size)
            .into_iter()
            .map(|m| SkewShape {
                outer: m,
                inner: self.inner.clone(),
            })
            .collect()
    }

    /// `α₁ ∗ … ∗ α_m`: factors placed from the top right to the bottom left, sharing no row or column.
    pub fn concat(factors: &[Partition]) -> SkewShape {
        let total_cols: usize = factors.iter().map(|f| f.first()).sum();
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut used_cols = 0;
        for f in factors.iter().filter(|f| !f.is_empty()) {
            used_cols += f.first();
            let left = total_cols - used_cols;
            for &part in f.parts() {
                outer.push(left + part);
                inner.push(left);
            }
        }
        SkewShape {
            outer: Partition::from_sorted(outer),
            inner: Partition::from_sorted(inner),
        }
    }

    pub fn concat_rectangles(rects: &[Rectangle]) -> SkewShape {
        let parts: Vec<Partition> = rects.iter().map(|r| r.as_partition()).collect();
        SkewShape::concat(&parts)
    }
}

/// Splitting of a symmetric decomposable skew into upper flanks, a diagonal
/// `p₀×p₀` block (`center = 0` when absent) and the transposed lower flanks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricLayout {
    /// `a_1×b_1, …, a_m×b_m` from the top.
    pub upper: Vec<Rectangle>,
    pub center: usize,
    /// `b_m×a_m, …, b_1×a_1`, the blocks below the diagonal in chain order.
    pub lower: Vec<Rectangle>,
}

impl SymmetricLayout {
    pub fn of(s: &SkewShape) -> Option<SymmetricLayout> {
        if !s.is_symmetric() {
            return None;
        }
        let blocks = s.placed_blocks()?;
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        let mut center = 0;
        for b in blocks {
            match b.col.cmp(&b.row) {
                std::cmp::Ordering::Greater => upper.push(b.rect),
                std::cmp::Ordering::Less => lower.push(b.rect),
                std::cmp::Ordering::Equal => center = b.rect.rows,
            }
        }
        Some(SymmetricLayout {
            upper,
            center,
            lower,
        })
    }
}

/// `λ ⊆ μ ⊆ rect` and `μ/λ` decomposes into corner-contact rectangles.
pub fn is_compatible_pair(lambda: &Partition, mu: &Partition, rect: Rectangle) -> bool {
    mu.contains(lambda)
        && mu.fits_in(rect)
        && SkewShape {
            outer: mu.clone(),
            inner: lambda.clone(),
        }
        .rectangle_decomposition()
        .is_some()
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SkewShape {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let (o, i) = s.split_once('/').unwrap_or((s, ""));
        let outer: Partition = o.parse()?;
        let inner: Partition = i.parse()?;
        SkewShape::new(outer, inner).map_err(|e| ParseError(e.to_string()))
    }
}

/// Parses `"2*2"`, `"2,1*1x2"`: partitions or `AxB` rectangles joined by `*`.
pub fn parse_factors(s: &str) -> std::result::Result<Vec<Partition>, ParseError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split('*')
        .map(|t| {
            let t = t.trim();
            if t.contains(['x', 'X']) {
                t.parse::<Rectangle>().map(|r| r.as_partition())
            } else {
                t.parse::<Partition>()
            }
        })
        .collect()
}

/// Parses a list of rectangles separated by `*` or `,`, e.g. `"1x1,1x2"`.
pub fn parse_rectangles(s: &str) -> std::result::Result<Vec<Rectangle>, ParseError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(['*', ','])
        .map(|t| t.parse::<Rectangle>())
        .collect()
}
