//! Integer partitions and rectangles.
//!
//! Cells are addressed as 1-based `(row, col)` pairs throughout the crate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};

pub type Cell = (usize, usize);

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is graded lexicographic: first by weight, then by parts in
/// decreasing lexicographic order, so `(2)` comes before `(1,1)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts increase.
    pub fn new(parts: impl Into<Vec<usize>>) -> std::result::Result<Self, ParseError> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ParseError(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    /// `(k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        Partition {
            parts: (1..=k).rev().collect(),
        }
    }

    /// The symmetric partition with the given Frobenius arm lengths (strictly decreasing).
    pub fn symmetric_from_arms(arms: &[usize]) -> Self {
        debug_assert!(arms.windows(2).all(|w| w[0] > w[1]));
        let d = arms.len();
        if d == 0 {
            return Partition::empty();
        }
        let rows = d + arms[0];
        let parts = (1..=rows)
            .map(|j| {
                if j <= d {
                    j + arms[j - 1]
                } else {
                    (1..=d).filter(|&i| i + arms[i - 1] >= j).count()
                }
            })
            .collect();
        Partition::from_sorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> usize {
        self.get(0)
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn fits_in(&self, rect: Rectangle) -> bool {
        self.len() <= rect.rows && self.first() <= rect.cols
    }

    /// The 180°-rotated complement inside `rect`.
    pub fn complement(&self, rect: Rectangle) -> Result<Partition> {
        if !self.fits_in(rect) {
            return Err(Error::ShapeOutOfBox {
                partition: self.to_string(),
                rect: rect.to_string(),
            });
        }
        let parts = (0..rect.rows)
            .map(|i| rect.cols - self.get(rect.rows - 1 - i))
            .collect();
        Ok(Partition::from_sorted(parts))
    }

    /// True iff `inner ⊆ self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn is_symmetric(&self) -> bool {
        self.conjugate() == *self
    }

    /// Number of diagonal cells.
    pub fn diagonal_length(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    fn require_symmetric(&self) -> Result<()> {
        if self.is_symmetric() {
            Ok(())
        } else {
            Err(Error::NotSymmetric(self.to_string()))
        }
    }

    /// `λ⁺` with `λ⁺_i = max(0, λ_i - i + 1)`.
    pub fn plus_part(&self) -> Result<Partition> {
        self.require_symmetric()?;
        Ok(self.shifted(1))
    }

    /// `λ⁻` with `λ⁻_i = max(0, λ_i - i)`.
    pub fn minus_part(&self) -> Result<Partition> {
        self.require_symmetric()?;
        Ok(self.shifted(0))
    }

    fn shifted(&self, offset: usize) -> Partition {
        let parts = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (p + offset).saturating_sub(i + 1))
            .collect();
        Partition::from_sorted(parts)
    }

    /// Adds one cell to every row meeting the diagonal.
    pub fn bar_closure(&self) -> Result<Partition> {
        self.require_symmetric()?;
        let d = self.diagonal_length();
        let mut parts = self.parts.clone();
        parts.iter_mut().take(d).for_each(|p| *p += 1);
        Ok(Partition::from_sorted(parts))
    }

    /// Removes one cell from every row meeting the diagonal.
    pub fn check_reduction(&self) -> Result<Partition> {
        self.require_symmetric()?;
        let d = self.diagonal_length();
        let mut parts = self.parts.clone();
        parts.iter_mut().take(d).for_each(|p| *p -= 1);
        Ok(Partition::from_sorted(parts))
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
            .collect()
    }

    /// Strictly decreasing positive parts.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| ParseError(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<&[usize]> for Partition {
    type Error = ParseError;

    fn try_from(parts: &[usize]) -> std::result::Result<Self, ParseError> {
        Partition::new(parts.to_vec())
    }
}

/// An `a×b` rectangle with `a, b ≥ 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rectangle {
    pub rows: usize,
    pub cols: usize,
}

impl Rectangle {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(format!(
                "rectangle {rows}x{cols} has a zero side"
            )));
        }
        Ok(Rectangle { rows, cols })
    }

    pub fn square(p: usize) -> Result<Self> {
        Rectangle::new(p, p)
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    pub fn transpose(&self) -> Rectangle {
        Rectangle {
            rows: self.cols,
            cols: self.rows,
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_partition(&self) -> Partition {
        Partition::rectangle(self.rows, self.cols)
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

impl fmt::Debug for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rectangle {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let bad = || ParseError(format!("bad rectangle {s:?}, expected AxB"));
        let (a, b) = s.trim().split_once(['x', 'X']).ok_or_else(bad)?;
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        Rectangle::new(a, b).map_err(|_| bad())
    }
}

/// All partitions `μ` with `lower ⊆ μ ⊆ upper` and `|μ| = weight`, in graded-lex order.
pub fn partitions_between(lower: &Partition, upper: &Partition, weight: usize) -> Vec<Partition> {
    if !upper.contains(lower) || weight < lower.weight() || weight > upper.weight() {
        return Vec::new();
    }
    let rows = upper.len();
    let lower_suffix: Vec<usize> = (0..=rows)
        .map(|i| (i..rows).map(|k| lower.get(k)).sum())
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    between_rec(
        0,
        weight,
        usize::MAX,
        lower,
        upper,
        &lower_suffix,
        &mut cur,
        &mut out,
    );
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn between_rec(
    i: usize,
    left: usize,
    cap: usize,
    lower: &Partition,
    upper: &Partition,
    lower_suffix: &[usize],
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let rows = upper.len();
    if i == rows {
        if left == 0 {
            out.push(Partition::from_sorted(cur.clone()));
        }
        return;
    }
    let hi = cap.min(upper.get(i)).min(left);
    for v in (lower.get(i)..=hi).rev() {
        let rest = left - v;
        let room: usize = (i + 1..rows).map(|k| upper.get(k).min(v)).sum();
        if rest > room || rest < lower_suffix[i + 1] {
            continue;
        }
        cur.push(v);
        between_rec(i + 1, rest, v, lower, upper, lower_suffix, cur, out);
        cur.pop();
    }
}

/// Partitions inside `rect`, optionally of fixed weight and/or symmetric, in graded-lex order.
pub fn enumerate_in_rectangle(
    rect: Rectangle,
    weight: Option<usize>,
    symmetric_only: bool,
) -> Vec<Partition> {
    let full = rect.as_partition();
    let empty = Partition::empty();
    let weights: Vec<usize> = match weight {
        Some(w) => vec![w],
        None => (0..=rect.area()).collect(),
    };
    weights
        .into_iter()
        .flat_map(|w| partitions_between(&empty, &full, w))
        .filter(|p| !symmetric_only || p.is_symmetric())
        .collect()
}
