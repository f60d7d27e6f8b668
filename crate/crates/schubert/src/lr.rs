//! Littlewood–Richardson coefficients, multi-factor coefficients and inscription predicates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs::OpenOptions;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::sync::LazyLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use parking_lot::{Mutex, RwLock};

use crate::error::{Error, Result};
use crate::partition::{enumerate_in_rectangle, partitions_between, Cell, Partition, Rectangle};
use crate::skewshape::{SkewShape, SymmetricLayout};
use crate::tableau::{count_lr_fillings, Tableau};

/// Key of `c^{outer}_{inner, content}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LRKey {
    pub outer: Partition,
    pub inner: Partition,
    pub content: Partition,
}

impl LRKey {
    pub fn new(outer: Partition, inner: Partition, content: Partition) -> Self {
        LRKey {
            outer,
            inner,
            content,
        }
    }

    /// Smallest representative under conjugation and swapping `inner`/`content`.
    pub fn canonical(&self) -> LRKey {
        let conj = LRKey {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
            content: self.content.conjugate(),
        };
        let mut best = self.clone();
        for k in [conj.swapped(), self.swapped(), conj] {
            if k < best {
                best = k;
            }
        }
        best
    }

    fn swapped(&self) -> LRKey {
        LRKey {
            outer: self.outer.clone(),
            inner: self.content.clone(),
            content: self.inner.clone(),
        }
    }

    fn trivially_zero(&self) -> bool {
        self.outer.weight() != self.inner.weight() + self.content.weight()
            || !self.outer.contains(&self.inner)
            || !self.outer.contains(&self.content)
    }
}

impl fmt::Display for LRKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{}", self.outer, self.inner, self.content)
    }
}

impl std::str::FromStr for LRKey {
    type Err = crate::error::ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let mut it = s.split(';');
        let mut next = || {
            it.next()
                .ok_or_else(|| crate::error::ParseError(format!("bad key {s:?}")))
        };
        let outer = next()?.parse()?;
        let inner = next()?.parse()?;
        let content = next()?.parse()?;
        Ok(LRKey {
            outer,
            inner,
            content,
        })
    }
}

struct Journal {
    path: PathBuf,
    pending: Vec<String>,
}

/// Process-wide memo table for LR coefficients, optionally mirrored to a text file.
pub struct LrCache {
    map: RwLock<HashMap<LRKey, u64>>,
    journal: Mutex<Option<Journal>>,
}

static CACHE: LazyLock<LrCache> = LazyLock::new(|| LrCache {
    map: RwLock::new(HashMap::new()),
    journal: Mutex::new(None),
});

pub fn cache() -> &'static LrCache {
    &CACHE
}

impl LrCache {
    pub fn len(&self) -> usize {
        self.map.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, key: &LRKey) -> Option<u64> {
        self.map.read().get(key).copied()
    }

    fn insert(&self, key: LRKey, value: u64) {
        let mut map = self.map.write();
        if map.contains_key(&key) {
            return;
        }
        if let Some(j) = self.journal.lock().as_mut() {
            j.pending.push(format!("{key}={value}\n"));
        }
        map.insert(key, value);
    }

    /// Loads `key=value` lines from `path` (if it exists) and records new entries for [`LrCache::flush`].
    pub fn attach_file(&self, path: &Path) -> io::Result<usize> {
        let mut loaded = 0;
        if path.exists() {
            let file = std::fs::File::open(path)?;
            let mut map = self.map.write();
            for line in io::BufReader::new(file).lines() {
                let line = line?;
                let Some((k, v)) = line.split_once('=') else {
                    continue;
                };
                let (Ok(k), Ok(v)) = (k.parse::<LRKey>(), v.trim().parse::<u64>()) else {
                    continue;
                };
                map.insert(k.canonical(), v);
                loaded += 1;
            }
        }
        *self.journal.lock() = Some(Journal {
            path: path.to_path_buf(),
            pending: Vec::new(),
        });
        Ok(loaded)
    }

    /// Appends entries computed since [`LrCache::attach_file`] with a single write.
    pub fn flush(&self) -> io::Result<()> {
        let mut guard = self.journal.lock();
        let Some(j) = guard.as_mut() else {
            return Ok(());
        };
        if j.pending.is_empty() {
            return Ok(());
        }
        let buf = j.pending.concat();
        let mut f = OpenOptions::new().create(true).append(true).open(&j.path)?;
        f.write_all(buf.as_bytes())?;
        j.pending.clear();
        Ok(())
    }
}

/// `c^μ_{λν}` counted via LR fillings, memoized.
pub fn lr_coefficient(key: &LRKey) -> u64 {
    if key.trivially_zero() {
        return 0;
    }
    let key = key.canonical();
    if let Some(v) = CACHE.get(&key) {
        return v;
    }
    let shape = SkewShape::new(key.outer.clone(), key.inner.clone()).expect("checked containment");
    let v = count_lr_fillings(&shape, &key.content);
    CACHE.insert(key, v);
    v
}

pub fn lr(outer: &Partition, inner: &Partition, content: &Partition) -> u64 {
    lr_coefficient(&LRKey::new(outer.clone(), inner.clone(), content.clone()))
}

/// Number of tableaux `T` of shape `inner` with `T · U(content) = U(outer)`.
pub fn lr_by_products(key: &LRKey) -> u64 {
    if key.trivially_zero() {
        return 0;
    }
    let target = Tableau::superstandard(&key.outer);
    let u = Tableau::superstandard(&key.content);
    let rows = key.outer.len();
    let mut want = Vec::with_capacity(rows);
    for i in 0..rows {
        match key.outer.get(i).checked_sub(key.content.get(i)) {
            Some(d) => want.push(d),
            None => return 0,
        }
    }
    let mut n = 0;
    for_each_tableau_with_content(&key.inner, &want, &mut |t| {
        if t.product(&u).expect("straight shapes") == target {
            n += 1;
        }
    });
    n
}

/// Calls `f` on every semistandard tableau of shape `shape` with exactly `want[i]` entries `i + 1`.
pub fn for_each_tableau_with_content(
    shape: &Partition,
    want: &[usize],
    f: &mut dyn FnMut(&Tableau),
) {
    if shape.weight() != want.iter().sum::<usize>() {
        return;
    }
    let cells = shape.cells();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    let mut left = want.to_vec();
    fn go(
        k: usize,
        cells: &[Cell],
        shape: &Partition,
        rows: &mut Vec<Vec<usize>>,
        left: &mut Vec<usize>,
        f: &mut dyn FnMut(&Tableau),
    ) {
        if k == cells.len() {
            let t = Tableau::new(SkewShape::straight(shape.clone()), rows.clone())
                .expect("semistandard by construction");
            f(&t);
            return;
        }
        let (r, c) = cells[k];
        let lo = if c > 1 { rows[r - 1][c - 2] } else { 1 };
        let lo = if r > 1 {
            lo.max(rows[r - 2][c - 1] + 1)
        } else {
            lo
        };
        for v in lo.max(1)..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            left[v - 1] -= 1;
            rows[r - 1][c - 1] = v;
            go(k + 1, cells, shape, rows, left, f);
            left[v - 1] += 1;
        }
        rows[r - 1][c - 1] = 0;
    }
    go(0, &cells, shape, &mut rows, &mut left, f);
}

/// Number of Zelevinsky images between `nu` and `s`: bijections `f` from the cells of `nu` to
/// those of `s` such that, in either direction, a cell weakly north-west of another is sent
/// before it in reverse numbering.
pub fn count_images(nu: &Partition, s: &SkewShape) -> u64 {
    if nu.weight() != s.size() {
        return 0;
    }
    let src = SkewShape::straight(nu.clone()).reverse_numbering();
    let dst = s.reverse_numbering();
    let n = src.len();
    let nw = |a: Cell, b: Cell| a.0 <= b.0 && a.1 <= b.1;
    // src in reverse numbering: index order is rank order
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        src: &[Cell],
        dst: &[Cell],
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        nw: &dyn Fn(Cell, Cell) -> bool,
    ) -> u64 {
        let n = src.len();
        if k == n {
            return 1;
        }
        let mut total = 0;
        for t in 0..n {
            if used[t] {
                continue;
            }
            let ok = (0..k).all(|j| {
                // j precedes k in src rank order
                let (a, b) = (src[j], src[k]);
                let (fa, fb) = (img[j], t);
                let fwd_ok = if nw(a, b) {
                    fa < fb
                } else if nw(b, a) {
                    fb < fa
                } else {
                    true
                };
                let back_ok = if nw(dst[fa], dst[fb]) {
                    j < k
                } else if nw(dst[fb], dst[fa]) {
                    k < j
                } else {
                    true
                };
                fwd_ok && back_ok
            });
            if !ok {
                continue;
            }
            used[t] = true;
            img[k] = t;
            total += go(k + 1, src, dst, img, used, nw);
            used[t] = false;
        }
        img[k] = usize::MAX;
        total
    }
    go(0, &src, &dst, &mut img, &mut used, &nw)
}

fn expansion_bound(lambda: &Partition, nu: &Partition, bound: Option<&Partition>) -> Partition {
    let rows = lambda.len() + nu.len();
    let parts: Vec<usize> = (0..rows)
        .map(|i| {
            let b = lambda.get(i) + nu.first();
            match bound {
                Some(bd) => b.min(bd.get(i)),
                None => b,
            }
        })
        .collect();
    let mut parts = parts;
    // keep it a partition
    for i in 1..parts.len() {
        parts[i] = parts[i].min(parts[i - 1]);
    }
    Partition::from_sorted(parts)
}

/// `s_λ · s_ν = Σ c^μ_{λν} s_μ`.
pub fn schur_expand(lambda: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    schur_expand_within(lambda, nu, None)
}

/// Like [`schur_expand`], keeping only `μ ⊆ bound`.
pub fn schur_expand_within(
    lambda: &Partition,
    nu: &Partition,
    bound: Option<&Partition>,
) -> BTreeMap<Partition, u64> {
    let upper = expansion_bound(lambda, nu, bound);
    partitions_between(lambda, &upper, lambda.weight() + nu.weight())
        .into_iter()
        .filter_map(|mu| {
            let c = lr(&mu, lambda, nu);
            (c > 0).then_some((mu, c))
        })
        .collect()
}

/// Expansion of `s_{α₁} ⋯ s_{α_m}` restricted to `μ ⊆ bound`.
pub fn expand_product(
    factors: &[Partition],
    bound: Option<&Partition>,
) -> BTreeMap<Partition, BigUint> {
    let mut acc: BTreeMap<Partition, BigUint> = BTreeMap::new();
    acc.insert(Partition::empty(), BigUint::one());
    for f in factors {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (mu, c) in &acc {
            for (nu, d) in schur_expand_within(mu, f, bound) {
                *next.entry(nu).or_default() += c * BigUint::from(d);
            }
        }
        acc = next;
    }
    acc
}

/// `c^ν_{α₁…α_m}` by iterated product expansion.
pub fn multi_lr_iterated(target: &Partition, factors: &[Partition]) -> BigUint {
    if factors.iter().map(|f| f.weight()).sum::<usize>() != target.weight() {
        return BigUint::zero();
    }
    expand_product(factors, Some(target))
        .remove(target)
        .unwrap_or_default()
}

/// `c^ν_{α₁…α_m}` by the nested recursion peeling `α₁` first:
/// `Σ_β c^ν_{α₁β} · c^β_{α₂…α_m}` with `β` inside the bounding box of the remaining factors.
pub fn multi_lr(target: &Partition, factors: &[Partition]) -> BigUint {
    if factors.iter().map(|f| f.weight()).sum::<usize>() != target.weight() {
        return BigUint::zero();
    }
    match factors {
        [] => BigUint::from(u8::from(target.is_empty())),
        [a] => BigUint::from(u8::from(a == target)),
        [a, rest @ ..] => {
            let rows: usize = rest.iter().map(|f| f.len()).sum();
            let cols: usize = rest.iter().map(|f| f.first()).sum();
            let mut bound = Partition::rectangle(rows, cols);
            bound = meet(&bound, target);
            let mut total = BigUint::zero();
            for beta in
                partitions_between(&Partition::empty(), &bound, target.weight() - a.weight())
            {
                let c = lr(target, &beta, a);
                if c > 0 {
                    let inner = multi_lr(&beta, rest);
                    if !inner.is_zero() {
                        total += inner * BigUint::from(c);
                    }
                }
            }
            total
        }
    }
}

fn meet(a: &Partition, b: &Partition) -> Partition {
    let n = a.len().min(b.len());
    Partition::from_sorted((0..n).map(|i| a.get(i).min(b.get(i))).collect())
}

pub fn multi_lr_rectangles(target: &Partition, rects: &[Rectangle]) -> BigUint {
    let f: Vec<Partition> = rects.iter().map(|r| r.as_partition()).collect();
    multi_lr(target, &f)
}

/// A witness `μ'` with `c^{μ'}_{λν} > 0` and `μ' ⊆ μ` when `ν` inscribes in `μ/λ`.
pub fn inscription_witness(nu: &Partition, s: &SkewShape) -> Option<Partition> {
    if nu.weight() > s.size() {
        return None;
    }
    let upper = expansion_bound(s.inner(), nu, Some(s.outer()));
    partitions_between(s.inner(), &upper, s.inner().weight() + nu.weight())
        .into_iter()
        .find(|m| lr(m, s.inner(), nu) > 0)
}

pub fn inscribes(nu: &Partition, s: &SkewShape) -> bool {
    inscription_witness(nu, s).is_some()
}

/// Which reduction the square-flavored inscription uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    /// `ν ↦ ν⁺`
    Plus,
    /// `ν ↦ ν⁻`
    Minus,
}

impl Half {
    pub fn apply(self, nu: &Partition) -> Result<Partition> {
        match self {
            Half::Plus => nu.plus_part(),
            Half::Minus => nu.minus_part(),
        }
    }
}

/// Witness of a symmetric or antisymmetric inscription.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricInscription {
    /// The reduced target was transposed.
    pub transposed_target: bool,
    /// Symmetric `ν₀` inside the center block.
    pub center: Partition,
    /// The reduced center was transposed.
    pub transposed_center: bool,
    /// `γ_m, …, γ_1`, one per lower flank block.
    pub flanks: Vec<Partition>,
}

/// All tuples `(α_1, …, α_m)` with `α_i ⊆ boxes[i]` and `Σ|α_i| = total`.
pub fn partition_tuples(boxes: &[Rectangle], total: usize) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    let caps: Vec<usize> = (0..=boxes.len())
        .map(|i| boxes[i..].iter().map(|b| b.area()).sum())
        .collect();
    let mut cur = Vec::new();
    fn go(
        i: usize,
        left: usize,
        boxes: &[Rectangle],
        caps: &[usize],
        cur: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if i == boxes.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if left > caps[i] {
            return;
        }
        let lo = left.saturating_sub(caps[i + 1]);
        for w in lo..=left.min(boxes[i].area()) {
            for a in enumerate_in_rectangle(boxes[i], Some(w), false) {
                cur.push(a);
                go(i + 1, left - w, boxes, caps, cur, out);
                cur.pop();
            }
        }
    }
    go(0, total, boxes, &caps, &mut cur, &mut out);
    out
}

/// Reduced centers `ν₀^±` for symmetric `ν₀ ⊆ p₀×p₀`, deduplicated by value.
pub(crate) fn reduced_centers(p0: usize, half: Half) -> Vec<(Partition, Partition)> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let syms = match Rectangle::square(p0) {
        Ok(r) => enumerate_in_rectangle(r, None, true),
        Err(_) => vec![Partition::empty()],
    };
    for n0 in syms {
        let red = half.apply(&n0).expect("symmetric");
        if seen.insert(red.clone()) {
            out.push((n0, red));
        }
    }
    out
}

/// Square-flavored inscription of symmetric `ν` in a symmetric skew.
pub fn inscribes_half(
    nu: &Partition,
    s: &SkewShape,
    half: Half,
) -> Result<Option<SymmetricInscription>> {
    if !nu.is_symmetric() {
        return Err(Error::ShapeNotSymmetric);
    }
    let layout = SymmetricLayout::of(s).ok_or(Error::ShapeNotSymmetric)?;
    let tau0 = half.apply(nu)?;
    let centers = reduced_centers(layout.center, half);
    for transposed_target in [false, true] {
        let tau = if transposed_target {
            tau0.conjugate()
        } else {
            tau0.clone()
        };
        for transposed_center in [false, true] {
            for (n0, red) in &centers {
                let c = if transposed_center {
                    red.conjugate()
                } else {
                    red.clone()
                };
                if !tau.contains(&c) {
                    continue;
                }
                for gammas in partition_tuples(&layout.lower, tau.weight() - c.weight()) {
                    let mut factors = vec![c.clone()];
                    factors.extend(gammas.iter().cloned());
                    if !multi_lr(&tau, &factors).is_zero() {
                        return Ok(Some(SymmetricInscription {
                            transposed_target,
                            center: n0.clone(),
                            transposed_center,
                            flanks: gammas,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn inscribes_symmetric(nu: &Partition, s: &SkewShape) -> Result<Option<SymmetricInscription>> {
    inscribes_half(nu, s, Half::Plus)
}

pub fn inscribes_antisymmetric(
    nu: &Partition,
    s: &SkewShape,
) -> Result<Option<SymmetricInscription>> {
    inscribes_half(nu, s, Half::Minus)
}
