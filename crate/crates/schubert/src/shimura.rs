//! Compatible pairs `(λ, μ)` and the restriction, vanishing and holomorphy criteria built on them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::cohomology::LeviShape;
use crate::error::{Error, ParseError, Result};
use crate::lr::{
    self, inscribes, inscription_witness, multi_lr, multi_lr_rectangles, partition_tuples, Half,
    SymmetricInscription,
};
use crate::partition::{enumerate_in_rectangle, Partition, Rectangle};
use crate::skewshape::{RectangleChain, SkewShape, SymmetricLayout};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Unitary,
    Symplectic,
    Orthogonal,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Unitary => "unitary",
            Flavor::Symplectic => "symplectic",
            Flavor::Orthogonal => "orthogonal",
        })
    }
}

impl FromStr for Flavor {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        match s {
            "unitary" | "u" => Ok(Flavor::Unitary),
            "symplectic" | "gsp" | "sp" => Ok(Flavor::Symplectic),
            "orthogonal" | "ostar" | "o" => Ok(Flavor::Orthogonal),
            _ => Err(ParseError(format!("unknown flavor {s:?}"))),
        }
    }
}

/// `(λ, μ)` with `λ ⊆ μ ⊆ ambient` and `μ/λ` a corner-contact union of rectangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatiblePair {
    lambda: Partition,
    mu: Partition,
    ambient: Rectangle,
    chain: RectangleChain,
    flavor: Flavor,
}

impl CompatiblePair {
    pub fn new(
        lambda: Partition,
        mu: Partition,
        ambient: Rectangle,
        flavor: Flavor,
    ) -> Result<Self> {
        if flavor != Flavor::Unitary {
            if !ambient.is_square() {
                return Err(Error::AmbientNotSquare(ambient.to_string()));
            }
            if !lambda.is_symmetric() || !mu.is_symmetric() {
                return Err(Error::ShapeNotSymmetric);
            }
        }
        let not_compatible = || Error::NotCompatible(format!("{mu}/{lambda}"), ambient.to_string());
        if !mu.contains(&lambda) || !mu.fits_in(ambient) {
            return Err(not_compatible());
        }
        let skew = SkewShape::new(mu.clone(), lambda.clone())?;
        let chain = skew.rectangle_decomposition().ok_or_else(not_compatible)?;
        Ok(CompatiblePair {
            lambda,
            mu,
            ambient,
            chain,
            flavor,
        })
    }

    pub fn unitary(lambda: Partition, mu: Partition, ambient: Rectangle) -> Result<Self> {
        CompatiblePair::new(lambda, mu, ambient, Flavor::Unitary)
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn ambient(&self) -> Rectangle {
        self.ambient
    }

    pub fn chain(&self) -> &RectangleChain {
        &self.chain
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn skew(&self) -> SkewShape {
        SkewShape::new(self.mu.clone(), self.lambda.clone()).expect("validated")
    }

    /// `μ̂`, the complement of `μ` in the ambient.
    pub fn mu_hat(&self) -> Partition {
        self.mu.complement(self.ambient).expect("validated")
    }

    /// `(∅, p×q)`.
    pub fn is_trivial(&self) -> bool {
        self.lambda.is_empty() && self.mu == self.ambient.as_partition()
    }

    /// `(μ̂, λ̂)`: the same blocks rotated by 180°, with the bidegree swapped.
    pub fn conjugate_pair(&self) -> CompatiblePair {
        let lambda = self.mu_hat();
        let mu = self.lambda.complement(self.ambient).expect("validated");
        CompatiblePair::new(lambda, mu, self.ambient, self.flavor)
            .expect("rotation preserves compatibility")
    }

    pub fn with_flavor(&self, flavor: Flavor) -> Result<CompatiblePair> {
        CompatiblePair::new(self.lambda.clone(), self.mu.clone(), self.ambient, flavor)
    }
}

impl fmt::Display for CompatiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {}) in {} [{}]",
            self.lambda, self.mu, self.ambient, self.flavor
        )
    }
}

/// All compatible pairs of the flavor, optionally with a fixed bidegree; ordered by `(λ, μ)`.
pub fn enumerate_pairs(
    ambient: Rectangle,
    flavor: Flavor,
    bidegree: Option<(usize, usize)>,
) -> Vec<CompatiblePair> {
    if flavor != Flavor::Unitary && !ambient.is_square() {
        return Vec::new();
    }
    let symmetric = flavor != Flavor::Unitary;
    let shapes = enumerate_in_rectangle(ambient, None, symmetric);
    let mut out = Vec::new();
    for lambda in &shapes {
        for mu in &shapes {
            if !mu.contains(lambda) {
                continue;
            }
            if let Ok(pair) = CompatiblePair::new(lambda.clone(), mu.clone(), ambient, flavor) {
                if bidegree.is_none_or(|b| vz_bidegree(&pair) == b) {
                    out.push(pair);
                }
            }
        }
    }
    out
}

/// `(|λ|, |μ̂|)`, `(|λ⁺|, |μ̂⁺|)` or `(|λ⁻|, |μ̂⁻|)` according to the flavor.
pub fn vz_bidegree(pair: &CompatiblePair) -> (usize, usize) {
    let hat = pair.mu_hat();
    match pair.flavor {
        Flavor::Unitary => (pair.lambda.weight(), hat.weight()),
        Flavor::Symplectic => (plus_weight(&pair.lambda), plus_weight(&hat)),
        Flavor::Orthogonal => (minus_weight(&pair.lambda), minus_weight(&hat)),
    }
}

fn plus_weight(p: &Partition) -> usize {
    p.plus_part().expect("symmetric").weight()
}

fn minus_weight(p: &Partition) -> usize {
    p.minus_part().expect("symmetric").weight()
}

/// Unitary pairs: the chain blocks. Square flavors: diagonal block as center plus upper flanks.
pub fn levi_shape(pair: &CompatiblePair) -> LeviShape {
    match pair.flavor {
        Flavor::Unitary => LeviShape::unitary(pair.chain.blocks.clone()),
        _ => {
            let layout = SymmetricLayout::of(&pair.skew()).expect("symmetric pairs have a layout");
            LeviShape {
                rects: layout.upper,
                center: Some(layout.center),
            }
        }
    }
}

/// One summand `E^{λ,μ}_{ν₁…ν_m}` of the cohomology attached to a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VZComponent {
    pub pair: CompatiblePair,
    /// Unitary: `ν_k ⊆ p_k×q_k`. Square flavors: symmetric `ν₀` first, then `ν_k ⊆ a_k×b_k`.
    pub multiplicity_index: Vec<Partition>,
}

impl VZComponent {
    /// `(i, j)` of the bidegree: the pair's bidegree shifted by the multiplicity degree on both sides.
    pub fn bidegree(&self) -> (usize, usize) {
        let (i, j) = vz_bidegree(&self.pair);
        let extra: usize = match self.pair.flavor {
            Flavor::Unitary => self.multiplicity_index.iter().map(|n| n.weight()).sum(),
            Flavor::Symplectic => {
                plus_weight(&self.multiplicity_index[0])
                    + self.multiplicity_index[1..]
                        .iter()
                        .map(|n| n.weight())
                        .sum::<usize>()
            }
            Flavor::Orthogonal => {
                minus_weight(&self.multiplicity_index[0])
                    + self.multiplicity_index[1..]
                        .iter()
                        .map(|n| n.weight())
                        .sum::<usize>()
            }
        };
        (i + extra, j + extra)
    }
}

/// All components of a pair; for the orthogonal flavor `ν₀` runs over distinct `ν₀⁻`.
pub fn vz_components(pair: &CompatiblePair) -> Vec<VZComponent> {
    let levi = levi_shape(pair);
    let cap: usize = levi.rects.iter().map(|r| r.area()).sum();
    let mut flanks: Vec<Vec<Partition>> = Vec::new();
    for w in 0..=cap {
        flanks.extend(partition_tuples(&levi.rects, w));
    }
    let centers: Vec<Partition> = match (pair.flavor, levi.center) {
        (Flavor::Unitary, _) => vec![],
        (Flavor::Symplectic, Some(p0)) => lr::reduced_centers(p0, Half::Plus)
            .into_iter()
            .map(|c| c.0)
            .collect(),
        (Flavor::Orthogonal, Some(p0)) => lr::reduced_centers(p0, Half::Minus)
            .into_iter()
            .map(|c| c.0)
            .collect(),
        _ => unreachable!("square flavors carry a center"),
    };
    let mut out = Vec::new();
    if pair.flavor == Flavor::Unitary {
        for f in flanks {
            out.push(VZComponent {
                pair: pair.clone(),
                multiplicity_index: f,
            });
        }
    } else {
        for c in &centers {
            for f in &flanks {
                let mut idx = vec![c.clone()];
                idx.extend(f.iter().cloned());
                out.push(VZComponent {
                    pair: pair.clone(),
                    multiplicity_index: idx,
                });
            }
        }
    }
    out
}

/// Number of components in each bidegree, over all pairs of the ambient.
pub fn hodge_skeleton(ambient: Rectangle, flavor: Flavor) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    for pair in enumerate_pairs(ambient, flavor, None) {
        for comp in vz_components(&pair) {
            *out.entry(comp.bidegree()).or_insert(0) += 1;
        }
    }
    out
}

/// Evidence that a Chern class acts non-trivially.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChernWitness {
    /// `μ'` with `c^{μ'}_{λν} > 0`, `μ' ⊆ μ`.
    Plain(Partition),
    Symmetric(SymmetricInscription),
}

/// Whether `η(C_ν)` acts non-trivially on the strongly primitive classes of the pair.
pub fn chern_action(nu: &Partition, pair: &CompatiblePair) -> Result<Option<ChernWitness>> {
    let s = pair.skew();
    match pair.flavor {
        Flavor::Unitary => Ok(inscription_witness(nu, &s).map(ChernWitness::Plain)),
        Flavor::Symplectic => Ok(lr::inscribes_symmetric(nu, &s)?.map(ChernWitness::Symmetric)),
        Flavor::Orthogonal => Ok(lr::inscribes_antisymmetric(nu, &s)?.map(ChernWitness::Symmetric)),
    }
}

pub fn chern_action_nonzero(nu: &Partition, pair: &CompatiblePair) -> Result<bool> {
    Ok(chern_action(nu, pair)?.is_some())
}

fn unitary_levi_check(levi: &LeviShape, ambient: Rectangle) -> Result<()> {
    if levi.center.is_some() || !levi.fits(ambient) {
        return Err(Error::LeviDoesNotFit {
            levi: levi.to_string(),
            ambient: ambient.to_string(),
        });
    }
    Ok(())
}

/// A witness `ν ⊆ p×q` with `c^ν_{levi} > 0` and `ν̂` inscribing in `μ/λ`, if any.
pub fn injectivity_unitary(pair: &CompatiblePair, levi: &LeviShape) -> Result<Option<Partition>> {
    unitary_levi_check(levi, pair.ambient)?;
    let d: usize = levi.rects.iter().map(|r| r.area()).sum();
    let s = pair.skew();
    for nu in enumerate_in_rectangle(pair.ambient, Some(d), false) {
        if multi_lr_rectangles(&nu, &levi.rects).is_zero() {
            continue;
        }
        if inscribes(&nu.complement(pair.ambient)?, &s) {
            return Ok(Some(nu));
        }
    }
    Ok(None)
}

/// `(r, s)` indexing the holomorphic-type pair `(λ(r,s), p×q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HolomorphicParam {
    pub r: usize,
    pub s: usize,
}

impl HolomorphicParam {
    /// `λ(r,s) = (q^r, s^{p-r})`.
    pub fn fat_hook(&self, ambient: Rectangle) -> Result<Partition> {
        if self.r > ambient.rows || self.s > ambient.cols {
            return Err(Error::InvalidArgument(format!(
                "(r,s)=({},{}) outside {ambient}",
                self.r, self.s
            )));
        }
        let mut parts = vec![ambient.cols; self.r];
        parts.extend(std::iter::repeat_n(self.s, ambient.rows - self.r));
        Ok(Partition::new(parts).expect("decreasing"))
    }

    /// The pair `(λ(r,s), p×q)`.
    pub fn pair(&self, ambient: Rectangle) -> Result<CompatiblePair> {
        CompatiblePair::unitary(self.fat_hook(ambient)?, ambient.as_partition(), ambient)
    }
}

/// Closed form: `(Σp_i = p, r = 0, s ≤ min q_i)` or `(Σq_i = q, s = 0, r ≤ min p_i)`.
pub fn injectivity_holomorphic_u(
    param: HolomorphicParam,
    levi: &LeviShape,
    ambient: Rectangle,
) -> bool {
    let sp: usize = levi.rects.iter().map(|r| r.rows).sum();
    let sq: usize = levi.rects.iter().map(|r| r.cols).sum();
    let min_q = levi.rects.iter().map(|r| r.cols).min().unwrap_or(0);
    let min_p = levi.rects.iter().map(|r| r.rows).min().unwrap_or(0);
    (sp == ambient.rows && param.r == 0 && param.s <= min_q)
        || (sq == ambient.cols && param.s == 0 && param.r <= min_p)
}

/// Injectivity of the restriction to `GSp_p` inside a square ambient: the staircase
/// `(p-1, …, 1)` must inscribe in `μ/λ`.
pub fn injectivity_gsp(pair: &CompatiblePair) -> Result<bool> {
    if !pair.ambient.is_square() {
        return Err(Error::AmbientNotSquare(pair.ambient.to_string()));
    }
    let p = pair.ambient.rows;
    Ok(inscribes(&Partition::staircase(p - 1), &pair.skew()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GspHolomorphic {
    pub injective: bool,
    /// `r = 0`: the degree-zero class, outside the range where the criterion applies.
    pub constant_class: bool,
    /// `rp - r(r-1)/2`.
    pub degree: usize,
}

/// Holomorphic classes of `GSp_p`: injective iff `Σp_i = p` and `r = 1`.
pub fn gsp_holomorphic(r: usize, p: usize, levi_rows: &[usize]) -> Result<GspHolomorphic> {
    if r > p {
        return Err(Error::InvalidArgument(format!("r={r} exceeds p={p}")));
    }
    let full = levi_rows.iter().sum::<usize>() == p;
    Ok(GspHolomorphic {
        injective: full && r == 1,
        constant_class: r == 0,
        degree: r * p - r * r.saturating_sub(1) / 2,
    })
}

/// Vanishing of the Künneth component: `c^λ_{λ₁…λ_m} · c^{μ̂}_{μ̂₁…μ̂_m} = 0`.
pub fn kunneth_vanishing(pair: &CompatiblePair, factor_pairs: &[CompatiblePair]) -> Result<bool> {
    let rows: usize = factor_pairs.iter().map(|f| f.ambient.rows).sum();
    let cols: usize = factor_pairs.iter().map(|f| f.ambient.cols).sum();
    if rows > pair.ambient.rows || cols > pair.ambient.cols {
        let levi: Vec<String> = factor_pairs.iter().map(|f| f.ambient.to_string()).collect();
        return Err(Error::LeviDoesNotFit {
            levi: levi.join(","),
            ambient: pair.ambient.to_string(),
        });
    }
    let lambdas: Vec<Partition> = factor_pairs.iter().map(|f| f.lambda.clone()).collect();
    let hats: Vec<Partition> = factor_pairs.iter().map(|f| f.mu_hat()).collect();
    let a = multi_lr(&pair.lambda, &lambdas);
    if a.is_zero() {
        return Ok(true);
    }
    Ok(multi_lr(&pair.mu_hat(), &hats).is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    P,
    Q,
}

impl FromStr for Side {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        match s {
            "P" | "p" => Ok(Side::P),
            "Q" | "q" => Ok(Side::Q),
            _ => Err(ParseError(format!("side must be P or Q, got {s:?}"))),
        }
    }
}

/// Side Q: `Σq_i = q`, every `p_i ≥ a`, `|λ| + |μ̂| < pq - aq`. Side P exchanges the roles.
pub fn vanishing_criterion(pair: &CompatiblePair, a: usize, side: Side) -> Result<bool> {
    if pair.is_trivial() {
        return Err(Error::TrivialPairExcluded);
    }
    if a == 0 {
        return Err(Error::InvalidArgument("a must be at least 1".into()));
    }
    let (p, q) = (pair.ambient.rows, pair.ambient.cols);
    let blocks = &pair.chain.blocks;
    let deg = pair.lambda.weight() + pair.mu_hat().weight();
    Ok(match side {
        Side::Q => {
            pair.chain.total_cols() == q
                && blocks.iter().all(|b| b.rows >= a)
                && deg + a * q < p * q
        }
        Side::P => {
            pair.chain.total_rows() == p
                && blocks.iter().all(|b| b.cols >= a)
                && deg + a * p < p * q
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Structure {
    FullP,
    FullQ,
    SquareStaircase,
    Other,
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Structure::FullP => "FullP",
            Structure::FullQ => "FullQ",
            Structure::SquareStaircase => "SquareStaircase",
            Structure::Other => "Other",
        })
    }
}

/// Degrees strictly below this bound only see the three special structures.
pub fn low_degree_bound(ambient: Rectangle) -> usize {
    let (p, q) = (ambient.rows, ambient.cols);
    if p == q {
        3 * p - 2
    } else {
        p + q - 1
    }
}

pub fn low_degree_structure(pair: &CompatiblePair) -> Structure {
    let (p, q) = (pair.ambient.rows, pair.ambient.cols);
    let chain = &pair.chain;
    if chain.total_rows() == p {
        Structure::FullP
    } else if chain.total_cols() == q {
        Structure::FullQ
    } else if p == q
        && chain.len() == 1
        && chain.blocks[0].rows == p - 1
        && chain.blocks[0].cols == p - 1
    {
        Structure::SquareStaircase
    } else {
        Structure::Other
    }
}

/// A sub-Shimura variety whose stable restriction is injective on a given pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuggestedSubvariety {
    Unitary { p: usize, q: usize },
    GSp { p: usize },
}

impl fmt::Display for SuggestedSubvariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuggestedSubvariety::Unitary { p, q } => write!(f, "U({p},{q})"),
            SuggestedSubvariety::GSp { p } => write!(f, "GSp({p})"),
        }
    }
}

fn unitary_block(p: usize, q: usize) -> LeviShape {
    LeviShape::unitary(Rectangle::new(p, q).into_iter().collect())
}

/// Every pair of degree `≤ max_degree` with its suggested subvariety, each re-checked.
pub fn arthur_cover(
    ambient: Rectangle,
    max_degree: usize,
) -> Result<Vec<(CompatiblePair, SuggestedSubvariety)>> {
    let bound = low_degree_bound(ambient);
    if max_degree >= bound {
        return Err(Error::BoundExceeded { max_degree, bound });
    }
    let (p, q) = (ambient.rows, ambient.cols);
    let mut out = Vec::new();
    for pair in enumerate_pairs(ambient, Flavor::Unitary, None) {
        let (i, j) = vz_bidegree(&pair);
        if i + j > max_degree {
            continue;
        }
        let (suggestion, ok) = match low_degree_structure(&pair) {
            Structure::FullP => (
                SuggestedSubvariety::Unitary { p, q: q - 1 },
                injectivity_unitary(&pair, &unitary_block(p, q - 1))?.is_some(),
            ),
            Structure::FullQ => (
                SuggestedSubvariety::Unitary { p: p - 1, q },
                injectivity_unitary(&pair, &unitary_block(p - 1, q))?.is_some(),
            ),
            Structure::SquareStaircase => (SuggestedSubvariety::GSp { p }, injectivity_gsp(&pair)?),
            Structure::Other => {
                return Err(Error::InvalidArgument(format!(
                    "pair {pair} of degree {} has no low-degree structure",
                    i + j
                )))
            }
        };
        if !ok {
            return Err(Error::InvalidArgument(format!(
                "suggestion {suggestion} for {pair} fails its criterion"
            )));
        }
        out.push((pair, suggestion));
    }
    Ok(out)
}

/// `I_l = {(a,b) : 1 ≤ a ≤ p, 1 ≤ b ≤ q, pq - ab = l}`, or `{(0,0)}` for `l = pq`.
pub fn partha_decomposition(ambient: Rectangle, l: usize) -> Vec<(usize, usize)> {
    let (p, q) = (ambient.rows, ambient.cols);
    if l == p * q {
        return vec![(0, 0)];
    }
    if l > p * q {
        return Vec::new();
    }
    let target = p * q - l;
    (1..=p)
        .filter(|a| target.is_multiple_of(*a) && (1..=q).contains(&(target / a)))
        .map(|a| (a, target / a))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OstarFamily {
    R,
    S,
}

impl fmt::Display for OstarFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OstarFamily::R => "R",
            OstarFamily::S => "S",
        })
    }
}

/// A holomorphic orthogonal component together with the first entry describing the same subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OstarComponent {
    pub family: OstarFamily,
    pub param: usize,
    pub degree: usize,
    pub lambda: Partition,
    pub mu: Partition,
    pub same_as: (OstarFamily, usize),
}

/// Family R: `μ = p×p`, `λ = (p^r, r^{p-r})`. Family S: `μ = (p^{p-1}, p-1)`,
/// `λ = (p^s, (p-1)^{p-1-s}, s)`. Two entries coincide when their `(λ⁻, μ⁻)` agree.
pub fn ostar_holomorphic_components(p: usize) -> Result<Vec<OstarComponent>> {
    if p < 2 {
        return Err(Error::InvalidArgument("p must be at least 2".into()));
    }
    let mut raw: Vec<(OstarFamily, usize, Partition, Partition, usize)> = Vec::new();
    let full = Partition::rectangle(p, p);
    for r in 0..=p {
        let mut parts = vec![p; r];
        parts.extend(std::iter::repeat_n(r, p - r));
        raw.push((
            OstarFamily::R,
            r,
            Partition::new(parts).expect("decreasing"),
            full.clone(),
            r * p - r * (r + 1) / 2,
        ));
    }
    let mut mu_s = vec![p; p - 1];
    mu_s.push(p - 1);
    let mu_s = Partition::new(mu_s).expect("decreasing");
    for s in 0..p {
        let mut parts = vec![p; s];
        parts.extend(std::iter::repeat_n(p - 1, p - 1 - s));
        parts.push(s);
        raw.push((
            OstarFamily::S,
            s,
            Partition::new(parts).expect("decreasing"),
            mu_s.clone(),
            (p - 1) * (p - 2) / 2 + s,
        ));
    }
    let mut out: Vec<OstarComponent> = Vec::new();
    let mut seen: Vec<((Partition, Partition), (OstarFamily, usize))> = Vec::new();
    for (family, param, lambda, mu, degree) in raw {
        let key = (lambda.minus_part()?, mu.minus_part()?);
        let same_as = match seen.iter().find(|(k, _)| *k == key) {
            Some((_, first)) => *first,
            None => {
                seen.push((key, (family, param)));
                (family, param)
            }
        };
        out.push(OstarComponent {
            family,
            param,
            degree,
            lambda,
            mu,
            same_as,
        });
    }
    Ok(out)
}
