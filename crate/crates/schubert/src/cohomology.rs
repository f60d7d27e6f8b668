//! Schubert-basis model of the cohomology of `G_{p,q}` and its isotropic analogues.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, ParseError, Result};
use crate::lr::{multi_lr, multi_lr_rectangles, partition_tuples, schur_expand_within};
use crate::partition::{enumerate_in_rectangle, Partition, Rectangle};

/// An integer combination of Schubert classes `C_ν`, `ν ⊆ ambient`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CohomClass {
    ambient: Rectangle,
    terms: BTreeMap<Partition, BigInt>,
}

fn out_of_box(nu: &Partition, rect: Rectangle) -> Error {
    Error::ShapeOutOfBox {
        partition: nu.to_string(),
        rect: rect.to_string(),
    }
}

fn mismatch(a: Rectangle, b: Rectangle) -> Error {
    Error::AmbientMismatch(a.to_string(), b.to_string())
}

impl CohomClass {
    pub fn zero(ambient: Rectangle) -> Self {
        CohomClass {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ambient: Rectangle) -> Self {
        CohomClass::schubert(Partition::empty(), ambient).expect("empty partition fits")
    }

    pub fn schubert(nu: Partition, ambient: Rectangle) -> Result<Self> {
        CohomClass::from_terms(ambient, [(nu, BigInt::one())])
    }

    pub fn from_terms(
        ambient: Rectangle,
        terms: impl IntoIterator<Item = (Partition, BigInt)>,
    ) -> Result<Self> {
        let mut c = CohomClass::zero(ambient);
        for (nu, k) in terms {
            if !nu.fits_in(ambient) {
                return Err(out_of_box(&nu, ambient));
            }
            c.add_term(nu, k);
        }
        Ok(c)
    }

    fn add_term(&mut self, nu: Partition, k: BigInt) {
        let e = self.terms.entry(nu).or_default();
        *e += k;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn ambient(&self) -> Rectangle {
        self.ambient
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, nu: &Partition) -> BigInt {
        self.terms.get(nu).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree `|ν|` shared by all terms; `None` for zero or inhomogeneous classes.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|k| k.weight());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add(&self, other: &CohomClass) -> Result<CohomClass> {
        if self.ambient != other.ambient {
            return Err(mismatch(self.ambient, other.ambient));
        }
        let mut c = self.clone();
        for (nu, k) in &other.terms {
            c.add_term(nu.clone(), k.clone());
        }
        Ok(c)
    }

    pub fn scale(&self, k: &BigInt) -> CohomClass {
        if k.is_zero() {
            return CohomClass::zero(self.ambient);
        }
        let terms = self
            .terms
            .iter()
            .map(|(nu, c)| (nu.clone(), c * k))
            .collect();
        CohomClass {
            ambient: self.ambient,
            terms,
        }
    }

    /// Cup product; partitions leaving the ambient rectangle are dropped.
    pub fn cup(&self, other: &CohomClass) -> Result<CohomClass> {
        if self.ambient != other.ambient {
            return Err(mismatch(self.ambient, other.ambient));
        }
        let bound = self.ambient.as_partition();
        let mut acc = CohomClass::zero(self.ambient);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                for (mu, c) in schur_expand_within(a, b, Some(&bound)) {
                    acc.add_term(mu, x * y * BigInt::from(c));
                }
            }
        }
        Ok(acc)
    }

    /// Coefficient of the top class `C_{p×q}` in the cup product.
    pub fn poincare_pair(&self, other: &CohomClass) -> Result<BigInt> {
        Ok(self.cup(other)?.coefficient(&self.ambient.as_partition()))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(nu, k)| json!({"partition": nu.to_string(), "coeff": bigint_json(k)}))
            .collect();
        json!({"ambient": self.ambient.to_string(), "terms": terms})
    }

    pub fn from_json(v: &Value) -> std::result::Result<Self, ParseError> {
        let bad = |m: &str| ParseError(format!("bad class document: {m}"));
        let ambient: Rectangle = v
            .get("ambient")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("ambient"))?
            .parse()?;
        let mut terms = Vec::new();
        for t in v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("terms"))?
        {
            let nu: Partition = t
                .get("partition")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("partition"))?
                .parse()?;
            let k = json_bigint(t.get("coeff").ok_or_else(|| bad("coeff"))?)?;
            terms.push((nu, k));
        }
        CohomClass::from_terms(ambient, terms).map_err(|e| ParseError(e.to_string()))
    }
}

impl fmt::Display for CohomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self
            .terms
            .iter()
            .map(|(nu, k)| format!("{k}*C({nu})"))
            .collect();
        f.write_str(&s.join(" + "))
    }
}

pub(crate) fn bigint_json(k: &BigInt) -> Value {
    Value::Number(serde_json::Number::from_str(&k.to_string()).expect("integer literal"))
}

pub(crate) fn biguint_json(k: &BigUint) -> Value {
    Value::Number(serde_json::Number::from_str(&k.to_string()).expect("integer literal"))
}

fn json_bigint(v: &Value) -> std::result::Result<BigInt, ParseError> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse()
            .map_err(|_| ParseError(format!("non-integer coefficient {n}"))),
        Value::String(s) => s
            .parse()
            .map_err(|_| ParseError(format!("non-integer coefficient {s}"))),
        _ => Err(ParseError("coefficient must be an integer".into())),
    }
}

/// `C_{(1^k)}`, the k-th Chern class of the tautological bundle.
pub fn chern_t(k: usize, ambient: Rectangle) -> Result<CohomClass> {
    if k == 0 || k > ambient.rows {
        return Err(Error::DegreeOutOfRange {
            k,
            max: ambient.rows,
        });
    }
    CohomClass::schubert(Partition::rectangle(k, 1), ambient)
}

/// `C_{(k)}`, the k-th Chern class of the quotient bundle.
pub fn chern_q(k: usize, ambient: Rectangle) -> Result<CohomClass> {
    if k == 0 || k > ambient.cols {
        return Err(Error::DegreeOutOfRange {
            k,
            max: ambient.cols,
        });
    }
    CohomClass::schubert(Partition::rectangle(1, k), ambient)
}

pub fn poincare_pair(x: &CohomClass, y: &CohomClass) -> Result<BigInt> {
    x.poincare_pair(y)
}

/// Levi data: unitary blocks `p_i×q_i` and, for square ambients, an optional center `p₀`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LeviShape {
    pub rects: Vec<Rectangle>,
    pub center: Option<usize>,
}

impl LeviShape {
    pub fn unitary(rects: Vec<Rectangle>) -> Self {
        LeviShape {
            rects,
            center: None,
        }
    }

    pub fn total_rows(&self) -> usize {
        self.rects.iter().map(|r| r.rows).sum::<usize>() + self.center.unwrap_or(0)
    }

    pub fn total_cols(&self) -> usize {
        self.rects.iter().map(|r| r.cols).sum::<usize>() + self.center.unwrap_or(0)
    }

    pub fn fits(&self, ambient: Rectangle) -> bool {
        self.total_rows() <= ambient.rows && self.total_cols() <= ambient.cols
    }

    fn require_unitary_fit(&self, ambient: Rectangle) -> Result<()> {
        if self.center.is_some() || !self.fits(ambient) {
            return Err(Error::LeviDoesNotFit {
                levi: self.to_string(),
                ambient: ambient.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for LeviShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if let Some(c) = self.center {
            parts.push(format!("center {c}"));
        }
        parts.extend(self.rects.iter().map(|r| r.to_string()));
        f.write_str(&parts.join(","))
    }
}

/// Sum of pure tensors `C_{α₁} ⊗ … ⊗ C_{α_m}` over a product of Grassmannians.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorClass {
    factors: Vec<Rectangle>,
    terms: BTreeMap<Vec<Partition>, BigInt>,
}

impl TensorClass {
    pub fn zero(factors: Vec<Rectangle>) -> Self {
        TensorClass {
            factors,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(factors: Vec<Rectangle>) -> Self {
        let key = vec![Partition::empty(); factors.len()];
        let mut t = TensorClass::zero(factors);
        t.terms.insert(key, BigInt::one());
        t
    }

    pub fn factors(&self) -> &[Rectangle] {
        &self.factors
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Partition>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: Vec<Partition>, k: BigInt) {
        let e = self.terms.entry(key).or_default();
        *e += k;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn degree(&self) -> Option<usize> {
        let mut it = self
            .terms
            .keys()
            .map(|k| k.iter().map(|p| p.weight()).sum::<usize>());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add(&self, other: &TensorClass) -> Result<TensorClass> {
        if self.factors != other.factors {
            return Err(Error::AmbientMismatch(
                format!("{:?}", self.factors),
                format!("{:?}", other.factors),
            ));
        }
        let mut t = self.clone();
        for (k, v) in &other.terms {
            t.add_term(k.clone(), v.clone());
        }
        Ok(t)
    }

    /// Factorwise cup product.
    pub fn mul(&self, other: &TensorClass) -> Result<TensorClass> {
        if self.factors != other.factors {
            return Err(Error::AmbientMismatch(
                format!("{:?}", self.factors),
                format!("{:?}", other.factors),
            ));
        }
        let mut acc = TensorClass::zero(self.factors.clone());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut partial: Vec<(Vec<Partition>, BigInt)> = vec![(Vec::new(), x * y)];
                for (i, rect) in self.factors.iter().enumerate() {
                    let bound = rect.as_partition();
                    let exp = schur_expand_within(&a[i], &b[i], Some(&bound));
                    let mut next = Vec::new();
                    for (key, k) in &partial {
                        for (mu, c) in &exp {
                            let mut key = key.clone();
                            key.push(mu.clone());
                            next.push((key, k * BigInt::from(*c)));
                        }
                    }
                    partial = next;
                }
                for (key, k) in partial {
                    acc.add_term(key, k);
                }
            }
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        let factors: Vec<String> = self.factors.iter().map(|r| r.to_string()).collect();
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(key, k)| {
                let parts: Vec<String> = key.iter().map(|p| p.to_string()).collect();
                json!({"partitions": parts, "coeff": bigint_json(k)})
            })
            .collect();
        json!({"factors": factors, "terms": terms})
    }
}

/// `res(C_ν) = Σ c^ν_{α₁…α_m} C_{α₁}⊗…⊗C_{α_m}`, `α_i ⊆ p_i×q_i`, extended linearly.
pub fn restrict_levi(x: &CohomClass, levi: &LeviShape) -> Result<TensorClass> {
    levi.require_unitary_fit(x.ambient)?;
    let mut out = TensorClass::zero(levi.rects.clone());
    for (nu, k) in &x.terms {
        for alphas in partition_tuples(&levi.rects, nu.weight()) {
            let c = multi_lr(nu, &alphas);
            if !c.is_zero() {
                out.add_term(alphas, k * BigInt::from(c));
            }
        }
    }
    Ok(out)
}

/// `Σ_ν c^ν_{p₁×q₁…p_m×q_m} C_ν̂`, the class dual to the sub-Grassmannian of the Levi.
pub fn dual_class_unitary(levi: &LeviShape, ambient: Rectangle) -> Result<CohomClass> {
    levi.require_unitary_fit(ambient)?;
    let d: usize = levi.rects.iter().map(|r| r.area()).sum();
    let mut out = CohomClass::zero(ambient);
    for nu in enumerate_in_rectangle(ambient, Some(d), false) {
        let c = multi_lr_rectangles(&nu, &levi.rects);
        if !c.is_zero() {
            out.add_term(nu.complement(ambient)?, BigInt::from(c));
        }
    }
    Ok(out)
}

/// `C_{(p-1,…,1)}` in `p×p`.
pub fn dual_class_gsp(p: usize) -> Result<CohomClass> {
    CohomClass::schubert(
        Partition::staircase(p.saturating_sub(1)),
        Rectangle::square(p)?,
    )
}

/// `C_{(p,…,1)}` in `p×p`.
pub fn dual_class_ostar(p: usize) -> Result<CohomClass> {
    CohomClass::schubert(Partition::staircase(p), Rectangle::square(p)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IsotropicFlavor {
    Lagrangian,
    Orthogonal,
}

impl fmt::Display for IsotropicFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsotropicFlavor::Lagrangian => "lagrangian",
            IsotropicFlavor::Orthogonal => "orthogonal",
        })
    }
}

/// A class on the Lagrangian (keys: symmetric `ν ⊆ p×p`) or orthogonal
/// (keys: the strict partitions `ν⁻`) isotropic Grassmannian of rank `p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsotropicClass {
    pub rank: usize,
    pub flavor: IsotropicFlavor,
    terms: BTreeMap<Partition, BigInt>,
}

impl IsotropicClass {
    pub fn zero(rank: usize, flavor: IsotropicFlavor) -> Self {
        IsotropicClass {
            rank,
            flavor,
            terms: BTreeMap::new(),
        }
    }

    /// The basis class with the given key.
    pub fn basis(rank: usize, flavor: IsotropicFlavor, key: Partition) -> Self {
        let mut c = IsotropicClass::zero(rank, flavor);
        c.terms.insert(key, BigInt::one());
        c
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: Partition, k: BigInt) {
        let e = self.terms.entry(key).or_default();
        *e += k;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Degree of a basis key: `|ν⁺|` (Lagrangian) or `|ν⁻|` (orthogonal).
    pub fn key_degree(&self, key: &Partition) -> usize {
        match self.flavor {
            IsotropicFlavor::Lagrangian => key.plus_part().map(|k| k.weight()).unwrap_or(0),
            IsotropicFlavor::Orthogonal => key.weight(),
        }
    }

    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|k| self.key_degree(k));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// A symmetric partition representing each key (orthogonal keys use the representative with no zero arm).
    pub fn symmetric_representative(&self, key: &Partition) -> Partition {
        match self.flavor {
            IsotropicFlavor::Lagrangian => key.clone(),
            IsotropicFlavor::Orthogonal => Partition::symmetric_from_arms(key.parts()),
        }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(nu, k)| json!({"partition": nu.to_string(), "coeff": bigint_json(k)}))
            .collect();
        json!({"rank": self.rank, "flavor": self.flavor.to_string(), "terms": terms})
    }
}

fn square_rank(x: &CohomClass) -> Result<usize> {
    if !x.ambient.is_square() {
        return Err(Error::AmbientNotSquare(x.ambient.to_string()));
    }
    Ok(x.ambient.rows)
}

/// `C^Gr_λ ↦ C_ν` when `λ` or `λ*` equals `ν⁺`, else 0.
pub fn restrict_to_lagrangian(x: &CohomClass) -> Result<IsotropicClass> {
    let p = square_rank(x)?;
    let mut out = IsotropicClass::zero(p, IsotropicFlavor::Lagrangian);
    for (lambda, k) in &x.terms {
        let strict = [lambda.clone(), lambda.conjugate()]
            .into_iter()
            .find(|l| l.is_strict());
        if let Some(kappa) = strict {
            let arms: Vec<usize> = kappa.parts().iter().map(|a| a - 1).collect();
            out.add_term(Partition::symmetric_from_arms(&arms), k.clone());
        }
    }
    Ok(out)
}

/// `C^Gr_λ ↦ C_{ν⁻}` when `λ` or `λ*` equals `ν⁻` for a symmetric `ν ⊆ p×p`, else 0.
pub fn restrict_to_orthogonal(x: &CohomClass) -> Result<IsotropicClass> {
    let p = square_rank(x)?;
    let mut out = IsotropicClass::zero(p, IsotropicFlavor::Orthogonal);
    for (lambda, k) in &x.terms {
        let strict = [lambda.clone(), lambda.conjugate()]
            .into_iter()
            .find(|l| l.is_strict() && l.first() < p);
        if let Some(kappa) = strict {
            out.add_term(kappa, k.clone());
        }
    }
    Ok(out)
}

/// Support of the restriction of `C_ν` to `GS_{p₀} × Π G_{a_i,b_i}`: all `(ν₀, α₁…α_m)`
/// such that `ν₀⁺∗α₁∗…∗α_m` or its variant with `(ν₀⁺)*` is an image of `ν⁺` or `(ν⁺)*`.
pub fn restrict_symplectic_levi_support(
    nu: &Partition,
    levi: &LeviShape,
) -> Result<Vec<(Partition, Vec<Partition>)>> {
    if !nu.is_symmetric() {
        return Err(Error::ShapeNotSymmetric);
    }
    let p0 = levi.center.ok_or_else(|| {
        Error::InvalidArgument("symplectic restriction needs a center block".into())
    })?;
    let tau = nu.plus_part()?;
    let taus = [tau.clone(), tau.conjugate()];
    let centers = match Rectangle::square(p0) {
        Ok(r) => enumerate_in_rectangle(r, None, true),
        Err(_) => vec![Partition::empty()],
    };
    let mut out = Vec::new();
    for n0 in centers {
        let c = n0.plus_part()?;
        if c.weight() > tau.weight() {
            continue;
        }
        let cs = [c.clone(), c.conjugate()];
        for alphas in partition_tuples(&levi.rects, tau.weight() - c.weight()) {
            let hit = taus.iter().any(|t| {
                cs.iter().any(|cc| {
                    let mut f = vec![cc.clone()];
                    f.extend(alphas.iter().cloned());
                    !multi_lr(t, &f).is_zero()
                })
            });
            if hit {
                out.push((n0.clone(), alphas));
            }
        }
    }
    Ok(out)
}
