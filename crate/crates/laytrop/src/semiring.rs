//! Sorting semirings: the layer index arithmetic.
//!
//! A scalar carries a layer drawn from a sorting semiring `L`. Five
//! descriptors are supported:
//!
//! * `trivial`      — L = {1}, plain max-plus;
//! * `super`        — L = {1, inf}, the standard supertropical split
//!   (sums of nonzero layers saturate to `inf`);
//! * `nat`          — L = N with ordinary addition and multiplication;
//! * `trunc:<q>`    — L = [1, q]; results up to q-1 are kept exactly,
//!   anything larger clamps to q;
//! * `doubled:<d>`  — pairs over an inner descriptor, added componentwise
//!   and multiplied by (k,l)(k',l') = (kk'+ll', kl'+lk'), carrying a
//!   negation-like swap symmetry.
//!
//! Layer 0 is reserved for the zero scalar and is never the layer of a
//! nonzero scalar.

use crate::error::{Error, Result};
use crate::rat::Rat;
use std::fmt;
use std::str::FromStr;

/// An element of a sorting semiring (or the reserved zero layer).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SortLayer {
    Fin(u64),
    Inf,
    Pair(Box<SortLayer>, Box<SortLayer>),
}

impl SortLayer {
    pub fn fin(n: u64) -> Self {
        SortLayer::Fin(n)
    }

    pub fn pair(k: SortLayer, l: SortLayer) -> Self {
        SortLayer::Pair(Box::new(k), Box::new(l))
    }
}

impl fmt::Display for SortLayer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SortLayer::Fin(n) => write!(f, "{n}"),
            SortLayer::Inf => write!(f, "inf"),
            SortLayer::Pair(k, l) => write!(f, "({k},{l})"),
        }
    }
}

/// Descriptor of the sorting semiring in use.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SortSemiring {
    Trivial,
    TwoLayer,
    Naturals,
    Truncated(u64),
    Doubled(Box<SortSemiring>),
}

impl SortSemiring {
    pub fn doubled(inner: SortSemiring) -> Self {
        SortSemiring::Doubled(Box::new(inner))
    }

    /// Layer of the multiplicative unit scalar.
    pub fn unit_layer(&self) -> SortLayer {
        match self {
            SortSemiring::Doubled(inner) => {
                SortLayer::pair(inner.unit_layer(), inner.zero_layer())
            }
            _ => SortLayer::Fin(1),
        }
    }

    /// Reserved layer of the zero scalar.
    pub fn zero_layer(&self) -> SortLayer {
        match self {
            SortSemiring::Doubled(inner) => {
                SortLayer::pair(inner.zero_layer(), inner.zero_layer())
            }
            _ => SortLayer::Fin(0),
        }
    }

    pub fn is_zero_layer(&self, k: &SortLayer) -> bool {
        *k == self.zero_layer()
    }

    /// Whether `k` is a well-formed layer for this descriptor.
    /// `allow_zero` admits the reserved zero layer (and, inside a doubled
    /// pair, an all-zero component).
    pub fn valid_layer(&self, k: &SortLayer, allow_zero: bool) -> bool {
        match (self, k) {
            (SortSemiring::Trivial, SortLayer::Fin(0)) => allow_zero,
            (SortSemiring::Trivial, SortLayer::Fin(1)) => true,
            (SortSemiring::TwoLayer, SortLayer::Fin(0)) => allow_zero,
            (SortSemiring::TwoLayer, SortLayer::Fin(1)) | (SortSemiring::TwoLayer, SortLayer::Inf) => true,
            (SortSemiring::Naturals, SortLayer::Fin(0)) => allow_zero,
            (SortSemiring::Naturals, SortLayer::Fin(_)) => true,
            (SortSemiring::Truncated(_), SortLayer::Fin(0)) => allow_zero,
            (SortSemiring::Truncated(q), SortLayer::Fin(n)) => *n >= 1 && n <= q,
            (SortSemiring::Doubled(inner), SortLayer::Pair(a, b)) => {
                let ok = inner.valid_layer(a, true) && inner.valid_layer(b, true);
                let both_zero = inner.is_zero_layer(a) && inner.is_zero_layer(b);
                ok && (allow_zero || !both_zero)
            }
            _ => false,
        }
    }

    fn check_pair(&self, k: &SortLayer, l: &SortLayer) -> Result<()> {
        if !self.valid_layer(k, true) {
            return Err(Error::MismatchedDescriptor(format!(
                "layer {k} is not an element of {self}"
            )));
        }
        if !self.valid_layer(l, true) {
            return Err(Error::MismatchedDescriptor(format!(
                "layer {l} is not an element of {self}"
            )));
        }
        Ok(())
    }

    /// Semiring addition of layers.
    pub fn layer_add(&self, k: &SortLayer, l: &SortLayer) -> Result<SortLayer> {
        self.check_pair(k, l)?;
        Ok(self.add_unchecked(k, l)?)
    }

    fn add_unchecked(&self, k: &SortLayer, l: &SortLayer) -> Result<SortLayer> {
        match self {
            SortSemiring::Trivial => match (k, l) {
                (SortLayer::Fin(a), SortLayer::Fin(b)) => Ok(SortLayer::Fin((*a).max(*b))),
                _ => unreachable!(),
            },
            SortSemiring::TwoLayer => match (k, l) {
                (SortLayer::Fin(0), x) | (x, SortLayer::Fin(0)) => Ok(x.clone()),
                // anything past 1 saturates
                _ => Ok(SortLayer::Inf),
            },
            SortSemiring::Naturals => match (k, l) {
                (SortLayer::Fin(a), SortLayer::Fin(b)) => a
                    .checked_add(*b)
                    .map(SortLayer::Fin)
                    .ok_or(Error::LayerOverflow),
                _ => unreachable!(),
            },
            SortSemiring::Truncated(q) => match (k, l) {
                (SortLayer::Fin(a), SortLayer::Fin(b)) => {
                    let s = a.checked_add(*b).ok_or(Error::LayerOverflow)?;
                    Ok(SortLayer::Fin(if s <= q - 1 { s } else { *q }))
                }
                _ => unreachable!(),
            },
            SortSemiring::Doubled(inner) => match (k, l) {
                (SortLayer::Pair(a, b), SortLayer::Pair(c, d)) => Ok(SortLayer::pair(
                    inner.add_unchecked(a, c)?,
                    inner.add_unchecked(b, d)?,
                )),
                _ => unreachable!(),
            },
        }
    }

    /// Semiring multiplication of layers.
    pub fn layer_mul(&self, k: &SortLayer, l: &SortLayer) -> Result<SortLayer> {
        self.check_pair(k, l)?;
        Ok(self.mul_unchecked(k, l)?)
    }

    fn mul_unchecked(&self, k: &SortLayer, l: &SortLayer) -> Result<SortLayer> {
        match self {
            SortSemiring::Trivial => match (k, l) {
                (SortLayer::Fin(a), SortLayer::Fin(b)) => Ok(SortLayer::Fin(a * b)),
                _ => unreachable!(),
            },
            SortSemiring::TwoLayer => match (k, l) {
                (SortLayer::Fin(0), _) | (_, SortLayer::Fin(0)) => Ok(SortLayer::Fin(0)),
                (SortLayer::Fin(1), x) | (x, SortLayer::Fin(1)) => Ok(x.clone()),
                _ => Ok(SortLayer::Inf),
            },
            SortSemiring::Naturals => match (k, l) {
                (SortLayer::Fin(a), SortLayer::Fin(b)) => a
                    .checked_mul(*b)
                    .map(SortLayer::Fin)
                    .ok_or(Error::LayerOverflow),
                _ => unreachable!(),
            },
            SortSemiring::Truncated(q) => match (k, l) {
                (SortLayer::Fin(a), SortLayer::Fin(b)) => {
                    let p = a.checked_mul(*b).ok_or(Error::LayerOverflow)?;
                    Ok(SortLayer::Fin(if p <= q - 1 { p } else { *q }))
                }
                _ => unreachable!(),
            },
            SortSemiring::Doubled(inner) => match (k, l) {
                // twisted product: (k,l)(k',l') = (kk'+ll', kl'+lk')
                (SortLayer::Pair(a, b), SortLayer::Pair(c, d)) => {
                    let ac = inner.mul_unchecked(a, c)?;
                    let bd = inner.mul_unchecked(b, d)?;
                    let ad = inner.mul_unchecked(a, d)?;
                    let bc = inner.mul_unchecked(b, c)?;
                    Ok(SortLayer::pair(
                        inner.add_unchecked(&ac, &bd)?,
                        inner.add_unchecked(&ad, &bc)?,
                    ))
                }
                _ => unreachable!(),
            },
        }
    }

    /// Partial order on layers: total for the scalar descriptors, the
    /// product order for doubled pairs.
    pub fn layer_leq(&self, k: &SortLayer, l: &SortLayer) -> Result<bool> {
        self.check_pair(k, l)?;
        Ok(self.leq_unchecked(k, l))
    }

    fn leq_unchecked(&self, k: &SortLayer, l: &SortLayer) -> bool {
        match self {
            SortSemiring::Doubled(inner) => match (k, l) {
                (SortLayer::Pair(a, b), SortLayer::Pair(c, d)) => {
                    inner.leq_unchecked(a, c) && inner.leq_unchecked(b, d)
                }
                _ => unreachable!(),
            },
            _ => match (k, l) {
                (SortLayer::Fin(a), SortLayer::Fin(b)) => a <= b,
                (SortLayer::Fin(_), SortLayer::Inf) => true,
                (SortLayer::Inf, SortLayer::Inf) => true,
                (SortLayer::Inf, SortLayer::Fin(_)) => false,
                _ => unreachable!(),
            },
        }
    }

    /// n-fold sum of a layer (natural action by repeated addition).
    pub fn layer_nat_mul(&self, n: u64, k: &SortLayer) -> Result<SortLayer> {
        if !self.valid_layer(k, true) {
            return Err(Error::MismatchedDescriptor(format!(
                "layer {k} is not an element of {self}"
            )));
        }
        if n == 0 {
            return Ok(self.zero_layer());
        }
        Ok(self.nat_mul_unchecked(n, k)?)
    }

    fn nat_mul_unchecked(&self, n: u64, k: &SortLayer) -> Result<SortLayer> {
        match self {
            SortSemiring::Trivial => Ok(k.clone()),
            SortSemiring::TwoLayer => match k {
                SortLayer::Fin(0) => Ok(SortLayer::Fin(0)),
                _ if n == 1 => Ok(k.clone()),
                _ => Ok(SortLayer::Inf),
            },
            SortSemiring::Naturals => match k {
                SortLayer::Fin(a) => a
                    .checked_mul(n)
                    .map(SortLayer::Fin)
                    .ok_or(Error::LayerOverflow),
                _ => unreachable!(),
            },
            SortSemiring::Truncated(q) => match k {
                SortLayer::Fin(a) => {
                    let p = a.checked_mul(n).ok_or(Error::LayerOverflow)?;
                    Ok(SortLayer::Fin(if p <= q - 1 { p } else { *q }))
                }
                _ => unreachable!(),
            },
            SortSemiring::Doubled(inner) => match k {
                SortLayer::Pair(a, b) => Ok(SortLayer::pair(
                    inner.nat_mul_unchecked(n, a)?,
                    inner.nat_mul_unchecked(n, b)?,
                )),
                _ => unreachable!(),
            },
        }
    }

    /// e-th multiplicative power of a layer; the empty product is the unit.
    pub fn layer_nat_pow(&self, k: &SortLayer, e: u32) -> Result<SortLayer> {
        if !self.valid_layer(k, true) {
            return Err(Error::MismatchedDescriptor(format!(
                "layer {k} is not an element of {self}"
            )));
        }
        let mut acc = self.unit_layer();
        for _ in 0..e {
            acc = self.mul_unchecked(&acc, k)?;
        }
        Ok(acc)
    }

    /// All layers `x` (nonzero unless `allow_zero`) with `base + x = target`.
    /// Used to decide surpassing relations without searching scalars.
    pub fn addend_layers(
        &self,
        base: &SortLayer,
        target: &SortLayer,
        allow_zero: bool,
    ) -> Result<Vec<SortLayer>> {
        self.check_pair(base, target)?;
        Ok(self.addends_unchecked(base, target, allow_zero))
    }

    fn addends_unchecked(
        &self,
        base: &SortLayer,
        target: &SortLayer,
        allow_zero: bool,
    ) -> Vec<SortLayer> {
        let mut out = Vec::new();
        match self {
            SortSemiring::Trivial | SortSemiring::TwoLayer => {
                let mut cands = vec![SortLayer::Fin(1)];
                if *self == SortSemiring::TwoLayer {
                    cands.push(SortLayer::Inf);
                }
                if allow_zero {
                    cands.push(SortLayer::Fin(0));
                }
                for x in cands {
                    if let Ok(s) = self.add_unchecked(base, &x) {
                        if s == *target {
                            out.push(x);
                        }
                    }
                }
            }
            SortSemiring::Naturals => {
                if let (SortLayer::Fin(b), SortLayer::Fin(t)) = (base, target) {
                    if t >= b {
                        let d = t - b;
                        if d > 0 || allow_zero {
                            out.push(SortLayer::Fin(d));
                        }
                    }
                }
            }
            SortSemiring::Truncated(q) => {
                let lo = if allow_zero { 0 } else { 1 };
                for x in lo..=*q {
                    let cand = SortLayer::Fin(x);
                    if let Ok(s) = self.add_unchecked(base, &cand) {
                        if s == *target {
                            out.push(cand);
                        }
                    }
                }
            }
            SortSemiring::Doubled(inner) => {
                if let (SortLayer::Pair(b1, b2), SortLayer::Pair(t1, t2)) = (base, target) {
                    let s1 = inner.addends_unchecked(b1, t1, true);
                    let s2 = inner.addends_unchecked(b2, t2, true);
                    for x1 in &s1 {
                        for x2 in &s2 {
                            let both_zero =
                                inner.is_zero_layer(x1) && inner.is_zero_layer(x2);
                            if both_zero && !allow_zero {
                                continue;
                            }
                            out.push(SortLayer::pair(x1.clone(), x2.clone()));
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for SortSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SortSemiring::Trivial => write!(f, "trivial"),
            SortSemiring::TwoLayer => write!(f, "super"),
            SortSemiring::Naturals => write!(f, "nat"),
            SortSemiring::Truncated(q) => write!(f, "trunc:{q}"),
            SortSemiring::Doubled(inner) => write!(f, "doubled:{inner}"),
        }
    }
}

impl FromStr for SortSemiring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "trivial" => Ok(SortSemiring::Trivial),
            "super" => Ok(SortSemiring::TwoLayer),
            "nat" => Ok(SortSemiring::Naturals),
            _ => {
                if let Some(q) = s.strip_prefix("trunc:") {
                    let q: u64 = q
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad truncation bound in {s:?}")))?;
                    if q < 2 {
                        return Err(Error::Parse("truncation bound must be >= 2".into()));
                    }
                    Ok(SortSemiring::Truncated(q))
                } else if let Some(inner) = s.strip_prefix("doubled:") {
                    Ok(SortSemiring::doubled(inner.parse()?))
                } else {
                    Err(Error::Parse(format!("unknown semiring descriptor {s:?}")))
                }
            }
        }
    }
}

/// Negation map on a doubled sorting semiring: swap the pair components.
pub fn negation_tau(desc: &SortSemiring, k: &SortLayer) -> Result<SortLayer> {
    match desc {
        SortSemiring::Doubled(_) => match k {
            SortLayer::Pair(a, b) => {
                if !desc.valid_layer(k, true) {
                    return Err(Error::MismatchedDescriptor(format!(
                        "layer {k} is not an element of {desc}"
                    )));
                }
                Ok(SortLayer::pair((**b).clone(), (**a).clone()))
            }
            _ => Err(Error::MismatchedDescriptor(format!(
                "layer {k} is not a doubled pair"
            ))),
        },
        _ => Err(Error::NotDoubled),
    }
}

/// Bipotent value of the exponential series over (R+, *): the maximum of
/// a^k / k! together with the number of indices attaining it. Terms strictly
/// decrease once k exceeds a, so the scan stops at the first decreasing term
/// past that point.
pub fn exp_maxtimes(a: &Rat) -> Result<(Rat, u64)> {
    if !a.is_positive() {
        return Err(Error::NonPositive);
    }
    let mut term = Rat::one();
    let mut best = term.clone();
    let mut count: u64 = 1;
    let mut k: u64 = 1;
    loop {
        term = &term * a;
        term = &term * &Rat::frac(1, k as i64).clone();
        match term.cmp(&best) {
            std::cmp::Ordering::Greater => {
                best = term.clone();
                count = 1;
            }
            std::cmp::Ordering::Equal => count += 1,
            std::cmp::Ordering::Less => {
                if Rat::int(k as i64) > *a {
                    break;
                }
            }
        }
        k += 1;
    }
    Ok((best, count))
}
