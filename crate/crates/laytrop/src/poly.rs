//! Polynomials over the layered scalars, viewed as functions: arithmetic,
//! corner roots of tangible univariate polynomials via exact upper-envelope
//! intersections, the layered derivative, and the layer-transform sequences.

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::sample::{sample_scalar, trial_rng, LayerMode};
use crate::scalar::{lscalar_add, lscalar_mul, lscalar_pow, LayeredScalar};
use crate::semiring::{SortLayer, SortSemiring};
use std::collections::BTreeMap;

/// Finite map from exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropPoly {
    desc: SortSemiring,
    nvars: usize,
    terms: BTreeMap<Vec<u64>, LayeredScalar>,
}

impl TropPoly {
    pub fn zero(desc: SortSemiring, nvars: usize) -> Self {
        TropPoly {
            desc,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        desc: SortSemiring,
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u64>, LayeredScalar)>,
    ) -> Result<Self> {
        let mut p = TropPoly::zero(desc, nvars);
        for (e, c) in terms {
            p.insert_term(e, c)?;
        }
        Ok(p)
    }

    /// Univariate helper: coefficients listed by ascending degree.
    pub fn univariate(desc: SortSemiring, coeffs: &[LayeredScalar]) -> Result<Self> {
        TropPoly::from_terms(
            desc,
            1,
            coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| (vec![j as u64], c.clone())),
        )
    }

    pub fn constant(desc: SortSemiring, nvars: usize, c: LayeredScalar) -> Result<Self> {
        TropPoly::from_terms(desc, nvars, [(vec![0; nvars], c)])
    }

    /// Merge a term in with scalar addition, dropping zero coefficients.
    pub fn insert_term(&mut self, exp: Vec<u64>, coeff: LayeredScalar) -> Result<()> {
        if exp.len() != self.nvars {
            return Err(Error::ArityMismatch(format!(
                "exponent vector of length {} in a {}-variable polynomial",
                exp.len(),
                self.nvars
            )));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let merged = match self.terms.get(&exp) {
            Some(old) => lscalar_add(&self.desc, old, &coeff)?,
            None => coeff,
        };
        if merged.is_zero() {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, merged);
        }
        Ok(())
    }

    pub fn descriptor(&self) -> &SortSemiring {
        &self.desc
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u64>, &LayeredScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u64]) -> LayeredScalar {
        self.terms
            .get(exp)
            .cloned()
            .unwrap_or(LayeredScalar::Zero)
    }

    /// Degree of a univariate polynomial (zero polynomial reports 0).
    pub fn degree(&self) -> u64 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u64>())
            .max()
            .unwrap_or(0)
    }

    pub fn is_tangible_poly(&self) -> bool {
        self.terms.values().all(|c| c.is_tangible(&self.desc))
    }

    /// Every coefficient retagged to the unit layer.
    pub fn retag_tangible(&self) -> TropPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.retag_tangible(&self.desc)))
            .collect();
        TropPoly {
            desc: self.desc.clone(),
            nvars: self.nvars,
            terms,
        }
    }

    fn check_compatible(&self, g: &TropPoly) -> Result<()> {
        if self.desc != g.desc {
            return Err(Error::MismatchedDescriptor(format!(
                "{} vs {}",
                self.desc, g.desc
            )));
        }
        if self.nvars != g.nvars {
            return Err(Error::ArityMismatch(format!(
                "{} vs {} variables",
                self.nvars, g.nvars
            )));
        }
        Ok(())
    }
}

pub fn poly_add(f: &TropPoly, g: &TropPoly) -> Result<TropPoly> {
    f.check_compatible(g)?;
    let mut out = f.clone();
    for (e, c) in g.terms.iter() {
        out.insert_term(e.clone(), c.clone())?;
    }
    Ok(out)
}

pub fn poly_mul(f: &TropPoly, g: &TropPoly) -> Result<TropPoly> {
    f.check_compatible(g)?;
    let mut out = TropPoly::zero(f.desc.clone(), f.nvars);
    for (e1, c1) in f.terms.iter() {
        for (e2, c2) in g.terms.iter() {
            let exp: Vec<u64> = e1
                .iter()
                .zip(e2.iter())
                .map(|(a, b)| a.checked_add(*b).ok_or(Error::LayerOverflow))
                .collect::<Result<_>>()?;
            out.insert_term(exp, lscalar_mul(&f.desc, c1, c2)?)?;
        }
    }
    Ok(out)
}

/// Evaluate at a point, folding monomials with scalar addition.
pub fn poly_eval(f: &TropPoly, point: &[LayeredScalar]) -> Result<LayeredScalar> {
    if point.len() != f.nvars {
        return Err(Error::ArityMismatch(format!(
            "point of dimension {} for a {}-variable polynomial",
            point.len(),
            f.nvars
        )));
    }
    let mut acc = LayeredScalar::Zero;
    for (e, c) in f.terms.iter() {
        let mut m = c.clone();
        for (x, &j) in point.iter().zip(e.iter()) {
            if j > 0 {
                m = lscalar_mul(&f.desc, &m, &lscalar_pow(&f.desc, x, j as u32)?)?;
            }
        }
        acc = lscalar_add(&f.desc, &acc, &m)?;
    }
    Ok(acc)
}

/// A point is a root when the evaluation lands in the ghost ideal.
pub fn is_root(f: &TropPoly, point: &[LayeredScalar]) -> Result<bool> {
    Ok(poly_eval(f, point)?.is_ghost_or_zero(&f.desc))
}

/// Corner roots of a tangible univariate polynomial: all values where at
/// least two monomials jointly attain the maximum, found exactly as
/// intersection points of the monomial lines j*x + c_j. Each root is
/// reported with the layer of the evaluation there.
pub fn corner_roots_univariate(f: &TropPoly) -> Result<Vec<(Rat, SortLayer)>> {
    if f.nvars != 1 {
        return Err(Error::NotUnivariate);
    }
    if !f.is_tangible_poly() {
        return Err(Error::NotTangible("corner roots need a tangible polynomial".into()));
    }
    if f.num_terms() < 2 {
        return Err(Error::NoRoots);
    }
    let lines: Vec<(u64, Rat)> = f
        .terms
        .iter()
        .map(|(e, c)| (e[0], c.nu_value().expect("nonzero coefficient").clone()))
        .collect();

    // candidate corners: pairwise intersections of lines with distinct slopes
    let mut candidates: Vec<Rat> = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let (si, ci) = &lines[i];
            let (sj, cj) = &lines[j];
            debug_assert_ne!(si, sj);
            let dx = (*sj as i64) - (*si as i64);
            let x = &(ci - cj) * &Rat::frac(1, dx);
            candidates.push(x);
        }
    }
    candidates.sort();
    candidates.dedup();

    let mut out = Vec::new();
    for x in candidates {
        let attain = lines
            .iter()
            .map(|(s, c)| &x.mul_nat(*s) + c)
            .collect::<Vec<_>>();
        let max = attain.iter().max().expect("nonempty").clone();
        let count = attain.iter().filter(|v| **v == max).count();
        if count >= 2 {
            let point = LayeredScalar::tangible(&f.desc, x.clone());
            let layer = poly_eval(f, &[point])?.sort(&f.desc);
            out.push((x, layer));
        }
    }
    Ok(out)
}

/// Layered derivative: the term on lambda^j keeps its value and multiplies
/// its layer by j, dropping to degree j-1; constants vanish.
pub fn layered_derivative(f: &TropPoly) -> Result<TropPoly> {
    if f.nvars != 1 {
        return Err(Error::NotUnivariate);
    }
    let mut out = TropPoly::zero(f.desc.clone(), 1);
    for (e, c) in f.terms.iter() {
        let j = e[0];
        if j == 0 {
            continue;
        }
        let c2 = match c {
            LayeredScalar::Zero => LayeredScalar::Zero,
            LayeredScalar::El { layer, value } => LayeredScalar::El {
                layer: f.desc.layer_nat_mul(j, layer)?,
                value: value.clone(),
            },
        };
        out.insert_term(vec![j - 1], c2)?;
    }
    Ok(out)
}

/// The closed upper-envelope support of a tangible univariate polynomial:
/// the monomial lines that attain the maximum somewhere (touching at a
/// single point counts, since a touching line changes the layer there).
fn essential_lines(f: &TropPoly) -> Vec<(u64, Rat)> {
    let lines: Vec<(u64, Rat)> = f
        .terms
        .iter()
        .map(|(e, c)| (e[0], c.nu_value().expect("nonzero").clone()))
        .collect();
    let mut out = Vec::new();
    for i in 0..lines.len() {
        // region where line i is at least every other line
        let mut lo: Option<Rat> = None;
        let mut hi: Option<Rat> = None;
        let mut feasible = true;
        for j in 0..lines.len() {
            if i == j {
                continue;
            }
            let (si, ci) = &lines[i];
            let (sj, cj) = &lines[j];
            let dx = (*sj as i64) - (*si as i64);
            let x = &(ci - cj) * &Rat::frac(1, dx);
            if dx > 0 {
                // line j eventually overtakes: need x <= crossing
                hi = Some(match hi {
                    Some(h) => h.min(x),
                    None => x,
                });
            } else {
                lo = Some(match lo {
                    Some(l) => l.max(x),
                    None => x,
                });
            }
        }
        if let (Some(l), Some(h)) = (&lo, &hi) {
            feasible = l <= h;
        }
        if feasible {
            out.push(lines[i].clone());
        }
    }
    out.sort();
    out
}

/// Functional equality of two polynomials. Tangible univariate inputs are
/// compared exactly through their closed upper-envelope supports; anything
/// else is compared on seeded pseudo-random sample points.
pub fn func_equiv(f: &TropPoly, g: &TropPoly, domain_samples: u64, seed: u64) -> Result<bool> {
    f.check_compatible(g)?;
    if f.nvars == 1 && f.is_tangible_poly() && g.is_tangible_poly() {
        if f.is_zero() || g.is_zero() {
            return Ok(f.is_zero() && g.is_zero());
        }
        return Ok(essential_lines(f) == essential_lines(g));
    }
    for trial in 0..domain_samples {
        let mut r = trial_rng(seed, trial);
        let point: Vec<LayeredScalar> = (0..f.nvars)
            .map(|_| sample_scalar(&f.desc, &mut r, LayerMode::Mixed, -60, 60))
            .collect();
        if poly_eval(f, &point)? != poly_eval(g, &point)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sequence of scalars produced by the layer transform.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplaceSeq {
    pub desc: SortSemiring,
    pub entries: Vec<LayeredScalar>,
}

/// Transform a univariate polynomial over the naturals descriptor into the
/// sequence whose k-th entry is the coefficient of lambda^k with its layer
/// multiplied by k!.
pub fn laplace(f: &TropPoly, upto: u64) -> Result<LaplaceSeq> {
    if f.nvars != 1 {
        return Err(Error::NotUnivariate);
    }
    if *f.descriptor() != SortSemiring::Naturals {
        return Err(Error::UnsupportedDescriptor(format!(
            "layer transform needs the naturals descriptor, got {}",
            f.descriptor()
        )));
    }
    if upto < f.degree() {
        return Err(Error::InvalidInput(format!(
            "upto = {} below degree {}",
            upto,
            f.degree()
        )));
    }
    let mut entries = Vec::with_capacity(upto as usize + 1);
    let mut factorial: u64 = 1;
    for k in 0..=upto {
        if k > 0 {
            factorial = factorial.checked_mul(k).ok_or(Error::LayerOverflow)?;
        }
        let c = f.coeff(&[k]);
        entries.push(match c {
            LayeredScalar::Zero => LayeredScalar::Zero,
            LayeredScalar::El { layer, value } => LayeredScalar::El {
                layer: f.desc.layer_nat_mul(factorial, &layer)?,
                value,
            },
        });
    }
    Ok(LaplaceSeq {
        desc: f.desc.clone(),
        entries,
    })
}

/// Derivative of a transformed sequence: shift indices down by one and
/// decrement the layer, so the all-equal-value exponential sequence with
/// entry k on layer k is a fixed point.
pub fn laplace_derivative(s: &LaplaceSeq) -> LaplaceSeq {
    let entries = s
        .entries
        .iter()
        .skip(1)
        .map(|e| match e {
            LayeredScalar::Zero => LayeredScalar::Zero,
            LayeredScalar::El { layer, value } => match layer {
                SortLayer::Fin(1) => LayeredScalar::Zero,
                SortLayer::Fin(m) => LayeredScalar::El {
                    layer: SortLayer::Fin(m - 1),
                    value: value.clone(),
                },
                _ => e.clone(),
            },
        })
        .collect();
    LaplaceSeq {
        desc: s.desc.clone(),
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Zero;

    fn nat() -> SortSemiring {
        SortSemiring::Naturals
    }

    /// (lambda + 3)^5 over the naturals descriptor.
    fn lambda_plus_3_pow5() -> TropPoly {
        let d = nat();
        let base = TropPoly::univariate(
            d.clone(),
            &[LayeredScalar::tint(&d, 3), LayeredScalar::unit(&d)],
        )
        .unwrap();
        let mut p = TropPoly::constant(d, 1, LayeredScalar::unit(&nat())).unwrap();
        for _ in 0..5 {
            p = poly_mul(&p, &base).unwrap();
        }
        p
    }

    #[test]
    fn binomial_expansion_with_layers() {
        let p = lambda_plus_3_pow5();
        let expect = [
            (0u64, 15i64, 1u64),
            (1, 12, 5),
            (2, 9, 10),
            (3, 6, 10),
            (4, 3, 5),
            (5, 0, 1),
        ];
        assert_eq!(p.num_terms(), 6);
        for (j, v, l) in expect {
            assert_eq!(p.coeff(&[j]), LayeredScalar::lint(v, l), "coefficient of degree {j}");
        }
    }

    #[test]
    fn evaluation_aggregates_layers() {
        let d = nat();
        let p = lambda_plus_3_pow5();
        let v = poly_eval(&p, &[LayeredScalar::tint(&d, 3)]).unwrap();
        assert_eq!(v, LayeredScalar::lint(15, 32));
    }

    #[test]
    fn add_zero_poly_is_identity() {
        let p = lambda_plus_3_pow5();
        let z = TropPoly::zero(nat(), 1);
        assert_eq!(poly_add(&p, &z).unwrap(), p);
    }

    #[test]
    fn root_detection() {
        let d = SortSemiring::TwoLayer;
        // lambda^2 + 2 lambda + 2
        let f = TropPoly::univariate(
            d.clone(),
            &[
                LayeredScalar::tint(&d, 2),
                LayeredScalar::tint(&d, 2),
                LayeredScalar::unit(&d),
            ],
        )
        .unwrap();
        assert!(is_root(&f, &[LayeredScalar::tint(&d, 2)]).unwrap());
        assert!(!is_root(&f, &[LayeredScalar::tint(&d, 10)]).unwrap());
        // ghost constant dominating makes everything nearby a root
        let g = TropPoly::univariate(
            d.clone(),
            &[
                LayeredScalar::new(&d, SortLayer::Inf, Rat::int(100)).unwrap(),
                LayeredScalar::unit(&d),
            ],
        )
        .unwrap();
        assert!(is_root(&g, &[LayeredScalar::tint(&d, 1)]).unwrap());
    }

    #[test]
    fn corner_roots_examples() {
        let d = nat();
        let f = TropPoly::univariate(
            d.clone(),
            &[
                LayeredScalar::tint(&d, 2),
                LayeredScalar::tint(&d, 2),
                LayeredScalar::unit(&d),
            ],
        )
        .unwrap();
        let roots = corner_roots_univariate(&f).unwrap();
        assert_eq!(
            roots,
            vec![
                (Rat::int(0), SortLayer::Fin(2)),
                (Rat::int(2), SortLayer::Fin(2)),
            ]
        );

        // (lambda+4)(lambda+1) = lambda^2 + 4 lambda + 5
        let g = TropPoly::univariate(
            d.clone(),
            &[
                LayeredScalar::tint(&d, 5),
                LayeredScalar::tint(&d, 4),
                LayeredScalar::unit(&d),
            ],
        )
        .unwrap();
        let roots = corner_roots_univariate(&g).unwrap();
        assert_eq!(
            roots,
            vec![
                (Rat::int(1), SortLayer::Fin(2)),
                (Rat::int(4), SortLayer::Fin(2)),
            ]
        );

        let p5 = lambda_plus_3_pow5().retag_tangible();
        let roots = corner_roots_univariate(&p5).unwrap();
        assert_eq!(roots, vec![(Rat::int(3), SortLayer::Fin(32))]);
    }

    #[test]
    fn corner_roots_errors() {
        let d = nat();
        let single = TropPoly::univariate(d.clone(), &[LayeredScalar::tint(&d, 1)]).unwrap();
        assert_eq!(corner_roots_univariate(&single), Err(Error::NoRoots));
        let ghost = TropPoly::univariate(
            d.clone(),
            &[LayeredScalar::lint(1, 2), LayeredScalar::unit(&d)],
        )
        .unwrap();
        assert!(matches!(
            corner_roots_univariate(&ghost),
            Err(Error::NotTangible(_))
        ));
        let bivar = TropPoly::from_terms(
            d.clone(),
            2,
            [
                (vec![1, 0], LayeredScalar::unit(&d)),
                (vec![0, 1], LayeredScalar::unit(&d)),
            ],
        )
        .unwrap();
        assert_eq!(corner_roots_univariate(&bivar), Err(Error::NotUnivariate));
    }

    #[test]
    fn derivative_rules() {
        let d = nat();
        // (5^[1] lambda^3)' = 5^[3] lambda^2
        let f = TropPoly::from_terms(d.clone(), 1, [(vec![3], LayeredScalar::tint(&d, 5))]).unwrap();
        let fd = layered_derivative(&f).unwrap();
        assert_eq!(fd.coeff(&[2]), LayeredScalar::lint(5, 3));
        // (alpha lambda)' = alpha
        let g = TropPoly::from_terms(d.clone(), 1, [(vec![1], LayeredScalar::tint(&d, 5))]).unwrap();
        assert_eq!(
            layered_derivative(&g).unwrap().coeff(&[0]),
            LayeredScalar::tint(&d, 5)
        );
        // constants vanish
        let c = TropPoly::constant(d.clone(), 1, LayeredScalar::lint(7, 2)).unwrap();
        assert!(layered_derivative(&c).unwrap().is_zero());
    }

    #[test]
    fn func_equiv_examples() {
        let d = nat();
        let f = TropPoly::univariate(
            d.clone(),
            &[
                LayeredScalar::tint(&d, 2),
                LayeredScalar::tint(&d, 2),
                LayeredScalar::unit(&d),
            ],
        )
        .unwrap();
        let lhs = TropPoly::univariate(d.clone(), &[LayeredScalar::tint(&d, 0), LayeredScalar::unit(&d)]).unwrap();
        let rhs = TropPoly::univariate(d.clone(), &[LayeredScalar::tint(&d, 2), LayeredScalar::unit(&d)]).unwrap();
        let g = poly_mul(&lhs, &rhs).unwrap();
        assert!(func_equiv(&f, &g, 64, 7).unwrap());
        let h1 = TropPoly::univariate(d.clone(), &[LayeredScalar::tint(&d, 1), LayeredScalar::unit(&d)]).unwrap();
        let h2 = TropPoly::univariate(d.clone(), &[LayeredScalar::tint(&d, 2), LayeredScalar::unit(&d)]).unwrap();
        assert!(!func_equiv(&h1, &h2, 64, 7).unwrap());
        assert!(func_equiv(&f, &f, 64, 7).unwrap());
    }

    #[test]
    fn func_equiv_sees_through_inessential_and_touching_monomials() {
        let d = nat();
        let base = TropPoly::univariate(
            d.clone(),
            &[LayeredScalar::tint(&d, 4), Zero, LayeredScalar::unit(&d)],
        )
        .unwrap();
        // the slope-1 line at 1 stays strictly under max(2x, 4)
        let mut slack = base.clone();
        slack.insert_term(vec![1], LayeredScalar::tint(&d, 1)).unwrap();
        assert!(func_equiv(&base, &slack, 64, 7).unwrap());
        // the slope-1 line at 2 touches the envelope at x = 2 and changes
        // the layer there, so the functions differ
        let mut touching = base.clone();
        touching.insert_term(vec![1], LayeredScalar::tint(&d, 2)).unwrap();
        assert!(!func_equiv(&base, &touching, 64, 7).unwrap());
    }

    #[test]
    fn laplace_examples() {
        let d = nat();
        let f = TropPoly::univariate(
            d.clone(),
            &[
                LayeredScalar::tint(&d, 0),
                LayeredScalar::tint(&d, 0),
                LayeredScalar::tint(&d, 0),
            ],
        )
        .unwrap();
        let s = laplace(&f, 2).unwrap();
        assert_eq!(
            s.entries,
            vec![
                LayeredScalar::lint(0, 1),
                LayeredScalar::lint(0, 1),
                LayeredScalar::lint(0, 2),
            ]
        );
        // empty polynomial -> all-zero sequence
        let z = laplace(&TropPoly::zero(d.clone(), 1), 3).unwrap();
        assert!(z.entries.iter().all(|e| e.is_zero()));
        // wrong descriptor refused
        let sup = TropPoly::zero(SortSemiring::TwoLayer, 1);
        assert!(matches!(laplace(&sup, 0), Err(Error::UnsupportedDescriptor(_))));
    }

    #[test]
    fn laplace_derivative_fixes_exponential_sequence() {
        let d = nat();
        let a = Rat::int(4);
        let mut entries = vec![Zero];
        for k in 1..=6u64 {
            entries.push(LayeredScalar::El {
                layer: SortLayer::Fin(k),
                value: a.clone(),
            });
        }
        let s = LaplaceSeq {
            desc: d,
            entries,
        };
        let ds = laplace_derivative(&s);
        assert_eq!(&ds.entries[..], &s.entries[..ds.entries.len()]);
    }
}
