//! Finite Puiseux series with exact rational exponents and coefficients,
//! the order valuation, the exploded leading-term map, tropicalization,
//! and the forward root-compatibility check.
//!
//! The valuation is stored in the min convention; the bridge to max-plus
//! scalars is a single sign flip inside `explode` and `tropicalize`.

use crate::error::{Error, Result};
use crate::poly::TropPoly;
use crate::rat::Rat;
use crate::scalar::{ExplodedScalar, LayeredScalar};
use crate::semiring::SortSemiring;
use std::collections::BTreeMap;
use std::fmt;

/// Finite series: exponent -> nonzero coefficient. Negative exponents are
/// admitted (the series live in a field).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PuiseuxElem {
    terms: BTreeMap<Rat, Rat>,
}

impl PuiseuxElem {
    pub fn zero() -> Self {
        PuiseuxElem::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = PuiseuxElem::zero();
        p.add_term(Rat::zero(), c);
        p
    }

    /// c * t^e.
    pub fn monomial(c: Rat, e: Rat) -> Self {
        let mut p = PuiseuxElem::zero();
        p.add_term(e, c);
        p
    }

    pub fn add_term(&mut self, exp: Rat, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp.clone()).or_insert_with(Rat::zero);
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &Rat)> {
        self.terms.iter()
    }

    /// Leading term: the minimal exponent with its coefficient.
    pub fn leading(&self) -> Option<(&Rat, &Rat)> {
        self.terms.iter().next()
    }
}

impl fmt::Display for PuiseuxElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter() {
            let (neg, mag) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if e.is_zero() {
                write!(f, "{mag}")?;
            } else {
                if mag != Rat::one() {
                    write!(f, "{mag}*")?;
                }
                if e.is_integer() && e.is_positive() {
                    if *e == Rat::one() {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                } else {
                    write!(f, "t^({e})")?;
                }
            }
        }
        Ok(())
    }
}

pub fn puiseux_add(p: &PuiseuxElem, q: &PuiseuxElem) -> PuiseuxElem {
    let mut out = p.clone();
    for (e, c) in q.terms() {
        out.add_term(e.clone(), c.clone());
    }
    out
}

pub fn puiseux_neg(p: &PuiseuxElem) -> PuiseuxElem {
    let mut out = PuiseuxElem::zero();
    for (e, c) in p.terms() {
        out.add_term(e.clone(), -c);
    }
    out
}

pub fn puiseux_mul(p: &PuiseuxElem, q: &PuiseuxElem) -> PuiseuxElem {
    let mut out = PuiseuxElem::zero();
    for (e1, c1) in p.terms() {
        for (e2, c2) in q.terms() {
            out.add_term(e1 + e2, c1 * c2);
        }
    }
    out
}

pub fn puiseux_pow(p: &PuiseuxElem, e: u32) -> PuiseuxElem {
    let mut out = PuiseuxElem::constant(Rat::one());
    for _ in 0..e {
        out = puiseux_mul(&out, p);
    }
    out
}

/// The order valuation: the minimal exponent carrying a nonzero
/// coefficient; the zero series valuates to infinity (`None`).
pub fn order_val(p: &PuiseuxElem) -> Option<Rat> {
    p.leading().map(|(e, _)| e.clone())
}

/// Leading-term image in the exploded scalars, sign-flipped into the
/// max-plus convention: value -v(p), coefficient c_{v(p)}.
pub fn explode(p: &PuiseuxElem) -> ExplodedScalar {
    match p.leading() {
        None => ExplodedScalar::Zero,
        Some((e, c)) => ExplodedScalar::el(c.clone(), -e),
    }
}

/// Polynomial with Puiseux-series coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u64>, PuiseuxElem>,
}

impl PuiseuxPoly {
    pub fn new(nvars: usize) -> Self {
        PuiseuxPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn set_coeff(&mut self, exp: Vec<u64>, coeff: PuiseuxElem) -> Result<()> {
        if exp.len() != self.nvars {
            return Err(Error::ArityMismatch(format!(
                "exponent vector of length {} in a {}-variable polynomial",
                exp.len(),
                self.nvars
            )));
        }
        if coeff.is_zero() {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, coeff);
        }
        Ok(())
    }

    pub fn univariate(coeffs: Vec<PuiseuxElem>) -> Self {
        let mut p = PuiseuxPoly::new(1);
        for (j, c) in coeffs.into_iter().enumerate() {
            p.set_coeff(vec![j as u64], c).expect("arity 1");
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u64>, &PuiseuxElem)> {
        self.terms.iter()
    }

    /// Evaluate a univariate polynomial at a series.
    pub fn eval_univariate(&self, a: &PuiseuxElem) -> Result<PuiseuxElem> {
        if self.nvars != 1 {
            return Err(Error::NotUnivariate);
        }
        let mut acc = PuiseuxElem::zero();
        for (e, c) in self.terms() {
            acc = puiseux_add(&acc, &puiseux_mul(c, &puiseux_pow(a, e[0] as u32)));
        }
        Ok(acc)
    }
}

/// Tropicalization: replace every coefficient by the tangible scalar at
/// value -v(coefficient), dropping zero coefficients.
pub fn tropicalize(f: &PuiseuxPoly, desc: &SortSemiring) -> Result<TropPoly> {
    let mut out = TropPoly::zero(desc.clone(), f.nvars);
    for (e, c) in f.terms() {
        if let Some(v) = order_val(c) {
            out.insert_term(e.clone(), LayeredScalar::tangible(desc, -&v))?;
        }
    }
    Ok(out)
}

/// Forward root compatibility: a classical root of F valuates onto a
/// tropical root of the tropicalization. Checks that F(a) is the zero
/// series and then that -v(a) annihilates the tropicalization.
pub fn kapranov_forward_check(
    f: &PuiseuxPoly,
    a: &PuiseuxElem,
    desc: &SortSemiring,
) -> Result<bool> {
    if f.nvars != 1 {
        return Err(Error::NotUnivariate);
    }
    if !f.eval_univariate(a)?.is_zero() {
        return Err(Error::NotARoot);
    }
    let trop = tropicalize(f, desc)?;
    let point = match order_val(a) {
        None => LayeredScalar::Zero,
        Some(v) => LayeredScalar::tangible(desc, -&v),
    };
    crate::poly::is_root(&trop, &[point])
}

/// Parse the series grammar: terms like `3*t^(1/2)`, `5*t^2`, `-t`, `7`,
/// joined by `+` and `-`.
pub fn parse_puiseux(s: &str) -> Result<PuiseuxElem> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty series".into()));
    }
    let mut out = PuiseuxElem::zero();
    let mut rest = s;
    let mut sign = 1i64;
    // leading sign
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        // find the end of this term: the next top-level + or - not inside parens
        let mut depth = 0usize;
        let mut split = rest.len();
        for (i, ch) in rest.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                '+' | '-' if depth == 0 && i > 0 => {
                    split = i;
                    break;
                }
                _ => {}
            }
        }
        let (term, tail) = rest.split_at(split);
        parse_term(term.trim(), sign, &mut out)?;
        if tail.is_empty() {
            break;
        }
        sign = if tail.starts_with('-') { -1 } else { 1 };
        rest = tail[1..].trim_start();
        if rest.is_empty() {
            return Err(Error::Parse("dangling sign".into()));
        }
    }
    Ok(out)
}

fn parse_term(term: &str, sign: i64, out: &mut PuiseuxElem) -> Result<()> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let (coeff_text, t_part) = match term.split_once('*') {
        Some((c, t)) => (Some(c.trim()), Some(t.trim())),
        None => {
            if term.starts_with('t') {
                (None, Some(term))
            } else {
                (Some(term), None)
            }
        }
    };
    let mut coeff: Rat = match coeff_text {
        Some(c) => c.parse()?,
        None => Rat::one(),
    };
    if sign < 0 {
        coeff = -coeff;
    }
    let exp: Rat = match t_part {
        None => Rat::zero(),
        Some(t) => {
            if t == "t" {
                Rat::one()
            } else if let Some(e) = t.strip_prefix("t^") {
                let e = e.trim();
                let e = e
                    .strip_prefix('(')
                    .and_then(|x| x.strip_suffix(')'))
                    .unwrap_or(e);
                e.parse()?
            } else {
                return Err(Error::Parse(format!("bad term {term:?}")));
            }
        }
    };
    out.add_term(exp, coeff);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_pow(num: i64, den: i64) -> PuiseuxElem {
        PuiseuxElem::monomial(Rat::one(), Rat::frac(num, den))
    }

    #[test]
    fn arithmetic_examples() {
        // cancellation
        let a = t_pow(1, 2);
        let b = puiseux_neg(&a);
        assert!(puiseux_add(&a, &b).is_zero());
        // (1 + t)(1 - t) = 1 - t^2
        let one = PuiseuxElem::constant(Rat::one());
        let t = t_pow(1, 1);
        let lhs = puiseux_mul(&puiseux_add(&one, &t), &puiseux_add(&one, &puiseux_neg(&t)));
        let mut expect = PuiseuxElem::constant(Rat::one());
        expect.add_term(Rat::int(2), Rat::int(-1));
        assert_eq!(lhs, expect);
        // 3 t^(1/2) * 2 t^(1/3) = 6 t^(5/6)
        let p = PuiseuxElem::monomial(Rat::int(3), Rat::frac(1, 2));
        let q = PuiseuxElem::monomial(Rat::int(2), Rat::frac(1, 3));
        assert_eq!(
            puiseux_mul(&p, &q),
            PuiseuxElem::monomial(Rat::int(6), Rat::frac(5, 6))
        );
    }

    #[test]
    fn order_val_examples() {
        let mut p = PuiseuxElem::monomial(Rat::int(3), Rat::frac(1, 2));
        p.add_term(Rat::int(2), Rat::int(5));
        assert_eq!(order_val(&p), Some(Rat::frac(1, 2)));
        assert_eq!(order_val(&PuiseuxElem::zero()), None);
        assert_eq!(order_val(&PuiseuxElem::constant(Rat::int(7))), Some(Rat::zero()));
    }

    #[test]
    fn explode_examples() {
        let mut p = PuiseuxElem::monomial(Rat::int(3), Rat::frac(1, 2));
        p.add_term(Rat::int(2), Rat::int(5));
        assert_eq!(
            explode(&p),
            ExplodedScalar::el(Rat::int(3), Rat::frac(-1, 2))
        );
        assert_eq!(explode(&PuiseuxElem::zero()), ExplodedScalar::Zero);
        let mut q = PuiseuxElem::constant(Rat::int(-2));
        q.add_term(Rat::one(), Rat::one());
        assert_eq!(explode(&q), ExplodedScalar::el(Rat::int(-2), Rat::zero()));
    }

    #[test]
    fn tropicalize_examples() {
        let d = SortSemiring::TwoLayer;
        // F = t*lambda + t^2
        let f = PuiseuxPoly::univariate(vec![t_pow(2, 1), t_pow(1, 1)]);
        let trop = tropicalize(&f, &d).unwrap();
        assert_eq!(trop.coeff(&[1]), LayeredScalar::tint(&d, -1));
        assert_eq!(trop.coeff(&[0]), LayeredScalar::tint(&d, -2));
        // F = lambda^2 - 1
        let g = PuiseuxPoly::univariate(vec![
            PuiseuxElem::constant(Rat::int(-1)),
            PuiseuxElem::zero(),
            PuiseuxElem::constant(Rat::one()),
        ]);
        let trop = tropicalize(&g, &d).unwrap();
        assert_eq!(trop.coeff(&[2]), LayeredScalar::tint(&d, 0));
        assert_eq!(trop.coeff(&[0]), LayeredScalar::tint(&d, 0));
        assert!(trop.coeff(&[1]).is_zero());
        // zero polynomial
        let z = PuiseuxPoly::new(1);
        assert!(tropicalize(&z, &d).unwrap().is_zero());
    }

    #[test]
    fn kapranov_forward_examples() {
        let d = SortSemiring::TwoLayer;
        // F = lambda - t with root t
        let f = PuiseuxPoly::univariate(vec![
            puiseux_neg(&t_pow(1, 1)),
            PuiseuxElem::constant(Rat::one()),
        ]);
        assert!(kapranov_forward_check(&f, &t_pow(1, 1), &d).unwrap());
        // F = lambda^2 - t^2 with root t
        let g = PuiseuxPoly::univariate(vec![
            puiseux_neg(&t_pow(2, 1)),
            PuiseuxElem::zero(),
            PuiseuxElem::constant(Rat::one()),
        ]);
        assert!(kapranov_forward_check(&g, &t_pow(1, 1), &d).unwrap());
        // F = lambda - 1 does not vanish at 2
        let h = PuiseuxPoly::univariate(vec![
            PuiseuxElem::constant(Rat::int(-1)),
            PuiseuxElem::constant(Rat::one()),
        ]);
        assert_eq!(
            kapranov_forward_check(&h, &PuiseuxElem::constant(Rat::int(2)), &d),
            Err(Error::NotARoot)
        );
    }

    #[test]
    fn grammar_round_trip() {
        let p = parse_puiseux("3*t^(1/2) + 5*t^2 - 1").unwrap();
        let mut expect = PuiseuxElem::monomial(Rat::int(3), Rat::frac(1, 2));
        expect.add_term(Rat::int(2), Rat::int(5));
        expect.add_term(Rat::zero(), Rat::int(-1));
        assert_eq!(p, expect);
        assert_eq!(parse_puiseux(&p.to_string()).unwrap(), p);
        for s in ["t", "-t", "7", "-22/7", "t^3", "1/2*t^(-1/2)"] {
            let q = parse_puiseux(s).unwrap();
            assert_eq!(parse_puiseux(&q.to_string()).unwrap(), q);
        }
        assert!(parse_puiseux("").is_err());
        assert!(parse_puiseux("q^2").is_err());
    }
}
