//! Noncommutative polynomials over the naturals, polynomial-identity
//! pairs, alternating/standard/Capelli constructions, matrix-unit
//! witnesses, surpassing-identity transfer checks, and the 2x2 max-plus
//! semigroup identity.
//!
//! Natural coefficients act by repeated semiring addition, so a doubled
//! term doubles the layer rather than the value.

use crate::error::{Error, Result};
use crate::matrix::{
    adjoint, char_poly, det, mat_add, mat_mul, mat_pow, scalar_mul, TropMatrix,
};
use crate::sample::{sample_matrix, sample_value, trial_rng, LayerMode};
use crate::scalar::{lscalar_nat_scale, lscalar_pow, strong_l_surpass, LayeredScalar};
use crate::semiring::{SortLayer, SortSemiring};
use itertools::Itertools;
use std::collections::BTreeMap;
use std::fmt;

/// A letter of the free word monoid. Two alphabets: the alternating
/// variables x1, x2, ... and the auxiliary variables y1, y2, ...
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X(usize),
    Y(usize),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X(i) => write!(f, "x{}", i + 1),
            Letter::Y(i) => write!(f, "y{}", i + 1),
        }
    }
}

pub type Word = Vec<Letter>;

/// Noncommutative polynomial: finite map from words to positive natural
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCPoly {
    nx: usize,
    ny: usize,
    monomials: BTreeMap<Word, u64>,
}

impl NCPoly {
    pub fn zero(nx: usize, ny: usize) -> Self {
        NCPoly {
            nx,
            ny,
            monomials: BTreeMap::new(),
        }
    }

    pub fn from_words(nx: usize, ny: usize, words: impl IntoIterator<Item = (Word, u64)>) -> Result<Self> {
        let mut p = NCPoly::zero(nx, ny);
        for (w, c) in words {
            p.add_word(w, c)?;
        }
        Ok(p)
    }

    pub fn add_word(&mut self, w: Word, c: u64) -> Result<()> {
        for l in &w {
            match l {
                Letter::X(i) if *i >= self.nx => {
                    return Err(Error::ArityMismatch(format!(
                        "variable x{} beyond declared arity {}",
                        i + 1,
                        self.nx
                    )))
                }
                Letter::Y(i) if *i >= self.ny => {
                    return Err(Error::ArityMismatch(format!(
                        "variable y{} beyond declared arity {}",
                        i + 1,
                        self.ny
                    )))
                }
                _ => {}
            }
        }
        if c == 0 {
            return Ok(());
        }
        *self.monomials.entry(w).or_insert(0) += c;
        Ok(())
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&Word, &u64)> {
        self.monomials.iter()
    }

    pub fn num_monomials(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Multilinear in x1..xt: every monomial contains each of x1..xt
    /// exactly once.
    pub fn is_multilinear_in_x(&self, t: usize) -> bool {
        self.monomials.keys().all(|w| {
            let mut counts = vec![0usize; t];
            for l in w {
                if let Letter::X(i) = l {
                    if *i >= t {
                        return false;
                    }
                    counts[*i] += 1;
                }
            }
            counts.iter().all(|&c| c == 1)
        })
    }

    fn shares_monomial(&self, other: &NCPoly) -> bool {
        self.monomials.keys().any(|w| other.monomials.contains_key(w))
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .monomials
            .iter()
            .map(|(w, c)| {
                let word = w.iter().map(|l| l.to_string()).join(" ");
                if *c == 1 {
                    word
                } else {
                    format!("{c}*{word}")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// A pair (f, g) asserted to agree under every substitution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PIPair {
    pub f: NCPoly,
    pub g: NCPoly,
}

impl PIPair {
    pub fn arity(&self) -> (usize, usize) {
        let (fx, fy) = self.f.arity();
        let (gx, gy) = self.g.arity();
        (fx.max(gx), fy.max(gy))
    }
}

/// An integer polynomial split into its positive and negated-negative
/// parts, which share no monomial by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedNCPoly {
    pub plus: NCPoly,
    pub minus: NCPoly,
}

/// Split an integer-coefficient noncommutative polynomial by sign.
pub fn split_integer_poly(
    nx: usize,
    ny: usize,
    terms: &[(Word, i64)],
) -> Result<SignedNCPoly> {
    let mut net: BTreeMap<Word, i64> = BTreeMap::new();
    for (w, c) in terms {
        *net.entry(w.clone()).or_insert(0) += c;
    }
    let mut plus = NCPoly::zero(nx, ny);
    let mut minus = NCPoly::zero(nx, ny);
    for (w, c) in net {
        match c.cmp(&0) {
            std::cmp::Ordering::Greater => plus.add_word(w, c as u64)?,
            std::cmp::Ordering::Less => minus.add_word(w, (-c) as u64)?,
            std::cmp::Ordering::Equal => {}
        }
    }
    Ok(SignedNCPoly { plus, minus })
}

/// Evaluate a noncommutative polynomial on square matrices: words multiply
/// left to right, natural coefficients act by repeated addition, monomials
/// sum. The empty polynomial evaluates to the zero matrix.
pub fn nc_eval(p: &NCPoly, xs: &[TropMatrix], ys: &[TropMatrix]) -> Result<TropMatrix> {
    let (nx, ny) = p.arity();
    if xs.len() < nx || ys.len() < ny {
        return Err(Error::ArityMismatch(format!(
            "need {nx} x-arguments and {ny} y-arguments, got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    let all = xs.iter().chain(ys.iter()).collect::<Vec<_>>();
    let first = all
        .first()
        .ok_or_else(|| Error::ArityMismatch("evaluation needs at least one argument".into()))?;
    let n = first.require_square()?;
    let desc = first.descriptor().clone();
    for m in &all {
        m.require_square()?;
        if m.rows() != n || *m.descriptor() != desc {
            return Err(Error::ShapeMismatch(
                "arguments must be square, equal-sized, same descriptor".into(),
            ));
        }
    }
    let mut acc = TropMatrix::zero(desc.clone(), n, n);
    for (w, &c) in p.monomials() {
        let mut prod = TropMatrix::identity(desc.clone(), n);
        for l in w {
            let m = match l {
                Letter::X(i) => &xs[*i],
                Letter::Y(i) => &ys[*i],
            };
            prod = mat_mul(&prod, m)?;
        }
        let scaled = mat_nat_scale(c, &prod)?;
        acc = mat_add(&acc, &scaled)?;
    }
    Ok(acc)
}

/// Entrywise n-fold sum of a matrix.
pub fn mat_nat_scale(c: u64, a: &TropMatrix) -> Result<TropMatrix> {
    let mut out = a.clone();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.set(i, j, lscalar_nat_scale(a.descriptor(), c, a.get(i, j))?);
        }
    }
    Ok(out)
}

fn perms(t: usize) -> Vec<Vec<usize>> {
    (0..t).permutations(t).collect()
}

fn perm_sign(p: &[usize]) -> bool {
    // true = even
    let mut seen = vec![false; p.len()];
    let mut even = true;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len % 2 == 0 {
            even = !even;
        }
    }
    even
}

/// The standard pair: even and odd permutation sums of x1 ... xt.
pub fn standard_pair(t: usize) -> Result<PIPair> {
    if t < 2 {
        return Err(Error::InvalidInput("standard pair needs t >= 2".into()));
    }
    let mut f = NCPoly::zero(t, 0);
    let mut g = NCPoly::zero(t, 0);
    for p in perms(t) {
        let w: Word = p.iter().map(|&i| Letter::X(i)).collect();
        if perm_sign(&p) {
            f.add_word(w, 1)?;
        } else {
            g.add_word(w, 1)?;
        }
    }
    Ok(PIPair { f, g })
}

/// The Capelli pair: even and odd permutation sums of
/// x_{s(1)} y1 x_{s(2)} y2 ... x_{s(t)} yt.
pub fn capelli_pair(t: usize) -> Result<PIPair> {
    if t < 1 {
        return Err(Error::InvalidInput("capelli pair needs t >= 1".into()));
    }
    let mut f = NCPoly::zero(t, t);
    let mut g = NCPoly::zero(t, t);
    for p in perms(t) {
        let mut w: Word = Vec::with_capacity(2 * t);
        for (k, &i) in p.iter().enumerate() {
            w.push(Letter::X(i));
            w.push(Letter::Y(k));
        }
        if perm_sign(&p) {
            f.add_word(w, 1)?;
        } else {
            g.add_word(w, 1)?;
        }
    }
    Ok(PIPair { f, g })
}

/// The t-alternating pair built from a multilinear template: sum the
/// template over even and over odd permutations of its x-arguments.
pub fn alternating_pair(h: &NCPoly, t: usize) -> Result<PIPair> {
    if !h.is_multilinear_in_x(t) {
        return Err(Error::NotMultilinear(format!(
            "template is not multilinear in x1..x{t}"
        )));
    }
    let (_, ny) = h.arity();
    let mut f = NCPoly::zero(t, ny);
    let mut g = NCPoly::zero(t, ny);
    for p in perms(t) {
        for (w, &c) in h.monomials() {
            let renamed: Word = w
                .iter()
                .map(|l| match l {
                    Letter::X(i) => Letter::X(p[*i]),
                    y => *y,
                })
                .collect();
            if perm_sign(&p) {
                f.add_word(renamed, c)?;
            } else {
                g.add_word(renamed, c)?;
            }
        }
    }
    Ok(PIPair { f, g })
}

/// Verdict of a sampling check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    HoldsOnSamples { trials: u64 },
    Counterexample { trial: u64, xs: Vec<TropMatrix>, ys: Vec<TropMatrix> },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::HoldsOnSamples { .. })
    }
}

/// Sample matrices and require exact equality of the two evaluations.
pub fn check_pi(
    pair: &PIPair,
    desc: &SortSemiring,
    n: usize,
    trials: u64,
    seed: u64,
) -> Result<Verdict> {
    let (nx, ny) = pair.arity();
    for trial in 0..trials {
        let mut r = trial_rng(seed, trial);
        let xs: Vec<TropMatrix> = (0..nx)
            .map(|_| sample_matrix(desc, &mut r, n, LayerMode::Mixed, -10, 10))
            .collect();
        let ys: Vec<TropMatrix> = (0..ny)
            .map(|_| sample_matrix(desc, &mut r, n, LayerMode::Mixed, -10, 10))
            .collect();
        if nc_eval(&pair.f, &xs, &ys)? != nc_eval(&pair.g, &xs, &ys)? {
            return Ok(Verdict::Counterexample { trial, xs, ys });
        }
    }
    Ok(Verdict::HoldsOnSamples { trials })
}

/// Check a t-alternating pair on arguments spanned by the given
/// generators: each x-argument is sampled as a tangible-coefficient
/// combination of the generators.
pub fn spanned_alternating_check(
    pair: &PIPair,
    generators: &[TropMatrix],
    trials: u64,
    seed: u64,
) -> Result<Verdict> {
    let (nx, ny) = pair.arity();
    let first = generators
        .first()
        .ok_or_else(|| Error::ArityMismatch("need at least one generator".into()))?;
    let n = first.require_square()?;
    let desc = first.descriptor().clone();
    for trial in 0..trials {
        let mut r = trial_rng(seed, trial);
        let mut xs = Vec::with_capacity(nx);
        for _ in 0..nx {
            let mut acc = TropMatrix::zero(desc.clone(), n, n);
            for gmat in generators {
                let c = LayeredScalar::tangible(&desc, sample_value(&mut r, -10, 10));
                acc = mat_add(&acc, &scalar_mul(&c, gmat)?)?;
            }
            xs.push(acc);
        }
        let ys: Vec<TropMatrix> = (0..ny)
            .map(|_| sample_matrix(&desc, &mut r, n, LayerMode::Mixed, -10, 10))
            .collect();
        if nc_eval(&pair.f, &xs, &ys)? != nc_eval(&pair.g, &xs, &ys)? {
            return Ok(Verdict::Counterexample { trial, xs, ys });
        }
    }
    Ok(Verdict::HoldsOnSamples { trials })
}

/// The matrix unit e_{i,j} (0-indexed) with the unit scalar at (i, j).
pub fn matrix_unit(desc: &SortSemiring, n: usize, i: usize, j: usize) -> TropMatrix {
    let mut m = TropMatrix::zero(desc.clone(), n, n);
    m.set(i, j, LayeredScalar::unit(desc));
    m
}

/// Matrix-unit substitution separating the Capelli pair: x-arguments run
/// over all n^2 units, y-connectors glue them so that exactly the identity
/// permutation survives, giving (e_{1,1}, zero-matrix).
#[derive(Debug, Clone)]
pub struct CapelliWitness {
    pub xs: Vec<TropMatrix>,
    pub ys: Vec<TropMatrix>,
    pub value_f: TropMatrix,
    pub value_g: TropMatrix,
}

pub fn capelli_witness(desc: &SortSemiring, n: usize) -> Result<CapelliWitness> {
    if n == 0 || n > 3 {
        return Err(Error::TooLarge(format!(
            "capelli witness supported for 1 <= n <= 3, got {n}"
        )));
    }
    let t = n * n;
    // x_k = the k-th matrix unit in row-major order, starting at (0,0)
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let xs: Vec<TropMatrix> = cells
        .iter()
        .map(|&(i, j)| matrix_unit(desc, n, i, j))
        .collect();
    // y_k joins col(x_k) to row(x_{k+1}); the last joins back to row 0
    let mut ys = Vec::with_capacity(t);
    for k in 0..t {
        let (_, c) = cells[k];
        let next_row = if k + 1 < t { cells[k + 1].0 } else { 0 };
        ys.push(matrix_unit(desc, n, c, next_row));
    }

    // symbolic verification over matrix units: the product
    // x_{s(1)} y_1 ... x_{s(t)} y_t survives iff every chained index
    // matches, which forces s to be the identity
    let follow = |perm: &[usize]| -> Option<(usize, usize)> {
        let row = cells[perm[0]].0;
        let mut col = cells[perm[0]].1;
        for k in 0..t {
            // multiply by y_k
            let (yi, yj) = (cells[k].1, if k + 1 < t { cells[k + 1].0 } else { 0 });
            if col != yi {
                return None;
            }
            col = yj;
            if k + 1 < t {
                let (xi, xj) = cells[perm[k + 1]];
                if col != xi {
                    return None;
                }
                col = xj;
            }
        }
        Some((row, col))
    };
    let mut survivors_even = Vec::new();
    let mut survivors_odd = Vec::new();
    for p in (0..t).permutations(t) {
        if let Some(cell) = follow(&p) {
            if perm_sign(&p) {
                survivors_even.push((p, cell));
            } else {
                survivors_odd.push((p, cell));
            }
        }
    }
    if survivors_even.len() != 1 || !survivors_odd.is_empty() {
        return Err(Error::NotFound(
            "unit substitution did not isolate a single even survivor".into(),
        ));
    }
    let (perm, cell) = &survivors_even[0];
    debug_assert!(perm.iter().enumerate().all(|(i, &p)| i == p));
    debug_assert_eq!(*cell, (0, 0));

    Ok(CapelliWitness {
        value_f: matrix_unit(desc, n, 0, 0),
        value_g: TropMatrix::zero(desc.clone(), n, n),
        xs,
        ys,
    })
}

/// Witness that multilinear pairs with disjoint monomials of degree
/// m < 2n separate on matrix units: the staircase substitution sends the
/// lexicographically least monomial of f to a matrix unit and every other
/// monomial (in particular all of g) to zero.
#[derive(Debug, Clone)]
pub struct MinDegreeWitness {
    pub args: Vec<TropMatrix>,
    pub value_f: TropMatrix,
    pub value_g: TropMatrix,
    pub unit_pos: (usize, usize),
}

pub fn min_degree_witness(
    f: &NCPoly,
    g: &NCPoly,
    desc: &SortSemiring,
    n: usize,
) -> Result<MinDegreeWitness> {
    let (m, fy) = f.arity();
    let (gm, gy) = g.arity();
    if fy != 0 || gy != 0 {
        return Err(Error::InvalidInput("witness handles x-variables only".into()));
    }
    let m = m.max(gm);
    if !(f.is_multilinear_in_x(m) && g.is_multilinear_in_x(m)) {
        return Err(Error::NotMultilinear(format!(
            "both polynomials must be multilinear of degree {m}"
        )));
    }
    if f.shares_monomial(g) {
        return Err(Error::HypothesisViolated(
            "polynomials share a monomial".into(),
        ));
    }
    if m >= 2 * n {
        return Err(Error::HypothesisViolated(format!(
            "degree {m} is not below 2n = {}",
            2 * n
        )));
    }
    let lead = f
        .monomials()
        .next()
        .ok_or_else(|| Error::InvalidInput("f has no monomials".into()))?
        .0
        .clone();
    // staircase units e_{1,1}, e_{1,2}, e_{2,2}, e_{2,3}, ... assigned
    // along the chosen monomial
    let stair = |k: usize| -> (usize, usize) { (k / 2, (k + 1) / 2) };
    let mut args = vec![TropMatrix::zero(desc.clone(), n, n); m];
    for (k, l) in lead.iter().enumerate() {
        let (i, j) = stair(k);
        if let Letter::X(v) = l {
            args[*v] = matrix_unit(desc, n, i, j);
        }
    }
    let value_f = nc_eval(f, &args, &[])?;
    let value_g = nc_eval(g, &args, &[])?;
    let unit_pos = (0, m / 2);
    Ok(MinDegreeWitness {
        args,
        value_f,
        value_g,
        unit_pos,
    })
}

/// The built-in transfer identities.
#[derive(Debug, Clone)]
pub enum TransferIdentity {
    /// |AB| against |A||B|; homogeneous of degree 2n.
    DetMul,
    /// The adjoint polynomial against adj(A); degree n-1.
    AdjForm,
    /// adj(adj(A)) against |A|^{n-2} A; the cited degree is n-1.
    DoubleAdj,
    /// A caller-supplied signed pair evaluated as word polynomials.
    NcPair(SignedNCPoly, SignedNCPoly),
}

impl TransferIdentity {
    /// The degree the strong surpassing layer is raised to.
    pub fn default_degree(&self, n: usize) -> u32 {
        match self {
            TransferIdentity::DetMul => 2 * n as u32,
            TransferIdentity::AdjForm | TransferIdentity::DoubleAdj => n as u32 - 1,
            TransferIdentity::NcPair(p, _) => p
                .plus
                .monomials()
                .map(|(w, _)| w.len())
                .chain(p.minus.monomials().map(|(w, _)| w.len()))
                .max()
                .unwrap_or(1) as u32,
        }
    }

    fn num_args(&self) -> usize {
        match self {
            TransferIdentity::DetMul => 2,
            TransferIdentity::AdjForm | TransferIdentity::DoubleAdj => 1,
            TransferIdentity::NcPair(p, q) => {
                let (a, _) = p.plus.arity();
                let (b, _) = p.minus.arity();
                let (c, _) = q.plus.arity();
                let (d, _) = q.minus.arity();
                a.max(b).max(c).max(d)
            }
        }
    }

    /// Evaluate the unsigned sums of both sides on the given arguments.
    /// `ell` is the sampled layer floor, consumed by the adjoint form.
    fn eval_sides(&self, args: &[TropMatrix], ell: &SortLayer) -> Result<(TropMatrix, TropMatrix)> {
        let desc = args[0].descriptor().clone();
        let n = args[0].rows();
        match self {
            TransferIdentity::DetMul => {
                let prod = mat_mul(&args[0], &args[1])?;
                let lhs = det(&prod)?.value;
                let rhs = crate::scalar::lscalar_mul(
                    &desc,
                    &det(&args[0])?.value,
                    &det(&args[1])?.value,
                )?;
                let wrap = |v: LayeredScalar| {
                    TropMatrix::from_data(desc.clone(), 1, 1, vec![v]).expect("1x1")
                };
                Ok((wrap(lhs), wrap(rhs)))
            }
            TransferIdentity::AdjForm => adj_form_sides(&args[0], ell),
            TransferIdentity::DoubleAdj => {
                if n < 2 {
                    return Err(Error::TooLarge("double adjoint needs n >= 2".into()));
                }
                let a = &args[0];
                let lhs = adjoint(&adjoint(a)?)?;
                let dpow = lscalar_pow(&desc, &det(a)?.value, n as u32 - 2)?;
                let rhs = scalar_mul(&dpow, a)?;
                Ok((lhs, rhs))
            }
            TransferIdentity::NcPair(p, q) => {
                let lhs = mat_add(&nc_eval(&p.plus, args, &[])?, &nc_eval(&p.minus, args, &[])?)?;
                let rhs = mat_add(&nc_eval(&q.plus, args, &[])?, &nc_eval(&q.minus, args, &[])?)?;
                Ok((lhs, rhs))
            }
        }
    }
}

/// Evaluate the adjoint polynomial of a matrix: the characteristic
/// polynomial with the constant term dropped, degrees shifted down by one,
/// and the coefficient that lands on lambda^{j-1} re-tagged to layer
/// ell^{n-j}.
pub fn adj_form_sides(a: &TropMatrix, ell: &SortLayer) -> Result<(TropMatrix, TropMatrix)> {
    let n = a.require_square()?;
    let desc = a.descriptor().clone();
    let f = char_poly(a)?;
    let mut shifted = crate::poly::TropPoly::zero(desc.clone(), 1);
    for j in 1..=n as u64 {
        let c = f.coeff(&[j]);
        if c.is_zero() {
            continue;
        }
        let layer = desc.layer_nat_pow(ell, (n as u64 - j) as u32)?;
        shifted.insert_term(vec![j - 1], c.retag(&desc, layer)?)?;
    }
    let lhs = crate::matrix::poly_at_matrix(&shifted, a)?;
    let rhs = adjoint(a)?;
    Ok((lhs, rhs))
}

/// Transfer verdict: sample ell-layered matrices and require entrywise
/// strong surpassing at layer ell^d.
pub fn transfer_check(
    identity: &TransferIdentity,
    desc: &SortSemiring,
    n: usize,
    d: u32,
    ell: &SortLayer,
    trials: u64,
    seed: u64,
) -> Result<Verdict> {
    let ell_floor = match ell {
        SortLayer::Fin(v) => *v,
        _ => {
            return Err(Error::InvalidInput(
                "layer floors are finite naturals".into(),
            ))
        }
    };
    let threshold = desc.layer_nat_pow(ell, d)?;
    let nargs = identity.num_args();
    for trial in 0..trials {
        let mut r = trial_rng(seed, trial);
        let args: Vec<TropMatrix> = (0..nargs)
            .map(|_| sample_matrix(desc, &mut r, n, LayerMode::AtLeast(ell_floor), -10, 10))
            .collect();
        let (lhs, rhs) = identity.eval_sides(&args, ell)?;
        let mut ok = true;
        'entries: for i in 0..lhs.rows() {
            for j in 0..lhs.cols() {
                if !strong_l_surpass(desc, lhs.get(i, j), rhs.get(i, j), &threshold)? {
                    ok = false;
                    break 'entries;
                }
            }
        }
        if !ok {
            return Ok(Verdict::Counterexample {
                trial,
                xs: args,
                ys: vec![],
            });
        }
    }
    Ok(Verdict::HoldsOnSamples { trials })
}

/// The 2x2 max-plus semigroup identity
/// AB^2A AB AB^2A = AB^2A BA AB^2A, sampled over tangible matrices of the
/// trivial descriptor.
pub fn semigroup_identity_2x2(trials: u64, seed: u64) -> Result<Verdict> {
    let desc = SortSemiring::Trivial;
    for trial in 0..trials {
        let mut r = trial_rng(seed, trial);
        let a = sample_matrix(&desc, &mut r, 2, LayerMode::Tangible, -10, 10);
        let b = sample_matrix(&desc, &mut r, 2, LayerMode::Tangible, -10, 10);
        if !semigroup_identity_holds(&a, &b)? {
            return Ok(Verdict::Counterexample {
                trial,
                xs: vec![a, b],
                ys: vec![],
            });
        }
    }
    Ok(Verdict::HoldsOnSamples { trials })
}

/// Both sides of the 2x2 semigroup identity for one pair.
pub fn semigroup_identity_holds(a: &TropMatrix, b: &TropMatrix) -> Result<bool> {
    let ab2a = mat_mul(&mat_mul(a, &mat_pow(b, 2)?)?, a)?;
    let ab = mat_mul(a, b)?;
    let ba = mat_mul(b, a)?;
    let lhs = mat_mul(&mat_mul(&ab2a, &ab)?, &ab2a)?;
    let rhs = mat_mul(&mat_mul(&ab2a, &ba)?, &ab2a)?;
    Ok(lhs == rhs)
}

/// Parse one noncommutative polynomial from the text grammar:
/// terms separated by `+`, each an optional natural coefficient `c*`
/// followed by a word of letters like `x1 x2 y1`; `0` is the zero
/// polynomial.
pub fn parse_nc_poly(s: &str) -> Result<NCPoly> {
    let s = s.trim();
    let mut words: Vec<(Word, u64)> = Vec::new();
    let mut nx = 0usize;
    let mut ny = 0usize;
    if s != "0" {
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse("empty term".into()));
            }
            let (coeff, word_text) = match term.split_once('*') {
                Some((c, w)) => (
                    c.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?,
                    w,
                ),
                None => (1, term),
            };
            let mut word = Word::new();
            for tok in word_text.split_whitespace() {
                let (class, idx) = tok.split_at(1);
                let idx: usize = idx
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable {tok:?}")))?;
                if idx == 0 {
                    return Err(Error::Parse(format!("variables are 1-indexed: {tok:?}")));
                }
                match class {
                    "x" => {
                        nx = nx.max(idx);
                        word.push(Letter::X(idx - 1));
                    }
                    "y" => {
                        ny = ny.max(idx);
                        word.push(Letter::Y(idx - 1));
                    }
                    _ => return Err(Error::Parse(format!("bad variable {tok:?}"))),
                }
            }
            if word.is_empty() {
                return Err(Error::Parse(format!("term {term:?} has no variables")));
            }
            words.push((word, coeff));
        }
    }
    NCPoly::from_words(nx, ny, words)
}

/// Parse a pair `lhs == rhs`, harmonizing the arities.
pub fn parse_pi_pair(s: &str) -> Result<PIPair> {
    let (lhs, rhs) = s
        .split_once("==")
        .ok_or_else(|| Error::Parse("expected `lhs == rhs`".into()))?;
    let mut f = parse_nc_poly(lhs)?;
    let mut g = parse_nc_poly(rhs)?;
    let (fx, fy) = f.arity();
    let (gx, gy) = g.arity();
    f.nx = fx.max(gx);
    f.ny = fy.max(gy);
    g.nx = f.nx;
    g.ny = f.ny;
    Ok(PIPair { f, g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::l_surpass;

    fn sup() -> SortSemiring {
        SortSemiring::TwoLayer
    }

    #[test]
    fn nc_eval_examples() {
        let d = sup();
        let a = TropMatrix::tangible_from_ints(&d, &[&[0, 0], &[1, 2]]);
        let id = TropMatrix::identity(d.clone(), 2);
        let p = parse_nc_poly("x1 x2").unwrap();
        assert_eq!(nc_eval(&p, &[a.clone(), id], &[]).unwrap(), a);

        // repeated addition doubles the layer
        let q = parse_nc_poly("2*x1").unwrap();
        let s = TropMatrix::from_data(
            SortSemiring::Naturals,
            1,
            1,
            vec![LayeredScalar::lint(4, 1)],
        )
        .unwrap();
        let out = nc_eval(&q, &[s], &[]).unwrap();
        assert_eq!(*out.get(0, 0), LayeredScalar::lint(4, 2));

        let z = NCPoly::zero(1, 0);
        let out = nc_eval(&z, &[TropMatrix::identity(d.clone(), 2)], &[]).unwrap();
        assert!(out.entries().all(|e| e.is_zero()));
    }

    #[test]
    fn standard_and_capelli_construction() {
        let st2 = standard_pair(2).unwrap();
        assert_eq!(st2.f.to_string(), "x1 x2");
        assert_eq!(st2.g.to_string(), "x2 x1");
        let st3 = standard_pair(3).unwrap();
        assert_eq!(st3.f.num_monomials(), 3);
        assert_eq!(st3.g.num_monomials(), 3);
        let c2 = capelli_pair(2).unwrap();
        assert_eq!(c2.f.to_string(), "x1 y1 x2 y2");
        assert_eq!(c2.g.to_string(), "x2 y1 x1 y2");
    }

    #[test]
    fn alternating_pair_from_template() {
        let h = parse_nc_poly("x1 x2").unwrap();
        let pair = alternating_pair(&h, 2).unwrap();
        assert_eq!(pair.f.to_string(), "x1 x2");
        assert_eq!(pair.g.to_string(), "x2 x1");
        let bad = parse_nc_poly("x1 x1").unwrap();
        assert!(matches!(
            alternating_pair(&bad, 2),
            Err(Error::NotMultilinear(_))
        ));
    }

    #[test]
    fn check_pi_scalars_commute_matrices_do_not() {
        let st2 = standard_pair(2).unwrap();
        let d = sup();
        assert!(check_pi(&st2, &d, 1, 200, 5).unwrap().holds());
        match check_pi(&st2, &d, 2, 200, 5).unwrap() {
            Verdict::Counterexample { .. } => {}
            v => panic!("expected a counterexample, got {v:?}"),
        }
    }

    #[test]
    fn spanned_check_examples() {
        let d = sup();
        let st2 = standard_pair(2).unwrap();
        let g = TropMatrix::tangible_from_ints(&d, &[&[0, 3], &[-1, 2]]);
        assert!(spanned_alternating_check(&st2, &[g.clone()], 100, 9)
            .unwrap()
            .holds());
        let st3 = standard_pair(3).unwrap();
        let g2 = TropMatrix::tangible_from_ints(&d, &[&[1, 0], &[0, 0]]);
        assert!(
            spanned_alternating_check(&st3, &[g.clone(), g2.clone()], 100, 9)
                .unwrap()
                .holds()
        );
        // two free generators violate the hypothesis of st2
        match spanned_alternating_check(&st2, &[g, g2], 200, 9).unwrap() {
            Verdict::Counterexample { .. } => {}
            v => panic!("expected a counterexample, got {v:?}"),
        }
    }

    #[test]
    fn capelli_witness_examples() {
        let d = sup();
        for n in 1..=3usize {
            let w = capelli_witness(&d, n).unwrap();
            assert_eq!(w.value_f, matrix_unit(&d, n, 0, 0));
            assert!(w.value_g.entries().all(|e| e.is_zero()));
        }
        // cross-check by full evaluation at n <= 2
        for n in 1..=2usize {
            let w = capelli_witness(&d, n).unwrap();
            let pair = capelli_pair(n * n).unwrap();
            assert_eq!(nc_eval(&pair.f, &w.xs, &w.ys).unwrap(), w.value_f);
            assert_eq!(nc_eval(&pair.g, &w.xs, &w.ys).unwrap(), w.value_g);
        }
        assert!(capelli_witness(&d, 4).is_err());
    }

    #[test]
    fn min_degree_witness_examples() {
        let d = sup();
        let f = parse_nc_poly("x1 x2").unwrap();
        let g = parse_nc_poly("x2 x1").unwrap();
        let w = min_degree_witness(&f, &g, &d, 2).unwrap();
        assert_eq!(w.value_f, matrix_unit(&d, 2, 0, 1));
        assert!(w.value_g.entries().all(|e| e.is_zero()));

        let st3 = standard_pair(3).unwrap();
        let w = min_degree_witness(&st3.f, &st3.g, &d, 2).unwrap();
        assert!(!w.value_f.entries().all(|e| e.is_zero()));
        assert!(w.value_g.entries().all(|e| e.is_zero()));

        let st4 = standard_pair(4).unwrap();
        assert!(matches!(
            min_degree_witness(&st4.f, &st4.g, &d, 2),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn split_examples() {
        let x12: Word = vec![Letter::X(0), Letter::X(1)];
        let x21: Word = vec![Letter::X(1), Letter::X(0)];
        let s = split_integer_poly(2, 0, &[(x12.clone(), 1), (x21.clone(), -1)]).unwrap();
        assert_eq!(s.plus.to_string(), "x1 x2");
        assert_eq!(s.minus.to_string(), "x2 x1");
        let doubled = split_integer_poly(1, 0, &[(vec![Letter::X(0)], 2)]).unwrap();
        assert_eq!(doubled.plus.to_string(), "2*x1");
        assert!(doubled.minus.is_zero());
    }

    #[test]
    fn semigroup_identity_examples() {
        let d = SortSemiring::Trivial;
        let id = TropMatrix::identity(d.clone(), 2);
        assert!(semigroup_identity_holds(&id, &id).unwrap());
        let a = TropMatrix::tangible_from_ints(&d, &[&[0, 0], &[1, 2]]);
        let b = TropMatrix::tangible_from_ints(&d, &[&[1, 0], &[0, 0]]);
        assert!(semigroup_identity_holds(&a, &b).unwrap());
        assert!(semigroup_identity_2x2(500, 23).unwrap().holds());
    }

    #[test]
    fn niv_guard_counterexample() {
        // mixed layers defeat the naive surpassing claims
        let d = SortSemiring::Naturals;
        let a = TropMatrix::from_rows(
            d.clone(),
            vec![
                vec![LayeredScalar::lint(10, 1), LayeredScalar::lint(4, 2)],
                vec![LayeredScalar::lint(4, 2), LayeredScalar::lint(0, 10)],
            ],
        )
        .unwrap();
        let det_a = det(&a).unwrap().value;
        let det_a2 = det(&mat_mul(&a, &a).unwrap()).unwrap().value;
        let det_a_sq = crate::scalar::lscalar_mul(&d, &det_a, &det_a).unwrap();
        assert_eq!(det_a2, LayeredScalar::lint(28, 8));
        assert_eq!(det_a_sq, LayeredScalar::lint(20, 100));
        assert!(!l_surpass(&d, &det_a2, &det_a_sq).unwrap());
        assert!(!l_surpass(&d, &det_a2, &det_a).unwrap());
        // strong surpassing at the floor the matrix fails to have
        assert!(!strong_l_surpass(&d, &det_a2, &det_a_sq, &SortLayer::Fin(16)).unwrap());
        // the floor the matrix does have keeps the transfer theorem intact
        assert!(strong_l_surpass(&d, &det_a2, &det_a_sq, &SortLayer::Fin(1)).unwrap());
    }

    #[test]
    fn parse_pair_round_trip() {
        let pair = parse_pi_pair("x1 x2 == x2 x1").unwrap();
        assert_eq!(pair.f.to_string(), "x1 x2");
        assert_eq!(pair.g.to_string(), "x2 x1");
        assert!(parse_pi_pair("x1 x2").is_err());
        assert!(parse_nc_poly("z1").is_err());
        assert!(parse_nc_poly("0").unwrap().is_zero());
    }
}
