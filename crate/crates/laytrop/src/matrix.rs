//! Square and rectangular matrices over layered scalars: semiring matrix
//! arithmetic, the permanent-determinant with attaining permutations,
//! minors and the adjoint, quasi-identities, equation solving, and
//! characteristic polynomials.

use crate::error::{Error, Result};
use crate::par;
use crate::poly::{poly_add, poly_mul, TropPoly};
use crate::scalar::{lscalar_add, lscalar_mul, LayeredScalar};
use crate::semiring::SortSemiring;

/// Default cap on exhaustive permutation enumeration.
pub const DET_CAP_DEFAULT: usize = 9;

/// Dense row-major matrix of layered scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropMatrix {
    desc: SortSemiring,
    rows: usize,
    cols: usize,
    data: Vec<LayeredScalar>,
}

/// Determinant report: the permanent value, every attaining permutation
/// (as images of 0..n), and the tangibility flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetReport {
    pub value: LayeredScalar,
    pub attaining: Vec<Vec<usize>>,
    pub tangible: bool,
}

impl TropMatrix {
    pub fn from_data(
        desc: SortSemiring,
        rows: usize,
        cols: usize,
        data: Vec<LayeredScalar>,
    ) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(TropMatrix {
            desc,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(desc: SortSemiring, rows: Vec<Vec<LayeredScalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(TropMatrix {
            desc,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Tangible matrix from integer values (convenience for tests and
    /// the max-plus examples).
    pub fn tangible_from_ints(desc: &SortSemiring, rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| LayeredScalar::tint(desc, v)))
            .collect();
        TropMatrix {
            desc: desc.clone(),
            rows: rows.len(),
            cols: rows.first().map(|r| r.len()).unwrap_or(0),
            data,
        }
    }

    pub fn zero(desc: SortSemiring, rows: usize, cols: usize) -> Self {
        TropMatrix {
            desc,
            rows,
            cols,
            data: vec![LayeredScalar::Zero; rows * cols],
        }
    }

    pub fn identity(desc: SortSemiring, n: usize) -> Self {
        let mut m = TropMatrix::zero(desc.clone(), n, n);
        for i in 0..n {
            m.set(i, i, LayeredScalar::unit(&desc));
        }
        m
    }

    pub fn descriptor(&self) -> &SortSemiring {
        &self.desc
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LayeredScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LayeredScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[LayeredScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<LayeredScalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &LayeredScalar> {
        self.data.iter()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_same_desc(&self, other: &TropMatrix) -> Result<()> {
        if self.desc != other.desc {
            return Err(Error::MismatchedDescriptor(format!(
                "{} vs {}",
                self.desc, other.desc
            )));
        }
        Ok(())
    }

    pub fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        Ok(self.rows)
    }
}

pub fn mat_add(a: &TropMatrix, b: &TropMatrix) -> Result<TropMatrix> {
    a.check_same_desc(b)?;
    if a.rows != b.rows || a.cols != b.cols {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} + {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let data = a
        .data
        .iter()
        .zip(b.data.iter())
        .map(|(x, y)| lscalar_add(&a.desc, x, y))
        .collect::<Result<_>>()?;
    TropMatrix::from_data(a.desc.clone(), a.rows, a.cols, data)
}

pub fn mat_mul(a: &TropMatrix, b: &TropMatrix) -> Result<TropMatrix> {
    a.check_same_desc(b)?;
    if a.cols != b.rows {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} * {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = TropMatrix::zero(a.desc.clone(), a.rows, b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = LayeredScalar::Zero;
            for k in 0..a.cols {
                let p = lscalar_mul(&a.desc, a.get(i, k), b.get(k, j))?;
                acc = lscalar_add(&a.desc, &acc, &p)?;
            }
            out.set(i, j, acc);
        }
    }
    Ok(out)
}

pub fn transpose(a: &TropMatrix) -> TropMatrix {
    let mut out = TropMatrix::zero(a.desc.clone(), a.cols, a.rows);
    for i in 0..a.rows {
        for j in 0..a.cols {
            out.set(j, i, a.get(i, j).clone());
        }
    }
    out
}

pub fn scalar_mul(c: &LayeredScalar, a: &TropMatrix) -> Result<TropMatrix> {
    let data = a
        .data
        .iter()
        .map(|x| lscalar_mul(&a.desc, c, x))
        .collect::<Result<_>>()?;
    TropMatrix::from_data(a.desc.clone(), a.rows, a.cols, data)
}

pub fn mat_pow(a: &TropMatrix, e: u32) -> Result<TropMatrix> {
    let n = a.require_square()?;
    let mut out = TropMatrix::identity(a.desc.clone(), n);
    for _ in 0..e {
        out = mat_mul(&out, a)?;
    }
    Ok(out)
}

/// Matrix-vector product.
pub fn mat_vec(a: &TropMatrix, v: &[LayeredScalar]) -> Result<Vec<LayeredScalar>> {
    if v.len() != a.cols {
        return Err(Error::ShapeMismatch(format!(
            "vector of dimension {} against {} columns",
            v.len(),
            a.cols
        )));
    }
    let mut out = Vec::with_capacity(a.rows);
    for i in 0..a.rows {
        let mut acc = LayeredScalar::Zero;
        for k in 0..a.cols {
            let p = lscalar_mul(&a.desc, a.get(i, k), &v[k])?;
            acc = lscalar_add(&a.desc, &acc, &p)?;
        }
        out.push(acc);
    }
    Ok(out)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Permutation with the given factorial-number-system index, as images of
/// 0..n in one-line notation.
pub fn perm_by_index(n: usize, mut idx: usize) -> Vec<usize> {
    let mut avail: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for pos in (1..=n).rev() {
        let f = factorial(pos - 1);
        let k = idx / f;
        idx %= f;
        out.push(avail.remove(k));
    }
    out
}

fn diag_product(a: &TropMatrix, perm: &[usize]) -> Result<LayeredScalar> {
    let mut p = LayeredScalar::unit(&a.desc);
    for (i, &j) in perm.iter().enumerate() {
        if a.get(i, j).is_zero() {
            return Ok(LayeredScalar::Zero);
        }
        p = lscalar_mul(&a.desc, &p, a.get(i, j))?;
    }
    Ok(p)
}

/// Permanent-determinant with the default enumeration cap.
pub fn det(a: &TropMatrix) -> Result<DetReport> {
    det_capped(a, DET_CAP_DEFAULT)
}

/// Permanent-determinant by exhaustive enumeration of S_n. The layered sum
/// aggregates the layers of every attaining permutation, which is why a
/// single optimal-assignment track is not enough.
pub fn det_capped(a: &TropMatrix, cap: usize) -> Result<DetReport> {
    let n = a.require_square()?;
    if n > cap {
        return Err(Error::TooLarge(format!(
            "determinant of a {n}x{n} matrix exceeds the cap {cap}"
        )));
    }
    if n == 0 {
        return Ok(DetReport {
            value: LayeredScalar::unit(&a.desc),
            attaining: vec![vec![]],
            tangible: true,
        });
    }
    let total = factorial(n);
    let value = par::map_reduce(
        total,
        |k| diag_product(a, &perm_by_index(n, k)),
        || Ok(LayeredScalar::Zero),
        |x, y| match (x, y) {
            (Ok(x), Ok(y)) => lscalar_add(&a.desc, &x, &y),
            (Err(e), _) | (_, Err(e)) => Err(e),
        },
    )?;
    // every product was computable above, so the second pass cannot fail
    let attaining = par::filter_map_collect(total, |k| {
        let perm = perm_by_index(n, k);
        let p = diag_product(a, &perm).expect("computable per first pass");
        if crate::scalar::nu_eq(&p, &value) {
            Some((k, perm))
        } else {
            None
        }
    });
    let mut attaining: Vec<(usize, Vec<usize>)> = attaining;
    attaining.sort_by_key(|(k, _)| *k);
    let tangible = value.is_tangible(&a.desc);
    Ok(DetReport {
        value,
        attaining: attaining.into_iter().map(|(_, p)| p).collect(),
        tangible,
    })
}

/// Sequential determinant, kept for cross-checks and benches.
pub fn det_seq(a: &TropMatrix, cap: usize) -> Result<DetReport> {
    let n = a.require_square()?;
    if n > cap {
        return Err(Error::TooLarge(format!(
            "determinant of a {n}x{n} matrix exceeds the cap {cap}"
        )));
    }
    if n == 0 {
        return Ok(DetReport {
            value: LayeredScalar::unit(&a.desc),
            attaining: vec![vec![]],
            tangible: true,
        });
    }
    let total = factorial(n);
    let value = par::map_reduce_seq(
        total,
        |k| diag_product(a, &perm_by_index(n, k)).expect("validated entries"),
        || LayeredScalar::Zero,
        |x, y| lscalar_add(&a.desc, &x, &y).expect("validated entries"),
    );
    let mut attaining = Vec::new();
    for k in 0..total {
        let perm = perm_by_index(n, k);
        if crate::scalar::nu_eq(&diag_product(a, &perm)?, &value) {
            attaining.push(perm);
        }
    }
    let tangible = value.is_tangible(&a.desc);
    Ok(DetReport {
        value,
        attaining,
        tangible,
    })
}

/// The matrix with row i and column j deleted (0-indexed).
pub fn minor(a: &TropMatrix, i: usize, j: usize) -> Result<TropMatrix> {
    let n = a.require_square()?;
    if i >= n || j >= n {
        return Err(Error::IndexOutOfRange(format!(
            "minor ({i},{j}) of a {n}x{n} matrix"
        )));
    }
    let mut data = Vec::with_capacity((n - 1) * (n - 1));
    for r in 0..n {
        if r == i {
            continue;
        }
        for c in 0..n {
            if c == j {
                continue;
            }
            data.push(a.get(r, c).clone());
        }
    }
    TropMatrix::from_data(a.desc.clone(), n - 1, n - 1, data)
}

/// Adjoint: the transpose of the matrix of minor determinants.
pub fn adjoint(a: &TropMatrix) -> Result<TropMatrix> {
    let n = a.require_square()?;
    let mut out = TropMatrix::zero(a.desc.clone(), n, n);
    for i in 0..n {
        for j in 0..n {
            let d = det(&minor(a, i, j)?)?.value;
            out.set(j, i, d);
        }
    }
    Ok(out)
}

/// adj(A) with every entry divided by the (tangible) determinant value.
pub fn a_nabla(a: &TropMatrix) -> Result<TropMatrix> {
    let report = det(a)?;
    if !report.tangible {
        return Err(Error::SingularMatrix);
    }
    let dv = report.value.nu_value().expect("tangible").clone();
    let adj = adjoint(a)?;
    let data = adj
        .data
        .iter()
        .map(|x| match x {
            LayeredScalar::Zero => LayeredScalar::Zero,
            LayeredScalar::El { layer, value } => LayeredScalar::El {
                layer: layer.clone(),
                value: value - &dv,
            },
        })
        .collect();
    TropMatrix::from_data(a.desc.clone(), adj.rows, adj.cols, data)
}

/// The pair of quasi-identities (A * Anabla, Anabla * A) of a regular matrix.
pub fn quasi_identity(a: &TropMatrix) -> Result<(TropMatrix, TropMatrix)> {
    let nb = a_nabla(a)?;
    Ok((mat_mul(a, &nb)?, mat_mul(&nb, a)?))
}

/// Solve A x |= v for tangible x by re-tagging the values of Anabla * v.
pub fn cramer_solve(a: &TropMatrix, v: &[LayeredScalar]) -> Result<Vec<LayeredScalar>> {
    let n = a.require_square()?;
    if v.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "rhs of dimension {} for a {n}x{n} system",
            v.len()
        )));
    }
    if v.iter().any(|x| x.is_ghost(&a.desc)) {
        return Err(Error::NonTangibleRHS);
    }
    let nb = a_nabla(a)?;
    let w = mat_vec(&nb, v)?;
    Ok(w.into_iter().map(|x| x.retag_tangible(&a.desc)).collect())
}

/// Trace: the sum of the diagonal.
pub fn trace(a: &TropMatrix) -> Result<LayeredScalar> {
    let n = a.require_square()?;
    let mut acc = LayeredScalar::Zero;
    for i in 0..n {
        acc = lscalar_add(&a.desc, &acc, a.get(i, i))?;
    }
    Ok(acc)
}

/// Characteristic polynomial |lambda I + A|, computed as the permanent of
/// the polynomial-entry matrix.
pub fn char_poly(a: &TropMatrix) -> Result<TropPoly> {
    char_poly_capped(a, DET_CAP_DEFAULT)
}

pub fn char_poly_capped(a: &TropMatrix, cap: usize) -> Result<TropPoly> {
    let n = a.require_square()?;
    if n > cap {
        return Err(Error::TooLarge(format!(
            "characteristic polynomial of a {n}x{n} matrix exceeds the cap {cap}"
        )));
    }
    let entry_poly = |i: usize, j: usize| -> Result<TropPoly> {
        let mut p = TropPoly::zero(a.desc.clone(), 1);
        p.insert_term(vec![0], a.get(i, j).clone())?;
        if i == j {
            p.insert_term(vec![1], LayeredScalar::unit(&a.desc))?;
        }
        Ok(p)
    };
    let mut acc = TropPoly::zero(a.desc.clone(), 1);
    for k in 0..factorial(n) {
        let perm = perm_by_index(n, k);
        let mut prod = TropPoly::constant(a.desc.clone(), 1, LayeredScalar::unit(&a.desc))?;
        for (i, &j) in perm.iter().enumerate() {
            prod = poly_mul(&prod, &entry_poly(i, j)?)?;
            if prod.is_zero() {
                break;
            }
        }
        acc = poly_add(&acc, &prod)?;
    }
    Ok(acc)
}

/// Characteristic polynomial with every coefficient re-tagged tangible.
pub fn tangible_char_poly(a: &TropMatrix) -> Result<TropPoly> {
    Ok(char_poly(a)?.retag_tangible())
}

/// Evaluate a univariate polynomial at the matrix: scalar coefficients act
/// through the identity, powers are semiring matrix powers.
pub fn poly_at_matrix(f: &TropPoly, a: &TropMatrix) -> Result<TropMatrix> {
    if f.nvars() != 1 {
        return Err(Error::NotUnivariate);
    }
    let n = a.require_square()?;
    let mut acc = TropMatrix::zero(a.desc.clone(), n, n);
    let mut power = TropMatrix::identity(a.desc.clone(), n);
    let mut next_exp: u64 = 0;
    for (e, c) in f.terms() {
        let j = e[0];
        while next_exp < j {
            power = mat_mul(&power, a)?;
            next_exp += 1;
        }
        acc = mat_add(&acc, &scalar_mul(c, &power)?)?;
    }
    Ok(acc)
}

/// A satisfies f when f(A) lands entirely in the ghost-or-zero ideal.
pub fn satisfies_poly(a: &TropMatrix, f: &TropPoly) -> Result<bool> {
    let value = poly_at_matrix(f, a)?;
    let ok = value.data.iter().all(|x| x.is_ghost_or_zero(&value.desc));
    Ok(ok)
}

/// Entrywise supertropical surpassing of matrices.
pub fn mat_ghost_surpass(a: &TropMatrix, b: &TropMatrix) -> Result<bool> {
    a.check_same_desc(b)?;
    if a.rows != b.rows || a.cols != b.cols {
        return Err(Error::ShapeMismatch("surpassing needs equal shapes".into()));
    }
    Ok(a.data
        .iter()
        .zip(b.data.iter())
        .all(|(x, y)| crate::scalar::ghost_surpass(&a.desc, x, y)))
}
