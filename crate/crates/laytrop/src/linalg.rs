//! Tropical dependence, rank, bases, ghost annihilators, eigen theory,
//! and supertropical bilinear forms.
//!
//! Dependence of k vectors in dimension n is decided through determinants:
//! the square case is the singularity criterion, fewer vectors use the
//! all-minors criterion, and witnesses come from a bounded grid search
//! whose candidate coefficients are differences of entry values (chained
//! once more for three or more vectors).

use crate::error::{Error, Result};
use crate::matrix::{adjoint, det, mat_add, mat_pow, mat_vec, scalar_mul, tangible_char_poly, TropMatrix};
use crate::poly::corner_roots_univariate;
use crate::rat::Rat;
use crate::scalar::{ghost_surpass, lscalar_add, lscalar_mul, lscalar_pow, LayeredScalar};
use crate::semiring::SortSemiring;
use itertools::Itertools;

/// Cap on the number of vectors rank computations will brute-force.
pub const RANK_CAP: usize = 16;

/// Cap on ghost-annihilator searches.
pub const ANNIHILATOR_CAP: usize = 4;

/// A finite list of equal-dimension vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSet {
    desc: SortSemiring,
    dim: usize,
    vectors: Vec<Vec<LayeredScalar>>,
}

impl VectorSet {
    pub fn new(desc: SortSemiring, dim: usize, vectors: Vec<Vec<LayeredScalar>>) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != dim) {
            return Err(Error::ShapeMismatch(format!(
                "vectors must all have dimension {dim}"
            )));
        }
        Ok(VectorSet { desc, dim, vectors })
    }

    pub fn descriptor(&self) -> &SortSemiring {
        &self.desc
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<LayeredScalar>] {
        &self.vectors
    }

    pub fn subset(&self, idxs: &[usize]) -> VectorSet {
        VectorSet {
            desc: self.desc.clone(),
            dim: self.dim,
            vectors: idxs.iter().map(|&i| self.vectors[i].clone()).collect(),
        }
    }

    /// Rows of a matrix as a vector set.
    pub fn from_matrix_rows(a: &TropMatrix) -> VectorSet {
        VectorSet {
            desc: a.descriptor().clone(),
            dim: a.cols(),
            vectors: (0..a.rows()).map(|i| a.row(i).to_vec()).collect(),
        }
    }

    fn as_matrix(&self) -> TropMatrix {
        TropMatrix::from_rows(self.desc.clone(), self.vectors.clone()).expect("validated shape")
    }
}

fn vec_is_tangible_or_zero(desc: &SortSemiring, v: &[LayeredScalar]) -> bool {
    v.iter().all(|x| !x.is_ghost(desc))
}

fn vec_is_ghost_or_zero(desc: &SortSemiring, v: &[LayeredScalar]) -> bool {
    v.iter().all(|x| x.is_ghost_or_zero(desc))
}

fn vec_is_zero(v: &[LayeredScalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Tropical dependence decision (no witness): singular square determinant,
/// or all k x k column minors singular for k < n vectors.
pub fn is_dependent(s: &VectorSet) -> Result<bool> {
    let k = s.len();
    if k == 0 {
        return Ok(false);
    }
    if k > s.dim {
        return Ok(true);
    }
    let m = s.as_matrix();
    for cols in (0..s.dim).combinations(k) {
        let mut sub = TropMatrix::zero(s.desc.clone(), k, k);
        for (i, row) in m.rows_iter().enumerate() {
            for (jj, &j) in cols.iter().enumerate() {
                sub.set(i, jj, row[j].clone());
            }
        }
        if det(&sub)?.tangible {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Candidate coefficient values for witness searches: 0 together with all
/// pairwise differences of entry values, chained once more when the set
/// has three or more vectors.
fn grid_values(s: &VectorSet, chain: bool) -> Vec<Rat> {
    let mut vals: Vec<Rat> = Vec::new();
    for v in &s.vectors {
        for x in v {
            if let Some(r) = x.nu_value() {
                vals.push(r.clone());
            }
        }
    }
    vals.sort();
    vals.dedup();
    let mut out = vec![Rat::zero()];
    for a in &vals {
        for b in &vals {
            out.push(a - b);
        }
    }
    out.sort();
    out.dedup();
    if chain {
        let base = out.clone();
        let mut chained = out.clone();
        for a in &base {
            for b in &base {
                chained.push(a + b);
            }
        }
        chained.sort();
        chained.dedup();
        if chained.len() <= 512 {
            out = chained;
        }
    }
    out
}

fn combination_is_ghost(
    s: &VectorSet,
    coeffs: &[LayeredScalar],
) -> Result<bool> {
    for j in 0..s.dim {
        let mut acc = LayeredScalar::Zero;
        for (c, v) in coeffs.iter().zip(s.vectors.iter()) {
            let p = lscalar_mul(&s.desc, c, &v[j])?;
            acc = lscalar_add(&s.desc, &acc, &p)?;
        }
        if !acc.is_ghost_or_zero(&s.desc) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Search tangible coefficients (not all zero) driving the combination
/// into the ghost ideal. The first supported coefficient is normalized to
/// value 0; the rest range over the difference grid.
fn witness_search(s: &VectorSet) -> Result<Option<Vec<LayeredScalar>>> {
    let m = s.len();
    let max_support = m.min(s.dim + 1);
    let grid = grid_values(s, m >= 3);
    for size in 1..=max_support {
        for support in (0..m).combinations(size) {
            let mut coeffs = vec![LayeredScalar::Zero; m];
            coeffs[support[0]] = LayeredScalar::unit(&s.desc);
            if size == 1 {
                if combination_is_ghost(s, &coeffs)? {
                    return Ok(Some(coeffs));
                }
                continue;
            }
            let rest = &support[1..];
            let mut stack = vec![0usize; rest.len()];
            'assign: loop {
                for (slot, &vi) in stack.iter().zip(rest.iter()) {
                    coeffs[vi] = LayeredScalar::tangible(&s.desc, grid[*slot].clone());
                }
                if combination_is_ghost(s, &coeffs)? {
                    return Ok(Some(coeffs));
                }
                let mut pos = 0;
                loop {
                    if pos == stack.len() {
                        break 'assign;
                    }
                    stack[pos] += 1;
                    if stack[pos] < grid.len() {
                        break;
                    }
                    stack[pos] = 0;
                    pos += 1;
                }
            }
        }
    }
    Ok(None)
}

/// Dependence with witness: `None` means tropically independent; a
/// dependent set yields tangible coefficients landing in the ghost ideal.
pub fn dependence_witness(s: &VectorSet) -> Result<Option<Vec<LayeredScalar>>> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if !is_dependent(s)? {
        return Ok(None);
    }
    match witness_search(s)? {
        Some(w) => Ok(Some(w)),
        None => {
            if s.len() > s.dim + 1 {
                Err(Error::TooManyVectors(format!(
                    "{} vectors in dimension {}: dependent, but the bounded search found no witness",
                    s.len(),
                    s.dim
                )))
            } else {
                Err(Error::WitnessNotFound)
            }
        }
    }
}

/// Rank: the size of the largest tropically independent subset.
pub fn rank(s: &VectorSet) -> Result<usize> {
    if s.len() > RANK_CAP {
        return Err(Error::TooManyVectors(format!(
            "rank computation capped at {RANK_CAP} vectors"
        )));
    }
    let top = s.len().min(s.dim);
    for k in (1..=top).rev() {
        for subset in (0..s.len()).combinations(k) {
            if !is_dependent(&s.subset(&subset))? {
                return Ok(k);
            }
        }
    }
    Ok(0)
}

/// A tangible independent subset through `v` of size rank(V), searched
/// over V itself extended by tangible re-tags of its members.
pub fn tangible_dbase_through(s: &VectorSet, v: &[LayeredScalar]) -> Result<VectorSet> {
    if v.len() != s.dim {
        return Err(Error::ShapeMismatch(format!(
            "vector of dimension {} in a dimension-{} set",
            v.len(),
            s.dim
        )));
    }
    if !vec_is_tangible_or_zero(&s.desc, v) || vec_is_zero(v) {
        return Err(Error::NotTangible(
            "the distinguished vector must be tangible".into(),
        ));
    }
    let r = rank(s)?;
    let mut pool: Vec<Vec<LayeredScalar>> = Vec::new();
    let push_unique = |w: Vec<LayeredScalar>, pool: &mut Vec<Vec<LayeredScalar>>| {
        if !pool.contains(&w) {
            pool.push(w);
        }
    };
    push_unique(v.to_vec(), &mut pool);
    for w in &s.vectors {
        push_unique(w.clone(), &mut pool);
        push_unique(
            w.iter().map(|x| x.retag_tangible(&s.desc)).collect(),
            &mut pool,
        );
    }
    let tangible_pool: Vec<usize> = (0..pool.len())
        .filter(|&i| vec_is_tangible_or_zero(&s.desc, &pool[i]))
        .collect();
    if r == 0 {
        return Err(Error::NotFound("the set has rank 0".into()));
    }
    for subset in tangible_pool.iter().copied().combinations(r) {
        if !subset.contains(&0) {
            continue;
        }
        let cand = VectorSet {
            desc: s.desc.clone(),
            dim: s.dim,
            vectors: subset.iter().map(|&i| pool[i].clone()).collect(),
        };
        if !is_dependent(&cand)? {
            return Ok(cand);
        }
    }
    Err(Error::NotFound(
        "no tangible independent subset of full rank through the vector in the search pool".into(),
    ))
}

/// Ghost annihilator rank bound: the rank of the matrix, a lower bound on
/// the rank of the set of tangible grid vectors annihilated into the ghost
/// ideal, and whether that bound reaches n - rank.
pub fn ghost_annihilator_rank_check(a: &TropMatrix) -> Result<(usize, usize, bool)> {
    let n = a.require_square()?;
    if n > ANNIHILATOR_CAP {
        return Err(Error::TooLarge(format!(
            "annihilator search capped at {ANNIHILATOR_CAP}x{ANNIHILATOR_CAP}"
        )));
    }
    let rows = VectorSet::from_matrix_rows(a);
    let m = rank(&rows)?;
    let need = n - m;

    // collect tangible grid vectors with ghost-or-zero image
    let grid = grid_values(&rows, true);
    let mut found: Vec<Vec<LayeredScalar>> = Vec::new();
    for size in 1..=n {
        for support in (0..n).combinations(size) {
            let mut v = vec![LayeredScalar::Zero; n];
            v[support[0]] = LayeredScalar::unit(a.descriptor());
            let rest = &support[1..];
            let mut stack = vec![0usize; rest.len()];
            loop {
                for (slot, &vi) in stack.iter().zip(rest.iter()) {
                    v[vi] = LayeredScalar::tangible(a.descriptor(), grid[*slot].clone());
                }
                let image = mat_vec(a, &v)?;
                if vec_is_ghost_or_zero(a.descriptor(), &image) && !found.contains(&v) {
                    found.push(v.clone());
                }
                let mut pos = 0;
                loop {
                    if pos == stack.len() {
                        break;
                    }
                    stack[pos] += 1;
                    if stack[pos] < grid.len() {
                        break;
                    }
                    stack[pos] = 0;
                    pos += 1;
                }
                if rest.is_empty() || pos == stack.len() || found.len() >= 256 {
                    break;
                }
            }
        }
    }

    if found.is_empty() {
        return Ok((m, 0, need == 0));
    }
    // bound the annihilator rank from below: first try to exhibit an
    // independent subset of the required size, then fall back to the
    // largest one found among a capped selection
    let selection: Vec<Vec<LayeredScalar>> = found.into_iter().take(RANK_CAP).collect();
    let set = VectorSet {
        desc: a.descriptor().clone(),
        dim: n,
        vectors: selection,
    };
    let lb = rank(&set)?;
    Ok((m, lb, lb >= need))
}

/// One entry of the eigen report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenDatum {
    pub value: Rat,
    pub vector: Option<Vec<LayeredScalar>>,
    /// Exact eigenvector (dominant root) versus supertropical eigenvector.
    pub exact: bool,
}

fn scale_vector(
    desc: &SortSemiring,
    c: &LayeredScalar,
    v: &[LayeredScalar],
) -> Result<Vec<LayeredScalar>> {
    v.iter().map(|x| lscalar_mul(desc, c, x)).collect()
}

fn eigen_candidates(a: &TropMatrix, beta: &Rat) -> Result<Vec<Vec<LayeredScalar>>> {
    let n = a.rows();
    let desc = a.descriptor();
    let shifted = mat_add(
        a,
        &scalar_mul(
            &LayeredScalar::tangible(desc, beta.clone()),
            &TropMatrix::identity(desc.clone(), n),
        )?,
    )?;
    let adj = adjoint(&shifted)?;
    let mut cands: Vec<Vec<LayeredScalar>> = Vec::new();
    for j in 0..n {
        let col: Vec<LayeredScalar> = adj
            .col(j)
            .iter()
            .map(|x| x.retag_tangible(desc))
            .collect();
        if !vec_is_zero(&col) && !cands.contains(&col) {
            cands.push(col);
        }
    }
    // grid fallback: normalized tangible vectors over the difference grid
    let rows = VectorSet::from_matrix_rows(a);
    let grid = grid_values(&rows, n >= 3);
    if grid.len().pow((n - 1) as u32) <= 4096 {
        let mut stack = vec![0usize; n - 1];
        loop {
            let mut v = vec![LayeredScalar::unit(desc)];
            for slot in &stack {
                v.push(LayeredScalar::tangible(desc, grid[*slot].clone()));
            }
            if !cands.contains(&v) {
                cands.push(v);
            }
            let mut pos = 0;
            loop {
                if pos == stack.len() {
                    return Ok(cands);
                }
                stack[pos] += 1;
                if stack[pos] < grid.len() {
                    break;
                }
                stack[pos] = 0;
                pos += 1;
            }
        }
    }
    Ok(cands)
}

/// Tangible eigen data: corner roots of the tangible characteristic
/// polynomial, the dominant root paired with an exact tangible eigenvector,
/// the others with supertropical eigenvectors where the search finds one.
/// Dominant root first.
pub fn eigen_tangible(a: &TropMatrix) -> Result<Vec<EigenDatum>> {
    let n = a.require_square()?;
    let desc = a.descriptor().clone();
    if n == 0 {
        return Ok(vec![]);
    }
    let f = tangible_char_poly(a)?;
    let roots = match corner_roots_univariate(&f) {
        Ok(r) => r,
        Err(Error::NoRoots) => return Ok(vec![]),
        Err(e) => return Err(e),
    };
    let mut out = Vec::new();
    for (pos, (beta, _layer)) in roots.iter().enumerate().rev() {
        let dominant = pos == roots.len() - 1;
        let beta_scalar = LayeredScalar::tangible(&desc, beta.clone());
        let mut vector = None;
        for cand in eigen_candidates(a, beta)? {
            let image = mat_vec(a, &cand)?;
            let scaled = scale_vector(&desc, &beta_scalar, &cand)?;
            let ok = if dominant {
                image == scaled
            } else {
                image
                    .iter()
                    .zip(scaled.iter())
                    .all(|(x, y)| ghost_surpass(&desc, x, y))
            };
            if ok {
                vector = Some(cand);
                break;
            }
        }
        out.push(EigenDatum {
            value: beta.clone(),
            vector,
            exact: dominant,
        });
    }
    Ok(out)
}

/// Least m <= max_m with A^m v entrywise surpassing beta^m v.
pub fn generalized_eigen_check(
    a: &TropMatrix,
    v: &[LayeredScalar],
    beta: &Rat,
    max_m: u32,
) -> Result<Option<u32>> {
    let n = a.require_square()?;
    let desc = a.descriptor().clone();
    if v.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "vector of dimension {} for a {n}x{n} matrix",
            v.len()
        )));
    }
    if !vec_is_tangible_or_zero(&desc, v) || vec_is_zero(v) {
        return Err(Error::NotTangible("eigenvector candidates are tangible".into()));
    }
    for m in 1..=max_m {
        let am = mat_pow(a, m)?;
        let bm = lscalar_pow(&desc, &LayeredScalar::tangible(&desc, beta.clone()), m)?;
        let lhs = mat_vec(&am, v)?;
        let rhs = scale_vector(&desc, &bm, v)?;
        if lhs
            .iter()
            .zip(rhs.iter())
            .all(|(x, y)| ghost_surpass(&desc, x, y))
        {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// A bilinear form, carried by its generating matrix: B(v, w) = v^T M w.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram_generator: TropMatrix,
}

impl BilinearForm {
    pub fn new(gram_generator: TropMatrix) -> Result<Self> {
        gram_generator.require_square()?;
        Ok(BilinearForm { gram_generator })
    }

    pub fn dim(&self) -> usize {
        self.gram_generator.rows()
    }

    pub fn eval(&self, v: &[LayeredScalar], w: &[LayeredScalar]) -> Result<LayeredScalar> {
        let n = self.dim();
        let desc = self.gram_generator.descriptor();
        if v.len() != n || w.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "form of dimension {n} applied to vectors of dimension {} and {}",
                v.len(),
                w.len()
            )));
        }
        let mw = mat_vec(&self.gram_generator, w)?;
        let mut acc = LayeredScalar::Zero;
        for (x, y) in v.iter().zip(mw.iter()) {
            acc = lscalar_add(desc, &acc, &lscalar_mul(desc, x, y)?)?;
        }
        Ok(acc)
    }
}

/// Gram matrix of a list of vectors under the form.
pub fn gram(b: &BilinearForm, s: &VectorSet) -> Result<TropMatrix> {
    if s.dim != b.dim() {
        return Err(Error::ShapeMismatch(format!(
            "form of dimension {} against vectors of dimension {}",
            b.dim(),
            s.dim
        )));
    }
    let k = s.len();
    let mut out = TropMatrix::zero(s.desc.clone(), k, k);
    for i in 0..k {
        for j in 0..k {
            out.set(i, j, b.eval(&s.vectors[i], &s.vectors[j])?);
        }
    }
    Ok(out)
}

pub fn is_ghost_orthogonal(
    b: &BilinearForm,
    v: &[LayeredScalar],
    w: &[LayeredScalar],
) -> Result<bool> {
    let desc = b.gram_generator.descriptor().clone();
    Ok(b.eval(v, w)?.is_ghost_or_zero(&desc))
}

/// Bounded nondegeneracy search over tangible-coefficient grid
/// combinations of the spanning set: degenerate when some nonzero,
/// non-ghost combination is left ghost-orthogonal to all of S. The search
/// space is finite, so a `true` verdict is an approximation of the
/// definition, which quantifies over the whole space.
pub fn is_nondegenerate(b: &BilinearForm, s: &VectorSet) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if s.dim != b.dim() {
        return Err(Error::ShapeMismatch(format!(
            "form of dimension {} against vectors of dimension {}",
            b.dim(),
            s.dim
        )));
    }
    let desc = s.desc.clone();
    let coeff_grid: Vec<Option<Rat>> = std::iter::once(None)
        .chain((-2..=2).map(|v| Some(Rat::int(v))))
        .collect();
    let k = s.len();
    let mut stack = vec![0usize; k];
    loop {
        let mut v = vec![LayeredScalar::Zero; s.dim];
        let mut all_zero = true;
        for (slot, w) in stack.iter().zip(s.vectors.iter()) {
            if let Some(c) = &coeff_grid[*slot] {
                all_zero = false;
                let c = LayeredScalar::tangible(&desc, c.clone());
                for (acc, x) in v.iter_mut().zip(w.iter()) {
                    let p = lscalar_mul(&desc, &c, x)?;
                    *acc = lscalar_add(&desc, acc, &p)?;
                }
            }
        }
        if !all_zero && !vec_is_ghost_or_zero(&desc, &v) && !vec_is_zero(&v) {
            let mut orthogonal_to_all = true;
            for w in s.vectors.iter() {
                if !is_ghost_orthogonal(b, &v, w)? {
                    orthogonal_to_all = false;
                    break;
                }
            }
            if orthogonal_to_all {
                return Ok(false);
            }
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(true);
            }
            stack[pos] += 1;
            if stack[pos] < coeff_grid.len() {
                break;
            }
            stack[pos] = 0;
            pos += 1;
        }
    }
}

impl TropMatrix {
    /// Iterator over row slices.
    pub fn rows_iter(&self) -> impl Iterator<Item = &[LayeredScalar]> {
        (0..self.rows()).map(move |i| self.row(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::SortLayer;

    fn sup() -> SortSemiring {
        SortSemiring::TwoLayer
    }

    fn rank2_matrix() -> TropMatrix {
        TropMatrix::tangible_from_ints(&sup(), &[&[4, 4, 0], &[4, 4, 1], &[4, 4, 2]])
    }

    #[test]
    fn dependence_witness_examples() {
        let d = sup();
        let same = VectorSet::from_matrix_rows(&TropMatrix::tangible_from_ints(
            &d,
            &[&[0, 0], &[0, 0]],
        ));
        let w = dependence_witness(&same).unwrap().unwrap();
        assert!(w.iter().any(|c| !c.is_zero()));
        let regular = VectorSet::from_matrix_rows(&TropMatrix::tangible_from_ints(
            &d,
            &[&[0, 0], &[1, 2]],
        ));
        assert_eq!(dependence_witness(&regular).unwrap(), None);
        let empty = VectorSet::new(d.clone(), 2, vec![]).unwrap();
        assert_eq!(dependence_witness(&empty), Err(Error::EmptySet));
    }

    #[test]
    fn annihilators_of_the_rank2_example() {
        let d = sup();
        let a = rank2_matrix();
        let v1 = vec![
            LayeredScalar::tint(&d, 1),
            LayeredScalar::tint(&d, 1),
            LayeredScalar::tint(&d, 0),
        ];
        let v2 = vec![
            LayeredScalar::tint(&d, 1),
            LayeredScalar::tint(&d, 1),
            LayeredScalar::tint(&d, 1),
        ];
        let five_nu = LayeredScalar::new(&d, SortLayer::Inf, Rat::int(5)).unwrap();
        for v in [&v1, &v2] {
            let img = mat_vec(&a, v).unwrap();
            assert_eq!(img, vec![five_nu.clone(); 3]);
        }
        // the two annihilators are themselves independent
        let ann = VectorSet::new(d.clone(), 3, vec![v1, v2]).unwrap();
        assert!(!is_dependent(&ann).unwrap());
    }

    #[test]
    fn rank_examples() {
        let d = sup();
        assert_eq!(rank(&VectorSet::from_matrix_rows(&rank2_matrix())).unwrap(), 2);
        assert_eq!(
            rank(&VectorSet::from_matrix_rows(&TropMatrix::identity(d.clone(), 3))).unwrap(),
            3
        );
        let v = vec![LayeredScalar::tint(&d, 1), LayeredScalar::tint(&d, 2)];
        let copies = VectorSet::new(d.clone(), 2, vec![v.clone(), v.clone(), v]).unwrap();
        assert_eq!(rank(&copies).unwrap(), 1);
        assert_eq!(rank(&VectorSet::new(d, 2, vec![]).unwrap()).unwrap(), 0);
    }

    #[test]
    fn ghost_annihilator_check_examples() {
        let d = sup();
        let (m, lb, holds) = ghost_annihilator_rank_check(&rank2_matrix()).unwrap();
        assert_eq!(m, 2);
        assert!(lb >= 1);
        assert!(holds);

        let id = TropMatrix::identity(d.clone(), 2);
        let (m, lb, holds) = ghost_annihilator_rank_check(&id).unwrap();
        assert_eq!((m, lb, holds), (2, 0, true));

        let ghost = TropMatrix::from_rows(
            d.clone(),
            vec![
                vec![
                    LayeredScalar::new(&d, SortLayer::Inf, Rat::int(0)).unwrap(),
                    LayeredScalar::new(&d, SortLayer::Inf, Rat::int(1)).unwrap(),
                ],
                vec![
                    LayeredScalar::new(&d, SortLayer::Inf, Rat::int(2)).unwrap(),
                    LayeredScalar::new(&d, SortLayer::Inf, Rat::int(0)).unwrap(),
                ],
            ],
        )
        .unwrap();
        let (m, lb, holds) = ghost_annihilator_rank_check(&ghost).unwrap();
        assert_eq!(m, 0);
        assert_eq!(lb, 2);
        assert!(holds);
    }

    #[test]
    fn tangible_dbase_examples() {
        let d = sup();
        let id = TropMatrix::identity(d.clone(), 2);
        let rows = VectorSet::from_matrix_rows(&id);
        let e1 = vec![LayeredScalar::tint(&d, 0), LayeredScalar::Zero];
        let base = tangible_dbase_through(&rows, &e1).unwrap();
        assert_eq!(base.len(), 2);
        assert!(base.vectors().contains(&e1));

        let ghost_vec = vec![
            LayeredScalar::new(&d, SortLayer::Inf, Rat::int(0)).unwrap(),
            LayeredScalar::Zero,
        ];
        assert!(matches!(
            tangible_dbase_through(&rows, &ghost_vec),
            Err(Error::NotTangible(_))
        ));

        let set = VectorSet::from_matrix_rows(&rank2_matrix());
        let v = vec![
            LayeredScalar::tint(&d, 4),
            LayeredScalar::tint(&d, 4),
            LayeredScalar::tint(&d, 0),
        ];
        let base = tangible_dbase_through(&set, &v).unwrap();
        assert_eq!(base.len(), 2);
        assert!(base.vectors().contains(&v));
        assert!(!is_dependent(&base).unwrap());
    }

    #[test]
    fn eigen_paper_examples() {
        let d = sup();
        // [[4,0],[0,1]]: dominant root 4 with eigenvector (4,0); root 1
        // with supertropical eigenvector (0,4)
        let a = TropMatrix::tangible_from_ints(&d, &[&[4, 0], &[0, 1]]);
        let data = eigen_tangible(&a).unwrap();
        assert_eq!(data.len(), 2);
        assert_eq!(data[0].value, Rat::int(4));
        assert!(data[0].exact);
        let v = data[0].vector.clone().unwrap();
        let image = mat_vec(&a, &v).unwrap();
        let scaled = scale_vector(&d, &LayeredScalar::tint(&d, 4), &v).unwrap();
        assert_eq!(image, scaled);
        assert_eq!(data[1].value, Rat::int(1));
        let w = data[1].vector.clone().unwrap();
        let image = mat_vec(&a, &w).unwrap();
        let scaled = scale_vector(&d, &LayeredScalar::tint(&d, 1), &w).unwrap();
        assert!(image
            .iter()
            .zip(scaled.iter())
            .all(|(x, y)| ghost_surpass(&d, x, y)));

        // 1x1
        let s = TropMatrix::tangible_from_ints(&d, &[&[5]]);
        let data = eigen_tangible(&s).unwrap();
        assert_eq!(data[0].value, Rat::int(5));
        assert_eq!(data[0].vector, Some(vec![LayeredScalar::tint(&d, 0)]));
    }

    #[test]
    fn eigen_second_paper_example() {
        let d = sup();
        let a = TropMatrix::tangible_from_ints(&d, &[&[0, 0], &[1, 2]]);
        let data = eigen_tangible(&a).unwrap();
        assert_eq!(data.len(), 2);
        assert_eq!(data[0].value, Rat::int(2));
        let v = data[0].vector.clone().unwrap();
        assert_eq!(
            mat_vec(&a, &v).unwrap(),
            scale_vector(&d, &LayeredScalar::tint(&d, 2), &v).unwrap()
        );
        assert_eq!(data[1].value, Rat::int(0));
        assert!(data[1].vector.is_some());
    }

    #[test]
    fn generalized_eigen_examples() {
        let d = sup();
        let a = TropMatrix::tangible_from_ints(&d, &[&[4, 0], &[0, 1]]);
        let v = vec![LayeredScalar::tint(&d, 0), LayeredScalar::tint(&d, 4)];
        assert_eq!(
            generalized_eigen_check(&a, &v, &Rat::int(1), 4).unwrap(),
            Some(1)
        );
        let w = vec![LayeredScalar::tint(&d, 4), LayeredScalar::tint(&d, 0)];
        assert_eq!(
            generalized_eigen_check(&a, &w, &Rat::int(4), 4).unwrap(),
            Some(1)
        );
        assert_eq!(
            generalized_eigen_check(&a, &w, &Rat::int(-50), 4).unwrap(),
            None
        );
    }

    #[test]
    fn gram_and_orthogonality() {
        let d = sup();
        let id_form = BilinearForm::new(TropMatrix::identity(d.clone(), 2)).unwrap();
        let v = vec![LayeredScalar::tint(&d, 0), LayeredScalar::tint(&d, 1)];
        let s = VectorSet::new(d.clone(), 2, vec![v.clone(), v.clone()]).unwrap();
        let g = gram(&id_form, &s).unwrap();
        let two_two = LayeredScalar::new(&d, SortLayer::Inf, Rat::int(2)).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(g.get(i, j), &two_two);
            }
        }
        assert!(!det(&g).unwrap().tangible);
        assert!(is_dependent(&s).unwrap());

        let e1 = vec![LayeredScalar::tint(&d, 0), LayeredScalar::Zero];
        let e2 = vec![LayeredScalar::Zero, LayeredScalar::tint(&d, 0)];
        assert!(is_ghost_orthogonal(&id_form, &e1, &e2).unwrap());

        let mut m = TropMatrix::identity(d.clone(), 2);
        m.set(0, 1, LayeredScalar::new(&d, SortLayer::Inf, Rat::int(0)).unwrap());
        let form = BilinearForm::new(m).unwrap();
        assert!(is_ghost_orthogonal(&form, &e1, &e2).unwrap());
    }
}
