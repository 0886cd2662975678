//! Explicit matrix realisations of type-A seaweeds inside sl(N), with the
//! Kirillov form, index, principal element and adjoint spectrum computed by
//! exact rational linear algebra.

use std::collections::HashMap;

use num::bigint::BigInt;
use num::{Integer, One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::OracleError;
use crate::linalg::{bareiss_rank, q, solve_integer, Matrix, Q};
use crate::rootsys::Family;
use crate::seaweed::Seaweed;
use crate::spectrum::Spectrum;

/// Seed for functional sampling unless overridden.
pub const DEFAULT_SEED: u64 = 20_180_905;

/// Number of random functionals tried by [`index`].
pub const INDEX_SAMPLES: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisElement {
    /// `e_kk − e_{k+1,k+1}` (0-based).
    DiagDiff(usize),
    /// `e_ij`, `i ≠ j` (0-based).
    Unit(usize, usize),
}

impl BasisElement {
    /// Nonzero entries as `(row, col, value)`.
    pub fn entries(&self) -> Vec<(usize, usize, i64)> {
        match *self {
            BasisElement::DiagDiff(k) => vec![(k, k, 1), (k + 1, k + 1, -1)],
            BasisElement::Unit(i, j) => vec![(i, j, 1)],
        }
    }
}

/// A trace-zero matrix Lie algebra spanned by all diagonal differences and a
/// set of off-diagonal units. Brackets are stored as sparse integer
/// structure constants.
#[derive(Debug, Clone)]
pub struct MatrixSeaweed {
    n: usize,
    basis: Vec<BasisElement>,
    lookup: HashMap<BasisElement, usize>,
    brackets: Vec<Vec<(usize, i64)>>,
}

impl MatrixSeaweed {
    /// Builds the algebra and checks closure under the commutator.
    pub fn from_units(n: usize, units: &[(usize, usize)]) -> Result<Self, OracleError> {
        let mut basis: Vec<BasisElement> = (0..n.saturating_sub(1)).map(BasisElement::DiagDiff).collect();
        let mut units: Vec<(usize, usize)> = units.to_vec();
        units.sort_unstable();
        units.dedup();
        for &(i, j) in &units {
            if i == j || i >= n || j >= n {
                return Err(OracleError::NotClosed);
            }
            basis.push(BasisElement::Unit(i, j));
        }
        let lookup = basis.iter().enumerate().map(|(p, b)| (*b, p)).collect();
        let mut m = MatrixSeaweed { n, basis, lookup, brackets: Vec::new() };
        let d = m.dim();
        let mut brackets = Vec::with_capacity(d * d);
        for p in 0..d {
            for qq in 0..d {
                let c = commutator(&m.basis[p].entries(), &m.basis[qq].entries());
                brackets.push(m.decompose_int(&c)?);
            }
        }
        m.brackets = brackets;
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn position(&self, b: BasisElement) -> Option<usize> {
        self.lookup.get(&b).copied()
    }

    /// Coordinates of `[b_p, b_q]`.
    pub fn bracket(&self, p: usize, q: usize) -> &[(usize, i64)] {
        &self.brackets[p * self.dim() + q]
    }

    fn decompose_int(&self, entries: &HashMap<(usize, usize), i64>) -> Result<Vec<(usize, i64)>, OracleError> {
        let mut diag = vec![0i64; self.n];
        let mut out = Vec::new();
        for (&(i, j), &v) in entries {
            if v == 0 {
                continue;
            }
            if i == j {
                diag[i] += v;
            } else {
                let p = self.position(BasisElement::Unit(i, j)).ok_or(OracleError::NotClosed)?;
                out.push((p, v));
            }
        }
        if diag.iter().sum::<i64>() != 0 {
            return Err(OracleError::NotClosed);
        }
        let mut acc = 0;
        for (k, d) in diag.iter().take(self.n.saturating_sub(1)).enumerate() {
            acc += d;
            if acc != 0 {
                out.push((k, acc));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Coordinates of an N×N matrix in the basis.
    pub fn coordinates(&self, x: &Matrix) -> Result<Vec<Q>, OracleError> {
        assert_eq!((x.rows(), x.cols()), (self.n, self.n));
        let mut coords = vec![Q::zero(); self.dim()];
        let mut acc = Q::zero();
        let mut trace = Q::zero();
        for i in 0..self.n {
            trace += &x[(i, i)];
            if i + 1 < self.n {
                acc += &x[(i, i)];
                coords[i] = acc.clone();
            }
            for j in 0..self.n {
                if i != j && !x[(i, j)].is_zero() {
                    let p = self.position(BasisElement::Unit(i, j)).ok_or(OracleError::NotInSpan)?;
                    coords[p] = x[(i, j)].clone();
                }
            }
        }
        if !trace.is_zero() {
            return Err(OracleError::NotInSpan);
        }
        Ok(coords)
    }

    pub fn to_matrix(&self, coords: &[Q]) -> Matrix {
        let mut m = Matrix::zeros(self.n, self.n);
        for (b, c) in self.basis.iter().zip(coords) {
            for (i, j, v) in b.entries() {
                m[(i, j)] += c * q(v);
            }
        }
        m
    }

    /// Bracket of two elements given in coordinates.
    pub fn bracket_coords(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (p, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (qq, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for &(r, c) in self.bracket(p, qq) {
                    out[r] += &ab * q(c);
                }
            }
        }
        out
    }

    /// Checks the Jacobi identity on one basis triple.
    pub fn jacobi_holds(&self, a: usize, b: usize, c: usize) -> bool {
        let d = self.dim();
        let mut total = vec![0i64; d];
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            for &(r, k) in self.bracket(y, z) {
                for &(s, l) in self.bracket(x, r) {
                    total[s] += k * l;
                }
            }
        }
        total.iter().all(|&v| v == 0)
    }
}

fn commutator(a: &[(usize, usize, i64)], b: &[(usize, usize, i64)]) -> HashMap<(usize, usize), i64> {
    let mut out = HashMap::new();
    for &(i, j, u) in a {
        for &(k, l, v) in b {
            if j == k {
                *out.entry((i, l)).or_insert(0) += u * v;
            }
            if l == i {
                *out.entry((k, j)).or_insert(0) -= u * v;
            }
        }
    }
    out
}

/// Standard realisation of a type-A seaweed in sl(n+1): roots of `π₁` give
/// the block lower-triangular part, roots of `π₂` the block upper-triangular
/// part.
pub fn realize_type_a(s: &Seaweed) -> Result<MatrixSeaweed, OracleError> {
    if s.lie_type().family() != Family::A {
        return Err(OracleError::Unsupported(s.lie_type().to_string()));
    }
    let n = s.rank() + 1;
    let mut units = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            // ε_{i+1} − ε_{j+1} = α_{i+1} + … + α_j
            let run = (i + 1..=j).collect::<Vec<_>>();
            if run.iter().all(|&a| s.pi1().contains(a)) {
                units.push((j, i));
            }
            if run.iter().all(|&a| s.pi2().contains(a)) {
                units.push((i, j));
            }
        }
    }
    MatrixSeaweed::from_units(n, &units)
}

/// The trace-zero incidence algebra of the poset {1,2,3,4} with 1,2 ≤ 3 ≤ 4.
pub fn poset_algebra() -> MatrixSeaweed {
    MatrixSeaweed::from_units(4, &[(0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]).expect("poset algebra is closed")
}

/// `e₁₄* + e₂₄* + e₂₃*` on [`poset_algebra`].
pub fn poset_functional(m: &MatrixSeaweed) -> Functional {
    Functional::dual_units(m, &[(0, 3), (1, 3), (1, 2)])
}

/// A linear form on a [`MatrixSeaweed`], by basis coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional {
    pub coefficients: Vec<Q>,
}

impl Functional {
    /// Sum of the duals of the given units (0-based), which must be in the basis.
    pub fn dual_units(m: &MatrixSeaweed, units: &[(usize, usize)]) -> Self {
        let mut coefficients = vec![Q::zero(); m.dim()];
        for &(i, j) in units {
            let p = m.position(BasisElement::Unit(i, j)).expect("unit not in basis");
            coefficients[p] += Q::one();
        }
        Functional { coefficients }
    }

    /// Integer coefficients uniform in [−100,100].
    pub fn random<R: Rng>(m: &MatrixSeaweed, rng: &mut R) -> Self {
        Functional::random_in(m, rng, 100)
    }

    pub fn random_in<R: Rng>(m: &MatrixSeaweed, rng: &mut R, bound: i64) -> Self {
        Functional { coefficients: (0..m.dim()).map(|_| q(rng.gen_range(-bound..=bound))).collect() }
    }

    /// Coefficients scaled by a positive common denominator.
    pub fn integer_coefficients(&self) -> Vec<BigInt> {
        let den = self.coefficients.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coefficients.iter().map(|c| c.numer() * (&den / c.denom())).collect()
    }

    pub fn apply(&self, x: &[Q]) -> Q {
        self.coefficients.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

/// `B_f(b_p, b_q) = f([b_p, b_q])`.
pub fn kirillov_matrix(m: &MatrixSeaweed, f: &Functional) -> Matrix {
    Matrix::from_fn(m.dim(), m.dim(), |p, qq| {
        m.bracket(p, qq).iter().map(|&(r, c)| &f.coefficients[r] * q(c)).sum()
    })
}

pub fn kirillov_rank(m: &MatrixSeaweed, f: &Functional) -> usize {
    kirillov_matrix(m, f).rank()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexCertificate {
    pub index: usize,
    pub dim: usize,
    pub seed: u64,
    pub samples: usize,
    /// A functional attaining the maximal rank seen.
    pub witness: Functional,
}

/// Index as `dim − max rank` over seeded random integer functionals. Stops
/// early once the rank reaches its parity bound.
pub fn index(m: &MatrixSeaweed, seed: u64) -> IndexCertificate {
    let dim = m.dim();
    let cap = dim - dim % 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(usize, Functional)> = None;
    let mut samples = 0;
    while samples < INDEX_SAMPLES {
        let f = Functional::random(m, &mut rng);
        samples += 1;
        let r = kirillov_rank(m, &f);
        if best.as_ref().is_none_or(|(b, _)| r > *b) {
            best = Some((r, f));
        }
        if best.as_ref().is_some_and(|(b, _)| *b == cap) {
            break;
        }
    }
    let (rank, witness) = best.expect("at least one sample");
    IndexCertificate { index: dim - rank, dim, seed, samples, witness }
}

/// Up to `count` distinct Frobenius functionals drawn from the seeded
/// stream, with coefficients in [−2,2] so that principal elements keep small
/// denominators.
pub fn sample_frobenius_functionals(m: &MatrixSeaweed, seed: u64, count: usize) -> Vec<Functional> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Functional> = Vec::new();
    for _ in 0..count.max(1) * INDEX_SAMPLES {
        if out.len() == count {
            break;
        }
        let f = Functional::random_in(m, &mut rng, 2);
        if !out.contains(&f) && kirillov_rank(m, &f) == m.dim() {
            out.push(f);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalElement {
    pub coords: Vec<Q>,
    pub matrix: Matrix,
}

/// The unique `F̂` with `f([F̂, b]) = f(b)` for every basis element `b`.
pub fn principal_element(m: &MatrixSeaweed, f: &Functional) -> Result<PrincipalElement, OracleError> {
    let d = m.dim();
    let fi = f.integer_coefficients();
    // B_f is antisymmetric, so Bᵀy = f becomes −B·y = f
    let a: Vec<Vec<BigInt>> = (0..d)
        .map(|p| {
            (0..d)
                .map(|qq| -m.bracket(p, qq).iter().map(|&(r, c)| &fi[r] * c).sum::<BigInt>())
                .collect()
        })
        .collect();
    let Some((nums, den)) = solve_integer(a, fi) else {
        return Err(OracleError::Degenerate { rank: kirillov_rank(m, f), dim: d });
    };
    let coords: Vec<Q> = nums.into_iter().map(|v| Q::new(v, den.clone())).collect();
    let matrix = m.to_matrix(&coords);
    Ok(PrincipalElement { coords, matrix })
}

/// Matrix of `ad x` in the basis (column `q` holds `[x, b_q]`).
pub fn ad_matrix(m: &MatrixSeaweed, x: &[Q]) -> Matrix {
    let d = m.dim();
    let mut out = Matrix::zeros(d, d);
    for (p, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for qq in 0..d {
            for &(r, c) in m.bracket(p, qq) {
                out[(r, qq)] += a * q(c);
            }
        }
    }
    out
}

/// Eigenvalue multiplicities of `ad F̂` from kernel dimensions at integer
/// shifts `0, 1, −1, 2, −2, …` up to `±(N+1)`.
pub fn ad_spectrum(m: &MatrixSeaweed, fhat: &Matrix) -> Result<Spectrum, OracleError> {
    let coords = m.coordinates(fhat)?;
    let dim = m.dim();
    // ad F̂ = M / den with M integral
    let den = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ci: Vec<BigInt> = coords.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let mut ad = vec![vec![BigInt::zero(); dim]; dim];
    for (p, a) in ci.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (qq, col) in (0..dim).map(|qq| (qq, m.bracket(p, qq))) {
            for &(r, c) in col {
                ad[r][qq] += a * c;
            }
        }
    }
    let bound = m.size() as i64 + 1;
    let mut sp = Spectrum::new();
    let mut found = 0;
    let shifts = std::iter::once(0).chain((1..=bound).flat_map(|k| [k, -k]));
    for k in shifts {
        if found == dim {
            break;
        }
        let kd = &den * k;
        let mut shifted = ad.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] -= &kd;
        }
        let mult = dim - bareiss_rank(shifted, dim);
        if mult > 0 {
            sp.add(k, mult);
            found += mult;
        }
    }
    if found != dim {
        return Err(OracleError::NonIntegerSpectrum { found, dim });
    }
    Ok(sp)
}

/// Diagonal entries of a principal element as `f64`, for display.
pub fn diagonal(fhat: &PrincipalElement) -> Vec<f64> {
    (0..fhat.matrix.rows()).map(|i| fhat.matrix[(i, i)].to_f64().unwrap_or(f64::NAN)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub index: IndexCertificate,
    /// One spectrum per sampled Frobenius functional; empty if not Frobenius.
    pub spectra: Vec<Spectrum>,
}

/// Index certificate plus ad-spectra for `samples` Frobenius functionals.
pub fn analyse(s: &Seaweed, seed: u64, samples: usize) -> Result<OracleReport, OracleError> {
    let m = realize_type_a(s)?;
    let index = index(&m, seed);
    let mut spectra = Vec::new();
    if index.index == 0 {
        for f in sample_frobenius_functionals(&m, seed.wrapping_add(1), samples) {
            let fhat = principal_element(&m, &f)?;
            spectra.push(ad_spectrum(&m, &fhat.matrix)?);
        }
    }
    Ok(OracleReport { index, spectra })
}
