//! Simple eigenvalues αᵢ(F̂) and the spectrum of ad F̂.

use std::collections::BTreeMap;

use num::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::SpectrumError;
use crate::linalg::{q, Matrix, Solution};
use crate::meander::{Component, OrbitMeander};
use crate::rootsys::{DiagramShape, PositiveRoot, RootSystem};
use crate::seaweed::Seaweed;

/// `x[i-1] = αᵢ(F̂)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleEigenvalueVector {
    x: Vec<i64>,
}

impl SimpleEigenvalueVector {
    pub fn new(x: Vec<i64>) -> Self {
        SimpleEigenvalueVector { x }
    }

    pub fn get(&self, i: usize) -> i64 {
        self.x[i - 1]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.x
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }
}

/// Multiset of integers, k ↦ r_k.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Spectrum {
    mult: BTreeMap<i64, usize>,
}

impl Spectrum {
    pub fn new() -> Self {
        Spectrum::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, usize)>>(pairs: I) -> Self {
        let mut s = Spectrum::new();
        for (k, m) in pairs {
            s.add(k, m);
        }
        s
    }

    /// Multiplicities listed from `lo` upwards.
    pub fn from_run(lo: i64, mults: &[usize]) -> Self {
        Spectrum::from_pairs(mults.iter().enumerate().map(|(i, &m)| (lo + i as i64, m)))
    }

    pub fn add(&mut self, k: i64, m: usize) {
        if m > 0 {
            *self.mult.entry(k).or_insert(0) += m;
        }
    }

    pub fn merge(&mut self, other: &Spectrum) {
        for (&k, &m) in &other.mult {
            self.add(k, m);
        }
    }

    pub fn get(&self, k: i64) -> usize {
        self.mult.get(&k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.mult.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.mult.iter().map(|(&k, &m)| (k, m))
    }

    pub fn min(&self) -> Option<i64> {
        self.mult.keys().next().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.mult.keys().next_back().copied()
    }

    /// Multiplicities from the smallest eigenvalue to the largest, zeros
    /// included.
    pub fn run(&self) -> Vec<usize> {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|k| self.get(k)).collect(),
            _ => Vec::new(),
        }
    }

    pub fn to_report(&self) -> SpectrumReport {
        SpectrumReport {
            eigenvalues: self.iter().map(|(k, mult)| Eigenvalue { k, mult }).collect(),
            unbroken: verify_unbroken(self),
            symmetric: verify_symmetric(self),
            dimension: self.total(),
        }
    }
}

impl FromIterator<i64> for Spectrum {
    fn from_iter<T: IntoIterator<Item = i64>>(iter: T) -> Self {
        Spectrum::from_pairs(iter.into_iter().map(|k| (k, 1)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub k: i64,
    pub mult: usize,
}

/// Serialised form of a spectrum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<Eigenvalue>,
    pub unbroken: bool,
    pub symmetric: bool,
    pub dimension: usize,
}

impl SpectrumReport {
    pub fn spectrum(&self) -> Spectrum {
        Spectrum::from_pairs(self.eigenvalues.iter().map(|e| (e.k, e.mult)))
    }
}

/// Support is an interval of integers containing 0 and 1.
pub fn verify_unbroken(sp: &Spectrum) -> bool {
    match (sp.min(), sp.max()) {
        (Some(lo), Some(hi)) => lo <= 0 && hi >= 1 && (lo..=hi).all(|k| sp.get(k) > 0),
        _ => false,
    }
}

/// r_k = r_{1−k} for every k.
pub fn verify_symmetric(sp: &Spectrum) -> bool {
    sp.iter().all(|(k, m)| sp.get(1 - k) == m)
}

/// Zeros contributed by the Cartan part for a component of this shape.
pub fn zero_padding(shape: DiagramShape) -> usize {
    match shape {
        DiagramShape::A(k) => k.div_ceil(2),
        DiagramShape::B(k) | DiagramShape::C(k) => k,
        DiagramShape::D(k) if k % 2 == 0 => k,
        DiagramShape::D(k) => k - 1,
        DiagramShape::E6 => 4,
        DiagramShape::E7 => 7,
        DiagramShape::E8 => 8,
        DiagramShape::F4 => 4,
        DiagramShape::G2 => 2,
    }
}

/// One linear condition Σ cᵢxᵢ = rhs.
type Constraint = (Vec<(usize, i64)>, i64);

/// Conditions on the simple eigenvalues imposed by one component.
pub fn component_constraints(rs: &RootSystem, c: &Component, inv: &crate::meander::Involution) -> Vec<Constraint> {
    let s = c.side.sign();
    let l = &c.diagram.labels;
    let at = |i: usize| l[i - 1];
    let fixed = |vals: &[(usize, i64)]| -> Vec<Constraint> {
        vals.iter().map(|&(i, v)| (vec![(at(i), 1)], s * v)).collect()
    };
    let alt = |range: std::ops::RangeInclusive<usize>, first_exp: bool| -> Vec<(usize, i64)> {
        // (−1)^{i−1} when `first_exp`, else (−1)^i
        range
            .map(|i| {
                let e = if first_exp { i - 1 } else { i };
                (i, if e % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    };
    match c.shape() {
        DiagramShape::A(_) => c
            .roots
            .iter()
            .map(|a| {
                let b = inv.apply(a);
                if a == b {
                    (vec![(a, 1)], s)
                } else if rs.adjacent(a, b) {
                    (vec![(a, 1), (b, 1)], s)
                } else {
                    (vec![(a, 1), (b, 1)], 0)
                }
            })
            .collect(),
        DiagramShape::B(k) if k % 2 == 1 => fixed(&alt(1..=k, true)),
        DiagramShape::B(k) => {
            let mut v = alt(2..=k, false);
            v.push((1, 0));
            fixed(&v)
        }
        DiagramShape::C(k) => {
            let mut v: Vec<(usize, i64)> = (2..=k).map(|i| (i, 0)).collect();
            v.push((1, 1));
            fixed(&v)
        }
        DiagramShape::D(k) if k % 2 == 0 => {
            let mut v = alt(3..=k, false);
            v.extend([(1, 1), (2, 1)]);
            fixed(&v)
        }
        DiagramShape::D(k) => {
            let mut out = fixed(&alt(3..=k, true));
            out.push((vec![(at(1), 1), (at(2), 1)], 0));
            out
        }
        DiagramShape::E6 => {
            let mut out = fixed(&[(2, -1), (4, 1)]);
            out.push((vec![(at(1), 1), (at(6), 1)], 0));
            out.push((vec![(at(3), 1), (at(5), 1)], 0));
            out
        }
        DiagramShape::E7 => fixed(&[(1, -1), (2, 1), (3, 1), (4, -1), (5, 1), (6, -1), (7, 1)]),
        DiagramShape::E8 => fixed(&[(1, -1), (2, 1), (3, 1), (4, -1), (5, 1), (6, -1), (7, 1), (8, -1)]),
        DiagramShape::F4 => fixed(&[(1, -1), (2, 1), (3, 0), (4, 0)]),
        DiagramShape::G2 => fixed(&[(1, -1), (2, 1)]),
    }
}

/// Solves for αᵢ(F̂) on a Frobenius seaweed.
pub fn simple_eigenvalues(s: &Seaweed) -> Result<SimpleEigenvalueVector, SpectrumError> {
    simple_eigenvalues_of(&OrbitMeander::new(s))
}

pub fn simple_eigenvalues_of(m: &OrbitMeander) -> Result<SimpleEigenvalueVector, SpectrumError> {
    if !m.is_frobenius()? {
        return Err(SpectrumError::NotFrobenius);
    }
    let rs = m.seaweed.root_system();
    let n = rs.rank();
    let rows: Vec<Constraint> = m
        .components()
        .flat_map(|c| component_constraints(rs, c, m.involution(c.side)))
        .collect();
    solve_constraints(n, &rows)
}

fn solve_constraints(n: usize, rows: &[Constraint]) -> Result<SimpleEigenvalueVector, SpectrumError> {
    let a = Matrix::from_fn(rows.len(), n, |r, c| {
        q(rows[r].0.iter().filter(|(i, _)| *i == c + 1).map(|(_, v)| v).sum())
    });
    let b: Vec<_> = rows.iter().map(|(_, v)| q(*v)).collect();
    match a.solve(&b) {
        Solution::Unique(x) => x
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if v.is_integer() {
                    v.to_integer().to_i64().ok_or(SpectrumError::NonIntegral(i + 1))
                } else {
                    Err(SpectrumError::NonIntegral(i + 1))
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SimpleEigenvalueVector::new),
        Solution::Inconsistent => Err(SpectrumError::Inconsistent),
        Solution::Underdetermined(k) => Err(SpectrumError::Underdetermined(k)),
    }
}

/// E(σ) for one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSpectrum {
    pub component: Component,
    /// Sorted.
    pub values: Vec<i64>,
}

impl ComponentSpectrum {
    pub fn spectrum(&self) -> Spectrum {
        self.values.iter().copied().collect()
    }
}

pub fn component_spectrum(rs: &RootSystem, c: &Component, x: &SimpleEigenvalueVector) -> ComponentSpectrum {
    let s = c.side.sign();
    let mut values: Vec<i64> = rs
        .sub_positive_roots(c.roots)
        .iter()
        .map(|b| s * b.evaluate(x.as_slice()))
        .collect();
    values.extend(std::iter::repeat_n(0, zero_padding(c.shape())));
    values.sort_unstable();
    ComponentSpectrum { component: c.clone(), values }
}

/// Per-component spectra of a Frobenius seaweed.
pub fn component_spectra(m: &OrbitMeander, x: &SimpleEigenvalueVector) -> Vec<ComponentSpectrum> {
    let rs = m.seaweed.root_system();
    m.components().map(|c| component_spectrum(rs, c, x)).collect()
}

/// Spectrum of ad F̂ on a Frobenius seaweed with π₁∪π₂ = Π.
pub fn full_spectrum(s: &Seaweed) -> Result<Spectrum, SpectrumError> {
    let m = OrbitMeander::new(s);
    let x = simple_eigenvalues_of(&m)?;
    let mut sp = Spectrum::new();
    for cs in component_spectra(&m, &x) {
        sp.merge(&cs.spectrum());
    }
    Ok(sp)
}

/// Union of the spectra of the direct summands.
pub fn decomposed_spectrum(s: &Seaweed) -> Result<Spectrum, SpectrumError> {
    let mut sp = Spectrum::new();
    for part in s.decompose_direct_sum() {
        sp.merge(&full_spectrum(&part)?);
    }
    Ok(sp)
}

/// The root ᾱ paired with β inside an A-type component, if any.
pub fn symmetric_root(rs: &RootSystem, c: &Component, beta: &PositiveRoot) -> Result<Option<PositiveRoot>, SpectrumError> {
    let DiagramShape::A(k) = c.shape() else {
        return Err(SpectrumError::NotTypeA);
    };
    if beta.support().is_empty() || !beta.support().is_subset(c.roots) {
        return Err(SpectrumError::RootOutsideComponent);
    }
    let pos: Vec<usize> = beta
        .support()
        .iter()
        .map(|a| c.diagram.local_index(a).expect("in component"))
        .collect();
    let i = *pos.iter().min().unwrap();
    let j = *pos.iter().max().unwrap();
    let (lo, hi) = match (i + j).cmp(&(k + 1)) {
        std::cmp::Ordering::Equal => return Ok(None),
        std::cmp::Ordering::Greater => (k + 1 - j, i - 1),
        std::cmp::Ordering::Less => (j + 1, k + 1 - i),
    };
    let mut coeffs = vec![0u32; rs.rank()];
    for p in lo..=hi {
        coeffs[c.diagram.labels[p - 1] - 1] = 1;
    }
    Ok(Some(PositiveRoot::new(coeffs)))
}

/// Checks every symmetric pair of an A-type component:
/// s(β(x) + ᾱ(x)) = 1.
pub fn symmetric_relation_holds(rs: &RootSystem, c: &Component, x: &SimpleEigenvalueVector) -> bool {
    let s = c.side.sign();
    rs.sub_positive_roots(c.roots).iter().all(|b| match symmetric_root(rs, c, b) {
        Ok(Some(bar)) => s * (b.evaluate(x.as_slice()) + bar.evaluate(x.as_slice())) == 1,
        Ok(None) => true,
        Err(_) => false,
    })
}

/// Table of admissible simple eigenvalues by component shape: xᵢ in
/// {−2,…,3} for A and D, ±xᵢ in {−1,0,1} for B, ±xᵢ in {0,1} for C.
pub fn bounds_hold(c: &Component, x: &SimpleEigenvalueVector) -> bool {
    let s = c.side.sign();
    c.roots.iter().all(|a| {
        let v = x.get(a);
        match c.shape() {
            DiagramShape::A(_) | DiagramShape::D(_) => (-2..=3).contains(&v),
            DiagramShape::B(_) => (-1..=1).contains(&(s * v)),
            DiagramShape::C(_) => (0..=1).contains(&(s * v)),
            _ => true,
        }
    })
}

/// |xᵢ| ≤ 3 on A and D components.
pub fn abs_bound_holds(c: &Component, x: &SimpleEigenvalueVector) -> bool {
    match c.shape() {
        DiagramShape::A(_) | DiagramShape::D(_) => c.roots.iter().all(|a| x.get(a).abs() <= 3),
        _ => true,
    }
}

/// s·Σ_{α∈σ} x_α = 1 for A-type components.
pub fn component_sum_holds(c: &Component, x: &SimpleEigenvalueVector) -> bool {
    match c.shape() {
        DiagramShape::A(_) => c.side.sign() * c.roots.iter().map(|a| x.get(a)).sum::<i64>() == 1,
        _ => true,
    }
}

/// Constraint residual check, used to validate externally supplied vectors.
pub fn satisfies_constraints(m: &OrbitMeander, x: &SimpleEigenvalueVector) -> bool {
    let rs = m.seaweed.root_system();
    m.components()
        .flat_map(|c| component_constraints(rs, c, m.involution(c.side)))
        .all(|(lhs, rhs)| lhs.iter().map(|&(i, c)| c * x.get(i)).sum::<i64>() == rhs)
}
