//! Root systems of the simple Lie algebras.
//!
//! Simple roots are numbered `1..=n`. For B, C and D the root α₁ carries the
//! exceptional structure (the short root of B, the long root of C, one prong
//! of the fork of D). E and F follow Bourbaki; in G₂ the root α₁ is long.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::RootSysError;

/// Largest rank representable by [`RootSet`].
pub const MAX_RANK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A simple type together with its rank, e.g. `D14` or `E6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSysError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(RootSysError::InvalidType { family, rank });
        }
        if rank > MAX_RANK {
            return Err(RootSysError::RankTooLarge(rank));
        }
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = RootSysError;

    /// Parses `A9`, `d14`, `E6`, `F4`, `G2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| RootSysError::Parse(s.to_string()))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(RootSysError::Parse(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootSysError::Parse(s.to_string()))?;
        LieType::new(family, rank)
    }
}

/// A set of simple roots, stored as a bitmask (bit `i-1` is αᵢ).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootSet(u64);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn from_bits(bits: u64) -> Self {
        RootSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{α₁,…,α_n}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            RootSet(u64::MAX)
        } else {
            RootSet((1u64 << n) - 1)
        }
    }

    /// Builds a set from 1-based indices. Panics on index 0 or > 64.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = RootSet::EMPTY;
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn singleton(i: usize) -> Self {
        RootSet::from_indices([i])
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=64).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!((1..=64).contains(&i), "simple root index {i} out of range");
        self.0 |= 1 << (i - 1);
    }

    pub fn remove(&mut self, i: usize) {
        if (1..=64).contains(&i) {
            self.0 &= !(1 << (i - 1));
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: RootSet) -> RootSet {
        RootSet(self.0 | other.0)
    }

    pub fn intersection(self, other: RootSet) -> RootSet {
        RootSet(self.0 & other.0)
    }

    pub fn difference(self, other: RootSet) -> RootSet {
        RootSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest index, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl DoubleEndedIterator<Item = usize> {
        (1..=64).filter(move |&i| self.contains(i))
    }

    /// Indices in the order they are usually written, `α_n … α₁`.
    pub fn to_desc_vec(self) -> Vec<usize> {
        self.iter().rev().collect()
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().rev()).finish()
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().rev().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        RootSet::from_indices(iter)
    }
}

/// β = Σ cᵢαᵢ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveRoot {
    coeffs: Vec<u32>,
    support: RootSet,
}

impl PositiveRoot {
    pub fn new(coeffs: Vec<u32>) -> Self {
        let support = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i + 1)
            .collect();
        PositiveRoot { coeffs, support }
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut coeffs = vec![0; n];
        coeffs[i - 1] = 1;
        PositiveRoot::new(coeffs)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of αᵢ (1-based).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs[i - 1]
    }

    pub fn height(&self) -> u32 {
        self.coeffs.iter().sum()
    }

    pub fn support(&self) -> RootSet {
        self.support
    }

    /// β(x) for x given on simple roots, `x[i-1] = αᵢ(x)`.
    pub fn evaluate(&self, x: &[i64]) -> i64 {
        self.coeffs
            .iter()
            .zip(x)
            .map(|(&c, &v)| c as i64 * v)
            .sum()
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if c > 1 {
                write!(f, "{c}")?;
            }
            write!(f, "a{}", i + 1)?;
        }
        Ok(())
    }
}

/// Shape of a connected subdiagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramShape {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl DiagramShape {
    pub fn rank(&self) -> usize {
        match *self {
            DiagramShape::A(k) | DiagramShape::B(k) | DiagramShape::C(k) | DiagramShape::D(k) => k,
            DiagramShape::E6 => 6,
            DiagramShape::E7 => 7,
            DiagramShape::E8 => 8,
            DiagramShape::F4 => 4,
            DiagramShape::G2 => 2,
        }
    }

    pub fn lie_type(&self) -> LieType {
        let (family, rank) = match *self {
            DiagramShape::A(k) => (Family::A, k),
            DiagramShape::B(k) => (Family::B, k),
            DiagramShape::C(k) => (Family::C, k),
            DiagramShape::D(k) => (Family::D, k),
            DiagramShape::E6 => (Family::E, 6),
            DiagramShape::E7 => (Family::E, 7),
            DiagramShape::E8 => (Family::E, 8),
            DiagramShape::F4 => (Family::F, 4),
            DiagramShape::G2 => (Family::G, 2),
        };
        LieType::new(family, rank).expect("shapes are valid types")
    }
}

impl fmt::Display for DiagramShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lie_type())
    }
}

/// A classified connected subdiagram together with a numbering of its
/// vertices in the standard convention for its shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalDiagram {
    pub shape: DiagramShape,
    /// `labels[k-1]` is the ambient index of the local root α_k.
    pub labels: Vec<usize>,
}

impl LocalDiagram {
    /// Local index of an ambient root, if it belongs to the diagram.
    pub fn local_index(&self, ambient: usize) -> Option<usize> {
        self.labels.iter().position(|&a| a == ambient).map(|p| p + 1)
    }

    pub fn roots(&self) -> RootSet {
        self.labels.iter().copied().collect()
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<PositiveRoot>,
}

impl RootSystem {
    pub fn new(t: LieType) -> Self {
        let gram = gram_matrix(t);
        let n = t.rank();
        let cartan = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        let mut rs = RootSystem {
            lie_type: t,
            gram,
            cartan,
            positive_roots: Vec::new(),
        };
        rs.positive_roots = rs.generate_roots();
        rs
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn simple_roots(&self) -> RootSet {
        RootSet::full(self.rank())
    }

    /// `cartan()[i][j] = 2(αᵢ,αⱼ)/(αⱼ,αⱼ)`, 0-based.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// (αᵢ,αⱼ) with the shortest roots normalised to length² 2.
    pub fn inner(&self, i: usize, j: usize) -> i64 {
        self.gram[i - 1][j - 1]
    }

    pub fn length_sq(&self, i: usize) -> i64 {
        self.inner(i, i)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.inner(i, j) != 0
    }

    /// Number of lines joining αᵢ and αⱼ in the Dynkin diagram.
    pub fn bond(&self, i: usize, j: usize) -> i64 {
        if i == j {
            0
        } else {
            self.cartan[i - 1][j - 1] * self.cartan[j - 1][i - 1]
        }
    }

    pub fn neighbours(&self, i: usize) -> RootSet {
        (1..=self.rank()).filter(|&j| self.adjacent(i, j)).collect()
    }

    /// Δ₊ ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    /// Positive roots supported in σ.
    pub fn sub_positive_roots(&self, sigma: RootSet) -> Vec<PositiveRoot> {
        self.positive_roots
            .iter()
            .filter(|b| b.support().is_subset(sigma))
            .cloned()
            .collect()
    }

    pub fn count_sub_positive_roots(&self, sigma: RootSet) -> usize {
        self.positive_roots
            .iter()
            .filter(|b| b.support().is_subset(sigma))
            .count()
    }

    /// Connected components of the subdiagram induced on σ, ordered by
    /// smallest index.
    pub fn connected_components(&self, sigma: RootSet) -> Vec<RootSet> {
        let mut rest = sigma;
        let mut out = Vec::new();
        while let Some(start) = rest.min() {
            let mut comp = RootSet::singleton(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbours(v).intersection(sigma).iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self, sigma: RootSet) -> bool {
        !sigma.is_empty() && self.connected_components(sigma).len() == 1
    }

    pub fn induced_shape(&self, sigma: RootSet) -> Result<DiagramShape, RootSysError> {
        self.classify(sigma).map(|d| d.shape)
    }

    /// Classifies the connected subdiagram on σ and numbers its vertices.
    ///
    /// A chain with no multiple bond is `A_k`, including the fork of D
    /// missing a prong and `{α₁,α₂,α₃}` in D (D₃ ≅ A₃). A rank-two diagram
    /// with a double bond is reported as `C₂` with α₁ the long root.
    pub fn classify(&self, sigma: RootSet) -> Result<LocalDiagram, RootSysError> {
        if !sigma.is_subset(self.simple_roots()) {
            return Err(RootSysError::NotSubset(sigma));
        }
        if !self.is_connected(sigma) {
            return Err(RootSysError::Disconnected(sigma));
        }
        let verts: Vec<usize> = sigma.iter().collect();
        let k = verts.len();
        let nb = |v: usize| self.neighbours(v).intersection(sigma);
        let deg = |v: usize| nb(v).len();

        let multi: Vec<(usize, usize)> = verts
            .iter()
            .flat_map(|&u| verts.iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| u < v && self.bond(u, v) > 1)
            .collect();

        if let Some(&(u, v)) = multi.first() {
            if self.bond(u, v) == 3 {
                let (long, short) = if self.length_sq(u) > self.length_sq(v) { (u, v) } else { (v, u) };
                return Ok(LocalDiagram { shape: DiagramShape::G2, labels: vec![long, short] });
            }
            if k == 2 {
                let (long, short) = if self.length_sq(u) > self.length_sq(v) { (u, v) } else { (v, u) };
                return Ok(LocalDiagram { shape: DiagramShape::C(2), labels: vec![long, short] });
            }
            let ends: Vec<usize> = verts.iter().copied().filter(|&w| deg(w) == 1).collect();
            if deg(u) == 2 && deg(v) == 2 {
                // double bond in the middle: F4, numbered from the long end
                let long_end = ends
                    .iter()
                    .copied()
                    .find(|&e| self.length_sq(e) == self.length_sq(u).max(self.length_sq(v)))
                    .expect("F4 has a long end");
                let labels = self.walk_chain(sigma, long_end);
                return Ok(LocalDiagram { shape: DiagramShape::F4, labels });
            }
            let t = if deg(u) == 1 { u } else { v };
            let labels = self.walk_chain(sigma, t);
            let other = if t == u { v } else { u };
            let shape = if self.length_sq(t) < self.length_sq(other) {
                DiagramShape::B(k)
            } else {
                DiagramShape::C(k)
            };
            return Ok(LocalDiagram { shape, labels });
        }

        let branches: Vec<usize> = verts.iter().copied().filter(|&w| deg(w) == 3).collect();
        if branches.is_empty() {
            let start = verts.iter().copied().find(|&w| deg(w) <= 1).expect("chain has an end");
            let labels = self.walk_chain(sigma, start);
            return Ok(LocalDiagram { shape: DiagramShape::A(k), labels });
        }
        let b = branches[0];
        // arms as vertex lists walking away from the branch point
        let mut arms: Vec<Vec<usize>> = nb(b)
            .iter()
            .map(|first| {
                let mut arm = vec![first];
                let mut prev = b;
                let mut cur = first;
                loop {
                    let next: Vec<usize> = nb(cur).iter().filter(|&w| w != prev).collect();
                    match next.as_slice() {
                        [w] => {
                            arm.push(*w);
                            prev = cur;
                            cur = *w;
                        }
                        _ => break,
                    }
                }
                arm
            })
            .collect();
        arms.sort_by_key(|a| (a.len(), a.iter().copied().min()));
        let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
        match lens.as_slice() {
            [1, 1, _] => {
                // the longest arm continues the chain; among equal arms
                // prefer the one carrying the largest index
                let mut arms = arms;
                if lens[2] == 1 {
                    arms.sort_by_key(|a| a[0]);
                }
                let mut labels = vec![arms[0][0], arms[1][0], b];
                labels.extend(arms[2].iter().copied());
                Ok(LocalDiagram { shape: DiagramShape::D(k), labels })
            }
            [1, 2, m] if *m >= 2 && *m <= 4 => {
                // for E6 the arm holding the smaller index becomes α₃,α₁
                let (short_pair, long_arm) = (&arms[1], &arms[2]);
                let mut labels = vec![0; k];
                labels[0] = short_pair[1];
                labels[1] = arms[0][0];
                labels[2] = short_pair[0];
                labels[3] = b;
                for (p, &w) in long_arm.iter().enumerate() {
                    labels[4 + p] = w;
                }
                let shape = match m {
                    2 => DiagramShape::E6,
                    3 => DiagramShape::E7,
                    _ => DiagramShape::E8,
                };
                Ok(LocalDiagram { shape, labels })
            }
            _ => Err(RootSysError::Unclassifiable(sigma)),
        }
    }

    fn walk_chain(&self, sigma: RootSet, start: usize) -> Vec<usize> {
        let mut out = vec![start];
        let mut prev = 0;
        let mut cur = start;
        loop {
            let next = self
                .neighbours(cur)
                .intersection(sigma)
                .iter()
                .find(|&w| w != prev);
            match next {
                Some(w) => {
                    out.push(w);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        out
    }

    /// Horizontal column of αᵢ in the standard drawing; larger is further
    /// right. Classical diagrams are drawn α_n … α₁ from left to right.
    pub fn column(&self, i: usize) -> i64 {
        let n = self.rank() as i64;
        let i = i as i64;
        match self.lie_type.family {
            Family::A | Family::B | Family::C => n + 1 - i,
            Family::D => {
                if i <= 2 {
                    n - 1
                } else {
                    n + 1 - i
                }
            }
            Family::E => match i {
                1 => 7,
                2 => 6,
                _ => 9 - i,
            },
            Family::F => i,
            Family::G => 3 - i,
        }
    }

    fn generate_roots(&self) -> Vec<PositiveRoot> {
        let n = self.rank();
        let mut known: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut layer: Vec<Vec<u32>> = (1..=n).map(|i| PositiveRoot::simple(n, i).coeffs).collect();
        known.extend(layer.iter().cloned());
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    // ⟨β, αᵢ^∨⟩
                    let pairing: i64 = (0..n).map(|j| beta[j] as i64 * self.cartan[j][i]).sum();
                    let mut p = 0i64;
                    let mut probe = beta.clone();
                    while probe[i] > 0 {
                        probe[i] -= 1;
                        if known.contains(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let q = p - pairing;
                    if q > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            layer = next;
        }
        let mut roots: Vec<PositiveRoot> = known.into_iter().map(PositiveRoot::new).collect();
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.coeffs.cmp(&b.coeffs)));
        roots
    }
}

/// Symmetric matrix of inner products of simple roots.
fn gram_matrix(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    match t.family {
        Family::A => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            for i in 1..n {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            // α₁ short
            g[0][0] = 2;
            for i in 2..=n {
                g[i - 1][i - 1] = 4;
            }
            link(&mut g, 1, 2, -2);
            for i in 2..n {
                link(&mut g, i, i + 1, -2);
            }
        }
        Family::C => {
            // α₁ long
            g[0][0] = 4;
            for i in 2..=n {
                g[i - 1][i - 1] = 2;
            }
            link(&mut g, 1, 2, -2);
            for i in 2..n {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::D => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            link(&mut g, 1, 3, -1);
            link(&mut g, 2, 3, -1);
            for i in 3..n {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::E => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            for &(i, j) in &[(1, 3), (3, 4), (4, 5), (2, 4), (5, 6), (6, 7), (7, 8)] {
                if j <= n {
                    link(&mut g, i, j, -1);
                }
            }
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -2);
            link(&mut g, 3, 4, -1);
        }
        Family::G => {
            g[0][0] = 6;
            g[1][1] = 2;
            link(&mut g, 1, 2, -3);
        }
    }
    g
}
