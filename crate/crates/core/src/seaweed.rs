//! Seaweed subalgebras 𝔭(π₁|π₂) and the composition notation.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::SeaweedError;
use crate::rootsys::{LieType, LocalDiagram, RootSet, RootSystem};

/// 𝔭(π₁|π₂): the roots of π₁ span the top, those of π₂ the bottom.
#[derive(Clone)]
pub struct Seaweed {
    rs: Arc<RootSystem>,
    pi1: RootSet,
    pi2: RootSet,
}

impl Seaweed {
    pub fn new(rs: Arc<RootSystem>, pi1: RootSet, pi2: RootSet) -> Result<Self, SeaweedError> {
        let n = rs.rank();
        for set in [pi1, pi2] {
            if let Some(bad) = set.difference(RootSet::full(n)).min() {
                return Err(SeaweedError::IndexOutOfRange { index: bad, rank: n });
            }
        }
        Ok(Seaweed { rs, pi1, pi2 })
    }

    /// Convenience constructor from index lists.
    pub fn from_indices(t: LieType, pi1: &[usize], pi2: &[usize]) -> Result<Self, SeaweedError> {
        let n = t.rank();
        for &i in pi1.iter().chain(pi2) {
            if i == 0 || i > n {
                return Err(SeaweedError::IndexOutOfRange { index: i, rank: n });
            }
        }
        Seaweed::new(
            Arc::new(RootSystem::new(t)),
            pi1.iter().copied().collect(),
            pi2.iter().copied().collect(),
        )
    }

    /// 𝔭_n(a|b) = 𝔭(Π∖φ(a) | Π∖φ(b)).
    pub fn from_compositions(t: LieType, a: &Composition, b: &Composition) -> Result<Self, SeaweedError> {
        Seaweed::from_compositions_in(Arc::new(RootSystem::new(t)), a, b)
    }

    pub fn from_compositions_in(rs: Arc<RootSystem>, a: &Composition, b: &Composition) -> Result<Self, SeaweedError> {
        let n = rs.rank();
        let full = RootSet::full(n);
        let pa = a.with_rank(n)?.phi();
        let pb = b.with_rank(n)?.phi();
        Seaweed::new(rs, full.difference(pa), full.difference(pb))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn lie_type(&self) -> LieType {
        self.rs.lie_type()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn pi1(&self) -> RootSet {
        self.pi1
    }

    pub fn pi2(&self) -> RootSet {
        self.pi2
    }

    /// π_∪ = Π∖(π₁∩π₂).
    pub fn pi_union(&self) -> RootSet {
        self.rs.simple_roots().difference(self.pi1.intersection(self.pi2))
    }

    /// Whether π₁∪π₂ = Π.
    pub fn covers(&self) -> bool {
        self.pi1.union(self.pi2) == self.rs.simple_roots()
    }

    /// |Δ₊(π₁)| + |Δ₊(π₂)| + n.
    pub fn dimension(&self) -> usize {
        self.rs.count_sub_positive_roots(self.pi1) + self.rs.count_sub_positive_roots(self.pi2) + self.rank()
    }

    /// 𝔭(π₂|π₁).
    pub fn flip(&self) -> Seaweed {
        Seaweed { rs: self.rs.clone(), pi1: self.pi2, pi2: self.pi1 }
    }

    /// Representative of `{𝔭(π₁|π₂), 𝔭(π₂|π₁)}` with the smaller bitmask pair.
    pub fn canonical_form(&self) -> Seaweed {
        if (self.pi2.bits(), self.pi1.bits()) < (self.pi1.bits(), self.pi2.bits()) {
            self.flip()
        } else {
            self.clone()
        }
    }

    /// Splits at the simple roots outside π₁∪π₂. Each summand lives over the
    /// root system of its fragment's shape, renumbered by [`LocalDiagram`].
    pub fn decompose_direct_sum(&self) -> Vec<Seaweed> {
        self.summands().into_iter().map(|(s, _)| s).collect()
    }

    /// Like [`Seaweed::decompose_direct_sum`], keeping the ambient labels.
    pub fn summands(&self) -> Vec<(Seaweed, LocalDiagram)> {
        if self.covers() {
            let local = LocalDiagram {
                shape: self.rs.induced_shape(self.rs.simple_roots()).expect("simple diagram"),
                labels: (1..=self.rank()).collect(),
            };
            return vec![(self.clone(), local)];
        }
        let union = self.pi1.union(self.pi2);
        self.rs
            .connected_components(union)
            .into_iter()
            .map(|frag| {
                let local = self.rs.classify(frag).expect("subdiagrams of simple diagrams are simple");
                let restrict = |pi: RootSet| -> RootSet {
                    pi.intersection(frag)
                        .iter()
                        .map(|a| local.local_index(a).expect("in fragment"))
                        .collect()
                };
                let rs = Arc::new(RootSystem::new(local.shape.lie_type()));
                let s = Seaweed { rs, pi1: restrict(self.pi1), pi2: restrict(self.pi2) };
                (s, local)
            })
            .collect()
    }
}

impl PartialEq for Seaweed {
    fn eq(&self, other: &Self) -> bool {
        self.lie_type() == other.lie_type() && self.pi1 == other.pi1 && self.pi2 == other.pi2
    }
}

impl Eq for Seaweed {}

impl Hash for Seaweed {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.lie_type().hash(state);
        self.pi1.hash(state);
        self.pi2.hash(state);
    }
}

impl fmt::Debug for Seaweed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p[{}]({}|{})", self.lie_type(), self.pi1, self.pi2)
    }
}

impl fmt::Display for Seaweed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A sequence of positive integers with sum at most the ambient rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
    rank: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>, rank: usize) -> Result<Self, SeaweedError> {
        if parts.contains(&0) {
            return Err(SeaweedError::ZeroPart);
        }
        let sum: usize = parts.iter().sum();
        if sum > rank {
            return Err(SeaweedError::CompositionTooLarge { sum, rank });
        }
        Ok(Composition { parts, rank })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn with_rank(&self, rank: usize) -> Result<Self, SeaweedError> {
        Composition::new(self.parts.clone(), rank)
    }

    /// φ(a) = {α_{n+1−a₁}, α_{n+1−(a₁+a₂)}, …}.
    pub fn phi(&self) -> RootSet {
        let mut acc = 0;
        let mut out = RootSet::EMPTY;
        for &p in &self.parts {
            acc += p;
            out.insert(self.rank + 1 - acc);
        }
        out
    }

    /// Inverse of [`Composition::phi`].
    pub fn phi_inv(set: RootSet, rank: usize) -> Result<Self, SeaweedError> {
        if let Some(bad) = set.difference(RootSet::full(rank)).min() {
            return Err(SeaweedError::IndexOutOfRange { index: bad, rank });
        }
        let mut parts = Vec::new();
        let mut prev = 0;
        for i in set.iter().rev() {
            let s = rank + 1 - i;
            parts.push(s - prev);
            prev = s;
        }
        Composition::new(parts, rank)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::DiagramShape;

    fn t(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        let c = Composition::new(vec![1, 1, 5, 1], 8).unwrap();
        assert_eq!(c.phi(), RootSet::from_indices([8, 7, 2, 1]));
        assert_eq!(RootSet::full(8).difference(c.phi()), RootSet::from_indices([6, 5, 4, 3]));
        assert_eq!(Composition::new(vec![4], 8).unwrap().phi(), RootSet::singleton(5));
        assert_eq!(Composition::new(vec![], 8).unwrap().phi(), RootSet::EMPTY);
        assert!(Composition::new(vec![5, 4], 8).is_err());
        assert!(Composition::new(vec![0, 1], 8).is_err());
    }

    #[test]
    fn phi_round_trip() {
        for bits in 0..(1u64 << 7) {
            let s = RootSet::from_bits(bits);
            assert_eq!(Composition::phi_inv(s, 7).unwrap().phi(), s);
        }
        let c = Composition::new(vec![2, 1, 3], 7).unwrap();
        assert_eq!(Composition::phi_inv(c.phi(), 7).unwrap(), c);
    }

    #[test]
    fn from_compositions_examples() {
        let a = Composition::new(vec![1, 1, 5, 1], 8).unwrap();
        let b = Composition::new(vec![4], 8).unwrap();
        let s = Seaweed::from_compositions(t("C8"), &a, &b).unwrap();
        assert_eq!(s.pi1(), RootSet::from_indices([6, 5, 4, 3]));
        assert_eq!(s.pi2(), RootSet::full(8).difference(RootSet::singleton(5)));

        let d = Seaweed::from_compositions(t("D4"), &Composition::new(vec![1; 4], 4).unwrap(), &Composition::new(vec![], 4).unwrap()).unwrap();
        assert_eq!((d.pi1(), d.pi2()), (RootSet::EMPTY, RootSet::full(4)));

        let a1 = Seaweed::from_compositions(t("A1"), &Composition::new(vec![1], 1).unwrap(), &Composition::new(vec![], 1).unwrap()).unwrap();
        assert_eq!((a1.pi1(), a1.pi2()), (RootSet::EMPTY, RootSet::full(1)));
        assert_eq!(a1.dimension(), 2);
    }

    #[test]
    fn decompose_examples() {
        let s = Seaweed::from_indices(t("A5"), &[5, 4, 2, 1], &[5, 4, 2, 1]).unwrap();
        let parts = s.summands();
        assert_eq!(parts.len(), 2);
        for (p, _) in &parts {
            assert_eq!(p.lie_type(), t("A2"));
            assert_eq!((p.pi1(), p.pi2()), (RootSet::full(2), RootSet::full(2)));
        }
        assert_eq!(parts[0].1.roots(), RootSet::from_indices([1, 2]));
        assert_eq!(parts[1].1.roots(), RootSet::from_indices([4, 5]));

        let d = Seaweed::from_indices(t("D5"), &[5, 3, 2, 1], &[5, 3, 2, 1]).unwrap();
        let parts = d.summands();
        let shapes: Vec<DiagramShape> = parts.iter().map(|(_, l)| l.shape).collect();
        assert_eq!(shapes, vec![DiagramShape::A(3), DiagramShape::A(1)]);
        let total: usize = parts.iter().map(|(p, _)| p.rank()).sum();
        assert_eq!(total, 5 - 1);

        let full = Seaweed::from_indices(t("B3"), &[1, 2], &[3]).unwrap();
        assert_eq!(full.decompose_direct_sum(), vec![full.clone()]);
    }

    #[test]
    fn canonical_form_is_swap_only() {
        let e6 = t("E6");
        let x = Seaweed::from_indices(e6, &[6, 5, 4, 3, 2, 1], &[6, 3]).unwrap();
        let y = Seaweed::from_indices(e6, &[6, 5, 4, 3, 2, 1], &[5, 1]).unwrap();
        assert_ne!(x.canonical_form(), y.canonical_form());
        assert_eq!(x.canonical_form(), x.flip().canonical_form());
        let all = Seaweed::from_indices(e6, &[1, 2, 3, 4, 5, 6], &[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(all.canonical_form(), all);
        assert_eq!(x.canonical_form().canonical_form(), x.canonical_form());
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Seaweed::from_indices(t("A3"), &[4], &[]).is_err());
        assert!(Seaweed::from_indices(t("A3"), &[0], &[]).is_err());
    }
}
