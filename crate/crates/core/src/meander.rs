//! Orbit meanders: components, the involutions i₁ and i₂, the orbits of
//! i₁i₂, U-turns and the winding-up moves.

use std::fmt;
use std::sync::Arc;

use crate::error::MeanderError;
use crate::rootsys::{DiagramShape, Family, LieType, LocalDiagram, RootSet, RootSystem};
use crate::seaweed::{Composition, Seaweed};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Top,
    Bottom,
}

impl Side {
    /// +1 on top (π₁), −1 on the bottom (π₂).
    pub fn sign(self) -> i64 {
        match self {
            Side::Top => 1,
            Side::Bottom => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Side::Top => '+',
            Side::Bottom => '-',
        }
    }
}

/// A maximal connected piece of π₁ or π₂.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub side: Side,
    pub roots: RootSet,
    pub diagram: LocalDiagram,
}

impl Component {
    pub fn shape(&self) -> DiagramShape {
        self.diagram.shape
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Involution {
    perm: Vec<usize>,
}

impl Involution {
    pub fn identity(n: usize) -> Self {
        Involution { perm: (1..=n).collect() }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i - 1]
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// Images of α₁…α_n.
    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    /// Pairs `(α, β)` with `α < β` exchanged by the involution.
    pub fn swaps(&self) -> Vec<(usize, usize)> {
        (1..=self.perm.len())
            .filter_map(|i| {
                let j = self.apply(i);
                (i < j).then_some((i, j))
            })
            .collect()
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.perm[a - 1] = b;
        self.perm[b - 1] = a;
    }
}

/// −w₀ on one connected component, as pairs in local labels.
fn local_swaps(shape: DiagramShape) -> Vec<(usize, usize)> {
    match shape {
        DiagramShape::A(k) => (1..=k / 2).map(|i| (i, k + 1 - i)).collect(),
        DiagramShape::D(k) if k % 2 == 1 => vec![(1, 2)],
        DiagramShape::E6 => vec![(1, 6), (3, 5)],
        _ => Vec::new(),
    }
}

/// The involution of a subset σ ⊆ Π of a root system: −w₀ on each
/// component of σ, identity elsewhere.
pub fn involution_of(rs: &RootSystem, sigma: RootSet) -> Involution {
    let mut inv = Involution::identity(rs.rank());
    for comp in rs.connected_components(sigma) {
        let d = rs.classify(comp).expect("components are connected");
        for (a, b) in local_swaps(d.shape) {
            inv.swap(d.labels[a - 1], d.labels[b - 1]);
        }
    }
    inv
}

pub fn side_components(rs: &RootSystem, side: Side, sigma: RootSet) -> Vec<Component> {
    rs.connected_components(sigma)
        .into_iter()
        .map(|roots| Component { side, roots, diagram: rs.classify(roots).expect("connected") })
        .collect()
}

/// Components of π₁ (top) and π₂ (bottom).
pub fn components(s: &Seaweed) -> (Vec<Component>, Vec<Component>) {
    let rs = s.root_system();
    (side_components(rs, Side::Top, s.pi1()), side_components(rs, Side::Bottom, s.pi2()))
}

pub fn involution(s: &Seaweed, side: Side) -> Involution {
    let pi = match side {
        Side::Top => s.pi1(),
        Side::Bottom => s.pi2(),
    };
    involution_of(s.root_system(), pi)
}

/// Cycles of α ↦ i₁(i₂(α)), each starting at its smallest index.
pub fn orbit_cycles(i1: &Involution, i2: &Involution) -> Vec<Vec<usize>> {
    let n = i1.len();
    let mut seen = vec![false; n + 1];
    let mut out = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cycle.push(cur);
            cur = i1.apply(i2.apply(cur));
        }
        out.push(cycle);
    }
    out
}

/// Orbit test on raw data: every orbit meets `pi_union` exactly once.
pub fn orbits_meet_once(i1: &Involution, i2: &Involution, pi_union: RootSet) -> bool {
    let n = i1.len();
    let mut seen = 0u64;
    for start in 1..=n {
        if seen >> (start - 1) & 1 == 1 {
            continue;
        }
        let mut hits = 0;
        let mut cur = start;
        while seen >> (cur - 1) & 1 == 0 {
            seen |= 1 << (cur - 1);
            if pi_union.contains(cur) {
                hits += 1;
            }
            cur = i1.apply(i2.apply(cur));
        }
        if hits != 1 {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone)]
pub struct OrbitMeander {
    pub seaweed: Seaweed,
    pub top: Vec<Component>,
    pub bottom: Vec<Component>,
    pub i1: Involution,
    pub i2: Involution,
    pub orbits: Vec<Vec<usize>>,
}

impl OrbitMeander {
    pub fn new(s: &Seaweed) -> Self {
        let (top, bottom) = components(s);
        let i1 = involution(s, Side::Top);
        let i2 = involution(s, Side::Bottom);
        let orbits = orbit_cycles(&i1, &i2);
        OrbitMeander { seaweed: s.clone(), top, bottom, i1, i2, orbits }
    }

    pub fn components(&self) -> impl Iterator<Item = &Component> {
        self.top.iter().chain(&self.bottom)
    }

    pub fn involution(&self, side: Side) -> &Involution {
        match side {
            Side::Top => &self.i1,
            Side::Bottom => &self.i2,
        }
    }

    /// Frobenius test; requires π₁∪π₂ = Π.
    pub fn is_frobenius(&self) -> Result<bool, MeanderError> {
        let s = &self.seaweed;
        if !s.covers() {
            let missing = s.root_system().simple_roots().difference(s.pi1().union(s.pi2()));
            return Err(MeanderError::NotFullUnion(missing));
        }
        let pu = s.pi_union();
        Ok(self
            .orbits
            .iter()
            .all(|o| o.iter().filter(|&&a| pu.contains(a)).count() == 1))
    }

    pub fn u_turn_report(&self) -> UTurnReport {
        let s = &self.seaweed;
        let rs = s.root_system();
        let both = s.pi1().intersection(s.pi2());
        let per_orbit = self
            .orbits
            .iter()
            .map(|orbit| {
                let start = orbit
                    .iter()
                    .copied()
                    .filter(|&a| both.contains(a) && (self.i1.apply(a) == a || self.i2.apply(a) == a))
                    .min();
                let mut entry = OrbitUTurns { orbit: orbit.clone(), start, right: 0, left: 0 };
                let Some(start) = start else {
                    return entry;
                };
                let mut side = if self.i1.apply(start) == start { Side::Bottom } else { Side::Top };
                let mut cur = start;
                for _ in 0..=orbit.len() {
                    let next = self.involution(side).apply(cur);
                    if next == cur {
                        break;
                    }
                    if rs.adjacent(cur, next) {
                        let (from, to) = (rs.column(cur), rs.column(next));
                        let right = match side {
                            Side::Top => to < from,
                            Side::Bottom => to > from,
                        };
                        if right {
                            entry.right += 1;
                        } else {
                            entry.left += 1;
                        }
                    }
                    cur = next;
                    side = match side {
                        Side::Top => Side::Bottom,
                        Side::Bottom => Side::Top,
                    };
                }
                entry
            })
            .collect();
        UTurnReport { per_orbit }
    }
}

pub fn orbits(s: &Seaweed) -> OrbitMeander {
    OrbitMeander::new(s)
}

pub fn is_frobenius(s: &Seaweed) -> Result<bool, MeanderError> {
    OrbitMeander::new(s).is_frobenius()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitUTurns {
    pub orbit: Vec<usize>,
    /// Fixed point of π₁∩π₂ the orbit is read from, when one exists.
    pub start: Option<usize>,
    pub right: usize,
    pub left: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UTurnReport {
    pub per_orbit: Vec<OrbitUTurns>,
}

impl UTurnReport {
    /// At most one right and one left U-turn per orbit.
    pub fn within_bounds(&self) -> bool {
        self.per_orbit.iter().all(|o| o.right <= 1 && o.left <= 1)
    }

    pub fn for_orbit_containing(&self, a: usize) -> Option<&OrbitUTurns> {
        self.per_orbit.iter().find(|o| o.orbit.contains(&a))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WindingMove {
    BlockCreation,
    RotationExpansion,
    PureExpansion,
    FlipUp,
}

impl WindingMove {
    pub const ALL: [WindingMove; 4] = [
        WindingMove::BlockCreation,
        WindingMove::RotationExpansion,
        WindingMove::PureExpansion,
        WindingMove::FlipUp,
    ];
}

/// 𝓜_n(a|b).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompositionPair {
    pub n: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl fmt::Display for CompositionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "M_{}({}|{})", self.n, j(&self.a), j(&self.b))
    }
}

pub fn winding_move(m: &CompositionPair, mv: WindingMove) -> Result<CompositionPair, MeanderError> {
    let (a, b) = (&m.a, &m.b);
    match mv {
        WindingMove::BlockCreation => {
            let a1 = *a.first().ok_or(MeanderError::MovePrecondition("block creation needs a nonempty top"))?;
            let mut na = vec![2 * a1];
            na.extend(&a[1..]);
            let mut nb = vec![a1];
            nb.extend(b);
            Ok(CompositionPair { n: m.n + a1, a: na, b: nb })
        }
        WindingMove::RotationExpansion => {
            let (Some(&a1), Some(&b1)) = (a.first(), b.first()) else {
                return Err(MeanderError::MovePrecondition("rotation expansion needs nonempty top and bottom"));
            };
            if a1 <= b1 {
                return Err(MeanderError::MovePrecondition("rotation expansion needs a1 > b1"));
            }
            let mut na = vec![2 * a1 - b1];
            na.extend(&a[1..]);
            let mut nb = vec![a1];
            nb.extend(&b[1..]);
            Ok(CompositionPair { n: m.n + a1 - b1, a: na, b: nb })
        }
        WindingMove::PureExpansion => {
            if a.len() < 2 {
                return Err(MeanderError::MovePrecondition("pure expansion needs at least two top blocks"));
            }
            let (a1, a2) = (a[0], a[1]);
            let mut na = vec![a1 + 2 * a2];
            na.extend(&a[2..]);
            let mut nb = vec![a2];
            nb.extend(b);
            Ok(CompositionPair { n: m.n + a2, a: na, b: nb })
        }
        WindingMove::FlipUp => Ok(CompositionPair { n: m.n, a: b.clone(), b: a.clone() }),
    }
}

/// Starting meanders from which the winding-up moves generate Frobenius
/// meanders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    /// 𝓜₁(1|∅) in type A.
    A,
    /// 𝓜_q(1^q|∅) in type B.
    B(usize),
    /// 𝓜_q(1^q|∅) in type C.
    C(usize),
    /// 𝓜_q(1^q|∅) in type D, q even.
    DEven(usize),
    /// 𝓜_q(1^{q−2},2|∅) in type D, q odd.
    DOddTwo(usize),
    /// 𝓜_q(1^{q−3},3|∅) in type D, q odd.
    DOddThree(usize),
}

impl Base {
    pub fn family(self) -> Family {
        match self {
            Base::A => Family::A,
            Base::B(_) => Family::B,
            Base::C(_) => Family::C,
            _ => Family::D,
        }
    }

    pub fn pair(self) -> Result<CompositionPair, MeanderError> {
        let bad = |msg: String| Err(MeanderError::InvalidBase(msg));
        let (q, a) = match self {
            Base::A => (1, vec![1]),
            Base::B(q) | Base::C(q) => {
                if q < 2 {
                    return bad(format!("rank {q} too small"));
                }
                (q, vec![1; q])
            }
            Base::DEven(q) => {
                if q < 4 || q % 2 == 1 {
                    return bad(format!("q = {q} must be even and at least 4"));
                }
                (q, vec![1; q])
            }
            Base::DOddTwo(q) | Base::DOddThree(q) => {
                if q < 3 || q % 2 == 0 {
                    return bad(format!("q = {q} must be odd and at least 3"));
                }
                let tail = if matches!(self, Base::DOddTwo(_)) { 2 } else { 3 };
                let mut a = vec![1; q - tail];
                a.push(tail);
                (q, a)
            }
        };
        Ok(CompositionPair { n: q, a, b: Vec::new() })
    }
}

/// Builds the seaweed of a composition pair in the given family.
pub fn seaweed_of_pair(family: Family, m: &CompositionPair) -> Result<Seaweed, MeanderError> {
    let t = LieType::new(family, m.n).map_err(|e| MeanderError::Seaweed(e.into()))?;
    let rs = Arc::new(RootSystem::new(t));
    let a = Composition::new(m.a.clone(), m.n)?;
    let b = Composition::new(m.b.clone(), m.n)?;
    Ok(Seaweed::from_compositions_in(rs, &a, &b)?)
}

/// Applies `moves` to `base` and returns the resulting seaweed, checking
/// that it is Frobenius.
pub fn generate_frobenius(base: Base, moves: &[WindingMove]) -> Result<Seaweed, MeanderError> {
    let mut m = base.pair()?;
    for &mv in moves {
        m = winding_move(&m, mv)?;
    }
    let s = seaweed_of_pair(base.family(), &m)?;
    if !is_frobenius(&s)? {
        return Err(MeanderError::NotFrobenius);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sw(t: &str, a: &[usize], b: &[usize]) -> Seaweed {
        Seaweed::from_indices(t.parse().unwrap(), a, b).unwrap()
    }

    fn as_sets(orbits: &[Vec<usize>]) -> Vec<RootSet> {
        let mut v: Vec<RootSet> = orbits.iter().map(|o| o.iter().copied().collect()).collect();
        v.sort();
        v
    }

    fn sets(v: &[&[usize]]) -> Vec<RootSet> {
        let mut v: Vec<RootSet> = v.iter().map(|o| o.iter().copied().collect()).collect();
        v.sort();
        v
    }

    #[test]
    fn a9_orbits() {
        let s = sw("A9", &[9, 7, 6, 4, 3, 2, 1], &[9, 8, 7, 5, 4, 3, 2, 1]);
        let m = OrbitMeander::new(&s);
        assert_eq!(as_sets(&m.orbits), sets(&[&[9, 6, 7], &[8], &[5, 4, 3, 2, 1]]));
        assert!(m.orbits.contains(&vec![6, 7, 9]));
        assert!(m.is_frobenius().unwrap());
        let tops: Vec<RootSet> = m.top.iter().map(|c| c.roots).collect();
        assert_eq!(tops, sets(&[&[9], &[7, 6], &[4, 3, 2, 1]]));
        assert_eq!(m.i1.apply(4), 1);
        assert_eq!(m.i1.apply(3), 2);
        assert_eq!(m.i2.apply(8), 8);
        assert_eq!(s.pi_union(), RootSet::from_indices([8, 6, 5]));
    }

    #[test]
    fn c8_orbits() {
        let s = sw("C8", &[8, 7, 6, 3, 2, 1], &[8, 7, 5, 4, 3, 2]);
        let m = OrbitMeander::new(&s);
        assert_eq!(as_sets(&m.orbits), sets(&[&[7, 6, 8], &[5, 2], &[4, 3], &[1]]));
        assert!(m.is_frobenius().unwrap());
        let shapes: Vec<DiagramShape> = m.top.iter().map(|c| c.shape()).collect();
        assert_eq!(shapes, vec![DiagramShape::C(3), DiagramShape::A(3)]);
    }

    #[test]
    fn non_frobenius_a7() {
        let s = sw("A7", &[7, 6, 5, 4, 3, 2], &[7, 6, 4, 3, 2, 1]);
        let m = OrbitMeander::new(&s);
        assert_eq!(as_sets(&m.orbits), sets(&[&[7, 3], &[6, 2], &[5, 4, 1]]));
        assert!(!m.is_frobenius().unwrap());
    }

    #[test]
    fn degenerate_cases() {
        let all = sw("A3", &[1, 2, 3], &[1, 2, 3]);
        assert!(!is_frobenius(&all).unwrap());
        let a1 = sw("A1", &[1], &[1]);
        assert_eq!(OrbitMeander::new(&a1).orbits, vec![vec![1]]);
        let gap = sw("A3", &[1], &[3]);
        assert!(matches!(is_frobenius(&gap), Err(MeanderError::NotFullUnion(_))));
        let (top, _) = components(&sw("A3", &[], &[1, 2, 3]));
        assert!(top.is_empty());
    }

    #[test]
    fn involutions_by_shape() {
        let d = sw("D14", &[14, 13, 12, 11, 10, 9, 8, 7, 5, 4, 3, 2, 1], &[14, 13, 12, 11, 9, 8, 7, 6, 5, 4, 3, 2]);
        let i1 = involution(&d, Side::Top);
        assert_eq!(i1.apply(1), 2);
        assert_eq!(i1.apply(4), 4);
        let e6 = sw("E6", &[1, 2, 3, 4, 5, 6], &[]);
        let i = involution(&e6, Side::Top);
        assert_eq!(i.as_slice(), &[6, 2, 5, 4, 3, 1]);
        let e7 = sw("E7", &[1, 2, 3, 4, 5, 6, 7], &[]);
        assert_eq!(involution(&e7, Side::Top), Involution::identity(7));
        for t in ["B5", "C5", "D6", "F4", "G2", "E8"] {
            let r: LieType = t.parse().unwrap();
            let s = Seaweed::from_indices(r, &(1..=r.rank()).collect::<Vec<_>>(), &[]).unwrap();
            assert_eq!(involution(&s, Side::Top), Involution::identity(r.rank()), "{t}");
        }
    }

    #[test]
    fn d14_orbits() {
        let s = sw("D14", &[14, 13, 12, 11, 10, 9, 8, 7, 5, 4, 3, 2, 1], &[14, 13, 12, 11, 9, 8, 7, 6, 5, 4, 3, 2]);
        let m = OrbitMeander::new(&s);
        assert_eq!(
            as_sets(&m.orbits),
            sets(&[&[6, 5], &[14, 11, 10, 7, 4], &[13, 12, 9, 8, 3, 2, 1]])
        );
        assert!(m.is_frobenius().unwrap());
    }

    #[test]
    fn d11_u_turns() {
        let s = sw("D11", &[11, 10, 9, 8, 7, 6, 4, 3, 2, 1], &[10, 9, 7, 6, 5, 4, 3, 2]);
        let m = OrbitMeander::new(&s);
        assert_eq!(as_sets(&m.orbits), sets(&[&[2, 7, 10, 9, 8], &[3, 6, 11], &[4, 5], &[1]]));
        let r = m.u_turn_report();
        let o1 = r.for_orbit_containing(2).unwrap();
        assert_eq!((o1.right, o1.left), (1, 1));
        let o3 = r.for_orbit_containing(4).unwrap();
        assert_eq!((o3.right, o3.left), (0, 1));
        for a in [3, 1] {
            let o = r.for_orbit_containing(a).unwrap();
            assert_eq!((o.right, o.left), (0, 0));
        }
        assert!(r.within_bounds());
    }

    #[test]
    fn odd_chain_has_no_u_turn() {
        let s = sw("A3", &[1, 2, 3], &[]);
        let r = OrbitMeander::new(&s).u_turn_report();
        assert!(r.per_orbit.iter().all(|o| o.right + o.left == 0));
    }

    #[test]
    fn moves() {
        let base = CompositionPair { n: 1, a: vec![1], b: vec![] };
        let m = winding_move(&base, WindingMove::BlockCreation).unwrap();
        assert_eq!(m, CompositionPair { n: 2, a: vec![2], b: vec![1] });
        let m7 = CompositionPair { n: 7, a: vec![4, 3], b: vec![2] };
        let p = winding_move(&m7, WindingMove::PureExpansion).unwrap();
        assert_eq!(p, CompositionPair { n: 10, a: vec![10], b: vec![3, 2] });
        let f = winding_move(&m7, WindingMove::FlipUp).unwrap();
        assert_eq!(f, CompositionPair { n: 7, a: vec![2], b: vec![4, 3] });
        let r = winding_move(&m7, WindingMove::RotationExpansion).unwrap();
        assert_eq!(r, CompositionPair { n: 9, a: vec![6, 3], b: vec![4] });
        assert!(winding_move(&f, WindingMove::RotationExpansion).is_err());
        assert!(winding_move(&f, WindingMove::PureExpansion).is_err());
    }

    #[test]
    fn bases_are_frobenius() {
        let c3 = generate_frobenius(Base::C(3), &[]).unwrap();
        assert_eq!((c3.pi1(), c3.pi2()), (RootSet::EMPTY, RootSet::full(3)));
        for q in [3, 5, 7] {
            let s = generate_frobenius(Base::DOddTwo(q), &[]).unwrap();
            assert_eq!(s.pi1(), RootSet::singleton(2));
            let s = generate_frobenius(Base::DOddThree(q), &[]).unwrap();
            assert_eq!(s.pi1(), RootSet::from_indices([3, 2]));
        }
        for q in [4, 6] {
            generate_frobenius(Base::DEven(q), &[]).unwrap();
        }
        generate_frobenius(Base::A, &[]).unwrap();
        assert!(Base::DEven(5).pair().is_err());
    }
}
