//! Exhaustive enumeration of Frobenius seaweeds with π₁∪π₂ = Π, the E6
//! reference catalog, and a census of spectral properties.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::EnumerateError;
use crate::meander::{involution_of, OrbitMeander};
use crate::rootsys::{Family, LieType, RootSet, RootSystem};
use crate::seaweed::Seaweed;
use crate::spectrum::{
    abs_bound_holds, bounds_hold, component_spectra, component_sum_holds, full_spectrum, satisfies_constraints,
    simple_eigenvalues_of, symmetric_relation_holds, verify_symmetric, verify_unbroken, zero_padding,
    SimpleEigenvalueVector, Spectrum,
};

/// Largest rank accepted by the enumerator.
pub const MAX_ENUMERATION_RANK: usize = 16;

const E6_FIXTURE: &str = include_str!("../data/e6_frobenius.txt");

/// Which seaweeds are identified in a catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Equivalence {
    /// 𝔭(π₁|π₂) ~ 𝔭(π₂|π₁).
    Swap,
    /// Swap, together with the reversal αᵢ ↦ α_{n+1−i} of the diagram,
    /// which exchanges long and short roots in F4 and G2.
    SwapAndReversal,
}

impl Equivalence {
    /// Swap only, except for F4 and G2.
    pub fn default_for(t: LieType) -> Self {
        match t.family() {
            Family::F | Family::G => Equivalence::SwapAndReversal,
            _ => Equivalence::Swap,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub lie_type: LieType,
    pub equivalence: Equivalence,
    /// Sorted by the bitmask pair of the representative.
    pub entries: Vec<Seaweed>,
}

impl Catalog {
    pub fn count(&self) -> usize {
        self.entries.len()
    }

    pub fn to_json(&self) -> CatalogJson {
        CatalogJson {
            lie_type: self.lie_type.to_string(),
            count: self.count(),
            entries: self
                .entries
                .iter()
                .map(|s| PairJson { pi1: s.pi1().to_desc_vec(), pi2: s.pi2().to_desc_vec() })
                .collect(),
        }
    }

    pub fn pairs(&self) -> Vec<(RootSet, RootSet)> {
        self.entries.iter().map(|s| (s.pi1(), s.pi2())).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub pi1: Vec<usize>,
    pub pi2: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogJson {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub count: usize,
    pub entries: Vec<PairJson>,
}

/// Involution of every subset, indexed by bitmask.
fn involution_table(rs: &RootSystem) -> Vec<Vec<u8>> {
    (0..1u64 << rs.rank())
        .into_par_iter()
        .map(|bits| {
            involution_of(rs, RootSet::from_bits(bits))
                .as_slice()
                .iter()
                .map(|&v| v as u8)
                .collect()
        })
        .collect()
}

fn meets_once(i1: &[u8], i2: &[u8], pu: u64) -> bool {
    let mut seen = 0u64;
    for start in 0..i1.len() {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut hits = 0;
        let mut cur = start;
        while seen >> cur & 1 == 0 {
            seen |= 1 << cur;
            hits += (pu >> cur & 1) as u32;
            cur = i1[i2[cur] as usize - 1] as usize - 1;
        }
        if hits != 1 {
            return false;
        }
    }
    true
}

/// Frobenius pairs `(π₁, π₂)` with `π₁ ≤ π₂` as bitmasks, for one top set.
fn pairs_for_top(table: &[Vec<u8>], n: usize, p1: u64) -> Vec<(u64, u64)> {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let comp = full & !p1;
    let mut out = Vec::new();
    let mut sub = p1;
    loop {
        let p2 = comp | sub;
        if p1 <= p2 {
            let pu = full & !(p1 & p2);
            if meets_once(&table[p1 as usize], &table[p2 as usize], pu) {
                out.push((p1, p2));
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & p1;
    }
    out
}

fn check_rank(t: LieType) -> Result<(), EnumerateError> {
    if t.rank() > MAX_ENUMERATION_RANK {
        return Err(EnumerateError::RankTooLarge(t.rank()));
    }
    Ok(())
}

fn reverse_bits(bits: u64, n: usize) -> u64 {
    (0..n).filter(|&i| bits >> i & 1 == 1).fold(0, |acc, i| acc | 1 << (n - 1 - i))
}

fn build(t: LieType, rs: Arc<RootSystem>, equivalence: Equivalence, mut pairs: Vec<(u64, u64)>) -> Catalog {
    let n = t.rank();
    if equivalence == Equivalence::SwapAndReversal {
        for p in pairs.iter_mut() {
            let (a, b) = *p;
            let (ra, rb) = (reverse_bits(a, n), reverse_bits(b, n));
            *p = [(a, b), (b, a), (ra, rb), (rb, ra)].into_iter().min().unwrap();
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    let entries = pairs
        .into_iter()
        .map(|(a, b)| Seaweed::new(rs.clone(), RootSet::from_bits(a), RootSet::from_bits(b)).expect("in range"))
        .collect();
    Catalog { lie_type: t, equivalence, entries }
}

/// All Frobenius seaweeds of `t` with π₁∪π₂ = Π, one per class of the
/// default equivalence for the type.
pub fn enumerate_frobenius(t: LieType) -> Result<Catalog, EnumerateError> {
    enumerate_frobenius_with(t, Equivalence::default_for(t))
}

pub fn enumerate_frobenius_with(t: LieType, equivalence: Equivalence) -> Result<Catalog, EnumerateError> {
    check_rank(t)?;
    let rs = Arc::new(RootSystem::new(t));
    let n = t.rank();
    let table = involution_table(&rs);
    let pairs: Vec<(u64, u64)> = (0..1u64 << n)
        .into_par_iter()
        .flat_map_iter(|p1| pairs_for_top(&table, n, p1))
        .collect();
    Ok(build(t, rs, equivalence, pairs))
}

/// Single-threaded variant of [`enumerate_frobenius_with`].
pub fn enumerate_frobenius_serial(t: LieType, equivalence: Equivalence) -> Result<Catalog, EnumerateError> {
    check_rank(t)?;
    let rs = Arc::new(RootSystem::new(t));
    let n = t.rank();
    let table: Vec<Vec<u8>> = (0..1u64 << n)
        .map(|bits| {
            involution_of(&rs, RootSet::from_bits(bits))
                .as_slice()
                .iter()
                .map(|&v| v as u8)
                .collect()
        })
        .collect();
    let pairs = (0..1u64 << n).flat_map(|p1| pairs_for_top(&table, n, p1)).collect();
    Ok(build(t, rs, equivalence, pairs))
}

/// The 74 Frobenius seaweeds of E6 in reference order.
pub fn e6_reference() -> Vec<(RootSet, RootSet)> {
    let parse = |s: &str| -> RootSet { s.split(',').filter(|t| !t.is_empty()).map(|t| t.trim().parse::<usize>().unwrap()).collect() };
    E6_FIXTURE
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (a, b) = l.split_once('|').expect("row has two sets");
            (parse(a), parse(b))
        })
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReferenceDiff {
    /// Reference rows absent from the catalog.
    pub missing: Vec<(RootSet, RootSet)>,
    /// Catalog entries absent from the reference.
    pub extra: Vec<(RootSet, RootSet)>,
}

impl ReferenceDiff {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

fn unordered(p: (RootSet, RootSet)) -> (RootSet, RootSet) {
    if (p.1.bits(), p.0.bits()) < (p.0.bits(), p.1.bits()) {
        (p.1, p.0)
    } else {
        p
    }
}

/// Compares an E6 catalog with the reference list, either order per row.
pub fn check_e6_reference(cat: &Catalog) -> ReferenceDiff {
    use std::collections::BTreeSet;
    let reference = e6_reference();
    let have: BTreeSet<(RootSet, RootSet)> = cat.pairs().into_iter().map(unordered).collect();
    let want: BTreeSet<(RootSet, RootSet)> = reference.iter().copied().map(unordered).collect();
    ReferenceDiff {
        missing: reference.iter().copied().filter(|p| !have.contains(&unordered(*p))).collect(),
        extra: cat.pairs().into_iter().filter(|p| !want.contains(&unordered(*p))).collect(),
    }
}

/// Individual properties verified by the census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Frobenius,
    Constraints,
    Unbroken,
    Symmetric,
    Dimension,
    Padding,
    Bounds,
    AbsBound,
    ComponentSum,
    SymmetricRoots,
    ComponentUnbroken,
    ComponentSymmetric,
    UTurns,
    FlipInvariant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryVerdict {
    pub seaweed: Seaweed,
    pub spectrum: Option<Spectrum>,
    pub failed: Vec<Check>,
}

impl EntryVerdict {
    pub fn passed(&self) -> bool {
        self.failed.is_empty()
    }
}

#[derive(Debug, Clone, Default)]
pub struct CensusSummary {
    pub checked: usize,
    pub failures: Vec<EntryVerdict>,
}

impl CensusSummary {
    pub fn passed(&self) -> usize {
        self.checked - self.failures.len()
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs every check on one seaweed with its solved simple eigenvalues.
pub fn verify_entry(s: &Seaweed) -> EntryVerdict {
    let m = OrbitMeander::new(s);
    match simple_eigenvalues_of(&m) {
        Ok(x) => verify_with(&m, &x),
        Err(_) => EntryVerdict { seaweed: s.clone(), spectrum: None, failed: vec![Check::Frobenius] },
    }
}

/// Runs every check using the supplied simple eigenvalues.
pub fn verify_entry_with(s: &Seaweed, x: &SimpleEigenvalueVector) -> EntryVerdict {
    verify_with(&OrbitMeander::new(s), x)
}

fn verify_with(m: &OrbitMeander, x: &SimpleEigenvalueVector) -> EntryVerdict {
    let s = &m.seaweed;
    let rs = s.root_system();
    let mut failed = Vec::new();
    let mut check = |ok: bool, c: Check| {
        if !ok {
            failed.push(c);
        }
    };
    check(m.is_frobenius().unwrap_or(false), Check::Frobenius);
    check(satisfies_constraints(m, x), Check::Constraints);

    let parts = component_spectra(m, x);
    let mut sp = Spectrum::new();
    for p in &parts {
        sp.merge(&p.spectrum());
    }
    check(verify_unbroken(&sp), Check::Unbroken);
    check(verify_symmetric(&sp), Check::Symmetric);
    check(sp.total() == s.dimension(), Check::Dimension);
    let padding: usize = m.components().map(|c| zero_padding(c.shape())).sum();
    check(padding == s.rank(), Check::Padding);
    check(m.components().all(|c| bounds_hold(c, x)), Check::Bounds);
    check(m.components().all(|c| abs_bound_holds(c, x)), Check::AbsBound);
    check(m.components().all(|c| component_sum_holds(c, x)), Check::ComponentSum);
    check(
        m.components()
            .filter(|c| matches!(c.shape(), crate::rootsys::DiagramShape::A(_)))
            .all(|c| symmetric_relation_holds(rs, c, x)),
        Check::SymmetricRoots,
    );
    check(parts.iter().all(|p| verify_unbroken(&p.spectrum())), Check::ComponentUnbroken);
    check(parts.iter().all(|p| verify_symmetric(&p.spectrum())), Check::ComponentSymmetric);
    check(m.u_turn_report().within_bounds(), Check::UTurns);
    check(full_spectrum(&s.flip()).is_ok_and(|f| f == sp), Check::FlipInvariant);
    EntryVerdict { seaweed: s.clone(), spectrum: Some(sp), failed }
}

/// Verifies every entry of a catalog.
pub fn spectrum_census(cat: &Catalog) -> CensusSummary {
    let failures: Vec<EntryVerdict> = cat
        .entries
        .par_iter()
        .map(verify_entry)
        .filter(|v| !v.passed())
        .collect();
    CensusSummary { checked: cat.count(), failures }
}
