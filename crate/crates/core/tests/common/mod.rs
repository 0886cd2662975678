#![allow(dead_code)]

use seaweed_core::meander::OrbitMeander;
use seaweed_core::spectrum::{component_spectra, simple_eigenvalues_of, ComponentSpectrum};
use seaweed_core::{LieType, RootSet, Seaweed, Side, Spectrum};

pub fn lie(t: &str) -> LieType {
    t.parse().unwrap()
}

pub fn sw(t: &str, top: &[usize], bottom: &[usize]) -> Seaweed {
    Seaweed::from_indices(lie(t), top, bottom).unwrap()
}

pub fn a9() -> Seaweed {
    sw("A9", &[9, 7, 6, 4, 3, 2, 1], &[9, 8, 7, 5, 4, 3, 2, 1])
}

pub fn b8() -> Seaweed {
    sw("B8", &[8, 7, 6, 3, 2, 1], &[8, 7, 5, 4, 3, 2])
}

pub fn c8() -> Seaweed {
    sw("C8", &[8, 7, 6, 3, 2, 1], &[8, 7, 5, 4, 3, 2])
}

pub fn d14() -> Seaweed {
    sw("D14", &[14, 13, 12, 11, 10, 9, 8, 7, 5, 4, 3, 2, 1], &[14, 13, 12, 11, 9, 8, 7, 6, 5, 4, 3, 2])
}

pub fn d11() -> Seaweed {
    sw("D11", &[11, 10, 9, 8, 7, 6, 4, 3, 2, 1], &[10, 9, 7, 6, 5, 4, 3, 2])
}

pub fn e6() -> Seaweed {
    sw("E6", &[5, 4, 3, 1], &[6, 5, 4, 3, 2, 1])
}

/// Not Frobenius: two orbits miss π∪.
pub fn a7_non_frobenius() -> Seaweed {
    sw("A7", &[7, 6, 5, 4, 3, 2], &[7, 6, 4, 3, 2, 1])
}

pub fn a3_small() -> Seaweed {
    sw("A3", &[3, 1], &[3, 2])
}

/// Multiset from `(eigenvalue, multiplicity)` pairs.
pub fn ms(pairs: &[(i64, usize)]) -> Spectrum {
    Spectrum::from_pairs(pairs.iter().copied())
}

pub fn component(s: &Seaweed, side: Side, roots: &[usize]) -> ComponentSpectrum {
    let m = OrbitMeander::new(s);
    let x = simple_eigenvalues_of(&m).unwrap();
    let want = RootSet::from_indices(roots.iter().copied());
    component_spectra(&m, &x)
        .into_iter()
        .find(|c| c.component.side == side && c.component.roots == want)
        .unwrap_or_else(|| panic!("no {side:?} component {want} in {s}"))
}

/// Borel-type seaweed whose top is the whole diagram.
pub fn full_top(t: &str) -> Seaweed {
    let lt = lie(t);
    let all: Vec<usize> = (1..=lt.rank()).collect();
    sw(t, &all, &[])
}
