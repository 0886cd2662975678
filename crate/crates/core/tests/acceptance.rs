//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;
use seaweed_core::enumerate::{
    check_e6_reference, enumerate_frobenius, enumerate_frobenius_with, spectrum_census, Check, Equivalence,
};
use seaweed_core::meander::{generate_frobenius, winding_move, Base, WindingMove};
use seaweed_core::oracle::{
    ad_spectrum, index, poset_algebra, poset_functional, principal_element, realize_type_a,
    sample_frobenius_functionals, DEFAULT_SEED,
};
use seaweed_core::spectrum::{component_spectrum, simple_eigenvalues, verify_symmetric, verify_unbroken};
use seaweed_core::{full_spectrum, OrbitMeander, RootSet, RootSystem, Seaweed, Side, Spectrum};

type Outcome = Result<(), String>;
type Criterion = (usize, &'static str, fn() -> Outcome);

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn criterion_1() -> Outcome {
    let cases = [
        ("A9", a9(), Spectrum::from_run(-4, &[1, 2, 3, 6, 10, 10, 6, 3, 2, 1])),
        ("B8", b8(), Spectrum::from_run(-2, &[1, 5, 12, 12, 5, 1])),
        ("C8", c8(), Spectrum::from_run(-2, &[1, 2, 15, 15, 2, 1])),
        ("D14", d14(), Spectrum::from_run(-2, &[6, 19, 33, 33, 19, 6])),
        ("D11", d11(), Spectrum::from_run(-2, &[2, 9, 23, 23, 9, 2])),
        ("E6", e6(), Spectrum::from_run(-4, &[2, 3, 5, 7, 9, 9, 7, 5, 3, 2])),
    ];
    for (name, s, want) in cases {
        expect(name, full_spectrum(&s).map_err(|e| e.to_string())?, want)?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let x = |s: Seaweed| simple_eigenvalues(&s).map(|x| x.as_slice().to_vec()).map_err(|e| e.to_string());
    expect("A9", x(a9())?, vec![2, 2, -1, -2, -2, 2, -1, -1, 1])?;
    expect("B8", x(b8())?, vec![1, -1, 1, -2, 1, 2, 1, -2])?;
    expect("C8", x(c8())?, vec![1, 0, 0, -1, 0, 2, 1, -2])?;
    expect("D14", x(d14())?, vec![2, -2, 1, -1, 1, -2, 1, -1, 2, 0, 1, -2, 1, -1])?;
    expect("D11", x(d11())?, vec![1, 1, -1, 1, -2, 1, -1, 3, -2, 1, -1])?;
    let bottom: Vec<i64> = x(e6())?.iter().map(|v| -v).collect();
    expect("E6 bottom", bottom, vec![-2, -1, -2, 1, 2, 2])
}

fn criterion_3() -> Outcome {
    expect(
        "A9 σ3",
        component(&a9(), Side::Top, &[4, 3, 2, 1]).spectrum(),
        ms(&[(-3, 1), (-2, 1), (-1, 2), (0, 2), (1, 2), (2, 2), (3, 1), (4, 1)]),
    )?;
    expect(
        "A9 σ5",
        component(&a9(), Side::Bottom, &[5, 4, 3, 2, 1]).spectrum(),
        ms(&[(-4, 1), (-3, 1), (-2, 2), (-1, 2), (0, 3), (1, 3), (2, 2), (3, 2), (4, 1), (5, 1)]),
    )?;
    expect("B8 B3", component(&b8(), Side::Top, &[3, 2, 1]).spectrum(), ms(&[(-1, 1), (0, 5), (1, 5), (2, 1)]))?;
    expect("C8 C3", component(&c8(), Side::Top, &[3, 2, 1]).spectrum(), ms(&[(0, 6), (1, 6)]))?;
    expect(
        "D14 D5",
        component(&d14(), Side::Top, &[5, 4, 3, 2, 1]).spectrum(),
        ms(&[(-2, 2), (-1, 3), (0, 7), (1, 7), (2, 3), (3, 2)]),
    )?;
    let e = component(&e6(), Side::Bottom, &[6, 5, 4, 3, 2, 1]);
    expect(
        "E6 bottom",
        e.spectrum(),
        ms(&[(-4, 2), (-3, 2), (-2, 4), (-1, 5), (0, 7), (1, 7), (2, 5), (3, 4), (4, 2), (5, 2)]),
    )?;
    // per-root rows, read as (height, eigenvalue)
    let s = e6();
    let x = simple_eigenvalues(&s).map_err(|e| e.to_string())?;
    let mut ours: Vec<(u32, i64)> =
        s.root_system().positive_roots().iter().map(|b| (b.height(), -b.evaluate(x.as_slice()))).collect();
    ours.sort_unstable();
    let mut printed: Vec<(u32, i64)> = vec![
        (11, 1), (10, 2), (9, 1), (8, 3), (8, -1), (7, 5), (7, -3), (7, 1), (6, -1), (6, 3), (6, 0), (5, 1),
        (5, 1), (5, -2), (5, 2), (4, -4), (4, -1), (4, 0), (4, 4), (4, 3), (3, -3), (3, -2), (3, 2), (3, 1),
        (3, 5), (2, -4), (2, 0), (2, -1), (2, 3), (2, 4), (1, -2), (1, -1), (1, -2), (1, 1), (1, 2), (1, 2),
    ];
    printed.sort_unstable();
    expect("E6 per-root table", ours, printed)
}

fn criterion_4() -> Outcome {
    let cases = [("E7", vec![7, 28, 28, 7]), ("E8", vec![14, 50, 50, 14]), ("F4", vec![1, 13, 13, 1]), ("G2", vec![1, 3, 3, 1])];
    for (t, want) in cases {
        let s = full_top(t);
        let m = OrbitMeander::new(&s);
        let x = simple_eigenvalues(&s).map_err(|e| e.to_string())?;
        let sp = component_spectrum(s.root_system(), &m.top[0], &x).spectrum();
        expect(t, (sp.min(), sp.run()), (Some(-1), want))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for (t, want) in [("G2", 2), ("F4", 8), ("E6", 74), ("E7", 143), ("E8", 301)] {
        expect(t, enumerate_frobenius(lie(t)).map_err(|e| e.to_string())?.count(), want)?;
    }
    let diff = check_e6_reference(&enumerate_frobenius(lie("E6")).map_err(|e| e.to_string())?);
    expect("E6 diff (missing, extra)", (diff.missing.len(), diff.extra.len()), (0, 0))
}

fn type_a_pairs(rank: usize) -> impl Iterator<Item = Seaweed> {
    let rs = std::sync::Arc::new(RootSystem::new(lie(&format!("A{rank}"))));
    let full = 1u64 << rank;
    (0..full * full).map(move |k| {
        Seaweed::new(rs.clone(), RootSet::from_bits(k / full), RootSet::from_bits(k % full)).unwrap()
    })
}

fn is_frobenius(s: &Seaweed) -> bool {
    OrbitMeander::new(s).is_frobenius().unwrap_or(false)
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for rank in 1..=6 {
        for s in type_a_pairs(rank).filter(is_frobenius) {
            let want = full_spectrum(&s).map_err(|e| e.to_string())?;
            let m = realize_type_a(&s).map_err(|e| e.to_string())?;
            let fs = sample_frobenius_functionals(&m, DEFAULT_SEED, 3);
            if fs.len() != 3 {
                return Err(format!("{s}: only {} Frobenius functionals found", fs.len()));
            }
            for f in &fs {
                let fhat = principal_element(&m, f).map_err(|e| e.to_string())?;
                expect(&s.to_string(), ad_spectrum(&m, &fhat.matrix).map_err(|e| e.to_string())?, want.clone())?;
            }
            checked += 1;
        }
    }
    expect("Frobenius type-A seaweeds checked", checked, 274)?;
    for rank in 1..=5 {
        for s in type_a_pairs(rank) {
            let m = realize_type_a(&s).map_err(|e| e.to_string())?;
            expect(&format!("{s} index 0"), index(&m, DEFAULT_SEED).index == 0, is_frobenius(&s))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let m = poset_algebra();
    let fhat = principal_element(&m, &poset_functional(&m)).map_err(|e| e.to_string())?;
    let diag: Vec<String> = (0..4).map(|i| fhat.matrix[(i, i)].to_string()).collect();
    expect("poset F̂ diagonal", diag, ["1/2", "1/2", "-1/2", "-1/2"].map(String::from).to_vec())?;
    expect("poset spectrum", ad_spectrum(&m, &fhat.matrix).map_err(|e| e.to_string())?, ms(&[(0, 4), (1, 4)]))?;
    let s = a3_small();
    let want = ms(&[(-1, 1), (0, 3), (1, 3), (2, 1)]);
    expect("sl4 seaweed", full_spectrum(&s).map_err(|e| e.to_string())?, want.clone())?;
    let m = realize_type_a(&s).map_err(|e| e.to_string())?;
    for f in sample_frobenius_functionals(&m, DEFAULT_SEED, 3) {
        let fhat = principal_element(&m, &f).map_err(|e| e.to_string())?;
        expect("sl4 seaweed oracle", ad_spectrum(&m, &fhat.matrix).map_err(|e| e.to_string())?, want.clone())?;
    }
    Ok(())
}

fn winding_closure() -> Outcome {
    let bases = [
        Base::A,
        Base::B(2),
        Base::B(3),
        Base::C(2),
        Base::C(4),
        Base::DEven(4),
        Base::DOddTwo(3),
        Base::DOddThree(5),
    ];
    // every move sequence of length at most four
    let mut seqs: Vec<Vec<WindingMove>> = vec![vec![]];
    let mut frontier = seqs.clone();
    for _ in 0..4 {
        frontier = frontier
            .iter()
            .flat_map(|s| {
                WindingMove::ALL.iter().map(move |&mv| {
                    let mut t = s.clone();
                    t.push(mv);
                    t
                })
            })
            .collect();
        seqs.extend(frontier.iter().cloned());
    }
    for b in bases {
        'seq: for seq in &seqs {
            let mut m = b.pair().map_err(|e| e.to_string())?;
            for &mv in seq {
                match winding_move(&m, mv) {
                    Ok(n) if n.n <= 14 => m = n,
                    _ => continue 'seq,
                }
            }
            let s = generate_frobenius(b, seq).map_err(|e| format!("{b:?} {seq:?}: {e}"))?;
            let sp = full_spectrum(&s).map_err(|e| e.to_string())?;
            if !(verify_unbroken(&sp) && verify_symmetric(&sp)) {
                return Err(format!("{s}: generated spectrum broken or asymmetric"));
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let mut types: Vec<String> = Vec::new();
    types.extend((1..=8).map(|n| format!("A{n}")));
    types.extend((2..=8).map(|n| format!("B{n}")));
    types.extend((2..=8).map(|n| format!("C{n}")));
    types.extend((3..=8).map(|n| format!("D{n}")));
    types.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
    let mut checked = 0;
    let mut by_check: std::collections::BTreeMap<Check, usize> = Default::default();
    let mut example: std::collections::BTreeMap<Check, String> = Default::default();
    for t in &types {
        let cat = enumerate_frobenius_with(lie(t), Equivalence::Swap).map_err(|e| e.to_string())?;
        let summary = spectrum_census(&cat);
        checked += summary.checked;
        for v in summary.failures {
            for c in v.failed {
                *by_check.entry(c).or_default() += 1;
                example.entry(c).or_insert_with(|| v.seaweed.to_string());
            }
        }
    }
    winding_closure()?;
    if by_check.is_empty() {
        return Ok(());
    }
    let parts: Vec<String> = by_check.iter().map(|(c, n)| format!("{c:?} fails on {n} (e.g. {})", example[c])).collect();
    Err(format!("{checked} seaweeds checked; {}", parts.join("; ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "running-example spectra", criterion_1),
        (2, "simple-eigenvalue vectors", criterion_2),
        (3, "component multisets and E6 per-root table", criterion_3),
        (4, "exceptional component spectra", criterion_4),
        (5, "exceptional counts and E6 reference list", criterion_5),
        (6, "oracle equivalence in type A", criterion_6),
        (7, "poset algebra and sl4 fixtures", criterion_7),
        (8, "property suite over all catalogs", criterion_8),
    ];
    let mut failed = 0;
    for (n, name, run) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {n}: PASS  {name} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL  {name} ({secs:.1}s): {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
