use std::fmt::Write;
use std::sync::Arc;

use seaweed_core::enumerate::{check_e6_reference, enumerate_frobenius, CatalogJson};
use seaweed_core::oracle::{self, DEFAULT_SEED};
use seaweed_core::render;
use seaweed_core::spectrum::{component_spectra, simple_eigenvalues_of};
use seaweed_core::{
    Composition, Family, LieType, LocalDiagram, OrbitMeander, RootSet, RootSystem, Seaweed, Side, Spectrum,
    SpectrumReport,
};

use crate::args::{EnumerateArgs, Format, OracleArgs, SeaweedArgs, TypeArgs};
use crate::report::*;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    NotFrobenius(String),
    Unsupported(String),
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::NotFrobenius(_) => 3,
            CliError::Unsupported(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::NotFrobenius(m) | CliError::Unsupported(m) | CliError::Failed(m) => m,
        }
    }
}

/// Text to emit plus the exit code to finish with.
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

pub fn resolve_type(t: &TypeArgs) -> Result<LieType, CliError> {
    let s = t.family.trim();
    let lt: LieType = if s.len() > 1 {
        let lt: LieType = s.parse().map_err(|e| CliError::Usage(format!("--type {s}: {e}")))?;
        if let Some(r) = t.rank {
            if r != lt.rank() {
                return Err(CliError::Usage(format!("--rank {r} contradicts --type {s}")));
            }
        }
        lt
    } else {
        let r = t.rank.ok_or_else(|| CliError::Usage(format!("--type {s} needs --rank")))?;
        format!("{s}{r}").parse().map_err(|e| CliError::Usage(format!("--type {s} --rank {r}: {e}")))?
    };
    if t.bourbaki && matches!(lt.family(), Family::A | Family::B | Family::C | Family::D) {
        return Err(CliError::Usage(format!(
            "--bourbaki is rejected for classical type {lt}: indices are always α₁ at the exceptional end"
        )));
    }
    Ok(lt)
}

fn parse_list(flag: &str, items: &[String]) -> Result<Vec<usize>, CliError> {
    items
        .iter()
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| CliError::Usage(format!("{flag}: not a positive integer: {s}"))))
        .collect()
}

fn side_set(
    n: usize,
    name: &str,
    list: &Option<Vec<String>>,
    comp: &Option<Vec<String>>,
) -> Result<RootSet, CliError> {
    match (list, comp) {
        (Some(l), None) => {
            let idx = parse_list(&format!("--{name}"), l)?;
            if let Some(&bad) = idx.iter().find(|&&i| i == 0 || i > n) {
                return Err(CliError::Usage(format!("--{name}: α{bad} is out of range for rank {n}")));
            }
            Ok(RootSet::from_indices(idx))
        }
        (None, Some(c)) => {
            let parts = parse_list(&format!("--{name}-comp"), c)?;
            let a = Composition::new(parts, n).map_err(|e| CliError::Usage(format!("--{name}-comp: {e}")))?;
            Ok(RootSet::full(n).difference(a.phi()))
        }
        (None, None) => Err(CliError::Usage(format!("missing --{name} or --{name}-comp"))),
        (Some(_), Some(_)) => Err(CliError::Usage(format!("give only one of --{name} and --{name}-comp"))),
    }
}

pub fn build_seaweed(a: &SeaweedArgs) -> Result<Seaweed, CliError> {
    let lt = resolve_type(&a.ty)?;
    let n = lt.rank();
    let pi1 = side_set(n, "top", &a.top, &a.top_comp)?;
    let pi2 = side_set(n, "bottom", &a.bottom, &a.bottom_comp)?;
    Seaweed::new(Arc::new(RootSystem::new(lt)), pi1, pi2).map_err(|e| CliError::Usage(e.to_string()))
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn ambient(labels: &[usize], set: RootSet) -> Vec<usize> {
    let mut v: Vec<usize> = set.iter().map(|k| labels[k - 1]).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn frobenius(s: &Seaweed) -> bool {
    s.covers() && OrbitMeander::new(s).is_frobenius().unwrap_or(false)
}

fn summands(s: &Seaweed, decompose: bool) -> Result<Vec<(Seaweed, LocalDiagram)>, CliError> {
    if !s.covers() && !decompose {
        return Err(CliError::NotFrobenius(format!(
            "{s}: π₁∪π₂ ≠ Π, so the seaweed has a centre and is not Frobenius; rerun with --decompose to treat its direct summands"
        )));
    }
    Ok(s.summands())
}

pub fn check(a: &SeaweedArgs) -> Result<Outcome, CliError> {
    let s = build_seaweed(a)?;
    let is_frob = frobenius(&s);
    let parts = if s.covers() || a.decompose { s.summands() } else { Vec::new() };
    let mut out_parts = Vec::new();
    for (p, local) in &parts {
        let m = OrbitMeander::new(p);
        let lab = &local.labels;
        let map = |v: &[usize]| v.iter().map(|&k| lab[k - 1]).collect::<Vec<_>>();
        let report = m.u_turn_report();
        out_parts.push(CheckSummand {
            lie_type: p.lie_type().to_string(),
            labels: lab.clone(),
            pi1: ambient(lab, p.pi1()),
            pi2: ambient(lab, p.pi2()),
            frobenius: frobenius(p),
            orbits: m.orbits.iter().map(|o| map(o)).collect(),
            u_turns: report
                .per_orbit
                .iter()
                .map(|u| UTurnJson {
                    orbit: map(&u.orbit),
                    start: u.start.map(|k| lab[k - 1]),
                    right: u.right,
                    left: u.left,
                })
                .collect(),
        });
    }
    let report = CheckReport {
        lie_type: s.lie_type().to_string(),
        pi1: s.pi1().to_desc_vec(),
        pi2: s.pi2().to_desc_vec(),
        pi_union: s.pi_union().to_desc_vec(),
        frobenius: is_frob,
        summands: out_parts,
    };
    let text = match a.format.unwrap_or(Format::Table) {
        Format::Json => json(&report),
        Format::Table => check_table(&s, &report),
        f => return Err(CliError::Usage(format!("check does not support --format {f:?}"))),
    };
    Ok(Outcome { text, code: if is_frob { 0 } else { 3 } })
}

fn set_str(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|k| k.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn check_table(s: &Seaweed, r: &CheckReport) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "{s}");
    let _ = writeln!(t, "π∪ = {}", set_str(&r.pi_union));
    if !s.covers() {
        let _ = writeln!(t, "π₁∪π₂ ≠ Π: not Frobenius (has a centre)");
    }
    for p in &r.summands {
        if r.summands.len() > 1 || !s.covers() {
            let _ = writeln!(t, "summand {} on {}", p.lie_type, set_str(&p.labels));
        }
        for (o, u) in p.orbits.iter().zip(&p.u_turns) {
            let start = u.start.map_or("-".to_string(), |k| format!("α{k}"));
            let _ = writeln!(t, "  orbit {}  start {start}  right {}  left {}", set_str(o), u.right, u.left);
        }
    }
    let _ = writeln!(t, "frobenius: {}", if r.frobenius { "yes" } else { "no" });
    t
}

fn component_json(c: &seaweed_core::Component, values: &[i64], lab: &[usize]) -> ComponentJson {
    ComponentJson {
        side: match c.side {
            Side::Top => "top".into(),
            Side::Bottom => "bottom".into(),
        },
        shape: c.shape().to_string(),
        roots: ambient(lab, c.roots),
        eigenvalues: values.to_vec(),
    }
}

pub fn spectrum_output(s: &Seaweed, decompose: bool) -> Result<SpectrumOutput, CliError> {
    let mut total = Spectrum::new();
    let mut out = Vec::new();
    for (p, local) in summands(s, decompose)? {
        let m = OrbitMeander::new(&p);
        if !m.is_frobenius().unwrap_or(false) {
            return Err(CliError::NotFrobenius(format!("{p} is not Frobenius")));
        }
        let x = simple_eigenvalues_of(&m).map_err(|e| CliError::Failed(e.to_string()))?;
        let parts = component_spectra(&m, &x);
        let mut sp = Spectrum::new();
        let lab = &local.labels;
        let components = parts
            .iter()
            .map(|cs| {
                sp.merge(&cs.spectrum());
                component_json(&cs.component, &cs.values, lab)
            })
            .collect();
        total.merge(&sp);
        out.push(SpectrumSummand {
            lie_type: p.lie_type().to_string(),
            labels: lab.clone(),
            pi1: ambient(lab, p.pi1()),
            pi2: ambient(lab, p.pi2()),
            simple_eigenvalues: x.as_slice().to_vec(),
            components,
            spectrum: sp.to_report(),
        });
    }
    Ok(SpectrumOutput {
        lie_type: s.lie_type().to_string(),
        pi1: s.pi1().to_desc_vec(),
        pi2: s.pi2().to_desc_vec(),
        summands: out,
        spectrum: total.to_report(),
    })
}

pub fn spectrum(a: &SeaweedArgs) -> Result<Outcome, CliError> {
    let s = build_seaweed(a)?;
    let report = spectrum_output(&s, a.decompose)?;
    let text = match a.format.unwrap_or(Format::Table) {
        Format::Json => json(&report),
        Format::Table => spectrum_table(&s, &report),
        f => return Err(CliError::Usage(format!("spectrum does not support --format {f:?}"))),
    };
    Ok(Outcome::ok(text))
}

/// Two-row eigenvalue/multiplicity layout.
pub fn two_row(r: &SpectrumReport) -> String {
    let sp = r.spectrum();
    let (Some(lo), Some(hi)) = (sp.min(), sp.max()) else {
        return String::new();
    };
    let ks: Vec<String> = (lo..=hi).map(|k| k.to_string()).collect();
    let ms: Vec<String> = (lo..=hi).map(|k| sp.get(k).to_string()).collect();
    let w = ks.iter().chain(&ms).map(|s| s.chars().count()).max().unwrap_or(1);
    let row = |v: &[String]| v.iter().map(|s| format!("{s:>w$}")).collect::<Vec<_>>().join(" ");
    format!("eigenvalue   | {}\nmultiplicity | {}\n", row(&ks), row(&ms))
}

fn multiset(values: &[i64]) -> String {
    let sp: Spectrum = values.iter().copied().collect();
    let parts: Vec<String> = sp
        .iter()
        .map(|(k, m)| if m == 1 { k.to_string() } else { format!("{k}^{m}") })
        .collect();
    format!("{{{}}}", parts.join(","))
}

fn spectrum_table(s: &Seaweed, r: &SpectrumOutput) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "{s}");
    for p in &r.summands {
        if r.summands.len() > 1 || !s.covers() {
            let _ = writeln!(t, "summand {} on {}", p.lie_type, set_str(&p.labels));
        }
        let xs: Vec<String> = p
            .simple_eigenvalues
            .iter()
            .enumerate()
            .map(|(k, v)| format!("α{}={v}", p.labels[k]))
            .collect();
        let _ = writeln!(t, "simple eigenvalues: {}", xs.join(" "));
        for c in &p.components {
            let _ = writeln!(t, "{:<6} {:<4} {:<24} {}", c.side, c.shape, set_str(&c.roots), multiset(&c.eigenvalues));
        }
    }
    t.push_str(&two_row(&r.spectrum));
    let yn = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(
        t,
        "unbroken: {}  symmetric: {}  dimension: {}",
        yn(r.spectrum.unbroken),
        yn(r.spectrum.symmetric),
        r.spectrum.dimension
    );
    t
}

pub fn enumerate(a: &EnumerateArgs) -> Result<Outcome, CliError> {
    let lt = resolve_type(&a.ty)?;
    if a.check_reference && lt != "E6".parse().expect("E6") {
        return Err(CliError::Usage("--check-appendix-a applies to --type E6 only".into()));
    }
    let cat = enumerate_frobenius(lt).map_err(|e| CliError::Unsupported(e.to_string()))?;
    let catalog: CatalogJson = cat.to_json();
    let mut text = match a.format.unwrap_or(Format::Json) {
        Format::Json => json(&catalog),
        Format::Table => {
            let mut t = format!("{} {}\n", catalog.lie_type, catalog.count);
            for (k, e) in catalog.entries.iter().enumerate() {
                let _ = writeln!(t, "{:>4}  {} | {}", k + 1, set_str(&e.pi1), set_str(&e.pi2));
            }
            t
        }
        f => return Err(CliError::Usage(format!("enumerate does not support --format {f:?}"))),
    };
    let mut code = 0;
    if a.check_reference {
        let diff = check_e6_reference(&cat);
        let mut d = format!("E6 reference: missing {}, extra {}\n", diff.missing.len(), diff.extra.len());
        for (p, q) in &diff.missing {
            let _ = writeln!(d, "  missing {p} | {q}");
        }
        for (p, q) in &diff.extra {
            let _ = writeln!(d, "  extra {p} | {q}");
        }
        eprint!("{d}");
        if !diff.missing.is_empty() || !diff.extra.is_empty() {
            code = 1;
        }
        if a.format == Some(Format::Table) {
            text.push_str(&d);
        }
    }
    Ok(Outcome { text, code })
}

pub fn oracle(a: &OracleArgs) -> Result<Outcome, CliError> {
    let s = build_seaweed(&a.seaweed)?;
    if s.lie_type().family() != Family::A {
        return Err(CliError::Unsupported(format!(
            "the matrix oracle covers type A only, got {}",
            s.lie_type()
        )));
    }
    let seed = a.seed.unwrap_or(DEFAULT_SEED);
    let report = oracle::analyse(&s, seed, 3).map_err(|e| CliError::Failed(e.to_string()))?;
    let meander_frobenius = frobenius(&s);
    let combinatorial = if meander_frobenius {
        Some(seaweed_core::full_spectrum(&s).map_err(|e| CliError::Failed(e.to_string()))?)
    } else {
        None
    };
    let agree = (report.index.index == 0) == meander_frobenius
        && combinatorial.as_ref().is_none_or(|c| report.spectra.iter().all(|o| o == c));
    let out = OracleOutput {
        lie_type: s.lie_type().to_string(),
        pi1: s.pi1().to_desc_vec(),
        pi2: s.pi2().to_desc_vec(),
        dimension: report.index.dim,
        seed,
        index: report.index.index,
        samples: report.index.samples,
        meander_frobenius,
        combinatorial: combinatorial.map(|c| c.to_report()),
        oracle: report.spectra.iter().map(Spectrum::to_report).collect(),
        agree,
    };
    let text = match a.seaweed.format.unwrap_or(Format::Table) {
        Format::Json => json(&out),
        Format::Table => {
            let mut t = format!("{s}\ndimension {}  index {}  (seed {seed}, {} samples)\n", out.dimension, out.index, out.samples);
            if let Some(c) = &out.combinatorial {
                t.push_str("combinatorial:\n");
                t.push_str(&two_row(c));
            }
            for (k, o) in out.oracle.iter().enumerate() {
                let _ = writeln!(t, "oracle, functional {}:", k + 1);
                t.push_str(&two_row(o));
            }
            let _ = writeln!(t, "agree: {}", if agree { "yes" } else { "no" });
            t
        }
        f => return Err(CliError::Usage(format!("oracle does not support --format {f:?}"))),
    };
    let code = if !agree {
        1
    } else if out.index != 0 {
        3
    } else {
        0
    };
    Ok(Outcome { text, code })
}

pub fn render(a: &SeaweedArgs) -> Result<Outcome, CliError> {
    let s = build_seaweed(a)?;
    let d = render::layout(&OrbitMeander::new(&s));
    let text = match a.format.unwrap_or(Format::Svg) {
        Format::Svg => d.to_svg(),
        Format::Tikz => d.to_tikz(),
        f => return Err(CliError::Usage(format!("render does not support --format {f:?}"))),
    };
    Ok(Outcome::ok(text))
}
