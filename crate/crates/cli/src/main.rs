//! Command-line front end: build and export crystal graphs, run and check
//! decompositions, drive the verification suites and the symbolic relation
//! checks.
//!
//! Weights on the command line are comma-separated ω-coefficients
//! `n0,n1,...,nN` with the standing sign convention λ = n_0ω_0 − Σ n_iω_i.
//! Exit codes: 0 pass, 1 mismatch, 2 usage error.

use clap::{Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::process::ExitCode;

use qcrystal_core::classical::{
    classical_component, decompose_classical_tensor, spin_crystal, spin_elements, SpinClass,
};
use qcrystal_core::crystal::{apply_indexed, Atom, Dir, Word};
use qcrystal_core::decomposition::{
    compare, main_theorem_summary, omega0_formula, spin_spin_summary, DecompositionSummary,
};
use qcrystal_core::export::{build_graph, to_dot, to_json};
use qcrystal_core::realization::Realization;
use qcrystal_core::roots::{AlgebraType, Family, Weight};
use qcrystal_core::supercrystal::{
    build_omega0, check_axioms, decompose_super, label_multiset, product_vertices,
    zero_arrow_allowed, zero_arrow_relations, Model,
};
use qcrystal_core::tableau::koga_component;

#[derive(Parser)]
#[command(name = "qcrystal", version, about = "crystal bases for the D(N,1) and B(N,1) quantum superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    D,
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Suite {
    Axioms,
    Koga,
    ZeroArrows,
    Omega0,
    SpinSpin,
    Examples,
}

#[derive(Subcommand)]
enum Command {
    /// Build a truncated crystal graph and write it as DOT or JSON.
    Graph {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Comma-separated factors: spin, spin-minus, omega0, typical.
        /// A typical factor reads its weight from --weight.
        #[arg(long, default_value = "spin")]
        crystal: String,
        #[arg(long, default_value_t = 2)]
        cap: u32,
        /// Weight n0,n1,...,nN for the typical factor.
        #[arg(long)]
        weight: Option<String>,
        #[arg(long, value_enum, default_value = "dot")]
        format: FormatArg,
        /// Output path; stdout when omitted.
        #[arg(long)]
        output: Option<String>,
    },
    /// Decompose a tensor product of two crystals by lowest-vertex search;
    /// for typical ⊗ typical also run the closed form and compare.
    Decompose {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Left factor weight n0,n1,...,nN.
        #[arg(long)]
        left: String,
        /// Right factor weight n0,n1,...,nN.
        #[arg(long)]
        right: String,
        #[arg(long, default_value_t = 6)]
        cap: u32,
        /// Compare the observed summands against a summary JSON file.
        #[arg(long)]
        expect: Option<String>,
        #[arg(long)]
        output: Option<String>,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        cap: u32,
        /// Optional weights for the examples suite.
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
        #[arg(long)]
        output: Option<String>,
    },
    /// Verify the defining relations, the polarization contravariance and
    /// the crystal-lattice property of the symbolic module.
    Relations {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        max_level: u32,
        #[arg(long)]
        output: Option<String>,
    },
}

fn family_of(f: FamilyArg) -> Family {
    match f {
        FamilyArg::D => Family::D,
        FamilyArg::B => Family::B,
    }
}

/// Parse "n0,n1,...,nN" under the standing convention λ = n_0ω_0 − Σ n_iω_i.
fn parse_weight(s: &str, ty: AlgebraType) -> Result<Weight, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != ty.node_count() {
        return Err(format!(
            "expected {} comma-separated coefficients, got {}",
            ty.node_count(),
            parts.len()
        ));
    }
    let mut v = Vec::with_capacity(parts.len());
    for (i, p) in parts.iter().enumerate() {
        let x: i64 = p.trim().parse().map_err(|_| format!("bad coefficient '{p}'"))?;
        if i > 0 && x < 0 {
            return Err("classical coefficients n_i must be non-negative".into());
        }
        v.push(if i == 0 { x } else { -x });
    }
    Ok(Weight(v))
}

fn parse_factors(spec: &str, weight: Option<&str>, ty: AlgebraType) -> Result<Vec<Model>, String> {
    let mut out = Vec::new();
    for name in spec.split(',') {
        let m = match name.trim() {
            "spin" => Model::SpinPlus,
            "spin-minus" => Model::SpinMinus,
            "omega0" => Model::Typical(Weight::omega(0, ty)),
            "typical" => {
                let w = weight.ok_or("the typical factor needs --weight")?;
                let w = parse_weight(w, ty)?;
                Model::from_weight(&w, ty).map_err(|e| e.to_string())?
            }
            other => return Err(format!("unknown crystal '{other}'")),
        };
        out.push(m);
    }
    if out.is_empty() {
        return Err("empty factor list".into());
    }
    Ok(out)
}

fn emit(text: &str, output: Option<&str>) -> Result<(), String> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn cmd_graph(
    ty: AlgebraType,
    crystal: &str,
    cap: u32,
    weight: Option<&str>,
    format: FormatArg,
    output: Option<&str>,
) -> Result<ExitCode, String> {
    let factors = parse_factors(crystal, weight, ty)?;
    let vertices = product_vertices(&factors, ty, cap).map_err(|e| e.to_string())?;
    let g = build_graph(vertices, ty, cap);
    let text = match format {
        FormatArg::Dot => to_dot(&g),
        FormatArg::Json => to_json(&g),
        FormatArg::Text => format!("{} vertices, {} edges", g.vertices.len(), g.edges.len()),
    };
    emit(&text, output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(
    ty: AlgebraType,
    left: &str,
    right: &str,
    cap: u32,
    expect: Option<&str>,
    output: Option<&str>,
) -> Result<ExitCode, String> {
    let lw = parse_weight(left, ty)?;
    let rw = parse_weight(right, ty)?;
    let lm = Model::from_weight(&lw, ty).map_err(|e| e.to_string())?;
    let rm = Model::from_weight(&rw, ty).map_err(|e| e.to_string())?;
    let observed = decompose_super(&[lm, rm], ty, cap).map_err(|e| e.to_string())?;

    let mut doc = serde_json::Map::new();
    doc.insert("observed".into(), serde_json::to_value(&observed).unwrap());
    let mut ok = true;

    // both typical: run the closed form and compare. Larger ω_0
    // coefficients reduce to the base case by the level-shift bijection.
    if lw.n0() >= 1 && rw.n0() >= 1 {
        let lp = Weight(std::iter::once(0).chain(lw.0[1..].iter().copied()).collect());
        let l = Weight(std::iter::once(0).chain(rw.0[1..].iter().copied()).collect());
        let shift = lw.n0() + rw.n0() - 2;
        let base = qcrystal_core::decomposition::main_theorem(&lp, &l, ty, cap as i64 - shift)
            .map_err(|e| e.to_string())?;
        let shifted: std::collections::BTreeMap<Weight, u64> = base
            .into_iter()
            .map(|(w, m)| {
                let mut v = w.0;
                v[0] += shift;
                (Weight(v), m)
            })
            .collect();
        let predicted = qcrystal_core::decomposition::predicted_summary(shifted, ty, cap as i64)
            .map_err(|e| e.to_string())?;
        let report = compare(&predicted, &observed).map_err(|e| e.to_string())?;
        ok &= report.is_match();
        doc.insert("predicted".into(), serde_json::to_value(&predicted).unwrap());
        doc.insert("compare".into(), serde_json::to_value(&report).unwrap());
    }

    if let Some(path) = expect {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        let expected: DecompositionSummary = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        let report = compare(&expected, &observed).map_err(|e| e.to_string())?;
        ok &= report.is_match();
        doc.insert("expect_compare".into(), serde_json::to_value(&report).unwrap());
    }

    emit(&serde_json::to_string_pretty(&doc).unwrap(), output)?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn suite_axioms(ty: AlgebraType, cap: u32) -> (bool, serde_json::Value) {
    let mut details = Vec::new();
    let mut ok = true;
    let mut run = |name: &str, vs: &[Word], cap: u32| {
        let bad = check_axioms(vs, ty, cap);
        if !bad.is_empty() {
            ok = false;
        }
        details.push(serde_json::json!({
            "fixture": name,
            "vertices": vs.len(),
            "violations": bad,
        }));
    };
    if let Ok(vs) = Model::SpinPlus.vertices(ty, cap) {
        run("spin", &vs, cap);
    }
    run("omega0", &build_omega0(ty, cap), cap);
    if let Ok(vs) = product_vertices(&[Model::SpinPlus, Model::SpinPlus], ty, cap) {
        run("spin(x)spin", &vs, cap);
    }
    if ty.family == Family::D {
        if let Ok(vs) = product_vertices(&[Model::SpinPlus, Model::SpinMinus], ty, cap) {
            run("spin(x)spin-minus", &vs, cap);
        }
    }
    (ok, serde_json::Value::Array(details))
}

fn suite_koga(ty: AlgebraType) -> (bool, serde_json::Value) {
    let mut ok = true;
    let mut checked = 0usize;
    let classes: &[SpinClass] = match ty.family {
        Family::D => &[SpinClass::Plus, SpinClass::Minus],
        Family::B => &[SpinClass::Plus],
    };
    let mut mismatches = Vec::new();
    for class in classes {
        let first = spin_crystal(ty, SpinClass::Plus);
        let second = spin_crystal(ty, *class);
        let comps = decompose_classical_tensor(&[&first, &second], ty);
        let mut membership: BTreeMap<Word, _> = BTreeMap::new();
        for c in &comps {
            for w in classical_component(&c.lowest_vertex, ty) {
                membership.insert(w, c.lowest_weight.clone());
            }
        }
        for u in spin_elements(ty, SpinClass::Plus) {
            for v in spin_elements(ty, *class) {
                let word = vec![Atom::new(u, 0), Atom::new(v, 0)];
                let via = koga_component(u, v, ty);
                checked += 1;
                match via {
                    Ok(k) if Some(&k) == membership.get(&word) => {}
                    other => {
                        ok = false;
                        mismatches.push(format!("u={u:#b} v={v:#b}: {other:?}"));
                    }
                }
            }
        }
    }
    (ok, serde_json::json!({"pairs": checked, "mismatches": mismatches}))
}

fn suite_zero_arrows(ty: AlgebraType, cap: u32) -> (bool, serde_json::Value) {
    let mut ok = true;
    let mut details = Vec::new();
    let mut products: Vec<(&str, Vec<Model>)> =
        vec![("spin(x)spin", vec![Model::SpinPlus, Model::SpinPlus])];
    if ty.family == Family::D {
        products.push(("spin(x)spin-minus", vec![Model::SpinPlus, Model::SpinMinus]));
    }
    for (name, factors) in products {
        let vs = match product_vertices(&factors, ty, cap) {
            Ok(v) => v,
            Err(e) => {
                details.push(serde_json::json!({"product": name, "error": e.to_string()}));
                ok = false;
                continue;
            }
        };
        let arrows = zero_arrow_relations(&vs, 1, ty);
        let mut bad = Vec::new();
        for (a, count) in &arrows {
            if !zero_arrow_allowed(a, ty) {
                bad.push(format!("{a:?} ({count}x)"));
            }
        }
        let mut r_violations = Vec::new();
        for w in &vs {
            if let Some((_, idx)) = apply_indexed(Dir::Lower, 0, w, ty) {
                if idx >= 1 && (w[0].level != 0 || w[0].signs & 1 == 1) {
                    r_violations.push(format!("{:?}", w));
                }
            }
        }
        if !bad.is_empty() || !r_violations.is_empty() {
            ok = false;
        }
        details.push(serde_json::json!({
            "product": name,
            "arrows": arrows.len(),
            "outside_allowed_set": bad,
            "r_arrows_with_raised_first_factor": r_violations,
        }));
    }
    (ok, serde_json::Value::Array(details))
}

fn suite_omega0(ty: AlgebraType, cap: u32) -> (bool, serde_json::Value) {
    let om = build_omega0(ty, cap);
    let got: BTreeMap<_, u64> = label_multiset(&om, ty)
        .into_iter()
        .filter(|((_, l), _)| *l <= cap as i64)
        .collect();
    let expect = omega0_formula(ty, cap as i64);
    let ok = got == expect;
    let render = |m: &BTreeMap<(qcrystal_core::roots::ClassicalWeight, i64), u64>| {
        m.iter()
            .map(|((w, l), c)| format!("({w}; {l}) x{c}"))
            .collect::<Vec<_>>()
    };
    (
        ok,
        serde_json::json!({"observed": render(&got), "predicted": render(&expect)}),
    )
}

fn suite_spin_spin(ty: AlgebraType, cap: u32) -> (bool, serde_json::Value) {
    let (factors, class) = match (ty.family, ty.n % 2) {
        (Family::D, 0) => ([Model::SpinPlus, Model::SpinPlus], SpinClass::Plus),
        (Family::D, _) => ([Model::SpinPlus, Model::SpinMinus], SpinClass::Minus),
        (Family::B, _) => ([Model::SpinPlus, Model::SpinPlus], SpinClass::Plus),
    };
    let observed = match decompose_super(&factors, ty, cap) {
        Ok(o) => o,
        Err(e) => return (false, serde_json::json!({"error": e.to_string()})),
    };
    let predicted = match spin_spin_summary(ty, class, cap as i64) {
        Ok(p) => p,
        Err(e) => return (false, serde_json::json!({"error": e.to_string()})),
    };
    match compare(&predicted, &observed) {
        Ok(report) => (report.is_match(), serde_json::to_value(&report).unwrap()),
        Err(e) => (false, serde_json::json!({"error": e.to_string()})),
    }
}

fn suite_examples(
    ty: AlgebraType,
    cap: u32,
    left: Option<&str>,
    right: Option<&str>,
) -> Result<(bool, serde_json::Value), String> {
    // classical parts of the two typical factors (n_0 is forced to 1)
    let default_left = vec![0i64; ty.n];
    let mut default_right = vec![0i64; ty.n];
    default_right[ty.n - 1] = 1;
    let parse_cl = |s: Option<&str>, def: Vec<i64>| -> Result<Weight, String> {
        match s {
            None => {
                let mut v = vec![0i64];
                v.extend(def.iter().map(|x| -x));
                Ok(Weight(v))
            }
            Some(s) => {
                let w = parse_weight(s, ty)?;
                if w.n0() != 0 {
                    return Err("examples weights take the classical part only (n0 = 0)".into());
                }
                Ok(w)
            }
        }
    };
    let lp = parse_cl(left, default_left)?;
    let l = parse_cl(right, default_right)?;
    let mk = |w: &Weight| {
        let mut v = w.0.clone();
        v[0] = 1;
        Model::Typical(Weight(v))
    };
    let observed = decompose_super(&[mk(&lp), mk(&l)], ty, cap).map_err(|e| e.to_string())?;
    let predicted = main_theorem_summary(&lp, &l, ty, cap as i64).map_err(|e| e.to_string())?;
    let report = compare(&predicted, &observed).map_err(|e| e.to_string())?;
    Ok((report.is_match(), serde_json::to_value(&report).unwrap()))
}

fn cmd_verify(
    ty: AlgebraType,
    suite: Suite,
    cap: u32,
    left: Option<&str>,
    right: Option<&str>,
    output: Option<&str>,
) -> Result<ExitCode, String> {
    let (name, (ok, details)) = match suite {
        Suite::Axioms => ("axioms", suite_axioms(ty, cap)),
        Suite::Koga => ("koga", suite_koga(ty)),
        Suite::ZeroArrows => ("zero_arrows", suite_zero_arrows(ty, cap)),
        Suite::Omega0 => ("omega0", suite_omega0(ty, cap)),
        Suite::SpinSpin => ("spin_spin", suite_spin_spin(ty, cap)),
        Suite::Examples => ("examples", suite_examples(ty, cap, left, right)?),
    };
    let doc = serde_json::json!({
        "suite": name,
        "family": ty.family.to_string(),
        "n": ty.n,
        "cap": cap,
        "status": if ok { "pass" } else { "fail" },
        "details": details,
    });
    emit(&serde_json::to_string_pretty(&doc).unwrap(), output)?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_relations(ty: AlgebraType, max_level: u32, output: Option<&str>) -> Result<ExitCode, String> {
    let r = Realization::new(ty);
    let mut defects = r.check_relations(max_level);
    defects.extend(r.check_polarization_contravariance(max_level));
    defects.extend(r.check_crystal_lattice(max_level));
    let ok = defects.is_empty();
    let doc = serde_json::json!({
        "family": ty.family.to_string(),
        "n": ty.n,
        "max_level": max_level,
        "status": if ok { "pass" } else { "fail" },
        "defects": defects,
    });
    emit(&serde_json::to_string_pretty(&doc).unwrap(), output)?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Graph { family, n, crystal, cap, weight, format, output } => {
            let ty = AlgebraType::new(family_of(family), n).map_err(|e| e.to_string())?;
            cmd_graph(ty, &crystal, cap, weight.as_deref(), format, output.as_deref())
        }
        Command::Decompose { family, n, left, right, cap, expect, output } => {
            let ty = AlgebraType::new(family_of(family), n).map_err(|e| e.to_string())?;
            cmd_decompose(ty, &left, &right, cap, expect.as_deref(), output.as_deref())
        }
        Command::Verify { suite, family, n, cap, left, right, output } => {
            let ty = AlgebraType::new(family_of(family), n).map_err(|e| e.to_string())?;
            cmd_verify(ty, suite, cap, left.as_deref(), right.as_deref(), output.as_deref())
        }
        Command::Relations { family, n, max_level, output } => {
            let ty = AlgebraType::new(family_of(family), n).map_err(|e| e.to_string())?;
            cmd_relations(ty, max_level, output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
