use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lgmirror::homology::{build_periodic_resolution, first_failure, truncated_homology, HomologyError};
use lgmirror::mirror::{
    dsg_generators, fibre_report, hom_sheaves_with, hom_table_lg2, lg2_surface, mirror_map, rational_potential_sl3,
    theta_eliminate, theta_equations, Fibre, MirrorError, MirrorModel, TParam,
};
use lgmirror::monodromy::{
    candidate_fixed_check, candidate_vector, concrete_triple, fixed_space, symbolic_triple, MonodromyError,
};
use lgmirror::verify::{run_suite, Suite, VerifyOptions};
use lgmirror::{Field, Scalar};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "lgmirror", version, about = "Landau-Ginzburg mirror computations with exact arithmetic")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Mirror equation, potential, pencil, fibres and mirror map for rank n.
    Mirror {
        #[arg(long)]
        n: usize,
        /// `sym` or a rational number.
        #[arg(long, default_value = "sym")]
        t1: String,
        #[arg(long, default_value = "sym")]
        t2: String,
    },
    /// Theta-function equations, elimination and the rank-one surface.
    Theta,
    /// Periodic resolution of `(z_i)` over `k[z1..zn]/(z1...zn)`.
    Res {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long, default_value_t = 5)]
        len: usize,
        #[arg(long, default_value_t = 6)]
        degree_bound: u32,
        #[arg(long, default_value = "zp:101")]
        field: Field,
    },
    /// `Ext^k(J_i, J_j)` for `k <= K` with closed-form comparison.
    Ext {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Defaults to n + 3.
        #[arg(long)]
        degree_bound: Option<u32>,
        #[arg(long, default_value = "zp:101")]
        field: Field,
    },
    /// Twist matrices, their product, fixed spaces and residuals.
    Monodromy,
    /// The rational potential on the sl(3) orbit.
    Sl3 {
        /// Three comma-separated weights summing to zero; symbolic if absent.
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
    },
    /// Runs a named verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        degree_bound: Option<u32>,
        #[arg(long, default_value = "zp:101")]
        field: Field,
    },
}

enum Failure {
    /// A mathematical check did not hold.
    Check(String),
    /// Invalid input.
    Usage(String),
}

type CmdResult = Result<(String, Value, bool), Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn mirror_failure(e: MirrorError) -> Failure {
    match e {
        MirrorError::NTooSmall(_) | MirrorError::IndexOutOfRange { .. } | MirrorError::MixedCouplings => {
            Failure::Usage(e.to_string())
        }
        other => Failure::Check(other.to_string()),
    }
}

fn homology_failure(e: HomologyError) -> Failure {
    match e {
        HomologyError::IndexOutOfRange { .. }
        | HomologyError::EqualIndices(_)
        | HomologyError::LengthTooShort(_)
        | HomologyError::TooFewVariables { .. }
        | HomologyError::WindowEmpty { .. } => Failure::Usage(e.to_string()),
        other => Failure::Check(other.to_string()),
    }
}

fn monodromy_failure(e: MonodromyError) -> Failure {
    Failure::Check(e.to_string())
}

fn parse_t(s: &str) -> Result<TParam, Failure> {
    if s == "sym" {
        return Ok(TParam::Symbolic);
    }
    Field::Rational
        .parse_scalar(s)
        .map(TParam::Value)
        .map_err(|e| Failure::Usage(format!("coupling `{s}`: {e}")))
}

fn cmd_mirror(n: usize, t1: &str, t2: &str) -> CmdResult {
    if n == 1 {
        return Err(Failure::Usage(
            "n must be at least 2; the rank-one mirror is produced by `theta`".into(),
        ));
    }
    let m = MirrorModel::new(n, parse_t(t1)?, parse_t(t2)?).map_err(mirror_failure)?;
    let rep = m.report().map_err(mirror_failure)?;
    let zero = fibre_report(&m, Fibre::Zero).map_err(mirror_failure)?;
    let inf = fibre_report(&m, Fibre::Infinity).map_err(mirror_failure)?;
    let gens = dsg_generators(&m).map_err(mirror_failure)?;
    let map = mirror_map(&m).map_err(mirror_failure)?;
    let lg3 = if n == 2 {
        let unit = *m.t1() == TParam::one() && *m.t2() == TParam::one();
        Some(if unit {
            m.lg3_unit_equation_text()
        } else {
            m.lg3_equation_text()
        }
        .map_err(mirror_failure)?)
    } else {
        None
    };
    let ok = rep.expanded_matches
        && rep.pencil_recovers_potential
        && rep.symmetric
        && zero.product_verified
        && inf.product_verified
        && map.bijective;

    let mut text = String::new();
    text.push_str(&format!("n = {}, t1 = {}, t2 = {}\n", rep.n, rep.t1, rep.t2));
    text.push_str(&format!("equation: {}\n", rep.equation));
    if let Some(l) = &lg3 {
        text.push_str(&format!("renamed: {l}\n"));
    }
    text.push_str(&format!("defining: {}\n", rep.defining));
    text.push_str(&format!("potential: {}\n", rep.potential));
    text.push_str(&format!("pencil f: {}\n", rep.pencil_f));
    text.push_str(&format!("pencil g: {}\n", rep.pencil_g));
    text.push_str(&format!("pencil degree: {}\n", rep.pencil_degree));
    text.push_str(&format!("indeterminacy: ({})\n", rep.indeterminacy.join(", ")));
    for f in [&zero, &inf] {
        let name = match f.fibre {
            Fibre::Zero => "fibre over 0",
            Fibre::Infinity => "fibre over infinity",
        };
        let comps: Vec<String> = f
            .components
            .iter()
            .map(|c| format!("{} = ({})", c.label, c.generators.join(", ")))
            .collect();
        let classes: Vec<String> = f.symmetry_classes.iter().map(|c| format!("{{{}}}", c.join(", "))).collect();
        text.push_str(&format!(
            "{name}: {} components [{}]; classes {}; objects {}\n",
            f.components.len(),
            comps.join(", "),
            classes.join(" "),
            f.objects.join(", ")
        ));
    }
    text.push_str(&format!("generators: {}\n", gens.join(", ")));
    let pairs: Vec<String> = map.pairs.iter().map(|(l, f)| format!("{l} <-> {f}")).collect();
    text.push_str(&format!("mirror map: {}\n", pairs.join(", ")));
    text.push_str(&format!("middle homology rank: {}\n", map.middle_homology_rank));
    text.push_str(&format!(
        "checks: expansion {}, pencil {}, symmetry {}\n",
        yes(rep.expanded_matches),
        yes(rep.pencil_recovers_potential),
        yes(rep.symmetric)
    ));
    let value = json!({
        "model": rep,
        "renamed": lg3,
        "fibres": [zero, inf],
        "generators": gens,
        "mirror_map": map,
        "ok": ok,
    });
    Ok((text, value, ok))
}

fn yes(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn cmd_theta() -> CmdResult {
    let t = theta_equations();
    let [e1, e2] = t.display();
    let elim = theta_eliminate(&t).map_err(mirror_failure)?;
    let s = lg2_surface().map_err(mirror_failure)?;
    let table = hom_table_lg2();
    let mut text = String::new();
    text.push_str(&format!("relations:\n  {e1}\n  {e2}\n"));
    text.push_str(&format!("eliminated: {}\n", elim.laurent));
    text.push_str(&format!("cleared: {} = 0\n", elim.cleared));
    text.push_str(&format!("excluded: {} != 0\n", elim.excluded.join(", ")));
    text.push_str(&format!("surface: {} = 0 (x != 0), potential {}\n", s.surface, s.potential));
    text.push_str(&format!("critical locus (u = 1): ({})\n", s.critical.join(", ")));
    let comps: Vec<String> = s
        .components
        .iter()
        .map(|c| format!("{} = ({})", c.label, c.generators.join(", ")))
        .collect();
    text.push_str(&format!("critical fibre: {}\n", comps.join(", ")));
    text.push_str(&format!(
        "branes: {}; objects after x -> 1/x: {}\n",
        s.branes.join(", "),
        s.objects.join(", ")
    ));
    for e in &table.entries {
        text.push_str(&format!("Hom({}, {}) = {} (tabulated)\n", e.source, e.target, e.group));
    }
    let ok = s.fibre_decomposition_verified && s.root_swap_inversion;
    let value = json!({
        "relations": [e1, e2],
        "elimination": elim,
        "surface": s,
        "hom_table": table,
    });
    Ok((text, value, ok))
}

fn cmd_res(n: usize, i: usize, len: usize, bound: u32, field: Field) -> CmdResult {
    let c = build_periodic_resolution(n, i, len, field).map_err(homology_failure)?;
    let mut text = c.transcript();
    let mut failures = Vec::new();
    if let Some(pos) = first_failure(&c).map_err(homology_failure)? {
        failures.push(format!("d{pos} * d{} != 0", pos + 1));
    }
    let mut homology = Vec::new();
    if failures.is_empty() {
        for pos in 1..len {
            let h = truncated_homology(&c, pos, bound, field).map_err(homology_failure)?;
            if h.total != 0 {
                failures.push(format!("homology at position {pos} is nonzero: {:?}", h.by_degree));
            }
            homology.push(json!({"position": pos, "by_degree": h.by_degree, "total": h.total}));
        }
    }
    let ok = failures.is_empty();
    if ok {
        text.push_str(&format!(
            "complex: ok; interior homology vanishes up to degree {bound} over {field}\n"
        ));
    } else {
        for f in &failures {
            text.push_str(&format!("FAILED: {f}\n"));
        }
    }
    let value = json!({
        "transcript": c.transcript().lines().collect::<Vec<_>>(),
        "field": field,
        "degree_bound": bound,
        "homology": homology,
        "failures": failures,
        "ok": ok,
    });
    Ok((text, value, ok))
}

fn cmd_ext(n: usize, i: usize, j: usize, k: usize, bound: Option<u32>, field: Field) -> CmdResult {
    let bound = bound.unwrap_or(n as u32 + 3);
    let entry = hom_sheaves_with(n, i, j, k, bound, field).map_err(mirror_failure)?;
    let mut text = String::new();
    for d in &entry.ext {
        let dims: Vec<String> = d.hilbert.iter().map(|(deg, dim)| format!("{deg}:{dim}")).collect();
        text.push_str(&format!(
            "Ext^{}(J{i}, J{j}) = {}  dims [{}] {}\n",
            d.k,
            d.closed_form,
            dims.join(" "),
            if d.matches { "ok" } else { "MISMATCH" }
        ));
    }
    text.push_str(&format!("Hom(F(z{i}), F(z{j})) = {}\n", entry.group));
    let ok = entry.ext.iter().all(|d| d.matches);
    Ok((text, json!({"degree_bound": bound, "field": field, "entry": entry, "ok": ok}), ok))
}

fn cmd_monodromy() -> CmdResult {
    let (t1, t2, t3) = concrete_triple();
    let (s1, s2, s3) = symbolic_triple();
    let product = t3.mul(&t2).mul(&t1).is_identity();
    let sproduct = s3.mul(&s2).mul(&s1).is_identity();
    let mut text = String::new();
    text.push_str(&format!("T1 = {t1}\nT2 = {t2}\nT3 = {t3}\n"));
    text.push_str(&format!("T3 T2 T1 = I: {}\n", yes(product)));
    let mut spaces = Vec::new();
    for (name, t) in [("T1", &t1), ("T2", &t2), ("T3", &t3)] {
        let f = fixed_space(t).map_err(monodromy_failure)?;
        let basis: Vec<String> = f.basis.iter().map(|v| format!("({}, {})", v[0], v[1])).collect();
        text.push_str(&format!(
            "fixed space of {name}: dimension {} [{}]\n",
            f.dimension,
            basis.join(", ")
        ));
        spaces.push(json!({"matrix": name, "fixed": f}));
    }
    text.push_str(&format!("trace T3 = {}\n", t3.trace().map_err(monodromy_failure)?));
    text.push_str(&format!("symbolic T1 = {s1}\nsymbolic T2 = {s2}\nsymbolic T3 = {s3}\n"));
    text.push_str(&format!("symbolic T3 T2 T1 = I: {}\n", yes(sproduct)));
    let c = candidate_fixed_check(&s3, &candidate_vector()).map_err(monodromy_failure)?;
    text.push_str(&format!(
        "residual of T3 v = v at v = ({}, {}): [{}, {}]\n",
        c.vector[0], c.vector[1], c.inverse_form[0], c.inverse_form[1]
    ));
    let ok = product && sproduct;
    let value = json!({
        "concrete": [t1.to_string(), t2.to_string(), t3.to_string()],
        "symbolic": [s1.to_string(), s2.to_string(), s3.to_string()],
        "product_identity": product,
        "symbolic_product_identity": sproduct,
        "fixed_spaces": spaces,
        "candidate": c,
    });
    Ok((text, value, ok))
}

fn cmd_sl3(weights: Option<&str>) -> CmdResult {
    let w = match weights {
        None => None,
        Some(s) => {
            let parts: Vec<Scalar> = s
                .split(',')
                .map(|p| Field::Rational.parse_scalar(p.trim()))
                .collect::<Result<_, _>>()
                .map_err(usage)?;
            let arr: [Scalar; 3] = parts
                .try_into()
                .map_err(|_| Failure::Usage("expected exactly three weights".into()))?;
            Some(arr)
        }
    };
    let r = rational_potential_sl3(w).map_err(usage)?.report();
    let text = format!(
        "potential: ({})/({})\nflag divisor: ({})\nindeterminacy: ({})\n",
        r.numerator,
        r.denominator,
        r.flag_ideal.join(", "),
        r.indeterminacy.join(", ")
    );
    Ok((text, json!(r), true))
}

fn cmd_verify(suite: &str, seed: u64, n: Option<usize>, bound: Option<u32>, field: Field) -> CmdResult {
    let suite: Suite = suite.parse().map_err(usage)?;
    let opts = VerifyOptions {
        n,
        degree_bound: bound,
        field,
        seed,
        ..VerifyOptions::default()
    };
    let rep = run_suite(suite, &opts).map_err(usage)?;
    Ok((rep.to_text(), json!(rep), rep.ok()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Mirror { n, t1, t2 } => cmd_mirror(*n, t1, t2),
        Cmd::Theta => cmd_theta(),
        Cmd::Res {
            n,
            i,
            len,
            degree_bound,
            field,
        } => cmd_res(*n, *i, *len, *degree_bound, *field),
        Cmd::Ext {
            n,
            i,
            j,
            k,
            degree_bound,
            field,
        } => cmd_ext(*n, *i, *j, *k, *degree_bound, *field),
        Cmd::Monodromy => cmd_monodromy(),
        Cmd::Sl3 { weights } => cmd_sl3(weights.as_deref()),
        Cmd::Verify {
            suite,
            seed,
            n,
            degree_bound,
            field,
        } => cmd_verify(suite, *seed, *n, *degree_bound, *field),
    };
    match result {
        Ok((text, value, ok)) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe is not an error for a report writer
            let _ = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"))
            } else {
                write!(out, "{text}")
            };
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
