//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the lines appear in plain `cargo test` output.

use std::process::Command;
use std::time::{Duration, Instant};

use lgmirror::homology::{
    build_odp_resolution, build_periodic_resolution, check_complex, ext_groups, mat_mul, odp_matrix,
    truncated_homology, two_periodic_complex, ClosedForm,
};
use lgmirror::ideal::{ideal_quotient, jacobian_ideal, vanishes_on_component, IdealBasis};
use lgmirror::mirror::{
    dsg_generators, fibre_report, lg2_surface, mirror_map, theta_eliminate, theta_equations, Fibre, MirrorModel,
    TParam,
};
use lgmirror::monodromy::{concrete_triple, fixed_space, symbolic_t3_closed_form, symbolic_triple};
use lgmirror::sampling::sample_smoothness;
use lgmirror::{Field, Monomial, Polynomial, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ZP: Field = Field::Prime(101);

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn resolution_transcript() -> Verdict {
    let out = Command::new(env!("CARGO_BIN_EXE_lgmirror"))
        .args(["res", "--n", "4", "--i", "1", "--len", "5", "--field", "zp:101"])
        .output()
        .map_err(e)?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    let want = "S^1 <--[z1]-- S^1\n\
                S^1 <--[z2*z3*z4]-- S^1\n\
                S^1 <--[z1]-- S^1\n\
                S^1 <--[z2*z3*z4]-- S^1\n\
                S^1 <--[z1]-- S^1\n";
    ensure(stdout.starts_with(want), format!("transcript was:\n{stdout}"))?;
    ensure(out.status.code() == Some(0), format!("exit status {:?}", out.status.code()))?;
    let c = build_periodic_resolution(4, 1, 5, ZP).map_err(e)?;
    ensure(check_complex(&c).map_err(e)?, "composites do not vanish")?;
    for pos in 1..5 {
        let h = truncated_homology(&c, pos, 6, ZP).map_err(e)?;
        ensure(h.total == 0, format!("homology at {pos}: {:?}", h.by_degree))?;
    }
    Ok("5 maps alternate z1 / z2*z3*z4, interior homology 0 up to degree 6".into())
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// Degree-`d` part of `z_j * k[n - 2 variables]`.
fn odd_oracle(n: usize, d: i64) -> usize {
    if d < 1 {
        return 0;
    }
    let m = (n - 2) as u64;
    binomial(d as u64 - 1 + m - 1, m - 1) as usize
}

/// Degree-`d` part of `(z_i z_j)S` by enumeration.
fn ideal_oracle(n: usize, i: usize, j: usize, d: i64) -> usize {
    if d < 0 {
        return 0;
    }
    Monomial::all_of_degree(n, d as u32)
        .into_iter()
        .filter(|m| m.exp(i - 1) >= 1 && m.exp(j - 1) >= 1 && (0..n).any(|l| m.exp(l) == 0))
        .count()
}

fn ext_table() -> Verdict {
    let mut pairs = 0;
    for n in 3..=5usize {
        let bound = n as u32 + 3;
        for i in 1..=n {
            for j in (i + 1)..=n {
                let ext = ext_groups(n, i, j, 4, bound, ZP).map_err(e)?;
                for d in &ext {
                    let tag = format!("n={n} i={i} j={j} k={}", d.k);
                    match d.k {
                        0 => {
                            ensure(
                                d.closed_form
                                    == ClosedForm::Ideal {
                                        generator: format!("z{i}*z{j}"),
                                    },
                                format!("{tag}: {}", d.closed_form),
                            )?;
                            for &(deg, dim) in &d.hilbert {
                                ensure(dim == ideal_oracle(n, i, j, deg), format!("{tag} degree {deg}: {dim}"))?;
                            }
                        }
                        k if k % 2 == 1 => {
                            let row = format!("[z{j} z{i}]");
                            ensure(
                                matches!(&d.closed_form, ClosedForm::Cokernel { row: r, .. } if *r == row),
                                format!("{tag}: {}", d.closed_form),
                            )?;
                            for deg in 0..=4 {
                                let dim = d
                                    .hilbert
                                    .iter()
                                    .find(|h| h.0 == deg)
                                    .map(|h| h.1)
                                    .ok_or(format!("{tag}: degree {deg} not covered"))?;
                                ensure(dim == odd_oracle(n, deg), format!("{tag} degree {deg}: {dim}"))?;
                            }
                        }
                        _ => {
                            ensure(d.closed_form == ClosedForm::Zero, format!("{tag}: {}", d.closed_form))?;
                            ensure(d.hilbert.iter().all(|h| h.1 == 0), format!("{tag}: nonzero"))?;
                        }
                    }
                    ensure(d.matches, format!("{tag}: closed form mismatch"))?;
                }
                pairs += 1;
            }
        }
    }
    let ext = ext_groups(4, 1, 2, 1, 7, ZP).map_err(e)?;
    let d3 = ext[1].hilbert.iter().find(|h| h.0 == 3).map(|h| h.1);
    ensure(d3 == Some(3), format!("n=4 degree 3 dimension {d3:?}"))?;
    Ok(format!("{pairs} index pairs, k <= 4, odd part matches in degrees 0..=4"))
}

fn singular_locus() -> Verdict {
    let ring = Ring::new(&["x1", "x2", "x3", "x4", "y1", "t1", "t2"], Field::Rational).map_err(e)?;
    let p = ring
        .parse("x1*x2*x3*x4*y1 - (y1+t1*x4)*(y1+t2*x3)")
        .map_err(e)?;
    let vars = ["x1", "x2", "x3", "x4", "y1"];
    let jac = jacobian_ideal(&p, &vars).map_err(e)?;
    ensure(jac.generators().len() == 6, "expected six generators")?;
    for gens in [vec!["y1", "x3", "x4"], vec!["x1", "x2", "y1 + t2*x3", "y1 + t1*x4"]] {
        let comp = IdealBasis::parse(&ring, &gens)
            .map_err(e)?
            .ensure_groebner()
            .map_err(e)?;
        ensure(
            vanishes_on_component(jac.generators(), &comp).map_err(e)?,
            format!("not contained in ({})", gens.join(", ")),
        )?;
    }
    let unit = Ring::new(&vars, Field::Rational).map_err(e)?;
    let one = unit.one();
    let q = p
        .substitute_into(&unit, &[("t1", one.clone()), ("t2", one)])
        .map_err(e)?;
    let excluded = [
        IdealBasis::parse(&unit, &["y1", "x3", "x4"]).map_err(e)?,
        IdealBasis::parse(&unit, &["x1", "x2", "y1 + x3", "y1 + x4"]).map_err(e)?,
    ];
    let s = sample_smoothness(&q, &excluded, 100, 101, 7).map_err(e)?;
    ensure(s.usable == 100, format!("only {} usable points", s.usable))?;
    ensure(s.fraction_f64() >= 0.95, format!("smooth fraction {}", s.fraction_f64()))?;
    Ok(format!(
        "6 generators vanish on both components; {}/{} sampled points smooth",
        s.smooth, s.usable
    ))
}

fn theta_pipeline() -> Verdict {
    let t = theta_equations();
    let elim = theta_eliminate(&t).map_err(e)?;
    let want = t
        .ring
        .parse("c*th1*th2*th4 - (a*b + c*(a+b)*th1 + c^2*th1^2)")
        .map_err(e)?;
    ensure(elim.cleared == want, format!("cleared form {}", elim.cleared))?;
    ensure(
        elim.laurent == "th2*th4 = (a + b) + c*th1 + (a*b/c)*th1^-1",
        elim.laurent.clone(),
    )?;
    let s = lg2_surface().map_err(e)?;
    let want = s.surface.ring().parse("u*y*x - v*(x^2 + x + 1)").map_err(e)?;
    ensure(s.surface == want, format!("surface {}", s.surface))?;
    Ok(format!("{}; surface {}", elim.laurent, s.surface))
}

fn monodromy() -> Verdict {
    let (t1, t2, t3) = concrete_triple();
    ensure(t3.to_ints() == Some([[2, -1], [-1, 1]]), format!("T3 = {t3}"))?;
    ensure(t3.mul(&t2).mul(&t1).is_identity(), "T3 T2 T1 != I")?;
    let q = |v: i64| Field::Rational.from_i64(v);
    ensure(fixed_space(&t3).map_err(e)?.dimension == 0, "T3 fixes a vector")?;
    ensure(
        fixed_space(&t1).map_err(e)?.vectors == vec![[q(1), q(0)]],
        "fixed space of T1",
    )?;
    ensure(
        fixed_space(&t2).map_err(e)?.vectors == vec![[q(0), q(1)]],
        "fixed space of T2",
    )?;
    let (s1, s2, s3) = symbolic_triple();
    let closed = symbolic_t3_closed_form();
    ensure(s3 == closed, format!("symbolic T3 = {s3}"))?;
    ensure(closed.denominator().to_string() == "x2*y1", "denominator")?;
    ensure(s3.mul(&s2).mul(&s1).is_identity(), "symbolic product")?;
    Ok(format!("T3 = {t3}; symbolic T3 = {s3}"))
}

fn node_factorization() -> Verdict {
    let ring = Ring::new(&["x", "y", "w"], Field::Rational).map_err(e)?;
    let a = odp_matrix(&ring);
    let p = ring.parse("y^2 - x*w").map_err(e)?;
    let want: Vec<Vec<Polynomial>> = [["y", "w"], ["-x", "-y"]]
        .iter()
        .map(|row| row.iter().map(|s| ring.parse(s).expect("valid")).collect())
        .collect();
    ensure(a == want, "A differs from [[y, w], [-x, -y]]")?;
    let sq = mat_mul(&a, &a, &ring);
    for (r, row) in sq.iter().enumerate() {
        for (c, entry) in row.iter().enumerate() {
            let want = if r == c { p.clone() } else { ring.zero() };
            ensure(*entry == want, format!("A^2[{r}][{c}] = {entry}"))?;
        }
    }
    let c = two_periodic_complex(&a, &a, &p, 4).map_err(e)?;
    ensure(check_complex(&c).map_err(e)?, "two-periodic complex fails")?;
    let g = build_odp_resolution(4, ZP).map_err(e)?;
    ensure(check_complex(&g).map_err(e)?, "graded complex fails")?;
    for pos in 1..4 {
        let h = truncated_homology(&g, pos, 5, ZP).map_err(e)?;
        ensure(h.total == 0, format!("homology at {pos}: {:?}", h.by_degree))?;
    }
    let src = Ring::new(&["x", "y", "w", "b0", "b1"], Field::Rational).map_err(e)?;
    let chart = Ring::new(&["u", "z"], Field::Rational).map_err(e)?;
    let lift = |s: &str| chart.parse(s).expect("valid");
    let assign = [
        ("x", lift("u")),
        ("y", lift("z*u")),
        ("w", lift("z^2*u")),
        ("b0", lift("u^2")),
        ("b1", lift("z*u^2")),
    ];
    for rel in ["b0*y - b1*x", "b0*w - b1*y"] {
        let img = src
            .parse(rel)
            .map_err(e)?
            .substitute_into(&chart, &assign)
            .map_err(e)?;
        ensure(img.is_zero(), format!("{rel} lifts to {img}"))?;
    }
    Ok("A^2 = (y^2 - x*w) I, complex exact inside up to degree 5, relations lift to 0".into())
}

fn fibre_counts() -> Verdict {
    for n in 2..=8usize {
        let m = MirrorModel::new(n, TParam::Symbolic, TParam::Symbolic).map_err(e)?;
        let inf = fibre_report(&m, Fibre::Infinity).map_err(e)?;
        ensure(inf.components.len() == 2 * n - 1, format!("n={n}: {} components", inf.components.len()))?;
        ensure(inf.objects.len() == n, format!("n={n}: {} objects", inf.objects.len()))?;
        let gens = dsg_generators(&m).map_err(e)?;
        ensure(gens.len() == n + 1, format!("n={n}: {} generators", gens.len()))?;
        let map = mirror_map(&m).map_err(e)?;
        let mut left: Vec<_> = map.pairs.iter().map(|p| p.0.clone()).collect();
        let mut right: Vec<_> = map.pairs.iter().map(|p| p.1.clone()).collect();
        let mut want_left: Vec<_> = (1..=n + 1).map(|i| format!("L{i}")).collect();
        let mut sorted_gens = gens.clone();
        left.sort();
        right.sort();
        want_left.sort();
        sorted_gens.sort();
        ensure(left == want_left && right == sorted_gens, format!("n={n}: pairing {:?}", map.pairs))?;
    }
    Ok("n = 2..8: 2n-1 components, n objects, n+1 generators paired bijectively".into())
}

fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32) -> Monomial {
    let d = rng.gen_range(1..=max_deg);
    let mut ex = vec![0u32; nvars];
    for _ in 0..d {
        ex[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::from_exps(ex)
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &Ring, terms: usize, max_deg: u32) -> Polynomial {
    let field = ring.field();
    Polynomial::from_terms(
        ring,
        (0..terms).map(|_| {
            let c = field.from_i64(rng.gen_range(-3..=3));
            (random_monomial(rng, ring.nvars(), max_deg), c)
        }),
    )
}

fn engine_consistency() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..200 {
        let nvars = rng.gen_range(2..=5);
        let names: Vec<String> = (1..=nvars).map(|i| format!("v{i}")).collect();
        let ring = Ring::new(&names, Field::Rational).map_err(e)?;
        let k = rng.gen_range(1..=3);
        let gens: Vec<Monomial> = (0..k).map(|_| random_monomial(&mut rng, nvars, 5)).collect();
        let f = random_monomial(&mut rng, nvars, 5);
        let ideal = IdealBasis::new(
            &ring,
            gens.iter()
                .map(|m| Polynomial::monomial(&ring, m.clone(), Field::Rational.one()))
                .collect(),
        )
        .map_err(e)?;
        let fp = Polynomial::monomial(&ring, f.clone(), Field::Rational.one());
        let quot = ideal_quotient(&ideal, &fp).map_err(e)?.ensure_groebner().map_err(e)?;
        for d in 0..=5 {
            for u in Monomial::all_of_degree(nvars, d) {
                let want = gens.iter().any(|g| g.divides(&u.mul(&f)));
                let up = Polynomial::monomial(&ring, u.clone(), Field::Rational.one());
                let got = quot.contains(&up).map_err(e)?;
                ensure(got == want, format!("case {case}: monomial {up} membership {got}, oracle {want}"))?;
            }
        }
    }
    for case in 0..40 {
        let ring = Ring::new(&["a", "b", "c"], Field::Rational).map_err(e)?;
        let gens: Vec<Polynomial> = (0..3).map(|_| random_poly(&mut rng, &ring, 3, 2)).filter(|p| !p.is_zero()).collect();
        if gens.is_empty() {
            continue;
        }
        let rewrite = |gs: &[Polynomial], rng: &mut ChaCha8Rng| -> Vec<Polynomial> {
            let mut out = gs.to_vec();
            for t in 1..out.len() {
                let s = rng.gen_range(0..t);
                let mult = random_poly(rng, &ring, 2, 1);
                out[t] = &out[t] + &(&mult * &out[s]);
            }
            out.reverse();
            out
        };
        let i = IdealBasis::new(&ring, gens.clone()).map_err(e)?.ensure_groebner().map_err(e)?;
        let jg = rewrite(&gens, &mut rng);
        let j = IdealBasis::new(&ring, jg.clone()).map_err(e)?.ensure_groebner().map_err(e)?;
        let kg = rewrite(&jg, &mut rng);
        let kk = IdealBasis::new(&ring, kg.clone()).map_err(e)?.ensure_groebner().map_err(e)?;
        let within = |gs: &[Polynomial], id: &IdealBasis| -> Result<bool, String> {
            for g in gs {
                if !id.contains(g).map_err(e)? {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        ensure(within(&gens, &i)?, format!("case {case}: not reflexive"))?;
        let ij = within(&gens, &j)?;
        let jk = within(&jg, &kk)?;
        ensure(ij && jk, format!("case {case}: rewrite changed the ideal"))?;
        ensure(within(&gens, &kk)?, format!("case {case}: not transitive"))?;
        ensure(within(&kg, &i)?, format!("case {case}: rewrite not contained back"))?;
    }
    Ok("200 monomial quotients match the oracle; membership reflexive and transitive on 40 rewrites".into())
}

fn main() {
    let criteria: [(&str, fn() -> Verdict, Option<Duration>); 8] = [
        ("1 periodic resolution transcript", resolution_transcript, Some(Duration::from_secs(5))),
        ("2 Ext table", ext_table, Some(Duration::from_secs(60))),
        ("3 singular locus", singular_locus, Some(Duration::from_secs(30))),
        ("4 theta pipeline", theta_pipeline, None),
        ("5 monodromy", monodromy, None),
        ("6 node matrix factorization", node_factorization, None),
        ("7 fibre combinatorics", fibre_counts, None),
        ("8 engine self-consistency", engine_consistency, Some(Duration::from_secs(60))),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let verdict = run();
        let took = start.elapsed();
        let verdict = match (verdict, limit) {
            (Ok(_), Some(l)) if took > l => Err(format!("took {took:.2?}, limit {l:?}")),
            (v, _) => v,
        };
        match verdict {
            Ok(detail) => println!("PASS criterion {name} ({took:.2?}): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name} ({took:.2?}): {detail}");
            }
        }
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
