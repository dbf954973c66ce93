//! End-to-end acceptance checks. Runs as a plain binary so that every
//! criterion prints its PASS/FAIL line; exits non-zero if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use conjlab_core::derivation::{character_from_potential, compose_morphisms, leibniz_residual};
use conjlab_core::experiments::{
    direct_pow_sum, run_appendix, run_limit_experiment, run_unboundedness, ConjugatorSequence,
};
use conjlab_core::graph::{bc_probe, conj_distance, explore_component, export_dot};
use conjlab_core::group::cayley_ball;
use conjlab_core::{
    BcVerdict, Bounded, Derivation, Group, GroupElement, GroupModel, GroupRingVector, Heisenberg,
    HeisenbergElement, Morphism, Potential, Rational, TruncationPolicy, DEFAULT_NODE_BUDGET,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const MODELS: [&str; 6] = ["h3", "free2", "dinf", "dsemi", "h3semi", "(h3|dinf)"];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn models() -> Vec<GroupModel> {
    MODELS.iter().map(|s| s.parse().unwrap()).collect()
}

fn random_element(m: &GroupModel, rng: &mut ChaCha8Rng, max_len: usize) -> GroupElement {
    let letters = m.letter_elements();
    let len = rng.gen_range(0..=max_len);
    (0..len).fold(m.identity(), |acc, _| {
        let (_, x) = &letters[rng.gen_range(0..letters.len())];
        m.multiply(&acc, x)
    })
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n = rng.gen_range(-9i64..=9);
    let d = rng.gen_range(1i64..=7);
    q(if n == 0 { 1 } else { n }, d)
}

// integer matrix [[1, a, c], [0, 1, b], [0, 0, 1]]
type Matrix = [[i64; 3]; 3];

fn matrix(e: &HeisenbergElement) -> Matrix {
    let f = |x: &_| i64::try_from(x).unwrap();
    [[1, f(&e.a), f(&e.c)], [0, 1, f(&e.b)], [0, 0, 1]]
}

fn matmul(x: &Matrix, y: &Matrix) -> Matrix {
    let mut out = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| x[i][k] * y[k][j]).sum();
        }
    }
    out
}

fn matinv(x: &Matrix) -> Matrix {
    let (a, b, c) = (x[0][1], x[1][2], x[0][2]);
    [[1, -a, a * b - c], [0, 1, -b], [0, 0, 1]]
}

fn heisenberg_oracle() -> Outcome {
    let h = Heisenberg;
    let mut elems = Vec::new();
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            for c in -3i64..=3 {
                elems.push(HeisenbergElement::new(a, b, c));
            }
        }
    }
    let id = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let mut pairs = 0usize;
    for x in &elems {
        let mx = matrix(x);
        ensure(matrix(&h.invert(x)) == matinv(&mx), || {
            format!("inverse of {x:?}")
        })?;
        ensure(matmul(&matinv(&mx), &mx) == id, || {
            format!("matrix inverse of {x:?}")
        })?;
        for y in &elems {
            let my = matrix(y);
            ensure(matrix(&h.multiply(x, y)) == matmul(&mx, &my), || {
                format!("product of {x:?} and {y:?}")
            })?;
            let conj = matmul(&matmul(&mx, &my), &matinv(&mx));
            ensure(matrix(&h.conjugate(x, y)) == conj, || {
                format!("conjugate of {y:?} by {x:?}")
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{} elements, {pairs} ordered pairs", elems.len()))
}

fn ap_component_path() -> Outcome {
    let h = Heisenberg;
    let ball = explore_component(&h, &Heisenberg::ap(), 5, DEFAULT_NODE_BUDGET);
    let golden = include_str!("golden/h3_ap_radius5.dot");
    ensure(export_dot(&h, &ball, false) == golden, || {
        "DOT differs from golden file".into()
    })?;
    let expected: BTreeSet<HeisenbergElement> =
        (-5..=5).map(|k| HeisenbergElement::new(1, 0, k)).collect();
    let got: BTreeSet<HeisenbergElement> = ball.vertices().cloned().collect();
    ensure(got == expected, || format!("vertex set {got:?}"))?;
    let mut path_edges = BTreeSet::new();
    for e in &ball.edges {
        let label = e.label.to_string();
        if e.is_loop() {
            ensure(
                ["Ap", "Ap^-1", "A1", "A1^-1"].contains(&label.as_str()),
                || format!("unexpected loop {label}"),
            )?;
            continue;
        }
        let shift = match label.as_str() {
            "Ax" => -1,
            "Ax^-1" => 1,
            _ => return Err(format!("unexpected edge label {label}")),
        };
        ensure(e.dst.c.clone() - e.src.c.clone() == shift.into(), || {
            format!("{label} edge {:?} -> {:?}", e.src, e.dst)
        })?;
        path_edges.insert(if e.src < e.dst {
            (e.src.clone(), e.dst.clone())
        } else {
            (e.dst.clone(), e.src.clone())
        });
    }
    let loops = ball.edges.iter().filter(|e| e.is_loop()).count();
    ensure(path_edges.len() == 10 && loops == 44, || {
        format!("{} path edges, {loops} loops", path_edges.len())
    })?;
    Ok("11-vertex path, golden DOT identical".into())
}

fn bc_plateau() -> Outcome {
    let h = Heisenberg;
    let k = [
        Heisenberg::ap(),
        h.multiply(&Heisenberg::ap(), &Heisenberg::a1()),
    ];
    let report = bc_probe(&h, &k, 6, 64, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
    ensure(report.shells.len() == 7, || {
        format!("{} shells", report.shells.len())
    })?;
    ensure(
        report.shells.iter().all(|(_, d)| *d == Bounded::Exact(1)),
        || format!("shells {:?}", report.shells),
    )?;
    ensure(report.verdict == BcVerdict::Plateau(1), || {
        format!("verdict {}", report.verdict)
    })?;
    Ok(format!(
        "shells r=0..6 all 1, {} distinct actions, {}",
        report.distinct_actions, report.verdict
    ))
}

fn bc_violation() -> Outcome {
    let g: GroupModel = "h3semi".parse().unwrap();
    let ap = g.decode("H3(1,0,0)").unwrap();
    let ax = g.decode("H3(0,1,0)").unwrap();
    for k in 1..=8u64 {
        let target = g.conjugate(&g.power(&ax, k as i64), &ap);
        let d = conj_distance(&g, &ap, &target, 64, DEFAULT_NODE_BUDGET);
        ensure(d == Bounded::Exact(k), || format!("rho at k = {k} is {d}"))?;
    }
    let report = bc_probe(&g, &[ax, ap], 6, 64, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
    ensure(report.verdict == BcVerdict::Growing, || {
        format!("verdict {} on shells {:?}", report.verdict, report.shells)
    })?;
    let shells: Vec<String> = report.shells.iter().map(|(_, d)| d.to_string()).collect();
    Ok(format!(
        "rho = k for k = 1..8, shells [{}], Growing",
        shells.join(",")
    ))
}

fn dihedral_structure() -> Outcome {
    let g: GroupModel = "dinf".parse().unwrap();
    let abab = g.decode("ababab").unwrap();
    let class = explore_component(&g, &abab, 10, DEFAULT_NODE_BUDGET);
    let names: BTreeSet<String> = class.vertices().map(|v| g.encode(v)).collect();
    let expected: BTreeSet<String> = ["ababab", "bababa"].iter().map(|s| s.to_string()).collect();
    ensure(class.closed && names == expected, || {
        format!("class {names:?}, closed {}", class.closed)
    })?;
    let a = g.decode("a").unwrap();
    let ray = explore_component(&g, &a, 6, DEFAULT_NODE_BUDGET);
    ensure(!ray.closed && ray.len() == 7, || {
        format!("{} vertices", ray.len())
    })?;
    // the vertex at distance k is the palindrome of length 2k + 1 starting in a
    for (v, d) in &ray.dist {
        let enc = g.encode(v);
        let want: String = (0..2 * d + 1)
            .map(|i| if (i + d) % 2 == 0 { 'a' } else { 'b' })
            .collect();
        ensure(enc == want, || format!("{enc} at distance {d}"))?;
    }
    for e in ray.edges.iter().filter(|e| !e.is_loop()) {
        let (ds, dd) = (ray.dist[&e.src], ray.dist[&e.dst]);
        ensure(ds.abs_diff(dd) == 1, || "edge skips a level".into())?;
    }
    let bab = g.decode("bab").unwrap();
    let d = conj_distance(&g, &a, &bab, 64, DEFAULT_NODE_BUDGET);
    ensure(d == Bounded::Exact(1), || format!("rho(a, bab) = {d}"))?;
    Ok("class of (ab)^3 = {ababab, bababa}; component of a is a ray; rho(a, bab) = 1".into())
}

fn character_additivity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut nonzero = 0usize;
    for m in models() {
        // values on a whole Cayley ball, so most characters are nonzero
        let ball = cayley_ball(&m, 3, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        let pot = Potential::from_table(ball.into_iter().map(|e| {
            let v = random_rational(&mut rng);
            (e, v)
        }));
        for _ in 0..500 {
            let phi = Morphism::new(
                random_element(&m, &mut rng, 3),
                random_element(&m, &mut rng, 3),
            );
            let v2 = random_element(&m, &mut rng, 3);
            let u2 = m.multiply(&m.multiply(&v2, &phi.u), &m.invert(&phi.v));
            let psi = Morphism::new(u2, v2);
            let comp = compose_morphisms(&m, &psi, &phi).map_err(|e| e.to_string())?;
            let lhs = character_from_potential(&pot, &m, &comp);
            let rhs =
                character_from_potential(&pot, &m, &psi) + character_from_potential(&pot, &m, &phi);
            ensure(lhs == rhs, || {
                format!("{}: {} on {}", m.name(), psi.describe(&m), phi.describe(&m))
            })?;
            if lhs.re != q(0, 1) {
                nonzero += 1;
            }
        }
    }
    ensure(nonzero > 0, || "every sampled character vanished".into())?;
    Ok(format!(
        "{} pairs over {} models, 0 violations, {nonzero} nonzero",
        500 * MODELS.len(),
        MODELS.len()
    ))
}

fn leibniz_exactness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut residuals = 0usize;
    let mut inner_checks = 0usize;
    for m in models() {
        for _ in 0..10 {
            let size = rng.gen_range(1..=8);
            let x = GroupRingVector::from_real((0..size).map(|_| {
                let e = random_element(&m, &mut rng, 4);
                (e, random_rational(&mut rng))
            }));
            let pot = Potential::from_table(x.iter().map(|(g, c)| (g.clone(), c.re.clone())));
            let d = Derivation::from_potential(pot, TruncationPolicy::default());
            for _ in 0..500 {
                let g = random_element(&m, &mut rng, 5);
                let h = random_element(&m, &mut rng, 5);
                ensure(leibniz_residual(&d, &m, &g, &h).is_zero(), || {
                    format!(
                        "{}: residual at ({}, {})",
                        m.name(),
                        m.encode(&g),
                        m.encode(&h)
                    )
                })?;
                residuals += 1;
            }
            let inner = Derivation::inner(x);
            for _ in 0..100 {
                let g = random_element(&m, &mut rng, 5);
                ensure(inner.apply(&m, &g) == d.apply(&m, &g), || {
                    format!("{}: inner differs at {}", m.name(), m.encode(&g))
                })?;
                inner_checks += 1;
            }
        }
    }
    Ok(format!(
        "{residuals} residuals exactly 0, {inner_checks} inner comparisons equal"
    ))
}

fn harmonic(from: u64, to: u64, skip: u64) -> Rational {
    let mut s = q(0, 1);
    for j in from..=to {
        if j != skip {
            s += q(1, j as i64);
        }
    }
    s
}

fn harmonic_coefficients() -> Outcome {
    let start = Instant::now();
    let report = run_appendix(64, 64).map_err(|e| e.to_string())?;
    let mut literal = 0usize;
    let mut beyond = 0usize;
    for row in &report.rows {
        let m = row.m;
        for (n, c) in &row.coefficients {
            let n = *n;
            // general form: the lower limit rises to n - m once n > m + 1
            ensure(*c == harmonic(n.saturating_sub(m).max(1), m + n, n), || {
                format!("m = {m}, n = {n}: {c}")
            })?;
            if n <= m + 1 {
                ensure(*c == harmonic(1, m + n, n), || {
                    format!("m = {m}, n = {n}: {c}")
                })?;
                literal += 1;
            } else {
                ensure(*c != harmonic(1, m + n, n), || {
                    format!("m = {m}, n = {n} unexpectedly literal")
                })?;
                beyond += 1;
            }
        }
    }
    ensure(report.rows[1].coefficients[0] == (1, q(5, 6)), || {
        "m = 2, n = 1 is not 5/6".into()
    })?;
    let mut ratios = Vec::new();
    for m in [4u64, 8, 16, 32, 64] {
        let row = &report.rows[m as usize - 1];
        let s = harmonic(2, m, 0);
        ensure(row.lower_sum == s, || format!("lower sum at m = {m}"))?;
        let sf = s.numer().to_string().parse::<f64>().unwrap()
            / s.denom().to_string().parse::<f64>().unwrap();
        let expected = (m as f64).sqrt() * sf / (2.0 * m as f64 + 1.0).sqrt();
        ensure((row.ratio_lower_bound - expected).abs() <= 1e-9, || {
            format!("ratio at m = {m}: {} vs {expected}", row.ratio_lower_bound)
        })?;
        ensure(row.certified_norm + 1e-12 >= row.norm_lower_bound, || {
            format!("certificate fails at m = {m}")
        })?;
        ratios.push(row.ratio_lower_bound);
    }
    ensure(ratios.windows(2).all(|w| w[0] < w[1]), || {
        format!("ratios {ratios:?}")
    })?;
    ensure(ratios[4] > 2.0, || format!("ratio at 64 is {}", ratios[4]))?;
    let elapsed = start.elapsed().as_secs_f64();
    ensure(elapsed < 30.0, || format!("took {elapsed:.1} s"))?;
    Ok(format!(
        "{literal} cells with n <= m+1 match the closed sum, {beyond} cells with n > m+1 match the shifted sum; ratios {} ; {elapsed:.1} s",
        ratios.iter().map(|r| format!("{r:.6}")).collect::<Vec<_>>().join(" < ")
    ))
}

fn norm_limit() -> Outcome {
    let h = Heisenberg;
    let values = [(0i64, q(1, 1)), (-1, q(1, 2))];
    let pot = Potential::from_table(
        values
            .iter()
            .map(|(c, v)| (HeisenbergElement::new(1, 0, *c), v.clone())),
    );
    let phi = |c: i64| {
        values
            .iter()
            .find(|(k, _)| *k == c)
            .map_or(q(0, 1), |(_, v)| v.clone())
    };
    let seq = ConjugatorSequence::powers(&h, Heisenberg::ax());
    let mut lines = Vec::new();
    for qe in [1u32, 2, 3] {
        let half_q = q(1, 1 << qe);
        let limit = q(2, 1) * (q(1, 1) + half_q.clone());
        let report = run_limit_experiment(&h, &pot, &seq, qe, 8, DEFAULT_NODE_BUDGET)
            .map_err(|e| e.to_string())?;
        ensure(report.separation_index == Some(2), || {
            format!("q = {qe}: separation {:?}", report.separation_index)
        })?;
        ensure(report.settled && report.limit_pow_sum == limit, || {
            format!("q = {qe}: limit {}", report.limit_pow_sum)
        })?;
        let qf = f64::from(qe);
        let limit_f = 2f64.powf(1.0 / qf) * (1.0 + 2f64.powf(-qf)).powf(1.0 / qf);
        ensure((report.limit - limit_f).abs() < 1e-12, || {
            format!("q = {qe}: {}", report.limit)
        })?;
        for s in &report.samples {
            let k = s.k as i64;
            // the support union {0, -1, k, k-1} in the central coordinate;
            // d(Ax^k) has coefficient φ(c - k) - φ(c) at Ax^k (1, 0, c)
            let union: BTreeSet<i64> = [0, -1, k, k - 1].into_iter().collect();
            let brute: Rational = union
                .iter()
                .map(|&c| {
                    let diff = phi(c - k) - phi(c);
                    let abs = if diff < q(0, 1) { -diff } else { diff };
                    (0..qe).fold(q(1, 1), |acc, _| acc * &abs)
                })
                .sum();
            ensure(s.pow_sum == brute, || {
                format!("q = {qe}, k = {k}: {} vs {brute}", s.pow_sum)
            })?;
            let direct = direct_pow_sum(&h, &pot, &seq.term(&h, s.k), qe);
            ensure(s.pow_sum == direct, || {
                format!("q = {qe}, k = {k}: direct {direct}")
            })?;
            let expected = if k == 1 {
                q(1, 1) + q(2, 1) * half_q.clone()
            } else {
                limit.clone()
            };
            ensure(s.pow_sum == expected, || {
                format!("q = {qe}, k = {k}: {}", s.pow_sum)
            })?;
            ensure(s.separated == (k >= 2), || {
                format!("q = {qe}, k = {k}: separation flag")
            })?;
            if k >= 2 {
                ensure((s.norm - limit_f).abs() < 1e-12, || {
                    format!("q = {qe}, k = {k}: norm {}", s.norm)
                })?;
            }
        }
        lines.push(format!("q={qe}: {}", report.limit_pow_sum));
    }
    Ok(format!(
        "norm^q = {} for k >= 2, separation index 2",
        lines.join(", ")
    ))
}

fn unboundedness() -> Outcome {
    let start = Instant::now();
    let r = run_unboundedness(6, 1000, &[4, 8, 16, 32, 64], DEFAULT_NODE_BUDGET)
        .map_err(|e| e.to_string())?;
    let bound = 2.0 * std::f64::consts::PI / 6f64.sqrt();
    ensure((r.element_bound - bound).abs() < 1e-12, || {
        format!("element bound {}", r.element_bound)
    })?;
    ensure(r.probe.shells.len() == 7, || {
        "probe did not reach radius 6".into()
    })?;
    ensure(
        r.g_bounded && r.probe.max_norm <= bound + r.probe.tail_bound,
        || {
            format!(
                "max norm {} exceeds {} + {}",
                r.probe.max_norm, bound, r.probe.tail_bound
            )
        },
    )?;
    ensure(
        r.ratio_increasing && r.ratios.last().is_some_and(|(_, x)| *x > 2.0),
        || format!("ratios {:?}", r.ratios),
    )?;
    Ok(format!(
        "max_(|g|<=6) ||d_K(g)||_2 = {:.6} <= 2||phi||_2 + tail = {:.6} + {:.6} (K = 1000), while ||d(a_m)||_2/||a_m||_2 >= {} ; {:.1} s",
        r.probe.max_norm,
        bound,
        r.probe.tail_bound,
        r.ratios.iter().map(|(m, x)| format!("{x:.4} (m={m})")).collect::<Vec<_>>().join(", "),
        start.elapsed().as_secs_f64()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("heisenberg matrix oracle", heisenberg_oracle),
        ("conjugacy graph of Ap, radius 5", ap_component_path),
        ("bounded conjugation plateau", bc_plateau),
        ("bounded conjugation violation", bc_violation),
        ("infinite dihedral structure", dihedral_structure),
        ("character additivity", character_additivity),
        ("leibniz exactness", leibniz_exactness),
        (
            "harmonic inner derivation coefficients",
            harmonic_coefficients,
        ),
        ("norm limit along Ax^k", norm_limit),
        ("bounded on elements, unbounded as operator", unboundedness),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name} [{secs:.2} s]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{secs:.2} s]: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
