//! Subcommand implementations. Each returns the rendered output; `main` only
//! decides where it goes.

use std::path::Path;

use conjlab_core::derivation::{
    character_from_derivation, character_from_potential, edge_jump_probe, g_boundedness_probe,
    leibniz_check, quasi_inner_check, stabilisation_probe, ClosedFormHost,
};
use conjlab_core::experiments::{
    run_appendix, run_inverse_sequence_check, run_limit_experiment, ConjugatorSequence,
};
use conjlab_core::graph::{bc_probe, explore_component, export_dot};
use conjlab_core::{
    Derivation, Exactness, Group, GroupElement, GroupModel, Morphism, TruncationPolicy,
    DEFAULT_NODE_BUDGET, DEFAULT_TRUNCATION,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cli::{Command, Format, GlobalOpts};
use crate::error::CliError;
use crate::input::{
    parse_element, parse_model, parse_rational, parse_word, LoadedPotential, PotentialFile,
};
use crate::output::{self, float, float_text, rational};

/// Rendered output plus the exit status it should end with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub status: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, status: 0 }
    }
}

/// Global options with defaults and the environment applied.
#[derive(Debug, Clone)]
pub struct Settings {
    pub model: Option<String>,
    pub seed: u64,
    pub node_budget: usize,
    pub diam_budget: u64,
    pub trunc_k: Option<u64>,
    pub format: Option<Format>,
}

impl Settings {
    /// `env_budget` is the value of `CONJLAB_DEFAULT_BUDGET`, if set.
    pub fn resolve(g: &GlobalOpts, env_budget: Option<&str>) -> Result<Self, CliError> {
        let node_budget = match (g.budget_nodes, env_budget) {
            (Some(n), _) => n,
            (None, Some(s)) => s.trim().parse().map_err(|_| {
                CliError::usage(format!("CONJLAB_DEFAULT_BUDGET is not a node count: {s:?}"))
            })?,
            (None, None) => DEFAULT_NODE_BUDGET,
        };
        if node_budget == 0 {
            return Err(CliError::usage("node budget must be positive"));
        }
        Ok(Settings {
            model: g.model.clone(),
            seed: g.seed,
            node_budget,
            diam_budget: g.budget_diam,
            trunc_k: g.trunc_k,
            format: g.format,
        })
    }

    fn model(&self) -> Result<GroupModel, CliError> {
        parse_model(self.model.as_deref().unwrap_or("h3"))
    }

    fn format(&self, default: Format) -> Result<Format, CliError> {
        let f = self.format.unwrap_or(default);
        if f == Format::Dot && default != Format::Dot {
            return Err(CliError::usage(
                "--format dot is only available for `graph`",
            ));
        }
        Ok(f)
    }

    fn load(&self, path: &Path) -> Result<LoadedPotential, CliError> {
        let loaded = PotentialFile::read(path)?.resolve()?;
        if let Some(m) = &self.model {
            if parse_model(m)?.name() != loaded.model.name() {
                return Err(CliError::usage(format!(
                    "--model {m} disagrees with the potential file model {}",
                    loaded.model.name()
                )));
            }
        }
        Ok(loaded)
    }

    fn truncation(&self, loaded: &LoadedPotential) -> TruncationPolicy {
        TruncationPolicy::new(
            self.trunc_k
                .or(loaded.truncation)
                .unwrap_or(DEFAULT_TRUNCATION),
        )
    }
}

fn render(format: Format, value: &Value, table: impl FnOnce() -> String) -> String {
    match format {
        Format::Table => table(),
        _ => output::to_json_text(value),
    }
}

fn exactness_json(e: Exactness) -> (Value, Value) {
    match e {
        Exactness::Exact => (json!("exact"), Value::Null),
        Exactness::Truncated { max_index } => (json!("truncated"), json!(max_index)),
    }
}

fn random_element(model: &GroupModel, rng: &mut ChaCha8Rng, max_len: usize) -> GroupElement {
    let letters = model.letter_elements();
    let len = rng.gen_range(0..=max_len);
    let mut acc = model.identity();
    for _ in 0..len {
        let (_, x) = &letters[rng.gen_range(0..letters.len())];
        acc = model.multiply(&acc, x);
    }
    acc
}

pub fn run(command: &Command, s: &Settings) -> Result<Outcome, CliError> {
    match command {
        Command::Graph {
            base,
            radius,
            suppress_loops,
        } => graph(s, base, *radius, *suppress_loops),
        Command::Bc { k, cayley_radius } => bc(s, k, *cayley_radius),
        Command::Derive {
            potential,
            element,
            p,
        } => derive(s, potential, element, *p),
        Command::Leibniz {
            potential,
            samples,
            word_length,
        } => leibniz(s, potential, *samples, *word_length),
        Command::Character { potential, u, v } => character(s, potential, u, v),
        Command::QuasiInner {
            potential,
            samples,
            word_length,
        } => quasi_inner(s, potential, *samples, *word_length),
        Command::Stabilise {
            potential,
            base,
            radius,
            radii,
            epsilon,
        } => stabilise(s, potential, base, *radius, radii, epsilon.as_deref()),
        Command::BoundProbe {
            potential,
            radius,
            p,
        } => bound_probe(s, potential, *radius, *p),
        Command::Appendix { m_max, n_max } => appendix(s, *m_max, n_max.unwrap_or(*m_max)),
        Command::Limit {
            potential,
            conjugator,
            tail,
            q,
            k_max,
        } => limit(s, potential, conjugator, tail, *q, *k_max),
        Command::InverseSeq {
            u,
            conjugator,
            tail,
            k_max,
        } => inverse_seq(s, u, conjugator, tail, *k_max),
    }
}

fn graph(s: &Settings, base: &str, radius: u64, suppress_loops: bool) -> Result<Outcome, CliError> {
    let model = s.model()?;
    let format = s.format(Format::Dot)?;
    let base_el = parse_element(&model, base)?;
    let ball = explore_component(&model, &base_el, radius, s.node_budget);
    let text = match format {
        Format::Dot => export_dot(&model, &ball, suppress_loops),
        Format::Json => {
            let vertices: Vec<Value> = ball
                .dist
                .iter()
                .map(|(v, d)| json!([model.encode(v), d]))
                .collect();
            let mut edges: Vec<(String, String, String)> = ball
                .edges
                .iter()
                .filter(|e| !(suppress_loops && e.is_loop()))
                .map(|e| {
                    (
                        model.encode(&e.src),
                        e.label.to_string(),
                        model.encode(&e.dst),
                    )
                })
                .collect();
            edges.sort();
            let mut vertices = vertices;
            vertices.sort_by_key(|v| v[0].as_str().map(String::from));
            output::to_json_text(&json!({
                "base": base,
                "radius": radius,
                "complete": ball.complete,
                "closed": ball.closed,
                "vertices": vertices,
                "edges": edges.into_iter().map(|(a, l, b)| json!([a, l, b])).collect::<Vec<_>>(),
            }))
        }
        Format::Table => {
            let mut rows: Vec<(u64, String)> = ball
                .dist
                .iter()
                .map(|(v, d)| (*d, model.encode(v)))
                .collect();
            rows.sort();
            let mut t = vec![vec!["dist".to_string(), "vertex".to_string()]];
            t.extend(rows.into_iter().map(|(d, v)| vec![d.to_string(), v]));
            output::table(&t)
        }
    };
    if !ball.complete {
        eprintln!(
            "conjlab: node budget of {} reached, the ball is partial",
            s.node_budget
        );
        return Ok(Outcome { text, status: 3 });
    }
    Ok(Outcome::ok(text))
}

pub fn bc_report_json(report: &conjlab_core::BcReport) -> Value {
    json!({
        "K": report.k_encodings,
        "shells": report
            .shells
            .iter()
            .map(|(r, d)| json!([r, output::bounded(*d)]))
            .collect::<Vec<_>>(),
        "verdict": report.verdict.to_string(),
    })
}

fn bc(s: &Settings, k: &[String], cayley_radius: u64) -> Result<Outcome, CliError> {
    let model = s.model()?;
    let format = s.format(Format::Json)?;
    let set = k
        .iter()
        .map(|e| parse_element(&model, e))
        .collect::<Result<Vec<_>, _>>()?;
    let report = bc_probe(&model, &set, cayley_radius, s.diam_budget, s.node_budget)?;
    Ok(Outcome::ok(render(
        format,
        &bc_report_json(&report),
        || {
            let mut t = vec![vec!["r".to_string(), "diam".to_string()]];
            t.extend(
                report
                    .shells
                    .iter()
                    .map(|(r, d)| vec![r.to_string(), d.to_string()]),
            );
            let mut out = format!("K = {{{}}}\n", report.k_encodings.join(", "));
            out.push_str(&output::table(&t));
            out.push_str(&format!("verdict {}\n", report.verdict));
            out
        },
    )))
}

fn derive(s: &Settings, path: &Path, element: &str, p: f64) -> Result<Outcome, CliError> {
    let loaded = s.load(path)?;
    let format = s.format(Format::Json)?;
    let model = &loaded.model;
    let g = parse_element(model, element)?;
    let d = Derivation::from_potential(loaded.potential.clone(), s.truncation(&loaded));
    let v = d.apply(model, &g);
    let norm = v.lp_norm(p).map_err(|e| CliError::usage(e.to_string()))?;
    let tail = match (d.exactness(), loaded.potential.closed_form()) {
        (Exactness::Truncated { max_index }, Some(cf)) => 2.0 * cf.tail_norm_bound(max_index, p),
        _ => 0.0,
    };
    let (exactness, truncation) = exactness_json(d.exactness());
    let value = json!({
        "element": element,
        "p": float(p),
        "norm": float(norm),
        "tail_bound": float(tail),
        "exactness": exactness,
        "truncation": truncation,
        "vector": output::vector(model, &v),
    });
    Ok(Outcome::ok(render(format, &value, || {
        let mut t = vec![vec![
            "element".to_string(),
            "re".to_string(),
            "im".to_string(),
        ]];
        if let Value::Array(rows) = &value["vector"] {
            for r in rows {
                t.push(
                    (0..3)
                        .map(|i| r[i].as_str().unwrap_or_default().to_string())
                        .collect(),
                );
            }
        }
        let mut out = output::table(&t);
        out.push_str(&format!("norm_{} {}\n", float_text(p), float_text(norm)));
        out
    })))
}

fn leibniz(
    s: &Settings,
    path: &Path,
    samples: usize,
    word_length: usize,
) -> Result<Outcome, CliError> {
    let loaded = s.load(path)?;
    let format = s.format(Format::Json)?;
    let model = &loaded.model;
    let d = Derivation::from_potential(loaded.potential.clone(), s.truncation(&loaded));
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let mut violations = Vec::new();
    let mut max_residual = 0.0f64;
    for _ in 0..samples {
        let g = random_element(model, &mut rng, word_length);
        let h = random_element(model, &mut rng, word_length);
        let r = leibniz_check(&d, model, &g, &h);
        max_residual = max_residual.max(r);
        if r != 0.0 {
            violations.push(json!([model.encode(&g), model.encode(&h), float(r)]));
        }
    }
    let count = violations.len();
    let value = json!({
        "samples": samples,
        "seed": s.seed,
        "violations": count,
        "max_residual": float(max_residual),
        "witnesses": violations,
    });
    let text = render(format, &value, || {
        output::pairs(&[
            ("samples", samples.to_string()),
            ("violations", count.to_string()),
            ("max_residual", float_text(max_residual)),
        ])
    });
    Ok(Outcome {
        text,
        status: if count == 0 { 0 } else { 4 },
    })
}

fn character(s: &Settings, path: &Path, u: &str, v: &str) -> Result<Outcome, CliError> {
    let loaded = s.load(path)?;
    let format = s.format(Format::Json)?;
    let model = &loaded.model;
    let mor = Morphism::new(parse_element(model, u)?, parse_element(model, v)?);
    let direct = character_from_potential(&loaded.potential, model, &mor);
    let d = Derivation::from_potential(loaded.potential.clone(), s.truncation(&loaded));
    let via = character_from_derivation(&d, model, &mor);
    let consistent = via.truncated || via.value == direct;
    let value = json!({
        "u": u,
        "v": v,
        "source": model.encode(&mor.source(model)),
        "target": model.encode(&mor.target(model)),
        "value": rational(&direct.re),
        "derivation_value": rational(&via.value.re),
        "truncated": via.truncated,
        "loop": mor.is_loop(model),
    });
    let text = render(format, &value, || {
        output::pairs(&[
            ("source", model.encode(&mor.source(model))),
            ("target", model.encode(&mor.target(model))),
            ("value", direct.re.to_string()),
            ("derivation_value", via.value.re.to_string()),
            ("truncated", via.truncated.to_string()),
        ])
    });
    if !consistent {
        eprintln!("conjlab: derivation and potential characters disagree");
    }
    Ok(Outcome {
        text,
        status: if consistent { 0 } else { 4 },
    })
}

fn quasi_inner(
    s: &Settings,
    path: &Path,
    samples: usize,
    word_length: usize,
) -> Result<Outcome, CliError> {
    let loaded = s.load(path)?;
    let format = s.format(Format::Json)?;
    let model = &loaded.model;
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    // (g^i, g^j) always commute
    let loops: Vec<Morphism<GroupElement>> = (0..samples)
        .map(|_| {
            let g = random_element(model, &mut rng, word_length);
            let i = rng.gen_range(-3i64..=3);
            let j = rng.gen_range(-3i64..=3);
            Morphism::new(model.power(&g, i), model.power(&g, j))
        })
        .collect();
    let report = quasi_inner_check(&loaded.potential, model, &loops)?;
    let witness = report.witness.as_ref().map(|(m, c)| {
        json!({"u": model.encode(&m.u), "v": model.encode(&m.v), "value": rational(&c.re)})
    });
    let value = json!({
        "holds": report.holds,
        "checked": report.checked,
        "seed": s.seed,
        "witness": witness,
    });
    let text = render(format, &value, || {
        let mut rows = vec![
            ("holds", report.holds.to_string()),
            ("checked", report.checked.to_string()),
        ];
        if let Some((m, c)) = &report.witness {
            rows.push(("witness", format!("{} -> {}", m.describe(model), c.re)));
        }
        output::pairs(&rows)
    });
    Ok(Outcome::ok(text))
}

fn stabilise(
    s: &Settings,
    path: &Path,
    base: &str,
    radius: u64,
    radii: &[u64],
    epsilon: Option<&str>,
) -> Result<Outcome, CliError> {
    let loaded = s.load(path)?;
    let format = s.format(Format::Json)?;
    let model = &loaded.model;
    let base_el = parse_element(model, base)?;
    let ball = explore_component(model, &base_el, radius, s.node_budget);
    let radii: Vec<u64> = if radii.is_empty() {
        (0..=radius).collect()
    } else {
        radii.to_vec()
    };
    let sup = stabilisation_probe(&loaded.potential, &ball, &radii);
    let mut value = json!({
        "base": base,
        "radius": radius,
        "vertices": ball.len(),
        "complete": ball.complete,
        "closed": ball.closed,
        "sup_beyond": sup.iter().map(|(r, v)| json!([r, rational(v)])).collect::<Vec<_>>(),
    });
    let jumps = match epsilon {
        Some(e) => {
            let eps = parse_rational(e)?;
            let j = edge_jump_probe(&loaded.potential, &ball, &eps);
            value["edge_jumps"] = json!({
                "epsilon": rational(&eps),
                "count": j.count,
                "witnesses": j
                    .witnesses
                    .iter()
                    .map(|(v, w, g)| json!([model.encode(v), model.encode(w), rational(g)]))
                    .collect::<Vec<_>>(),
            });
            Some(j.count)
        }
        None => None,
    };
    let text = render(format, &value, || {
        let mut t = vec![vec!["r".to_string(), "sup_beyond".to_string()]];
        t.extend(sup.iter().map(|(r, v)| vec![r.to_string(), v.to_string()]));
        let mut out = output::table(&t);
        if let Some(c) = jumps {
            out.push_str(&format!("edge_jumps {c}\n"));
        }
        out
    });
    Ok(Outcome {
        text,
        status: if ball.complete { 0 } else { 3 },
    })
}

fn bound_probe(s: &Settings, path: &Path, radius: u64, p: f64) -> Result<Outcome, CliError> {
    let loaded = s.load(path)?;
    let format = s.format(Format::Json)?;
    let model = &loaded.model;
    let d = Derivation::from_potential(loaded.potential.clone(), s.truncation(&loaded));
    let probe = g_boundedness_probe(&d, model, radius, p, s.node_budget)?;
    // ‖d(g)‖_p <= 2‖φ‖_p for every g
    let element_bound = match loaded.potential.closed_form() {
        None => Some(2.0 * loaded.potential.table_lp_norm(p)),
        Some(_) if p == 2.0 => {
            let cf = model.closed_form(loaded.potential.closed_form().expect("checked").kind())?;
            let t = loaded.potential.table_lp_norm(2.0);
            Some(2.0 * (t * t + cf.l2_norm() * cf.l2_norm()).sqrt())
        }
        Some(_) => None,
    };
    let g_bounded = element_bound.map(|b| probe.max_norm <= b + probe.tail_bound);
    let (exactness, truncation) = exactness_json(probe.exactness);
    let value = json!({
        "radius": radius,
        "p": float(p),
        "max_norm": float(probe.max_norm),
        "argmax": model.encode(&probe.argmax),
        "shells": probe.shells.iter().map(|(r, x)| json!([r, float(*x)])).collect::<Vec<_>>(),
        "exactness": exactness,
        "truncation": truncation,
        "tail_bound": float(probe.tail_bound),
        "element_bound": element_bound.map(float),
        "g_bounded": g_bounded,
    });
    Ok(Outcome::ok(render(format, &value, || {
        let mut t = vec![vec!["r".to_string(), "max_norm".to_string()]];
        t.extend(
            probe
                .shells
                .iter()
                .map(|(r, x)| vec![r.to_string(), float_text(*x)]),
        );
        let mut out = output::table(&t);
        out.push_str(&format!("argmax {}\n", model.encode(&probe.argmax)));
        out.push_str(&format!("tail_bound {}\n", float_text(probe.tail_bound)));
        if let Some(b) = element_bound {
            out.push_str(&format!("element_bound {}\n", float_text(b)));
        }
        out
    })))
}

fn appendix(s: &Settings, m_max: u64, n_max: u64) -> Result<Outcome, CliError> {
    if let Some(m) = &s.model {
        if parse_model(m)?.name() != "h3" {
            return Err(CliError::usage("`appendix` runs on h3 only"));
        }
    }
    let format = s.format(Format::Json)?;
    let report = run_appendix(m_max, n_max)?;
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|r| {
            json!({
                "m": r.m,
                "coefficients": r.coefficients.iter().map(|(n, c)| json!([n, rational(c)])).collect::<Vec<_>>(),
                "certified_norm": float(r.certified_norm),
                "lower_sum": rational(&r.lower_sum),
                "norm_lower_bound": float(r.norm_lower_bound),
                "ratio_lower_bound": float(r.ratio_lower_bound),
            })
        })
        .collect();
    let value = json!({
        "m_max": report.m_max,
        "n_max": report.n_max,
        "truncation": report.truncation,
        "rows": rows,
    });
    Ok(Outcome::ok(render(format, &value, || {
        let mut t = vec![vec![
            "m".to_string(),
            "certified_norm".to_string(),
            "norm_lower_bound".to_string(),
            "ratio_lower_bound".to_string(),
        ]];
        t.extend(report.rows.iter().map(|r| {
            vec![
                r.m.to_string(),
                float_text(r.certified_norm),
                float_text(r.norm_lower_bound),
                float_text(r.ratio_lower_bound),
            ]
        }));
        output::table(&t)
    })))
}

fn sequence(
    model: &GroupModel,
    conjugator: &str,
    tail: &str,
) -> Result<ConjugatorSequence<GroupElement>, CliError> {
    Ok(ConjugatorSequence {
        step: parse_word(model, conjugator)?,
        tail: parse_word(model, tail)?,
    })
}

fn limit(
    s: &Settings,
    path: &Path,
    conjugator: &str,
    tail: &str,
    q: u32,
    k_max: u64,
) -> Result<Outcome, CliError> {
    let loaded = s.load(path)?;
    let format = s.format(Format::Json)?;
    let model = &loaded.model;
    let seq = sequence(model, conjugator, tail)?;
    let report = run_limit_experiment(model, &loaded.potential, &seq, q, k_max, s.node_budget)?;
    let value = json!({
        "q": q,
        "potential_norm": float(report.potential_norm),
        "limit": float(report.limit),
        "limit_pow_sum": rational(&report.limit_pow_sum),
        "separation_index": report.separation_index,
        "settled": report.settled,
        "samples": report.samples.iter().map(|x| json!({
            "k": x.k,
            "norm": float(x.norm),
            "pow_sum": rational(&x.pow_sum),
            "separated": x.separated,
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(render(format, &value, || {
        let mut t = vec![vec![
            "k".to_string(),
            "norm".to_string(),
            "separated".to_string(),
        ]];
        t.extend(
            report
                .samples
                .iter()
                .map(|x| vec![x.k.to_string(), float_text(x.norm), x.separated.to_string()]),
        );
        let mut out = output::table(&t);
        out.push_str(&format!("limit {}\n", float_text(report.limit)));
        out
    })))
}

fn inverse_seq(
    s: &Settings,
    u: &str,
    conjugator: &str,
    tail: &str,
    k_max: u64,
) -> Result<Outcome, CliError> {
    let model = s.model()?;
    let format = s.format(Format::Json)?;
    let u_el = parse_element(&model, u)?;
    let seq = sequence(&model, conjugator, tail)?;
    let rows = run_inverse_sequence_check(&model, &u_el, &seq, k_max, s.diam_budget, s.node_budget);
    let value = json!({
        "u": u,
        "rows": rows.iter().map(|r| json!({
            "k": r.k,
            "forward": output::bounded(r.forward),
            "backward": output::bounded(r.backward),
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(render(format, &value, || {
        let mut t = vec![vec![
            "k".to_string(),
            "forward".to_string(),
            "backward".to_string(),
        ]];
        t.extend(rows.iter().map(|r| {
            vec![
                r.k.to_string(),
                r.forward.to_string(),
                r.backward.to_string(),
            ]
        }));
        output::table(&t)
    })))
}
