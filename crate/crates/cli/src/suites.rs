use anyhow::{anyhow, bail, Result};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use takiff_core::algebra::{normal_form, FreeWord};
use takiff_core::free::*;
use takiff_core::functors::*;
use takiff_core::scalar::{fmt_rational_strict, parse_rational};
use takiff_core::weight::*;
use takiff_core::{PolyHH, Rational};

use crate::config::{RunConfig, Suite};

pub type Params = Vec<(String, String)>;

#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub params: Params,
    pub pass: bool,
    pub result: Map<String, Value>,
}

fn q(r: &Rational) -> Value {
    Value::String(fmt_rational_strict(r))
}

fn get<'a>(p: &'a Params, key: &str) -> &'a str {
    p.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str()).unwrap_or_else(|| panic!("missing parameter {key}"))
}

fn rational(p: &Params, key: &str) -> Result<Rational> {
    Ok(parse_rational(get(p, key))?)
}

fn coeffs(p: &Params, key: &str) -> Result<Vec<Rational>> {
    get(p, key).split(',').map(|c| Ok(parse_rational(c)?)).collect()
}

fn pair(s: &str) -> (i64, u32) {
    let (x, y) = s.split_once(':').expect("validated");
    (x.parse().expect("validated"), y.parse().expect("validated"))
}

/// Cartesian product of the grids for `keys`, first key varying slowest.
fn product(cfg: &RunConfig, keys: &[(&str, &str)], prefix: Params) -> Vec<Params> {
    let mut out = vec![prefix];
    for &(key, default) in keys {
        let values = cfg.grid(key, default);
        out = out
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut p = p.clone();
                    p.push((key.to_string(), v.clone()));
                    p
                })
            })
            .collect();
    }
    out
}

const WEIGHT_MN: &[(&str, &str)] = &[("alpha", "0/1"), ("beta", "1/1"), ("lambda", "1/1"), ("a", "0/1"), ("b", "0/1")];
const WEIGHT_V: &[(&str, &str)] = &[("alpha", "0/1"), ("beta", "1/1"), ("lambda", "1/1"), ("a", "0/1"), ("beta1", "0/1")];
const FREE_GT: &[(&str, &str)] = &[("lambda", "1/1"), ("a", "0/1"), ("b", "0/1")];
const FREE_O: &[(&str, &str)] = &[("lambda", "1/1"), ("b", "0/1"), ("beta1", "0/1")];

/// Families from the `family` grid, each followed by the product of its own parameters.
fn family_cases(cfg: &RunConfig, default: &str, extra: &[(&str, &str)], per_family: fn(&str) -> &'static [(&'static str, &'static str)]) -> Vec<Params> {
    cfg.grid("family", default)
        .into_iter()
        .flat_map(|f| {
            let mut keys: Vec<(&str, &str)> = per_family(&f).to_vec();
            keys.extend_from_slice(extra);
            product(cfg, &keys, vec![("family".to_string(), f)])
        })
        .collect()
}

fn weight_keys(family: &str) -> &'static [(&'static str, &'static str)] {
    if family == "V" {
        WEIGHT_V
    } else {
        WEIGHT_MN
    }
}

fn free_keys(family: &str) -> &'static [(&'static str, &'static str)] {
    if family == "Omega" {
        FREE_O
    } else {
        FREE_GT
    }
}

fn weight_spec(p: &Params) -> Result<WeightModuleSpec> {
    let family = WeightFamily::parse(get(p, "family")).map_err(|_| anyhow!("{} is not a weight family", get(p, "family")))?;
    weight_spec_from(family, p, "")
}

/// Weight module from the parameters `prefix + name`.
fn weight_spec_from(family: WeightFamily, p: &Params, prefix: &str) -> Result<WeightModuleSpec> {
    let r = |k: &str| rational(p, &format!("{prefix}{k}"));
    Ok(match family {
        WeightFamily::M => make_m(r("alpha")?, r("beta")?, r("lambda")?, r("a")?, r("b")?)?,
        WeightFamily::N => make_n(r("alpha")?, r("beta")?, r("lambda")?, r("a")?, r("b")?)?,
        WeightFamily::V => make_v(r("alpha")?, r("beta")?, r("lambda")?, r("a")?, coeffs(p, &format!("{prefix}beta1"))?)?,
    })
}

fn free_spec(p: &Params) -> Result<FreeModuleSpec> {
    let family = FreeFamily::parse(get(p, "family")).map_err(|_| anyhow!("{} is not a free family", get(p, "family")))?;
    Ok(match family {
        FreeFamily::Gamma => make_gamma(rational(p, "lambda")?, rational(p, "a")?, rational(p, "b")?)?,
        FreeFamily::Theta => make_theta_mod(rational(p, "lambda")?, rational(p, "a")?, rational(p, "b")?)?,
        FreeFamily::Omega => make_omega(rational(p, "lambda")?, rational(p, "b")?, coeffs(p, "beta1")?)?,
    })
}

fn probe_json(p: &Option<Probe>) -> Value {
    match p {
        Some(p) => json!({"generator": p.generator.name(), "k": p.k, "s": p.s}),
        None => Value::Null,
    }
}

fn iso_json(r: &IsoCheckResult) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("intertwines".into(), json!(r.intertwines));
    m.insert("rank".into(), json!(r.rank));
    m.insert("dim".into(), json!(r.dim));
    m.insert("failing_probe".into(), probe_json(&r.failing_probe));
    m.insert("window".into(), json!(r.window.to_text()));
    m
}

type Outcome = Result<(bool, Map<String, Value>)>;

fn obj(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("json! object literal"),
    }
}

fn verify_free(cfg: &RunConfig, p: &Params) -> Outcome {
    let spec = free_spec(p)?;
    let r = verify_axioms(&spec, cfg.trials, cfg.seed);
    let pairs: Vec<Value> = r.pairs.iter().map(|x| json!({"x": x.x.name(), "y": x.y.name(), "pass": x.pass})).collect();
    Ok((r.all_pass(), obj(json!({"pairs": pairs, "seed": r.seed, "trials": r.trials}))))
}

fn saturate(cfg: &RunConfig, p: &Params) -> Outcome {
    let spec = free_spec(p)?;
    let seed = PolyHH::parse(get(p, "seed_poly"))?;
    let cap = pair(cfg.option("cap").unwrap_or("8:8"));
    let cap = (u32::try_from(cap.0).map_err(|_| anyhow!("cap must be nonnegative"))?, cap.1);
    let r = submodule_saturate(&spec, &seed, cap);
    let simple = simplicity_criterion_free(&spec);
    // a proper submodule below the cap certifies reducibility; reaching 1 is consistent with simplicity
    let pass = if simple { r.contains_one || seed.is_zero() } else { !r.contains_one };
    Ok((
        pass,
        obj(json!({
            "predicted_simple": simple,
            "contains_one": r.contains_one,
            "dim": r.basis.len(),
            "discarded": r.discarded,
            "cap": format!("{}:{}", cap.0, cap.1),
        })),
    ))
}

fn omega_quotient(cfg: &RunConfig, p: &Params) -> Outcome {
    let spec = make_omega(rational(p, "lambda")?, Rational::default(), coeffs(p, "beta1")?)?;
    let layer: u32 = get(p, "layer").parse()?;
    let max_n: u32 = cfg.option("max_n").map_or(Ok(8), str::parse)?;
    let r = check_omega_layer(&spec, layer, max_n)?;
    let failing = r.failing_probe.map_or(Value::Null, |(g, n)| json!({"generator": g.name(), "n": n}));
    Ok((
        r.pass,
        obj(json!({"lambda_delta": q(&r.lambda_delta), "a_delta": q(&r.a_delta), "max_n": max_n, "failing_probe": failing})),
    ))
}

fn verify_weight(cfg: &RunConfig, p: &Params) -> Outcome {
    let spec = weight_spec(p)?;
    let dual = dual_consistency(&spec, &cfg.window, cfg.trials, cfg.seed);
    let brackets = weight_bracket_check(&spec, &cfg.window);
    let first = brackets.first().map_or(Value::Null, |f| json!({"x": f.x.name(), "y": f.y.name(), "k": f.k, "s": f.s}));
    Ok((
        dual.pass() && brackets.is_empty(),
        obj(json!({
            "dual_failures": dual.failures.len(),
            "bracket_failures": brackets.len(),
            "first_bracket_failure": first,
            "seed": dual.seed,
            "trials": dual.trials,
            "window": cfg.window.to_text(),
        })),
    ))
}

fn singular(cfg: &RunConfig, p: &Params) -> Outcome {
    let spec = weight_spec(p)?;
    let rep = singular_vectors(&spec, &cfg.window);
    let predicted = predicted_singular(&spec, &cfg.window);
    let agrees = rep.hit_set() == predicted;
    let hits: Vec<Value> = rep
        .hits
        .iter()
        .map(|h| json!({"k": h.k, "killed_by": h.killed_by.name(), "vector": h.vector.to_text(), "h_eigenvalue": q(&h.h_eigenvalue)}))
        .collect();
    let predicted: Vec<Value> = predicted.iter().map(|(k, pair)| json!({"k": k, "killed_by": pair.name()})).collect();
    Ok((agrees, obj(json!({"hits": hits, "predicted": predicted, "agrees": agrees, "window": cfg.window.to_text()}))))
}

fn witness_json(s: &Simplicity) -> (Value, Value, Value) {
    match s.witness {
        None => (Value::Null, Value::Null, Value::Null),
        Some(w) => {
            let kind = match w.kind {
                WitnessKind::Singular(pair) => pair.name().to_string(),
                WitnessKind::Layer => "layer".to_string(),
            };
            (json!(w.k), json!(w.s), json!(kind))
        }
    }
}

fn scan(cfg: &RunConfig, p: &Params) -> Outcome {
    let spec = weight_spec(p)?;
    let w = &cfg.window;
    let crit = simplicity_criterion_weight(&spec);
    let hits = singular_vectors(&spec, w).hit_set();
    let agrees = hits == predicted_singular(&spec, w)
        && match crit.witness {
            None => hits.is_empty(),
            Some(Witness { k, s, kind: WitnessKind::Singular(pair) }) => w.contains(k, s) && hits.contains(&(k, pair)),
            Some(Witness { kind: WitnessKind::Layer, .. }) => hits.is_empty() && layer_certificate(&spec, w),
        };
    let (wk, ws, kind) = witness_json(&crit);
    Ok((
        agrees,
        obj(json!({"simple": crit.simple, "witness_k": wk, "witness_s": ws, "witness_kind": kind, "hits": hits.len(), "agrees": agrees})),
    ))
}

fn verma(cfg: &RunConfig, p: &Params) -> Outcome {
    let spec = weight_spec(p)?;
    let depths = cfg.option("depths").map_or(Ok(5), str::parse::<usize>)?;
    let (k, s, pair) = match cfg.option("hit") {
        Some(h) => {
            let (k, s) = pair(h);
            (k, s, None)
        }
        None => match simplicity_criterion_weight(&spec).witness {
            Some(Witness { k, s, kind: WitnessKind::Singular(pair) }) => (k, s, Some(pair)),
            _ => bail!("{spec} has no singular witness; pass hit = K:S"),
        },
    };
    let window = if cfg.window_given {
        cfg.window
    } else {
        let span = depths as i64;
        let lowering = pair.map_or_else(
            || spec.act_basis(takiff_core::algebra::Generator::F, k, s).is_zero(),
            |p| p == KillingPair::Lowering,
        );
        let (lo, hi) = if lowering { (k - span, k) } else { (k, k + span) };
        Window::new(lo, hi, depths as u32 + 1)?
    };
    let r = verma_check(&spec, (k, s), &window, depths)?;
    let qw = r.quotient_witness.map_or(Value::Null, |(k, s)| json!({"k": k, "s": s}));
    Ok((
        r.pass(),
        obj(json!({
            "k": r.k,
            "s": s,
            "killed_by": r.killed_by.name(),
            "dims": r.dims,
            "expected": r.expected,
            "character_matches": r.character_matches(),
            "quotient_witness": qw,
            "window": window.to_text(),
        })),
    ))
}

fn twist(cfg: &RunConfig, p: &Params) -> Outcome {
    let spec = weight_spec(p)?;
    let z = rational(p, "z")?;
    let r = check_twist_iso(&z, &spec, &cfg.window)?;
    let mut m = iso_json(&r);
    m.insert("target_alpha".into(), q(&twist_target(&z, &spec).alpha));
    Ok((r.is_iso(), m))
}

fn iso(cfg: &RunConfig, p: &Params) -> Outcome {
    let spec = weight_spec(p)?;
    match get(p, "kind") {
        "lambda" => {
            let r = lambda_rescale_iso(&spec, &rational(p, "lambda2")?, &cfg.window)?;
            Ok((r.is_iso(), iso_json(&r)))
        }
        _ => {
            let r = vm_iso_check(&spec, &cfg.window)?;
            let mut m = iso_json(&r.iso);
            m.insert("pinned_b".into(), q(&r.target.b));
            m.insert("p_value".into(), q(&r.p_value));
            m.insert("p_matches_b".into(), json!(r.p_matches_b));
            Ok((r.pass(), m))
        }
    }
}

fn intertwine(cfg: &RunConfig, p: &Params) -> Outcome {
    let a = weight_spec(p)?;
    let to = WeightFamily::parse(get(p, "to_family"))?;
    let b = weight_spec_from(to, p, "to_")?;
    let maps = intertwiner_search(&a, &b, &cfg.window);
    let checks: Vec<IsoCheckResult> = maps.iter().map(|f| check_window_map(&a, &b, f)).collect();
    let expected = cfg.option("expect_dim").map(str::parse::<usize>).transpose()?;
    let pass = checks.iter().all(|c| c.intertwines) && expected.map_or(true, |d| d == maps.len());
    let ranks: Vec<usize> = checks.iter().map(|c| c.rank).collect();
    Ok((
        pass,
        obj(json!({
            "dimension": maps.len(),
            "expected_dimension": expected,
            "ranks": ranks,
            "all_intertwine": checks.iter().all(|c| c.intertwines),
            "codomain": b.to_string(),
            "window": cfg.window.to_text(),
        })),
    ))
}

fn nf(cfg: &RunConfig, p: &Params) -> Outcome {
    let w = FreeWord::parse(get(p, "word"))?;
    let localized = cfg.option("localized").map_or(w.uses_inverse(), |s| s == "true");
    let x = normal_form(&w, localized)?;
    let again = normal_form(&x.to_free_word(), localized)?;
    Ok((again == x, obj(json!({"normal_form": x.to_text(), "terms": x.terms().count(), "localized": localized}))))
}

/// Parameter tuples of the suite, in config order.
pub fn cases(cfg: &RunConfig) -> Vec<Params> {
    match cfg.suite {
        Suite::VerifyFree => family_cases(cfg, "Gamma", &[], free_keys),
        Suite::Saturate => family_cases(cfg, "Omega", &[("seed_poly", "1*hb^1")], free_keys),
        Suite::OmegaQuotient => product(cfg, &[("lambda", "1/1"), ("beta1", "0/1"), ("layer", "0")], Vec::new()),
        Suite::VerifyWeight | Suite::Singular | Suite::VermaCheck | Suite::Scan => family_cases(cfg, "M", &[], weight_keys),
        Suite::TwistCheck => family_cases(cfg, "M", &[("z", "1/1")], weight_keys),
        Suite::IsoCheck => {
            let kinds = cfg.grid("kind", "lambda");
            kinds
                .iter()
                .flat_map(|k| {
                    let prefix = vec![("kind".to_string(), k.clone())];
                    if k == "vm" {
                        product(cfg, &[("family", "V")], prefix)
                            .into_iter()
                            .flat_map(|p| product(cfg, WEIGHT_V, p))
                            .collect::<Vec<_>>()
                    } else {
                        let mut keys = WEIGHT_MN.to_vec();
                        keys.push(("lambda2", "2/1"));
                        product(cfg, &[("family", "M")], prefix).into_iter().flat_map(|p| product(cfg, &keys, p)).collect()
                    }
                })
                .collect()
        }
        Suite::Intertwine => family_cases(cfg, "M", &[], weight_keys)
            .into_iter()
            .flat_map(|p| {
                let own = get(&p, "family").to_string();
                cfg.grid("to_family", &own).into_iter().flat_map(move |tf| {
                    let mut p = p.clone();
                    p.push(("to_family".into(), tf.clone()));
                    // each codomain parameter defaults to the domain value
                    let keys: Vec<(String, String)> = weight_keys(&tf)
                        .iter()
                        .map(|(k, d)| {
                            let own_value = p.iter().find(|(pk, _)| pk == k).map_or(d.to_string(), |(_, v)| v.clone());
                            (format!("to_{k}"), own_value)
                        })
                        .collect();
                    let keys: Vec<(&str, &str)> = keys.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect();
                    product(cfg, &keys, p)
                })
            })
            .collect(),
        Suite::Nf => product(cfg, &[("word", "e*f")], Vec::new()),
    }
}

fn run_case(cfg: &RunConfig, p: &Params) -> Outcome {
    match cfg.suite {
        Suite::VerifyFree => verify_free(cfg, p),
        Suite::Saturate => saturate(cfg, p),
        Suite::OmegaQuotient => omega_quotient(cfg, p),
        Suite::VerifyWeight => verify_weight(cfg, p),
        Suite::Singular => singular(cfg, p),
        Suite::VermaCheck => verma(cfg, p),
        Suite::Scan => scan(cfg, p),
        Suite::TwistCheck => twist(cfg, p),
        Suite::IsoCheck => iso(cfg, p),
        Suite::Intertwine => intertwine(cfg, p),
        Suite::Nf => nf(cfg, p),
    }
}

/// Runs every case, in parallel, and returns them in config order. A case that
/// cannot be set up (for instance `lambda = 0`) is a failing case with an
/// `error` field.
pub fn run_suite(cfg: &RunConfig) -> Vec<Case> {
    cases(cfg)
        .into_par_iter()
        .map(|params| match run_case(cfg, &params) {
            Ok((pass, result)) => Case { params, pass, result },
            Err(e) => {
                let mut result = Map::new();
                result.insert("error".into(), Value::String(format!("{e:#}")));
                Case { params, pass: false, result }
            }
        })
        .collect()
}
