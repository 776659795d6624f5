use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;

use takiff_core::algebra::FreeWord;
use takiff_core::free::FreeFamily;
use takiff_core::scalar::{fmt_rational_strict, parse_rational};
use takiff_core::weight::{WeightFamily, Window};
use takiff_core::PolyHH;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    VerifyFree,
    Saturate,
    OmegaQuotient,
    VerifyWeight,
    Singular,
    VermaCheck,
    Scan,
    TwistCheck,
    IsoCheck,
    Intertwine,
    Nf,
}

impl Suite {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    fn parse(s: &str) -> Result<Self> {
        Format::from_str(s, true).map_err(|_| anyhow::anyhow!("format must be json or csv, got {s:?}"))
    }
}

enum Kind {
    Rational,
    RationalList,
    WeightFamily,
    Family,
    Count,
    Poly,
    Word,
    IsoKind,
    Pair,
    Bool,
}

/// Grid keys. Every value is a comma-separated list, except for the kinds whose
/// entries themselves contain commas or spaces, which use `;`.
const GRID_KEYS: &[(&str, Kind)] = &[
    ("family", Kind::Family),
    ("alpha", Kind::Rational),
    ("beta", Kind::Rational),
    ("lambda", Kind::Rational),
    ("a", Kind::Rational),
    ("b", Kind::Rational),
    ("beta1", Kind::RationalList),
    ("z", Kind::Rational),
    ("lambda2", Kind::Rational),
    ("kind", Kind::IsoKind),
    ("layer", Kind::Count),
    ("seed_poly", Kind::Poly),
    ("word", Kind::Word),
    ("to_family", Kind::WeightFamily),
    ("to_alpha", Kind::Rational),
    ("to_beta", Kind::Rational),
    ("to_lambda", Kind::Rational),
    ("to_a", Kind::Rational),
    ("to_b", Kind::Rational),
    ("to_beta1", Kind::RationalList),
];

/// Single-valued keys.
const SCALAR_KEYS: &[(&str, Kind)] = &[
    ("cap", Kind::Pair),
    ("hit", Kind::Pair),
    ("depths", Kind::Count),
    ("max_n", Kind::Count),
    ("expect_dim", Kind::Count),
    ("localized", Kind::Bool),
];

const RUN_KEYS: &[&str] = &["trials", "seed", "window", "format", "out"];

pub const DEFAULT_WINDOW: &str = "-5:5:5";
pub const DEFAULT_TRIALS: usize = 50;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub suite: Suite,
    /// Canonical text of every grid entry, keyed by parameter name.
    pub grids: BTreeMap<String, Vec<String>>,
    pub options: BTreeMap<String, String>,
    pub window: Window,
    /// False when the window is the default, which lets `verma-check` place
    /// its own window around the hit.
    pub window_given: bool,
    pub trials: usize,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
}

/// `key = value` lines; `#` starts a comment.
pub fn parse_pairs(text: &str) -> Result<Vec<(String, String)>> {
    let mut out: Vec<(String, String)> = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            bail!("line {}: expected `key = value`, got {line:?}", n + 1);
        };
        let k = k.trim().to_string();
        if out.iter().any(|(seen, _)| *seen == k) {
            bail!("line {}: duplicate key {k:?}", n + 1);
        }
        out.push((k, v.trim().to_string()));
    }
    Ok(out)
}

fn canonical(kind: &Kind, s: &str) -> Result<String> {
    let s = s.trim();
    Ok(match kind {
        Kind::Rational => fmt_rational_strict(&parse_rational(s)?),
        Kind::RationalList => s
            .split(',')
            .map(|c| parse_rational(c.trim()).map(|r| fmt_rational_strict(&r)))
            .collect::<Result<Vec<_>, _>>()?
            .join(","),
        Kind::WeightFamily => WeightFamily::parse(s)?.name().to_string(),
        Kind::Family => match WeightFamily::parse(s) {
            Ok(f) => f.name().to_string(),
            Err(_) => FreeFamily::parse(s).with_context(|| format!("unknown family {s:?}"))?.name().to_string(),
        },
        Kind::Count => s.parse::<u32>().with_context(|| format!("expected a nonnegative integer, got {s:?}"))?.to_string(),
        Kind::Poly => PolyHH::parse(s)?.to_text(),
        Kind::Word => {
            FreeWord::parse(s)?;
            s.to_string()
        }
        Kind::IsoKind => match s {
            "lambda" | "vm" => s.to_string(),
            _ => bail!("kind must be lambda or vm, got {s:?}"),
        },
        Kind::Pair => {
            let (x, y) = s.split_once(':').with_context(|| format!("expected X:Y, got {s:?}"))?;
            let x: i64 = x.trim().parse().with_context(|| format!("bad integer in {s:?}"))?;
            let y: u32 = y.trim().parse().with_context(|| format!("bad integer in {s:?}"))?;
            format!("{x}:{y}")
        }
        Kind::Bool => match s {
            "true" | "false" => s.to_string(),
            _ => bail!("expected true or false, got {s:?}"),
        },
    })
}

fn separator(kind: &Kind) -> char {
    match kind {
        Kind::RationalList | Kind::Poly | Kind::Word => ';',
        _ => ',',
    }
}

fn known_keys() -> String {
    let mut keys: Vec<&str> = GRID_KEYS.iter().chain(SCALAR_KEYS).map(|(k, _)| *k).collect();
    keys.extend(RUN_KEYS);
    keys.join(", ")
}

/// Command-line overrides, applied on top of the file.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub sets: Vec<String>,
    pub seed: Option<u64>,
    pub window: Option<String>,
    pub trials: Option<usize>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn build(suite: Suite, file_text: Option<&str>, ov: &Overrides) -> Result<Self> {
        let mut pairs = match file_text {
            Some(t) => parse_pairs(t)?,
            None => Vec::new(),
        };
        for s in &ov.sets {
            let (k, v) = s.split_once('=').with_context(|| format!("--set expects key=value, got {s:?}"))?;
            let (k, v) = (k.trim().to_string(), v.trim().to_string());
            pairs.retain(|(seen, _)| *seen != k);
            pairs.push((k, v));
        }
        let mut cfg = RunConfig {
            suite,
            grids: BTreeMap::new(),
            options: BTreeMap::new(),
            window: Window::parse(DEFAULT_WINDOW)?,
            window_given: false,
            trials: DEFAULT_TRIALS,
            seed: 0,
            format: Format::Json,
            out: None,
        };
        for (k, v) in pairs {
            let ctx = || format!("config key {k:?}");
            if let Some((_, kind)) = GRID_KEYS.iter().find(|(name, _)| *name == k) {
                let entries = v
                    .split(separator(kind))
                    .filter(|e| !e.trim().is_empty())
                    .map(|e| canonical(kind, e))
                    .collect::<Result<Vec<_>>>()
                    .with_context(ctx)?;
                if entries.is_empty() {
                    bail!("config key {k:?}: empty grid");
                }
                cfg.grids.insert(k, entries);
            } else if let Some((_, kind)) = SCALAR_KEYS.iter().find(|(name, _)| *name == k) {
                cfg.options.insert(k.clone(), canonical(kind, &v).with_context(ctx)?);
            } else {
                match k.as_str() {
                    "trials" => cfg.trials = v.parse().with_context(ctx)?,
                    "seed" => cfg.seed = v.parse().with_context(ctx)?,
                    "window" => {
                        cfg.window = Window::parse(&v).with_context(ctx)?;
                        cfg.window_given = true;
                    }
                    "format" => cfg.format = Format::parse(&v)?,
                    "out" => cfg.out = Some(PathBuf::from(v)),
                    _ => bail!("unknown config key {k:?}; known keys: {}", known_keys()),
                }
            }
        }
        if let Some(s) = ov.seed {
            cfg.seed = s;
        }
        if let Some(t) = ov.trials {
            cfg.trials = t;
        }
        if let Some(w) = &ov.window {
            cfg.window = Window::parse(w).context("--window")?;
            cfg.window_given = true;
        }
        if let Some(f) = ov.format {
            cfg.format = f;
        }
        if let Some(o) = &ov.out {
            cfg.out = Some(o.clone());
        }
        Ok(cfg)
    }

    /// The grid for `key`, or the single default value.
    pub fn grid(&self, key: &str, default: &str) -> Vec<String> {
        self.grids.get(key).cloned().unwrap_or_else(|| vec![default.to_string()])
    }

    pub fn option(&self, key: &str) -> Option<&str> {
        self.options.get(key).map(String::as_str)
    }
}
