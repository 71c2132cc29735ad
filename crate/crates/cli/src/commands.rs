use std::path::Path;

use serde::Serialize;

use heckeuler::coxeter::{
    catalog, is_finite_type, parse_coxeter, poincare_exact, poincare_truncated, CayleyBall,
    CoxeterMatrix, Extent,
};
use heckeuler::deodhar::{certify_with_retry, DeodharComplex, SignMap};
use heckeuler::euler::verify_theorem_a;
use heckeuler::exactmath::format_rational;
use heckeuler::hecke::{HeckeAlgebra, LinearCharacter};
use heckeuler::report::{
    poly_json, DeodharReport, EulerReport, HeckeReport, InfoReport, PoincareReport, SeriesCheck,
    VerifyReport,
};
use heckeuler::suite::{run_all, SuiteConfig};
use heckeuler::{Error, Result};

use crate::{Command, Format, Options};

/// Ball radius used for infinite groups when no `--max-length` is given.
const DEFAULT_INFINITE_RADIUS: usize = 6;

pub struct Output {
    pub text: String,
    pub passed: bool,
}

fn load_system(positional: Option<&str>, opts: &Options) -> Result<CoxeterMatrix> {
    let mut m = if let Some(input) = &opts.input {
        let trimmed = input.trim_start();
        if trimmed.starts_with('{') {
            parse_coxeter(input)?
        } else if Path::new(input).is_file() {
            let text = std::fs::read_to_string(input)
                .map_err(|e| Error::parse(input.clone(), e.to_string()))?;
            parse_coxeter(&text)?
        } else {
            catalog(input)?
        }
    } else if let Some(kind) = &opts.kind {
        catalog(kind)?
    } else if let Some(name) = positional {
        catalog(name)?
    } else {
        return Err(Error::Invalid(
            "no system given: pass a catalog name, --type or --input".into(),
        ));
    };
    if let Some(names) = &opts.names {
        let names: Vec<&str> = names.split(',').map(str::trim).collect();
        m = m.with_names(&names)?;
    }
    Ok(m)
}

fn sign_map(m: &CoxeterMatrix, opts: &Options) -> Result<SignMap> {
    match &opts.order {
        Some(text) => SignMap::from_names(m, text),
        None => Ok(SignMap::identity(m.rank())),
    }
}

/// The complete group when finite, otherwise the ball of radius `L`.
fn default_ball(m: &CoxeterMatrix, opts: &Options) -> Result<CayleyBall> {
    let extent = if is_finite_type(m, m.full_set()) && opts.max_length.is_none() {
        Extent::Complete
    } else {
        Extent::Radius(opts.max_length.unwrap_or(DEFAULT_INFINITE_RADIUS))
    };
    CayleyBall::build_with_cap(m, extent, opts.mem_cap)
}

fn render<T: Serialize>(opts: &Options, value: &T, text: impl FnOnce() -> String) -> String {
    match opts.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => text(),
    }
}

pub fn run(command: &Command, opts: &Options) -> Result<Output> {
    match command {
        Command::Info { system } => info(&load_system(system.as_deref(), opts)?, opts),
        Command::Poincare { system } => poincare(&load_system(system.as_deref(), opts)?, opts),
        Command::Hecke {
            first,
            second,
            third,
        } => {
            let (system, a, b) = match third {
                Some(b) => (Some(first.as_str()), second, b),
                None => (None, first, second),
            };
            hecke(&load_system(system, opts)?, a, b, opts)
        }
        Command::Deodhar { system } => deodhar(&load_system(system.as_deref(), opts)?, opts),
        Command::Euler { system } => euler(&load_system(system.as_deref(), opts)?, opts),
        Command::Verify { system } => verify(
            &load_system(system.as_deref(), opts)?,
            system.as_deref(),
            opts,
        ),
    }
}

fn info(m: &CoxeterMatrix, opts: &Options) -> Result<Output> {
    let report = InfoReport::new(m);
    Ok(Output {
        text: render(opts, &report, || report.text()),
        passed: true,
    })
}

fn poincare(m: &CoxeterMatrix, opts: &Options) -> Result<Output> {
    let p = poincare_exact(m, m.full_set());
    let series = match opts.max_length {
        Some(order) => {
            let ball = CayleyBall::build_with_cap(m, Extent::Radius(order), opts.mem_cap)?;
            let counts = poincare_truncated(&ball, order)?;
            let series = p.series(order)?;
            let counts: Vec<String> = (0..=order).map(|k| counts.coeff(k).to_string()).collect();
            let series: Vec<String> = series.iter().map(format_rational).collect();
            Some(SeriesCheck {
                order,
                matches: series == counts,
                series,
                counts,
            })
        }
        None => None,
    };
    let passed = series.as_ref().is_none_or(|s| s.matches);
    let report = PoincareReport::new(&p, series);
    Ok(Output {
        text: render(opts, &report, || report.text()),
        passed,
    })
}

fn hecke(m: &CoxeterMatrix, a: &str, b: &str, opts: &Options) -> Result<Output> {
    let ball = default_ball(m, opts)?;
    let alg = HeckeAlgebra::new(&ball);
    let x = alg.parse_element(a)?;
    let y = alg.parse_element(b)?;
    let prod = alg.mul(&x, &y)?;
    let report = HeckeReport {
        a: alg.format_element(&x),
        b: alg.format_element(&y),
        product: alg.format_element(&prod),
        augmentation: poly_json(&alg.character(LinearCharacter::AugmentationQ, &prod)),
        sign: poly_json(&alg.character(LinearCharacter::Sign, &prod)),
        trace: poly_json(&alg.canonical_trace(&prod)),
    };
    Ok(Output {
        text: render(opts, &report, || report.text()),
        passed: true,
    })
}

fn deodhar(m: &CoxeterMatrix, opts: &Options) -> Result<Output> {
    let sign = sign_map(m, opts)?;
    let report = if is_finite_type(m, m.full_set()) {
        if opts.max_length.is_some() || opts.coradius.is_some() {
            return Err(Error::Invalid(
                "finite Coxeter group: truncation is not available, use complete mode".into(),
            ));
        }
        let ball = CayleyBall::build_with_cap(m, Extent::Complete, opts.mem_cap)?;
        let h = DeodharComplex::build(&ball, &sign, Extent::Complete)?.homology()?;
        DeodharReport::from_homology(&h)
    } else {
        let l = opts.max_length.ok_or_else(|| {
            Error::Invalid("infinite Coxeter group: pass --max-length (and --coradius)".into())
        })?;
        let lp = opts.coradius.unwrap_or(l + 2);
        if lp < l {
            return Err(Error::Invalid(format!(
                "coradius {lp} is smaller than radius {l}"
            )));
        }
        let max_lp = opts.max_coradius.unwrap_or(lp).max(lp);
        let r = certify_with_retry(m, &sign, l, lp, max_lp, opts.mem_cap)?;
        DeodharReport::from_acyclicity(&r)
    };
    Ok(Output {
        text: render(opts, &report, || report.text()),
        passed: report.certified,
    })
}

fn euler(m: &CoxeterMatrix, opts: &Options) -> Result<Output> {
    let r = verify_theorem_a(m)?;
    let report = EulerReport::new(m, &r, &opts.at);
    Ok(Output {
        text: render(opts, &report, || report.text()),
        passed: r.ok(),
    })
}

fn verify(m: &CoxeterMatrix, positional: Option<&str>, opts: &Options) -> Result<Output> {
    let ball = default_ball(m, opts)?;
    let sign = sign_map(m, opts)?;
    let cfg = SuiteConfig {
        seed: opts.seed,
        samples: opts.samples,
        ..SuiteConfig::default()
    };
    let suites = run_all(&ball, &sign, &cfg)?;
    let name = opts
        .input
        .clone()
        .or_else(|| opts.kind.clone())
        .or_else(|| positional.map(str::to_string))
        .unwrap_or_else(|| m.names().join(","));
    let report = VerifyReport::new(name, opts.seed, suites);
    Ok(Output {
        text: render(opts, &report, || report.text()),
        passed: report.passed,
    })
}
