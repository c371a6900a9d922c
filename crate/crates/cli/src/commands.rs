use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use exg_core::estimation::fit;
use exg_core::{
    bootstrap_p, exgauss_pdf, histogram, pars_to_stats, sample_exg, trim, zalp_exgauss,
    ExGaussParams, ExgError, GofConfig, Method, RngStream, SearchConfig,
};

use crate::args::{
    Command, FitArgs, Format, GofArgs, MethodArg, ParamArgs, PlotdataArgs, QuantileArgs,
    SampleArgs, SearchOpts, TrimArgs,
};
use crate::input::read_sample;
use crate::report::{
    FitPayload, Inputs, Outcome, Payload, QuantilePayload, Report, Timing, SCHEMA_VERSION,
};
use crate::{threads_from_env, write_output, CliError};

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Fit(a) => cmd_fit(a),
        Command::Quantile(a) => cmd_quantile(a),
        Command::Sample(a) => cmd_sample(a),
        Command::Gof(a) => cmd_gof(a),
        Command::Trim(a) => cmd_trim(a),
        Command::Plotdata(a) => cmd_plotdata(a),
    }
}

/// Data-shaped failures are input errors; everything else is numerical.
fn classify(e: ExgError) -> CliError {
    match e {
        ExgError::EmptySample
        | ExgError::InsufficientData { .. }
        | ExgError::NonFinite { .. }
        | ExgError::ZeroVariance
        | ExgError::DegenerateHistogram(_) => CliError::Input(e.to_string()),
        other => CliError::Numerical(other),
    }
}

pub fn error_kind(e: &ExgError) -> &'static str {
    match e {
        ExgError::InvalidParams { .. } => "invalid_params",
        ExgError::SkewnessOutOfRange { .. } => "skewness_out_of_range",
        ExgError::Domain { .. } => "domain",
        ExgError::EmptySample => "empty_sample",
        ExgError::InsufficientData { .. } => "insufficient_data",
        ExgError::NonFinite { .. } => "non_finite",
        ExgError::ZeroVariance => "zero_variance",
        ExgError::LengthMismatch { .. } => "length_mismatch",
        ExgError::DegenerateHistogram(_) => "degenerate_histogram",
        ExgError::RankDeficient { .. } => "rank_deficient",
        ExgError::NoSignChange { .. } => "no_sign_change",
        ExgError::SearchDiverged { .. } => "search_diverged",
        ExgError::UnsupportedMethod(_) => "unsupported_method",
        ExgError::BootstrapAborted { .. } => "bootstrap_aborted",
    }
}

fn search_config(opts: &SearchOpts) -> Result<SearchConfig, CliError> {
    if !(opts.grad_tol > 0.0 && opts.grad_tol.is_finite()) {
        return Err(CliError::Usage(format!(
            "--grad-tol must be positive, got {}",
            opts.grad_tol
        )));
    }
    Ok(SearchConfig {
        grad_tol: opts.grad_tol,
        max_iter: opts.max_iter,
        method: opts.search.into(),
        ..SearchConfig::default()
    })
}

fn check_bins(bins: Option<usize>) -> Result<(), CliError> {
    if bins == Some(0) {
        return Err(CliError::Usage("--bins must be at least 1".into()));
    }
    Ok(())
}

fn params(p: &ParamArgs) -> Result<ExGaussParams, CliError> {
    ExGaussParams::new(p.mu, p.sigma, p.tau).map_err(|e| CliError::Usage(e.to_string()))
}

fn methods(list: &[MethodArg]) -> Vec<Method> {
    let mut out: Vec<Method> = Vec::new();
    for &m in list {
        let m = m.into();
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

fn timing(start: Instant, disabled: bool) -> Option<Timing> {
    (!disabled).then(|| Timing {
        wall_seconds: start.elapsed().as_secs_f64(),
    })
}

fn report_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

fn search_name(opts: &SearchOpts) -> String {
    match opts.search {
        crate::args::SearchArg::Bfgs => "bfgs".into(),
        crate::args::SearchArg::Steepest => "steepest".into(),
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn cmd_fit(a: FitArgs) -> Result<(), CliError> {
    let start = Instant::now();
    check_bins(a.bins)?;
    let cfg = search_config(&a.search)?;
    let s = read_sample(&a.file)?;
    let methods = methods(&a.method);
    let mut results = BTreeMap::new();
    for &m in &methods {
        let outcome = match fit(&s, m, a.bins, &cfg) {
            Ok(r) => Outcome::Ok(Payload::Fit(FitPayload {
                stats: pars_to_stats(&r.params),
                fit: r,
            })),
            Err(e) => Outcome::Failed {
                kind: error_kind(&e).into(),
                error: e.to_string(),
            },
        };
        results.insert(m.name().to_string(), outcome);
    }
    let report = Report {
        schema_version: SCHEMA_VERSION.into(),
        command: "fit".into(),
        inputs: Inputs {
            file: Some(a.file.display().to_string()),
            n: Some(s.len()),
            methods: Some(methods.clone()),
            n_bins: a.bins,
            grad_tol: Some(cfg.grad_tol),
            search: Some(search_name(&a.search)),
            ..Inputs::default()
        },
        results,
        timing: timing(start, a.no_timing),
    };
    let text = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => report_json(&report),
        Format::Tsv => {
            let mut t = String::from(
                "method\tstatus\tmu\tsigma\ttau\tm\ts\tt\tobjective\titerations\tconverged\tn_bins\terror\n",
            );
            for m in &methods {
                match &report.results[m.name()] {
                    Outcome::Ok(Payload::Fit(f)) => {
                        let p = &f.fit.params;
                        let _ = writeln!(
                            t,
                            "{}\tok\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t",
                            m,
                            p.mu(),
                            p.sigma(),
                            p.tau(),
                            f.stats.m,
                            f.stats.s,
                            f.stats.t,
                            fmt_opt(f.fit.objective),
                            f.fit.iterations,
                            f.fit.converged,
                            f.fit.n_bins.map(|n| n.to_string()).unwrap_or_default(),
                        );
                    }
                    Outcome::Failed { error, .. } => {
                        let _ = writeln!(t, "{m}\tfailed\t\t\t\t\t\t\t\t\t\t\t{error}");
                    }
                    Outcome::Ok(_) => unreachable!("fit results hold fit payloads"),
                }
            }
            t
        }
    };
    write_output(a.output.out.as_deref(), &text)
}

fn cmd_quantile(a: QuantileArgs) -> Result<(), CliError> {
    let start = Instant::now();
    let p = params(&a.params)?;
    if !(a.alpha > 0.0 && a.alpha < 1.0) {
        return Err(CliError::Usage(format!(
            "--alpha must lie in (0, 1), got {}",
            a.alpha
        )));
    }
    let z = zalp_exgauss(a.alpha, &p).map_err(classify)?;
    let text = match a.output.format.unwrap_or(Format::Tsv) {
        Format::Tsv => format!("{z}\n"),
        Format::Json => {
            let mut results = BTreeMap::new();
            results.insert(
                "quantile".to_string(),
                Outcome::Ok(Payload::Quantile(QuantilePayload {
                    alpha: a.alpha,
                    z,
                    params: p,
                    stats: pars_to_stats(&p),
                })),
            );
            report_json(&Report {
                schema_version: SCHEMA_VERSION.into(),
                command: "quantile".into(),
                inputs: Inputs {
                    params: Some(p),
                    alpha: Some(a.alpha),
                    ..Inputs::default()
                },
                results,
                timing: timing(start, a.no_timing),
            })
        }
    };
    write_output(a.output.out.as_deref(), &text)
}

fn cmd_sample(a: SampleArgs) -> Result<(), CliError> {
    if a.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let p = params(&a.params)?;
    let values = sample_exg(&mut RngStream::new(a.seed), &p, a.n);
    let mut text = String::with_capacity(20 * a.n);
    for v in values {
        let _ = writeln!(text, "{v}");
    }
    write_output(a.out.as_deref(), &text)
}

fn cmd_gof(a: GofArgs) -> Result<(), CliError> {
    let start = Instant::now();
    check_bins(a.bins)?;
    if a.replicates == 0 {
        return Err(CliError::Usage("--replicates must be at least 1".into()));
    }
    let method: Method = a.method.into();
    if method == Method::Stat {
        return Err(CliError::Usage("gof supports minsqr and maxlkhd".into()));
    }
    let search = search_config(&a.search)?;
    let threads = threads_from_env()?;
    let s = read_sample(&a.file)?;
    let cfg = GofConfig {
        replicates: a.replicates,
        seed: a.seed,
        n_bins: a.bins,
        threads,
        search,
        ..GofConfig::default()
    };
    let r = bootstrap_p(&s, method, &cfg).map_err(classify)?;
    let text = match a.output.format.unwrap_or(Format::Json) {
        Format::Tsv => {
            let p = r.fitted();
            format!(
                "method\t{}\nks\t{}\np\t{}\nreplicates\t{}\nks_mean\t{}\nks_sd\t{}\nseed\t{}\nmu\t{}\nsigma\t{}\ntau\t{}\n",
                r.method,
                r.ks,
                r.p,
                r.replicates,
                r.ks_mean,
                r.ks_sd,
                r.seed,
                p.mu(),
                p.sigma(),
                p.tau()
            )
        }
        Format::Json => {
            let mut results = BTreeMap::new();
            results.insert(method.name().to_string(), Outcome::Ok(Payload::Gof(r)));
            report_json(&Report {
                schema_version: SCHEMA_VERSION.into(),
                command: "gof".into(),
                inputs: Inputs {
                    file: Some(a.file.display().to_string()),
                    n: Some(s.len()),
                    methods: Some(vec![method]),
                    n_bins: a.bins,
                    grad_tol: Some(search.grad_tol),
                    search: Some(search_name(&a.search)),
                    replicates: Some(a.replicates),
                    seed: Some(a.seed),
                    ..Inputs::default()
                },
                results,
                timing: timing(start, a.no_timing),
            })
        }
    };
    write_output(a.output.out.as_deref(), &text)
}

fn cmd_trim(a: TrimArgs) -> Result<(), CliError> {
    let start = Instant::now();
    if !(a.tail > 0.0 && a.tail < 0.5) {
        return Err(CliError::Usage(format!(
            "--tail must lie in (0, 0.5), got {}",
            a.tail
        )));
    }
    let cfg = search_config(&a.search)?;
    let s = read_sample(&a.file)?;
    let r = trim(&s, a.tail, !a.no_left, &cfg).map_err(classify)?;
    if let Some(path) = &a.trimmed {
        let mut text = String::new();
        for v in r.trimmed.values() {
            let _ = writeln!(text, "{v}");
        }
        write_output(Some(path), &text)?;
    }
    let text = match a.output.format.unwrap_or(Format::Json) {
        Format::Tsv => format!(
            "lo_cut\t{}\nhi_cut\t{}\nn_removed_left\t{}\nn_removed_right\t{}\nn_total\t{}\n",
            fmt_opt(r.lo_cut),
            r.hi_cut,
            r.n_removed_left,
            r.n_removed_right,
            r.n_total
        ),
        Format::Json => {
            let mut results = BTreeMap::new();
            results.insert(
                Method::MaxLkhd.name().to_string(),
                Outcome::Ok(Payload::Trim((&r).into())),
            );
            report_json(&Report {
                schema_version: SCHEMA_VERSION.into(),
                command: "trim".into(),
                inputs: Inputs {
                    file: Some(a.file.display().to_string()),
                    n: Some(s.len()),
                    tail_frac: Some(a.tail),
                    left_cut: Some(!a.no_left),
                    grad_tol: Some(cfg.grad_tol),
                    search: Some(search_name(&a.search)),
                    ..Inputs::default()
                },
                results,
                timing: timing(start, a.no_timing),
            })
        }
    };
    write_output(a.output.out.as_deref(), &text)
}

fn cmd_plotdata(a: PlotdataArgs) -> Result<(), CliError> {
    check_bins(a.bins)?;
    if a.output.format == Some(Format::Json) {
        return Err(CliError::Usage("plotdata writes tsv only".into()));
    }
    let cfg = search_config(&a.search)?;
    let s = read_sample(&a.file)?;
    let h = histogram(&s, a.bins).map_err(classify)?;
    let methods = methods(&a.method);
    let mut fitted = Vec::with_capacity(methods.len());
    for &m in &methods {
        fitted.push(fit(&s, m, a.bins, &cfg).map_err(classify)?.params);
    }
    let mut text = String::from("bin_center\tdensity");
    for m in &methods {
        let _ = write!(text, "\tfitted_{m}");
    }
    text.push('\n');
    for (c, d) in h.centers().iter().zip(&h.densities) {
        let _ = write!(text, "{c}\t{d}");
        for p in &fitted {
            let _ = write!(text, "\t{}", exgauss_pdf(*c, p));
        }
        text.push('\n');
    }
    write_output(a.output.out.as_deref(), &text)
}
